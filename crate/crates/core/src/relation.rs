//! Finite binary relations over a labelled universe.
//!
//! A [`Relation`] is a dense Boolean incidence matrix stored as packed bit
//! rows (row = source, column = target). Composition is a bitwise OR of
//! target rows, so closures over small universes are cheap enough to be
//! computed exhaustively by several independent routes.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// Largest universe for which [`Relation::closure_by_intersection`] runs.
pub const INTERSECTION_BOUND: usize = 3;
/// Largest universe for which [`Relation::closure_by_hereditary`] runs.
pub const HEREDITARY_BOUND: usize = 12;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// An ordered set of distinct labels. Element identity is the label; the
/// index of a label is its position in construction order.
#[derive(Clone)]
pub struct Universe(Arc<UniverseInner>);

struct UniverseInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Universe(Arc::new(UniverseInner { labels, index })))
    }

    pub fn empty() -> Self {
        Self::numbered(0)
    }

    /// Universe `x0, x1, …, x{n-1}`.
    pub fn numbered(n: usize) -> Self {
        Self::new((0..n).map(|i| format!("x{i}"))).expect("numbered labels are distinct")
    }

    /// The universe `X × X` in row-major order, used to view relations as
    /// subsets. Labels are the Debug-quoted pair, e.g. `("a","b")`.
    pub fn square(&self) -> Universe {
        let labels = self.labels();
        let pairs = labels
            .iter()
            .flat_map(|x| labels.iter().map(move |y| format!("({x:?},{y:?})")));
        Universe::new(pairs).expect("quoted pairs are distinct")
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.0.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0
            .index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    fn ensure_same(&self, other: &Universe) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for Universe {}

impl Hash for Universe {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.labels.hash(state);
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

/// A subset of a universe, stored as a packed bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: Universe,
    bits: Vec<u64>,
}

impl Subset {
    pub fn empty(universe: &Universe) -> Self {
        Subset {
            universe: universe.clone(),
            bits: vec![0; words_for(universe.len())],
        }
    }

    pub fn full(universe: &Universe) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe.len() {
            s.insert(i);
        }
        s
    }

    pub fn from_labels<'a, I>(universe: &Universe, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut s = Self::empty(universe);
        for label in labels {
            s.insert(universe.index_of(label)?);
        }
        Ok(s)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: &Universe, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Builds a subset from the low `n` bits of `mask`. Requires `n ≤ 64`.
    pub fn from_mask(universe: &Universe, mask: u64) -> Self {
        assert!(universe.len() <= WORD, "mask view needs at most 64 elements");
        let mut s = Self::empty(universe);
        if let Some(w) = s.bits.first_mut() {
            *w = mask & low_mask(universe.len());
        }
        s
    }

    /// Inverse of [`Subset::from_mask`].
    pub fn to_mask(&self) -> u64 {
        assert!(self.universe.len() <= WORD, "mask view needs at most 64 elements");
        self.bits.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// # Panics
    /// If `i` is outside the universe.
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe.len(), "index {i} outside universe");
        self.bits[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.universe.len(), "index {i} outside universe");
        self.bits[i / WORD] &= !(1 << (i % WORD));
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe.len() && self.bits[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn contains_label(&self, label: &str) -> Result<bool> {
        Ok(self.contains(self.universe.index_of(label)?))
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe.len()).filter(move |&i| self.contains(i))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.iter().map(|i| self.universe.label(i)).collect()
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &Subset) -> Result<Subset> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn complement(&self) -> Subset {
        let full = Subset::full(&self.universe);
        let bits = self.bits.iter().zip(&full.bits).map(|(a, f)| !a & f).collect();
        Subset {
            universe: self.universe.clone(),
            bits,
        }
    }

    pub fn is_subset(&self, other: &Subset) -> Result<bool> {
        self.universe.ensure_same(&other.universe)?;
        Ok(self.is_subset_unchecked(other))
    }

    pub(crate) fn is_subset_unchecked(&self, other: &Subset) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn intersect_in_place(&mut self, other: &Subset) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    pub(crate) fn raw_bits(&self) -> &[u64] {
        &self.bits
    }

    fn zip_with(&self, other: &Subset, op: impl Fn(u64, u64) -> u64) -> Result<Subset> {
        self.universe.ensure_same(&other.universe)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(&a, &b)| op(a, b)).collect();
        Ok(Subset {
            universe: self.universe.clone(),
            bits,
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.labels()).finish()
    }
}

fn low_mask(n: usize) -> u64 {
    if n >= WORD {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A binary relation on a [`Universe`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    universe: Universe,
    stride: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(universe: &Universe) -> Self {
        let n = universe.len();
        let stride = words_for(n);
        Relation {
            universe: universe.clone(),
            stride,
            bits: vec![0; n * stride],
        }
    }

    /// The identity relation `{(x, x) | x ∈ X}`.
    pub fn identity(universe: &Universe) -> Self {
        let mut r = Self::empty(universe);
        for i in 0..universe.len() {
            r.insert(i, i);
        }
        r
    }

    pub fn full(universe: &Universe) -> Self {
        let row = Subset::full(universe);
        let mut r = Self::empty(universe);
        for i in 0..universe.len() {
            r.row_mut(i).copy_from_slice(&row.bits);
        }
        r
    }

    pub fn from_pairs<'a, I>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut r = Self::empty(universe);
        for (x, y) in pairs {
            r.insert(universe.index_of(x)?, universe.index_of(y)?);
        }
        Ok(r)
    }

    pub fn from_index_pairs<I: IntoIterator<Item = (usize, usize)>>(universe: &Universe, pairs: I) -> Self {
        let mut r = Self::empty(universe);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    /// Decodes a relation from bit `i * n + j` of `code`. Requires `n² ≤ 64`.
    pub fn from_code(universe: &Universe, code: u64) -> Self {
        let n = universe.len();
        assert!(n * n <= WORD, "code view needs n² ≤ 64");
        let mut r = Self::empty(universe);
        for i in 0..n {
            let row = (code >> (i * n)) & low_mask(n);
            if n > 0 {
                r.bits[i * r.stride] = row;
            }
        }
        r
    }

    /// Inverse of [`Relation::from_code`].
    pub fn to_code(&self) -> u64 {
        let n = self.universe.len();
        assert!(n * n <= WORD, "code view needs n² ≤ 64");
        (0..n).fold(0, |acc, i| acc | (self.bits[i * self.stride] << (i * n)))
    }

    /// Every relation on `universe`, in code order. Bounded by `n² ≤ 16`.
    pub fn enumerate(universe: &Universe) -> Result<Vec<Relation>> {
        let n = universe.len();
        if n * n > 16 {
            return Err(Error::TooLarge {
                what: "relation enumeration",
                size: n,
                bound: 4,
            });
        }
        Ok((0..1u64 << (n * n)).map(|c| Relation::from_code(universe, c)).collect())
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// # Panics
    /// If either index is outside the universe.
    pub fn insert(&mut self, x: usize, y: usize) {
        let n = self.universe.len();
        assert!(x < n && y < n, "pair ({x}, {y}) outside universe of size {n}");
        self.bits[x * self.stride + y / WORD] |= 1 << (y % WORD);
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        let n = self.universe.len();
        x < n && y < n && self.bits[x * self.stride + y / WORD] & (1 << (y % WORD)) != 0
    }

    pub fn contains_pair(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.contains(self.universe.index_of(x)?, self.universe.index_of(y)?))
    }

    /// Number of related pairs.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Related index pairs in (source, target) order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.universe.len();
        (0..n).flat_map(move |x| (0..n).filter(move |&y| self.contains(x, y)).map(move |y| (x, y)))
    }

    pub fn labeled_pairs(&self) -> Vec<(&str, &str)> {
        self.pairs()
            .map(|(x, y)| (self.universe.label(x), self.universe.label(y)))
            .collect()
    }

    /// Successors of `x` as a subset.
    pub fn row(&self, x: usize) -> Subset {
        Subset {
            universe: self.universe.clone(),
            bits: self.row_bits(x).to_vec(),
        }
    }

    fn row_bits(&self, x: usize) -> &[u64] {
        &self.bits[x * self.stride..(x + 1) * self.stride]
    }

    fn row_mut(&mut self, x: usize) -> &mut [u64] {
        &mut self.bits[x * self.stride..(x + 1) * self.stride]
    }

    /// `self ∘ other = {(x, z) | ∃y. x self y ∧ y other z}`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        self.universe.ensure_same(&other.universe)?;
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Relation) -> Relation {
        let n = self.universe.len();
        let mut out = Relation::empty(&self.universe);
        for x in 0..n {
            for y in 0..n {
                if self.contains(x, y) {
                    let src = y * other.stride;
                    let dst = x * out.stride;
                    for w in 0..out.stride {
                        out.bits[dst + w] |= other.bits[src + w];
                    }
                }
            }
        }
        out
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn is_subset(&self, other: &Relation) -> Result<bool> {
        self.universe.ensure_same(&other.universe)?;
        Ok(self.is_subset_unchecked(other))
    }

    fn is_subset_unchecked(&self, other: &Relation) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    fn zip_with(&self, other: &Relation, op: impl Fn(u64, u64) -> u64) -> Result<Relation> {
        self.universe.ensure_same(&other.universe)?;
        Ok(self.zip_unchecked(other, op))
    }

    fn zip_unchecked(&self, other: &Relation, op: impl Fn(u64, u64) -> u64) -> Relation {
        Relation {
            universe: self.universe.clone(),
            stride: self.stride,
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| op(a, b)).collect(),
        }
    }

    /// `R[A] = {b | ∃a ∈ A. a R b}`.
    pub fn image(&self, a: &Subset) -> Result<Subset> {
        self.universe.ensure_same(&a.universe)?;
        let mut out = Subset::empty(&self.universe);
        for x in a.iter() {
            for (o, r) in out.bits.iter_mut().zip(self.row_bits(x)) {
                *o |= r;
            }
        }
        Ok(out)
    }

    /// `R ∘ R ⊆ R`.
    pub fn is_transitive(&self) -> bool {
        self.compose_unchecked(self).is_subset_unchecked(self)
    }

    /// `R ⊆ R ∘ R`: every related pair has a midpoint.
    pub fn is_dense(&self) -> bool {
        self.is_subset_unchecked(&self.compose_unchecked(self))
    }

    /// `R⁰ = 1`, `Rᵏ⁺¹ = R ∘ Rᵏ`.
    pub fn power(&self, k: usize) -> Relation {
        (0..k).fold(Relation::identity(&self.universe), |acc, _| self.compose_unchecked(&acc))
    }

    /// `⋃_{0 ≤ i ≤ n} Rⁱ` with `n = |X|`.
    ///
    /// Stops early once a power adds nothing new: if `Rⁱ` lies inside the
    /// accumulated union then so does every later power.
    pub fn closure_by_powers(&self) -> Relation {
        let mut acc = Relation::identity(&self.universe);
        let mut power = acc.clone();
        for _ in 0..self.universe.len() {
            power = self.compose_unchecked(&power);
            if power.is_subset_unchecked(&acc) {
                break;
            }
            acc = acc.zip_unchecked(&power, |a, b| a | b);
        }
        acc
    }

    /// Intersection of every `S` with `1 ∪ R ∪ S∘S ⊆ S`, by enumerating all
    /// `2^(n²)` candidates. Only for `n ≤ 3`.
    pub fn closure_by_intersection(&self) -> Result<Relation> {
        self.closure_by_intersection_with(Exec::default())
    }

    pub fn closure_by_intersection_with(&self, exec: Exec) -> Result<Relation> {
        let n = self.universe.len();
        if n > INTERSECTION_BOUND {
            return Err(Error::TooLarge {
                what: "closure by intersection",
                size: n,
                bound: INTERSECTION_BOUND,
            });
        }
        let base = self.union(&Relation::identity(&self.universe))?;
        let all = low_mask(n * n);
        let code = par::fold_range(
            exec,
            0..1u64 << (n * n),
            || all,
            |acc, code| {
                let s = Relation::from_code(&self.universe, code);
                let closed = base.is_subset_unchecked(&s) && s.compose_unchecked(&s).is_subset_unchecked(&s);
                if closed {
                    acc & code
                } else {
                    acc
                }
            },
            |a, b| a & b,
        );
        Ok(Relation::from_code(&self.universe, code))
    }

    /// `(x, y)` is related iff every hereditary subset (`R[A] ⊆ A`)
    /// containing `x` also contains `y`. Enumerates all `2^n` subsets; only
    /// for `n ≤ 12`.
    pub fn closure_by_hereditary(&self) -> Result<Relation> {
        self.closure_by_hereditary_with(Exec::default())
    }

    pub fn closure_by_hereditary_with(&self, exec: Exec) -> Result<Relation> {
        let n = self.universe.len();
        if n > HEREDITARY_BOUND {
            return Err(Error::TooLarge {
                what: "closure by hereditary subsets",
                size: n,
                bound: HEREDITARY_BOUND,
            });
        }
        let hereditary = par::filter_range(exec, 0..1u64 << n, |mask| {
            let a = Subset::from_mask(&self.universe, mask);
            self.image(&a).expect("same universe").is_subset_unchecked(&a)
        });
        let rows = par::map_range(exec, 0..n as u64, |x| {
            hereditary
                .iter()
                .filter(|&&mask| mask & (1 << x) != 0)
                .fold(low_mask(n), |acc, &mask| acc & mask)
        });
        let mut out = Relation::empty(&self.universe);
        for (x, row) in rows.into_iter().enumerate() {
            out.bits[x * out.stride] = row;
        }
        Ok(out)
    }

    /// `self ⊆ s`, `1 ⊆ s` and `s ∘ s ⊆ s`.
    pub fn is_rt_closed_superset(&self, s: &Relation) -> Result<bool> {
        Ok(self.is_subset(s)? && Relation::identity(&self.universe).is_subset_unchecked(s) && s.is_transitive())
    }

    /// `{y | x R* y}`.
    pub fn descendants(&self, x: &str) -> Result<Subset> {
        let i = self.universe.index_of(x)?;
        Ok(self.closure_by_powers().row(i))
    }

    /// The relation as a subset of `X × X`; `square` must be
    /// `self.universe().square()`.
    pub fn to_square_subset(&self, square: &Universe) -> Subset {
        let n = self.universe.len();
        assert_eq!(square.len(), n * n, "square universe has the wrong size");
        Subset::from_indices(square, self.pairs().map(|(x, y)| x * n + y))
    }

    pub fn from_square_subset(universe: &Universe, s: &Subset) -> Result<Relation> {
        let n = universe.len();
        if s.universe().len() != n * n {
            return Err(Error::UniverseMismatch);
        }
        Ok(Relation::from_index_pairs(universe, s.iter().map(|p| (p / n, p % n))))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (x, y)) in self.labeled_pairs().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({x},{y})")?;
        }
        f.write_str("}")
    }
}

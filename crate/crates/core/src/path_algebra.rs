//! Square matrices over path algebras.
//!
//! A path algebra is an idempotent semiring `(⊕, ⊗, 0, 1)`; algebras that
//! also provide a scalar star (`a* = 1 ⊕ a ⊗ a*`) implement [`StarAlgebra`]
//! and get the generic Floyd–Warshall closure. [`Boolean`] matrices are
//! relations, [`Tropical`] matrices are weighted digraphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::quantale::{LawReport, LawResult};
use crate::relation::{Relation, Universe};

pub trait PathAlgebra: Copy + Send + Sync {
    type Elem: Copy + Eq + fmt::Debug + Send + Sync;

    /// `⊕`-identity and `⊗`-annihilator.
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Idempotent, commutative, associative.
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
}

pub trait StarAlgebra: PathAlgebra {
    fn scalar_star(&self, a: Self::Elem) -> Self::Elem;
}

/// `({false, true}, ∨, ∧)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Boolean;

impl PathAlgebra for Boolean {
    type Elem = bool;

    fn zero(&self) -> bool {
        false
    }

    fn one(&self) -> bool {
        true
    }

    fn add(&self, a: bool, b: bool) -> bool {
        a || b
    }

    fn mul(&self, a: bool, b: bool) -> bool {
        a && b
    }
}

impl StarAlgebra for Boolean {
    fn scalar_star(&self, _: bool) -> bool {
        true
    }
}

/// Nonnegative integer distance or infinity. Ordered with `Infinite` last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("INF"),
        }
    }
}

/// `(ℕ ∪ {∞}, min, +)`. Addition saturates, so `∞` never overflows.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tropical;

impl PathAlgebra for Tropical {
    type Elem = Dist;

    fn zero(&self) -> Dist {
        Dist::Infinite
    }

    fn one(&self) -> Dist {
        Dist::Finite(0)
    }

    fn add(&self, a: Dist, b: Dist) -> Dist {
        a.min(b)
    }

    fn mul(&self, a: Dist, b: Dist) -> Dist {
        match (a, b) {
            (Dist::Finite(x), Dist::Finite(y)) => x.checked_add(y).map_or(Dist::Infinite, Dist::Finite),
            _ => Dist::Infinite,
        }
    }
}

impl StarAlgebra for Tropical {
    /// With nonnegative weights, going around a loop never helps.
    fn scalar_star(&self, _: Dist) -> Dist {
        self.one()
    }
}

type Law<A> = (
    &'static str,
    fn(&A, <A as PathAlgebra>::Elem, <A as PathAlgebra>::Elem, <A as PathAlgebra>::Elem) -> bool,
);

/// Checks the semiring and scalar-star laws on every triple drawn from
/// `elements`.
pub fn check_laws<A: StarAlgebra>(algebra: A, elements: &[A::Elem]) -> LawReport {
    let laws: Vec<Law<A>> = vec![
        ("add associative", |s, a, b, c| s.add(s.add(a, b), c) == s.add(a, s.add(b, c))),
        ("add commutative", |s, a, b, _| s.add(a, b) == s.add(b, a)),
        ("add idempotent", |s, a, _, _| s.add(a, a) == a),
        ("zero is additive identity", |s, a, _, _| s.add(s.zero(), a) == a),
        ("zero annihilates", |s, a, _, _| {
            s.mul(a, s.zero()) == s.zero() && s.mul(s.zero(), a) == s.zero()
        }),
        ("mul associative", |s, a, b, c| s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c))),
        ("one is multiplicative unit", |s, a, _, _| s.mul(s.one(), a) == a && s.mul(a, s.one()) == a),
        ("left distributive", |s, a, b, c| s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c))),
        ("right distributive", |s, a, b, c| s.mul(s.add(a, b), c) == s.add(s.mul(a, c), s.mul(b, c))),
        ("scalar star unfolds", |s, a, _, _| {
            let star = s.scalar_star(a);
            star == s.add(s.one(), s.mul(a, star))
        }),
    ];
    let m = elements.len() as u64;
    let cases = m.pow(3);
    let results = laws
        .into_iter()
        .map(|(law, holds)| {
            let witness = par::find_first(Exec::default(), 0..cases, |t| {
                let (a, b, c) = (
                    elements[(t / (m * m)) as usize],
                    elements[(t / m % m) as usize],
                    elements[(t % m) as usize],
                );
                (!holds(&algebra, a, b, c)).then(|| format!("a = {a:?}, b = {b:?}, c = {c:?}"))
            });
            LawResult { law, witness }
        })
        .collect();
    LawReport {
        exhaustive: true,
        cases: cases as usize,
        results,
    }
}

/// An `n × n` matrix over a path algebra, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SemiringMatrix<A: PathAlgebra> {
    algebra: A,
    order: usize,
    entries: Vec<A::Elem>,
}

impl<A: PathAlgebra> SemiringMatrix<A> {
    pub fn zeros(algebra: A, order: usize) -> Self {
        SemiringMatrix {
            algebra,
            order,
            entries: vec![algebra.zero(); order * order],
        }
    }

    /// `one` on the diagonal, `zero` elsewhere.
    pub fn identity(algebra: A, order: usize) -> Self {
        let mut m = Self::zeros(algebra, order);
        for i in 0..order {
            m.set(i, i, algebra.one());
        }
        m
    }

    pub fn from_fn(algebra: A, order: usize, f: impl Fn(usize, usize) -> A::Elem) -> Self {
        let entries = (0..order * order).map(|k| f(k / order, k % order)).collect();
        SemiringMatrix { algebra, order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> A::Elem {
        self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: A::Elem) {
        self.entries[i * self.order + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[A::Elem]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    fn ensure_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::ShapeMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    /// Pointwise `⊕`.
    pub fn mat_add(&self, other: &Self) -> Result<Self> {
        self.ensure_order(other)?;
        let a = self.algebra;
        Ok(SemiringMatrix {
            algebra: a,
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(&x, &y)| a.add(x, y)).collect(),
        })
    }

    /// `(X ⊗ Y)ᵢⱼ = ⊕ₖ Xᵢₖ ⊗ Yₖⱼ`.
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        self.mat_mul_with(other, Exec::default())
    }

    /// [`mat_mul`](Self::mat_mul) with rows computed under `exec`.
    pub fn mat_mul_with(&self, other: &Self, exec: Exec) -> Result<Self> {
        self.ensure_order(other)?;
        let (a, n) = (self.algebra, self.order);
        let rows = par::map_range(exec, 0..n as u64, |i| {
            let i = i as usize;
            let mut row = vec![a.zero(); n];
            for k in 0..n {
                let x = self.get(i, k);
                if x == a.zero() {
                    continue;
                }
                for (j, out) in row.iter_mut().enumerate() {
                    *out = a.add(*out, a.mul(x, other.get(k, j)));
                }
            }
            row
        });
        Ok(SemiringMatrix {
            algebra: a,
            order: n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// `⊕_{0 ≤ i ≤ n} Mⁱ`.
    pub fn closure_naive(&self) -> Self {
        self.closure_naive_with(Exec::default())
    }

    pub fn closure_naive_with(&self, exec: Exec) -> Self {
        let identity = Self::identity(self.algebra, self.order);
        let mut acc = identity.clone();
        let mut power = identity;
        for _ in 0..self.order {
            power = power.mat_mul_with(self, exec).expect("same order");
            acc = acc.mat_add(&power).expect("same order");
        }
        acc
    }
}

impl<A: StarAlgebra> SemiringMatrix<A> {
    /// Generic pivot closure on `M ⊕ I`:
    /// `Mᵢⱼ ← Mᵢⱼ ⊕ Mᵢₖ ⊗ (Mₖₖ)* ⊗ Mₖⱼ` for each pivot `k`.
    pub fn floyd_warshall(&self) -> Self {
        let a = self.algebra;
        let n = self.order;
        let mut m = self.mat_add(&Self::identity(a, n)).expect("same order");
        for k in 0..n {
            let loop_star = a.scalar_star(m.get(k, k));
            for i in 0..n {
                let left = a.mul(m.get(i, k), loop_star);
                if left == a.zero() {
                    continue;
                }
                for j in 0..n {
                    let through = a.mul(left, m.get(k, j));
                    m.set(i, j, a.add(m.get(i, j), through));
                }
            }
        }
        m
    }
}

impl SemiringMatrix<Boolean> {
    pub fn from_relation(r: &Relation) -> Self {
        Self::from_fn(Boolean, r.universe().len(), |i, j| r.contains(i, j))
    }

    pub fn to_relation(&self, universe: &Universe) -> Result<Relation> {
        if universe.len() != self.order {
            return Err(Error::ShapeMismatch {
                left: self.order,
                right: universe.len(),
            });
        }
        let pairs = (0..self.order).flat_map(|i| (0..self.order).map(move |j| (i, j)));
        Ok(Relation::from_index_pairs(universe, pairs.filter(|&(i, j)| self.get(i, j))))
    }

    /// Warshall's triple loop on `M ∨ I`: for each pivot `k`, row `i` gains
    /// row `k` whenever `Mᵢₖ` holds.
    pub fn warshall(&self) -> Self {
        let n = self.order;
        let mut m = self.mat_add(&Self::identity(Boolean, n)).expect("same order");
        for k in 0..n {
            for i in 0..n {
                if m.get(i, k) {
                    for j in 0..n {
                        if m.get(k, j) {
                            m.set(i, j, true);
                        }
                    }
                }
            }
        }
        m
    }
}

/// Directed graph with nonnegative integer edge weights. Parallel edges and
/// self-loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedDigraph {
    order: usize,
    edges: Vec<(usize, usize, u64)>,
}

/// Largest graph [`shortest_path_oracle`] accepts.
pub const ORACLE_BOUND: usize = 7;

impl WeightedDigraph {
    pub fn new(order: usize) -> Self {
        WeightedDigraph { order, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, weight: u64) {
        assert!(from < self.order && to < self.order, "edge endpoint outside graph");
        self.edges.push((from, to, weight));
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges(&self) -> &[(usize, usize, u64)] {
        &self.edges
    }

    /// Direct-edge matrix; parallel edges keep their minimum weight.
    pub fn to_matrix(&self) -> SemiringMatrix<Tropical> {
        let mut m = SemiringMatrix::zeros(Tropical, self.order);
        for &(i, j, w) in &self.edges {
            m.set(i, j, Tropical.add(m.get(i, j), Dist::Finite(w)));
        }
        m
    }
}

/// All-pairs shortest distances by enumerating every simple path.
/// Independent of the matrix code; only for graphs of at most
/// [`ORACLE_BOUND`] vertices.
pub fn shortest_path_oracle(g: &WeightedDigraph) -> Result<SemiringMatrix<Tropical>> {
    let n = g.order;
    if n > ORACLE_BOUND {
        return Err(Error::TooLarge {
            what: "shortest path oracle",
            size: n,
            bound: ORACLE_BOUND,
        });
    }
    let mut out = SemiringMatrix::zeros(Tropical, n);
    for source in 0..n {
        let mut best = vec![None::<u64>; n];
        let mut visited = vec![false; n];
        visited[source] = true;
        walk(g, source, 0, &mut visited, &mut best);
        for (target, d) in best.into_iter().enumerate() {
            out.set(source, target, d.map_or(Dist::Infinite, Dist::Finite));
        }
    }
    Ok(out)
}

fn walk(g: &WeightedDigraph, at: usize, dist: u64, visited: &mut [bool], best: &mut [Option<u64>]) {
    if best[at].is_none_or(|b| dist < b) {
        best[at] = Some(dist);
    }
    for &(from, to, w) in &g.edges {
        if from == at && !visited[to] {
            visited[to] = true;
            walk(g, to, dist + w, visited, best);
            visited[to] = false;
        }
    }
}

impl<A: PathAlgebra> fmt::Debug for SemiringMatrix<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

//! Closure operators and Moore families on finite powersets, and least
//! fixed points of monotone maps.
//!
//! Exhaustive law checks enumerate subsets as bit masks and are limited to
//! universes of at most [`EXHAUSTIVE_BOUND`] points. Relations are handled
//! as subsets of the square universe `X × X` (see [`Universe::square`]), so
//! relation-valued operators are exhaustive only for `|X| ≤ 3`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::relation::{Relation, Subset, Universe};

pub const EXHAUSTIVE_BOUND: usize = 10;

fn ensure_bound(what: &'static str, u: &Universe) -> Result<()> {
    if u.len() > EXHAUSTIVE_BOUND {
        Err(Error::TooLarge {
            what,
            size: u.len(),
            bound: EXHAUSTIVE_BOUND,
        })
    } else {
        Ok(())
    }
}

/// A family of subsets of one universe, kept sorted and deduplicated so
/// that equal families compare equal. Closure under intersection is what
/// [`is_moore_family`] checks; construction does not enforce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreFamily {
    universe: Universe,
    members: Vec<Subset>,
}

impl MooreFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(universe: &Universe, members: I) -> Result<Self> {
        let mut members: Vec<Subset> = members.into_iter().collect();
        if members.iter().any(|m| m.universe() != universe) {
            return Err(Error::UniverseMismatch);
        }
        members.sort_by(|a, b| a.raw_bits().cmp(b.raw_bits()));
        members.dedup();
        Ok(MooreFamily {
            universe: universe.clone(),
            members,
        })
    }

    /// Every subset of `universe`.
    pub fn powerset(universe: &Universe) -> Result<Self> {
        ensure_bound("powerset", universe)?;
        Self::new(
            universe,
            (0..1u64 << universe.len()).map(|m| Subset::from_mask(universe, m)),
        )
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &Subset) -> bool {
        self.members.binary_search_by(|m| m.raw_bits().cmp(s.raw_bits())).is_ok()
    }
}

/// Contains the full set (the empty intersection) and is closed under
/// pairwise intersection, which for finite families is closure under
/// every intersection.
pub fn is_moore_family(f: &MooreFamily) -> bool {
    if !f.contains(&Subset::full(&f.universe)) {
        return false;
    }
    let members: HashSet<&Subset> = f.members.iter().collect();
    f.members.iter().enumerate().all(|(i, a)| {
        f.members[i + 1..]
            .iter()
            .all(|b| members.contains(&a.intersect(b).expect("same universe")))
    })
}

/// The least member of `f` containing `a`.
pub fn closure_from_family(f: &MooreFamily, a: &Subset) -> Result<Subset> {
    if a.universe() != &f.universe {
        return Err(Error::UniverseMismatch);
    }
    if !is_moore_family(f) {
        return Err(Error::NotMooreFamily);
    }
    Ok(least_member_above(f, a))
}

fn least_member_above(f: &MooreFamily, a: &Subset) -> Subset {
    let mut out = Subset::full(&f.universe);
    for m in f.members.iter().filter(|m| a.is_subset_unchecked(m)) {
        out.intersect_in_place(m);
    }
    out
}

/// A subset operator tabulated on every subset of a small universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureTable {
    universe: Universe,
    table: Vec<u64>,
}

impl ClosureTable {
    pub fn from_fn<F>(universe: &Universe, f: F) -> Result<Self>
    where
        F: Fn(&Subset) -> Subset + Sync + Send,
    {
        ensure_bound("closure table", universe)?;
        let table = par::map_range(Exec::default(), 0..1u64 << universe.len(), |m| {
            f(&Subset::from_mask(universe, m)).to_mask()
        });
        Ok(ClosureTable {
            universe: universe.clone(),
            table,
        })
    }

    pub fn identity(universe: &Universe) -> Result<Self> {
        Self::from_fn(universe, Subset::clone)
    }

    pub fn constant_full(universe: &Universe) -> Result<Self> {
        Self::from_fn(universe, |_| Subset::full(universe))
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn apply(&self, a: &Subset) -> Subset {
        Subset::from_mask(&self.universe, self.table[a.to_mask() as usize])
    }

    fn at(&self, mask: u64) -> u64 {
        self.table[mask as usize]
    }
}

/// Inflationary (`A ⊆ c(A)`), idempotent (`c(c(A)) = c(A)`) and monotone
/// (`A ⊆ B ⇒ c(A) ⊆ c(B)`), checked on every subset and every nested pair.
pub fn is_closure_operator(c: &ClosureTable) -> bool {
    let n = c.universe.len();
    let pointwise = (0..1u64 << n).all(|a| {
        let ca = c.at(a);
        a & !ca == 0 && c.at(ca) == ca
    });
    pointwise && monotone_masks(n, |m| c.at(m))
}

/// Checks `a ⊆ b ⇒ f(a) ⊆ f(b)` for every `b` and every submask `a`.
fn monotone_masks(n: usize, f: impl Fn(u64) -> u64 + Sync + Send) -> bool {
    par::find_first(Exec::default(), 0..1u64 << n, |b| {
        let fb = f(b);
        let mut a = b;
        loop {
            if f(a) & !fb != 0 {
                return Some(());
            }
            if a == 0 {
                return None;
            }
            a = (a - 1) & b;
        }
    })
    .is_none()
}

/// The fixed points of `c`.
pub fn family_from_closure(c: &ClosureTable) -> MooreFamily {
    let u = &c.universe;
    let fixed = (0..1u64 << u.len()).filter(|&m| c.at(m) == m);
    MooreFamily::new(u, fixed.map(|m| Subset::from_mask(u, m))).expect("same universe")
}

/// Tabulates `A ↦` least member of `f` above `A`.
pub fn closure_from_family_as_table(f: &MooreFamily) -> Result<ClosureTable> {
    ensure_bound("closure table", &f.universe)?;
    if !is_moore_family(f) {
        return Err(Error::NotMooreFamily);
    }
    ClosureTable::from_fn(&f.universe, |a| least_member_above(f, a))
}

/// All transitive relations on `universe`, as subsets of its square.
pub fn transitive_family(universe: &Universe) -> Result<MooreFamily> {
    if universe.len() > 3 {
        return Err(Error::TooLarge {
            what: "transitive family",
            size: universe.len(),
            bound: 3,
        });
    }
    let square = universe.square();
    let members = Relation::enumerate(universe)?
        .into_iter()
        .filter(Relation::is_transitive)
        .map(|r| r.to_square_subset(&square));
    MooreFamily::new(&square, members)
}

/// Least fixed point of a monotone `f` by ascending iteration from `∅`.
///
/// Each step must contain the previous one; a step that does not is
/// reported as [`Error::NotMonotone`]. A strictly ascending chain in a
/// lattice of height `n` has at most `n + 1` elements, so the loop always
/// terminates.
pub fn least_fixed_point<F>(f: F, universe: &Universe) -> Result<Subset>
where
    F: Fn(&Subset) -> Subset,
{
    let mut current = Subset::empty(universe);
    for step in 1.. {
        let next = f(&current);
        if next.universe() != universe {
            return Err(Error::UniverseMismatch);
        }
        if !current.is_subset_unchecked(&next) {
            return Err(Error::NotMonotone { step });
        }
        if next == current {
            return Ok(current);
        }
        current = next;
    }
    unreachable!("ascending chains in a finite lattice stabilise")
}

/// Intersection of every pre-fixed point `{A | f(A) ⊆ A}`, by enumeration.
pub fn meet_of_prefixed_points<F>(f: F, universe: &Universe) -> Result<Subset>
where
    F: Fn(&Subset) -> Subset + Sync + Send,
{
    ensure_bound("pre-fixed point enumeration", universe)?;
    let n = universe.len();
    let full = Subset::full(universe).to_mask();
    let meet = par::fold_range(
        Exec::default(),
        0..1u64 << n,
        || full,
        |acc, m| {
            let a = Subset::from_mask(universe, m);
            if f(&a).is_subset_unchecked(&a) {
                acc & m
            } else {
                acc
            }
        },
        |a, b| a & b,
    );
    Ok(Subset::from_mask(universe, meet))
}

/// Exhaustive monotonicity check over all nested pairs of subsets.
pub fn is_monotone<F>(f: F, universe: &Universe) -> Result<bool>
where
    F: Fn(&Subset) -> Subset + Sync + Send,
{
    ensure_bound("monotonicity check", universe)?;
    Ok(monotone_masks(universe.len(), |m| f(&Subset::from_mask(universe, m)).to_mask()))
}

/// `S ↦ 1 ∪ (R ∘ S)`, whose least fixed point is the reflexive-transitive
/// closure of `r`.
pub fn star_step(r: &Relation) -> impl Fn(&Relation) -> Relation + Sync + Send + '_ {
    let one = Relation::identity(r.universe());
    move |s| one.union(&r.compose(s).expect("same universe")).expect("same universe")
}

/// Lifts a relation-valued map on `universe` to a subset map on its square.
pub fn on_square<G>(universe: &Universe, g: G) -> impl Fn(&Subset) -> Subset + Sync + Send
where
    G: Fn(&Relation) -> Relation + Sync + Send,
{
    let u = universe.clone();
    let square = universe.square();
    move |s| {
        let r = Relation::from_square_subset(&u, s).expect("subset of the square universe");
        g(&r).to_square_subset(&square)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Universe {
        Universe::new(["a", "b"]).unwrap()
    }

    fn set(u: &Universe, labels: &[&str]) -> Subset {
        Subset::from_labels(u, labels.iter().copied()).unwrap()
    }

    #[test]
    fn closure_operator_examples() {
        let u = Universe::numbered(4);
        assert!(is_closure_operator(&ClosureTable::identity(&u).unwrap()));
        assert!(is_closure_operator(&ClosureTable::constant_full(&u).unwrap()));
        let drop_first = ClosureTable::from_fn(&u, |a| {
            let mut a = a.clone();
            a.remove(0);
            a
        })
        .unwrap();
        assert!(!is_closure_operator(&drop_first));
        assert!(matches!(
            ClosureTable::identity(&Universe::numbered(11)),
            Err(Error::TooLarge { bound: 10, .. })
        ));
    }

    #[test]
    fn moore_family_examples() {
        let u = ab();
        let chain = MooreFamily::new(&u, [set(&u, &[]), set(&u, &["a"]), set(&u, &["a", "b"])]).unwrap();
        assert!(is_moore_family(&chain));
        let singletons = MooreFamily::new(&u, [set(&u, &["a"]), set(&u, &["b"])]).unwrap();
        assert!(!is_moore_family(&singletons));
        assert!(is_moore_family(&MooreFamily::powerset(&u).unwrap()));
        assert!(!is_moore_family(&MooreFamily::new(&u, []).unwrap()));
    }

    #[test]
    fn closure_from_family_examples() {
        let u = ab();
        let chain = MooreFamily::new(&u, [set(&u, &[]), set(&u, &["a"]), set(&u, &["a", "b"])]).unwrap();
        assert_eq!(closure_from_family(&chain, &set(&u, &["b"])).unwrap(), set(&u, &["a", "b"]));
        assert_eq!(closure_from_family(&chain, &set(&u, &["a"])).unwrap(), set(&u, &["a"]));
        assert_eq!(closure_from_family(&chain, &set(&u, &[])).unwrap(), set(&u, &[]));
        let bad = MooreFamily::new(&u, [set(&u, &["a"])]).unwrap();
        assert_eq!(closure_from_family(&bad, &set(&u, &[])), Err(Error::NotMooreFamily));
    }

    #[test]
    fn rt_family_gives_closure_of_worked_example() {
        let x = Universe::new(["a", "b", "c"]).unwrap();
        let sq = x.square();
        let empty = Relation::empty(&x);
        let members = Relation::enumerate(&x)
            .unwrap()
            .into_iter()
            .filter(|s| empty.is_rt_closed_superset(s).unwrap())
            .map(|s| s.to_square_subset(&sq));
        let family = MooreFamily::new(&sq, members).unwrap();
        assert!(is_moore_family(&family));
        let r = Relation::from_pairs(&x, [("a", "b"), ("b", "c")]).unwrap();
        let c = closure_from_family(&family, &r.to_square_subset(&sq)).unwrap();
        assert_eq!(Relation::from_square_subset(&x, &c).unwrap(), r.closure_by_powers());
    }

    #[test]
    fn family_and_table_conversions() {
        let u = Universe::numbered(3);
        assert_eq!(
            family_from_closure(&ClosureTable::identity(&u).unwrap()),
            MooreFamily::powerset(&u).unwrap()
        );
        let top = family_from_closure(&ClosureTable::constant_full(&u).unwrap());
        assert_eq!(top.members(), &[Subset::full(&u)]);

        let x = ab();
        let sq = x.square();
        let rt = ClosureTable::from_fn(&sq, on_square(&x, Relation::closure_by_powers)).unwrap();
        assert!(is_closure_operator(&rt));
        let fixed = family_from_closure(&rt);
        let expected: Vec<Subset> = Relation::enumerate(&x)
            .unwrap()
            .into_iter()
            .filter(|s| Relation::empty(&x).is_rt_closed_superset(s).unwrap())
            .map(|s| s.to_square_subset(&sq))
            .collect();
        assert_eq!(fixed, MooreFamily::new(&sq, expected).unwrap());
        assert_eq!(closure_from_family_as_table(&fixed).unwrap(), rt);
    }

    #[test]
    fn transitive_family_counts() {
        let one = transitive_family(&Universe::numbered(1)).unwrap();
        assert_eq!(one.len(), 2);
        let two = transitive_family(&Universe::numbered(2)).unwrap();
        assert_eq!(two.len(), 13);
        assert!(is_moore_family(&two));
        let members = two.members();
        for a in members {
            for b in members {
                assert!(two.contains(&a.intersect(b).unwrap()));
            }
        }
        assert!(transitive_family(&Universe::numbered(4)).is_err());
    }

    #[test]
    fn least_fixed_point_examples() {
        let u = Universe::numbered(4);
        assert_eq!(least_fixed_point(Subset::clone, &u).unwrap(), Subset::empty(&u));
        let add_first = |a: &Subset| {
            let mut a = a.clone();
            a.insert(0);
            a
        };
        assert_eq!(least_fixed_point(add_first, &u).unwrap(), Subset::from_indices(&u, [0]));

        let x = Universe::new(["a", "b", "c"]).unwrap();
        let r = Relation::from_pairs(&x, [("a", "b"), ("b", "c")]).unwrap();
        let lfp = least_fixed_point(on_square(&x, star_step(&r)), &x.square()).unwrap();
        assert_eq!(Relation::from_square_subset(&x, &lfp).unwrap(), r.closure_by_powers());
    }

    #[test]
    fn least_fixed_point_detects_non_monotone_maps() {
        let u = Universe::numbered(2);
        assert_eq!(
            least_fixed_point(Subset::complement, &u),
            Err(Error::NotMonotone { step: 2 })
        );
    }

    #[test]
    fn monotonicity_examples() {
        let u = Universe::numbered(4);
        assert!(is_monotone(Subset::clone, &u).unwrap());
        assert!(!is_monotone(Subset::complement, &u).unwrap());
        let r = Relation::from_index_pairs(&u, [(0, 1), (1, 2), (3, 0)]);
        assert!(is_monotone(|a| r.image(a).unwrap(), &u).unwrap());
    }

    #[test]
    fn moore_round_trip_exhaustive_three_points() {
        // All 256 families of subsets of a 3-point universe.
        let u = Universe::numbered(3);
        let mut moore = 0;
        for code in 0u64..256 {
            let f = MooreFamily::new(&u, (0..8).filter(|m| code >> m & 1 == 1).map(|m| Subset::from_mask(&u, m))).unwrap();
            if !is_moore_family(&f) {
                continue;
            }
            moore += 1;
            let c = closure_from_family_as_table(&f).unwrap();
            assert!(is_closure_operator(&c));
            assert_eq!(family_from_closure(&c), f);
        }
        assert_eq!(moore, 61);
    }
}

//! Proof trees for the rule system deriving judgments `x R▽ y`:
//!
//! ```text
//!            (id)        x R y                x R y   y R▽ z
//!   ───────────      ──────────── (in)     ──────────────── (tx)
//!     x R▽ x           x R▽ y                   x R▽ z
//! ```
//!
//! plus the admissible rule `trx`, which composes two derivations
//! `x R▽ y` and `y R▽ z` into `x R▽ z`. [`eliminate_trx`] turns any valid
//! derivation into one without `trx`, [`eliminate_in`] removes `in`.

mod cert;
pub mod sample;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::relation::{Relation, Universe};

pub use cert::parse_certificate;

/// A claim `source R▽ target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Judgment {
    pub source: String,
    pub target: String,
}

impl Judgment {
    pub fn new(source: impl Into<String>, target: impl Into<String>) -> Self {
        Judgment {
            source: source.into(),
            target: target.into(),
        }
    }
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} R* {}", self.source, self.target)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Id,
    In,
    Tx,
    Trx,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Id => "id",
            Rule::In => "in",
            Rule::Tx => "tx",
            Rule::Trx => "trx",
        })
    }
}

/// A derivation tree. Side facts of `In` and `Tx` are stored in the node so
/// checking never has to search.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Derivation {
    /// Concludes `element R▽ element`.
    Id { element: String },
    /// From the fact `source R target`, concludes `source R▽ target`.
    In { source: String, target: String },
    /// From the fact `source R via` and a premise `via R▽ z`, concludes
    /// `source R▽ z`.
    Tx {
        source: String,
        via: String,
        premise: Box<Derivation>,
    },
    /// From `x R▽ y` and `y R▽ z`, concludes `x R▽ z`.
    Trx {
        left: Box<Derivation>,
        right: Box<Derivation>,
    },
}

/// Which optional rules a checker accepts. `id` and `tx` are always allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RuleSet {
    pub allow_in: bool,
    pub allow_trx: bool,
}

impl RuleSet {
    /// `{id, tx}`.
    pub const MINIMAL: RuleSet = RuleSet {
        allow_in: false,
        allow_trx: false,
    };
    /// `{id, in, tx}`.
    pub const BASE: RuleSet = RuleSet {
        allow_in: true,
        allow_trx: false,
    };
    /// `{id, in, tx, trx}`.
    pub const WITH_TRX: RuleSet = RuleSet {
        allow_in: true,
        allow_trx: true,
    };

    fn allows(self, rule: Rule) -> bool {
        match rule {
            Rule::Id | Rule::Tx => true,
            Rule::In => self.allow_in,
            Rule::Trx => self.allow_trx,
        }
    }
}

/// Why a derivation failed to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rejection {
    UnknownLabel(String),
    DisallowedRule(Rule),
    MissingFact { source: String, target: String },
    /// A premise does not conclude the judgment its parent rule needs.
    BrokenLink { rule: Rule, expected: String, found: String },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::UnknownLabel(l) => write!(f, "unknown element `{l}`"),
            Rejection::DisallowedRule(r) => write!(f, "rule ({r}) is not allowed"),
            Rejection::MissingFact { source, target } => {
                write!(f, "side fact {source} R {target} does not hold")
            }
            Rejection::BrokenLink { rule, expected, found } => write!(
                f,
                "({rule}) premise starts at `{found}` but must start at `{expected}`"
            ),
        }
    }
}

impl Derivation {
    pub fn id(element: impl Into<String>) -> Self {
        Derivation::Id {
            element: element.into(),
        }
    }

    pub fn fact(source: impl Into<String>, target: impl Into<String>) -> Self {
        Derivation::In {
            source: source.into(),
            target: target.into(),
        }
    }

    pub fn tx(source: impl Into<String>, via: impl Into<String>, premise: Derivation) -> Self {
        Derivation::Tx {
            source: source.into(),
            via: via.into(),
            premise: Box::new(premise),
        }
    }

    pub fn trx(left: Derivation, right: Derivation) -> Self {
        Derivation::Trx {
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn rule(&self) -> Rule {
        match self {
            Derivation::Id { .. } => Rule::Id,
            Derivation::In { .. } => Rule::In,
            Derivation::Tx { .. } => Rule::Tx,
            Derivation::Trx { .. } => Rule::Trx,
        }
    }

    fn source(&self) -> &str {
        match self {
            Derivation::Id { element } => element,
            Derivation::In { source, .. } | Derivation::Tx { source, .. } => source,
            Derivation::Trx { left, .. } => left.source(),
        }
    }

    fn target(&self) -> &str {
        match self {
            Derivation::Id { element } => element,
            Derivation::In { target, .. } => target,
            Derivation::Tx { premise, .. } => premise.target(),
            Derivation::Trx { right, .. } => right.target(),
        }
    }

    /// The judgment at the root. Well defined even for malformed trees,
    /// where it follows the outermost source and the innermost target.
    pub fn conclusion(&self) -> Judgment {
        Judgment::new(self.source(), self.target())
    }

    pub fn premises(&self) -> Vec<&Derivation> {
        match self {
            Derivation::Id { .. } | Derivation::In { .. } => Vec::new(),
            Derivation::Tx { premise, .. } => vec![premise],
            Derivation::Trx { left, right } => vec![left, right],
        }
    }

    /// Leaves have height 1.
    pub fn height(&self) -> usize {
        1 + self.premises().iter().map(|p| p.height()).max().unwrap_or(0)
    }

    pub fn count(&self, rule: Rule) -> usize {
        let own = usize::from(self.rule() == rule);
        own + self.premises().iter().map(|p| p.count(rule)).sum::<usize>()
    }

    /// Checks every node against its rule schema, every side fact against
    /// `r`, and every rule against `rules`.
    pub fn check(&self, r: &Relation, rules: RuleSet) -> Result<(), Rejection> {
        let u = r.universe();
        if !rules.allows(self.rule()) {
            return Err(Rejection::DisallowedRule(self.rule()));
        }
        match self {
            Derivation::Id { element } => {
                index(u, element)?;
            }
            Derivation::In { source, target } => fact(r, source, target)?,
            Derivation::Tx { source, via, premise } => {
                fact(r, source, via)?;
                link(Rule::Tx, via, premise.source())?;
                premise.check(r, rules)?;
            }
            Derivation::Trx { left, right } => {
                link(Rule::Trx, left.target(), right.source())?;
                left.check(r, rules)?;
                right.check(r, rules)?;
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, r: &Relation, rules: RuleSet) -> bool {
        self.check(r, rules).is_ok()
    }
}

fn index(u: &Universe, label: &str) -> Result<usize, Rejection> {
    u.index_of(label).map_err(|_| Rejection::UnknownLabel(label.to_owned()))
}

fn fact(r: &Relation, source: &str, target: &str) -> Result<(), Rejection> {
    let (x, y) = (index(r.universe(), source)?, index(r.universe(), target)?);
    if r.contains(x, y) {
        Ok(())
    } else {
        Err(Rejection::MissingFact {
            source: source.to_owned(),
            target: target.to_owned(),
        })
    }
}

fn link(rule: Rule, expected: &str, found: &str) -> Result<(), Rejection> {
    if expected == found {
        Ok(())
    } else {
        Err(Rejection::BrokenLink {
            rule,
            expected: expected.to_owned(),
            found: found.to_owned(),
        })
    }
}

/// Proof search. Returns the `id`/`tx` spine along a shortest `R`-path from
/// `x` to `y` (breadth-first, successors visited in universe order), or
/// `None` when `y` is not reachable.
pub fn derive(r: &Relation, x: &str, y: &str) -> Result<Option<Derivation>> {
    let u = r.universe();
    let (from, to) = (u.index_of(x)?, u.index_of(y)?);
    let n = u.len();
    let mut parent = vec![usize::MAX; n];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for w in r.row(v).iter() {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if parent[to] == usize::MAX {
        return Ok(None);
    }
    let mut d = Derivation::id(u.label(to));
    let mut v = to;
    while v != from {
        let p = parent[v];
        d = Derivation::tx(u.label(p), u.label(v), d);
        v = p;
    }
    Ok(Some(d))
}

/// Rewrites `d` into a derivation of the same judgment with no `trx` node.
///
/// Innermost `trx` nodes are removed first, so every rewrite sees two
/// `trx`-free premises and proceeds by cases on the left premise's last
/// rule: `id` yields the right premise, `in` becomes a single `tx`, and
/// `tx` pushes the cut into its premise. The recursion is on the left
/// premise, whose height strictly decreases.
pub fn eliminate_trx(d: &Derivation, r: &Relation) -> Result<Derivation> {
    d.check(r, RuleSet::WITH_TRX).map_err(Error::InvalidDerivation)?;
    Ok(strip_trx(d))
}

fn strip_trx(d: &Derivation) -> Derivation {
    match d {
        Derivation::Trx { left, right } => cut(strip_trx(left), strip_trx(right)),
        Derivation::Tx { source, via, premise } => Derivation::tx(source.clone(), via.clone(), strip_trx(premise)),
        leaf => leaf.clone(),
    }
}

/// Joins `left: x R▽ y` and `right: y R▽ z`, both `trx`-free.
fn cut(left: Derivation, right: Derivation) -> Derivation {
    match left {
        Derivation::Id { .. } => right,
        Derivation::In { source, target } => Derivation::tx(source, target, right),
        Derivation::Tx { source, via, premise } => Derivation::tx(source, via, cut(*premise, right)),
        Derivation::Trx { .. } => unreachable!("premises are trx-free"),
    }
}

/// Rewrites every `in` leaf `x R y` into `tx(x R y, id(y))`.
pub fn eliminate_in(d: &Derivation, r: &Relation) -> Result<Derivation> {
    d.check(r, RuleSet::WITH_TRX).map_err(Error::InvalidDerivation)?;
    Ok(strip_in(d))
}

fn strip_in(d: &Derivation) -> Derivation {
    match d {
        Derivation::In { source, target } => Derivation::tx(source.clone(), target.clone(), Derivation::id(target.clone())),
        Derivation::Tx { source, via, premise } => Derivation::tx(source.clone(), via.clone(), strip_in(premise)),
        Derivation::Trx { left, right } => Derivation::trx(strip_in(left), strip_in(right)),
        Derivation::Id { .. } => d.clone(),
    }
}

/// Every judgment derivable from `r` with the `{id, in, tx}` rules.
pub fn theorems(r: &Relation) -> Relation {
    theorems_with(r, RuleSet::BASE)
}

/// Saturates the judgment set under `rules` until nothing new is derivable.
pub fn theorems_with(r: &Relation, rules: RuleSet) -> Relation {
    let u = r.universe();
    let n = u.len();
    let mut derived = Relation::identity(u);
    if rules.allow_in {
        derived = derived.union(r).expect("same universe");
    }
    loop {
        let mut next = derived.clone();
        for (x, v) in r.pairs() {
            for z in 0..n {
                if derived.contains(v, z) {
                    next.insert(x, z);
                }
            }
        }
        if rules.allow_trx {
            next = next.union(&derived.compose(&derived).expect("same universe")).expect("same universe");
        }
        if next == derived {
            return derived;
        }
        derived = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Universe;

    fn abc() -> Universe {
        Universe::new(["a", "b", "c"]).unwrap()
    }

    fn chain() -> Relation {
        Relation::from_pairs(&abc(), [("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn check_examples() {
        let r = chain();
        assert!(Derivation::id("c").is_valid(&r, RuleSet::MINIMAL));
        let tx = Derivation::tx("a", "b", Derivation::fact("b", "c"));
        assert!(tx.is_valid(&r, RuleSet::BASE));
        assert_eq!(tx.conclusion(), Judgment::new("a", "c"));
        assert_eq!(
            Derivation::fact("a", "c").check(&r, RuleSet::BASE),
            Err(Rejection::MissingFact {
                source: "a".into(),
                target: "c".into()
            })
        );
    }

    #[test]
    fn check_rejects_malformed_trees() {
        let r = chain();
        let broken = Derivation::tx("a", "b", Derivation::id("c"));
        assert!(matches!(broken.check(&r, RuleSet::BASE), Err(Rejection::BrokenLink { rule: Rule::Tx, .. })));
        let broken = Derivation::trx(Derivation::fact("a", "b"), Derivation::id("c"));
        assert!(matches!(broken.check(&r, RuleSet::WITH_TRX), Err(Rejection::BrokenLink { rule: Rule::Trx, .. })));
        assert_eq!(
            Derivation::fact("a", "b").check(&r, RuleSet::MINIMAL),
            Err(Rejection::DisallowedRule(Rule::In))
        );
        let trx = Derivation::trx(Derivation::id("a"), Derivation::id("a"));
        assert_eq!(trx.check(&r, RuleSet::BASE), Err(Rejection::DisallowedRule(Rule::Trx)));
        assert_eq!(
            Derivation::id("q").check(&r, RuleSet::BASE),
            Err(Rejection::UnknownLabel("q".into()))
        );
    }

    #[test]
    fn derive_examples() {
        let r = chain();
        let d = derive(&r, "a", "c").unwrap().unwrap();
        assert_eq!(d, Derivation::tx("a", "b", Derivation::tx("b", "c", Derivation::id("c"))));
        assert!(d.is_valid(&r, RuleSet::MINIMAL));
        assert_eq!(derive(&r, "b", "b").unwrap(), Some(Derivation::id("b")));
        let ab = Relation::from_pairs(&abc(), [("a", "b")]).unwrap();
        assert_eq!(derive(&ab, "b", "a").unwrap(), None);
        assert!(derive(&r, "a", "z").is_err());
    }

    #[test]
    fn derive_prefers_shortest_path_then_label_order() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let r = Relation::from_pairs(&u, [("a", "c"), ("a", "b"), ("b", "d"), ("c", "d"), ("a", "d")]).unwrap();
        assert_eq!(
            derive(&r, "a", "d").unwrap().unwrap(),
            Derivation::tx("a", "d", Derivation::id("d"))
        );
        let r = Relation::from_pairs(&u, [("a", "c"), ("a", "b"), ("b", "d"), ("c", "d")]).unwrap();
        let d = derive(&r, "a", "d").unwrap().unwrap();
        assert_eq!(d, Derivation::tx("a", "b", Derivation::tx("b", "d", Derivation::id("d"))));
    }

    #[test]
    fn heights() {
        let id = Derivation::id("c");
        assert_eq!(id.height(), 1);
        let one = Derivation::tx("b", "c", id);
        assert_eq!(one.height(), 2);
        let two = Derivation::tx("a", "b", one.clone());
        assert_eq!(two.height(), 3);
        assert!(one.height() < two.height());
    }

    #[test]
    fn eliminate_trx_examples() {
        let r = chain();
        let d = Derivation::trx(Derivation::fact("a", "b"), Derivation::fact("b", "c"));
        assert_eq!(
            eliminate_trx(&d, &r).unwrap(),
            Derivation::tx("a", "b", Derivation::fact("b", "c"))
        );

        let right = Derivation::tx("a", "b", Derivation::id("b"));
        let d = Derivation::trx(Derivation::id("a"), right.clone());
        assert_eq!(eliminate_trx(&d, &r).unwrap(), right);

        let d = Derivation::trx(
            Derivation::tx("a", "b", Derivation::id("b")),
            Derivation::fact("b", "c"),
        );
        assert_eq!(
            eliminate_trx(&d, &r).unwrap(),
            Derivation::tx("a", "b", Derivation::fact("b", "c"))
        );
    }

    #[test]
    fn eliminate_trx_handles_nested_cuts() {
        let u = Universe::new(["a", "b", "c", "d"]).unwrap();
        let r = Relation::from_pairs(&u, [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let d = Derivation::trx(
            Derivation::trx(Derivation::fact("a", "b"), Derivation::fact("b", "c")),
            Derivation::trx(Derivation::id("c"), Derivation::fact("c", "d")),
        );
        let e = eliminate_trx(&d, &r).unwrap();
        assert_eq!(e.count(Rule::Trx), 0);
        assert_eq!(e.conclusion(), Judgment::new("a", "d"));
        assert!(e.is_valid(&r, RuleSet::BASE));
    }

    #[test]
    fn eliminate_trx_rejects_invalid_input() {
        let r = chain();
        let d = Derivation::trx(Derivation::fact("a", "c"), Derivation::id("c"));
        assert!(matches!(eliminate_trx(&d, &r), Err(Error::InvalidDerivation(_))));
    }

    #[test]
    fn eliminate_in_examples() {
        let r = chain();
        assert_eq!(
            eliminate_in(&Derivation::fact("a", "b"), &r).unwrap(),
            Derivation::tx("a", "b", Derivation::id("b"))
        );
        assert_eq!(eliminate_in(&Derivation::id("a"), &r).unwrap(), Derivation::id("a"));
        assert_eq!(
            eliminate_in(&Derivation::tx("a", "b", Derivation::fact("b", "c")), &r).unwrap(),
            Derivation::tx("a", "b", Derivation::tx("b", "c", Derivation::id("c")))
        );
    }

    #[test]
    fn theorems_examples() {
        let u = abc();
        assert_eq!(theorems(&chain()), chain().closure_by_powers());
        assert_eq!(theorems(&Relation::empty(&u)), Relation::identity(&u));
        assert_eq!(theorems(&Relation::full(&u)), Relation::full(&u));
    }

    #[test]
    fn rule_sets_derive_the_same_theorems() {
        for n in 0..=3 {
            let u = Universe::numbered(n);
            for r in Relation::enumerate(&u).unwrap() {
                let base = theorems(&r);
                assert_eq!(base, theorems_with(&r, RuleSet::MINIMAL));
                assert_eq!(base, theorems_with(&r, RuleSet::WITH_TRX));
                assert_eq!(base, r.closure_by_powers());
            }
        }
    }
}

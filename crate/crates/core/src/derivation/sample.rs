//! Random valid derivations for property tests.
//!
//! Trees grow top-down under a height budget. A node only picks a rule
//! whose premises are derivable within the remaining budget, so every
//! generated tree checks against its relation.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Derivation, RuleSet};
use crate::relation::Relation;

const UNREACHABLE: usize = usize::MAX;

/// Minimum derivation height of every judgment under a rule set.
#[derive(Debug, Clone)]
pub struct HeightTable {
    n: usize,
    min: Vec<usize>,
}

impl HeightTable {
    pub fn new(r: &Relation, rules: RuleSet) -> Self {
        let n = r.universe().len();
        let mut min = vec![UNREACHABLE; n * n];
        for x in 0..n {
            min[x * n + x] = 1;
        }
        if rules.allow_in {
            for (x, y) in r.pairs() {
                min[x * n + y] = 1;
            }
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                for z in 0..n {
                    let mut best = min[x * n + z];
                    for u in 0..n {
                        if r.contains(x, u) && min[u * n + z] != UNREACHABLE {
                            best = best.min(1 + min[u * n + z]);
                        }
                        if rules.allow_trx {
                            let (l, rt) = (min[x * n + u], min[u * n + z]);
                            if l != UNREACHABLE && rt != UNREACHABLE {
                                best = best.min(1 + l.max(rt));
                            }
                        }
                    }
                    if best < min[x * n + z] {
                        min[x * n + z] = best;
                        changed = true;
                    }
                }
            }
            if !changed {
                return HeightTable { n, min };
            }
        }
    }

    /// `None` when `x R▽ z` is not derivable.
    pub fn get(&self, x: usize, z: usize) -> Option<usize> {
        Some(self.min[x * self.n + z]).filter(|&h| h != UNREACHABLE)
    }

    fn fits(&self, x: usize, z: usize, budget: usize) -> bool {
        self.get(x, z).is_some_and(|h| h <= budget)
    }
}

/// A random derivation of `x R▽ z` of height at most `max_height`, or
/// `None` if no such derivation exists.
pub fn random_derivation<G: Rng + ?Sized>(
    rng: &mut G,
    r: &Relation,
    rules: RuleSet,
    x: usize,
    z: usize,
    max_height: usize,
) -> Option<Derivation> {
    let table = HeightTable::new(r, rules);
    table
        .fits(x, z, max_height)
        .then(|| grow(rng, r, rules, &table, x, z, max_height))
}

/// A random valid derivation whose root is a `trx` node, over a random
/// derivable pair of `r`. `None` only when no pair admits one within
/// `max_height`.
pub fn random_trx_derivation<G: Rng + ?Sized>(rng: &mut G, r: &Relation, max_height: usize) -> Option<Derivation> {
    let rules = RuleSet::WITH_TRX;
    let table = HeightTable::new(r, rules);
    let n = r.universe().len();
    let budget = max_height.checked_sub(1)?;
    let mut roots: Vec<(usize, usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if table.fits(x, y, budget) && table.fits(y, z, budget) {
                    roots.push((x, y, z));
                }
            }
        }
    }
    let &(x, y, z) = roots.choose(rng)?;
    Some(Derivation::trx(
        grow(rng, r, rules, &table, x, y, budget),
        grow(rng, r, rules, &table, y, z, budget),
    ))
}

enum Step {
    Id,
    In,
    Tx(usize),
    Trx(usize),
}

fn grow<G: Rng + ?Sized>(
    rng: &mut G,
    r: &Relation,
    rules: RuleSet,
    table: &HeightTable,
    x: usize,
    z: usize,
    budget: usize,
) -> Derivation {
    let n = r.universe().len();
    let label = |i: usize| r.universe().label(i).to_owned();
    let mut steps = Vec::new();
    if x == z {
        steps.push(Step::Id);
    }
    if rules.allow_in && r.contains(x, z) {
        steps.push(Step::In);
    }
    if budget > 1 {
        for u in 0..n {
            if r.contains(x, u) && table.fits(u, z, budget - 1) {
                steps.push(Step::Tx(u));
            }
            if rules.allow_trx && table.fits(x, u, budget - 1) && table.fits(u, z, budget - 1) {
                steps.push(Step::Trx(u));
            }
        }
    }
    match steps.choose(rng).expect("judgment fits the budget") {
        Step::Id => Derivation::id(label(x)),
        Step::In => Derivation::fact(label(x), label(z)),
        &Step::Tx(u) => Derivation::tx(label(x), label(u), grow(rng, r, rules, table, u, z, budget - 1)),
        &Step::Trx(y) => Derivation::trx(
            grow(rng, r, rules, table, x, y, budget - 1),
            grow(rng, r, rules, table, y, z, budget - 1),
        ),
    }
}

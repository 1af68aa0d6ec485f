//! Reflexive-transitive closure of finite binary relations, built four
//! independent ways and cross-checked against each other.
//!
//! - [`relation`]: labelled universes, Boolean incidence relations and the
//!   closure constructions (powers, intersection of closed supersets,
//!   hereditary subsets).
//! - [`derivation`]: proof trees for the `id`/`in`/`tx` rule system, the
//!   admissible `trx` rule and the transforms that eliminate `trx` and `in`.
//! - [`lattice`]: closure operators, Moore families and least fixed points
//!   over finite powersets.
//! - [`quantale`]: unital quantales, star as a least fixed point, and the
//!   relation and truncated-language instances.
//! - [`path_algebra`]: square matrices over idempotent semirings with the
//!   naive power closure, Warshall and generic Floyd–Warshall.
//!
//! Exhaustive sweeps run on rayon when the `parallel` feature is enabled
//! (the default) and sequentially otherwise. See [`Exec`].

pub mod derivation;
pub mod error;
pub mod lattice;
pub mod par;
pub mod path_algebra;
pub mod quantale;
pub mod relation;

pub use error::{Error, Result};
pub use par::Exec;
pub use relation::{Relation, Subset, Universe};

//! Inputs shared by the criterion targets.

use olie_core::catalog::{random_extension_chain, Chain};
use olie_core::{Field, OmegaAlgebra};

pub use olie_core as core;

/// The first `count` chains over `field` that reach `dim`.
pub fn chains(field: Field, dim: usize, count: usize) -> Vec<OmegaAlgebra> {
    (0..)
        .filter_map(|s| match random_extension_chain(field, s, dim) {
            Chain::Done(a) => Some(a),
            Chain::Stuck { .. } => None,
        })
        .take(count)
        .collect()
}

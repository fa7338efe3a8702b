//! State-sum invariants of ribbon graphs.
//!
//! Every invariant here is a sum over the `2^e` spanning states of a ribbon
//! graph. Most of them only depend on `(k(H), e(H), p(H))` per state, so they
//! are built from a [`StateCensus`] that counts states by those numbers; the
//! labelled HOMFLY variants walk the states individually because they need
//! the boundary words.

mod br;
mod census;
mod homfly;
mod jones;
mod labels;
mod specialize;

pub use br::{bollobas_riordan, bollobas_riordan_rearranged, genus_from_br, tutte, weighted_b};
pub use census::StateCensus;
pub use homfly::{
    homfly_formula, homfly_full, homfly_resolution, homfly_traldi, tangle_weight, LabeledPoly,
};
pub use jones::{
    default_writhe, jones_cp, jones_from_homfly, jones_from_homfly_specialization,
    jones_via_bracket, kauffman_bracket, mirror,
};
pub use labels::{boundary_label, CyclicWord, Letter};

use thiserror::Error;

use crate::laurent::Var;

/// Variable names used by the invariants.
pub mod vars {
    pub const ALPHA: &str = "alpha";
    pub const BETA: &str = "beta";
    pub const GAMMA: &str = "gamma";
    pub const X: &str = "x";
    pub const Y: &str = "y";
    pub const T: &str = "t";
    pub const A: &str = "A";
    pub const TUTTE_X: &str = "x_T";
    pub const TUTTE_Y: &str = "y_T";
    pub const B_A: &str = "a";
    pub const B_C: &str = "c";
}

pub(crate) fn var(name: &str) -> Var {
    Var::new(name)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("edge `{0}` has no weight")]
    MissingWeight(String),
    #[error("edge `{0}` has no tangle type")]
    MissingTangle(String),
    #[error("weight symbol `{0}` is used on more than one edge")]
    DuplicateWeight(String),
    #[error("weight symbol `{0}` clashes with a polynomial variable")]
    ReservedWeight(String),
    #[error("the ribbon graph is not connected")]
    DisconnectedGraph,
    #[error("writhe {writhe} puts the prefactor at t^({numerator}/4), off the half-integer grid")]
    GridViolation { writhe: i64, numerator: i64 },
}

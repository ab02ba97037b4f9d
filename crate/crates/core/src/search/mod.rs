//! Exact solvability for tiny instances and enumeration of affine
//! strategies and gadgets.

mod affine;
mod exact;

pub use affine::{
    affine_strategy_search, gadget_search, AffineClass, AffineStrategy, FoundGadget, GadgetSearch,
    GraphStatus, DEFAULT_MAX_CANDIDATES,
};
pub use exact::{exact_solve, SearchBudget, SolveOutcome, SolveReport};

//! Explicit star edge-colorings.

pub mod ap3;
pub mod complete;
pub mod compose;
pub mod frugal;

pub use ap3::{behrend_set, behrend_set_of_size, greedy_ap3_set, verify_ap3, Ap3Set};
pub use complete::{
    color_kn, color_kn_recursive, color_kn_sum, color_knn_from_kn, KnMethod, RecursiveColoring,
    SumColoring,
};
pub use compose::{
    compose_star_coloring, ComposeOptions, ProductColoring, DEFAULT_EXACT_THRESHOLD,
};
pub use frugal::{distance2_edge_coloring, frugal_coloring, frugality, FrugalColoring};

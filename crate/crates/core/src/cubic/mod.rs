//! Tools for subcubic and cubic graphs: cycle colorings, 7-colorings of
//! cubic graphs, and covering maps onto the cube.

pub mod cover;
pub mod cycles;
pub mod lift;
pub mod pattern;
pub mod seven;

pub use cover::{find_cover, is_vertex_transitive, CoverMap};
pub use cycles::{cycle_pattern, cycle_star_coloring};
pub use lift::{lift_coloring, voltage_lift};
pub use pattern::{
    derive_q3_cover, local_color_pattern, missing_color_map, reference_cube_coloring, LocalPattern,
    Orientation,
};
pub use seven::{
    cubic_seven_coloring, cubic_seven_coloring_report, require_two_connected_cubic, Decomposition,
    SevenColoring, SevenRoute,
};

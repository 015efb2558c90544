//! Star 4-colorings of cubic graphs and covers of the cube.
//!
//! Under a star 4-coloring every vertex misses exactly one color. The
//! missing colors form a proper, locally injective vertex coloring, and
//! together with the local pattern at each vertex they pin down a covering
//! map onto `Q_3`.

use crate::coloring::{Color, EdgeColoring};
use crate::cubic::cover::CoverMap;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::named;
use crate::verify::is_star;

/// Star 4-coloring of [`named::cube`] by canonical edge id, found by the
/// exact solver.
pub const REFERENCE_CUBE_COLORS: [Color; 12] = [0, 1, 2, 2, 3, 3, 0, 1, 1, 3, 0, 2];

/// Star 5-coloring of [`named::petersen`] by canonical edge id.
pub const REFERENCE_PETERSEN_COLORS: [Color; 15] = [0, 1, 2, 1, 3, 2, 3, 3, 0, 4, 4, 1, 4, 2, 0];

pub fn reference_cube_coloring() -> (Graph, EdgeColoring) {
    (
        named::cube(),
        EdgeColoring::from_colors(REFERENCE_CUBE_COLORS),
    )
}

pub fn reference_petersen_coloring() -> (Graph, EdgeColoring) {
    (
        named::petersen(),
        EdgeColoring::from_colors(REFERENCE_PETERSEN_COLORS),
    )
}

fn check_star_four(g: &Graph, c: &EdgeColoring) -> Result<()> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    c.check_total_on(g)?;
    let palette = c.palette();
    if palette != [0, 1, 2, 3] {
        return Err(Error::PaletteNotFour(format!("palette is {palette:?}")));
    }
    if !is_star(g, c) {
        return Err(Error::NotStar);
    }
    Ok(())
}

/// The color missing at each vertex of a star 4-colored cubic graph.
///
/// The result is checked to be a proper vertex coloring that is injective
/// on every neighborhood; a failure is reported as
/// [`Error::InconsistentPattern`].
pub fn missing_color_map(g: &Graph, c: &EdgeColoring) -> Result<Vec<Color>> {
    check_star_four(g, c)?;
    let f: Vec<Color> = (0..g.n())
        .map(|v| {
            let used: u32 = g.incident(v).iter().map(|&(_, e)| 1 << c.color(e)).sum();
            (!used & 0b1111).trailing_zeros()
        })
        .collect();
    for v in 0..g.n() {
        let mut seen = 1u32 << f[v];
        for w in g.neighbors(v) {
            if seen & (1 << f[w]) != 0 {
                return Err(Error::InconsistentPattern(v));
            }
            seen |= 1 << f[w];
        }
    }
    Ok(f)
}

/// How the incident colors `j < k < l` at a vertex map to the missing
/// colors of the neighbors they lead to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// `j -> k`, `k -> l`, `l -> j`.
    Ascending,
    /// `j -> l`, `k -> j`, `l -> k`.
    Descending,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalPattern {
    pub vertex: Vertex,
    pub orientation: Orientation,
}

pub fn local_color_pattern(
    g: &Graph,
    c: &EdgeColoring,
    f: &[Color],
    v: Vertex,
) -> Result<LocalPattern> {
    let mut pairs: Vec<(Color, Color)> = g
        .incident(v)
        .iter()
        .map(|&(w, e)| (c.color(e), f[w]))
        .collect();
    pairs.sort_unstable();
    let edge_colors: Vec<Color> = pairs.iter().map(|p| p.0).collect();
    let expected: Vec<Color> = (0..4).filter(|&x| x != f[v]).collect();
    if edge_colors != expected {
        return Err(Error::InconsistentPattern(v));
    }
    let [j, k, l] = [expected[0], expected[1], expected[2]];
    let targets = [pairs[0].1, pairs[1].1, pairs[2].1];
    let orientation = if targets == [k, l, j] {
        Orientation::Ascending
    } else if targets == [l, j, k] {
        Orientation::Descending
    } else {
        return Err(Error::InconsistentPattern(v));
    };
    Ok(LocalPattern {
        vertex: v,
        orientation,
    })
}

/// Missing color and orientation at every vertex.
pub fn local_data(g: &Graph, c: &EdgeColoring) -> Result<Vec<(Color, Orientation)>> {
    let f = missing_color_map(g, c)?;
    (0..g.n())
        .map(|v| local_color_pattern(g, c, &f, v).map(|p| (f[v], p.orientation)))
        .collect()
}

/// The covering map onto `Q_3` sending each vertex to the cube vertex with
/// the same missing color and orientation under the reference coloring.
pub fn derive_q3_cover(g: &Graph, c: &EdgeColoring) -> Result<CoverMap> {
    let data = local_data(g, c)?;
    let (q, qc) = reference_cube_coloring();
    let reference = local_data(&q, &qc)?;
    let assignment = data
        .iter()
        .enumerate()
        .map(|(v, key)| {
            reference
                .iter()
                .position(|r| r == key)
                .ok_or(Error::InconsistentPattern(v))
        })
        .collect::<Result<Vec<_>>>()?;
    CoverMap::new(g.clone(), q, assignment)
}

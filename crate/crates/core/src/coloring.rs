use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

pub type Color = u32;

/// A total or partial assignment of colors to edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Option<Color>>,
}

impl EdgeColoring {
    pub fn uncolored(m: usize) -> EdgeColoring {
        EdgeColoring {
            colors: vec![None; m],
        }
    }

    pub fn from_colors(colors: impl IntoIterator<Item = Color>) -> EdgeColoring {
        EdgeColoring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn from_partial(colors: Vec<Option<Color>>) -> EdgeColoring {
        EdgeColoring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        self.colors[e]
    }

    /// Color of `e` in a coloring known to be total.
    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e].expect("edge is colored")
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        self.colors[e] = Some(c);
    }

    pub fn clear(&mut self, e: EdgeId) {
        self.colors[e] = None;
    }

    pub fn as_slice(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn uncolored_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_none()).count()
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Distinct colors in use, ascending.
    pub fn palette(&self) -> Vec<Color> {
        let mut p: Vec<Color> = self.colors.iter().flatten().copied().collect();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn palette_size(&self) -> usize {
        self.palette().len()
    }

    /// Renames colors to `0..palette_size` preserving their order.
    pub fn densified(&self) -> EdgeColoring {
        let index: BTreeMap<Color, Color> = self
            .palette()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i as Color))
            .collect();
        EdgeColoring {
            colors: self.colors.iter().map(|c| c.map(|c| index[&c])).collect(),
        }
    }

    pub fn map_colors(&self, f: impl Fn(Color) -> Color) -> EdgeColoring {
        EdgeColoring {
            colors: self.colors.iter().map(|c| c.map(&f)).collect(),
        }
    }

    /// Checks that this is a total coloring of `g`'s edges.
    pub fn check_total_on(&self, g: &Graph) -> Result<()> {
        if self.len() != g.m() {
            return Err(Error::ColoringLength {
                expected: g.m(),
                got: self.len(),
            });
        }
        match self.uncolored_count() {
            0 => Ok(()),
            uncolored => Err(Error::PartialColoring { uncolored }),
        }
    }

    pub fn check_len_on(&self, g: &Graph) -> Result<()> {
        if self.len() == g.m() {
            Ok(())
        } else {
            Err(Error::ColoringLength {
                expected: g.m(),
                got: self.len(),
            })
        }
    }
}

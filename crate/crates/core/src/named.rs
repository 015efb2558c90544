//! Named graphs with fixed vertex labelings.
//!
//! | name            | labeling                                                   |
//! |-----------------|------------------------------------------------------------|
//! | `K_n`           | vertices `0..n`                                            |
//! | `K_{m,n}`       | left side `0..m`, right side `m..m+n`                      |
//! | `C_k`           | `i ~ i+1 (mod k)`                                          |
//! | `P_k`           | `k` vertices, `i ~ i+1`                                    |
//! | `Q_3`           | 3-bit labels, adjacent when they differ in one bit         |
//! | Petersen        | outer `i ~ i+1 (mod 5)`, spokes `i ~ i+5`, inner `5+i ~ 5+(i+2 mod 5)` |
//! | Heawood         | 14-cycle `i ~ i+1 (mod 14)` plus `i ~ i+5` for even `i`     |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Cube,
    Petersen,
    Heawood,
}

impl NamedGraph {
    pub fn build(self) -> Result<Graph> {
        match self {
            NamedGraph::Complete(n) => {
                if n == 0 {
                    return Err(Error::BadParameter("K_n needs n >= 1".into()));
                }
                Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            }
            NamedGraph::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(Error::BadParameter("K_{m,n} needs m, n >= 1".into()));
                }
                Graph::new(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))))
            }
            NamedGraph::Cycle(k) => {
                if k < 3 {
                    return Err(Error::BadParameter("C_k needs k >= 3".into()));
                }
                Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)))
            }
            NamedGraph::Path(k) => {
                if k == 0 {
                    return Err(Error::BadParameter("P_k needs k >= 1".into()));
                }
                Graph::new(k, (1..k).map(|i| (i - 1, i)))
            }
            NamedGraph::Cube => Graph::new(
                8,
                (0..8usize)
                    .flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b))))
                    .filter(|&(u, v)| u < v),
            ),
            NamedGraph::Petersen => Graph::new(
                10,
                (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
            ),
            NamedGraph::Heawood => Graph::new(
                14,
                (0..14)
                    .map(|i| (i, (i + 1) % 14))
                    .chain((0..14).step_by(2).map(|i| (i, (i + 5) % 14))),
            ),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            NamedGraph::Cycle(k) => write!(f, "C{k}"),
            NamedGraph::Path(k) => write!(f, "P{k}"),
            NamedGraph::Cube => f.write_str("Q3"),
            NamedGraph::Petersen => f.write_str("petersen"),
            NamedGraph::Heawood => f.write_str("heawood"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Accepts `K5`, `K3,3`, `C7`, `P4`, `Q3`, `petersen`, `heawood`
    /// (case-insensitive, optional `_` after the letter).
    fn from_str(s: &str) -> Result<NamedGraph> {
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "q3" | "q_3" | "cube" => return Ok(NamedGraph::Cube),
            "petersen" => return Ok(NamedGraph::Petersen),
            "heawood" => return Ok(NamedGraph::Heawood),
            _ => {}
        }
        let unknown = || Error::UnknownName(s.to_string());
        let mut chars = lower.chars();
        let kind = chars.next().ok_or_else(unknown)?;
        let rest = chars.as_str().trim_start_matches('_');
        let rest = rest.trim_start_matches('{').trim_end_matches('}');
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::BadParameter(format!("`{t}` in `{s}`")))
        };
        match kind {
            'k' => match rest.split_once(',') {
                Some((a, b)) => Ok(NamedGraph::CompleteBipartite(num(a)?, num(b)?)),
                None => Ok(NamedGraph::Complete(num(rest)?)),
            },
            'c' => Ok(NamedGraph::Cycle(num(rest)?)),
            'p' => Ok(NamedGraph::Path(num(rest)?)),
            _ => Err(unknown()),
        }
    }
}

pub fn complete(n: usize) -> Graph {
    NamedGraph::Complete(n).build().expect("n >= 1")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    NamedGraph::CompleteBipartite(a, b)
        .build()
        .expect("a, b >= 1")
}

pub fn cycle(k: usize) -> Graph {
    NamedGraph::Cycle(k).build().expect("k >= 3")
}

pub fn path(k: usize) -> Graph {
    NamedGraph::Path(k).build().expect("k >= 1")
}

pub fn cube() -> Graph {
    NamedGraph::Cube.build().unwrap()
}

pub fn petersen() -> Graph {
    NamedGraph::Petersen.build().unwrap()
}

pub fn heawood() -> Graph {
    NamedGraph::Heawood.build().unwrap()
}

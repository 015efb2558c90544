//! Sets of positive integers without 3-term arithmetic progressions.

use std::collections::{BTreeMap, HashSet};

/// Largest dimension tried by [`behrend_set`].
pub const BEHREND_MAX_DIM: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ap3Set {
    elements: Vec<u64>,
    span: u64,
}

impl Ap3Set {
    /// Wraps `elements` after checking they are positive, fit in `1..=span`
    /// and contain no 3-term progression.
    pub fn new(mut elements: Vec<u64>, span: u64) -> Option<Ap3Set> {
        elements.sort_unstable();
        elements.dedup();
        let fits =
            elements.first().is_none_or(|&x| x >= 1) && elements.last().is_none_or(|&x| x <= span);
        (fits && verify_ap3(&elements)).then_some(Ap3Set { elements, span })
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn span(&self) -> u64 {
        self.span
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The `count` smallest elements, with the span shrunk to the largest.
    pub fn truncated(&self, count: usize) -> Ap3Set {
        let elements: Vec<u64> = self.elements.iter().take(count).copied().collect();
        let span = elements.last().copied().unwrap_or(1);
        Ap3Set { elements, span }
    }
}

/// True iff no `x < y < z` in `s` satisfy `x + z = 2y`.
pub fn verify_ap3(s: &[u64]) -> bool {
    let mut sorted = s.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let members: HashSet<u64> = sorted.iter().copied().collect();
    for (i, &x) in sorted.iter().enumerate() {
        for &z in &sorted[i + 1..] {
            if (x + z) % 2 == 0 && members.contains(&((x + z) / 2)) {
                return false;
            }
        }
    }
    true
}

/// Greedy progression-free sequence: scan 1, 2, 3, ... and keep each
/// integer that does not finish a progression with earlier picks.
pub fn greedy_ap3_set(count: usize) -> Ap3Set {
    let mut elements: Vec<u64> = Vec::with_capacity(count);
    let mut members = HashSet::new();
    let mut x = 0u64;
    while elements.len() < count {
        x += 1;
        let blocked = elements
            .iter()
            .any(|&y| 2 * y > x && members.contains(&(2 * y - x)));
        if !blocked {
            elements.push(x);
            members.insert(x);
        }
    }
    let span = elements.last().copied().unwrap_or(1);
    Ap3Set { elements, span }
}

/// Calls `visit(norm, value)` for every digit vector with digits below `m`
/// in base `base` and value below `limit`, in increasing value order.
fn for_each_point(dim: u32, base: u64, m: u64, limit: u64, visit: &mut impl FnMut(u64, u64)) {
    fn rec(
        pos: u32,
        base: u64,
        m: u64,
        limit: u64,
        value: u64,
        norm: u64,
        visit: &mut impl FnMut(u64, u64),
    ) {
        if pos == 0 {
            visit(norm, value);
            return;
        }
        let place = base.pow(pos - 1);
        for d in 0..m {
            let v = value + d * place;
            if v >= limit {
                break;
            }
            rec(pos - 1, base, m, limit, v, norm + d * d, visit);
        }
    }
    rec(dim, base, m, limit, 0, 0, visit);
}

/// Behrend's sphere construction, best over a small parameter scan.
///
/// For each dimension `d` in `2..=12` and digit bound `m >= 2` (base
/// `2m - 1`, so adding two admissible digit vectors never carries), the
/// integers `1 + sum a_i (2m-1)^i` with digits `a_i < m` and value at most
/// `n` are grouped by `sum a_i^2`; each group is progression-free because a
/// sphere contains no three collinear points. With `m = 2` the digits are
/// 0/1 and the whole cube is progression-free, so no grouping is needed.
/// The largest group found is returned (first one wins ties, scanning `d`,
/// then `m`, then the norm upward).
pub fn behrend_set(n: u64) -> Ap3Set {
    let n = n.max(1);
    let mut best: Vec<u64> = vec![1];
    // size of the largest 0/1 cube that fits; nothing smaller can win
    let floor = (2..=BEHREND_MAX_DIM)
        .filter(|&dim| 3u64.checked_pow(dim - 1).is_some_and(|p| p < n))
        .map(|dim| {
            let mut count = 0;
            for_each_point(dim, 3, 2, n, &mut |_, _| count += 1);
            count
        })
        .max()
        .unwrap_or(1);
    for dim in 2..=BEHREND_MAX_DIM {
        for m in 2u64.. {
            let base = 2 * m - 1;
            // the top digit must be usable for this dimension to add anything
            match base.checked_pow(dim - 1) {
                Some(p) if p < n => {}
                _ => break,
            }
            // a point of a sphere is fixed by all digits but the lowest
            let top = m.min((n - 1) / base.pow(dim - 1) + 1);
            let ceiling = if m == 2 {
                top.saturating_mul(1 << (dim - 1))
            } else {
                top.saturating_mul(m.saturating_pow(dim - 2))
            };
            if ceiling <= best.len() as u64 || ceiling < floor {
                continue;
            }
            let mut groups: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
            for_each_point(dim, base, m, n, &mut |norm, v| {
                let key = if m == 2 { 0 } else { norm };
                groups.entry(key).or_default().push(v + 1);
            });
            for group in groups.into_values() {
                if group.len() > best.len() {
                    best = group;
                }
            }
        }
    }
    Ap3Set {
        elements: best,
        span: n,
    }
}

/// Smallest-span Behrend set with at least `count` elements, truncated to
/// exactly `count`.
pub fn behrend_set_of_size(count: usize) -> Ap3Set {
    if count <= 1 {
        return Ap3Set {
            elements: vec![1; count.min(1)],
            span: 1,
        };
    }
    let mut hi = 2u64;
    while behrend_set(hi).len() < count {
        hi *= 2;
    }
    let mut lo = hi / 2;
    // behrend_set(lo) is too small, behrend_set(hi) is large enough
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if behrend_set(mid).len() >= count {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    behrend_set(hi).truncated(count)
}

//! Lattice-point counting in `N²` under the south-west/north-west step relation.
//!
//! Points use matrix coordinates with first entry `(0,0)`: a [`GridPoint`] is
//! `(row, col)`. One step moves to `(row ± 1, col − 1)`, and zero steps are
//! allowed, so a point reaches itself.
//!
//! Every closed form here has a brute-force twin that literally enumerates the
//! region; the closed forms are only trusted because the two agree
//! exhaustively (see the tests).

use serde::{Deserialize, Serialize};

/// A point of `N²` in matrix coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GridPoint {
    pub row: u32,
    pub col: u32,
}

impl GridPoint {
    pub fn new(row: u32, col: u32) -> Self {
        GridPoint { row, col }
    }
}

/// Whether `q` lies in the cone of `p`: `q.col ≤ p.col`,
/// `|q.row − p.row| ≤ p.col − q.col` and the two differences have equal parity.
pub fn reachable(p: GridPoint, q: GridPoint) -> bool {
    let steps = i64::from(p.col) - i64::from(q.col);
    let drow = (i64::from(q.row) - i64::from(p.row)).abs();
    steps >= 0 && drow <= steps && (steps - drow) % 2 == 0
}

/// `σ_{k,l}(h)`: cone points of `(0,h)` inside the rectangle with `k` columns
/// and `l` rows anchored at `(0,0)`. Piecewise closed form.
pub fn sigma_closed(k: u32, l: u32, h: i64) -> u64 {
    assert!(k >= 1 && l >= 1, "σ needs a nonempty rectangle");
    let (k, l) = (i64::from(k), i64::from(l));
    let (lo, hi) = (k.min(l), k.max(l));
    sigma_rec(k, l, lo, hi, h) as u64
}

fn sigma_rec(k: i64, l: i64, lo: i64, hi: i64, h: i64) -> i64 {
    if h < 0 {
        0
    } else if h < lo {
        (h + 2) * (h + 2) / 4
    } else if h < hi {
        // Full diagonals of length min(k,l) on top of a square count.
        let s = if (h - lo) % 2 == 0 { lo - 2 } else { lo - 1 };
        sigma_rec(k, l, lo, hi, s) + (h - s) / 2 * lo
    } else {
        let same_parity = if h % 2 == 0 {
            (k * l + 1) / 2
        } else {
            k * l / 2
        };
        same_parity - sigma_rec(k, l, lo, hi, k + l - h - 4)
    }
}

/// `σ_{k,l}(h)` by enumerating the `l × k` box.
pub fn sigma_bruteforce(k: u32, l: u32, h: i64) -> u64 {
    assert!(k >= 1 && l >= 1, "σ needs a nonempty rectangle");
    let Ok(h) = u32::try_from(h) else {
        return 0;
    };
    let start = GridPoint::new(0, h);
    let mut count = 0;
    for row in 0..l {
        for col in 0..k {
            if reachable(start, GridPoint::new(row, col)) {
                count += 1;
            }
        }
    }
    count
}

/// Parameters of the rectangle `R(a,b,c,d)` used by [`gamma_region_closed`]:
/// depth coordinate in `a..=a+b`, offset coordinate in `c..=c+d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Rect {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Rect { a, b, c, d }
    }
}

/// `Γ(a,b,c,d)(x,y)`: cone points of `(x,y)` inside `R(a,b,c,d)`.
///
/// Γ is written in `(depth, offset)` coordinates: along a path the first
/// coordinate drops by one per step and the second moves by ±1. That is the
/// transpose of the `(row, col)` orientation of [`reachable`] and σ, where
/// the column is the coordinate that drops.
pub fn gamma_region_closed(rect: Rect, x: u32, y: u32) -> u64 {
    let Rect { a, b, c, d } = rect;
    let (a, b, c, d) = (i64::from(a), i64::from(b), i64::from(c), i64::from(d));
    let (x, y) = (i64::from(x), i64::from(y));
    let (b1, d1) = ((b + 1) as u32, (d + 1) as u32);

    if y <= c {
        return sigma_closed(b1, d1, x + y - a - c);
    }
    if y >= c + d {
        return sigma_closed(b1, d1, x - y + c + d - a);
    }
    // Split at the start's offset line and remove the doubly counted points.
    let north = sigma_closed(b1, (y - c + 1) as u32, x - a);
    let south = sigma_closed(b1, (c + d - y + 1) as u32, x - a);
    let overlap = if x < a {
        0
    } else if x <= a + b {
        (x - a + 2) / 2
    } else if (x - a - b) % 2 == 0 {
        (b + 2) / 2
    } else {
        (b + 1) / 2
    };
    north + south - overlap as u64
}

/// `Γ(a,b,c,d)(x,y)` by enumerating the rectangle.
pub fn gamma_region_bruteforce(rect: Rect, x: u32, y: u32) -> u64 {
    let Rect { a, b, c, d } = rect;
    // Transpose into (row, col) = (offset, depth).
    let start = GridPoint::new(y, x);
    let mut count = 0;
    for u in a..=a + b {
        for v in c..=c + d {
            if reachable(start, GridPoint::new(v, u)) {
                count += 1;
            }
        }
    }
    count
}

/// Tilted rectangle with vertices `(a,b)`, `(b,a)`, `(c,d)`, `(d,c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiamondRegion {
    a: u32,
    b: u32,
    c: u32,
    d: u32,
}

impl DiamondRegion {
    /// Returns `None` unless `a ≥ b`, `c ≥ d`, `c ≥ a` and `d ≥ b`.
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Option<Self> {
        (a >= b && c >= d && c >= a && d >= b).then_some(DiamondRegion { a, b, c, d })
    }

    /// The square-ish region `(a,b;e)` with `c = d = e`.
    pub fn with_apex(a: u32, b: u32, e: u32) -> Option<Self> {
        Self::new(a, b, e, e)
    }

    pub fn vertices(&self) -> [(u32, u32); 4] {
        let DiamondRegion { a, b, c, d } = *self;
        [(a, b), (b, a), (c, d), (d, c)]
    }

    /// `|v − u| ≤ a − b` and `a + b ≤ u + v ≤ c + d`.
    pub fn contains(&self, u: u32, v: u32) -> bool {
        diamond_contains(self, u, v)
    }
}

pub fn diamond_contains(region: &DiamondRegion, u: u32, v: u32) -> bool {
    let DiamondRegion { a, b, c, d } = *region;
    let (u, v) = (u64::from(u), u64::from(v));
    u.abs_diff(v) <= u64::from(a - b)
        && u64::from(a) + u64::from(b) <= u + v
        && u + v <= u64::from(c) + u64::from(d)
}

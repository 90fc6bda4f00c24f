//! Fully-packed loop configurations on an n x n grid, gyration, and link
//! patterns.
//!
//! Grid dots are `(r, c)` with `r` increasing downward and `c` rightward.
//! External edges sit at every second boundary position, walking clockwise
//! from the upper-left dot (whose external edge points up) and counting
//! corner dots twice; they are numbered `1..=2n` in that same clockwise
//! order. Every dot of a configuration has degree exactly two, externals
//! included.

use crate::{Error, Result};
use serde::Serialize;

/// A fully-packed loop configuration of order `n` (n <= 8).
///
/// Internal edges are stored as bitmasks: horizontal edge `(r,c)-(r,c+1)`
/// at bit `r*(n-1)+c`, vertical edge `(r,c)-(r+1,c)` at bit `r*n+c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FplConfig {
    pub n: u8,
    pub horizontal: u64,
    pub vertical: u64,
}

impl FplConfig {
    #[inline]
    pub fn has_h(&self, r: usize, c: usize) -> bool {
        self.horizontal >> (r * (self.n as usize - 1) + c) & 1 == 1
    }

    #[inline]
    pub fn has_v(&self, r: usize, c: usize) -> bool {
        self.vertical >> (r * self.n as usize + c) & 1 == 1
    }

    fn set_h(&mut self, r: usize, c: usize, on: bool) {
        let bit = 1u64 << (r * (self.n as usize - 1) + c);
        if on {
            self.horizontal |= bit;
        } else {
            self.horizontal &= !bit;
        }
    }

    fn set_v(&mut self, r: usize, c: usize, on: bool) {
        let bit = 1u64 << (r * self.n as usize + c);
        if on {
            self.vertical |= bit;
        } else {
            self.vertical &= !bit;
        }
    }

    /// Degree of a dot counting internal and external edges.
    pub fn degree(&self, r: usize, c: usize) -> usize {
        let n = self.n as usize;
        let mut d = external_degree(self.n, r, c);
        if c > 0 && self.has_h(r, c - 1) {
            d += 1;
        }
        if c + 1 < n && self.has_h(r, c) {
            d += 1;
        }
        if r > 0 && self.has_v(r - 1, c) {
            d += 1;
        }
        if r + 1 < n && self.has_v(r, c) {
            d += 1;
        }
        d
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n as usize;
        (0..n).all(|r| (0..n).all(|c| self.degree(r, c) == 2))
    }

    /// Internal edges as sorted dot-id pairs (`id = r*n + c`).
    pub fn edge_list(&self) -> Vec<(u16, u16)> {
        let n = self.n as usize;
        let mut edges = Vec::new();
        for r in 0..n {
            for c in 0..n.saturating_sub(1) {
                if self.has_h(r, c) {
                    edges.push(((r * n + c) as u16, (r * n + c + 1) as u16));
                }
            }
        }
        for r in 0..n.saturating_sub(1) {
            for c in 0..n {
                if self.has_v(r, c) {
                    edges.push(((r * n + c) as u16, ((r + 1) * n + c) as u16));
                }
            }
        }
        edges.sort_unstable();
        edges
    }
}

impl Serialize for FplConfig {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct FplJson {
            n: u8,
            edges: Vec<(u16, u16)>,
        }
        FplJson {
            n: self.n,
            edges: self.edge_list(),
        }
        .serialize(s)
    }
}

/// Clockwise boundary positions: `4n` entries, corners appearing twice.
/// Position `p` maps to a dot and the side its external edge would leave by.
fn boundary_dot(n: u8, p: usize) -> (usize, usize) {
    let n = n as usize;
    match p / n {
        0 => (0, p),                     // top side, left to right
        1 => (p - n, n - 1),             // right side, top to bottom
        2 => (n - 1, 3 * n - 1 - p),     // bottom side, right to left
        _ => (4 * n - 1 - p, 0),         // left side, bottom to top
    }
}

/// Number of external edges at a dot (0, 1, or 2; only the order-1 grid has 2).
pub fn external_degree(n: u8, r: usize, c: usize) -> usize {
    (0..4 * n as usize)
        .step_by(2)
        .filter(|&p| boundary_dot(n, p) == (r, c))
        .count()
}

/// The dots carrying external edges `1..=2n`, in clockwise numbering order.
pub fn external_edges(n: u8) -> Vec<(usize, usize)> {
    (0..4 * n as usize)
        .step_by(2)
        .map(|p| boundary_dot(n, p))
        .collect()
}

/// Order in which the backtracking enumerator visits dots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOrder {
    RowMajor,
    ColumnMajor,
}

/// Enumerates every fully-packed loop configuration of order `n` exactly
/// once, by backtracking over dots in row-major order. Deterministic.
pub fn enumerate_fpl(n: u8, cap: u8) -> Result<Vec<FplConfig>> {
    enumerate_fpl_with(n, cap, SearchOrder::RowMajor)
}

/// Enumeration with a chosen search order; the two orders must produce the
/// same set (they are compared in the test suite).
pub fn enumerate_fpl_with(n: u8, cap: u8, order: SearchOrder) -> Result<Vec<FplConfig>> {
    if n == 0 || n > cap {
        return Err(Error::ResourceLimit { cap: cap as usize });
    }
    if n > 8 {
        return Err(Error::InvalidSpec("order above 8 not supported".into()));
    }
    let sz = n as usize;
    let dots: Vec<(usize, usize)> = match order {
        SearchOrder::RowMajor => (0..sz).flat_map(|r| (0..sz).map(move |c| (r, c))).collect(),
        SearchOrder::ColumnMajor => (0..sz).flat_map(|c| (0..sz).map(move |r| (r, c))).collect(),
    };
    let mut out = Vec::new();
    let mut cfg = FplConfig {
        n,
        horizontal: 0,
        vertical: 0,
    };
    // Visiting dots so that the up and left neighbors come earlier means the
    // only undecided edges at a dot are its right and down edges.
    fn go(
        cfg: &mut FplConfig,
        dots: &[(usize, usize)],
        at: usize,
        reversed: bool,
        out: &mut Vec<FplConfig>,
    ) {
        if at == dots.len() {
            debug_assert!(cfg.is_valid());
            out.push(*cfg);
            return;
        }
        let n = cfg.n as usize;
        let (r, c) = dots[at];
        let mut known = external_degree(cfg.n, r, c);
        if r > 0 && cfg.has_v(r - 1, c) {
            known += 1;
        }
        if c > 0 && cfg.has_h(r, c - 1) {
            known += 1;
        }
        let has_right = c + 1 < n;
        let has_down = r + 1 < n;
        let choices: [(bool, bool); 4] = if reversed {
            [(true, true), (true, false), (false, true), (false, false)]
        } else {
            [(false, false), (false, true), (true, false), (true, true)]
        };
        for (right, down) in choices {
            if (right && !has_right) || (down && !has_down) {
                continue;
            }
            if known + right as usize + down as usize != 2 {
                continue;
            }
            if has_right {
                cfg.set_h(r, c, right);
            }
            if has_down {
                cfg.set_v(r, c, down);
            }
            go(cfg, dots, at + 1, reversed, out);
        }
        if has_right {
            cfg.set_h(r, c, false);
        }
        if has_down {
            cfg.set_v(r, c, false);
        }
    }
    let reversed = order == SearchOrder::ColumnMajor;
    go(&mut cfg, &dots, 0, reversed, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// Gyration: visit all squares whose upper-left dot has even coordinate sum
/// (the color containing the grid's top-left square), then the others. At
/// each square, two parallel edges and nothing else swap to the
/// perpendicular pair.
pub fn gyration_fpl(a: &FplConfig) -> FplConfig {
    let n = a.n as usize;
    let mut cur = *a;
    for color in [0usize, 1] {
        let snapshot = cur;
        for r in 0..n.saturating_sub(1) {
            for c in 0..n.saturating_sub(1) {
                if (r + c) % 2 != color {
                    continue;
                }
                let top = snapshot.has_h(r, c);
                let bottom = snapshot.has_h(r + 1, c);
                let left = snapshot.has_v(r, c);
                let right = snapshot.has_v(r, c + 1);
                if top && bottom && !left && !right {
                    cur.set_h(r, c, false);
                    cur.set_h(r + 1, c, false);
                    cur.set_v(r, c, true);
                    cur.set_v(r, c + 1, true);
                } else if left && right && !top && !bottom {
                    cur.set_v(r, c, false);
                    cur.set_v(r, c + 1, false);
                    cur.set_h(r, c, true);
                    cur.set_h(r + 1, c, true);
                }
            }
        }
    }
    debug_assert!(cur.is_valid());
    cur
}

/// A noncrossing perfect matching on the points `1..=2n`, stored as sorted
/// `(low, high)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LinkPattern(pub Vec<(u8, u8)>);

impl LinkPattern {
    pub fn points(&self) -> usize {
        self.0.len() * 2
    }

    pub fn is_noncrossing(&self) -> bool {
        for (idx, &(a, b)) in self.0.iter().enumerate() {
            for &(c, d) in &self.0[idx + 1..] {
                let crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if crossing {
                    return false;
                }
            }
        }
        true
    }

    /// Rotates every point by `shift` positions (label `i` becomes
    /// `(i - 1 + shift) mod 2n + 1`).
    pub fn rotate(&self, shift: i64) -> LinkPattern {
        let m = self.points() as i64;
        let mv = |x: u8| -> u8 { ((x as i64 - 1 + shift).rem_euclid(m) + 1) as u8 };
        let mut pairs: Vec<(u8, u8)> = self
            .0
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (mv(a), mv(b));
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.sort_unstable();
        LinkPattern(pairs)
    }

    pub fn from_pairs(pairs: &[(u8, u8)]) -> LinkPattern {
        let mut v: Vec<(u8, u8)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        v.sort_unstable();
        LinkPattern(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Incidence {
    External(u8),
    Horizontal(usize, usize),
    Vertical(usize, usize),
}

fn incident_edges(cfg: &FplConfig, externals: &[(usize, usize)], r: usize, c: usize) -> Vec<Incidence> {
    let n = cfg.n as usize;
    let mut out = Vec::with_capacity(2);
    for (i, &dot) in externals.iter().enumerate() {
        if dot == (r, c) {
            out.push(Incidence::External(i as u8 + 1));
        }
    }
    if c > 0 && cfg.has_h(r, c - 1) {
        out.push(Incidence::Horizontal(r, c - 1));
    }
    if c + 1 < n && cfg.has_h(r, c) {
        out.push(Incidence::Horizontal(r, c));
    }
    if r > 0 && cfg.has_v(r - 1, c) {
        out.push(Incidence::Vertical(r - 1, c));
    }
    if r + 1 < n && cfg.has_v(r, c) {
        out.push(Incidence::Vertical(r, c));
    }
    out
}

/// The link pattern of a configuration: external edges are joined by the
/// paths of the loop configuration.
pub fn link_pattern(cfg: &FplConfig) -> Result<LinkPattern> {
    if !cfg.is_valid() {
        return Err(Error::InvalidConfig("a dot does not have degree 2".into()));
    }
    let externals = external_edges(cfg.n);
    let mut pairs = Vec::new();
    let mut matched = vec![false; externals.len()];
    for start in 0..externals.len() {
        if matched[start] {
            continue;
        }
        let mut dot = externals[start];
        let mut incoming = Incidence::External(start as u8 + 1);
        loop {
            let here = incident_edges(cfg, &externals, dot.0, dot.1);
            debug_assert_eq!(here.len(), 2, "dot {dot:?} must have degree 2");
            let out = if here[0] == incoming { here[1] } else { here[0] };
            match out {
                Incidence::External(id) => {
                    let end = id as usize - 1;
                    matched[start] = true;
                    matched[end] = true;
                    pairs.push((start as u8 + 1, id));
                    break;
                }
                Incidence::Horizontal(r, c) => {
                    dot = if dot == (r, c) { (r, c + 1) } else { (r, c) };
                    incoming = out;
                }
                Incidence::Vertical(r, c) => {
                    dot = if dot == (r, c) { (r + 1, c) } else { (r, c) };
                    incoming = out;
                }
            }
        }
    }
    let lp = LinkPattern::from_pairs(&pairs);
    debug_assert!(lp.is_noncrossing());
    Ok(lp)
}

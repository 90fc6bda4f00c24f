//! Increasing tableaux with bounded entries, K-promotion, K-Bender-Knuth
//! involutions, binary content, and descents.
//!
//! An increasing tableau of partition shape has entries that strictly
//! increase left to right along rows and top to bottom down columns, all at
//! most a bound `q`. Labels need not cover all of `1..=q`.
//!
//! K-promotion is computed as the composition of the K-Bender-Knuth
//! involutions `KBK_{q-1} o ... o KBK_1`; an independent short-ribbon
//! implementation lives in the test suite and the two are compared
//! exhaustively there.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// An increasing tableau: partition-shaped, strictly increasing rows and
/// columns, entries in `1..=bound`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingTableau {
    shape: Vec<u8>,
    entries: Vec<u8>,
    bound: u8,
}

impl IncreasingTableau {
    /// Builds and validates a tableau from rows of entries.
    pub fn new(rows: &[Vec<u8>], bound: u8) -> Result<IncreasingTableau> {
        let shape: Vec<u8> = rows.iter().map(|r| r.len() as u8).collect();
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape("row lengths must weakly decrease".into()));
        }
        if shape.iter().any(|&l| l == 0) {
            return Err(Error::Shape("empty row".into()));
        }
        let entries: Vec<u8> = rows.iter().flatten().copied().collect();
        let t = IncreasingTableau { shape, entries, bound };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        for r in 0..self.rows() {
            for c in 0..self.row_len(r) {
                let v = self.entry(r, c);
                if v == 0 || v > self.bound {
                    return Err(Error::InvalidTableau(format!(
                        "entry {v} at ({r},{c}) outside 1..={}",
                        self.bound
                    )));
                }
                if c + 1 < self.row_len(r) && self.entry(r, c + 1) <= v {
                    return Err(Error::InvalidTableau(format!(
                        "row {r} not strictly increasing at column {c}"
                    )));
                }
                if r + 1 < self.rows() && c < self.row_len(r + 1) && self.entry(r + 1, c) <= v {
                    return Err(Error::InvalidTableau(format!(
                        "column {c} not strictly increasing at row {r}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.shape.len()
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.shape[r] as usize
    }

    pub fn shape(&self) -> &[u8] {
        &self.shape
    }

    pub fn bound(&self) -> u8 {
        self.bound
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    fn offset(&self, r: usize) -> usize {
        self.shape[..r].iter().map(|&l| l as usize).sum()
    }

    pub fn entry(&self, r: usize, c: usize) -> u8 {
        self.entries[self.offset(r) + c]
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows())
            .map(|r| {
                let o = self.offset(r);
                self.entries[o..o + self.row_len(r)].to_vec()
            })
            .collect()
    }

    pub fn is_rectangular(&self) -> bool {
        self.shape.iter().all(|&l| l == self.shape[0])
    }

    /// Transposed tableau (rows become columns). Same bound.
    pub fn transpose(&self) -> IncreasingTableau {
        let cols = self.row_len(0);
        let mut rows = Vec::with_capacity(cols);
        for c in 0..cols {
            let mut row = Vec::new();
            for r in 0..self.rows() {
                if c < self.row_len(r) {
                    row.push(self.entry(r, c));
                }
            }
            rows.push(row);
        }
        IncreasingTableau::new(&rows, self.bound).expect("transpose of a valid tableau is valid")
    }
}

impl std::fmt::Debug for IncreasingTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tableau(q={})", self.bound)?;
        for row in self.to_rows() {
            write!(f, " {row:?}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    rows: Vec<Vec<u8>>,
    q: u8,
}

impl Serialize for IncreasingTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauJson {
            rows: self.to_rows(),
            q: self.bound,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IncreasingTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TableauJson::deserialize(d)?;
        IncreasingTableau::new(&raw.rows, raw.q).map_err(serde::de::Error::custom)
    }
}

/// Binary content: bit `i-1` is 1 iff label `i` occurs in the tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BinaryContent(pub Vec<u8>);

impl BinaryContent {
    pub fn is_full(&self) -> bool {
        self.0.iter().all(|&b| b == 1)
    }

    /// Leftward cyclic shift `(a_1, ..., a_q) -> (a_2, ..., a_q, a_1)`.
    pub fn rotate_left(&self) -> BinaryContent {
        let mut v = self.0.clone();
        if !v.is_empty() {
            v.rotate_left(1);
        }
        BinaryContent(v)
    }
}

/// Binary content of `t` as a length-`q` 0/1 vector.
pub fn content(t: &IncreasingTableau) -> BinaryContent {
    let mut bits = vec![0u8; t.bound as usize];
    for &v in &t.entries {
        bits[v as usize - 1] = 1;
    }
    BinaryContent(bits)
}

/// Connected components (4-adjacency) of the boxes holding label `i` or `i+1`.
/// Components of a single box swap their label; larger components are fixed.
pub fn k_bender_knuth(t: &IncreasingTableau, i: u32) -> Result<IncreasingTableau> {
    if i < 1 || i >= t.bound as u32 {
        return Err(Error::LabelRange {
            label: i,
            q: t.bound as u32,
        });
    }
    let (lo, hi) = (i as u8, i as u8 + 1);
    let mut out = t.clone();
    for r in 0..t.rows() {
        for c in 0..t.row_len(r) {
            let v = t.entry(r, c);
            if v != lo && v != hi {
                continue;
            }
            let marked = |rr: usize, cc: usize| {
                rr < t.rows() && cc < t.row_len(rr) && {
                    let w = t.entry(rr, cc);
                    w == lo || w == hi
                }
            };
            // A box is alone in its component iff no 4-neighbor is marked.
            let alone = !(r > 0 && marked(r - 1, c))
                && !(c > 0 && marked(r, c - 1))
                && !marked(r + 1, c)
                && !marked(r, c + 1);
            if alone {
                let o = out.offset(r) + c;
                out.entries[o] = if v == lo { hi } else { lo };
            }
        }
    }
    debug_assert!(out.validate().is_ok(), "KBK broke increasingness: {out:?}");
    Ok(out)
}

/// K-promotion, computed as `KBK_{q-1} o ... o KBK_1` (index 1 applied first).
pub fn k_promotion(t: &IncreasingTableau) -> IncreasingTableau {
    let mut cur = t.clone();
    for i in 1..t.bound as u32 {
        cur = k_bender_knuth(&cur, i).expect("index in range");
    }
    cur
}

/// Inverse of K-promotion: `KBK_1 o ... o KBK_{q-1}`.
pub fn k_promotion_inverse(t: &IncreasingTableau) -> IncreasingTableau {
    let mut cur = t.clone();
    for i in (1..t.bound as u32).rev() {
        cur = k_bender_knuth(&cur, i).expect("index in range");
    }
    cur
}

/// Descent set of a rectangular tableau.
///
/// For `i < q`, `i` is a descent iff some `i` sits in a strictly higher row
/// than some `i+1`; `q` is a descent iff `q-1` is a descent of the
/// K-promotion image.
pub fn descent_set(t: &IncreasingTableau) -> Result<Vec<u32>> {
    if !t.is_rectangular() {
        return Err(Error::Shape("descents are defined for rectangular shapes".into()));
    }
    let mut out = descents_below_bound(t);
    let promoted = k_promotion(t);
    if descents_below_bound(&promoted).contains(&(t.bound as u32 - 1)) {
        out.push(t.bound as u32);
    }
    Ok(out)
}

fn descents_below_bound(t: &IncreasingTableau) -> Vec<u32> {
    let q = t.bound as usize;
    let mut highest = vec![usize::MAX; q + 2]; // highest (smallest) row holding each label
    let mut lowest = vec![0usize; q + 2];
    for r in 0..t.rows() {
        for c in 0..t.row_len(r) {
            let v = t.entry(r, c) as usize;
            highest[v] = highest[v].min(r);
            lowest[v] = lowest[v].max(r);
        }
    }
    (1..q as u32)
        .filter(|&i| {
            let (a, b) = (i as usize, i as usize + 1);
            highest[a] != usize::MAX && highest[b] != usize::MAX && highest[a] < lowest[b]
        })
        .collect()
}

/// Transpose descents: the descent set of the transposed tableau (whose own
/// bound case is again resolved through one K-promotion).
pub fn transpose_descent_set(t: &IncreasingTableau) -> Result<Vec<u32>> {
    if !t.is_rectangular() {
        return Err(Error::Shape("descents are defined for rectangular shapes".into()));
    }
    descent_set(&t.transpose())
}

/// The boxwise-minimal rectangular tableau: entry `i + j - 1` at (1-based)
/// row `i`, column `j`. Requires `q > a + b - 1`.
pub fn minimal_tableau(a: usize, b: usize, q: u8) -> Result<IncreasingTableau> {
    if a == 0 || b == 0 {
        return Err(Error::Shape("empty rectangle".into()));
    }
    if (q as usize) <= a + b - 1 {
        return Err(Error::InvalidTableau(format!(
            "bound {q} too small for the {a}x{b} minimal tableau"
        )));
    }
    let rows: Vec<Vec<u8>> = (0..a)
        .map(|r| (0..b).map(|c| (r + c + 1) as u8).collect())
        .collect();
    IncreasingTableau::new(&rows, q)
}

/// Every tableau of the given shape with entries at most `q`, in
/// lexicographic order of the row-major entry sequence.
pub fn enumerate_tableaux(shape: &[u8], q: u8) -> Result<Vec<IncreasingTableau>> {
    if shape.is_empty() || shape.iter().any(|&l| l == 0) {
        return Err(Error::Shape("shape must be a nonempty partition".into()));
    }
    if shape.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Shape("row lengths must weakly decrease".into()));
    }
    let rows = shape.len();
    let row_len: Vec<usize> = shape.iter().map(|&l| l as usize).collect();
    let col_len: Vec<usize> = (0..row_len[0])
        .map(|c| (0..rows).filter(|&r| c < row_len[r]).count())
        .collect();
    let offsets: Vec<usize> = {
        let mut o = vec![0usize];
        for &l in &row_len {
            o.push(o.last().unwrap() + l);
        }
        o
    };
    let total: usize = row_len.iter().sum();
    let mut entries = vec![0u8; total];
    let mut out = Vec::new();
    fn go(
        pos: usize,
        total: usize,
        rows: usize,
        q: u8,
        row_len: &[usize],
        col_len: &[usize],
        offsets: &[usize],
        entries: &mut Vec<u8>,
        shape: &[u8],
        out: &mut Vec<IncreasingTableau>,
    ) {
        if pos == total {
            out.push(IncreasingTableau {
                shape: shape.to_vec(),
                entries: entries.clone(),
                bound: q,
            });
            return;
        }
        let r = (0..rows).find(|&r| pos < offsets[r + 1]).unwrap();
        let c = pos - offsets[r];
        let left = if c > 0 { entries[pos - 1] } else { 0 };
        let up = if r > 0 { entries[offsets[r - 1] + c] } else { 0 };
        let min = left.max(up) + 1;
        // Strict increase must still be achievable to the row's and column's end.
        let room = (row_len[r] - 1 - c).max(col_len[c] - 1 - r);
        let max = (q as usize).saturating_sub(room);
        for v in min as usize..=max {
            entries[pos] = v as u8;
            go(pos + 1, total, rows, q, row_len, col_len, offsets, entries, shape, out);
        }
        entries[pos] = 0;
    }
    go(0, total, rows, q, &row_len, &col_len, &offsets, &mut entries, shape, &mut out);
    Ok(out)
}

//! Finite posets, products of chains, order ideals, toggles, and rowmotion.
//!
//! A poset is stored by its cover relations (the Hasse diagram). Order
//! ideals are bitsets over element indices. All operations are pure: an
//! input ideal is never mutated.

use crate::bits::{ElementSet, MAX_ELEMENTS};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Specification of a product of chains `n_1 x n_2 x ... x n_k`.
///
/// Elements are the integer tuples `(x_1, ..., x_k)` with `0 <= x_i <= n_i - 1`,
/// ordered componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainProductSpec {
    pub dims: Vec<u32>,
}

impl ChainProductSpec {
    pub fn new(dims: &[u32]) -> ChainProductSpec {
        ChainProductSpec { dims: dims.to_vec() }
    }
}

/// A finite poset given by its cover relations.
#[derive(Debug, Clone)]
pub struct Poset {
    len: usize,
    covers: Vec<(u32, u32)>,
    /// For each element, the elements it covers (immediately below it).
    below: Vec<Vec<u32>>,
    /// For each element, the elements covering it (immediately above it).
    above: Vec<Vec<u32>>,
    /// Rank function with minimum 0 per connected component, if one exists.
    rank: Option<Vec<i64>>,
}

impl Poset {
    /// Builds a poset from explicit cover pairs `(lower, upper)`.
    ///
    /// Validates that the relation is acyclic and is a transitive reduction
    /// (no cover is implied by a chain of two or more covers), and computes
    /// a rank function when one exists.
    pub fn from_covers(len: usize, covers: Vec<(u32, u32)>) -> Result<Poset> {
        if len > MAX_ELEMENTS {
            return Err(Error::InvalidSpec(format!(
                "poset has {len} elements; at most {MAX_ELEMENTS} supported"
            )));
        }
        let mut below = vec![Vec::new(); len];
        let mut above = vec![Vec::new(); len];
        for &(lo, hi) in &covers {
            let (lo_u, hi_u) = (lo as usize, hi as usize);
            if lo_u >= len || hi_u >= len {
                return Err(Error::IndexOutOfRange {
                    index: lo_u.max(hi_u),
                    len,
                });
            }
            if lo == hi {
                return Err(Error::InvalidSpec("cover relates an element to itself".into()));
            }
            above[lo_u].push(hi);
            below[hi_u].push(lo);
        }
        for adj in below.iter_mut().chain(above.iter_mut()) {
            adj.sort_unstable();
            adj.dedup();
        }
        let order = topological_order(len, &above)
            .ok_or_else(|| Error::InvalidSpec("cover relation has a cycle".into()))?;

        // Transitive reduction: a cover reachable by a chain of two or more
        // covers is redundant. DFS per cover is fine at desk scale.
        for &(lo, hi) in &covers {
            if longest_path_len(&above, lo, hi) > 1 {
                return Err(Error::InvalidSpec(format!(
                    "cover ({lo}, {hi}) is implied by a chain of covers"
                )));
            }
        }

        let rank = compute_rank(len, &below, &above, &order);
        Ok(Poset {
            len,
            covers,
            below,
            above,
            rank,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    /// Elements covered by `e`.
    pub fn below(&self, e: usize) -> &[u32] {
        &self.below[e]
    }

    /// Elements covering `e`.
    pub fn above(&self, e: usize) -> &[u32] {
        &self.above[e]
    }

    /// Rank function (minimum 0 on each connected component), if the poset is ranked.
    pub fn rank(&self) -> Option<&[i64]> {
        self.rank.as_deref()
    }

    pub fn rank_of(&self, e: usize) -> Result<i64> {
        self.rank
            .as_ref()
            .map(|r| r[e])
            .ok_or(Error::NotRanked)
    }

    fn check_index(&self, e: usize) -> Result<()> {
        if e >= self.len {
            Err(Error::IndexOutOfRange {
                index: e,
                len: self.len,
            })
        } else {
            Ok(())
        }
    }

    /// A linear extension listing elements bottom-up: by rank ascending when
    /// ranked (index descending within a rank), otherwise a topological order.
    ///
    /// Its reversal, the toggle order realizing rowmotion, is then
    /// rank-descending with index-ascending tie-break.
    pub fn default_linear_extension(&self) -> Vec<u32> {
        let mut ext: Vec<u32> = (0..self.len as u32).collect();
        match &self.rank {
            Some(rank) => {
                ext.sort_by(|&a, &b| {
                    rank[a as usize]
                        .cmp(&rank[b as usize])
                        .then(b.cmp(&a))
                });
            }
            None => {
                ext = topological_order(self.len, &self.above).expect("validated acyclic");
            }
        }
        ext
    }

    /// Checks that `ext` lists every element once, lower before upper.
    pub fn validate_linear_extension(&self, ext: &[u32]) -> Result<()> {
        if ext.len() != self.len {
            return Err(Error::InvalidExtension(format!(
                "length {} != element count {}",
                ext.len(),
                self.len
            )));
        }
        let mut pos = vec![usize::MAX; self.len];
        for (i, &e) in ext.iter().enumerate() {
            let e = e as usize;
            self.check_index(e)?;
            if pos[e] != usize::MAX {
                return Err(Error::InvalidExtension(format!("element {e} repeated")));
            }
            pos[e] = i;
        }
        for &(lo, hi) in &self.covers {
            if pos[lo as usize] > pos[hi as usize] {
                return Err(Error::InvalidExtension(format!(
                    "element {lo} listed after {hi} which covers it"
                )));
            }
        }
        Ok(())
    }

    /// All linear extensions, in lexicographic order of the produced sequences.
    /// Intended for small posets only.
    pub fn all_linear_extensions(&self) -> Vec<Vec<u32>> {
        let mut indegree: Vec<usize> = (0..self.len).map(|e| self.below[e].len()).collect();
        let mut taken = vec![false; self.len];
        let mut current = Vec::with_capacity(self.len);
        let mut out = Vec::new();
        fn go(
            p: &Poset,
            indegree: &mut [usize],
            taken: &mut [bool],
            current: &mut Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if current.len() == p.len {
                out.push(current.clone());
                return;
            }
            for e in 0..p.len {
                if !taken[e] && indegree[e] == 0 {
                    taken[e] = true;
                    current.push(e as u32);
                    for &u in &p.above[e] {
                        indegree[u as usize] -= 1;
                    }
                    go(p, indegree, taken, current, out);
                    for &u in &p.above[e] {
                        indegree[u as usize] += 1;
                    }
                    current.pop();
                    taken[e] = false;
                }
            }
        }
        go(self, &mut indegree, &mut taken, &mut current, &mut out);
        out
    }
}

fn topological_order(len: usize, above: &[Vec<u32>]) -> Option<Vec<u32>> {
    let mut indegree = vec![0usize; len];
    for adj in above {
        for &u in adj {
            indegree[u as usize] += 1;
        }
    }
    let mut stack: Vec<u32> = (0..len as u32)
        .filter(|&e| indegree[e as usize] == 0)
        .collect();
    stack.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::with_capacity(len);
    while let Some(e) = stack.pop() {
        out.push(e);
        for &u in &above[e as usize] {
            indegree[u as usize] -= 1;
            if indegree[u as usize] == 0 {
                stack.push(u);
            }
        }
        stack.sort_unstable_by(|a, b| b.cmp(a));
    }
    (out.len() == len).then_some(out)
}

fn longest_path_len(above: &[Vec<u32>], from: u32, to: u32) -> usize {
    fn go(above: &[Vec<u32>], cur: u32, to: u32, depth: usize, best: &mut usize) {
        if cur == to {
            *best = (*best).max(depth);
            return;
        }
        for &u in &above[cur as usize] {
            go(above, u, to, depth + 1, best);
        }
    }
    let mut best = 0;
    go(above, from, to, 0, &mut best);
    best
}

/// Longest-path rank per component, validated so every cover raises rank by 1.
fn compute_rank(
    len: usize,
    below: &[Vec<u32>],
    above: &[Vec<u32>],
    topo: &[u32],
) -> Option<Vec<i64>> {
    let mut rank = vec![0i64; len];
    for &e in topo {
        let e = e as usize;
        rank[e] = below[e]
            .iter()
            .map(|&d| rank[d as usize] + 1)
            .max()
            .unwrap_or(0);
    }
    for (e, adj) in above.iter().enumerate() {
        for &u in adj {
            if rank[u as usize] != rank[e] + 1 {
                return None;
            }
        }
    }
    // Normalize each connected component so its minimum rank is 0.
    let mut comp = vec![usize::MAX; len];
    let mut ncomp = 0;
    for start in 0..len {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = ncomp;
        while let Some(e) = stack.pop() {
            for &nb in below[e].iter().chain(above[e].iter()) {
                let nb = nb as usize;
                if comp[nb] == usize::MAX {
                    comp[nb] = ncomp;
                    stack.push(nb);
                }
            }
        }
        ncomp += 1;
    }
    let mut min_rank = vec![i64::MAX; ncomp];
    for e in 0..len {
        min_rank[comp[e]] = min_rank[comp[e]].min(rank[e]);
    }
    for e in 0..len {
        rank[e] -= min_rank[comp[e]];
    }
    Some(rank)
}

/// A product of chains together with its poset and the tuple coordinates of
/// each element.
#[derive(Debug, Clone)]
pub struct ChainProduct {
    spec: ChainProductSpec,
    poset: Poset,
    coords: Vec<Vec<u32>>,
}

impl ChainProduct {
    /// Builds the poset `n_1 x ... x n_k` with componentwise order.
    ///
    /// Element indexing is colexicographic on tuples: the first coordinate
    /// varies fastest, so `index = x_1 + x_2*n_1 + x_3*n_1*n_2 + ...`. This
    /// layout is fixed so bitset values are reproducible across runs.
    pub fn new(spec: ChainProductSpec) -> Result<ChainProduct> {
        if spec.dims.is_empty() {
            return Err(Error::InvalidSpec("empty dims list".into()));
        }
        if spec.dims.iter().any(|&d| d == 0) {
            return Err(Error::InvalidSpec("all dims must be >= 1".into()));
        }
        let len: usize = spec
            .dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize))
            .ok_or_else(|| Error::InvalidSpec("element count overflow".into()))?;
        if len > MAX_ELEMENTS {
            return Err(Error::InvalidSpec(format!(
                "product has {len} elements; at most {MAX_ELEMENTS} supported"
            )));
        }
        let k = spec.dims.len();
        let mut coords = Vec::with_capacity(len);
        let mut cur = vec![0u32; k];
        for _ in 0..len {
            coords.push(cur.clone());
            for i in 0..k {
                if cur[i] + 1 < spec.dims[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
            }
        }
        let mut strides = vec![1usize; k];
        for i in 1..k {
            strides[i] = strides[i - 1] * spec.dims[i - 1] as usize;
        }
        let mut covers = Vec::new();
        for (idx, tuple) in coords.iter().enumerate() {
            for i in 0..k {
                if tuple[i] + 1 < spec.dims[i] {
                    covers.push((idx as u32, (idx + strides[i]) as u32));
                }
            }
        }
        let poset = Poset::from_covers(len, covers)?;
        Ok(ChainProduct { spec, poset, coords })
    }

    pub fn dims(&self) -> &[u32] {
        &self.spec.dims
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn coord(&self, e: usize) -> &[u32] {
        &self.coords[e]
    }

    pub fn index_of(&self, tuple: &[u32]) -> usize {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (i, &x) in tuple.iter().enumerate() {
            debug_assert!(x < self.spec.dims[i]);
            idx += x as usize * stride;
            stride *= self.spec.dims[i] as usize;
        }
        idx
    }
}

/// Creates the chain-product poset for `spec`.
pub fn make_chain_product(spec: ChainProductSpec) -> Result<ChainProduct> {
    ChainProduct::new(spec)
}

/// A downward-closed subset of a poset, stored as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrderIdeal {
    set: ElementSet,
}

impl OrderIdeal {
    pub const EMPTY: OrderIdeal = OrderIdeal {
        set: ElementSet::EMPTY,
    };

    pub fn full(p: &Poset) -> OrderIdeal {
        OrderIdeal {
            set: ElementSet::from_indices(0..p.len()),
        }
    }

    /// Builds an ideal from member indices, checking downward closure.
    pub fn from_members<I: IntoIterator<Item = usize>>(p: &Poset, members: I) -> Result<OrderIdeal> {
        let mut set = ElementSet::EMPTY;
        for e in members {
            if e >= p.len() {
                return Err(Error::IndexOutOfRange { index: e, len: p.len() });
            }
            set.insert(e);
        }
        let ideal = OrderIdeal { set };
        if !ideal.is_downward_closed(p) {
            return Err(Error::InvalidSpec("subset is not downward closed".into()));
        }
        Ok(ideal)
    }

    pub fn contains(&self, e: usize) -> bool {
        self.set.contains(e)
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn members(&self) -> Vec<usize> {
        self.set.iter().collect()
    }

    pub fn bits(&self) -> &ElementSet {
        &self.set
    }

    pub fn is_downward_closed(&self, p: &Poset) -> bool {
        self.set
            .iter()
            .all(|e| p.below(e).iter().all(|&d| self.set.contains(d as usize)))
    }
}

impl std::fmt::Debug for OrderIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrderIdeal{:?}", self.set)
    }
}

impl Serialize for OrderIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members().serialize(s)
    }
}

/// Toggles element `e` in ideal `i`: adds or removes it when the result is
/// still an ideal, otherwise returns the ideal unchanged.
pub fn toggle(p: &Poset, i: &OrderIdeal, e: usize) -> Result<OrderIdeal> {
    p.check_index(e)?;
    Ok(toggle_unchecked(p, i, e))
}

#[inline]
pub(crate) fn toggle_unchecked(p: &Poset, i: &OrderIdeal, e: usize) -> OrderIdeal {
    let mut out = *i;
    if i.set.contains(e) {
        if p.above(e).iter().all(|&u| !i.set.contains(u as usize)) {
            out.set.remove(e);
        }
    } else if p.below(e).iter().all(|&d| i.set.contains(d as usize)) {
        out.set.insert(e);
    }
    out
}

/// Rowmotion: the ideal generated downward by the minimal elements of the
/// complement of `i`.
pub fn rowmotion(p: &Poset, i: &OrderIdeal) -> OrderIdeal {
    let mut out = ElementSet::EMPTY;
    let mut stack = Vec::new();
    for e in 0..p.len() {
        // e is minimal in the complement iff e is absent and everything it
        // covers is present.
        if !i.set.contains(e) && p.below(e).iter().all(|&d| i.set.contains(d as usize)) {
            stack.push(e);
        }
    }
    while let Some(e) = stack.pop() {
        if out.contains(e) {
            continue;
        }
        out.insert(e);
        for &d in p.below(e) {
            stack.push(d as usize);
        }
    }
    OrderIdeal { set: out }
}

/// Rowmotion computed by toggling every element once, in the reverse order
/// of the given linear extension.
pub fn rowmotion_via_toggles(p: &Poset, i: &OrderIdeal, ext: &[u32]) -> Result<OrderIdeal> {
    p.validate_linear_extension(ext)?;
    let mut cur = *i;
    for &e in ext.iter().rev() {
        cur = toggle_unchecked(p, &cur, e as usize);
    }
    Ok(cur)
}

/// A word in the toggle group: element indices in composition order, the
/// leftmost factor applied last (matching right-to-left operator products).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ToggleWord(pub Vec<u32>);

impl ToggleWord {
    /// The word applying `indices[0]` first, `indices.last()` last.
    pub fn from_application_order(mut indices: Vec<u32>) -> ToggleWord {
        indices.reverse();
        ToggleWord(indices)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Inverse word. Toggles are involutions, so this is just the reversal.
    pub fn inverse(&self) -> ToggleWord {
        let mut w = self.0.clone();
        w.reverse();
        ToggleWord(w)
    }
}

/// Applies a toggle word to an ideal (rightmost stored factor first).
pub fn apply_word(p: &Poset, i: &OrderIdeal, w: &ToggleWord) -> Result<OrderIdeal> {
    for &e in &w.0 {
        p.check_index(e as usize)?;
    }
    let mut cur = *i;
    for &e in w.0.iter().rev() {
        cur = toggle_unchecked(p, &cur, e as usize);
    }
    Ok(cur)
}

/// Enumerates every order ideal of `p` exactly once.
///
/// Order: breadth-first closure from the empty ideal (so ideals appear by
/// cardinality), ties within a level broken by bitset value. Errors once the
/// count exceeds `cap`.
pub fn enumerate_ideals(p: &Poset, cap: usize) -> Result<Vec<OrderIdeal>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut level = vec![OrderIdeal::EMPTY];
    seen.insert(OrderIdeal::EMPTY.set);
    while !level.is_empty() {
        out.extend(level.iter().copied());
        if out.len() > cap {
            return Err(Error::ResourceLimit { cap });
        }
        let mut next = std::collections::BTreeSet::new();
        for ideal in &level {
            for e in 0..p.len() {
                if !ideal.set.contains(e)
                    && p.below(e).iter().all(|&d| ideal.set.contains(d as usize))
                {
                    let mut bigger = *ideal;
                    bigger.set.insert(e);
                    if seen.insert(bigger.set) {
                        next.insert(bigger.set);
                    }
                }
            }
        }
        level = next.into_iter().map(|set| OrderIdeal { set }).collect();
    }
    Ok(out)
}

/// JSON form of a poset: either a chain product or explicit covers.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PosetJson {
    ChainProduct { dims: Vec<u32> },
    Explicit { elements: usize, covers: Vec<(u32, u32)> },
}

impl PosetJson {
    pub fn build(&self) -> Result<Poset> {
        match self {
            PosetJson::ChainProduct { dims } => {
                Ok(ChainProduct::new(ChainProductSpec::new(dims))?.poset.clone())
            }
            PosetJson::Explicit { elements, covers } => Poset::from_covers(*elements, covers.clone()),
        }
    }
}

//! Lattice projections, affine hyperplane toggles, the generalized promotion
//! family, gyration, and a constructive conjugator between any two members
//! of the family.
//!
//! Composition convention, used everywhere in this crate: a product of
//! operators written left-to-right applies the *rightmost* factor first.
//! So `promotion` applies the hyperplane toggle at the top of the support
//! first and sweeps down.

use crate::poset::{toggle_unchecked, OrderIdeal, Poset, ToggleWord};
use crate::poset::ChainProduct;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// An order-, rank-, and cover-preserving map from a ranked poset into
/// `Z^n` (coordinatewise order, rank = coordinate sum).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeProjection {
    dim: usize,
    coords: Vec<Vec<i64>>,
}

impl LatticeProjection {
    /// Validates cover preservation: along every cover the image moves by
    /// exactly one standard unit vector. Order and rank preservation (up to
    /// a constant shift) follow.
    pub fn new(p: &Poset, dim: usize, coords: Vec<Vec<i64>>) -> Result<LatticeProjection> {
        if coords.len() != p.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinate vectors for {} elements",
                coords.len(),
                p.len()
            )));
        }
        if coords.iter().any(|v| v.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "every coordinate vector must have length {dim}"
            )));
        }
        for &(lo, hi) in p.covers() {
            let a = &coords[lo as usize];
            let b = &coords[hi as usize];
            let mut plus_one = 0usize;
            let mut other = 0usize;
            for j in 0..dim {
                match b[j] - a[j] {
                    0 => {}
                    1 => plus_one += 1,
                    _ => other += 1,
                }
            }
            if plus_one != 1 || other != 0 {
                return Err(Error::InvalidSpec(format!(
                    "cover ({lo},{hi}) does not map to a unit step"
                )));
            }
        }
        Ok(LatticeProjection { dim, coords })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coord(&self, e: usize) -> &[i64] {
        &self.coords[e]
    }
}

#[derive(Serialize, Deserialize)]
struct ProjectionJson {
    n: usize,
    coords: Vec<Vec<i64>>,
}

impl Serialize for LatticeProjection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ProjectionJson {
            n: self.dim,
            coords: self.coords.clone(),
        }
        .serialize(s)
    }
}

/// The identity projection of a chain product: each element maps to its own
/// integer tuple.
pub fn identity_projection(cp: &ChainProduct) -> LatticeProjection {
    let coords = (0..cp.poset().len())
        .map(|e| cp.coord(e).iter().map(|&x| x as i64).collect())
        .collect();
    LatticeProjection::new(cp.poset(), cp.dims().len(), coords)
        .expect("identity projection of a chain product is cover-preserving")
}

/// The 2-dimensional projection `x -> (rank(x), 0)` of any ranked poset.
pub fn rank_projection(p: &Poset) -> Result<LatticeProjection> {
    let rank = p.rank().ok_or(Error::NotRanked)?;
    let coords = rank.iter().map(|&r| vec![r, 0]).collect();
    LatticeProjection::new(p, 2, coords)
}

/// A direction vector with all entries in {+1, -1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Direction(pub Vec<i8>);

impl Direction {
    pub fn new(signs: &[i8]) -> Result<Direction> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidSpec("direction entries must be +1 or -1".into()));
        }
        Ok(Direction(signs.to_vec()))
    }

    pub fn negate(&self) -> Direction {
        Direction(self.0.iter().map(|&s| -s).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The hyperplane toggles of a triple (poset, projection, direction):
/// level `i` holds the elements `x` with `<proj(x), v> = i`.
#[derive(Debug, Clone)]
pub struct HyperplaneToggles {
    lo: i64,
    hi: i64,
    /// Elements per level, ascending element index, for levels `lo..=hi`.
    levels: Vec<Vec<u32>>,
}

impl HyperplaneToggles {
    pub fn build(p: &Poset, proj: &LatticeProjection, v: &Direction) -> Result<HyperplaneToggles> {
        if v.len() != proj.dim() {
            return Err(Error::DimensionMismatch(format!(
                "direction has length {}, projection dimension is {}",
                v.len(),
                proj.dim()
            )));
        }
        if p.is_empty() {
            return Err(Error::InvalidSpec("empty poset has no support".into()));
        }
        let level_of = |e: usize| -> i64 {
            proj.coord(e)
                .iter()
                .zip(&v.0)
                .map(|(&c, &s)| c * s as i64)
                .sum()
        };
        let lo = (0..p.len()).map(level_of).min().unwrap();
        let hi = (0..p.len()).map(level_of).max().unwrap();
        let mut levels = vec![Vec::new(); (hi - lo + 1) as usize];
        for e in 0..p.len() {
            levels[(level_of(e) - lo) as usize].push(e as u32);
        }
        // Elements sharing a hyperplane never form a cover, which is what
        // makes the simultaneous toggle well-defined.
        for level in &levels {
            for &e in level {
                for &u in p.above(e as usize) {
                    if level.binary_search(&u).is_ok() {
                        return Err(Error::ContractViolation(format!(
                            "elements {e} and {u} share a hyperplane but form a cover"
                        )));
                    }
                }
            }
        }
        Ok(HyperplaneToggles { lo, hi, levels })
    }

    /// The support interval `[lo, hi]`.
    pub fn support(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn elements_at(&self, i: i64) -> &[u32] {
        if i < self.lo || i > self.hi {
            &[]
        } else {
            &self.levels[(i - self.lo) as usize]
        }
    }

    /// Toggles every element on hyperplane `i` (identity for empty levels).
    pub fn toggle_level(&self, p: &Poset, i: i64, ideal: &OrderIdeal) -> OrderIdeal {
        let mut cur = *ideal;
        for &e in self.elements_at(i) {
            cur = toggle_unchecked(p, &cur, e as usize);
        }
        cur
    }
}

/// Smallest interval of hyperplane levels inhabited by `(p, proj, v)`.
pub fn support(p: &Poset, proj: &LatticeProjection, v: &Direction) -> Result<(i64, i64)> {
    Ok(HyperplaneToggles::build(p, proj, v)?.support())
}

/// Applies a single hyperplane toggle.
pub fn hyperplane_toggle(
    p: &Poset,
    proj: &LatticeProjection,
    v: &Direction,
    i: i64,
    ideal: &OrderIdeal,
) -> Result<OrderIdeal> {
    Ok(HyperplaneToggles::build(p, proj, v)?.toggle_level(p, i, ideal))
}

/// Promotion with respect to a projection and direction: hyperplane toggles
/// applied from the top of the support down.
pub fn promotion(
    p: &Poset,
    proj: &LatticeProjection,
    v: &Direction,
    ideal: &OrderIdeal,
) -> Result<OrderIdeal> {
    let fam = HyperplaneToggles::build(p, proj, v)?;
    Ok(promotion_with(&fam, p, ideal))
}

pub fn promotion_with(fam: &HyperplaneToggles, p: &Poset, ideal: &OrderIdeal) -> OrderIdeal {
    let mut cur = *ideal;
    let (lo, hi) = fam.support();
    let mut i = hi;
    while i >= lo {
        cur = fam.toggle_level(p, i, &cur);
        i -= 1;
    }
    cur
}

/// A bijection of the support interval `[lo, lo + values.len() - 1]`:
/// `values[k]` is the hyperplane index written at position `lo + k` of the
/// toggle product. The last position is applied first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOrder {
    pub lo: i64,
    pub values: Vec<i64>,
}

impl SweepOrder {
    pub fn identity(lo: i64, hi: i64) -> SweepOrder {
        SweepOrder {
            lo,
            values: (lo..=hi).collect(),
        }
    }

    pub fn validate(&self, support: (i64, i64)) -> Result<()> {
        let (lo, hi) = support;
        if self.lo != lo || self.values.len() as i64 != hi - lo + 1 {
            return Err(Error::InvalidSweep(format!(
                "sweep domain [{}, {}] does not match support [{lo}, {hi}]",
                self.lo,
                self.lo + self.values.len() as i64 - 1
            )));
        }
        let mut seen = vec![false; self.values.len()];
        for &val in &self.values {
            if val < lo || val > hi {
                return Err(Error::InvalidSweep(format!("value {val} outside support")));
            }
            let k = (val - lo) as usize;
            if seen[k] {
                return Err(Error::InvalidSweep(format!("value {val} repeated")));
            }
            seen[k] = true;
        }
        Ok(())
    }

    /// The canonical parity-split sweep: odd hyperplane indices occupy the
    /// early positions and even indices the late ones (each block ascending),
    /// so that even hyperplanes are toggled first. The midpoint position
    /// takes whichever parity is left over.
    pub fn parity_split(lo: i64, hi: i64) -> SweepOrder {
        let odd: Vec<i64> = (lo..=hi).filter(|i| i.rem_euclid(2) == 1).collect();
        let even: Vec<i64> = (lo..=hi).filter(|i| i.rem_euclid(2) == 0).collect();
        let mut values = odd;
        values.extend(even);
        SweepOrder { lo, values }
    }
}

/// Promotion with the hyperplane toggles applied in the order prescribed by
/// the sweep: the value at the last position first, the first position last.
pub fn promotion_sigma(
    p: &Poset,
    proj: &LatticeProjection,
    v: &Direction,
    sweep: &SweepOrder,
    ideal: &OrderIdeal,
) -> Result<OrderIdeal> {
    let fam = HyperplaneToggles::build(p, proj, v)?;
    sweep.validate(fam.support())?;
    Ok(promotion_sigma_with(&fam, p, sweep, ideal))
}

pub fn promotion_sigma_with(
    fam: &HyperplaneToggles,
    p: &Poset,
    sweep: &SweepOrder,
    ideal: &OrderIdeal,
) -> OrderIdeal {
    let mut cur = *ideal;
    for &i in sweep.values.iter().rev() {
        cur = fam.toggle_level(p, i, &cur);
    }
    cur
}

/// Gyration: toggle all even-rank elements, then all odd-rank elements.
/// Rank parity is taken after normalizing the minimum rank to 0.
pub fn gyration(p: &Poset, ideal: &OrderIdeal) -> Result<OrderIdeal> {
    let rank = p.rank().ok_or(Error::NotRanked)?;
    let mut cur = *ideal;
    for parity in [0, 1] {
        for e in 0..p.len() {
            if rank[e].rem_euclid(2) == parity {
                cur = toggle_unchecked(p, &cur, e);
            }
        }
    }
    Ok(cur)
}

/// Certificate move: conjugating a product by its first-applied or
/// last-applied factor rotates that factor to the other end.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flip {
    /// Level applied last among its neighbors becomes applied first.
    SinkToSource(i64),
    /// Level applied first among its neighbors becomes applied last.
    SourceToSink(i64),
}

impl Flip {
    fn level(self) -> i64 {
        match self {
            Flip::SinkToSource(l) | Flip::SourceToSink(l) => l,
        }
    }
}

/// Orientation of the adjacency path of support levels: bit `k` is 1 iff
/// level `lo + k` is applied before level `lo + k + 1`. Two sweeps that only
/// reorder commuting (non-adjacent) toggles share an orientation.
fn orientation_of(sweep: &SweepOrder) -> u64 {
    let m = sweep.values.len();
    assert!(m <= 64, "support too large for conjugator search");
    // Application time: position hi applied first.
    let mut time = vec![0usize; m];
    for (pos, &val) in sweep.values.iter().enumerate() {
        time[(val - sweep.lo) as usize] = m - pos;
    }
    let mut bits = 0u64;
    for k in 0..m.saturating_sub(1) {
        if time[k] < time[k + 1] {
            bits |= 1 << k;
        }
    }
    bits
}

fn target_orientation(lo: i64, m: usize) -> u64 {
    // Edge between levels lo+k and lo+k+1: the even one is applied first.
    let mut bits = 0u64;
    for k in 0..m.saturating_sub(1) {
        if (lo + k as i64).rem_euclid(2) == 0 {
            bits |= 1 << k;
        }
    }
    bits
}

/// BFS over orientations, flipping one source or sink level at a time,
/// from the sweep's orientation to the parity-split orientation.
fn flips_to_parity_form(sweep: &SweepOrder) -> Vec<Flip> {
    let m = sweep.values.len();
    let lo = sweep.lo;
    let start = orientation_of(sweep);
    let goal = target_orientation(lo, m);
    if start == goal {
        return Vec::new();
    }
    let edge_mask = |k: usize| -> u64 {
        let mut mask = 0u64;
        if k > 0 {
            mask |= 1 << (k - 1);
        }
        if k + 1 < m {
            mask |= 1 << k;
        }
        mask
    };
    // Level k is a sink iff it is applied after all neighbors: left edge bit
    // set (k-1 before k) and right edge bit clear (k after k+1); a source is
    // the reverse.
    let is_sink = |bits: u64, k: usize| -> bool {
        (k == 0 || bits >> (k - 1) & 1 == 1) && (k + 1 >= m || bits >> k & 1 == 0)
    };
    let is_source = |bits: u64, k: usize| -> bool {
        (k == 0 || bits >> (k - 1) & 1 == 0) && (k + 1 >= m || bits >> k & 1 == 1)
    };
    let mut prev: std::collections::HashMap<u64, (u64, Flip)> = std::collections::HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start);
    prev.insert(start, (start, Flip::SinkToSource(0))); // sentinel
    while let Some(bits) = queue.pop_front() {
        if bits == goal {
            break;
        }
        for k in 0..m {
            let level = lo + k as i64;
            let moves = [
                (is_sink(bits, k), Flip::SinkToSource(level)),
                (is_source(bits, k), Flip::SourceToSink(level)),
            ];
            for (legal, mv) in moves {
                if !legal {
                    continue;
                }
                let next = bits ^ edge_mask(k);
                if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(next) {
                    e.insert((bits, mv));
                    queue.push_back(next);
                }
            }
        }
    }
    let mut path = Vec::new();
    let mut cur = goal;
    while cur != start {
        let (before, mv) = prev[&cur];
        path.push(mv);
        cur = before;
    }
    path.reverse();
    path
}

/// Builds a toggle word `D` with `D . Pro_sigma . D^{-1} = Pro_tau` pointwise
/// (rightmost factor applied first), where `Pro_sigma` is the sweep `sv` of
/// direction `v` and `Pro_tau` the sweep `sw` of direction `w`.
///
/// Both products are routed through a common normal form, the parity-split
/// product that toggles all even-sum hyperplanes first. Each certificate
/// step conjugates by one hyperplane toggle, so the word is the
/// concatenation of expanded hyperplane toggles.
pub fn conjugator(
    p: &Poset,
    proj: &LatticeProjection,
    v: &Direction,
    sweep_v: &SweepOrder,
    w: &Direction,
    sweep_w: &SweepOrder,
) -> Result<ToggleWord> {
    let fam_v = HyperplaneToggles::build(p, proj, v)?;
    let fam_w = HyperplaneToggles::build(p, proj, w)?;
    sweep_v.validate(fam_v.support())?;
    sweep_w.validate(fam_w.support())?;
    if v == w && sweep_v == sweep_w {
        return Ok(ToggleWord::default());
    }
    let flips_v = flips_to_parity_form(sweep_v);
    let flips_w = flips_to_parity_form(sweep_w);
    // N = W_v Pro_sigma W_v^{-1} = W_w Pro_tau W_w^{-1}, where W applies its
    // flips in discovery order. Hence D = W_w^{-1} W_v: apply W_v's flips
    // forward, then W_w's flips reversed.
    let mut application: Vec<u32> = Vec::new();
    for flip in &flips_v {
        application.extend_from_slice(fam_v.elements_at(flip.level()));
    }
    for flip in flips_w.iter().rev() {
        application.extend_from_slice(fam_w.elements_at(flip.level()));
    }
    Ok(ToggleWord::from_application_order(application))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{
        apply_word, enumerate_ideals, rowmotion, ChainProduct, ChainProductSpec,
    };

    fn cp(dims: &[u32]) -> ChainProduct {
        ChainProduct::new(ChainProductSpec::new(dims)).unwrap()
    }

    #[test]
    fn identity_projection_is_the_identity_on_tuples() {
        let b = cp(&[2, 2, 2]);
        let proj = identity_projection(&b);
        let e = b.index_of(&[1, 0, 1]);
        assert_eq!(proj.coord(e), &[1, 0, 1]);
        let b = cp(&[3, 2, 3]);
        let proj = identity_projection(&b);
        let e = b.index_of(&[2, 1, 0]);
        assert_eq!(proj.coord(e).iter().sum::<i64>(), 3);
        assert_eq!(b.poset().rank_of(e).unwrap(), 3);
    }

    #[test]
    fn rank_projection_examples() {
        let two = cp(&[2]);
        let proj = rank_projection(two.poset()).unwrap();
        assert_eq!(proj.coord(0), &[0, 0]);
        assert_eq!(proj.coord(1), &[1, 0]);
        let cube = cp(&[2, 2, 2]);
        let proj = rank_projection(cube.poset()).unwrap();
        for e in 0..8 {
            let rk = cube.poset().rank_of(e).unwrap();
            assert_eq!(proj.coord(e), &[rk, 0]);
            if rk == 1 {
                assert_eq!(proj.coord(e), &[1, 0]);
            }
        }
    }

    #[test]
    fn rank_projection_requires_ranked_poset() {
        // Element 2 sits at the top of both a length-2 and a length-1 chain,
        // so no rank function exists.
        let p = crate::poset::Poset::from_covers(4, vec![(0, 1), (1, 2), (3, 2)]).unwrap();
        assert!(p.rank().is_none());
        assert!(matches!(rank_projection(&p), Err(Error::NotRanked)));
    }

    #[test]
    fn support_examples() {
        let b = cp(&[3, 2, 3]);
        let proj = identity_projection(&b);
        let v = Direction::new(&[1, 1, -1]).unwrap();
        assert_eq!(support(b.poset(), &proj, &v).unwrap(), (-2, 3));

        let ab = cp(&[3, 4]);
        let proj = identity_projection(&ab);
        let v = Direction::new(&[1, 1]).unwrap();
        assert_eq!(support(ab.poset(), &proj, &v).unwrap(), (0, 5));

        let cube = cp(&[2, 2, 2]);
        let proj = identity_projection(&cube);
        let v = Direction::new(&[1, 1, 1]).unwrap();
        assert_eq!(support(cube.poset(), &proj, &v).unwrap(), (0, 3));
    }

    #[test]
    fn support_dimension_mismatch() {
        let b = cp(&[2, 2]);
        let proj = identity_projection(&b);
        let v = Direction::new(&[1, 1, -1]).unwrap();
        assert!(support(b.poset(), &proj, &v).is_err());
    }

    #[test]
    fn hyperplane_toggle_cases() {
        let b = cp(&[2, 2]);
        let p = b.poset();
        let proj = identity_projection(&b);
        let v = Direction::new(&[1, 1]).unwrap();
        // Outside the support: identity.
        for ideal in enumerate_ideals(p, 64).unwrap() {
            assert_eq!(hyperplane_toggle(p, &proj, &v, 99, &ideal).unwrap(), ideal);
        }
        // Involution on every level and every ideal.
        for ideal in enumerate_ideals(p, 64).unwrap() {
            for i in 0..=2 {
                let once = hyperplane_toggle(p, &proj, &v, i, &ideal).unwrap();
                let twice = hyperplane_toggle(p, &proj, &v, i, &once).unwrap();
                assert_eq!(twice, ideal);
            }
        }
        // Single-element hyperplane equals the element toggle.
        let got = hyperplane_toggle(p, &proj, &v, 0, &OrderIdeal::EMPTY).unwrap();
        assert_eq!(got.members(), vec![b.index_of(&[0, 0])]);
    }

    #[test]
    fn distant_hyperplane_toggles_commute() {
        let b = cp(&[2, 2, 2]);
        let p = b.poset();
        let proj = identity_projection(&b);
        for signs in [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]] {
            let v = Direction::new(&signs).unwrap();
            let fam = HyperplaneToggles::build(p, &proj, &v).unwrap();
            let (lo, hi) = fam.support();
            for i in lo..=hi {
                for j in lo..=hi {
                    if (i - j).abs() <= 1 {
                        continue;
                    }
                    for ideal in enumerate_ideals(p, 64).unwrap() {
                        let a = fam.toggle_level(p, j, &fam.toggle_level(p, i, &ideal));
                        let b2 = fam.toggle_level(p, i, &fam.toggle_level(p, j, &ideal));
                        assert_eq!(a, b2);
                    }
                }
            }
        }
    }

    #[test]
    fn promotion_all_ones_is_rowmotion() {
        let b = cp(&[2, 2, 2]);
        let p = b.poset();
        let proj = identity_projection(&b);
        let v = Direction::new(&[1, 1, 1]).unwrap();
        for ideal in enumerate_ideals(p, 64).unwrap() {
            assert_eq!(promotion(p, &proj, &v, &ideal).unwrap(), rowmotion(p, &ideal));
        }
    }

    #[test]
    fn promotion_single_element_poset() {
        let b = cp(&[1]);
        let p = b.poset();
        let proj = identity_projection(&b);
        let v = Direction::new(&[1]).unwrap();
        let got = promotion(p, &proj, &v, &OrderIdeal::EMPTY).unwrap();
        assert_eq!(got, OrderIdeal::full(p));
        let v = Direction::new(&[-1]).unwrap();
        let got = promotion(p, &proj, &v, &OrderIdeal::EMPTY).unwrap();
        assert_eq!(got, OrderIdeal::full(p));
    }

    #[test]
    fn promotion_negated_direction_is_inverse() {
        let b = cp(&[2, 3, 2]);
        let p = b.poset();
        let proj = identity_projection(&b);
        for signs in [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]] {
            let v = Direction::new(&signs).unwrap();
            let back = v.negate();
            for ideal in enumerate_ideals(p, 256).unwrap() {
                let fwd = promotion(p, &proj, &v, &ideal).unwrap();
                assert_eq!(promotion(p, &proj, &back, &fwd).unwrap(), ideal);
            }
        }
    }

    #[test]
    fn promotion_sigma_identity_sweep_matches_promotion() {
        let b = cp(&[2, 2, 2]);
        let p = b.poset();
        let proj = identity_projection(&b);
        let v = Direction::new(&[1, 1, -1]).unwrap();
        let fam = HyperplaneToggles::build(p, &proj, &v).unwrap();
        let (lo, hi) = fam.support();
        let sweep = SweepOrder::identity(lo, hi);
        for ideal in enumerate_ideals(p, 64).unwrap() {
            assert_eq!(
                promotion_sigma(p, &proj, &v, &sweep, &ideal).unwrap(),
                promotion(p, &proj, &v, &ideal).unwrap()
            );
        }
    }

    #[test]
    fn promotion_sigma_rejects_bad_sweeps() {
        let b = cp(&[2, 2]);
        let p = b.poset();
        let proj = identity_projection(&b);
        let v = Direction::new(&[1, 1]).unwrap();
        let bad = SweepOrder {
            lo: 0,
            values: vec![0, 0, 2],
        };
        assert!(promotion_sigma(p, &proj, &v, &bad, &OrderIdeal::EMPTY).is_err());
        let bad = SweepOrder {
            lo: 1,
            values: vec![1, 2],
        };
        assert!(promotion_sigma(p, &proj, &v, &bad, &OrderIdeal::EMPTY).is_err());
    }

    #[test]
    fn parity_split_sweep_is_gyration() {
        for dims in [vec![2u32, 2, 2], vec![2, 3, 2], vec![3, 3]] {
            let b = cp(&dims);
            let p = b.poset();
            let proj = identity_projection(&b);
            let mut signs = vec![1i8; dims.len()];
            signs[dims.len() - 1] = -1;
            for v in [Direction::new(&vec![1; dims.len()]).unwrap(), Direction::new(&signs).unwrap()]
            {
                let fam = HyperplaneToggles::build(p, &proj, &v).unwrap();
                let (lo, hi) = fam.support();
                let sweep = SweepOrder::parity_split(lo, hi);
                for ideal in enumerate_ideals(p, 1024).unwrap() {
                    assert_eq!(
                        promotion_sigma(p, &proj, &v, &sweep, &ideal).unwrap(),
                        gyration(p, &ideal).unwrap(),
                        "dims {dims:?} v {v:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn gyration_two_chain() {
        let b = cp(&[2]);
        let p = b.poset();
        assert_eq!(
            gyration(p, &OrderIdeal::EMPTY).unwrap(),
            OrderIdeal::full(p)
        );
        assert_eq!(
            gyration(p, &OrderIdeal::full(p)).unwrap().members(),
            vec![0]
        );
    }

    #[test]
    fn conjugator_trivial_when_inputs_match() {
        let b = cp(&[2, 2]);
        let p = b.poset();
        let proj = identity_projection(&b);
        let v = Direction::new(&[1, 1]).unwrap();
        let fam = HyperplaneToggles::build(p, &proj, &v).unwrap();
        let (lo, hi) = fam.support();
        let sweep = SweepOrder::identity(lo, hi);
        let word = conjugator(p, &proj, &v, &sweep, &v, &sweep).unwrap();
        assert!(word.is_empty());
    }

    fn check_conjugation(
        b: &ChainProduct,
        proj: &LatticeProjection,
        v: &Direction,
        sv: &SweepOrder,
        w: &Direction,
        sw: &SweepOrder,
    ) {
        let p = b.poset();
        let word = conjugator(p, proj, v, sv, w, sw).unwrap();
        let inv = word.inverse();
        for ideal in enumerate_ideals(p, 1 << 14).unwrap() {
            let lhs = {
                let x = apply_word(p, &ideal, &inv).unwrap();
                let x = promotion_sigma(p, proj, v, sv, &x).unwrap();
                apply_word(p, &x, &word).unwrap()
            };
            let rhs = promotion_sigma(p, proj, w, sw, &ideal).unwrap();
            assert_eq!(lhs, rhs, "conjugation failed for {v:?}/{sv:?} vs {w:?}/{sw:?}");
        }
    }

    #[test]
    fn conjugator_rank_projection_2x2() {
        let b = cp(&[2, 2]);
        let proj = rank_projection(b.poset()).unwrap();
        let v = Direction::new(&[1, 1]).unwrap();
        let w = Direction::new(&[1, -1]).unwrap();
        let fam_v = HyperplaneToggles::build(b.poset(), &proj, &v).unwrap();
        let fam_w = HyperplaneToggles::build(b.poset(), &proj, &w).unwrap();
        let sv = SweepOrder::identity(fam_v.support().0, fam_v.support().1);
        let sw = SweepOrder::identity(fam_w.support().0, fam_w.support().1);
        check_conjugation(&b, &proj, &v, &sv, &w, &sw);
    }

    #[test]
    fn conjugator_row_to_mixed_direction_cube() {
        let b = cp(&[2, 2, 2]);
        let proj = identity_projection(&b);
        let v = Direction::new(&[1, 1, 1]).unwrap();
        let w = Direction::new(&[1, 1, -1]).unwrap();
        let p = b.poset();
        let fam_v = HyperplaneToggles::build(p, &proj, &v).unwrap();
        let fam_w = HyperplaneToggles::build(p, &proj, &w).unwrap();
        let sv = SweepOrder::identity(fam_v.support().0, fam_v.support().1);
        let sw = SweepOrder::identity(fam_w.support().0, fam_w.support().1);
        check_conjugation(&b, &proj, &v, &sv, &w, &sw);

        // Also certify against an arbitrary reordering of the target sweep.
        let mut shuffled = sw.clone();
        shuffled.values.reverse();
        check_conjugation(&b, &proj, &v, &sv, &w, &shuffled);
        let gyr = SweepOrder::parity_split(fam_w.support().0, fam_w.support().1);
        check_conjugation(&b, &proj, &v, &sv, &w, &gyr);
    }

    #[test]
    fn sweep_orbit_multisets_agree() {
        // Any two sweeps of any two directions have the same orbit sizes.
        let b = cp(&[2, 2, 3]);
        let p = b.poset();
        let proj = identity_projection(&b);
        let ideals = enumerate_ideals(p, 1 << 14).unwrap();
        let mut all_multisets = Vec::new();
        for signs in [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]] {
            let v = Direction::new(&signs).unwrap();
            let fam = HyperplaneToggles::build(p, &proj, &v).unwrap();
            let (lo, hi) = fam.support();
            let sweeps = [
                SweepOrder::identity(lo, hi),
                SweepOrder::parity_split(lo, hi),
                {
                    let mut s = SweepOrder::identity(lo, hi);
                    s.values.reverse();
                    s
                },
            ];
            for sweep in sweeps {
                let act = crate::dynamics::PermutationAction::from_fn(&ideals, |i| {
                    promotion_sigma_with(&fam, p, &sweep, i)
                })
                .unwrap();
                let mut sizes = crate::dynamics::orbit_structure(&act).orbit_sizes;
                sizes.sort_unstable();
                all_multisets.push(sizes);
            }
        }
        for m in &all_multisets[1..] {
            assert_eq!(m, &all_multisets[0]);
        }
    }
}

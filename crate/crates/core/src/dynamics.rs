//! Orbit analysis of a bijective action on a finite enumerated domain, the
//! resonance verifier, and serializable reports.
//!
//! The expensive part, evaluating the successor of every state, is
//! parallelized over the enumerated domain with indexed writes, so reports
//! are byte-identical no matter how many workers run.

use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::hash::Hash;

/// A bijection on `{0, .., size-1}`, the index space of an enumerated domain.
#[derive(Debug, Clone)]
pub struct PermutationAction {
    succ: Vec<u32>,
}

impl PermutationAction {
    /// Evaluates `step` on every domain element (in parallel) and checks the
    /// result is a bijection of the domain.
    pub fn from_fn<S, F>(domain: &[S], step: F) -> Result<PermutationAction>
    where
        S: Eq + Hash + Sync,
        F: Fn(&S) -> S + Sync,
    {
        let index: HashMap<&S, u32> = domain
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i as u32))
            .collect();
        if index.len() != domain.len() {
            return Err(Error::ContractViolation("domain contains duplicates".into()));
        }
        let succ: Vec<u32> = domain
            .par_iter()
            .map(|s| {
                let next = step(s);
                index.get(&next).copied().ok_or(())
            })
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::ContractViolation("successor left the domain".into()))?;
        PermutationAction::from_successors(succ)
    }

    pub fn from_successors(succ: Vec<u32>) -> Result<PermutationAction> {
        let mut seen = vec![false; succ.len()];
        for &t in &succ {
            let t = t as usize;
            if t >= succ.len() || seen[t] {
                return Err(Error::ContractViolation(
                    "successor map is not a bijection".into(),
                ));
            }
            seen[t] = true;
        }
        Ok(PermutationAction { succ })
    }

    pub fn size(&self) -> usize {
        self.succ.len()
    }

    pub fn step(&self, i: usize) -> usize {
        self.succ[i] as usize
    }

    /// The cycle of `start`: start first, no repeats.
    pub fn orbit(&self, start: usize) -> Vec<usize> {
        let mut out = vec![start];
        let mut cur = self.step(start);
        while cur != start {
            out.push(cur);
            cur = self.step(cur);
        }
        out
    }
}

/// Walks the orbit of a state under `step` without materializing a domain.
/// Returns the cycle with `start` first.
pub fn orbit_by_iteration<S: Clone + Eq, F: Fn(&S) -> S>(start: &S, step: F) -> Vec<S> {
    let mut out = vec![start.clone()];
    let mut cur = step(start);
    while cur != *start {
        out.push(cur.clone());
        cur = step(&cur);
    }
    out
}

/// Exact orbit partition of a permutation action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub domain_size: usize,
    /// One size per orbit, in discovery order (orbits are discovered from
    /// their least representative in enumeration order).
    pub orbit_sizes: Vec<u64>,
    /// Least domain index of each orbit, aligned with `orbit_sizes`.
    pub representatives: Vec<u32>,
    /// Order of the action: least common multiple of the orbit sizes.
    pub order: u64,
}

impl OrbitReport {
    /// Orbit sizes as a sorted multiset.
    pub fn sorted_sizes(&self) -> Vec<u64> {
        let mut v = self.orbit_sizes.clone();
        v.sort_unstable();
        v
    }

    /// `(size, multiplicity)` pairs, ascending by size.
    pub fn size_histogram(&self) -> Vec<(u64, u64)> {
        let mut hist: Vec<(u64, u64)> = Vec::new();
        for s in self.sorted_sizes() {
            match hist.last_mut() {
                Some((sz, n)) if *sz == s => *n += 1,
                _ => hist.push((s, 1)),
            }
        }
        hist
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    }
    if a == 0 || b == 0 {
        a.max(b).max(1)
    } else {
        a / gcd(a, b) * b
    }
}

/// Partitions the whole domain into orbits. Every state is visited exactly
/// once; the representatives are the least states in enumeration order.
pub fn orbit_structure(action: &PermutationAction) -> OrbitReport {
    let n = action.size();
    let mut visited = vec![false; n];
    let mut orbit_sizes = Vec::new();
    let mut representatives = Vec::new();
    let mut order = 1u64;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut len = 0u64;
        let mut cur = start;
        loop {
            visited[cur] = true;
            len += 1;
            cur = action.step(cur);
            if cur == start {
                break;
            }
        }
        orbit_sizes.push(len);
        representatives.push(start as u32);
        order = lcm(order, len);
    }
    OrbitReport {
        domain_size: n,
        orbit_sizes,
        representatives,
        order,
    }
}

/// Outcome of a resonance check for the triple (domain, action, projection)
/// at a claimed frequency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResonanceReport {
    pub frequency: u64,
    /// The intertwining square commutes: `f(g(x)) = c(f(x))` for all `x`.
    pub commutes: bool,
    /// `c^frequency` is the identity on the image `f(X)`.
    pub frequency_is_period: bool,
    /// Both checks passed.
    pub holds: bool,
    /// Least domain index witnessing a failure, if any.
    pub counterexample: Option<u32>,
    /// Exact order of the target action on the image `f(X)`.
    pub image_order: u64,
    /// Multiset of the orbit sizes of the target action on `f(X)`, ascending.
    pub image_orbit_sizes: Vec<u64>,
}

/// Verifies resonance with frequency `omega` for an enumerated domain, a
/// step function, a projection `f`, and a target map `c` on projected values.
///
/// Checks, and reports separately:
/// * the square commutes pointwise (`c . f = f . g`);
/// * `c^omega` fixes every projected value (so every image orbit size
///   divides `omega`); the least failing state is the counterexample;
/// * the exact order of `c` on the image, for comparison with `omega`.
pub fn verify_resonance<S, Y, G, F, C>(
    domain: &[S],
    step: G,
    project: F,
    target: C,
    omega: u64,
) -> ResonanceReport
where
    S: Sync,
    Y: Clone + Eq + Hash + Ord + Send,
    G: Fn(&S) -> S + Sync,
    F: Fn(&S) -> Y + Sync,
    C: Fn(&Y) -> Y + Sync,
{
    debug_assert!(omega >= 1);
    let commute_failure = domain
        .par_iter()
        .enumerate()
        .filter(|(_, x)| target(&project(x)) != project(&step(x)))
        .map(|(i, _)| i)
        .min();
    let period_failure = domain
        .par_iter()
        .enumerate()
        .filter(|(_, x)| {
            let y = project(x);
            let mut cur = y.clone();
            for _ in 0..omega {
                cur = target(&cur);
            }
            cur != y
        })
        .map(|(i, _)| i)
        .min();

    let mut image: Vec<Y> = domain.par_iter().map(&project).collect();
    image.sort_unstable();
    image.dedup();
    let mut image_order = 1u64;
    let mut image_orbit_sizes = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for y in &image {
        if !seen.insert(y.clone()) {
            continue;
        }
        let mut len = 1u64;
        let mut cur = target(y);
        while cur != *y {
            seen.insert(cur.clone());
            cur = target(&cur);
            len += 1;
        }
        image_orbit_sizes.push(len);
        image_order = lcm(image_order, len);
    }
    image_orbit_sizes.sort_unstable();

    let commutes = commute_failure.is_none();
    let frequency_is_period = period_failure.is_none();
    ResonanceReport {
        frequency: omega,
        commutes,
        frequency_is_period,
        holds: commutes && frequency_is_period,
        counterexample: commute_failure.or(period_failure).map(|i| i as u32),
        image_order,
        image_orbit_sizes,
    }
}

/// Result of checking that selected orbits have size divisible by a modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub modulus: u64,
    pub states_checked: usize,
    /// Least index per violating orbit, with the orbit size.
    pub violations: Vec<(u32, u64)>,
}

impl DivisibilityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every state satisfying the predicate, asserts that its orbit size is
/// a multiple of `modulus`; violations are listed per orbit.
pub fn divisibility_check<P: Fn(usize) -> bool>(
    action: &PermutationAction,
    predicate: P,
    modulus: u64,
) -> Result<DivisibilityReport> {
    if modulus == 0 {
        return Err(Error::InvalidSpec("modulus must be >= 1".into()));
    }
    let mut visited = vec![false; action.size()];
    let mut violations = Vec::new();
    let mut states_checked = 0usize;
    for start in 0..action.size() {
        if visited[start] {
            continue;
        }
        let orbit = action.orbit(start);
        for &s in &orbit {
            visited[s] = true;
        }
        let relevant = orbit.iter().filter(|&&s| predicate(s)).count();
        states_checked += relevant;
        if relevant > 0 && orbit.len() as u64 % modulus != 0 {
            violations.push((start as u32, orbit.len() as u64));
        }
    }
    Ok(DivisibilityReport {
        modulus,
        states_checked,
        violations,
    })
}

/// The full report emitted by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub action: String,
    pub domain_size: usize,
    /// Sorted multiset of orbit sizes.
    pub orbit_sizes: Vec<u64>,
    pub order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resonance: Option<ResonanceSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResonanceSummary {
    pub holds: bool,
    pub frequency: u64,
    pub image_order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<u32>,
}

impl ActionReport {
    pub fn new(action: &str, orbits: &OrbitReport, resonance: Option<&ResonanceReport>) -> ActionReport {
        ActionReport {
            action: action.to_string(),
            domain_size: orbits.domain_size,
            orbit_sizes: orbits.sorted_sizes(),
            order: orbits.order,
            resonance: resonance.map(|r| ResonanceSummary {
                holds: r.holds,
                frequency: r.frequency,
                image_order: r.image_order,
                counterexample: r.counterexample,
            }),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// CSV rows: one per distinct orbit size, ascending.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("action,domain_size,order,orbit_size,multiplicity\n");
        let mut hist: Vec<(u64, u64)> = Vec::new();
        for s in &self.orbit_sizes {
            match hist.last_mut() {
                Some((sz, n)) if sz == s => *n += 1,
                _ => hist.push((*s, 1)),
            }
        }
        for (size, mult) in hist {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                self.action, self.domain_size, self.order, size, mult
            ));
        }
        out
    }

    /// Text histogram of orbit sizes.
    pub fn to_histogram(&self) -> String {
        let mut out = String::new();
        let mut hist: Vec<(u64, u64)> = Vec::new();
        for s in &self.orbit_sizes {
            match hist.last_mut() {
                Some((sz, n)) if sz == s => *n += 1,
                _ => hist.push((*s, 1)),
            }
        }
        let width = hist.iter().map(|&(_, n)| n).max().unwrap_or(0).min(60) as usize;
        let max = hist.iter().map(|&(_, n)| n).max().unwrap_or(1);
        for (size, mult) in hist {
            let bar_len = ((mult * width as u64 + max - 1) / max) as usize;
            out.push_str(&format!("{size:>8} | {} {mult}\n", "#".repeat(bar_len)));
        }
        out
    }
}

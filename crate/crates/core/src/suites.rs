//! Named verification suites: each runs a family of exhaustive checks and
//! reports one pass/fail line per instance. The acceptance tests and the
//! command-line `verify` subcommand both drive these.

use crate::dynamics::{orbit_structure, PermutationAction};
use crate::fpl::{enumerate_fpl_with, gyration_fpl, link_pattern, SearchOrder};
use crate::lattice::{identity_projection, promotion_with, Direction, HyperplaneToggles};
use crate::poset::{enumerate_ideals, rowmotion, ChainProduct, ChainProductSpec};
use crate::pp::ideal_to_tableau;
use crate::registry::{orbit_structure_of, Caps, DomainSpec};
use crate::tableau::k_promotion;
use crate::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteInstance {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: Vec<SuiteInstance>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &str, instances: Vec<SuiteInstance>) -> SuiteReport {
        let pass = instances.iter().all(|i| i.pass);
        SuiteReport {
            suite: suite.to_string(),
            instances,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn instance(name: String, pass: bool, detail: String) -> SuiteInstance {
    SuiteInstance { name, pass, detail }
}

fn order_instance(spec: DomainSpec, action: &str, expect: u64, caps: &Caps) -> Result<SuiteInstance> {
    let report = orbit_structure_of(&spec, action, caps)?;
    Ok(instance(
        format!("{}/{}", spec.name(), action),
        report.order == expect,
        format!("order {} (expected {expect})", report.order),
    ))
}

/// Order of rowmotion on two-chain products is `a + b`.
pub fn brouwer_schrijver(max: u32, caps: &Caps) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            instances.push(order_instance(
                DomainSpec::Box(vec![a, b]),
                "rowmotion",
                (a + b) as u64,
                caps,
            )?);
        }
    }
    Ok(SuiteReport::new("brouwer-schrijver", instances))
}

/// Order of rowmotion on height-2 boxes is `a + b + 1`.
pub fn height2(max: u32, caps: &Caps) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            instances.push(order_instance(
                DomainSpec::Box(vec![a, b, 2]),
                "rowmotion",
                (a + b + 1) as u64,
                caps,
            )?);
        }
    }
    Ok(SuiteReport::new("height2", instances))
}

/// Orders of K-promotion: `a+b` on bound `a+b`, `a+b+1` on bound `a+b+1`
/// (rectangles up to `max`), and `q` on one-row tableaux for `a < q <= 10`.
pub fn kpro_orders(max: u32, caps: &Caps) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for a in 1..=max as u8 {
        for b in 1..=max as u8 {
            for extra in [0u8, 1] {
                let q = a + b + extra;
                instances.push(order_instance(
                    DomainSpec::Inc { rows: a, cols: b, q },
                    "kpro",
                    q as u64,
                    caps,
                )?);
            }
        }
    }
    for a in 1..=10u8 {
        for q in a + 1..=10 {
            instances.push(order_instance(
                DomainSpec::Inc { rows: 1, cols: a, q },
                "kpro",
                q as u64,
                caps,
            )?);
        }
    }
    Ok(SuiteReport::new("kpro-orders", instances))
}

/// Conjectured order of rowmotion on height-3 boxes: `a + b + 2`.
pub fn conjecture_height3(max: u32, caps: &Caps) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            instances.push(order_instance(
                DomainSpec::Box(vec![a, b, 3]),
                "rowmotion",
                (a + b + 2) as u64,
                caps,
            )?);
        }
    }
    Ok(SuiteReport::new("conjecture-height3", instances))
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Divisibility of rowmotion orbit sizes by `a+b+c-1` under the improved
/// hypothesis `q prime and c > (2ab-2)/3 - a - b + 2`.
pub fn cfdf_improved(boxes: &[Vec<u32>], caps: &Caps) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for dims in boxes {
        let name = DomainSpec::Box(dims.clone()).name();
        let [a, b, c] = match dims[..] {
            [a, b, c] => [a, b, c],
            _ => return Err(Error::InvalidSpec("cfdf-improved needs 3d boxes".into())),
        };
        let q = (a + b + c - 1) as u64;
        // Hypothesis check: c > (2ab-2)/3 - a - b + 2, in exact arithmetic.
        let lhs = 3 * c as i64;
        let rhs = 2 * (a * b) as i64 - 2 - 3 * (a + b) as i64 + 6;
        let hypothesis = is_prime(q) && lhs > rhs;
        if !hypothesis {
            instances.push(instance(
                name,
                false,
                format!("hypothesis fails for q={q}"),
            ));
            continue;
        }
        let report = orbit_structure_of(&DomainSpec::Box(dims.clone()), "rowmotion", caps)?;
        let bad: Vec<u64> = report
            .orbit_sizes
            .iter()
            .copied()
            .filter(|s| s % q != 0)
            .collect();
        instances.push(instance(
            name,
            bad.is_empty(),
            format!("{} orbits, modulus {q}, violations {bad:?}", report.orbit_sizes.len()),
        ));
    }
    Ok(SuiteReport::new("cfdf-improved", instances))
}

/// K-promotion orbit multisets agree across the three rectangle families of
/// a box (shapes a x b, a x c, b x c with the common bound).
pub fn trifold(boxes: &[Vec<u32>], caps: &Caps) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for dims in boxes {
        let [a, b, c] = match dims[..] {
            [a, b, c] => [a, b, c],
            _ => return Err(Error::InvalidSpec("trifold needs 3d boxes".into())),
        };
        let q = (a + b + c - 1) as u8;
        let shapes = [(a as u8, b as u8), (a as u8, c as u8), (b as u8, c as u8)];
        let mut multisets = Vec::new();
        for (rows, cols) in shapes {
            let report =
                orbit_structure_of(&DomainSpec::Inc { rows, cols, q }, "kpro", caps)?;
            multisets.push(report.sorted_sizes());
        }
        let pass = multisets[1] == multisets[0] && multisets[2] == multisets[0];
        instances.push(instance(
            DomainSpec::Box(dims.clone()).name(),
            pass,
            format!("orbit multiset {:?}", multisets[0]),
        ));
    }
    Ok(SuiteReport::new("trifold", instances))
}

/// The face projection intertwines mixed-direction promotion with
/// K-promotion pointwise, and rowmotion and K-promotion share orbit
/// multisets.
pub fn intertwining(boxes: &[Vec<u32>], caps: &Caps) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    for dims in boxes {
        let [a, b, c] = match dims[..] {
            [a, b, c] => [a, b, c],
            _ => return Err(Error::InvalidSpec("intertwining needs 3d boxes".into())),
        };
        let cp = ChainProduct::new(ChainProductSpec::new(dims))?;
        let p = cp.poset();
        let ideals = enumerate_ideals(p, caps.ideals)?;
        let proj = identity_projection(&cp);
        let v = Direction::new(&[1, 1, -1])?;
        let fam = HyperplaneToggles::build(p, &proj, &v)?;
        let mut pointwise = true;
        for ideal in &ideals {
            let lhs = ideal_to_tableau(&cp, &promotion_with(&fam, p, ideal), 3)?;
            let rhs = k_promotion(&ideal_to_tableau(&cp, ideal, 3)?);
            if lhs != rhs {
                pointwise = false;
                break;
            }
        }
        let row = PermutationAction::from_fn(&ideals, |i| rowmotion(p, i))?;
        let row_sizes = orbit_structure(&row).sorted_sizes();
        let q = (a + b + c - 1) as u8;
        let kp = orbit_structure_of(
            &DomainSpec::Inc { rows: a as u8, cols: b as u8, q },
            "kpro",
            caps,
        )?
        .sorted_sizes();
        instances.push(instance(
            DomainSpec::Box(dims.clone()).name(),
            pointwise && row_sizes == kp,
            format!(
                "pointwise {} on {} ideals, multisets equal {}",
                pointwise,
                ideals.len(),
                row_sizes == kp
            ),
        ));
    }
    Ok(SuiteReport::new("intertwining", instances))
}

/// Loop-configuration checks: counts from two search orders, link-pattern
/// rotation under gyration, and resonance at frequency 2n.
pub fn wieland(max: u8, caps: &Caps) -> Result<SuiteReport> {
    let mut instances = Vec::new();
    let expected_counts = [1u64, 2, 7, 42, 429, 7436, 218348];
    for n in 1..=max {
        let row = enumerate_fpl_with(n, caps.fpl_order, SearchOrder::RowMajor)?;
        let col = enumerate_fpl_with(n, caps.fpl_order, SearchOrder::ColumnMajor)?;
        let counts_ok = row == col
            && expected_counts
                .get(n as usize - 1)
                .is_none_or(|&e| e == row.len() as u64);
        let rotation_ok = row.iter().all(|cfg| {
            link_pattern(&gyration_fpl(cfg)).unwrap() == link_pattern(cfg).unwrap().rotate(-1)
        });
        let (_, res) = crate::registry::resonance_report(
            &DomainSpec::Fpl(n),
            "linkpattern",
            None,
            caps,
        )?;
        instances.push(instance(
            format!("fpl-{n}"),
            counts_ok && rotation_ok && res.holds,
            format!(
                "{} configurations, rotation {}, resonance at {} {}",
                row.len(),
                rotation_ok,
                2 * n,
                res.holds
            ),
        ));
    }
    Ok(SuiteReport::new("wieland", instances))
}

/// Dispatch by suite name, with each suite's default parameters.
pub fn run_suite(
    name: &str,
    max: Option<u32>,
    boxes: Option<Vec<Vec<u32>>>,
    caps: &Caps,
) -> Result<SuiteReport> {
    let small_boxes = || -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        for a in 1..=3u32 {
            for b in 1..=3 {
                for c in 1..=3 {
                    out.push(vec![a, b, c]);
                }
            }
        }
        out.push(vec![2, 2, 4]);
        out.push(vec![2, 4, 2]);
        out
    };
    match name {
        "brouwer-schrijver" => brouwer_schrijver(max.unwrap_or(6), caps),
        "height2" => height2(max.unwrap_or(5), caps),
        "kpro-orders" => kpro_orders(max.unwrap_or(5), caps),
        "conjecture-height3" => conjecture_height3(max.unwrap_or(4), caps),
        "cfdf-improved" => cfdf_improved(
            &boxes.unwrap_or_else(|| vec![vec![2, 2, 2], vec![2, 2, 4], vec![2, 3, 3]]),
            caps,
        ),
        "trifold" => trifold(&boxes.unwrap_or_else(small_boxes), caps),
        "intertwining" => intertwining(&boxes.unwrap_or_else(small_boxes), caps),
        "wieland" => wieland(max.unwrap_or(5) as u8, caps),
        other => Err(Error::UnknownName(format!("suite '{other}'"))),
    }
}

/// The suite names accepted by [`run_suite`].
pub const SUITE_NAMES: [&str; 8] = [
    "brouwer-schrijver",
    "height2",
    "kpro-orders",
    "conjecture-height3",
    "cfdf-improved",
    "trifold",
    "intertwining",
    "wieland",
];

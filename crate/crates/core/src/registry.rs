//! Named state spaces, actions, and projections: the binding layer between
//! the library and the command-line tool. New systems plug in here without
//! touching the CLI.

use crate::dynamics::{
    orbit_structure, verify_resonance, ActionReport, OrbitReport, PermutationAction,
    ResonanceReport,
};
use crate::fpl::{enumerate_fpl, gyration_fpl, link_pattern, FplConfig, LinkPattern};
use crate::lattice::{gyration, identity_projection, promotion_with, Direction, HyperplaneToggles};
use crate::poset::{enumerate_ideals, rowmotion, ChainProduct, ChainProductSpec, OrderIdeal};
use crate::pp::x_max;
use crate::tableau::{content, enumerate_tableaux, k_promotion, BinaryContent, IncreasingTableau};
use crate::{Error, Result};

/// Which enumerated state space to act on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainSpec {
    /// Order ideals of a product of chains.
    Box(Vec<u32>),
    /// Increasing tableaux of rectangular shape `rows x cols`, entries <= q.
    Inc { rows: u8, cols: u8, q: u8 },
    /// Fully-packed loop configurations of order n.
    Fpl(u8),
}

impl DomainSpec {
    pub fn name(&self) -> String {
        match self {
            DomainSpec::Box(dims) => format!(
                "box-{}",
                dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("x")
            ),
            DomainSpec::Inc { rows, cols, q } => format!("inc-{rows}x{cols}-q{q}"),
            DomainSpec::Fpl(n) => format!("fpl-{n}"),
        }
    }
}

/// Resource limits for enumeration.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub ideals: usize,
    pub fpl_order: u8,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            ideals: 20_000_000,
            fpl_order: 6,
        }
    }
}

/// Environment variable overriding the ideal-count cap.
pub const CAP_ENV_VAR: &str = "RESONANCE_LAB_CAP";

impl Caps {
    /// Default caps with any `RESONANCE_LAB_CAP` override applied.
    pub fn from_env() -> Caps {
        let mut caps = Caps::default();
        if let Ok(s) = std::env::var(CAP_ENV_VAR) {
            if let Ok(v) = s.trim().parse::<usize>() {
                caps.ideals = v;
            }
        }
        caps
    }
}

fn box_domain(dims: &[u32], caps: &Caps) -> Result<(ChainProduct, Vec<OrderIdeal>)> {
    let cp = ChainProduct::new(ChainProductSpec::new(dims))?;
    let ideals = enumerate_ideals(cp.poset(), caps.ideals)?;
    Ok((cp, ideals))
}

/// Generalized promotion of a box along the direction with -1 in exactly
/// one coordinate (all other signs +1).
fn mixed_direction(k: usize, negative_axis: usize) -> Direction {
    let mut signs = vec![1i8; k];
    signs[negative_axis] = -1;
    Direction(signs)
}

/// Builds the successor table of a named action over a named domain.
pub fn build_action(
    spec: &DomainSpec,
    action: &str,
    caps: &Caps,
) -> Result<(usize, PermutationAction)> {
    match spec {
        DomainSpec::Box(dims) => {
            let (cp, ideals) = box_domain(dims, caps)?;
            let p = cp.poset();
            let act = match action {
                "rowmotion" => PermutationAction::from_fn(&ideals, |i| rowmotion(p, i))?,
                "gyration" => {
                    PermutationAction::from_fn(&ideals, |i| gyration(p, i).expect("ranked"))?
                }
                "promotion" => {
                    let proj = identity_projection(&cp);
                    let v = mixed_direction(dims.len(), dims.len() - 1);
                    let fam = HyperplaneToggles::build(p, &proj, &v)?;
                    PermutationAction::from_fn(&ideals, |i| promotion_with(&fam, p, i))?
                }
                other => return Err(Error::UnknownName(format!("box action '{other}'"))),
            };
            Ok((ideals.len(), act))
        }
        DomainSpec::Inc { rows, cols, q } => {
            if action != "kpro" {
                return Err(Error::UnknownName(format!("tableau action '{action}'")));
            }
            let domain = enumerate_tableaux(&vec![*cols; *rows as usize], *q)?;
            let act = PermutationAction::from_fn(&domain, k_promotion)?;
            Ok((domain.len(), act))
        }
        DomainSpec::Fpl(n) => {
            if action != "gyration" {
                return Err(Error::UnknownName(format!("loop action '{action}'")));
            }
            let domain = enumerate_fpl(*n, caps.fpl_order)?;
            let act = PermutationAction::from_fn(&domain, gyration_fpl)?;
            Ok((domain.len(), act))
        }
    }
}

/// Default action name for a domain.
pub fn default_action(spec: &DomainSpec) -> &'static str {
    match spec {
        DomainSpec::Box(_) => "rowmotion",
        DomainSpec::Inc { .. } => "kpro",
        DomainSpec::Fpl(_) => "gyration",
    }
}

/// Orbit report for a named action over a named domain.
pub fn orbit_report(spec: &DomainSpec, action: &str, caps: &Caps) -> Result<ActionReport> {
    let (_, act) = build_action(spec, action, caps)?;
    let orbits = orbit_structure(&act);
    Ok(ActionReport::new(
        &format!("{}/{}", spec.name(), action),
        &orbits,
        None,
    ))
}

/// The built-in resonance systems: binary content under K-promotion,
/// the occupancy profile under mixed-direction promotion, and link patterns
/// under gyration. Returns the claimed frequency actually used.
pub fn resonance_report(
    spec: &DomainSpec,
    map: &str,
    frequency: Option<u64>,
    caps: &Caps,
) -> Result<(String, ResonanceReport)> {
    match (spec, map) {
        (DomainSpec::Inc { rows, cols, q }, "con") => {
            let domain = enumerate_tableaux(&vec![*cols; *rows as usize], *q)?;
            let omega = frequency.unwrap_or(*q as u64);
            let report = verify_resonance(
                &domain,
                k_promotion,
                |t: &IncreasingTableau| content(t),
                |c: &BinaryContent| c.rotate_left(),
                omega,
            );
            Ok((format!("{}/kpro/con", spec.name()), report))
        }
        (DomainSpec::Box(dims), "xmax") => {
            if dims.len() != 3 {
                return Err(Error::InvalidSpec("xmax needs a 3-dimensional box".into()));
            }
            let (cp, ideals) = box_domain(dims, caps)?;
            let p = cp.poset();
            let proj = identity_projection(&cp);
            let fam = HyperplaneToggles::build(p, &proj, &mixed_direction(3, 1))?;
            let omega = frequency.unwrap_or((dims[0] + dims[1] + dims[2] - 1) as u64);
            let report = verify_resonance(
                &ideals,
                |i| promotion_with(&fam, p, i),
                |i| x_max(&cp, i).expect("3d box"),
                |bits: &Vec<u8>| {
                    let mut b = bits.clone();
                    b.rotate_right(1);
                    b
                },
                omega,
            );
            Ok((format!("{}/promotion-xmax/xmax", spec.name()), report))
        }
        (DomainSpec::Fpl(n), "linkpattern") => {
            let domain = enumerate_fpl(*n, caps.fpl_order)?;
            let omega = frequency.unwrap_or(2 * *n as u64);
            let report = verify_resonance(
                &domain,
                gyration_fpl,
                |cfg: &FplConfig| link_pattern(cfg).expect("valid configuration"),
                |lp: &LinkPattern| lp.rotate(-1),
                omega,
            );
            Ok((format!("{}/gyration/linkpattern", spec.name()), report))
        }
        (spec, map) => Err(Error::UnknownName(format!(
            "no resonance system for domain {} with map '{map}'",
            spec.name()
        ))),
    }
}

/// Default projection name for a domain.
pub fn default_map(spec: &DomainSpec) -> &'static str {
    match spec {
        DomainSpec::Box(_) => "xmax",
        DomainSpec::Inc { .. } => "con",
        DomainSpec::Fpl(_) => "linkpattern",
    }
}

/// Full report for a resonance system: the orbit structure of the system's
/// own action plus the resonance summary.
pub fn resonance_full_report(
    spec: &DomainSpec,
    map: &str,
    frequency: Option<u64>,
    caps: &Caps,
) -> Result<ActionReport> {
    let (name, res) = resonance_report(spec, map, frequency, caps)?;
    let orbits = match (spec, map) {
        (DomainSpec::Inc { rows, cols, q }, "con") => {
            let domain = enumerate_tableaux(&vec![*cols; *rows as usize], *q)?;
            orbit_structure(&PermutationAction::from_fn(&domain, k_promotion)?)
        }
        (DomainSpec::Box(dims), "xmax") => {
            let (cp, ideals) = box_domain(dims, caps)?;
            let p = cp.poset();
            let proj = identity_projection(&cp);
            let fam = HyperplaneToggles::build(p, &proj, &mixed_direction(3, 1))?;
            orbit_structure(&PermutationAction::from_fn(&ideals, |i| {
                promotion_with(&fam, p, i)
            })?)
        }
        (DomainSpec::Fpl(n), "linkpattern") => {
            let domain = enumerate_fpl(*n, caps.fpl_order)?;
            orbit_structure(&PermutationAction::from_fn(&domain, gyration_fpl)?)
        }
        _ => unreachable!("resonance_report validated the pair"),
    };
    Ok(ActionReport::new(&name, &orbits, Some(&res)))
}

/// Orbit structure for a named system, exposed for the verification suites.
pub fn orbit_structure_of(spec: &DomainSpec, action: &str, caps: &Caps) -> Result<OrbitReport> {
    let (_, act) = build_action(spec, action, caps)?;
    Ok(orbit_structure(&act))
}

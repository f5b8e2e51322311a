//! Dispatch from target/preset names to the verification and analysis routines.

use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::analysis::{interlacing, log_concave, strong_q_log_convex, structure_summary, sturm_analyze};
use crate::applications::{verify_prop41, verify_prop42};
use crate::david_barton::{verify_david_barton_classical, verify_prop43, verify_thm36, DbInstance};
use crate::derivative::{verify_q_egf, verify_thm34, verify_thm35};
use crate::egf::{verify_egf_f, verify_egf_flower, verify_egf_staircase};
use crate::error::{Error, Result};
use crate::presets::{find_preset, frobenius_classical, Preset};
use crate::report::VerificationReport;
use crate::sampling::{compatible_params, nonzero_rational, positive_rational, rng, small_rational};
use crate::scalar::{int, Rational};
use crate::transforms::{verify_thm21, verify_thm31, verify_thm32, verify_thm33, FrobeniusParams};

pub const TARGETS: [&str; 14] = [
    "thm21", "thm31", "thm32", "thm33", "thm34", "thm35", "thm36", "prop41", "prop42", "prop43", "egfF",
    "egf-staircase", "egf-flower", "egf-Q",
];

/// Parameter draws per randomized target; the master-family lift gets more.
pub const RANDOM_DRAWS: usize = 20;
pub const RANDOM_DRAWS_THM21: usize = 100;

fn incompatible(target: &str, scope: &str, reason: &str) -> Error {
    Error::Incompatible { target: target.into(), scope: scope.into(), reason: reason.into() }
}

fn ints(v: [i64; 4]) -> [Rational; 4] {
    v.map(int)
}

/// Runs one identity check on a preset, or on seeded random parameters when
/// `scope == "random"`.
pub fn run_verify(target: &str, scope: &str, n_max: usize, seed: u64) -> Result<VerificationReport> {
    if !TARGETS.contains(&target) {
        return Err(Error::UnknownTarget(target.into()));
    }
    if scope == "random" {
        return run_random(target, n_max, seed);
    }
    let preset = find_preset(scope)?;
    if !preset.supports(target) {
        return Err(incompatible(target, scope, "preset is not an instance of this identity"));
    }
    match target {
        "thm21" => {
            let p = preset.master_params().ok_or_else(|| incompatible(target, scope, "not a master-family preset"))?;
            verify_thm21(p, n_max, scope)
        }
        "thm31" => Ok(verify_thm31(&frobenius_classical(), n_max, scope)),
        "thm32" => {
            let [a1, a2, b1, b2] = match scope {
                "eulerian-shifted" => ints([1, 1, 1, 1]),
                "flower" => ints([1, 1, 2, 1]),
                _ => ints([2, 1, 2, 1]),
            };
            verify_thm32(&a1, &a2, &b1, &b2, n_max, scope)
        }
        "thm33" => {
            let (a1, c) = if scope == "eulerian-shifted" { (1, 2) } else { (2, 4) };
            verify_thm33(&int(a1), &int(1), &int(c), n_max, scope)
        }
        "thm34" => verify_thm34(&int(2), &int(1), &int(1), n_max, scope),
        "thm35" => {
            let a1 = if scope == "eulerian-shifted" { 1 } else { 2 };
            verify_thm35(&int(a1), &int(1), n_max, scope)
        }
        "thm36" => thm36_for(&preset, n_max),
        "prop41" => verify_prop41(n_max),
        "prop42" => verify_prop42(n_max),
        "prop43" => verify_prop43(n_max),
        "egfF" => verify_egf_f(&frobenius_classical(), n_max, scope),
        "egf-staircase" => verify_egf_staircase(n_max),
        "egf-flower" => verify_egf_flower(n_max),
        "egf-Q" => verify_q_egf(&int(1), n_max, scope),
        _ => unreachable!("target list checked above"),
    }
}

fn thm36_for(preset: &Preset, n_max: usize) -> Result<VerificationReport> {
    let inst = preset.db_instance.as_ref().ok_or_else(|| incompatible("thm36", preset.id, "no alternating-runs parameters"))?;
    let mut report = verify_thm36(inst, n_max, preset.id)?;
    if preset.id == "runs-A-shifted" {
        report.absorb("classical", verify_david_barton_classical(n_max)?);
    }
    Ok(report)
}

fn run_random(target: &str, n_max: usize, seed: u64) -> Result<VerificationReport> {
    let mut g = rng(seed);
    let mut report = VerificationReport::new(target, "random", n_max);
    report.flag(format!("seed {seed}"));
    let draws = if target == "thm21" { RANDOM_DRAWS_THM21 } else { RANDOM_DRAWS };
    for i in 0..draws {
        let (label, sub) = match target {
            "thm21" => {
                let p = compatible_params(&mut g);
                (p.to_string(), verify_thm21(&p, n_max, "random")?)
            }
            "thm31" | "thm32" | "egfF" => {
                let p = FrobeniusParams::new(nonzero_rational(&mut g), small_rational(&mut g), nonzero_rational(&mut g), small_rational(&mut g))?;
                let label = format!("a1={} a2={} b1={} b2={}", p.a1, p.a2, p.b1, p.b2);
                let sub = match target {
                    "thm31" => verify_thm31(&p, n_max, "random"),
                    "thm32" => verify_thm32(&p.a1, &p.a2, &p.b1, &p.b2, n_max, "random")?,
                    _ => verify_egf_f(&p, n_max, "random")?,
                };
                (label, sub)
            }
            "thm33" => {
                let [a1, a2, c] = std::array::from_fn(|_| positive_rational(&mut g));
                (format!("a1={a1} a2={a2} c={c}"), verify_thm33(&a1, &a2, &c, n_max, "random")?)
            }
            "thm34" => {
                let [a, b, c] = std::array::from_fn(|_| positive_rational(&mut g));
                (format!("a={a} b={b} c={c}"), verify_thm34(&a, &b, &c, n_max, "random")?)
            }
            "thm35" => {
                let [a1, a2] = std::array::from_fn(|_| positive_rational(&mut g));
                (format!("a1={a1} a2={a2}"), verify_thm35(&a1, &a2, n_max, "random")?)
            }
            "thm36" => {
                let sigma = g.gen_range(-1..=1);
                let [a1, a2, d] = std::array::from_fn(|_| positive_rational(&mut g));
                let inst = DbInstance::new(a1, a2, d, sigma)?;
                let label = format!("a1={} a2={} d={} sigma={sigma}", inst.a1, inst.a2, inst.d);
                (label, verify_thm36(&inst, n_max, "random")?)
            }
            "egf-Q" => {
                let delta = small_rational(&mut g);
                (format!("delta={delta}"), verify_q_egf(&delta, n_max, "random")?)
            }
            _ => return Err(incompatible(target, "random", "fixed instance only")),
        };
        report.absorb(&format!("draw {i} [{label}]"), sub);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnalysisCheck {
    RealRooted,
    RootInterval,
    LogConcave,
    Interlace,
    Qlogconvex,
    Gamma,
    Symmetry,
}

impl AnalysisCheck {
    pub const ALL: [AnalysisCheck; 7] = [
        Self::RealRooted,
        Self::RootInterval,
        Self::LogConcave,
        Self::Interlace,
        Self::Qlogconvex,
        Self::Gamma,
        Self::Symmetry,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Self::RealRooted => "real-rooted",
            Self::RootInterval => "root-interval",
            Self::LogConcave => "log-concave",
            Self::Interlace => "interlace",
            Self::Qlogconvex => "qlogconvex",
            Self::Gamma => "gamma",
            Self::Symmetry => "symmetry",
        }
    }
}

impl FromStr for AnalysisCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Per-row structural checks on a preset's row polynomials.
pub fn run_analyze(preset_id: &str, n_max: usize, checks: &[AnalysisCheck]) -> Result<VerificationReport> {
    let preset = find_preset(preset_id)?;
    let t = preset.build(n_max + 1)?;
    let polys = t.row_polys();
    let mut report = VerificationReport::new("analyze", preset_id, n_max);
    for check in checks {
        let name = check.name();
        match check {
            AnalysisCheck::RealRooted => {
                for n in 0..=n_max {
                    report.push_bool(n, name, polys[n].is_zero() || sturm_analyze(&polys[n], None)?.real_rooted, None);
                }
            }
            AnalysisCheck::RootInterval => {
                let p = preset
                    .master_params()
                    .ok_or_else(|| incompatible(name, preset_id, "root interval needs master parameters"))?;
                if p.d == int(0) {
                    return Err(incompatible(name, preset_id, "d = 0"));
                }
                let lo = -(p.lambda.clone() / p.d.clone());
                let zero = int(0);
                let (a, b) = if lo <= zero { (&lo, &zero) } else { (&zero, &lo) };
                for n in 0..=n_max {
                    let r = sturm_analyze(&polys[n], Some((a, b)))?;
                    let note = format!("{} of {} real roots in [{a}, {b}]", r.roots_in_interval.unwrap_or(0), r.root_count_total);
                    report.push_bool(n, name, r.real_rooted && r.roots_in_interval == Some(r.root_count_total), Some(note));
                }
            }
            AnalysisCheck::LogConcave => {
                for n in 0..=n_max {
                    let lc = log_concave(t.row(n)?);
                    report.push_bool(n, name, lc.is_ok(), lc.err().map(|k| format!("violation at k = {k}")));
                }
            }
            AnalysisCheck::Interlace => {
                for n in 1..=n_max {
                    let (prev, cur) = (&polys[n - 1], &polys[n]);
                    if prev.degree().unwrap_or(0) == 0 {
                        report.push_bool(n, name, true, Some("previous row constant".into()));
                        continue;
                    }
                    match interlacing(prev, cur) {
                        Ok(ok) => report.push_bool(n, name, ok, None),
                        Err(e) => report.push_bool(n, name, false, Some(e.to_string())),
                    }
                }
            }
            AnalysisCheck::Qlogconvex => {
                let q = strong_q_log_convex(&polys, n_max)?;
                let note = q.witness.as_ref().map(|w| format!("n = {}, m = {}, coefficient {} is {}", w.n, w.m, w.index, w.coefficient));
                report.push_bool(n_max, name, q.verdict, note);
            }
            AnalysisCheck::Gamma => {
                for n in 0..=n_max {
                    let s = structure_summary(&polys[n]);
                    match s.gamma_nonneg {
                        Some(ok) => report.push_bool(n, name, ok, s.gamma.map(|g| format!("gamma = ({})", g.join(", ")))),
                        None => report.push_bool(n, name, false, Some("not applicable: row is not symmetric".into())),
                    }
                }
            }
            AnalysisCheck::Symmetry => {
                for n in 0..=n_max {
                    let s = structure_summary(&polys[n]);
                    let note = s.center.clone().map(|c| format!("center {c}"));
                    report.push_bool(n, "symmetric", s.symmetric, note);
                    report.push_bool(n, "unimodal", s.unimodal, None);
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleOutcome {
    pub preset: String,
    pub n: usize,
    pub row: usize,
    pub histogram: Vec<String>,
    /// `(k, oracle, recurrence)` where the two disagree.
    pub diff: Vec<(usize, String, String)>,
}

impl OracleOutcome {
    pub fn passed(&self) -> bool {
        self.diff.is_empty()
    }
}

/// Brute-force histogram for group size `n` against the matching preset row.
pub fn run_oracle(preset_id: &str, n: usize) -> Result<OracleOutcome> {
    let preset = find_preset(preset_id)?;
    let binding = preset.oracle.ok_or_else(|| Error::NoOracle(preset_id.into()))?;
    let h = binding.histogram(n)?;
    let row_index = n - binding.row_shift;
    let t = preset.build(row_index)?;
    let row = t.row(row_index)?;
    let len = h.len().max(row.len());
    let zero = int(0);
    let diff = (0..len)
        .filter_map(|k| {
            let a = h.get(k).unwrap_or(&zero);
            let b = row.get(k).unwrap_or(&zero);
            (a != b).then(|| (k, a.to_string(), b.to_string()))
        })
        .collect();
    Ok(OracleOutcome {
        preset: preset_id.into(),
        n,
        row: row_index,
        histogram: h.iter().map(|v| v.to_string()).collect(),
        diff,
    })
}

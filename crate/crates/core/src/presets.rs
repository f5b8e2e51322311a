//! Named arrays from the literature, each with its construction, the index
//! shift relating its rows to the usual indexing, an optional brute-force
//! oracle, and the identity checks that apply to it.

use serde::Serialize;

use crate::david_barton::{petersen_rule, runs_rule, type_b_runs_instance, DbInstance};
use crate::error::{Error, Result};
use crate::oracles::{self, TypeBStatistic};
use crate::scalar::{int, Rational};
use crate::transforms::{generalized_eulerian_rule, FrobeniusParams};
use crate::triangle::{build_master, Affine, MasterParams, RecurrenceRule, Support};
use crate::{CoeffRule, Triangle};

/// `T(n,k) = (k+1) T(n-1,k) + (n+1) T(n-1,k-1) + (n-k+1) T(n-1,k-2)`.
pub fn staircase_params() -> MasterParams<Rational> {
    MasterParams::from_ints([1, 0, 1, 1, 1, 0, 1, 1, 1]).expect("lambda is nonzero")
}

/// `X(n,k) = k X(n-1,k) + (n+1) X(n-1,k-1) + (n-k+1) X(n-1,k-2)`.
pub fn excedance_params() -> MasterParams<Rational> {
    MasterParams::from_ints([1, 0, 1, 0, 1, 0, 1, 1, 1]).expect("lambda is nonzero")
}

/// Reversed Lambert rows: `n T(n-1,k) + (2n+k-1) T(n-1,k-1) - (n-k+1) T(n-1,k-2)`,
/// written with `lambda = d`, `a0 = 1/d`, `c = -1`.
pub fn lambert_circ_params(d: &Rational) -> Result<MasterParams<Rational>> {
    MasterParams::new(
        d.clone(),
        Rational::from_integer(1.into()) / d.clone(),
        int(0),
        int(0),
        int(2),
        int(1),
        int(-1),
        int(-1),
        d.clone(),
    )
}

/// `beta(n,k) = (3n-k-4) beta(n-1,k) + (n-1) beta(n-1,k-1) - (k+1) beta(n-1,k+1)`
/// from `beta(1,0) = 1`; row `m` holds `beta_{m+1}`.
pub fn lambert_rule() -> CoeffRule {
    RecurrenceRule::new("lambert", Affine::ints(3, -1, -4), Affine::ints(1, 0, -1))
        .with_term(-1, Affine::ints(0, -1, -1))
        .with_index_offset(1, 0)
}

/// `Z(n,k) = (2k-1) Z(n-1,k) + 3 Z(n-1,k-1) + (2n-2k+2) Z(n-1,k-2)` from
/// `Z(1,1) = 1`; row `m` holds `Z(m+1, k+1)`.
pub fn type_b_runs_rule() -> CoeffRule {
    RecurrenceRule::new("type-B runs", Affine::ints(0, 2, -1), Affine::ints(0, 0, 3))
        .with_term(2, Affine::ints(2, -2, 2))
        .with_index_offset(1, 1)
}

/// `(1+k) A(n-1,k) + (2n-2k+1) A(n-1,k-1)`.
pub fn flower_rule() -> CoeffRule {
    RecurrenceRule::new("flower", Affine::ints(0, 1, 1), Affine::ints(2, -2, 1))
}

/// `Q(n,k) = (n-2k) Q(n-1,k) + (n-2k+1) Q(n-1,k-1)` on `k <= n/2`: the
/// coefficients of `t^(n-2k)` in `Q_n(1, t)`.
pub fn springer_rule() -> CoeffRule {
    RecurrenceRule::new("springer", Affine::ints(1, -2, 0), Affine::ints(1, -2, 1)).with_support(Support::HALF)
}

pub fn frobenius_classical() -> FrobeniusParams {
    FrobeniusParams::from_ints(1, 0, 1, 0).expect("nonzero a1, b1")
}

#[derive(Clone, Debug)]
pub enum Construction {
    Master(MasterParams<Rational>),
    Rule(CoeffRule),
}

/// Preset entry `(n, k)` is entry `(n + row, k + col)` of the array in its
/// usual indexing, multiplied by `factor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Shift {
    pub row: i64,
    pub col: i64,
    pub factor: String,
    pub note: &'static str,
}

impl Shift {
    fn identity(note: &'static str) -> Self {
        Self { row: 0, col: 0, factor: "1".into(), note }
    }

    fn new(row: i64, col: i64, factor: &str, note: &'static str) -> Self {
        Self { row, col, factor: factor.into(), note }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Eulerian,
    TypeBDescent,
    TypeBExcedanceReversed,
    TypeBRuns,
    RunsA,
    RunsAHalved,
    Staircase,
    Lambert,
    LambertReversed,
    Stirling,
}

/// `oracle(n)` is compared with preset row `n - row_shift`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBinding {
    pub kind: OracleKind,
    pub min: usize,
    pub max: usize,
    pub row_shift: usize,
}

impl OracleBinding {
    pub fn histogram(&self, n: usize) -> Result<Vec<Rational>> {
        if n < self.min || n > self.max {
            return Err(Error::OracleRange { what: "preset oracle", n, min: self.min, max: self.max });
        }
        match self.kind {
            OracleKind::Eulerian => oracles::oracle_eulerian(n),
            OracleKind::TypeBDescent => oracles::oracle_type_b(n, TypeBStatistic::Descent),
            OracleKind::TypeBExcedanceReversed => {
                let mut h = oracles::oracle_type_b(n, TypeBStatistic::ExcedanceA)?;
                h.reverse();
                Ok(h)
            }
            OracleKind::TypeBRuns => oracles::oracle_type_b(n, TypeBStatistic::Runs),
            OracleKind::RunsA => oracles::oracle_runs_a(n),
            OracleKind::RunsAHalved => Ok(oracles::oracle_runs_a(n)?.into_iter().map(|v| v / int(2)).collect()),
            OracleKind::Staircase => oracles::oracle_staircase(n),
            OracleKind::Lambert => Ok(oracles::oracle_lambert(n - 1).row(n - 1)?.to_vec()),
            OracleKind::LambertReversed => Ok(oracles::oracle_lambert_circ(n).row(n)?.to_vec()),
            OracleKind::Stirling => (0..=n).map(|k| oracles::oracle_stirling(n, k)).collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Preset {
    pub id: &'static str,
    pub description: &'static str,
    pub construction: Construction,
    pub shift: Shift,
    pub oracle: Option<OracleBinding>,
    pub theorems: &'static [&'static str],
    /// Parameters for the alternating-runs identities, where they apply.
    pub db_instance: Option<DbInstance>,
}

impl Preset {
    pub fn build(&self, n_max: usize) -> Result<Triangle> {
        match &self.construction {
            Construction::Master(p) => build_master(p, n_max),
            Construction::Rule(r) => Ok(r.build(n_max)),
        }
    }

    pub fn master_params(&self) -> Option<&MasterParams<Rational>> {
        match &self.construction {
            Construction::Master(p) => Some(p),
            Construction::Rule(_) => None,
        }
    }

    pub fn supports(&self, target: &str) -> bool {
        self.theorems.contains(&target)
    }
}

fn oracle(kind: OracleKind, min: usize, max: usize, row_shift: usize) -> Option<OracleBinding> {
    Some(OracleBinding { kind, min, max, row_shift })
}

pub fn preset_catalog() -> Vec<Preset> {
    let db = |inst: DbInstance| Construction::Master(inst.master_params().expect("d is nonzero"));
    let runs_a = DbInstance::from_ints(1, 1, 1, 1).expect("valid sigma");
    vec![
        Preset {
            id: "eulerian-shifted",
            description: "Eulerian numbers, (k+1) T(n-1,k) + (n-k+1) T(n-1,k-1)",
            construction: Construction::Rule(generalized_eulerian_rule(&int(1), &int(1))),
            shift: Shift::new(1, 0, "1", "row n counts permutations of n+1 by descents"),
            oracle: oracle(OracleKind::Eulerian, 1, oracles::MAX_SYMMETRIC, 1),
            theorems: &["thm32", "thm33", "thm35"],
            db_instance: None,
        },
        Preset {
            id: "eulerian-typeB",
            description: "type-B Eulerian numbers, (2k+1) T(n-1,k) + (2n-2k+1) T(n-1,k-1)",
            construction: Construction::Rule(generalized_eulerian_rule(&int(2), &int(1))),
            shift: Shift::identity("row n counts signed permutations of rank n by descents"),
            oracle: oracle(OracleKind::TypeBDescent, 0, oracles::MAX_HYPEROCTAHEDRAL, 0),
            theorems: &["thm32", "thm33", "thm35"],
            db_instance: None,
        },
        Preset {
            id: "excedance-typeB-X*",
            description: "signed permutations by non-excedances, k X(n-1,k) + (n+1) X(n-1,k-1) + (n-k+1) X(n-1,k-2)",
            construction: Construction::Master(excedance_params()),
            shift: Shift::identity("entry k counts signed permutations of rank n with n-k excedances"),
            oracle: oracle(OracleKind::TypeBExcedanceReversed, 0, oracles::MAX_HYPEROCTAHEDRAL, 0),
            theorems: &["thm21"],
            db_instance: None,
        },
        Preset {
            id: "staircase",
            description: "staircase tableaux, (k+1) T(n-1,k) + (n+1) T(n-1,k-1) + (n-k+1) T(n-1,k-2)",
            construction: Construction::Master(staircase_params()),
            shift: Shift::identity("row n: tableaux of size n by alpha/delta on the diagonal"),
            oracle: oracle(OracleKind::Staircase, 0, oracles::MAX_TABLEAU, 0),
            theorems: &["thm21", "prop42", "egf-staircase"],
            db_instance: None,
        },
        Preset {
            id: "lambert-beta",
            description: "Lambert W derivative array beta(n,k)",
            construction: Construction::Rule(lambert_rule()),
            shift: Shift::new(1, 0, "1", "row n is beta_{n+1}"),
            oracle: oracle(OracleKind::Lambert, 1, 16, 1),
            theorems: &["prop41"],
            db_instance: None,
        },
        Preset {
            id: "lambert-beta-circ",
            description: "reversed Lambert rows, n T(n-1,k) + (2n+k-1) T(n-1,k-1) - (n-k+1) T(n-1,k-2)",
            construction: Construction::Master(lambert_circ_params(&int(1)).expect("d is nonzero")),
            shift: Shift::new(1, 0, "1", "entry (n,k) is beta(n+1, n-k)"),
            oracle: oracle(OracleKind::LambertReversed, 0, 15, 0),
            theorems: &["thm21", "prop41"],
            db_instance: None,
        },
        Preset {
            id: "runs-A",
            description: "alternating runs R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2)",
            construction: Construction::Rule(runs_rule()),
            shift: Shift::new(2, 1, "1", "entry (n,k) is R(n+2, k+1)"),
            oracle: oracle(OracleKind::RunsA, 2, oracles::MAX_SYMMETRIC, 2),
            theorems: &[],
            db_instance: None,
        },
        Preset {
            id: "runs-A-shifted",
            description: "halved alternating runs, (k+1) T(n-1,k) + 2 T(n-1,k-1) + (n-k+1) T(n-1,k-2)",
            construction: db(runs_a.clone()),
            shift: Shift::new(2, 1, "1/2", "entry (n,k) is R(n+2, k+1) / 2"),
            oracle: oracle(OracleKind::RunsAHalved, 2, oracles::MAX_SYMMETRIC, 2),
            theorems: &["thm21", "thm36"],
            db_instance: Some(runs_a),
        },
        Preset {
            id: "runs-typeB-Z",
            description: "up signed permutations by alternating runs, Z(n,k) recurrence",
            construction: Construction::Rule(type_b_runs_rule()),
            shift: Shift::new(1, 1, "1", "entry (n,k) is Z(n+1, k+1)"),
            oracle: oracle(OracleKind::TypeBRuns, 1, oracles::MAX_HYPEROCTAHEDRAL, 1),
            theorems: &[],
            db_instance: None,
        },
        Preset {
            id: "runs-typeB-Z-shifted",
            description: "type-B runs as (2k+1) T(n-1,k) + 3 T(n-1,k-1) + 2(n-k+1) T(n-1,k-2)",
            construction: db(type_b_runs_instance()),
            shift: Shift::new(1, 1, "1", "entry (n,k) is Z(n+1, k+1)"),
            oracle: oracle(OracleKind::TypeBRuns, 1, oracles::MAX_HYPEROCTAHEDRAL, 1),
            theorems: &["thm21", "thm36", "prop43"],
            db_instance: Some(type_b_runs_instance()),
        },
        Preset {
            id: "flower",
            description: "companion of the staircase array, (1+k) A(n-1,k) + (2n-2k+1) A(n-1,k-1)",
            construction: Construction::Rule(flower_rule()),
            shift: Shift::identity("companion array of staircase"),
            oracle: None,
            theorems: &["thm32", "egf-flower"],
            db_instance: None,
        },
        Preset {
            id: "petersen-Wl",
            description: "(2k+1) W(n-1,k) + (n-2k+1) W(n-1,k-1) on k <= (n+1)/2",
            construction: Construction::Rule(petersen_rule()),
            shift: Shift::identity("peak-type array"),
            oracle: None,
            theorems: &["thm34"],
            db_instance: None,
        },
        Preset {
            id: "frobenius-classical",
            description: "k F(n-1,k) + k F(n-1,k-1) = k! S(n,k)",
            construction: Construction::Rule(frobenius_classical().rule()),
            shift: Shift::identity("ordered set partitions of [n] into k blocks"),
            oracle: oracle(OracleKind::Stirling, 0, oracles::MAX_STIRLING, 0),
            theorems: &["thm31", "egfF"],
            db_instance: None,
        },
        Preset {
            id: "springer",
            description: "coefficients of t^(n-2k) in the derivative polynomial Q_n(1,t)",
            construction: Construction::Rule(springer_rule()),
            shift: Shift::identity("entry (n,k) multiplies t^(n-2k)"),
            oracle: None,
            theorems: &["egf-Q"],
            db_instance: None,
        },
    ]
}

pub fn find_preset(id: &str) -> Result<Preset> {
    preset_catalog().into_iter().find(|p| p.id == id).ok_or_else(|| Error::UnknownPreset(id.to_string()))
}

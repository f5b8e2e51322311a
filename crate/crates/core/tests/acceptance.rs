//! Acceptance suite. Each test prints one `PASS`/`FAIL` line for its criterion
//! (written to the process's stdout so it shows without `--nocapture`), then asserts.
//!
//! Tolerances: every comparison is exact rational equality; the only numeric
//! tolerances are the wall-clock budgets below.

use std::io::Write;
use std::time::{Duration, Instant};

use geneuler::analysis::{log_concave, strong_q_log_convex, sturm_analyze};
use geneuler::david_barton::{build_t_db, verify_thm36, DbInstance};
use geneuler::derivative::springer;
use geneuler::egf::{egf_rows_integral, frobenius_egf};
use geneuler::oracles::{oracle_eulerian, oracle_springer, oracle_stirling, MAX_SYMMETRIC};
use geneuler::presets::{find_preset, preset_catalog};
use geneuler::report::VerificationReport;
use geneuler::runner::{run_analyze, run_oracle, run_verify, AnalysisCheck};
use geneuler::sampling::{compatible_params, rng};
use geneuler::scalar::{int, rat};
use geneuler::transforms::{eulerian_via_frobenius, gamma_decompose, lift_a_to_t, FrobeniusParams};
use geneuler::triangle::{build_companion, build_master};
use geneuler::{Poly, Rational};

const BUDGET_1: Duration = Duration::from_secs(1);
const BUDGET_2: Duration = Duration::from_secs(30);
const BUDGET_3: Duration = Duration::from_secs(60);
/// Criteria without a stated budget share the whole-suite allowance.
const BUDGET_SUITE: Duration = Duration::from_secs(300);

struct Outcome {
    id: &'static str,
    title: &'static str,
    started: Instant,
    budget: Duration,
    failures: Vec<String>,
    checks: usize,
}

impl Outcome {
    fn start(id: &'static str, title: &'static str, budget: Duration) -> Self {
        Self { id, title, started: Instant::now(), budget, failures: Vec::new(), checks: 0 }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(&mut self, what: &str, r: &VerificationReport) {
        self.checks += r.checks.len();
        for c in r.failures() {
            self.failures.push(format!("{what}: n = {} {} {:?} {:?}", c.n, c.label, c.mismatch, c.note));
        }
    }

    fn finish(self) {
        let elapsed = self.started.elapsed();
        let in_time = elapsed <= self.budget;
        let ok = self.failures.is_empty() && in_time;
        let mut line = format!(
            "criterion {}: {} - {} ({} checks, {:.2?} of {:?})",
            self.id,
            if ok { "PASS" } else { "FAIL" },
            self.title,
            self.checks,
            elapsed,
            self.budget
        );
        if !in_time {
            line.push_str(" over budget");
        }
        for f in self.failures.iter().take(3) {
            line.push_str(&format!("\n    {f}"));
        }
        // the harness captures print!; the device file reaches the terminal or tee
        match std::fs::OpenOptions::new().append(true).open("/dev/stdout") {
            Ok(mut f) => writeln!(f, "{line}").unwrap(),
            Err(_) => println!("{line}"),
        }
        assert!(ok, "{line}");
    }
}

fn verify(target: &str, scope: &str, n_max: usize) -> VerificationReport {
    run_verify(target, scope, n_max, 0).unwrap_or_else(|e| panic!("{target} on {scope}: {e}"))
}

#[test]
fn criterion_01_type_b_runs_rows() {
    let mut o = Outcome::start("1", "Z_1..Z_3 from the type-B runs recurrence", BUDGET_1);
    let t = find_preset("runs-typeB-Z").unwrap().build(2).unwrap();
    // Z_n(x) = x * (row n-1)
    let expected = [Poly::from_ints(&[0, 1]), Poly::from_ints(&[0, 1, 3]), Poly::from_ints(&[0, 1, 12, 11])];
    for (i, z) in expected.iter().enumerate() {
        let got = &Poly::x() * &t.row_poly(i).unwrap();
        o.check(&got == z, || format!("Z_{} = {got:?}", i + 1));
    }
    o.finish();
}

#[test]
fn criterion_02_oracle_equivalence() {
    let mut o = Outcome::start("2", "every oracle-backed preset matches brute force over its range", BUDGET_2);
    for p in preset_catalog() {
        let Some(b) = p.oracle else { continue };
        for n in b.min..=b.max {
            let r = run_oracle(p.id, n).unwrap();
            o.check(r.passed(), || format!("{} n = {n}: {:?}", p.id, r.diff));
        }
    }
    o.finish();
}

#[test]
fn criterion_03_lift_theorem() {
    let mut o = Outcome::start("3", "lift A -> T on compatible presets (n <= 15) and 100 random draws (n <= 12)", BUDGET_3);
    let mut presets = 0;
    for p in preset_catalog().iter().filter(|p| p.supports("thm21")) {
        presets += 1;
        o.report(p.id, &verify("thm21", p.id, 15));
    }
    o.check(presets >= 5, || format!("only {presets} compatible presets"));
    let r = verify("thm21", "random", 12);
    let draws = r.checks.iter().filter_map(|c| c.label.split(']').next()).collect::<std::collections::HashSet<_>>().len();
    o.check(draws >= 100, || format!("{draws} draws"));
    o.report("random", &r);
    o.finish();
}

#[test]
fn criterion_04_frobenius_formulas() {
    let mut o = Outcome::start("4", "explicit Frobenius-type formulas and Eulerian numbers via Stirling sums, n <= 12", BUDGET_SUITE);
    o.report("thm31 classical", &verify("thm31", "frobenius-classical", 12));
    for scope in ["eulerian-shifted", "eulerian-typeB", "flower"] {
        o.report(scope, &verify("thm32", scope, 12));
    }
    o.report("thm31 random", &verify("thm31", "random", 12));
    o.report("thm32 random", &verify("thm32", "random", 12));
    // classical Frobenius entries against brute-force set partitions
    let classical = find_preset("frobenius-classical").unwrap().build(12).unwrap();
    for n in 0..=12 {
        for k in 0..=n {
            let oracle = oracle_stirling(n, k).unwrap();
            o.check(classical.get(n, k) == oracle, || format!("Frobenius ({n},{k})"));
        }
    }
    // Stirling-sum Eulerian numbers (k = 1 + descents): brute force up to S_8,
    // the recurrence beyond
    let eulerian = find_preset("eulerian-shifted").unwrap().build(11).unwrap();
    for n in 1..=12 {
        let via: Vec<Rational> = (1..=n).map(|k| eulerian_via_frobenius(n, k)).collect();
        if n <= MAX_SYMMETRIC {
            let h = oracle_eulerian(n).unwrap();
            o.check(via == h, || format!("n = {n}: {via:?} vs oracle {h:?}"));
        }
        o.check(via.as_slice() == eulerian.row(n - 1).unwrap(), || format!("n = {n} vs recurrence"));
    }
    let e42 = eulerian_via_frobenius(4, 2);
    o.check(e42 == int(11) && oracle_eulerian(4).unwrap()[2] == int(11), || format!("<4,2> = {e42}"));
    o.finish();
}

#[test]
fn criterion_05_gamma_positivity() {
    let mut o = Outcome::start("5", "gamma-decomposition of generalized Eulerian rows, gamma_k = S(n,k)(2a1/c)^k, n <= 15", BUDGET_SUITE);
    for scope in ["eulerian-shifted", "eulerian-typeB"] {
        o.report(scope, &verify("thm33", scope, 15));
        let t = find_preset(scope).unwrap().build(15).unwrap();
        for n in 0..=15 {
            let g = gamma_decompose(&t.row_poly(n).unwrap(), n);
            o.check(g.as_ref().is_ok_and(|g| g.is_nonnegative()), || format!("{scope} n = {n}: {g:?}"));
        }
    }
    o.finish();
}

#[test]
fn criterion_06_derivative_polynomials() {
    let mut o = Outcome::start("6", "radical-free derivative-polynomial identities and Springer numbers, n <= 12", BUDGET_SUITE);
    o.report("thm34 petersen", &verify("thm34", "petersen-Wl", 12));
    o.report("thm34 random", &verify("thm34", "random", 12));
    for scope in ["eulerian-shifted", "eulerian-typeB"] {
        o.report(scope, &verify("thm35", scope, 12));
    }
    o.report("thm35 random", &verify("thm35", "random", 12));
    o.report("Q egf", &verify("egf-Q", "springer", 12));
    let s: Vec<Rational> = springer(12).into_iter().map(Rational::from_integer).collect();
    let oracle = oracle_springer(12);
    o.check(s == oracle, || format!("{s:?} vs {oracle:?}"));
    o.finish();
}

fn thm36_instances(sigma: i64) -> Vec<DbInstance> {
    [(1, 1, 1), (2, 1, 1), (1, 2, 3), (3, 2, 2)]
        .into_iter()
        .map(|(a1, a2, d)| DbInstance::from_ints(a1, a2, d, sigma).unwrap())
        .collect()
}

#[test]
fn criterion_07_david_barton_sigma_0_and_1() {
    let mut o = Outcome::start("7", "David-Barton identities for sigma in {0, 1}, classical and type-B instances, n <= 12", BUDGET_SUITE);
    o.report("runs-A-shifted (with classical)", &verify("thm36", "runs-A-shifted", 12));
    o.report("runs-typeB-Z-shifted", &verify("thm36", "runs-typeB-Z-shifted", 12));
    o.report("prop43", &verify("prop43", "runs-typeB-Z-shifted", 12));
    for sigma in [0, 1] {
        for inst in thm36_instances(sigma) {
            o.report(&format!("sigma = {sigma}"), &verify_thm36(&inst, 12, "acceptance").unwrap());
        }
    }
    let half = DbInstance::new(rat(1, 2), rat(3, 2), rat(2, 3), 0).unwrap();
    o.report("rational sigma = 0", &verify_thm36(&half, 12, "acceptance").unwrap());
    o.finish();
}

/// Left red: with sigma = -1 the recurrence from `T_0 = 1` gives
/// `T_1 = d a2 + d (a2 - a1) x`, while the closed form needs `a2 d (1 + x)`,
/// and the difference propagates to every later row.
#[test]
fn criterion_07b_david_barton_sigma_minus_one() {
    let mut o = Outcome::start("7b", "David-Barton identity for sigma = -1, n <= 12", BUDGET_SUITE);
    for inst in thm36_instances(-1) {
        o.report(&format!("a1 = {} a2 = {} d = {}", inst.a1, inst.a2, inst.d), &verify_thm36(&inst, 12, "acceptance").unwrap());
    }
    o.finish();
}

#[test]
fn criterion_08_egf_suite() {
    let mut o = Outcome::start("8", "exponential generating functions against rows, order 8", BUDGET_SUITE);
    o.report("frobenius", &verify("egfF", "frobenius-classical", 8));
    o.report("frobenius random", &verify("egfF", "random", 8));
    o.report("staircase", &verify("egf-staircase", "staircase", 8));
    o.report("flower", &verify("egf-flower", "flower", 8));
    o.finish();
}

#[test]
fn criterion_09_analysis_suite() {
    let mut o = Outcome::start("9", "Sturm-chain analysis: staircase roots, Lambert log-concavity and q-log-convexity, Z~ rows", BUDGET_SUITE);
    use AnalysisCheck::*;
    o.report("staircase", &run_analyze("staircase", 12, &[RealRooted, RootInterval]).unwrap());
    o.report("lambert-beta", &run_analyze("lambert-beta", 15, &[LogConcave]).unwrap());
    o.report("lambert-beta", &run_analyze("lambert-beta", 8, &[Qlogconvex]).unwrap());
    o.report("Z~", &run_analyze("runs-typeB-Z-shifted", 12, &[RealRooted, LogConcave]).unwrap());

    // the same decisions made directly, with root locations pinned to [-1, 0]
    let staircase = find_preset("staircase").unwrap().build(12).unwrap();
    for n in 0..=12 {
        let r = sturm_analyze(&staircase.row_poly(n).unwrap(), Some((&int(-1), &int(0)))).unwrap();
        o.check(r.real_rooted && r.roots_in_interval == Some(r.root_count_total), || format!("staircase n = {n}: {r:?}"));
    }
    let lambert = find_preset("lambert-beta").unwrap().build(15).unwrap();
    for n in 0..=15 {
        o.check(log_concave(lambert.row(n).unwrap()).is_ok(), || format!("lambert n = {n}"));
    }
    let q = strong_q_log_convex(&lambert.row_polys(), 8).unwrap();
    o.check(q.verdict, || format!("{:?}", q.witness));
    let z = build_t_db(&DbInstance::from_ints(2, 1, 1, 1).unwrap(), 12);
    for n in 0..=12 {
        let p = z.row_poly(n).unwrap();
        let r = sturm_analyze(&p, None).unwrap();
        o.check(r.real_rooted && log_concave(z.row(n).unwrap()).is_ok(), || format!("Z~ n = {n}"));
    }
    o.report("prop41", &verify("prop41", "lambert-beta", 8));
    o.report("prop42", &verify("prop42", "staircase", 12));
    o.finish();
}

#[test]
fn criterion_10_self_consistency() {
    let mut o = Outcome::start("10", "engine self-consistency, reciprocal involution, lift paths, EGF integrality", BUDGET_SUITE);
    let mut g = rng(10);
    for i in 0..50 {
        let p = compatible_params(&mut g);
        let t = build_master(&p, 10).unwrap();
        o.check(t.rows() == p.master_rule().build(10).rows(), || format!("draw {i}: engines differ for {p}"));
        o.check(t.reciprocal().reciprocal().rows() == t.rows(), || format!("draw {i}: reciprocal"));
        let a = build_companion(&p, 10).unwrap();
        for n in 0..=10 {
            let by_coeff = Poly::new(lift_a_to_t(&a, &p.lambda, &p.d, n).unwrap());
            let by_poly = a.row_poly(n).unwrap().linear_lift(n, &p.lambda, &p.d).unwrap();
            o.check(by_coeff == by_poly && by_poly == t.row_poly(n).unwrap(), || format!("draw {i} n = {n}: lift paths"));
        }
    }
    for p in preset_catalog() {
        let t = p.build(12).unwrap();
        o.check(t.reciprocal().reciprocal().rows() == t.rows(), || format!("{} reciprocal", p.id));
    }
    for (a1, a2, b1, b2) in [(1, 0, 1, 0), (1, 1, 1, 1), (2, 1, 2, 1), (3, -2, 2, 3), (1, 3, 3, -1)] {
        let p = FrobeniusParams::from_ints(a1, a2, b1, b2).unwrap();
        let s = frobenius_egf(&p, 8).unwrap();
        o.check(egf_rows_integral(&s), || format!("EGF not integral for ({a1},{a2},{b1},{b2})"));
    }
    o.finish();
}

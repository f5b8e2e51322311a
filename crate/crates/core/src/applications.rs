//! Consequences for the Lambert array and the staircase array.

use num_traits::{Signed, Zero};

use crate::analysis::{log_concave, strong_q_log_convex, sturm_analyze};
use crate::egf::verify_egf_staircase;
use crate::error::Result;
use crate::oracles::oracle_lambert;
use crate::presets::{flower_rule, lambert_circ_params, lambert_rule, staircase_params};
use crate::report::VerificationReport;
use crate::scalar::{binomial, binomial_usize, int, pow, rat, Rational};
use crate::transforms::verify_thm21;
use crate::triangle::{build_companion, build_master};
use crate::Poly;

/// Lambert rows `f_n = beta_{n+1}`: agreement with the `p_n` polynomials,
/// positivity, log-concavity, strong q-log-convexity of `f_0, .., f_{n_max+1}`,
/// and the route `beta_{n+1}(q) = A*_n(q + 1)` through the companion array.
pub fn verify_prop41(n_max: usize) -> Result<VerificationReport> {
    let beta = lambert_rule().build(n_max + 1);
    let from_p = oracle_lambert(n_max + 1);
    let params = lambert_circ_params(&int(1))?;
    let companion = build_companion(&params, n_max + 1)?;
    let shift = Poly::from_ints(&[1, 1]);
    let mut report = VerificationReport::new("prop41", "lambert-beta", n_max);
    for n in 0..=n_max {
        let row = beta.row(n)?;
        report.push_values(n, "rule agrees with p_n recurrence", row, from_p.row(n)?);
        report.push_bool(n, "(i) positive", row.iter().all(|v| v.is_positive()), None);
        let lc = log_concave(row);
        report.push_bool(n, "(ii) log-concave", lc.is_ok(), lc.err().map(|k| format!("violation at k = {k}")));
        let reversed = companion.row_poly(n)?.reverse(n);
        report.push_poly(n, "beta_{n+1}(q) = A*_n(q+1)", &beta.row_poly(n)?, &reversed.compose(&shift));
    }
    let polys = beta.row_polys();
    let q = strong_q_log_convex(&polys, n_max)?;
    let note = q.witness.as_ref().map(|w| format!("n = {}, m = {}, coefficient {} is {}", w.n, w.m, w.index, w.coefficient));
    report.push_bool(n_max, "(iii) strongly q-log-convex", q.verdict, note);
    report.absorb("lift", verify_thm21(&params, n_max, "lambert-beta-circ")?);
    Ok(report)
}

/// `sum_{k,i,j} C(n-k,m-k) C(n-i,k-i) C(1/2+i,i) C(i,j) (-2)^k (-1)^j (1+j)^n`.
pub fn staircase_explicit(n: usize, m: usize) -> Rational {
    let mut total = Rational::zero();
    for k in 0..=m.min(n) {
        let outer = binomial_usize::<Rational>(n - k, m - k) * pow(&int(-2), k);
        let mut inner = Rational::zero();
        for i in 0..=k {
            let head = binomial_usize::<Rational>(n - i, k - i) * binomial(&(rat(1, 2) + int(i as i64)), i);
            let sum = (0..=i).fold(Rational::zero(), |acc, j| {
                let term = binomial_usize::<Rational>(i, j) * pow(&int(1 + j as i64), n);
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            });
            inner += head * sum;
        }
        total += outer * inner;
    }
    total
}

/// Staircase rows: real zeros in `[-1, 0]` and log-concavity, the explicit
/// formula, and the exponential generating function (order capped at 10).
pub fn verify_prop42(n_max: usize) -> Result<VerificationReport> {
    let t = build_master(&staircase_params(), n_max)?;
    let flower = flower_rule().build(n_max);
    let mut report = VerificationReport::new("prop42", "staircase", n_max);
    let (lo, hi) = (int(-1), int(0));
    for n in 0..=n_max {
        let row = t.row_poly(n)?;
        let roots = sturm_analyze(&row, Some((&lo, &hi)))?;
        report.push_bool(n, "(i) real zeros", roots.real_rooted, None);
        report.push_bool(n, "(i) zeros in [-1, 0]", roots.roots_in_interval == Some(roots.root_count_total), None);
        report.push_bool(n, "(i) companion row real-rooted", sturm_analyze(&flower.row_poly(n)?, None)?.real_rooted, None);
        report.push_bool(n, "(i) log-concave", log_concave(t.row(n)?).is_ok(), None);
        let explicit: Vec<Rational> = (0..=n).map(|m| staircase_explicit(n, m)).collect();
        report.push_values(n, "(ii) explicit formula", t.row(n)?, &explicit);
    }
    report.absorb("(iii)", verify_egf_staircase(n_max.min(10))?);
    Ok(report)
}

//! Exponential generating functions checked coefficientwise against the
//! recurrences, as truncated series in `t` over polynomials in `q`.

use num_traits::One;

use crate::error::Result;
use crate::presets::staircase_params;
use crate::report::VerificationReport;
use crate::scalar::{factorial, int, is_integer, rat, Rational};
use crate::transforms::FrobeniusParams;
use crate::triangle::{build_companion, build_master};
use crate::{BiSeries, Poly, Triangle};

/// `n! [t^n]` of `s` has integer coefficients for every `n`.
pub fn egf_rows_integral(s: &BiSeries) -> bool {
    (0..=s.order()).all(|n| s.egf_coeff(n).coeffs().iter().all(is_integer))
}

fn compare_rows(report: &mut VerificationReport, s: &BiSeries, rows: &Triangle) -> Result<()> {
    for n in 0..=s.order() {
        report.push_poly(n, "coefficient of t^n / n!", &s.egf_coeff(n), &rows.row_poly(n)?);
    }
    report.push_bool(s.order(), "rows integral", egf_rows_integral(s), None);
    Ok(())
}

/// `e^(a2 t) [1 + (b1/a1) q (1 - e^(a1 t))]^(-(1 + b2/b1))`.
pub fn frobenius_egf(p: &FrobeniusParams, order: usize) -> Result<BiSeries> {
    let ratio = Poly::monomial(p.b1.clone() / p.a1.clone(), 1);
    let e_minus_one = &BiSeries::exp_linear(order, &Poly::constant(p.a1.clone())) - &BiSeries::one(order);
    let bracket = &BiSeries::one(order) - &e_minus_one.scale(&ratio);
    let exponent = -(Rational::one() + p.b2.clone() / p.b1.clone());
    let power = bracket.pow(&exponent)?;
    Ok(&BiSeries::exp_linear(order, &Poly::constant(p.a2.clone())) * &power)
}

pub fn verify_egf_f(p: &FrobeniusParams, order: usize, scope: &str) -> Result<VerificationReport> {
    let s = frobenius_egf(p, order)?;
    let mut report = VerificationReport::new("egfF", scope, order);
    let rows = p.build(order);
    for n in 0..=order {
        report.push_poly(n, "coefficient of t^n / n!", &s.egf_coeff(n), &rows.row_poly(n)?);
    }
    if [&p.a1, &p.a2, &p.b1, &p.b2].into_iter().all(is_integer) {
        report.push_bool(order, "rows integral", egf_rows_integral(&s), None);
    }
    Ok(report)
}

/// `sum_{m >= 1} u^(m-1) t^m / m!`, i.e. `(e^(u t) - 1) / u` without the division.
fn divided_exp_minus_one(order: usize, u: &Poly) -> BiSeries {
    let mut coeffs = vec![Poly::zero()];
    coeffs.extend((1..=order).map(|m| u.pow(m - 1).scale(&(Rational::one() / factorial::<Rational>(m)))));
    BiSeries::new(order, coeffs)
}

/// `(e^(u t / 3) / (1 - v (e^(u t) - 1) / u))^(3/2)`, the common shape of both
/// staircase-type generating functions after cancelling the factor `u`.
fn three_halves_form(order: usize, u: &Poly, v: &Poly) -> Result<BiSeries> {
    let head = BiSeries::exp_linear(order, &u.scale(&rat(1, 3)));
    let denom = &BiSeries::one(order) - &divided_exp_minus_one(order, u).scale(v);
    (&head * &denom.recip()?).pow(&rat(3, 2))
}

/// `((q-1) e^((q-1)t/3) / (2q - (q+1) e^((q-1)t)))^(3/2)`, using
/// `2q - (q+1) e^((q-1)t) = (q-1) [1 - (q+1) sum_{m>=1} (q-1)^(m-1) t^m / m!]`.
pub fn staircase_egf(order: usize) -> Result<BiSeries> {
    three_halves_form(order, &Poly::from_ints(&[-1, 1]), &Poly::from_ints(&[1, 1]))
}

/// `((2q-1) e^((2q-1)t/3) / (2q - e^((2q-1)t)))^(3/2)`, using
/// `2q - e^((2q-1)t) = (2q-1) [1 - sum_{m>=1} (2q-1)^(m-1) t^m / m!]`.
pub fn flower_egf(order: usize) -> Result<BiSeries> {
    three_halves_form(order, &Poly::from_ints(&[-1, 2]), &Poly::one())
}

pub fn verify_egf_staircase(order: usize) -> Result<VerificationReport> {
    let s = staircase_egf(order)?;
    let rows = build_master(&staircase_params(), order)?;
    let mut report = VerificationReport::new("egf-staircase", "staircase", order).with_path("factor q - 1 cancelled");
    compare_rows(&mut report, &s, &rows)?;
    Ok(report)
}

pub fn verify_egf_flower(order: usize) -> Result<VerificationReport> {
    let s = flower_egf(order)?;
    let rows = build_companion(&staircase_params(), order)?;
    let mut report = VerificationReport::new("egf-flower", "flower", order).with_path("factor 2q - 1 cancelled");
    compare_rows(&mut report, &s, &rows)?;
    Ok(report)
}

/// The `a1 = b1 = 1`, `a2 = b2 = 0` instance, whose rows are `k! S(n,k)`.
pub fn ordered_set_partitions(order: usize) -> Result<BiSeries> {
    frobenius_egf(&FrobeniusParams::new(int(1), int(0), int(1), int(0))?, order)
}

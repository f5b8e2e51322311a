//! Derivative polynomials `Q_n(delta, t)` defined by
//! `d^n/dt^n sec^delta = Q_n(delta, tan) sec^delta`, and identities that
//! express gamma-type arrays through them.
//!
//! Identities stated with square roots or `sqrt(-1)` are checked after a
//! substitution that clears every radical:
//!
//! * `S_n(q) = (a/2)^n (2cq/a - 1)^(n/2) Q_n(2b/a, 1/sqrt(2cq/a - 1))` becomes,
//!   with `v = 2cq/a - 1`, the polynomial identity
//!   `S_n(a(1+v)/(2c)) = (a/2)^n sum_k Q_{n,k}(2b/a) v^k`.
//! * For the generalized Eulerian rows, substituting `t = -i(1+x)/(1-x)` into
//!   the parity-structured monomials `t^(n-2k)` and collecting powers of `i`
//!   gives `E_n(x) = (a1/2)^n sum_k Q_{n,k}(2 a2/a1) (-1)^k (1+x)^(n-2k) (1-x)^(2k)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::report::VerificationReport;
use crate::scalar::{factorial, int, pow, Rational};
use crate::series::Series;
use crate::transforms::{gamma_rule, generalized_eulerian_rule};
use crate::{BiSeries, Poly};

/// `Q_n(delta, t) = sum_k coeffs[k] t^(n-2k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct QPoly {
    pub n: usize,
    pub delta: Rational,
    pub coeffs: Vec<Rational>,
}

impl QPoly {
    /// Reads the parity-structured coefficients off a dense polynomial;
    /// `None` if a monomial of the wrong parity is present.
    pub fn from_dense(n: usize, delta: Rational, p: &Poly) -> Option<Self> {
        if p.degree().is_some_and(|d| d > n) {
            return None;
        }
        let wrong_parity = p
            .coeffs()
            .iter()
            .enumerate()
            .any(|(e, c)| (n - e.min(n)) % 2 == 1 && !c.is_zero());
        if wrong_parity {
            return None;
        }
        let coeffs = (0..=n / 2).map(|k| p.coeff(n - 2 * k)).collect();
        Some(Self { n, delta, coeffs })
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_dense(&self) -> Poly {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (k, c)| &acc + &Poly::monomial(c.clone(), self.n - 2 * k))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.to_dense().eval(t)
    }
}

/// `Q_0 .. Q_{n_max}` from `Q_{n+1} = (1 + t^2) Q_n' + delta t Q_n`.
pub fn build_q(delta: &Rational, n_max: usize) -> Vec<QPoly> {
    let one_plus_t2 = Poly::from_ints(&[1, 0, 1]);
    let delta_t = Poly::monomial(delta.clone(), 1);
    let mut dense = Poly::one();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        out.push(QPoly::from_dense(n, delta.clone(), &dense).expect("recurrence preserves parity"));
        dense = &(&one_plus_t2 * &dense.derivative()) + &(&delta_t * &dense);
    }
    out
}

/// Springer numbers `Q_n(1, 1)`.
pub fn springer(n_max: usize) -> Vec<BigInt> {
    build_q(&int(1), n_max)
        .iter()
        .map(|q| {
            let v = q.eval(&int(1));
            assert!(v.is_integer(), "Q_n(1,1) is an integer");
            v.to_integer()
        })
        .collect()
}

/// Gamma array with row polynomials expressible through `Q_n(2b/a, .)`:
/// checks `S_n(a(1+v)/(2c)) = (a/2)^n sum_k Q_{n,k}(2b/a) v^k`.
pub fn verify_thm34(a: &Rational, b: &Rational, c: &Rational, n_max: usize, scope: &str) -> Result<VerificationReport> {
    if a.is_zero() {
        return Err(Error::ZeroParameter("a"));
    }
    if c.is_zero() {
        return Err(Error::ZeroParameter("c"));
    }
    let s = gamma_rule(a, b, c).build(n_max);
    let delta = int(2) * b.clone() / a.clone();
    let q = build_q(&delta, n_max);
    let half_a = a.clone() / int(2);
    let arg = Poly::linear(a.clone() / (int(2) * c.clone()), a.clone() / (int(2) * c.clone()));
    let mut report = VerificationReport::new("thm34", scope, n_max).with_path("substitution q = a(1+v)/(2c)");
    if !(a.is_positive() && b.is_positive() && c.is_positive()) {
        report.flag("outside a, b, c > 0");
    }
    for n in 0..=n_max {
        let lhs = s.row_poly(n)?.compose(&arg);
        let rhs = Polynomial::new(q[n].coeffs.clone()).scale(&pow(&half_a, n));
        report.push_poly(n, "radical-free form", &lhs, &rhs);
    }
    Ok(report)
}

/// `(a1/2)^n sum_k Q_{n,k}(2 a2/a1) (-1)^k (1+x)^(n-2k) (1-x)^(2k)`.
pub fn thm35_rhs(a1: &Rational, q: &QPoly) -> Poly {
    let n = q.n;
    let plus = Poly::from_ints(&[1, 1]);
    let minus_sq = Poly::from_ints(&[1, -2, 1]);
    let sum = q.coeffs.iter().enumerate().fold(Poly::zero(), |acc, (k, c)| {
        let term = (&plus.pow(n - 2 * k) * &minus_sq.pow(k)).scale(c);
        if k % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        }
    });
    sum.scale(&pow(&(a1.clone() / int(2)), n))
}

/// Generalized Eulerian rows through derivative polynomials, real form.
pub fn verify_thm35(a1: &Rational, a2: &Rational, n_max: usize, scope: &str) -> Result<VerificationReport> {
    if a1.is_zero() {
        return Err(Error::ZeroParameter("a1"));
    }
    let e = generalized_eulerian_rule(a1, a2).build(n_max);
    let q = build_q(&(int(2) * a2.clone() / a1.clone()), n_max);
    let mut report = VerificationReport::new("thm35", scope, n_max).with_path("real form with t = -i(1+x)/(1-x)");
    if !(a1.is_positive() && *a1 <= int(2) * a2.clone()) {
        report.flag("hypothesis 0 < a1 <= 2 a2 does not hold");
    }
    for n in 0..=n_max {
        report.push_poly(n, "real form", &e.row_poly(n)?, &thm35_rhs(a1, &q[n]));
    }
    Ok(report)
}

/// `(cos z - x sin z)` as a series in `z` with polynomial-in-`x` coefficients.
fn cos_minus_x_sin(order: usize) -> BiSeries {
    let coeffs = (0..=order)
        .map(|n| {
            let inv = Rational::one() / factorial::<Rational>(n);
            let sign = if (n / 2) % 2 == 0 { int(1) } else { int(-1) };
            if n % 2 == 0 {
                Poly::constant(sign * inv)
            } else {
                Poly::monomial(-(sign * inv), 1)
            }
        })
        .collect();
    Series::new(order, coeffs)
}

/// `sum_n Q_n(delta, x) z^n / n! = (cos z - x sin z)^(-delta)` to the given order.
pub fn verify_q_egf(delta: &Rational, order: usize, scope: &str) -> Result<VerificationReport> {
    let rhs = cos_minus_x_sin(order).pow(&(-delta.clone()))?;
    let q = build_q(delta, order);
    let mut report = VerificationReport::new("egf-Q", scope, order);
    for n in 0..=order {
        report.push_poly(n, "coefficient of z^n / n!", &q[n].to_dense(), &rhs.egf_coeff(n));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn first_q_polynomials() {
        let d = rat(5, 3);
        let q = build_q(&d, 3);
        assert_eq!(q[0].to_dense(), Poly::one());
        assert_eq!(q[1].to_dense(), Poly::monomial(d.clone(), 1));
        // delta^2 t^2 + delta (1 + t^2)
        let q2 = Poly::new(vec![d.clone(), int(0), d.clone() * d.clone() + d.clone()]);
        assert_eq!(q[2].to_dense(), q2);
        assert_eq!(q[2].coeffs, vec![d.clone() * d.clone() + d.clone(), d.clone()]);
        // delta^3 x^3 + (3 delta^2 + 2 delta) x y^2, with y^2 = 1 + x^2
        let cubic = d.clone() * d.clone() * d.clone() + int(3) * d.clone() * d.clone() + int(2) * d.clone();
        assert_eq!(q[3].coeffs, vec![cubic, int(3) * d.clone() * d.clone() + int(2) * d.clone()]);
    }

    #[test]
    fn parity_and_degree() {
        for q in build_q(&rat(7, 2), 14) {
            let dense = q.to_dense();
            assert_eq!(dense.degree(), Some(q.n));
            assert!(QPoly::from_dense(q.n, q.delta.clone(), &dense).is_some());
            assert!(q.coeffs.iter().all(|c| c.is_positive()));
        }
        assert!(QPoly::from_dense(2, int(1), &Poly::from_ints(&[1, 1])).is_none());
    }

    #[test]
    fn springer_prefix() {
        let s = springer(20);
        let small: Vec<i64> = s[..7].iter().map(|b| i64::try_from(b).unwrap()).collect();
        assert_eq!(&small[..3], &[1, 1, 3]);
        assert_eq!(small.len(), 7);
    }

    #[test]
    fn thm34_instances() {
        for (a, b, c) in [(2, 1, 2), (1, 1, 1), (2, 1, 1), (3, 5, 7)] {
            let r = verify_thm34(&int(a), &int(b), &int(c), 12, "x").unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = verify_thm34(&rat(2, 3), &rat(1, 4), &rat(5, 2), 10, "x").unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn thm34_row_one() {
        // S_1(q) = b and (a/2) Q_{1,0}(2b/a) = b
        let s1 = gamma_rule(&int(1), &int(1), &int(1)).build(1).row_poly(1).unwrap();
        assert_eq!(s1, Poly::one());
        let q = build_q(&int(2), 1);
        assert_eq!(q[1].coeffs[0].clone() / int(2), int(1));
    }

    #[test]
    fn thm35_instances() {
        for (a1, a2) in [(1, 1), (2, 1), (1, 3), (3, 2)] {
            let r = verify_thm35(&int(a1), &int(a2), 12, "x").unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.flags.is_empty());
        }
        let r = verify_thm35(&int(3), &int(1), 8, "x").unwrap();
        assert!(r.passed());
        assert_eq!(r.flags.len(), 1);
    }

    #[test]
    fn thm35_shifted_eulerian_row_two() {
        let q = build_q(&int(2), 2);
        assert_eq!(thm35_rhs(&int(1), &q[2]), Poly::from_ints(&[1, 4, 1]));
    }

    #[test]
    fn sign_pattern_with_n_minus_k_fails() {
        // the alternative real form with (-1)^(n-k) is already wrong at n = 1
        let q = build_q(&int(2), 1);
        let alt = Polynomial::from_ints(&[1, 1]).scale(&(-q[1].coeffs[0].clone() / int(2)));
        assert_ne!(alt, Poly::from_ints(&[1, 1]));
        assert_eq!(thm35_rhs(&int(1), &q[1]), Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn q_egf() {
        for d in [int(1), rat(3, 2), int(2), rat(1, 3)] {
            let r = verify_q_egf(&d, 6, "x").unwrap();
            assert!(r.passed(), "{r}");
        }
        let r = verify_q_egf(&int(4), 1, "x").unwrap();
        assert!(r.passed());
        assert_eq!(r.checks[1].n, 1);
    }
}

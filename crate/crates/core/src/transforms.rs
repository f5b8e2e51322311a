//! Array-to-array transformations: the linear-fractional lift between a
//! three-term array and its two-term companion, explicit Frobenius-type
//! formulas, and gamma decompositions of palindromic rows.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::report::VerificationReport;
use crate::scalar::{binomial, binomial_signed, int, pow, Rational};
use crate::triangle::{build_companion, build_master, Affine, MasterParams, RecurrenceRule, Support};
use crate::{CoeffRule, Poly, Triangle};

/// Row `n` of the lifted array:
/// `T(n,k) = sum_i A(n,i) C(n-i, k-i) lambda^(n-k) d^(k-i)`.
pub fn lift_a_to_t(a: &Triangle, lambda: &Rational, d: &Rational, n: usize) -> Result<Vec<Rational>> {
    let row = a.row(n)?;
    let out = (0..=n)
        .map(|k| {
            let lam = pow(lambda, n - k);
            (0..=k).fold(Rational::zero(), |acc, i| {
                let ai = row.get(i).cloned().unwrap_or_else(Rational::zero);
                if ai.is_zero() {
                    return acc;
                }
                acc + ai * binomial_signed::<Rational>((n - i) as i64, (k - i) as i64) * lam.clone() * pow(d, k - i)
            })
        })
        .collect();
    Ok(out)
}

/// Checks `T_n(x) = (lambda + d x)^n A_n(x / (lambda + d x))` two ways:
/// through the polynomial lift and through the coefficient formula.
pub fn verify_thm21(params: &MasterParams<Rational>, n_max: usize, scope: &str) -> Result<VerificationReport> {
    let t = build_master(params, n_max)?;
    let a = build_companion(params, n_max)?;
    let mut report = VerificationReport::new("thm21", scope, n_max);
    if !params.is_strict() {
        report.flag("parameters outside the nonnegative region");
    }
    for n in 0..=n_max {
        let lhs = t.row_poly(n)?;
        let lifted = a.row_poly(n)?.linear_lift(n, &params.lambda, &params.d)?;
        report.push_poly(n, "polynomial lift", &lhs, &lifted);
        let coeffs = lift_a_to_t(&a, &params.lambda, &params.d, n)?;
        report.push_values(n, "coefficient lift", lhs.coeffs(), &coeffs);
    }
    Ok(report)
}

/// Parameters of the two-term array `(a1 k + a2) F(n-1,k) + (b1 k + b2) F(n-1,k-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusParams {
    pub a1: Rational,
    pub a2: Rational,
    pub b1: Rational,
    pub b2: Rational,
}

impl FrobeniusParams {
    pub fn new(a1: Rational, a2: Rational, b1: Rational, b2: Rational) -> Result<Self> {
        if a1.is_zero() {
            return Err(Error::ZeroParameter("a1"));
        }
        if b1.is_zero() {
            return Err(Error::ZeroParameter("b1"));
        }
        Ok(Self { a1, a2, b1, b2 })
    }

    pub fn from_ints(a1: i64, a2: i64, b1: i64, b2: i64) -> Result<Self> {
        Self::new(int(a1), int(a2), int(b1), int(b2))
    }

    pub fn rule(&self) -> CoeffRule {
        RecurrenceRule::new(
            "frobenius",
            Affine::new(int(0), self.a1.clone(), self.a2.clone()),
            Affine::new(int(0), self.b1.clone(), self.b2.clone()),
        )
    }

    pub fn build(&self, n_max: usize) -> Triangle {
        self.rule().build(n_max)
    }

    /// `C(b2/b1 + k, k) (b1/a1)^k sum_j C(k,j) (-1)^(k-j) (a2 + a1 j)^n`, with `0^0 = 1`.
    pub fn explicit(&self, n: usize, k: usize) -> Rational {
        let top = self.b2.clone() / self.b1.clone() + int(k as i64);
        let ratio = self.b1.clone() / self.a1.clone();
        binomial(&top, k) * pow(&ratio, k) * alternating_power_sum(&self.a1, &self.a2, n, k)
    }
}

/// `sum_j C(k,j) (-1)^(k-j) (a2 + a1 j)^n`.
fn alternating_power_sum(a1: &Rational, a2: &Rational, n: usize, k: usize) -> Rational {
    (0..=k).fold(Rational::zero(), |acc, j| {
        let term = binomial_signed::<Rational>(k as i64, j as i64) * pow(&(a2.clone() + a1.clone() * int(j as i64)), n);
        if (k - j) % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Explicit formula against the recurrence, entrywise.
pub fn verify_thm31(p: &FrobeniusParams, n_max: usize, scope: &str) -> VerificationReport {
    let f = p.build(n_max);
    let mut report = VerificationReport::new("thm31", scope, n_max);
    for n in 0..=n_max {
        let explicit: Vec<Rational> = (0..=n).map(|k| p.explicit(n, k)).collect();
        report.push_values(n, "explicit formula", f.row(n).expect("built"), &explicit);
    }
    report
}

/// The array `(a1 k + a2) D(n-1,k) + (b1 n - b1 k + b2) D(n-1,k-1)`.
pub fn ef_rule(a1: &Rational, a2: &Rational, b1: &Rational, b2: &Rational) -> CoeffRule {
    RecurrenceRule::new(
        "generalized-frobenius-dual",
        Affine::new(int(0), a1.clone(), a2.clone()),
        Affine::new(b1.clone(), -b1.clone(), b2.clone()),
    )
}

/// The companion Frobenius array of [`ef_rule`]: middle coefficient
/// `b1 k + b2 - b1 + (a2/a1) b1`.
pub fn ef_companion(a1: &Rational, a2: &Rational, b1: &Rational, b2: &Rational) -> Result<FrobeniusParams> {
    if a1.is_zero() {
        return Err(Error::ZeroParameter("a1"));
    }
    let b2_shifted = b2.clone() - b1.clone() + a2.clone() / a1.clone() * b1.clone();
    FrobeniusParams::new(a1.clone(), a2.clone(), b1.clone(), b2_shifted)
}

/// `sum_j C(a2/a1 + b2/b1 - 1 + i, i) C(i,j) (b1/a1)^i (-1)^(i-j) (a2 + a1 j)^n`.
pub fn ef_companion_explicit(a1: &Rational, a2: &Rational, b1: &Rational, b2: &Rational, n: usize, i: usize) -> Rational {
    let top = a2.clone() / a1.clone() + b2.clone() / b1.clone() - int(1) + int(i as i64);
    binomial(&top, i) * pow(&(b1.clone() / a1.clone()), i) * alternating_power_sum(a1, a2, n, i)
}

/// Checks `D_n(q) = (1 - (b1/a1) q)^n F_n(q / (1 - (b1/a1) q))`, the coefficient
/// form `D(n,k) = sum_i F(n,i) C(n-i,k-i) (-b1/a1)^(k-i)`, and the explicit
/// formula for the companion array.
pub fn verify_thm32(a1: &Rational, a2: &Rational, b1: &Rational, b2: &Rational, n_max: usize, scope: &str) -> Result<VerificationReport> {
    let f_params = ef_companion(a1, a2, b1, b2)?;
    let dual = ef_rule(a1, a2, b1, b2).build(n_max);
    let f = f_params.build(n_max);
    let d = -(b1.clone() / a1.clone());
    let one = Rational::one();
    let mut report = VerificationReport::new("thm32", scope, n_max);
    if !(a1.is_positive() && b1.is_positive() && !a2.is_negative() && !b2.is_negative()) {
        report.flag("outside a1, b1 > 0 and a2, b2 >= 0");
    }
    for n in 0..=n_max {
        let lhs = dual.row_poly(n)?;
        let lifted = f.row_poly(n)?.linear_lift(n, &one, &d)?;
        report.push_poly(n, "row generating functions", &lhs, &lifted);
        report.push_values(n, "binomial sum", lhs.coeffs(), &lift_a_to_t(&f, &one, &d, n)?);
        let explicit: Vec<Rational> = (0..=n).map(|i| ef_companion_explicit(a1, a2, b1, b2, n, i)).collect();
        report.push_values(n, "companion explicit formula", f.row(n)?, &explicit);
    }
    Ok(report)
}

/// Classical Eulerian number with `k` counted as in `E_n(x) = sum x^(1+des)`,
/// through `sum_i i! S(n,i) C(n-i,k-i) (-1)^(k-i)` and the alternating-sum
/// form of `i! S(n,i)`.
pub fn eulerian_via_frobenius(n: usize, k: usize) -> Rational {
    let classical = FrobeniusParams::from_ints(1, 0, 1, 0).expect("nonzero");
    (0..=k.min(n)).fold(Rational::zero(), |acc, i| {
        let term = classical.explicit(n, i) * binomial_signed::<Rational>((n - i) as i64, (k - i) as i64);
        if (k - i) % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// Coefficients in the basis `x^k (1+x)^(n-2k)`, `0 <= k <= n/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaVector {
    pub n: usize,
    pub gamma: Vec<Rational>,
}

/// A polynomial with no expansion in the gamma basis of the requested order.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaFailure {
    pub n: usize,
    pub residual: Poly,
}

impl GammaVector {
    pub fn reconstruct(&self) -> Poly {
        gamma_basis_sum(&self.gamma, self.n)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.gamma.iter().all(|g| !g.is_negative())
    }

    /// `gamma_k / scale^k`, the entries of the triangle whose row polynomial
    /// evaluated at `scale x / (1+x)^2` reproduces the decomposed polynomial.
    pub fn unscaled(&self, scale: &Rational) -> Vec<Rational> {
        self.gamma
            .iter()
            .enumerate()
            .map(|(k, g)| g.clone() / pow(scale, k))
            .collect()
    }
}

fn gamma_basis(n: usize, k: usize) -> Poly {
    Polynomial::from_ints(&[1, 1]).pow(n - 2 * k).shift_up(k)
}

/// `sum_k coeffs[k] x^k (1+x)^(n-2k)`; coefficients past `n/2` must be zero.
pub fn gamma_basis_sum(coeffs: &[Rational], n: usize) -> Poly {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Poly::zero(), |acc, (k, c)| {
            assert!(2 * k <= n, "gamma coefficient {k} beyond n/2 for n = {n}");
            &acc + &gamma_basis(n, k).scale(c)
        })
}

/// Solves `p(x) = sum_{k <= n/2} gamma_k x^k (1+x)^(n-2k)` by peeling the
/// coefficient of `x^(n-k)`; the basis element for `k` is monic of degree `n-k`.
pub fn gamma_decompose(p: &Poly, n: usize) -> std::result::Result<GammaVector, GammaFailure> {
    if p.degree().is_some_and(|d| d > n) {
        return Err(GammaFailure { n, residual: p.clone() });
    }
    let mut residual = p.clone();
    let mut gamma = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        let g = residual.coeff(n - k);
        if !g.is_zero() {
            residual = &residual - &gamma_basis(n, k).scale(&g);
        }
        gamma.push(g);
    }
    if residual.is_zero() {
        Ok(GammaVector { n, gamma })
    } else {
        Err(GammaFailure { n, residual })
    }
}

/// `(a1 k + a2) E(n-1,k) + (a1 n - a1 k + a2) E(n-1,k-1)`.
pub fn generalized_eulerian_rule(a1: &Rational, a2: &Rational) -> CoeffRule {
    RecurrenceRule::new(
        "generalized-eulerian",
        Affine::new(int(0), a1.clone(), a2.clone()),
        Affine::new(a1.clone(), -a1.clone(), a2.clone()),
    )
}

/// `(a k + b) S(n-1,k) + c (n - 2k + 1) S(n-1,k-1)` on `k <= (n+1)/2`.
pub fn gamma_rule(a: &Rational, b: &Rational, c: &Rational) -> CoeffRule {
    RecurrenceRule::new(
        "gamma",
        Affine::new(int(0), a.clone(), b.clone()),
        Affine::new(c.clone(), int(-2) * c.clone(), c.clone()),
    )
    .with_support(Support::HALF_PLUS_ONE)
}

/// Checks `E_n(x) = (1+x)^n S_n((2 a1 / c) x / (1+x)^2)` by expanding the right
/// side in the gamma basis, and that a direct gamma decomposition of `E_n`
/// recovers `S(n,k) (2 a1/c)^k`.
pub fn verify_thm33(a1: &Rational, a2: &Rational, c: &Rational, n_max: usize, scope: &str) -> Result<VerificationReport> {
    if c.is_zero() {
        return Err(Error::ZeroParameter("c"));
    }
    let e = generalized_eulerian_rule(a1, a2).build(n_max);
    let s = gamma_rule(a1, a2, c).build(n_max);
    let scale = int(2) * a1.clone() / c.clone();
    let mut report = VerificationReport::new("thm33", scope, n_max);
    if !(a1.is_positive() && a2.is_positive() && c.is_positive()) {
        report.flag("outside a1, a2, c > 0");
    }
    for n in 0..=n_max {
        let srow = s.row(n)?;
        let overflow = srow.iter().enumerate().any(|(k, v)| 2 * k > n && !v.is_zero());
        report.push_bool(n, "S vanishes past n/2", !overflow, None);
        let scaled: Vec<Rational> = srow
            .iter()
            .take(n / 2 + 1)
            .enumerate()
            .map(|(k, v)| v.clone() * pow(&scale, k))
            .collect();
        let lhs = e.row_poly(n)?;
        report.push_poly(n, "gamma expansion", &lhs, &gamma_basis_sum(&scaled, n));
        match gamma_decompose(&lhs, n) {
            Ok(g) => report.push_values(n, "decomposition equals scaled S", &g.gamma, &scaled),
            Err(f) => report.push_bool(n, "decomposition equals scaled S", false, Some(format!("residual {}", f.residual))),
        }
        let nonneg = srow.iter().all(|v| !v.is_negative());
        report.push_bool(n, "S nonnegative", nonneg, None);
    }
    Ok(report)
}

//! Alternating-runs type arrays `T(n,k) = d(a1 k + a2) T(n-1,k) + b2 T(n-1,k-1)
//! + c (n-k+1) T(n-1,k-2)` and their relation to generalized Eulerian rows
//! under `w = sqrt((1-x)/(1+x))`.
//!
//! With `x = (1 - w^2)/(1 + w^2)` one has `1 + x = 2/(1+w^2)`, so
//! `T_n(x) = a2^(-sigma) (d + dx)^n ((1+w)/2)^(n+sigma) E_{n+sigma}((1-w)/(1+w))`
//! becomes, after multiplying by `(1+w^2)^n`,
//! `sum_k T(n,k) (1-w^2)^k (1+w^2)^(n-k)
//!    = a2^(-sigma) (2d)^n 2^(-(n+sigma)) sum_k E(n+sigma,k) (1-w)^k (1+w)^(n+sigma-k)`.

use num_traits::{One, Zero};

use crate::analysis::{log_concave, sturm_analyze};
use crate::derivative::{build_q, verify_thm34};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::scalar::{int, pow, Rational};
use crate::transforms::generalized_eulerian_rule;
use crate::triangle::{Affine, MasterParams, RecurrenceRule};
use crate::{CoeffRule, Poly, Triangle};

/// Parameters with `b2 = d (a2 + sigma a1)` and `c = d a1` enforced.
#[derive(Clone, Debug, PartialEq)]
pub struct DbInstance {
    pub a1: Rational,
    pub a2: Rational,
    pub c: Rational,
    pub d: Rational,
    pub b2: Rational,
    pub sigma: i64,
}

impl DbInstance {
    pub fn new(a1: Rational, a2: Rational, d: Rational, sigma: i64) -> Result<Self> {
        if !(-1..=1).contains(&sigma) {
            return Err(Error::InvalidSigma(sigma));
        }
        let b2 = d.clone() * (a2.clone() + int(sigma) * a1.clone());
        let c = d.clone() * a1.clone();
        Ok(Self { a1, a2, c, d, b2, sigma })
    }

    pub fn from_ints(a1: i64, a2: i64, d: i64, sigma: i64) -> Result<Self> {
        Self::new(int(a1), int(a2), int(d), sigma)
    }

    /// Accepts explicit `c` and `b2` and checks them against the hypotheses.
    pub fn from_parts(a1: Rational, a2: Rational, c: Rational, d: Rational, b2: Rational, sigma: i64) -> Result<Self> {
        let inst = Self::new(a1, a2, d, sigma)?;
        if inst.c != c {
            return Err(Error::Hypothesis(format!("c = {c} but d a1 = {}", inst.c)));
        }
        if inst.b2 != b2 {
            return Err(Error::Hypothesis(format!("b2 = {b2} but d (a2 + sigma a1) = {}", inst.b2)));
        }
        Ok(inst)
    }

    pub fn rule(&self) -> CoeffRule {
        RecurrenceRule::new(
            "runs-type",
            Affine::new(int(0), self.d.clone() * self.a1.clone(), self.d.clone() * self.a2.clone()),
            Affine::new(int(0), int(0), self.b2.clone()),
        )
        .with_term(2, Affine::new(self.c.clone(), -self.c.clone(), self.c.clone()))
    }

    /// The same array as a member of the master family (`lambda = d`).
    pub fn master_params(&self) -> Result<MasterParams<Rational>> {
        MasterParams::new(
            self.d.clone(),
            int(0),
            self.a1.clone(),
            self.a2.clone(),
            int(0),
            int(0),
            self.b2.clone(),
            self.c.clone(),
            self.d.clone(),
        )
    }
}

pub fn build_t_db(inst: &DbInstance, n_max: usize) -> Triangle {
    inst.rule().build(n_max)
}

/// `sum_k coeffs[k] p^k q^(m-k)`.
fn homogenize(coeffs: &[Rational], m: usize, p: &Poly, q: &Poly) -> Poly {
    coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).fold(Poly::zero(), |acc, (k, c)| {
        assert!(k <= m, "coefficient {k} beyond degree {m}");
        &acc + &(&p.pow(k) * &q.pow(m - k)).scale(c)
    })
}

fn is_even(p: &Poly) -> bool {
    p.coeffs().iter().enumerate().all(|(e, c)| e % 2 == 0 || c.is_zero())
}

/// Radical-free check of the generalized David–Barton identity.
pub fn verify_thm36(inst: &DbInstance, n_max: usize, scope: &str) -> Result<VerificationReport> {
    if inst.sigma == 1 && inst.a2.is_zero() {
        return Err(Error::ZeroParameter("a2"));
    }
    let t = build_t_db(inst, n_max);
    let e = generalized_eulerian_rule(&inst.a1, &inst.a2).build(n_max + 1);
    let one_minus_w2 = Poly::from_ints(&[1, 0, -1]);
    let one_plus_w2 = Poly::from_ints(&[1, 0, 1]);
    let one_minus_w = Poly::from_ints(&[1, -1]);
    let one_plus_w = Poly::from_ints(&[1, 1]);
    let a2_factor = match inst.sigma {
        1 => Rational::one() / inst.a2.clone(),
        0 => Rational::one(),
        _ => inst.a2.clone(),
    };
    let mut report = VerificationReport::new("thm36", scope, n_max).with_path("substitution x = (1-w^2)/(1+w^2)");
    report.flag(format!("sigma = {}", inst.sigma));
    let start = if inst.sigma == -1 {
        report.flag("n = 0 not checked: E_{n+sigma} has negative index");
        1
    } else {
        0
    };
    for n in start..=n_max {
        let lhs = homogenize(t.row(n)?, n, &one_minus_w2, &one_plus_w2);
        report.push_bool(n, "left side even in w", is_even(&lhs), None);
        let m = (n as i64 + inst.sigma) as usize;
        let scale = a2_factor.clone() * pow(&(int(2) * inst.d.clone()), n) / pow(&int(2), m);
        let rhs = homogenize(e.row(m)?, m, &one_minus_w, &one_plus_w).scale(&scale);
        report.push_poly(n, "identity in w", &lhs, &rhs);
    }
    Ok(report)
}

/// `R(n,k) = k R(n-1,k) + 2 R(n-1,k-1) + (n-k) R(n-1,k-2)` from `R(2,1) = 2`,
/// stored with row `n - 2` and column `k - 1`.
pub fn runs_rule() -> CoeffRule {
    RecurrenceRule::new("alternating-runs", Affine::ints(0, 1, 0), Affine::ints(0, 0, 2))
        .with_term(2, Affine::ints(1, -1, 0))
        .with_index_offset(2, 1)
        .with_initial(int(2))
}

/// Classical form `R_n(x) = ((1+x)/2)^(n-1) (1+w)^(n+1) E_n((1-w)/(1+w))`, `n >= 2`,
/// checked as `sum_k R(n,k) (1-w^2)^k (1+w^2)^(n-1-k) = sum_k E(n,k) (1-w)^k (1+w)^(n+1-k)`
/// with `E_n(x) = sum_{pi in S_n} x^(1 + des pi)`.
pub fn verify_david_barton_classical(n_max: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("david-barton", "runs-A", n_max).with_path("substitution x = (1-w^2)/(1+w^2)");
    if n_max < 2 {
        return Ok(report);
    }
    let runs = runs_rule().build(n_max - 2);
    let eulerian = generalized_eulerian_rule(&int(1), &int(1)).build(n_max - 1);
    let one_minus_w2 = Poly::from_ints(&[1, 0, -1]);
    let one_plus_w2 = Poly::from_ints(&[1, 0, 1]);
    let one_minus_w = Poly::from_ints(&[1, -1]);
    let one_plus_w = Poly::from_ints(&[1, 1]);
    for n in 2..=n_max {
        // R(n, k) for k = 1..n-1 sits in row n-2, column k-1
        let mut r = vec![int(0)];
        r.extend_from_slice(runs.row(n - 2)?);
        let lhs = homogenize(&r, n - 1, &one_minus_w2, &one_plus_w2);
        let mut e = vec![int(0)];
        e.extend_from_slice(eulerian.row(n - 1)?);
        let rhs = homogenize(&e, n + 1, &one_minus_w, &one_plus_w);
        report.push_poly(n, "identity in w", &lhs, &rhs);
        let total: Rational = r.iter().cloned().sum();
        report.push_bool(n, "R_n(1) = n!", total == crate::scalar::factorial::<Rational>(n), None);
    }
    Ok(report)
}

/// The type-B alternating-runs instance `a1 = 2, a2 = 1, d = 1, sigma = 1`
/// (`b2 = 3`, `c = 2`), whose array is `Z~(n,k) = Z(n+1,k+1)`.
pub fn type_b_runs_instance() -> DbInstance {
    DbInstance::from_ints(2, 1, 1, 1).expect("valid sigma")
}

/// `W(n,k) = (2k+1) W(n-1,k) + (n-2k+1) W(n-1,k-1)` on `k <= (n+1)/2`.
pub fn petersen_rule() -> CoeffRule {
    crate::transforms::gamma_rule(&int(2), &int(1), &int(1))
}

/// All four parts for the type-B alternating-runs rows `Z~_n`:
/// (i) real zeros and log-concavity; (ii) `Z~_n(x) = sum_k W(n+1,k) 2^k x^k (1+x)^(n-k)`;
/// (iii) the David–Barton form with type-B Eulerian rows; (iv) the expression
/// through `Q_{n+1}(1, .)`, checked as `W_{n+1}(1+v) = sum_k Q_{n+1,k}(1) v^k`
/// composed with (ii), i.e. `Z~_n(x) = sum_k Q_{n+1,k}(1) (x-1)^k (1+x)^(n-k)`.
pub fn verify_prop43(n_max: usize) -> Result<VerificationReport> {
    let inst = type_b_runs_instance();
    let z = build_t_db(&inst, n_max);
    let w = petersen_rule().build(n_max + 1);
    let q = build_q(&int(1), n_max + 1);
    let x = Poly::x();
    let one_plus_x = Poly::from_ints(&[1, 1]);
    let x_minus_one = Poly::from_ints(&[-1, 1]);
    let mut report = VerificationReport::new("prop43", "runs-typeB-Z-shifted", n_max)
        .with_path("(iv) via (ii) and the derivative-polynomial form of W at a = 2, b = 1, c = 1");
    for n in 0..=n_max {
        let row = z.row_poly(n)?;
        let roots = sturm_analyze(&row, None)?;
        report.push_bool(n, "(i) real zeros", roots.real_rooted, None);
        report.push_bool(n, "(i) log-concave", log_concave(row.coeffs()).is_ok(), None);

        let scaled: Vec<Rational> = w.row(n + 1)?.iter().enumerate().map(|(k, v)| v.clone() * pow(&int(2), k)).collect();
        report.push_poly(n, "(ii) Petersen form", &row, &homogenize(&scaled, n.max(1), &x, &one_plus_x).truncate_to(n, &one_plus_x));

        let qc: Vec<Rational> = q[n + 1].coeffs.clone();
        report.push_poly(n, "(iv) derivative form", &row, &homogenize_partial(&qc, n, &x_minus_one, &one_plus_x));
    }
    let iii = verify_thm36(&inst, n_max, "runs-typeB-Z-shifted")?;
    report.absorb("(iii)", iii);
    let w_form = verify_thm34(&int(2), &int(1), &int(1), n_max + 1, "petersen-Wl")?;
    report.absorb("(iv) W rows", w_form);
    Ok(report)
}

/// `sum_k coeffs[k] p^k q^(n-k)` where every nonzero index satisfies `k <= n`.
fn homogenize_partial(coeffs: &[Rational], n: usize, p: &Poly, q: &Poly) -> Poly {
    homogenize(coeffs, n, p, q)
}

trait TruncateTo {
    fn truncate_to(self, n: usize, one_plus_x: &Poly) -> Poly;
}

impl TruncateTo for Poly {
    /// For `n = 0` the row of `W` has one entry and the homogenization above
    /// used degree 1; divide the spare `(1+x)` back out.
    fn truncate_to(self, n: usize, one_plus_x: &Poly) -> Poly {
        if n == 0 {
            let (q, r) = self.div_rem(one_plus_x);
            assert!(r.is_zero());
            q
        } else {
            self
        }
    }
}

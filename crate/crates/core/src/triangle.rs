//! Triangular arrays built from row recurrences.
//!
//! Two dedicated builders cover the master three-term family and its
//! two-term companion; [`RecurrenceRule`] is a generic carrier used for every
//! other array, including ones with a forward `T(n-1, k+1)` reference.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// The nine parameters of
/// `T(n,k) = lambda (a0 n + a1 k + a2) T(n-1,k) + (b0 n + b1 k + b2) T(n-1,k-1)
///          + (c d / lambda) (n - k + 1) T(n-1,k-2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MasterParams<T> {
    pub lambda: T,
    pub a0: T,
    pub a1: T,
    pub a2: T,
    pub b0: T,
    pub b1: T,
    pub b2: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> MasterParams<T> {
    #[allow(clippy::too_many_arguments)]
    pub fn new(lambda: T, a0: T, a1: T, a2: T, b0: T, b1: T, b2: T, c: T, d: T) -> Result<Self> {
        let p = Self { lambda, a0, a1, a2, b0, b1, b2, c, d };
        p.validate()?;
        Ok(p)
    }

    pub fn from_ints(v: [i64; 9]) -> Result<Self> {
        let [lambda, a0, a1, a2, b0, b1, b2, c, d] = v.map(T::from_int);
        Self::new(lambda, a0, a1, a2, b0, b1, b2, c, d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.lambda.is_zero() {
            return Err(Error::ZeroLambda);
        }
        Ok(())
    }

    /// Whether the sign region `lambda > 0`, `a0, a1, a2, b0, b2, d >= 0` holds.
    /// Arrays outside it are still built; only some theorems consult this.
    pub fn is_strict(&self) -> bool {
        let zero = T::zero();
        self.lambda > zero
            && [&self.a0, &self.a1, &self.a2, &self.b0, &self.b2, &self.d]
                .iter()
                .all(|v| **v >= zero)
    }

    /// `d a1 - c`, the value of `b1` the companion array requires.
    pub fn compatible_b1(&self) -> T {
        self.d.clone() * self.a1.clone() - self.c.clone()
    }

    pub fn is_compatible(&self) -> bool {
        self.b1 == self.compatible_b1()
    }

    /// `c d / lambda`.
    pub fn skip_coeff(&self) -> T {
        self.c.clone() * self.d.clone() / self.lambda.clone()
    }

    /// The master recurrence as a generic rule.
    pub fn master_rule(&self) -> RecurrenceRule<T> {
        let l = self.lambda.clone();
        let cd = self.skip_coeff();
        RecurrenceRule::new(
            "master",
            Affine::new(l.clone() * self.a0.clone(), l.clone() * self.a1.clone(), l * self.a2.clone()),
            Affine::new(self.b0.clone(), self.b1.clone(), self.b2.clone()),
        )
        .with_term(2, Affine::new(cd.clone(), -cd.clone(), cd))
    }

    /// Middle coefficient of the companion two-term array:
    /// `[b0 + d(a1 - a0)] n - (c + d a1) k + b2 + d (a1 - a2)`.
    pub fn companion_middle(&self) -> Affine<T> {
        let d = self.d.clone();
        Affine::new(
            self.b0.clone() + d.clone() * (self.a1.clone() - self.a0.clone()),
            -(self.c.clone() + d.clone() * self.a1.clone()),
            self.b2.clone() + d * (self.a1.clone() - self.a2.clone()),
        )
    }

    pub fn companion_rule(&self) -> RecurrenceRule<T> {
        RecurrenceRule::new(
            "companion",
            Affine::new(self.a0.clone(), self.a1.clone(), self.a2.clone()),
            self.companion_middle(),
        )
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for MasterParams<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "lambda={}, a0={}, a1={}, a2={}, b0={}, b1={}, b2={}, c={}, d={}",
            self.lambda, self.a0, self.a1, self.a2, self.b0, self.b1, self.b2, self.c, self.d
        )
    }
}

/// `n_coeff * n + k_coeff * k + constant`.
#[derive(Clone, Debug, PartialEq)]
pub struct Affine<T> {
    pub n_coeff: T,
    pub k_coeff: T,
    pub constant: T,
}

impl<T: Scalar> Affine<T> {
    pub fn new(n_coeff: T, k_coeff: T, constant: T) -> Self {
        Self { n_coeff, k_coeff, constant }
    }

    pub fn ints(n: i64, k: i64, c: i64) -> Self {
        Self::new(T::from_int(n), T::from_int(k), T::from_int(c))
    }

    pub fn eval(&self, n: i64, k: i64) -> T {
        self.n_coeff.clone() * T::from_int(n) + self.k_coeff.clone() * T::from_int(k) + self.constant.clone()
    }
}

/// One summand `coeff(n, k) * T(n-1, k - offset)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RuleTerm<T> {
    pub offset: i64,
    pub coeff: Affine<T>,
}

/// Entries allowed to be nonzero in row `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    /// `0 <= k <= n`
    Full,
    /// `0 <= k <= n` and `divisor * k <= n + offset`
    Bounded { offset: i64, divisor: i64 },
}

impl Support {
    /// `k <= (n + 1) / 2`
    pub const HALF_PLUS_ONE: Support = Support::Bounded { offset: 1, divisor: 2 };
    /// `k <= n / 2`
    pub const HALF: Support = Support::Bounded { offset: 0, divisor: 2 };

    pub fn allows(&self, n: usize, k: usize) -> bool {
        if k > n {
            return false;
        }
        match *self {
            Support::Full => true,
            Support::Bounded { offset, divisor } => divisor * k as i64 <= n as i64 + offset,
        }
    }
}

/// A row recurrence `T(n,k) = sum_j coeff_j(n,k) T(n-1, k - offset_j)`
/// with `T(0,0) = initial`.
///
/// With a nonzero `index_offset = (dn, dk)` the coefficients are evaluated at
/// `(n + dn, k + dk)`, so a recurrence stated for an array whose first row
/// sits at `n = dn` can be written with its original coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceRule<T> {
    pub name: String,
    pub terms: Vec<RuleTerm<T>>,
    pub support: Support,
    pub initial: T,
    pub index_offset: (i64, i64),
}

impl<T: Scalar> RecurrenceRule<T> {
    /// Two-term rule `alpha T(n-1,k) + beta T(n-1,k-1)`.
    pub fn new(name: impl Into<String>, alpha: Affine<T>, beta: Affine<T>) -> Self {
        Self {
            name: name.into(),
            terms: vec![RuleTerm { offset: 0, coeff: alpha }, RuleTerm { offset: 1, coeff: beta }],
            support: Support::Full,
            initial: T::one(),
            index_offset: (0, 0),
        }
    }

    pub fn with_term(mut self, offset: i64, coeff: Affine<T>) -> Self {
        self.terms.push(RuleTerm { offset, coeff });
        self
    }

    pub fn with_support(mut self, support: Support) -> Self {
        self.support = support;
        self
    }

    pub fn with_initial(mut self, initial: T) -> Self {
        self.initial = initial;
        self
    }

    pub fn with_index_offset(mut self, dn: i64, dk: i64) -> Self {
        self.index_offset = (dn, dk);
        self
    }

    pub fn build(&self, n_max: usize) -> Triangle<T> {
        let (dn, dk) = self.index_offset;
        let mut rows = vec![vec![self.initial.clone()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let get = |k: i64| -> T {
                if k < 0 {
                    T::zero()
                } else {
                    prev.get(k as usize).cloned().unwrap_or_else(T::zero)
                }
            };
            let row = (0..=n)
                .map(|k| {
                    if !self.support.allows(n, k) {
                        return T::zero();
                    }
                    self.terms.iter().fold(T::zero(), |acc, term| {
                        let src = get(k as i64 - term.offset);
                        if src.is_zero() {
                            acc
                        } else {
                            acc + term.coeff.eval(n as i64 + dn, k as i64 + dk) * src
                        }
                    })
                })
                .collect();
            rows.push(row);
        }
        Triangle::from_rows(rows, Provenance::new(format!("rule:{}", self.name)))
    }
}

/// Which recurrence produced a triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance(String);

impl Provenance {
    pub fn new(s: impl Into<String>) -> Self {
        Self(s.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Jagged array: row `n` stores `T(n, 0..=n)`; anything else is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<T> {
    rows: Vec<Vec<T>>,
    provenance: Provenance,
}

impl<T: Scalar> Triangle<T> {
    /// Rows shorter than `n + 1` are padded with zeros.
    pub fn from_rows(mut rows: Vec<Vec<T>>, provenance: Provenance) -> Self {
        for (n, row) in rows.iter_mut().enumerate() {
            row.resize(n + 1, T::zero());
        }
        Self { rows, provenance }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Largest row index built.
    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Result<&[T]> {
        self.rows
            .get(n)
            .map(Vec::as_slice)
            .ok_or(Error::RowOutOfRange { n, depth: self.depth() })
    }

    pub fn get(&self, n: usize, k: usize) -> T {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// `sum_k T(n,k) x^k`.
    pub fn row_poly(&self, n: usize) -> Result<Polynomial<T>> {
        Ok(Polynomial::new(self.row(n)?.to_vec()))
    }

    pub fn row_polys(&self) -> Vec<Polynomial<T>> {
        self.rows.iter().map(|r| Polynomial::new(r.clone())).collect()
    }

    /// `M*(n,k) = M(n, n-k)`.
    pub fn reciprocal(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().rev().cloned().collect())
            .collect();
        Self {
            rows,
            provenance: Provenance::new(format!("reciprocal({})", self.provenance)),
        }
    }

    pub fn row_sum(&self, n: usize) -> T {
        self.rows[n].iter().cloned().fold(T::zero(), |a, b| a + b)
    }

    pub fn truncate(&self, n_max: usize) -> Self {
        Self {
            rows: self.rows[..=n_max.min(self.depth())].to_vec(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }
}

/// Rows `0..=n_max` of the master three-term array.
pub fn build_master<T: Scalar + fmt::Display>(params: &MasterParams<T>, n_max: usize) -> Result<Triangle<T>> {
    params.validate()?;
    let skip = params.skip_coeff();
    let mut rows: Vec<Vec<T>> = vec![vec![T::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(T::zero);
        let nn = T::from_index(n);
        let row = (0..=n)
            .map(|k| {
                let kk = T::from_index(k);
                let stay = params.lambda.clone()
                    * (params.a0.clone() * nn.clone() + params.a1.clone() * kk.clone() + params.a2.clone())
                    * at(k);
                let step = if k >= 1 {
                    (params.b0.clone() * nn.clone() + params.b1.clone() * kk.clone() + params.b2.clone()) * at(k - 1)
                } else {
                    T::zero()
                };
                let jump = if k >= 2 {
                    skip.clone() * T::from_index(n - k + 1) * at(k - 2)
                } else {
                    T::zero()
                };
                stay + step + jump
            })
            .collect();
        rows.push(row);
    }
    Ok(Triangle::from_rows(rows, Provenance::new(format!("master[{params}]"))))
}

/// Rows `0..=n_max` of the two-term companion array; requires `b1 = d a1 - c`.
pub fn build_companion<T: Scalar + fmt::Display>(params: &MasterParams<T>, n_max: usize) -> Result<Triangle<T>> {
    params.validate()?;
    if !params.is_compatible() {
        return Err(Error::Compatibility {
            b1: params.b1.to_string(),
            expected: params.compatible_b1().to_string(),
        });
    }
    let mid = params.companion_middle();
    let mut rows: Vec<Vec<T>> = vec![vec![T::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(T::zero);
        let nn = T::from_index(n);
        let row = (0..=n)
            .map(|k| {
                let kk = T::from_index(k);
                let stay = (params.a0.clone() * nn.clone() + params.a1.clone() * kk + params.a2.clone()) * at(k);
                let step = if k >= 1 { mid.eval(n as i64, k as i64) * at(k - 1) } else { T::zero() };
                stay + step
            })
            .collect();
        rows.push(row);
    }
    Ok(Triangle::from_rows(rows, Provenance::new(format!("companion[{params}]"))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    type Params = MasterParams<Rational>;

    fn staircase() -> Params {
        Params::from_ints([1, 0, 1, 1, 1, 0, 1, 1, 1]).unwrap()
    }

    fn type_b_runs() -> Params {
        Params::from_ints([1, 0, 2, 1, 0, 0, 3, 2, 1]).unwrap()
    }

    fn lambert(d: Rational) -> Params {
        Params::new(
            d.clone(),
            int(1) / d.clone(),
            int(0),
            int(0),
            int(2),
            int(1),
            int(-1),
            int(-1),
            d,
        )
        .unwrap()
    }

    fn ints(row: &[Rational]) -> Vec<i64> {
        row.iter().map(|r| i64::try_from(r.to_integer()).unwrap()).collect()
    }

    #[test]
    fn row_zero_is_one() {
        let t = build_master(&staircase(), 0).unwrap();
        assert_eq!(ints(t.row(0).unwrap()), vec![1]);
    }

    #[test]
    fn staircase_first_rows() {
        let t = build_master(&staircase(), 2).unwrap();
        assert_eq!(ints(t.row(1).unwrap()), vec![1, 2]);
        assert_eq!(ints(t.row(2).unwrap()), vec![1, 7, 7]);
    }

    #[test]
    fn type_b_runs_rows() {
        let t = build_master(&type_b_runs(), 2).unwrap();
        assert_eq!(ints(t.row(1).unwrap()), vec![1, 3]);
        assert_eq!(ints(t.row(2).unwrap()), vec![1, 12, 11]);
        assert_eq!(t.row_poly(2).unwrap(), Polynomial::from_ints(&[1, 12, 11]));
    }

    #[test]
    fn zero_lambda_rejected() {
        assert_eq!(Params::from_ints([0, 0, 1, 1, 1, 0, 1, 1, 1]), Err(Error::ZeroLambda));
        let mut p = staircase();
        p.lambda = int(0);
        assert_eq!(build_master(&p, 3), Err(Error::ZeroLambda));
    }

    #[test]
    fn staircase_companion_is_flower() {
        let p = staircase();
        assert_eq!(p.companion_middle(), Affine::ints(2, -2, 1));
        let a = build_companion(&p, 3).unwrap();
        assert_eq!(ints(a.row(0).unwrap()), vec![1]);
        assert_eq!(ints(a.row(1).unwrap()), vec![1, 1]);
        assert_eq!(ints(a.row(2).unwrap()), vec![1, 5, 1]);
    }

    #[test]
    fn lambert_companion() {
        // A(n,k) = (n/d) A(n-1,k) + (n+k-1) A(n-1,k-1), unrolled by hand for d = 1
        let p = lambert(int(1));
        assert!(p.is_compatible());
        assert!(!p.is_strict() || p.b2 >= int(0));
        let a = build_companion(&p, 2).unwrap();
        assert_eq!(ints(a.row(1).unwrap()), vec![1, 1]);
        assert_eq!(ints(a.row(2).unwrap()), vec![2, 4, 3]);

        // independent direct recursion
        fn direct(n: i64, k: i64, d: &Rational) -> Rational {
            if n == 0 {
                return if k == 0 { int(1) } else { int(0) };
            }
            if k < 0 || k > n {
                return int(0);
            }
            int(n) / d.clone() * direct(n - 1, k, d) + int(n + k - 1) * direct(n - 1, k - 1, d)
        }
        let d = rat(3, 2);
        let a = build_companion(&lambert(d.clone()), 6).unwrap();
        for n in 0..=6 {
            for k in 0..=n {
                assert_eq!(a.get(n, k), direct(n as i64, k as i64, &d));
            }
        }
    }

    #[test]
    fn compatibility_failure_reports_both_sides() {
        let mut p = staircase();
        p.b1 = int(5);
        match build_companion(&p, 2) {
            Err(Error::Compatibility { b1, expected }) => {
                assert_eq!(b1, "5");
                assert_eq!(expected, "0");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn negative_parameters_are_flagged_not_rejected() {
        let p = lambert(int(1));
        assert!(!p.is_strict());
        assert!(staircase().is_strict());
        build_master(&p, 5).unwrap();
    }

    #[test]
    fn generic_rules() {
        let shifted = RecurrenceRule::<Rational>::new("e", Affine::ints(0, 1, 1), Affine::ints(1, -1, 1)).build(2);
        assert_eq!(ints(shifted.row(2).unwrap()), vec![1, 4, 1]);
        let b = RecurrenceRule::<Rational>::new("b", Affine::ints(0, 2, 1), Affine::ints(2, -2, 1)).build(2);
        assert_eq!(ints(b.row(1).unwrap()), vec![1, 1]);
        assert_eq!(ints(b.row(2).unwrap()), vec![1, 6, 1]);
        let wl = RecurrenceRule::<Rational>::new("w", Affine::ints(0, 2, 1), Affine::ints(1, -2, 1))
            .with_support(Support::HALF_PLUS_ONE)
            .build(4);
        assert_eq!(ints(wl.row(0).unwrap()), vec![1]);
        assert_eq!(ints(wl.row(2).unwrap()), vec![1, 1, 0]);
        assert_eq!(ints(wl.row(3).unwrap()), vec![1, 5, 0, 0]);
    }

    #[test]
    fn master_rule_matches_dedicated_builder() {
        for p in [staircase(), type_b_runs(), lambert(int(1)), lambert(rat(2, 7))] {
            let direct = build_master(&p, 10).unwrap();
            let generic = p.master_rule().build(10);
            assert_eq!(direct.rows(), generic.rows());
        }
    }

    #[test]
    fn reciprocal_is_an_involution_and_keeps_row_sums() {
        let t = build_master(&staircase(), 6).unwrap();
        let r = t.reciprocal();
        assert_eq!(ints(r.row(1).unwrap()), vec![2, 1]);
        assert_eq!(r.reciprocal().rows(), t.rows());
        for n in 0..=6 {
            assert_eq!(r.row_sum(n), t.row_sum(n));
        }
    }

    #[test]
    fn row_out_of_range() {
        let t = build_master(&staircase(), 2).unwrap();
        assert_eq!(t.row_poly(3), Err(Error::RowOutOfRange { n: 3, depth: 2 }));
        assert_eq!(t.row_poly(0).unwrap(), Polynomial::one());
    }

    #[test]
    fn f64_builder_agrees_on_integer_presets() {
        let exact = build_master(&staircase(), 8).unwrap();
        let float = build_master(&MasterParams::<f64>::from_ints([1, 0, 1, 1, 1, 0, 1, 1, 1]).unwrap(), 8).unwrap();
        for n in 0..=8 {
            for k in 0..=n {
                let e: f64 = exact.get(n, k).to_integer().try_into().map(|v: i64| v as f64).unwrap();
                assert_eq!(float.get(n, k), e);
            }
        }
    }
}

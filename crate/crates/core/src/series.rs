//! Power series in `t`, truncated at a fixed order, whose coefficients are
//! polynomials in a second variable `q`.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{factorial, Scalar};

/// `sum_{n <= order} coeffs[n](q) t^n`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<T> {
    order: usize,
    coeffs: Vec<Polynomial<T>>,
}

impl<T: Scalar> Series<T> {
    /// Missing coefficients are zero; extra ones beyond `order` are dropped.
    pub fn new(order: usize, mut coeffs: Vec<Polynomial<T>>) -> Self {
        coeffs.resize(order + 1, Polynomial::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Polynomial::one())
    }

    pub fn constant(order: usize, c: Polynomial<T>) -> Self {
        Self::new(order, vec![c])
    }

    /// The series `c t`.
    pub fn t(order: usize, c: Polynomial<T>) -> Self {
        Self::new(order, vec![Polynomial::zero(), c])
    }

    /// `exp(c t) = sum c^n t^n / n!` with `c` a polynomial in `q`.
    pub fn exp_linear(order: usize, c: &Polynomial<T>) -> Self {
        let coeffs = (0..=order)
            .map(|n| c.pow(n).scale(&(T::one() / factorial::<T>(n))))
            .collect();
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Polynomial<T>] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Polynomial<T> {
        &self.coeffs[n]
    }

    /// `n! [t^n]`, the row an exponential generating function encodes.
    pub fn egf_coeff(&self, n: usize) -> Polynomial<T> {
        self.coeffs[n].scale(&factorial::<T>(n))
    }

    pub fn scale(&self, c: &Polynomial<T>) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|p| p * c).collect())
    }

    /// Multiplies the coefficient of `t^n` by `c^n`, i.e. `s(c t)`.
    pub fn dilate(&self, c: &Polynomial<T>) -> Self {
        let mut power = Polynomial::one();
        let mut coeffs = Vec::with_capacity(self.order + 1);
        for p in &self.coeffs {
            coeffs.push(p * &power);
            power = &power * c;
        }
        Self::new(self.order, coeffs)
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(self.order, other.order, "series truncation orders differ");
    }

    fn derivative_terms(&self) -> Vec<Polynomial<T>> {
        // n s_n, indexed by n
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&T::from_index(n)))
            .collect()
    }

    /// `exp(s)`; the constant-in-t term must vanish.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::SeriesConstantTerm {
                op: "exp",
                required: "0",
                found: format!("{:?}", self.coeffs[0].coeffs()),
            });
        }
        // n f_n = sum_{k=1}^n k s_k f_{n-k}
        let ds = self.derivative_terms();
        let mut out: Vec<Polynomial<T>> = vec![Polynomial::one()];
        for n in 1..=self.order {
            let mut acc = Polynomial::zero();
            for k in 1..=n {
                acc = &acc + &(&ds[k] * &out[n - k]);
            }
            out.push(acc.scale(&(T::one() / T::from_index(n))));
        }
        Ok(Self::new(self.order, out))
    }

    fn require_unit(&self, op: &'static str) -> Result<()> {
        if self.coeffs[0] != Polynomial::one() {
            return Err(Error::SeriesConstantTerm {
                op,
                required: "1",
                found: format!("{:?}", self.coeffs[0].coeffs()),
            });
        }
        Ok(())
    }

    /// `log(s)`; the constant-in-t term must be the polynomial 1.
    pub fn log(&self) -> Result<Self> {
        self.require_unit("log")?;
        // n g_n = n s_n - sum_{k=1}^{n-1} k g_k s_{n-k}
        let mut out: Vec<Polynomial<T>> = vec![Polynomial::zero()];
        let mut weighted: Vec<Polynomial<T>> = vec![Polynomial::zero()];
        for n in 1..=self.order {
            let mut acc = self.coeffs[n].scale(&T::from_index(n));
            for k in 1..n {
                acc = &acc - &(&weighted[k] * &self.coeffs[n - k]);
            }
            let g = acc.scale(&(T::one() / T::from_index(n)));
            weighted.push(g.scale(&T::from_index(n)));
            out.push(g);
        }
        Ok(Self::new(self.order, out))
    }

    /// `s^e = exp(e log s)`; the constant-in-t term must be 1.
    pub fn pow(&self, e: &T) -> Result<Self> {
        self.require_unit("pow")?;
        self.log()?.scale(&Polynomial::constant(e.clone())).exp()
    }

    /// `1 / s`; the constant-in-t term must be 1.
    pub fn recip(&self) -> Result<Self> {
        self.require_unit("recip")?;
        let mut out: Vec<Polynomial<T>> = vec![Polynomial::one()];
        for n in 1..=self.order {
            let mut acc = Polynomial::zero();
            for k in 1..=n {
                acc = &acc - &(&self.coeffs[k] * &out[n - k]);
            }
            out.push(acc);
        }
        Ok(Self::new(self.order, out))
    }
}

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: &Series<T>) -> Series<T> {
        self.check_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        Series::new(self.order, coeffs)
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: &Series<T>) -> Series<T> {
        self.check_order(rhs);
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        Series::new(self.order, coeffs)
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: &Series<T>) -> Series<T> {
        self.check_order(rhs);
        let coeffs = (0..=self.order)
            .map(|n| {
                (0..=n).fold(Polynomial::zero(), |acc, k| {
                    &acc + &(&self.coeffs[k] * &rhs.coeffs[n - k])
                })
            })
            .collect();
        Series::new(self.order, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};
    use proptest::prelude::*;

    type P = Polynomial<Rational>;
    type S = Series<Rational>;

    fn scalar_series(order: usize, cs: &[Rational]) -> S {
        S::new(order, cs.iter().cloned().map(P::constant).collect())
    }

    #[test]
    fn exp_of_t() {
        let s = S::t(3, P::one());
        let e = s.exp().unwrap();
        let expected = scalar_series(3, &[int(1), int(1), rat(1, 2), rat(1, 6)]);
        assert_eq!(e, expected);
        assert_eq!(e, S::exp_linear(3, &P::one()));
    }

    #[test]
    fn pow_one_is_identity() {
        let s = scalar_series(4, &[int(1), rat(2, 3), int(-5), int(0), rat(1, 7)]);
        assert_eq!(s.pow(&int(1)).unwrap(), s);
    }

    #[test]
    fn three_halves_power() {
        // (1 + 2t)^{3/2} = 1 + 3t + (3/2) t^2 + ...
        let s = scalar_series(2, &[int(1), int(2)]);
        let p = s.pow(&rat(3, 2)).unwrap();
        assert_eq!(p, scalar_series(2, &[int(1), int(3), rat(3, 2)]));
    }

    #[test]
    fn domain_errors_name_the_constant_term() {
        let s = scalar_series(2, &[int(2), int(1)]);
        let err = s.log().unwrap_err();
        assert!(matches!(err, Error::SeriesConstantTerm { op: "log", .. }));
        assert!(s.exp().is_err());
        assert!(s.pow(&rat(1, 2)).is_err());
        assert!(err.to_string().contains("constant term 1"));
    }

    #[test]
    fn recip_times_self_is_one() {
        let s = S::new(5, vec![P::one(), P::from_ints(&[0, 1]), P::from_ints(&[2, 0, -1])]);
        assert_eq!(&s * &s.recip().unwrap(), S::one(5));
    }

    fn unit_series() -> impl Strategy<Value = S> {
        proptest::collection::vec(
            proptest::collection::vec((-4i64..=4, 1i64..=4).prop_map(|(p, q)| rat(p, q)), 0..3),
            4,
        )
        .prop_map(|cs| {
            let mut coeffs = vec![P::one()];
            coeffs.extend(cs.into_iter().map(P::new));
            S::new(4, coeffs)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn exp_log_round_trip(s in unit_series()) {
            let l = s.log().unwrap();
            prop_assert_eq!(l.exp().unwrap(), s.clone());
            let shifted = &s - &S::one(4);
            prop_assert_eq!(shifted.exp().unwrap().log().unwrap(), shifted);
        }

        #[test]
        fn pow_adds_exponents(s in unit_series(), a in (-3i64..=3, 1i64..=3), b in (-3i64..=3, 1i64..=3)) {
            let (a, b) = (rat(a.0, a.1), rat(b.0, b.1));
            let lhs = &s.pow(&a).unwrap() * &s.pow(&b).unwrap();
            prop_assert_eq!(lhs, s.pow(&(a + b)).unwrap());
        }
    }
}

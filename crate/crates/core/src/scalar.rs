//! Coefficient scalars.
//!
//! Every container in the crate is generic over [`Scalar`]. The identity
//! checks only make sense over an exact field, so the verification layers
//! are written against [`Rational`]; `f64` is accepted by the builders and
//! polynomial algebra for quick numeric previews.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Field-like scalar accepted by the polynomial, series and triangle layers.
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + PartialOrd + Clone + Debug + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("small integers are representable")
    }

    fn from_index(v: usize) -> Self {
        Self::from_int(i64::try_from(v).expect("index fits in i64"))
    }
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + FromPrimitive + PartialOrd + Clone + Debug + Send + Sync + 'static
{
}

/// `p/q` as a reduced rational. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Generalized binomial `r (r-1) ... (r-k+1) / k!` with a scalar upper argument.
pub fn binomial<T: Scalar>(r: &T, k: usize) -> T {
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * (r.clone() - T::from_index(i)) / T::from_index(i + 1);
    }
    acc
}

/// Integer binomial `C(n, k)`, zero when `k > n`.
pub fn binomial_usize<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    binomial(&T::from_index(n), k)
}

/// `C(n, k)` with signed lower index, zero outside `0 <= k <= n`.
pub fn binomial_signed<T: Scalar>(n: i64, k: i64) -> T {
    if n < 0 || k < 0 || k > n {
        return T::zero();
    }
    binomial_usize(n as usize, k as usize)
}

/// `base^exp` with `0^0 = 1`.
pub fn pow<T: Scalar>(base: &T, exp: usize) -> T {
    let mut acc = T::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}

pub fn factorial<T: Scalar>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * T::from_index(i))
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

pub fn is_one(r: &Rational) -> bool {
    r.is_one()
}

/// Parses `"p"`, `"p/q"` or `"-p/q"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(s.parse().ok()?),
    };
    Some(parsed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_normalized() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(1, 2) + rat(1, 3), rat(5, 6));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&int(3), 2), int(3));
        assert_eq!(binomial(&(rat(1, 2) + int(1)), 1), rat(3, 2));
        assert_eq!(binomial(&rat(5, 2), 2), rat(15, 8));
        assert_eq!(binomial(&rat(-1, 3), 0), int(1));
    }

    #[test]
    fn binomial_matches_pascal_for_integers() {
        let mut row = vec![int(1)];
        for n in 1..=20usize {
            let mut next = vec![int(1); n + 1];
            for k in 1..n {
                next[k] = row[k - 1].clone() + row[k].clone();
            }
            row = next;
            for (k, value) in row.iter().enumerate() {
                assert_eq!(&binomial(&int(n as i64), k), value);
                assert_eq!(&binomial_usize::<Rational>(n, k), value);
            }
        }
        assert_eq!(binomial_signed::<Rational>(3, -1), int(0));
        assert_eq!(binomial_signed::<Rational>(2, 3), int(0));
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(pow(&int(0), 0), int(1));
        assert_eq!(pow(&int(0), 3), int(0));
        assert_eq!(pow(&rat(-1, 2), 3), rat(-1, 8));
    }

    #[test]
    fn parse_and_display_agree() {
        for s in ["0", "7", "-3/4", "12345678901234567890123/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!(parse_rational("4/6"), Some(rat(2, 3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn f64_is_a_scalar() {
        assert_eq!(binomial(&5.0f64, 2), 10.0);
        assert_eq!(factorial::<f64>(5), 120.0);
    }
}

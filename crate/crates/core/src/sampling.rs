//! Seeded draws of small rational parameters for randomized identity checks.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Rational;
use crate::triangle::MasterParams;

/// Numerators and denominators stay within this bound.
pub const BOUND: i64 = 10;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| <= 10`, `1 <= q <= 10`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let p = rng.gen_range(-BOUND..=BOUND);
    let q = rng.gen_range(1..=BOUND);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let r = small_rational(rng);
        if r != Rational::from_integer(0.into()) {
            return r;
        }
    }
}

/// Strictly positive `p/q` with `1 <= p, q <= 10`.
pub fn positive_rational<R: Rng>(rng: &mut R) -> Rational {
    let p = rng.gen_range(1..=BOUND);
    let q = rng.gen_range(1..=BOUND);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Random master parameters with `b1 := d a1 - c`, so the companion array exists.
pub fn compatible_params<R: Rng>(rng: &mut R) -> MasterParams<Rational> {
    let lambda = nonzero_rational(rng);
    let [a0, a1, a2, b0, b2, c, d] = std::array::from_fn(|_| small_rational(rng));
    let b1 = d.clone() * a1.clone() - c.clone();
    MasterParams { lambda, a0, a1, a2, b0, b1, b2, c, d }
}

//! Brute-force counts that validate the recurrence-built arrays independently.
//!
//! Signed permutations are written in window notation `pi(1) .. pi(n)` with
//! values in `{±1, .., ±n}`, compared as integers, and `pi(0) = 0` wherever a
//! statistic looks at position zero.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{binomial_usize, int, pow, Rational};
use crate::triangle::Provenance;
use crate::{Poly, Triangle};

pub const MAX_SYMMETRIC: usize = 8;
pub const MAX_HYPEROCTAHEDRAL: usize = 6;
pub const MAX_STIRLING: usize = 12;
pub const MAX_PARTITION_ENUM: usize = 8;
pub const MAX_TABLEAU: usize = 3;

fn check_range(what: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::OracleRange { what, n, min, max });
    }
    Ok(())
}

fn histogram(len: usize, values: impl Iterator<Item = usize>) -> Vec<Rational> {
    let mut counts = vec![0u64; len];
    for v in values {
        counts[v] += 1;
    }
    counts.into_iter().map(|c| int(c as i64)).collect()
}

/// All permutations of `1..=n`.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (1..=n as i64).permutations(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    values: Vec<i64>,
}

impl SignedPermutation {
    /// `None` unless the absolute values are a permutation of `1..=n`.
    pub fn new(values: Vec<i64>) -> Option<Self> {
        let mut abs: Vec<i64> = values.iter().map(|v| v.abs()).collect();
        abs.sort_unstable();
        abs.iter().enumerate().all(|(i, &a)| a == i as i64 + 1).then_some(Self { values })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `0, pi(1), .., pi(n)`.
    fn with_zero(&self) -> Vec<i64> {
        std::iter::once(0).chain(self.values.iter().copied()).collect()
    }

    /// Positions `i in 0..n` with `pi(i) > pi(i+1)`.
    pub fn descents(&self) -> usize {
        self.with_zero().windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Positions `i in 1..=n` with `pi(i) > i`.
    pub fn excedances(&self) -> usize {
        self.values.iter().enumerate().filter(|(i, &v)| v > *i as i64 + 1).count()
    }

    /// Alternating runs of `0, pi(1), .., pi(n)`.
    pub fn runs(&self) -> usize {
        alternating_runs(&self.with_zero())
    }
}

/// All `2^n n!` signed permutations of rank `n`.
pub fn signed_permutations(n: usize) -> impl Iterator<Item = SignedPermutation> {
    permutations(n).flat_map(move |p| {
        (0u32..1 << n).map(move |mask| SignedPermutation {
            values: p.iter().enumerate().map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v }).collect(),
        })
    })
}

/// Number of maximal monotone segments; zero for fewer than two entries.
pub fn alternating_runs(seq: &[i64]) -> usize {
    let ups: Vec<bool> = seq.windows(2).map(|w| w[1] > w[0]).collect();
    if ups.is_empty() {
        return 0;
    }
    1 + ups.windows(2).filter(|w| w[0] != w[1]).count()
}

pub fn descents(p: &[i64]) -> usize {
    p.windows(2).filter(|w| w[0] > w[1]).count()
}

/// `[#{pi in S_n : des pi = k}]_{k < n}`; `[1]` for `n = 0`.
pub fn oracle_eulerian(n: usize) -> Result<Vec<Rational>> {
    check_range("eulerian", n, 0, MAX_SYMMETRIC)?;
    Ok(histogram(n.max(1), permutations(n).map(|p| descents(&p))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeBStatistic {
    Descent,
    ExcedanceA,
    /// Over signed permutations with `pi(1) > 0`; entry `k - 1` counts `k` runs.
    Runs,
}

pub fn oracle_type_b(n: usize, statistic: TypeBStatistic) -> Result<Vec<Rational>> {
    let min = usize::from(statistic == TypeBStatistic::Runs);
    check_range("type-B", n, min, MAX_HYPEROCTAHEDRAL)?;
    Ok(match statistic {
        TypeBStatistic::Descent => histogram(n + 1, signed_permutations(n).map(|p| p.descents())),
        TypeBStatistic::ExcedanceA => histogram(n + 1, signed_permutations(n).map(|p| p.excedances())),
        TypeBStatistic::Runs => {
            histogram(n, signed_permutations(n).filter(|p| p.values()[0] > 0).map(|p| p.runs() - 1))
        }
    })
}

/// `[R(n,k)]_{k = 1..n-1}`: permutations of `[n]` with `k` alternating runs.
pub fn oracle_runs_a(n: usize) -> Result<Vec<Rational>> {
    check_range("runs-A", n, 2, MAX_SYMMETRIC)?;
    Ok(histogram(n - 1, permutations(n).map(|p| alternating_runs(&p) - 1)))
}

/// `[R(n+2,k+1)/2]_{k = 0..n}`.
pub fn oracle_runs_a_shifted(n: usize) -> Result<Vec<Rational>> {
    check_range("runs-A shifted", n, 0, MAX_SYMMETRIC - 2)?;
    Ok(oracle_runs_a(n + 2)?.into_iter().map(|v| v / int(2)).collect())
}

/// `k! S(n,k) = sum_j (-1)^(k-j) C(k,j) j^n`.
pub fn oracle_stirling(n: usize, k: usize) -> Result<Rational> {
    check_range("stirling", n, 0, MAX_STIRLING)?;
    Ok((0..=k).fold(Rational::zero(), |acc, j| {
        let term = binomial_usize::<Rational>(k, j) * pow(&int(j as i64), n);
        if (k - j) % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    }))
}

/// Set partitions of `[n]` by number of blocks, via restricted growth strings.
pub fn set_partition_counts(n: usize) -> Result<Vec<u64>> {
    check_range("set partitions", n, 0, MAX_PARTITION_ENUM)?;
    let mut counts = vec![0u64; n + 1];
    fn walk(pos: usize, n: usize, blocks: usize, counts: &mut [u64]) {
        if pos == n {
            counts[blocks] += 1;
            return;
        }
        for b in 0..=blocks {
            walk(pos + 1, n, blocks.max(b + 1), counts);
        }
    }
    walk(0, n, 0, &mut counts);
    Ok(counts)
}

/// `p_1 = 1`, `p_{n+1} = -(n x + 3n - 1) p_n + (1 + x) p_n'`; entry `i` is `p_{i+1}`.
pub fn lambert_p(n_max: usize) -> Vec<Poly> {
    let one_plus_x = Poly::from_ints(&[1, 1]);
    let mut out = vec![Poly::one()];
    for n in 1..n_max {
        let p = &out[n - 1];
        let lin = Poly::from_ints(&[3 * n as i64 - 1, n as i64]);
        out.push(&(&one_plus_x * &p.derivative()) - &(&lin * p));
    }
    out
}

/// Rows `beta_1 .. beta_{n_max+1}` read off `p_n = (-1)^(n-1) sum_k beta(n,k) x^k`.
pub fn oracle_lambert(n_max: usize) -> Triangle {
    let rows = lambert_p(n_max + 1)
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let sign = if i % 2 == 0 { int(1) } else { int(-1) };
            (0..=i).map(|k| p.coeff(k) * sign.clone()).collect()
        })
        .collect();
    Triangle::from_rows(rows, Provenance::new("lambert p_n polynomials"))
}

/// `beta°(n,k) = beta(n+1, n-k)`.
pub fn oracle_lambert_circ(n_max: usize) -> Triangle {
    oracle_lambert(n_max).reciprocal().with_provenance(Provenance::new("lambert p_n polynomials, reversed"))
}

/// `d^n/dt^n sec t = Q_n(1, tan t) sec t`, by differentiating monomials
/// `x^i y^j` (`x = tan`, `y = sec`) with `x' = y^2`, `y' = x y`, then
/// reducing `y^(j-1) = (1 + x^2)^((j-1)/2)`.
pub fn derivative_by_differentiation(n_max: usize) -> Vec<Poly> {
    let mut current: BTreeMap<(usize, usize), i64> = BTreeMap::from([((0, 1), 1)]);
    let one_plus_x2 = Poly::from_ints(&[1, 0, 1]);
    let mut out = Vec::with_capacity(n_max + 1);
    for _ in 0..=n_max {
        let dense = current.iter().fold(Poly::zero(), |acc, (&(i, j), &c)| {
            assert!(j % 2 == 1);
            &acc + &(&Poly::monomial(int(c), i) * &one_plus_x2.pow((j - 1) / 2))
        });
        out.push(dense);
        let mut next = BTreeMap::new();
        for (&(i, j), &c) in &current {
            if i > 0 {
                *next.entry((i - 1, j + 2)).or_insert(0) += c * i as i64;
            }
            *next.entry((i + 1, j)).or_insert(0) += c * j as i64;
        }
        current = next;
    }
    out
}

/// `Q_n(1, 1)` from the differentiated forms.
pub fn oracle_springer(n_max: usize) -> Vec<Rational> {
    derivative_by_differentiation(n_max).iter().map(|p| p.eval(&int(1))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Label {
    Empty,
    Alpha,
    Beta,
    Delta,
}

/// Staircase tableaux of size `n` with labels `alpha, beta, delta`, counted by
/// the number of `alpha` or `delta` on the diagonal.
///
/// Row `i` has boxes `0..n-i`, its last box on the diagonal. Diagonal boxes are
/// filled; boxes left of a `beta` or `delta` in its row are empty; boxes above
/// an `alpha` in its column are empty.
pub fn oracle_staircase(n: usize) -> Result<Vec<Rational>> {
    check_range("staircase tableaux", n, 0, MAX_TABLEAU)?;
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n - i).map(move |j| (i, j))).collect();
    let labels = [Label::Empty, Label::Alpha, Label::Beta, Label::Delta];
    let mut counts = vec![0u64; n + 1];
    for filling in cells.iter().map(|_| labels.iter().copied()).multi_cartesian_product() {
        let at = |i: usize, j: usize| filling[cells.iter().position(|&c| c == (i, j)).expect("cell")];
        let valid = cells.iter().all(|&(i, j)| {
            let l = at(i, j);
            let diagonal_ok = j + 1 != n - i || l != Label::Empty;
            let row_ok = !matches!(l, Label::Beta | Label::Delta) || (0..j).all(|jj| at(i, jj) == Label::Empty);
            let col_ok = l != Label::Alpha || (0..i).all(|ii| at(ii, j) == Label::Empty);
            diagonal_ok && row_ok && col_ok
        });
        if valid {
            let k = (0..n).filter(|&i| matches!(at(i, n - 1 - i), Label::Alpha | Label::Delta)).count();
            counts[k] += 1;
        }
    }
    if n == 0 {
        counts[0] = 1;
    }
    Ok(counts.into_iter().map(|c| int(c as i64)).collect())
}

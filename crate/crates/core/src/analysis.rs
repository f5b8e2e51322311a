//! Exact structural analysis of row polynomials: Sturm counts, root
//! isolation, interlacing, log-concavity, symmetry and strong q-log-convexity.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{int, Rational};
use crate::transforms::gamma_decompose;
use crate::Poly;

/// Root isolating interval. `lo == hi` marks an exact rational root; otherwise
/// the interval is open, its endpoints are not roots, and it holds one root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootInterval {
    #[serde(serialize_with = "ser_rat")]
    pub lo: Rational,
    #[serde(serialize_with = "ser_rat")]
    pub hi: Rational,
}

fn ser_rat<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Disjoint intervals are ordered by their midpoints.
    fn midpoint(&self) -> Rational {
        (self.lo.clone() + self.hi.clone()) / int(2)
    }

    fn overlaps(&self, other: &RootInterval) -> bool {
        match (self.is_exact(), other.is_exact()) {
            (true, true) => self.lo == other.lo,
            (true, false) => other.lo < self.lo && self.lo < other.hi,
            (false, true) => self.lo < other.lo && other.lo < self.hi,
            (false, false) => self.lo < other.hi && other.lo < self.hi,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub degree: usize,
    pub real_rooted: bool,
    /// Distinct real roots.
    pub distinct_real_roots: usize,
    /// Real roots counted with multiplicity.
    pub root_count_total: usize,
    /// Real roots in the queried closed interval, with multiplicity.
    pub roots_in_interval: Option<usize>,
    /// One per distinct real root, sorted.
    pub isolating_intervals: Vec<RootInterval>,
}

/// Negated-remainder sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Self {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let len = chain.len();
                let (_, r) = chain[len - 2].div_rem(&chain[len - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.scale(&int(-1)));
            }
        }
        Self { chain }
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = None;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last.is_some_and(|l| l != s) {
                count += 1;
            }
            last = Some(s);
        }
        count
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.eval(x).cmp(&Rational::zero())))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let lead = p.leading().expect("chain entries are nonzero").cmp(&Rational::zero());
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if positive || !odd {
                lead
            } else {
                lead.reverse()
            }
        }))
    }

    /// Distinct roots in `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Distinct roots in `[a, b]`.
    pub fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        if a > b {
            return 0;
        }
        let at_a = usize::from(self.chain[0].eval(a).is_zero());
        self.count_half_open(a, b) + at_a
    }
}

/// Yun's square-free factorization: `p = c * prod_i f_i^i` with the `f_i`
/// square-free and pairwise coprime. Returns `(f_i, i)` for nonconstant `f_i`.
pub fn square_free_factors(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let c = dp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let nb = b.div_rem(&a).0;
        let nc = d.div_rem(&a).0;
        d = &nc - &nb.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    out
}

/// `p / gcd(p, p')`.
pub fn square_free_part(p: &Poly) -> Poly {
    if p.degree().unwrap_or(0) == 0 {
        return p.clone();
    }
    p.div_rem(&p.gcd(&p.derivative())).0
}

/// Cauchy bound: every root has absolute value below this.
fn root_bound(p: &Poly) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p.coeffs().iter().map(|c| c.abs() / lead.clone()).fold(Rational::zero(), |m, c| if c > m { c } else { m });
    max + Rational::one()
}

/// A rational strictly inside `(lo, hi)` that is not a root of `p`.
fn split_point(p: &Poly, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi.clone() - lo.clone();
    let mut k = 2i64;
    loop {
        let m = lo.clone() + width.clone() / int(k);
        if !p.eval(&m).is_zero() {
            return m;
        }
        k += 1;
    }
}

fn bisect(p: &Poly, chain: &SturmChain, iv: &RootInterval) -> RootInterval {
    let mid = (iv.lo.clone() + iv.hi.clone()) / int(2);
    if p.eval(&mid).is_zero() {
        return RootInterval { lo: mid.clone(), hi: mid };
    }
    if chain.count_half_open(&iv.lo, &mid) == 1 {
        RootInterval { lo: iv.lo.clone(), hi: mid }
    } else {
        RootInterval { lo: mid, hi: iv.hi.clone() }
    }
}

/// Isolating intervals of a square-free polynomial.
fn isolate(p: &Poly, chain: &SturmChain) -> Vec<RootInterval> {
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match chain.count_half_open(&lo, &hi) {
            0 => {}
            1 => out.push(RootInterval { lo, hi }),
            _ => {
                let m = split_point(p, &lo, &hi);
                stack.push((lo, m.clone()));
                stack.push((m, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Exact real-root analysis. `interval` is closed.
pub fn sturm_analyze(p: &Poly, interval: Option<(&Rational, &Rational)>) -> Result<RootReport> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    let factors = square_free_factors(p);
    let mut total = 0;
    let mut in_interval = 0;
    for (f, mult) in &factors {
        let chain = SturmChain::new(f);
        total += mult * chain.count_all();
        if let Some((a, b)) = interval {
            in_interval += mult * chain.count_closed(a, b);
        }
    }
    let sqf = square_free_part(p);
    let chain = SturmChain::new(&sqf);
    let isolating_intervals = if degree == 0 { Vec::new() } else { isolate(&sqf, &chain) };
    Ok(RootReport {
        degree,
        real_rooted: total == degree,
        distinct_real_roots: isolating_intervals.len(),
        root_count_total: total,
        roots_in_interval: interval.map(|_| in_interval),
        isolating_intervals,
    })
}

/// `true` when the roots of `p` and `q` alternate once their common factor is
/// removed. Both must be real-rooted.
pub fn interlacing(p: &Poly, q: &Poly) -> Result<bool> {
    for (name, f) in [("p", p), ("q", q)] {
        if !sturm_analyze(f, None)?.real_rooted {
            return Err(Error::NotRealRooted(name.to_string()));
        }
    }
    let g = p.gcd(q);
    let p = p.div_rem(&g).0;
    let q = q.div_rem(&g).0;
    // a repeated root left after removing the common part cannot alternate
    if square_free_part(&p).degree() != p.degree() || square_free_part(&q).degree() != q.degree() {
        return Ok(false);
    }
    let (cp, cq) = (SturmChain::new(&p), SturmChain::new(&q));
    let mut ip = if p.degree() == Some(0) { Vec::new() } else { isolate(&p, &cp) };
    let mut iq = if q.degree() == Some(0) { Vec::new() } else { isolate(&q, &cq) };
    // refine until no interval of p meets one of q; roots are distinct since gcd is 1
    loop {
        let mut clash = None;
        'scan: for (i, a) in ip.iter().enumerate() {
            for (j, b) in iq.iter().enumerate() {
                if a.overlaps(b) {
                    clash = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((i, j)) = clash else { break };
        if !ip[i].is_exact() {
            ip[i] = bisect(&p, &cp, &ip[i]);
        }
        if !iq[j].is_exact() {
            iq[j] = bisect(&q, &cq, &iq[j]);
        }
    }
    let mut merged: Vec<(Rational, bool)> =
        ip.into_iter().map(|r| (r.midpoint(), true)).chain(iq.into_iter().map(|r| (r.midpoint(), false))).collect();
    merged.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(merged.windows(2).all(|w| w[0].1 != w[1].1))
}

/// `Err(k)` at the first `k` with `a_k a_{k+2} > a_{k+1}^2`.
pub fn log_concave(seq: &[Rational]) -> std::result::Result<(), usize> {
    match seq
        .windows(3)
        .position(|w| w[0].clone() * w[2].clone() > w[1].clone() * w[1].clone())
    {
        Some(k) => Err(k),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QLogConvexityWitness {
    pub n: usize,
    pub m: usize,
    pub index: usize,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QLogConvexityReport {
    pub n_max: usize,
    pub verdict: bool,
    pub witness: Option<QLogConvexityWitness>,
}

/// Checks `f_{n+1} f_{m-1} - f_n f_m` has nonnegative coefficients for
/// `n_max >= n >= m >= 1`. Needs `polys[0..=n_max+1]`.
pub fn strong_q_log_convex(polys: &[Poly], n_max: usize) -> Result<QLogConvexityReport> {
    if polys.len() < n_max + 2 {
        return Err(Error::RowOutOfRange { n: n_max + 1, depth: polys.len().saturating_sub(1) });
    }
    for n in 1..=n_max {
        for m in 1..=n {
            let diff = &(&polys[n + 1] * &polys[m - 1]) - &(&polys[n] * &polys[m]);
            if let Some(index) = diff.coeffs().iter().position(|c| c.is_negative()) {
                return Ok(QLogConvexityReport {
                    n_max,
                    verdict: false,
                    witness: Some(QLogConvexityWitness { n, m, index, coefficient: diff.coeff(index).to_string() }),
                });
            }
        }
    }
    Ok(QLogConvexityReport { n_max, verdict: true, witness: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    pub symmetric: bool,
    /// Center of symmetry `(valuation + degree) / 2` when symmetric.
    pub center: Option<String>,
    pub unimodal: bool,
    /// Gamma vector sign, present when symmetric.
    pub gamma_nonneg: Option<bool>,
    pub gamma: Option<Vec<String>>,
}

/// Coefficients between valuation and degree rise weakly, then fall weakly.
pub fn is_unimodal(seq: &[Rational]) -> bool {
    let mut falling = false;
    for w in seq.windows(2) {
        match w[1].cmp(&w[0]) {
            Ordering::Greater if falling => return false,
            Ordering::Less => falling = true,
            _ => {}
        }
    }
    true
}

pub fn structure_summary(p: &Poly) -> StructureSummary {
    let (Some(v), Some(d)) = (p.valuation(), p.degree()) else {
        return StructureSummary { symmetric: true, center: None, unimodal: true, gamma_nonneg: None, gamma: None };
    };
    let core = &p.coeffs()[v..=d];
    let symmetric = (0..core.len()).all(|i| core[i] == core[core.len() - 1 - i]);
    let unimodal = is_unimodal(core);
    let (center, gamma_nonneg, gamma) = if symmetric {
        let center = Rational::new((v + d).into(), 2.into()).to_string();
        let reduced = Poly::new(core.to_vec());
        match gamma_decompose(&reduced, d - v) {
            Ok(g) => (Some(center), Some(g.is_nonnegative()), Some(g.gamma.iter().map(|c| c.to_string()).collect())),
            Err(_) => (Some(center), None, None),
        }
    } else {
        (None, None, None)
    };
    StructureSummary { symmetric, center, unimodal, gamma_nonneg, gamma }
}

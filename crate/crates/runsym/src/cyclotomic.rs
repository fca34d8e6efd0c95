//! Cyclotomic polynomials, cyclotomic trial factorization, and the decision
//! procedure that recognizes polynomials whose reciprocal power series has
//! all coefficients 0 or 1.
//!
//! A nonconstant `a(x)` with `a(0) = 1` passes exactly when it factors into
//! distinct cyclotomic polynomials (up to sign) and `N = (1 - x^m)/a` has
//! 0/1 coefficients, where `m` is the lcm of the factor orders. The
//! reciprocal is then `N(x)/(1 - x^m)`, whose coefficient at `x^s` is 1 iff
//! `s mod m` lies in the exponent support `T` of `N`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::series::{rational_expand, IntPolynomial, TruncatedSeries};

/// Why a polynomial was rejected by [`classify_reciprocal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectionWitness {
    /// A cyclotomic factor occurs with multiplicity greater than one.
    RepeatedFactor { order: usize },
    /// A factor is not cyclotomic (the cofactor after trial division).
    NonCyclotomicFactor { remainder: IntPolynomial },
    /// `(1 - x^m)/a` has a coefficient outside {0, 1}; this is the first one.
    CoefficientOutOfRange { index: usize, value: BigInt },
}

impl fmt::Display for RejectionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectionWitness::RepeatedFactor { order } => {
                write!(f, "cyclotomic factor of order {order} is repeated")
            }
            RejectionWitness::NonCyclotomicFactor { remainder } => {
                write!(f, "non-cyclotomic factor {remainder}")
            }
            RejectionWitness::CoefficientOutOfRange { index, value } => {
                write!(f, "numerator coefficient {value} at x^{index}")
            }
        }
    }
}

/// Errors from classification, period detection, and the subset search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloError {
    NonUnitConstantTerm,
    ConstantPolynomial,
    /// The reciprocal has a coefficient outside {0, 1}.
    NotZeroOne(RejectionWitness),
    /// A reciprocal coefficient escaped the requested bound.
    Unbounded { index: usize, value: BigInt },
    /// The divisor-subset search would enumerate more than 2^20 subsets.
    TooManyDivisors { count: usize },
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::NonUnitConstantTerm => write!(f, "constant term must be 1"),
            CycloError::ConstantPolynomial => write!(f, "polynomial must be nonconstant"),
            CycloError::NotZeroOne(w) => write!(f, "reciprocal is not a 0/1 series: {w}"),
            CycloError::Unbounded { index, value } => {
                write!(f, "coefficient {value} at x^{index} escapes the bound")
            }
            CycloError::TooManyDivisors { count } => {
                write!(f, "{count} divisors make the subset search intractable")
            }
        }
    }
}

impl std::error::Error for CycloError {}

/// Euler's totient by trial division.
pub fn euler_phi(mut n: usize) -> usize {
    assert!(n >= 1);
    let mut phi = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut pk = 1;
            while n.is_multiple_of(p) {
                n /= p;
                pk *= p;
            }
            phi *= pk - pk / p;
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn lcm(a: usize, b: usize) -> usize {
    num_integer::lcm(a, b)
}

/// Cache of cyclotomic polynomials, filled on demand by recursive exact
/// division: `Φ_d = (x^d - 1) / Π_{e|d, e<d} Φ_e`.
#[derive(Default)]
pub struct CyclotomicTable {
    cache: HashMap<usize, IntPolynomial>,
}

impl CyclotomicTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, d: usize) -> IntPolynomial {
        assert!(d >= 1);
        if let Some(p) = self.cache.get(&d) {
            return p.clone();
        }
        let mut poly = IntPolynomial::one_minus_x_pow(d).neg(); // x^d - 1
        for e in divisors(d) {
            if e < d {
                let phi_e = self.get(e);
                poly = poly.div_exact(&phi_e).expect("x^d - 1 is divisible by each Φ_e, e | d");
            }
        }
        self.cache.insert(d, poly.clone());
        poly
    }
}

/// The `d`-th cyclotomic polynomial (monic, integer coefficients).
pub fn cyclotomic_poly(d: usize) -> IntPolynomial {
    CyclotomicTable::new().get(d)
}

/// Result of dividing out every cyclotomic factor of a polynomial.
///
/// `sign * remainder * Π Φ_d` reproduces the input exactly; the remainder
/// has positive leading coefficient and no cyclotomic factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    /// Orders `d` of the cyclotomic factors, ascending, with multiplicity.
    pub orders: Vec<usize>,
    /// The non-cyclotomic cofactor, normalized to positive leading coefficient.
    pub remainder: IntPolynomial,
    /// `+1` or `-1`.
    pub sign: i8,
}

impl CyclotomicFactorization {
    /// Multiplies the factorization back together.
    pub fn reconstruct(&self) -> IntPolynomial {
        let mut table = CyclotomicTable::new();
        let mut p = if self.sign < 0 { self.remainder.neg() } else { self.remainder.clone() };
        for &d in &self.orders {
            p = p.mul(&table.get(d));
        }
        p
    }

    /// First order that appears more than once, if any.
    pub fn repeated_order(&self) -> Option<usize> {
        self.orders.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
    }
}

/// Divides out `Φ_d` for every candidate order `d`, recording multiplicity.
///
/// Candidates run over `d <= 2·deg(p)² + 2`, which covers every order with
/// `φ(d) <= deg(p)` because `φ(d) >= sqrt(d/2)`; orders with `φ(d)` larger
/// than the remaining degree are skipped without computing `Φ_d`.
pub fn cyclotomic_factorization(p: &IntPolynomial) -> CyclotomicFactorization {
    assert!(!p.is_zero(), "cannot factor the zero polynomial");
    let deg = p.degree().unwrap();
    let mut table = CyclotomicTable::new();
    let mut orders = Vec::new();
    let mut rem = p.clone();
    let bound = 2 * deg * deg + 2;
    for d in 1..=bound {
        let rdeg = match rem.degree() {
            Some(r) if r >= 1 => r,
            _ => break,
        };
        if euler_phi(d) > rdeg {
            continue;
        }
        let phi_d = table.get(d);
        while let Ok(q) = rem.div_exact(&phi_d) {
            orders.push(d);
            rem = q;
            if rem.degree() == Some(0) {
                break;
            }
        }
    }
    let lead = rem.coeffs().last().expect("remainder of a nonzero polynomial is nonzero");
    let (sign, remainder) = if lead.is_negative() { (-1, rem.neg()) } else { (1, rem) };
    CyclotomicFactorization { orders, remainder, sign }
}

/// A period `m` and residue set `T` describing the run-length class whose
/// indicator series is `1/a = N(x)/(1 - x^m)`.
///
/// Allowed run lengths are the positive integers congruent mod `m` to an
/// element of `T` (written `T*`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunClassSpec {
    /// Period.
    pub m: usize,
    /// Sorted residues in `{0, .., m-1}`; always contains 0.
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    /// Numerator `N = Σ_{t in T} x^t`.
    #[serde(rename = "N")]
    pub n_poly: IntPolynomial,
    /// The classified polynomial, with `a · N = 1 - x^m`.
    pub a: IntPolynomial,
}

impl RunClassSpec {
    /// True when a run of length `s >= 1` is allowed.
    pub fn accepts_run_length(&self, s: usize) -> bool {
        s >= 1 && self.t.binary_search(&(s % self.m)).is_ok()
    }

    /// Allowed run lengths up to `max` inclusive.
    pub fn allowed_lengths_up_to(&self, max: usize) -> Vec<usize> {
        (1..=max).filter(|&s| self.accepts_run_length(s)).collect()
    }

    /// Checks the structural invariants tying `m`, `T`, `N`, and `a`
    /// together. Work is proportional to the stored coefficients, not to
    /// `m`, so hostile values of `m` cannot force large allocations.
    pub fn validate(&self) -> Result<(), String> {
        if self.m < 1 {
            return Err("period m must be positive".into());
        }
        if self.t.first() != Some(&0) {
            return Err("residue set must contain 0".into());
        }
        if self.t.windows(2).any(|w| w[0] >= w[1]) {
            return Err("residue set must be strictly increasing".into());
        }
        if self.t.last().is_some_and(|&t| t >= self.m) {
            return Err("residues must be smaller than m".into());
        }
        if !self.n_poly.is_zero_one() {
            return Err("numerator coefficients must be 0 or 1".into());
        }
        if self.n_poly.degree().is_some_and(|d| d >= self.m) {
            return Err("numerator degree must be smaller than m".into());
        }
        if self.n_poly.support() != self.t {
            return Err("numerator does not match the residue set".into());
        }
        // a * N = 1 - x^m, checked structurally
        let product = self.a.mul(&self.n_poly);
        if product.degree() != Some(self.m)
            || !product.coeff(0).is_one()
            || product.coeff(self.m) != -BigInt::one()
            || (1..self.m).any(|i| !product.coeff(i).is_zero())
        {
            return Err("a * N != 1 - x^m".into());
        }
        Ok(())
    }

    /// First `count` coefficients of `1/a`, i.e. the indicator of `T*`.
    pub fn reciprocal_prefix(&self, count: usize) -> TruncatedSeries {
        rational_expand(&self.n_poly, self.m, count.saturating_sub(1))
    }
}

/// Decides whether every reciprocal coefficient of `a` is 0 or 1.
///
/// The procedure: factor into cyclotomics, reject on a repeated or
/// non-cyclotomic factor, set `m` to the lcm of the orders, divide
/// `N = (1 - x^m)/a`, and accept iff `N` has 0/1 coefficients. Any multiple
/// of `m` replicates `N` disjointly (its degree is below `m`), so the
/// verdict does not depend on choosing the minimal period.
pub fn classify_reciprocal(a: &IntPolynomial) -> Result<RunClassSpec, CycloError> {
    if !a.coeff(0).is_one() {
        return Err(CycloError::NonUnitConstantTerm);
    }
    if a.degree() == Some(0) {
        return Err(CycloError::ConstantPolynomial);
    }
    let fact = cyclotomic_factorization(a);
    if fact.remainder != IntPolynomial::one() {
        return Err(CycloError::NotZeroOne(RejectionWitness::NonCyclotomicFactor {
            remainder: fact.remainder,
        }));
    }
    if let Some(order) = fact.repeated_order() {
        return Err(CycloError::NotZeroOne(RejectionWitness::RepeatedFactor { order }));
    }
    let m = fact.orders.iter().copied().fold(1, lcm);
    let n_poly = IntPolynomial::one_minus_x_pow(m)
        .div_exact(a)
        .expect("distinct cyclotomic factors of a divide 1 - x^lcm");
    if let Some((index, value)) = n_poly.first_non_zero_one() {
        return Err(CycloError::NotZeroOne(RejectionWitness::CoefficientOutOfRange {
            index,
            value,
        }));
    }
    debug_assert!(n_poly.degree().unwrap() < m);
    let t = n_poly.support();
    Ok(RunClassSpec { m, t, n_poly, a: a.clone() })
}

/// Eventually periodic description of the power series of `num/den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicForm {
    /// Number of coefficients before the cycle starts (minimal).
    pub preperiod: usize,
    /// Cycle length (minimal).
    pub period: usize,
    /// Coefficients `c_0 .. c_{preperiod-1}`.
    pub prefix: Vec<BigInt>,
    /// One full cycle `c_preperiod .. c_{preperiod+period-1}`.
    pub cycle: Vec<BigInt>,
}

impl PeriodicForm {
    /// Coefficient of `x^n` in the expansion.
    pub fn coeff(&self, n: usize) -> BigInt {
        if n < self.preperiod {
            self.prefix[n].clone()
        } else {
            self.cycle[(n - self.preperiod) % self.period].clone()
        }
    }

    /// True when every coefficient, for all n, is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.prefix.iter().chain(&self.cycle).all(|c| c.is_zero() || c.is_one())
    }
}

/// Expands `num/den` by long division, insisting every coefficient stays
/// within `bound` in absolute value, and finds the minimal preperiod and
/// period by hashing the division state.
///
/// With bounded coefficients the state (the last `deg(den)` coefficients)
/// ranges over a finite set once the numerator is exhausted, so a repeat is
/// guaranteed. A coefficient escaping the bound proves the series is not of
/// the form `N(x)/(1 - x^m)` with coefficients within that bound.
pub fn detect_period(
    num: &IntPolynomial,
    den: &IntPolynomial,
    bound: u32,
) -> Result<PeriodicForm, CycloError> {
    if !den.coeff(0).is_one() {
        return Err(CycloError::NonUnitConstantTerm);
    }
    assert!(bound >= 1, "bound must be positive");
    let dd = den.degree().unwrap();
    let num_deg = num.degree().map_or(0, |d| d + 1);
    let start = num_deg.max(dd);
    let bound = i64::from(bound);

    let mut coeffs: Vec<i64> = Vec::new();
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    let (cycle_start, raw_period) = loop {
        let n = coeffs.len();
        if n >= start {
            let state = coeffs[n - dd..n].to_vec();
            if let Some(&first) = seen.get(&state) {
                break (first, n - first);
            }
            seen.insert(state, n);
        }
        let mut c = num.coeff(n);
        for k in 1..=dd.min(n) {
            let den_k = den.coeff(k);
            if !den_k.is_zero() {
                c -= den_k * BigInt::from(coeffs[n - k]);
            }
        }
        if c.abs() > BigInt::from(bound) {
            return Err(CycloError::Unbounded { index: n, value: c });
        }
        coeffs.push(i64::try_from(&c).expect("bounded coefficient fits i64"));
    };

    // shrink the period to the minimal divisor that still cycles
    let cycle = &coeffs[cycle_start..cycle_start + raw_period];
    let period = divisors(raw_period)
        .into_iter()
        .find(|&p| (0..raw_period).all(|k| cycle[k] == cycle[(k + p) % raw_period]))
        .unwrap_or(raw_period);

    // pull the cycle start as far left as the prefix allows
    let mut preperiod = cycle_start;
    while preperiod > 0 && coeffs[preperiod - 1] == coeffs[preperiod - 1 + period] {
        preperiod -= 1;
    }

    Ok(PeriodicForm {
        preperiod,
        period,
        prefix: coeffs[..preperiod].iter().map(|&c| BigInt::from(c)).collect(),
        cycle: coeffs[preperiod..preperiod + period].iter().map(|&c| BigInt::from(c)).collect(),
    })
}

/// The polynomial `Σ_{k=0}^{m-1} (x^{krb} - x^{(kr+1)b})`, whose reciprocal
/// indicates run lengths congruent to `0, b, .., (r-1)b` modulo `mrb`.
pub fn construct_a(m: usize, r: usize, b: usize) -> IntPolynomial {
    assert!(m >= 1 && r >= 1 && b >= 1);
    let top = ((m - 1) * r + 1) * b;
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for k in 0..m {
        coeffs[k * r * b] += 1;
        coeffs[(k * r + 1) * b] -= 1;
    }
    IntPolynomial::new(coeffs)
}

/// Enumerates every subset of the divisors of `m`, keeps products of the
/// corresponding cyclotomic polynomials with 0/1 coefficients and degree
/// below `m`, and returns their run-class descriptions sorted by residue set.
///
/// Exhaustive for the given `m`; no claim is made across different periods.
pub fn search_zero_one_products(m: usize) -> Result<Vec<RunClassSpec>, CycloError> {
    assert!(m >= 1);
    let divs = divisors(m);
    if divs.len() > 20 {
        return Err(CycloError::TooManyDivisors { count: divs.len() });
    }
    let mut table = CyclotomicTable::new();
    let factors: Vec<IntPolynomial> = divs.iter().map(|&d| table.get(d)).collect();
    let degrees: Vec<usize> = divs.iter().map(|&d| euler_phi(d)).collect();
    let one_minus_xm = IntPolynomial::one_minus_x_pow(m);

    let mut out = Vec::new();
    for mask in 0u32..(1u32 << divs.len()) {
        let picked = |i: usize| mask >> i & 1 == 1;
        let deg: usize = degrees.iter().enumerate().filter(|&(i, _)| picked(i)).map(|(_, d)| d).sum();
        if deg >= m {
            continue;
        }
        let mut n_poly = IntPolynomial::one();
        for (i, factor) in factors.iter().enumerate() {
            if picked(i) {
                n_poly = n_poly.mul(factor);
            }
        }
        if !n_poly.is_zero_one() {
            continue;
        }
        let a = one_minus_xm.div_exact(&n_poly).expect("each Φ_d with d | m divides 1 - x^m");
        let t = n_poly.support();
        out.push(RunClassSpec { m, t, n_poly, a });
    }
    out.sort_by(|x, y| x.t.cmp(&y.t));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    #[test]
    fn cyclotomic_small_orders() {
        assert_eq!(cyclotomic_poly(1), poly(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), poly(&[1, 1]));
        assert_eq!(cyclotomic_poly(5), poly(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_poly(6), poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), poly(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(18), poly(&[1, 0, 0, -1, 0, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_over_divisors() {
        let mut table = CyclotomicTable::new();
        for m in 1..=60 {
            let mut prod = IntPolynomial::one();
            for d in divisors(m) {
                prod = prod.mul(&table.get(d));
            }
            assert_eq!(prod, IntPolynomial::one_minus_x_pow(m).neg(), "m = {m}");
        }
    }

    #[test]
    fn phi_values() {
        let want = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(euler_phi(i + 1), *w);
        }
    }

    #[test]
    fn factorization_twelve_example() {
        let f = cyclotomic_factorization(&poly(&[1, 0, -1, -1, 1, 1, 0, -1]));
        assert_eq!(f.orders, vec![1, 3, 12]);
        assert_eq!(f.remainder, IntPolynomial::one());
        assert_eq!(f.sign, -1);
        assert_eq!(f.reconstruct(), poly(&[1, 0, -1, -1, 1, 1, 0, -1]));
    }

    #[test]
    fn factorization_eighteen_example() {
        let f = cyclotomic_factorization(&poly(&[1, 0, -1, -1, 0, 1, 1, 0, -1]));
        assert_eq!(f.orders, vec![1, 2, 18]);
        assert_eq!(f.remainder, IntPolynomial::one());
        assert_eq!(f.reconstruct(), poly(&[1, 0, -1, -1, 0, 1, 1, 0, -1]));
    }

    #[test]
    fn factorization_leaves_non_cyclotomic_remainder() {
        let f = cyclotomic_factorization(&poly(&[2, 0, 1]));
        assert!(f.orders.is_empty());
        assert_eq!(f.remainder, poly(&[2, 0, 1]));
        assert_eq!(f.sign, 1);
    }

    #[test]
    fn factorization_tracks_multiplicity() {
        let square = poly(&[1, -1]).mul(&poly(&[1, -1]));
        let f = cyclotomic_factorization(&square);
        assert_eq!(f.orders, vec![1, 1]);
        assert_eq!(f.repeated_order(), Some(1));
        assert_eq!(f.reconstruct(), square);
    }

    #[test]
    fn classify_twelve() {
        let spec = classify_reciprocal(&poly(&[1, 0, -1, -1, 1, 1, 0, -1])).unwrap();
        assert_eq!(spec.m, 12);
        assert_eq!(spec.t, vec![0, 2, 3, 5]);
        assert_eq!(spec.n_poly, poly(&[1, 0, 1, 1, 0, 1]));
        assert!(spec.validate().is_ok());
    }

    #[test]
    fn classify_eighteen() {
        let spec = classify_reciprocal(&poly(&[1, 0, -1, -1, 0, 1, 1, 0, -1])).unwrap();
        assert_eq!(spec.m, 18);
        assert_eq!(spec.t, vec![0, 2, 3, 4, 5, 6, 7, 8, 10]);
        assert!(spec.validate().is_ok());
    }

    #[test]
    fn classify_rejects_alternating() {
        let err = classify_reciprocal(&poly(&[1, 1])).unwrap_err();
        assert_eq!(
            err,
            CycloError::NotZeroOne(RejectionWitness::CoefficientOutOfRange {
                index: 1,
                value: BigInt::from(-1),
            })
        );
    }

    #[test]
    fn classify_rejects_repeated_factor() {
        let square = poly(&[1, -1]).mul(&poly(&[1, -1]));
        let err = classify_reciprocal(&square).unwrap_err();
        assert_eq!(err, CycloError::NotZeroOne(RejectionWitness::RepeatedFactor { order: 1 }));
    }

    #[test]
    fn classify_rejects_non_cyclotomic() {
        let err = classify_reciprocal(&poly(&[1, 0, 2])).unwrap_err();
        assert!(matches!(
            err,
            CycloError::NotZeroOne(RejectionWitness::NonCyclotomicFactor { .. })
        ));
    }

    #[test]
    fn classify_preconditions() {
        assert_eq!(classify_reciprocal(&poly(&[2, 1])), Err(CycloError::NonUnitConstantTerm));
        assert_eq!(classify_reciprocal(&poly(&[1])), Err(CycloError::ConstantPolynomial));
    }

    #[test]
    fn classify_geometric() {
        let spec = classify_reciprocal(&poly(&[1, -1])).unwrap();
        assert_eq!((spec.m, spec.t.clone()), (1, vec![0]));
        assert!(spec.accepts_run_length(7));
    }

    #[test]
    fn detect_period_four_cycle() {
        let p = detect_period(&IntPolynomial::one(), &poly(&[1, -1, 1, -1]), 1).unwrap();
        assert_eq!((p.preperiod, p.period), (0, 4));
        assert_eq!(p.cycle, [1, 1, 0, 0].map(BigInt::from));
        // matches plain expansion out to order 40
        let series = poly(&[1, -1, 1, -1]).ogf_inverse(40).unwrap();
        for n in 0..=40 {
            assert_eq!(p.coeff(n), series.coeff(n), "n = {n}");
        }
    }

    #[test]
    fn detect_period_geometric() {
        let p = detect_period(&IntPolynomial::one(), &poly(&[1, -1]), 1).unwrap();
        assert_eq!((p.preperiod, p.period), (0, 1));
        assert_eq!(p.cycle, [BigInt::one()]);
    }

    #[test]
    fn detect_period_rejects_growth() {
        let err = detect_period(&IntPolynomial::one(), &poly(&[1, -2]), 10).unwrap_err();
        assert_eq!(err, CycloError::Unbounded { index: 4, value: BigInt::from(16) });
    }

    #[test]
    fn detect_period_with_preperiod() {
        // (1 + x)/(1 - x^2) = 1 + x + x^2 + ... but via num with a transient:
        // num = 1 + 2x, den = 1 - x: coefficients 1, 3, 3, 3, ...
        let p = detect_period(&poly(&[1, 2]), &poly(&[1, -1]), 3).unwrap();
        assert_eq!((p.preperiod, p.period), (1, 1));
        assert_eq!(p.prefix, [BigInt::one()]);
        assert_eq!(p.cycle, [BigInt::from(3)]);
    }

    #[test]
    fn construct_a_examples() {
        assert_eq!(construct_a(2, 2, 1), poly(&[1, -1, 1, -1]));
        assert_eq!(construct_a(1, 1, 1), poly(&[1, -1]));
        assert_eq!(construct_a(2, 2, 2), poly(&[1, 0, -1, 0, 1, 0, -1]));
        assert_eq!(construct_a(4, 1, 1), poly(&[1, 0, 0, 0, -1])); // telescopes
    }

    #[test]
    fn construct_a_classifies_to_run_classes() {
        let spec = classify_reciprocal(&construct_a(2, 2, 1)).unwrap();
        assert_eq!((spec.m, spec.t.clone()), (4, vec![0, 1]));
        let spec = classify_reciprocal(&construct_a(3, 2, 1)).unwrap();
        assert_eq!((spec.m, spec.t.clone()), (6, vec![0, 1]));
        let spec = classify_reciprocal(&construct_a(2, 2, 2)).unwrap();
        assert_eq!((spec.m, spec.t.clone()), (8, vec![0, 2]));
    }

    #[test]
    fn search_trivial_period() {
        let specs = search_zero_one_products(1).unwrap();
        assert_eq!(specs.len(), 1);
        assert_eq!(specs[0].t, vec![0]);
        assert_eq!(specs[0].a, poly(&[1, -1]));
    }

    #[test]
    fn search_period_two() {
        let specs = search_zero_one_products(2).unwrap();
        let numerators: Vec<_> = specs.iter().map(|s| s.n_poly.clone()).collect();
        assert_eq!(numerators, vec![IntPolynomial::one(), poly(&[1, 1])]);
    }

    #[test]
    fn search_twelve_contains_example() {
        let specs = search_zero_one_products(12).unwrap();
        assert_eq!(specs.len(), 17);
        let hit = specs.iter().find(|s| s.t == vec![0, 2, 3, 5]).expect("missing 12-spec");
        assert_eq!(hit.n_poly, poly(&[1, 0, 1, 1, 0, 1]));
        assert_eq!(hit.a, poly(&[1, 0, -1, -1, 1, 1, 0, -1]));
        // every result satisfies its own invariants and round-trips
        for s in &specs {
            assert!(s.validate().is_ok());
            let back = classify_reciprocal(&s.a).unwrap();
            assert_eq!(s.m % back.m, 0, "period divides the search period");
            for probe in 1..=(3 * s.m) {
                assert_eq!(s.accepts_run_length(probe), back.accepts_run_length(probe));
            }
        }
    }

    #[test]
    fn search_thirty_contains_product_example() {
        let specs = search_zero_one_products(30).unwrap();
        assert_eq!(specs.len(), 36);
        let hit = specs.iter().find(|s| s.t == vec![0, 2, 3, 4, 6]).expect("missing 30-spec");
        assert_eq!(hit.n_poly, poly(&[1, 0, 1, 1, 1, 0, 1]));
    }

    #[test]
    fn accepted_specs_have_periodic_indicator() {
        // ones exactly at positions congruent to T mod m, out to 3m
        for a in [
            poly(&[1, 0, -1, -1, 1, 1, 0, -1]),
            poly(&[1, 0, -1, -1, 0, 1, 1, 0, -1]),
            construct_a(2, 2, 1),
            construct_a(3, 2, 1),
            construct_a(2, 2, 2),
        ] {
            let spec = classify_reciprocal(&a).unwrap();
            let prefix = spec.reciprocal_prefix(3 * spec.m);
            for s in 0..3 * spec.m {
                let want = spec.t.binary_search(&(s % spec.m)).is_ok();
                assert_eq!(prefix.coeff(s).is_one(), want, "a={a} s={s}");
                assert_eq!(prefix.coeff(s).is_zero(), !want, "a={a} s={s}");
            }
        }
    }

    #[test]
    fn spec_json_shape() {
        let spec = classify_reciprocal(&poly(&[1, -1, 1, -1])).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"m":4,"T":[0,1],"N":["1","1"],"a":["1","-1","1","-1"]}"#);
        let back: RunClassSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
    }
}

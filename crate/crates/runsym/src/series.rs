//! Exact truncated power series and polynomial arithmetic over
//! arbitrary-precision integers, in ordinary (OGF) and exponential (EGF)
//! conventions.
//!
//! An EGF is stored as the integer sequence `(c_n)` of the series
//! `Σ c_n x^n / n!`; multiplication is binomial convolution and inversion of
//! a series with unit constant term stays in the integers, so no rational
//! arithmetic is ever needed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors from series and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    /// The constant term is not 1, so the series has no integer inverse here.
    NonUnitConstantTerm,
    /// Exact polynomial division left a nonzero remainder.
    NotDivisible,
    /// Binary operation on series with different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// Binary operation mixing OGF and EGF operands.
    ConventionMismatch,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::NonUnitConstantTerm => write!(f, "constant term must be 1"),
            SeriesError::NotDivisible => write!(f, "polynomial division is not exact"),
            SeriesError::OrderMismatch { left, right } => {
                write!(f, "truncation orders differ: {left} vs {right}")
            }
            SeriesError::ConventionMismatch => write!(f, "series conventions differ"),
        }
    }
}

impl std::error::Error for SeriesError {}

/// Coefficient convention of a truncated series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Ordinary generating function: `Σ c_n x^n`.
    Ogf,
    /// Exponential generating function: `Σ c_n x^n / n!`.
    Egf,
}

/// A polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are normalized
/// away; the zero polynomial is the empty list and has no degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from low-to-high coefficients, dropping trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    /// `1 - x^m`.
    pub fn one_minus_x_pow(m: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); m + 1];
        coeffs[0] = BigInt::one();
        coeffs[m] = -BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exponents with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// True when every coefficient is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero() || c.is_one())
    }

    /// First `(exponent, coefficient)` with coefficient outside {0, 1}, if any.
    pub fn first_non_zero_one(&self) -> Option<(usize, BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero() && !c.is_one())
            .map(|(i, c)| (i, c.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        IntPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        // leading coefficients are nonzero, so no normalization is needed
        IntPolynomial { coeffs }
    }

    /// Exact division: returns `r` with `other * r == self`, or
    /// [`SeriesError::NotDivisible`].
    pub fn div_exact(&self, other: &Self) -> Result<Self, SeriesError> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dp = self.degree().unwrap();
        let dq = other.degree().unwrap();
        if dp < dq {
            return Err(SeriesError::NotDivisible);
        }
        let q_lead = &other.coeffs[dq];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for i in (0..=dp - dq).rev() {
            let lead = std::mem::take(&mut rem[i + dq]);
            if lead.is_zero() {
                continue;
            }
            let (c, r) = num_integer::Integer::div_rem(&lead, q_lead);
            if !r.is_zero() {
                return Err(SeriesError::NotDivisible);
            }
            for (j, b) in other.coeffs.iter().enumerate().take(dq) {
                rem[i + j] -= &c * b;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible);
        }
        Ok(Self::new(quot))
    }

    /// Truncated reciprocal as an ordinary generating function.
    ///
    /// Requires constant term 1; uses the recurrence
    /// `g_n = -Σ_{k≥1} p_k g_{n-k}`.
    pub fn ogf_inverse(&self, order: usize) -> Result<TruncatedSeries, SeriesError> {
        if !self.coeff(0).is_one() {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        let deg = self.degree().unwrap();
        let mut g = Vec::with_capacity(order + 1);
        g.push(BigInt::one());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=deg.min(n) {
                let pk = &self.coeffs[k];
                if !pk.is_zero() {
                    acc += pk * &g[n - k];
                }
            }
            g.push(-acc);
        }
        Ok(TruncatedSeries { convention: Convention::Ogf, coeffs: g })
    }

    /// Low-to-high decimal coefficient strings (the wire form).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }

    /// Parses low-to-high decimal coefficient strings.
    pub fn from_coeff_strings<S: AsRef<str>>(strings: &[S]) -> Result<Self, String> {
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in strings {
            let c: BigInt = s
                .as_ref()
                .parse()
                .map_err(|_| format!("invalid integer coefficient {:?}", s.as_ref()))?;
            coeffs.push(c);
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        IntPolynomial::from_coeff_strings(&strings).map_err(D::Error::custom)
    }
}

/// An exact coefficient sequence up to a truncation order, tagged with its
/// generating-function convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    convention: Convention,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Wraps a coefficient list; the order is `coeffs.len() - 1`.
    pub fn new(convention: Convention, coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series stores at least the constant term");
        TruncatedSeries { convention, coeffs }
    }

    /// The polynomial's coefficients read in the given convention, padded
    /// with zeros (or cut off) at the truncation order.
    pub fn from_polynomial(convention: Convention, p: &IntPolynomial, order: usize) -> Self {
        let coeffs = (0..=order).map(|i| p.coeff(i)).collect();
        TruncatedSeries { convention, coeffs }
    }

    pub fn one(convention: Convention, order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        TruncatedSeries { convention, coeffs }
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Truncation order `D`; coefficients are exact for `x^0 .. x^D`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero_one(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero() || c.is_one())
    }

    /// Binomial-convolution inverse of an EGF with `c_0 = 1`:
    /// `u_n = -Σ_{k=1}^{n} C(n,k) c_k u_{n-k}`, all integers.
    pub fn egf_inverse(&self) -> Result<TruncatedSeries, SeriesError> {
        if self.convention != Convention::Egf {
            return Err(SeriesError::ConventionMismatch);
        }
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        let order = self.order();
        let binom = pascal_triangle(order);
        let mut u = Vec::with_capacity(order + 1);
        u.push(BigInt::one());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                let ck = &self.coeffs[k];
                if !ck.is_zero() {
                    acc += &binom[n][k] * ck * &u[n - k];
                }
            }
            u.push(-acc);
        }
        Ok(TruncatedSeries { convention: Convention::Egf, coeffs: u })
    }

    /// Product of two EGFs: `(a·b)_n = Σ_k C(n,k) a_k b_{n-k}`.
    pub fn binomial_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        if self.convention != Convention::Egf || other.convention != Convention::Egf {
            return Err(SeriesError::ConventionMismatch);
        }
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch { left: self.order(), right: other.order() });
        }
        let order = self.order();
        let binom = pascal_triangle(order);
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = BigInt::zero();
                for (k, a) in self.coeffs[..=n].iter().enumerate() {
                    if !a.is_zero() {
                        acc += &binom[n][k] * a * &other.coeffs[n - k];
                    }
                }
                acc
            })
            .collect();
        Ok(TruncatedSeries { convention: Convention::Egf, coeffs })
    }

    /// Truncated ordinary product with a polynomial (OGF only).
    pub fn mul_polynomial(&self, p: &IntPolynomial) -> TruncatedSeries {
        assert_eq!(self.convention, Convention::Ogf, "ordinary convolution needs an OGF");
        let order = self.order();
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = BigInt::zero();
                for k in 0..=n.min(p.degree().unwrap_or(0)) {
                    let pk = p.coeff(k);
                    if !pk.is_zero() {
                        acc += pk * &self.coeffs[n - k];
                    }
                }
                acc
            })
            .collect();
        TruncatedSeries { convention: Convention::Ogf, coeffs }
    }

    /// Low-to-high decimal coefficient strings (the wire form).
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }
}

/// Coefficients of `N(x) / (1 - x^m)` up to `order`, by periodic replication
/// of the numerator's coefficients with step `m`.
pub fn rational_expand(n_poly: &IntPolynomial, m: usize, order: usize) -> TruncatedSeries {
    assert!(m >= 1, "period must be positive");
    let deg = match n_poly.degree() {
        Some(d) => d,
        None => return TruncatedSeries::new(Convention::Ogf, vec![BigInt::zero(); order + 1]),
    };
    let coeffs = (0..=order)
        .map(|s| {
            let mut acc = BigInt::zero();
            let mut idx = s;
            loop {
                if idx <= deg {
                    acc += n_poly.coeff(idx);
                }
                if idx < m {
                    break;
                }
                idx -= m;
            }
            acc
        })
        .collect();
    TruncatedSeries { convention: Convention::Ogf, coeffs }
}

/// Rows 0..=n of Pascal's triangle.
pub fn pascal_triangle(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    rows.push(vec![BigInt::one()]);
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = Vec::with_capacity(i + 1);
        row.push(BigInt::one());
        for k in 1..i {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigInt::one());
        rows.push(row);
    }
    rows
}

/// `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n! / (k_1! ··· k_j!)` for `Σ k_i = n`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let mut acc = BigInt::one();
    let mut rem: usize = parts.iter().map(|&p| p as usize).sum();
    for &p in parts {
        acc *= binomial(rem, p as usize);
        rem -= p as usize;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    fn series_i64(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn mul_telescopes_geometric() {
        let p = poly(&[1, -1]).mul(&poly(&[1, 1, 1, 1]));
        assert_eq!(p, poly(&[1, 0, 0, 0, -1]));
    }

    #[test]
    fn mul_cyclotomic_product() {
        // (1+x+x^2+x^3+x^4)(1-x+x^2) = 1+x^2+x^3+x^4+x^6
        let p = poly(&[1, 1, 1, 1, 1]).mul(&poly(&[1, -1, 1]));
        assert_eq!(p, poly(&[1, 0, 1, 1, 1, 0, 1]));
    }

    #[test]
    fn mul_three_factors() {
        let p = poly(&[1, -1]).mul(&poly(&[1, 1])).mul(&poly(&[1, 0, 0, -1, 0, 0, 1]));
        assert_eq!(p, poly(&[1, 0, -1, -1, 0, 1, 1, 0, -1]));
    }

    #[test]
    fn div_exact_basic() {
        let q = poly(&[1, 0, 0, 0, -1]).div_exact(&poly(&[1, -1])).unwrap();
        assert_eq!(q, poly(&[1, 1, 1, 1]));
    }

    #[test]
    fn div_exact_twelfth() {
        let num = IntPolynomial::one_minus_x_pow(12);
        let q = num.div_exact(&poly(&[1, 0, 1, 1, 0, 1])).unwrap();
        assert_eq!(q, poly(&[1, 0, -1, -1, 1, 1, 0, -1]));
    }

    #[test]
    fn div_exact_rejects_remainder() {
        let err = IntPolynomial::one_minus_x_pow(3).div_exact(&poly(&[1, 0, -1]));
        assert_eq!(err, Err(SeriesError::NotDivisible));
    }

    #[test]
    fn div_exact_round_trips_with_mul() {
        let a = poly(&[1, -3, 0, 2]);
        let b = poly(&[2, 0, 1, 1]);
        assert_eq!(a.mul(&b).div_exact(&b), Ok(a.clone()));
        assert_eq!(a.mul(&b).div_exact(&a), Ok(b));
    }

    #[test]
    fn ogf_inverse_geometric() {
        let g = poly(&[1, -1]).ogf_inverse(5).unwrap();
        assert_eq!(series_i64(&g), vec![1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn ogf_inverse_period_four() {
        let g = poly(&[1, -1, 1, -1]).ogf_inverse(9).unwrap();
        assert_eq!(series_i64(&g), vec![1, 1, 0, 0, 1, 1, 0, 0, 1, 1]);
        // same thing by long division: (1+x)/(1-x^4)
        let alt = rational_expand(&poly(&[1, 1]), 4, 9);
        assert_eq!(g, alt);
    }

    #[test]
    fn ogf_inverse_alternating() {
        let g = poly(&[1, 1]).ogf_inverse(3).unwrap();
        assert_eq!(series_i64(&g), vec![1, -1, 1, -1]);
    }

    #[test]
    fn ogf_inverse_requires_unit() {
        assert_eq!(poly(&[2, 1]).ogf_inverse(3), Err(SeriesError::NonUnitConstantTerm));
    }

    #[test]
    fn egf_inverse_alternating_partial_sum() {
        let mut cs = vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1), BigInt::from(-1)];
        cs.resize(14, BigInt::zero());
        let c = TruncatedSeries::new(Convention::Egf, cs);
        let u = c.egf_inverse().unwrap();
        assert_eq!(
            series_i64(&u),
            vec![1, 1, 1, 1, 2, 10, 50, 210, 840, 4200, 29400, 231000, 1755600, 13213200]
        );
    }

    #[test]
    fn egf_inverse_counts_factorials() {
        let c = TruncatedSeries::from_polynomial(Convention::Egf, &poly(&[1, -1]), 6);
        let u = c.egf_inverse().unwrap();
        assert_eq!(series_i64(&u), vec![1, 1, 2, 6, 24, 120, 720]);
    }

    #[test]
    fn egf_inverse_short_truncation_stays_one() {
        // alternating signs truncated below 2m-1 behave like the full partial sum
        let c = TruncatedSeries::from_polynomial(Convention::Egf, &poly(&[1, -1, 1, -1, 1, -1]), 5);
        let u = c.egf_inverse().unwrap();
        assert_eq!(series_i64(&u), vec![1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn egf_inverse_requires_unit() {
        let c = TruncatedSeries::from_polynomial(Convention::Egf, &poly(&[0, 1]), 3);
        assert_eq!(c.egf_inverse(), Err(SeriesError::NonUnitConstantTerm));
    }

    #[test]
    fn binomial_mul_exp_cancellation() {
        let ones = TruncatedSeries::new(Convention::Egf, vec![BigInt::one(); 8]);
        let alt = TruncatedSeries::new(
            Convention::Egf,
            (0..8).map(|n| if n % 2 == 0 { BigInt::one() } else { -BigInt::one() }).collect(),
        );
        let prod = ones.binomial_mul(&alt).unwrap();
        assert_eq!(prod, TruncatedSeries::one(Convention::Egf, 7));
    }

    #[test]
    fn binomial_mul_square() {
        let a = TruncatedSeries::from_polynomial(Convention::Egf, &poly(&[1, 1]), 3);
        let sq = a.binomial_mul(&a).unwrap();
        assert_eq!(series_i64(&sq), vec![1, 2, 2, 0]);
    }

    #[test]
    fn binomial_mul_inverse_round_trip() {
        let mut cs = vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1), BigInt::from(-1)];
        cs.resize(14, BigInt::zero());
        let c = TruncatedSeries::new(Convention::Egf, cs);
        let u = c.egf_inverse().unwrap();
        assert_eq!(c.binomial_mul(&u).unwrap(), TruncatedSeries::one(Convention::Egf, 13));
        assert_eq!(u.binomial_mul(&c).unwrap(), TruncatedSeries::one(Convention::Egf, 13));
    }

    #[test]
    fn binomial_mul_order_mismatch() {
        let a = TruncatedSeries::one(Convention::Egf, 3);
        let b = TruncatedSeries::one(Convention::Egf, 4);
        assert_eq!(a.binomial_mul(&b), Err(SeriesError::OrderMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn rational_expand_twelve() {
        let s = rational_expand(&poly(&[1, 0, 1, 1, 0, 1]), 12, 14);
        assert_eq!(series_i64(&s), vec![1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1]);
    }

    #[test]
    fn rational_expand_all_ones() {
        let s = rational_expand(&IntPolynomial::one(), 1, 4);
        assert_eq!(series_i64(&s), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn rational_expand_thirty() {
        let s = rational_expand(&poly(&[1, 0, 1, 1, 1, 0, 1]), 30, 31);
        let want: Vec<i64> =
            (0..=31).map(|i| i64::from([0usize, 2, 3, 4, 6, 30].contains(&i))).collect();
        assert_eq!(series_i64(&s), want);
    }

    #[test]
    fn rational_expand_agrees_with_ogf_inverse() {
        // N/(1-x^m) == 1/a whenever a = (1-x^m)/N exactly
        for (n_coeffs, m) in [
            (vec![1i64, 0, 1, 1, 0, 1], 12usize),
            (vec![1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1], 18),
            (vec![1, 0, 1, 1, 1, 0, 1], 30),
        ] {
            let n_poly = poly(&n_coeffs);
            let a = IntPolynomial::one_minus_x_pow(m).div_exact(&n_poly).unwrap();
            let d = 3 * m;
            assert_eq!(rational_expand(&n_poly, m, d), a.ogf_inverse(d).unwrap());
        }
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(IntPolynomial::zero().degree(), None);
        assert_eq!(poly(&[0, 0, 0]), IntPolynomial::zero());
    }

    #[test]
    fn display_readable() {
        assert_eq!(poly(&[1, 0, -1, -1, 0, 2]).to_string(), "1 - x^2 - x^3 + 2*x^5");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn coeff_strings_round_trip() {
        let p = poly(&[1, 0, -13213200]);
        let s = p.coeff_strings();
        assert_eq!(s, vec!["1", "0", "-13213200"]);
        assert_eq!(IntPolynomial::from_coeff_strings(&s).unwrap(), p);
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[2, 1]), BigInt::from(3));
        assert_eq!(multinomial(&[2, 3, 1]), BigInt::from(60));
        assert_eq!(multinomial(&[4]), BigInt::one());
    }
}

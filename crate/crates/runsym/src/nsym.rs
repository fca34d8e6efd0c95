//! Truncated noncommutative symmetric functions in the complete (h) and
//! ribbon (r) bases, indexed by compositions.
//!
//! The algebra is free on the complete functions, so multiplication in the
//! h basis is concatenation of index compositions. Basis change runs over
//! descent subsets: a word split into weakly increasing blocks of sizes `K`
//! has descent set contained in `D(K)`, giving `H_K = Σ_{D(L) ⊆ D(K)} R_L`
//! and its inclusion-exclusion inverse. Everything is truncated at a fixed
//! degree; terms above it are dropped.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::RunClassSpec;
use crate::series::{binomial, multinomial, Convention, IntPolynomial, TruncatedSeries};

/// A finite (possibly empty) sequence of positive integers.
///
/// Compositions of `n` are in bijection with subsets of `{1, .., n-1}`
/// through the descent set of partial sums.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Panics if any part is zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "composition parts must be positive");
        Composition { parts }
    }

    pub fn try_new(parts: Vec<u32>) -> Result<Self, String> {
        if parts.contains(&0) {
            return Err("composition parts must be positive".into());
        }
        Ok(Composition { parts })
    }

    pub fn empty() -> Self {
        Composition { parts: Vec::new() }
    }

    /// Single-part composition `(n)` for `n >= 1`, or empty for `n = 0`.
    pub fn single(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Descent set `{L_1, L_1+L_2, ...}` as positions in `{1, .., n-1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.len().saturating_sub(1));
        let mut acc = 0usize;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    /// Descent set as a bitmask with bit `i-1` for position `i`.
    pub fn descent_mask(&self) -> u64 {
        assert!(self.size() <= 64, "descent bitmask supports sizes up to 64");
        let mut mask = 0u64;
        let mut acc = 0usize;
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p as usize;
            mask |= 1 << (acc - 1);
        }
        mask
    }

    /// Inverse of [`Composition::descent_mask`] for compositions of `n`.
    pub fn from_descent_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64);
        if n == 0 {
            assert_eq!(mask, 0);
            return Self::empty();
        }
        assert!(mask < 1u64 << (n - 1).min(63), "descents must lie in 1..n");
        let mut parts = Vec::new();
        let mut prev = 0usize;
        for pos in 1..n {
            if mask >> (pos - 1) & 1 == 1 {
                parts.push((pos - prev) as u32);
                prev = pos;
            }
        }
        parts.push((n - prev) as u32);
        Composition { parts }
    }

    pub fn from_descent_set(n: usize, descents: &[usize]) -> Self {
        let mut mask = 0u64;
        for &d in descents {
            assert!(d >= 1 && d < n);
            mask |= 1 << (d - 1);
        }
        Self::from_descent_mask(n, mask)
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size().cmp(&other.size()).then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All `2^{n-1}` compositions of `n`, by descent mask.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    assert!(n <= 20, "composition enumeration is capped at size 20");
    if n == 0 {
        return vec![Composition::empty()];
    }
    (0u64..1 << (n - 1)).map(|mask| Composition::from_descent_mask(n, mask)).collect()
}

/// Compositions of `n` whose parts all come from `allowed` (ascending list).
pub fn compositions_with_parts(n: usize, allowed: &[usize]) -> Vec<Composition> {
    fn rec(n: usize, allowed: &[usize], prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition::new(prefix.clone()));
            return;
        }
        for &p in allowed {
            if p > n {
                break;
            }
            prefix.push(p as u32);
            rec(n - p, allowed, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, allowed, &mut Vec::new(), &mut out);
    out
}

/// Basis tag of an [`NSymElement`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    /// Complete homogeneous basis, indexed by compositions by concatenation.
    H,
    /// Ribbon basis.
    R,
}

/// Errors from noncommutative symmetric function operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NsymError {
    OrderMismatch { left: usize, right: usize },
    BasisMismatch,
    NonUnitConstantTerm,
    /// A run-class certificate check met a coefficient it cannot explain.
    CheckFailed { composition: Composition, coefficient: BigInt },
}

impl fmt::Display for NsymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NsymError::OrderMismatch { left, right } => {
                write!(f, "truncation orders differ: {left} vs {right}")
            }
            NsymError::BasisMismatch => write!(f, "operands use different bases"),
            NsymError::NonUnitConstantTerm => write!(f, "empty-composition coefficient must be 1"),
            NsymError::CheckFailed { composition, coefficient } => {
                write!(f, "unexpected ribbon term {coefficient} * r_{composition}")
            }
        }
    }
}

impl std::error::Error for NsymError {}

/// A graded, truncated integer linear combination of compositions in one
/// basis. Zero coefficients are never stored; all keys have size at most
/// the truncation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "NSymWire", into = "NSymWire")]
pub struct NSymElement {
    basis: Basis,
    order: usize,
    terms: BTreeMap<Composition, BigInt>,
}

impl NSymElement {
    pub fn zero(basis: Basis, order: usize) -> Self {
        NSymElement { basis, order, terms: BTreeMap::new() }
    }

    pub fn one(basis: Basis, order: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Composition::empty(), BigInt::one());
        NSymElement { basis, order, terms }
    }

    /// Sums terms, drops zeros, and panics on a key larger than the order.
    pub fn from_terms(
        basis: Basis,
        order: usize,
        terms: impl IntoIterator<Item = (Composition, BigInt)>,
    ) -> Self {
        let mut map: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for (comp, coeff) in terms {
            assert!(comp.size() <= order, "term of size {} above order {order}", comp.size());
            let entry = map.entry(comp).or_insert_with(BigInt::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        NSymElement { basis, order, terms: map }
    }

    /// `Σ p_n h_n` truncated at `order`.
    pub fn h_from_polynomial(p: &IntPolynomial, order: usize) -> Self {
        let top = p.degree().unwrap_or(0).min(order);
        Self::from_terms(
            Basis::H,
            order,
            (0..=top).filter_map(|n| {
                let c = p.coeff(n);
                (!c.is_zero()).then(|| (Composition::single(n as u32), c))
            }),
        )
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, comp: &Composition) -> BigInt {
        self.terms.get(comp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Product in the h basis: bilinear extension of concatenation, with
    /// terms above the truncation order dropped.
    pub fn h_mul(&self, other: &Self) -> Result<Self, NsymError> {
        if self.basis != Basis::H || other.basis != Basis::H {
            return Err(NsymError::BasisMismatch);
        }
        if self.order != other.order {
            return Err(NsymError::OrderMismatch { left: self.order, right: other.order });
        }
        let mut terms: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for (k, a) in &self.terms {
            for (m, b) in &other.terms {
                if k.size() + m.size() > self.order {
                    continue;
                }
                let entry = terms.entry(k.concat(m)).or_insert_with(BigInt::zero);
                *entry += a * b;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(NSymElement { basis: Basis::H, order: self.order, terms })
    }

    /// Two-sided inverse modulo degree `> order`, by graded recursion
    /// `g_n = -Σ_{k=1}^{n} f_k g_{n-k}` (free algebra, so the one-sided
    /// graded inverse is automatically two-sided).
    pub fn h_series_inverse(&self, order: usize) -> Result<Self, NsymError> {
        if self.basis != Basis::H {
            return Err(NsymError::BasisMismatch);
        }
        if !self.coeff(&Composition::empty()).is_one() {
            return Err(NsymError::NonUnitConstantTerm);
        }
        // bucket f's terms by grade
        let mut f_by_grade: Vec<Vec<(&Composition, &BigInt)>> = vec![Vec::new(); order + 1];
        for (comp, coeff) in &self.terms {
            let n = comp.size();
            if (1..=order).contains(&n) {
                f_by_grade[n].push((comp, coeff));
            }
        }
        let mut g_by_grade: Vec<Vec<(Composition, BigInt)>> = Vec::with_capacity(order + 1);
        g_by_grade.push(vec![(Composition::empty(), BigInt::one())]);
        for n in 1..=order {
            let mut acc: BTreeMap<Composition, BigInt> = BTreeMap::new();
            for k in 1..=n {
                for (fc, fv) in &f_by_grade[k] {
                    for (gc, gv) in &g_by_grade[n - k] {
                        let entry = acc.entry(fc.concat(gc)).or_insert_with(BigInt::zero);
                        *entry -= *fv * gv;
                    }
                }
            }
            g_by_grade.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        }
        Ok(Self::from_terms(Basis::H, order, g_by_grade.into_iter().flatten()))
    }

    /// Change of basis `H_K = Σ_{D(L) ⊆ D(K)} R_L`.
    pub fn h_to_ribbon(&self) -> Self {
        assert_eq!(self.basis, Basis::H, "h_to_ribbon takes an h-basis element");
        let mut terms: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for (comp, coeff) in &self.terms {
            let n = comp.size();
            let mask = comp.descent_mask();
            let mut sub = mask;
            loop {
                let l = Composition::from_descent_mask(n, sub);
                let entry = terms.entry(l).or_insert_with(BigInt::zero);
                *entry += coeff;
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        NSymElement { basis: Basis::R, order: self.order, terms }
    }

    /// Inverse change of basis
    /// `R_L = Σ_{D(K) ⊆ D(L)} (-1)^{|D(L)| - |D(K)|} H_K`.
    pub fn ribbon_to_h(&self) -> Self {
        assert_eq!(self.basis, Basis::R, "ribbon_to_h takes an r-basis element");
        let mut terms: BTreeMap<Composition, BigInt> = BTreeMap::new();
        for (comp, coeff) in &self.terms {
            let n = comp.size();
            let mask = comp.descent_mask();
            let bits = mask.count_ones();
            let mut sub = mask;
            loop {
                let k = Composition::from_descent_mask(n, sub);
                let entry = terms.entry(k).or_insert_with(BigInt::zero);
                if (bits - sub.count_ones()) % 2 == 0 {
                    *entry += coeff;
                } else {
                    *entry -= coeff;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        NSymElement { basis: Basis::H, order: self.order, terms }
    }

    /// The homomorphism to exponential generating functions sending `h_n`
    /// to `x^n/n!`; `H_K` contributes the multinomial coefficient of its
    /// parts at `x^{|K|}/|K|!`, and `r_L` the count of permutations with
    /// run type `L`.
    pub fn psi_egf(&self) -> TruncatedSeries {
        let h = match self.basis {
            Basis::H => self.clone(),
            Basis::R => self.ribbon_to_h(),
        };
        let mut coeffs = vec![BigInt::zero(); h.order + 1];
        for (comp, coeff) in &h.terms {
            coeffs[comp.size()] += coeff * multinomial(comp.parts());
        }
        TruncatedSeries::new(Convention::Egf, coeffs)
    }

    /// Sets the first `q` variables to 1 and the rest to 0, turning the
    /// element into an ordinary generating function for word counts:
    /// `h_n` maps to `C(n+q-1, n) x^n`.
    pub fn specialize_q(&self, q: u32) -> TruncatedSeries {
        assert!(q >= 1, "alphabet size must be positive");
        let h = match self.basis {
            Basis::H => self.clone(),
            Basis::R => self.ribbon_to_h(),
        };
        let mut coeffs = vec![BigInt::zero(); h.order + 1];
        for (comp, coeff) in &h.terms {
            let mut weight = coeff.clone();
            for &p in comp.parts() {
                weight *= binomial((p + q - 1) as usize, p as usize);
            }
            coeffs[comp.size()] += weight;
        }
        TruncatedSeries::new(Convention::Ogf, coeffs)
    }
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    composition: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct NSymWire {
    basis: Basis,
    order: usize,
    terms: Vec<TermWire>,
}

impl From<NSymElement> for NSymWire {
    fn from(e: NSymElement) -> Self {
        NSymWire {
            basis: e.basis,
            order: e.order,
            terms: e
                .terms
                .into_iter()
                .map(|(c, v)| TermWire { composition: c.parts, coeff: v.to_string() })
                .collect(),
        }
    }
}

impl TryFrom<NSymWire> for NSymElement {
    type Error = String;

    fn try_from(w: NSymWire) -> Result<Self, String> {
        let mut terms = BTreeMap::new();
        for t in w.terms {
            let comp = Composition::try_new(t.composition)?;
            if comp.size() > w.order {
                return Err(format!("term of size {} above order {}", comp.size(), w.order));
            }
            let coeff: BigInt =
                t.coeff.parse().map_err(|_| format!("invalid coefficient {:?}", t.coeff))?;
            if coeff.is_zero() {
                return Err("zero coefficients are not stored".into());
            }
            if terms.insert(comp, coeff).is_some() {
                return Err("duplicate composition".into());
            }
        }
        Ok(NSymElement { basis: w.basis, order: w.order, terms })
    }
}

/// Support of a verified run-theorem inversion: the inverse of
/// `Σ a_n h_n` in the ribbon basis has coefficient 1 exactly on these
/// compositions (all parts allowed by the run class), 0 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunTheoremCertificate {
    pub order: usize,
    pub support: Vec<Composition>,
}

/// Inverts `Σ a_n h_n` for the classified polynomial, converts to the
/// ribbon basis, and verifies the 0/1 support is exactly the compositions
/// with every part allowed. Returns the support as a certificate.
pub fn run_theorem_check(
    spec: &RunClassSpec,
    order: usize,
) -> Result<RunTheoremCertificate, NsymError> {
    assert!(order <= 16, "ribbon support grows as 2^order; stay at or below 16");
    let f = NSymElement::h_from_polynomial(&spec.a, order);
    let inverse = f.h_series_inverse(order)?;
    let ribbon = inverse.h_to_ribbon();

    for (comp, coeff) in ribbon.terms() {
        let allowed = comp.parts().iter().all(|&p| spec.accepts_run_length(p as usize));
        if !coeff.is_one() || !allowed {
            return Err(NsymError::CheckFailed {
                composition: comp.clone(),
                coefficient: coeff.clone(),
            });
        }
    }
    let allowed = spec.allowed_lengths_up_to(order);
    for n in 0..=order {
        for comp in compositions_with_parts(n, &allowed) {
            if !ribbon.coeff(&comp).is_one() {
                return Err(NsymError::CheckFailed {
                    composition: comp,
                    coefficient: BigInt::zero(),
                });
            }
        }
    }
    Ok(RunTheoremCertificate { order, support: ribbon.terms.into_keys().collect() })
}

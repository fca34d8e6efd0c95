//! Brute-force ground truth: exhaustive enumeration of permutations and
//! words, run-type statistics, and counts of objects with restricted run
//! lengths. Every generating-function claim in this crate is checked
//! against these oracles.
//!
//! Counting functions compute their answer by two independent routes and
//! panic if the routes disagree. Enumeration can be partitioned across
//! threads by the first symbol; set `RUNSYM_THREADS` to use more than one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclotomic::RunClassSpec;
use crate::nsym::{compositions_of, Composition};
use crate::series::multinomial;

/// Permutations of `[n]` are enumerated exhaustively only up to this size.
pub const PERM_ENUM_CAP: usize = 10;
/// Words are enumerated exhaustively only while `q^n` stays below this.
pub const WORD_ENUM_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    NotAPermutation,
    CapExceeded { requested: usize, cap: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NotAPermutation => write!(f, "input is not a permutation of 1..=n"),
            OracleError::CapExceeded { requested, cap } => {
                write!(f, "size {requested} exceeds the brute-force cap {cap}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// A decidable predicate on run lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunPredicate {
    /// Accepts `s >= 1` with `s mod modulus` in `residues` (the set `T*`).
    Residue { modulus: usize, residues: BTreeSet<usize> },
    /// Accepts exactly the listed lengths.
    Explicit { allowed: BTreeSet<usize> },
    /// Accepts every length.
    All,
}

impl RunPredicate {
    pub fn residue(modulus: usize, residues: impl IntoIterator<Item = usize>) -> Self {
        assert!(modulus >= 1);
        let residues: BTreeSet<usize> = residues.into_iter().collect();
        assert!(residues.iter().all(|&r| r < modulus), "residues must be reduced mod modulus");
        RunPredicate::Residue { modulus, residues }
    }

    pub fn explicit(allowed: impl IntoIterator<Item = usize>) -> Self {
        RunPredicate::Explicit { allowed: allowed.into_iter().collect() }
    }

    /// The residue predicate for a classified run class (`T*`).
    pub fn from_spec(spec: &RunClassSpec) -> Self {
        Self::residue(spec.m, spec.t.iter().copied())
    }

    pub fn accepts(&self, len: usize) -> bool {
        match self {
            RunPredicate::Residue { modulus, residues } => {
                len >= 1 && residues.contains(&(len % modulus))
            }
            RunPredicate::Explicit { allowed } => allowed.contains(&len),
            RunPredicate::All => true,
        }
    }
}

/// Number of enumeration threads, from `RUNSYM_THREADS` (default 1).
pub fn thread_count() -> usize {
    std::env::var("RUNSYM_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

/// Lengths of the maximal increasing runs of a permutation of `[n]`.
pub fn run_type(perm: &[usize]) -> Result<Composition, OracleError> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &v in perm {
        if v < 1 || v > n || seen[v - 1] {
            return Err(OracleError::NotAPermutation);
        }
        seen[v - 1] = true;
    }
    Ok(increasing_run_type(perm))
}

fn increasing_run_type(seq: &[usize]) -> Composition {
    let mut parts = Vec::new();
    let mut cur = 0u32;
    for (i, &v) in seq.iter().enumerate() {
        if i > 0 && v < seq[i - 1] {
            parts.push(cur);
            cur = 0;
        }
        cur += 1;
    }
    if cur > 0 {
        parts.push(cur);
    }
    Composition::new(parts)
}

/// Lengths of the maximal weakly increasing runs of a word.
pub fn weak_run_type(word: &[u32]) -> Composition {
    let mut parts = Vec::new();
    let mut cur = 0u32;
    for (i, &v) in word.iter().enumerate() {
        if i > 0 && v < word[i - 1] {
            parts.push(cur);
            cur = 0;
        }
        cur += 1;
    }
    if cur > 0 {
        parts.push(cur);
    }
    Composition::new(parts)
}

/// Walks all `n!` permutations of `[n]`, counting those accepted.
/// Partitioned across threads by the first value.
fn count_perms_by<F: Fn(&[usize]) -> bool + Sync>(n: usize, accept: F) -> u64 {
    fn extend<F: Fn(&[usize]) -> bool>(
        buf: &mut Vec<usize>,
        used: &mut [bool],
        n: usize,
        accept: &F,
        count: &mut u64,
    ) {
        if buf.len() == n {
            if accept(buf) {
                *count += 1;
            }
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                buf.push(v);
                extend(buf, used, n, accept, count);
                buf.pop();
                used[v - 1] = false;
            }
        }
    }

    fn count_firsts<F: Fn(&[usize]) -> bool>(firsts: &[usize], n: usize, accept: &F) -> u64 {
        let mut count = 0;
        let mut buf = Vec::with_capacity(n);
        let mut used = vec![false; n];
        for &first in firsts {
            used[first - 1] = true;
            buf.push(first);
            extend(&mut buf, &mut used, n, accept, &mut count);
            buf.pop();
            used[first - 1] = false;
        }
        count
    }

    if n == 0 {
        return u64::from(accept(&[]));
    }
    let firsts: Vec<usize> = (1..=n).collect();
    let threads = thread_count().min(n);
    if threads <= 1 {
        return count_firsts(&firsts, n, &accept);
    }
    let chunk = n.div_ceil(threads);
    std::thread::scope(|s| {
        let handles: Vec<_> = firsts
            .chunks(chunk)
            .map(|part| s.spawn(|| count_firsts(part, n, &accept)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("enumeration thread panicked")).sum()
    })
}

/// True when the increasing runs of `perm` are exactly `parts`.
fn runs_match(seq: &[usize], parts: &[u32]) -> bool {
    let mut idx = 0;
    let mut cur = 0u32;
    for (i, &v) in seq.iter().enumerate() {
        if i > 0 && v < seq[i - 1] {
            if idx >= parts.len() || parts[idx] != cur {
                return false;
            }
            idx += 1;
            cur = 0;
        }
        cur += 1;
    }
    if cur > 0 {
        if idx >= parts.len() || parts[idx] != cur {
            return false;
        }
        idx += 1;
    }
    idx == parts.len()
}

/// True when every increasing run length of `seq` is accepted.
fn runs_satisfy(seq: &[usize], pred: &RunPredicate) -> bool {
    let mut cur = 0usize;
    for (i, &v) in seq.iter().enumerate() {
        if i > 0 && v < seq[i - 1] {
            if !pred.accepts(cur) {
                return false;
            }
            cur = 0;
        }
        cur += 1;
    }
    cur == 0 || pred.accepts(cur)
}

/// Number of permutations of `[n]` with run type exactly `l`, by exhaustive
/// enumeration.
pub fn beta_enumeration(l: &Composition) -> Result<BigInt, OracleError> {
    let n = l.size();
    if n > PERM_ENUM_CAP {
        return Err(OracleError::CapExceeded { requested: n, cap: PERM_ENUM_CAP });
    }
    Ok(BigInt::from(count_perms_by(n, |perm| runs_match(perm, l.parts()))))
}

/// Same count by inclusion-exclusion over descent subsets:
/// `β(L) = Σ_{D(K) ⊆ D(L)} (-1)^{|D(L)|-|D(K)|} multinomial(n; K)`.
pub fn beta_inclusion_exclusion(l: &Composition) -> BigInt {
    let n = l.size();
    let mask = l.descent_mask();
    let bits = mask.count_ones();
    let mut acc = BigInt::zero();
    let mut sub = mask;
    loop {
        let k = Composition::from_descent_mask(n, sub);
        let term = multinomial(k.parts());
        if (bits - sub.count_ones()).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    acc
}

/// Number of permutations whose increasing run type is exactly `l`,
/// computed by both routes, which must agree.
pub fn beta(l: &Composition) -> Result<BigInt, OracleError> {
    let by_enum = beta_enumeration(l)?;
    let by_ie = beta_inclusion_exclusion(l);
    assert_eq!(by_enum, by_ie, "oracle disagreement for β{l}");
    Ok(by_enum)
}

/// Run-type histogram over all permutations of `[n]` in one sweep.
pub fn run_type_counts(n: usize) -> Result<BTreeMap<Composition, u64>, OracleError> {
    if n > PERM_ENUM_CAP {
        return Err(OracleError::CapExceeded { requested: n, cap: PERM_ENUM_CAP });
    }
    let mut counts = BTreeMap::new();
    // no pruning here; the mutable map keeps this sequential
    let mut buf = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn extend(
        buf: &mut Vec<usize>,
        used: &mut [bool],
        n: usize,
        counts: &mut BTreeMap<Composition, u64>,
    ) {
        if buf.len() == n {
            *counts.entry(increasing_run_type(buf)).or_insert(0) += 1;
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                buf.push(v);
                extend(buf, used, n, counts);
                buf.pop();
                used[v - 1] = false;
            }
        }
    }
    extend(&mut buf, &mut used, n, &mut counts);
    Ok(counts)
}

/// Number of permutations of `[n]` in which every increasing run length is
/// accepted. Computed by exhaustive enumeration and again as
/// `Σ β(L)` over allowed compositions; the two must agree.
pub fn count_perms_restricted(n: usize, pred: &RunPredicate) -> Result<BigInt, OracleError> {
    if n > PERM_ENUM_CAP {
        return Err(OracleError::CapExceeded { requested: n, cap: PERM_ENUM_CAP });
    }
    let by_enum = BigInt::from(count_perms_by(n, |perm| runs_satisfy(perm, pred)));
    let mut by_beta = BigInt::zero();
    for l in compositions_of(n) {
        if l.parts().iter().all(|&p| pred.accepts(p as usize)) {
            by_beta += beta_inclusion_exclusion(&l);
        }
    }
    assert_eq!(by_enum, by_beta, "oracle disagreement for restricted permutations of [{n}]");
    Ok(by_enum)
}

/// True when every weakly increasing run length of `word` is accepted.
fn word_runs_satisfy(word: &[u32], pred: &RunPredicate) -> bool {
    let mut cur = 0usize;
    for (i, &v) in word.iter().enumerate() {
        if i > 0 && v < word[i - 1] {
            if !pred.accepts(cur) {
                return false;
            }
            cur = 0;
        }
        cur += 1;
    }
    cur == 0 || pred.accepts(cur)
}

/// Counts words of length `n` over `{1..q}` with accepted run lengths by
/// walking all `q^n` words. Partitioned across threads by the first letter.
pub fn count_words_exhaustive(
    n: usize,
    q: u32,
    pred: &RunPredicate,
) -> Result<BigInt, OracleError> {
    let feasible = (q as u64).checked_pow(n as u32).is_some_and(|t| t <= WORD_ENUM_CAP);
    if !feasible {
        return Err(OracleError::CapExceeded { requested: n, cap: max_word_length(q) });
    }
    fn extend(
        buf: &mut Vec<u32>,
        n: usize,
        q: u32,
        pred: &RunPredicate,
        count: &mut u64,
    ) {
        if buf.len() == n {
            if word_runs_satisfy(buf, pred) {
                *count += 1;
            }
            return;
        }
        for v in 1..=q {
            buf.push(v);
            extend(buf, n, q, pred, count);
            buf.pop();
        }
    }
    fn count_firsts(firsts: &[u32], n: usize, q: u32, pred: &RunPredicate) -> u64 {
        let mut count = 0;
        let mut buf = Vec::with_capacity(n);
        for &first in firsts {
            buf.push(first);
            extend(&mut buf, n, q, pred, &mut count);
            buf.pop();
        }
        count
    }

    if n == 0 {
        return Ok(BigInt::from(u64::from(word_runs_satisfy(&[], pred))));
    }
    let firsts: Vec<u32> = (1..=q).collect();
    let threads = thread_count().min(q as usize);
    let count = if threads <= 1 {
        count_firsts(&firsts, n, q, pred)
    } else {
        let chunk = (q as usize).div_ceil(threads);
        std::thread::scope(|s| {
            let handles: Vec<_> = firsts
                .chunks(chunk)
                .map(|part| s.spawn(|| count_firsts(part, n, q, pred)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("enumeration thread panicked")).sum()
        })
    };
    Ok(BigInt::from(count))
}

/// Counts the same words by dynamic programming on
/// (last letter, current run length mod `modulus`); runs are checked at
/// their boundaries, which is sound exactly because the predicate is a
/// residue condition. Scales to lengths far beyond exhaustive enumeration.
pub fn count_words_dp(n: usize, q: u32, modulus: usize, residues: &BTreeSet<usize>) -> BigInt {
    if n == 0 {
        return BigInt::from(1);
    }
    let q = q as usize;
    // state[(letter - 1) * modulus + run length % modulus]
    let mut state = vec![BigInt::zero(); q * modulus];
    for letter in 0..q {
        state[letter * modulus + 1 % modulus] += 1;
    }
    for _ in 2..=n {
        let mut next = vec![BigInt::zero(); q * modulus];
        for letter in 0..q {
            for res in 0..modulus {
                let c = &state[letter * modulus + res];
                if c.is_zero() {
                    continue;
                }
                for next_letter in 0..q {
                    if next_letter >= letter {
                        // run continues
                        next[next_letter * modulus + (res + 1) % modulus] += c;
                    } else if residues.contains(&res) {
                        // run of length ≡ res (mod m) closes here
                        next[next_letter * modulus + 1 % modulus] += c;
                    }
                }
            }
        }
        state = next;
    }
    let mut total = BigInt::zero();
    for letter in 0..q {
        for res in residues {
            total += &state[letter * modulus + res];
        }
    }
    total
}

/// Number of words of length `n` over `{1..q}` whose weakly increasing run
/// lengths all satisfy `pred`. Uses exhaustive enumeration when feasible
/// and dynamic programming for residue predicates; where both run they must
/// agree.
pub fn count_words_restricted(n: usize, q: u32, pred: &RunPredicate) -> Result<BigInt, OracleError> {
    assert!(q >= 1, "alphabet must be nonempty");
    let exhaustive_feasible =
        (q as u64).checked_pow(n as u32).is_some_and(|t| t <= WORD_ENUM_CAP);
    match (pred, exhaustive_feasible) {
        (RunPredicate::Residue { modulus, residues }, true) => {
            let by_enum = count_words_exhaustive(n, q, pred)?;
            let by_dp = count_words_dp(n, q, *modulus, residues);
            assert_eq!(by_enum, by_dp, "oracle disagreement for words of length {n} over {q}");
            Ok(by_enum)
        }
        (RunPredicate::Residue { modulus, residues }, false) => {
            Ok(count_words_dp(n, q, *modulus, residues))
        }
        (_, true) => count_words_exhaustive(n, q, pred),
        (_, false) => Err(OracleError::CapExceeded { requested: n, cap: max_word_length(q) }),
    }
}

/// Largest `n` with `q^n` within the exhaustive enumeration budget.
fn max_word_length(q: u32) -> usize {
    if q <= 1 {
        return usize::MAX;
    }
    (1..)
        .take_while(|&k| (q as u64).checked_pow(k).is_some_and(|t| t <= WORD_ENUM_CAP))
        .last()
        .unwrap_or(0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn run_type_example() {
        // the 132576 pattern: runs 13, 257, 6; standardized onto [6]
        assert_eq!(run_type(&[1, 3, 2, 4, 6, 5]).unwrap(), comp(&[2, 3, 1]));
        assert_eq!(weak_run_type(&[1, 3, 2, 5, 7, 6]), comp(&[2, 3, 1]));
        assert_eq!(run_type(&[1, 2, 3, 4]).unwrap(), comp(&[4]));
        assert_eq!(run_type(&[4, 3, 2, 1]).unwrap(), comp(&[1, 1, 1, 1]));
        assert_eq!(run_type(&[]).unwrap(), Composition::empty());
        assert_eq!(run_type(&[1]).unwrap(), comp(&[1]));
    }

    #[test]
    fn run_type_rejects_non_permutations() {
        assert_eq!(run_type(&[1, 1]), Err(OracleError::NotAPermutation));
        assert_eq!(run_type(&[0, 1]), Err(OracleError::NotAPermutation));
        assert_eq!(run_type(&[1, 3]), Err(OracleError::NotAPermutation));
    }

    #[test]
    fn weak_runs_differ_from_strict() {
        assert_eq!(weak_run_type(&[1, 1, 2, 1]), comp(&[3, 1]));
        assert_eq!(weak_run_type(&[2, 1]), comp(&[1, 1]));
    }

    #[test]
    fn beta_single_run() {
        assert_eq!(beta(&comp(&[6])).unwrap(), BigInt::one());
        assert_eq!(beta(&Composition::empty()).unwrap(), BigInt::one());
    }

    #[test]
    fn beta_small_values() {
        assert_eq!(beta(&comp(&[1, 4])).unwrap(), BigInt::from(4));
        assert_eq!(beta(&comp(&[2, 3, 1])).unwrap(), BigInt::from(40));
        assert_eq!(beta(&comp(&[2, 2])).unwrap(), BigInt::from(5));
    }

    #[test]
    fn beta_cap() {
        let err = beta(&comp(&[11])).unwrap_err();
        assert_eq!(err, OracleError::CapExceeded { requested: 11, cap: PERM_ENUM_CAP });
    }

    #[test]
    fn beta_sums_to_factorial() {
        let mut factorial = BigInt::one();
        for n in 0..=7usize {
            if n > 0 {
                factorial *= n;
            }
            let total: BigInt =
                compositions_of(n).iter().map(beta_inclusion_exclusion).sum();
            assert_eq!(total, factorial, "n = {n}");
        }
    }

    #[test]
    fn histogram_matches_beta() {
        let counts = run_type_counts(6).unwrap();
        assert_eq!(counts.values().sum::<u64>(), 720);
        assert_eq!(counts[&comp(&[2, 3, 1])], 40);
        for (l, &c) in &counts {
            assert_eq!(BigInt::from(c), beta_inclusion_exclusion(l), "L = {l}");
        }
    }

    #[test]
    fn restricted_counts_match_table() {
        let pred = RunPredicate::residue(4, [0, 1]);
        let want = [1u64, 1, 1, 1, 2, 10, 50, 210];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(count_perms_restricted(n, &pred).unwrap(), BigInt::from(*w), "n = {n}");
        }
    }

    #[test]
    fn below_the_allowed_horizon_only_the_decreasing_permutation_survives() {
        // runs congruent to 0 or 1 mod 6: below length 6 only runs of
        // length 1 qualify
        let pred = RunPredicate::residue(6, [0, 1]);
        for n in 0..=5usize {
            assert_eq!(count_perms_restricted(n, &pred).unwrap(), BigInt::one(), "n = {n}");
        }
    }

    #[test]
    fn restricted_counts_all() {
        assert_eq!(count_perms_restricted(3, &RunPredicate::All).unwrap(), BigInt::from(6));
        assert_eq!(count_perms_restricted(0, &RunPredicate::All).unwrap(), BigInt::one());
    }

    #[test]
    fn word_counts_small() {
        let pred = RunPredicate::residue(4, [0, 1]);
        assert_eq!(count_words_restricted(2, 2, &pred).unwrap(), BigInt::one()); // only "21"
        assert_eq!(count_words_restricted(3, 2, &pred).unwrap(), BigInt::zero());
        assert_eq!(count_words_restricted(2, 2, &RunPredicate::All).unwrap(), BigInt::from(4));
    }

    #[test]
    fn word_dp_matches_exhaustive() {
        for (m, t) in [(4usize, vec![0, 1]), (12, vec![0, 2, 3, 5]), (1, vec![0])] {
            let pred = RunPredicate::residue(m, t.clone());
            let residues: BTreeSet<usize> = t.into_iter().collect();
            for q in 1..=3u32 {
                for n in 0..=8usize {
                    let a = count_words_exhaustive(n, q, &pred).unwrap();
                    let b = count_words_dp(n, q, m, &residues);
                    assert_eq!(a, b, "m={m} q={q} n={n}");
                }
            }
        }
    }

    #[test]
    fn word_dp_scales_past_enumeration() {
        // every length-40 word over 2 letters decomposes into weak runs; with
        // all residues allowed the count must be 2^40
        let all: BTreeSet<usize> = [0].into_iter().collect();
        let total = count_words_dp(40, 2, 1, &all);
        assert_eq!(total, BigInt::from(1u64 << 40));
    }

    #[test]
    fn explicit_predicate() {
        let pred = RunPredicate::explicit([2, 5]);
        assert!(pred.accepts(2) && pred.accepts(5));
        assert!(!pred.accepts(1) && !pred.accepts(7));
    }
}

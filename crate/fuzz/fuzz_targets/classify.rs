#![no_main]

use libfuzzer_sys::fuzz_target;
use runsym::cyclotomic::{classify_reciprocal, detect_period, CycloError};
use runsym::IntPolynomial;

// Drives the whole decision procedure on arbitrary small polynomials with
// constant term 1: classification must agree with bounded period detection
// and with direct expansion, and accepted specs must self-validate.
fuzz_target!(|data: &[u8]| {
    let mut coeffs = vec![1i64];
    coeffs.extend(data.iter().take(12).map(|&b| i64::from(b % 9) - 4));
    let a = IntPolynomial::from_i64s(&coeffs);
    if a.degree().is_none_or(|d| d == 0) {
        return;
    }

    let detected = detect_period(&IntPolynomial::one(), &a, 1);
    let bounded_zero_one = detected.as_ref().map(|p| p.is_zero_one()).unwrap_or(false);

    match classify_reciprocal(&a) {
        Ok(spec) => {
            spec.validate().expect("accepted specs satisfy their invariants");
            assert!(bounded_zero_one, "period detection must confirm an accepted spec");
            let series = a.ogf_inverse(3 * spec.m - 1).expect("constant term is 1");
            assert_eq!(series, spec.reciprocal_prefix(3 * spec.m));
        }
        Err(CycloError::NotZeroOne(_)) => {
            assert!(!bounded_zero_one, "rejected input cannot have a bounded 0/1 reciprocal");
        }
        Err(CycloError::ConstantPolynomial) | Err(CycloError::NonUnitConstantTerm) => {
            unreachable!("inputs are nonconstant with constant term 1")
        }
        Err(e) => panic!("unexpected classification error: {e}"),
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use runsym::parse::parse_coefficient_list;
use runsym::IntPolynomial;

// Coefficient-list text parser: must never panic, and anything it accepts
// must survive the string wire format unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(poly) = parse_coefficient_list(text) {
        let strings = poly.coeff_strings();
        let back = IntPolynomial::from_coeff_strings(&strings).expect("wire form parses back");
        assert_eq!(back, poly);
    }
});

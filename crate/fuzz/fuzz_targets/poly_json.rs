#![no_main]

use libfuzzer_sys::fuzz_target;
use runsym::IntPolynomial;

// JSON decoder for the coefficient-string-array wire format.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(poly) = serde_json::from_str::<IntPolynomial>(text) {
        let encoded = serde_json::to_string(&poly).expect("polynomials always serialize");
        let back: IntPolynomial = serde_json::from_str(&encoded).expect("canonical form parses");
        assert_eq!(back, poly);
    }
});

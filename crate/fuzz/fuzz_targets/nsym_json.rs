#![no_main]

use libfuzzer_sys::fuzz_target;
use runsym::nsym::Basis;
use runsym::NSymElement;

// Noncommutative-symmetric-function JSON decoder, plus basis-change
// round-trips on small decoded elements.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(element) = serde_json::from_str::<NSymElement>(text) else { return };
    let encoded = serde_json::to_string(&element).expect("elements always serialize");
    let back: NSymElement = serde_json::from_str(&encoded).expect("canonical form parses");
    assert_eq!(back, element);

    if element.order() <= 10 && element.len() <= 64 {
        match element.basis() {
            Basis::H => assert_eq!(element.h_to_ribbon().ribbon_to_h(), element),
            Basis::R => assert_eq!(element.ribbon_to_h().h_to_ribbon(), element),
        }
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use runsym::RunClassSpec;

// Run-class JSON decoder. Decoding never panics; decoded values either fail
// validation or round-trip canonically and describe a genuine 0/1 series.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = serde_json::from_str::<RunClassSpec>(text) else { return };
    if spec.validate().is_err() {
        return;
    }
    let encoded = serde_json::to_string(&spec).expect("specs always serialize");
    let back: RunClassSpec = serde_json::from_str(&encoded).expect("canonical form parses");
    assert_eq!(back, spec);
    // a validated spec's reciprocal really is a 0/1 indicator
    if spec.m <= 512 {
        assert!(spec.reciprocal_prefix(2 * spec.m).is_zero_one());
    }
});

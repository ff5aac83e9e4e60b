#![no_main]

use libfuzzer_sys::fuzz_target;
use secord::json::{family_json, parse_family};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(family) = parse_family(text) else {
        return;
    };
    // accepted documents must survive a round trip unchanged
    let back = parse_family(&family_json(&family)).expect("own output parses");
    assert_eq!(back, family);
});

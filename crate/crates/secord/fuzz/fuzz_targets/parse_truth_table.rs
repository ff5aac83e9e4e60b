#![no_main]

use libfuzzer_sys::fuzz_target;
use secord::json::{parse_truth_table, truth_table_json, witness_table_json};
use secord::Limits;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(f) = parse_truth_table(text) else {
        return;
    };
    let limits = Limits {
        product_cap: 4096,
        sweep_width: 10,
    };
    if f.width() > limits.sweep_width {
        return;
    }
    // both renderings must reparse to the same function
    for rendered in [
        truth_table_json(&f, &limits).unwrap(),
        witness_table_json(&f, &limits).unwrap(),
    ] {
        let back = parse_truth_table(&rendered).expect("own output parses");
        assert!(back.agrees_with(&f, &limits).unwrap());
    }
    // predicate implications hold on anything parseable
    if f.is_strictly_increasing(&limits).unwrap() {
        assert!(f.is_increasing(&limits).unwrap());
        assert!(f.is_contractive(&limits).unwrap());
    }
});

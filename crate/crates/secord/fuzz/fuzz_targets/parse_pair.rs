#![no_main]

use libfuzzer_sys::fuzz_target;
use secord::json::parse_pair;
use secord::order::{fast_check, naive_check};
use secord::Limits;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok((x, y)) = parse_pair(text) else {
        return;
    };
    // keep instances small enough for the enumeration oracle
    let limits = Limits {
        product_cap: 4096,
        sweep_width: 8,
    };
    let Ok(fast) = fast_check(&x, &y, &limits) else {
        return;
    };
    let Ok(naive) = naive_check(&x, &y, &limits) else {
        return;
    };
    // differential check: the sweep and the enumeration oracle must agree
    assert_eq!(fast, naive);
});

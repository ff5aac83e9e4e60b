#![no_main]

use libfuzzer_sys::fuzz_target;
use secord::BitWord;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(word) = text.parse::<BitWord>() else {
        return;
    };
    assert_eq!(word.width(), text.len());
    assert_eq!(word.to_string(), text);
    assert_eq!(word.weight(), text.chars().filter(|&c| c == '1').count());
    for successor in word.successors() {
        assert!(word.leq(successor));
        assert_eq!(successor.weight(), word.weight() + 1);
    }
});

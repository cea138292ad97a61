//! Fuzzes the automorphism-word grammar: must never panic, only return errors.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = repalg::parse::parse_aut(s);
    }
});

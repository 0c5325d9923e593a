//! The parser must never panic, and anything it accepts must survive an
//! emit/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(mcis) = fairgraph::format::parse_mcis(text) {
        let emitted = fairgraph::format::emit_mcis(&mcis);
        let reparsed = fairgraph::format::parse_mcis(&emitted).expect("emitted text must parse");
        assert_eq!(reparsed, mcis);
    }
});

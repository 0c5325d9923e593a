//! The parser must never panic, and anything it accepts must survive an
//! emit/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(allocation) = fairgraph::format::parse_allocation(text) {
        let emitted = fairgraph::format::emit_allocation(&allocation);
        let reparsed =
            fairgraph::format::parse_allocation(&emitted).expect("emitted text must parse");
        assert_eq!(reparsed, allocation);
    }
});

//! The parser must never panic, and anything it accepts must survive an
//! emit/parse round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(inst) = fairgraph::format::parse_instance(text) {
        let emitted = fairgraph::format::emit_instance(&inst);
        let reparsed =
            fairgraph::format::parse_instance(&emitted).expect("emitted text must parse");
        assert_eq!(reparsed, inst);
    }
});

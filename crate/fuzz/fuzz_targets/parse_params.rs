#![no_main]

use klrw_cli::{params_json, parse_params};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(params) = parse_params(text) {
        let back = parse_params(&params_json(&params).to_string()).expect("serialized params parse");
        assert_eq!(back, params);
    }
});

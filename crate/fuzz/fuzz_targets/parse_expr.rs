#![no_main]

use klrw_cli::{parse_expr, print_chain};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(chain) = parse_expr(text) {
        let printed = print_chain(&chain);
        let again = parse_expr(&printed).expect("printed chains parse");
        assert_eq!(again, chain);
    }
});

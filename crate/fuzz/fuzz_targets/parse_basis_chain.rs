#![no_main]

use klrw_cli::{parse_basis_chain, print_basis_chain};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(chain) = parse_basis_chain(text) {
        assert_eq!(
            parse_basis_chain(&print_basis_chain(&chain)).expect("printed chains parse"),
            chain
        );
    }
});

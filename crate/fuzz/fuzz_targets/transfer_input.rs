#![no_main]

use klrw_bimodules::{transfer_unit, RecursiveTransfer};
use klrw_cli::parse_basis_chain;
use klrw_core::QuiverConfig;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(chain) = parse_basis_chain(text) else {
        return;
    };
    let cfg = QuiverConfig::new(6).expect("six punctures");
    if chain.is_empty()
        || chain.len() > 4
        || chain.iter().any(|m| m.validate(&cfg).is_err() || m.dots > 6)
        || chain.windows(2).any(|w| w[0].source != w[1].target)
    {
        return;
    }
    let closed = transfer_unit(&chain);
    let recursive = RecursiveTransfer::new().unit(&chain).expect("valid chains transfer");
    assert_eq!(closed, recursive);
});

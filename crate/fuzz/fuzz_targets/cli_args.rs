#![no_main]

use libfuzzer_sys::fuzz_target;
use lpp_cli::parse_args;

// NUL-separated argument vector.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let argv = std::iter::once("lpp").chain(text.split('\0'));
    let _ = parse_args(argv);
});

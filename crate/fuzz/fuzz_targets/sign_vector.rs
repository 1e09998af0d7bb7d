#![no_main]
use comsc_core::catalog::catalog;
use comsc_core::SignVector;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(x) = SignVector::parse(data) {
        assert_eq!(SignVector::parse(&x.to_string()).unwrap(), x);
        assert_eq!(x.compose(&x), x);
    }
    // Labelled parsing goes through the system's ground order.
    let m = catalog("com-p4").unwrap();
    if let Ok(x) = m.parse_vector(data) {
        assert_eq!(m.parse_vector(&m.format_vector(&x)).unwrap(), x);
    }
});

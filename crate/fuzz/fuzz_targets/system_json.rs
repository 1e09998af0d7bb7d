#![no_main]
use comsc_core::SignSystem;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(m) = SignSystem::from_json(data) {
        let again = SignSystem::from_json(&m.to_json()).unwrap();
        assert_eq!(again, m);
        let _ = m.classify();
    }
});

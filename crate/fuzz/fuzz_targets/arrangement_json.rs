#![no_main]
use comsc_core::generators::{com_from_arrangement, Arrangement};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    let Ok(arr) = Arrangement::from_json(data) else {
        return;
    };
    assert_eq!(Arrangement::from_json(&arr.to_json()).unwrap(), arr);
    // Cell enumeration is exponential; keep the inputs it sees small.
    if arr.dim <= 3 && arr.hyperplanes.len() + arr.window.len() <= 6 {
        if let Ok(m) = com_from_arrangement(&arr) {
            assert!(m.classify().com);
        }
    }
});

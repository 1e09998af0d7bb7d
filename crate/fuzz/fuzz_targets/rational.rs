#![no_main]
use comsc_core::generators::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(q) = data.parse::<Rational>() {
        assert_eq!(q.to_string().parse::<Rational>().unwrap(), q);
        let json = serde_json::to_string(&q).unwrap();
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, q);
    }
});

//! Named instances. Each entry is an arrangement plus a fixed reorientation
//! mask applied after cell enumeration.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::arrangement::{com_from_arrangement, Arrangement, Sense};
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::sign::ElementSet;
use crate::system::SignSystem;

pub const NAMES: [&str; 5] = [
    "om-square",
    "om-hexagon",
    "om-r3-planes4",
    "ample-e311",
    "com-p4",
];

fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

/// The arrangement behind a catalog entry and the elements it reorients.
pub fn catalog_arrangement(name: &str) -> Result<(Arrangement, ElementSet)> {
    let half = Rational::new(1, 2)?;
    let entry = match name {
        "om-square" => (
            Arrangement::central(2, &[&[1, 0], &[0, 1]]),
            ElementSet::EMPTY,
        ),
        "om-hexagon" => (
            Arrangement::central(2, &[&[1, 0], &[0, 1], &[1, 1]]),
            ElementSet::EMPTY,
        ),
        "om-r3-planes4" => (
            Arrangement::central(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]),
            ElementSet::EMPTY,
        ),
        // two squares of lines crossing at x = -1 and x = 1, bridged by x = 0
        "ample-e311" => (
            Arrangement::central(2, &[])
                .with_plane(&[2, -1], int(-2))
                .with_plane(&[2, 1], int(-2))
                .with_plane(&[1, 0], int(0))
                .with_plane(&[2, -1], int(2))
                .with_plane(&[2, 1], int(2))
                .with_window(&[0, 1], Sense::Greater, -half.clone())
                .with_window(&[0, 1], Sense::Less, half),
            ElementSet::EMPTY,
        ),
        // the axes bound a square; the two slanted lines cut pendant cells
        // off its far corner
        "com-p4" => (
            Arrangement::central(2, &[&[1, 0], &[0, 1]])
                .with_plane(&[2, 4], int(15))
                .with_plane(&[4, 2], int(15))
                .with_window(&[1, 0], Sense::Less, int(3))
                .with_window(&[0, 1], Sense::Less, int(3))
                .with_window(&[1, 1], Sense::Less, int(5))
                .with_window(&[1, 0], Sense::Greater, int(-3))
                .with_window(&[0, 1], Sense::Greater, int(-3)),
            ElementSet::from_iter([2, 3]),
        ),
        _ => {
            return Err(Error::input(format!(
                "unknown catalog instance {name:?}; known: {}",
                NAMES.join(", ")
            )))
        }
    };
    Ok(entry)
}

fn build(name: &str) -> Result<SignSystem> {
    let (arr, flip) = catalog_arrangement(name)?;
    com_from_arrangement(&arr)?.reorient(flip)
}

/// A catalog instance, built once per process.
pub fn catalog(name: &str) -> Result<SignSystem> {
    static CACHE: OnceLock<Mutex<HashMap<String, SignSystem>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache
        .lock()
        .map_err(|_| Error::Generation("catalog cache poisoned".into()))?
        .get(name)
    {
        return Ok(m.clone());
    }
    let m = build(name)?;
    if let Ok(mut c) = cache.lock() {
        c.insert(name.to_string(), m.clone());
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn topes(name: &str) -> Vec<String> {
        let m = catalog(name).unwrap();
        m.topes().iter().map(|t| m.format_vector(t)).collect()
    }

    #[test]
    fn twin_squares_topes() {
        let mut want = vec![
            "-----", "+----", "-+---", "++---", "+++--", "++++-", "+++-+", "+++++",
        ];
        want.sort_by_key(|s| crate::SignVector::parse(s).unwrap());
        assert_eq!(topes("ample-e311"), want);
    }

    #[test]
    fn cycle_with_two_pendants() {
        let t = topes("com-p4");
        assert_eq!(t.len(), 6);
        for s in ["++++", "+-++", "-+++", "--++", "++-+", "+++-"] {
            assert!(t.contains(&s.to_string()), "{s} missing from {t:?}");
        }
    }

    #[test]
    fn tope_counts() {
        assert_eq!(topes("om-square").len(), 4);
        assert_eq!(topes("om-hexagon").len(), 6);
        assert_eq!(topes("om-r3-planes4").len(), 14);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(catalog("nope"), Err(Error::Input(_))));
    }
}

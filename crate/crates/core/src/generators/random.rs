//! Seeded random realizable COMs from small integer arrangements.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::arrangement::{com_from_arrangement, Arrangement, Sense};
use super::rational::Rational;
use crate::error::{Error, Result};
use crate::system::SignSystem;

const ATTEMPTS: usize = 500;

/// Shape of the random arrangements.
#[derive(Clone, Copy, Debug)]
pub struct RandomSpec {
    pub max_elements: usize,
    pub max_dim: usize,
    /// Chance of wrapping the arrangement in a bounded box window.
    pub window_probability: f64,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            max_elements: 7,
            max_dim: 3,
            window_probability: 0.5,
        }
    }
}

fn random_arrangement(rng: &mut ChaCha8Rng, spec: &RandomSpec) -> Arrangement {
    let dim = rng.gen_range(1..=spec.max_dim.max(1));
    let lo = (dim + 1).min(spec.max_elements);
    let m = rng.gen_range(lo..=spec.max_elements.max(lo));
    let mut arr = Arrangement::central(dim, &[]);
    for _ in 0..m {
        let mut a: Vec<i64> = (0..dim).map(|_| rng.gen_range(-3..=3)).collect();
        if a.iter().all(|&c| c == 0) {
            a[rng.gen_range(0..dim)] = 1;
        }
        arr = arr.with_plane(&a, Rational::from_int(rng.gen_range(-2..=2)));
    }
    if rng.gen_bool(spec.window_probability) {
        for i in 0..dim {
            let mut unit = vec![0; dim];
            unit[i] = 1;
            let r = Rational::from_int(rng.gen_range(1..=3));
            arr = arr.with_window(&unit, Sense::Less, r.clone()).with_window(
                &unit,
                Sense::Greater,
                -r,
            );
        }
    }
    arr
}

/// Draws arrangements until one yields a simple COM.
pub fn random_com(seed: u64, spec: &RandomSpec) -> Result<(Arrangement, SignSystem)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ATTEMPTS {
        let arr = random_arrangement(&mut rng, spec);
        match com_from_arrangement(&arr) {
            Ok(m) => return Ok((arr, m)),
            Err(Error::Generation(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Generation(format!(
        "no simple arrangement after {ATTEMPTS} draws"
    )))
}

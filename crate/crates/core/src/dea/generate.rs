use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1, Normal};
use serde::{Deserialize, Serialize};

use super::{TimeSeries, MIN_ANALYSIS_LEN};
use crate::error::{param, Result};

/// Synthetic noise models.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SeriesKind {
    /// iid normal with variance `2D`.
    Gaussian { diffusion: f64 },
    /// iid symmetric stable with unit scale, `1 < index ≤ 2`. Index 2 is the
    /// normal law with variance 2.
    Stable { index: f64 },
}

/// Deterministic series of length `n` from a ChaCha8 stream seeded by `seed`.
pub fn generate(kind: SeriesKind, n: usize, seed: u64) -> Result<TimeSeries> {
    if n < MIN_ANALYSIS_LEN {
        return Err(param(format!(
            "series length must be at least {MIN_ANALYSIS_LEN}, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xi = match kind {
        SeriesKind::Gaussian { diffusion } => {
            if !(diffusion > 0.0) || !diffusion.is_finite() {
                return Err(param(format!("diffusion constant must be positive, got {diffusion}")));
            }
            let normal = Normal::new(0.0, (2.0 * diffusion).sqrt()).map_err(|e| param(e.to_string()))?;
            (0..n).map(|_| normal.sample(&mut rng)).collect()
        }
        SeriesKind::Stable { index } => {
            if !(index > 1.0 && index <= 2.0) {
                return Err(param(format!("stable index must lie in (1, 2], got {index}")));
            }
            (0..n).map(|_| stable_draw(index, &mut rng)).collect()
        }
    };
    TimeSeries::new(xi)
}

/// Chambers–Mallows–Stuck draw for the symmetric case.
fn stable_draw(index: f64, rng: &mut impl Rng) -> f64 {
    let v = rng.random_range(-FRAC_PI_2..FRAC_PI_2);
    let w: f64 = Exp1.sample(rng);
    let a = index;
    (a * v).sin() / v.cos().powf(1.0 / a) * ((v - a * v).cos() / w).powf((1.0 - a) / a)
}

//! Log-gamma for positive real arguments.
//!
//! Large arguments use the Stirling series, small ones are shifted upward by
//! the recurrence `Γ(x+1) = xΓ(x)`. Around the zeros of `ln Γ` at 1 and 2 the
//! shifted form loses relative accuracy, so there the Taylor series of
//! `ln Γ(1+ε)` in zeta values takes over.

use crate::error::{domain, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_8;

/// `B_{2k} / (2k (2k-1))` for k = 1..=8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// ζ(k) for k = 2..=30.
const ZETA: [f64; 29] = [
    1.644_934_066_848_226_436_472,
    1.202_056_903_159_594_285_4,
    1.082_323_233_711_138_191_516,
    1.036_927_755_143_369_926_331,
    1.017_343_061_984_449_139_715,
    1.008_349_277_381_922_826_84,
    1.004_077_356_197_944_339_379,
    1.002_008_392_826_082_214_418,
    1.000_994_575_127_818_085_337,
    1.000_494_188_604_119_464_559,
    1.000_246_086_553_308_048_299,
    1.000_122_713_347_578_489_147,
    1.000_061_248_135_058_704_829,
    1.000_030_588_236_307_020_494,
    1.000_015_282_259_408_651_872,
    1.000_007_637_197_637_899_762,
    1.000_003_817_293_264_999_84,
    1.000_001_908_212_716_553_939,
    1.000_000_953_962_033_872_796,
    1.000_000_476_932_986_787_806,
    1.000_000_238_450_502_727_733,
    1.000_000_119_219_925_965_311,
    1.000_000_059_608_189_051_259,
    1.000_000_029_803_503_514_652,
    1.000_000_014_901_554_828_365,
    1.000_000_007_450_711_789_835,
    1.000_000_003_725_334_024_788,
    1.000_000_001_862_659_723_513,
    1.000_000_000_931_327_432_42,
];

const STIRLING_MIN: f64 = 10.0;
const TAYLOR_RADIUS: f64 = 0.25;

/// Natural logarithm of the gamma function for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(format!("log_gamma requires a finite x > 0, got {x}")));
    }
    Ok(ln_gamma_pos(x))
}

/// `ln Γ(x)` without argument checks; callers guarantee `x > 0`.
pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    if (x - 1.0).abs() < TAYLOR_RADIUS {
        return ln_gamma_one_plus(x - 1.0);
    }
    if (x - 2.0).abs() < TAYLOR_RADIUS {
        let eps = x - 2.0;
        return eps.ln_1p() + ln_gamma_one_plus(eps);
    }
    if x >= STIRLING_MIN {
        return stirling(x);
    }
    let mut shifted = x;
    let mut product = 1.0;
    while shifted < STIRLING_MIN {
        product *= shifted;
        shifted += 1.0;
    }
    stirling(shifted) - product.ln()
}

/// `ln Γ(1+ε)` for `|ε| < 1/4`.
fn ln_gamma_one_plus(eps: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = -eps;
    for (i, z) in ZETA.iter().enumerate() {
        power *= -eps;
        sum += z * power / (i + 2) as f64;
    }
    sum - EULER_GAMMA * eps
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut correction = 0.0;
    for c in STIRLING.iter().rev() {
        correction = correction * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + correction * inv
}

/// `Γ(x)` for `x > 0`; overflows to infinity above ~171.6.
pub fn gamma(x: f64) -> Result<f64> {
    if x.fract() == 0.0 && (1.0..=171.0).contains(&x) {
        return Ok((2..x as u32).fold(1.0, |acc, k| acc * k as f64));
    }
    log_gamma(x).map(f64::exp)
}

/// `ln B(a, b)` for `a, b > 0`.
pub fn log_beta(a: f64, b: f64) -> Result<f64> {
    Ok(log_gamma(a)? + log_gamma(b)? - log_gamma(a + b)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    // mpmath loggamma at 50 digits
    const REFERENCE: [(f64, f64); 17] = [
        (0.5, 0.572_364_942_924_700_087_07),
        (1.0, 0.0),
        (1.5, -0.120_782_237_635_245_222_35),
        (2.0, 0.0),
        (2.5, 0.284_682_870_472_919_159_63),
        (3.7, 1.428_072_326_665_387_921_9),
        (5.0, 3.178_053_830_347_945_619_6),
        (10.0, 12.801_827_480_081_469_611),
        (0.001, 6.907_178_885_383_853_682_5),
        (0.9, 0.066_376_239_734_742_971_189),
        (1.1, -0.049_872_441_259_839_724_148),
        (1.9, -0.038_984_275_923_083_330_039),
        (2.1, 0.045_437_738_544_485_135_896),
        (25.5, 56.389_167_643_719_946_744),
        (171.3, 708.114_947_038_996_824_29),
        (1e-10, 23.025_850_929_882_735_274),
        (123_456.7, 1_323_900.975_390_918_294_9),
    ];

    #[test]
    fn matches_reference_to_thirteen_digits() {
        for (x, want) in REFERENCE {
            let got = log_gamma(x).unwrap();
            let err = (got - want).abs();
            assert!(
                err <= 1e-13 * want.abs() || err <= 1e-16,
                "lnΓ({x}) = {got}, want {want}, err {err:e}"
            );
        }
    }

    #[test]
    fn half_integer_and_factorials() {
        let ln_sqrt_pi = 0.5 * std::f64::consts::PI.ln();
        assert!((log_gamma(0.5).unwrap() - ln_sqrt_pi).abs() < 4e-15);
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert!((log_gamma(5.0).unwrap() - 24f64.ln()).abs() < 1e-14);
        let mut fact = 1.0f64;
        for n in 1..30 {
            fact *= n as f64;
            let got = log_gamma(n as f64 + 1.0).unwrap();
            assert!((got - fact.ln()).abs() <= 1e-13 * fact.ln().max(1.0));
        }
        assert_eq!(gamma(1.0).unwrap(), 1.0);
        assert_eq!(gamma(3.0).unwrap(), 2.0);
        assert_eq!(gamma(11.0).unwrap(), 3_628_800.0);
        assert!(gamma(172.0).unwrap().is_infinite());
    }

    #[test]
    fn recurrence_holds_across_branch_boundaries() {
        let mut x = 0.05;
        while x < 14.0 {
            let lhs = log_gamma(x + 1.0).unwrap();
            let rhs = log_gamma(x).unwrap() + x.ln();
            assert!((lhs - rhs).abs() <= 2e-14 * lhs.abs().max(1.0), "x={x}");
            x += 0.0371;
        }
    }

    #[test]
    fn rejects_non_positive() {
        for x in [0.0, -1.0, -0.5, f64::NAN, f64::INFINITY] {
            assert!(matches!(log_gamma(x), Err(crate::Error::Domain(_))));
        }
    }
}

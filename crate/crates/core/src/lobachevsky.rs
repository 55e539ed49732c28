//! The Lobachevsky function `Λ(θ) = -∫₀^θ ln|2 sin t| dt` and ideal
//! tetrahedron volumes.
//!
//! Two evaluation paths are kept deliberately independent:
//!
//! * **series**: `Λ(θ) = ½ Σ sin(2nθ)/n²`. The partial sum is taken to a
//!   cutoff `M`, and the tail is resummed by repeated summation by parts
//!   (`Σ_{n≥M} f(n) zⁿ = zᴹ/(1-z) Σ_j (z/(1-z))ʲ Δʲf(M) + R`), whose remainder
//!   is bounded by `|z/(1-z)|ᴷ |Δᴷ⁻¹f(M)|` because `1/n²` is completely
//!   monotone. Arguments below π/8 are pushed up with the duplication
//!   identity `Λ(θ) = ½Λ(2θ) + Λ(π/2 - θ)`.
//! * **quadrature**: the log singularity at `t = 0` is removed analytically,
//!   `ln(2 sin t) = ln(2t) + ln(sin t / t)`, leaving a smooth integrand that
//!   adaptive Gauss–Kronrod handles to full precision.
//!
//! Both paths first reduce the argument to `[0, π/2]` using oddness and
//! π-periodicity.

#![allow(clippy::excessive_precision)]

use std::f64::consts::{FRAC_PI_2, FRAC_PI_8, PI};

use thiserror::Error;

/// Default absolute tolerance for Λ evaluations.
pub const DEFAULT_TOL: f64 = 1e-13;
/// Smallest tolerance the evaluators accept.
pub const MIN_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("Λ({theta}) evaluation paths disagree: series {series}, quadrature {quadrature}")]
    PathsDisagree { theta: f64, series: f64, quadrature: f64 },
    #[error("tolerance {0:e} is below the supported minimum {MIN_TOL:e}")]
    ToleranceUnachievable(f64),
    #[error("non-finite argument {0}")]
    NonFinite(f64),
    #[error("tetrahedron angles must be positive, got {0}")]
    NonPositiveAngle(f64),
    #[error("tetrahedron angles sum to {0}, not π")]
    AngleSum(f64),
}

type Result<T> = std::result::Result<T, NumericsError>;

fn check_args(theta: f64, tol: f64) -> Result<()> {
    if !theta.is_finite() {
        return Err(NumericsError::NonFinite(theta));
    }
    if tol.is_nan() || tol < MIN_TOL {
        return Err(NumericsError::ToleranceUnachievable(tol));
    }
    Ok(())
}

/// Reduce to `r ∈ [0, π/2]` with `Λ(θ) = sign · Λ(r)`.
fn reduce_argument(theta: f64) -> (f64, f64) {
    let (sign, t) = if theta < 0.0 { (-1.0, -theta) } else { (1.0, theta) };
    let r = t.rem_euclid(PI);
    if r > FRAC_PI_2 {
        (-sign, PI - r)
    } else {
        (sign, r)
    }
}

/// Λ(θ) with absolute error at most `tol`, cross-checked by both paths.
pub fn lobachevsky(theta: f64, tol: f64) -> Result<f64> {
    let series = lobachevsky_series(theta, tol)?;
    let quadrature = lobachevsky_quadrature(theta, tol)?;
    if (series - quadrature).abs() > 10.0 * tol {
        return Err(NumericsError::PathsDisagree {
            theta,
            series,
            quadrature,
        });
    }
    Ok(series)
}

/// Λ(θ) by the resummed Fourier series.
pub fn lobachevsky_series(theta: f64, tol: f64) -> Result<f64> {
    check_args(theta, tol)?;
    let (sign, mut r) = reduce_argument(theta);
    if r == 0.0 {
        return Ok(0.0);
    }
    // Weights of the duplication terms sum to < 2, so tol/4 each keeps the
    // total below tol/2.
    let part = tol / 4.0;
    let mut acc = 0.0;
    let mut weight = 1.0;
    while r < FRAC_PI_8 {
        acc += weight * 0.5 * clausen_series(PI - 2.0 * r, 2.0 * part)?;
        weight *= 0.5;
        r *= 2.0;
    }
    acc += weight * 0.5 * clausen_series(2.0 * r, 2.0 * part)?;
    Ok(sign * acc)
}

/// `Σ_{n≥1} sin(nx)/n²` for `x ∈ [π/4, π]`, with a rigorous tail bound
/// below `budget`.
fn clausen_series(x: f64, budget: f64) -> Result<f64> {
    const MAX_TERMS: usize = 12;
    const MAX_CUTOFF: usize = 1 << 16;
    let (s, c) = x.sin_cos();
    // z = e^{ix}; ratio = z / (1 - z) = (-1 + i cot(x/2)) / 2.
    let one_minus_z = (1.0 - c, -s);
    let ratio: (f64, f64) = (-0.5, 0.5 / (x / 2.0).tan());
    let ratio_abs = ratio.0.hypot(ratio.1);

    let mut cutoff = 64usize;
    while cutoff <= MAX_CUTOFF {
        // Forward differences of f(n) = 1/n² at n = cutoff.
        let mut row: Vec<f64> = (0..=MAX_TERMS).map(|i| ((cutoff + i) as f64).powi(-2)).collect();
        let mut diffs = Vec::with_capacity(MAX_TERMS + 1);
        diffs.push(row[0]);
        for _ in 0..MAX_TERMS {
            row = row.windows(2).map(|w| w[1] - w[0]).collect();
            diffs.push(row[0]);
        }

        let mut acc = (0.0, 0.0);
        let mut power = (1.0, 0.0);
        let mut power_abs = 1.0;
        let mut converged = false;
        for &d in diffs.iter().take(MAX_TERMS) {
            acc = (acc.0 + power.0 * d, acc.1 + power.1 * d);
            power = cmul(power, ratio);
            power_abs *= ratio_abs;
            if power_abs * d.abs() <= budget {
                converged = true;
                break;
            }
        }
        if converged {
            let m = cutoff as f64;
            let z_m = ((m * x).cos(), (m * x).sin());
            let tail = cmul(cdiv(z_m, one_minus_z), acc).1;
            let head: f64 = (1..cutoff).map(|n| (n as f64 * x).sin() / (n * n) as f64).sum();
            return Ok(head + tail);
        }
        cutoff *= 2;
    }
    Err(NumericsError::ToleranceUnachievable(budget))
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let d = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
}

/// Λ(θ) by adaptive quadrature of the log-sine integral.
pub fn lobachevsky_quadrature(theta: f64, tol: f64) -> Result<f64> {
    check_args(theta, tol)?;
    let (sign, r) = reduce_argument(theta);
    if r == 0.0 {
        return Ok(0.0);
    }
    let singular = r - r * (2.0 * r).ln();
    let smooth = gauss_kronrod(|t| (t.sin() / t).ln(), 0.0, r, tol / 2.0, 40);
    Ok(sign * (singular - smooth))
}

const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for Kronrod nodes 1, 3, 5, 7.
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// 15-point Kronrod estimate and its difference from the embedded 7-point
/// Gauss rule.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let centre = f(mid);
    let mut kronrod = KRONROD_WEIGHTS[7] * centre;
    let mut gauss = GAUSS_WEIGHTS[3] * centre;
    for i in 0..7 {
        let dx = half * KRONROD_NODES[i];
        let pair = f(mid - dx) + f(mid + dx);
        kronrod += KRONROD_WEIGHTS[i] * pair;
        if i % 2 == 1 {
            gauss += GAUSS_WEIGHTS[i / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive bisection on the Gauss–Kronrod error estimate.
pub(crate) fn gauss_kronrod(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    fn go(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (value, err) = gk15(f, a, b);
        if err <= tol || depth == 0 {
            return value;
        }
        let m = 0.5 * (a + b);
        go(f, a, m, tol / 2.0, depth - 1) + go(f, m, b, tol / 2.0, depth - 1)
    }
    go(&f, a, b, tol, depth)
}

/// Dihedral angles of an ideal tetrahedron (opposite edges share angles).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TetAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl TetAngles {
    pub const SUM_TOLERANCE: f64 = 1e-9;

    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        for a in [alpha, beta, gamma] {
            if !a.is_finite() {
                return Err(NumericsError::NonFinite(a));
            }
            if a <= 0.0 {
                return Err(NumericsError::NonPositiveAngle(a));
            }
        }
        let sum = alpha + beta + gamma;
        if (sum - PI).abs() > Self::SUM_TOLERANCE {
            return Err(NumericsError::AngleSum(sum));
        }
        Ok(TetAngles { alpha, beta, gamma })
    }
}

/// Milnor's formula `Λ(α) + Λ(β) + Λ(γ)`.
pub fn ideal_tet_volume(angles: &TetAngles, tol: f64) -> Result<f64> {
    Ok(lobachevsky(angles.alpha, tol)? + lobachevsky(angles.beta, tol)? + lobachevsky(angles.gamma, tol)?)
}

/// Dihedral angle `arctan(√2)` of the cuboctahedron's tetrahedral pieces.
pub fn cuboct_theta() -> f64 {
    std::f64::consts::SQRT_2.atan()
}

/// `8Λ(π/2 - θ) + 16Λ(θ) - 6Λ(2θ) + Λ(4θ)` at `θ = arctan(√2)`.
pub fn cuboct_volume_closed_form(tol: f64) -> Result<f64> {
    let t = cuboct_theta();
    Ok(
        8.0 * lobachevsky(FRAC_PI_2 - t, tol)? + 16.0 * lobachevsky(t, tol)? - 6.0 * lobachevsky(2.0 * t, tol)?
            + lobachevsky(4.0 * t, tol)?,
    )
}

/// The same volume before folding `Λ(π - 2θ)` and `Λ(4θ - π)` back:
/// `8Λ(π/2 - θ) + 16Λ(θ) + 6Λ(π - 2θ) + Λ(4θ - π)`.
pub fn cuboct_volume_unfolded(tol: f64) -> Result<f64> {
    let t = cuboct_theta();
    Ok(8.0 * lobachevsky(FRAC_PI_2 - t, tol)?
        + 16.0 * lobachevsky(t, tol)?
        + 6.0 * lobachevsky(PI - 2.0 * t, tol)?
        + lobachevsky(4.0 * t - PI, tol)?)
}

/// One isometry class of tetrahedra in the cuboctahedron triangulation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TetClass {
    pub multiplicity: usize,
    pub angles: TetAngles,
}

/// The three classes: 8 corner pieces `(π/2, π/2 - θ, θ)`, 4 exterior
/// pieces of the leftover parallelepiped `(θ, θ, π - 2θ)` and one interior
/// piece `(π - 2θ, π - 2θ, 4θ - π)`.
pub fn cuboct_tet_classes() -> Result<[TetClass; 3]> {
    let t = cuboct_theta();
    Ok([
        TetClass {
            multiplicity: 8,
            angles: TetAngles::new(FRAC_PI_2, FRAC_PI_2 - t, t)?,
        },
        TetClass {
            multiplicity: 4,
            angles: TetAngles::new(t, t, PI - 2.0 * t)?,
        },
        TetClass {
            multiplicity: 1,
            angles: TetAngles::new(PI - 2.0 * t, PI - 2.0 * t, 4.0 * t - PI)?,
        },
    ])
}

/// Sum of Milnor volumes over the 13-tetrahedron triangulation.
pub fn cuboct_volume_by_decomposition(tol: f64) -> Result<f64> {
    cuboct_tet_classes()?.iter().try_fold(0.0, |acc, class| {
        Ok(acc + class.multiplicity as f64 * ideal_tet_volume(&class.angles, tol)?)
    })
}

/// Volume `8Λ(π/4)` of the regular ideal octahedron.
pub fn regular_ideal_octahedron_volume(tol: f64) -> Result<f64> {
    Ok(8.0 * lobachevsky(std::f64::consts::FRAC_PI_4, tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    #[test]
    fn gauss_kronrod_integrates_polynomials_exactly() {
        let (k, _) = gk15(&|x: f64| x.powi(22), -1.0, 1.0);
        assert!((k - 2.0 / 23.0).abs() < 1e-15);
        let (k, e) = gk15(&|x: f64| x.powi(13) + x.powi(12), 0.0, 1.0);
        assert!((k - (1.0 / 14.0 + 1.0 / 13.0)).abs() < 1e-15);
        assert!(e < 1e-15, "gauss rule should also be exact at degree 13, err {e}");
    }

    #[test]
    fn zero_and_right_angle() {
        assert_eq!(lobachevsky(0.0, DEFAULT_TOL).unwrap(), 0.0);
        assert!(lobachevsky(FRAC_PI_2, DEFAULT_TOL).unwrap().abs() < 1e-15);
        assert!(lobachevsky(PI, DEFAULT_TOL).unwrap().abs() < 1e-15);
    }

    #[test]
    fn small_arguments_use_duplication() {
        for &t in &[1e-300, 1e-12, 1e-6, 0.01, 0.3] {
            let a = lobachevsky_series(t, DEFAULT_TOL).unwrap();
            let b = lobachevsky_quadrature(t, DEFAULT_TOL).unwrap();
            assert!((a - b).abs() < 1e-13, "θ={t}: {a} vs {b}");
        }
    }

    #[test]
    fn rejects_bad_tolerance_and_input() {
        assert_eq!(
            lobachevsky(1.0, 1e-15),
            Err(NumericsError::ToleranceUnachievable(1e-15))
        );
        assert!(matches!(lobachevsky(f64::NAN, 1e-13), Err(NumericsError::NonFinite(_))));
        assert!(lobachevsky(1.0, f64::NAN).is_err());
    }

    #[test]
    fn tet_angles_validate() {
        assert!(TetAngles::new(1.0, 1.0, 1.0).is_err());
        assert!(TetAngles::new(0.0, FRAC_PI_2, FRAC_PI_2).is_err());
        assert!(TetAngles::new(-0.1, FRAC_PI_2 + 0.1, FRAC_PI_2).is_err());
        assert!(TetAngles::new(PI / 3.0, PI / 3.0, PI / 3.0).is_ok());
    }

    #[test]
    fn half_octahedron_drops_right_angle_term() {
        let v = ideal_tet_volume(&TetAngles::new(FRAC_PI_2, FRAC_PI_4, FRAC_PI_4).unwrap(), 1e-13).unwrap();
        let two_quarter = 2.0 * lobachevsky(FRAC_PI_4, 1e-13).unwrap();
        assert!((v - two_quarter).abs() < 1e-14);
    }

    #[test]
    fn class_angles_sum_to_pi_and_count_13() {
        let classes = cuboct_tet_classes().unwrap();
        assert_eq!(classes.iter().map(|c| c.multiplicity).sum::<usize>(), 13);
        for c in classes {
            let s = c.angles.alpha + c.angles.beta + c.angles.gamma;
            assert!((s - PI).abs() < 1e-15);
        }
    }
}

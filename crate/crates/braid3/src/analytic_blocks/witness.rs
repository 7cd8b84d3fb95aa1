//! Explicit maps realizing the zero-extremal-length cases.
//!
//! For `w = a_1^n` the map `ζ -> -1 + e^ζ` sends a long half-strip of
//! height `2π|n|` into `C \ {-1, 1}` with both horizontal sides on the real
//! axis; for alternating words with all powers equal the map `ζ -> e^ζ` on a
//! strip of height `πd` lands its horizontal sides on the imaginary axis.
//! Negative powers use the conjugate exponential. The rectangles are
//! truncated to a finite width so that their extremal length is below a
//! requested value.
//!
//! Images are handled in log-polar form `(log|z|, arg z)` so very wide
//! rectangles do not overflow.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use super::blocks::Rect;
use crate::braid_words::{FreeWord, Generator};
use crate::{Error, Result};

/// Relative tolerance for a boundary image lying on its target line.
const LINE_TOL: f64 = 1e-12;
/// Above this real part the image is only tracked in log-polar form.
const EXP_LIMIT: f64 = 700.0;
/// Below `-TR_RESOLVED` the offset `e^x` from the puncture is lost in `z`.
const TR_RESOLVED: f64 = 20.0;

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub family: &'static str,
    pub word: String,
    pub map: &'static str,
    pub rect: Rect,
    /// Height over width of the truncated rectangle.
    pub extremal_length: f64,
    pub samples: usize,
    /// `log` of the smallest sampled distance to `{-1, 1}`.
    pub min_log_distance: f64,
    pub stays_in_domain: bool,
    /// Largest sampled `|Im z| / |z - c|` (tr) or `|Re z| / |z|` (pb) on the horizontal sides.
    pub max_boundary_deviation: f64,
    pub boundary_ok: bool,
    /// Turns of the image of the inner vertical side around the encircled point
    /// (the puncture for tr, the origin for pb).
    pub winding: f64,
    pub expected_winding: f64,
    pub passed: bool,
}

fn sample_axis(lo: f64, hi: f64, n: usize, k: usize) -> f64 {
    lo + (hi - lo) * k as f64 / (n - 1) as f64
}

fn check_inputs(samples: usize, max_extremal_length: f64) -> Result<()> {
    if samples < 2 {
        return Err(Error::Domain("need at least two samples per side".into()));
    }
    if !(max_extremal_length.is_finite() && max_extremal_length > 0.0) {
        return Err(Error::Domain(format!("extremal length bound must be positive, got {max_extremal_length}")));
    }
    Ok(())
}

/// Accumulated change of the argument of `z - c` along sampled image points, in turns.
fn winding_about(points: impl Iterator<Item = Complex64>, c: Complex64) -> f64 {
    turns(points.map(|z| (z - c).arg()))
}

fn turns(args: impl Iterator<Item = f64>) -> f64 {
    let mut total = 0.0;
    let mut prev: Option<f64> = None;
    for a in args {
        if let Some(p) = prev {
            let mut d = a - p;
            d -= (2.0 * PI) * (d / (2.0 * PI)).round();
            total += d;
        }
        prev = Some(a);
    }
    total / (2.0 * PI)
}

/// Witness for the tr case of a generator power `a_j^n`, `n != 0`.
///
/// For `a_2^n` the roles of `-1` and `1` are swapped, `ζ -> 1 - e^ζ`.
pub fn tr_witness(w: &FreeWord, samples: usize, max_extremal_length: f64) -> Result<WitnessReport> {
    check_inputs(samples, max_extremal_length)?;
    let [b] = w.blocks() else {
        return Err(Error::NotApplicable(format!("{} is not a generator power", w.render())));
    };
    let n = b.exp;
    // negative powers use the conjugate exponential, reversing the winding
    let map = match (b.gen, n > 0) {
        (Generator::One, true) => "-1 + exp(z)",
        (Generator::One, false) => "-1 + exp(conj z)",
        (Generator::Two, true) => "1 - exp(z)",
        (Generator::Two, false) => "1 - exp(conj z)",
    };
    let height = 2.0 * PI * n.unsigned_abs() as f64;
    let width = 2.0 * height / max_extremal_length;
    let rect = Rect { re_min: -width, re_max: 0.0, im_min: 0.0, im_max: height };
    let (c, s) = match b.gen {
        Generator::One => (-1.0, 1.0),
        Generator::Two => (1.0, -1.0),
    };
    let eval = |x: f64, y: f64| {
        let e = Complex64::new(x, y).exp();
        Complex64::new(c, 0.0) + s * if n > 0 { e } else { e.conj() }
    };

    // z - c = ±e^ζ, so log|z - c| = Re ζ; the other puncture sits at distance |2 ∓ e^ζ| >= 1
    let other_log = |x: f64| (2.0 - x.exp()).ln();
    let mut min_log = f64::INFINITY;
    let mut stays = true;
    for i in 0..samples {
        for j in 0..samples {
            let x = sample_axis(rect.re_min, rect.re_max, samples, i);
            let y = sample_axis(rect.im_min, rect.im_max, samples, j);
            let d = x.min(other_log(x));
            stays &= d.is_finite() && y.is_finite();
            min_log = min_log.min(d);
        }
    }
    let mut dev: f64 = 0.0;
    for y in [rect.im_min, rect.im_max] {
        for i in 0..samples {
            let x = sample_axis(rect.re_min, rect.re_max, samples, i);
            // once e^x is below the resolution of z near c, switch to log-polar
            let rel = if x > -TR_RESOLVED {
                let z = eval(x, y);
                z.im.abs() / (z - c).norm()
            } else {
                y.sin().abs()
            };
            dev = dev.max(rel);
            stays &= x.min(other_log(x)).is_finite();
        }
    }
    let side = (0..samples).map(|k| eval(rect.re_max, sample_axis(rect.im_min, rect.im_max, samples, k)));
    let winding = winding_about(side, Complex64::new(c, 0.0));
    let boundary_ok = dev <= LINE_TOL * (1.0 + height);
    let expected = n as f64;
    Ok(WitnessReport {
        family: "tr",
        word: w.render(),
        map,
        extremal_length: height / width,
        rect,
        samples: samples * samples + 2 * samples,
        min_log_distance: min_log,
        stays_in_domain: stays,
        max_boundary_deviation: dev,
        boundary_ok,
        winding,
        expected_winding: expected,
        passed: stays && boundary_ok && (winding - expected).abs() < 1e-9 && height / width < max_extremal_length,
    })
}

/// Witness for the pb case of an alternating word whose powers are all `+1`
/// or all `-1`, of degree `d >= 2`.
pub fn pb_witness(w: &FreeWord, samples: usize, max_extremal_length: f64) -> Result<WitnessReport> {
    check_inputs(samples, max_extremal_length)?;
    let blocks = w.blocks();
    let e = blocks.first().map(|b| b.exp).unwrap_or(0);
    if blocks.len() < 2 || e.abs() != 1 || blocks.iter().any(|b| b.exp != e) {
        return Err(Error::NotApplicable(format!(
            "{} is not an alternating word of degree >= 2 with equal unit powers",
            w.render()
        )));
    }
    let d = blocks.len() as f64;
    let height = PI * d;
    let width = 2.0 * height / max_extremal_length;
    let rect = Rect { re_min: 1.0, re_max: 1.0 + width, im_min: FRAC_PI_2, im_max: FRAC_PI_2 + height };
    let eval = |x: f64, y: f64| {
        let z = Complex64::new(x, y).exp();
        if e > 0 { z } else { z.conj() }
    };

    // |z| = e^x >= e, so log dist(z, ±1) >= log(e^x - 1) = x + log(1 - e^-x)
    let log_dist = |x: f64| x + (-(-x).exp()).ln_1p();
    let mut min_log = f64::INFINITY;
    let mut stays = true;
    for i in 0..samples {
        let x = sample_axis(rect.re_min, rect.re_max, samples, i);
        let v = log_dist(x);
        stays &= v.is_finite() && v > 0.0;
        min_log = min_log.min(v);
    }
    let mut dev: f64 = 0.0;
    for y in [rect.im_min, rect.im_max] {
        for i in 0..samples {
            let x = sample_axis(rect.re_min, rect.re_max, samples, i);
            // log-polar: Re(z) / |z| = cos(arg z)
            let rel = if x < EXP_LIMIT {
                let z = eval(x, y);
                stays &= (z - 1.0).norm() > 0.0 && (z + 1.0).norm() > 0.0;
                z.re.abs() / z.norm()
            } else {
                y.cos().abs()
            };
            dev = dev.max(rel);
        }
    }
    let side = (0..samples).map(|k| eval(rect.re_min, sample_axis(rect.im_min, rect.im_max, samples, k)));
    let winding = winding_about(side, Complex64::new(0.0, 0.0));
    let boundary_ok = dev <= LINE_TOL * (1.0 + height);
    let expected = e as f64 * d / 2.0;
    Ok(WitnessReport {
        family: "pb",
        word: w.render(),
        map: if e > 0 { "exp(z)" } else { "exp(conj z)" },
        extremal_length: height / width,
        rect,
        samples: samples * samples + 2 * samples,
        min_log_distance: min_log,
        stays_in_domain: stays,
        max_boundary_deviation: dev,
        boundary_ok,
        winding,
        expected_winding: expected,
        passed: stays && boundary_ok && (winding - expected).abs() < 1e-9 && height / width < max_extremal_length,
    })
}

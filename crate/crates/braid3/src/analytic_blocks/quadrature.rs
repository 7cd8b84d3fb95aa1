use std::collections::BinaryHeap;
use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuadratureRule {
    /// Tanh-sinh on segments ending at a singular point, Gauss-Kronrod elsewhere.
    Auto,
    GaussKronrod,
    TanhSinh,
}

/// How to evaluate a contour integral: rule, absolute tolerance, and the
/// interior vertices of the polyline (endpoints are supplied by the caller).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    pub rule: QuadratureRule,
    pub abs_tol: f64,
    pub path: Vec<Complex64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { rule: QuadratureRule::Auto, abs_tol: 1e-12, path: Vec::new() }
    }
}

impl QuadratureSpec {
    pub fn new(rule: QuadratureRule, abs_tol: f64) -> Self {
        QuadratureSpec { rule, abs_tol, path: Vec::new() }
    }

    pub fn with_path(mut self, path: Vec<Complex64>) -> Self {
        self.path = path;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::Domain(format!("abs_tol must be positive, got {}", self.abs_tol)));
        }
        if self.path.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::Domain("path vertex is not finite".into()));
        }
        Ok(())
    }
}

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const GK_MAX_INTERVALS: usize = 4000;

fn gk15<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> (Complex64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x) + f(c + x);
        k += s * WGK[i];
        if i % 2 == 1 {
            g += s * WG[i / 2];
        }
    }
    (k * h, ((k - g) * h).norm())
}

/// Globally adaptive Gauss-Kronrod (7/15) integral of `f` over `[a, b]`:
/// the subinterval with the largest error estimate is bisected until the
/// summed estimate is below `abs_tol`.
pub fn gauss_kronrod<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
) -> Result<Complex64> {
    struct Piece {
        lo: f64,
        hi: f64,
        val: Complex64,
        err: f64,
    }
    impl PartialEq for Piece {
        fn eq(&self, o: &Self) -> bool {
            self.err == o.err
        }
    }
    impl Eq for Piece {}
    impl PartialOrd for Piece {
        fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(o))
        }
    }
    impl Ord for Piece {
        fn cmp(&self, o: &Self) -> std::cmp::Ordering {
            self.err.total_cmp(&o.err)
        }
    }
    let mut eval = |lo: f64, hi: f64| -> Result<Piece> {
        let (val, err) = gk15(&mut f, lo, hi);
        if !(val.re.is_finite() && val.im.is_finite() && err.is_finite()) {
            return Err(Error::QuadratureFailure(format!("non-finite integrand on [{lo}, {hi}]")));
        }
        Ok(Piece { lo, hi, val, err })
    };
    let first = eval(a, b)?;
    let mut err_total = first.err;
    let mut heap = BinaryHeap::from([first]);
    while err_total > abs_tol {
        if heap.len() >= GK_MAX_INTERVALS {
            return Err(Error::QuadratureFailure(format!(
                "Gauss-Kronrod error {err_total:e} above {abs_tol:e} after {GK_MAX_INTERVALS} subintervals"
            )));
        }
        let worst = heap.pop().expect("nonempty");
        let mid = 0.5 * (worst.lo + worst.hi);
        if mid <= worst.lo.min(worst.hi) || mid >= worst.lo.max(worst.hi) {
            return Err(Error::QuadratureFailure("subinterval below machine resolution".into()));
        }
        let (l, r) = (eval(worst.lo, mid)?, eval(mid, worst.hi)?);
        err_total += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
    }
    Ok(heap.iter().map(|p| p.val).sum())
}

const TS_TAU_MAX: f64 = 4.5;
const TS_MAX_LEVEL: u32 = 12;

/// Tanh-sinh integral of `f` over `[a, b]`.
///
/// The integrand is called as `f(x, x - a, b - x)`; the two distances are
/// computed without cancellation so endpoint singularities can be factored.
pub fn tanh_sinh<F: FnMut(f64, f64, f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
) -> Result<Complex64> {
    let half = 0.5 * (b - a);
    let mut node = |tau: f64| -> Complex64 {
        let s = FRAC_PI_2 * tau.sinh();
        let da = 2.0 * half / (1.0 + (-2.0 * s).exp());
        let db = 2.0 * half / (1.0 + (2.0 * s).exp());
        let w = half * FRAC_PI_2 * tau.cosh() / (s.cosh() * s.cosh());
        if w == 0.0 || da == 0.0 || db == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let x = if da < db { a + da } else { b - db };
        f(x, da, db) * w
    };
    let mut h = 0.5f64;
    let mut sum = node(0.0);
    let mut k = 1;
    while (k as f64) * h <= TS_TAU_MAX {
        let t = k as f64 * h;
        sum += node(t) + node(-t);
        k += 1;
    }
    let mut prev = sum * h;
    for level in 1..=TS_MAX_LEVEL {
        h *= 0.5;
        let mut k = 1;
        while (k as f64) * h <= TS_TAU_MAX {
            let t = k as f64 * h;
            sum += node(t) + node(-t);
            k += 2;
        }
        let cur = sum * h;
        if !(cur.re.is_finite() && cur.im.is_finite()) {
            return Err(Error::QuadratureFailure("non-finite tanh-sinh sum".into()));
        }
        if level >= 3 && (cur - prev).norm() <= abs_tol {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureFailure(format!("tanh-sinh did not reach {abs_tol:e}")))
}

/// Integral of a holomorphic `f` along the polyline `start, spec.path.., end`.
pub fn path_integral<F: FnMut(Complex64) -> Complex64>(
    mut f: F,
    start: Complex64,
    end: Complex64,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    spec.validate()?;
    let mut pts = vec![start];
    pts.extend_from_slice(&spec.path);
    pts.push(end);
    let nseg = (pts.len() - 1) as f64;
    let tol = spec.abs_tol / nseg;
    let mut total = Complex64::new(0.0, 0.0);
    for w in pts.windows(2) {
        let (p, q) = (w[0], w[1]);
        let dz = q - p;
        if dz.norm() == 0.0 {
            continue;
        }
        total += match spec.rule {
            QuadratureRule::TanhSinh => tanh_sinh(|_, da, _| f(p + dz * da) * dz, 0.0, 1.0, tol)?,
            _ => gauss_kronrod(|t| f(p + dz * t) * dz, 0.0, 1.0, tol)?,
        };
    }
    Ok(total)
}

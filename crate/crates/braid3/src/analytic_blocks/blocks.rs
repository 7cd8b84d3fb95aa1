//! Holomorphic block maps on normalized rectangles, one per syllable.
//!
//! Long blocks invert `r F_M` numerically; short blocks are closed-form
//! exponentials. Each block has two anchors on its horizontal sides where
//! the derivative is `±i`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use super::elliptic::ellip_k;
use super::finite;
use super::fm::FmEvaluator;
use super::quadrature::QuadratureSpec;
use crate::braid_words::{Syllable, SyllableKind};
use crate::{Error, Result};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

pub const NEWTON_TOL: f64 = 1e-12;
pub const NEWTON_MAX_ITER: usize = 50;

/// Around an anchor, targets closer than this are inverted on the sheet
/// continued through the anchor.
const LOCAL_RADIUS: f64 = 0.2;
/// Distance from the anchor to the nearest branch point is 1/2.
const LOCAL_ZETA_LIMIT: f64 = 0.45;
const QUAD_TOL: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BlockKind {
    Form1Long,
    Form2Long,
    Form1Short,
    Form2Short,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rect {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Rect {
    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    pub fn contains(&self, z: Complex64) -> bool {
        self.re_min <= z.re && z.re <= self.re_max && self.im_min <= z.im && z.im <= self.im_max
    }
}

#[derive(Debug, Clone)]
struct Anchor {
    xi: Complex64,
    zeta: Complex64,
    f: Complex64,
    root: Complex64,
}

#[derive(Debug, Clone)]
struct LongData {
    ev: FmEvaluator,
    /// Height and width of the unscaled image rectangle of `F_M`.
    half_height: f64,
    width: f64,
    anchors: [Anchor; 2],
}

#[derive(Debug, Clone)]
pub struct BlockGeometry {
    pub m: f64,
    pub degree: u64,
    pub kind: BlockKind,
    /// Normalization radius: `r` in `r F_M` for long kinds, the exponential
    /// scale for short kinds.
    pub r: f64,
    pub rect: Rect,
    pub anchor_minus: Complex64,
    pub anchor_plus: Complex64,
    long: Option<LongData>,
}

fn integral_degree(x: f64) -> Option<u64> {
    let r = x.round();
    ((x - r).abs() < 1e-9 && r >= 1.0).then_some(r as u64)
}

impl BlockGeometry {
    /// Block of the given kind and parameter `M`.
    pub fn new(kind: BlockKind, m: f64) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::Domain(format!("block parameter M must be positive, got {m}")));
        }
        let d = match kind {
            BlockKind::Form1Long | BlockKind::Form1Short => integral_degree(2.0 * m + 1.0),
            BlockKind::Form2Long => integral_degree(2.0 * m - 1.0),
            BlockKind::Form2Short => integral_degree(2.0 * m),
        }
        .ok_or_else(|| Error::Domain(format!("{kind:?} needs a half-integer M, got {m}")))?;
        match kind {
            BlockKind::Form1Long if m < 2.0 => return Err(Error::Domain(format!("Form1Long needs M >= 2, got {m}"))),
            BlockKind::Form2Long if m < 2.5 => return Err(Error::Domain(format!("Form2Long needs M >= 5/2, got {m}"))),
            BlockKind::Form1Short | BlockKind::Form2Short if !(2..=4).contains(&d) => {
                return Err(Error::BlockUnavailable(format!("no short {kind:?} block of degree {d}")))
            }
            _ => {}
        }
        match kind {
            BlockKind::Form1Short => {
                let c = m + 0.5;
                let xr = -c * (c / m).ln();
                Ok(BlockGeometry {
                    m,
                    degree: d,
                    kind,
                    r: c,
                    rect: Rect { re_min: c * (m / (m + 1.0)).ln(), re_max: 0.0, im_min: -PI * c / 2.0, im_max: PI * c / 2.0 },
                    anchor_minus: Complex64::new(xr, -PI * c / 2.0),
                    anchor_plus: Complex64::new(xr, PI * c / 2.0),
                    long: None,
                })
            }
            BlockKind::Form2Short => {
                let top = PI * d as f64 / 2.0;
                Ok(BlockGeometry {
                    m,
                    degree: d,
                    kind,
                    r: 0.5,
                    rect: Rect { re_min: 0.5f64.ln(), re_max: 0.0, im_min: -1.0 / 18.0, im_max: top + 1.0 / 18.0 },
                    anchor_minus: Complex64::new(0.0, 0.0),
                    anchor_plus: Complex64::new(0.0, top),
                    long: None,
                })
            }
            BlockKind::Form1Long | BlockKind::Form2Long => Self::long(kind, m, d),
        }
    }

    fn long(kind: BlockKind, m: f64, d: u64) -> Result<Self> {
        let ev = FmEvaluator::new(m)?;
        let (r, y) = match kind {
            BlockKind::Form1Long => (((m + 0.25) * (m + 0.75)).sqrt(), m + 0.5),
            _ => (PI * 3f64.sqrt() * ((m - 0.25) * (m + 0.25)).sqrt(), m - 0.5),
        };
        let half_height = ellip_k(m / (m + 1.0))? / (m + 1.0);
        let width = ev.slit_gap(1e-14)?;
        let spec = QuadratureSpec { abs_tol: QUAD_TOL, ..QuadratureSpec::default() };
        let anchor = |zeta: Complex64| -> Result<Anchor> {
            let f = ev.value(zeta, &spec)?;
            Ok(Anchor { xi: f * r, zeta, f, root: ev.root(zeta) })
        };
        let anchors = [anchor(-I * y)?, anchor(I * y)?];
        Ok(BlockGeometry {
            m,
            degree: d,
            kind,
            r,
            rect: Rect { re_min: -r * width, re_max: 0.0, im_min: -r * half_height, im_max: r * half_height },
            anchor_minus: anchors[0].xi,
            anchor_plus: anchors[1].xi,
            long: Some(LongData { ev, half_height, width, anchors }),
        })
    }

    /// Block for `kind` (Form1 or Form2) of degree `d`: closed form when
    /// `d <= 4`, elliptic otherwise.
    pub fn for_degree(kind: SyllableKind, d: u64) -> Result<Self> {
        let d_f = d as f64;
        match kind {
            SyllableKind::Form1 if d >= 5 => Self::new(BlockKind::Form1Long, (d_f - 1.0) / 2.0),
            SyllableKind::Form1 if d >= 2 => Self::new(BlockKind::Form1Short, (d_f - 1.0) / 2.0),
            SyllableKind::Form2 if d >= 5 => Self::new(BlockKind::Form2Long, (d_f + 1.0) / 2.0),
            SyllableKind::Form2 if d >= 2 => Self::new(BlockKind::Form2Short, d_f / 2.0),
            _ => Err(Error::BlockUnavailable(format!("no block for a {kind:?} syllable of degree {d}"))),
        }
    }

    pub fn for_syllable(s: &Syllable) -> Result<Self> {
        Self::for_degree(s.kind, s.degree)
    }

    /// Derivatives `(g'(p⁻), g'(p⁺))` prescribed at the anchors.
    pub fn anchor_derivatives(&self) -> (Complex64, Complex64) {
        match self.kind {
            BlockKind::Form1Long | BlockKind::Form1Short => (I, -I),
            BlockKind::Form2Long | BlockKind::Form2Short => {
                let sign = if self.degree.is_multiple_of(2) { 1.0 } else { -1.0 };
                (-I, -I * sign)
            }
        }
    }

    pub fn vertical_side_length(&self) -> f64 {
        self.rect.height()
    }

    /// `g(ξ)` and `g'(ξ)`.
    pub fn eval(&self, xi: Complex64) -> Result<(Complex64, Complex64)> {
        finite(xi, "block argument")?;
        let (g, dg) = match self.kind {
            BlockKind::Form1Short => {
                let g = -self.m * (-xi / self.r).exp();
                (g, -g / self.r)
            }
            BlockKind::Form2Short => {
                let g = -0.5 * I * (2.0 * xi).exp();
                (g, 2.0 * g)
            }
            BlockKind::Form1Long => {
                let (zeta, root) = self.invert(xi)?;
                (zeta, root / self.r)
            }
            BlockKind::Form2Long => {
                let (zeta, root) = self.invert(xi)?;
                let g = (PI * (zeta + I * (self.m - 1.0))).exp();
                (g, PI * g * root / self.r)
            }
        };
        Ok((finite(g, "block value")?, finite(dg, "block derivative")?))
    }

    /// Solves `r F_M(ζ) = ξ`, returning `ζ` and the root at `ζ` on the sheet used.
    fn invert(&self, xi: Complex64) -> Result<(Complex64, Complex64)> {
        let long = self.long.as_ref().expect("long block");
        let nearest = long
            .anchors
            .iter()
            .min_by(|a, b| (a.xi - xi).norm().total_cmp(&(b.xi - xi).norm()))
            .expect("two anchors");
        if (nearest.xi - xi).norm() < LOCAL_RADIUS {
            return self.invert_local(long, nearest, xi);
        }
        let seed = self.short_seed(long, xi);
        match self.newton_global(long, seed, xi) {
            Ok(v) => Ok(v),
            Err(_) => self.continuation_global(long, seed, xi),
        }
    }

    /// Closed-form approximant of `F_M⁻¹`: the rectangle is mapped affinely
    /// onto the short Form1 rectangle and then through `-M exp(-u/(M+½))`.
    fn short_seed(&self, long: &LongData, xi: Complex64) -> Complex64 {
        let m = self.m;
        let c = m + 0.5;
        let u = xi / self.r;
        let sw = -c * (m / (m + 1.0)).ln();
        let u_short = Complex64::new(u.re / long.width * sw, u.im / long.half_height * (PI * c / 2.0));
        let z = -m * (-u_short / c).exp();
        // keep the seed off the imaginary axis, where the branch is ambiguous
        Complex64::new(z.re.min(-1e-3), z.im)
    }

    fn newton_global(&self, long: &LongData, seed: Complex64, xi: Complex64) -> Result<(Complex64, Complex64)> {
        let spec = QuadratureSpec { abs_tol: QUAD_TOL, ..QuadratureSpec::default() };
        let residual = |z: Complex64| -> Result<(Complex64, Complex64)> {
            let (f, root) = long.ev.value_and_root(z, &spec)?;
            Ok((f * self.r - xi, root))
        };
        newton(seed, xi, residual, |_, root| root / self.r, |_| true)
    }

    fn continuation_global(&self, long: &LongData, seed: Complex64, xi: Complex64) -> Result<(Complex64, Complex64)> {
        let spec = QuadratureSpec { abs_tol: QUAD_TOL, ..QuadratureSpec::default() };
        let xi0 = long.ev.value(seed, &spec)? * self.r;
        let mut last_err = None;
        for steps in [8usize, 32] {
            let mut z = seed;
            let mut ok = true;
            let mut root = Complex64::new(0.0, 0.0);
            for k in 1..=steps {
                let target = xi0 + (xi - xi0) * (k as f64 / steps as f64);
                match self.newton_global(long, z, target) {
                    Ok((zn, rn)) => {
                        z = zn;
                        root = rn;
                    }
                    Err(e) => {
                        last_err = Some(e);
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                return Ok((z, root));
            }
        }
        Err(last_err.unwrap_or_else(|| Error::NewtonDivergence(format!("no convergence at {xi}"))))
    }

    fn invert_local(&self, long: &LongData, a: &Anchor, xi: Complex64) -> Result<(Complex64, Complex64)> {
        let seed = a.zeta + (xi - a.xi) * a.root / self.r;
        let residual = |z: Complex64| -> Result<(Complex64, Complex64)> {
            let (f, root) = long.ev.continue_from(a.zeta, a.f, a.root, z, QUAD_TOL)?;
            Ok((f * self.r - xi, root))
        };
        newton(seed, xi, residual, |_, root| root / self.r, |z| (z - a.zeta).norm() < LOCAL_ZETA_LIMIT)
    }
}

/// Damped Newton iteration for `residual(ζ) = 0`, where the residual also
/// returns the root at `ζ` so that `inv_deriv` can give `1 / residual'`.
fn newton<R, D, A>(seed: Complex64, target: Complex64, mut residual: R, inv_deriv: D, admissible: A) -> Result<(Complex64, Complex64)>
where
    R: FnMut(Complex64) -> Result<(Complex64, Complex64)>,
    D: Fn(Complex64, Complex64) -> Complex64,
    A: Fn(Complex64) -> bool,
{
    let scale = target.norm().max(1.0);
    let mut z = seed;
    let (mut res, mut root) = residual(z)?;
    for _ in 0..NEWTON_MAX_ITER {
        if res.norm() <= NEWTON_TOL * scale {
            return Ok((z, root));
        }
        let step = -res * inv_deriv(z, root);
        let mut lambda = 1.0;
        loop {
            let cand = z + step * lambda;
            if admissible(cand) {
                if let Ok((r2, s2)) = residual(cand) {
                    if r2.norm() < res.norm() {
                        z = cand;
                        res = r2;
                        root = s2;
                        break;
                    }
                }
            }
            lambda *= 0.5;
            if lambda < 1e-4 {
                return Err(Error::NewtonDivergence(format!(
                    "stalled at ζ = {z} with residual {:.3e} for target {target}",
                    res.norm()
                )));
            }
        }
    }
    if res.norm() <= NEWTON_TOL * scale {
        return Ok((z, root));
    }
    Err(Error::NewtonDivergence(format!(
        "no convergence in {NEWTON_MAX_ITER} iterations for target {target}: residual {:.3e}",
        res.norm()
    )))
}

pub fn block_map(geometry: &BlockGeometry, xi: Complex64) -> Result<Complex64> {
    geometry.eval(xi).map(|(g, _)| g)
}

pub fn block_map_derivative(geometry: &BlockGeometry, xi: Complex64) -> Result<Complex64> {
    geometry.eval(xi).map(|(_, dg)| dg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn form1_short_vertices() {
        let g = BlockGeometry::new(BlockKind::Form1Short, 1.0).unwrap();
        let c = 1.5;
        let top = Complex64::new(0.0, PI * c / 2.0);
        assert!(close(block_map(&g, top).unwrap(), I, 1e-14));
        assert!(close(block_map(&g, -top).unwrap(), -I, 1e-14));
        let left = Complex64::new(g.rect.re_min, PI * c / 2.0);
        assert!(close(block_map(&g, left).unwrap(), 2.0 * I, 1e-14));
        assert!(close(block_map(&g, g.anchor_plus).unwrap(), I * 1.5, 1e-14));
        assert!(close(block_map_derivative(&g, g.anchor_plus).unwrap(), -I, 1e-14));
        assert!(close(block_map_derivative(&g, g.anchor_minus).unwrap(), I, 1e-14));
        assert!((g.vertical_side_length() - PI * 1.5).abs() < 1e-14);
    }

    #[test]
    fn form2_short_anchors() {
        let g = BlockGeometry::for_degree(SyllableKind::Form2, 3).unwrap();
        assert_eq!(g.kind, BlockKind::Form2Short);
        assert!(close(block_map(&g, g.anchor_plus).unwrap(), 0.5 * I, 1e-14));
        assert!(close(block_map_derivative(&g, g.anchor_plus).unwrap(), I, 1e-14));
        assert!(close(block_map(&g, g.anchor_minus).unwrap(), -0.5 * I, 1e-15));
        assert!(close(block_map_derivative(&g, g.anchor_minus).unwrap(), -I, 1e-15));
        let g = BlockGeometry::for_degree(SyllableKind::Form2, 4).unwrap();
        assert!(close(block_map(&g, g.anchor_plus).unwrap(), -0.5 * I, 1e-14));
        assert!((g.vertical_side_length() - (2.0 * PI + 1.0 / 9.0)).abs() < 1e-14);
    }

    #[test]
    fn form1_long_anchor() {
        let g = BlockGeometry::new(BlockKind::Form1Long, 2.0).unwrap();
        let (v, d) = g.eval(g.anchor_plus).unwrap();
        assert!(close(v, I * 2.5, 1e-12), "{v}");
        assert!(close(d, -I, 1e-12), "{d}");
        let (v, d) = g.eval(g.anchor_minus).unwrap();
        assert!(close(v, -I * 2.5, 1e-12), "{v}");
        assert!(close(d, I, 1e-12), "{d}");
        assert!((g.anchor_plus.im - g.rect.im_max).abs() < 1e-12);
    }

    #[test]
    fn form1_long_inverts_near_and_far() {
        let g = BlockGeometry::new(BlockKind::Form1Long, 3.0).unwrap();
        let ev = FmEvaluator::new(3.0).unwrap();
        let spec = QuadratureSpec::default();
        for xi in [
            g.anchor_plus + Complex64::new(0.03, -0.04),
            g.anchor_plus + Complex64::new(0.05, 0.05),
            Complex64::new(-0.2, 0.1),
            Complex64::new(g.rect.re_min * 0.7, g.rect.im_max * 0.5),
            Complex64::new(g.rect.re_min * 0.95, -g.rect.im_max * 0.9),
        ] {
            let (z, d) = g.eval(xi).unwrap();
            if (xi - g.anchor_plus).norm() > LOCAL_RADIUS {
                assert!(z.re <= 0.0, "{xi} -> {z}");
                let back = ev.value(z, &spec).unwrap() * g.r;
                assert!(close(back, xi, 1e-10), "{xi} -> {z} -> {back}");
            }
            // derivative check by a difference quotient
            let h = 1e-5;
            let (zp, _) = g.eval(xi + h).unwrap();
            let (zm, _) = g.eval(xi - h).unwrap();
            assert!(close((zp - zm) / (2.0 * h), d, 1e-6), "{xi}");
        }
    }

    #[test]
    fn form2_long_anchors() {
        for d in [5u64, 6] {
            let g = BlockGeometry::for_degree(SyllableKind::Form2, d).unwrap();
            assert_eq!(g.kind, BlockKind::Form2Long);
            let (v, dv) = g.eval(g.anchor_minus).unwrap();
            assert!(close(v, -I, 1e-12) && close(dv, -I, 1e-11), "{v} {dv}");
            let (v, dv) = g.eval(g.anchor_plus).unwrap();
            let want = if d % 2 == 1 { I } else { -I };
            assert!(close(v, want, 1e-12) && close(dv, want, 1e-11), "{v} {dv}");
            assert!(g.anchor_minus.re.abs() < 1e-14);
            assert_eq!(g.anchor_derivatives().1, want);
        }
    }

    #[test]
    fn unavailable() {
        assert!(matches!(BlockGeometry::for_degree(SyllableKind::Singleton, 1), Err(Error::BlockUnavailable(_))));
        assert!(matches!(BlockGeometry::for_degree(SyllableKind::Form1, 1), Err(Error::BlockUnavailable(_))));
        assert!(BlockGeometry::new(BlockKind::Form1Long, 1.5).is_err());
        assert!(BlockGeometry::new(BlockKind::Form1Short, 0.7).is_err());
    }
}

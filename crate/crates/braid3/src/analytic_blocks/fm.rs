//! The elliptic integral
//! `F_M(z) = int_0^z dζ / sqrt((ζ² + M²)(ζ² + (M+1)²))`,
//! with the branch of the root positive on the real axis.
//!
//! The root is continued segment by segment along the integration path:
//! on `[a, b]` it equals `s(a) * prod_k sqrt((ζ - p_k) / (a - p_k))` with
//! principal roots, which is continuous as long as no branch point `p_k`
//! lies on the segment.

use num_complex::Complex64;

use super::finite;
use super::quadrature::{gauss_kronrod, tanh_sinh, QuadratureRule, QuadratureSpec};
use crate::{Error, Result};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `(ζ² + M²)(ζ² + (M+1)²)`.
pub fn fm_integrand_sq(z: Complex64, m: f64) -> Complex64 {
    let ev = FmEvaluator { m, bp: branch_points(m) };
    ev.poly(z)
}

fn branch_points(m: f64) -> [Complex64; 4] {
    [I * m, -I * m, I * (m + 1.0), -I * (m + 1.0)]
}

/// Evaluates `F_M` and related quantities for a fixed `M`.
#[derive(Debug, Clone)]
pub struct FmEvaluator {
    m: f64,
    bp: [Complex64; 4],
}

impl FmEvaluator {
    pub fn new(m: f64) -> Result<Self> {
        if !(m > 0.0 && m.is_finite()) {
            return Err(Error::Domain(format!("F_M needs M > 0, got {m}")));
        }
        Ok(FmEvaluator { m, bp: branch_points(m) })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn branch_points(&self) -> [Complex64; 4] {
        self.bp
    }

    pub fn poly(&self, z: Complex64) -> Complex64 {
        self.bp.iter().map(|p| z - p).product()
    }

    pub fn poly_prime(&self, z: Complex64) -> Complex64 {
        let z2 = z * z;
        let (a, b) = (self.m * self.m, (self.m + 1.0) * (self.m + 1.0));
        z * 2.0 * (z2 + b) + z * 2.0 * (z2 + a)
    }

    /// `sqrt((ζ² + M²)(ζ² + (M+1)²))` on the principal sheet: analytic off the
    /// slits `±i[M, M+1]`, left limits on the slits themselves.
    pub fn root(&self, z: Complex64) -> Complex64 {
        let side = if z.im >= 0.0 { 1.0 } else { -1.0 };
        let half = |w: Complex64| {
            if w.im == 0.0 && w.re < 0.0 {
                -I * side * (-w.re).sqrt()
            } else {
                w.sqrt()
            }
        };
        half((z - self.bp[0]) * (z - self.bp[1])) * half((z - self.bp[2]) * (z - self.bp[3]))
    }

    /// `F_M'(z)` on the principal sheet.
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        let s = self.root(z);
        if s.norm() == 0.0 {
            return Err(Error::Pole(format!("F_M' is singular at the branch point {z}")));
        }
        finite(s.inv(), "F_M'")
    }

    fn scale(&self) -> f64 {
        self.m + 1.0
    }

    fn branch_point_at(&self, z: Complex64) -> Option<usize> {
        self.bp.iter().position(|p| (z - p).norm() <= 1e-14 * self.scale())
    }

    /// Default path from 0 to `z`: straight, except that points on the
    /// imaginary axis beyond `±iM` are approached from the left half-plane.
    fn default_path(&self, z: Complex64) -> Vec<Complex64> {
        if z.re == 0.0 && z.im.abs() > self.m * (1.0 + 1e-14) {
            vec![Complex64::new(-0.5, z.im)]
        } else {
            Vec::new()
        }
    }

    /// `F_M(z)` along `0, spec.path.., z`.
    pub fn value(&self, z: Complex64, spec: &QuadratureSpec) -> Result<Complex64> {
        self.value_and_root(z, spec).map(|(v, _)| v)
    }

    /// `F_M(z)` and the continued root at `z` (zero if `z` is a branch point).
    pub fn value_and_root(&self, z: Complex64, spec: &QuadratureSpec) -> Result<(Complex64, Complex64)> {
        spec.validate()?;
        let interior = if spec.path.is_empty() { self.default_path(z) } else { spec.path.clone() };
        let mut pts = vec![Complex64::new(0.0, 0.0)];
        pts.extend(interior);
        pts.push(z);
        let s0 = Complex64::new(self.m * (self.m + 1.0), 0.0);
        self.integrate_polyline(&pts, Complex64::new(0.0, 0.0), s0, spec.rule, spec.abs_tol)
    }

    /// Continues `F_M` from `(a, F(a), root(a))` along the straight segment
    /// to `z`. This is how values off the principal sheet are reached.
    pub fn continue_from(
        &self,
        a: Complex64,
        fa: Complex64,
        sa: Complex64,
        z: Complex64,
        abs_tol: f64,
    ) -> Result<(Complex64, Complex64)> {
        self.integrate_polyline(&[a, z], fa, sa, QuadratureRule::Auto, abs_tol)
    }

    /// The continued root at `z`, reached from `(a, root(a))` along a segment.
    pub fn continue_root(&self, a: Complex64, sa: Complex64, z: Complex64) -> Complex64 {
        self.bp.iter().fold(sa, |acc, p| acc * ((z - p) / (a - p)).sqrt())
    }

    fn integrate_polyline(
        &self,
        pts: &[Complex64],
        f_start: Complex64,
        s_start: Complex64,
        rule: QuadratureRule,
        abs_tol: f64,
    ) -> Result<(Complex64, Complex64)> {
        let nseg = pts.len() - 1;
        let tol = abs_tol / nseg as f64;
        let mut acc = f_start;
        let mut s = s_start;
        for (i, w) in pts.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            let last = i + 1 == nseg;
            let end_bp = self.branch_point_at(b);
            if end_bp.is_some() && !last {
                return Err(Error::Domain(format!("path passes through the branch point {b}")));
            }
            if self.branch_point_at(a).is_some() {
                return Err(Error::Domain(format!("path leaves from the branch point {a}")));
            }
            self.check_segment(a, b, end_bp)?;
            let dz = b - a;
            if dz.norm() == 0.0 {
                continue;
            }
            let ratio_base: Vec<Complex64> = self.bp.iter().map(|p| a - p).collect();
            let eval = |t: f64, u: f64| -> Complex64 {
                let z = if t <= 0.5 { a + dz * t } else { b - dz * u };
                let mut root = s;
                for (k, p) in self.bp.iter().enumerate() {
                    let diff = if end_bp == Some(k) { -dz * u } else { z - p };
                    root *= (diff / ratio_base[k]).sqrt();
                }
                dz / root
            };
            let use_ts = match rule {
                QuadratureRule::TanhSinh => true,
                QuadratureRule::GaussKronrod => false,
                QuadratureRule::Auto => end_bp.is_some(),
            };
            let piece = if use_ts {
                tanh_sinh(|_, t, u| eval(t, u), 0.0, 1.0, tol)?
            } else {
                if end_bp.is_some() {
                    return Err(Error::QuadratureFailure(
                        "Gauss-Kronrod cannot integrate up to a branch point; use tanh-sinh".into(),
                    ));
                }
                gauss_kronrod(|t| eval(t, 1.0 - t), 0.0, 1.0, tol)?
            };
            acc += piece;
            s = match end_bp {
                Some(_) => Complex64::new(0.0, 0.0),
                None => self.continue_root(a, s, b),
            };
        }
        Ok((finite(acc, "F_M")?, s))
    }

    fn check_segment(&self, a: Complex64, b: Complex64, end_bp: Option<usize>) -> Result<()> {
        let dz = b - a;
        let len2 = dz.norm_sqr();
        for (k, p) in self.bp.iter().enumerate() {
            if end_bp == Some(k) {
                continue;
            }
            let t = if len2 == 0.0 { 0.0 } else { (((p - a) * dz.conj()).re / len2).clamp(0.0, 1.0) };
            if (a + dz * t - p).norm() <= 1e-12 * self.scale() {
                return Err(Error::Domain(format!("path passes through the branch point {p}")));
            }
        }
        Ok(())
    }

    /// `|F_M(i(M+1)) - F_M(iM)|`, the length of the slit image, as a real
    /// endpoint-singular integral.
    pub fn slit_gap(&self, abs_tol: f64) -> Result<f64> {
        let m = self.m;
        let v = tanh_sinh(
            |y, da, db| {
                let q = da * (y + m) * db * (m + 1.0 + y);
                Complex64::new(1.0 / q.sqrt(), 0.0)
            },
            m,
            m + 1.0,
            abs_tol,
        )?;
        Ok(v.re)
    }
}

/// `F_M(z)` along the path in `spec`.
pub fn fm(z: Complex64, m: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    FmEvaluator::new(m)?.value(z, spec)
}

/// `F_M'(z)` on the principal sheet.
pub fn fm_derivative(z: Complex64, m: f64) -> Result<Complex64> {
    FmEvaluator::new(m)?.derivative(z)
}

/// `|F_M(i(M+1)) - F_M(iM)|`.
pub fn fm_slit_gap(m: f64) -> Result<f64> {
    FmEvaluator::new(m)?.slit_gap(1e-14)
}

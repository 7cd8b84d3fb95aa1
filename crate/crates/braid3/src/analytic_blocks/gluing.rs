//! Quasiconformal gluing of block maps along a word.
//!
//! Blocks are reflected so their anchor derivatives match, stacked along the
//! imaginary axis with upper anchor on next lower anchor, and blended by
//! `g = (1-χ) g_j + χ g_{j+1}` in the band `|Im(ξ - p)| <= 1/18` around
//! each junction `p`. The Beltrami coefficient is then estimated by finite
//! differences and compared with its closed form.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use super::blocks::{BlockGeometry, BlockKind};
use crate::braid_words::{free_reduce, syllable_decompose, Block, FreeWord, Generator, SyllableKind};
use crate::{Error, Result};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// Bound on `|μ|` to be certified.
pub const MU_BOUND: f64 = 0.1712;
/// Bound on the dilatation `(1+k)/(1-k)` implied by `MU_BOUND`.
pub const QC_BOUND: f64 = 1.414;

const BAND: f64 = 1.0 / 18.0;
const FD_STEP: f64 = 1e-3;
const MAX_GRID_NODES: usize = 2001;

/// Reflection variant applied to a block map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
struct Variant {
    /// `G(ξ) = conj g(conj ξ)`
    reflect_real: bool,
    /// `G(ξ) = -conj g(-conj ξ)`
    reflect_imag: bool,
}

impl Variant {
    fn all() -> [Variant; 4] {
        [(false, false), (true, false), (false, true), (true, true)]
            .map(|(reflect_real, reflect_imag)| Variant { reflect_real, reflect_imag })
    }

    /// Argument at which the base map is evaluated.
    fn pull(self, xi: Complex64) -> Complex64 {
        let mut z = xi;
        if self.reflect_real {
            z = z.conj();
        }
        if self.reflect_imag {
            z = -z.conj();
        }
        z
    }

    /// Value and derivative of the transformed map from the base ones.
    fn push(self, g: Complex64, dg: Complex64) -> (Complex64, Complex64) {
        let (mut g, mut dg) = (g, dg);
        if self.reflect_imag {
            g = -g.conj();
            dg = dg.conj();
        }
        if self.reflect_real {
            g = g.conj();
            dg = dg.conj();
        }
        (g, dg)
    }

    /// Lower and upper anchors of the transformed block.
    fn anchors(self, lo: Complex64, hi: Complex64) -> (Complex64, Complex64) {
        let (mut lo, mut hi) = (lo, hi);
        if self.reflect_imag {
            lo = -lo.conj();
            hi = -hi.conj();
        }
        if self.reflect_real {
            (lo, hi) = (hi.conj(), lo.conj());
        }
        (lo, hi)
    }

    fn anchor_derivatives(self, d_lo: Complex64, d_hi: Complex64) -> (Complex64, Complex64) {
        let (mut a, mut b) = (d_lo, d_hi);
        if self.reflect_imag {
            a = a.conj();
            b = b.conj();
        }
        if self.reflect_real {
            (a, b) = (b.conj(), a.conj());
        }
        (a, b)
    }
}

struct Placed {
    geom: BlockGeometry,
    variant: Variant,
    shift: Complex64,
    offset: Complex64,
}

impl Placed {
    fn eval(&self, xi: Complex64) -> Result<(Complex64, Complex64)> {
        let (g, dg) = self.geom.eval(self.variant.pull(xi - self.shift))?;
        let (g, dg) = self.variant.push(g, dg);
        Ok((g + self.offset, dg))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct JunctionAudit {
    pub index: usize,
    pub point: (f64, f64),
    pub samples: usize,
    pub sup_mu: f64,
    pub sup_mu_analytic: f64,
    pub max_route_discrepancy: f64,
    /// `g_{j+1} - g_j` in the range at the junction, before blending.
    pub range_offset: (f64, f64),
}

fn render_word<S: Serializer>(w: &FreeWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.render())
}

#[derive(Debug, Clone, Serialize)]
pub struct GluingAudit {
    #[serde(serialize_with = "render_word")]
    pub word: FreeWord,
    pub grid_step: f64,
    pub blocks: Vec<BlockKind>,
    /// Finite-difference estimate of `sup |μ|` over the junction squares.
    pub sup_mu: f64,
    /// Closed-form `sup |μ|` on the same samples.
    pub sup_mu_analytic: f64,
    pub qc_dilatation: f64,
    pub margin: f64,
    pub passed: bool,
    pub junctions: Vec<JunctionAudit>,
}

fn chi0(s: f64) -> f64 {
    let s = s.clamp(0.0, 1.0);
    s * s * (3.0 - 2.0 * s)
}

fn chi0_prime(s: f64) -> f64 {
    if (0.0..=1.0).contains(&s) {
        6.0 * s * (1.0 - s)
    } else {
        0.0
    }
}

/// Blend weight `χ(Im(ξ - p) + 1/18)` with `χ(t) = χ0(9t)`, and its `v`-derivative.
fn chi(v: f64) -> (f64, f64) {
    let s = 9.0 * (v + BAND);
    (chi0(s), 9.0 * chi0_prime(s))
}

fn required_derivatives(first: Generator, last: Generator) -> (Complex64, Complex64) {
    let lo = if first == Generator::One { I } else { -I };
    let hi = if last == Generator::One { -I } else { I };
    (lo, hi)
}

fn choose_variant(geom: &BlockGeometry, want: (Complex64, Complex64), negative: bool) -> Result<Variant> {
    let (d_lo, d_hi) = geom.anchor_derivatives();
    let fits: Vec<Variant> = Variant::all()
        .into_iter()
        .filter(|v| {
            let (a, b) = v.anchor_derivatives(d_lo, d_hi);
            (a - want.0).norm() < 1e-12 && (b - want.1).norm() < 1e-12
        })
        .collect();
    fits.iter()
        .copied()
        .find(|v| v.reflect_real == negative)
        .or_else(|| fits.first().copied())
        .ok_or_else(|| Error::BlockUnavailable(format!("no orientation of {:?} fits the junction", geom.kind)))
}

/// Glues the block maps of the syllables of `w` and audits the Beltrami
/// coefficient on a grid of spacing `grid_step` around each junction.
pub fn glue_word(w: &FreeWord, grid_step: f64) -> Result<GluingAudit> {
    if !(grid_step.is_finite() && grid_step > 0.0 && grid_step <= BAND / 2.0) {
        return Err(Error::GridDegenerate(format!("grid step must lie in (0, 1/36], got {grid_step}")));
    }
    let nodes = (2.0 * BAND / grid_step).round() as usize + 1;
    if nodes > MAX_GRID_NODES {
        return Err(Error::GridDegenerate(format!("grid step {grid_step} gives {nodes} nodes per side")));
    }
    let dec = syllable_decompose(w)?;
    let mut placed: Vec<Placed> = Vec::with_capacity(dec.syllables.len());
    let mut height = 0.0;
    for (i, s) in dec.syllables.iter().enumerate() {
        if s.kind == SyllableKind::Singleton {
            return Err(Error::BlockUnavailable(format!("syllable {i} is a singleton, which has no block map")));
        }
        let geom = BlockGeometry::for_syllable(s)?;
        let blocks = dec.syllable_blocks(i);
        let (first, last) = (blocks[0], blocks[blocks.len() - 1]);
        let variant = choose_variant(&geom, required_derivatives(first.gen, last.gen), first.exp < 0)?;
        let (lo, hi) = variant.anchors(geom.anchor_minus, geom.anchor_plus);
        let shift = Complex64::new(-lo.re, height - lo.im);
        let mut p = Placed { geom, variant, shift, offset: Complex64::new(0.0, 0.0) };
        if let Some(prev) = placed.last() {
            let junction = I * height;
            let (want, _) = prev.eval(junction)?;
            let (have, _) = p.eval(junction)?;
            p.offset = want - have;
        }
        height += hi.im - lo.im;
        placed.push(p);
    }

    let mut junctions = Vec::new();
    for j in 0..placed.len().saturating_sub(1) {
        let (a, b) = (&placed[j], &placed[j + 1]);
        // junction sits at the lower anchor of block j+1
        let p = b.shift + b.variant.anchors(b.geom.anchor_minus, b.geom.anchor_plus).0;
        junctions.push(audit_junction(j, a, b, p, nodes)?);
    }
    let sup_mu = junctions.iter().map(|j| j.sup_mu).fold(0.0, f64::max);
    let sup_mu_analytic = junctions.iter().map(|j| j.sup_mu_analytic).fold(0.0, f64::max);
    let qc_dilatation = (1.0 + sup_mu) / (1.0 - sup_mu);
    Ok(GluingAudit {
        word: w.clone(),
        grid_step,
        blocks: placed.iter().map(|p| p.geom.kind).collect(),
        sup_mu,
        sup_mu_analytic,
        qc_dilatation,
        margin: MU_BOUND - sup_mu,
        passed: sup_mu < MU_BOUND && qc_dilatation <= QC_BOUND,
        junctions,
    })
}

fn audit_junction(index: usize, a: &Placed, b: &Placed, p: Complex64, nodes: usize) -> Result<JunctionAudit> {
    let blended = |xi: Complex64| -> Result<Complex64> {
        let (c, _) = chi((xi - p).im);
        let ga = if c < 1.0 { a.eval(xi)?.0 } else { Complex64::new(0.0, 0.0) };
        let gb = if c > 0.0 { b.eval(xi)?.0 } else { Complex64::new(0.0, 0.0) };
        Ok(ga * (1.0 - c) + gb * c)
    };
    let wirtinger = |xi: Complex64, h: f64| -> Result<(Complex64, Complex64)> {
        let gu = (blended(xi + h)? - blended(xi - h)?) / (2.0 * h);
        let gv = (blended(xi + I * h)? - blended(xi - I * h)?) / (2.0 * h);
        Ok((0.5 * (gu - I * gv), 0.5 * (gu + I * gv)))
    };
    let (pa, _) = a.eval(p)?;
    let (pb, _) = b.eval(p)?;
    let mut sup_mu: f64 = 0.0;
    let mut sup_an: f64 = 0.0;
    let mut disc: f64 = 0.0;
    for ix in 0..nodes {
        for iy in 0..nodes {
            let x = -BAND + 2.0 * BAND * ix as f64 / (nodes - 1) as f64;
            let y = -BAND + 2.0 * BAND * iy as f64 / (nodes - 1) as f64;
            let xi = p + Complex64::new(x, y);
            let (d1, db1) = wirtinger(xi, FD_STEP)?;
            let (d2, db2) = wirtinger(xi, FD_STEP / 2.0)?;
            let d = (4.0 * d2 - d1) / 3.0;
            let dbar = (4.0 * db2 - db1) / 3.0;
            let mu = (dbar / d).norm();

            let (ga, dga) = a.eval(xi)?;
            let (gb, dgb) = b.eval(xi)?;
            let (c, cp) = chi(y);
            let num = 0.5 * I * cp * (gb - ga);
            let den = -0.5 * I * cp * (gb - ga) + (1.0 - c) * dga + c * dgb;
            let mu_an = (num / den).norm();
            if !(mu.is_finite() && mu_an.is_finite()) {
                return Err(Error::NonFinite(format!("Beltrami coefficient at {xi}")));
            }
            sup_mu = sup_mu.max(mu);
            sup_an = sup_an.max(mu_an);
            disc = disc.max((mu - mu_an).abs());
        }
    }
    Ok(JunctionAudit {
        index,
        point: (p.re, p.im),
        samples: nodes * nodes,
        sup_mu,
        sup_mu_analytic: sup_an,
        max_route_discrepancy: disc,
        range_offset: ((pb - b.offset - (pa - a.offset)).re, (pb - b.offset - (pa - a.offset)).im),
    })
}

/// Deterministic words whose syllables are all Form1 or Form2 of degree 2..4.
pub fn seeded_glue_words(seed: u64, count: usize) -> Vec<FreeWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n_syl = rng.gen_range(2..=4);
        let mut gen = if rng.gen_bool(0.5) { Generator::One } else { Generator::Two };
        let mut blocks: Vec<Block> = Vec::new();
        let mut last_run_sign: Option<i64> = None;
        for _ in 0..n_syl {
            let d = rng.gen_range(2..=4i64);
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            if rng.gen_bool(0.5) {
                blocks.push(Block::new(gen, sign * d));
                gen = gen.other();
                last_run_sign = None;
            } else {
                // adjacent runs need opposite signs or they merge
                let sign = match last_run_sign {
                    Some(s) => -s,
                    None => sign,
                };
                for _ in 0..d {
                    blocks.push(Block::new(gen, sign));
                    gen = gen.other();
                }
                last_run_sign = Some(sign);
            }
        }
        let w = free_reduce(blocks);
        let Ok(dec) = syllable_decompose(&w) else { continue };
        let ok = dec.syllables.len() >= 2
            && dec.syllables.iter().all(|s| s.kind != SyllableKind::Singleton && (2..=4).contains(&s.degree));
        if ok {
            out.push(w);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid_words::parse_pure_word;

    #[test]
    fn chi_profile() {
        assert_eq!(chi(-BAND), (0.0, 0.0));
        assert_eq!(chi(BAND), (1.0, 0.0));
        let (c, cp) = chi(0.0);
        assert!((c - 0.5).abs() < 1e-15 && (cp - 13.5).abs() < 1e-12);
    }

    #[test]
    fn variants_compose() {
        let v = Variant { reflect_real: true, reflect_imag: true };
        let xi = Complex64::new(0.3, -0.2);
        assert_eq!(v.pull(xi), -xi);
        let (g, dg) = v.push(Complex64::new(1.0, 2.0), Complex64::new(3.0, 4.0));
        assert_eq!((g, dg), (Complex64::new(-1.0, -2.0), Complex64::new(3.0, 4.0)));
    }

    #[test]
    fn example_word_passes() {
        let w = parse_pure_word("a1^2 a2^-2").unwrap();
        let a = glue_word(&w, 1.0 / 90.0).unwrap();
        assert_eq!(a.junctions.len(), 1);
        assert!(a.sup_mu > 0.0 && a.sup_mu < MU_BOUND, "{}", a.sup_mu);
        assert!(a.qc_dilatation <= QC_BOUND && a.passed);
        // the blend is only C^1, so pointwise FD error peaks at the band edges
        assert!(a.junctions[0].max_route_discrepancy < 1e-3);
        assert!((a.sup_mu - a.sup_mu_analytic).abs() < 1e-6);
        assert!((a.margin - (MU_BOUND - a.sup_mu)).abs() < 1e-15);
        assert!((a.qc_dilatation - (1.0 + a.sup_mu) / (1.0 - a.sup_mu)).abs() < 1e-15);
    }

    #[test]
    fn single_syllable_has_no_blend() {
        for s in ["a1^3", "a1 a2 a1", "a2^-4"] {
            let a = glue_word(&parse_pure_word(s).unwrap(), 1.0 / 36.0).unwrap();
            assert_eq!(a.sup_mu, 0.0);
            assert!(a.junctions.is_empty());
        }
    }

    #[test]
    fn long_blocks_glue() {
        let w = parse_pure_word("a1^5 a2^-2").unwrap();
        let a = glue_word(&w, 1.0 / 36.0).unwrap();
        assert_eq!(a.blocks, vec![BlockKind::Form1Long, BlockKind::Form1Short]);
        assert!(a.sup_mu < MU_BOUND, "{}", a.sup_mu);
        assert!(a.junctions[0].max_route_discrepancy < 1e-3);
        assert!((a.sup_mu - a.sup_mu_analytic).abs() < 1e-6);
    }

    #[test]
    fn errors() {
        let w = parse_pure_word("a1^2 a2").unwrap();
        assert!(matches!(glue_word(&w, 1.0 / 36.0), Err(Error::BlockUnavailable(_))));
        let w = parse_pure_word("a1^2 a2^2").unwrap();
        for step in [0.0, -1.0, 0.1, f64::NAN] {
            assert!(matches!(glue_word(&w, step), Err(Error::GridDegenerate(_))));
        }
    }

    #[test]
    fn seeded_words_are_reproducible() {
        let a = seeded_glue_words(11, 3);
        assert_eq!(a, seeded_glue_words(11, 3));
        for w in &a {
            let dec = syllable_decompose(w).unwrap();
            assert!(dec.syllables.len() >= 2);
            assert!(dec.degrees().iter().all(|d| (2..=4).contains(d)));
        }
    }
}

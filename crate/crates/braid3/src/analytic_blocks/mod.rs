//! Numerical side: coverings, the elliptic integral `F_M`, slalom extremal
//! lengths, the holomorphic block maps, gluing, and the constant audits.

mod audit;
mod blocks;
mod covering;
mod elliptic;
mod fm;
mod gluing;
pub mod interval;
mod moebius;
mod quadrature;
mod slalom;
mod witness;

use num_complex::Complex64;

use crate::{Error, Result};

pub use audit::{
    audit_block_constants, audit_upper_bound_arithmetic, audit_vsl_bounds, ArithmeticCheck,
    ArithmeticReport, ConstantAudit, ConstantLemma, ConstantsReport, Relation, VslCheck, VslReport,
    DEFAULT_AUDIT_SAMPLES, DEFAULT_AUDIT_SEED,
};
pub use blocks::{
    block_map, block_map_derivative, BlockGeometry, BlockKind, Rect, NEWTON_MAX_ITER, NEWTON_TOL,
};
pub use covering::{covering_f, covering_f1, covering_f2, covering_f2_exp};
pub use elliptic::ellip_k;
pub use fm::{fm, fm_derivative, fm_integrand_sq, fm_slit_gap, FmEvaluator};
pub use gluing::{glue_word, seeded_glue_words, GluingAudit, JunctionAudit, MU_BOUND, QC_BOUND};
pub use moebius::{phi1, phi2, MoebiusMap};
pub use quadrature::{gauss_kronrod, path_integral, tanh_sinh, QuadratureRule, QuadratureSpec};
pub use slalom::{
    half_slalom_extremal, inversive_distance, slalom_extremal_bounds, slalom_extremal_exact, slalom_proof_bounds,
    slalom_y_minus, slalom_y_plus,
};
pub use witness::{pb_witness, tr_witness, WitnessReport};

/// Complex scalar used throughout the numerical modules.
pub type ComplexScalar = Complex64;

/// Rejects NaN and infinite results.
pub(crate) fn finite(z: Complex64, what: &str) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what.to_string()))
    }
}

//! Exact operators on irreducibles of `SU(2)^c × Tⁿ`, their
//! characteristic polynomials and resultants, simplicity certificates and
//! a floating-point sampler.

pub mod certify;
pub mod gaussian;
pub mod numeric;
pub mod operator;
pub mod poly;

pub use certify::{certify, CertStatus, Certificate, Strategy};
pub use numeric::{numeric_spectrum, NumericSpectrum};
pub use operator::{
    abc_values, build_operator, char_poly, exact_spectrum, irrep_matrices, ExactOperator, GroupSpec, IrrepSpec,
    MetricParam,
};
pub use poly::{resultant, RationalPoly};

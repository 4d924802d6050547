//! Exact big-integer verification of the lune-intersection lemma:
//! polynomial rings over Z[sqrt(3)], Sylvester resultants, the published
//! identities, and a floating-point sampling cross-check of the gap
//! between a lune circle and its image under the covering correspondence.

pub mod certificate;
pub mod intpoly;
pub mod surd;
pub mod sylvester;

pub use certificate::{
    appendix_certificate, build_curve_equation, CertCheck, CertificateReport, CurveEq,
};
pub use intpoly::IntPoly2;
pub use surd::SurdPoly;
pub use sylvester::{sylvester_matrix, sylvester_resultant, SurdPolyInV};

use num_complex::Complex64 as C64;

use crate::corr::cov_images;
use crate::error::{Error, Result};

/// Samples the circle C_d through 1 and 7 with center 4 - d i, maps each
/// sample by both covering branches, and reports the minimal distance
/// from the image points back to C_d, skipping samples within 0.1 rad of
/// Z = 1 (where the curves are tangent at d = ±sqrt(3)).
pub fn numeric_gap_check(d: f64, samples: usize) -> Result<f64> {
    if d.abs() > surd::SQRT3 + 1e-12 {
        return Err(Error::DomainError(format!(
            "|d| = {} exceeds sqrt(3)",
            d.abs()
        )));
    }
    if samples < 16 {
        return Err(Error::DomainError("need at least 16 samples".into()));
    }
    let center = C64::new(4.0, -d);
    let radius = (C64::new(7.0, 0.0) - center).norm();
    let phi1 = (C64::new(1.0, 0.0) - center).arg();
    let tau = std::f64::consts::TAU;
    let mut min_gap = f64::INFINITY;
    for i in 0..samples {
        // Angular offset from Z = 1, wrapped to (-pi, pi].
        let mut off = tau * i as f64 / samples as f64;
        if off > tau / 2.0 {
            off -= tau;
        }
        if off.abs() <= 0.1 {
            continue;
        }
        let z = center + C64::from_polar(radius, phi1 + off);
        for w in cov_images(z).as_array() {
            let gap = ((w - center).norm() - radius).abs();
            if gap < min_gap {
                min_gap = gap;
            }
        }
    }
    Ok(min_gap)
}

//! Closed-form algebra of the (2:2) correspondence family: coordinate
//! changes, the conformal involution fixing 1 and a, the deleted covering
//! correspondence of Q(Z) = Z^3 - 3Z, branch evaluation, and critical data.
//!
//! Everything here is a pure function, generic over the scalar type; the
//! crate root re-exports `f64` aliases.

use num_complex::Complex;
use num_traits::Float;

use crate::error::{Error, Result};

fn lit<T: Float>(x: f64) -> T {
    T::from(x).expect("literal conversion")
}

fn cre<T: Float>(x: f64) -> Complex<T> {
    Complex::new(lit(x), T::zero())
}

/// Distance below which an input counts as sitting on a coordinate pole.
fn pole_tol<T: Float>() -> T {
    lit(1e-12)
}

/// A parameter value together with its derived critical data.
///
/// All fields are in the z-coordinate unless noted otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamA<T: Float> {
    /// The parameter itself.
    pub a: Complex<T>,
    /// Quadratic coefficient of the fixed branch at the parabolic point:
    /// (a-7)/(3(a-1)).
    pub b: Complex<T>,
    /// Critical point -2/(a+1).
    pub c: Complex<T>,
    /// Critical value -1/(a-2).
    pub v: Complex<T>,
}

impl<T: Float> ParamA<T> {
    /// Builds the parameter record, rejecting a in {1, 2, -1} where the
    /// correspondence or its critical data degenerate.
    pub fn new(a: Complex<T>) -> Result<Self> {
        let tol = pole_tol::<T>();
        for excl in [1.0, 2.0, -1.0] {
            if (a - cre(excl)).norm() < tol {
                return Err(Error::InvalidParam(format!("a = {} is excluded", excl)));
            }
        }
        let one = cre::<T>(1.0);
        let b = (a - cre(7.0)) / ((a - one) * cre(3.0));
        let c = -(cre::<T>(2.0)) / (a + one);
        let v = -one / (a - cre(2.0));
        Ok(ParamA { a, b, c, v })
    }

    pub fn from_f64(a: Complex<f64>) -> Result<Self> {
        Self::new(Complex::new(lit(a.re), lit(a.im)))
    }
}

/// Two correspondence images of a point, with a flag for merged roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPair<T: Float> {
    pub w1: Complex<T>,
    pub w2: Complex<T>,
    pub merged: bool,
}

impl<T: Float> BranchPair<T> {
    pub fn as_array(&self) -> [Complex<T>; 2] {
        [self.w1, self.w2]
    }
}

/// Z = (az + 1)/(z + 1); pole at z = -1.
pub fn z_to_upper<T: Float>(z: Complex<T>, p: &ParamA<T>) -> Result<Complex<T>> {
    let den = z + cre(1.0);
    if den.norm() < pole_tol() {
        return Err(Error::PoleInput);
    }
    Ok((p.a * z + cre(1.0)) / den)
}

/// z = (Z - 1)/(a - Z); pole at Z = a.
pub fn upper_to_z<T: Float>(zz: Complex<T>, p: &ParamA<T>) -> Result<Complex<T>> {
    let den = p.a - zz;
    if den.norm() < pole_tol() {
        return Err(Error::PoleInput);
    }
    Ok((zz - cre(1.0)) / den)
}

/// z' = (a - 1) z.
pub fn z_to_zprime<T: Float>(z: Complex<T>, p: &ParamA<T>) -> Complex<T> {
    (p.a - cre(1.0)) * z
}

/// The unique conformal involution of the Z-plane fixing Z = 1 and Z = a:
/// J(Z) = ((1+a)Z - 2a)/(2Z - (1+a)).
pub fn involution_j<T: Float>(zz: Complex<T>, p: &ParamA<T>) -> Result<Complex<T>> {
    let s = p.a + cre(1.0);
    let den = zz * cre(2.0) - s;
    if den.norm() < pole_tol() {
        return Err(Error::PoleInput);
    }
    Ok((s * zz - p.a * cre(2.0)) / den)
}

/// J'(Z) = -(a-1)^2 / (2Z - (1+a))^2.
pub fn involution_j_deriv<T: Float>(zz: Complex<T>, p: &ParamA<T>) -> Result<Complex<T>> {
    let den = zz * cre(2.0) - (p.a + cre(1.0));
    if den.norm() < pole_tol() {
        return Err(Error::PoleInput);
    }
    let d = p.a - cre(1.0);
    Ok(-(d * d) / (den * den))
}

/// The two roots W of W^2 + ZW + Z^2 = 3 (the deleted covering
/// correspondence of Q(Z) = Z^3 - 3Z, in the co-critical slot).
///
/// Uses the sign-matched stable quadratic formula for the larger root and
/// the root product Z^2 - 3 for the other.
pub fn cov_images<T: Float>(zz: Complex<T>) -> BranchPair<T> {
    let disc = cre::<T>(12.0) - zz * zz * cre(3.0);
    let merged = disc.norm() < lit::<T>(1e-14) * (T::one() + zz.norm_sqr());
    let mut s = disc.sqrt();
    // Sign-match so Z and s do not cancel.
    if zz.re * s.re + zz.im * s.im < T::zero() {
        s = -s;
    }
    let w1 = -(zz + s) / cre(2.0);
    let prod = zz * zz - cre(3.0);
    let w2 = if w1.norm() > pole_tol() {
        prod / w1
    } else {
        -zz - w1
    };
    BranchPair { w1, w2, merged }
}

/// dW/dZ along a covering branch through (Z, W): -(W + 2Z)/(2W + Z).
pub fn cov_branch_deriv<T: Float>(zz: Complex<T>, w: Complex<T>) -> Result<Complex<T>> {
    let den = w * cre(2.0) + zz;
    if den.norm() < pole_tol() {
        return Err(Error::BranchPointOnCycle);
    }
    Ok(-(w + zz * cre(2.0)) / den)
}

/// The two correspondence images of z, in the z-coordinate.
pub fn corr_images<T: Float>(z: Complex<T>, p: &ParamA<T>) -> Result<BranchPair<T>> {
    let zz = z_to_upper(z, p)?;
    let cov = cov_images(zz);
    let w1 = upper_to_z(involution_j(cov.w1, p)?, p)?;
    let w2 = upper_to_z(involution_j(cov.w2, p)?, p)?;
    Ok(BranchPair {
        w1,
        w2,
        merged: cov.merged,
    })
}

/// The two correspondence preimages of w, in the z-coordinate.
///
/// With W the Z-coordinate of w, preimages Z solve Z^2 + J(W) Z + J(W)^2 = 3,
/// i.e. they are the covering partners of J(W).
pub fn corr_preimages<T: Float>(w: Complex<T>, p: &ParamA<T>) -> Result<BranchPair<T>> {
    let ww = z_to_upper(w, p)?;
    let y = involution_j(ww, p)?;
    let cov = cov_images(y);
    let z1 = upper_to_z(cov.w1, p)?;
    let z2 = upper_to_z(cov.w2, p)?;
    Ok(BranchPair {
        w1: z1,
        w2: z2,
        merged: cov.merged,
    })
}

/// Relative residual of the defining relation at a (Z, W)-pair in the
/// Z-coordinate: |J(W)^2 + Z J(W) + Z^2 - 3| / (1 + |Z|^2).
pub fn relation_residual<T: Float>(z: Complex<T>, w: Complex<T>, p: &ParamA<T>) -> Result<T> {
    let zz = z_to_upper(z, p)?;
    let ww = z_to_upper(w, p)?;
    let jw = involution_j(ww, p)?;
    let r = jw * jw + zz * jw + zz * zz - cre(3.0);
    Ok(r.norm() / (T::one() + zz.norm_sqr()))
}

/// Defect of the order-3 zig-zag identity of the covering involutions,
/// evaluated by root tracking: starting from the graph point
/// (Z, W) = (Z(z), first covering root), alternately replaces one slot by
/// the tracked other root of the quadratic, six times, and measures the
/// distance back to the start.
pub fn zigzag_defect<T: Float>(z: Complex<T>, p: &ParamA<T>) -> Result<T> {
    let z0 = z_to_upper(z, p)?;
    let start = cov_images(z0);
    if start.merged {
        return Err(Error::BranchTrackingLost);
    }
    let (mut zz, mut w) = (z0, start.w1);
    for step in 0..6 {
        if step % 2 == 0 {
            // Swap the W-slot: other root of W^2 + ZW + Z^2 = 3.
            w = tracked_partner(zz, w)?;
        } else {
            // Swap the Z-slot: the quadratic is symmetric in (Z, W).
            zz = tracked_partner(w, zz)?;
        }
    }
    Ok((zz - z0).norm() + (w - start.w1).norm())
}

/// Given a graph point (fixed, moving), recompute the two roots of the
/// quadratic in the moving slot and return the one that is not `moving`.
fn tracked_partner<T: Float>(fixed: Complex<T>, moving: Complex<T>) -> Result<Complex<T>> {
    let pair = cov_images(fixed);
    let predicted = -fixed - moving;
    let chosen = if (pair.w1 - predicted).norm() <= (pair.w2 - predicted).norm() {
        pair.w1
    } else {
        pair.w2
    };
    if (pair.w1 - pair.w2).norm() < lit::<T>(1e-8) * (T::one() + fixed.norm()) {
        // Near a branch point the two roots coincide; tracking stays valid
        // only when the prediction agrees with the (double) root, as at an
        // exact passage through the branch point.
        if (chosen - predicted).norm() < lit::<T>(1e-8) * (T::one() + fixed.norm()) {
            return Ok(predicted);
        }
        return Err(Error::BranchTrackingLost);
    }
    Ok(chosen)
}

/// Closed form of the quadratic coefficient of the fixed branch at the
/// parabolic point, in the zeta = Z - 1 coordinate: (a-7)/(3(a-1)).
pub fn fixed_branch_quadratic_coeff<T: Float>(p: &ParamA<T>) -> Complex<T> {
    p.b
}

/// Evaluates the fixed branch near the parabolic point: Z = 1 + zeta,
/// covering root tracked toward its tangent-line prediction 1 - zeta,
/// image returned as zeta' = J(W) - 1.
pub fn fixed_branch_zeta<T: Float>(zeta: Complex<T>, p: &ParamA<T>) -> Result<Complex<T>> {
    let zz = cre::<T>(1.0) + zeta;
    let pair = cov_images(zz);
    let predicted = cre::<T>(1.0) - zeta;
    let w = if (pair.w1 - predicted).norm() <= (pair.w2 - predicted).norm() {
        pair.w1
    } else {
        pair.w2
    };
    Ok(involution_j(w, p)? - cre(1.0))
}

/// Finite-difference estimate of the quadratic coefficient of the fixed
/// branch, from samples at +-h and +-ih in zeta; the four-point combination
/// cancels the odd and quartic terms (error O(h^4)).
pub fn estimate_fixed_branch_coeff<T: Float>(p: &ParamA<T>, h: T) -> Result<Complex<T>> {
    if h < lit(1e-4) || h > lit(1e-2) {
        return Err(Error::DomainError("step h must lie in [1e-4, 1e-2]".into()));
    }
    let g = |zeta: Complex<T>| -> Result<Complex<T>> { Ok(fixed_branch_zeta(zeta, p)? - zeta) };
    let hr = Complex::new(h, T::zero());
    let hi = Complex::new(T::zero(), h);
    let num = g(hr)? + g(-hr)? - g(hi)? - g(-hi)?;
    Ok(num / Complex::new(lit::<T>(4.0) * h * h, T::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C64;

    fn p(a: C64) -> ParamA<f64> {
        ParamA::new(a).unwrap()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn param_rejects_excluded_values() {
        for a in [1.0, 2.0, -1.0] {
            assert!(ParamA::<f64>::new(c(a, 0.0)).is_err());
        }
    }

    #[test]
    fn param_derived_fields() {
        let p4 = p(c(4.0, 0.0));
        assert!((p4.b - c(-1.0 / 3.0, 0.0)).norm() < 1e-15);
        assert!((p4.c - c(-0.4, 0.0)).norm() < 1e-15);
        assert!((p4.v - c(-0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn critical_value_matches_involution_of_2() {
        // v_a is the z-coordinate of J_a(2).
        for a in [c(4.0, 0.0), c(5.0, 1.0), c(6.0, -0.7)] {
            let pa = p(a);
            let jz = involution_j(c(2.0, 0.0), &pa).unwrap();
            let v = upper_to_z(jz, &pa).unwrap();
            assert!((v - pa.v).norm() < 1e-12);
        }
    }

    #[test]
    fn coordinate_maps_roundtrip_and_examples() {
        let p4 = p(c(4.0, 0.0));
        assert!((z_to_upper(c(0.0, 0.0), &p4).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert!((upper_to_z(c(-1.0, 0.0), &p4).unwrap() - c(-0.4, 0.0)).norm() < 1e-15);
        // Z -> infinity corresponds to z = -1: check at large |Z|.
        let big = upper_to_z(c(1e14, 0.0), &p4).unwrap();
        assert!((big - c(-1.0, 0.0)).norm() < 1e-12);
        for z in [c(0.3, 0.2), c(-2.0, 1.0), c(5.0, -0.1)] {
            let zz = z_to_upper(z, &p4).unwrap();
            let back = upper_to_z(zz, &p4).unwrap();
            assert!((back - z).norm() < 1e-12 * (1.0 + z.norm()));
        }
        assert_eq!(z_to_upper(c(-1.0, 0.0), &p4), Err(Error::PoleInput));
        assert_eq!(upper_to_z(c(4.0, 0.0), &p4), Err(Error::PoleInput));
    }

    #[test]
    fn involution_examples_and_involutivity() {
        let p4 = p(c(4.0, 0.0));
        assert!((involution_j(c(1.0, 0.0), &p4).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert!((involution_j(c(4.0, 0.0), &p4).unwrap() - c(4.0, 0.0)).norm() < 1e-15);
        assert!((involution_j(c(2.0, 0.0), &p4).unwrap() - c(-2.0, 0.0)).norm() < 1e-15);
        assert!((involution_j(c(-2.0, 0.0), &p4).unwrap() - c(2.0, 0.0)).norm() < 1e-15);
        assert_eq!(involution_j(c(2.5, 0.0), &p4), Err(Error::PoleInput));
    }

    #[test]
    fn cov_images_examples() {
        let r = cov_images(c(1.0, 0.0));
        let mut got = [r.w1, r.w2];
        got.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        assert!((got[0] - c(-2.0, 0.0)).norm() < 1e-14);
        assert!((got[1] - c(1.0, 0.0)).norm() < 1e-14);

        let r = cov_images(c(-1.0, 0.0));
        let mut got = [r.w1, r.w2];
        got.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        assert!((got[0] - c(-1.0, 0.0)).norm() < 1e-14);
        assert!((got[1] - c(2.0, 0.0)).norm() < 1e-14);

        let r = cov_images(c(2.0, 0.0));
        assert!(r.merged);
        assert!((r.w1 - c(-1.0, 0.0)).norm() < 1e-7);
        assert!((r.w2 - c(-1.0, 0.0)).norm() < 1e-7);
    }

    #[test]
    fn corr_images_examples() {
        let p4 = p(c(4.0, 0.0));
        let r = corr_images(c(0.0, 0.0), &p4).unwrap();
        let mut got = [r.w1, r.w2];
        got.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        assert!((got[0] - c(0.0, 0.0)).norm() < 1e-12);
        assert!((got[1] - c(0.5, 0.0)).norm() < 1e-12);

        // a = 5: the images of 0 are {0, 3/7}, frozen via the relation
        // residual oracle (J_5(-2) = 11/5, and Z = 11/5 <-> z = 3/7).
        let p5 = p(c(5.0, 0.0));
        let r = corr_images(c(0.0, 0.0), &p5).unwrap();
        let mut got = [r.w1, r.w2];
        got.sort_by(|x, y| x.re.partial_cmp(&y.re).unwrap());
        assert!((got[0] - c(0.0, 0.0)).norm() < 1e-12);
        assert!((got[1] - c(3.0 / 7.0, 0.0)).norm() < 1e-12);
        for w in [r.w1, r.w2] {
            assert!(relation_residual(c(0.0, 0.0), w, &p5).unwrap() < 1e-9);
        }
    }

    #[test]
    fn preimages_of_parabolic_point_contain_it() {
        let p4 = p(c(4.0, 0.0));
        let r = corr_preimages(c(0.0, 0.0), &p4).unwrap();
        let d = r.w1.norm().min(r.w2.norm());
        assert!(d < 1e-12);
    }

    #[test]
    fn preimages_invert_images() {
        for a in [c(4.0, 0.0), c(5.5, 0.8), c(3.0, -1.2)] {
            let pa = p(a);
            for z in [c(0.3, 0.1), c(-0.2, 0.0), c(1.4, -0.6)] {
                let imgs = corr_images(z, &pa).unwrap();
                for w in imgs.as_array() {
                    let pre = corr_preimages(w, &pa).unwrap();
                    let d = (pre.w1 - z).norm().min((pre.w2 - z).norm());
                    assert!(d < 1e-9, "a={a}, z={z}, d={d}");
                }
            }
        }
    }

    #[test]
    fn zigzag_examples() {
        let p4 = p(c(4.0, 0.0));
        assert!(zigzag_defect(c(0.3, 0.1), &p4).unwrap() < 1e-9);
        let p5 = p(c(5.0, 0.0));
        assert!(zigzag_defect(c(0.0, 0.0), &p5).unwrap() < 1e-12);
        let pc = p(c(4.0, 0.5));
        assert!(zigzag_defect(c(-0.2, 0.0), &pc).unwrap() < 1e-9);
    }

    #[test]
    fn parabolic_multiplier_is_one() {
        for a in [c(4.0, 0.0), c(5.0, 1.3), c(6.5, -0.4)] {
            let pa = p(a);
            let one = c(1.0, 0.0);
            let dcov = cov_branch_deriv(one, one).unwrap();
            let dj = involution_j_deriv(one, &pa).unwrap();
            assert!((dcov * dj - one).norm() < 1e-10);
        }
    }

    #[test]
    fn quadratic_coeff_closed_form_examples() {
        assert!(fixed_branch_quadratic_coeff(&p(c(7.0, 0.0))).norm() < 1e-15);
        assert!(
            (fixed_branch_quadratic_coeff(&p(c(4.0, 0.0))) - c(-1.0 / 3.0, 0.0)).norm() < 1e-15
        );
        assert!(
            (fixed_branch_quadratic_coeff(&p(c(5.0, 0.0))) - c(-1.0 / 6.0, 0.0)).norm() < 1e-15
        );
    }

    #[test]
    fn estimator_matches_closed_form() {
        for a in [c(4.0, 0.0), c(5.0, 0.9), c(6.0, -0.5)] {
            let pa = p(a);
            let est = estimate_fixed_branch_coeff(&pa, 1e-3).unwrap();
            assert!((est - pa.b).norm() < 1e-5, "a={a}");
        }
        assert!(estimate_fixed_branch_coeff(&p(c(4.0, 0.0)), 0.5).is_err());
    }
}

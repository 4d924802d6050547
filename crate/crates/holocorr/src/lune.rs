//! Parameter-space lunes (the theta-lune through 1 and 7, its truncation,
//! and the doubly truncated compact K) and the dynamical sector test, plus
//! the sampled containment check of the image of the dynamical lune.
//!
//! The dynamical lune L_a is the open region bounded by the two arcs of
//! circles through Z = 1 and Z = a whose tangents at Z = 1 make angles
//! +-theta with the positive real axis; equivalently
//! |arg((a-1)(Z-1)/(a-Z))| < theta.

use num_complex::Complex;
use num_traits::Float;

use crate::corr::{cov_images, involution_j, z_to_zprime, ParamA};
use crate::error::{Error, Result};

fn lit<T: Float>(x: f64) -> T {
    T::from(x).expect("literal conversion")
}

fn cre<T: Float>(x: f64) -> Complex<T> {
    Complex::new(lit(x), T::zero())
}

/// Angles defining the lunes and the truncation disc around a = 7.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LuneConfig<T: Float> {
    pub theta: T,
    pub theta_hat: T,
    pub u7_radius: T,
}

impl<T: Float> LuneConfig<T> {
    pub fn new(theta: T, theta_hat: T, u7_radius: T) -> Result<Self> {
        let third_pi = lit::<T>(std::f64::consts::FRAC_PI_3);
        let half_pi = lit::<T>(std::f64::consts::FRAC_PI_2);
        // Allow a hair below pi/3 for rounding of user-supplied values.
        let ok = theta >= third_pi - lit(1e-12)
            && theta < theta_hat
            && theta_hat < half_pi
            && u7_radius > T::zero();
        if !ok {
            return Err(Error::DomainError(
                "require pi/3 <= theta < theta_hat < pi/2 and u7_radius > 0".into(),
            ));
        }
        Ok(LuneConfig {
            theta,
            theta_hat,
            u7_radius,
        })
    }
}

impl<T: Float> Default for LuneConfig<T> {
    fn default() -> Self {
        LuneConfig {
            theta: lit(std::f64::consts::FRAC_PI_3),
            theta_hat: lit(0.45 * std::f64::consts::PI),
            u7_radius: lit(0.05),
        }
    }
}

/// Membership in the open parameter lune L_theta = {|arg((a-1)/(7-a))| < theta}.
pub fn in_param_lune<T: Float>(a: Complex<T>, cfg: &LuneConfig<T>) -> bool {
    let num = a - cre(1.0);
    let den = cre::<T>(7.0) - a;
    if num.norm() == T::zero() || den.norm() == T::zero() {
        return false;
    }
    (num / den).arg().abs() < cfg.theta
}

/// Membership in the open truncated lune L'_theta (L_theta intersected with
/// the sector |arg((a-1)/(a-2))| < theta_hat).
pub fn in_param_lune_prime<T: Float>(a: Complex<T>, cfg: &LuneConfig<T>) -> bool {
    if !in_param_lune(a, cfg) {
        return false;
    }
    let den = a - cre(2.0);
    if den.norm() == T::zero() {
        return false;
    }
    ((a - cre(1.0)) / den).arg().abs() < cfg.theta_hat
}

/// Membership in the compact K = closure(L'_theta) minus the open disc
/// U(7) of radius u7_radius around 7.
pub fn in_param_lune_k<T: Float>(a: Complex<T>, cfg: &LuneConfig<T>) -> bool {
    let seven = cre::<T>(7.0);
    if (a - seven).norm() <= cfg.u7_radius {
        return false;
    }
    let num = a - cre(1.0);
    let den = seven - a;
    if num.norm() == T::zero() {
        return true; // a = 1 is a cusp of the closure
    }
    if (num / den).arg().abs() > cfg.theta {
        return false;
    }
    let den2 = a - cre(2.0);
    if den2.norm() == T::zero() {
        return false;
    }
    (num / den2).arg().abs() <= cfg.theta_hat
}

/// Membership of z in the dynamical sector V_a: |arg(-(a-1)z)| < theta_hat
/// (<= when `closed`); z' = 0 (the parabolic point) is on the boundary.
pub fn in_dynamical_lune<T: Float>(
    z: Complex<T>,
    p: &ParamA<T>,
    cfg: &LuneConfig<T>,
    closed: bool,
) -> bool {
    let zp = z_to_zprime(z, p);
    if zp.norm() == T::zero() {
        return closed;
    }
    let t = (-zp).arg().abs();
    if closed {
        t <= cfg.theta_hat
    } else {
        t < cfg.theta_hat
    }
}

/// One boundary circle of the dynamical lune L_a: the circle through 1 and
/// a tangent at 1 to the direction e^(i*side*theta).
///
/// Returns (center, radius). Fails only in the degenerate case where a-1
/// is parallel to the tangent (then the "circle" is a straight line), which
/// cannot happen for a strictly inside L_theta with theta' = theta.
fn lune_boundary_circle<T: Float>(a: Complex<T>, theta: T, side: i32) -> Option<(Complex<T>, T)> {
    let q = a - cre(1.0);
    let s_side = T::from(side).unwrap();
    let u = Complex::new((s_side * theta).cos(), (s_side * theta).sin());
    let iu = Complex::new(T::zero(), T::one()) * u;
    // Re(q * conj(iu))
    let denom = q.re * iu.re + q.im * iu.im;
    if denom.abs() < lit::<T>(1e-14) * q.norm_sqr() {
        return None;
    }
    let s = q.norm_sqr() / (lit::<T>(2.0) * denom);
    Some((cre::<T>(1.0) + iu * Complex::new(s, T::zero()), s.abs()))
}

/// Inverse of the z'-coordinate map: Z with (a-1)(Z-1)/(a-Z) = w.
fn zprime_to_upper<T: Float>(w: Complex<T>, a: Complex<T>) -> Complex<T> {
    (w * a + a - cre(1.0)) / (w + a - cre(1.0))
}

/// Signed exterior distance of Z to the dynamical lune L_a with angle
/// theta: negative strictly inside, positive outside, measured to the
/// nearer violated boundary circle.
pub fn lune_signed_distance<T: Float>(zz: Complex<T>, a: Complex<T>, theta: T) -> T {
    let q = a - cre(1.0);
    // Interior calibration point: the image of a positive real z'.
    let z0 = zprime_to_upper(Complex::new(q.norm(), T::zero()), a);
    let mut worst = T::neg_infinity();
    for side in [1, -1] {
        let d = match lune_boundary_circle(a, theta, side) {
            Some((c, r)) => {
                let raw = (zz - c).norm() - r;
                let cal = (z0 - c).norm() - r;
                if cal < T::zero() {
                    raw
                } else {
                    -raw
                }
            }
            None => {
                // Degenerate straight boundary through 1 with direction u.
                let s_side = T::from(side).unwrap();
                let u = Complex::new((s_side * theta).cos(), (s_side * theta).sin());
                let raw = ((zz - cre(1.0)) * u.conj()).im;
                let cal = ((z0 - cre(1.0)) * u.conj()).im;
                if cal < T::zero() {
                    raw
                } else {
                    -raw
                }
            }
        };
        if d > worst {
            worst = d;
        }
    }
    worst
}

/// Membership of a Z-plane point in the open dynamical lune L_a, via the
/// defining argument inequality.
pub fn in_dynamical_lune_upper<T: Float>(zz: Complex<T>, a: Complex<T>, theta: T) -> bool {
    let num = (a - cre(1.0)) * (zz - cre(1.0));
    let den = a - zz;
    if num.norm() == T::zero() || den.norm() == T::zero() {
        return false;
    }
    (num / den).arg().abs() < theta
}

/// Report of a sampled containment check.
#[derive(Debug, Clone, Copy)]
pub struct ContainmentReport<T: Float> {
    pub max_violation: T,
    pub worst_point: Complex<T>,
    pub samples_used: usize,
}

/// Samples the two boundary arcs of the closed lune L-bar_a (uniformly in
/// the angle seen from each boundary circle's center), maps every sample by
/// both branches of the correspondence in the Z-coordinate, and reports the
/// maximal signed exterior distance of the images to L_a, excluding images
/// within 1e-6 of the parabolic point Z = 1.
pub fn check_lune_containment<T: Float>(
    a: Complex<T>,
    cfg: &LuneConfig<T>,
    samples: usize,
) -> Result<ContainmentReport<T>> {
    let seven = cre::<T>(7.0);
    if !(in_param_lune(a, cfg) || (a - seven).norm() < lit(1e-12)) {
        return Err(Error::DomainError(
            "parameter outside L_theta union {7}".into(),
        ));
    }
    if samples < 16 {
        return Err(Error::DomainError("need at least 16 samples".into()));
    }
    let p = ParamA::new(a)?;
    let one = cre::<T>(1.0);
    let pi = lit::<T>(std::f64::consts::PI);
    let wrap = |mut x: T| {
        while x > pi {
            x = x - pi - pi;
        }
        while x <= -pi {
            x = x + pi + pi;
        }
        x
    };
    let q = a - one;
    let mut max_violation = T::neg_infinity();
    let mut worst_point = Complex::new(T::zero(), T::zero());
    let mut used = 0usize;
    for side in [1, -1] {
        let (c, r) = lune_boundary_circle(a, cfg.theta, side)
            .ok_or_else(|| Error::DomainError("degenerate lune boundary".into()))?;
        let a1 = (one - c).arg();
        let a2 = (a - c).arg();
        // The boundary arc is the image of the positive z'-ray; orient the
        // sweep from 1 to a so that it passes through a known ray point.
        let s_side = T::from(side).unwrap();
        let u = Complex::new((s_side * cfg.theta).cos(), (s_side * cfg.theta).sin());
        let probe = zprime_to_upper(u * Complex::new(q.norm(), T::zero()), a);
        let at = wrap((probe - c).arg() - a1);
        let mut span = wrap(a2 - a1);
        let on_arc =
            span != T::zero() && (at >= T::zero()) == (span >= T::zero()) && at.abs() <= span.abs();
        if !on_arc {
            span = if span > T::zero() {
                span - pi - pi
            } else {
                span + pi + pi
            };
        }
        for k in 0..samples {
            let t = T::from(k).unwrap() / T::from(samples - 1).unwrap();
            let ang = a1 + span * t;
            let zz = c + Complex::new(ang.cos(), ang.sin()) * Complex::new(r, T::zero());
            let cov = cov_images(zz);
            for w in cov.as_array() {
                let img = match involution_j(w, &p) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                if (img - one).norm() <= lit(1e-6) {
                    continue;
                }
                used += 1;
                let d = lune_signed_distance(img, a, cfg.theta);
                if d > max_violation {
                    max_violation = d;
                    worst_point = img;
                }
            }
        }
    }
    Ok(ContainmentReport {
        max_violation,
        worst_point,
        samples_used: used,
    })
}

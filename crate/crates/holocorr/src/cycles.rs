//! Fixed points and periodic cycles of the correspondence branch and of
//! the parabolic quadratic family, their multipliers, Newton solvers for
//! superattracting centers, and multiplier matching between the two
//! parameter planes.

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::corr::{cov_branch_deriv, involution_j, involution_j_deriv, z_to_upper, ParamA};
use crate::error::{Error, Result};
use crate::lune::LuneConfig;
use crate::render::{branch_into_lune, pa_map, principal_a};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CycleClass {
    Attracting,
    Repelling,
    Indifferent,
    Superattracting,
    Parabolic,
}

/// Multiplier of a cycle; Infinite when the cycle runs through a branch
/// point of the correspondence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Multiplier {
    Finite(C64),
    Infinite,
}

impl Multiplier {
    pub fn finite(&self) -> Option<C64> {
        match self {
            Multiplier::Finite(m) => Some(*m),
            Multiplier::Infinite => None,
        }
    }
}

/// Classification by multiplier magnitude; parabolic means within 1e-9 of
/// a root of unity of order at most 64.
pub fn classify(multiplier: C64) -> CycleClass {
    let m = multiplier.norm();
    if m < 1e-9 {
        return CycleClass::Superattracting;
    }
    if (m - 1.0).abs() < 1e-9 {
        let ang = multiplier.arg();
        for q in 1..=64u32 {
            let turns = ang * q as f64 / (2.0 * std::f64::consts::PI);
            let near_int = (turns - turns.round()).abs();
            // Angular deviation delta gives |rho - root| ~ delta.
            if near_int * 2.0 * std::f64::consts::PI / q as f64 * q as f64 <= 1e-9 * q as f64 {
                let root =
                    C64::from_polar(1.0, 2.0 * std::f64::consts::PI * turns.round() / q as f64);
                if (multiplier - root).norm() < 1e-9 {
                    return CycleClass::Parabolic;
                }
            }
        }
        return CycleClass::Indifferent;
    }
    if m < 1.0 {
        CycleClass::Attracting
    } else {
        CycleClass::Repelling
    }
}

/// A periodic orbit with its multiplier; for the correspondence the points
/// are in the Z-coordinate, for P_A in the plain coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleData {
    pub period: usize,
    pub points: Vec<C64>,
    pub multiplier: Multiplier,
    pub class: CycleClass,
}

/// JSON-facing record for cycle results.
#[derive(Debug, Clone, Serialize)]
pub struct CycleRecord {
    pub family: String,
    pub period: usize,
    pub param: C64,
    pub multiplier: Option<C64>,
    pub class: CycleClass,
}

impl CycleData {
    pub fn record(&self, family: &str, param: C64) -> CycleRecord {
        CycleRecord {
            family: family.to_string(),
            period: self.period,
            param,
            multiplier: self.multiplier.finite(),
            class: self.class,
        }
    }
}

/// Coefficients (degree 4 down to 0) of the fixed-point polynomial
/// N^2 + Z N D + Z^2 D^2 - 3 D^2 with N = (1+a)Z - 2a, D = 2Z - (1+a).
pub fn fixed_point_quartic(p: &ParamA<f64>) -> [C64; 5] {
    let a = p.a;
    let one = C64::new(1.0, 0.0);
    [
        C64::new(4.0, 0.0),
        -2.0 * (one + a),
        a * a - 2.0 * a - C64::new(11.0, 0.0),
        (one + a) * (C64::new(12.0, 0.0) - 2.0 * a),
        4.0 * a * a - 3.0 * (one + a) * (one + a),
    ]
}

fn poly_eval(coeffs: &[C64], z: C64) -> C64 {
    coeffs
        .iter()
        .fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

fn poly_deriv(coeffs: &[C64]) -> Vec<C64> {
    let n = coeffs.len() - 1;
    coeffs[..n]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (n - i) as f64)
        .collect()
}

/// Synthetic division by (z - r); returns the quotient, dropping the
/// remainder (caller guarantees r is a root).
fn deflate(coeffs: &[C64], r: C64) -> Vec<C64> {
    let mut out = Vec::with_capacity(coeffs.len() - 1);
    let mut acc = C64::new(0.0, 0.0);
    for &c in &coeffs[..coeffs.len() - 1] {
        acc = acc * r + c;
        out.push(acc);
    }
    out
}

/// Roots (with multiplicity) of the branch fixed-point quartic; Z = 1 is
/// always a root of multiplicity at least 2 (the parabolic point).
pub fn branch_fixed_points(p: &ParamA<f64>) -> Vec<(C64, usize)> {
    let quartic = fixed_point_quartic(p);
    let one = C64::new(1.0, 0.0);
    let quad = deflate(&deflate(&quartic, one), one);
    // quad = [q2, q1, q0]
    let (q2, q1, q0) = (quad[0], quad[1], quad[2]);
    let disc = q1 * q1 - 4.0 * q2 * q0;
    let mut s = disc.sqrt();
    if q1.re * s.re + q1.im * s.im < 0.0 {
        s = -s;
    }
    let denom = -(q1 + s) / 2.0;
    let (r1, r2) = if denom.norm() > 1e-300 {
        (denom / q2, q0 / denom)
    } else {
        ((-q1 / (2.0 * q2)), (-q1 / (2.0 * q2)))
    };
    let dq = poly_deriv(&quartic);
    let polish = |mut z: C64| {
        for _ in 0..5 {
            let d = poly_eval(&dq, z);
            if d.norm() < 1e-300 {
                break;
            }
            z -= poly_eval(&quartic, z) / d;
        }
        z
    };
    let mut mult_one = 2usize;
    let mut extras: Vec<C64> = Vec::new();
    for r in [r1, r2] {
        if (r - one).norm() < 1e-8 {
            mult_one += 1;
        } else {
            extras.push(polish(r));
        }
    }
    let mut out = vec![(one, mult_one)];
    // Merge the two extra roots if they coincide.
    if extras.len() == 2 && (extras[0] - extras[1]).norm() < 1e-10 {
        out.push((extras[0], 2));
    } else {
        for r in extras {
            out.push((r, 1));
        }
    }
    out
}

/// Multiplier of a branch cycle given its points in the Z-coordinate; the
/// covering root leading from Z_i to Z_{i+1} is W' = J(Z_{i+1}).
pub fn branch_multiplier(points: &[C64], p: &ParamA<f64>) -> Result<Multiplier> {
    if points.is_empty() {
        return Err(Error::DomainError("empty cycle".into()));
    }
    let mut m = C64::new(1.0, 0.0);
    for (i, &zz) in points.iter().enumerate() {
        let next = points[(i + 1) % points.len()];
        let wp = involution_j(next, p)?;
        let dcov = match cov_branch_deriv(zz, wp) {
            Ok(d) => d,
            Err(Error::BranchPointOnCycle) => return Ok(Multiplier::Infinite),
            Err(e) => return Err(e),
        };
        let dj = involution_j_deriv(wp, p)?;
        m *= dcov * dj;
    }
    Ok(Multiplier::Finite(m))
}

/// One in-lune branch step in the z-coordinate with its derivative.
fn branch_step_with_deriv(
    z: C64,
    p: &ParamA<f64>,
    cfg: &LuneConfig<f64>,
) -> Result<Option<(C64, C64)>> {
    let w = match branch_into_lune(z, p, cfg)? {
        Some(w) => w,
        None => return Ok(None),
    };
    let zz = z_to_upper(z, p)?;
    let ww = z_to_upper(w, p)?;
    let wp = involution_j(ww, p)?;
    let am1 = p.a - C64::new(1.0, 0.0);
    let d_in = am1 / ((z + C64::new(1.0, 0.0)) * (z + C64::new(1.0, 0.0)));
    let d_cov = cov_branch_deriv(zz, wp)?;
    let d_j = involution_j_deriv(wp, p)?;
    let d_out = am1 / ((p.a - ww) * (p.a - ww));
    Ok(Some((w, d_in * d_cov * d_j * d_out)))
}

const PERIOD_WINDOW: usize = 64;
const PERIOD_TOL: f64 = 1e-10;

fn detect_period(history: &[C64]) -> Option<usize> {
    let n = history.len();
    let z = history[n - 1];
    (1..=PERIOD_WINDOW.min(n - 1)).find(|&k| (z - history[n - 1 - k]).norm() < PERIOD_TOL)
}

/// Follows the critical orbit of the correspondence and extracts its
/// attracting cycle, if any; points returned in the Z-coordinate.
pub fn attracting_cycle(a: C64, cfg: &LuneConfig<f64>, max_iter: u32) -> Result<Option<CycleData>> {
    let p = ParamA::new(a)?;
    let mut history: Vec<C64> = vec![p.c];
    let mut z = p.c;
    let mut found: Option<usize> = None;
    for _ in 0..max_iter {
        match branch_into_lune(z, &p, cfg) {
            Ok(Some(w)) => z = w,
            Ok(None) | Err(Error::PoleInput) => return Ok(None),
            Err(e) => return Err(e),
        }
        history.push(z);
        if let Some(k) = detect_period(&history) {
            found = Some(k);
            break;
        }
    }
    let period = match found {
        Some(k) => k,
        None => return Ok(None),
    };
    // Newton-refine the cycle point on the period-p return map.
    let mut z0 = z;
    for _ in 0..60 {
        let mut val = z0;
        let mut deriv = C64::new(1.0, 0.0);
        for _ in 0..period {
            match branch_step_with_deriv(val, &p, cfg) {
                Ok(Some((w, d))) => {
                    val = w;
                    deriv *= d;
                }
                Ok(None) | Err(Error::BranchPointOnCycle) | Err(Error::PoleInput) => {
                    return Ok(None)
                }
                Err(e) => return Err(e),
            }
        }
        let g = val - z0;
        let gp = deriv - C64::new(1.0, 0.0);
        if gp.norm() < 1e-300 {
            break;
        }
        let step = g / gp;
        z0 -= step;
        if step.norm() < 1e-14 {
            break;
        }
    }
    // Collect the refined orbit and its multiplier.
    let mut pts_z = Vec::with_capacity(period);
    let mut mult = C64::new(1.0, 0.0);
    let mut cur = z0;
    for _ in 0..period {
        pts_z.push(cur);
        match branch_step_with_deriv(cur, &p, cfg) {
            Ok(Some((w, d))) => {
                cur = w;
                mult *= d;
            }
            Ok(None) | Err(Error::BranchPointOnCycle) | Err(Error::PoleInput) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    if (cur - z0).norm() > 1e-8 {
        return Ok(None);
    }
    if mult.norm() >= 1.0 - 1e-9 {
        // The nearest return was not an attracting cycle after all.
        return Ok(None);
    }
    let points: Result<Vec<C64>> = pts_z.iter().map(|&zc| z_to_upper(zc, &p)).collect();
    let points = points?;
    Ok(Some(CycleData {
        period,
        points,
        multiplier: Multiplier::Finite(mult),
        class: classify(mult),
    }))
}

fn pa_deriv(z: C64) -> C64 {
    C64::new(1.0, 0.0) - 1.0 / (z * z)
}

/// Attracting (or superattracting) cycle of P_A for B = 1 - A^2, found
/// from the critical orbits of +-1; plain-coordinate points.
pub fn pa_attracting_cycle(b: C64, max_iter: u32) -> Option<CycleData> {
    let a_cap = principal_a(b);
    if a_cap.norm() == 0.0 {
        return None; // parabolic root point
    }
    for crit in [C64::new(-1.0, 0.0), C64::new(1.0, 0.0)] {
        let mut history = vec![crit];
        let mut z = crit;
        let mut found: Option<usize> = None;
        for _ in 0..max_iter {
            if z.norm() < 1e-300 {
                break;
            }
            z = pa_map(z, a_cap);
            if !z.is_finite() || z.norm() > 1e12 {
                break;
            }
            history.push(z);
            if let Some(k) = detect_period(&history) {
                found = Some(k);
                break;
            }
        }
        let period = match found {
            Some(k) => k,
            None => continue,
        };
        match refine_pa_cycle(z, a_cap, period) {
            Some(data) => return Some(data),
            None => continue,
        }
    }
    None
}

fn refine_pa_cycle(seed: C64, a_cap: C64, period: usize) -> Option<CycleData> {
    let mut z0 = seed;
    for _ in 0..60 {
        let mut val = z0;
        let mut deriv = C64::new(1.0, 0.0);
        for _ in 0..period {
            deriv *= pa_deriv(val);
            val = pa_map(val, a_cap);
        }
        let gp = deriv - C64::new(1.0, 0.0);
        if gp.norm() < 1e-300 {
            break;
        }
        let step = (val - z0) / gp;
        z0 -= step;
        if step.norm() < 1e-14 {
            break;
        }
    }
    let mut pts = Vec::with_capacity(period);
    let mut mult = C64::new(1.0, 0.0);
    let mut cur = z0;
    for _ in 0..period {
        pts.push(cur);
        mult *= pa_deriv(cur);
        cur = pa_map(cur, a_cap);
    }
    if (cur - z0).norm() > 1e-8 || mult.norm() >= 1.0 - 1e-9 {
        return None;
    }
    Some(CycleData {
        period,
        points: pts,
        multiplier: Multiplier::Finite(mult),
        class: classify(mult),
    })
}

/// Which family a parameter solve addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterFamily {
    MGamma,
    Per11,
}

fn center_defect(
    family: CenterFamily,
    period: usize,
    param: C64,
    cfg: &LuneConfig<f64>,
) -> Result<C64> {
    match family {
        CenterFamily::MGamma => {
            let p = ParamA::new(param)?;
            let mut z = p.c;
            for _ in 0..period {
                match branch_into_lune(z, &p, cfg)? {
                    Some(w) => z = w,
                    None => return Err(Error::NoConvergence),
                }
            }
            Ok(z - p.c)
        }
        CenterFamily::Per11 => {
            let a_cap = principal_a(param);
            let crit = C64::new(-1.0, 0.0);
            let mut z = crit;
            for _ in 0..period {
                if z.norm() < 1e-300 {
                    return Err(Error::NoConvergence);
                }
                z = pa_map(z, a_cap);
            }
            Ok(z - crit)
        }
    }
}

/// Newton solve for a superattracting center: the parameter at which the
/// critical point is periodic of the given period.
pub fn center_newton(
    family: CenterFamily,
    period: usize,
    seed: C64,
    cfg: &LuneConfig<f64>,
) -> Result<C64> {
    if period == 0 {
        return Err(Error::DomainError("period must be positive".into()));
    }
    let mut x = seed;
    for _ in 0..100 {
        let g = center_defect(family, period, x, cfg)?;
        if g.norm() < 1e-12 {
            return Ok(x);
        }
        let h = 1e-6 * (1.0 + x.norm());
        let hp = C64::new(h, 0.0);
        let gp = (center_defect(family, period, x + hp, cfg)?
            - center_defect(family, period, x - hp, cfg)?)
            / (2.0 * h);
        if gp.norm() < 1e-300 {
            return Err(Error::NoConvergence);
        }
        x -= g / gp;
    }
    Err(Error::NoConvergence)
}

/// Multiplier of the period-p attracting cycle of P_A(B), tracked from a
/// cycle-point seed; returns the refined cycle point too.
fn pa_cycle_multiplier_tracked(b: C64, period: usize, seed: C64) -> Result<(C64, C64)> {
    let a_cap = principal_a(b);
    let mut z0 = seed;
    for _ in 0..80 {
        let mut val = z0;
        let mut deriv = C64::new(1.0, 0.0);
        for _ in 0..period {
            deriv *= pa_deriv(val);
            val = pa_map(val, a_cap);
        }
        let gp = deriv - C64::new(1.0, 0.0);
        if gp.norm() < 1e-300 {
            return Err(Error::NoConvergence);
        }
        let step = (val - z0) / gp;
        z0 -= step;
        if step.norm() < 5e-15 * (1.0 + z0.norm()) {
            break;
        }
    }
    let mut mult = C64::new(1.0, 0.0);
    let mut cur = z0;
    for _ in 0..period {
        mult *= pa_deriv(cur);
        cur = pa_map(cur, a_cap);
    }
    if (cur - z0).norm() > 1e-7 * (1.0 + z0.norm()) {
        return Err(Error::NoConvergence);
    }
    Ok((mult, z0))
}

/// Multiplier-matching approximation of the homeomorphism between the two
/// parameter planes, on hyperbolic parameters: finds the attracting cycle
/// of the correspondence at a, and returns the B for which P_A has an
/// attracting cycle of the same period and multiplier.
///
/// Period 1 is the exact identity B = rho (the finite fixed point of P_A
/// has multiplier 1 - A^2 = B); higher periods are solved by Newton over B
/// with 32-step continuation from the period-p center of the B-plane.
pub fn chi_hat(a: C64, cfg: &LuneConfig<f64>) -> Result<C64> {
    let cyc = attracting_cycle(a, cfg, 100_000)?.ok_or(Error::NotHyperbolic)?;
    let rho = cyc.multiplier.finite().ok_or(Error::NotHyperbolic)?;
    if cyc.period == 1 {
        return Ok(rho);
    }
    let center_seed = per11_center_seed(cyc.period)?;
    let b_center = center_newton(CenterFamily::Per11, cyc.period, center_seed, cfg)?;
    let center_cycle = pa_attracting_cycle(b_center, 50_000).ok_or(Error::NoConvergence)?;
    if center_cycle.period != cyc.period {
        return Err(Error::PeriodMismatch {
            expected: cyc.period,
            found: center_cycle.period,
        });
    }
    let mut b = b_center;
    let mut zstar = center_cycle.points[0];
    let steps = 32;
    for k in 1..=steps {
        let target = rho * (k as f64 / steps as f64);
        // Newton in B on multiplier(B) - target, cycle tracked through.
        for _ in 0..60 {
            let (m, z_ref) = pa_cycle_multiplier_tracked(b, cyc.period, zstar)?;
            zstar = z_ref;
            let g = m - target;
            if g.norm() < 1e-12 {
                break;
            }
            let h = 1e-6 * (1.0 + b.norm());
            let (mp, _) = pa_cycle_multiplier_tracked(b + C64::new(h, 0.0), cyc.period, zstar)?;
            let (mm, _) = pa_cycle_multiplier_tracked(b - C64::new(h, 0.0), cyc.period, zstar)?;
            let gp = (mp - mm) / (2.0 * h);
            if gp.norm() < 1e-300 {
                return Err(Error::NoConvergence);
            }
            b -= g / gp;
        }
    }
    // Confirm the final period.
    let fin = pa_attracting_cycle(b, 50_000).ok_or(Error::NoConvergence)?;
    if fin.period != cyc.period {
        return Err(Error::PeriodMismatch {
            expected: cyc.period,
            found: fin.period,
        });
    }
    Ok(b)
}

/// Real-axis seeds for the low-period superattracting centers of the
/// B-plane (M_1 meets the real axis in [-3, 1]).
fn per11_center_seed(period: usize) -> Result<C64> {
    match period {
        1 => Ok(C64::new(0.3, 0.0)),
        2 => Ok(C64::new(-1.0, 0.0)),
        3 => Ok(C64::new(-1.9, 0.0)),
        4 => Ok(C64::new(-2.2, 0.0)),
        _ => Err(Error::DomainError(format!(
            "no center seed tabulated for period {period}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corr::upper_to_z;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn cfg() -> LuneConfig<f64> {
        LuneConfig::default()
    }

    #[test]
    fn quartic_fixed_points_a5() {
        let p = ParamA::new(c(5.0, 0.0)).unwrap();
        let roots = branch_fixed_points(&p);
        // 4(Z-1)^2 (Z-2)(Z+1)
        let mut flat: Vec<(f64, usize)> = roots.iter().map(|(z, m)| (z.re, *m)).collect();
        flat.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        assert_eq!(flat.len(), 3);
        assert!((flat[0].0 + 1.0).abs() < 1e-10 && flat[0].1 == 1);
        assert!((flat[1].0 - 1.0).abs() < 1e-10 && flat[1].1 == 2);
        assert!((flat[2].0 - 2.0).abs() < 1e-10 && flat[2].1 == 1);
    }

    #[test]
    fn quartic_roots_have_small_residual() {
        for a in [c(4.0, 0.0), c(5.5, 0.7), c(3.2, -1.1)] {
            let p = ParamA::new(a).unwrap();
            let q = fixed_point_quartic(&p);
            for (z, _) in branch_fixed_points(&p) {
                let r = poly_eval(&q, z).norm();
                assert!(r < 1e-10, "a={a} z={z} r={r}");
            }
        }
    }

    #[test]
    fn parabolic_root_multiplicity_jumps_at_seven() {
        let p = ParamA::new(c(7.0, 0.0)).unwrap();
        let roots = branch_fixed_points(&p);
        let total: usize = roots.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 4);
        let at_one = roots
            .iter()
            .find(|(z, _)| (z - c(1.0, 0.0)).norm() < 1e-6)
            .unwrap();
        assert_eq!(at_one.1, 4);
    }

    #[test]
    fn multiplier_examples() {
        let p4 = ParamA::new(c(4.0, 0.0)).unwrap();
        let m = branch_multiplier(&[c(1.0, 0.0)], &p4).unwrap();
        assert!((m.finite().unwrap() - c(1.0, 0.0)).norm() < 1e-12);

        let p5 = ParamA::new(c(5.0, 0.0)).unwrap();
        let m = branch_multiplier(&[c(-1.0, 0.0)], &p5).unwrap();
        assert!(m.finite().unwrap().norm() < 1e-12);

        let m = branch_multiplier(&[c(2.0, 0.0)], &p5).unwrap();
        assert_eq!(m, Multiplier::Infinite);
    }

    #[test]
    fn attracting_cycle_examples() {
        let cyc = attracting_cycle(c(5.0, 0.0), &cfg(), 50_000)
            .unwrap()
            .unwrap();
        assert_eq!(cyc.period, 1);
        assert!(cyc.multiplier.finite().unwrap().norm() < 1e-9);
        assert_eq!(cyc.class, CycleClass::Superattracting);

        assert!(attracting_cycle(c(9.0, 0.0), &cfg(), 5_000)
            .unwrap()
            .is_none());
    }

    #[test]
    fn cycle_points_map_around() {
        let cfg = cfg();
        let a = c(4.372281323269014, 0.0);
        let cyc = attracting_cycle(a, &cfg, 100_000).unwrap().unwrap();
        assert_eq!(cyc.period, 2);
        let p = ParamA::new(a).unwrap();
        for (i, &zz) in cyc.points.iter().enumerate() {
            let z = upper_to_z(zz, &p).unwrap();
            let w = branch_into_lune(z, &p, &cfg).unwrap().unwrap();
            let next = z_to_upper(w, &p).unwrap();
            let expect = cyc.points[(i + 1) % cyc.period];
            assert!((next - expect).norm() < 1e-9);
        }
        // Geometric contraction rate agrees with the refined multiplier.
        let m_dir = branch_multiplier(&cyc.points, &p)
            .unwrap()
            .finite()
            .unwrap();
        let m_cyc = cyc.multiplier.finite().unwrap();
        assert!((m_dir - m_cyc).norm() < 1e-8);
    }

    #[test]
    fn pa_cycle_examples() {
        let cyc = pa_attracting_cycle(c(-1.25, 0.0), 50_000).unwrap();
        assert_eq!(cyc.period, 2);
        assert!(cyc.multiplier.finite().unwrap().norm() < 1e-9);
        // Cycle {1, 1/2} under A = -3/2 or its mirror under A = +3/2.
        let mut res: Vec<f64> = cyc.points.iter().map(|z| z.norm()).collect();
        res.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((res[0] - 0.5).abs() < 1e-9);
        assert!((res[1] - 1.0).abs() < 1e-9);

        assert!(pa_attracting_cycle(c(-15.0, 0.0), 20_000).is_none());
        assert!(pa_attracting_cycle(c(1.0, 0.0), 1_000).is_none());
    }

    #[test]
    fn center_newton_examples() {
        let cfg = cfg();
        let a = center_newton(CenterFamily::MGamma, 1, c(4.5, 0.0), &cfg).unwrap();
        assert!((a - c(5.0, 0.0)).norm() < 1e-9);
        let b = center_newton(CenterFamily::Per11, 1, c(0.3, 0.0), &cfg).unwrap();
        assert!(b.norm() < 1e-9);
        let b = center_newton(CenterFamily::Per11, 2, c(-1.0, 0.0), &cfg).unwrap();
        assert!((b - c(-1.25, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn centers_lie_in_their_loci() {
        let cfg = cfg();
        let a = center_newton(CenterFamily::MGamma, 1, c(4.5, 0.0), &cfg).unwrap();
        assert!(crate::render::in_mgamma(a, &cfg, 10_000).unwrap());
        let b = center_newton(CenterFamily::Per11, 2, c(-1.0, 0.0), &cfg).unwrap();
        assert!(crate::render::in_m1(b, 10_000));
    }

    #[test]
    fn chi_hat_examples() {
        let cfg = cfg();
        let b5 = chi_hat(c(5.0, 0.0), &cfg).unwrap();
        assert!(b5.norm() < 1e-6);

        let a2 = center_newton(CenterFamily::MGamma, 2, c(4.4, 0.0), &cfg).unwrap();
        let b2 = chi_hat(a2, &cfg).unwrap();
        assert!((b2 - c(-1.25, 0.0)).norm() < 1e-4, "b2={b2}");

        // The parabolic tip has no attracting cycle.
        assert_eq!(chi_hat(c(4.0, 0.0), &cfg), Err(Error::NotHyperbolic));
    }

    #[test]
    fn chi_hat_main_component_identity() {
        // On the main (fixed-point) component chi-hat is literally the
        // fixed-point multiplier and lies in the unit disc.
        let cfg = cfg();
        for a in [c(4.7, 0.3), c(5.2, -0.4), c(5.0, 0.5)] {
            if let Ok(Some(cyc)) = attracting_cycle(a, &cfg, 100_000) {
                if cyc.period == 1 {
                    let rho = cyc.multiplier.finite().unwrap();
                    let b = chi_hat(a, &cfg).unwrap();
                    assert_eq!(b, rho);
                    assert!(b.norm() < 1.0);
                }
            }
        }
    }

    #[test]
    fn classify_thresholds() {
        assert_eq!(classify(c(0.0, 0.0)), CycleClass::Superattracting);
        assert_eq!(classify(c(0.5, 0.2)), CycleClass::Attracting);
        assert_eq!(classify(c(1.3, 0.0)), CycleClass::Repelling);
        assert_eq!(classify(c(1.0, 0.0)), CycleClass::Parabolic);
        assert_eq!(classify(c(-1.0, 0.0)), CycleClass::Parabolic);
        let irr = C64::from_polar(1.0, 1.2345);
        assert_eq!(classify(irr), CycleClass::Indifferent);
    }
}

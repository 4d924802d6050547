//! Numerical attracting Fatou coordinates for the three parabolic model
//! maps (P_A, the quadratic z^2 + 1/4, and the Blaschke product h), the
//! pre-Fatou coordinate of the correspondence, the h-conjugacy check, and
//! the Milnor model coordinate on the shift locus of the B-plane.

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::corr::ParamA;
use crate::error::{Error, Result};
use crate::render::{in_m1, pa_map, principal_a};

/// Default iteration depth; the Abel-equation defect of the same-depth
/// evaluation scheme decays like 1/depth^2, and 20000 reaches ~5e-9.
pub const DEFAULT_DEPTH: usize = 20_000;

/// Drift threshold for petal membership: the pre-Fatou clock Re(u) must
/// pass this value and keep increasing for ten consecutive steps.
const PETAL_DRIFT: f64 = 50.0;

/// Which parabolic map a chart belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum MapId {
    /// P_A(z) = z + 1/z + A, parabolic fixed point at infinity.
    PA { a_cap: C64 },
    /// q(z) = z^2 + 1/4, parabolic fixed point 1/2.
    Q14,
    /// h(z) = (z^2 + 1/3)/(z^2/3 + 1), parabolic fixed point 1.
    H,
}

impl MapId {
    pub fn apply(&self, z: C64) -> C64 {
        match self {
            MapId::PA { a_cap } => pa_map(z, *a_cap),
            MapId::Q14 => z * z + C64::new(0.25, 0.0),
            MapId::H => {
                let z2 = z * z;
                (z2 + C64::new(1.0 / 3.0, 0.0)) / (z2 / 3.0 + C64::new(1.0, 0.0))
            }
        }
    }

    /// Pre-Fatou coordinate u conjugating the map to u -> u + 1 + O(1/u)
    /// on the attracting petal.
    pub fn prefatou(&self, z: C64) -> C64 {
        match self {
            MapId::PA { a_cap } => z / a_cap,
            MapId::Q14 => -1.0 / (z - C64::new(0.5, 0.0)),
            MapId::H => {
                let w = (z + C64::new(1.0, 0.0)) / (z - C64::new(1.0, 0.0));
                w * w / 2.0
            }
        }
    }

    /// One step of the map expressed in the pre-Fatou coordinate. These
    /// closed forms avoid the catastrophic cancellation of iterating near
    /// the parabolic point and then dividing by z - fixed_point.
    pub fn apply_u(&self, u: C64) -> C64 {
        match self {
            MapId::PA { a_cap } => u + 1.0 + 1.0 / (a_cap * a_cap * u),
            MapId::Q14 => u * u / (u - C64::new(1.0, 0.0)),
            MapId::H => {
                let t = 2.0 * u + C64::new(1.0, 0.0);
                t * t / (4.0 * u)
            }
        }
    }

    /// The critical value sent to 1 by the normalized chart.
    pub fn normalization_point(&self) -> C64 {
        match self {
            MapId::PA { a_cap } => C64::new(-2.0, 0.0) + a_cap,
            MapId::Q14 => C64::new(0.25, 0.0),
            MapId::H => C64::new(3.0, 0.0),
        }
    }
}

/// A normalized attracting Fatou coordinate phi with phi(map(z)) =
/// phi(z) + 1 and phi(normalization_point) = 1.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FatouChart {
    pub map_id: MapId,
    pub normalization_point: C64,
    /// The a-hat in phi(z) = u_N - N - a_hat ln(u_N) + b/u_N + C, fitted
    /// from the orbit tail.
    pub log_coefficient: C64,
    /// The fitted 1/u_N truncation correction b.
    pub inv_coefficient: C64,
    pub iteration_depth: usize,
    /// Achieved Abel-equation defect at the normalization point.
    pub residual: f64,
    c_const: C64,
}

/// Raw Abel sum u_N - N - a_hat ln u_N after `depth` iterations together
/// with the final pre-Fatou value u_N, with the petal drift check folded
/// into the same pass.
fn abel_raw(map: &MapId, z: C64, a_hat: C64, depth: usize) -> Result<(C64, C64)> {
    let mut u = map.prefatou(z);
    if !u.is_finite() {
        return Err(Error::NotInPetal);
    }
    let mut prev_re = u.re;
    let mut rises = 0u32;
    let mut drifted = false;
    for _ in 0..depth {
        u = map.apply_u(u);
        if !u.is_finite() {
            return Err(Error::NotInPetal);
        }
        if u.re > prev_re {
            rises += 1;
        } else {
            rises = 0;
        }
        if u.re > PETAL_DRIFT && rises >= 10 {
            drifted = true;
        }
        prev_re = u.re;
    }
    if !drifted {
        return Err(Error::NotInPetal);
    }
    Ok((u - C64::new(depth as f64, 0.0) - a_hat * u.ln(), u))
}

impl FatouChart {
    /// Builds a chart: fits the logarithmic coefficient from the orbit
    /// tail of the normalization point, pins the additive constant so that
    /// phi(normalization_point) = 1, and records the Abel defect.
    pub fn new(map_id: MapId, depth: usize) -> Result<Self> {
        if depth < 100 {
            return Err(Error::DomainError("depth must be at least 100".into()));
        }
        let z0 = map_id.normalization_point();
        // Fit a_hat from u_{n+1} - u_n - 1 ~ a_hat / u_n over the tail.
        let mut un = map_id.prefatou(z0);
        for _ in 0..depth / 2 {
            un = map_id.apply_u(un);
        }
        // Least-squares fit of (u_{n+1} - u_n - 1) u_n = a_hat + c / u_n
        // over the tail; the regression removes the leading bias of a
        // plain average.
        let (mut s1, mut sx, mut sxx) =
            (C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        let (mut sy, mut sxy) = (C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        let mut u_prev = un;
        for _ in 0..depth / 2 {
            let u = map_id.apply_u(u_prev);
            let y = (u - u_prev - C64::new(1.0, 0.0)) * u_prev;
            let x = 1.0 / u_prev;
            s1 += C64::new(1.0, 0.0);
            sx += x;
            sxx += x * x;
            sy += y;
            sxy += x * y;
            u_prev = u;
        }
        let det = s1 * sxx - sx * sx;
        let a_hat = if det.norm() > 1e-300 {
            (sy * sxx - sx * sxy) / det
        } else {
            sy / s1
        };
        // The truncation error of the raw sum behaves like b / u_N with a
        // chart constant b; fit it by comparing two depths (Richardson).
        let (raw_n, u_n) = abel_raw(&map_id, z0, a_hat, depth)?;
        let (raw_2n, u_2n) = abel_raw(&map_id, z0, a_hat, 2 * depth)?;
        let inv_coefficient = (raw_2n - raw_n) / (1.0 / u_n - 1.0 / u_2n);
        let corrected = |raw: C64, u: C64| raw + inv_coefficient / u;
        let raw0 = corrected(raw_n, u_n);
        let c_const = C64::new(1.0, 0.0) - raw0;
        let (raw1, u1) = abel_raw(&map_id, map_id.apply(z0), a_hat, depth)?;
        let residual = (corrected(raw1, u1) - raw0 - C64::new(1.0, 0.0)).norm();
        Ok(FatouChart {
            map_id,
            normalization_point: z0,
            log_coefficient: a_hat,
            inv_coefficient,
            iteration_depth: depth,
            residual,
            c_const,
        })
    }

    /// The normalized Fatou coordinate of a petal point.
    pub fn coordinate(&self, z: C64) -> Result<C64> {
        self.coordinate_at_depth(z, self.iteration_depth)
    }

    pub fn coordinate_at_depth(&self, z: C64, depth: usize) -> Result<C64> {
        if (z - self.normalization_point).norm() == 0.0 {
            // Exact by construction.
            return Ok(C64::new(1.0, 0.0));
        }
        let (raw, u) = abel_raw(&self.map_id, z, self.log_coefficient, depth)?;
        Ok(raw + self.inv_coefficient / u + self.c_const)
    }
}

/// Pre-Fatou coordinate of the correspondence at its parabolic point:
/// psi_a(zeta) = -1/(b(a) zeta), conjugating the fixed branch to
/// w -> w + 1 + O(1/w).
pub fn prefatou_psi(zeta: C64, p: &ParamA<f64>) -> Result<C64> {
    if (p.a - C64::new(7.0, 0.0)).norm() < 1e-12 {
        return Err(Error::DegenerateParam("b(a) vanishes at a = 7".into()));
    }
    if zeta.norm() < 1e-300 {
        return Err(Error::PoleInput);
    }
    Ok(-1.0 / (p.b * zeta))
}

/// Maximum defect of the conjugacy phi o P_0 = h o phi with
/// phi(z) = (z+1)/(z-1), over a deterministic sample set in |z| <= 10.
pub fn check_h_conjugacy(samples: usize) -> Result<f64> {
    if samples < 10 {
        return Err(Error::DomainError("need at least 10 samples".into()));
    }
    let phi = |z: C64| (z + C64::new(1.0, 0.0)) / (z - C64::new(1.0, 0.0));
    let p0 = |z: C64| z + 1.0 / z;
    let h = MapId::H;
    let mut worst = 0.0f64;
    // Low-discrepancy deterministic points in the disc of radius 10.
    let mut k = 0usize;
    let mut produced = 0usize;
    while produced < samples {
        k += 1;
        let r = 10.0 * ((k as f64 * 0.754877666).fract()).sqrt();
        let t = 2.0 * std::f64::consts::PI * (k as f64 * 0.569840296).fract();
        let z = C64::from_polar(r, t);
        // Avoid the poles of the two sides.
        if z.norm() < 1e-2 || (z - C64::new(1.0, 0.0)).norm() < 1e-2 {
            continue;
        }
        let lhs = phi(p0(z));
        let rhs = h.apply(phi(z));
        if !lhs.is_finite() || !rhs.is_finite() {
            continue;
        }
        let d = (lhs - rhs).norm();
        if d > worst {
            worst = d;
        }
        produced += 1;
    }
    Ok(worst)
}

/// Result of the Milnor model coordinate on the shift locus.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MilnorPoint {
    /// Index k of the petal-quotient sheet containing the critical value.
    pub entry_index: u32,
    /// The corresponding point in the parabolic basin of z^2 + 1/4.
    pub model_point: C64,
    /// Extended Abel value t of the critical value.
    pub fatou_value: C64,
    /// Inversion residual |phi_Q14(model_point) - (t + k)|.
    pub residual: f64,
}

/// Newton inversion of the Q14 Fatou coordinate at a deep target value.
fn invert_q14(chart: &FatouChart, target: C64) -> Result<C64> {
    let mut w = C64::new(0.5, 0.0) - 1.0 / target;
    let mut best = (f64::INFINITY, w);
    for _ in 0..60 {
        let val = chart.coordinate(w)?;
        let g = val - target;
        if g.norm() < best.0 {
            best = (g.norm(), w);
        }
        if g.norm() < 1e-9 {
            return Ok(w);
        }
        let hstep = 1e-7 * (1.0 + w.norm());
        let vp = chart.coordinate(w + C64::new(hstep, 0.0))?;
        let vm = chart.coordinate(w - C64::new(hstep, 0.0))?;
        let dv = (vp - vm) / (2.0 * hstep);
        if dv.norm() < 1e-300 {
            break;
        }
        w -= g / dv;
        if !w.is_finite() {
            break;
        }
    }
    if best.0 < 1e-6 {
        Ok(best.1)
    } else {
        Err(Error::InversionFailure)
    }
}

/// Milnor model coordinate of a shift-locus parameter B: the image of the
/// critical value v_A = 2 + A in the parabolic basin of z^2 + 1/4, read
/// through normalized Fatou coordinates.
pub fn milnor_coordinate(b: C64, depth: usize) -> Result<MilnorPoint> {
    if (b - C64::new(1.0, 0.0)).norm() == 0.0 || in_m1(b, 20_000) {
        return Err(Error::NotInShiftLocus);
    }
    let a_cap = principal_a(b);
    let chart_pa = FatouChart::new(MapId::PA { a_cap }, depth)?;
    let chart_q = FatouChart::new(MapId::Q14, depth)?;
    let v = C64::new(2.0, 0.0) + a_cap;
    // Petal entry step of the critical value.
    let mut z = v;
    let mut rises = 0u32;
    let mut prev = chart_pa.map_id.prefatou(z).re;
    let mut entry: Option<usize> = None;
    for n in 0..200_000usize {
        let re = chart_pa.map_id.prefatou(z).re;
        if n > 0 {
            if re > prev {
                rises += 1;
            } else {
                rises = 0;
            }
        }
        if re > PETAL_DRIFT && rises >= 10 {
            entry = Some(n);
            break;
        }
        prev = re;
        z = chart_pa.map_id.apply(z);
        if !z.is_finite() {
            return Err(Error::NotInPetal);
        }
    }
    let m = entry.ok_or(Error::NotInPetal)?;
    let mut zm = v;
    for _ in 0..m {
        zm = chart_pa.map_id.apply(zm);
    }
    let t = chart_pa.coordinate(zm)? - C64::new(m as f64, 0.0);
    let k = (1.0 - t.re).ceil().max(0.0) as u32;
    let shifted = t + C64::new(k as f64, 0.0);
    let extra = (30.0 - shifted.re.floor()).max(0.0) as u32;
    let deep = shifted + C64::new(extra as f64, 0.0);
    let mut w = invert_q14(&chart_q, deep)?;
    // Pull back through the Re > 0 inverse branch of z^2 + 1/4.
    for _ in 0..extra {
        let mut s = (w - C64::new(0.25, 0.0)).sqrt();
        if s.re < 0.0 {
            s = -s;
        }
        w = s;
    }
    let residual = (chart_q.coordinate(w)? - shifted).norm();
    Ok(MilnorPoint {
        entry_index: k,
        model_point: w,
        fatou_value: t,
        residual,
    })
}

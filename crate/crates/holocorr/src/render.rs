//! Escape-time engines and raster renderers for the parameter loci, limit
//! sets, and filled Julia sets, plus the regular-set tiling polylines.

use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write as IoWrite;

use crate::corr::{corr_images, corr_preimages, z_to_zprime, ParamA};
use crate::error::{Error, Result};
use crate::lune::{in_dynamical_lune, in_param_lune, LuneConfig};

pub const DEFAULT_PETAL_THRESHOLD: f64 = 1e4;
const HARD_BAILOUT: f64 = 1e8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EscapeStatus {
    Bounded,
    Escaped,
}

/// Per-point escape-time result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EscapeOutcome {
    pub status: EscapeStatus,
    /// Escape step, or max_iter when Bounded.
    pub iterations: u32,
    pub last_point: C64,
}

impl EscapeOutcome {
    pub fn bounded(max_iter: u32, last: C64) -> Self {
        EscapeOutcome {
            status: EscapeStatus::Bounded,
            iterations: max_iter,
            last_point: last,
        }
    }

    pub fn escaped(step: u32, last: C64) -> Self {
        EscapeOutcome {
            status: EscapeStatus::Escaped,
            iterations: step,
            last_point: last,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.status == EscapeStatus::Bounded
    }
}

/// Plane window [re_min, re_max] x [im_min, im_max].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Window {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        if !(re_min < re_max && im_min < im_max) {
            return Err(Error::DomainError(
                "window must have positive extent".into(),
            ));
        }
        Ok(Window {
            re_min,
            re_max,
            im_min,
            im_max,
        })
    }
}

/// Center of cell j out of n between lo and hi.
///
/// Algebraically equal to lo + (j+0.5)(hi-lo)/n, but written in the
/// symmetric form (lo*(2n-2j-1) + hi*(2j+1))/(2n) so that negating the
/// interval negates the centers bit-exactly; this is what makes
/// conjugation-symmetric rasters exact mirror images.
pub fn cell_center(lo: f64, hi: f64, j: usize, n: usize) -> f64 {
    let n2 = 2.0 * n as f64;
    let wj = (2 * j + 1) as f64;
    (lo * (n2 - wj) + hi * wj) / n2
}

/// Grid of escape outcomes; row 0 is the top of the window (im_max side),
/// cells row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Raster {
    pub width: usize,
    pub height: usize,
    pub window: Window,
    pub max_iter: u32,
    pub cells: Vec<EscapeOutcome>,
}

impl Raster {
    /// Complex coordinate of the pixel center at column j, row i.
    pub fn pixel_center(&self, j: usize, i: usize) -> C64 {
        let re = cell_center(self.window.re_min, self.window.re_max, j, self.width);
        // Row 0 at im_max: run the symmetric formula downward.
        let im = cell_center(self.window.im_max, self.window.im_min, i, self.height);
        C64::new(re, im)
    }

    pub fn cell(&self, j: usize, i: usize) -> &EscapeOutcome {
        &self.cells[i * self.width + j]
    }

    pub fn interior_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_bounded()).count()
    }

    /// Grayscale palette: interior 0, exterior scaled escape step.
    pub fn palette_value(&self, cell: &EscapeOutcome) -> u8 {
        match cell.status {
            EscapeStatus::Bounded => 0,
            EscapeStatus::Escaped => {
                (255 * cell.iterations.min(self.max_iter) as u64 / self.max_iter.max(1) as u64)
                    as u8
            }
        }
    }

    /// Binary PPM (P6, maxval 255), grayscale triples.
    pub fn write_ppm<W: IoWrite>(&self, out: &mut W) -> std::io::Result<()> {
        write!(out, "P6\n{} {}\n255\n", self.width, self.height)?;
        let mut buf = Vec::with_capacity(self.width * self.height * 3);
        for cell in &self.cells {
            let v = self.palette_value(cell);
            buf.extend_from_slice(&[v, v, v]);
        }
        out.write_all(&buf)
    }

    /// CSV dump with header `x,y,re,im,status,iterations`.
    pub fn write_csv<W: IoWrite>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "x,y,re,im,status,iterations")?;
        for i in 0..self.height {
            for j in 0..self.width {
                let z = self.pixel_center(j, i);
                let cell = self.cell(j, i);
                let status = match cell.status {
                    EscapeStatus::Bounded => "bounded",
                    EscapeStatus::Escaped => "escaped",
                };
                writeln!(
                    out,
                    "{},{},{:.17e},{:.17e},{},{}",
                    j, i, z.re, z.im, status, cell.iterations
                )?;
            }
        }
        Ok(())
    }
}

/// Applies the correspondence once and selects the image lying in the
/// closed dynamical sector; `None` means the orbit escaped.
///
/// When both images are in the sector, picks the one with smaller
/// |arg(-z')|, then smaller |z'|, then lexicographic (re, im); the angle at
/// z' = 0 counts as 0 (the parabolic point is the fixed branch's image).
pub fn branch_into_lune(z: C64, p: &ParamA<f64>, cfg: &LuneConfig<f64>) -> Result<Option<C64>> {
    let images = corr_images(z, p)?;
    let mut best: Option<(f64, f64, f64, f64, C64)> = None;
    for w in images.as_array() {
        if !in_dynamical_lune(w, p, cfg, true) {
            continue;
        }
        let zp = z_to_zprime(w, p);
        let ang = if zp.norm() == 0.0 {
            0.0
        } else {
            (-zp).arg().abs()
        };
        let key = (ang, zp.norm(), w.re, w.im, w);
        best = match best {
            None => Some(key),
            Some(cur) => {
                if (key.0, key.1, key.2, key.3) < (cur.0, cur.1, cur.2, cur.3) {
                    Some(key)
                } else {
                    Some(cur)
                }
            }
        };
    }
    Ok(best.map(|k| k.4))
}

/// Critical-orbit escape test for the correspondence parameter a.
pub fn mgamma_escape(a: C64, cfg: &LuneConfig<f64>, max_iter: u32) -> Result<EscapeOutcome> {
    let p = ParamA::new(a)?;
    if !in_param_lune(a, cfg) && (a - C64::new(7.0, 0.0)).norm() >= 1e-12 {
        return Ok(EscapeOutcome::escaped(0, p.c));
    }
    let mut z = p.c;
    for i in 0..max_iter {
        match branch_into_lune(z, &p, cfg) {
            Ok(Some(w)) => z = w,
            // A pole hit maps through z = -1 whose images merge at z = 1,
            // outside the sector: classify as escape at this step.
            Ok(None) | Err(Error::PoleInput) => return Ok(EscapeOutcome::escaped(i, z)),
            Err(e) => return Err(e),
        }
    }
    Ok(EscapeOutcome::bounded(max_iter, z))
}

pub fn in_mgamma(a: C64, cfg: &LuneConfig<f64>, max_iter: u32) -> Result<bool> {
    Ok(mgamma_escape(a, cfg, max_iter)?.is_bounded())
}

/// One step of the parabolic quadratic family P_A(z) = z + 1/z + A.
pub fn pa_map(z: C64, a_cap: C64) -> C64 {
    z + 1.0 / z + a_cap
}

/// Principal square root branch A = sqrt(1 - B).
pub fn principal_a(b: C64) -> C64 {
    (C64::new(1.0, 0.0) - b).sqrt()
}

fn pa_orbit_escape(z0: C64, a_cap: C64, max_iter: u32, petal_threshold: f64) -> EscapeOutcome {
    let mut z = z0;
    for i in 0..max_iter {
        if z.norm() < 1e-300 {
            // Pole of P_A: the orbit goes through infinity.
            return EscapeOutcome::escaped(i, z);
        }
        z = pa_map(z, a_cap);
        let escaped = if a_cap.norm() == 0.0 {
            z.re.abs() > petal_threshold
        } else {
            // The Fatou coordinate at infinity is asymptotically z/A, so
            // Re(z/A) is the canonical escape clock.
            (z / a_cap).re > petal_threshold
        };
        if escaped || z.norm() > HARD_BAILOUT {
            return EscapeOutcome::escaped(i + 1, z);
        }
    }
    EscapeOutcome::bounded(max_iter, z)
}

/// Escape outcomes of the two critical orbits (+1 and -1) of P_A, B = 1 - A^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct M1Outcome {
    pub plus: EscapeOutcome,
    pub minus: EscapeOutcome,
}

impl M1Outcome {
    pub fn is_bounded(&self) -> bool {
        self.plus.is_bounded() || self.minus.is_bounded()
    }

    /// Single-cell summary: bounded if either critical orbit is bounded;
    /// otherwise the later of the two escape steps.
    pub fn combined(&self, max_iter: u32) -> EscapeOutcome {
        if self.plus.is_bounded() {
            self.plus
        } else if self.minus.is_bounded() {
            self.minus
        } else if self.plus.iterations >= self.minus.iterations {
            EscapeOutcome::escaped(self.plus.iterations, self.plus.last_point)
        } else {
            let _ = max_iter;
            EscapeOutcome::escaped(self.minus.iterations, self.minus.last_point)
        }
    }
}

pub fn m1_escape(b: C64, max_iter: u32, petal_threshold: f64) -> M1Outcome {
    if (b - C64::new(1.0, 0.0)).norm() == 0.0 {
        // Root point A = 0: inside by convention.
        let z = C64::new(-1.0, 0.0);
        return M1Outcome {
            plus: EscapeOutcome::bounded(max_iter, z),
            minus: EscapeOutcome::bounded(max_iter, z),
        };
    }
    let a_cap = principal_a(b);
    M1Outcome {
        plus: pa_orbit_escape(C64::new(1.0, 0.0), a_cap, max_iter, petal_threshold),
        minus: pa_orbit_escape(C64::new(-1.0, 0.0), a_cap, max_iter, petal_threshold),
    }
}

pub fn in_m1(b: C64, max_iter: u32) -> bool {
    m1_escape(b, max_iter, DEFAULT_PETAL_THRESHOLD).is_bounded()
}

/// Standard Mandelbrot escape iteration from the critical point 0.
pub fn mandelbrot_escape(c: C64, max_iter: u32) -> EscapeOutcome {
    let mut z = C64::new(0.0, 0.0);
    for i in 0..max_iter {
        z = z * z + c;
        if z.norm_sqr() > 4.0 {
            return EscapeOutcome::escaped(i + 1, z);
        }
    }
    EscapeOutcome::bounded(max_iter, z)
}

/// Which parameter locus to render.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocusKind {
    MGamma,
    M1,
    Mandelbrot,
}

fn render_grid<F>(
    window: Window,
    width: usize,
    height: usize,
    max_iter: u32,
    parallel: bool,
    f: F,
) -> Raster
where
    F: Fn(C64) -> EscapeOutcome + Sync,
{
    let row = |i: usize| -> Vec<EscapeOutcome> {
        (0..width)
            .map(|j| {
                let re = cell_center(window.re_min, window.re_max, j, width);
                let im = cell_center(window.im_max, window.im_min, i, height);
                f(C64::new(re, im))
            })
            .collect()
    };
    let cells: Vec<EscapeOutcome> = if parallel {
        (0..height)
            .into_par_iter()
            .map(row)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    } else {
        (0..height).flat_map(row).collect()
    };
    Raster {
        width,
        height,
        window,
        max_iter,
        cells,
    }
}

/// Renders a parameter locus at pixel centers; cells whose parameter is
/// excluded from the family are rendered Escaped(0).
pub fn render_parameter_locus(
    kind: LocusKind,
    window: Window,
    width: usize,
    height: usize,
    max_iter: u32,
    cfg: &LuneConfig<f64>,
    parallel: bool,
) -> Raster {
    render_grid(
        window,
        width,
        height,
        max_iter,
        parallel,
        |param| match kind {
            LocusKind::MGamma => mgamma_escape(param, cfg, max_iter)
                .unwrap_or_else(|_| EscapeOutcome::escaped(0, param)),
            LocusKind::M1 => m1_escape(param, max_iter, DEFAULT_PETAL_THRESHOLD).combined(max_iter),
            LocusKind::Mandelbrot => mandelbrot_escape(param, max_iter),
        },
    )
}

/// Renders the limit set Lambda_minus of the correspondence: a pixel is
/// Bounded when the tracked branch orbit of its center stays in the closed
/// dynamical sector for max_iter steps. Lambda_plus is the mirror image
/// -Lambda_minus (the involution is z -> -z in the z-coordinate).
pub fn render_limit_set(
    p: &ParamA<f64>,
    window: Window,
    width: usize,
    height: usize,
    max_iter: u32,
    cfg: &LuneConfig<f64>,
    parallel: bool,
) -> Raster {
    let p = *p;
    let cfg = *cfg;
    render_grid(window, width, height, max_iter, parallel, move |z0| {
        if !in_dynamical_lune(z0, &p, &cfg, true) {
            return EscapeOutcome::escaped(0, z0);
        }
        let mut z = z0;
        for i in 0..max_iter {
            match branch_into_lune(z, &p, &cfg) {
                Ok(Some(w)) => z = w,
                _ => return EscapeOutcome::escaped(i, z),
            }
        }
        EscapeOutcome::bounded(max_iter, z)
    })
}

/// Renders the filled Julia set of P_A for B = 1 - A^2; for A = 0 the
/// convention K_0 = {Re z < 0} applies.
pub fn render_filled_julia(
    b: C64,
    window: Window,
    width: usize,
    height: usize,
    max_iter: u32,
    petal_threshold: f64,
    parallel: bool,
) -> Raster {
    let a_cap = principal_a(b);
    render_grid(window, width, height, max_iter, parallel, move |z0| {
        if a_cap.norm() == 0.0 {
            return if z0.re < 0.0 {
                EscapeOutcome::bounded(max_iter, z0)
            } else {
                EscapeOutcome::escaped(0, z0)
            };
        }
        pa_orbit_escape(z0, a_cap, max_iter, petal_threshold)
    })
}

/// A polyline tagged with its branch word; `truncated` marks segments cut
/// short by lost branch tracking.
#[derive(Debug, Clone, Serialize)]
pub struct TaggedPolyline {
    pub word: String,
    pub points: Vec<C64>,
    pub truncated: bool,
}

/// Polyline approximations of the images and preimages of the boundary
/// arcs of the standard fundamental domain, up to `depth` applications of
/// the correspondence branches.
///
/// Depth 0 returns the boundary arcs themselves: the two half-lines from
/// Z = 1 at angles +-pi/3 (covering-domain boundary) and the circle through
/// Z = 1 and Z = a centered on their midpoint axis (involution-domain
/// boundary), all mapped to the z-coordinate.
pub fn tile_regular_set(
    p: &ParamA<f64>,
    depth: u32,
    samples_per_arc: usize,
) -> Result<Vec<TaggedPolyline>> {
    if depth > 12 {
        return Err(Error::DomainError("depth must be at most 12".into()));
    }
    if samples_per_arc < 2 {
        return Err(Error::DomainError("need at least 2 samples per arc".into()));
    }
    let mut base: Vec<TaggedPolyline> = Vec::new();
    let upper_to_z = |zz: C64| -> Option<C64> {
        let den = p.a - zz;
        if den.norm() < 1e-9 {
            None
        } else {
            Some((zz - C64::new(1.0, 0.0)) / den)
        }
    };
    // Covering-domain boundary: half-lines from 1 at angles +-pi/3.
    for (tag, sign) in [("cov+", 1.0), ("cov-", -1.0)] {
        let dir = C64::from_polar(1.0, sign * std::f64::consts::FRAC_PI_3);
        let mut pts = Vec::with_capacity(samples_per_arc);
        for k in 0..samples_per_arc {
            // Geometric spacing out to radius ~20 resolves the cusp at 1.
            let t = 1e-3 * (20.0f64 / 1e-3).powf(k as f64 / (samples_per_arc - 1) as f64);
            if let Some(z) = upper_to_z(C64::new(1.0, 0.0) + dir * t) {
                pts.push(z);
            }
        }
        base.push(TaggedPolyline {
            word: tag.into(),
            points: pts,
            truncated: false,
        });
    }
    // Involution-domain boundary: circle through 1 and a centered on the
    // real axis of the chord (center on the perpendicular bisector point
    // closest to the real axis; for the standard domain the center lies on
    // the real Z-axis).
    {
        let one = C64::new(1.0, 0.0);
        let q = p.a - one;
        // Center x on the real axis with |x - 1| = |x - a|.
        let x = if q.re.abs() > 1e-12 {
            (p.a.norm_sqr() - 1.0) / (2.0 * q.re)
        } else {
            1.0 + q.norm() / 2.0
        };
        let c = C64::new(x, 0.0);
        let r = (one - c).norm();
        let mut pts = Vec::with_capacity(samples_per_arc);
        for k in 0..samples_per_arc {
            let ang = 2.0 * std::f64::consts::PI * k as f64 / (samples_per_arc - 1) as f64;
            if let Some(z) = upper_to_z(c + C64::from_polar(r, ang)) {
                pts.push(z);
            }
        }
        base.push(TaggedPolyline {
            word: "J".into(),
            points: pts,
            truncated: false,
        });
    }
    let mut out: Vec<TaggedPolyline> = base.clone();
    let mut frontier = base;
    for _level in 0..depth {
        let mut next: Vec<TaggedPolyline> = Vec::new();
        for line in &frontier {
            for (dir_tag, forward) in [("F", true), ("B", false)] {
                for branch in 0..2usize {
                    let mut pts: Vec<C64> = Vec::with_capacity(line.points.len());
                    let mut truncated = false;
                    let mut prev: Option<C64> = None;
                    for &z in &line.points {
                        let pair = if forward {
                            corr_images(z, p)
                        } else {
                            corr_preimages(z, p)
                        };
                        let pair = match pair {
                            Ok(v) => v,
                            Err(_) => {
                                truncated = true;
                                break;
                            }
                        };
                        let cand = pair.as_array();
                        // Track continuity: follow the branch closest to the
                        // previous image; seed with the requested branch index.
                        let w = match prev {
                            None => cand[branch],
                            Some(pw) => {
                                if (cand[0] - pw).norm() <= (cand[1] - pw).norm() {
                                    cand[0]
                                } else {
                                    cand[1]
                                }
                            }
                        };
                        if pair.merged && prev.is_some() {
                            truncated = true;
                            break;
                        }
                        prev = Some(w);
                        pts.push(w);
                    }
                    if pts.len() >= 2 {
                        next.push(TaggedPolyline {
                            word: format!("{}{}{}", line.word, dir_tag, branch),
                            points: pts,
                            truncated,
                        });
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(out)
}

/// Escape step of the critical-value orbit under the tracked branch, or
/// `None` when it stays in the sector for max_iter steps.
pub fn entry_time(p: &ParamA<f64>, cfg: &LuneConfig<f64>, max_iter: u32) -> Result<Option<u32>> {
    let mut z = p.v;
    for i in 0..max_iter {
        match branch_into_lune(z, p, cfg) {
            Ok(Some(w)) => z = w,
            Ok(None) | Err(Error::PoleInput) => return Ok(Some(i)),
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn cfg() -> LuneConfig<f64> {
        LuneConfig::default()
    }

    #[test]
    fn branch_into_lune_examples() {
        let p5 = ParamA::new(c(5.0, 0.0)).unwrap();
        let w = branch_into_lune(c(-1.0 / 3.0, 0.0), &p5, &cfg())
            .unwrap()
            .unwrap();
        assert!((w - c(-1.0 / 3.0, 0.0)).norm() < 1e-12);

        let p4 = ParamA::new(c(4.0, 0.0)).unwrap();
        let w = branch_into_lune(c(-0.4, 0.0), &p4, &cfg())
            .unwrap()
            .unwrap();
        assert!((w - c(-0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn mgamma_membership_anchors() {
        let cfg = cfg();
        assert!(in_mgamma(c(4.0, 0.0), &cfg, 10_000).unwrap());
        assert!(in_mgamma(c(5.0, 0.0), &cfg, 10_000).unwrap());
        assert!(!in_mgamma(c(9.0, 0.0), &cfg, 10_000).unwrap());
        assert!(mgamma_escape(c(1.0, 0.0), &cfg, 100).is_err());
        // Outside the parameter lune: escape at step 0.
        let out = mgamma_escape(c(9.0, 0.0), &cfg, 100).unwrap();
        assert_eq!(out.iterations, 0);
    }

    #[test]
    fn m1_membership_anchors() {
        assert!(in_m1(c(0.0, 0.0), 10_000));
        assert!(in_m1(c(-1.25, 0.0), 10_000));
        assert!(!in_m1(c(-15.0, 0.0), 10_000));
        assert!(in_m1(c(1.0, 0.0), 10_000));
    }

    #[test]
    fn m1_sign_symmetry_is_structural() {
        // Iterating both critical points makes A and -A one code path:
        // check the outcomes coincide under the swap.
        let b = c(-3.7, 0.4);
        let a_cap = principal_a(b);
        let o1 = pa_orbit_escape(c(1.0, 0.0), a_cap, 500, DEFAULT_PETAL_THRESHOLD);
        let o2 = pa_orbit_escape(c(-1.0, 0.0), -a_cap, 500, DEFAULT_PETAL_THRESHOLD);
        // P_{-A}(-z) = -P_A(z), and the drift clock Re(z/A) is invariant
        // under (z, A) -> (-z, -A).
        assert_eq!(o1.status, o2.status);
        assert_eq!(o1.iterations, o2.iterations);
    }

    #[test]
    fn mandelbrot_anchors() {
        assert!(mandelbrot_escape(c(0.0, 0.0), 1000).is_bounded());
        assert!(mandelbrot_escape(c(-1.0, 0.0), 1000).is_bounded());
        assert!(!mandelbrot_escape(c(1.0, 0.0), 1000).is_bounded());
    }

    #[test]
    fn escape_monotone_in_max_iter() {
        for b in [c(-15.0, 0.0), c(-3.2, 0.1), c(2.5, 2.5)] {
            let o1 = m1_escape(b, 400, DEFAULT_PETAL_THRESHOLD).combined(400);
            if o1.status == EscapeStatus::Escaped {
                let o2 = m1_escape(b, 4000, DEFAULT_PETAL_THRESHOLD).combined(4000);
                assert_eq!(o2.status, EscapeStatus::Escaped);
                assert_eq!(o1.iterations, o2.iterations);
            }
        }
    }

    #[test]
    fn raster_center_pixels() {
        let cfg = cfg();
        let w = Window::new(1.0, 7.0, -3.0, 3.0).unwrap();
        let r = render_parameter_locus(LocusKind::MGamma, w, 3, 3, 1000, &cfg, false);
        assert!((r.pixel_center(1, 1) - c(4.0, 0.0)).norm() < 1e-12);
        assert!(r.cell(1, 1).is_bounded());

        let w = Window::new(-2.0, 2.0, -2.0, 2.0).unwrap();
        let r = render_parameter_locus(LocusKind::M1, w, 1, 1, 600, &cfg, false);
        assert!(r.cell(0, 0).is_bounded());

        let w = Window::new(-2.0, 1.0, -1.5, 1.5).unwrap();
        let r = render_parameter_locus(LocusKind::Mandelbrot, w, 3, 3, 500, &cfg, false);
        // Center column, middle row sits at c = -0.5 which is interior.
        assert!(r.cell(1, 1).is_bounded());
    }

    #[test]
    fn parallel_matches_serial() {
        let cfg = cfg();
        let w = Window::new(1.0, 7.0, -3.0, 3.0).unwrap();
        let a = render_parameter_locus(LocusKind::MGamma, w, 40, 40, 200, &cfg, false);
        let b = render_parameter_locus(LocusKind::MGamma, w, 40, 40, 200, &cfg, true);
        assert_eq!(a.cells, b.cells);
    }

    #[test]
    fn conjugation_mirror_symmetry() {
        let cfg = cfg();
        let w = Window::new(1.0, 7.0, -3.0, 3.0).unwrap();
        let r = render_parameter_locus(LocusKind::MGamma, w, 50, 50, 200, &cfg, false);
        for i in 0..50 {
            for j in 0..50 {
                let top = r.cell(j, i);
                let bot = r.cell(j, 49 - i);
                assert_eq!(top.status, bot.status);
                assert_eq!(top.iterations, bot.iterations);
            }
        }
    }

    #[test]
    fn limit_set_examples() {
        let cfg = cfg();
        let p5 = ParamA::new(c(5.0, 0.0)).unwrap();
        let w = Window::new(-1.0 / 3.0 - 0.01, -1.0 / 3.0 + 0.01, -0.01, 0.01).unwrap();
        let r = render_limit_set(&p5, w, 3, 3, 300, &cfg, false);
        assert!(r.cell(1, 1).is_bounded());
        let w = Window::new(4.99, 5.01, -0.01, 0.01).unwrap();
        let r = render_limit_set(&p5, w, 1, 1, 300, &cfg, false);
        assert!(!r.cell(0, 0).is_bounded());
        assert_eq!(r.cell(0, 0).iterations, 0);
    }

    #[test]
    fn julia_examples() {
        let w = Window::new(0.99, 1.01, -0.01, 0.01).unwrap();
        let r = render_filled_julia(c(0.0, 0.0), w, 1, 1, 500, DEFAULT_PETAL_THRESHOLD, false);
        assert!(r.cell(0, 0).is_bounded());
        // A = 0 half-plane convention.
        let w = Window::new(-1.0, 1.0, -0.5, 0.5).unwrap();
        let r = render_filled_julia(c(1.0, 0.0), w, 2, 1, 100, DEFAULT_PETAL_THRESHOLD, false);
        assert!(r.cell(0, 0).is_bounded());
        assert!(!r.cell(1, 0).is_bounded());
    }

    #[test]
    fn tiling_guards_and_depth0() {
        let p4 = ParamA::new(c(4.0, 0.0)).unwrap();
        assert!(tile_regular_set(&p4, 13, 64).is_err());
        let base = tile_regular_set(&p4, 0, 64).unwrap();
        assert_eq!(base.len(), 3);
        let d1 = tile_regular_set(&p4, 1, 64).unwrap();
        assert!(d1.len() > base.len());
        // Refinement continuity: consecutive points of depth-1 images stay
        // close (no branch jumps) away from truncation.
        for line in &d1 {
            if line.truncated {
                continue;
            }
            for pair in line.points.windows(2) {
                let gap = (pair[1] - pair[0]).norm();
                assert!(gap < 25.0, "word {} gap {}", line.word, gap);
            }
        }
    }

    #[test]
    fn entry_time_examples() {
        let cfg = cfg();
        // A lune parameter outside the connectedness locus: finite entry
        // time (value frozen against the brute-force orbit oracle).
        let pe = ParamA::new(c(4.0, 1.5)).unwrap();
        assert_eq!(entry_time(&pe, &cfg, 1000).unwrap(), Some(2));
        // Outside the lune on the real axis the critical-value orbit
        // converges to the parabolic point inside the sector: no escape.
        let p9 = ParamA::new(c(9.0, 0.0)).unwrap();
        assert_eq!(entry_time(&p9, &cfg, 1000).unwrap(), None);
        let p4 = ParamA::new(c(4.0, 0.0)).unwrap();
        assert_eq!(entry_time(&p4, &cfg, 2000).unwrap(), None);
        let p5 = ParamA::new(c(5.0, 0.0)).unwrap();
        assert_eq!(entry_time(&p5, &cfg, 2000).unwrap(), None);
    }

    #[test]
    fn ppm_and_csv_shapes() {
        let cfg = cfg();
        let w = Window::new(-2.0, 1.0, -1.5, 1.5).unwrap();
        let r = render_parameter_locus(LocusKind::Mandelbrot, w, 8, 6, 50, &cfg, false);
        let mut ppm = Vec::new();
        r.write_ppm(&mut ppm).unwrap();
        assert!(ppm.starts_with(b"P6\n8 6\n255\n"));
        assert_eq!(ppm.len(), b"P6\n8 6\n255\n".len() + 8 * 6 * 3);
        let mut csv = Vec::new();
        r.write_csv(&mut csv).unwrap();
        let text = String::from_utf8(csv).unwrap();
        assert_eq!(text.lines().count(), 1 + 48);
        assert!(text.starts_with("x,y,re,im,status,iterations"));
    }
}

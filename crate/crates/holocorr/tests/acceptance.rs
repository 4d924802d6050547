//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line.

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use holocorr::corr::{
    cov_branch_deriv, estimate_fixed_branch_coeff, fixed_branch_quadratic_coeff,
    involution_j_deriv, zigzag_defect, ParamA,
};
use holocorr::cycles::{center_newton, chi_hat, CenterFamily};
use holocorr::exact::appendix_certificate;
use holocorr::fatou::{check_h_conjugacy, FatouChart, MapId, DEFAULT_DEPTH};
use holocorr::lune::{check_lune_containment, in_param_lune, in_param_lune_k};
use holocorr::minkowski_q_rational;
use holocorr::render::{in_m1, in_mgamma, render_parameter_locus, LocusKind, Window};
use holocorr::Lunes;

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn report(n: u32, name: &str, pass: bool) {
    println!(
        "criterion {n} ({name}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {n} ({name}) failed");
}

#[test]
fn criterion_01_membership_anchors() {
    let cfg = Lunes::default();
    let pass = in_mgamma(c(4.0, 0.0), &cfg, 10_000).unwrap()
        && in_mgamma(c(5.0, 0.0), &cfg, 10_000).unwrap()
        && !in_mgamma(c(9.0, 0.0), &cfg, 10_000).unwrap()
        && in_m1(c(0.0, 0.0), 10_000)
        && in_m1(c(-1.25, 0.0), 10_000)
        && !in_m1(c(-15.0, 0.0), 10_000);
    report(1, "membership anchors", pass);
}

#[test]
fn criterion_02_centers_and_multiplier_matching() {
    let cfg = Lunes::default();
    let mg1 = center_newton(CenterFamily::MGamma, 1, c(5.2, 0.0), &cfg).unwrap();
    let p1 = center_newton(CenterFamily::Per11, 1, c(0.3, 0.0), &cfg).unwrap();
    let p2 = center_newton(CenterFamily::Per11, 2, c(-1.0, 0.0), &cfg).unwrap();
    let chi5 = chi_hat(c(5.0, 0.0), &cfg).unwrap();
    let mg2 = center_newton(CenterFamily::MGamma, 2, c(4.4, 0.0), &cfg).unwrap();
    let chi_mg2 = chi_hat(mg2, &cfg).unwrap();
    let pass = (mg1 - c(5.0, 0.0)).norm() <= 1e-9
        && p1.norm() <= 1e-9
        && (p2 - c(-1.25, 0.0)).norm() <= 1e-9
        && chi5.norm() <= 1e-6
        && (chi_mg2 - c(-1.25, 0.0)).norm() <= 1e-4;
    report(2, "centers and multiplier matching", pass);
}

#[test]
fn criterion_03_appendix_certificate() {
    let r = appendix_certificate();
    report(
        3,
        "exact appendix certificate",
        r.all_pass && r.convention_sign == 1,
    );
}

#[test]
fn criterion_04_parabolic_invariants() {
    let cfg = Lunes::default();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let one = c(1.0, 0.0);
    let mut pass = true;
    let mut accepted = 0;
    while accepted < 100 {
        let a = c(rng.gen_range(1.2..6.8), rng.gen_range(-2.4..2.4));
        if !in_param_lune_k(a, &cfg) {
            continue;
        }
        accepted += 1;
        let p = ParamA::new(a).unwrap();
        let mult = cov_branch_deriv(one, one).unwrap() * involution_j_deriv(one, &p).unwrap();
        let est = estimate_fixed_branch_coeff(&p, 1e-3).unwrap();
        pass = pass
            && (mult - one).norm() < 1e-10
            && (est - fixed_branch_quadratic_coeff(&p)).norm() < 1e-5;
    }
    report(4, "parabolic invariants", pass);
}

#[test]
fn criterion_05_zigzag_identity() {
    let cfg = Lunes::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut pass = true;
    let mut accepted = 0usize;
    let mut discarded = 0usize;
    while accepted < 1000 {
        let a = c(rng.gen_range(1.2..6.8), rng.gen_range(-2.4..2.4));
        if !in_param_lune(a, &cfg) {
            continue;
        }
        let p = ParamA::new(a).unwrap();
        let z = c(rng.gen_range(-2.0..3.0), rng.gen_range(-2.0..2.0));
        match zigzag_defect(z, &p) {
            Ok(d) => {
                pass = pass && d < 1e-9;
                accepted += 1;
            }
            Err(_) => discarded += 1,
        }
    }
    pass = pass && discarded < 10;
    report(5, "zigzag identity", pass);
}

#[test]
fn criterion_06_lune_containment() {
    let cfg = Lunes::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut params = vec![c(7.0, 0.0)];
    while params.len() < 51 {
        let a = c(rng.gen_range(1.2..6.8), rng.gen_range(-2.4..2.4));
        if in_param_lune(a, &cfg) {
            params.push(a);
        }
    }
    let mut pass = true;
    for a in params {
        let r = check_lune_containment(a, &cfg, 360).unwrap();
        pass = pass && r.max_violation <= 1e-9;
    }
    report(6, "lune containment", pass);
}

#[test]
fn criterion_07_fatou_charts() {
    let mut pass = true;
    for map in [MapId::PA { a_cap: c(4.0, 0.0) }, MapId::Q14, MapId::H] {
        let chart = FatouChart::new(map, DEFAULT_DEPTH).unwrap();
        pass = pass && chart.coordinate(chart.normalization_point).unwrap() == c(1.0, 0.0);
        let mut z = chart.normalization_point;
        for _ in 0..100 {
            let residual =
                (chart.coordinate(map.apply(z)).unwrap() - chart.coordinate(z).unwrap() - 1.0)
                    .norm();
            pass = pass && residual <= 1e-8;
            z = map.apply(z);
        }
    }
    report(7, "fatou chart abel residuals", pass);
}

#[test]
fn criterion_08_h_conjugacy() {
    let defect = check_h_conjugacy(100).unwrap();
    let pass = defect <= 1e-10
        && MapId::H.apply(c(0.0, 0.0)) == c(1.0 / 3.0, 0.0)
        && (MapId::H.apply(c(1e14, 0.0)) - c(3.0, 0.0)).norm() < 1e-10;
    report(8, "h conjugacy", pass);
}

#[test]
fn criterion_09_minkowski_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut pass = true;
    for _ in 0..100 {
        let q = rng.gen_range(2u64..=10_000);
        let p = rng.gen_range(1u64..q);
        let fx = minkowski_q_rational(p, q).unwrap();
        let half = minkowski_q_rational(p, p + q).unwrap();
        let refl = minkowski_q_rational(q - p, q).unwrap();
        pass = pass && (half - fx / 2.0).abs() <= 1e-12 && (refl - (1.0 - fx)).abs() <= 1e-12;
    }
    report(9, "minkowski identities", pass);
}

#[test]
fn criterion_10_rendering_properties() {
    let cfg = Lunes::default();
    let window = Window::new(1.0, 7.0, -3.0, 3.0).unwrap();
    let serial = render_parameter_locus(LocusKind::MGamma, window, 300, 300, 500, &cfg, false);
    let parallel = render_parameter_locus(LocusKind::MGamma, window, 300, 300, 500, &cfg, true);
    let deeper = render_parameter_locus(LocusKind::MGamma, window, 300, 300, 1000, &cfg, true);

    let ppm = |r: &holocorr::render::Raster| {
        let mut buf = Vec::new();
        r.write_ppm(&mut buf).unwrap();
        buf
    };
    let mut pass = ppm(&serial) == ppm(&parallel);

    // Bit-exact mirror symmetry under conjugation of the window.
    for i in 0..300 {
        for j in 0..300 {
            let top = serial.cell(j, i);
            let bot = serial.cell(j, 299 - i);
            pass = pass
                && top.status == bot.status
                && top.iterations == bot.iterations
                && top.last_point == bot.last_point.conj();
        }
    }

    let n500 = serial.interior_count() as f64;
    let n1000 = deeper.interior_count() as f64;
    pass = pass && (n500 - n1000).abs() / n1000 < 0.02;
    report(10, "rendering properties", pass);
}

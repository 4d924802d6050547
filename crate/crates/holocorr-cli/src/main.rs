//! Command-line front end: escape-time renders to PPM/CSV, the exact
//! certificate, a seeded cross-module property suite, center solving,
//! multiplier matching, Milnor coordinates, and entry times.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use holocorr::corr::{
    cov_branch_deriv, estimate_fixed_branch_coeff, fixed_branch_quadratic_coeff,
    involution_j_deriv, zigzag_defect, ParamA,
};
use holocorr::cycles::{center_newton, chi_hat, CenterFamily};
use holocorr::exact::{appendix_certificate, numeric_gap_check};
use holocorr::fatou::milnor_coordinate;
use holocorr::lune::{check_lune_containment, in_param_lune, in_param_lune_k, LuneConfig};
use holocorr::render::{
    entry_time, render_filled_julia, render_limit_set, render_parameter_locus, LocusKind, Raster,
    Window, DEFAULT_PETAL_THRESHOLD,
};
use holocorr::{minkowski_q_rational, Lunes};

#[derive(Parser)]
#[command(
    name = "holocorr",
    version,
    about = "Holomorphic correspondence dynamics toolkit"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderTarget {
    Mgamma,
    M1,
    Mandelbrot,
    LimitSet,
    Julia,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Mgamma,
    Per11,
}

#[derive(Subcommand)]
enum Cmd {
    /// Render a parameter locus, limit set, or filled Julia set.
    Render {
        #[arg(value_enum)]
        target: RenderTarget,
        /// Window as xmin,xmax,ymin,ymax.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Raster size as WIDTHxHEIGHT.
        #[arg(long, default_value = "512x512")]
        size: String,
        #[arg(long = "max-iter", default_value_t = 1000)]
        max_iter: u32,
        /// Parameter-lune half-angle (radians).
        #[arg(long)]
        theta: Option<f64>,
        /// Dynamical-sector half-angle (radians).
        #[arg(long = "theta-hat")]
        theta_hat: Option<f64>,
        /// Correspondence parameter RE,IM (limit-set).
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Quadratic-family parameter RE,IM (julia).
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long = "petal-threshold", default_value_t = DEFAULT_PETAL_THRESHOLD)]
        petal_threshold: f64,
        /// Output PPM (P6) path.
        #[arg(long)]
        out: PathBuf,
        /// Optional CSV dump of the same escape data.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Exact and statistical verification.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Solve for a superattracting center.
    Centers {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        period: usize,
        /// Newton seed RE,IM.
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
    },
    /// Multiplier matching: the B-parameter matched to a correspondence parameter.
    Chi {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Milnor model coordinate of a shift-locus parameter.
    Milnor {
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = holocorr::fatou::DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Sector entry time of the critical orbit.
    EntryTime {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run the exact big-integer certificate.
    Appendix {
        /// Also write the JSON report to this file.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run the seeded cross-module invariant suite.
    Properties {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn parse_complex(s: &str) -> Result<C64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let err = || format!("expected RE,IM, got '{s}'");
    match parts.as_slice() {
        [re] => Ok(C64::new(re.trim().parse().map_err(|_| err())?, 0.0)),
        [re, im] => Ok(C64::new(
            re.trim().parse().map_err(|_| err())?,
            im.trim().parse().map_err(|_| err())?,
        )),
        _ => Err(err()),
    }
}

fn parse_window(s: &str) -> Result<Window, String> {
    let v: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| format!("expected xmin,xmax,ymin,ymax, got '{s}'"))?;
    if v.len() != 4 {
        return Err(format!("expected 4 window components, got {}", v.len()));
    }
    Window::new(v[0], v[1], v[2], v[3]).map_err(|e| e.to_string())
}

fn parse_size(s: &str) -> Result<(usize, usize), String> {
    let (w, h) = s
        .split_once('x')
        .ok_or_else(|| format!("expected WIDTHxHEIGHT, got '{s}'"))?;
    let w = w.trim().parse().map_err(|_| format!("bad width '{w}'"))?;
    let h = h.trim().parse().map_err(|_| format!("bad height '{h}'"))?;
    if w == 0 || h == 0 {
        return Err("raster size must be positive".into());
    }
    Ok((w, h))
}

fn fmt_c(z: C64) -> String {
    format!(
        "{:.16e} {} {:.16e}i",
        z.re,
        if z.im < 0.0 { "-" } else { "+" },
        z.im.abs()
    )
}

fn write_raster(raster: &Raster, out: &PathBuf, csv: Option<&PathBuf>) -> std::io::Result<()> {
    let mut f = BufWriter::new(File::create(out)?);
    raster.write_ppm(&mut f)?;
    f.flush()?;
    if let Some(path) = csv {
        let mut f = BufWriter::new(File::create(path)?);
        raster.write_csv(&mut f)?;
        f.flush()?;
    }
    Ok(())
}

fn default_window(target: RenderTarget) -> &'static str {
    match target {
        RenderTarget::Mgamma => "1,7,-3,3",
        RenderTarget::M1 => "-16,4,-10,10",
        RenderTarget::Mandelbrot => "-2.25,0.75,-1.5,1.5",
        RenderTarget::LimitSet | RenderTarget::Julia => "-3,3,-3,3",
    }
}

#[allow(clippy::too_many_arguments)]
fn run_render(
    target: RenderTarget,
    window: Option<String>,
    size: String,
    max_iter: u32,
    theta: Option<f64>,
    theta_hat: Option<f64>,
    a: Option<String>,
    b: Option<String>,
    petal_threshold: f64,
    out: PathBuf,
    csv: Option<PathBuf>,
) -> Result<(), String> {
    let window = parse_window(window.as_deref().unwrap_or(default_window(target)))?;
    let (w, h) = parse_size(&size)?;
    let defaults = Lunes::default();
    let cfg = LuneConfig::new(
        theta.unwrap_or(defaults.theta),
        theta_hat.unwrap_or(defaults.theta_hat),
        defaults.u7_radius,
    )
    .map_err(|e| e.to_string())?;
    let raster = match target {
        RenderTarget::Mgamma => {
            render_parameter_locus(LocusKind::MGamma, window, w, h, max_iter, &cfg, true)
        }
        RenderTarget::M1 => {
            render_parameter_locus(LocusKind::M1, window, w, h, max_iter, &cfg, true)
        }
        RenderTarget::Mandelbrot => {
            render_parameter_locus(LocusKind::Mandelbrot, window, w, h, max_iter, &cfg, true)
        }
        RenderTarget::LimitSet => {
            let a = parse_complex(&a.ok_or("--a is required for limit-set")?)?;
            let p = ParamA::new(a).map_err(|e| e.to_string())?;
            render_limit_set(&p, window, w, h, max_iter, &cfg, true)
        }
        RenderTarget::Julia => {
            let b = parse_complex(&b.ok_or("--B is required for julia")?)?;
            render_filled_julia(b, window, w, h, max_iter, petal_threshold, true)
        }
    };
    write_raster(&raster, &out, csv.as_ref()).map_err(|e| e.to_string())?;
    println!(
        "wrote {} ({}x{}, {} interior)",
        out.display(),
        w,
        h,
        raster.interior_count()
    );
    Ok(())
}

fn run_verify_appendix(json: Option<PathBuf>) -> Result<(), String> {
    let report = appendix_certificate();
    let value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    let text = serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?;
    println!("{text}");
    if let Some(path) = json {
        std::fs::write(&path, text.as_bytes()).map_err(|e| e.to_string())?;
    }
    if report.all_pass {
        Ok(())
    } else {
        Err("certificate failed".into())
    }
}

fn run_verify_properties(samples: usize, seed: u64) -> Result<(), String> {
    if samples == 0 {
        return Err("--samples must be positive".into());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = Lunes::default();
    let mut failures = 0usize;
    let mut report = |name: &str, detail: String, pass: bool| {
        println!(
            "property {name}: {detail} ... {}",
            if pass { "PASS" } else { "FAIL" }
        );
        if !pass {
            failures += 1;
        }
    };

    // Minkowski functional equations on random rationals.
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let q = rng.gen_range(2u64..=10_000);
        let p = rng.gen_range(1u64..q);
        let fx = minkowski_q_rational(p, q).map_err(|e| e.to_string())?;
        let half = minkowski_q_rational(p, p + q).map_err(|e| e.to_string())?;
        let refl = minkowski_q_rational(q - p, q).map_err(|e| e.to_string())?;
        worst = worst
            .max((half - fx / 2.0).abs())
            .max((refl - (1.0 - fx)).abs());
    }
    report(
        "minkowski-functional-equations",
        format!("max defect {worst:.3e}"),
        worst <= 1e-12,
    );

    // Zig-zag identity at random (z, a).
    let mut worst = 0.0f64;
    let mut accepted = 0usize;
    let mut discarded = 0usize;
    while accepted < samples {
        let a = C64::new(rng.gen_range(1.2..6.8), rng.gen_range(-2.4..2.4));
        if !in_param_lune(a, &cfg) {
            continue;
        }
        let p = ParamA::new(a).map_err(|e| e.to_string())?;
        let z = C64::new(rng.gen_range(-2.0..3.0), rng.gen_range(-2.0..2.0));
        match zigzag_defect(z, &p) {
            Ok(d) => {
                worst = worst.max(d);
                accepted += 1;
            }
            Err(_) => discarded += 1,
        }
    }
    report(
        "zigzag-identity",
        format!("max defect {worst:.3e}, {discarded} discarded"),
        worst < 1e-9 && discarded * 100 < samples.max(100),
    );

    // Parabolic invariants at random parameters in the truncated lune.
    let mut worst_mult = 0.0f64;
    let mut worst_coeff = 0.0f64;
    let mut accepted = 0usize;
    while accepted < samples.min(100) {
        let a = C64::new(rng.gen_range(1.2..6.8), rng.gen_range(-2.4..2.4));
        if !in_param_lune_k(a, &cfg) {
            continue;
        }
        let p = ParamA::new(a).map_err(|e| e.to_string())?;
        let one = C64::new(1.0, 0.0);
        let mult = cov_branch_deriv(one, one).map_err(|e| e.to_string())?
            * involution_j_deriv(one, &p).map_err(|e| e.to_string())?;
        worst_mult = worst_mult.max((mult - one).norm());
        let est = estimate_fixed_branch_coeff(&p, 1e-3).map_err(|e| e.to_string())?;
        worst_coeff = worst_coeff.max((est - fixed_branch_quadratic_coeff(&p)).norm());
        accepted += 1;
    }
    report(
        "parabolic-invariants",
        format!("multiplier defect {worst_mult:.3e}, coefficient defect {worst_coeff:.3e}"),
        worst_mult < 1e-10 && worst_coeff < 1e-5,
    );

    // Lune containment for random parameters.
    let mut worst = f64::NEG_INFINITY;
    let mut accepted = 0usize;
    while accepted < 5 {
        let a = C64::new(rng.gen_range(1.2..6.8), rng.gen_range(-2.4..2.4));
        if !in_param_lune(a, &cfg) {
            continue;
        }
        let r = check_lune_containment(a, &cfg, 180).map_err(|e| e.to_string())?;
        worst = worst.max(r.max_violation);
        accepted += 1;
    }
    report(
        "lune-containment",
        format!("max violation {worst:.3e}"),
        worst <= 1e-9,
    );

    // Circle-image gap at random d.
    let mut worst = f64::INFINITY;
    for _ in 0..5 {
        let d = rng.gen_range(-1.73..1.73);
        worst = worst.min(numeric_gap_check(d, 360).map_err(|e| e.to_string())?);
    }
    report(
        "circle-image-gap",
        format!("min gap {worst:.3e}"),
        worst > 0.0,
    );

    if failures == 0 {
        Ok(())
    } else {
        Err(format!("{failures} property group(s) failed"))
    }
}

fn run() -> Result<(), String> {
    if let Ok(threads) = std::env::var("HOLOCORR_THREADS") {
        let n: usize = threads
            .parse()
            .map_err(|_| "HOLOCORR_THREADS must be an integer")?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    match Cli::parse().cmd {
        Cmd::Render {
            target,
            window,
            size,
            max_iter,
            theta,
            theta_hat,
            a,
            b,
            petal_threshold,
            out,
            csv,
        } => run_render(
            target,
            window,
            size,
            max_iter,
            theta,
            theta_hat,
            a,
            b,
            petal_threshold,
            out,
            csv,
        ),
        Cmd::Verify { what } => match what {
            VerifyCmd::Appendix { json } => run_verify_appendix(json),
            VerifyCmd::Properties { samples, seed } => run_verify_properties(samples, seed),
        },
        Cmd::Centers {
            family,
            period,
            seed,
        } => {
            let seed = parse_complex(&seed)?;
            let cfg = Lunes::default();
            let (fam, label) = match family {
                Family::Mgamma => (CenterFamily::MGamma, "a"),
                Family::Per11 => (CenterFamily::Per11, "B"),
            };
            let center = center_newton(fam, period, seed, &cfg).map_err(|e| e.to_string())?;
            println!("{label} = {}", fmt_c(center));
            Ok(())
        }
        Cmd::Chi { a } => {
            let a = parse_complex(&a)?;
            let cfg = Lunes::default();
            let b = chi_hat(a, &cfg).map_err(|e| e.to_string())?;
            println!("B = {}", fmt_c(b));
            Ok(())
        }
        Cmd::Milnor { b, depth } => {
            let b = parse_complex(&b)?;
            let point = milnor_coordinate(b, depth).map_err(|e| e.to_string())?;
            let value = serde_json::to_value(point).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?
            );
            Ok(())
        }
        Cmd::EntryTime { a } => {
            let a = parse_complex(&a)?;
            let p = ParamA::new(a).map_err(|e| e.to_string())?;
            let cfg = Lunes::default();
            match entry_time(&p, &cfg, 10_000).map_err(|e| e.to_string())? {
                Some(n) => println!("entry_time = {n}"),
                None => println!("entry_time = none"),
            }
            Ok(())
        }
    }
}

fn main() {
    match run() {
        Ok(()) => {}
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

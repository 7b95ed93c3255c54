//! Command-line surface: zero-table production and validation, residual
//! experiments with CSV/JSON emission, and result collation.
//!
//! Exit codes: 0 success / all-pass, 1 experiment fail, 2 usage or config
//! error, 3 data or coverage error. Every error path prints a single line
//! with the prefix `error:`.

mod config;

use clap::{Parser, Subcommand};
use config::Config;
use serde_json::json;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use zgl_core::arith::{
    gauss_identity_residual, sieve_von_mangoldt, CharacterTable, RationalPhase, VonMangoldtTable,
};
use zgl_core::bump::TestFunction;
use zgl_core::experiments::{
    log_grid, run_bound11, run_cor32, run_gonek_scan, run_lemma22, run_lemma23, run_lemma24,
    run_stirling_scan, run_thm31, Experiment, ResidualSeries,
};
use zgl_core::sums::ZeroScale;
use zgl_core::zeros::{count_check, find_zeros, ZeroTable, COMPUTE_CEILING};
use zgl_core::Error as CoreError;

#[derive(Parser)]
#[command(
    name = "zgl",
    version,
    about = "Numerical laboratory for zeta-zero and twisted prime sums"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute, import, or verify zero-ordinate tables.
    Zeros {
        #[command(subcommand)]
        action: ZerosCmd,
    },
    /// Run a residual experiment and emit CSV/JSON results.
    Run {
        /// One of: lemma23, lemma24, thm31, cor32, bound11, lemma22,
        /// gonek, stirling, gauss-check.
        experiment: String,
        /// Flat key=value config file ('#' comments allowed).
        #[arg(long)]
        config: Option<PathBuf>,
        /// Inline overrides, e.g. --set xi=1/3 grid.hi=1e4
        #[arg(long = "set", num_args = 1.., value_name = "KEY=VALUE")]
        set: Vec<String>,
    },
    /// Collate JSON results in a directory into a summary table and
    /// gnuplot-ready series files.
    Report {
        #[arg(long)]
        dir: PathBuf,
    },
}

#[derive(Subcommand)]
enum ZerosCmd {
    /// Locate all zeros with ordinates in [from, to] and write a table.
    Compute {
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Validate an external table file and rewrite it in cache format.
    Import {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the zero-count check N(T) vs θ(T)/π + 1 against a table.
    Verify {
        #[arg(long)]
        table: PathBuf,
        #[arg(long = "T")]
        t: f64,
    },
}

fn main() {
    std::process::exit(run());
}

/// Exit-code category for core errors: data/coverage problems are 3,
/// argument problems are 2.
fn core_exit_code(e: &CoreError) -> i32 {
    match e {
        CoreError::Coverage { .. }
        | CoreError::Capacity { .. }
        | CoreError::EmptyTable
        | CoreError::Parse { .. }
        | CoreError::Monotonicity { .. }
        | CoreError::MissedZeros { .. }
        | CoreError::NonConvergence { .. }
        | CoreError::Io(_) => 3,
        _ => 2,
    }
}

fn fail(code: i32, msg: impl std::fmt::Display) -> i32 {
    eprintln!("error: {msg}");
    code
}

fn run() -> i32 {
    match Cli::parse().cmd {
        Cmd::Zeros { action } => match action {
            ZerosCmd::Compute { from, to, out } => cmd_zeros_compute(from, to, &out),
            ZerosCmd::Import { input, out } => cmd_zeros_import(&input, &out),
            ZerosCmd::Verify { table, t } => cmd_zeros_verify(&table, t),
        },
        Cmd::Run {
            experiment,
            config,
            set,
        } => cmd_run(&experiment, config.as_deref(), &set),
        Cmd::Report { dir } => cmd_report(&dir),
    }
}

fn cmd_zeros_compute(from: f64, to: f64, out: &Path) -> i32 {
    let table = match find_zeros(from, to) {
        Ok(t) => t,
        Err(e) => return fail(core_exit_code(&e), e),
    };
    if let Err(e) = table.save(out) {
        return fail(3, e);
    }
    println!(
        "computed {} ordinates in [{from}, {to}], height {:.6} -> {}",
        table.len(),
        table.max_height(),
        out.display()
    );
    0
}

fn cmd_zeros_import(input: &Path, out: &Path) -> i32 {
    let table = match ZeroTable::load(input) {
        Ok(t) => t,
        Err(e) => return fail(core_exit_code(&e), e),
    };
    if let Err(e) = table.save(out) {
        return fail(3, e);
    }
    println!(
        "imported {} ordinates, height {:.6} -> {}",
        table.len(),
        table.max_height(),
        out.display()
    );
    0
}

fn cmd_zeros_verify(path: &Path, t: f64) -> i32 {
    let table = match ZeroTable::load(path) {
        Ok(t) => t,
        Err(e) => return fail(core_exit_code(&e), e),
    };
    let report = match count_check(t, &table) {
        Ok(r) => r,
        Err(e) => return fail(core_exit_code(&e), e),
    };
    println!(
        "N({t}) = {}, main term {:.4}, slack {} -> {}",
        report.observed,
        report.main_term,
        report.slack,
        if report.pass { "PASS" } else { "FAIL" }
    );
    if report.pass {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

fn parse_xi(cfg: &Config) -> Result<RationalPhase, String> {
    // either xi=m/q or separate m= and q= keys
    if let Some(s) = cfg.get("xi") {
        let (m, q) = s
            .split_once('/')
            .ok_or_else(|| format!("xi must be m/q, got {s:?}"))?;
        let m: u64 = m.trim().parse().map_err(|e| format!("xi numerator: {e}"))?;
        let q: u64 = q.trim().parse().map_err(|e| format!("xi denominator: {e}"))?;
        return RationalPhase::new(m, q).map_err(|e| e.to_string());
    }
    match (cfg.get("m"), cfg.get("q")) {
        (m_opt, Some(q)) => {
            let q: u64 = q.parse().map_err(|e| format!("q: {e}"))?;
            let m: u64 = match m_opt {
                Some(m) => m.parse().map_err(|e| format!("m: {e}"))?,
                None => 1,
            };
            RationalPhase::new(m, q).map_err(|e| e.to_string())
        }
        _ => Err("experiment needs xi=m/q (or q= and m=)".into()),
    }
}

fn build_bump(cfg: &Config) -> Result<TestFunction, String> {
    let lo = cfg.f64_or("bump.lo", 1.0)?;
    let hi = cfg.f64_or("bump.hi", 2.0)?;
    match cfg.get("bump.kind").unwrap_or("canonical") {
        "canonical" => TestFunction::canonical(lo, hi).map_err(|e| e.to_string()),
        "plateau" => TestFunction::plateau(lo, hi).map_err(|e| e.to_string()),
        other => Err(format!(
            "bump.kind must be canonical or plateau, got {other:?}"
        )),
    }
}

fn build_grid(cfg: &Config, default_lo: f64, default_hi: f64) -> Result<Vec<f64>, String> {
    let lo = cfg.f64_or("grid.lo", default_lo)?;
    let hi = cfg.f64_or("grid.hi", default_hi)?;
    let ppd = cfg.usize_or("grid.ppd", 12)?;
    if !(lo > 0.0 && hi > lo) {
        return Err(format!("grid needs 0 < lo < hi, got [{lo}, {hi}]"));
    }
    Ok(log_grid(lo, hi, ppd))
}

/// Produce a zero table covering at least `required`: from an imported
/// file, a cache (computed on miss), or a fresh computation.
fn resolve_zeros(cfg: &Config, required: f64) -> Result<ZeroTable, (i32, String)> {
    if let Some(path) = cfg.get("zeros.import") {
        let table =
            ZeroTable::load(Path::new(path)).map_err(|e| (core_exit_code(&e), e.to_string()))?;
        if table.max_height() < required {
            return Err((
                3,
                format!(
                    "imported table {} reaches {:.1}, experiment needs {:.1}",
                    path,
                    table.max_height(),
                    required
                ),
            ));
        }
        return Ok(table);
    }
    if let Some(path) = cfg.get("zeros.cache") {
        let path = Path::new(path);
        if path.exists() {
            if let Ok(table) = ZeroTable::load(path) {
                if table.max_height() >= required {
                    return Ok(table);
                }
            }
        }
        let table = compute_zeros(cfg, required)?;
        table
            .save(path)
            .map_err(|e| (3, format!("cannot write cache: {e}")))?;
        return Ok(table);
    }
    compute_zeros(cfg, required)
}

fn compute_zeros(cfg: &Config, required: f64) -> Result<ZeroTable, (i32, String)> {
    let from = cfg.f64_or("zeros.compute.from", 2.0).map_err(|e| (2, e))?;
    let to = cfg
        .f64_or("zeros.compute.to", (required + 50.0).min(COMPUTE_CEILING))
        .map_err(|e| (2, e))?;
    if to < required {
        return Err((
            3,
            format!("zeros.compute.to={to} below the required height {required:.1}"),
        ));
    }
    find_zeros(from, to).map_err(|e| (core_exit_code(&e), e.to_string()))
}

fn resolve_lambda(cfg: &Config, required: f64) -> Result<VonMangoldtTable, (i32, String)> {
    let limit = cfg
        .usize_or("lambda.limit", required.ceil() as usize + 1)
        .map_err(|e| (2, e))?;
    if (limit as f64) < required {
        return Err((
            3,
            format!("lambda.limit={limit} below the required {required:.0}"),
        ));
    }
    sieve_von_mangoldt(limit).map_err(|e| (core_exit_code(&e), e.to_string()))
}

fn out_dir(cfg: &Config) -> PathBuf {
    if let Some(dir) = cfg.get("out.dir") {
        return PathBuf::from(dir);
    }
    std::env::var_os("ZGL_DATA_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."))
}

/// Experiment verdict: most series are judged by their fitted slope
/// against the cap; the stirling scan is pointwise-capped and the
/// four-point gonek scan by its envelope/separation witnesses.
fn judge(series: &ResidualSeries, cap: f64) -> (bool, String) {
    match series.experiment {
        Experiment::Stirling => {
            let worst = series
                .points
                .iter()
                .map(|p| p.residual)
                .fold(0.0f64, f64::max);
            (
                worst <= cap,
                format!("worst t·|exact/asym − 1| {worst:.3} vs cap {cap}"),
            )
        }
        Experiment::Gonek => {
            let ratio = series.extras["worst_ratio_vs_fitted"];
            let sep = series.extras["case_separation"];
            (
                ratio <= 3.0 && sep >= 10.0,
                format!("envelope ratio {ratio:.2} (cap 3), case separation ×{sep:.0} (min 10)"),
            )
        }
        _ => (
            series.fitted_slope <= cap,
            format!("fitted slope {:.4} vs cap {cap}", series.fitted_slope),
        ),
    }
}

fn cmd_run(experiment: &str, config_path: Option<&Path>, overrides: &[String]) -> i32 {
    let cfg = match Config::load(config_path, overrides) {
        Ok(c) => c,
        Err(e) => return fail(2, e),
    };
    if experiment == "gauss-check" {
        return cmd_gauss_check(&cfg);
    }
    let Some(exp) = Experiment::parse(experiment) else {
        return fail(2, format!("unknown experiment {experiment:?}"));
    };

    let result = match exp {
        Experiment::Lemma23 => run_lemma23_cmd(&cfg),
        Experiment::Lemma24 => run_lemma24_cmd(&cfg),
        Experiment::Lemma22 => run_lemma22_cmd(&cfg),
        Experiment::Thm31 => run_thm31_cmd(&cfg),
        Experiment::Cor32 => run_cor32_cmd(&cfg),
        Experiment::Bound11 => run_bound11_cmd(&cfg),
        Experiment::Stirling => run_stirling_cmd(&cfg),
        Experiment::Gonek => run_gonek_cmd(&cfg),
    };
    let series = match result {
        Ok(s) => s,
        Err((code, msg)) => return fail(code, msg),
    };

    let default_cap = if exp == Experiment::Stirling {
        10.0
    } else {
        0.75
    };
    let cap = match cfg.f64_or("cap", default_cap) {
        Ok(c) => c,
        Err(e) => return fail(2, e),
    };
    let (pass, verdict) = judge(&series, cap);
    println!(
        "{}: {verdict} -> {}",
        exp.as_str(),
        if pass { "PASS" } else { "FAIL" }
    );

    let dir = out_dir(&cfg);
    if let Err(e) = std::fs::create_dir_all(&dir) {
        return fail(3, format!("cannot create {}: {e}", dir.display()));
    }
    let hash = cfg.hash();
    let base = dir.join(format!("{}-{hash}", exp.as_str()));
    let csv_path = base.with_extension("csv");
    let json_path = base.with_extension("json");
    if let Err(e) = std::fs::write(&csv_path, series.to_csv()) {
        return fail(3, format!("cannot write {}: {e}", csv_path.display()));
    }
    let doc = json!({
        "experiment": exp.as_str(),
        "config": cfg.entries(),
        "config_hash": hash,
        "cap": cap,
        "pass": pass,
        "series": series,
    });
    if let Err(e) = std::fs::write(&json_path, format!("{doc:#}\n")) {
        return fail(3, format!("cannot write {}: {e}", json_path.display()));
    }
    println!("wrote {} and {}", csv_path.display(), json_path.display());
    if pass {
        0
    } else {
        1
    }
}

type RunResult = Result<ResidualSeries, (i32, String)>;

fn run_lemma23_cmd(cfg: &Config) -> RunResult {
    let bump = build_bump(cfg).map_err(|e| (2, e))?;
    let grid = build_grid(cfg, 100.0, 1e5).map_err(|e| (2, e))?;
    let top = grid.last().unwrap() * bump.support_hi();
    let lambda = resolve_lambda(cfg, top)?;
    run_lemma23(&grid, &bump, &lambda).map_err(|e| (core_exit_code(&e), e.to_string()))
}

fn run_lemma24_cmd(cfg: &Config) -> RunResult {
    let xi = parse_xi(cfg).map_err(|e| (2, e))?;
    let bump = build_bump(cfg).map_err(|e| (2, e))?;
    let grid = build_grid(cfg, 100.0, 1e4).map_err(|e| (2, e))?;
    let lambda = resolve_lambda(cfg, grid.last().unwrap() * bump.support_hi())?;
    run_lemma24(xi, &grid, &bump, &lambda).map_err(|e| (core_exit_code(&e), e.to_string()))
}

fn run_lemma22_cmd(cfg: &Config) -> RunResult {
    let q: u64 = cfg
        .get("chi.q")
        .unwrap_or("3")
        .parse()
        .map_err(|e| (2, format!("chi.q: {e}")))?;
    let index = cfg.usize_or("chi.index", 1).map_err(|e| (2, e))?;
    let table = CharacterTable::new(q).map_err(|e| (2, e.to_string()))?;
    if index >= table.len() {
        return Err((
            2,
            format!("chi.index={index} out of range: φ({q}) = {}", table.len()),
        ));
    }
    let chi = table.character(index);
    let bump = build_bump(cfg).map_err(|e| (2, e))?;
    let grid = build_grid(cfg, 100.0, 1e5).map_err(|e| (2, e))?;
    let lambda = resolve_lambda(cfg, grid.last().unwrap() * bump.support_hi())?;
    run_lemma22(&chi, &grid, &bump, &lambda).map_err(|e| (core_exit_code(&e), e.to_string()))
}

fn run_thm31_cmd(cfg: &Config) -> RunResult {
    let xi = parse_xi(cfg).map_err(|e| (2, e))?;
    let grid = build_grid(cfg, 100.0, 1e4).map_err(|e| (2, e))?;
    let t_top = *grid.last().unwrap();
    let zeros = resolve_zeros(cfg, t_top)?;
    let lambda = resolve_lambda(cfg, t_top / (2.0 * PI * xi.value()))?;
    run_thm31(xi, &grid, &zeros, &lambda).map_err(|e| (core_exit_code(&e), e.to_string()))
}

/// Default smoothed-run grid start: 400, nudged up when the phase's
/// X > 100/ξ hypothesis demands it.
fn smooth_grid_lo(xi: RationalPhase) -> f64 {
    let floor = 100.0 / xi.value();
    if floor >= 400.0 {
        floor * (1.0 + 1e-6)
    } else {
        400.0
    }
}

fn run_cor32_cmd(cfg: &Config) -> RunResult {
    let xi = parse_xi(cfg).map_err(|e| (2, e))?;
    let bump = build_bump(cfg).map_err(|e| (2, e))?;
    let grid = build_grid(cfg, smooth_grid_lo(xi), 5e3).map_err(|e| (2, e))?;
    let x_top = *grid.last().unwrap();
    let zeros = resolve_zeros(cfg, 2.0 * PI * xi.value() * x_top * bump.support_hi())?;
    let lambda = resolve_lambda(cfg, x_top * bump.support_hi())?;
    run_cor32(xi, &grid, &bump, &zeros, &lambda).map_err(|e| (core_exit_code(&e), e.to_string()))
}

fn run_bound11_cmd(cfg: &Config) -> RunResult {
    let xi = parse_xi(cfg).map_err(|e| (2, e))?;
    let bump = build_bump(cfg).map_err(|e| (2, e))?;
    let grid = build_grid(cfg, smooth_grid_lo(xi), 5e3).map_err(|e| (2, e))?;
    let scale_text = cfg.get("scale").unwrap_or("xi-x");
    let scale = ZeroScale::parse(scale_text)
        .ok_or((2, format!("scale must be xi-x or x, got {scale_text:?}")))?;
    let x_top = *grid.last().unwrap();
    let zeros = resolve_zeros(
        cfg,
        2.0 * PI * scale.factor(xi.value()) * x_top * bump.support_hi(),
    )?;
    run_bound11(xi, &grid, &bump, scale, &zeros).map_err(|e| (core_exit_code(&e), e.to_string()))
}

fn run_stirling_cmd(cfg: &Config) -> RunResult {
    let grid = build_grid(cfg, 10.0, 1e5).map_err(|e| (2, e))?;
    run_stirling_scan(&grid).map_err(|e| (core_exit_code(&e), e.to_string()))
}

fn run_gonek_cmd(cfg: &Config) -> RunResult {
    let grid = if cfg.get("grid.lo").is_some() || cfg.get("grid.hi").is_some() {
        build_grid(cfg, 50.0, 400.0).map_err(|e| (2, e))?
    } else {
        vec![50.0, 100.0, 200.0, 400.0]
    };
    run_gonek_scan(&grid).map_err(|e| (core_exit_code(&e), e.to_string()))
}

fn cmd_gauss_check(cfg: &Config) -> i32 {
    let qmax: u64 = match cfg.get("qmax").unwrap_or("50").parse() {
        Ok(q) => q,
        Err(e) => return fail(2, format!("qmax: {e}")),
    };
    let mut worst: f64 = 0.0;
    let mut checked = 0usize;
    for q in 1..=qmax {
        let table = match CharacterTable::new(q) {
            Ok(t) => t,
            Err(e) => return fail(2, e),
        };
        for chi in table.iter() {
            if !chi.is_primitive() {
                continue;
            }
            for n in 0..q {
                match gauss_identity_residual(&chi, n) {
                    Ok(r) => worst = worst.max(r),
                    Err(e) => return fail(3, e),
                }
                checked += 1;
            }
        }
    }
    let pass = worst <= 1e-10;
    println!(
        "gauss-check: {checked} identities over q <= {qmax}, worst residual {worst:.3e} -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    let dir = out_dir(cfg);
    if std::fs::create_dir_all(&dir).is_ok() {
        let doc = json!({
            "experiment": "gauss-check",
            "config": cfg.entries(),
            "config_hash": cfg.hash(),
            "qmax": qmax,
            "checked": checked,
            "worst_residual": worst,
            "cap": 1e-10,
            "pass": pass,
        });
        let path = dir.join(format!("gauss-check-{}.json", cfg.hash()));
        if std::fs::write(&path, format!("{doc:#}\n")).is_ok() {
            println!("wrote {}", path.display());
        }
    }
    if pass {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

fn cmd_report(dir: &Path) -> i32 {
    let entries = match std::fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) => return fail(3, format!("cannot read {}: {e}", dir.display())),
    };
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        println!("warning: no JSON results in {}", dir.display());
        return 0;
    }

    let mut rows = Vec::new();
    let mut any_fail = false;
    for path in &files {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return fail(3, format!("cannot read {}: {e}", path.display())),
        };
        let doc: serde_json::Value = match serde_json::from_str(&text) {
            Ok(d) => d,
            Err(e) => return fail(3, format!("bad JSON in {}: {e}", path.display())),
        };
        let experiment = doc["experiment"].as_str().unwrap_or("?").to_string();
        let hash = doc["config_hash"].as_str().unwrap_or("?").to_string();
        let slope = doc["series"]["fitted_slope"].as_f64();
        let cap = doc["cap"].as_f64().unwrap_or(f64::NAN);
        let pass = doc["pass"].as_bool().unwrap_or(false);
        any_fail |= !pass;

        // gnuplot-ready two-column data per series
        if let Some(points) = doc["series"]["points"].as_array() {
            let mut dat = String::new();
            for p in points {
                if let (Some(s), Some(r)) = (p["scale"].as_f64(), p["residual"].as_f64()) {
                    dat.push_str(&format!("{s:.17e} {r:.17e}\n"));
                }
            }
            let dat_path = dir.join(format!("{experiment}-{hash}.dat"));
            if let Err(e) = std::fs::write(&dat_path, dat) {
                return fail(3, format!("cannot write {}: {e}", dat_path.display()));
            }
        }
        rows.push((experiment, hash, slope, cap, pass));
    }

    println!(
        "{:<12} {:<16} {:>10} {:>8} {:>6}",
        "experiment", "config", "slope", "cap", "pass"
    );
    let mut csv = String::from("experiment,config_hash,slope,cap,pass\n");
    for (experiment, hash, slope, cap, pass) in &rows {
        let slope_text = slope.map_or("-".to_string(), |s| format!("{s:.4}"));
        println!(
            "{experiment:<12} {hash:<16} {slope_text:>10} {cap:>8.2e} {:>6}",
            if *pass { "PASS" } else { "FAIL" }
        );
        csv.push_str(&format!(
            "{experiment},{hash},{slope_text},{cap},{}\n",
            if *pass { "pass" } else { "fail" }
        ));
    }
    let csv_path = dir.join("summary.csv");
    if let Err(e) = std::fs::write(&csv_path, csv) {
        return fail(3, format!("cannot write {}: {e}", csv_path.display()));
    }
    println!("wrote {}", csv_path.display());
    if any_fail {
        1
    } else {
        0
    }
}

//! Command-line interface: exact characters and dimensions, ribbon
//! tableaux, walk distances, cutoff profiles, certified deck numerics, and
//! seeded simulation. JSON on stdout by default, CSV with `--csv`;
//! diagnostics go to stderr. Exit code 2 on invalid input.

mod parse;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::json;

use symmix::certify;
use symmix::characters;
use symmix::montecarlo::{self, SimConfig};
use symmix::profiles;
use symmix::tableaux;
use symmix::walks;

use parse::{parse_cycle_type, parse_partition, parse_rational, parse_walk, WalkArgs};

#[derive(Parser)]
#[command(name = "symmix", version, about = "Symmetric-group shuffles, exactly")]
struct Cli {
    /// Emit CSV instead of JSON
    #[arg(long, global = true)]
    csv: bool,

    /// Emit JSON (the default; kept for explicitness)
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Cap the worker pool used for parallel sections
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact character ch^λ(α) and its normalization
    Char {
        /// Partition literal, e.g. "51,1"
        #[arg(long)]
        lambda: String,
        /// Cycle-type literal, e.g. "1^50,2"
        #[arg(long)]
        alpha: String,
    },
    /// Exact dimension of the representation labelled by λ
    Dim {
        #[arg(long)]
        lambda: String,
    },
    /// Ribbon tableaux of shape λ and weight α
    Ribbons {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        alpha: String,
        /// Include the tableaux themselves (cells and heights)
        #[arg(long)]
        list: bool,
    },
    /// Exact TV distance to (coset) stationarity at one time
    Tv {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long)]
        t: usize,
    },
    /// Distance curve t = 0..=t-max (TV where feasible, plus L2/L∞)
    Dist {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long, default_value_t = 20)]
        t_max: usize,
    },
    /// Poisson cutoff profile a ↦ d_TV(Poiss(1), Poiss(1+e^-a))
    #[command(allow_negative_numbers = true)]
    Profile {
        #[arg(long, default_value_t = -4.0)]
        a_min: f64,
        #[arg(long, default_value_t = 4.0)]
        a_max: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
    },
    /// Certified main/error terms and mixing-time brackets (default n=52)
    Numerics52 {
        #[arg(long, default_value_t = 52)]
        n: usize,
        /// Report only the bracket for this threshold, e.g. "1e-2"
        #[arg(long)]
        eps: Option<String>,
        /// Precision of the 1/e enclosure, in bits
        #[arg(long, default_value_t = certify::DEFAULT_PRECISION_BITS)]
        precision: u32,
    },
    /// Exact even/odd derangement counts
    Derangements {
        #[arg(long)]
        n: usize,
    },
    /// Seeded simulation of a walk (fixed-point histogram or parity)
    Simulate {
        #[command(flatten)]
        walk: WalkArgs,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Observable: "fixed-points" (default) or "parity"
        #[arg(long, default_value = "fixed-points")]
        observable: String,
    },
}

fn main() -> ExitCode {
    // die quietly when the consumer closes the pipe (e.g. `symmix ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), String> {
    match &cli.command {
        Command::Char { lambda, alpha } => {
            let shape = parse_partition(lambda)?;
            let class = parse_cycle_type(alpha)?;
            let value = characters::character(&shape, &class).map_err(|e| e.to_string())?;
            if cli.csv {
                println!("raw,normalized");
                println!("{},{}", value.raw, value.normalized);
            } else {
                print_json(&json!({
                    "raw": value.raw.to_string(),
                    "normalized": value.normalized.to_string(),
                }));
            }
        }
        Command::Dim { lambda } => {
            let shape = parse_partition(lambda)?;
            let dim = tableaux::dimension(&shape);
            if cli.csv {
                println!("n,dimension");
                println!("{},{dim}", shape.size());
            } else {
                print_json(&json!({
                    "n": shape.size(),
                    "dimension": dim.to_string(),
                }));
            }
        }
        Command::Ribbons {
            lambda,
            alpha,
            list,
        } => {
            let shape = parse_partition(lambda)?;
            let weight = parse_cycle_type(alpha)?;
            let count =
                tableaux::count_ribbon_tableaux(&shape, &weight).map_err(|e| e.to_string())?;
            let signed = tableaux::signed_ribbon_sum(&shape, &weight).map_err(|e| e.to_string())?;
            if cli.csv {
                println!("count,signed_sum");
                println!("{count},{signed}");
            } else {
                let mut out = json!({
                    "count": count.to_string(),
                    "signed_sum": signed.to_string(),
                });
                if *list {
                    let tableaux = tableaux::enumerate_ribbon_tableaux(&shape, &weight)
                        .map_err(|e| e.to_string())?;
                    out["tableaux"] = serde_json::to_value(&tableaux).map_err(|e| e.to_string())?;
                }
                print_json(&out);
            }
        }
        Command::Tv { walk, t } => {
            let spec = parse_walk(walk)?;
            let target = spec.natural_target(*t);
            let tv = walks::tv_fourier(&spec, *t, target).map_err(|e| e.to_string())?;
            if cli.csv {
                println!("t,target,tv,tv_float");
                println!("{t},{target:?},{tv},{}", tv.to_f64().unwrap_or(f64::NAN));
            } else {
                print_json(&json!({
                    "n": spec.n(),
                    "t": t,
                    "target": format!("{target:?}"),
                    "tv": tv.to_string(),
                    "tv_float": tv.to_f64(),
                }));
            }
        }
        Command::Dist { walk, t_max } => {
            let spec = parse_walk(walk)?;
            let mut rows = Vec::new();
            for t in 0..=*t_max {
                let tv = walks::tv_fourier(&spec, t, spec.natural_target(t))
                    .ok()
                    .and_then(|v| v.to_f64());
                let l2 = walks::l2_distance(&spec, t).ok();
                let linf = walks::linf_distance(&spec, 2 * t).ok();
                rows.push((t, tv, l2, linf));
            }
            if cli.csv {
                println!("t,d_tv,d_l2,d_linf");
                for (t, tv, l2, linf) in rows {
                    println!(
                        "{t},{},{},{}",
                        tv.map_or(String::new(), |v| v.to_string()),
                        l2.map_or(String::new(), |v| v.to_string()),
                        linf.map_or(String::new(), |v| v.to_string()),
                    );
                }
            } else {
                let rows: Vec<_> = rows
                    .into_iter()
                    .map(
                        |(t, tv, l2, linf)| json!({"t": t, "d_tv": tv, "d_l2": l2, "d_linf": linf}),
                    )
                    .collect();
                print_json(&json!(rows));
            }
        }
        Command::Profile { a_min, a_max, step } => {
            if !(*step > 0.0) {
                return Err("step must be positive".into());
            }
            let points = profiles::profile_curve(*a_min, *a_max, *step);
            if cli.csv {
                println!("a,value");
                for p in points {
                    println!("{},{}", p.a, p.value);
                }
            } else {
                print_json(&serde_json::to_value(&points).map_err(|e| e.to_string())?);
            }
        }
        Command::Numerics52 { n, eps, precision } => {
            run_numerics(cli, *n, eps.as_deref(), *precision)?;
        }
        Command::Derangements { n } => {
            let (even, odd) = certify::derangement_parity(*n);
            if cli.csv {
                println!("even,odd");
                println!("{even},{odd}");
            } else {
                print_json(&json!({
                    "n": n,
                    "even": even.to_string(),
                    "odd": odd.to_string(),
                }));
            }
        }
        Command::Simulate {
            walk,
            t,
            trials,
            seed,
            observable,
        } => {
            let spec = parse_walk(walk)?;
            let config =
                SimConfig::new(spec.clone(), *t, *trials, *seed).map_err(|e| e.to_string())?;
            let started = std::time::Instant::now();
            match observable.as_str() {
                "fixed-points" => {
                    let histogram = montecarlo::fixed_point_histogram(&config);
                    eprintln!("wall time: {:?}", started.elapsed());
                    let hist_json: serde_json::Map<String, serde_json::Value> = histogram
                        .iter()
                        .map(|(k, v)| (k.to_string(), json!(v)))
                        .collect();
                    print_json(&json!({
                        "walk": walk.describe(),
                        "n": spec.n(),
                        "t": t,
                        "trials": trials,
                        "seed": seed,
                        "rng": montecarlo::RNG_ALGORITHM,
                        "observable": "fixed-points",
                        "histogram": hist_json,
                    }));
                }
                "parity" => {
                    let empirical =
                        montecarlo::empirical_parity(&config).map_err(|e| e.to_string())?;
                    eprintln!("wall time: {:?}", started.elapsed());
                    let forecast = certify::lazy_parity_probability(spec.n(), *t)
                        .map_err(|e| e.to_string())?;
                    print_json(&json!({
                        "walk": walk.describe(),
                        "n": spec.n(),
                        "t": t,
                        "trials": trials,
                        "seed": seed,
                        "rng": montecarlo::RNG_ALGORITHM,
                        "observable": "parity",
                        "empirical_even": empirical,
                        "forecast_exact": forecast.exact.to_f64(),
                        "forecast_poisson": forecast.poisson,
                    }));
                }
                other => return Err(format!("unknown observable '{other}'")),
            }
        }
    }
    Ok(())
}

fn run_numerics(cli: &Cli, n: usize, eps: Option<&str>, precision: u32) -> Result<(), String> {
    if let Some(eps) = eps {
        let eps: BigRational = parse_rational(eps)?;
        let (lower, upper) = certify::tmix_bracket(n, &eps).map_err(|e| e.to_string())?;
        if cli.csv {
            println!("lower,upper");
            println!("{lower},{upper}");
        } else {
            print_json(&json!({"lower": lower, "upper": upper}));
        }
        return Ok(());
    }

    // full report: the three standard brackets plus the table around them
    let thresholds = [("1e-2", 100i64), ("1e-3", 1000), ("1e-4", 10000)];
    let mut brackets = serde_json::Map::new();
    let mut times: Vec<usize> = Vec::new();
    for (label, denom) in thresholds {
        let eps = BigRational::new(1.into(), (denom).into());
        let (lower, upper) = certify::tmix_bracket(n, &eps).map_err(|e| e.to_string())?;
        for t in lower.saturating_sub(1)..=upper {
            if !times.contains(&t) {
                times.push(t);
            }
        }
        brackets.insert(label.to_string(), json!({"lower": lower, "upper": upper}));
    }
    times.sort_unstable();

    let mut rows = Vec::new();
    for &t in &times {
        let m = certify::main_term_bits(n, t, precision).map_err(|e| e.to_string())?;
        let eps_term = certify::error_term(n, t).map_err(|e| e.to_string())?;
        let d = certify::distance_bracket(n, t).map_err(|e| e.to_string())?;
        let (m_lo, m_hi) = m.to_f64_outward();
        let (_, eps_hi) = eps_term.to_f64_outward();
        let (d_lo, d_hi) = d.to_f64_outward();
        rows.push((t, m_lo, m_hi, eps_hi, d_lo, d_hi));
    }

    if cli.csv {
        println!("t,m_lo,m_hi,eps_hi,d_lo,d_hi");
        for (t, m_lo, m_hi, eps_hi, d_lo, d_hi) in rows {
            println!("{t},{m_lo:e},{m_hi:e},{eps_hi:e},{d_lo:e},{d_hi:e}");
        }
        for (label, denom) in thresholds {
            let eps = BigRational::new(1.into(), denom.into());
            let (lower, upper) = certify::tmix_bracket(n, &eps).map_err(|e| e.to_string())?;
            println!("tmix({label}),{lower},{upper}");
        }
    } else {
        let table: Vec<_> = rows
            .into_iter()
            .map(|(t, m_lo, m_hi, eps_hi, d_lo, d_hi)| {
                json!({
                    "t": t,
                    "m_lo": m_lo,
                    "m_hi": m_hi,
                    "eps_hi": eps_hi,
                    "d_lo": d_lo,
                    "d_hi": d_hi,
                })
            })
            .collect();
        print_json(&json!({
            "n": n,
            "brackets": brackets,
            "table": table,
        }));
    }
    Ok(())
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

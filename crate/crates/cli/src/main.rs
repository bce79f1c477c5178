//! `lmnzeta`: compute, render and verify zeta functions of `L_{m,n}`.
//!
//! Exit status: 0 on success, 1 when a verification or check fails, 2 on a
//! usage error or when an enumeration would exceed the ceiling.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lmnzeta::combinat::e_count;
use lmnzeta::exactalg::{fmt_ratio, Exp, RationalFunction};
use lmnzeta::igusa::{igusa_factored_last, igusa_permutation, igusa_subset, IgusaData};
use lmnzeta::liering::{
    b_matrix_direct, b_matrix_recursive, build_structure, full_commutator_matrix, full_rank_over_fp,
};
use lmnzeta::oracle::{check_census, congruence_trials, rep_matrix_check, verify_dirichlet, DEFAULT_CEILING};
use lmnzeta::render::{self, Format};
use lmnzeta::zetas::{
    check_functional_equation, check_zero_behaviour, graded_ideal_zeta, ideal_zeta, numerical_data, reduced_ideal_zeta,
    rep_zeta, topological_ideal_zeta, zeta_report,
};
use lmnzeta::Error;

/// Environment variable overriding the default enumeration ceiling.
const CEILING_ENV: &str = "LMNZETA_ORACLE_CEILING";
const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser)]
#[command(name = "lmnzeta", version, about = "Zeta functions of the Lie rings L_{m,n}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Pair {
    /// First index m >= 1.
    #[arg(value_parser = clap::value_parser!(u32).range(1..))]
    m: u32,
    /// Second index n >= 1.
    #[arg(value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Latex,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Latex => Format::Latex,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Funceq,
    Zero,
    Igusa,
    Commat,
    Congruence,
    Repmatrix,
    Census,
}

#[derive(Subcommand)]
enum Command {
    /// Ideal zeta function.
    Ideal {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Graded ideal zeta function.
    Graded {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Representation zeta function (local factor, or topological form).
    Rep {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Print the topological form instead of the local factor.
        #[arg(long)]
        topological: bool,
    },
    /// Topological ideal zeta function.
    Topo {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Reduced ideal zeta function in Y, with mu.
    Reduced {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Dimensions, numerical data, alpha, beta and mu.
    Invariants {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Dirichlet coefficients of the (graded) ideal zeta function.
    Coeffs {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 5)]
        upto: u32,
        /// Evaluate at q = prime.
        #[arg(long)]
        prime: Option<i64>,
        #[arg(long)]
        graded: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Compare coefficients with lattice enumeration; prints JSON lines.
    Verify {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        prime: i64,
        #[arg(long)]
        upto: u32,
        #[arg(long)]
        graded: bool,
        /// Worker threads for the enumeration.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        threads: Option<u64>,
        /// Largest admissible estimated enumeration size.
        #[arg(long)]
        ceiling: Option<f64>,
    },
    /// Run property suites for one pair.
    Check {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "funceq,zero,igusa,commat")]
        suite: Vec<Suite>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Prime for the randomized and census suites.
        #[arg(long, default_value_t = 2)]
        prime: i64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        threads: Option<u64>,
        /// With the commat suite, also print B_{m,n}(Y) and M_{m,n}(Y).
        #[arg(long)]
        print: bool,
    },
    /// Everything computed for one pair.
    Report {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

enum Failure {
    Usage(String),
    Mismatch,
}

fn is_prime(p: i64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn require_prime(p: i64) -> Result<(), Failure> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{p} is not a prime")))
    }
}

fn set_threads(threads: Option<u64>) -> Result<(), Failure> {
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t as usize)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn ceiling(flag: Option<f64>) -> Result<f64, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CEILING_ENV) {
        Ok(v) => v
            .trim()
            .parse::<f64>()
            .map_err(|_| Failure::Usage(format!("{CEILING_ENV}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_CEILING),
    }
}

fn print_rf(rf: &RationalFunction, format: FormatArg) {
    println!("{}", render::render_rational_function(rf, format.into()));
}

fn coeffs(pair: Pair, upto: u32, prime: Option<i64>, graded: bool, format: FormatArg) -> Result<(), Failure> {
    let z = if graded {
        graded_ideal_zeta(pair.m, pair.n)
    } else {
        ideal_zeta(pair.m, pair.n)
    };
    let series = z
        .series_coeffs(upto as usize)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    if let Some(p) = prime {
        require_prime(p)?;
        let values: Vec<String> = series
            .iter()
            .map(|c| c.eval_q_integer(&p.into()).expect("polynomial in q").to_string())
            .collect();
        match format {
            FormatArg::Json => println!("[{}]", values.join(",")),
            _ => values.iter().enumerate().for_each(|(k, v)| println!("{k}: {v}")),
        }
        return Ok(());
    }
    match format {
        FormatArg::Json => println!("{}", serde_json::to_string(&series).expect("plain data")),
        FormatArg::Text => series.iter().enumerate().for_each(|(k, c)| println!("{k}: {c}")),
        FormatArg::Latex => series.iter().enumerate().for_each(|(k, c)| {
            let rf = RationalFunction::from_poly(c.clone());
            println!("a_{{p^{k}}} = {}", render::latex_rational_function(&rf));
        }),
    }
    Ok(())
}

fn verify(pair: Pair, prime: i64, upto: u32, graded: bool, limit: f64) -> Result<(), Failure> {
    require_prime(prime)?;
    match verify_dirichlet(pair.m, pair.n, prime, upto, graded, limit) {
        Ok(records) => {
            for r in &records {
                println!("{}", serde_json::to_string(r).expect("plain data"));
            }
            if records.iter().all(|r| r.matches) {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Err(Error::CeilingExceeded { estimate, ceiling }) => Err(Failure::Usage(format!(
            "estimated enumeration size {estimate:.3e} exceeds the ceiling {ceiling:.3e} (raise with --ceiling or {CEILING_ENV})"
        ))),
        Err(e) => Err(Failure::Usage(e.to_string())),
    }
}

fn igusa_suite(m: u32, n: u32) -> bool {
    let data = numerical_data(m, n);
    let y = Exp::new(-1, 0);
    [data.igusa_x(), data.graded_igusa_x()].into_iter().all(|x| {
        let d = IgusaData::new(y, x).expect("valid data");
        let perm = igusa_permutation(&d);
        perm.equals(&igusa_subset(&d)) && perm.equals(&igusa_factored_last(&d))
    })
}

fn commat_suite(m: u32, n: u32) -> bool {
    let same = b_matrix_direct(&build_structure(m, n)) == b_matrix_recursive(m, n);
    let ranks = e_count(m, n) > 10 || [2, 3].into_iter().all(|p| full_rank_over_fp(m, n, p));
    same && ranks
}

fn run_suite(suite: Suite, pair: Pair, seed: u64, prime: i64) -> Result<Option<bool>, Failure> {
    let (m, n) = (pair.m, pair.n);
    Ok(match suite {
        Suite::Funceq => Some(check_functional_equation(m, n)),
        Suite::Zero => {
            let (a, b) = check_zero_behaviour(m, n).map_err(|e| Failure::Usage(e.to_string()))?;
            Some(a && b)
        }
        Suite::Igusa => Some(igusa_suite(m, n)),
        Suite::Commat => Some(commat_suite(m, n)),
        Suite::Congruence => (n >= 2).then(|| congruence_trials(m, n, prime, 3, 20, seed).iter().all(|(_, ok)| *ok)),
        Suite::Repmatrix => Some((0..20).all(|i| rep_matrix_check(m, n, prime, 3, seed.wrapping_add(i)))),
        Suite::Census => (n <= 3).then(|| check_census(n as usize, prime, 1)),
    })
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Funceq => "funceq",
        Suite::Zero => "zero",
        Suite::Igusa => "igusa",
        Suite::Commat => "commat",
        Suite::Congruence => "congruence",
        Suite::Repmatrix => "repmatrix",
        Suite::Census => "census",
    }
}

fn check(pair: Pair, suites: &[Suite], seed: u64, prime: i64, print: bool) -> Result<(), Failure> {
    require_prime(prime)?;
    let mut all_ok = true;
    for &s in suites {
        let status = match run_suite(s, pair, seed, prime)? {
            Some(true) => "pass",
            Some(false) => {
                all_ok = false;
                "FAIL"
            }
            None => "skipped",
        };
        println!("{}: {status}", suite_name(s));
        if print && s == Suite::Commat {
            print!("B:\n{}", b_matrix_recursive(pair.m, pair.n));
            print!("M:\n{}", full_commutator_matrix(pair.m, pair.n));
        }
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Ideal { pair, format } => print_rf(&ideal_zeta(pair.m, pair.n), format),
        Command::Graded { pair, format } => print_rf(&graded_ideal_zeta(pair.m, pair.n), format),
        Command::Rep {
            pair,
            format,
            topological,
        } => {
            let z = rep_zeta(pair.m, pair.n);
            if topological {
                println!("{}", render::render_srational(&z.topological, format.into()));
            } else {
                print_rf(&z.local, format);
            }
        }
        Command::Topo { pair, format } => {
            let t = topological_ideal_zeta(pair.m, pair.n);
            println!("{}", render::render_srational(&t, format.into()));
        }
        Command::Reduced { pair, format } => {
            let r = reduced_ideal_zeta(pair.m, pair.n);
            match format {
                FormatArg::Json => println!(
                    "{{\"function\":{},\"mu\":\"{}\"}}",
                    serde_json::to_string(&r.function).expect("plain data"),
                    fmt_ratio(&r.mu)
                ),
                FormatArg::Text => println!(
                    "{}\nmu={}",
                    render::y_rational_function(&r.function, false),
                    render::text_ratio(&fmt_ratio(&r.mu))
                ),
                FormatArg::Latex => println!("{}", render::y_rational_function(&r.function, true)),
            }
        }
        Command::Invariants { pair, format } => {
            println!(
                "{}",
                render::render_invariants(&render::invariants(pair.m, pair.n), format.into())
            );
        }
        Command::Coeffs {
            pair,
            upto,
            prime,
            graded,
            format,
        } => coeffs(pair, upto, prime, graded, format)?,
        Command::Verify {
            pair,
            prime,
            upto,
            graded,
            threads,
            ceiling: flag,
        } => {
            set_threads(threads)?;
            let limit = ceiling(flag)?;
            verify(pair, prime, upto, graded, limit)?;
        }
        Command::Check {
            pair,
            suite,
            seed,
            prime,
            threads,
            print,
        } => {
            set_threads(threads)?;
            check(pair, &suite, seed, prime, print)?;
        }
        Command::Report { pair, format } => {
            println!("{}", render::render_report(&zeta_report(pair.m, pair.n), format.into()));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

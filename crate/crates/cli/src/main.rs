use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use seshadri::crosssection::cross_section;
use seshadri::nslattice::self_intersection;
use seshadri::sampling::random_ample;
use seshadri::scalar::{fmt_ratio, parse_ratio};
use seshadri::{cm, nocm, oracle, NsClass, Rational, SurfaceKind};

mod record;
mod tables;

use record::{number, CurvesRecord, OutputRecord};

const EX_DOMAIN: u8 = 2;
const EX_MISMATCH: u8 = 3;
const EX_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "seshadri", version, about = "Seshadri constants on self-products of elliptic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Surface {
    Nocm,
    #[value(name = "cm-i")]
    CmI,
    #[value(name = "cm-rho")]
    CmRho,
}

impl From<Surface> for SurfaceKind {
    fn from(s: Surface) -> Self {
        match s {
            Surface::Nocm => SurfaceKind::NoCm,
            Surface::CmI => SurfaceKind::CmGaussian,
            Surface::CmRho => SurfaceKind::CmEisenstein,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Seshadri constant and the curves computing it.
    Epsilon {
        #[arg(long, value_enum)]
        surface: Surface,
        /// Coefficients of F1,F2,Delta[,Sigma], comma separated.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        coeffs: Vec<BigInt>,
        /// Recompute with the brute-force oracle and fail on disagreement.
        #[arg(long)]
        check_oracle: bool,
    },
    /// Submaximal elliptic curves on the surface without CM.
    Curves {
        #[arg(long, value_enum, default_value = "nocm")]
        surface: Surface,
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        coeffs: Vec<BigInt>,
        /// Include curves with (L.C)^2 = L^2.
        #[arg(long)]
        weak: bool,
    },
    /// The function mu -> eps(F1 + lambda F2 - mu Delta).
    CrossSection {
        /// Rational in (0, 1], written p/q.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Grid points for the CSV samples.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Recompute a reference table as CSV.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Compare theorem and oracle on random ample classes.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Classes per surface.
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    Mismatch(String),
}

impl From<seshadri::Error> for Failure {
    fn from(e: seshadri::Error) -> Self {
        match e {
            seshadri::Error::WrongArity { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EX_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    configure_threads();
    let result = match cli.command {
        Command::Epsilon { surface, coeffs, check_oracle } => cmd_epsilon(surface.into(), coeffs, check_oracle),
        Command::Curves { surface, coeffs, weak } => cmd_curves(surface.into(), coeffs, weak),
        Command::CrossSection { lambda, format, samples } => cmd_cross_section(&lambda, format, samples),
        Command::Table { which } => cmd_table(which),
        Command::Check { seed, count } => cmd_check(seed, count),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EX_USAGE)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EX_DOMAIN)
        }
        Err(Failure::Mismatch(m)) => {
            eprintln!("oracle mismatch: {m}");
            ExitCode::from(EX_MISMATCH)
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("SESHADRI_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn emit_json<T: serde::Serialize>(value: &T) -> Outcome {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer(&mut out, value).map_err(anyhow::Error::from)?;
    writeln!(out).map_err(anyhow::Error::from)?;
    Ok(())
}

/// The record `epsilon` prints; shared with `check` and `table`.
pub(crate) fn compute_record(l: &NsClass) -> Result<OutputRecord, seshadri::Error> {
    let (epsilon, witnesses, weak) = if l.surface().is_cm() {
        let r = cm::epsilon_cm(l)?;
        (r.epsilon, r.witnesses.into_iter().map(|w| w.label).collect(), None)
    } else {
        let r = nocm::epsilon(l)?;
        let weak = nocm::submaximal_curves(l, true)?.iter().map(|c| c.label()).collect();
        (r.epsilon, r.witnesses.iter().map(|c| c.label()).collect(), Some(weak))
    };
    Ok(OutputRecord {
        surface: l.surface().name().to_string(),
        coeffs: l.coeffs().iter().map(number).collect(),
        l_squared: number(&self_intersection(l)),
        epsilon: number(&epsilon),
        witnesses,
        weak_submaximal: weak,
    })
}

fn oracle_epsilon(l: &NsClass) -> Result<BigInt, seshadri::Error> {
    if l.surface().is_cm() {
        oracle::brute_epsilon_cm(l)
    } else {
        oracle::brute_epsilon_nocm(l)
    }
}

fn cmd_epsilon(kind: SurfaceKind, coeffs: Vec<BigInt>, check_oracle: bool) -> Outcome {
    let l = NsClass::new(kind, coeffs)?;
    let rec = compute_record(&l)?;
    if check_oracle {
        let brute = oracle_epsilon(&l)?;
        if number(&brute) != rec.epsilon {
            return Err(Failure::Mismatch(format!("{l}: theorem {}, oracle {brute}", rec.epsilon)));
        }
    }
    emit_json(&rec)
}

fn cmd_curves(kind: SurfaceKind, coeffs: Vec<BigInt>, weak: bool) -> Outcome {
    if kind != SurfaceKind::NoCm {
        return Err(Failure::Usage("curves is available for --surface nocm only".into()));
    }
    let l = NsClass::new(kind, coeffs)?;
    let curves = nocm::submaximal_curves(&l, weak)?;
    emit_json(&CurvesRecord {
        surface: kind.name().to_string(),
        coeffs: l.coeffs().iter().map(number).collect(),
        l_squared: number(&self_intersection(&l)),
        weak,
        curves: curves.iter().map(|c| c.label()).collect(),
    })
}

fn cmd_cross_section(lambda: &str, format: Format, samples: usize) -> Outcome {
    let lambda: Rational =
        parse_ratio(lambda).ok_or_else(|| Failure::Usage(format!("cannot read {lambda:?} as p/q")))?;
    let f = cross_section(&lambda)?;
    match format {
        Format::Json => emit_json(&record::CrossSectionRecord::from(&f)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout().lock());
            w.write_record(["mu", "value", "slope", "intercept", "witness", "breakpoint"])
                .map_err(anyhow::Error::from)?;
            for (mu, is_break) in sample_points(&f, samples) {
                let seg = f.segment_at(&mu);
                let value = f.evaluate(&mu)?;
                w.write_record([
                    fmt_ratio(&mu),
                    fmt_ratio(&value),
                    fmt_ratio(&seg.slope),
                    fmt_ratio(&seg.intercept),
                    seg.witness.label(),
                    is_break.to_string(),
                ])
                .map_err(anyhow::Error::from)?;
            }
            w.flush().map_err(anyhow::Error::from)?;
            Ok(())
        }
    }
}

/// An even grid on `[min(b₁, 0) − 1, mu_max]` merged with the breakpoints.
fn sample_points(f: &seshadri::PiecewiseLinear, samples: usize) -> Vec<(Rational, bool)> {
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    let first = f.breakpoints.first().cloned().unwrap_or(zero.clone());
    let lo = first.min(zero) - one;
    let mut pts: Vec<(Rational, bool)> = f.breakpoints.iter().map(|b| (b.clone(), true)).collect();
    pts.push((f.mu_max.clone(), false));
    if samples >= 2 {
        let step = (&f.mu_max - &lo) / Rational::from_integer(BigInt::from(samples - 1));
        for i in 0..samples {
            pts.push((&lo + &step * Rational::from_integer(BigInt::from(i)), false));
        }
    }
    pts.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    pts.dedup_by(|later, kept| later.0 == kept.0);
    pts
}

fn cmd_table(which: u8) -> Outcome {
    let csv = if which == 1 { tables::table1()? } else { tables::table2()? };
    std::io::stdout().lock().write_all(csv.as_bytes()).map_err(anyhow::Error::from)?;
    Ok(())
}

#[derive(serde::Serialize)]
struct CheckReport {
    seed: u64,
    count_per_surface: usize,
    checked: usize,
    mismatches: Vec<String>,
}

fn cmd_check(seed: u64, count: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut classes: Vec<NsClass> = Vec::new();
    for (kind, bound) in [(SurfaceKind::NoCm, 50), (SurfaceKind::CmGaussian, 8), (SurfaceKind::CmEisenstein, 8)] {
        classes.extend((0..count).map(|_| random_ample(&mut rng, kind, bound)));
    }
    let results: Vec<Result<Option<String>, seshadri::Error>> = classes
        .par_iter()
        .map(|l| {
            let theorem = if l.surface().is_cm() { cm::epsilon_cm(l)?.epsilon } else { nocm::epsilon(l)?.epsilon };
            let brute = oracle_epsilon(l)?;
            Ok((theorem != brute).then(|| format!("{l}: theorem {theorem}, oracle {brute}")))
        })
        .collect();
    let mut mismatches = Vec::new();
    for r in results {
        if let Some(m) = r? {
            mismatches.push(m);
        }
    }
    let report = CheckReport { seed, count_per_surface: count, checked: classes.len(), mismatches };
    emit_json(&report)?;
    if report.mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("{} of {} classes", report.mismatches.len(), report.checked)))
    }
}

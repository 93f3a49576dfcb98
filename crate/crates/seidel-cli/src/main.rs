//! Command-line front end: analysis, searches, the feasibility battery,
//! survey tables and enumeration, with machine-readable JSON output.
//!
//! Exit codes: 0 success, 2 input error, 3 search budget exceeded.
//! Verdicts are data, not exit codes.

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use seidel::enumerate::{enumerate_classes, enumerate_classes_extended};
use seidel::error::Error as SeidelError;
use seidel::feasibility::{
    extremal_table, parse_spectrum, render_extremal_table, render_survey_table, run_battery,
    survey_table, Facts,
};
use seidel::fixtures;
use seidel::io::{parse_edges, parse_smat, write_smat};
use seidel::lines::line_params;
use seidel::regular::{find_regular_graphs_with_budget, RegularWitness, SearchBudget};
use seidel::seidel::{euler_switch, seidel_from_graph, SeidelMatrix};
use seidel::spectra::{distinct_eigenvalue_count, mod2_charpoly_class, spectrum};
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "seidel",
    about = "Exact-arithmetic analysis of Seidel matrices, switching classes and equiangular lines",
    version
)]
struct Cli {
    /// Worker threads for exhaustive searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectrum, line parameters and congruence classes of one matrix.
    Analyze {
        /// Input file.
        #[arg(long)]
        input: PathBuf,
        /// Input format: smat or edges.
        #[arg(long, default_value = "smat")]
        format: String,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive search for regular graphs in the switching class.
    SearchRegular {
        #[arg(long)]
        input: PathBuf,
        /// Maximum order searched exhaustively.
        #[arg(long, default_value_t = 24)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the feasibility battery on a candidate spectrum.
    Battery {
        /// Candidate in the spectrum grammar, e.g. "-5^24,5^6,9^10".
        #[arg(long, allow_hyphen_values = true)]
        spectrum: String,
        /// Nonexistence facts file (defaults to the built-in facts).
        #[arg(long)]
        facts: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Survey of the fifteen three-eigenvalue spectra at orders 28..95.
    Table2 {
        #[arg(long)]
        facts: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Spectra forced at the floor of the relative bound per dimension.
    Table3 {
        /// Dimension range, e.g. 14..23 (inclusive).
        #[arg(long, default_value = "14..23")]
        d_range: String,
        /// Smallest eigenvalue.
        #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
        lambda0: i64,
        #[arg(long)]
        facts: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate switching classes of order n.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Allow the long-running order 7.
        #[arg(long)]
        long: bool,
        /// Write the per-class results file here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Write the construction fixtures as smat files.
    Fixtures {
        /// Target directory.
        #[arg(long)]
        emit: PathBuf,
    },
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes early
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    if let Some(se) = e.downcast_ref::<SeidelError>() {
        match se {
            SeidelError::BudgetExceeded { .. } | SeidelError::OrderTooLarge { .. } => 3,
            _ => 2,
        }
    } else {
        2
    }
}

fn load_facts(path: Option<&Path>) -> anyhow::Result<Facts> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p)?;
            Ok(Facts::parse(&text)?)
        }
        None => Ok(Facts::builtin()),
    }
}

fn read_matrix(input: &Path, format: &str) -> anyhow::Result<SeidelMatrix> {
    let text = std::fs::read_to_string(input)?;
    match format {
        "smat" => Ok(parse_smat(&text)?),
        "edges" => Ok(seidel_from_graph(&parse_edges(&text)?)),
        other => Err(SeidelError::Precondition(format!(
            "unknown format {other:?} (expected smat or edges)"
        ))
        .into()),
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    order: usize,
    spectrum: String,
    distinct_eigenvalues: usize,
    line_params: Option<seidel::lines::LineSystemParams>,
    mod2_class: seidel::spectra::Mod2Class,
    euler_switching: Option<String>,
}

fn run(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Analyze {
            input,
            format,
            json,
        } => {
            let s = read_matrix(&input, &format)?;
            let spec = spectrum(&s);
            let report = AnalyzeReport {
                order: s.order(),
                spectrum: spec.render(),
                distinct_eigenvalues: distinct_eigenvalue_count(&s),
                line_params: line_params(&s).ok(),
                mod2_class: mod2_charpoly_class(&s),
                euler_switching: euler_switch(&s).map(|v| v.render()),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("order                : {}", report.order);
                println!("spectrum             : {}", report.spectrum);
                println!("distinct eigenvalues : {}", report.distinct_eigenvalues);
                match &report.line_params {
                    Some(p) => println!("line system          : {}", p.describe()),
                    None => println!("line system          : (not applicable)"),
                }
                println!(
                    "mod-2 char class     : parity {:?}, matches {}",
                    report.mod2_class.parity, report.mod2_class.matches
                );
                match &report.euler_switching {
                    Some(v) => println!("euler switching      : {v}"),
                    None => println!("euler switching      : none exists"),
                }
            }
            Ok(())
        }
        Command::SearchRegular {
            input,
            budget,
            json,
        } => {
            let s = read_matrix(&input, "smat")?;
            let witnesses =
                find_regular_graphs_with_budget(&s, SearchBudget { max_order: budget })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&witnesses)?);
            } else {
                render_witnesses(&s, &witnesses);
            }
            Ok(())
        }
        Command::Battery {
            spectrum,
            facts,
            json,
        } => {
            let candidate = parse_spectrum(&spectrum)?;
            let facts = load_facts(facts.as_deref())?;
            let report = run_battery(&candidate, &facts);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.render_text());
            }
            Ok(())
        }
        Command::Table2 { facts, json } => {
            let facts = load_facts(facts.as_deref())?;
            let rows = survey_table(&facts);
            if json {
                let only_rows: Vec<_> = rows.iter().map(|(r, _)| r).collect();
                println!("{}", serde_json::to_string_pretty(&only_rows)?);
            } else {
                let only_rows: Vec<_> = rows.iter().map(|(r, _)| r.clone()).collect();
                print!("{}", render_survey_table(&only_rows));
            }
            Ok(())
        }
        Command::Table3 {
            d_range,
            lambda0,
            facts,
            json,
        } => {
            let (lo, hi) = parse_range(&d_range)?;
            let facts = load_facts(facts.as_deref())?;
            let rows = extremal_table(lo..=hi, &BigInt::from(lambda0), &facts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                print!("{}", render_extremal_table(&rows));
            }
            Ok(())
        }
        Command::Enumerate { n, long, out, json } => {
            let classes = if long {
                enumerate_classes_extended(n)?
            } else {
                enumerate_classes(n)?
            };
            let with_witnesses: Vec<(usize, &seidel::enumerate::CanonicalClass)> = classes
                .iter()
                .map(|c| {
                    let count = find_regular_graphs_with_budget(
                        &c.representative,
                        SearchBudget { max_order: 24 },
                    )
                    .map(|w| w.len())
                    .unwrap_or(0);
                    (count, c)
                })
                .collect();
            if let Some(path) = &out {
                let mut text = String::new();
                for (count, class) in &with_witnesses {
                    text.push_str(&seidel::enumerate::render_class_line(class, *count));
                    text.push('\n');
                }
                std::fs::write(path, text)?;
            }
            if json {
                #[derive(Serialize)]
                struct ClassRow {
                    representative: String,
                    spectrum: String,
                    labeled_count: Option<u64>,
                    regular_witnesses: usize,
                }
                let rows: Vec<ClassRow> = with_witnesses
                    .iter()
                    .map(|(count, c)| ClassRow {
                        representative: seidel::enumerate::render_class_line(c, *count)
                            .split_whitespace()
                            .next()
                            .unwrap_or_default()
                            .to_string(),
                        spectrum: c.spectrum.render(),
                        labeled_count: c.labeled_count,
                        regular_witnesses: *count,
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                println!("{} classes", classes.len());
                for (count, class) in &with_witnesses {
                    println!(
                        "  {}  witnesses: {}  labeled: {}",
                        class.spectrum.render(),
                        count,
                        class.labeled_count.unwrap_or(1),
                    );
                }
            }
            Ok(())
        }
        Command::Fixtures { emit } => {
            std::fs::create_dir_all(&emit)?;
            let items: Vec<(&str, SeidelMatrix)> = vec![
                ("s10.smat", fixtures::s10()),
                ("s6.smat", fixtures::s6()),
                ("s18.smat", fixtures::sk_family(1)?),
                ("k4.smat", fixtures::k4_seidel()),
                ("petersen.smat", fixtures::petersen_seidel()),
                ("c5.smat", fixtures::pentagon_seidel()),
            ];
            for (name, matrix) in items {
                let path = emit.join(name);
                std::fs::write(&path, write_smat(&matrix))?;
                println!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

fn render_witnesses(s: &SeidelMatrix, witnesses: &[RegularWitness]) {
    let n = s.order();
    println!(
        "{} witnesses (exhaustive over {} switchings)",
        witnesses.len(),
        1u128 << (n - 1)
    );
    for w in witnesses {
        println!(
            "  {}  valency {}  theta {}  graph spectrum {}{}",
            w.switching.render(),
            w.valency,
            w.theta,
            w.graph_spectrum.render(),
            if w.connected { "" } else { "  (disconnected)" }
        );
    }
}

fn parse_range(text: &str) -> anyhow::Result<(usize, usize)> {
    let parts: Vec<&str> = text.split("..").collect();
    let err = || {
        anyhow::Error::from(SeidelError::Precondition(format!(
            "range must look like 14..23, got {text:?}"
        )))
    };
    match parts.as_slice() {
        [a, b] => {
            let lo: usize = a.parse().map_err(|_| err())?;
            let hi: usize = b.parse().map_err(|_| err())?;
            if lo > hi {
                return Err(err());
            }
            Ok((lo, hi))
        }
        [a] => {
            let v: usize = a.parse().map_err(|_| err())?;
            Ok((v, v))
        }
        _ => Err(err()),
    }
}

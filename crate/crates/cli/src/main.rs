//! `hochschild`: listings, exports, conversions and invariant checks for the
//! Hochschild lattices.

mod checks;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hochschild::dyck::{generate_f, interval_elements, rho_inv, DyckPath};
use hochschild::enumeration::{count_table, count_table_csv, generate_mu};
use hochschild::invariants::spine;
use hochschild::triword::{generate, hasse, Triword};

#[derive(Parser)]
#[command(name = "hochschild", version, about = "Hochschild lattices on triwords: generation, geometry, conversions, invariant checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the elements of a lattice, or export its Hasse diagram
    Generate {
        /// Word size (tr allows 0; tr/mu/spine go up to 14, F up to 8)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Tr)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = ListFormat::Plain)]
        format: ListFormat,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integer vertex coordinates and cover edges of Tr(n), as JSON
    ExportGeometry {
        /// Word size, 1..=10
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run invariant suites up to a size bound; exits 1 on any violation
    Check {
        /// Largest word size the suites may touch (each item also keeps its
        /// own feasibility cap)
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Convert a Dyck path to its triword, or a triword to its Dyck path
    Convert {
        /// The word to convert; encoding is detected from the letters
        word: String,
        /// Force a reading when the word is valid in both encodings
        #[arg(long, value_enum)]
        from: Option<FromArg>,
    },
    /// Chain-count tables: one row per (n, k, variant) with the class vector
    Counts {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    /// The full lattice Tr(n)
    Tr,
    /// Words with first letter 1 (the zero-free family)
    Mu,
    /// The distributive spine
    Spine,
    /// The Dyck-path interval F(n)
    #[value(alias = "F")]
    F,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    /// One element per line
    Plain,
    /// Hasse diagram in DOT, edges directed upward
    Dot,
    /// Hasse diagram as JSON: sorted elements plus cover index pairs
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Lattice,
    Shell,
    Doubling,
    Counts,
    Coxeter,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FromArg {
    Dyck,
    Triword,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn usage_error(message: &str) -> ! {
    eprintln!("error: {message}");
    std::process::exit(2);
}

fn emit(out: Option<&PathBuf>, content: &str) {
    match out {
        Some(path) => {
            if let Err(e) = fs::write(path, content) {
                eprintln!("error: cannot write {}: {e}", path.display());
                std::process::exit(1);
            }
        }
        None => print!("{content}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Generate { n, variant, format, out } => cmd_generate(n, variant, format, out.as_ref()),
        Command::ExportGeometry { n, out } => cmd_export_geometry(n, out.as_ref()),
        Command::Check { n_max, suite } => return cmd_check(n_max, suite),
        Command::Convert { word, from } => cmd_convert(&word, from),
        Command::Counts { n_max, k_max, format, out } => cmd_counts(n_max, k_max, format, out.as_ref()),
    }
    ExitCode::SUCCESS
}

fn cmd_generate(n: usize, variant: VariantArg, format: ListFormat, out: Option<&PathBuf>) {
    match variant {
        VariantArg::Tr => {
            if n > 14 {
                usage_error("--n must be at most 14 for the tr variant");
            }
        }
        VariantArg::Mu | VariantArg::Spine => {
            if n == 0 || n > 14 {
                usage_error("--n must be between 1 and 14 for this variant");
            }
        }
        VariantArg::F => {
            if n == 0 || n > 8 {
                usage_error("--n must be between 1 and 8 for the F variant");
            }
        }
    }

    let content = match format {
        ListFormat::Plain => {
            let mut lines: Vec<String> = match variant {
                VariantArg::Tr => generate(n).iter().map(Triword::to_string).collect(),
                VariantArg::Mu => generate_mu(n).iter().map(Triword::to_string).collect(),
                VariantArg::Spine => spine(n).elements().to_vec(),
                VariantArg::F => interval_elements(n)
                    .unwrap_or_else(|e| usage_error(&e.to_string()))
                    .iter()
                    .map(DyckPath::to_string)
                    .collect(),
            };
            lines.sort();
            let mut text = String::new();
            for line in lines {
                if line.is_empty() {
                    text.push('ε');
                } else {
                    text.push_str(&line);
                }
                text.push('\n');
            }
            text
        }
        ListFormat::Dot | ListFormat::Json => {
            let poset = match variant {
                VariantArg::Tr => hasse(n),
                VariantArg::Mu => hochschild::enumeration::mini_poset(n),
                VariantArg::Spine => spine(n),
                VariantArg::F => generate_f(n).unwrap_or_else(|e| usage_error(&e.to_string())),
            };
            if format == ListFormat::Dot {
                poset.to_dot()
            } else {
                let mut text = poset.to_json(n);
                text.push('\n');
                text
            }
        }
    };
    emit(out, &content);
}

#[derive(Serialize)]
struct Geometry {
    n: usize,
    vertices: Vec<Vec<u8>>,
    edges: Vec<(usize, usize)>,
}

fn cmd_export_geometry(n: usize, out: Option<&PathBuf>) {
    if n == 0 || n > 10 {
        usage_error("--n must be between 1 and 10");
    }
    let poset = hasse(n);
    let vertices: Vec<Vec<u8>> = poset
        .elements()
        .iter()
        .map(|label| label.bytes().map(|b| b - b'0').collect())
        .collect();
    let mut edges = poset.covers().to_vec();
    edges.sort_unstable();
    let doc = Geometry { n, vertices, edges };
    let mut text = serde_json::to_string_pretty(&doc).expect("geometry serializes");
    text.push('\n');
    emit(out, &text);
}

fn cmd_check(n_max: usize, suite: SuiteArg) -> ExitCode {
    if n_max == 0 {
        usage_error("--n-max must be at least 1");
    }
    let report = checks::run(n_max, suite);
    for line in &report.lines {
        println!("{line}");
    }
    if report.failures == 0 {
        println!("check: pass ({} items)", report.items);
        ExitCode::SUCCESS
    } else {
        println!("check: {} of {} items failed", report.failures, report.items);
        ExitCode::FAILURE
    }
}

fn cmd_convert(word: &str, from: Option<FromArg>) {
    if word.is_empty() {
        usage_error("the word to convert is empty");
    }
    if let Some(bad) = word.chars().find(|c| !matches!(c, '0' | '1' | '2')) {
        usage_error(&format!("letter {bad:?} is outside the {{0,1,2}} alphabet"));
    }
    let digits: Vec<u8> = word.bytes().map(|b| b - b'0').collect();
    let as_dyck = if word.contains('2') { None } else { DyckPath::new(digits.clone()).ok() };
    let as_triword = Triword::new(digits).ok();

    let direction = match from {
        Some(f) => f,
        None => match (&as_dyck, &as_triword) {
            (Some(_), Some(_)) => usage_error(
                "the word is a valid Dyck path and a valid triword; pass --from dyck or --from triword",
            ),
            (Some(_), None) => FromArg::Dyck,
            (None, Some(_)) => FromArg::Triword,
            (None, None) => usage_error(
                "the word is neither a Dyck path (unbalanced or dips below the axis) nor a triword (a 1 after a 0, or a leading 2)",
            ),
        },
    };

    match direction {
        FromArg::Dyck => {
            let Some(path) = as_dyck else {
                usage_error("not a Dyck path: steps must be 0/1, balanced, never below the axis");
            };
            match path.rho() {
                Ok(w) if w.size() == 0 => println!("ε"),
                Ok(w) => println!("{w}"),
                Err(e) => usage_error(&e.to_string()),
            }
        }
        FromArg::Triword => {
            let Some(w) = as_triword else {
                usage_error("not a triword: the first letter cannot be 2 and no 1 may follow a 0");
            };
            println!("{}", rho_inv(&w));
        }
    }
}

fn cmd_counts(n_max: usize, k_max: usize, format: TableFormat, out: Option<&PathBuf>) {
    if n_max == 0 {
        usage_error("--n-max must be at least 1");
    }
    if k_max == 0 || k_max > 8 {
        usage_error("--k-max must be between 1 and 8");
    }
    let rows = count_table(n_max, k_max);
    let content = match format {
        TableFormat::Csv => count_table_csv(&rows),
        TableFormat::Json => {
            let mut text = serde_json::to_string_pretty(&rows).expect("rows serialize");
            text.push('\n');
            text
        }
    };
    emit(out, &content);
}

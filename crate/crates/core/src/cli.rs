//! Command-line front end. [`run`] returns the process exit status: 0 on
//! success, 1 on input errors, 2 when an internal consistency check fails.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::census::{run_census, CensusOptions};
use crate::dow::{render_letters, tangled_cord, Dow, Letter, LetterSet};
use crate::enumeration::{
    count_hamiltonian_sets, enumerate_hamiltonian_sets, hamiltonian_bound, RenderedSet,
};
use crate::error::Error;
use crate::graph::AssemblyGraph;
use crate::maximality::{analyze, find_framing_cord, DEFAULT_CROSS_CHECK_LIMIT};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "hamsets",
    version,
    about = "Hamiltonian sets of polygonal paths in simple assembly graphs"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the result to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Census worker threads (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    pub threads: usize,

    /// Verify the maximality verdict against an exact count up to this n.
    #[arg(long, default_value_t = DEFAULT_CROSS_CHECK_LIMIT, global = true)]
    pub cross_check_limit: usize,

    /// Allow a census above the default size guard.
    #[arg(long, global = true)]
    pub unsafe_large: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximality report for a word.
    Analyze {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
    /// Number of Hamiltonian sets of polygonal paths.
    Count {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
    /// List every Hamiltonian set with its edge mask.
    Enumerate {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
    /// Print the tangled cord word of order N.
    Tc { n: usize },
    /// Exhaustive census over all classes of words on N letters.
    Census {
        n: usize,
        /// Also write the per-class table as CSV to this file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Greedy framing tangled cord, or "composition".
    Framing {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
    /// Graphviz rendering of the assembly graph.
    ExportDot {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

struct Outcome {
    text: String,
    /// Failed checks reported after the output is written.
    failures: Vec<String>,
}

impl From<String> for Outcome {
    fn from(text: String) -> Self {
        Outcome {
            text,
            failures: Vec::new(),
        }
    }
}

pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{text}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{text}");
                    1
                }
            };
        }
    };
    let outcome = match execute(&cli) {
        Ok(outcome) => outcome,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 1;
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(stderr, "internal check failed: {msg}");
            return 2;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout
            .write_all(outcome.text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return 1;
    }
    if !outcome.failures.is_empty() {
        for f in &outcome.failures {
            let _ = writeln!(stderr, "check failed: {f}");
        }
        return 2;
    }
    0
}

fn parse_word(parts: &[String]) -> Result<Dow, Failure> {
    Ok(Dow::parse(&parts.join(" "))?)
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

fn no_csv(command: &str) -> Failure {
    Failure::Input(format!(
        "--format csv is only available for census and enumerate, not {command}"
    ))
}

fn letter_set(sigma: &LetterSet) -> String {
    let parts: Vec<String> = sigma.iter().map(Letter::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Analyze { word } => {
            let word = parse_word(word)?;
            let report = analyze(&word, cli.cross_check_limit)?;
            match cli.format {
                Format::Json => Ok(to_json(&report).into()),
                Format::Csv => Err(no_csv("analyze")),
                Format::Text => {
                    let mut out = String::new();
                    let _ = writeln!(out, "word: {}", report.word);
                    let _ = writeln!(out, "n: {}", report.n);
                    match report.count {
                        Some(c) => writeln!(out, "count: {c}"),
                        None => writeln!(out, "count: not computed"),
                    }
                    .ok();
                    let _ = writeln!(out, "bound: {}", report.bound);
                    let _ = writeln!(out, "maximal: {}", report.is_maximal);
                    if let Some(sigma) = &report.failing_sigma {
                        let _ = writeln!(out, "failing_sigma: {}", letter_set(sigma));
                    }
                    let _ = writeln!(out, "composition: {}", report.is_composition);
                    match &report.framing_cord {
                        Some(cord) => writeln!(out, "framing_cord: {}", render_letters(cord)),
                        None => writeln!(out, "framing_cord: none"),
                    }
                    .ok();
                    if let Some(m) = &report.minimal_even_split {
                        let _ = writeln!(
                            out,
                            "minimal_even_split: {} -> {}{}",
                            letter_set(&m.sigma),
                            m.projection,
                            if m.is_tangled_cord {
                                " (tangled cord)"
                            } else {
                                ""
                            }
                        );
                    }
                    Ok(out.into())
                }
            }
        }
        Command::Count { word } => {
            let word = parse_word(word)?;
            let count = count_hamiltonian_sets(&AssemblyGraph::build(&word));
            match cli.format {
                Format::Text => Ok(format!("{count}\n").into()),
                Format::Json => Ok(to_json(&json!({
                    "word": word,
                    "count": count,
                    "bound": hamiltonian_bound(word.order()),
                }))
                .into()),
                Format::Csv => Err(no_csv("count")),
            }
        }
        Command::Enumerate { word } => {
            let word = parse_word(word)?;
            let g = AssemblyGraph::build(&word);
            let sets = enumerate_hamiltonian_sets(&g)?
                .iter()
                .map(|gamma| RenderedSet::new(&g, gamma))
                .collect::<Result<Vec<_>, _>>()?;
            match cli.format {
                Format::Json => Ok(to_json(&sets).into()),
                Format::Text => Ok(sets
                    .iter()
                    .map(|s| format!("{} {}\n", s.mask, s.rendered))
                    .collect::<String>()
                    .into()),
                Format::Csv => {
                    let mut writer = csv::Writer::from_writer(Vec::new());
                    writer
                        .write_record(["mask", "hamiltonian_set"])
                        .and_then(|_| {
                            sets.iter()
                                .try_for_each(|s| writer.write_record([&s.mask, &s.rendered]))
                        })
                        .map_err(|e| Failure::Internal(e.to_string()))?;
                    let bytes = writer
                        .into_inner()
                        .map_err(|e| Failure::Internal(e.to_string()))?;
                    Ok(String::from_utf8(bytes).expect("utf-8 csv").into())
                }
            }
        }
        Command::Tc { n } => {
            if *n == 0 {
                return Err(Failure::Input(
                    "tangled cord order must be at least 1".into(),
                ));
            }
            let word = tangled_cord(*n);
            match cli.format {
                Format::Text => Ok(format!("{word}\n").into()),
                Format::Json => Ok(to_json(&json!({ "n": n, "word": word })).into()),
                Format::Csv => Err(no_csv("tc")),
            }
        }
        Command::Framing { word } => {
            let word = parse_word(word)?;
            let cord = find_framing_cord(&word);
            match cli.format {
                Format::Text => Ok(match &cord {
                    Some(cord) => format!("{}\n", render_letters(cord)),
                    None => "composition\n".to_string(),
                }
                .into()),
                Format::Json => Ok(to_json(&json!({
                    "word": word,
                    "framing_cord": cord,
                    "is_composition": cord.is_none(),
                }))
                .into()),
                Format::Csv => Err(no_csv("framing")),
            }
        }
        Command::ExportDot { word } => {
            let word = parse_word(word)?;
            Ok(AssemblyGraph::build(&word).export_dot().into())
        }
        Command::Census { n, csv } => {
            let options = CensusOptions {
                threads: cli.threads,
                allow_large: cli.unsafe_large,
            };
            let census = run_census(*n, &options)?;
            if let Some(path) = csv {
                let file = std::fs::File::create(path)
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
                census
                    .write_csv(file)
                    .map_err(|e| Failure::Input(e.to_string()))?;
            }
            let text = match cli.format {
                Format::Json => to_json(&census.summary),
                Format::Csv => {
                    let mut bytes = Vec::new();
                    census
                        .write_csv(&mut bytes)
                        .map_err(|e| Failure::Internal(e.to_string()))?;
                    String::from_utf8(bytes).expect("utf-8 csv")
                }
                Format::Text => {
                    let s = &census.summary;
                    let maximal: Vec<String> = s.maximal_classes.iter().map(Dow::render).collect();
                    format!(
                        "n: {}\ntotal_classes: {}\nmaximal_classes: {}\nbound_violations: {}\nequivalence_failures: {}\n",
                        s.n,
                        s.total_classes,
                        maximal.join(", "),
                        s.bound_violations,
                        s.equivalence_failures
                    )
                }
            };
            Ok(Outcome {
                text,
                failures: census.assertion_failures(),
            })
        }
    }
}

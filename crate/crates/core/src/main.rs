// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use starfree::analysis::analyze;
use starfree::catalog::{Catalog, CatalogError, Tier};
use starfree::class_eq::{enumerate_candidates, solve, SolveError};
use starfree::classify::{
    dihedral_class_equation, dihedral_star_number, verify_against_published,
    verify_dihedral_class_equation, verify_dihedral_star_number, Status, MAX_K,
};
use starfree::graph::CommutingGraph;
use starfree::group::{GroupFile, InputError, DEFAULT_BACKTRACK_BOUND, DEFAULT_ORDER_BOUND};
use starfree::{Bounds, FiniteGroup, GroupError};

/// Strong and induced star-freeness of commuting graphs of finite groups.
#[derive(Debug, Parser)]
#[command(name = "starfree", version)]
struct Cli {
    /// Largest group order any construction may produce.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_BOUND)]
    max_order: usize,
    /// Largest order for which automorphism searches run.
    #[arg(long, global = true, default_value_t = DEFAULT_BACKTRACK_BOUND)]
    backtrack_bound: usize,
    /// Load the stretch catalog tier (orders 25 to 32 and 50).
    #[arg(long, global = true)]
    stretch: bool,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Centralizer profile, star numbers and graph components of one group.
    Analyze {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify strong k-star-free groups and compare with the published list.
    Classify {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Solve the class equation for given centralizer sizes and center size.
    Solve {
        /// Comma-separated centralizer sizes, e.g. 2,5.
        #[arg(long)]
        sizes: String,
        #[arg(long)]
        center: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List every class-equation shape a strong k-star-free group can have.
    Enumerate {
        #[arg(long)]
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Closed forms for the dihedral group of order 2n.
    Dihedral {
        #[arg(long)]
        n: usize,
        /// Also compute both values from the group table.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write the commuting graph of a group.
    Export {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct GroupArg {
    /// A catalog name, or file:PATH for a JSON group file.
    #[arg(long)]
    group: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Rendered output plus whether it records a failed verification.
struct Outcome {
    text: String,
    mismatch: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome {
            text,
            mismatch: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if let Err(err) = emit(cli.output.as_deref(), &outcome.text) {
                eprintln!("error: {err}");
                return ExitCode::from(2);
            }
            ExitCode::from(if outcome.mismatch { 1 } else { 0 })
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Write {
            path: path.to_path_buf(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let bounds = Bounds {
        order: cli.max_order,
        backtrack: cli.backtrack_bound,
    };
    let tier = if cli.stretch {
        Tier::Stretch
    } else {
        Tier::Standard
    };
    let catalog = || Catalog::load_with(tier, &bounds);
    match &cli.command {
        Command::Analyze { group, format } => {
            let format = only(*format, &[Format::Text, Format::Json], "analyze")?;
            let catalog = catalog()?;
            let g = resolve(&group.group, &catalog, &bounds)?;
            let analysis = analyze(&g, Some(&catalog)).map_err(|err| match err {
                GroupError::AbelianGroup => CliError::Usage(format!(
                    "{} is abelian: every element is central, so the commuting graph has no vertices",
                    g.display_name()
                )),
                other => other.into(),
            })?;
            Ok(Outcome::ok(if format == Format::Json {
                json_line(analysis.to_json())
            } else {
                analysis.to_text()
            }))
        }
        Command::Classify { k, format } => {
            let format = only(*format, &[Format::Text, Format::Json], "classify")?;
            if !(2..=MAX_K).contains(k) {
                return Err(CliError::Usage(format!(
                    "--k must be between 2 and {MAX_K}, got {k}"
                )));
            }
            let report = verify_against_published(&catalog()?, *k);
            let text = if format == Format::Json {
                json_line(report.to_json())
            } else {
                report.to_text()
            };
            if format == Format::Json {
                for w in &report.warnings {
                    eprintln!("warning: {w}");
                }
            }
            Ok(Outcome {
                text,
                mismatch: report.status == Status::Mismatch,
            })
        }
        Command::Solve {
            sizes,
            center,
            format,
        } => {
            let format = only(*format, &[Format::Text, Format::Json], "solve")?;
            let sizes = parse_sizes(sizes)?;
            let solutions = solve(&sizes, *center)?;
            if format == Format::Json {
                return Ok(Outcome::ok(json_line(
                    serde_json::to_string_pretty(&solutions).expect("serializes"),
                )));
            }
            let mut out = String::new();
            let _ = writeln!(out, "sizes {{{}}}, center {center}", list(&sizes));
            if solutions.is_empty() {
                let _ = writeln!(out, "no solutions");
            }
            for s in &solutions {
                let _ = writeln!(out, "n={} m=({})", s.order, list(&s.multiplicities));
            }
            Ok(Outcome::ok(out))
        }
        Command::Enumerate { k, format } => {
            let format = only(*format, &[Format::Text, Format::Json], "enumerate")?;
            if *k == 0 || *k > MAX_K {
                return Err(CliError::Usage(format!(
                    "--k must be between 1 and {MAX_K}, got {k}"
                )));
            }
            let set = enumerate_candidates(*k);
            if format == Format::Json {
                return Ok(Outcome::ok(json_line(
                    serde_json::to_string_pretty(&set).expect("serializes"),
                )));
            }
            let mut out = String::new();
            for t in &set.tuples {
                let sols: Vec<String> = t
                    .solutions
                    .iter()
                    .map(|s| format!("n={} m=({})", s.order, list(&s.multiplicities)))
                    .collect();
                let _ = writeln!(
                    out,
                    "z={} sizes {{{}}}: {}",
                    t.center,
                    list(&t.sizes),
                    sols.join("; ")
                );
            }
            let orders: Vec<u64> = set.candidate_orders().into_iter().collect();
            let _ = writeln!(
                out,
                "{} tuples; candidate orders: {}",
                set.tuples.len(),
                list(&orders)
            );
            Ok(Outcome::ok(out))
        }
        Command::Dihedral { n, verify, format } => {
            let format = only(*format, &[Format::Text, Format::Json], "dihedral")?;
            if *n < 3 {
                return Err(CliError::Usage(format!("--n must be at least 3, got {n}")));
            }
            dihedral(*n, *verify, format, &bounds)
        }
        Command::Export { group, format } => {
            let format = only(*format, &[Format::Dot, Format::Json], "export")?;
            let catalog = catalog()?;
            let g = resolve(&group.group, &catalog, &bounds)?;
            let graph = CommutingGraph::new(&g).map_err(|err| match err {
                GroupError::AbelianGroup => CliError::Usage(format!(
                    "{} is abelian: the commuting graph has no vertices",
                    g.display_name()
                )),
                other => other.into(),
            })?;
            if format == Format::Dot {
                return Ok(Outcome::ok(graph.to_dot()));
            }
            let doc = serde_json::json!({
                "group": graph.group_label(),
                "vertices": graph.vertices(),
                "edges": graph.edges(),
            });
            Ok(Outcome::ok(json_line(
                serde_json::to_string_pretty(&doc).expect("serializes"),
            )))
        }
    }
}

fn dihedral(n: usize, verify: bool, format: Format, bounds: &Bounds) -> Result<Outcome, CliError> {
    let closed = dihedral_star_number(n);
    let equation = dihedral_class_equation(n as u64);
    let computed = if verify {
        let (_, s) = verify_dihedral_star_number(n, bounds)?;
        let (_, profile) = verify_dihedral_class_equation(n, bounds)?;
        Some((s, profile))
    } else {
        None
    };
    let mismatch = computed
        .as_ref()
        .is_some_and(|(s, profile)| *s != closed || *profile != equation);
    if format == Format::Json {
        let doc = serde_json::json!({
            "n": n,
            "order": 2 * n,
            "closed_form": closed,
            "class_equation": equation,
            "computed": computed.as_ref().map(|(s, _)| s),
            "computed_class_equation": computed.as_ref().map(|(_, p)| p),
            "agree": computed.as_ref().map(|_| !mismatch),
        });
        return Ok(Outcome {
            text: json_line(serde_json::to_string_pretty(&doc).expect("serializes")),
            mismatch,
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "D{}: closed form {closed}", 2 * n);
    let _ = writeln!(
        out,
        "class equation: center {}, sizes {{{}}}, m=({})",
        equation.center,
        list(&equation.sizes),
        list(&equation.multiplicities)
    );
    if let Some((s, profile)) = &computed {
        let _ = writeln!(out, "computed {s}");
        let _ = writeln!(
            out,
            "computed class equation: center {}, sizes {{{}}}, m=({})",
            profile.center,
            list(&profile.sizes),
            list(&profile.multiplicities)
        );
        let _ = writeln!(out, "{}", if mismatch { "MISMATCH" } else { "agree" });
    }
    Ok(Outcome {
        text: out,
        mismatch,
    })
}

fn only(format: Format, allowed: &[Format], command: &str) -> Result<Format, CliError> {
    if allowed.contains(&format) {
        Ok(format)
    } else {
        let names: Vec<String> = allowed
            .iter()
            .map(|f| format!("{f:?}").to_lowercase())
            .collect();
        Err(CliError::Usage(format!(
            "{command} supports --format {}",
            names.join(" or ")
        )))
    }
}

fn resolve(source: &str, catalog: &Catalog, bounds: &Bounds) -> Result<FiniteGroup, CliError> {
    match source.strip_prefix("file:") {
        Some(path) => Ok(GroupFile::read(Path::new(path))?.build_with(bounds)?),
        None => Ok(catalog.build(source)?),
    }
}

fn parse_sizes(text: &str) -> Result<Vec<u64>, CliError> {
    let mut sizes = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("malformed size list {text:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    sizes.sort_unstable();
    if sizes.windows(2).any(|w| w[0] == w[1]) {
        return Err(CliError::Usage(format!(
            "size list {text:?} repeats a size"
        )));
    }
    Ok(sizes)
}

fn list(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn json_line(mut text: String) -> String {
    text.push('\n');
    text
}

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chirahedra::analysis::classify;
use chirahedra::export::{parse_grid, parse_params, patch_from_json, patch_to_json, survey, write_obj, SurveyRow};
use chirahedra::geometry::Rat;
use chirahedra::group::{build_group, word_bound, FamilyId};
use chirahedra::verify::{verify_grid, Lemma, Outcome};
use chirahedra::wythoff::construct_patch_with;
use chirahedra::Error;
use clap::{Args, Parser, Subcommand};

/// Exact construction and verification of helix-faced chiral and regular
/// apeirohedra.
#[derive(Parser)]
#[command(name = "chirahedra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Member {
    /// p1, p2, p3, p66, q46, twi-33star, twi-34, twi-33, sonerot-33star, sonerot-34
    #[arg(long)]
    family: String,
    /// Two rationals `A,B` such as `1,3` or `1/2,-2`.
    #[arg(long, allow_hyphen_values = true)]
    params: String,
}

#[derive(Subcommand)]
enum Command {
    /// Build a patch of the polyhedron and write it as JSON.
    Build {
        #[command(flatten)]
        member: Member,
        /// Max-norm radius of the patch around the origin.
        #[arg(long, default_value = "4")]
        radius: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a member is chiral or regular.
    Classify {
        #[command(flatten)]
        member: Member,
        #[arg(long)]
        json: bool,
    },
    /// Check one lemma at every point of a parameter grid.
    Verify {
        /// translation-lattice, vertex-cosets, stars, face-classes, phi2, eta,
        /// covering, named-regular or enantiomorph
        #[arg(long)]
        lemma: String,
        #[arg(long)]
        family: String,
        /// `lo..hi/den`, all pairs of k/den with lo ≤ k ≤ hi.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        /// Write the full report as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Tabulate classification and counts over a parameter grid.
    Survey {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a patch as an OBJ mesh.
    Export {
        /// A patch JSON written by `build`.
        #[arg(long)]
        patch: PathBuf,
        /// Helix periods to emit per face.
        #[arg(long, default_value_t = 1)]
        turns: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// An error with the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::Json(_) => 3,
            Error::DegenerateParams { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn member(m: &Member) -> Result<(FamilyId, (Rat, Rat)), Failure> {
    Ok((m.family.parse()?, parse_params(&m.params)?))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let bound = word_bound()?;
    match cli.command {
        Command::Build { member: m, radius, out } => {
            let (family, params) = member(&m)?;
            let radius: Rat = radius.parse()?;
            let g = build_group(family, params)?;
            let patch = construct_patch_with(&g, &radius, bound)?;
            let mut text = patch_to_json(&patch)?;
            text.push('\n');
            emit(out.as_deref(), &text)?;
            if out.is_some() {
                let labels: std::collections::BTreeSet<usize> = patch.vertices.iter().map(|v| v.coset).collect();
                println!(
                    "{family}({}): {} vertices, {} edges, {} faces, {} vertex labels",
                    g.params_string(),
                    patch.vertices.len(),
                    patch.edges.len(),
                    patch.faces.len(),
                    labels.len()
                );
            }
            Ok(0)
        }
        Command::Classify { member: m, json } => {
            let (family, params) = member(&m)?;
            let c = classify(family, params)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&c).map_err(Error::from)?);
            } else {
                println!("{}", c.verdict);
                if let Some(w) = &c.witness {
                    println!("witness {w}");
                }
            }
            Ok(0)
        }
        Command::Verify {
            lemma,
            family,
            grid,
            report,
        } => {
            let lemma: Lemma = lemma.parse()?;
            let family: FamilyId = family.parse()?;
            let points = parse_grid(&grid)?.points(family);
            let results = verify_grid(lemma, family, &points);
            let mut failed = 0;
            for r in &results {
                let (tag, detail) = match &r.outcome {
                    Outcome::Pass(d) => ("pass", d),
                    Outcome::Fail(d) => {
                        failed += 1;
                        ("FAIL", d)
                    }
                    Outcome::Skipped(d) => ("skip", d),
                };
                println!("{tag} {family}({},{}) {detail}", r.params.0, r.params.1);
            }
            println!("{lemma} {family}: {} points, {failed} refuted", results.len());
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&results).map_err(Error::from)?;
                fs::write(path, text + "\n")?;
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
        Command::Survey {
            family,
            grid,
            json,
            out,
        } => {
            let family: FamilyId = family.parse()?;
            let points = parse_grid(&grid)?.points(family);
            let rows = survey(family, &points)
                .into_iter()
                .collect::<Result<Vec<SurveyRow>, Error>>()?;
            let text = if json {
                serde_json::to_string_pretty(&rows).map_err(Error::from)? + "\n"
            } else {
                let mut t = String::from(SurveyRow::tsv_header());
                t.push('\n');
                for r in &rows {
                    t.push_str(&r.to_tsv());
                    t.push('\n');
                }
                t
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Export { patch, turns, out } => {
            let patch = patch_from_json(&fs::read_to_string(patch)?)?;
            let mut buf = Vec::new();
            write_obj(&patch, turns, &mut buf)?;
            emit(out.as_deref(), &String::from_utf8_lossy(&buf))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(3);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

//! `monopole` — queries over the discrete monopole catalog: listing, spectra,
//! Chern numbers, verification scopes and artifact export.

mod output;
mod reference;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use monopole_core::monopoles::{Catalog, CharacterRow, MonopoleCase};
use monopole_core::spectra::cross_validate;
use monopole_core::{MonopoleError, Solid, Spectrum, SpectrumMethod};

use output::{render_spectrum, round_floats};
use verify::Scope;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Monopole(#[from] MonopoleError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("config: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SolidArg {
    Tetrahedron,
    Octahedron,
    Cube,
    Icosahedron,
}

impl From<SolidArg> for Solid {
    fn from(s: SolidArg) -> Solid {
        match s {
            SolidArg::Tetrahedron => Solid::Tetrahedron,
            SolidArg::Octahedron => Solid::Octahedron,
            SolidArg::Cube => Solid::Cube,
            SolidArg::Icosahedron => Solid::Icosahedron,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Numeric,
    Frobenius,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Artifact {
    GraphDot,
    MatrixJson,
    EmbeddingJson,
}

#[derive(Parser)]
#[command(name = "monopole", version, about = "Discrete Dirac monopoles on the Platonic solids")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Seed for the character-table eigenvector draws (MONOPOLE_SEED wins).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Tolerance for the verification scopes.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// JSON file with defaults for the flags above.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The catalog: four solved solids, the multigraph extension, and the
    /// dodecahedron obstruction.
    List,
    /// Adjacency and Laplacian spectrum of one field.
    Spectrum {
        #[arg(long, value_enum)]
        solid: SolidArg,
        #[arg(long)]
        chern: i64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Chern numbers carried by the characters of the stabiliser.
    Chern {
        #[arg(long, value_enum)]
        solid: SolidArg,
    },
    /// Re-run a verification scope; exit code 0 only if everything passes.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        /// Magnetic charge for the wuyang scope (default 0..5).
        #[arg(long)]
        q: Option<i64>,
        /// Highest angular momentum for the wuyang scope (default 10).
        #[arg(long)]
        lmax: Option<usize>,
    },
    /// Write a graph, matrix, or embedding artifact.
    Export {
        #[arg(long, value_enum)]
        solid: SolidArg,
        #[arg(long, value_enum)]
        what: Artifact,
        /// Chern number for matrix-json.
        #[arg(long, default_value_t = 0)]
        chern: i64,
    },
}

#[derive(Debug, Default, serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    tolerance: Option<f64>,
    seed: Option<u64>,
    format: Option<String>,
    output: Option<PathBuf>,
}

struct Config {
    format: Format,
    seed: u64,
    tolerance: f64,
    output: Option<PathBuf>,
}

fn resolve_config(cli: &Cli) -> Result<Config, CliError> {
    let file: FileConfig = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            if text.trim().is_empty() {
                FileConfig::default()
            } else {
                serde_json::from_str(&text).map_err(|e| CliError::Config(e.to_string()))?
            }
        }
        None => FileConfig::default(),
    };
    let format = match cli.format {
        Some(f) => f,
        None => match file.format.as_deref() {
            Some("text") => Format::Text,
            Some("json") => Format::Json,
            Some(other) => return Err(CliError::Config(format!("unknown format {other:?}"))),
            None => Format::Text,
        },
    };
    let seed = match std::env::var("MONOPOLE_SEED") {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| CliError::Config(format!("MONOPOLE_SEED {text:?} is not an integer")))?,
        Err(_) => cli.seed.or(file.seed).unwrap_or(0),
    };
    let tolerance = cli.tolerance.or(file.tolerance).unwrap_or(1e-9);
    if !(tolerance > 0.0) {
        return Err(CliError::Config(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }
    let output = cli.output.clone().or(file.output);
    Ok(Config {
        format,
        seed,
        tolerance,
        output,
    })
}

fn emit(config: &Config, mut text: String) -> Result<(), CliError> {
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &config.output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn group_symbol(order: usize) -> &'static str {
    match order {
        24 => "2T",
        48 => "2O",
        120 => "2I",
        _ => "?",
    }
}

fn cmd_list(catalog: &Catalog, config: &Config) -> Result<String, CliError> {
    if config.format == Format::Json {
        return Ok(serde_json::to_string_pretty(&catalog.export()).unwrap());
    }
    let mut out = String::new();
    out.push_str("solid          group  order  vertices  degree  faces  chern range\n");
    for case in &catalog.cases {
        out.push_str(&format!(
            "{:<14} {:<6} {:<6} {:<9} {:<7} {:<6} 0..±{}\n",
            case.solid.name(),
            group_symbol(case.group().len()),
            case.group().len(),
            case.graph.vertex_count,
            case.degree,
            case.embedding.faces.len(),
            case.max_chern(),
        ));
    }
    let penta = &catalog.penta;
    out.push_str(&format!(
        "pentadodecahedral multigraph: 2I on 20 cosets of Z6, edge multiplicity sum {} per vertex, {} Laplacian lines\n",
        penta.summand_count,
        penta.laplacian_lines().len(),
    ));
    let (dim, mult, implied, max) = catalog.nogo.spectral_argument;
    out.push_str(&format!(
        "dodecahedron: no invariant field — {} Casimir candidates searched, 0 match; dim-{dim} irrep × {mult} forces multiplicity {implied} > {max}",
        catalog.nogo.searched_casimirs,
    ));
    Ok(out)
}

fn spectrum_json(s: &Spectrum) -> serde_json::Value {
    serde_json::to_value(s).unwrap()
}

fn cmd_spectrum(
    catalog: &Catalog,
    config: &Config,
    solid: Solid,
    chern: i64,
    method: Method,
) -> Result<String, CliError> {
    let case = catalog.case(solid);
    let k = case.normalize_chern(chern)?;
    let exponent = case.exponent_for_chern(k);
    let note = (exponent.is_none() && method != Method::Numeric).then(|| {
        format!(
            "no stabiliser character carries Chern {k}; spectra computed from the \
             unit-field phases raised to the power {k}"
        )
    });
    let numeric = case.spectrum_for_chern(k, SpectrumMethod::Numeric)?;
    let numeric_lap = case.laplacian_spectrum_for_chern(k, SpectrumMethod::Numeric)?;
    let frobenius = match method {
        Method::Numeric => None,
        Method::Frobenius | Method::Both => match case.spectrum_for_chern(k, SpectrumMethod::Frobenius)
        {
            Ok(s) => Some((
                s,
                case.laplacian_spectrum_for_chern(k, SpectrumMethod::Frobenius)?,
            )),
            Err(MonopoleError::DegenerateCharacter { .. }) => None,
            Err(e) => return Err(e.into()),
        },
    };
    let delta = frobenius
        .as_ref()
        .map(|(s, _)| cross_validate(&numeric.lines, &s.lines, 1e-9))
        .transpose()
        .map_err(|e| MonopoleError::CatalogInconsistent(e.to_string()))?
        .map(|cv| cv.max_delta);

    if config.format == Format::Json {
        let value = json!({
            "solid": solid.name(),
            "chern": k,
            "abs_chern": k.unsigned_abs(),
            "requested_chern": chern,
            "character_exponent": exponent,
            "degree": case.degree,
            "adjacency": spectrum_json(&numeric),
            "laplacian": spectrum_json(&numeric_lap),
            "frobenius_adjacency": frobenius.as_ref().map(|(s, _)| spectrum_json(s)),
            "frobenius_laplacian": frobenius.as_ref().map(|(_, l)| spectrum_json(l)),
            "cross_validation_max_delta": delta,
            "note": note,
        });
        return Ok(serde_json::to_string_pretty(&value).unwrap());
    }

    let mut out = format!("{}, Chern {k}, |c| = {}", solid.name(), k.unsigned_abs());
    if chern != k {
        out.push_str(&format!(" (requested {chern})"));
    }
    match exponent {
        Some(e) => out.push_str(&format!(" (character exponent {e})")),
        None => out.push_str(" (phase-power field)"),
    }
    out.push('\n');
    if let Some(note) = &note {
        out.push_str(&format!("note: {note}\n"));
    }
    out.push_str(&format!("adjacency ({}):\n", numeric.method));
    out.push_str(&render_spectrum(&numeric.lines));
    out.push_str(&format!("\nlaplacian ({}):\n", numeric_lap.method));
    out.push_str(&render_spectrum(&numeric_lap.lines));
    if let Some((frob, _)) = &frobenius {
        out.push_str(&format!("\nadjacency ({}):\n", frob.method));
        out.push_str(&render_spectrum(&frob.lines));
    }
    if let Some(delta) = delta {
        out.push_str(&format!("\ncross-validation max |Δ| = {delta:.2e}"));
    }
    Ok(out)
}

fn cmd_chern(catalog: &Catalog, config: &Config, solid: Solid) -> Result<String, CliError> {
    let case = catalog.case(solid);
    let covered: Vec<i64> = case
        .rows
        .iter()
        .filter_map(|r| r.monopole().map(|m| m.chern))
        .collect();
    let power_only: Vec<i64> = case
        .chern_range()
        .into_iter()
        .filter(|k| !covered.contains(k))
        .collect();

    if config.format == Format::Json {
        let characters: Vec<serde_json::Value> = case
            .rows
            .iter()
            .map(|row| match row {
                CharacterRow::Monopole(m) => json!({
                    "exponent": m.exponent, "status": "ok", "chern": m.chern,
                }),
                CharacterRow::Degenerate { exponent } => json!({
                    "exponent": exponent, "status": "degenerate",
                }),
            })
            .collect();
        let value = json!({
            "solid": solid.name(),
            "subgroup_order": case.subgroup.order(),
            "max_chern": case.max_chern(),
            "characters": characters,
            "phase_power_only": power_only,
        });
        return Ok(serde_json::to_string_pretty(&value).unwrap());
    }

    let mut out = format!(
        "{}: {} characters of Z{}, Chern range 0..±{}\n",
        solid.name(),
        case.subgroup.order(),
        case.subgroup.order(),
        case.max_chern()
    );
    for row in &case.rows {
        match row {
            CharacterRow::Monopole(m) => {
                out.push_str(&format!("  exponent {} → Chern {}\n", m.exponent, m.chern));
            }
            CharacterRow::Degenerate { exponent } => {
                out.push_str(&format!("  exponent {exponent} → degenerate (edge sums cancel)\n"));
            }
        }
    }
    if power_only.is_empty() {
        out.push_str("every admissible field is carried by a character");
    } else {
        out.push_str(&format!(
            "phase powers only: Chern {}",
            power_only
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    Ok(out)
}

fn cmd_verify(
    catalog: &Catalog,
    config: &Config,
    scope: Scope,
    q: Option<i64>,
    lmax: Option<usize>,
) -> Result<(String, bool), CliError> {
    let checks = verify::run(catalog, scope, config.tolerance, config.seed, q, lmax);
    let passed = checks.iter().all(|c| c.passed);
    let scope_name = format!("{scope:?}").to_lowercase();
    if config.format == Format::Json {
        let value = json!({
            "scope": scope_name,
            "passed": passed,
            "checks": checks,
        });
        return Ok((serde_json::to_string_pretty(&value).unwrap(), passed));
    }
    let mut out = String::new();
    for check in &checks {
        out.push_str(&format!(
            "[{}] {} — {}\n",
            if check.passed { "PASS" } else { "FAIL" },
            check.name,
            check.detail
        ));
    }
    out.push_str(&format!(
        "scope {scope_name}: {}/{} checks passed",
        checks.iter().filter(|c| c.passed).count(),
        checks.len()
    ));
    Ok((out, passed))
}

fn cmd_export(
    catalog: &Catalog,
    solid: Solid,
    what: Artifact,
    chern: i64,
) -> Result<String, CliError> {
    let case: &MonopoleCase = catalog.case(solid);
    match what {
        Artifact::GraphDot => Ok(case.graph.to_dot(solid.name())),
        Artifact::MatrixJson => {
            let k = case.normalize_chern(chern)?;
            let a = case.adjacency_for_chern(k)?;
            let mut value = json!({
                "solid": solid.name(),
                "chern": k,
                "matrix": a.export(),
            });
            round_floats(&mut value);
            Ok(serde_json::to_string_pretty(&value).unwrap())
        }
        Artifact::EmbeddingJson => {
            let value = json!({
                "solid": solid.name(),
                "rotation": case.embedding.rotation,
                "faces": case.embedding.faces,
            });
            Ok(serde_json::to_string_pretty(&value).unwrap())
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let config = resolve_config(&cli)?;
    let catalog = Catalog::build(config.seed)?;
    let (text, passed) = match cli.command {
        Command::List => (cmd_list(&catalog, &config)?, true),
        Command::Spectrum {
            solid,
            chern,
            method,
        } => (
            cmd_spectrum(&catalog, &config, solid.into(), chern, method)?,
            true,
        ),
        Command::Chern { solid } => (cmd_chern(&catalog, &config, solid.into())?, true),
        Command::Verify { scope, q, lmax } => cmd_verify(&catalog, &config, scope, q, lmax)?,
        Command::Export { solid, what, chern } => {
            (cmd_export(&catalog, solid.into(), what, chern)?, true)
        }
    };
    emit(&config, text)?;
    Ok(passed)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

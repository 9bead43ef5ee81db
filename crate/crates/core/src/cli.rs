//! Command implementations behind the `c3rigid` binary. Each command takes
//! the input document as text and returns a JSON report plus an exit code:
//! 0 when the graph is isostatic, 1 when it is not, 2 on any error.

use std::fmt::Debug;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::c3::{
    build_tree_partition, check_c3_isostatic, extract_sequence, relabeling_matches, replay_sequence,
    verify_tree_partition, C3Error, TreePartition,
};
use crate::graph::{count_fixed, parse_graph, GraphError, SymGraph};
use crate::realization::{
    numeric_isostatic_check, realize_from_partition, symmetric_generic_positions, RealizationError,
};
use crate::sparsity::{brute_force_laman, laman_check, pebble_sparsity, SparsityError};
use crate::svg::render_svg;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_ISOSTATIC: i32 = 0;
pub const EXIT_NOT_ISOSTATIC: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Sparsity(#[from] SparsityError),
    #[error(transparent)]
    C3(#[from] C3Error),
    #[error(transparent)]
    Realization(#[from] RealizationError),
    #[error("{0}")]
    Io(String),
    #[error("certificate check failed: {0}")]
    CertificateCheck(String),
}

impl CliError {
    /// Variant name of the innermost error, e.g. `NotOrderThree`.
    pub fn kind(&self) -> String {
        match self {
            CliError::Graph(e) => variant(e),
            CliError::Sparsity(e) => variant(e),
            CliError::C3(C3Error::Graph(e)) => variant(e),
            CliError::C3(C3Error::Sparsity(e)) => variant(e),
            CliError::C3(e) => variant(e),
            CliError::Realization(RealizationError::Graph(e)) => variant(e),
            CliError::Realization(e) => variant(e),
            CliError::Io(_) => "Io".into(),
            CliError::CertificateCheck(_) => "CertificateCheck".into(),
        }
    }
}

fn variant(e: &impl Debug) -> String {
    format!("{e:?}").chars().take_while(|c| c.is_alphanumeric()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Generic,
    Frame,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Generic => "generic",
            Method::Frame => "frame",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub version: String,
    #[serde(flatten)]
    pub body: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
}

impl Outcome {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.report).expect("reports serialize")
    }
}

/// Hex SHA-256 of the input document.
pub fn digest(input: &str) -> String {
    Sha256::digest(input.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn outcome(command: &str, input: &str, result: Result<(Value, bool), CliError>) -> Outcome {
    let (body, exit_code) = match result {
        Ok((body, iso)) => (body, if iso { EXIT_ISOSTATIC } else { EXIT_NOT_ISOSTATIC }),
        Err(e) => (error_body(&e), EXIT_ERROR),
    };
    Outcome {
        report: Report {
            command: command.to_string(),
            input_digest: digest(input),
            version: VERSION.to_string(),
            body,
        },
        exit_code,
    }
}

fn error_body(e: &CliError) -> Value {
    json!({ "error": { "kind": e.kind(), "message": e.to_string() } })
}

fn to_value(x: impl Serialize) -> Value {
    serde_json::to_value(x).expect("report parts serialize")
}

/// Sparsity report, fixed counts and the symmetric verdict.
pub fn cmd_check(input: &str) -> Outcome {
    outcome("check", input, check(input))
}

fn check(input: &str) -> Result<(Value, bool), CliError> {
    let sg = parse_graph(input)?;
    let sparsity = pebble_sparsity(sg.graph())?;
    let mut body = json!({ "sparsity": to_value(&sparsity) });
    let isostatic = match sg.action() {
        Some(action) => {
            let verdict = check_c3_isostatic(&sg)?;
            body["fixed_counts"] = to_value(count_fixed(sg.graph(), action));
            body["c3_verdict"] = to_value(&verdict);
            verdict.isostatic
        }
        None => sparsity.is_tight,
    };
    body["isostatic"] = json!(isostatic);
    Ok((body, isostatic))
}

/// Construction sequence, tree partition, and their independent checks.
pub fn cmd_certify(input: &str) -> Outcome {
    outcome("certify", input, certify(input).map(|(body, iso, _)| (body, iso)))
}

fn certify(input: &str) -> Result<(Value, bool, Option<TreePartition>), CliError> {
    let sg = parse_graph(input)?;
    let verdict = check_c3_isostatic(&sg)?;
    if !verdict.isostatic {
        let body = json!({
            "c3_verdict": to_value(&verdict),
            "error": { "kind": "NotIsostatic", "message": C3Error::NotIsostatic.to_string() },
        });
        return Ok((body, false, None));
    }
    let (body, partition) = certificates(&sg)?;
    Ok((body, true, Some(partition)))
}

fn certificates(sg: &SymGraph) -> Result<(Value, TreePartition), CliError> {
    let seq = extract_sequence(sg)?;
    let replay = replay_sequence(&seq)?;
    let round_trip = relabeling_matches(&seq.labels, &replay.graph, sg);
    let partition = build_tree_partition(&seq)?.relabeled(&seq.labels);
    let partition_check = verify_tree_partition(sg, &partition);
    if !round_trip {
        return Err(CliError::CertificateCheck("replayed graph differs from input".into()));
    }
    if !partition_check.passed() {
        return Err(CliError::CertificateCheck(partition_check.failures.join("; ")));
    }
    let body = json!({
        "c3_verdict": to_value(check_c3_isostatic(sg)?),
        "sequence": {
            "base": { "vertices": 3, "edges": [[0, 1], [0, 2], [1, 2]], "c3": [1, 2, 0] },
            "moves": to_value(&seq.moves),
            "labels": to_value(&seq.labels),
        },
        "replay": { "steps": to_value(&replay.trace), "round_trip": round_trip },
        "partition": to_value(&partition),
        "partition_check": to_value(&partition_check),
    });
    Ok((body, partition))
}

/// Exact placement and rank verdict, by random symmetric coordinates or by
/// the frame route from a tree partition.
pub fn cmd_realize(input: &str, seed: u64, method: Method) -> Outcome {
    outcome("realize", input, realize(input, seed, method))
}

fn realize(input: &str, seed: u64, method: Method) -> Result<(Value, bool), CliError> {
    let sg = parse_graph(input)?;
    match method {
        Method::Generic => {
            let placement = symmetric_generic_positions(&sg, seed)?;
            let verdict = numeric_isostatic_check(sg.graph(), &placement)?;
            let body = json!({
                "method": method.name(),
                "seed": seed,
                "placement": to_value(&placement),
                "symmetric": placement.is_symmetric(&sg),
                "numeric_verdict": to_value(&verdict),
            });
            Ok((body, verdict.isostatic))
        }
        Method::Frame => {
            let verdict = check_c3_isostatic(&sg)?;
            if !verdict.isostatic {
                return Err(C3Error::NotIsostatic.into());
            }
            let (_, partition) = certificates(&sg)?;
            let r = realize_from_partition(&sg, &partition)?;
            let body = json!({
                "method": method.name(),
                "seed": seed,
                "partition": to_value(&partition),
                "initial_frame": to_value(&r.initial_frame),
                "initial_rank": r.initial_rank,
                "pull_apart_rounds": to_value(&r.rounds),
                "placement": to_value(&r.placement),
                "symmetric": r.placement.is_symmetric(&sg),
                "numeric_verdict": to_value(&r.verdict),
            });
            Ok((body, r.verdict.isostatic))
        }
    }
}

/// Brute-force Laman verdict compared with the pebble game.
pub fn cmd_oracle(input: &str) -> Outcome {
    outcome("oracle", input, oracle(input))
}

fn oracle(input: &str) -> Result<(Value, bool), CliError> {
    let sg = parse_graph(input)?;
    let brute = brute_force_laman(sg.graph())?;
    let pebble = laman_check(sg.graph())?;
    let body = json!({ "brute_force": brute, "pebble_game": pebble, "agree": brute == pebble });
    Ok((body, brute))
}

/// SVG of a symmetric generic placement; bars are styled by tree when the
/// graph is isostatic. Returns the outcome and, on success, the document.
pub fn render(input: &str, seed: u64) -> (Outcome, Option<String>) {
    match render_inner(input, seed) {
        Ok((body, iso, svg)) => (outcome("render", input, Ok((body, iso))), Some(svg)),
        Err(e) => (outcome("render", input, Err(e)), None),
    }
}

fn render_inner(input: &str, seed: u64) -> Result<(Value, bool, String), CliError> {
    let sg = parse_graph(input)?;
    let placement = symmetric_generic_positions(&sg, seed)?;
    let verdict = check_c3_isostatic(&sg)?;
    let partition = if verdict.isostatic {
        Some(certificates(&sg)?.1)
    } else {
        None
    };
    let svg = render_svg(sg.graph(), &placement.to_f64(), partition.as_ref());
    let body = json!({
        "seed": seed,
        "circles": sg.n(),
        "segments": sg.m(),
        "styled_by_partition": partition.is_some(),
    });
    Ok((body, verdict.isostatic, svg))
}

/// [`render`] and write the SVG to `out`.
pub fn cmd_render(input: &str, seed: u64, out: &Path) -> Outcome {
    let (mut outcome, svg) = render(input, seed);
    if let Some(svg) = svg {
        match std::fs::write(out, svg) {
            Ok(()) => outcome.report.body["out"] = json!(out.display().to_string()),
            Err(e) => {
                let err = CliError::Io(format!("cannot write {}: {e}", out.display()));
                outcome.report.body = error_body(&err);
                outcome.exit_code = EXIT_ERROR;
            }
        }
    }
    outcome
}

/// Report for input that could not be read at all.
pub fn io_failure(command: &str, message: String) -> Outcome {
    outcome(command, "", Err(CliError::Io(message)))
}

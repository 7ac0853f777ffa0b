//! Command-line front end. [`run`] parses arguments, dispatches and
//! returns the process exit code; data goes to `out`, summaries and
//! failure reports to `err`.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::covers::{CoverError, VertexCover};
use crate::decomposition::{
    check_technical_exclusions, decompose, find_wrong_set, plan_good_cover, DecompositionError,
    WrongSet,
};
use crate::graph::corpus::{named_graph, named_graph_with, random_cubic};
use crate::graph::io::{parse_graph, sniff_format, to_graph6, Format};
use crate::graph::{Edge, Graph};
use crate::oracle::{
    brute_edge_normal, brute_good, brute_normal, brute_strongly_edge_normal, SearchBudget,
};
use crate::witness::{
    certify, to_normality_witness, verify_certificate, verify_witness, CertificateFile,
    WitnessError,
};

/// Stable exit-code contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    VerificationFailed = 1,
    ParseError = 2,
    Precondition = 3,
    Internal = 4,
    Unknown = 5,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cubic-normality",
    version,
    about = "Good vertex covers and normality witnesses for line graphs of cubic graphs"
)]
pub struct CliConfig {
    /// Print extra detail to stderr.
    #[arg(short, long, global = true)]
    pub verbose: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a graph in graph6 or edge-list form.
    Generate {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_parser = parse_format, default_value = "graph6")]
        to: Format,
    },
    /// Build and verify a certificate, then write it as JSON.
    Witness {
        #[command(flatten)]
        input: GraphInput,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate file. Without a graph input the embedded
    /// graph is used.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short, long)]
        certificate: PathBuf,
    },
    /// Brute-force decisions for small graphs.
    Oracle {
        #[arg(value_enum)]
        check: OracleCheck,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 60_000)]
        budget_ms: u64,
        /// Cover for `good`; the pipeline's cover when absent.
        #[arg(long)]
        cover: Option<PathBuf>,
    },
    /// Split along bridges and list pieces and links.
    Decompose {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Report whether a minimal cover is good, or show its wrong set.
    Diagnose {
        #[command(flatten)]
        input: GraphInput,
        /// Vertex ids separated by whitespace or commas, or a certificate file.
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleCheck {
    Normal,
    EdgeNormal,
    Strong,
    Good,
}

/// Where the graph comes from: a named graph, a seeded random cubic
/// graph, or a file.
#[derive(Debug, Clone, Default, Args)]
pub struct GraphInput {
    /// Named graph such as `petersen`, `C5` or `flower_snark` with `--k`.
    #[arg(long, conflicts_with_all = ["n", "input"])]
    pub name: Option<String>,
    /// Parameter for a named family.
    #[arg(long, requires = "name")]
    pub k: Option<usize>,
    /// Vertex count of a random cubic graph.
    #[arg(long, conflicts_with = "input")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Graph file, `-` for stdin.
    #[arg(short, long)]
    pub input: Option<PathBuf>,
    /// Input format; guessed from the content when absent.
    #[arg(long, value_parser = parse_format)]
    pub format: Option<Format>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

impl GraphInput {
    fn is_given(&self) -> bool {
        self.name.is_some() || self.n.is_some() || self.input.is_some()
    }

    pub fn resolve(&self) -> Result<Graph, Failure> {
        if let Some(name) = &self.name {
            let g = match self.k {
                Some(k) => named_graph_with(name, Some(k)),
                None => named_graph(name),
            };
            return g.map_err(|e| Failure::parse(e.to_string()));
        }
        if let Some(n) = self.n {
            return random_cubic(n, self.seed).map_err(|e| Failure::parse(e.to_string()));
        }
        let Some(path) = &self.input else {
            return Err(Failure::parse("no graph given; use --name, --n or --input"));
        };
        let bytes = read_bytes(path)?;
        let format = self.format.unwrap_or_else(|| sniff_format(&bytes));
        parse_graph(&bytes, format).map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
    }
}

/// An exit code with the message for stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: ExitCode,
    pub message: String,
}

impl Failure {
    fn new(code: ExitCode, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn parse(message: impl Into<String>) -> Self {
        Failure::new(ExitCode::ParseError, message)
    }
}

fn cover_code(e: &CoverError) -> ExitCode {
    match e {
        CoverError::NotNice(_) | CoverError::NoNiceMatching(_) | CoverError::Contradiction(_) => {
            ExitCode::Internal
        }
        _ => ExitCode::Precondition,
    }
}

impl From<DecompositionError> for Failure {
    fn from(e: DecompositionError) -> Self {
        let code = match &e {
            DecompositionError::Cover(c) => cover_code(c),
            DecompositionError::NoGoodCover(_)
            | DecompositionError::Inconsistent(_)
            | DecompositionError::WrongSetInvariant(_) => ExitCode::Internal,
            _ => ExitCode::Precondition,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<CoverError> for Failure {
    fn from(e: CoverError) -> Self {
        Failure::new(cover_code(&e), e.to_string())
    }
}

impl From<WitnessError> for Failure {
    fn from(e: WitnessError) -> Self {
        match e {
            WitnessError::Decomposition(d) => d.into(),
            WitnessError::Json(_) | WitnessError::GraphField(_) | WitnessError::Version(_) => {
                Failure::parse(e.to_string())
            }
            WitnessError::Graph(_) => Failure::new(ExitCode::Precondition, e.to_string()),
            WitnessError::Certificate(_) | WitnessError::Witness(_) => {
                Failure::new(ExitCode::Internal, e.to_string())
            }
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure::parse(format!("{}: {e}", path.display()))
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, Failure> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| io_failure(path, e))?;
        return Ok(buf);
    }
    fs::read(path).map_err(|e| io_failure(path, e))
}

fn read_text(path: &Path) -> Result<String, Failure> {
    String::from_utf8(read_bytes(path)?)
        .map_err(|_| Failure::parse(format!("{}: not UTF-8", path.display())))
}

/// Vertex ids from a plain list or from a certificate file's cover.
fn read_cover(path: &Path) -> Result<Vec<usize>, Failure> {
    let text = read_text(path)?;
    if text.trim_start().starts_with('{') {
        return Ok(CertificateFile::from_json(&text)
            .map_err(Failure::from)?
            .cover);
    }
    text.split(|c: char| c.is_whitespace() || c == ',' || c == '[' || c == ']')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Failure::parse(format!("{}: bad vertex id `{t}`", path.display())))
        })
        .collect()
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::new(ExitCode::Internal, format!("write failed: {e}")))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                ExitCode::ParseError
            } else {
                ExitCode::Success
            };
            let _ = write!(err, "{e}");
            return code.code();
        }
    };
    match execute(&config, out, err) {
        Ok(code) => code.code(),
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code.code()
        }
    }
}

pub fn execute(
    config: &CliConfig,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<ExitCode, Failure> {
    match &config.command {
        Command::Generate { input, to } => cmd_generate(input, *to, out),
        Command::Witness { input, out: path } => {
            cmd_witness(input, path.as_deref(), config.verbose, out, err)
        }
        Command::Verify { input, certificate } => cmd_verify(input, certificate, err),
        Command::Oracle {
            check,
            input,
            budget_ms,
            cover,
        } => cmd_oracle(*check, input, *budget_ms, cover.as_deref(), out),
        Command::Decompose { input, json } => cmd_decompose(input, *json, out),
        Command::Diagnose { input, cover, json } => cmd_diagnose(input, cover, *json, out, err),
    }
}

fn cmd_generate(input: &GraphInput, to: Format, out: &mut dyn Write) -> Result<ExitCode, Failure> {
    let g = input.resolve()?;
    let text = match to {
        Format::Graph6 => format!("{}\n", to_graph6(&g)),
        Format::EdgeList => crate::graph::io::to_edgelist(&g),
    };
    write_out(out, &text)?;
    Ok(ExitCode::Success)
}

pub fn cmd_witness(
    input: &GraphInput,
    path: Option<&Path>,
    verbose: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<ExitCode, Failure> {
    let g = input.resolve()?;
    let (cert, witness) = certify(&g)?;
    if verbose {
        let _ = writeln!(err, "cover {:?}", cert.cover);
        for (e, s) in &cert.per_edge {
            let _ = writeln!(err, "  ({e}) {s:?}");
        }
    }
    let file = CertificateFile::new(&g, &cert, &witness)?;
    let text = file.to_json();
    match path {
        Some(p) => fs::write(p, &text)
            .map_err(|e| Failure::new(ExitCode::Internal, format!("{}: {e}", p.display())))?,
        None => write_out(out, &text)?,
    }
    let _ = writeln!(
        err,
        "n={} m={} cover={} stables={} line_vertices_covered={}",
        g.n(),
        g.m(),
        cert.cover.len(),
        witness.stables.len(),
        witness.host.line.n()
    );
    Ok(ExitCode::Success)
}

pub fn cmd_verify(
    input: &GraphInput,
    certificate: &Path,
    err: &mut dyn Write,
) -> Result<ExitCode, Failure> {
    let file = CertificateFile::from_json(&read_text(certificate)?)?;
    let g = if input.is_given() {
        input.resolve()?
    } else {
        file.embedded_graph()?
    };
    let report = |err: &mut dyn Write, what: &str, msg: String| {
        let _ = writeln!(err, "{what} rejected: {msg}");
        Ok(ExitCode::VerificationFailed)
    };
    let cert = match file.certificate_for(&g) {
        Ok(c) => c,
        Err(f) => return report(err, "certificate", f.to_string()),
    };
    if let Err(f) = verify_certificate(&g, &cert) {
        return report(err, "certificate", f.to_string());
    }
    let witness = match file.witness_for(&g) {
        Ok(w) => w,
        Err(e) => return report(err, "witness", e.to_string()),
    };
    if let Err(f) = verify_witness(&witness.host.line, &witness) {
        return report(err, "witness", f.to_string());
    }
    // the stored families must be the ones the certificate implies
    if let Ok(derived) = to_normality_witness(&g, &cert) {
        if derived != witness {
            let _ = writeln!(
                err,
                "note: stored witness differs from the one derived from the certificate"
            );
        }
    }
    let _ = writeln!(err, "ok: certificate and witness verify");
    Ok(ExitCode::Success)
}

pub fn cmd_oracle(
    check: OracleCheck,
    input: &GraphInput,
    budget_ms: u64,
    cover: Option<&Path>,
    out: &mut dyn Write,
) -> Result<ExitCode, Failure> {
    let g = input.resolve()?;
    let budget = SearchBudget::default().with_millis(budget_ms);
    let decision = match check {
        OracleCheck::Normal => brute_normal(&g, &budget),
        OracleCheck::EdgeNormal => brute_edge_normal(&g, &budget),
        OracleCheck::Strong => brute_strongly_edge_normal(&g, &budget),
        OracleCheck::Good => {
            let c = match cover {
                Some(p) => read_cover(p)?,
                None => plan_good_cover(&g)?.cover.vertices().to_vec(),
            };
            if let Some(&v) = c.iter().find(|&&v| v >= g.n()) {
                return Err(Failure::new(
                    ExitCode::Precondition,
                    format!("cover vertex {v} out of range"),
                ));
            }
            crate::oracle::Decision::from_bool(brute_good(&g, &c))
        }
    };
    write_out(out, &format!("{decision}\n"))?;
    Ok(match decision.as_bool() {
        Some(_) => ExitCode::Success,
        None => ExitCode::Unknown,
    })
}

#[derive(Serialize)]
struct PieceJson {
    body: Vec<usize>,
    arms: Vec<usize>,
}

#[derive(Serialize)]
struct LinkJson {
    piece_a: usize,
    piece_b: usize,
    bridge: [usize; 2],
}

#[derive(Serialize)]
struct DecompositionJson {
    format_version: u32,
    n: usize,
    pieces: Vec<PieceJson>,
    links: Vec<LinkJson>,
}

pub fn cmd_decompose(
    input: &GraphInput,
    json: bool,
    out: &mut dyn Write,
) -> Result<ExitCode, Failure> {
    let g = input.resolve()?;
    let tree = decompose(&g)?;
    let pieces: Vec<PieceJson> = tree
        .pieces
        .iter()
        .map(|p| PieceJson {
            body: p.original_body(),
            arms: p.shape.arms().iter().map(|&a| p.to_original[a]).collect(),
        })
        .collect();
    let links: Vec<LinkJson> = tree
        .links
        .iter()
        .map(|l| LinkJson {
            piece_a: l.piece_a,
            piece_b: l.piece_b,
            bridge: [l.bridge.u, l.bridge.v],
        })
        .collect();
    let text = if json {
        let doc = DecompositionJson {
            format_version: 1,
            n: g.n(),
            pieces,
            links,
        };
        format!(
            "{}\n",
            serde_json::to_string_pretty(&doc).expect("plain data serializes")
        )
    } else {
        let mut s = format!("{} pieces, {} links\n", pieces.len(), links.len());
        for (i, p) in pieces.iter().enumerate() {
            s.push_str(&format!(
                "piece {i}: body {} arms {} body_vertices {:?}\n",
                p.body.len(),
                p.arms.len(),
                p.body
            ));
        }
        for l in &links {
            s.push_str(&format!(
                "link {} - {} via ({},{})\n",
                l.piece_a, l.piece_b, l.bridge[0], l.bridge[1]
            ));
        }
        s
    };
    write_out(out, &text)?;
    Ok(ExitCode::Success)
}

#[derive(Serialize)]
struct DiagnosisJson<'a> {
    good: bool,
    wrong_set: Option<&'a WrongSet>,
    invariant_violations: Vec<String>,
    technical_exclusions: Vec<usize>,
}

pub fn cmd_diagnose(
    input: &GraphInput,
    cover_path: &Path,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<ExitCode, Failure> {
    let g = input.resolve()?;
    let ids = read_cover(cover_path)?;
    let cover = VertexCover::new(&g, ids)?;
    let ws = find_wrong_set(&g, &cover)?;
    let (violations, clauses) = match &ws {
        Some(ws) => (
            ws.violations(&g, &cover),
            check_technical_exclusions(ws, &g, &cover)?
                .into_iter()
                .map(|c| c.number())
                .collect::<Vec<_>>(),
        ),
        None => (Vec::new(), Vec::new()),
    };
    let text = if json {
        let doc = DiagnosisJson {
            good: ws.is_none(),
            wrong_set: ws.as_ref(),
            invariant_violations: violations.clone(),
            technical_exclusions: clauses.clone(),
        };
        format!(
            "{}\n",
            serde_json::to_string_pretty(&doc).expect("plain data serializes")
        )
    } else {
        match &ws {
            None => "good\n".to_string(),
            Some(ws) => describe_wrong_set(ws, &violations, &clauses),
        }
    };
    write_out(out, &text)?;
    if !violations.is_empty() || !clauses.is_empty() {
        let _ = writeln!(err, "wrong set fails its checklist");
        return Ok(ExitCode::Internal);
    }
    Ok(ExitCode::Success)
}

fn describe_wrong_set(ws: &WrongSet, violations: &[String], clauses: &[usize]) -> String {
    let Edge { u, v } = ws.edge;
    let mut s = String::from("not good\n");
    s.push_str(&format!("type {}\n", ws.kind));
    s.push_str(&format!("U {{{u},{v}}}\n"));
    s.push_str(&format!("W {:?}\nZ {:?}\nY {:?}\n", ws.w, ws.z, ws.y));
    s.push_str(&format!("bridge ({},{})\n", ws.exit.0, ws.exit.1));
    s.push_str(&format!(
        "delta {} epsilon {} |X| {} |N(X)| {}\n",
        ws.stats.delta, ws.stats.epsilon, ws.stats.x_size, ws.stats.nx_size
    ));
    let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
    s.push_str(&format!(
        "[{}] type invariants\n",
        mark(violations.is_empty())
    ));
    for v in violations {
        s.push_str(&format!("  {v}\n"));
    }
    s.push_str(&format!(
        "[{}] technical exclusions\n",
        mark(clauses.is_empty())
    ));
    for c in clauses {
        s.push_str(&format!("  clause {c} holds\n"));
    }
    s
}

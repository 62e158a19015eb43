//! Batch front end for the disperse hypergraph toolkit: file format, commands and corpus runs.
//!
//! Every command returns its standard output together with an exit code, so the binary is
//! a thin dispatcher and the tests can drive commands without spawning processes.

pub mod format;
pub mod verify;

use std::fmt::Write;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use disperse_core::cotree::recognize_cohypergraph;
use disperse_core::extraction::{homogeneous_pipeline_with, PipelineOptions};
use disperse_core::generators::{
    default_corpus, gen_cohypergraph, gen_partial_steiner, gen_random, gen_split_link, Seed,
};
use disperse_core::splitlinks::extract_split_structure;
use disperse_core::structure::{
    check_disperse, tight_components, verify_components_are_cliques,
};
use disperse_core::{Hypergraph, Recognition};
use thiserror::Error;

pub use format::{parse_raw, serialize, serialize_with_comment, ParseError, RawHypergraph};

pub const DEFAULT_MAX_N: usize = 64;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("n = {n} exceeds --max-n {max_n}")]
    TooLarge { n: usize, max_n: usize },
    #[error(transparent)]
    Core(#[from] disperse_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Usage(_) => EXIT_PARSE,
            CliError::TooLarge { .. } => EXIT_RESOURCE,
            CliError::Core(e) if e.is_resource() => EXIT_RESOURCE,
            CliError::Core(_) => EXIT_NEGATIVE,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Standard output of a command and the exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_OK,
        }
    }

    fn negative(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_NEGATIVE,
        }
    }
}

/// Parses a document, refusing headers with more than `max_n` vertices before indexing.
pub fn parse_hypergraph(text: &str, max_n: usize) -> CliResult<Hypergraph> {
    parse_named("<input>", text, max_n)
}

fn parse_named(path: &str, text: &str, max_n: usize) -> CliResult<Hypergraph> {
    let raw = parse_raw(text).map_err(|source| CliError::Parse {
        path: path.to_string(),
        source,
    })?;
    if raw.n > max_n {
        return Err(CliError::TooLarge { n: raw.n, max_n });
    }
    Ok(Hypergraph::new(raw.n, raw.ell, &raw.edges)?)
}

pub fn read_hypergraph(path: &Path, max_n: usize) -> CliResult<Hypergraph> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: name.clone(),
        source,
    })?;
    parse_named(&name, &text, max_n)
}

fn join(vs: impl IntoIterator<Item = usize>) -> String {
    let mut out = String::new();
    for (i, v) in vs.into_iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
    }
    out
}

pub fn cmd_check(g: &Hypergraph) -> CliResult<Outcome> {
    let report = check_disperse(g)?;
    Ok(match report.witness {
        None => Outcome::ok("DISPERSE\n".into()),
        Some((w, count)) => Outcome::negative(format!(
            "NOT DISPERSE witness {} count {count}\n",
            join(w.iter())
        )),
    })
}

pub fn cmd_components(g: &Hypergraph) -> CliResult<Outcome> {
    let parts = tight_components(g)?;
    let mut out = String::new();
    writeln!(out, "components {}", parts.len()).unwrap();
    for (i, class) in parts.classes().iter().enumerate() {
        writeln!(
            out,
            "component {i} tuples {} support {}",
            class.members.len(),
            join(class.support.iter())
        )
        .unwrap();
    }
    if g.ell() >= 3 {
        let check = verify_components_are_cliques(g)?;
        let verdict = match (check.hypothesis_violated, &check.violation) {
            (true, _) => "skipped (not disperse)".to_string(),
            (false, None) => "yes".to_string(),
            (false, Some(v)) => format!("no {v:?}"),
        };
        writeln!(out, "supports are cliques {verdict}").unwrap();
    }
    Ok(Outcome::ok(out))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct HomogeneousFlags {
    pub trace: bool,
    pub oracle_fallback: bool,
}

pub fn cmd_homogeneous(g: &Hypergraph, flags: HomogeneousFlags) -> CliResult<Outcome> {
    let options = PipelineOptions {
        oracle_fallback: flags.oracle_fallback,
    };
    let r = homogeneous_pipeline_with(g, &options)?;
    let mut out = String::new();
    writeln!(out, "{} {}", r.result.kind, r.result.len()).unwrap();
    writeln!(out, "{}", join(r.result.vertices.iter())).unwrap();
    writeln!(out, "branch {}", r.branch.name()).unwrap();
    writeln!(out, "certified {}", r.result.certified_bound).unwrap();
    if r.from_oracle {
        writeln!(out, "from exact oracle").unwrap();
    }
    if flags.trace {
        if let Some(u) = &r.u {
            writeln!(out, "U {}", join(u.iter())).unwrap();
        }
        out.push_str(&r.trace.report());
    }
    Ok(Outcome::ok(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TreeFormat {
    #[default]
    Text,
    Dot,
}

pub fn cmd_cotree(g: &Hypergraph, format: TreeFormat) -> CliResult<Outcome> {
    Ok(match recognize_cohypergraph(g)? {
        Recognition::Cohypergraph(t) => Outcome::ok(match format {
            TreeFormat::Text => format!("{t}\n"),
            TreeFormat::Dot => t.to_dot(),
        }),
        Recognition::Irreducible(s) => {
            Outcome::negative(format!("IRREDUCIBLE {}\n", join(s.iter())))
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenFamily {
    Random,
    Steiner,
    Cotree,
    SplitLink,
}

#[derive(Debug, Clone, Copy)]
pub struct GenParams {
    pub family: GenFamily,
    pub n: usize,
    pub ell: usize,
    pub p: f64,
    pub seed: Seed,
}

/// A generated instance as a file, with its parameters in the leading comment.
pub fn generate(params: &GenParams, max_n: usize) -> CliResult<String> {
    let GenParams { family, n, ell, p, seed } = *params;
    if n > max_n {
        return Err(CliError::TooLarge { n, max_n });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(CliError::Usage(format!("--p must lie in [0, 1], got {p}")));
    }
    let (g, comment) = match family {
        GenFamily::Random => (
            gen_random(n, ell, p, seed)?,
            format!("random n {n} ell {ell} p {p} seed {seed}"),
        ),
        GenFamily::Steiner => (
            gen_partial_steiner(n, ell, seed)?,
            format!("steiner n {n} ell {ell} seed {seed}"),
        ),
        GenFamily::Cotree => {
            let (g, t) = gen_cohypergraph(n, ell, seed)?;
            (g, format!("cotree n {n} ell {ell} seed {seed}\ntree {t}"))
        }
        GenFamily::SplitLink => {
            if ell != 3 {
                return Err(CliError::Usage(format!("splitlink instances are 3-graphs, got --ell {ell}")));
            }
            let (g, f) = gen_split_link(n, seed)?;
            let edges: Vec<String> = f.edges().map(|(u, v)| format!("{u}-{v}")).collect();
            (g, format!("splitlink n {n} seed {seed}\nF {}", edges.join(" ")))
        }
    };
    Ok(serialize_with_comment(&g, Some(&comment)))
}

pub fn cmd_generate(params: &GenParams, max_n: usize) -> CliResult<Outcome> {
    generate(params, max_n).map(Outcome::ok)
}

/// Writes every instance of the default corpus to `dir` as `<label>.hg`.
pub fn write_corpus(seed: Seed, dir: &Path) -> CliResult<Vec<PathBuf>> {
    let io_err = |path: &Path| {
        let path = path.display().to_string();
        move |source| CliError::Io { path, source }
    };
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut paths = Vec::new();
    for inst in default_corpus(seed)? {
        let path = dir.join(format!("{}.hg", inst.label()));
        let comment = format!(
            "corpus default seed {seed} family {} instance seed {}",
            inst.family.name(),
            inst.seed
        );
        fs::write(&path, serialize_with_comment(&inst.graph, Some(&comment))).map_err(io_err(&path))?;
        paths.push(path);
    }
    Ok(paths)
}

pub fn cmd_split_extract(g: &Hypergraph) -> CliResult<Outcome> {
    let s = extract_split_structure(g)?;
    let mut out = String::new();
    writeln!(out, "U {} size {}", join(s.u.iter()), s.u.len()).unwrap();
    writeln!(out, "bad pairs {}", s.bad_pairs.edge_count()).unwrap();
    writeln!(out, "F {}", s.f.edge_count()).unwrap();
    for (u, v) in s.f.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    Ok(Outcome::ok(out))
}

/// Runs every check over the given instances; exit 1 if any failed.
pub fn cmd_verify(instances: &[(String, Hypergraph)]) -> Outcome {
    let reports = verify::check_many(instances);
    let mut out = String::new();
    for r in &reports {
        writeln!(out, "{}", r.line()).unwrap();
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "verified {} instances, {failed} failed", reports.len()).unwrap();
    Outcome {
        stdout: out,
        code: if failed == 0 { EXIT_OK } else { EXIT_NEGATIVE },
    }
}

pub fn corpus_instances(name: &str, seed: Seed) -> CliResult<Vec<(String, Hypergraph)>> {
    if name != "default" {
        return Err(CliError::Usage(format!("unknown corpus {name:?} (known: default)")));
    }
    Ok(default_corpus(seed)?
        .into_iter()
        .map(|inst| (inst.label(), inst.graph))
        .collect())
}

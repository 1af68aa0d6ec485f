//! Command implementations behind the `rtclosure` binary.
//!
//! Each command takes already-read input text and returns an [`Outcome`],
//! so the binary only handles argument parsing and I/O.
//!
//! Exit codes: 0 success, 1 negative answer (not derivable, FAIL),
//! 2 usage or parse error, 3 size-guard violation.

pub mod edge_list;

use std::fmt::Write as _;

use clap::ValueEnum;
use rtclosure_core::derivation::{self, parse_certificate, RuleSet};
use rtclosure_core::lattice::{self, ClosureTable, MooreFamily};
use rtclosure_core::path_algebra::{self, Boolean, Dist, SemiringMatrix, Tropical};
use rtclosure_core::quantale::{self, Language, LanguageQuantale, RelationQuantale};
use rtclosure_core::{Error as CoreError, Exec, Relation, Universe};
use thiserror::Error;

pub use edge_list::{parse_edge_list, EdgeListDocument, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("method `{method}` supports at most {bound} elements, input has {size}")]
    SizeGuard {
        method: &'static str,
        size: usize,
        bound: usize,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::SizeGuard { .. } => 3,
            CliError::Core(CoreError::TooLarge { .. }) => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            ..Outcome::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Powers,
    Intersection,
    Hereditary,
    Derivation,
    Fixpoint,
    Warshall,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Powers => "powers",
            Method::Intersection => "intersection",
            Method::Hereditary => "hereditary",
            Method::Derivation => "derivation",
            Method::Fixpoint => "fixpoint",
            Method::Warshall => "warshall",
        }
    }
}

/// Computes the reflexive-transitive closure of `r` with `method`, on the
/// calling thread.
pub fn closure(r: &Relation, method: Method) -> Result<Relation, CliError> {
    let guard = |e: CoreError| match e {
        CoreError::TooLarge { size, bound, .. } => CliError::SizeGuard {
            method: method.name(),
            size,
            bound,
        },
        other => CliError::Core(other),
    };
    let u = r.universe();
    Ok(match method {
        Method::Powers => r.closure_by_powers(),
        Method::Intersection => r.closure_by_intersection_with(Exec::Sequential).map_err(guard)?,
        Method::Hereditary => r.closure_by_hereditary_with(Exec::Sequential).map_err(guard)?,
        Method::Derivation => derivation::theorems(r),
        Method::Fixpoint => {
            let step = lattice::on_square(u, lattice::star_step(r));
            let lfp = lattice::least_fixed_point(step, &u.square())?;
            Relation::from_square_subset(u, &lfp)?
        }
        Method::Warshall => SemiringMatrix::from_relation(r).warshall().to_relation(u)?,
    })
}

/// Closure edges one per line in universe order, or DOT with `dot`.
pub fn cmd_close(doc: &EdgeListDocument, method: Method, dot: bool) -> Result<String, CliError> {
    let r = doc.relation();
    let c = closure(&r, method)?;
    if dot {
        return Ok(render_dot(&r, &c));
    }
    let mut out = String::new();
    for (x, y) in c.labeled_pairs() {
        writeln!(out, "{x} {y}").unwrap();
    }
    Ok(out)
}

fn render_dot(original: &Relation, closure: &Relation) -> String {
    let q = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
    let u = closure.universe();
    let mut out = String::from("digraph closure {\n");
    for label in u.labels() {
        writeln!(out, "  {};", q(label)).unwrap();
    }
    for (x, y) in closure.pairs() {
        let style = if original.contains(x, y) { "" } else { " [style=dashed]" };
        writeln!(out, "  {} -> {}{style};", q(u.label(x)), q(u.label(y))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// The canonical derivation of `x R* y`, or exit 1 when it is not derivable.
pub fn cmd_certify(doc: &EdgeListDocument, x: &str, y: &str) -> Result<Outcome, CliError> {
    let r = doc.relation();
    match derivation::derive(&r, x, y)? {
        Some(d) => Ok(Outcome::ok(format!("{d}\n"))),
        None => Ok(Outcome {
            stderr: format!("{x} {y}: not derivable\n"),
            code: 1,
            ..Outcome::default()
        }),
    }
}

pub fn cmd_check_cert(doc: &EdgeListDocument, certificate: &str, rules: RuleSet) -> Result<Outcome, CliError> {
    let d = parse_certificate(certificate)?;
    let r = doc.relation();
    Ok(match d.check(&r, rules) {
        Ok(()) => Outcome::ok("PASS\n".into()),
        Err(reason) => Outcome {
            stdout: format!("FAIL: {reason}\n"),
            code: 1,
            ..Outcome::default()
        },
    })
}

/// All-pairs shortest distances. The first line lists the column labels
/// after `#`; each following line is a row label and its distances.
pub fn cmd_shortest(doc: &EdgeListDocument) -> Result<String, CliError> {
    if !doc.edges.is_empty() && !doc.is_weighted() {
        return Err(CliError::Usage("shortest needs a weighted edge list (`u v w`)".into()));
    }
    let u = doc.universe();
    if u.is_empty() {
        return Ok(String::new());
    }
    let d = doc.digraph().to_matrix().floyd_warshall();
    let mut out = format!("# {}\n", u.labels().join(" "));
    for (label, row) in u.labels().iter().zip(d.rows()) {
        let cells: Vec<String> = row.iter().map(Dist::to_string).collect();
        writeln!(out, "{label} {}", cells.join(" ")).unwrap();
    }
    Ok(out)
}

/// Language star of the words in `words`, one per line, `<eps>` for the
/// empty word, blank lines and `#` comments ignored.
pub fn cmd_star_lang(alphabet: &str, max_len: usize, words: &str) -> Result<String, CliError> {
    let parsed: Vec<&str> = words
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| if l == EPSILON { "" } else { l })
        .collect();
    let l = Language::new(alphabet, max_len, parsed)?;
    let mut out = String::new();
    for w in quantale::lang_star(&l).words() {
        out.push_str(if w.is_empty() { EPSILON } else { &w });
        out.push('\n');
    }
    Ok(out)
}

const EPSILON: &str = "<eps>";

pub const LAW_TARGETS: [&str; 7] = [
    "quantale-relation-n2",
    "quantale-relation-n3",
    "quantale-language-a1-k3",
    "quantale-language-ab-k4",
    "path-boolean",
    "path-tropical",
    "closure-operator-n2",
];

/// Runs one law suite and prints `PASS`/`FAIL` per law.
pub fn cmd_laws(target: &str) -> Result<Outcome, CliError> {
    let report = match target {
        "quantale-relation-n2" => quantale::check_laws(&RelationQuantale::new(&Universe::numbered(2)), 1 << 13),
        "quantale-relation-n3" => quantale::check_laws(&RelationQuantale::new(&Universe::numbered(3)), 20_000),
        "quantale-language-a1-k3" => quantale::check_laws(&LanguageQuantale::new("a", 3)?, 1 << 13),
        "quantale-language-ab-k4" => quantale::check_laws(&LanguageQuantale::new("ab", 4)?, 20_000),
        "path-boolean" => path_algebra::check_laws(Boolean, &[false, true]),
        "path-tropical" => {
            let mut dists: Vec<Dist> = (0..10).map(Dist::Finite).collect();
            dists.push(Dist::Infinite);
            path_algebra::check_laws(Tropical, &dists)
        }
        "closure-operator-n2" => return Ok(closure_operator_report()),
        other => {
            return Err(CliError::Usage(format!(
                "unknown law target `{other}`; expected one of: {}",
                LAW_TARGETS.join(", ")
            )))
        }
    };
    Ok(Outcome {
        stdout: report.to_string(),
        code: u8::from(!report.all_passed()),
        ..Outcome::default()
    })
}

fn closure_operator_report() -> Outcome {
    let x = Universe::numbered(2);
    let square = x.square();
    let table = ClosureTable::from_fn(&square, lattice::on_square(&x, Relation::closure_by_powers))
        .expect("4-point square is within the table bound");
    let family = lattice::family_from_closure(&table);
    let checks = [
        ("closure laws (inflationary, idempotent, monotone)", lattice::is_closure_operator(&table)),
        ("fixed points form a Moore family", lattice::is_moore_family(&family)),
        (
            "family -> closure -> family round trip",
            lattice::closure_from_family_as_table(&family).is_ok_and(|t| t == table),
        ),
        (
            "transitive relations form a Moore family",
            lattice::transitive_family(&x).is_ok_and(|f: MooreFamily| lattice::is_moore_family(&f)),
        ),
    ];
    let mut stdout = String::new();
    for (law, ok) in checks {
        writeln!(stdout, "{} {law}", if ok { "PASS" } else { "FAIL" }).unwrap();
    }
    Outcome {
        stdout,
        code: u8::from(!checks.iter().all(|c| c.1)),
        ..Outcome::default()
    }
}

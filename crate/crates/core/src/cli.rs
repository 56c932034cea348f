//! The `codis` command line. The binary only forwards to [`run`].

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::constructions::{clique_whisker, common_enemy, named_graph, upper_bound_graph, EdgeCliquePartition, Orphan};
use crate::graph::Graph;
use crate::homology::{Field, DEFAULT_BETTI_CAP};
use crate::io::{
    emit_graph6, invariant_report, parse_digraph, parse_edgelist, parse_graph6_or_sparse6, parse_poset, sanity_check,
    verify_report, Invariant, InvariantReport, ParseError, ReportOptions, ResultCache,
};
use crate::verification::{
    check_claim, search_counterexample, search_in, Budget, CheckOptions, ClaimId, Problem, Universe, VerdictReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
/// A budget or cap cut the work short.
pub const EXIT_PARTIAL: i32 = 3;
pub const EXIT_CERT_INVALID: i32 = 4;
/// A claim check found violations.
pub const EXIT_VIOLATIONS: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "codis", version, about = "Invariants of edge ideals and independence complexes of small graphs")]
struct Cli {
    /// Worker threads for batch and exhaustive work.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant reports for every graph in a file (graph6/sparse6 lines or one edge list).
    Invariants(InvariantsArgs),
    /// Check a claim on its default universe, or `all`.
    Check(CheckArgs),
    /// Search for a counterexample to an open problem.
    Search(SearchArgs),
    /// Print a graph of a named family as graph6.
    Make(MakeArgs),
    /// Certificate tools.
    Cert {
        #[command(subcommand)]
        command: CertCommand,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FieldChoice {
    Gf2,
    Q,
    Both,
}

#[derive(Args, Debug)]
struct InvariantsArgs {
    /// Input file, or `-` for standard input.
    input: String,
    #[arg(long, value_enum, default_value = "both")]
    field: FieldChoice,
    /// Comma-separated invariant names (e.g. im,reg,cochord).
    #[arg(long, value_delimiter = ',')]
    only: Option<Vec<String>>,
    /// One JSON report per line.
    #[arg(long)]
    json: bool,
    /// Largest order for Betti numbers and regularity.
    #[arg(long, default_value_t = DEFAULT_BETTI_CAP)]
    betti_cap: usize,
    /// Cache directory; defaults to $CODIS_CACHE_DIR.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
    /// Replay cached certificates before trusting them.
    #[arg(long)]
    paranoid: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    claim: String,
    #[arg(long)]
    max_n: Option<usize>,
    /// Also evaluate every graph on the definitional route.
    #[arg(long)]
    slow: bool,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    max_graphs: Option<usize>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    max_time: Option<f64>,
    /// Check graph6 lines from this file instead of the built-in universe.
    #[arg(long)]
    input: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SearchArgs {
    problem: String,
    #[arg(long)]
    max_n: usize,
    /// Search graph6 lines from this file instead of enumerating.
    #[arg(long)]
    input: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct MakeArgs {
    /// cycle, path, complete, star, doublestar, pan, wheel, gn, whisker,
    /// orphan, common-enemy or upper-bound.
    family: String,
    /// Family parameters. `whisker` takes a family and its parameters or
    /// `-`; `orphan` a name; `common-enemy` and `upper-bound` a file or `-`.
    params: Vec<String>,
    /// Clique classes for `whisker`, e.g. "0 1 2,2 3"; default one class per edge.
    #[arg(long)]
    cliques: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CertCommand {
    /// Replay every certificate of one or more JSON reports.
    Verify { report: String },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, String> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|e| format!("standard input: {e}"))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
        }
    }
}

/// Runs the command line on `args` (program name first) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    if let Some(n) = cli.threads {
        // Fails only if a pool already exists, which then stays in use.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    let mut io = Io { stdin, out, err };
    let code = match cli.command {
        Command::Invariants(a) => invariants(a, &mut io),
        Command::Check(a) => check(a, &mut io),
        Command::Search(a) => search(a, &mut io),
        Command::Make(a) => make(a, &mut io),
        Command::Cert { command: CertCommand::Verify { report } } => cert_verify(&report, &mut io),
    };
    code.unwrap_or_else(|(code, message)| {
        let _ = writeln!(io.err, "codis: {message}");
        code
    })
}

type Outcome = Result<i32, (i32, String)>;

/// A report with its failed sanity checks, or a parse error.
type Computed = Result<(InvariantReport, Vec<String>), String>;

fn usage(message: impl Into<String>) -> (i32, String) {
    (EXIT_USAGE, message.into())
}

fn parse_error(message: impl Into<String>) -> (i32, String) {
    (EXIT_PARSE, message.into())
}

fn is_edgelist_header(line: &str) -> bool {
    let mut it = line.split_whitespace();
    matches!((it.next(), it.next(), it.next()), (Some(a), Some(b), None) if a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok())
}

/// Graphs of an input text with their line numbers: either one edge list,
/// or one graph6/sparse6 string per non-empty line.
fn read_graphs(text: &str) -> Vec<(usize, Result<Graph, ParseError>)> {
    let first = text.lines().find(|l| !l.trim().is_empty());
    if first.is_some_and(is_edgelist_header) {
        return vec![(1, parse_edgelist(text))];
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6_or_sparse6(l.trim())))
        .collect()
}

fn fields(choice: FieldChoice) -> Vec<Field> {
    match choice {
        FieldChoice::Gf2 => vec![Field::Gf2],
        FieldChoice::Q => vec![Field::Rational],
        FieldChoice::Both => Field::ALL.to_vec(),
    }
}

fn invariants(a: InvariantsArgs, io: &mut Io) -> Outcome {
    let only = match &a.only {
        Some(list) => {
            Some(list.iter().map(|s| s.parse::<Invariant>()).collect::<Result<Vec<_>, _>>().map_err(|e| {
                let names: Vec<&str> = Invariant::ALL.iter().map(|i| i.name()).collect();
                usage(format!("{e}\ninvariants: {}", names.join(" ")))
            })?)
        }
        None => None,
    };
    let options = ReportOptions { fields: fields(a.field), only, betti_cap: a.betti_cap, paranoid: a.paranoid };
    let cache = match (&a.cache, a.no_cache) {
        (_, true) => None,
        (Some(dir), false) => Some(ResultCache::new(dir)),
        (None, false) => ResultCache::from_env(),
    };
    let text = io.read(&a.input).map_err(usage)?;
    let inputs = read_graphs(&text);
    let results: Vec<(usize, Computed)> = inputs
        .into_par_iter()
        .map(|(line, parsed)| {
            let result = parsed.map_err(|e| e.to_string()).map(|g| {
                let report = invariant_report(&g, &options, cache.as_ref());
                let problems = sanity_check(&g, &report);
                (report, problems)
            });
            (line, result)
        })
        .collect();
    let mut code = EXIT_OK;
    let mut raise = |c: i32| code = code.max(c);
    for (line, result) in results {
        match result {
            Err(e) => {
                let _ = writeln!(io.err, "line {line}: {e}");
                raise(EXIT_PARSE);
            }
            Ok((report, problems)) => {
                let written = if a.json {
                    writeln!(io.out, "{}", serde_json::to_string(&report).expect("reports serialize"))
                } else {
                    write!(io.out, "{}", render_report(&report))
                };
                written.map_err(|e| usage(e.to_string()))?;
                for p in &report.skipped {
                    let _ = writeln!(io.err, "line {line}: skipped {p}");
                    raise(EXIT_PARTIAL);
                }
                for p in problems {
                    let _ = writeln!(io.err, "line {line}: sanity check failed: {p}");
                    raise(EXIT_CERT_INVALID);
                }
            }
        }
    }
    Ok(code)
}

fn per_field<V: std::fmt::Display>(m: &std::collections::BTreeMap<String, V>) -> String {
    m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn render_report(r: &InvariantReport) -> String {
    let mut s = format!("{}  n={} edges={} girth={}\n", r.input.graph6, r.n, r.m, r.girth);
    let mut line = |name: &str, value: String| s.push_str(&format!("  {name:<20}{value}\n"));
    let bools = [
        ("well_covered", r.well_covered),
        ("very_well_covered", r.very_well_covered),
        ("cns", r.cns),
        ("codismantlable", r.codismantlable),
        ("vertex_decomposable", r.vertex_decomposable),
    ];
    for (name, v) in bools {
        if let Some(v) = v {
            line(name, v.to_string());
        }
    }
    if !r.cohen_macaulay.is_empty() {
        line("cohen_macaulay", per_field(&r.cohen_macaulay));
    }
    if !r.sequentially_cm.is_empty() {
        line("sequentially_cm", per_field(&r.sequentially_cm));
    }
    let counts = [
        ("alpha", r.alpha),
        ("matching", r.matching),
        ("induced_matching", r.induced_matching),
        ("domination", r.domination),
        ("cochord", r.cochord),
    ];
    for (name, v) in counts {
        if let Some(v) = v {
            line(name, v.to_string());
        }
    }
    if !r.regularity.is_empty() {
        line("regularity", per_field(&r.regularity));
    }
    s
}

fn external(path: &str, io: &mut Io) -> Result<Vec<Graph>, (i32, String)> {
    let text = io.read(path).map_err(usage)?;
    read_graphs(&text)
        .into_iter()
        .map(|(line, g)| g.map_err(|e| parse_error(format!("{path}: line {line}: {e}"))))
        .collect()
}

fn verdict_line(r: &VerdictReport) -> String {
    format!(
        "{}: {} (tested {}, applicable {}, skipped {}, violations {}) [{}]",
        r.subject,
        r.verdict,
        r.tested,
        r.applicable,
        r.skipped,
        r.violations.len(),
        r.universe
    )
}

fn check(a: CheckArgs, io: &mut Io) -> Outcome {
    let ids: Vec<ClaimId> = if a.claim.eq_ignore_ascii_case("all") {
        ClaimId::ALL.to_vec()
    } else {
        vec![a.claim.parse().map_err(|e: crate::verification::UnknownClaim| {
            let ids: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
            usage(format!("{e}\nclaims: {}, or all", ids.join(" ")))
        })?]
    };
    let external = match &a.input {
        Some(path) => Some((path.clone(), external(path, io)?)),
        None => None,
    };
    let max_time = match a.max_time {
        Some(s) if !(s.is_finite() && s >= 0.0) => return Err(usage("--max-time must be a non-negative number")),
        s => s.map(Duration::from_secs_f64),
    };
    let options = CheckOptions {
        universe: Universe { max_n: a.max_n, samples: a.samples, seed: a.seed, external },
        budget: Budget { max_graphs: a.max_graphs, max_time },
        cross_check: a.slow,
    };
    let mut code = EXIT_OK;
    for id in ids {
        let report = check_claim(id, &options).map_err(|e| usage(e.to_string()))?;
        let text = if a.json {
            serde_json::to_string_pretty(&report).expect("reports serialize")
        } else {
            verdict_line(&report)
        };
        writeln!(io.out, "{text}").map_err(|e| usage(e.to_string()))?;
        if !a.json {
            for v in &report.violations {
                let _ = writeln!(io.out, "  violation {} [{:?}]: {}", v.graph6, v.status, v.detail);
            }
        }
        code = code.max(if !report.violations.is_empty() {
            EXIT_VIOLATIONS
        } else if !report.complete {
            EXIT_PARTIAL
        } else {
            EXIT_OK
        });
    }
    Ok(code)
}

fn search(a: SearchArgs, io: &mut Io) -> Outcome {
    let problem: Problem = a.problem.parse().map_err(|e: crate::verification::UnknownProblem| usage(e.to_string()))?;
    let (_, report) = match &a.input {
        Some(path) => {
            let graphs: Vec<Graph> = external(path, io)?.into_iter().filter(|g| g.n() <= a.max_n).collect();
            search_in(problem, path, &graphs)
        }
        None => search_counterexample(problem, a.max_n).map_err(|e| usage(e.to_string()))?,
    };
    let text = if a.json {
        serde_json::to_string_pretty(&report).expect("reports serialize")
    } else {
        let tested: usize = report.tested.iter().map(|&(_, k)| k).sum();
        format!("{}: {} (examined {tested} graphs) [{}]", report.problem, report.verdict, report.universe)
    };
    writeln!(io.out, "{text}").map_err(|e| usage(e.to_string()))?;
    Ok(if report.unconfirmed.is_empty() { EXIT_OK } else { EXIT_VIOLATIONS })
}

fn numbers(params: &[String]) -> Result<Vec<usize>, (i32, String)> {
    params.iter().map(|p| p.parse::<usize>().map_err(|_| usage(format!("expected a number, got {p:?}")))).collect()
}

fn cliques(spec: &str) -> Result<Vec<Vec<usize>>, (i32, String)> {
    spec.split(',').map(|class| numbers(&class.split_whitespace().map(String::from).collect::<Vec<_>>())).collect()
}

fn make(a: MakeArgs, io: &mut Io) -> Outcome {
    let one_arg = |what: &str| match &a.params[..] {
        [p] => Ok(p.clone()),
        _ => Err(usage(format!("{} takes one argument: {what}", a.family))),
    };
    let g = match a.family.as_str() {
        "whisker" => {
            let host = match &a.params[..] {
                [dash] if dash == "-" => {
                    let text = io.read("-").map_err(usage)?;
                    parse_graph6_or_sparse6(text.trim()).map_err(|e| parse_error(e.to_string()))?
                }
                [family, rest @ ..] => named_graph(family, &numbers(rest)?).map_err(|e| usage(e.to_string()))?,
                [] => return Err(usage("whisker takes a family and its parameters, or -")),
            };
            let pi = match &a.cliques {
                Some(spec) => EdgeCliquePartition::new(&host, cliques(spec)?).map_err(|e| usage(e.to_string()))?,
                None => EdgeCliquePartition::edges_of(&host),
            };
            clique_whisker(&host, &pi)
        }
        "orphan" => {
            let name = one_arg("C7, P10, P13, Q13 or P14")?;
            let which: Orphan = name.parse().map_err(|_| usage(format!("unknown orphan {name:?}")))?;
            crate::constructions::orphan(which).map_err(|e| usage(e.to_string()))?
        }
        "common-enemy" => {
            let text = io.read(&one_arg("a digraph file or -")?).map_err(usage)?;
            common_enemy(&parse_digraph(&text).map_err(|e| parse_error(e.to_string()))?)
        }
        "upper-bound" => {
            let text = io.read(&one_arg("a poset file or -")?).map_err(usage)?;
            upper_bound_graph(&parse_poset(&text).map_err(|e| parse_error(e.to_string()))?)
        }
        family => named_graph(family, &numbers(&a.params)?).map_err(|e| usage(e.to_string()))?,
    };
    writeln!(io.out, "{}", emit_graph6(&g)).map_err(|e| usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn cert_verify(path: &str, io: &mut Io) -> Outcome {
    let text = io.read(path).map_err(usage)?;
    let reports: Vec<InvariantReport> = match serde_json::from_str(&text) {
        Ok(r) => vec![r],
        Err(_) => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| serde_json::from_str(l).map_err(|e| parse_error(format!("{path}: line {}: {e}", i + 1))))
            .collect::<Result<_, _>>()?,
    };
    let mut code = EXIT_OK;
    for r in &reports {
        match verify_report(r) {
            Ok(k) => {
                let _ = writeln!(io.out, "ok {} ({k} certificates)", r.input.graph6);
            }
            Err(errors) => {
                code = EXIT_CERT_INVALID;
                let _ = writeln!(io.out, "INVALID {}", r.input.graph6);
                for e in errors {
                    let _ = writeln!(io.out, "  {e}");
                }
            }
        }
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("codis").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gn_pipeline() {
        let (code, g6, _) = call(&["make", "gn", "1"], "");
        assert_eq!(code, 0);
        let (code, json, err) = call(&["invariants", "-", "--json", "--field", "gf2", "--no-cache"], &g6);
        assert_eq!(code, 0, "{err}");
        let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
        assert_eq!(
            (v["induced_matching"].as_u64(), v["matching"].as_u64(), v["cochord"].as_u64()),
            (Some(3), Some(6), Some(4))
        );
        assert_eq!(v["regularity"]["gf2"], 3);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        fs::write(&path, &json).unwrap();
        let (code, out, _) = call(&["cert", "verify", path.to_str().unwrap()], "");
        assert_eq!(code, 0, "{out}");
        fs::write(&path, json.replace("\"cochord\":4", "\"cochord\":3")).unwrap();
        assert_eq!(call(&["cert", "verify", path.to_str().unwrap()], "").0, EXIT_CERT_INVALID);
    }

    #[test]
    fn batch_keeps_order_and_survives_bad_lines() {
        let (code, out, err) = call(&["invariants", "-", "--only", "im", "--no-cache"], "Bw\n!!\nCr\n");
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("line 2"), "{err}");
        let a = out.find("Bw").unwrap();
        let c = out.find("Cr").unwrap();
        assert!(a < c);
    }

    #[test]
    fn six_cycle_is_not_vd() {
        let (_, g6, _) = call(&["make", "cycle", "6"], "");
        let (code, out, _) = call(&["invariants", "-", "--no-cache"], &g6);
        assert_eq!(code, 0);
        assert!(
            out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["vertex_decomposable", "false"]),
            "{out}"
        );
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"], "").0, EXIT_USAGE);
        assert_eq!(call(&["check", "NOT_A_CLAIM"], "").0, EXIT_USAGE);
        assert_eq!(call(&["make", "cycle", "x"], "").0, EXIT_USAGE);
        assert_eq!(call(&["invariants", "-", "--only", "girthh"], "").0, EXIT_USAGE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
    }

    #[test]
    fn make_families() {
        for args in [
            &["whisker", "cycle", "4"][..],
            &["orphan", "p10"],
            &["doublestar", "2", "3"],
            &["whisker", "complete", "3", "--cliques", "0 1 2"],
        ] {
            let mut full = vec!["make"];
            full.extend_from_slice(args);
            let (code, out, err) = call(&full, "");
            assert_eq!(code, 0, "{args:?}: {err}");
            assert!(parse_graph6_or_sparse6(out.trim()).is_ok());
        }
        let (code, out, _) = call(&["make", "common-enemy", "-"], "3 2\n0 1\n1 2\n");
        assert_eq!(code, 0);
        // Every closed enemy set of the dipath 0->1->2 contains 0.
        assert_eq!(parse_graph6_or_sparse6(out.trim()).unwrap().edge_count(), 3);
        let (code, _, _) = call(&["make", "upper-bound", "-"], "3 2\n0 2\n1 2\n");
        assert_eq!(code, 0);
        assert_eq!(call(&["make", "upper-bound", "-"], "2 2\n0 1\n1 0\n").0, EXIT_PARSE);
    }

    #[test]
    fn check_and_search() {
        let (code, out, _) = call(&["check", "THM_3_4", "--max-n", "6"], "");
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("violations 0"));
        assert_eq!(call(&["check", "THM_3_4", "--max-graphs", "3"], "").0, EXIT_PARTIAL);
        let (code, out, _) = call(&["search", "WCCODIS_VD", "--max-n", "5"], "");
        assert_eq!(code, 0);
        assert!(out.contains("none up to n=5"), "{out}");
    }
}

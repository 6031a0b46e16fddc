//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification suite found a counterexample,
//! 2 usage or input error, 3 a solver guardrail was exceeded.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::construction::build_gamma;
use crate::domination::{self, branch_bound, first_violation, oracle, DominationResult, GammaKind, Method};
use crate::edgelist::{parse_edge_list, write_edge_list};
use crate::error::Error;
use crate::graph::{make_empty_graph, make_path, make_star_like, Graph, StarLikeSpec, VertexSet};
use crate::product::lex_product;
use crate::reduction::{build_reduction, solve_set_cover_1k, SetCoverInstance};
use crate::suite::{self, GraphCatalog, LemmaCatalog, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARDRAIL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "kdom", version, about = "Exact [1,k]-domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph as an edge list.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Lexicographic product G ∘ H of two edge-list files.
    Product {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
    },
    /// Compute a domination parameter exactly.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Bb)]
        method: MethodArg,
        /// Sequential search, so the witness is reproducible.
        #[arg(long)]
        deterministic: bool,
    },
    /// Check whether a vertex set (1-based, comma-separated) is valid.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[command(flatten)]
        kind: KindArgs,
    },
    /// Build the set-cover gadget, optionally solving both problems.
    Reduce {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        solve: bool,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Bound k. The lemma suite defaults to both 1 and 2.
        #[arg(long)]
        k: Option<usize>,
        /// Largest exhaustive graph order (case1, corollary) or universe size (lemma).
        #[arg(long)]
        max_n: Option<usize>,
        /// Largest pendant count (gamma).
        #[arg(long, default_value_t = 4)]
        max_t: usize,
        /// Random catalog size: extra graphs (case1, corollary) or instances (lemma).
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    Starlike {
        /// Arm lengths, e.g. 2,2,2.
        #[arg(long, value_delimiter = ',', required = true)]
        arms: Vec<usize>,
    },
    Empty {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    /// The extremal bipartite graph Γ(k, t).
    Gamma {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Debug, Args)]
struct KindArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
#[value(rename_all = "snake_case")]
enum KindArg {
    Plain,
    OneK,
    Total,
    TotalOneK,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Bb,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Case1,
    Corollary,
    Lemma,
    Gamma,
}

/// Failure carrying the exit code it maps to.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Guardrail { .. } => EXIT_GUARDRAIL,
            _ => EXIT_USAGE,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

impl KindArgs {
    fn resolve(&self) -> Result<GammaKind, Failure> {
        let need_k = |k: Option<usize>| k.ok_or_else(|| usage("--k is required for this kind"));
        let kind = match self.kind {
            KindArg::Plain | KindArg::Total if self.k.is_some() => {
                return Err(usage("--k only applies to one_k and total_one_k"))
            }
            KindArg::Plain => GammaKind::Plain,
            KindArg::Total => GammaKind::Total,
            KindArg::OneK => GammaKind::OneK(need_k(self.k)?),
            KindArg::TotalOneK => GammaKind::TotalOneK(need_k(self.k)?),
        };
        kind.validate()?;
        Ok(kind)
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn parse_set(text: &str, n: usize) -> Result<VertexSet, Failure> {
    let mut set = VertexSet::empty(n);
    for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().map_err(|_| usage(format!("bad vertex `{tok}` in --set")))?;
        if v == 0 || v > n {
            return Err(usage(format!("vertex {v} out of range 1..={n}")));
        }
        set.insert(v - 1);
    }
    Ok(set)
}

fn one_based(set: &VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes") + "\n"
}

/// Parses `args` (including the program name) and runs the command,
/// writing normal output to `out` and diagnostics to `err`.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn execute(cmd: Command) -> Result<(String, i32), Failure> {
    match cmd {
        Command::Gen { family } => Ok((generate(family)?, EXIT_OK)),
        Command::Product { g, h } => {
            let p = lex_product(&read_graph(&g)?, &read_graph(&h)?);
            Ok((p.to_edge_list(), EXIT_OK))
        }
        Command::Solve {
            graph,
            kind,
            method,
            deterministic,
        } => {
            let g = read_graph(&graph)?;
            let kind = kind.resolve()?;
            let r = match method {
                MethodArg::Oracle => oracle::solve(&g, kind)?,
                MethodArg::Bb => branch_bound::solve(
                    &g,
                    kind,
                    branch_bound::Options {
                        parallel: !deterministic,
                    },
                )?,
            };
            Ok((json_line(&r.to_json(kind)), EXIT_OK))
        }
        Command::Check { graph, set, kind } => {
            let g = read_graph(&graph)?;
            let kind = kind.resolve()?;
            let d = parse_set(&set, g.order())?;
            Ok(match first_violation(&g, &d, kind)? {
                None => ("true\n".into(), EXIT_OK),
                Some(v) => (format!("false\nviolated vertex {}\n", v + 1), EXIT_OK),
            })
        }
        Command::Reduce { instance, solve } => {
            let text = fs::read_to_string(&instance).map_err(|e| usage(format!("{}: {e}", instance.display())))?;
            let inst = SetCoverInstance::from_json(&text)?;
            if solve {
                Ok((json_line(&solve_reduction(&inst)?), EXIT_OK))
            } else {
                Ok((build_reduction(&inst).to_edge_list(), EXIT_OK))
            }
        }
        Command::Verify {
            suite,
            k,
            max_n,
            max_t,
            samples,
            seed,
        } => {
            let report = run_suite(suite, k, max_n, max_t, samples, seed)?;
            let mut text = String::new();
            for c in &report.cases {
                text.push_str(&c.to_string());
                text.push('\n');
            }
            text.push_str(&report.summary());
            text.push('\n');
            let code = if report.all_pass() { EXIT_OK } else { EXIT_VIOLATION };
            Ok((text, code))
        }
    }
}

fn generate(family: Family) -> Result<String, Failure> {
    Ok(match family {
        Family::Starlike { arms } => {
            let label = arms.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let g = make_star_like(&StarLikeSpec::new(arms)?)?;
            write_edge_list(&g, &[format!("starlike {label}")])
        }
        Family::Empty { n } => write_edge_list(&make_empty_graph(n)?, &[format!("empty {n}")]),
        Family::Path { n } => write_edge_list(&make_path(n)?, &[format!("path {n}")]),
        Family::Gamma { k, t } => build_gamma(k, t)?.to_edge_list(),
    })
}

#[derive(Serialize)]
struct ReduceAnswer {
    k: usize,
    problem_a: Answer,
    problem_b: Answer,
}

#[derive(Serialize)]
struct Answer {
    answer: &'static str,
    /// 1-based triple indices (A) or vertex indices (B).
    witness: Option<Vec<usize>>,
}

impl Answer {
    fn from(witness: Option<Vec<usize>>) -> Self {
        Answer {
            answer: if witness.is_some() { "yes" } else { "no" },
            witness,
        }
    }
}

fn solve_reduction(inst: &SetCoverInstance) -> Result<ReduceAnswer, Failure> {
    let cover = solve_set_cover_1k(inst)?;
    let rg = build_reduction(inst);
    let kind = GammaKind::TotalOneK(inst.k());
    let method = if rg.graph().order() <= suite::ORACLE_SWEEP_LIMIT {
        Method::Oracle
    } else {
        Method::BranchBound
    };
    let total: DominationResult = domination::gamma_exact(rg.graph(), kind, method)?;
    Ok(ReduceAnswer {
        k: inst.k(),
        problem_a: Answer::from(cover.map(|c| c.into_iter().map(|j| j + 1).collect())),
        problem_b: Answer::from(total.witness().map(one_based)),
    })
}

fn run_suite(
    which: SuiteArg,
    k: Option<usize>,
    max_n: Option<usize>,
    max_t: usize,
    samples: Option<usize>,
    seed: u64,
) -> Result<SuiteReport, Failure> {
    let report = match which {
        SuiteArg::Case1 | SuiteArg::Corollary => {
            let k = k.unwrap_or(2);
            if k == 0 {
                return Err(usage("--k must be at least 1"));
            }
            let max_n = max_n.unwrap_or(4);
            if !(1..=5).contains(&max_n) {
                return Err(usage("--max-n must be in 1..=5 for graph sweeps"));
            }
            let cat = GraphCatalog {
                max_n,
                samples: samples.unwrap_or(30),
                seed,
            };
            match which {
                SuiteArg::Case1 => suite::case1_suite(k, cat)?,
                _ => suite::corollary_suite(k, cat)?,
            }
        }
        SuiteArg::Lemma => {
            let ks = match k {
                Some(0) => return Err(usage("--k must be at least 1")),
                Some(k) => vec![k],
                None => vec![1, 2],
            };
            let max_n = max_n.unwrap_or(4);
            if !(3..=6).contains(&max_n) {
                return Err(usage("--max-n must be in 3..=6 for the lemma sweep"));
            }
            suite::lemma_suite(&LemmaCatalog {
                max_n,
                max_t: 2,
                ks,
                random: samples.unwrap_or(200),
                seed,
            })?
        }
        SuiteArg::Gamma => suite::gamma_suite(k.unwrap_or(2), max_t)?,
    };
    Ok(report)
}

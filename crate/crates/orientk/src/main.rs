//! Command-line entry point: generators, checkers, the NAE encoder, and the
//! orientation search, wired into reproducible batch runs.
//!
//! Exit codes: 0 = property holds / artifact produced; 1 = property refuted
//! (a checkable witness is part of the report); 2 = usage or parse error;
//! 3 = search budget exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use orientk::connectivity::{
    is_k_connected, is_weakly_2k_connected, min_mixed_cut, vertex_conn_pair, KWitness,
    WeakWitness,
};
use orientk::counterexamples::{verify_counterexample, GkParams, OrientationStatus};
use orientk::graph::{parse_graph, Multigraph, ParsedGraph, PartialOrientation};
use orientk::reduction::{
    build_h3_prime, decode_orientation, encode, eulerize, parse_nae, GadgetMap,
};
use orientk::search::{search, SearchOutcome};
use orientk::{build_g3_candidate, build_gk, build_h3_candidate, check_reduction_equivalence};

#[derive(Parser)]
#[command(name = "orientk", version, about = "k-connected orientation toolkit")]
struct Cli {
    /// emit the run report as JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// worker threads (0 = all cores); falls back to ORIENTK_THREADS
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// include per-pair flow certificates in positive check reports
    #[arg(long, global = true)]
    certificates: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// generate one of the built-in graphs
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// compile a NAE instance into its gadget digraph
    Encode {
        #[arg(long)]
        k: usize,
        naefile: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        map: PathBuf,
        /// also add the Eulerization arcs F
        #[arg(long)]
        eulerize: bool,
    },
    /// check a property of a graph file
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// search for a k-connected orientation
    Search {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        graph: PathBuf,
    },
    /// read the assignment off a consistent reorientation
    Decode { map: PathBuf, orientation: PathBuf },
    /// run a verification pipeline
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// the counterexample G_k (k >= 4)
    Gk(GkArgs),
    /// the frozen 10-vertex counterexample candidate G_3
    G3 {
        #[arg(short, long)]
        output: PathBuf,
    },
    /// the frozen 8-vertex counterexample candidate H_3
    H3 {
        #[arg(short, long)]
        output: PathBuf,
    },
    /// the Eulerian counterexample H'_3 with its gadget map
    #[command(name = "h3-prime")]
    H3Prime {
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
}

#[derive(Args)]
struct GkArgs {
    #[arg(long)]
    k: usize,
    /// odd, at least k^2; defaults to the smallest such value
    #[arg(long)]
    n: Option<usize>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// weak 2k-connectivity of an undirected graph
    Weak {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
    },
    /// k-connectivity of an oriented graph
    Kconn {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
        orientation: PathBuf,
    },
    /// Euler circuit existence
    Euler { graph: PathBuf },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// confirm that a graph is weakly 2k-connected yet has no k-connected
    /// orientation
    Counterexample {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        graph: PathBuf,
    },
    /// exhaustively check NAE satisfaction against k-connectivity of the
    /// natural reorientations
    Reduction {
        #[arg(long)]
        k: usize,
        naefile: PathBuf,
    },
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs: Vec<InputDigest>,
    outcome: Value,
    elapsed_ms: u128,
    exit_code: u8,
}

struct Ctx {
    inputs: Vec<InputDigest>,
    text: String,
    certificates: bool,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<String, CliError> {
        let data = std::fs::read(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
        self.inputs.push(InputDigest {
            path: path.display().to_string(),
            sha256: format!("{:x}", Sha256::digest(&data)),
        });
        String::from_utf8(data)
            .map_err(|_| CliError::usage(format!("{} is not UTF-8", path.display())))
    }

    fn write(&mut self, path: &Path, content: &str) -> Result<(), CliError> {
        std::fs::write(path, content)
            .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

struct CliError {
    message: String,
    exit: u8,
}

impl CliError {
    fn usage(message: String) -> Self {
        Self { message, exit: 2 }
    }
}

fn load_undirected(ctx: &mut Ctx, path: &Path) -> Result<Multigraph, CliError> {
    let text = ctx.read(path)?;
    match parse_graph(&text) {
        Ok(ParsedGraph::Undirected(g)) => Ok(g),
        Ok(ParsedGraph::Directed(_)) => Err(CliError::usage(format!(
            "{} is directed, expected an undirected graph",
            path.display()
        ))),
        Err(e) => Err(CliError::usage(format!("{}: {e}", path.display()))),
    }
}

/// Euler-circuit existence only depends on the underlying graph, so the
/// euler check accepts directed files too.
fn load_any_underlying(ctx: &mut Ctx, path: &Path) -> Result<Multigraph, CliError> {
    let text = ctx.read(path)?;
    match parse_graph(&text) {
        Ok(ParsedGraph::Undirected(g)) => Ok(g),
        Ok(ParsedGraph::Directed(d)) => Ok(d.underlying().0),
        Err(e) => Err(CliError::usage(format!("{}: {e}", path.display()))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| std::env::var("ORIENTK_THREADS").ok().and_then(|s| s.parse().ok()));
    if let Some(t) = threads {
        if t > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
    }
    let command: Vec<String> = std::env::args().collect();
    let start = std::time::Instant::now();
    let mut ctx =
        Ctx { inputs: Vec::new(), text: String::new(), certificates: cli.certificates };
    let result = run(&cli.cmd, &mut ctx);
    let (outcome, exit) = match result {
        Ok((outcome, exit)) => (outcome, exit),
        Err(e) => {
            ctx.line(format!("error: {}", e.message));
            (json!({ "error": e.message }), e.exit)
        }
    };
    let report = RunReport {
        command: command.join(" "),
        inputs: ctx.inputs,
        outcome,
        elapsed_ms: start.elapsed().as_millis(),
        exit_code: exit,
    };
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable report"));
    } else {
        print!("{}", ctx.text);
        eprintln!("elapsed: {} ms", report.elapsed_ms);
    }
    ExitCode::from(exit)
}

fn run(cmd: &Cmd, ctx: &mut Ctx) -> Result<(Value, u8), CliError> {
    match cmd {
        Cmd::Gen { what } => run_gen(what, ctx),
        Cmd::Encode { k, naefile, output, map, eulerize: eul } => {
            let text = ctx.read(naefile)?;
            let pi =
                parse_nae(&text).map_err(|e| CliError::usage(format!("{e}")))?;
            let (d, m) =
                encode(&pi, *k).map_err(|e| CliError::usage(format!("{e}")))?;
            let (d, m) = if *eul {
                eulerize(&d, &m).map_err(|e| CliError::usage(format!("{e}")))?
            } else {
                (d, m)
            };
            ctx.write(output, &d.serialize())?;
            let map_json = serde_json::to_string_pretty(&m).expect("serializable map");
            ctx.write(map, &map_json)?;
            ctx.line(format!(
                "encoded {} clauses over {} variables: {} vertices, {} arcs",
                pi.clauses().len(),
                pi.variables().len(),
                d.vertex_count(),
                d.arc_count()
            ));
            Ok((
                json!({
                    "vertices": d.vertex_count(),
                    "arcs": d.arc_count(),
                    "variables": pi.variables(),
                    "eulerized": *eul,
                }),
                0,
            ))
        }
        Cmd::Check { what } => run_check(what, ctx),
        Cmd::Search { k, budget, graph } => {
            let g = load_undirected(ctx, graph)?;
            match search(&g, *k, *budget) {
                SearchOutcome::Found(o) => {
                    ctx.line("orientation found:");
                    ctx.line(o.serialize().trim_end());
                    Ok((json!({ "status": "found", "orientation": o.serialize() }), 0))
                }
                SearchOutcome::RefutedExhaustive => {
                    ctx.line(format!("no {k}-connected orientation exists (exhausted)"));
                    Ok((json!({ "status": "refuted_exhaustive" }), 1))
                }
                SearchOutcome::RefutedBySeparator(branches) => {
                    ctx.line(format!(
                        "no {k}-connected orientation exists ({} refuted branches)",
                        branches.len()
                    ));
                    for b in &branches {
                        ctx.line(format!("SEPARATOR {}", b.separator.join(" ")));
                    }
                    Ok((
                        json!({
                            "status": "refuted_by_separator",
                            "separators":
                                branches.iter().map(|b| b.separator.clone()).collect::<Vec<_>>(),
                        }),
                        1,
                    ))
                }
                SearchOutcome::Unknown { nodes_explored } => {
                    ctx.line(format!("budget exhausted after {nodes_explored} nodes"));
                    Ok((json!({ "status": "unknown", "nodes_explored": nodes_explored }), 3))
                }
            }
        }
        Cmd::Decode { map, orientation } => {
            let map_text = ctx.read(map)?;
            let m: GadgetMap = serde_json::from_str(&map_text)
                .map_err(|e| CliError::usage(format!("{}: {e}", map.display())))?;
            let o_text = ctx.read(orientation)?;
            // capacity: every arc id the map references, plus anything the
            // file mentions
            let map_max = m
                .pairs
                .iter()
                .flatten()
                .chain(m.delta.iter().flatten())
                .chain(m.special.iter().flatten())
                .chain(m.eulerize.iter())
                .copied()
                .max()
                .unwrap_or(0);
            let file_max = o_text
                .lines()
                .filter_map(|l| l.split_whitespace().next()?.parse::<usize>().ok())
                .max()
                .unwrap_or(0);
            let o = PartialOrientation::parse(&o_text, map_max.max(file_max) + 1)
                .map_err(|e| CliError::usage(format!("{}: {e}", orientation.display())))?;
            match decode_orientation(&m, &o) {
                Ok(assignment) => {
                    for (name, value) in m.variables.iter().zip(&assignment) {
                        ctx.line(format!("{name} = {value}"));
                    }
                    let vars: Vec<Value> = m
                        .variables
                        .iter()
                        .zip(&assignment)
                        .map(|(n, v)| json!({ "variable": n, "value": v }))
                        .collect();
                    Ok((json!({ "consistent": true, "assignment": vars }), 0))
                }
                Err(e) => {
                    ctx.line(format!("inconsistent: {e}"));
                    Ok((json!({ "consistent": false, "reason": format!("{e}") }), 1))
                }
            }
        }
        Cmd::Verify { what } => run_verify(what, ctx),
    }
}

fn run_gen(what: &GenCmd, ctx: &mut Ctx) -> Result<(Value, u8), CliError> {
    match what {
        GenCmd::Gk(args) => {
            let n = args.n.unwrap_or_else(|| GkParams::default_n(args.k));
            let params =
                GkParams::new(args.k, n).map_err(|e| CliError::usage(format!("{e}")))?;
            let (g, roles) =
                build_gk(params).map_err(|e| CliError::usage(format!("{e}")))?;
            ctx.write(&args.output, &g.serialize())?;
            ctx.line(format!(
                "G_{}(n={n}): {} vertices, {} edges -> {}",
                args.k,
                g.vertex_count(),
                g.edge_count(),
                args.output.display()
            ));
            Ok((
                json!({
                    "k": args.k,
                    "n": n,
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "roles": serde_json::to_value(&roles).expect("serializable roles"),
                }),
                0,
            ))
        }
        GenCmd::G3 { output } => {
            let g = build_g3_candidate();
            ctx.write(output, &g.serialize())?;
            ctx.line(format!(
                "G_3 candidate: {} vertices, {} edges -> {}",
                g.vertex_count(),
                g.edge_count(),
                output.display()
            ));
            Ok((json!({ "vertices": g.vertex_count(), "edges": g.edge_count() }), 0))
        }
        GenCmd::H3 { output } => {
            let g = build_h3_candidate();
            ctx.write(output, &g.serialize())?;
            ctx.line(format!(
                "H_3 candidate: {} vertices, {} edges -> {}",
                g.vertex_count(),
                g.edge_count(),
                output.display()
            ));
            Ok((json!({ "vertices": g.vertex_count(), "edges": g.edge_count() }), 0))
        }
        GenCmd::H3Prime { output, map } => {
            let (g, m) = build_h3_prime();
            ctx.write(output, &g.serialize())?;
            let map_json = serde_json::to_string_pretty(&m).expect("serializable map");
            ctx.write(map, &map_json)?;
            ctx.line(format!(
                "H'_3: {} vertices, {} edges -> {}",
                g.vertex_count(),
                g.edge_count(),
                output.display()
            ));
            Ok((json!({ "vertices": g.vertex_count(), "edges": g.edge_count() }), 0))
        }
    }
}

fn run_check(what: &CheckCmd, ctx: &mut Ctx) -> Result<(Value, u8), CliError> {
    match what {
        CheckCmd::Weak { k, graph } => {
            let g = load_undirected(ctx, graph)?;
            let res = is_weakly_2k_connected(&g, *k);
            if res.holds {
                ctx.line(format!("weakly {}-connected: yes", 2 * k));
                let mut certs = Value::Null;
                if ctx.certificates {
                    let mut lines = Vec::new();
                    for u in 0..g.vertex_count() {
                        for v in (u + 1)..g.vertex_count() {
                            let cut = min_mixed_cut(&g, g.label(u), g.label(v))
                                .map_err(|e| CliError::usage(format!("{e}")))?;
                            ctx.line(format!(
                                "pair {} {}: min mixed cut value {}",
                                g.label(u),
                                g.label(v),
                                cut.value
                            ));
                            lines.push(json!({
                                "from": g.label(u), "to": g.label(v), "value": cut.value,
                            }));
                        }
                    }
                    certs = Value::Array(lines);
                }
                Ok((json!({ "holds": true, "certificates": certs }), 0))
            } else {
                let witness = res.witness.expect("failing check carries a witness");
                match &witness {
                    WeakWitness::TooFewVertices { vertex_count } => {
                        ctx.line(format!("refuted: only {vertex_count} vertices"));
                    }
                    WeakWitness::Cut { from, to, cut } => {
                        ctx.line(format!("refuted: pair {from} {to}"));
                        ctx.line(format!("{cut}"));
                    }
                }
                Ok((
                    json!({
                        "holds": false,
                        "witness": serde_json::to_value(&witness).expect("serializable"),
                    }),
                    1,
                ))
            }
        }
        CheckCmd::Kconn { k, graph, orientation } => {
            let g = load_undirected(ctx, graph)?;
            let o_text = ctx.read(orientation)?;
            let o = PartialOrientation::parse(&o_text, g.edge_count())
                .map_err(|e| CliError::usage(format!("{}: {e}", orientation.display())))?;
            let d = g.orient(&o).map_err(|e| CliError::usage(format!("{e}")))?;
            let res = is_k_connected(&d, *k);
            if res.holds {
                ctx.line(format!("{k}-connected: yes"));
                let mut certs = Value::Null;
                if ctx.certificates {
                    let mut lines = Vec::new();
                    for u in 0..d.vertex_count() {
                        for v in (u + 1)..d.vertex_count() {
                            let pc = vertex_conn_pair(&d, d.label(u), d.label(v), *k)
                                .map_err(|e| CliError::usage(format!("{e}")))?;
                            ctx.line(format!(
                                "pair {} {}: value {}",
                                d.label(u),
                                d.label(v),
                                pc.value
                            ));
                            lines.push(json!({
                                "from": d.label(u), "to": d.label(v), "value": pc.value,
                            }));
                        }
                    }
                    certs = Value::Array(lines);
                }
                Ok((json!({ "holds": true, "certificates": certs }), 0))
            } else {
                let witness = res.witness.expect("failing check carries a witness");
                match &witness {
                    KWitness::TooFewVertices { vertex_count } => {
                        ctx.line(format!("refuted: only {vertex_count} vertices"));
                    }
                    KWitness::SeparatedPair(s) => {
                        ctx.line(format!("{s}"));
                    }
                }
                Ok((
                    json!({
                        "holds": false,
                        "witness": serde_json::to_value(&witness).expect("serializable"),
                    }),
                    1,
                ))
            }
        }
        CheckCmd::Euler { graph } => {
            let g = load_any_underlying(ctx, graph)?;
            if g.is_eulerian() {
                ctx.line("eulerian: yes");
                Ok((json!({ "holds": true }), 0))
            } else {
                let odd: Vec<&str> = g
                    .labels()
                    .iter()
                    .filter(|l| g.degree(l).unwrap() % 2 == 1)
                    .map(|s| s.as_str())
                    .collect();
                if odd.is_empty() {
                    ctx.line("eulerian: no (edges span multiple components)");
                } else {
                    ctx.line(format!("eulerian: no (odd degrees at {})", odd.join(" ")));
                }
                Ok((json!({ "holds": false, "odd_vertices": odd }), 1))
            }
        }
    }
}

fn run_verify(what: &VerifyCmd, ctx: &mut Ctx) -> Result<(Value, u8), CliError> {
    match what {
        VerifyCmd::Counterexample { k, budget, graph } => {
            let g = load_undirected(ctx, graph)?;
            let rep = verify_counterexample(&g, *k, *budget);
            ctx.line(format!("eulerian: {}", rep.eulerian));
            ctx.line(format!("weakly_{}: {}", 2 * k, rep.weakly_2k.holds));
            let exit = match &rep.orientation_status {
                OrientationStatus::Found { .. } => {
                    ctx.line("orientation: found (not a counterexample)");
                    1
                }
                OrientationStatus::RefutedExhaustive => {
                    ctx.line("orientation: refuted (exhaustive search)");
                    if rep.weakly_2k.holds {
                        0
                    } else {
                        1
                    }
                }
                OrientationStatus::RefutedBySeparator { branches } => {
                    ctx.line(format!("orientation: refuted ({} branches)", branches.len()));
                    for b in branches {
                        ctx.line(format!("SEPARATOR {}", b.separator.join(" ")));
                    }
                    if rep.weakly_2k.holds {
                        0
                    } else {
                        1
                    }
                }
                OrientationStatus::Unknown { nodes_explored } => {
                    ctx.line(format!("orientation: unknown after {nodes_explored} nodes"));
                    3
                }
            };
            Ok((serde_json::to_value(&rep).expect("serializable report"), exit))
        }
        VerifyCmd::Reduction { k, naefile } => {
            let text = ctx.read(naefile)?;
            let pi = parse_nae(&text).map_err(|e| CliError::usage(format!("{e}")))?;
            if pi.variables().len() > 8 {
                return Err(CliError::usage(format!(
                    "{} variables exceed the exhaustive-check budget (8)",
                    pi.variables().len()
                )));
            }
            let rep = check_reduction_equivalence(&pi, *k)
                .map_err(|e| CliError::usage(format!("{e}")))?;
            ctx.line(format!(
                "equivalence: {} ({} of {} assignments NAE-satisfying, {} k-connected)",
                if rep.holds { "holds" } else { "fails" },
                rep.nae_satisfying,
                rep.assignments,
                rep.k_connected
            ));
            let exit = u8::from(!rep.holds);
            Ok((
                json!({
                    "holds": rep.holds,
                    "assignments": rep.assignments,
                    "nae_satisfying": rep.nae_satisfying,
                    "k_connected": rep.k_connected,
                }),
                exit,
            ))
        }
    }
}

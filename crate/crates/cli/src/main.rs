//! Batch front end: reads a graph file, runs one analysis, prints a report.
//!
//! Exit codes: 0 on success, 1 when the input violates a precondition (the
//! witness is printed), 2 on file or parse errors.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use twincut_core::dfs::{run_dfs, run_dfs_with_labels, DfsStructure};
use twincut_core::gen;
use twincut_core::graph::{parse, Digraph, ParsedGraph, UnGraph};
use twincut_core::oracle;
use twincut_core::twinless::{self, CutKind};
use twincut_core::{edge_cutpairs, vertex_cutpairs};

#[derive(Parser)]
#[command(name = "twincut", about = "Cut-pair counting and twinless strong connectivity", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Run the brute-force reference instead of the fast algorithms.
    #[arg(long, global = true)]
    oracle: bool,
    /// Run both implementations and fail on any difference.
    #[arg(long, global = true)]
    check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Twinless strong articulation points of a digraph.
    Tsap { input: String },
    /// Twinless strong bridges of a digraph.
    Tsb { input: String },
    /// Twinless strongly connected components of a digraph.
    Tscc { input: String },
    /// Vertex-edge cut-pair counts of a biconnected undirected graph.
    #[command(name = "cutpairs-v")]
    CutpairsV {
        input: String,
        /// Add the five per-case subtotals as extra columns.
        #[arg(long)]
        cases: bool,
    },
    /// Edge-edge cut-pair counts of a 2-edge-connected undirected graph.
    #[command(name = "cutpairs-e")]
    CutpairsE { input: String },
    /// Edges forming a vertex-edge cut-pair with the given vertex.
    #[command(name = "query-v")]
    QueryV { input: String, vertex: usize },
    /// Edges forming an edge-edge cut-pair with the edge (u, v).
    #[command(name = "query-e")]
    QueryE { input: String, u: usize, v: usize },
    /// DFS label table of a biconnected undirected graph.
    Labels { input: String },
    /// Generate an instance, run one analysis, print n, m and wall time.
    Bench {
        #[arg(value_enum)]
        analysis: BenchAnalysis,
        #[arg(long, default_value_t = 1 << 16)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = BenchFamily::Cycle)]
        family: BenchFamily,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchAnalysis {
    #[value(name = "cutpairs-v")]
    CutpairsV,
    #[value(name = "cutpairs-e")]
    CutpairsE,
    Tsap,
    Tsb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BenchFamily {
    Cycle,
    Random,
}

enum Failure {
    /// Precondition violation; the message names the witness.
    Precondition(String),
    /// Unreadable or unparseable input.
    Parse(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        let (msg, code) = match self {
            Failure::Precondition(m) => (m, 1),
            Failure::Parse(m) => (m, 2),
        };
        eprintln!("error: {msg}");
        ExitCode::from(code)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(f) => f.exit(),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if let Cmd::Bench {
        analysis,
        size,
        seed,
        family,
    } = &cli.cmd
    {
        return bench(*analysis, *size, *seed, *family, cli.format);
    }

    let fast = render(cli, false)?;
    if !cli.oracle && !cli.check {
        return Ok(fast);
    }
    let brute = render(cli, true)?;
    if cli.check {
        if fast == brute {
            return Ok(fast);
        }
        return Err(Failure::Precondition(format!(
            "check failed: fast and oracle outputs differ\n--- fast ---\n{fast}--- oracle ---\n{brute}"
        )));
    }
    Ok(brute)
}

fn load(path: &str) -> Result<ParsedGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {path}: {e}")))?;
    parse(&text).map_err(|e| Failure::Parse(format!("{path}: {e}")))
}

fn load_digraph(path: &str) -> Result<Digraph, Failure> {
    match load(path)? {
        ParsedGraph::Directed(g) => Ok(g),
        ParsedGraph::Undirected(_) => Err(Failure::Parse(format!(
            "{path}: expected a directed graph (header \"p d ...\")"
        ))),
    }
}

fn load_ungraph(path: &str) -> Result<UnGraph, Failure> {
    match load(path)? {
        ParsedGraph::Undirected(g) => Ok(g),
        ParsedGraph::Directed(_) => Err(Failure::Parse(format!(
            "{path}: expected an undirected graph (header \"p u ...\")"
        ))),
    }
}

fn precondition<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Precondition(e.to_string())
}

fn render(cli: &Cli, use_oracle: bool) -> Result<String, Failure> {
    match &cli.cmd {
        Cmd::Tsap { input } => tsap(&load_digraph(input)?, cli.format, use_oracle),
        Cmd::Tsb { input } => tsb(&load_digraph(input)?, cli.format, use_oracle),
        Cmd::Tscc { input } => Ok(tscc(&load_digraph(input)?, cli.format, use_oracle)),
        Cmd::CutpairsV { input, cases } => {
            cutpairs_v(&load_ungraph(input)?, cli.format, use_oracle, *cases)
        }
        Cmd::CutpairsE { input } => cutpairs_e(&load_ungraph(input)?, cli.format, use_oracle),
        Cmd::QueryV { input, vertex } => {
            query_v(&load_ungraph(input)?, *vertex, cli.format, use_oracle)
        }
        Cmd::QueryE { input, u, v } => {
            query_e(&load_ungraph(input)?, (*u, *v), cli.format, use_oracle)
        }
        Cmd::Labels { input } => labels(&load_ungraph(input)?, cli.format, use_oracle),
        Cmd::Bench { .. } => unreachable!("handled in run()"),
    }
}

fn tsap(g: &Digraph, format: Format, use_oracle: bool) -> Result<String, Failure> {
    let rows: Vec<twinless::TwinlessVertex> = if use_oracle {
        oracle_tsap_rows(g)?
    } else {
        twinless::twinless_strong_articulation_points(g).map_err(precondition)?
    };
    match format {
        Format::Json => Ok(json_line(&rows)),
        Format::Tsv => {
            let mut out = String::new();
            for r in rows {
                match r.tsccs_after_removal {
                    Some(k) => {
                        let _ = writeln!(out, "{}\t{}\t{}", r.vertex, kind_str(r.kind), k);
                    }
                    None => {
                        let _ = writeln!(out, "{}\t{}", r.vertex, kind_str(r.kind));
                    }
                }
            }
            Ok(out)
        }
    }
}

fn oracle_tsap_rows(g: &Digraph) -> Result<Vec<twinless::TwinlessVertex>, Failure> {
    ensure_twinless_sc_witness(g)?;
    let strong = oracle::oracle_strong_articulation_points(g);
    Ok(oracle::oracle_tsap(g)
        .into_iter()
        .map(|v| {
            if strong.contains(&v) {
                twinless::TwinlessVertex {
                    vertex: v,
                    kind: CutKind::Strong,
                    tsccs_after_removal: None,
                }
            } else {
                twinless::TwinlessVertex {
                    vertex: v,
                    kind: CutKind::TwinlessOnly,
                    tsccs_after_removal: Some(oracle::oracle_tscc_count_after_vertex(g, v)),
                }
            }
        })
        .collect())
}

fn tsb(g: &Digraph, format: Format, use_oracle: bool) -> Result<String, Failure> {
    let rows: Vec<twinless::TwinlessEdge> = if use_oracle {
        oracle_tsb_rows(g)?
    } else {
        twinless::twinless_strong_bridges(g).map_err(precondition)?
    };
    match format {
        Format::Json => Ok(json_line(&rows)),
        Format::Tsv => {
            let mut out = String::new();
            for r in rows {
                match r.tsccs_after_removal {
                    Some(k) => {
                        let _ = writeln!(
                            out,
                            "{}\t{}\t{}\t{}",
                            r.tail,
                            r.head,
                            kind_str(r.kind),
                            k
                        );
                    }
                    None => {
                        let _ = writeln!(out, "{}\t{}\t{}", r.tail, r.head, kind_str(r.kind));
                    }
                }
            }
            Ok(out)
        }
    }
}

fn oracle_tsb_rows(g: &Digraph) -> Result<Vec<twinless::TwinlessEdge>, Failure> {
    ensure_twinless_sc_witness(g)?;
    let strong = oracle::oracle_strong_bridges(g);
    Ok(oracle::oracle_tsb(g)
        .into_iter()
        .map(|e| {
            let (tail, head) = g.endpoints(e);
            if strong.contains(&e) {
                twinless::TwinlessEdge {
                    edge: e,
                    tail,
                    head,
                    kind: CutKind::Strong,
                    tsccs_after_removal: None,
                }
            } else {
                twinless::TwinlessEdge {
                    edge: e,
                    tail,
                    head,
                    kind: CutKind::TwinlessOnly,
                    tsccs_after_removal: Some(oracle::oracle_tscc_count_after_edge(g, e)),
                }
            }
        })
        .collect())
}

// shared precondition check so the oracle path reports the same witnesses
fn ensure_twinless_sc_witness(g: &Digraph) -> Result<(), Failure> {
    twinless::twinless_strong_articulation_points(g)
        .map(|_| ())
        .map_err(precondition)
}

fn tscc(g: &Digraph, format: Format, use_oracle: bool) -> String {
    let classes = if use_oracle {
        oracle::oracle_tsccs(g)
    } else {
        twinless::tsccs(g)
    };
    match format {
        Format::Json => json_line(&classes),
        Format::Tsv => {
            let mut class_of = vec![0usize; g.vertex_count()];
            for (i, c) in classes.iter().enumerate() {
                for &v in c {
                    class_of[v] = i;
                }
            }
            let mut out = String::new();
            for (v, c) in class_of.iter().enumerate() {
                let _ = writeln!(out, "{v}\t{c}");
            }
            out
        }
    }
}

fn cutpairs_v(
    g: &UnGraph,
    format: Format,
    use_oracle: bool,
    cases: bool,
) -> Result<String, Failure> {
    vertex_cutpairs::ensure_biconnected(g).map_err(precondition)?;
    if use_oracle {
        let counts: Vec<usize> = (0..g.vertex_count())
            .map(|v| oracle::oracle_count_v(g, v))
            .collect();
        return Ok(match format {
            Format::Json => json_line(
                &counts
                    .iter()
                    .enumerate()
                    .map(|(v, &count)| serde_json::json!({"vertex": v, "count": count}))
                    .collect::<Vec<_>>(),
            ),
            Format::Tsv => {
                let mut out = String::new();
                for (v, c) in counts.iter().enumerate() {
                    let _ = writeln!(out, "{v}\t{c}");
                }
                out
            }
        });
    }
    let rep = vertex_cutpairs::count_all(g).map_err(precondition)?;
    Ok(match format {
        Format::Json => {
            let rows: Vec<_> = (0..g.vertex_count())
                .map(|v| {
                    if cases {
                        serde_json::json!({
                            "vertex": v,
                            "count": rep.count(v),
                            "cases": rep.subtotals(v),
                        })
                    } else {
                        serde_json::json!({"vertex": v, "count": rep.count(v)})
                    }
                })
                .collect();
            json_line(&rows)
        }
        Format::Tsv => rep.to_tsv(cases),
    })
}

fn cutpairs_e(g: &UnGraph, format: Format, use_oracle: bool) -> Result<String, Failure> {
    edge_cutpairs::ensure_two_edge_connected(g).map_err(precondition)?;
    let counts: Vec<usize> = if use_oracle {
        (0..g.edge_count())
            .map(|e| oracle::oracle_count_e(g, e))
            .collect()
    } else {
        edge_cutpairs::count_all_edges(g)
            .map_err(precondition)?
            .counts()
            .to_vec()
    };
    Ok(match format {
        Format::Json => json_line(
            &counts
                .iter()
                .enumerate()
                .map(|(e, &count)| {
                    let (u, v) = g.endpoints(e);
                    serde_json::json!({"edge": e, "u": u, "v": v, "count": count})
                })
                .collect::<Vec<_>>(),
        ),
        Format::Tsv => {
            let mut out = String::new();
            for (e, c) in counts.iter().enumerate() {
                let (u, v) = g.endpoints(e);
                let _ = writeln!(out, "{u}\t{v}\t{c}");
            }
            out
        }
    })
}

fn query_v(g: &UnGraph, vertex: usize, format: Format, use_oracle: bool) -> Result<String, Failure> {
    vertex_cutpairs::ensure_biconnected(g).map_err(precondition)?;
    if vertex >= g.vertex_count() {
        return Err(Failure::Precondition(format!(
            "vertex {vertex} out of range (graph has {} vertices)",
            g.vertex_count()
        )));
    }
    let mut edges = if use_oracle {
        oracle::oracle_cut_edges_v(g, vertex)
    } else {
        vertex_cutpairs::count_all(g)
            .map_err(precondition)?
            .query_cut_edges(vertex)
    };
    edges.sort_unstable();
    Ok(edge_list(g, &edges, format))
}

fn query_e(g: &UnGraph, ends: (usize, usize), format: Format, use_oracle: bool) -> Result<String, Failure> {
    edge_cutpairs::ensure_two_edge_connected(g).map_err(precondition)?;
    let key = (ends.0.min(ends.1), ends.0.max(ends.1));
    let e = g
        .edges()
        .iter()
        .position(|&(a, b)| (a.min(b), a.max(b)) == key)
        .ok_or_else(|| {
            Failure::Precondition(format!("no edge ({}, {}) in the graph", ends.0, ends.1))
        })?;
    let mut edges = if use_oracle {
        oracle::oracle_cut_edges_e(g, e)
    } else {
        edge_cutpairs::count_all_edges(g)
            .map_err(precondition)?
            .query_cut_edges_for_edge(e)
            .map_err(precondition)?
    };
    edges.sort_unstable();
    Ok(edge_list(g, &edges, format))
}

fn edge_list(g: &UnGraph, edges: &[usize], format: Format) -> String {
    match format {
        Format::Json => json_line(
            &edges
                .iter()
                .map(|&e| {
                    let (u, v) = g.endpoints(e);
                    serde_json::json!({"edge": e, "u": u, "v": v})
                })
                .collect::<Vec<_>>(),
        ),
        Format::Tsv => {
            let mut out = String::new();
            for &e in edges {
                let (u, v) = g.endpoints(e);
                let _ = writeln!(out, "{u}\t{v}");
            }
            out
        }
    }
}

fn labels(g: &UnGraph, format: Format, use_oracle: bool) -> Result<String, Failure> {
    vertex_cutpairs::ensure_biconnected(g).map_err(precondition)?;
    let d = if use_oracle {
        let mut d = run_dfs(g, 0).map_err(precondition)?;
        d.compute_b_counts();
        d.high = oracle::naive_high(&d);
        d.high_p = oracle::naive_high_p(&d);
        d.m = oracle::naive_m(&d);
        d.m_p = oracle::naive_m_p(&d);
        d
    } else {
        run_dfs_with_labels(g, 0).map_err(precondition)?
    };
    Ok(match format {
        Format::Json => labels_json(&d),
        Format::Tsv => {
            let mut out = String::from("# columns: v p low l high high_p M M_p (preorder ids)\n");
            for v in 0..d.n {
                let _ = writeln!(out, "# preorder {} = input {}", v, d.to_input[v]);
            }
            out.push_str(&d.dump_labels());
            out
        }
    })
}

fn labels_json(d: &DfsStructure) -> String {
    let rows: Vec<_> = (0..d.n)
        .map(|v| {
            serde_json::json!({
                "v": v,
                "input": d.to_input[v],
                "parent": if v == 0 { None } else { Some(d.parent[v]) },
                "low": d.low[v],
                "l": d.l[v],
                "high": d.high[v],
                "high_p": d.high_p[v],
                "m": d.m[v],
                "m_p": d.m_p[v],
            })
        })
        .collect();
    json_line(&rows)
}

fn feasible<T>(r: Result<T, gen::GenError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Precondition(e.to_string()))
}

fn bench(
    analysis: BenchAnalysis,
    size: usize,
    seed: u64,
    family: BenchFamily,
    format: Format,
) -> Result<String, Failure> {
    let (n, m, elapsed) = match analysis {
        BenchAnalysis::CutpairsV => {
            let g = match family {
                BenchFamily::Cycle => gen::gen_cycle(size),
                BenchFamily::Random => feasible(gen::gen_random_2vc(size, 2 * size, seed))?,
            };
            let t = Instant::now();
            let rep = vertex_cutpairs::count_all(&g).map_err(precondition)?;
            let elapsed = t.elapsed();
            std::hint::black_box(rep.count(0));
            (g.vertex_count(), g.edge_count(), elapsed)
        }
        BenchAnalysis::CutpairsE => {
            let g = match family {
                BenchFamily::Cycle => gen::gen_cycle(size),
                BenchFamily::Random => feasible(gen::gen_random_2ec(size, 2 * size, seed))?,
            };
            let t = Instant::now();
            let rep = edge_cutpairs::count_all_edges(&g).map_err(precondition)?;
            let elapsed = t.elapsed();
            std::hint::black_box(rep.count(0));
            (g.vertex_count(), g.edge_count(), elapsed)
        }
        BenchAnalysis::Tsap | BenchAnalysis::Tsb => {
            let g = match family {
                BenchFamily::Cycle => gen::bidirect(&gen::gen_cycle(size)),
                BenchFamily::Random => feasible(gen::gen_random_twinless_sc(size, 2 * size, seed))?,
            };
            let t = Instant::now();
            let len = if analysis == BenchAnalysis::Tsap {
                twinless::twinless_strong_articulation_points(&g)
                    .map_err(precondition)?
                    .len()
            } else {
                twinless::twinless_strong_bridges(&g).map_err(precondition)?.len()
            };
            let elapsed = t.elapsed();
            std::hint::black_box(len);
            (g.vertex_count(), g.edge_count(), elapsed)
        }
    };
    let ms = elapsed.as_secs_f64() * 1e3;
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::json!({"n": n, "m": m, "ms": ms})),
        Format::Tsv => format!("{}\t{}\t{:.3}\n", n, m, ms),
    })
}

fn kind_str(k: CutKind) -> &'static str {
    match k {
        CutKind::Strong => "strong",
        CutKind::TwinlessOnly => "twinless-only",
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

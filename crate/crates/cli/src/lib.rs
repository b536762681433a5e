//! Command-line front end: every subcommand reads graphs (edge-list or
//! graph6, `-` for stdin), prints a human-readable verdict or a `--json`
//! report, and exits with 0 when the queried property holds, 1 on a clean
//! mathematical negative, and 2 on usage or input errors.

use std::collections::BTreeMap;
use std::io::Read;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use po_core::catalog::{self, MinorGuard};
use po_core::cobipartite::{self, find_clique_bipartition};
use po_core::cograph;
use po_core::cover::{self, CoverMode};
use po_core::error::Error;
use po_core::format::{self, GraphFormat};
use po_core::graph::{Graph, TwoBranch};
use po_core::oracle;
use po_core::orientation::Orientation;
use po_core::recognition::recognize;
use po_core::transforms;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser)]
#[command(
    name = "po",
    about = "Recognize, certify, construct and refute 1-perfectly orientable graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Input graph format.
    #[arg(long, global = true, default_value = "edgelist")]
    format: String,
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Write the witness (orientation / cover / graph) to a file.
    #[arg(long, global = true)]
    out: Option<String>,
    /// Edge guard for the exhaustive oracle searches.
    #[arg(long, global = true, default_value_t = oracle::DEFAULT_EDGE_GUARD)]
    guard: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial recognition: is the graph 1-perfectly orientable?
    Recognize {
        graph: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Recognition that insists on emitting a witness orientation.
    Orient {
        graph: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Check that an orientation file is a 1-perfect orientation of a graph.
    Verify {
        graph: String,
        orientation: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Produce the vertex-indexed edge clique cover of a witness orientation.
    Cover {
        graph: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Rebuild and verify an orientation from a cover file.
    FromCover {
        graph: String,
        cover: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Apply a closure transform, emitting the transformed graph.
    Transform {
        /// union | universal | twin | simplicial | dup2branch | contract | join
        #[arg(long)]
        op: String,
        operands: Vec<String>,
        /// Vertex argument (twin).
        #[arg(long)]
        vertex: Option<usize>,
        /// Clique argument, space-separated (simplicial).
        #[arg(long)]
        set: Option<String>,
        /// 2-branch "a b c" in the complement (dup2branch).
        #[arg(long)]
        branch: Option<String>,
        /// Edge "u v" (contract).
        #[arg(long)]
        edge: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Three-way co-bipartite equivalence report.
    Cobip {
        graph: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Cotree and the three cograph conditions.
    Cograph {
        graph: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Forbidden-minor catalog: list, emit or verify minimality.
    Catalog {
        #[arg(long)]
        list: bool,
        #[arg(long)]
        emit: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_name = "GRAPH")]
        verify_minimal: Option<String>,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Exhaustive orientation search (guarded).
    Oracle {
        graph: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Induced-minor containment: does HOST contain PATTERN?
    ContainsMinor {
        host: String,
        pattern: String,
        #[arg(long, default_value_t = 6)]
        max_pattern: usize,
        #[arg(long, default_value_t = 12)]
        max_host: usize,
        #[command(flatten)]
        opts: CommonOpts,
    },
}

/// Accumulated verdicts, witnesses and timings, emitted with `--json`.
#[derive(Serialize, Default)]
pub struct Report {
    verdicts: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    witnesses: BTreeMap<String, String>,
    timings_ms: BTreeMap<String, u128>,
}

impl Report {
    fn verdict(&mut self, name: &str, value: bool) {
        self.verdicts.insert(name.to_string(), value);
    }
    fn witness(&mut self, name: &str, value: String) {
        self.witnesses.insert(name.to_string(), value);
    }
    fn time(&mut self, name: &str, start: Instant) {
        self.timings_ms
            .insert(name.to_string(), start.elapsed().as_millis());
    }
}

struct Ctx {
    format: GraphFormat,
    json: bool,
    out: Option<String>,
    guard: usize,
    report: Report,
}

impl Ctx {
    fn new(opts: &CommonOpts) -> Result<Self, Error> {
        Ok(Ctx {
            format: opts.format.parse()?,
            json: opts.json,
            out: opts.out.clone(),
            guard: opts.guard,
            report: Report::default(),
        })
    }

    fn read_graph(&self, path: &str) -> Result<Graph, String> {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?
        };
        format::parse_graph(&text, self.format).map_err(|e| format!("{path}: {e}"))
    }

    fn read_text(&self, path: &str) -> Result<String, String> {
        if path == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(buf)
        } else {
            std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
        }
    }

    /// Witnesses re-validate before being written anywhere.
    fn emit_witness(&mut self, label: &str, content: String) -> Result<(), String> {
        if let Some(path) = &self.out {
            std::fs::write(path, &content).map_err(|e| format!("{path}: {e}"))?;
        }
        self.report.witness(label, content);
        Ok(())
    }

    fn finish(self, human: &str, code: i32) -> i32 {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&self.report).expect("report serializes")
            );
        } else {
            println!("{human}");
        }
        code
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version with success exits.
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, String> {
    match cmd {
        Command::Recognize { graph, opts } | Command::Orient { graph, opts } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            let g = ctx.read_graph(&graph)?;
            let start = Instant::now();
            let witness = recognize(&g);
            ctx.report.time("recognize", start);
            ctx.report
                .verdict("one_perfectly_orientable", witness.is_some());
            match witness {
                Some(d) => {
                    assert!(d.is_one_perfect(), "emitted witness must re-validate");
                    ctx.emit_witness("orientation", format::write_orientation(&d))?;
                    Ok(ctx.finish("1-perfectly orientable", EXIT_HOLDS))
                }
                None => Ok(ctx.finish("not 1-perfectly orientable", EXIT_REFUTED)),
            }
        }
        Command::Verify {
            graph,
            orientation,
            opts,
        } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            let g = ctx.read_graph(&graph)?;
            let text = ctx.read_text(&orientation)?;
            let d = format::parse_orientation(&text, &g).map_err(|e| e.to_string())?;
            let ok = d.is_one_perfect();
            ctx.report.verdict("one_perfect", ok);
            if ok {
                Ok(ctx.finish("orientation is 1-perfect", EXIT_HOLDS))
            } else {
                Ok(ctx.finish("orientation is not 1-perfect", EXIT_REFUTED))
            }
        }
        Command::Cover { graph, opts } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            let g = ctx.read_graph(&graph)?;
            let start = Instant::now();
            let Some(d) = recognize(&g) else {
                ctx.report.verdict("one_perfectly_orientable", false);
                return Ok(ctx.finish("not 1-perfectly orientable", EXIT_REFUTED));
            };
            let cov = cover::cover_from_orientation(&d).map_err(|e| e.to_string())?;
            ctx.report.time("cover", start);
            assert_eq!(
                cover::validate_cover(&g, &cov, CoverMode::Exclusive),
                Ok(true),
                "emitted cover must re-validate"
            );
            ctx.report.verdict("one_perfectly_orientable", true);
            ctx.emit_witness("cover", format::write_cover(&cov))?;
            Ok(ctx.finish("edge clique cover emitted", EXIT_HOLDS))
        }
        Command::FromCover { graph, cover, opts } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            let g = ctx.read_graph(&graph)?;
            let text = ctx.read_text(&cover)?;
            let cov = format::parse_cover(&text, g.n()).map_err(|e| e.to_string())?;
            match cover::orientation_from_cover(&g, &cov) {
                Ok(d) => {
                    assert!(d.is_one_perfect());
                    ctx.report.verdict("cover_valid", true);
                    ctx.emit_witness("orientation", format::write_orientation(&d))?;
                    Ok(ctx.finish("cover valid; orientation emitted", EXIT_HOLDS))
                }
                Err(Error::InvalidCover(msg)) => {
                    ctx.report.verdict("cover_valid", false);
                    Ok(ctx.finish(&format!("invalid cover: {msg}"), EXIT_REFUTED))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Transform {
            op,
            operands,
            vertex,
            set,
            branch,
            edge,
            opts,
        } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            let (g, d) = run_transform(&ctx, &op, &operands, vertex, set, branch, edge)?;
            ctx.report.verdict("transformed_one_perfect", true);
            if let Some(d) = &d {
                assert!(d.is_one_perfect());
                ctx.report
                    .witness("orientation", format::write_orientation(d));
            }
            let graph_text = format::write_graph(&g, ctx.format);
            ctx.emit_witness("graph", graph_text.clone())?;
            if ctx.json {
                Ok(ctx.finish("", EXIT_HOLDS))
            } else {
                print!("{graph_text}");
                Ok(EXIT_HOLDS)
            }
        }
        Command::Cobip { graph, opts } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            let g = ctx.read_graph(&graph)?;
            let start = Instant::now();
            match cobipartite::cobipartite_equivalence(&g, ctx.guard) {
                Ok(report) => {
                    ctx.report.time("cobip", start);
                    ctx.report.verdict("is_one_po", report.is_one_po);
                    ctx.report.verdict(
                        "has_c4_cyclic_orientation",
                        report.has_c4_cyclic_orientation,
                    );
                    ctx.report
                        .verdict("has_good_coloring", report.has_good_coloring);
                    let code = if report.is_one_po {
                        EXIT_HOLDS
                    } else {
                        EXIT_REFUTED
                    };
                    Ok(ctx.finish(
                        &format!(
                            "1-p.o.: {}; all-C4-cyclic orientation: {}; good coloring: {}",
                            report.is_one_po,
                            report.has_c4_cyclic_orientation,
                            report.has_good_coloring
                        ),
                        code,
                    ))
                }
                Err(Error::NotCobipartite) => {
                    ctx.report.verdict("cobipartite", false);
                    Ok(ctx.finish("graph is not co-bipartite", EXIT_REFUTED))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Cograph { graph, opts } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            let g = ctx.read_graph(&graph)?;
            match cograph::build_cotree(&g) {
                Ok(tree) => {
                    let report = cograph::cograph_report(&g).map_err(|e| e.to_string())?;
                    assert!(report.agree(), "cograph conditions must agree: {report:?}");
                    ctx.report.verdict("cograph", true);
                    ctx.report.verdict("is_one_po", report.is_one_po);
                    ctx.report.verdict("k23_free", report.k23_free);
                    ctx.report.verdict("structural", report.structural);
                    ctx.report.witness("cotree", tree.to_sexpr());
                    Ok(ctx.finish(
                        &format!(
                            "cotree: {}\n1-p.o.: {}; K_2,3-free: {}; structural: {}",
                            tree.to_sexpr(),
                            report.is_one_po,
                            report.k23_free,
                            report.structural
                        ),
                        EXIT_HOLDS,
                    ))
                }
                Err(witness) => {
                    ctx.report.verdict("cograph", false);
                    ctx.report.witness("induced_p4", format!("{:?}", witness.0));
                    Ok(ctx.finish(
                        &format!("not a cograph: induced P4 {:?}", witness.0),
                        EXIT_REFUTED,
                    ))
                }
            }
        }
        Command::Catalog {
            list,
            emit,
            k,
            verify_minimal,
            opts,
        } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            if list {
                println!("F1        bundled   6 vertices, triangle-free");
                println!("F2        bundled   7 vertices, triangle-free");
                println!("F3 --k K  generated complement of C_2K (K >= 3)");
                println!("F4 --k K  generated complement of K_2 + C_2K+1 (K >= 1)");
                for name in catalog::bundled_names().iter().skip(2) {
                    let entry = catalog::load_bundled(name).map_err(|e| e.to_string())?;
                    println!(
                        "{name:<9} bundled   {} vertices, co-bipartite",
                        entry.graph.n()
                    );
                }
                return Ok(EXIT_HOLDS);
            }
            if let Some(name) = emit {
                let entry = catalog::emit(&name, k).map_err(|e| e.to_string())?;
                let text = format::write_graph(&entry.graph, ctx.format);
                if let Some(path) = &ctx.out {
                    std::fs::write(path, &text).map_err(|e| format!("{path}: {e}"))?;
                } else {
                    print!("{text}");
                }
                return Ok(EXIT_HOLDS);
            }
            if let Some(path) = verify_minimal {
                let g = ctx.read_graph(&path)?;
                let report = catalog::verify_minimal_forbidden(&g);
                ctx.report
                    .verdict("minimal_forbidden", report.is_minimal_forbidden());
                ctx.report.verdict("parent_one_po", report.parent_one_po);
                for (v, po) in &report.deletions {
                    ctx.report.verdict(&format!("delete_{v}"), *po);
                }
                for ((u, v), po) in &report.contractions {
                    ctx.report.verdict(&format!("contract_{u}_{v}"), *po);
                }
                let code = if report.is_minimal_forbidden() {
                    EXIT_HOLDS
                } else {
                    EXIT_REFUTED
                };
                let human = if report.is_minimal_forbidden() {
                    "minimal forbidden induced minor".to_string()
                } else if report.parent_one_po {
                    "not forbidden: the graph itself is 1-p.o.".to_string()
                } else {
                    "forbidden but not minimal".to_string()
                };
                return Ok(ctx.finish(&human, code));
            }
            Err("catalog: use --list, --emit NAME or --verify-minimal GRAPH".into())
        }
        Command::Oracle { graph, opts } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            let g = ctx.read_graph(&graph)?;
            let start = Instant::now();
            let witness = oracle::is_one_po_bruteforce(&g, ctx.guard).map_err(|e| e.to_string())?;
            ctx.report.time("oracle", start);
            ctx.report
                .verdict("one_perfectly_orientable", witness.is_some());
            match witness {
                Some(d) => {
                    assert!(d.is_one_perfect());
                    ctx.emit_witness("orientation", format::write_orientation(&d))?;
                    Ok(ctx.finish("1-perfectly orientable (oracle)", EXIT_HOLDS))
                }
                None => Ok(ctx.finish("not 1-perfectly orientable (oracle)", EXIT_REFUTED)),
            }
        }
        Command::ContainsMinor {
            host,
            pattern,
            max_pattern,
            max_host,
            opts,
        } => {
            let mut ctx = Ctx::new(&opts).map_err(|e| e.to_string())?;
            let g = ctx.read_graph(&host)?;
            let h = ctx.read_graph(&pattern)?;
            let guard = MinorGuard {
                max_pattern,
                max_host,
            };
            let witness =
                catalog::contains_induced_minor(&g, &h, guard).map_err(|e| e.to_string())?;
            ctx.report
                .verdict("contains_induced_minor", witness.is_some());
            match witness {
                Some(parts) => {
                    ctx.report.witness("branch_sets", format!("{parts:?}"));
                    Ok(ctx.finish(&format!("induced minor found: {parts:?}"), EXIT_HOLDS))
                }
                None => Ok(ctx.finish("not an induced minor", EXIT_REFUTED)),
            }
        }
    }
}

type TransformOutput = (Graph, Option<Orientation>);

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("bad vertex {t:?}")))
        .collect()
}

fn witness_for(g: &Graph, which: &str) -> Result<Orientation, String> {
    recognize(g).ok_or_else(|| format!("{which} operand is not 1-perfectly orientable"))
}

fn run_transform(
    ctx: &Ctx,
    op: &str,
    operands: &[String],
    vertex: Option<usize>,
    set: Option<String>,
    branch: Option<String>,
    edge: Option<String>,
) -> Result<TransformOutput, String> {
    let need = |k: usize| -> Result<(), String> {
        if operands.len() == k {
            Ok(())
        } else {
            Err(format!("--op {op} takes {k} graph operand(s)"))
        }
    };
    match op {
        "union" => {
            need(2)?;
            let g1 = ctx.read_graph(&operands[0])?;
            let g2 = ctx.read_graph(&operands[1])?;
            let d = transforms::orient_disjoint_union(
                &witness_for(&g1, "first")?,
                &witness_for(&g2, "second")?,
            )
            .map_err(|e| e.to_string())?;
            Ok((d.base().clone(), Some(d)))
        }
        "universal" => {
            need(1)?;
            let g = ctx.read_graph(&operands[0])?;
            let d = transforms::orient_add_universal(&witness_for(&g, "the")?)
                .map_err(|e| e.to_string())?;
            Ok((d.base().clone(), Some(d)))
        }
        "twin" => {
            need(1)?;
            let w = vertex.ok_or("--op twin requires --vertex W")?;
            let g = ctx.read_graph(&operands[0])?;
            let d = transforms::orient_add_true_twin(&witness_for(&g, "the")?, w)
                .map_err(|e| e.to_string())?;
            Ok((d.base().clone(), Some(d)))
        }
        "simplicial" => {
            need(1)?;
            let s = parse_list(&set.ok_or("--op simplicial requires --set \"v1 v2 ...\"")?)?;
            let g = ctx.read_graph(&operands[0])?;
            let d = transforms::orient_add_simplicial(&witness_for(&g, "the")?, &s)
                .map_err(|e| e.to_string())?;
            Ok((d.base().clone(), Some(d)))
        }
        "dup2branch" => {
            need(1)?;
            let br = parse_list(&branch.ok_or("--op dup2branch requires --branch \"a b c\"")?)?;
            if br.len() != 3 {
                return Err("--branch takes exactly three vertices".into());
            }
            let g = ctx.read_graph(&operands[0])?;
            let (h, d) = transforms::duplicate_two_branch_in_complement(
                &g,
                TwoBranch {
                    a: br[0],
                    b: br[1],
                    c: br[2],
                },
            )
            .map_err(|e| e.to_string())?;
            Ok((h, Some(d)))
        }
        "contract" => {
            need(1)?;
            let e = parse_list(&edge.ok_or("--op contract requires --edge \"u v\"")?)?;
            if e.len() != 2 {
                return Err("--edge takes exactly two vertices".into());
            }
            let g = ctx.read_graph(&operands[0])?;
            let d = transforms::orient_contract_edge(&witness_for(&g, "the")?, (e[0], e[1]))
                .map_err(|e| e.to_string())?;
            Ok((d.base().clone(), Some(d)))
        }
        "join" => {
            need(2)?;
            let g1 = ctx.read_graph(&operands[0])?;
            let g2 = ctx.read_graph(&operands[1])?;
            if !transforms::join_is_one_po(&g1, &g2) {
                return Err("join of these operands is not 1-perfectly orientable".into());
            }
            // A complete operand is a trivial clique bipartition, so the
            // co-bipartite construction covers both cases of the theorem.
            let p1 = find_clique_bipartition(&g1).ok_or("first operand is not co-bipartite")?;
            let p2 = find_clique_bipartition(&g2).ok_or("second operand is not co-bipartite")?;
            let d = transforms::orient_join(
                &witness_for(&g1, "first")?,
                &witness_for(&g2, "second")?,
                &p1,
                &p2,
            )
            .map_err(|e| e.to_string())?;
            Ok((d.base().clone(), Some(d)))
        }
        other => Err(format!("unknown transform {other:?}")),
    }
}

//! Subcommand definitions and dispatch.
//!
//! Exit codes: 0 for success or an affirmative answer, 1 for a negative
//! answer, 2 for input errors, 3 when a search budget runs out.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use pushcore::equiv::{
    count_push_classes, decide_push_equivalent, enumerate_push_classes, is_push_invariant,
    PushDecision,
};
use pushcore::graph::OrderedClosedWalk;
use pushcore::homo::{
    check_pushable_hom, check_switchable_hom, search_pushable_hom_with_budget,
    search_switchable_hom_with_budget, DEFAULT_NODE_BUDGET,
};
use pushcore::reductions::{
    build_gadget, build_k_star, build_s_graph, verify_coloring_reduction_with_budget,
    verify_critical_with_budget, GadgetMap,
};
use pushcore::signed::{decide_switch_equivalent, to_oriented, to_signed, SwitchDecision};
use pushcore::{Bipartition, Error, OrientedGraph, SignedGraph, VertexSet};

use crate::dot;
use crate::format;

/// `println!` that dies quietly (like a signalled process) instead of
/// panicking when the consumer closes the pipe, e.g. under `| head`.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(141);
        }
    }};
}

/// [`say!`] without the trailing newline, for pre-formatted blocks.
macro_rules! emit {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if write!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(141);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "pushkit",
    version,
    about = "Push and switch calculus on oriented and signed graphs",
    after_help = "Graph files are text: a `graph|oriented|signed <vertices> <edges>` header \
                  followed by one `u v` (or `u v +|-`) line per edge; `#` starts a comment.\n\
                  PUSHKIT_BUDGET overrides the default homomorphism search budget."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Reverse every arc crossing a vertex set's cut
    Push {
        graph: PathBuf,
        /// Comma-separated vertices, e.g. `0,2` (empty for the empty set)
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        set: String,
        /// Emit Graphviz DOT instead of the text format
        #[arg(long)]
        dot: bool,
    },
    /// List the arcs crossing a vertex set's cut
    Cut {
        graph: PathBuf,
        #[arg(long, value_name = "LIST")]
        set: String,
    },
    /// Classify an ordered closed walk by length and forward parity
    ClassifyWalk {
        graph: PathBuf,
        /// Comma-separated vertices; the closing step back is implied
        #[arg(long, value_name = "LIST")]
        walk: String,
    },
    /// Report whether an even closed walk is balanced
    Balance {
        graph: PathBuf,
        #[arg(long, value_name = "LIST")]
        walk: String,
    },
    /// Decide push equivalence of two orientations
    Equiv { left: PathBuf, right: PathBuf },
    /// Count push classes of a graph's orientations
    Classes {
        graph: PathBuf,
        /// Also list one canonical representative per class
        #[arg(long)]
        enumerate: bool,
    },
    /// Test whether an orientation is isomorphic to all of its pushes
    Invariant { graph: PathBuf },
    /// Translate a bipartite orientation to its signed associate
    ToSigned {
        graph: PathBuf,
        /// File with a comma-separated list of part-A vertices;
        /// derived from the graph when omitted
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        dot: bool,
    },
    /// Translate a bipartite signed graph to its oriented associate
    ToOriented {
        graph: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        dot: bool,
    },
    /// Decide switch equivalence of two signed graphs
    Sequiv { left: PathBuf, right: PathBuf },
    /// Check one explicit mapping for pushable/switchable homomorphism
    HomCheck {
        source: PathBuf,
        target: PathBuf,
        /// CSV file of `source,target` vertex pairs, one per line
        #[arg(long)]
        map: PathBuf,
    },
    /// Search for the least pushable/switchable homomorphism
    HomSearch {
        source: PathBuf,
        target: PathBuf,
        /// Node budget (default 10^7, or PUSHKIT_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Replace each edge by the two-path coloring gadget
    Gadget {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        /// Write the edge-to-paths map as JSON to this file
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        dot: bool,
    },
    /// Replace each edge by an unbalanced square
    SGraph {
        graph: PathBuf,
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        dot: bool,
    },
    /// Print the matching-vs-rest orientation of K_{k,k}
    KStar {
        k: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Check the coloring/homomorphism biconditional for the gadget
    VerifyReduction {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check arc-criticality of one oriented graph against another
    VerifyCritical {
        graph: PathBuf,
        target: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print the girth (or the least unbalanced cycle length)
    Girth {
        graph: PathBuf,
        #[arg(long)]
        unbalanced: bool,
    },
}

#[derive(Debug)]
pub enum AppError {
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    Parse {
        path: PathBuf,
        error: format::ParseError,
    },
    Input(String),
    Budget(u64),
}

impl AppError {
    pub fn code(&self) -> i32 {
        match self {
            AppError::Budget(_) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            AppError::Parse { path, error } => write!(f, "{}: {error}", path.display()),
            AppError::Input(msg) => f.write_str(msg),
            AppError::Budget(budget) => write!(f, "search budget exhausted ({budget} nodes)"),
        }
    }
}

fn lib_err(e: Error) -> AppError {
    match e {
        Error::BudgetExceeded { budget } => AppError::Budget(budget),
        other => AppError::Input(other.to_string()),
    }
}

fn read_file(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path).map_err(|source| AppError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_oriented(path: &Path) -> Result<OrientedGraph, AppError> {
    format::parse_oriented(&read_file(path)?).map_err(|error| AppError::Parse {
        path: path.to_path_buf(),
        error,
    })
}

fn read_signed(path: &Path) -> Result<SignedGraph, AppError> {
    format::parse_signed(&read_file(path)?).map_err(|error| AppError::Parse {
        path: path.to_path_buf(),
        error,
    })
}

fn read_graph(path: &Path) -> Result<pushcore::SimpleGraph, AppError> {
    format::parse_graph(&read_file(path)?).map_err(|error| AppError::Parse {
        path: path.to_path_buf(),
        error,
    })
}

fn vertex_set(list: &str) -> Result<VertexSet, AppError> {
    let mut set = VertexSet::new();
    for v in format::parse_vertex_list(list).map_err(AppError::Input)? {
        set.insert(v);
    }
    Ok(set)
}

fn walk(list: &str) -> Result<OrderedClosedWalk, AppError> {
    let vertices = format::parse_vertex_list(list).map_err(AppError::Input)?;
    OrderedClosedWalk::new(vertices).map_err(lib_err)
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, AppError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("PUSHKIT_BUDGET") {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            AppError::Input(format!("PUSHKIT_BUDGET must be an integer, got `{raw}`"))
        }),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn read_partition(
    path: &Option<PathBuf>,
    n: usize,
    derived: Option<Bipartition>,
) -> Result<Bipartition, AppError> {
    match path {
        Some(p) => {
            let text = read_file(p)?;
            let cleaned: String = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or(""))
                .collect::<Vec<_>>()
                .join(",");
            let mut part_a = VertexSet::new();
            for v in format::parse_vertex_list(&cleaned).map_err(AppError::Input)? {
                part_a.insert(v);
            }
            Bipartition::from_part_a(n, &part_a).map_err(lib_err)
        }
        None => derived
            .ok_or_else(|| AppError::Input("graph is not bipartite; provide --partition".into())),
    }
}

fn write_map_json(path: &Path, map: &GadgetMap) -> Result<(), AppError> {
    let mut edges = serde_json::Map::new();
    for entry in &map.paths {
        let key = format!("{}-{}", entry.edge.0, entry.edge.1);
        edges.insert(
            key,
            serde_json::json!({ "even": entry.even_path, "odd": entry.odd_path }),
        );
    }
    let doc = serde_json::json!({
        "original_count": map.original_count,
        "edges": edges,
    });
    let text = format!("{:#}\n", doc);
    fs::write(path, text).map_err(|source| AppError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Runs one subcommand, printing its output, and returns the exit code.
pub fn run(cli: Cli) -> Result<i32, AppError> {
    match cli.command {
        Command::Push {
            graph,
            set,
            dot: as_dot,
        } => {
            let g = read_oriented(&graph)?;
            let pushed = g.push(&vertex_set(&set)?).map_err(lib_err)?;
            print_oriented(&pushed, as_dot);
            Ok(0)
        }
        Command::Cut { graph, set } => {
            let g = read_oriented(&graph)?;
            for (u, v) in g.cut_arcs(&vertex_set(&set)?).map_err(lib_err)? {
                say!("{u} {v}");
            }
            Ok(0)
        }
        Command::ClassifyWalk { graph, walk: w } => {
            let g = read_oriented(&graph)?;
            let class = g.classify_walk(&walk(&w)?).map_err(lib_err)?;
            say!("{class}");
            Ok(0)
        }
        Command::Balance { graph, walk: w } => {
            let g = read_oriented(&graph)?;
            let balance = g.balance_of_walk(&walk(&w)?).map_err(lib_err)?;
            say!("{balance}");
            Ok(0)
        }
        Command::Equiv { left, right } => {
            let g1 = read_oriented(&left)?;
            let g2 = read_oriented(&right)?;
            match decide_push_equivalent(&g1, &g2).map_err(lib_err)? {
                PushDecision::Equivalent(set) => {
                    say!("EQUIVALENT {set}");
                    Ok(0)
                }
                PushDecision::DifferentUnderlying => {
                    say!("DIFFERENT-UNDERLYING");
                    Ok(1)
                }
                PushDecision::Mismatch { edge: (u, v) } => {
                    say!("NOT-EQUIVALENT mismatch at edge ({u}, {v})");
                    Ok(1)
                }
            }
        }
        Command::Classes { graph, enumerate } => {
            let g = read_graph(&graph)?;
            say!("{}", count_push_classes(&g));
            if enumerate {
                for rep in enumerate_push_classes(&g).map_err(lib_err)? {
                    say!("{}", format::oriented_line(&rep));
                }
            }
            Ok(0)
        }
        Command::Invariant { graph } => {
            let g = read_oriented(&graph)?;
            if is_push_invariant(&g).map_err(lib_err)? {
                say!("INVARIANT");
                Ok(0)
            } else {
                say!("NOT-INVARIANT");
                Ok(1)
            }
        }
        Command::ToSigned {
            graph,
            partition,
            dot: as_dot,
        } => {
            let g = read_oriented(&graph)?;
            let p = read_partition(&partition, g.vertex_count(), g.underlying_bipartition())?;
            let sg = to_signed(&g, &p).map_err(lib_err)?;
            if as_dot {
                emit!("{}", dot::signed_dot(&sg));
            } else {
                emit!("{}", format::write_signed(&sg));
            }
            Ok(0)
        }
        Command::ToOriented {
            graph,
            partition,
            dot: as_dot,
        } => {
            let sg = read_signed(&graph)?;
            let p = read_partition(&partition, sg.vertex_count(), sg.underlying().bipartition())?;
            let g = to_oriented(&sg, &p).map_err(lib_err)?;
            print_oriented(&g, as_dot);
            Ok(0)
        }
        Command::Sequiv { left, right } => {
            let s1 = read_signed(&left)?;
            let s2 = read_signed(&right)?;
            match decide_switch_equivalent(&s1, &s2).map_err(lib_err)? {
                SwitchDecision::Equivalent(set) => {
                    say!("EQUIVALENT {set}");
                    Ok(0)
                }
                SwitchDecision::DifferentUnderlying => {
                    say!("DIFFERENT-UNDERLYING");
                    Ok(1)
                }
                SwitchDecision::Mismatch { edge: (u, v) } => {
                    say!("NOT-EQUIVALENT mismatch at edge ({u}, {v})");
                    Ok(1)
                }
            }
        }
        Command::HomCheck {
            source,
            target,
            map,
        } => {
            let (src_text, tgt_text) = (read_file(&source)?, read_file(&target)?);
            match (
                format::sniff_kind(&src_text).as_deref(),
                format::sniff_kind(&tgt_text).as_deref(),
            ) {
                (Some("oriented"), Some("oriented")) => {
                    let g = read_oriented(&source)?;
                    let h = read_oriented(&target)?;
                    let f = format::parse_mapping(
                        &read_file(&map)?,
                        g.vertex_count(),
                        h.vertex_count(),
                    )
                    .map_err(|error| AppError::Parse {
                        path: map.clone(),
                        error,
                    })?;
                    match check_pushable_hom(&g, &h, &f).map_err(lib_err)? {
                        Some(modifier) => {
                            say!("PUSHABLE {modifier}");
                            Ok(0)
                        }
                        None => {
                            say!("NOT-PUSHABLE");
                            Ok(1)
                        }
                    }
                }
                (Some("signed"), Some("signed")) => {
                    let sg = read_signed(&source)?;
                    let sh = read_signed(&target)?;
                    let f = format::parse_mapping(
                        &read_file(&map)?,
                        sg.vertex_count(),
                        sh.vertex_count(),
                    )
                    .map_err(|error| AppError::Parse {
                        path: map.clone(),
                        error,
                    })?;
                    match check_switchable_hom(&sg, &sh, &f).map_err(lib_err)? {
                        Some(modifier) => {
                            say!("SWITCHABLE {modifier}");
                            Ok(0)
                        }
                        None => {
                            say!("NOT-SWITCHABLE");
                            Ok(1)
                        }
                    }
                }
                _ => Err(AppError::Input(
                    "hom-check needs two `oriented` files or two `signed` files".into(),
                )),
            }
        }
        Command::HomSearch {
            source,
            target,
            budget,
        } => {
            let budget = resolve_budget(budget)?;
            let (src_text, tgt_text) = (read_file(&source)?, read_file(&target)?);
            let witness = match (
                format::sniff_kind(&src_text).as_deref(),
                format::sniff_kind(&tgt_text).as_deref(),
            ) {
                (Some("oriented"), Some("oriented")) => {
                    let g = read_oriented(&source)?;
                    let h = read_oriented(&target)?;
                    search_pushable_hom_with_budget(&g, &h, budget).map_err(lib_err)?
                }
                (Some("signed"), Some("signed")) => {
                    let sg = read_signed(&source)?;
                    let sh = read_signed(&target)?;
                    search_switchable_hom_with_budget(&sg, &sh, budget).map_err(lib_err)?
                }
                _ => {
                    return Err(AppError::Input(
                        "hom-search needs two `oriented` files or two `signed` files".into(),
                    ))
                }
            };
            match witness {
                Some(w) => {
                    let images: Vec<String> =
                        w.mapping.images().iter().map(|t| t.to_string()).collect();
                    say!("FOUND");
                    say!("mapping: {}", images.join(" "));
                    say!("modifier: {}", w.modifier);
                    Ok(0)
                }
                None => {
                    say!("NOT-FOUND");
                    Ok(1)
                }
            }
        }
        Command::Gadget {
            graph,
            k,
            map,
            dot: as_dot,
        } => {
            let g = read_graph(&graph)?;
            let (gadget, gmap) = build_gadget(&g, k).map_err(lib_err)?;
            if let Some(path) = map {
                write_map_json(&path, &gmap)?;
            }
            print_oriented(&gadget, as_dot);
            Ok(0)
        }
        Command::SGraph {
            graph,
            map,
            dot: as_dot,
        } => {
            let g = read_graph(&graph)?;
            let (split, gmap) = build_s_graph(&g);
            if let Some(path) = map {
                write_map_json(&path, &gmap)?;
            }
            print_oriented(&split, as_dot);
            Ok(0)
        }
        Command::KStar { k, dot: as_dot } => {
            let g = build_k_star(k).map_err(lib_err)?;
            print_oriented(&g, as_dot);
            Ok(0)
        }
        Command::VerifyReduction { graph, k, budget } => {
            let g = read_graph(&graph)?;
            let budget = resolve_budget(budget)?;
            match verify_coloring_reduction_with_budget(&g, k, budget) {
                Ok(outcome) => {
                    match &outcome.coloring {
                        Some(colors) => {
                            let digits: Vec<String> =
                                colors.iter().map(|c| c.to_string()).collect();
                            say!("colorable: yes {}", digits.join(" "));
                        }
                        None => say!("colorable: no"),
                    }
                    say!(
                        "homomorphism: {}",
                        if outcome.witness.is_some() {
                            "found"
                        } else {
                            "absent"
                        }
                    );
                    say!("AGREE");
                    Ok(0)
                }
                Err(Error::ReductionViolation { detail }) => {
                    say!("VIOLATION: {detail}");
                    Ok(1)
                }
                Err(other) => Err(lib_err(other)),
            }
        }
        Command::VerifyCritical {
            graph,
            target,
            budget,
        } => {
            let g = read_oriented(&graph)?;
            let h = read_oriented(&target)?;
            let budget = resolve_budget(budget)?;
            let report = verify_critical_with_budget(&g, &h, budget).map_err(lib_err)?;
            say!(
                "whole graph: {}",
                if report.whole_maps {
                    "maps"
                } else {
                    "no homomorphism"
                }
            );
            for ((u, v), maps) in &report.arc_deleted_maps {
                say!(
                    "without ({u}, {v}): {}",
                    if *maps { "found" } else { "none" }
                );
            }
            if report.critical {
                say!("CRITICAL");
                Ok(0)
            } else {
                say!("NOT-CRITICAL");
                Ok(1)
            }
        }
        Command::Girth { graph, unbalanced } => {
            let g = read_oriented(&graph)?;
            let limit = g.vertex_count();
            if unbalanced {
                match g.unbalanced_girth_with_limit(limit).map_err(lib_err)? {
                    Some(len) => say!("{len}"),
                    None => say!("none"),
                }
            } else {
                match g.girth_with_limit(limit).map_err(lib_err)? {
                    Some(len) => say!("{len}"),
                    None => say!("acyclic"),
                }
            }
            Ok(0)
        }
    }
}

fn print_oriented(g: &OrientedGraph, as_dot: bool) {
    if as_dot {
        emit!("{}", dot::oriented_dot(g));
    } else {
        emit!("{}", format::write_oriented(g));
    }
}

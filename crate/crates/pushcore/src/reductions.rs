//! Gadget constructions tying graph coloring to pushable homomorphisms,
//! and cross-checks that run both sides of each equivalence.
//!
//! Two reductions live here. The small one replaces every edge of a graph
//! by a pair of two-arc paths ([`build_s_graph`]); the result admits a
//! pushable homomorphism onto the oriented complete bipartite graph
//! [`build_k_star`]`(k)` exactly when the original graph is k-colorable.
//! The main one ([`build_gadget`]) replaces every edge by a pair of
//! length-`4k` paths of opposite forward parity; the result maps onto the
//! directed odd cycle `C(2k+1)` exactly when the original graph is
//! (2k+1)-colorable. The `verify_*` functions compute both sides
//! independently — a backtracking coloring search against the homomorphism
//! search — and error out loudly if they ever disagree.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, SimpleGraph};
use crate::homo::{search_pushable_hom_with_budget, HomWitness, DEFAULT_NODE_BUDGET};

/// The directed cycle on `n >= 3` vertices: arcs `(i, i+1 mod n)`.
pub fn directed_cycle(n: usize) -> Result<OrientedGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter {
            what: "a directed cycle needs n >= 3",
        });
    }
    OrientedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The non-directable orientation of the four-cycle: three arcs forward,
/// one against. Its unique cycle is unbalanced, and the graph is
/// isomorphic to every push of itself.
pub fn unbalanced_c4() -> OrientedGraph {
    OrientedGraph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).expect("fixed arc list is valid")
}

/// A 7-vertex oriented graph with no pushable homomorphism onto the
/// unbalanced square, although every arc-deleted subgraph has one — a
/// small arc-critical witness for [`verify_critical`].
pub fn w_graph() -> OrientedGraph {
    OrientedGraph::new(
        7,
        [
            (0, 4),
            (0, 5),
            (0, 6),
            (4, 1),
            (1, 5),
            (5, 2),
            (2, 6),
            (3, 4),
            (6, 3),
        ],
    )
    .expect("fixed arc list is valid")
}

/// The oriented complete bipartite graph `K*(k, k)`: sides `0..k` and
/// `k..2k`, the perfect matching `i -> k+i` oriented left to right and
/// every other edge right to left.
pub fn build_k_star(k: usize) -> Result<OrientedGraph> {
    if k == 0 {
        return Err(Error::InvalidParameter {
            what: "k-star needs k >= 1",
        });
    }
    let mut arcs = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            if i == j {
                arcs.push((i, k + i));
            } else {
                arcs.push((k + j, i));
            }
        }
    }
    OrientedGraph::new(2 * k, arcs)
}

/// Which of the two replacement paths of a gadget an entry describes,
/// named by the parity of the path's forward-arc count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    /// Every arc forward (forward count even).
    Even,
    /// Final arc reversed (forward count odd).
    Odd,
}

/// The two replacement paths standing in for one original edge: vertex
/// sequences from one endpoint to the other, internals included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetPaths {
    /// The replaced edge of the original graph, as `(u, v)` with `u < v`.
    pub edge: (usize, usize),
    /// Path with even forward parity, `u` to `v`.
    pub even_path: Vec<usize>,
    /// Path with odd forward parity, `u` to `v`.
    pub odd_path: Vec<usize>,
}

/// Where the pieces of a gadget construction ended up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetMap {
    /// Vertices `0..original_count` are the original graph's.
    pub original_count: usize,
    /// One entry per original edge, ascending.
    pub paths: Vec<GadgetPaths>,
}

/// Replaces every edge `{u, v}` of `g` by two length-two paths through
/// fresh vertices `a` and `b`: arcs `(u, a)`, `(a, v)` and `(v, b)`,
/// `(u, b)`. The `u, a, v` path has forward count 2, the `u, b, v` path
/// forward count 1; each edge of `g` becomes an unbalanced four-cycle.
pub fn build_s_graph(g: &SimpleGraph) -> (OrientedGraph, GadgetMap) {
    let n = g.vertex_count();
    let mut arcs = Vec::with_capacity(4 * g.edge_count());
    let mut paths = Vec::with_capacity(g.edge_count());
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        let a = n + 2 * j;
        let b = n + 2 * j + 1;
        arcs.extend([(u, a), (a, v), (v, b), (u, b)]);
        paths.push(GadgetPaths {
            edge: (u, v),
            even_path: vec![u, a, v],
            odd_path: vec![u, b, v],
        });
    }
    let graph = OrientedGraph::new(n + 2 * g.edge_count(), arcs)
        .expect("fresh internal vertices cannot collide");
    (
        graph,
        GadgetMap {
            original_count: n,
            paths,
        },
    )
}

/// Replaces every edge `{u, v}` of `g` by two internally disjoint paths of
/// length `4k` from `u` to `v`: one all-forward (even forward parity), one
/// with only its final arc reversed (odd parity). Internal vertices are
/// numbered edge by edge, the even path's before the odd path's. The
/// result is bipartite, has `n + 2m(4k-1)` vertices and `8km` arcs, and
/// admits a pushable homomorphism onto the directed cycle `C(2k+1)`
/// exactly when `g` is `(2k+1)`-colorable.
pub fn build_gadget(g: &SimpleGraph, k: usize) -> Result<(OrientedGraph, GadgetMap)> {
    if k == 0 {
        return Err(Error::InvalidParameter {
            what: "gadget construction needs k >= 1",
        });
    }
    let n = g.vertex_count();
    let internals = 4 * k - 1;
    let mut arcs = Vec::with_capacity(8 * k * g.edge_count());
    let mut paths = Vec::with_capacity(g.edge_count());
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        let even_base = n + 2 * internals * j;
        let odd_base = even_base + internals;
        let even_path: Vec<usize> = core::iter::once(u)
            .chain((0..internals).map(|i| even_base + i))
            .chain(core::iter::once(v))
            .collect();
        let odd_path: Vec<usize> = core::iter::once(u)
            .chain((0..internals).map(|i| odd_base + i))
            .chain(core::iter::once(v))
            .collect();
        for w in even_path.windows(2) {
            arcs.push((w[0], w[1]));
        }
        // All forward except the arc entering v, which is reversed.
        for w in odd_path.windows(2).take(internals - 1) {
            arcs.push((w[0], w[1]));
        }
        arcs.push((odd_path[internals - 1], odd_path[internals]));
        arcs.push((v, odd_path[internals]));
        paths.push(GadgetPaths {
            edge: (u, v),
            even_path,
            odd_path,
        });
    }
    let graph = OrientedGraph::new(n + 2 * internals * g.edge_count(), arcs)
        .expect("fresh internal vertices cannot collide");
    Ok((
        graph,
        GadgetMap {
            original_count: n,
            paths,
        },
    ))
}

/// Brute-force cap: [`allowed_colors`] enumerates `2^(4k-1)` push subsets.
pub const ALLOWED_COLORS_K_LIMIT: usize = 3;

/// The set of colors `c` such that a replacement path of the given kind,
/// with its start pinned to color 0, can be pushed (on internal vertices
/// only) to map onto the directed cycle `C(2k+1)` with its end at color
/// `c`. Computed by brute force over all push subsets of the internals.
///
/// The even path reaches every color; the odd path reaches everything
/// except 0 — which is exactly why the gadget encodes proper coloring.
pub fn allowed_colors(kind: PathKind, k: usize) -> Result<BTreeSet<usize>> {
    if k == 0 {
        return Err(Error::InvalidParameter {
            what: "replacement paths need k >= 1",
        });
    }
    if k > ALLOWED_COLORS_K_LIMIT {
        return Err(Error::TooLarge {
            what: "push-subset enumeration",
            limit: ALLOWED_COLORS_K_LIMIT,
        });
    }
    let steps = 4 * k;
    let modulus = 2 * k + 1;
    // Step i runs between path vertices i and i+1; +1 when forward.
    let base: Vec<i64> = (0..steps)
        .map(|i| {
            if kind == PathKind::Odd && i == steps - 1 {
                -1
            } else {
                1
            }
        })
        .collect();
    let mut reachable = BTreeSet::new();
    for subset in 0u64..1 << (steps - 1) {
        // Bit i-1 of `subset` pushes internal vertex i; endpoints stay put.
        let pushed = |v: usize| v > 0 && v < steps && subset >> (v - 1) & 1 == 1;
        let mut total: i64 = 0;
        for (i, &dir) in base.iter().enumerate() {
            let flipped = pushed(i) != pushed(i + 1);
            total += if flipped { -dir } else { dir };
        }
        reachable.insert(total.rem_euclid(modulus as i64) as usize);
    }
    Ok(reachable)
}

/// A proper coloring search: colors `0..colors`, vertices taken in reverse
/// degeneracy order (peel minimum degree, lowest index first), colors
/// ascending, chronological backtracking under a node budget. Returns the
/// first coloring found, as a color per vertex, or `None` when the graph
/// has no proper coloring with that many colors.
pub fn k_colorable(g: &SimpleGraph, colors: usize) -> Result<Option<Vec<usize>>> {
    k_colorable_with_budget(g, colors, DEFAULT_NODE_BUDGET)
}

pub fn k_colorable_with_budget(
    g: &SimpleGraph,
    colors: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>> {
    let n = g.vertex_count();
    let adj = g.adjacency();

    // Degeneracy peeling: repeatedly delete a minimum-degree vertex.
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut removed = vec![false; n];
    let mut peel_order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (degree[v], v))
            .expect("some vertex remains");
        removed[next] = true;
        peel_order.push(next);
        for &w in &adj[next] {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    peel_order.reverse();

    let mut coloring = vec![usize::MAX; n];
    let mut nodes = 0u64;
    let mut depth = 0usize;
    // Iterative backtracking over peel_order positions.
    let mut next_color = vec![0usize; n];
    loop {
        if depth == n {
            return Ok(Some(coloring));
        }
        let v = peel_order[depth];
        let mut chosen = None;
        for c in next_color[depth]..colors {
            nodes += 1;
            if nodes > budget {
                return Err(Error::BudgetExceeded { budget });
            }
            if adj[v].iter().all(|&w| coloring[w] != c) {
                chosen = Some(c);
                break;
            }
        }
        match chosen {
            Some(c) => {
                coloring[v] = c;
                next_color[depth] = c + 1;
                depth += 1;
                if depth < n {
                    next_color[depth] = 0;
                }
            }
            None => {
                if depth == 0 {
                    return Ok(None);
                }
                depth -= 1;
                coloring[peel_order[depth]] = usize::MAX;
            }
        }
    }
}

/// Both sides of a reduction, computed independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    /// A proper coloring of the original graph, when one exists.
    pub coloring: Option<Vec<usize>>,
    /// A pushable homomorphism of the constructed graph, when one exists.
    pub witness: Option<HomWitness>,
}

/// Runs the main reduction both ways: is `g` `(2k+1)`-colorable, and does
/// `build_gadget(g, k)` map pushably onto the directed `C(2k+1)`? The two
/// answers must agree — and on the positive side the homomorphism's
/// restriction to the original vertices must itself be a proper coloring —
/// otherwise this returns a `ReductionViolation` error.
pub fn verify_coloring_reduction(g: &SimpleGraph, k: usize) -> Result<ReductionOutcome> {
    verify_coloring_reduction_with_budget(g, k, DEFAULT_NODE_BUDGET)
}

pub fn verify_coloring_reduction_with_budget(
    g: &SimpleGraph,
    k: usize,
    budget: u64,
) -> Result<ReductionOutcome> {
    let (gadget, _) = build_gadget(g, k)?;
    let target = directed_cycle(2 * k + 1)?;
    let coloring = k_colorable_with_budget(g, 2 * k + 1, budget)?;
    let witness = search_pushable_hom_with_budget(&gadget, &target, budget)?;
    match (&coloring, &witness) {
        (Some(_), Some(w)) => {
            for &(u, v) in g.edges() {
                if w.mapping.of(u) == w.mapping.of(v) {
                    return Err(Error::ReductionViolation {
                        detail:
                            "homomorphism restricted to original vertices is not a proper coloring",
                    });
                }
            }
        }
        (Some(_), None) => {
            return Err(Error::ReductionViolation {
                detail: "graph is colorable but the gadget admits no homomorphism",
            });
        }
        (None, Some(_)) => {
            return Err(Error::ReductionViolation {
                detail: "gadget admits a homomorphism but the graph is not colorable",
            });
        }
        (None, None) => {}
    }
    Ok(ReductionOutcome { coloring, witness })
}

/// Runs the small reduction both ways: is `g` `k`-colorable, and does
/// `build_s_graph(g)` map pushably onto `K*(k, k)`? Errors with
/// `ReductionViolation` on disagreement.
///
/// The two legs agree for every `k ≥ 3` and, degenerately, for `k = 1`.
/// At `k = 2` the target is a directed square whose closed 4-walks all
/// have even forward count, while each split square needs an odd one, so
/// any 2-colorable input with at least one edge yields an honest
/// violation report. The constructive direction needs a third vertex on
/// the `B` side: an edge colored `{i, j}` routes its square through
/// `b_i` and some `b_y` with `y` outside `{i, j}`.
pub fn verify_k_star_reduction(g: &SimpleGraph, k: usize) -> Result<ReductionOutcome> {
    verify_k_star_reduction_with_budget(g, k, DEFAULT_NODE_BUDGET)
}

pub fn verify_k_star_reduction_with_budget(
    g: &SimpleGraph,
    k: usize,
    budget: u64,
) -> Result<ReductionOutcome> {
    let (s_graph, _) = build_s_graph(g);
    let target = build_k_star(k)?;
    let coloring = k_colorable_with_budget(g, k, budget)?;
    let witness = search_pushable_hom_with_budget(&s_graph, &target, budget)?;
    match (&coloring, &witness) {
        (Some(_), Some(_)) | (None, None) => Ok(ReductionOutcome { coloring, witness }),
        (Some(_), None) => Err(Error::ReductionViolation {
            detail: "graph is colorable but its split graph admits no homomorphism",
        }),
        (None, Some(_)) => Err(Error::ReductionViolation {
            detail: "split graph admits a homomorphism but the graph is not colorable",
        }),
    }
}

/// Per-arc record of [`verify_critical`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalityReport {
    /// Whether the whole graph admits a pushable homomorphism onto the
    /// target (a critical graph must not).
    pub whole_maps: bool,
    /// For each arc of the source, ascending: whether the graph minus that
    /// arc admits one (a critical graph needs all of them to).
    pub arc_deleted_maps: Vec<((usize, usize), bool)>,
    /// True exactly when `!whole_maps` and every deletion maps.
    pub critical: bool,
}

/// Checks whether `g` is arc-critical with respect to pushable
/// homomorphisms onto `h`: no homomorphism from `g` itself, but one from
/// every single-arc-deleted subgraph.
pub fn verify_critical(g: &OrientedGraph, h: &OrientedGraph) -> Result<CriticalityReport> {
    verify_critical_with_budget(g, h, DEFAULT_NODE_BUDGET)
}

pub fn verify_critical_with_budget(
    g: &OrientedGraph,
    h: &OrientedGraph,
    budget: u64,
) -> Result<CriticalityReport> {
    let whole_maps = search_pushable_hom_with_budget(g, h, budget)?.is_some();
    let mut arc_deleted_maps = Vec::with_capacity(g.arc_count());
    for &(u, v) in g.arcs() {
        let deleted = g.without_arc(u, v)?;
        let maps = search_pushable_hom_with_budget(&deleted, h, budget)?.is_some();
        arc_deleted_maps.push(((u, v), maps));
    }
    let critical = !whole_maps && arc_deleted_maps.iter().all(|&(_, maps)| maps);
    Ok(CriticalityReport {
        whole_maps,
        arc_deleted_maps,
        critical,
    })
}

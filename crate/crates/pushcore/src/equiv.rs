//! Deciding push equivalence, with witnesses.
//!
//! Two orientations of the same graph are push equivalent when some vertex
//! set pushes one onto the other. The decision runs in linear time: fix a
//! spanning forest, propagate the only possible membership bits down each
//! tree, then check the remaining edges. Witnesses are normalized so the
//! lowest vertex of every connected component stays outside the set, which
//! makes them unique and reproducible.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{OrderedClosedWalk, OrientedGraph, PushSet, SimpleGraph, VertexSet};

/// A rooted spanning forest of a simple graph, grown by breadth-first
/// search from the lowest unvisited vertex with neighbors taken ascending —
/// fully deterministic, so everything derived from it is too.
#[derive(Debug, Clone)]
pub struct SpanningForest {
    /// Forest edges as `(u, v)` with `u < v`, ascending.
    pub edges: Vec<(usize, usize)>,
    /// BFS parent of each vertex; `None` exactly at component roots.
    pub parent: Vec<Option<usize>>,
    /// Distance to the component root along tree edges.
    pub depth: Vec<usize>,
    /// Component id per vertex, numbered in order of lowest member.
    pub component: Vec<usize>,
    /// Vertices in discovery order; every parent precedes its children.
    pub order: Vec<usize>,
}

impl SpanningForest {
    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }
}

/// Builds the BFS spanning forest described on [`SpanningForest`].
pub fn spanning_forest(g: &SimpleGraph) -> SpanningForest {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut parent = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut component = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut comp = 0;
    for root in 0..n {
        if component[root] != usize::MAX {
            continue;
        }
        component[root] = comp;
        order.push(root);
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if component[w] == usize::MAX {
                    component[w] = comp;
                    parent[w] = Some(v);
                    depth[w] = depth[v] + 1;
                    order.push(w);
                    edges.push((v.min(w), v.max(w)));
                    queue.push_back(w);
                }
            }
        }
        comp += 1;
    }
    edges.sort_unstable();
    SpanningForest {
        edges,
        parent,
        depth,
        component,
        order,
    }
}

/// Propagates a membership bit down every tree of the forest: roots get
/// `false`, and a child's bit is its parent's XOR `disagree(parent, child)`.
/// This is the unique assignment with all roots outside the set that makes
/// the tree edges' cut status match `disagree`.
pub(crate) fn align_bits(
    forest: &SpanningForest,
    mut disagree: impl FnMut(usize, usize) -> bool,
) -> Vec<bool> {
    let mut bit = vec![false; forest.vertex_count()];
    for &v in &forest.order {
        if let Some(p) = forest.parent[v] {
            bit[v] = bit[p] ^ disagree(p, v);
        }
    }
    bit
}

pub(crate) fn bits_to_set(bits: &[bool]) -> VertexSet {
    bits.iter()
        .enumerate()
        .filter_map(|(v, &b)| b.then_some(v))
        .collect()
}

/// Outcome of a push-equivalence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PushDecision {
    /// Pushing this set carries the first graph onto the second. The set is
    /// normalized: each component's lowest vertex lies outside it.
    Equivalent(PushSet),
    /// The graphs orient different underlying graphs.
    DifferentUnderlying,
    /// Same underlying graph, but no push works; this edge's orientation
    /// disagrees with the forced tree alignment.
    Mismatch { edge: (usize, usize) },
}

impl PushDecision {
    pub fn witness(&self) -> Option<&PushSet> {
        match self {
            PushDecision::Equivalent(s) => Some(s),
            _ => None,
        }
    }
}

/// Decides whether some push set carries `g1` onto `g2`.
///
/// On a spanning forest the witness bits are forced (up to the per-component
/// complement, fixed by normalization); the graphs are equivalent exactly
/// when every non-forest edge's orientation agrees with those forced bits.
/// The two graphs must have the same vertex count.
pub fn decide_push_equivalent(g1: &OrientedGraph, g2: &OrientedGraph) -> Result<PushDecision> {
    if g1.vertex_count() != g2.vertex_count() {
        return Err(Error::VertexCountMismatch {
            left: g1.vertex_count(),
            right: g2.vertex_count(),
        });
    }
    let sg = g1.underlying();
    if sg != g2.underlying() {
        return Ok(PushDecision::DifferentUnderlying);
    }
    let forest = spanning_forest(&sg);
    // Orientations differ on an edge exactly when the push must flip it.
    let bits = align_bits(&forest, |p, c| g1.has_arc(p, c) != g2.has_arc(p, c));
    for &(u, v) in sg.edges() {
        let must_flip = g1.has_arc(u, v) != g2.has_arc(u, v);
        if bits[u] ^ bits[v] != must_flip {
            return Ok(PushDecision::Mismatch { edge: (u, v) });
        }
    }
    Ok(PushDecision::Equivalent(bits_to_set(&bits)))
}

/// The unique normalized push set aligning one oriented forest with
/// another on the same underlying forest. Forests are always alignable, so
/// unlike [`decide_push_equivalent`] this cannot answer "not equivalent" —
/// but it errors when the underlying graphs differ or contain a cycle.
pub fn tree_align_push_set(t1: &OrientedGraph, t2: &OrientedGraph) -> Result<PushSet> {
    if t1.vertex_count() != t2.vertex_count() {
        return Err(Error::VertexCountMismatch {
            left: t1.vertex_count(),
            right: t2.vertex_count(),
        });
    }
    let sg = t1.underlying();
    if sg != t2.underlying() {
        return Err(Error::UnderlyingMismatch);
    }
    if sg.edge_count() + sg.component_count() != sg.vertex_count() {
        return Err(Error::NotAForest);
    }
    match decide_push_equivalent(t1, t2)? {
        PushDecision::Equivalent(s) => Ok(s),
        _ => unreachable!("forests have no non-tree edges to mismatch on"),
    }
}

/// Number of push-equivalence classes over all orientations of `g`:
/// `2^(m - n + c)` for `m` edges, `n` vertices, `c` components. Each of the
/// `2^m` orientations is reachable from a fixed one by `2^(n - c)` distinct
/// pushes, and those orbits partition evenly.
pub fn count_push_classes(g: &SimpleGraph) -> BigUint {
    let exp = g.edge_count() + g.component_count() - g.vertex_count();
    BigUint::from(1u8) << exp
}

/// Cap on the edge count for [`enumerate_push_classes`].
pub const ENUMERATION_EDGE_LIMIT: usize = 16;

/// Lists one orientation per push class of `g`: the lexicographically least
/// member (by sorted arc list), with the classes themselves in that same
/// order. Exhaustive over all `2^m` orientations, capped at
/// [`ENUMERATION_EDGE_LIMIT`] edges.
///
/// Class membership is tested by canonical form — push each orientation so
/// that every spanning-forest edge points from its lower to its higher
/// endpoint. Two orientations share that form exactly when they are push
/// equivalent: pushes making the forest canonical differ by a set whose
/// forest cut is empty, and such a set is a union of components, whose
/// whole cut is empty.
pub fn enumerate_push_classes(g: &SimpleGraph) -> Result<Vec<OrientedGraph>> {
    let m = g.edge_count();
    if m > ENUMERATION_EDGE_LIMIT {
        return Err(Error::TooLarge {
            what: "orientation enumeration",
            limit: ENUMERATION_EDGE_LIMIT,
        });
    }
    let forest = spanning_forest(g);
    let mut classes: alloc::collections::BTreeMap<Vec<(usize, usize)>, OrientedGraph> =
        alloc::collections::BTreeMap::new();
    for mask in 0u64..1 << m {
        let oriented = g.orientation_from_mask(mask)?;
        let bits = align_bits(&forest, |p, c| oriented.has_arc(p.max(c), p.min(c)));
        let canon = oriented.push(&bits_to_set(&bits))?;
        let key = canon.arcs().to_vec();
        match classes.get_mut(&key) {
            Some(best) => {
                if oriented.arcs() < best.arcs() {
                    *best = oriented;
                }
            }
            None => {
                classes.insert(key, oriented);
            }
        }
    }
    let mut reps: Vec<OrientedGraph> = classes.into_values().collect();
    reps.sort();
    Ok(reps)
}

/// Vertex cap for [`is_push_invariant`] and [`digraph_isomorphic`].
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 8;

/// Whether `g` is isomorphic to every push of itself. Connected graphs
/// only; checks the `2^(n-1)` essentially distinct push sets (a set and its
/// complement push identically) against a brute-force isomorphism test, so
/// the cap is [`ISOMORPHISM_VERTEX_LIMIT`] vertices.
pub fn is_push_invariant(g: &OrientedGraph) -> Result<bool> {
    let n = g.vertex_count();
    if !g.underlying().is_connected() {
        return Err(Error::NotConnected);
    }
    if n > ISOMORPHISM_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "push-invariance scan",
            limit: ISOMORPHISM_VERTEX_LIMIT,
        });
    }
    for bits in 0u64..1 << n.saturating_sub(1) {
        // Vertex 0 stays out of the set; its orbit covers the complement.
        let s: VertexSet = (1..n).filter(|v| bits >> (v - 1) & 1 == 1).collect();
        if !digraph_isomorphic(g, &g.push(&s)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force digraph isomorphism for graphs of at most
/// [`ISOMORPHISM_VERTEX_LIMIT`] vertices: backtracking over vertex images,
/// pruned by (in, out) degree pairs and arc consistency.
pub fn digraph_isomorphic(a: &OrientedGraph, b: &OrientedGraph) -> Result<bool> {
    let n = a.vertex_count();
    if n > ISOMORPHISM_VERTEX_LIMIT || b.vertex_count() > ISOMORPHISM_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            what: "isomorphism test",
            limit: ISOMORPHISM_VERTEX_LIMIT,
        });
    }
    if b.vertex_count() != n || b.arc_count() != a.arc_count() {
        return Ok(false);
    }
    let degrees = |g: &OrientedGraph| {
        let mut d = vec![(0usize, 0usize); n];
        for &(u, v) in g.arcs() {
            d[u].1 += 1;
            d[v].0 += 1;
        }
        d
    };
    let da = degrees(a);
    let db = degrees(b);
    let mut sorted_a = da.clone();
    let mut sorted_b = db.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(false);
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_isomorphism(a, b, &da, &db, &mut image, &mut used, 0))
}

fn extend_isomorphism(
    a: &OrientedGraph,
    b: &OrientedGraph,
    da: &[(usize, usize)],
    db: &[(usize, usize)],
    image: &mut [usize],
    used: &mut [bool],
    v: usize,
) -> bool {
    if v == image.len() {
        return true;
    }
    'candidates: for w in 0..image.len() {
        if used[w] || da[v] != db[w] {
            continue;
        }
        for (prior, &mapped) in image.iter().enumerate().take(v) {
            let arc_out = a.has_arc(v, prior);
            let arc_in = a.has_arc(prior, v);
            if arc_out != b.has_arc(w, mapped) || arc_in != b.has_arc(mapped, w) {
                continue 'candidates;
            }
        }
        image[v] = w;
        used[w] = true;
        if extend_isomorphism(a, b, da, db, image, used, v + 1) {
            return true;
        }
        used[w] = false;
        image[v] = usize::MAX;
    }
    false
}

/// One ordered closed walk per non-forest edge of `g`'s underlying graph:
/// the tree path between the edge's endpoints, closed by the edge itself
/// (the wrap-around step). Together with the single arcs these walks span
/// every closed walk's classification behaviour, which is what makes them
/// a sufficient test set for directability preservation.
pub fn fundamental_ordered_cycles(g: &OrientedGraph) -> Vec<OrderedClosedWalk> {
    let sg = g.underlying();
    let forest = spanning_forest(&sg);
    let mut walks = Vec::new();
    for &(u, v) in sg.edges() {
        if forest.edges.binary_search(&(u, v)).is_ok() {
            continue;
        }
        // Tree path u .. lca .. v; the wrap step v -> u is the edge itself.
        let mut left = vec![u];
        let mut right = vec![v];
        let (mut x, mut y) = (u, v);
        while forest.depth[x] > forest.depth[y] {
            x = forest.parent[x].expect("deeper vertex has a parent");
            left.push(x);
        }
        while forest.depth[y] > forest.depth[x] {
            y = forest.parent[y].expect("deeper vertex has a parent");
            right.push(y);
        }
        while x != y {
            x = forest.parent[x].expect("distinct vertices at equal depth are not roots");
            y = forest.parent[y].expect("distinct vertices at equal depth are not roots");
            left.push(x);
            right.push(y);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        walks.push(OrderedClosedWalk::new(left).expect("cycle has at least three vertices"));
    }
    walks
}

//! Oriented graphs, the push operation, and closed-walk classification.
//!
//! Vertices are `0..n`. An [`OrientedGraph`] stores its arcs sorted, so
//! equality of graphs is equality of values and every traversal below is
//! deterministic. Pushing a vertex set `S` reverses exactly the arcs of the
//! cut between `S` and its complement; arcs with both endpoints on one side
//! are untouched. Closed walks are classified by the parity of their length
//! and of their forward-arc count, both of which survive pushing — that
//! invariance is what makes the classification useful.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// A finite set of vertices, kept sorted.
///
/// Used both as a push set (vertices whose incident cut arcs get reversed)
/// and as a switch set on signed graphs. Displays as `{0, 2, 5}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexSet {
    members: BTreeSet<usize>,
}

/// Vertex set in its role on oriented graphs.
pub type PushSet = VertexSet;

impl VertexSet {
    pub fn new() -> Self {
        VertexSet {
            members: BTreeSet::new(),
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.members.insert(v)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// The complement within `0..n`.
    pub fn complement(&self, n: usize) -> VertexSet {
        (0..n).filter(|v| !self.contains(*v)).collect()
    }

    /// Symmetric difference; composing two pushes equals pushing this.
    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.members
            .symmetric_difference(&other.members)
            .copied()
            .collect()
    }

    /// Errors unless every member is `< n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.members.iter().next_back() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange {
                vertex: v,
                limit: n,
            }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet {
            members: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A simple undirected graph: no loops, no parallel edges.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted. This is the shape an
/// [`OrientedGraph`] forgets to, and the input shape for orientation
/// enumeration and for the reductions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Builds a graph on `n` vertices from an edge list. Endpoint order
    /// within an edge does not matter; duplicates and loops are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a,
                    limit: n,
                });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: b,
                    limit: n,
                });
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        Ok(SimpleGraph { n, edges: list })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph { n, edges }
    }

    /// The cycle `0 - 1 - … - (n-1) - 0`. Needs `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter {
                what: "a cycle needs at least three vertices",
            });
        }
        let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        SimpleGraph::new(n, edges)
    }

    /// The path `0 - 1 - … - (n-1)`.
    pub fn path(n: usize) -> Self {
        SimpleGraph {
            n,
            edges: (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// Neighbor lists, each ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Component id per vertex, numbered `0..` in order of lowest member.
    pub fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for root in 0..self.n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = next;
            let mut queue = vec![root];
            while let Some(v) = queue.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    /// Orients every edge by one bit of `mask`: bit `i` clear orients edge
    /// `i` (in stored order) from its lower to its higher endpoint, set
    /// reverses it. Needs at most 64 edges.
    pub fn orientation_from_mask(&self, mask: u64) -> Result<OrientedGraph> {
        if self.edges.len() > 64 {
            return Err(Error::TooLarge {
                what: "orientation mask enumeration",
                limit: 64,
            });
        }
        let arcs =
            self.edges.iter().enumerate().map(
                |(i, &(u, v))| {
                    if mask >> i & 1 == 0 {
                        (u, v)
                    } else {
                        (v, u)
                    }
                },
            );
        OrientedGraph::new(self.n, arcs)
    }

    /// A proper two-coloring of the vertices, if one exists. Each connected
    /// component puts its lowest-indexed vertex on side A.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let adj = self.adjacency();
        let mut side = vec![2u8; self.n];
        for root in 0..self.n {
            if side[root] != 2 {
                continue;
            }
            side[root] = 0;
            let mut queue = vec![root];
            while let Some(v) = queue.pop() {
                for &w in &adj[v] {
                    if side[w] == 2 {
                        side[w] = 1 - side[v];
                        queue.push(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(Bipartition {
            in_b: side.iter().map(|&s| s == 1).collect(),
        })
    }
}

/// A two-sided split of `0..n` with no validation against any particular
/// graph; [`crate::signed::to_signed`] checks edges against it at use time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    in_b: Vec<bool>,
}

impl Bipartition {
    /// Builds the split with `part_a` on side A and the rest on side B.
    pub fn from_part_a(n: usize, part_a: &VertexSet) -> Result<Self> {
        part_a.check_range(n)?;
        Ok(Bipartition {
            in_b: (0..n).map(|v| !part_a.contains(v)).collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.in_b.len()
    }

    pub fn in_part_a(&self, v: usize) -> bool {
        !self.in_b[v]
    }

    pub fn part_a(&self) -> Vec<usize> {
        (0..self.in_b.len()).filter(|&v| !self.in_b[v]).collect()
    }

    pub fn part_b(&self) -> Vec<usize> {
        (0..self.in_b.len()).filter(|&v| self.in_b[v]).collect()
    }
}

/// An orientation of a simple graph: no loops, and at most one arc between
/// any two vertices.
///
/// Arcs are stored as `(tail, head)` pairs, sorted ascending, so two graphs
/// compare equal exactly when they have the same vertex count and arcs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrientedGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl OrientedGraph {
    /// Builds a graph on `n` vertices from a list of `(tail, head)` arcs.
    /// Rejects loops, repeated arcs, and opposite arc pairs.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in arcs {
            if u >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u,
                    limit: n,
                });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    limit: n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            list.push((u, v));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateArc {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        for &(u, v) in &list {
            if u < v && list.binary_search(&(v, u)).is_ok() {
                return Err(Error::OppositeArcs { u, v });
            }
        }
        Ok(OrientedGraph { n, arcs: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs as `(tail, head)`, ascending.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// True when some arc joins `u` and `v`, in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// Forgets orientations.
    pub fn underlying(&self) -> SimpleGraph {
        let mut edges: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        SimpleGraph { n: self.n, edges }
    }

    /// The same graph minus the arc `(u, v)`, which must be present.
    pub fn without_arc(&self, u: usize, v: usize) -> Result<OrientedGraph> {
        match self.arcs.binary_search(&(u, v)) {
            Ok(i) => {
                let mut arcs = self.arcs.clone();
                arcs.remove(i);
                Ok(OrientedGraph { n: self.n, arcs })
            }
            Err(_) => Err(Error::NotAdjacent { u, v }),
        }
    }

    /// The arcs crossing the cut between `s` and its complement, i.e. the
    /// arcs that [`push`](Self::push) would reverse. Ascending by `(tail,
    /// head)` of the original graph.
    pub fn cut_arcs(&self, s: &VertexSet) -> Result<Vec<(usize, usize)>> {
        s.check_range(self.n)?;
        Ok(self
            .arcs
            .iter()
            .copied()
            .filter(|&(u, v)| s.contains(u) != s.contains(v))
            .collect())
    }

    /// Reverses every arc with exactly one endpoint in `s`.
    ///
    /// Pushing is an involution (`push(push(g, s), s) == g`), pushing `s`
    /// equals pushing its complement, and two pushes in sequence equal one
    /// push of the symmetric difference — the cut of a set and the cut of
    /// its complement are the same arc set.
    pub fn push(&self, s: &VertexSet) -> Result<OrientedGraph> {
        s.check_range(self.n)?;
        let mut arcs: Vec<(usize, usize)> = self
            .arcs
            .iter()
            .map(|&(u, v)| {
                if s.contains(u) != s.contains(v) {
                    (v, u)
                } else {
                    (u, v)
                }
            })
            .collect();
        arcs.sort_unstable();
        Ok(OrientedGraph { n: self.n, arcs })
    }

    /// Forward/backward arc counts of a closed walk: step `i` goes from
    /// `w[i]` to `w[i+1]` (indices mod the length), and counts as forward
    /// when the graph has the arc in that direction, backward when it has
    /// the opposite arc. A step between non-adjacent vertices is an error.
    pub fn walk_parities(&self, walk: &OrderedClosedWalk) -> Result<(usize, usize)> {
        let mut forward = 0;
        let mut backward = 0;
        for (x, y) in walk.steps() {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    limit: self.n,
                });
            }
            if y >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: y,
                    limit: self.n,
                });
            }
            if self.has_arc(x, y) {
                forward += 1;
            } else if self.has_arc(y, x) {
                backward += 1;
            } else {
                return Err(Error::NotAdjacent { u: x, v: y });
            }
        }
        Ok((forward, backward))
    }

    /// Classifies a closed walk by the parities of its length and forward
    /// count. Pushing any set preserves both: a closed walk crosses any cut
    /// an even number of times, each crossed step changes the forward count
    /// by one, so the total change is even. The class is therefore a push
    /// invariant of the walk.
    pub fn classify_walk(&self, walk: &OrderedClosedWalk) -> Result<Directability> {
        let (forward, _) = self.walk_parities(walk)?;
        Ok(match (walk.len() % 2 == 1, forward % 2 == 1) {
            (true, true) => Directability::OddForwardDirectable,
            (true, false) => Directability::OddBackwardDirectable,
            (false, false) => Directability::EvenDirectable,
            (false, true) => Directability::EvenNonDirectable,
        })
    }

    /// Balance of an even closed walk: balanced when the forward count has
    /// the same parity as half the length, i.e. when `forward - backward`
    /// is divisible by four. Odd walks have no balance and error out.
    pub fn balance_of_walk(&self, walk: &OrderedClosedWalk) -> Result<Balance> {
        if walk.len() % 2 == 1 {
            return Err(Error::OddWalk { len: walk.len() });
        }
        let (forward, _) = self.walk_parities(walk)?;
        Ok(if forward % 2 == (walk.len() / 2) % 2 {
            Balance::Balanced
        } else {
            Balance::Unbalanced
        })
    }

    /// See [`SimpleGraph::bipartition`]; runs on the underlying graph.
    pub fn underlying_bipartition(&self) -> Option<Bipartition> {
        self.underlying().bipartition()
    }

    /// Length of a shortest cycle in the underlying graph, `None` for
    /// forests. Exhaustive over simple cycles, so the graph must stay
    /// within [`CYCLE_SCAN_DEFAULT_LIMIT`] vertices; use
    /// [`girth_with_limit`](Self::girth_with_limit) to raise the cap.
    pub fn girth(&self) -> Result<Option<usize>> {
        self.girth_with_limit(CYCLE_SCAN_DEFAULT_LIMIT)
    }

    pub fn girth_with_limit(&self, max_vertices: usize) -> Result<Option<usize>> {
        if self.n > max_vertices {
            return Err(Error::TooLarge {
                what: "cycle scan",
                limit: max_vertices,
            });
        }
        let mut best: Option<usize> = None;
        scan_simple_cycles(&self.underlying(), &mut |cycle| {
            if best.is_none_or(|b| cycle.len() < b) {
                best = Some(cycle.len());
            }
            best
        });
        Ok(best)
    }

    /// Length of a shortest unbalanced even cycle, `None` when every even
    /// cycle is balanced (odd cycles carry no balance and are skipped).
    /// Same exhaustive scan and vertex cap as [`girth`](Self::girth).
    pub fn unbalanced_girth(&self) -> Result<Option<usize>> {
        self.unbalanced_girth_with_limit(CYCLE_SCAN_DEFAULT_LIMIT)
    }

    pub fn unbalanced_girth_with_limit(&self, max_vertices: usize) -> Result<Option<usize>> {
        if self.n > max_vertices {
            return Err(Error::TooLarge {
                what: "cycle scan",
                limit: max_vertices,
            });
        }
        let mut best: Option<usize> = None;
        scan_simple_cycles(&self.underlying(), &mut |cycle| {
            if cycle.len() % 2 == 0 && best.is_none_or(|b| cycle.len() < b) {
                let walk = OrderedClosedWalk::new(cycle.to_vec()).expect("cycle length >= 3");
                if self.balance_of_walk(&walk) == Ok(Balance::Unbalanced) {
                    best = Some(cycle.len());
                }
            }
            best
        });
        Ok(best)
    }
}

/// Vertex cap for the exhaustive simple-cycle scans behind
/// [`OrientedGraph::girth`] and [`OrientedGraph::unbalanced_girth`].
pub const CYCLE_SCAN_DEFAULT_LIMIT: usize = 20;

/// Calls `visit` once per simple cycle of `g`, as a vertex sequence whose
/// first entry is the cycle's lowest vertex and whose second entry is lower
/// than its last (each cycle in exactly one direction, each rotation once).
/// `visit` returns the current best length, which prunes longer paths.
fn scan_simple_cycles(g: &SimpleGraph, visit: &mut dyn FnMut(&[usize]) -> Option<usize>) {
    let adj = g.adjacency();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    for anchor in 0..g.vertex_count() {
        path.push(anchor);
        on_path[anchor] = true;
        extend_cycle_scan(&adj, anchor, &mut path, &mut on_path, visit);
        on_path[anchor] = false;
        path.pop();
    }
}

fn extend_cycle_scan(
    adj: &[Vec<usize>],
    anchor: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut dyn FnMut(&[usize]) -> Option<usize>,
) {
    let last = *path.last().expect("path starts at the anchor");
    let mut best = None;
    for &next in &adj[last] {
        if next == anchor && path.len() >= 3 && path[1] < path[path.len() - 1] {
            best = visit(path);
        }
    }
    // A cycle through the current path has at least path.len() + 1 vertices.
    if best.is_some_and(|b| path.len() + 1 >= b) {
        return;
    }
    for &next in &adj[last] {
        if next > anchor && !on_path[next] {
            path.push(next);
            on_path[next] = true;
            extend_cycle_scan(adj, anchor, path, on_path, visit);
            on_path[next] = false;
            path.pop();
        }
    }
}

/// A closed walk given by its vertex sequence; the step back from the last
/// vertex to the first is implicit. Repeated vertices are fine (it is a
/// walk, not a cycle), but it needs at least two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedClosedWalk {
    vertices: Vec<usize>,
}

impl OrderedClosedWalk {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::WalkTooShort {
                len: vertices.len(),
            });
        }
        Ok(OrderedClosedWalk { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of steps, which equals the number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The steps `(w[i], w[i+1])` including the wrap-around step.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// The same closed walk traversed the other way, starting at the same
    /// vertex. Forward and backward counts swap under conjugation.
    pub fn conjugate(&self) -> OrderedClosedWalk {
        let mut vertices = Vec::with_capacity(self.vertices.len());
        vertices.push(self.vertices[0]);
        vertices.extend(self.vertices[1..].iter().rev().copied());
        OrderedClosedWalk { vertices }
    }

    /// The same closed walk started `r` steps later.
    pub fn rotate(&self, r: usize) -> OrderedClosedWalk {
        let k = self.vertices.len();
        OrderedClosedWalk {
            vertices: (0..k).map(|i| self.vertices[(i + r) % k]).collect(),
        }
    }
}

/// The push class of a closed walk, determined by the parities of its
/// length and its forward-arc count.
///
/// An odd walk can always be pushed to run all-forward or all-backward —
/// which of the two is decided by its forward parity. An even walk either
/// reaches a consistent direction (`EvenDirectable`) or never does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Directability {
    /// Odd length, odd forward count: pushable to all-forward.
    OddForwardDirectable,
    /// Odd length, even forward count: pushable to all-backward.
    OddBackwardDirectable,
    /// Even length, even forward count.
    EvenDirectable,
    /// Even length, odd forward count.
    EvenNonDirectable,
}

impl fmt::Display for Directability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Directability::OddForwardDirectable => "odd-forward-directable",
            Directability::OddBackwardDirectable => "odd-backward-directable",
            Directability::EvenDirectable => "even-directable",
            Directability::EvenNonDirectable => "even-non-directable",
        })
    }
}

/// Balance of an even closed walk: the sign-like invariant `forward -
/// backward (mod 4)`, reported as a two-way split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Balance {
    Balanced,
    Unbalanced,
}

impl fmt::Display for Balance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Balance::Balanced => "balanced",
            Balance::Unbalanced => "unbalanced",
        })
    }
}

//! Backtracking search for pushable / switchable homomorphisms.
//!
//! Vertices of the source graph are assigned target images in index order,
//! candidate images in ascending order, so the first solution found is the
//! lexicographically least one. Each arc to an already-assigned neighbor
//! contributes a parity constraint ("endpoints agree/disagree about the
//! modifier set"), maintained incrementally in a union-find that can roll
//! back on backtrack.
//!
//! Plain chronological backtracking degenerates on gadget-sized negative
//! instances: a conflict deep in one path of the gadget forces the search
//! to re-enumerate every combination of solutions for the unrelated paths
//! before it. The classic fix applied here is conflict-directed
//! backjumping: every dead end reports *which* earlier variables it really
//! depended on, and the search jumps straight back to the deepest of them,
//! skipping re-enumerations that provably cannot help. Jumps only skip
//! regions proven solution-free, and otherwise the visit order is the same
//! as chronological backtracking, so the lexicographic guarantee survives.
//!
//! Conflict sets come from the union-find: alongside the forest it keeps
//! the log of constraint arcs merged so far, and explains a contradiction
//! as the vertices on a path between the two clashing endpoints in that
//! constraint graph — exactly the variables whose values chain the two
//! parities together.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::signed::{Sign, SignedGraph};

/// A parity-constrained homomorphism instance, seen through the eyes of
/// the search: per vertex, the constraints towards lower-indexed vertices,
/// and a way to evaluate a constraint once both images are known.
pub(super) trait Instance {
    type Token: Copy;

    fn source_count(&self) -> usize;
    fn target_count(&self) -> usize;
    /// Constraint arcs from `v` to vertices below `v`, as
    /// `(lower_vertex, token)`.
    fn earlier_neighbors(&self, v: usize) -> &[(usize, Self::Token)];
    /// Required modifier parity between the two endpoints when `v` maps to
    /// `cv` and the neighbor to `cn`; `None` when the pair of images is
    /// outright infeasible for this arc.
    fn parity(&self, token: Self::Token, cv: usize, cn: usize) -> Option<bool>;
}

/// Oriented instance: tokens record the arc direction relative to the
/// later endpoint, the target is a lookup matrix over `h`'s arcs.
pub(super) struct OrientedInstance {
    n: usize,
    nh: usize,
    adj: Vec<Vec<(usize, bool)>>,
    h_arc: Vec<bool>,
}

impl OrientedInstance {
    pub(super) fn new(g: &OrientedGraph, h: &OrientedGraph) -> Self {
        let n = g.vertex_count();
        let nh = h.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in g.arcs() {
            // Store the arc at its higher endpoint; token = "arc points
            // from that endpoint".
            if u > v {
                adj[u].push((v, true));
            } else {
                adj[v].push((u, false));
            }
        }
        let mut h_arc = vec![false; nh * nh];
        for &(a, b) in h.arcs() {
            h_arc[a * nh + b] = true;
        }
        OrientedInstance { n, nh, adj, h_arc }
    }
}

impl Instance for OrientedInstance {
    type Token = bool;

    fn source_count(&self) -> usize {
        self.n
    }

    fn target_count(&self) -> usize {
        self.nh
    }

    fn earlier_neighbors(&self, v: usize) -> &[(usize, bool)] {
        &self.adj[v]
    }

    fn parity(&self, points_out: bool, cv: usize, cn: usize) -> Option<bool> {
        let (a, b) = if points_out { (cv, cn) } else { (cn, cv) };
        if self.h_arc[a * self.nh + b] {
            Some(false)
        } else if self.h_arc[b * self.nh + a] {
            Some(true)
        } else {
            None
        }
    }
}

/// Signed instance: tokens carry the source edge's sign, the matrix the
/// target's signs.
pub(super) struct SignedInstance {
    n: usize,
    nh: usize,
    adj: Vec<Vec<(usize, Sign)>>,
    h_sign: Vec<Option<Sign>>,
}

impl SignedInstance {
    pub(super) fn new(sg: &SignedGraph, ht: &SignedGraph) -> Self {
        let n = sg.vertex_count();
        let nh = ht.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for &(u, v, sign) in sg.edges() {
            adj[u.max(v)].push((u.min(v), sign));
        }
        let mut h_sign = vec![None; nh * nh];
        for &(a, b, sign) in ht.edges() {
            h_sign[a * nh + b] = Some(sign);
            h_sign[b * nh + a] = Some(sign);
        }
        SignedInstance { n, nh, adj, h_sign }
    }
}

impl Instance for SignedInstance {
    type Token = Sign;

    fn source_count(&self) -> usize {
        self.n
    }

    fn target_count(&self) -> usize {
        self.nh
    }

    fn earlier_neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    fn parity(&self, sign: Sign, cv: usize, cn: usize) -> Option<bool> {
        self.h_sign[cv * self.nh + cn].map(|target| sign != target)
    }
}

#[derive(Debug)]
pub(super) struct Solution {
    pub(super) mapping: Vec<usize>,
    /// Normalized modifier membership (lowest vertex per class out).
    pub(super) modifier_bits: Vec<bool>,
}

/// Runs the search; `Ok(None)` is a proof of absence, `Err(BudgetExceeded)`
/// an explicit "don't know" after `budget` assignment attempts.
pub(super) fn run<P: Instance>(problem: &P, budget: u64) -> Result<Option<Solution>> {
    let n = problem.source_count();
    let mut searcher = Searcher {
        problem,
        assign: vec![usize::MAX; n],
        dsu: RollbackDsu::new(n),
        nodes: 0,
        budget,
    };
    match searcher.solve(0)? {
        Step::Found => Ok(Some(Solution {
            mapping: searcher.assign,
            modifier_bits: searcher.dsu.normalized_bits(),
        })),
        Step::Fail(_) => Ok(None),
    }
}

enum Step {
    Found,
    /// Dead end; the set holds every assigned variable the failure depends
    /// on. An empty set means unconditionally unsatisfiable.
    Fail(BitSet),
}

struct Searcher<'a, P: Instance> {
    problem: &'a P,
    assign: Vec<usize>,
    dsu: RollbackDsu,
    nodes: u64,
    budget: u64,
}

impl<P: Instance> Searcher<'_, P> {
    fn solve(&mut self, depth: usize) -> Result<Step> {
        if depth == self.assign.len() {
            return Ok(Step::Found);
        }
        let v = depth;
        let mut conflicts = BitSet::new(self.assign.len());
        for candidate in 0..self.problem.target_count() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                });
            }
            let mark = self.dsu.mark();
            let mut consistent = true;
            for &(nbr, token) in self.problem.earlier_neighbors(v) {
                let cn = self.assign[nbr];
                debug_assert_ne!(cn, usize::MAX, "static order assigns lower vertices first");
                match self.problem.parity(token, candidate, cn) {
                    None => {
                        conflicts.insert(nbr);
                        consistent = false;
                        break;
                    }
                    Some(required) => {
                        if !self.dsu.union(v, nbr, required) {
                            // Parity clash: blame the chain of constraints
                            // linking v to nbr.
                            self.dsu.explain(v, nbr, &mut conflicts);
                            consistent = false;
                            break;
                        }
                    }
                }
            }
            if !consistent {
                self.dsu.rollback(mark);
                continue;
            }
            self.assign[v] = candidate;
            match self.solve(depth + 1)? {
                Step::Found => return Ok(Step::Found),
                Step::Fail(deeper) => {
                    self.assign[v] = usize::MAX;
                    self.dsu.rollback(mark);
                    if deeper.contains(v) {
                        conflicts.union_with(&deeper);
                    } else {
                        // v's value is irrelevant to that failure: jump.
                        return Ok(Step::Fail(deeper));
                    }
                }
            }
        }
        conflicts.remove(v);
        Ok(Step::Fail(conflicts))
    }
}

/// Union-find with parities, union by rank, no path compression, and a
/// trail for O(1)-per-entry rollback. Each successful union also logs its
/// originating constraint arc into an adjacency structure, which
/// [`RollbackDsu::explain`] searches to blame contradictions on concrete
/// vertices.
struct RollbackDsu {
    parent: Vec<usize>,
    /// Parity of the link to the parent.
    parity: Vec<bool>,
    rank: Vec<u32>,
    /// Constraint arcs added so far, as plain adjacency.
    adj: Vec<Vec<usize>>,
    trail: Vec<TrailEntry>,
    // Scratch space for breadth-first explanation walks.
    seen: Vec<u32>,
    seen_gen: u32,
    pred: Vec<usize>,
}

struct TrailEntry {
    attached: usize,
    target: usize,
    rank_bumped: bool,
    a: usize,
    b: usize,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
            adj: vec![Vec::new(); n],
            trail: Vec::new(),
            seen: vec![0; n],
            seen_gen: 0,
            pred: vec![0; n],
        }
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let entry = self.trail.pop().expect("trail is non-empty above the mark");
            self.parent[entry.attached] = entry.attached;
            self.parity[entry.attached] = false;
            if entry.rank_bumped {
                self.rank[entry.target] -= 1;
            }
            self.adj[entry.a].pop();
            self.adj[entry.b].pop();
        }
    }

    fn find(&self, v: usize) -> (usize, bool) {
        let mut x = v;
        let mut p = false;
        while self.parent[x] != x {
            p ^= self.parity[x];
            x = self.parent[x];
        }
        (x, p)
    }

    /// Adds the constraint "a and b differ by `required`". False on
    /// contradiction (nothing is modified in that case).
    fn union(&mut self, a: usize, b: usize, required: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == required;
        }
        let link_parity = pa ^ pb ^ required;
        let (attached, target) = if self.rank[ra] <= self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[attached] = target;
        self.parity[attached] = link_parity;
        let rank_bumped = self.rank[ra] == self.rank[rb];
        if rank_bumped {
            self.rank[target] += 1;
        }
        self.adj[a].push(b);
        self.adj[b].push(a);
        self.trail.push(TrailEntry {
            attached,
            target,
            rank_bumped,
            a,
            b,
        });
        true
    }

    /// Inserts into `out` the vertices of a constraint path from `from` to
    /// `to`. Both ends share a class, and classes grow only through logged
    /// constraint arcs, so a path always exists; every vertex on it helped
    /// derive the clashing parity relation.
    fn explain(&mut self, from: usize, to: usize, out: &mut BitSet) {
        self.seen_gen += 1;
        let gen = self.seen_gen;
        self.seen[from] = gen;
        let mut queue = VecDeque::new();
        queue.push_back(from);
        'bfs: while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if self.seen[y] != gen {
                    self.seen[y] = gen;
                    self.pred[y] = x;
                    if y == to {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        debug_assert_eq!(
            self.seen[to], gen,
            "clashing vertices share a constraint component"
        );
        let mut x = to;
        loop {
            out.insert(x);
            if x == from {
                break;
            }
            x = self.pred[x];
        }
    }

    /// Membership bits per vertex, lowest vertex of each class normalized
    /// to `false`.
    fn normalized_bits(&self) -> Vec<bool> {
        let n = self.parent.len();
        let mut offset: Vec<Option<bool>> = vec![None; n];
        let mut bits = vec![false; n];
        for (v, bit) in bits.iter_mut().enumerate() {
            let (root, parity) = self.find(v);
            let base = *offset[root].get_or_insert(parity);
            *bit = parity ^ base;
        }
        bits
    }
}

/// Plain fixed-capacity bit set over variable indices.
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        if let Some(word) = self.words.get_mut(i / 64) {
            *word &= !(1 << (i % 64));
        }
    }

    fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    fn union_with(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }
}

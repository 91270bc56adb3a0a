//! Pushable and switchable homomorphisms: checking a given mapping and
//! searching for one.
//!
//! A mapping `f` is a *pushable homomorphism* from `g` to `h` when some
//! push set `S` makes `f` an ordinary arc-preserving homomorphism from
//! `push(g, S)` to `h`. Each arc of `g` then forces one bit of information
//! — its image either sits in `h` the right way round (endpoints of the arc
//! agree about membership in `S`) or reversed (they differ) — so checking a
//! mapping is a parity-constraint problem over the vertices of `g`, solved
//! here with a union-find that tracks parities. Switchable homomorphisms of
//! signed graphs work the same way with "reversed" replaced by "sign
//! flipped".
//!
//! Searching for a mapping is genuinely combinatorial; [`search_pushable_hom`]
//! runs a backtracking search in lexicographic order with conflict-directed
//! backjumping (see the `search` submodule) under an explicit node budget.

use alloc::vec;
use alloc::vec::Vec;

use crate::equiv::{bits_to_set, fundamental_ordered_cycles};
use crate::error::{Error, Result};
use crate::graph::{OrderedClosedWalk, OrientedGraph, PushSet, VertexSet};
use crate::signed::{SignedGraph, SwitchSet};

mod search;

/// A total map from the vertices of a source graph to those of a target,
/// stored as the image vector `v -> image[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMapping {
    image: Vec<usize>,
}

impl VertexMapping {
    /// Validates that every image lies below `target_count`.
    pub fn new(image: Vec<usize>, target_count: usize) -> Result<Self> {
        for &w in &image {
            if w >= target_count {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    limit: target_count,
                });
            }
        }
        Ok(VertexMapping { image })
    }

    pub fn identity(n: usize) -> Self {
        VertexMapping {
            image: (0..n).collect(),
        }
    }

    pub fn domain_count(&self) -> usize {
        self.image.len()
    }

    pub fn of(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }
}

/// A successful pushable or switchable homomorphism: the vertex mapping
/// plus the modifier set (push set for oriented graphs, switch set for
/// signed ones) that makes it arc- or sign-preserving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomWitness {
    pub mapping: VertexMapping,
    pub modifier: VertexSet,
}

fn check_domain(f: &VertexMapping, source_count: usize, target_count: usize) -> Result<()> {
    if f.domain_count() != source_count {
        return Err(Error::MappingSizeMismatch {
            expected: source_count,
            found: f.domain_count(),
        });
    }
    for &w in f.images() {
        if w >= target_count {
            return Err(Error::VertexOutOfRange {
                vertex: w,
                limit: target_count,
            });
        }
    }
    Ok(())
}

/// Plain homomorphism test: every arc of `g` maps onto an arc of `h`.
pub fn is_homomorphism(g: &OrientedGraph, h: &OrientedGraph, f: &VertexMapping) -> Result<bool> {
    check_domain(f, g.vertex_count(), h.vertex_count())?;
    Ok(g.arcs().iter().all(|&(u, v)| h.has_arc(f.of(u), f.of(v))))
}

/// Sign-preserving homomorphism test: every edge of `sg` maps onto an edge
/// of `ht` with the same sign.
pub fn is_sign_preserving_hom(
    sg: &SignedGraph,
    ht: &SignedGraph,
    f: &VertexMapping,
) -> Result<bool> {
    check_domain(f, sg.vertex_count(), ht.vertex_count())?;
    Ok(sg
        .edges()
        .iter()
        .all(|&(u, v, sign)| ht.sign_of(f.of(u), f.of(v)) == Some(sign)))
}

/// Union-find over source vertices carrying a parity relative to the root:
/// "these two vertices agree/disagree about membership in the modifier".
struct ParityDsu {
    parent: Vec<usize>,
    /// Parity of the edge to the parent.
    parity: Vec<bool>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            parity: vec![false; n],
        }
    }

    fn find(&mut self, v: usize) -> (usize, bool) {
        if self.parent[v] == v {
            return (v, false);
        }
        let (root, above) = self.find(self.parent[v]);
        let total = self.parity[v] ^ above;
        self.parent[v] = root;
        self.parity[v] = total;
        (root, total)
    }

    /// Requires `a` and `b` to differ by parity `p`; false on contradiction.
    fn union(&mut self, a: usize, b: usize, p: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == p;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ p;
        true
    }

    /// Normalized membership bits: in every class the lowest vertex gets
    /// `false`, the unique representative of the two complementary choices.
    fn normalized_bits(&mut self) -> Vec<bool> {
        let n = self.parent.len();
        let mut offset: Vec<Option<bool>> = vec![None; n];
        let mut bits = vec![false; n];
        for (v, bit) in bits.iter_mut().enumerate() {
            let (root, parity) = self.find(v);
            // Ascending scan: the first vertex seen per class is its lowest.
            let base = *offset[root].get_or_insert(parity);
            *bit = parity ^ base;
        }
        bits
    }
}

/// Checks whether `f` is a pushable homomorphism from `g` to `h`; on
/// success returns the unique normalized push set `S` (lowest vertex of
/// each component of `g` outside `S`) with `f` a homomorphism from
/// `push(g, S)` to `h`.
pub fn check_pushable_hom(
    g: &OrientedGraph,
    h: &OrientedGraph,
    f: &VertexMapping,
) -> Result<Option<PushSet>> {
    check_domain(f, g.vertex_count(), h.vertex_count())?;
    let mut dsu = ParityDsu::new(g.vertex_count());
    for &(u, v) in g.arcs() {
        let (fu, fv) = (f.of(u), f.of(v));
        let flip = if h.has_arc(fu, fv) {
            false
        } else if h.has_arc(fv, fu) {
            true
        } else {
            return Ok(None);
        };
        if !dsu.union(u, v, flip) {
            return Ok(None);
        }
    }
    Ok(Some(bits_to_set(&dsu.normalized_bits())))
}

/// Signed counterpart of [`check_pushable_hom`]: on success returns the
/// normalized switch set making `f` sign-preserving from `switch(sg, S)`
/// to `ht`.
pub fn check_switchable_hom(
    sg: &SignedGraph,
    ht: &SignedGraph,
    f: &VertexMapping,
) -> Result<Option<SwitchSet>> {
    check_domain(f, sg.vertex_count(), ht.vertex_count())?;
    let mut dsu = ParityDsu::new(sg.vertex_count());
    for &(u, v, sign) in sg.edges() {
        let flip = match ht.sign_of(f.of(u), f.of(v)) {
            Some(target_sign) => sign != target_sign,
            None => return Ok(None),
        };
        if !dsu.union(u, v, flip) {
            return Ok(None);
        }
    }
    Ok(Some(bits_to_set(&dsu.normalized_bits())))
}

/// The walk family that characterizes pushable homomorphisms: every arc as
/// a two-vertex closed walk, then one fundamental ordered cycle per
/// non-forest edge.
pub fn default_directability_basis(g: &OrientedGraph) -> Vec<OrderedClosedWalk> {
    let mut basis: Vec<OrderedClosedWalk> = g
        .arcs()
        .iter()
        .map(|&(u, v)| OrderedClosedWalk::new(vec![u, v]).expect("two vertices"))
        .collect();
    basis.extend(fundamental_ordered_cycles(g));
    basis
}

/// Walk-based test for pushable homomorphisms: `f` passes when every arc
/// of `g` maps to an adjacent pair in `h` and every supplied walk maps to a
/// valid walk of `h` in the same directability class.
///
/// Against the basis from [`default_directability_basis`] this agrees with
/// [`check_pushable_hom`]: walk classes add up over the cycle space, so the
/// fundamental cycles pin down every closed walk's behaviour.
pub fn preserves_directability(
    g: &OrientedGraph,
    h: &OrientedGraph,
    f: &VertexMapping,
    walks: &[OrderedClosedWalk],
) -> Result<bool> {
    check_domain(f, g.vertex_count(), h.vertex_count())?;
    for &(u, v) in g.arcs() {
        if !h.adjacent(f.of(u), f.of(v)) {
            return Ok(false);
        }
    }
    for walk in walks {
        let class = g.classify_walk(walk)?;
        let image = OrderedClosedWalk::new(walk.vertices().iter().map(|&v| f.of(v)).collect())
            .expect("image walk has the same length");
        match h.classify_walk(&image) {
            Ok(image_class) => {
                if class != image_class {
                    return Ok(false);
                }
            }
            // The image leaves h: not a valid walk, hence not preserved.
            Err(Error::NotAdjacent { .. }) => return Ok(false),
            Err(other) => return Err(other),
        }
    }
    Ok(true)
}

/// Default node budget for the homomorphism searches: matches the scale of
/// the gadget instances the reductions module verifies.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Finds the lexicographically least pushable homomorphism from `g` to `h`
/// (by image vector; ties cannot happen since the modifier is determined),
/// or `None` when no mapping works. `Err(BudgetExceeded)` after
/// [`DEFAULT_NODE_BUDGET`] search nodes — an explicit "don't know".
pub fn search_pushable_hom(g: &OrientedGraph, h: &OrientedGraph) -> Result<Option<HomWitness>> {
    search_pushable_hom_with_budget(g, h, DEFAULT_NODE_BUDGET)
}

pub fn search_pushable_hom_with_budget(
    g: &OrientedGraph,
    h: &OrientedGraph,
    budget: u64,
) -> Result<Option<HomWitness>> {
    let outcome = search::run(&search::OrientedInstance::new(g, h), budget)?;
    wrap_outcome(outcome, h.vertex_count())
}

/// Signed counterpart of [`search_pushable_hom`].
pub fn search_switchable_hom(sg: &SignedGraph, ht: &SignedGraph) -> Result<Option<HomWitness>> {
    search_switchable_hom_with_budget(sg, ht, DEFAULT_NODE_BUDGET)
}

pub fn search_switchable_hom_with_budget(
    sg: &SignedGraph,
    ht: &SignedGraph,
    budget: u64,
) -> Result<Option<HomWitness>> {
    let outcome = search::run(&search::SignedInstance::new(sg, ht), budget)?;
    wrap_outcome(outcome, ht.vertex_count())
}

fn wrap_outcome(
    outcome: Option<search::Solution>,
    target_count: usize,
) -> Result<Option<HomWitness>> {
    match outcome {
        Some(solution) => Ok(Some(HomWitness {
            mapping: VertexMapping::new(solution.mapping, target_count)?,
            modifier: bits_to_set(&solution.modifier_bits),
        })),
        None => Ok(None),
    }
}

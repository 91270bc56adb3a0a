//! Signed graphs, switching, and the correspondence with oriented graphs.
//!
//! Switching a vertex set negates exactly the edges of its cut, the direct
//! analog of pushing. On bipartite graphs the two worlds translate into
//! each other: fix a bipartition (A, B), read an arc from A to B as a
//! positive edge and an arc from B to A as a negative one. [`to_signed`]
//! and [`to_oriented`] implement the two directions of that dictionary.

use alloc::vec::Vec;
use core::fmt;

use crate::equiv::{align_bits, bits_to_set, spanning_forest};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, OrderedClosedWalk, OrientedGraph, SimpleGraph, VertexSet};

/// Vertex set in its role on signed graphs.
pub type SwitchSet = VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// The product of two signs.
    #[must_use]
    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A simple graph whose edges carry a [`Sign`]. Edges are stored as
/// `(u, v, sign)` with `u < v`, sorted by endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<(usize, usize, Sign)>,
}

impl SignedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, Sign)>) -> Result<Self> {
        let mut list: Vec<(usize, usize, Sign)> = Vec::new();
        for (a, b, sign) in edges {
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
            list.push((a.min(b), a.max(b), sign));
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
                return Err(Error::DuplicateEdge {
                    u: w[0].0,
                    v: w[0].1,
                });
            }
        }
        Ok(SignedGraph { n, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v, sign)` with `u < v`, ascending by endpoints.
    pub fn edges(&self) -> &[(usize, usize, Sign)] {
        &self.edges
    }

    pub fn sign_of(&self, u: usize, v: usize) -> Option<Sign> {
        let (a, b) = (u.min(v), u.max(v));
        self.edges
            .binary_search_by(|&(x, y, _)| (x, y).cmp(&(a, b)))
            .ok()
            .map(|i| self.edges[i].2)
    }

    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.edges.iter().map(|&(u, v, _)| (u, v)))
            .expect("signed graph is already simple")
    }

    /// Negates exactly the edges with one endpoint in `s`. Shares all the
    /// algebra of pushing: involution, complement-blind, and composition by
    /// symmetric difference.
    pub fn switch(&self, s: &SwitchSet) -> Result<SignedGraph> {
        s.check_range(self.n)?;
        let edges = self
            .edges
            .iter()
            .map(|&(u, v, sign)| {
                if s.contains(u) != s.contains(v) {
                    (u, v, sign.negate())
                } else {
                    (u, v, sign)
                }
            })
            .collect();
        Ok(SignedGraph { n: self.n, edges })
    }

    /// Product of edge signs along a closed walk, with multiplicity: an
    /// edge used twice contributes twice. Switch invariant for the same
    /// reason walk classification is push invariant.
    pub fn sign_of_walk(&self, walk: &OrderedClosedWalk) -> Result<Sign> {
        let mut product = Sign::Plus;
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
            match self.sign_of(x, y) {
                Some(sign) => product = product.times(sign),
                None => return Err(Error::NotAdjacent { u: x, v: y }),
            }
        }
        Ok(product)
    }
}

/// Outcome of a switch-equivalence test; mirror of
/// [`crate::equiv::PushDecision`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SwitchDecision {
    /// Switching this set carries the first graph onto the second;
    /// normalized so each component's lowest vertex stays outside.
    Equivalent(SwitchSet),
    /// Different underlying graphs.
    DifferentUnderlying,
    /// Same underlying graph, but this edge's sign disagrees with the
    /// forced tree alignment.
    Mismatch { edge: (usize, usize) },
}

impl SwitchDecision {
    pub fn witness(&self) -> Option<&SwitchSet> {
        match self {
            SwitchDecision::Equivalent(s) => Some(s),
            _ => None,
        }
    }
}

/// Decides whether some switch set carries `sg1` onto `sg2`, by the same
/// forest alignment as the push decision with "orientations differ"
/// replaced by "signs differ".
pub fn decide_switch_equivalent(sg1: &SignedGraph, sg2: &SignedGraph) -> Result<SwitchDecision> {
    if sg1.vertex_count() != sg2.vertex_count() {
        return Err(Error::VertexCountMismatch {
            left: sg1.vertex_count(),
            right: sg2.vertex_count(),
        });
    }
    let under = sg1.underlying();
    if under != sg2.underlying() {
        return Ok(SwitchDecision::DifferentUnderlying);
    }
    let forest = spanning_forest(&under);
    let bits = align_bits(&forest, |p, c| sg1.sign_of(p, c) != sg2.sign_of(p, c));
    for &(u, v) in under.edges() {
        let must_flip = sg1.sign_of(u, v) != sg2.sign_of(u, v);
        if bits[u] ^ bits[v] != must_flip {
            return Ok(SwitchDecision::Mismatch { edge: (u, v) });
        }
    }
    Ok(SwitchDecision::Equivalent(bits_to_set(&bits)))
}

/// Reads an oriented graph as a signed graph through a bipartition: an arc
/// from side A to side B becomes a positive edge, an arc from B to A a
/// negative one. Every arc must cross the bipartition.
pub fn to_signed(g: &OrientedGraph, p: &Bipartition) -> Result<SignedGraph> {
    if p.vertex_count() != g.vertex_count() {
        return Err(Error::VertexCountMismatch {
            left: g.vertex_count(),
            right: p.vertex_count(),
        });
    }
    let edges = g
        .arcs()
        .iter()
        .map(|&(x, y)| match (p.in_part_a(x), p.in_part_a(y)) {
            (true, false) => Ok((x, y, Sign::Plus)),
            (false, true) => Ok((x, y, Sign::Minus)),
            _ => Err(Error::PartitionMismatch {
                u: x.min(y),
                v: x.max(y),
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    SignedGraph::new(g.vertex_count(), edges)
}

/// The inverse dictionary: a positive edge becomes an arc from its A-side
/// endpoint to its B-side endpoint, a negative edge the reverse. Every
/// edge must cross the bipartition.
pub fn to_oriented(sg: &SignedGraph, p: &Bipartition) -> Result<OrientedGraph> {
    if p.vertex_count() != sg.vertex_count() {
        return Err(Error::VertexCountMismatch {
            left: sg.vertex_count(),
            right: p.vertex_count(),
        });
    }
    let arcs = sg
        .edges()
        .iter()
        .map(|&(u, v, sign)| {
            let (a, b) = match (p.in_part_a(u), p.in_part_a(v)) {
                (true, false) => (u, v),
                (false, true) => (v, u),
                _ => return Err(Error::PartitionMismatch { u, v }),
            };
            Ok(match sign {
                Sign::Plus => (a, b),
                Sign::Minus => (b, a),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    OrientedGraph::new(sg.vertex_count(), arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Balance;
    use alloc::vec;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn walk(vs: &[usize]) -> OrderedClosedWalk {
        OrderedClosedWalk::new(vs.to_vec()).unwrap()
    }

    fn plus_cycle(n: usize) -> SignedGraph {
        let mut edges: Vec<(usize, usize, Sign)> =
            (0..n - 1).map(|i| (i, i + 1, Sign::Plus)).collect();
        edges.push((0, n - 1, Sign::Plus));
        SignedGraph::new(n, edges).unwrap()
    }

    #[test]
    fn switching_negates_exactly_the_cut() {
        let e = SignedGraph::new(2, [(0, 1, Sign::Plus)]).unwrap();
        assert_eq!(
            e.switch(&set(&[0])).unwrap().edges(),
            &[(0, 1, Sign::Minus)]
        );
        assert_eq!(e.switch(&set(&[])).unwrap(), e);
        assert_eq!(e.switch(&set(&[0, 1])).unwrap(), e);

        let c4 = plus_cycle(4);
        let switched = c4.switch(&set(&[0, 1])).unwrap();
        assert_eq!(
            switched.edges(),
            &[
                (0, 1, Sign::Plus),
                (0, 3, Sign::Minus),
                (1, 2, Sign::Minus),
                (2, 3, Sign::Plus)
            ]
        );
    }

    #[test]
    fn switch_laws() {
        let sg = SignedGraph::new(
            4,
            [
                (0, 1, Sign::Plus),
                (1, 2, Sign::Minus),
                (2, 3, Sign::Plus),
                (0, 3, Sign::Minus),
            ],
        )
        .unwrap();
        for bits in 0u32..16 {
            let s: VertexSet = (0..4).filter(|v| bits >> v & 1 == 1).collect();
            let once = sg.switch(&s).unwrap();
            assert_eq!(once.switch(&s).unwrap(), sg);
            assert_eq!(sg.switch(&s.complement(4)).unwrap(), once);
            for bits2 in 0u32..16 {
                let t: VertexSet = (0..4).filter(|v| bits2 >> v & 1 == 1).collect();
                assert_eq!(
                    once.switch(&t).unwrap(),
                    sg.switch(&s.symmetric_difference(&t)).unwrap()
                );
            }
        }
    }

    #[test]
    fn walk_signs_multiply_with_multiplicity() {
        let tri = SignedGraph::new(
            3,
            [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (0, 2, Sign::Plus)],
        )
        .unwrap();
        assert_eq!(tri.sign_of_walk(&walk(&[0, 1, 2])).unwrap(), Sign::Plus);

        let tri_minus = SignedGraph::new(
            3,
            [(0, 1, Sign::Minus), (1, 2, Sign::Plus), (0, 2, Sign::Plus)],
        )
        .unwrap();
        assert_eq!(
            tri_minus.sign_of_walk(&walk(&[0, 1, 2])).unwrap(),
            Sign::Minus
        );
        // The minus edge traversed twice cancels.
        assert_eq!(
            tri_minus.sign_of_walk(&walk(&[0, 1, 0, 2])).unwrap(),
            Sign::Plus
        );

        assert_eq!(
            tri.sign_of_walk(&walk(&[0, 1, 1])).unwrap_err(),
            Error::NotAdjacent { u: 1, v: 1 }
        );
    }

    #[test]
    fn walk_sign_is_switch_invariant() {
        let sg = SignedGraph::new(
            4,
            [
                (0, 1, Sign::Plus),
                (1, 2, Sign::Minus),
                (2, 3, Sign::Plus),
                (0, 3, Sign::Plus),
            ],
        )
        .unwrap();
        let w = walk(&[0, 1, 2, 3]);
        let base = sg.sign_of_walk(&w).unwrap();
        for bits in 0u32..16 {
            let s: VertexSet = (0..4).filter(|v| bits >> v & 1 == 1).collect();
            assert_eq!(sg.switch(&s).unwrap().sign_of_walk(&w).unwrap(), base);
        }
    }

    #[test]
    fn switch_decision_mirrors_the_push_decision() {
        let c4 = plus_cycle(4);
        let switched = c4.switch(&set(&[2])).unwrap();
        assert_eq!(
            decide_switch_equivalent(&c4, &switched).unwrap(),
            SwitchDecision::Equivalent(set(&[2]))
        );

        // One negative edge flips the cycle sign, a switch invariant.
        let odd_one = SignedGraph::new(
            4,
            [
                (0, 1, Sign::Minus),
                (1, 2, Sign::Plus),
                (2, 3, Sign::Plus),
                (0, 3, Sign::Plus),
            ],
        )
        .unwrap();
        assert!(matches!(
            decide_switch_equivalent(&c4, &odd_one).unwrap(),
            SwitchDecision::Mismatch { .. }
        ));

        let tri = SignedGraph::new(
            4,
            [(0, 1, Sign::Plus), (1, 2, Sign::Plus), (0, 2, Sign::Plus)],
        )
        .unwrap();
        assert_eq!(
            decide_switch_equivalent(&c4, &tri).unwrap(),
            SwitchDecision::DifferentUnderlying
        );

        // Trees: any two sign patterns are switch equivalent.
        let t1 = SignedGraph::new(3, [(0, 1, Sign::Plus), (1, 2, Sign::Minus)]).unwrap();
        let t2 = SignedGraph::new(3, [(0, 1, Sign::Minus), (1, 2, Sign::Plus)]).unwrap();
        let s = decide_switch_equivalent(&t1, &t2).unwrap();
        let s = s.witness().expect("trees always align");
        assert_eq!(t1.switch(s).unwrap(), t2);
        assert!(!s.contains(0));
    }

    #[test]
    fn dictionary_on_a_directed_four_cycle() {
        let dc4 = OrientedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p = dc4.underlying_bipartition().unwrap();
        assert_eq!(p.part_a(), vec![0, 2]);
        let sg = to_signed(&dc4, &p).unwrap();
        assert_eq!(
            sg.edges(),
            &[
                (0, 1, Sign::Plus),
                (0, 3, Sign::Minus),
                (1, 2, Sign::Minus),
                (2, 3, Sign::Plus)
            ]
        );
        assert_eq!(to_oriented(&sg, &p).unwrap(), dc4);
    }

    #[test]
    fn dictionary_round_trips_both_ways() {
        let base =
            SimpleGraph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (1, 4)]).unwrap();
        let p = base.bipartition().unwrap();
        for mask in 0u64..1 << 7 {
            let g = base.orientation_from_mask(mask).unwrap();
            let sg = to_signed(&g, &p).unwrap();
            assert_eq!(to_oriented(&sg, &p).unwrap(), g);
            assert_eq!(to_signed(&to_oriented(&sg, &p).unwrap(), &p).unwrap(), sg);
        }
    }

    #[test]
    fn swapping_the_partition_lands_in_the_same_class() {
        let base = SimpleGraph::cycle(6).unwrap();
        let p = base.bipartition().unwrap();
        let swapped = Bipartition::from_part_a(6, &set(&[1, 3, 5])).unwrap();
        for mask in 0u64..1 << 6 {
            let g = base.orientation_from_mask(mask).unwrap();
            let sg1 = to_signed(&g, &p).unwrap();
            let sg2 = to_signed(&g, &swapped).unwrap();
            assert!(
                decide_switch_equivalent(&sg1, &sg2)
                    .unwrap()
                    .witness()
                    .is_some(),
                "partition choice only moves within the switch class"
            );

            let back1 = to_oriented(&sg1, &p).unwrap();
            let back2 = to_oriented(&sg1, &swapped).unwrap();
            assert!(crate::equiv::decide_push_equivalent(&back1, &back2)
                .unwrap()
                .witness()
                .is_some());
        }
    }

    #[test]
    fn unbalanced_cycles_are_exactly_the_negative_ones() {
        for base in [
            SimpleGraph::cycle(4).unwrap(),
            SimpleGraph::cycle(6).unwrap(),
        ] {
            let n = base.vertex_count();
            let p = base.bipartition().unwrap();
            let w = walk(&(0..n).collect::<Vec<_>>());
            for mask in 0u64..1 << n {
                let g = base.orientation_from_mask(mask).unwrap();
                let sg = to_signed(&g, &p).unwrap();
                let unbalanced = g.balance_of_walk(&w).unwrap() == Balance::Unbalanced;
                assert_eq!(unbalanced, sg.sign_of_walk(&w).unwrap() == Sign::Minus);
            }
        }
    }

    #[test]
    fn dictionary_rejects_edges_inside_a_side() {
        let tri = OrientedGraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let p = Bipartition::from_part_a(3, &set(&[0])).unwrap();
        assert!(matches!(
            to_signed(&tri, &p),
            Err(Error::PartitionMismatch { .. })
        ));

        let sg = SignedGraph::new(3, [(0, 1, Sign::Plus), (1, 2, Sign::Plus)]).unwrap();
        let bad = Bipartition::from_part_a(3, &set(&[0, 1])).unwrap();
        assert_eq!(
            to_oriented(&sg, &bad).unwrap_err(),
            Error::PartitionMismatch { u: 0, v: 1 }
        );

        let short = Bipartition::from_part_a(2, &set(&[0])).unwrap();
        assert!(matches!(
            to_signed(&tri, &short),
            Err(Error::VertexCountMismatch { .. })
        ));
    }
}

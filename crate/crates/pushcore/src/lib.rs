//! Push operations on oriented graphs, switch operations on signed graphs,
//! and the homomorphism machinery built on top of them.
//!
//! An *oriented graph* is a digraph with no loops and no pair of opposite
//! arcs, i.e. an orientation of a simple graph. *Pushing* a vertex set S
//! reverses exactly the arcs with one endpoint in S. A *signed graph* is a
//! simple graph whose edges carry a sign; *switching* S negates exactly the
//! edges with one endpoint in S. Both operations generate equivalence
//! relations that this crate decides constructively, and both support a
//! notion of modifier-tolerant homomorphism (pushable / switchable) that the
//! [`homo`] module checks and searches for.
//!
//! The crate is `no_std` (it allocates, nothing more), so the combinatorics
//! can be reused from any host. All public operations are deterministic:
//! same input, same output, byte for byte.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod equiv;
pub mod error;
pub mod graph;
pub mod homo;
pub mod reductions;
pub mod signed;

pub use error::Error;
pub use graph::{
    Balance, Bipartition, Directability, OrderedClosedWalk, OrientedGraph, PushSet, SimpleGraph,
    VertexSet,
};
pub use signed::{Sign, SignedGraph, SwitchSet};

//! Exact star edge coloring of trees.
//!
//! A star edge coloring is a proper edge coloring in which no path with four
//! edges is bi-colored. For trees the star chromatic index is computed exactly:
//!
//! * [`ovs`] decides whether an outdegree-vertex sequence can be realized by an
//!   oriented graph and builds the leftmost greedy realization.
//! * [`two_h`] colors trees of diameter at most four (2H-trees) optimally by
//!   searching the smallest number of extra colors whose sequence is realizable.
//! * [`star_tree`] lifts the 2H result to arbitrary trees: the index of a tree is
//!   the largest index over its distance-two balls, and a level-by-level sweep
//!   produces a coloring attaining it.
//! * [`bounds`] has closed forms for special families and constructive colorings.
//! * [`oracle`] is independent ground truth: a definition-level validator, an
//!   exhaustive backtracking solver, and an enumerator of small unlabeled trees.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod coloring;
pub mod error;
pub mod oracle;
pub mod ovs;
pub mod star_tree;
pub mod tree;
pub mod two_h;

pub use coloring::{Color, EdgeColoring};
pub use error::{Error, Result};
pub use ovs::{OrientedGraph, Ovs};
pub use star_tree::{color_tree, star_index};
pub use tree::{RootedTree, Tree, TwoHProfile};
pub use two_h::{color_2h, min_k};

//! Star chromatic index and optimum coloring of arbitrary trees.
//!
//! The index of a tree equals the largest index among its distance-two balls
//! `T_v`, each a 2H-tree. A coloring with that many colors is built top-down:
//! the root's edges get `1..d(root)`, then every vertex `p`, taken level by
//! level, colors the edges below its children by realizing the 2H sequence of
//! `T_p` over the full palette. When `p` is not the root, the arcs leaving the
//! vertex of the parent edge's color are fixed in advance to the colors already
//! present at the parent.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::ovs::{realize_state, Ovs};
use crate::tree::{RootedTree, Tree};
use crate::two_h::min_k;

/// Star chromatic index of `tree`: the maximum 2H index over all `T_v`.
///
/// Identical local profiles are evaluated once. Returns 0 for a single vertex.
pub fn star_index(tree: &Tree) -> Result<usize> {
    let mut memo: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut best = 0;
    for v in 0..tree.vertex_count() {
        if tree.degree(v) == 0 {
            continue;
        }
        let profile = tree.two_ball(v)?;
        let index = match memo.get(profile.n()) {
            Some(&index) => index,
            None => {
                let index = profile.t() + min_k(&profile)?;
                memo.insert(profile.n().to_vec(), index);
                index
            }
        };
        best = best.max(index);
    }
    Ok(best)
}

/// Partial coloring of a rooted tree; `up[v]` is the color of the edge from
/// `v` to its parent (0 while uncolored).
struct LevelColoring<'a> {
    rooted: &'a RootedTree,
    palette: usize,
    up: Vec<Color>,
}

impl LevelColoring<'_> {
    fn edge_color(&self, p: usize, w: usize) -> Color {
        if self.rooted.parent(p) == Some(w) {
            self.up[p]
        } else {
            self.up[w]
        }
    }

    /// Colors at `v`, which must be fully colored.
    fn colors_at(&self, v: usize) -> BTreeSet<Color> {
        self.rooted.ordered_neighbors(v).iter().map(|&w| self.edge_color(v, w)).collect()
    }

    /// Colors every edge below the children of `p`.
    fn extend_at(&mut self, p: usize) -> Result<()> {
        let rooted = self.rooted;
        let tree = rooted.tree();
        let f = rooted.ordered_neighbors(p);
        let q: Vec<Color> = f.iter().map(|&w| self.edge_color(p, w)).collect();
        let at_p: BTreeSet<Color> = q.iter().copied().collect();
        let unused: Vec<Color> = (1..=self.palette).filter(|c| !at_p.contains(c)).collect();

        let mut entries: Vec<(usize, usize)> = unused.iter().map(|&c| (0, c)).collect();
        entries.extend(f.iter().zip(&q).map(|(&w, &c)| (tree.degree(w) - 1, c)));
        let ovs = Ovs::new(entries).map_err(|_| Error::Internal("colors at a vertex repeat"))?;

        let (preset, fixed) = match rooted.parent(p) {
            Some(g) => {
                let q1 = self.up[p];
                let arcs: Vec<(usize, usize)> =
                    self.colors_at(g).into_iter().filter(|&c| c != q1).map(|c| (q1, c)).collect();
                (arcs, vec![q1])
            }
            None => (Vec::new(), Vec::new()),
        };
        let state = realize_state(&ovs, &preset, &fixed).map_err(|e| match e {
            Error::NotRealizable(_) => Error::Internal("level extension is not realizable"),
            other => other,
        })?;

        for (&child, &c) in rooted.children(p).iter().zip(&q[f.len() - rooted.children(p).len()..]) {
            let below = rooted.children(child);
            if below.is_empty() {
                continue;
            }
            let mut chosen = state.out_neighbors_of(c).ok_or(Error::Internal("missing color vertex"))?;
            chosen.sort_unstable();
            // colors unused at p go on the trailing (highest-degree) children
            let (mut order, trailing): (Vec<Color>, Vec<Color>) =
                chosen.into_iter().partition(|c| !unused.contains(c));
            order.extend(trailing);
            if order.len() != below.len() {
                return Err(Error::Internal("out-degree differs from child count"));
            }
            for (&x, color) in below.iter().zip(order) {
                self.up[x] = color;
            }
        }
        Ok(())
    }
}

/// Optimum star edge coloring of `tree`, rooted at vertex 0.
///
/// Returns the palette size `m` (the star chromatic index) and a coloring
/// using exactly the colors `1..=m`.
pub fn color_tree(tree: &Tree) -> Result<(usize, EdgeColoring)> {
    color_tree_from(tree, 0)
}

/// [`color_tree`] with an explicit root.
pub fn color_tree_from(tree: &Tree, root: usize) -> Result<(usize, EdgeColoring)> {
    tree.check_vertex(root)?;
    let m = star_index(tree)?;
    if tree.edge_count() == 0 {
        return Ok((0, EdgeColoring::new(0)));
    }
    let rooted = tree.root_at(root)?;
    let mut state = LevelColoring { rooted: &rooted, palette: m, up: vec![0; tree.vertex_count()] };
    for (i, &w) in rooted.children(root).iter().enumerate() {
        state.up[w] = i + 1;
    }

    let mut order = rooted.bfs_order().to_vec();
    order.sort_by_key(|&v| (rooted.level(v), v));
    for p in order {
        if rooted.children(p).iter().any(|&c| !rooted.children(c).is_empty()) {
            state.extend_at(p)?;
        }
    }

    let mut coloring = EdgeColoring::new(m);
    for v in 0..tree.vertex_count() {
        if let Some(parent) = rooted.parent(v) {
            coloring.set(parent, v, state.up[v]);
        }
    }
    Ok((m, coloring))
}

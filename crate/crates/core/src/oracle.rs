//! Ground truth that does not go through the realization machinery: a
//! definition-level validator, an exhaustive solver for small trees and an
//! enumerator of unlabeled trees.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// Two edges at a vertex share a color. Witness: `[a, v, b]`.
    NotProper,
    /// A path with four edges uses two colors. Witness: its five vertices.
    BiColoredP4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub valid: bool,
    pub violation: Option<Violation>,
}

impl Verdict {
    fn ok() -> Verdict {
        Verdict { valid: true, violation: None }
    }

    fn fail(kind: ViolationKind, witness: Vec<usize>) -> Verdict {
        Verdict { valid: false, violation: Some(Violation { kind, witness }) }
    }

    pub fn is_valid(&self) -> bool {
        self.valid
    }
}

fn dfs_preorder(tree: &Tree) -> Vec<usize> {
    let mut order = Vec::with_capacity(tree.vertex_count());
    let mut seen = vec![false; tree.vertex_count()];
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        order.push(v);
        stack.extend(tree.neighbors(v).iter().rev().filter(|&&w| !seen[w]));
    }
    order
}

/// Checks `coloring` against the definition: proper, and no path with four
/// edges carries fewer than three colors. Trees have no cycles to check.
///
/// Vertices are scanned in DFS preorder from vertex 0; the first violation
/// found is reported with its witness.
pub fn validate_coloring(tree: &Tree, coloring: &EdgeColoring) -> Result<Verdict> {
    coloring.check_shape(tree)?;
    let color = |u: usize, v: usize| coloring.get(u, v).expect("shape checked");
    let order = dfs_preorder(tree);

    // color -> neighbor, per vertex
    let mut by_color: Vec<BTreeMap<Color, usize>> = vec![BTreeMap::new(); tree.vertex_count()];
    for &v in &order {
        for &w in tree.neighbors(v) {
            if let Some(&other) = by_color[v].get(&color(v, w)) {
                return Ok(Verdict::fail(ViolationKind::NotProper, vec![other, v, w]));
            }
            by_color[v].insert(color(v, w), w);
        }
    }

    // A proper four-edge path v0 v1 v2 v3 v4 is bi-colored iff
    // c(v0 v1) = c(v2 v3) and c(v3 v4) = c(v1 v2).
    for &v2 in &order {
        for &v1 in tree.neighbors(v2) {
            for &v3 in tree.neighbors(v2) {
                if v1 == v3 {
                    continue;
                }
                let (a, b) = (color(v1, v2), color(v2, v3));
                if let (Some(&v0), Some(&v4)) = (by_color[v1].get(&b), by_color[v3].get(&a)) {
                    return Ok(Verdict::fail(ViolationKind::BiColoredP4, vec![v0, v1, v2, v3, v4]));
                }
            }
        }
    }
    Ok(Verdict::ok())
}

/// Largest edge count [`exact_index_bruteforce`] accepts.
pub const BRUTEFORCE_EDGE_LIMIT: usize = 16;

struct Search {
    /// Earlier-ordered edges sharing a vertex with edge `i`.
    adjacent: Vec<Vec<usize>>,
    /// Four-edge paths (edge positions in path order) whose last-ordered edge is `i`.
    closing: Vec<Vec<[usize; 4]>>,
    colors: Vec<Color>,
    palette: usize,
}

impl Search {
    fn extend(&mut self, i: usize, max_used: Color) -> bool {
        if i == self.colors.len() {
            return true;
        }
        // a fresh color must be the next unused one
        for c in 1..=self.palette.min(max_used + 1) {
            if self.adjacent[i].iter().any(|&j| self.colors[j] == c) {
                continue;
            }
            self.colors[i] = c;
            let bicolored = self.closing[i].iter().any(|p| {
                self.colors[p[0]] == self.colors[p[2]] && self.colors[p[1]] == self.colors[p[3]]
            });
            if !bicolored && self.extend(i + 1, max_used.max(c)) {
                return true;
            }
        }
        self.colors[i] = 0;
        false
    }
}

/// Exact star chromatic index by exhaustive backtracking.
///
/// Edges are ordered breadth-first so each vertex's child edges are
/// contiguous. Palettes are tried from the maximum degree upwards; symmetric
/// color choices are pruned by introducing colors in increasing order. Only
/// the four-edge paths completed by the edge just colored are checked.
pub fn exact_index_bruteforce(tree: &Tree, max_colors: usize) -> Result<usize> {
    exact_coloring_bruteforce(tree, max_colors).map(|(m, _)| m)
}

/// [`exact_index_bruteforce`] that also returns the coloring it found.
pub fn exact_coloring_bruteforce(tree: &Tree, max_colors: usize) -> Result<(usize, EdgeColoring)> {
    let m = tree.edge_count();
    if m > BRUTEFORCE_EDGE_LIMIT {
        return Err(Error::TooLarge { size: m, limit: BRUTEFORCE_EDGE_LIMIT });
    }
    if m == 0 {
        return Ok((0, EdgeColoring::new(0)));
    }

    // breadth-first edge order from vertex 0
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut seen = vec![false; tree.vertex_count()];
    let mut queue = vec![0];
    seen[0] = true;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        for &w in tree.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                edges.push((v, w));
                queue.push(w);
            }
        }
    }
    let position: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &(u, v))| ((u.min(v), u.max(v)), i)).collect();
    let pos = |u: usize, v: usize| position[&(u.min(v), u.max(v))];

    let mut adjacent = vec![Vec::new(); m];
    for (i, &(u, v)) in edges.iter().enumerate() {
        for x in [u, v] {
            for &y in tree.neighbors(x) {
                let j = pos(x, y);
                if j < i {
                    adjacent[i].push(j);
                }
            }
        }
    }

    let mut closing = vec![Vec::new(); m];
    for path in four_edge_paths(tree) {
        let p = [pos(path[0], path[1]), pos(path[1], path[2]), pos(path[2], path[3]), pos(path[3], path[4])];
        let last = *p.iter().max().expect("four entries");
        closing[last].push(p);
    }

    for palette in tree.max_degree()..=max_colors {
        let mut search =
            Search { adjacent: adjacent.clone(), closing: closing.clone(), colors: vec![0; m], palette };
        if search.extend(0, 0) {
            let mut coloring = EdgeColoring::new(palette);
            for (&(u, v), &c) in edges.iter().zip(&search.colors) {
                coloring.set(u, v, c);
            }
            return Ok((palette, coloring));
        }
    }
    Err(Error::Exceeded { max_colors })
}

/// Every path with four edges, once per unordered pair of endpoints.
fn four_edge_paths(tree: &Tree) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    let mut path = [0usize; 5];
    fn walk(tree: &Tree, path: &mut [usize; 5], depth: usize, out: &mut Vec<[usize; 5]>) {
        if depth == 5 {
            if path[0] < path[4] {
                out.push(*path);
            }
            return;
        }
        let last = path[depth - 1];
        for &w in tree.neighbors(last) {
            if depth >= 2 && w == path[depth - 2] {
                continue;
            }
            path[depth] = w;
            walk(tree, path, depth + 1, out);
        }
    }
    for v in 0..tree.vertex_count() {
        path[0] = v;
        walk(tree, &mut path, 1, &mut out);
    }
    out
}

/// Largest vertex count [`enumerate_trees`] accepts.
pub const ENUMERATION_LIMIT: usize = 10;

/// Center vertices: one or two, found by stripping leaves.
pub fn centers(tree: &Tree) -> Vec<usize> {
    let n = tree.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in tree.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn encode(tree: &Tree, v: usize, parent: Option<usize>) -> String {
    let mut parts: Vec<String> = tree
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| encode(tree, w, Some(v)))
        .collect();
    parts.sort_unstable();
    let mut s = String::from("(");
    for p in parts {
        s.push_str(&p);
    }
    s.push(')');
    s
}

/// Parenthesis encoding rooted at a center, minimized over both centers.
/// Two trees are isomorphic iff their canonical forms are equal.
pub fn canonical_form(tree: &Tree) -> String {
    centers(tree).into_iter().map(|c| encode(tree, c, None)).min().unwrap_or_default()
}

/// Rebuilds a tree from a canonical form, numbering vertices in preorder.
fn from_canonical(code: &str) -> Tree {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        if ch == '(' {
            if let Some(&p) = stack.last() {
                edges.push((p, next));
            }
            stack.push(next);
            next += 1;
        } else {
            stack.pop();
        }
    }
    if edges.is_empty() {
        Tree::singleton()
    } else {
        Tree::from_edges(&edges).expect("canonical code encodes a tree")
    }
}

/// One representative per isomorphism class of trees on `n` vertices.
///
/// Trees are grown one leaf at a time and deduplicated by [`canonical_form`].
/// Representatives are numbered in preorder of their canonical encoding and
/// yielded in ascending encoding order.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Tree>> {
    if n == 0 {
        return Err(Error::Domain("trees need at least one vertex"));
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge { size: n, limit: ENUMERATION_LIMIT });
    }
    let mut layer: BTreeSet<String> = BTreeSet::from([String::from("()")]);
    for _ in 1..n {
        let mut next = BTreeSet::new();
        for code in &layer {
            let tree = from_canonical(code);
            let mut edges: Vec<(usize, usize)> = tree.edges().collect();
            let fresh = tree.vertex_count();
            for v in 0..fresh {
                edges.push((v, fresh));
                next.insert(canonical_form(&Tree::from_edges(&edges).expect("leaf attachment")));
                edges.pop();
            }
        }
        layer = next;
    }
    Ok(layer.into_iter().map(|code| from_canonical(&code)))
}

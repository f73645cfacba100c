//! Trees, rootings and distance-two profiles.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An undirected tree on the dense vertex ids `0..vertex_count`.
///
/// Adjacency lists are sorted ascending. A tree is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an edge list on 0-based consecutive ids.
    ///
    /// The vertex count is one more than the largest id; any id that never
    /// occurs makes the graph disconnected.
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Tree> {
        if edges.is_empty() {
            return Err(Error::EmptyEdgeList);
        }
        let vertex_count = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1;
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut components = DisjointSets::new(vertex_count);
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            if !components.union(u, v) {
                return Err(Error::CycleDetected { u, v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        if components.count > 1 {
            return Err(Error::Disconnected { components: components.count });
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Tree { adjacency })
    }

    /// The tree with one vertex and no edges.
    pub fn singleton() -> Tree {
        Tree { adjacency: vec![Vec::new()] }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len() - 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, vertex_count: self.vertex_count() })
        }
    }

    /// Distances (in edges) from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Roots the tree at `root` and computes levels and canonical neighbor order.
    pub fn root_at(&self, root: usize) -> Result<RootedTree> {
        self.check_vertex(root)?;
        let n = self.vertex_count();
        let mut parent = vec![None; n];
        let mut level = vec![0; n];
        let mut order = Vec::with_capacity(n);
        level[root] = 1;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &self.adjacency[v] {
                if level[w] == 0 {
                    level[w] = level[v] + 1;
                    parent[w] = Some(v);
                    order.push(w);
                }
            }
        }

        let ordered_neighbors = (0..n)
            .map(|v| {
                let mut rest: Vec<usize> =
                    self.adjacency[v].iter().copied().filter(|&w| Some(w) != parent[v]).collect();
                rest.sort_by_key(|&w| (self.degree(w), w));
                match parent[v] {
                    Some(p) => {
                        let mut list = Vec::with_capacity(rest.len() + 1);
                        list.push(p);
                        list.extend(rest);
                        list
                    }
                    None => rest,
                }
            })
            .collect();

        Ok(RootedTree { tree: self.clone(), root, parent, level, ordered_neighbors, order })
    }

    /// Profile of the 2H-tree induced on the vertices within distance two of `v`.
    pub fn two_ball(&self, v: usize) -> Result<TwoHProfile> {
        self.check_vertex(v)?;
        let mut neighbors: Vec<usize> = self.adjacency[v].clone();
        neighbors.sort_by_key(|&w| (self.degree(w), w));
        let children = neighbors
            .iter()
            .map(|&w| self.adjacency[w].iter().copied().filter(|&x| x != v).collect())
            .collect();
        let n = neighbors.iter().map(|&w| self.degree(w) - 1).collect();
        Ok(TwoHProfile { n, vertex_map: Some(TwoHVertexMap { root: v, neighbors, children }) })
    }

    /// True iff deleting every leaf leaves a (possibly empty) path.
    pub fn is_caterpillar(&self) -> bool {
        // Deleting the leaves of a tree leaves a tree, so it is a path exactly
        // when no inner vertex has three inner neighbors.
        (0..self.vertex_count()).filter(|&v| self.degree(v) > 1).all(|v| {
            self.adjacency[v].iter().filter(|&&w| self.degree(w) > 1).count() <= 2
        })
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    count: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), count: n }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.count -= 1;
        true
    }
}

/// A tree with a designated root.
///
/// `ordered_neighbors(v)` lists `f_1(v), ..., f_d(v)`: for a non-root vertex the
/// parent comes first and the children follow by ascending degree, ties broken
/// by vertex id. The root lists all neighbors in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
    parent: Vec<Option<usize>>,
    level: Vec<usize>,
    ordered_neighbors: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl RootedTree {
    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Distance to the root plus one; the root is on level 1.
    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    pub fn ordered_neighbors(&self, v: usize) -> &[usize] {
        &self.ordered_neighbors[v]
    }

    /// Children of `v` in canonical order.
    pub fn children(&self, v: usize) -> &[usize] {
        let list = &self.ordered_neighbors[v];
        if self.parent[v].is_some() {
            &list[1..]
        } else {
            list
        }
    }

    /// Vertices in breadth-first order from the root.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }
}

/// Concrete vertices behind a [`TwoHProfile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoHVertexMap {
    pub root: usize,
    /// Root neighbors, aligned with the profile positions.
    pub neighbors: Vec<usize>,
    /// Non-root neighbors of each root neighbor, ascending.
    pub children: Vec<Vec<usize>>,
}

/// The shape `T_{n_1,...,n_t}` of a 2H-tree: `t` root neighbors, the `i`-th
/// carrying `n_i` further edges, with `n_1 <= ... <= n_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoHProfile {
    n: Vec<usize>,
    vertex_map: Option<TwoHVertexMap>,
}

impl TwoHProfile {
    /// An abstract profile. The counts are sorted ascending.
    pub fn new(mut n: Vec<usize>) -> TwoHProfile {
        n.sort_unstable();
        TwoHProfile { n, vertex_map: None }
    }

    /// The regular 2H-tree `T_(r,t)`: `t` root neighbors of total degree `r`.
    pub fn regular(r: usize, t: usize) -> TwoHProfile {
        TwoHProfile::new(vec![r.saturating_sub(1); t])
    }

    pub fn t(&self) -> usize {
        self.n.len()
    }

    pub fn n(&self) -> &[usize] {
        &self.n
    }

    /// `sigma_t`, the number of edges at distance two from the root.
    pub fn sigma(&self) -> usize {
        self.n.iter().sum()
    }

    /// Largest `n_i`, or 0 for an empty profile.
    pub fn n_max(&self) -> usize {
        self.n.last().copied().unwrap_or(0)
    }

    /// Maximum degree of the 2H-tree: `max(t, n_t + 1)`.
    pub fn max_degree(&self) -> usize {
        if self.n.is_empty() {
            0
        } else {
            self.t().max(self.n_max() + 1)
        }
    }

    pub fn vertex_map(&self) -> Option<&TwoHVertexMap> {
        self.vertex_map.as_ref()
    }

    /// Builds the concrete 2H-tree: root 0, neighbors `1..=t` in profile order,
    /// then the leaves of each neighbor with consecutive ids.
    pub fn materialize(&self) -> Result<(Tree, TwoHProfile)> {
        if self.n.is_empty() {
            return Err(Error::Domain("a profile needs t >= 1 to describe a tree"));
        }
        let t = self.t();
        let mut edges = Vec::with_capacity(t + self.sigma());
        let mut children = Vec::with_capacity(t);
        let mut next = t + 1;
        for (i, &count) in self.n.iter().enumerate() {
            edges.push((0, i + 1));
            let leaves: Vec<usize> = (next..next + count).collect();
            edges.extend(leaves.iter().map(|&x| (i + 1, x)));
            next += count;
            children.push(leaves);
        }
        let tree = Tree::from_edges(&edges)?;
        let profile = TwoHProfile {
            n: self.n.clone(),
            vertex_map: Some(TwoHVertexMap { root: 0, neighbors: (1..=t).collect(), children }),
        };
        Ok((tree, profile))
    }
}

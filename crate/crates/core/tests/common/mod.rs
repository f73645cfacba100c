#![allow(dead_code)]

use rand::Rng;
use starcolor::Tree;

/// Decodes a Prüfer sequence over `0..seq.len() + 2`.
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &x in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Tree::from_edges(&edges).unwrap()
}

/// Uniform labeled tree on `n >= 2` vertices.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Tree {
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&seq)
}

/// Random caterpillar: a spine with leaves hung on random spine vertices.
pub fn random_caterpillar(rng: &mut impl Rng, max_vertices: usize) -> Tree {
    let n = rng.gen_range(2..=max_vertices);
    let spine = rng.gen_range(1..n);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for v in spine..n {
        edges.push((rng.gen_range(0..spine), v));
    }
    Tree::from_edges(&edges).unwrap()
}

pub fn path(edges: usize) -> Tree {
    Tree::from_edges(&(0..edges).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
}

/// Relabels vertices by `perm` (`perm[old] = new`).
pub fn relabel(tree: &Tree, perm: &[usize]) -> Tree {
    let edges: Vec<_> = tree.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Tree::from_edges(&edges).unwrap()
}

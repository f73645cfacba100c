//! Seeded tree generators. The same parameters and seed always give the
//! same tree.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use starcolor::{Result, Tree, TwoHProfile};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Tree with vertices `0..seq.len() + 2` whose Prüfer sequence is `seq`.
pub fn prufer_decode(seq: &[usize]) -> Result<Tree> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let Reverse(leaf) = leaves.pop().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Tree::from_edges(&edges)
}

/// Uniformly random labeled tree on `n >= 1` vertices.
pub fn random_tree_with(rng: &mut impl Rng, n: usize) -> Result<Tree> {
    match n {
        0 => Err(starcolor::Error::Domain("a tree needs at least one vertex")),
        1 => Ok(Tree::singleton()),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(&seq)
        }
    }
}

pub fn random_tree(n: usize, seed: u64) -> Result<Tree> {
    random_tree_with(&mut rng(seed), n)
}

/// Random caterpillar on `n >= 2` vertices: a spine `0..s` with every other
/// vertex attached to a random spine vertex.
pub fn caterpillar_with(rng: &mut impl Rng, n: usize) -> Result<Tree> {
    if n < 2 {
        return Err(starcolor::Error::Domain("a caterpillar needs at least two vertices"));
    }
    let spine = rng.gen_range(1..n);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    edges.extend((spine..n).map(|v| (rng.gen_range(0..spine), v)));
    Tree::from_edges(&edges)
}

pub fn caterpillar(n: usize, seed: u64) -> Result<Tree> {
    caterpillar_with(&mut rng(seed), n)
}

/// The 2H-tree with root degree `t` whose root neighbors all have degree `r`.
pub fn regular_2h(r: usize, t: usize) -> Result<Tree> {
    if r == 0 {
        return Err(starcolor::Error::Domain("regular 2H-tree needs r >= 1"));
    }
    from_profile(&TwoHProfile::regular(r, t))
}

pub fn from_profile(profile: &TwoHProfile) -> Result<Tree> {
    profile.materialize().map(|(tree, _)| tree)
}

/// Random 2H profile with `1 <= t <= max_t` and every `n_i <= max_n`.
pub fn random_profile_with(rng: &mut impl Rng, max_t: usize, max_n: usize) -> TwoHProfile {
    let t = rng.gen_range(1..=max_t);
    TwoHProfile::new((0..t).map(|_| rng.gen_range(0..=max_n)).collect())
}

//! Optimal star edge coloring of 2H-trees (trees of diameter at most four).
//!
//! Let the root `u` have neighbors `u_1..u_t` and color `u u_i` with `i`.
//! Coloring the edges below `u_i` amounts to choosing, for every `i`, a set of
//! `n_i` colors other than `i`; a bi-colored four-edge path `x u_i u u_j y`
//! exists exactly when color `j` is used below `u_i` and color `i` below
//! `u_j`. Reading "color `j` below `u_i`" as an arc `v_i -> v_j` turns a
//! `(t + k)`-star edge coloring into an oriented graph on `t + k` vertices with
//! outdegrees `n_1..n_t, 0, ..., 0`, and back. The index is therefore `t` plus
//! the least `k` for which that sequence is graphical.

use alloc::borrow::Cow;
use alloc::vec::Vec;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::ovs::{realize, OrientedGraph, Ovs};
use crate::tree::{Tree, TwoHProfile};

/// `D^+_k`: the new-color vertices `t+k, ..., t+1` (each prepended in turn)
/// with outdegree 0, followed by `(n_i, i)` for `i = 1..=t`.
pub fn extended_sequence(profile: &TwoHProfile, k: usize) -> Ovs {
    let t = profile.t();
    let mut entries = Vec::with_capacity(t + k);
    entries.extend((t + 1..=t + k).rev().map(|v| (0, v)));
    entries.extend(profile.n().iter().enumerate().map(|(i, &n)| (n, i + 1)));
    Ovs::new(entries).expect("vertex ids are distinct by construction")
}

/// Largest `k` the linear search may reach: `floor(3M/2) - t` with
/// `M = max(t, n_t + 1)`.
fn k_guard(profile: &TwoHProfile) -> usize {
    let m = profile.max_degree();
    (3 * m / 2).saturating_sub(profile.t())
}

fn search(profile: &TwoHProfile) -> Result<(usize, OrientedGraph)> {
    if profile.t() == 0 {
        return Err(Error::Domain("2H profile needs t >= 1"));
    }
    let guard = k_guard(profile);
    let mut k = 0;
    loop {
        match realize(&extended_sequence(profile, k)) {
            Ok(g) => return Ok((k, g)),
            Err(Error::NotRealizable(_)) if k < guard => k += 1,
            Err(Error::NotRealizable(_)) => {
                return Err(Error::Internal("extra-color search passed floor(3M/2) - t"))
            }
            Err(e) => return Err(e),
        }
    }
}

/// Smallest `k` such that `D^+_k` is graphical.
pub fn min_k(profile: &TwoHProfile) -> Result<usize> {
    search(profile).map(|(k, _)| k)
}

/// Result of [`color_2h`].
#[derive(Debug, Clone)]
pub struct TwoHColoring {
    /// Star chromatic index, `t + k`.
    pub index: usize,
    pub k: usize,
    /// The realization of `D^+_k` the coloring was read from.
    pub realization: OrientedGraph,
    /// Profile with concrete vertices (materialized when the input had none).
    pub profile: TwoHProfile,
    /// The tree the coloring lives on, when it had to be materialized.
    pub tree: Option<Tree>,
    pub coloring: EdgeColoring,
}

/// Optimum star edge coloring of the 2H-tree described by `profile`.
///
/// Abstract profiles are materialized first (see [`TwoHProfile::materialize`]).
pub fn color_2h(profile: &TwoHProfile) -> Result<TwoHColoring> {
    let (k, realization) = search(profile)?;
    let (tree, concrete) = match profile.vertex_map() {
        Some(_) => (None, profile.clone()),
        None => {
            let (tree, concrete) = profile.materialize()?;
            (Some(tree), concrete)
        }
    };
    let coloring = coloring_from_realization(&realization, &concrete)?;
    Ok(TwoHColoring { index: profile.t() + k, k, realization, profile: concrete, tree, coloring })
}

fn concrete(profile: &TwoHProfile) -> Result<Cow<'_, TwoHProfile>> {
    match profile.vertex_map() {
        Some(_) => Ok(Cow::Borrowed(profile)),
        None => Ok(Cow::Owned(profile.materialize()?.1)),
    }
}

/// Translates a realization of `D^+_k` into a `(t + k)`-star edge coloring:
/// `u u_i` gets color `i` and the edges below `u_i` get the out-neighbors of
/// `v_i`, both sides ascending.
pub fn coloring_from_realization(g: &OrientedGraph, profile: &TwoHProfile) -> Result<EdgeColoring> {
    let t = profile.t();
    let palette = g.vertex_count();
    if palette < t || g.vertices().ne(1..=palette) {
        return Err(Error::ProfileMismatch { position: 0, expected: t, found: palette });
    }
    for v in 1..=palette {
        let expected = if v <= t { profile.n()[v - 1] } else { 0 };
        let found = g.out_degree(v);
        if found != expected {
            return Err(Error::ProfileMismatch { position: v, expected, found });
        }
    }
    let profile = concrete(profile)?;
    let map = profile.vertex_map().expect("concrete profile has a vertex map");
    let mut coloring = EdgeColoring::new(palette);
    for (i, (&ui, below)) in map.neighbors.iter().zip(&map.children).enumerate() {
        coloring.set(map.root, ui, i + 1);
        for (&x, c) in below.iter().zip(g.out_neighbors(i + 1)) {
            coloring.set(ui, x, c);
        }
    }
    Ok(coloring)
}

/// Reads the oriented graph back from a star edge coloring in which
/// `u u_i` has color `i`: arc `v_i -> v_j` iff color `j` occurs below `u_i`.
pub fn realization_from_coloring(
    coloring: &EdgeColoring,
    profile: &TwoHProfile,
) -> Result<OrientedGraph> {
    let profile = concrete(profile)?;
    let map = profile.vertex_map().expect("concrete profile has a vertex map");
    let t = profile.t();
    let palette = coloring.palette_size().max(t);
    let mut g = OrientedGraph::with_vertices(1..=palette);
    for (i, &ui) in map.neighbors.iter().enumerate() {
        if coloring.get(map.root, ui) != Some(i + 1) {
            return Err(Error::MalformedColoring("root edges must be colored 1..t in profile order"));
        }
    }
    for (i, (&ui, below)) in map.neighbors.iter().zip(&map.children).enumerate() {
        for &x in below {
            let c: Color = coloring
                .get(ui, x)
                .ok_or(Error::MalformedColoring("edge below a root neighbor is uncolored"))?;
            if c == 0 || c > palette {
                return Err(Error::ColorOutOfPalette { edge: (ui.min(x), ui.max(x)), color: c, palette });
            }
            if c == i + 1 || g.has_arc(i + 1, c) {
                return Err(Error::MalformedColoring("coloring is not proper"));
            }
            if g.has_arc(c, i + 1) {
                return Err(Error::NotStarColoring { i: i + 1, j: c });
            }
            g.add_arc(i + 1, c)?;
        }
    }
    Ok(g)
}

//! Outdegree-vertex sequences and their oriented realizations.
//!
//! An outdegree-vertex sequence (OVS) pairs each vertex with a prescribed
//! outdegree. It is graphical when some oriented graph (no loops, no pair of
//! opposite arcs) has exactly those outdegrees; indegrees are unconstrained.
//!
//! The realizer is greedy. Vertices whose out-neighborhoods are final form the
//! fixed set `W`. The arrangement keeps `W` as a prefix and orders the rest by
//! outdegree plus current indegree, ties by outdegree ("`G_W`-normal"). The
//! first unfixed vertex then takes the `d` admissible targets that sit furthest
//! to the left: its leftmost possible out-neighborhood. If some realization
//! agrees with the arcs fixed so far, one also agrees with this choice, so the
//! greedy run fails only when the sequence is not graphical.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// An ordered sequence of `(outdegree, vertex)` pairs with distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Ovs {
    entries: Vec<(usize, usize)>,
}

impl Ovs {
    pub fn new(entries: Vec<(usize, usize)>) -> Result<Ovs> {
        let mut seen = BTreeSet::new();
        for &(_, v) in &entries {
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex { vertex: v });
            }
        }
        Ok(Ovs { entries })
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_outdegree(&self) -> usize {
        self.entries.iter().map(|e| e.0).sum()
    }

    /// Appends `(outdegree, vertex)`.
    pub fn push(&mut self, outdegree: usize, vertex: usize) -> Result<()> {
        if self.entries.iter().any(|e| e.1 == vertex) {
            return Err(Error::DuplicateVertex { vertex });
        }
        self.entries.push((outdegree, vertex));
        Ok(())
    }

    /// Prepends `(outdegree, vertex)`.
    pub fn push_front(&mut self, outdegree: usize, vertex: usize) -> Result<()> {
        if self.entries.iter().any(|e| e.1 == vertex) {
            return Err(Error::DuplicateVertex { vertex });
        }
        self.entries.insert(0, (outdegree, vertex));
        Ok(())
    }

    /// Stable sort by outdegree ascending.
    pub fn normalize(&self) -> Ovs {
        let mut entries = self.entries.clone();
        entries.sort_by_key(|e| e.0);
        Ovs { entries }
    }

    pub fn is_normal(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].0 <= w[1].0)
    }
}

/// Stable sort of `ovs` by outdegree ascending.
pub fn normalize(ovs: &Ovs) -> Ovs {
    ovs.normalize()
}

/// A digraph without loops or opposite arc pairs, on arbitrary vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrientedGraph {
    out: BTreeMap<usize, BTreeSet<usize>>,
    inn: BTreeMap<usize, BTreeSet<usize>>,
}

impl OrientedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: usize) {
        self.out.entry(v).or_default();
        self.inn.entry(v).or_default();
    }

    /// Adds the arc `from -> to`, creating missing endpoints.
    pub fn add_arc(&mut self, from: usize, to: usize) -> Result<()> {
        if from == to || self.has_arc(from, to) || self.has_arc(to, from) {
            return Err(Error::InvalidArc { from, to });
        }
        self.add_vertex(from);
        self.add_vertex(to);
        self.out.get_mut(&from).map(|s| s.insert(to));
        self.inn.get_mut(&to).map(|s| s.insert(from));
        Ok(())
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.out.get(&from).is_some_and(|s| s.contains(&to))
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.out.contains_key(&v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.out.keys().copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out.get(&v).into_iter().flatten().copied()
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn.get(&v).into_iter().flatten().copied()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn arc_count(&self) -> usize {
        self.out.values().map(BTreeSet::len).sum()
    }

    /// All arcs in ascending `(from, to)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out.iter().flat_map(|(&u, set)| set.iter().map(move |&v| (u, v)))
    }

    /// Re-checks the structural invariants from scratch.
    pub fn check_invariants(&self) -> Result<()> {
        for (&u, set) in &self.out {
            for &v in set {
                if u == v || self.has_arc(v, u) || !self.inn.get(&v).is_some_and(|s| s.contains(&u))
                {
                    return Err(Error::InvalidArc { from: u, to: v });
                }
            }
        }
        for (&v, set) in &self.inn {
            for &u in set {
                if !self.has_arc(u, v) {
                    return Err(Error::InvalidArc { from: u, to: v });
                }
            }
        }
        Ok(())
    }

    /// True iff every `(d, v)` in `ovs` has out-degree `d` here.
    pub fn realizes(&self, ovs: &Ovs) -> bool {
        self.vertex_count() == ovs.len()
            && ovs.entries().iter().all(|&(d, v)| self.contains_vertex(v) && self.out_degree(v) == d)
    }
}

/// Why a greedy step could not proceed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Infeasibility {
    /// Position of the failing vertex in the current arrangement (0-based).
    pub position: usize,
    pub vertex: usize,
    /// Number of admissible targets.
    pub candidates: usize,
    /// Outdegree that had to be met.
    pub required: usize,
}

impl fmt::Display for Infeasibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertex {} at position {} needs {} out-neighbors but only {} are admissible",
            self.vertex, self.position, self.required, self.candidates
        )
    }
}

/// One greedy step, recorded for replay checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub vertex: usize,
    /// The `G_W`-normal arrangement (vertex ids) the step was computed against.
    pub arrangement: Vec<usize>,
    /// Number of fixed vertices, i.e. the length of the `W` prefix.
    pub fixed: usize,
    /// The chosen out-neighborhood, in arrangement order.
    pub chosen: Vec<usize>,
}

/// Working state of the greedy realizer on dense indices.
///
/// Index `i` refers to the `i`-th entry of the sequence as given.
#[derive(Debug, Clone)]
pub struct RealizerState {
    outdegree: Vec<usize>,
    label: Vec<usize>,
    arrangement: Vec<usize>,
    fixed: Vec<bool>,
    fixed_count: usize,
    out_nbrs: Vec<Vec<usize>>,
    in_nbrs: Vec<Vec<usize>>,
}

impl RealizerState {
    /// Fresh state: arrangement is the normalized sequence, `W` holds the
    /// zero-outdegree entries, no arcs.
    pub fn new(ovs: &Ovs) -> RealizerState {
        Self::with_preset(ovs, &[], &[]).expect("empty preset is always valid")
    }

    /// State whose graph starts with `preset` arcs and whose fixed set also
    /// contains `preset_fixed`. Every preset source must be fixed and must have
    /// exactly its prescribed outdegree among the preset arcs.
    pub fn with_preset(
        ovs: &Ovs,
        preset: &[(usize, usize)],
        preset_fixed: &[usize],
    ) -> Result<RealizerState> {
        let n = ovs.len();
        let label: Vec<usize> = ovs.entries().iter().map(|e| e.1).collect();
        let outdegree: Vec<usize> = ovs.entries().iter().map(|e| e.0).collect();
        let index: BTreeMap<usize, usize> = label.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let lookup = |v: usize| {
            index.get(&v).copied().ok_or(Error::Domain("preset refers to a vertex outside the sequence"))
        };

        let mut arrangement: Vec<usize> = (0..n).collect();
        arrangement.sort_by_key(|&i| outdegree[i]);

        let mut state = RealizerState {
            outdegree,
            label,
            arrangement,
            fixed: vec![false; n],
            fixed_count: 0,
            out_nbrs: vec![Vec::new(); n],
            in_nbrs: vec![Vec::new(); n],
        };
        for &v in preset_fixed {
            let i = lookup(v)?;
            state.fix(i);
        }
        for &(from, to) in preset {
            let (a, b) = (lookup(from)?, lookup(to)?);
            if !state.fixed[a] {
                return Err(Error::Domain("preset arc leaves a vertex that is not fixed"));
            }
            if a == b || state.out_nbrs[a].contains(&b) || state.out_nbrs[b].contains(&a) {
                return Err(Error::InvalidArc { from, to });
            }
            state.out_nbrs[a].push(b);
            state.in_nbrs[b].push(a);
        }
        for &v in preset_fixed {
            let i = lookup(v)?;
            if state.out_nbrs[i].len() != state.outdegree[i] {
                return Err(Error::Domain("preset out-degree differs from the sequence"));
            }
        }
        for i in 0..n {
            if state.outdegree[i] == 0 {
                state.fix(i);
            }
        }
        Ok(state)
    }

    fn fix(&mut self, i: usize) {
        if !self.fixed[i] {
            self.fixed[i] = true;
            self.fixed_count += 1;
        }
    }

    fn key(&self, i: usize) -> (usize, usize) {
        (self.outdegree[i] + self.in_nbrs[i].len(), self.outdegree[i])
    }

    /// Rearranges into `G_W`-normal order: fixed vertices first in their
    /// current relative order, then the rest stably by
    /// `(outdegree + indegree, outdegree)`.
    pub fn gw_normalize(&mut self) {
        let (mut head, mut tail): (Vec<usize>, Vec<usize>) =
            self.arrangement.iter().partition(|&&i| self.fixed[i]);
        tail.sort_by_key(|&i| self.key(i));
        head.extend(tail);
        self.arrangement = head;
    }

    /// True iff the arrangement is currently `G_W`-normal.
    pub fn is_gw_normal(&self) -> bool {
        let w = self.fixed_count;
        self.arrangement[..w].iter().all(|&i| self.fixed[i])
            && self.arrangement[w..].windows(2).all(|p| self.key(p[0]) <= self.key(p[1]))
    }

    /// Number of vertices in `W`.
    pub fn fixed_count(&self) -> usize {
        self.fixed_count
    }

    pub fn is_complete(&self) -> bool {
        self.fixed_count == self.arrangement.len()
    }

    /// Current arrangement as vertex ids.
    pub fn arrangement(&self) -> Vec<usize> {
        self.arrangement.iter().map(|&i| self.label[i]).collect()
    }

    /// The leftmost possible out-neighborhood of the vertex at `position`:
    /// the `d` admissible targets with the smallest positions, where a target
    /// is admissible unless it is the vertex itself or already points at it.
    pub fn leftmost_pon(&self, position: usize) -> core::result::Result<Vec<usize>, Infeasibility> {
        self.leftmost_pon_indices(position)
            .map(|list| list.into_iter().map(|i| self.label[i]).collect())
    }

    fn leftmost_pon_indices(&self, position: usize) -> core::result::Result<Vec<usize>, Infeasibility> {
        let v = self.arrangement[position];
        debug_assert!(!self.fixed[v], "leftmost_pon on a fixed vertex");
        let required = self.outdegree[v];
        let blocked = |w: usize| w == v || self.in_nbrs[v].contains(&w);
        let chosen: Vec<usize> =
            self.arrangement.iter().copied().filter(|&w| !blocked(w)).take(required).collect();
        if chosen.len() < required {
            let candidates = self.arrangement.iter().filter(|&&w| !blocked(w)).count();
            return Err(Infeasibility { position, vertex: self.label[v], candidates, required });
        }
        Ok(chosen)
    }

    /// Normalizes, then fixes the first unfixed vertex on its leftmost PON.
    /// Returns `Ok(None)` once every vertex is fixed.
    pub fn step(&mut self) -> core::result::Result<Option<TraceStep>, Infeasibility> {
        self.gw_normalize();
        if self.is_complete() {
            return Ok(None);
        }
        let position = self.fixed_count;
        let v = self.arrangement[position];
        let chosen = self.leftmost_pon_indices(position)?;
        let trace = TraceStep {
            vertex: self.label[v],
            arrangement: self.arrangement(),
            fixed: self.fixed_count,
            chosen: chosen.iter().map(|&i| self.label[i]).collect(),
        };
        for &w in &chosen {
            self.out_nbrs[v].push(w);
            self.in_nbrs[w].push(v);
        }
        self.fix(v);
        Ok(Some(trace))
    }

    /// The arcs placed so far as an [`OrientedGraph`].
    pub fn graph(&self) -> OrientedGraph {
        let mut g = OrientedGraph::with_vertices(self.label.iter().copied());
        for (i, list) in self.out_nbrs.iter().enumerate() {
            let from = self.label[i];
            for &j in list {
                g.out.get_mut(&from).map(|s| s.insert(self.label[j]));
                g.inn.get_mut(&self.label[j]).map(|s| s.insert(from));
            }
        }
        g
    }

    /// Out-neighbors of vertex id `v` in placement order.
    pub fn out_neighbors_of(&self, v: usize) -> Option<Vec<usize>> {
        let i = self.label.iter().position(|&l| l == v)?;
        Some(self.out_nbrs[i].iter().map(|&j| self.label[j]).collect())
    }

    fn run(mut self, mut trace: Option<&mut Vec<TraceStep>>) -> Result<RealizerState> {
        while let Some(step) = self.step().map_err(Error::NotRealizable)? {
            if let Some(t) = trace.as_deref_mut() {
                t.push(step);
            }
        }
        Ok(self)
    }
}

/// Realizes `ovs` by the greedy leftmost rule, or reports why it cannot.
pub fn realize(ovs: &Ovs) -> Result<OrientedGraph> {
    RealizerState::new(ovs).run(None).map(|s| s.graph())
}

/// [`realize`] that also returns every greedy step.
pub fn realize_traced(ovs: &Ovs) -> Result<(OrientedGraph, Vec<TraceStep>)> {
    realize_constrained_traced(ovs, &[], &[])
}

/// Realizes `ovs` starting from the arcs in `preset`, never changing the
/// out-neighborhoods of the vertices in `preset_fixed`.
pub fn realize_constrained(
    ovs: &Ovs,
    preset: &[(usize, usize)],
    preset_fixed: &[usize],
) -> Result<OrientedGraph> {
    RealizerState::with_preset(ovs, preset, preset_fixed)?.run(None).map(|s| s.graph())
}

pub fn realize_constrained_traced(
    ovs: &Ovs,
    preset: &[(usize, usize)],
    preset_fixed: &[usize],
) -> Result<(OrientedGraph, Vec<TraceStep>)> {
    let mut trace = Vec::new();
    let state = RealizerState::with_preset(ovs, preset, preset_fixed)?.run(Some(&mut trace))?;
    Ok((state.graph(), trace))
}

/// Like [`realize_constrained`] but yields the final state, which keeps the
/// placement order of each out-neighborhood.
pub(crate) fn realize_state(
    ovs: &Ovs,
    preset: &[(usize, usize)],
    preset_fixed: &[usize],
) -> Result<RealizerState> {
    RealizerState::with_preset(ovs, preset, preset_fixed)?.run(None)
}

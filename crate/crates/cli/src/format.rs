//! Tree files, coloring JSON and DOT.
//!
//! A tree file lists one edge `u v` per line. Labels are non-negative
//! integers and need not be contiguous; `#` starts a comment and blank lines
//! are skipped. A line holding a single label declares a vertex, which is the
//! only way to write the one-vertex tree.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde_json::{Map, Value};
use starcolor::{EdgeColoring, RootedTree, Tree};

use crate::error::{CliError, Result};

/// A tree together with the external label of every dense vertex id.
///
/// Labels are kept sorted, so id order and label order agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    pub tree: Tree,
    labels: Vec<u64>,
}

impl LabeledTree {
    /// Labels each vertex with its own id.
    pub fn from_dense(tree: Tree) -> LabeledTree {
        let labels = (0..tree.vertex_count() as u64).collect();
        LabeledTree { tree, labels }
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn id_of(&self, label: u64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    fn edge_labels(&self, (u, v): (usize, usize)) -> (u64, u64) {
        (self.label(u), self.label(v))
    }
}

fn parse_label(token: &str, line: usize) -> Result<u64> {
    token.parse().map_err(|_| CliError::Parse {
        line,
        message: format!("expected a non-negative integer label, found {token:?}"),
    })
}

pub fn parse_tree(text: &str) -> Result<LabeledTree> {
    let mut pairs = Vec::new();
    let mut declared = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => {
                declared.insert(parse_label(v, line)?);
            }
            [u, v] => {
                let (u, v) = (parse_label(u, line)?, parse_label(v, line)?);
                if u == v {
                    return Err(CliError::Parse { line, message: format!("self-loop at {u}") });
                }
                pairs.push((u, v, line));
            }
            _ => {
                return Err(CliError::Parse {
                    line,
                    message: format!("expected \"u v\", found {} fields", tokens.len()),
                })
            }
        }
    }
    declared.extend(pairs.iter().flat_map(|&(u, v, _)| [u, v]));
    let labels: Vec<u64> = declared.into_iter().collect();
    if labels.is_empty() {
        return Err(CliError::Parse { line: 0, message: "no vertices".into() });
    }
    if pairs.is_empty() {
        if labels.len() == 1 {
            return Ok(LabeledTree { tree: Tree::singleton(), labels });
        }
        return Err(CliError::Core(starcolor::Error::Disconnected { components: labels.len() }));
    }

    let id = |x: u64| labels.binary_search(&x).expect("label was collected");
    let mut seen = BTreeSet::new();
    for &(u, v, line) in &pairs {
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(CliError::Parse { line, message: format!("duplicate edge {u} {v}") });
        }
    }
    let edges: Vec<(usize, usize)> = pairs.iter().map(|&(u, v, _)| (id(u), id(v))).collect();
    let tree = Tree::from_edges(&edges).map_err(|e| match e {
        starcolor::Error::CycleDetected { u, v } => {
            let line = pairs.iter().find(|&&(a, b, _)| (id(a), id(b)) == (u, v) || (id(a), id(b)) == (v, u));
            CliError::Parse {
                line: line.map_or(0, |p| p.2),
                message: format!("edge {} {} closes a cycle", labels[u], labels[v]),
            }
        }
        other => other.into(),
    })?;
    Ok(LabeledTree { tree, labels })
}

pub fn write_tree(lt: &LabeledTree) -> String {
    let mut out = String::new();
    if lt.tree.edge_count() == 0 {
        writeln!(out, "{}", lt.label(0)).unwrap();
    }
    for e in lt.tree.edges() {
        let (u, v) = lt.edge_labels(e);
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// `{"palette": m, "edges": {"u-v": color, ...}}`, keys in ascending edge order.
pub fn coloring_to_json(lt: &LabeledTree, coloring: &EdgeColoring) -> Value {
    let mut edges = Map::new();
    for (e, c) in coloring.iter() {
        let (u, v) = lt.edge_labels(e);
        edges.insert(format!("{u}-{v}"), Value::from(c));
    }
    let mut root = Map::new();
    root.insert("palette".into(), Value::from(coloring.palette_size()));
    root.insert("edges".into(), Value::Object(edges));
    Value::Object(root)
}

fn coloring_err(message: impl Into<String>) -> CliError {
    CliError::Coloring(message.into())
}

/// Reads coloring JSON against `lt`. Every key must name an edge of the tree
/// and every edge must be present.
pub fn parse_coloring(text: &str, lt: &LabeledTree) -> Result<EdgeColoring> {
    let value: Value = serde_json::from_str(text).map_err(|e| coloring_err(e.to_string()))?;
    let palette = value
        .get("palette")
        .and_then(Value::as_u64)
        .ok_or_else(|| coloring_err("missing non-negative integer \"palette\""))?;
    let edges = value
        .get("edges")
        .and_then(Value::as_object)
        .ok_or_else(|| coloring_err("missing object \"edges\""))?;

    let mut coloring = EdgeColoring::new(palette as usize);
    for (key, color) in edges {
        let (a, b) = key
            .split_once('-')
            .and_then(|(a, b)| Some((a.parse::<u64>().ok()?, b.parse::<u64>().ok()?)))
            .ok_or_else(|| coloring_err(format!("edge key {key:?} is not \"u-v\"")))?;
        let color = color
            .as_u64()
            .filter(|&c| c >= 1)
            .ok_or_else(|| coloring_err(format!("color of {key} must be a positive integer")))?;
        let ids = lt.id_of(a).zip(lt.id_of(b)).filter(|&(u, v)| lt.tree.contains_edge(u, v));
        let (u, v) = ids.ok_or_else(|| CliError::Coverage(format!("{a}-{b} is not an edge of the tree")))?;
        if coloring.get(u, v).is_some() {
            return Err(coloring_err(format!("edge {a}-{b} is listed twice")));
        }
        coloring.set(u, v, color as usize);
    }
    if let Some(e) = lt.tree.edges().find(|&(u, v)| coloring.get(u, v).is_none()) {
        let (u, v) = lt.edge_labels(e);
        return Err(CliError::Coverage(format!("edge {u}-{v} has no color")));
    }
    Ok(coloring)
}

const LEVEL_FILLS: [&str; 6] = ["#f4cccc", "#fce5cd", "#fff2cc", "#d9ead3", "#d0e0e3", "#cfe2f3"];

/// Undirected DOT graph: edge labels are colors, nodes are filled by their
/// distance from `rooted`'s root and grouped into one rank per level.
pub fn to_dot(lt: &LabeledTree, rooted: &RootedTree, coloring: &EdgeColoring) -> String {
    let mut out = String::from("graph star_coloring {\n  node [shape=circle, style=filled];\n");
    let levels = rooted.levels();
    let top = rooted.level(rooted.root());
    let depth = levels.iter().copied().max().unwrap_or(top);
    for level in top..=depth {
        let fill = LEVEL_FILLS[(level - top) % LEVEL_FILLS.len()];
        writeln!(out, "  subgraph level_{level} {{\n    rank=same; node [fillcolor=\"{fill}\"];").unwrap();
        for v in rooted.bfs_order().iter().filter(|&&v| rooted.level(v) == level) {
            writeln!(out, "    {};", lt.label(*v)).unwrap();
        }
        out.push_str("  }\n");
    }
    for (e, c) in coloring.iter() {
        let (u, v) = lt.edge_labels(e);
        writeln!(out, "  {u} -- {v} [label=\"{c}\"];").unwrap();
    }
    out.push_str("}\n");
    out
}

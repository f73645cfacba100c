use alloc::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Colors are positive integers `1..=palette`.
pub type Color = usize;

/// An assignment of colors to unordered vertex pairs, keyed `(min, max)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeColoring {
    assignment: BTreeMap<(usize, usize), Color>,
    palette: usize,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl EdgeColoring {
    pub fn new(palette: usize) -> Self {
        EdgeColoring { assignment: BTreeMap::new(), palette }
    }

    /// Builds a coloring whose palette is the largest color used.
    pub fn from_assignment(pairs: impl IntoIterator<Item = ((usize, usize), Color)>) -> Self {
        let assignment: BTreeMap<_, _> = pairs.into_iter().map(|((u, v), c)| (key(u, v), c)).collect();
        let palette = assignment.values().copied().max().unwrap_or(0);
        EdgeColoring { assignment, palette }
    }

    pub fn set(&mut self, u: usize, v: usize, color: Color) {
        self.assignment.insert(key(u, v), color);
    }

    pub fn get(&self, u: usize, v: usize) -> Option<Color> {
        self.assignment.get(&key(u, v)).copied()
    }

    pub fn palette_size(&self) -> usize {
        self.palette
    }

    pub fn set_palette_size(&mut self, palette: usize) {
        self.palette = palette;
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// `((u, v), color)` with `u < v`, ascending.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), Color)> + '_ {
        self.assignment.iter().map(|(&k, &c)| (k, c))
    }

    /// Distinct colors actually used.
    pub fn used_colors(&self) -> BTreeSet<Color> {
        self.assignment.values().copied().collect()
    }

    /// Checks that the coloring covers exactly the edges of `tree` and that
    /// every color lies in `1..=palette`.
    pub fn check_shape(&self, tree: &Tree) -> Result<()> {
        let missing = tree.edges().find(|e| !self.assignment.contains_key(e));
        let extra = self
            .assignment
            .keys()
            .copied()
            .find(|&(u, v)| !tree.contains_edge(u, v));
        if missing.is_some() || extra.is_some() {
            return Err(Error::CoverageMismatch { missing, extra });
        }
        if let Some((&edge, &color)) =
            self.assignment.iter().find(|(_, &c)| c == 0 || c > self.palette)
        {
            return Err(Error::ColorOutOfPalette { edge, color, palette: self.palette });
        }
        Ok(())
    }
}

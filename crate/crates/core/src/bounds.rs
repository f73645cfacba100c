//! Closed-form bounds and exact formulas for special 2H-trees and caterpillars,
//! and two explicit colorings of regular 2H-trees.

use alloc::vec::Vec;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::tree::{Tree, TwoHProfile};
use crate::two_h::min_k;

/// Which argument produced a number in a [`BoundReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    /// Maximum degree of the tree.
    MaxDegree,
    /// Edge counting below the root: `t + k >= sigma_t / t + (t + 1) / 2`,
    /// rounded up as a whole.
    CountingArgument,
    /// `n_t + 1 + floor(t / 2)`, valid when `t <= 2 n_t + 1`.
    BranchUpper,
    /// `t`, valid when `t >= 2 n_t + 2`.
    RootDegreeUpper,
    /// The realization search of [`crate::two_h`].
    RealizationSearch,
}

impl BoundSource {
    pub fn tag(self) -> &'static str {
        match self {
            BoundSource::MaxDegree => "max-degree",
            BoundSource::CountingArgument => "counting",
            BoundSource::BranchUpper => "branch-upper",
            BoundSource::RootDegreeUpper => "root-degree-upper",
            BoundSource::RealizationSearch => "realization-search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub lower: usize,
    pub lower_source: BoundSource,
    pub upper: usize,
    pub upper_source: BoundSource,
    pub exact: Option<usize>,
    /// `ceil(sigma_t / t) + ceil((t + 1) / 2)`. Reported for comparison only:
    /// it is not a valid lower bound (it gives 3 for the three-edge path
    /// `T_{0,1}`, whose index is 2).
    pub separately_rounded: usize,
}

fn require_t(profile: &TwoHProfile) -> Result<()> {
    if profile.t() == 0 {
        Err(Error::Domain("2H profile needs t >= 1"))
    } else {
        Ok(())
    }
}

fn ceil_div(num: usize, den: usize) -> usize {
    num.div_ceil(den)
}

fn counting_lower(profile: &TwoHProfile) -> usize {
    let t = profile.t();
    // sigma/t + (t+1)/2 = (2 sigma + t (t+1)) / (2t)
    ceil_div(2 * profile.sigma() + t * (t + 1), 2 * t)
}

/// `max(Delta, ceil(sigma_t / t + (t + 1) / 2))`, in integer arithmetic.
pub fn lower_bound_2h(profile: &TwoHProfile) -> Result<usize> {
    require_t(profile)?;
    Ok(profile.max_degree().max(counting_lower(profile)))
}

/// `n_t + 1 + floor(t / 2)` if `t <= 2 n_t + 1`, else `t`.
pub fn upper_bound_2h(profile: &TwoHProfile) -> Result<usize> {
    require_t(profile)?;
    let (t, nt) = (profile.t(), profile.n_max());
    Ok(if t <= 2 * nt + 1 { nt + 1 + t / 2 } else { t })
}

/// Both bounds with their sources, plus the exact index when `exact` is set.
pub fn bound_report(profile: &TwoHProfile, exact: bool) -> Result<BoundReport> {
    require_t(profile)?;
    let (t, nt) = (profile.t(), profile.n_max());
    let delta = profile.max_degree();
    let counting = counting_lower(profile);
    let (lower, lower_source) = if counting >= delta {
        (counting, BoundSource::CountingArgument)
    } else {
        (delta, BoundSource::MaxDegree)
    };
    let upper_source =
        if t <= 2 * nt + 1 { BoundSource::BranchUpper } else { BoundSource::RootDegreeUpper };
    let exact = if exact { Some(t + min_k(profile)?) } else { None };
    Ok(BoundReport {
        lower,
        lower_source,
        upper: upper_bound_2h(profile)?,
        upper_source,
        exact,
        separately_rounded: ceil_div(profile.sigma(), t) + ceil_div(t + 1, 2),
    })
}

/// Index of the regular 2H-tree `T_(r,t)` (root degree `t`, every root
/// neighbor of degree `r`): `r + floor(t/2)` if `t <= 2r - 1`, else `t`.
///
/// Requires `r >= 1` and `t >= 2`; with `t = 1` the tree is a star centred at
/// the single root neighbor and the formula does not apply.
pub fn regular_2h_index(r: usize, t: usize) -> Result<usize> {
    if r < 1 {
        return Err(Error::Domain("regular 2H-tree needs r >= 1"));
    }
    if t < 2 {
        return Err(Error::Domain("regular 2H-tree formula needs t >= 2"));
    }
    Ok(if t < 2 * r { r + t / 2 } else { t })
}

/// Index of a 2H-tree whose root neighbors all are leaves except the last two:
/// `Delta + 1` if both of those have degree `Delta`, else `Delta`.
pub fn near_star_2h_index(profile: &TwoHProfile) -> Result<usize> {
    let t = profile.t();
    if t < 2 {
        return Err(Error::ProfileShape("needs t >= 2"));
    }
    let n = profile.n();
    if n[..t - 2].iter().any(|&x| x != 0) {
        return Err(Error::ProfileShape("only the last two root neighbors may have children"));
    }
    let delta = profile.max_degree();
    Ok(if n[t - 2] + 1 == delta && n[t - 1] + 1 == delta { delta + 1 } else { delta })
}

/// Index of a caterpillar: `Delta + 1` if two vertices of degree `Delta` are at
/// distance exactly two, else `Delta`.
pub fn caterpillar_index(tree: &Tree) -> Result<usize> {
    if !tree.is_caterpillar() {
        return Err(Error::NotCaterpillar);
    }
    let delta = tree.max_degree();
    // distance two in a tree means a common neighbor
    let pair = (0..tree.vertex_count())
        .any(|w| tree.neighbors(w).iter().filter(|&&x| tree.degree(x) == delta).count() >= 2);
    Ok(if pair { delta + 1 } else { delta })
}

/// Builds a 2H-tree from per-branch child colors: root 0, root neighbor
/// `i + 1` joined by color `i + 1`, and one leaf per listed color.
fn branch_coloring(branches: &[Vec<Color>], palette: usize) -> Result<(Tree, EdgeColoring)> {
    let t = branches.len();
    let mut edges = Vec::new();
    let mut coloring = EdgeColoring::new(palette);
    let mut next = t + 1;
    for (i, colors) in branches.iter().enumerate() {
        edges.push((0, i + 1));
        coloring.set(0, i + 1, i + 1);
        for &c in colors {
            edges.push((i + 1, next));
            coloring.set(i + 1, next, c);
            next += 1;
        }
    }
    Ok((Tree::from_edges(&edges)?, coloring))
}

/// Child colors of `u_{i+1}` in `T_(t,t)`, listed for `f_2 .. f_t`.
fn regular_branch(t: usize, i: usize) -> Vec<Color> {
    let mut slots: Vec<Color> = alloc::vec![0; t - 1];
    // slot f_s lives at index s - 2
    for j in 1..=t / 2 {
        slots[t - j - 1] = t + j;
    }
    for j in 1..t.div_ceil(2) {
        slots[j - 1] = (i + j) % t + 1;
    }
    slots
}

/// Star edge coloring of `T_(t,t)` with `t + floor(t/2)` colors.
///
/// `u u_{i+1}` gets `i + 1`; below `u_{i+1}` the last `floor(t/2)` children
/// get the extra colors `t + 1 ..` from the back, and the first
/// `ceil(t/2) - 1` children get the root colors `(i + j) mod t + 1`.
pub fn bezegova_color_regular(t: usize) -> Result<(Tree, EdgeColoring)> {
    if t < 2 {
        return Err(Error::Domain("T_(t,t) coloring needs t >= 2"));
    }
    let branches: Vec<Vec<Color>> = (0..t).map(|i| regular_branch(t, i)).collect();
    branch_coloring(&branches, t + t / 2)
}

/// Palette size of [`lemma3_color`]: `r + floor(t/2)` if `t <= 2r - 1`, else `t`.
pub fn lemma3_palette(r: usize, t: usize) -> Result<usize> {
    regular_2h_index(r, t)
}

/// Star edge coloring of `T_(r,t)` derived from the `T_(t,t)` coloring.
///
/// * `r >= t`: each branch gains `r - t` edges in fresh colors.
/// * `r < t <= 2r - 1`: edges colored by the lowest `t - r` extra colors are
///   deleted, and the remaining extra colors are shifted down to close the gap.
/// * `t >= 2r`: each branch keeps its `r - 1` smallest colors.
pub fn lemma3_color(r: usize, t: usize) -> Result<(Tree, EdgeColoring)> {
    let palette = lemma3_palette(r, t)?;
    let half = t / 2;
    let branches: Vec<Vec<Color>> = (0..t)
        .map(|i| {
            let base = regular_branch(t, i);
            if r >= t {
                let mut colors = base;
                colors.extend(t + half + 1..=t + half + (r - t));
                colors
            } else if t < 2 * r {
                let cut = t - r;
                base.into_iter()
                    .filter(|&c| !(t + 1..=t + cut).contains(&c))
                    .map(|c| if c > t { c - cut } else { c })
                    .collect()
            } else {
                let mut keep = base.clone();
                keep.sort_unstable();
                keep.truncate(r - 1);
                base.into_iter().filter(|c| keep.contains(c)).collect()
            }
        })
        .collect();
    branch_coloring(&branches, palette)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::validate_coloring;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn p(n: &[usize]) -> TwoHProfile {
        TwoHProfile::new(n.to_vec())
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound_2h(&p(&[2, 3, 3])).unwrap(), 5);
        assert_eq!(lower_bound_2h(&p(&[0, 0, 0, 0])).unwrap(), 4);
        assert_eq!(lower_bound_2h(&p(&[0, 0, 4])).unwrap(), 5);
        assert_eq!(lower_bound_2h(&p(&[0, 1])).unwrap(), 2);
        assert!(lower_bound_2h(&p(&[])).is_err());
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(upper_bound_2h(&p(&[2, 3, 3])).unwrap(), 5);
        assert_eq!(upper_bound_2h(&p(&[0, 0, 0, 0])).unwrap(), 4);
        assert_eq!(upper_bound_2h(&p(&[2, 2, 2])).unwrap(), 4);
    }

    #[test]
    fn report_sources() {
        let report = bound_report(&p(&[2, 3, 3]), true).unwrap();
        assert_eq!((report.lower, report.upper, report.exact), (5, 5, Some(5)));
        assert_eq!(report.lower_source, BoundSource::CountingArgument);
        assert_eq!(report.upper_source, BoundSource::BranchUpper);
        let star = bound_report(&p(&[0, 0, 0]), false).unwrap();
        assert_eq!((star.lower, star.upper), (3, 3));
        assert_eq!(star.upper_source, BoundSource::RootDegreeUpper);
        let short = bound_report(&p(&[0, 1]), true).unwrap();
        assert_eq!(short.exact, Some(2));
        assert_eq!(short.separately_rounded, 3);
    }

    #[test]
    fn regular_formula_examples() {
        assert_eq!(regular_2h_index(3, 3).unwrap(), 4);
        assert_eq!(regular_2h_index(2, 5).unwrap(), 5);
        assert_eq!(regular_2h_index(2, 2).unwrap(), 3);
        assert!(regular_2h_index(0, 3).is_err());
        assert!(regular_2h_index(3, 1).is_err());
    }

    #[test]
    fn near_star_examples() {
        assert_eq!(near_star_2h_index(&p(&[0, 0, 3, 3])).unwrap(), 5);
        assert_eq!(near_star_2h_index(&p(&[0, 0, 2, 3])).unwrap(), 4);
        assert_eq!(near_star_2h_index(&p(&[0, 0])).unwrap(), 2);
        assert!(matches!(near_star_2h_index(&p(&[1, 1, 1])), Err(Error::ProfileShape(_))));
        assert!(matches!(near_star_2h_index(&p(&[3])), Err(Error::ProfileShape(_))));
    }

    #[test]
    fn caterpillar_examples() {
        let path = |m: usize| Tree::from_edges(&(0..m).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        assert_eq!(caterpillar_index(&path(4)).unwrap(), 3);
        assert_eq!(caterpillar_index(&path(3)).unwrap(), 2);
        assert_eq!(caterpillar_index(&path(1)).unwrap(), 1);
        // double broom: centers 0 and 2 of degree 5 joined through 1
        let mut edges = vec![(0, 1), (1, 2)];
        edges.extend((3..7).map(|x| (0, x)));
        edges.extend((7..11).map(|x| (2, x)));
        let broom = Tree::from_edges(&edges).unwrap();
        assert_eq!(caterpillar_index(&broom).unwrap(), 6);
        let spider = Tree::from_edges(&[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(caterpillar_index(&spider), Err(Error::NotCaterpillar));
    }

    fn branch_sets(tree: &Tree, coloring: &EdgeColoring, t: usize) -> Vec<BTreeSet<Color>> {
        (1..=t)
            .map(|u| {
                tree.neighbors(u)
                    .iter()
                    .filter(|&&x| x != 0)
                    .map(|&x| coloring.get(u, x).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn regular_coloring_small_cases() {
        let (tree, coloring) = bezegova_color_regular(2).unwrap();
        // leaf-u1-u-u2-leaf
        let order = [(1, 3), (0, 1), (0, 2), (2, 4)];
        let colors: Vec<_> = order.iter().map(|&(a, b)| coloring.get(a, b).unwrap()).collect();
        assert_eq!(colors, vec![3, 1, 2, 3]);
        assert_eq!(coloring.palette_size(), 3);
        assert!(validate_coloring(&tree, &coloring).unwrap().valid);

        let (tree, coloring) = bezegova_color_regular(3).unwrap();
        assert_eq!(
            branch_sets(&tree, &coloring, 3),
            vec![BTreeSet::from([2, 4]), BTreeSet::from([3, 4]), BTreeSet::from([1, 4])]
        );
        assert!(validate_coloring(&tree, &coloring).unwrap().valid);
        assert!(bezegova_color_regular(1).is_err());
    }

    #[test]
    fn lemma3_branches() {
        assert_eq!(lemma3_color(3, 3).unwrap(), bezegova_color_regular(3).unwrap());
        let (tree, coloring) = lemma3_color(4, 3).unwrap();
        assert_eq!(coloring.palette_size(), 5);
        assert_eq!(tree.vertex_count(), 1 + 3 + 9);
        assert!(validate_coloring(&tree, &coloring).unwrap().valid);
        let (tree, coloring) = lemma3_color(1, 4).unwrap();
        assert_eq!((tree.vertex_count(), coloring.palette_size()), (5, 4));
        let (tree, coloring) = lemma3_color(3, 5).unwrap();
        assert_eq!(coloring.palette_size(), 5);
        assert!(validate_coloring(&tree, &coloring).unwrap().valid);
    }
}

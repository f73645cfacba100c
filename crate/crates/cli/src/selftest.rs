//! Self-test: every algorithm checked against an independent oracle or a
//! closed formula. Checks are independent and run in parallel; the report
//! keeps the fixed order of [`CheckId::ALL`].

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use starcolor::bounds::{
    bezegova_color_regular, caterpillar_index, lemma3_color, lemma3_palette, lower_bound_2h,
    near_star_2h_index, regular_2h_index, upper_bound_2h,
};
use starcolor::oracle::{enumerate_trees, exact_index_bruteforce, validate_coloring, ENUMERATION_LIMIT};
use starcolor::ovs::realize;
use starcolor::two_h::realization_from_coloring;
use starcolor::{color_2h, color_tree, star_index, Error, Ovs, TwoHProfile};

use crate::generate::{caterpillar_with, random_profile_with, random_tree_with, rng};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckId {
    T233,
    OracleEquivalence,
    RegularFormula,
    BoundSandwich,
    CaterpillarFormula,
    CaterpillarOracle,
    NearStar,
    ExplicitColorings,
    RealizerCompleteness,
    Runtime,
    RandomValidation,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::T233,
        CheckId::OracleEquivalence,
        CheckId::RegularFormula,
        CheckId::BoundSandwich,
        CheckId::CaterpillarFormula,
        CheckId::CaterpillarOracle,
        CheckId::NearStar,
        CheckId::ExplicitColorings,
        CheckId::RealizerCompleteness,
        CheckId::Runtime,
        CheckId::RandomValidation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::T233 => "t233-coloring",
            CheckId::OracleEquivalence => "oracle-equivalence",
            CheckId::RegularFormula => "regular-formula",
            CheckId::BoundSandwich => "bound-sandwich",
            CheckId::CaterpillarFormula => "caterpillar-formula",
            CheckId::CaterpillarOracle => "caterpillar-oracle",
            CheckId::NearStar => "near-star-formula",
            CheckId::ExplicitColorings => "explicit-colorings",
            CheckId::RealizerCompleteness => "realizer-completeness",
            CheckId::Runtime => "runtime",
            CheckId::RandomValidation => "random-validation",
        }
    }

    /// Checks that run the exhaustive oracle and so depend on `max_n`.
    pub fn uses_oracle(self) -> bool {
        matches!(self, CheckId::OracleEquivalence | CheckId::CaterpillarOracle)
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    /// Largest tree size for the oracle checks.
    pub max_n: usize,
    pub seed: u64,
    /// Number of random trees colored and validated.
    pub random_trees: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_n: ENUMERATION_LIMIT, seed: 2024, random_trees: 10_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// The requested size is beyond the oracle's limit; nothing was run.
    TooLarge,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub id: CheckId,
    pub status: Status,
    pub detail: String,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: starcolor::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn run_check(id: CheckId, config: &Config) -> CheckReport {
    let start = Instant::now();
    if id.uses_oracle() && config.max_n > ENUMERATION_LIMIT {
        let err = Error::TooLarge { size: config.max_n, limit: ENUMERATION_LIMIT };
        return CheckReport { id, status: Status::TooLarge, detail: err.to_string(), elapsed: start.elapsed() };
    }
    let outcome = match id {
        CheckId::T233 => t233(),
        CheckId::OracleEquivalence => oracle_equivalence(config.max_n),
        CheckId::RegularFormula => regular_formula(),
        CheckId::BoundSandwich => bound_sandwich(config.seed),
        CheckId::CaterpillarFormula => caterpillar_formula(config.seed),
        CheckId::CaterpillarOracle => caterpillar_oracle(config.max_n),
        CheckId::NearStar => near_star(),
        CheckId::ExplicitColorings => explicit_colorings(),
        CheckId::RealizerCompleteness => realizer_completeness(),
        CheckId::Runtime => runtime(config.seed),
        CheckId::RandomValidation => random_validation(config.seed, config.random_trees),
    };
    let (status, detail) = match outcome {
        Ok(detail) => (Status::Pass, detail),
        Err(detail) => (Status::Fail, detail),
    };
    CheckReport { id, status, detail, elapsed: start.elapsed() }
}

pub fn run_all(config: &Config) -> Vec<CheckReport> {
    CheckId::ALL.par_iter().map(|&id| run_check(id, config)).collect()
}

fn t233() -> Outcome {
    let start = Instant::now();
    let ovs = core(Ovs::new(vec![(2, 1), (3, 2), (3, 3), (0, 4), (0, 5)]))?;
    let g = core(realize(&ovs))?;
    ensure(g.realizes(&ovs) && g.arc_count() == 8, || format!("realization has {} arcs", g.arc_count()))?;

    let result = core(color_2h(&TwoHProfile::new(vec![2, 3, 3])))?;
    ensure(result.index == 5, || format!("index {}", result.index))?;
    let tree = result.tree.as_ref().ok_or("profile was not materialized")?;
    let map = result.profile.vertex_map().ok_or("missing vertex map")?;
    let below_u1: BTreeSet<usize> =
        map.children[0].iter().filter_map(|&x| result.coloring.get(map.neighbors[0], x)).collect();
    ensure(below_u1 == BTreeSet::from([4, 5]), || format!("colors below u1: {below_u1:?}"))?;
    ensure(core(validate_coloring(tree, &result.coloring))?.valid, || "coloring rejected".into())?;
    let replay = core(realization_from_coloring(&result.coloring, &result.profile))?;
    ensure(replay == result.realization, || "coloring does not replay to its realization".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("index 5, 8 arcs, colors below u1 {{4, 5}}, {elapsed:.2?}"))
}

fn oracle_equivalence(max_n: usize) -> Outcome {
    let mut classes = Vec::new();
    for n in 1..=max_n {
        let mut count = 0;
        for tree in core(enumerate_trees(n))? {
            count += 1;
            let (m, coloring) = core(color_tree(&tree))?;
            let exact = if tree.edge_count() == 0 { 0 } else { core(exact_index_bruteforce(&tree, m))? };
            ensure(m == exact, || format!("palette {m} but exact index {exact} on {:?}", tree.edges().collect::<Vec<_>>()))?;
            ensure(core(validate_coloring(&tree, &coloring))?.valid, || {
                format!("coloring rejected on {:?}", tree.edges().collect::<Vec<_>>())
            })?;
        }
        classes.push(count);
    }
    Ok(format!("classes per size {classes:?}, {} trees", classes.iter().sum::<usize>()))
}

fn regular_formula() -> Outcome {
    let mut cases = 0;
    for r in 1..=12 {
        for t in 2..=12 {
            let formula = core(regular_2h_index(r, t))?;
            let index = core(color_2h(&TwoHProfile::regular(r, t)))?.index;
            ensure(formula == index, || format!("r={r} t={t}: formula {formula}, algorithm {index}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn bound_sandwich(seed: u64) -> Outcome {
    let mut rng = rng(seed);
    let mut tight = 0;
    for _ in 0..1000 {
        let profile = random_profile_with(&mut rng, 30, 30);
        let (lo, hi) = (core(lower_bound_2h(&profile))?, core(upper_bound_2h(&profile))?);
        let index = core(color_2h(&profile))?.index;
        ensure(lo <= index && index <= hi, || format!("{:?}: {lo} <= {index} <= {hi} fails", profile.n()))?;
        tight += usize::from(lo == hi);
    }
    Ok(format!("1000 profiles, {tight} with equal bounds"))
}

fn caterpillar_formula(seed: u64) -> Outcome {
    let mut rng = rng(seed);
    for _ in 0..1000 {
        let n = rand::Rng::gen_range(&mut rng, 2..=200);
        let tree = core(caterpillar_with(&mut rng, n))?;
        let (formula, index) = (core(caterpillar_index(&tree))?, core(star_index(&tree))?);
        ensure(formula == index, || {
            format!("formula {formula}, algorithm {index} on {:?}", tree.edges().collect::<Vec<_>>())
        })?;
    }
    Ok("1000 caterpillars".into())
}

fn caterpillar_oracle(max_n: usize) -> Outcome {
    let mut count = 0;
    for n in 2..=max_n {
        for tree in core(enumerate_trees(n))?.filter(|t| t.is_caterpillar()) {
            let formula = core(caterpillar_index(&tree))?;
            let exact = core(exact_index_bruteforce(&tree, formula + 1))?;
            ensure(formula == exact, || {
                format!("formula {formula}, exact {exact} on {:?}", tree.edges().collect::<Vec<_>>())
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} caterpillars"))
}

fn near_star() -> Outcome {
    let mut count = 0;
    for t in 2..=8 {
        for a in 0..=6 {
            for b in a..=6 {
                let mut n = vec![0; t - 2];
                n.extend([a, b]);
                let profile = TwoHProfile::new(n);
                let (formula, index) = (core(near_star_2h_index(&profile))?, core(color_2h(&profile))?.index);
                ensure(formula == index, || format!("{:?}: formula {formula}, algorithm {index}", profile.n()))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} profiles"))
}

fn explicit_colorings() -> Outcome {
    for t in 2..=50 {
        let (tree, coloring) = core(bezegova_color_regular(t))?;
        ensure(core(validate_coloring(&tree, &coloring))?.valid, || format!("T({t},{t}) coloring rejected"))?;
        let used = coloring.used_colors().len();
        ensure(used == t + t / 2, || format!("T({t},{t}) uses {used} colors"))?;
    }
    for r in 1..=20 {
        for t in 2..=20 {
            let (tree, coloring) = core(lemma3_color(r, t))?;
            ensure(core(validate_coloring(&tree, &coloring))?.valid, || format!("T({r},{t}) coloring rejected"))?;
            let palette = core(lemma3_palette(r, t))?;
            ensure(coloring.palette_size() == palette && coloring.used_colors().len() <= palette, || {
                format!("T({r},{t}) palette {} instead of {palette}", coloring.palette_size())
            })?;
        }
    }
    Ok("49 regular colorings, 380 branch-extended colorings".into())
}

/// Outdegree vectors of every oriented graph on `n` labeled vertices.
fn achievable_outdegrees(n: usize) -> BTreeSet<Vec<usize>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = BTreeSet::new();
    for mut code in 0..3usize.pow(pairs.len() as u32) {
        let mut degrees = vec![0; n];
        for &(i, j) in &pairs {
            match code % 3 {
                1 => degrees[i] += 1,
                2 => degrees[j] += 1,
                _ => {}
            }
            code /= 3;
        }
        out.insert(degrees);
    }
    out
}

fn realizer_completeness() -> Outcome {
    let mut vectors = 0;
    let mut yes = 0;
    for n in 0..=5 {
        let achievable = achievable_outdegrees(n);
        for mut code in 0..5usize.pow(n as u32) {
            let degrees: Vec<usize> = (0..n)
                .map(|_| {
                    let d = code % 5;
                    code /= 5;
                    d
                })
                .collect();
            let ovs = core(Ovs::new(degrees.iter().enumerate().map(|(v, &d)| (d, v)).collect()))?;
            let expected = achievable.contains(&degrees);
            match realize(&ovs) {
                Ok(g) => {
                    ensure(expected, || format!("{degrees:?} realized but not achievable"))?;
                    ensure(g.realizes(&ovs) && g.check_invariants().is_ok(), || {
                        format!("{degrees:?}: realization has wrong outdegrees")
                    })?;
                    yes += 1;
                }
                Err(Error::NotRealizable(_)) => {
                    ensure(!expected, || format!("{degrees:?} rejected but achievable"))?;
                }
                Err(e) => return Err(e.to_string()),
            }
            vectors += 1;
        }
    }
    Ok(format!("{vectors} vectors, {yes} realizable"))
}

fn runtime(seed: u64) -> Outcome {
    let mut rng = rng(seed);
    let mut parts = Vec::new();
    for (n, limit) in [(1_000, Duration::from_secs(1)), (10_000, Duration::from_secs(60))] {
        let tree = core(random_tree_with(&mut rng, n))?;
        let start = Instant::now();
        let (m, coloring) = core(color_tree(&tree))?;
        let elapsed = start.elapsed();
        ensure(elapsed < limit, || format!("n={n} took {elapsed:?}"))?;
        ensure(core(validate_coloring(&tree, &coloring))?.valid, || format!("n={n} coloring rejected"))?;
        parts.push(format!("n={n} index {m} in {elapsed:.2?}"));
    }
    Ok(parts.join(", "))
}

fn random_validation(seed: u64, count: usize) -> Outcome {
    let failures: Vec<String> = (0..count as u64)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = rng(seed ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let n = rand::Rng::gen_range(&mut rng, 1..=500);
            let mut check = || -> std::result::Result<(), String> {
                let tree = core(random_tree_with(&mut rng, n))?;
                let (m, coloring) = core(color_tree(&tree))?;
                ensure(core(validate_coloring(&tree, &coloring))?.valid, || "coloring rejected".into())?;
                ensure(coloring.used_colors().len() == m, || "palette not fully used".into())
            };
            check().err().map(|e| format!("tree #{i} (n={n}): {e}"))
        })
        .collect();
    match failures.first() {
        None => Ok(format!("{count} random trees")),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

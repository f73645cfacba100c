use std::time::{Duration, Instant};

use starcolor::color_tree;
use starcolor::oracle::validate_coloring;

use crate::error::{CliError, Result};
use crate::generate::random_tree;

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub index: usize,
    pub color_time: Duration,
    pub validate_time: Duration,
}

/// Colors one seeded random tree per size and validates the result.
pub fn run(sizes: &[usize], seed: u64) -> Result<Vec<BenchRow>> {
    sizes
        .iter()
        .map(|&n| {
            let tree = random_tree(n, seed)?;
            let start = Instant::now();
            let (index, coloring) = color_tree(&tree)?;
            let color_time = start.elapsed();
            let start = Instant::now();
            let verdict = validate_coloring(&tree, &coloring)?;
            let validate_time = start.elapsed();
            if !verdict.valid {
                return Err(CliError::Core(starcolor::Error::Internal("benchmark coloring failed validation")));
            }
            Ok(BenchRow { n, index, color_time, validate_time })
        })
        .collect()
}

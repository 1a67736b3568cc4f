//! The Littlewood-Richardson rule by counting skew tableaux.

use crate::error::{Error, Result};

/// A weakly decreasing list of nonnegative parts; trailing zeros dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: &[i64]) -> Result<Self> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        let mut v: Vec<u32> = parts.iter().map(|&p| p as u32).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        Ok(Self(v))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    fn contains(&self, other: &Partition) -> bool {
        (0..other.0.len()).all(|i| self.part(i) >= other.part(i))
    }
}

/// `c^ν_{λμ}`: the number of semistandard skew tableaux of shape `ν/λ` and
/// content `μ` whose reverse reading word is a lattice word.
pub fn lr_coefficient_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if nu.size() != lambda.size() + mu.size() {
        return Err(Error::SizeMismatch);
    }
    if !nu.contains(lambda) {
        return Ok(0);
    }
    // Cells in reading order: rows top to bottom, right to left.
    let mut cells = Vec::new();
    for r in 0..nu.0.len() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c as usize));
        }
    }
    let width = nu.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; nu.0.len()];
    let mut counts = vec![0u32; mu.0.len() + 1];
    let mut total = 0;
    fill(0, &cells, lambda, nu, mu, &mut grid, &mut counts, &mut total);
    Ok(total)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    k: usize,
    cells: &[(usize, usize)],
    lambda: &Partition,
    nu: &Partition,
    mu: &Partition,
    grid: &mut [Vec<u32>],
    counts: &mut [u32],
    total: &mut u64,
) {
    if k == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[k];
    // Weakly increasing along rows: bounded by the cell to the right.
    let mut hi = mu.0.len() as u32;
    if (c as u32) + 1 < nu.part(r) {
        hi = hi.min(grid[r][c + 1]);
    }
    // Strictly increasing down columns.
    let mut lo = 1;
    if r > 0 && (c as u32) >= lambda.part(r - 1) {
        lo = grid[r - 1][c] + 1;
    }
    for v in lo..=hi {
        let i = v as usize;
        if counts[i] >= mu.part(i - 1) || (i > 1 && counts[i] >= counts[i - 1]) {
            continue;
        }
        counts[i] += 1;
        grid[r][c] = v;
        fill(k + 1, cells, lambda, nu, mu, grid, counts, total);
        counts[i] -= 1;
    }
    grid[r][c] = 0;
}

/// The LR coefficient matching the integral `GL_n` triple `(λ, μ, ν)` with
/// zero sum: shift `λ, μ` to partitions and compare with `ν* = −reverse(ν)`
/// shifted by the same total.
pub fn lr_for_triple(lambda: &[i64], mu: &[i64], nu: &[i64]) -> Result<u64> {
    let n = lambda.len();
    if mu.len() != n || nu.len() != n || n == 0 {
        return Err(Error::LengthMismatch);
    }
    let (sl, sm) = (lambda[n - 1], mu[n - 1]);
    let l: Vec<i64> = lambda.iter().map(|x| x - sl).collect();
    let m: Vec<i64> = mu.iter().map(|x| x - sm).collect();
    let star: Vec<i64> = nu.iter().rev().map(|x| -x - sl - sm).collect();
    if star.iter().sum::<i64>() != l.iter().sum::<i64>() + m.iter().sum::<i64>() {
        return Err(Error::SizeMismatch);
    }
    if star[n - 1] < 0 {
        return Ok(0);
    }
    lr_coefficient_tableaux(&Partition::new(&l)?, &Partition::new(&m)?, &Partition::new(&star)?)
}

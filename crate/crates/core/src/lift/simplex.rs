//! Exact two-phase simplex with Bland's rule.
//!
//! Solves `max c·y` subject to `A y ≤ b`, `y ≥ 0`, and returns a dual
//! vector proving optimality.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub y: Vec<Q>,
    pub value: Q,
    /// `π ≥ 0` with `Aᵀπ ≥ c` and `b·π = value`.
    pub dual: Vec<Q>,
    /// Final basis, as column indices into `[A | I]`.
    pub basis: Vec<usize>,
    /// Whether some nonbasic column has zero reduced cost.
    pub zero_reduced_cost: bool,
}

/// Checks primal feasibility, dual feasibility and equal objective values.
pub fn verify_certificate(c: &[Q], a: &[Vec<Q>], b: &[Q], s: &LpSolution) -> bool {
    let primal = s.y.iter().all(|v| !v.is_negative())
        && a.iter().zip(b).all(|(row, bi)| dot(row, &s.y) <= *bi);
    let dual = s.dual.iter().all(|v| !v.is_negative())
        && (0..c.len()).all(|j| a.iter().zip(&s.dual).map(|(row, p)| &row[j] * p).sum::<Q>() >= c[j]);
    let value = dot(c, &s.y);
    primal && dual && value == s.value && dot(b, &s.dual) == value
}

fn dot(u: &[Q], v: &[Q]) -> Q {
    u.iter().zip(v).map(|(x, y)| x * y).sum()
}

struct Tableau {
    /// Rows of `[coefficients | rhs]`.
    t: Vec<Vec<Q>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.t[r][col].clone();
        for x in self.t[r].iter_mut() {
            *x /= &p;
        }
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = col;
    }

    fn reduced(&self, cost: &[Q], j: usize) -> Q {
        let z: Q = self.basis.iter().zip(&self.t).map(|(&bi, row)| &cost[bi] * &row[j]).sum();
        &cost[j] - z
    }

    /// Maximizes `cost` over columns `allowed`; Bland's rule.
    fn optimize(&mut self, cost: &[Q], allowed: usize) -> Result<()> {
        loop {
            let Some(enter) = (0..allowed).find(|&j| !self.basis.contains(&j) && self.reduced(cost, j).is_positive())
            else {
                return Ok(());
            };
            let mut best: Option<(Q, usize, usize)> = None;
            for (i, row) in self.t.iter().enumerate() {
                if row[enter].is_positive() {
                    let ratio = &row[self.cols] / &row[enter];
                    let better = match &best {
                        None => true,
                        Some((r, _, b)) => ratio < *r || (ratio == *r && self.basis[i] < *b),
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            let (_, r, _) = best.ok_or(Error::Unbounded)?;
            self.pivot(r, enter);
        }
    }
}

pub fn maximize(c: &[Q], a: &[Vec<Q>], b: &[Q]) -> Result<LpSolution> {
    let (m, n) = (a.len(), c.len());
    // Columns: y (n), slacks (m), artificials (one per negative row).
    let neg: Vec<usize> = (0..m).filter(|&i| b[i].is_negative()).collect();
    let cols = n + m + neg.len();
    let mut t = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for i in 0..m {
        let mut row = vec![Q::zero(); cols + 1];
        let sign = if b[i].is_negative() { -Q::one() } else { Q::one() };
        for j in 0..n {
            row[j] = &a[i][j] * &sign;
        }
        row[n + i] = sign.clone();
        row[cols] = &b[i] * &sign;
        match neg.iter().position(|&k| k == i) {
            Some(k) => {
                row[n + m + k] = Q::one();
                basis.push(n + m + k);
            }
            None => basis.push(n + i),
        }
        t.push(row);
    }
    let mut tab = Tableau { t, basis, cols };
    if !neg.is_empty() {
        let mut cost = vec![Q::zero(); cols];
        for k in 0..neg.len() {
            cost[n + m + k] = -Q::one();
        }
        tab.optimize(&cost, cols)?;
        let infeas: Q = tab.basis.iter().zip(&tab.t).filter(|(&b, _)| b >= n + m).map(|(_, r)| r[cols].clone()).sum();
        if infeas.is_positive() {
            return Err(Error::Infeasible);
        }
        // Drive zero-level artificials out of the basis.
        for r in 0..m {
            if tab.basis[r] >= n + m {
                let col = (0..n + m).find(|&j| !tab.t[r][j].is_zero()).expect("[A | I] has full row rank");
                tab.pivot(r, col);
            }
        }
    }
    let mut cost = vec![Q::zero(); cols];
    cost[..n].clone_from_slice(c);
    tab.optimize(&cost, n + m)?;

    let mut y = vec![Q::zero(); n];
    for (r, &bi) in tab.basis.iter().enumerate() {
        if bi < n {
            y[bi] = tab.t[r][cols].clone();
        }
    }
    let zero_reduced_cost = (0..n + m).any(|j| !tab.basis.contains(&j) && tab.reduced(&cost, j).is_zero());
    // π solves Bᵀπ = c_B in the original system [A | I].
    let column = |j: usize| -> Vec<Q> {
        if j < n {
            a.iter().map(|row| row[j].clone()).collect()
        } else {
            (0..m).map(|i| if i == j - n { Q::one() } else { Q::zero() }).collect()
        }
    };
    let bt: Vec<Vec<Q>> = tab.basis.iter().map(|&j| column(j)).collect();
    let cb: Vec<Q> = tab.basis.iter().map(|&j| cost[j].clone()).collect();
    let dual = solve(bt, cb).expect("optimal basis is nonsingular");
    let value = dot(c, &y);
    Ok(LpSolution { y, value, dual, basis: tab.basis, zero_reduced_cost })
}

/// Solves the square system `M x = v` by Gaussian elimination.
fn solve(mut mat: Vec<Vec<Q>>, mut v: Vec<Q>) -> Option<Vec<Q>> {
    let k = v.len();
    for col in 0..k {
        let piv = (col..k).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(col, piv);
        v.swap(col, piv);
        let p = mat[col][col].clone();
        for x in mat[col].iter_mut() {
            *x /= &p;
        }
        v[col] /= &p;
        for r in 0..k {
            if r != col && !mat[r][col].is_zero() {
                let f = mat[r][col].clone();
                let prow = mat[col].clone();
                for (x, y) in mat[r].iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
                let vc = v[col].clone();
                v[r] -= &f * vc;
            }
        }
    }
    Some(v)
}

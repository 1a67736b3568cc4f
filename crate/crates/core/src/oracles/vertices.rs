//! Brute-force vertex enumeration of the hive polytope.
//!
//! Entries are indexed by `(i, j)` with `i + j ≤ n`; the zero corner is
//! `(0, 0)`, λ runs along `j = 0`, μ along `i + j = n` and ν back along
//! `i = 0`. A vertex is a feasible point where some set of inequalities of
//! full rank is tight; every such set is tried.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::hive::{BoundaryTriple, Hive};
use crate::rational::Q;

/// Steps of the triangular lattice in cyclic order.
const STEPS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Rhombus inequalities `Σ coef·x + constant ≥ 0` over the interior entries.
#[derive(Debug, Clone)]
pub struct HiveSystem {
    pub n: usize,
    /// Interior points, in variable order.
    pub interior: Vec<(i64, i64)>,
    pub rows: Vec<(Vec<i64>, Q)>,
    /// All entries, boundary ones filled in.
    boundary: Vec<((i64, i64), Q)>,
}

impl HiveSystem {
    pub fn new(t: &BoundaryTriple) -> Result<Self> {
        let n = t.n() as i64;
        let total: Q = t.lambda.iter().chain(&t.mu).chain(&t.nu).sum();
        if !total.is_zero() {
            return Err(Error::ZeroSumViolation(crate::rational::format_q(&total)));
        }
        let mut boundary = Vec::new();
        let mut acc = Q::zero();
        boundary.push(((0, 0), acc.clone()));
        for (k, l) in t.lambda.iter().enumerate() {
            acc += l;
            boundary.push(((k as i64 + 1, 0), acc.clone()));
        }
        for (k, m) in t.mu.iter().enumerate() {
            acc += m;
            boundary.push(((n - k as i64 - 1, k as i64 + 1), acc.clone()));
        }
        for (k, v) in t.nu.iter().enumerate().take(t.n() - 1) {
            acc += v;
            boundary.push(((0, n - k as i64 - 1), acc.clone()));
        }
        let inside = |p: (i64, i64)| p.0 >= 0 && p.1 >= 0 && p.0 + p.1 <= n;
        let mut interior = Vec::new();
        for i in 1..n {
            for j in 1..n - i {
                interior.push((i, j));
            }
        }
        let var = |p: (i64, i64)| interior.iter().position(|&x| x == p);
        let known = |p: (i64, i64)| boundary.iter().find(|(x, _)| *x == p).map(|(_, v)| v.clone());
        let mut rows = Vec::new();
        for i in 0..=n {
            for j in 0..=n - i {
                let p = (i, j);
                for k in 0..3 {
                    let s = STEPS[k];
                    let q = (p.0 + s.0, p.1 + s.1);
                    let (a, b) = (STEPS[(k + 5) % 6], STEPS[k + 1]);
                    let (r, u) = ((p.0 + a.0, p.1 + a.1), (p.0 + b.0, p.1 + b.1));
                    if !(inside(q) && inside(r) && inside(u)) {
                        continue;
                    }
                    let mut coef = vec![0i64; interior.len()];
                    let mut c = Q::zero();
                    for (pt, sign) in [(p, 1), (q, 1), (r, -1), (u, -1)] {
                        match var(pt) {
                            Some(v) => coef[v] += sign,
                            None => c += known(pt).unwrap() * Q::from_integer(sign.into()),
                        }
                    }
                    rows.push((coef, c));
                }
            }
        }
        Ok(Self { n: t.n(), interior, rows, boundary })
    }

    pub fn is_feasible_point(&self, x: &[Q]) -> bool {
        self.rows.iter().all(|(a, c)| {
            let v: Q = a.iter().zip(x).map(|(&k, xi)| xi * Q::from_integer(k.into())).sum::<Q>() + c;
            !v.is_negative()
        })
    }

    /// Number of inequalities tight at `x`.
    pub fn tight(&self, x: &[Q]) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&r| {
                let (a, c) = &self.rows[r];
                (a.iter().zip(x).map(|(&k, xi)| xi * Q::from_integer(k.into())).sum::<Q>() + c).is_zero()
            })
            .collect()
    }

    /// Interior values of a library hive, in variable order.
    pub fn point_of(&self, h: &Hive) -> Vec<Q> {
        self.interior.iter().map(|&(i, j)| h.get((i + j, j)).clone()).collect()
    }

    /// Feasible with a tight set of full rank.
    pub fn is_vertex(&self, x: &[Q]) -> bool {
        if !self.is_feasible_point(x) {
            return false;
        }
        let mut e = Echelon { rows: Vec::new() };
        for r in self.tight(x) {
            let (a, c) = &self.rows[r];
            if let Some(next) = e.push(a, &-c) {
                e = next;
            }
        }
        e.rows.len() == self.interior.len()
    }

    /// The library hive with interior values `x`.
    pub fn to_hive(&self, x: &[Q]) -> Hive {
        let n = self.n as i64;
        let mut values = Vec::new();
        // Library order: rows a = 0..n, columns b = 0..a, with (a, b) = (i + j, j).
        for a in 0..=n {
            for b in 0..=a {
                let p = (a - b, b);
                let v = match self.interior.iter().position(|&y| y == p) {
                    Some(k) => x[k].clone(),
                    None => self.boundary.iter().find(|(y, _)| *y == p).unwrap().1.clone(),
                };
                values.push(v);
            }
        }
        Hive::gl(self.n, values).expect("sizes agree")
    }
}

/// Reduced row echelon state for the depth-first search over tight sets.
#[derive(Clone)]
struct Echelon {
    /// Rows `(coefficients, rhs)` with a pivot column each.
    rows: Vec<(Vec<Q>, Q, usize)>,
}

impl Echelon {
    /// Adds `a·x = rhs`; `None` if it is dependent on the rows so far.
    fn push(&self, a: &[i64], rhs: &Q) -> Option<Echelon> {
        let mut v: Vec<Q> = a.iter().map(|&k| Q::from_integer(k.into())).collect();
        let mut r = rhs.clone();
        for (row, rr, piv) in &self.rows {
            if !v[*piv].is_zero() {
                let f = v[*piv].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
                r -= &f * rr;
            }
        }
        let piv = v.iter().position(|x| !x.is_zero())?;
        let p = v[piv].clone();
        for x in v.iter_mut() {
            *x /= &p;
        }
        r /= &p;
        let mut rows = self.rows.clone();
        for (row, rr, _) in rows.iter_mut() {
            if !row[piv].is_zero() {
                let f = row[piv].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    *x -= &f * y;
                }
                *rr -= &f * &r;
            }
        }
        rows.push((v, r, piv));
        Some(Echelon { rows })
    }

    fn solution(&self, m: usize) -> Vec<Q> {
        let mut x = vec![Q::zero(); m];
        for (_, r, piv) in &self.rows {
            x[*piv] = r.clone();
        }
        x
    }
}

/// All vertices of the hive polytope, for `n ≤ 4`.
pub fn enumerate_polytope_vertices(t: &BoundaryTriple) -> Result<Vec<Hive>> {
    if t.n() > 4 {
        return Err(Error::TooLarge(t.n()));
    }
    enumerate_polytope_vertices_unguarded(t)
}

/// As [`enumerate_polytope_vertices`] with no size guard.
pub fn enumerate_polytope_vertices_unguarded(t: &BoundaryTriple) -> Result<Vec<Hive>> {
    let sys = HiveSystem::new(t)?;
    let m = sys.interior.len();
    let mut found: BTreeSet<Vec<Q>> = BTreeSet::new();
    if m == 0 {
        if sys.is_feasible_point(&[]) {
            found.insert(Vec::new());
        }
    } else {
        search(&sys, 0, &Echelon { rows: Vec::new() }, m, &mut found);
    }
    Ok(found.iter().map(|x| sys.to_hive(x)).collect())
}

fn search(sys: &HiveSystem, start: usize, e: &Echelon, m: usize, found: &mut BTreeSet<Vec<Q>>) {
    if e.rows.len() == m {
        let x = e.solution(m);
        if sys.is_feasible_point(&x) {
            found.insert(x);
        }
        return;
    }
    // Not enough rows left to reach full rank.
    if sys.rows.len() - start < m - e.rows.len() {
        return;
    }
    for r in start..sys.rows.len() {
        let (a, c) = &sys.rows[r];
        if let Some(next) = e.push(a, &-c) {
            search(sys, r + 1, &next, m, found);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_has_one_vertex() {
        let t = BoundaryTriple::from_ints(&[3, 1], &[2, 0], &[-2, -4]).unwrap();
        let v = enumerate_polytope_vertices(&t).unwrap();
        assert_eq!(v.len(), 1);
        assert!(v[0].is_valid());
        assert_eq!(v[0].boundary_triple().unwrap(), t);
    }

    #[test]
    fn infeasible_is_empty() {
        let bad = BoundaryTriple::from_ints(&[2, 0, 0], &[0, 0, 0], &[0, -1, -1]).unwrap();
        assert!(enumerate_polytope_vertices(&bad).unwrap().is_empty());
    }

    #[test]
    fn vertices_are_tight_and_valid() {
        let t = BoundaryTriple::from_ints(&[4, 2, 1, 0], &[3, 2, 0, 0], &[-1, -2, -4, -5]).unwrap();
        let sys = HiveSystem::new(&t).unwrap();
        let m = sys.interior.len();
        let vs = enumerate_polytope_vertices(&t).unwrap();
        assert!(!vs.is_empty());
        for h in &vs {
            assert!(h.is_valid());
            assert_eq!(h.boundary_triple().unwrap(), t);
            let x = sys.point_of(h);
            assert!(sys.tight(&x).len() >= m);
            assert!(sys.is_vertex(&x));
        }
        // The midpoint of two vertices is not one.
        if vs.len() > 1 {
            let mid = vs[0].add(&vs[1]).scale(&Q::new(1.into(), 2.into()));
            assert!(!sys.is_vertex(&sys.point_of(&mid)));
        }
        assert!(matches!(
            enumerate_polytope_vertices(&BoundaryTriple::from_ints(&[0; 5], &[0; 5], &[0; 5]).unwrap()),
            Err(Error::TooLarge(5))
        ));
    }
}

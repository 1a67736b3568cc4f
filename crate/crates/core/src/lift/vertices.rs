//! Vertex enumeration of the hive polytope by double description: start
//! from the bounding box given by the LP and cut by one rhombus inequality
//! at a time.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hive::{BoundaryTriple, Hive};
use crate::rational::Q;

use super::lift::HiveLp;
use super::simplex::maximize;

#[derive(Clone)]
struct Vertex {
    y: Vec<Q>,
    tight: BTreeSet<usize>,
}

fn rank(rows: &[&Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = rows.iter().map(|r| r.to_vec()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        let prow: Vec<Q> = m[r].iter().map(|x| x / &pivot).collect();
        for row in m.iter_mut().skip(r + 1) {
            if !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// All vertices of the hive polytope over `t`.
pub fn hive_polytope_vertices(t: &BoundaryTriple) -> Result<Vec<Hive>> {
    let lp = HiveLp::new(t)?;
    let m = lp.interior.len();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs: Vec<Q> = Vec::new();
    // Bounding box.
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for k in 0..m {
        let mut e = vec![Q::zero(); m];
        e[k] = Q::one();
        match maximize(&e, &lp.a, &lp.b) {
            Ok(sol) => hi.push(sol.value),
            Err(Error::Infeasible) => return Ok(Vec::new()),
            Err(e) => return Err(e),
        }
        e[k] = -Q::one();
        lo.push(-maximize(&e, &lp.a, &lp.b)?.value);
    }
    if m == 0 {
        // Feasibility of the all-boundary rhombi.
        return if lp.b.iter().all(|b| !b.is_negative()) { Ok(vec![lp.hive(&[])]) } else { Ok(Vec::new()) };
    }
    for k in 0..m {
        let mut e = vec![Q::zero(); m];
        e[k] = -Q::one();
        rows.push(e.clone());
        rhs.push(-&lo[k]);
        e[k] = Q::one();
        rows.push(e);
        rhs.push(hi[k].clone());
    }
    let mut verts: Vec<Vertex> = Vec::new();
    let mut seen = BTreeSet::new();
    for mask in 0u64..(1 << m) {
        let y: Vec<Q> = (0..m).map(|k| if mask >> k & 1 == 1 { hi[k].clone() } else { lo[k].clone() }).collect();
        if seen.insert(y.clone()) {
            let tight = (0..rows.len()).filter(|&r| slack(&rows[r], &rhs[r], &y).is_zero()).collect();
            verts.push(Vertex { y, tight });
        }
    }
    for (a, b) in lp.a.iter().zip(&lp.b) {
        let h = rows.len();
        rows.push(a.clone());
        rhs.push(b.clone());
        let s: Vec<Q> = verts.iter().map(|v| slack(a, b, &v.y)).collect();
        let plus: Vec<usize> = (0..verts.len()).filter(|&i| s[i].is_positive()).collect();
        let minus: Vec<usize> = (0..verts.len()).filter(|&i| s[i].is_negative()).collect();
        if minus.is_empty() {
            for (v, si) in verts.iter_mut().zip(&s) {
                if si.is_zero() {
                    v.tight.insert(h);
                }
            }
            continue;
        }
        let mut next: Vec<Vertex> = Vec::new();
        for &p in &plus {
            for &n in &minus {
                let common: BTreeSet<usize> = verts[p].tight.intersection(&verts[n].tight).copied().collect();
                if common.len() + 1 < m {
                    continue;
                }
                let rs: Vec<&Vec<Q>> = common.iter().map(|&r| &rows[r]).collect();
                if rank(&rs) != m - 1 {
                    continue;
                }
                let f = &s[p] / (&s[p] - &s[n]);
                let y: Vec<Q> = verts[p].y.iter().zip(&verts[n].y).map(|(u, w)| u + (w - u) * &f).collect();
                let mut tight = common;
                tight.insert(h);
                next.push(Vertex { y, tight });
            }
        }
        for (i, v) in verts.into_iter().enumerate() {
            if s[i].is_positive() {
                next.push(v);
            } else if s[i].is_zero() {
                let mut v = v;
                v.tight.insert(h);
                next.push(v);
            }
        }
        // Merge duplicates from degenerate cuts.
        next.sort_by(|u, w| u.y.cmp(&w.y));
        let mut merged: Vec<Vertex> = Vec::new();
        for v in next {
            match merged.last_mut() {
                Some(last) if last.y == v.y => last.tight.extend(v.tight),
                _ => merged.push(v),
            }
        }
        verts = merged;
    }
    Ok(verts.iter().map(|v| lp.hive(&v.y)).collect())
}

fn slack(a: &[Q], b: &Q, y: &[Q]) -> Q {
    b - a.iter().zip(y).map(|(u, v)| u * v).sum::<Q>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::enumerate_polytope_vertices;

    #[test]
    fn agrees_with_brute_force() {
        for (l, m, nu) in [
            (vec![3, 1], vec![2, 0], vec![-2, -4]),
            (vec![4, 2, 0], vec![3, 1, 0], vec![-1, -3, -6]),
            (vec![2, 1, 0], vec![2, 1, 0], vec![-1, -2, -3]),
            (vec![4, 2, 1, 0], vec![3, 2, 0, 0], vec![-1, -2, -4, -5]),
            (vec![3, 2, 1, 0], vec![3, 2, 1, 0], vec![-1, -2, -4, -5]),
            (vec![2, 0, 0], vec![0, 0, 0], vec![0, -1, -1]),
        ] {
            let t = BoundaryTriple::from_ints(&l, &m, &nu).unwrap();
            let mut a = hive_polytope_vertices(&t).unwrap();
            let mut b = enumerate_polytope_vertices(&t).unwrap();
            a.sort_by(|x, y| x.values().cmp(y.values()));
            b.sort_by(|x, y| x.values().cmp(y.values()));
            assert_eq!(a, b, "{l:?} {m:?} {nu:?}");
        }
    }
}

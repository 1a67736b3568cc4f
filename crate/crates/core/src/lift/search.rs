//! Exhaustive search for hive polytopes with a nonintegral vertex.

use crate::error::Result;
use crate::hive::{BoundaryTriple, Hive};
use crate::honeycomb::{diagram, elide, Honeycomb, VertexKind};

use super::vertices::hive_polytope_vertices;

/// Dominant integer weights of length `n` with entries in `[lo, hi]`, in
/// lexicographically decreasing order.
pub fn dominant_weights(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().copied().unwrap_or(hi);
        for v in (lo..=top).rev() {
            cur.push(v);
            go(n, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Integral triples with `λ, μ` entries in `[0, max]` (last entry 0) and
/// every compatible `ν`, smallest `|λ| + |μ|` first.
pub fn search_space(n: usize, max: i64) -> Vec<BoundaryTriple> {
    let base: Vec<Vec<i64>> = dominant_weights(n, 0, max).into_iter().filter(|w| w[n - 1] == 0).collect();
    let mut out = Vec::new();
    for l in &base {
        for m in &base {
            let total: i64 = l.iter().sum::<i64>() + m.iter().sum::<i64>();
            for nu in dominant_weights(n, -2 * max, 0) {
                if nu.iter().sum::<i64>() == -total {
                    out.push((total, BoundaryTriple::from_ints(l, m, &nu).unwrap()));
                }
            }
        }
    }
    out.sort_by_key(|(total, _)| *total);
    out.into_iter().map(|(_, t)| t).collect()
}

#[derive(Debug, Clone)]
pub struct NonintegralWitness {
    pub triple: BoundaryTriple,
    pub vertex: Hive,
    /// What keeps the vertex's diagram from being a simply degenerate forest.
    pub defect: String,
}

/// Why a hive's diagram is not a simply degenerate forest, if it is not.
pub fn structural_defect(h: &Hive) -> Result<Option<String>> {
    let m = diagram(&Honeycomb::from_hive(h)?);
    for v in m.vertices() {
        if !(v.kind.is_y() || v.kind == VertexKind::Crossing) {
            return Ok(Some(format!("{} vertex at {}", v.kind.name(), v.location)));
        }
    }
    match elide(&m) {
        Err(e) => Ok(Some(e.to_string())),
        Ok(g) if !g.is_acyclic() => Ok(Some("cycle in the post-elision graph".into())),
        Ok(_) => Ok(None),
    }
}

/// The first vertex with a nonintegral entry over the search space, and how
/// many polytopes were scanned.
pub fn find_nonintegral_vertex(n: usize, max: i64) -> Result<(Option<NonintegralWitness>, usize)> {
    let mut scanned = 0;
    for t in search_space(n, max) {
        let verts = hive_polytope_vertices(&t)?;
        scanned += 1;
        if let Some(v) = verts.into_iter().find(|v| !v.is_integral()) {
            let defect = structural_defect(&v)?.unwrap_or_else(|| "none found".into());
            return Ok((Some(NonintegralWitness { triple: t, vertex: v, defect }), scanned));
        }
    }
    Ok((None, scanned))
}

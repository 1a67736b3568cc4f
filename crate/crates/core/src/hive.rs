//! Hives: functions on the lattice points of a region whose rhombus values
//! are all nonnegative. For `GL_n` the region is the triangle
//! `0 ≤ b ≤ a ≤ n` and entry `(a, b)` sits in row `a`, column `b`, with the
//! zero corner `(0, 0)` on top.
//!
//! Boundary convention: walking from the zero corner down the left side,
//! along the bottom row and back up the right side, the consecutive
//! differences are `λ₁…λₙ`, then `μ₁…μₙ`, then `ν₁…νₙ`.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{LPoint, Region, Rhombus, Triangle};
use crate::rational::{format_q, q, to_i64, Q};

pub type Weight = Vec<Q>;

pub fn weight(v: &[i64]) -> Weight {
    v.iter().map(|&x| q(x)).collect()
}

pub fn is_dominant(w: &[Q]) -> bool {
    w.windows(2).all(|p| p[0] >= p[1])
}

pub fn is_regular(w: &[Q]) -> bool {
    w.windows(2).all(|p| p[0] > p[1])
}

/// `(λ, μ, ν)`: three dominant weights of the same length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryTriple {
    pub lambda: Weight,
    pub mu: Weight,
    pub nu: Weight,
}

impl BoundaryTriple {
    pub fn new(lambda: Weight, mu: Weight, nu: Weight) -> Result<Self> {
        if lambda.is_empty() || lambda.len() != mu.len() || mu.len() != nu.len() {
            return Err(Error::LengthMismatch);
        }
        for w in [&lambda, &mu, &nu] {
            if !is_dominant(w) {
                return Err(Error::NotDominant(w.iter().map(format_q).collect()));
            }
        }
        Ok(Self { lambda, mu, nu })
    }

    pub fn from_ints(lambda: &[i64], mu: &[i64], nu: &[i64]) -> Result<Self> {
        Self::new(weight(lambda), weight(mu), weight(nu))
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn total(&self) -> Q {
        self.lambda.iter().chain(&self.mu).chain(&self.nu).sum()
    }

    pub fn check_zero_sum(&self) -> Result<()> {
        let s = self.total();
        if s.is_zero() {
            Ok(())
        } else {
            Err(Error::ZeroSumViolation(format_q(&s)))
        }
    }

    pub fn is_regular(&self) -> bool {
        is_regular(&self.lambda) && is_regular(&self.mu) && is_regular(&self.nu)
    }

    pub fn is_integral(&self) -> bool {
        self.weights().iter().all(|w| w.iter().all(|x| x.is_integer()))
    }

    pub fn weights(&self) -> [&Weight; 3] {
        [&self.lambda, &self.mu, &self.nu]
    }

    pub fn scaled(&self, k: i64) -> Self {
        let s = |w: &Weight| w.iter().map(|x| x * q(k)).collect();
        Self { lambda: s(&self.lambda), mu: s(&self.mu), nu: s(&self.nu) }
    }

    /// `(μ, ν, λ)`.
    pub fn rotated(&self) -> Self {
        Self { lambda: self.mu.clone(), mu: self.nu.clone(), nu: self.lambda.clone() }
    }

    /// The integer entries, when all are integers.
    pub fn to_ints(&self) -> Option<[Vec<i64>; 3]> {
        let conv = |w: &Weight| w.iter().map(to_i64).collect::<Option<Vec<_>>>();
        Some([conv(&self.lambda)?, conv(&self.mu)?, conv(&self.nu)?])
    }
}

/// A function on the lattice points of a region, listed in the region's
/// point order (row-major, top row first, for `GL_n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hive {
    region: Arc<Region>,
    values: Vec<Q>,
}

impl Hive {
    pub fn new(region: Arc<Region>, values: Vec<Q>) -> Result<Self> {
        if values.len() != region.len() {
            return Err(Error::Invalid(format!(
                "hive needs {} entries, got {}",
                region.len(),
                values.len()
            )));
        }
        Ok(Self { region, values })
    }

    /// A `GL_n` hive from its row-major entries.
    pub fn gl(n: usize, values: Vec<Q>) -> Result<Self> {
        Self::new(Arc::new(Region::gl(n)), values)
    }

    pub fn region(&self) -> &Arc<Region> {
        &self.region
    }

    /// Side length when the region is a `GL_n` triangle.
    pub fn gl_n(&self) -> Option<usize> {
        let t = self.region.ty();
        (t[1] == 0 && t[3] == 0 && t[5] == 0 && t[0] == t[2] && t[2] == t[4]).then_some(t[0] as usize)
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn get(&self, p: LPoint) -> &Q {
        &self.values[self.region.index_of(p).expect("point outside the hive")]
    }

    pub fn rhombus_value(&self, r: &Rhombus) -> Q {
        r.value(|p| self.get(p).clone())
    }

    /// Fails on the first rhombus with negative value.
    pub fn check_rhombi(&self) -> Result<()> {
        for r in self.region.rhombi() {
            if self.rhombus_value(r).is_negative() {
                return Err(Error::RhombusViolation(r.label()));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check_rhombi().is_ok()
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Adds a constant so that the first point carries 0.
    pub fn normalized(&self) -> Self {
        let c = self.values[0].clone();
        Self { region: self.region.clone(), values: self.values.iter().map(|v| v - &c).collect() }
    }

    pub fn add(&self, other: &Hive) -> Self {
        assert_eq!(self.region, other.region);
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Self { region: self.region.clone(), values }
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self { region: self.region.clone(), values: self.values.iter().map(|v| v * s).collect() }
    }

    /// Reads `(λ, μ, ν)` off a `GL_n` hive.
    pub fn boundary_triple(&self) -> Result<BoundaryTriple> {
        if self.gl_n().is_none() {
            return Err(Error::Invalid("not a GL_n hive".into()));
        }
        let f = |p: LPoint| self.get(p).clone();
        let side = |k: usize| self.region.side(k).map(|e| e.constant(f)).collect::<Vec<_>>();
        BoundaryTriple::new(side(2), side(4), side(0))
    }

    pub fn to_json(&self) -> HiveJson {
        HiveJson {
            n: self.gl_n().unwrap_or(0),
            entries: self.values.iter().map(format_q).collect(),
        }
    }

    pub fn from_json(j: &HiveJson) -> Result<Self> {
        let values = j
            .entries
            .iter()
            .map(|s| crate::rational::parse_q(s).map_err(Error::Invalid))
            .collect::<Result<Vec<_>>>()?;
        Self::gl(j.n, values)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HiveJson {
    pub n: usize,
    pub entries: Vec<String>,
}

/// Boundary entries of a `GL_n` hive; interior entries are `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialHive {
    pub region: Arc<Region>,
    pub values: Vec<Option<Q>>,
}

impl PartialHive {
    /// The boundary entries in walk order, starting at the zero corner.
    pub fn boundary_walk(&self) -> Vec<Q> {
        let order = [2usize, 4, 0];
        order
            .iter()
            .flat_map(|&k| self.region.side(k).map(|e| e.from))
            .map(|p| self.values[self.region.index_of(p).unwrap()].clone().expect("boundary entry"))
            .collect()
    }
}

/// Fills in the boundary of a `GL_n` hive from `(λ, μ, ν)`.
pub fn boundary_from_weights(t: &BoundaryTriple) -> Result<PartialHive> {
    t.check_zero_sum()?;
    let region = Arc::new(Region::gl(t.n()));
    let mut values: Vec<Option<Q>> = vec![None; region.len()];
    let mut cur = Q::zero();
    values[region.index_of((0, 0)).unwrap()] = Some(cur.clone());
    for (k, w) in [(2usize, &t.lambda), (4, &t.mu), (0, &t.nu)] {
        for (e, d) in region.side(k).zip(w.iter()) {
            cur += d;
            let slot = &mut values[region.index_of(e.to).unwrap()];
            match slot {
                Some(v) => debug_assert_eq!(*v, cur),
                None => *slot = Some(cur.clone()),
            }
        }
    }
    Ok(PartialHive { region, values })
}

/// Coefficient of the new entry and the remaining `(index, coefficient)` terms.
type Closing = (i64, Vec<(usize, i64)>);

/// Depth-first search over integer interior values with the boundary fixed.
///
/// Interior points are assigned in the region's point order. A rhombus is
/// checked when its last interior corner in that order is assigned; the same
/// rhombus bounds that corner from above or below.
struct Search {
    /// Values at every region point; interior ones are overwritten in place.
    vals: Vec<i64>,
    order: Vec<usize>,
    /// For each step, the rhombi closing there: coefficient of the new
    /// entry and the other four `(index, coefficient)` terms.
    closing: Vec<Vec<Closing>>,
    /// Whether the rhombi with no interior corner are all nonnegative.
    boundary_ok: bool,
}

impl Search {
    fn new(partial: &PartialHive) -> Result<Self> {
        let region = &partial.region;
        let mut vals = vec![0i64; region.len()];
        let mut order = Vec::new();
        for (i, v) in partial.values.iter().enumerate() {
            match v {
                Some(x) => vals[i] = to_i64(x).ok_or(Error::NonIntegralBoundary)?,
                None => order.push(i),
            }
        }
        let step_of: HashMap<usize, usize> = order.iter().enumerate().map(|(s, &i)| (i, s)).collect();
        let mut closing = vec![Vec::new(); order.len()];
        let mut boundary_ok = true;
        for r in region.rhombi() {
            let terms: Vec<(usize, i64)> = r
                .obtuse
                .iter()
                .map(|&p| (region.index_of(p).unwrap(), 1))
                .chain(r.acute.iter().map(|&p| (region.index_of(p).unwrap(), -1)))
                .collect();
            let last = terms.iter().filter_map(|(i, _)| step_of.get(i)).max().copied();
            if let Some(s) = last {
                let me = order[s];
                let coef = terms.iter().filter(|(i, _)| *i == me).map(|(_, c)| c).sum();
                let rest = terms.into_iter().filter(|(i, _)| *i != me).collect();
                closing[s].push((coef, rest));
            } else {
                boundary_ok &= terms.iter().map(|(i, c)| c * vals[*i]).sum::<i64>() >= 0;
            }
        }
        for (s, cs) in closing.iter().enumerate() {
            let lower = cs.iter().any(|(c, _)| *c > 0);
            let upper = cs.iter().any(|(c, _)| *c < 0);
            if !(lower && upper) {
                return Err(Error::Invalid(format!("interior entry {s} is not bounded by earlier entries")));
            }
        }
        Ok(Self { vals, order, closing, boundary_ok })
    }

    /// Range allowed at `step` given earlier assignments; empty when `lo > hi`.
    fn range(&self, step: usize) -> (i64, i64) {
        let (mut lo, mut hi) = (i64::MIN, i64::MAX);
        for (coef, rest) in &self.closing[step] {
            // coef·x + Σ rest ≥ 0
            let s: i64 = rest.iter().map(|(i, c)| c * self.vals[*i]).sum();
            match coef {
                1 => lo = lo.max(-s),
                -1 => hi = hi.min(s),
                c if *c > 0 => lo = lo.max((-s).div_euclid(*c) + i64::from((-s).rem_euclid(*c) != 0)),
                c => hi = hi.min(s.div_euclid(-c)),
            }
        }
        (lo, hi)
    }

    /// Visits every completion in lexicographic order; `visit` returns false
    /// to stop early.
    fn run(&mut self, step: usize, visit: &mut dyn FnMut(&[i64]) -> bool) -> bool {
        if !self.boundary_ok {
            return true;
        }
        if step == self.order.len() {
            return visit(&self.vals);
        }
        let (lo, hi) = self.range(step);
        let slot = self.order[step];
        for x in lo..=hi {
            self.vals[slot] = x;
            if !self.run(step + 1, visit) {
                return false;
            }
        }
        true
    }
}

fn search_for(t: &BoundaryTriple) -> Result<(Arc<Region>, Search)> {
    t.check_zero_sum()?;
    if !t.is_integral() {
        return Err(Error::NonIntegralBoundary);
    }
    let partial = boundary_from_weights(t)?;
    let s = Search::new(&partial)?;
    Ok((partial.region, s))
}

/// Number of lattice hives with boundary `t`: the Littlewood-Richardson
/// coefficient `dim (V_λ ⊗ V_μ ⊗ V_ν)^GL(n)`.
pub fn count_lattice_hives(t: &BoundaryTriple) -> Result<u64> {
    let (_, mut s) = search_for(t)?;
    let mut count = 0u64;
    s.run(0, &mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// Whether at least one lattice hive exists.
pub fn has_lattice_hive(t: &BoundaryTriple) -> Result<bool> {
    let (_, mut s) = search_for(t)?;
    let mut found = false;
    s.run(0, &mut |_| {
        found = true;
        false
    });
    Ok(found)
}

/// All lattice hives with boundary `t`, sorted lexicographically.
pub fn enumerate_lattice_hives(t: &BoundaryTriple) -> Result<Vec<Hive>> {
    let (region, mut s) = search_for(t)?;
    let mut out = Vec::new();
    s.run(0, &mut |v| {
        out.push(v.to_vec());
        true
    });
    out.into_iter()
        .map(|v| Hive::new(region.clone(), v.into_iter().map(q).collect()))
        .collect()
}

/// `ν = (−σₙ, …, −σ₁)`.
pub fn reverse_negate(sigma: &[i64]) -> Vec<i64> {
    sigma.iter().rev().map(|x| -x).collect()
}

fn dominant_with_sum(n: usize, hi: i64, lo: i64, sum: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, top: i64, lo: i64, sum: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let left = (n - cur.len()) as i64;
        for x in (lo..=top).rev() {
            // remaining entries lie in [lo, x]
            if x * left < sum || lo * left > sum {
                continue;
            }
            cur.push(x);
            rec(n, x, lo, sum - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, hi, lo, sum, &mut Vec::new(), &mut out);
    out
}

/// `V_λ ⊗ V_μ = ⊕ V_σ^{c_σ}`, as `(σ, c_σ)` with `c_σ > 0`, σ in decreasing
/// lexicographic order.
pub fn decompose_tensor_product(lambda: &[i64], mu: &[i64]) -> Result<Vec<(Vec<i64>, u64)>> {
    let n = lambda.len();
    if n == 0 || mu.len() != n {
        return Err(Error::LengthMismatch);
    }
    for w in [lambda, mu] {
        if !w.windows(2).all(|p| p[0] >= p[1]) {
            return Err(Error::NotDominant(w.iter().map(|x| x.to_string()).collect()));
        }
    }
    let total: i64 = lambda.iter().sum::<i64>() + mu.iter().sum::<i64>();
    let mut out = Vec::new();
    for sigma in dominant_with_sum(n, lambda[0] + mu[0], lambda[n - 1] + mu[n - 1], total) {
        let t = BoundaryTriple::from_ints(lambda, mu, &reverse_negate(&sigma))?;
        let c = count_lattice_hives(&t)?;
        if c > 0 {
            out.push((sigma, c));
        }
    }
    Ok(out)
}

/// Groups the triangles of the hive region into maximal regions on which
/// the hive is affine: two triangles sharing an edge are joined when their
/// rhombus has value 0. Regions are sorted, as are their triangles.
pub fn flatspace_decomposition(h: &Hive) -> Vec<Vec<Triangle>> {
    let region = h.region();
    let tris = region.triangles();
    let mut parent: Vec<usize> = (0..tris.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for r in region.rhombi() {
        if h.rhombus_value(r).is_zero() {
            let (up, down) = r.edge.triangles();
            let (a, b) = (region.triangle_index(&up).unwrap(), region.triangle_index(&down).unwrap());
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut groups: HashMap<usize, Vec<Triangle>> = HashMap::new();
    for (i, t) in tris.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(*t);
    }
    let mut out: Vec<Vec<Triangle>> = groups.into_values().collect();
    for g in out.iter_mut() {
        g.sort();
    }
    out.sort();
    out
}

/// Number of integral Gelfand-Cetlin patterns with top row `λ`.
pub fn count_gt_patterns(lambda: &[i64]) -> Result<u64> {
    if !lambda.windows(2).all(|p| p[0] >= p[1]) {
        return Err(Error::NotDominant(lambda.iter().map(|x| x.to_string()).collect()));
    }
    fn below(row: &[i64], memo: &mut HashMap<Vec<i64>, u64>) -> u64 {
        if row.len() <= 1 {
            return 1;
        }
        if let Some(&c) = memo.get(row) {
            return c;
        }
        let mut total = 0;
        let mut next = vec![0i64; row.len() - 1];
        fn fill(row: &[i64], next: &mut Vec<i64>, i: usize, memo: &mut HashMap<Vec<i64>, u64>, total: &mut u64) {
            if i == next.len() {
                *total += below(next, memo);
                return;
            }
            for x in row[i + 1]..=row[i] {
                next[i] = x;
                fill(row, next, i + 1, memo, total);
            }
        }
        fill(row, &mut next, 0, memo, &mut total);
        memo.insert(row.to_vec(), total);
        total
    }
    Ok(below(lambda, &mut HashMap::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(l: &[i64], m: &[i64], n: &[i64]) -> BoundaryTriple {
        BoundaryTriple::from_ints(l, m, n).unwrap()
    }

    #[test]
    fn boundary_partial_sums() {
        let p = boundary_from_weights(&t(&[1, 0], &[1, 0], &[-1, -1])).unwrap();
        assert_eq!(p.boundary_walk(), weight(&[0, 1, 1, 2, 2, 1]));
        let p = boundary_from_weights(&t(&[2, 1, 0], &[2, 1, 0], &[-1, -2, -3])).unwrap();
        assert_eq!(p.boundary_walk(), weight(&[0, 2, 3, 3, 5, 6, 6, 5, 3]));
        let p = boundary_from_weights(&t(&[0, 0, 0], &[0, 0, 0], &[0, 0, 0])).unwrap();
        assert!(p.values.iter().flatten().all(|v| v.is_zero()));
        assert!(p.values.iter().filter(|v| v.is_none()).count() == 1);
    }

    #[test]
    fn zero_sum_is_required() {
        assert!(matches!(
            boundary_from_weights(&t(&[3, 0], &[1, 0], &[0, -1])),
            Err(Error::ZeroSumViolation(_))
        ));
    }

    #[test]
    fn adjoint_square_counts() {
        assert_eq!(count_lattice_hives(&t(&[2, 1, 0], &[2, 1, 0], &[-1, -2, -3])).unwrap(), 2);
        let d = decompose_tensor_product(&[2, 1, 0], &[2, 1, 0]).unwrap();
        let expect: Vec<(Vec<i64>, u64)> = vec![
            (vec![4, 2, 0], 1),
            (vec![4, 1, 1], 1),
            (vec![3, 3, 0], 1),
            (vec![3, 2, 1], 2),
            (vec![2, 2, 2], 1),
        ];
        assert_eq!(d, expect);
        assert_eq!(d.iter().map(|(_, c)| c).sum::<u64>(), 6);
    }

    #[test]
    fn small_decompositions() {
        assert_eq!(
            decompose_tensor_product(&[1, 0], &[1, 0]).unwrap(),
            vec![(vec![2, 0], 1), (vec![1, 1], 1)]
        );
        assert_eq!(decompose_tensor_product(&[3, 1, -2], &[0, 0, 0]).unwrap(), vec![(vec![3, 1, -2], 1)]);
    }

    #[test]
    fn all_boundary_rhombi_are_checked() {
        let t = BoundaryTriple::from_ints(&[8, 7], &[8, 2], &[-11, -14]).unwrap();
        assert_eq!(count_lattice_hives(&t).unwrap(), 0);
        assert!(!has_lattice_hive(&t).unwrap());
    }

    #[test]
    fn gl1_counts_zero_sum() {
        assert_eq!(count_lattice_hives(&t(&[5], &[-2], &[-3])).unwrap(), 1);
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let hs = enumerate_lattice_hives(&t(&[4, 2, 0], &[3, 1, 0], &[-1, -3, -6])).unwrap();
        assert!(!hs.is_empty());
        for w in hs.windows(2) {
            assert!(w[0].values() < w[1].values());
        }
        for h in &hs {
            h.check_rhombi().unwrap();
            assert_eq!(h.boundary_triple().unwrap(), t(&[4, 2, 0], &[3, 1, 0], &[-1, -3, -6]));
        }
    }

    #[test]
    fn gt_counts() {
        assert_eq!(count_gt_patterns(&[0, 0, 0]).unwrap(), 1);
        assert_eq!(count_gt_patterns(&[1, 0]).unwrap(), 2);
        assert_eq!(count_gt_patterns(&[2, 1, 0]).unwrap(), 8);
    }

    #[test]
    fn flatspaces_of_extreme_hives() {
        let zero = Hive::gl(3, vec![Q::zero(); 10]).unwrap();
        assert_eq!(flatspace_decomposition(&zero).len(), 1);
        let region = Region::gl(3);
        let generic = Hive::gl(3, region.points().iter().map(|&p| q(-crate::lattice::norm2(p))).collect()).unwrap();
        assert_eq!(flatspace_decomposition(&generic).len(), 9);
    }

    #[test]
    fn hive_json_round_trips() {
        let hs = enumerate_lattice_hives(&t(&[2, 1, 0], &[2, 1, 0], &[-1, -2, -3])).unwrap();
        for h in hs {
            let j = serde_json::to_string(&h.to_json()).unwrap();
            let back: HiveJson = serde_json::from_str(&j).unwrap();
            assert_eq!(Hive::from_json(&back).unwrap(), h);
        }
    }
}

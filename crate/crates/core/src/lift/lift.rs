//! The largest lift of a boundary triple: the hive maximizing `wperim`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hive::{boundary_from_weights, BoundaryTriple, Hive, HiveJson};
use crate::honeycomb::{diagram, elide, Diagram, Honeycomb, VertexKind};
use crate::lattice::Region;
use crate::rational::{format_q, Q};

use super::simplex::{maximize, verify_certificate, LpSolution};
use super::weights::{make_weight_function, wperim_objective, WeightFunction};

/// The hive polytope over `t` as `A y ≤ b, y ≥ 0` with `y = x − L`, where
/// `x` are the interior entries and `L` the smallest boundary entry. Hives
/// are concave along lattice lines, so every interior entry is at least `L`.
#[derive(Debug, Clone)]
pub struct HiveLp {
    pub region: Arc<Region>,
    /// Region indices of the variables.
    pub interior: Vec<usize>,
    pub boundary: Vec<Option<Q>>,
    pub lower: Q,
    pub a: Vec<Vec<Q>>,
    pub b: Vec<Q>,
}

impl HiveLp {
    pub fn new(t: &BoundaryTriple) -> Result<Self> {
        let partial = boundary_from_weights(t)?;
        let region = partial.region.clone();
        let interior: Vec<usize> = (0..region.len()).filter(|&i| partial.values[i].is_none()).collect();
        let lower = partial.values.iter().flatten().min().cloned().unwrap_or_else(Q::zero);
        let var = |i: usize| interior.iter().position(|&j| j == i);
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for r in region.rhombi() {
            // value = Σ± f ≥ 0  →  −Σ± y ≤ const + Σ± L over the variables.
            let mut row = vec![Q::zero(); interior.len()];
            let mut rhs = Q::zero();
            let terms = r.obtuse.iter().map(|&p| (p, Q::one())).chain(r.acute.iter().map(|&p| (p, -Q::one())));
            for (p, s) in terms {
                let i = region.index_of(p).unwrap();
                match var(i) {
                    Some(k) => {
                        row[k] -= &s;
                        rhs += &s * &lower;
                    }
                    None => rhs += &s * partial.values[i].as_ref().unwrap(),
                }
            }
            a.push(row);
            b.push(rhs);
        }
        Ok(Self { region, interior, boundary: partial.values, lower, a, b })
    }

    pub fn hive(&self, y: &[Q]) -> Hive {
        let mut vals: Vec<Q> = self.boundary.iter().map(|v| v.clone().unwrap_or_else(Q::zero)).collect();
        for (k, &i) in self.interior.iter().enumerate() {
            vals[i] = &y[k] + &self.lower;
        }
        Hive::new(self.region.clone(), vals).expect("sizes agree")
    }

    pub fn y_of(&self, h: &Hive) -> Vec<Q> {
        self.interior.iter().map(|&i| &h.values()[i] - &self.lower).collect()
    }

    /// Maximizes `c·x` over the interior entries.
    pub fn maximize(&self, c: &[Q]) -> Result<LpSolution> {
        maximize(c, &self.a, &self.b)
    }

    /// Whether the face `{c·y = value}` of the polytope is a single point.
    pub fn optimum_is_unique(&self, c: &[Q], s: &LpSolution) -> Result<bool> {
        if !s.zero_reduced_cost {
            return Ok(true);
        }
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        a.push(c.iter().map(|x| -x).collect());
        b.push(-&s.value);
        for k in 0..c.len() {
            let mut e = vec![Q::zero(); c.len()];
            e[k] = Q::one();
            let hi = maximize(&e, &a, &b)?.value;
            e[k] = -Q::one();
            let lo = -maximize(&e, &a, &b)?.value;
            if hi != lo {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone)]
pub struct LiftReport {
    pub hive: Hive,
    pub integral: bool,
    pub vertex_kinds: BTreeMap<VertexKind, usize>,
    pub max_multiplicity: Q,
    /// `None` when the diagram is not simply degenerate.
    pub acyclic: Option<bool>,
    pub objective_value: Q,
    pub lp: LpSolution,
    pub certified: bool,
    pub seed: u64,
    pub diagram: Diagram,
}

impl LiftReport {
    pub fn six_valent(&self) -> usize {
        self.vertex_kinds.get(&VertexKind::SixValent).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> LiftReportJson {
        LiftReportJson {
            hive: self.hive.to_json(),
            integral: self.integral,
            vertex_kinds: self.vertex_kinds.iter().map(|(k, v)| (k.name().to_string(), *v)).collect(),
            // Honeycomb multiplicities count coincident edges.
            max_multiplicity: self.max_multiplicity.to_integer().to_u64().expect("small multiplicity"),
            acyclic: self.acyclic,
            objective_value: format_q(&self.objective_value),
            seed: self.seed,
            certified: self.certified,
            dual: self.lp.dual.iter().map(format_q).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftReportJson {
    pub hive: HiveJson,
    pub integral: bool,
    pub vertex_kinds: BTreeMap<String, usize>,
    pub max_multiplicity: u64,
    /// `null` when the diagram has vertices elision does not handle.
    pub acyclic: Option<bool>,
    pub objective_value: String,
    pub seed: u64,
    pub certified: bool,
    /// Optimal multipliers on the rhombus inequalities.
    pub dual: Vec<String>,
}

/// The unique `wperim`-maximizing hive over `t`.
pub fn largest_lift(t: &BoundaryTriple, w: &WeightFunction) -> Result<LiftReport> {
    if w.n() != t.n() {
        return Err(Error::LengthMismatch);
    }
    let lp = HiveLp::new(t)?;
    let obj = wperim_objective(w);
    let c = obj.interior();
    let s = lp.maximize(&c).map_err(|e| match e {
        // Bounded by properness; an unbounded LP means a broken system.
        Error::Unbounded => panic!("hive LP reported unbounded"),
        e => e,
    })?;
    if !lp.optimum_is_unique(&c, &s)? {
        return Err(Error::DegenerateOptimum);
    }
    let certified = verify_certificate(&c, &lp.a, &lp.b, &s);
    let hive = lp.hive(&s.y);
    let h = Honeycomb::from_hive(&hive)?;
    let m = diagram(&h);
    let acyclic = elide(&m).ok().map(|g| g.is_acyclic());
    Ok(LiftReport {
        integral: hive.is_integral(),
        vertex_kinds: m.kind_histogram(),
        max_multiplicity: m.max_multiplicity(),
        acyclic,
        objective_value: obj.evaluate(&hive),
        lp: s,
        certified,
        seed: w.seed,
        hive,
        diagram: m,
    })
}

/// [`largest_lift`] with weights from `seed`, re-perturbing from a derived
/// seed if the optimum is not unique.
pub fn largest_lift_seeded(t: &BoundaryTriple, seed: u64) -> Result<LiftReport> {
    let mut s = seed;
    for _ in 0..8 {
        match largest_lift(t, &make_weight_function(t.n(), s)) {
            Err(Error::DegenerateOptimum) => {
                log::info!("tie at seed {s}; re-perturbing");
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            }
            r => return r,
        }
    }
    Err(Error::DegenerateOptimum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hive::enumerate_lattice_hives;
    use crate::oracles::enumerate_polytope_vertices;
    use crate::rational::q;

    #[test]
    fn gl2_is_pinned() {
        let t = BoundaryTriple::from_ints(&[3, 1], &[2, 0], &[-2, -4]).unwrap();
        let r = largest_lift_seeded(&t, 1).unwrap();
        assert!(r.integral);
        assert_eq!(r.hive, enumerate_lattice_hives(&t).unwrap()[0]);
    }

    #[test]
    fn adjoint_square_lift_is_not_six_valent() {
        let t = BoundaryTriple::from_ints(&[2, 1, 0], &[2, 1, 0], &[-1, -2, -3]).unwrap();
        let r = largest_lift_seeded(&t, 1).unwrap();
        assert!(r.certified);
        assert_eq!(r.six_valent(), 0);
        let hives = enumerate_lattice_hives(&t).unwrap();
        assert!(hives.contains(&r.hive));
        let six: Vec<bool> = hives
            .iter()
            .map(|h| diagram(&Honeycomb::from_hive(h).unwrap()).kind_histogram().contains_key(&VertexKind::SixValent))
            .collect();
        assert_eq!(six.iter().filter(|x| **x).count(), 1);
    }

    #[test]
    fn infeasible() {
        let t = BoundaryTriple::from_ints(&[2, 0, 0], &[0, 0, 0], &[0, -1, -1]).unwrap();
        assert!(matches!(largest_lift_seeded(&t, 1), Err(Error::Infeasible)));
    }

    #[test]
    fn optimum_matches_vertex_scan() {
        for (l, m, nu) in [
            ([4, 2, 0], [3, 1, 0], [-1, -3, -6]),
            ([5, 2, 0], [4, 2, 1], [-2, -4, -8]),
            ([3, 2, 0], [3, 1, 0], [-1, -3, -5]),
        ] {
            let t = BoundaryTriple::from_ints(&l, &m, &nu).unwrap();
            let w = make_weight_function(3, 11);
            let obj = wperim_objective(&w);
            let r = largest_lift(&t, &w).unwrap();
            let best = enumerate_polytope_vertices(&t).unwrap().iter().map(|h| obj.evaluate(h)).max().unwrap();
            assert_eq!(r.objective_value, best);
        }
    }

    #[test]
    fn zero_objective_is_degenerate() {
        let t = BoundaryTriple::from_ints(&[4, 2, 0], &[3, 1, 0], &[-1, -3, -6]).unwrap();
        let lp = HiveLp::new(&t).unwrap();
        let c = vec![q(0); lp.interior.len()];
        let s = lp.maximize(&c).unwrap();
        assert!(s.zero_reduced_cost);
        assert!(!lp.optimum_is_unique(&c, &s).unwrap());
    }
}

//! Configurations of a tinkertoy: honeycombs, and their translation to and
//! from hives.

use std::collections::VecDeque;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hive::{BoundaryTriple, Hive};
use crate::lattice::{LPoint, Triangle};
use crate::plane::{Axis, PlanePoint};
use crate::rational::{q, Q};

use super::tinkertoy::Tinkertoy;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Honeycomb {
    toy: Arc<Tinkertoy>,
    positions: Vec<PlanePoint>,
}

/// Displacement `to - from` as a multiple of the forward step of `axis`,
/// if it lies along that axis.
fn length_along(axis: Axis, from: &PlanePoint, to: &PlanePoint) -> Option<Q> {
    let d = to - from;
    if !d.coord(axis).is_zero() {
        return None;
    }
    Some(d.param(axis).clone())
}

/// Checks `pos(head) - pos(tail) ∈ ℝ≥0 · d(e)` for every two-ended edge.
pub fn validate_configuration(toy: Arc<Tinkertoy>, positions: Vec<PlanePoint>) -> Result<Honeycomb> {
    if positions.len() != toy.vertex_count() {
        return Err(Error::Invalid(format!(
            "expected {} positions, got {}",
            toy.vertex_count(),
            positions.len()
        )));
    }
    for (i, e) in toy.edges().iter().enumerate() {
        if let (Some(t), Some(h)) = (e.tail, e.head) {
            match length_along(e.axis, &positions[t], &positions[h]) {
                Some(l) if !l.is_negative() => {}
                _ => return Err(Error::DirectionViolation(i)),
            }
        }
    }
    Ok(Honeycomb { toy, positions })
}

impl Honeycomb {
    pub fn tinkertoy(&self) -> &Arc<Tinkertoy> {
        &self.toy
    }

    pub fn positions(&self) -> &[PlanePoint] {
        &self.positions
    }

    pub fn position(&self, v: usize) -> &PlanePoint {
        &self.positions[v]
    }

    pub fn ty(&self) -> [i64; 6] {
        self.toy.ty()
    }

    /// The standard configuration of `toy`.
    pub fn standard(toy: Arc<Tinkertoy>) -> Self {
        let positions = toy.standard_positions();
        Self { toy, positions }
    }

    /// Constant coordinate of edge `e`.
    pub fn constant(&self, e: usize) -> &Q {
        let edge = &self.toy.edges()[e];
        self.positions[edge.anchor()].coord(edge.axis)
    }

    /// Length of a two-ended edge; `None` for semi-infinite ones.
    pub fn edge_length(&self, e: usize) -> Option<Q> {
        let edge = &self.toy.edges()[e];
        let (t, h) = (edge.tail?, edge.head?);
        length_along(edge.axis, &self.positions[t], &self.positions[h])
    }

    pub fn degenerate_edges(&self) -> Vec<usize> {
        (0..self.toy.edges().len())
            .filter(|&e| self.edge_length(e).is_some_and(|l| l.is_zero()))
            .collect()
    }

    pub fn degenerate_vertices(&self) -> Vec<usize> {
        let bad = self.degenerate_edges();
        (0..self.toy.vertex_count())
            .filter(|&v| self.toy.incident(v).iter().any(|e| bad.contains(e)))
            .collect()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.degenerate_edges().is_empty()
    }

    pub fn is_lattice(&self) -> bool {
        self.positions.iter().all(|p| p.is_lattice())
    }

    /// Constant coordinates of the semi-infinite edges on side `k`, in walk
    /// order.
    pub fn side_constants(&self, k: usize) -> Vec<Q> {
        let mut v: Vec<(usize, Q)> = self
            .toy
            .semi_infinite()
            .filter(|(_, e)| e.boundary.unwrap().0 == k)
            .map(|(i, e)| (e.boundary.unwrap().1, self.constant(i).clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v.into_iter().map(|(_, c)| c).collect()
    }

    /// `(λ, μ, ν)` of a `GL_n` honeycomb.
    pub fn boundary_conditions(&self) -> Result<BoundaryTriple> {
        if self.toy.gl_n().is_none() {
            return Err(Error::Invalid(format!("type {:?} is not a GL_n type", self.ty())));
        }
        BoundaryTriple::new(self.side_constants(2), self.side_constants(4), self.side_constants(0))
    }

    /// The hive of this honeycomb, zero at the region's first point.
    pub fn to_hive(&self) -> Hive {
        let region = self.toy.region().clone();
        let mut f: Vec<Option<Q>> = vec![None; region.len()];
        f[0] = Some(Q::zero());
        // Constant of the honeycomb edge crossing each lattice edge.
        let mut crossing = std::collections::HashMap::new();
        for (i, e) in self.toy.edges().iter().enumerate() {
            crossing.insert(e.dual, self.constant(i).clone());
        }
        let mut queue = VecDeque::from([region.points()[0]]);
        while let Some(p) = queue.pop_front() {
            let fp = f[region.index_of(p).unwrap()].clone().unwrap();
            for nb in crate::lattice::neighbours(p) {
                let Some(j) = region.index_of(nb) else { continue };
                if f[j].is_some() {
                    continue;
                }
                let d = crate::lattice::DualEdge::new(p, nb);
                let Some(c) = crossing.get(&d) else { continue };
                // f(q) - f(p) = c, or f(p) - f(q) = c for x-edges; oriented p < q.
                let step = if d.axis() == Axis::X { -c } else { c.clone() };
                let val = if d.p == p { &fp + &step } else { &fp - &step };
                f[j] = Some(val);
                queue.push_back(nb);
            }
        }
        Hive::new(region, f.into_iter().map(|v| v.expect("region is connected")).collect())
            .expect("sizes agree")
    }

    /// The configuration of the tinkertoy of `h`'s region given by `h`.
    pub fn from_hive(h: &Hive) -> Result<Self> {
        h.check_rhombi()?;
        let toy = Arc::new(Tinkertoy::from_region(h.region().clone()));
        let positions = toy
            .vertices()
            .iter()
            .map(|t| vertex_from_hive(h, t))
            .collect();
        validate_configuration(toy, positions)
    }

    pub fn to_json(&self) -> HoneycombJson {
        HoneycombJson { ty: self.ty(), positions: self.positions.clone() }
    }

    pub fn from_json(j: &HoneycombJson) -> Result<Self> {
        let toy = Arc::new(Tinkertoy::from_type(j.ty)?);
        validate_configuration(toy, j.positions.clone())
    }

    pub fn translated(&self, by: &PlanePoint) -> Self {
        Self { toy: self.toy.clone(), positions: self.positions.iter().map(|p| p + by).collect() }
    }

    pub fn scaled(&self, s: &Q) -> Self {
        Self { toy: self.toy.clone(), positions: self.positions.iter().map(|p| p.clone() * s).collect() }
    }

    /// Every vertex at the origin.
    pub fn collapsed(toy: Arc<Tinkertoy>) -> Self {
        let positions = vec![PlanePoint::origin(); toy.vertex_count()];
        Self { toy, positions }
    }
}

/// Position of a tinkertoy vertex read from the hive: coordinate `c` is the
/// constant of the triangle edge of axis `c`.
fn vertex_from_hive(h: &Hive, t: &Triangle) -> PlanePoint {
    let v = t.vertices();
    let f = |p: LPoint| h.get(p).clone();
    let mut c = [q(0), q(0), q(0)];
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        let e = crate::lattice::DualEdge::new(v[i], v[j]);
        c[e.axis().index()] = e.constant(f);
    }
    let [x, y, z] = c;
    PlanePoint::new(x, y, z).expect("hive positions lie in the plane")
}

pub fn hive_to_honeycomb(h: &Hive) -> Result<Honeycomb> {
    Honeycomb::from_hive(h)
}

pub fn honeycomb_to_hive(h: &Honeycomb) -> Hive {
    h.to_hive()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoneycombJson {
    #[serde(rename = "type")]
    pub ty: [i64; 6],
    pub positions: Vec<PlanePoint>,
}

//! Rebuilding a honeycomb from its diagram, and the operations built on it:
//! degeneracy graphs, overlay and PRV witnesses.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};

use crate::error::{DiagramDefect, Error, Result};
use crate::hive::{is_dominant, Weight};
use crate::lattice::{LPoint, Region, Triangle};
use crate::plane::PlanePoint;
use crate::rational::{format_q, Q};

use super::config::{validate_configuration, Honeycomb};
use super::diagram::{diagram, Diagram, DiagramVertex};
use super::tinkertoy::Tinkertoy;

fn defect(d: DiagramDefect) -> Error {
    Error::NotADiagram(d)
}

fn int_type(m: &[Q; 6]) -> [i64; 6] {
    m.clone().map(|v| v.to_integer().to_i64().expect("multiplicity fits in i64"))
}

/// The region a vertex collapses from, as given by its local multiplicities.
pub fn vertex_region(v: &DiagramVertex) -> Result<Region> {
    Region::from_type(int_type(&v.multiplicities))
}

/// Checks the diagram axioms that do not need the reconstruction itself.
fn check_axioms(m: &Diagram) -> Result<()> {
    if m.segments().iter().any(|s| !s.multiplicity.is_integer()) {
        return Err(defect(DiagramDefect::NonintegralMultiplicity));
    }
    if !m.tension_defects().is_empty() {
        return Err(defect(DiagramDefect::Tension));
    }
    if m.vertices().is_empty() {
        return Err(defect(DiagramDefect::ParallelLines));
    }
    let index: HashMap<&PlanePoint, usize> = m.vertices().iter().enumerate().map(|(i, v)| (&v.location, i)).collect();
    let mut parent: Vec<usize> = (0..m.vertices().len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for s in m.segments() {
        let Some(&a) = index.get(&s.base) else {
            return Err(defect(DiagramDefect::Disconnected));
        };
        if let Some(end) = s.end() {
            let b = *index.get(&end).ok_or(defect(DiagramDefect::Tension))?;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let root = find(&mut parent, 0);
    if (0..parent.len()).any(|i| find(&mut parent, i) != root) {
        return Err(defect(DiagramDefect::Disconnected));
    }
    Ok(())
}

/// The honeycomb whose diagram is `m`. Vertex positions are the diagram's
/// own, so the result is pinned by `m` itself; the tinkertoy is the one of
/// `m`'s ray census.
pub fn reconstruct(m: &Diagram) -> Result<Honeycomb> {
    check_axioms(m)?;
    let mono = || defect(DiagramDefect::Monodromy);
    let verts = m.vertices();
    let index: HashMap<&PlanePoint, usize> = verts.iter().enumerate().map(|(i, v)| (&v.location, i)).collect();
    let regions: Vec<Region> = verts.iter().map(vertex_region).collect::<Result<_>>().map_err(|_| mono())?;

    // Neighbours along finite segments: (direction leaving v, other vertex).
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); verts.len()];
    for s in m.segments() {
        if let Some(end) = s.end() {
            let (a, b) = (index[&s.base], index[&end]);
            let k = s.direction.index();
            adj[a].push((k, b));
            adj[b].push(((k + 3) % 6, a));
        }
    }

    // Offset of each vertex region inside the big region, found by walking
    // the segment graph; every other segment re-checks the placement.
    let mut offset: Vec<Option<LPoint>> = vec![None; verts.len()];
    offset[0] = Some((0, 0));
    let mut queue = VecDeque::from([0usize]);
    let add = |p: LPoint, q: LPoint| (p.0 + q.0, p.1 + q.1);
    let sub = |p: LPoint, q: LPoint| (p.0 - q.0, p.1 - q.1);
    while let Some(v) = queue.pop_front() {
        let ov = offset[v].unwrap();
        for &(k, u) in &adj[v] {
            let (rv, ru) = (&regions[v], &regions[u]);
            let start = add(ov, rv.corner(k));
            let stop = add(ov, rv.corner(k + 1));
            let ou = sub(start, ru.corner(k + 4));
            if add(ou, ru.corner(k + 3)) != stop {
                return Err(mono());
            }
            match offset[u] {
                None => {
                    offset[u] = Some(ou);
                    queue.push_back(u);
                }
                Some(prev) if prev != ou => return Err(mono()),
                _ => {}
            }
        }
    }

    let census = m.ray_census();
    let big = Arc::new(Region::from_type(int_type(&census)).map_err(|_| mono())?);
    let mut placed: BTreeMap<Triangle, usize> = BTreeMap::new();
    for (v, r) in regions.iter().enumerate() {
        let o = offset[v].ok_or_else(mono)?;
        for t in r.triangles() {
            let moved = Triangle { a: t.a + o.0, b: t.b + o.1, kind: t.kind };
            if placed.insert(moved, v).is_some() {
                return Err(mono());
            }
        }
    }
    let min_a = placed.keys().map(|t| t.a).min().unwrap();
    let min_b = placed.keys().map(|t| t.b).min().unwrap();
    let placed: BTreeMap<Triangle, usize> = placed
        .into_iter()
        .map(|(t, v)| (Triangle { a: t.a - min_a, b: t.b - min_b, kind: t.kind }, v))
        .collect();
    if !placed.keys().eq(big.triangles().iter()) {
        return Err(mono());
    }
    let toy = Arc::new(Tinkertoy::from_region(big));
    let positions = placed.values().map(|&v| verts[v].location.clone()).collect();
    let h = validate_configuration(toy, positions).map_err(|_| mono())?;
    if &diagram(&h) != m {
        return Err(mono());
    }
    Ok(h)
}

/// One flat region of a honeycomb: triangles collapsed to one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyRegion {
    pub triangles: Vec<Triangle>,
    /// Index into the diagram's vertex list.
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyGraph {
    /// Lattice edges kept: those crossed by an edge of positive length.
    pub edges: Vec<crate::lattice::DualEdge>,
    pub regions: Vec<DegeneracyRegion>,
}

impl DegeneracyGraph {
    /// Whether every region, translated to the origin, is the region of its
    /// diagram vertex's type (hence convex).
    pub fn regions_match_vertices(&self, m: &Diagram) -> bool {
        self.regions.iter().all(|r| {
            let Ok(expect) = vertex_region(&m.vertices()[r.vertex]) else { return false };
            let ma = r.triangles.iter().map(|t| t.a).min().unwrap();
            let mb = r.triangles.iter().flat_map(|t| t.vertices()).map(|p| p.1).min().unwrap();
            let moved: Vec<Triangle> =
                r.triangles.iter().map(|t| Triangle { a: t.a - ma, b: t.b - mb, kind: t.kind }).collect();
            moved == expect.triangles()
        })
    }
}

/// The dual graph of a tinkertoy is its region.
pub fn dual_graph(t: &Tinkertoy) -> &Region {
    t.region()
}

pub fn degeneracy_graph(h: &Honeycomb) -> DegeneracyGraph {
    let toy = h.tinkertoy();
    let region = toy.region();
    let mut edges = Vec::new();
    for (i, e) in toy.edges().iter().enumerate() {
        if h.edge_length(i).is_none_or(|l| l.is_positive()) {
            edges.push(e.dual);
        }
    }
    edges.sort();
    let d = diagram(h);
    let hive = h.to_hive();
    let regions = crate::hive::flatspace_decomposition(&hive)
        .into_iter()
        .map(|triangles| {
            let v = region.triangle_index(&triangles[0]).unwrap();
            let loc = h.position(v);
            let vertex = d.vertices().iter().position(|x| &x.location == loc).expect("flat region has a vertex");
            DegeneracyRegion { triangles, vertex }
        })
        .collect();
    DegeneracyGraph { edges, regions }
}

/// The honeycomb whose diagram is the sum of the two diagrams.
pub fn overlay(h1: &Honeycomb, h2: &Honeycomb) -> Result<Honeycomb> {
    let sum = diagram(h1).sum(&diagram(h2));
    if sum.vertices().is_empty() {
        return Err(Error::ParallelLinesOnly);
    }
    reconstruct(&sum)
}

/// The `GL_1` honeycomb with boundary `(a, b, -a-b)`.
pub fn tripod(a: &Q, b: &Q) -> Honeycomb {
    let toy = Arc::new(Tinkertoy::gl(1));
    let p = PlanePoint::new(-(a + b), a.clone(), b.clone()).expect("in plane");
    validate_configuration(toy, vec![p]).expect("a single vertex is a configuration")
}

/// Overlays the tripods `(λ_{w(i)}, μ_{v(i)})`. The permutations are given as
/// 0-based image lists.
pub fn prv_witness(lambda: &Weight, mu: &Weight, w: &[usize], v: &[usize]) -> Result<Honeycomb> {
    let n = lambda.len();
    if mu.len() != n || w.len() != n || v.len() != n {
        return Err(Error::LengthMismatch);
    }
    for p in [w, v] {
        let mut s = p.to_vec();
        s.sort();
        if s != (0..n).collect::<Vec<_>>() {
            return Err(Error::Invalid(format!("{p:?} is not a permutation")));
        }
    }
    for wt in [lambda, mu] {
        if !is_dominant(wt) {
            return Err(Error::NotDominant(wt.iter().map(format_q).collect()));
        }
    }
    let sum: Weight = (0..n).map(|i| &lambda[w[i]] + &mu[v[i]]).collect();
    if !is_dominant(&sum) {
        return Err(Error::NotDominant(sum.iter().map(format_q).collect()));
    }
    let mut acc = tripod(&lambda[w[0]], &mu[v[0]]);
    for i in 1..n {
        acc = overlay(&acc, &tripod(&lambda[w[i]], &mu[v[i]]))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hive::{enumerate_lattice_hives, BoundaryTriple};
    use crate::honeycomb::VertexKind;
    use crate::rational::q;

    #[test]
    fn single_y_reconstructs_tau1() {
        let t = tripod(&q(2), &q(-1));
        let h = reconstruct(&diagram(&t)).unwrap();
        assert_eq!(h, t);
    }

    #[test]
    fn two_tripods_cross_once() {
        let h = overlay(&tripod(&q(0), &q(0)), &tripod(&q(3), &q(-1))).unwrap();
        assert_eq!(h.ty(), [2, 0, 2, 0, 2, 0]);
        let d = diagram(&h);
        assert_eq!(d.kind_histogram().get(&VertexKind::Crossing), Some(&1));
    }

    #[test]
    fn roundtrip_on_enumerated_hives() {
        let t = BoundaryTriple::from_ints(&[2, 1, 0], &[2, 1, 0], &[-1, -2, -3]).unwrap();
        let mut six = 0;
        for hive in enumerate_lattice_hives(&t).unwrap() {
            let h = Honeycomb::from_hive(&hive).unwrap();
            let d = diagram(&h);
            assert_eq!(reconstruct(&d).unwrap(), h);
            let g = degeneracy_graph(&h);
            assert!(g.regions_match_vertices(&d));
            assert_eq!(g.regions.len(), d.vertices().len());
            six += d.kind_histogram().get(&VertexKind::SixValent).copied().unwrap_or(0);
        }
        assert_eq!(six, 1);
    }

    #[test]
    fn prv_for_the_adjoint() {
        let l = crate::hive::weight(&[2, 1, 0]);
        let h = prv_witness(&l, &l, &[0, 1, 2], &[2, 1, 0]).unwrap();
        assert!(h.is_lattice());
        let b = h.boundary_conditions().unwrap();
        assert_eq!(b, BoundaryTriple::from_ints(&[2, 1, 0], &[2, 1, 0], &[-2, -2, -2]).unwrap());
        assert!(matches!(prv_witness(&l, &l, &[2, 1, 0], &[2, 1, 0]), Err(Error::NotDominant(_))));
    }

    #[test]
    fn defects_are_named() {
        let p = |axis, c: i64, lo: Option<i64>, hi: Option<i64>, m: Q| super::super::Piece {
            line: crate::plane::LineInterval { axis, constant: q(c), lo: lo.map(q), hi: hi.map(q) },
            multiplicity: m,
        };
        use crate::plane::Axis::*;
        let lines = Diagram::from_pieces(&[p(X, 0, None, None, q(1)), p(X, 2, None, None, q(1))]);
        assert_eq!(reconstruct(&lines), Err(defect(DiagramDefect::ParallelLines)));
        let half = Diagram::from_pieces(&[p(X, 0, None, None, crate::rational::qr(1, 2))]);
        assert_eq!(reconstruct(&half), Err(defect(DiagramDefect::NonintegralMultiplicity)));
        let stub = Diagram::from_pieces(&[p(Y, 0, Some(0), Some(1), q(1))]);
        assert_eq!(reconstruct(&stub), Err(defect(DiagramDefect::Tension)));
        // A line through a tripod is a crossing plus a ray, which is a
        // legitimate diagram of type (2,0,1,1,1,0).
        let mut with_line = diagram(&tripod(&q(0), &q(0))).pieces();
        with_line.push(p(X, 5, None, None, q(1)));
        let h = reconstruct(&Diagram::from_pieces(&with_line)).unwrap();
        assert_eq!(h.ty(), [2, 0, 1, 1, 1, 0]);
    }
}

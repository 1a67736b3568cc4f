//! Honeycomb tinkertoys, built from their dual regions.
//!
//! Vertices are the small triangles of the region (in sorted order). Each
//! interior lattice edge gives a two-ended edge running from its `Down`
//! triangle to its `Up` triangle; each boundary lattice edge gives a
//! semi-infinite edge. Every edge points along the forward direction of its
//! axis.

use std::sync::Arc;

use crate::error::Result;
use crate::lattice::{DualEdge, Region, Triangle};
use crate::plane::{Axis, Direction, PlanePoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub dual: DualEdge,
    pub axis: Axis,
    pub tail: Option<usize>,
    pub head: Option<usize>,
    /// `(side, index)` for semi-infinite edges.
    pub boundary: Option<(usize, usize)>,
}

impl Edge {
    pub fn is_finite(&self) -> bool {
        self.tail.is_some() && self.head.is_some()
    }

    /// `d(e)`.
    pub fn direction(&self) -> Direction {
        self.axis.forward()
    }

    /// Direction in which the edge leaves its one endpoint, for rays.
    pub fn ray_direction(&self) -> Option<Direction> {
        self.boundary.map(|(side, _)| Direction::from_index(side))
    }

    /// The vertex carrying a semi-infinite edge, or the tail of a finite one.
    pub fn anchor(&self) -> usize {
        self.tail.or(self.head).expect("edge has an endpoint")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tinkertoy {
    region: Arc<Region>,
    edges: Vec<Edge>,
    /// Edge indices at each vertex.
    incident: Vec<Vec<usize>>,
}

impl Tinkertoy {
    pub fn from_region(region: Arc<Region>) -> Self {
        let tris = region.triangles();
        let idx = |t: &Triangle| region.triangle_index(t).expect("triangle in region");
        let mut edges = Vec::new();
        for r in region.rhombi() {
            let (up, down) = r.edge.triangles();
            edges.push(Edge {
                dual: r.edge,
                axis: r.edge.axis(),
                tail: Some(idx(&down)),
                head: Some(idx(&up)),
                boundary: None,
            });
        }
        for b in region.boundary() {
            let v = Some(idx(&b.triangle));
            let (tail, head) = if b.side % 2 == 0 { (None, v) } else { (v, None) };
            edges.push(Edge { dual: b.dual(), axis: b.dual().axis(), tail, head, boundary: Some((b.side, b.index)) });
        }
        let mut incident = vec![Vec::new(); tris.len()];
        for (i, e) in edges.iter().enumerate() {
            for v in [e.tail, e.head].into_iter().flatten() {
                incident[v].push(i);
            }
        }
        Self { region, edges, incident }
    }

    pub fn gl(n: usize) -> Self {
        Self::from_region(Arc::new(Region::gl(n)))
    }

    pub fn from_type(ty: [i64; 6]) -> Result<Self> {
        Ok(Self::from_region(Arc::new(Region::from_type(ty)?)))
    }

    pub fn region(&self) -> &Arc<Region> {
        &self.region
    }

    /// Semi-infinite edge counts, clockwise from North.
    pub fn ty(&self) -> [i64; 6] {
        self.region.ty()
    }

    pub fn vertex_count(&self) -> usize {
        self.region.triangles().len()
    }

    pub fn vertices(&self) -> &[Triangle] {
        self.region.triangles()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn semi_infinite(&self) -> impl Iterator<Item = (usize, &Edge)> {
        self.edges.iter().enumerate().filter(|(_, e)| !e.is_finite())
    }

    /// The standard configuration: every vertex at the centroid of its
    /// triangle. Its vertices are exactly the lattice points `(i,j,k)` with
    /// `3 ∤ (2i+j)` inside the dual region.
    pub fn standard_positions(&self) -> Vec<PlanePoint> {
        self.vertices().iter().map(|t| t.standard_position()).collect()
    }

    /// Whether the type is that of `τ_n`.
    pub fn gl_n(&self) -> Option<usize> {
        let t = self.ty();
        (t[1] == 0 && t[3] == 0 && t[5] == 0 && t[0] == t[2] && t[2] == t[4]).then_some(t[0] as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use std::collections::BTreeSet;

    #[test]
    fn gl_counts() {
        let t1 = Tinkertoy::gl(1);
        assert_eq!(t1.vertex_count(), 1);
        assert_eq!(t1.semi_infinite().count(), 3);
        let t2 = Tinkertoy::gl(2);
        assert_eq!(t2.vertex_count(), 4);
        assert_eq!(t2.edges().len(), 9);
        assert_eq!(t2.semi_infinite().count(), 6);
        assert_eq!(Tinkertoy::gl(4).vertex_count(), 16);
    }

    #[test]
    fn every_vertex_has_one_edge_per_axis() {
        for ty in [[3, 0, 3, 0, 3, 0], [0, 2, 0, 2, 0, 2], [7, 0, 4, 5, 2, 2], [1, 1, 1, 1, 1, 1]] {
            let t = Tinkertoy::from_type(ty).unwrap();
            for v in 0..t.vertex_count() {
                let axes: BTreeSet<_> = t.incident(v).iter().map(|&e| t.edges()[e].axis).collect();
                assert_eq!(axes.len(), 3);
                assert_eq!(t.incident(v).len(), 3);
            }
            let census: Vec<i64> =
                (0..6).map(|k| t.semi_infinite().filter(|(_, e)| e.boundary.unwrap().0 == k).count() as i64).collect();
            assert_eq!(census, ty.to_vec());
        }
    }

    /// The paper's description of `τ_n`: lattice points `(i,j,k)` in the
    /// plane with `3 ∤ (2i+j)` and `j + 3n ≥ i ≥ k ≥ j`, up to translation.
    fn paper_vertices(n: i64) -> BTreeSet<(i64, i64, i64)> {
        let mut out = BTreeSet::new();
        for i in -3 * n..=3 * n {
            for j in -3 * n..=3 * n {
                let k = -i - j;
                if (2 * i + j).mod_floor(&3) != 0 && j + 3 * n >= i && i >= k && k >= j {
                    out.insert((i, j, k));
                }
            }
        }
        out
    }

    fn normalized(pts: &BTreeSet<(i64, i64, i64)>) -> BTreeSet<(i64, i64, i64)> {
        let m = *pts.iter().next().unwrap();
        pts.iter().map(|p| (p.0 - m.0, p.1 - m.1, p.2 - m.2)).collect()
    }

    #[test]
    fn standard_vertices_match_the_triangle_rule() {
        for n in 1..=5 {
            let t = Tinkertoy::gl(n);
            let ours: BTreeSet<_> = t
                .standard_positions()
                .iter()
                .map(|p| {
                    let c = p.coords().map(|v| crate::rational::to_i64(v).unwrap());
                    (c[0], c[1], c[2])
                })
                .collect();
            assert!(ours.iter().all(|&(i, j, _)| (2 * i + j).mod_floor(&3) != 0));
            let theirs = paper_vertices(n as i64);
            assert_eq!(theirs.len(), n * n);
            // Equal up to a lattice symmetry permuting coordinates; compare
            // the multiset of pairwise differences, which is preserved only by
            // the matching shape.
            let diffs = |s: &BTreeSet<(i64, i64, i64)>| {
                let mut v: Vec<i64> = s
                    .iter()
                    .flat_map(|a| s.iter().map(move |b| (a.0 - b.0).abs() + (a.1 - b.1).abs() + (a.2 - b.2).abs()))
                    .collect();
                v.sort();
                v
            };
            assert_eq!(diffs(&normalized(&ours)), diffs(&normalized(&theirs)));
        }
    }
}

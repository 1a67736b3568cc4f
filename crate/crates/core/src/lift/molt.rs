//! Molting recipes: which regions of a collapsed vertex to inflate together
//! so that its degeneracy opens up.
//!
//! Regions are named by lattice points of the vertex's own dual region
//! (`Region::from_type` of its multiplicities): interior points are the
//! collapsed hexagons, non-corner boundary points the 4-sided unbounded
//! regions along each side.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::honeycomb::{classify_vertex, Diagram, DiagramVertex, VertexKind};
use crate::lattice::{LPoint, Region};
use crate::rational::{to_i64, Q};

#[derive(Debug, Clone)]
pub struct Molt {
    pub region: Arc<Region>,
    /// Sides whose 4-sided regions inflate, besides every hexagon.
    pub sides: Vec<usize>,
    pub inflate: BTreeSet<LPoint>,
}

impl Molt {
    /// Change of each rhombus of the local region under one unit of the
    /// combined inflation.
    pub fn rhombus_changes(&self) -> Vec<i64> {
        let f = |p: LPoint| i64::from(self.inflate.contains(&p));
        self.region.rhombi().iter().map(|r| r.value(f)).collect()
    }

    /// No collapsed edge gets negative length and at least one opens.
    pub fn is_valid(&self) -> bool {
        let c = self.rhombus_changes();
        c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0)
    }
}

/// The regions to inflate to molt `v`, a vertex of `m`.
pub fn molt_regions(m: &Diagram, v: &DiagramVertex) -> Result<Molt> {
    if !m.vertices().contains(v) {
        return Err(Error::Invalid(format!("{} is not a vertex of the diagram", v.location)));
    }
    let mut ty = [0i64; 6];
    for (k, x) in v.multiplicities.iter().enumerate() {
        ty[k] = to_i64(x).ok_or_else(|| Error::Invalid("nonintegral multiplicity".into()))?;
    }
    let (kind, lines, y) = classify_vertex(&v.multiplicities)?;
    let one = Q::one();
    let sides: Vec<usize> = match kind {
        VertexKind::Y | VertexKind::InvertedY => {
            if y == one {
                return Err(Error::NotDegenerate);
            }
            // All but the first side (and the corner facing it).
            (0..6).filter(|&k| ty[k] > 0).skip(1).collect()
        }
        VertexKind::Crossing => {
            if lines.iter().all(|c| !c.is_positive() || *c == one) {
                return Err(Error::NotDegenerate);
            }
            // The two sides of the thicker line.
            let k = (0..3).filter(|&k| ty[k] > 0).max_by_key(|&k| (ty[k], std::cmp::Reverse(k))).unwrap();
            vec![k, k + 3]
        }
        VertexKind::Rake | VertexKind::FiveValent => {
            // The longest side where a line and the Y part run together.
            let res = |k: usize| ty[k] - ty[k].min(ty[(k + 3) % 6]);
            let k = (0..6)
                .filter(|&k| res(k) > 0 && ty[(k + 3) % 6] > 0)
                .max_by_key(|&k| (ty[k], std::cmp::Reverse(k)))
                .expect("a line meets the Y part");
            vec![k]
        }
        VertexKind::SixValent => Vec::new(),
    };
    let region = Arc::new(Region::from_type(ty)?);
    let corners: BTreeSet<LPoint> = (0..6).map(|k| region.corner(k)).collect();
    let mut inflate: BTreeSet<LPoint> = region.interior_points().collect();
    for &k in &sides {
        for e in region.side(k) {
            for p in [e.from, e.to] {
                if !corners.contains(&p) {
                    inflate.insert(p);
                }
            }
        }
    }
    Ok(Molt { region, sides, inflate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hive::{enumerate_lattice_hives, BoundaryTriple, Hive};
    use crate::honeycomb::{degeneracy_graph, diagram, Honeycomb};
    use crate::lift::{make_weight_function, wperim_objective};
    use crate::rational::q;
    use num_traits::Zero;

    fn vertex(ty: [i64; 6]) -> (Diagram, DiagramVertex) {
        use crate::honeycomb::Piece;
        use crate::plane::{Direction, Length, PlanePoint, SegmentOrRay};
        let pieces: Vec<Piece> = (0..6)
            .filter(|&k| ty[k] > 0)
            .map(|k| {
                let s = SegmentOrRay::new(PlanePoint::origin(), Direction::from_index(k), Length::Infinite, q(ty[k]));
                Piece::from_segment(&s.unwrap())
            })
            .collect();
        let d = Diagram::from_pieces(&pieces);
        let v = d.vertices()[0].clone();
        (d, v)
    }

    #[test]
    fn recipes_open_every_kind() {
        for ty in [
            [0, 2, 0, 2, 0, 2],
            [3, 0, 3, 0, 3, 0],
            [2, 3, 0, 2, 3, 0],
            [3, 1, 0, 3, 1, 0],
            [1, 2, 0, 3, 0, 2],
            [2, 1, 0, 3, 0, 1],
            [1, 2, 0, 2, 1, 1],
            [2, 3, 0, 3, 2, 1],
            [2, 2, 0, 3, 1, 1],
            [2, 1, 2, 1, 2, 1],
            [1, 1, 1, 1, 1, 1],
        ] {
            let (d, v) = vertex(ty);
            let molt = molt_regions(&d, &v).unwrap();
            assert!(molt.is_valid(), "{ty:?}");
            if v.kind == VertexKind::SixValent {
                assert!(molt.inflate.iter().all(|&p| molt.region.is_interior(molt.region.index_of(p).unwrap())));
            }
        }
    }

    #[test]
    fn simple_vertices_do_not_molt() {
        for ty in [[1, 1, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [1, 0, 1, 0, 1, 0]] {
            let (d, v) = vertex(ty);
            assert!(matches!(molt_regions(&d, &v), Err(Error::NotDegenerate)));
        }
    }

    /// Inflating the hexagons of the 6-valent vertex of one adjoint-square
    /// honeycomb, as far as it goes, gives the other.
    #[test]
    fn six_valent_adjoint_square_molts_into_the_other() {
        let t = BoundaryTriple::from_ints(&[2, 1, 0], &[2, 1, 0], &[-1, -2, -3]).unwrap();
        let hives = enumerate_lattice_hives(&t).unwrap();
        let (six, other): (Vec<&Hive>, Vec<&Hive>) = hives
            .iter()
            .partition(|h| diagram(&Honeycomb::from_hive(h).unwrap()).kind_histogram().contains_key(&VertexKind::SixValent));
        let (h, target) = (six[0], other[0]);
        let hc = Honeycomb::from_hive(h).unwrap();
        let m = diagram(&hc);
        let g = degeneracy_graph(&hc);
        let vi = m.vertices().iter().position(|v| v.kind == VertexKind::SixValent).unwrap();
        let molt = molt_regions(&m, &m.vertices()[vi]).unwrap();
        let reg = g.regions.iter().find(|r| r.vertex == vi).unwrap();
        let pts: BTreeSet<LPoint> = reg.triangles.iter().flat_map(|t| t.vertices()).collect();
        let (ma, mb) = (pts.iter().map(|p| p.0).min().unwrap(), pts.iter().map(|p| p.1).min().unwrap());
        let global: Vec<LPoint> = molt.inflate.iter().map(|p| (p.0 + ma, p.1 + mb)).collect();
        assert!(!global.is_empty());

        let region = h.region().clone();
        let step = |eps: &Q| {
            let mut v = h.values().to_vec();
            for p in &global {
                v[region.index_of(*p).unwrap()] += eps;
            }
            Hive::new(region.clone(), v).unwrap()
        };
        // Largest legal step, from the rhombi that shrink.
        let unit = step(&q(1));
        let mut best: Option<Q> = None;
        for r in region.rhombi() {
            let (a, b) = (h.rhombus_value(r), unit.rhombus_value(r));
            if b < a {
                let s = &a / (&a - &b);
                best = Some(best.map_or(s.clone(), |x: Q| x.min(s)));
            }
        }
        let eps = best.unwrap();
        assert!(eps.is_positive());
        let molted = step(&eps);
        assert!(molted.is_valid());
        assert_eq!(&molted, target);
        let w = wperim_objective(&make_weight_function(3, 1));
        assert!(w.evaluate(&molted) > w.evaluate(h));
        assert!(!step(&(&eps + q(1))).is_valid());
        assert!(!eps.is_zero());
    }
}

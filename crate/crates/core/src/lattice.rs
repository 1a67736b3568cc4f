//! The root lattice of the plane and convex regions built from its small
//! triangles. A region is the dual graph of a honeycomb tinkertoy: its
//! lattice points index hive entries, its triangles index tinkertoy
//! vertices and its unit edges index tinkertoy edges.
//!
//! Lattice points are addressed by integer pairs `(a, b)` standing for the
//! plane point `a·(1,-2,1) + b·(1,1,-2)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::{Axis, Direction, PlanePoint};

pub type LPoint = (i64, i64);

/// Side directions of a region boundary, walked counterclockwise in
/// `(a, b)`. Side `k` carries the semi-infinite edges in direction `k`.
pub const SIDE_STEP: [LPoint; 6] = [(-1, -1), (0, -1), (1, 0), (1, 1), (0, 1), (-1, 0)];

/// The six lattice neighbours of a point, in the order of `SIDE_STEP`.
pub fn neighbours(p: LPoint) -> [LPoint; 6] {
    SIDE_STEP.map(|(da, db)| (p.0 + da, p.1 + db))
}

/// The plane point of a root-lattice point.
pub fn b_point(p: LPoint) -> PlanePoint {
    let (a, b) = p;
    PlanePoint::from_ints(a + b, -2 * a + b, a - 2 * b).expect("root lattice lies in the plane")
}

/// `|B(p)|²`, the squared norm of the plane point.
pub fn norm2(p: LPoint) -> i64 {
    let (a, b) = p;
    6 * (a * a - a * b + b * b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TriKind {
    /// `{(a,b), (a+1,b), (a+1,b+1)}`; its tinkertoy vertex has edges
    /// heading into it.
    Up,
    /// `{(a,b), (a,b+1), (a+1,b+1)}`; its tinkertoy vertex has edges
    /// leaving it.
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub a: i64,
    pub b: i64,
    pub kind: TriKind,
}

impl Triangle {
    pub fn up(a: i64, b: i64) -> Self {
        Self { a, b, kind: TriKind::Up }
    }
    pub fn down(a: i64, b: i64) -> Self {
        Self { a, b, kind: TriKind::Down }
    }

    pub fn vertices(&self) -> [LPoint; 3] {
        let (a, b) = (self.a, self.b);
        match self.kind {
            TriKind::Up => [(a, b), (a + 1, b), (a + 1, b + 1)],
            TriKind::Down => [(a, b), (a, b + 1), (a + 1, b + 1)],
        }
    }

    /// Centroid position in the standard configuration.
    pub fn standard_position(&self) -> PlanePoint {
        let base = b_point((self.a, self.b));
        let off = match self.kind {
            TriKind::Up => PlanePoint::from_ints(1, -1, 0),
            TriKind::Down => PlanePoint::from_ints(1, 0, -1),
        }
        .expect("in plane");
        &base + &off
    }
}

/// A unit edge of the root lattice, stored with `p` lexicographically
/// before `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualEdge {
    pub p: LPoint,
    pub q: LPoint,
}

impl DualEdge {
    pub fn new(u: LPoint, v: LPoint) -> Self {
        let (p, q) = if u <= v { (u, v) } else { (v, u) };
        let d = (q.0 - p.0, q.1 - p.1);
        debug_assert!(matches!(d, (1, 0) | (0, 1) | (1, 1)), "not a unit edge: {u:?} {v:?}");
        Self { p, q }
    }

    /// Axis of the honeycomb edge crossing this lattice edge.
    pub fn axis(&self) -> Axis {
        match (self.q.0 - self.p.0, self.q.1 - self.p.1) {
            (1, 0) => Axis::Y,
            (0, 1) => Axis::Z,
            _ => Axis::X,
        }
    }

    /// The two triangles sharing this edge: `(up, down)`.
    pub fn triangles(&self) -> (Triangle, Triangle) {
        let (a, b) = self.p;
        match self.axis() {
            Axis::Y => (Triangle::up(a, b), Triangle::down(a, b - 1)),
            Axis::Z => (Triangle::up(a - 1, b), Triangle::down(a, b)),
            Axis::X => (Triangle::up(a, b), Triangle::down(a, b)),
        }
    }

    /// Constant coordinate of the crossing honeycomb edge, in terms of a
    /// hive function `f`.
    pub fn constant<T, F>(&self, f: F) -> T
    where
        F: Fn(LPoint) -> T,
        T: std::ops::Sub<Output = T>,
    {
        match self.axis() {
            Axis::X => f(self.p) - f(self.q),
            _ => f(self.q) - f(self.p),
        }
    }
}

/// Two lattice triangles sharing an edge. The shared edge's endpoints are
/// the obtuse corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rhombus {
    pub edge: DualEdge,
    pub obtuse: [LPoint; 2],
    pub acute: [LPoint; 2],
}

impl Rhombus {
    pub fn from_edge(edge: DualEdge) -> Self {
        let (up, down) = edge.triangles();
        let third = |t: Triangle| {
            *t.vertices()
                .iter()
                .find(|v| **v != edge.p && **v != edge.q)
                .expect("triangle has a third corner")
        };
        let mut acute = [third(up), third(down)];
        acute.sort();
        Self { edge, obtuse: [edge.p, edge.q], acute }
    }

    /// Orientation: the axis of the honeycomb edge whose length it measures.
    pub fn orientation(&self) -> Axis {
        self.edge.axis()
    }

    pub fn value<T, F>(&self, f: F) -> T
    where
        F: Fn(LPoint) -> T,
        T: std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
    {
        f(self.obtuse[0]) + f(self.obtuse[1]) - f(self.acute[0]) - f(self.acute[1])
    }

    pub fn label(&self) -> String {
        format!(
            "obtuse {:?},{:?} acute {:?},{:?}",
            self.obtuse[0], self.obtuse[1], self.acute[0], self.acute[1]
        )
    }
}

/// A boundary lattice edge, with the semi-infinite honeycomb edge it carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryEdge {
    pub side: usize,
    /// Position along the side, counted in walk order.
    pub index: usize,
    /// Walk goes `from` → `to`.
    pub from: LPoint,
    pub to: LPoint,
    pub triangle: Triangle,
}

impl BoundaryEdge {
    pub fn direction(&self) -> Direction {
        Direction::from_index(self.side)
    }

    pub fn dual(&self) -> DualEdge {
        DualEdge::new(self.from, self.to)
    }

    /// Constant coordinate of the ray: the walk difference, negated on odd
    /// sides.
    pub fn constant<T, F>(&self, f: F) -> T
    where
        F: Fn(LPoint) -> T,
        T: std::ops::Sub<Output = T>,
    {
        if self.side.is_multiple_of(2) {
            f(self.to) - f(self.from)
        } else {
            f(self.from) - f(self.to)
        }
    }
}

/// A convex union of root-lattice triangles, pinned so that the smallest
/// `a` and the smallest `b` among its points are both 0.
#[derive(Debug, Clone)]
pub struct Region {
    ty: [i64; 6],
    corners: [LPoint; 6],
    points: Vec<LPoint>,
    index: HashMap<LPoint, usize>,
    interior: Vec<bool>,
    triangles: Vec<Triangle>,
    rhombi: Vec<Rhombus>,
    boundary: Vec<BoundaryEdge>,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty
    }
}
impl Eq for Region {}

impl Region {
    /// The region whose boundary walk has side lengths `ty`.
    pub fn from_type(ty: [i64; 6]) -> Result<Self> {
        if ty.iter().any(|&t| t < 0) {
            return Err(Error::Invalid(format!("negative entry in type {ty:?}")));
        }
        let t = ty;
        if t[2] + t[3] != t[5] + t[0] || t[4] + t[3] != t[0] + t[1] {
            return Err(Error::TypeDoesNotClose(ty));
        }
        let mut corners = [(0i64, 0i64); 6];
        for k in 0..5 {
            let (da, db) = SIDE_STEP[k];
            corners[k + 1] = (corners[k].0 + t[k] * da, corners[k].1 + t[k] * db);
        }
        let (ma, mb) = (
            corners.iter().map(|c| c.0).min().unwrap(),
            corners.iter().map(|c| c.1).min().unwrap(),
        );
        for c in corners.iter_mut() {
            *c = (c.0 - ma, c.1 - mb);
        }
        let (xa, xb) = (
            corners.iter().map(|c| c.0).max().unwrap(),
            corners.iter().map(|c| c.1).max().unwrap(),
        );

        // Signed distance to each side line; the region is where all are ≥ 0.
        let slack = |p: LPoint, k: usize| {
            let (da, db) = SIDE_STEP[k];
            let (ra, rb) = (p.0 - corners[k].0, p.1 - corners[k].1);
            da * rb - db * ra
        };
        let mut points = Vec::new();
        let mut interior = Vec::new();
        for a in 0..=xa {
            for b in 0..=xb {
                let s: Vec<i64> = (0..6).map(|k| slack((a, b), k)).collect();
                if s.iter().all(|&v| v >= 0) {
                    points.push((a, b));
                    interior.push(s.iter().all(|&v| v > 0));
                }
            }
        }
        let index: HashMap<LPoint, usize> = points.iter().enumerate().map(|(i, p)| (*p, i)).collect();

        let mut triangles = Vec::new();
        for &(a, b) in &points {
            for tri in [Triangle::up(a, b), Triangle::down(a, b)] {
                if tri.vertices().iter().all(|v| index.contains_key(v)) {
                    triangles.push(tri);
                }
            }
        }
        if triangles.is_empty() {
            return Err(Error::Invalid(format!("type {ty:?} encloses no triangle")));
        }
        triangles.sort();

        let mut boundary = Vec::new();
        for k in 0..6 {
            let (da, db) = SIDE_STEP[k];
            let mut cur = corners[k];
            for i in 0..t[k] as usize {
                let next = (cur.0 + da, cur.1 + db);
                let (up, down) = DualEdge::new(cur, next).triangles();
                let triangle = if k % 2 == 0 { up } else { down };
                boundary.push(BoundaryEdge { side: k, index: i, from: cur, to: next, triangle });
                cur = next;
            }
        }

        let mut rhombi = Vec::new();
        for &p in &points {
            for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                let q = (p.0 + da, p.1 + db);
                if !index.contains_key(&q) {
                    continue;
                }
                let e = DualEdge::new(p, q);
                let (up, down) = e.triangles();
                if triangles.binary_search(&up).is_ok() && triangles.binary_search(&down).is_ok() {
                    rhombi.push(Rhombus::from_edge(e));
                }
            }
        }
        rhombi.sort();

        Ok(Self { ty, corners, points, index, interior, triangles, rhombi, boundary })
    }

    /// The dual region of the `GL_n` tinkertoy: `0 ≤ b ≤ a ≤ n`.
    pub fn gl(n: usize) -> Self {
        let n = n as i64;
        Self::from_type([n, 0, n, 0, n, 0]).expect("GL type closes")
    }

    pub fn ty(&self) -> [i64; 6] {
        self.ty
    }

    /// Start of side `k` of the boundary walk.
    pub fn corner(&self, k: usize) -> LPoint {
        self.corners[k % 6]
    }

    /// Lattice points in lexicographic order.
    pub fn points(&self) -> &[LPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, p: LPoint) -> Option<usize> {
        self.index.get(&p).copied()
    }

    pub fn contains(&self, p: LPoint) -> bool {
        self.index.contains_key(&p)
    }

    pub fn is_interior(&self, i: usize) -> bool {
        self.interior[i]
    }

    pub fn interior_points(&self) -> impl Iterator<Item = LPoint> + '_ {
        self.points.iter().zip(&self.interior).filter(|(_, &i)| i).map(|(p, _)| *p)
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn triangle_index(&self, t: &Triangle) -> Option<usize> {
        self.triangles.binary_search(t).ok()
    }

    /// Every pair of edge-adjacent triangles, once each.
    pub fn rhombi(&self) -> &[Rhombus] {
        &self.rhombi
    }

    /// Boundary edges in walk order, side 0 first.
    pub fn boundary(&self) -> &[BoundaryEdge] {
        &self.boundary
    }

    pub fn side(&self, k: usize) -> impl Iterator<Item = &BoundaryEdge> {
        self.boundary.iter().filter(move |e| e.side == k)
    }

    /// Every unit edge between two region points that borders at least one
    /// region triangle.
    pub fn dual_edges(&self) -> Vec<DualEdge> {
        let mut v: Vec<DualEdge> = self.rhombi.iter().map(|r| r.edge).collect();
        v.extend(self.boundary.iter().map(|e| e.dual()));
        v.sort();
        v
    }

    /// The same region translated by `d` (the pin is dropped).
    pub fn shifted_points(&self, d: LPoint) -> Vec<LPoint> {
        self.points.iter().map(|p| (p.0 + d.0, p.1 + d.1)).collect()
    }
}

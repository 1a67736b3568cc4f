//! The plane `x + y + z = 0`, its six lattice directions, and exact
//! arithmetic on segments and rays lying along them.
//!
//! Every line used here is parallel to one of the three coordinate
//! directions, so one coordinate is constant along it. A point on the line
//! with constant axis `c` and value `k` is addressed by a parameter `t`:
//!
//! | axis | forward step  | parameter |
//! |------|---------------|-----------|
//! | x    | `(0, -1, 1)`  | `z`       |
//! | y    | `(1, 0, -1)`  | `x`       |
//! | z    | `(-1, 1, 0)`  | `y`       |

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_q, q, Q};

/// Coordinate axis; doubles as the "constant coordinate" of a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The direction along which this coordinate stays constant, oriented
    /// the way edges of the infinite honeycomb run (tail to head).
    pub fn forward(self) -> Direction {
        match self {
            Axis::X => Direction::W,
            Axis::Y => Direction::NE,
            Axis::Z => Direction::SE,
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

/// A point of the plane. All three coordinates are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanePoint {
    x: Q,
    y: Q,
    z: Q,
}

impl PlanePoint {
    pub fn new(x: Q, y: Q, z: Q) -> Result<Self> {
        if !(&x + &y + &z).is_zero() {
            return Err(Error::Invalid(format!(
                "point ({}, {}, {}) is off the plane",
                format_q(&x),
                format_q(&y),
                format_q(&z)
            )));
        }
        Ok(Self { x, y, z })
    }

    /// Builds the point from two coordinates; the third is implied.
    pub fn from_xy(x: Q, y: Q) -> Self {
        let z = -(&x + &y);
        Self { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Self::new(q(x), q(y), q(z))
    }

    pub fn origin() -> Self {
        Self::from_xy(Q::zero(), Q::zero())
    }

    pub fn x(&self) -> &Q {
        &self.x
    }
    pub fn y(&self) -> &Q {
        &self.y
    }
    pub fn z(&self) -> &Q {
        &self.z
    }

    pub fn coord(&self, axis: Axis) -> &Q {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
            Axis::Z => &self.z,
        }
    }

    pub fn coords(&self) -> [&Q; 3] {
        [&self.x, &self.y, &self.z]
    }

    /// Position along a line of constant `axis`, in units of the forward step.
    pub fn param(&self, axis: Axis) -> &Q {
        match axis {
            Axis::X => &self.z,
            Axis::Y => &self.x,
            Axis::Z => &self.y,
        }
    }

    /// The point on the line `{axis = constant}` at parameter `t`.
    pub fn on_line(axis: Axis, constant: &Q, t: &Q) -> Self {
        let rest = -(constant + t);
        match axis {
            Axis::X => Self { x: constant.clone(), y: rest, z: t.clone() },
            Axis::Y => Self { x: t.clone(), y: constant.clone(), z: rest },
            Axis::Z => Self { x: rest, y: t.clone(), z: constant.clone() },
        }
    }

    pub fn is_lattice(&self) -> bool {
        self.x.is_integer() && self.y.is_integer() && self.z.is_integer()
    }

    pub fn step(&self, dir: Direction, len: &Q) -> Self {
        self + &(dir.vector() * len)
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", format_q(&self.x), format_q(&self.y), format_q(&self.z))
    }
}

impl Ord for PlanePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.x, &self.y).cmp(&(&other.x, &other.y))
    }
}

impl PartialOrd for PlanePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &PlanePoint {
    type Output = PlanePoint;
    fn add(self, o: &PlanePoint) -> PlanePoint {
        PlanePoint { x: &self.x + &o.x, y: &self.y + &o.y, z: &self.z + &o.z }
    }
}

impl Sub for &PlanePoint {
    type Output = PlanePoint;
    fn sub(self, o: &PlanePoint) -> PlanePoint {
        PlanePoint { x: &self.x - &o.x, y: &self.y - &o.y, z: &self.z - &o.z }
    }
}

impl Mul<&Q> for PlanePoint {
    type Output = PlanePoint;
    fn mul(self, s: &Q) -> PlanePoint {
        PlanePoint { x: self.x * s, y: self.y * s, z: self.z * s }
    }
}

impl Serialize for PlanePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coords().into_iter().map(format_q))
    }
}

impl<'de> Deserialize<'de> for PlanePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Raw(
            #[serde(deserialize_with = "crate::rational::deserialize_q_vec")] Vec<Q>,
        );
        let Raw(v) = Raw::deserialize(d)?;
        if v.len() != 3 {
            return Err(D::Error::custom("a point needs three coordinates"));
        }
        let mut it = v.into_iter();
        let (x, y, z) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
        PlanePoint::new(x, y, z).map_err(D::Error::custom)
    }
}

/// One of the six unit lattice steps.
///
/// The variants are listed clockwise, starting from the direction drawn
/// pointing north in rendered figures; the index of a direction in this
/// order is its slot in a tinkertoy type. The compass labels are the JSON
/// names; they describe a frame turned a quarter turn from the rendered one
/// (so `E` is drawn pointing up). Labels and steps:
///
/// | index | label | step          |
/// |-------|-------|---------------|
/// | 0     | `E`   | `(0, 1, -1)`  |
/// | 1     | `SE`  | `(-1, 1, 0)`  |
/// | 2     | `SW`  | `(-1, 0, 1)`  |
/// | 3     | `W`   | `(0, -1, 1)`  |
/// | 4     | `NW`  | `(1, -1, 0)`  |
/// | 5     | `NE`  | `(1, 0, -1)`  |
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Direction {
    E,
    SE,
    SW,
    W,
    NW,
    NE,
}

impl Direction {
    pub const ALL: [Direction; 6] =
        [Direction::E, Direction::SE, Direction::SW, Direction::W, Direction::NW, Direction::NE];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Direction {
        Self::ALL[i % 6]
    }

    pub fn negate(self) -> Direction {
        Self::from_index(self.index() + 3)
    }

    pub fn step(self) -> [i64; 3] {
        match self {
            Direction::E => [0, 1, -1],
            Direction::SE => [-1, 1, 0],
            Direction::SW => [-1, 0, 1],
            Direction::W => [0, -1, 1],
            Direction::NW => [1, -1, 0],
            Direction::NE => [1, 0, -1],
        }
    }

    pub fn vector(self) -> PlanePoint {
        let [x, y, z] = self.step();
        PlanePoint::from_ints(x, y, z).expect("lattice steps lie in the plane")
    }

    pub fn axis(self) -> Axis {
        match self.index() % 3 {
            0 => Axis::X,
            1 => Axis::Z,
            _ => Axis::Y,
        }
    }

    /// True when the step increases the line parameter.
    pub fn is_forward(self) -> bool {
        self.index() % 2 == 1
    }

    pub fn from_axis(axis: Axis, forward: bool) -> Direction {
        let f = axis.forward();
        if forward {
            f
        } else {
            f.negate()
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::E => "E",
            Direction::SE => "SE",
            Direction::SW => "SW",
            Direction::W => "W",
            Direction::NW => "NW",
            Direction::NE => "NE",
        }
    }
}

/// Length of a segment, or the infinite length of a ray.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Length {
    Finite(Q),
    Infinite,
}

impl Length {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Length::Finite(v) => Some(v),
            Length::Infinite => None,
        }
    }
}

/// A closed interval on a lattice line; `None` bounds are infinite.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineInterval {
    pub axis: Axis,
    pub constant: Q,
    pub lo: Option<Q>,
    pub hi: Option<Q>,
}

impl LineInterval {
    pub fn contains_param(&self, t: &Q) -> bool {
        self.lo.as_ref().is_none_or(|lo| lo <= t) && self.hi.as_ref().is_none_or(|hi| t <= hi)
    }

    pub fn point_at(&self, t: &Q) -> PlanePoint {
        PlanePoint::on_line(self.axis, &self.constant, t)
    }

    /// Intersection of two intervals on the same line.
    fn meet(&self, other: &LineInterval) -> Option<LineInterval> {
        let lo = match (&self.lo, &other.lo) {
            (Some(a), Some(b)) => Some(a.max(b).clone()),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        let hi = match (&self.hi, &other.hi) {
            (Some(a), Some(b)) => Some(a.min(b).clone()),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        if let (Some(l), Some(h)) = (&lo, &hi) {
            if l > h {
                return None;
            }
        }
        Some(LineInterval { axis: self.axis, constant: self.constant.clone(), lo, hi })
    }
}

/// A segment or ray along one of the six directions, carrying a positive
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SegmentOrRay {
    pub base: PlanePoint,
    pub direction: Direction,
    pub length: Length,
    pub multiplicity: Q,
}

impl SegmentOrRay {
    pub fn new(base: PlanePoint, direction: Direction, length: Length, multiplicity: Q) -> Result<Self> {
        if let Length::Finite(l) = &length {
            if !l.is_positive() {
                return Err(Error::Invalid("segment length must be positive".into()));
            }
        }
        if !multiplicity.is_positive() {
            return Err(Error::Invalid("multiplicity must be positive".into()));
        }
        Ok(Self { base, direction, length, multiplicity })
    }

    pub fn ray(base: PlanePoint, direction: Direction) -> Self {
        Self { base, direction, length: Length::Infinite, multiplicity: q(1) }
    }

    pub fn segment(base: PlanePoint, direction: Direction, length: Q) -> Result<Self> {
        Self::new(base, direction, Length::Finite(length), q(1))
    }

    pub fn is_ray(&self) -> bool {
        matches!(self.length, Length::Infinite)
    }

    pub fn end(&self) -> Option<PlanePoint> {
        self.length.finite().map(|l| self.base.step(self.direction, l))
    }

    /// The support as an interval of its line.
    pub fn interval(&self) -> LineInterval {
        let axis = self.direction.axis();
        let t0 = self.base.param(axis).clone();
        let t1 = self.length.finite().map(|l| {
            if self.direction.is_forward() {
                &t0 + l
            } else {
                &t0 - l
            }
        });
        let (lo, hi) = if self.direction.is_forward() {
            (Some(t0), t1)
        } else {
            (t1, Some(t0))
        };
        LineInterval { axis, constant: self.base.coord(axis).clone(), lo, hi }
    }
}

/// Which coordinate is constant along `s`, and its value.
pub fn constant_coordinate(s: &SegmentOrRay) -> (Axis, Q) {
    let axis = s.direction.axis();
    (axis, s.base.coord(axis).clone())
}

/// Result of intersecting two supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    Empty,
    Point(PlanePoint),
    Overlap(LineInterval),
}

pub fn intersect(a: &SegmentOrRay, b: &SegmentOrRay) -> Intersection {
    let (ia, ib) = (a.interval(), b.interval());
    if ia.axis == ib.axis {
        if ia.constant != ib.constant {
            return Intersection::Empty;
        }
        return match ia.meet(&ib) {
            None => Intersection::Empty,
            Some(m) => match (&m.lo, &m.hi) {
                (Some(l), Some(h)) if l == h => Intersection::Point(m.point_at(l)),
                _ => Intersection::Overlap(m),
            },
        };
    }
    let p = crossing_point(ia.axis, &ia.constant, ib.axis, &ib.constant);
    if ia.contains_param(p.param(ia.axis)) && ib.contains_param(p.param(ib.axis)) {
        Intersection::Point(p)
    } else {
        Intersection::Empty
    }
}

/// The unique point where two non-parallel lattice lines meet.
pub fn crossing_point(a: Axis, ka: &Q, b: Axis, kb: &Q) -> PlanePoint {
    debug_assert_ne!(a, b);
    let mut c = [Q::zero(), Q::zero(), Q::zero()];
    c[a.index()] = ka.clone();
    c[b.index()] = kb.clone();
    let third = 3 - a.index() - b.index();
    c[third] = -(ka + kb);
    let [x, y, z] = c;
    PlanePoint { x, y, z }
}

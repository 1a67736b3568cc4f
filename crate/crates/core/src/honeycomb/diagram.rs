//! Diagrams: measures on the plane made of weighted segments and rays along
//! the six lattice directions, in a canonical form.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::{crossing_point, Axis, Direction, Length, LineInterval, PlanePoint, SegmentOrRay};
use crate::rational::{format_q, parse_q, Q};

use super::config::Honeycomb;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexKind {
    /// Three rays in directions `SE, W, NE`.
    Y,
    /// Three rays in directions `E, SW, NW`.
    InvertedY,
    Crossing,
    Rake,
    FiveValent,
    SixValent,
}

impl VertexKind {
    pub fn name(self) -> &'static str {
        match self {
            VertexKind::Y => "Y",
            VertexKind::InvertedY => "inverted-Y",
            VertexKind::Crossing => "crossing",
            VertexKind::Rake => "rake",
            VertexKind::FiveValent => "5-valent",
            VertexKind::SixValent => "6-valent",
        }
    }

    pub fn is_y(self) -> bool {
        matches!(self, VertexKind::Y | VertexKind::InvertedY)
    }
}

/// Kind of a vertex with the given outgoing multiplicities, indexed by
/// direction. Returns the kind together with its parameters: the
/// multiplicities of the full lines through the vertex (by axis `x, y, z`)
/// and the multiplicity of the remaining `Y`.
pub fn classify_vertex(m: &[Q; 6]) -> Result<(VertexKind, [Q; 3], Q)> {
    if m.iter().any(|v| v.is_negative()) {
        return Err(Error::Invalid("negative multiplicity".into()));
    }
    if !tension(m).iter().all(|c| c.is_zero()) {
        return Err(Error::TensionViolation);
    }
    let mut lines = [Q::zero(), Q::zero(), Q::zero()];
    let mut rest = m.clone();
    for k in 0..3 {
        let c = m[k].clone().min(m[k + 3].clone());
        rest[k] -= &c;
        rest[k + 3] -= &c;
        lines[Direction::from_index(k).axis().index()] = c;
    }
    let nlines = lines.iter().filter(|c| c.is_positive()).count();
    let support: Vec<usize> = (0..6).filter(|&k| rest[k].is_positive()).collect();
    let y = support.first().map(|&k| rest[k].clone()).unwrap_or_else(Q::zero);
    if !support.is_empty() && !(support.len() == 3 && support.iter().all(|&k| rest[k] == y)) {
        return Err(Error::UnknownPattern);
    }
    let kind = match (support.first().map(|k| k % 2), nlines) {
        (None, 2) => VertexKind::Crossing,
        (None, 3) | (Some(_), 3) => VertexKind::SixValent,
        (Some(1), 0) => VertexKind::Y,
        (Some(_), 0) => VertexKind::InvertedY,
        (Some(_), 1) => VertexKind::Rake,
        (Some(_), 2) => VertexKind::FiveValent,
        _ => return Err(Error::UnknownPattern),
    };
    Ok((kind, lines, y))
}

/// Weighted sum of the outgoing unit steps.
pub fn tension(m: &[Q; 6]) -> [Q; 3] {
    let mut s = [Q::zero(), Q::zero(), Q::zero()];
    for (k, w) in m.iter().enumerate() {
        for (c, d) in s.iter_mut().zip(Direction::from_index(k).step()) {
            *c += w * Q::from_integer(d.into());
        }
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramVertex {
    pub location: PlanePoint,
    pub kind: VertexKind,
    /// Outgoing multiplicity in each direction.
    pub multiplicities: [Q; 6],
}

impl DiagramVertex {
    pub fn degree(&self) -> usize {
        self.multiplicities.iter().filter(|m| m.is_positive()).count()
    }
}

/// A weighted interval on a lattice line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub line: LineInterval,
    pub multiplicity: Q,
}

impl Piece {
    pub fn from_segment(s: &SegmentOrRay) -> Self {
        Self { line: s.interval(), multiplicity: s.multiplicity.clone() }
    }
}

/// Multiplicity as a step function of the line parameter.
#[derive(Debug, Clone)]
struct Profile {
    /// Sorted breakpoints.
    breaks: Vec<Q>,
    /// `mults[i]` holds on the open interval before `breaks[i]`; the last
    /// entry holds after the final breakpoint.
    mults: Vec<Q>,
}

impl Profile {
    fn build(pieces: &[&Piece]) -> Self {
        let breaks: Vec<Q> = pieces
            .iter()
            .flat_map(|p| [p.line.lo.clone(), p.line.hi.clone()])
            .flatten()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut mults = vec![Q::zero(); breaks.len() + 1];
        for p in pieces {
            // Interval i spans (breaks[i-1], breaks[i]).
            let start = p.line.lo.as_ref().map_or(0, |lo| breaks.binary_search(lo).unwrap() + 1);
            let end = p.line.hi.as_ref().map_or(breaks.len(), |hi| breaks.binary_search(hi).unwrap());
            for m in &mut mults[start..=end] {
                *m += &p.multiplicity;
            }
        }
        Self { breaks, mults }
    }

    /// Multiplicities just before and just after `t`.
    fn around(&self, t: &Q) -> (Q, Q) {
        match self.breaks.binary_search(t) {
            Ok(i) => (self.mults[i].clone(), self.mults[i + 1].clone()),
            Err(i) => (self.mults[i].clone(), self.mults[i].clone()),
        }
    }

    fn is_empty(&self) -> bool {
        self.mults.iter().all(|m| m.is_zero())
    }
}

/// A measure in canonical form: segments split at vertices and merged
/// elsewhere, sorted by line and position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    segments: Vec<SegmentOrRay>,
    vertices: Vec<DiagramVertex>,
    /// Points where tension fails.
    tension_defects: Vec<PlanePoint>,
}

impl Diagram {
    pub fn from_pieces(pieces: &[Piece]) -> Self {
        let mut by_line: BTreeMap<(Axis, Q), Vec<&Piece>> = BTreeMap::new();
        for p in pieces {
            if p.multiplicity.is_positive() {
                by_line.entry((p.line.axis, p.line.constant.clone())).or_default().push(p);
            }
        }
        let profiles: BTreeMap<(Axis, Q), Profile> = by_line
            .iter()
            .map(|(k, ps)| (k.clone(), Profile::build(ps)))
            .filter(|(_, pr)| !pr.is_empty())
            .collect();

        let used = |axis: Axis, c: &Q, t: &Q| -> bool {
            profiles.get(&(axis, c.clone())).is_some_and(|pr| {
                let (a, b) = pr.around(t);
                a.is_positive() || b.is_positive()
            })
        };
        let mut candidates: BTreeSet<PlanePoint> = BTreeSet::new();
        for ((axis, c), pr) in &profiles {
            for t in &pr.breaks {
                candidates.insert(PlanePoint::on_line(*axis, c, t));
            }
        }
        let keys: Vec<&(Axis, Q)> = profiles.keys().collect();
        for (i, (a1, c1)) in keys.iter().map(|k| (k.0, &k.1)).enumerate() {
            for (a2, c2) in keys[i + 1..].iter().map(|k| (k.0, &k.1)) {
                if a1 == a2 {
                    continue;
                }
                let p = crossing_point(a1, c1, a2, c2);
                if used(a1, c1, p.param(a1)) && used(a2, c2, p.param(a2)) {
                    candidates.insert(p);
                }
            }
        }

        let mut vertices = Vec::new();
        let mut tension_defects = Vec::new();
        for p in candidates {
            let mut m: [Q; 6] = Default::default();
            for axis in Axis::ALL {
                if let Some(pr) = profiles.get(&(axis, p.coord(axis).clone())) {
                    let (before, after) = pr.around(p.param(axis));
                    m[axis.forward().index()] = after;
                    m[axis.forward().negate().index()] = before;
                }
            }
            let nonzero: Vec<usize> = (0..6).filter(|&k| m[k].is_positive()).collect();
            if nonzero.is_empty() {
                continue;
            }
            if nonzero.len() == 2 && nonzero[1] == nonzero[0] + 3 && m[nonzero[0]] == m[nonzero[1]] {
                continue;
            }
            match classify_vertex(&m) {
                Ok((kind, _, _)) => vertices.push(DiagramVertex { location: p, kind, multiplicities: m }),
                Err(_) => tension_defects.push(p),
            }
        }

        let mut cuts: BTreeMap<(Axis, Q), BTreeSet<Q>> = BTreeMap::new();
        for v in &vertices {
            for axis in Axis::ALL {
                cuts.entry((axis, v.location.coord(axis).clone()))
                    .or_default()
                    .insert(v.location.param(axis).clone());
            }
        }
        for p in &tension_defects {
            for axis in Axis::ALL {
                cuts.entry((axis, p.coord(axis).clone())).or_default().insert(p.param(axis).clone());
            }
        }

        let mut segments = Vec::new();
        for ((axis, c), pr) in &profiles {
            let empty = BTreeSet::new();
            let line_cuts = cuts.get(&(*axis, c.clone())).unwrap_or(&empty);
            segments.extend(line_segments(*axis, c, pr, line_cuts));
        }
        Self { segments, vertices, tension_defects }
    }

    pub fn segments(&self) -> &[SegmentOrRay] {
        &self.segments
    }

    pub fn vertices(&self) -> &[DiagramVertex] {
        &self.vertices
    }

    pub fn tension_defects(&self) -> &[PlanePoint] {
        &self.tension_defects
    }

    pub fn pieces(&self) -> Vec<Piece> {
        self.segments.iter().map(Piece::from_segment).collect()
    }

    /// Sum of measures.
    pub fn sum(&self, other: &Diagram) -> Diagram {
        let mut p = self.pieces();
        p.extend(other.pieces());
        Diagram::from_pieces(&p)
    }

    pub fn translated(&self, by: &PlanePoint) -> Diagram {
        let pieces: Vec<Piece> = self
            .segments
            .iter()
            .map(|s| Piece::from_segment(&SegmentOrRay { base: &s.base + by, ..s.clone() }))
            .collect();
        Diagram::from_pieces(&pieces)
    }

    pub fn vertex_at(&self, p: &PlanePoint) -> Option<&DiagramVertex> {
        self.vertices.iter().find(|v| &v.location == p)
    }

    pub fn kind_histogram(&self) -> BTreeMap<VertexKind, usize> {
        let mut h = BTreeMap::new();
        for v in &self.vertices {
            *h.entry(v.kind).or_insert(0) += 1;
        }
        h
    }

    pub fn max_multiplicity(&self) -> Q {
        self.segments.iter().map(|s| s.multiplicity.clone()).max().unwrap_or_else(Q::zero)
    }

    /// Semi-infinite multiplicity in each direction.
    pub fn ray_census(&self) -> [Q; 6] {
        let mut c: [Q; 6] = Default::default();
        for s in &self.segments {
            if s.is_ray() {
                c[s.direction.index()] += &s.multiplicity;
            }
        }
        c
    }

    pub fn to_json(&self) -> Vec<SegmentJson> {
        self.segments.iter().map(SegmentJson::from_segment).collect()
    }

    pub fn from_json(v: &[SegmentJson]) -> Result<Diagram> {
        let segs = v.iter().map(|s| s.to_segment()).collect::<Result<Vec<_>>>()?;
        Ok(Diagram::from_pieces(&segs.iter().map(Piece::from_segment).collect::<Vec<_>>()))
    }
}

/// Canonical segments of one line: cut at `cuts` and at multiplicity
/// changes, merged across breakpoints that are neither.
fn line_segments(axis: Axis, c: &Q, pr: &Profile, cuts: &BTreeSet<Q>) -> Vec<SegmentOrRay> {
    let mut points: BTreeSet<Q> = cuts.clone();
    points.extend(pr.breaks.iter().cloned());
    let points: Vec<Q> = points.into_iter().collect();
    // Elementary intervals (lo, hi, mult) along the line.
    let mut elem: Vec<(Option<Q>, Option<Q>, Q)> = Vec::new();
    for i in 0..=points.len() {
        let lo = if i == 0 { None } else { Some(points[i - 1].clone()) };
        let hi = points.get(i).cloned();
        let probe = match (&lo, &hi) {
            (Some(l), Some(h)) => (l + h) / Q::from_integer(2.into()),
            (Some(l), None) => l + Q::from_integer(1.into()),
            (None, Some(h)) => h - Q::from_integer(1.into()),
            (None, None) => Q::zero(),
        };
        let m = pr.around(&probe).0;
        elem.push((lo, hi, m));
    }
    let mut merged: Vec<(Option<Q>, Option<Q>, Q)> = Vec::new();
    for (lo, hi, m) in elem {
        if let Some(last) = merged.last_mut() {
            let at = lo.as_ref().expect("interior interval has a start");
            if last.2 == m && !cuts.contains(at) {
                last.1 = hi;
                continue;
            }
        }
        merged.push((lo, hi, m));
    }
    let fwd = axis.forward();
    let mut out = Vec::new();
    for (lo, hi, m) in merged {
        if !m.is_positive() {
            continue;
        }
        let seg = |base: &Q, dir: Direction, length: Length| SegmentOrRay {
            base: PlanePoint::on_line(axis, c, base),
            direction: dir,
            length,
            multiplicity: m.clone(),
        };
        match (lo, hi) {
            (Some(l), Some(h)) => out.push(seg(&l, fwd, Length::Finite(&h - &l))),
            (Some(l), None) => out.push(seg(&l, fwd, Length::Infinite)),
            (None, Some(h)) => out.push(seg(&h, fwd.negate(), Length::Infinite)),
            (None, None) => {
                out.push(seg(&Q::zero(), fwd.negate(), Length::Infinite));
                out.push(seg(&Q::zero(), fwd, Length::Infinite));
            }
        }
    }
    out
}

/// The diagram of a honeycomb: every edge of positive length contributes
/// its interval with multiplicity 1.
pub fn diagram(h: &Honeycomb) -> Diagram {
    let mut pieces = Vec::new();
    let one = Q::from_integer(1.into());
    for (i, e) in h.tinkertoy().edges().iter().enumerate() {
        let seg = match (e.tail, e.head) {
            (Some(t), Some(_)) => {
                let l = h.edge_length(i).expect("validated edge");
                if l.is_zero() {
                    continue;
                }
                SegmentOrRay { base: h.position(t).clone(), direction: e.direction(), length: Length::Finite(l), multiplicity: one.clone() }
            }
            _ => SegmentOrRay {
                base: h.position(e.anchor()).clone(),
                direction: e.ray_direction().unwrap(),
                length: Length::Infinite,
                multiplicity: one.clone(),
            },
        };
        pieces.push(Piece::from_segment(&seg));
    }
    Diagram::from_pieces(&pieces)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentJson {
    pub base: PlanePoint,
    pub direction: Direction,
    pub length: String,
    pub multiplicity: String,
}

impl SegmentJson {
    pub fn from_segment(s: &SegmentOrRay) -> Self {
        Self {
            base: s.base.clone(),
            direction: s.direction,
            length: match &s.length {
                Length::Finite(l) => format_q(l),
                Length::Infinite => "inf".into(),
            },
            multiplicity: format_q(&s.multiplicity),
        }
    }

    pub fn to_segment(&self) -> Result<SegmentOrRay> {
        let length = if self.length == "inf" {
            Length::Infinite
        } else {
            Length::Finite(parse_q(&self.length).map_err(Error::Invalid)?)
        };
        let m = parse_q(&self.multiplicity).map_err(Error::Invalid)?;
        SegmentOrRay::new(self.base.clone(), self.direction, length, m)
    }
}

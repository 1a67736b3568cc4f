//! Berenstein-Zelevinsky patterns read off `GL_n` honeycombs.
//!
//! Regions of `τ_n` other than the three corner sectors are labelled by the
//! lattice points of the dual region other than its corners: interior points
//! are hexagons, the rest are semi-infinite wedges.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hive::Hive;
use crate::lattice::{DualEdge, LPoint, Rhombus};
use crate::plane::Axis;
use crate::rational::Q;

use super::config::Honeycomb;

/// Lattice steps `e_x, e_y, e_z`; the step `+e_c` crosses the edge of axis
/// `c` at one end of the hexagon's row.
const E: [LPoint; 3] = [(-1, -1), (1, 0), (0, 1)];

fn add(p: LPoint, d: LPoint) -> LPoint {
    (p.0 + d.0, p.1 + d.1)
}

fn sub(p: LPoint, d: LPoint) -> LPoint {
    (p.0 - d.0, p.1 - d.1)
}

/// Length of the honeycomb edge crossing the lattice edge `p`–`q`.
fn crossing_length(hive: &Hive, p: LPoint, q: LPoint) -> Q {
    hive.rhombus_value(&Rhombus::from_edge(DualEdge::new(p, q)))
}

/// Torsion of the hexagon at interior point `p`, read in the frame where the
/// edges of `axis` are vertical: left edge minus right edge.
pub fn torsion(hive: &Hive, p: LPoint, axis: Axis) -> Q {
    let e = E[axis.index()];
    crossing_length(hive, p, sub(p, e)) - crossing_length(hive, p, add(p, e))
}

/// Side of the dual region reached by walking along `+e_c` (the right end
/// of a row in frame `c`).
fn right_side(axis: Axis) -> usize {
    match axis {
        Axis::X => 2,
        Axis::Y => 4,
        Axis::Z => 0,
    }
}

pub fn bz_pattern(h: &Honeycomb) -> Result<BTreeMap<LPoint, Q>> {
    let n = h.tinkertoy().gl_n().ok_or_else(|| Error::Invalid("not a GL_n honeycomb".into()))?;
    let hive = h.to_hive();
    Ok(bz_from_hive(&hive, n))
}

/// The pattern from the hive directly; `n` is the hive's size.
pub fn bz_from_hive(hive: &Hive, n: usize) -> BTreeMap<LPoint, Q> {
    let region = hive.region();
    let corners: Vec<LPoint> = [0, 2, 4].iter().map(|&k| region.corner(k)).collect();
    let mut out = BTreeMap::new();
    for (i, &p) in region.points().iter().enumerate() {
        if corners.contains(&p) {
            continue;
        }
        let v = if region.is_interior(i) {
            torsion(hive, p, Axis::X)
        } else {
            let side = wedge_side(p, n);
            let axis = Axis::ALL.into_iter().find(|&a| right_side(a) == side).unwrap();
            crossing_length(hive, p, sub(p, E[axis.index()]))
        };
        out.insert(p, v);
    }
    out
}

/// Which long side a non-corner boundary point of the `GL_n` region is on.
fn wedge_side(p: LPoint, n: usize) -> usize {
    let n = n as i64;
    if p.1 == 0 {
        2
    } else if p.0 == n {
        4
    } else {
        debug_assert_eq!(p.0, p.1);
        0
    }
}

/// Sum of the entries at `p` and to its right in frame `axis`.
pub fn partial_row_sum(pattern: &BTreeMap<LPoint, Q>, p: LPoint, axis: Axis) -> Q {
    let mut s = Q::from_integer(0.into());
    let mut cur = p;
    while let Some(v) = pattern.get(&cur) {
        s += v;
        cur = add(cur, E[axis.index()]);
    }
    s
}

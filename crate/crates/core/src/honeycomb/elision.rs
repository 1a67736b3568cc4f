//! The post-elision graph of a simply degenerate diagram, the leaf-stripping
//! solve for its constant coordinates, and loop breathing.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hive::BoundaryTriple;
use crate::plane::{crossing_point, Axis, Direction, PlanePoint};
use crate::rational::{format_q, Q};

use super::config::{validate_configuration, Honeycomb};
use super::diagram::{diagram, Diagram, VertexKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    /// A `Y` node, and the direction in which the edge leaves it.
    Node { node: usize, dir: Direction },
    /// A semi-infinite edge: its side (= direction) and its rank among the
    /// rays of that side, largest constant first.
    Boundary { side: usize, rank: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElidedEdge {
    pub axis: Axis,
    pub ends: [End; 2],
    /// Constant coordinate read from the diagram.
    pub constant: Q,
    /// Locations of the crossings the edge passes through.
    pub crossings: Vec<PlanePoint>,
}

impl ElidedEdge {
    pub fn is_finite(&self) -> bool {
        self.ends.iter().all(|e| matches!(e, End::Node { .. }))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElidedNode {
    pub location: PlanePoint,
    pub kind: VertexKind,
    /// Incident edges, indexed by the direction they leave in.
    pub edges: BTreeMap<Direction, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElidedGraph {
    pub nodes: Vec<ElidedNode>,
    pub edges: Vec<ElidedEdge>,
}

/// Builds the post-elision graph: `Y` vertices become nodes and every chain
/// of collinear segments running straight through crossings becomes one
/// edge.
pub fn elide(m: &Diagram) -> Result<ElidedGraph> {
    for v in m.vertices() {
        if !(v.kind.is_y() || v.kind == VertexKind::Crossing) {
            return Err(Error::NotSimplyDegenerate(format!("{} ({})", v.location, v.kind.name())));
        }
    }
    if let Some(s) = m.segments().iter().find(|s| !s.multiplicity.is_one()) {
        return Err(Error::NotSimplyDegenerate(format!(
            "{} (multiplicity {})",
            s.base,
            format_q(&s.multiplicity)
        )));
    }
    let vindex: HashMap<&PlanePoint, usize> = m.vertices().iter().enumerate().map(|(i, v)| (&v.location, i)).collect();
    // Segment leaving each vertex in each direction.
    let mut out: HashMap<(usize, Direction), Option<usize>> = HashMap::new();
    for s in m.segments() {
        let a = vindex.get(&s.base).copied();
        match s.end() {
            Some(end) => {
                let b = vindex[&end];
                if let Some(a) = a {
                    out.insert((a, s.direction), Some(b));
                }
                out.insert((b, s.direction.negate()), Some(a.expect("finite segments join vertices")));
            }
            None => {
                if let Some(a) = a {
                    out.insert((a, s.direction), None);
                }
            }
        }
    }
    // Ray ranks per side, by constant.
    let mut side_consts: BTreeMap<usize, Vec<Q>> = BTreeMap::new();
    for s in m.segments().iter().filter(|s| s.is_ray()) {
        side_consts.entry(s.direction.index()).or_default().push(s.base.coord(s.direction.axis()).clone());
    }
    for v in side_consts.values_mut() {
        v.sort_by(|a, b| b.cmp(a));
    }
    let rank = |side: usize, c: &Q| side_consts[&side].iter().position(|x| x == c).unwrap();

    let mut node_of: HashMap<usize, usize> = HashMap::new();
    let mut nodes = Vec::new();
    for (i, v) in m.vertices().iter().enumerate() {
        if v.kind.is_y() {
            node_of.insert(i, nodes.len());
            nodes.push(ElidedNode { location: v.location.clone(), kind: v.kind, edges: BTreeMap::new() });
        }
    }

    // Walk from vertex `v` in direction `d` through crossings.
    let walk = |v: usize, d: Direction| -> (End, Vec<PlanePoint>) {
        let mut cur = v;
        let mut crossings = Vec::new();
        loop {
            match out[&(cur, d)] {
                None => {
                    let loc = &m.vertices()[cur].location;
                    return (End::Boundary { side: d.index(), rank: rank(d.index(), loc.coord(d.axis())) }, crossings);
                }
                Some(next) => {
                    if let Some(&node) = node_of.get(&next) {
                        return (End::Node { node, dir: d.negate() }, crossings);
                    }
                    crossings.push(m.vertices()[next].location.clone());
                    cur = next;
                }
            }
        }
    };

    let mut edges: Vec<ElidedEdge> = Vec::new();
    let mut seen: HashMap<(usize, Direction), usize> = HashMap::new();
    for (i, v) in m.vertices().iter().enumerate() {
        let Some(&node) = node_of.get(&i) else { continue };
        for d in Direction::ALL {
            if !v.multiplicities[d.index()].is_positive() || seen.contains_key(&(node, d)) {
                continue;
            }
            let (far, crossings) = walk(i, d);
            let id = edges.len();
            seen.insert((node, d), id);
            if let End::Node { node: u, dir } = far {
                seen.insert((u, dir), id);
            }
            edges.push(ElidedEdge {
                axis: d.axis(),
                ends: [End::Node { node, dir: d }, far],
                constant: v.location.coord(d.axis()).clone(),
                crossings,
            });
        }
    }
    // Lines meeting no node at all.
    let mut lines_done: Vec<(Axis, Q)> = Vec::new();
    for (i, v) in m.vertices().iter().enumerate() {
        if v.kind != VertexKind::Crossing {
            continue;
        }
        for d in Direction::ALL.into_iter().filter(|d| d.is_forward()) {
            if !v.multiplicities[d.index()].is_positive() {
                continue;
            }
            let key = (d.axis(), v.location.coord(d.axis()).clone());
            if lines_done.contains(&key) {
                continue;
            }
            let (a, mut ca) = walk(i, d);
            let (b, cb) = walk(i, d.negate());
            if matches!(a, End::Boundary { .. }) && matches!(b, End::Boundary { .. }) {
                ca.push(v.location.clone());
                ca.extend(cb);
                ca.sort();
                edges.push(ElidedEdge { axis: d.axis(), ends: [b, a], constant: key.1.clone(), crossings: ca });
            }
            lines_done.push(key);
        }
    }
    for (id, e) in edges.iter().enumerate() {
        for end in e.ends {
            if let End::Node { node, dir } = end {
                nodes[node].edges.insert(dir, id);
            }
        }
    }
    Ok(ElidedGraph { nodes, edges })
}

impl ElidedGraph {
    pub fn finite_edges(&self) -> impl Iterator<Item = (usize, &ElidedEdge)> {
        self.edges.iter().enumerate().filter(|(_, e)| e.is_finite())
    }

    fn node_pair(e: &ElidedEdge) -> (usize, usize) {
        match e.ends {
            [End::Node { node: a, .. }, End::Node { node: b, .. }] => (a, b),
            _ => unreachable!("finite edge"),
        }
    }

    /// Whether the two-ended edges form a forest.
    pub fn is_acyclic(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for (_, e) in self.finite_edges() {
            let (a, b) = Self::node_pair(e);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    /// A cycle of two-ended edges, listed in order, if one exists.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let n = self.nodes.len();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (id, e) in self.finite_edges() {
            let (a, b) = Self::node_pair(e);
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
        // Spanning forest, then any edge outside it closes a cycle.
        let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut depth: Vec<Option<usize>> = vec![None; n];
        for root in 0..n {
            if depth[root].is_some() {
                continue;
            }
            depth[root] = Some(0);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for &(u, id) in &adj[v] {
                    if depth[u].is_none() {
                        depth[u] = Some(depth[v].unwrap() + 1);
                        via[u] = Some((v, id));
                        stack.push(u);
                    }
                }
            }
        }
        let tree: Vec<usize> = via.iter().flatten().map(|&(_, e)| e).collect();
        let (id, e) = self.finite_edges().find(|(id, _)| !tree.contains(id))?;
        let (mut v, mut u) = Self::node_pair(e);
        let (mut up_v, mut up_u) = (Vec::new(), Vec::new());
        while v != u {
            if depth[v] >= depth[u] {
                let (p, e) = via[v].unwrap();
                up_v.push(e);
                v = p;
            } else {
                let (p, e) = via[u].unwrap();
                up_u.push(e);
                u = p;
            }
        }
        // a → lca → b, then back along `id`.
        up_u.reverse();
        up_v.extend(up_u);
        up_v.push(id);
        Some(up_v)
    }
}

/// The boundary constant a semi-infinite edge must carry under `t`.
fn boundary_value(t: &BoundaryTriple, side: usize, rank: usize) -> Result<Q> {
    let w = match side {
        2 => &t.lambda,
        4 => &t.mu,
        0 => &t.nu,
        _ => return Err(Error::Invalid(format!("no GL_n rays in direction {side}"))),
    };
    w.get(rank).cloned().ok_or(Error::LengthMismatch)
}

/// Constant coordinates of every edge of an acyclic post-elision graph,
/// found from the boundary alone: a node with two known edges gives its
/// third edge minus their sum.
pub fn forest_solve(t: &BoundaryTriple, g: &ElidedGraph) -> Result<Vec<Q>> {
    if !g.is_acyclic() {
        return Err(Error::HasCycle);
    }
    let mut known: Vec<Option<Q>> = vec![None; g.edges.len()];
    for (id, e) in g.edges.iter().enumerate() {
        for end in e.ends {
            if let End::Boundary { side, rank } = end {
                let v = boundary_value(t, side, rank)?;
                if known[id].as_ref().is_some_and(|k| *k != v) {
                    return Err(Error::Invalid("a line carries two boundary values".into()));
                }
                known[id] = Some(v);
            }
        }
    }
    loop {
        let mut progress = false;
        for node in &g.nodes {
            let ids: Vec<usize> = node.edges.values().copied().collect();
            let missing: Vec<usize> = ids.iter().copied().filter(|&i| known[i].is_none()).collect();
            if ids.len() == 3 && missing.len() == 1 {
                let s: Q = ids.iter().filter_map(|&i| known[i].clone()).sum();
                known[missing[0]] = Some(-s);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    known.into_iter().map(|k| k.ok_or(Error::Underdetermined)).collect()
}

/// Moves the loop `cycle` (edge ids in order) by `epsilon`: the loop edges'
/// constants shift alternately by `+ε` and `−ε`, each loop node slides along
/// its third edge, and crossings on the loop follow. Positive `epsilon`
/// lengthens the loop.
pub fn breathe_loop(h: &Honeycomb, cycle: &[usize], epsilon: &Q) -> Result<Honeycomb> {
    let m = diagram(h);
    let g = elide(&m)?;
    if cycle.len() < 2 || cycle.len() % 2 == 1 {
        return Err(Error::Invalid("a loop has an even number of edges".into()));
    }
    let moved = |eps: &Q| -> Result<HashMap<PlanePoint, PlanePoint>> {
        let mut shift: HashMap<(Axis, Q), Q> = HashMap::new();
        for (i, &id) in cycle.iter().enumerate() {
            let e = g.edges.get(id).ok_or_else(|| Error::Invalid(format!("no edge {id}")))?;
            if !e.is_finite() {
                return Err(Error::Invalid(format!("edge {id} is not two-ended")));
            }
            let s = if i % 2 == 0 { eps.clone() } else { -eps.clone() };
            shift.insert((e.axis, e.constant.clone()), s);
        }
        let new_line = |axis: Axis, c: &Q| -> Option<Q> { shift.get(&(axis, c.clone())).map(|s| c + s) };
        let mut new_loc: HashMap<PlanePoint, PlanePoint> = HashMap::new();
        for v in m.vertices() {
            let p = &v.location;
            let lines: Vec<(Axis, Q)> = Axis::ALL
                .iter()
                .filter_map(|&a| new_line(a, p.coord(a)).map(|c| (a, c)))
                .collect();
            let target = match lines.len() {
                0 => continue,
                1 => {
                    // Slide along the one used line that keeps its constant.
                    let (a, c) = &lines[0];
                    let other = Axis::ALL
                        .into_iter()
                        .find(|&b| {
                            b != *a
                                && new_line(b, p.coord(b)).is_none()
                                && (v.multiplicities[b.forward().index()].is_positive()
                                    || v.multiplicities[b.forward().negate().index()].is_positive())
                        })
                        .ok_or_else(|| Error::Invalid("loop vertex has no fixed line".into()))?;
                    crossing_point(*a, c, other, p.coord(other))
                }
                _ => crossing_point(lines[0].0, &lines[0].1, lines[1].0, &lines[1].1),
            };
            new_loc.insert(p.clone(), target);
        }
        Ok(new_loc)
    };
    let place = |loc: &HashMap<PlanePoint, PlanePoint>| -> Vec<PlanePoint> {
        h.positions().iter().map(|p| loc.get(p).cloned().unwrap_or_else(|| p.clone())).collect()
    };
    // Orient so that positive steps lengthen the loop.
    let one = Q::one();
    let unit = moved(&one)?;
    let grow: Q = cycle
        .iter()
        .map(|&id| {
            let e = &g.edges[id];
            let [End::Node { node: a, .. }, End::Node { node: b, .. }] = e.ends else { unreachable!() };
            let (pa, pb) = (&g.nodes[a].location, &g.nodes[b].location);
            let before = (pb - pa).param(e.axis).abs();
            let at = |p: &PlanePoint| unit.get(p).cloned().unwrap_or_else(|| p.clone());
            let after = (&at(pb) - &at(pa)).param(e.axis).abs();
            after - before
        })
        .sum();
    let sign = if grow.is_negative() { -one } else { one };

    // Edge lengths are affine in the step; find the range of legal ones.
    let p0 = h.positions().to_vec();
    let p1 = place(&moved(&sign)?);
    let (mut upper, mut lower): (Option<Q>, Option<Q>) = (None, None);
    for e in h.tinkertoy().edges() {
        if let (Some(t), Some(hd)) = (e.tail, e.head) {
            let l0 = (&p0[hd] - &p0[t]).param(e.axis).clone();
            let l1 = (&p1[hd] - &p1[t]).param(e.axis).clone() - &l0;
            if l1.is_zero() {
                continue;
            }
            let b = &l0 / l1.abs();
            let slot = if l1.is_negative() { &mut upper } else { &mut lower };
            *slot = Some(slot.take().map_or(b.clone(), |x| x.min(b)));
        }
    }
    let (limit, within) = if epsilon.is_negative() {
        (lower.clone(), lower.as_ref().is_none_or(|b| -epsilon <= *b))
    } else {
        (upper.clone(), upper.as_ref().is_none_or(|b| epsilon <= b))
    };
    if !within {
        return Err(Error::EpsilonTooLarge(limit.map_or("unbounded".into(), |b| format_q(&b))));
    }
    validate_configuration(h.tinkertoy().clone(), place(&moved(&(epsilon * &sign))?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::honeycomb::{overlay, tripod, Tinkertoy};
    use crate::rational::{q, qr};
    use std::sync::Arc;

    #[test]
    fn standard_gl2_is_a_tree() {
        let h = Honeycomb::standard(Arc::new(Tinkertoy::gl(2)));
        let g = elide(&diagram(&h)).unwrap();
        assert_eq!(g.nodes.len(), 4);
        assert!(g.is_acyclic());
        let t = h.boundary_conditions().unwrap();
        let solved = forest_solve(&t, &g).unwrap();
        let read: Vec<Q> = g.edges.iter().map(|e| e.constant.clone()).collect();
        assert_eq!(solved, read);
    }

    #[test]
    fn crossing_is_elided() {
        let h = overlay(&tripod(&q(0), &q(0)), &tripod(&q(3), &q(-1))).unwrap();
        let g = elide(&diagram(&h)).unwrap();
        assert_eq!(g.nodes.len(), 2);
        // Two like-oriented Ys never share an edge; their rays cross once.
        assert_eq!(g.finite_edges().count(), 0);
        assert_eq!(g.edges.len(), 6);
        assert!(g.is_acyclic());
        assert_eq!(g.edges.iter().map(|e| e.crossings.len()).sum::<usize>(), 2);
    }

    #[test]
    fn single_y_solve() {
        let t = BoundaryTriple::new(vec![q(2)], vec![q(-5)], vec![q(3)]).unwrap();
        let g = elide(&diagram(&tripod(&q(2), &q(-5)))).unwrap();
        let s = forest_solve(&t, &g).unwrap();
        assert_eq!(s.iter().sum::<Q>(), q(0));
    }

    #[test]
    fn hexagon_breathing_in_standard_gl3() {
        let h = Honeycomb::standard(Arc::new(Tinkertoy::gl(3)));
        let g = elide(&diagram(&h)).unwrap();
        let cyc = g.find_cycle().expect("the hexagon");
        assert_eq!(cyc.len(), 6);
        let eps = qr(1, 4);
        let b = breathe_loop(&h, &cyc, &eps).unwrap();
        assert_eq!(b.boundary_conditions().unwrap(), h.boundary_conditions().unwrap());
        let per = |x: &Honeycomb| -> Q {
            let hive = x.to_hive();
            let p = (2, 1);
            crate::lattice::neighbours(p)
                .iter()
                .map(|&nb| hive.rhombus_value(&crate::lattice::Rhombus::from_edge(crate::lattice::DualEdge::new(p, nb))))
                .sum()
        };
        assert_eq!(per(&b) - per(&h), q(6) * &eps);
        assert_eq!(breathe_loop(&h, &cyc, &q(0)).unwrap(), h);
        assert!(matches!(breathe_loop(&h, &cyc, &q(5)), Err(Error::EpsilonTooLarge(_))));
    }
}

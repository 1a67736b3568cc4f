//! Constant coordinates of a forest-shaped diagram written directly in
//! terms of the boundary.
//!
//! Cutting a finite edge `e` leaves a subtree `S` on the side of its chosen
//! endpoint `v`. Summing the vertex relation `x + y + z = 0` over `S`, with
//! sign `+1` on nodes oriented like `v` and `−1` on the others, cancels every
//! edge inside `S` and leaves `c_e = −Σ ± c_f` over the rays `f` of `S`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hive::BoundaryTriple;
use crate::honeycomb::{ElidedGraph, End};
use crate::rational::Q;

fn ray_value(t: &BoundaryTriple, side: usize, rank: usize) -> Result<Q> {
    let w = match side {
        2 => &t.lambda,
        4 => &t.mu,
        0 => &t.nu,
        _ => return Err(Error::Invalid(format!("no GL_n rays in direction {side}"))),
    };
    w.get(rank).cloned().ok_or(Error::LengthMismatch)
}

/// Every edge constant of an acyclic post-elision graph, each computed on
/// its own from the boundary.
pub fn e_y_constants(t: &BoundaryTriple, g: &ElidedGraph) -> Result<Vec<Q>> {
    if !g.is_acyclic() {
        return Err(Error::HasCycle);
    }
    (0..g.edges.len()).map(|id| e_y_constant(t, g, id)).collect()
}

pub fn e_y_constant(t: &BoundaryTriple, g: &ElidedGraph, id: usize) -> Result<Q> {
    let e = &g.edges[id];
    if let Some(End::Boundary { side, rank }) = e.ends.iter().find(|x| matches!(x, End::Boundary { .. })) {
        return ray_value(t, *side, *rank);
    }
    let [End::Node { node: u, .. }, End::Node { node: v, .. }] = e.ends else { unreachable!() };
    // The subtree beyond v.
    let mut seen = BTreeSet::from([u, v]);
    let mut stack = vec![v];
    let mut subtree = vec![v];
    while let Some(a) = stack.pop() {
        for &f in g.nodes[a].edges.values() {
            if f == id {
                continue;
            }
            for end in g.edges[f].ends {
                if let End::Node { node: b, .. } = end {
                    if seen.insert(b) {
                        stack.push(b);
                        subtree.push(b);
                    }
                }
            }
        }
    }
    let mut total = Q::from_integer(0.into());
    for &a in &subtree {
        let sign = if g.nodes[a].kind == g.nodes[v].kind { 1 } else { -1 };
        for &f in g.nodes[a].edges.values() {
            for end in g.edges[f].ends {
                if let End::Boundary { side, rank } = end {
                    total += ray_value(t, side, rank)? * Q::from_integer(sign.into());
                }
            }
        }
    }
    Ok(-total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::honeycomb::{diagram, elide, forest_solve, Honeycomb, Tinkertoy};
    use crate::lift::largest_lift_seeded;
    use std::sync::Arc;

    #[test]
    fn standard_honeycombs() {
        for n in 1..=5 {
            let h = Honeycomb::standard(Arc::new(Tinkertoy::gl(n)));
            let g = elide(&diagram(&h)).unwrap();
            let t = h.boundary_conditions().unwrap();
            if n >= 3 {
                assert!(matches!(e_y_constants(&t, &g), Err(Error::HasCycle)));
                continue;
            }
            let read: Vec<Q> = g.edges.iter().map(|e| e.constant.clone()).collect();
            assert_eq!(e_y_constants(&t, &g).unwrap(), read);
        }
    }

    #[test]
    fn agrees_with_leaf_stripping_on_lifts() {
        let t = BoundaryTriple::from_ints(&[5, 3, 1, 0], &[4, 2, 1, 0], &[-1, -3, -5, -7]).unwrap();
        let r = largest_lift_seeded(&t, 3).unwrap();
        let g = elide(&r.diagram).unwrap();
        let a = forest_solve(&t, &g).unwrap();
        assert_eq!(e_y_constants(&t, &g).unwrap(), a);
        let read: Vec<Q> = g.edges.iter().map(|e| e.constant.clone()).collect();
        assert_eq!(a, read);
    }
}

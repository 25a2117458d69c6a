//! Correspondence between rooted Eulerian cycles of `di(G)` and pairs of a
//! combinatorial map over `G` with a spanning tree.
//!
//! Forward: walk from the root arc; at each vertex leave on the first unused
//! dart counterclockwise after the reference dart, where the reference is the
//! dart of the tree edge pointing to the root vertex (or the root dart itself
//! at the root vertex). The reference dart is used last.
//!
//! Inverse: the exits at each vertex, read in order, are its rotation; the last
//! exit of every non-root vertex is its tree edge.

use super::cmap::CombinatorialMap;
use super::eulerian::{directed_double, EulerianCycle};
use super::multigraph::Multigraph;
use crate::error::{Error, Result};
use std::collections::VecDeque;

fn check_root(g: &Multigraph, root: usize) -> Result<()> {
    if root >= 2 * g.edge_count() {
        return Err(Error::InvalidArgument(format!("root arc {root} out of range")));
    }
    Ok(())
}

/// The Eulerian cycle attached to `(m, tree)` with first arc `root`.
///
/// # Panics
/// If `tree` is not a spanning tree of the underlying graph, or the walk
/// fails to cover every arc.
pub fn best_forward(m: &CombinatorialMap, tree: &[usize], root: usize) -> Result<EulerianCycle> {
    let g = m.graph();
    check_root(g, root)?;
    assert!(g.is_spanning_tree(tree), "edges {tree:?} are not a spanning tree");
    let d = directed_double(g);
    let a = d.arc(root).tail;

    // reference dart per vertex: the dart leading toward `a` along the tree
    let mut reference = vec![usize::MAX; g.vertex_count()];
    reference[a] = root;
    let mut tree_darts = vec![Vec::new(); g.vertex_count()];
    for &e in tree {
        for dart in [2 * e, 2 * e + 1] {
            tree_darts[d.arc(dart).tail].push(dart);
        }
    }
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        for &dart in &tree_darts[u] {
            let w = d.arc(dart).head;
            if w != a && reference[w] == usize::MAX {
                // w leaves toward u on the opposite side of the same edge
                reference[w] = dart ^ 1;
                queue.push_back(w);
            }
        }
    }

    // next exit candidate per vertex
    let mut cursor: Vec<usize> = reference.iter().map(|&r| m.successor(r)).collect();
    let mut used = vec![false; d.arc_count()];
    used[root] = true;
    let mut arcs = vec![root];
    let mut at = d.arc(root).head;
    'walk: loop {
        let degree = m.rotation()[at].len();
        for _ in 0..degree {
            let dart = cursor[at];
            cursor[at] = m.successor(dart);
            if !used[dart] {
                used[dart] = true;
                arcs.push(dart);
                at = d.arc(dart).head;
                continue 'walk;
            }
        }
        break;
    }
    assert_eq!(
        arcs.len(),
        d.arc_count(),
        "walk stopped at vertex {at} before covering every arc"
    );
    EulerianCycle::new(&d, arcs)
}

/// Recovers the map (rooted at `root`) and spanning tree sent to `c` by
/// [`best_forward`].
///
/// # Panics
/// If the reconstructed tree is not spanning.
pub fn best_inverse(c: &EulerianCycle, g: &Multigraph, root: usize) -> Result<(CombinatorialMap, Vec<usize>)> {
    check_root(g, root)?;
    let d = directed_double(g);
    let c = EulerianCycle::new(&d, c.arcs().to_vec())?;
    if c.root() != root {
        return Err(Error::InvalidArgument(format!(
            "cycle starts at arc {}, not {root}",
            c.root()
        )));
    }
    let a = d.arc(root).tail;
    let mut rotation = vec![Vec::new(); g.vertex_count()];
    for &arc in c.arcs() {
        rotation[d.arc(arc).tail].push(arc);
    }
    let mut tree: Vec<usize> = rotation
        .iter()
        .enumerate()
        .filter(|&(v, _)| v != a)
        .filter_map(|(_, exits)| exits.last().map(|&arc| d.arc(arc).edge))
        .collect();
    tree.sort_unstable();
    assert!(
        g.is_spanning_tree(&tree),
        "last exits {tree:?} do not form a spanning tree"
    );
    let m = CombinatorialMap::new(g.clone(), rotation, Some(root))?;
    Ok((m, tree))
}

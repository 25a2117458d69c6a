use super::eulerian::{directed_double, DirectedDouble};
use super::multigraph::Multigraph;
use crate::error::{Error, Result};

/// Largest vertex degree accepted by [`enumerate_maps`].
pub const DARTS_PER_VERTEX_BUDGET: usize = 8;

/// Rotation system on the labeled darts of a multigraph.
///
/// Darts share ids with the arcs of `di(G)`: dart `d` sits at the tail of arc
/// `d`, so arc `d` is the outgoing side of dart `d` and arc `d ^ 1` is its
/// incoming side. Rotations list each vertex's darts counterclockwise,
/// starting from the smallest dart.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CombinatorialMap {
    graph: Multigraph,
    rotation: Vec<Vec<usize>>,
    next: Vec<usize>,
    root: Option<usize>,
}

impl CombinatorialMap {
    /// Validates the rotation against the darts of `graph` and puts every
    /// cyclic order in canonical form.
    pub fn new(graph: Multigraph, rotation: Vec<Vec<usize>>, root: Option<usize>) -> Result<Self> {
        let d = directed_double(&graph);
        if rotation.len() != graph.vertex_count() {
            return Err(Error::InvalidArgument("one rotation per vertex required".into()));
        }
        let mut next = vec![usize::MAX; d.arc_count()];
        let mut canonical = Vec::with_capacity(rotation.len());
        for (v, cycle) in rotation.into_iter().enumerate() {
            for (i, &dart) in cycle.iter().enumerate() {
                if dart >= d.arc_count() || d.arc(dart).tail != v {
                    return Err(Error::InvalidArgument(format!(
                        "dart {dart} does not sit at vertex {v}"
                    )));
                }
                if next[dart] != usize::MAX {
                    return Err(Error::InvalidArgument(format!("dart {dart} appears twice")));
                }
                next[dart] = cycle[(i + 1) % cycle.len()];
            }
            canonical.push(canonical_cycle(cycle));
        }
        if next.contains(&usize::MAX) {
            return Err(Error::InvalidArgument("every dart must appear in a rotation".into()));
        }
        if let Some(r) = root {
            if r >= d.arc_count() {
                return Err(Error::InvalidArgument(format!("root dart {r} out of range")));
            }
        }
        Ok(Self {
            graph,
            rotation: canonical,
            next,
            root,
        })
    }

    /// `Gr(M)`, the multigraph forgetting the rotations.
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn with_root(mut self, root: Option<usize>) -> Self {
        self.root = root;
        self
    }

    pub fn dart_count(&self) -> usize {
        self.next.len()
    }

    /// Counterclockwise successor of `dart` around its vertex.
    pub fn successor(&self, dart: usize) -> usize {
        self.next[dart]
    }

    pub fn directed_double(&self) -> DirectedDouble {
        directed_double(&self.graph)
    }

    /// Faces are the cycles of `d -> successor(d ^ 1)`.
    pub fn face_count(&self) -> usize {
        let mut seen = vec![false; self.next.len()];
        let mut faces = 0;
        for start in 0..self.next.len() {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = self.next[d ^ 1];
            }
        }
        faces
    }

    /// Genus from `V - E + F = 2 - 2g`.
    ///
    /// # Panics
    /// If the Euler characteristic is inconsistent (odd or above 2).
    pub fn genus(&self) -> usize {
        let chi = self.graph.vertex_count() as isize - self.graph.edge_count() as isize + self.face_count() as isize;
        assert!(
            chi <= 2 && (2 - chi) % 2 == 0,
            "Euler characteristic {chi} is not 2 - 2g"
        );
        ((2 - chi) / 2) as usize
    }
}

fn canonical_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = cycle.iter().enumerate().min_by_key(|(_, &d)| d).map(|(i, _)| i) {
        cycle.rotate_left(pos);
    }
    cycle
}

/// Every rotation system on the labeled darts of `g`, each once.
pub fn enumerate_maps(g: &Multigraph) -> Result<Vec<CombinatorialMap>> {
    let d = directed_double(g);
    let darts = d.out_arcs();
    if let Some(max) = darts.iter().map(Vec::len).max() {
        if max > DARTS_PER_VERTEX_BUDGET {
            return Err(Error::OverBudget {
                what: "darts per vertex",
                value: max,
                limit: DARTS_PER_VERTEX_BUDGET,
            });
        }
    }
    let per_vertex: Vec<Vec<Vec<usize>>> = darts.iter().map(|ds| cyclic_orders(ds)).collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; per_vertex.len()];
    loop {
        let rotation = pick.iter().zip(&per_vertex).map(|(&i, opts)| opts[i].clone()).collect();
        out.push(CombinatorialMap::new(g.clone(), rotation, None)?);
        // odometer over the per-vertex choices, last vertex fastest
        let mut v = per_vertex.len();
        loop {
            if v == 0 {
                return Ok(out);
            }
            v -= 1;
            pick[v] += 1;
            if pick[v] < per_vertex[v].len() {
                break;
            }
            pick[v] = 0;
        }
    }
}

// Cyclic orders of `darts` with the smallest dart first: (k-1)! of them, in
// lexicographic order. An empty dart list has a single empty order.
fn cyclic_orders(darts: &[usize]) -> Vec<Vec<usize>> {
    let Some((&first, rest)) = darts.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    let mut current = vec![first];
    let mut remaining = rest.to_vec();
    permute(&mut current, &mut remaining, &mut out);
    out
}

fn permute(current: &mut Vec<usize>, remaining: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining.is_empty() {
        out.push(current.clone());
        return;
    }
    for i in 0..remaining.len() {
        let d = remaining.remove(i);
        current.push(d);
        permute(current, remaining, out);
        current.pop();
        remaining.insert(i, d);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::rosette::{rosette_genus, Pairing};

    fn graph(v: usize, edges: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_edges(v, edges).unwrap()
    }

    #[test]
    fn map_counts() {
        assert_eq!(enumerate_maps(&graph(2, &[(0, 1)])).unwrap().len(), 1);
        // four labeled darts at one vertex: 3! cyclic orders
        assert_eq!(enumerate_maps(&graph(1, &[(0, 0), (0, 0)])).unwrap().len(), 6);
        assert_eq!(enumerate_maps(&graph(2, &[(0, 1), (0, 0)])).unwrap().len(), 2);
    }

    #[test]
    fn maps_are_distinct_and_valid() {
        let g = graph(3, &[(0, 1), (0, 1), (1, 2), (2, 2)]);
        let maps = enumerate_maps(&g).unwrap();
        // degrees 2, 3, 3: 1! * 2! * 2!
        assert_eq!(maps.len(), 4);
        let set: std::collections::HashSet<_> = maps.iter().collect();
        assert_eq!(set.len(), maps.len());
        for m in &maps {
            let _ = m.genus();
            assert_eq!(m.graph(), &g);
        }
    }

    #[test]
    fn single_vertex_genus_matches_rosette() {
        // Pairing on positions 0..2l around the vertex versus labeled loops:
        // for each map, read darts counterclockwise and pair positions by edge.
        let g = graph(1, &[(0, 0), (0, 0), (0, 0)]);
        for m in enumerate_maps(&g).unwrap() {
            let order = &m.rotation()[0];
            let mut pos = vec![0; order.len()];
            for (i, &d) in order.iter().enumerate() {
                pos[d] = i;
            }
            let pairs: Vec<(usize, usize)> = (0..3).map(|e| (pos[2 * e], pos[2 * e + 1])).collect();
            let p = Pairing::from_pairs(&pairs).unwrap();
            assert_eq!(m.genus(), rosette_genus(&p));
        }
    }

    #[test]
    fn invalid_rotations_rejected() {
        let g = graph(2, &[(0, 1)]);
        assert!(CombinatorialMap::new(g.clone(), vec![vec![1], vec![0]], None).is_err());
        assert!(CombinatorialMap::new(g.clone(), vec![vec![0], vec![]], None).is_err());
        assert!(CombinatorialMap::new(g.clone(), vec![vec![0]], None).is_err());
        assert!(CombinatorialMap::new(g, vec![vec![0], vec![1]], Some(2)).is_err());
    }

    #[test]
    fn budget() {
        let g = graph(1, &[(0, 0); 5]);
        assert!(matches!(enumerate_maps(&g), Err(Error::OverBudget { .. })));
    }
}

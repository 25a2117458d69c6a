use crate::error::{Error, Result};
use crate::exact::factorial;
use num_bigint::BigInt;
use num_traits::One;

/// Largest vertex count for multigraph enumeration.
pub const MULTIGRAPH_VERTEX_BUDGET: usize = 5;
/// Largest edge count for multigraph enumeration.
pub const MULTIGRAPH_EDGE_BUDGET: usize = 5;

/// Undirected multigraph on the labeled vertices `0 .. vertex_count`, stored
/// as symmetric edge multiplicities (`l_aa` counts self loops at `a`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multigraph {
    vertex_count: usize,
    mult: Vec<u32>, // row-major, symmetric
}

/// A labeled edge `{u, v}` with `u <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: usize,
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            mult: vec![0; vertex_count * vertex_count],
        }
    }

    /// Graph with one edge per listed endpoint pair.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(vertex_count);
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.vertex_count || b >= self.vertex_count {
            return Err(Error::InvalidArgument(format!(
                "edge ({a}, {b}) outside {} vertices",
                self.vertex_count
            )));
        }
        self.mult[a * self.vertex_count + b] += 1;
        if a != b {
            self.mult[b * self.vertex_count + a] += 1;
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn multiplicity(&self, a: usize, b: usize) -> u32 {
        self.mult[a * self.vertex_count + b]
    }

    pub fn edge_count(&self) -> usize {
        let mut l = 0;
        for a in 0..self.vertex_count {
            for b in a..self.vertex_count {
                l += self.multiplicity(a, b) as usize;
            }
        }
        l
    }

    /// Edges labeled `0 .. l` in lexicographic order of `(u, v)`, parallel
    /// copies consecutive.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count {
            for v in u..self.vertex_count {
                for _ in 0..self.multiplicity(u, v) {
                    out.push(Edge { id: out.len(), u, v });
                }
            }
        }
        out
    }

    /// `deg(v)` counting each self loop twice.
    pub fn degree(&self, v: usize) -> usize {
        (0..self.vertex_count)
            .map(|w| self.multiplicity(v, w) as usize * if w == v { 2 } else { 1 })
            .sum()
    }

    /// True when every vertex lies in a single component (an isolated vertex
    /// makes a graph with more than one vertex disconnected).
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for e in self.edges() {
            uf.union(e.u, e.v);
        }
        let root = uf.find(0);
        (1..self.vertex_count).all(|v| uf.find(v) == root)
    }

    /// `prod_{a<b} l_ab! * prod_a 2^{l_aa} l_aa!`, the order of the group
    /// relabeling parallel edges and flipping or relabeling self loops.
    pub fn symmetry_factor(&self) -> BigInt {
        let mut acc = BigInt::one();
        for a in 0..self.vertex_count {
            let loops = self.multiplicity(a, a) as u64;
            acc *= factorial(loops) << loops;
            for b in a + 1..self.vertex_count {
                acc *= factorial(self.multiplicity(a, b) as u64);
            }
        }
        acc
    }

    /// All spanning trees as sorted lists of edge ids.
    pub fn spanning_trees(&self) -> Vec<Vec<usize>> {
        let candidates: Vec<Edge> = self.edges().into_iter().filter(|e| !e.is_loop()).collect();
        let need = self.vertex_count.saturating_sub(1);
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(need);
        choose_trees(&candidates, 0, need, self.vertex_count, &mut chosen, &mut out);
        out
    }

    /// Whether `edges` (edge ids) form a spanning tree of this graph.
    pub fn is_spanning_tree(&self, edges: &[usize]) -> bool {
        let all = self.edges();
        if edges.len() + 1 != self.vertex_count {
            return false;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for &id in edges {
            match all.get(id) {
                Some(e) if !e.is_loop() => {
                    if !uf.union(e.u, e.v) {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }
}

fn choose_trees(
    candidates: &[Edge],
    from: usize,
    need: usize,
    vertex_count: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == need {
        let mut uf = UnionFind::new(vertex_count);
        let acyclic = chosen.iter().all(|&i| uf.union(candidates[i].u, candidates[i].v));
        if acyclic {
            out.push(chosen.iter().map(|&i| candidates[i].id).collect());
        }
        return;
    }
    for i in from..candidates.len() {
        chosen.push(i);
        choose_trees(candidates, i + 1, need, vertex_count, chosen, out);
        chosen.pop();
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Connected multigraphs on exactly the vertices `0 .. v` with `l` edges,
/// each once, ordered lexicographically by their multiplicity vectors.
pub fn enumerate_connected_multigraphs(v: usize, l: usize) -> Result<Vec<Multigraph>> {
    if v == 0 || v > MULTIGRAPH_VERTEX_BUDGET {
        return Err(Error::OverBudget {
            what: "multigraph vertex count",
            value: v,
            limit: MULTIGRAPH_VERTEX_BUDGET,
        });
    }
    if l > MULTIGRAPH_EDGE_BUDGET {
        return Err(Error::OverBudget {
            what: "multigraph edge count",
            value: l,
            limit: MULTIGRAPH_EDGE_BUDGET,
        });
    }
    let positions: Vec<(usize, usize)> = (0..v).flat_map(|a| (a..v).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let mut counts = vec![0u32; positions.len()];
    compositions(l as u32, 0, &mut counts, &mut |counts| {
        let mut g = Multigraph::new(v);
        for (&(a, b), &c) in positions.iter().zip(counts) {
            for _ in 0..c {
                g.add_edge(a, b).expect("positions are in range");
            }
        }
        if g.is_connected() {
            out.push(g);
        }
    });
    Ok(out)
}

// Every way to write `remaining` as an ordered sum over counts[slot..],
// largest leading entries first.
fn compositions(remaining: u32, slot: usize, counts: &mut [u32], emit: &mut impl FnMut(&[u32])) {
    if slot + 1 == counts.len() {
        counts[slot] = remaining;
        emit(counts);
        counts[slot] = 0;
        return;
    }
    for c in (0..=remaining).rev() {
        counts[slot] = c;
        compositions(remaining - c, slot + 1, counts, emit);
    }
    counts[slot] = 0;
}

use super::multigraph::Multigraph;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Largest arc count accepted by the Eulerian backtracking.
pub const ARC_BUDGET: usize = 12;

/// One of the two arcs an edge splits into. Arc `2e` runs `u -> v` and arc
/// `2e + 1` runs `v -> u` for the labeled edge `e = {u, v}`, `u <= v`;
/// a self loop gives two arcs `(a, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub edge: usize,
    pub side: u8,
}

/// The directed double `di(G)`: every edge split into two opposite arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedDouble {
    vertex_count: usize,
    arcs: Vec<Arc>,
}

impl DirectedDouble {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> Arc {
        self.arcs[id]
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// The other arc of the same edge.
    pub fn partner(id: usize) -> usize {
        id ^ 1
    }

    /// Outgoing arc ids per vertex, ascending.
    pub fn out_arcs(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for (id, a) in self.arcs.iter().enumerate() {
            out[a.tail].push(id);
        }
        out
    }
}

pub fn directed_double(g: &Multigraph) -> DirectedDouble {
    let mut arcs = Vec::with_capacity(2 * g.edge_count());
    for e in g.edges() {
        arcs.push(Arc {
            tail: e.u,
            head: e.v,
            edge: e.id,
            side: 0,
        });
        arcs.push(Arc {
            tail: e.v,
            head: e.u,
            edge: e.id,
            side: 1,
        });
    }
    DirectedDouble {
        vertex_count: g.vertex_count(),
        arcs,
    }
}

/// Closed walk through every arc of a [`DirectedDouble`] exactly once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EulerianCycle {
    arcs: Vec<usize>,
}

impl EulerianCycle {
    /// Checks incidence, closure and that every arc appears exactly once.
    pub fn new(d: &DirectedDouble, arcs: Vec<usize>) -> Result<Self> {
        if arcs.len() != d.arc_count() || arcs.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "cycle has {} arcs, expected {}",
                arcs.len(),
                d.arc_count()
            )));
        }
        let mut seen = vec![false; d.arc_count()];
        for &a in &arcs {
            if a >= seen.len() || std::mem::replace(&mut seen[a], true) {
                return Err(Error::InvalidArgument(format!("arc {a} missing or repeated")));
            }
        }
        for i in 0..arcs.len() {
            let next = arcs[(i + 1) % arcs.len()];
            if d.arc(arcs[i]).head != d.arc(next).tail {
                return Err(Error::InvalidArgument(format!(
                    "arcs {} and {next} are not incident",
                    arcs[i]
                )));
            }
        }
        Ok(Self { arcs })
    }

    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }

    pub fn root(&self) -> usize {
        self.arcs[0]
    }
}

fn check_arc_budget(d: &DirectedDouble, root: usize) -> Result<()> {
    if d.arc_count() > ARC_BUDGET {
        return Err(Error::OverBudget {
            what: "arc count",
            value: d.arc_count(),
            limit: ARC_BUDGET,
        });
    }
    if root >= d.arc_count() {
        return Err(Error::InvalidArgument(format!("root arc {root} out of range")));
    }
    Ok(())
}

// Depth-first extension of `path`; `visit` sees every complete cycle.
fn extend(
    d: &DirectedDouble,
    out: &[Vec<usize>],
    used: &mut [bool],
    path: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    let last = *path.last().expect("path starts at the root");
    let at = d.arc(last).head;
    if path.len() == d.arc_count() {
        if at == d.arc(path[0]).tail {
            visit(path);
        }
        return;
    }
    for &next in &out[at] {
        if !used[next] {
            used[next] = true;
            path.push(next);
            extend(d, out, used, path, visit);
            path.pop();
            used[next] = false;
        }
    }
}

fn walk_rooted(d: &DirectedDouble, root: usize, mut visit: impl FnMut(&[usize])) {
    let out = d.out_arcs();
    // A vertex without arcs cannot be reached, so no cycle covers the graph.
    if out.iter().any(|o| o.is_empty()) {
        return;
    }
    let mut used = vec![false; d.arc_count()];
    used[root] = true;
    let mut path = vec![root];
    extend(d, &out, &mut used, &mut path, &mut visit);
}

/// Eulerian cycles starting with `root`, with parallel and loop arcs
/// distinguishable. Zero when the underlying graph is disconnected.
pub fn eulerian_count_rooted(d: &DirectedDouble, root: usize) -> Result<u64> {
    check_arc_budget(d, root)?;
    let mut count = 0;
    walk_rooted(d, root, |_| count += 1);
    Ok(count)
}

/// The cycles counted by [`eulerian_count_rooted`], in lexicographic order.
pub fn eulerian_cycles_rooted(d: &DirectedDouble, root: usize) -> Result<Vec<EulerianCycle>> {
    check_arc_budget(d, root)?;
    let mut cycles = Vec::new();
    walk_rooted(d, root, |p| cycles.push(EulerianCycle { arcs: p.to_vec() }));
    Ok(cycles)
}

/// `sum_r eulerian_count_rooted(di(G), r)` divided by
/// `prod_{a<b} l_ab! * prod_a 2^{l_aa} l_aa!`.
///
/// # Panics
/// If the division is not exact.
pub fn eulerian_count_normalized(g: &Multigraph) -> Result<BigInt> {
    let d = directed_double(g);
    let mut total = BigInt::zero();
    for root in 0..d.arc_count() {
        total += eulerian_count_rooted(&d, root)?;
    }
    let symmetry = g.symmetry_factor();
    let (quotient, rest) = total.div_rem(&symmetry);
    assert!(
        rest.is_zero(),
        "{total} Eulerian cycles are not divisible by {symmetry}"
    );
    Ok(quotient)
}

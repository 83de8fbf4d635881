//! Exhaustive flip-graph oracle: enumerate every locally valid MV
//! assignment of a small pattern and build the graph whose nodes are the
//! valid assignments and whose edges are single face flips.
//!
//! States are bit-packed over the constrained edges (those incident to an
//! interior vertex, in edge-id order, mountain = 1). Edges touching only
//! boundary vertices are free bits no vertex rule can see, so enumeration
//! works on the projection and reports the full count as a multiple of
//! 2^free; enumerated assignments lift the free edges as mountains.

use crate::pattern::{CreasePattern, EdgeId, Mv, MvAssignment, VertexId};
use crate::validity::{is_locally_valid, vertex_valid};
use rand::Rng;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("pattern has {edges} constrained edges, over the {cap}-bit cap")]
    CapExceeded { edges: usize, cap: usize },
    #[error("enumeration exceeded the {cap}-state budget")]
    NodeBudget { cap: usize },
    #[error("assignment is not a node of this flip graph")]
    UnknownNode,
}

#[derive(Clone, Copy, Debug)]
pub struct OracleCaps {
    /// Most constrained edges a pattern may have (bit width of a state).
    pub max_bits: usize,
    /// Most valid states enumeration may produce.
    pub max_nodes: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { max_bits: 40, max_nodes: 1_000_000 }
    }
}

/// Everything enumeration learns about a pattern's valid assignments.
pub struct Enumeration {
    /// Valid assignments, free edges lifted to mountain, ascending by
    /// bit-packed encoding.
    pub assignments: Vec<MvAssignment>,
    /// Constrained edges in id order; bit i of an encoding is
    /// constrained[i].
    pub constrained: Vec<EdgeId>,
    /// Free (boundary-only) edges.
    pub free: Vec<EdgeId>,
}

impl Enumeration {
    pub fn projected_count(&self) -> usize {
        self.assignments.len()
    }

    /// Count including every choice of the free edges.
    pub fn full_count(&self) -> u128 {
        (self.assignments.len() as u128) << self.free.len()
    }

    pub fn encode(&self, mu: &MvAssignment) -> u64 {
        encode(&self.constrained, mu)
    }
}

pub fn encode(constrained: &[EdgeId], mu: &MvAssignment) -> u64 {
    let mut s = 0u64;
    for (i, &e) in constrained.iter().enumerate() {
        if mu.get(e) == Mv::Mountain {
            s |= 1 << i;
        }
    }
    s
}

pub(crate) fn decode(p: &CreasePattern, constrained: &[EdgeId], state: u64) -> MvAssignment {
    let mut mu = MvAssignment::uniform(p, Mv::Mountain);
    for (i, &e) in constrained.iter().enumerate() {
        mu.set(e, if state >> i & 1 == 1 { Mv::Mountain } else { Mv::Valley });
    }
    mu
}

/// All locally valid assignments under the default caps.
pub fn enumerate_valid(p: &CreasePattern) -> Result<Enumeration, OracleError> {
    enumerate_valid_with(p, OracleCaps::default())
}

pub fn enumerate_valid_with(
    p: &CreasePattern,
    caps: OracleCaps,
) -> Result<Enumeration, OracleError> {
    let constrained = p.constrained_edges();
    let free: Vec<EdgeId> = (0..p.edge_count())
        .map(EdgeId)
        .filter(|e| !constrained.contains(e))
        .collect();
    if constrained.len() > caps.max_bits.min(64) {
        return Err(OracleError::CapExceeded {
            edges: constrained.len(),
            cap: caps.max_bits.min(64),
        });
    }

    // per-bit bookkeeping: which interior vertices an edge touches, and
    // which bit completes each vertex's star
    let bit_of: std::collections::BTreeMap<EdgeId, usize> = constrained
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let interior: Vec<VertexId> = p.interior_vertices().collect();
    let mut touches: Vec<Vec<usize>> = vec![Vec::new(); constrained.len()];
    let mut degree: Vec<i32> = vec![0; interior.len()];
    for (n, &v) in interior.iter().enumerate() {
        let star = p.star(v).unwrap();
        degree[n] = star.degree() as i32;
        for &e in &star.edges {
            touches[bit_of[&e]].push(n);
        }
    }

    let mut mu = MvAssignment::uniform(p, Mv::Mountain);
    let mut sum = vec![0i32; interior.len()];
    let mut remaining = degree.clone();
    let mut states: Vec<u64> = Vec::new();

    // depth-first over bits; Maekawa reachability prunes, the family rule
    // fires when a star completes
    fn dfs(
        p: &CreasePattern,
        constrained: &[EdgeId],
        touches: &[Vec<usize>],
        interior: &[VertexId],
        mu: &mut MvAssignment,
        sum: &mut [i32],
        remaining: &mut [i32],
        states: &mut Vec<u64>,
        acc: u64,
        bit: usize,
        cap: usize,
    ) -> Result<(), OracleError> {
        if bit == constrained.len() {
            if states.len() == cap {
                return Err(OracleError::NodeBudget { cap });
            }
            states.push(acc);
            return Ok(());
        }
        for mv in [Mv::Valley, Mv::Mountain] {
            mu.set(constrained[bit], mv);
            for &n in &touches[bit] {
                sum[n] += mv.sign();
                remaining[n] -= 1;
            }
            let mut feasible = true;
            for &n in &touches[bit] {
                let (s, r) = (sum[n], remaining[n]);
                if (s + r) % 2 != 0 || r < s.abs() - 2 {
                    feasible = false;
                    break;
                }
                // r hits 0 exactly when this bit completes the star
                if r == 0 && !vertex_valid(mu, p, interior[n]).unwrap() {
                    feasible = false;
                    break;
                }
            }
            let res = if feasible {
                let acc2 = if mv == Mv::Mountain { acc | 1 << bit } else { acc };
                dfs(
                    p, constrained, touches, interior, mu, sum, remaining, states,
                    acc2, bit + 1, cap,
                )
            } else {
                Ok(())
            };
            for &n in &touches[bit] {
                sum[n] -= mv.sign();
                remaining[n] += 1;
            }
            res?;
        }
        Ok(())
    }

    dfs(
        p,
        &constrained,
        &touches,
        &interior,
        &mut mu,
        &mut sum,
        &mut remaining,
        &mut states,
        0,
        0,
        caps.max_nodes,
    )?;

    states.sort_unstable();
    let assignments = states
        .iter()
        .map(|&s| decode(p, &constrained, s))
        .collect();
    Ok(Enumeration { assignments, constrained, free })
}

/// The origami flip graph on bit-packed valid states.
pub struct FlipGraph {
    /// Ascending state encodings.
    pub nodes: Vec<u64>,
    /// Sorted neighbor lists by node index.
    pub adj: Vec<Vec<usize>>,
    pub constrained: Vec<EdgeId>,
    pub free_count: usize,
    /// XOR mask each face applies to a state (constrained edges only).
    pub face_masks: Vec<u64>,
}

impl FlipGraph {
    pub fn node_index(&self, state: u64) -> Option<usize> {
        self.nodes.binary_search(&state).ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }
}

pub fn build_flip_graph(p: &CreasePattern) -> Result<FlipGraph, OracleError> {
    build_flip_graph_with(p, OracleCaps::default())
}

pub fn build_flip_graph_with(
    p: &CreasePattern,
    caps: OracleCaps,
) -> Result<FlipGraph, OracleError> {
    let en = enumerate_valid_with(p, caps)?;
    let nodes: Vec<u64> = en.assignments.iter().map(|mu| en.encode(mu)).collect();
    let bit_of: std::collections::BTreeMap<EdgeId, usize> = en
        .constrained
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let face_masks: Vec<u64> = p
        .faces
        .iter()
        .map(|face| {
            face.edges
                .iter()
                .filter_map(|e| bit_of.get(e))
                .fold(0u64, |m, &b| m ^ (1 << b))
        })
        .collect();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for (i, &s) in nodes.iter().enumerate() {
        for &mask in &face_masks {
            if mask == 0 {
                continue;
            }
            if let Ok(j) = nodes.binary_search(&(s ^ mask)) {
                adj[i].push(j);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    // a flip is its own inverse, so membership of the flipped state is
    // exactly flip legality and the graph is symmetric by construction
    Ok(FlipGraph {
        nodes,
        adj,
        constrained: en.constrained,
        free_count: en.free.len(),
        face_masks,
    })
}

/// Shortest flip distance between two valid assignments, None when they
/// sit in different components.
pub fn bfs_distance(
    g: &FlipGraph,
    mu1: &MvAssignment,
    mu2: &MvAssignment,
) -> Result<Option<usize>, OracleError> {
    let a = g
        .node_index(encode(&g.constrained, mu1))
        .ok_or(OracleError::UnknownNode)?;
    let b = g
        .node_index(encode(&g.constrained, mu2))
        .ok_or(OracleError::UnknownNode)?;
    Ok(bfs_from(g, a)[b])
}

fn bfs_from(g: &FlipGraph, start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.nodes.len()];
    dist[start] = Some(0);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in &g.adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Component count plus each component's exact diameter, components in
/// order of their smallest node.
pub fn components_and_diameter(g: &FlipGraph) -> (usize, Vec<usize>) {
    let n = g.nodes.len();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = Vec::new();
        let mut queue = std::collections::VecDeque::from([s]);
        comp[s] = id;
        while let Some(u) = queue.pop_front() {
            members.push(u);
            for &v in &g.adj[u] {
                if comp[v] == usize::MAX {
                    comp[v] = id;
                    queue.push_back(v);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    let mut diameters = Vec::with_capacity(comps.len());
    for members in &comps {
        let mut diam = 0;
        for &u in members {
            let dist = bfs_from(g, u);
            for &v in members {
                diam = diam.max(dist[v].expect("member unreachable within its component"));
            }
        }
        diameters.push(diam);
    }
    (comps.len(), diameters)
}

/// Rejection-sample a locally valid assignment, random on every edge
/// including the free ones. Practical for the grid-like families whose
/// per-vertex acceptance is a constant; None if tries run out.
pub fn sample_valid(
    p: &CreasePattern,
    rng: &mut impl Rng,
    max_tries: usize,
) -> Option<MvAssignment> {
    let mut mu = MvAssignment::uniform(p, Mv::Mountain);
    for _ in 0..max_tries {
        for v in mu.values.iter_mut() {
            *v = if rng.gen::<bool>() { Mv::Mountain } else { Mv::Valley };
        }
        if is_locally_valid(&mu, p) {
            return Some(mu);
        }
    }
    None
}

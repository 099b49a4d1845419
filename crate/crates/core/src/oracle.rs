//! Brute-force local complementation orbits.
//!
//! Orbits are explored breadth first, expanding every vertex in ascending
//! order. Members are stored by their graph6 encoding, so no isomorphism
//! quotient is taken: two labeled graphs are in one orbit iff a sequence of
//! local complementations turns one into the other.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CAP: usize = 1_000_000;

/// Largest `n` accepted by [`partition_connected_graphs`].
pub const PARTITION_MAX_N: usize = 6;

#[derive(Clone, Debug)]
pub struct Orbit {
    pub origin: Graph,
    /// graph6 encodings, sorted.
    pub members: BTreeSet<String>,
    /// BFS depth of the deepest member reached.
    pub depth: usize,
    /// Set when exploration stopped at the cap before closing.
    pub truncated: bool,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.members.contains(&g.to_graph6())
    }
}

/// Explores the orbit of `g`, stopping once more than `cap` members would be
/// held (`cap = None` means [`DEFAULT_CAP`]).
pub fn orbit_bfs(g: &Graph, cap: Option<usize>) -> Orbit {
    let cap = cap.unwrap_or(DEFAULT_CAP).max(1);
    let mut members = BTreeSet::from([g.to_graph6()]);
    let mut queue = VecDeque::from([(g.clone(), 0usize)]);
    let mut depth = 0;
    let mut truncated = false;
    'bfs: while let Some((current, d)) = queue.pop_front() {
        depth = depth.max(d);
        for v in 0..current.n() {
            let next = current.local_complement(v).expect("vertex in range");
            let key = next.to_graph6();
            if members.contains(&key) {
                continue;
            }
            if members.len() == cap {
                truncated = true;
                break 'bfs;
            }
            members.insert(key);
            queue.push_back((next, d + 1));
        }
    }
    Orbit {
        origin: g.clone(),
        members,
        depth,
        truncated,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    Equivalent,
    NotEquivalent,
    /// The orbit was truncated before the target showed up.
    Unknown,
}

pub fn oracle_equivalent(g: &Graph, h: &Graph, cap: Option<usize>) -> OracleAnswer {
    if g.n() != h.n() {
        return OracleAnswer::NotEquivalent;
    }
    let orbit = orbit_bfs(g, cap);
    if orbit.contains(h) {
        OracleAnswer::Equivalent
    } else if orbit.truncated {
        OracleAnswer::Unknown
    } else {
        OracleAnswer::NotEquivalent
    }
}

/// Every labeled graph on `n` vertices, by edge mask over the upper triangle.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1u64 << pairs.len()).map(move |mask| {
        let mut g = Graph::empty(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.toggle_edge(u, v);
            }
        }
        g
    })
}

pub fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(Graph::is_connected)
}

/// Splits all labeled connected graphs on `n` vertices into orbits, seeded
/// in enumeration order.
pub fn partition_connected_graphs(n: usize) -> Result<Vec<Orbit>> {
    if n > PARTITION_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: PARTITION_MAX_N,
        });
    }
    let mut seen: HashSet<String> = HashSet::new();
    let mut orbits = Vec::new();
    for g in connected_graphs(n) {
        if seen.contains(&g.to_graph6()) {
            continue;
        }
        let orbit = orbit_bfs(&g, None);
        debug_assert!(!orbit.truncated);
        seen.extend(orbit.members.iter().cloned());
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// Maps each member encoding to the index of its orbit.
pub fn orbit_index(orbits: &[Orbit]) -> HashMap<String, usize> {
    orbits
        .iter()
        .enumerate()
        .flat_map(|(k, o)| o.members.iter().map(move |m| (m.clone(), k)))
        .collect()
}

//! Simple labeled graphs and local complementation.
//!
//! A [`Graph`] is a symmetric, zero-diagonal adjacency matrix over GF(2).
//! Vertices are labeled `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BitMatrix,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: BitMatrix::zeros(n, n),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.toggle_edge(u, v);
            }
        }
        g
    }

    /// Star on `n` vertices with its hub at `hub`.
    pub fn star(n: usize, hub: usize) -> Self {
        let mut g = Self::empty(n);
        for v in (0..n).filter(|&v| v != hub) {
            g.toggle_edge(hub, v);
        }
        g
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.toggle_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n > 2 {
            g.toggle_edge(0, n - 1);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::NotSimple(format!("self-loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::NotSimple(format!("duplicate edge {u}-{v}")));
            }
            g.toggle_edge(u, v);
        }
        Ok(g)
    }

    /// Wraps an adjacency matrix after checking it is square, symmetric and
    /// loop-free.
    pub fn from_adjacency(adj: BitMatrix) -> Result<Self> {
        if !adj.is_square() {
            return Err(Error::NotSimple(format!(
                "adjacency matrix is {}x{}",
                adj.rows(),
                adj.cols()
            )));
        }
        for i in 0..adj.rows() {
            if adj.get(i, i) {
                return Err(Error::NotSimple(format!("self-loop at vertex {i}")));
            }
        }
        if adj.transpose() != adj {
            return Err(Error::NotSimple("adjacency matrix is not symmetric".into()));
        }
        Ok(Self { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.rows()
    }

    #[inline]
    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    /// Neighborhood of `v` as a bit row.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitVector {
        self.adj.row(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row(v).count_ones()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj.row(u).ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "simple graphs have no loops");
        self.adj.row_mut(u).flip(v);
        self.adj.row_mut(v).flip(u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    /// Local complement at `i`: the subgraph induced on the neighborhood of
    /// `i` is replaced by its complement.
    pub fn local_complement(&self, i: usize) -> Result<Graph> {
        self.check_vertex(i)?;
        let mut out = self.clone();
        out.local_complement_in_place(i);
        Ok(out)
    }

    pub(crate) fn local_complement_in_place(&mut self, i: usize) {
        let nbhd = self.adj.row(i).clone();
        for u in nbhd.ones() {
            let row = self.adj.row_mut(u);
            row.xor_assign(&nbhd);
            row.set(u, false);
        }
    }

    /// Left-to-right fold of [`Graph::local_complement`].
    pub fn apply_lc_sequence(&self, seq: &[usize]) -> Result<Graph> {
        for &v in seq {
            self.check_vertex(v)?;
        }
        let mut out = self.clone();
        for &v in seq {
            out.local_complement_in_place(v);
        }
        Ok(out)
    }

    pub fn connected_components(&self) -> VertexPartition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut block = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj.row(u).ones() {
                    if !seen[v] {
                        seen[v] = true;
                        block.push(v);
                        queue.push_back(v);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        VertexPartition { blocks }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().blocks.len() <= 1
    }

    /// Subgraph induced on `vs`, relabeled `0..vs.len()` in the given order.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph> {
        let mut used = vec![false; self.n()];
        for &v in vs {
            self.check_vertex(v)?;
            if std::mem::replace(&mut used[v], true) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let mut sub = Graph::empty(vs.len());
        for (a, &u) in vs.iter().enumerate() {
            for (b, &v) in vs.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    sub.toggle_edge(a, b);
                }
            }
        }
        Ok(sub)
    }

    pub fn to_graph6(&self) -> String {
        crate::formats::graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        crate::formats::graph6::decode(text)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// Disjoint vertex blocks covering `0..n`. Each block is sorted and blocks are
/// ordered by their smallest member, so two partitions are equal as sets of
/// sets exactly when they compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let mut g = Graph::empty(n);
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.toggle_edge(u, v);
                }
            }
            g
        })
    }

    fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
        let p: f64 = rng.random_range(0.05..0.95);
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.toggle_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn lc_of_triangle_removes_opposite_edge() {
        let g = Graph::complete(3).local_complement(0).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn lc_of_star_hub_is_complete() {
        for n in 2..9 {
            assert_eq!(Graph::star(n, 0).local_complement(0).unwrap(), Graph::complete(n));
        }
    }

    #[test]
    fn lc_of_empty_graph_is_empty() {
        for i in 0..4 {
            assert_eq!(Graph::empty(4).local_complement(i).unwrap(), Graph::empty(4));
        }
    }

    #[test]
    fn lc_vertex_out_of_range() {
        assert_eq!(
            Graph::empty(3).local_complement(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(Graph::empty(3).apply_lc_sequence(&[0, 5]).is_err());
    }

    #[test]
    fn lc_sequences() {
        let g = Graph::path(5);
        assert_eq!(g.apply_lc_sequence(&[]).unwrap(), g);
        assert_eq!(g.apply_lc_sequence(&[2, 2]).unwrap(), g);
        assert_eq!(Graph::star(3, 0).apply_lc_sequence(&[0]).unwrap(), Graph::complete(3));
    }

    #[test]
    fn components() {
        assert_eq!(Graph::complete(3).connected_components().blocks, vec![vec![0, 1, 2]]);
        assert_eq!(
            Graph::empty(3).connected_components().blocks,
            vec![vec![0], vec![1], vec![2]]
        );
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.connected_components().blocks, vec![vec![0, 1], vec![2, 3]]);
        let g = Graph::from_edges(5, &[(4, 0), (1, 3)]).unwrap();
        assert_eq!(g.connected_components().blocks, vec![vec![0, 4], vec![1, 3], vec![2]]);
    }

    #[test]
    fn induced_subgraphs() {
        assert_eq!(Graph::complete(3).induced_subgraph(&[0, 1]).unwrap(), Graph::complete(2));
        assert_eq!(Graph::path(4).induced_subgraph(&[2]).unwrap(), Graph::empty(1));
        assert_eq!(Graph::path(3).induced_subgraph(&[0, 2]).unwrap(), Graph::empty(2));
        let relabeled = Graph::path(3).induced_subgraph(&[2, 1, 0]).unwrap();
        assert_eq!(relabeled, Graph::path(3));
        assert_eq!(
            Graph::path(3).induced_subgraph(&[0, 0]),
            Err(Error::DuplicateVertex(0))
        );
        assert!(Graph::path(3).induced_subgraph(&[3]).is_err());
    }

    #[test]
    fn adjacency_validation() {
        let loopy = BitMatrix::from_u8_rows(&[&[1, 0], &[0, 0]]);
        assert!(Graph::from_adjacency(loopy).is_err());
        let skew = BitMatrix::from_u8_rows(&[&[0, 1], &[0, 0]]);
        assert!(Graph::from_adjacency(skew).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn involution_exhaustive_small() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                for i in 0..n {
                    let once = g.local_complement(i).unwrap();
                    assert!(Graph::from_adjacency(once.adjacency().clone()).is_ok());
                    assert_eq!(once.local_complement(i).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn lc_properties_randomized() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.random_range(1..40);
            let g = random_graph(&mut rng, n);
            let i = rng.random_range(0..n);
            let h = g.local_complement(i).unwrap();
            assert_eq!(h.local_complement(i).unwrap(), g);
            assert_eq!(h.connected_components(), g.connected_components());
            // Only pairs inside the open neighborhood of i can change.
            for u in 0..n {
                for v in u + 1..n {
                    let inside = g.has_edge(i, u) && g.has_edge(i, v);
                    assert_eq!(g.has_edge(u, v) != h.has_edge(u, v), inside);
                }
            }
        }
    }
}

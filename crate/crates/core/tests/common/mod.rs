#![allow(dead_code)]

use lc_equiv_core::{BitMatrix, Graph, LocalCliffordOp, SingleQubitClass};
use rand::rngs::StdRng;
use rand::Rng;

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
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

/// Uniform over labeled connected graphs, by rejection.
pub fn random_connected_graph(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let g = random_graph(rng, n, 0.5);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_lc_sequence(rng: &mut StdRng, n: usize, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.random_range(0..n)).collect()
}

pub fn random_local_clifford(rng: &mut StdRng, n: usize) -> LocalCliffordOp {
    LocalCliffordOp::new(
        (0..n)
            .map(|_| SingleQubitClass::ALL[rng.random_range(0..6)].matrix())
            .collect(),
    )
    .unwrap()
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> BitMatrix {
    let mut m = BitMatrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, rng.random_bool(0.5));
        }
    }
    m
}

pub fn random_invertible(rng: &mut StdRng, n: usize) -> BitMatrix {
    loop {
        let m = random_matrix(rng, n, n);
        if m.invert().is_ok() {
            return m;
        }
    }
}

//! Binary stabilizer formalism.
//!
//! A stabilizer state on `n` qubits is an `n`-dimensional self-dual subspace
//! of GF(2)^(2n), presented by a `2n x n` generator matrix whose columns span
//! it. Rows `0..n` hold the Z components and rows `n..2n` the X components,
//! so a graph state has generator matrix `[theta; I]` and the symplectic form
//! is `P = [[0, I], [I, 0]]`.
//!
//! Local Clifford operations act as `Q = [[A, B], [C, D]]` with diagonal
//! blocks. Qubit `i` transforms its `(z; x)` pair by the 2x2 matrix
//! `[[a_i, b_i], [c_i, d_i]]`, which must be invertible. Signs are not
//! tracked.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, StreamingEliminator};
use crate::graph::Graph;

/// `2n x n` generator matrix of a stabilizer state (full column rank, self-dual).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorMatrix {
    n: usize,
    mat: BitMatrix,
}

impl GeneratorMatrix {
    /// Validates shape, rank and self-duality.
    pub fn new(mat: BitMatrix) -> Result<Self> {
        let n = mat.cols();
        if mat.rows() != 2 * n {
            return Err(Error::InvalidGenerator(format!(
                "expected a {}x{n} matrix, got {}x{n}",
                2 * n,
                mat.rows()
            )));
        }
        if mat.rank() != n {
            return Err(Error::InvalidGenerator("columns are linearly dependent".into()));
        }
        let s = Self { n, mat };
        if !symplectic_gram(&s.mat, &s.mat)?.is_zero() {
            return Err(Error::InvalidGenerator("columns are not mutually orthogonal".into()));
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.mat
    }

    pub fn z_block(&self) -> BitMatrix {
        self.mat.row_block(0, self.n)
    }

    pub fn x_block(&self) -> BitMatrix {
        self.mat.row_block(self.n, self.n)
    }

    /// Right-multiplies by an invertible `n x n` matrix (a change of basis of
    /// the same stabilizer space).
    pub fn change_basis(&self, r: &BitMatrix) -> Result<GeneratorMatrix> {
        if r.rows() != self.n || !r.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "basis change must be {n}x{n}",
                n = self.n
            )));
        }
        r.invert()?;
        Ok(GeneratorMatrix {
            n: self.n,
            mat: self.mat.mul(r)?,
        })
    }

    /// True when both matrices span the same stabilizer space.
    ///
    /// Two maximal isotropic subspaces coincide exactly when one is
    /// symplectically orthogonal to the other.
    pub fn same_space(&self, other: &GeneratorMatrix) -> bool {
        self.n == other.n
            && symplectic_gram(&self.mat, &other.mat).is_ok_and(|g| g.is_zero())
    }
}

/// `P = [[0, I], [I, 0]]` on `2n` coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    pub n: usize,
}

impl SymplecticForm {
    pub fn matrix(&self) -> BitMatrix {
        let n = self.n;
        let mut p = BitMatrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            p.set(i, n + i, true);
            p.set(n + i, i, true);
        }
        p
    }

    pub fn product(&self, u: &BitVector, v: &BitVector) -> Result<bool> {
        if u.len() != 2 * self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a form on {} coordinates",
                u.len(),
                2 * self.n
            )));
        }
        symplectic_product(u, v)
    }
}

/// `u^T P v` for vectors laid out as `(z | x)`.
pub fn symplectic_product(u: &BitVector, v: &BitVector) -> Result<bool> {
    if u.len() != v.len() || !u.len().is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "symplectic product of lengths {} and {}",
            u.len(),
            v.len()
        )));
    }
    let n = u.len() / 2;
    let (uz, ux) = (u.slice(0, n), u.slice(n, n));
    let (vz, vx) = (v.slice(0, n), v.slice(n, n));
    Ok(uz.dot(&vx) ^ ux.dot(&vz))
}

/// `S1^T P S2` for two `2n`-row matrices in `(z; x)` layout.
pub fn symplectic_gram(s1: &BitMatrix, s2: &BitMatrix) -> Result<BitMatrix> {
    if s1.rows() != s2.rows() || !s1.rows().is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "symplectic gram of {} and {} rows",
            s1.rows(),
            s2.rows()
        )));
    }
    let n = s1.rows() / 2;
    let (z1, x1) = (s1.row_block(0, n), s1.row_block(n, n));
    let (z2, x2) = (s2.row_block(0, n), s2.row_block(n, n));
    z1.transpose().mul(&x2)?.add(&x1.transpose().mul(&z2)?)
}

/// Generator matrix `[theta; I]` of the graph state of `g`.
pub fn graph_generator(g: &Graph) -> GeneratorMatrix {
    let n = g.n();
    let mat = g
        .adjacency()
        .vstack(&BitMatrix::identity(n))
        .expect("square blocks stack");
    GeneratorMatrix { n, mat }
}

/// A 2x2 binary matrix `[[a, b], [c, d]]` acting on a qubit's `(z; x)` pair.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QubitMatrix {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl QubitMatrix {
    pub const fn new(a: bool, b: bool, c: bool, d: bool) -> Self {
        Self { a, b, c, d }
    }

    pub const IDENTITY: Self = Self::new(true, false, false, true);

    pub fn from_array(q: [u8; 4]) -> Self {
        Self::new(q[0] != 0, q[1] != 0, q[2] != 0, q[3] != 0)
    }

    pub fn to_array(self) -> [u8; 4] {
        [self.a as u8, self.b as u8, self.c as u8, self.d as u8]
    }

    pub fn determinant(self) -> bool {
        (self.a & self.d) ^ (self.b & self.c)
    }

    /// Image of `(z, x)`.
    pub fn apply(self, z: bool, x: bool) -> (bool, bool) {
        ((self.a & z) ^ (self.b & x), (self.c & z) ^ (self.d & x))
    }
}

impl std::ops::Mul for QubitMatrix {
    type Output = Self;

    /// Matrix product `self * rhs`.
    fn mul(self, rhs: Self) -> Self {
        Self {
            a: (self.a & rhs.a) ^ (self.b & rhs.c),
            b: (self.a & rhs.b) ^ (self.b & rhs.d),
            c: (self.c & rhs.a) ^ (self.d & rhs.c),
            d: (self.c & rhs.b) ^ (self.d & rhs.d),
        }
    }
}

/// The six invertible 2x2 matrices over GF(2), named by Clifford gates.
///
/// Names read as matrix products, so `HS` is `H * S` (apply S, then H).
/// With `(z; x)` vectors, `S = [[1, 1], [0, 1]]` (X goes to Y) and
/// `H = [[0, 1], [1, 0]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum SingleQubitClass {
    I,
    H,
    S,
    HS,
    SH,
    HSH,
}

impl SingleQubitClass {
    pub const ALL: [SingleQubitClass; 6] = [Self::I, Self::H, Self::S, Self::HS, Self::SH, Self::HSH];

    pub fn matrix(self) -> QubitMatrix {
        const H: QubitMatrix = QubitMatrix::new(false, true, true, false);
        const S: QubitMatrix = QubitMatrix::new(true, true, false, true);
        match self {
            Self::I => QubitMatrix::IDENTITY,
            Self::H => H,
            Self::S => S,
            Self::HS => H * S,
            Self::SH => S * H,
            Self::HSH => H * S * H,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::I => "I",
            Self::H => "H",
            Self::S => "S",
            Self::HS => "HS",
            Self::SH => "SH",
            Self::HSH => "HSH",
        }
    }
}

impl fmt::Display for SingleQubitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify_single_qubit(q: QubitMatrix) -> Result<SingleQubitClass> {
    SingleQubitClass::ALL
        .into_iter()
        .find(|c| c.matrix() == q)
        .ok_or(Error::Singular)
}

/// A local Clifford operation in binary form: one invertible 2x2 matrix per qubit.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LocalCliffordOp {
    qubits: Vec<QubitMatrix>,
}

impl LocalCliffordOp {
    pub fn new(qubits: Vec<QubitMatrix>) -> Result<Self> {
        if let Some(bad) = qubits.iter().position(|q| !q.determinant()) {
            return Err(Error::Inadmissible { qubit: bad });
        }
        Ok(Self { qubits })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            qubits: vec![QubitMatrix::IDENTITY; n],
        }
    }

    /// `class` on every qubit.
    pub fn uniform(n: usize, class: SingleQubitClass) -> Self {
        Self {
            qubits: vec![class.matrix(); n],
        }
    }

    /// Identity except `class` on qubit `i`.
    pub fn single(n: usize, i: usize, class: SingleQubitClass) -> Self {
        let mut op = Self::identity(n);
        op.qubits[i] = class.matrix();
        op
    }

    pub fn n(&self) -> usize {
        self.qubits.len()
    }

    pub fn qubit(&self, i: usize) -> QubitMatrix {
        self.qubits[i]
    }

    pub fn qubits(&self) -> &[QubitMatrix] {
        &self.qubits
    }

    pub fn classes(&self) -> Vec<SingleQubitClass> {
        self.qubits
            .iter()
            .map(|&q| classify_single_qubit(q).expect("determinant checked on construction"))
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.qubits.iter().all(|&q| q == QubitMatrix::IDENTITY)
    }

    /// The operation that applies `self` first and `next` second, i.e. the
    /// per-qubit product `next * self`.
    pub fn then(&self, next: &LocalCliffordOp) -> Result<LocalCliffordOp> {
        if self.n() != next.n() {
            return Err(Error::DimensionMismatch(format!(
                "composing operations on {} and {} qubits",
                self.n(),
                next.n()
            )));
        }
        Ok(LocalCliffordOp {
            qubits: self
                .qubits
                .iter()
                .zip(&next.qubits)
                .map(|(&first, &second)| second * first)
                .collect(),
        })
    }

    /// Diagonal blocks `(A, B, C, D)` as `n x n` matrices.
    pub fn blocks(&self) -> [BitMatrix; 4] {
        let n = self.n();
        let mut out = [
            BitMatrix::zeros(n, n),
            BitMatrix::zeros(n, n),
            BitMatrix::zeros(n, n),
            BitMatrix::zeros(n, n),
        ];
        for (i, q) in self.qubits.iter().enumerate() {
            out[0].set(i, i, q.a);
            out[1].set(i, i, q.b);
            out[2].set(i, i, q.c);
            out[3].set(i, i, q.d);
        }
        out
    }

    /// The full `2n x 2n` matrix `[[A, B], [C, D]]`.
    pub fn to_matrix(&self) -> BitMatrix {
        let n = self.n();
        let mut q = BitMatrix::zeros(2 * n, 2 * n);
        for (i, m) in self.qubits.iter().enumerate() {
            q.set(i, i, m.a);
            q.set(i, n + i, m.b);
            q.set(n + i, i, m.c);
            q.set(n + i, n + i, m.d);
        }
        q
    }

    /// Applies the operation to a `2n`-row matrix in `(z; x)` layout, row pair
    /// by row pair.
    pub fn apply_to_rows(&self, m: &BitMatrix) -> Result<BitMatrix> {
        let n = self.n();
        if m.rows() != 2 * n {
            return Err(Error::DimensionMismatch(format!(
                "operation on {n} qubits applied to {} rows",
                m.rows()
            )));
        }
        let mut out = m.clone();
        for (i, q) in self.qubits.iter().enumerate() {
            let (z, x) = (m.row(i), m.row(n + i));
            let mut new_z = BitVector::zeros(m.cols());
            let mut new_x = BitVector::zeros(m.cols());
            if q.a {
                new_z.xor_assign(z);
            }
            if q.b {
                new_z.xor_assign(x);
            }
            if q.c {
                new_x.xor_assign(z);
            }
            if q.d {
                new_x.xor_assign(x);
            }
            *out.row_mut(i) = new_z;
            *out.row_mut(n + i) = new_x;
        }
        Ok(out)
    }
}

/// `Q * S`. The result spans a stabilizer space again, since local Cliffords
/// are symplectic.
pub fn apply_local_clifford(q: &LocalCliffordOp, s: &GeneratorMatrix) -> Result<GeneratorMatrix> {
    if q.n() != s.n() {
        return Err(Error::DimensionMismatch(format!(
            "operation on {} qubits applied to a {}-qubit state",
            q.n(),
            s.n()
        )));
    }
    Ok(GeneratorMatrix {
        n: s.n(),
        mat: q.apply_to_rows(&s.mat)?,
    })
}

/// Generators as rows `(z | x)`, i.e. the transpose of a generator matrix.
struct GeneratorRows {
    n: usize,
    rows: Vec<BitVector>,
}

impl GeneratorRows {
    fn from_generator(s: &GeneratorMatrix) -> Self {
        Self {
            n: s.n,
            rows: s.mat.transpose().row_iter().cloned().collect(),
        }
    }

    fn hadamard(&mut self, qubit: usize) {
        for r in &mut self.rows {
            let (z, x) = (r.get(qubit), r.get(self.n + qubit));
            r.set(qubit, x);
            r.set(self.n + qubit, z);
        }
    }

    fn x_parts(&self) -> Vec<BitVector> {
        self.rows.iter().map(|r| r.slice(self.n, self.n)).collect()
    }

    fn x_rank(&self) -> usize {
        let mut e = StreamingEliminator::new(self.n);
        for x in self.x_parts() {
            e.feed(x).expect("widths agree");
        }
        e.rank()
    }

    /// Z-parts of a basis of the generators whose X-part vanishes, obtained
    /// by eliminating on the X coordinates.
    fn x_free_z_parts(&self) -> Vec<BitVector> {
        let n = self.n;
        let mut rows = self.rows.clone();
        let mut next = 0;
        for col in n..2 * n {
            let Some(p) = (next..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(next, p);
            let prow = rows[next].clone();
            for r in rows.iter_mut().skip(next + 1) {
                if r.get(col) {
                    r.xor_assign(&prow);
                }
            }
            next += 1;
        }
        rows[next..].iter().map(|r| r.slice(0, n)).collect()
    }

    fn to_generator(&self) -> GeneratorMatrix {
        let g = BitMatrix::from_rows(self.rows.clone()).expect("rows share a width");
        GeneratorMatrix {
            n: self.n,
            mat: g.transpose(),
        }
    }
}

/// Reduces a stabilizer state to an LC-equivalent graph state.
///
/// Returns `(g, q)` such that `q * s` spans the same space as `[theta_g; I]`.
/// Hadamards are applied until the X block is invertible, always on the
/// smallest qubit whose Hadamard raises the X-block rank; then
/// `theta = Z X^-1` and any diagonal ones are cleared with S on that qubit.
pub fn stabilizer_to_graph(s: &GeneratorMatrix) -> Result<(Graph, LocalCliffordOp)> {
    let n = s.n;
    let mut gens = GeneratorRows::from_generator(s);
    let mut hadamards = LocalCliffordOp::identity(n);

    let mut rank = gens.x_rank();
    while rank < n {
        let mut support = BitVector::zeros(n);
        for z in gens.x_free_z_parts() {
            for i in z.ones() {
                support.set(i, true);
            }
        }
        let mut progressed = false;
        for qubit in support.ones() {
            gens.hadamard(qubit);
            let trial = gens.x_rank();
            if trial > rank {
                rank = trial;
                hadamards.qubits[qubit] = SingleQubitClass::H.matrix() * hadamards.qubits[qubit];
                progressed = true;
                break;
            }
            gens.hadamard(qubit);
        }
        if !progressed {
            return Err(Error::NoProgress(format!(
                "X block stuck at rank {rank} of {n}; input is not a valid stabilizer state"
            )));
        }
    }

    let reduced = gens.to_generator();
    let x_inv = reduced.x_block().invert()?;
    let theta = reduced.z_block().mul(&x_inv)?;
    if theta.transpose() != theta {
        return Err(Error::Internal("Z X^-1 is not symmetric".into()));
    }

    let mut phases = LocalCliffordOp::identity(n);
    let mut adj = theta;
    for i in 0..n {
        if adj.get(i, i) {
            phases.qubits[i] = SingleQubitClass::S.matrix();
            adj.set(i, i, false);
        }
    }
    let graph = Graph::from_adjacency(adj)?;
    let q = hadamards.then(&phases)?;
    Ok((graph, q))
}

/// Parses a stabilizer given as Pauli strings, one generator per line.
///
/// Lines may carry a leading `+` or `-` sign, which is discarded with a
/// warning. Blank lines and lines starting with `#` are skipped. Line numbers
/// in errors are 1-based positions in `text`.
pub fn parse_pauli_stabilizer(text: &str) -> Result<GeneratorMatrix> {
    let mut generators: Vec<(usize, BitVector)> = Vec::new();
    let mut n = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let body = match line.strip_prefix(['+', '-', '\u{2212}']) {
            Some(rest) => {
                log::warn!("line {line_no}: sign ignored; signs do not affect local Clifford equivalence");
                rest.trim_start()
            }
            None => line,
        };
        let width = body.chars().count();
        let expected = *n.get_or_insert(width);
        if width != expected {
            return Err(Error::PauliLine {
                line: line_no,
                reason: format!("expected {expected} Pauli characters, found {width}"),
            });
        }
        let mut v = BitVector::zeros(2 * width);
        for (q, ch) in body.chars().enumerate() {
            let (z, x) = match ch {
                'I' => (false, false),
                'X' => (false, true),
                'Y' => (true, true),
                'Z' => (true, false),
                other => {
                    return Err(Error::PauliLine {
                        line: line_no,
                        reason: format!("invalid character '{other}' at position {}", q + 1),
                    })
                }
            };
            v.set(q, z);
            v.set(width + q, x);
        }
        generators.push((line_no, v));
    }

    let n = n.unwrap_or(0);
    if n == 0 {
        return Err(Error::GeneratorCount { expected: 0, found: 0 });
    }
    if generators.len() != n {
        return Err(Error::GeneratorCount {
            expected: n,
            found: generators.len(),
        });
    }
    for (i, (li, u)) in generators.iter().enumerate() {
        for (lj, v) in &generators[i + 1..] {
            if symplectic_product(u, v)? {
                return Err(Error::NonCommuting {
                    first: *li,
                    second: *lj,
                });
            }
        }
    }
    let mut e = StreamingEliminator::new(2 * n);
    for (line, v) in &generators {
        if !e.feed(v.clone())? {
            return Err(Error::RankDeficient { lines: vec![*line] });
        }
    }
    let rows = BitMatrix::from_rows(generators.into_iter().map(|(_, v)| v).collect())?;
    GeneratorMatrix::new(rows.transpose())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gm(rows: &[&[u8]]) -> GeneratorMatrix {
        GeneratorMatrix::new(BitMatrix::from_u8_rows(rows)).unwrap()
    }

    #[test]
    fn graph_generator_examples() {
        let s = graph_generator(&Graph::empty(2));
        assert_eq!(s.matrix(), &BitMatrix::from_u8_rows(&[&[0, 0], &[0, 0], &[1, 0], &[0, 1]]));
        let s = graph_generator(&Graph::complete(2));
        assert_eq!(s.z_block(), BitMatrix::from_u8_rows(&[&[0, 1], &[1, 0]]));
        assert_eq!(s.x_block(), BitMatrix::identity(2));
        assert_eq!(s.matrix().rank(), 2);
        assert!(GeneratorMatrix::new(s.matrix().clone()).is_ok());
    }

    #[test]
    fn generator_validation() {
        assert!(GeneratorMatrix::new(BitMatrix::zeros(3, 2)).is_err());
        assert!(GeneratorMatrix::new(BitMatrix::from_u8_rows(&[&[1, 1], &[0, 0], &[0, 0], &[0, 0]])).is_err());
        // Z1 and X1 anticommute.
        assert!(GeneratorMatrix::new(BitMatrix::from_u8_rows(&[&[1, 0], &[0, 0], &[0, 1], &[0, 0]])).is_err());
    }

    #[test]
    fn symplectic_product_examples() {
        let z = BitVector::from_indices(2, &[0]);
        let x = BitVector::from_indices(2, &[1]);
        assert!(symplectic_product(&z, &x).unwrap());
        assert!(symplectic_product(&x, &z).unwrap());
        for bits in 0u8..16 {
            let u = BitVector::from_bits((0..4).map(|k| bits >> k & 1 == 1));
            assert!(!symplectic_product(&u, &u).unwrap());
        }
        let s = graph_generator(&Graph::cycle(5));
        for a in 0..5 {
            for b in 0..5 {
                assert!(!symplectic_product(&s.matrix().column(a), &s.matrix().column(b)).unwrap());
            }
        }
        assert!(symplectic_product(&z, &BitVector::zeros(4)).is_err());
        assert!(SymplecticForm { n: 2 }.product(&z, &x).is_err());
    }

    #[test]
    fn symplectic_form_is_involution() {
        for n in 0..6 {
            let p = SymplecticForm { n }.matrix();
            assert_eq!(p.mul(&p).unwrap(), BitMatrix::identity(2 * n));
        }
    }

    #[test]
    fn local_clifford_examples() {
        let g = Graph::path(4);
        let s = graph_generator(&g);
        assert_eq!(apply_local_clifford(&LocalCliffordOp::identity(4), &s).unwrap(), s);

        let h = apply_local_clifford(&LocalCliffordOp::uniform(4, SingleQubitClass::H), &s).unwrap();
        assert_eq!(h.z_block(), BitMatrix::identity(4));
        assert_eq!(&h.x_block(), g.adjacency());

        for i in 0..4 {
            let q = LocalCliffordOp::single(4, i, SingleQubitClass::S);
            let out = apply_local_clifford(&q, &s).unwrap();
            let mut expected = g.adjacency().clone();
            expected.set(i, i, true);
            assert_eq!(out.z_block(), expected);
            assert_eq!(out.x_block(), BitMatrix::identity(4));
            // Same result through the dense block matrix.
            assert_eq!(&q.to_matrix().mul(s.matrix()).unwrap(), out.matrix());
            assert!(GeneratorMatrix::new(out.matrix().clone()).is_ok());
        }
    }

    #[test]
    fn inadmissible_quadruple_rejected() {
        let bad = QubitMatrix::new(true, true, true, true);
        assert_eq!(
            LocalCliffordOp::new(vec![QubitMatrix::IDENTITY, bad]),
            Err(Error::Inadmissible { qubit: 1 })
        );
    }

    #[test]
    fn classification_table() {
        let m = |r: [[u8; 2]; 2]| QubitMatrix::from_array([r[0][0], r[0][1], r[1][0], r[1][1]]);
        assert_eq!(classify_single_qubit(m([[1, 0], [0, 1]])).unwrap(), SingleQubitClass::I);
        assert_eq!(classify_single_qubit(m([[0, 1], [1, 0]])).unwrap(), SingleQubitClass::H);
        assert_eq!(classify_single_qubit(m([[1, 1], [0, 1]])).unwrap(), SingleQubitClass::S);
        assert_eq!(classify_single_qubit(m([[0, 1], [1, 1]])).unwrap(), SingleQubitClass::HS);
        assert_eq!(classify_single_qubit(m([[1, 1], [1, 0]])).unwrap(), SingleQubitClass::SH);
        assert_eq!(classify_single_qubit(m([[1, 0], [1, 1]])).unwrap(), SingleQubitClass::HSH);
        assert!(classify_single_qubit(m([[1, 1], [1, 1]])).is_err());

        // Bijection onto the invertible matrices.
        let invertible: Vec<QubitMatrix> = (0u8..16)
            .map(|k| QubitMatrix::from_array([k & 1, k >> 1 & 1, k >> 2 & 1, k >> 3 & 1]))
            .filter(|q| q.determinant())
            .collect();
        assert_eq!(invertible.len(), 6);
        let mut classes: Vec<_> = invertible.iter().map(|&q| classify_single_qubit(q).unwrap()).collect();
        classes.sort();
        classes.dedup();
        assert_eq!(classes.len(), 6);
    }

    #[test]
    fn s_gate_sends_x_to_y() {
        let s = SingleQubitClass::S.matrix();
        assert_eq!(s.apply(false, true), (true, true));
        assert_eq!(s.apply(true, false), (true, false));
    }

    #[test]
    fn graph_state_reduces_to_itself() {
        for g in [Graph::path(5), Graph::complete(4), Graph::empty(3), Graph::cycle(6)] {
            let (out, q) = stabilizer_to_graph(&graph_generator(&g)).unwrap();
            assert_eq!(out, g);
            assert!(q.is_identity());
        }
    }

    #[test]
    fn bell_pair_reduces_to_edge() {
        let bell = parse_pauli_stabilizer("XX\nZZ\n").unwrap();
        let (g, q) = stabilizer_to_graph(&bell).unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!(q.classes(), vec![SingleQubitClass::H, SingleQubitClass::I]);
        let mapped = apply_local_clifford(&q, &bell).unwrap();
        assert!(mapped.same_space(&graph_generator(&g)));
    }

    #[test]
    fn hadamard_image_reduces_to_inverse_graph() {
        // [I; theta] for the invertible K2 adjacency.
        let s = gm(&[&[1, 0], &[0, 1], &[0, 1], &[1, 0]]);
        let (g, q) = stabilizer_to_graph(&s).unwrap();
        let mapped = apply_local_clifford(&q, &s).unwrap();
        assert!(mapped.same_space(&graph_generator(&g)));
        assert!(symplectic_gram(mapped.matrix(), graph_generator(&g).matrix()).unwrap().is_zero());
    }

    #[test]
    fn diagonal_cleared_with_phase() {
        // Y on a single qubit: z = x = 1.
        let s = parse_pauli_stabilizer("Y").unwrap();
        let (g, q) = stabilizer_to_graph(&s).unwrap();
        assert_eq!(g, Graph::empty(1));
        assert_eq!(q.classes(), vec![SingleQubitClass::S]);
    }

    #[test]
    fn pauli_parsing() {
        let k2 = parse_pauli_stabilizer("XZ\nZX\n").unwrap();
        assert!(k2.same_space(&graph_generator(&Graph::complete(2))));
        assert_eq!(k2, graph_generator(&Graph::complete(2)));

        let signed = parse_pauli_stabilizer("# comment\n+XZ\n-ZX\n").unwrap();
        assert_eq!(signed, k2);

        assert_eq!(
            parse_pauli_stabilizer("XX\nXX\n"),
            Err(Error::RankDeficient { lines: vec![2] })
        );
        assert_eq!(
            parse_pauli_stabilizer("XI\nZI\n"),
            Err(Error::NonCommuting { first: 1, second: 2 })
        );
        assert!(matches!(
            parse_pauli_stabilizer("XZ\nZXI\n"),
            Err(Error::PauliLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_pauli_stabilizer("XZ\nZQ\n"),
            Err(Error::PauliLine { line: 2, .. })
        ));
        assert_eq!(
            parse_pauli_stabilizer("XZ\n"),
            Err(Error::GeneratorCount { expected: 2, found: 1 })
        );
        assert!(parse_pauli_stabilizer("").is_err());
    }
}

//! Local Clifford equivalence of graph states.
//!
//! For adjacency matrices `theta` and `theta'`, a local Clifford `Q` maps one
//! graph state onto the other exactly when `(Q S)^T P S' = 0` with
//! `S = [theta; I]` and `S' = [theta'; I]`. Entry `(j, k)` of that product is
//!
//! ```text
//! sum_i theta_ij theta'_ik c_i + theta_jk a_k + theta'_jk d_j + delta_jk b_j = 0
//! ```
//!
//! which is linear in the `4n` unknowns. Unknowns are laid out as
//! `[a_0..a_n | b_0..b_n | c_0..c_n | d_0..d_n]`. A solution is admissible when
//! every qubit has `a_i d_i + b_i c_i = 1`.
//!
//! On a connected component whose solution space has dimension above four,
//! some admissible vector exists iff one is found among the single basis
//! vectors and the sums of two basis vectors. Small spaces are enumerated in
//! full. Components are handled separately since local complementation never
//! moves a vertex to another component.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{BitVector, StreamingEliminator};
use crate::graph::Graph;
use crate::symplectic::{
    graph_generator, symplectic_gram, LocalCliffordOp, QubitMatrix,
};

/// Largest solution-space dimension enumerated in full.
pub const FULL_ENUMERATION_MAX_DIM: usize = 4;

/// Exhaustive enumeration refuses spaces larger than this.
pub const EXHAUSTIVE_LIMIT_DIM: usize = 24;

/// Basis of the solutions of the linear system for one pair of graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    pub n: usize,
    pub basis: Vec<BitVector>,
}

impl SolutionSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn combination(&self, mask: u64) -> BitVector {
        let mut v = BitVector::zeros(4 * self.n);
        for (k, b) in self.basis.iter().enumerate() {
            if mask >> k & 1 == 1 {
                v.xor_assign(b);
            }
        }
        v
    }
}

/// Which part of the search produced an admissible vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SearchPath {
    /// Single-vertex component, identity used directly.
    Isolated,
    /// All `2^dim` elements enumerated (dim <= 4).
    FullEnumeration,
    /// A single basis vector.
    Singles,
    /// A sum of two distinct basis vectors.
    PairwiseSums,
}

impl SearchPath {
    pub fn name(self) -> &'static str {
        match self {
            Self::Isolated => "isolated",
            Self::FullEnumeration => "full_enumeration",
            Self::Singles => "singles",
            Self::PairwiseSums => "pairwise_sums",
        }
    }
}

/// Coefficients of equation `(j, k)`. The right-hand side is always zero.
pub fn system_row(theta: &Graph, theta_prime: &Graph, j: usize, k: usize) -> BitVector {
    let n = theta.n();
    debug_assert_eq!(n, theta_prime.n());
    let mut row = BitVector::zeros(4 * n);
    // c_i for every i adjacent to j in theta and to k in theta'
    let common = theta.neighbors(j).and(theta_prime.neighbors(k));
    for i in common.ones() {
        row.set(2 * n + i, true);
    }
    if theta.has_edge(j, k) {
        row.set(k, true);
    }
    if theta_prime.has_edge(j, k) {
        row.set(3 * n + j, true);
    }
    if j == k {
        row.set(n + j, true);
    }
    row
}

/// Solves the `n^2 x 4n` system by streaming its rows, in row-major `(j, k)`
/// order, through an eliminator.
pub fn solve_system(theta: &Graph, theta_prime: &Graph) -> Result<SolutionSpace> {
    let n = theta.n();
    if n != theta_prime.n() {
        return Err(Error::DimensionMismatch(format!(
            "graphs on {n} and {} vertices",
            theta_prime.n()
        )));
    }
    let mut elim = StreamingEliminator::new(4 * n);
    'rows: for j in 0..n {
        for k in 0..n {
            elim.feed(system_row(theta, theta_prime, j, k))?;
            if elim.rank() == 4 * n {
                break 'rows;
            }
        }
    }
    Ok(SolutionSpace {
        n,
        basis: elim.null_space(),
    })
}

/// `a_i d_i + b_i c_i = 1` for every qubit.
pub fn is_admissible(v: &BitVector) -> bool {
    if !v.len().is_multiple_of(4) {
        return false;
    }
    let n = v.len() / 4;
    (0..n).all(|i| (v.get(i) & v.get(3 * n + i)) ^ (v.get(n + i) & v.get(2 * n + i)))
}

/// Every element of the space in mask order, first admissible one returned.
pub fn find_admissible_exhaustive(space: &SolutionSpace) -> Result<Option<BitVector>> {
    let dim = space.dim();
    if dim > EXHAUSTIVE_LIMIT_DIM {
        return Err(Error::TooLarge {
            n: dim,
            max: EXHAUSTIVE_LIMIT_DIM,
        });
    }
    Ok((0u64..1 << dim)
        .map(|mask| space.combination(mask))
        .find(is_admissible))
}

/// Number of admissible elements of the space, by full enumeration.
pub fn count_admissible(space: &SolutionSpace) -> Result<usize> {
    let dim = space.dim();
    if dim > EXHAUSTIVE_LIMIT_DIM {
        return Err(Error::TooLarge {
            n: dim,
            max: EXHAUSTIVE_LIMIT_DIM,
        });
    }
    Ok((0u64..1 << dim)
        .filter(|&mask| is_admissible(&space.combination(mask)))
        .count())
}

/// Searches the space for an admissible vector.
///
/// Spaces of dimension at most four are enumerated in full. Larger spaces are
/// searched over the zero vector, each basis vector, then each sum `b_k + b_l`
/// with `k < l`, in that order.
pub fn find_admissible(space: &SolutionSpace) -> Option<(BitVector, SearchPath)> {
    let dim = space.dim();
    if dim <= FULL_ENUMERATION_MAX_DIM {
        return find_admissible_exhaustive(space)
            .expect("small spaces are always enumerable")
            .map(|v| (v, SearchPath::FullEnumeration));
    }
    let zero = BitVector::zeros(4 * space.n);
    if is_admissible(&zero) {
        return Some((zero, SearchPath::Singles));
    }
    if let Some(b) = space.basis.iter().find(|b| is_admissible(b)) {
        return Some((b.clone(), SearchPath::Singles));
    }
    for (k, bk) in space.basis.iter().enumerate() {
        for bl in &space.basis[k + 1..] {
            let v = bk.xor(bl);
            if is_admissible(&v) {
                return Some((v, SearchPath::PairwiseSums));
            }
        }
    }
    None
}

/// Reads the per-qubit quadruples out of an admissible solution vector.
pub fn assemble_witness(v: &BitVector) -> Result<LocalCliffordOp> {
    if !v.len().is_multiple_of(4) {
        return Err(Error::DimensionMismatch(format!(
            "solution vector of length {} is not a multiple of 4",
            v.len()
        )));
    }
    let n = v.len() / 4;
    LocalCliffordOp::new(
        (0..n)
            .map(|i| QubitMatrix::new(v.get(i), v.get(n + i), v.get(2 * n + i), v.get(3 * n + i)))
            .collect(),
    )
}

/// Why a candidate witness was rejected.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WitnessFailure {
    #[error("witness acts on {witness} qubits, graphs have {graphs} vertices")]
    Size { witness: usize, graphs: usize },
    #[error("qubit {qubit}: a d + b c = 0")]
    Determinant { qubit: usize },
    #[error("(Q S)^T P S' is nonzero")]
    NotOrthogonal,
    #[error("C theta + D is singular")]
    Singular,
    #[error("(A theta + B)(C theta + D)^-1 differs from the target graph")]
    GraphMismatch,
}

/// Checks that `q` maps the graph state of `theta` onto that of `theta_prime`.
///
/// Stages, in order: per-qubit determinants; `(Q S)^T P S' = 0`; and the
/// explicit basis change `R = (C theta + D)^-1` with `(A theta + B) R = theta'`.
pub fn verify_witness(
    theta: &Graph,
    theta_prime: &Graph,
    q: &LocalCliffordOp,
) -> std::result::Result<(), WitnessFailure> {
    let n = theta.n();
    if theta_prime.n() != n || q.n() != n {
        return Err(WitnessFailure::Size {
            witness: q.n(),
            graphs: n.max(theta_prime.n()),
        });
    }
    if let Some(qubit) = q.qubits().iter().position(|m| !m.determinant()) {
        return Err(WitnessFailure::Determinant { qubit });
    }

    let s = graph_generator(theta);
    let s_prime = graph_generator(theta_prime);
    let qs = q.apply_to_rows(s.matrix()).expect("sizes checked");
    if !symplectic_gram(&qs, s_prime.matrix())
        .expect("sizes checked")
        .is_zero()
    {
        return Err(WitnessFailure::NotOrthogonal);
    }

    let [a, b, c, d] = q.blocks();
    let adj = theta.adjacency();
    let top = a.mul(adj).and_then(|m| m.add(&b)).expect("square blocks");
    let bottom = c.mul(adj).and_then(|m| m.add(&d)).expect("square blocks");
    let r = bottom.invert().map_err(|_| WitnessFailure::Singular)?;
    if &top.mul(&r).expect("square blocks") != theta_prime.adjacency() {
        return Err(WitnessFailure::GraphMismatch);
    }
    Ok(())
}

/// An explicit local Clifford operation relating two graph states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub op: LocalCliffordOp,
    /// The most demanding search path used by any component.
    pub provenance: SearchPath,
}

/// Diagnostics for one connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentResult {
    pub vertices: Vec<usize>,
    pub dim_v: usize,
    /// `None` when no admissible vector exists.
    pub search_path: Option<SearchPath>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inequivalence {
    OrderMismatch { left: usize, right: usize },
    ComponentMismatch,
    /// Index into [`Verdict::components`].
    NoAdmissibleSolution { component: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub equivalent: bool,
    pub witness: Option<Witness>,
    pub components: Vec<ComponentResult>,
    pub reason: Option<Inequivalence>,
}

impl Verdict {
    fn not_equivalent(reason: Inequivalence, components: Vec<ComponentResult>) -> Self {
        Self {
            equivalent: false,
            witness: None,
            components,
            reason: Some(reason),
        }
    }
}

struct ComponentOutcome {
    result: ComponentResult,
    quads: Option<LocalCliffordOp>,
}

fn solve_component(g: &Graph, h: &Graph, vertices: &[usize]) -> Result<ComponentOutcome> {
    if vertices.len() == 1 {
        return Ok(ComponentOutcome {
            result: ComponentResult {
                vertices: vertices.to_vec(),
                dim_v: 3,
                search_path: Some(SearchPath::Isolated),
            },
            quads: Some(LocalCliffordOp::identity(1)),
        });
    }
    let sub_g = g.induced_subgraph(vertices)?;
    let sub_h = h.induced_subgraph(vertices)?;
    let space = solve_system(&sub_g, &sub_h)?;
    let found = find_admissible(&space);
    let quads = found.as_ref().map(|(v, _)| assemble_witness(v)).transpose()?;
    Ok(ComponentOutcome {
        result: ComponentResult {
            vertices: vertices.to_vec(),
            dim_v: space.dim(),
            search_path: found.map(|(_, p)| p),
        },
        quads,
    })
}

/// Decides whether the graph states of `g` and `h` are local Clifford
/// equivalent, producing a verified witness when they are.
///
/// Graphs of different order are reported as not equivalent. An empty graph
/// (zero vertices) is an error. A witness that fails verification is reported
/// as [`Error::Internal`], never as a negative verdict.
pub fn check_equivalence(g: &Graph, h: &Graph) -> Result<Verdict> {
    if g.n() == 0 || h.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() != h.n() {
        return Ok(Verdict::not_equivalent(
            Inequivalence::OrderMismatch {
                left: g.n(),
                right: h.n(),
            },
            Vec::new(),
        ));
    }
    let partition = g.connected_components();
    if partition != h.connected_components() {
        return Ok(Verdict::not_equivalent(Inequivalence::ComponentMismatch, Vec::new()));
    }

    let outcomes: Vec<ComponentOutcome> = partition
        .blocks
        .par_iter()
        .map(|block| solve_component(g, h, block))
        .collect::<Result<_>>()?;

    let components: Vec<ComponentResult> = outcomes.iter().map(|o| o.result.clone()).collect();
    if let Some(component) = outcomes.iter().position(|o| o.quads.is_none()) {
        return Ok(Verdict::not_equivalent(
            Inequivalence::NoAdmissibleSolution { component },
            components,
        ));
    }

    let mut qubits = vec![QubitMatrix::IDENTITY; g.n()];
    for o in &outcomes {
        let quads = o.quads.as_ref().expect("checked above");
        for (local, &global) in o.result.vertices.iter().enumerate() {
            qubits[global] = quads.qubit(local);
        }
    }
    let op = LocalCliffordOp::new(qubits)?;
    verify_witness(g, h, &op).map_err(|e| Error::Internal(format!("assembled witness rejected: {e}")))?;
    let provenance = components
        .iter()
        .filter_map(|c| c.search_path)
        .max()
        .unwrap_or(SearchPath::Isolated);
    Ok(Verdict {
        equivalent: true,
        witness: Some(Witness { op, provenance }),
        components,
        reason: None,
    })
}

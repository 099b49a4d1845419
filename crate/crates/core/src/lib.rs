//! Local Clifford equivalence of graph states.
//!
//! Decides in polynomial time whether two graph states are related by a
//! local Clifford operation and produces an explicit witness when they are.
//! Also provides local complementation, reduction of stabilizer states to
//! graph states, and a brute-force orbit explorer for cross-checking.

pub mod error;
pub mod formats;
pub mod gf2;
pub mod graph;
pub mod lc_equiv;
pub mod oracle;
pub mod symplectic;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector, StreamingEliminator};
pub use graph::{Graph, VertexPartition};
pub use lc_equiv::{check_equivalence, verify_witness, SearchPath, Verdict, Witness};
pub use oracle::{oracle_equivalent, orbit_bfs, OracleAnswer, Orbit};
pub use symplectic::{
    apply_local_clifford, graph_generator, parse_pauli_stabilizer, stabilizer_to_graph,
    GeneratorMatrix, LocalCliffordOp, QubitMatrix, SingleQubitClass,
};

//! Text formats for graphs.

pub mod edge_list;
pub mod graph6;

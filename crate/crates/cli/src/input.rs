use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use lc_equiv_core::formats::{edge_list, graph6};
use lc_equiv_core::{Error, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Graph6,
    Edges,
}

impl GraphFormat {
    fn from_extension(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Some(Self::Graph6),
            "edges" | "el" | "txt" => Some(Self::Edges),
            _ => None,
        }
    }

    /// Content sniffing for unknown extensions: a first data line made of two
    /// integers is an edge-list header.
    fn sniff(text: &str) -> Self {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.split_whitespace().count() == 2
                && l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) =>
            {
                Self::Edges
            }
            _ => Self::Graph6,
        }
    }

    pub fn encode(self, g: &Graph) -> String {
        match self {
            Self::Graph6 => format!("{}\n", g.to_graph6()),
            Self::Edges => edge_list::encode(g),
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("{}: cannot read file", path.display()))
}

fn decode_graph6_file(path: &Path, text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    let Some((idx, line)) = lines.next() else {
        bail!("{}: no graph6 data", path.display());
    };
    if let Some((extra, _)) = lines.next() {
        bail!("{}:{}: expected a single graph, found another line", path.display(), extra + 1);
    }
    graph6::decode(line).map_err(|e| match e {
        Error::Graph6 { offset, reason } => anyhow::anyhow!(
            "{}:{}: graph6 parse error at byte {offset}: {reason}",
            path.display(),
            idx + 1
        ),
        other => other.into(),
    })
}

pub fn read_graph(path: &Path, format: Option<GraphFormat>) -> Result<(Graph, GraphFormat)> {
    let text = read_text(path)?;
    let format = format
        .or_else(|| GraphFormat::from_extension(path))
        .unwrap_or_else(|| GraphFormat::sniff(&text));
    let graph = match format {
        GraphFormat::Graph6 => decode_graph6_file(path, &text)?,
        GraphFormat::Edges => edge_list::decode(&text).map_err(|e| match e {
            Error::EdgeList { line, reason } => {
                anyhow::anyhow!("{}:{line}: edge list parse error: {reason}", path.display())
            }
            other => other.into(),
        })?,
    };
    Ok((graph, format))
}

pub fn read_stabilizer(path: &Path) -> Result<lc_equiv_core::GeneratorMatrix> {
    let text = read_text(path)?;
    lc_equiv_core::parse_pauli_stabilizer(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
}

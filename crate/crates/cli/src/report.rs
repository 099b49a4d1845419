//! JSON witness reports, schema `lc-witness/1`.

use anyhow::{bail, Result};
use lc_equiv_core::lc_equiv::{Inequivalence, Verdict};
use lc_equiv_core::{LocalCliffordOp, QubitMatrix};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "lc-witness/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Equivalent,
    NotEquivalent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QubitEntry {
    pub index: usize,
    /// `[a, b, c, d]`
    pub quadruple: [u8; 4],
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentEntry {
    pub vertices: Vec<usize>,
    pub dim_v: usize,
    pub search_path: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub schema: String,
    pub verdict: VerdictKind,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qubits: Option<Vec<QubitEntry>>,
    pub components: Vec<ComponentEntry>,
    pub timing_ms: f64,
}

pub fn qubit_entries(op: &LocalCliffordOp) -> Vec<QubitEntry> {
    op.qubits()
        .iter()
        .zip(op.classes())
        .enumerate()
        .map(|(index, (q, class))| QubitEntry {
            index,
            quadruple: q.to_array(),
            class: class.name().to_string(),
        })
        .collect()
}

pub fn describe_reason(reason: &Inequivalence) -> String {
    match reason {
        Inequivalence::OrderMismatch { left, right } => {
            format!("graphs have different orders ({left} vs {right})")
        }
        Inequivalence::ComponentMismatch => "connected components differ".into(),
        Inequivalence::NoAdmissibleSolution { component } => {
            format!("no admissible local Clifford on component {component}")
        }
    }
}

impl WitnessReport {
    pub fn from_verdict(n: usize, verdict: &Verdict, timing_ms: f64) -> Self {
        Self {
            schema: SCHEMA.into(),
            verdict: if verdict.equivalent {
                VerdictKind::Equivalent
            } else {
                VerdictKind::NotEquivalent
            },
            n,
            reason: verdict.reason.as_ref().map(describe_reason),
            provenance: verdict.witness.as_ref().map(|w| w.provenance.name().into()),
            qubits: verdict.witness.as_ref().map(|w| qubit_entries(&w.op)),
            components: verdict
                .components
                .iter()
                .map(|c| ComponentEntry {
                    vertices: c.vertices.clone(),
                    dim_v: c.dim_v,
                    search_path: c.search_path.map(|p| p.name().into()),
                })
                .collect(),
            timing_ms,
        }
    }

    /// Rebuilds the local Clifford operation carried by an equivalent report.
    pub fn operation(&self) -> Result<LocalCliffordOp> {
        if self.schema != SCHEMA {
            bail!("unsupported schema '{}', expected '{SCHEMA}'", self.schema);
        }
        let Some(qubits) = &self.qubits else {
            bail!("report carries no witness");
        };
        let mut quads = vec![None; qubits.len()];
        for entry in qubits {
            if entry.quadruple.iter().any(|&b| b > 1) {
                bail!("qubit {}: quadruple entries must be 0 or 1", entry.index);
            }
            match quads.get_mut(entry.index) {
                Some(slot @ None) => *slot = Some(QubitMatrix::from_array(entry.quadruple)),
                Some(Some(_)) => bail!("qubit {} listed twice", entry.index),
                None => bail!("qubit index {} out of range", entry.index),
            }
        }
        let quads: Vec<QubitMatrix> = quads.into_iter().map(|q| q.expect("all indices filled")).collect();
        Ok(LocalCliffordOp::new(quads)?)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match self.verdict {
            VerdictKind::Equivalent => out.push_str("equivalent\n"),
            VerdictKind::NotEquivalent => out.push_str(&format!(
                "not equivalent: {}\n",
                self.reason.as_deref().unwrap_or("unknown")
            )),
        }
        if let Some(qubits) = &self.qubits {
            for q in qubits {
                let [a, b, c, d] = q.quadruple;
                out.push_str(&format!("qubit {}: [{a} {b} {c} {d}] {}\n", q.index, q.class));
            }
        }
        for (k, c) in self.components.iter().enumerate() {
            out.push_str(&format!(
                "component {k}: vertices {:?}, dim V = {}, search = {}\n",
                c.vertices,
                c.dim_v,
                c.search_path.as_deref().unwrap_or("none")
            ));
        }
        out.push_str(&format!("time: {:.3} ms\n", self.timing_ms));
        out
    }
}

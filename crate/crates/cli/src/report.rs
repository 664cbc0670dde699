use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use wordrep::{OrderingCertificate, ShortcutWitness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Representable,
    NotRepresentable,
    CapExceeded,
}

#[derive(Debug, Clone, Serialize)]
pub struct Partition {
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    #[serde(rename = "Y")]
    pub y: Vec<usize>,
}

/// Outcome of `recognize` on one input.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub instance: String,
    pub vertices: usize,
    pub edges: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<OrderingCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub representation_number: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ShortcutWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub timings_ms: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn new(instance: String, vertices: usize, edges: usize) -> Self {
        RunReport {
            instance,
            vertices,
            edges,
            verdict: Verdict::NotRepresentable,
            partition: None,
            certificate: None,
            word: None,
            representation_number: None,
            oracle_nodes: None,
            witness: None,
            note: None,
            timings_ms: BTreeMap::new(),
        }
    }

    /// Runs `f`, recording its wall time under `phase`.
    pub fn timed<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings_ms
            .insert(phase.to_string(), start.elapsed().as_secs_f64() * 1e3);
        out
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "instance: {}\nvertices: {}, edges: {}\nverdict: {}\n",
            self.instance,
            self.vertices,
            self.edges,
            match self.verdict {
                Verdict::Representable => "representable",
                Verdict::NotRepresentable => "not representable",
                Verdict::CapExceeded => "cap exceeded",
            }
        );
        if let Some(p) = &self.partition {
            out += &format!("partition: X = {:?}, Y = {:?}\n", p.x, p.y);
        }
        if let Some(c) = &self.certificate {
            out += &format!("labeling: {:?}\n", c.y_labeling);
            let classes: Vec<String> = c.entries().map(|(v, cl)| format!("{v}:{cl}")).collect();
            out += &format!("x order: {}\n", classes.join(" "));
        }
        if let Some(w) = &self.word {
            out += &format!("word: {w}\n");
        }
        if let Some(k) = self.representation_number {
            out += &format!("representation number: {k}\n");
        }
        if let Some(n) = self.oracle_nodes {
            out += &format!("oracle nodes: {n}\n");
        }
        if let Some(note) = &self.note {
            out += &format!("note: {note}\n");
        }
        let times: Vec<String> = self
            .timings_ms
            .iter()
            .map(|(k, v)| format!("{k} {v:.3} ms"))
            .collect();
        out += &format!("timings: {}\n", times.join(", "));
        out
    }
}

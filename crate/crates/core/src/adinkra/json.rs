use serde::{Deserialize, Serialize};

use super::{Adinkra, ColoredGraph, Edge};
use crate::codes::BitVector;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub u: usize,
    pub v: usize,
    /// 1-based.
    pub color: usize,
    pub sign: i8,
}

/// On-disk form of an Adinkra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdinkraDoc {
    pub n_colors: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
}

impl From<&Adinkra> for AdinkraDoc {
    fn from(a: &Adinkra) -> Self {
        AdinkraDoc {
            n_colors: a.n_colors(),
            vertices: a.graph().labels().iter().map(ToString::to_string).collect(),
            edges: a
                .graph()
                .edges()
                .iter()
                .zip(a.signs())
                .map(|(e, &sign)| EdgeDoc { u: e.u, v: e.v, color: e.color + 1, sign })
                .collect(),
        }
    }
}

impl AdinkraDoc {
    /// Rebuilds the Adinkra without checking the Adinkra conditions.
    pub fn to_adinkra_unchecked(&self) -> Result<Adinkra> {
        let labels = self.vertices.iter().map(|s| s.parse()).collect::<Result<Vec<BitVector>>>()?;
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            if e.color == 0 {
                return Err(Error::Parse(format!("edge {i}: colors are numbered from 1")));
            }
            edges.push(Edge { u: e.u, v: e.v, color: e.color - 1 });
        }
        let graph = ColoredGraph::new(self.n_colors, labels, edges)?;
        Adinkra::new(graph, self.edges.iter().map(|e| e.sign).collect())
    }

    pub fn to_adinkra(&self) -> Result<Adinkra> {
        let a = self.to_adinkra_unchecked()?;
        let report = a.validate();
        if !report.is_clean() {
            return Err(Error::Invalid(report));
        }
        Ok(a)
    }
}

impl Adinkra {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AdinkraDoc::from(self)).expect("plain data serializes")
    }

    /// Parses and validates an Adinkra JSON document.
    pub fn from_json(text: &str) -> Result<Adinkra> {
        let doc: AdinkraDoc = serde_json::from_str(text)?;
        doc.to_adinkra()
    }
}

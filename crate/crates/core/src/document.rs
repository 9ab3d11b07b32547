//! JSON documents emitted for sphericity verdicts.

use serde::{Deserialize, Serialize};

use crate::basegraph::{enumerate_bases, singular_graph, BaseGraph};
use crate::catalog::{build_pair, PairSpec};
use crate::error::{Error, Result};
use crate::scalar::Weight;
use crate::sphericity::SphericityVerdict;
use crate::system::Base;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A verdict together with everything needed to reproduce it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub pair: String,
    pub spec: PairSpec,
    pub base: Base,
    pub weight: Weight,
    /// `spherical`, `not_spherical` or `undetermined`.
    pub verdict: String,
    pub detail: SphericityVerdict,
    pub tool_version: String,
}

impl VerdictDocument {
    pub fn new(spec: &PairSpec, base: &Base, weight: &Weight, verdict: SphericityVerdict) -> Self {
        VerdictDocument {
            pair: spec.family_id().to_string(),
            spec: spec.clone(),
            base: base.clone(),
            weight: weight.clone(),
            verdict: verdict.tag().to_string(),
            detail: verdict,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Process exit code for the verdict: 0, 1 or 2.
    pub fn exit_code(&self) -> i32 {
        match self.detail {
            SphericityVerdict::Spherical { .. } => 0,
            SphericityVerdict::NotSpherical { .. } => 1,
            SphericityVerdict::Undetermined { .. } => 2,
        }
    }
}

/// A singular equivalence class of bases and its principal roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub members: Vec<usize>,
    pub principal_roots: Vec<Weight>,
}

/// The base graph of a pair, as emitted by the command line tool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub pair: String,
    pub spec: PairSpec,
    pub singular_only: bool,
    pub connected: bool,
    pub graph: BaseGraph,
    pub classes: Vec<ClassSummary>,
    pub tool_version: String,
}

impl GraphDocument {
    /// Explores from `seed`, or from the default base when `seed` is `None`.
    pub fn build(spec: &PairSpec, seed: Option<&Base>, singular_only: bool) -> Result<Self> {
        let entry = build_pair(spec)?;
        let seed = match seed {
            Some(b) => entry.system.validate_base(b.simples())?,
            None => entry.default_base.clone(),
        };
        let graph = if singular_only {
            singular_graph(&entry.system, &seed)?
        } else {
            enumerate_bases(&entry.system, &seed)?
        };
        let classes = graph
            .singular_classes()
            .into_iter()
            .map(|members| {
                let mut principal_roots = entry.system.principal_roots(&graph.nodes[members[0]]);
                principal_roots.sort();
                ClassSummary {
                    members,
                    principal_roots,
                }
            })
            .collect();
        Ok(GraphDocument {
            pair: spec.family_id().to_string(),
            spec: spec.clone(),
            singular_only,
            connected: graph.is_connected(),
            graph,
            classes,
            tool_version: TOOL_VERSION.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

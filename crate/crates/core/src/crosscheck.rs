//! Comparison of the decision procedure against the closed-form oracles
//! over a box of integer weights.

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{build_pair, PairSpec};
use crate::error::Result;
use crate::scalar::Weight;
use crate::sphericity::{signed_box_len, signed_box_nth, SphericityContext, SphericityVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub weight: Weight,
    /// Verdict tag from the decision procedure.
    pub procedure: String,
    pub oracle: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub pair: String,
    pub spec: PairSpec,
    pub max_coeff: i64,
    pub checked: usize,
    pub spherical: usize,
    pub undetermined: usize,
    pub disagreements: Vec<Disagreement>,
}

impl CrosscheckReport {
    pub fn clean(&self) -> bool {
        self.undetermined == 0 && self.disagreements.is_empty()
    }
}

/// Compares `decide` on the default base with `oracle` for every integer
/// weight in `[-max_coeff, max_coeff]^dim`. Weights failing the principal-root
/// tests are decided without path search, so large boxes stay cheap.
pub fn crosscheck_with<F>(spec: &PairSpec, max_coeff: i64, oracle: F) -> Result<CrosscheckReport>
where
    F: Fn(&Weight) -> Result<bool> + Sync,
{
    let entry = build_pair(spec)?;
    let ctx = SphericityContext::new(&entry.system, &entry.default_base)?;
    let dim = entry.system.dim();
    let n = if max_coeff < 0 {
        0
    } else {
        signed_box_len(dim, -max_coeff, max_coeff)
    };
    let empty = || Tally::default();
    let tally = (0..n)
        .into_par_iter()
        .try_fold(empty, |mut t, i| -> Result<Tally> {
            let w = signed_box_nth(dim, -max_coeff, max_coeff, i);
            let o = oracle(&w)?;
            t.checked += 1;
            if !ctx.passes_necessary(&w) {
                if o {
                    let v = ctx.decide(&w)?;
                    t.disagreements.push((
                        i,
                        Disagreement {
                            weight: w,
                            procedure: v.tag().to_string(),
                            oracle: o,
                        },
                    ));
                }
                return Ok(t);
            }
            let v = ctx.decide(&w)?;
            let agree = match v {
                SphericityVerdict::Spherical { .. } => {
                    t.spherical += 1;
                    o
                }
                SphericityVerdict::Undetermined { .. } => {
                    t.undetermined += 1;
                    false
                }
                SphericityVerdict::NotSpherical { .. } => !o,
            };
            if !agree {
                t.disagreements.push((
                    i,
                    Disagreement {
                        weight: w,
                        procedure: v.tag().to_string(),
                        oracle: o,
                    },
                ));
            }
            Ok(t)
        })
        .try_reduce(empty, |mut a, b| {
            a.checked += b.checked;
            a.spherical += b.spherical;
            a.undetermined += b.undetermined;
            a.disagreements.extend(b.disagreements);
            Ok(a)
        })?;
    let mut disagreements = tally.disagreements;
    disagreements.sort_by_key(|(i, _)| *i);
    Ok(CrosscheckReport {
        pair: spec.family_id().to_string(),
        spec: spec.clone(),
        max_coeff,
        checked: tally.checked,
        spherical: tally.spherical,
        undetermined: tally.undetermined,
        disagreements: disagreements.into_iter().map(|(_, d)| d).collect(),
    })
}

#[derive(Default)]
struct Tally {
    checked: usize,
    spherical: usize,
    undetermined: usize,
    disagreements: Vec<(u64, Disagreement)>,
}

/// [`crosscheck_with`] against the standard oracle for the spec.
pub fn crosscheck(spec: &PairSpec, max_coeff: i64) -> Result<CrosscheckReport> {
    crosscheck_with(spec, max_coeff, |w| crate::closedform::oracle(spec, w))
}

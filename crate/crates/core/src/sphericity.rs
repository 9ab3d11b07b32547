//! Integrability tests and the decision procedure for spherical highest
//! weights.

use std::collections::HashMap;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basegraph::{enumerate_bases, minimal_exposing_paths};
use crate::error::{Error, Result};
use crate::reflections::{
    critical_integrability, reflect_step, singular_half_multiplicity, ReflectionStep,
    WeightTransportOutcome,
};
use crate::scalar::{frac, in_nonneg_multiple, int, Scalar, Weight};
use crate::system::{Base, RestrictedRootSystem};

/// Upper bound on the number of minimal paths tried per principal root.
pub const PATH_CAP: usize = 64;

/// `lambda(h_alpha) ∈ 2^eps(alpha) * 2 Z_{>=0}`.
pub fn rank_one_integrable(
    system: &RestrictedRootSystem,
    alpha: &Weight,
    lambda: &Weight,
) -> Result<bool> {
    if system.is_isotropic(alpha)? {
        return Err(Error::IsotropicRoot(alpha.clone()));
    }
    let v = system.coroot_eval(lambda, alpha)?;
    let modulus = if system.contains(&alpha.scale(int(2))) {
        4
    } else {
        2
    };
    Ok(in_nonneg_multiple(&v, modulus))
}

mod scalar_list {
    use crate::scalar::{format_scalar, parse_scalar, Scalar};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
        xs.iter()
            .map(format_scalar)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Scalar>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_scalar(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// The check made for one principal root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipalRootCheck {
    pub gamma: Weight,
    pub path: Vec<ReflectionStep>,
    pub exposed_simple: Weight,
    /// Half the coroot value of the transported weight at the exposed simple;
    /// two values when the last step was critical.
    #[serde(with = "scalar_list")]
    pub final_value: Vec<Scalar>,
    pub pass: bool,
}

/// Why a principal root could not be decided.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockingRecord {
    pub gamma: Weight,
    pub paths_tried: usize,
    /// Steps of the first blocked path, ending at the critical reflection.
    pub steps: Vec<ReflectionStep>,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SphericityVerdict {
    Spherical {
        certificate: Vec<PrincipalRootCheck>,
    },
    NotSpherical {
        witness: PrincipalRootCheck,
    },
    Undetermined {
        blocking: BlockingRecord,
    },
}

impl SphericityVerdict {
    pub fn tag(&self) -> &'static str {
        match self {
            SphericityVerdict::Spherical { .. } => "spherical",
            SphericityVerdict::NotSpherical { .. } => "not_spherical",
            SphericityVerdict::Undetermined { .. } => "undetermined",
        }
    }

    pub fn is_spherical(&self) -> bool {
        matches!(self, SphericityVerdict::Spherical { .. })
    }
}

enum RouteResult {
    Done(PrincipalRootCheck),
    Blocked(Vec<ReflectionStep>, String),
}

/// `lambda(h_gamma) = sum f_i lambda_i` for one principal root, with the
/// functional also kept over a common denominator for integer weights.
#[derive(Clone, Debug)]
struct RankOneTest {
    f: Vec<Scalar>,
    num: Vec<i64>,
    den: i64,
    modulus: i64,
}

impl RankOneTest {
    fn new(f: Vec<Scalar>, modulus: i64) -> Self {
        let den = f.iter().fold(1i64, |d, x| num_integer::lcm(d, *x.denom()));
        let num = f.iter().map(|x| x.numer() * (den / x.denom())).collect();
        RankOneTest {
            f,
            num,
            den,
            modulus,
        }
    }

    fn passes(&self, lambda: &Weight) -> bool {
        let c = lambda.coords();
        if c.iter().all(|x| x.is_integer()) {
            let s: i64 = self.num.iter().zip(c).map(|(a, b)| a * b.numer()).sum();
            return s >= 0 && s % (self.den * self.modulus) == 0;
        }
        let v: Scalar = self.f.iter().zip(c).map(|(a, b)| a * b).sum();
        in_nonneg_multiple(&v, self.modulus)
    }
}

/// Precomputed principal roots and exposing paths for one base, reusable
/// across many weights.
#[derive(Clone, Debug)]
pub struct SphericityContext<'a> {
    system: &'a RestrictedRootSystem,
    base: Base,
    principal: Vec<Weight>,
    tests: Vec<RankOneTest>,
    routes: Vec<Vec<Vec<Weight>>>,
}

impl<'a> SphericityContext<'a> {
    pub fn new(system: &'a RestrictedRootSystem, base: &Base) -> Result<Self> {
        let base = system.validate_base(base.simples())?;
        let principal = system.principal_roots(&base);
        let routes = principal
            .iter()
            .map(|g| minimal_exposing_paths(system, &base, g, PATH_CAP))
            .collect::<Result<Vec<_>>>()?;
        let dim = system.dim();
        let tests = principal
            .iter()
            .map(|g| {
                rank_one_integrable(system, g, &Weight::zero(dim))?;
                let f = (0..dim)
                    .map(|i| system.coroot_eval(&Weight::unit(dim, i, int(1)), g))
                    .collect::<Result<Vec<_>>>()?;
                let modulus = if system.contains(&g.scale(int(2))) {
                    4
                } else {
                    2
                };
                Ok(RankOneTest::new(f, modulus))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SphericityContext {
            system,
            base,
            principal,
            tests,
            routes,
        })
    }

    pub fn principal_roots(&self) -> &[Weight] {
        &self.principal
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    /// True when every principal root is already exposed in the base.
    pub fn principal_in_base(&self) -> bool {
        self.principal
            .iter()
            .all(|g| self.base.exposed_form(g).is_some())
    }

    /// Paths used for the principal root at `index`.
    pub fn routes(&self, index: usize) -> &[Vec<Weight>] {
        &self.routes[index]
    }

    fn half_value(&self, lambda: &Weight, simple: &Weight) -> Result<Scalar> {
        Ok(self.system.coroot_eval(lambda, simple)? * frac(1, 2))
    }

    /// True when `lambda` passes the rank-one test at every principal root.
    pub fn passes_necessary(&self, lambda: &Weight) -> bool {
        lambda.dim() == self.system.dim() && self.tests.iter().all(|t| t.passes(lambda))
    }

    /// The first principal root at which `lambda` fails the rank-one test.
    pub fn necessary_failure(&self, lambda: &Weight) -> Result<Option<PrincipalRootCheck>> {
        if lambda.dim() != self.system.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.system.dim(),
                got: lambda.dim(),
            });
        }
        for (g, t) in self.principal.iter().zip(&self.tests) {
            if !t.passes(lambda) {
                return Ok(Some(PrincipalRootCheck {
                    gamma: g.clone(),
                    path: Vec::new(),
                    exposed_simple: g.clone(),
                    final_value: vec![self.half_value(lambda, g)?],
                    pass: false,
                }));
            }
        }
        Ok(None)
    }

    fn run_route(&self, gamma: &Weight, path: &[Weight], lambda: &Weight) -> Result<RouteResult> {
        let mut base = self.base.clone();
        let mut cur = lambda.clone();
        let mut steps: Vec<ReflectionStep> = Vec::with_capacity(path.len());
        for (i, alpha) in path.iter().enumerate() {
            let step = reflect_step(self.system, &base, alpha, Some(&cur))?;
            let effect = step.weight_effect.clone().expect("weight given");
            base = step.to_base.clone();
            steps.push(step);
            match effect {
                WeightTransportOutcome::Critical { k, companion } => {
                    if i + 1 == path.len() {
                        let e = base.exposed_form(gamma).expect("path ends exposing gamma");
                        let n = singular_half_multiplicity(self.system, alpha)? as i64;
                        let far = cur.add_scaled(int(-2 * n), alpha);
                        let pass = critical_integrability(self.system, alpha, &cur, &e)?;
                        return Ok(RouteResult::Done(PrincipalRootCheck {
                            gamma: gamma.clone(),
                            path: steps,
                            final_value: vec![
                                self.half_value(&cur, &e)?,
                                self.half_value(&far, &e)?,
                            ],
                            exposed_simple: e,
                            pass,
                        }));
                    }
                    // The module contains a highest weight submodule of
                    // weight `companion` for the current base, which must
                    // itself pass the principal-root tests.
                    if let Some(fail) = self.necessary_failure(&companion)? {
                        return Ok(RouteResult::Done(PrincipalRootCheck {
                            gamma: gamma.clone(),
                            path: steps,
                            exposed_simple: fail.exposed_simple,
                            final_value: fail.final_value,
                            pass: false,
                        }));
                    }
                    return Ok(RouteResult::Blocked(
                        steps,
                        format!("weight is {alpha}-critical (k = {k}) before the last reflection"),
                    ));
                }
                other => cur = other.image(&cur).expect("non-critical"),
            }
        }
        let e = base.exposed_form(gamma).expect("path ends exposing gamma");
        let pass = rank_one_integrable(self.system, &e, &cur)?;
        Ok(RouteResult::Done(PrincipalRootCheck {
            gamma: gamma.clone(),
            path: steps,
            final_value: vec![self.half_value(&cur, &e)?],
            exposed_simple: e,
            pass,
        }))
    }

    /// Decides whether `lambda` is spherical for the base of this context.
    pub fn decide(&self, lambda: &Weight) -> Result<SphericityVerdict> {
        if lambda.dim() != self.system.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.system.dim(),
                got: lambda.dim(),
            });
        }
        if let Some(witness) = self.necessary_failure(lambda)? {
            return Ok(SphericityVerdict::NotSpherical { witness });
        }
        let mut certificate = Vec::with_capacity(self.principal.len());
        let mut blocked: Option<BlockingRecord> = None;
        for (gamma, routes) in self.principal.iter().zip(&self.routes) {
            let mut first_block: Option<(Vec<ReflectionStep>, String)> = None;
            let mut done = None;
            for path in routes {
                match self.run_route(gamma, path, lambda)? {
                    RouteResult::Done(check) => {
                        done = Some(check);
                        break;
                    }
                    RouteResult::Blocked(steps, why) => {
                        first_block.get_or_insert((steps, why));
                    }
                }
            }
            match done {
                Some(check) if !check.pass => {
                    return Ok(SphericityVerdict::NotSpherical { witness: check })
                }
                Some(check) => certificate.push(check),
                None => {
                    let (steps, description) = first_block.expect("at least one route");
                    blocked.get_or_insert(BlockingRecord {
                        gamma: gamma.clone(),
                        paths_tried: routes.len(),
                        steps,
                        description,
                    });
                }
            }
        }
        Ok(match blocked {
            Some(blocking) => SphericityVerdict::Undetermined { blocking },
            None => SphericityVerdict::Spherical { certificate },
        })
    }

    /// Decides a batch of weights in parallel; results keep input order.
    pub fn decide_all(&self, weights: &[Weight]) -> Result<Vec<SphericityVerdict>> {
        weights.par_iter().map(|w| self.decide(w)).collect()
    }
}

/// Rank-one tests at every principal root of `base`.
pub fn necessary_conditions(
    system: &RestrictedRootSystem,
    base: &Base,
    lambda: &Weight,
) -> Result<bool> {
    let base = system.validate_base(base.simples())?;
    for g in system.principal_roots(&base) {
        if !rank_one_integrable(system, &g, lambda)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn decide_spherical(
    system: &RestrictedRootSystem,
    base: &Base,
    lambda: &Weight,
) -> Result<SphericityVerdict> {
    SphericityContext::new(system, base)?.decide(lambda)
}

/// For spherical `lambda` and `mu`, whether `lambda + mu` is again spherical.
pub fn monoid_sum_check(ctx: &SphericityContext<'_>, lambda: &Weight, mu: &Weight) -> Result<bool> {
    Ok(ctx.decide(&(lambda + mu))?.is_spherical())
}

/// `m(beta) = -sdim(g_beta)/2 - sdim(g_{2 beta})`, if the multiplicities are
/// recorded exactly.
fn conjectural_m(system: &RestrictedRootSystem, beta: &Weight) -> Option<Scalar> {
    let r = system.root(beta)?;
    let d = system.root(&beta.scale(int(2)));
    if !r.mult.exact || d.is_some_and(|d| !d.mult.exact) {
        return None;
    }
    let sd2 = d.map_or(0, |d| d.mult.sdim());
    Some(-frac(r.mult.sdim(), 2) - int(sd2))
}

/// CONJECTURAL simplicity test: on every base reachable from `base`, every
/// non-isotropic simple `beta` with `m(beta) ∈ Z_{>=0}` must have the
/// transported `lambda(h_beta)/2` outside `{m+1, ..., 2m}`. Roots whose
/// multiplicities are not recorded exactly are skipped.
pub fn conjectural_simplicity(
    system: &RestrictedRootSystem,
    base: &Base,
    lambda: &Weight,
) -> Result<bool> {
    let graph = enumerate_bases(system, base)?;
    let mut weights: HashMap<usize, Weight> = HashMap::from([(0, lambda.clone())]);
    let mut order = vec![0usize];
    let mut i = 0;
    while i < order.len() {
        let node = order[i];
        let cur = weights[&node].clone();
        for e in graph.edges.iter().filter(|e| e.from == node) {
            if weights.contains_key(&e.to) {
                continue;
            }
            let step = reflect_step(system, &graph.nodes[node], &e.root, Some(&cur))?;
            let image = match step.weight_effect.expect("weight given") {
                WeightTransportOutcome::Critical { .. } => {
                    return Err(Error::NotFullyReflectable(format!(
                        "critical at {} in base {}",
                        e.root, graph.nodes[node]
                    )))
                }
                other => other.image(&cur).expect("non-critical"),
            };
            weights.insert(e.to, image);
            order.push(e.to);
        }
        i += 1;
    }
    for (idx, b) in graph.nodes.iter().enumerate() {
        let lam = &weights[&idx];
        for beta in b.simples() {
            if system.is_isotropic(beta)? {
                continue;
            }
            let Some(m) = conjectural_m(system, beta) else {
                continue;
            };
            if !m.is_integer() || m.is_negative() {
                continue;
            }
            let v = system.coroot_eval(lam, beta)? * frac(1, 2);
            if v > m && v <= m * int(2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Non-negative integer vectors with entries in `{0, step, 2 step, ..} <= max_coeff`.
pub fn box_weights(dim: usize, max_coeff: i64, step: i64) -> Vec<Weight> {
    let vals: Vec<Scalar> = (0..=max_coeff)
        .step_by(step.max(1) as usize)
        .map(int)
        .collect();
    let mut out = vec![Vec::<Scalar>::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                vals.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(*v);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

/// All weights with integer coordinates in `[lo, hi]^dim`, in lexicographic order.
pub fn signed_box(dim: usize, lo: i64, hi: i64) -> Vec<Weight> {
    (0..signed_box_len(dim, lo, hi))
        .map(|i| signed_box_nth(dim, lo, hi, i))
        .collect()
}

/// Number of points of `[lo, hi]^dim`.
pub fn signed_box_len(dim: usize, lo: i64, hi: i64) -> u64 {
    if hi < lo {
        return 0;
    }
    ((hi - lo + 1) as u64).pow(dim as u32)
}

/// The `index`-th point of [`signed_box`] without building the box.
pub fn signed_box_nth(dim: usize, lo: i64, hi: i64, mut index: u64) -> Weight {
    let side = (hi - lo + 1) as u64;
    let mut c = vec![int(0); dim];
    for slot in c.iter_mut().rev() {
        *slot = int(lo + (index % side) as i64);
        index /= side;
    }
    Weight(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_pair, PairSpec};

    fn w(xs: &[i64]) -> Weight {
        Weight::from_ints(xs)
    }

    #[test]
    fn rank_one_values() {
        // BC_{-1}(1,1): g = (1,0) has 2g a root, so eps = 1.
        let e = build_pair(&PairSpec::bc(int(-1), 1, 1)).unwrap();
        let s = &e.system;
        assert!(!rank_one_integrable(s, &w(&[1, 0]), &w(&[1, 0])).unwrap());
        assert!(rank_one_integrable(s, &w(&[1, 0]), &w(&[2, 0])).unwrap());
        assert!(rank_one_integrable(s, &w(&[2, 0]), &w(&[2, 0])).unwrap());
        assert!(rank_one_integrable(s, &w(&[1, 0]), &w(&[0, 0])).unwrap());
        assert!(matches!(
            rank_one_integrable(s, &w(&[1, 1]), &w(&[0, 0])),
            Err(Error::IsotropicRoot(_))
        ));
        // gl-osp: e1 - e2 has no double, eps = 0, value 2 passes.
        let e = build_pair(&PairSpec::GlOsp { m: 2, n: 1 }).unwrap();
        assert!(rank_one_integrable(&e.system, &w(&[1, -1, 0]), &w(&[2, 0, 0])).unwrap());
        assert!(!rank_one_integrable(&e.system, &w(&[1, -1, 0]), &w(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn necessary_examples() {
        let e = build_pair(&PairSpec::bc(int(-1), 1, 1)).unwrap();
        let (s, b) = (&e.system, &e.default_base);
        assert!(necessary_conditions(s, b, &w(&[0, 0])).unwrap());
        assert!(!necessary_conditions(s, b, &w(&[1, 0])).unwrap());
        assert!(necessary_conditions(s, b, &w(&[2, 2])).unwrap());
    }

    #[test]
    fn decide_examples() {
        let e = build_pair(&PairSpec::bc(int(-1), 1, 1)).unwrap();
        let (s, b) = (&e.system, &e.default_base);
        assert!(decide_spherical(s, b, &w(&[2, 2])).unwrap().is_spherical());
        assert_eq!(
            decide_spherical(s, b, &w(&[0, 2])).unwrap().tag(),
            "not_spherical"
        );
        let e = build_pair(&PairSpec::D21 { a: int(2) }).unwrap();
        let (s, b) = (&e.system, &e.default_base);
        // coordinates are (alpha, beta): 2 alpha = (2,0), 2 beta = (0,2)
        assert!(decide_spherical(s, b, &w(&[2, 0])).unwrap().is_spherical());
        assert_eq!(
            decide_spherical(s, b, &w(&[0, 2])).unwrap().tag(),
            "not_spherical"
        );
    }

    #[test]
    fn zero_is_spherical_everywhere() {
        for spec in crate::catalog::small_rank_specs() {
            let e = build_pair(&spec).unwrap();
            let v = decide_spherical(&e.system, &e.default_base, &Weight::zero(e.system.dim()))
                .unwrap();
            match v {
                SphericityVerdict::Spherical { certificate } => {
                    assert_eq!(
                        certificate.len(),
                        e.system.principal_roots(&e.default_base).len()
                    )
                }
                other => panic!("{spec}: {other:?}"),
            }
        }
    }

    #[test]
    fn conjecture_trivial_cases() {
        let e = build_pair(&PairSpec::bc(frac(-1, 2), 1, 1)).unwrap();
        assert!(conjectural_simplicity(&e.system, &e.default_base, &w(&[0, 0])).unwrap());
        let e = build_pair(&PairSpec::Ag12).unwrap();
        assert!(conjectural_simplicity(&e.system, &e.default_base, &w(&[2, 2])).unwrap());
    }

    #[test]
    fn conjecture_window_hit() {
        // alpha = g - n has m = (0|2): m(alpha) = 1, window {2}. lambda = (1,0)
        // gives lambda(h_alpha)/2 = 2a + b = 2.
        let e = build_pair(&PairSpec::bc(frac(-1, 2), 1, 1)).unwrap();
        let r = conjectural_simplicity(&e.system, &e.default_base, &w(&[1, 0]));
        assert!(matches!(r, Ok(false) | Err(Error::NotFullyReflectable(_))));
    }
}

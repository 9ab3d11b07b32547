//! Reflections of bases in simple roots and the transport of highest
//! weights across singular simple roots.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{frac, int, Scalar, Weight};
use crate::sphericity::rank_one_integrable;
use crate::system::{Base, RestrictedRootSystem};

/// Effect of a singular reflection on a highest weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WeightTransportOutcome {
    Reflected {
        weight: Weight,
    },
    Fixed,
    /// `lambda(h_alpha)/2 = n + k` with `1 <= k <= n`; the module contains the
    /// one of highest weight `companion = lambda - 2k alpha`.
    Critical {
        k: u32,
        companion: Weight,
    },
}

impl WeightTransportOutcome {
    /// The transported weight, or `None` for a critical outcome.
    pub fn image(&self, lambda: &Weight) -> Option<Weight> {
        match self {
            WeightTransportOutcome::Reflected { weight } => Some(weight.clone()),
            WeightTransportOutcome::Fixed => Some(lambda.clone()),
            WeightTransportOutcome::Critical { .. } => None,
        }
    }

    pub fn is_critical(&self) -> bool {
        matches!(self, WeightTransportOutcome::Critical { .. })
    }
}

/// One reflection of a base, optionally carrying a weight along.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionStep {
    pub root: Weight,
    pub singular: bool,
    pub from_base: Base,
    pub to_base: Base,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight_before: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub weight_effect: Option<WeightTransportOutcome>,
}

/// Largest `k >= 0` with `beta + k alpha` a root.
pub fn k_alpha_beta(system: &RestrictedRootSystem, alpha: &Weight, beta: &Weight) -> u32 {
    // Root strings have length at most 4 in any restricted root system.
    (0..=4u32)
        .filter(|&k| system.contains(&beta.add_scaled(int(k as i64), alpha)))
        .max()
        .unwrap_or(0)
}

/// `r_alpha Sigma`: `alpha` becomes `-alpha` in place, every other simple
/// `beta` becomes `beta + k_{alpha beta} alpha`.
pub fn reflect_base(system: &RestrictedRootSystem, base: &Base, alpha: &Weight) -> Result<Base> {
    if !base.contains(alpha) {
        return Err(Error::NotSimple(alpha.clone()));
    }
    let simples = base
        .simples()
        .iter()
        .map(|b| {
            if b == alpha {
                -alpha
            } else {
                b.add_scaled(int(k_alpha_beta(system, alpha, b) as i64), alpha)
            }
        })
        .collect();
    Ok(Base::from_unchecked(simples))
}

/// The Weyl reflection `lambda - lambda(h_alpha) alpha` in a regular root.
pub fn regular_reflect_weight(
    system: &RestrictedRootSystem,
    alpha: &Weight,
    lambda: &Weight,
) -> Result<Weight> {
    system.weyl_reflect(alpha, lambda)
}

fn require_singular(system: &RestrictedRootSystem, alpha: &Weight) -> Result<()> {
    if !system.is_singular(alpha)? {
        return Err(Error::RegularRootNotTransportable(alpha.clone()));
    }
    Ok(())
}

/// Transport across a singular isotropic simple root.
pub fn transport_weight_isotropic(
    system: &RestrictedRootSystem,
    alpha: &Weight,
    lambda: &Weight,
) -> Result<WeightTransportOutcome> {
    require_singular(system, alpha)?;
    if !system.is_isotropic(alpha)? {
        return Err(Error::Unsupported(format!("{alpha} is not isotropic")));
    }
    if system.pairing(lambda, alpha)?.is_zero() {
        Ok(WeightTransportOutcome::Fixed)
    } else {
        Ok(WeightTransportOutcome::Reflected {
            weight: lambda.add_scaled(int(-2), alpha),
        })
    }
}

/// Half the odd multiplicity of a singular non-isotropic root, `m_alpha = (0|2n)`.
pub fn singular_half_multiplicity(system: &RestrictedRootSystem, alpha: &Weight) -> Result<u32> {
    let r = system
        .root(alpha)
        .ok_or_else(|| Error::UnknownRoot(alpha.clone()))?;
    if r.mult.even != 0 || r.mult.odd == 0 || r.mult.odd % 2 != 0 {
        return Err(Error::UnclassifiablePattern(alpha.clone()));
    }
    if !r.mult.exact {
        return Err(Error::UnknownMultiplicity(alpha.clone()));
    }
    Ok(r.mult.odd / 2)
}

/// Transport across a singular non-isotropic simple root of multiplicity
/// `(0|2n)`, with `t = lambda(h_alpha)/2`:
/// `t ∈ {0..n-1}` reflects by `lambda(h_alpha) alpha`, `t ∈ {n+1..2n}` is
/// critical, everything else (including `t = n` and non-integral `t`)
/// shifts by `2n alpha`.
pub fn transport_weight_nonisotropic(
    system: &RestrictedRootSystem,
    alpha: &Weight,
    lambda: &Weight,
) -> Result<WeightTransportOutcome> {
    require_singular(system, alpha)?;
    if system.is_isotropic(alpha)? {
        return Err(Error::IsotropicRoot(alpha.clone()));
    }
    let n = singular_half_multiplicity(system, alpha)? as i64;
    let t: Scalar = system.coroot_eval(lambda, alpha)? * frac(1, 2);
    let reflected = |shift: Scalar| {
        if shift.is_zero() {
            WeightTransportOutcome::Fixed
        } else {
            WeightTransportOutcome::Reflected {
                weight: lambda.add_scaled(-shift, alpha),
            }
        }
    };
    if t.is_integer() {
        let ti = *t.numer();
        if (0..n).contains(&ti) {
            return Ok(reflected(int(2 * ti)));
        }
        if (n + 1..=2 * n).contains(&ti) {
            let k = ti - n;
            return Ok(WeightTransportOutcome::Critical {
                k: k as u32,
                companion: lambda.add_scaled(int(-2 * k), alpha),
            });
        }
    }
    Ok(reflected(int(2 * n)))
}

/// Dispatches on isotropy. Refuses regular roots.
pub fn transport_weight(
    system: &RestrictedRootSystem,
    alpha: &Weight,
    lambda: &Weight,
) -> Result<WeightTransportOutcome> {
    require_singular(system, alpha)?;
    if system.is_isotropic(alpha)? {
        transport_weight_isotropic(system, alpha, lambda)
    } else {
        transport_weight_nonisotropic(system, alpha, lambda)
    }
}

/// Reflects `base` in the simple root `alpha`, transporting `lambda` when
/// given and `alpha` is singular.
pub fn reflect_step(
    system: &RestrictedRootSystem,
    base: &Base,
    alpha: &Weight,
    lambda: Option<&Weight>,
) -> Result<ReflectionStep> {
    let to_base = reflect_base(system, base, alpha)?;
    let singular = system.is_singular(alpha)?;
    let weight_effect = match lambda {
        Some(l) if singular => Some(transport_weight(system, alpha, l)?),
        Some(l) => {
            let image = regular_reflect_weight(system, alpha, l)?;
            Some(if &image == l {
                WeightTransportOutcome::Fixed
            } else {
                WeightTransportOutcome::Reflected { weight: image }
            })
        }
        None => None,
    };
    Ok(ReflectionStep {
        root: alpha.clone(),
        singular,
        from_base: base.clone(),
        to_base,
        weight_before: lambda.cloned(),
        weight_effect,
    })
}

/// For an `alpha`-critical `lambda` and a regular simple `beta` of
/// `r_alpha Sigma`: the module is `beta`-integrable iff both `lambda` and
/// `lambda - 2n alpha` pass the rank-one test at `beta`.
pub fn critical_integrability(
    system: &RestrictedRootSystem,
    alpha: &Weight,
    lambda: &Weight,
    beta: &Weight,
) -> Result<bool> {
    match transport_weight_nonisotropic(system, alpha, lambda)? {
        WeightTransportOutcome::Critical { .. } => {}
        _ => return Err(Error::NotCritical(alpha.clone())),
    }
    let n = singular_half_multiplicity(system, alpha)? as i64;
    let far = lambda.add_scaled(int(-2 * n), alpha);
    Ok(rank_one_integrable(system, beta, lambda)? && rank_one_integrable(system, beta, &far)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_pair, PairSpec};

    fn w(xs: &[i64]) -> Weight {
        Weight::from_ints(xs)
    }

    fn wq(xs: &[(i64, i64)]) -> Weight {
        Weight(xs.iter().map(|&(n, d)| frac(n, d)).collect())
    }

    #[test]
    fn weyl_reflection() {
        let e = build_pair(&PairSpec::bc(int(-1), 1, 1)).unwrap();
        let s = &e.system;
        let g = w(&[1, 0]);
        assert_eq!(regular_reflect_weight(s, &g, &g).unwrap(), w(&[-1, 0]));
        assert_eq!(
            regular_reflect_weight(s, &g, &w(&[2, 3])).unwrap(),
            w(&[-2, 3])
        );
        assert_eq!(
            regular_reflect_weight(s, &g, &w(&[0, 5])).unwrap(),
            w(&[0, 5])
        );
        assert!(regular_reflect_weight(s, &w(&[1, -1]), &g).is_err());
    }

    #[test]
    fn k_values() {
        let e = build_pair(&PairSpec::bc(int(-1), 2, 1)).unwrap();
        // coordinates (g1, g2, n1)
        assert_eq!(k_alpha_beta(&e.system, &w(&[0, 1, -1]), &w(&[1, -1, 0])), 1);
        let e5 = build_pair(&PairSpec::OspOspEqual { r: 2, s: 1, n: 3 }).unwrap();
        // coordinates (e1, e2, n1): alpha = e2, beta = e1 - e2
        assert_eq!(k_alpha_beta(&e5.system, &w(&[0, 1, 0]), &w(&[1, -1, 0])), 2);
    }

    #[test]
    fn exceptional_base_traces() {
        let e8 = build_pair(&PairSpec::Ab13Sl14).unwrap();
        let a = wq(&[(1, 2), (-1, 2)]);
        let r = reflect_base(&e8.system, &e8.default_base, &a).unwrap();
        assert_eq!(r.simples(), &[wq(&[(-1, 2), (1, 2)]), w(&[1, 0])]);

        let e9 = build_pair(&PairSpec::Ab13Gosp).unwrap();
        let a = wq(&[(1, 2), (-1, 2), (-1, 2)]);
        let r = reflect_base(&e9.system, &e9.default_base, &a).unwrap();
        assert_eq!(
            r.simples(),
            &[
                wq(&[(1, 2), (1, 2), (-1, 2)]),
                wq(&[(-1, 2), (1, 2), (1, 2)]),
                w(&[1, -1, 0])
            ]
        );

        let e10 = build_pair(&PairSpec::Ab13D21).unwrap();
        let a = wq(&[(-1, 2), (1, 2), (1, 2)]);
        let r = reflect_base(&e10.system, &e10.default_base, &a).unwrap();
        assert_eq!(
            r.simples(),
            &[
                w(&[0, 1, -1]),
                w(&[0, 0, 1]),
                wq(&[(1, 2), (-1, 2), (-1, 2)])
            ]
        );
    }

    #[test]
    fn reflect_twice_is_identity() {
        let e = build_pair(&PairSpec::bc(int(-1), 2, 1)).unwrap();
        for a in e.default_base.simples() {
            let once = reflect_base(&e.system, &e.default_base, a).unwrap();
            let twice = reflect_base(&e.system, &once, &-a).unwrap();
            assert_eq!(twice, e.default_base);
        }
    }

    #[test]
    fn isotropic_transport() {
        let e = build_pair(&PairSpec::bc(int(-1), 1, 1)).unwrap();
        let a = w(&[1, -1]);
        let s = &e.system;
        assert_eq!(
            transport_weight_isotropic(s, &a, &w(&[0, 0])).unwrap(),
            WeightTransportOutcome::Fixed
        );
        assert_eq!(
            transport_weight_isotropic(s, &a, &w(&[2, 0])).unwrap(),
            WeightTransportOutcome::Reflected { weight: w(&[0, 2]) }
        );
        // (lambda, alpha) = a + b vanishes on (1,-1)
        assert_eq!(
            transport_weight_isotropic(s, &a, &w(&[1, -1])).unwrap(),
            WeightTransportOutcome::Fixed
        );
        assert!(matches!(
            transport_weight(s, &w(&[1, 0]), &w(&[0, 0])),
            Err(Error::RegularRootNotTransportable(_))
        ));
    }

    #[test]
    fn nonisotropic_transport_cases() {
        // BC_{-1/2}(1,1), singular multiplicity (0|2): t = 2a + b.
        let e = build_pair(&PairSpec::bc(frac(-1, 2), 1, 1)).unwrap();
        let s = &e.system;
        let a = w(&[1, -1]);
        assert_eq!(s.coroot_eval(&w(&[3, 5]), &a).unwrap() / int(2), int(11));
        assert_eq!(
            transport_weight(s, &a, &w(&[0, 0])).unwrap(),
            WeightTransportOutcome::Fixed
        );
        assert_eq!(
            transport_weight(s, &a, &w(&[2, 2])).unwrap(),
            WeightTransportOutcome::Reflected { weight: w(&[0, 4]) }
        );
        // t = 2 = 2n: critical with k = 1
        assert_eq!(
            transport_weight(s, &a, &w(&[0, 2])).unwrap(),
            WeightTransportOutcome::Critical {
                k: 1,
                companion: w(&[-2, 4])
            }
        );
        // t = 1 = n: shifted by 2n alpha
        assert_eq!(
            transport_weight(s, &a, &w(&[0, 1])).unwrap(),
            WeightTransportOutcome::Reflected {
                weight: w(&[-2, 3])
            }
        );

        // Multiplicity (0|4): t in {3,4} critical, t in {0,1} reflected by t.
        let e = build_pair(&PairSpec::Bc {
            k: frac(-1, 2),
            r: 1,
            s: 1,
            sing_mult: 4,
        })
        .unwrap();
        let s = &e.system;
        let lam = w(&[1, 1]); // t = 3
        assert_eq!(
            transport_weight(s, &a, &lam).unwrap(),
            WeightTransportOutcome::Critical {
                k: 1,
                companion: w(&[-1, 3])
            }
        );
        let lam = w(&[0, 1]); // t = 1
        assert_eq!(
            transport_weight(s, &a, &lam).unwrap(),
            WeightTransportOutcome::Reflected {
                weight: w(&[-2, 3])
            }
        );
        let lam = w(&[1, 0]); // t = 2 = n
        assert_eq!(
            transport_weight(s, &a, &lam).unwrap(),
            WeightTransportOutcome::Reflected {
                weight: w(&[-3, 4])
            }
        );
    }

    #[test]
    fn critical_branches() {
        let e = build_pair(&PairSpec::bc(frac(-1, 2), 1, 1)).unwrap();
        let s = &e.system;
        let a = w(&[1, -1]);
        let g = w(&[1, 0]);
        // lambda = 2 nu: critical, lambda - 2 alpha has negative gamma part.
        assert!(!critical_integrability(s, &a, &w(&[0, 2]), &g).unwrap());
        // lambda = 4 g - 6 nu: t = 8 - 6 = 2, both branches at g: 8 and 4.
        assert!(critical_integrability(s, &a, &w(&[4, -6]), &g).unwrap());
        assert!(matches!(
            critical_integrability(s, &a, &w(&[4, 0]), &g),
            Err(Error::NotCritical(_))
        ));
        // negative coroot value fails regardless of the companion
        assert!(!critical_integrability(s, &a, &w(&[-2, 6]), &g).unwrap());
    }
}

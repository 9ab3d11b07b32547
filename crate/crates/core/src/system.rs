//! Restricted root systems with super-multiplicities, bases, and the basic
//! root classifiers.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{determinant, frac, int, rank, Coordinatizer, Scalar, Weight};

/// Super-multiplicity `(even | odd)` of a restricted root space.
///
/// `exact == false` marks multiplicities that were filled in from the
/// rank-one pattern rather than recorded data; only the evenness of such a
/// root is meaningful.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multiplicity {
    pub even: u32,
    pub odd: u32,
    pub exact: bool,
}

impl Multiplicity {
    pub const fn new(even: u32, odd: u32) -> Self {
        Multiplicity {
            even,
            odd,
            exact: true,
        }
    }

    pub const fn placeholder(even: u32, odd: u32) -> Self {
        Multiplicity {
            even,
            odd,
            exact: false,
        }
    }

    /// Superdimension `even - odd`.
    pub fn sdim(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)?;
        if !self.exact {
            write!(f, "?")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub vector: Weight,
    pub mult: Multiplicity,
}

impl Root {
    pub fn is_even(&self) -> bool {
        self.mult.even >= 1
    }
}

/// Symmetric Gram matrix over the ambient basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Vec<Vec<Scalar>>,
}

impl BilinearForm {
    pub fn new(gram: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = gram.len();
        if gram.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidSystem("Gram matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidSystem("Gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(BilinearForm { gram })
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { entries[i] } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        BilinearForm { gram }
    }

    pub fn dim(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Scalar>] {
        &self.gram
    }

    pub fn eval(&self, x: &Weight, y: &Weight) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                let g = &self.gram[i][j];
                if !g.is_zero() && !yj.is_zero() {
                    acc += xi * g * yj;
                }
            }
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootKind {
    Regular,
    Singular,
}

/// The eight rank-one types, with their integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RankOneType {
    /// Singular, non-isotropic, `m_a = (0|2n)`.
    I { n: u32 },
    /// Singular, isotropic, `m_a = (0|2)`.
    II,
    /// `m_a = (m-2|2n)`, no double.
    III { m: u32, n: u32 },
    /// `m_a = (4(n-2)|2m)`, `m_2a = (3|0)`.
    IV { m: u32, n: u32 },
    /// `m_a = (2(m-2)|2n)`, `m_2a = (1|0)`.
    V { m: u32, n: u32 },
    /// `m_a = (2|0)`, no double.
    VI,
    /// `m_a = (0|2)`, `m_2a = (2|0)`.
    VII,
    /// `m_a = (8|0)`, `m_2a = (7|0)`.
    VIII,
}

impl RankOneType {
    pub fn tag(&self) -> &'static str {
        match self {
            RankOneType::I { .. } => "i",
            RankOneType::II => "ii",
            RankOneType::III { .. } => "iii",
            RankOneType::IV { .. } => "iv",
            RankOneType::V { .. } => "v",
            RankOneType::VI => "vi",
            RankOneType::VII => "vii",
            RankOneType::VIII => "viii",
        }
    }
}

/// A restricted root system: ambient space, invariant form and the finite
/// set of roots with multiplicities.
#[derive(Clone, Debug)]
pub struct RestrictedRootSystem {
    pair_tag: String,
    labels: Vec<String>,
    form: BilinearForm,
    roots: Vec<Root>,
    index: HashMap<Weight, usize>,
}

impl RestrictedRootSystem {
    /// Builds and validates a system. Roots are sorted into canonical order.
    pub fn new(
        pair_tag: impl Into<String>,
        labels: Vec<String>,
        form: BilinearForm,
        mut roots: Vec<Root>,
    ) -> Result<Self> {
        let dim = form.dim();
        if labels.len() != dim {
            return Err(Error::InvalidSystem(format!(
                "{} basis labels for dimension {dim}",
                labels.len()
            )));
        }
        roots.sort_by(|a, b| a.vector.cmp(&b.vector));
        let mut index = HashMap::with_capacity(roots.len());
        for (i, r) in roots.iter().enumerate() {
            if r.vector.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: r.vector.dim(),
                });
            }
            if index.insert(r.vector.clone(), i).is_some() {
                return Err(Error::InvalidSystem(format!("duplicate root {}", r.vector)));
            }
        }
        let sys = RestrictedRootSystem {
            pair_tag: pair_tag.into(),
            labels,
            form,
            roots,
            index,
        };
        sys.check_axioms()?;
        Ok(sys)
    }

    fn check_axioms(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSystem(msg));
        for r in &self.roots {
            let a = &r.vector;
            if a.is_zero() {
                return bad("0 is listed as a root".into());
            }
            if r.mult.even + r.mult.odd == 0 {
                return bad(format!("root {a} has zero multiplicity"));
            }
            match self.root(&-a) {
                Some(neg) if neg.mult == r.mult => {}
                Some(_) => return bad(format!("-{a} has a different multiplicity")),
                None => return bad(format!("-{a} is missing")),
            }
            if let Some(d) = self.root(&a.scale(int(2))) {
                if d.mult.odd != 0 {
                    return bad(format!("2*{a} has odd multiplicity"));
                }
            }
        }
        for r in &self.roots {
            for s in &self.roots {
                if let Some(k) = s.vector.ratio_to(&r.vector) {
                    let ok = [int(1), int(-1), int(2), int(-2), frac(1, 2), frac(-1, 2)];
                    if !ok.contains(&k) {
                        return bad(format!("{} is {} times {}", s.vector, k, r.vector));
                    }
                }
            }
        }
        if self.form.dim() > 0 && determinant(self.form.gram()).is_zero() {
            return bad("form is degenerate".into());
        }
        Ok(())
    }

    fn span_basis(&self) -> Vec<Weight> {
        let mut basis: Vec<Weight> = Vec::new();
        for r in &self.roots {
            basis.push(r.vector.clone());
            if rank(&basis) < basis.len() {
                basis.pop();
            }
        }
        basis
    }

    pub fn pair_tag(&self) -> &str {
        &self.pair_tag
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, v: &Weight) -> Option<&Root> {
        self.index.get(v).map(|&i| &self.roots[i])
    }

    pub fn contains(&self, v: &Weight) -> bool {
        self.index.contains_key(v)
    }

    /// Rank of the root lattice.
    pub fn rank(&self) -> usize {
        self.span_basis().len()
    }

    fn require_root(&self, v: &Weight) -> Result<&Root> {
        self.root(v).ok_or_else(|| Error::UnknownRoot(v.clone()))
    }

    fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: w.dim(),
            });
        }
        Ok(())
    }

    pub fn pairing(&self, x: &Weight, y: &Weight) -> Result<Scalar> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.form.eval(x, y))
    }

    /// `lambda(h_alpha) = 2 (lambda, alpha) / (alpha, alpha)`.
    pub fn coroot_eval(&self, lambda: &Weight, alpha: &Weight) -> Result<Scalar> {
        self.check_dim(lambda)?;
        self.check_dim(alpha)?;
        let aa = self.form.eval(alpha, alpha);
        if aa.is_zero() {
            return Err(Error::IsotropicRoot(alpha.clone()));
        }
        Ok(int(2) * self.form.eval(lambda, alpha) / aa)
    }

    pub fn is_isotropic(&self, alpha: &Weight) -> Result<bool> {
        self.require_root(alpha)?;
        Ok(self.form.eval(alpha, alpha).is_zero())
    }

    /// Singular iff neither `alpha` nor `2 alpha` carries even multiplicity.
    pub fn classify_root(&self, alpha: &Weight) -> Result<RootKind> {
        let r = self.require_root(alpha)?;
        if r.is_even() {
            return Ok(RootKind::Regular);
        }
        match self.root(&alpha.scale(int(2))) {
            Some(d) if d.is_even() => Ok(RootKind::Regular),
            _ => Ok(RootKind::Singular),
        }
    }

    pub fn is_singular(&self, alpha: &Weight) -> Result<bool> {
        Ok(self.classify_root(alpha)? == RootKind::Singular)
    }

    /// `1` if `2 alpha` is a root, else `0`. Only defined for regular roots.
    pub fn epsilon(&self, alpha: &Weight) -> Result<u32> {
        if self.classify_root(alpha)? == RootKind::Singular {
            return Err(Error::SingularRoot(alpha.clone()));
        }
        Ok(u32::from(self.contains(&alpha.scale(int(2)))))
    }

    /// The rank-one subsystem `{k alpha}` and its classified type.
    pub fn rank_one_subsystem(
        &self,
        alpha: &Weight,
    ) -> Result<(RestrictedRootSystem, RankOneType)> {
        self.require_root(alpha)?;
        let half = alpha.scale(frac(1, 2));
        let base = if self.contains(&half) {
            half
        } else {
            alpha.clone()
        };
        let mut roots = Vec::new();
        for k in [int(1), int(2), int(-1), int(-2)] {
            if let Some(r) = self.root(&base.scale(k)) {
                roots.push(r.clone());
            }
        }
        let sub = RestrictedRootSystem::new(
            format!("{}<{}>", self.pair_tag, base),
            self.labels.clone(),
            self.form.clone(),
            roots,
        )?;
        let ty = self.classify_pattern(&base)?;
        Ok((sub, ty))
    }

    fn classify_pattern(&self, base: &Weight) -> Result<RankOneType> {
        let m1 = self.require_root(base)?.mult;
        let m2 = self.root(&base.scale(int(2))).map(|r| r.mult);
        let iso = self.form.eval(base, base).is_zero();
        let fail = || Error::UnclassifiablePattern(base.clone());
        let singular = m1.even == 0 && m2.is_none_or(|m| m.even == 0);
        if singular {
            if m2.is_some() {
                return Err(fail());
            }
            return match (iso, m1.odd) {
                (true, 2) => Ok(RankOneType::II),
                (false, o) if o >= 2 && o % 2 == 0 => Ok(RankOneType::I { n: o / 2 }),
                _ => Err(fail()),
            };
        }
        if iso || m1.odd % 2 != 0 {
            return Err(fail());
        }
        match m2.map(|m| (m.even, m.odd)) {
            Some((7, 0)) if (m1.even, m1.odd) == (8, 0) => Ok(RankOneType::VIII),
            Some((2, 0)) if (m1.even, m1.odd) == (0, 2) => Ok(RankOneType::VII),
            Some((3, 0)) if m1.even % 4 == 0 => Ok(RankOneType::IV {
                m: m1.odd / 2,
                n: m1.even / 4 + 2,
            }),
            Some((1, 0)) if m1.even % 2 == 0 => Ok(RankOneType::V {
                m: m1.even / 2 + 2,
                n: m1.odd / 2,
            }),
            None if (m1.even, m1.odd) == (2, 0) => Ok(RankOneType::VI),
            None => Ok(RankOneType::III {
                m: m1.even + 2,
                n: m1.odd / 2,
            }),
            _ => Err(fail()),
        }
    }

    /// The even subsystem `Delta_0`, roots with positive even multiplicity.
    pub fn even_subsystem(&self) -> Result<RestrictedRootSystem> {
        let roots = self.roots.iter().filter(|r| r.is_even()).cloned().collect();
        RestrictedRootSystem::new(
            format!("{}_0", self.pair_tag),
            self.labels.clone(),
            self.form.clone(),
            roots,
        )
    }

    pub fn regular_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots
            .iter()
            .filter(|r| matches!(self.classify_root(&r.vector), Ok(RootKind::Regular)))
    }

    pub fn singular_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots
            .iter()
            .filter(|r| matches!(self.classify_root(&r.vector), Ok(RootKind::Singular)))
    }

    /// Checks the base axioms and returns the validated base.
    pub fn validate_base(&self, candidate: &[Weight]) -> Result<Base> {
        for c in candidate {
            self.check_dim(c)?;
            self.require_root(c)?;
        }
        if candidate.is_empty() {
            if self.roots.is_empty() {
                return Ok(Base {
                    simples: Vec::new(),
                });
            }
            return Err(Error::SpanViolation(self.roots[0].vector.clone()));
        }
        let coord = Coordinatizer::new(candidate)?;
        for r in &self.roots {
            let c = coord
                .coefficients(&r.vector)
                .ok_or_else(|| Error::SpanViolation(r.vector.clone()))?;
            let integral = c.iter().all(|x| x.is_integer());
            let nonneg = c.iter().all(|x| !x.is_negative());
            let nonpos = c.iter().all(|x| !x.is_positive());
            if !integral || !(nonneg || nonpos) {
                return Err(Error::SpanViolation(r.vector.clone()));
            }
        }
        Ok(Base {
            simples: candidate.to_vec(),
        })
    }

    /// `Delta^+ = N Sigma ∩ Delta`, in canonical root order.
    pub fn positive_roots(&self, base: &Base) -> Vec<&Root> {
        if base.simples.is_empty() {
            return Vec::new();
        }
        let coord = Coordinatizer::new(&base.simples).expect("validated base");
        self.roots
            .iter()
            .filter(|r| {
                coord
                    .coefficients(&r.vector)
                    .is_some_and(|c| c.iter().sum::<Scalar>().is_positive())
            })
            .collect()
    }

    /// Simple roots of `Delta_0` with respect to the positive system of `base`:
    /// positive even roots that are not the sum of two positive even roots.
    pub fn principal_roots(&self, base: &Base) -> Vec<Weight> {
        let pos_even: Vec<&Weight> = self
            .positive_roots(base)
            .into_iter()
            .filter(|r| r.is_even())
            .map(|r| &r.vector)
            .collect();
        let set: BTreeSet<&Weight> = pos_even.iter().copied().collect();
        let mut out: Vec<Weight> = pos_even
            .iter()
            .filter(|g| !pos_even.iter().any(|a| set.contains(&(**g - *a))))
            .map(|g| (*g).clone())
            .collect();
        let coord = Coordinatizer::new(&base.simples).expect("validated base");
        let height = |w: &Weight| -> Scalar { coord.coefficients(w).unwrap().iter().sum() };
        out.sort_by(|a, b| height(a).cmp(&height(b)).then(b.cmp(a)));
        out
    }

    /// Height of `v` with respect to `base`, if `v` is in its span.
    pub fn height(&self, base: &Base, v: &Weight) -> Option<Scalar> {
        let coord = Coordinatizer::new(&base.simples).ok()?;
        coord.coefficients(v).map(|c| c.iter().sum())
    }

    /// Weyl reflection `lambda - lambda(h_beta) beta` for a regular root.
    pub fn weyl_reflect(&self, beta: &Weight, lambda: &Weight) -> Result<Weight> {
        if self.is_singular(beta)? {
            return Err(Error::SingularRoot(beta.clone()));
        }
        let c = self.coroot_eval(lambda, beta)?;
        Ok(lambda.add_scaled(-c, beta))
    }

    /// The same roots, relabelled as a custom system.
    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.pair_tag = tag.into();
        self
    }

    /// Checks coroot integrality `beta(h_alpha) ∈ 2^eps(alpha) Z` for all
    /// regular `alpha` and all roots `beta`; returns the violating pairs.
    pub fn coroot_integrality_violations(&self) -> Vec<(Weight, Weight)> {
        let mut bad = Vec::new();
        for a in self.regular_roots() {
            let eps = self.epsilon(&a.vector).unwrap();
            let modulus = if eps == 1 { 2 } else { 1 };
            for b in &self.roots {
                let v = self.coroot_eval(&b.vector, &a.vector).unwrap();
                if !v.is_integer() || v.numer() % modulus != 0 {
                    bad.push((a.vector.clone(), b.vector.clone()));
                }
            }
        }
        bad
    }
}

/// An ordered, validated set of simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Base {
    simples: Vec<Weight>,
}

impl Base {
    pub fn simples(&self) -> &[Weight] {
        &self.simples
    }

    pub fn len(&self) -> usize {
        self.simples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simples.is_empty()
    }

    pub fn contains(&self, v: &Weight) -> bool {
        self.simples.contains(v)
    }

    pub fn position(&self, v: &Weight) -> Option<usize> {
        self.simples.iter().position(|s| s == v)
    }

    /// Sorted copy used as a dedup key.
    pub fn canonical(&self) -> Base {
        let mut s = self.simples.clone();
        s.sort();
        Base { simples: s }
    }

    /// `gamma` itself or `gamma / 2`, whichever is simple.
    pub fn exposed_form(&self, gamma: &Weight) -> Option<Weight> {
        if self.contains(gamma) {
            return Some(gamma.clone());
        }
        let half = gamma.scale(frac(1, 2));
        self.contains(&half).then_some(half)
    }

    pub(crate) fn from_unchecked(simples: Vec<Weight>) -> Base {
        Base { simples }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.simples.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Unit coefficient helper used by the catalog and tests.
pub fn one() -> Scalar {
    Scalar::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// BC_{-1}(1,1): coordinates (gamma, nu), (gamma,gamma)=1, (nu,nu)=-1.
    fn bc_minus_one() -> RestrictedRootSystem {
        let mut roots = Vec::new();
        let m = Multiplicity::new;
        for s in [1, -1] {
            roots.push(Root {
                vector: Weight::from_ints(&[s, 0]),
                mult: m(2, 2),
            });
            roots.push(Root {
                vector: Weight::from_ints(&[2 * s, 0]),
                mult: m(1, 0),
            });
            roots.push(Root {
                vector: Weight::from_ints(&[0, s]),
                mult: m(2, 2),
            });
            roots.push(Root {
                vector: Weight::from_ints(&[0, 2 * s]),
                mult: m(1, 0),
            });
            for t in [1, -1] {
                roots.push(Root {
                    vector: Weight::from_ints(&[s, t]),
                    mult: m(0, 2),
                });
            }
        }
        RestrictedRootSystem::new(
            "bc",
            vec!["g1".into(), "n1".into()],
            BilinearForm::diagonal(&[int(1), int(-1)]),
            roots,
        )
        .unwrap()
    }

    #[test]
    fn pairing_examples() {
        let s = bc_minus_one();
        let g = Weight::from_ints(&[1, 0]);
        assert_eq!(s.pairing(&g, &g).unwrap(), int(1));
        assert_eq!(s.pairing(&Weight::zero(2), &g).unwrap(), int(0));
        let a = Weight::from_ints(&[1, -1]);
        assert_eq!(s.pairing(&a, &a).unwrap(), int(0));
        assert!(matches!(
            s.pairing(&Weight::zero(3), &g),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn classifiers() {
        let s = bc_minus_one();
        let a = Weight::from_ints(&[1, -1]);
        assert!(s.is_isotropic(&a).unwrap());
        assert!(!s.is_isotropic(&Weight::from_ints(&[1, 0])).unwrap());
        assert_eq!(s.classify_root(&a).unwrap(), RootKind::Singular);
        assert_eq!(s.epsilon(&Weight::from_ints(&[1, 0])).unwrap(), 1);
        assert_eq!(s.epsilon(&Weight::from_ints(&[2, 0])).unwrap(), 0);
        assert!(matches!(s.epsilon(&a), Err(Error::SingularRoot(_))));
        assert!(matches!(
            s.coroot_eval(&a, &a),
            Err(Error::IsotropicRoot(_))
        ));
        let g = Weight::from_ints(&[1, 0]);
        assert_eq!(s.coroot_eval(&g, &g).unwrap(), int(2));
        assert!(matches!(
            s.is_isotropic(&Weight::from_ints(&[3, 0])),
            Err(Error::UnknownRoot(_))
        ));
    }

    #[test]
    fn rank_one_types() {
        let s = bc_minus_one();
        let (_, t) = s.rank_one_subsystem(&Weight::from_ints(&[1, -1])).unwrap();
        assert_eq!(t, RankOneType::II);
        let (sub, t) = s.rank_one_subsystem(&Weight::from_ints(&[2, 0])).unwrap();
        assert_eq!(t, RankOneType::V { m: 3, n: 1 });
        assert_eq!(sub.roots().len(), 4);
    }

    #[test]
    fn base_validation() {
        let s = bc_minus_one();
        let ok = s.validate_base(&[Weight::from_ints(&[1, -1]), Weight::from_ints(&[0, 1])]);
        assert!(ok.is_ok());
        let bad = s.validate_base(&[Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 1])]);
        assert_eq!(
            bad.unwrap_err(),
            Error::SpanViolation(Weight::from_ints(&[-1, 1]))
        );
        let dep = s.validate_base(&[Weight::from_ints(&[1, 0]), Weight::from_ints(&[2, 0])]);
        assert_eq!(dep.unwrap_err(), Error::NotLinearlyIndependent);
    }

    #[test]
    fn principal_roots_bc() {
        let s = bc_minus_one();
        let b = s
            .validate_base(&[Weight::from_ints(&[1, -1]), Weight::from_ints(&[0, 1])])
            .unwrap();
        let pos = s.positive_roots(&b);
        assert_eq!(pos.len(), 6);
        let pi = s.principal_roots(&b);
        assert_eq!(
            pi,
            vec![Weight::from_ints(&[0, 1]), Weight::from_ints(&[1, 0])]
        );
    }

    #[test]
    fn rejects_broken_systems() {
        let form = BilinearForm::diagonal(&[int(1)]);
        let lonely = vec![Root {
            vector: Weight::from_ints(&[1]),
            mult: Multiplicity::new(1, 0),
        }];
        assert!(RestrictedRootSystem::new("x", vec!["e".into()], form.clone(), lonely).is_err());
        let triple: Vec<Root> = [1, -1, 3, -3]
            .iter()
            .map(|&k| Root {
                vector: Weight::from_ints(&[k]),
                mult: Multiplicity::new(1, 0),
            })
            .collect();
        assert!(RestrictedRootSystem::new("x", vec!["e".into()], form.clone(), triple).is_err());
        let odd_double: Vec<Root> = [(1, 0, 2), (-1, 0, 2), (2, 1, 1), (-2, 1, 1)]
            .iter()
            .map(|&(k, e, o)| Root {
                vector: Weight::from_ints(&[k]),
                mult: Multiplicity::new(e, o),
            })
            .collect();
        assert!(RestrictedRootSystem::new("x", vec!["e".into()], form, odd_double).is_err());
    }
}

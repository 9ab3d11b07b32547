//! Restricted root systems and default bases of the supersymmetric pairs,
//! plus the generic families `BC_k(r,s)` and `C_k(r,s)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, frac, int, Scalar, Weight};
use crate::system::{Base, BilinearForm, Multiplicity, RestrictedRootSystem, Root};

/// A pair (or generic family) together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum PairSpec {
    /// `gl(m|2n) / osp(m|2n)`.
    GlOsp { m: u32, n: u32 },
    /// `gl(m|n) / gl(r|s) x gl(m-r|n-s)`.
    GlGl { m: u32, n: u32, r: u32, s: u32 },
    /// `osp(2m'|2n') / gl(m'|n')` presented by its `m` gamma and `n` delta
    /// coordinates; `odd` selects the `BC` shape with short roots.
    OspGl { m: u32, n: u32, odd: bool },
    /// `osp(m|2n) / osp(r|2s) x osp(m-r|2n-2s)`.
    OspOsp { m: u32, n: u32, r: u32, s: u32 },
    /// `osp(2r|2n) / osp(r|2s) x osp(r|2n-2s)`.
    #[serde(rename = "osp-osp-eq")]
    OspOspEqual { r: u32, s: u32, n: u32 },
    /// `osp(2r|4s) / osp(r|2s) x osp(r|2s)`.
    #[serde(rename = "osp-osp-d")]
    OspOspSquare { r: u32, s: u32 },
    /// `d(2,1;a) / d(2,1;a)_0`-type pair with system `C_a(1,1)`.
    #[serde(rename = "d21a")]
    D21 {
        #[serde(with = "crate::scalar::scalar_serde")]
        a: Scalar,
    },
    #[serde(rename = "ab13-sl14")]
    Ab13Sl14,
    #[serde(rename = "ab13-gosp")]
    Ab13Gosp,
    #[serde(rename = "ab13-d21")]
    Ab13D21,
    #[serde(rename = "ag12")]
    Ag12,
    /// Generic `BC_k(r,s)`; singular roots carry `(0|sing_mult)`.
    Bc {
        #[serde(with = "crate::scalar::scalar_serde")]
        k: Scalar,
        r: u32,
        s: u32,
        sing_mult: u32,
    },
    /// Generic `C_k(r,s)`.
    C {
        #[serde(with = "crate::scalar::scalar_serde")]
        k: Scalar,
        r: u32,
        s: u32,
        sing_mult: u32,
    },
}

impl PairSpec {
    pub fn bc(k: Scalar, r: u32, s: u32) -> Self {
        PairSpec::Bc {
            k,
            r,
            s,
            sing_mult: 2,
        }
    }

    pub fn c(k: Scalar, r: u32, s: u32) -> Self {
        PairSpec::C {
            k,
            r,
            s,
            sing_mult: 2,
        }
    }

    /// Stable family identifier.
    pub fn family_id(&self) -> &'static str {
        match self {
            PairSpec::GlOsp { .. } => "gl-osp",
            PairSpec::GlGl { .. } => "gl-gl",
            PairSpec::OspGl { .. } => "osp-gl",
            PairSpec::OspOsp { .. } => "osp-osp",
            PairSpec::OspOspEqual { .. } => "osp-osp-eq",
            PairSpec::OspOspSquare { .. } => "osp-osp-d",
            PairSpec::D21 { .. } => "d21a",
            PairSpec::Ab13Sl14 => "ab13-sl14",
            PairSpec::Ab13Gosp => "ab13-gosp",
            PairSpec::Ab13D21 => "ab13-d21",
            PairSpec::Ag12 => "ag12",
            PairSpec::Bc { .. } => "bc",
            PairSpec::C { .. } => "c",
        }
    }

    /// Builds a spec from a family id and named parameters. Missing
    /// parameters take the family defaults listed by [`list_families`].
    pub fn from_params(family: &str, params: &BTreeMap<String, Scalar>) -> Result<Self> {
        let desc = list_families()
            .into_iter()
            .find(|d| d.id == family)
            .ok_or_else(|| Error::UnknownFamily(family.to_string()))?;
        for key in params.keys() {
            if !desc.params.iter().any(|(p, _)| p == key) {
                return Err(Error::ParameterViolation(format!(
                    "{family} takes no parameter `{key}`"
                )));
            }
        }
        let get = |name: &str| -> Scalar {
            params
                .get(name)
                .copied()
                .or_else(|| {
                    desc.params
                        .iter()
                        .find(|(p, _)| *p == name)
                        .map(|(_, d)| *d)
                })
                .unwrap_or_else(Scalar::zero)
        };
        let nat = |name: &str| -> Result<u32> {
            let v = get(name);
            if !v.is_integer() || v < Scalar::zero() || v > int(64) {
                return Err(Error::ParameterViolation(format!(
                    "{name} must be a small non-negative integer"
                )));
            }
            Ok(*v.numer() as u32)
        };
        Ok(match family {
            "gl-osp" => PairSpec::GlOsp {
                m: nat("m")?,
                n: nat("n")?,
            },
            "gl-gl" => PairSpec::GlGl {
                m: nat("m")?,
                n: nat("n")?,
                r: nat("r")?,
                s: nat("s")?,
            },
            "osp-gl" => PairSpec::OspGl {
                m: nat("m")?,
                n: nat("n")?,
                odd: nat("odd")? != 0,
            },
            "osp-osp" => PairSpec::OspOsp {
                m: nat("m")?,
                n: nat("n")?,
                r: nat("r")?,
                s: nat("s")?,
            },
            "osp-osp-eq" => PairSpec::OspOspEqual {
                r: nat("r")?,
                s: nat("s")?,
                n: nat("n")?,
            },
            "osp-osp-d" => PairSpec::OspOspSquare {
                r: nat("r")?,
                s: nat("s")?,
            },
            "d21a" => PairSpec::D21 { a: get("a") },
            "ab13-sl14" => PairSpec::Ab13Sl14,
            "ab13-gosp" => PairSpec::Ab13Gosp,
            "ab13-d21" => PairSpec::Ab13D21,
            "ag12" => PairSpec::Ag12,
            "bc" => PairSpec::Bc {
                k: get("k"),
                r: nat("r")?,
                s: nat("s")?,
                sing_mult: nat("mult")?,
            },
            "c" => PairSpec::C {
                k: get("k"),
                r: nat("r")?,
                s: nat("s")?,
                sing_mult: nat("mult")?,
            },
            _ => unreachable!(),
        })
    }
}

impl fmt::Display for PairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairSpec::GlOsp { m, n } => write!(f, "gl({m}|{})/osp({m}|{})", 2 * n, 2 * n),
            PairSpec::GlGl { m, n, r, s } => {
                write!(f, "gl({m}|{n})/gl({r}|{s})xgl({}|{})", m - r, n - s)
            }
            PairSpec::OspGl { m, n, odd } => write!(f, "osp-gl[m={m},n={n},odd={odd}]"),
            PairSpec::OspOsp { m, n, r, s } => {
                write!(
                    f,
                    "osp({m}|{})/osp({r}|{})xosp({}|{})",
                    2 * n,
                    2 * s,
                    m - r,
                    2 * (n - s)
                )
            }
            PairSpec::OspOspEqual { r, s, n } => {
                write!(
                    f,
                    "osp({}|{})/osp({r}|{})xosp({r}|{})",
                    2 * r,
                    2 * n,
                    2 * s,
                    2 * (n - s)
                )
            }
            PairSpec::OspOspSquare { r, s } => {
                write!(f, "osp({}|{})/osp({r}|{})^2", 2 * r, 4 * s, 2 * s)
            }
            PairSpec::D21 { a } => write!(f, "d(2,1;{})", format_scalar(a)),
            PairSpec::Ab13Sl14 => write!(f, "ab(1|3)/sl(1|4)"),
            PairSpec::Ab13Gosp => write!(f, "ab(1|3)/gosp(2|4)"),
            PairSpec::Ab13D21 => write!(f, "ab(1|3)/d(2,1;2)xsl(2)"),
            PairSpec::Ag12 => write!(f, "ag(1|2)/d(2,1;3)"),
            PairSpec::Bc { k, r, s, sing_mult } => {
                write!(f, "BC_{}({r},{s})[{sing_mult}]", format_scalar(k))
            }
            PairSpec::C { k, r, s, sing_mult } => {
                write!(f, "C_{}({r},{s})[{sing_mult}]", format_scalar(k))
            }
        }
    }
}

/// A built catalog system with its default base.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub spec: PairSpec,
    pub system: RestrictedRootSystem,
    pub default_base: Base,
    /// Key into [`crate::closedform`]; equals the family id.
    pub closed_form_id: &'static str,
    /// The principal roots of the default base as recorded for the family.
    pub recorded_principal: Vec<Weight>,
}

/// Descriptor returned by [`list_families`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyDescriptor {
    pub id: &'static str,
    pub pair: &'static str,
    pub system: &'static str,
    pub constraints: &'static str,
    /// Parameter names with their defaults.
    #[serde(serialize_with = "ser_params")]
    pub params: Vec<(&'static str, Scalar)>,
}

fn ser_params<S: serde::Serializer>(
    p: &[(&'static str, Scalar)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(p.len()))?;
    for (k, v) in p {
        m.serialize_entry(k, &format_scalar(v))?;
    }
    m.end()
}

/// The families in table order followed by the two generic families.
pub fn list_families() -> Vec<FamilyDescriptor> {
    let d = |id, pair, system, constraints, params: &[(&'static str, i64)]| FamilyDescriptor {
        id,
        pair,
        system,
        constraints,
        params: params.iter().map(|&(n, v)| (n, int(v))).collect(),
    };
    vec![
        d(
            "gl-osp",
            "(gl(m|2n), osp(m|2n))",
            "A(m-1,n-1)",
            "m >= 1, n >= 1",
            &[("m", 2), ("n", 1)],
        ),
        d(
            "gl-gl",
            "(gl(m|n), gl(r|s) x gl(m-r|n-s))",
            "BC_{-1}(r,s)",
            "r <= m/2, s <= n/2",
            &[("m", 3), ("n", 3), ("r", 1), ("s", 1)],
        ),
        d(
            "osp-gl",
            "(osp(2m|2n), gl(m|n))",
            "(B)C_{-1/2}(n,m)",
            "m >= 1, n >= 1",
            &[("m", 1), ("n", 1), ("odd", 0)],
        ),
        d(
            "osp-osp",
            "(osp(m|2n), osp(r|2s) x osp(m-r|2n-2s))",
            "BC_{-1/2}(r,s)",
            "r < m/2, s <= n/2",
            &[("m", 3), ("n", 2), ("r", 1), ("s", 1)],
        ),
        d(
            "osp-osp-eq",
            "(osp(2r|2n), osp(r|2s) x osp(r|2n-2s))",
            "D_r + BC_s, singular roots",
            "s < n/2",
            &[("r", 2), ("s", 1), ("n", 3)],
        ),
        d(
            "osp-osp-d",
            "(osp(2r|4s), osp(r|2s) x osp(r|2s))",
            "D(r,s)",
            "r >= 2, s >= 1",
            &[("r", 2), ("s", 1)],
        ),
        d(
            "d21a",
            "(d(2,1;a), osp(2|2) x so(2))",
            "C_a(1,1)",
            "a != 0, a != -1",
            &[("a", 2)],
        ),
        d(
            "ab13-sl14",
            "(ab(1|3), sl(1|4))",
            "C_{-3}(1,1)",
            "none",
            &[],
        ),
        d(
            "ab13-gosp",
            "(ab(1|3), gosp(2|4))",
            "B_2 + C_1, singular roots",
            "none",
            &[],
        ),
        d(
            "ab13-d21",
            "(ab(1|3), d(2,1;2) x sl(2))",
            "B_3 with singular roots",
            "none",
            &[],
        ),
        d("ag12", "(ag(1|2), d(2,1;3))", "G_2", "none", &[]),
        d(
            "bc",
            "generic",
            "BC_k(r,s)",
            "k != 0, r + s >= 1, mult = 2 when k = -1",
            &[("k", -1), ("r", 1), ("s", 1), ("mult", 2)],
        ),
        d(
            "c",
            "generic",
            "C_k(r,s)",
            "k != 0, r + s >= 1, mult = 2 when k = -1",
            &[("k", -1), ("r", 1), ("s", 1), ("mult", 2)],
        ),
    ]
}

fn violation<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::ParameterViolation(msg.into()))
}

/// How a chain base `c_1 - c_2, ..., c_{N-1} - c_N` is closed off.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Tail {
    None,
    Short,
    Double,
    DSum,
}

/// Collects `±` pairs of roots over a fixed ambient space.
struct Builder {
    dim: usize,
    roots: BTreeMap<Weight, Multiplicity>,
}

impl Builder {
    fn new(dim: usize) -> Self {
        Builder {
            dim,
            roots: BTreeMap::new(),
        }
    }

    fn e(&self, i: usize) -> Weight {
        Weight::unit(self.dim, i, Scalar::one())
    }

    fn pm(&mut self, v: Weight, m: Multiplicity) {
        self.roots.insert(-&v, m);
        self.roots.insert(v, m);
    }

    /// `±e_i ± e_j` (`diff`, `sum`), `±e_i` and `±2e_i` over `coords`.
    fn block(
        &mut self,
        coords: &[usize],
        diff: Option<Multiplicity>,
        sum: Option<Multiplicity>,
        short: Option<Multiplicity>,
        double: Option<Multiplicity>,
    ) {
        for (a, &i) in coords.iter().enumerate() {
            for &j in &coords[a + 1..] {
                if let Some(m) = diff {
                    self.pm(&self.e(i) - &self.e(j), m);
                }
                if let Some(m) = sum {
                    self.pm(&self.e(i) + &self.e(j), m);
                }
            }
            if let Some(m) = short {
                self.pm(self.e(i), m);
            }
            if let Some(m) = double {
                self.pm(self.e(i).scale(int(2)), m);
            }
        }
    }

    /// `±(e_i - f_j)` and optionally `±(e_i + f_j)` across two blocks.
    fn mixed(&mut self, xs: &[usize], ys: &[usize], m: Multiplicity, with_sum: bool) {
        for &i in xs {
            for &j in ys {
                self.pm(&self.e(i) - &self.e(j), m);
                if with_sum {
                    self.pm(&self.e(i) + &self.e(j), m);
                }
            }
        }
    }

    fn chain(&self, order: &[usize], tail: Tail) -> Vec<Weight> {
        let mut out: Vec<Weight> = order
            .windows(2)
            .map(|w| &self.e(w[0]) - &self.e(w[1]))
            .collect();
        if let Some(&last) = order.last() {
            match tail {
                Tail::None => {}
                Tail::Short => out.push(self.e(last)),
                Tail::Double => out.push(self.e(last).scale(int(2))),
                Tail::DSum => {
                    let prev = order[order.len() - 2];
                    out.push(&self.e(prev) + &self.e(last));
                }
            }
        }
        out
    }

    fn finish(
        self,
        tag: String,
        labels: Vec<String>,
        norms: Vec<Scalar>,
    ) -> Result<RestrictedRootSystem> {
        let roots = self
            .roots
            .into_iter()
            .map(|(vector, mult)| Root { vector, mult })
            .collect();
        RestrictedRootSystem::new(tag, labels, BilinearForm::diagonal(&norms), roots)
    }
}

fn labels(prefix: &str, count: u32) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

const E1: Multiplicity = Multiplicity::new(1, 0);
const E4: Multiplicity = Multiplicity::new(4, 0);
const E3: Multiplicity = Multiplicity::new(3, 0);
const E2: Multiplicity = Multiplicity::new(2, 0);
const ODD2: Multiplicity = Multiplicity::new(0, 2);
const P1: Multiplicity = Multiplicity::placeholder(1, 0);
const P2: Multiplicity = Multiplicity::placeholder(2, 0);

fn mult_if(even: u32, odd: u32) -> Option<Multiplicity> {
    (even + odd > 0).then(|| Multiplicity::new(even, odd))
}

/// Builds the system and default base of `spec`.
pub fn build_pair(spec: &PairSpec) -> Result<CatalogEntry> {
    let tag = spec.to_string();
    let (system, simples, principal) = match *spec {
        PairSpec::GlOsp { m, n } => {
            if m < 1 || n < 1 {
                return violation("gl-osp needs m >= 1 and n >= 1");
            }
            let (m, n) = (m as usize, n as usize);
            let eps: Vec<usize> = (0..m).collect();
            let nu: Vec<usize> = (m..m + n).collect();
            let mut b = Builder::new(m + n);
            b.block(&eps, Some(E1), None, None, None);
            b.block(&nu, Some(E4), None, None, None);
            b.mixed(&eps, &nu, ODD2, false);
            let order: Vec<usize> = eps.iter().chain(&nu).copied().collect();
            let simples = b.chain(&order, Tail::None);
            let mut pi: Vec<Weight> = eps.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])).collect();
            pi.extend(nu.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])));
            let mut norms = vec![int(1); m];
            norms.extend(vec![frac(-1, 2); n]);
            let mut lab = labels("e", m as u32);
            lab.extend(labels("n", n as u32));
            (b.finish(tag, lab, norms)?, simples, pi)
        }
        PairSpec::GlGl { m, n, r, s } => {
            if 2 * r > m || 2 * s > n {
                return violation("gl-gl needs r <= m/2 and s <= n/2");
            }
            if r + s == 0 {
                return violation("gl-gl needs r + s >= 1");
            }
            let (p, q) = (m - 2 * r, n - 2 * s);
            let (ru, su) = (r as usize, s as usize);
            let g: Vec<usize> = (0..ru).collect();
            let nu: Vec<usize> = (ru..ru + su).collect();
            let mut b = Builder::new(ru + su);
            b.block(&g, Some(E2), Some(E2), mult_if(2 * p, 2 * q), Some(E1));
            b.block(&nu, Some(E2), Some(E2), mult_if(2 * q, 2 * p), Some(E1));
            b.mixed(&g, &nu, ODD2, true);
            let tail = if p + q > 0 { Tail::Short } else { Tail::Double };
            let order: Vec<usize> = g.iter().chain(&nu).copied().collect();
            let simples = b.chain(&order, tail);
            let mut pi = Vec::new();
            let end = |b: &Builder, i: usize, even_short: bool| {
                if even_short {
                    b.e(i)
                } else {
                    b.e(i).scale(int(2))
                }
            };
            pi.extend(g.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])));
            if let Some(&l) = g.last() {
                pi.push(end(&b, l, p > 0));
            }
            pi.extend(nu.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])));
            if let Some(&l) = nu.last() {
                pi.push(end(&b, l, q > 0));
            }
            let mut norms = vec![int(1); ru];
            norms.extend(vec![int(-1); su]);
            let mut lab = labels("g", r);
            lab.extend(labels("n", s));
            (b.finish(tag, lab, norms)?, simples, pi)
        }
        PairSpec::OspGl { m, n, odd } => {
            if m < 1 || n < 1 {
                return violation("osp-gl needs m >= 1 and n >= 1");
            }
            let (mu, nu_) = (m as usize, n as usize);
            let g: Vec<usize> = (0..mu).collect();
            let d: Vec<usize> = (mu..mu + nu_).collect();
            let mut b = Builder::new(mu + nu_);
            b.block(&g, Some(E4), Some(E4), odd.then_some(E4), Some(E1));
            b.block(&d, Some(E1), Some(E1), odd.then_some(ODD2), Some(E1));
            b.mixed(&g, &d, ODD2, true);
            let order: Vec<usize> = d.iter().chain(&g).copied().collect();
            let simples = b.chain(&order, if odd { Tail::Short } else { Tail::Double });
            let mut pi: Vec<Weight> = g.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])).collect();
            let gl = *g.last().unwrap();
            pi.push(if odd { b.e(gl) } else { b.e(gl).scale(int(2)) });
            pi.extend(d.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])));
            pi.push(b.e(*d.last().unwrap()).scale(int(2)));
            let mut norms = vec![frac(-1, 2); mu];
            norms.extend(vec![int(1); nu_]);
            let mut lab = labels("g", m);
            lab.extend(labels("d", n));
            (b.finish(tag, lab, norms)?, simples, pi)
        }
        PairSpec::OspOsp { m, n, r, s } => {
            if 2 * r >= m || 2 * s > n {
                return violation("osp-osp needs r < m/2 and s <= n/2");
            }
            if r + s == 0 {
                return violation("osp-osp needs r + s >= 1");
            }
            let (p, q) = (m - 2 * r, 2 * n - 4 * s);
            let (ru, su) = (r as usize, s as usize);
            let e: Vec<usize> = (0..ru).collect();
            let nu: Vec<usize> = (ru..ru + su).collect();
            let mut b = Builder::new(ru + su);
            b.block(&e, Some(E1), Some(E1), mult_if(p, q), None);
            b.block(&nu, Some(E4), Some(E4), mult_if(2 * q, 2 * p), Some(E3));
            b.mixed(&e, &nu, ODD2, true);
            let order: Vec<usize> = e.iter().chain(&nu).copied().collect();
            let simples = b.chain(&order, Tail::Short);
            let mut pi: Vec<Weight> = e.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])).collect();
            if let Some(&l) = e.last() {
                pi.push(b.e(l));
            }
            pi.extend(nu.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])));
            if let Some(&l) = nu.last() {
                pi.push(if q > 0 { b.e(l) } else { b.e(l).scale(int(2)) });
            }
            let mut norms = vec![int(1); ru];
            norms.extend(vec![frac(-1, 2); su]);
            let mut lab = labels("e", r);
            lab.extend(labels("n", s));
            (b.finish(tag, lab, norms)?, simples, pi)
        }
        PairSpec::OspOspEqual { r, s, n } => {
            if 2 * s >= n {
                return violation("osp-osp-eq needs s < n/2");
            }
            if r < 1 {
                return violation("osp-osp-eq needs r >= 1");
            }
            let big = n - 2 * s;
            let (ru, su) = (r as usize, s as usize);
            let e: Vec<usize> = (0..ru).collect();
            let nu: Vec<usize> = (ru..ru + su).collect();
            let mut b = Builder::new(ru + su);
            b.block(
                &e,
                Some(E1),
                Some(E1),
                Some(Multiplicity::new(0, 2 * big)),
                None,
            );
            b.block(
                &nu,
                Some(E4),
                Some(E4),
                Some(Multiplicity::new(4 * big, 0)),
                Some(E3),
            );
            b.mixed(&e, &nu, ODD2, true);
            let order: Vec<usize> = nu.iter().chain(&e).copied().collect();
            let simples = b.chain(&order, Tail::Short);
            let mut pi: Vec<Weight> = e.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])).collect();
            if ru >= 2 {
                pi.push(&b.e(ru - 2) + &b.e(ru - 1));
            }
            pi.extend(nu.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])));
            if let Some(&l) = nu.last() {
                pi.push(b.e(l));
            }
            let mut norms = vec![int(1); ru];
            norms.extend(vec![frac(-1, 2); su]);
            let mut lab = labels("e", r);
            lab.extend(labels("n", s));
            (b.finish(tag, lab, norms)?, simples, pi)
        }
        PairSpec::OspOspSquare { r, s } => {
            if r < 2 || s < 1 {
                return violation("osp-osp-d needs r >= 2 and s >= 1");
            }
            let (ru, su) = (r as usize, s as usize);
            let e: Vec<usize> = (0..ru).collect();
            let nu: Vec<usize> = (ru..ru + su).collect();
            let mut b = Builder::new(ru + su);
            b.block(&e, Some(E1), Some(E1), None, None);
            b.block(&nu, Some(E4), Some(E4), None, Some(E3));
            b.mixed(&e, &nu, ODD2, true);
            let order: Vec<usize> = nu.iter().chain(&e).copied().collect();
            let simples = b.chain(&order, Tail::DSum);
            let mut pi: Vec<Weight> = e.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])).collect();
            pi.push(&b.e(ru - 2) + &b.e(ru - 1));
            pi.extend(nu.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])));
            pi.push(b.e(*nu.last().unwrap()).scale(int(2)));
            let mut norms = vec![int(1); ru];
            norms.extend(vec![frac(-1, 2); su]);
            let mut lab = labels("e", r);
            lab.extend(labels("n", s));
            (b.finish(tag, lab, norms)?, simples, pi)
        }
        PairSpec::D21 { a } => {
            if a.is_zero() || a == int(-1) {
                return violation("d21a needs a != 0 and a != -1");
            }
            let mut b = Builder::new(2);
            b.block(&[0, 1], None, None, None, Some(E1));
            b.mixed(&[0], &[1], ODD2, true);
            let simples = vec![&b.e(0) - &b.e(1), b.e(1).scale(int(2))];
            let pi = vec![b.e(0).scale(int(2)), b.e(1).scale(int(2))];
            let lab = vec!["a".to_string(), "b".to_string()];
            (b.finish(tag, lab, vec![int(1), a])?, simples, pi)
        }
        PairSpec::Ab13Sl14 => {
            let mut b = Builder::new(2);
            b.pm(b.e(0), P1);
            b.pm(b.e(1), P1);
            let h = frac(1, 2);
            for v in [Weight(vec![h, h]), Weight(vec![h, -h])] {
                b.pm(v, Multiplicity::new(0, 4));
            }
            let simples = vec![Weight(vec![h, -h]), b.e(1)];
            let pi = vec![b.e(0), b.e(1)];
            let lab = vec!["e".to_string(), "d".to_string()];
            (b.finish(tag, lab, vec![frac(1, 3), int(-1)])?, simples, pi)
        }
        PairSpec::Ab13Gosp => {
            let mut b = Builder::new(3);
            b.block(&[0, 1], Some(P1), Some(P1), Some(P1), None);
            b.pm(b.e(2), P1);
            let h = frac(1, 2);
            for s1 in [h, -h] {
                for s2 in [h, -h] {
                    b.pm(Weight(vec![h, s1, s2]), ODD2);
                }
            }
            let simples = vec![b.e(1), Weight(vec![h, -h, -h]), b.e(2)];
            let pi = vec![&b.e(0) - &b.e(1), b.e(1), b.e(2)];
            let lab = vec!["e1".to_string(), "e2".to_string(), "d".to_string()];
            (
                b.finish(tag, lab, vec![frac(1, 3), frac(1, 3), int(-1)])?,
                simples,
                pi,
            )
        }
        PairSpec::Ab13D21 => {
            let mut b = Builder::new(3);
            b.block(&[0, 1, 2], Some(P1), Some(P1), Some(P1), None);
            let h = frac(1, 2);
            for s1 in [h, -h] {
                for s2 in [h, -h] {
                    b.pm(Weight(vec![h, s1, s2]), ODD2);
                }
            }
            let simples = vec![&b.e(1) - &b.e(2), &b.e(0) - &b.e(1), Weight(vec![-h, h, h])];
            let pi = vec![&b.e(0) - &b.e(1), &b.e(1) - &b.e(2), b.e(2)];
            let lab = labels("e", 3);
            (b.finish(tag, lab, vec![frac(1, 3); 3])?, simples, pi)
        }
        PairSpec::Ag12 => {
            let pos = [[2, -1], [-3, 2], [-1, 1], [1, 0], [3, -1], [0, 1]];
            let roots = pos
                .iter()
                .flat_map(|v| {
                    let w = Weight::from_ints(v);
                    [
                        Root {
                            vector: -&w,
                            mult: P1,
                        },
                        Root {
                            vector: w,
                            mult: P1,
                        },
                    ]
                })
                .collect();
            let form = BilinearForm::new(vec![vec![int(2), int(3)], vec![int(3), int(6)]])?;
            let sys = RestrictedRootSystem::new(tag, vec!["w1".into(), "w2".into()], form, roots)?;
            let simples = vec![Weight::from_ints(&[2, -1]), Weight::from_ints(&[-3, 2])];
            let pi = simples.clone();
            (sys, simples, pi)
        }
        PairSpec::Bc { k, r, s, sing_mult } | PairSpec::C { k, r, s, sing_mult } => {
            let bc = matches!(spec, PairSpec::Bc { .. });
            if k.is_zero() {
                return violation("k must be nonzero");
            }
            if r + s == 0 {
                return violation("r + s >= 1");
            }
            if sing_mult == 0 || sing_mult % 2 != 0 {
                return violation("singular multiplicity must be a positive even number");
            }
            if k == int(-1) && sing_mult != 2 {
                return violation("isotropic singular roots have multiplicity 2");
            }
            let (ru, su) = (r as usize, s as usize);
            let g: Vec<usize> = (0..ru).collect();
            let nu: Vec<usize> = (ru..ru + su).collect();
            let mut b = Builder::new(ru + su);
            let (short, long) = if bc { (Some(P2), P2) } else { (None, P1) };
            b.block(&g, Some(long), Some(long), short, Some(P1));
            b.block(&nu, Some(long), Some(long), short, Some(P1));
            b.mixed(&g, &nu, Multiplicity::new(0, sing_mult), true);
            let order: Vec<usize> = g.iter().chain(&nu).copied().collect();
            let simples = b.chain(&order, if bc { Tail::Short } else { Tail::Double });
            let last = |i: usize| if bc { b.e(i) } else { b.e(i).scale(int(2)) };
            let mut pi: Vec<Weight> = g.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])).collect();
            pi.extend(g.last().map(|&l| last(l)));
            pi.extend(nu.windows(2).map(|w| &b.e(w[0]) - &b.e(w[1])));
            pi.extend(nu.last().map(|&l| last(l)));
            let mut norms = vec![int(1); ru];
            norms.extend(vec![k; su]);
            let mut lab = labels("g", r);
            lab.extend(labels("n", s));
            (b.finish(tag, lab, norms)?, simples, pi)
        }
    };
    let default_base = system.validate_base(&simples)?;
    Ok(CatalogEntry {
        spec: spec.clone(),
        system,
        default_base,
        closed_form_id: spec.family_id(),
        recorded_principal: principal,
    })
}

/// Orbit of `seed` under the group generated by reflections in the roots of
/// `even_system`, by breadth-first closure.
pub fn weyl_orbit(seed: &Weight, even_system: &RestrictedRootSystem) -> Result<BTreeSet<Weight>> {
    let gens: Vec<&Weight> = even_system.roots().iter().map(|r| &r.vector).collect();
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let c = even_system.coroot_eval(&x, g)?;
            let y = x.add_scaled(-c, g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// The small-rank specs exercised by the acceptance and cross-check suites.
pub fn small_rank_specs() -> Vec<PairSpec> {
    let mut out = Vec::new();
    for (m, n) in [(2, 1), (3, 1), (4, 2)] {
        out.push(PairSpec::GlOsp { m, n });
    }
    for (r, s) in [(1, 1), (2, 1), (2, 2)] {
        out.push(PairSpec::GlGl {
            m: 2 * r + 1,
            n: 2 * s + 1,
            r,
            s,
        });
    }
    for (m, n) in [(1, 1), (2, 1), (2, 2)] {
        for odd in [false, true] {
            out.push(PairSpec::OspGl { m, n, odd });
        }
    }
    for (r, s) in [(1, 1), (2, 1), (2, 2)] {
        out.push(PairSpec::OspOsp {
            m: 2 * r + 1,
            n: 2 * s,
            r,
            s,
        });
    }
    for (r, s, n) in [(2, 0, 2), (2, 1, 3), (3, 1, 3)] {
        out.push(PairSpec::OspOspEqual { r, s, n });
    }
    for (r, s) in [(2, 1), (3, 1)] {
        out.push(PairSpec::OspOspSquare { r, s });
    }
    for a in [int(2), frac(1, 2), int(-3)] {
        out.push(PairSpec::D21 { a });
    }
    out.extend([
        PairSpec::Ab13Sl14,
        PairSpec::Ab13Gosp,
        PairSpec::Ab13D21,
        PairSpec::Ag12,
    ]);
    out
}

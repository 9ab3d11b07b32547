//! Closed-form membership predicates for spherical highest weights, written
//! independently of the reflection calculus so they can serve as oracles.
//!
//! Coordinates are those of the catalog systems: `lambda = sum a_i x_i` with
//! `x_i` the ambient basis vectors in catalog order.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::catalog::PairSpec;
use crate::error::{Error, Result};
use crate::scalar::{in_nonneg_multiple, int, Scalar, Weight};

fn even_nonneg(x: Scalar) -> bool {
    in_nonneg_multiple(&x, 2)
}

fn nonneg_int(x: Scalar) -> bool {
    in_nonneg_multiple(&x, 1)
}

fn nonzero_count(xs: &[Scalar]) -> i64 {
    xs.iter().filter(|x| !x.is_zero()).count() as i64
}

fn diffs_even(xs: &[Scalar]) -> bool {
    xs.windows(2).all(|w| even_nonneg(w[0] - w[1]))
}

fn arity(lambda: &Weight, expected: usize) -> Result<&[Scalar]> {
    if lambda.dim() != expected {
        return Err(Error::Arity {
            expected,
            got: lambda.dim(),
        });
    }
    Ok(lambda.coords())
}

/// The two readings of the `G_2` row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum G2Variant {
    /// `a_1, a_2 ∈ 2Z_{>=0}`.
    Table,
    /// `a_1 - a_2, a_2 ∈ 2Z_{>=0}`.
    CaseText,
}

pub fn g2(variant: G2Variant, lambda: &Weight) -> Result<bool> {
    let a = arity(lambda, 2)?;
    Ok(match variant {
        G2Variant::Table => even_nonneg(a[0]) && even_nonneg(a[1]),
        G2Variant::CaseText => even_nonneg(a[0] - a[1]) && even_nonneg(a[1]),
    })
}

/// `a_r/2 >= #{i : b_i != 0}` together with the numeric assumptions
/// `a_i - a_{i+1}, a_r, b_i - b_{i+1}, b_s ∈ 2Z_{>=0}`.
fn bc_count_rule(a: &[Scalar], b: &[Scalar]) -> bool {
    let numeric = diffs_even(a)
        && diffs_even(b)
        && a.last().is_none_or(|&x| even_nonneg(x))
        && b.last().is_none_or(|&x| even_nonneg(x));
    let count = match a.last() {
        Some(&ar) => ar / int(2) >= int(nonzero_count(b)),
        None => nonzero_count(b) == 0,
    };
    numeric && count
}

/// The printed membership condition for the pair `spec`.
pub fn table2(spec: &PairSpec, lambda: &Weight) -> Result<bool> {
    match *spec {
        PairSpec::GlOsp { m, n } => {
            let c = arity(lambda, (m + n) as usize)?;
            let (a, b) = c.split_at(m as usize);
            Ok(diffs_even(a) && diffs_even(b))
        }
        PairSpec::GlGl { r, s, .. } | PairSpec::OspOsp { r, s, .. } => {
            let c = arity(lambda, (r + s) as usize)?;
            let (a, b) = c.split_at(r as usize);
            Ok(bc_count_rule(a, b))
        }
        PairSpec::OspGl { m, n, .. } => {
            let c = arity(lambda, (m + n) as usize)?;
            let (a, b) = c.split_at(m as usize);
            Ok(bc_count_rule(b, a))
        }
        PairSpec::OspOspEqual { r, s, n } => {
            let c = arity(lambda, (r + s) as usize)?;
            let (a, b) = c.split_at(r as usize);
            let r = r as usize;
            let numeric = diffs_even(a)
                && diffs_even(b)
                && b.last().is_none_or(|&x| even_nonneg(x))
                && (r < 2 || even_nonneg(a[r - 2] + a[r - 1]));
            let count = match b.last() {
                Some(&bs) => bs / int(2) >= int(nonzero_count(&a[..r - 1])),
                None => true,
            };
            let ar = a[r - 1];
            let negative_tail = if ar.is_negative() {
                let prev = if r >= 2 { a[r - 2] } else { Scalar::zero() };
                prev + ar >= int(2 * n as i64 - 4 * s as i64)
            } else {
                true
            };
            Ok(numeric && count && negative_tail)
        }
        PairSpec::OspOspSquare { r, s } => {
            let c = arity(lambda, (r + s) as usize)?;
            let (a, b) = c.split_at(r as usize);
            let r = r as usize;
            let numeric = diffs_even(a)
                && diffs_even(b)
                && even_nonneg(a[r - 2] + a[r - 1])
                && b.last().is_some_and(|&x| even_nonneg(x));
            let count = b[b.len() - 1] / int(2) >= int(nonzero_count(a));
            Ok(numeric && count)
        }
        PairSpec::D21 { .. } => {
            let c = arity(lambda, 2)?;
            Ok(even_nonneg(c[0]) && even_nonneg(c[1]) && (!c[0].is_zero() || c[1].is_zero()))
        }
        PairSpec::Ab13Sl14 => {
            let c = arity(lambda, 2)?;
            let (a, b) = (c[0], c[1]);
            Ok(nonneg_int(a) && nonneg_int(b) && ((a.is_zero() && b.is_zero()) || a >= int(2)))
        }
        PairSpec::Ab13Gosp => {
            let c = arity(lambda, 3)?;
            let (a1, a2, b) = (c[0], c[1], c[2]);
            Ok(even_nonneg(a1 - a2)
                && nonneg_int(a2)
                && nonneg_int(b)
                && ((a1.is_zero() && a2.is_zero() && b.is_zero()) || a1 > a2))
        }
        PairSpec::Ab13D21 => {
            let c = arity(lambda, 3)?;
            Ok(diffs_even(c) && nonneg_int(c[2]) && (c[2].is_zero() || c[0] > c[1]))
        }
        PairSpec::Ag12 => g2(G2Variant::Table, lambda),
        PairSpec::Bc { .. } | PairSpec::C { .. } => Err(Error::Unsupported(
            "generic families are covered by example_bc".into(),
        )),
    }
}

/// The three worked cases for `BC_k(r,s)` and `C_k(r,s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BcCase {
    /// `k = -1`.
    I,
    /// `k = -1/2`, singular multiplicity `(0|2)`.
    II,
    /// `r = s = 1`, `k != -1`, singular multiplicity `(0|2)`.
    III,
}

impl BcCase {
    /// The case covering a generic spec, if any.
    pub fn for_spec(spec: &PairSpec) -> Option<BcCase> {
        let (PairSpec::Bc { k, r, s, sing_mult } | PairSpec::C { k, r, s, sing_mult }) = *spec
        else {
            return None;
        };
        if sing_mult != 2 {
            return None;
        }
        if k == int(-1) {
            Some(BcCase::I)
        } else if k == Scalar::new(-1, 2) {
            Some(BcCase::II)
        } else if r == 1 && s == 1 {
            Some(BcCase::III)
        } else {
            None
        }
    }
}

/// Literal evaluation of the case formula, including the numeric
/// assumptions on `Pi`.
pub fn example_bc(case: BcCase, k: Scalar, r: u32, s: u32, lambda: &Weight) -> Result<bool> {
    let c = arity(lambda, (r + s) as usize)?;
    let (a, b) = c.split_at(r as usize);
    match case {
        BcCase::I if k == int(-1) => Ok(bc_count_rule(a, b)),
        BcCase::II if k == Scalar::new(-1, 2) => Ok(bc_count_rule(a, b)),
        BcCase::III if r == 1 && s == 1 && k != int(-1) => {
            let numeric = even_nonneg(a[0]) && even_nonneg(b[0]);
            Ok(numeric && (!a[0].is_zero() || b[0].is_zero()))
        }
        _ => Err(Error::Unsupported(format!(
            "case {case:?} does not cover k = {k}, r = {r}, s = {s}"
        ))),
    }
}

/// The oracle for any catalog or generic spec: the table row, or the
/// matching worked case for the generic families.
pub fn oracle(spec: &PairSpec, lambda: &Weight) -> Result<bool> {
    match *spec {
        PairSpec::Bc { k, r, s, .. } | PairSpec::C { k, r, s, .. } => {
            let case = BcCase::for_spec(spec)
                .ok_or_else(|| Error::Unsupported(format!("no closed form for {spec}")))?;
            example_bc(case, k, r, s, lambda)
        }
        _ => table2(spec, lambda),
    }
}

//! Exact rational scalars, weights and the small amount of linear algebra the
//! root-system code needs.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Scalar = Rational64;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

/// Formats a scalar as `p` or `p/q`.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `p/q` or a terminating decimal such as `0.5`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}`"));
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Scalar::new(p, q));
    }
    if let Some((whole, dec)) = t.split_once('.') {
        if dec.is_empty() || !dec.bytes().all(|b| b.is_ascii_digit()) || dec.len() > 12 {
            return Err(bad());
        }
        let neg = whole.starts_with('-');
        let w: i64 = if whole.is_empty() || whole == "-" || whole == "+" {
            0
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let scale = 10i64.pow(dec.len() as u32);
        let d: i64 = dec.parse().map_err(|_| bad())?;
        let mag = Scalar::new(w.abs() * scale + d, scale);
        return Ok(if neg { -mag } else { mag });
    }
    t.parse::<i64>().map(int).map_err(|_| bad())
}

/// True iff `x` lies in `modulus * Z_{>=0}`.
pub fn in_nonneg_multiple(x: &Scalar, modulus: i64) -> bool {
    if x.is_negative() || !x.is_integer() {
        return false;
    }
    x.numer().is_multiple_of(&modulus)
}

/// A coordinate vector in the ambient space of a root system.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<Scalar>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Scalar::zero(); dim])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Weight(xs.iter().copied().map(int).collect())
    }

    /// Unit vector `e_i` scaled by `c`.
    pub fn unit(dim: usize, i: usize, c: Scalar) -> Self {
        let mut w = Weight::zero(dim);
        w.0[i] = c;
        w
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: Scalar) -> Weight {
        Weight(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: Scalar, other: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), other.dim());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + c * b)
                .collect(),
        )
    }

    /// Returns `k` with `self = k * other`, if such a rational exists and `other != 0`.
    pub fn ratio_to(&self, other: &Weight) -> Option<Scalar> {
        let mut k: Option<Scalar> = None;
        for (a, b) in self.0.iter().zip(&other.0) {
            if b.is_zero() {
                if !a.is_zero() {
                    return None;
                }
                continue;
            }
            let q = a / b;
            match k {
                None => k = Some(q),
                Some(prev) if prev != q => return None,
                _ => {}
            }
        }
        k
    }

    pub fn parse_list(s: &str) -> Result<Weight> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(parse_scalar)
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_scalar).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::parse_list(s)
    }
}

impl Index<usize> for Weight {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(Scalar::one(), rhs)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(-Scalar::one(), rhs)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }
}

impl Mul<&Weight> for Scalar {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(self)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(format_scalar).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter()
            .map(|s| parse_scalar(s))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
            .map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a single scalar as a `"p/q"` string.
pub mod scalar_serde {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> std::result::Result<S::Ok, S::Error> {
        format_scalar(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(d)?;
        parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}

/// Row-reduces a copy of `rows` and returns its rank.
pub fn rank(rows: &[Weight]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.iter().map(|w| w.0.clone()).collect();
    row_reduce(&mut m).len()
}

/// In-place reduced row echelon form; returns pivot columns.
fn row_reduce(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let d = f * m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Expresses vectors in terms of a fixed linearly independent family.
///
/// Built once per base; `coefficients` then costs one small matrix product
/// plus an exact membership check.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    family: Vec<Weight>,
    rows: Vec<usize>,
    inverse: Vec<Vec<Scalar>>,
}

impl Coordinatizer {
    pub fn new(family: &[Weight]) -> Result<Self> {
        let r = family.len();
        let dim = family.first().map_or(0, Weight::dim);
        // Transpose: dim x r matrix whose columns are the family members.
        let cols: Vec<Vec<Scalar>> = (0..dim)
            .map(|i| family.iter().map(|w| w.0[i]).collect())
            .collect();
        // Pick r independent coordinate rows.
        let mut chosen = Vec::new();
        let mut acc: Vec<Weight> = Vec::new();
        for (i, row) in cols.iter().enumerate() {
            acc.push(Weight(row.clone()));
            if rank(&acc) > chosen.len() {
                chosen.push(i);
            } else {
                acc.pop();
            }
            if chosen.len() == r {
                break;
            }
        }
        if chosen.len() < r {
            return Err(Error::NotLinearlyIndependent);
        }
        // Invert the r x r submatrix via [M | I].
        let mut aug: Vec<Vec<Scalar>> = chosen
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                let mut row = cols[i].clone();
                row.extend((0..r).map(|j| {
                    if j == k {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                }));
                row
            })
            .collect();
        row_reduce(&mut aug);
        let inverse = aug.into_iter().map(|row| row[r..].to_vec()).collect();
        Ok(Coordinatizer {
            family: family.to_vec(),
            rows: chosen,
            inverse,
        })
    }

    /// Coefficients `c` with `sum c_i family_i = target`, or `None` outside the span.
    pub fn coefficients(&self, target: &Weight) -> Option<Vec<Scalar>> {
        let r = self.family.len();
        let coeffs: Vec<Scalar> = (0..r)
            .map(|j| {
                self.rows
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| self.inverse[j][k] * target.0[i])
                    .sum()
            })
            .collect();
        let mut back = Weight::zero(target.dim());
        for (c, f) in coeffs.iter().zip(&self.family) {
            back = back.add_scaled(*c, f);
        }
        (back == *target).then_some(coeffs)
    }
}

/// Determinant by fraction-exact elimination.
pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            for j in c..n {
                let d = f * a[c][j];
                a[i][j] -= d;
            }
        }
    }
    det
}

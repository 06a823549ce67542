//! Exact rational scalars, vectors and dense matrices.
//!
//! Everything symbolic in the crate is built on [`Q`], an arbitrary
//! precision rational. Matrices are plain row-major `Vec<Vec<Q>>`; the
//! sizes involved (rank ≤ 8, operator dimension ≤ a few dozen) never
//! justify a dedicated dense type.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Q = BigRational;
pub type QMat = Vec<Vec<Q>>;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `p/q`, `p` or `-p/q`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// Canonical `p/q` string: reduced, positive denominator, denominator
/// always written (`8/1`, `-3/2`, `0/1`).
pub fn format_rational(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Serde wrapper that writes a rational as its canonical `p/q` string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactQ(pub Q);

impl From<Q> for ExactQ {
    fn from(x: Q) -> Self {
        ExactQ(x)
    }
}

impl From<&Q> for ExactQ {
    fn from(x: &Q) -> Self {
        ExactQ(x.clone())
    }
}

impl fmt::Display for ExactQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl Serialize for ExactQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for ExactQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s)
            .map(ExactQ)
            .map_err(serde::de::Error::custom)
    }
}

pub fn exact_vec(v: &[Q]) -> Vec<ExactQ> {
    v.iter().map(ExactQ::from).collect()
}

pub fn exact_mat(m: &[Vec<Q>]) -> Vec<Vec<ExactQ>> {
    m.iter().map(|r| exact_vec(r)).collect()
}

pub fn floor(x: &Q) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

/// An integer `s` with `s >= sqrt(x)` for `x >= 0`.
pub fn sqrt_upper(x: &Q) -> BigInt {
    if !x.is_positive() {
        return BigInt::zero();
    }
    ceil(x).sqrt() + 1
}

pub fn to_f64(x: &Q) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn dot(x: &[Q], y: &[Q]) -> Q {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

pub fn identity(n: usize) -> QMat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
        .collect()
}

pub fn zeros(r: usize, c: usize) -> QMat {
    vec![vec![Q::zero(); c]; r]
}

pub fn transpose(m: &[Vec<Q>]) -> QMat {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> QMat {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Q>], x: &[Q]) -> Vec<Q> {
    a.iter().map(|row| dot(row, x)).collect()
}

/// Inverse by Gauss–Jordan elimination; `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<QMat> {
    let n = m.len();
    let mut a: QMat = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Determinant by exact Gaussian elimination.
pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Q::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            d = -d;
        }
        d *= &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    d
}

/// Rank of a (possibly rectangular) matrix.
pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            if a[i][col].is_zero() {
                continue;
            }
            let f = &a[i][col] / &a[r][col];
            for c in col..cols {
                let sub = &f * &a[r][c];
                a[i][c] -= sub;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Basis of the null space `{ y : m y = 0 }`.
pub fn null_space(m: &[Vec<Q>], cols: usize) -> QMat {
    let mut a = m.to_vec();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][col].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for c in 0..cols {
                    let sub = &f * &a[r][c];
                    a[i][c] -= sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut y = vec![Q::zero(); cols];
            y[f] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                y[pc] = -a[row][f].clone();
            }
            y
        })
        .collect()
}

/// `G = L D Lᵀ` for a symmetric positive definite `G`, with `L` unit lower
/// triangular. Square-root free, so exact over the rationals.
pub fn ldl(g: &[Vec<Q>]) -> Option<(QMat, Vec<Q>)> {
    let n = g.len();
    let mut l = identity(n);
    let mut d = vec![Q::zero(); n];
    for j in 0..n {
        let mut dj = g[j][j].clone();
        for k in 0..j {
            dj -= &l[j][k] * &l[j][k] * &d[k];
        }
        if !dj.is_positive() {
            return None;
        }
        for i in j + 1..n {
            let mut v = g[i][j].clone();
            for k in 0..j {
                v -= &l[i][k] * &l[j][k] * &d[k];
            }
            l[i][j] = v / &dj;
        }
        d[j] = dj;
    }
    Some((l, d))
}

/// Exact positive-definiteness via leading principal minors.
pub fn is_positive_definite(m: &[Vec<Q>]) -> bool {
    let n = m.len();
    (1..=n).all(|k| {
        let minor: QMat = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        det(&minor).is_positive()
    })
}

pub fn is_symmetric(m: &[Vec<Q>]) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// Converts an integral rational to `i64`, if it fits.
pub fn to_i64(x: &Q) -> Option<i64> {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("182/3").unwrap(), q(182, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), q(-2, 3));
        assert_eq!(parse_rational(" 7 ").unwrap(), qi(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&q(8, 1)), "8/1");
        assert_eq!(format_rational(&q(4, -6)), "-2/3");
        assert_eq!(format_rational(&Q::zero()), "0/1");
    }

    #[test]
    fn inverse_and_det() {
        let m = vec![vec![qi(2), qi(-1)], vec![qi(-1), qi(2)]];
        assert_eq!(det(&m), qi(3));
        let inv = inverse(&m).unwrap();
        assert_eq!(inv, vec![vec![q(2, 3), q(1, 3)], vec![q(1, 3), q(2, 3)]]);
        assert_eq!(mat_mul(&m, &inv), identity(2));
        assert!(inverse(&[vec![qi(1), qi(2)], vec![qi(2), qi(4)]]).is_none());
    }

    #[test]
    fn ldl_reconstructs() {
        let g = vec![
            vec![q(2, 3), q(1, 3), qi(0)],
            vec![q(1, 3), q(2, 3), q(1, 5)],
            vec![qi(0), q(1, 5), qi(1)],
        ];
        let (l, d) = ldl(&g).unwrap();
        let dl: QMat = (0..3)
            .map(|i| (0..3).map(|j| &l[i][j] * &d[j]).collect())
            .collect();
        assert_eq!(mat_mul(&dl, &transpose(&l)), g);
    }

    #[test]
    fn null_space_is_annihilated() {
        let m = vec![vec![qi(1), qi(1), qi(0)]];
        let ns = null_space(&m, 3);
        assert_eq!(ns.len(), 2);
        for y in &ns {
            assert!(dot(&m[0], y).is_zero());
        }
        assert_eq!(rank(&ns), 2);
    }

    #[test]
    fn sqrt_upper_bounds() {
        for n in 0..200 {
            let x = q(n, 7);
            let s = Q::from_integer(sqrt_upper(&x));
            assert!(&s * &s >= x);
        }
    }
}

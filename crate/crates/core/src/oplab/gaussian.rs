//! Gaussian rationals `p/q + (r/s)·i` and dense matrices over them.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::rational::{self, Q};

pub type GQ = Complex<Q>;
pub type GMat = Vec<Vec<GQ>>;

pub fn re(x: Q) -> GQ {
    Complex::new(x, Q::zero())
}

pub fn im(x: Q) -> GQ {
    Complex::new(Q::zero(), x)
}

pub fn zeros(n: usize) -> GMat {
    vec![vec![GQ::zero(); n]; n]
}

pub fn identity(n: usize) -> GMat {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = GQ::one();
    }
    m
}

pub fn scalar(n: usize, c: &GQ) -> GMat {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c.clone();
    }
    m
}

pub fn mul(a: &[Vec<GQ>], b: &[Vec<GQ>]) -> GMat {
    let n = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = GQ::zero();
                    for k in 0..n {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &row[k] * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn add_scaled(acc: &mut GMat, m: &[Vec<GQ>], s: &GQ) {
    for (r, row) in acc.iter_mut().zip(m) {
        for (x, y) in r.iter_mut().zip(row) {
            if !y.is_zero() {
                *x += y * s;
            }
        }
    }
}

pub fn trace(m: &[Vec<GQ>]) -> GQ {
    m.iter().enumerate().map(|(i, r)| r[i].clone()).sum()
}

pub fn conj_transpose(m: &[Vec<GQ>]) -> GMat {
    let n = m.len();
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| (0..n).map(|i| m[i][j].conj()).collect())
        .collect()
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &[Vec<GQ>], b: &[Vec<GQ>]) -> GMat {
    let (ra, rb) = (a.len(), b.len());
    let (ca, cb) = (a.first().map_or(0, Vec::len), b.first().map_or(0, Vec::len));
    let mut out = vec![vec![GQ::zero(); ca * cb]; ra * rb];
    for i in 0..ra {
        for j in 0..ca {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

/// Conjugation `p · m · p⁻¹` by a real invertible matrix.
pub fn conjugate_by(m: &[Vec<GQ>], p: &[Vec<Q>]) -> Option<GMat> {
    let pinv = rational::inverse(p)?;
    let lift = |x: &[Vec<Q>]| -> GMat {
        x.iter().map(|r| r.iter().cloned().map(re).collect()).collect()
    };
    Some(mul(&mul(&lift(p), m), &lift(&pinv)))
}

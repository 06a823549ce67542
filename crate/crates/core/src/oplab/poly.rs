//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, qi, QMat, Q};

/// Coefficients indexed by degree, with no trailing zeros. The zero
/// polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoly {
    coeffs: Vec<Q>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `t`.
    pub fn x() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }

    /// `Π (t − r)`.
    pub fn from_roots(roots: &[Q]) -> Self {
        roots.iter().fold(Self::constant(Q::one()), |acc, r| {
            acc * Self::new(vec![-r.clone(), Q::one()])
        })
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| qi(c)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.recip();
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * qi(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, t: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + rational::to_f64(c))
    }

    /// `p(t) ↦ p(t/s)·s^deg`, the polynomial whose roots are scaled by `s`.
    pub fn scale_roots(&self, s: &Q) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut pow = Q::one();
        let mut out = vec![Q::zero(); d + 1];
        for k in (0..=d).rev() {
            out[k] = &self.coeffs[k] * &pow;
            pow *= s;
        }
        Self::new(out)
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let Some(dd) = d.degree() else {
            return Err(Error::ZeroPolynomial);
        };
        let mut r = self.coeffs.clone();
        let lead_inv = d.coeffs[dd].recip();
        let n = self.coeffs.len();
        if n <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quo = vec![Q::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let f = &r[k + dd] * &lead_inv;
            if f.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                r[k + j] -= &f * c;
            }
            quo[k] = f;
        }
        r.truncate(dd);
        Ok((Self::new(quo), Self::new(r)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: monic `f_k` with
    /// `monic(self) = Π f_k^k`, each `f_k` square-free and pairwise coprime.
    /// Returns `(f_k, k)` for nonconstant `f_k` only.
    pub fn square_free_decomposition(&self) -> Result<Vec<(RationalPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let mut out = Vec::new();
        let fp = f.derivative();
        let mut a = f.gcd(&fp);
        let mut b = f.div_rem(&a)?.0;
        let mut c = fp.div_rem(&a)?.0;
        let mut d = c - b.derivative();
        let mut k = 1;
        while b.degree().unwrap_or(0) > 0 {
            a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_rem(&a)?.0;
            c = d.div_rem(&a)?.0;
            d = c - b.derivative();
            k += 1;
        }
        Ok(out)
    }

    /// Root multiplicities as `(factor degree, multiplicity)` pairs: the
    /// multiset `{multiplicity}` repeated `factor degree` times.
    pub fn multiplicity_profile(&self) -> Result<Vec<(usize, usize)>> {
        Ok(self
            .square_free_decomposition()?
            .into_iter()
            .map(|(f, k)| (f.degree().unwrap_or(0), k))
            .collect())
    }

    /// Whether every root is simple.
    pub fn is_square_free(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Sturm sequence `p, p′, −rem(p, p′), …`.
    pub fn sturm_sequence(&self) -> Vec<RationalPoly> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let mut next = self.derivative();
        while !next.is_zero() {
            let prev = seq.last().expect("nonempty");
            let (_, r) = prev.div_rem(&next).expect("nonzero divisor");
            seq.push(next);
            next = -r;
        }
        seq
    }

    /// Cauchy bound: every root satisfies `|r| < bound`.
    pub fn root_bound(&self) -> Q {
        let Some(lead) = self.leading() else {
            return Q::one();
        };
        let m = self
            .coeffs
            .iter()
            .map(|c| (c / lead).abs())
            .max()
            .unwrap_or_else(Q::zero);
        Q::one() + m
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count_real_roots_in(&self, lo: &Q, hi: &Q) -> usize {
        let seq = self.sturm_sequence();
        sign_changes(&seq, lo).saturating_sub(sign_changes(&seq, hi))
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.degree().unwrap_or(0) == 0 {
            return 0;
        }
        let b = self.root_bound();
        self.count_real_roots_in(&-b.clone(), &b)
    }

    /// Disjoint intervals `(lo, hi]`, each holding exactly one distinct
    /// real root, of width at most `width` (or collapsed to the exact root
    /// when it is hit). Sorted increasingly.
    pub fn isolate_real_roots(&self, width: &Q) -> Vec<(Q, Q)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let sf = self.div_rem(&self.gcd(&self.derivative())).expect("nonzero").0;
        let seq = sf.sturm_sequence();
        let b = sf.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-b.clone(), b)];
        while let Some((lo, hi)) = stack.pop() {
            let n = sign_changes(&seq, &lo).saturating_sub(sign_changes(&seq, &hi));
            if n == 0 {
                continue;
            }
            if n == 1 {
                let (mut lo, mut hi) = (lo, hi);
                if sf.eval(&hi).is_zero() {
                    out.push((hi.clone(), hi));
                    continue;
                }
                while &hi - &lo > *width {
                    let mid = (&lo + &hi) / qi(2);
                    if sf.eval(&mid).is_zero() {
                        lo = mid.clone();
                        hi = mid;
                        break;
                    }
                    if sign_changes(&seq, &lo) > sign_changes(&seq, &mid) {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                out.push((lo, hi));
                continue;
            }
            let mid = (&lo + &hi) / qi(2);
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
        out.sort();
        out
    }
}

fn sign_changes(seq: &[RationalPoly], t: &Q) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .map(|p| p.eval(t))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

impl Add for RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Self, k: usize| p.coeffs.get(k).cloned().unwrap_or_else(Q::zero);
        Self::new((0..n).map(|k| get(&self, k) + get(&rhs, k)).collect())
    }
}

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = !(mag.is_one() && k > 0);
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Sylvester matrix of `p` (degree m) and `q` (degree n): `n` shifted rows
/// of `p` followed by `m` shifted rows of `q`, leading coefficients first.
pub fn sylvester_matrix(p: &RationalPoly, q: &RationalPoly) -> Result<QMat> {
    let m = p.degree().ok_or(Error::ZeroPolynomial)?;
    let n = q.degree().ok_or(Error::ZeroPolynomial)?;
    let size = m + n;
    let mut s = rational::zeros(size, size);
    for r in 0..n {
        for (k, c) in p.coeffs.iter().rev().enumerate() {
            s[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in q.coeffs.iter().rev().enumerate() {
            s[n + r][r + k] = c.clone();
        }
    }
    Ok(s)
}

/// `res(p, q) = det Sylvester(p, q)`; equals
/// `lc(p)^n lc(q)^m Π (r_i − s_j)`. Constant inputs give
/// `res(c, q) = c^{deg q}`.
pub fn resultant(p: &RationalPoly, q: &RationalPoly) -> Result<Q> {
    let s = sylvester_matrix(p, q)?;
    if s.is_empty() {
        return Ok(Q::one());
    }
    Ok(rational::det(&s))
}

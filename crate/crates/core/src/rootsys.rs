//! Root systems over the rationals and their Weyl groups.
//!
//! Every root system is realized in its textbook ambient space with a
//! rational base form normalized so that long roots have squared length 2;
//! a single positive `metric_scale` multiplies that form. `A_n` stays in
//! the sum-zero hyperplane of `n + 1` coordinates, `E6`/`E7` live inside
//! the eight-dimensional `E8` realization.
//!
//! Integral weights are mostly handled through their Dynkin labels
//! (coordinates in the fundamental weights). In those coordinates a simple
//! reflection is `λ ↦ λ − λ_i·(row i of the Cartan matrix)`, which keeps
//! the hot paths in machine integers.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, q, qi, Q, QMat};

/// Default ceiling on enumerated Weyl group orders.
pub const DEFAULT_WEYL_CAP: u128 = 10080;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A Dynkin type such as `A2` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    /// `B` and `C` start at rank 2 and `D` at rank 3; smaller ranks
    /// duplicate `A1`/`A1×A1` and are rejected.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemType { family, rank })
        } else {
            Err(Error::InvalidType {
                family: family.to_string(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the Weyl group from the closed formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A reduced irreducible root system with its fundamental data.
#[derive(Clone, Debug)]
pub struct RootSystem {
    typ: RootSystemType,
    ambient_dim: usize,
    simple_roots: Vec<Vec<Q>>,
    positive_roots: Vec<Vec<Q>>,
    /// Positive roots as nonnegative integer combinations of simple roots.
    positive_roots_simple: Vec<Vec<i64>>,
    /// Positive roots in Dynkin labels.
    positive_roots_fw: Vec<Vec<i64>>,
    /// Coroots `α^∨` of the positive roots in simple-coroot coordinates,
    /// so `⟨λ, α^∨⟩ = Σ_i c_i λ_i` for Dynkin labels `λ`.
    positive_coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    /// `(Cᵀ)⁻¹`, used for root-lattice membership.
    cartan_inv_t: QMat,
    fundamental_weights: Vec<Vec<Q>>,
    delta: Vec<Q>,
    gram_fw: QMat,
    metric_scale: Q,
    /// Base form is `base_factor · (standard dot product)`.
    base_factor: Q,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.typ == other.typ && self.metric_scale == other.metric_scale
    }
}

impl Eq for RootSystem {}

fn unit(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scale(a: &[Q], s: &Q) -> Vec<Q> {
    a.iter().map(|x| x * s).collect()
}

/// Simple roots of the standard realization and the base form factor.
fn realization(typ: RootSystemType) -> (usize, Vec<Vec<Q>>, Q) {
    let n = typ.rank;
    let e = |dim: usize, i: usize| unit(dim, i);
    match typ.family {
        Family::A => {
            let dim = n + 1;
            let roots = (0..n).map(|i| sub(&e(dim, i), &e(dim, i + 1))).collect();
            (dim, roots, Q::one())
        }
        Family::B => {
            let mut roots: Vec<_> = (0..n - 1).map(|i| sub(&e(n, i), &e(n, i + 1))).collect();
            roots.push(e(n, n - 1));
            (n, roots, Q::one())
        }
        Family::C => {
            let mut roots: Vec<_> = (0..n - 1).map(|i| sub(&e(n, i), &e(n, i + 1))).collect();
            roots.push(scale(&e(n, n - 1), &qi(2)));
            (n, roots, q(1, 2))
        }
        Family::D => {
            let mut roots: Vec<_> = (0..n - 1).map(|i| sub(&e(n, i), &e(n, i + 1))).collect();
            roots.push(add(&e(n, n - 2), &e(n, n - 1)));
            (n, roots, Q::one())
        }
        Family::E => {
            let dim = 8;
            let half = q(1, 2);
            let mut a1 = vec![-half.clone(); dim];
            a1[0] = half.clone();
            a1[7] = half;
            let mut roots = vec![a1, add(&e(dim, 0), &e(dim, 1))];
            for i in 0..6 {
                roots.push(sub(&e(dim, i + 1), &e(dim, i)));
            }
            roots.truncate(n);
            (dim, roots, Q::one())
        }
        Family::F => {
            let dim = 4;
            let h = q(1, 2);
            let roots = vec![
                sub(&e(dim, 1), &e(dim, 2)),
                sub(&e(dim, 2), &e(dim, 3)),
                e(dim, 3),
                vec![h.clone(), -h.clone(), -h.clone(), -h],
            ];
            (dim, roots, Q::one())
        }
        Family::G => {
            let dim = 3;
            let roots = vec![
                vec![qi(1), qi(-1), qi(0)],
                vec![qi(-2), qi(1), qi(1)],
            ];
            (dim, roots, q(1, 3))
        }
    }
}

impl RootSystem {
    /// Builds the root system of the given type with the base form
    /// multiplied by `metric_scale`.
    pub fn new(typ: RootSystemType, metric_scale: Q) -> Result<Self> {
        if !metric_scale.is_positive() {
            return Err(Error::OutOfRange(format!(
                "metric_scale must be positive, got {}",
                rational::format_rational(&metric_scale)
            )));
        }
        let (ambient_dim, simple_roots, base_factor) = realization(typ);
        let r = typ.rank;
        let base = |x: &[Q], y: &[Q]| &base_factor * rational::dot(x, y);

        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let v = qi(2) * base(&simple_roots[i], &simple_roots[j])
                    / base(&simple_roots[j], &simple_roots[j]);
                cartan[i][j] = rational::to_i64(&v).ok_or_else(|| {
                    Error::Inconsistent(format!("non-integral Cartan entry for {typ}"))
                })?;
            }
        }

        // Close the simple roots under simple reflections, in simple-root
        // coordinates: s_i(β) = β − ⟨β, α_i^∨⟩ α_i with ⟨β, α_i^∨⟩ = Σ_k c_k C[k][i].
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..r {
            let mut c = vec![0i64; r];
            c[i] = 1;
            seen.insert(c.clone(), ());
            queue.push_back(c);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|k| beta[k] * cartan[k][i]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[i] -= pairing;
                if !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    queue.push_back(img);
                }
            }
        }
        let mut positive_roots_simple: Vec<Vec<i64>> = seen
            .into_keys()
            .filter(|c| c.iter().all(|&x| x >= 0))
            .collect();
        positive_roots_simple.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| a.cmp(b))
        });

        let to_ambient = |c: &[i64]| -> Vec<Q> {
            let mut v = vec![Q::zero(); ambient_dim];
            for (k, &ck) in c.iter().enumerate() {
                if ck != 0 {
                    v = add(&v, &scale(&simple_roots[k], &qi(ck)));
                }
            }
            v
        };
        let positive_roots: Vec<Vec<Q>> =
            positive_roots_simple.iter().map(|c| to_ambient(c)).collect();
        let positive_roots_fw: Vec<Vec<i64>> = positive_roots_simple
            .iter()
            .map(|c| (0..r).map(|j| (0..r).map(|k| c[k] * cartan[k][j]).sum()).collect())
            .collect();

        // α^∨ = 2α/(α,α); in simple-coroot coordinates the coefficient of
        // α_k^∨ is c_k (α_k,α_k)/(α,α).
        let norms: Vec<Q> = simple_roots.iter().map(|a| base(a, a)).collect();
        let positive_coroots: Vec<Vec<i64>> = positive_roots_simple
            .iter()
            .zip(&positive_roots)
            .map(|(c, amb)| {
                let n = base(amb, amb);
                (0..r)
                    .map(|k| {
                        let v = qi(c[k]) * &norms[k] / &n;
                        rational::to_i64(&v).expect("integral coroot coordinates")
                    })
                    .collect()
            })
            .collect();

        let cartan_q: QMat = cartan
            .iter()
            .map(|row| row.iter().map(|&x| qi(x)).collect())
            .collect();
        let cartan_inv = rational::inverse(&cartan_q)
            .ok_or_else(|| Error::Inconsistent("singular Cartan matrix".into()))?;
        let fundamental_weights: Vec<Vec<Q>> = (0..r)
            .map(|i| {
                let mut v = vec![Q::zero(); ambient_dim];
                for k in 0..r {
                    v = add(&v, &scale(&simple_roots[k], &cartan_inv[i][k]));
                }
                v
            })
            .collect();
        let delta = fundamental_weights
            .iter()
            .fold(vec![Q::zero(); ambient_dim], |acc, w| add(&acc, w));

        let gram_fw: QMat = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| &metric_scale * base(&fundamental_weights[i], &fundamental_weights[j]))
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            typ,
            ambient_dim,
            simple_roots,
            positive_roots,
            positive_roots_simple,
            positive_roots_fw,
            positive_coroots,
            cartan,
            cartan_inv_t: rational::transpose(&cartan_inv),
            fundamental_weights,
            delta,
            gram_fw,
            metric_scale,
            base_factor,
        })
    }

    pub fn typ(&self) -> RootSystemType {
        self.typ
    }

    pub fn rank(&self) -> usize {
        self.typ.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn simple_roots(&self) -> &[Vec<Q>] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vec<Q>] {
        &self.positive_roots
    }

    pub fn positive_roots_simple(&self) -> &[Vec<i64>] {
        &self.positive_roots_simple
    }

    pub fn positive_roots_fw(&self) -> &[Vec<i64>] {
        &self.positive_roots_fw
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[Vec<Q>] {
        &self.fundamental_weights
    }

    pub fn delta(&self) -> &[Q] {
        &self.delta
    }

    pub fn gram_fw(&self) -> &QMat {
        &self.gram_fw
    }

    pub fn metric_scale(&self) -> &Q {
        &self.metric_scale
    }

    /// Dynkin labels of `δ`: all ones.
    pub fn delta_fw(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    /// The scaled inner product on the ambient space.
    pub fn inner(&self, x: &[Q], y: &[Q]) -> Result<Q> {
        for v in [x, y] {
            if v.len() != self.ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: self.ambient_dim,
                    got: v.len(),
                });
            }
        }
        Ok(&self.metric_scale * &self.base_factor * rational::dot(x, y))
    }

    /// Inner product of two weights given by (rational) Dynkin labels.
    pub fn inner_fw<T: AsQ>(&self, x: &[T], y: &[T]) -> Q {
        let r = self.rank();
        let mut acc = Q::zero();
        for i in 0..r {
            if x[i].is_zero_q() {
                continue;
            }
            let mut row = Q::zero();
            for j in 0..r {
                if !y[j].is_zero_q() {
                    row += &self.gram_fw[i][j] * y[j].as_q();
                }
            }
            acc += x[i].as_q() * row;
        }
        acc
    }

    pub fn norm_sq_fw<T: AsQ>(&self, x: &[T]) -> Q {
        self.inner_fw(x, x)
    }

    /// Ambient vector of a weight given in Dynkin labels.
    pub fn fw_to_ambient<T: AsQ>(&self, x: &[T]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.ambient_dim];
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero_q() {
                v = add(&v, &scale(&self.fundamental_weights[i], &xi.as_q()));
            }
        }
        v
    }

    /// Dynkin labels `⟨x, α_i^∨⟩` of an ambient vector.
    pub fn ambient_to_fw(&self, x: &[Q]) -> Result<Vec<Q>> {
        if x.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: x.len(),
            });
        }
        Ok(self
            .simple_roots
            .iter()
            .map(|a| qi(2) * rational::dot(x, a) / rational::dot(a, a))
            .collect())
    }

    /// Whether an ambient vector lies in the real span of the roots.
    pub fn in_root_span(&self, x: &[Q]) -> bool {
        let Ok(fw) = self.ambient_to_fw(x) else {
            return false;
        };
        self.fw_to_ambient(&fw) == x
    }

    /// `⟨λ, α^∨⟩` for every positive root, for integral Dynkin labels.
    pub fn coroot_pairings(&self, lambda: &[i64]) -> impl Iterator<Item = i64> + '_ {
        let lambda = lambda.to_vec();
        self.positive_coroots
            .iter()
            .map(move |c| c.iter().zip(&lambda).map(|(a, b)| a * b).sum())
    }

    /// Simple reflection `s_i` on Dynkin labels.
    pub fn reflect_fw(&self, i: usize, lambda: &mut [i64]) {
        let li = lambda[i];
        if li != 0 {
            for (x, c) in lambda.iter_mut().zip(&self.cartan[i]) {
                *x -= li * c;
            }
        }
    }

    /// Simple reflection `s_i` on rational Dynkin labels.
    pub fn reflect_fw_q(&self, i: usize, lambda: &mut [Q]) {
        let li = lambda[i].clone();
        if !li.is_zero() {
            for (x, c) in lambda.iter_mut().zip(&self.cartan[i]) {
                *x -= &li * qi(*c);
            }
        }
    }

    /// Moves integral Dynkin labels into the dominant chamber. Returns the
    /// dominant labels and the reflections in the order they were applied.
    pub fn to_dominant_fw(&self, lambda: &[i64]) -> (Vec<i64>, Vec<usize>) {
        let mut v = lambda.to_vec();
        let mut applied = Vec::new();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            self.reflect_fw(i, &mut v);
            applied.push(i);
        }
        (v, applied)
    }

    /// Dominant representative of the W-orbit of an ambient vector, and a
    /// Weyl element carrying the vector to it.
    pub fn to_dominant(&self, x: &[Q]) -> Result<(Vec<Q>, WeylElement)> {
        let mut v = self.ambient_to_fw(x)?;
        if self.fw_to_ambient(&v) != x {
            return Err(Error::ShapeMismatch(
                "vector is not in the span of the roots".into(),
            ));
        }
        let mut applied = Vec::new();
        while let Some(i) = v.iter().position(|c| c.is_negative()) {
            self.reflect_fw_q(i, &mut v);
            applied.push(i);
        }
        // Applied first means rightmost in the product.
        applied.reverse();
        Ok((self.fw_to_ambient(&v), WeylElement::from_word(self, applied)))
    }

    /// Whether the integral Dynkin labels are in the root lattice.
    pub fn in_root_lattice(&self, lambda: &[i64]) -> bool {
        let lq: Vec<Q> = lambda.iter().map(|&x| qi(x)).collect();
        rational::mat_vec(&self.cartan_inv_t, &lq)
            .iter()
            .all(|c| c.is_integer())
    }

    /// `−w₀` on Dynkin labels, computed as the dominant conjugate of `−λ`.
    pub fn dual_fw(&self, lambda: &[i64]) -> Vec<i64> {
        let neg: Vec<i64> = lambda.iter().map(|x| -x).collect();
        self.to_dominant_fw(&neg).0
    }

    fn reflection_matrix(&self, i: usize) -> QMat {
        let a = &self.simple_roots[i];
        let n = rational::dot(a, a);
        let d = self.ambient_dim;
        (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| {
                        let id = if r == c { Q::one() } else { Q::zero() };
                        id - qi(2) * &a[r] * &a[c] / &n
                    })
                    .collect()
            })
            .collect()
    }

    fn reflection_matrix_fw(&self, i: usize) -> Vec<Vec<i64>> {
        // Column k is s_i(e_k).
        let r = self.rank();
        let mut m = vec![vec![0i64; r]; r];
        for k in 0..r {
            let mut e = vec![0i64; r];
            e[k] = 1;
            self.reflect_fw(i, &mut e);
            for row in 0..r {
                m[row][k] = e[row];
            }
        }
        m
    }

    /// Full Weyl group by breadth-first closure over simple reflections.
    ///
    /// Refuses with [`Error::CapExceeded`] when the known order exceeds
    /// `cap`.
    pub fn weyl_group(&self, cap: u128) -> Result<Vec<WeylElement>> {
        let order = self.typ.weyl_order();
        if order > cap {
            return Err(Error::CapExceeded {
                what: "weyl group order",
                required: order.to_string(),
                cap: cap.to_string(),
            });
        }
        let r = self.rank();
        let refl: Vec<QMat> = (0..r).map(|i| self.reflection_matrix(i)).collect();
        let refl_fw: Vec<Vec<Vec<i64>>> = (0..r).map(|i| self.reflection_matrix_fw(i)).collect();
        let id = WeylElement {
            word: Vec::new(),
            matrix: rational::identity(self.ambient_dim),
            fw_matrix: int_identity(r),
        };
        // w ↦ w(δ) is injective since δ is regular.
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        seen.insert(self.delta_fw(), 0);
        let mut elements = vec![id];
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            head += 1;
            for i in 0..r {
                let mut img = w.apply_fw(&self.delta_fw());
                self.reflect_fw(i, &mut img);
                if seen.contains_key(&img) {
                    continue;
                }
                seen.insert(img, elements.len());
                let mut word = vec![i];
                word.extend_from_slice(&w.word);
                elements.push(WeylElement {
                    word,
                    matrix: rational::mat_mul(&refl[i], &w.matrix),
                    fw_matrix: int_mat_mul(&refl_fw[i], &w.fw_matrix),
                });
            }
        }
        if elements.len() as u128 != order {
            return Err(Error::Inconsistent(format!(
                "enumerated {} Weyl elements, expected {order}",
                elements.len()
            )));
        }
        Ok(elements)
    }

    /// Squared length of the longest roots (2 · metric_scale).
    pub fn long_root_norm_sq(&self) -> Q {
        self.positive_roots
            .iter()
            .map(|a| self.inner(a, a).expect("ambient root"))
            .max()
            .unwrap_or_else(Q::zero)
    }
}

fn int_identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn int_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.len();
    let m = if n == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| (0..m).map(|j| (0..n).map(|k| row[k] * b[k][j]).sum()).collect())
        .collect()
}

/// Scalars usable as weight coordinates.
pub trait AsQ {
    fn as_q(&self) -> Q;
    fn is_zero_q(&self) -> bool;
}

impl AsQ for i64 {
    fn as_q(&self) -> Q {
        qi(*self)
    }
    fn is_zero_q(&self) -> bool {
        *self == 0
    }
}

impl AsQ for Q {
    fn as_q(&self) -> Q {
        self.clone()
    }
    fn is_zero_q(&self) -> bool {
        self.is_zero()
    }
}

/// An element of the Weyl group: a word in simple reflections together
/// with its ambient matrix `S_{w[0]} · S_{w[1]} ⋯` and the same map in
/// Dynkin-label coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    word: Vec<usize>,
    matrix: QMat,
    fw_matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn from_word(rs: &RootSystem, word: Vec<usize>) -> Self {
        let mut matrix = rational::identity(rs.ambient_dim);
        let mut fw_matrix = int_identity(rs.rank());
        for &i in &word {
            matrix = rational::mat_mul(&matrix, &rs.reflection_matrix(i));
            fw_matrix = int_mat_mul(&fw_matrix, &rs.reflection_matrix_fw(i));
        }
        WeylElement {
            word,
            matrix,
            fw_matrix,
        }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn matrix(&self) -> &QMat {
        &self.matrix
    }

    pub fn fw_matrix(&self) -> &[Vec<i64>] {
        &self.fw_matrix
    }

    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        rational::mat_vec(&self.matrix, x)
    }

    pub fn apply_fw(&self, lambda: &[i64]) -> Vec<i64> {
        self.fw_matrix
            .iter()
            .map(|row| row.iter().zip(lambda).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn apply_fw_q(&self, lambda: &[Q]) -> Vec<Q> {
        self.fw_matrix
            .iter()
            .map(|row| row.iter().zip(lambda).map(|(a, b)| qi(*a) * b).sum())
            .collect()
    }

    /// `(-1)^{length of the word}`; the word need not be reduced, the sign
    /// is still the determinant.
    pub fn sign(&self) -> i64 {
        if self.word.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::new(RootSystemType::new(f, r).unwrap(), Q::one()).unwrap()
    }

    fn all_types() -> Vec<RootSystem> {
        let mut v = Vec::new();
        for r in 1..=4 {
            v.push(rs(Family::A, r));
        }
        for r in 2..=4 {
            v.push(rs(Family::B, r));
            v.push(rs(Family::C, r));
        }
        for r in 3..=5 {
            v.push(rs(Family::D, r));
        }
        for r in 6..=8 {
            v.push(rs(Family::E, r));
        }
        v.push(rs(Family::F, 4));
        v.push(rs(Family::G, 2));
        v
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootSystemType::new(Family::A, 0).is_err());
        assert!(RootSystemType::new(Family::B, 1).is_err());
        assert!(RootSystemType::new(Family::D, 2).is_err());
        assert!(RootSystemType::new(Family::E, 5).is_err());
        assert!(RootSystemType::new(Family::E, 9).is_err());
        assert!(RootSystemType::new(Family::F, 3).is_err());
        assert!(RootSystemType::new(Family::G, 3).is_err());
        assert!(RootSystem::new(RootSystemType::new(Family::A, 1).unwrap(), qi(0)).is_err());
    }

    #[test]
    fn a1_normalization() {
        let a1 = rs(Family::A, 1);
        let alpha = &a1.simple_roots()[0];
        assert_eq!(a1.inner(alpha, alpha).unwrap(), qi(2));
        assert_eq!(a1.delta(), &scale(alpha, &q(1, 2))[..]);
        assert_eq!(a1.inner(a1.delta(), a1.delta()).unwrap(), q(1, 2));
        let a1s = RootSystem::new(a1.typ(), qi(2)).unwrap();
        assert_eq!(a1s.inner(a1s.delta(), a1s.delta()).unwrap(), qi(1));
    }

    #[test]
    fn a2_gram() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.inner(a2.delta(), a2.delta()).unwrap(), qi(2));
        assert_eq!(
            a2.gram_fw(),
            &vec![vec![q(2, 3), q(1, 3)], vec![q(1, 3), q(2, 3)]]
        );
        assert_eq!(a2.inner_fw(&[1i64, 1], &[1, 1]), qi(2));
    }

    #[test]
    fn g2_root_lengths() {
        let g2 = rs(Family::G, 2);
        assert_eq!(g2.positive_roots().len(), 6);
        let mut norms: Vec<Q> = g2
            .positive_roots()
            .iter()
            .map(|a| g2.inner(a, a).unwrap())
            .collect();
        norms.sort();
        norms.dedup();
        assert_eq!(norms, vec![q(2, 3), qi(2)]);
    }

    #[test]
    fn root_counts() {
        let expect = |f, r| -> usize {
            match (f, r) {
                (Family::A, n) => n * (n + 1) / 2,
                (Family::B, n) | (Family::C, n) => n * n,
                (Family::D, n) => n * (n - 1),
                (Family::E, 6) => 36,
                (Family::E, 7) => 63,
                (Family::E, _) => 120,
                (Family::F, _) => 24,
                (Family::G, _) => 6,
            }
        };
        for s in all_types() {
            assert_eq!(
                s.positive_roots().len(),
                expect(s.typ().family(), s.rank()),
                "{}",
                s.typ()
            );
        }
    }

    #[test]
    fn structural_invariants() {
        for s in all_types() {
            // Cartan diagonal and long-root normalization.
            for i in 0..s.rank() {
                assert_eq!(s.cartan_matrix()[i][i], 2);
            }
            assert_eq!(s.long_root_norm_sq(), qi(2), "{}", s.typ());
            // δ = half sum of positive roots = sum of fundamental weights.
            let half_sum = s
                .positive_roots()
                .iter()
                .fold(vec![Q::zero(); s.ambient_dim()], |acc, a| add(&acc, a));
            assert_eq!(scale(&half_sum, &q(1, 2)), s.delta().to_vec(), "{}", s.typ());
            // δ strictly dominant.
            for a in s.simple_roots() {
                assert!(s.inner(s.delta(), a).unwrap().is_positive());
            }
            // Fundamental weights are dual to simple coroots.
            for (i, w) in s.fundamental_weights().iter().enumerate() {
                let labels = s.ambient_to_fw(w).unwrap();
                for (j, l) in labels.iter().enumerate() {
                    assert_eq!(*l, qi(i64::from(i == j)));
                }
            }
            // Positive roots in Dynkin labels agree with the ambient ones.
            for (fw, amb) in s.positive_roots_fw().iter().zip(s.positive_roots()) {
                assert_eq!(&s.fw_to_ambient(fw), amb);
            }
        }
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(rs(Family::A, 1).weyl_group(DEFAULT_WEYL_CAP).unwrap().len(), 2);
        assert_eq!(rs(Family::A, 2).weyl_group(DEFAULT_WEYL_CAP).unwrap().len(), 6);
        assert_eq!(rs(Family::B, 2).weyl_group(DEFAULT_WEYL_CAP).unwrap().len(), 8);
        assert_eq!(rs(Family::G, 2).weyl_group(DEFAULT_WEYL_CAP).unwrap().len(), 12);
        assert_eq!(rs(Family::F, 4).weyl_group(DEFAULT_WEYL_CAP).unwrap().len(), 1152);
        let err = rs(Family::E, 6).weyl_group(DEFAULT_WEYL_CAP).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { ref required, .. } if required == "51840"));
    }

    #[test]
    fn weyl_elements_are_consistent_isometries() {
        for s in [rs(Family::A, 2), rs(Family::B, 3), rs(Family::G, 2), rs(Family::C, 3)] {
            let w = s.weyl_group(DEFAULT_WEYL_CAP).unwrap();
            let roots: Vec<Vec<Q>> = s
                .positive_roots()
                .iter()
                .flat_map(|a| [a.clone(), scale(a, &qi(-1))])
                .collect();
            for el in &w {
                assert_eq!(el, &WeylElement::from_word(&s, el.word().to_vec()));
                // Gramian check on the simple roots.
                for a in s.simple_roots() {
                    for b in s.simple_roots() {
                        assert_eq!(
                            s.inner(&el.apply(a), &el.apply(b)).unwrap(),
                            s.inner(a, b).unwrap()
                        );
                    }
                }
                for a in &roots {
                    assert!(roots.contains(&el.apply(a)));
                }
                for fw in [vec![1i64; s.rank()], {
                    let mut v = vec![0i64; s.rank()];
                    v[0] = 3;
                    v
                }] {
                    assert_eq!(
                        s.fw_to_ambient(&el.apply_fw(&fw)),
                        el.apply(&s.fw_to_ambient(&fw))
                    );
                }
            }
        }
    }

    #[test]
    fn to_dominant_examples() {
        let a2 = rs(Family::A, 2);
        let x = a2.fw_to_ambient(&[-1i64, 2]);
        let (d, w) = a2.to_dominant(&x).unwrap();
        assert_eq!(a2.ambient_to_fw(&d).unwrap(), vec![qi(1), qi(1)]);
        assert!(w.len() <= 3);
        assert_eq!(w.apply(&x), d);

        let dom = a2.fw_to_ambient(&[2i64, 5]);
        let (d, w) = a2.to_dominant(&dom).unwrap();
        assert_eq!(d, dom);
        assert!(w.is_empty());

        let a1 = rs(Family::A, 1);
        let x = a1.fw_to_ambient(&[-3i64]);
        let (d, w) = a1.to_dominant(&x).unwrap();
        assert_eq!(a1.ambient_to_fw(&d).unwrap(), vec![qi(3)]);
        assert_eq!(w.word(), &[0]);
    }

    #[test]
    fn to_dominant_is_w_invariant() {
        // Oracle: enumerate the full orbit and compare.
        for s in [rs(Family::A, 2), rs(Family::B, 2), rs(Family::G, 2)] {
            let w = s.weyl_group(DEFAULT_WEYL_CAP).unwrap();
            for lam in [[2i64, -3], [0, 1], [-4, -1], [5, 0]] {
                let x = s.fw_to_ambient(&lam);
                let (d, _) = s.to_dominant(&x).unwrap();
                let (d2, _) = s.to_dominant(&d).unwrap();
                assert_eq!(d, d2);
                let orbit: Vec<Vec<Q>> = w.iter().map(|e| e.apply(&x)).collect();
                let dominant_in_orbit: Vec<&Vec<Q>> = orbit
                    .iter()
                    .filter(|v| s.ambient_to_fw(v).unwrap().iter().all(|c| !c.is_negative()))
                    .collect();
                assert!(dominant_in_orbit.iter().all(|v| **v == d));
                for y in &orbit {
                    assert_eq!(s.to_dominant(y).unwrap().0, d);
                }
            }
        }
    }

    #[test]
    fn root_lattice_index_is_det_cartan() {
        let a2 = rs(Family::A, 2);
        let mut count = 0;
        for a in 0..3 {
            for b in 0..3 {
                if a2.in_root_lattice(&[a, b]) {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 3);
        assert!(a2.in_root_lattice(&[1, 1]));
        assert!(!a2.in_root_lattice(&[1, 0]));
        let g2 = rs(Family::G, 2);
        assert!(g2.in_root_lattice(&[1, 0]) && g2.in_root_lattice(&[0, 1]));
    }

    #[test]
    fn duals() {
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.dual_fw(&[8, 0]), vec![0, 8]);
        let b2 = rs(Family::B, 2);
        assert_eq!(b2.dual_fw(&[1, 0]), vec![1, 0]);
        let d4 = rs(Family::D, 4);
        assert_eq!(d4.dual_fw(&[0, 0, 1, 0]), vec![0, 0, 1, 0]);
        let d5 = rs(Family::D, 5);
        assert_eq!(d5.dual_fw(&[0, 0, 0, 1, 0]), vec![0, 0, 0, 0, 1]);
        let e6 = rs(Family::E, 6);
        let d = e6.dual_fw(&[1, 0, 0, 0, 0, 0]);
        assert_ne!(d, vec![1, 0, 0, 0, 0, 0]);
    }
}

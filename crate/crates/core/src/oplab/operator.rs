//! Explicit irreducibles of `SU(2)^c × Tⁿ` and the operators
//! `D^V(κ) = −Σ κ_ij ρ(Y_i)ρ(Y_j)`.
//!
//! Each `su(2)` factor uses `Y_k = −iσ_k/2`, acting on binary forms of
//! degree `m` by derivation in the monomial basis `x^{m−k} y^k`. The
//! basis is not unitary; the invariant Hermitian form is diagonal with
//! weights `1/binom(m, k)`, and `D` is self-adjoint for it.

use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use super::gaussian::{self, im, re, GMat, GQ};
use super::poly::{resultant, RationalPoly};
use crate::error::{Error, Result};
use crate::rational::{self, exact_mat, q, qi, ExactQ, QMat, Q};
use crate::reps::RepType;

/// `SU(2)^c × Tⁿ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub su2_copies: usize,
    pub torus_rank: usize,
}

impl GroupSpec {
    pub fn new(su2_copies: usize, torus_rank: usize) -> Result<Self> {
        if su2_copies + torus_rank == 0 {
            return Err(Error::OutOfRange("group must have positive dimension".into()));
        }
        Ok(GroupSpec { su2_copies, torus_rank })
    }

    /// `dim 𝔤 = 3c + n`.
    pub fn lie_dim(&self) -> usize {
        3 * self.su2_copies + self.torus_rank
    }

    /// All irreducibles with `m_i ≤ cap` and `|z_t| ≤ cap`, in canonical order.
    pub fn irreps_up_to(&self, cap: u32) -> Vec<IrrepSpec> {
        let mut out = vec![IrrepSpec { spins: vec![], torus_char: vec![] }];
        for _ in 0..self.su2_copies {
            out = out
                .into_iter()
                .flat_map(|r| {
                    (0..=cap).map(move |m| {
                        let mut s = r.clone();
                        s.spins.push(m);
                        s
                    })
                })
                .collect();
        }
        let cap = cap as i64;
        for _ in 0..self.torus_rank {
            out = out
                .into_iter()
                .flat_map(|r| {
                    (-cap..=cap).map(move |z| {
                        let mut s = r.clone();
                        s.torus_char.push(z);
                        s
                    })
                })
                .collect();
        }
        out.sort();
        out
    }
}

/// `V_{m₁} ⊠ … ⊠ V_{m_c} ⊗ ℂ_z`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IrrepSpec {
    pub spins: Vec<u32>,
    pub torus_char: Vec<i64>,
}

impl IrrepSpec {
    pub fn new(g: &GroupSpec, spins: Vec<u32>, torus_char: Vec<i64>) -> Result<Self> {
        if spins.len() != g.su2_copies || torus_char.len() != g.torus_rank {
            return Err(Error::ShapeMismatch(format!(
                "representation needs {} spins and {} torus entries",
                g.su2_copies, g.torus_rank
            )));
        }
        Ok(IrrepSpec { spins, torus_char })
    }

    pub fn spin(m: u32) -> Self {
        IrrepSpec { spins: vec![m], torus_char: vec![] }
    }

    pub fn character(z: Vec<i64>) -> Self {
        IrrepSpec { spins: vec![], torus_char: z }
    }

    pub fn dim(&self) -> usize {
        self.spins.iter().map(|&m| m as usize + 1).product()
    }

    pub fn dual(&self) -> IrrepSpec {
        IrrepSpec {
            spins: self.spins.clone(),
            torus_char: self.torus_char.iter().map(|z| -z).collect(),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.torus_char.iter().all(|&z| z == 0)
    }

    /// A nontrivial character makes the representation complex; otherwise
    /// the type is quaternionic exactly when an odd number of factors have
    /// half-integral spin.
    pub fn rep_type(&self) -> RepType {
        if !self.is_self_dual() {
            RepType::Complex
        } else if self.spins.iter().filter(|&&m| m % 2 == 1).count() % 2 == 1 {
            RepType::Quaternionic
        } else {
            RepType::Real
        }
    }

    fn check(&self, g: &GroupSpec) -> Result<()> {
        if self.spins.len() != g.su2_copies || self.torus_char.len() != g.torus_rank {
            return Err(Error::ShapeMismatch(format!(
                "representation {self} does not match group SU(2)^{} x T^{}",
                g.su2_copies, g.torus_rank
            )));
        }
        Ok(())
    }
}

impl fmt::Display for IrrepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.spins.iter().map(u32::to_string).collect();
        let z: Vec<String> = self.torus_char.iter().map(i64::to_string).collect();
        match (s.is_empty(), z.is_empty()) {
            (false, true) => write!(f, "m=({})", s.join(",")),
            (true, false) => write!(f, "z=({})", z.join(",")),
            _ => write!(f, "m=({});z=({})", s.join(","), z.join(",")),
        }
    }
}

/// A symmetric rational `N × N` matrix `κ`. Positive definiteness is a
/// separate predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricParam {
    kappa: QMat,
}

impl MetricParam {
    pub fn new(kappa: QMat) -> Result<Self> {
        let n = kappa.len();
        if n == 0 || kappa.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("kappa must be a nonempty square matrix".into()));
        }
        if !rational::is_symmetric(&kappa) {
            return Err(Error::ShapeMismatch("kappa must be symmetric".into()));
        }
        Ok(MetricParam { kappa })
    }

    pub fn diag(values: &[Q]) -> Result<Self> {
        let mut k = rational::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            k[i][i] = v.clone();
        }
        Self::new(k)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(rational::identity(n))
    }

    /// Sparse entries `(i, j, value)`; each entry also sets `(j, i)`.
    /// Contradicting duplicates are rejected.
    pub fn from_entries(n: usize, entries: &[(usize, usize, Q)]) -> Result<Self> {
        let mut k: Vec<Vec<Option<Q>>> = vec![vec![None; n]; n];
        for (i, j, v) in entries {
            if *i >= n || *j >= n {
                return Err(Error::OutOfRange(format!("entry ({i},{j}) outside {n}x{n}")));
            }
            for (a, b) in [(*i, *j), (*j, *i)] {
                match &k[a][b] {
                    Some(old) if old != v => {
                        return Err(Error::ShapeMismatch(format!(
                            "conflicting values at ({a},{b})"
                        )))
                    }
                    _ => k[a][b] = Some(v.clone()),
                }
            }
        }
        Self::new(
            k.into_iter()
                .map(|r| r.into_iter().map(|x| x.unwrap_or_else(Q::zero)).collect())
                .collect(),
        )
    }

    pub fn matrix(&self) -> &QMat {
        &self.kappa
    }

    pub fn n(&self) -> usize {
        self.kappa.len()
    }

    pub fn is_positive_definite(&self) -> bool {
        rational::is_positive_definite(&self.kappa)
    }

    pub fn scaled(&self, s: &Q) -> Self {
        MetricParam {
            kappa: self.kappa.iter().map(|r| r.iter().map(|x| x * s).collect()).collect(),
        }
    }
}

impl Serialize for MetricParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MetricParam", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("kappa", &exact_mat(&self.kappa))?;
        st.end()
    }
}

/// Matrices `ρ(Y_1), …, ρ(Y_N)`: three per `su(2)` factor, then one
/// scalar `i·z_t` per torus coordinate.
pub fn irrep_matrices(g: &GroupSpec, rep: &IrrepSpec) -> Result<Vec<GMat>> {
    rep.check(g)?;
    let factor_dims: Vec<usize> = rep.spins.iter().map(|&m| m as usize + 1).collect();
    let dim = rep.dim();
    let mut out = Vec::with_capacity(g.lie_dim());
    for (f, &m) in rep.spins.iter().enumerate() {
        let left: usize = factor_dims[..f].iter().product();
        let right: usize = factor_dims[f + 1..].iter().product();
        for y in su2_basis() {
            let local = symmetric_power(&y, m as usize);
            out.push(gaussian::kron(
                &gaussian::kron(&gaussian::identity(left), &local),
                &gaussian::identity(right),
            ));
        }
    }
    for &z in &rep.torus_char {
        out.push(gaussian::scalar(dim, &im(qi(z))));
    }
    Ok(out)
}

/// `−iσ₁/2, −iσ₂/2, −iσ₃/2`.
fn su2_basis() -> [GMat; 3] {
    let h = q(1, 2);
    let z = GQ::zero;
    [
        vec![vec![z(), im(-h.clone())], vec![im(-h.clone()), z()]],
        vec![vec![z(), re(-h.clone())], vec![re(h.clone()), z()]],
        vec![vec![im(-h.clone()), z()], vec![z(), im(h)]],
    ]
}

/// Action of a 2×2 matrix on degree-`m` forms, basis `x^{m−k} y^k`,
/// extended from `A x = a₀₀ x + a₁₀ y`, `A y = a₀₁ x + a₁₁ y` by the
/// Leibniz rule.
fn symmetric_power(a: &[Vec<GQ>], m: usize) -> GMat {
    let mut out = gaussian::zeros(m + 1);
    for k in 0..=m {
        let (px, py) = ((m - k) as i64, k as i64);
        // x-derivative part: (m−k) x^{m−k−1} y^k (a₀₀ x + a₁₀ y)
        if px > 0 {
            out[k][k] += &a[0][0] * re(qi(px));
            out[k + 1][k] += &a[1][0] * re(qi(px));
        }
        // y-derivative part: k x^{m−k} y^{k−1} (a₀₁ x + a₁₁ y)
        if py > 0 {
            out[k - 1][k] += &a[0][1] * re(qi(py));
            out[k][k] += &a[1][1] * re(qi(py));
        }
    }
    out
}

/// Diagonal weights of the invariant Hermitian form in the monomial basis.
pub fn invariant_weights(rep: &IrrepSpec) -> Vec<Q> {
    let mut w = vec![Q::one()];
    for &m in &rep.spins {
        let m = m as usize;
        let local: Vec<Q> = (0..=m).map(|k| Q::one() / binomial(m, k)).collect();
        w = w
            .iter()
            .flat_map(|a| local.iter().map(move |b| a * b))
            .collect();
    }
    w
}

fn binomial(n: usize, k: usize) -> Q {
    (0..k).fold(Q::one(), |acc, i| acc * qi((n - i) as i64) / qi((i + 1) as i64))
}

/// `D^V(κ)` with its representation, `κ`, and invariant form weights.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactOperator {
    pub matrix: GMat,
    pub rep: IrrepSpec,
    pub kappa: MetricParam,
    pub weights: Vec<Q>,
}

impl ExactOperator {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// `D† W = W D` for the invariant form `W`.
    pub fn is_self_adjoint(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                self.matrix[j][i].conj() * re(self.weights[j].clone())
                    == &self.matrix[i][j] * re(self.weights[i].clone())
            })
        })
    }
}

pub fn build_operator(g: &GroupSpec, rep: &IrrepSpec, kappa: &MetricParam) -> Result<ExactOperator> {
    if kappa.n() != g.lie_dim() {
        return Err(Error::ShapeMismatch(format!(
            "kappa is {}x{}, group needs {}x{}",
            kappa.n(),
            kappa.n(),
            g.lie_dim(),
            g.lie_dim()
        )));
    }
    let ms = irrep_matrices(g, rep)?;
    let dim = rep.dim();
    let mut d = gaussian::zeros(dim);
    for (i, mi) in ms.iter().enumerate() {
        for (j, mj) in ms.iter().enumerate() {
            let k = &kappa.matrix()[i][j];
            if k.is_zero() {
                continue;
            }
            gaussian::add_scaled(&mut d, &gaussian::mul(mi, mj), &re(-k.clone()));
        }
    }
    Ok(ExactOperator {
        matrix: d,
        rep: rep.clone(),
        kappa: kappa.clone(),
        weights: invariant_weights(rep),
    })
}

/// Characteristic polynomial `det(t − D)` by Faddeev–LeVerrier.
pub fn char_poly(op: &ExactOperator) -> Result<RationalPoly> {
    char_poly_of(&op.matrix)
}

pub fn char_poly_of(a: &[Vec<GQ>]) -> Result<RationalPoly> {
    let n = a.len();
    let mut coeffs = vec![GQ::zero(); n + 1];
    coeffs[n] = GQ::one();
    let mut m = gaussian::zeros(n);
    for k in 1..=n {
        let mut next = gaussian::mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let t = gaussian::trace(&gaussian::mul(a, &m));
        coeffs[n - k] = -t * re(Q::one() / qi(k as i64));
    }
    let mut out = Vec::with_capacity(n + 1);
    for c in coeffs {
        if !c.im.is_zero() {
            return Err(Error::Inconsistent(format!(
                "characteristic polynomial has imaginary coefficient {}",
                c.im
            )));
        }
        out.push(c.re);
    }
    Ok(RationalPoly::new(out))
}

/// `a_{V₁,V₂} = res(p₁, p₂)`, `b = res(p, p′)` for real or complex type,
/// `c = res(p, p″)` for quaternionic type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbcValues {
    pub a: ExactQ,
    pub b1: Option<ExactQ>,
    pub b2: Option<ExactQ>,
    pub c1: Option<ExactQ>,
    pub c2: Option<ExactQ>,
}

/// The discriminant-type value required for one representation: `("b", res(p, p′))`
/// or `("c", res(p, p″))`.
pub fn bc_value(rep: &IrrepSpec, p: &RationalPoly) -> Result<(&'static str, Q)> {
    match rep.rep_type() {
        RepType::Quaternionic => Ok(("c", resultant(p, &p.derivative().derivative())?)),
        _ => Ok(("b", resultant(p, &p.derivative())?)),
    }
}

pub fn abc_values(g: &GroupSpec, v1: &IrrepSpec, v2: &IrrepSpec, kappa: &MetricParam) -> Result<AbcValues> {
    let p1 = char_poly(&build_operator(g, v1, kappa)?)?;
    let p2 = char_poly(&build_operator(g, v2, kappa)?)?;
    let a = resultant(&p1, &p2)?;
    let split = |rep: &IrrepSpec, p: &RationalPoly| -> Result<(Option<ExactQ>, Option<ExactQ>)> {
        let (kind, v) = bc_value(rep, p)?;
        Ok(if kind == "b" { (Some(ExactQ(v)), None) } else { (None, Some(ExactQ(v))) })
    };
    let (b1, c1) = split(v1, &p1)?;
    let (b2, c2) = split(v2, &p2)?;
    Ok(AbcValues { a: ExactQ(a), b1, b2, c1, c2 })
}

/// Exact eigenvalue data of one operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSpectrum {
    pub rep: IrrepSpec,
    pub char_poly: RationalPoly,
    /// Square-free factors with multiplicity and isolating intervals of
    /// their real roots.
    pub factors: Vec<ExactFactor>,
    pub all_real: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactFactor {
    pub factor: RationalPoly,
    pub multiplicity: usize,
    pub roots: Vec<(Q, Q)>,
}

impl ExactSpectrum {
    /// Root intervals with multiplicity, sorted by lower end.
    pub fn roots_with_multiplicity(&self) -> Vec<((Q, Q), usize)> {
        let mut out: Vec<((Q, Q), usize)> = self
            .factors
            .iter()
            .flat_map(|f| f.roots.iter().map(move |r| (r.clone(), f.multiplicity)))
            .collect();
        out.sort();
        out
    }
}

/// Square-free decomposition plus root isolation to the given width.
/// A self-adjoint operator must have only real roots; anything else is
/// reported as an internal inconsistency.
pub fn exact_spectrum(op: &ExactOperator, width: &Q) -> Result<ExactSpectrum> {
    let p = char_poly(op)?;
    let mut factors = Vec::new();
    let mut all_real = true;
    for (f, k) in p.square_free_decomposition()? {
        let roots = f.isolate_real_roots(width);
        if roots.len() != f.degree().unwrap_or(0) {
            all_real = false;
        }
        factors.push(ExactFactor { factor: f, multiplicity: k, roots });
    }
    if !all_real {
        return Err(Error::Inconsistent(format!(
            "operator on {} has non-real eigenvalues",
            op.rep
        )));
    }
    Ok(ExactSpectrum { rep: op.rep.clone(), char_poly: p, factors, all_real })
}

impl Serialize for ExactSpectrum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Root {
            lower: ExactQ,
            upper: ExactQ,
            exact: bool,
            multiplicity: usize,
        }
        #[derive(Serialize)]
        struct Factor {
            coefficients: Vec<ExactQ>,
            multiplicity: usize,
        }
        let mut st = s.serialize_struct("ExactSpectrum", 6)?;
        st.serialize_field("rep", &self.rep.to_string())?;
        st.serialize_field("dim", &self.rep.dim())?;
        st.serialize_field("rep_type", &self.rep.rep_type())?;
        st.serialize_field("char_poly", &rational::exact_vec(self.char_poly.coeffs()))?;
        st.serialize_field(
            "factors",
            &self
                .factors
                .iter()
                .map(|f| Factor {
                    coefficients: rational::exact_vec(f.factor.coeffs()),
                    multiplicity: f.multiplicity,
                })
                .collect::<Vec<_>>(),
        )?;
        st.serialize_field(
            "roots",
            &self
                .roots_with_multiplicity()
                .into_iter()
                .map(|((lo, hi), m)| Root {
                    exact: lo == hi,
                    lower: ExactQ(lo),
                    upper: ExactQ(hi),
                    multiplicity: m,
                })
                .collect::<Vec<_>>(),
        )?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn su2() -> GroupSpec {
        GroupSpec::new(1, 0).unwrap()
    }

    fn diag(v: &[i64]) -> MetricParam {
        MetricParam::diag(&v.iter().map(|&x| qi(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn spin_half_matrices() {
        let ms = irrep_matrices(&su2(), &IrrepSpec::spin(1)).unwrap();
        assert_eq!(ms.len(), 3);
        let minus_quarter = gaussian::scalar(2, &re(q(-1, 4)));
        for m in &ms {
            assert_eq!(gaussian::mul(m, m), minus_quarter);
        }
        // Lie bracket [Y₁, Y₂] = Y₃.
        let br = {
            let a = gaussian::mul(&ms[0], &ms[1]);
            let b = gaussian::mul(&ms[1], &ms[0]);
            let mut d = a;
            gaussian::add_scaled(&mut d, &b, &re(-Q::one()));
            d
        };
        assert_eq!(br, ms[2]);
    }

    #[test]
    fn brackets_hold_in_higher_spin() {
        for m in 0..5 {
            let ms = irrep_matrices(&su2(), &IrrepSpec::spin(m)).unwrap();
            for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                let mut d = gaussian::mul(&ms[i], &ms[j]);
                gaussian::add_scaled(&mut d, &gaussian::mul(&ms[j], &ms[i]), &re(-Q::one()));
                assert_eq!(d, ms[k]);
            }
        }
    }

    #[test]
    fn spin_one_weights() {
        let ms = irrep_matrices(&su2(), &IrrepSpec::spin(2)).unwrap();
        let diag: Vec<GQ> = (0..3).map(|i| ms[2][i][i].clone()).collect();
        assert_eq!(diag, vec![im(qi(-1)), GQ::zero(), im(qi(1))]);
        let torus = GroupSpec::new(0, 1).unwrap();
        let t = irrep_matrices(&torus, &IrrepSpec::character(vec![3])).unwrap();
        assert_eq!(t, vec![vec![vec![im(qi(3))]]]);
    }

    #[test]
    fn operator_examples() {
        let d = build_operator(&su2(), &IrrepSpec::spin(1), &diag(&[1, 2, 3])).unwrap();
        assert_eq!(d.matrix, gaussian::scalar(2, &re(q(3, 2))));
        let p = char_poly(&d).unwrap();
        assert_eq!(p, RationalPoly::from_roots(&[q(3, 2), q(3, 2)]));
        let d = build_operator(&su2(), &IrrepSpec::spin(2), &diag(&[1, 2, 3])).unwrap();
        assert!(d.is_self_adjoint());
        assert_eq!(char_poly(&d).unwrap(), RationalPoly::from_roots(&[qi(3), qi(4), qi(5)]));
        let d = build_operator(&su2(), &IrrepSpec::spin(2), &MetricParam::identity(3).unwrap()).unwrap();
        assert_eq!(d.matrix, gaussian::scalar(3, &re(qi(2))));
        let torus = GroupSpec::new(0, 1).unwrap();
        let k = MetricParam::diag(&[q(2, 7)]).unwrap();
        let d = build_operator(&torus, &IrrepSpec::character(vec![3]), &k).unwrap();
        assert_eq!(char_poly(&d).unwrap(), RationalPoly::new(vec![q(-18, 7), Q::one()]));
        assert!(build_operator(&su2(), &IrrepSpec::spin(1), &diag(&[1, 2])).is_err());
        assert!(build_operator(&torus, &IrrepSpec::spin(1), &k).is_err());
    }

    #[test]
    fn abc_examples() {
        let k = diag(&[1, 2, 3]);
        let v = abc_values(&su2(), &IrrepSpec::spin(1), &IrrepSpec::spin(2), &k).unwrap();
        assert_eq!(v.a, ExactQ(q(11025, 64)));
        assert_eq!(v.c1, Some(ExactQ(qi(4))));
        assert_eq!(v.b1, None);
        assert_eq!(v.b2.as_ref().map(|b| b.0.clone() * b.0.clone()), Some(qi(16)));
        assert_eq!(v.c2, None);
    }

    #[test]
    fn casimir_at_identity() {
        for m in 0..7u32 {
            let d = build_operator(&su2(), &IrrepSpec::spin(m), &MetricParam::identity(3).unwrap()).unwrap();
            let c = q((m * (m + 2)) as i64, 4);
            assert_eq!(d.matrix, gaussian::scalar(m as usize + 1, &re(c)));
        }
    }

    #[test]
    fn types_and_duals() {
        assert_eq!(IrrepSpec::spin(1).rep_type(), RepType::Quaternionic);
        assert_eq!(IrrepSpec::spin(2).rep_type(), RepType::Real);
        let two = IrrepSpec { spins: vec![1, 1], torus_char: vec![] };
        assert_eq!(two.rep_type(), RepType::Real);
        let z = IrrepSpec::character(vec![1, -2]);
        assert_eq!(z.rep_type(), RepType::Complex);
        assert_eq!(z.dual(), IrrepSpec::character(vec![-1, 2]));
        assert_eq!(GroupSpec::new(1, 1).unwrap().irreps_up_to(2).len(), 15);
        assert!(GroupSpec::new(0, 0).is_err());
    }

    #[test]
    fn products_and_cross_terms() {
        let g = GroupSpec::new(1, 1).unwrap();
        let rep = IrrepSpec { spins: vec![2], torus_char: vec![1] };
        let mut k = rational::identity(4);
        k[0][3] = q(1, 5);
        k[3][0] = q(1, 5);
        k[1][2] = q(1, 3);
        k[2][1] = q(1, 3);
        let k = MetricParam::new(k).unwrap();
        let d = build_operator(&g, &rep, &k).unwrap();
        assert!(d.is_self_adjoint());
        let s = exact_spectrum(&d, &q(1, 1_000_000)).unwrap();
        assert!(s.all_real);
        let g2 = GroupSpec::new(2, 0).unwrap();
        let rep = IrrepSpec { spins: vec![1, 2], torus_char: vec![] };
        let mut k = rational::identity(6);
        k[2][4] = q(1, 4);
        k[4][2] = q(1, 4);
        let d = build_operator(&g2, &rep, &MetricParam::new(k).unwrap()).unwrap();
        assert_eq!(d.dim(), 6);
        assert!(d.is_self_adjoint());
    }

    #[test]
    fn metric_entries() {
        let k = MetricParam::from_entries(2, &[(0, 0, qi(1)), (0, 1, q(1, 2)), (1, 1, qi(2))]).unwrap();
        assert_eq!(k.matrix()[1][0], q(1, 2));
        assert!(k.is_positive_definite());
        assert!(MetricParam::from_entries(2, &[(0, 1, qi(1)), (1, 0, qi(2))]).is_err());
        assert!(MetricParam::new(vec![vec![qi(1), qi(2)], vec![qi(3), qi(1)]]).is_err());
        assert!(!diag(&[1, -1]).is_positive_definite());
    }
}

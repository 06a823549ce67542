//! Finite-dimensional irreducibles by highest weight: dimensions, weight
//! multiplicities, tensor and exterior-power decompositions, the
//! real/complex/quaternionic trichotomy and isotypic invariant counts.
//!
//! Characters are handled as maps from Dynkin labels to multiplicities.
//! A W-invariant character is split into irreducibles with the signed
//! reflection rule: every weight `β` contributes `±m(β)` to the
//! irreducible with highest weight `w(β + δ) − δ`, where `w` moves
//! `β + δ` into the dominant chamber; weights with `β + δ` on a wall
//! contribute nothing.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, qi, Q};
use crate::rootsys::RootSystem;
use crate::weights::{LatticeChoice, Weight};

/// Integer character: Dynkin labels to (signed) multiplicities.
pub type Character = HashMap<Vec<i64>, i64>;

/// The irreducible with a given dominant highest weight.
#[derive(Clone, Debug)]
pub struct RepLabel {
    rs: Arc<RootSystem>,
    highest_weight: Weight,
}

impl RepLabel {
    pub fn new(rs: Arc<RootSystem>, highest_weight: Weight) -> Result<Self> {
        if highest_weight.fw_coords().len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: highest_weight.fw_coords().len(),
            });
        }
        if !highest_weight.is_dominant() {
            return Err(Error::NotDominant(highest_weight.fw_coords().to_vec()));
        }
        Ok(RepLabel { rs, highest_weight })
    }

    /// Convenience constructor from Dynkin labels in the given lattice.
    pub fn from_fw(rs: &Arc<RootSystem>, lattice: LatticeChoice, fw: &[i64]) -> Result<Self> {
        let w = Weight::new(rs, lattice, fw.to_vec())?;
        RepLabel::new(rs.clone(), w)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn fw(&self) -> &[i64] {
        self.highest_weight.fw_coords()
    }

    pub fn dual(&self) -> RepLabel {
        RepLabel {
            rs: self.rs.clone(),
            highest_weight: Weight::from_fw(self.rs.dual_fw(self.fw())),
        }
    }

    fn same_system(&self, other: &RepLabel) -> Result<()> {
        if Arc::ptr_eq(&self.rs, &other.rs) || *self.rs == *other.rs {
            Ok(())
        } else {
            Err(Error::RootSystemMismatch)
        }
    }
}

impl PartialEq for RepLabel {
    fn eq(&self, other: &Self) -> bool {
        *self.rs == *other.rs && self.highest_weight == other.highest_weight
    }
}

impl Eq for RepLabel {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepType {
    Real,
    Complex,
    Quaternionic,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepType::Real => "real",
            RepType::Complex => "complex",
            RepType::Quaternionic => "quaternionic",
        })
    }
}

/// Symmetry-group label: `G`, or `Q8 × G` when a non-real irreducible is
/// present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoldG {
    #[serde(rename = "G")]
    G,
    #[serde(rename = "Q8xG")]
    Q8xG,
}

impl fmt::Display for BoldG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoldG::G => "G",
            BoldG::Q8xG => "Q8xG",
        })
    }
}

/// Irreducible multiplicities keyed by highest-weight Dynkin labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirtualDecomposition {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl VirtualDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(fw: Vec<i64>) -> Self {
        let mut d = Self::new();
        d.add(fw, 1);
        d
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, i64)>>(terms: I) -> Self {
        let mut d = Self::new();
        for (k, v) in terms {
            d.add(k, v);
        }
        d
    }

    pub fn add(&mut self, fw: Vec<i64>, mult: i64) {
        let e = self.terms.entry(fw.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.terms.remove(&fw);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.terms
    }

    pub fn multiplicity(&self, fw: &[i64]) -> i64 {
        self.terms.get(fw).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ mult · dim`.
    pub fn dimension(&self, rs: &RootSystem) -> i64 {
        self.terms
            .iter()
            .map(|(k, m)| m * weyl_dim_fw(rs, k) as i64)
            .sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&m| m >= 0)
    }
}

/// Weyl dimension formula `Π_{α>0} (μ+δ, α)/(δ, α)`.
pub fn weyl_dim(rep: &RepLabel) -> u64 {
    weyl_dim_fw(&rep.rs, rep.fw())
}

pub(crate) fn weyl_dim_fw(rs: &RootSystem, mu: &[i64]) -> u64 {
    let shifted: Vec<i64> = mu.iter().map(|x| x + 1).collect();
    let delta = rs.delta_fw();
    let mut num = Q::one();
    for alpha in rs.positive_roots_fw() {
        num *= rs.inner_fw(&shifted, alpha) / rs.inner_fw(&delta, alpha);
    }
    rational::to_i64(&num).expect("Weyl dimension is an integer") as u64
}

/// Dominant weights of `V^λ`, each with its depth `ht(λ − ν)`.
fn dominant_weights_below(rs: &RootSystem, lambda: &[i64]) -> Vec<(Vec<i64>, i64)> {
    let heights: Vec<i64> = rs
        .positive_roots_simple()
        .iter()
        .map(|c| c.iter().sum())
        .collect();
    let mut seen: HashMap<Vec<i64>, i64> = HashMap::new();
    seen.insert(lambda.to_vec(), 0);
    let mut queue = VecDeque::from([lambda.to_vec()]);
    // Dominant weights below λ are connected through positive-root steps.
    while let Some(nu) = queue.pop_front() {
        let depth = seen[&nu];
        for (alpha, h) in rs.positive_roots_fw().iter().zip(&heights) {
            let next: Vec<i64> = nu.iter().zip(alpha).map(|(a, b)| a - b).collect();
            if next.iter().all(|&x| x >= 0) && !seen.contains_key(&next) {
                seen.insert(next.clone(), depth + h);
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<(Vec<i64>, i64)> = seen.into_iter().collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    out
}

/// Multiplicities of the dominant weights of `V^λ` (Freudenthal).
pub(crate) fn dominant_multiplicities(rs: &RootSystem, lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let doms = dominant_weights_below(rs, lambda);
    let delta = rs.delta_fw();
    let shift = |v: &[i64]| -> Vec<i64> { v.iter().zip(&delta).map(|(a, b)| a + b).collect() };
    let top = rs.norm_sq_fw(&shift(lambda));
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for (nu, depth) in &doms {
        if *depth == 0 {
            mult.insert(nu.clone(), 1);
            continue;
        }
        let mut acc = Q::zero();
        for alpha in rs.positive_roots_fw() {
            let mut k = 1i64;
            loop {
                let x: Vec<i64> = nu.iter().zip(alpha).map(|(a, b)| a + k * b).collect();
                let (dom, _) = rs.to_dominant_fw(&x);
                let Some(&m) = mult.get(&dom) else {
                    // α-strings are unbroken.
                    break;
                };
                acc += qi(m as i64) * rs.inner_fw(&x, alpha);
                k += 1;
            }
        }
        let denom = &top - rs.norm_sq_fw(&shift(nu));
        let m = qi(2) * acc / denom;
        let m = rational::to_i64(&m).expect("Freudenthal multiplicity is an integer");
        if m > 0 {
            mult.insert(nu.clone(), m as u64);
        }
    }
    mult.into_iter().collect()
}

/// W-orbit of integral Dynkin labels.
pub(crate) fn orbit_fw(rs: &RootSystem, nu: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::from([nu.to_vec()]);
    let mut queue = VecDeque::from([nu.to_vec()]);
    while let Some(x) = queue.pop_front() {
        for i in 0..rs.rank() {
            if x[i] == 0 {
                continue;
            }
            let mut y = x.clone();
            rs.reflect_fw(i, &mut y);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort();
    out
}

/// Full weight table of the irreducible.
pub fn weight_multiplicities(rep: &RepLabel) -> BTreeMap<Vec<i64>, u64> {
    weight_multiplicities_fw(&rep.rs, rep.fw())
}

pub(crate) fn weight_multiplicities_fw(rs: &RootSystem, lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    for (dom, m) in dominant_multiplicities(rs, lambda) {
        for w in orbit_fw(rs, &dom) {
            out.insert(w, m);
        }
    }
    out
}

fn character_of(rs: &RootSystem, lambda: &[i64]) -> Character {
    weight_multiplicities_fw(rs, lambda)
        .into_iter()
        .map(|(k, v)| (k, v as i64))
        .collect()
}

/// Splits a W-invariant character into irreducibles.
pub fn decompose_character(rs: &RootSystem, chi: &Character) -> VirtualDecomposition {
    decompose_shifted(rs, chi, &vec![0; rs.rank()])
}

/// `V^η ⊗ χ` by the signed reflection rule.
fn decompose_shifted(rs: &RootSystem, chi: &Character, eta: &[i64]) -> VirtualDecomposition {
    let mut out = VirtualDecomposition::new();
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (beta, m) in chi {
        if *m == 0 {
            continue;
        }
        let x: Vec<i64> = beta.iter().zip(eta).map(|(b, e)| b + e + 1).collect();
        let (dom, applied) = rs.to_dominant_fw(&x);
        if dom.contains(&0) {
            continue;
        }
        let sign = if applied.len() % 2 == 0 { 1 } else { -1 };
        let hw: Vec<i64> = dom.iter().map(|c| c - 1).collect();
        *acc.entry(hw).or_insert(0) += sign * m;
    }
    for (k, v) in acc {
        if v != 0 {
            out.terms.insert(k, v);
        }
    }
    out
}

/// `V^μ ⊗ V^η` as a sum of irreducibles.
pub fn tensor_decompose(a: &RepLabel, b: &RepLabel) -> Result<VirtualDecomposition> {
    a.same_system(b)?;
    let rs = &a.rs;
    // Iterate over the weights of the smaller factor.
    let (small, big) = if weyl_dim(a) <= weyl_dim(b) { (a, b) } else { (b, a) };
    let chi = character_of(rs, small.fw());
    let out = decompose_shifted(rs, &chi, big.fw());
    if !out.is_nonnegative() {
        return Err(Error::Inconsistent(
            "negative multiplicity in tensor product".into(),
        ));
    }
    Ok(out)
}

fn convolve(a: &Character, b: &Character) -> Character {
    let mut out: Character = HashMap::new();
    for (x, m) in a {
        for (y, n) in b {
            let k: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(k).or_insert(0) += m * n;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn adams(chi: &Character, k: i64) -> Character {
    chi.iter()
        .map(|(w, m)| (w.iter().map(|x| x * k).collect(), *m))
        .collect()
}

/// Characters of `∧^p V` for `p = 0..=pmax` by Newton's identities on
/// Adams operations: `p·e_p = Σ_{k=1}^{p} (−1)^{k−1} ψ^k(χ)·e_{p−k}`.
pub(crate) fn exterior_characters(rs: &RootSystem, lambda: &[i64], pmax: usize) -> Vec<Character> {
    let chi = character_of(rs, lambda);
    let mut e: Vec<Character> = vec![HashMap::from([(vec![0; rs.rank()], 1)])];
    let psi: Vec<Character> = (0..=pmax as i64).map(|k| adams(&chi, k)).collect();
    for p in 1..=pmax {
        let mut acc: Character = HashMap::new();
        for k in 1..=p {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            for (w, m) in convolve(&psi[k], &e[p - k]) {
                *acc.entry(w).or_insert(0) += sign * m;
            }
        }
        acc.retain(|_, v| *v != 0);
        for v in acc.values_mut() {
            debug_assert_eq!(*v % p as i64, 0);
            *v /= p as i64;
        }
        e.push(acc);
    }
    e
}

/// Decompositions of `∧^p V` for `p = 0..=pmax`.
pub fn exterior_powers(rep: &RepLabel, pmax: usize) -> Result<Vec<VirtualDecomposition>> {
    let dim = weyl_dim(rep) as usize;
    if pmax > dim {
        return Err(Error::OutOfRange(format!(
            "pmax {pmax} exceeds dimension {dim}"
        )));
    }
    exterior_characters(&rep.rs, rep.fw(), pmax)
        .iter()
        .map(|c| {
            let d = decompose_character(&rep.rs, c);
            if d.is_nonnegative() {
                Ok(d)
            } else {
                Err(Error::Inconsistent(
                    "negative multiplicity in exterior power".into(),
                ))
            }
        })
        .collect()
}

/// Real, complex or quaternionic type.
///
/// Self-dual irreducibles are split by the sign `(−1)^{⟨μ, 2ρ^∨⟩}`, where
/// `⟨μ, 2ρ^∨⟩ = Σ_{α>0} ⟨μ, α^∨⟩`.
pub fn classify_type(rep: &RepLabel) -> RepType {
    classify_type_fw(&rep.rs, rep.fw())
}

pub(crate) fn classify_type_fw(rs: &RootSystem, mu: &[i64]) -> RepType {
    if rs.dual_fw(mu) != mu {
        return RepType::Complex;
    }
    let parity: i64 = rs.coroot_pairings(mu).sum();
    if parity % 2 == 0 {
        RepType::Real
    } else {
        RepType::Quaternionic
    }
}

pub fn bold_g_label(reps: &[RepLabel]) -> BoldG {
    if reps.iter().any(|r| classify_type(r) != RepType::Real) {
        BoldG::Q8xG
    } else {
        BoldG::G
    }
}

/// Label for the whole group: does any irreducible of the lattice fail to
/// be of real type?
///
/// `−w₀` permutes the fundamental weights and the parity map is additive,
/// so it suffices to test the lattice generators `ω_i` (weight lattice)
/// and `det(C)·ω_i` (which always lie in the root lattice).
pub fn group_bold_g(rs: &RootSystem, lattice: LatticeChoice) -> BoldG {
    let r = rs.rank();
    let cartan: Vec<Vec<Q>> = rs
        .cartan_matrix()
        .iter()
        .map(|row| row.iter().map(|&x| qi(x)).collect())
        .collect();
    let index = rational::to_i64(&rational::det(&cartan)).expect("integral determinant");
    let mut candidates = Vec::new();
    for i in 0..r {
        let mut w = vec![0i64; r];
        w[i] = index;
        candidates.push(w.clone());
        if lattice == LatticeChoice::Weight {
            w[i] = 1;
            candidates.push(w);
        }
    }
    if candidates
        .iter()
        .any(|c| classify_type_fw(rs, c) != RepType::Real)
    {
        BoldG::Q8xG
    } else {
        BoldG::G
    }
}

/// The isotropy subgroup `K` together with the `K`-module `U*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KModule {
    /// `K = {e}`: `U*` is a plain vector space of the given dimension.
    Trivial { dim: u64 },
    /// `K = ΔG′ ⊂ G′ × G′`: `U*` as a sum of `G′`-irreducibles.
    Diagonal(VirtualDecomposition),
    /// `K = T`, a maximal torus: `U*` as a multiset of torus weights.
    Torus(BTreeMap<Vec<i64>, u64>),
}

impl KModule {
    pub fn mode(&self) -> KMode {
        match self {
            KModule::Trivial { .. } => KMode::Trivial,
            KModule::Diagonal(_) => KMode::Diagonal,
            KModule::Torus(_) => KMode::Torus,
        }
    }

    /// `dim U*`.
    pub fn dimension(&self, rs: &RootSystem) -> u64 {
        match self {
            KModule::Trivial { dim } => *dim,
            KModule::Diagonal(d) => d.dimension(rs).max(0) as u64,
            KModule::Torus(w) => w.values().sum(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            KModule::Trivial { dim } => *dim == 0,
            KModule::Diagonal(d) => d.is_empty(),
            KModule::Torus(w) => w.values().all(|&m| m == 0),
        }
    }

    /// `∧^p` of the adjoint representation of `G′` as a diagonal module.
    pub fn diagonal_wedge_adjoint(rs: &RootSystem, p: usize) -> Result<Self> {
        let adj = highest_root_fw(rs);
        let dim = weyl_dim_fw(rs, &adj) as usize;
        if p > dim {
            return Err(Error::OutOfRange(format!("p {p} exceeds dimension {dim}")));
        }
        let chars = exterior_characters(rs, &adj, p);
        Ok(KModule::Diagonal(decompose_character(rs, &chars[p])))
    }
}

impl Serialize for KModule {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Term<'a> {
            weight: &'a [i64],
            multiplicity: i64,
        }
        let mut st = s.serialize_struct("KModule", 2)?;
        st.serialize_field("mode", &self.mode())?;
        match self {
            KModule::Trivial { dim } => st.serialize_field("dim", dim)?,
            KModule::Diagonal(d) => st.serialize_field(
                "terms",
                &d.terms()
                    .iter()
                    .map(|(w, m)| Term { weight: w, multiplicity: *m })
                    .collect::<Vec<_>>(),
            )?,
            KModule::Torus(ws) => st.serialize_field(
                "terms",
                &ws.iter()
                    .map(|(w, m)| Term { weight: w, multiplicity: *m as i64 })
                    .collect::<Vec<_>>(),
            )?,
        }
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KMode {
    Trivial,
    Diagonal,
    Torus,
}

impl fmt::Display for KMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KMode::Trivial => "trivial",
            KMode::Diagonal => "diagonal",
            KMode::Torus => "torus",
        })
    }
}

/// Dynkin labels of the highest root (highest weight of the adjoint).
pub fn highest_root_fw(rs: &RootSystem) -> Vec<i64> {
    rs.positive_roots_simple()
        .iter()
        .zip(rs.positive_roots_fw())
        .max_by_key(|(c, _)| c.iter().sum::<i64>())
        .map(|(_, fw)| fw.clone())
        .expect("nonempty root system")
}

/// The representation whose invariants are counted: a single `G`
/// irreducible, or an outer product `V^μ ⊠ V^ν` of `G′ × G′`.
#[derive(Clone, Debug)]
pub enum IsotypicRep {
    Single(RepLabel),
    Pair(RepLabel, RepLabel),
}

/// `dim (V ⊗ U*)^K`.
pub fn invariant_dim(v: &IsotypicRep, u: &KModule) -> Result<u64> {
    match (v, u) {
        (IsotypicRep::Single(rep), KModule::Trivial { dim }) => Ok(weyl_dim(rep) * dim),
        (IsotypicRep::Single(rep), KModule::Torus(weights)) => {
            let rs = &rep.rs;
            for w in weights.keys() {
                if w.len() != rs.rank() {
                    return Err(Error::ShapeMismatch(format!(
                        "torus weight {w:?} has wrong rank"
                    )));
                }
            }
            let table = weight_multiplicities(rep);
            Ok(weights
                .iter()
                .map(|(w, m)| {
                    let neg: Vec<i64> = w.iter().map(|x| -x).collect();
                    m * table.get(&neg).copied().unwrap_or(0)
                })
                .sum())
        }
        (IsotypicRep::Pair(a, b), KModule::Diagonal(dec)) => {
            a.same_system(b)?;
            let rs = &a.rs;
            let ab = tensor_decompose(a, b)?;
            // Trivial ⊂ V^μ ⊗ V^ν ⊗ V^ρ  ⟺  (ρ)* ⊂ V^μ ⊗ V^ν.
            let mut total: i64 = 0;
            for (rho, m) in dec.terms() {
                if rho.len() != rs.rank() {
                    return Err(Error::ShapeMismatch(format!(
                        "diagonal term {rho:?} has wrong rank"
                    )));
                }
                total += m * ab.multiplicity(&rs.dual_fw(rho));
            }
            Ok(total.max(0) as u64)
        }
        (IsotypicRep::Single(_), KModule::Diagonal(_)) => Err(Error::ShapeMismatch(
            "diagonal K requires a pair of G′ representations".into(),
        )),
        (IsotypicRep::Pair(..), _) => Err(Error::ShapeMismatch(
            "a pair of representations requires diagonal K".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{Family, RootSystemType};

    fn sys(f: Family, r: usize) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(RootSystemType::new(f, r).unwrap(), Q::one()).unwrap())
    }

    fn rep(rs: &Arc<RootSystem>, fw: &[i64]) -> RepLabel {
        RepLabel::from_fw(rs, LatticeChoice::Weight, fw).unwrap()
    }

    fn dec(terms: &[(&[i64], i64)]) -> VirtualDecomposition {
        VirtualDecomposition::from_terms(terms.iter().map(|(k, v)| (k.to_vec(), *v)))
    }

    #[test]
    fn dimensions() {
        let a1 = sys(Family::A, 1);
        for m in 0..10 {
            assert_eq!(weyl_dim(&rep(&a1, &[m])), (m + 1) as u64);
        }
        let a2 = sys(Family::A, 2);
        assert_eq!(weyl_dim(&rep(&a2, &[1, 1])), 8);
        assert_eq!(weyl_dim(&rep(&a2, &[5, 4])), 165);
        assert_eq!(weyl_dim(&rep(&a2, &[8, 0])), 45);
        let g2 = sys(Family::G, 2);
        let mut dims: Vec<u64> = [[1, 0], [0, 1]].iter().map(|w| weyl_dim(&rep(&g2, w))).collect();
        dims.sort();
        assert_eq!(dims, vec![7, 14]);
        let e8 = sys(Family::E, 8);
        assert_eq!(weyl_dim(&rep(&e8, &highest_root_fw(&e8))), 248);
    }

    #[test]
    fn multiplicity_tables() {
        let a1 = sys(Family::A, 1);
        let t = weight_multiplicities(&rep(&a1, &[2]));
        assert_eq!(
            t,
            BTreeMap::from([(vec![-2], 1), (vec![0], 1), (vec![2], 1)])
        );
        let a2 = sys(Family::A, 2);
        let t = weight_multiplicities(&rep(&a2, &[1, 1]));
        assert_eq!(t.len(), 7);
        assert_eq!(t[&vec![0, 0]], 2);
        assert!(t.iter().filter(|(k, _)| **k != vec![0, 0]).all(|(_, &m)| m == 1));
        let t = weight_multiplicities(&rep(&a2, &[1, 0]));
        assert_eq!(t.len(), 3);
        assert!(t.values().all(|&m| m == 1));
    }

    #[test]
    fn multiplicities_sum_to_dimension() {
        for (s, ws) in [
            (sys(Family::A, 2), vec![vec![2, 1], vec![3, 3], vec![4, 0]]),
            (sys(Family::B, 3), vec![vec![1, 0, 1], vec![0, 1, 0]]),
            (sys(Family::G, 2), vec![vec![1, 1], vec![2, 0]]),
            (sys(Family::C, 3), vec![vec![1, 1, 0]]),
            (sys(Family::F, 4), vec![vec![0, 0, 0, 1], vec![1, 0, 0, 0]]),
        ] {
            for w in ws {
                let r = rep(&s, &w);
                let total: u64 = weight_multiplicities(&r).values().sum();
                assert_eq!(total, weyl_dim(&r), "{} {:?}", s.typ(), w);
            }
        }
    }

    #[test]
    fn tensor_examples() {
        let a1 = sys(Family::A, 1);
        assert_eq!(
            tensor_decompose(&rep(&a1, &[1]), &rep(&a1, &[1])).unwrap(),
            dec(&[(&[2], 1), (&[0], 1)])
        );
        assert_eq!(
            tensor_decompose(&rep(&a1, &[2]), &rep(&a1, &[2])).unwrap(),
            dec(&[(&[4], 1), (&[2], 1), (&[0], 1)])
        );
        let a2 = sys(Family::A, 2);
        assert_eq!(
            tensor_decompose(&rep(&a2, &[1, 0]), &rep(&a2, &[0, 1])).unwrap(),
            dec(&[(&[1, 1], 1), (&[0, 0], 1)])
        );
        let other = sys(Family::A, 2);
        let scaled = Arc::new(RootSystem::new(other.typ(), qi(2)).unwrap());
        assert_eq!(
            tensor_decompose(&rep(&a2, &[1, 0]), &rep(&scaled, &[1, 0])),
            Err(Error::RootSystemMismatch)
        );
        // Equal systems built separately are compatible.
        assert!(tensor_decompose(&rep(&a2, &[1, 0]), &rep(&other, &[1, 0])).is_ok());
    }

    #[test]
    fn tensor_dimension_and_duality_laws() {
        for s in [sys(Family::A, 2), sys(Family::B, 2), sys(Family::G, 2)] {
            let ws: Vec<Vec<i64>> = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]];
            for a in &ws {
                for b in &ws {
                    let (ra, rb) = (rep(&s, a), rep(&s, b));
                    let d = tensor_decompose(&ra, &rb).unwrap();
                    assert!(d.is_nonnegative());
                    assert_eq!(
                        d.dimension(&s) as u64,
                        weyl_dim(&ra) * weyl_dim(&rb)
                    );
                    assert_eq!(d, tensor_decompose(&rb, &ra).unwrap());
                    let trivial = d.multiplicity(&[0, 0]);
                    assert_eq!(trivial, i64::from(s.dual_fw(a) == *b));
                }
            }
        }
    }

    #[test]
    fn exterior_examples() {
        let a1 = sys(Family::A, 1);
        let ext = exterior_powers(&rep(&a1, &[2]), 3).unwrap();
        assert_eq!(
            ext,
            vec![
                dec(&[(&[0], 1)]),
                dec(&[(&[2], 1)]),
                dec(&[(&[2], 1)]),
                dec(&[(&[0], 1)]),
            ]
        );
        let a2 = sys(Family::A, 2);
        let ext = exterior_powers(&rep(&a2, &[1, 0]), 3).unwrap();
        assert_eq!(ext[0], dec(&[(&[0, 0], 1)]));
        assert_eq!(ext[1], dec(&[(&[1, 0], 1)]));
        assert_eq!(ext[2], dec(&[(&[0, 1], 1)]));
        assert_eq!(ext[3], dec(&[(&[0, 0], 1)]));
        assert!(exterior_powers(&rep(&a2, &[1, 0]), 4).is_err());
    }

    #[test]
    fn exterior_binomial_identity() {
        for (s, w) in [
            (sys(Family::A, 2), vec![1, 1]),
            (sys(Family::B, 2), vec![1, 0]),
            (sys(Family::A, 1), vec![4]),
            (sys(Family::G, 2), vec![1, 0]),
        ] {
            let r = rep(&s, &w);
            let n = weyl_dim(&r) as usize;
            let ext = exterior_powers(&r, n).unwrap();
            let mut binom = 1i64;
            let mut total = 0i64;
            for (p, d) in ext.iter().enumerate() {
                assert_eq!(d.dimension(&s), binom, "{} {w:?} p={p}", s.typ());
                total += d.dimension(&s);
                binom = binom * (n - p) as i64 / (p + 1) as i64;
            }
            assert_eq!(total, 1 << n);
        }
    }

    #[test]
    fn types() {
        let a1 = sys(Family::A, 1);
        assert_eq!(classify_type(&rep(&a1, &[1])), RepType::Quaternionic);
        assert_eq!(classify_type(&rep(&a1, &[2])), RepType::Real);
        for m in 0..=12 {
            let expect = if m % 2 == 0 { RepType::Real } else { RepType::Quaternionic };
            assert_eq!(classify_type(&rep(&a1, &[m])), expect);
        }
        let a2 = sys(Family::A, 2);
        assert_eq!(classify_type(&rep(&a2, &[1, 0])), RepType::Complex);
        assert_eq!(classify_type(&rep(&a2, &[1, 1])), RepType::Real);
        let c2 = sys(Family::C, 2);
        // The 4-dimensional symplectic representation.
        let four = [[1, 0], [0, 1]]
            .into_iter()
            .find(|w| weyl_dim(&rep(&c2, w)) == 4)
            .unwrap();
        assert_eq!(classify_type(&rep(&c2, &four)), RepType::Quaternionic);
        for w in [[1, 0], [0, 1], [2, 3]] {
            let r = rep(&a2, &w);
            assert_eq!(classify_type(&r), classify_type(&r.dual()));
        }
    }

    #[test]
    fn bold_g() {
        let a1 = sys(Family::A, 1);
        let list = |ms: &[i64]| -> Vec<RepLabel> { ms.iter().map(|&m| rep(&a1, &[m])).collect() };
        assert_eq!(bold_g_label(&list(&[0, 1, 2])), BoldG::Q8xG);
        assert_eq!(bold_g_label(&list(&[0, 2, 4])), BoldG::G);
        assert_eq!(bold_g_label(&[]), BoldG::G);
        assert_eq!(group_bold_g(&a1, LatticeChoice::Weight), BoldG::Q8xG);
        assert_eq!(group_bold_g(&a1, LatticeChoice::Root), BoldG::G);
        let g2 = sys(Family::G, 2);
        assert_eq!(group_bold_g(&g2, LatticeChoice::Weight), BoldG::G);
        let a2 = sys(Family::A, 2);
        assert_eq!(group_bold_g(&a2, LatticeChoice::Root), BoldG::Q8xG);
    }

    #[test]
    fn invariant_dims() {
        let a1 = sys(Family::A, 1);
        let one = IsotypicRep::Pair(rep(&a1, &[1]), rep(&a1, &[1]));
        let triv = KModule::Diagonal(dec(&[(&[0], 1)]));
        assert_eq!(invariant_dim(&one, &triv).unwrap(), 1);
        let zero = IsotypicRep::Pair(rep(&a1, &[0]), rep(&a1, &[0]));
        let wedge1 = KModule::diagonal_wedge_adjoint(&a1, 1).unwrap();
        assert_eq!(wedge1, KModule::Diagonal(dec(&[(&[2], 1)])));
        assert_eq!(invariant_dim(&zero, &wedge1).unwrap(), 0);
        let a2 = sys(Family::A, 2);
        let adj = IsotypicRep::Single(rep(&a2, &[1, 1]));
        assert_eq!(invariant_dim(&adj, &KModule::Trivial { dim: 4 }).unwrap(), 32);
        // Torus: zero-weight vectors.
        let torus = KModule::Torus(BTreeMap::from([(vec![0, 0], 1)]));
        assert_eq!(invariant_dim(&adj, &torus).unwrap(), 2);
        assert!(invariant_dim(&adj, &triv).is_err());
        assert!(invariant_dim(&one, &KModule::Trivial { dim: 1 }).is_err());
    }
}

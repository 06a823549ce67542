//! Weights, Casimir eigenvalues and the lattice spheres `S(a)`.
//!
//! A Casimir class groups the highest weights `μ` sharing the value
//! `a² = |μ + δ|²`. Its sphere set contains every lattice point `μ` (dominant
//! or not) with `|μ + δ|² = a²`, i.e. the lattice points on the sphere of
//! radius `a` centered at `−δ`.
//!
//! All enumeration happens on the shifted coordinates `ν = μ + δ`, which
//! are integer Dynkin labels, with an exact `L D Lᵀ` decomposition of the
//! fundamental-weight Gram matrix. No floating point is involved, so two
//! weights are grouped together only when their `a²` agree exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, qi, Q};
use crate::rootsys::RootSystem;

/// Which lattice of integral weights to enumerate over.
///
/// `Weight` is the full weight lattice (simply connected group);
/// `Root` is the root lattice (adjoint group).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeChoice {
    #[default]
    Weight,
    Root,
}

impl LatticeChoice {
    pub fn contains(&self, rs: &RootSystem, fw: &[i64]) -> bool {
        match self {
            LatticeChoice::Weight => true,
            LatticeChoice::Root => rs.in_root_lattice(fw),
        }
    }
}

impl FromStr for LatticeChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weight" | "weight_lattice" => Ok(LatticeChoice::Weight),
            "root" | "root_lattice" => Ok(LatticeChoice::Root),
            other => Err(Error::Parse(format!("unknown lattice {other:?}"))),
        }
    }
}

impl fmt::Display for LatticeChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeChoice::Weight => "weight",
            LatticeChoice::Root => "root",
        })
    }
}

/// An integral weight, stored by its Dynkin labels. Ordering is
/// lexicographic on the labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    fw: Vec<i64>,
}

impl Weight {
    /// Checks the rank and lattice membership.
    pub fn new(rs: &RootSystem, lattice: LatticeChoice, fw: Vec<i64>) -> Result<Self> {
        if fw.len() != rs.rank() {
            return Err(Error::DimensionMismatch {
                expected: rs.rank(),
                got: fw.len(),
            });
        }
        if !lattice.contains(rs, &fw) {
            return Err(Error::NotInLattice(fw));
        }
        Ok(Weight { fw })
    }

    /// A weight of the full weight lattice; only the rank is checked by
    /// callers that already know the labels are valid.
    pub(crate) fn from_fw(fw: Vec<i64>) -> Self {
        Weight { fw }
    }

    pub fn zero(rs: &RootSystem) -> Self {
        Weight {
            fw: vec![0; rs.rank()],
        }
    }

    pub fn fw_coords(&self) -> &[i64] {
        &self.fw
    }

    pub fn ambient(&self, rs: &RootSystem) -> Vec<Q> {
        rs.fw_to_ambient(&self.fw)
    }

    pub fn is_dominant(&self) -> bool {
        self.fw.iter().all(|&x| x >= 0)
    }

    /// Dynkin labels of `μ + δ`.
    pub fn shifted(&self) -> Vec<i64> {
        self.fw.iter().map(|x| x + 1).collect()
    }

    /// `a² = |μ + δ|²`.
    pub fn a_sq(&self, rs: &RootSystem) -> Q {
        rs.norm_sq_fw(&self.shifted())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.fw.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All irreducibles with Casimir eigenvalue `λ(a) = a² − |δ|²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirClass {
    pub a_sq: Q,
    pub lambda: Q,
    pub dominant_members: Vec<Weight>,
    pub sphere_members: Vec<Weight>,
}

/// `λ_μ = |μ + δ|² − |δ|²` for a dominant weight.
pub fn casimir_eigenvalue(rs: &RootSystem, mu: &Weight) -> Result<Q> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.fw.clone()));
    }
    Ok(mu.a_sq(rs) - delta_norm_sq(rs))
}

pub fn delta_norm_sq(rs: &RootSystem) -> Q {
    rs.norm_sq_fw(&rs.delta_fw())
}

/// Which shifted points to keep during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shell {
    /// `|ν|² ≤ bound`
    Ball,
    /// `|ν|² = bound`
    Sphere,
}

/// Exact Fincke–Pohst enumeration of integer vectors `ν` with
/// `νᵀ G ν ≤ bound` (or `= bound`), `G` the fundamental-weight Gram.
///
/// With `strictly_positive` only `ν_i ≥ 1` are produced, i.e. shifted
/// dominant weights.
fn enumerate_shifted(
    rs: &RootSystem,
    bound: &Q,
    shell: Shell,
    strictly_positive: bool,
) -> Vec<Vec<i64>> {
    let r = rs.rank();
    let mut out = Vec::new();
    if bound.is_negative() {
        return out;
    }
    let (l, d) = rational::ldl(rs.gram_fw()).expect("Gram matrix is positive definite");
    let mut nu = vec![0i64; r];
    descend(
        &l,
        &d,
        r,
        bound.clone(),
        shell,
        strictly_positive,
        &mut nu,
        &mut out,
    );
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn descend(
    l: &[Vec<Q>],
    d: &[Q],
    level: usize,
    remaining: Q,
    shell: Shell,
    strictly_positive: bool,
    nu: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if level == 0 {
        if shell == Shell::Ball || remaining.is_zero() {
            out.push(nu.clone());
        }
        return;
    }
    let j = level - 1;
    // q(ν) = Σ_j d_j (ν_j + Σ_{i>j} L_ij ν_i)²; the tail i > j is fixed.
    let shift: Q = (j + 1..nu.len()).map(|i| &l[i][j] * qi(nu[i])).sum();
    let center = -shift;
    let radius = rational::sqrt_upper(&(&remaining / &d[j]));
    let mut lo = rational::floor(&center) - &radius;
    let hi = rational::ceil(&center) + &radius;
    if strictly_positive && lo < BigInt::from(1) {
        lo = BigInt::from(1);
    }
    let mut x = lo;
    while x <= hi {
        let xi = x.to_i64().expect("coordinate fits in i64");
        let dev = qi(xi) - &center;
        let used = &d[j] * &dev * &dev;
        if used <= remaining {
            nu[j] = xi;
            descend(
                l,
                d,
                j,
                &remaining - used,
                shell,
                strictly_positive,
                nu,
                out,
            );
        }
        x += 1;
    }
    nu[j] = 0;
}

fn unshift(nu: &[i64]) -> Vec<i64> {
    nu.iter().map(|x| x - 1).collect()
}

/// Every dominant lattice weight with `|μ + δ|² ≤ a_sq_cap`, sorted.
pub fn enumerate_dominant(rs: &RootSystem, lattice: LatticeChoice, a_sq_cap: &Q) -> Vec<Weight> {
    if *a_sq_cap < delta_norm_sq(rs) {
        return Vec::new();
    }
    let mut out: Vec<Weight> = enumerate_shifted(rs, a_sq_cap, Shell::Ball, true)
        .into_iter()
        .map(|nu| unshift(&nu))
        .filter(|mu| lattice.contains(rs, mu))
        .map(Weight::from_fw)
        .collect();
    out.sort();
    out
}

/// Every lattice weight `μ` (dominant or not) with `|μ + δ|² ≤ a_sq_cap`.
pub fn lattice_ball(rs: &RootSystem, lattice: LatticeChoice, a_sq_cap: &Q) -> Vec<Weight> {
    enumerate_shifted(rs, a_sq_cap, Shell::Ball, false)
        .into_iter()
        .map(|nu| unshift(&nu))
        .filter(|mu| lattice.contains(rs, mu))
        .map(Weight::from_fw)
        .collect()
}

/// The complete class at squared radius `a_sq`.
pub fn sphere_set(rs: &RootSystem, lattice: LatticeChoice, a_sq: &Q) -> CasimirClass {
    let sphere_members: Vec<Weight> = enumerate_shifted(rs, a_sq, Shell::Sphere, false)
        .into_iter()
        .map(|nu| unshift(&nu))
        .filter(|mu| lattice.contains(rs, mu))
        .map(Weight::from_fw)
        .collect();
    let dominant_members = sphere_members
        .iter()
        .filter(|w| w.is_dominant())
        .cloned()
        .collect();
    CasimirClass {
        a_sq: a_sq.clone(),
        lambda: a_sq - delta_norm_sq(rs),
        dominant_members,
        sphere_members,
    }
}

/// All nonempty classes with `a² ≤ a_sq_cap`, sorted by `a²`.
pub fn classes_up_to(rs: &RootSystem, lattice: LatticeChoice, a_sq_cap: &Q) -> Vec<CasimirClass> {
    let mut by_radius: BTreeMap<Q, ()> = BTreeMap::new();
    for mu in enumerate_dominant(rs, lattice, a_sq_cap) {
        by_radius.insert(mu.a_sq(rs), ());
    }
    by_radius
        .into_keys()
        .map(|a_sq| sphere_set(rs, lattice, &a_sq))
        .collect()
}

/// Highest weight of the dual representation, `−w₀ μ`.
pub fn dual_weight(rs: &RootSystem, mu: &Weight) -> Result<Weight> {
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.fw.clone()));
    }
    Ok(Weight::from_fw(rs.dual_fw(&mu.fw)))
}

/// Whether the class has two dominant members that are neither equal
/// nor dual to each other.
pub fn has_nondual_coincidence(rs: &RootSystem, class: &CasimirClass) -> bool {
    let m = &class.dominant_members;
    m.iter().enumerate().any(|(i, a)| {
        let da = rs.dual_fw(&a.fw);
        m[i + 1..].iter().any(|b| b.fw != da)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::rootsys::{Family, RootSystemType, DEFAULT_WEYL_CAP};
    use num_traits::One;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::new(RootSystemType::new(f, r).unwrap(), Q::one()).unwrap()
    }

    fn w(v: &[i64]) -> Weight {
        Weight::from_fw(v.to_vec())
    }

    /// Box brute force over shifted labels in `[-b, b]^r`.
    fn brute_sphere(rs: &RootSystem, lattice: LatticeChoice, a_sq: &Q, b: i64) -> Vec<Vec<i64>> {
        let r = rs.rank();
        let mut out = Vec::new();
        let mut idx = vec![-b; r];
        loop {
            if &rs.norm_sq_fw(&idx) == a_sq {
                let mu = unshift(&idx);
                if lattice.contains(rs, &mu) {
                    out.push(mu);
                }
            }
            let mut k = 0;
            loop {
                if k == r {
                    out.sort();
                    return out;
                }
                idx[k] += 1;
                if idx[k] > b {
                    idx[k] = -b;
                    k += 1;
                } else {
                    break;
                }
            }
        }
    }

    #[test]
    fn casimir_values() {
        let a1 = rs(Family::A, 1);
        for m in 0..=12 {
            assert_eq!(
                casimir_eigenvalue(&a1, &w(&[m])).unwrap(),
                q(m * (m + 2), 2)
            );
        }
        assert_eq!(casimir_eigenvalue(&a1, &w(&[2])).unwrap(), qi(4));
        let a2 = rs(Family::A, 2);
        assert_eq!(casimir_eigenvalue(&a2, &w(&[1, 1])).unwrap(), qi(6));
        // (θ, θ + 2δ) with θ the highest root.
        let theta = a2.positive_roots().last().unwrap().clone();
        let two_delta: Vec<Q> = a2.delta().iter().map(|x| x * qi(2)).collect();
        let shifted: Vec<Q> = theta.iter().zip(&two_delta).map(|(a, b)| a + b).collect();
        assert_eq!(a2.inner(&theta, &shifted).unwrap(), qi(6));
        for s in [a1, a2, rs(Family::G, 2)] {
            assert_eq!(casimir_eigenvalue(&s, &Weight::zero(&s)).unwrap(), qi(0));
        }
        assert!(matches!(
            casimir_eigenvalue(&rs(Family::A, 1), &w(&[-1])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn dominant_enumeration_examples() {
        let a1 = rs(Family::A, 1);
        let got = enumerate_dominant(&a1, LatticeChoice::Weight, &q(9, 2));
        assert_eq!(got, vec![w(&[0]), w(&[1]), w(&[2])]);
        let a2 = rs(Family::A, 2);
        assert_eq!(
            enumerate_dominant(&a2, LatticeChoice::Weight, &qi(2)),
            vec![w(&[0, 0])]
        );
        assert_eq!(
            enumerate_dominant(&a2, LatticeChoice::Weight, &q(14, 3)),
            vec![w(&[0, 0]), w(&[0, 1]), w(&[1, 0])]
        );
        assert!(enumerate_dominant(&a2, LatticeChoice::Weight, &qi(1)).is_empty());
    }

    #[test]
    fn sphere_examples() {
        let a1 = rs(Family::A, 1);
        let c = sphere_set(&a1, LatticeChoice::Weight, &qi(2));
        assert_eq!(c.sphere_members, vec![w(&[-3]), w(&[1])]);
        assert_eq!(c.dominant_members, vec![w(&[1])]);
        assert_eq!(c.lambda, q(3, 2));

        let a2 = rs(Family::A, 2);
        let c = sphere_set(&a2, LatticeChoice::Weight, &qi(8));
        assert_eq!(c.sphere_members.len(), 6);
        assert_eq!(c.dominant_members, vec![w(&[1, 1])]);
        let mut shifted: Vec<Vec<i64>> = c.sphere_members.iter().map(|m| m.shifted()).collect();
        shifted.sort();
        let mut expect = vec![
            vec![2, 2],
            vec![2, -4],
            vec![-2, -2],
            vec![-2, 4],
            vec![4, -2],
            vec![-4, 2],
        ];
        expect.sort();
        assert_eq!(shifted, expect);

        for s in [rs(Family::A, 1), rs(Family::A, 2), rs(Family::B, 2), rs(Family::G, 2)] {
            let c = sphere_set(&s, LatticeChoice::Weight, &delta_norm_sq(&s));
            assert_eq!(c.dominant_members, vec![Weight::zero(&s)]);
            assert_eq!(c.lambda, qi(0));
        }
        // A sphere missing the lattice.
        assert!(sphere_set(&a1, LatticeChoice::Weight, &qi(1)).sphere_members.is_empty());
    }

    #[test]
    fn class_examples() {
        let a1 = rs(Family::A, 1);
        let cl = classes_up_to(&a1, LatticeChoice::Weight, &q(9, 2));
        assert_eq!(cl.len(), 3);
        assert!(cl.iter().all(|c| c.dominant_members.len() == 1));

        let a2 = rs(Family::A, 2);
        let cl = classes_up_to(&a2, LatticeChoice::Weight, &q(182, 3));
        let top = cl.last().unwrap();
        assert_eq!(top.a_sq, q(182, 3));
        for m in [[8, 0], [5, 4], [0, 8], [4, 5]] {
            assert!(top.dominant_members.contains(&w(&m)));
        }
        assert!(has_nondual_coincidence(&a2, top));

        let cl = classes_up_to(&a2, LatticeChoice::Weight, &qi(6));
        let radii: Vec<Q> = cl.iter().map(|c| c.a_sq.clone()).collect();
        assert_eq!(radii, vec![qi(2), q(14, 3)]);
        assert_eq!(cl[1].dominant_members, vec![w(&[0, 1]), w(&[1, 0])]);
        assert!(!has_nondual_coincidence(&a2, &cl[1]));
    }

    #[test]
    fn duals_and_lattice_checks() {
        let a2 = rs(Family::A, 2);
        assert_eq!(dual_weight(&a2, &w(&[8, 0])).unwrap(), w(&[0, 8]));
        let a1 = rs(Family::A, 1);
        for m in 0..6 {
            assert_eq!(dual_weight(&a1, &w(&[m])).unwrap(), w(&[m]));
        }
        let b2 = rs(Family::B, 2);
        assert_eq!(dual_weight(&b2, &w(&[1, 0])).unwrap(), w(&[1, 0]));
        assert!(dual_weight(&a2, &w(&[-1, 0])).is_err());
        assert!(Weight::new(&a2, LatticeChoice::Root, vec![1, 0]).is_err());
        assert!(Weight::new(&a2, LatticeChoice::Root, vec![1, 1]).is_ok());
        assert!(Weight::new(&a2, LatticeChoice::Weight, vec![1]).is_err());
    }

    #[test]
    fn enumeration_matches_box_scan() {
        for s in [rs(Family::A, 1), rs(Family::A, 2), rs(Family::B, 2), rs(Family::G, 2)] {
            for lattice in [LatticeChoice::Weight, LatticeChoice::Root] {
                for c in classes_up_to(&s, lattice, &qi(40)) {
                    let brute = brute_sphere(&s, lattice, &c.a_sq, 16);
                    let got: Vec<Vec<i64>> =
                        c.sphere_members.iter().map(|m| m.fw_coords().to_vec()).collect();
                    assert_eq!(got, brute, "{} a²={}", s.typ(), c.a_sq);
                }
            }
        }
    }

    #[test]
    fn spheres_are_closed_under_dislocated_weyl_action() {
        for s in [rs(Family::A, 2), rs(Family::B, 2), rs(Family::G, 2)] {
            let wg = s.weyl_group(DEFAULT_WEYL_CAP).unwrap();
            for c in classes_up_to(&s, LatticeChoice::Weight, &qi(30)) {
                for mu in &c.sphere_members {
                    for el in &wg {
                        let img = unshift(&el.apply_fw(&mu.shifted()));
                        assert!(c.sphere_members.contains(&Weight::from_fw(img)));
                    }
                }
            }
        }
    }

    #[test]
    fn casimir_is_dual_invariant_and_monotone() {
        for s in [rs(Family::A, 2), rs(Family::A, 3), rs(Family::B, 2), rs(Family::D, 4)] {
            let doms = enumerate_dominant(&s, LatticeChoice::Weight, &qi(24));
            for mu in &doms {
                let d = dual_weight(&s, mu).unwrap();
                assert_eq!(
                    casimir_eigenvalue(&s, mu).unwrap(),
                    casimir_eigenvalue(&s, &d).unwrap()
                );
                assert_eq!(dual_weight(&s, &d).unwrap(), *mu);
            }
            let cl = classes_up_to(&s, LatticeChoice::Weight, &qi(24));
            for pair in cl.windows(2) {
                assert!(pair[0].lambda < pair[1].lambda);
            }
        }
    }
}

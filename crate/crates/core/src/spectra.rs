//! Spectral reports for normal metrics on `G/K` with coefficients in a
//! `K`-module `U*`.
//!
//! For a normal metric each isotypic block `(V^μ ⊗ U*)^K ⊗ V^{μ*}` is an
//! eigenspace piece with eigenvalue the Casimir value of `μ`, so an
//! eigenspace is the sum over the dominant members `μ` of one Casimir
//! class that survive the filter `dim (V^μ ⊗ U*)^K > 0`.
//!
//! In diagonal mode the group is `G′ × G′`, given by the root system of
//! `G′`; its irreducibles are pairs `(μ, ν)` and `a² = |μ+δ|² + |ν+δ|²`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hidden::{self, ShiftedConfig};
use crate::rational::{self, qi, ExactQ, QMat, Q};
use crate::reps::{
    classify_type_fw, group_bold_g, invariant_dim, weyl_dim_fw, BoldG, IsotypicRep, KMode, KModule, RepLabel,
    RepType,
};
use crate::rootsys::RootSystem;
use crate::weights::{self, LatticeChoice, Weight};

/// Caps for the hidden-orbit labels attached to members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HiddenCaps {
    pub size_cap: usize,
    pub rank_cap: usize,
}

impl Default for HiddenCaps {
    fn default() -> Self {
        HiddenCaps { size_cap: hidden::DEFAULT_SIZE_CAP, rank_cap: hidden::DEFAULT_RANK_CAP }
    }
}

/// Highest weight of an irreducible of `G` or of `G′ × G′`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Irr(pub Vec<Vec<i64>>);

impl fmt::Display for Irr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|w| format!("({})", w.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        f.write_str(&parts.join("x"))
    }
}

impl Serialize for Irr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Orbit index of a member in the hidden stabilizer, or the reason it was
/// not computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum HiddenOrbit {
    Id(usize),
    Uncomputed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Context {
    pub root_system: String,
    pub lattice: LatticeChoice,
    pub k_mode: KMode,
    pub ustar: KModule,
    pub metric_scale: ExactQ,
    pub group: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MemberEntry {
    pub mu: Irr,
    pub dual_mu: Irr,
    pub dim: u64,
    pub rep_type: RepType,
    pub isotypic_dim: u64,
    pub hidden_orbit_id: HiddenOrbit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEntry {
    pub a_sq: ExactQ,
    pub lambda: ExactQ,
    pub members: Vec<MemberEntry>,
    /// `Σ isotypic_dim · dim V^{μ*}`.
    pub eigenspace_dim: u64,
    pub structure: String,
    /// Whether all listed members lie in one orbit of the hidden
    /// stabilizer; absent when not computed.
    pub hidden_transitive: Option<bool>,
    /// Number of orbits of the stabilizer on the whole sphere.
    pub hidden_sphere_orbits: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Labels {
    pub bold_g: BoldG,
    pub symmetry_group_description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    pub context: Context,
    pub classes: Vec<ClassEntry>,
    pub labels: Labels,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityClass {
    pub members: Vec<Irr>,
    pub rep_type: RepType,
    /// `dim_ℂ (V^μ ⊗ U*)^K`, equal to the real dimension of its real form.
    pub isotypic_dims: Vec<u64>,
    pub real_dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealClassEntry {
    pub a_sq: ExactQ,
    pub lambda: ExactQ,
    pub duality_classes: Vec<DualityClass>,
    pub real_dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealSpectralReport {
    pub context: Context,
    pub classes: Vec<RealClassEntry>,
    pub labels: Labels,
}

/// Root system, lattice and `U*`; the `K`-mode is read off `U*`.
struct Setting<'a> {
    rs: &'a Arc<RootSystem>,
    lattice: LatticeChoice,
    ustar: &'a KModule,
}

/// One Casimir class of `G` or `G′ × G′`: its dominant members and, when
/// cheap enough, its shifted sphere points.
struct RawClass {
    a_sq: Q,
    dominant: Vec<Irr>,
}

impl Setting<'_> {
    fn factors(&self) -> usize {
        if self.ustar.mode() == KMode::Diagonal {
            2
        } else {
            1
        }
    }

    fn delta_sq(&self) -> Q {
        weights::delta_norm_sq(self.rs) * qi(self.factors() as i64)
    }

    fn a_sq(&self, irr: &Irr) -> Q {
        irr.0.iter().map(|w| Weight::from_fw(w.clone()).a_sq(self.rs)).sum()
    }

    fn dim(&self, irr: &Irr) -> u64 {
        irr.0.iter().map(|w| weyl_dim_fw(self.rs, w)).product()
    }

    fn dual(&self, irr: &Irr) -> Irr {
        Irr(irr.0.iter().map(|w| self.rs.dual_fw(w)).collect())
    }

    fn rep_type(&self, irr: &Irr) -> RepType {
        if self.dual(irr) != *irr {
            return RepType::Complex;
        }
        let quaternionic = irr
            .0
            .iter()
            .filter(|w| classify_type_fw(self.rs, w) == RepType::Quaternionic)
            .count();
        if quaternionic % 2 == 1 {
            RepType::Quaternionic
        } else {
            RepType::Real
        }
    }

    fn label(&self, w: &[i64]) -> RepLabel {
        RepLabel::new(self.rs.clone(), Weight::from_fw(w.to_vec())).expect("dominant member")
    }

    fn isotypic_dim(&self, irr: &Irr) -> Result<u64> {
        let v = match irr.0.as_slice() {
            [w] => IsotypicRep::Single(self.label(w)),
            [a, b] => IsotypicRep::Pair(self.label(a), self.label(b)),
            _ => return Err(Error::Inconsistent("irreducible with wrong factor count".into())),
        };
        invariant_dim(&v, self.ustar)
    }

    fn classes(&self, cap: &Q) -> Vec<RawClass> {
        // With two factors each one carries at least |δ|².
        let factor_cap = if self.factors() == 1 { cap.clone() } else { cap - weights::delta_norm_sq(self.rs) };
        let dominant = weights::enumerate_dominant(self.rs, self.lattice, &factor_cap);
        let mut by: BTreeMap<Q, Vec<Irr>> = BTreeMap::new();
        if self.factors() == 1 {
            for w in dominant {
                by.entry(w.a_sq(self.rs)).or_default().push(Irr(vec![w.fw_coords().to_vec()]));
            }
        } else {
            for a in &dominant {
                for b in &dominant {
                    let s = a.a_sq(self.rs) + b.a_sq(self.rs);
                    if s <= *cap {
                        by.entry(s).or_default().push(Irr(vec![a.fw_coords().to_vec(), b.fw_coords().to_vec()]));
                    }
                }
            }
        }
        by.into_iter()
            .map(|(a_sq, mut dominant)| {
                dominant.sort();
                RawClass { a_sq, dominant }
            })
            .collect()
    }

    /// Shifted sphere points of the class, or `None` beyond `size_cap`.
    fn sphere_points(&self, a_sq: &Q, size_cap: usize) -> Option<Vec<Vec<Q>>> {
        let shift = |w: &Weight| -> Vec<Q> { w.shifted().into_iter().map(qi).collect() };
        if self.factors() == 1 {
            let cls = weights::sphere_set(self.rs, self.lattice, a_sq);
            if cls.sphere_members.len() > size_cap {
                return None;
            }
            return Some(cls.sphere_members.iter().map(shift).collect());
        }
        let ball = weights::lattice_ball(self.rs, self.lattice, a_sq);
        let mut by: BTreeMap<Q, Vec<Vec<Q>>> = BTreeMap::new();
        for w in &ball {
            by.entry(w.a_sq(self.rs)).or_default().push(shift(w));
        }
        let mut count = 0usize;
        for (r, xs) in &by {
            if let Some(ys) = by.get(&(a_sq - r)) {
                count += xs.len() * ys.len();
            }
        }
        if count > size_cap {
            return None;
        }
        let mut out = Vec::new();
        for (r, xs) in &by {
            if let Some(ys) = by.get(&(a_sq - r)) {
                for x in xs {
                    for y in ys {
                        out.push(x.iter().chain(y).cloned().collect());
                    }
                }
            }
        }
        Some(out)
    }

    fn form(&self) -> QMat {
        let g = self.rs.gram_fw();
        let r = g.len();
        let n = r * self.factors();
        let mut f = rational::zeros(n, n);
        for b in 0..self.factors() {
            for i in 0..r {
                for j in 0..r {
                    f[b * r + i][b * r + j] = g[i][j].clone();
                }
            }
        }
        f
    }

    /// Orbit ids of the given members and the orbit count on the sphere.
    fn hidden_orbits(&self, a_sq: &Q, members: &[Irr], caps: HiddenCaps) -> (Vec<HiddenOrbit>, Option<usize>) {
        let uncomputed = |why: &str| (vec![HiddenOrbit::Uncomputed(why.to_string()); members.len()], None);
        let Some(points) = self.sphere_points(a_sq, caps.size_cap) else {
            return uncomputed("uncomputed (cap)");
        };
        let Ok(cfg) = ShiftedConfig::new(points, self.form()) else {
            return uncomputed("uncomputed (empty)");
        };
        let grp = match hidden::stabilizer_group(&cfg, caps.size_cap, caps.rank_cap) {
            Ok(g) => g,
            Err(Error::CapExceeded { .. }) => return uncomputed("uncomputed (cap)"),
            Err(_) => return uncomputed("uncomputed (error)"),
        };
        let orbs = hidden::orbits(&cfg, &grp);
        let ids = hidden::orbit_ids(&orbs, cfg.len());
        let out = members
            .iter()
            .map(|m| {
                let p: Vec<Q> = m.0.iter().flatten().map(|x| qi(x + 1)).collect();
                match cfg.index_of(&p) {
                    Some(i) => HiddenOrbit::Id(ids[i]),
                    None => HiddenOrbit::Uncomputed("uncomputed (missing point)".into()),
                }
            })
            .collect();
        (out, Some(orbs.len()))
    }

    fn context(&self) -> Context {
        let name = self.rs.typ().to_string();
        Context {
            root_system: name.clone(),
            lattice: self.lattice,
            k_mode: self.ustar.mode(),
            ustar: self.ustar.clone(),
            metric_scale: ExactQ(self.rs.metric_scale().clone()),
            group: match self.ustar.mode() {
                KMode::Trivial => format!("G = {name}, K = trivial"),
                KMode::Torus => format!("G = {name}, K = maximal torus"),
                KMode::Diagonal => format!("G = {name} x {name}, K = diagonal {name}"),
            },
        }
    }

    fn labels(&self) -> Labels {
        let bold = group_bold_g(self.rs, self.lattice);
        Labels {
            bold_g: bold,
            symmetry_group_description: format!(
                "O_C x {bold}: orthogonal group of each (V^mu (x) U*)^K times {}",
                match bold {
                    BoldG::G => "G",
                    BoldG::Q8xG => "Q8 x G",
                }
            ),
        }
    }
}

fn complex_report(
    rs: &Arc<RootSystem>,
    lattice: LatticeChoice,
    ustar: &KModule,
    a_sq_cap: &Q,
    caps: HiddenCaps,
) -> Result<SpectralReport> {
    let st = Setting { rs, lattice, ustar };
    let mut classes = Vec::new();
    if !ustar.is_empty() {
        for raw in st.classes(a_sq_cap) {
            let mut kept: Vec<(Irr, u64)> = Vec::new();
            for irr in &raw.dominant {
                let iso = st.isotypic_dim(irr)?;
                if iso > 0 {
                    kept.push((irr.clone(), iso));
                }
            }
            if kept.is_empty() {
                continue;
            }
            let names: Vec<Irr> = kept.iter().map(|(i, _)| i.clone()).collect();
            let (ids, sphere_orbits) = st.hidden_orbits(&raw.a_sq, &names, caps);
            let members: Vec<MemberEntry> = kept
                .iter()
                .zip(&ids)
                .map(|((irr, iso), id)| MemberEntry {
                    mu: irr.clone(),
                    dual_mu: st.dual(irr),
                    dim: st.dim(irr),
                    rep_type: st.rep_type(irr),
                    isotypic_dim: *iso,
                    hidden_orbit_id: id.clone(),
                })
                .collect();
            let eigenspace_dim = members.iter().map(|m| m.isotypic_dim * m.dim).sum();
            let hidden_transitive = if members.len() == 1 {
                None
            } else if ids.iter().all(|i| matches!(i, HiddenOrbit::Id(_))) {
                Some(ids.windows(2).all(|w| w[0] == w[1]))
            } else {
                None
            };
            classes.push(ClassEntry {
                a_sq: ExactQ(raw.a_sq.clone()),
                lambda: ExactQ(&raw.a_sq - st.delta_sq()),
                structure: if members.len() == 1 {
                    "(O_C x G)-irreducible".into()
                } else {
                    format!("finite sum of {} (O_C x G)-irreducibles", members.len())
                },
                members,
                eigenspace_dim,
                hidden_transitive,
                hidden_sphere_orbits: sphere_orbits,
            });
        }
    }
    Ok(SpectralReport { context: st.context(), classes, labels: st.labels() })
}

/// Complex spectral report for every Casimir class up to `a_sq_cap`.
pub fn normal_spectrum_report(
    rs: &Arc<RootSystem>,
    lattice: LatticeChoice,
    ustar: &KModule,
    a_sq_cap: &Q,
    caps: HiddenCaps,
) -> Result<SpectralReport> {
    complex_report(rs, lattice, ustar, a_sq_cap, caps)
}

/// Real version: members folded into duality classes `{μ, μ*}`.
pub fn real_spectrum_report(
    rs: &Arc<RootSystem>,
    lattice: LatticeChoice,
    ustar: &KModule,
    a_sq_cap: &Q,
    caps: HiddenCaps,
) -> Result<RealSpectralReport> {
    let complex = complex_report(rs, lattice, ustar, a_sq_cap, caps)?;
    let classes = complex
        .classes
        .iter()
        .map(|c| {
            let mut folded: Vec<DualityClass> = Vec::new();
            for m in &c.members {
                if folded.iter().any(|d| d.members.contains(&m.mu)) {
                    continue;
                }
                let partner = c.members.iter().find(|o| o.mu == m.dual_mu && o.mu != m.mu);
                let group: Vec<&MemberEntry> = std::iter::once(m).chain(partner).collect();
                folded.push(DualityClass {
                    members: group.iter().map(|e| e.mu.clone()).collect(),
                    rep_type: m.rep_type,
                    isotypic_dims: group.iter().map(|e| e.isotypic_dim).collect(),
                    real_dimension: group.iter().map(|e| e.isotypic_dim * e.dim).sum(),
                });
            }
            RealClassEntry {
                a_sq: c.a_sq.clone(),
                lambda: c.lambda.clone(),
                real_dimension: folded.iter().map(|d| d.real_dimension).sum(),
                duality_classes: folded,
            }
        })
        .collect();
    Ok(RealSpectralReport { context: complex.context, classes, labels: complex.labels })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EstimateTerm {
    pub mu: Irr,
    pub dual_mu: Irr,
    /// Number of copies of `V^{μ*}`: `dim (V^μ ⊗ U*)^K`.
    pub multiplicity: u64,
    pub dim: u64,
    pub dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericEstimate {
    pub context: Context,
    pub mu_lambda: Irr,
    pub a_sq: ExactQ,
    pub lambda: ExactQ,
    pub terms: Vec<EstimateTerm>,
    pub total_dimension: u64,
}

impl GenericEstimate {
    /// Copies of `V^{μ*}` allowed for the member `μ`.
    pub fn multiplicity_of(&self, mu: &Irr) -> u64 {
        self.terms.iter().find(|t| t.mu == *mu).map_or(0, |t| t.multiplicity)
    }
}

/// Bound on an eigenspace near the normal metric at the eigenvalue of
/// `μ_λ`: the sum over `S(a_λ; U*)` of `V^{μ*}` with multiplicity
/// `dim (V^μ ⊗ U*)^K`.
pub fn generic_estimate(
    rs: &Arc<RootSystem>,
    lattice: LatticeChoice,
    ustar: &KModule,
    mu_lambda: &Irr,
) -> Result<GenericEstimate> {
    let st = Setting { rs, lattice, ustar };
    if mu_lambda.0.len() != st.factors() {
        return Err(Error::ShapeMismatch(format!(
            "{} mode needs {} highest weights",
            ustar.mode(),
            st.factors()
        )));
    }
    for w in &mu_lambda.0 {
        Weight::new(rs, lattice, w.clone())?;
        if w.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant(w.clone()));
        }
    }
    let a_sq = st.a_sq(mu_lambda);
    let raw = st
        .classes(&a_sq)
        .into_iter()
        .find(|c| c.a_sq == a_sq)
        .ok_or_else(|| Error::Inconsistent("class of a dominant weight is missing".into()))?;
    let mut terms = Vec::new();
    for irr in raw.dominant {
        let iso = st.isotypic_dim(&irr)?;
        if iso == 0 {
            continue;
        }
        let dual = st.dual(&irr);
        let dim = st.dim(&dual);
        terms.push(EstimateTerm { mu: irr, dual_mu: dual, multiplicity: iso, dim, dimension: iso * dim });
    }
    Ok(GenericEstimate {
        context: st.context(),
        mu_lambda: mu_lambda.clone(),
        lambda: ExactQ(&a_sq - st.delta_sq()),
        a_sq: ExactQ(a_sq),
        total_dimension: terms.iter().map(|t| t.dimension).sum(),
        terms,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeCell {
    pub p: usize,
    pub invariant_dim: u64,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeRow {
    /// Highest weight `m` of `V_μ`, spin `m/2`.
    pub mu: i64,
    /// `a²` of the pair `(μ, μ)` in `SU(2) × SU(2)`.
    pub a_sq: ExactQ,
    pub lambda: ExactQ,
    pub cells: Vec<HodgeCell>,
    pub member_for_all_p: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeDiscrepancy {
    pub mu: i64,
    pub p: usize,
    pub lambda: ExactQ,
    pub annotation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeReport {
    pub group: String,
    pub a_sq_cap: ExactQ,
    pub rows: Vec<HodgeRow>,
    pub discrepancies: Vec<HodgeDiscrepancy>,
}

/// For `G = SU(2) × SU(2)`, `K = ΔSU(2)`: whether `(μ, μ)` occurs in
/// `L²(G, K; ∧^p 𝔪*)` for `p = 0..3`, i.e. whether
/// `(V_μ ⊗ V_μ ⊗ ∧^p 𝔰𝔲(2))^K ≠ 0`.
pub fn hodge_rank1_check(a_sq_cap: &Q) -> Result<HodgeReport> {
    use crate::rootsys::{Family, RootSystemType};
    let rs = Arc::new(RootSystem::new(RootSystemType::new(Family::A, 1)?, Q::from_integer(1.into()))?);
    let wedges: Vec<KModule> = (0..=3).map(|p| KModule::diagonal_wedge_adjoint(&rs, p)).collect::<Result<_>>()?;
    let delta_sq = weights::delta_norm_sq(&rs) * qi(2);
    let mut rows = Vec::new();
    let mut discrepancies = Vec::new();
    for m in 0.. {
        let w = Weight::new(&rs, LatticeChoice::Weight, vec![m])?;
        let a_sq = w.a_sq(&rs) * qi(2);
        if a_sq > *a_sq_cap {
            break;
        }
        let lambda = &a_sq - &delta_sq;
        let v = IsotypicRep::Pair(RepLabel::new(rs.clone(), w.clone())?, RepLabel::new(rs.clone(), w)?);
        let mut cells = Vec::new();
        for (p, wedge) in wedges.iter().enumerate() {
            let d = invariant_dim(&v, wedge)?;
            if d == 0 {
                discrepancies.push(HodgeDiscrepancy {
                    mu: m,
                    p,
                    lambda: ExactQ(lambda.clone()),
                    annotation: if lambda.is_zero() {
                        "lambda = 0 (harmonic): outside the lambda > 0 isomorphisms".into()
                    } else {
                        "lambda > 0".into()
                    },
                });
            }
            cells.push(HodgeCell { p, invariant_dim: d, member: d > 0 });
        }
        rows.push(HodgeRow {
            mu: m,
            member_for_all_p: cells.iter().all(|c| c.member),
            a_sq: ExactQ(a_sq),
            lambda: ExactQ(lambda),
            cells,
        });
    }
    Ok(HodgeReport {
        group: "G = A1 x A1, K = diagonal A1, U* = wedge^p of the adjoint".into(),
        a_sq_cap: ExactQ(a_sq_cap.clone()),
        rows,
        discrepancies,
    })
}

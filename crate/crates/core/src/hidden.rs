//! Hidden symmetries of a Casimir class.
//!
//! A class is viewed through its shifted points `X = {μ + δ}`, all of
//! squared norm `a²`. The stabilizer is the group of orthogonal maps of
//! the weight space carrying `X` onto itself; on the orthogonal
//! complement of `span(X)` every map is taken to be the identity, so the
//! group is determined by the permutations it induces on `X`.
//!
//! Coordinates are fundamental-weight coordinates and orthogonality is
//! with respect to the invariant form of the root system.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{self, format_rational, qi, QMat, Q};
use crate::rootsys::{RootSystem, DEFAULT_WEYL_CAP};
use crate::weights::CasimirClass;

pub const DEFAULT_SIZE_CAP: usize = 60;
pub const DEFAULT_RANK_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedConfig {
    a_sq: Q,
    points: Vec<Vec<Q>>,
    gram: QMat,
    form: QMat,
}

impl ShiftedConfig {
    /// Builds a configuration from arbitrary points under the symmetric
    /// form `form`. Points are deduplicated and sorted; they must share a
    /// common squared norm.
    pub fn new(points: Vec<Vec<Q>>, form: QMat) -> Result<Self> {
        let n = form.len();
        if form.iter().any(|row| row.len() != n) || !rational::is_symmetric(&form) {
            return Err(Error::ShapeMismatch("form must be square and symmetric".into()));
        }
        let set: BTreeSet<Vec<Q>> = points.into_iter().collect();
        let points: Vec<Vec<Q>> = set.into_iter().collect();
        if points.is_empty() {
            return Err(Error::EmptyClass);
        }
        for p in &points {
            if p.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: p.len() });
            }
        }
        let gram: QMat = points
            .iter()
            .map(|x| points.iter().map(|y| bilinear(&form, x, y)).collect())
            .collect();
        let a_sq = gram[0][0].clone();
        if (0..points.len()).any(|i| gram[i][i] != a_sq) {
            return Err(Error::ShapeMismatch("points have different norms".into()));
        }
        Ok(ShiftedConfig { a_sq, points, gram, form })
    }

    pub fn a_sq(&self) -> &Q {
        &self.a_sq
    }

    pub fn points(&self) -> &[Vec<Q>] {
        &self.points
    }

    pub fn gram(&self) -> &QMat {
        &self.gram
    }

    pub fn form(&self) -> &QMat {
        &self.form
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn span_rank(&self) -> usize {
        rational::rank(&self.points)
    }

    /// Index of a point, if present.
    pub fn index_of(&self, x: &[Q]) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_slice().cmp(x)).ok()
    }

    fn permutation_of(&self, m: &QMat) -> Option<Vec<usize>> {
        let mut perm = Vec::with_capacity(self.len());
        let mut hit = vec![false; self.len()];
        for p in &self.points {
            let j = self.index_of(&rational::mat_vec(m, p))?;
            if hit[j] {
                return None;
            }
            hit[j] = true;
            perm.push(j);
        }
        Some(perm)
    }
}

fn bilinear(form: &[Vec<Q>], x: &[Q], y: &[Q]) -> Q {
    rational::dot(x, &rational::mat_vec(form, y))
}

/// The shifted configuration `{μ + δ : μ ∈ S(a)}` of a class.
pub fn shifted_config(rs: &RootSystem, cls: &CasimirClass) -> Result<ShiftedConfig> {
    if cls.sphere_members.is_empty() {
        return Err(Error::EmptyClass);
    }
    let points = cls
        .sphere_members
        .iter()
        .map(|w| w.shifted().into_iter().map(qi).collect())
        .collect();
    ShiftedConfig::new(points, rs.gram_fw().clone())
}

/// An element of the stabilizer: its matrix and the permutation
/// `i ↦ j` with `matrix · points[i] = points[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoMap {
    pub matrix: QMat,
    pub permutation: Vec<usize>,
}

/// Picks a basis of `span(X)` from `X`, each time taking the candidate
/// whose inner products with the chosen points are shared by the fewest
/// other points.
fn choose_anchors(cfg: &ShiftedConfig) -> Vec<usize> {
    let target = cfg.span_rank();
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    while chosen.len() < target {
        let mut best: Option<(usize, usize)> = None;
        for p in 0..cfg.len() {
            if chosen.contains(&p) {
                continue;
            }
            let mut trial = rows.clone();
            trial.push(cfg.points[p].clone());
            if rational::rank(&trial) != trial.len() {
                continue;
            }
            let score: usize = (0..cfg.len())
                .filter(|&q| chosen.iter().all(|&b| cfg.gram[b][q] == cfg.gram[b][p]))
                .count();
            if best.is_none_or(|(s, _)| score < s) {
                best = Some((score, p));
            }
        }
        let (_, p) = best.expect("span rank is attained by points");
        chosen.push(p);
        rows.push(cfg.points[p].clone());
    }
    chosen
}

/// Full stabilizer of `X` by Gram-preserving backtracking over the images
/// of an anchor basis.
pub fn stabilizer_group(cfg: &ShiftedConfig, size_cap: usize, rank_cap: usize) -> Result<Vec<OrthoMap>> {
    if cfg.len() > size_cap {
        return Err(Error::CapExceeded {
            what: "shifted point count",
            required: cfg.len().to_string(),
            cap: size_cap.to_string(),
        });
    }
    let span = cfg.span_rank();
    if span > rank_cap {
        return Err(Error::CapExceeded {
            what: "span rank",
            required: span.to_string(),
            cap: rank_cap.to_string(),
        });
    }
    let n = cfg.form.len();
    let anchors = choose_anchors(cfg);
    // G-orthogonal complement of span(X); maps fix it pointwise.
    let constraints: QMat = anchors
        .iter()
        .map(|&b| rational::mat_vec(&cfg.form, &cfg.points[b]))
        .collect();
    let complement = if anchors.is_empty() {
        rational::identity(n)
    } else {
        rational::null_space(&constraints, n)
    };
    let mut source_cols: Vec<Vec<Q>> = anchors.iter().map(|&b| cfg.points[b].clone()).collect();
    source_cols.extend(complement.iter().cloned());
    let source_inv = rational::inverse(&rational::transpose(&source_cols))
        .ok_or_else(|| Error::Inconsistent("anchor basis is singular".into()))?;

    let mut out: Vec<OrthoMap> = Vec::new();
    let mut images: Vec<usize> = Vec::new();
    backtrack(cfg, &anchors, &mut images, &mut |imgs| {
        let mut cols: Vec<Vec<Q>> = imgs.iter().map(|&j| cfg.points[j].clone()).collect();
        cols.extend(complement.iter().cloned());
        let m = rational::mat_mul(&rational::transpose(&cols), &source_inv);
        let preserves = rational::mat_mul(&rational::mat_mul(&rational::transpose(&m), &cfg.form), &m)
            == cfg.form;
        if !preserves {
            return;
        }
        if let Some(permutation) = cfg.permutation_of(&m) {
            out.push(OrthoMap { matrix: m, permutation });
        }
    });
    out.sort_by(|a, b| a.permutation.cmp(&b.permutation));
    out.dedup_by(|a, b| a.permutation == b.permutation);
    Ok(out)
}

fn backtrack(cfg: &ShiftedConfig, anchors: &[usize], images: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    let k = images.len();
    if k == anchors.len() {
        emit(images);
        return;
    }
    for cand in 0..cfg.len() {
        if images.contains(&cand) {
            continue;
        }
        let consistent = (0..k).all(|i| cfg.gram[images[i]][cand] == cfg.gram[anchors[i]][anchors[k]]);
        if consistent {
            images.push(cand);
            backtrack(cfg, anchors, images, emit);
            images.pop();
        }
    }
}

/// Orbit partition of the point indices; each orbit sorted, orbits
/// ordered by their smallest index.
pub fn orbits(cfg: &ShiftedConfig, grp: &[OrthoMap]) -> Vec<Vec<usize>> {
    orbits_of_permutations(cfg.len(), grp.iter().map(|g| g.permutation.as_slice()))
}

fn orbits_of_permutations<'a>(n: usize, perms: impl Iterator<Item = &'a [usize]>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for perm in perms {
        for (i, &j) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// Result of applying every Weyl element to `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylInclusion {
    pub holds: bool,
    /// Induced permutations, one per Weyl element that preserves `X`.
    pub witnesses: Vec<Vec<usize>>,
    /// Words of Weyl elements that move a point off `X`.
    pub violations: Vec<Vec<usize>>,
}

/// Whether the dislocated Weyl action `μ ↦ w(μ+δ) − δ` preserves the class.
pub fn check_weyl_inclusion(rs: &RootSystem, cfg: &ShiftedConfig, weyl_cap: u128) -> Result<WeylInclusion> {
    if cfg.form.len() != rs.rank() {
        return Err(Error::DimensionMismatch { expected: rs.rank(), got: cfg.form.len() });
    }
    let mut witnesses = Vec::new();
    let mut violations = Vec::new();
    for w in rs.weyl_group(weyl_cap)? {
        let m: QMat = w
            .fw_matrix()
            .iter()
            .map(|row| row.iter().map(|&x| qi(x)).collect())
            .collect();
        match cfg.permutation_of(&m) {
            Some(p) => witnesses.push(p),
            None => violations.push(w.word().to_vec()),
        }
    }
    Ok(WeylInclusion { holds: violations.is_empty(), witnesses, violations })
}

pub fn check_transitivity(cfg: &ShiftedConfig, grp: &[OrthoMap]) -> bool {
    orbits(cfg, grp).len() == 1
}

/// Closure, identity and inverse checks on a list of maps, via their
/// permutations.
pub fn is_group(grp: &[OrthoMap]) -> bool {
    let perms: BTreeSet<&[usize]> = grp.iter().map(|g| g.permutation.as_slice()).collect();
    let Some(n) = grp.first().map(|g| g.permutation.len()) else {
        return false;
    };
    let id: Vec<usize> = (0..n).collect();
    if !perms.contains(id.as_slice()) {
        return false;
    }
    for a in &perms {
        let mut inv = vec![0; n];
        for (i, &j) in a.iter().enumerate() {
            inv[j] = i;
        }
        if !perms.contains(inv.as_slice()) {
            return false;
        }
        for b in &perms {
            let comp: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
            if !perms.contains(comp.as_slice()) {
                return false;
            }
        }
    }
    true
}

/// Summary of the hidden-symmetry analysis of one class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HiddenReport {
    pub a_sq: String,
    pub points: usize,
    pub span_rank: usize,
    pub order: usize,
    pub orbits: usize,
    pub orbit_sizes: Vec<usize>,
    pub transitive: bool,
    pub weyl_included: bool,
    pub weyl_order: usize,
}

/// Stabilizer order, orbits and both verdicts for one class.
pub fn analyze(
    rs: &RootSystem,
    cls: &CasimirClass,
    size_cap: usize,
    rank_cap: usize,
) -> Result<(HiddenReport, ShiftedConfig, Vec<OrthoMap>)> {
    let cfg = shifted_config(rs, cls)?;
    let grp = stabilizer_group(&cfg, size_cap, rank_cap)?;
    if !is_group(&grp) {
        return Err(Error::Inconsistent("stabilizer is not closed".into()));
    }
    let weyl = check_weyl_inclusion(rs, &cfg, DEFAULT_WEYL_CAP)?;
    let orbs = orbits(&cfg, &grp);
    let report = HiddenReport {
        a_sq: format_rational(cfg.a_sq()),
        points: cfg.len(),
        span_rank: cfg.span_rank(),
        order: grp.len(),
        orbits: orbs.len(),
        orbit_sizes: orbs.iter().map(Vec::len).collect(),
        transitive: orbs.len() == 1,
        weyl_included: weyl.holds,
        weyl_order: weyl.witnesses.len() + weyl.violations.len(),
    };
    Ok((report, cfg, grp))
}

/// Orbit index of every point, for callers that label members.
pub fn orbit_ids(orbs: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut ids = vec![0; n];
    for (k, o) in orbs.iter().enumerate() {
        for &i in o {
            ids[i] = k;
        }
    }
    ids
}

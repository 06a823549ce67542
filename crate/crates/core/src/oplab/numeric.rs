//! Floating-point spectra with multiplicity clustering.

use nalgebra::{Complex, DMatrix};
use serde::Serialize;

use super::operator::{build_operator, ExactSpectrum, GroupSpec, IrrepSpec, MetricParam};
use crate::error::{Error, Result};
use crate::rational;

pub const DEFAULT_TOL: f64 = 1e-9;

fn display<S: serde::Serializer>(r: &IrrepSpec, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

/// One eigenvalue cluster over all representations.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cluster {
    pub value: f64,
    pub members: Vec<ClusterMember>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClusterMember {
    #[serde(serialize_with = "display")]
    pub rep: IrrepSpec,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericSpectrum {
    pub numeric: bool,
    pub tol: f64,
    pub clusters: Vec<Cluster>,
}

/// Eigenvalues of one operator, ascending, from the Hermitian matrix
/// `S D S⁻¹` with `S = diag(√w)` for the invariant weights `w`.
pub fn eigenvalues(g: &GroupSpec, rep: &IrrepSpec, kappa: &MetricParam) -> Result<Vec<f64>> {
    let op = build_operator(g, rep, kappa)?;
    let n = op.dim();
    let s: Vec<f64> = op.weights.iter().map(|w| rational::to_f64(w).sqrt()).collect();
    let h = DMatrix::from_fn(n, n, |i, j| {
        let z = &op.matrix[i][j];
        let f = s[i] / s[j];
        Complex::new(rational::to_f64(&z.re) * f, rational::to_f64(&z.im) * f)
    });
    // Symmetrize away rounding before the Hermitian solver.
    let h = (&h + h.adjoint()) * Complex::new(0.5, 0.0);
    let mut ev: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// Hermitian eigensolve per representation, clustered with relative
/// tolerance `tol` (absolute below magnitude 1).
pub fn numeric_spectrum(g: &GroupSpec, reps: &[IrrepSpec], kappa: &MetricParam, tol: f64) -> Result<NumericSpectrum> {
    if !kappa.is_positive_definite() {
        return Err(Error::NotPositiveDefinite);
    }
    let mut all: Vec<(f64, usize)> = Vec::new();
    for (k, rep) in reps.iter().enumerate() {
        for v in eigenvalues(g, rep, kappa)? {
            all.push((v, k));
        }
    }
    all.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut clusters: Vec<(Vec<f64>, Vec<usize>)> = Vec::new();
    for (v, k) in all {
        match clusters.last_mut() {
            Some((vals, ks)) if close(vals[0], v, tol) => {
                vals.push(v);
                ks.push(k);
            }
            _ => clusters.push((vec![v], vec![k])),
        }
    }
    let clusters = clusters
        .into_iter()
        .map(|(vals, ks)| {
            let value = vals.iter().sum::<f64>() / vals.len() as f64;
            let mut members: Vec<ClusterMember> = Vec::new();
            for k in ks {
                match members.iter_mut().find(|m| m.rep == reps[k]) {
                    Some(m) => m.multiplicity += 1,
                    None => members.push(ClusterMember { rep: reps[k].clone(), multiplicity: 1 }),
                }
            }
            members.sort_by(|a, b| a.rep.cmp(&b.rep));
            Cluster { value, members }
        })
        .collect();
    Ok(NumericSpectrum { numeric: true, tol, clusters })
}

/// Eigenspace of the induced operator at one cluster:
/// `Σ dim U* · multiplicity · dim V*`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AssembledCluster {
    pub value: f64,
    pub dimension: usize,
    pub terms: Vec<AssembledTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AssembledTerm {
    #[serde(serialize_with = "display")]
    pub rep: IrrepSpec,
    #[serde(serialize_with = "display")]
    pub dual: IrrepSpec,
    pub multiplicity: usize,
    pub dim_ustar: usize,
    pub dim_dual: usize,
    pub dimension: usize,
}

pub fn assemble(spec: &NumericSpectrum, dim_ustar: usize) -> Vec<AssembledCluster> {
    spec.clusters
        .iter()
        .map(|c| {
            let terms: Vec<AssembledTerm> = c
                .members
                .iter()
                .map(|m| {
                    let dual = m.rep.dual();
                    let dim_dual = dual.dim();
                    AssembledTerm {
                        dimension: dim_ustar * m.multiplicity * dim_dual,
                        rep: m.rep.clone(),
                        dual,
                        multiplicity: m.multiplicity,
                        dim_ustar,
                        dim_dual,
                    }
                })
                .collect();
            AssembledCluster {
                value: c.value,
                dimension: terms.iter().map(|t| t.dimension).sum(),
                terms,
            }
        })
        .collect()
}

/// Whether the floating-point eigenvalues of `rep` agree with its exact
/// spectrum: same count with multiplicity, each within `tol` (relative) of
/// the matching exact root interval.
pub fn agrees_with_exact(exact: &ExactSpectrum, numeric: &[f64], tol: f64) -> bool {
    let mut expected: Vec<(f64, f64)> = Vec::new();
    for ((lo, hi), m) in exact.roots_with_multiplicity() {
        let (lo, hi) = (rational::to_f64(&lo), rational::to_f64(&hi));
        expected.extend(std::iter::repeat_n((lo, hi), m));
    }
    if expected.len() != numeric.len() {
        return false;
    }
    expected.iter().zip(numeric).all(|(&(lo, hi), &v)| {
        let slack = tol * v.abs().max(1.0);
        v >= lo - slack && v <= hi + slack
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oplab::operator::exact_spectrum;
    use crate::rational::{q, qi};

    fn su2() -> GroupSpec {
        GroupSpec::new(1, 0).unwrap()
    }

    fn k123() -> MetricParam {
        MetricParam::diag(&[qi(1), qi(2), qi(3)]).unwrap()
    }

    #[test]
    fn spin_one_spectrum() {
        let s = numeric_spectrum(&su2(), &[IrrepSpec::spin(2)], &k123(), DEFAULT_TOL).unwrap();
        let vals: Vec<f64> = s.clusters.iter().map(|c| c.value).collect();
        assert_eq!(vals.len(), 3);
        for (v, e) in vals.iter().zip([3.0, 4.0, 5.0]) {
            assert!((v - e).abs() < 1e-9);
        }
        assert!(s.clusters.iter().all(|c| c.members[0].multiplicity == 1));
    }

    #[test]
    fn spin_half_is_one_double_cluster() {
        let k = MetricParam::diag(&[q(1, 3), q(5, 2), qi(7)]).unwrap();
        let s = numeric_spectrum(&su2(), &[IrrepSpec::spin(1)], &k, DEFAULT_TOL).unwrap();
        assert_eq!(s.clusters.len(), 1);
        assert_eq!(s.clusters[0].members[0].multiplicity, 2);
    }

    #[test]
    fn casimir_clusters_at_identity() {
        let id = MetricParam::identity(3).unwrap();
        let reps: Vec<IrrepSpec> = (0..6).map(IrrepSpec::spin).collect();
        let s = numeric_spectrum(&su2(), &reps, &id, DEFAULT_TOL).unwrap();
        assert_eq!(s.clusters.len(), 6);
        for (c, m) in s.clusters.iter().zip(0..) {
            assert!((c.value - (m * (m + 2)) as f64 / 4.0).abs() < 1e-9);
            assert_eq!(c.members[0].multiplicity, m as usize + 1);
        }
        let asm = assemble(&s, 4);
        assert_eq!(asm[2].dimension, 4 * 3 * 3);
    }

    #[test]
    fn exact_and_float_agree() {
        let mut k = crate::rational::identity(3);
        k[0][0] = q(3, 2);
        k[0][1] = q(1, 5);
        k[1][0] = q(1, 5);
        k[2][2] = q(9, 4);
        let k = MetricParam::new(k).unwrap();
        for m in 0..6 {
            let rep = IrrepSpec::spin(m);
            let op = build_operator(&su2(), &rep, &k).unwrap();
            let ex = exact_spectrum(&op, &q(1, 1 << 40)).unwrap();
            let num = eigenvalues(&su2(), &rep, &k).unwrap();
            assert!(agrees_with_exact(&ex, &num, DEFAULT_TOL), "m = {m}");
        }
    }

    #[test]
    fn rejects_indefinite_kappa() {
        let k = MetricParam::diag(&[qi(1), qi(-1), qi(1)]).unwrap();
        assert_eq!(
            numeric_spectrum(&su2(), &[IrrepSpec::spin(1)], &k, DEFAULT_TOL),
            Err(Error::NotPositiveDefinite)
        );
    }
}

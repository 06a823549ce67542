//! Exact witnesses that the resultant polynomials `a`, `b`, `c` do not
//! vanish identically on a finite truncation of the dual.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::operator::{bc_value, build_operator, char_poly, GroupSpec, IrrepSpec, MetricParam};
use super::poly::{resultant, RationalPoly};
use crate::error::Result;
use crate::rational::{q, qi, ExactQ, Q};

pub const DEFAULT_BUDGET: usize = 64;
pub const DEFAULT_SEED: u64 = 20_240_607;

/// Primes used for the diagonal witnesses, in order.
const PRIMES: [i64; 12] = [7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Strategy {
    /// Number of candidate `κ` tried before giving up.
    pub budget: usize,
    pub seed: u64,
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy { budget: DEFAULT_BUDGET, seed: DEFAULT_SEED }
    }
}

/// `diag(1, 1 + 1/p, 1 + 2/p, …)`.
pub fn prime_diagonal(n: usize, p: i64) -> MetricParam {
    let v: Vec<Q> = (0..n as i64).map(|k| qi(1) + q(k, p)).collect();
    MetricParam::diag(&v).expect("nonempty diagonal")
}

/// A diagonally dominant (hence positive definite) rational `κ`: the
/// prime diagonal plus off-diagonal entries of size below `1/(2n)`.
pub fn perturbed_kappa<R: Rng>(n: usize, p: i64, rng: &mut R) -> MetricParam {
    let mut k = prime_diagonal(n, p).matrix().clone();
    let den = 97 * 2 * n as i64;
    for i in 0..n {
        for j in i + 1..n {
            let v = q(rng.random_range(-96..=96), den);
            k[i][j] = v.clone();
            k[j][i] = v;
        }
    }
    MetricParam::new(k).expect("symmetric by construction")
}

/// Candidate number `t` of the witness sequence.
pub fn candidate(n: usize, t: usize, rng: &mut ChaCha8Rng) -> MetricParam {
    let p = PRIMES[t % PRIMES.len()];
    if t < PRIMES.len() {
        prime_diagonal(n, p)
    } else {
        perturbed_kappa(n, p, rng)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertEntry {
    /// `"a"`, `"b"` or `"c"`.
    pub kind: &'static str,
    pub reps: Vec<String>,
    pub value: ExactQ,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertStatus {
    Certified,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub status: CertStatus,
    pub group: GroupSpec,
    pub rep_cap: u32,
    pub reps: Vec<String>,
    pub attempts: usize,
    pub strategy: Strategy,
    pub witness_kappa: Option<MetricParam>,
    /// Every required value at the witness (or at the last candidate).
    pub table: Vec<CertEntry>,
    /// Required values that vanished at the last candidate tried.
    pub violations: Vec<CertEntry>,
}

/// Required values at one `κ`: `a` for each pair `V′ ≇ V, V*`, and `b`
/// or `c` for each representation according to its type.
pub fn required_values(g: &GroupSpec, reps: &[IrrepSpec], kappa: &MetricParam) -> Result<Vec<CertEntry>> {
    let polys: Vec<RationalPoly> = reps
        .iter()
        .map(|r| char_poly(&build_operator(g, r, kappa)?))
        .collect::<Result<_>>()?;
    let mut table = Vec::new();
    for (r, p) in reps.iter().zip(&polys) {
        let (kind, v) = bc_value(r, p)?;
        table.push(CertEntry { kind, reps: vec![r.to_string()], value: ExactQ(v) });
    }
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if reps[j] == reps[i].dual() {
                continue;
            }
            let v = resultant(&polys[i], &polys[j])?;
            table.push(CertEntry {
                kind: "a",
                reps: vec![reps[i].to_string(), reps[j].to_string()],
                value: ExactQ(v),
            });
        }
    }
    Ok(table)
}

/// Searches the deterministic witness sequence for a `κ` at which every
/// required value is nonzero. Never certifies on a float path.
pub fn certify(g: &GroupSpec, rep_cap: u32, strategy: Strategy) -> Result<Certificate> {
    let reps = g.irreps_up_to(rep_cap);
    let n = g.lie_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(strategy.seed);
    let mut last_table = Vec::new();
    let mut violations = Vec::new();
    for t in 0..strategy.budget {
        let kappa = candidate(n, t, &mut rng);
        let table = required_values(g, &reps, &kappa)?;
        violations = table.iter().filter(|e| num_traits::Zero::is_zero(&e.value.0)).cloned().collect();
        if violations.is_empty() {
            return Ok(Certificate {
                status: CertStatus::Certified,
                group: *g,
                rep_cap,
                reps: reps.iter().map(ToString::to_string).collect(),
                attempts: t + 1,
                strategy,
                witness_kappa: Some(kappa),
                table,
                violations,
            });
        }
        last_table = table;
    }
    Ok(Certificate {
        status: CertStatus::Inconclusive,
        group: *g,
        rep_cap,
        reps: reps.iter().map(ToString::to_string).collect(),
        attempts: strategy.budget,
        strategy,
        witness_kappa: None,
        table: last_table,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn su2_certificate_on_first_prime() {
        let g = GroupSpec::new(1, 0).unwrap();
        let c = certify(&g, 4, Strategy::default()).unwrap();
        assert_eq!(c.status, CertStatus::Certified);
        assert_eq!(c.attempts, 1);
        assert_eq!(c.witness_kappa, Some(prime_diagonal(3, 7)));
        assert_eq!(c.table.len(), 5 + 10);
        assert!(c.table.iter().all(|e| !e.value.0.is_zero()));
        let kinds: Vec<&str> = c.table.iter().take(5).map(|e| e.kind).collect();
        assert_eq!(kinds, vec!["b", "c", "b", "c", "b"]);
    }

    #[test]
    fn torus_needs_off_diagonal_witness() {
        let g = GroupSpec::new(0, 2).unwrap();
        // (1,1) and (1,−1) collide for every diagonal κ.
        let diag_table = required_values(&g, &g.irreps_up_to(3), &prime_diagonal(2, 7)).unwrap();
        assert!(diag_table.iter().any(|e| e.kind == "a" && e.value.0.is_zero()));
        let c = certify(&g, 3, Strategy::default()).unwrap();
        assert_eq!(c.status, CertStatus::Certified);
        assert!(c.attempts > PRIMES.len());
        let k = c.witness_kappa.as_ref().unwrap();
        assert!(k.is_positive_definite());
        // Direct quadratic-form oracle: distinct non-dual characters separate.
        let reps = g.irreps_up_to(3);
        let m = k.matrix();
        let val = |z: &[i64]| -> Q {
            let mut s = Q::zero();
            for i in 0..2 {
                for j in 0..2 {
                    s += &m[i][j] * qi(z[i] * z[j]);
                }
            }
            s
        };
        for a in &reps {
            for b in &reps {
                if b != a && *b != a.dual() {
                    assert_ne!(val(&a.torus_char), val(&b.torus_char));
                } else {
                    assert_eq!(val(&a.torus_char), val(&b.torus_char));
                }
            }
        }
    }

    #[test]
    fn trivial_list_and_exhausted_budget() {
        let g = GroupSpec::new(1, 0).unwrap();
        let c = certify(&g, 0, Strategy::default()).unwrap();
        assert_eq!(c.status, CertStatus::Certified);
        assert_eq!(c.reps, vec!["m=(0)".to_string()]);
        let g = GroupSpec::new(0, 2).unwrap();
        let c = certify(&g, 1, Strategy { budget: 3, seed: 1 }).unwrap();
        assert_eq!(c.status, CertStatus::Inconclusive);
        assert!(c.witness_kappa.is_none());
        assert!(!c.violations.is_empty());
    }
}

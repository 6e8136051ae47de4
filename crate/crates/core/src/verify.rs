//! Exhaustive verification sweeps with counterexample shrinking.
//!
//! Shape checks run for every `λ` with `|λ| ≤ max_size` and every ambient
//! size `1..=n`. Triple checks run for every `λ, μ` with `|λ|, |μ| ≤ max_size`
//! and every `ν` with `|ν| ≤ |λ| + |μ| + extra_degree`, all of length `≤ n`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grothendieck::{product_expansion, schur_product_expansion, BasisExpansion};
use crate::gtpatterns::{enumerate_mgt, MarkedGtPattern, omega, omega_inverse, upsilon, upsilon_inverse, weight_reversal_check};
use crate::lr::{buch_witnesses, coeff_classical, contra_witnesses, gamma, gamma_inverse, CoefficientQuery};
use crate::shapes::{partitions_of, partitions_up_to, rotate, Partition, SkewShape};
use crate::tableaux::{SetValuedFilling, SvtEnumerator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    UpsilonBijection,
    OmegaBijection,
    WeightReversal,
    RuleAgreement,
    Oracle,
    GammaRoundTrip,
    Classical,
}

impl Check {
    pub const SHAPE: [Check; 3] = [Check::UpsilonBijection, Check::OmegaBijection, Check::WeightReversal];
    pub const TRIPLE: [Check; 4] = [Check::RuleAgreement, Check::Oracle, Check::GammaRoundTrip, Check::Classical];
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Check::UpsilonBijection => "upsilon-bijection",
            Check::OmegaBijection => "omega-bijection",
            Check::WeightReversal => "weight-reversal",
            Check::RuleAgreement => "rule-agreement",
            Check::Oracle => "oracle",
            Check::GammaRoundTrip => "gamma-round-trip",
            Check::Classical => "classical",
        };
        f.write_str(s)
    }
}

/// Deliberate corruption used to test the harness itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Negate every oracle coefficient.
    FlipOracleSign,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Instance {
    Shape { lambda: Partition, n: usize },
    Triple { lambda: Partition, mu: Partition, nu: Partition, n: usize },
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Shape { lambda, n } => write!(f, "λ={lambda} n={n}"),
            Instance::Triple { lambda, mu, nu, n } => write!(f, "λ={lambda} μ={mu} ν={nu} n={n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_size: usize,
    pub n: usize,
    /// Degrees above `|λ| + |μ|` covered by the triple sweep.
    pub extra_degree: usize,
    pub jobs: Option<usize>,
    /// When set, adds `random_pairs` seeded pairs with sizes up to `max_size + 1`.
    pub seed: Option<u64>,
    pub random_pairs: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_size: 3, n: 3, extra_degree: 3, jobs: None, seed: None, random_pairs: 4, fault: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub instance: Instance,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckSummary {
    pub check: Check,
    pub passed: usize,
    pub failed: usize,
    /// First failure in sweep order, shrunk.
    pub minimal: Option<Failure>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<CheckSummary>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }
}

type Outcome = std::result::Result<(), String>;

fn shape_check(check: Check, lambda: &Partition, n: usize) -> Outcome {
    let mgt = enumerate_mgt(lambda, n).map_err(|e| e.to_string())?;
    let e = |x: Error| x.to_string();
    match check {
        Check::UpsilonBijection | Check::OmegaBijection => {
            type Apply = fn(&MarkedGtPattern) -> Result<SetValuedFilling>;
            type Invert = fn(&SetValuedFilling, usize) -> Result<MarkedGtPattern>;
            let (apply, invert, shape): (Apply, Invert, SkewShape) = if check == Check::UpsilonBijection {
                (upsilon, upsilon_inverse, SkewShape::straight(lambda.clone()))
            } else {
                (omega, omega_inverse, rotate(lambda.clone()).skew())
            };
            let mut image = HashSet::new();
            for m in &mgt {
                let f = apply(m).map_err(e)?;
                if &invert(&f, n).map_err(e)? != m {
                    return Err(format!("round trip fails on {f}"));
                }
                image.insert(f);
            }
            if image.len() != mgt.len() {
                return Err("not injective".into());
            }
            let mut target = SvtEnumerator::new(shape, n as u32);
            if check == Check::OmegaBijection {
                target = target.rotated_of(lambda.clone());
            }
            let target: HashSet<_> = target.iter().collect();
            if image != target {
                return Err(format!("image has {} fillings, target has {}", image.len(), target.len()));
            }
            Ok(())
        }
        Check::WeightReversal => {
            for m in &mgt {
                if !weight_reversal_check(m).map_err(e)? {
                    return Err(format!("weights are not reverses for marks {:?}", m.marks()));
                }
            }
            Ok(())
        }
        _ => unreachable!("not a shape check"),
    }
}

fn oracle_value(exp: &BasisExpansion, nu: &Partition, fault: Option<Fault>) -> BigInt {
    let c = exp.coefficient(nu);
    match fault {
        Some(Fault::FlipOracleSign) => -c,
        None => c,
    }
}

fn triple_check(check: Check, q: &CoefficientQuery, exp: Option<&BasisExpansion>, fault: Option<Fault>) -> Outcome {
    let buch = buch_witnesses(q, false);
    match check {
        Check::RuleAgreement => {
            let contra = contra_witnesses(q, false).len();
            if buch.len() != contra {
                return Err(format!("buch={} contra={}", buch.len(), contra));
            }
            Ok(())
        }
        Check::Oracle => {
            let owned;
            let exp = match exp {
                Some(e) => e,
                None => {
                    owned = product_expansion(&q.lambda, &q.mu, q.n, q.nu.size()).map_err(|e| e.to_string())?;
                    &owned
                }
            };
            let oracle = oracle_value(exp, &q.nu, fault);
            if oracle != BigInt::from(buch.len()) {
                return Err(format!("buch={} oracle={}", buch.len(), oracle));
            }
            Ok(())
        }
        Check::GammaRoundTrip => {
            let contra: HashSet<_> = contra_witnesses(q, false).into_iter().collect();
            let mut image = HashSet::new();
            for t in &buch {
                let tr = gamma(t, q).map_err(|e| format!("Γ({t}): {e}"))?;
                let back = gamma_inverse(&tr.s, q).map_err(|e| format!("Γ⁻¹({}): {e}", tr.s))?;
                if &back.t != t {
                    return Err(format!("Γ⁻¹(Γ({t})) = {}", back.t));
                }
                image.insert(tr.s);
            }
            if image != contra {
                return Err("Γ is not onto the contratableau witnesses".into());
            }
            Ok(())
        }
        Check::Classical => {
            if q.nu.size() != q.lambda.size() + q.mu.size() {
                return Ok(());
            }
            let classical = coeff_classical(q).map_err(|e| e.to_string())?;
            let singletons = buch_witnesses(q, true).len() as u64;
            let schur = schur_product_expansion(&q.lambda, &q.mu, q.n).map_err(|e| e.to_string())?.coefficient(&q.nu);
            if classical != singletons || BigInt::from(classical) != schur {
                return Err(format!("contra={classical} buch={singletons} schur={schur}"));
            }
            Ok(())
        }
        _ => unreachable!("not a triple check"),
    }
}

/// Runs one check on one instance from scratch.
pub fn check_instance(check: Check, inst: &Instance, fault: Option<Fault>) -> Outcome {
    match inst {
        Instance::Shape { lambda, n } => shape_check(check, lambda, *n),
        Instance::Triple { lambda, mu, nu, n } => {
            let q = CoefficientQuery::new(lambda.clone(), mu.clone(), nu.clone(), Some(*n)).map_err(|e| e.to_string())?;
            triple_check(check, &q, None, fault)
        }
    }
}

fn smaller_partitions(p: &Partition) -> Vec<Partition> {
    let parts = p.parts();
    let mut out = Vec::new();
    if !parts.is_empty() {
        out.push(Partition::new(parts[1..].to_vec()).expect("suffix of a partition"));
    }
    for i in 0..parts.len() {
        let mut v = parts.to_vec();
        v[i] -= 1;
        if let Ok(q) = Partition::new(v) {
            out.push(q);
        }
    }
    out
}

fn shrink_candidates(inst: &Instance) -> Vec<Instance> {
    match inst {
        Instance::Shape { lambda, n } => {
            smaller_partitions(lambda).into_iter().map(|lambda| Instance::Shape { lambda, n: *n }).collect()
        }
        Instance::Triple { lambda, mu, nu, n } => {
            let n = *n;
            let mut out = Vec::new();
            for l in smaller_partitions(lambda) {
                out.push(Instance::Triple { lambda: l, mu: mu.clone(), nu: nu.clone(), n });
            }
            for m in smaller_partitions(mu) {
                out.push(Instance::Triple { lambda: lambda.clone(), mu: m, nu: nu.clone(), n });
            }
            for v in smaller_partitions(nu) {
                out.push(Instance::Triple { lambda: lambda.clone(), mu: mu.clone(), nu: v, n });
            }
            out
        }
    }
}

/// Greedily moves to smaller failing instances until none fails.
pub fn shrink(check: Check, failure: Failure, fault: Option<Fault>) -> Failure {
    let mut cur = failure;
    'outer: loop {
        for cand in shrink_candidates(&cur.instance) {
            if let Err(reason) = check_instance(check, &cand, fault) {
                cur = Failure { instance: cand, reason };
                continue 'outer;
            }
        }
        return cur;
    }
}

fn pair_list(cfg: &VerifyConfig) -> Vec<(Partition, Partition)> {
    let base = partitions_up_to(cfg.max_size, cfg.n);
    let mut pairs: Vec<_> = base.iter().flat_map(|l| base.iter().map(move |m| (l.clone(), m.clone()))).collect();
    if let Some(seed) = cfg.seed {
        let wider = partitions_up_to(cfg.max_size + 1, cfg.n);
        let fresh: Vec<_> = wider.iter().filter(|p| p.size() > cfg.max_size).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..cfg.random_pairs {
            if let (Some(a), Some(b)) = (wider.choose(&mut rng), fresh.choose(&mut rng)) {
                pairs.push((a.clone(), (*b).clone()));
            }
        }
    }
    pairs
}

type Record = (Check, Instance, Outcome);

fn sweep_pair(cfg: &VerifyConfig, lambda: &Partition, mu: &Partition) -> Vec<Record> {
    let n = cfg.n;
    let top = lambda.size() + mu.size() + cfg.extra_degree;
    let exp = product_expansion(lambda, mu, n, top);
    let mut out = Vec::new();
    for nu in (0..=top).flat_map(|d| partitions_of(d, n)) {
        let q = CoefficientQuery { lambda: lambda.clone(), mu: mu.clone(), nu: nu.clone(), n };
        let inst = Instance::Triple { lambda: lambda.clone(), mu: mu.clone(), nu, n };
        for check in Check::TRIPLE {
            let r = match (&exp, check) {
                (Err(e), Check::Oracle) => Err(e.to_string()),
                (Ok(e), _) => triple_check(check, &q, Some(e), cfg.fault),
                (Err(_), _) => triple_check(check, &q, None, cfg.fault),
            };
            out.push((check, inst.clone(), r));
        }
    }
    out
}

/// Runs every sweep and shrinks the first failure of each check.
pub fn run(cfg: &VerifyConfig) -> Result<Report> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Domain(e.to_string()))?;

    let shapes: Vec<(Partition, usize)> =
        (1..=cfg.n).flat_map(|n| partitions_up_to(cfg.max_size, n).into_iter().map(move |l| (l, n))).collect();
    let pairs = pair_list(cfg);

    let records: Vec<Record> = pool.install(|| {
        let mut recs: Vec<Record> = shapes
            .par_iter()
            .flat_map_iter(|(lambda, n)| {
                Check::SHAPE.into_iter().map(move |c| {
                    (c, Instance::Shape { lambda: lambda.clone(), n: *n }, shape_check(c, lambda, *n))
                })
            })
            .collect();
        recs.extend(pairs.par_iter().flat_map_iter(|(l, m)| sweep_pair(cfg, l, m)).collect::<Vec<_>>());
        recs
    });

    let mut checks = Vec::new();
    for check in Check::SHAPE.into_iter().chain(Check::TRIPLE) {
        let mine: Vec<&Record> = records.iter().filter(|r| r.0 == check).collect();
        let failed = mine.iter().filter(|r| r.2.is_err()).count();
        let minimal = mine.iter().find_map(|(_, inst, r)| match r {
            Err(reason) => Some(Failure { instance: inst.clone(), reason: reason.clone() }),
            Ok(()) => None,
        });
        let minimal = minimal.map(|f| shrink(check, f, cfg.fault));
        checks.push(CheckSummary { check, passed: mine.len() - failed, failed, minimal });
    }
    Ok(Report { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    #[test]
    fn small_sweep_passes() {
        let cfg = VerifyConfig { max_size: 2, n: 2, extra_degree: 2, ..Default::default() };
        let report = run(&cfg).unwrap();
        assert!(report.all_passed(), "{report:?}");
        assert!(report.checks.iter().all(|c| c.passed > 0));
    }

    #[test]
    fn empty_sweep_is_vacuous() {
        let cfg = VerifyConfig { max_size: 0, n: 1, extra_degree: 0, ..Default::default() };
        let report = run(&cfg).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn fault_is_caught_and_shrunk() {
        let cfg = VerifyConfig { max_size: 1, n: 2, extra_degree: 1, fault: Some(Fault::FlipOracleSign), ..Default::default() };
        let report = run(&cfg).unwrap();
        assert!(!report.all_passed());
        let oracle = report.checks.iter().find(|c| c.check == Check::Oracle).unwrap();
        let min = oracle.minimal.as_ref().unwrap();
        assert_eq!(
            min.instance,
            Instance::Triple { lambda: partition![], mu: partition![], nu: partition![], n: 2 }
        );
        assert!(report.checks.iter().filter(|c| c.check != Check::Oracle).all(|c| c.failed == 0));
    }

    #[test]
    fn jobs_do_not_change_results() {
        let base = VerifyConfig { max_size: 2, n: 2, extra_degree: 1, seed: Some(7), ..Default::default() };
        let one = run(&VerifyConfig { jobs: Some(1), ..base.clone() }).unwrap();
        let four = run(&VerifyConfig { jobs: Some(4), ..base }).unwrap();
        let key = |r: &Report| r.checks.iter().map(|c| (c.check, c.passed, c.failed)).collect::<Vec<_>>();
        assert_eq!(key(&one), key(&four));
    }

    #[test]
    fn shrink_candidates_are_smaller() {
        let c = smaller_partitions(&partition![3, 3, 1]);
        assert_eq!(c, vec![partition![3, 1], partition![3, 2, 1], partition![3, 3]]);
    }
}

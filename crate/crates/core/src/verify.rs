//! Verification suites: exact identity checks run over ranges of inputs,
//! reporting every violation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::ThetaMode;
use crate::characters::isotypic_dimension;
use crate::error::{Error, Result};
use crate::operators::{
    apply_cms, apply_delta, apply_dunkl, apply_p, apply_t_power_sum, apply_xd, dunkl_pairing,
    t_power_sum_matrix,
};
use crate::poly::{dominance_leq, monomial_symmetric, Exponents, MultiPoly, Partition, Permutation, VLambda};
use crate::settings::Settings;
use crate::spectra::{
    check_catalog, eig_sym_brute, eig_sym_closed_with, eig_sym_series, isotypic_blocks, jack_polynomial,
    joint_eigenbasis, spectrum_on_v_lambda_with, trace_isotypic_brute_with, trace_isotypic_closed_with,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Commutativity,
    Triangularity,
    #[serde(rename = "selfadjoint")]
    SelfAdjoint,
    Cms,
    Traces,
    Catalog,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Commutativity,
        Suite::Triangularity,
        Suite::SelfAdjoint,
        Suite::Cms,
        Suite::Traces,
        Suite::Catalog,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Commutativity => "commutativity",
            Suite::Triangularity => "triangularity",
            Suite::SelfAdjoint => "selfadjoint",
            Suite::Cms => "cms",
            Suite::Traces => "traces",
            Suite::Catalog => "catalog",
        }
    }

    /// Parse a suite name; `all` gives every suite.
    pub fn parse_list(s: &str) -> Option<Vec<Suite>> {
        if s == "all" {
            return Some(Suite::ALL.to_vec());
        }
        Suite::ALL.iter().find(|x| x.name() == s).map(|&x| vec![x])
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n: usize,
    pub maxdeg: u32,
    pub mode: ThetaMode,
    pub seed: u64,
    /// Number of random polynomials added to the monomial checks.
    pub samples: usize,
    pub settings: Settings,
}

impl VerifyConfig {
    pub fn new(n: usize, maxdeg: u32, mode: ThetaMode) -> Self {
        VerifyConfig {
            n,
            maxdeg,
            mode,
            seed: DEFAULT_SEED,
            samples: 8,
            settings: Settings::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub maxdeg: u32,
    pub theta: String,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub violations: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

type Check = Box<dyn Fn() -> Result<bool> + Send + Sync>;

struct Job {
    label: String,
    check: Check,
}

fn job(label: String, check: impl Fn() -> Result<bool> + Send + Sync + 'static) -> Job {
    Job {
        label,
        check: Box::new(check),
    }
}

fn run_jobs(suite: Suite, jobs: Vec<Job>) -> SuiteReport {
    let mut violations: Vec<String> = jobs
        .par_iter()
        .filter_map(|j| match (j.check)() {
            Ok(true) => None,
            Ok(false) => Some(format!("{}: {}", suite.name(), j.label)),
            Err(e) => Some(format!("{}: {}: {e}", suite.name(), j.label)),
        })
        .collect();
    violations.sort();
    SuiteReport {
        suite,
        checks: jobs.len(),
        violations,
    }
}

/// All exponent vectors in `n` variables of total degree at most `maxdeg`.
pub fn monomials(n: usize, maxdeg: u32) -> Vec<Exponents> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if i == cur.len() {
            out.push(Exponents::new(cur.clone()));
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, maxdeg, &mut vec![0; n], &mut out);
    out.sort();
    out
}

/// Partitions with at most `n` parts and size at most `maxdeg`, the empty
/// partition included.
pub fn partitions_up_to(n: usize, maxdeg: u32) -> Vec<Partition> {
    (0..=maxdeg).flat_map(|d| Partition::all_of(d, n)).collect()
}

/// Random homogeneous polynomials with small integer coefficients.
fn random_polys(cfg: &VerifyConfig, salt: u64) -> Vec<MultiPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ salt);
    let mons = monomials(cfg.n, cfg.maxdeg);
    (0..cfg.samples)
        .map(|_| {
            let d = rng.gen_range(0..=cfg.maxdeg);
            let pool: Vec<&Exponents> = mons.iter().filter(|e| e.degree() == d).collect();
            let mut f = MultiPoly::zero(cfg.n, &cfg.mode);
            for _ in 0..3 {
                let e = pool[rng.gen_range(0..pool.len())];
                let c = cfg.mode.int(rng.gen_range(-3..=3));
                f.add_term(e.clone(), &c);
            }
            f
        })
        .collect()
}

fn test_polys(cfg: &VerifyConfig, salt: u64) -> Vec<(String, MultiPoly)> {
    let mut out: Vec<(String, MultiPoly)> = monomials(cfg.n, cfg.maxdeg)
        .into_iter()
        .map(|e| (format!("x^{e}"), MultiPoly::monomial(e, cfg.mode.one(), &cfg.mode)))
        .collect();
    for (k, f) in random_polys(cfg, salt).into_iter().enumerate() {
        out.push((format!("random sample {k} ({f})"), f));
    }
    out
}

fn swap(n: usize, a: usize, b: usize) -> Permutation {
    Permutation::transposition(n, a, b)
}

/// `[x_a D_a, x_b D_b] f = θ (a,b) (x_b D_b - x_a D_a) f`.
pub fn commutator_identity_holds(a: usize, b: usize, f: &MultiPoly) -> Result<bool> {
    let n = f.nvars();
    let lhs = apply_xd(a, &apply_xd(b, f)?)?.sub(&apply_xd(b, &apply_xd(a, f)?)?);
    let g = f.permute(&swap(n, a, b));
    let rhs = apply_xd(b, &g)?.sub(&apply_xd(a, &g)?).scale(&f.mode().theta());
    Ok(lhs == rhs)
}

fn commutativity_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let n = cfg.n;
    let mut jobs = Vec::new();
    for (label, f) in test_polys(cfg, 1) {
        for l in 1..=3u32 {
            for m in l + 1..=3u32 {
                let f = f.clone();
                jobs.push(job(format!("[P_{l}, P_{m}] on {label}"), move || {
                    let a = apply_p(l, &apply_p(m, &f)?)?;
                    let b = apply_p(m, &apply_p(l, &f)?)?;
                    Ok(a == b)
                }));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let g = f.clone();
                jobs.push(job(format!("[D_{}, D_{}] on {label}", a + 1, b + 1), move || {
                    Ok(apply_dunkl(a, &apply_dunkl(b, &g)?)? == apply_dunkl(b, &apply_dunkl(a, &g)?)?)
                }));
                let g = f.clone();
                jobs.push(job(format!("[Δ_{}, Δ_{}] on {label}", a + 1, b + 1), move || {
                    Ok(apply_delta(a, &apply_delta(b, &g)?)? == apply_delta(b, &apply_delta(a, &g)?)?)
                }));
                let g = f.clone();
                jobs.push(job(format!("[x_{}, Δ_{}] = ({},{}) on {label}", a + 1, b + 1, a + 1, b + 1), move || {
                    let lhs = apply_delta(b, &g)?.mul_var(a).sub(&apply_delta(b, &g.mul_var(a))?);
                    Ok(lhs == g.permute(&swap(n, a, b)))
                }));
                let g = f.clone();
                jobs.push(job(format!("[∂_{}, Δ_{}] on {label}", a + 1, b + 1), move || {
                    // (x_a - x_b)^2 [∂_a, Δ_b] g = (1 - (a,b)) g + (x_a - x_b)(∂_a - ∂_b)(a,b) g
                    let comm = apply_delta(b, &g)?.partial(a).sub(&apply_delta(b, &g.partial(a))?);
                    let d = MultiPoly::variable(n, a, g.mode()).sub(&MultiPoly::variable(n, b, g.mode()));
                    let lhs = d.mul(&d).mul(&comm);
                    let s = g.permute(&swap(n, a, b));
                    let rhs = g.sub(&s).add(&d.mul(&s.partial(a).sub(&s.partial(b))));
                    Ok(lhs == rhs)
                }));
                if a < b {
                    let g = f.clone();
                    jobs.push(job(
                        format!("[x_{0}D_{0}, x_{1}D_{1}] = θ(a,b)(x_{1}D_{1} - x_{0}D_{0}) on {label}", a + 1, b + 1),
                        move || commutator_identity_holds(a, b, &g),
                    ));
                }
            }
        }
    }
    jobs
}

/// `P_m x^γ - Σ_i T_i^m x^γ` is supported on monomials whose sorted
/// exponent is strictly dominated by `γ⁺`.
pub fn triangular_remainder_ok(gamma: &Exponents, m: u32, mode: &ThetaMode, settings: &Settings) -> Result<bool> {
    let f = MultiPoly::monomial(gamma.clone(), mode.one(), mode);
    let rem = apply_p(m, &f)?.sub(&apply_t_power_sum(m, &f, settings)?);
    let lam = crate::poly::sort_to_partition(gamma);
    Ok(rem
        .support_shapes()
        .iter()
        .all(|mu| mu != &lam && dominance_leq(mu, &lam)))
}

/// Number of eigenfunctions led by `V_λ` in each isotype matches the
/// isotypic dimension, which vanishes exactly when `Mult(λ) ⋠ τ`.
fn counts_ok(lambda: &Partition, n: usize, mode: &ThetaMode, settings: &Settings) -> Result<bool> {
    let mult = crate::poly::MultiplicityProfile::new(lambda, n)?.mult_partition();
    let counts: Vec<(Partition, usize)> = if mode.is_symbolic() {
        let vl = VLambda::new(lambda, n)?;
        let op = t_power_sum_matrix(&vl, 1, mode, settings)?;
        isotypic_blocks(&vl, &op, mode)?
            .into_iter()
            .map(|b| (b.tau, b.basis.len()))
            .collect()
    } else {
        let jb = joint_eigenbasis(lambda, n, &[1, 2, 3], mode, settings)?;
        Partition::all_of(n as u32, n)
            .into_iter()
            .map(|t| {
                let c = jb.count_for(&t);
                (t, c)
            })
            .collect()
    };
    for tau in Partition::all_of(n as u32, n) {
        let want = isotypic_dimension(lambda, &tau, n)?;
        let got = counts.iter().find(|(t, _)| t == &tau).map_or(0, |(_, c)| *c);
        if got as u64 != want || (want == 0) == dominance_leq(&mult, &tau) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn triangularity_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    for gamma in monomials(cfg.n, cfg.maxdeg) {
        for m in 1..=3u32 {
            let (g, mode, st) = (gamma.clone(), cfg.mode.clone(), cfg.settings);
            jobs.push(job(format!("remainder of P_{m} x^{gamma} is strictly dominated"), move || {
                triangular_remainder_ok(&g, m, &mode, &st)
            }));
        }
    }
    for lambda in partitions_up_to(cfg.n, cfg.maxdeg) {
        let (l, n, mode, st) = (lambda.clone(), cfg.n, cfg.mode.clone(), cfg.settings);
        jobs.push(job(format!("eigenfunction counts for λ=({lambda})"), move || {
            counts_ok(&l, n, &mode, &st)
        }));
    }
    jobs
}

fn selfadjoint_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let mons = monomials(cfg.n, cfg.maxdeg);
    let mut jobs = Vec::new();
    for f in &mons {
        for g in mons.iter().filter(|g| g.degree() == f.degree() && *g >= f) {
            let mode = cfg.mode.clone();
            let n = cfg.n;
            let (fe, ge) = (f.clone(), g.clone());
            jobs.push(job(format!("⟨x_iD_i x^{f}, x^{g}⟩ = ⟨x^{f}, x_iD_i x^{g}⟩"), move || {
                let fp = MultiPoly::monomial(fe.clone(), mode.one(), &mode);
                let gp = MultiPoly::monomial(ge.clone(), mode.one(), &mode);
                if dunkl_pairing(&fp, &gp)? != dunkl_pairing(&gp, &fp)? {
                    return Ok(false);
                }
                for i in 0..n {
                    if dunkl_pairing(&apply_xd(i, &fp)?, &gp)? != dunkl_pairing(&fp, &apply_xd(i, &gp)?)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }));
        }
    }
    jobs
}

fn cms_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    partitions_up_to(cfg.n, cfg.maxdeg)
        .into_iter()
        .map(|lambda| {
            let (n, mode) = (cfg.n, cfg.mode.clone());
            job(format!("P_2 m_({lambda}) equals the CMS operator"), move || {
                let f = monomial_symmetric(&lambda, n, &mode)?;
                Ok(apply_p(2, &f)? == apply_cms(&f)?)
            })
        })
        .collect()
}

fn traces_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    let n = cfg.n;
    for lambda in partitions_up_to(n, cfg.maxdeg) {
        for m in 1..=3u32 {
            for tau in Partition::all_of(n as u32, n) {
                let (l, t, mode, st) = (lambda.clone(), tau.clone(), cfg.mode.clone(), cfg.settings);
                jobs.push(job(format!("trace λ=({lambda}) τ=({tau}) m={m}"), move || {
                    Ok(trace_isotypic_closed_with(&l, &t, m, n, &mode, &st)?
                        == trace_isotypic_brute_with(&l, &t, m, n, &mode, &st)?)
                }));
            }
            let (l, mode, st) = (lambda.clone(), cfg.mode.clone(), cfg.settings);
            jobs.push(job(format!("spectrum λ=({lambda}) m={m}"), move || {
                Ok(spectrum_on_v_lambda_with(&l, m, n, &mode, &st)?.all_ok())
            }));
        }
        let (l, mode, st) = (lambda.clone(), cfg.mode.clone(), cfg.settings);
        jobs.push(job(format!("symmetric eigenvalues λ=({lambda})"), move || {
            let jack = jack_polynomial(&l, n, &[1, 2, 3], &mode)?;
            let series = if mode.theta().is_zero() {
                None
            } else {
                Some(eig_sym_series(&l, n, 3, &mode)?)
            };
            for (m, e) in &jack.eigenvalues {
                let closed = eig_sym_closed_with(&l, *m, n, &mode, &st)?;
                let brute = eig_sym_brute(&l, *m, n, &mode, &st)?;
                if &closed != e || brute != closed {
                    return Ok(false);
                }
                if let Some(s) = &series {
                    if s[*m as usize] != closed {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }));
    }
    jobs
}

fn catalog_jobs(cfg: &VerifyConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    let top = cfg.maxdeg;
    let shapes = (0..=top).flat_map(|a| (0..=a).flat_map(move |b| (0..=b).map(move |c| vec![a, b, c])));
    for parts in shapes {
        let lambda = Partition::from_unsorted(parts);
        for m in 1..=4u32 {
            let (l, mode, st) = (lambda.clone(), cfg.mode.clone(), cfg.settings);
            jobs.push(job(format!("catalog λ=({lambda}) m={m}"), move || {
                Ok(check_catalog(&l, m, &mode, &st)?.iter().all(|v| v.ok))
            }));
        }
    }
    jobs
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let jobs = match suite {
        Suite::Commutativity => commutativity_jobs(cfg),
        Suite::Triangularity => triangularity_jobs(cfg),
        Suite::SelfAdjoint => selfadjoint_jobs(cfg),
        Suite::Cms => cms_jobs(cfg),
        Suite::Traces => traces_jobs(cfg),
        Suite::Catalog => catalog_jobs(cfg),
    };
    run_jobs(suite, jobs)
}

pub fn verify(suites: &[Suite], cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.n == 0 {
        return Err(Error::InvalidArgument("need at least one variable".into()));
    }
    let reports: Vec<SuiteReport> = suites.iter().map(|&s| run_suite(s, cfg)).collect();
    let mut violations: Vec<String> = reports.iter().flat_map(|r| r.violations.clone()).collect();
    violations.sort();
    Ok(VerifyReport {
        n: cfg.n,
        maxdeg: cfg.maxdeg,
        theta: cfg.mode.to_string(),
        seed: cfg.seed,
        suites: reports,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 2).len(), 10);
        assert_eq!(monomials(2, 0).len(), 1);
        assert_eq!(partitions_up_to(2, 3).len(), 1 + 1 + 2 + 2);
    }

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig::new(2, 3, ThetaMode::specialized(1, 2));
        let rep = verify(&Suite::ALL, &cfg).unwrap();
        assert!(rep.passed(), "{:?}", rep.violations);
    }

    #[test]
    fn mutations_are_caught() {
        use crate::settings::Mutation;
        for mutation in [Mutation::SymmetricSign, Mutation::TDiagonal, Mutation::AveragedNorm] {
            let mut cfg = VerifyConfig::new(3, 2, ThetaMode::specialized(1, 1));
            cfg.settings.mutation = Some(mutation);
            let rep = verify(&[Suite::Traces], &cfg).unwrap();
            assert!(!rep.passed(), "{mutation:?} went unnoticed");
        }
    }
}

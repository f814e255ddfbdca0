//! Explicit matrices of `Σ_i T_i^m` on `V_λ`, their isotypic blocks and
//! exact spectra.

use serde::Serialize;

use crate::arith::{ExactMatrix, QPoly, Scalar, ScalarPoly, ThetaMode};
use crate::characters::{isotypic_dimension, projector_matrix};
use crate::error::{Error, Result};
use crate::operators::{t_power_matrix, t_power_sum_matrix};
use crate::poly::{MultiplicityProfile, Partition, VLambda};
use crate::settings::Settings;

use super::closed::{eig_skew_closed, eig_sym_closed_with, eig_two_block, trace_isotypic_closed_with};

fn trace_of_product(a: &ExactMatrix, b: &ExactMatrix) -> Scalar {
    let mut acc = a.mode().zero();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            let x = a.get(r, c);
            if x.is_zero() {
                continue;
            }
            let y = b.get(c, r);
            if !y.is_zero() {
                acc += &(x * y);
            }
        }
    }
    acc
}

/// `Trace_{V_λ}[π_τ Σ_i T_i^m]`, computed both as written and as
/// `N · Trace[π_τ T_1^m]`; the two must agree.
pub fn trace_isotypic_brute(
    lambda: &Partition,
    tau: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
) -> Result<Scalar> {
    trace_isotypic_brute_with(lambda, tau, m, n, mode, &Settings::default())
}

pub fn trace_isotypic_brute_with(
    lambda: &Partition,
    tau: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<Scalar> {
    let vl = VLambda::new(lambda, n)?;
    let proj = projector_matrix(tau, &vl, mode)?;
    let sum = t_power_sum_matrix(&vl, m, mode, settings)?;
    let full = trace_of_product(&proj, &sum);
    let one = t_power_matrix(&vl, 0, m, mode, settings)?;
    let via_first = trace_of_product(&proj, &one).scale_int(n as i64);
    if full != via_first {
        return Err(Error::Inconsistent(format!(
            "trace of π_τ ΣT^m is {full} but N·trace of π_τ T_1^m is {via_first}"
        )));
    }
    Ok(full)
}

/// Eigenvalue of `Σ_i T_i^m` on the all-ones vector of `V_λ`.
pub fn eig_sym_brute(
    lambda: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<Scalar> {
    let vl = VLambda::new(lambda, n)?;
    let mat = t_power_sum_matrix(&vl, m, mode, settings)?;
    let v = mat.mul_vec(&vec![mode.one(); vl.dim()])?;
    if v.iter().any(|x| x != &v[0]) {
        return Err(Error::Inconsistent(format!(
            "the symmetric vector of V_{lambda} is not an eigenvector"
        )));
    }
    Ok(v[0].clone())
}

/// An isotypic block: basis vectors in `V_λ` coordinates and the restricted
/// operator.
#[derive(Clone, Debug)]
pub struct IsotypicBlock {
    pub tau: Partition,
    pub basis: Vec<Vec<Scalar>>,
    pub restricted: ExactMatrix,
}

/// Restriction of an invariant operator to the span of `basis`, using the
/// identity rows `pivots` of the echelon basis.
pub fn restrict(op: &ExactMatrix, basis: &[Vec<Scalar>], pivots: &[usize]) -> Result<ExactMatrix> {
    let k = basis.len();
    let imgs: Vec<Vec<Scalar>> = basis.iter().map(|b| op.mul_vec(b)).collect::<Result<_>>()?;
    let r = ExactMatrix::from_fn(k, k, op.mode(), |row, col| imgs[col][pivots[row]].clone());
    // Invariance check: the image must equal its reconstruction.
    for (col, img) in imgs.iter().enumerate() {
        for (i, x) in img.iter().enumerate() {
            let mut acc = op.mode().zero();
            for (j, b) in basis.iter().enumerate() {
                let c = r.get(j, col);
                if !c.is_zero() && !b[i].is_zero() {
                    acc += &(c * &b[i]);
                }
            }
            if &acc != x {
                return Err(Error::Inconsistent("subspace is not invariant".into()));
            }
        }
    }
    Ok(r)
}

/// Nonzero isotypic blocks of `op` on `V_λ`, in the order of
/// `Partition::all_of`.
pub fn isotypic_blocks(vl: &VLambda, op: &ExactMatrix, mode: &ThetaMode) -> Result<Vec<IsotypicBlock>> {
    let n = vl.nvars();
    let mut out = Vec::new();
    for tau in Partition::all_of(n as u32, n) {
        if isotypic_dimension(vl.lambda(), &tau, n)? == 0 {
            continue;
        }
        let proj = projector_matrix(&tau, vl, mode)?;
        let (basis, pivots) = proj.column_space();
        let restricted = restrict(op, &basis, &pivots)?;
        out.push(IsotypicBlock {
            tau,
            basis,
            restricted,
        });
    }
    Ok(out)
}

/// An eigenvalue: exact, or an irreducible monic minimal polynomial over Q
/// (coefficients in descending order) when the roots are irrational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenValue {
    Exact(Scalar),
    MinPoly(Vec<Scalar>),
}

impl EigenValue {
    pub fn exact(&self) -> Option<&Scalar> {
        match self {
            EigenValue::Exact(s) => Some(s),
            EigenValue::MinPoly(_) => None,
        }
    }
}

impl std::fmt::Display for EigenValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EigenValue::Exact(s) => write!(f, "{s}"),
            EigenValue::MinPoly(c) => {
                let s: Vec<String> = c.iter().map(ToString::to_string).collect();
                write!(f, "root of [{}]", s.join(", "))
            }
        }
    }
}

impl Serialize for EigenValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EigenValue::Exact(x) => s.serialize_str(&x.to_string()),
            EigenValue::MinPoly(c) => {
                let strs: Vec<String> = c.iter().map(ToString::to_string).collect();
                strs.serialize(s)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    BruteForce,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::BruteForce => "brute-force",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenRecord {
    pub lambda: Partition,
    /// `None` when the eigenvalue was not attributed to an isotype.
    pub tau: Option<Partition>,
    pub m: u32,
    pub value: EigenValue,
    pub mult: usize,
    pub provenance: Provenance,
}

/// A factor of a characteristic polynomial with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub value: EigenValue,
    pub mult: usize,
    /// Set when the factor has degree above two and was left unfactored.
    pub unfactored: bool,
}

/// Split a characteristic polynomial over Q into linear factors, quadratic
/// factors and unfactored remainders (specialized mode only).
pub fn factor_charpoly(coeffs: &[Scalar], mode: &ThetaMode) -> Result<Vec<Factor>> {
    if mode.is_symbolic() {
        return Err(Error::InvalidArgument(
            "factoring needs a specialized θ".into(),
        ));
    }
    let p = ScalarPoly::new(coeffs.to_vec(), mode)
        .to_qpoly()
        .ok_or_else(|| Error::ModeMismatch("factor_charpoly".into()))?;
    let mut out = Vec::new();
    for (sf, mult) in p.squarefree_decomposition() {
        let mut rest = sf.clone();
        for r in sf.rational_roots() {
            out.push(Factor {
                value: EigenValue::Exact(mode.rational(r.clone())),
                mult,
                unfactored: false,
            });
            let lin = QPoly::from_coeffs(vec![-r, num::One::one()]);
            rest = rest.div_exact(&lin)?;
        }
        if let Some(d) = rest.degree() {
            if d > 0 {
                let coeffs: Vec<Scalar> = rest
                    .monic()
                    .coeffs()
                    .iter()
                    .rev()
                    .map(|c| mode.rational(c.clone()))
                    .collect();
                out.push(Factor {
                    value: EigenValue::MinPoly(coeffs),
                    mult,
                    unfactored: d > 2,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockReport {
    pub tau: Partition,
    pub dim: usize,
    pub charpoly: Vec<Scalar>,
    pub trace: Scalar,
    pub closed_trace: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueMult {
    pub value: EigenValue,
    pub mult: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub check: String,
    pub ok: bool,
}

/// Spectrum of `P_m` restricted to eigenfunctions led by `V_λ`.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub lambda: Partition,
    pub m: u32,
    pub theta: String,
    pub dim: usize,
    /// Distinct eigenvalues with multiplicities: from the factored
    /// characteristic polynomials when θ is a number, otherwise the
    /// verified closed forms.
    pub eigenvalues: Vec<ValueMult>,
    pub records: Vec<EigenRecord>,
    pub blocks: Vec<BlockReport>,
    pub verdicts: Vec<Verdict>,
    pub unfactored: bool,
}

impl SpectrumReport {
    pub fn all_ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.ok)
    }

    /// Eigenvalues with multiplicities summed over isotypes.
    pub fn eigenvalues(&self) -> Vec<(EigenValue, usize)> {
        self.eigenvalues.iter().map(|v| (v.value.clone(), v.mult)).collect()
    }
}

fn aggregate(records: &[EigenRecord], provenance: Provenance) -> Vec<ValueMult> {
    let mut out: Vec<ValueMult> = Vec::new();
    for r in records.iter().filter(|r| r.provenance == provenance) {
        match out.iter_mut().find(|v| v.value == r.value) {
            Some(entry) => entry.mult += r.mult,
            None => out.push(ValueMult {
                value: r.value.clone(),
                mult: r.mult,
            }),
        }
    }
    out
}

/// Closed-form eigenvalues known for an isotype, if any: the symmetric and
/// skew ones, and every isotype when `λ` has two distinct values.
pub fn eig_closed_for_isotype(
    lambda: &Partition,
    tau: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<Option<Scalar>> {
    if tau.length() == 1 {
        return eig_sym_closed_with(lambda, m, n, mode, settings).map(Some);
    }
    if tau.part(0) == 1 && lambda.has_distinct_parts(n) {
        return eig_skew_closed(lambda, m, n, mode).map(Some);
    }
    let prof = MultiplicityProfile::new(lambda, n)?;
    if prof.blocks() == 2 && tau.length() == 2 {
        let eta = prof.multiplicities[1];
        let k = tau.part(1) as usize;
        if k <= eta.min(n - eta) {
            let (a, b) = (prof.degrees[0], prof.degrees[1]);
            return eig_two_block(n, eta, a, b, m, k, mode).map(Some);
        }
    }
    Ok(None)
}

pub fn spectrum_on_v_lambda(
    lambda: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
) -> Result<SpectrumReport> {
    spectrum_on_v_lambda_with(lambda, m, n, mode, &Settings::default())
}

pub fn spectrum_on_v_lambda_with(
    lambda: &Partition,
    m: u32,
    n: usize,
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<SpectrumReport> {
    let vl = VLambda::new(lambda, n)?;
    let op = t_power_sum_matrix(&vl, m, mode, settings)?;
    let mut records = Vec::new();
    let mut blocks = Vec::new();
    let mut verdicts = Vec::new();
    let mut unfactored = false;
    let mut verified = Vec::new();
    for block in isotypic_blocks(&vl, &op, mode)? {
        let dim = block.basis.len();
        let charpoly = block.restricted.charpoly_with_cap(settings.symbolic_cap)?;
        let trace = block.restricted.trace()?;
        let closed_trace = trace_isotypic_closed_with(lambda, &block.tau, m, n, mode, settings)?;
        verdicts.push(Verdict {
            check: format!("trace τ={} equals closed form", block.tau),
            ok: trace == closed_trace,
        });
        let cp = ScalarPoly::new(charpoly.clone(), mode);
        if let Some(v) = eig_closed_for_isotype(lambda, &block.tau, m, n, mode, settings)? {
            let mult = cp.root_multiplicity(&v)?;
            verdicts.push(Verdict {
                check: format!("closed-form eigenvalue {v} has multiplicity {dim} on τ={}", block.tau),
                ok: mult == dim,
            });
            let record = EigenRecord {
                lambda: lambda.clone(),
                tau: Some(block.tau.clone()),
                m,
                value: EigenValue::Exact(v),
                mult: dim,
                provenance: Provenance::ClosedForm,
            };
            if mult == dim {
                verified.push(record.clone());
            }
            records.push(record);
        }
        if !mode.is_symbolic() {
            for f in factor_charpoly(&charpoly, mode)? {
                unfactored |= f.unfactored;
                let deg = match &f.value {
                    EigenValue::Exact(_) => 1,
                    EigenValue::MinPoly(c) => c.len() - 1,
                };
                records.push(EigenRecord {
                    lambda: lambda.clone(),
                    tau: Some(block.tau.clone()),
                    m,
                    value: f.value,
                    mult: f.mult * deg,
                    provenance: Provenance::BruteForce,
                });
            }
        }
        blocks.push(BlockReport {
            tau: block.tau,
            dim,
            charpoly,
            trace,
            closed_trace,
        });
    }
    let total: usize = blocks.iter().map(|b| b.dim).sum();
    verdicts.push(Verdict {
        check: "block dimensions add up to dim V_λ".into(),
        ok: total == vl.dim(),
    });
    let eigenvalues = if mode.is_symbolic() {
        aggregate(&verified, Provenance::ClosedForm)
    } else {
        aggregate(&records, Provenance::BruteForce)
    };
    Ok(SpectrumReport {
        n,
        lambda: lambda.clone(),
        m,
        theta: mode.to_string(),
        dim: vl.dim(),
        eigenvalues,
        records,
        blocks,
        verdicts,
        unfactored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn spectrum_v110() {
        let one = ThetaMode::specialized(1, 1);
        let rep = spectrum_on_v_lambda(&part("1,1,0"), 2, 3, &one).unwrap();
        assert!(rep.all_ok(), "{:?}", rep.verdicts);
        let mut ev = rep.eigenvalues();
        ev.sort_by_key(|(_, m)| *m);
        assert_eq!(
            ev,
            vec![
                (EigenValue::Exact(one.int(4)), 1),
                (EigenValue::Exact(one.int(10)), 2)
            ]
        );
    }

    #[test]
    fn brute_trace_examples() {
        let one = ThetaMode::specialized(1, 1);
        assert_eq!(
            trace_isotypic_brute(&part("1,1,0"), &part("3"), 2, 3, &one).unwrap(),
            one.int(4)
        );
        let s = ThetaMode::Symbolic;
        assert_eq!(
            trace_isotypic_brute(&part("2,1,0"), &part("1,1,1"), 1, 3, &s).unwrap(),
            s.linear(3, 6)
        );
        assert_eq!(
            trace_isotypic_brute(&part("2,1,0"), &part("2,1"), 1, 3, &s).unwrap(),
            s.linear(12, 12)
        );
    }

    #[test]
    fn aaa_single_eigenvalue() {
        let s = ThetaMode::Symbolic;
        let rep = spectrum_on_v_lambda(&part("2,2,2"), 3, 3, &s).unwrap();
        assert_eq!(rep.blocks.len(), 1);
        assert_eq!(rep.blocks[0].charpoly, vec![s.one(), s.int(-24)]);
    }

    #[test]
    fn factoring() {
        let one = ThetaMode::specialized(1, 1);
        // (t-4)(t-10)^2 (t^2-2)
        let c = ScalarPoly::linear_factor(&one.int(4), &one)
            .mul(&ScalarPoly::linear_factor(&one.int(10), &one).pow(2))
            .mul(&ScalarPoly::new(vec![one.one(), one.zero(), one.int(-2)], &one));
        let fs = factor_charpoly(c.coeffs(), &one).unwrap();
        assert!(fs.contains(&Factor { value: EigenValue::Exact(one.int(4)), mult: 1, unfactored: false }));
        assert!(fs.contains(&Factor { value: EigenValue::Exact(one.int(10)), mult: 2, unfactored: false }));
        assert!(fs.iter().any(|f| matches!(&f.value, EigenValue::MinPoly(c) if c.len() == 3)));
    }
}

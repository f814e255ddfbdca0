//! Symmetric Jack polynomials and joint eigenfunctions of the `P_m`.

use serde::{Serialize, Serializer};

use crate::arith::{ExactMatrix, Scalar, ThetaMode};
use crate::error::{Error, Result};
use crate::operators::{apply_p, p_matrix, t_power_sum_matrix};
use crate::poly::{enumerate_dominated, monomial_symmetric, Exponents, MultiPoly, Partition, VLambda};
use crate::settings::Settings;

use super::brute::{factor_charpoly, isotypic_blocks, EigenValue};

fn ser_display<T: std::fmt::Display, S: Serializer>(x: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct JackPolynomial {
    pub lambda: Partition,
    pub n: usize,
    #[serde(serialize_with = "ser_display")]
    pub poly: MultiPoly,
    /// Coefficients on `m_μ`, `μ ⪯ λ`, in decreasing lexicographic order.
    pub coefficients: Vec<(Partition, Scalar)>,
    pub eigenvalues: Vec<(u32, Scalar)>,
}

fn check_ms(ms: &[u32]) -> Result<()> {
    if ms.is_empty() || ms.contains(&0) {
        return Err(Error::InvalidArgument(
            "need a nonempty list of m >= 1".into(),
        ));
    }
    Ok(())
}

/// Eigenvalue of `P_m` on `f`, checked on every term.
pub fn eigenvalue_of(m: u32, f: &MultiPoly) -> Result<Scalar> {
    let (lead, c) = f
        .terms()
        .next_back()
        .ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    let g = apply_p(m, f)?;
    let e = g.coefficient(lead).checked_div(c)?;
    if g != f.scale(&e) {
        return Err(Error::Inconsistent(format!("not an eigenfunction of P_{m}")));
    }
    Ok(e)
}

/// The symmetric eigenfunction `m_λ + Σ_{μ≺λ} c_μ m_μ`, together with its
/// eigenvalues for each `m` in `ms`.
///
/// The coefficients come from a triangular solve with `P_2`; when a pivot
/// vanishes at the given θ, `P_3` and `P_4` are tried before giving up.
pub fn jack_polynomial(lambda: &Partition, n: usize, ms: &[u32], mode: &ThetaMode) -> Result<JackPolynomial> {
    lambda.padded(n)?;
    let mus = enumerate_dominated(lambda, n);
    let sym: Vec<MultiPoly> = mus
        .iter()
        .map(|mu| monomial_symmetric(mu, n, mode))
        .collect::<Result<_>>()?;
    let leads: Vec<Exponents> = mus
        .iter()
        .map(|mu| mu.padded(n).map(Exponents::new))
        .collect::<Result<_>>()?;
    let mut failure = String::new();
    for m in [2u32, 3, 4] {
        // a[i][j] = coefficient of m_{μ_i} in P_m m_{μ_j}
        let images: Vec<MultiPoly> = sym.iter().map(|f| apply_p(m, f)).collect::<Result<_>>()?;
        let a = |i: usize, j: usize| images[j].coefficient(&leads[i]);
        let e = a(0, 0);
        let mut c = vec![mode.zero(); mus.len()];
        c[0] = mode.one();
        let mut ok = true;
        for i in 1..mus.len() {
            let mut rhs = mode.zero();
            for j in 0..i {
                if !c[j].is_zero() {
                    rhs -= &(&a(i, j) * &c[j]);
                }
            }
            let piv = &a(i, i) - &e;
            if piv.is_zero() {
                if !rhs.is_zero() {
                    failure = format!("P_{m}: pivot for m_({}) vanishes", mus[i]);
                    ok = false;
                    break;
                }
                // Degenerate pivot with zero right-hand side: not unique.
                failure = format!("P_{m}: coefficient of m_({}) undetermined", mus[i]);
                ok = false;
                break;
            }
            c[i] = rhs.checked_div(&piv)?;
        }
        if !ok {
            continue;
        }
        let mut poly = MultiPoly::zero(n, mode);
        for (f, ci) in sym.iter().zip(&c) {
            if !ci.is_zero() {
                poly.add_assign(&f.scale(ci));
            }
        }
        let eigenvalues = ms
            .iter()
            .map(|&k| eigenvalue_of(k, &poly).map(|v| (k, v)))
            .collect::<Result<Vec<_>>>()?;
        return Ok(JackPolynomial {
            lambda: lambda.clone(),
            n,
            poly,
            coefficients: mus.into_iter().zip(c).collect(),
            eigenvalues,
        });
    }
    Err(Error::Singular {
        theta: mode.to_string(),
        detail: failure,
    })
}

/// A joint eigenfunction, or for an irrational eigenvalue one member of a
/// basis of the invariant subspace on which `P_m` has that minimal
/// polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct JointEigenfunction {
    pub tau: Partition,
    /// Functions sharing a group have the same eigenvalue tuple.
    pub group: usize,
    pub eigenvalues: Vec<(u32, EigenValue)>,
    #[serde(serialize_with = "ser_display")]
    pub leading: MultiPoly,
    #[serde(serialize_with = "ser_display")]
    pub poly: MultiPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct JointGroup {
    pub tau: Partition,
    pub eigenvalues: Vec<(u32, EigenValue)>,
    pub dim: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct JointBasis {
    pub lambda: Partition,
    pub n: usize,
    pub ms: Vec<u32>,
    pub theta: String,
    pub functions: Vec<JointEigenfunction>,
    pub groups: Vec<JointGroup>,
}

impl JointBasis {
    /// Groups whose dimension exceeds one: multiplicity that the given
    /// operators do not split.
    pub fn unresolved(&self) -> impl Iterator<Item = &JointGroup> {
        self.groups.iter().filter(|g| g.dim > 1)
    }

    pub fn count_for(&self, tau: &Partition) -> usize {
        self.functions.iter().filter(|f| &f.tau == tau).count()
    }
}

struct Subspace {
    tau: Partition,
    basis: Vec<Vec<Scalar>>,
    values: Vec<(u32, EigenValue)>,
}

/// Restriction of `op` to the span of `basis` (which must be invariant).
fn restrict_to(op: &ExactMatrix, basis: &[Vec<Scalar>]) -> Result<ExactMatrix> {
    let mode = op.mode();
    let b = ExactMatrix::from_columns(basis, op.rows(), mode);
    let mut cols = Vec::with_capacity(basis.len());
    for v in basis {
        let img = op.mul_vec(v)?;
        let x = b
            .solve(&img)?
            .ok_or_else(|| Error::Inconsistent("subspace is not invariant".into()))?;
        cols.push(x);
    }
    Ok(ExactMatrix::from_columns(&cols, basis.len(), mode))
}

fn scalar_value(r: &ExactMatrix) -> Option<Scalar> {
    let d = r.get(0, 0).clone();
    for i in 0..r.rows() {
        for j in 0..r.cols() {
            let x = r.get(i, j);
            if (i == j && x != &d) || (i != j && !x.is_zero()) {
                return None;
            }
        }
    }
    Some(d)
}

fn combine(basis: &[Vec<Scalar>], coords: &[Scalar], mode: &ThetaMode) -> Vec<Scalar> {
    let mut out = vec![mode.zero(); basis[0].len()];
    for (b, c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            if !x.is_zero() {
                *o += &(c * x);
            }
        }
    }
    out
}

fn poly_eval_matrix(coeffs: &[Scalar], r: &ExactMatrix) -> Result<ExactMatrix> {
    let mode = r.mode();
    let mut acc = ExactMatrix::zeros(r.rows(), r.cols(), mode);
    for c in coeffs {
        acc = acc.mul(r)?.add(&ExactMatrix::identity(r.rows(), mode).scale(c))?;
    }
    Ok(acc)
}

/// Split `s` into joint eigenspaces of the next operator `op`.
fn refine(s: Subspace, m: u32, op: &ExactMatrix, settings: &Settings) -> Result<Vec<Subspace>> {
    let mode = op.mode().clone();
    let r = restrict_to(op, &s.basis)?;
    if let Some(v) = scalar_value(&r) {
        let mut values = s.values;
        values.push((m, EigenValue::Exact(v)));
        return Ok(vec![Subspace { values, ..s }]);
    }
    if mode.is_symbolic() {
        return Err(Error::InvalidArgument(format!(
            "P_{m} is not scalar on an isotypic subspace for τ={}; \
             a specialized θ (--theta p/q) is needed to split it",
            s.tau
        )));
    }
    let cp = r.charpoly_with_cap(settings.symbolic_cap)?;
    let mut out = Vec::new();
    for f in factor_charpoly(&cp, &mode)? {
        let kernel_of = match &f.value {
            EigenValue::Exact(v) => r.sub(&ExactMatrix::identity(r.rows(), &mode).scale(v))?,
            EigenValue::MinPoly(q) => poly_eval_matrix(q, &r)?,
        };
        let kernel = kernel_of.kernel_basis();
        let basis: Vec<Vec<Scalar>> = kernel.iter().map(|k| combine(&s.basis, k, &mode)).collect();
        let mut values = s.values.clone();
        values.push((m, f.value));
        out.push(Subspace {
            tau: s.tau.clone(),
            basis,
            values,
        });
    }
    Ok(out)
}

/// Joint eigenfunctions of `{P_m : m ∈ ms}` whose component in `V_λ` is
/// nonzero, one for each dimension of `V_λ`.
///
/// The `V_λ` part is split by isotype and then refined by each `P_m` in the
/// given order; the lower part in `⊕_{μ≺λ} V_μ` is the unique solution of
/// the triangular system for the first `m` whose eigenvalue on the group
/// avoids the spectrum below.
pub fn joint_eigenbasis(
    lambda: &Partition,
    n: usize,
    ms: &[u32],
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<JointBasis> {
    check_ms(ms)?;
    let vl = VLambda::new(lambda, n)?;
    let d = vl.dim();
    let mus = enumerate_dominated(lambda, n);
    let mut full_basis: Vec<Exponents> = vl.basis().to_vec();
    for mu in mus.iter().filter(|mu| *mu != lambda) {
        full_basis.extend(VLambda::new(mu, n)?.basis().iter().cloned());
    }
    let low = full_basis.len() - d;
    let full_ops: Vec<ExactMatrix> = ms
        .iter()
        .map(|&m| p_matrix(&full_basis, m, mode))
        .collect::<Result<_>>()?;
    let t_ops: Vec<ExactMatrix> = ms
        .iter()
        .map(|&m| t_power_sum_matrix(&vl, m, mode, settings))
        .collect::<Result<_>>()?;
    for (k, (p, t)) in full_ops.iter().zip(&t_ops).enumerate() {
        let top = ExactMatrix::from_fn(d, d, mode, |i, j| p.get(i, j).clone());
        let leaks = (0..d).any(|i| (d..d + low).any(|j| !p.get(i, j).is_zero()));
        if &top != t || leaks {
            return Err(Error::Inconsistent(format!(
                "P_{} is not triangular over Σ_i T_i^{} on V_{lambda}",
                ms[k], ms[k]
            )));
        }
    }

    let mut subspaces: Vec<Subspace> = isotypic_blocks(&vl, &t_ops[0], mode)?
        .into_iter()
        .map(|b| Subspace {
            tau: b.tau,
            basis: b.basis,
            values: Vec::new(),
        })
        .collect();
    for (k, &m) in ms.iter().enumerate() {
        let mut next = Vec::new();
        for s in subspaces {
            next.extend(refine(s, m, &t_ops[k], settings)?);
        }
        subspaces = next;
    }

    let mut functions = Vec::new();
    let mut groups = Vec::new();
    for (g, s) in subspaces.into_iter().enumerate() {
        let lower = extend_down(&s, &full_ops, &t_ops, d, low, mode)?;
        for (v, u) in s.basis.iter().zip(&lower) {
            let mut coords = v.clone();
            coords.extend(u.iter().cloned());
            let mut poly = MultiPoly::zero(n, mode);
            for (e, c) in full_basis.iter().zip(&coords) {
                if !c.is_zero() {
                    poly.add_term(e.clone(), c);
                }
            }
            functions.push(JointEigenfunction {
                tau: s.tau.clone(),
                group: g,
                eigenvalues: s.values.clone(),
                leading: vl.to_poly(v, mode),
                poly,
            });
        }
        groups.push(JointGroup {
            tau: s.tau,
            eigenvalues: s.values,
            dim: s.basis.len(),
        });
    }
    Ok(JointBasis {
        lambda: lambda.clone(),
        n,
        ms: ms.to_vec(),
        theta: mode.to_string(),
        functions,
        groups,
    })
}

/// Lower components `u` with `(A - R) u = -B v` for each basis vector `v`
/// of the group, where `A` is `P_m` below `λ` and `B` the off-diagonal
/// block.
fn extend_down(
    s: &Subspace,
    full_ops: &[ExactMatrix],
    t_ops: &[ExactMatrix],
    d: usize,
    low: usize,
    mode: &ThetaMode,
) -> Result<Vec<Vec<Scalar>>> {
    let k = s.basis.len();
    if low == 0 {
        return Ok(vec![Vec::new(); k]);
    }
    let mut collisions = Vec::new();
    for (idx, (m, value)) in s.values.iter().enumerate() {
        let p = &full_ops[idx];
        let a = ExactMatrix::from_fn(low, low, mode, |i, j| p.get(d + i, d + j).clone());
        let bv: Vec<Vec<Scalar>> = s
            .basis
            .iter()
            .map(|v| {
                (0..low)
                    .map(|i| {
                        let mut acc = mode.zero();
                        for (j, x) in v.iter().enumerate() {
                            let c = p.get(d + i, j);
                            if !x.is_zero() && !c.is_zero() {
                                acc += &(c * x);
                            }
                        }
                        -acc
                    })
                    .collect()
            })
            .collect();
        match value {
            EigenValue::Exact(e) => {
                let sys = a.sub(&ExactMatrix::identity(low, mode).scale(e))?;
                if sys.rank() < low {
                    collisions.push(format!("P_{m} eigenvalue {e} also occurs below λ"));
                    continue;
                }
                return bv
                    .iter()
                    .map(|rhs| {
                        sys.solve(rhs)?
                            .ok_or_else(|| Error::Inconsistent("nonsingular system without solution".into()))
                    })
                    .collect();
            }
            EigenValue::MinPoly(_) => {
                // Sylvester equation A U - U R = -B V, with R the restriction
                // of Σ T^m to the group in the group's basis.
                let r = restrict_to(&t_ops[idx], &s.basis)?;
                let size = low * k;
                let sys = ExactMatrix::from_fn(size, size, mode, |row, col| {
                    let (ci, i) = (row / low, row % low);
                    let (cj, j) = (col / low, col % low);
                    let mut x = if ci == cj { a.get(i, j).clone() } else { mode.zero() };
                    if i == j {
                        x -= r.get(cj, ci);
                    }
                    x
                });
                if sys.rank() < size {
                    collisions.push(format!("P_{m} minimal polynomial {value} shares roots below λ"));
                    continue;
                }
                let rhs: Vec<Scalar> = bv.iter().flatten().cloned().collect();
                let u = sys
                    .solve(&rhs)?
                    .ok_or_else(|| Error::Inconsistent("nonsingular system without solution".into()))?;
                return Ok(u.chunks(low).map(<[Scalar]>::to_vec).collect());
            }
        }
    }
    Err(Error::EigenvalueCollision(format!(
        "τ={}: {}; try another θ or more operators",
        s.tau,
        collisions.join("; ")
    )))
}

/// Joint eigenfunctions led by every `V_μ` with `μ ⪯ λ`: a basis of the
/// whole space `⊕_{μ⪯λ} V_μ`.
pub fn joint_eigenbasis_full(
    lambda: &Partition,
    n: usize,
    ms: &[u32],
    mode: &ThetaMode,
    settings: &Settings,
) -> Result<Vec<JointBasis>> {
    enumerate_dominated(lambda, n)
        .iter()
        .map(|mu| joint_eigenbasis(mu, n, ms, mode, settings))
        .collect()
}

/// Check `P_m F = e F` for every exact eigenvalue, and invariance of the
/// span of each irrational group with the recorded minimal polynomial.
pub fn verify_joint_basis(basis: &JointBasis) -> Result<()> {
    for f in &basis.functions {
        for (m, v) in &f.eigenvalues {
            match v {
                EigenValue::Exact(e) => {
                    if apply_p(*m, &f.poly)? != f.poly.scale(e) {
                        return Err(Error::Inconsistent(format!(
                            "P_{m} F ≠ ({e}) F for F led by {}",
                            f.leading
                        )));
                    }
                }
                EigenValue::MinPoly(q) => {
                    // q(P_m) F = 0
                    let mut acc = MultiPoly::zero(basis.n, f.poly.mode());
                    for c in q {
                        acc = apply_p(*m, &acc)?;
                        acc.add_assign(&f.poly.scale(c));
                    }
                    if !acc.is_zero() {
                        return Err(Error::Inconsistent(format!(
                            "minimal polynomial of P_{m} does not annihilate F led by {}",
                            f.leading
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

//! Characters of `S_N`, averaged characters over Young subgroups, and
//! isotypic projectors on `V_λ`.

use std::collections::HashMap;

use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::arith::{ExactMatrix, ThetaMode};
use crate::error::{Error, Result};
use crate::poly::{CycleType, Partition, Permutation, VLambda};
use crate::settings::{Mutation, Settings};

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `z_μ = Π_r r^{m_r} m_r!`, the centralizer order of the class `μ`.
pub fn centralizer_order(mu: &Partition) -> BigInt {
    let mut counts: HashMap<u32, u64> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    counts.iter().fold(BigInt::one(), |acc, (&r, &m)| {
        acc * BigInt::from(r).pow(m as u32) * factorial(m)
    })
}

/// Number of permutations of cycle type `μ` in `S_|μ|`.
pub fn class_size(mu: &Partition) -> BigInt {
    factorial(mu.size() as u64) / centralizer_order(mu)
}

/// `dim τ` by the hook length formula.
pub fn dimension(tau: &Partition) -> u64 {
    let conj = tau.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in tau.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = conj.part(j) as usize - i - 1;
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    (factorial(tau.size() as u64) / hooks)
        .to_u64()
        .expect("dimension fits in u64")
}

/// Murnaghan–Nakayama evaluation on beta-sets, memoized per call.
struct MnEvaluator<'a> {
    classes: &'a [u32],
    memo: HashMap<(Vec<u32>, usize), i64>,
}

impl MnEvaluator<'_> {
    fn eval(&mut self, beta: Vec<u32>, idx: usize) -> i64 {
        if idx == self.classes.len() {
            return 1;
        }
        if let Some(&v) = self.memo.get(&(beta.clone(), idx)) {
            return v;
        }
        let r = self.classes[idx];
        let mut total = 0i64;
        for (k, &b) in beta.iter().enumerate() {
            if b < r {
                continue;
            }
            let target = b - r;
            if beta.contains(&target) {
                continue;
            }
            // Beads strictly between target and b give the leg length.
            let leg = beta.iter().filter(|&&x| x > target && x < b).count();
            let mut next = beta.clone();
            next[k] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let v = self.eval(next, idx + 1);
            total += if leg % 2 == 0 { v } else { -v };
        }
        self.memo.insert((beta, idx), total);
        total
    }
}

/// `χ^τ` at the class with cycle type `class`.
pub fn character(tau: &Partition, class: &CycleType) -> Result<i64> {
    if tau.size() != class.size() {
        return Err(Error::SizeMismatch(format!(
            "character of a partition of {} at a class of S_{}",
            tau.size(),
            class.size()
        )));
    }
    let len = tau.length();
    let beta: Vec<u32> = tau
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i) as u32)
        .collect();
    let mut ev = MnEvaluator {
        classes: class.parts(),
        memo: HashMap::new(),
    };
    Ok(ev.eval(beta, 0))
}

/// Cycle type `(k, 1^{N-k})`.
pub fn one_cycle_class(n: usize, k: usize) -> Result<CycleType> {
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "cycle length {k} out of range 1..={n}"
        )));
    }
    let mut parts = vec![k as u32];
    parts.extend(std::iter::repeat_n(1, n - k));
    Partition::new(parts)
}

/// `χ^τ((1,2,…,k))` from the explicit sum over rows, with
/// `(x)!/(x-k)!` read as the falling factorial `x(x-1)…(x-k+1)`.
pub fn character_one_cycle(tau: &Partition, k: usize) -> Result<BigRational> {
    let n = tau.size() as usize;
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "cycle length {k} out of range 1..={n}"
        )));
    }
    let t: Vec<i64> = tau.padded(n)?.iter().map(|&x| x as i64).collect();
    let kk = k as i64;
    let mut sum = BigRational::zero();
    for i in 0..n {
        let x = t[i] + (n - i - 1) as i64;
        let mut ff = BigRational::one();
        for s in 0..kk {
            ff *= BigRational::from_integer((x - s).into());
        }
        if ff.is_zero() {
            continue;
        }
        let mut prod = ff;
        for j in (0..n).filter(|&j| j != i) {
            let base = t[i] - i as i64 - t[j] + j as i64;
            prod *= rat(base - kk, base);
        }
        sum += prod;
    }
    let dim = BigRational::from_integer(dimension(tau).into());
    let scale = BigRational::new(factorial((n - k) as u64), factorial(n as u64));
    Ok(dim * scale * sum)
}

/// Character table of `S_N` with class data.
#[derive(Clone, Debug)]
pub struct CharacterContext {
    n: usize,
    irreps: Vec<Partition>,
    classes: Vec<CycleType>,
    class_sizes: Vec<BigInt>,
    table: Vec<Vec<i64>>,
    irrep_index: HashMap<Partition, usize>,
    class_index: HashMap<CycleType, usize>,
}

impl CharacterContext {
    /// Builds the full table and checks column orthogonality.
    pub fn new(n: usize) -> Result<Self> {
        let parts = Partition::all_of(n as u32, n);
        let class_sizes: Vec<BigInt> = parts.iter().map(class_size).collect();
        let table = parts
            .iter()
            .map(|tau| parts.iter().map(|c| character(tau, c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let ctx = CharacterContext {
            n,
            irrep_index: parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect(),
            class_index: parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect(),
            irreps: parts.clone(),
            classes: parts,
            class_sizes,
            table,
        };
        ctx.check_orthogonality()?;
        Ok(ctx)
    }

    fn check_orthogonality(&self) -> Result<()> {
        let nf = factorial(self.n as u64);
        for (a, ca) in self.classes.iter().enumerate() {
            for b in 0..self.classes.len() {
                let s: i64 = (0..self.irreps.len())
                    .map(|t| self.table[t][a] * self.table[t][b])
                    .sum();
                let expected = if a == b {
                    nf.clone() / &self.class_sizes[a]
                } else {
                    BigInt::zero()
                };
                if BigInt::from(s) != expected {
                    return Err(Error::Inconsistent(format!(
                        "column orthogonality fails at class {ca}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn irreps(&self) -> &[Partition] {
        &self.irreps
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn class_size(&self, c: &CycleType) -> Option<&BigInt> {
        self.class_index.get(c).map(|&i| &self.class_sizes[i])
    }

    pub fn value(&self, tau: &Partition, c: &CycleType) -> Result<i64> {
        let t = self.irrep_index.get(tau).ok_or_else(|| {
            Error::SizeMismatch(format!("{tau} is not a partition of {}", self.n))
        })?;
        let k = self.class_index.get(c).ok_or_else(|| {
            Error::SizeMismatch(format!("{c} is not a cycle type of S_{}", self.n))
        })?;
        Ok(self.table[*t][*k])
    }

    pub fn dim(&self, tau: &Partition) -> Result<i64> {
        let id = Partition::new(vec![1; self.n])?;
        self.value(tau, &id)
    }

    /// Row of the table as a map from class to value.
    pub fn row(&self, tau: &Partition) -> Result<Vec<(CycleType, i64)>> {
        self.classes
            .iter()
            .map(|c| Ok((c.clone(), self.value(tau, c)?)))
            .collect()
    }
}

/// Block sizes `n` and a nonempty subset `A` of block indices (zero-based,
/// increasing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AveragedCharacterSpec {
    pub n: Vec<usize>,
    pub a: Vec<usize>,
}

impl AveragedCharacterSpec {
    pub fn new(n: Vec<usize>, a: Vec<usize>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidArgument("subset A must be nonempty".into()));
        }
        if n.contains(&0) {
            return Err(Error::InvalidArgument("block sizes must be positive".into()));
        }
        if a.windows(2).any(|w| w[0] >= w[1]) || a.iter().any(|&x| x >= n.len()) {
            return Err(Error::InvalidArgument(format!(
                "subset {a:?} must be increasing indices below {}",
                n.len()
            )));
        }
        Ok(AveragedCharacterSpec { n, a })
    }

    pub fn total(&self) -> usize {
        self.n.iter().sum()
    }

    pub fn blocks(&self) -> usize {
        self.n.len()
    }
}

/// For each partition `μ ⊢ k`: `1/z_μ` and the multiset of cycle lengths.
fn class_weights(k: usize) -> Vec<(BigRational, Partition)> {
    Partition::all_of(k as u32, k)
        .into_iter()
        .map(|mu| (BigRational::new(BigInt::one(), centralizer_order(&mu)), mu))
        .collect()
}

/// `χ^τ[A; n] = (1/Π n_i!) Σ_{g ∈ S_{n_1}×…×S_{n_p}} χ^τ(g·c)`, summed over
/// conjugacy classes of the Young subgroup.
pub fn averaged_character(tau: &Partition, spec: &AveragedCharacterSpec) -> Result<BigRational> {
    averaged_character_with(tau, spec, &Settings::default())
}

pub fn averaged_character_with(
    tau: &Partition,
    spec: &AveragedCharacterSpec,
    settings: &Settings,
) -> Result<BigRational> {
    let n = spec.total();
    if tau.size() as usize != n {
        return Err(Error::SizeMismatch(format!(
            "τ = {tau} is not a partition of {n}"
        )));
    }
    let per_block: Vec<Vec<(BigRational, Partition)>> =
        spec.n.iter().map(|&k| class_weights(k)).collect();
    let mut memo: HashMap<Partition, i64> = HashMap::new();
    let mut total = BigRational::zero();
    let mut choice = vec![0usize; spec.blocks()];
    loop {
        let mut weight = BigRational::one();
        for (b, &c) in choice.iter().enumerate() {
            weight *= &per_block[b][c].0;
        }
        // Cycles not touching the distinguished points, and for each
        // a ∈ A the possible lengths of the cycle that does.
        let mut rest: Vec<u32> = Vec::new();
        for (b, &c) in choice.iter().enumerate() {
            if !spec.a.contains(&b) {
                rest.extend_from_slice(per_block[b][c].1.parts());
            }
        }
        let mut options: Vec<Vec<(u32, BigRational)>> = Vec::new();
        for &a in &spec.a {
            let mu = &per_block[a][choice[a]].1;
            let mut lens: Vec<u32> = mu.parts().to_vec();
            lens.dedup();
            options.push(
                lens.into_iter()
                    .map(|r| {
                        let mult = mu.parts().iter().filter(|&&x| x == r).count() as i64;
                        (r, rat(r as i64 * mult, spec.n[a] as i64))
                    })
                    .collect(),
            );
        }
        let mut pick = vec![0usize; options.len()];
        loop {
            let mut w = weight.clone();
            let mut merged = 0u32;
            let mut parts = rest.clone();
            for (slot, &p) in pick.iter().enumerate() {
                let (r, ref pr) = options[slot][p];
                w *= pr;
                merged += r;
                let mu = &per_block[spec.a[slot]][choice[spec.a[slot]]].1;
                let mut removed = false;
                for &x in mu.parts() {
                    if x == r && !removed {
                        removed = true;
                    } else {
                        parts.push(x);
                    }
                }
            }
            parts.push(merged);
            let cls = Partition::from_unsorted(parts);
            let chi = match memo.get(&cls) {
                Some(&v) => v,
                None => {
                    let v = character(tau, &cls)?;
                    memo.insert(cls, v);
                    v
                }
            };
            total += w * BigRational::from_integer(chi.into());
            if !advance(&mut pick, |s| options[s].len()) {
                break;
            }
        }
        if !advance(&mut choice, |b| per_block[b].len()) {
            break;
        }
    }
    if settings.mutated(Mutation::AveragedNorm) {
        let prod: BigInt = spec.n.iter().map(|&k| factorial(k as u64)).product();
        total *= BigRational::new(prod.clone(), prod + 1);
    }
    Ok(total)
}

/// Odometer increment; false once every digit has wrapped.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radix(i) {
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// Closed form of `χ^τ[A; n]` for `τ = (N-1, 1)`: `p - 1 - Σ_{a∈A} 1/n_a`
/// when `|A| ≥ 2`. A singleton `A` gives the trivial cycle and the value `p - 1`.
pub fn averaged_character_n11(spec: &AveragedCharacterSpec) -> BigRational {
    let mut v = BigRational::from_integer((spec.blocks() as i64 - 1).into());
    if spec.a.len() == 1 {
        return v;
    }
    for &a in &spec.a {
        v -= rat(1, spec.n[a] as i64);
    }
    v
}

/// Spherical function of `(S_N, S_{N-η}×S_η)` for `τ = (N-k, k)` at a
/// transposition: `1 - k(N-k+1) / (η(N-η))`.
pub fn spherical_p2(n: usize, eta: usize, k: usize) -> Result<BigRational> {
    if eta < 1 || eta + 1 > n || k > eta.min(n - eta) {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= η <= N-1 and k <= min(η, N-η); got N={n}, η={eta}, k={k}"
        )));
    }
    let (n, eta, k) = (n as i64, eta as i64, k as i64);
    Ok(BigRational::one() - rat(k * (n - k + 1), eta * (n - eta)))
}

/// Characters of all permutations of `S_N`, grouped for projector sums.
fn perm_characters(tau: &Partition, n: usize) -> Result<Vec<(Permutation, i64)>> {
    let mut memo: HashMap<CycleType, i64> = HashMap::new();
    Permutation::all(n)
        .into_iter()
        .map(|g| {
            let ct = g.cycle_type();
            let chi = match memo.get(&ct) {
                Some(&v) => v,
                None => {
                    let v = character(tau, &ct)?;
                    memo.insert(ct, v);
                    v
                }
            };
            Ok((g, chi))
        })
        .collect()
}

/// Matrix of `π_τ = (dim τ / N!) Σ_g χ^τ(g) g` on `V_λ`.
pub fn projector_matrix(tau: &Partition, vl: &VLambda, mode: &ThetaMode) -> Result<ExactMatrix> {
    let n = vl.nvars();
    if tau.size() as usize != n {
        return Err(Error::SizeMismatch(format!(
            "τ = {tau} is not a partition of {n}"
        )));
    }
    let d = vl.dim();
    let mut acc = vec![vec![0i64; d]; d];
    for (g, chi) in perm_characters(tau, n)? {
        if chi == 0 {
            continue;
        }
        for (col, e) in vl.basis().iter().enumerate() {
            let row = vl.index_of(&g.act(e)).expect("permutations preserve V_λ");
            acc[row][col] += chi;
        }
    }
    let scale = BigRational::new(dimension(tau).into(), factorial(n as u64));
    Ok(ExactMatrix::from_fn(d, d, mode, |r, c| {
        mode.rational(&scale * BigRational::from_integer(acc[r][c].into()))
    }))
}

/// `dim V_{λ;τ}`: the trace of `π_τ` on `V_λ`, via fixed-point counts.
pub fn isotypic_dimension(lambda: &Partition, tau: &Partition, n: usize) -> Result<u64> {
    if tau.size() as usize != n {
        return Err(Error::SizeMismatch(format!(
            "τ = {tau} is not a partition of {n}"
        )));
    }
    let vl = VLambda::new(lambda, n)?;
    let mut sum = BigInt::zero();
    for (g, chi) in perm_characters(tau, n)? {
        if chi == 0 {
            continue;
        }
        let fixed = vl.basis().iter().filter(|e| &g.act(e) == *e).count() as i64;
        sum += BigInt::from(chi * fixed);
    }
    let total = BigRational::new(sum * BigInt::from(dimension(tau)), factorial(n as u64));
    if !total.is_integer() || total < BigRational::zero() {
        return Err(Error::Inconsistent(format!(
            "isotypic dimension {total} is not a nonnegative integer"
        )));
    }
    Ok(total.to_integer().to_u64().expect("small dimension"))
}

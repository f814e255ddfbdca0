#![allow(dead_code)]

use std::collections::HashMap;

use hp_core::arith::{BigInt, BigRational, ThetaMode};

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

pub fn thetas() -> Vec<ThetaMode> {
    vec![
        ThetaMode::specialized(1, 2),
        ThetaMode::specialized(1, 1),
        ThetaMode::specialized(2, 1),
    ]
}

/// Permutations of `0..n` as image vectors.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn inversions_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// Ways to place the cycle lengths `parts` into variables so the exponents
/// sum to `target`.
fn placements(parts: &[u32], target: &mut [i64]) -> i64 {
    let Some((&first, rest)) = parts.split_first() else {
        return if target.iter().all(|&t| t == 0) { 1 } else { 0 };
    };
    let mut total = 0;
    for i in 0..target.len() {
        if target[i] >= first as i64 {
            target[i] -= first as i64;
            total += placements(rest, target);
            target[i] += first as i64;
        }
    }
    total
}

/// Frobenius formula: `χ^τ(μ)` is the coefficient of `x^{τ+δ}` in
/// `a_δ · p_μ`.
pub fn frobenius_character(tau: &[u32], mu: &[u32]) -> i64 {
    let n: u32 = tau.iter().sum();
    assert_eq!(n, mu.iter().sum::<u32>());
    let n = n as usize;
    let mut shifted = vec![0i64; n];
    for i in 0..n {
        shifted[i] = tau.get(i).copied().unwrap_or(0) as i64 + (n - 1 - i) as i64;
    }
    let mut total = 0;
    for sigma in perms(n) {
        let mut target: Vec<i64> = (0..n).map(|i| shifted[i] - (n - 1 - sigma[i]) as i64).collect();
        if target.iter().any(|&t| t < 0) {
            continue;
        }
        total += inversions_sign(&sigma) * placements(mu, &mut target);
    }
    total
}

fn cycle_lengths(p: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Element-by-element average of `χ^τ(g·c)` over the Young subgroup, with
/// `c` the cycle through the last point of each block in `a` (0-based).
pub fn brute_averaged_character(tau: &[u32], blocks: &[usize], a: &[usize]) -> BigRational {
    let n: usize = blocks.iter().sum();
    let mut block_of = Vec::new();
    let mut last = Vec::new();
    for (b, &size) in blocks.iter().enumerate() {
        block_of.extend(std::iter::repeat_n(b, size));
        last.push(block_of.len() - 1);
    }
    let mut c: Vec<usize> = (0..n).collect();
    for w in 0..a.len() {
        c[last[a[w]]] = last[a[(w + 1) % a.len()]];
    }
    let mut memo: HashMap<Vec<u32>, i64> = HashMap::new();
    let mut sum = 0i64;
    let mut count = 0i64;
    for g in perms(n) {
        if (0..n).any(|i| block_of[g[i]] != block_of[i]) {
            continue;
        }
        let gc: Vec<usize> = (0..n).map(|i| g[c[i]]).collect();
        let mu = cycle_lengths(&gc);
        let chi = *memo
            .entry(mu.clone())
            .or_insert_with(|| frobenius_character(tau, &mu));
        sum += chi;
        count += 1;
    }
    BigRational::new(BigInt::from(sum), BigInt::from(count))
}

/// Ordered tuples of positive integers summing to `n`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Nonempty increasing index subsets of `0..p`.
pub fn subsets(p: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << p))
        .map(|mask| (0..p).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

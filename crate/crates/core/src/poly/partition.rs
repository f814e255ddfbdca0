use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::arith::{Scalar, ThetaMode, ThetaPoly};
use crate::error::{Error, Result};

use super::exponent::Exponents;

/// Integer partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A partition of `N` read as a conjugacy class of `S_N` (cycle lengths).
pub type CycleType = Partition;

impl Partition {
    /// Parts must be nonincreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be nonincreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sort arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (zero-based), zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to `n` entries.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.parts.len() > n {
            return Err(Error::SizeMismatch(format!(
                "partition {self} has more than {n} parts"
            )));
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// Whether every part is distinct once padded to `n` entries.
    pub fn has_distinct_parts(&self, n: usize) -> bool {
        self.padded(n)
            .map(|v| v.windows(2).all(|w| w[0] > w[1]))
            .unwrap_or(false)
    }

    /// Dominance order `self ⪯ other`: equal sizes and every prefix sum of
    /// `self` at most that of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let len = self.length().max(other.length());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n` with at most `max_parts` parts, in decreasing
    /// lexicographic order.
    pub fn all_of(n: u32, max_parts: usize) -> Vec<Partition> {
        fn rec(rem: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_parts, &mut Vec::new(), &mut out);
        out
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition {
            parts: (1..=first)
                .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated nonincreasing integers such as `3,1,0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid partition part '{p}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `γ⁺`: the entries of an exponent vector sorted into nonincreasing order.
pub fn sort_to_partition(gamma: &Exponents) -> Partition {
    Partition::from_unsorted(gamma.as_slice().to_vec())
}

/// `μ ⪯ λ` in dominance order.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> bool {
    mu.dominated_by(lambda)
}

/// Every `μ ⪯ λ` with at most `n` parts, `λ` first, in decreasing
/// lexicographic order (a linear extension of dominance).
pub fn enumerate_dominated(lambda: &Partition, n: usize) -> Vec<Partition> {
    Partition::all_of(lambda.size(), n)
        .into_iter()
        .filter(|mu| mu.dominated_by(lambda))
        .collect()
}

/// The block structure of a partition padded to `N` parts: distinct
/// degrees `d_1 > … > d_p ≥ 0` with multiplicities `n_1, …, n_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub degrees: Vec<u32>,
    pub multiplicities: Vec<usize>,
    /// `d_i + θ (n_{i+1} + … + n_p)`.
    pub shifted: Vec<ThetaPoly>,
}

impl MultiplicityProfile {
    pub fn new(lambda: &Partition, n: usize) -> Result<Self> {
        let padded = lambda.padded(n)?;
        let mut degrees: Vec<u32> = Vec::new();
        let mut multiplicities: Vec<usize> = Vec::new();
        for &x in &padded {
            if degrees.last() == Some(&x) {
                *multiplicities.last_mut().unwrap() += 1;
            } else {
                degrees.push(x);
                multiplicities.push(1);
            }
        }
        let p = degrees.len();
        let shifted = (0..p)
            .map(|i| {
                let tail: usize = multiplicities[i + 1..].iter().sum();
                ThetaPoly::linear(degrees[i] as i64, tail as i64)
            })
            .collect();
        Ok(MultiplicityProfile {
            degrees,
            multiplicities,
            shifted,
        })
    }

    /// Number of distinct parts `p`.
    pub fn blocks(&self) -> usize {
        self.degrees.len()
    }

    pub fn nvars(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// `Mult(λ)`: the multiplicities sorted into a partition of `N`.
    pub fn mult_partition(&self) -> Partition {
        Partition::from_unsorted(self.multiplicities.iter().map(|&m| m as u32).collect())
    }

    pub fn shifted_scalars(&self, mode: &ThetaMode) -> Vec<Scalar> {
        self.shifted.iter().map(|p| mode.poly(p)).collect()
    }

    /// Rebuild the padded partition from the profile.
    pub fn reconstruct(&self) -> Vec<u32> {
        self.degrees
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(&d, &m)| std::iter::repeat_n(d, m))
            .collect()
    }
}

/// Profile of `λ` and `Mult(λ)`.
pub fn mult_profile(lambda: &Partition, n: usize) -> Result<(MultiplicityProfile, Partition)> {
    let prof = MultiplicityProfile::new(lambda, n)?;
    let mult = prof.mult_partition();
    Ok((prof, mult))
}

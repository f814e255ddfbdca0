use std::fmt;

use crate::error::{Error, Result};

use super::exponent::Exponents;
use super::partition::{CycleType, Partition};

/// Permutation of `{0, …, N-1}`; `images[i]` is the image of `i`.
///
/// Acting on polynomials, `σ` sends `x_i` to `x_{σ(i)}`. Products compose
/// as functions: `σ.compose(τ)` applies `τ` first, so `(1,3)(1,2) = (1,2,3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidArgument(format!("not a bijection: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from cycles written with one-based points, e.g. `&[&[1, 2, 3]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n || used[p - 1] {
                    return Err(Error::InvalidArgument(format!("bad cycle {cycle:?}")));
                }
                used[p - 1] = true;
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Transposition of two zero-based points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn compose(&self, first: &Permutation) -> Permutation {
        Permutation {
            images: first.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Exponents of `σ x^γ`: `(σ·γ)_{σ(i)} = γ_i`.
    pub fn act(&self, gamma: &Exponents) -> Exponents {
        let mut out = vec![0; gamma.len()];
        for (i, &g) in gamma.as_slice().iter().enumerate() {
            out[self.images[i]] = g;
        }
        Exponents::new(out)
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        let even = ct.parts().iter().filter(|&&l| l % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All permutations of `n` points in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation {
            images: cur.clone(),
        }];
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation {
                images: cur.clone(),
            });
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with one-based points; fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push((i + 1).to_string());
                i = self.images[i];
            }
            write!(f, "({})", cyc.join(","))?;
            any = true;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_convention() {
        let t12 = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let t13 = Permutation::from_cycles(3, &[&[1, 3]]).unwrap();
        let c123 = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(t13.compose(&t12), c123);
        let g = Exponents::new(vec![2, 1, 0]);
        assert_eq!(t12.act(&g), Exponents::new(vec![1, 2, 0]));
        assert_eq!(c123.act(&g), Exponents::new(vec![0, 2, 1]));
    }

    #[test]
    fn enumeration_and_cycle_types() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let threes = all
            .iter()
            .filter(|p| p.cycle_type() == "3,1".parse().unwrap())
            .count();
        assert_eq!(threes, 8);
        assert_eq!(all.iter().map(Permutation::sign).sum::<i64>(), 0);
    }

    #[test]
    fn display_cycles() {
        let c = Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        assert_eq!(c.to_string(), "(1,3)(2,4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}

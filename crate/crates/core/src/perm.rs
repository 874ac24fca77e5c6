//! Finite permutations of `0..k` stored as image lists.
//!
//! Composition follows function notation: `p.compose(&q)` is `p ∘ q`, i.e.
//! apply `q` first and then `p`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::sign::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("permutation domains differ: {left} vs {right}")]
    DomainMismatch { left: usize, right: usize },
    #[error("image list is not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("cannot parse permutation: {0}")]
    Syntax(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Self {
        Permutation {
            images: (0..len).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(PermError::NotBijection(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(len: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..len).collect();
        let mut touched = vec![false; len];
        for cycle in cycles {
            for (idx, &point) in cycle.iter().enumerate() {
                if point >= len || touched[point] {
                    return Err(PermError::NotBijection(len));
                }
                touched[point] = true;
                images[point] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// The transposition of `a` and `b` on `len` points.
    pub fn transposition(len: usize, a: usize, b: usize) -> Result<Self, PermError> {
        if a == b {
            return Self::from_cycles(len, &[]);
        }
        Self::from_cycles(len, &[&[a, b]])
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.len() != other.len() {
            return Err(PermError::DomainMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self^exp` by repeated squaring.
    pub fn power(&self, mut exp: u64) -> Permutation {
        let mut result = Permutation::identity(self.len());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = base.compose(&result).expect("equal domains");
            }
            base = base.compose(&base).expect("equal domains");
            exp >>= 1;
        }
        result
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in ascending order, fixed points included.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable();
        lens
    }

    pub fn sign(&self) -> Sign {
        let cycles = self.cycles().len();
        Sign::from_parity((self.len() - cycles) % 2 == 1)
    }

    /// Returns the least odd `N` such that every cycle of `self^N` has
    /// power-of-two length, together with `self^N`.
    ///
    /// A cycle of length `L` splits under `p^N` into `gcd(L, N)` cycles of
    /// length `L / gcd(L, N)`, so `N` must be divisible by the odd part of
    /// every `L`; the least such odd number is the lcm of the odd parts.
    pub fn odd_power_normalize(&self) -> (u64, Permutation) {
        let n = self
            .cycle_lengths()
            .into_iter()
            .map(|len| odd_part(len as u64))
            .fold(1u64, lcm);
        (n, self.power(n))
    }
}

fn odd_part(mut x: u64) -> u64 {
    debug_assert!(x > 0);
    while x.is_multiple_of(2) {
        x /= 2;
    }
    x
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (idx, i) in self.images.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| PermError::Syntax(format!("expected [..], got {s:?}")))?;
        let images = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| PermError::Syntax(format!("bad index {tok:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        Permutation::from_images(images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

//! Permutations of {1..a} in one-line notation.

use itertools::Itertools;
use std::fmt;

/// One-line notation: `line[p]` is the image of position p+1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    line: Vec<usize>,
}

impl Perm {
    pub fn identity(a: usize) -> Self {
        Perm {
            line: (1..=a).collect(),
        }
    }

    /// longest element a, a−1, …, 1
    pub fn w0(a: usize) -> Self {
        Perm {
            line: (1..=a).rev().collect(),
        }
    }

    /// elementary transposition swapping i and i+1 (1-based, i < a)
    pub fn s(i: usize, a: usize) -> Self {
        let mut p = Self::identity(a);
        p.line.swap(i - 1, i);
        p
    }

    pub fn from_line(line: Vec<usize>) -> Option<Self> {
        let a = line.len();
        let mut seen = vec![false; a + 1];
        for &v in &line {
            if v == 0 || v > a || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm { line })
    }

    pub fn rank(&self) -> usize {
        self.line.len()
    }

    pub fn apply(&self, p: usize) -> usize {
        self.line[p - 1]
    }

    pub fn line(&self) -> &[usize] {
        &self.line
    }

    /// number of inversions
    pub fn len(&self) -> usize {
        let a = self.line.len();
        let mut l = 0;
        for p in 0..a {
            for r in p + 1..a {
                if self.line[p] > self.line[r] {
                    l += 1;
                }
            }
        }
        l
    }

    pub fn is_identity(&self) -> bool {
        self.line.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut line = vec![0; self.line.len()];
        for (p, &v) in self.line.iter().enumerate() {
            line[v - 1] = p + 1;
        }
        Perm { line }
    }

    /// composite self∘other: apply `other` first
    pub fn compose(&self, other: &Perm) -> Self {
        assert_eq!(self.rank(), other.rank());
        Perm {
            line: other.line.iter().map(|&v| self.line[v - 1]).collect(),
        }
    }

    /// swap values i, i+1, i.e. the composite s_i∘self
    pub fn left_mul_s(&self, i: usize) -> Self {
        let mut line = self.line.clone();
        for v in line.iter_mut() {
            if *v == i {
                *v = i + 1;
            } else if *v == i + 1 {
                *v = i;
            }
        }
        Perm { line }
    }

    /// swap positions i, i+1, i.e. the composite self∘s_i
    pub fn right_mul_s(&self, i: usize) -> Self {
        let mut line = self.line.clone();
        line.swap(i - 1, i);
        Perm { line }
    }

    /// ℓ(s_i·self) = ℓ(self) − 1
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.line[i] < inv.line[i - 1]
    }

    /// ℓ(self·s_i) = ℓ(self) − 1
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.line[i - 1] > self.line[i]
    }

    /// lexicographically smallest reduced word (letters are generator indices)
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(w.len());
        'outer: while !w.is_identity() {
            for i in 1..w.rank() {
                if w.has_left_descent(i) {
                    word.push(i);
                    w = w.left_mul_s(i);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation with no descent");
        }
        word
    }

    /// all permutations of rank a, sorted by (length, one-line notation)
    pub fn all(a: usize) -> Vec<Perm> {
        let mut v: Vec<Perm> = (1..=a)
            .permutations(a)
            .map(|line| Perm { line })
            .collect();
        v.sort_by_key(|w| (w.len(), w.line.clone()));
        v
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() <= 9 {
            for v in &self.line {
                write!(f, "{}", v)?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.line.iter().map(|v| v.to_string()).join(","))
        }
    }
}

//! Permutations of `{1..n}` and their actions on words and tuples.
//!
//! The action is the usual left action: position `i` of `sigma . x` holds
//! what `x` had at position `sigma^{-1}(i)`, so `sigma` describes where each
//! entry *goes*.

use std::fmt;

use crate::{BitWord, Error, Result};

/// A bijection on `{1..n}`, stored as 0-based images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from 1-based images: `images[i-1] = sigma(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[img - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&i| i - 1).collect(),
        })
    }

    /// The transposition swapping `i` and `j` (1-based) in `{1..n}`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > n || j > n || i == j {
            return Err(Error::InvalidPermutation);
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based images, i.e. the one-line notation.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { images: inv }
    }

    /// Composition `self after other`: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::InvalidPermutation);
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    /// The word action `u -> sigma . u`: coordinate `i` of the result is
    /// coordinate `sigma^{-1}(i)` of `u`.
    pub fn apply_to_word(&self, u: BitWord) -> BitWord {
        assert_eq!(self.degree(), u.width(), "permutation degree vs word width");
        let mut out = BitWord::zero(u.width());
        for i in 1..=u.width() {
            if u.bit(i) {
                out = out.with_bit(self.image(i), true);
            }
        }
        out
    }

    /// Permute a tuple of items in place of the abstract action on tuples.
    pub fn apply_to_tuple<T: Clone>(&self, items: &[T]) -> Vec<T> {
        assert_eq!(self.degree(), items.len());
        let inv = self.inverse();
        (1..=items.len())
            .map(|i| items[inv.image(i) - 1].clone())
            .collect()
    }

    /// Every permutation of `{1..n}` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_lex(&mut current) {
                return out;
            }
        }
    }
}

fn next_lex(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| seq[i] < seq[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| seq[j] > seq[i]).unwrap();
    seq.swap(i, j);
    seq[i + 1..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, &img) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", img + 1)?;
        }
        write!(f, "]")
    }
}

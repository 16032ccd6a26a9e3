//! Slow reference evaluators that only use the defining commutation relations.
//!
//! A word `[x₁, …, x_r]` is the operator product `X(x₁)⋯X(x_r)` applied to the
//! highest weight vector. Words are brought into normal form by swapping the
//! rightmost out-of-order adjacent pair, one commutator at a time.

#![allow(dead_code)]

use std::collections::HashMap;

use vira_core::fock::Terms;
use vira_core::{Partition, Scalar};

fn partition_of(word: &[i64]) -> Partition {
    Partition::new(word.iter().map(|x| -x)).unwrap()
}

/// The word of a basis partition: largest part leftmost.
pub fn word_of(p: &Partition) -> Vec<i64> {
    p.parts().iter().map(|&x| -i64::from(x)).collect()
}

/// Heisenberg words on the Fock vacuum, `[J(a), J(b)] = a·δ(a+b, 0)`.
pub struct FockWords {
    alpha: Scalar,
    memo: HashMap<Vec<i64>, Terms>,
}

impl FockWords {
    pub fn new(alpha: Scalar) -> Self {
        FockWords {
            alpha,
            memo: HashMap::new(),
        }
    }

    pub fn eval(&mut self, word: &[i64]) -> Terms {
        if let Some(t) = self.memo.get(word) {
            return t.clone();
        }
        let out = self.eval_uncached(word);
        self.memo.insert(word.to_vec(), out.clone());
        out
    }

    fn eval_uncached(&mut self, word: &[i64]) -> Terms {
        let Some((&last, init)) = word.split_last() else {
            return Terms::basis(Partition::empty());
        };
        if last > 0 {
            return Terms::zero();
        }
        if last == 0 {
            return self.eval(init).scale(&self.alpha);
        }
        // Creation operators commute among themselves, so only a non-negative
        // index sitting left of a negative one needs moving.
        match (0..word.len() - 1)
            .rev()
            .find(|&i| word[i] >= 0 && word[i + 1] < 0)
        {
            None => Terms::basis(partition_of(word)),
            Some(i) => {
                let (a, b) = (word[i], word[i + 1]);
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                let mut out = self.eval(&swapped);
                if a + b == 0 {
                    let mut shorter = word.to_vec();
                    shorter.drain(i..=i + 1);
                    out.add_scaled(&Scalar::from_int(a), &self.eval(&shorter));
                }
                out
            }
        }
    }

    /// `J(ops[0]) ⋯ J(ops[r-1])` applied to the basis vector `p`.
    pub fn apply(&mut self, ops: &[i64], p: &Partition) -> Terms {
        let mut word = ops.to_vec();
        word.extend(word_of(p));
        self.eval(&word)
    }

    /// `:J(a)J(b):` on `p`, larger index first.
    pub fn normal_pair(&mut self, a: i64, b: i64, p: &Partition) -> Terms {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        self.apply(&[lo, hi], p)
    }

    /// `½ Σ_{|k| <= 10} :J(n−k)J(k):` on `p`.
    pub fn sugawara(&mut self, n: i64, p: &Partition) -> Terms {
        let mut out = Terms::zero();
        for k in -10..=10 {
            out = out + self.normal_pair(n - k, k, p);
        }
        out.scale(&Scalar::ratio(1, 2))
    }
}

/// Virasoro words on the highest weight vector of `V(c, h)`,
/// `[L(x), L(y)] = (x − y)·L(x+y) + δ(x+y, 0)·(x³ − x)/12·c`.
pub struct VermaWords {
    c: Scalar,
    h: Scalar,
    memo: HashMap<Vec<i64>, Terms>,
}

impl VermaWords {
    pub fn new(c: Scalar, h: Scalar) -> Self {
        VermaWords {
            c,
            h,
            memo: HashMap::new(),
        }
    }

    pub fn eval(&mut self, word: &[i64]) -> Terms {
        if let Some(t) = self.memo.get(word) {
            return t.clone();
        }
        let out = self.eval_uncached(word);
        self.memo.insert(word.to_vec(), out.clone());
        out
    }

    fn eval_uncached(&mut self, word: &[i64]) -> Terms {
        let Some((&last, init)) = word.split_last() else {
            return Terms::basis(Partition::empty());
        };
        if last > 0 {
            return Terms::zero();
        }
        if last == 0 {
            return self.eval(init).scale(&self.h);
        }
        match (0..word.len() - 1).rev().find(|&i| word[i] > word[i + 1]) {
            None => Terms::basis(partition_of(word)),
            Some(i) => {
                let (x, y) = (word[i], word[i + 1]);
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                let mut out = self.eval(&swapped);
                let mut merged = word.to_vec();
                merged.splice(i..=i + 1, [x + y]);
                out.add_scaled(&Scalar::from_int(x - y), &self.eval(&merged));
                if x + y == 0 {
                    let central = Scalar::from_int(x * x * x - x) * Scalar::ratio(1, 12) * &self.c;
                    let mut shorter = word.to_vec();
                    shorter.drain(i..=i + 1);
                    out.add_scaled(&central, &self.eval(&shorter));
                }
                out
            }
        }
    }

    pub fn apply(&mut self, ops: &[i64], p: &Partition) -> Terms {
        let mut word = ops.to_vec();
        word.extend(word_of(p));
        self.eval(&word)
    }
}

pub fn part(parts: &[i64]) -> Partition {
    Partition::new(parts.iter().copied()).unwrap()
}

pub fn q(p: i64, d: i64) -> Scalar {
    Scalar::ratio(p, d)
}

//! Integer partitions as basis labels of Fock spaces and Verma modules.
//!
//! A partition `(p₁ ≥ p₂ ≥ … ≥ pₘ)` stands for the monomial
//! `X(−p₁) X(−p₂) ⋯ X(−pₘ)` applied to the highest weight vector, the
//! largest index acting last.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition, i.e. the highest weight vector itself.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts the parts into weakly decreasing order; parts must be positive.
    pub fn new(parts: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut out = Vec::new();
        for p in parts {
            if p <= 0 || p > u32::MAX as i64 {
                return Err(Error::NonPositivePart(p));
            }
            out.push(p as u32);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts: out })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts.
    pub fn level(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn max_part(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    pub fn multiplicity(&self, part: u32) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    /// Adds one copy of `part`, keeping the order.
    pub fn inserted(&self, part: u32) -> Self {
        debug_assert!(part > 0);
        let pos = self.parts.partition_point(|&p| p > part);
        let mut parts = self.parts.clone();
        parts.insert(pos, part);
        Partition { parts }
    }

    /// Removes one copy of `part`, if present.
    pub fn removed(&self, part: u32) -> Option<Self> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// The largest part and the remaining partition.
    pub fn split_first(&self) -> Option<(u32, Partition)> {
        let (&first, rest) = self.parts.split_first()?;
        Some((
            first,
            Partition {
                parts: rest.to_vec(),
            },
        ))
    }

    /// Puts `part` in front; it must be at least the current largest part.
    pub(crate) fn prepended(&self, part: u32) -> Self {
        debug_assert!(self.max_part().is_none_or(|p| part >= p));
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(part);
        parts.extend_from_slice(&self.parts);
        Partition { parts }
    }

    /// All partitions of `level`, in increasing order.
    pub fn of_level(level: u64) -> Vec<Partition> {
        fn go(remaining: u64, max: u64, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=max.min(remaining)).rev() {
                prefix.push(p as u32);
                go(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(level, level, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions of level at most `max_level`, in increasing order.
    pub fn up_to_level(max_level: u64) -> Vec<Partition> {
        (0..=max_level).flat_map(Partition::of_level).collect()
    }

    /// Writes the monomial `X(-p₁)X(-p₂)…` with `symbol` in place of `X`.
    pub(crate) fn write_monomial(&self, f: &mut fmt::Formatter<'_>, symbol: &str) -> fmt::Result {
        for p in &self.parts {
            write!(f, "{symbol}(-{p})")?;
        }
        Ok(())
    }
}

/// By level, then lexicographically on the parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.level()
            .cmp(&other.level())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.iter().copied()).unwrap()
    }

    #[test]
    fn construction_sorts_and_validates() {
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert!(Partition::new([2, 0]).is_err());
        assert!(Partition::new([-1]).is_err());
        assert_eq!(p(&[5, 2, 2]).level(), 9);
        assert_eq!(Partition::empty().level(), 0);
    }

    #[test]
    fn insertion_and_removal() {
        assert_eq!(p(&[2]).inserted(3), p(&[3, 2]));
        assert_eq!(p(&[3, 1]).inserted(2), p(&[3, 2, 1]));
        assert_eq!(p(&[2, 2, 1]).removed(2), Some(p(&[2, 1])));
        assert_eq!(p(&[2, 2, 1]).removed(3), None);
        assert_eq!(p(&[2, 2, 1]).multiplicity(2), 2);
    }

    #[test]
    fn counts_match_partition_numbers() {
        let counts: Vec<usize> = (0..=10).map(|d| Partition::of_level(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(
            Partition::up_to_level(8).len(),
            1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22
        );
        let all = Partition::up_to_level(6);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all
            .iter()
            .all(|q| q.parts().windows(2).all(|w| w[0] >= w[1])));
    }

    #[test]
    fn order_is_by_level_first() {
        assert!(p(&[5]) < p(&[1, 1, 1, 1, 1, 1]));
        assert!(p(&[2, 1, 1]) < p(&[2, 2]));
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
    }
}

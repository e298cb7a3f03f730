//! Integer partitions and double partitions.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive parts; the empty
//! partition is an ordinary value. A [`DoublePartition`] is an ordered pair of
//! partitions and labels both the irreducible representations and the
//! conjugacy classes (signed cycle types) of `B_n`.
//!
//! Text syntax: `"3,1"` for a partition, `"-"` (or the empty string) for the
//! empty partition, and `"3,1|2"` for a double partition.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Builds a partition from parts that must already be weakly decreasing.
    pub fn from_decreasing(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts not weakly decreasing: {parts:?}")));
        }
        Ok(Self { parts })
    }

    /// `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `n_r(λ)`: the number of parts equal to `r`.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.parts.iter().filter(|&&p| p == r).count()
    }

    /// `(r, n_r)` pairs with `n_r > 0`, by increasing `r`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((r, c)) if *r == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π_r r^{n_r} n_r!`, so that `n!/z_λ` counts the permutations of
    /// cycle type `λ`.
    pub fn z_factor(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(r, c)| (r as u128).pow(c as u32) * factorial(c))
            .product()
    }

    /// `λ[n] = (n - |λ|, λ_1, ...)`, defined when `n - |λ| ≥ λ_1`.
    ///
    /// `pad(∅, 0)` is the empty partition.
    pub fn pad(&self, n: usize) -> Option<Partition> {
        let size = self.size();
        if n < size || n - size < self.first() {
            return None;
        }
        let head = n - size;
        if head == 0 {
            return Some(Self::empty());
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(head);
        parts.extend_from_slice(&self.parts);
        Some(Self { parts })
    }

    /// The partition with its first (largest) part removed.
    pub fn unpad(&self) -> Partition {
        Self {
            parts: self.parts.iter().skip(1).copied().collect(),
        }
    }

    /// Multiset union `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Multiset difference `self ∖ other`, or `None` if `other` is not contained.
    pub fn difference(&self, other: &Partition) -> Option<Partition> {
        let mut parts = self.parts.clone();
        for &p in &other.parts {
            let pos = parts.iter().position(|&q| q == p)?;
            parts.remove(pos);
        }
        Some(Self { parts })
    }

    /// Text syntax, `"-"` for the empty partition.
    pub fn to_text(&self) -> String {
        if self.is_empty() {
            "-".to_string()
        } else {
            join(&self.parts, ",")
        }
    }

    /// Bracketed notation `"(2,1)"`, `"()"` for the empty partition.
    pub fn to_bracket(&self) -> String {
        format!("({})", join(&self.parts, ","))
    }
}

fn join(parts: &[usize], sep: &str) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Canonical order: by size, then by parts compared so that `(2) < (1,1)`
/// (larger leading parts first).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?} in {s:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_decreasing(parts)
    }
}

/// An ordered pair of partitions `(plus, minus)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct DoublePartition {
    pub plus: Partition,
    pub minus: Partition,
}

/// Signed cycle type of a signed permutation: lengths of the positive cycles
/// and of the negative cycles.
pub type SignedCycleType = DoublePartition;

impl DoublePartition {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        Self { plus, minus }
    }

    pub fn size(&self) -> usize {
        self.plus.size() + self.minus.size()
    }

    /// Identity type `((1^n), ∅)`.
    pub fn identity(n: usize) -> Self {
        Self::new(Partition::ones(n), Partition::empty())
    }

    pub fn to_text(&self) -> String {
        format!("{}|{}", self.plus.to_text(), self.minus.to_text())
    }

    /// `"((1),(1))"`, with `"()"` for an empty side.
    pub fn to_bracket(&self) -> String {
        format!("({},{})", self.plus.to_bracket(), self.minus.to_bracket())
    }

    /// Componentwise difference, if `other` is contained in `self`.
    pub fn difference(&self, other: &DoublePartition) -> Option<DoublePartition> {
        Some(Self::new(
            self.plus.difference(&other.plus)?,
            self.minus.difference(&other.minus)?,
        ))
    }
}

/// Canonical order: `|plus|` descending, then `plus`, then `minus` in the
/// partition order.
impl Ord for DoublePartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.plus.size().cmp(&self.plus.size()))
            .then_with(|| self.plus.cmp(&other.plus))
            .then_with(|| self.minus.cmp(&other.minus))
    }
}

impl PartialOrd for DoublePartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for DoublePartition {
    type Err = Error;

    /// Accepts `"3,1|2"` and the bracketed `"((3,1),(2))"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once('|') {
            return Ok(Self::new(a.parse()?, b.parse()?));
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("not a double partition: {s:?}")))?;
        // split at the comma between the two bracketed halves
        let close = inner
            .find(')')
            .ok_or_else(|| Error::Parse(format!("not a double partition: {s:?}")))?;
        let (a, rest) = inner.split_at(close + 1);
        let b = rest
            .trim()
            .strip_prefix(',')
            .ok_or_else(|| Error::Parse(format!("not a double partition: {s:?}")))?;
        Ok(Self::new(a.parse()?, b.parse()?))
    }
}

/// All partitions of `n`, in canonical order (`(n)` first, `(1^n)` last).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=remaining.min(max)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// Number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    // p(n) via the standard "parts at most k" table
    let mut table = vec![0usize; n + 1];
    table[0] = 1;
    for part in 1..=n {
        for total in part..=n {
            table[total] += table[total - part];
        }
    }
    table[n]
}

/// All double partitions of `n` in canonical order.
pub fn double_partitions_of(n: usize) -> Vec<DoublePartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let minus_side = partitions_of(n - k);
        for plus in partitions_of(k) {
            for minus in &minus_side {
                out.push(DoublePartition::new(plus.clone(), minus.clone()));
            }
        }
    }
    out
}

/// All double partitions of total size at most `d`, in canonical order.
pub fn double_partitions_up_to(d: usize) -> Vec<DoublePartition> {
    (0..=d).flat_map(double_partitions_of).collect()
}

/// All partitions of size at most `d`, in canonical order.
pub fn partitions_up_to(d: usize) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(p("2,2,1").multiplicity(2), 2);
        assert_eq!(p("3").multiplicity(1), 0);
        assert_eq!(p("3,2,2,1").multiplicity(2), 2);
        assert_eq!(p("3,2,2,1").multiplicities(), vec![(1, 1), (2, 2), (3, 1)]);
    }

    #[test]
    fn z_factor_examples() {
        assert_eq!(p("1,1,1").z_factor(), 6);
        assert_eq!(p("2,1").z_factor(), 2);
        assert_eq!(p("3").z_factor(), 3);
        assert_eq!(Partition::empty().z_factor(), 1);
    }

    #[test]
    fn class_counts_sum_to_factorial() {
        for n in 0..=8 {
            let total: u128 = partitions_of(n)
                .iter()
                .map(|l| factorial(n) / l.z_factor())
                .sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn pad_examples() {
        assert_eq!(p("1").pad(3), Some(p("2,1")));
        assert_eq!(Partition::empty().pad(5), Some(p("5")));
        assert_eq!(p("3,1").pad(5), None);
        assert_eq!(Partition::empty().pad(0), Some(Partition::empty()));
        assert_eq!(p("1").pad(1), None);
    }

    #[test]
    fn pad_is_consistent() {
        for lam in partitions_up_to(5) {
            for n in 0..12 {
                if let Some(padded) = lam.pad(n) {
                    assert_eq!(padded.size(), n);
                    if n > 0 {
                        assert_eq!(padded.unpad(), lam);
                    }
                }
            }
        }
    }

    #[test]
    fn double_partition_enumeration() {
        assert_eq!(double_partitions_of(0), vec![DoublePartition::default()]);
        let two: Vec<String> = double_partitions_of(2).iter().map(|d| d.to_text()).collect();
        assert_eq!(two, vec!["2|-", "1,1|-", "1|1", "-|2", "-|1,1"]);
        assert_eq!(double_partitions_of(4).len(), 20);
        for n in 0..=8 {
            let expected: usize = (0..=n)
                .map(|k| partition_count(k) * partition_count(n - k))
                .sum();
            assert_eq!(double_partitions_of(n).len(), expected);
        }
    }

    #[test]
    fn canonical_order_matches_enumeration() {
        for n in 0..=6 {
            let list = double_partitions_of(n);
            let mut sorted = list.clone();
            sorted.sort();
            assert_eq!(list, sorted);
            let parts = partitions_of(n);
            let mut sorted = parts.clone();
            sorted.sort();
            assert_eq!(parts, sorted);
        }
    }

    #[test]
    fn text_syntax() {
        let d: DoublePartition = "3,1|2".parse().unwrap();
        assert_eq!(d.plus, p("3,1"));
        assert_eq!(d.minus, p("2"));
        assert_eq!(d.to_text(), "3,1|2");
        let e: DoublePartition = "-|1,1".parse().unwrap();
        assert!(e.plus.is_empty());
        assert_eq!(e.to_bracket(), "((),(1,1))");
        let b: DoublePartition = "((1),(1))".parse().unwrap();
        assert_eq!(b.to_text(), "1|1");
        assert_eq!("((2,1),())".parse::<DoublePartition>().unwrap().to_text(), "2,1|-");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn union_and_difference() {
        assert_eq!(p("3,1").union(&p("2,1")), p("3,2,1,1"));
        assert_eq!(p("3,2,1,1").difference(&p("2,1")), Some(p("3,1")));
        assert_eq!(p("3").difference(&p("1")), None);
    }
}

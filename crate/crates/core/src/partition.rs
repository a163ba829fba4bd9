//! Partitions, hook lengths and beta-sets.
//!
//! A partition `(λ_1, …, λ_ℓ)` is stored as its weakly decreasing list of
//! positive parts. Its beta-set is `{λ_i + ℓ - i}`, which coincides with the
//! hook lengths of the first column of the Young diagram and determines the
//! partition uniquely.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, kept as a weakly decreasing list of positive parts.
///
/// Construction guarantees `λ_1 + ℓ` fits in a `u64`, so beta-set elements and
/// hook lengths can be computed without overflow checks.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::NotWeaklyDecreasing { prev: w[0], next: w[1] });
            }
        }
        if let Some(&last) = parts.last() {
            if last == 0 {
                return Err(Error::ZeroPart);
            }
            parts[0].checked_add(parts.len() as u64).ok_or(Error::Overflow)?;
        }
        Ok(Partition { parts })
    }

    /// The empty partition `()`, of size 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> Result<u64> {
        self.parts
            .iter()
            .try_fold(0u64, |acc, &p| acc.checked_add(p))
            .ok_or(Error::Overflow)
    }

    /// Column lengths of the Young diagram, i.e. the parts of the conjugate.
    fn column_lengths(&self) -> Vec<u64> {
        let width = self.parts.first().copied().unwrap_or(0) as usize;
        let mut cols = vec![0u64; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        cols
    }

    /// Hook lengths of every box, row by row. Row `i` has `λ_i` entries.
    ///
    /// With 1-based indices the box `(i, j)` has hook length
    /// `(λ_i - j) + (λ'_j - i) + 1`, where `λ'` is the conjugate partition.
    pub fn hook_lengths(&self) -> Vec<Vec<u64>> {
        let cols = self.column_lengths();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row as usize)
                    .map(|j| (row - j as u64 - 1) + (cols[j] - i as u64 - 1) + 1)
                    .collect()
            })
            .collect()
    }

    /// The beta-set `{λ_i + ℓ - i : 1 ≤ i ≤ ℓ}`.
    pub fn beta_set(&self) -> BetaSet {
        let len = self.parts.len() as u64;
        let elements = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + len - 1 - i as u64)
            .collect();
        BetaSet { elements }
    }

    /// Inverse of [`Partition::beta_set`].
    ///
    /// The beta-set must not contain 0: only minimal beta-sets (one element
    /// per part) are accepted, so a set like `{3, 1, 0}` is rejected instead
    /// of being shifted down to `{2, 0}`'s partition.
    pub fn from_beta_set(beta: &BetaSet) -> Result<Self> {
        if beta.elements.last() == Some(&0) {
            return Err(Error::UnnormalizedBetaSet);
        }
        let len = beta.elements.len() as u64;
        let parts = beta
            .elements
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i as u64))
            .collect();
        Partition::new(parts)
    }

    /// True when the parts are strictly decreasing.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_list(f, &self.parts)?;
        write!(f, ")")
    }
}

/// Parses `"12,11,10"`; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?).map_err(|e| Error::Parse {
            input: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// A finite set of distinct nonnegative integers, stored strictly decreasing.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct BetaSet {
    elements: Vec<u64>,
}

impl BetaSet {
    /// Builds a beta-set from elements in any order. Repeated elements are an
    /// error rather than being merged.
    pub fn new(elements: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        elements.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateBetaElement(w[0]));
        }
        Ok(BetaSet { elements })
    }

    pub(crate) fn from_decreasing(elements: Vec<u64>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] > w[1]));
        BetaSet { elements }
    }

    pub fn empty() -> Self {
        BetaSet::default()
    }

    /// Elements in strictly decreasing order.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn largest(&self) -> Option<u64> {
        self.elements.first().copied()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search_by(|probe| x.cmp(probe)).is_ok()
    }

    /// Size of the encoded partition: `Σ x - C(|β|, 2)`.
    pub fn size(&self) -> Result<u64> {
        let sum = self
            .elements
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::Overflow)?;
        let n = self.elements.len() as u64;
        sum.checked_sub(binomial2(n)?).ok_or(Error::Overflow)
    }

    /// True when no two elements differ by exactly 1.
    pub fn has_no_consecutive(&self) -> bool {
        self.elements.windows(2).all(|w| w[0] - w[1] != 1)
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.elements)
    }
}

impl fmt::Debug for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        write_list(f, &self.elements)?;
        write!(f, "}}")
    }
}

impl FromStr for BetaSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BetaSet::new(parse_list(s)?).map_err(|e| Error::Parse {
            input: s.to_string(),
            reason: e.to_string(),
        })
    }
}

impl TryFrom<Vec<u64>> for BetaSet {
    type Error = Error;

    fn try_from(elements: Vec<u64>) -> Result<Self> {
        BetaSet::new(elements)
    }
}

impl From<BetaSet> for Vec<u64> {
    fn from(b: BetaSet) -> Self {
        b.elements
    }
}

/// `C(n, 2)` with overflow checking.
pub(crate) fn binomial2(n: u64) -> Result<u64> {
    if n < 2 {
        return Ok(0);
    }
    let (a, b) = if n.is_multiple_of(2) { (n / 2, n - 1) } else { (n, (n - 1) / 2) };
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Comma-separated nonnegative integers, whitespace tolerant.
pub(crate) fn parse_list(s: &str) -> Result<Vec<u64>> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim().parse::<u64>().map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: format!("{:?}: {}", tok.trim(), e),
            })
        })
        .collect()
}

pub(crate) fn write_list(f: &mut fmt::Formatter<'_>, items: &[u64]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{}", x)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_lengths_of_7_2_1() {
        assert_eq!(
            p(&[7, 2, 1]).hook_lengths(),
            vec![vec![9, 7, 5, 4, 3, 2, 1], vec![3, 1], vec![1]]
        );
    }

    #[test]
    fn hook_lengths_of_empty() {
        assert!(Partition::empty().hook_lengths().is_empty());
    }

    #[test]
    fn first_column_of_7_2_2() {
        let hooks = p(&[7, 2, 2]).hook_lengths();
        let first: Vec<u64> = hooks.iter().map(|row| row[0]).collect();
        assert_eq!(first, vec![9, 3, 2]);
    }

    #[test]
    fn beta_sets() {
        assert_eq!(p(&[7, 2, 2]).beta_set().elements(), &[9, 3, 2]);
        assert_eq!(p(&[7, 6, 5]).beta_set().elements(), &[9, 7, 5]);
        assert!(Partition::empty().beta_set().is_empty());
    }

    #[test]
    fn from_beta_sets() {
        let b: BetaSet = "9,3,2".parse().unwrap();
        assert_eq!(Partition::from_beta_set(&b).unwrap(), p(&[7, 2, 2]));
        let b: BetaSet = "5,9,7".parse().unwrap();
        assert_eq!(Partition::from_beta_set(&b).unwrap(), p(&[7, 6, 5]));
        assert_eq!(Partition::from_beta_set(&BetaSet::empty()).unwrap(), Partition::empty());
    }

    #[test]
    fn unnormalized_beta_set_is_rejected() {
        let b = BetaSet::new([3, 1, 0]).unwrap();
        assert_eq!(Partition::from_beta_set(&b), Err(Error::UnnormalizedBetaSet));
    }

    #[test]
    fn duplicate_beta_element_is_rejected() {
        assert_eq!(BetaSet::new([4, 2, 4]), Err(Error::DuplicateBetaElement(4)));
    }

    #[test]
    fn size_from_beta() {
        assert_eq!(BetaSet::new([9, 3, 2]).unwrap().size().unwrap(), 11);
        assert_eq!(BetaSet::empty().size().unwrap(), 0);
        assert_eq!(BetaSet::new([9, 7, 5]).unwrap().size().unwrap(), 18);
    }

    #[test]
    fn size_overflow_is_reported() {
        let b = BetaSet::new([u64::MAX, u64::MAX - 1]).unwrap();
        assert_eq!(b.size(), Err(Error::Overflow));
        let q = Partition::new(vec![u64::MAX / 2 + 1, u64::MAX / 2 + 1]).unwrap();
        assert_eq!(q.size(), Err(Error::Overflow));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Partition::new(vec![2, 3]),
            Err(Error::NotWeaklyDecreasing { prev: 2, next: 3 })
        );
        assert_eq!(Partition::new(vec![2, 0]), Err(Error::ZeroPart));
        assert_eq!(Partition::new(vec![u64::MAX]), Err(Error::Overflow));
    }

    #[test]
    fn text_format() {
        let q: Partition = " 12, 11,10 ,8".parse().unwrap();
        assert_eq!(q, p(&[12, 11, 10, 8]));
        assert_eq!(q.to_string(), "12,11,10,8");
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(Partition::empty().to_string(), "");
        assert!("3,x".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,,1".parse::<Partition>().is_err());
    }

    #[test]
    fn distinct_parts() {
        assert!(!p(&[7, 2, 2]).has_distinct_parts());
        assert!(p(&[12, 11, 10, 8, 7, 6, 4, 3, 2]).has_distinct_parts());
        assert!(Partition::empty().has_distinct_parts());
    }

    #[test]
    fn binomial2_small() {
        assert_eq!(binomial2(0).unwrap(), 0);
        assert_eq!(binomial2(1).unwrap(), 0);
        assert_eq!(binomial2(3).unwrap(), 3);
        assert_eq!(binomial2(10).unwrap(), 45);
    }
}

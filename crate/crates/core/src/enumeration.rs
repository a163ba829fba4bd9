//! Brute-force enumeration of simultaneous core partitions.
//!
//! Two independent routes are provided:
//!
//! * [`enumerate_sequences`] walks the constrained sequences `C^±_{m,t}`,
//!   which [`crate::bijection::from_sequence`] turns into partitions.
//! * [`enumerate_core_betasets`] walks the beta-sets of all `(a, b)`-cores
//!   directly. A beta-set is an `(a, b)`-core exactly when it is a down-set
//!   of the gaps of the numerical semigroup `⟨a, b⟩`, ordered by
//!   `x ≻ x - a` and `x ≻ x - b`. The search adds one new maximum at a time,
//!   so every down-set is reached from exactly one parent and no visited
//!   set is needed.
//!
//! The second route knows nothing about residue profiles, which is what
//! makes it useful as an oracle for the first.

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::bijection::{check_params, entry_cap, CoreSequence, Family};
use crate::error::{Error, Result};
use crate::partition::{BetaSet, Partition};

/// All sequences of one family in lexicographic order.
pub struct Sequences {
    t: u64,
    m: u64,
    family: Family,
    caps: Vec<u64>,
    current: Option<Vec<u64>>,
}

pub fn enumerate_sequences(t: u64, m: u64, family: Family) -> Result<Sequences> {
    check_params(t, m)?;
    let caps = (1..t).map(|i| entry_cap(t, m, family, i)).collect();
    Ok(Sequences {
        t,
        m,
        family,
        caps,
        current: Some(vec![0; (t - 1) as usize]),
    })
}

impl Sequences {
    /// Lexicographic successor: bump the rightmost entry that can grow and
    /// zero everything after it. Zeroing is always allowed, and a zero entry
    /// may only become nonzero when its left neighbour is zero.
    fn successor(&self, cur: &[u64]) -> Option<Vec<u64>> {
        (0..cur.len()).rev().find_map(|i| {
            let grows = cur[i] < self.caps[i] && (cur[i] > 0 || i == 0 || cur[i - 1] == 0);
            grows.then(|| {
                let mut next = cur.to_vec();
                next[i] += 1;
                next[i + 1..].fill(0);
                next
            })
        })
    }
}

impl Iterator for Sequences {
    type Item = CoreSequence;

    fn next(&mut self) -> Option<CoreSequence> {
        let cur = self.current.take()?;
        self.current = self.successor(&cur);
        Some(CoreSequence::from_validated(self.t, self.m, self.family, cur))
    }
}

/// Number of sequences in `C^±_{m,t}`, by a two-state transfer matrix over
/// "last entry zero / nonzero".
pub fn count_distinct_core(t: u64, m: u64, family: Family) -> Result<u64> {
    check_params(t, m)?;
    let (mut zero, mut nonzero) = (1u64, 0u64);
    for i in 1..t {
        let cap = entry_cap(t, m, family, i);
        let next_nonzero = zero.checked_mul(cap).ok_or(Error::Overflow)?;
        zero = zero.checked_add(nonzero).ok_or(Error::Overflow)?;
        nonzero = next_nonzero;
    }
    zero.checked_add(nonzero).ok_or(Error::Overflow)
}

/// Beta-sets of all `(a, b)`-core partitions, optionally only those with
/// distinct parts, in depth-first order.
pub struct CoreBetaSets {
    a: u64,
    b: u64,
    distinct_only: bool,
    gaps: Vec<u64>,
    member: Vec<bool>,
    /// Indices into `gaps` of the current set, increasing.
    path: Vec<usize>,
    /// Next gap index to try at each depth; one longer than `path`.
    cursor: Vec<usize>,
    started: bool,
}

/// Enumerates the beta-sets of `(a, b)`-cores. Moduli must be coprime; a
/// modulus of 1 is accepted and leaves only the empty partition.
pub fn enumerate_core_betasets(a: u64, b: u64, distinct_only: bool) -> Result<CoreBetaSets> {
    if a == 0 || b == 0 || a.gcd(&b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    let bound = a.checked_mul(b).ok_or(Error::Overflow)?;
    let gaps = semigroup_gaps(a, b, bound);
    if let Some(&largest) = gaps.last() {
        // Frobenius number of ⟨a, b⟩
        assert_eq!(largest, bound - a - b, "largest gap of <{}, {}>", a, b);
    }
    Ok(CoreBetaSets {
        a,
        b,
        distinct_only,
        gaps,
        member: vec![false; bound as usize + 1],
        path: Vec::new(),
        cursor: vec![0],
        started: false,
    })
}

/// Positive integers up to `bound` that are not nonnegative combinations of
/// `a` and `b`.
fn semigroup_gaps(a: u64, b: u64, bound: u64) -> Vec<u64> {
    let mut representable = vec![false; bound as usize + 1];
    representable[0] = true;
    let mut gaps = Vec::new();
    for x in 1..=bound {
        let xi = x as usize;
        representable[xi] = (x >= a && representable[xi - a as usize])
            || (x >= b && representable[xi - b as usize]);
        if !representable[xi] {
            gaps.push(x);
        }
    }
    gaps
}

impl CoreBetaSets {
    fn admissible(&self, y: u64) -> bool {
        let below = |step: u64| y < step || self.member[(y - step) as usize];
        below(self.a) && below(self.b) && !(self.distinct_only && y > 1 && self.member[y as usize - 1])
    }

    fn current(&self) -> BetaSet {
        BetaSet::from_decreasing(self.path.iter().rev().map(|&i| self.gaps[i]).collect())
    }
}

impl Iterator for CoreBetaSets {
    type Item = BetaSet;

    fn next(&mut self) -> Option<BetaSet> {
        if !self.started {
            self.started = true;
            return Some(BetaSet::empty());
        }
        loop {
            let next = *self.cursor.last()?;
            if next >= self.gaps.len() {
                self.cursor.pop();
                if let Some(i) = self.path.pop() {
                    self.member[self.gaps[i] as usize] = false;
                }
                continue;
            }
            *self.cursor.last_mut().unwrap() += 1;
            let y = self.gaps[next];
            if self.admissible(y) {
                self.member[y as usize] = true;
                self.path.push(next);
                self.cursor.push(next + 1);
                return Some(self.current());
            }
        }
    }
}

/// `C(n, k)` in `u128`, `None` on overflow.
fn binomial(n: u64, k: u64) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Number of `(a, b)`-cores, `(a + b - 1)! / (a! b!)`, saturating at `u128::MAX`.
pub fn anderson_count(a: u64, b: u64) -> u128 {
    binomial(a + b, a).map_or(u128::MAX, |c| c / (a + b) as u128)
}

/// Refuses enumerations whose estimated output exceeds `limit`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResourceGuard {
    pub limit: u128,
}

impl ResourceGuard {
    pub const DEFAULT_LIMIT: u128 = 100_000_000;

    pub fn unlimited() -> Self {
        ResourceGuard { limit: u128::MAX }
    }

    pub fn check(&self, estimate: u128) -> Result<()> {
        if estimate > self.limit {
            return Err(Error::ResourceLimit { estimate, limit: self.limit });
        }
        Ok(())
    }
}

impl Default for ResourceGuard {
    fn default() -> Self {
        ResourceGuard { limit: Self::DEFAULT_LIMIT }
    }
}

/// What an enumeration should produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Emit {
    Count,
    Sizes,
    Partitions,
}

/// A validated request to enumerate `(a, b)`-cores.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationQuery {
    pub a: u64,
    pub b: u64,
    pub distinct_only: bool,
    pub emit: Emit,
}

impl EnumerationQuery {
    pub fn new(a: u64, b: u64, distinct_only: bool, emit: Emit) -> Result<Self> {
        if a < 2 {
            return Err(Error::InvalidModulus(a));
        }
        if b < 2 {
            return Err(Error::InvalidModulus(b));
        }
        if a.gcd(&b) != 1 {
            return Err(Error::NotCoprime { a, b });
        }
        Ok(EnumerationQuery { a, b, distinct_only, emit })
    }

    /// Expected number of results. Distinct-part families of the form
    /// `(t, mt ± 1)` are counted exactly; everything else is bounded by the
    /// total number of `(a, b)`-cores.
    pub fn estimate(&self) -> u128 {
        let (t, b) = (self.a.min(self.b), self.a.max(self.b));
        if self.distinct_only {
            let exact = if b % t == 1 {
                count_distinct_core(t, b / t, Family::Plus).ok()
            } else if b % t == t - 1 {
                count_distinct_core(t, b / t + 1, Family::Minus).ok()
            } else {
                None
            };
            if let Some(n) = exact {
                return n as u128;
            }
        }
        anderson_count(self.a, self.b)
    }

    pub fn betasets(&self, guard: &ResourceGuard) -> Result<CoreBetaSets> {
        guard.check(self.estimate())?;
        enumerate_core_betasets(self.a, self.b, self.distinct_only)
    }

    pub fn partitions(&self, guard: &ResourceGuard) -> Result<impl Iterator<Item = Partition>> {
        Ok(self.betasets(guard)?.map(|beta| {
            Partition::from_beta_set(&beta).expect("gap down-sets never contain 0")
        }))
    }
}

/// Exact statistics over an enumerated family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyStats {
    pub count: u64,
    pub largest_size: u64,
    pub maximizer_count: u64,
    pub total_size: u64,
    pub average_size: Ratio<u64>,
}

impl FamilyStats {
    pub fn from_sizes(sizes: impl IntoIterator<Item = u64>) -> Result<Self> {
        let (mut count, mut largest, mut maximizers, mut total) = (0u64, 0u64, 0u64, 0u64);
        for size in sizes {
            count += 1;
            total = total.checked_add(size).ok_or(Error::Overflow)?;
            if count == 1 || size > largest {
                largest = size;
                maximizers = 1;
            } else if size == largest {
                maximizers += 1;
            }
        }
        let average_size = Ratio::new(total, count.max(1));
        Ok(FamilyStats {
            count,
            largest_size: largest,
            maximizer_count: maximizers,
            total_size: total,
            average_size,
        })
    }
}

impl Serialize for FamilyStats {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            count: u64,
            largest_size: u64,
            maximizer_count: u64,
            total_size: u64,
            average_size: String,
        }
        Repr {
            count: self.count,
            largest_size: self.largest_size,
            maximizer_count: self.maximizer_count,
            total_size: self.total_size,
            average_size: self.average_size.to_string(),
        }
        .serialize(serializer)
    }
}

pub fn family_stats(a: u64, b: u64, distinct_only: bool, guard: &ResourceGuard) -> Result<FamilyStats> {
    let query = EnumerationQuery::new(a, b, distinct_only, Emit::Sizes)?;
    let mut sizes = Vec::new();
    for beta in query.betasets(guard)? {
        sizes.push(beta.size()?);
    }
    FamilyStats::from_sizes(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entries(t: u64, m: u64, family: Family) -> Vec<Vec<u64>> {
        enumerate_sequences(t, m, family)
            .unwrap()
            .map(|s| s.entries().to_vec())
            .collect()
    }

    #[test]
    fn small_sequence_sets() {
        assert_eq!(entries(3, 1, Family::Plus), vec![vec![0, 0], vec![0, 1], vec![1, 0]]);
        assert_eq!(entries(2, 1, Family::Minus), vec![vec![0]]);
        assert_eq!(entries(5, 1, Family::Plus).len(), 8);
    }

    #[test]
    fn sequences_are_lexicographic_and_valid() {
        for family in [Family::Plus, Family::Minus] {
            let all = entries(6, 3, family);
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for e in &all {
                CoreSequence::new(6, 3, family, e.clone()).unwrap();
            }
        }
    }

    #[test]
    fn transfer_matrix_counts() {
        assert_eq!(count_distinct_core(3, 1, Family::Plus).unwrap(), 3);
        assert_eq!(count_distinct_core(2, 1, Family::Plus).unwrap(), 2);
        for m in 1..8 {
            assert_eq!(count_distinct_core(2, m, Family::Minus).unwrap(), m);
        }
    }

    #[test]
    fn transfer_matrix_overflow() {
        assert_eq!(count_distinct_core(200, 1000, Family::Plus), Err(Error::Overflow));
    }

    #[test]
    fn core_betasets_small() {
        let all: Vec<BetaSet> = enumerate_core_betasets(3, 4, false).unwrap().collect();
        assert_eq!(all.len(), 5);
        assert_eq!(all[0], BetaSet::empty());

        let distinct: Vec<String> = enumerate_core_betasets(2, 3, true)
            .unwrap()
            .map(|b| b.to_string())
            .collect();
        assert_eq!(distinct, vec!["", "1"]);
    }

    #[test]
    fn modulus_one_leaves_only_the_empty_set() {
        let all: Vec<BetaSet> = enumerate_core_betasets(2, 1, true).unwrap().collect();
        assert_eq!(all, vec![BetaSet::empty()]);
    }

    #[test]
    fn non_coprime_is_rejected() {
        assert!(matches!(enumerate_core_betasets(4, 6, false), Err(Error::NotCoprime { .. })));
        assert!(matches!(
            EnumerationQuery::new(3, 9, true, Emit::Count),
            Err(Error::NotCoprime { .. })
        ));
        assert_eq!(EnumerationQuery::new(1, 9, true, Emit::Count), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn anderson_counts() {
        assert_eq!(anderson_count(3, 4), 5);
        assert_eq!(anderson_count(2, 3), 2);
        assert_eq!(anderson_count(5, 6), 42);
        assert_eq!(anderson_count(1000, 1001), u128::MAX);
    }

    #[test]
    fn guard_refuses_large_queries() {
        let q = EnumerationQuery::new(19, 20, false, Emit::Count).unwrap();
        assert!(q.estimate() > ResourceGuard::DEFAULT_LIMIT);
        assert!(matches!(q.betasets(&ResourceGuard::default()), Err(Error::ResourceLimit { .. })));

        // the distinct-part subfamily of the same pair is tiny
        let q = EnumerationQuery::new(19, 20, true, Emit::Count).unwrap();
        assert_eq!(q.estimate(), 6765);
        assert!(q.betasets(&ResourceGuard::default()).is_ok());
    }

    #[test]
    fn stats_small() {
        let s = family_stats(3, 4, false, &ResourceGuard::default()).unwrap();
        assert_eq!(s.count, 5);
        assert_eq!(s.largest_size, 5);
        assert_eq!(s.average_size, Ratio::from_integer(2));

        let s = family_stats(2, 3, false, &ResourceGuard::default()).unwrap();
        assert_eq!((s.count, s.largest_size, s.maximizer_count), (2, 1, 1));
        assert_eq!(s.average_size, Ratio::new(1, 2));
    }

    #[test]
    fn stats_json() {
        let s = family_stats(2, 3, false, &ResourceGuard::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"count":2,"largest_size":1,"maximizer_count":1,"total_size":1,"average_size":"1/2"}"#
        );
    }
}

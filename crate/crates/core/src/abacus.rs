//! Core membership, the distinct-parts criterion and residue profiles.
//!
//! A partition is a `t`-core exactly when its beta-set is closed under
//! subtracting `t` (for elements `≥ t`). On a `t`-abacus each residue class
//! of a `t`-core's beta-set is then an initial run `{i, t + i, 2t + i, …}`,
//! so the run lengths `n_1, …, n_{t-1}` determine the partition.

use crate::error::{Error, Result};
use crate::partition::{binomial2, BetaSet, Partition};

pub(crate) fn check_modulus(t: u64) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidModulus(t));
    }
    Ok(())
}

/// Abacus closure for any modulus `≥ 1`. With modulus 1 only the empty set
/// is closed, since 0 never belongs to a minimal beta-set.
pub(crate) fn abacus_closed(beta: &BetaSet, modulus: u64) -> bool {
    beta.elements()
        .iter()
        .all(|&x| x < modulus || beta.contains(x - modulus))
}

/// `t`-core test through the abacus condition on the beta-set.
pub fn is_t_core(p: &Partition, t: u64) -> Result<bool> {
    check_modulus(t)?;
    Ok(abacus_closed(&p.beta_set(), t))
}

/// `t`-core test straight from the definition: no hook length divisible by `t`.
pub fn is_t_core_by_hooks(p: &Partition, t: u64) -> Result<bool> {
    check_modulus(t)?;
    Ok(p.hook_lengths().iter().flatten().all(|h| h % t != 0))
}

/// Simultaneous core test over every modulus in `ts`.
pub fn is_simultaneous_core(p: &Partition, ts: &[u64]) -> Result<bool> {
    for &t in ts {
        check_modulus(t)?;
    }
    let beta = p.beta_set();
    Ok(ts.iter().all(|&t| abacus_closed(&beta, t)))
}

/// Distinct parts, read off the beta-set: no two elements are consecutive.
/// Agrees with [`Partition::has_distinct_parts`].
pub fn has_distinct_parts_by_beta(p: &Partition) -> bool {
    p.beta_set().has_no_consecutive()
}

/// Run lengths `(n_1, …, n_{t-1})` of a `t`-core's beta-set on the `t`-abacus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueProfile {
    t: u64,
    counts: Vec<u64>,
}

impl ResidueProfile {
    /// `counts[i - 1]` is `n_i`; exactly `t - 1` entries are required.
    pub fn new(t: u64, counts: Vec<u64>) -> Result<Self> {
        check_modulus(t)?;
        if counts.len() as u64 != t - 1 {
            return Err(Error::InvalidSequence(format!(
                "a residue profile for t={} needs {} entries, got {}",
                t,
                t - 1,
                counts.len()
            )));
        }
        Ok(ResidueProfile { t, counts })
    }

    /// Profile of a `t`-core partition. Non-cores are rejected, since their
    /// residue counts do not determine the beta-set.
    pub fn of(p: &Partition, t: u64) -> Result<Self> {
        check_modulus(t)?;
        let beta = p.beta_set();
        if !abacus_closed(&beta, t) {
            return Err(Error::NotCore(t));
        }
        let mut counts = vec![0u64; (t - 1) as usize];
        for &x in beta.elements() {
            // closure under -t together with 0 ∉ β keeps class 0 empty
            let r = x % t;
            debug_assert_ne!(r, 0);
            counts[(r - 1) as usize] += 1;
        }
        Ok(ResidueProfile { t, counts })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `n_i` for `1 ≤ i ≤ t - 1`.
    pub fn count(&self, i: u64) -> u64 {
        self.counts[(i - 1) as usize]
    }

    /// Largest element of residue class `i`, which is `t`-maximal in the
    /// beta-set, or `None` when the class is empty.
    pub fn t_maximal(&self, i: u64) -> Option<u64> {
        match self.count(i) {
            0 => None,
            n => Some(self.t * (n - 1) + i),
        }
    }

    /// `⋃_i {jt + i : 0 ≤ j < n_i}`.
    pub fn beta_set(&self) -> Result<BetaSet> {
        let mut elements = Vec::with_capacity(self.counts.iter().sum::<u64>() as usize);
        for (idx, &n) in self.counts.iter().enumerate() {
            let i = idx as u64 + 1;
            for j in 0..n {
                let x = j
                    .checked_mul(self.t)
                    .and_then(|v| v.checked_add(i))
                    .ok_or(Error::Overflow)?;
                elements.push(x);
            }
        }
        BetaSet::new(elements)
    }

    pub fn to_partition(&self) -> Result<Partition> {
        Partition::from_beta_set(&self.beta_set()?)
    }

    /// `Σ_i (i·n_i + t·C(n_i, 2)) - C(Σ_i n_i, 2)`.
    pub fn size(&self) -> Result<u64> {
        let mut total = 0u64;
        let mut len = 0u64;
        for (idx, &n) in self.counts.iter().enumerate() {
            let i = idx as u64 + 1;
            let spread = self.t.checked_mul(binomial2(n)?).ok_or(Error::Overflow)?;
            let class = i
                .checked_mul(n)
                .and_then(|a| a.checked_add(spread))
                .ok_or(Error::Overflow)?;
            total = total.checked_add(class).ok_or(Error::Overflow)?;
            len = len.checked_add(n).ok_or(Error::Overflow)?;
        }
        total.checked_sub(binomial2(len)?).ok_or(Error::Overflow)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cores_of_7_2_1() {
        let q = p(&[7, 2, 1]);
        assert!(is_t_core(&q, 6).unwrap());
        assert!(is_t_core(&q, 8).unwrap());
        assert!(!is_t_core(&q, 9).unwrap());
        for t in [6, 8, 9] {
            assert_eq!(is_t_core(&q, t), is_t_core_by_hooks(&q, t));
        }
    }

    #[test]
    fn empty_partition_is_every_core() {
        for t in 2..20 {
            assert!(is_t_core(&Partition::empty(), t).unwrap());
        }
    }

    #[test]
    fn simultaneous_cores() {
        assert!(is_simultaneous_core(&p(&[7, 2, 1]), &[6, 8]).unwrap());
        assert!(is_simultaneous_core(&p(&[7, 2, 2]), &[6, 7]).unwrap());
        assert!(is_simultaneous_core(&p(&[1]), &[2, 3]).unwrap());
        assert!(!is_simultaneous_core(&p(&[7, 2, 1]), &[6, 9]).unwrap());
    }

    #[test]
    fn modulus_below_two_is_rejected() {
        assert_eq!(is_t_core(&p(&[1]), 1), Err(Error::InvalidModulus(1)));
        assert_eq!(is_t_core_by_hooks(&p(&[1]), 0), Err(Error::InvalidModulus(0)));
        assert_eq!(is_simultaneous_core(&p(&[1]), &[3, 1]), Err(Error::InvalidModulus(1)));
    }

    #[test]
    fn distinctness_by_beta() {
        assert!(!has_distinct_parts_by_beta(&p(&[7, 2, 2])));
        assert!(has_distinct_parts_by_beta(&p(&[12, 11, 10, 8, 7, 6, 4, 3, 2])));
        assert!(has_distinct_parts_by_beta(&Partition::empty()));
    }

    #[test]
    fn profile_of_7_2_2() {
        let rp = ResidueProfile::of(&p(&[7, 2, 2]), 6).unwrap();
        assert_eq!(rp.counts(), &[0, 1, 2, 0, 0]);
        assert_eq!(rp.t_maximal(2), Some(2));
        assert_eq!(rp.t_maximal(3), Some(9));
        assert_eq!(rp.t_maximal(1), None);
        assert_eq!(rp.size().unwrap(), 11);
        assert_eq!(rp.to_partition().unwrap(), p(&[7, 2, 2]));
    }

    #[test]
    fn profile_of_7_6_5() {
        let rp = ResidueProfile::of(&p(&[7, 6, 5]), 10).unwrap();
        assert_eq!(rp.counts(), &[0, 0, 0, 0, 1, 0, 1, 0, 1]);
        assert_eq!(rp.size().unwrap(), 18);
    }

    #[test]
    fn profile_of_empty() {
        let rp = ResidueProfile::of(&Partition::empty(), 5).unwrap();
        assert_eq!(rp.counts(), &[0, 0, 0, 0]);
        assert_eq!(rp.size().unwrap(), 0);
    }

    #[test]
    fn profile_rejects_non_core() {
        assert_eq!(ResidueProfile::of(&p(&[7, 2, 1]), 9), Err(Error::NotCore(9)));
    }

    #[test]
    fn profile_length_is_checked() {
        assert!(ResidueProfile::new(4, vec![1, 0]).is_err());
        assert!(ResidueProfile::new(4, vec![1, 0, 0]).is_ok());
        assert_eq!(ResidueProfile::new(1, vec![]), Err(Error::InvalidModulus(1)));
    }
}

//! Sequence encodings of `(t, mt ± 1)`-core partitions with distinct parts.
//!
//! A member of either family is recorded by its residue profile
//! `(n_1, …, n_{t-1})` modulo `t`. The profiles that occur are exactly the
//! sequences with entries in `0..=m`, no two adjacent nonzero entries, and,
//! for the `mt - 1` family, last entry at most `m - 1`. [`to_sequence`] and
//! [`from_sequence`] are mutually inverse on these sets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abacus::{abacus_closed, check_modulus, ResidueProfile};
use crate::error::{Error, Result};
use crate::partition::{write_list, Partition};

/// Which of the two families `b = mt + 1` or `b = mt - 1` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Plus,
    Minus,
}

impl Family {
    /// The second modulus `mt ± 1`.
    pub fn b(self, t: u64, m: u64) -> Result<u64> {
        let mt = m.checked_mul(t).ok_or(Error::Overflow)?;
        match self {
            Family::Plus => mt.checked_add(1).ok_or(Error::Overflow),
            Family::Minus => Ok(mt - 1),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Plus => "plus",
            Family::Minus => "minus",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "plus" | "+" => Ok(Family::Plus),
            "minus" | "-" => Ok(Family::Minus),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected `plus` or `minus`".to_string(),
            }),
        }
    }
}

pub(crate) fn check_params(t: u64, m: u64) -> Result<()> {
    check_modulus(t)?;
    if m == 0 {
        return Err(Error::InvalidMultiplier(m));
    }
    m.checked_mul(t)
        .and_then(|mt| mt.checked_add(1))
        .ok_or(Error::Overflow)?;
    Ok(())
}

/// Upper bound on entry `i` (1-based) of a sequence in the given family.
pub(crate) fn entry_cap(t: u64, m: u64, family: Family, i: u64) -> u64 {
    if family == Family::Minus && i == t - 1 {
        m - 1
    } else {
        m
    }
}

/// An element of `C⁺_{m,t}` or `C⁻_{m,t}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoreSequence {
    t: u64,
    m: u64,
    family: Family,
    entries: Vec<u64>,
}

impl CoreSequence {
    pub fn new(t: u64, m: u64, family: Family, entries: Vec<u64>) -> Result<Self> {
        check_params(t, m)?;
        if entries.len() as u64 != t - 1 {
            return Err(Error::InvalidSequence(format!(
                "expected {} entries for t={}, got {}",
                t - 1,
                t,
                entries.len()
            )));
        }
        for (idx, &x) in entries.iter().enumerate() {
            let i = idx as u64 + 1;
            let cap = entry_cap(t, m, family, i);
            if x > cap {
                return Err(Error::InvalidSequence(format!(
                    "entry x_{} = {} exceeds {}",
                    i, x, cap
                )));
            }
        }
        if let Some(idx) = entries.windows(2).position(|w| w[0] != 0 && w[1] != 0) {
            return Err(Error::InvalidSequence(format!(
                "entries x_{} and x_{} are both nonzero",
                idx + 1,
                idx + 2
            )));
        }
        Ok(CoreSequence { t, m, family, entries })
    }

    /// Parses comma-separated entries such as `0,3,0,3,0,3`.
    pub fn parse(t: u64, m: u64, family: Family, text: &str) -> Result<Self> {
        let entries = crate::partition::parse_list(text)?;
        CoreSequence::new(t, m, family, entries)
    }

    pub(crate) fn from_validated(t: u64, m: u64, family: Family, entries: Vec<u64>) -> Self {
        CoreSequence { t, m, family, entries }
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// `(x_1, …, x_{t-1})`.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }
}

impl fmt::Display for CoreSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.entries)
    }
}

impl fmt::Debug for CoreSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[t={}, m={}](", self.family, self.t, self.m)?;
        write_list(f, &self.entries)?;
        write!(f, ")")
    }
}

/// True when `p` is a `(t, mt ± 1)`-core with distinct parts.
///
/// The second modulus may be 1 (`t = 2, m = 1, Minus`), in which case only
/// the empty partition qualifies.
pub fn is_member(p: &Partition, t: u64, m: u64, family: Family) -> Result<bool> {
    check_params(t, m)?;
    let b = family.b(t, m)?;
    let beta = p.beta_set();
    Ok(beta.has_no_consecutive() && abacus_closed(&beta, t) && abacus_closed(&beta, b))
}

/// Residue profile of a family member as a [`CoreSequence`]. Membership is
/// checked, not assumed.
pub fn to_sequence(p: &Partition, t: u64, m: u64, family: Family) -> Result<CoreSequence> {
    if !is_member(p, t, m, family)? {
        return Err(Error::NotInFamily { t, b: family.b(t, m)?, family });
    }
    let profile = ResidueProfile::of(p, t)?;
    CoreSequence::new(t, m, family, profile.counts().to_vec())
}

/// The partition whose beta-set is `⋃_i {k t + i : 0 ≤ k < x_i}`.
pub fn from_sequence(s: &CoreSequence) -> Result<Partition> {
    ResidueProfile::new(s.t, s.entries.clone())?.to_partition()
}

/// `ψ`: a `(t, mt + 1)`-core with distinct parts to its sequence in `C⁺_{m,t}`.
pub fn psi(p: &Partition, t: u64, m: u64) -> Result<CoreSequence> {
    to_sequence(p, t, m, Family::Plus)
}

/// Inverse of [`psi`].
pub fn psi_inverse(s: &CoreSequence) -> Result<Partition> {
    expect_family(s, Family::Plus)?;
    from_sequence(s)
}

/// `φ`: a `(t, mt - 1)`-core with distinct parts to its sequence in `C⁻_{m,t}`.
pub fn phi(p: &Partition, t: u64, m: u64) -> Result<CoreSequence> {
    to_sequence(p, t, m, Family::Minus)
}

/// Inverse of [`phi`].
pub fn phi_inverse(s: &CoreSequence) -> Result<Partition> {
    expect_family(s, Family::Minus)?;
    from_sequence(s)
}

fn expect_family(s: &CoreSequence, family: Family) -> Result<()> {
    if s.family != family {
        return Err(Error::InvalidSequence(format!(
            "expected a {} sequence, got {}",
            family, s.family
        )));
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
    fn psi_examples() {
        assert_eq!(psi(&p(&[7, 6, 5]), 10, 1).unwrap().entries(), &[0, 0, 0, 0, 1, 0, 1, 0, 1]);
        assert_eq!(psi(&Partition::empty(), 6, 2).unwrap().entries(), &[0; 5]);
        assert_eq!(
            psi(&p(&[12, 11, 10, 8, 7, 6, 4, 3, 2]), 7, 3).unwrap().entries(),
            &[0, 3, 0, 3, 0, 3]
        );
    }

    #[test]
    fn psi_inverse_examples() {
        let s = CoreSequence::new(10, 1, Family::Plus, vec![0, 0, 0, 0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!(psi_inverse(&s).unwrap(), p(&[7, 6, 5]));
        let s = CoreSequence::new(7, 3, Family::Plus, vec![0; 6]).unwrap();
        assert_eq!(psi_inverse(&s).unwrap(), Partition::empty());
        let s = CoreSequence::parse(7, 3, Family::Plus, "0,3,0,3,0,3").unwrap();
        assert_eq!(psi_inverse(&s).unwrap(), p(&[12, 11, 10, 8, 7, 6, 4, 3, 2]));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&p(&[9, 8, 4, 3]), 7, 2).unwrap().entries(), &[0, 0, 2, 0, 2, 0]);
        assert_eq!(phi(&Partition::empty(), 7, 2).unwrap().entries(), &[0; 6]);
        let s = CoreSequence::parse(7, 2, Family::Minus, "0,0,2,0,2,0").unwrap();
        assert_eq!(phi_inverse(&s).unwrap(), p(&[9, 8, 4, 3]));
    }

    #[test]
    fn non_members_are_rejected() {
        // (7,2,2) has a repeated part
        assert!(matches!(psi(&p(&[7, 2, 2]), 6, 1), Err(Error::NotInFamily { .. })));
        // (7,6,5) is not a 4-core: 9 - 4 = 5 fine but 7 - 4 = 3 missing
        assert!(matches!(psi(&p(&[7, 6, 5]), 4, 2), Err(Error::NotInFamily { .. })));
        assert!(matches!(phi(&p(&[1]), 2, 1), Err(Error::NotInFamily { .. })));
    }

    #[test]
    fn one_core_degenerate_case() {
        // t = 2, m = 1 in the minus family: the second modulus is 1
        let s = phi(&Partition::empty(), 2, 1).unwrap();
        assert_eq!(s.entries(), &[0]);
        assert_eq!(phi_inverse(&s).unwrap(), Partition::empty());
        assert!(CoreSequence::new(2, 1, Family::Minus, vec![1]).is_err());
    }

    #[test]
    fn sequence_validation() {
        assert!(CoreSequence::new(5, 2, Family::Plus, vec![2, 0, 2, 0]).is_ok());
        assert!(CoreSequence::new(5, 2, Family::Plus, vec![2, 1, 0, 0]).is_err());
        assert!(CoreSequence::new(5, 2, Family::Plus, vec![3, 0, 0, 0]).is_err());
        assert!(CoreSequence::new(5, 2, Family::Plus, vec![0, 0, 0]).is_err());
        assert!(CoreSequence::new(5, 2, Family::Minus, vec![0, 0, 0, 2]).is_err());
        assert!(CoreSequence::new(5, 2, Family::Minus, vec![0, 0, 0, 1]).is_ok());
        assert!(CoreSequence::new(5, 0, Family::Plus, vec![0; 4]).is_err());
        assert!(CoreSequence::new(1, 1, Family::Plus, vec![]).is_err());
    }

    #[test]
    fn wrong_family_inverse_is_rejected() {
        let s = CoreSequence::new(4, 1, Family::Plus, vec![1, 0, 1]).unwrap();
        assert!(phi_inverse(&s).is_err());
        assert_eq!(psi_inverse(&s).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn family_text() {
        assert_eq!("plus".parse::<Family>().unwrap(), Family::Plus);
        assert_eq!("minus".parse::<Family>().unwrap(), Family::Minus);
        assert!("both".parse::<Family>().is_err());
        assert_eq!(Family::Minus.b(7, 2).unwrap(), 13);
        assert_eq!(Family::Plus.b(7, 3).unwrap(), 22);
    }
}

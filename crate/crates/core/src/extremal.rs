//! Largest sizes of `(t, mt ± 1)`-core partitions with distinct parts.
//!
//! Every maximizer has a residue profile of a very rigid shape: in the
//! `mt + 1` family it is `λ^r`, with `n_i = m` on `i ∈ {t - 1, t - 3, …,
//! t + 1 - 2r}`; in the `mt - 1` family it is either `λ^r` (same classes, but
//! `n_{t-1} = m - 1`) or `μ^s`, with `n_i = m` on `i ∈ {t - 2, t - 4, …, t - 2s}`.
//! Their sizes are concave quadratics in the index, maximized next to
//!
//! ```text
//! α(x) = (mt + t + x) / (2(m + 2))
//! ```
//!
//! with `x = 1` for `λ^r` in the plus family, `x = 3` for `λ^r` in the minus
//! family and `x = -1` for `μ^s`. Whether the fractional part of `α` is below,
//! at, or above `1/2` decides the maximizing index, and the exact tie at `1/2`
//! is where two maximizers appear. All of that is evaluated with exact
//! rationals; there is no floating point in this module.

use std::cmp::Ordering;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bijection::{check_params, from_sequence, CoreSequence, Family};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// The exact rational `α_{m,t}(x) = (mt + t + x) / (2(m + 2))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alpha(Ratio<i128>);

impl Alpha {
    pub fn value(&self) -> Ratio<i128> {
        self.0
    }

    pub fn floor(&self) -> i128 {
        self.0.floor().to_integer()
    }

    /// `{α} = α - ⌊α⌋`, in `[0, 1)`.
    pub fn fract(&self) -> Ratio<i128> {
        self.0 - self.0.floor()
    }

    /// How `{α}` compares with `1/2`.
    pub fn fract_vs_half(&self) -> Ordering {
        self.fract().cmp(&Ratio::new(1, 2))
    }

    /// Index chosen by the closed forms: `⌊α⌋` when `{α} ≤ 1/2`, else `⌊α⌋ + 1`.
    pub fn rounded(&self) -> i128 {
        match self.fract_vs_half() {
            Ordering::Greater => self.floor() + 1,
            _ => self.floor(),
        }
    }

    /// Integers nearest to `α`: one of them, or both neighbours on a tie.
    fn nearest(&self) -> Vec<i128> {
        match self.fract_vs_half() {
            Ordering::Less => vec![self.floor()],
            Ordering::Equal => vec![self.floor(), self.floor() + 1],
            Ordering::Greater => vec![self.floor() + 1],
        }
    }
}

pub fn alpha(m: u64, t: u64, x: i64) -> Result<Alpha> {
    check_params(t, m)?;
    let (m, t) = (m as i128, t as i128);
    Ok(Alpha(Ratio::new(m * t + t + x as i128, 2 * (m + 2))))
}

/// `(-x²(m² + 2m) + x(m²t + mt + c)) / 2`, where `c` is `m`, `3m` or `-m`.
fn half_quadratic(m: u64, t: u64, x: i128, c: i128) -> Result<i128> {
    let (m, t) = (m as i128, t as i128);
    let curvature = m.checked_mul(m + 2).ok_or(Error::Overflow)?;
    let slope = m
        .checked_mul(m)
        .and_then(|mm| mm.checked_mul(t))
        .and_then(|v| v.checked_add(m * t))
        .and_then(|v| v.checked_add(c))
        .ok_or(Error::Overflow)?;
    let numerator = x
        .checked_mul(slope)
        .and_then(|lin| {
            x.checked_mul(x)
                .and_then(|xx| xx.checked_mul(curvature))
                .and_then(|quad| lin.checked_sub(quad))
        })
        .ok_or(Error::Overflow)?;
    debug_assert!(numerator.is_even());
    Ok(numerator / 2)
}

/// Size of `λ^x` as a polynomial in `x`, valid for any integer argument.
/// In the minus family this is `F(x)`.
fn lambda_poly(m: u64, t: u64, x: i128, family: Family) -> Result<i128> {
    match family {
        Family::Plus => half_quadratic(m, t, x, m as i128),
        Family::Minus => {
            let v = half_quadratic(m, t, x, 3 * m as i128)?;
            v.checked_sub(m as i128 * t as i128).ok_or(Error::Overflow)
        }
    }
}

/// `G(x)`, the size of `μ^x` as a polynomial in `x`.
fn mu_poly(m: u64, t: u64, x: i128) -> Result<i128> {
    half_quadratic(m, t, x, -(m as i128))
}

fn to_size(v: i128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::Overflow)
}

fn check_index(index: u64, max: u64) -> Result<()> {
    if index < 1 || index > max {
        return Err(Error::IndexOutOfRange { index, min: 1, max });
    }
    Ok(())
}

/// `|λ^r|` for `1 ≤ r ≤ ⌊t/2⌋`.
pub fn size_lambda_r(m: u64, t: u64, r: u64, family: Family) -> Result<u64> {
    check_params(t, m)?;
    check_index(r, t / 2)?;
    to_size(lambda_poly(m, t, r as i128, family)?)
}

/// `|μ^s| = G(s)` for `1 ≤ s ≤ ⌊(t-1)/2⌋`.
pub fn size_mu_s(m: u64, t: u64, s: u64) -> Result<u64> {
    check_params(t, m)?;
    check_index(s, (t - 1) / 2)?;
    to_size(mu_poly(m, t, s as i128)?)
}

/// Residue profile of `λ^r` as a sequence of the given family.
pub fn lambda_r_sequence(m: u64, t: u64, r: u64, family: Family) -> Result<CoreSequence> {
    check_params(t, m)?;
    check_index(r, t / 2)?;
    let mut entries = vec![0u64; (t - 1) as usize];
    for j in 1..=r {
        let i = t + 1 - 2 * j;
        entries[(i - 1) as usize] = if family == Family::Minus && j == 1 { m - 1 } else { m };
    }
    CoreSequence::new(t, m, family, entries)
}

/// Residue profile of `μ^s` as a sequence of the minus family.
pub fn mu_s_sequence(m: u64, t: u64, s: u64) -> Result<CoreSequence> {
    check_params(t, m)?;
    check_index(s, (t - 1) / 2)?;
    let mut entries = vec![0u64; (t - 1) as usize];
    for j in 1..=s {
        entries[(t - 2 * j - 1) as usize] = m;
    }
    CoreSequence::new(t, m, Family::Minus, entries)
}

pub fn build_lambda_r(m: u64, t: u64, r: u64, family: Family) -> Result<Partition> {
    from_sequence(&lambda_r_sequence(m, t, r, family)?)
}

pub fn build_mu_s(m: u64, t: u64, s: u64) -> Result<Partition> {
    from_sequence(&mu_s_sequence(m, t, s)?)
}

/// Largest size, number of maximizers and the maximizers themselves for one
/// `(t, mt ± 1)` family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub t: u64,
    pub b: u64,
    pub m: u64,
    pub family: Family,
    pub largest_size: u64,
    pub maximizer_count: u64,
    pub maximizers: Vec<Partition>,
}

impl ExtremalReport {
    fn new(t: u64, m: u64, family: Family, largest_size: u64, maximizers: Vec<Partition>) -> Result<Self> {
        Ok(ExtremalReport {
            t,
            b: family.b(t, m)?,
            m,
            family,
            largest_size,
            maximizer_count: maximizers.len() as u64,
            maximizers,
        })
    }
}

/// Which shape a candidate maximizer has.
#[derive(Clone, Copy, Debug)]
enum Witness {
    Lambda(u64),
    Mu(u64),
}

/// Evaluates every candidate, keeps those attaining `largest`, and checks the
/// closed form against the candidates.
fn collect_maximizers(
    t: u64,
    m: u64,
    family: Family,
    largest: i128,
    candidates: &[Witness],
) -> Result<Vec<Partition>> {
    let inconsistent = |detail: String| Error::Inconsistent { t, m, detail };
    let mut best = None;
    let mut winners = Vec::new();
    for &w in candidates {
        let size = match w {
            Witness::Lambda(r) => size_lambda_r(m, t, r, family)?,
            Witness::Mu(s) => size_mu_s(m, t, s)?,
        } as i128;
        best = best.max(Some(size));
        if size == largest {
            winners.push(match w {
                Witness::Lambda(r) => build_lambda_r(m, t, r, family)?,
                Witness::Mu(s) => build_mu_s(m, t, s)?,
            });
        }
    }
    if best != Some(largest) {
        return Err(inconsistent(format!(
            "closed form gives {}, best candidate gives {:?}",
            largest, best
        )));
    }
    Ok(winners)
}

fn in_range(x: i128, max: u64) -> Option<u64> {
    (x >= 1 && x <= max as i128).then_some(x as u64)
}

/// The `(t, mt + 1)` family.
pub fn extremal_plus(t: u64, m: u64) -> Result<ExtremalReport> {
    check_params(t, m)?;
    let a = alpha(m, t, 1)?;
    let largest = lambda_poly(m, t, a.rounded(), Family::Plus)?;
    let expected_count = if a.fract_vs_half() == Ordering::Equal { 2 } else { 1 };

    let candidates: Vec<Witness> = a
        .nearest()
        .into_iter()
        .filter_map(|r| in_range(r, t / 2))
        .map(Witness::Lambda)
        .collect();
    let maximizers = collect_maximizers(t, m, Family::Plus, largest, &candidates)?;
    if maximizers.len() != expected_count {
        return Err(Error::Inconsistent {
            t,
            m,
            detail: format!("expected {} maximizers, found {}", expected_count, maximizers.len()),
        });
    }
    ExtremalReport::new(t, m, Family::Plus, to_size(largest)?, maximizers)
}

/// True for the parameter pairs where the `μ^s` index follows `α(-1)`; on the
/// others it is pinned to `⌊(t-1)/2⌋`.
fn minus_uses_alpha_for_mu(t: u64, m: u64) -> bool {
    if t % 2 == 1 {
        t > m + 1
    } else {
        t > 2 * m + 3
    }
}

/// The `(t, mt - 1)` family.
///
/// For `m = 1` the family coincides with the `(t - 1, t)` cores and is
/// answered by [`extremal_plus`]; `t = 2, m = 1` is the 1-core family `{()}`.
pub fn extremal_minus(t: u64, m: u64) -> Result<ExtremalReport> {
    check_params(t, m)?;
    if m == 1 {
        if t == 2 {
            return ExtremalReport::new(t, m, Family::Minus, 0, vec![Partition::empty()]);
        }
        let swapped = extremal_plus(t - 1, 1)?;
        return ExtremalReport::new(t, m, Family::Minus, swapped.largest_size, swapped.maximizers);
    }

    let a_lambda = alpha(m, t, 3)?;
    let a_mu = alpha(m, t, -1)?;
    let by_alpha = minus_uses_alpha_for_mu(t, m);

    let f_at = a_lambda.rounded();
    let g_at = if by_alpha { a_mu.rounded() } else { ((t - 1) / 2) as i128 };
    let largest = lambda_poly(m, t, f_at, Family::Minus)?.max(mu_poly(m, t, g_at)?);

    let mut candidates: Vec<Witness> = a_lambda
        .nearest()
        .into_iter()
        .filter_map(|r| in_range(r, t / 2))
        .map(Witness::Lambda)
        .collect();
    let mu_indices = if by_alpha { a_mu.nearest() } else { vec![g_at] };
    candidates.extend(
        mu_indices
            .into_iter()
            .filter_map(|s| in_range(s, (t - 1) / 2))
            .map(Witness::Mu),
    );

    let maximizers = collect_maximizers(t, m, Family::Minus, largest, &candidates)?;
    if maximizers.len() > 2 {
        return Err(Error::Inconsistent {
            t,
            m,
            detail: format!("{} maximizers, at most 2 expected", maximizers.len()),
        });
    }
    ExtremalReport::new(t, m, Family::Minus, to_size(largest)?, maximizers)
}

pub fn extremal(t: u64, m: u64, family: Family) -> Result<ExtremalReport> {
    match family {
        Family::Plus => extremal_plus(t, m),
        Family::Minus => extremal_minus(t, m),
    }
}

/// True when `(t, m)` sits on a tie `{α} = 1/2` that decides the maximizers
/// of the family.
pub fn knife_edge(t: u64, m: u64, family: Family) -> Result<bool> {
    check_params(t, m)?;
    let tie = |a: Alpha| a.fract_vs_half() == Ordering::Equal;
    Ok(match family {
        Family::Plus => tie(alpha(m, t, 1)?),
        Family::Minus if m == 1 => t > 2 && tie(alpha(1, t - 1, 1)?),
        Family::Minus => {
            tie(alpha(m, t, 3)?) || (minus_uses_alpha_for_mu(t, m) && tie(alpha(m, t, -1)?))
        }
    })
}

/// The `(t, t + 1)` family from its own closed form: largest size
/// `⌊t(t+1)/6⌋`, two maximizers exactly when `t ≡ 1 (mod 3)`.
pub fn corollary_t_t_plus_1(t: u64) -> Result<ExtremalReport> {
    check_params(t, 1)?;
    let largest = (t as u128 * (t as u128 + 1) / 6) as u64;
    // nearest integers to (2t + 1)/6
    let r = (t + 1) / 3;
    let indices = if t % 3 == 1 { vec![r, r + 1] } else { vec![r] };
    let maximizers = indices
        .into_iter()
        .map(|r| build_lambda_r(1, t, r, Family::Plus))
        .collect::<Result<Vec<_>>>()?;
    ExtremalReport::new(t, 1, Family::Plus, largest, maximizers)
}

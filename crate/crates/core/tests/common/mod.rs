//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library; partitions are plain `Vec<u64>` in decreasing order.

#![allow(dead_code)]

use rand::Rng;

pub fn conjugate(parts: &[u64]) -> Vec<u64> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| parts.iter().filter(|&&p| p >= j).count() as u64)
        .collect()
}

/// Hook lengths straight from the diagram: arm + leg + 1.
pub fn hooks(parts: &[u64]) -> Vec<Vec<u64>> {
    let conj = conjugate(parts);
    parts
        .iter()
        .enumerate()
        .map(|(i, &row)| {
            (0..row as usize)
                .map(|j| (row - j as u64 - 1) + (conj[j] - i as u64 - 1) + 1)
                .collect()
        })
        .collect()
}

pub fn is_core_by_hooks(parts: &[u64], t: u64) -> bool {
    hooks(parts).iter().flatten().all(|h| h % t != 0)
}

/// `{λ_i + ℓ - i}`, decreasing.
pub fn beta(parts: &[u64]) -> Vec<u64> {
    let len = parts.len() as u64;
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i as u64)
        .collect()
}

/// Inverse of [`beta`] for a set without 0; any order accepted.
pub fn parts_from_beta(set: &[u64]) -> Vec<u64> {
    let mut xs = set.to_vec();
    xs.sort_unstable_by(|a, b| b.cmp(a));
    let n = xs.len() as u64;
    xs.iter().enumerate().map(|(i, &x)| x - (n - 1 - i as u64)).collect()
}

pub fn strictly_decreasing(parts: &[u64]) -> bool {
    parts.windows(2).all(|w| w[0] > w[1])
}

/// Every simultaneous `(a, b)`-core, by depth-first search over candidate
/// β-elements `1, 2, …` in increasing order. Including `x` requires `x - a`
/// and `x - b` to be present whenever they are nonnegative (0 is never
/// present), and, for distinct parts, `x - 1` to be absent.
pub fn brute_cores(a: u64, b: u64, distinct: bool) -> Vec<Vec<u64>> {
    fn go(x: u64, top: u64, a: u64, b: u64, distinct: bool, chosen: &mut Vec<bool>, out: &mut Vec<Vec<u64>>) {
        if x > top {
            let set: Vec<u64> = (1..=top).filter(|&y| chosen[y as usize]).collect();
            out.push(parts_from_beta(&set));
            return;
        }
        go(x + 1, top, a, b, distinct, chosen, out);
        let needs = |step: u64| x < step || (x > step && chosen[(x - step) as usize]);
        let clear = !distinct || !chosen[(x - 1) as usize];
        if needs(a) && needs(b) && clear {
            chosen[x as usize] = true;
            go(x + 1, top, a, b, distinct, chosen, out);
            chosen[x as usize] = false;
        }
    }
    // Every element of a closed set lies below the Frobenius number ab - a - b.
    let top = a * b;
    let mut chosen = vec![false; top as usize + 1];
    let mut out = Vec::new();
    go(1, top, a, b, distinct, &mut chosen, &mut out);
    out
}

/// Largest size and the maximizers, sorted.
pub fn maximizers(family: &[Vec<u64>]) -> (u64, Vec<Vec<u64>>) {
    let best = family.iter().map(|p| p.iter().sum::<u64>()).max().unwrap_or(0);
    let mut winners: Vec<Vec<u64>> = family
        .iter()
        .filter(|p| p.iter().sum::<u64>() == best)
        .cloned()
        .collect();
    winners.sort();
    (best, winners)
}

/// Random partition with at most `max_len` parts, each at most `max_part`.
pub fn random_partition(rng: &mut impl Rng, max_part: u64, max_len: usize) -> Vec<u64> {
    let len = rng.gen_range(0..=max_len);
    let mut parts: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Random `t`-core: a random profile turned into a β-set by hand.
pub fn random_core(rng: &mut impl Rng, t: u64, max_count: u64) -> Vec<u64> {
    let mut set = Vec::new();
    for i in 1..t {
        let n = rng.gen_range(0..=max_count);
        set.extend((0..n).map(|k| i + k * t));
    }
    parts_from_beta(&set)
}

/// Random entries in `0..=m` with no two adjacent nonzero, last entry capped
/// at `last_cap`.
pub fn random_sequence(rng: &mut impl Rng, len: usize, m: u64, last_cap: u64) -> Vec<u64> {
    let mut xs = vec![0u64; len];
    for i in 0..len {
        let cap = if i + 1 == len { last_cap } else { m };
        if (i == 0 || xs[i - 1] == 0) && cap > 0 && rng.gen_bool(0.5) {
            xs[i] = rng.gen_range(1..=cap);
        }
    }
    xs
}

pub fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

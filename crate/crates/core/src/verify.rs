//! Grid checks of the closed forms and bijections against enumeration.
//!
//! Each check covers one parameter cell and returns the list of
//! discrepancies it found; an empty list means the cell passed. Cells share
//! nothing, so callers are free to run them on as many workers as they like.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::bijection::{from_sequence, is_member, to_sequence, Family};
use crate::enumeration::{
    anderson_count, count_distinct_core, enumerate_core_betasets, enumerate_sequences, family_stats,
    ResourceGuard,
};
use crate::error::Result;
use crate::extremal::{corollary_t_t_plus_1, extremal, knife_edge};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    ThmPlus,
    ThmMinus,
    Bijections,
    Classical,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::ThmPlus, Suite::ThmMinus, Suite::Bijections, Suite::Classical];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ThmPlus => "thm-plus",
            Suite::ThmMinus => "thm-minus",
            Suite::Bijections => "bijections",
            Suite::Classical => "classical",
        }
    }

    /// Every cell of the suite over the given inclusive ranges. The classical
    /// suite reads `t_range` as the range for both moduli and ignores `m`.
    pub fn cells(self, t_range: (u64, u64), m_range: (u64, u64)) -> Vec<Cell> {
        let (t_lo, t_hi) = t_range;
        let (m_lo, m_hi) = m_range;
        let grid = |family| {
            (t_lo.max(2)..=t_hi)
                .flat_map(move |t| (m_lo.max(1)..=m_hi).map(move |m| (t, m, family)))
        };
        match self {
            Suite::ThmPlus => grid(Family::Plus).map(|(t, m, f)| Cell::Extremal { t, m, family: f }).collect(),
            Suite::ThmMinus => grid(Family::Minus).map(|(t, m, f)| Cell::Extremal { t, m, family: f }).collect(),
            Suite::Bijections => grid(Family::Plus)
                .chain(grid(Family::Minus))
                .map(|(t, m, f)| Cell::Bijection { t, m, family: f })
                .collect(),
            Suite::Classical => {
                let lo = t_lo.max(2);
                let mut cells: Vec<Cell> = (lo..=t_hi)
                    .flat_map(|a| (a + 1..=t_hi).map(move |b| (a, b)))
                    .filter(|&(a, b)| num_integer::gcd(a, b) == 1)
                    .map(|(a, b)| Cell::Classical { a, b })
                    .collect();
                cells.extend((lo..=t_hi).map(|t| Cell::Fibonacci { t }));
                cells
            }
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {:?}", s))
    }
}

/// One independent unit of verification work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Cell {
    Extremal { t: u64, m: u64, family: Family },
    Bijection { t: u64, m: u64, family: Family },
    Classical { a: u64, b: u64 },
    Fibonacci { t: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub cell: Cell,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellOutcome {
    pub cell: Cell,
    pub discrepancies: Vec<Discrepancy>,
    /// The cell sits on a tie `{α} = 1/2`.
    pub knife_edge: bool,
}

impl Cell {
    pub fn run(self) -> CellOutcome {
        let mut found = Vec::new();
        let mut knife = false;
        let result = match self {
            Cell::Extremal { t, m, family } => {
                knife = knife_edge(t, m, family).unwrap_or(false);
                extremal_cell(self, t, m, family, &mut found)
            }
            Cell::Bijection { t, m, family } => bijection_cell(self, t, m, family, &mut found),
            Cell::Classical { a, b } => classical_cell(self, a, b, &mut found),
            Cell::Fibonacci { t } => fibonacci_cell(self, t, &mut found),
        };
        if let Err(e) = result {
            found.push(Discrepancy {
                cell: self,
                check: "evaluation".into(),
                expected: "no error".into(),
                actual: e.to_string(),
            });
        }
        CellOutcome { cell: self, discrepancies: found, knife_edge: knife }
    }
}

fn compare<T: PartialEq + fmt::Debug>(
    cell: Cell,
    check: &str,
    expected: T,
    actual: T,
    out: &mut Vec<Discrepancy>,
) {
    if expected != actual {
        out.push(Discrepancy {
            cell,
            check: check.to_string(),
            expected: format!("{:?}", expected),
            actual: format!("{:?}", actual),
        });
    }
}

/// Largest size and the set of partitions attaining it.
pub fn maximizers_of(parts: impl IntoIterator<Item = Partition>) -> Result<(u64, BTreeSet<Partition>)> {
    let mut best = 0u64;
    let mut winners = BTreeSet::new();
    for p in parts {
        let size = p.size()?;
        if size > best || winners.is_empty() {
            best = size;
            winners.clear();
        }
        if size == best {
            winners.insert(p);
        }
    }
    Ok((best, winners))
}

/// Family members via the sequence enumerator.
pub fn members_by_sequences(t: u64, m: u64, family: Family) -> Result<Vec<Partition>> {
    enumerate_sequences(t, m, family)?
        .map(|s| from_sequence(&s))
        .collect()
}

/// Family members via the order-ideal enumerator on `(t, mt ± 1)`.
pub fn members_by_betasets(t: u64, m: u64, family: Family) -> Result<Vec<Partition>> {
    let b = family.b(t, m)?;
    enumerate_core_betasets(t, b, true)?
        .map(|beta| Partition::from_beta_set(&beta))
        .collect()
}

fn extremal_cell(cell: Cell, t: u64, m: u64, family: Family, out: &mut Vec<Discrepancy>) -> Result<()> {
    let report = extremal(t, m, family)?;
    let claimed: BTreeSet<Partition> = report.maximizers.iter().cloned().collect();
    compare(cell, "maximizer_count matches witnesses", report.maximizer_count, claimed.len() as u64, out);

    for (oracle, members) in [
        ("sequences", members_by_sequences(t, m, family)?),
        ("betasets", members_by_betasets(t, m, family)?),
    ] {
        let (largest, winners) = maximizers_of(members)?;
        compare(cell, &format!("largest size vs {}", oracle), largest, report.largest_size, out);
        compare(cell, &format!("maximizer count vs {}", oracle), winners.len() as u64, report.maximizer_count, out);
        compare(cell, &format!("maximizers vs {}", oracle), &winners, &claimed, out);
    }

    for w in &report.maximizers {
        compare(cell, &format!("witness {:?} size", w), report.largest_size, w.size()?, out);
        let ok = w.has_distinct_parts() && is_member(w, t, m, family)?;
        compare(cell, &format!("witness {:?} is a member", w), true, ok, out);
    }
    if family == Family::Minus {
        compare(cell, "at most two maximizers", true, report.maximizer_count <= 2, out);
    } else if m == 1 {
        compare(cell, "corollary agrees", &report, &corollary_t_t_plus_1(t)?, out);
    }
    Ok(())
}

fn bijection_cell(cell: Cell, t: u64, m: u64, family: Family, out: &mut Vec<Discrepancy>) -> Result<()> {
    let b = family.b(t, m)?;
    let beta_bound = match family {
        Family::Plus => m * t - 1,
        Family::Minus => m * t - 2,
    };
    let mut from_sequences = BTreeSet::new();
    for s in enumerate_sequences(t, m, family)? {
        let p = from_sequence(&s)?;
        compare(cell, &format!("{:?} lands in the family", s), true, is_member(&p, t, m, family)?, out);
        compare(cell, &format!("{:?} round trip", s), Ok(s.clone()), to_sequence(&p, t, m, family), out);
        if let Some(max) = p.beta_set().largest() {
            compare(cell, &format!("beta bound for {:?}", p), true, max <= beta_bound, out);
        }
        from_sequences.insert(p);
    }
    let mut from_betasets = BTreeSet::new();
    for p in members_by_betasets(t, m, family)? {
        let back = to_sequence(&p, t, m, family).and_then(|s| from_sequence(&s));
        compare(cell, &format!("{:?} round trip", p), Ok(p.clone()), back, out);
        from_betasets.insert(p);
    }
    compare(cell, &format!("same members as ({}, {})-core enumeration", t, b), &from_betasets, &from_sequences, out);
    compare(cell, "transfer-matrix count", from_sequences.len() as u64, count_distinct_core(t, m, family)?, out);
    Ok(())
}

fn classical_cell(cell: Cell, a: u64, b: u64, out: &mut Vec<Discrepancy>) -> Result<()> {
    let stats = family_stats(a, b, false, &ResourceGuard::unlimited())?;
    compare(cell, "Anderson count", anderson_count(a, b), stats.count as u128, out);
    let largest = (a * a - 1) * (b * b - 1) / 24;
    compare(cell, "Olsson-Stanton largest size", largest, stats.largest_size, out);
    let average = num_rational::Ratio::new((a - 1) * (b - 1) * (a + b + 1), 24);
    compare(cell, "Armstrong average size", average, stats.average_size, out);
    Ok(())
}

fn fibonacci_cell(cell: Cell, t: u64, out: &mut Vec<Discrepancy>) -> Result<()> {
    let (mut f1, mut f2) = (1u64, 1u64);
    for _ in 2..=t {
        (f1, f2) = (f2, f1 + f2);
    }
    // f2 is now the (t + 1)-th Fibonacci number with F(1) = F(2) = 1
    let dp = count_distinct_core(t, 1, Family::Plus)?;
    compare(cell, "Fibonacci count", f2, dp, out);
    let enumerated = enumerate_core_betasets(t, t + 1, true)?.count() as u64;
    compare(cell, "enumerated count", dp, enumerated, out);
    Ok(())
}

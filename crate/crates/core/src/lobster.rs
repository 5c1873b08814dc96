//! Greedy tertiary labels for maximal lobsters.
//!
//! The central path of a lobster is labeled `1, Δ1+3, Δ1+2` repeating, so a
//! primary label `r` lies in `R = {1, Δ1+2, Δ1+3}` and secondary labels are
//! drawn from `S = [2, Δ1+1]`. For a secondary vertex labeled `s` under a
//! primary labeled `r`, its `Δ2 - 1` tertiary leaves are labeled greedily in
//! ascending order, skipping `s`, the doubles `2s` and `s/2`, and any value
//! whose gap to `s` is already taken (the gap `|r - s|` is taken from the
//! start). `m(Δ1, Δ2, r, s)` is the largest label that greedy uses.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::constructions::ConstructionResult;
use crate::error::{param, Error, Result};
use crate::graph::{Graph, LobsterLayout};
use crate::solver::{lower_bound, BoundsResult};
use crate::verifier::Labeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairStatus {
    Valid,
    /// `s = 2r` or `r = 2s`.
    Double,
    /// `(Δ1+3, Δ1+2, Δ1+1)` through two primaries.
    Triple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LobsterContext {
    pub delta1: u64,
    pub delta2: u64,
}

impl LobsterContext {
    pub fn new(delta1: u64, delta2: u64) -> Result<Self> {
        if delta1 < 3 {
            return Err(param(format!("delta1 must be at least 3, got {delta1}")));
        }
        if delta2 < 2 {
            return Err(param(format!("delta2 must be at least 2, got {delta2}")));
        }
        Ok(LobsterContext { delta1, delta2 })
    }

    /// Primary labels `{1, Δ1+2, Δ1+3}`.
    pub fn primary_labels(&self) -> [u64; 3] {
        [1, self.delta1 + 2, self.delta1 + 3]
    }

    /// Secondary label range `[2, Δ1+1]`.
    pub fn secondary_labels(&self) -> std::ops::RangeInclusive<u64> {
        2..=self.delta1 + 1
    }
}

fn check_domain(delta1: u64, r: u64, s: u64) -> Result<()> {
    if delta1 < 3 {
        return Err(param(format!("delta1 must be at least 3, got {delta1}")));
    }
    if ![1, delta1 + 2, delta1 + 3].contains(&r) {
        return Err(Error::InvalidPair {
            r,
            s,
            reason: format!("r must be one of 1, {}, {}", delta1 + 2, delta1 + 3),
        });
    }
    if !(2..=delta1 + 1).contains(&s) {
        return Err(Error::InvalidPair {
            r,
            s,
            reason: format!("s must lie in [2, {}]", delta1 + 1),
        });
    }
    Ok(())
}

/// Whether a secondary label `s` may sit under a primary labeled `r`.
pub fn pair_status(delta1: u64, r: u64, s: u64) -> Result<PairStatus> {
    check_domain(delta1, r, s)?;
    Ok(if s == 2 * r || r == 2 * s {
        PairStatus::Double
    } else if r == delta1 + 2 && s == delta1 + 1 {
        PairStatus::Triple
    } else {
        PairStatus::Valid
    })
}

pub fn pair_valid(delta1: u64, r: u64, s: u64) -> Result<bool> {
    pair_status(delta1, r, s).map(|p| p == PairStatus::Valid)
}

fn require_valid(delta1: u64, r: u64, s: u64) -> Result<()> {
    match pair_status(delta1, r, s)? {
        PairStatus::Valid => Ok(()),
        bad => Err(Error::InvalidPair {
            r,
            s,
            reason: format!("pair forms a {bad:?}").to_lowercase(),
        }),
    }
}

/// Iterator over the greedy tertiary labels, in the order chosen.
struct Greedy {
    r: u64,
    s: u64,
    used_gaps: BTreeSet<u64>,
    next: u64,
}

impl Greedy {
    fn new(r: u64, s: u64) -> Self {
        Greedy {
            r,
            s,
            used_gaps: BTreeSet::from([r.abs_diff(s)]),
            next: 1,
        }
    }
}

impl Iterator for Greedy {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            let x = self.next;
            self.next += 1;
            let s = self.s;
            if x == s || x == self.r || x == 2 * s || 2 * x == s {
                continue;
            }
            if self.used_gaps.insert(x.abs_diff(s)) {
                return Some(x);
            }
        }
    }
}

/// The first `count` greedy tertiary labels for the pair `(r, s)`.
pub fn tertiary_labels(delta1: u64, r: u64, s: u64, count: usize) -> Result<Vec<u64>> {
    require_valid(delta1, r, s)?;
    Ok(Greedy::new(r, s).take(count).collect())
}

/// `m(Δ1, Δ2, r, s)`: the largest label used on the `Δ2 - 1` tertiaries.
pub fn m_value(delta1: u64, delta2: u64, r: u64, s: u64) -> Result<u64> {
    if delta2 < 2 {
        return Err(param(format!("delta2 must be at least 2, got {delta2}")));
    }
    Ok(*tertiary_labels(delta1, r, s, (delta2 - 1) as usize)?
        .last()
        .expect("at least one tertiary"))
}

/// Least `Δ2 >= 2` from which every unit increase of `Δ2` raises `m` by
/// exactly one.
///
/// Every label above `max(2s, r)` is accepted by the greedy, so the scan
/// stops at the first chosen label past that threshold.
pub fn stabilization_point(delta1: u64, r: u64, s: u64) -> Result<u64> {
    require_valid(delta1, r, s)?;
    let threshold = (2 * s).max(r);
    let mut seq = Vec::new();
    for x in Greedy::new(r, s) {
        seq.push(x);
        if x > threshold {
            break;
        }
    }
    // seq[j] is the label chosen when Δ2 = j + 2
    let last_gap = (1..seq.len()).rev().find(|&j| seq[j] != seq[j - 1] + 1);
    Ok(match last_gap {
        Some(j) => j as u64 + 2,
        None => 2,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MCell {
    Value(u64),
    Invalid(PairStatus),
}

impl MCell {
    pub fn value(self) -> Option<u64> {
        match self {
            MCell::Value(v) => Some(v),
            MCell::Invalid(_) => None,
        }
    }
}

/// `m(Δ1, Δ2, r, s)` over `R x S`; rows follow `R`, columns follow `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MTable {
    pub delta1: u64,
    pub delta2: u64,
    pub rows: Vec<u64>,
    pub cols: Vec<u64>,
    pub cells: Vec<Vec<MCell>>,
}

impl MTable {
    pub fn get(&self, r: u64, s: u64) -> Option<MCell> {
        let i = self.rows.iter().position(|&x| x == r)?;
        let j = self.cols.iter().position(|&x| x == s)?;
        Some(self.cells[i][j])
    }

    pub fn blank_count(&self) -> usize {
        self.cells
            .iter()
            .flatten()
            .filter(|c| matches!(c, MCell::Invalid(_)))
            .count()
    }

    /// Aligned text grid, blanks for invalid pairs.
    pub fn to_text(&self) -> String {
        let width = self
            .cells
            .iter()
            .flatten()
            .filter_map(|c| c.value())
            .chain(self.rows.iter().copied())
            .chain(self.cols.iter().copied())
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        let mut out = format!("{:>width$}", "r\\s");
        for s in &self.cols {
            let _ = write!(out, " {s:>width$}");
        }
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.cells) {
            let _ = write!(out, "{r:>width$}");
            for cell in row {
                match cell.value() {
                    Some(v) => {
                        let _ = write!(out, " {v:>width$}");
                    }
                    None => {
                        let _ = write!(out, " {:>width$}", "");
                    }
                }
            }
            out.push('\n');
        }
        out
    }

    /// CSV with a header row of `s` values; invalid cells are empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("r\\s");
        for s in &self.cols {
            let _ = write!(out, ",{s}");
        }
        out.push('\n');
        for (r, row) in self.rows.iter().zip(&self.cells) {
            let _ = write!(out, "{r}");
            for cell in row {
                out.push(',');
                if let Some(v) = cell.value() {
                    let _ = write!(out, "{v}");
                }
            }
            out.push('\n');
        }
        out
    }
}

pub fn m_table(delta1: u64, delta2: u64) -> Result<MTable> {
    let ctx = LobsterContext::new(delta1, delta2)?;
    let rows = ctx.primary_labels().to_vec();
    let cols: Vec<u64> = ctx.secondary_labels().collect();
    let mut cells = Vec::with_capacity(rows.len());
    for &r in &rows {
        let mut row = Vec::with_capacity(cols.len());
        for &s in &cols {
            row.push(match pair_status(delta1, r, s)? {
                PairStatus::Valid => MCell::Value(m_value(delta1, delta2, r, s)?),
                bad => MCell::Invalid(bad),
            });
        }
        cells.push(row);
    }
    Ok(MTable {
        delta1,
        delta2,
        rows,
        cols,
        cells,
    })
}

/// Bounds `[Δ+1, Δ1+Δ2+1]` for lobsters; with a graph the lower bound uses
/// its actual structure.
pub fn lobster_bounds(delta1: u64, delta2: u64, g: Option<&Graph>) -> Result<BoundsResult> {
    LobsterContext::new(delta1, delta2)?;
    let (lower, lower_reason) = match g {
        Some(g) => (lower_bound(g), "contains a star of maximum degree".to_string()),
        None => {
            let delta = delta1.max(delta2);
            (delta + 1, format!("contains the star K1,{delta}"))
        }
    };
    let upper = delta1 + delta2 + 1;
    Ok(BoundsResult::range_theorem(
        lower,
        upper,
        &lower_reason,
        &format!("lobster upper bound delta1 + delta2 + 1 = {upper}"),
    ))
}

/// Secondary labels for a primary labeled `r`: the least `Δ1 - 2` valid
/// values in `[2, Δ1]`.
pub fn secondary_choices(delta1: u64, r: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for s in 2..=delta1 {
        if pair_valid(delta1, r, s)? {
            out.push(s);
        }
        if out.len() as u64 == delta1 - 2 {
            return Ok(out);
        }
    }
    Err(Error::Infeasible(format!(
        "only {} valid secondary labels for r = {r}, need {}",
        out.len(),
        delta1 - 2
    )))
}

/// Labels a maximal lobster: the path as `1, Δ1+3, Δ1+2` repeating, the
/// secondaries per [`secondary_choices`], the tertiaries greedily.
pub fn label_maximal_lobster(n: usize, delta1: usize, delta2: usize) -> Result<ConstructionResult> {
    let layout = LobsterLayout::new(n, delta1, delta2)?;
    let (d1, d2) = (delta1 as u64, delta2 as u64);
    let mut labels = vec![0u64; layout.vertex_count()];
    let pattern = [1, d1 + 3, d1 + 2];
    for (i, label) in labels.iter_mut().enumerate().take(n) {
        *label = pattern[i % 3];
    }
    for (i, sec) in layout.secondaries.iter().enumerate() {
        if sec.is_empty() {
            continue;
        }
        let choices = secondary_choices(d1, labels[i])?;
        for (&v, &s) in sec.iter().zip(&choices) {
            labels[v] = s;
        }
    }
    for (sec, parent, leaves) in &layout.tertiaries {
        let tert = tertiary_labels(d1, labels[*parent], labels[*sec], leaves.len())?;
        for (&v, x) in leaves.iter().zip(tert) {
            labels[v] = x;
        }
    }
    Ok(ConstructionResult {
        labeling: Labeling::new(labels)?,
        claimed_k: d1 + d2 + 1,
        provenance: "maximal lobster: caterpillar path pattern, least valid secondaries, greedy tertiaries".into(),
        tight: false,
        repaired: false,
    })
}

//! Checking vertex labelings against the total-difference conditions.
//!
//! Edge labels are always induced as `|L(u) - L(v)|`, so a labeling is a
//! total difference labeling exactly when it is proper and contains no
//! *double* (adjacent `u`, `v` with `L(u) = 2 L(v)`) and no *triple*
//! (path `u - v - w` with `|L(u) - L(v)| = |L(v) - L(w)|`).
//! [`find_violations`] uses that criterion; [`definitional_check`] checks
//! the three total-labeling conditions on the induced edge labels directly
//! and serves as an independent oracle for it.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count for which `3^(n-1)` labels stay clear of overflow.
pub const MAX_POWER_OF_THREE_VERTICES: usize = 40;

/// Positive vertex labels, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Labeling {
    pub vertex_labels: Vec<u64>,
}

impl Labeling {
    pub fn new(vertex_labels: Vec<u64>) -> Result<Self> {
        if let Some(v) = vertex_labels.iter().position(|&x| x == 0) {
            return Err(Error::ZeroLabel(v));
        }
        Ok(Labeling { vertex_labels })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Labeling = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Labeling::new(raw.vertex_labels)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("labels serialize")
    }

    pub fn len(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_labels.is_empty()
    }

    pub fn label(&self, v: usize) -> u64 {
        self.vertex_labels[v]
    }

    pub fn max_label(&self) -> u64 {
        self.vertex_labels.iter().copied().max().unwrap_or(0)
    }

    /// Restriction to the vertices in `keep`, in that order.
    pub fn restrict(&self, keep: &[usize]) -> Labeling {
        Labeling {
            vertex_labels: keep.iter().map(|&v| self.vertex_labels[v]).collect(),
        }
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.vertex_count() {
            return Err(Error::LabelingLength {
                expected: g.vertex_count(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl From<Labeling> for Vec<u64> {
    fn from(l: Labeling) -> Self {
        l.vertex_labels
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ViolationKind {
    /// Adjacent vertices share a label.
    Improper,
    /// `vertices = [u, v]` adjacent with `L(u) = 2 L(v)`.
    Double,
    /// `vertices = [a, center, b]` with equal label gaps to the center.
    Triple,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub vertices: Vec<usize>,
    pub labels: Vec<u64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, kind: ViolationKind) -> usize {
        self.violations.iter().filter(|v| v.kind == kind).count()
    }

    pub fn to_doc(&self, k: u64, within_k: bool) -> ReportDoc {
        ReportDoc {
            ok: self.is_clean() && within_k,
            k,
            violations: self.violations.clone(),
        }
    }
}

/// JSON shape of a verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub ok: bool,
    pub k: u64,
    pub violations: Vec<Violation>,
}

/// `((u, v), |L(u) - L(v)|)` for every edge `u < v`. A zero label marks an
/// improper edge.
pub fn induced_edge_labels(g: &Graph, labeling: &Labeling) -> Result<Vec<((usize, usize), u64)>> {
    labeling.check_len(g)?;
    Ok(g.edges()
        .map(|(u, v)| ((u, v), labeling.label(u).abs_diff(labeling.label(v))))
        .collect())
}

fn is_double(big: u64, small: u64) -> bool {
    small.checked_mul(2) == Some(big)
}

/// Every improper edge, double and triple in `labeling`.
pub fn find_violations(g: &Graph, labeling: &Labeling) -> Result<ViolationReport> {
    labeling.check_len(g)?;
    let l = &labeling.vertex_labels;
    let mut violations = Vec::new();
    for (u, v) in g.edges() {
        let (a, b) = (l[u], l[v]);
        if a == b {
            violations.push(Violation {
                kind: ViolationKind::Improper,
                vertices: vec![u, v],
                labels: vec![a, b],
            });
        } else if is_double(a, b) || is_double(b, a) {
            let (big, small) = if a > b { (u, v) } else { (v, u) };
            violations.push(Violation {
                kind: ViolationKind::Double,
                vertices: vec![big, small],
                labels: vec![l[big], l[small]],
            });
        }
    }
    let mut seen_triples = BTreeSet::new();
    for center in 0..g.vertex_count() {
        let nb = g.neighbors(center);
        let c = l[center];
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if l[a].abs_diff(c) != l[b].abs_diff(c) {
                    continue;
                }
                let mut key = [a, center, b];
                key.sort_unstable();
                if seen_triples.insert(key) {
                    violations.push(Violation {
                        kind: ViolationKind::Triple,
                        vertices: vec![a, center, b],
                        labels: vec![l[a], c, l[b]],
                    });
                }
            }
        }
    }
    Ok(ViolationReport { violations })
}

/// True when `labeling` is a total difference labeling with every vertex
/// and edge label at most `k`. A labeling of the wrong length is rejected.
pub fn is_k_tdl(g: &Graph, labeling: &Labeling, k: u64) -> bool {
    labeling.max_label() <= k
        && labeling.vertex_labels.iter().all(|&x| x >= 1)
        && find_violations(g, labeling).is_ok_and(|r| r.is_clean())
}

/// Checks the total-labeling conditions on the induced edge labels
/// directly: adjacent vertices differ, incident edges differ, and no edge
/// shares a label with an endpoint.
pub fn definitional_check(g: &Graph, labeling: &Labeling) -> bool {
    if labeling.len() != g.vertex_count() || labeling.vertex_labels.contains(&0) {
        return false;
    }
    let l = &labeling.vertex_labels;
    let mut incident = Vec::new();
    for v in 0..g.vertex_count() {
        incident.clear();
        for &u in g.neighbors(v) {
            if l[u] == l[v] {
                return false;
            }
            let edge = l[u].abs_diff(l[v]);
            if edge == l[u] || edge == l[v] {
                return false;
            }
            incident.push(edge);
        }
        incident.sort_unstable();
        if incident.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
    }
    true
}

/// Labels vertex `i` with `3^i`; always a total difference labeling.
pub fn power_of_three_labeling(n: usize) -> Result<Labeling> {
    if n > MAX_POWER_OF_THREE_VERTICES {
        return Err(Error::Overflow(format!(
            "3^{} exceeds the supported label range (n <= {MAX_POWER_OF_THREE_VERTICES})",
            n - 1
        )));
    }
    Labeling::new((0..n as u32).map(|i| 3u64.pow(i)).collect())
}

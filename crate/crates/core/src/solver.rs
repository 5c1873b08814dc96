//! Exact total difference chromatic numbers by backtracking search.
//!
//! [`has_k_tdl`] decides whether a graph has a labeling with labels in
//! `1..=k`. Vertices are labeled in a fixed order with ascending values,
//! and a partial labeling is pruned as soon as the newly labeled vertex
//! creates an improper edge, a double or a triple with already labeled
//! vertices. Only the new vertex, its neighbors and their neighbors are
//! inspected. Dead ends use conflict-directed backjumping, which skips
//! only subtrees that contain no solution, so the first labeling found is
//! still the lexicographically least one under the vertex order.
//!
//! [`chi_td`] iterates `k` upward from [`lower_bound`].

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::graph::Graph;
use crate::verifier::{is_k_tdl, Labeling, MAX_POWER_OF_THREE_VERTICES};

/// Order in which the search assigns vertices.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexOrder {
    /// BFS from a maximum-degree vertex; neighbors are queued by
    /// decreasing degree, ties by index.
    #[default]
    DegreeBfs,
    InputOrder,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest `k` that [`chi_td`] will try.
    pub max_k: Option<u64>,
    /// Search nodes (value trials) allowed per decision run.
    pub node_limit: Option<u64>,
    /// Wall-clock budget for a whole [`chi_td`] or [`has_k_tdl`] call.
    pub time_limit: Option<Duration>,
    pub order: VertexOrder,
}

impl SearchOptions {
    pub fn validate(&self) -> Result<()> {
        if self.max_k == Some(0) || self.node_limit == Some(0) {
            return Err(param("search limits must be positive"));
        }
        if self.time_limit == Some(Duration::ZERO) {
            return Err(param("time limit must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Labeling),
    /// The search space was exhausted: no labeling with labels `<= k`.
    Exhausted,
    /// Budget ran out before a decision; says nothing about existence.
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn labeling(&self) -> Option<&Labeling> {
        match self {
            SearchOutcome::Found(l) => Some(l),
            _ => None,
        }
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, SearchOutcome::Exhausted)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "name")]
pub enum Provenance {
    Theorem(String),
    Search,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsResult {
    pub lower: u64,
    pub upper: u64,
    pub exact: Option<u64>,
    pub witness: Option<Labeling>,
    pub provenance: Provenance,
    pub lower_reason: String,
    pub upper_reason: String,
}

impl BoundsResult {
    pub(crate) fn exact_theorem(value: u64, theorem: &str) -> Self {
        BoundsResult {
            lower: value,
            upper: value,
            exact: Some(value),
            witness: None,
            provenance: Provenance::Theorem(theorem.to_string()),
            lower_reason: theorem.to_string(),
            upper_reason: theorem.to_string(),
        }
    }

    pub(crate) fn range_theorem(lower: u64, upper: u64, lower_reason: &str, upper_reason: &str) -> Self {
        BoundsResult {
            lower,
            upper,
            exact: None,
            witness: None,
            provenance: Provenance::Theorem(upper_reason.to_string()),
            lower_reason: lower_reason.to_string(),
            upper_reason: upper_reason.to_string(),
        }
    }
}

/// Vertex order used by the search.
pub fn vertex_order(g: &Graph, order: VertexOrder) -> Vec<usize> {
    let n = g.vertex_count();
    if order == VertexOrder::InputOrder {
        return (0..n).collect();
    }
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    while out.len() < n {
        let start = (0..n)
            .filter(|&v| !seen[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        seen[start] = true;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            out.push(u);
            let mut nb: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !seen[w]).collect();
            nb.sort_by_key(|&w| (std::cmp::Reverse(g.degree(w)), w));
            for w in nb {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    out
}

#[derive(Clone)]
struct PosSet(Vec<u64>);

impl PosSet {
    fn new(n: usize) -> Self {
        PosSet(vec![0; n.div_ceil(64).max(1)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn clear(&mut self) {
        self.0.iter_mut().for_each(|w| *w = 0);
    }
    fn max(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
    }
    fn union_with(&mut self, other: &PosSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

/// Partial labeling along a fixed vertex order.
struct Partial<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    pos_of: Vec<usize>,
    /// 0 = unlabeled
    labels: Vec<u64>,
}

impl<'a> Partial<'a> {
    fn new(g: &'a Graph, order: Vec<usize>) -> Self {
        let mut pos_of = vec![0; g.vertex_count()];
        for (p, &v) in order.iter().enumerate() {
            pos_of[v] = p;
        }
        Partial {
            g,
            order,
            pos_of,
            labels: vec![0; g.vertex_count()],
        }
    }

    /// Checks label `x` on `v` against vertices placed before it. On
    /// failure returns the (one or two) earlier vertices involved.
    fn conflict(&self, v: usize, x: u64) -> Option<(usize, usize)> {
        let p = self.pos_of[v];
        let placed = |u: usize| self.pos_of[u] < p;
        let nb = self.g.neighbors(v);
        for &u in nb.iter().filter(|&&u| placed(u)) {
            let a = self.labels[u];
            if a == x || x.checked_mul(2) == Some(a) || a.checked_mul(2) == Some(x) {
                return Some((u, u));
            }
            let d = a.abs_diff(x);
            // triples centered at u
            for &w in self.g.neighbors(u) {
                if w != v && placed(w) && self.labels[w].abs_diff(a) == d {
                    return Some((u, w));
                }
            }
        }
        // triples centered at v
        for (i, &u) in nb.iter().enumerate() {
            if !placed(u) {
                continue;
            }
            let d = self.labels[u].abs_diff(x);
            for &w in &nb[..i] {
                if placed(w) && self.labels[w].abs_diff(x) == d {
                    return Some((w, u));
                }
            }
        }
        None
    }

    fn into_labeling(self) -> Labeling {
        Labeling {
            vertex_labels: self.labels,
        }
    }
}

struct Budget {
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    nodes: u64,
}

impl Budget {
    fn new(opts: &SearchOptions, deadline: Option<Instant>) -> Self {
        Budget {
            node_limit: opts.node_limit,
            deadline,
            nodes: 0,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.node_limit.is_some_and(|l| self.nodes > l) {
            return false;
        }
        !(self.nodes % 4096 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d))
    }
}

fn search(g: &Graph, k: u64, order: VertexOrder, budget: &mut Budget) -> SearchOutcome {
    let n = g.vertex_count();
    if n == 0 {
        return SearchOutcome::Found(Labeling { vertex_labels: vec![] });
    }
    let mut st = Partial::new(g, vertex_order(g, order));
    let mut next_value = vec![1u64; n];
    let mut conflicts = vec![PosSet::new(n); n];
    let mut p = 0;
    loop {
        if p == n {
            return SearchOutcome::Found(st.into_labeling());
        }
        let v = st.order[p];
        let mut placed = false;
        while next_value[p] <= k {
            if !budget.tick() {
                return SearchOutcome::BudgetExceeded;
            }
            let x = next_value[p];
            next_value[p] += 1;
            match st.conflict(v, x) {
                None => {
                    st.labels[v] = x;
                    placed = true;
                    break;
                }
                Some((a, b)) => {
                    conflicts[p].insert(st.pos_of[a]);
                    conflicts[p].insert(st.pos_of[b]);
                }
            }
        }
        if placed {
            p += 1;
            if p < n {
                next_value[p] = 1;
                conflicts[p].clear();
            }
            continue;
        }
        // dead end: jump to the latest vertex implicated in every failure
        let Some(h) = conflicts[p].max() else {
            return SearchOutcome::Exhausted;
        };
        let mut carried = std::mem::replace(&mut conflicts[p], PosSet::new(n));
        carried.remove(h);
        conflicts[h].union_with(&carried);
        for q in h..p {
            st.labels[st.order[q]] = 0;
        }
        p = h;
    }
}

/// Decides whether `g` has a total difference labeling with labels in
/// `1..=k`, returning the lexicographically least one under the search
/// order when it exists.
pub fn has_k_tdl(g: &Graph, k: u64, opts: &SearchOptions) -> SearchOutcome {
    let deadline = opts.time_limit.map(|t| Instant::now() + t);
    let mut budget = Budget::new(opts, deadline);
    let out = search(g, k, opts.order, &mut budget);
    debug_assert!(out.labeling().is_none_or(|l| is_k_tdl(g, l, k)));
    out
}

/// Labels vertices in search order, each with the smallest label that
/// creates no violation with those already labeled and differs from every
/// labeled vertex at distance 2. The second rule keeps two labeled
/// neighbors of a later vertex distinct, so some label always fits.
pub fn greedy_labeling(g: &Graph, order: VertexOrder) -> Labeling {
    let mut st = Partial::new(g, vertex_order(g, order));
    let mut near = Vec::new();
    for p in 0..g.vertex_count() {
        let v = st.order[p];
        near.clear();
        for &u in g.neighbors(v) {
            near.extend(g.neighbors(u).iter().map(|&w| st.labels[w]).filter(|&l| l != 0));
        }
        let x = (1u64..)
            .find(|&x| !near.contains(&x) && st.conflict(v, x).is_none())
            .expect("some label always fits");
        st.labels[v] = x;
    }
    st.into_labeling()
}

/// `max(Δ + 1, n when diam <= 2, 1)`.
pub fn lower_bound(g: &Graph) -> u64 {
    lower_bound_with_reason(g).0
}

fn lower_bound_with_reason(g: &Graph) -> (u64, String) {
    let n = g.vertex_count() as u64;
    let delta = g.max_degree() as u64;
    let mut best = (1, "labels are positive".to_string());
    if delta >= 1 {
        best = (
            delta + 1,
            format!("contains the star K1,{delta}, whose value is at least {}", delta + 1),
        );
    }
    if n > best.0 && g.diameter().is_ok_and(|d| d.at_most(2)) {
        best = (n, "diameter at most 2 forces distinct vertex labels".into());
    }
    best
}

/// Theorem-based bounds for an arbitrary graph.
pub fn bounds(g: &Graph) -> Result<BoundsResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(param("bounds of the empty graph are undefined"));
    }
    let (lower, lower_reason) = lower_bound_with_reason(g);
    let delta = g.max_degree() as u64;
    let (upper, upper_reason) = if g.is_forest() && delta >= 1 {
        if delta <= 2 && n >= 2 {
            // disjoint paths
            let longest = longest_component(g);
            match longest {
                2 | 3 => (3, "paths on 2 or 3 vertices have value 3".to_string()),
                _ => (4, "paths on at least 4 vertices have value 4".to_string()),
            }
        } else {
            (2 * delta + 1, format!("trees satisfy value <= 2*Delta + 1 = {}", 2 * delta + 1))
        }
    } else if n <= MAX_POWER_OF_THREE_VERTICES + 1 {
        (
            3u64.pow(n as u32 - 1),
            format!("powers of three give value <= 3^(n-1) = 3^{}", n - 1),
        )
    } else {
        let greedy = greedy_labeling(g, VertexOrder::DegreeBfs).max_label();
        (greedy, "greedy labeling".to_string())
    };
    let lower = lower.min(upper);
    Ok(BoundsResult {
        lower,
        upper,
        exact: (lower == upper).then_some(lower),
        witness: None,
        provenance: Provenance::Theorem(upper_reason.clone()),
        lower_reason,
        upper_reason,
    })
}

fn longest_component(g: &Graph) -> usize {
    (0..g.vertex_count())
        .map(|v| g.distances_from(v).iter().filter(|d| d.is_some()).count())
        .max()
        .unwrap_or(0)
}

/// Computes `chi_td(g)` exactly when the budgets allow. On budget
/// exhaustion or when `max_k` is reached the result carries the best known
/// bounds and no exact value.
pub fn chi_td(g: &Graph, opts: &SearchOptions) -> Result<BoundsResult> {
    if g.vertex_count() == 0 {
        return Err(param("chi_td of the empty graph is undefined"));
    }
    opts.validate()?;
    let deadline = opts.time_limit.map(|t| Instant::now() + t);
    let (lower, lower_reason) = lower_bound_with_reason(g);
    let greedy = greedy_labeling(g, opts.order);
    let upper = greedy.max_label();
    let upper_reason = "greedy labeling".to_string();
    let unresolved = |lower: u64, lower_reason: String| BoundsResult {
        lower,
        upper,
        exact: None,
        witness: None,
        provenance: Provenance::Search,
        lower_reason,
        upper_reason: upper_reason.clone(),
    };
    for k in lower..=upper {
        if opts.max_k.is_some_and(|m| k > m) {
            return Ok(unresolved(k, format!("search found no labeling with k <= {}", k - 1)));
        }
        let mut budget = Budget::new(opts, deadline);
        match search(g, k, opts.order, &mut budget) {
            SearchOutcome::Found(witness) => {
                return Ok(BoundsResult {
                    lower: k,
                    upper: k,
                    exact: Some(k),
                    witness: Some(witness),
                    provenance: Provenance::Search,
                    lower_reason: if k == lower {
                        lower_reason
                    } else {
                        format!("search found no labeling with k <= {}", k - 1)
                    },
                    upper_reason: "search witness".into(),
                });
            }
            SearchOutcome::Exhausted => continue,
            SearchOutcome::BudgetExceeded if k == upper => {
                // everything below was refuted, the greedy labeling is optimal
                return Ok(BoundsResult {
                    lower: k,
                    upper: k,
                    exact: Some(k),
                    witness: Some(greedy),
                    provenance: Provenance::Search,
                    lower_reason: format!("search found no labeling with k <= {}", k - 1),
                    upper_reason,
                });
            }
            SearchOutcome::BudgetExceeded => {
                let reason = if k == lower {
                    lower_reason
                } else {
                    format!("search found no labeling with k <= {}", k - 1)
                };
                return Ok(unresolved(k, reason));
            }
        }
    }
    unreachable!("the greedy labeling is a witness at k = upper")
}

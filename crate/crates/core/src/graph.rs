//! Simple undirected graphs and generators for the labeled graph families.
//!
//! Vertex numbering is fixed per family so that constructions can address
//! vertices by position:
//!
//! | family            | numbering                                                        |
//! |-------------------|------------------------------------------------------------------|
//! | `Path(n)`         | `0..n` left to right                                             |
//! | `Cycle(n)`        | `0..n` in cyclic order                                           |
//! | `Star(m)`         | hub `0`, leaves `1..=m`                                          |
//! | `Wheel(n)`        | hub `0`, rim `1..n` cyclic                                       |
//! | `Gear(n)`         | hub `0`, rim `1..=2n-2` cyclic; odd rim vertices touch the hub   |
//! | `Helm(n)`         | wheel numbering, then the leaf of rim vertex `i` is `n - 1 + i`  |
//! | `Caterpillar(d)`  | spine `0..p`, then leaves grouped by spine vertex                |
//! | `MaximalLobster`  | primaries, then secondaries, then tertiaries (parent order)      |
//! | `UniformTree`     | breadth-first from the root `0`                                  |

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};

/// Vertex count above which generators refuse to allocate.
pub const MAX_GENERATED_VERTICES: usize = 5_000_000;

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeats and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(param(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(param(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(param(format!("duplicate edge ({u}, {v})"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(())
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// True when the graph has no cycles (every component is a tree).
    pub fn is_forest(&self) -> bool {
        self.edge_count + self.component_count() == self.vertex_count()
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count()];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// Exact diameter by all-pairs BFS.
    pub fn diameter(&self) -> Result<Diameter> {
        if self.vertex_count() == 0 {
            return Err(param("diameter of the empty graph is undefined"));
        }
        let mut best = 0;
        for v in 0..self.vertex_count() {
            for d in self.distances_from(v) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(Diameter::Infinite),
                }
            }
        }
        Ok(Diameter::Finite(best))
    }

    /// Checks that `other`, with its vertex `i` mapped to `map[i]`, is a
    /// subgraph of `self`.
    pub fn contains_mapped(&self, other: &Graph, map: &[usize]) -> bool {
        map.len() == other.vertex_count()
            && map.iter().all(|&m| m < self.vertex_count())
            && other.edges().all(|(u, v)| self.has_edge(map[u], map[v]))
    }

    /// Subgraph induced by `keep` (renumbered in the given order).
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("induced edges are simple");
                }
            }
        }
        g
    }

    pub fn is_well_formed(&self) -> bool {
        let n = self.vertex_count();
        let mut half_edges = 0;
        for (u, nb) in self.adj.iter().enumerate() {
            if nb.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in nb {
                if v >= n || v == u || self.adj[v].binary_search(&u).is_err() {
                    return false;
                }
            }
            half_edges += nb.len();
        }
        half_edges == 2 * self.edge_count
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v`
    /// with 0-based vertex indices.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut g = Graph::empty(n);
        let mut seen = 0;
        for (line, text) in lines {
            let (u, v) = parse_pair(line, text)?;
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line,
                message: match e {
                    Error::Parameter(m) => m,
                    other => other.to_string(),
                },
            })?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::Parse {
                line: hline,
                message: format!("header declares {m} edges but {seen} were given"),
            });
        }
        Ok(g)
    }

    /// Canonical edge-list text: header, then edges in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut parts = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = parts.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if parts.next().is_some() {
        return Err(Error::Parse {
            line,
            message: "expected exactly two fields".into(),
        });
    }
    Ok((a, b))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_most(self, d: usize) -> bool {
        matches!(self, Diameter::Finite(x) if x <= d)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

/// Parameterized descriptor of a graph family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Wheel(usize),
    Gear(usize),
    Helm(usize),
    /// Spine degree sequence `d_1..d_p`; spine vertex `i` gets
    /// `d_i - (spine neighbors)` pendant leaves.
    Caterpillar(Vec<usize>),
    /// `n` primary vertices on a path (endpoints included), every interior
    /// primary of degree `delta1`, every secondary of degree `delta2`.
    MaximalLobster {
        n: usize,
        delta1: usize,
        delta2: usize,
    },
    UniformTree {
        delta: usize,
        height: usize,
    },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Star(m) => write!(f, "K1,{m}"),
            FamilySpec::Wheel(n) => write!(f, "W{n}"),
            FamilySpec::Gear(n) => write!(f, "G{n}"),
            FamilySpec::Helm(n) => write!(f, "H{n}"),
            FamilySpec::Caterpillar(d) => {
                let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                write!(f, "Cat({})", parts.join(","))
            }
            FamilySpec::MaximalLobster { n, delta1, delta2 } => {
                write!(f, "Lobster(n={n},d1={delta1},d2={delta2})")
            }
            FamilySpec::UniformTree { delta, height } => write!(f, "T({delta},{height})"),
        }
    }
}

/// Role of a vertex inside its family graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    Hub,
    Cycle,
    Spine,
    Secondary,
    Tertiary,
    Leaf,
    Root,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexRoleMap {
    roles: Vec<Role>,
}

impl VertexRoleMap {
    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn vertices_with(&self, role: Role) -> impl Iterator<Item = usize> + '_ {
        self.roles
            .iter()
            .enumerate()
            .filter(move |(_, &r)| r == role)
            .map(|(v, _)| v)
    }
}

/// Spine/leaf layout of a caterpillar given by its spine degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaterpillarLayout {
    pub spine_degrees: Vec<usize>,
    /// `leaves[i]` lists the pendant leaves of spine vertex `i`.
    pub leaves: Vec<Vec<usize>>,
}

impl CaterpillarLayout {
    pub fn new(spine_degrees: &[usize]) -> Result<Self> {
        let p = spine_degrees.len();
        if p == 0 {
            return Err(param("caterpillar spine must be non-empty"));
        }
        let mut next = p;
        let mut leaves = Vec::with_capacity(p);
        for (i, &d) in spine_degrees.iter().enumerate() {
            let spine_nb = usize::from(i > 0) + usize::from(i + 1 < p);
            if p > 2 && i > 0 && i + 1 < p && d < 2 {
                return Err(param(format!(
                    "interior spine vertex {} has degree {d}, must be at least 2",
                    i + 1
                )));
            }
            if d < spine_nb {
                return Err(param(format!(
                    "spine vertex {} has degree {d} but {spine_nb} spine neighbors",
                    i + 1
                )));
            }
            let count = d - spine_nb;
            leaves.push((next..next + count).collect());
            next += count;
        }
        if next > MAX_GENERATED_VERTICES {
            return Err(param("caterpillar too large"));
        }
        Ok(CaterpillarLayout {
            spine_degrees: spine_degrees.to_vec(),
            leaves,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.spine_degrees.len() + self.leaves.iter().map(Vec::len).sum::<usize>()
    }

    /// A longest central path: the spine, extended at each end by one leaf
    /// when that end has leaves, so both path endpoints have degree 1.
    pub fn central_path(&self) -> Vec<usize> {
        let p = self.spine_degrees.len();
        let mut path = Vec::with_capacity(p + 2);
        if let Some(&l) = self.leaves[0].first() {
            path.push(l);
        }
        path.extend(0..p);
        if p > 1 {
            if let Some(&l) = self.leaves[p - 1].first() {
                path.push(l);
            }
        } else if let Some(&l) = self.leaves[0].get(1) {
            path.push(l);
        }
        path
    }
}

/// Primary/secondary/tertiary layout of a maximal lobster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LobsterLayout {
    pub n: usize,
    pub delta1: usize,
    pub delta2: usize,
    /// `secondaries[i]` lists the secondary neighbors of primary `i`.
    pub secondaries: Vec<Vec<usize>>,
    /// `(secondary, parent primary, tertiary leaves)` in numbering order.
    pub tertiaries: Vec<(usize, usize, Vec<usize>)>,
}

impl LobsterLayout {
    pub fn new(n: usize, delta1: usize, delta2: usize) -> Result<Self> {
        if n < 2 {
            return Err(param(format!("lobster needs n >= 2 primaries, got {n}")));
        }
        if delta1 < 3 {
            return Err(param(format!("lobster needs delta1 >= 3, got {delta1}")));
        }
        if delta2 < 2 {
            return Err(param(format!(
                "lobster needs delta2 >= 2 (otherwise it is a caterpillar), got {delta2}"
            )));
        }
        let interior = n.saturating_sub(2);
        let total = n
            .checked_add(
                interior
                    .checked_mul(delta1 - 2)
                    .and_then(|s| s.checked_mul(delta2))
                    .ok_or_else(|| param("lobster too large"))?,
            )
            .filter(|&t| t <= MAX_GENERATED_VERTICES)
            .ok_or_else(|| param("lobster too large"))?;
        let mut next = n;
        let mut secondaries = vec![Vec::new(); n];
        for sec in secondaries.iter_mut().take(n - 1).skip(1) {
            sec.extend(next..next + delta1 - 2);
            next += delta1 - 2;
        }
        let mut tertiaries = Vec::new();
        for (i, sec) in secondaries.iter().enumerate() {
            for &s in sec {
                tertiaries.push((s, i, (next..next + delta2 - 1).collect()));
                next += delta2 - 1;
            }
        }
        debug_assert_eq!(next, total);
        Ok(LobsterLayout {
            n,
            delta1,
            delta2,
            secondaries,
            tertiaries,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.tertiaries
            .last()
            .and_then(|(_, _, t)| t.last().map(|&v| v + 1))
            .unwrap_or(self.n + self.secondaries.iter().map(Vec::len).sum::<usize>())
    }
}

/// Vertex count of the uniform full `delta`-ary tree of height `height`.
pub fn uniform_tree_size(delta: usize, height: usize) -> Option<usize> {
    let mut total: usize = 1;
    let mut level: usize = 1;
    for depth in 0..height {
        let branching = if depth == 0 { delta } else { delta - 1 };
        level = level.checked_mul(branching)?;
        total = total.checked_add(level)?;
    }
    Some(total)
}

impl FamilySpec {
    /// Checks the family's parameter domain.
    pub fn validate(&self) -> Result<()> {
        let need = |ok: bool, msg: String| if ok { Ok(()) } else { Err(param(msg)) };
        match *self {
            FamilySpec::Path(n) => need(n >= 1, format!("Path needs n >= 1, got {n}")),
            FamilySpec::Cycle(n) => need(n >= 3, format!("Cycle needs n >= 3, got {n}")),
            FamilySpec::Star(m) => need(m >= 1, format!("Star needs m >= 1, got {m}")),
            FamilySpec::Wheel(n) => need(n >= 4, format!("Wheel needs n >= 4, got {n}")),
            FamilySpec::Gear(n) => need(n >= 4, format!("Gear needs n >= 4, got {n}")),
            FamilySpec::Helm(n) => need(n >= 4, format!("Helm needs n >= 4, got {n}")),
            FamilySpec::Caterpillar(ref d) => CaterpillarLayout::new(d).map(|_| ()),
            FamilySpec::MaximalLobster { n, delta1, delta2 } => {
                LobsterLayout::new(n, delta1, delta2).map(|_| ())
            }
            FamilySpec::UniformTree { delta, height } => {
                need(delta >= 2, format!("UniformTree needs delta >= 2, got {delta}"))?;
                need(height >= 1, format!("UniformTree needs h >= 1, got {height}"))?;
                need(
                    uniform_tree_size(delta, height).is_some_and(|s| s <= MAX_GENERATED_VERTICES),
                    format!("UniformTree({delta},{height}) too large"),
                )
            }
        }
    }

    /// Builds the family graph with its canonical numbering.
    pub fn build(&self) -> Result<(Graph, VertexRoleMap)> {
        self.validate()?;
        let (g, roles) = match *self {
            FamilySpec::Path(n) => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                (Graph::from_edges(n, &edges)?, vec![Role::Spine; n])
            }
            FamilySpec::Cycle(n) => {
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                (Graph::from_edges(n, &edges)?, vec![Role::Cycle; n])
            }
            FamilySpec::Star(m) => {
                let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
                let mut roles = vec![Role::Leaf; m + 1];
                roles[0] = Role::Hub;
                (Graph::from_edges(m + 1, &edges)?, roles)
            }
            FamilySpec::Wheel(n) => {
                let rim = n - 1;
                let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
                edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
                let mut roles = vec![Role::Cycle; n];
                roles[0] = Role::Hub;
                (Graph::from_edges(n, &edges)?, roles)
            }
            FamilySpec::Gear(n) => {
                let rim = 2 * (n - 1);
                let mut edges: Vec<_> = (1..=rim).step_by(2).map(|i| (0, i)).collect();
                edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
                let mut roles = vec![Role::Cycle; rim + 1];
                roles[0] = Role::Hub;
                (Graph::from_edges(rim + 1, &edges)?, roles)
            }
            FamilySpec::Helm(n) => {
                let rim = n - 1;
                let mut edges: Vec<_> = (1..=rim).map(|i| (0, i)).collect();
                edges.extend((1..=rim).map(|i| (i, i % rim + 1)));
                edges.extend((1..=rim).map(|i| (i, rim + i)));
                let mut roles = vec![Role::Cycle; 2 * rim + 1];
                roles[0] = Role::Hub;
                for r in roles.iter_mut().skip(rim + 1) {
                    *r = Role::Leaf;
                }
                (Graph::from_edges(2 * rim + 1, &edges)?, roles)
            }
            FamilySpec::Caterpillar(ref d) => {
                let layout = CaterpillarLayout::new(d)?;
                let p = d.len();
                let mut edges: Vec<_> = (1..p).map(|i| (i - 1, i)).collect();
                for (i, leaves) in layout.leaves.iter().enumerate() {
                    edges.extend(leaves.iter().map(|&l| (i, l)));
                }
                let n = layout.vertex_count();
                let mut roles = vec![Role::Leaf; n];
                for r in roles.iter_mut().take(p) {
                    *r = Role::Spine;
                }
                (Graph::from_edges(n, &edges)?, roles)
            }
            FamilySpec::MaximalLobster { n, delta1, delta2 } => {
                let layout = LobsterLayout::new(n, delta1, delta2)?;
                let total = layout.vertex_count();
                let mut g = Graph::empty(total);
                let mut roles = vec![Role::Spine; total];
                for i in 1..n {
                    g.add_edge(i - 1, i)?;
                }
                for (i, sec) in layout.secondaries.iter().enumerate() {
                    for &s in sec {
                        g.add_edge(i, s)?;
                        roles[s] = Role::Secondary;
                    }
                }
                for (s, _, ts) in &layout.tertiaries {
                    for &t in ts {
                        g.add_edge(*s, t)?;
                        roles[t] = Role::Tertiary;
                    }
                }
                (g, roles)
            }
            FamilySpec::UniformTree { delta, height } => {
                let total = uniform_tree_size(delta, height).unwrap();
                let mut g = Graph::empty(total);
                let mut roles = vec![Role::Leaf; total];
                roles[0] = Role::Root;
                let mut frontier = vec![0usize];
                let mut next = 1;
                for depth in 0..height {
                    let branching = if depth == 0 { delta } else { delta - 1 };
                    let mut new_frontier = Vec::with_capacity(frontier.len() * branching);
                    for &parent in &frontier {
                        if depth > 0 {
                            roles[parent] = Role::Internal;
                        }
                        for _ in 0..branching {
                            g.add_edge(parent, next)?;
                            new_frontier.push(next);
                            next += 1;
                        }
                    }
                    frontier = new_frontier;
                }
                (g, roles)
            }
        };
        debug_assert!(g.is_well_formed());
        Ok((g, VertexRoleMap { roles }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn built(spec: FamilySpec) -> Graph {
        spec.build().unwrap().0
    }

    #[test]
    fn wheel4_is_k4() {
        let g = built(FamilySpec::Wheel(4));
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 6));
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), u != v);
            }
        }
    }

    #[test]
    fn path1_is_a_single_vertex() {
        let g = built(FamilySpec::Path(1));
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn gear5_counts() {
        let g = built(FamilySpec::Gear(5));
        // 2(n-1) rim vertices + hub; (n-1) spokes + 2(n-1) rim edges
        assert_eq!(g.vertex_count(), 2 * 4 + 1);
        assert_eq!(g.edge_count(), 4 + 2 * 4);
        assert_eq!(g.degree(0), 4);
        let rim: Vec<usize> = (1..=8).map(|v| g.degree(v)).collect();
        assert_eq!(rim, vec![3, 2, 3, 2, 3, 2, 3, 2]);
    }

    #[test]
    fn degrees() {
        assert_eq!(built(FamilySpec::Star(6)).degree(0), 6);
        assert_eq!(built(FamilySpec::Helm(7)).degree(0), 6);
        assert_eq!(built(FamilySpec::Path(4)).degree(1), 2);
        assert_eq!(built(FamilySpec::Helm(7)).max_degree(), 6);
    }

    #[test]
    fn diameters() {
        let d = |s| built(s).diameter().unwrap();
        assert_eq!(d(FamilySpec::Star(5)), Diameter::Finite(2));
        assert_eq!(d(FamilySpec::Cycle(6)), Diameter::Finite(3));
        assert_eq!(d(FamilySpec::Wheel(9)), Diameter::Finite(2));
        assert_eq!(d(FamilySpec::Helm(7)), Diameter::Finite(4));
        assert_eq!(Graph::empty(2).diameter().unwrap(), Diameter::Infinite);
        assert!(Graph::empty(0).diameter().is_err());
    }

    #[test]
    fn parameter_errors_name_the_bound() {
        let err = FamilySpec::Cycle(2).build().unwrap_err();
        assert!(err.to_string().contains("n >= 3"), "{err}");
        assert!(FamilySpec::Wheel(3).build().is_err());
        assert!(FamilySpec::Path(0).build().is_err());
        assert!(FamilySpec::Caterpillar(vec![1, 1, 1]).build().is_err());
        assert!(FamilySpec::Caterpillar(vec![]).build().is_err());
        assert!(FamilySpec::MaximalLobster { n: 5, delta1: 4, delta2: 1 }.build().is_err());
        assert!(FamilySpec::UniformTree { delta: 1, height: 2 }.build().is_err());
    }

    #[test]
    fn parse_examples() {
        let k3 = Graph::parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(k3, built(FamilySpec::Cycle(3)));
        let e = Graph::parse_edge_list("2 1\n0 1\n").unwrap();
        assert_eq!(e.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let c4 = built(FamilySpec::Cycle(4));
        assert_eq!(Graph::parse_edge_list(&c4.to_edge_list()).unwrap(), c4);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("3 2\n0 1\n1 0\n", 3),
            ("3 1\n1 1\n", 2),
            ("3 1\n0 3\n", 2),
            ("3 1\n0 x\n", 2),
            ("3 2\n0 1\n", 1),
            ("", 1),
        ];
        for (text, line) in cases {
            match Graph::parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn caterpillar_layout() {
        let layout = CaterpillarLayout::new(&[1, 3, 3, 3, 1]).unwrap();
        assert_eq!(layout.vertex_count(), 8);
        assert_eq!(layout.central_path(), vec![0, 1, 2, 3, 4]);
        let layout = CaterpillarLayout::new(&[3, 2, 4]).unwrap();
        // leaves: v1 gets 2, v3 gets 3
        assert_eq!(layout.leaves, vec![vec![3, 4], vec![], vec![5, 6, 7]]);
        assert_eq!(layout.central_path(), vec![3, 0, 1, 2, 5]);
        let star = CaterpillarLayout::new(&[4]).unwrap();
        assert_eq!(star.central_path(), vec![1, 0, 2]);
    }

    #[test]
    fn lobster_layout() {
        let (g, roles) = FamilySpec::MaximalLobster { n: 4, delta1: 4, delta2: 3 }
            .build()
            .unwrap();
        // 4 primaries, 2 interior * 2 secondaries, each with 2 tertiaries
        assert_eq!(g.vertex_count(), 4 + 4 + 8);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.degree(2), 4);
        assert_eq!(g.degree(3), 1);
        for s in roles.vertices_with(Role::Secondary) {
            assert_eq!(g.degree(s), 3);
        }
        assert!(g.is_forest() && g.is_connected());
    }

    #[test]
    fn uniform_tree_counts() {
        for delta in 2..6 {
            for h in 1..5 {
                let g = built(FamilySpec::UniformTree { delta, height: h });
                let expected = if delta == 2 {
                    2 * h + 1
                } else {
                    1 + delta * ((delta - 1).pow(h as u32) - 1) / (delta - 2)
                };
                assert_eq!(g.vertex_count(), expected, "T({delta},{h})");
                assert!(g.is_forest() && g.is_connected());
            }
        }
    }

    #[test]
    fn forest_detection() {
        assert!(built(FamilySpec::Path(5)).is_forest());
        assert!(!built(FamilySpec::Cycle(5)).is_forest());
        assert!(Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap().is_forest());
        assert!(!Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4), (2, 4)])
            .unwrap()
            .is_forest());
    }
}

//! Undirected weighted simple graphs over the vertex set `0..m` of a space.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use petgraph::algo::dijkstra;
use petgraph::graph::{NodeIndex, UnGraph};
use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::FiniteMetricSpace;
use crate::space::Bijection;
use crate::tolerance::ToleranceConfig;

/// Whether edges report unit length (`G(M)`) or their stored distance (`G(M)^w`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum WeightMode {
    Unit,
    #[default]
    Distance,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// Edges are stored once, keyed `(min, max)`, in sorted order; the stored
/// weight is always the distance, and [`WeightMode::Unit`] only changes what
/// is reported.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), f64>,
    mode: WeightMode,
}

#[inline]
fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl WeightedGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeMap::new(),
            mode: WeightMode::Distance,
        }
    }

    /// `K_m` with distance weights.
    pub fn complete(space: &FiniteMetricSpace) -> Self {
        let mut g = Self::new(space.len());
        for (i, j, d) in space.pairs() {
            g.edges.insert((i, j), d);
        }
        g
    }

    /// Inserts `{u, v}`; returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize, weight: f64) -> Result<bool> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge(u, v));
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(Error::InvalidWeight(weight));
        }
        Ok(self.edges.insert(key(u, v), weight).is_none())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Option<f64> {
        self.edges.remove(&key(u, v))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn mode(&self) -> WeightMode {
        self.mode
    }

    pub fn with_mode(mut self, mode: WeightMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.edges.contains_key(&key(u, v))
    }

    /// Weight of `{u, v}` under the active mode.
    pub fn weight(&self, u: usize, v: usize) -> Option<f64> {
        self.edges.get(&key(u, v)).map(|&w| self.report(w))
    }

    #[inline]
    fn report(&self, stored: f64) -> f64 {
        match self.mode {
            WeightMode::Unit => 1.0,
            WeightMode::Distance => stored,
        }
    }

    /// Edges in ascending `(u, v)` order with `u < v`, weights under the active mode.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|(&(u, v), &w)| Edge {
            u,
            v,
            weight: self.report(w),
        })
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges.keys().copied().collect()
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in self.edges.keys() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    /// Edges present in both graphs, with this graph's weights.
    pub fn intersection(&self, other: &WeightedGraph) -> WeightedGraph {
        WeightedGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|(k, _)| other.edges.contains_key(k))
                .map(|(&k, &w)| (k, w))
                .collect(),
            mode: self.mode,
        }
    }

    pub fn same_edges(&self, other: &WeightedGraph) -> bool {
        self.n == other.n && self.edges.keys().eq(other.edges.keys())
    }

    pub fn components(&self) -> ComponentPartition {
        components(self)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// One `u v weight` line per edge; weights use the shortest exact decimal form.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in self.edges() {
            let _ = writeln!(out, "{} {} {}", e.u, e.v, e.weight);
        }
        out
    }

    /// Parses the edge-list format; `n` is the vertex count.
    pub fn parse_edge_list(n: usize, text: &str) -> Result<Self> {
        let mut g = Self::new(n);
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("edge list line {}: `{line}`", lineno + 1));
            if fields.len() != 3 {
                return Err(bad());
            }
            let u = fields[0].parse().map_err(|_| bad())?;
            let v = fields[1].parse().map_err(|_| bad())?;
            let w = fields[2].parse().map_err(|_| bad())?;
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Graphviz `graph` with weights as edge labels.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for e in self.edges() {
            let _ = writeln!(out, "  {} -- {} [label=\"{}\"];", e.u, e.v, e.weight);
        }
        out.push_str("}\n");
        out
    }
}

/// A partition of the vertices into connected components.
///
/// Components are listed in ascending order of their smallest vertex, each
/// sorted ascending; that smallest vertex is the component's id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentPartition {
    index: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn singletons(n: usize) -> Self {
        Self {
            index: (0..n).collect(),
            components: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Position of `v`'s component in [`Self::components`].
    pub fn index(&self, v: usize) -> usize {
        self.index[v]
    }

    /// Smallest vertex in `v`'s component.
    pub fn representative(&self, v: usize) -> usize {
        self.components[self.index[v]][0]
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn same(&self, u: usize, v: usize) -> bool {
        self.index[u] == self.index[v]
    }
}

pub fn components(g: &WeightedGraph) -> ComponentPartition {
    let mut uf = UnionFind::<usize>::new(g.n);
    for &(u, v) in g.edges.keys() {
        uf.union(u, v);
    }
    let labels = uf.into_labeling();
    // Vertices are visited in ascending order, so the first vertex seen for a
    // label is that component's smallest member.
    let mut by_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut index = vec![0; g.n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n {
        let next = comps.len();
        let ci = *by_root.entry(labels[v]).or_insert(next);
        if ci == next {
            comps.push(Vec::new());
        }
        comps[ci].push(v);
        index[v] = ci;
    }
    ComponentPartition {
        index,
        components: comps,
    }
}

/// Connected with exactly `m - 1` edges.
pub fn is_tree(g: &WeightedGraph) -> bool {
    g.n >= 1 && g.edge_count() + 1 == g.n && g.is_connected()
}

/// A simple graph is a forest iff `|E| = m - c`; any surplus edge closes a cycle.
pub fn has_cycle(g: &WeightedGraph) -> bool {
    g.edge_count() + components(g).len() > g.n
}

/// All-pairs shortest-path metric under the graph's active weight mode.
pub fn path_metric(g: &WeightedGraph) -> Result<FiniteMetricSpace> {
    path_metric_with(g, ToleranceConfig::default())
}

pub fn path_metric_with(g: &WeightedGraph, config: ToleranceConfig) -> Result<FiniteMetricSpace> {
    if g.n < 2 {
        return Err(Error::TooFewPoints(g.n));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let pg = to_petgraph(g);
    let n = g.n;
    let mut dist = vec![0.0; n * n];
    for s in 0..n {
        dist[s * n..(s + 1) * n].copy_from_slice(&single_source(&pg, n, s));
    }
    // Symmetrize so the table is exactly symmetric despite summation order.
    for i in 0..n {
        for j in (i + 1)..n {
            let d = dist[i * n + j].min(dist[j * n + i]);
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    Ok(FiniteMetricSpace::from_trusted(n, dist, config))
}

/// Shortest-path lengths from `source` under the active weight mode;
/// unreachable vertices get `f64::INFINITY`.
pub fn distances_from(g: &WeightedGraph, source: usize) -> Vec<f64> {
    single_source(&to_petgraph(g), g.n, source)
}

fn to_petgraph(g: &WeightedGraph) -> UnGraph<(), f64> {
    let mut pg = UnGraph::<(), f64>::with_capacity(g.n, g.edge_count());
    for _ in 0..g.n {
        pg.add_node(());
    }
    for e in g.edges() {
        pg.add_edge(NodeIndex::new(e.u), NodeIndex::new(e.v), e.weight);
    }
    pg
}

fn single_source(pg: &UnGraph<(), f64>, n: usize, source: usize) -> Vec<f64> {
    let mut out = vec![f64::INFINITY; n];
    for (node, d) in dijkstra(pg, NodeIndex::new(source), None, |e| *e.weight()) {
        out[node.index()] = d;
    }
    out
}

/// True iff `{i, j}` is an edge of `g` exactly when `{f(i), f(j)}` is an edge of `h`.
pub fn isomorphic_under(g: &WeightedGraph, h: &WeightedGraph, f: &Bijection) -> Result<bool> {
    if g.n != h.n {
        return Err(Error::SizeMismatch(g.n, h.n));
    }
    if f.len() != g.n {
        return Err(Error::SizeMismatch(g.n, f.len()));
    }
    if g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(g.edges
        .keys()
        .all(|&(u, v)| h.contains(f.apply(u), f.apply(v))))
}

/// `E(g) ⊆ E(h)` on a shared vertex labeling.
pub fn is_subgraph(g: &WeightedGraph, h: &WeightedGraph) -> Result<bool> {
    if g.n != h.n {
        return Err(Error::SizeMismatch(g.n, h.n));
    }
    Ok(g.edges.keys().all(|k| h.edges.contains_key(k)))
}

//! Ribbon graphs as combinatorial maps.
//!
//! A ribbon graph is a pair of permutations on darts (half-edges): the
//! rotation `sigma`, whose cycles are the vertices with their cyclic order,
//! and the fixed-point-free involution `epsilon`, whose orbits are the edges.
//! Vertices without darts are kept as a separate list of names.
//!
//! Boundary components of a state `H` are traced with the step map
//! `d -> first H-dart among sigma(epsilon(d)), sigma^2(epsilon(d)), ...`.
//! This convention is used everywhere (dual, boundary labels); the other one
//! (`sigma^-1`) gives the mirror image.

mod enumerate;
mod iso;

pub use enumerate::{connected_graphs, random_graph, GraphFamily};
pub use iso::isomorphic;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub type DartId = usize;
pub type EdgeId = usize;
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RibbonError {
    #[error("dart `{0}` is used more than once")]
    DuplicateDart(String),
    #[error("dart `{0}` belongs to no edge")]
    UnpairedDart(String),
    #[error("dart `{0}` belongs to no vertex rotation")]
    UnplacedDart(String),
    #[error("dart `{0}` is paired with itself")]
    SelfPairedDart(String),
    #[error("vertex `{0}` is defined more than once")]
    DuplicateVertex(String),
    #[error("edge `{0}` is defined more than once")]
    DuplicateEdge(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("the ribbon graph is not connected")]
    DisconnectedGraph,
    #[error("cycle length {0} is below 2")]
    BadCycleLength(u32),
}

/// Edge decorations used for the four tangle replacements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TangleType {
    W1,
    W2,
    W3,
    W4,
}

impl TangleType {
    pub const ALL: [TangleType; 4] = [
        TangleType::W1,
        TangleType::W2,
        TangleType::W3,
        TangleType::W4,
    ];
}

impl fmt::Display for TangleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TangleType::W1 => "w1",
            TangleType::W2 => "w2",
            TangleType::W3 => "w3",
            TangleType::W4 => "w4",
        };
        f.write_str(s)
    }
}

impl FromStr for TangleType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "w1" => Ok(TangleType::W1),
            "w2" => Ok(TangleType::W2),
            "w3" => Ok(TangleType::W3),
            "w4" => Ok(TangleType::W4),
            _ => Err(format!("unknown tangle type `{s}` (expected w1..w4)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    /// `darts[0]` is the tail: traversing the edge from `darts[0]` reads the
    /// edge forwards, from `darts[1]` backwards.
    pub darts: [DartId; 2],
    pub weight: Option<String>,
    pub tangle: Option<TangleType>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub name: String,
    /// Darts in rotation order.
    pub darts: Vec<DartId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RibbonGraph {
    name: String,
    dart_names: Vec<String>,
    sigma: Vec<DartId>,
    epsilon: Vec<DartId>,
    dart_vertex: Vec<VertexId>,
    dart_edge: Vec<EdgeId>,
    vertices: Vec<Vertex>,
    isolated: Vec<String>,
    edges: Vec<Edge>,
    tensor_of: Option<u32>,
}

/// Named construction of a ribbon graph; the parser and the generators go
/// through here so that validation lives in one place.
#[derive(Debug, Clone, Default)]
pub struct RibbonGraphBuilder {
    name: String,
    vertices: Vec<(String, Vec<String>)>,
    edges: Vec<(String, String, String)>,
    weights: Vec<(String, String)>,
    tangles: Vec<(String, TangleType)>,
    tensor_of: Option<u32>,
}

impl RibbonGraphBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        RibbonGraphBuilder {
            name: name.into(),
            ..Default::default()
        }
    }

    /// Adds a vertex with its darts in rotation order; an empty list makes an
    /// isolated vertex.
    pub fn vertex<S: AsRef<str>>(&mut self, name: impl Into<String>, darts: &[S]) -> &mut Self {
        self.vertices.push((
            name.into(),
            darts.iter().map(|d| d.as_ref().to_string()).collect(),
        ));
        self
    }

    pub fn edge(
        &mut self,
        name: impl Into<String>,
        a: impl Into<String>,
        b: impl Into<String>,
    ) -> &mut Self {
        self.edges.push((name.into(), a.into(), b.into()));
        self
    }

    pub fn weight(&mut self, edge: impl Into<String>, symbol: impl Into<String>) -> &mut Self {
        self.weights.push((edge.into(), symbol.into()));
        self
    }

    pub fn tangle(&mut self, edge: impl Into<String>, t: TangleType) -> &mut Self {
        self.tangles.push((edge.into(), t));
        self
    }

    pub fn tensor_of(&mut self, q: Option<u32>) -> &mut Self {
        self.tensor_of = q;
        self
    }

    pub fn build(&self) -> Result<RibbonGraph, RibbonError> {
        let mut vertex_names = HashSet::new();
        let mut dart_index: HashMap<&str, DartId> = HashMap::new();
        let mut dart_names = Vec::new();
        let mut dart_vertex = Vec::new();
        let mut vertices = Vec::new();
        let mut isolated = Vec::new();
        for (name, darts) in &self.vertices {
            if !vertex_names.insert(name.as_str()) {
                return Err(RibbonError::DuplicateVertex(name.clone()));
            }
            if darts.is_empty() {
                isolated.push(name.clone());
                continue;
            }
            let vid = vertices.len();
            let mut ids = Vec::with_capacity(darts.len());
            for d in darts {
                if dart_index.contains_key(d.as_str()) {
                    return Err(RibbonError::DuplicateDart(d.clone()));
                }
                let id = dart_names.len();
                dart_index.insert(d, id);
                dart_names.push(d.clone());
                dart_vertex.push(vid);
                ids.push(id);
            }
            vertices.push(Vertex {
                name: name.clone(),
                darts: ids,
            });
        }

        let n = dart_names.len();
        let mut sigma = vec![0; n];
        for v in &vertices {
            for (i, &d) in v.darts.iter().enumerate() {
                sigma[d] = v.darts[(i + 1) % v.darts.len()];
            }
        }

        let mut epsilon = vec![usize::MAX; n];
        let mut dart_edge = vec![usize::MAX; n];
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_index: HashMap<&str, EdgeId> = HashMap::new();
        for (name, a, b) in &self.edges {
            if edge_index.contains_key(name.as_str()) {
                return Err(RibbonError::DuplicateEdge(name.clone()));
            }
            if a == b {
                return Err(RibbonError::SelfPairedDart(a.clone()));
            }
            let lookup = |d: &String| {
                dart_index
                    .get(d.as_str())
                    .copied()
                    .ok_or_else(|| RibbonError::UnplacedDart(d.clone()))
            };
            let (da, db) = (lookup(a)?, lookup(b)?);
            for (d, label) in [(da, a), (db, b)] {
                if epsilon[d] != usize::MAX {
                    return Err(RibbonError::DuplicateDart(label.clone()));
                }
            }
            let eid = edges.len();
            epsilon[da] = db;
            epsilon[db] = da;
            dart_edge[da] = eid;
            dart_edge[db] = eid;
            edge_index.insert(name, eid);
            edges.push(Edge {
                name: name.clone(),
                darts: [da, db],
                weight: None,
                tangle: None,
            });
        }
        if let Some(d) = (0..n).find(|&d| epsilon[d] == usize::MAX) {
            return Err(RibbonError::UnpairedDart(dart_names[d].clone()));
        }
        for (e, w) in &self.weights {
            let eid = *edge_index
                .get(e.as_str())
                .ok_or_else(|| RibbonError::UnknownEdge(e.clone()))?;
            edges[eid].weight = Some(w.clone());
        }
        for (e, t) in &self.tangles {
            let eid = *edge_index
                .get(e.as_str())
                .ok_or_else(|| RibbonError::UnknownEdge(e.clone()))?;
            edges[eid].tangle = Some(*t);
        }

        Ok(RibbonGraph {
            name: self.name.clone(),
            dart_names,
            sigma,
            epsilon,
            dart_vertex,
            dart_edge,
            vertices,
            isolated,
            edges,
            tensor_of: self.tensor_of,
        })
    }
}

/// Walk around one boundary component: each dart `d` stands for crossing
/// the edge of `d` from the vertex of `d` to the vertex of `epsilon(d)`.
/// An isolated vertex of the state gives an empty walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub darts: Vec<DartId>,
}

/// Graph and surface counts of a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Metrics {
    pub v: usize,
    pub k: usize,
    pub e: usize,
    pub r: usize,
    pub n: usize,
    pub p: usize,
    pub g: usize,
}

impl Metrics {
    /// Derives rank, nullity and genus. Panics if `k - p + n` is odd or
    /// negative, which can only come from a tracing bug.
    pub fn from_counts(v: usize, k: usize, e: usize, p: usize) -> Metrics {
        let r = v - k;
        let n = e - r;
        let twice_genus = k as i64 - p as i64 + n as i64;
        assert!(
            twice_genus >= 0 && twice_genus % 2 == 0,
            "inconsistent boundary count: v={v} k={k} e={e} p={p}"
        );
        Metrics {
            v,
            k,
            e,
            r,
            n,
            p,
            g: (twice_genus / 2) as usize,
        }
    }
}

/// A spanning sub-ribbon graph, given by its edge set.
#[derive(Debug, Clone)]
pub struct State<'a> {
    graph: &'a RibbonGraph,
    included: Vec<bool>,
}

impl<'a> State<'a> {
    pub fn graph(&self) -> &'a RibbonGraph {
        self.graph
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.included[e]
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.included
            .iter()
            .enumerate()
            .filter_map(|(e, &inc)| inc.then_some(e))
    }

    pub fn num_edges(&self) -> usize {
        self.included.iter().filter(|&&b| b).count()
    }

    pub fn boundary_walks(&self) -> Vec<Walk> {
        self.graph.boundary_walks_with(|e| self.included[e])
    }

    pub fn metrics(&self) -> Metrics {
        let mut tracer = Tracer::new(self.graph);
        let (k, p) = tracer.count(self.graph, |e| self.included[e]);
        Metrics::from_counts(self.graph.num_vertices(), k, self.num_edges(), p)
    }

    /// The state with `e` toggled.
    pub fn toggled(&self, e: EdgeId) -> State<'a> {
        let mut included = self.included.clone();
        included[e] = !included[e];
        State {
            graph: self.graph,
            included,
        }
    }
}

/// Reusable scratch space for counting components and boundary cycles of
/// many states of one graph.
pub(crate) struct Tracer {
    parent: Vec<usize>,
    seen: Vec<bool>,
    touched: Vec<bool>,
}

impl Tracer {
    pub(crate) fn new(g: &RibbonGraph) -> Self {
        Tracer {
            parent: vec![0; g.num_vertices()],
            seen: vec![false; g.num_darts()],
            touched: vec![false; g.num_vertices()],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `(k(H), p(H))` for the state whose edges satisfy `included`.
    pub(crate) fn count(
        &mut self,
        g: &RibbonGraph,
        included: impl Fn(EdgeId) -> bool,
    ) -> (usize, usize) {
        let nv = g.num_vertices();
        for i in 0..nv {
            self.parent[i] = i;
            self.touched[i] = false;
        }
        let mut k = nv;
        for (eid, edge) in g.edges.iter().enumerate() {
            if !included(eid) {
                continue;
            }
            let a = self.find(g.dart_vertex[edge.darts[0]]);
            let b = self.find(g.dart_vertex[edge.darts[1]]);
            if a != b {
                self.parent[a] = b;
                k -= 1;
            }
        }

        let mut p = 0;
        self.seen.iter_mut().for_each(|s| *s = false);
        for d in 0..g.num_darts() {
            if self.seen[d] || !included(g.dart_edge[d]) {
                continue;
            }
            p += 1;
            let mut cur = d;
            while !self.seen[cur] {
                self.seen[cur] = true;
                self.touched[g.dart_vertex[cur]] = true;
                cur = g.next_in_state(cur, &included);
            }
        }
        p += self.touched.iter().filter(|&&t| !t).count();
        (k, p)
    }
}

impl RibbonGraph {
    /// Builds a ribbon graph from rotations and pairs of dart names; vertices
    /// are named `v1, v2, ...` (isolated ones last) and edges `e1, e2, ...`.
    pub fn from_rotation<S: AsRef<str>>(
        vertex_rotations: &[Vec<S>],
        pairs: &[(S, S)],
        isolated: usize,
    ) -> Result<RibbonGraph, RibbonError> {
        let mut b = RibbonGraphBuilder::new("G");
        for (i, rot) in vertex_rotations.iter().enumerate() {
            if rot.is_empty() {
                // an empty rotation is not a vertex with darts; count it as isolated
                b.vertex(format!("v{}", i + 1), &[] as &[&str]);
            } else {
                b.vertex(format!("v{}", i + 1), rot);
            }
        }
        for i in 0..isolated {
            b.vertex(
                format!("v{}", vertex_rotations.len() + i + 1),
                &[] as &[&str],
            );
        }
        for (i, (a, c)) in pairs.iter().enumerate() {
            b.edge(format!("e{}", i + 1), a.as_ref(), c.as_ref());
        }
        b.build()
    }

    /// Builds from numeric dart cycles; darts are named `h0, h1, ...`.
    pub fn from_cycles(
        cycles: &[Vec<DartId>],
        pairs: &[(DartId, DartId)],
        isolated: usize,
    ) -> Result<RibbonGraph, RibbonError> {
        let named: Vec<Vec<String>> = cycles
            .iter()
            .map(|c| c.iter().map(|d| format!("h{d}")).collect())
            .collect();
        let named_pairs: Vec<(String, String)> = pairs
            .iter()
            .map(|(a, b)| (format!("h{a}"), format!("h{b}")))
            .collect();
        RibbonGraph::from_rotation(&named, &named_pairs, isolated)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// v(F), isolated vertices included.
    pub fn num_vertices(&self) -> usize {
        self.vertices.len() + self.isolated.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn isolated_count(&self) -> usize {
        self.isolated.len()
    }

    pub fn isolated_names(&self) -> &[String] {
        &self.isolated
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn edge_by_name(&self, name: &str) -> Option<EdgeId> {
        self.edges.iter().position(|e| e.name == name)
    }

    pub fn dart_name(&self, d: DartId) -> &str {
        &self.dart_names[d]
    }

    pub fn sigma(&self, d: DartId) -> DartId {
        self.sigma[d]
    }

    pub fn epsilon(&self, d: DartId) -> DartId {
        self.epsilon[d]
    }

    pub fn dart_vertex(&self, d: DartId) -> VertexId {
        self.dart_vertex[d]
    }

    pub fn dart_edge(&self, d: DartId) -> EdgeId {
        self.dart_edge[d]
    }

    /// Set when the graph was produced as `F (x) C_q`.
    pub fn tensor_of(&self) -> Option<u32> {
        self.tensor_of
    }

    pub fn state(&self, included: impl IntoIterator<Item = EdgeId>) -> State<'_> {
        let mut inc = vec![false; self.num_edges()];
        for e in included {
            inc[e] = true;
        }
        State {
            graph: self,
            included: inc,
        }
    }

    pub fn empty_state(&self) -> State<'_> {
        self.state(std::iter::empty())
    }

    pub fn full_state(&self) -> State<'_> {
        self.state(0..self.num_edges())
    }

    /// State whose edge `i` is present iff bit `i` of `mask` is set.
    pub fn state_from_mask(&self, mask: u64) -> State<'_> {
        State {
            graph: self,
            included: (0..self.num_edges()).map(|e| mask >> e & 1 == 1).collect(),
        }
    }

    /// All `2^e` states, ordered by the binary number whose bit `i` is the
    /// membership of edge `i`. Panics for graphs with 64 or more edges.
    pub fn states(&self) -> impl Iterator<Item = State<'_>> + '_ {
        assert!(self.num_edges() < 64, "too many edges to enumerate states");
        (0..1u64 << self.num_edges()).map(move |m| self.state_from_mask(m))
    }

    /// Metrics of the whole graph.
    pub fn metrics(&self) -> Metrics {
        self.full_state().metrics()
    }

    pub fn num_components(&self) -> usize {
        let mut t = Tracer::new(self);
        t.count(self, |_| true).0
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() == 1
    }

    pub fn genus(&self) -> usize {
        self.metrics().g
    }

    fn next_in_state(&self, d: DartId, included: &impl Fn(EdgeId) -> bool) -> DartId {
        let mut cur = self.sigma[self.epsilon[d]];
        while !included(self.dart_edge[cur]) {
            cur = self.sigma[cur];
        }
        cur
    }

    pub(crate) fn boundary_walks_with(&self, included: impl Fn(EdgeId) -> bool) -> Vec<Walk> {
        let mut walks = Vec::new();
        let mut seen = vec![false; self.num_darts()];
        let mut touched = vec![false; self.vertices.len()];
        for d in 0..self.num_darts() {
            if seen[d] || !included(self.dart_edge[d]) {
                continue;
            }
            let mut darts = Vec::new();
            let mut cur = d;
            while !seen[cur] {
                seen[cur] = true;
                touched[self.dart_vertex[cur]] = true;
                darts.push(cur);
                cur = self.next_in_state(cur, &included);
            }
            walks.push(Walk { darts });
        }
        let empty = touched.iter().filter(|&&t| !t).count() + self.isolated.len();
        walks.extend((0..empty).map(|_| Walk { darts: Vec::new() }));
        walks
    }

    /// Boundary walks of a state of this graph.
    pub fn boundary_walks(&self, state: &State<'_>) -> Vec<Walk> {
        assert!(std::ptr::eq(state.graph, self), "state of another graph");
        state.boundary_walks()
    }

    /// Same graph with a fresh weight symbol `b_<edge>` on every unweighted edge.
    pub fn with_default_weights(&self) -> RibbonGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            if e.weight.is_none() {
                e.weight = Some(format!("b_{}", e.name));
            }
        }
        g
    }

    /// Same graph with weight `b_<edge>` on every edge, replacing any
    /// existing weights.
    pub fn with_fresh_weights(&self) -> RibbonGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.weight = Some(format!("b_{}", e.name));
        }
        g
    }

    /// Same graph with every edge carrying tangle type `t`.
    pub fn with_uniform_tangle(&self, t: TangleType) -> RibbonGraph {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.tangle = Some(t);
        }
        g
    }

    /// The dual ribbon graph of a connected ribbon graph.
    ///
    /// Its vertices are the boundary walks of the full state, with rotation
    /// equal to the order of darts along the walk; darts and edges are kept.
    /// As permutations the dual is `(sigma . epsilon, epsilon)`, so taking the
    /// dual twice returns the original rotation.
    pub fn dual(&self) -> Result<RibbonGraph, RibbonError> {
        if !self.is_connected() {
            return Err(RibbonError::DisconnectedGraph);
        }
        let mut b = RibbonGraphBuilder::new(self.name.clone());
        let walks = self.boundary_walks_with(|_| true);
        for (i, w) in walks.iter().enumerate() {
            let names: Vec<&str> = w.darts.iter().map(|&d| self.dart_name(d)).collect();
            b.vertex(format!("f{}", i + 1), &names);
        }
        for e in &self.edges {
            b.edge(
                e.name.clone(),
                self.dart_name(e.darts[0]),
                self.dart_name(e.darts[1]),
            );
            if let Some(w) = &e.weight {
                b.weight(e.name.clone(), w.clone());
            }
        }
        b.build()
    }

    /// `F (x) C_q`: every edge becomes a path of `q - 1` edges through
    /// `q - 2` new degree-two vertices. The embedding is unchanged.
    pub fn tensor_cycle(&self, q: u32) -> Result<RibbonGraph, RibbonError> {
        if q < 2 {
            return Err(RibbonError::BadCycleLength(q));
        }
        let segments = (q - 1) as usize;
        let mut b = RibbonGraphBuilder::new(self.name.clone());
        for v in &self.vertices {
            let names: Vec<&str> = v.darts.iter().map(|&d| self.dart_name(d)).collect();
            b.vertex(v.name.clone(), &names);
        }
        for name in &self.isolated {
            b.vertex(name.clone(), &[] as &[&str]);
        }
        for e in &self.edges {
            let left = |j: usize| format!("{}.{}l", e.name, j);
            let right = |j: usize| format!("{}.{}r", e.name, j);
            for j in 1..segments {
                b.vertex(format!("{}.m{}", e.name, j), &[left(j), right(j)]);
            }
            for j in 1..=segments {
                let tail = if j == 1 {
                    self.dart_name(e.darts[0]).to_string()
                } else {
                    right(j - 1)
                };
                let head = if j == segments {
                    self.dart_name(e.darts[1]).to_string()
                } else {
                    left(j)
                };
                let name = if segments == 1 {
                    e.name.clone()
                } else {
                    format!("{}.{}", e.name, j)
                };
                b.edge(name, tail, head);
            }
        }
        let combined = match self.tensor_of {
            // (F (x) C_a) (x) C_b subdivides each original edge (a-1)(b-1) times
            Some(a) => (a - 1) * (q - 1) + 1,
            None => q,
        };
        b.tensor_of(if q == 2 {
            self.tensor_of
        } else {
            Some(combined)
        });
        b.build()
    }
}

/// Small named ribbon graphs used throughout tests and examples.
pub mod samples {
    use super::*;

    /// Single edge between two vertices.
    pub fn bridge() -> RibbonGraph {
        RibbonGraph::from_rotation(&[vec!["a"], vec!["b"]], &[("a", "b")], 0).unwrap()
    }

    /// One vertex with a planar loop.
    pub fn planar_loop() -> RibbonGraph {
        RibbonGraph::from_rotation(&[vec!["a", "a'"]], &[("a", "a'")], 0).unwrap()
    }

    /// One vertex with two interleaved loops: the punctured torus.
    pub fn torus_loops() -> RibbonGraph {
        RibbonGraph::from_rotation(
            &[vec!["a", "b", "a'", "b'"]],
            &[("a", "a'"), ("b", "b'")],
            0,
        )
        .unwrap()
    }

    /// Planar triangle.
    pub fn triangle() -> RibbonGraph {
        RibbonGraph::from_rotation(
            &[vec!["a1", "c2"], vec!["b1", "a2"], vec!["c1", "b2"]],
            &[("a1", "a2"), ("b1", "b2"), ("c1", "c2")],
            0,
        )
        .unwrap()
    }
}

//! Labeled simple undirected graphs.
//!
//! Vertices carry string labels. After [`GraphBuilder::build`] the internal
//! vertex ids follow lexicographic label order, so iterating ids, neighbor
//! lists and edges is deterministic and canonical.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

/// Dense vertex index, valid for the graph that produced it.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` -- `{1}`")]
    DuplicateEdge(String, String),
    #[error("malformed line {line}: `{text}`")]
    Malformed { line: usize, text: String },
}

impl GraphError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::UnknownVertex(_) => "UnknownVertex",
            Self::SelfLoop(_) => "SelfLoop",
            Self::DuplicateEdge(..) => "DuplicateEdge",
            Self::Malformed { .. } => "Malformed",
        }
    }
}

/// Incremental construction of a [`Graph`]; rejects self-loops and parallel edges.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds the vertex if absent and returns its provisional index.
    pub fn add_vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), i);
        self.adj.push(Vec::new());
        i
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    /// Labels in insertion order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a.to_owned()));
        }
        let i = self.add_vertex(a);
        let j = self.add_vertex(b);
        if self.adj[i].contains(&j) {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            return Err(GraphError::DuplicateEdge(lo.to_owned(), hi.to_owned()));
        }
        self.adj[i].push(j);
        self.adj[j].push(i);
        Ok(())
    }

    /// Removes an edge previously added; returns whether it existed.
    pub fn remove_edge(&mut self, a: &str, b: &str) -> bool {
        let (Some(&i), Some(&j)) = (self.index.get(a), self.index.get(b)) else {
            return false;
        };
        let before = self.adj[i].len();
        self.adj[i].retain(|&x| x != j);
        self.adj[j].retain(|&x| x != i);
        before != self.adj[i].len()
    }

    pub fn build(self) -> Graph {
        let mut order: Vec<usize> = (0..self.labels.len()).collect();
        order.sort_by(|&x, &y| self.labels[x].cmp(&self.labels[y]));
        let mut new_id = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new;
        }
        let mut labels = Vec::with_capacity(order.len());
        let mut adj = Vec::with_capacity(order.len());
        let mut old_labels: Vec<Option<String>> = self.labels.into_iter().map(Some).collect();
        for &old in &order {
            labels.push(old_labels[old].take().expect("each vertex moved once"));
            let mut nbrs: Vec<usize> = self.adj[old].iter().map(|&o| new_id[o]).collect();
            nbrs.sort_unstable();
            adj.push(nbrs);
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Graph { labels, index, adj }
    }
}

/// Immutable simple undirected graph with canonically ordered string labels.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from labeled edges.
    pub fn from_edges<'a, I>(edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut b = GraphBuilder::new();
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn id(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<VertexId, GraphError> {
        self.id(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_owned()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.labels.len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Hop distances from `src`; `None` marks unreachable vertices.
    pub fn bfs(&self, src: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn bfs_distances(&self, src: &str) -> Result<DistanceMap, GraphError> {
        let s = self.require(src)?;
        Ok(DistanceMap {
            source: src.to_owned(),
            dist: self.bfs(s),
        })
    }

    pub fn distance(&self, u: &str, v: &str) -> Result<Option<usize>, GraphError> {
        let v = self.require(v)?;
        Ok(self.bfs(self.require(u)?)[v])
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        self.bfs(0).iter().all(Option::is_some)
    }

    /// Map degree → number of vertices with that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for nbrs in &self.adj {
            *hist.entry(nbrs.len()).or_insert(0) += 1;
        }
        hist
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|n| n.len() == d)
    }

    /// The common degree, if the graph is regular and nonempty.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.is_regular(d).then_some(d)
    }

    /// Induced subgraph on the vertices accepted by `keep`.
    pub fn induced<F: Fn(VertexId) -> bool>(&self, keep: F) -> Graph {
        let mut b = GraphBuilder::new();
        for v in self.vertices().filter(|&v| keep(v)) {
            b.add_vertex(&self.labels[v]);
        }
        for (u, v) in self.edges() {
            if keep(u) && keep(v) {
                b.add_edge(&self.labels[u], &self.labels[v])
                    .expect("source graph is simple");
            }
        }
        b.build()
    }

    /// Copy of the graph with every label mapped through `f`.
    pub fn relabeled<F: Fn(&str) -> String>(&self, f: F) -> Graph {
        let mut b = GraphBuilder::new();
        for l in &self.labels {
            b.add_vertex(&f(l));
        }
        for (u, v) in self.edges() {
            b.add_edge(&f(&self.labels[u]), &f(&self.labels[v]))
                .expect("relabeling must be injective");
        }
        b.build()
    }

    /// Builder pre-populated with this graph, for derived constructions.
    pub fn to_builder(&self) -> GraphBuilder {
        let mut b = GraphBuilder::new();
        for l in &self.labels {
            b.add_vertex(l);
        }
        for (u, v) in self.edges() {
            b.add_edge(&self.labels[u], &self.labels[v])
                .expect("source graph is simple");
        }
        b
    }

    /// All-pairs hop distances; `u32::MAX` for unreachable pairs.
    pub fn distance_matrix(&self) -> Vec<Vec<u32>> {
        self.vertices()
            .map(|s| {
                self.bfs(s)
                    .into_iter()
                    .map(|d| d.map_or(u32::MAX, |d| d as u32))
                    .collect()
            })
            .collect()
    }
}

/// Hop distances from a single source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMap {
    pub source: String,
    pub dist: Vec<Option<usize>>,
}

impl DistanceMap {
    pub fn get(&self, g: &Graph, label: &str) -> Option<usize> {
        g.id(label).and_then(|v| self.dist[v])
    }
}

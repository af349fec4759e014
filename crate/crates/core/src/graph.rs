//! Small undirected simple graphs with labelled vertices.
//!
//! Vertices are dense indices `0..n` carrying a label; edges are stored as
//! sorted adjacency sets so every iteration order is deterministic.

use std::collections::BTreeSet;
use std::fmt::{self, Display, Write as _};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph<L> {
    labels: Vec<L>,
    adjacency: Vec<BTreeSet<usize>>,
}

impl<L> Graph<L> {
    pub fn new(labels: Vec<L>) -> Self {
        let adjacency = vec![BTreeSet::new(); labels.len()];
        Graph { labels, adjacency }
    }

    /// Builds a graph on `labels`, joining every pair for which `adjacent` holds.
    pub fn from_relation(labels: Vec<L>, mut adjacent: impl FnMut(&L, &L) -> bool) -> Self {
        let mut g = Graph::new(labels);
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if adjacent(&g.labels[i], &g.labels[j]) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &L {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    /// Adds the edge `{u, v}`. Self-loops are ignored; returns whether the edge is new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let fresh = self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        fresh
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.len()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adjacency.first().map_or(0, BTreeSet::len);
        self.adjacency.iter().all(|a| a.len() == k).then_some(k)
    }

    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.adjacency[u].intersection(&self.adjacency[v]).count()
    }

    /// Strongly regular parameters `(n, k, λ, μ)`, if the graph has them.
    pub fn srg_parameters(&self) -> Option<SrgParameters> {
        let k = self.regular_degree()?;
        let (mut lambda, mut mu) = (None, None);
        for u in 0..self.len() {
            for v in u + 1..self.len() {
                let c = self.common_neighbours(u, v);
                let slot = if self.has_edge(u, v) { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(c),
                    Some(prev) if prev != c => return None,
                    _ => {}
                }
            }
        }
        Some(SrgParameters { n: self.len(), k, lambda: lambda.unwrap_or(0), mu: mu.unwrap_or(0) })
    }

    /// Whether `vertices` induce a complete subgraph.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// A clique is maximal when no outside vertex is adjacent to all of it.
    pub fn is_maximal_clique(&self, vertices: &[usize]) -> bool {
        self.is_clique(vertices)
            && (0..self.len()).filter(|w| !vertices.contains(w)).all(|w| !vertices.iter().all(|&v| self.has_edge(v, w)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn map_labels<M>(&self, f: impl FnMut(&L) -> M) -> Graph<M> {
        Graph { labels: self.labels.iter().map(f).collect(), adjacency: self.adjacency.clone() }
    }
}

impl<L: Clone> Graph<L> {
    pub fn complement(&self) -> Self {
        Graph::from_relation_indexed(self.labels.clone(), |u, v| !self.has_edge(u, v))
    }

    /// The subgraph induced on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Graph::new(vertices.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    fn from_relation_indexed(labels: Vec<L>, adjacent: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Graph::new(labels);
        for u in 0..g.len() {
            for v in u + 1..g.len() {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

impl<L: Ord + Clone> Graph<L> {
    /// Edge set expressed through labels, independent of vertex order.
    pub fn labelled_edges(&self) -> BTreeSet<(L, L)> {
        self.edges()
            .map(|(u, v)| {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Same vertex labels and same labelled edges.
    pub fn same_as(&self, other: &Graph<L>) -> bool {
        let mine: BTreeSet<&L> = self.labels.iter().collect();
        let theirs: BTreeSet<&L> = other.labels.iter().collect();
        mine == theirs && self.labelled_edges() == other.labelled_edges()
    }

    pub fn position(&self, label: &L) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

impl<L: Display> Graph<L> {
    /// Graphviz rendering; vertex ids are the dense indices, labels are quoted.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", dot_id(name));
        for (v, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label=\"{label}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(name: &str) -> String {
    if !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        name.to_string()
    } else {
        format!("\"{}\"", name.replace('"', "\\\""))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SrgParameters {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "srg({}, {}, {}, {})", self.n, self.k, self.lambda, self.mu)
    }
}

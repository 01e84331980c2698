//! Undirected graphs, orientations, and structural predicates.
//!
//! A [`Graph`] is a simple undirected graph stored as a vertex count plus a
//! normalized edge list (each pair sorted, list sorted, no loops, no
//! duplicates). Graphs are value-like: mutating operations return new graphs,
//! so instances can be shared freely across worker threads.
//!
//! An [`Orientation`] assigns a direction to every edge of a base graph. The
//! encoding is fixed once here and inherited by every other module: bit `i`
//! of the direction mask set means edge `i` runs from its smaller-labeled
//! endpoint to the larger one, clear means the reverse. This makes "all
//! orientations of G" a plain integer counter from `0` to `2^|E| - 1`.

use std::fmt;

use thiserror::Error;

/// Errors from graph construction and edit operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("vertex {0} not present")]
    MissingVertex(usize),
    #[error("direction mask has bits beyond the {edges} edge positions")]
    DirectionMaskWidth { edges: usize },
    #[error("orientations support at most 64 edges, graph has {0}")]
    TooManyEdges(usize),
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list.
    ///
    /// Pairs may come in any order and orientation; the stored form is
    /// normalized (each pair sorted ascending, the list sorted, duplicates
    /// rejected rather than merged).
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            norm.push((a, b));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Graph { n, edges: norm })
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edge list, sorted, each pair `(a, b)` with `a < b`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Index of edge `{u, v}` in the normalized edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Degree of every vertex, indexed by label.
    pub fn degree_vector(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Adjacency lists for all vertices, each sorted.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Number of connected components (isolated vertices count as components).
    pub fn component_count(&self) -> usize {
        let mut comp = vec![usize::MAX; self.n];
        let adj = self.adjacency_lists();
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        count
    }

    /// Component id per vertex, numbered in order of smallest member.
    pub(crate) fn component_labels(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let adj = self.adjacency_lists();
        let mut count = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// True when every component admits a proper 2-coloring.
    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring (color of each vertex), or `None` when some
    /// component contains an odd cycle. Vertex with the smallest label in
    /// each component gets color 0.
    pub(crate) fn two_coloring(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency_lists();
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Cycle rank `|E| - |V| + components`: 0 for forests, 1 for unicyclic,
    /// 2 for bicyclic graphs.
    pub fn cyclomatic_number(&self) -> usize {
        self.edges.len() + self.component_count() - self.n
    }

    /// New graph with edge `{u, v}` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let idx = self
            .edge_index(u, v)
            .ok_or(GraphError::MissingEdge(u.min(v), u.max(v)))?;
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Ok(Graph { n: self.n, edges })
    }

    /// New graph with edge `{u, v}` added.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if b >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: b,
                n: self.n,
            });
        }
        if self.has_edge(a, b) {
            return Err(GraphError::DuplicateEdge(a, b));
        }
        let mut edges = self.edges.clone();
        let pos = edges.binary_search(&(a, b)).unwrap_err();
        edges.insert(pos, (a, b));
        Ok(Graph { n: self.n, edges })
    }

    /// New graph with one extra vertex attached to `v` by a pendant edge.
    /// The new vertex gets the next label, `n`.
    pub fn add_pendant(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::MissingVertex(v));
        }
        let mut edges = self.edges.clone();
        edges.push((v, self.n));
        Graph::new(self.n + 1, &edges)
    }

    /// New graph with vertex `v` and its incident edges removed. Remaining
    /// vertices above `v` are relabeled down by one so labels stay contiguous.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::MissingVertex(v));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Graph::new(self.n - 1, &edges)
    }

    /// Interpret `dirs` as one direction bit per edge index: bit set means
    /// the arc runs from the smaller-labeled endpoint to the larger.
    pub fn orient(&self, dirs: u64) -> Result<Orientation, GraphError> {
        let m = self.edges.len();
        if m > 64 {
            return Err(GraphError::TooManyEdges(m));
        }
        if m < 64 && (dirs >> m) != 0 {
            return Err(GraphError::DirectionMaskWidth { edges: m });
        }
        Ok(Orientation {
            base: self.clone(),
            dirs,
        })
    }

    /// All orientations in which every vertex is a sink or a source
    /// (out-degree 0 or in-degree 0).
    ///
    /// Empty unless the graph is bipartite. A connected bipartite graph has
    /// exactly two, and they are mutual reverses; each additional component
    /// containing an edge doubles the count.
    pub fn sink_source_orientations(&self) -> Vec<Orientation> {
        let Some(color) = self.two_coloring() else {
            return Vec::new();
        };
        assert!(
            self.edges.len() <= 64,
            "orientations carry one direction bit per edge, at most 64"
        );
        let comp = self.component_labels();
        let mut comps_with_edges: Vec<usize> = self.edges.iter().map(|&(a, _)| comp[a]).collect();
        comps_with_edges.sort_unstable();
        comps_with_edges.dedup();
        let k = comps_with_edges.len();
        let comp_slot = |c: usize| comps_with_edges.binary_search(&c).unwrap();

        let mut out = Vec::with_capacity(1 << k);
        for flips in 0u64..(1 << k) {
            let mut dirs = 0u64;
            for (i, &(a, _)) in self.edges.iter().enumerate() {
                let flip = (flips >> comp_slot(comp[a])) & 1 == 1;
                // Arcs run from the color-0 side to the color-1 side unless
                // this component is flipped.
                let from_small = (color[a] == 0) ^ flip;
                if from_small {
                    dirs |= 1 << i;
                }
            }
            out.push(Orientation {
                base: self.clone(),
                dirs,
            });
        }
        out.sort_by_key(|o| o.dirs);
        out
    }
}

/// Per-vertex out/in degree pairs of an orientation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeVector(Vec<(usize, usize)>);

impl DegreeVector {
    pub fn out_degree(&self, v: usize) -> usize {
        self.0[v].0
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.0[v].1
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// An orientation of a base graph: one direction bit per edge index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    base: Graph,
    dirs: u64,
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Orientation(n={}, arcs={:?})",
            self.base.n,
            self.arcs().collect::<Vec<_>>()
        )
    }
}

impl Orientation {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn dirs(&self) -> u64 {
        self.dirs
    }

    /// Arcs as `(from, to)` pairs in edge-index order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.base.edges.iter().enumerate().map(move |(i, &(a, b))| {
            if (self.dirs >> i) & 1 == 1 {
                (a, b)
            } else {
                (b, a)
            }
        })
    }

    /// Out/in degree pairs per vertex. Always satisfies
    /// `out + in = base degree` per vertex and `Σ out = Σ in = |E|`.
    pub fn degree_vector(&self) -> DegreeVector {
        let mut pairs = vec![(0usize, 0usize); self.base.n];
        for (from, to) in self.arcs() {
            pairs[from].0 += 1;
            pairs[to].1 += 1;
        }
        DegreeVector(pairs)
    }

    /// Orientation with every arc flipped.
    pub fn reverse(&self) -> Orientation {
        let m = self.base.edges.len();
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        Orientation {
            base: self.base.clone(),
            dirs: self.dirs ^ mask,
        }
    }
}

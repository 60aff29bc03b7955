//! Finite simple undirected graphs on `A_n` and the fixed-pattern subgraph
//! detectors used by the classifier.
//!
//! Subgraphs here are ordinary (not induced) subgraphs: a 4-cycle inside a
//! complete graph counts.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} is out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("a path needs at least 1 vertex")]
    PathTooShort,
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
}

/// A simple undirected graph on the vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn edgeless(vertex_count: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut graph = Graph::edgeless(vertex_count);
        for (a, b) in edges {
            graph.add_edge(a, b)?;
        }
        Ok(graph)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        let vertex_count = self.vertex_count();
        for vertex in [a, b] {
            if vertex >= vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex,
                    vertex_count,
                });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        if let Err(pos) = self.adjacency[a].binary_search(&b) {
            self.adjacency[a].insert(pos, b);
            let pos = self.adjacency[b].binary_search(&a).unwrap_err();
            self.adjacency[b].insert(pos, a);
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
    }

    /// Neighbours of `vertex` in increasing order.
    pub fn neighbours(&self, vertex: usize) -> &[usize] {
        &self.adjacency[vertex]
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.adjacency[vertex].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count() && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()),
        );
        Graph { adjacency }
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = BTreeMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            index.insert(v, i);
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                let mut nbrs: Vec<usize> = self.adjacency[v]
                    .iter()
                    .filter_map(|u| index.get(u).copied())
                    .collect();
                nbrs.sort_unstable();
                nbrs
            })
            .collect();
        Graph { adjacency }
    }

    /// Some triangle `[a, b, c]`, the lexicographically least one.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (a, b) in self.edges() {
            let common = self.adjacency[b]
                .iter()
                .find(|&&c| c > b && self.adjacency[a].binary_search(&c).is_ok());
            if let Some(&c) = common {
                return Some([a, b, c]);
            }
        }
        None
    }

    /// Some 4-cycle `[a, u, b, v]` (edges `au, ub, bv, va`).
    ///
    /// A 4-cycle exists iff two distinct vertices `u, v` share two common
    /// neighbours `a, b`; every vertex records its neighbour pairs and the
    /// first pair recorded twice closes a cycle.
    pub fn find_c4(&self) -> Option<[usize; 4]> {
        let mut centre_of_pair = BTreeMap::new();
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if let Some(&v) = centre_of_pair.get(&(a, b)) {
                        return Some([a, v, b, u]);
                    }
                    centre_of_pair.insert((a, b), u);
                }
            }
        }
        None
    }

    /// Some path on 5 distinct vertices, found by depth-limited search.
    pub fn find_p5(&self) -> Option<[usize; 5]> {
        let mut path = [0usize; 5];
        (0..self.vertex_count()).find_map(|start| {
            path[0] = start;
            self.extend_path(&mut path, 1).then_some(path)
        })
    }

    fn extend_path(&self, path: &mut [usize; 5], len: usize) -> bool {
        if len == path.len() {
            return true;
        }
        let last = path[len - 1];
        for &next in &self.adjacency[last] {
            if !path[..len].contains(&next) {
                path[len] = next;
                if self.extend_path(path, len + 1) {
                    return true;
                }
            }
        }
        false
    }

    /// Some claw `[hub, a, b, c]`: the first vertex of degree at least 3 and
    /// its three smallest neighbours.
    pub fn find_claw(&self) -> Option<[usize; 4]> {
        self.adjacency
            .iter()
            .enumerate()
            .find(|(_, nbrs)| nbrs.len() >= 3)
            .map(|(hub, nbrs)| [hub, nbrs[0], nbrs[1], nbrs[2]])
    }

    pub fn contains_triangle(&self) -> bool {
        self.find_triangle().is_some()
    }

    pub fn contains_c4(&self) -> bool {
        self.find_c4().is_some()
    }

    pub fn contains_p5(&self) -> bool {
        self.find_p5().is_some()
    }

    pub fn contains_claw(&self) -> bool {
        self.max_degree() >= 3
    }

    /// Connected components in order of their smallest vertex, each with its
    /// vertices sorted and its shape.
    pub fn components(&self) -> Vec<(Vec<usize>, ComponentShape)> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            let mut vertices = Vec::new();
            while let Some(v) = stack.pop() {
                vertices.push(v);
                for &u in &self.adjacency[v] {
                    if !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
            vertices.sort_unstable();
            let shape = self.shape_of(&vertices);
            out.push((vertices, shape));
        }
        out
    }

    fn shape_of(&self, vertices: &[usize]) -> ComponentShape {
        if vertices.iter().any(|&v| self.degree(v) > 2) {
            return ComponentShape::Other;
        }
        let edges: usize = vertices.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
        // Connected with max degree 2: a path if it has a vertex of degree < 2,
        // otherwise a cycle. Walk it from an end (or from the smallest vertex).
        let start = vertices
            .iter()
            .copied()
            .find(|&v| self.degree(v) < 2)
            .unwrap_or(vertices[0]);
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut current = start;
        while let Some(&next) = self.adjacency[current]
            .iter()
            .find(|&&u| u != prev && u != start)
        {
            order.push(next);
            prev = current;
            current = next;
        }
        if edges == vertices.len() {
            ComponentShape::Cycle(order)
        } else {
            ComponentShape::Path(order)
        }
    }
}

/// Shape of a connected component. Paths and cycles carry their vertices in
/// traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentShape {
    Path(Vec<usize>),
    Cycle(Vec<usize>),
    Other,
}

impl ComponentShape {
    pub fn traversal(&self) -> Option<&[usize]> {
        match self {
            ComponentShape::Path(v) | ComponentShape::Cycle(v) => Some(v),
            ComponentShape::Other => None,
        }
    }
}

/// `P_n`: edges `i(i+1)` for `i < n - 1`.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::PathTooShort);
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n`: edges `i(i+1)` with indices modulo `n`.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,3}` with hub 0: edges `01, 02, 03`.
pub fn claw_graph() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).expect("claw edges are valid")
}

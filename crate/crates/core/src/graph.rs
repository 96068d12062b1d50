//! Vertex-indexed edge-list multigraph and two-colourings.
//!
//! Vertices are dense 0-based ids. Edges keep their construction order, so
//! every id handed out here is stable and all downstream algorithms are
//! deterministic. Parallel edges are first-class; loops are rejected.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} is a loop")]
    LoopRejected { edge: usize },
    #[error("edge {edge} has an endpoint out of range")]
    EndpointOutOfRange { edge: usize },
}

/// Undirected multigraph on vertices `0..n`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adj: Vec<Vec<usize>>,
}

impl Multigraph {
    /// Builds a multigraph from an explicit edge list. Edge ids equal input
    /// positions. Parallel pairs are allowed, loops are not.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { edge: i });
            }
            if u == v {
                return Err(GraphError::LoopRejected { edge: i });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(i);
            adj[v].push(i);
        }
        Ok(Multigraph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Ids of the edges incident to `v`, in ascending edge-id order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn other_endpoint(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Neighbours of `v` as `(edge id, other endpoint)`, one entry per
    /// incident edge slot.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[v]
            .iter()
            .map(move |&e| (e, self.other_endpoint(e, v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// True when no two edges join the same vertex pair.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    /// Whether some edge joins `u` and `v`.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].iter().any(|&e| self.other_endpoint(e, u) == v)
    }

    /// Number of parallel edges between `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.adj[u]
            .iter()
            .filter(|&&e| self.other_endpoint(e, u) == v)
            .count()
    }

    /// The empty graph is treated as disconnected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for (_, w) in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Connected components of the subgraph induced by `subset`, using only
    /// edges with both endpoints inside the subset. Each component is sorted
    /// ascending; components are ordered by their smallest vertex.
    pub fn induced_subgraph_components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut inside = vec![false; self.n];
        for &v in subset {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut components = Vec::new();
        let mut order: Vec<usize> = subset.to_vec();
        order.sort_unstable();
        order.dedup();
        for &start in &order {
            if seen[start] {
                continue;
            }
            let mut component = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                component.push(v);
                for (_, w) in self.neighbours(v) {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// Length of a shortest circuit, counting digons from parallel edges.
    /// `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut via_edge = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for (e, w) in self.neighbours(v) {
                    if e == via_edge[v] {
                        continue;
                    }
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        via_edge[w] = e;
                        queue.push_back(w);
                    } else {
                        // Closing edge: cycle through root or elsewhere; the
                        // bound dist[v] + dist[w] + 1 is exact over all roots.
                        let len = dist[v] + dist[w] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }
}

/// A vertex colour in a bisection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Colour {
    Black,
    White,
}

impl Colour {
    pub fn flip(self) -> Colour {
        match self {
            Colour::Black => Colour::White,
            Colour::White => Colour::Black,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Colour::Black => 'B',
            Colour::White => 'W',
        }
    }
}

impl Serialize for Colour {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_char(self.letter())
    }
}

/// Total two-colouring of a graph's vertices, indexed by vertex id.
/// Balance is not an invariant here; the verifier checks it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<Colour>,
}

impl Colouring {
    pub fn new(colours: Vec<Colour>) -> Self {
        Colouring { colours }
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn get(&self, v: usize) -> Colour {
        self.colours[v]
    }

    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn count(&self, colour: Colour) -> usize {
        self.colours.iter().filter(|&&c| c == colour).count()
    }

    /// Vertices of one colour class, ascending.
    pub fn class(&self, colour: Colour) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.colours[v] == colour)
            .collect()
    }
}

impl std::ops::Index<usize> for Colouring {
    type Output = Colour;

    fn index(&self, v: usize) -> &Colour {
        &self.colours[v]
    }
}

impl Serialize for Colouring {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let s: String = self.colours.iter().map(|c| c.letter()).collect();
        serializer.serialize_str(&s)
    }
}

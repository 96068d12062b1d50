//! Perfect matchings of bridgeless cubic multigraphs and the induced
//! 2-factor. Every bridgeless cubic multigraph has a perfect matching, so a
//! maximum-matching run that leaves a vertex exposed signals a caller
//! error.

use serde::Serialize;
use thiserror::Error;

use crate::decomposition::TriangleReplacement;
use crate::graph::Multigraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("matching complement has degree {degree} at vertex {vertex}, expected 2")]
    NotTwoRegular { vertex: usize, degree: usize },
}

/// A perfect matching as ascending edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: Vec<usize>,
}

impl Matching {
    /// Image of the matching in a triangle replacement: one port pair per
    /// matched h-edge.
    pub fn ports(&self, tr: &TriangleReplacement) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&e| tr.ports[e]).collect()
    }
}

/// One circuit of the 2-factor: `edges[i]` joins `vertices[i]` to
/// `vertices[i + 1]`, the last edge closing back to `vertices[0]`.
/// Digons (two vertices, two parallel edges) are legitimate circuits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Circuit {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// The circuits of the complement of a perfect matching, plus (once
/// expanded against a triangle replacement) the corresponding even circuits
/// in the replaced graph, each of twice the original length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircuitFamily {
    pub circuits: Vec<Circuit>,
    pub expanded: Vec<Vec<usize>>,
}

/// Maximum matching of an arbitrary multigraph as a mate array (`None` =
/// exposed). Parallel edges are collapsed first; deterministic: free
/// vertices are tried in id order, neighbours in adjacency order.
pub fn maximum_matching(g: &Multigraph) -> Vec<Option<usize>> {
    let mut pairs: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    let mut adj = vec![Vec::new(); g.n()];
    for &(u, v) in &pairs {
        adj[u].push(v);
        adj[v].push(u);
    }
    for nbrs in &mut adj {
        nbrs.sort_unstable();
    }
    blossom_matching(g.n(), &adj)
}

/// Blossom contraction over a simple adjacency structure.
fn blossom_matching(n: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let none = usize::MAX;
    let mut mate = vec![none; n];

    fn lca(base: &[usize], parent: &[usize], mate: &[usize], mut v: usize, mut w: usize) -> usize {
        let none = usize::MAX;
        let n = base.len();
        let mut on_path = vec![false; n];
        loop {
            v = base[v];
            on_path[v] = true;
            if mate[v] == none {
                break;
            }
            v = parent[mate[v]];
        }
        loop {
            w = base[w];
            if on_path[w] {
                return w;
            }
            w = parent[mate[w]];
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn mark_blossom(
        base: &mut [usize],
        parent: &mut [usize],
        mate: &[usize],
        in_blossom: &mut [bool],
        root: usize,
        mut v: usize,
        mut child: usize,
    ) {
        while base[v] != root {
            in_blossom[base[v]] = true;
            in_blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    fn find_augmenting(
        n: usize,
        adj: &[Vec<usize>],
        mate: &[usize],
        parent: &mut [usize],
        start: usize,
    ) -> Option<usize> {
        let none = usize::MAX;
        let mut base: Vec<usize> = (0..n).collect();
        let mut in_queue = vec![false; n];
        parent.fill(none);
        let mut queue = std::collections::VecDeque::from([start]);
        in_queue[start] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if base[v] == base[w] || mate[v] == w {
                    continue;
                }
                if w == start || (mate[w] != none && parent[mate[w]] != none) {
                    // Odd cycle: contract the blossom into its base.
                    let root = lca(&base, parent, mate, v, w);
                    let mut in_blossom = vec![false; n];
                    mark_blossom(&mut base, parent, mate, &mut in_blossom, root, v, w);
                    mark_blossom(&mut base, parent, mate, &mut in_blossom, root, w, v);
                    for u in 0..n {
                        if in_blossom[base[u]] {
                            base[u] = root;
                            if !in_queue[u] {
                                in_queue[u] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if parent[w] == none {
                    parent[w] = v;
                    if mate[w] == none {
                        return Some(w);
                    }
                    if !in_queue[mate[w]] {
                        in_queue[mate[w]] = true;
                        queue.push_back(mate[w]);
                    }
                }
            }
        }
        None
    }

    let mut parent = vec![none; n];
    for v in 0..n {
        if mate[v] != none {
            continue;
        }
        if let Some(mut w) = find_augmenting(n, adj, &mate, &mut parent, v) {
            // Flip matched edges along the alternating path back to v.
            while w != none {
                let p = parent[w];
                let next = if p == none { none } else { mate[p] };
                mate[w] = p;
                if p != none {
                    mate[p] = w;
                }
                w = next;
            }
        }
    }

    mate.into_iter()
        .map(|m| if m == usize::MAX { None } else { Some(m) })
        .collect()
}

/// Perfect matching of a cubic, bridgeless, loop-free multigraph. Parallel
/// edges are collapsed to their lowest-id representative before the search
/// (extra multiplicity never enlarges a matching) and mapped back after.
pub fn perfect_matching(h: &Multigraph) -> Result<Matching, MatchingError> {
    let n = h.n();
    if !n.is_multiple_of(2) {
        return Err(MatchingError::NoPerfectMatching);
    }
    let mut rep: std::collections::BTreeMap<(usize, usize), usize> =
        std::collections::BTreeMap::new();
    for (i, &(u, v)) in h.edges().iter().enumerate() {
        rep.entry((u.min(v), u.max(v))).or_insert(i);
    }
    let mate = maximum_matching(h);
    let mut edges = Vec::with_capacity(n / 2);
    for (v, m) in mate.iter().enumerate() {
        match m {
            None => return Err(MatchingError::NoPerfectMatching),
            Some(w) if v < *w => edges.push(rep[&(v, *w)]),
            Some(_) => {}
        }
    }
    Ok(Matching { edges })
}

/// Circuits of the complement of a perfect matching. Each vertex must have
/// exactly two complement edge slots; traversal picks the lowest unused
/// edge id first, starting from the lowest uncovered vertex.
pub fn two_factor(h: &Multigraph, m: &Matching) -> Result<CircuitFamily, MatchingError> {
    let mut in_matching = vec![false; h.m()];
    for &e in &m.edges {
        in_matching[e] = true;
    }
    for v in 0..h.n() {
        let degree = h
            .incident_edges(v)
            .iter()
            .filter(|&&e| !in_matching[e])
            .count();
        if degree != 2 {
            return Err(MatchingError::NotTwoRegular { vertex: v, degree });
        }
    }
    let mut used = vec![false; h.m()];
    let mut circuits = Vec::new();
    for start in 0..h.n() {
        let open = h
            .incident_edges(start)
            .iter()
            .any(|&e| !in_matching[e] && !used[e]);
        if !open {
            continue;
        }
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let mut v = start;
        loop {
            let e = *h
                .incident_edges(v)
                .iter()
                .find(|&&e| !in_matching[e] && !used[e])
                .expect("2-regular complement always continues");
            used[e] = true;
            edges.push(e);
            let w = h.other_endpoint(e, v);
            if w == start {
                break;
            }
            vertices.push(w);
            v = w;
        }
        circuits.push(Circuit { vertices, edges });
    }
    Ok(CircuitFamily {
        circuits,
        expanded: Vec::new(),
    })
}

/// Fills in the even circuits corresponding to each 2-factor circuit: per
/// h-vertex on the circuit, the ports of its two circuit edges appear
/// consecutively (joined by a triangle edge), giving a cycle of exactly
/// twice the original length.
pub fn expand_circuits(tr: &TriangleReplacement, family: &CircuitFamily) -> CircuitFamily {
    let port = |e: usize, v: usize| -> usize {
        let (a, _) = tr.h.endpoints(e);
        if a == v {
            tr.ports[e].0
        } else {
            tr.ports[e].1
        }
    };
    let expanded = family
        .circuits
        .iter()
        .map(|c| {
            let len = c.vertices.len();
            let mut cycle = Vec::with_capacity(2 * len);
            for i in 0..len {
                let v = c.vertices[i];
                let entering = c.edges[(i + len - 1) % len];
                let leaving = c.edges[i];
                cycle.push(port(entering, v));
                cycle.push(port(leaving, v));
            }
            cycle
        })
        .collect();
    CircuitFamily {
        circuits: family.circuits.clone(),
        expanded,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{decompose, OumDecomposition};
    use crate::generators::{gen_named, gen_random_bridgeless_cubic, gen_triangle_replacement};

    #[test]
    fn theta_matches_lowest_parallel_edge() {
        let h = gen_named("theta").unwrap();
        let m = perfect_matching(&h).unwrap();
        assert_eq!(m.edges, vec![0]);
    }

    #[test]
    fn k4_matches_two_disjoint_edges() {
        let h = gen_named("k4").unwrap();
        let m = perfect_matching(&h).unwrap();
        assert_eq!(m.edges.len(), 2);
        let (a, b) = (h.endpoints(m.edges[0]), h.endpoints(m.edges[1]));
        let mut all = vec![a.0, a.1, b.0, b.1];
        all.sort_unstable();
        assert_eq!(all, vec![0, 1, 2, 3]);
    }

    #[test]
    fn petersen_has_a_perfect_matching() {
        let h = gen_named("petersen").unwrap();
        let m = perfect_matching(&h).unwrap();
        assert_eq!(m.edges.len(), 5);
        let mut covered = [false; 10];
        for &e in &m.edges {
            let (u, v) = h.endpoints(e);
            assert!(
                !covered[u] && !covered[v],
                "matching edges must be disjoint"
            );
            covered[u] = true;
            covered[v] = true;
        }
        assert!(covered.iter().all(|&c| c));
    }

    // Brute-force oracle: search all edge subsets of size n/2 for a perfect
    // matching, completely independently of the blossom path.
    fn has_perfect_matching_brute(h: &Multigraph) -> bool {
        fn go(h: &Multigraph, covered: &mut Vec<bool>, from: usize) -> bool {
            let v = match covered.iter().position(|&c| !c) {
                None => return true,
                Some(v) => v,
            };
            for e in from..h.m() {
                let (a, b) = h.endpoints(e);
                if a != v && b != v {
                    continue;
                }
                let w = if a == v { b } else { a };
                if covered[w] {
                    continue;
                }
                covered[v] = true;
                covered[w] = true;
                if go(h, covered, 0) {
                    return true;
                }
                covered[v] = false;
                covered[w] = false;
            }
            false
        }
        go(h, &mut vec![false; h.n()], 0)
    }

    #[test]
    fn blossom_agrees_with_brute_force_on_petersen() {
        assert!(has_perfect_matching_brute(&gen_named("petersen").unwrap()));
    }

    #[test]
    fn blossom_handles_exposed_vertices() {
        // A triangle with a pendant path: maximum matching is 2, one vertex
        // stays exposed, so no perfect matching exists.
        let g = Multigraph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        assert_eq!(perfect_matching(&g), Err(MatchingError::NoPerfectMatching));
        assert!(!has_perfect_matching_brute(&g));
    }

    #[test]
    fn theta_two_factor_is_a_digon() {
        let h = gen_named("theta").unwrap();
        let m = perfect_matching(&h).unwrap();
        let family = two_factor(&h, &m).unwrap();
        assert_eq!(family.circuits.len(), 1);
        assert_eq!(family.circuits[0].vertices, vec![0, 1]);
        assert_eq!(family.circuits[0].edges, vec![1, 2]);
    }

    #[test]
    fn k4_two_factor_is_a_four_cycle() {
        let h = gen_named("k4").unwrap();
        let m = perfect_matching(&h).unwrap();
        let family = two_factor(&h, &m).unwrap();
        assert_eq!(family.circuits.len(), 1);
        assert_eq!(family.circuits[0].vertices.len(), 4);
    }

    #[test]
    fn petersen_two_factor_is_two_five_cycles() {
        let h = gen_named("petersen").unwrap();
        let m = perfect_matching(&h).unwrap();
        let family = two_factor(&h, &m).unwrap();
        let mut lengths: Vec<usize> = family.circuits.iter().map(|c| c.vertices.len()).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, vec![5, 5]);
    }

    #[test]
    fn two_factor_rejects_non_perfect_matching() {
        let h = gen_named("k4").unwrap();
        let bogus = Matching { edges: vec![0] };
        assert!(matches!(
            two_factor(&h, &bogus),
            Err(MatchingError::NotTwoRegular { .. })
        ));
    }

    #[test]
    fn matching_partitions_edges_of_random_multigraphs() {
        for seed in 0..30u64 {
            let h = gen_random_bridgeless_cubic(8, seed).unwrap();
            let m = perfect_matching(&h).unwrap();
            let family = two_factor(&h, &m).unwrap();
            let circuit_edges: usize = family.circuits.iter().map(|c| c.edges.len()).sum();
            assert_eq!(m.edges.len() + circuit_edges, h.m());
            let covered: usize = family.circuits.iter().map(|c| c.vertices.len()).sum();
            assert_eq!(covered, h.n());
        }
    }

    #[test]
    fn expanded_circuits_double_in_length() {
        let h = gen_named("theta").unwrap();
        let g = gen_triangle_replacement(&h).unwrap();
        let tr = match decompose(&g).unwrap() {
            OumDecomposition::TriangleReplaced(tr) => tr,
            other => panic!("expected triangle replacement, got {other:?}"),
        };
        let m = perfect_matching(&tr.h).unwrap();
        let family = expand_circuits(&tr, &two_factor(&tr.h, &m).unwrap());
        assert_eq!(family.expanded.len(), family.circuits.len());
        for (c, big) in family.circuits.iter().zip(&family.expanded) {
            assert_eq!(big.len(), 2 * c.vertices.len());
            // Consecutive expanded vertices alternate triangle edges and
            // h-edge images; both are edges of the replaced graph here
            // because no strings are present.
            for i in 0..big.len() {
                assert!(g.adjacent(big[i], big[(i + 1) % big.len()]));
            }
        }
    }

    #[test]
    fn deterministic_matching() {
        let h = gen_random_bridgeless_cubic(12, 7).unwrap();
        assert_eq!(perfect_matching(&h).unwrap(), perfect_matching(&h).unwrap());
    }
}

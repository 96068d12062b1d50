//! Exhaustive labelled-graph isomorphism for desk-scale multigraphs, plus a
//! cheap invariant screen for anything larger.

use crate::graph::Multigraph;

/// Adjacency multiplicity matrix.
fn mult_matrix(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut m = vec![vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        m[u][v] += 1;
        m[v][u] += 1;
    }
    m
}

fn degree_sequence(g: &Multigraph) -> Vec<usize> {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees
}

/// Order-and-size screen: vertex count, edge count, sorted degree sequence.
pub fn invariant_screen(a: &Multigraph, b: &Multigraph) -> bool {
    a.n() == b.n() && a.m() == b.m() && degree_sequence(a) == degree_sequence(b)
}

/// Exact isomorphism by backtracking over vertex maps with degree and
/// adjacency-multiplicity pruning. Exponential in the worst case; intended
/// for n up to around 16.
pub fn isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    if !invariant_screen(a, b) {
        return false;
    }
    let n = a.n();
    if n == 0 {
        return true;
    }
    let ma = mult_matrix(a);
    let mb = mult_matrix(b);

    // Map vertices of `a` in BFS order so each new vertex (after the first
    // of its component) has a mapped neighbour to prune against.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for (_, w) in a.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(&order, 0, &ma, &mb, a, b, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    order: &[usize],
    pos: usize,
    ma: &[Vec<usize>],
    mb: &[Vec<usize>],
    a: &Multigraph,
    b: &Multigraph,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if pos == order.len() {
        return true;
    }
    let u = order[pos];
    'candidates: for w in 0..b.n() {
        if used[w] || a.degree(u) != b.degree(w) {
            continue;
        }
        for &earlier in &order[..pos] {
            if ma[u][earlier] != mb[w][map[earlier]] {
                continue 'candidates;
            }
        }
        map[u] = w;
        used[w] = true;
        if backtrack(order, pos + 1, ma, mb, a, b, map, used) {
            return true;
        }
        map[u] = usize::MAX;
        used[w] = false;
    }
    false
}

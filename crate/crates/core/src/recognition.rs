//! Structural checks gating the constructive solver: connectivity, cubicity,
//! bridgelessness, claw-freeness, and diamond location.

use serde::Serialize;

use crate::graph::Multigraph;

/// An induced K1,3 witness: a centre with three pairwise non-adjacent
/// neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Claw {
    pub centre: usize,
    pub leaves: [usize; 3],
}

/// An induced K4-minus-an-edge. `outer` is the non-adjacent pair (each of
/// its vertices has one edge leaving the diamond); `inner` is the adjacent
/// pair (fully internal). Both pairs are stored ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Diamond {
    pub outer: [usize; 2],
    pub inner: [usize; 2],
}

impl Diamond {
    pub fn vertices(&self) -> [usize; 4] {
        [self.outer[0], self.outer[1], self.inner[0], self.inner[1]]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices().contains(&v)
    }
}

/// Aggregate of all solver preconditions plus located diamonds.
/// `claw_free` is `None` when the graph has parallel edges: claw-freeness is
/// a notion for simple graphs only, so the check is not applicable there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionReport {
    pub connected: bool,
    pub cubic: bool,
    pub bridges: Vec<usize>,
    pub claw_free: Option<bool>,
    pub claw_witness: Option<Claw>,
    pub diamonds: Vec<Diamond>,
}

impl RecognitionReport {
    /// True when the graph is a valid input for the constructive solver:
    /// simple, connected, cubic, bridgeless and claw-free.
    pub fn admissible(&self) -> bool {
        self.connected && self.cubic && self.bridges.is_empty() && self.claw_free == Some(true)
    }
}

/// All cut-edges, ascending by edge id. A parallel pair is never a bridge.
pub fn find_bridges(g: &Multigraph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut bridges = Vec::new();
    let mut timer = 0usize;

    // Iterative DFS; a frame is (vertex, entering edge id, next incident slot).
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, entering, idx) = (frame.0, frame.1, frame.2);
            if idx < g.incident_edges(v).len() {
                frame.2 += 1;
                let e = g.incident_edges(v)[idx];
                if e == entering {
                    // The tree edge itself; a parallel copy still counts as
                    // a back edge and clears the bridge below.
                    continue;
                }
                let w = g.other_endpoint(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(parent) = stack.last() {
                    let p = parent.0;
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridges.push(entering);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// First induced claw in vertex order, or `None`. Intended for simple
/// graphs; neighbour lists are deduplicated before the scan.
pub fn find_claw(g: &Multigraph) -> Option<Claw> {
    for v in 0..g.n() {
        let mut nbrs: Vec<usize> = g.neighbours(v).map(|(_, w)| w).collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        let k = nbrs.len();
        for i in 0..k {
            for j in i + 1..k {
                if g.adjacent(nbrs[i], nbrs[j]) {
                    continue;
                }
                for l in j + 1..k {
                    if !g.adjacent(nbrs[i], nbrs[l]) && !g.adjacent(nbrs[j], nbrs[l]) {
                        return Some(Claw {
                            centre: v,
                            leaves: [nbrs[i], nbrs[j], nbrs[l]],
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Multigraph) -> bool {
    find_claw(g).is_none()
}

/// All induced diamonds of a simple cubic graph, each reported once, in
/// ascending order of the edge joining its inner pair. In a cubic graph the
/// results are pairwise vertex-disjoint unless the graph is K4, which
/// contains no induced diamond at all.
pub fn find_diamonds(g: &Multigraph) -> Vec<Diamond> {
    debug_assert!(g.is_simple());
    let mut out = Vec::new();
    for e in 0..g.m() {
        let (x, y) = g.endpoints(e);
        let nx: Vec<usize> = g
            .neighbours(x)
            .map(|(_, w)| w)
            .filter(|&w| w != y)
            .collect();
        let mut common: Vec<usize> = g
            .neighbours(y)
            .map(|(_, w)| w)
            .filter(|&w| w != x && nx.contains(&w))
            .collect();
        common.sort_unstable();
        common.dedup();
        if common.len() == 2 && !g.adjacent(common[0], common[1]) {
            out.push(Diamond {
                outer: [common[0], common[1]],
                inner: [x.min(y), x.max(y)],
            });
        }
    }
    out
}

/// Runs every check. Claw-freeness and diamond location apply to simple
/// graphs only and are skipped (not failed) on multigraphs.
pub fn recognize(g: &Multigraph) -> RecognitionReport {
    let simple = g.is_simple();
    let cubic = g.is_cubic();
    let (claw_free, claw_witness) = if simple {
        match find_claw(g) {
            Some(claw) => (Some(false), Some(claw)),
            None => (Some(true), None),
        }
    } else {
        (None, None)
    };
    let diamonds = if simple && cubic {
        find_diamonds(g)
    } else {
        Vec::new()
    };
    RecognitionReport {
        connected: g.is_connected(),
        cubic,
        bridges: find_bridges(g),
        claw_free,
        claw_witness,
        diamonds,
    }
}

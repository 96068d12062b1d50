//! Structure of bridgeless claw-free cubic graphs: every such graph is K4,
//! a ring of diamonds, or a triangle replacement of a bridgeless cubic
//! multigraph with some edges expanded into strings of diamonds. This
//! module computes that structure and re-expands it back to a graph.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::generators;
use crate::graph::Multigraph;
use crate::iso;
use crate::recognition::{find_bridges, find_diamonds, Diamond};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    /// The input does not fit any structure variant; on graphs that passed
    /// recognition this indicates a bug or a corrupted input.
    #[error("structure violation: {0}")]
    StructureViolation(String),
    /// An explicitly built structure is internally inconsistent.
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
}

fn violation(msg: impl Into<String>) -> DecomposeError {
    DecomposeError::StructureViolation(msg.into())
}

/// A diamond with its non-adjacent pair oriented along the containing
/// string or ring: `entry` faces the previous element, `exit` the next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrientedDiamond {
    pub entry: usize,
    pub exit: usize,
    pub inner: [usize; 2],
}

impl OrientedDiamond {
    pub fn vertices(&self) -> [usize; 4] {
        [self.entry, self.exit, self.inner[0], self.inner[1]]
    }

    fn reversed(&self) -> OrientedDiamond {
        OrientedDiamond {
            entry: self.exit,
            exit: self.entry,
            inner: self.inner,
        }
    }
}

/// Maximal chain of diamonds replacing one h-edge, oriented from
/// `attach_u` to `attach_v`. Consecutive diamonds join exit to entry;
/// neither attach vertex lies in a diamond.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiamondString {
    pub attach_u: usize,
    pub attach_v: usize,
    pub diamonds: Vec<OrientedDiamond>,
}

impl DiamondString {
    /// The outer vertex carrying the edge to `attach_u`.
    pub fn entry_end(&self) -> usize {
        self.diamonds[0].entry
    }

    /// The outer vertex carrying the edge to `attach_v`.
    pub fn exit_end(&self) -> usize {
        self.diamonds[self.diamonds.len() - 1].exit
    }

    pub fn reversed(&self) -> DiamondString {
        DiamondString {
            attach_u: self.attach_v,
            attach_v: self.attach_u,
            diamonds: self.diamonds.iter().rev().map(|d| d.reversed()).collect(),
        }
    }
}

/// Triangle replacement data tying an underlying multigraph H to the
/// concrete graph it was recognized in.
///
/// `triangle_of[i]` lists the three graph vertices of h-vertex `i`'s
/// triangle; `ports[e]` gives, for h-edge `e = (u, v)`, the triangle vertex
/// of `u` and of `v` carrying that edge. Edges present in `strings` are
/// realized as diamond strings between their ports, all others as direct
/// edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleReplacement {
    pub h: Multigraph,
    pub triangle_of: Vec<[usize; 3]>,
    pub ports: Vec<(usize, usize)>,
    pub strings: BTreeMap<usize, DiamondString>,
}

/// The structure trichotomy for bridgeless claw-free cubic graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum OumDecomposition {
    K4,
    RingOfDiamonds { diamonds: Vec<OrientedDiamond> },
    TriangleReplaced(TriangleReplacement),
}

/// The unique neighbour of outer vertex `o` outside its diamond.
fn external_neighbour(g: &Multigraph, d: &Diamond, o: usize) -> Result<usize, DecomposeError> {
    let mut ext = None;
    for (_, w) in g.neighbours(o) {
        if !d.inner.contains(&w) {
            if ext.is_some() {
                return Err(violation(format!(
                    "outer vertex {o} has two external edges"
                )));
            }
            ext = Some(w);
        }
    }
    ext.ok_or_else(|| violation(format!("outer vertex {o} has no external edge")))
}

fn other_outer(d: &Diamond, o: usize) -> usize {
    if d.outer[0] == o {
        d.outer[1]
    } else {
        d.outer[0]
    }
}

/// Computes the structure of a simple, connected, cubic, bridgeless,
/// claw-free graph. Inputs violating those preconditions surface as
/// `StructureViolation`.
pub fn decompose(g: &Multigraph) -> Result<OumDecomposition, DecomposeError> {
    if g.n() == 0 {
        return Err(violation("empty graph"));
    }
    if !g.is_simple() {
        return Err(violation("input has parallel edges"));
    }
    if !g.is_cubic() {
        return Err(violation("input is not cubic"));
    }
    if !g.is_connected() {
        return Err(violation("input is disconnected"));
    }
    if g.n() == 4 {
        // The only simple cubic graph on four vertices.
        return Ok(OumDecomposition::K4);
    }

    let diamonds = find_diamonds(g);
    let mut dia_of = vec![usize::MAX; g.n()];
    for (i, d) in diamonds.iter().enumerate() {
        for v in d.vertices() {
            if dia_of[v] != usize::MAX {
                return Err(violation(format!("vertex {v} lies in two diamonds")));
            }
            dia_of[v] = i;
        }
    }

    if !diamonds.is_empty() && dia_of.iter().all(|&d| d != usize::MAX) {
        let ring = order_ring(g, &diamonds, &dia_of)?;
        return Ok(OumDecomposition::RingOfDiamonds { diamonds: ring });
    }

    triangle_replaced(g, &diamonds, &dia_of).map(OumDecomposition::TriangleReplaced)
}

/// Orders the diamonds of a fully covered graph cyclically by following
/// external edges.
fn order_ring(
    g: &Multigraph,
    diamonds: &[Diamond],
    dia_of: &[usize],
) -> Result<Vec<OrientedDiamond>, DecomposeError> {
    let k = diamonds.len();
    if k < 2 {
        return Err(violation("a single diamond cannot cover a cubic graph"));
    }
    let mut visited = vec![false; k];
    let mut ordered = Vec::with_capacity(k);
    let mut current = 0usize;
    let mut entry = diamonds[0].outer[0];
    loop {
        visited[current] = true;
        let d = &diamonds[current];
        let exit = other_outer(d, entry);
        ordered.push(OrientedDiamond {
            entry,
            exit,
            inner: d.inner,
        });
        let next_vertex = external_neighbour(g, d, exit)?;
        let next = dia_of[next_vertex];
        if next == usize::MAX || !diamonds[next].outer.contains(&next_vertex) {
            return Err(violation("ring walk left the outer vertices"));
        }
        if next == 0 {
            if next_vertex != diamonds[0].outer[0] {
                return Err(violation("ring closes on the wrong outer vertex"));
            }
            break;
        }
        if visited[next] {
            return Err(violation("ring walk revisited a diamond"));
        }
        current = next;
        entry = next_vertex;
    }
    if ordered.len() != k {
        return Err(violation("diamonds form more than one ring"));
    }
    Ok(ordered)
}

/// Extracts maximal diamond strings, partitions the rest into triangles,
/// and contracts each triangle to a vertex of H.
fn triangle_replaced(
    g: &Multigraph,
    diamonds: &[Diamond],
    dia_of: &[usize],
) -> Result<TriangleReplacement, DecomposeError> {
    let n = g.n();

    // Maximal strings: walk each unvisited diamond back to the end whose
    // neighbour is a non-diamond vertex, then collect forwards.
    let mut visited = vec![false; diamonds.len()];
    let mut strings: Vec<DiamondString> = Vec::new();
    for start in 0..diamonds.len() {
        if visited[start] {
            continue;
        }
        let mut cur = start;
        let mut back_via = diamonds[start].outer[0];
        let mut steps = 0usize;
        let (first, first_entry, attach_u) = loop {
            steps += 1;
            if steps > diamonds.len() + 1 {
                return Err(violation("diamond cycle outside a ring"));
            }
            let nb = external_neighbour(g, &diamonds[cur], back_via)?;
            let nd = dia_of[nb];
            if nd == usize::MAX {
                break (cur, back_via, nb);
            }
            if !diamonds[nd].outer.contains(&nb) {
                return Err(violation("string walk entered an inner vertex"));
            }
            back_via = other_outer(&diamonds[nd], nb);
            cur = nd;
        };
        let mut chain = Vec::new();
        let mut cur = first;
        let mut entry = first_entry;
        let attach_v = loop {
            if visited[cur] {
                return Err(violation("diamond assigned to two strings"));
            }
            visited[cur] = true;
            let d = &diamonds[cur];
            let exit = other_outer(d, entry);
            chain.push(OrientedDiamond {
                entry,
                exit,
                inner: d.inner,
            });
            let nb = external_neighbour(g, d, exit)?;
            let nd = dia_of[nb];
            if nd == usize::MAX {
                break nb;
            }
            if !diamonds[nd].outer.contains(&nb) {
                return Err(violation("string walk entered an inner vertex"));
            }
            entry = nb;
            cur = nd;
        };
        strings.push(DiamondString {
            attach_u,
            attach_v,
            diamonds: chain,
        });
    }

    // Triangle partition of the non-diamond vertices. A vertex in two
    // triangles would close a diamond or K4, both already excluded, so the
    // adjacent pair among each vertex's neighbours is unique.
    let remaining: Vec<usize> = (0..n).filter(|&v| dia_of[v] == usize::MAX).collect();
    let mut tri_of = vec![usize::MAX; n];
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    for &v in &remaining {
        if tri_of[v] != usize::MAX {
            continue;
        }
        let nbrs: Vec<usize> = g
            .neighbours(v)
            .map(|(_, w)| w)
            .filter(|&w| dia_of[w] == usize::MAX)
            .collect();
        let mut pair = None;
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if g.adjacent(nbrs[i], nbrs[j]) {
                    if pair.is_some() {
                        return Err(violation(format!("vertex {v} lies in two triangles")));
                    }
                    pair = Some((nbrs[i], nbrs[j]));
                }
            }
        }
        let (p, q) = pair.ok_or_else(|| violation(format!("vertex {v} lies in no triangle")))?;
        if tri_of[p] != usize::MAX || tri_of[q] != usize::MAX {
            return Err(violation("triangles overlap"));
        }
        let t = triangles.len();
        tri_of[v] = t;
        tri_of[p] = t;
        tri_of[q] = t;
        let mut tri = [v, p, q];
        tri.sort_unstable();
        triangles.push(tri);
    }

    // Contract triangles to H-vertices. Scanning ports in ascending vertex
    // id fixes h-edge ids and orients every string from its lower attach
    // vertex.
    let mut end_at: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
    for (si, s) in strings.iter().enumerate() {
        if end_at.insert(s.attach_u, (si, true)).is_some()
            || end_at.insert(s.attach_v, (si, false)).is_some()
        {
            return Err(violation("attach vertex carries two string ends"));
        }
    }
    let mut h_edges: Vec<(usize, usize)> = Vec::new();
    let mut ports: Vec<(usize, usize)> = Vec::new();
    let mut edge_done = vec![false; g.m()];
    let mut string_done = vec![false; strings.len()];
    let mut string_by_hedge: BTreeMap<usize, DiamondString> = BTreeMap::new();
    for &p in &remaining {
        let mates = triangles[tri_of[p]];
        let mut externals = g.neighbours(p).filter(|&(_, w)| !mates.contains(&w));
        let (e_id, w) = externals
            .next()
            .ok_or_else(|| violation(format!("triangle vertex {p} has no external edge")))?;
        if externals.next().is_some() {
            return Err(violation(format!(
                "triangle vertex {p} has two external edges"
            )));
        }
        if dia_of[w] == usize::MAX {
            if edge_done[e_id] {
                continue;
            }
            edge_done[e_id] = true;
            if tri_of[w] == tri_of[p] {
                return Err(violation("direct h-edge inside one triangle"));
            }
            h_edges.push((tri_of[p], tri_of[w]));
            ports.push((p, w));
        } else {
            let &(si, from_u) = end_at
                .get(&p)
                .ok_or_else(|| violation(format!("vertex {p} borders a diamond mid-string")))?;
            if string_done[si] {
                continue;
            }
            string_done[si] = true;
            let s = &strings[si];
            let far = if from_u { s.attach_v } else { s.attach_u };
            if tri_of[far] == usize::MAX {
                return Err(violation("string attaches to a diamond vertex"));
            }
            if tri_of[far] == tri_of[p] {
                return Err(violation("string joins a triangle to itself"));
            }
            let oriented = if from_u { s.clone() } else { s.reversed() };
            string_by_hedge.insert(h_edges.len(), oriented);
            h_edges.push((tri_of[p], tri_of[far]));
            ports.push((p, far));
        }
    }

    let h = Multigraph::new(triangles.len(), h_edges)
        .map_err(|e| violation(format!("contracted multigraph is invalid: {e}")))?;
    if !h.is_cubic() {
        return Err(violation("contracted multigraph is not cubic"));
    }
    if !h.is_connected() {
        return Err(violation("contracted multigraph is disconnected"));
    }
    if !find_bridges(&h).is_empty() {
        return Err(violation("contracted multigraph has a bridge"));
    }
    let diamond_total: usize = strings.iter().map(|s| s.diamonds.len()).sum();
    if 3 * triangles.len() + 4 * diamond_total != n {
        return Err(violation("vertex count mismatch after contraction"));
    }

    Ok(TriangleReplacement {
        h,
        triangle_of: triangles,
        ports,
        strings: string_by_hedge,
    })
}

/// Rebuilds a concrete graph from a structure, with canonical labels:
/// h-vertex `i` becomes `3i, 3i+1, 3i+2`, string vertices are appended in
/// h-edge order. The result is isomorphic to any graph the structure was
/// recognized in, not necessarily identically labelled.
pub fn expand(d: &OumDecomposition) -> Result<Multigraph, DecomposeError> {
    match d {
        OumDecomposition::K4 => Ok(Multigraph::new(
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        )
        .expect("K4 is well-formed")),
        OumDecomposition::RingOfDiamonds { diamonds } => {
            generators::gen_ring_of_diamonds(diamonds.len())
                .map_err(|e| DecomposeError::InvalidStructure(e.to_string()))
        }
        OumDecomposition::TriangleReplaced(tr) => {
            if !tr.h.is_cubic() {
                return Err(DecomposeError::InvalidStructure("H is not cubic".into()));
            }
            if !tr.h.is_connected() {
                return Err(DecomposeError::InvalidStructure("H is disconnected".into()));
            }
            if !find_bridges(&tr.h).is_empty() {
                return Err(DecomposeError::InvalidStructure("H has a bridge".into()));
            }
            let mut sizes = BTreeMap::new();
            for (&e, s) in &tr.strings {
                if e >= tr.h.m() {
                    return Err(DecomposeError::InvalidStructure(format!(
                        "string on nonexistent h-edge {e}"
                    )));
                }
                if s.diamonds.is_empty() {
                    return Err(DecomposeError::InvalidStructure(
                        "empty diamond string".into(),
                    ));
                }
                sizes.insert(e, s.diamonds.len());
            }
            Ok(generators::triangle_replacement_parts(&tr.h, &sizes).0)
        }
    }
}

const EXACT_ISO_LIMIT: usize = 16;

/// Decomposes, re-expands, and compares with the input: exact isomorphism
/// up to 16 vertices, an invariant screen (order, size, degree sequence,
/// diamond count) beyond.
pub fn roundtrip_check(g: &Multigraph) -> Result<bool, DecomposeError> {
    let expanded = expand(&decompose(g)?)?;
    if g.n() <= EXACT_ISO_LIMIT {
        Ok(iso::isomorphic(g, &expanded))
    } else {
        Ok(iso::invariant_screen(g, &expanded)
            && find_diamonds(g).len() == find_diamonds(&expanded).len())
    }
}

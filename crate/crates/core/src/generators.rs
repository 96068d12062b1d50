//! Fixture and instance generators: named graphs, rings of diamonds,
//! triangle replacements, diamond-string insertions, and seeded random
//! bridgeless cubic multigraphs.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::Multigraph;
use crate::recognition::find_bridges;
use crate::rng::SplitMix64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("size {got} is too small (minimum {required})")]
    TooSmall { required: usize, got: usize },
    #[error("no edge with id {edge}")]
    NoSuchEdge { edge: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("generation failed after {attempts} attempts")]
    GenerationFailed { attempts: usize },
}

/// Canonical labelled copies of the named fixtures: `k4`, `petersen`,
/// `prism`, `theta`.
pub fn gen_named(name: &str) -> Result<Multigraph, GeneratorError> {
    let g = match name {
        "k4" => Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "petersen" => Multigraph::new(
            10,
            vec![
                // outer cycle
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                // spokes
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                // inner pentagram
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        ),
        "prism" => Multigraph::new(
            6,
            vec![
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (3, 5),
                (4, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        ),
        "theta" => Multigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]),
        other => return Err(GeneratorError::UnknownName(other.to_string())),
    };
    Ok(g.expect("named fixtures are well-formed"))
}

/// Ring of `k >= 2` diamonds, n = 4k. Diamond `d` occupies vertices
/// `4d..4d+4` as (entry, exit, inner, inner); exit `d` links to entry `d+1`
/// cyclically.
pub fn gen_ring_of_diamonds(k: usize) -> Result<Multigraph, GeneratorError> {
    if k < 2 {
        return Err(GeneratorError::TooSmall {
            required: 2,
            got: k,
        });
    }
    let mut edges = Vec::with_capacity(6 * k);
    for d in 0..k {
        let base = 4 * d;
        edges.extend_from_slice(&diamond_edges(base));
    }
    for d in 0..k {
        edges.push((4 * d + 1, 4 * ((d + 1) % k)));
    }
    Ok(Multigraph::new(4 * k, edges).expect("ring construction is well-formed"))
}

/// Internal edges of a diamond rooted at `base`: entry = base,
/// exit = base + 1, inner pair = base + 2, base + 3.
fn diamond_edges(base: usize) -> [(usize, usize); 5] {
    [
        (base, base + 2),
        (base, base + 3),
        (base + 2, base + 3),
        (base + 2, base + 1),
        (base + 3, base + 1),
    ]
}

/// Canonical triangle replacement with optional diamond strings, shared by
/// the generator and by structure expansion. `string_sizes` maps h-edge ids
/// to diamond counts (k >= 1).
///
/// Labelling: h-vertex `i` becomes the triangle `3i, 3i+1, 3i+2`; h-edges in
/// id order claim triangle ports in order; string vertices are appended
/// after all triangles, four per diamond, in h-edge id order.
///
/// Returns the graph plus the triangle map and the per-h-edge port pair.
pub(crate) fn triangle_replacement_parts(
    h: &Multigraph,
    string_sizes: &BTreeMap<usize, usize>,
) -> (Multigraph, Vec<[usize; 3]>, Vec<(usize, usize)>) {
    let hn = h.n();
    let mut edges = Vec::new();
    let mut triangle_of = Vec::with_capacity(hn);
    for i in 0..hn {
        let b = 3 * i;
        triangle_of.push([b, b + 1, b + 2]);
        edges.push((b, b + 1));
        edges.push((b, b + 2));
        edges.push((b + 1, b + 2));
    }
    // Each h-edge claims the next free port of each endpoint triangle.
    let mut next_port = vec![0usize; hn];
    let mut ports = Vec::with_capacity(h.m());
    for &(u, v) in h.edges() {
        let pu = 3 * u + next_port[u];
        next_port[u] += 1;
        let pv = 3 * v + next_port[v];
        next_port[v] += 1;
        ports.push((pu, pv));
    }
    let mut next_vertex = 3 * hn;
    for (e, &(pu, pv)) in ports.iter().enumerate() {
        match string_sizes.get(&e) {
            None => edges.push((pu, pv)),
            Some(&k) => {
                append_string_edges(&mut edges, pu, pv, next_vertex, k);
                next_vertex += 4 * k;
            }
        }
    }
    let g = Multigraph::new(next_vertex, edges).expect("replacement construction is well-formed");
    (g, triangle_of, ports)
}

/// Appends the edges of a string of `k` diamonds between ports `pu` and
/// `pv`, with fresh vertices starting at `base`.
fn append_string_edges(
    edges: &mut Vec<(usize, usize)>,
    pu: usize,
    pv: usize,
    base: usize,
    k: usize,
) {
    debug_assert!(k >= 1);
    edges.push((pu, base));
    for d in 0..k {
        let b = base + 4 * d;
        edges.extend_from_slice(&diamond_edges(b));
        if d + 1 < k {
            edges.push((b + 1, b + 4));
        }
    }
    edges.push((base + 4 * (k - 1) + 1, pv));
}

/// Replaces each vertex of a cubic, connected, bridgeless multigraph with a
/// triangle. The result is always simple, even when `h` has parallel edges.
pub fn gen_triangle_replacement(h: &Multigraph) -> Result<Multigraph, GeneratorError> {
    if !h.is_cubic() {
        return Err(GeneratorError::PreconditionFailed(
            "input is not cubic".into(),
        ));
    }
    if !h.is_connected() {
        return Err(GeneratorError::PreconditionFailed(
            "input is not connected".into(),
        ));
    }
    if !find_bridges(h).is_empty() {
        return Err(GeneratorError::PreconditionFailed(
            "input has a bridge".into(),
        ));
    }
    Ok(triangle_replacement_parts(h, &BTreeMap::new()).0)
}

/// Replaces edge `edge` of `g` by a string of `k >= 1` diamonds. The
/// remaining edges keep their relative order; the 4k new vertices and the
/// string edges are appended at the end.
pub fn gen_insert_string(
    g: &Multigraph,
    edge: usize,
    k: usize,
) -> Result<Multigraph, GeneratorError> {
    if edge >= g.m() {
        return Err(GeneratorError::NoSuchEdge { edge });
    }
    if k < 1 {
        return Err(GeneratorError::TooSmall {
            required: 1,
            got: k,
        });
    }
    let (u, v) = g.endpoints(edge);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != edge)
        .map(|(_, &e)| e)
        .collect();
    append_string_edges(&mut edges, u, v, g.n(), k);
    Ok(Multigraph::new(g.n() + 4 * k, edges).expect("string insertion is well-formed"))
}

const RANDOM_CUBIC_MAX_ATTEMPTS: usize = 100_000;

/// Seeded random connected bridgeless cubic multigraph on `n >= 2` (even)
/// vertices, by the configuration model: pair 3n stubs uniformly, reject
/// pairings with loops, resample until connected and bridgeless.
pub fn gen_random_bridgeless_cubic(n: usize, seed: u64) -> Result<Multigraph, GeneratorError> {
    if !n.is_multiple_of(2) {
        return Err(GeneratorError::PreconditionFailed(
            "order must be even".into(),
        ));
    }
    if n < 2 {
        return Err(GeneratorError::TooSmall {
            required: 2,
            got: n,
        });
    }
    let mut rng = SplitMix64::new(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
    for attempt in 1..=RANDOM_CUBIC_MAX_ATTEMPTS {
        rng.shuffle(&mut stubs);
        let mut edges = Vec::with_capacity(3 * n / 2);
        let mut ok = true;
        for pair in stubs.chunks_exact(2) {
            if pair[0] == pair[1] {
                ok = false;
                break;
            }
            edges.push((pair[0], pair[1]));
        }
        if !ok {
            continue;
        }
        let g = Multigraph::new(n, edges).expect("pairing without loops is well-formed");
        if g.is_connected() && find_bridges(&g).is_empty() {
            return Ok(g);
        }
        let _ = attempt;
    }
    Err(GeneratorError::GenerationFailed {
        attempts: RANDOM_CUBIC_MAX_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::{find_diamonds, is_claw_free, recognize};

    #[test]
    fn named_k4() {
        let g = gen_named("k4").unwrap();
        assert_eq!((g.n(), g.m()), (4, 6));
        assert!(g.is_cubic());
    }

    #[test]
    fn named_petersen() {
        let g = gen_named("petersen").unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.is_cubic());
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn named_theta() {
        let g = gen_named("theta").unwrap();
        assert_eq!((g.n(), g.m()), (2, 3));
        assert_eq!(g.multiplicity(0, 1), 3);
    }

    #[test]
    fn named_unknown() {
        assert_eq!(
            gen_named("moebius"),
            Err(GeneratorError::UnknownName("moebius".into()))
        );
    }

    #[test]
    fn ring_sizes_and_structure() {
        for k in 2..=5 {
            let g = gen_ring_of_diamonds(k).unwrap();
            assert_eq!(g.n(), 4 * k);
            let report = recognize(&g);
            assert!(report.admissible(), "ring of {k} must be admissible");
            assert_eq!(report.diamonds.len(), k);
        }
        assert_eq!(
            gen_ring_of_diamonds(1),
            Err(GeneratorError::TooSmall {
                required: 2,
                got: 1
            })
        );
    }

    #[test]
    fn triangle_replacement_of_theta_is_prism() {
        let h = gen_named("theta").unwrap();
        let g = gen_triangle_replacement(&h).unwrap();
        assert_eq!(g.n(), 6);
        let prism = gen_named("prism").unwrap();
        assert!(crate::iso::isomorphic(&g, &prism));
    }

    #[test]
    fn triangle_replacement_of_k4() {
        let h = gen_named("k4").unwrap();
        let g = gen_triangle_replacement(&h).unwrap();
        assert_eq!(g.n(), 12);
        let report = recognize(&g);
        assert!(report.admissible());
        assert!(report.diamonds.is_empty());
    }

    #[test]
    fn triangle_replacement_is_simple_for_multigraph_input() {
        let h = gen_named("theta").unwrap();
        let g = gen_triangle_replacement(&h).unwrap();
        assert!(g.is_simple());
    }

    #[test]
    fn triangle_replacement_rejects_non_cubic() {
        let path = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert!(matches!(
            gen_triangle_replacement(&path),
            Err(GeneratorError::PreconditionFailed(_))
        ));
    }

    #[test]
    fn insert_string_on_prism_matching_edge() {
        let prism = gen_named("prism").unwrap();
        // Edge 6 is (0, 3), one of the matching edges between the triangles.
        let g = gen_insert_string(&prism, 6, 1).unwrap();
        assert_eq!(g.n(), 10);
        assert!(recognize(&g).admissible());
        assert!(!g.adjacent(0, 3));
    }

    #[test]
    fn insert_two_diamonds() {
        let prism = gen_named("prism").unwrap();
        let g = gen_insert_string(&prism, 6, 2).unwrap();
        assert_eq!(g.n(), 14);
        assert!(recognize(&g).admissible());
        assert_eq!(find_diamonds(&g).len(), 2);
    }

    #[test]
    fn insert_string_missing_edge() {
        let prism = gen_named("prism").unwrap();
        assert_eq!(
            gen_insert_string(&prism, 99, 1),
            Err(GeneratorError::NoSuchEdge { edge: 99 })
        );
    }

    #[test]
    fn ring_is_claw_free() {
        assert!(is_claw_free(&gen_ring_of_diamonds(4).unwrap()));
    }

    #[test]
    fn random_cubic_properties() {
        for n in [4usize, 6, 10] {
            for seed in 0..10u64 {
                let g = gen_random_bridgeless_cubic(n, seed).unwrap();
                assert_eq!(g.n(), n);
                assert!(g.is_cubic());
                assert!(g.is_connected());
                assert!(find_bridges(&g).is_empty());
            }
        }
    }

    #[test]
    fn random_cubic_is_seed_deterministic() {
        let a = gen_random_bridgeless_cubic(10, 99).unwrap();
        let b = gen_random_bridgeless_cubic(10, 99).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn random_cubic_rejects_odd_order() {
        assert!(matches!(
            gen_random_bridgeless_cubic(5, 1),
            Err(GeneratorError::PreconditionFailed(_))
        ));
    }
}

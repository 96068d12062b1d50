//! Exhaustive k-bisection search for arbitrary graphs at small orders.
//! Independent ground truth for the constructive solver: an absence answer
//! means no k-bisection exists, full stop.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Colour, Colouring, Multigraph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("order {n} is odd, no bisection can be balanced")]
    OddOrder { n: usize },
    #[error("order {n} exceeds the search cap {cap}")]
    OverCap { n: usize, cap: usize },
}

/// Size of the search tree actually explored.
#[derive(Debug, Clone, Serialize)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub solutions_found: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

pub const DEFAULT_SEARCH_CAP: usize = 24;
pub const DEFAULT_COUNT_CAP: usize = 16;

/// Finds a k-bisection or proves none exists, at the default cap.
pub fn search_k_bisection(
    g: &Multigraph,
    k: usize,
) -> Result<(Option<Colouring>, SearchStats), OracleError> {
    search_k_bisection_capped(g, k, DEFAULT_SEARCH_CAP)
}

pub fn search_k_bisection_capped(
    g: &Multigraph,
    k: usize,
    cap: usize,
) -> Result<(Option<Colouring>, SearchStats), OracleError> {
    let (witness, stats) = run(g, k, cap, Some(1))?;
    Ok((witness, stats))
}

/// Exact number of labelled k-bisections (colour swaps counted
/// separately), at the default counting cap.
pub fn count_k_bisections(g: &Multigraph, k: usize) -> Result<u64, OracleError> {
    count_k_bisections_capped(g, k, DEFAULT_COUNT_CAP)
}

pub fn count_k_bisections_capped(g: &Multigraph, k: usize, cap: usize) -> Result<u64, OracleError> {
    let (_, stats) = run(g, k, cap, None)?;
    Ok(stats.solutions_found)
}

/// Backtracking over vertex colour assignments in BFS order from vertex 0,
/// pruning a branch as soon as a colour class exceeds n/2 or a
/// monochromatic component exceeds k. The first vertex is fixed Black;
/// colour symmetry restores the other half (totals are doubled, and a
/// witness loses nothing).
fn run(
    g: &Multigraph,
    k: usize,
    cap: usize,
    solution_limit: Option<u64>,
) -> Result<(Option<Colouring>, SearchStats), OracleError> {
    let n = g.n();
    if !n.is_multiple_of(2) {
        return Err(OracleError::OddOrder { n });
    }
    if n > cap {
        return Err(OracleError::OverCap { n, cap });
    }
    let started = Instant::now();
    if n == 0 {
        // The empty colouring is the unique (vacuous) k-bisection.
        return Ok((
            Some(Colouring::new(Vec::new())),
            SearchStats {
                nodes_explored: 1,
                solutions_found: 1,
                elapsed: started.elapsed(),
            },
        ));
    }

    // BFS order keeps partially built monochromatic components connected
    // early, which is what makes the <= k prune bite.
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
            for (_, w) in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut search = Search {
        g,
        k,
        order,
        half: n / 2,
        assignment: vec![None; n],
        counts: [0, 0],
        nodes: 0,
        solutions: 0,
        limit: solution_limit,
        witness: None,
    };
    search.descend(0);

    let witness = search.witness.take().map(Colouring::new);
    let doubled = match solution_limit {
        // Counting run: each root-Black solution pairs with its swap.
        None => search.solutions * 2,
        Some(_) => search.solutions,
    };
    Ok((
        witness,
        SearchStats {
            nodes_explored: search.nodes,
            solutions_found: doubled,
            elapsed: started.elapsed(),
        },
    ))
}

struct Search<'a> {
    g: &'a Multigraph,
    k: usize,
    order: Vec<usize>,
    half: usize,
    assignment: Vec<Option<Colour>>,
    counts: [usize; 2],
    nodes: u64,
    solutions: u64,
    limit: Option<u64>,
    witness: Option<Vec<Colour>>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.solutions >= l)
    }

    fn descend(&mut self, pos: usize) {
        if self.done() {
            return;
        }
        if pos == self.order.len() {
            self.solutions += 1;
            if self.witness.is_none() {
                self.witness = Some(
                    self.assignment
                        .iter()
                        .map(|c| c.expect("complete assignment"))
                        .collect(),
                );
            }
            return;
        }
        let v = self.order[pos];
        let palette: &[Colour] = if pos == 0 {
            &[Colour::Black]
        } else {
            &[Colour::Black, Colour::White]
        };
        for &colour in palette {
            self.nodes += 1;
            let class = colour as usize;
            if self.counts[class] + 1 > self.half {
                continue;
            }
            self.assignment[v] = Some(colour);
            self.counts[class] += 1;
            if self.component_order_at(v, colour) <= self.k {
                self.descend(pos + 1);
            }
            self.counts[class] -= 1;
            self.assignment[v] = None;
            if self.done() {
                return;
            }
        }
    }

    /// Order of the monochromatic component containing `v` among assigned
    /// vertices. Bounded exploration: every previously checked component
    /// already has order at most k, so this walk stops quickly.
    fn component_order_at(&self, v: usize, colour: Colour) -> usize {
        let mut stack = vec![v];
        let mut seen = std::collections::BTreeSet::from([v]);
        while let Some(u) = stack.pop() {
            if seen.len() > self.k {
                break;
            }
            for (_, w) in self.g.neighbours(u) {
                if self.assignment[w] == Some(colour) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len()
    }
}

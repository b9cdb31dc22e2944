//! The 16 lines on the surface and their incidence structure.
//!
//! The lines fall into three families: the five exceptional curves `E₁..E₅`,
//! the ten strict transforms `F_ij` of the lines through two of the blown-up
//! points, and the strict transform `G` of the conic through all five. The
//! canonical order used everywhere in this crate is `E₁..E₅`, then `F₁₂..F₄₅`
//! lexicographic, then `G`.

use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{multiplicity_box, DivisorClass};

/// Which of the three families a line belongs to. Indices are 1-based and
/// `Secant(i, j)` always has `i < j`.
///
/// The derived ordering is the canonical line order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineKind {
    Exceptional(usize),
    Secant(usize, usize),
    Conic,
}

impl LineKind {
    /// All 16 kinds in canonical order.
    pub fn all() -> [LineKind; 16] {
        let mut kinds = [LineKind::Conic; 16];
        let mut n = 0;
        for i in 1..=5 {
            kinds[n] = LineKind::Exceptional(i);
            n += 1;
        }
        for i in 1..=5 {
            for j in (i + 1)..=5 {
                kinds[n] = LineKind::Secant(i, j);
                n += 1;
            }
        }
        debug_assert_eq!(n, 15);
        kinds
    }

    /// The divisor class of this line.
    pub fn class(self) -> DivisorClass {
        match self {
            LineKind::Exceptional(i) => DivisorClass::exceptional(i),
            LineKind::Secant(i, j) => DivisorClass::secant(i, j),
            LineKind::Conic => DivisorClass::conic(),
        }
    }

    /// Position in the canonical order, `0..16`.
    pub fn canonical_index(self) -> usize {
        match self {
            LineKind::Exceptional(i) => i - 1,
            // pairs (1,2)..(4,5) in lexicographic order after the five E's
            LineKind::Secant(i, j) => 5 + (i - 1) * (10 - i) / 2 + (j - i - 1),
            LineKind::Conic => 15,
        }
    }
}

/// Labels `E1..E5`, `F12..F45`, `G`.
impl fmt::Display for LineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineKind::Exceptional(i) => write!(f, "E{i}"),
            LineKind::Secant(i, j) => write!(f, "F{i}{j}"),
            LineKind::Conic => write!(f, "G"),
        }
    }
}

/// Error: the class is not one of the 16 line classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotALine(pub DivisorClass);

impl fmt::Display for NotALine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} is not one of the 16 line classes", self.0)
    }
}

impl core::error::Error for NotALine {}

/// The 16 line classes in canonical order.
pub fn canonical_lines() -> [DivisorClass; 16] {
    LineKind::all().map(LineKind::class)
}

/// Find all lines on the surface by bounded brute force.
///
/// Sweeps `a ∈ 0..=2` (the Cauchy–Schwarz bound on the plane degree of a
/// line) and `bᵢ ∈ −1..=2`, keeping every class with degree 1 and
/// self-intersection −1. The search box deliberately overshoots on both
/// sides so the test suite verifies the bound rather than assuming it.
/// Returns the classes in canonical order and panics if the census does not
/// come out to exactly 16.
pub fn enumerate_lines() -> Vec<DivisorClass> {
    let mut found: Vec<DivisorClass> = Vec::new();
    for a in 0..=2 {
        for b in multiplicity_box(-1, 2) {
            let class = DivisorClass::new(a, b);
            if class.degree() == 1 && class.self_intersection() == -1 {
                found.push(class);
            }
        }
    }
    found.sort_by_key(|&class| {
        classify_line(class)
            .expect("line search hit a class outside the three known families")
            .canonical_index()
    });
    assert_eq!(found.len(), 16, "line census must find exactly 16 classes");
    found
}

/// Classify a class as one of the 16 lines, by coordinate pattern.
pub fn classify_line(class: DivisorClass) -> Result<LineKind, NotALine> {
    let kind = match class.a {
        0 => single_negative_slot(class.b).map(LineKind::Exceptional),
        1 => unit_pair(class.b).map(|(i, j)| LineKind::Secant(i, j)),
        2 if class.b == [1; 5] => Some(LineKind::Conic),
        _ => None,
    };
    kind.ok_or(NotALine(class))
}

/// `Some(i)` iff exactly one entry is −1 and the rest are 0 (1-based).
fn single_negative_slot(b: [i64; 5]) -> Option<usize> {
    let mut hit = None;
    for (i, &bi) in b.iter().enumerate() {
        match bi {
            0 => {}
            -1 if hit.is_none() => hit = Some(i + 1),
            _ => return None,
        }
    }
    hit
}

/// `Some((i, j))` with `i < j` iff exactly two entries are 1 and the rest 0.
fn unit_pair(b: [i64; 5]) -> Option<(usize, usize)> {
    let mut first = None;
    let mut second = None;
    for (i, &bi) in b.iter().enumerate() {
        match bi {
            0 => {}
            1 if first.is_none() => first = Some(i + 1),
            1 if second.is_none() => second = Some(i + 1),
            _ => return None,
        }
    }
    Some((first?, second?))
}

/// The incidence graph of the 16 lines: vertices in canonical order, an edge
/// wherever two distinct lines meet (pairing 1).
#[derive(Clone, Debug)]
pub struct IncidenceGraph {
    lines: [DivisorClass; 16],
    adjacency: [[bool; 16]; 16],
}

impl IncidenceGraph {
    /// Build the graph, checking that distinct lines pair to 0 or 1 only.
    pub fn new() -> Self {
        let lines = canonical_lines();
        let mut adjacency = [[false; 16]; 16];
        for i in 0..16 {
            for j in 0..16 {
                if i == j {
                    continue;
                }
                let pairing = lines[i].intersect(lines[j]);
                assert!(
                    pairing == 0 || pairing == 1,
                    "distinct lines must pair to 0 or 1, got {pairing}"
                );
                adjacency[i][j] = pairing == 1;
            }
        }
        Self { lines, adjacency }
    }

    pub fn lines(&self) -> &[DivisorClass; 16] {
        &self.lines
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn vertex_degree(&self, i: usize) -> usize {
        self.adjacency[i].iter().filter(|&&e| e).count()
    }

    /// Edges as index pairs `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..16 {
            for j in (i + 1)..16 {
                if self.adjacency[i][j] {
                    edges.push((i, j));
                }
            }
        }
        edges
    }
}

impl Default for IncidenceGraph {
    fn default() -> Self {
        Self::new()
    }
}

pub fn incidence_graph() -> IncidenceGraph {
    IncidenceGraph::new()
}

/// All unordered 5-subsets of the 16 lines that are pairwise skew, as sorted
/// canonical-index sets in lexicographic order.
pub fn skew_five_tuples() -> Vec<[usize; 5]> {
    let graph = incidence_graph();
    let mut tuples = Vec::new();
    for v0 in 0..16 {
        for v1 in (v0 + 1)..16 {
            if graph.adjacent(v0, v1) {
                continue;
            }
            for v2 in (v1 + 1)..16 {
                if graph.adjacent(v0, v2) || graph.adjacent(v1, v2) {
                    continue;
                }
                for v3 in (v2 + 1)..16 {
                    if graph.adjacent(v0, v3) || graph.adjacent(v1, v3) || graph.adjacent(v2, v3) {
                        continue;
                    }
                    for v4 in (v3 + 1)..16 {
                        if graph.adjacent(v0, v4)
                            || graph.adjacent(v1, v4)
                            || graph.adjacent(v2, v4)
                            || graph.adjacent(v3, v4)
                        {
                            continue;
                        }
                        tuples.push([v0, v1, v2, v3, v4]);
                    }
                }
            }
        }
    }
    tuples
}

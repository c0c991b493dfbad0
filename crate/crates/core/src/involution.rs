//! The cancellation involution Φ on pairs of perfect matchings.
//!
//! The four-term λ-Pfaffian recurrence, written with everything moved to the
//! left-hand side, expands into signed terms indexed by the set M of pairs
//! of matchings drawn from four part-products (see [`Part`]). Φ pairs the
//! elements of M so that the two terms of every orbit cancel exactly. The
//! three steps:
//!
//! 1. superpose the two matchings (π above the line, m below) and close the
//!    two open paths by adding one pair per path — through a dummy vertex
//!    when the path length is even;
//! 2. flip the roles of the two matchings on the cycle containing vertex 1;
//! 3. remove the added pairs (and dummies) and switch the two matchings.
//!
//! [`audit_cancellation`] runs Φ over all of M, classifies every orbit into
//! one of six cases by its added-pair pattern, and certifies the
//! cancellation in the polynomial ring with generic entries.
//!
//! Intermediate statistics on augmented diagrams are tracked as doubled
//! integers (`lambda_exp2`) so that the half-weight convention for arcs
//! sharing an endpoint stays in exact integer arithmetic. Arcs of one
//! perfect matching never share endpoints, so the half branches of
//! [`doubled_stats`] are exercised only by diagnostics over mixed arc sets.

use crate::matchings::{enumerate_matchings, stats, PerfectMatching};
use crate::pfaffian::SkewMatrix;
use crate::ring::{Monomial, Polynomial, VarId};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

/// The four summands of the index set M for ground size `2n`:
///
/// - `P0`: `M([2n] - {1,2,2n-1,2n}) x M([2n])`, equation coefficient `+1`
/// - `P1`: `M([2n] - {1,2}) x M([2n] - {2n-1,2n})`, coefficient `-1`
/// - `P2`: `M([2n] - {1,2n-1}) x M([2n] - {2,2n})`, coefficient `+λ`
/// - `P3`: `M([2n] - {1,2n}) x M([2n] - {2,2n-1})`, coefficient `-λ`
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Part {
    P0,
    P1,
    P2,
    P3,
}

impl Part {
    pub const ALL: [Part; 4] = [Part::P0, Part::P1, Part::P2, Part::P3];

    /// Sign of the part's term in the recurrence identity.
    pub fn equation_sign(self) -> i8 {
        match self {
            Part::P0 | Part::P2 => 1,
            Part::P1 | Part::P3 => -1,
        }
    }

    /// Whether the part's term carries an explicit λ factor.
    pub fn has_lambda_coeff(self) -> bool {
        matches!(self, Part::P2 | Part::P3)
    }

    /// Labels removed from `[2n]` for the first (π) matching.
    pub fn pi_removed(self, n2: u32) -> Vec<u32> {
        match self {
            Part::P0 => vec![1, 2, n2 - 1, n2],
            Part::P1 => vec![1, 2],
            Part::P2 => vec![1, n2 - 1],
            Part::P3 => vec![1, n2],
        }
    }

    /// Labels removed from `[2n]` for the second (m) matching.
    pub fn m_removed(self, n2: u32) -> Vec<u32> {
        match self {
            Part::P0 => vec![],
            Part::P1 => vec![n2 - 1, n2],
            Part::P2 => vec![2, n2],
            Part::P3 => vec![2, n2 - 1],
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Part::P0 => "P0",
            Part::P1 => "P1",
            Part::P2 => "P2",
            Part::P3 => "P3",
        };
        f.write_str(s)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InvolutionError {
    /// The involution machinery needs at least two pairs.
    TooSmall(u32),
    /// A matching's ground set does not match its part's definition.
    GroundSetMismatch { part: Part, which: &'static str },
    /// The two open paths of a superposition had different length parities
    /// (impossible for valid input).
    ParityViolation,
}

impl fmt::Display for InvolutionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionError::TooSmall(n) => write!(f, "need n_pairs >= 2, got {n}"),
            InvolutionError::GroundSetMismatch { part, which } => {
                write!(f, "ground set of {which} does not match part {part}")
            }
            InvolutionError::ParityViolation => {
                write!(f, "superposition paths have different parities")
            }
        }
    }
}

impl std::error::Error for InvolutionError {}

/// An element of the index set M: a tagged pair of matchings.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MatchingPair {
    part: Part,
    pi: PerfectMatching,
    m: PerfectMatching,
    n_pairs: u32,
}

impl MatchingPair {
    /// Validates that the ground sets of `pi` and `m` are exactly those the
    /// part prescribes for ground size `2 * n_pairs`.
    pub fn new(
        part: Part,
        pi: PerfectMatching,
        m: PerfectMatching,
        n_pairs: u32,
    ) -> Result<MatchingPair, InvolutionError> {
        if n_pairs < 2 {
            return Err(InvolutionError::TooSmall(n_pairs));
        }
        let n2 = 2 * n_pairs;
        if pi.ground_set() != ground_minus(n2, &part.pi_removed(n2)) {
            return Err(InvolutionError::GroundSetMismatch { part, which: "pi" });
        }
        if m.ground_set() != ground_minus(n2, &part.m_removed(n2)) {
            return Err(InvolutionError::GroundSetMismatch { part, which: "m" });
        }
        Ok(MatchingPair { part, pi, m, n_pairs })
    }

    pub fn part(&self) -> Part {
        self.part
    }

    pub fn pi(&self) -> &PerfectMatching {
        &self.pi
    }

    pub fn m(&self) -> &PerfectMatching {
        &self.m
    }

    pub fn n_pairs(&self) -> u32 {
        self.n_pairs
    }
}

fn ground_minus(n2: u32, removed: &[u32]) -> Vec<u32> {
    (1..=n2).filter(|v| !removed.contains(v)).collect()
}

/// Equation-side coefficient of a part: 1 or λ.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coeff {
    One,
    Lambda,
}

/// The signed weight of a term of the recurrence identity. `lambda_exp2` is
/// TWICE the λ-exponent (including the part's own λ), so the half-weight
/// convention for augmented diagrams stays integral; it is even for every
/// completed pair of matchings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SignedWeight {
    pub sign: i8,
    pub lambda_exp2: i64,
    pub coeff: Coeff,
}

/// Weight of a term: sign `part-sign · (-1)^(cross(π)+cross(m))` and doubled
/// λ-exponent `2(cross(π)+nest(π)+cross(m)+nest(m))`, plus 2 for the parts
/// carrying an explicit λ.
pub fn term_weight(x: &MatchingPair) -> SignedWeight {
    let sp = stats(x.pi());
    let sm = stats(x.m());
    let crossings = sp.cross + sm.cross;
    let sign = x.part().equation_sign() * if crossings.is_multiple_of(2) { 1 } else { -1 };
    let mut lambda_exp2 = 2 * i64::from(sp.cross + sp.nest + sm.cross + sm.nest);
    let coeff = if x.part().has_lambda_coeff() {
        lambda_exp2 += 2;
        Coeff::Lambda
    } else {
        Coeff::One
    };
    SignedWeight { sign, lambda_exp2, coeff }
}

/// The full signed term of the recurrence identity for `x`, in the ring:
/// `sign · λ^(lambda_exp2/2) · ∏ entries(π) · ∏ entries(m)`.
pub fn term_polynomial(x: &MatchingPair, entries: &SkewMatrix) -> Polynomial {
    let w = term_weight(x);
    assert!(w.lambda_exp2 % 2 == 0, "completed pairs have integral λ-exponent");
    let lam = Monomial::var_pow(VarId::Lambda, u32::try_from(w.lambda_exp2 / 2).unwrap());
    let mut poly = Polynomial::term(lam, BigInt::one());
    for &(a, b) in x.pi().pairs().iter().chain(x.m().pairs()) {
        poly = &poly * entries.upper(a, b).expect("entry for matched pair");
    }
    if w.sign < 0 {
        -poly
    } else {
        poly
    }
}

/// A point of the superposition diagram. `Dummy(b)` is the split vertex b′
/// created for an added pair `(a, b)` with `a < b`; it sits immediately
/// below `b` in the linear order (on the side facing `a`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Vertex {
    Orig(u32),
    Dummy(u32),
}

impl Vertex {
    /// Position in the linear order; originals at even slots, each dummy at
    /// the odd slot just below its source label.
    pub fn position(self) -> u32 {
        match self {
            Vertex::Orig(v) => 2 * v,
            Vertex::Dummy(b) => 2 * b - 1,
        }
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.position().cmp(&other.position())
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Orig(v) => write!(f, "{v}"),
            Vertex::Dummy(b) => write!(f, "{b}'"),
        }
    }
}

/// Which matching an edge currently belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Pi,
    M,
}

impl Side {
    fn other(self) -> Side {
        match self {
            Side::Pi => Side::M,
            Side::M => Side::Pi,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Edge {
    u: Vertex,
    v: Vertex,
    side: Side,
    /// `Some(k)` marks the edge as realizing the k-th added pair (a dummy
    /// splits one added pair into two edges sharing the id).
    added: Option<usize>,
}

/// The superposition multigraph of a [`MatchingPair`], augmented so both
/// sides are perfect matchings of the (possibly dummy-extended) point set.
#[derive(Clone, Debug)]
pub struct SuperpositionGraph {
    n_pairs: u32,
    edges: Vec<Edge>,
    paths: Vec<Vec<u32>>,
    added_pairs: Vec<(u32, u32)>,
    dummies: Vec<Vertex>,
}

impl SuperpositionGraph {
    /// The two pre-augmentation open paths as label sequences, each starting
    /// from its smaller endpoint, ordered by starting label.
    pub fn paths(&self) -> &[Vec<u32>] {
        &self.paths
    }

    /// The added pairs `(a, b)` with `a < b`, sorted.
    pub fn added_pairs(&self) -> &[(u32, u32)] {
        &self.added_pairs
    }

    pub fn dummy_count(&self) -> usize {
        self.dummies.len()
    }

    fn adjacency(&self) -> BTreeMap<Vertex, Vec<usize>> {
        let mut adj: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (idx, e) in self.edges.iter().enumerate() {
            adj.entry(e.u).or_default().push(idx);
            adj.entry(e.v).or_default().push(idx);
        }
        adj
    }

    /// Edge indices of the cycle through `v` (the augmented graph is a
    /// disjoint union of cycles).
    fn cycle_edges_through(&self, start: Vertex) -> Vec<usize> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        let mut at = start;
        let mut last_edge = usize::MAX;
        loop {
            let &idx = adj[&at]
                .iter()
                .find(|&&i| i != last_edge)
                .expect("degree-2 vertex");
            out.push(idx);
            let e = &self.edges[idx];
            at = if e.u == at { e.v } else { e.u };
            last_edge = idx;
            if at == start {
                return out;
            }
        }
    }

    /// Whether the two added pairs lie in distinct cycles.
    pub fn added_pairs_in_distinct_cycles(&self) -> bool {
        let first = self.edges.iter().position(|e| e.added == Some(0));
        let second = self.edges.iter().position(|e| e.added == Some(1));
        let (Some(i0), Some(i1)) = (first, second) else {
            return false;
        };
        let cycle = self.cycle_edges_through(self.edges[i0].u);
        !cycle.contains(&i1)
    }

    /// Step 2: exchange the two matchings' roles on the cycle containing
    /// vertex 1.
    pub fn flip_cycle_through_one(&mut self) {
        let cycle = self.cycle_edges_through(Vertex::Orig(1));
        for idx in cycle {
            self.edges[idx].side = self.edges[idx].side.other();
        }
    }

    /// Arcs currently on `side`, as position pairs `(lo, hi)`.
    pub fn side_positions(&self, side: Side) -> Vec<(u32, u32)> {
        let mut arcs: Vec<(u32, u32)> = self
            .edges
            .iter()
            .filter(|e| e.side == side)
            .map(|e| {
                let (a, b) = (e.u.position(), e.v.position());
                (a.min(b), a.max(b))
            })
            .collect();
        arcs.sort_unstable();
        arcs
    }

    /// Doubled crossing/nesting statistics of one side of the augmented
    /// diagram, computed on positions.
    pub fn doubled_side_stats(&self, side: Side) -> (u64, u64) {
        doubled_stats(&self.side_positions(side))
    }

    /// Step 3: remove the added pairs and dummies, switch the two
    /// matchings, and classify the result back into M.
    pub fn extract_pair(&self) -> Result<MatchingPair, InvolutionError> {
        let n2 = 2 * self.n_pairs;
        let mut pi_side: Vec<(u32, u32)> = Vec::new();
        let mut m_side: Vec<(u32, u32)> = Vec::new();
        for e in self.edges.iter().filter(|e| e.added.is_none()) {
            let pair = match (e.u, e.v) {
                (Vertex::Orig(a), Vertex::Orig(b)) => (a.min(b), a.max(b)),
                _ => unreachable!("dummies only touch added edges"),
            };
            match e.side {
                Side::Pi => pi_side.push(pair),
                Side::M => m_side.push(pair),
            }
        }
        // switch
        let new_pi = PerfectMatching::new(m_side).expect("valid matching after flip");
        let new_m = PerfectMatching::new(pi_side).expect("valid matching after flip");
        let missing = |pm: &PerfectMatching| -> Vec<u32> {
            let g = pm.ground_set();
            (1..=n2).filter(|v| g.binary_search(v).is_err()).collect()
        };
        let (pi_missing, m_missing) = (missing(&new_pi), missing(&new_m));
        let part = Part::ALL
            .into_iter()
            .find(|p| p.pi_removed(n2) == pi_missing && p.m_removed(n2) == m_missing)
            .unwrap_or_else(|| {
                panic!("extracted pair not in M: pi misses {pi_missing:?}, m misses {m_missing:?}")
            });
        MatchingPair::new(part, new_pi, new_m, self.n_pairs)
    }
}

/// Step 1: superpose the two matchings of `x` and close the two open paths
/// with added pairs (splitting a vertex through a dummy when the path
/// length is even).
pub fn superpose(x: &MatchingPair) -> Result<SuperpositionGraph, InvolutionError> {
    let n2 = 2 * x.n_pairs();
    let mut edges: Vec<Edge> = Vec::new();
    for &(a, b) in x.pi().pairs() {
        edges.push(Edge { u: Vertex::Orig(a), v: Vertex::Orig(b), side: Side::Pi, added: None });
    }
    for &(a, b) in x.m().pairs() {
        edges.push(Edge { u: Vertex::Orig(a), v: Vertex::Orig(b), side: Side::M, added: None });
    }

    let mut adj: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (idx, e) in edges.iter().enumerate() {
        let (Vertex::Orig(a), Vertex::Orig(b)) = (e.u, e.v) else { unreachable!() };
        adj.entry(a).or_default().push(idx);
        adj.entry(b).or_default().push(idx);
    }
    let endpoints: Vec<u32> = (1..=n2).filter(|v| adj.get(v).map_or(0, Vec::len) == 1).collect();
    debug_assert_eq!(endpoints.len(), 4, "exactly four path endpoints");

    // Trace the two open paths, starting each from its smaller endpoint.
    let mut used = vec![false; edges.len()];
    let mut paths: Vec<Vec<u32>> = Vec::new();
    for &start in &endpoints {
        if paths.iter().any(|p| p.contains(&start)) {
            continue;
        }
        let mut seq = vec![start];
        let mut at = start;
        while let Some(&idx) = adj[&at].iter().find(|&&i| !used[i]) {
            used[idx] = true;
            let e = &edges[idx];
            let (Vertex::Orig(a), Vertex::Orig(b)) = (e.u, e.v) else { unreachable!() };
            at = if a == at { b } else { a };
            seq.push(at);
        }
        paths.push(seq);
    }
    debug_assert_eq!(paths.len(), 2, "exactly two open paths");

    let parity = |p: &Vec<u32>| (p.len() - 1) % 2;
    if parity(&paths[0]) != parity(&paths[1]) {
        return Err(InvolutionError::ParityViolation);
    }

    // The side covering a path terminal is the side of its terminal edge.
    let covering_side = |label: u32| -> Side {
        let idx = adj[&label][0];
        edges[idx].side
    };

    let mut added_pairs: Vec<(u32, u32)> = Vec::new();
    let mut dummies: Vec<Vertex> = Vec::new();
    let mut new_edges: Vec<Edge> = Vec::new();
    for (pair_id, p) in paths.iter().enumerate() {
        let (first, last) = (p[0], *p.last().unwrap());
        let (a, b) = (first.min(last), first.max(last));
        added_pairs.push((a, b));
        if (p.len() - 1) % 2 == 1 {
            // odd length: both terminals are covered by the same side; the
            // added pair joins the other side directly
            let side = covering_side(a).other();
            debug_assert_eq!(side, covering_side(b).other());
            new_edges.push(Edge {
                u: Vertex::Orig(a),
                v: Vertex::Orig(b),
                side,
                added: Some(pair_id),
            });
        } else {
            // even length: split b into b and b'; (a,b') joins the side
            // missing a, (b',b) the side missing b
            let dummy = Vertex::Dummy(b);
            dummies.push(dummy);
            new_edges.push(Edge {
                u: Vertex::Orig(a),
                v: dummy,
                side: covering_side(a).other(),
                added: Some(pair_id),
            });
            new_edges.push(Edge {
                u: dummy,
                v: Vertex::Orig(b),
                side: covering_side(b).other(),
                added: Some(pair_id),
            });
        }
    }
    edges.extend(new_edges);
    added_pairs.sort_unstable();

    let graph = SuperpositionGraph { n_pairs: x.n_pairs(), edges, paths, added_pairs, dummies };

    // Every point of the augmented diagram has one arc per side.
    if cfg!(debug_assertions) {
        for (v, idxs) in graph.adjacency() {
            assert_eq!(idxs.len(), 2, "vertex {v} must have degree 2");
            let sides: Vec<Side> = idxs.iter().map(|&i| graph.edges[i].side).collect();
            assert_ne!(sides[0], sides[1], "vertex {v} must touch both sides");
        }
    }

    Ok(graph)
}

/// The involution Φ: superpose, flip the cycle through 1, strip the added
/// pairs, and switch the two matchings.
pub fn phi(x: &MatchingPair) -> Result<MatchingPair, InvolutionError> {
    let mut graph = superpose(x)?;
    graph.flip_cycle_through_one();
    graph.extract_pair()
}

/// Doubled crossing/nesting counts over an arbitrary list of arcs (given as
/// `(lo, hi)` positions). Arc pairs with four distinct endpoints contribute
/// 2 per crossing/nesting; arcs sharing exactly one endpoint contribute 1:
/// to the nesting count when one span lies inside the other, to the
/// crossing count when they meet end-to-start. Identical arcs count as one
/// full nesting (2).
pub fn doubled_stats(arcs: &[(u32, u32)]) -> (u64, u64) {
    let mut cross2 = 0;
    let mut nest2 = 0;
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            let (a, b) = arcs[i];
            let (c, d) = arcs[j];
            let shared = usize::from(a == c || a == d) + usize::from(b == c || b == d);
            match shared {
                0 => {
                    // sort so the earlier-opening arc comes first
                    let ((_, b), (c, d)) = if a < c { ((a, b), (c, d)) } else { ((c, d), (a, b)) };
                    if c < b {
                        if b < d {
                            cross2 += 2;
                        } else {
                            nest2 += 2;
                        }
                    }
                }
                1 => {
                    if a == c || b == d {
                        // shared opening or closing point: one span inside the other
                        nest2 += 1;
                    } else {
                        // end-to-start contact
                        cross2 += 1;
                    }
                }
                _ => nest2 += 2,
            }
        }
    }
    (cross2, nest2)
}

/// Enumerates the index set M for ground size `2 * n_pairs`, parts in
/// order, matchings in the fixed enumeration order.
pub fn enumerate_pairs(n_pairs: u32) -> Vec<MatchingPair> {
    assert!(n_pairs >= 2, "need n_pairs >= 2");
    let n2 = 2 * n_pairs;
    let mut out = Vec::new();
    for part in Part::ALL {
        let pi_ground = ground_minus(n2, &part.pi_removed(n2));
        let m_ground = ground_minus(n2, &part.m_removed(n2));
        for pi in enumerate_matchings(&pi_ground).expect("even ground") {
            for m in enumerate_matchings(&m_ground).expect("even ground") {
                out.push(
                    MatchingPair::new(part, pi.clone(), m, n_pairs).expect("valid pair"),
                );
            }
        }
    }
    out
}

/// One orbit {x, Φ(x)} of the involution.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    /// Case number 1..=6 from the added-pair pattern and parts involved.
    pub case_no: u8,
    pub x: MatchingPair,
    pub y: MatchingPair,
    pub added_pairs: Vec<(u32, u32)>,
    pub dummies: usize,
    /// Whether the two signed terms cancel exactly in the ring.
    pub cancels: bool,
}

/// Result of auditing the involution over all of M.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub n_pairs: u32,
    pub elements: usize,
    pub orbits: Vec<OrbitRecord>,
    /// Orbit counts per case, index 0 holding case 1.
    pub case_orbits: [usize; 6],
    pub all_cancelled: bool,
    pub failures: Vec<String>,
}

fn added_pattern(n2: u32, added: &[(u32, u32)]) -> Option<u8> {
    let a = [(1, 2), (n2 - 1, n2)];
    let b = [(1, n2), (2, n2 - 1)];
    let c = [(1, n2 - 1), (2, n2)];
    if added == a.as_slice() {
        Some(0)
    } else if added == b.as_slice() {
        Some(1)
    } else if added == c.as_slice() {
        Some(2)
    } else {
        None
    }
}

/// Part pairs named by the six cases (unordered).
fn case_parts(case_no: u8) -> (Part, Part) {
    match case_no {
        1 => (Part::P0, Part::P1),
        2 => (Part::P0, Part::P3),
        3 => (Part::P0, Part::P2),
        4 => (Part::P2, Part::P3),
        5 => (Part::P1, Part::P2),
        6 => (Part::P1, Part::P3),
        _ => unreachable!(),
    }
}

/// Exhaustively applies Φ to all of M, checking that it is a fixed-point-
/// free involution, that the two terms of every orbit cancel exactly in the
/// ring (generic entries), that each orbit's parts match its case, that the
/// flip preserves the augmented diagrams' doubled weight and crossing
/// parity, and that the grand total of all signed terms is zero.
pub fn audit_cancellation(n_pairs: u32) -> AuditReport {
    assert!(n_pairs >= 2, "need n_pairs >= 2");
    let n2 = 2 * n_pairs;
    let entries = SkewMatrix::generic(n_pairs);
    let all = enumerate_pairs(n_pairs);
    let elements = all.len();

    let mut failures: Vec<String> = Vec::new();
    let mut orbits: Vec<OrbitRecord> = Vec::new();
    let mut case_orbits = [0usize; 6];
    let mut seen: HashSet<MatchingPair> = HashSet::new();
    let mut total = Polynomial::zero();

    for x in &all {
        let term_x = term_polynomial(x, &entries);
        total += &term_x;
        if seen.contains(x) {
            continue;
        }
        let graph = match superpose(x) {
            Ok(g) => g,
            Err(e) => {
                failures.push(format!("superpose failed on {}: {e}", render_pair(x)));
                continue;
            }
        };
        let y = match phi(x) {
            Ok(y) => y,
            Err(e) => {
                failures.push(format!("phi failed on {}: {e}", render_pair(x)));
                continue;
            }
        };
        if y == *x {
            failures.push(format!("fixed point at {}", render_pair(x)));
            continue;
        }
        match phi(&y) {
            Ok(back) if back == *x => {}
            _ => failures.push(format!("phi not involutive at {}", render_pair(x))),
        }

        let case_no = match added_pattern(n2, graph.added_pairs()) {
            Some(pat) => {
                let with_p0 = x.part() == Part::P0 || y.part() == Part::P0;
                if with_p0 {
                    pat + 1
                } else {
                    pat + 4
                }
            }
            None => {
                failures.push(format!(
                    "unexpected added pairs {:?} at {}",
                    graph.added_pairs(),
                    render_pair(x)
                ));
                0
            }
        };
        if case_no > 0 {
            let (pa, pb) = case_parts(case_no);
            let got = if x.part() <= y.part() {
                (x.part(), y.part())
            } else {
                (y.part(), x.part())
            };
            if got != (pa, pb) {
                failures.push(format!(
                    "case {case_no} expects parts {pa}/{pb}, got {}/{} at {}",
                    got.0,
                    got.1,
                    render_pair(x)
                ));
            }
        }
        if !graph.added_pairs_in_distinct_cycles() {
            failures.push(format!("added pairs share a cycle at {}", render_pair(x)));
        }

        // flip diagnostics: exchanging roles on the cycle through 1 preserves the
        // total doubled weight and the doubled crossing count mod 4.
        {
            let mut g = graph.clone();
            let stat = |g: &SuperpositionGraph| {
                let (cp, np) = g.doubled_side_stats(Side::Pi);
                let (cm, nm) = g.doubled_side_stats(Side::M);
                (cp + cm, cp + np + cm + nm)
            };
            let (cross2_before, weight2_before) = stat(&g);
            g.flip_cycle_through_one();
            let (cross2_after, weight2_after) = stat(&g);
            if weight2_before != weight2_after {
                failures.push(format!("flip changed total weight at {}", render_pair(x)));
            }
            if cross2_before % 4 != cross2_after % 4 || cross2_before % 2 != 0 {
                failures.push(format!("flip changed crossing parity at {}", render_pair(x)));
            }
        }

        let term_y = term_polynomial(&y, &entries);
        let cancels = (&term_x + &term_y).is_zero();
        if !cancels {
            failures.push(format!(
                "orbit does not cancel: {} vs {}",
                render_pair(x),
                render_pair(&y)
            ));
        }

        if case_no > 0 {
            case_orbits[usize::from(case_no) - 1] += 1;
        }
        seen.insert(x.clone());
        seen.insert(y.clone());
        orbits.push(OrbitRecord {
            case_no,
            x: x.clone(),
            y,
            added_pairs: graph.added_pairs().to_vec(),
            dummies: graph.dummy_count(),
            cancels,
        });
    }

    if !total.is_zero() {
        failures.push(format!("grand total is nonzero: {total}"));
    }
    if seen.len() != elements {
        failures.push(format!(
            "orbits cover {} of {elements} elements",
            seen.len()
        ));
    }

    AuditReport {
        n_pairs,
        elements,
        all_cancelled: failures.is_empty(),
        orbits,
        case_orbits,
        failures,
    }
}

fn render_pair(x: &MatchingPair) -> String {
    format!("{}(pi={}, m={})", x.part(), x.pi(), x.m())
}

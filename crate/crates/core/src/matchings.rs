//! Perfect matchings of finite integer sets with crossing/nesting
//! statistics.
//!
//! This module is the trusted combinatorial oracle for the rest of the
//! crate: statistics are computed by O(n²) brute force over all pairs of
//! pairs, never incrementally, and the enumeration order is fixed so golden
//! tests are reproducible.

use crate::pfaffian::SkewMatrix;
use crate::ring::{Monomial, Polynomial, VarId};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// A perfect matching in canonical form: each pair `(low, high)` has
/// `low < high`, pairs are sorted by `low`, and all endpoints are distinct.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PerfectMatching {
    pairs: Vec<(u32, u32)>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MatchingError {
    /// The ground set has odd size and admits no perfect matching.
    OddGroundSet(usize),
    /// A pair was given with `low >= high`.
    MalformedPair(u32, u32),
    /// An endpoint occurs in two pairs.
    DuplicateEndpoint(u32),
}

impl fmt::Display for MatchingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingError::OddGroundSet(n) => write!(f, "ground set has odd size {n}"),
            MatchingError::MalformedPair(a, b) => write!(f, "pair ({a},{b}) is not increasing"),
            MatchingError::DuplicateEndpoint(v) => write!(f, "endpoint {v} occurs twice"),
        }
    }
}

impl std::error::Error for MatchingError {}

impl PerfectMatching {
    /// The empty matching (of the empty ground set).
    pub fn empty() -> PerfectMatching {
        PerfectMatching { pairs: Vec::new() }
    }

    /// Builds a matching from pairs, sorting them into canonical form.
    pub fn new(mut pairs: Vec<(u32, u32)>) -> Result<PerfectMatching, MatchingError> {
        for &(a, b) in &pairs {
            if a >= b {
                return Err(MatchingError::MalformedPair(a, b));
            }
        }
        pairs.sort_unstable();
        let mut seen = Vec::with_capacity(2 * pairs.len());
        for &(a, b) in &pairs {
            seen.push(a);
            seen.push(b);
        }
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(MatchingError::DuplicateEndpoint(w[0]));
            }
        }
        Ok(PerfectMatching { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn n_pairs(&self) -> usize {
        self.pairs.len()
    }

    /// The sorted set of endpoints.
    pub fn ground_set(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(2 * self.pairs.len());
        for &(a, b) in &self.pairs {
            out.push(a);
            out.push(b);
        }
        out.sort_unstable();
        out
    }

    /// The partner of `v`, or `None` when `v` is not an endpoint.
    pub fn partner(&self, v: u32) -> Option<u32> {
        for &(a, b) in &self.pairs {
            if a == v {
                return Some(b);
            }
            if b == v {
                return Some(a);
            }
        }
        None
    }
}

impl fmt::Display for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str(")")
    }
}

/// Crossing and nesting counts of a matching.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MatchingStats {
    pub cross: u32,
    pub nest: u32,
}

/// All perfect matchings of `ground`, in the fixed enumeration order: the
/// smallest element is paired with each larger element in increasing order,
/// recursively. `ground` must be strictly increasing.
pub fn enumerate_matchings(ground: &[u32]) -> Result<Vec<PerfectMatching>, MatchingError> {
    assert!(
        ground.windows(2).all(|w| w[0] < w[1]),
        "ground set must be strictly increasing"
    );
    if !ground.len().is_multiple_of(2) {
        return Err(MatchingError::OddGroundSet(ground.len()));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(ground.len() / 2);
    recurse(ground, &mut current, &mut out);
    Ok(out)
}

fn recurse(rest: &[u32], current: &mut Vec<(u32, u32)>, out: &mut Vec<PerfectMatching>) {
    if rest.is_empty() {
        out.push(PerfectMatching {
            pairs: current.clone(),
        });
        return;
    }
    let smallest = rest[0];
    for k in 1..rest.len() {
        let partner = rest[k];
        let remaining: Vec<u32> = rest
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != 0 && i != k)
            .map(|(_, &v)| v)
            .collect();
        current.push((smallest, partner));
        recurse(&remaining, current, out);
        current.pop();
    }
}

/// Crossing/nesting statistics by brute force over all pairs of pairs.
///
/// A crossing is a pair of pairs `(a,b)`, `(c,d)` with `a < c < b < d`; a
/// nesting has `a < c < d < b`. Both are order-theoretic, so relabeling the
/// ground set by any order isomorphism leaves the statistics unchanged.
pub fn stats(m: &PerfectMatching) -> MatchingStats {
    let pairs = m.pairs();
    let mut cross = 0;
    let mut nest = 0;
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            // pairs are sorted by first element, so a < c
            let (_, b) = pairs[i];
            let (c, d) = pairs[j];
            if c < b {
                if b < d {
                    cross += 1;
                } else {
                    nest += 1;
                }
            }
        }
    }
    MatchingStats { cross, nest }
}

/// Sum over all pairs of the number of ground-set points strictly between
/// the two members, computed on rank positions within the sorted ground set
/// (which matters when the ground set is not contiguous).
///
/// For every matching this equals `2 * (cross + nest)`.
pub fn gap_sum(m: &PerfectMatching) -> u64 {
    let ground = m.ground_set();
    let rank = |v: u32| ground.binary_search(&v).expect("endpoint in ground set") as u64;
    m.pairs()
        .iter()
        .map(|&(a, b)| rank(b) - rank(a) - 1)
        .sum()
}

/// The signed weight of a matching against a skew matrix of entries:
/// sign `(-1)^cross` and polynomial `λ^(cross+nest) · ∏ entries(low, high)`.
///
/// The ground set of `m` must equal the index set of `entries`.
pub fn weight(m: &PerfectMatching, entries: &SkewMatrix) -> (i8, Polynomial) {
    debug_assert_eq!(m.ground_set(), entries.index_set(), "matching/matrix mismatch");
    let st = stats(m);
    let lam = Monomial::var_pow(VarId::Lambda, st.cross + st.nest);
    let mut poly = Polynomial::term(lam, BigInt::one());
    for &(a, b) in m.pairs() {
        poly = &poly * entries.upper(a, b).expect("entry for matched pair");
    }
    let sign = if st.cross.is_multiple_of(2) { 1 } else { -1 };
    (sign, poly)
}

/// Double factorial `n!! = n(n-2)(n-4)...`; `(2n-1)!!` counts the perfect
/// matchings of `2n` points.
pub fn double_factorial(n: u64) -> u64 {
    let mut acc = 1;
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(pairs: &[(u32, u32)]) -> PerfectMatching {
        PerfectMatching::new(pairs.to_vec()).unwrap()
    }

    /// Running example used throughout the involution tests as well.
    fn running_example() -> PerfectMatching {
        pm(&[(1, 5), (2, 12), (3, 7), (4, 14), (6, 11), (8, 9), (10, 13)])
    }

    #[test]
    fn canonicalization_and_validation() {
        let m = PerfectMatching::new(vec![(3, 4), (1, 2)]).unwrap();
        assert_eq!(m.pairs(), &[(1, 2), (3, 4)]);
        assert_eq!(
            PerfectMatching::new(vec![(2, 1)]),
            Err(MatchingError::MalformedPair(2, 1))
        );
        assert_eq!(
            PerfectMatching::new(vec![(1, 2), (2, 3)]),
            Err(MatchingError::DuplicateEndpoint(2))
        );
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(
            enumerate_matchings(&[1, 2]).unwrap(),
            vec![pm(&[(1, 2)])]
        );
        assert_eq!(
            enumerate_matchings(&[1, 2, 3, 4]).unwrap(),
            vec![
                pm(&[(1, 2), (3, 4)]),
                pm(&[(1, 3), (2, 4)]),
                pm(&[(1, 4), (2, 3)])
            ]
        );
        let eight: Vec<u32> = (1..=8).collect();
        assert_eq!(enumerate_matchings(&eight).unwrap().len(), 105);
        assert_eq!(
            enumerate_matchings(&[1, 2, 3]),
            Err(MatchingError::OddGroundSet(3))
        );
        assert_eq!(enumerate_matchings(&[]).unwrap(), vec![PerfectMatching::empty()]);
    }

    #[test]
    fn enumeration_counts_are_double_factorials() {
        for n in 1..=6u32 {
            let ground: Vec<u32> = (1..=2 * n).collect();
            let count = enumerate_matchings(&ground).unwrap().len() as u64;
            assert_eq!(count, double_factorial(2 * u64::from(n) - 1));
        }
    }

    #[test]
    fn stats_definition_cases() {
        assert_eq!(stats(&pm(&[(1, 3), (2, 4)])), MatchingStats { cross: 1, nest: 0 });
        assert_eq!(stats(&pm(&[(1, 4), (2, 3)])), MatchingStats { cross: 0, nest: 1 });
        assert_eq!(stats(&pm(&[(1, 2), (3, 4)])), MatchingStats { cross: 0, nest: 0 });
    }

    #[test]
    fn stats_running_example() {
        // gaps of the pairs: 3,9,3,9,4,0,2 summing to 30, so cross+nest = 15
        let m = running_example();
        assert_eq!(gap_sum(&m), 30);
        let st = stats(&m);
        assert_eq!((st.cross, st.nest), (8, 7));
        assert_eq!(2 * (st.cross + st.nest) as u64, gap_sum(&m));
    }

    #[test]
    fn gap_sum_small_cases() {
        assert_eq!(gap_sum(&pm(&[(1, 2), (3, 4)])), 0);
        assert_eq!(gap_sum(&pm(&[(1, 4), (2, 3)])), 2);
    }

    #[test]
    fn gap_sum_uses_rank_positions_for_sparse_ground_sets() {
        // ground set {1,2,4,10}: the pair (1,10) has two other points in
        // its positional span regardless of the label gaps
        let m = pm(&[(1, 10), (2, 4)]);
        assert_eq!(gap_sum(&m), 2);
        assert_eq!(2 * (stats(&m).cross + stats(&m).nest) as u64, gap_sum(&m));
    }

    #[test]
    fn gap_sum_identity_exhaustive_up_to_eight() {
        for n in 1..=4u32 {
            let ground: Vec<u32> = (1..=2 * n).collect();
            for m in enumerate_matchings(&ground).unwrap() {
                let st = stats(&m);
                assert_eq!(2 * u64::from(st.cross + st.nest), gap_sum(&m), "matching {m}");
            }
        }
    }

    #[test]
    fn stats_invariant_under_order_isomorphic_relabeling() {
        let ground: Vec<u32> = (1..=6).collect();
        // order-isomorphic image of [6]
        let relabel = |v: u32| 10 * v + 3;
        for m in enumerate_matchings(&ground).unwrap() {
            let mapped: Vec<(u32, u32)> =
                m.pairs().iter().map(|&(a, b)| (relabel(a), relabel(b))).collect();
            let mapped = PerfectMatching::new(mapped).unwrap();
            assert_eq!(stats(&m), stats(&mapped));
        }
    }

    #[test]
    fn weight_examples_on_generic_entries() {
        let a = SkewMatrix::generic(2);
        let (s, w) = weight(&pm(&[(1, 2), (3, 4)]), &a);
        assert_eq!(s, 1);
        assert_eq!(w, Polynomial::parse("a[1,2]*a[3,4]").unwrap());
        let (s, w) = weight(&pm(&[(1, 3), (2, 4)]), &a);
        assert_eq!(s, -1);
        assert_eq!(w, Polynomial::parse("l*a[1,3]*a[2,4]").unwrap());
        let (s, w) = weight(&pm(&[(1, 4), (2, 3)]), &a);
        assert_eq!(s, 1);
        assert_eq!(w, Polynomial::parse("l*a[1,4]*a[2,3]").unwrap());
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(7), 105);
        assert_eq!(double_factorial(9), 945);
        assert_eq!(double_factorial(11), 10395);
        assert_eq!(double_factorial(0), 1);
        assert_eq!(double_factorial(1), 1);
    }
}

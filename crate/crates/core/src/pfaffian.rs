//! Skew-symmetric matrices over the polynomial ring and the two λ-Pfaffian
//! algorithms.
//!
//! [`pf_expansion`] is the normative definition in this crate: the signed,
//! λ-weighted sum over perfect matchings of the index set. It is total.
//! [`pf_condensation`] computes the same polynomial by the deformed
//! Dodgson-style recurrence
//!
//! ```text
//! Pf(A^{1,2,2n-1,2n}) · Pf(A) =
//!     Pf(A^{1,2}) · Pf(A^{2n-1,2n})
//!   - λ · Pf(A^{1,2n-1}) · Pf(A^{2,2n})
//!   + λ · Pf(A^{1,2n}) · Pf(A^{2,2n-1})
//! ```
//!
//! dividing exactly by the central minor at every level; it fails loudly
//! with [`PfaffianError::CondensationPivotZero`] when a pivot vanishes.
//! Agreement of the two algorithms on generic matrices is the crate's
//! central cross-check.
//!
//! A matrix is stored as its strict upper triangle; `A[j][i] = -A[i][j]`
//! and the zero diagonal are implicit, so skew symmetry holds by
//! construction and the constructor only has to reject malformed keys.

use crate::matchings::{enumerate_matchings, weight, PerfectMatching};
use crate::ring::{Polynomial, RingError};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// An even-size skew-symmetric matrix represented by its strict upper
/// triangle of polynomial entries, indexed by an arbitrary sorted set of
/// positive labels (minors keep their original labels).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewMatrix {
    index_set: Vec<u32>,
    upper: BTreeMap<(u32, u32), Polynomial>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PfaffianError {
    /// Index set not strictly increasing or containing 0.
    BadIndexSet,
    /// Index set (or a minor's surviving set) has odd size.
    OddIndexSet(usize),
    /// A key refers to a label outside the index set.
    UnknownIndex(u32),
    /// Minor removal would leave an odd number of indices.
    OddResult(usize),
    /// An upper-triangle key `(i, j)` without `i < j`, i.e. a diagonal or
    /// reversed key.
    ReversedKey(u32, u32),
    /// The same upper-triangle position was given twice.
    DuplicateKey(u32, u32),
    /// The strict upper triangle is not total.
    MissingEntry(u32, u32),
    /// The condensation recurrence hit a central minor whose λ-Pfaffian is
    /// the zero polynomial; the matching expansion still applies.
    CondensationPivotZero { surviving: Vec<u32> },
    /// An entry was not an integer constant where one was required.
    NonConstantEntry(u32, u32),
    /// Propagated ring failure (an inexact division inside condensation
    /// would indicate a bug, never an expected outcome).
    Ring(RingError),
}

impl fmt::Display for PfaffianError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PfaffianError::BadIndexSet => {
                write!(f, "index set must be strictly increasing positive integers")
            }
            PfaffianError::OddIndexSet(n) => write!(f, "index set has odd size {n}"),
            PfaffianError::UnknownIndex(i) => write!(f, "index {i} is not in the index set"),
            PfaffianError::OddResult(n) => write!(f, "minor would have odd size {n}"),
            PfaffianError::ReversedKey(i, j) => {
                write!(f, "upper-triangle key ({i},{j}) must satisfy i < j")
            }
            PfaffianError::DuplicateKey(i, j) => write!(f, "duplicate entry for ({i},{j})"),
            PfaffianError::MissingEntry(i, j) => write!(f, "missing entry for ({i},{j})"),
            PfaffianError::CondensationPivotZero { surviving } => write!(
                f,
                "condensation pivot is the zero polynomial at surviving index set {surviving:?}"
            ),
            PfaffianError::NonConstantEntry(i, j) => {
                write!(f, "entry ({i},{j}) is not an integer constant")
            }
            PfaffianError::Ring(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for PfaffianError {}

impl From<RingError> for PfaffianError {
    fn from(e: RingError) -> Self {
        PfaffianError::Ring(e)
    }
}

impl SkewMatrix {
    /// Builds a matrix from an explicit entry list; every strict
    /// upper-triangle position of `index_set` must appear exactly once.
    pub fn new(
        index_set: Vec<u32>,
        entries: Vec<((u32, u32), Polynomial)>,
    ) -> Result<SkewMatrix, PfaffianError> {
        if index_set.first().is_some_and(|&v| v == 0)
            || !index_set.windows(2).all(|w| w[0] < w[1])
        {
            return Err(PfaffianError::BadIndexSet);
        }
        if !index_set.len().is_multiple_of(2) {
            return Err(PfaffianError::OddIndexSet(index_set.len()));
        }
        let mut upper = BTreeMap::new();
        for ((i, j), poly) in entries {
            if i >= j {
                return Err(PfaffianError::ReversedKey(i, j));
            }
            if index_set.binary_search(&i).is_err() {
                return Err(PfaffianError::UnknownIndex(i));
            }
            if index_set.binary_search(&j).is_err() {
                return Err(PfaffianError::UnknownIndex(j));
            }
            if upper.insert((i, j), poly).is_some() {
                return Err(PfaffianError::DuplicateKey(i, j));
            }
        }
        for a in 0..index_set.len() {
            for b in a + 1..index_set.len() {
                let key = (index_set[a], index_set[b]);
                if !upper.contains_key(&key) {
                    return Err(PfaffianError::MissingEntry(key.0, key.1));
                }
            }
        }
        Ok(SkewMatrix { index_set, upper })
    }

    /// Builds a matrix by evaluating `f(i, j)` on every strict
    /// upper-triangle position. `index_set` must be valid.
    pub fn from_fn(
        index_set: Vec<u32>,
        mut f: impl FnMut(u32, u32) -> Polynomial,
    ) -> Result<SkewMatrix, PfaffianError> {
        let mut entries = Vec::new();
        for a in 0..index_set.len() {
            for b in a + 1..index_set.len() {
                let (i, j) = (index_set[a], index_set[b]);
                entries.push(((i, j), f(i, j)));
            }
        }
        SkewMatrix::new(index_set, entries)
    }

    /// The generic matrix of size `2 * n_pairs` on labels `1..=2n`, with
    /// the entry variable `a[i,j]` at each upper position. `generic(0)` is
    /// the empty matrix (whose λ-Pfaffian is 1).
    pub fn generic(n_pairs: u32) -> SkewMatrix {
        let index_set: Vec<u32> = (1..=2 * n_pairs).collect();
        SkewMatrix::from_fn(index_set, Polynomial::entry).expect("generic matrix is well formed")
    }

    pub fn index_set(&self) -> &[u32] {
        &self.index_set
    }

    /// Matrix size (number of rows).
    pub fn size(&self) -> usize {
        self.index_set.len()
    }

    /// The upper-triangle entry at `(i, j)`, requiring `i < j`; `None` when
    /// either label is missing.
    pub fn upper(&self, i: u32, j: u32) -> Option<&Polynomial> {
        self.upper.get(&(i, j))
    }

    /// Symmetric deletion of the rows and columns in `removed`. Surviving
    /// labels are unchanged.
    pub fn minor(&self, removed: &[u32]) -> Result<SkewMatrix, PfaffianError> {
        let mut removed = removed.to_vec();
        removed.sort_unstable();
        removed.dedup();
        for &r in &removed {
            if self.index_set.binary_search(&r).is_err() {
                return Err(PfaffianError::UnknownIndex(r));
            }
        }
        let surviving: Vec<u32> = self
            .index_set
            .iter()
            .copied()
            .filter(|v| removed.binary_search(v).is_err())
            .collect();
        if !surviving.len().is_multiple_of(2) {
            return Err(PfaffianError::OddResult(surviving.len()));
        }
        let upper = self
            .upper
            .iter()
            .filter(|((i, j), _)| {
                surviving.binary_search(i).is_ok() && surviving.binary_search(j).is_ok()
            })
            .map(|(&k, p)| (k, p.clone()))
            .collect();
        Ok(SkewMatrix {
            index_set: surviving,
            upper,
        })
    }
}

/// λ-Pfaffian by the matching expansion: the signed weighted sum over all
/// perfect matchings of the index set, statistics taken positionally. Total
/// on every even-size matrix; the empty matrix gives 1.
pub fn pf_expansion(a: &SkewMatrix) -> Polynomial {
    let ms = enumerate_matchings(a.index_set()).expect("even index set");
    sum_weights(&ms, a)
}

fn sum_weights(ms: &[PerfectMatching], a: &SkewMatrix) -> Polynomial {
    let mut acc = Polynomial::zero();
    for m in ms {
        let (sign, w) = weight(m, a);
        if sign > 0 {
            acc += &w;
        } else {
            acc -= &w;
        }
    }
    acc
}

/// λ-Pfaffian by the deformed condensation recurrence, with memoization
/// keyed on surviving index sets and exact division by the central minor.
///
/// Fails with [`PfaffianError::CondensationPivotZero`] when some central
/// minor's λ-Pfaffian vanishes (callers may fall back to [`pf_expansion`];
/// this function never does so silently).
pub fn pf_condensation(a: &SkewMatrix) -> Result<Polynomial, PfaffianError> {
    let mut memo: HashMap<Vec<u32>, Polynomial> = HashMap::new();
    condense(a, a.index_set().to_vec(), &mut memo)
}

fn condense(
    a: &SkewMatrix,
    idx: Vec<u32>,
    memo: &mut HashMap<Vec<u32>, Polynomial>,
) -> Result<Polynomial, PfaffianError> {
    if let Some(hit) = memo.get(&idx) {
        return Ok(hit.clone());
    }
    let result = match idx.len() {
        0 => Polynomial::one(),
        2 => a.upper(idx[0], idx[1]).expect("entry present").clone(),
        len => {
            let (v1, v2) = (idx[0], idx[1]);
            let (w1, w2) = (idx[len - 2], idx[len - 1]);
            let drop = |remove: [u32; 2]| -> Vec<u32> {
                idx.iter().copied().filter(|v| !remove.contains(v)).collect()
            };
            let central: Vec<u32> = idx[2..len - 2].to_vec();
            let pivot = condense(a, central, memo)?;
            let t1 = &condense(a, drop([v1, v2]), memo)? * &condense(a, drop([w1, w2]), memo)?;
            let t2 = &condense(a, drop([v1, w1]), memo)? * &condense(a, drop([v2, w2]), memo)?;
            let t3 = &condense(a, drop([v1, w2]), memo)? * &condense(a, drop([v2, w1]), memo)?;
            let lam = Polynomial::lambda();
            let numerator = &(&t1 - &(&lam * &t2)) + &(&lam * &t3);
            if pivot.is_zero() {
                return Err(PfaffianError::CondensationPivotZero { surviving: idx });
            }
            numerator.exact_div(&pivot)?
        }
    };
    memo.insert(idx, result.clone());
    Ok(result)
}

/// Checks the four-term recurrence identity on `a` (size >= 4), with every
/// λ-Pfaffian computed by the matching expansion:
///
/// ```text
/// Pf(A^{1,2,2n-1,2n})·Pf(A) - Pf(A^{1,2})·Pf(A^{2n-1,2n})
///   + λ·Pf(A^{1,2n-1})·Pf(A^{2,2n}) - λ·Pf(A^{1,2n})·Pf(A^{2,2n-1})  ==  0
/// ```
///
/// "First" and "last" indices are the positional extremes of the index set.
pub fn verify_recurrence(a: &SkewMatrix) -> bool {
    let idx = a.index_set();
    assert!(idx.len() >= 4, "recurrence needs size >= 4");
    let (v1, v2) = (idx[0], idx[1]);
    let (w1, w2) = (idx[idx.len() - 2], idx[idx.len() - 1]);
    let pf = |removed: &[u32]| pf_expansion(&a.minor(removed).expect("valid minor"));
    let lam = Polynomial::lambda();
    let mut combo = &pf(&[v1, v2, w1, w2]) * &pf_expansion(a);
    combo -= &(&pf(&[v1, v2]) * &pf(&[w1, w2]));
    combo += &(&lam * &(&pf(&[v1, w1]) * &pf(&[v2, w2])));
    combo -= &(&lam * &(&pf(&[v1, w2]) * &pf(&[v2, w1])));
    combo.is_zero()
}

/// The ordinary (λ=1) Pfaffian of a matrix with integer constant entries.
pub fn pf_classical(a: &SkewMatrix) -> Result<BigInt, PfaffianError> {
    let mut constants: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
    for (&(i, j), poly) in &a.upper {
        let c = poly
            .constant_value()
            .ok_or(PfaffianError::NonConstantEntry(i, j))?;
        constants.insert((i, j), c);
    }
    let ms = enumerate_matchings(a.index_set()).expect("even index set");
    let mut acc = BigInt::zero();
    for m in &ms {
        let st = crate::matchings::stats(m);
        let mut prod = BigInt::from(1);
        for &(x, y) in m.pairs() {
            prod *= &constants[&(x, y)];
        }
        if st.cross.is_multiple_of(2) {
            acc += prod;
        } else {
            acc -= prod;
        }
    }
    Ok(acc)
}

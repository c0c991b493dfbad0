//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! `Polynomial` maps monomials to nonzero `BigInt` coefficients; the map is
//! always in canonical form (no zero coefficients, no zero exponents), so
//! structural equality is polynomial equality. Coefficients are integers,
//! never rationals: division only appears where the quotient is again a
//! polynomial, and [`Polynomial::exact_div`] reports `InexactDivision`
//! otherwise.
//!
//! The variable set is closed: λ, the matrix entries `a[i,j]`, the families
//! `x[i]` and `y[i]`, and the three scalars p, q, t. Every variable has exactly
//! one spelling in the text grammar (see [`VarId::name`]), which makes
//! printing and parsing unambiguous.

mod parse;

pub use parse::ParseError;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A variable of the polynomial ring.
///
/// The total order is fixed:
///
/// ```text
/// Lambda < P < Q < T < X(1) < Y(1) < X(2) < Y(2) < ... < Entry(1,2) < Entry(1,3) < ...
/// ```
///
/// Entries are ordered lexicographically by `(i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum VarId {
    /// The deformation parameter λ, printed `l`.
    Lambda,
    /// Generating-function variable, printed `p`.
    P,
    /// Generating-function variable, printed `q`.
    Q,
    /// Generating-function variable, printed `t`.
    T,
    /// Indeterminate `x[i]`, index ≥ 1.
    X(u32),
    /// Indeterminate `y[i]`, index ≥ 1.
    Y(u32),
    /// Generic matrix entry `a[i,j]` with `1 <= i < j`.
    Entry(u32, u32),
}

impl VarId {
    /// Checked constructor for `Entry(i, j)`; panics unless `1 <= i < j`.
    pub fn entry(i: u32, j: u32) -> VarId {
        assert!(i >= 1 && i < j, "entry indices must satisfy 1 <= i < j, got ({i},{j})");
        VarId::Entry(i, j)
    }

    /// Checked constructor for `X(i)`; panics unless `i >= 1`.
    pub fn x(i: u32) -> VarId {
        assert!(i >= 1, "x index must be positive");
        VarId::X(i)
    }

    /// Checked constructor for `Y(i)`; panics unless `i >= 1`.
    pub fn y(i: u32) -> VarId {
        assert!(i >= 1, "y index must be positive");
        VarId::Y(i)
    }

    // Key realizing the documented order. X(i) and Y(i) interleave, so the
    // middle component is the index and the last breaks the X/Y tie.
    fn sort_key(self) -> (u8, u32, u32) {
        match self {
            VarId::Lambda => (0, 0, 0),
            VarId::P => (1, 0, 0),
            VarId::Q => (2, 0, 0),
            VarId::T => (3, 0, 0),
            VarId::X(i) => (4, i, 0),
            VarId::Y(i) => (4, i, 1),
            VarId::Entry(i, j) => (5, i, j),
        }
    }

    /// Canonical text spelling: `l`, `p`, `q`, `t`, `x[i]`, `y[i]`, `a[i,j]`.
    pub fn name(self) -> String {
        match self {
            VarId::Lambda => "l".to_string(),
            VarId::P => "p".to_string(),
            VarId::Q => "q".to_string(),
            VarId::T => "t".to_string(),
            VarId::X(i) => format!("x[{i}]"),
            VarId::Y(i) => format!("y[{i}]"),
            VarId::Entry(i, j) => format!("a[{i},{j}]"),
        }
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A power product of variables. Exponents are strictly positive; the empty
/// map is the monomial 1.
///
/// Monomials are ordered by graded lexicographic order: total degree first,
/// ties broken by comparing exponents variable by variable in increasing
/// [`VarId`] order (an earlier variable is more significant).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: BTreeMap<VarId, u32>,
}

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Monomial {
        Monomial::default()
    }

    /// The monomial `v`.
    pub fn var(v: VarId) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    /// The monomial `v^e` (1 when `e == 0`).
    pub fn var_pow(v: VarId, e: u32) -> Monomial {
        let mut exps = BTreeMap::new();
        if e > 0 {
            exps.insert(v, e);
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.values().map(|&e| u64::from(e)).sum()
    }

    /// Exponent of `v` (0 when absent).
    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    /// Variables with their exponents, in increasing `VarId` order.
    pub fn exponents(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Quotient monomial, or `None` when some exponent of `other` exceeds
    /// the corresponding exponent of `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let slot = exps.get_mut(&v)?;
            if *slot < e {
                return None;
            }
            *slot -= e;
            if *slot == 0 {
                exps.remove(&v);
            }
        }
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Lexicographic tie-break: walk both exponent maps in increasing
        // VarId order; at the first variable where the exponents differ, the
        // larger exponent wins.
        let mut a = self.exps.iter().peekable();
        let mut b = other.exps.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Errors from ring operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingError {
    DivisionByZero,
    /// The divisor does not divide the dividend in the integer polynomial
    /// ring.
    InexactDivision,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::DivisionByZero => write!(f, "division by the zero polynomial"),
            RingError::InexactDivision => write!(f, "inexact polynomial division"),
        }
    }
}

impl std::error::Error for RingError {}

/// A sparse multivariate polynomial with `BigInt` coefficients.
///
/// Canonical form invariant: no stored coefficient is zero. Two polynomials
/// are equal iff their term maps are equal.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::integer(1)
    }

    /// The constant polynomial `n`.
    pub fn integer<N: Into<BigInt>>(n: N) -> Polynomial {
        Polynomial::term(Monomial::one(), n.into())
    }

    /// The polynomial consisting of the single term `c * m` (zero when
    /// `c == 0`).
    pub fn term(m: Monomial, c: BigInt) -> Polynomial {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// The polynomial `v`.
    pub fn var(v: VarId) -> Polynomial {
        Polynomial::term(Monomial::var(v), BigInt::one())
    }

    pub fn lambda() -> Polynomial {
        Polynomial::var(VarId::Lambda)
    }

    pub fn p() -> Polynomial {
        Polynomial::var(VarId::P)
    }

    pub fn q() -> Polynomial {
        Polynomial::var(VarId::Q)
    }

    pub fn t() -> Polynomial {
        Polynomial::var(VarId::T)
    }

    pub fn x(i: u32) -> Polynomial {
        Polynomial::var(VarId::x(i))
    }

    pub fn y(i: u32) -> Polynomial {
        Polynomial::var(VarId::y(i))
    }

    /// The generic matrix entry `a[i,j]`, `1 <= i < j`.
    pub fn entry(i: u32, j: u32) -> Polynomial {
        Polynomial::var(VarId::entry(i, j))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    /// Leading term under the monomial order, or `None` for zero.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// `Some(c)` iff the polynomial is the constant `c` (including zero).
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Highest exponent of `v` over all terms (0 for zero or when `v` is
    /// absent).
    pub fn degree_in(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Applies the ring homomorphism sending each variable in `map` to its
    /// image polynomial, all other variables to themselves. The substitution
    /// is simultaneous.
    pub fn substitute(&self, map: &BTreeMap<VarId, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (mono, coeff) in &self.terms {
            let mut fixed = Monomial::one();
            let mut acc = Polynomial::integer(coeff.clone());
            for (v, e) in mono.exponents() {
                match map.get(&v) {
                    None => fixed = fixed.mul(&Monomial::var_pow(v, e)),
                    Some(image) => acc = &acc * &image.pow(e),
                }
            }
            if !fixed.is_one() {
                acc = &acc * &Polynomial::term(fixed, BigInt::one());
            }
            out += &acc;
        }
        out
    }

    /// Exact division: returns `q` with `self == den * q`, or an error when
    /// `den` is zero or no polynomial quotient exists.
    ///
    /// Strategy: repeated elimination of the leading term (both the leading
    /// monomial and the leading coefficient of `den` must divide), followed
    /// by a mandatory `den * q == self` verification so correctness does not
    /// depend on the division strategy.
    pub fn exact_div(&self, den: &Polynomial) -> Result<Polynomial, RingError> {
        let (den_mono, den_coeff) = den.leading().ok_or(RingError::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((rem_mono, rem_coeff)) = rem.leading() {
            let q_mono = rem_mono
                .checked_div(den_mono)
                .ok_or(RingError::InexactDivision)?;
            let (q_coeff, carry) = num_integer_div_rem(rem_coeff, den_coeff);
            if !carry.is_zero() {
                return Err(RingError::InexactDivision);
            }
            let step = Polynomial::term(q_mono, q_coeff);
            rem -= &(&step * den);
            quot += &step;
        }
        if &(&quot * den) != self {
            return Err(RingError::InexactDivision);
        }
        Ok(quot)
    }

    /// Deterministic canonical rendering; see the module docs for the
    /// grammar. Round-trips through [`Polynomial::parse`].
    pub fn canonical_string(&self) -> String {
        self.to_string()
    }

    /// Parses the canonical polynomial grammar (whitespace-insensitive,
    /// parentheses and integer coefficients allowed).
    pub fn parse(input: &str) -> Result<Polynomial, ParseError> {
        parse::parse_polynomial(input)
    }
}

// BigInt has div_rem via num-integer only; truncated division built from
// the `/` and `%` operators agrees with it for our divisibility test.
fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Decreasing monomial order.
        for (idx, (mono, coeff)) in self.terms.iter().rev().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let abs = coeff.abs();
            if mono.is_one() {
                write!(f, "{abs}")?;
            } else {
                let mut lead = String::new();
                if !abs.is_one() {
                    lead = format!("{abs}*");
                }
                f.write_str(&lead)?;
                for (k, (v, e)) in mono.exponents().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    if e == 1 {
                        write!(f, "{v}")?;
                    } else {
                        write!(f, "{v}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &(-c));
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Polynomial {
        Polynomial::parse(s).expect("test polynomial must parse")
    }

    #[test]
    fn var_order_is_documented_order() {
        let order = vec![
            VarId::Lambda,
            VarId::P,
            VarId::Q,
            VarId::T,
            VarId::x(1),
            VarId::y(1),
            VarId::x(2),
            VarId::y(2),
            VarId::x(3),
            VarId::entry(1, 2),
            VarId::entry(1, 3),
            VarId::entry(2, 3),
            VarId::entry(2, 4),
        ];
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
    }

    #[test]
    #[should_panic(expected = "entry indices")]
    fn entry_rejects_reversed_indices() {
        VarId::entry(2, 1);
    }

    #[test]
    fn monomial_order_is_graded() {
        // degree dominates: l*a[1,3]*a[2,4] (deg 3) > a[1,2]*a[3,4] (deg 2)
        let high = Monomial::var(VarId::Lambda)
            .mul(&Monomial::var(VarId::entry(1, 3)))
            .mul(&Monomial::var(VarId::entry(2, 4)));
        let low = Monomial::var(VarId::entry(1, 2)).mul(&Monomial::var(VarId::entry(3, 4)));
        assert!(high > low);
        // within a degree, the earlier variable is more significant
        let l2 = Monomial::var_pow(VarId::Lambda, 2);
        let lp = Monomial::var(VarId::Lambda).mul(&Monomial::var(VarId::P));
        assert!(l2 > lp);
    }

    #[test]
    fn add_examples() {
        let zero = &Polynomial::lambda() + &(-&Polynomial::lambda());
        assert!(zero.is_zero());
        assert_eq!(&Polynomial::x(1) + &Polynomial::x(1), poly("2*x[1]"));
        let lhs = &(&Polynomial::lambda() * &Polynomial::entry(1, 2)) + &Polynomial::entry(1, 2);
        assert_eq!(lhs, poly("(l+1)*a[1,2]"));
    }

    #[test]
    fn mul_examples() {
        let a = poly("x[1]-y[2]");
        let b = poly("x[1]+y[2]");
        assert_eq!(&a * &b, poly("x[1]^2 - y[2]^2"));
        assert_eq!(&Polynomial::one() * &Polynomial::p(), Polynomial::p());
        assert_eq!(&poly("l-1") * &poly("l+1"), poly("l^2-1"));
    }

    #[test]
    fn substitute_examples() {
        let mut sigma = BTreeMap::new();
        sigma.insert(VarId::x(2), Polynomial::y(2));
        sigma.insert(VarId::y(1), Polynomial::x(1));
        let p = &Polynomial::x(2) * &Polynomial::y(1);
        assert_eq!(p.substitute(&sigma), &Polynomial::y(2) * &Polynomial::x(1));
        assert_eq!(Polynomial::x(3).substitute(&sigma), Polynomial::x(3));

        let mut at_one = BTreeMap::new();
        at_one.insert(VarId::Lambda, Polynomial::one());
        let p = &Polynomial::lambda() * &Polynomial::entry(1, 2);
        assert_eq!(p.substitute(&at_one), Polynomial::entry(1, 2));
    }

    #[test]
    fn substitute_identity_map_is_identity() {
        let p = poly("l^2*a[1,2] - 3*x[1]*y[2] + 7");
        assert_eq!(p.substitute(&BTreeMap::new()), p);
        let mut map = BTreeMap::new();
        map.insert(VarId::Lambda, Polynomial::lambda());
        map.insert(VarId::x(1), Polynomial::x(1));
        assert_eq!(p.substitute(&map), p);
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(poly("l^2-1").exact_div(&poly("l-1")), Ok(poly("l+1")));
        let p = poly("a[1,2]*a[3,4] - l*a[1,3]*a[2,4]");
        assert_eq!(p.exact_div(&Polynomial::one()), Ok(p.clone()));
        assert_eq!(
            poly("l^2+1").exact_div(&poly("l-1")),
            Err(RingError::InexactDivision)
        );
        assert_eq!(
            p.exact_div(&Polynomial::zero()),
            Err(RingError::DivisionByZero)
        );
    }

    #[test]
    fn exact_div_rejects_non_integer_quotient() {
        // (2x)/(2) = x is fine, (x+1)/2 is not a polynomial over Z
        assert_eq!(poly("2*x[1]").exact_div(&poly("2")), Ok(poly("x[1]")));
        assert_eq!(
            poly("x[1]+1").exact_div(&poly("2")),
            Err(RingError::InexactDivision)
        );
    }

    #[test]
    fn canonical_string_examples() {
        let m = Monomial::var(VarId::Lambda)
            .mul(&Monomial::var(VarId::entry(1, 3)))
            .mul(&Monomial::var(VarId::entry(2, 4)));
        let p = Polynomial::term(m, BigInt::from(-1));
        assert_eq!(p.canonical_string(), "-l*a[1,3]*a[2,4]");
        assert_eq!(Polynomial::zero().canonical_string(), "0");
        let sq = poly("(1-l)^2");
        assert_eq!(sq.canonical_string(), "l^2 - 2*l + 1");
    }

    #[test]
    fn constant_queries() {
        assert_eq!(Polynomial::zero().constant_value(), Some(BigInt::zero()));
        assert_eq!(poly("-7").constant_value(), Some(BigInt::from(-7)));
        assert_eq!(poly("l").constant_value(), None);
        assert_eq!(poly("l^3 + x[1]").degree_in(VarId::Lambda), 3);
    }
}

//! Exterior algebra over the rationals on generators `e_1, ..., e_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{OsxError, Result};
use crate::linalg;
use crate::matroid::GroundSubset;

/// A monomial `e_S`, stored as its index set.
///
/// Ordered deg-lex: higher degree is larger; in equal degree the monomial whose
/// sorted index tuple is larger at the first difference wins, so
/// `e[2,3] > e[1,3] > e[1,2]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(GroundSubset);

impl Monomial {
    pub const ONE: Monomial = Monomial(GroundSubset::EMPTY);

    pub fn new(set: GroundSubset) -> Self {
        Monomial(set)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Monomial(GroundSubset::from_points(indices))
    }

    pub fn set(self) -> GroundSubset {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.len()
    }

    pub fn indices(self) -> Vec<usize> {
        self.0.to_vec()
    }

    /// `e_S ∧ e_T = sign · e_{S ∪ T}`, or `None` when the supports meet.
    pub fn wedge(self, other: Monomial) -> Option<(bool, Monomial)> {
        let (s, t) = (self.0.bits(), other.0.bits());
        if s & t != 0 {
            return None;
        }
        // pairs (a, b) with a in S, b in T and a > b
        let inversions: u32 = other.0.iter().map(|b| (s >> b).count_ones()).sum();
        Some((inversions % 2 == 1, Monomial(GroundSubset::from_bits(s | t))))
    }

    /// All monomials of degree `d` in `n` generators, in ascending deg-lex order.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = GroundSubset::all_of_size(n, d).map(Monomial).collect();
        v.sort();
        v
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Sparse element of the exterior algebra. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtElement {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl ExtElement {
    pub fn zero() -> Self {
        ExtElement::default()
    }

    pub fn one() -> Self {
        ExtElement::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        ExtElement::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ExtElement { terms }
    }

    /// The generator `e_i`.
    pub fn generator(i: usize) -> Self {
        ExtElement::monomial(Monomial::from_indices([i]))
    }

    /// `e_S` for an increasing index set.
    pub fn basis(set: GroundSubset) -> Self {
        ExtElement::monomial(Monomial(set))
    }

    /// The ordered product `e_{u_1} ∧ ... ∧ e_{u_k}`.
    pub fn ordered_monomial(indices: &[usize]) -> Self {
        indices.iter().fold(ExtElement::one(), |acc, &i| acc.wedge(&ExtElement::generator(i)))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(terms: I) -> Self {
        let mut out = ExtElement::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub(crate) fn from_map_unchecked(terms: BTreeMap<Monomial, BigRational>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        ExtElement { terms }
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in ascending deg-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub(crate) fn into_map(self) -> BTreeMap<Monomial, BigRational> {
        self.terms
    }

    pub(crate) fn as_map(&self) -> &BTreeMap<Monomial, BigRational> {
        &self.terms
    }

    /// The support as a list of monomials.
    pub fn support(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous elements.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    pub fn homogeneous_degree(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(OsxError::ZeroElement);
        }
        self.degree().ok_or(OsxError::Inhomogeneous)
    }

    /// The largest monomial in deg-lex order.
    pub fn leading_monomial(&self) -> Result<Monomial> {
        self.terms.keys().next_back().copied().ok_or(OsxError::ZeroElement)
    }

    pub fn leading_term(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return ExtElement::zero();
        }
        ExtElement { terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect() }
    }

    pub fn wedge(&self, other: &ExtElement) -> ExtElement {
        let mut out = ExtElement::zero();
        for (m, c) in &self.terms {
            for (k, d) in &other.terms {
                if let Some((negative, mk)) = m.wedge(*k) {
                    let prod = c * d;
                    out.add_term(mk, if negative { -prod } else { prod });
                }
            }
        }
        out
    }

    /// The degree -1 derivation with `∂e_i = 1`.
    pub fn boundary(&self) -> ExtElement {
        let mut out = ExtElement::zero();
        for (m, c) in &self.terms {
            for (k, i) in m.0.iter().enumerate() {
                let term = Monomial(m.0.without(i));
                out.add_term(term, if k % 2 == 0 { c.clone() } else { -c.clone() });
            }
        }
        out
    }

    /// Relabels `e_i` to `e_{perm[i-1]}`; extended as an algebra map.
    pub fn relabel(&self, perm: &[usize]) -> ExtElement {
        let mut out = ExtElement::zero();
        for (m, c) in &self.terms {
            let image: Vec<usize> = m.0.iter().map(|i| perm[i - 1]).collect();
            let e = ExtElement::ordered_monomial(&image);
            out = out + e.scale(c);
        }
        out
    }

    /// Whether `self` is a nonzero product of degree-1 elements.
    ///
    /// Uses the criterion that a nonzero homogeneous `r` of degree `k` is pure
    /// iff `{v ∈ E_1 : v ∧ r = 0}` has dimension `k`.
    pub fn is_pure(&self, n: usize) -> Result<bool> {
        let k = self.homogeneous_degree()?;
        Ok(degree_one_annihilator(self, n).len() == k)
    }
}

/// Basis of `{v ∈ E_1 : v ∧ r = 0}`.
pub fn degree_one_annihilator(r: &ExtElement, n: usize) -> Vec<ExtElement> {
    let images: Vec<_> = (1..=n).map(|i| ExtElement::generator(i).wedge(r).into_map()).collect();
    linalg::kernel(&images)
        .into_iter()
        .map(|v| ExtElement::from_terms(v.into_iter().map(|(i, c)| (Monomial::from_indices([i + 1]), c))))
        .collect()
}

/// `∂e_S` for an index set.
pub fn boundary_of(set: GroundSubset) -> ExtElement {
    ExtElement::basis(set).boundary()
}

/// Left-to-right wedge of the factors.
pub fn pure_from_factors(factors: &[LinearForm]) -> ExtElement {
    factors.iter().fold(ExtElement::one(), |acc, f| acc.wedge(f.as_element()))
}

impl Add for ExtElement {
    type Output = ExtElement;
    fn add(mut self, rhs: ExtElement) -> ExtElement {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add<&ExtElement> for &ExtElement {
    type Output = ExtElement;
    fn add(self, rhs: &ExtElement) -> ExtElement {
        self.clone() + rhs.clone()
    }
}

impl Neg for ExtElement {
    type Output = ExtElement;
    fn neg(self) -> ExtElement {
        ExtElement { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Sub for ExtElement {
    type Output = ExtElement;
    fn sub(self, rhs: ExtElement) -> ExtElement {
        self + (-rhs)
    }
}

impl Sub<&ExtElement> for &ExtElement {
    type Output = ExtElement;
    fn sub(self, rhs: &ExtElement) -> ExtElement {
        self.clone() - rhs.clone()
    }
}

impl Mul<&ExtElement> for &ExtElement {
    type Output = ExtElement;
    fn mul(self, rhs: &ExtElement) -> ExtElement {
        self.wedge(rhs)
    }
}

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for ExtElement {
    /// Terms in descending deg-lex order, e.g. `e[2,3] - e[1,3] + 1/2 e[1,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            if *m == Monomial::ONE {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{} {m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ExtElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A homogeneous degree-1 element.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LinearForm(ExtElement);

impl LinearForm {
    pub fn new(e: ExtElement) -> Result<Self> {
        if e.is_zero() {
            return Ok(LinearForm(e));
        }
        match e.degree() {
            Some(1) => Ok(LinearForm(e)),
            Some(d) => Err(OsxError::DegreeMismatch { expected: 1, found: d }),
            None => Err(OsxError::Inhomogeneous),
        }
    }

    pub fn generator(i: usize) -> Self {
        LinearForm(ExtElement::generator(i))
    }

    /// `e_a - e_b`.
    pub fn difference(a: usize, b: usize) -> Self {
        LinearForm(ExtElement::generator(a) - ExtElement::generator(b))
    }

    pub fn as_element(&self) -> &ExtElement {
        &self.0
    }

    pub fn into_element(self) -> ExtElement {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Coefficient of `e_i`.
    pub fn coefficient(&self, i: usize) -> BigRational {
        self.0.coefficient(Monomial::from_indices([i]))
    }
}

impl Add for LinearForm {
    type Output = LinearForm;
    fn add(self, rhs: LinearForm) -> LinearForm {
        LinearForm(self.0 + rhs.0)
    }
}

impl Neg for LinearForm {
    type Output = LinearForm;
    fn neg(self) -> LinearForm {
        LinearForm(-self.0)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

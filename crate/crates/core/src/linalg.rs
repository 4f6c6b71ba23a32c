//! Exact linear algebra on sparse rational vectors.
//!
//! Rows are keyed by any ordered coordinate type; the pivot of a row is its
//! largest key. With monomial keys this makes the pivots exactly the leading
//! monomials of the spanned space.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{OsxError, Result};
use crate::exterior::{ExtElement, Monomial};

pub type SparseVec<K> = BTreeMap<K, BigRational>;

/// `v += c * w`, pruning zeros.
fn axpy<K: Ord + Clone>(v: &mut SparseVec<K>, c: &BigRational, w: &SparseVec<K>) {
    for (k, x) in w {
        let delta = c * x;
        match v.get_mut(k) {
            Some(y) => {
                *y += delta;
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(k.clone(), delta);
            }
        }
    }
}

fn scale_to_monic<K: Ord>(v: &mut SparseVec<K>) {
    let lead = v.values().next_back().cloned().expect("nonzero row");
    if !lead.is_one() {
        let inv = lead.recip();
        for x in v.values_mut() {
            *x *= &inv;
        }
    }
}

/// Row echelon form keyed by pivot. Every stored row is monic at its largest key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Cancels leading terms against pivots until the leading key is not a pivot.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        while let Some((k, c)) = v.iter().next_back() {
            let Some(row) = self.rows.get(k) else { break };
            let c = -c.clone();
            axpy(&mut v, &c, row);
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        scale_to_monic(&mut r);
        let pivot = r.keys().next_back().unwrap().clone();
        self.rows.insert(pivot, r);
        true
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Reduced row echelon form: each pivot appears in exactly one row.
    /// Rows are returned by descending pivot.
    pub fn rref(&self) -> Vec<SparseVec<K>> {
        let mut done: BTreeMap<K, SparseVec<K>> = BTreeMap::new();
        // ascending pivots: every smaller pivot row is already fully reduced
        for (p, row) in &self.rows {
            let mut r = row.clone();
            for (q, qrow) in done.iter() {
                if let Some(c) = r.get(q).cloned() {
                    axpy(&mut r, &(-c), qrow);
                }
            }
            done.insert(p.clone(), r);
        }
        done.into_values().rev().collect()
    }
}

/// Basis of the kernel of the linear map sending basis vector `i` to `images[i]`.
///
/// Kernel vectors are keyed by domain index.
pub fn kernel<K: Ord + Clone>(images: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    // pivot -> (image row, tag row recording the combination of inputs)
    let mut rows: BTreeMap<K, (SparseVec<K>, SparseVec<usize>)> = BTreeMap::new();
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut tag: SparseVec<usize> = BTreeMap::from([(i, BigRational::one())]);
        while let Some((k, c)) = v.iter().next_back() {
            let Some((row, rtag)) = rows.get(k) else { break };
            let c = -c.clone();
            axpy(&mut v, &c, row);
            axpy(&mut tag, &c, rtag);
        }
        if v.is_empty() {
            out.push(tag);
        } else {
            let lead = v.values().next_back().unwrap().recip();
            for x in v.values_mut() {
                *x *= &lead;
            }
            for x in tag.values_mut() {
                *x *= &lead;
            }
            let pivot = v.keys().next_back().unwrap().clone();
            rows.insert(pivot, (v, tag));
        }
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// A subspace of `E_d` in `n` generators.
#[derive(Clone, Debug)]
pub struct Subspace {
    n: usize,
    degree: usize,
    echelon: Echelon<Monomial>,
}

impl Subspace {
    pub fn zero(n: usize, degree: usize) -> Self {
        Subspace { n, degree, echelon: Echelon::new() }
    }

    /// The whole of `E_d`.
    pub fn full(n: usize, degree: usize) -> Self {
        let mut s = Subspace::zero(n, degree);
        for m in Monomial::all_of_degree(n, degree) {
            s.echelon.insert(BTreeMap::from([(m, BigRational::one())]));
        }
        s
    }

    pub fn span<'a, I>(n: usize, degree: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a ExtElement>,
    {
        let mut s = Subspace::zero(n, degree);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    fn check(&self, v: &ExtElement) -> Result<()> {
        if v.is_zero() {
            return Ok(());
        }
        match v.degree() {
            Some(d) if d == self.degree => Ok(()),
            Some(d) => Err(OsxError::DegreeMismatch { expected: self.degree, found: d }),
            None => Err(OsxError::Inhomogeneous),
        }
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &ExtElement) -> Result<bool> {
        self.check(v)?;
        Ok(self.echelon.insert(v.as_map().clone()))
    }

    pub(crate) fn insert_owned(&mut self, v: ExtElement) -> bool {
        debug_assert!(v.is_zero() || v.degree() == Some(self.degree));
        self.echelon.insert(v.into_map())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        binomial(self.n, self.degree)
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn contains(&self, v: &ExtElement) -> bool {
        self.check(v).is_ok() && self.echelon.contains(v.as_map().clone())
    }

    /// Canonical basis: the reduced row echelon form, by descending pivot.
    pub fn basis(&self) -> Vec<ExtElement> {
        self.echelon.rref().into_iter().map(ExtElement::from_map_unchecked).collect()
    }

    /// Leading monomials of all nonzero elements of the subspace.
    pub fn leading_monomials(&self) -> BTreeSet<Monomial> {
        self.echelon.pivots().copied().collect()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.degree == other.degree
            && self.dim() <= other.dim()
            && self.echelon.rows.values().all(|r| other.echelon.contains(r.clone()))
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self.n == other.n && self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// `self ∩ other`, from the kernel of the stacked map `(α, β) ↦ Σα_i a_i − Σβ_j b_j`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        if self.degree != other.degree {
            return Err(OsxError::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let a: Vec<&SparseVec<Monomial>> = self.echelon.rows.values().collect();
        let b: Vec<&SparseVec<Monomial>> = other.echelon.rows.values().collect();
        let mut images: Vec<SparseVec<Monomial>> = a.iter().map(|&r| r.clone()).collect();
        images.extend(b.iter().map(|r| r.iter().map(|(m, c)| (*m, -c.clone())).collect()));
        let mut out = Subspace::zero(self.n, self.degree);
        for k in kernel(&images) {
            let mut v = BTreeMap::new();
            for (i, c) in k.range(..a.len()) {
                axpy(&mut v, c, a[*i]);
            }
            out.echelon.insert(v);
        }
        Ok(out)
    }

    /// The orthogonal complement under the coordinate pairing on monomials.
    pub fn orthogonal_complement(&self) -> Subspace {
        let rref = self.echelon.rref();
        let pivots = self.leading_monomials();
        let mut out = Subspace::zero(self.n, self.degree);
        for m in Monomial::all_of_degree(self.n, self.degree) {
            if pivots.contains(&m) {
                continue;
            }
            let mut v: SparseVec<Monomial> = BTreeMap::from([(m, BigRational::one())]);
            for row in &rref {
                if let Some(c) = row.get(&m) {
                    let p = *row.keys().next_back().unwrap();
                    v.insert(p, -c.clone());
                }
            }
            out.echelon.insert(v);
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.degree != other.degree {
            return Err(OsxError::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        let mut out = self.clone();
        for r in other.echelon.rows.values() {
            out.echelon.insert(r.clone());
        }
        Ok(out)
    }
}

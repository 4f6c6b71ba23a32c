//! The canonical annihilator elements `z(π)`, `z(F)` and `z(T)`.
//!
//! `z(π)` for an ordered partition is the shuffle-signed product of the
//! boundaries of its blocks. Elements attached to flags and nbc-sets carry an
//! extra normalization sign so that `e_{φ(F)} ∧ z(F) = e_[n]`, where `e_{φ(F)}`
//! is the ordered product over the base read off the flag.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{OsxError, Result};
use crate::exterior::{boundary_of, ExtElement, LinearForm, Monomial};
use crate::ideal::GradedIdeal;
use crate::linalg::Subspace;
use crate::matroid::{Flag, GroundSubset, Matroid, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum ZSource {
    Partition(Vec<Vec<usize>>),
    Flag(Vec<Vec<usize>>),
    Nbc(GroundSubset),
}

/// A `z` element together with the signs used to build it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZElement {
    pub source: ZSource,
    pub value: ExtElement,
    /// Points of `[n]` in concatenated block order.
    pub shuffle: Vec<usize>,
    /// `+1` or `-1`: parity of `shuffle`.
    pub shuffle_sign: i8,
    /// Extra factor applied on top of the shuffle sign; `+1` for bare partitions.
    pub normalization: i8,
}

/// `true` iff the sequence is an odd permutation of its sorted order.
pub fn is_odd_permutation(seq: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

fn sign_of(negative: bool) -> i8 {
    if negative {
        -1
    } else {
        1
    }
}

/// `sign(σ) ∂e_{A_1} ⋯ ∂e_{A_k} e_tail`, where σ lists the blocks then the tail.
fn shuffled_product(blocks: &[GroundSubset], tail: GroundSubset) -> (ExtElement, Vec<usize>, i8) {
    let shuffle: Vec<usize> = blocks.iter().chain(std::iter::once(&tail)).flat_map(|b| b.iter()).collect();
    let sign = sign_of(is_odd_permutation(&shuffle));
    let mut value = ExtElement::one();
    for &b in blocks {
        value = value.wedge(&boundary_of(b));
    }
    value = value.wedge(&ExtElement::basis(tail));
    if sign < 0 {
        value = -value;
    }
    (value, shuffle, sign)
}

/// `z(π)` for an ordered partition.
pub fn z_of_partition(pi: &Partition) -> ZElement {
    let (value, shuffle, shuffle_sign) = shuffled_product(pi.parts(), GroundSubset::EMPTY);
    ZElement { source: ZSource::Partition(pi.to_lists()), value, shuffle, shuffle_sign, normalization: 1 }
}

/// `(-1)^{k(k-1)/2 + Σ_i (|S_i|-1)(k-i)}` for the blocks `S_1..S_k` of a flag.
///
/// Multiplying the shuffle-signed product by this makes `e_{φ(F)} ∧ z = e_[n]`.
pub fn flag_normalization(blocks: &[GroundSubset]) -> i8 {
    let k = blocks.len();
    let moves: usize = blocks.iter().enumerate().map(|(i, b)| (b.len() - 1) * (k - 1 - i)).sum();
    sign_of((k * k.saturating_sub(1) / 2 + moves) % 2 == 1)
}

/// The shuffle-signed product for a flag, without normalization.
///
/// For a maximal flag this is `z(π(F))`; for a partial flag the complement
/// of its top flat is appended as a monomial factor.
pub fn z_of_flag_unnormalized(m: &Matroid, f: &Flag) -> ExtElement {
    shuffled_product(&f.blocks(), m.ground().difference(f.top())).0
}

/// Normalized `z(F)` for a maximal or partial flag.
pub fn z_of_flag(m: &Matroid, f: &Flag) -> ZElement {
    let blocks = f.blocks();
    let (value, shuffle, shuffle_sign) = shuffled_product(&blocks, m.ground().difference(f.top()));
    let normalization = flag_normalization(&blocks);
    ZElement {
        source: ZSource::Flag(f.flats().iter().map(|x| x.to_vec()).collect()),
        value: if normalization < 0 { -value } else { value },
        shuffle,
        shuffle_sign,
        normalization,
    }
}

/// Normalized `z(F)` for a maximal flag.
pub fn z_of_maximal_flag(m: &Matroid, f: &Flag) -> Result<ZElement> {
    if !f.is_maximal(m) {
        return Err(OsxError::NotMaximalFlag);
    }
    Ok(z_of_flag(m, f))
}

/// `z(T)` for an nbc-set, built from the flag of its increasing suffixes.
pub fn z_of_nbc(m: &Matroid, t: GroundSubset) -> Result<ZElement> {
    if t.max_point().is_some_and(|x| x > m.n()) || !m.is_nbc(t) {
        return Err(OsxError::NotNbc(t.to_vec()));
    }
    let f = m.flagify(&t.to_vec())?;
    let mut z = z_of_flag(m, &f);
    z.source = ZSource::Nbc(t);
    Ok(z)
}

/// `Z_p = { z(T) : T ∈ nbc_p }`, in the order of [`Matroid::nbc_sets`].
pub fn z_basis(m: &Matroid, p: usize) -> Vec<ZElement> {
    m.nbc_sets(p).iter().map(|&t| z_of_nbc(m, t).expect("nbc sets are nbc")).collect()
}

/// The linear factors `e_j - e_{min A}` of `z(T)`, one per non-minimal point of each block.
pub fn linear_factors(m: &Matroid, t: GroundSubset) -> Result<Vec<LinearForm>> {
    let f = m.flagify(&t.to_vec())?;
    Ok(f.blocks()
        .into_iter()
        .flat_map(|b| {
            let nu = b.min_point().unwrap();
            b.without(nu).iter().map(move |j| LinearForm::difference(j, nu))
        })
        .collect())
}

/// Both sides of the merge identity for `s = min A_i`, `t = min A_{i+1}` (1-based `i`).
#[derive(Clone, Debug, Serialize)]
pub struct MergeCheck {
    pub i: usize,
    pub s: usize,
    pub t: usize,
    /// `(e_s - e_t) z(π)`.
    pub lhs: ExtElement,
    /// `z(π̃)` with the blocks `A_i` and `A_{i+1}` joined.
    pub merged: ExtElement,
    /// `(-1)^{Σ_{j<=i}(|A_j|-1)}`.
    pub stated_sign: i8,
    pub holds_with_stated_sign: bool,
    pub holds_with_opposite_sign: bool,
}

pub fn merge_multiply(pi: &Partition, i: usize) -> Result<MergeCheck> {
    let parts = pi.parts();
    if i == 0 || i >= parts.len() {
        return Err(OsxError::InvalidParameter(format!("merge index {i} outside 1..{}", parts.len())));
    }
    let (a, b) = (parts[i - 1], parts[i]);
    let (s, t) = (a.min_point().unwrap(), b.min_point().unwrap());
    let lhs = LinearForm::difference(s, t).as_element().wedge(&z_of_partition(pi).value);
    let mut joined: Vec<GroundSubset> = parts[..i - 1].to_vec();
    joined.push(a.union(b));
    joined.extend_from_slice(&parts[i + 1..]);
    let merged = z_of_partition(&Partition::new(pi.n(), joined)?).value;
    let exponent: usize = parts[..i].iter().map(|p| p.len() - 1).sum();
    let stated_sign = sign_of(exponent % 2 == 1);
    let stated = if stated_sign < 0 { -merged.clone() } else { merged.clone() };
    Ok(MergeCheck {
        i,
        s,
        t,
        holds_with_stated_sign: lhs == stated,
        holds_with_opposite_sign: lhs == -stated,
        lhs,
        merged,
        stated_sign,
    })
}

/// Extends a partial flag by adjoining the smallest missing point at each step.
pub fn extend_flag(m: &Matroid, f: &Flag) -> Flag {
    let mut flats = f.flats().to_vec();
    while *flats.last().unwrap() != m.ground() {
        let top = *flats.last().unwrap();
        let x = m.ground().difference(top).min_point().unwrap();
        flats.push(m.closure(top.with(x)));
    }
    Flag::from_flats_unchecked(flats)
}

/// Resolution of `z(T) = ± z(F̃) e_{ν(X_{p+1} \ X_p)} ⋯ e_{ν(X_ℓ \ X_{ℓ-1})}` for the
/// unnormalized elements, `F̃` extending the flag of `T`.
///
/// Returns the sign that matches; `None` if neither does.
pub fn factorization_sign(m: &Matroid, t: GroundSubset) -> Result<Option<i8>> {
    let f = m.flagify(&t.to_vec())?;
    let full = extend_flag(m, &f);
    let mut rhs = z_of_flag_unnormalized(m, &full);
    for w in full.flats()[f.len()..].windows(2) {
        rhs = rhs.wedge(&ExtElement::generator(w[1].difference(w[0]).min_point().unwrap()));
    }
    let lhs = z_of_flag_unnormalized(m, &f);
    Ok(if lhs == rhs {
        Some(1)
    } else if lhs == -rhs {
        Some(-1)
    } else {
        None
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub dim: usize,
    pub expected: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroebnerReport {
    /// `In((I⁰)_q)` against the monomials containing the complement of an nbc-base.
    pub degrees: Vec<DegreeCheck>,
    /// Every `z(T)` lies in `I⁰` with leading monomial `e_{[n] \ T}`.
    pub generators_ok: bool,
    /// The sets meeting every broken circuit are the complements of nbc-sets.
    pub tbc_ok: bool,
    pub pass: bool,
}

/// Monomials of degree `q` divisible by `e_{[n] \ T}` for some `T` in `bases`.
fn multiples_of_complements(m: &Matroid, bases: &[GroundSubset], q: usize) -> BTreeSet<Monomial> {
    let full = m.ground();
    GroundSubset::all_of_size(m.n(), q)
        .filter(|u| bases.iter().any(|t| full.difference(*t).is_subset(*u)))
        .map(Monomial::new)
        .collect()
}

/// Checks that `Z = { z(T) : T ∈ nbc_ℓ }` is a Gröbner basis of `I⁰`.
pub fn groebner_verify(m: &Matroid, os: &GradedIdeal) -> Result<GroebnerReport> {
    let n = m.n();
    let bases = m.nbc_sets(m.rank_total());
    let mut degrees = Vec::new();
    for q in 0..=n {
        let ann = os.annihilator(q)?;
        let expected = multiples_of_complements(m, bases, q);
        let lead = ann.leading_monomials();
        degrees.push(DegreeCheck { degree: q, dim: ann.dim(), expected: expected.len(), pass: lead == expected });
    }
    let top = n - m.rank_total();
    let ann = os.annihilator(top)?;
    let generators_ok = z_basis(m, m.rank_total()).iter().zip(bases).all(|(z, t)| {
        ann.contains(&z.value) && z.value.leading_monomial().ok() == Some(Monomial::new(m.ground().difference(*t)))
    });
    let tbc_ok = tbc_are_nbc_complements(m);
    let pass = generators_ok && tbc_ok && degrees.iter().all(|d| d.pass);
    Ok(GroebnerReport { degrees, generators_ok, tbc_ok, pass })
}

/// Sets meeting every broken circuit are exactly the complements of nbc-sets.
pub fn tbc_are_nbc_complements(m: &Matroid) -> bool {
    let full = m.ground();
    let nbc: BTreeSet<GroundSubset> = (0..=m.rank_total()).flat_map(|p| m.nbc_sets(p).iter().copied()).collect();
    GroundSubset::all(m.n()).all(|u| {
        let tbc = m.broken_circuits().iter().all(|b| !b.intersection(u).is_empty());
        tbc == nbc.contains(&full.difference(u))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZBasisReport {
    pub p: usize,
    pub size: usize,
    pub dim_annihilator: usize,
    pub contained: bool,
    pub independent: bool,
    pub leading_ok: bool,
    pub normalized: bool,
    /// `In((I⁰)_k)` is generated by the leading monomials of `Z_p` for `k >= n - p`.
    pub truncation: Vec<DegreeCheck>,
    pub pass: bool,
}

/// Checks that `Z_p` is a basis of `(I⁰)_{n-p}` and a Gröbner basis of the truncation.
pub fn zp_basis_verify(m: &Matroid, os: &GradedIdeal, p: usize) -> Result<ZBasisReport> {
    let n = m.n();
    if p > m.rank_total() {
        return Err(OsxError::InvalidParameter(format!("p = {p} exceeds the rank {}", m.rank_total())));
    }
    let sets = m.nbc_sets(p);
    let zs = z_basis(m, p);
    let ann = os.annihilator(n - p)?;
    let contained = zs.iter().all(|z| ann.contains(&z.value));
    let span = Subspace::span(n, n - p, zs.iter().map(|z| &z.value))?;
    let independent = span.dim() == zs.len();
    let full = m.ground();
    let leading_ok =
        zs.iter().zip(sets).all(|(z, t)| z.value.leading_monomial().ok() == Some(Monomial::new(full.difference(*t))));
    let top = ExtElement::basis(full);
    let normalized = zs.iter().zip(sets).all(|(z, t)| ExtElement::basis(*t).wedge(&z.value) == top);
    let mut truncation = Vec::new();
    for k in n - p..=n {
        let space = os.annihilator(k)?;
        let expected = multiples_of_complements(m, sets, k);
        truncation.push(DegreeCheck {
            degree: k,
            dim: space.dim(),
            expected: expected.len(),
            pass: space.leading_monomials() == expected,
        });
    }
    let pass = contained
        && independent
        && leading_ok
        && normalized
        && zs.len() == ann.dim()
        && truncation.iter().all(|d| d.pass);
    Ok(ZBasisReport {
        p,
        size: zs.len(),
        dim_annihilator: ann.dim(),
        contained,
        independent,
        leading_ok,
        normalized,
        truncation,
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionDegree {
    pub degree: usize,
    pub dim_i: usize,
    pub dim_intersection: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub degrees: Vec<IntersectionDegree>,
    /// `(I_T)⁰ = E z(T)` in every degree for every nbc-base `T`.
    pub annihilators_ok: bool,
    pub pass: bool,
}

/// Degree-`d` component of the ideal generated by linear forms.
fn linear_ideal_component(n: usize, factors: &[LinearForm], d: usize) -> Subspace {
    let gens: Vec<ExtElement> = factors.iter().map(|f| f.as_element().clone()).collect();
    crate::ideal::ideal_component(n, &gens, d)
}

/// Checks `I = ⋂_T I_T` over nbc-bases, where `I_T` is generated by the factors of `z(T)`.
pub fn linear_ideal_intersection_verify(m: &Matroid, os: &GradedIdeal) -> Result<IntersectionReport> {
    let n = m.n();
    let bases = m.nbc_sets(m.rank_total());
    let factors: Vec<Vec<LinearForm>> = bases.iter().map(|&t| linear_factors(m, t)).collect::<Result<_>>()?;
    let mut degrees = Vec::new();
    for d in 0..=n {
        let mut meet = Subspace::full(n, d);
        for fs in &factors {
            meet = meet.intersection(&linear_ideal_component(n, fs, d))?;
        }
        let i_d = os.component(d)?;
        degrees.push(IntersectionDegree {
            degree: d,
            dim_i: i_d.dim(),
            dim_intersection: meet.dim(),
            pass: meet.equals(i_d),
        });
    }
    let mut annihilators_ok = true;
    'outer: for (&t, fs) in bases.iter().zip(&factors) {
        let z = z_of_nbc(m, t)?.value;
        let gens: Vec<ExtElement> = fs.iter().map(|f| f.as_element().clone()).collect();
        let base_degree = n - m.rank_total();
        for q in 0..=n {
            let ann = crate::ideal::annihilator_component(n, &gens, q);
            let multiples = if q < base_degree {
                Subspace::zero(n, q)
            } else {
                let prods: Vec<ExtElement> = Monomial::all_of_degree(n, q - base_degree)
                    .into_iter()
                    .map(|mono| ExtElement::monomial(mono).wedge(&z))
                    .collect();
                Subspace::span(n, q, prods.iter())?
            };
            if !ann.equals(&multiples) {
                annihilators_ok = false;
                break 'outer;
            }
        }
    }
    let pass = annihilators_ok && degrees.iter().all(|d| d.pass);
    Ok(IntersectionReport { degrees, annihilators_ok, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::os_ideal;

    fn set(points: &[usize]) -> GroundSubset {
        GroundSubset::from_points(points.iter().copied())
    }

    fn cross() -> Matroid {
        Matroid::from_lines(8, &[vec![1, 2, 3, 4], vec![1, 6, 7], vec![2, 5, 8], vec![3, 7, 8], vec![4, 5, 6]]).unwrap()
    }

    #[test]
    fn discrete_partition_is_one() {
        let pi = Partition::from_lists(4, &[vec![1], vec![2], vec![3], vec![4]]).unwrap();
        assert_eq!(z_of_partition(&pi).value, ExtElement::one());
        let pi = Partition::from_lists(2, &[vec![1, 2]]).unwrap();
        assert_eq!(z_of_partition(&pi).value, ExtElement::generator(2) - ExtElement::generator(1));
    }

    #[test]
    fn shuffle_sign_is_recorded() {
        let pi = Partition::from_lists(3, &[vec![2], vec![1, 3]]).unwrap();
        let z = z_of_partition(&pi);
        assert_eq!(z.shuffle, vec![2, 1, 3]);
        assert_eq!(z.shuffle_sign, -1);
        assert_eq!(z.value, ExtElement::generator(1) - ExtElement::generator(3));
    }

    #[test]
    fn merge_on_three_points() {
        let pi = Partition::from_lists(3, &[vec![1], vec![2], vec![3]]).unwrap();
        let c = merge_multiply(&pi, 1).unwrap();
        assert_eq!(c.lhs, ExtElement::generator(1) - ExtElement::generator(2));
        assert_eq!(c.merged, ExtElement::generator(2) - ExtElement::generator(1));
        assert!(c.holds_with_opposite_sign);
        assert!(!c.holds_with_stated_sign);
        assert!(merge_multiply(&pi, 3).is_err());
    }

    #[test]
    fn cross_nbc_normalization() {
        let m = cross();
        let top = ExtElement::basis(m.ground());
        for p in 0..=3 {
            for &t in m.nbc_sets(p) {
                let z = z_of_nbc(&m, t).unwrap();
                assert_eq!(ExtElement::basis(t).wedge(&z.value), top, "T = {t}");
                assert_eq!(z.value.leading_monomial().unwrap(), Monomial::new(m.ground().difference(t)));
            }
        }
        assert_eq!(z_of_nbc(&m, set(&[2, 3])), Err(OsxError::NotNbc(vec![2, 3])));
    }

    #[test]
    fn flag_normalization_matches_wedge() {
        let m = cross();
        let top = ExtElement::basis(m.ground());
        for f in m.maximal_flags() {
            let z = z_of_maximal_flag(&m, &f).unwrap();
            let phi = m.phi(&f);
            assert_eq!(ExtElement::ordered_monomial(phi.as_slice()).wedge(&z.value), top);
        }
    }

    #[test]
    fn factorization_sign_resolves() {
        let m = cross();
        for p in 0..=3 {
            for &t in m.nbc_sets(p) {
                assert!(factorization_sign(&m, t).unwrap().is_some(), "T = {t}");
            }
        }
    }

    #[test]
    fn u23_reports() {
        let m = Matroid::uniform(2, 3).unwrap();
        let os = os_ideal(&m);
        assert!(groebner_verify(&m, &os).unwrap().pass);
        for p in 0..=2 {
            assert!(zp_basis_verify(&m, &os, p).unwrap().pass);
        }
        assert!(linear_ideal_intersection_verify(&m, &os).unwrap().pass);
    }
}

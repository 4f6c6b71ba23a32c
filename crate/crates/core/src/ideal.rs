//! Graded ideals of the exterior algebra: the Orlik–Solomon ideal, its
//! truncations `J(p)`, and degreewise annihilators.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{OsxError, Result};
use crate::exterior::{boundary_of, ExtElement, Monomial};
use crate::linalg::{binomial, kernel, SparseVec, Subspace};
use crate::matroid::{GroundSubset, Matroid};

/// A homogeneous ideal given by generators, with lazily computed components.
#[derive(Debug)]
pub struct GradedIdeal {
    n: usize,
    generators: Vec<ExtElement>,
    components: Vec<OnceLock<Subspace>>,
    annihilators: Vec<OnceLock<Subspace>>,
}

impl GradedIdeal {
    /// Zero generators are dropped; the rest must be homogeneous.
    pub fn new(n: usize, generators: Vec<ExtElement>) -> Result<Self> {
        let mut kept = Vec::with_capacity(generators.len());
        for g in generators {
            if g.is_zero() {
                continue;
            }
            g.homogeneous_degree()?;
            kept.push(g);
        }
        Ok(GradedIdeal {
            n,
            generators: kept,
            components: (0..=n).map(|_| OnceLock::new()).collect(),
            annihilators: (0..=n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExtElement] {
        &self.generators
    }

    fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.n {
            Err(OsxError::InvalidParameter(format!("degree {d} exceeds n = {}", self.n)))
        } else {
            Ok(())
        }
    }

    /// The degree-`d` component, spanned by `m ∧ g` over monomials `m` and generators `g`.
    pub fn component(&self, d: usize) -> Result<&Subspace> {
        self.check_degree(d)?;
        Ok(self.components[d].get_or_init(|| ideal_component(self.n, &self.generators, d)))
    }

    pub fn dim(&self, d: usize) -> Result<usize> {
        Ok(self.component(d)?.dim())
    }

    /// `(I⁰)_q`: elements of degree `q` annihilating every generator.
    pub fn annihilator(&self, q: usize) -> Result<&Subspace> {
        self.check_degree(q)?;
        Ok(self.annihilators[q].get_or_init(|| annihilator_component(self.n, &self.generators, q)))
    }

    /// Dimensions of all components, degrees `0..=n`.
    pub fn dims(&self) -> Vec<usize> {
        (0..=self.n).map(|d| self.components_dim_unchecked(d)).collect()
    }

    fn components_dim_unchecked(&self, d: usize) -> usize {
        self.component(d).expect("degree within range").dim()
    }
}

/// Basis-spanning set of `Σ_g E_{d - deg g} · g`.
pub fn ideal_component(n: usize, generators: &[ExtElement], d: usize) -> Subspace {
    let mut space = Subspace::zero(n, d);
    let ambient = binomial(n, d);
    for g in generators {
        let k = g.degree().expect("generators are homogeneous");
        if k > d {
            continue;
        }
        for m in Monomial::all_of_degree(n, d - k) {
            if space.dim() == ambient {
                return space;
            }
            space.insert_owned(ExtElement::monomial(m).wedge(g));
        }
    }
    space
}

/// Kernel of `a ↦ (a ∧ g)_g` on `E_q`.
///
/// Annihilating the generators suffices: `a ∧ (m ∧ g) = ± m ∧ (a ∧ g)`.
pub fn annihilator_component(n: usize, generators: &[ExtElement], q: usize) -> Subspace {
    let domain = Monomial::all_of_degree(n, q);
    let images: Vec<SparseVec<(usize, Monomial)>> = domain
        .iter()
        .map(|&m| {
            let mut img = BTreeMap::new();
            let a = ExtElement::monomial(m);
            for (gi, g) in generators.iter().enumerate() {
                for (mono, c) in a.wedge(g).terms() {
                    img.insert((gi, *mono), c.clone());
                }
            }
            img
        })
        .collect();
    let mut space = Subspace::zero(n, q);
    for k in kernel(&images) {
        let v = ExtElement::from_terms(k.into_iter().map(|(i, c)| (domain[i], c)));
        space.insert(&v).expect("kernel vectors have degree q");
    }
    space
}

/// `∂e_C` for every circuit `C`.
pub fn os_generators(m: &Matroid) -> Vec<ExtElement> {
    m.circuits().iter().map(|&c| boundary_of(c)).collect()
}

/// `∂e_S` for every dependent `S` with at most `max_size` points.
pub fn dependent_set_generators(m: &Matroid, max_size: usize) -> Vec<ExtElement> {
    (0..=max_size.min(m.n()))
        .flat_map(|k| GroundSubset::all_of_size(m.n(), k))
        .filter(|&s| !m.is_independent(s))
        .map(boundary_of)
        .collect()
}

/// The Orlik–Solomon ideal `I(M)`.
pub fn os_ideal(m: &Matroid) -> GradedIdeal {
    GradedIdeal::new(m.n(), os_generators(m)).expect("boundaries of circuits are homogeneous")
}

/// `J(p, M)`: the ideal generated by the components `I_r` with `2 <= r <= p`.
pub fn j_ideal(os: &GradedIdeal, p: usize) -> Result<GradedIdeal> {
    if p < 2 {
        return Err(OsxError::InvalidParameter(format!("J(p) needs p >= 2, got {p}")));
    }
    let mut gens = Vec::new();
    for r in 2..=p.min(os.n()) {
        gens.extend(os.component(r)?.basis());
    }
    GradedIdeal::new(os.n(), gens)
}

/// `dim (E/I)_p = |nbc_p|` for `p = 0..=rank`.
pub fn hilbert_series(m: &Matroid) -> Vec<usize> {
    (0..=m.rank_total()).map(|p| m.nbc_sets(p).len()).collect()
}

/// `C(n, p) - dim I_p` for `p = 0..=rank`; must agree with [`hilbert_series`].
pub fn hilbert_series_from_ideal(m: &Matroid, os: &GradedIdeal) -> Result<Vec<usize>> {
    (0..=m.rank_total()).map(|p| Ok(binomial(m.n(), p) - os.dim(p)?)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticReport {
    pub quadratic: bool,
    pub first_gap_degree: Option<usize>,
    /// `dim I_d` for `d = 0..=rank`.
    pub dim_i: Vec<usize>,
    /// `dim J(2)_d` for `d = 0..=rank`.
    pub dim_j2: Vec<usize>,
}

/// Whether `I(M)` is generated in degree 2, comparing `dim J(2)_d` with `dim I_d` for `3 <= d <= rank`.
pub fn is_quadratic(m: &Matroid, os: &GradedIdeal) -> Result<QuadraticReport> {
    let j2 = j_ideal(os, 2)?;
    let l = m.rank_total();
    let dim_i: Vec<usize> = (0..=l).map(|d| os.dim(d)).collect::<Result<_>>()?;
    let dim_j2: Vec<usize> = (0..=l).map(|d| j2.dim(d)).collect::<Result<_>>()?;
    let first_gap_degree = (3..=l).find(|&d| dim_i[d] != dim_j2[d]);
    Ok(QuadraticReport { quadratic: first_gap_degree.is_none(), first_gap_degree, dim_i, dim_j2 })
}

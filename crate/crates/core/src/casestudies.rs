//! Built-in fixtures and the two worked configurations: the eight-point
//! cross and the nine-point configuration `nine32`, with its pencil of
//! annihilator elements that contains no pure element.

use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::criteria::{is_line_closed, is_p_independent_matroid, CriterionReport};
use crate::error::{OsxError, Result};
use crate::exterior::{rational, ExtElement, Monomial};
use crate::ideal::{hilbert_series, is_quadratic, j_ideal, os_ideal, GradedIdeal, QuadraticReport};
use crate::linalg::Subspace;
use crate::matroid::{GroundSubset, Matroid};
use crate::presentation::{gamma_tree, neighbors, t_tree, verify_relation_basis, RelationBasisReport, SmallTree};

pub const CROSS_LINES: [&[usize]; 5] = [&[1, 2, 3, 4], &[1, 6, 7], &[2, 5, 8], &[3, 7, 8], &[4, 5, 6]];

/// The orbit of `{1,3,4}` under [`TAU`].
pub const NINE32_LINES: [&[usize]; 9] =
    [&[1, 3, 4], &[1, 2, 5], &[2, 6, 9], &[4, 6, 7], &[4, 5, 8], &[3, 5, 9], &[1, 7, 9], &[2, 7, 8], &[3, 6, 8]];

/// `τ(i) = TAU[i - 1]`.
pub const TAU: [usize; 9] = [2, 6, 1, 5, 9, 4, 8, 3, 7];

/// Triangles of `K₄` with edges `12, 13, 14, 23, 24, 34` labelled `1..=6`.
pub const K4_TRIANGLES: [&[usize]; 4] = [&[1, 2, 4], &[1, 3, 5], &[2, 3, 6], &[4, 5, 6]];

/// Terms `(sign, indices)` of the seed element `x` of the pencil.
pub const PENCIL_SEED: [(i64, [usize; 5]); 5] =
    [(1, [1, 2, 3, 6, 8]), (-1, [1, 2, 4, 6, 9]), (1, [1, 2, 4, 8, 9]), (-1, [1, 2, 6, 8, 9]), (-1, [2, 3, 5, 6, 9])];

/// The monomial where `p` is nonzero and `q` vanishes.
pub const PENCIL_BASE: [usize; 5] = [1, 2, 6, 8, 9];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    Cross,
    Nine32,
    Uniform { k: usize, n: usize },
    K4,
}

impl Fixture {
    /// The six fixtures of the property suite.
    pub const SUITE: [Fixture; 6] = [
        Fixture::Uniform { k: 2, n: 3 },
        Fixture::Uniform { k: 2, n: 4 },
        Fixture::Uniform { k: 3, n: 5 },
        Fixture::K4,
        Fixture::Cross,
        Fixture::Nine32,
    ];

    pub fn matroid(self) -> Result<Matroid> {
        match self {
            Fixture::Cross => Matroid::from_lines(8, &to_lists(&CROSS_LINES)),
            Fixture::Nine32 => Matroid::from_lines(9, &to_lists(&NINE32_LINES)),
            Fixture::Uniform { k, n } => Matroid::uniform(k, n),
            Fixture::K4 => Matroid::from_lines(6, &to_lists(&K4_TRIANGLES)),
        }
    }

    pub fn name(self) -> String {
        match self {
            Fixture::Cross => "cross".into(),
            Fixture::Nine32 => "nine32".into(),
            Fixture::Uniform { k, n } => format!("uniform({k},{n})"),
            Fixture::K4 => "k4".into(),
        }
    }
}

fn to_lists(lines: &[&[usize]]) -> Vec<Vec<usize>> {
    lines.iter().map(|l| l.to_vec()).collect()
}

impl FromStr for Fixture {
    type Err = OsxError;

    /// Accepts `cross`, `nine32`, `nine_three_2`, `k4`, `uniform(k,n)` and `u<k><n>`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let unknown = || OsxError::UnknownFixture(s.to_string());
        match lower.as_str() {
            "cross" => return Ok(Fixture::Cross),
            "nine32" | "nine_three_2" => return Ok(Fixture::Nine32),
            "k4" => return Ok(Fixture::K4),
            _ => {}
        }
        let (k, n) = if let Some(inner) = lower.strip_prefix("uniform(").and_then(|r| r.strip_suffix(')')) {
            let (k, n) = inner.split_once(',').ok_or_else(unknown)?;
            (k.trim().parse().map_err(|_| unknown())?, n.trim().parse().map_err(|_| unknown())?)
        } else if let Some(digits) = lower.strip_prefix('u').filter(|d| d.len() == 2) {
            let mut it = digits.chars().map(|c| c.to_digit(10).map(|d| d as usize));
            (it.next().flatten().ok_or_else(unknown)?, it.next().flatten().ok_or_else(unknown)?)
        } else {
            return Err(unknown());
        };
        Ok(Fixture::Uniform { k, n })
    }
}

pub fn fixture(name: &str) -> Result<Matroid> {
    name.parse::<Fixture>()?.matroid()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub pass: bool,
}

impl NamedCheck {
    fn new(name: &str, pass: bool) -> Self {
        NamedCheck { name: name.to_string(), pass }
    }
}

/// A permutation of `1..=n` mapping circuits to circuits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Automorphism {
    perm: Vec<usize>,
}

impl Automorphism {
    pub fn new(m: &Matroid, perm: Vec<usize>) -> Result<Self> {
        let n = m.n();
        let mut seen = vec![false; n + 1];
        if perm.len() != n || perm.iter().any(|&x| x == 0 || x > n || std::mem::replace(&mut seen[x], true)) {
            return Err(OsxError::NotAutomorphism(perm));
        }
        let a = Automorphism { perm };
        if m.circuits().iter().any(|&c| !m.circuits().contains(&a.apply_set(c))) {
            return Err(OsxError::NotAutomorphism(a.perm));
        }
        Ok(a)
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply_set(&self, s: GroundSubset) -> GroundSubset {
        GroundSubset::from_points(s.iter().map(|i| self.image(i)))
    }

    /// Algebra automorphism `e_i ↦ e_{σ(i)}`, with signs from re-sorting.
    pub fn apply(&self, a: &ExtElement) -> ExtElement {
        a.relabel(&self.perm)
    }

    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { perm: other.perm.iter().map(|&i| self.image(i)).collect() }
    }

    pub fn order(&self) -> usize {
        let identity: Vec<usize> = (1..=self.perm.len()).collect();
        let mut cur = self.clone();
        let mut k = 1;
        while cur.perm != identity {
            cur = cur.compose(self);
            k += 1;
        }
        k
    }
}

pub fn tau(m: &Matroid) -> Result<Automorphism> {
    Automorphism::new(m, TAU.to_vec())
}

/// Every constraint the configuration must satisfy.
pub fn nine32_oracle(m: &Matroid) -> Vec<NamedCheck> {
    let set = |p: &[usize]| GroundSubset::from_points(p.iter().copied());
    let tau = tau(m);
    let lines = m.lines();
    let orbit_closes = tau.as_ref().is_ok_and(|t| {
        let start = set(&[1, 3, 4]);
        let mut orbit = vec![start];
        let mut cur = t.apply_set(start);
        while cur != start {
            orbit.push(cur);
            cur = t.apply_set(cur);
        }
        orbit.len() == 9 && orbit.iter().all(|l| lines.contains(l))
    });
    let three_circuits: Vec<GroundSubset> = m.circuits().iter().copied().filter(|c| c.len() == 3).collect();
    let with_one: GroundSubset =
        three_circuits.iter().filter(|c| c.contains(1)).fold(GroundSubset::EMPTY, |acc, c| acc.union(*c));
    vec![
        NamedCheck::new("tau_is_automorphism", tau.is_ok()),
        NamedCheck::new("tau_has_order_9", tau.as_ref().is_ok_and(|t| t.order() == 9)),
        NamedCheck::new("orbit_of_134_closes_after_9", orbit_closes),
        NamedCheck::new(
            "circuits_134_and_125",
            m.circuits().contains(&set(&[1, 3, 4])) && m.circuits().contains(&set(&[1, 2, 5])),
        ),
        NamedCheck::new("only_6_and_8_avoid_1", m.ground().difference(with_one) == set(&[6, 8])),
        NamedCheck::new(
            "circuit_368_contains_6_and_8",
            three_circuits.iter().any(|c| c.is_subset(set(&[3, 6, 8])) && c.contains(6) && c.contains(8)),
        ),
        NamedCheck::new("nine_lines_of_three", lines.len() == 9 && lines.iter().all(|l| l.len() == 3)),
        NamedCheck::new("three_lines_per_point", (1..=9).all(|i| lines.iter().filter(|l| l.contains(i)).count() == 3)),
        NamedCheck::new("hilbert_series", hilbert_series(m) == vec![1, 9, 27, 19]),
    ]
}

pub fn pencil_seed() -> ExtElement {
    ExtElement::from_terms(
        PENCIL_SEED.iter().map(|(c, idx)| (Monomial::from_indices(idx.iter().copied()), rational(*c))),
    )
}

/// `p = (1 - τ)(1 + τ³ + τ⁶) x` and `q = τ p`.
pub fn pencil_elements(tau: &Automorphism) -> (ExtElement, ExtElement) {
    let x = pencil_seed();
    let t3 = tau.compose(tau).compose(tau);
    let y = x.clone() + t3.apply(&x) + t3.apply(&t3.apply(&x));
    let p = y.clone() - tau.apply(&y);
    let q = tau.apply(&p);
    (p, q)
}

/// Basis exchange on the support: for supports `B, B'` and `x ∈ B \ B'` some
/// `y ∈ B' \ B` has `B - x + y` in the support.
pub fn support_satisfies_exchange(r: &ExtElement) -> bool {
    let support: Vec<GroundSubset> = r.support().map(|m| m.set()).collect();
    let has = |s: GroundSubset| !r.coefficient(Monomial::new(s)).is_zero();
    support.iter().all(|&b| {
        support
            .iter()
            .all(|&b2| b.difference(b2).iter().all(|x| b2.difference(b).iter().any(|y| has(b.without(x).with(y)))))
    })
}

/// Sample points `(α:β)` with `0 <= α <= 10`, `|β| <= 10`, coprime, one per projective point.
pub fn pencil_sample_points() -> Vec<(i64, i64)> {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let mut out = vec![(0, 1)];
    for a in 1..=10i64 {
        for b in -10..=10i64 {
            if gcd(a, b) == 1 {
                out.push((a, b));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PencilReport {
    pub p: ExtElement,
    pub q: ExtElement,
    pub dim_annihilator: usize,
    pub base: GroundSubset,
    /// A support monomial of `p` outside the support of `q`, used against [`PencilReport::base`].
    pub exchange_partner: GroundSubset,
    pub removed_point: usize,
    /// `base - removed_point + y` for `y ∈ exchange_partner \ base`.
    pub exchange_sets: Vec<GroundSubset>,
    pub samples: usize,
    pub checks: Vec<NamedCheck>,
}

fn coefficient(r: &ExtElement, s: GroundSubset) -> BigRational {
    r.coefficient(Monomial::new(s))
}

/// Finds `B'` with `p_{B'} ≠ 0 = q_{B'}` and `x ∈ B \ B'` whose every exchange
/// `B - x + y`, `y ∈ B' \ B`, has zero coefficient in both `p` and `q`.
/// Candidates removing `preferred` come first.
fn failing_exchange(
    p: &ExtElement,
    q: &ExtElement,
    b: GroundSubset,
    preferred: usize,
) -> Option<(GroundSubset, usize, Vec<GroundSubset>)> {
    let vanishes = |s: GroundSubset| coefficient(p, s).is_zero() && coefficient(q, s).is_zero();
    let mut found = Vec::new();
    for b2 in p.support().map(|m| m.set()) {
        if !coefficient(q, b2).is_zero() || b2 == b {
            continue;
        }
        for x in b.difference(b2).iter() {
            let swaps: Vec<GroundSubset> = b2.difference(b).iter().map(|y| b.without(x).with(y)).collect();
            if swaps.iter().all(|&s| vanishes(s)) {
                found.push((b2, x, swaps));
            }
        }
    }
    found.sort_by_key(|(b2, x, _)| (*x != preferred, *b2));
    found.into_iter().next()
}

/// Shows that `(J(2)⁰)_5` of `nine32` is spanned by `p, q` and has no pure element.
///
/// Fails with the name of the first check that does not hold.
pub fn pencil_analysis() -> Result<PencilReport> {
    let m = Fixture::Nine32.matroid()?;
    let t = tau(&m)?;
    let (p, q) = pencil_elements(&t);
    let os = os_ideal(&m);
    let j2 = j_ideal(&os, 2)?;
    let ann = j2.annihilator(5)?;
    let mut checks = Vec::new();
    let mut record = |name: &str, pass: bool| -> Result<()> {
        checks.push(NamedCheck::new(name, pass));
        if pass {
            Ok(())
        } else {
            Err(OsxError::CheckFailed(name.to_string()))
        }
    };

    record("p_q_annihilate_j2", ann.contains(&p) && ann.contains(&q))?;
    let span = Subspace::span(m.n(), 5, [&p, &q])?;
    record("annihilator_has_dimension_2", ann.dim() == 2)?;
    record("span_p_q_is_annihilator", span.dim() == 2 && span.equals(ann))?;

    let base = GroundSubset::from_points(PENCIL_BASE);
    record("base_in_support_of_p", !coefficient(&p, base).is_zero())?;
    record("base_outside_support_of_q", coefficient(&q, base).is_zero())?;
    let named_swaps = [base.without(9).with(5), base.without(9).with(7)];
    record(
        "exchange_monomials_vanish",
        named_swaps.iter().all(|&s| coefficient(&p, s).is_zero() && coefficient(&q, s).is_zero()),
    )?;
    let found = failing_exchange(&p, &q, base, 9);
    record("exchange_fails_for_nonzero_alpha", found.is_some())?;
    let (partner, removed, swaps) = found.expect("checked above");
    record("tau_translate_covers_zero_alpha", t.apply(&p) == q && !p.is_pure(m.n())?)?;

    let samples = pencil_sample_points();
    let mut all_impure = true;
    for &(a, b) in &samples {
        let r = p.scale(&rational(a)) + q.scale(&rational(b));
        all_impure &= !r.is_pure(m.n())?;
    }
    record("sampled_pencil_is_impure", samples.len() >= 100 && all_impure)?;

    Ok(PencilReport {
        p,
        q,
        dim_annihilator: ann.dim(),
        base,
        exchange_partner: partner,
        removed_point: removed,
        exchange_sets: swaps,
        samples: samples.len(),
        checks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionAudit {
    pub dim_i3: usize,
    pub dim_j2_3: usize,
    /// `7 × 9`: seven degree-1 multipliers per quadratic generator.
    pub bound: usize,
    pub pass: bool,
}

/// Exact `dim I_3` and `dim J(2)_3`; passes when `dim J(2)_3 <= bound < dim I_3`.
pub fn dimension_audit(m: &Matroid, os: &GradedIdeal) -> Result<DimensionAudit> {
    let j2 = j_ideal(os, 2)?;
    let dim_i3 = os.dim(3)?;
    let dim_j2_3 = j2.dim(3)?;
    let bound = (m.n() - 2) * j2.generators().len();
    Ok(DimensionAudit { dim_i3, dim_j2_3, bound, pass: dim_j2_3 <= bound && bound < dim_i3 })
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeSummary {
    pub s: GroundSubset,
    pub neighbors: GroundSubset,
    pub gamma_vertices: Vec<Vec<usize>>,
    pub small_tree: SmallTree,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseStudyReport {
    pub fixture: String,
    pub n: usize,
    pub rank: usize,
    pub hilbert: Vec<usize>,
    pub nbc_bases: usize,
    pub quadratic: QuadraticReport,
    pub line_closed: CriterionReport,
    pub three_independent: CriterionReport,
    pub dimension_audit: DimensionAudit,
    pub relation_basis: RelationBasisReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<NamedCheck>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pencil: Option<PencilReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trees: Vec<TreeSummary>,
}

fn tree_summary(m: &Matroid, s: GroundSubset) -> Result<TreeSummary> {
    let g = gamma_tree(m, s)?;
    Ok(TreeSummary {
        s,
        neighbors: neighbors(m, s),
        gamma_vertices: g.vertices.iter().map(|v| v.ordered().0).collect(),
        small_tree: t_tree(m, s)?,
    })
}

/// Runs every analysis of the named worked configuration (`cross` or `nine32`).
pub fn run_case_study(fixture: Fixture, max_n: usize) -> Result<CaseStudyReport> {
    let m = fixture.matroid()?;
    let os = os_ideal(&m);
    let (oracle, pencil, trees) = match fixture {
        Fixture::Nine32 => (Some(nine32_oracle(&m)), Some(pencil_analysis()?), Vec::new()),
        Fixture::Cross => {
            let set = |p: &[usize]| GroundSubset::from_points(p.iter().copied());
            (None, None, vec![tree_summary(&m, set(&[1, 5]))?, tree_summary(&m, set(&[1, 3]))?])
        }
        _ => return Err(OsxError::UnknownFixture(fixture.name())),
    };
    Ok(CaseStudyReport {
        fixture: fixture.name(),
        n: m.n(),
        rank: m.rank_total(),
        hilbert: hilbert_series(&m),
        nbc_bases: m.nbc_sets(m.rank_total()).len(),
        quadratic: is_quadratic(&m, &os)?,
        line_closed: is_line_closed(&m, max_n)?,
        three_independent: is_p_independent_matroid(&m, 3, max_n)?,
        dimension_audit: dimension_audit(&m, &os)?,
        relation_basis: verify_relation_basis(&m)?,
        oracle,
        pencil,
        trees,
    })
}

/// Whether every coefficient of `r` is an integer of absolute value at most `bound`.
pub fn coefficients_bounded(r: &ExtElement, bound: i64) -> bool {
    r.terms().all(|(_, c)| c.is_integer() && c.abs() <= rational(bound))
}

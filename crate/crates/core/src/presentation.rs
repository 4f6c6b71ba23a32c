//! Degree-1 presentation of `I⁰`: the trees `Γ(S)` and `𝔱(S)`, relations of the
//! first and second kind among the `z(T)`, flag relations, and the change of
//! basis from neat ordered bases to standard ones.
//!
//! Flag elements are the normalized `z(F)` of [`crate::zelements`]; with that
//! normalization the close-flag relation carries no extra sign.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{OsxError, Result};
use crate::exterior::{ExtElement, LinearForm, Monomial};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::matroid::{Flag, GroundSubset, Matroid, OrderedBase};
use crate::zelements::{z_of_flag, z_of_flag_unnormalized, z_of_nbc};

/// `N(S)`: points completing `S` to an nbc-base.
pub fn neighbors(m: &Matroid, s: GroundSubset) -> GroundSubset {
    m.ground().difference(s).iter().filter(|&i| m.is_nbc(s.with(i))).fold(GroundSubset::EMPTY, |acc, i| acc.with(i))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NbcPrimeEntry {
    pub s: GroundSubset,
    pub neighbors: GroundSubset,
    /// `min N(S)`.
    pub first: usize,
}

/// The nbc-sets of size `ℓ - 1` lying in at least two nbc-bases.
pub fn nbc_prime(m: &Matroid) -> Vec<NbcPrimeEntry> {
    let l = m.rank_total();
    if l == 0 {
        return Vec::new();
    }
    m.nbc_sets(l - 1)
        .iter()
        .filter_map(|&s| {
            let ns = neighbors(m, s);
            (ns.len() >= 2).then(|| NbcPrimeEntry { s, neighbors: ns, first: ns.min_point().unwrap() })
        })
        .collect()
}

/// `S(a, k) = (s_1, ..., s_{k-1}, a, s_k, ..., s_{ℓ-1})`, with `k` 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InsertedBase {
    pub s: GroundSubset,
    pub a: usize,
    pub k: usize,
}

impl InsertedBase {
    pub fn new(s: GroundSubset, a: usize, k: usize) -> Self {
        InsertedBase { s, a, k }
    }

    pub fn ordered(&self) -> OrderedBase {
        let mut v = self.s.to_vec();
        v.insert(self.k - 1, self.a);
        OrderedBase(v)
    }

    /// `a` sits at or left of its place in increasing order.
    pub fn is_early(&self) -> bool {
        is_early(self.s, self.a, self.k)
    }

    pub fn is_standard(&self) -> bool {
        self.ordered().is_increasing()
    }

    fn label(&self) -> String {
        self.ordered().0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn is_early(s: GroundSubset, a: usize, k: usize) -> bool {
    k == 1 || s.to_vec().get(k - 2).is_some_and(|&prev| a > prev)
}

/// `φ(flagify(U)) = U`.
pub fn is_neat(m: &Matroid, u: &OrderedBase) -> Result<bool> {
    let f = m.flagify(u.as_slice())?;
    if !f.is_maximal(m) {
        return Err(OsxError::Dependent(u.0.clone()));
    }
    Ok(m.phi(&f) == *u)
}

/// `X^k = cl{s_k, ..., s_{ℓ-1}}` for `k = 1..=ℓ`, with `X^ℓ = ∅`.
fn upper_flat(m: &Matroid, s: GroundSubset, k: usize) -> GroundSubset {
    let v = s.to_vec();
    m.closure(GroundSubset::from_points(v[k - 1..].iter().copied()))
}

/// `Γ(S)`: neat early `S(a, k)`, joined when `cl(X^k ∪ a) = cl(X^k ∪ b)`.
#[derive(Clone, Debug, Serialize)]
pub struct GammaTree {
    pub s: GroundSubset,
    pub vertices: Vec<InsertedBase>,
    /// `(parent, child)` vertex indices; the child has position `k + 1`.
    pub edges: Vec<(usize, usize)>,
    pub root: usize,
}

impl GammaTree {
    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.0 == v).map(|e| e.1)
    }

    pub fn index_of(&self, a: usize, k: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.a == a && v.k == k)
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.children(v).next().is_none()).collect()
    }

    /// The vertex itself and everything below it.
    pub fn descendants(&self, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut i = 0;
        while i < out.len() {
            out.extend(self.children(out[i]));
            i += 1;
        }
        out
    }

    /// `{ root, inserted, position, children }`, where every child is again such a subtree.
    pub fn to_nested_json(&self) -> Value {
        self.node_json(self.root)
    }

    fn node_json(&self, v: usize) -> Value {
        let b = &self.vertices[v];
        let children: Vec<Value> = self.children(v).map(|c| self.node_json(c)).collect();
        json!({ "root": b.ordered().0, "inserted": b.a, "position": b.k, "children": children })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph gamma {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  \"{}\";", v.label());
        }
        for &(p, c) in &self.edges {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", self.vertices[p].label(), self.vertices[c].label());
        }
        out.push_str("}\n");
        out
    }
}

fn check_nbc_prime(m: &Matroid, s: GroundSubset) -> Result<GroundSubset> {
    let l = m.rank_total();
    if l == 0 || s.len() != l - 1 || !m.is_nbc(s) {
        return Err(OsxError::NotInNbcPrime(s.to_vec()));
    }
    let ns = neighbors(m, s);
    if ns.len() < 2 {
        return Err(OsxError::NotInNbcPrime(s.to_vec()));
    }
    Ok(ns)
}

/// Builds `Γ(S)` and checks that it is a tree rooted at `S(min N(S), 1)`
/// whose leaves are the standard orderings.
pub fn gamma_tree(m: &Matroid, s: GroundSubset) -> Result<GammaTree> {
    let ns = check_nbc_prime(m, s)?;
    let l = m.rank_total();
    let mut vertices = Vec::new();
    for k in 1..=l {
        for a in ns.iter() {
            let v = InsertedBase::new(s, a, k);
            if v.is_early() && is_neat(m, &v.ordered())? {
                vertices.push(v);
            }
        }
    }
    let mut edges = Vec::new();
    for (i, p) in vertices.iter().enumerate() {
        if p.k >= l {
            continue;
        }
        let x = upper_flat(m, s, p.k);
        let span = m.closure(x.with(p.a));
        for (j, c) in vertices.iter().enumerate() {
            if c.k == p.k + 1 && m.closure(x.with(c.a)) == span {
                edges.push((i, j));
            }
        }
    }
    let root = vertices
        .iter()
        .position(|v| v.k == 1 && v.a == ns.min_point().unwrap())
        .ok_or_else(|| OsxError::NotInGamma(InsertedBase::new(s, ns.min_point().unwrap(), 1).ordered().0))?;
    let tree = GammaTree { s, vertices, edges, root };
    validate_gamma(&tree, ns)?;
    Ok(tree)
}

fn invalid_tree(s: GroundSubset, what: &str) -> OsxError {
    OsxError::InvalidParameter(format!("Γ({s}) {what}"))
}

fn validate_gamma(t: &GammaTree, ns: GroundSubset) -> Result<()> {
    if t.edges.len() + 1 != t.vertices.len() {
        return Err(invalid_tree(t.s, "has the wrong number of edges for a tree"));
    }
    if t.descendants(t.root).len() != t.vertices.len() {
        return Err(invalid_tree(t.s, "is not connected from its root"));
    }
    for (i, v) in t.vertices.iter().enumerate() {
        let parents = t.edges.iter().filter(|e| e.1 == i).count();
        if parents != usize::from(i != t.root) || (v.k == 1 && i != t.root) {
            return Err(invalid_tree(t.s, "has a vertex with the wrong number of parents"));
        }
    }
    let leaves: BTreeSet<OrderedBase> = t.leaves().into_iter().map(|v| t.vertices[v].ordered()).collect();
    let standard: BTreeSet<OrderedBase> = ns.iter().map(|a| OrderedBase(t.s.with(a).to_vec())).collect();
    if leaves != standard {
        return Err(invalid_tree(t.s, "has leaves other than the standard orderings"));
    }
    Ok(())
}

/// `𝔱(S)` on `N(S)`; edges are stored as `(a, b)` with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallTree {
    pub s: GroundSubset,
    pub vertices: Vec<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

impl SmallTree {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph t {\n");
        for v in &self.vertices {
            let _ = writeln!(out, "  {v};");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }
}

/// Edges `(a, b)` of `Γ(S)` with `a ≠ b`, each with the position `k` of `S(a, k)`.
fn tree_edges_with_position(g: &GammaTree) -> Vec<(usize, usize, usize)> {
    g.edges
        .iter()
        .map(|&(p, c)| (g.vertices[p].a, g.vertices[c].a, g.vertices[p].k))
        .filter(|(a, b, _)| a != b)
        .collect()
}

pub fn t_tree_by_projection(g: &GammaTree, ns: GroundSubset) -> SmallTree {
    SmallTree {
        s: g.s,
        vertices: ns.to_vec(),
        edges: tree_edges_with_position(g).into_iter().map(|(a, b, _)| (a.min(b), a.max(b))).collect(),
    }
}

/// Moves each non-minimal `b` left from its standard slot while `S(b, k)` stays
/// neat; the first non-neat position reads off the partner `a` via `φ`.
pub fn t_tree_by_shifting(m: &Matroid, s: GroundSubset) -> Result<SmallTree> {
    let ns = check_nbc_prime(m, s)?;
    let mut edges = BTreeSet::new();
    let first = ns.min_point().unwrap();
    for b in ns.iter().filter(|&b| b != first) {
        let mut k = s.iter().filter(|&x| x < b).count() + 1;
        loop {
            if k == 1 {
                return Err(invalid_tree(s, "has a second neat vertex in the first position"));
            }
            let u = InsertedBase::new(s, b, k - 1).ordered();
            if is_neat(m, &u)? {
                k -= 1;
                continue;
            }
            let f = m.flagify(u.as_slice())?;
            let phi = m.phi(&f);
            let a = phi.0[k - 2];
            if InsertedBase::new(s, a, k - 1).ordered() != phi {
                return Err(invalid_tree(s, "shift does not land on an inserted base"));
            }
            edges.insert((a.min(b), a.max(b)));
            break;
        }
    }
    Ok(SmallTree { s, vertices: ns.to_vec(), edges })
}

/// `𝔱(S)`, computed both from `Γ(S)` and by shifting; the two must agree.
pub fn t_tree(m: &Matroid, s: GroundSubset) -> Result<SmallTree> {
    let ns = check_nbc_prime(m, s)?;
    let g = gamma_tree(m, s)?;
    let projected = t_tree_by_projection(&g, ns);
    let shifted = t_tree_by_shifting(m, s)?;
    if projected != shifted {
        return Err(invalid_tree(s, "projection and shifting give different small trees"));
    }
    if projected.edges.len() + 1 != projected.vertices.len() {
        return Err(invalid_tree(s, "projects to a graph that is not a tree"));
    }
    Ok(projected)
}

/// `z(S(a, k)) = Σ (-1)^{j-k} z(S(b, j))` over standard descendants `S(b, j)`.
///
/// Returns the nbc-bases with their signs.
pub fn expand_to_standard(m: &Matroid, s: GroundSubset, a: usize, k: usize) -> Result<Vec<(GroundSubset, i8)>> {
    let g = gamma_tree(m, s)?;
    expand_in_tree(&g, a, k)
}

fn expand_in_tree(g: &GammaTree, a: usize, k: usize) -> Result<Vec<(GroundSubset, i8)>> {
    let v = g.index_of(a, k).ok_or_else(|| OsxError::NotInGamma(InsertedBase::new(g.s, a, k).ordered().0))?;
    Ok(g.descendants(v)
        .into_iter()
        .map(|d| g.vertices[d])
        .filter(|d| d.is_standard())
        .map(|d| (d.s.with(d.a), if (d.k - k).is_multiple_of(2) { 1 } else { -1 }))
        .collect())
}

/// Checks the expansion of `S(a, k)` against the directly computed `z`.
pub fn verify_expansion(m: &Matroid, s: GroundSubset, a: usize, k: usize) -> Result<bool> {
    let terms = expand_to_standard(m, s, a, k)?;
    let direct = z_of_flag(m, &m.flagify(InsertedBase::new(s, a, k).ordered().as_slice())?).value;
    Ok(direct == combine(m, terms.iter().map(|&(t, sign)| (t, sign)))?)
}

fn combine<I: IntoIterator<Item = (GroundSubset, i8)>>(m: &Matroid, terms: I) -> Result<ExtElement> {
    let mut sum = ExtElement::zero();
    for (t, sign) in terms {
        let z = z_of_nbc(m, t)?.value;
        sum = if sign > 0 { sum + z } else { sum - z };
    }
    Ok(sum)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    First,
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "from", rename_all = "snake_case")]
pub enum Provenance {
    /// Edge `(a, b)` of `𝔱(S)`, coming from `S(a, k)` and `S(b, k + 1)`.
    TreeEdge { s: GroundSubset, a: usize, b: usize, k: usize },
    /// `(e_j - e_ν) z(T)` for a non-minimal `j` of a block with minimum `ν`.
    Block { t: GroundSubset, j: usize, nu: usize },
}

/// `Σ_T c_T ∧ z(T) = 0`, indexed by nbc-bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub provenance: Provenance,
    #[serde(serialize_with = "as_pairs")]
    pub coefficients: BTreeMap<GroundSubset, LinearForm>,
    /// For the first kind, the flag form `(c, φ(F))` before expansion.
    pub flag_terms: Vec<(LinearForm, OrderedBase)>,
}

impl Relation {
    /// `Σ_T c_T ∧ z(T)`.
    pub fn evaluate(&self, m: &Matroid) -> Result<ExtElement> {
        let mut sum = ExtElement::zero();
        for (&t, c) in &self.coefficients {
            sum = sum + c.as_element().wedge(&z_of_nbc(m, t)?.value);
        }
        Ok(sum)
    }

    /// `Σ c ∧ z(F)` over the unexpanded flag terms.
    pub fn evaluate_flag_form(&self, m: &Matroid) -> Result<ExtElement> {
        let mut sum = ExtElement::zero();
        for (c, u) in &self.flag_terms {
            sum = sum + c.as_element().wedge(&z_of_flag(m, &m.flagify(u.as_slice())?).value);
        }
        Ok(sum)
    }
}

/// Serializes a keyed map as `[[key, value], ...]`, since subsets are not string keys.
fn as_pairs<S: serde::Serializer>(
    map: &BTreeMap<GroundSubset, LinearForm>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(map.iter())
}

fn add_form(map: &mut BTreeMap<GroundSubset, LinearForm>, t: GroundSubset, f: LinearForm) {
    let entry = map.remove(&t).map_or(f.clone(), |g| g + f);
    if !entry.is_zero() {
        map.insert(t, entry);
    }
}

/// `(e_a - e_b)` from the flats around the rank `r` where two close flags differ.
fn close_flag_factor(f: &Flag, r: usize) -> LinearForm {
    let x = f.flats();
    let a = x[r].difference(x[r - 1]).min_point().unwrap();
    let b = x[r + 1].difference(x[r]).min_point().unwrap();
    LinearForm::difference(a, b)
}

/// The rank at which two close maximal flags differ.
fn differing_rank(f: &Flag, g: &Flag) -> Option<usize> {
    let diffs: Vec<usize> = (0..f.flats().len()).filter(|&i| f.flats()[i] != g.flats()[i]).collect();
    (diffs.len() == 1).then(|| diffs[0])
}

/// The close-flag relation `(e_a - e_b) z(F) - (e_{a'} - e_{b'}) z(F') = 0`
/// for normalized elements.
pub fn close_flag_relation(f: &Flag, g: &Flag) -> Option<(LinearForm, LinearForm)> {
    let r = differing_rank(f, g)?;
    Some((close_flag_factor(f, r), close_flag_factor(g, r)))
}

/// The same relation for unnormalized `z(π(F))`, with the factor
/// `(-1)^{|X_r| - |X'_r|}` on the second term. Returns whether it vanishes.
pub fn close_flag_relation_unnormalized_holds(m: &Matroid, f: &Flag, g: &Flag) -> bool {
    let Some(r) = differing_rank(f, g) else { return false };
    let (fa, ga) = (close_flag_factor(f, r), close_flag_factor(g, r));
    let lhs = fa.as_element().wedge(&z_of_flag_unnormalized(m, f));
    let rhs = ga.as_element().wedge(&z_of_flag_unnormalized(m, g));
    let odd = (f.flats()[r].len() + g.flats()[r].len()) % 2 == 1;
    (if odd { lhs + rhs } else { lhs - rhs }).is_zero()
}

/// One relation per edge of every `𝔱(S)`, expanded to standard generators.
pub fn relations_first_kind(m: &Matroid) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for entry in nbc_prime(m) {
        let g = gamma_tree(m, entry.s)?;
        let t = t_tree(m, entry.s)?;
        for (a, b, k) in tree_edges_with_position(&g) {
            debug_assert!(t.edges.contains(&(a.min(b), a.max(b))));
            let upper = InsertedBase::new(entry.s, b, k + 1);
            let lower = InsertedBase::new(entry.s, a, k);
            let f = m.flagify(upper.ordered().as_slice())?;
            let f2 = m.flagify(lower.ordered().as_slice())?;
            let (cf, cf2) = close_flag_relation(&f, &f2).ok_or(OsxError::NotMaximalFlag)?;
            let mut coefficients = BTreeMap::new();
            for (base, sign) in expand_in_tree(&g, b, k + 1)? {
                add_form(&mut coefficients, base, if sign > 0 { cf.clone() } else { -cf.clone() });
            }
            for (base, sign) in expand_in_tree(&g, a, k)? {
                add_form(&mut coefficients, base, if sign > 0 { -cf2.clone() } else { cf2.clone() });
            }
            out.push(Relation {
                kind: RelationKind::First,
                provenance: Provenance::TreeEdge { s: entry.s, a, b, k },
                coefficients,
                flag_terms: vec![(cf, upper.ordered()), (-cf2, lower.ordered())],
            });
        }
    }
    Ok(out)
}

/// `(e_j - e_{ν(A_i)}) z(T) = 0` for each nbc-base `T` and non-minimal `j` of each block of `π(T)`.
pub fn relations_second_kind(m: &Matroid) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for &t in m.nbc_sets(m.rank_total()) {
        for block in m.flagify(&t.to_vec())?.blocks() {
            let nu = block.min_point().unwrap();
            for j in block.without(nu).iter() {
                out.push(Relation {
                    kind: RelationKind::Second,
                    provenance: Provenance::Block { t, j, nu },
                    coefficients: BTreeMap::from([(t, LinearForm::difference(j, nu))]),
                    flag_terms: Vec::new(),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagRelationCheck {
    pub rank: usize,
    pub terms: usize,
    /// `Σ_Y z(F_Y) = 0` for normalized elements.
    pub normalized_vanishes: bool,
    /// `Σ_Y (-1)^{|Y|} z(π(F_Y)) = 0` for unnormalized elements.
    pub signed_unnormalized_vanishes: bool,
    /// `Σ_Y z(π(F_Y)) = 0` for unnormalized elements, without signs.
    pub plain_unnormalized_vanishes: bool,
}

/// Sums `z` over the flags obtained by replacing `X_i` with each flat between
/// `X_{i-1}` and `X_{i+1}`.
pub fn flag_relation_check(m: &Matroid, f: &Flag, i: usize) -> Result<FlagRelationCheck> {
    if !f.is_maximal(m) {
        return Err(OsxError::NotMaximalFlag);
    }
    if i == 0 || i >= f.len() {
        return Err(OsxError::InvalidParameter(format!("flag relation rank {i} outside 1..{}", f.len())));
    }
    let ys = m.flats_between(f.flats()[i - 1], f.flats()[i + 1])?;
    let (mut normalized, mut signed, mut plain) = (ExtElement::zero(), ExtElement::zero(), ExtElement::zero());
    for &y in &ys {
        let g = f.with_flat(i, y);
        normalized = normalized + z_of_flag(m, &g).value;
        let raw = z_of_flag_unnormalized(m, &g);
        plain = plain + raw.clone();
        signed = if y.len() % 2 == 0 { signed + raw } else { signed - raw };
    }
    Ok(FlagRelationCheck {
        rank: i,
        terms: ys.len(),
        normalized_vanishes: normalized.is_zero(),
        signed_unnormalized_vanishes: signed.is_zero(),
        plain_unnormalized_vanishes: plain.is_zero(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationBasisReport {
    pub kernel_dim: usize,
    pub first_kind: usize,
    pub second_kind: usize,
    /// `Σ_S (|N(S)| - 1)`.
    pub expected_first_kind: usize,
    pub all_vanish: bool,
    pub relations_rank: usize,
    pub pass: bool,
}

type Coordinate = (usize, usize);

fn relation_vector(r: &Relation, index: &BTreeMap<GroundSubset, usize>) -> SparseVec<Coordinate> {
    let mut v = BTreeMap::new();
    for (t, c) in &r.coefficients {
        for (mono, x) in c.as_element().terms() {
            v.insert((index[t], mono.set().min_point().unwrap()), x.clone());
        }
    }
    v
}

/// Checks that the relations of both kinds form a basis of the kernel of
/// `μ: ⊕_T E_1 → E_{n-ℓ+1}`, `(a_T) ↦ Σ a_T ∧ z(T)`.
pub fn verify_relation_basis(m: &Matroid) -> Result<RelationBasisReport> {
    let n = m.n();
    let bases = m.nbc_sets(m.rank_total());
    let zs: Vec<ExtElement> = bases.iter().map(|&t| z_of_nbc(m, t).map(|z| z.value)).collect::<Result<_>>()?;
    let mut images: Vec<SparseVec<Monomial>> = Vec::new();
    for z in &zs {
        for i in 1..=n {
            images.push(ExtElement::generator(i).wedge(z).into_map());
        }
    }
    let kernel_dim = kernel(&images).len();
    let first = relations_first_kind(m)?;
    let second = relations_second_kind(m)?;
    let index: BTreeMap<GroundSubset, usize> = bases.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut all_vanish = true;
    let mut ech: Echelon<Coordinate> = Echelon::new();
    for r in first.iter().chain(&second) {
        all_vanish &= r.evaluate(m)?.is_zero();
        ech.insert(relation_vector(r, &index));
    }
    let expected_first_kind = nbc_prime(m).iter().map(|e| e.neighbors.len() - 1).sum();
    let total = first.len() + second.len();
    let pass = all_vanish
        && ech.rank() == total
        && total == kernel_dim
        && first.len() == expected_first_kind
        && second.len() == (n - m.rank_total()) * bases.len();
    Ok(RelationBasisReport {
        kernel_dim,
        first_kind: first.len(),
        second_kind: second.len(),
        expected_first_kind,
        all_vanish,
        relations_rank: ech.rank(),
        pass,
    })
}

/// A relation among the monomial generators `e_{[n] \ T}` of the initial ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialRelation {
    pub kind: RelationKind,
    #[serde(serialize_with = "as_pairs")]
    pub coefficients: BTreeMap<GroundSubset, LinearForm>,
}

impl MonomialRelation {
    pub fn evaluate(&self, m: &Matroid) -> ExtElement {
        let full = m.ground();
        let mut sum = ExtElement::zero();
        for (t, c) in &self.coefficients {
            sum = sum + c.as_element().wedge(&ExtElement::basis(full.difference(*t)));
        }
        sum
    }
}

/// `|{ j ∈ set : j < i }|`.
fn count_below(set: GroundSubset, i: usize) -> usize {
    set.iter().filter(|&j| j < i).count()
}

/// `(-1)^{ε(S̄, i)} e_i e_{S̄ \ i} - (-1)^{ε(S̄, i(S))} e_{i(S)} e_{S̄ \ i(S)}` for
/// `S ∈ nbc'` and `i ∈ N(S) \ {i(S)}`, with `ε(A, i) = |{ j ∈ A : j < i }|`.
pub fn relations_first_kind_monomial(m: &Matroid) -> Vec<MonomialRelation> {
    let full = m.ground();
    let mut out = Vec::new();
    for e in nbc_prime(m) {
        let sbar = full.difference(e.s);
        let sign = |i: usize| if count_below(sbar, i).is_multiple_of(2) { 1i64 } else { -1 };
        for i in e.neighbors.without(e.first).iter() {
            let lf = |x: usize, c: i64| {
                LinearForm::new(ExtElement::generator(x).scale(&crate::exterior::rational(c))).unwrap()
            };
            out.push(MonomialRelation {
                kind: RelationKind::First,
                coefficients: BTreeMap::from([
                    (e.s.with(i), lf(i, sign(i))),
                    (e.s.with(e.first), lf(e.first, -sign(e.first))),
                ]),
            });
        }
    }
    out
}

/// `e_j e_{[n] \ T} = 0` for `j ∈ [n] \ T`.
pub fn relations_second_kind_monomial(m: &Matroid) -> Vec<MonomialRelation> {
    let full = m.ground();
    m.nbc_sets(m.rank_total())
        .iter()
        .flat_map(|&t| {
            full.difference(t).iter().map(move |j| MonomialRelation {
                kind: RelationKind::Second,
                coefficients: BTreeMap::from([(t, LinearForm::generator(j))]),
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialRelationReport {
    pub kernel_dim: usize,
    pub relations: usize,
    pub relations_rank: usize,
    /// The sign reading of `ε` makes every first-kind relation vanish.
    pub sign_reading_vanishes: bool,
    /// Reading `ε` as a bare integer coefficient makes every first-kind relation vanish.
    pub integer_reading_vanishes: bool,
    /// `e_j e_{[n] \ T} = 0` for `j ∈ T` (as opposed to `j ∉ T`).
    pub second_kind_inside_t_vanishes: bool,
    pub pass: bool,
}

/// Relations of the initial ideal: vanishing, independence, and the kernel dimension.
pub fn verify_monomial_relations(m: &Matroid) -> Result<MonomialRelationReport> {
    let n = m.n();
    let full = m.ground();
    let bases = m.nbc_sets(m.rank_total());
    let index: BTreeMap<GroundSubset, usize> = bases.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let mut images: Vec<SparseVec<Monomial>> = Vec::new();
    for t in bases {
        for i in 1..=n {
            images.push(ExtElement::generator(i).wedge(&ExtElement::basis(full.difference(*t))).into_map());
        }
    }
    let kernel_dim = kernel(&images).len();
    let first = relations_first_kind_monomial(m);
    let second = relations_second_kind_monomial(m);
    let sign_reading_vanishes = first.iter().all(|r| r.evaluate(m).is_zero());
    let mut ech: Echelon<Coordinate> = Echelon::new();
    let mut second_ok = true;
    for r in first.iter().chain(&second) {
        second_ok &= r.evaluate(m).is_zero();
        let mut v = BTreeMap::new();
        for (t, c) in &r.coefficients {
            for (mono, x) in c.as_element().terms() {
                v.insert((index[t], mono.set().min_point().unwrap()), x.clone());
            }
        }
        ech.insert(v);
    }
    let integer_reading_vanishes = nbc_prime(m).iter().all(|e| {
        let sbar = full.difference(e.s);
        e.neighbors.without(e.first).iter().all(|i| {
            let lhs = ExtElement::generator(i)
                .wedge(&ExtElement::basis(sbar.without(i)))
                .scale(&crate::exterior::rational(count_below(sbar, i) as i64));
            let rhs = ExtElement::generator(e.first).wedge(&ExtElement::basis(sbar.without(e.first)));
            (lhs - rhs).is_zero()
        })
    });
    let second_kind_inside_t_vanishes = bases
        .iter()
        .all(|t| t.iter().all(|j| ExtElement::generator(j).wedge(&ExtElement::basis(full.difference(*t))).is_zero()));
    let relations = first.len() + second.len();
    let pass = sign_reading_vanishes && second_ok && ech.rank() == relations && relations == kernel_dim;
    Ok(MonomialRelationReport {
        kernel_dim,
        relations,
        relations_rank: ech.rank(),
        sign_reading_vanishes,
        integer_reading_vanishes,
        second_kind_inside_t_vanishes,
        pass,
    })
}

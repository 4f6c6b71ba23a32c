//! Deciders for line-closure and p-independence, and the implication chain
//! quadratic ⇒ 3-independent ⇒ line-closed.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{OsxError, Result};
use crate::ideal::{is_quadratic, GradedIdeal};
use crate::matroid::{GroundSubset, Matroid, Partition};
use crate::partitions::{partition_of, SetPartitions};
use crate::zelements::z_of_partition;

/// Default bound on the ground set for exhaustive searches.
pub const DEFAULT_MAX_N: usize = 12;

/// Cap on edge assignments in [`graph_component_check`].
pub const MAX_ASSIGNMENTS: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Witness {
    Partition(Vec<Vec<usize>>),
    Subset(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

/// Verdict of a criterion; `witness` is present iff the verdict is negative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub criterion: String,
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub details: BTreeMap<String, u64>,
}

fn check_size(m: &Matroid, max_n: usize) -> Result<()> {
    if m.n() > max_n {
        Err(OsxError::TooLarge { n: m.n(), max: max_n })
    } else {
        Ok(())
    }
}

fn three_circuits(m: &Matroid) -> impl Iterator<Item = GroundSubset> + '_ {
    m.circuits().iter().copied().filter(|c| c.len() == 3)
}

/// Least superset of `s` containing every 3-circuit it meets in two points.
pub fn line_closure(m: &Matroid, s: GroundSubset) -> GroundSubset {
    let triples: Vec<GroundSubset> = three_circuits(m).collect();
    let mut cur = s;
    loop {
        let next = triples.iter().fold(cur, |acc, &c| if c.intersection(acc).len() >= 2 { acc.union(c) } else { acc });
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Whether every line-closed subset is a flat.
///
/// For rank-3 matroids the criterion "every base line-closes to `[n]`" is
/// evaluated as well and must agree.
pub fn is_line_closed(m: &Matroid, max_n: usize) -> Result<CriterionReport> {
    check_size(m, max_n)?;
    let mut witness = None;
    let mut lcl_sets = 0u64;
    for s in GroundSubset::all(m.n()) {
        if line_closure(m, s) == s {
            lcl_sets += 1;
            if witness.is_none() && !m.is_flat(s) {
                witness = Some(s);
            }
        }
    }
    let mut details = BTreeMap::from([("lcl_sets".to_string(), lcl_sets)]);
    if m.rank_total() == 3 {
        let shortcut = GroundSubset::all_of_size(m.n(), 3)
            .filter(|&b| m.is_independent(b))
            .all(|b| line_closure(m, b) == m.ground());
        assert_eq!(shortcut, witness.is_none(), "rank-3 line-closure shortcut disagrees with the subset search");
        details.insert("rank3_shortcut".to_string(), shortcut as u64);
    }
    Ok(CriterionReport {
        criterion: "lcl".to_string(),
        verdict: witness.is_none(),
        witness: witness.map(|s| Witness::Subset(s.to_vec())),
        details,
    })
}

fn check_p(m: &Matroid, p: usize) -> Result<()> {
    if p < 3 || p > m.rank_total() + 1 {
        Err(OsxError::InvalidParameter(format!("p = {p} outside 3..={}", m.rank_total() + 1)))
    } else {
        Ok(())
    }
}

/// Whether every circuit with at most `p` points meets some block in two points.
pub fn is_partition_p_independent(m: &Matroid, pi: &Partition, p: usize) -> Result<bool> {
    check_p(m, p)?;
    if pi.n() != m.n() {
        return Err(OsxError::NotAPartition { n: m.n() });
    }
    Ok(meets_some_block_twice(m, pi.parts(), p))
}

fn meets_some_block_twice(m: &Matroid, blocks: &[GroundSubset], p: usize) -> bool {
    m.circuits().iter().filter(|c| c.len() <= p).all(|c| blocks.iter().any(|b| b.intersection(*c).len() >= 2))
}

/// The defining form: every transversal of at most `p` blocks is independent.
pub fn is_partition_p_independent_by_transversals(m: &Matroid, pi: &Partition, p: usize) -> Result<bool> {
    check_p(m, p)?;
    let parts = pi.parts();
    let k = parts.len();
    for mask in 1u32..(1u32 << k) {
        if mask.count_ones() as usize > p {
            continue;
        }
        let chosen: Vec<GroundSubset> = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| parts[i]).collect();
        if !all_transversals_independent(m, &chosen, GroundSubset::EMPTY) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn all_transversals_independent(m: &Matroid, blocks: &[GroundSubset], acc: GroundSubset) -> bool {
    match blocks.split_first() {
        None => m.is_independent(acc),
        Some((b, rest)) => b.iter().all(|x| all_transversals_independent(m, rest, acc.with(x))),
    }
}

/// Whether every `p`-independent partition of `[n]` is independent.
///
/// Enumerates all set partitions. Details record the number examined and the
/// number of counterexamples; the witness is the first counterexample found.
pub fn is_p_independent_matroid(m: &Matroid, p: usize, max_n: usize) -> Result<CriterionReport> {
    check_size(m, max_n)?;
    check_p(m, p)?;
    let all = m.rank_total() + 1;
    let mut examined = 0u64;
    let mut p_independent = 0u64;
    let mut counterexamples = 0u64;
    let mut witness = None;
    for rgs in SetPartitions::new(m.n()) {
        examined += 1;
        let pi = partition_of(&rgs);
        if !meets_some_block_twice(m, pi.parts(), p) {
            continue;
        }
        p_independent += 1;
        if !meets_some_block_twice(m, pi.parts(), all) {
            counterexamples += 1;
            witness.get_or_insert(pi);
        }
    }
    Ok(CriterionReport {
        criterion: format!("pindep:{p}"),
        verdict: witness.is_none(),
        witness: witness.map(|w| Witness::Partition(w.to_lists())),
        details: BTreeMap::from([
            ("partitions".to_string(), examined),
            ("p_independent".to_string(), p_independent),
            ("counterexamples".to_string(), counterexamples),
        ]),
    })
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// For rank 3: the largest number of components of a graph on `[n]` with one
/// edge on each line (rank-2 flat with at least three points).
///
/// The matroid is 3-independent iff this never exceeds 3. Beyond
/// [`MAX_ASSIGNMENTS`] edge choices the verdict comes from partition enumeration.
pub fn graph_component_check(m: &Matroid, max_n: usize) -> Result<CriterionReport> {
    if m.rank_total() != 3 {
        return Err(OsxError::InvalidParameter(format!("graph check needs rank 3, got {}", m.rank_total())));
    }
    let lines = m.lines();
    let choices: Vec<Vec<(usize, usize)>> = lines
        .iter()
        .map(|l| {
            let pts = l.to_vec();
            let mut edges = Vec::new();
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    edges.push((pts[i], pts[j]));
                }
            }
            edges
        })
        .collect();
    let total: u64 = choices.iter().try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64)).unwrap_or(u64::MAX);
    if total > MAX_ASSIGNMENTS {
        let mut r = is_p_independent_matroid(m, 3, max_n)?;
        r.criterion = "graph".to_string();
        r.details.insert("assignments".to_string(), total);
        r.details.insert("fallback".to_string(), 1);
        return Ok(r);
    }
    let n = m.n();
    let mut best = 0usize;
    let mut best_edges = Vec::new();
    let mut index = vec![0usize; choices.len()];
    loop {
        let mut uf = UnionFind::new(n);
        let mut components = n;
        for (c, &i) in choices.iter().zip(&index) {
            let (a, b) = c[i];
            if uf.union(a - 1, b - 1) {
                components -= 1;
            }
        }
        if components > best {
            best = components;
            best_edges = choices.iter().zip(&index).map(|(c, &i)| c[i]).collect();
        }
        // odometer
        let mut k = 0;
        while k < index.len() {
            index[k] += 1;
            if index[k] < choices[k].len() {
                break;
            }
            index[k] = 0;
            k += 1;
        }
        if k == index.len() {
            break;
        }
    }
    let verdict = best <= 3;
    Ok(CriterionReport {
        criterion: "graph".to_string(),
        verdict,
        witness: (!verdict).then_some(Witness::Edges(best_edges)),
        details: BTreeMap::from([
            ("assignments".to_string(), total),
            ("lines".to_string(), lines.len() as u64),
            ("max_components".to_string(), best as u64),
        ]),
    })
}

/// `z(π) ∧ ∂e_S = ± z(π̄)`, where `π̄` glues the blocks meeting `S`.
///
/// Returns the sign if the identity holds with a nonzero right-hand side.
pub fn glue_sign(pi: &Partition, s: GroundSubset) -> Result<Option<i8>> {
    let touched: Vec<GroundSubset> = pi.parts().iter().copied().filter(|b| !b.intersection(s).is_empty()).collect();
    let glued = touched.iter().fold(GroundSubset::EMPTY, |acc, b| acc.union(*b));
    let mut parts = vec![glued];
    parts.extend(pi.parts().iter().copied().filter(|b| b.intersection(s).is_empty()));
    let rhs = z_of_partition(&Partition::new(pi.n(), parts)?).value;
    let lhs = z_of_partition(pi).value.wedge(&crate::exterior::boundary_of(s));
    Ok(if rhs.is_zero() {
        None
    } else if lhs == rhs {
        Some(1)
    } else if lhs == -rhs {
        Some(-1)
    } else {
        None
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImplicationChain {
    pub quadratic: bool,
    pub three_independent: bool,
    pub line_closed: bool,
    /// quadratic ⇒ 3-independent and 3-independent ⇒ line-closed.
    pub holds: bool,
}

pub fn implication_chain(m: &Matroid, os: &GradedIdeal, max_n: usize) -> Result<ImplicationChain> {
    let quadratic = is_quadratic(m, os)?.quadratic;
    let three_independent = if m.rank_total() >= 2 { is_p_independent_matroid(m, 3, max_n)?.verdict } else { true };
    let line_closed = is_line_closed(m, max_n)?.verdict;
    let holds = (!quadratic || three_independent) && (!three_independent || line_closed);
    Ok(ImplicationChain { quadratic, three_independent, line_closed, holds })
}

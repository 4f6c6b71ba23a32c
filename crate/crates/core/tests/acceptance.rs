//! Acceptance suite: one PASS/FAIL line per criterion, each with its time budget.
//!
//! Run with `cargo test -p osx-core --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use osx_core::casestudies::{dimension_audit, pencil_analysis, Fixture};
use osx_core::criteria::{
    implication_chain, is_line_closed, is_p_independent_matroid, is_partition_p_independent, DEFAULT_MAX_N,
};
use osx_core::exterior::{ExtElement, LinearForm};
use osx_core::ideal::{hilbert_series, is_quadratic, os_ideal};
use osx_core::matroid::{GroundSubset, Matroid, Partition};
use osx_core::presentation::{
    expand_to_standard, flag_relation_check, gamma_tree, neighbors, t_tree, verify_relation_basis,
};
use osx_core::zelements::{groebner_verify, linear_ideal_intersection_verify, z_of_flag, z_of_nbc, zp_basis_verify};

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn set(points: &[usize]) -> GroundSubset {
    GroundSubset::from_points(points.iter().copied())
}

struct Line {
    id: &'static str,
    title: &'static str,
    elapsed: Duration,
    budget: Duration,
    result: Check,
}

impl Line {
    fn pass(&self) -> bool {
        self.result.is_ok() && self.elapsed <= self.budget
    }

    fn print(&self) {
        let status = if self.pass() { "PASS" } else { "FAIL" };
        let note = match &self.result {
            Ok(()) if self.elapsed > self.budget => " (over budget)".to_string(),
            Ok(()) => String::new(),
            Err(e) => format!(": {e}"),
        };
        println!(
            "{status} [{}] {} in {:.3}s of {}s{note}",
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        );
    }
}

fn run(id: &'static str, title: &'static str, budget_secs: u64, f: impl FnOnce() -> Check) -> Line {
    let start = Instant::now();
    let result = f();
    Line { id, title, elapsed: start.elapsed(), budget: Duration::from_secs(budget_secs), result }
}

fn nine32() -> Matroid {
    Fixture::Nine32.matroid().unwrap()
}

fn cross() -> Matroid {
    Fixture::Cross.matroid().unwrap()
}

fn nine32_hilbert() -> Check {
    let h = hilbert_series(&nine32());
    ensure(h == vec![1, 9, 27, 19], || format!("hilbert series {h:?}"))
}

fn nine32_dimensions() -> Check {
    let m = nine32();
    let os = os_ideal(&m);
    let audit = dimension_audit(&m, &os).map_err(|e| e.to_string())?;
    ensure(audit.dim_i3 == 65, || format!("dim I_3 = {}", audit.dim_i3))?;
    ensure(audit.dim_j2_3 <= 63, || format!("dim J(2)_3 = {}", audit.dim_j2_3))?;
    let q = is_quadratic(&m, &os).map_err(|e| e.to_string())?;
    ensure(!q.quadratic && q.first_gap_degree == Some(3), || format!("{q:?}"))
}

fn nine32_criteria() -> Check {
    let m = nine32();
    let p = is_p_independent_matroid(&m, 3, DEFAULT_MAX_N).map_err(|e| e.to_string())?;
    ensure(p.verdict, || format!("3-independence witness {:?}", p.witness))?;
    ensure(p.details["partitions"] == 21147, || format!("examined {} partitions", p.details["partitions"]))?;
    let l = is_line_closed(&m, DEFAULT_MAX_N).map_err(|e| e.to_string())?;
    ensure(l.verdict, || format!("line-closure witness {:?}", l.witness))
}

fn nine32_pencil() -> Check {
    let r = pencil_analysis().map_err(|e| e.to_string())?;
    ensure(r.dim_annihilator == 2, || format!("dim = {}", r.dim_annihilator))?;
    ensure(r.samples >= 100, || format!("{} samples", r.samples))?;
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    ensure(failed.is_empty(), || format!("failed checks {failed:?}"))
}

fn cross_criteria() -> Check {
    let m = cross();
    ensure(is_line_closed(&m, DEFAULT_MAX_N).map_err(|e| e.to_string())?.verdict, || "not line-closed".into())?;
    let p = is_p_independent_matroid(&m, 3, DEFAULT_MAX_N).map_err(|e| e.to_string())?;
    ensure(!p.verdict, || "reported 3-independent".into())?;
    let witness = Partition::from_lists(8, &[vec![1, 3, 7], vec![2, 4, 5], vec![6], vec![8]]).unwrap();
    let three = is_partition_p_independent(&m, &witness, 3).map_err(|e| e.to_string())?;
    let full = is_partition_p_independent(&m, &witness, 4).map_err(|e| e.to_string())?;
    ensure(three && !full, || "witness is not 3-independent-but-dependent".into())?;
    let nbc3 = m.nbc_sets(3).len();
    ensure(nbc3 == 14, || format!("|nbc_3| = {nbc3}"))?;
    let q = is_quadratic(&m, &os_ideal(&m)).map_err(|e| e.to_string())?;
    ensure(!q.quadratic, || "reported quadratic".into())
}

fn cross_presentation() -> Check {
    let m = cross();
    let err = |e: osx_core::OsxError| e.to_string();
    ensure(neighbors(&m, set(&[1, 5])) == set(&[2, 3, 4, 7]), || "N({1,5})".into())?;
    ensure(neighbors(&m, set(&[1, 3])) == set(&[5, 6, 7, 8]), || "N({1,3})".into())?;
    let g = gamma_tree(&m, set(&[1, 5])).map_err(err)?;
    let vertices: BTreeSet<Vec<usize>> = g.vertices.iter().map(|v| v.ordered().0).collect();
    let expected: BTreeSet<Vec<usize>> =
        [vec![2, 1, 5], vec![1, 2, 5], vec![1, 3, 5], vec![1, 4, 5], vec![1, 7, 5], vec![1, 5, 7]].into();
    ensure(vertices == expected, || format!("Γ({{1,5}}) vertices {vertices:?}"))?;
    let t = t_tree(&m, set(&[1, 5])).map_err(err)?;
    ensure(t.edges == [(2, 3), (2, 4), (2, 7)].into(), || format!("𝔱({{1,5}}) = {:?}", t.edges))?;
    let t = t_tree(&m, set(&[1, 3])).map_err(err)?;
    ensure(t.edges == [(5, 6), (5, 7), (7, 8)].into(), || format!("𝔱({{1,3}}) = {:?}", t.edges))?;

    let zf = z_of_flag(&m, &m.flagify(&[1, 6, 3]).map_err(err)?).value;
    let zf2 = z_of_flag(&m, &m.flagify(&[5, 1, 3]).map_err(err)?).value;
    let e62 = LinearForm::difference(6, 2);
    let e15 = LinearForm::difference(1, 5);
    let relation = e62.as_element().wedge(&zf) - e15.as_element().wedge(&zf2);
    ensure(relation.is_zero(), || format!("flag relation leaves {relation}"))?;
    let z = |p: &[usize]| z_of_nbc(&m, set(p)).map(|z| z.value);
    let standard = e62.as_element().wedge(&-z(&[1, 3, 6]).map_err(err)?)
        - e15.as_element().wedge(
            &(z(&[1, 3, 5]).map_err(err)?
                + z(&[1, 3, 6]).map_err(err)?
                + z(&[1, 3, 7]).map_err(err)?
                + z(&[1, 3, 8]).map_err(err)?),
        );
    ensure(standard.is_zero(), || format!("standard expansion leaves {standard}"))?;
    let upper = expand_to_standard(&m, set(&[1, 3]), 6, 2).map_err(err)?;
    ensure(upper == vec![(set(&[1, 3, 6]), -1)], || format!("expansion of S(6,2): {upper:?}"))?;
    let mut lower = expand_to_standard(&m, set(&[1, 3]), 5, 1).map_err(err)?;
    lower.sort();
    let want: Vec<(GroundSubset, i8)> = [5, 6, 7, 8].iter().map(|&b| (set(&[1, 3, b]), 1)).collect();
    ensure(lower == want, || format!("expansion of S(5,1): {lower:?}"))
}

fn property_suite_on(m: &Matroid) -> Check {
    let err = |e: osx_core::OsxError| e.to_string();
    let n = m.n();
    let top = ExtElement::basis(m.ground());
    for s in GroundSubset::all(n) {
        ensure(ExtElement::basis(s).boundary().boundary().is_zero(), || format!("(a) ∂²e_{s} ≠ 0"))?;
    }
    for p in 0..=m.rank_total() {
        for &t in m.nbc_sets(p) {
            let z = z_of_nbc(m, t).map_err(err)?.value;
            ensure(ExtElement::basis(t).wedge(&z) == top, || format!("(b) e_T z(T) for T = {t}"))?;
            let lead = z.leading_monomial().map_err(err)?;
            ensure(lead.set() == m.ground().difference(t), || format!("(c) leading monomial of z({t}) is {lead}"))?;
        }
    }
    let os = os_ideal(m);
    ensure(groebner_verify(m, &os).map_err(err)?.pass, || "(d) Gröbner check".into())?;
    for p in 0..=m.rank_total() {
        let r = zp_basis_verify(m, &os, p).map_err(err)?;
        ensure(r.pass, || format!("(e) Z_{p}: {r:?}"))?;
    }
    ensure(linear_ideal_intersection_verify(m, &os).map_err(err)?.pass, || "(f) intersection".into())?;
    for f in m.maximal_flags() {
        for i in 1..m.rank_total() {
            let c = flag_relation_check(m, &f, i).map_err(err)?;
            ensure(c.normalized_vanishes && c.signed_unnormalized_vanishes, || {
                format!("(g) flag relation at rank {i}: {c:?}")
            })?;
        }
    }
    let rb = verify_relation_basis(m).map_err(err)?;
    ensure(rb.pass, || format!("(h) relation basis {rb:?}"))?;
    let chain = implication_chain(m, &os, DEFAULT_MAX_N).map_err(err)?;
    ensure(chain.holds, || format!("(i) implication chain {chain:?}"))
}

fn property_suite() -> Check {
    for f in Fixture::SUITE {
        property_suite_on(&f.matroid().map_err(|e| e.to_string())?).map_err(|e| format!("{}: {e}", f.name()))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let lines = [
        run("1", "nine32 Hilbert series is 1 + 9t + 27t^2 + 19t^3", 1, nine32_hilbert),
        run("2", "nine32 has dim I_3 = 65, dim J(2)_3 <= 63, first gap in degree 3", 5, nine32_dimensions),
        run("3", "nine32 is 3-independent over 21147 partitions and line-closed", 60, nine32_criteria),
        run("4", "nine32 pencil span{p, q} has no pure element", 30, nine32_pencil),
        run("5", "cross is line-closed, not 3-independent, |nbc_3| = 14, not quadratic", 10, cross_criteria),
        run("6", "cross trees, neighbours, relation and its standard expansion", 5, cross_presentation),
        run("7", "property suite on U23, U24, U35, K4, cross, nine32", 300, property_suite),
    ];
    for l in &lines {
        l.print();
    }
    let failed: Vec<&str> = lines.iter().filter(|l| !l.pass()).map(|l| l.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

//! Cross-checks against independent computations: the Möbius function of the
//! lattice of flats, brute-force rank, dense Gaussian elimination, and
//! broken-circuit containment.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Zero;

use osx_core::casestudies::Fixture;
use osx_core::exterior::{ExtElement, Monomial};
use osx_core::ideal::{hilbert_series, os_ideal};
use osx_core::linalg::binomial;
use osx_core::matroid::{GroundSubset, Matroid};
use osx_core::partitions::{bell, SetPartitions};

fn suite() -> Vec<(String, Matroid)> {
    Fixture::SUITE.iter().map(|f| (f.name(), f.matroid().unwrap())).collect()
}

fn brute_rank(m: &Matroid, s: GroundSubset) -> usize {
    s.subsets().filter(|&t| m.is_independent(t)).map(|t| t.len()).max().unwrap_or(0)
}

/// `h_p = Σ_{rank X = p} |μ(∅, X)|` over the lattice of flats.
fn whitney_numbers(m: &Matroid) -> Vec<usize> {
    let flats: BTreeSet<GroundSubset> = GroundSubset::all(m.n()).map(|s| m.closure(s)).collect();
    let mut by_size: Vec<GroundSubset> = flats.into_iter().collect();
    by_size.sort_by_key(|f| f.len());
    let mut mu: BTreeMap<GroundSubset, i64> = BTreeMap::new();
    for &x in &by_size {
        let below: i64 = mu.iter().filter(|(y, _)| y.is_subset(x) && **y != x).map(|(_, v)| v).sum();
        mu.insert(x, if x.is_empty() { 1 } else { -below });
    }
    let mut h = vec![0usize; m.rank_total() + 1];
    for (x, v) in mu {
        h[m.rank(x)] += v.unsigned_abs() as usize;
    }
    h
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
fn dense_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c].clone() / pivot.clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x -= p.clone() * f.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim I_d` from the dense matrix of all products `e_M ∧ ∂e_C`.
fn dense_ideal_dim(m: &Matroid, d: usize) -> usize {
    let columns = Monomial::all_of_degree(m.n(), d);
    let mut rows = Vec::new();
    for &c in m.circuits() {
        let g = ExtElement::basis(c).boundary();
        let k = c.len() - 1;
        if k > d {
            continue;
        }
        for mono in Monomial::all_of_degree(m.n(), d - k) {
            let prod = ExtElement::monomial(mono).wedge(&g);
            if !prod.is_zero() {
                rows.push(columns.iter().map(|&col| prod.coefficient(col)).collect());
            }
        }
    }
    dense_rank(rows)
}

#[test]
fn hilbert_series_matches_whitney_numbers() {
    for (name, m) in suite() {
        assert_eq!(hilbert_series(&m), whitney_numbers(&m), "{name}");
    }
    let cross = Fixture::Cross.matroid().unwrap();
    assert_eq!(whitney_numbers(&cross), vec![1, 8, 21, 14]);
}

#[test]
fn rank_and_closure_match_brute_force() {
    for (name, m) in suite() {
        for s in GroundSubset::all(m.n()) {
            let r = brute_rank(&m, s);
            assert_eq!(m.rank(s), r, "{name}: rank {s}");
            let cl: GroundSubset = GroundSubset::from_points((1..=m.n()).filter(|&x| brute_rank(&m, s.with(x)) == r));
            assert_eq!(m.closure(s), cl, "{name}: closure {s}");
        }
    }
}

#[test]
fn ideal_dimensions_match_dense_elimination() {
    for (name, m) in suite().into_iter().filter(|(_, m)| m.n() <= 8) {
        let os = os_ideal(&m);
        for d in 0..=m.rank_total() {
            assert_eq!(os.dim(d).unwrap(), dense_ideal_dim(&m, d), "{name}: degree {d}");
        }
    }
}

#[test]
fn leading_monomials_contain_broken_circuits() {
    for (name, m) in suite() {
        let os = os_ideal(&m);
        for d in 0..=m.rank_total() {
            let leads = os.component(d).unwrap().leading_monomials();
            let expected: BTreeSet<Monomial> = Monomial::all_of_degree(m.n(), d)
                .into_iter()
                .filter(|mono| m.broken_circuits().iter().any(|b| b.is_subset(mono.set())))
                .collect();
            assert_eq!(leads, expected, "{name}: degree {d}");
        }
    }
}

#[test]
fn annihilator_dimensions_are_dual() {
    for (name, m) in suite() {
        let os = os_ideal(&m);
        let h = hilbert_series(&m);
        for q in 0..=m.n() {
            let p = m.n() - q;
            let quotient = if p < h.len() { h[p] } else { 0 };
            assert_eq!(os.annihilator(q).unwrap().dim(), quotient, "{name}: degree {q}");
            assert_eq!(binomial(m.n(), p) - os.dim(p).unwrap(), quotient, "{name}: degree {p}");
        }
    }
}

#[test]
fn set_partition_counts() {
    // Bell numbers as sums of Stirling numbers of the second kind.
    for n in 1..=8 {
        let mut stirling = vec![vec![0u64; n + 1]; n + 1];
        stirling[0][0] = 1;
        for i in 1..=n {
            for k in 1..=i {
                stirling[i][k] = k as u64 * stirling[i - 1][k] + stirling[i - 1][k - 1];
            }
        }
        let total: u64 = stirling[n].iter().sum();
        assert_eq!(bell(n), total);
        let mut by_blocks = vec![0u64; n + 1];
        for rgs in SetPartitions::new(n) {
            by_blocks[*rgs.iter().max().unwrap() as usize + 1] += 1;
        }
        assert_eq!(by_blocks, stirling[n]);
    }
}

#[test]
fn wedge_sign_matches_permutation_parity() {
    use osx_core::zelements::is_odd_permutation;
    let n = 6;
    for a in GroundSubset::all(n) {
        for b in GroundSubset::all(n) {
            let got = Monomial::new(a).wedge(Monomial::new(b));
            if !a.intersection(b).is_empty() {
                assert!(got.is_none());
                continue;
            }
            let seq: Vec<usize> = a.iter().chain(b.iter()).collect();
            let (negative, mono) = got.unwrap();
            assert_eq!(mono.set(), a.union(b));
            assert_eq!(negative, is_odd_permutation(&seq), "{a} ∧ {b}");
        }
    }
}

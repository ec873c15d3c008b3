//! Exact small-n checks tying hyperedge counts and distinct-tuple counts to
//! the unrestricted tuple counts.

use num_bigint::BigUint;
use sqgt_core::counting::{count_bruteforce_row, count_dp, cumulative, edge_polynomial, TupleKind};
use sqgt_core::hypergraph::{count_hyperedges, max_code_exact, EdgeFamily};
use sqgt_core::{Lambda, MeasurementKind};

fn lambdas() -> [Lambda; 3] {
    [
        Lambda::TWO,
        Lambda::new(3, 2).unwrap(),
        Lambda::new(4, 3).unwrap(),
    ]
}

fn below(row: &[BigUint], d: usize) -> BigUint {
    row.iter().take(d).sum()
}

fn dp_below(lam: Lambda, i: usize, kind: TupleKind, n: usize, d: usize) -> BigUint {
    let poly = edge_polynomial(lam, i, kind).unwrap();
    let table = count_dp(&poly, n, d.max(1)).unwrap();
    cumulative(&table, d).unwrap()
}

#[test]
fn distinct_tuples_between_inclusion_exclusion_bounds() {
    for lam in lambdas() {
        for (i, n_max, b_mult, c_mult) in [(3usize, 4usize, 1u32, 2u32), (4, 3, 2, 4)] {
            for n in 0..=n_max {
                let distinct = count_bruteforce_row(n, lam, i, TupleKind::N, true).unwrap();
                let top = (lam.numer() as usize) * n + 1;
                for d in 0..=top {
                    let all = dp_below(lam, i, TupleKind::N, n, d);
                    let b = dp_below(lam, i, TupleKind::B, n, d);
                    let c = dp_below(lam, i, TupleKind::C, n, d);
                    let star = below(&distinct, d);
                    assert!(star <= all, "λ={lam} i={i} n={n} d={d}");
                    assert!(
                        all <= &star + b * b_mult + c * c_mult,
                        "λ={lam} i={i} n={n} d={d}"
                    );
                }
            }
        }
    }
}

#[test]
fn hyperedges_between_distinct_tuple_bounds() {
    for lam in lambdas() {
        for n in 1..=3usize {
            let stars = [
                count_bruteforce_row(n, lam, 3, TupleKind::N, true).unwrap(),
                count_bruteforce_row(n, lam, 4, TupleKind::N, true).unwrap(),
            ];
            for d in 0..=(lam.numer() as u64 * n as u64 + 1) {
                let edges = count_hyperedges(n, d, lam, EdgeFamily::Paper).unwrap();
                for (i, fact, star) in [(3usize, 6u32, &stars[0]), (4, 24, &stars[1])] {
                    let star = below(star, d as usize);
                    let e = edges.by_size(i);
                    assert!(e <= &star, "λ={lam} n={n} d={d} i={i}");
                    assert!(star <= e * fact, "λ={lam} n={n} d={d} i={i}");
                }
            }
        }
    }
}

#[test]
fn search_beyond_diameter_keeps_one_word() {
    for n in 1..=3usize {
        for lam in lambdas() {
            let d = lam.numer() as u64 * n as u64 + 1;
            let (a, code) = max_code_exact(n, d, 2, MeasurementKind::LambdaAdd(lam)).unwrap();
            assert_eq!(a, 1);
            assert_eq!(code.len(), 1);
        }
    }
}

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;

use sccore::bijection::{largest_core, CoreArray, Step};
use sccore::enumeration::{
    average_size_closed, iter_paths, path_count, sc_tally, total_size_via_f,
};
use sccore::error::Error;
use sccore::identities::{
    binomial, check_identities, g_direct, sum_if, sum_jf, triple_count, PathCountTable,
};
use sccore::oracle::{brute_force_sc_cores, cores_up_to_size, naive_cores_up_to_size};
use sccore::verify::coprime_pairs;
use sccore::{CoreParams, DiagonalHookSet, EnumerationOptions, LatticePath, Partition};

fn partitions_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (0..=n).flat_map(Partition::all_of_size)
}

fn no_hook_divisible_by(p: &Partition, t: usize) -> bool {
    p.hook_lengths().iter().all(|h| h % t != 0)
}

/// Coprime pairs whose box is `m × n`.
fn pairs_for_box(m: usize, n: usize) -> Vec<CoreParams> {
    let mut out = Vec::new();
    for s in [2 * m as u64, 2 * m as u64 + 1] {
        for t in [2 * n as u64, 2 * n as u64 + 1] {
            if let Ok(p) = CoreParams::new(s, t) {
                out.push(p);
            }
        }
    }
    out
}

#[test]
fn conjugation_is_an_involution() {
    for p in partitions_up_to(30) {
        assert_eq!(p.conjugate().conjugate(), p);
    }
}

#[test]
fn hook_multiset_survives_conjugation() {
    for p in partitions_up_to(20) {
        let mut a = p.hook_lengths();
        let mut b = p.conjugate().hook_lengths();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b, "{p}");
    }
}

#[test]
fn t_core_predicates_agree() {
    for p in partitions_up_to(30) {
        for t in 2..=12u64 {
            let literal = p.is_t_core(t).unwrap();
            assert_eq!(literal, no_hook_divisible_by(&p, t as usize), "{p} t={t}");
            assert_eq!(literal, p.is_t_core_beta(t).unwrap(), "{p} t={t}");
        }
    }
}

#[test]
fn diagonal_hooks_determine_self_conjugate_partitions() {
    let mut seen = 0;
    for p in partitions_up_to(30).filter(Partition::is_self_conjugate) {
        let d = p.diagonal_hooks().unwrap();
        assert_eq!(d.total() as usize, p.size());
        assert_eq!(Partition::from_diagonal_hooks(&d), p);
        for t in 2..=12u64 {
            assert_eq!(d.check_t_core(t), p.is_t_core(t).unwrap(), "{p} t={t}");
        }
        seen += 1;
    }
    // self-conjugate partitions of n <= 30, i.e. partitions into distinct odd parts
    assert_eq!(seen, 181);
}

#[test]
fn round_trips_on_small_boxes() {
    for m in 1..12 {
        for n in 1..=12 - m {
            for params in pairs_for_box(m, n) {
                let a = CoreArray::new(params);
                let top = a.largest_core();
                for path in iter_paths(m, n).unwrap() {
                    let p = a.phi(&path).unwrap();
                    assert_eq!(a.phi_inverse(&p).unwrap(), path);
                    assert_eq!(a.size_via_above(&path).unwrap(), p.size() as u64);
                    assert!(p.is_self_conjugate());
                    assert!(p.is_t_core(params.s()).unwrap() && p.is_t_core(params.t()).unwrap());
                    assert!(top.contains(&p));
                    let hooks = a.m_a(&path).unwrap();
                    assert_eq!(DiagonalHookSet::new(hooks.hooks().to_vec()).unwrap(), hooks);
                }
            }
        }
    }
}

#[test]
fn array_shape() {
    for t in 3..=20u64 {
        for s in 2..t {
            let Ok(params) = CoreParams::new(s, t) else {
                continue;
            };
            let a = CoreArray::new(params);
            let (m, n) = (params.m(), params.n());
            assert_eq!(a.positive_sum() as u64, params.largest_size(), "({s},{t})");
            let top = a.entry(1, 1);
            assert_eq!(top, (s * t - s - t) as i64);
            let mut seen = HashSet::new();
            for (i, j, v) in a.entries() {
                assert_ne!(v, 0);
                assert_ne!(v % 2, 0);
                assert!(top >= v.abs());
                assert!(seen.insert(v.abs()), "({s},{t}) repeats |{v}|");
                if j < n {
                    assert_eq!(a.entry(i, j + 1), v - 2 * s as i64);
                }
                if i < m {
                    assert_eq!(a.entry(i + 1, j), v - 2 * t as i64);
                }
            }
        }
    }
}

#[test]
fn enumerated_totals_match_both_formulas() {
    let mut pairs = 0;
    for (s, t) in coprime_pairs(40) {
        let params = CoreParams::new(s, t).unwrap();
        if path_count(params.m(), params.n()) > BigUint::from(1_000_000u32) {
            continue;
        }
        let tally = sc_tally(&params, &EnumerationOptions::default()).unwrap();
        let total = BigInt::from(tally.total);
        assert_eq!(total, total_size_via_f(s, t).unwrap(), "({s},{t})");
        let closed = average_size_closed(s, t).unwrap()
            * BigRational::from_integer(path_count(params.m(), params.n()).into());
        assert_eq!(BigRational::from_integer(total), closed, "({s},{t})");
        assert_eq!(tally.max, params.largest_size());
        assert_eq!(tally.max_hits, 1);
        assert_eq!(tally.argmax(), Some(Partition::empty()));
        pairs += 1;
    }
    assert!(pairs > 300);
}

#[test]
fn oracle_agrees_with_bijection_within_budget() {
    let mut compared = 0;
    for (s, t) in coprime_pairs(15) {
        let oracle = match brute_force_sc_cores(s, t, 100_000) {
            Ok(cores) => cores,
            Err(Error::BudgetExceeded { .. }) => continue,
            Err(e) => panic!("{e}"),
        };
        let params = CoreParams::new(s, t).unwrap();
        let a = CoreArray::new(params);
        let images: BTreeSet<Partition> = iter_paths(params.m(), params.n())
            .unwrap()
            .map(|p| a.phi(&p).unwrap())
            .collect();
        assert_eq!(images, oracle.into_iter().collect(), "({s},{t})");
        compared += 1;
    }
    assert!(compared >= 40);
}

#[test]
fn containment_free_search_up_to_size_25() {
    for (s, t) in coprime_pairs(7) {
        let params = CoreParams::new(s, t).unwrap();
        let bound = 25.min(params.largest_size() as usize);
        let naive = naive_cores_up_to_size(s, t, bound).unwrap();
        assert_eq!(naive, cores_up_to_size(s, t, bound, 1_000_000).unwrap());
        let top = largest_core(&params);
        assert!(naive.iter().all(|c| top.contains(c)), "({s},{t})");
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a: Vec<LatticePath> = iter_paths(5, 6).unwrap().collect();
    let b: Vec<LatticePath> = iter_paths(5, 6).unwrap().collect();
    assert_eq!(a, b);
    assert_eq!(a.len(), 462);
    let distinct: HashSet<_> = a.iter().collect();
    assert_eq!(distinct.len(), a.len());
}

#[test]
fn f_tables_on_moderate_boxes() {
    for m in 1..=12 {
        for n in 1..=12 {
            assert!(check_identities(m, n).unwrap().all_ok(), "{m}x{n}");
            let table = PathCountTable::new(m, n).unwrap();
            assert_eq!(table.transpose(), PathCountTable::new(n, m).unwrap());
            assert_eq!(sum_jf(m, n).unwrap(), sum_if(n, m).unwrap());
            let total = binomial((m + n) as u64, m as u64);
            for i in 1..=m {
                for j in 1..=n {
                    assert!(table.get(i, j) <= &total);
                }
            }
        }
    }
}

#[test]
fn dp_tables_and_triple_counts_match_enumeration() {
    for m in 1..14 {
        for n in 1..=14 - m {
            assert_eq!(
                PathCountTable::new(m, n).unwrap(),
                PathCountTable::by_enumeration(m, n).unwrap()
            );
            assert_eq!(
                triple_count(m, n).unwrap(),
                g_direct(m, n).unwrap(),
                "{m}x{n}"
            );
        }
    }
}

#[test]
fn averages_in_lowest_terms() {
    for (s, t) in coprime_pairs(25) {
        let avg = average_size_closed(s, t).unwrap();
        assert_eq!(avg.numer().gcd(avg.denom()), BigInt::from(1));
    }
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..40, 0..25).prop_map(|mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(rows).unwrap()
    })
}

fn arb_word() -> impl Strategy<Value = (usize, usize, Vec<Step>)> {
    (1usize..9, 1usize..9).prop_flat_map(|(m, n)| {
        let mut steps = vec![Step::Up; m];
        steps.extend(vec![Step::Right; n]);
        Just(steps).prop_shuffle().prop_map(move |w| (m, n, w))
    })
}

proptest! {
    #[test]
    fn conjugate_preserves_size_and_transposes_hooks(p in arb_partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.conjugate(), p.clone());
        for (i, &r) in p.rows().iter().enumerate() {
            for j in 1..=r {
                prop_assert_eq!(p.hook_length(i + 1, j), c.hook_length(j, i + 1));
            }
        }
    }

    #[test]
    fn step_words_round_trip((m, n, word) in arb_word()) {
        let path = LatticePath::from_steps(&word, m, n).unwrap();
        prop_assert_eq!(path.to_steps(), word);
        let text = serde_json::to_string(&path).unwrap();
        prop_assert_eq!(serde_json::from_str::<LatticePath>(&text).unwrap(), path);
    }

    #[test]
    fn partition_json_round_trip(p in arb_partition()) {
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&text).unwrap(), p);
    }
}

//! Acceptance suite. Each criterion runs at its stated exactness and time
//! limit and prints one PASS/FAIL line; the process exits non-zero if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use sccore::bijection::{build_array, largest_core, phi, phi_inverse, size_via_above};
use sccore::enumeration::{average_size_closed, iter_paths, path_count, sc_tally};
use sccore::identities::{binomial, check_identities, PathCountTable};
use sccore::oracle::{
    brute_force_all_cores, brute_force_all_cores_count, brute_force_sc_cores, cores_up_to_size,
    DEFAULT_ORACLE_BUDGET,
};
use sccore::verify::coprime_pairs;
use sccore::{CoreParams, DiagonalHookSet, EnumerationOptions, LatticePath, Partition};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn part(rows: &[usize]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

fn params(s: u64, t: u64) -> CoreParams {
    CoreParams::new(s, t).unwrap()
}

fn c1_worked_example() -> Outcome {
    let a = build_array(8, 11).map_err(|e| e.to_string())?;
    let rows: [[i64; 5]; 4] = [
        [69, 53, 37, 21, 5],
        [47, 31, 15, -1, -17],
        [25, 9, -7, -23, -39],
        [3, -13, -29, -45, -61],
    ];
    for (i, row) in rows.iter().enumerate() {
        ensure(a.row(i + 1) == row, || {
            format!("row {} is {:?}", i + 1, a.row(i + 1))
        })?;
    }
    ensure(
        (a.entry(1, 1), a.entry(1, 5), a.entry(4, 1), a.entry(4, 5)) == (69, 5, 3, -61),
        || "corner entries differ".into(),
    )?;
    let path = LatticePath::new(4, 5, part(&[4, 3, 3, 2])).unwrap();
    let hooks = a.m_a(&path).map_err(|e| e.to_string())?;
    ensure(hooks.hooks() == [13, 7, 5], || {
        format!("M_A = {:?}", hooks.hooks())
    })?;
    let image = a.phi(&path).map_err(|e| e.to_string())?;
    ensure(image == part(&[7, 5, 5, 3, 3, 1, 1]), || {
        format!("phi = {image}")
    })?;
    ensure(image.size() == 25, || format!("size {}", image.size()))?;
    Ok("A(8,11), M_A = {5,7,13}, phi = (7,5,5,3,3,1,1), size 25".into())
}

fn sweep_pairs() -> Vec<(u64, u64)> {
    coprime_pairs(17)
}

fn c2_total_size() -> Outcome {
    let pairs = sweep_pairs();
    for &(s, t) in &pairs {
        let p = params(s, t);
        let tally = sc_tally(&p, &EnumerationOptions::default()).map_err(|e| e.to_string())?;
        let expected = average_size_closed(s, t).unwrap()
            * BigRational::from_integer(BigInt::from(path_count(p.m(), p.n())));
        let total = BigRational::from_integer(BigInt::from(tally.total));
        ensure(total == expected, || {
            format!("({s},{t}): total {total} != {expected}")
        })?;
    }
    Ok(format!("{} coprime pairs up to 17", pairs.len()))
}

fn c3_count_formula() -> Outcome {
    let pairs = sweep_pairs();
    for &(s, t) in &pairs {
        let p = params(s, t);
        let tally = sc_tally(&p, &EnumerationOptions::default()).map_err(|e| e.to_string())?;
        let expected = binomial((p.m() + p.n()) as u64, p.m() as u64);
        ensure(BigUint::from(tally.count) == expected, || {
            format!("({s},{t}): {} paths, expected {expected}", tally.count)
        })?;
    }
    Ok(format!("{} coprime pairs up to 17", pairs.len()))
}

fn c4_largest_core() -> Outcome {
    let pairs = sweep_pairs();
    for &(s, t) in &pairs {
        let p = params(s, t);
        let tally = sc_tally(&p, &EnumerationOptions::default()).map_err(|e| e.to_string())?;
        let expected = (s * s - 1) * (t * t - 1) / 24;
        ensure(tally.max == expected, || {
            format!("({s},{t}): max {} != {expected}", tally.max)
        })?;
        ensure(tally.max_hits == 1, || {
            format!("({s},{t}): {} paths attain the max", tally.max_hits)
        })?;
        ensure(tally.argmax() == Some(Partition::empty()), || {
            format!("({s},{t}): max attained at {:?}", tally.argmax())
        })?;
        let path = LatticePath::new(p.m(), p.n(), Partition::empty()).unwrap();
        let top = phi(&path, &p).unwrap();
        ensure(
            top.is_self_conjugate() && top.size() as u64 == expected,
            || format!("({s},{t}): attaining partition {top}"),
        )?;
    }
    Ok(format!("{} coprime pairs up to 17", pairs.len()))
}

fn c5_containment() -> Outcome {
    let pairs = coprime_pairs(13);
    for &(s, t) in &pairs {
        let p = params(s, t);
        let top = largest_core(&p);
        for path in iter_paths(p.m(), p.n()).unwrap() {
            let core = phi(&path, &p).unwrap();
            ensure(top.contains(&core), || {
                format!("({s},{t}): {core} not inside {top}")
            })?;
        }
    }
    let small = coprime_pairs(7);
    let mut searched = 0;
    for &(s, t) in &small {
        let p = params(s, t);
        let top = largest_core(&p);
        let cores = cores_up_to_size(s, t, p.largest_size() as usize, DEFAULT_ORACLE_BUDGET)
            .map_err(|e| e.to_string())?;
        searched += cores.len();
        if let Some(outside) = cores.iter().find(|c| !top.contains(c)) {
            return Err(format!("({s},{t}): core {outside} not inside {top}"));
        }
    }
    Ok(format!(
        "{} pairs up to 13 via paths; {} pairs up to 7 by size-bounded search ({searched} cores)",
        pairs.len(),
        small.len()
    ))
}

fn c6_bijection() -> Outcome {
    let pairs = coprime_pairs(13);
    for &(s, t) in &pairs {
        let p = params(s, t);
        let mut images = BTreeSet::new();
        for path in iter_paths(p.m(), p.n()).unwrap() {
            let core = phi(&path, &p).unwrap();
            let back = phi_inverse(&core, &p).map_err(|e| format!("({s},{t}): {e}"))?;
            ensure(back == path, || {
                format!("({s},{t}): {:?} came back as {:?}", path, back)
            })?;
            images.insert(core);
        }
        let oracle: BTreeSet<Partition> = brute_force_sc_cores(s, t, DEFAULT_ORACLE_BUDGET)
            .map_err(|e| e.to_string())?
            .into_iter()
            .collect();
        ensure(images == oracle, || {
            format!(
                "({s},{t}): {} images vs {} brute-force cores",
                images.len(),
                oracle.len()
            )
        })?;
    }
    Ok(format!("{} coprime pairs up to 13", pairs.len()))
}

fn c7_size_via_above() -> Outcome {
    let pairs = coprime_pairs(13);
    let mut paths = 0;
    for &(s, t) in &pairs {
        let p = params(s, t);
        for path in iter_paths(p.m(), p.n()).unwrap() {
            let size = phi(&path, &p).unwrap().size() as u64;
            let via = size_via_above(&path, &p).unwrap();
            ensure(size == via, || {
                format!("({s},{t}) {:?}: {size} != {via}", path)
            })?;
            paths += 1;
        }
    }
    Ok(format!("{paths} paths over {} pairs", pairs.len()))
}

fn c8_anderson() -> Outcome {
    let pairs = coprime_pairs(8);
    for &(s, t) in &pairs {
        let count =
            brute_force_all_cores_count(s, t, DEFAULT_ORACLE_BUDGET).map_err(|e| e.to_string())?;
        let lhs = &count * BigUint::from(s + t);
        let rhs = binomial(s + t, s);
        ensure(lhs == rhs, || {
            format!("({s},{t}): {count}·{} != {rhs}", s + t)
        })?;
    }
    let c45 = brute_force_all_cores_count(4, 5, DEFAULT_ORACLE_BUDGET).unwrap();
    ensure(c45 == BigUint::from(14u32), || {
        format!("(4,5) has {c45} cores")
    })?;
    Ok(format!("{} coprime pairs up to 8", pairs.len()))
}

fn c9_path_identities() -> Outcome {
    for m in 1..=30 {
        for n in 1..=30 {
            let row = check_identities(m, n).map_err(|e| e.to_string())?;
            ensure(row.all_ok(), || format!("{row:?}"))?;
        }
    }
    let mut compared = 0;
    for m in 1..14 {
        for n in 1..=14 - m {
            let dp = PathCountTable::new(m, n).unwrap();
            let brute = PathCountTable::by_enumeration(m, n).unwrap();
            ensure(dp == brute, || {
                format!("{m}x{n}: DP and enumeration differ")
            })?;
            compared += 1;
        }
    }
    Ok(format!(
        "900 boxes up to 30x30; DP = enumeration on {compared} boxes"
    ))
}

fn subsets_up_to(pool: &[u64], max_len: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    out.push(current.clone());
    if current.len() == max_len {
        return;
    }
    for (k, &h) in pool.iter().enumerate() {
        current.push(h);
        subsets_up_to(&pool[k + 1..], max_len, current, out);
        current.pop();
    }
}

fn c10_diagonal_characterization() -> Outcome {
    let odds: Vec<u64> = (1..=25).step_by(2).collect();
    let mut sets = Vec::new();
    subsets_up_to(&odds, 4, &mut Vec::new(), &mut sets);
    ensure(sets.len() == 1093, || format!("{} hook sets", sets.len()))?;
    let mut checked = 0;
    for hooks in &sets {
        let d = DiagonalHookSet::new(hooks.clone()).unwrap();
        let p = Partition::from_diagonal_hooks(&d);
        for t in 2..=12 {
            let literal = p.is_t_core(t).unwrap();
            ensure(d.check_t_core(t) == literal, || {
                format!(
                    "hooks {hooks:?}, t={t}: characterization {} vs literal {literal}",
                    !literal
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!(
        "{} hook sets x 11 moduli = {checked} cases",
        sets.len()
    ))
}

fn c11_stanley_zanello() -> Outcome {
    for s in 2..=5u64 {
        let cores =
            brute_force_all_cores(s, s + 1, DEFAULT_ORACLE_BUDGET).map_err(|e| e.to_string())?;
        let total: usize = cores.iter().map(Partition::size).sum();
        let average = BigRational::new(BigInt::from(total), BigInt::from(cores.len()));
        let expected = BigRational::new(BigInt::from(binomial(s + 1, 3)), BigInt::from(2));
        ensure(average == expected, || {
            format!("s={s}: average {average} != {expected}")
        })?;
    }
    Ok("s = 2..5".into())
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: "C1",
            title: "worked example (8,11)",
            limit: Duration::from_millis(1),
            run: c1_worked_example,
        },
        Criterion {
            id: "C2",
            title: "total size formula",
            limit: Duration::from_secs(5),
            run: c2_total_size,
        },
        Criterion {
            id: "C3",
            title: "self-conjugate count formula",
            limit: Duration::from_secs(5),
            run: c3_count_formula,
        },
        Criterion {
            id: "C4",
            title: "unique largest core",
            limit: Duration::from_secs(5),
            run: c4_largest_core,
        },
        Criterion {
            id: "C5",
            title: "containment in the largest core",
            limit: Duration::from_secs(30),
            run: c5_containment,
        },
        Criterion {
            id: "C6",
            title: "bijection vs brute force, round trip",
            limit: Duration::from_secs(30),
            run: c6_bijection,
        },
        Criterion {
            id: "C7",
            title: "size via entries above the path",
            limit: Duration::from_secs(30),
            run: c7_size_via_above,
        },
        Criterion {
            id: "C8",
            title: "count of all (s,t)-cores",
            limit: Duration::from_secs(10),
            run: c8_anderson,
        },
        Criterion {
            id: "C9",
            title: "path-count identities",
            limit: Duration::from_secs(10),
            run: c9_path_identities,
        },
        Criterion {
            id: "C10",
            title: "diagonal-hook t-core characterization",
            limit: Duration::from_secs(30),
            run: c10_diagonal_characterization,
        },
        Criterion {
            id: "C11",
            title: "average size of (s,s+1)-cores",
            limit: Duration::from_secs(30),
            run: c11_stanley_zanello,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed <= c.limit {
                Ok(detail)
            } else {
                Err(format!("took {elapsed:?}, limit {:?}", c.limit))
            }
        });
        match outcome {
            Ok(detail) => println!("PASS {:<4} {} [{elapsed:.2?}] {detail}", c.id, c.title),
            Err(why) => {
                failed += 1;
                println!("FAIL {:<4} {} [{elapsed:.2?}] {why}", c.id, c.title);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Per-pair verification: every counting, size and bijection claim for one
//! coprime pair, checked and reported side by side.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use crate::bijection::{CoreArray, CoreParams};
use crate::enumeration::{
    average_size_closed, iter_paths, path_count, sc_tally, total_size_via_f, CoreStats,
    EnumerationOptions,
};
use crate::error::{Error, Result};
use crate::json;
use crate::oracle::{brute_force_sc_cores, DEFAULT_ORACLE_BUDGET};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    fn compare<T: PartialEq + ToString>(name: &'static str, lhs: T, rhs: T) -> Check {
        Check {
            name,
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub s: u64,
    pub t: u64,
    #[serde(serialize_with = "json::biguint")]
    pub count: BigUint,
    #[serde(serialize_with = "json::biguint")]
    pub total: BigUint,
    #[serde(serialize_with = "json::rational")]
    pub average: BigRational,
    #[serde(serialize_with = "json::biguint")]
    pub max: BigUint,
    pub checks: Vec<Check>,
    /// Set when the oracle comparison was requested but ran out of budget.
    #[serde(skip)]
    pub oracle_skipped: bool,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn sweep_row(&self) -> SweepRow {
        SweepRow {
            s: self.s,
            t: self.t,
            count: self.count.to_string(),
            total: self.total.to_string(),
            avg_num: self.average.numer().to_string(),
            avg_den: self.average.denom().to_string(),
            max: self.max.to_string(),
            all_pass: self.all_pass(),
        }
    }
}

/// CSV form of a report: `s,t,count,total,avg_num,avg_den,max,all_pass`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub s: u64,
    pub t: u64,
    pub count: String,
    pub total: String,
    pub avg_num: String,
    pub avg_den: String,
    pub max: String,
    pub all_pass: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub enumeration: EnumerationOptions,
    /// Node budget for the brute-force comparison; `None` skips it.
    pub oracle_budget: Option<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            enumeration: EnumerationOptions::default(),
            oracle_budget: Some(DEFAULT_ORACLE_BUDGET),
        }
    }
}

/// Runs every check for one pair. Only construction and budget problems are
/// errors; a failed identity shows up as a failing [`Check`].
pub fn verify_pair(s: u64, t: u64, opts: &VerifyOptions) -> Result<VerifyReport> {
    let params = CoreParams::new(s, t)?;
    let (m, n) = (params.m(), params.n());
    let tally = sc_tally(&params, &opts.enumeration)?;
    let stats = CoreStats::from(&tally);
    let closed_avg = average_size_closed(s, t)?;
    let expected_count = path_count(m, n);
    let largest_size = BigUint::from(params.largest_size());
    let total = BigInt::from(stats.total_size.clone());

    let mut checks = vec![
        Check::compare("count_equals_binomial", &stats.count, &expected_count),
        Check::compare(
            "total_equals_total_via_f",
            total.clone(),
            total_size_via_f(s, t)?,
        ),
        Check::compare(
            "total_equals_count_times_closed_average",
            BigRational::from_integer(total),
            closed_avg * BigRational::from_integer(BigInt::from(expected_count)),
        ),
        Check::compare("max_equals_largest_size", &stats.max_size, &largest_size),
        Check::compare(
            "max_attained_only_at_empty_path",
            format!(
                "{} path(s), first {}",
                tally.max_hits,
                display_opt(tally.argmax())
            ),
            "1 path(s), first ()".to_string(),
        ),
    ];

    let array = CoreArray::new(params);
    let largest = array.largest_core();
    checks.push(Check::compare(
        "largest_core_size",
        BigUint::from(largest.size()),
        largest_size,
    ));
    checks.push(Check::compare(
        "largest_core_is_self_conjugate",
        largest.is_self_conjugate(),
        true,
    ));

    let mut images = BTreeSet::new();
    let (mut contained, mut size_agree, mut round_trips, mut cores) = (0u64, 0u64, 0u64, 0u64);
    for path in iter_paths(m, n)? {
        let p = array.phi(&path)?;
        contained += largest.contains(&p) as u64;
        size_agree += (array.size_via_above(&path)? == p.size() as u64) as u64;
        round_trips += (array.phi_inverse(&p).as_ref() == Ok(&path)) as u64;
        cores += (p.is_self_conjugate() && p.is_t_core(s) == Ok(true) && p.is_t_core(t) == Ok(true))
            as u64;
        if opts.oracle_budget.is_some() {
            images.insert(p);
        }
    }
    let walked = tally.count as u64;
    checks.push(Check::compare(
        "largest_core_contains_all",
        contained,
        walked,
    ));
    checks.push(Check::compare(
        "phi_size_equals_size_via_above",
        size_agree,
        walked,
    ));
    checks.push(Check::compare(
        "phi_inverse_round_trip",
        round_trips,
        walked,
    ));
    checks.push(Check::compare(
        "phi_lands_in_self_conjugate_cores",
        cores,
        walked,
    ));

    let mut oracle_skipped = false;
    if let Some(budget) = opts.oracle_budget {
        match brute_force_sc_cores(s, t, budget) {
            Ok(oracle) => {
                let oracle: BTreeSet<Partition> = oracle.into_iter().collect();
                let pass = oracle == images;
                checks.push(Check {
                    name: "oracle_set_equality",
                    pass,
                    lhs: format!("{} images", images.len()),
                    rhs: format!("{} brute-force cores", oracle.len()),
                });
            }
            Err(Error::BudgetExceeded { .. }) => oracle_skipped = true,
            Err(e) => return Err(e),
        }
    }

    Ok(VerifyReport {
        s,
        t,
        count: stats.count,
        total: stats.total_size,
        average: stats.average_size,
        max: stats.max_size,
        checks,
        oracle_skipped,
    })
}

fn display_opt(p: Option<Partition>) -> String {
    p.map_or_else(|| "none".to_string(), |p| p.to_string())
}

/// All coprime pairs `2 <= s < t <= max`, in increasing order of `t`, then `s`.
pub fn coprime_pairs(max: u64) -> Vec<(u64, u64)> {
    (3..=max)
        .flat_map(|t| (2..t).map(move |s| (s, t)))
        .filter(|(s, t)| s.gcd(t) == 1)
        .collect()
}

pub fn sweep(max: u64, opts: &VerifyOptions) -> Result<Vec<VerifyReport>> {
    coprime_pairs(max)
        .into_iter()
        .map(|(s, t)| verify_pair(s, t, opts))
        .collect()
}

//! Exhaustive enumeration of the lattice paths of a box and the exact
//! statistics of the self-conjugate cores they encode.
//!
//! Paths are produced in colexicographic order of their bounding partition
//! `mu` (padded with zeros to `m` rows): `mu_1` varies fastest. For the 2×2
//! box the order is `∅, (1), (2), (1,1), (2,1), (2,2)`.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{CoreArray, CoreParams, LatticePath};
use crate::error::{Error, Result};
use crate::identities::{binomial, PathCountTable};
use crate::json;
use crate::partition::Partition;

/// Default cap on the number of paths a single enumeration may visit.
pub const DEFAULT_PATH_BUDGET: u128 = 10_000_000;

/// Odometer over weakly decreasing sequences with entries in `0..=cap`.
/// Entries before `free_from` stay fixed.
#[derive(Clone, Debug)]
struct Odometer {
    rows: Vec<usize>,
    free_from: usize,
    cap: usize,
    fresh: bool,
}

impl Odometer {
    fn whole_box(m: usize, n: usize) -> Self {
        Odometer {
            rows: vec![0; m],
            free_from: 0,
            cap: n,
            fresh: true,
        }
    }

    /// Paths of an `m × n` box whose bounding partition has first row `first`.
    fn with_first_row(m: usize, first: usize) -> Self {
        let mut rows = vec![0; m];
        rows[0] = first;
        Odometer {
            rows,
            free_from: 1,
            cap: first,
            fresh: true,
        }
    }

    fn advance(&mut self) -> Option<&[usize]> {
        if self.fresh {
            self.fresh = false;
            return Some(&self.rows);
        }
        let tail = &mut self.rows[self.free_from..];
        let idx = tail.iter().position(|&r| r < self.cap)?;
        let v = tail[idx] + 1;
        tail[..=idx].fill(v);
        Some(&self.rows)
    }
}

/// Streaming iterator over every lattice path of an `m × n` box.
#[derive(Clone, Debug)]
pub struct PathIter {
    odometer: Odometer,
    m: usize,
    n: usize,
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        let (m, n) = (self.m, self.n);
        let rows = self.odometer.advance()?;
        let len = rows.iter().take_while(|&&r| r > 0).count();
        let mu = Partition::from_rows_unchecked(rows[..len].to_vec());
        Some(LatticePath::new(m, n, mu).expect("odometer stays inside the box"))
    }
}

pub fn iter_paths(m: usize, n: usize) -> Result<PathIter> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyBox { m, n });
    }
    Ok(PathIter {
        odometer: Odometer::whole_box(m, n),
        m,
        n,
    })
}

/// Number of lattice paths in an `m × n` box, `C(m+n, m)`.
pub fn path_count(m: usize, n: usize) -> BigUint {
    binomial((m + n) as u64, m as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Maximum number of paths to visit.
    pub budget: u128,
    pub parallel: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: DEFAULT_PATH_BUDGET,
            parallel: true,
        }
    }
}

impl EnumerationOptions {
    fn check(&self, m: usize, n: usize) -> Result<()> {
        let needed = path_count(m, n);
        if needed > BigUint::from(self.budget) {
            return Err(Error::BudgetExceeded {
                what: "enumeration",
                required: format!("{needed} paths"),
                budget: self.budget.to_string(),
            });
        }
        Ok(())
    }
}

/// Partial aggregate over a set of paths. Merging is associative and
/// commutative, so any split of the path space folds to the same value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathTally {
    pub count: u128,
    pub total: u128,
    pub max: u64,
    /// Number of paths attaining `max`.
    pub max_hits: u64,
    /// Colex-first path attaining `max`, as padded rows of `mu`.
    argmax: Option<Vec<usize>>,
}

impl PathTally {
    fn empty() -> Self {
        PathTally {
            count: 0,
            total: 0,
            max: 0,
            max_hits: 0,
            argmax: None,
        }
    }

    fn push(&mut self, rows: &[usize], size: u64) {
        self.count += 1;
        self.total += size as u128;
        match size.cmp(&self.max) {
            Ordering::Greater => {
                self.max = size;
                self.max_hits = 1;
                self.argmax = Some(rows.to_vec());
            }
            Ordering::Equal => {
                self.max_hits += 1;
                if self.argmax.is_none() {
                    self.argmax = Some(rows.to_vec());
                }
            }
            Ordering::Less => {}
        }
    }

    fn merge(mut self, other: PathTally) -> PathTally {
        self.count += other.count;
        self.total += other.total;
        match (other.argmax.is_some(), other.max.cmp(&self.max)) {
            (false, _) => {}
            (true, Ordering::Greater) => {
                self.max = other.max;
                self.max_hits = other.max_hits;
                self.argmax = other.argmax;
            }
            (true, Ordering::Equal) => {
                self.max_hits += other.max_hits;
                self.argmax = match (self.argmax, other.argmax) {
                    (Some(a), Some(b)) => Some(if colex_le(&a, &b) { a } else { b }),
                    (a, b) => a.or(b),
                };
            }
            (true, Ordering::Less) => {}
        }
        self
    }

    /// Bounding partition of the colex-first path attaining the maximum.
    pub fn argmax(&self) -> Option<Partition> {
        self.argmax
            .as_ref()
            .map(|rows| Partition::from_padded(rows).expect("tally rows are decreasing"))
    }
}

fn colex_le(a: &[usize], b: &[usize]) -> bool {
    a.iter().rev().cmp(b.iter().rev()) != Ordering::Greater
}

fn fold_odometer(mut odo: Odometer, prefix: &[Vec<i64>], largest: i64) -> PathTally {
    let mut tally = PathTally::empty();
    while let Some(rows) = odo.advance() {
        let above: i64 = rows.iter().zip(prefix).map(|(&r, sums)| sums[r]).sum();
        tally.push(rows, (largest - above) as u64);
    }
    tally
}

/// Folds the size of every path's core over the whole box.
pub fn sc_tally(params: &CoreParams, opts: &EnumerationOptions) -> Result<PathTally> {
    let (m, n) = (params.m(), params.n());
    opts.check(m, n)?;
    let array = CoreArray::new(*params);
    let prefix = array.row_prefix_sums();
    let largest = params.largest_size() as i64;
    let tally = if opts.parallel {
        // split by the first row of mu
        (0..=n)
            .into_par_iter()
            .map(|first| fold_odometer(Odometer::with_first_row(m, first), &prefix, largest))
            .reduce(PathTally::empty, PathTally::merge)
    } else {
        fold_odometer(Odometer::whole_box(m, n), &prefix, largest)
    };
    Ok(tally)
}

/// Exact statistics of the self-conjugate `(s,t)`-cores.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreStats {
    #[serde(serialize_with = "json::biguint")]
    pub count: BigUint,
    #[serde(rename = "total", serialize_with = "json::biguint")]
    pub total_size: BigUint,
    #[serde(rename = "average", serialize_with = "json::rational")]
    pub average_size: BigRational,
    #[serde(rename = "max", serialize_with = "json::biguint")]
    pub max_size: BigUint,
}

impl From<&PathTally> for CoreStats {
    fn from(tally: &PathTally) -> Self {
        let count = BigUint::from(tally.count);
        let total_size = BigUint::from(tally.total);
        let average_size = if tally.count == 0 {
            BigRational::from_integer(BigInt::from(0))
        } else {
            BigRational::new(total_size.clone().into(), count.clone().into())
        };
        CoreStats {
            count,
            total_size,
            average_size,
            max_size: BigUint::from(tally.max),
        }
    }
}

pub fn sc_stats_enumerated(s: u64, t: u64, opts: &EnumerationOptions) -> Result<CoreStats> {
    let params = CoreParams::new(s, t)?;
    sc_tally(&params, opts).map(|tally| CoreStats::from(&tally))
}

/// `(s+t+1)(s-1)(t-1)/24` in lowest terms.
pub fn average_size_closed(s: u64, t: u64) -> Result<BigRational> {
    CoreParams::new(s, t)?;
    let num = BigInt::from(s + t + 1) * BigInt::from(s - 1) * BigInt::from(t - 1);
    Ok(BigRational::new(num, BigInt::from(24)))
}

/// Total size of all self-conjugate `(s,t)`-cores without enumerating them:
/// `(s²-1)(t²-1)/24 · C(m+n,m) - Σ A_{i,j} f(i,j)`, where `f(i,j)` counts
/// the paths with cell `(i,j)` above them.
pub fn total_size_via_f(s: u64, t: u64) -> Result<BigInt> {
    let params = CoreParams::new(s, t)?;
    let array = CoreArray::new(params);
    let f = PathCountTable::new(params.m(), params.n())?;
    let above: BigInt = array
        .entries()
        .map(|(i, j, v)| BigInt::from(v) * BigInt::from(f.get(i, j).clone()))
        .sum();
    let count = BigInt::from(path_count(params.m(), params.n()));
    Ok(BigInt::from(params.largest_size()) * count - above)
}

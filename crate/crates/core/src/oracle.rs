//! Brute-force enumeration of `(s,t)`-cores straight from the hook-length
//! definition, independent of the lattice-path bijection.
//!
//! Partitions are grown from the bottom row upward. Placing a new top row
//! never changes the arm or leg of a cell already placed, so a cell whose hook
//! is `s` or `t` can never be repaired and the branch is cut. Every node of
//! the search is therefore itself a partition with no hook equal to `s` or
//! `t`, and the search visits each such partition of the universe once.

use num_bigint::BigUint;

use crate::bijection::{largest_core, CoreParams};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on the number of search nodes an oracle run may visit.
pub const DEFAULT_ORACLE_BUDGET: u64 = 5_000_000;

/// The set of partitions an oracle run searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Universe {
    /// Partitions whose diagram fits inside the given one.
    ContainedIn(Partition),
    /// Partitions of every `n` up to the bound.
    SizeAtMost(usize),
}

struct Search<'a> {
    forbidden_hooks: [usize; 2],
    universe: &'a Universe,
    budget: u64,
    visited: u64,
    /// Rows placed so far, bottom row first.
    rows: Vec<usize>,
    /// `cols[j]` is the number of placed rows longer than `j`.
    cols: Vec<usize>,
    found: Vec<Partition>,
}

impl Search<'_> {
    fn visit(&mut self, size: usize) -> Result<()> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(Error::BudgetExceeded {
                what: "core search",
                required: format!("more than {} nodes", self.budget),
                budget: self.budget.to_string(),
            });
        }
        self.found.push(Partition::from_rows_unchecked(
            self.rows.iter().rev().copied().collect(),
        ));

        let lowest = self.rows.last().copied().unwrap_or(0).max(1);
        let highest = match self.universe {
            Universe::ContainedIn(outer) => {
                // the rows placed so far move down one position
                let shifted_fit = self
                    .rows
                    .iter()
                    .rev()
                    .enumerate()
                    .all(|(i, &r)| r <= outer.row(i + 2));
                if !shifted_fit {
                    return Ok(());
                }
                outer.row(1)
            }
            Universe::SizeAtMost(bound) => bound - size,
        };
        if highest < lowest {
            return Ok(());
        }

        // a new top row of length L gives cell j the hook L - j + cols[j-1] + 1
        let mut blocked = vec![false; highest + 1];
        for j in 1..=highest {
            let below = self.cols.get(j - 1).copied().unwrap_or(0);
            for h in self.forbidden_hooks {
                if h > below {
                    let len = h + j - below - 1;
                    if len <= highest {
                        blocked[len] = true;
                    }
                }
            }
        }

        for len in (lowest..=highest).filter(|&len| !blocked[len]) {
            if self.cols.len() < len {
                self.cols.resize(len, 0);
            }
            self.rows.push(len);
            self.cols[..len].iter_mut().for_each(|c| *c += 1);
            let outcome = self.visit(size + len);
            self.cols[..len].iter_mut().for_each(|c| *c -= 1);
            self.rows.pop();
            outcome?;
        }
        Ok(())
    }
}

fn sort_by_size_then_rows(parts: &mut [Partition]) {
    parts.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| a.cmp(b)));
}

/// All partitions of the universe with no hook of length `s` or `t`,
/// sorted by size and then lexicographically.
pub fn hook_free_partitions(
    s: u64,
    t: u64,
    universe: &Universe,
    budget: u64,
) -> Result<Vec<Partition>> {
    if s < 2 || t < 2 {
        return Err(Error::ParamTooSmall { s, t });
    }
    let mut search = Search {
        forbidden_hooks: [s as usize, t as usize],
        universe,
        budget,
        visited: 0,
        rows: Vec::new(),
        cols: Vec::new(),
        found: Vec::new(),
    };
    search.visit(0)?;
    let mut found = search.found;
    sort_by_size_then_rows(&mut found);
    Ok(found)
}

fn literal_core(p: &Partition, s: u64, t: u64) -> bool {
    p.is_t_core(s) == Ok(true) && p.is_t_core(t) == Ok(true)
}

/// Every `(s,t)`-core, searched among the partitions contained in the
/// largest one.
pub fn brute_force_all_cores(s: u64, t: u64, budget: u64) -> Result<Vec<Partition>> {
    let params = CoreParams::new(s, t)?;
    let universe = Universe::ContainedIn(largest_core(&params));
    let cores = hook_free_partitions(s, t, &universe, budget)?;
    debug_assert!(cores.iter().all(|p| literal_core(p, s, t)));
    Ok(cores)
}

pub fn brute_force_all_cores_count(s: u64, t: u64, budget: u64) -> Result<BigUint> {
    brute_force_all_cores(s, t, budget).map(|cores| BigUint::from(cores.len()))
}

/// The self-conjugate `(s,t)`-cores, filtered from [`brute_force_all_cores`]
/// with the cell-by-cell predicates.
pub fn brute_force_sc_cores(s: u64, t: u64, budget: u64) -> Result<Vec<Partition>> {
    let cores = brute_force_all_cores(s, t, budget)?;
    Ok(cores
        .into_iter()
        .filter(|p| p.is_self_conjugate() && literal_core(p, s, t))
        .collect())
}

/// Every `(s,t)`-core of size at most `max_size`, with no containment
/// assumption. `s` and `t` need not be coprime.
pub fn cores_up_to_size(s: u64, t: u64, max_size: usize, budget: u64) -> Result<Vec<Partition>> {
    hook_free_partitions(s, t, &Universe::SizeAtMost(max_size), budget)
}

/// Filters every partition of every `n <= max_size` through the
/// cell-by-cell predicate. Exponential; meant for small bounds.
pub fn naive_cores_up_to_size(s: u64, t: u64, max_size: usize) -> Result<Vec<Partition>> {
    if s < 2 || t < 2 {
        return Err(Error::ParamTooSmall { s, t });
    }
    let mut cores: Vec<Partition> = (0..=max_size)
        .flat_map(Partition::all_of_size)
        .filter(|p| literal_core(p, s, t))
        .collect();
    sort_by_size_then_rows(&mut cores);
    Ok(cores)
}

//! Integer partitions: Ferrers geometry, hook lengths, conjugation, t-core
//! predicates and the diagonal-hook encoding of self-conjugate partitions.
//!
//! Rows and columns are 1-based in every public function. A partition is an
//! immutable value; operations return fresh partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive row lengths.
///
/// Serializes as a JSON array, e.g. `[7,5,5,3,3,1,1]`; the empty partition is `[]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) {
            return Err(Error::InvalidPartition(
                "row lengths must be positive".into(),
            ));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                "row lengths must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { rows })
    }

    /// Builds a partition from a weakly decreasing sequence that may carry
    /// trailing zeros, as used by the box encodings.
    pub fn from_padded(rows: &[usize]) -> Result<Self> {
        let len = rows.iter().take_while(|&&r| r > 0).count();
        if rows[len..].iter().any(|&r| r > 0) {
            return Err(Error::InvalidPartition(
                "row lengths must be weakly decreasing".into(),
            ));
        }
        Partition::new(rows[..len].to_vec())
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<usize>) -> Self {
        debug_assert!(rows.iter().all(|&r| r > 0));
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]));
        Partition { rows }
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Row `i` (1-based); zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Side of the Durfee square, i.e. the number of diagonal cells.
    pub fn durfee(&self) -> usize {
        self.rows
            .iter()
            .enumerate()
            .take_while(|&(i, &r)| r > i)
            .count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.rows.first().copied().unwrap_or(0);
        let mut cols = vec![0usize; width];
        for &r in &self.rows {
            for c in &mut cols[..r] {
                *c += 1;
            }
        }
        Partition { rows: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Arm plus leg plus one for the cell in row `i`, column `j`.
    pub fn hook_length(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || j == 0 || j > self.row(i) {
            return Err(Error::NotACell { i, j });
        }
        let leg = self.rows[i..].iter().take_while(|&&r| r >= j).count();
        Ok(self.rows[i - 1] - j + leg + 1)
    }

    /// All hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &r) in self.rows.iter().enumerate() {
            for j in 0..r {
                hooks.push(r - j + conj.rows[j] - i - 1);
            }
        }
        hooks
    }

    /// Hook lengths of the first column, which form the beta-set of the partition.
    pub fn first_column_hooks(&self) -> Vec<usize> {
        let l = self.rows.len();
        self.rows
            .iter()
            .enumerate()
            .map(|(i, &r)| r + l - i - 1)
            .collect()
    }

    /// True iff no cell has hook length exactly `t`. Scans every cell.
    pub fn is_t_core(&self, t: u64) -> Result<bool> {
        check_modulus(t)?;
        Ok(!self.hook_lengths().iter().any(|&h| h as u64 == t))
    }

    /// Same predicate as [`Partition::is_t_core`], read off the beta-set: the
    /// partition has a hook of length `t` iff some first-column hook `b >= t`
    /// has `b - t` missing from the set (zero counts as missing).
    pub fn is_t_core_beta(&self, t: u64) -> Result<bool> {
        check_modulus(t)?;
        let beta = self.first_column_hooks();
        // beta is strictly decreasing
        let contains = |x: usize| beta.binary_search_by(|b| x.cmp(b)).is_ok();
        Ok(beta.iter().all(|&b| {
            let b = b as u64;
            b < t || (b > t && contains((b - t) as usize))
        }))
    }

    pub fn diagonal_hooks(&self) -> Result<DiagonalHookSet> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSelfConjugate);
        }
        let hooks = (0..self.durfee())
            .map(|i| 2 * (self.rows[i] - i - 1) as u64 + 1)
            .collect();
        Ok(DiagonalHookSet { hooks })
    }

    /// The unique self-conjugate partition with the given diagonal hooks.
    pub fn from_diagonal_hooks(d: &DiagonalHookSet) -> Partition {
        let k = d.hooks.len();
        let mut rows: Vec<usize> = d
            .hooks
            .iter()
            .enumerate()
            .map(|(i, &h)| (h as usize - 1) / 2 + i + 1)
            .collect();
        let longest = rows.first().copied().unwrap_or(0);
        for i in k + 1..=longest {
            rows.push(rows[..k].iter().filter(|&&r| r >= i).count());
        }
        Partition::from_rows_unchecked(rows)
    }

    /// Containment of Ferrers diagrams: `self` contains `inner`.
    pub fn contains(&self, inner: &Partition) -> bool {
        self.len() >= inner.len() && self.rows.iter().zip(&inner.rows).all(|(a, b)| a >= b)
    }

    pub fn render_ferrers(&self) -> String {
        if self.is_empty() {
            return "(empty)".to_string();
        }
        self.rows
            .iter()
            .map(|&r| "▪".repeat(r))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Enumerates all partitions of `n` in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> PartitionsOf {
        PartitionsOf::new(n)
    }
}

fn check_modulus(t: u64) -> Result<()> {
    if t < 2 {
        return Err(Error::ModulusTooSmall(t));
    }
    Ok(())
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(rows: Vec<usize>) -> Result<Self> {
        Partition::new(rows)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.rows
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Main-diagonal hook lengths of a self-conjugate partition: distinct odd
/// positive integers, kept in strictly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct DiagonalHookSet {
    hooks: Vec<u64>,
}

impl DiagonalHookSet {
    /// Accepts the hooks in any order.
    pub fn new(mut hooks: Vec<u64>) -> Result<Self> {
        if let Some(h) = hooks.iter().find(|&&h| h % 2 == 0) {
            return Err(Error::InvalidHookSet(format!(
                "{h} is not an odd positive integer"
            )));
        }
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = hooks.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHookSet(format!("{} repeated", w[0])));
        }
        Ok(DiagonalHookSet { hooks })
    }

    pub(crate) fn from_sorted_unchecked(hooks: Vec<u64>) -> Self {
        debug_assert!(hooks.iter().all(|h| h % 2 == 1));
        debug_assert!(hooks.windows(2).all(|w| w[0] > w[1]));
        DiagonalHookSet { hooks }
    }

    pub fn hooks(&self) -> &[u64] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn contains(&self, h: u64) -> bool {
        self.hooks.binary_search_by(|x| h.cmp(x)).is_ok()
    }

    /// Sum of the hooks, which is the size of the partition they determine.
    pub fn total(&self) -> u64 {
        self.hooks.iter().sum()
    }

    /// Decides t-coreness from the hooks alone:
    /// every hook above `2t` has its `2t`-reduction present, and no two hooks
    /// (a hook may pair with itself) sum to a multiple of `2t`.
    pub fn check_t_core(&self, t: u64) -> bool {
        let period = 2 * t;
        let closed = self
            .hooks
            .iter()
            .all(|&h| h <= period || self.contains(h - period));
        if !closed {
            return false;
        }
        let residues: Vec<u64> = self.hooks.iter().map(|h| h % period).collect();
        residues
            .iter()
            .enumerate()
            .all(|(a, &x)| residues[a..].iter().all(|&y| (x + y) % period != 0))
    }
}

impl TryFrom<Vec<u64>> for DiagonalHookSet {
    type Error = Error;

    fn try_from(hooks: Vec<u64>) -> Result<Self> {
        DiagonalHookSet::new(hooks)
    }
}

impl From<DiagonalHookSet> for Vec<u64> {
    fn from(d: DiagonalHookSet) -> Self {
        d.hooks
    }
}

/// Iterator over the partitions of a fixed integer, largest first part first.
pub struct PartitionsOf {
    current: Option<Vec<usize>>,
}

impl PartitionsOf {
    fn new(n: usize) -> Self {
        let current = if n == 0 {
            Some(Vec::new())
        } else {
            Some(vec![n])
        };
        PartitionsOf { current }
    }
}

impl Iterator for PartitionsOf {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        let mut rows = out.clone();
        // strip trailing ones, decrement the last part > 1, refill greedily
        let mut ones = 0;
        while rows.last() == Some(&1) {
            rows.pop();
            ones += 1;
        }
        if let Some(last) = rows.pop() {
            let part = last - 1;
            let mut rest = ones + 1;
            rows.push(part);
            while rest > 0 {
                let take = rest.min(part);
                rows.push(take);
                rest -= take;
            }
            self.current = Some(rows);
        }
        Some(Partition::from_rows_unchecked(out))
    }
}

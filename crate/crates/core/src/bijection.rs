//! The signed array on the `⌊s/2⌋ × ⌊t/2⌋` box, lattice paths through it, and
//! the bijection between those paths and self-conjugate `(s,t)`-cores.
//!
//! Orientation: row 1 is the top row of the array (where the largest entry
//! `st - s - t` lives), column 1 the leftmost. A path runs from the lower-left
//! corner to the upper-right corner and is stored as the partition `mu` of the
//! cells lying above it (toward the top-left), so cell `(i,j)` is above the
//! path iff `j <= mu_i`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{DiagonalHookSet, Partition};

/// A coprime pair `(s,t)` together with the box dimensions `m = ⌊s/2⌋`, `n = ⌊t/2⌋`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoreParams {
    s: u64,
    t: u64,
    m: usize,
    n: usize,
}

impl CoreParams {
    /// Rejects pairs below 2, non-coprime pairs, and pairs whose largest core
    /// size `(s²-1)(t²-1)/24` does not fit in an `i64`.
    pub fn new(s: u64, t: u64) -> Result<Self> {
        if s < 2 || t < 2 {
            return Err(Error::ParamTooSmall { s, t });
        }
        if s.gcd(&t) != 1 {
            return Err(Error::NotCoprime { s, t });
        }
        let fits = i64::try_from(s)
            .ok()
            .zip(i64::try_from(t).ok())
            .and_then(|(s, t)| {
                let a = s.checked_mul(s)? - 1;
                let b = t.checked_mul(t)? - 1;
                a.checked_mul(b)
            })
            .is_some();
        if !fits {
            return Err(Error::Overflow { s, t });
        }
        assert!(s % 2 == 1 || t % 2 == 1);
        Ok(CoreParams {
            s,
            t,
            m: (s / 2) as usize,
            n: (t / 2) as usize,
        })
    }

    pub fn s(&self) -> u64 {
        self.s
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Number of rows of the array.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of columns of the array.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `(s²-1)(t²-1)/24`, the size of the largest `(s,t)`-core.
    pub fn largest_size(&self) -> u64 {
        let (s, t) = (self.s as i64, self.t as i64);
        ((s * s - 1) * (t * t - 1) / 24) as u64
    }

    fn check_box(&self, path: &LatticePath) -> Result<()> {
        if path.m != self.m || path.n != self.n {
            return Err(Error::BoxMismatch {
                m: self.m,
                n: self.n,
                found_m: path.m,
                found_n: path.n,
            });
        }
        Ok(())
    }
}

/// The `m × n` array with entries `st - (2j-1)s - (2i-1)t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreArray {
    params: CoreParams,
    entries: Vec<i64>,
}

impl CoreArray {
    pub fn new(params: CoreParams) -> Self {
        let (s, t) = (params.s as i64, params.t as i64);
        let mut entries = Vec::with_capacity(params.m * params.n);
        for i in 1..=params.m as i64 {
            for j in 1..=params.n as i64 {
                entries.push(s * t - (2 * j - 1) * s - (2 * i - 1) * t);
            }
        }
        CoreArray { params, entries }
    }

    pub fn build(s: u64, t: u64) -> Result<Self> {
        CoreParams::new(s, t).map(CoreArray::new)
    }

    pub fn params(&self) -> &CoreParams {
        &self.params
    }

    /// Entry at row `i`, column `j` (1-based). Panics outside the box.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        assert!((1..=self.params.m).contains(&i) && (1..=self.params.n).contains(&j));
        self.entries[(i - 1) * self.params.n + j - 1]
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[i64] {
        let n = self.params.n;
        &self.entries[(i - 1) * n..i * n]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        let n = self.params.n;
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, &v)| (k / n + 1, k % n + 1, v))
    }

    pub fn positive_sum(&self) -> i64 {
        self.entries.iter().filter(|&&v| v > 0).sum()
    }

    /// For each row, the running sums of its first `k` entries, `k = 0..=n`.
    pub(crate) fn row_prefix_sums(&self) -> Vec<Vec<i64>> {
        (1..=self.params.m)
            .map(|i| {
                let mut acc = 0;
                std::iter::once(0)
                    .chain(self.row(i).iter().map(|&v| {
                        acc += v;
                        acc
                    }))
                    .collect()
            })
            .collect()
    }

    /// M_A of a path: positive entries below it together with the absolute
    /// values of negative entries above it.
    pub fn m_a(&self, path: &LatticePath) -> Result<DiagonalHookSet> {
        self.params.check_box(path)?;
        let mut hooks: Vec<u64> = self
            .entries()
            .filter_map(|(i, j, v)| match (path.is_above(i, j), v > 0) {
                (false, true) => Some(v as u64),
                (true, false) => Some(v.unsigned_abs()),
                _ => None,
            })
            .collect();
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DiagonalHookSet::from_sorted_unchecked(hooks))
    }

    /// Sum of the entries in the cells above the path.
    pub fn above_sum(&self, path: &LatticePath) -> Result<i64> {
        self.params.check_box(path)?;
        Ok((1..=self.params.m)
            .map(|i| self.row(i)[..path.mu.row(i)].iter().sum::<i64>())
            .sum())
    }

    pub fn phi(&self, path: &LatticePath) -> Result<Partition> {
        let hooks = self.m_a(path)?;
        let p = Partition::from_diagonal_hooks(&hooks);
        debug_assert!(p.is_self_conjugate());
        debug_assert_eq!(p.is_t_core(self.params.s), Ok(true));
        debug_assert_eq!(p.is_t_core(self.params.t), Ok(true));
        Ok(p)
    }

    /// Recovers the path of a self-conjugate `(s,t)`-core by solving the sign
    /// constraints cell by cell: a positive entry lies above the path unless
    /// it is a diagonal hook, a negative entry lies below unless its absolute
    /// value is. The cells found above must form a Ferrers shape and account
    /// for every hook, otherwise `p` is not in the image.
    pub fn phi_inverse(&self, p: &Partition) -> Result<LatticePath> {
        let hooks = p
            .diagonal_hooks()
            .map_err(|_| Error::NotInImage("not self-conjugate".into()))?;
        let (m, n) = (self.params.m, self.params.n);
        let mut mu = Vec::with_capacity(m);
        for i in 1..=m {
            let above: Vec<bool> = self
                .row(i)
                .iter()
                .map(|&v| {
                    if v > 0 {
                        !hooks.contains(v as u64)
                    } else {
                        hooks.contains(v.unsigned_abs())
                    }
                })
                .collect();
            let len = above.iter().take_while(|&&a| a).count();
            if above[len..].iter().any(|&a| a) {
                return Err(Error::NotInImage(format!(
                    "cells above the path in row {i} are not left-justified"
                )));
            }
            mu.push(len);
        }
        let mu = Partition::from_padded(&mu).map_err(|_| {
            Error::NotInImage("cells above the path do not form a Ferrers shape".into())
        })?;
        let path = LatticePath::new(m, n, mu)?;
        if self.m_a(&path)? != hooks {
            return Err(Error::NotInImage(
                "some diagonal hook does not appear in the array".into(),
            ));
        }
        Ok(path)
    }

    /// `(s²-1)(t²-1)/24` minus the sum of the entries above the path.
    pub fn size_via_above(&self, path: &LatticePath) -> Result<u64> {
        let above = self.above_sum(path)?;
        let size = self.params.largest_size() as i64 - above;
        debug_assert!(size >= 0);
        Ok(size as u64)
    }

    /// Image of the path along the left and upper borders (no cell above).
    pub fn largest_core(&self) -> Partition {
        let border = LatticePath::new(self.params.m, self.params.n, Partition::empty())
            .expect("empty partition fits any box");
        self.phi(&border).expect("box matches")
    }
}

impl fmt::Display for CoreArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 1..=self.params.m {
            let line: Vec<String> = self.row(i).iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn build_array(s: u64, t: u64) -> Result<CoreArray> {
    CoreArray::build(s, t)
}

pub fn phi(path: &LatticePath, params: &CoreParams) -> Result<Partition> {
    CoreArray::new(*params).phi(path)
}

pub fn phi_inverse(p: &Partition, params: &CoreParams) -> Result<LatticePath> {
    CoreArray::new(*params).phi_inverse(p)
}

pub fn size_via_above(path: &LatticePath, params: &CoreParams) -> Result<u64> {
    CoreArray::new(*params).size_via_above(path)
}

pub fn largest_core(params: &CoreParams) -> Partition {
    CoreArray::new(*params).largest_core()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Right,
}

/// A monotone lattice path in an `m × n` box, stored as the partition of the
/// cells above it.
///
/// JSON form: `{"m":4,"n":5,"mu":[4,3,3,2]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPath")]
pub struct LatticePath {
    m: usize,
    n: usize,
    mu: Partition,
}

#[derive(Deserialize)]
struct RawPath {
    m: usize,
    n: usize,
    mu: Partition,
}

impl TryFrom<RawPath> for LatticePath {
    type Error = Error;

    fn try_from(raw: RawPath) -> Result<Self> {
        LatticePath::new(raw.m, raw.n, raw.mu)
    }
}

impl LatticePath {
    pub fn new(m: usize, n: usize, mu: Partition) -> Result<Self> {
        if mu.len() > m || mu.row(1) > n {
            return Err(Error::InvalidPath(format!(
                "{mu} does not fit in a {m}x{n} box"
            )));
        }
        Ok(LatticePath { m, n, mu })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn is_above(&self, i: usize, j: usize) -> bool {
        j <= self.mu.row(i)
    }

    /// Reads a step word from the lower-left corner. The path's height when it
    /// takes its `j`-th Right step decides column `j`: cell `(i,j)` is above
    /// the path iff that height is at most `m - i`.
    pub fn from_steps(steps: &[Step], m: usize, n: usize) -> Result<Self> {
        let ups = steps.iter().filter(|&&s| s == Step::Up).count();
        let rights = steps.len() - ups;
        if ups != m || rights != n {
            return Err(Error::InvalidPath(format!(
                "expected {m} Up and {n} Right steps, got {ups} and {rights}"
            )));
        }
        let mut heights = Vec::with_capacity(n);
        let mut h = 0;
        for s in steps {
            match s {
                Step::Up => h += 1,
                Step::Right => heights.push(h),
            }
        }
        let rows: Vec<usize> = (1..=m)
            .map(|i| heights.iter().filter(|&&h| h + i <= m).count())
            .collect();
        LatticePath::new(m, n, Partition::from_padded(&rows)?)
    }

    pub fn to_steps(&self) -> Vec<Step> {
        let mut steps = Vec::with_capacity(self.m + self.n);
        // walk up from row m; before climbing past row i, cross columns up to mu_i
        let mut col = 0;
        for i in (1..=self.m).rev() {
            let target = self.mu.row(i);
            steps.extend(std::iter::repeat_n(Step::Right, target - col));
            col = target;
            steps.push(Step::Up);
        }
        steps.extend(std::iter::repeat_n(Step::Right, self.n - col));
        steps
    }

    /// Step word over `U`/`R`, read from the lower-left corner.
    pub fn word(&self) -> String {
        self.to_steps()
            .iter()
            .map(|s| match s {
                Step::Up => 'U',
                Step::Right => 'R',
            })
            .collect()
    }

    pub fn from_word(word: &str, m: usize, n: usize) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'R' | 'r' => Ok(Step::Right),
                other => Err(Error::InvalidPath(format!("unexpected step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePath::from_steps(&steps, m, n)
    }
}

//! Counting lattice paths of an `m × n` box relative to a single cell.
//!
//! `f(i,j)` is the number of paths lying below cell `(i,j)` (touching its
//! right or lower border allowed), i.e. the number of bounding partitions
//! `mu` of the box with `mu_i >= j`. The plain and weighted sums of `f` have
//! closed forms; every function here computes one side of such an identity.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::enumeration::iter_paths;
use crate::error::{Error, Result};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn check_box(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::EmptyBox { m, n });
    }
    Ok(())
}

/// The table of `f(i,j)` over an `m × n` box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCountTable {
    m: usize,
    n: usize,
    f: Vec<BigUint>,
}

impl PathCountTable {
    /// Builds `f` from path prefixes and suffixes. With the lower-left corner
    /// at the origin, cell `(i,j)` spans heights `m-i..m-i+1` over columns
    /// `j-1..j`; a path is below it iff its `j`-th Right step runs at some
    /// height `h <= m-i`. So, with `start(x,y)` the paths from the origin to
    /// `(x,y)` and `end(x,y)` the paths from `(x,y)` to `(n,m)`:
    ///
    /// ```text
    /// f(m,j) = start(j-1,0) · end(j,0)
    /// f(i,j) = f(i+1,j) + start(j-1,m-i) · end(j,m-i)
    /// ```
    ///
    /// and `start`, `end` are Pascal tables filled by the usual additive DP.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        check_box(m, n)?;
        let idx = |x: usize, y: usize| x * (m + 1) + y;
        let mut start = vec![BigUint::zero(); (n + 1) * (m + 1)];
        let mut end = start.clone();
        for x in 0..=n {
            for y in 0..=m {
                start[idx(x, y)] = if x == 0 || y == 0 {
                    BigUint::one()
                } else {
                    &start[idx(x - 1, y)] + &start[idx(x, y - 1)]
                };
            }
        }
        for x in (0..=n).rev() {
            for y in (0..=m).rev() {
                end[idx(x, y)] = if x == n || y == m {
                    BigUint::one()
                } else {
                    &end[idx(x + 1, y)] + &end[idx(x, y + 1)]
                };
            }
        }
        let mut f = vec![BigUint::zero(); m * n];
        for j in 1..=n {
            let mut acc = BigUint::zero();
            for i in (1..=m).rev() {
                let h = m - i;
                acc += &start[idx(j - 1, h)] * &end[idx(j, h)];
                f[(i - 1) * n + j - 1] = acc.clone();
            }
        }
        Ok(PathCountTable { m, n, f })
    }

    /// Counts, for every cell, the enumerated paths with that cell above them.
    pub fn by_enumeration(m: usize, n: usize) -> Result<Self> {
        check_box(m, n)?;
        let mut counts = vec![0u64; m * n];
        for path in iter_paths(m, n)? {
            for (i, &r) in path.mu().rows().iter().enumerate() {
                for c in &mut counts[i * n..i * n + r] {
                    *c += 1;
                }
            }
        }
        Ok(PathCountTable {
            m,
            n,
            f: counts.into_iter().map(BigUint::from).collect(),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `f(i,j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j));
        &self.f[(i - 1) * self.n + j - 1]
    }

    fn cells(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> + '_ {
        self.f
            .iter()
            .enumerate()
            .map(move |(k, v)| (k / self.n + 1, k % self.n + 1, v))
    }

    pub fn sum(&self) -> BigUint {
        self.f.iter().sum()
    }

    /// `Σ i·f(i,j)`
    pub fn row_weighted_sum(&self) -> BigUint {
        self.cells().map(|(i, _, v)| v * BigUint::from(i)).sum()
    }

    /// `Σ j·f(i,j)`
    pub fn column_weighted_sum(&self) -> BigUint {
        self.cells().map(|(_, j, v)| v * BigUint::from(j)).sum()
    }

    /// `f(i,j) + f(m-i+1, n-j+1) = C(m+n, m)` for every cell.
    pub fn is_centrally_symmetric(&self) -> bool {
        let total = binomial((self.m + self.n) as u64, self.m as u64);
        self.cells()
            .all(|(i, j, v)| v + self.get(self.m - i + 1, self.n - j + 1) == total)
    }

    /// The same table for the `n × m` box, read through conjugation of `mu`.
    pub fn transpose(&self) -> PathCountTable {
        let f = (1..=self.n)
            .flat_map(|j| (1..=self.m).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PathCountTable {
            m: self.n,
            n: self.m,
            f,
        }
    }
}

pub fn f_table(m: usize, n: usize) -> Result<PathCountTable> {
    PathCountTable::new(m, n)
}

pub fn sum_f(m: usize, n: usize) -> Result<BigUint> {
    Ok(PathCountTable::new(m, n)?.sum())
}

pub fn sum_if(m: usize, n: usize) -> Result<BigUint> {
    Ok(PathCountTable::new(m, n)?.row_weighted_sum())
}

pub fn sum_jf(m: usize, n: usize) -> Result<BigUint> {
    Ok(PathCountTable::new(m, n)?.column_weighted_sum())
}

/// `C(m+n, m) · mn / 2`
pub fn sum_f_closed(m: usize, n: usize) -> BigUint {
    binomial((m + n) as u64, m as u64) * BigUint::from(m * n) / 2u32
}

/// `C(m+2, 3) · C(m+n, m+1)`
pub fn sum_if_closed(m: usize, n: usize) -> BigUint {
    binomial(m as u64 + 2, 3) * binomial((m + n) as u64, m as u64 + 1)
}

/// `C(n+2, 3) · C(m+n, n+1)`
pub fn sum_jf_closed(m: usize, n: usize) -> BigUint {
    binomial(n as u64 + 2, 3) * binomial((m + n) as u64, n as u64 + 1)
}

/// `G(m,n) = Σ i·f(i,j)`, read off the DP table.
pub fn g_direct(m: usize, n: usize) -> Result<BigUint> {
    sum_if(m, n)
}

/// `G(m,n) = G(m-1,n) + G(m,n-1) + C(m+1,2)·C(m+n-1,m)`, every `G` from [`g_direct`].
pub fn g_recurrence_check(m: usize, n: usize) -> Result<bool> {
    if m < 2 || n < 2 {
        return Err(Error::RecurrenceDomain { m, n });
    }
    let rhs = g_direct(m - 1, n)?
        + g_direct(m, n - 1)?
        + binomial(m as u64 + 1, 2) * binomial((m + n - 1) as u64, m as u64);
    Ok(g_direct(m, n)? == rhs)
}

/// `Σ_mu Σ_j C(mu'_j + 1, 2)` over every bounding partition of the box:
/// the number of (path, two cells above it in one column) configurations.
pub fn triple_count(m: usize, n: usize) -> Result<BigUint> {
    let mut total = 0u128;
    for path in iter_paths(m, n)? {
        let conj = path.mu().conjugate();
        total += conj
            .rows()
            .iter()
            .map(|&c| (c * (c + 1) / 2) as u128)
            .sum::<u128>();
    }
    Ok(BigUint::from(total))
}

/// One row of the identity sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityRow {
    pub m: usize,
    pub n: usize,
    pub sum_f_ok: bool,
    pub sum_if_ok: bool,
    pub sum_jf_ok: bool,
    pub symmetry_ok: bool,
    /// The recurrence for `m, n >= 2`; the initial conditions
    /// `G(1,n) = C(n+1,2)` and `G(m,1) = C(m+2,3)` on the border.
    pub recurrence_ok: bool,
}

pub fn check_identities(m: usize, n: usize) -> Result<IdentityRow> {
    let table = PathCountTable::new(m, n)?;
    let g = table.row_weighted_sum();
    let recurrence_ok = if m >= 2 && n >= 2 {
        g_recurrence_check(m, n)?
    } else if m == 1 {
        g == binomial(n as u64 + 1, 2)
    } else {
        g == binomial(m as u64 + 2, 3)
    };
    Ok(IdentityRow {
        m,
        n,
        sum_f_ok: table.sum() == sum_f_closed(m, n),
        sum_if_ok: g == sum_if_closed(m, n),
        sum_jf_ok: table.column_weighted_sum() == sum_jf_closed(m, n),
        symmetry_ok: table.is_centrally_symmetric(),
        recurrence_ok,
    })
}

impl IdentityRow {
    pub fn all_ok(&self) -> bool {
        self.sum_f_ok && self.sum_if_ok && self.sum_jf_ok && self.symmetry_ok && self.recurrence_ok
    }
}

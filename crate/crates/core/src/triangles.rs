//! The six scaled number triangles, grown row by row from their recurrences.
//!
//! The recurrences are the source of truth; every closed form (the explicit
//! Lah formula, the m = 1 columns, the EGF coefficients) is used only as a
//! cross-check in tests. Entries are arbitrary-precision integers: all six
//! families are integer-valued, and a recurrence producing anything else
//! would be an internal error.
//!
//! Initial conditions are `entry(0, m) = [m = 0]` and `entry(n, 0) = [n = 0]`
//! for every family. For the Lah pair the `[m = 0]` row zero is the
//! orthogonality-compatible choice: it is what the EGFs produce, it makes
//! all three inverse pairs orthogonal, and it gives the cumulant coefficient
//! formulas their n = 1 base case.
//!
//! Concurrency: rows already materialized can be read from any number of
//! threads; extension takes the interior write lock, so the single-writer
//! contract is enforced internally and the public API needs only `&self`.

use std::fmt;
use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::rational::{binomial, factorial, Int};
use crate::series::FamilyId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangleError {
    /// `lah_explicit` requires `1 <= m <= n`.
    IndexOutOfRange { n: u64, m: u64 },
}

impl fmt::Display for TriangleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleError::IndexOutOfRange { n, m } => {
                write!(f, "lah_explicit requires 1 <= m <= n, got n = {n}, m = {m}")
            }
        }
    }
}

impl std::error::Error for TriangleError {}

/// One lazily extended lower-triangular table.
#[derive(Debug)]
pub struct Triangle {
    family: FamilyId,
    rows: RwLock<Vec<Vec<Int>>>,
}

impl Triangle {
    pub fn new(family: FamilyId) -> Self {
        Triangle {
            family,
            rows: RwLock::new(vec![vec![Int::one()]]),
        }
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    /// The exact entry at `(n, m)`; zero above the diagonal. The cache grows
    /// monotonically as rows are demanded.
    pub fn entry(&self, n: usize, m: usize) -> Int {
        if m > n {
            return Int::zero();
        }
        self.ensure(n);
        self.rows.read().unwrap()[n][m].clone()
    }

    /// Row `n` as `[entry(n, 0), ..., entry(n, n)]`.
    pub fn row(&self, n: usize) -> Vec<Int> {
        self.ensure(n);
        self.rows.read().unwrap()[n].clone()
    }

    fn ensure(&self, n: usize) {
        if self.rows.read().unwrap().len() > n {
            return;
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= n {
            let next = next_row(self.family, &rows);
            rows.push(next);
        }
    }
}

/// Row `k+1` from the rows computed so far, by the family's recurrence.
/// Only the tanh recurrence looks ahead in column (to m+1), and only within
/// the fully materialized previous row; the arctanh recurrence reaches back
/// two rows, with the `n(n-1)` factor killing the reach-back at n = 0.
fn next_row(family: FamilyId, rows: &[Vec<Int>]) -> Vec<Int> {
    let n = rows.len() - 1; // recurrences step n -> n+1
    let prev = &rows[n];
    let get = |row: &[Int], j: isize| -> Int {
        if j < 0 || j as usize >= row.len() {
            Int::zero()
        } else {
            row[j as usize].clone()
        }
    };
    let mut out = Vec::with_capacity(n + 2);
    for m in 0..=(n + 1) as isize {
        let v = match family {
            FamilyId::StirlingFirstScaled => {
                get(prev, m - 1) - Int::from(2 * n) * get(prev, m)
            }
            FamilyId::StirlingSecondScaled => {
                get(prev, m - 1) + Int::from(2 * m) * get(prev, m)
            }
            FamilyId::ArcTanh => {
                let reach = if n >= 1 {
                    Int::from(n * (n - 1)) * get(&rows[n - 1], m)
                } else {
                    Int::zero()
                };
                get(prev, m - 1) + reach
            }
            FamilyId::Tanh => get(prev, m - 1) - Int::from(m * (m + 1)) * get(prev, m + 1),
            FamilyId::LahLower => {
                Int::from(n as isize + m) * get(prev, m) + get(prev, m - 1)
            }
            FamilyId::LahUpper => {
                -Int::from(n as isize + m) * get(prev, m) + get(prev, m - 1)
            }
        };
        out.push(v);
    }
    out
}

/// All six triangles behind one handle; the usual working context for the
/// conversion, polynomial and cumulant layers.
#[derive(Debug)]
pub struct TriangleSet {
    triangles: [Triangle; 6],
}

impl TriangleSet {
    pub fn new() -> Self {
        TriangleSet {
            triangles: FamilyId::ALL.map(Triangle::new),
        }
    }

    pub fn triangle(&self, family: FamilyId) -> &Triangle {
        let idx = FamilyId::ALL
            .iter()
            .position(|&f| f == family)
            .expect("FamilyId::ALL is total");
        &self.triangles[idx]
    }

    pub fn entry(&self, family: FamilyId, n: usize, m: usize) -> Int {
        self.triangle(family).entry(n, m)
    }

    /// Entry with signed column index; negative columns are zero. Used by
    /// the diagonal samplers, where `m = x - k` can be negative.
    pub fn entry_signed(&self, family: FamilyId, n: usize, m: isize) -> Int {
        if m < 0 {
            Int::zero()
        } else {
            self.entry(family, n, m as usize)
        }
    }

    pub fn row(&self, family: FamilyId, n: usize) -> Vec<Int> {
        self.triangle(family).row(n)
    }
}

impl Default for TriangleSet {
    fn default() -> Self {
        Self::new()
    }
}

/// The unsigned Lah value `n!/m! * C(n-1, m-1)` for `1 <= m <= n`.
/// Equals `entry(LahLower, n, m)`; the upper family carries `(-1)^(n-m)`.
pub fn lah_explicit(n: u64, m: u64) -> Result<Int, TriangleError> {
    if m < 1 || m > n {
        return Err(TriangleError::IndexOutOfRange { n, m });
    }
    let (q, r) = num_integer::Integer::div_rem(&factorial(n), &factorial(m));
    debug_assert!(r.is_zero());
    Ok(q * binomial(n as i64 - 1, m as i64 - 1))
}

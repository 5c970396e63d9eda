//! Exact arithmetic foundations: big integers, big rationals, integer
//! partitions, and fraction-free exact linear algebra.
//!
//! Determinants and ranks are computed by Bareiss fraction-free elimination
//! on integer-scaled rows.  Every interior division performed by the
//! elimination is asserted to be exact, so a wrong intermediate value cannot
//! silently round: it aborts.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Shorthand: an exact rational from an `i64`.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand: an exact rational `n / d` (`d` must be nonzero).
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An integer partition: a multiset of positive parts, stored in
/// nonincreasing order.
///
/// The constructor normalises the order, so `[1, 2, 2]` and `[2, 2, 1]`
/// construct equal values.  The empty partition (of 0) is allowed at the
/// type level; operations that need at least one part reject it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from the given parts, sorting them into
    /// nonincreasing order.  Rejects zero parts.
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// The parts, in nonincreasing order.
    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Sum of the parts (the number being partitioned).
    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Displays as the comma-separated part list, e.g. `2,2,1`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses a comma-separated list of positive integers, e.g. `"2,2,1,1"`.
    /// Whitespace around entries is tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::invalid("empty partition string"));
        }
        let mut parts = Vec::new();
        for piece in trimmed.split(',') {
            let piece = piece.trim();
            let value: u64 = piece
                .parse()
                .map_err(|_| Error::invalid(format!("bad partition part {piece:?}")))?;
            if value == 0 {
                return Err(Error::invalid("partition parts must be positive"));
            }
            parts.push(value);
        }
        Partition::new(parts)
    }
}

/// Least common multiple of the parts of a partition.
///
/// Errors on the empty partition: the lcm of an empty multiset has no
/// meaningful value for the callers of this function (local ramification
/// orders), so it is rejected rather than defaulted.
pub fn lcm_of(partition: &Partition) -> Result<BigInt> {
    if partition.is_empty() {
        return Err(Error::invalid("lcm of an empty partition is undefined"));
    }
    let mut acc = BigInt::one();
    for &p in partition.parts() {
        acc = acc.lcm(&BigInt::from(p));
    }
    Ok(acc)
}

/// A dense matrix of exact rationals, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    /// Builds a matrix from row-major entries.  The entry count must equal
    /// `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::invalid(format!(
                "a {rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows of machine integers (test and table
    /// convenience).
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::invalid("ragged rows in matrix literal"));
        }
        let entries = rows.iter().flatten().map(|&v| rat(v)).collect();
        RatMatrix::new(nrows, ncols, entries)
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Borrow the entry at `(row, col)` (0-based).  Panics when out of range.
    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        assert!(
            row < self.rows && col < self.cols,
            "matrix index out of range"
        );
        &self.entries[row * self.cols + col]
    }

    /// Overwrite the entry at `(row, col)` (0-based).  Panics when out of range.
    pub fn set(&mut self, row: usize, col: usize, value: BigRational) {
        assert!(
            row < self.rows && col < self.cols,
            "matrix index out of range"
        );
        self.entries[row * self.cols + col] = value;
    }

    /// Borrow one row as a slice.
    pub fn row(&self, row: usize) -> &[BigRational] {
        assert!(row < self.rows, "matrix row out of range");
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }
}

/// Divides `num` by `den`, asserting the division is exact.
///
/// Fraction-free elimination guarantees exactness of all its interior
/// divisions (Sylvester's determinant identity); this assert turns any
/// violation of that guarantee into an immediate, loud failure instead of a
/// silently wrong result.
fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(
        r.is_zero(),
        "fraction-free elimination hit a non-exact division"
    );
    q
}

/// Clears denominators row by row: returns integer rows together with the
/// product of the per-row scale factors (each the positive lcm of the row's
/// denominators).
fn scaled_integer_rows(m: &RatMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let row = m.row(r);
        let mut l = BigInt::one();
        for e in row {
            l = l.lcm(e.denom());
        }
        let l = l.abs();
        scale *= &l;
        rows.push(
            row.iter()
                .map(|e| e.numer() * exact_div(l.clone(), e.denom()))
                .collect(),
        );
    }
    (rows, scale)
}

/// Exact determinant by Bareiss fraction-free elimination.
///
/// Denominators are cleared row by row first, the integer determinant is
/// computed fraction-free (every interior division asserted exact), and the
/// row scales are divided back out at the end.  Errors on non-square input.
pub fn det_exact(m: &RatMatrix) -> Result<BigRational> {
    if m.rows() != m.cols() {
        return Err(Error::invalid(format!(
            "determinant requires a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigRational::one());
    }
    let (mut a, scale) = scaled_integer_rows(m);
    let mut sign_negative = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let pivot_row = match (k..n).find(|&r| !a[r][k].is_zero()) {
            Some(r) => r,
            None => return Ok(BigRational::zero()),
        };
        if pivot_row != k {
            a.swap(pivot_row, k);
            sign_negative = !sign_negative;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = exact_div(num, &prev);
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det_scaled = a[n - 1][n - 1].clone();
    if sign_negative {
        det_scaled = -det_scaled;
    }
    Ok(BigRational::new(det_scaled, scale))
}

/// Exact rank by fraction-free elimination with column skipping.
///
/// Works for any shape, including empty matrices.  Row scaling by positive
/// integers does not change the rank, so the same integer-scaled rows as in
/// [`det_exact`] are used.
pub fn rank_exact(m: &RatMatrix) -> usize {
    let (mut a, _) = scaled_integer_rows(m);
    let (nrows, ncols) = (m.rows(), m.cols());
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let pivot_row = match (rank..nrows).find(|&r| !a[r][col].is_zero()) {
            Some(r) => r,
            None => continue,
        };
        a.swap(pivot_row, rank);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let num = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = exact_div(num, &prev);
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

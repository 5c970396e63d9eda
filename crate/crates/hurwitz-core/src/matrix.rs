//! The 10×10 boundary intersection matrix `M(g, d)`, its verification, and
//! nonsingularity scans over parameter grids.
//!
//! Columns follow the divisor basis of the curves module.  Rows 1–5 are the
//! pushforward-pair rows (each supported on one upstairs/downstairs divisor
//! pair); rows 6–10 are the intersection vectors of the test curves `A_0`,
//! `B_0`, `A_1`, `G_[3]`, `F`.  Nonsingularity of this matrix forces every
//! boundary coefficient in a divisor relation to vanish, which is the
//! computational pillar the toolkit exists to verify — so the determinant
//! is always computed exactly.

use num_traits::{One, ToPrimitive, Zero};

use crate::curves::{
    curve_a, curve_b, curve_f, curve_g3, json_int, BoundaryDivisor, DivisorVector,
};
use crate::error::{Error, Result};
use crate::exact::{det_exact, BigInt, BigRational, RatMatrix};

/// Row labels of `M`, in order.
pub const ROW_LABELS: [&str; 10] = [
    "push_T",
    "push_D",
    "push_delta",
    "push_Delta",
    "push_E",
    "A_0",
    "B_0",
    "A_1",
    "G_[3]",
    "F",
];

/// Largest number of grid points a scan will accept.
pub const MAX_SCAN_POINTS: u64 = 1_000_000;

/// The assembled matrix together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    g: i64,
    d: i64,
    b: i64,
    entries: RatMatrix,
}

/// The five pushforward-pair rows: (value on the `1+[1]`-type column,
/// value on the `[k]`-type column), with `b` the number of branch points.
fn pushforward_pairs(b: i64) -> [(usize, usize, i64, i64); 5] {
    [
        (0, 1, 2, b - 2),
        (2, 3, 2, b - 2),
        (4, 5, 2, b - 2),
        (6, 7, 1, b - 2),
        (8, 9, 3, b - 3),
    ]
}

/// The five curve rows, in row order 6–10.
fn curve_rows(g: i64, d: i64) -> Result<[DivisorVector; 5]> {
    Ok([
        curve_a(g, d, 0)?,
        curve_b(g, d, 0)?,
        curve_a(g, d, 1)?,
        curve_g3(g, d)?,
        curve_f(g, d)?,
    ])
}

impl IntersectionMatrix {
    /// Genus parameter.
    pub fn g(&self) -> i64 {
        self.g
    }

    /// Degree parameter.
    pub fn d(&self) -> i64 {
        self.d
    }

    /// Branch point count `b = 2g + 2d − 2`.
    pub fn b(&self) -> i64 {
        self.b
    }

    /// The exact 10×10 matrix.
    pub fn entries(&self) -> &RatMatrix {
        &self.entries
    }

    /// JSON report: parameters, column labels, and labeled rows with exact
    /// entries.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "g": self.g,
            "d": self.d,
            "b": self.b,
            "columns": BoundaryDivisor::ALL.iter().map(|c| c.label()).collect::<Vec<_>>(),
            "rows": (0..10).map(|r| {
                serde_json::json!({
                    "label": ROW_LABELS[r],
                    "entries": self.entries.row(r).iter().map(json_rat).collect::<Vec<_>>(),
                })
            }).collect::<Vec<_>>(),
        })
    }
}

/// Exact rationals in JSON: an arbitrary-precision number when integral,
/// else the string `"p/q"`.
pub(crate) fn json_rat(value: &BigRational) -> serde_json::Value {
    if value.denom().is_one() {
        json_int(value.numer())
    } else {
        serde_json::json!(value.to_string())
    }
}

/// Assembles `M(g, d)`.  Requires `g ≥ 3` and `d ≥ g+1`: the curve `F`
/// needs `d ≥ g+1`, and the independence statement assumes `d > g`, `g ≥ 3`.
/// Out-of-range parameters are rejected, never extrapolated.
pub fn build_m(g: i64, d: i64) -> Result<IntersectionMatrix> {
    if g < 3 || d < g + 1 {
        return Err(Error::invalid(format!(
            "M(g, d) needs g >= 3 and d >= g+1, got g={g}, d={d}"
        )));
    }
    let b = 2 * g + 2 * d - 2;
    let mut entries = RatMatrix::zero(10, 10);
    for (row, (col_a, col_b, value_a, value_b)) in pushforward_pairs(b).into_iter().enumerate() {
        entries.set(row, col_a, BigRational::from_integer(BigInt::from(value_a)));
        entries.set(row, col_b, BigRational::from_integer(BigInt::from(value_b)));
    }
    for (offset, curve) in curve_rows(g, d)?.iter().enumerate() {
        for (col, value) in curve.entries().iter().enumerate() {
            entries.set(5 + offset, col, BigRational::from_integer(value.clone()));
        }
    }
    Ok(IntersectionMatrix { g, d, b, entries })
}

/// One row's cross-check outcome inside a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    /// The row label from [`ROW_LABELS`].
    pub label: &'static str,
    /// Whether the row matched its independent reconstruction.
    pub pass: bool,
}

/// The result of verifying one matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixVerdict {
    /// Genus parameter.
    pub g: i64,
    /// Degree parameter.
    pub d: i64,
    /// Branch point count.
    pub b: i64,
    /// Exact determinant.
    pub det: BigRational,
    /// `det ≠ 0`.
    pub nonsingular: bool,
    /// Per-row cross-checks: rows 1–5 against the pushforward-pair
    /// structure, rows 6–10 against freshly recomputed curve vectors.
    pub row_checks: Vec<RowCheck>,
    /// Overall verdict: nonsingular and every row check passed.
    pub pass: bool,
}

impl MatrixVerdict {
    /// JSON report with the determinant both exact and as a decimal
    /// approximation for human readers.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "g": self.g,
            "d": self.d,
            "b": self.b,
            "det": self.det.to_string(),
            "det_decimal": self.det.to_f64(),
            "nonsingular": self.nonsingular,
            "row_checks": self.row_checks.iter().map(|check| {
                serde_json::json!({ "row": check.label, "pass": check.pass })
            }).collect::<Vec<_>>(),
            "pass": self.pass,
        })
    }
}

/// Builds `M(g, d)` and verifies it: exact determinant, nonsingularity,
/// and all ten row cross-checks.  Verification failures are reported in
/// the verdict, not thrown; only parameter-range violations error.
pub fn verify_m(g: i64, d: i64) -> Result<MatrixVerdict> {
    let matrix = build_m(g, d)?;
    let det = det_exact(matrix.entries()).expect("M is square");
    let nonsingular = !det.is_zero();

    let mut row_checks = Vec::with_capacity(10);
    for (row, (col_a, col_b, value_a, value_b)) in
        pushforward_pairs(matrix.b).into_iter().enumerate()
    {
        let pass = (0..10).all(|col| {
            let entry = matrix.entries.get(row, col);
            let expected = if col == col_a {
                BigRational::from_integer(BigInt::from(value_a))
            } else if col == col_b {
                BigRational::from_integer(BigInt::from(value_b))
            } else {
                BigRational::zero()
            };
            entry == &expected
        });
        row_checks.push(RowCheck {
            label: ROW_LABELS[row],
            pass,
        });
    }
    for (offset, curve) in curve_rows(g, d)?.iter().enumerate() {
        let pass = (0..10).all(|col| {
            matrix.entries.get(5 + offset, col)
                == &BigRational::from_integer(curve.entries()[col].clone())
        });
        row_checks.push(RowCheck {
            label: ROW_LABELS[5 + offset],
            pass,
        });
    }

    let pass = nonsingular && row_checks.iter().all(|check| check.pass);
    Ok(MatrixVerdict {
        g,
        d,
        b: matrix.b,
        det,
        nonsingular,
        row_checks,
        pass,
    })
}

/// One grid point of a nonsingularity scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    /// Genus parameter.
    pub g: i64,
    /// Degree parameter (`g` + offset).
    pub d: i64,
    /// Exact determinant of `M(g, d)`.
    pub det: BigRational,
    /// `det ≠ 0`.
    pub nonsingular: bool,
}

/// The result of a grid scan, rows ordered by `(g, d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    /// One row per grid point, ordered by `(g, d)`.
    pub rows: Vec<ScanRow>,
    /// True iff every determinant on the grid is nonzero (vacuously true on
    /// an empty grid).
    pub all_nonsingular: bool,
    /// True iff the grid was empty.
    pub vacuous: bool,
}

impl ScanReport {
    /// JSON report.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "points": self.rows.len(),
            "all_nonsingular": self.all_nonsingular,
            "vacuous": self.vacuous,
            "rows": self.rows.iter().map(|row| {
                serde_json::json!({
                    "g": row.g,
                    "d": row.d,
                    "det": row.det.to_string(),
                    "nonsingular": row.nonsingular,
                })
            }).collect::<Vec<_>>(),
        })
    }
}

/// Scans `det(M(g, g + offset))` over the product grid, in parallel when
/// `jobs > 1`, reporting each point exactly.
///
/// Empty ranges yield a vacuous report rather than an error.  Every grid
/// point must satisfy the [`build_m`] preconditions (so `g ≥ 3`, offsets
/// `≥ 1`); the grid size is capped by [`MAX_SCAN_POINTS`].
pub fn scan_independence(
    g_range: std::ops::RangeInclusive<i64>,
    d_offset_range: std::ops::RangeInclusive<i64>,
    jobs: usize,
) -> Result<ScanReport> {
    let points: Vec<(i64, i64)> = g_range
        .flat_map(|g| d_offset_range.clone().map(move |offset| (g, g + offset)))
        .collect();
    if points.is_empty() {
        return Ok(ScanReport {
            rows: Vec::new(),
            all_nonsingular: true,
            vacuous: true,
        });
    }
    if points.len() as u64 > MAX_SCAN_POINTS {
        return Err(Error::guard(format!(
            "scan grid has {} points, the cap is {MAX_SCAN_POINTS}",
            points.len()
        )));
    }
    for &(g, d) in &points {
        if g < 3 || d < g + 1 {
            return Err(Error::invalid(format!(
                "scan grid point (g={g}, d={d}) violates g >= 3, d >= g+1"
            )));
        }
    }

    let jobs = jobs.max(1).min(points.len());
    let mut rows: Vec<Option<ScanRow>> = vec![None; points.len()];
    if jobs == 1 {
        for (&(g, d), slot) in points.iter().zip(rows.iter_mut()) {
            let matrix = build_m(g, d)?;
            let det = det_exact(matrix.entries()).expect("M is square");
            let nonsingular = !det.is_zero();
            *slot = Some(ScanRow {
                g,
                d,
                det,
                nonsingular,
            });
        }
    } else {
        let chunk = points.len().div_ceil(jobs);
        let results: Vec<Result<Vec<(usize, ScanRow)>>> = std::thread::scope(|scope| {
            let points = &points;
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    scope.spawn(move || {
                        let lo = w * chunk;
                        let hi = ((w + 1) * chunk).min(points.len());
                        let mut out = Vec::with_capacity(hi.saturating_sub(lo));
                        for (index, &(g, d)) in points[lo.min(points.len())..hi].iter().enumerate()
                        {
                            let matrix = build_m(g, d)?;
                            let det = det_exact(matrix.entries()).expect("M is square");
                            let nonsingular = !det.is_zero();
                            out.push((
                                lo + index,
                                ScanRow {
                                    g,
                                    d,
                                    det,
                                    nonsingular,
                                },
                            ));
                        }
                        Ok(out)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect()
        });
        for result in results {
            for (index, row) in result? {
                rows[index] = Some(row);
            }
        }
    }
    let rows: Vec<ScanRow> = rows
        .into_iter()
        .map(|row| row.expect("every grid point was computed"))
        .collect();
    let all_nonsingular = rows.iter().all(|row| row.nonsingular);
    Ok(ScanReport {
        rows,
        all_nonsingular,
        vacuous: false,
    })
}

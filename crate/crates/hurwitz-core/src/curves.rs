//! Intersection vectors of one-parameter test families of admissible
//! covers against the fixed ten-element boundary divisor basis, and their
//! pushforwards to the genus-0 boundary divisors under the branch morphism.
//!
//! Basis order (fixed globally, columns of the matrix module):
//! `T_{1+[1]}, T_{[2]}, D_{1+[1]}, D_{[2]}, delta_{1+[1]}, delta_{[2]},
//! Delta_{1+[1]}, Delta_{[2]}, E_{1+[2]}, E_{[3]}`.
//!
//! The vectors are generated from the formula module (Plücker, de
//! Jonquières, the printed `h`-dependence); hard-coded tables appear only
//! in tests, as independent cross-checks.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::BigInt;
use crate::formulas::{de_jonquieres_closed, plucker};

/// Number of boundary divisor classes in the basis.
pub const DIVISOR_COUNT: usize = 10;

/// The ten boundary divisor classes, in fixed basis order.
///
/// The letter records the ramification/degeneration type of the boundary
/// family; `1+[k]` vs `[k]` records whether the distinguished branch point
/// splits off in the degeneration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryDivisor {
    /// T̃_{1+[1]} — triple-ramification tail, distinguished point split off.
    T1p1,
    /// T̃_{[2]} — triple-ramification tail.
    T2,
    /// D̃_{1+[1]} — double-double ramification, distinguished point split off.
    D1p1,
    /// D̃_{[2]} — double-double ramification.
    D2,
    /// δ̃_{1+[1]} — simple base point collision, distinguished point split off.
    SmallDelta1p1,
    /// δ̃_{[2]} — simple base point collision.
    SmallDelta2,
    /// Δ̃_{1+[1]} — source-curve degeneration, distinguished point split off.
    Delta1p1,
    /// Δ̃_{[2]} — source-curve degeneration.
    Delta2,
    /// Ẽ_{1+[2]} — elliptic-type tail, distinguished point with the pair.
    E1p2,
    /// Ẽ_{[3]} — elliptic-type tail over a triple.
    E3,
}

impl BoundaryDivisor {
    /// All ten classes in basis order.
    pub const ALL: [BoundaryDivisor; DIVISOR_COUNT] = [
        BoundaryDivisor::T1p1,
        BoundaryDivisor::T2,
        BoundaryDivisor::D1p1,
        BoundaryDivisor::D2,
        BoundaryDivisor::SmallDelta1p1,
        BoundaryDivisor::SmallDelta2,
        BoundaryDivisor::Delta1p1,
        BoundaryDivisor::Delta2,
        BoundaryDivisor::E1p2,
        BoundaryDivisor::E3,
    ];

    /// Column index in the basis order.
    pub fn index(self) -> usize {
        BoundaryDivisor::ALL
            .iter()
            .position(|&b| b == self)
            .expect("every divisor is in ALL")
    }

    /// The ASCII label used in all reports.
    pub fn label(self) -> &'static str {
        match self {
            BoundaryDivisor::T1p1 => "T_{1+[1]}",
            BoundaryDivisor::T2 => "T_{[2]}",
            BoundaryDivisor::D1p1 => "D_{1+[1]}",
            BoundaryDivisor::D2 => "D_{[2]}",
            BoundaryDivisor::SmallDelta1p1 => "delta_{1+[1]}",
            BoundaryDivisor::SmallDelta2 => "delta_{[2]}",
            BoundaryDivisor::Delta1p1 => "Delta_{1+[1]}",
            BoundaryDivisor::Delta2 => "Delta_{[2]}",
            BoundaryDivisor::E1p2 => "E_{1+[2]}",
            BoundaryDivisor::E3 => "E_{[3]}",
        }
    }
}

/// The four genus-0 boundary divisors downstairs, targets of the branch
/// morphism pushforward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseDivisor {
    /// δ_{1+[1]} — the distinguished point with one other branch point.
    Delta1p1,
    /// δ_{[2]} — two ordinary branch points collide.
    Delta2,
    /// δ_{1+[2]} — the distinguished point with two others.
    Delta1p2,
    /// δ_{[3]} — three ordinary branch points collide.
    Delta3,
}

impl BaseDivisor {
    /// All four classes in report order.
    pub const ALL: [BaseDivisor; 4] = [
        BaseDivisor::Delta1p1,
        BaseDivisor::Delta2,
        BaseDivisor::Delta1p2,
        BaseDivisor::Delta3,
    ];

    /// The ASCII label used in all reports.
    pub fn label(self) -> &'static str {
        match self {
            BaseDivisor::Delta1p1 => "delta_{1+[1]}",
            BaseDivisor::Delta2 => "delta_{[2]}",
            BaseDivisor::Delta1p2 => "delta_{1+[2]}",
            BaseDivisor::Delta3 => "delta_{[3]}",
        }
    }

    /// The upstairs divisors that push forward onto this class.
    pub fn sources(self) -> &'static [BoundaryDivisor] {
        match self {
            BaseDivisor::Delta1p1 => &[
                BoundaryDivisor::T1p1,
                BoundaryDivisor::D1p1,
                BoundaryDivisor::SmallDelta1p1,
                BoundaryDivisor::Delta1p1,
            ],
            BaseDivisor::Delta2 => &[
                BoundaryDivisor::T2,
                BoundaryDivisor::D2,
                BoundaryDivisor::SmallDelta2,
                BoundaryDivisor::Delta2,
            ],
            BaseDivisor::Delta1p2 => &[BoundaryDivisor::E1p2],
            BaseDivisor::Delta3 => &[BoundaryDivisor::E3],
        }
    }
}

/// Exact intersection numbers of one test curve against the ten boundary
/// classes, in basis order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorVector {
    curve: String,
    g: i64,
    d: i64,
    h: Option<i64>,
    entries: [BigInt; DIVISOR_COUNT],
}

impl DivisorVector {
    /// The curve label, e.g. `"F"` or `"A_0"`.
    pub fn curve(&self) -> &str {
        &self.curve
    }

    /// Genus parameter of the family.
    pub fn g(&self) -> i64 {
        self.g
    }

    /// Degree parameter of the family.
    pub fn d(&self) -> i64 {
        self.d
    }

    /// The `h` parameter for the A/B families, when applicable.
    pub fn h(&self) -> Option<i64> {
        self.h
    }

    /// The intersection number against one divisor class.
    pub fn entry(&self, divisor: BoundaryDivisor) -> &BigInt {
        &self.entries[divisor.index()]
    }

    /// All ten entries in basis order.
    pub fn entries(&self) -> &[BigInt; DIVISOR_COUNT] {
        &self.entries
    }

    /// JSON object keyed by the divisor labels, in basis order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = serde_json::Map::new();
        for divisor in BoundaryDivisor::ALL {
            entries.insert(divisor.label().to_string(), json_int(self.entry(divisor)));
        }
        let mut object = serde_json::Map::new();
        object.insert("curve".into(), serde_json::json!(self.curve));
        object.insert("g".into(), serde_json::json!(self.g));
        object.insert("d".into(), serde_json::json!(self.d));
        if let Some(h) = self.h {
            object.insert("h".into(), serde_json::json!(h));
        }
        object.insert("entries".into(), serde_json::Value::Object(entries));
        serde_json::Value::Object(object)
    }
}

/// Exact pushforward intersection numbers against the four genus-0
/// boundary classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardVector {
    entries: [BigInt; 4],
}

impl PushforwardVector {
    /// The pushforward intersection against one base class.
    pub fn entry(&self, divisor: BaseDivisor) -> &BigInt {
        let index = BaseDivisor::ALL
            .iter()
            .position(|&b| b == divisor)
            .expect("every base divisor is in ALL");
        &self.entries[index]
    }

    /// JSON object keyed by the base divisor labels.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for divisor in BaseDivisor::ALL {
            map.insert(divisor.label().to_string(), json_int(self.entry(divisor)));
        }
        serde_json::Value::Object(map)
    }
}

/// Renders a big integer as an exact JSON number of arbitrary size.
pub(crate) fn json_int(n: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(
        n.to_string()
            .parse()
            .expect("an integer literal is a valid JSON number"),
    )
}

fn vector(
    curve: impl Into<String>,
    g: i64,
    d: i64,
    h: Option<i64>,
    assignments: &[(BoundaryDivisor, BigInt)],
) -> DivisorVector {
    let mut entries: [BigInt; DIVISOR_COUNT] = Default::default();
    for (divisor, value) in assignments {
        entries[divisor.index()] = value.clone();
    }
    DivisorVector {
        curve: curve.into(),
        g,
        d,
        h,
        entries,
    }
}

/// The pencil curve `F`: covers cut out by a general pencil inside the
/// series `|2p₁ + p₂ + ⋯ + p_{d−1}|` on a fixed general genus-`g` curve.
///
/// Nonzero intersections: `T̃_{[2]}` = Plücker count `3(2g+d−2)`,
/// `D̃_{[2]}` = de Jonquières count, `δ̃_{1+[1]}` = 1, `δ̃_{[2]}` = d−2.
/// Requires `g ≥ 2` and `d ≥ g+1` (the series must exist and be basepoint
/// free on a general curve).
pub fn curve_f(g: i64, d: i64) -> Result<DivisorVector> {
    if g < 2 || d < g + 1 {
        return Err(Error::invalid(format!(
            "curve F needs g >= 2 and d >= g+1, got g={g}, d={d}"
        )));
    }
    Ok(vector(
        "F",
        g,
        d,
        None,
        &[
            (BoundaryDivisor::T2, plucker(2, d, g)),
            (BoundaryDivisor::D2, de_jonquieres_closed(g, d)),
            (BoundaryDivisor::SmallDelta1p1, BigInt::from(1)),
            (BoundaryDivisor::SmallDelta2, BigInt::from(d - 2)),
        ],
    ))
}

fn check_g_curve_params(g: i64, d: i64) -> Result<()> {
    if g < 1 || d < 3 {
        return Err(Error::invalid(format!(
            "the G curves need g >= 1 and d >= 3 (a trigonal tail), got g={g}, d={d}"
        )));
    }
    Ok(())
}

/// The curve `G_[3]`: glue a genus-`g−1` simply branched degree-`d` cover
/// to a trigonal rational cover and move one branch point of the trigonal
/// tail, marking a ramification point of the fixed part.
///
/// Constant vector `(0, 9, 0, 0, 0, 0, 0, 3, 0, −4)`.
pub fn curve_g3(g: i64, d: i64) -> Result<DivisorVector> {
    check_g_curve_params(g, d)?;
    Ok(vector(
        "G_[3]",
        g,
        d,
        None,
        &[
            (BoundaryDivisor::T2, BigInt::from(9)),
            (BoundaryDivisor::Delta2, BigInt::from(3)),
            (BoundaryDivisor::E3, BigInt::from(-4)),
        ],
    ))
}

/// The curve `G_{1+[2]}`: the same glued family as [`curve_g3`], but the
/// marked point is the moving ramification point of the trigonal tail,
/// which places the distinguished branch point inside every degeneration.
/// Constant vector `(6, 3, 0, 0, 0, 0, 2, 1, −4, 0)`.
///
/// Attribution note: the construction distinguishes this family from
/// `G_[3]` only by which ramification point carries the marking; the two
/// intersection lists here are assigned accordingly.  Only `G_[3]` (and
/// `F`) enter the matrix module, so that verification is independent of
/// this assignment.
pub fn curve_g12(g: i64, d: i64) -> Result<DivisorVector> {
    check_g_curve_params(g, d)?;
    Ok(vector(
        "G_{1+[2]}",
        g,
        d,
        None,
        &[
            (BoundaryDivisor::T1p1, BigInt::from(6)),
            (BoundaryDivisor::T2, BigInt::from(3)),
            (BoundaryDivisor::Delta1p1, BigInt::from(2)),
            (BoundaryDivisor::Delta2, BigInt::from(1)),
            (BoundaryDivisor::E1p2, BigInt::from(-4)),
        ],
    ))
}

fn check_ab_params(g: i64, d: i64, h: i64) -> Result<()> {
    if h < 0 || h > g - 1 || d < 4 {
        return Err(Error::invalid(format!(
            "the A/B curves need 0 <= h <= g-1 and d >= 4, got g={g}, d={d}, h={h}"
        )));
    }
    Ok(())
}

/// The curve `A_h`: a moving double cover of a pencil base glued to a fixed
/// degree-`d−2` cover by a genus-`h` curve, marked at a fibre over a
/// ramification point of the fixed part.
///
/// Nonzero intersections: `D̃_{1+[1]}` = 2, `D̃_{[2]}` = 4(d+h)−14,
/// `Δ̃_{[2]}` = 8(g−h)−8, `Ẽ_{[3]}` = 2.
pub fn curve_a(g: i64, d: i64, h: i64) -> Result<DivisorVector> {
    check_ab_params(g, d, h)?;
    Ok(vector(
        format!("A_{h}"),
        g,
        d,
        Some(h),
        &[
            (BoundaryDivisor::D1p1, BigInt::from(2)),
            (BoundaryDivisor::D2, BigInt::from(4 * (d + h) - 14)),
            (BoundaryDivisor::Delta2, BigInt::from(8 * (g - h) - 8)),
            (BoundaryDivisor::E3, BigInt::from(2)),
        ],
    ))
}

/// The curve `B_h`: the same glued family as [`curve_a`], marked at the
/// moving double point instead.
///
/// Nonzero intersections: `D̃_{[2]}` = 4(d+h)−12, `Δ̃_{1+[1]}` = −2,
/// `Δ̃_{[2]}` = 8(g−h)−6, `Ẽ_{1+[2]}` = 1, `Ẽ_{[3]}` = 1.
pub fn curve_b(g: i64, d: i64, h: i64) -> Result<DivisorVector> {
    check_ab_params(g, d, h)?;
    Ok(vector(
        format!("B_{h}"),
        g,
        d,
        Some(h),
        &[
            (BoundaryDivisor::D2, BigInt::from(4 * (d + h) - 12)),
            (BoundaryDivisor::Delta1p1, BigInt::from(-2)),
            (BoundaryDivisor::Delta2, BigInt::from(8 * (g - h) - 6)),
            (BoundaryDivisor::E1p2, BigInt::from(1)),
            (BoundaryDivisor::E3, BigInt::from(1)),
        ],
    ))
}

/// Pushforward under the branch morphism: each upstairs divisor maps onto
/// the genus-0 boundary divisor recording the same collision of branch
/// points, so the pushforward intersection numbers are the group sums
/// `δ_{1+[1]} ← {T̃, D̃, δ̃, Δ̃}_{1+[1]}`, `δ_{[2]} ← {T̃, D̃, δ̃, Δ̃}_{[2]}`,
/// `δ_{1+[2]} ← Ẽ_{1+[2]}`, `δ_{[3]} ← Ẽ_{[3]}`.
pub fn pushforward_to_base(v: &DivisorVector) -> PushforwardVector {
    let entries = BaseDivisor::ALL.map(|base| {
        base.sources()
            .iter()
            .fold(BigInt::zero(), |acc, &source| acc + v.entry(source))
    });
    PushforwardVector { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Partition;
    use crate::formulas::de_jonquieres_expand;
    use crate::monodromy::{enumerate_classes, EnumerationOptions, MonodromyProblem};

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn entries_i64(v: &DivisorVector) -> Vec<BigInt> {
        v.entries().to_vec()
    }

    #[test]
    fn curve_f_entries_come_from_the_formula_modules() {
        for g in 2..=8i64 {
            for d in g + 1..=g + 6 {
                let f = curve_f(g, d).unwrap();
                assert_eq!(f.entry(BoundaryDivisor::T2), &plucker(2, d, g));
                assert_eq!(f.entry(BoundaryDivisor::SmallDelta1p1), &bi(1));
                assert_eq!(f.entry(BoundaryDivisor::SmallDelta2), &bi(d - 2));
                // The expansion route is the oracle for the quartic whenever
                // its hypotheses hold.
                if d >= 4 && d - 2 - g >= 0 {
                    assert_eq!(
                        f.entry(BoundaryDivisor::D2),
                        &de_jonquieres_expand(g, d, 2).unwrap()
                    );
                }
                // Divisors the pencil provably misses.
                for divisor in [
                    BoundaryDivisor::T1p1,
                    BoundaryDivisor::D1p1,
                    BoundaryDivisor::Delta1p1,
                    BoundaryDivisor::Delta2,
                    BoundaryDivisor::E1p2,
                    BoundaryDivisor::E3,
                ] {
                    assert_eq!(f.entry(divisor), &bi(0));
                }
            }
        }
    }

    #[test]
    fn curve_f_spot_values() {
        let f = curve_f(3, 5).unwrap();
        assert_eq!(f.entry(BoundaryDivisor::T2), &bi(27));
        assert_eq!(f.entry(BoundaryDivisor::D2), &bi(48));
    }

    #[test]
    fn g_curves_are_the_fixed_vectors() {
        let g3 = curve_g3(3, 4).unwrap();
        assert_eq!(
            entries_i64(&g3),
            [0, 9, 0, 0, 0, 0, 0, 3, 0, -4].map(bi).to_vec()
        );
        let g12 = curve_g12(3, 4).unwrap();
        assert_eq!(
            entries_i64(&g12),
            [6, 3, 0, 0, 0, 0, 2, 1, -4, 0].map(bi).to_vec()
        );
    }

    #[test]
    fn ab_curves_match_the_printed_formulas() {
        let a0 = curve_a(5, 7, 0).unwrap();
        assert_eq!(
            entries_i64(&a0),
            [0, 0, 2, 14, 0, 0, 0, 32, 0, 2].map(bi).to_vec()
        );
        let b0 = curve_b(3, 4, 0).unwrap();
        assert_eq!(
            entries_i64(&b0),
            [0, 0, 0, 4, 0, 0, -2, 18, 1, 1].map(bi).to_vec()
        );
    }

    #[test]
    fn ab_curves_shift_in_h_as_printed() {
        // Raising h by 1 adds 4 to D̃_{[2]} and subtracts 8 from Δ̃_{[2]},
        // leaving everything else alone.
        for g in 3..=7i64 {
            for d in 4..=9i64 {
                for h in 0..g - 1 {
                    for (lo, hi) in [
                        (curve_a(g, d, h).unwrap(), curve_a(g, d, h + 1).unwrap()),
                        (curve_b(g, d, h).unwrap(), curve_b(g, d, h + 1).unwrap()),
                    ] {
                        for divisor in BoundaryDivisor::ALL {
                            let expected_shift = match divisor {
                                BoundaryDivisor::D2 => bi(4),
                                BoundaryDivisor::Delta2 => bi(-8),
                                _ => bi(0),
                            };
                            assert_eq!(
                                hi.entry(divisor) - lo.entry(divisor),
                                expected_shift,
                                "unexpected h-shift at {divisor:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parameter_ranges_are_enforced() {
        assert!(curve_f(1, 5).is_err());
        assert!(curve_f(3, 3).is_err());
        assert!(curve_g3(0, 4).is_err());
        assert!(curve_g3(3, 2).is_err());
        assert!(curve_a(3, 4, -1).is_err());
        assert!(curve_a(3, 4, 3).is_err());
        assert!(curve_b(3, 3, 0).is_err());
    }

    #[test]
    fn pushforward_reproduces_the_printed_checks() {
        let push_g3 = pushforward_to_base(&curve_g3(3, 4).unwrap());
        assert_eq!(push_g3.entry(BaseDivisor::Delta2), &bi(12));
        assert_eq!(push_g3.entry(BaseDivisor::Delta3), &bi(-4));
        assert_eq!(push_g3.entry(BaseDivisor::Delta1p1), &bi(0));
        assert_eq!(push_g3.entry(BaseDivisor::Delta1p2), &bi(0));

        let push_g12 = pushforward_to_base(&curve_g12(3, 4).unwrap());
        assert_eq!(push_g12.entry(BaseDivisor::Delta2), &bi(4));
        assert_eq!(push_g12.entry(BaseDivisor::Delta1p1), &bi(8));
        assert_eq!(push_g12.entry(BaseDivisor::Delta3), &bi(0));
        assert_eq!(push_g12.entry(BaseDivisor::Delta1p2), &bi(-4));
    }

    #[test]
    fn pushforward_of_zero_is_zero() {
        let zero = vector("zero", 0, 0, None, &[]);
        let push = pushforward_to_base(&zero);
        for base in BaseDivisor::ALL {
            assert_eq!(push.entry(base), &bi(0));
        }
    }

    /// Re-derives the G_[3] collision counts from the monodromy classes.
    ///
    /// The moving branch point of the trigonal tail can collide with each
    /// of the three branch points of the fixed configuration.  Per
    /// monodromy class `(t₁, t₂, t₃, t₄)` of the degree-3 four-transposition
    /// problem (t₄ the moving one), a collision with branch point `i`
    /// degenerates into `T̃_{[2]}` exactly when `tᵢ·t₄` is a 3-cycle, and
    /// into `Δ̃_{[2]}` exactly when `tᵢ = t₄` (the product is the identity).
    /// Summing over the four classes must reproduce the printed
    /// intersection numbers 9 and 3 — both counts are conjugation
    /// invariant, so any class representatives work.
    #[test]
    fn g3_collision_counts_derive_from_monodromy() {
        let problem =
            MonodromyProblem::new(3, vec![Partition::new(vec![2, 1]).unwrap(); 4]).unwrap();
        let enumeration = enumerate_classes(&problem, &EnumerationOptions::default()).unwrap();
        assert_eq!(enumeration.count(), 4);

        let mut three_cycle_collisions = 0i64;
        let mut identity_collisions = 0i64;
        for class in enumeration.classes() {
            let rep = class.representative();
            let moving = &rep[3];
            for fixed in &rep[0..3] {
                let collision = fixed.compose(moving).unwrap();
                if collision.cycle_type().partition().parts() == [3] {
                    three_cycle_collisions += 1;
                } else if collision.is_identity() {
                    identity_collisions += 1;
                }
            }
        }
        let g3 = curve_g3(3, 4).unwrap();
        assert_eq!(g3.entry(BoundaryDivisor::T2), &bi(three_cycle_collisions));
        assert_eq!(g3.entry(BoundaryDivisor::Delta2), &bi(identity_collisions));
    }

    #[test]
    fn json_emission_uses_the_basis_labels() {
        let value = curve_a(5, 7, 0).unwrap().to_json();
        assert_eq!(value["curve"], serde_json::json!("A_0"));
        assert_eq!(value["h"], serde_json::json!(0));
        assert_eq!(value["entries"]["D_{[2]}"], serde_json::json!(14));
        assert_eq!(value["entries"]["Delta_{[2]}"], serde_json::json!(32));
        let push = pushforward_to_base(&curve_g3(3, 4).unwrap()).to_json();
        assert_eq!(push["delta_{[2]}"], serde_json::json!(12));
        assert_eq!(push["delta_{[3]}"], serde_json::json!(-4));
    }
}

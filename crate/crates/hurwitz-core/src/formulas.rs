//! Classical enumerative formulas: Plücker, de Jonquières (closed form and
//! coefficient extraction, cross-checked), Riemann–Hurwitz, adjunction on
//! P¹×P¹, branch counts of boundary components, fibre dimension, and the
//! degree of the branch-point-forgetting map.
//!
//! Functions whose defining expression is a polynomial are total; functions
//! with a genuine mathematical hypothesis (general linear series existence,
//! nonempty ramification profile) reject out-of-hypothesis input with a
//! domain error rather than extrapolating.

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::exact::{lcm_of, BigInt, BigRational, Partition};
use crate::poly::{parse_expr, DEFAULT_TERM_GUARD};

/// Plücker formula: the number of ramification points of a general
/// dimension-`r`, degree-`d` linear series on a genus-`g` curve,
/// `(r+1)d + (r+1)r(g−1)`.
///
/// Intended for `r ≥ 1`, `d ≥ 1`; the defining polynomial is evaluated
/// as-is.
pub fn plucker(r: i64, d: i64, g: i64) -> BigInt {
    let (r, d, g) = (BigInt::from(r), BigInt::from(d), BigInt::from(g));
    (&r + 1) * &d + (&r + 1) * &r * (g - 1)
}

/// de Jonquières count in closed form: `2(g² + 2gd + d² − 5d − 7g + 6)`,
/// the number of divisors of shape `(2, 2, 1^{d−4})` in a general
/// two-dimensional degree-`d` series on a genus-`g` curve.
pub fn de_jonquieres_closed(g: i64, d: i64) -> BigInt {
    let (g, d) = (BigInt::from(g), BigInt::from(d));
    BigInt::from(2) * (&g * &g + 2 * &g * &d + &d * &d - 5 * &d - 7 * &g + 6)
}

/// de Jonquières count by generating-function expansion: the coefficient of
/// `x²y^{d−4}` in `(1+4x+y)^g (1+2x+y)^{d−r−g}`.
///
/// Hypotheses: `g ≥ 0`, `d ≥ 4`, and `d − r − g ≥ 0` (the series must exist
/// on a general curve); violations are domain errors, never extrapolated.
pub fn de_jonquieres_expand(g: i64, d: i64, r: i64) -> Result<BigInt> {
    if g < 0 {
        return Err(Error::domain(format!("genus must be nonnegative, got {g}")));
    }
    if d < 4 {
        return Err(Error::domain(format!(
            "the (2,2,1^(d-4)) secant type needs d >= 4, got d={d}"
        )));
    }
    if d - r - g < 0 {
        return Err(Error::domain(format!(
            "general-series hypothesis d-r-g >= 0 fails: d={d}, r={r}, g={g}"
        )));
    }
    let first = parse_expr("1+4x+y").expect("fixed factor parses");
    let second = parse_expr("1+2x+y").expect("fixed factor parses");
    let product = first.pow(g as u64, DEFAULT_TERM_GUARD)?.mul(
        &second.pow((d - r - g) as u64, DEFAULT_TERM_GUARD)?,
        DEFAULT_TERM_GUARD,
    )?;
    let y_exp: u32 = (d - 4)
        .try_into()
        .map_err(|_| Error::invalid(format!("degree {d} too large for expansion")))?;
    Ok(product.coefficient(&[2, y_exp]))
}

/// Riemann–Hurwitz genus of a connected degree-`d` cover of the line with
/// the given ramification profiles: `g` with `2g − 2 = −2d + Σ(mᵢ − 1)`,
/// the sum over all parts of all profiles.
///
/// Returns `None` ("impossible") when the solution is odd or negative — no
/// cover with these profiles exists.  Panics only if the genus exceeds the
/// `i64` range, far outside any realizable input.
pub fn riemann_hurwitz_genus(d: u64, profiles: &[Partition]) -> Option<i64> {
    let total_ram: i128 = profiles
        .iter()
        .flat_map(|p| p.parts())
        .map(|&m| m as i128 - 1)
        .sum();
    let two_g_minus_2 = -2 * d as i128 + total_ram;
    if two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2 {
        return None;
    }
    Some(i64::try_from((two_g_minus_2 + 2) / 2).expect("genus exceeds the i64 range"))
}

/// Count of ramification points of a degree-`d` map from a genus-`g_source`
/// curve to a genus-`g_target` curve, all ramification simple:
/// `2·g_source − 2 − d(2·g_target − 2)`.
pub fn ramification_count(g_source: i64, g_target: i64, d: i64) -> i64 {
    let value = 2 * g_source as i128 - 2 - d as i128 * (2 * g_target as i128 - 2);
    i64::try_from(value).expect("ramification count exceeds the i64 range")
}

/// Genus of a smooth curve of bidegree `(a, b)` on P¹×P¹ by adjunction:
/// `(a−1)(b−1)`.  Intended for `a, b ≥ 1`.
pub fn adjunction_genus_quadric(a: i64, b: i64) -> i64 {
    i64::try_from((a as i128 - 1) * (b as i128 - 1)).expect("genus exceeds the i64 range")
}

/// Number of branches of the boundary component with nodal ramification
/// profile `m̲`: `∏mᵢ / lcm(m̲)`, returned as an exact rational (always
/// integral in fact, and asserted so).  Errors on the empty profile.
pub fn branch_count(profile: &Partition) -> Result<BigRational> {
    let l = lcm_of(profile)?;
    let product = profile
        .parts()
        .iter()
        .fold(BigInt::one(), |acc, &m| acc * BigInt::from(m));
    let count = BigRational::new(product, l);
    assert!(
        count.denom().is_one() && count.numer().is_positive(),
        "branch count must be a positive integer"
    );
    Ok(count)
}

/// Ramification order of the boundary component with nodal profile `m̲`:
/// `lcm(m̲)`.  Errors on the empty profile.
pub fn ram_order(profile: &Partition) -> Result<BigInt> {
    lcm_of(profile)
}

/// Dimension of the fibre of the distinguished-branch-point stratum over a
/// pointed curve: `d − g − 1 + h0_twist` where `h0_twist` is
/// `dim H⁰(ω_C(−2p₁−p₂−⋯−p_{d−1}))`.
pub fn fibre_dimension(g: i64, d: i64, h0_twist: u64) -> i64 {
    let value = d as i128 - g as i128 - 1 + h0_twist as i128;
    i64::try_from(value).expect("fibre dimension exceeds the i64 range")
}

/// Degree of the map that forgets the unmarked simple branch points:
/// multiplication by `2g + 2d − 2` (the number of those branch points).
pub fn forgetful_multiplier(g: i64, d: i64) -> i64 {
    let value = 2 * g as i128 + 2 * d as i128 - 2;
    i64::try_from(value).expect("multiplier exceeds the i64 range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn part(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn plucker_spot_values() {
        assert_eq!(plucker(1, 2, 0), bi(2));
        assert_eq!(plucker(2, 5, 3), bi(27));
    }

    #[test]
    fn plucker_specialisations() {
        for g in 0..=30 {
            for d in 0..=30 {
                // r = 2 counts the ramification of the plane series: 3(2g+d−2).
                assert_eq!(plucker(2, d, g), bi(3 * (2 * g + d - 2)));
                // r = 1 recovers the number of simple branch points b = 2g+2d−2.
                assert_eq!(plucker(1, d, g), bi(2 * g + 2 * d - 2));
                assert_eq!(plucker(1, d, g), bi(forgetful_multiplier(g, d)));
            }
        }
    }

    #[test]
    fn de_jonquieres_closed_spot_values() {
        assert_eq!(de_jonquieres_closed(3, 5), bi(48));
        assert_eq!(de_jonquieres_closed(0, 4), bi(4));
    }

    #[test]
    fn de_jonquieres_expand_spot_values() {
        assert_eq!(de_jonquieres_expand(3, 5, 2).unwrap(), bi(48));
        assert_eq!(de_jonquieres_expand(0, 4, 2).unwrap(), bi(4));
    }

    #[test]
    fn de_jonquieres_expand_rejects_out_of_hypothesis_input() {
        assert!(matches!(
            de_jonquieres_expand(3, 4, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            de_jonquieres_expand(0, 3, 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            de_jonquieres_expand(-1, 8, 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn de_jonquieres_routes_agree_on_the_full_grid() {
        for g in 0..=12i64 {
            for d in (g + 2).max(4)..=(g + 10) {
                assert_eq!(
                    de_jonquieres_expand(g, d, 2).unwrap(),
                    de_jonquieres_closed(g, d),
                    "disagreement at g={g}, d={d}"
                );
            }
        }
    }

    #[test]
    fn riemann_hurwitz_hand_examples() {
        // Hyperelliptic: 2g+2 transpositions over the line.
        for g in 0..6u64 {
            let profiles = vec![part(&[2]); (2 * g + 2) as usize];
            assert_eq!(riemann_hurwitz_genus(2, &profiles), Some(g as i64));
        }
        assert_eq!(riemann_hurwitz_genus(3, &vec![part(&[2, 1]); 4]), Some(0));
        assert_eq!(riemann_hurwitz_genus(3, &vec![part(&[2, 1]); 2]), None);
        // Odd total ramification can never close up.
        assert_eq!(riemann_hurwitz_genus(3, &vec![part(&[2, 1]); 3]), None);
        // Simple cover with b = 2g+2d−2 branch points has genus g.
        for g in 0..5i64 {
            for d in 2..6i64 {
                let mut profile = vec![1u64; d as usize];
                profile[0] = 2;
                let b = (2 * g + 2 * d - 2) as usize;
                let profiles = vec![part(&profile); b];
                assert_eq!(riemann_hurwitz_genus(d as u64, &profiles), Some(g));
            }
        }
    }

    #[test]
    fn ramification_count_examples() {
        // Double cover of the line by a genus 2k−1 curve: 8k−4 points.
        for k in 1..=20i64 {
            assert_eq!(ramification_count(2 * k - 1, 0, 2 * k), 8 * k - 4);
        }
        assert_eq!(ramification_count(3, 0, 4), 12); // b = 2g+2d−2 at g=3, d=4
        assert_eq!(ramification_count(0, 0, 1), 0);
    }

    #[test]
    fn adjunction_examples() {
        assert_eq!(adjunction_genus_quadric(1, 1), 0);
        assert_eq!(adjunction_genus_quadric(3, 2), 2);
        for k in 1..=20i64 {
            assert_eq!(adjunction_genus_quadric(2 * k, 2), 2 * k - 1);
        }
    }

    #[test]
    fn branch_count_and_ram_order_examples() {
        let p = part(&[3, 1, 1, 1]);
        assert_eq!(branch_count(&p).unwrap(), BigRational::from_integer(bi(1)));
        assert_eq!(ram_order(&p).unwrap(), bi(3));

        let p = part(&[2, 2, 1, 1]);
        assert_eq!(branch_count(&p).unwrap(), BigRational::from_integer(bi(2)));
        assert_eq!(ram_order(&p).unwrap(), bi(2));

        let p = part(&[1, 1, 1]);
        assert_eq!(branch_count(&p).unwrap(), BigRational::from_integer(bi(1)));
        assert_eq!(ram_order(&p).unwrap(), bi(1));

        let empty = Partition::new(Vec::<u64>::new()).unwrap();
        assert!(branch_count(&empty).is_err());
        assert!(ram_order(&empty).is_err());
    }

    #[test]
    fn fibre_dimension_examples() {
        for g in 2..10i64 {
            assert_eq!(fibre_dimension(g, g + 1, 0), 0);
            assert_eq!(fibre_dimension(g, g + 2, 0), 1);
            // For d > g+1 and general points, h⁰(2p₁+p₂+⋯+p_{d−1}) = 1−g+d,
            // which exceeds the fibre dimension by exactly the 2 projective
            // normalisations.
            for d in g + 2..g + 8 {
                assert_eq!(1 - g + d, fibre_dimension(g, d, 0) + 2);
            }
        }
    }

    #[test]
    fn forgetful_multiplier_examples() {
        assert_eq!(forgetful_multiplier(3, 4), 12);
        assert_eq!(forgetful_multiplier(0, 2), 2);
    }

    proptest! {
        #[test]
        fn branch_count_is_always_integral(
            parts in proptest::collection::vec(1u64..=12, 1..=8)
        ) {
            let p = Partition::new(parts).unwrap();
            let count = branch_count(&p).unwrap();
            prop_assert!(count.denom().is_one());
            prop_assert!(count.numer() > &BigInt::from(0));
        }
    }
}

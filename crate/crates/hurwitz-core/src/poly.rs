//! Sparse multivariate polynomials over the integers, with exact
//! coefficients of arbitrary size.
//!
//! A polynomial carries a fixed, ordered variable list; ring operations
//! require both operands to share that list exactly.  Two variables suffice
//! for every formula in this crate, but the type is n-variate since that
//! costs nothing.  Expansion is never truncated — a term-count guard aborts
//! runaway products instead.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::BigInt;

/// Default bound on the number of terms a product may reach before the
/// computation is aborted with a resource error.
pub const DEFAULT_TERM_GUARD: usize = 10_000_000;

/// A sparse polynomial: map from exponent vectors (one entry per variable,
/// in the fixed variable order) to nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    /// The zero polynomial in the given variables.
    pub fn zero(vars: Vec<String>) -> Self {
        SparsePoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// A constant polynomial in the given variables.
    pub fn constant(vars: Vec<String>, value: BigInt) -> Self {
        let mut p = SparsePoly::zero(vars);
        if !value.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], value);
        }
        p
    }

    /// The monomial `coeff · Π varsᵢ^expsᵢ`.  Errors when the exponent
    /// vector length does not match the variable count.
    pub fn monomial(vars: Vec<String>, exps: Vec<u32>, coeff: BigInt) -> Result<Self> {
        if exps.len() != vars.len() {
            return Err(Error::invalid(format!(
                "exponent vector length {} does not match {} variables",
                exps.len(),
                vars.len()
            )));
        }
        let mut p = SparsePoly::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        Ok(p)
    }

    /// The variable `vars[index]` as a polynomial.
    pub fn var(vars: Vec<String>, index: usize) -> Result<Self> {
        let mut exps = vec![0; vars.len()];
        if index >= vars.len() {
            return Err(Error::invalid(format!(
                "variable index {index} out of range"
            )));
        }
        exps[index] = 1;
        SparsePoly::monomial(vars, exps, BigInt::one())
    }

    /// The ordered variable list.
    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// The term map (exponent vector → nonzero coefficient).
    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    /// Number of (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::invalid(format!(
                "variable mismatch: [{}] vs [{}]",
                self.vars.join(","),
                other.vars.join(",")
            )));
        }
        Ok(())
    }

    /// Exact sum.  Errors on variable mismatch.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_vars(other)?;
        let mut terms = self.terms.clone();
        for (exps, coeff) in &other.terms {
            let entry = terms.entry(exps.clone()).or_insert_with(BigInt::zero);
            *entry += coeff;
            if entry.is_zero() {
                terms.remove(exps);
            }
        }
        Ok(SparsePoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Exact difference.  Errors on variable mismatch.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Exact product, aborting with a resource error if the result would
    /// exceed `term_guard` terms.  Errors on variable mismatch.
    pub fn mul(&self, other: &Self, term_guard: usize) -> Result<Self> {
        self.check_same_vars(other)?;
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea
                    .iter()
                    .zip(eb)
                    .map(|(&x, &y)| {
                        x.checked_add(y)
                            .expect("exponent overflow in polynomial product")
                    })
                    .collect();
                let entry = terms.entry(exps.clone()).or_insert_with(BigInt::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&exps);
                } else if terms.len() > term_guard {
                    return Err(Error::guard(format!(
                        "polynomial product exceeded {term_guard} terms"
                    )));
                }
            }
        }
        Ok(SparsePoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Exact power by repeated squaring; `p^0 = 1`.  The guard applies to
    /// every intermediate product.
    pub fn pow(&self, n: u64, term_guard: usize) -> Result<Self> {
        let mut result = SparsePoly::constant(self.vars.clone(), BigInt::one());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base, term_guard)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, term_guard)?;
            }
        }
        Ok(result)
    }

    /// Exact coefficient of the monomial with the given exponent vector;
    /// zero when absent.  Panics if the exponent vector length does not
    /// match the variable count (caller contract).
    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        assert_eq!(
            exps.len(),
            self.vars.len(),
            "exponent vector length must match variable count"
        );
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Evaluation with every variable set to 1: the sum of all coefficients.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

/// Renders terms graded by total degree, then within a degree with earlier
/// variables first — e.g. `1 + 4x + 2y + 4x^2 + 4xy + y^2`.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let juxtapose = self.vars.iter().all(|v| v.chars().count() == 1);
        let mut ordered: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by(|(ea, _), (eb, _)| {
            let (da, db) = (
                ea.iter().map(|&e| e as u64).sum::<u64>(),
                eb.iter().map(|&e| e as u64).sum::<u64>(),
            );
            da.cmp(&db).then_with(|| eb.cmp(ea))
        });
        for (i, (exps, coeff)) in ordered.into_iter().enumerate() {
            let negative = coeff < &BigInt::zero();
            let magnitude = if negative { -coeff } else { coeff.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_constant_term = exps.iter().all(|&e| e == 0);
            if !magnitude.is_one() || is_constant_term {
                write!(f, "{magnitude}")?;
                if !is_constant_term && !juxtapose {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (var, &e) in self.vars.iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                if !first_var && !juxtapose {
                    write!(f, "*")?;
                }
                write!(f, "{var}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                first_var = false;
            }
        }
        Ok(())
    }
}

/// Parses an integer polynomial expression such as
/// `"(1+4x+y)^3*(1+2x+y)^2"`.
///
/// Grammar: sums and differences of products of factors; a factor is a
/// parenthesised expression (optionally raised to a nonnegative integer
/// power) or a monomial like `4x^2y`.  Variables are single letters,
/// collected in order of first appearance in the input; multiplication may
/// be written `*` or by juxtaposition.  Errors are positioned.
pub fn parse_expr(text: &str) -> Result<SparsePoly> {
    parse_expr_with_guard(text, DEFAULT_TERM_GUARD)
}

/// [`parse_expr`] with an explicit term budget applied to every product
/// and power built during parsing.
pub fn parse_expr_with_guard(text: &str, term_guard: usize) -> Result<SparsePoly> {
    // First pass: variable order by first appearance.
    let mut vars: Vec<String> = Vec::new();
    for c in text.chars() {
        if c.is_ascii_alphabetic() && !vars.iter().any(|v| v == &c.to_string()) {
            vars.push(c.to_string());
        }
    }
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        vars,
        term_guard,
    };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.chars.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(poly)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    vars: Vec<String>,
    term_guard: usize,
}

impl Parser {
    fn error(&self, msg: &str) -> Error {
        Error::invalid(format!("{msg} at position {}", self.pos + 1))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut negate_first = false;
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                negate_first = true;
            }
            Some('+') => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.neg();
        }
        while let Some(op) = self.peek() {
            if op != '+' && op != '-' {
                break;
            }
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' {
                acc.add(&rhs)?
            } else {
                acc.sub(&rhs)?
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SparsePoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs, self.term_guard)?;
                }
                // Juxtaposition: a parenthesised factor directly follows.
                Some('(') => {
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs, self.term_guard)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let n = self.uint()?;
                    inner.pow(n, self.term_guard)
                } else {
                    Ok(inner)
                }
            }
            Some(c) if c.is_ascii_digit() || c.is_ascii_alphabetic() => self.monomial(),
            Some(c) => Err(self.error(&format!("unexpected character {c:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    /// A monomial: optional integer constant followed by variables with
    /// optional `^exponent`, all juxtaposed without interior whitespace
    /// (e.g. `4x^2y`).
    fn monomial(&mut self) -> Result<SparsePoly> {
        self.skip_ws();
        let mut coeff = BigInt::one();
        let mut exps = vec![0u32; self.vars.len()];
        let mut consumed_anything = false;
        if self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            coeff = BigInt::from_str(&digits).expect("digit run parses as integer");
            consumed_anything = true;
        }
        while let Some(&c) = self.chars.get(self.pos) {
            if !c.is_ascii_alphabetic() {
                break;
            }
            self.pos += 1;
            let index = self
                .vars
                .iter()
                .position(|v| v == &c.to_string())
                .expect("variable was collected in the first pass");
            let mut exponent = 1u32;
            if self.chars.get(self.pos) == Some(&'^') {
                self.pos += 1;
                exponent = self
                    .uint()?
                    .try_into()
                    .map_err(|_| self.error("exponent too large"))?;
            }
            exps[index] = exps[index]
                .checked_add(exponent)
                .ok_or_else(|| self.error("exponent too large"))?;
            consumed_anything = true;
        }
        if !consumed_anything {
            return Err(self.error("expected a monomial"));
        }
        SparsePoly::monomial(self.vars.clone(), exps, coeff)
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const G: usize = DEFAULT_TERM_GUARD;

    fn xy() -> Vec<String> {
        vec!["x".to_string(), "y".to_string()]
    }

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn difference_of_squares() {
        let one_plus_x = parse_expr("1+x").unwrap();
        let one_minus_x = parse_expr("1-x").unwrap();
        let product = one_plus_x.mul(&one_minus_x, G).unwrap();
        assert_eq!(product, parse_expr("1-x^2").unwrap());
    }

    #[test]
    fn multiplying_by_zero_annihilates() {
        let p = parse_expr("1+4x+y").unwrap();
        let zero = SparsePoly::zero(p.vars().to_vec());
        assert!(p.mul(&zero, G).unwrap().is_zero());
    }

    #[test]
    fn square_of_trinomial_matches_hand_expansion() {
        let p = parse_expr("(1+2x+y)^2").unwrap();
        assert_eq!(p, parse_expr("1+4x+2y+4x^2+4xy+y^2").unwrap());
        assert_eq!(p.term_count(), 6);
    }

    #[test]
    fn pow_zero_and_one() {
        let p = parse_expr("1+2x+y").unwrap();
        assert_eq!(
            p.pow(0, G).unwrap(),
            SparsePoly::constant(p.vars().to_vec(), bi(1))
        );
        assert_eq!(p.pow(1, G).unwrap(), p);
    }

    #[test]
    fn binomial_coefficient_from_power() {
        let p = parse_expr("(1+x)^5").unwrap();
        assert_eq!(p.coefficient(&[2]), bi(10));
    }

    #[test]
    fn coefficient_lookup() {
        let p = parse_expr("1+3xy").unwrap();
        assert_eq!(p.coefficient(&[1, 1]), bi(3));
        let q = parse_expr("1+x").unwrap();
        assert_eq!(q.coefficient(&[0]), bi(1));
        // y is absent from "1+x", so extend manually: same-variable check.
        let q2 = SparsePoly::monomial(xy(), vec![1, 0], bi(1))
            .unwrap()
            .add(&SparsePoly::constant(xy(), bi(1)))
            .unwrap();
        assert_eq!(q2.coefficient(&[0, 1]), bi(0));
    }

    #[test]
    fn trinomial_cube_coefficient() {
        let p = parse_expr("(1+4x+y)^3").unwrap();
        assert_eq!(p.coefficient(&[2, 1]), bi(48));
    }

    #[test]
    fn variable_mismatch_is_rejected() {
        let p = parse_expr("1+x").unwrap();
        let q = parse_expr("1+y").unwrap();
        assert!(matches!(p.add(&q), Err(Error::InvalidInput(_))));
        assert!(matches!(p.mul(&q, G), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn term_guard_aborts_runaway_products() {
        let p = parse_expr("(1+x+y)^6").unwrap();
        assert!(matches!(p.mul(&p, 10), Err(Error::ResourceGuard(_))));
    }

    #[test]
    fn parser_handles_signs_whitespace_and_juxtaposition() {
        assert_eq!(parse_expr("-x + 2").unwrap(), parse_expr("2-x").unwrap());
        assert_eq!(
            parse_expr("(1+x)(1-x)").unwrap(),
            parse_expr("1 - x^2").unwrap()
        );
        assert_eq!(parse_expr("2x^2y").unwrap().coefficient(&[2, 1]), bi(2));
        assert!(parse_expr("").is_err());
        assert!(parse_expr("1+").is_err());
        assert!(parse_expr("(1+x").is_err());
        assert!(parse_expr("x$").is_err());
        assert!(parse_expr("x^-2").is_err());
    }

    #[test]
    fn display_round_trips_through_parser() {
        for text in ["0", "1+4x+2y+4x^2+4xy+y^2", "-3+x", "x^3y^2-7"] {
            let p = parse_expr(text).unwrap();
            let reparsed = parse_expr(&p.to_string()).unwrap();
            assert_eq!(reparsed, p, "round trip failed for {text:?}");
        }
        assert_eq!(
            parse_expr("(1+2x+y)^2").unwrap().to_string(),
            "1 + 4x + 2y + 4x^2 + 4xy + y^2"
        );
    }

    /// Random small polynomial in x, y with tiny coefficients.
    fn arb_poly() -> impl Strategy<Value = SparsePoly> {
        proptest::collection::vec((0u32..4, 0u32..4, -5i64..=5), 0..6).prop_map(|terms| {
            let mut acc = SparsePoly::zero(vec!["x".into(), "y".into()]);
            for (ex, ey, c) in terms {
                let m = SparsePoly::monomial(
                    vec!["x".into(), "y".into()],
                    vec![ex, ey],
                    BigInt::from(c),
                )
                .unwrap();
                acc = acc.add(&m).unwrap();
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn ring_laws_hold((a, b, c) in (arb_poly(), arb_poly(), arb_poly())) {
            // Commutativity.
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b, G).unwrap(), b.mul(&a, G).unwrap());
            // Associativity.
            prop_assert_eq!(
                a.add(&b).unwrap().add(&c).unwrap(),
                a.add(&b.add(&c).unwrap()).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b, G).unwrap().mul(&c, G).unwrap(),
                a.mul(&b.mul(&c, G).unwrap(), G).unwrap()
            );
            // Distributivity.
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap(), G).unwrap(),
                a.mul(&b, G).unwrap().add(&a.mul(&c, G).unwrap()).unwrap()
            );
        }

        #[test]
        fn pow_equals_iterated_mul(p in arb_poly(), n in 0u64..=6) {
            let mut iterated = SparsePoly::constant(p.vars().to_vec(), BigInt::from(1));
            for _ in 0..n {
                iterated = iterated.mul(&p, G).unwrap();
            }
            prop_assert_eq!(p.pow(n, G).unwrap(), iterated);
        }

        #[test]
        fn all_ones_evaluation_is_multiplicative((a, b) in (arb_poly(), arb_poly())) {
            prop_assert_eq!(
                a.mul(&b, G).unwrap().eval_all_ones(),
                a.eval_all_ones() * b.eval_all_ones()
            );
        }
    }
}

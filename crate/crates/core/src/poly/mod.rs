//! Exact multivariate polynomials over ℚ with weighted grading.

mod polynomial;
mod text;
mod vars;

use num_bigint::BigInt;
use thiserror::Error;

pub use polynomial::{monomials_of_weight, Monomial, Polynomial};
pub use text::{parse_poly, PolyDisplay};
pub use vars::VarTable;

pub type Rational = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent must be a nonnegative integer, found a negative exponent")]
    NegativeExponent,
    #[error("exponent must be a nonnegative integer literal")]
    NonIntegerExponent,
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("trailing input")]
    TrailingInput,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the source text.
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable table must be nonempty")]
    EmptyVarTable,
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("invalid variable name `{0}`")]
    InvalidName(String),
    #[error("variable `{0}` has weight 0")]
    ZeroWeight(String),
    #[error("mismatched variable tables ({left} vs {right} variables)")]
    ArityMismatch { left: usize, right: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    fn vars4() -> VarTable {
        VarTable::with_weights(&["a", "b", "c", "d"], &[1, 2, 1, 3]).unwrap()
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        let term = (
            proptest::collection::vec(0u32..=3, nvars),
            -5i64..=5,
            1i64..=3,
        );
        proptest::collection::vec(term, 0..5).prop_map(move |ts| {
            Polynomial::from_terms(
                nvars,
                ts.into_iter()
                    .filter(|(e, _, _)| e.iter().sum::<u32>() <= 6)
                    .map(|(e, n, d)| (Monomial(e), rat(n, d))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ring_axioms(f in arb_poly(4), g in arb_poly(4), h in arb_poly(4)) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f + &g, &g + &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn leibniz_rule(f in arb_poly(4), g in arb_poly(4), i in 0usize..4) {
            let lhs = (&f * &g).diff(i);
            let rhs = &(&f * &g.diff(i)) + &(&g * &f.diff(i));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn print_parse_round_trip(f in arb_poly(4)) {
            let v = vars4();
            let text = v.fmt_poly(&f);
            prop_assert_eq!(parse_poly(&text, &v).unwrap(), f);
        }

        #[test]
        fn weight_components_are_graded(f in arb_poly(4), g in arb_poly(4), w in 0u64..12) {
            let v = vars4();
            prop_assert_eq!(
                (&f + &g).weight_component(&v, w),
                &f.weight_component(&v, w) + &g.weight_component(&v, w)
            );
            let mut conv = Polynomial::zero(4);
            for u in 0..=w {
                conv += &f.weight_component(&v, u) * &g.weight_component(&v, w - u);
            }
            prop_assert_eq!((&f * &g).weight_component(&v, w), conv);
            let top = f.max_weight(&v).unwrap_or(0);
            let mut sum = Polynomial::zero(4);
            for u in 0..=top {
                sum += f.weight_component(&v, u);
            }
            prop_assert_eq!(sum, f);
        }
    }
}

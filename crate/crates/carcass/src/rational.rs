//! Exact scalar arithmetic. Every coordinate in this crate is an
//! arbitrary-precision rational; nothing is ever rounded.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for small constants: `rat(1, 3)` is 1/3.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses "p/q" or a bare integer "n". Unreduced and sign-denormalized input
/// ("2/4", "1/-2") is normalized, never rejected; a zero denominator is an error.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let malformed = |detail: String| Error::MalformedMapFile { detail };
    let parse_int = |part: &str| -> Result<BigInt> {
        part.trim()
            .parse::<BigInt>()
            .map_err(|e| malformed(format!("bad integer {part:?}: {e}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(malformed(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Renders as "p/q", or bare "n" when the denominator is one.
/// Round-trips exactly through [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Bit length of the denominator, used for resource caps.
pub fn denominator_bits(r: &Rational) -> u64 {
    r.denom().bits()
}

pub(crate) fn is_unit_interval(r: &Rational) -> bool {
    !r.is_negative() && *r <= rat_int(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_reduce_to_lowest_terms() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(-3, -6), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert!(rat(1, 2).denom() > &BigInt::zero());
    }

    #[test]
    fn parse_normalizes_and_rejects_zero_denominator() {
        assert_eq!(parse_rational("1/2").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("2/4").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("1/-2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), rat_int(7));
        assert_eq!(parse_rational("-5/8").unwrap(), rat(-5, 8));
        assert_eq!(parse_rational("0").unwrap(), Rational::zero());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    #[test]
    fn format_round_trips() {
        for r in [rat(1, 2), rat(-7, 3), rat_int(0), rat_int(1), rat_int(-4)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(format_rational(&rat(1, 2)), "1/2");
        assert_eq!(format_rational(&rat_int(1)), "1");
        assert_eq!(format_rational(&rat_int(0)), "0");
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = rat(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, rat_int(1));
        // a case that fails under binary floating point
        assert_ne!(0.1 + 0.2, 0.3);
        assert_eq!(rat(1, 10) + rat(2, 10), rat(3, 10));
    }

    #[test]
    fn denominator_bits_counts_the_denominator() {
        assert_eq!(denominator_bits(&rat(1, 2)), 2);
        assert_eq!(denominator_bits(&rat_int(5)), 1);
        assert_eq!(denominator_bits(&rat(3, 1024)), 11);
    }
}

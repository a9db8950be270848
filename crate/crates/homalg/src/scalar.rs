//! The ground field: arbitrary-precision rationals.
//!
//! Every scalar in this crate is a `BigRational`, kept in lowest terms with
//! a positive denominator by construction. All arithmetic is exact; nothing
//! in the crate ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn s_zero() -> Scalar {
    Scalar::zero()
}

pub fn s_one() -> Scalar {
    Scalar::one()
}

pub fn s_int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn s_ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text form: `p` when the denominator is 1, else `p/q` with
/// q > 0 and gcd(p, q) = 1. This is the only rendering used anywhere
/// (files, reports, witnesses), so equal scalars always print identically.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse a rational in canonical form. Rejects any spelling that would not
/// round-trip byte-identically (`+1`, `02`, `2/4`, `1/-2`, `-0`, `1/1`).
pub fn parse_scalar(token: &str) -> std::result::Result<Scalar, String> {
    let (num_str, den_str) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| format!("invalid integer `{num_str}`"))?;
    let value = match den_str {
        None => Scalar::from_integer(num),
        Some(d) => {
            let den: BigInt = d.parse().map_err(|_| format!("invalid integer `{d}`"))?;
            if den.is_zero() {
                return Err(format!("zero denominator in `{token}`"));
            }
            if den.is_negative() {
                return Err(format!("negative denominator in `{token}`"));
            }
            Scalar::new(num, den)
        }
    };
    if format_scalar(&value) != token {
        return Err(format!(
            "non-canonical rational `{token}` (expected `{}`)",
            format_scalar(&value)
        ));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        for tok in ["0", "1", "-1", "7/2", "-7/2", "123456789123456789/2"] {
            let v = parse_scalar(tok).unwrap();
            assert_eq!(format_scalar(&v), tok);
        }
    }

    #[test]
    fn rejects_non_canonical() {
        for tok in ["+1", "02", "2/4", "1/-2", "-0", "1/1", "0/3", "", "a"] {
            assert!(parse_scalar(tok).is_err(), "should reject `{tok}`");
        }
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = s_ratio(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, s_one());
    }
}

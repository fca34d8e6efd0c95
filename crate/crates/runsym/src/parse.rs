//! Parsing of polynomial coefficient lists from command-line text.

use std::fmt;

use num_bigint::BigInt;

use crate::series::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    message: String,
}

impl ParseError {
    fn new(message: impl Into<String>) -> Self {
        ParseError { message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parses a comma- or space-separated list of integer coefficients, lowest
/// degree first, into a polynomial. Empty fields (as in `"1,,2"`) are
/// skipped; at least one coefficient is required.
pub fn parse_coefficient_list(input: &str) -> Result<IntPolynomial, ParseError> {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for token in input.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let c = token
            .parse::<BigInt>()
            .map_err(|_| ParseError::new(format!("invalid integer coefficient {token:?}")))?;
        coeffs.push(c);
    }
    if coeffs.is_empty() {
        return Err(ParseError::new("expected at least one coefficient"));
    }
    Ok(IntPolynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_commas_and_spaces() {
        let p = parse_coefficient_list("1,0,-1,-1,0,1,1,0,-1").unwrap();
        assert_eq!(p, IntPolynomial::from_i64s(&[1, 0, -1, -1, 0, 1, 1, 0, -1]));
        assert_eq!(parse_coefficient_list("1 0 -1 -1 0 1 1 0 -1").unwrap(), p);
        assert_eq!(parse_coefficient_list(" 1, 0 -1,-1  0,1 1 , 0, -1 ").unwrap(), p);
    }

    #[test]
    fn rejects_junk() {
        assert!(parse_coefficient_list("1,x").is_err());
        assert!(parse_coefficient_list("").is_err());
        assert!(parse_coefficient_list("  ,, ").is_err());
        assert!(parse_coefficient_list("1.5").is_err());
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(parse_coefficient_list("1,-1,0,0").unwrap(), IntPolynomial::from_i64s(&[1, -1]));
        assert_eq!(parse_coefficient_list("0 0").unwrap(), IntPolynomial::zero());
    }

    #[test]
    fn big_coefficients_survive() {
        let p = parse_coefficient_list("1,123456789012345678901234567890").unwrap();
        assert_eq!(p.coeff(1).to_string(), "123456789012345678901234567890");
    }
}

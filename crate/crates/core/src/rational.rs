//! Exact rationals and a few helpers that the rest of the crate leans on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always stored reduced with positive denominator.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d` as a rational. Panics if `d == 0`.
pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(t.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?),
    };
    Ok(parsed)
}

/// Canonical rendering: `p` for integers, `p/q` otherwise.
pub fn render(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn exact_int_root(n: &BigInt, degree: u32) -> Option<BigInt> {
    if n.is_negative() {
        if degree.is_multiple_of(2) {
            return None;
        }
        return exact_int_root(&-n, degree).map(|r| -r);
    }
    let r = n.nth_root(degree);
    if num_traits::pow(r.clone(), degree as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact real `degree`-th root, if it is rational.
pub fn rational_root(x: &Rational, degree: u32) -> Result<Rational> {
    let fail = || Error::IrrationalRoot { value: render(x), degree };
    let n = exact_int_root(x.numer(), degree).ok_or_else(fail)?;
    let d = exact_int_root(x.denom(), degree).ok_or_else(fail)?;
    Ok(Rational::new(n, d))
}

/// Exact square root of a nonnegative rational, if it is rational.
pub fn rational_sqrt(x: &Rational) -> Result<Rational> {
    if x.is_negative() {
        return Err(Error::IrrationalRoot { value: render(x), degree: 2 });
    }
    rational_root(x, 2)
}

/// Converts to `i64` when the value is an integer that fits.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.numer().clone()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rational("3/2").unwrap(), qf(3, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), qf(-2, 3));
        assert_eq!(parse_rational(" 7 ").unwrap(), q(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(render(&qf(-2, 4)), "-1/2");
        assert_eq!(render(&q(5)), "5");
    }

    #[test]
    fn roots() {
        assert_eq!(rational_root(&qf(-512, 19683), 9).unwrap(), qf(-2, 3));
        assert_eq!(rational_sqrt(&qf(9, 4)).unwrap(), qf(3, 2));
        assert!(rational_sqrt(&q(2)).is_err());
        assert!(rational_sqrt(&q(-4)).is_err());
        assert!(rational_root(&q(2), 9).is_err());
    }
}

//! Arbitrary-precision rational numbers and text conversions.
//!
//! All exact values in this crate live in `ExactRational`. The underlying
//! representation keeps `gcd(|numerator|, denominator) = 1` and
//! `denominator ≥ 1` after every arithmetic operation; zero is `0/1`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Normalized arbitrary-precision rational.
pub type ExactRational = num_rational::BigRational;

/// Shorthand for a small rational `n/d`.
pub fn rat(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer as a rational.
pub fn rat_int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Parses a rational from text.
///
/// Accepted forms: `p/q` with integer `p`, `q`; a plain integer; a decimal
/// such as `-0.9`; scientific notation such as `1e-12` or `2.5E3`. Decimal
/// forms convert exactly (no binary rounding).
pub fn parse_rational(s: &str) -> Result<ExactRational, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty string".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = parse_bigint(num)?;
        let d = parse_bigint(den)?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        return Ok(ExactRational::new(n, d));
    }

    // Split off an exponent part, if any.
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => {
            let (m, e) = s.split_at(pos);
            let e: i64 = e[1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
            (m, e)
        }
        None => (s, 0),
    };

    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) {
        return Err(Error::Parse(format!("malformed number {s:?}")));
    }
    let digits = format!(
        "{}{}",
        if int_part.is_empty() || int_part == "-" || int_part == "+" {
            format!("{int_part}0")
        } else {
            int_part.to_string()
        },
        frac_part
    );
    let n = parse_bigint(&digits)?;
    let scale = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Ok(if scale >= 0 {
        ExactRational::from_integer(n * ten.pow(scale as u32))
    } else {
        ExactRational::new(n, ten.pow((-scale) as u32))
    })
}

fn parse_bigint(s: &str) -> Result<BigInt, Error> {
    let t = s.trim();
    t.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("bad integer {t:?}")))
}

/// Renders `r` as a decimal string with `digits` significant digits,
/// rounded half away from zero. The conversion is exact long division;
/// no binary floating point is involved.
pub fn decimal_string(r: &ExactRational, digits: usize) -> String {
    let digits = digits.max(1);
    if r.is_zero() {
        return "0".into();
    }
    let neg = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();
    let ten = BigInt::from(10);

    // Decimal exponent e with |r| in [10^e, 10^(e+1)).
    let mut exp10: i64 = if num >= den {
        decimal_digits(&(&num / &den)) as i64 - 1
    } else {
        let mut k = 0i64;
        let mut scaled = num.clone();
        while scaled < den {
            scaled *= &ten;
            k += 1;
        }
        -k
    };

    // Round num/den * 10^(digits-1-e) to an integer, half away from zero.
    let shift = digits as i64 - 1 - exp10;
    let (q, rem, den_eff) = if shift >= 0 {
        let scaled_num = &num * ten.pow(shift as u32);
        let (q, rem) = scaled_num.div_rem(&den);
        (q, rem, den.clone())
    } else {
        let den_eff = &den * ten.pow((-shift) as u32);
        let (q, rem) = num.div_rem(&den_eff);
        (q, rem, den_eff)
    };
    let q = if &rem * 2 >= den_eff { q + 1u8 } else { q };

    let mantissa = q.to_string();
    // Rounding can carry into an extra digit (e.g. 999.5 -> 1000).
    exp10 += mantissa.len() as i64 - digits as i64;

    let body = if (-4..digits as i64).contains(&exp10) {
        place_point(&mantissa, exp10 + 1)
    } else {
        let (head, tail) = mantissa.split_at(1);
        let tail = tail.trim_end_matches('0');
        if tail.is_empty() {
            format!("{head}e{exp10}")
        } else {
            format!("{head}.{tail}e{exp10}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn place_point(mantissa: &str, point: i64) -> String {
    let s = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), mantissa)
    } else if (point as usize) >= mantissa.len() {
        format!("{}{}", mantissa, "0".repeat(point as usize - mantissa.len()))
    } else {
        let (i, f) = mantissa.split_at(point as usize);
        format!("{i}.{f}")
    };
    if s.contains('.') {
        let t = s.trim_end_matches('0');
        let t = t.strip_suffix('.').unwrap_or(t);
        t.to_string()
    } else {
        s
    }
}

fn decimal_digits(n: &BigInt) -> usize {
    if n.is_zero() {
        0
    } else {
        n.to_string().trim_start_matches('-').len()
    }
}

/// `10^-k` as an exact rational; convenient for tolerances.
pub fn pow10_neg(k: u32) -> ExactRational {
    ExactRational::new(BigInt::one(), BigInt::from(10u8).pow(k))
}

/// Renders `p/q` (denominator included only when ≠ 1).
pub fn ratio_string(r: &ExactRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when the sign of `n` is positive.
pub fn bigint_is_positive(n: &BigInt) -> bool {
    n.sign() == Sign::Plus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-9/12").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("42").unwrap(), rat_int(42));
        assert_eq!(parse_rational("-0.9").unwrap(), rat(-9, 10));
        assert_eq!(parse_rational("1e-12").unwrap(), rat(1, 1_000_000_000_000));
        assert_eq!(parse_rational("2.5E3").unwrap(), rat_int(2500));
        assert_eq!(parse_rational("0.001").unwrap(), rat(1, 1000));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(1, 2), 6), "0.5");
        assert_eq!(decimal_string(&rat(251, 30), 10), "8.366666667");
        assert_eq!(decimal_string(&rat(-1, 4), 4), "-0.25");
        assert_eq!(decimal_string(&rat_int(0), 8), "0");
        assert_eq!(decimal_string(&rat(1, 3), 5), "0.33333");
        assert_eq!(decimal_string(&rat(2, 3), 5), "0.66667");
        assert_eq!(decimal_string(&rat_int(19087), 4), "1.909e4");
        assert_eq!(decimal_string(&rat(1, 1_000_000_000), 3), "1e-9");
        // rounding that carries into a new digit
        assert_eq!(decimal_string(&rat(9995, 10), 3), "1e3");
        assert_eq!(decimal_string(&rat(9995, 10), 4), "999.5");
    }

    #[test]
    fn factorial_binomial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(4, 5), BigInt::from(0));
    }
}

//! Thin context over the arbitrary-precision float backend.
//!
//! Every operation carries its precision explicitly; the context only fixes
//! the working precision (requested + guard bits), the rounding mode, and
//! the constants cache.

use astro_float::{BigFloat, Consts, RoundingMode, Sign, WORD_BIT_SIZE};
use num_bigint::{BigInt, Sign as IntSign};
use num_traits::Zero;

use crate::rational::ExactRational;

/// Guard bits added on top of the requested precision so that rounding noise
/// stays out of error estimates.
pub const GUARD_BITS: usize = 32;

/// Working context: precision, rounding mode, constants cache.
pub struct FloatCtx {
    p: usize,
    rm: RoundingMode,
    cc: Consts,
}

impl FloatCtx {
    /// A context working at exactly `p` bits.
    pub fn new(p: usize) -> Self {
        let p = p.max(64);
        FloatCtx {
            p,
            rm: RoundingMode::ToEven,
            cc: Consts::new().expect("constants cache"),
        }
    }

    /// A context working at `requested + GUARD_BITS` bits.
    pub fn with_guard(requested: usize) -> Self {
        Self::new(requested.max(64) + GUARD_BITS)
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    pub fn rounding(&self) -> RoundingMode {
        self.rm
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, self.rm)
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::from_i8(0, self.p)
    }

    pub fn one(&self) -> BigFloat {
        BigFloat::from_i8(1, self.p)
    }

    pub fn from_usize(&self, v: usize) -> BigFloat {
        BigFloat::from_u64(v as u64, self.p)
    }

    pub fn from_f64(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.p)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, self.rm)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, self.rm)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, self.rm)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, self.rm)
    }

    pub fn recip(&self, a: &BigFloat) -> BigFloat {
        a.reciprocal(self.p, self.rm)
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, a: &BigFloat, n: usize) -> BigFloat {
        a.powi(n, self.p, self.rm)
    }

    pub fn pow(&mut self, a: &BigFloat, e: &BigFloat) -> BigFloat {
        a.pow(e, self.p, self.rm, &mut self.cc)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, self.rm, &mut self.cc)
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.p, self.rm, &mut self.cc)
    }

    pub fn tan(&mut self, a: &BigFloat) -> BigFloat {
        a.tan(self.p, self.rm, &mut self.cc)
    }

    pub fn cos(&mut self, a: &BigFloat) -> BigFloat {
        a.cos(self.p, self.rm, &mut self.cc)
    }

    /// Exact conversion of a big integer (the result carries all its bits).
    pub fn from_bigint(&self, n: &BigInt) -> BigFloat {
        bigfloat_from_bigint(n)
    }

    /// Correctly rounded conversion of a rational at the working precision.
    pub fn from_rational(&self, r: &ExactRational) -> BigFloat {
        let num = bigfloat_from_bigint(r.numer());
        let den = bigfloat_from_bigint(r.denom());
        num.div(&den, self.p, self.rm)
    }

    /// Rounds `x` down to `p` bits in place.
    pub fn round_to(&self, x: &mut BigFloat, p: usize) {
        // Narrowing cannot fail for finite values.
        let _ = x.set_precision(p, self.rm);
    }
}

/// Exact big integer to float conversion; the mantissa keeps every bit.
pub fn bigfloat_from_bigint(n: &BigInt) -> BigFloat {
    if n.is_zero() {
        return BigFloat::from_i8(0, WORD_BIT_SIZE);
    }
    let (sign, digits) = n.to_u64_digits();
    debug_assert_eq!(WORD_BIT_SIZE, 64, "word size assumption");
    let exponent = (digits.len() * WORD_BIT_SIZE) as astro_float::Exponent;
    let s = if sign == IntSign::Minus {
        Sign::Neg
    } else {
        Sign::Pos
    };
    BigFloat::from_words(&digits, s, exponent)
}

/// Rational to float at precision `p` (one correctly rounded division).
pub fn bigfloat_from_rational(r: &ExactRational, p: usize) -> BigFloat {
    let num = bigfloat_from_bigint(r.numer());
    let den = bigfloat_from_bigint(r.denom());
    num.div(&den, p, RoundingMode::ToEven)
}

/// `a ≤ b` for finite values; `false` when either side is NaN.
pub fn le(a: &BigFloat, b: &BigFloat) -> bool {
    matches!(a.cmp(b), Some(c) if c <= 0)
}

/// `a < b` for finite values; `false` when either side is NaN.
pub fn lt(a: &BigFloat, b: &BigFloat) -> bool {
    matches!(a.cmp(b), Some(c) if c < 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, rat};
    use num_bigint::BigInt;
    use std::str::FromStr;

    #[test]
    fn bigint_conversion_is_exact() {
        let n = BigInt::from_str("123456789012345678901234567890123456789").unwrap();
        let f = bigfloat_from_bigint(&n);
        let back = format!("{f}");
        // 1.2345...e+38 with the full mantissa present
        assert!(back.starts_with("1.2345678901234567890123456789012345678"), "{back}");
        assert!(bigfloat_from_bigint(&BigInt::from(0)).is_zero());
        let neg = bigfloat_from_bigint(&BigInt::from(-7));
        assert!(neg.is_negative());
    }

    #[test]
    fn rational_conversion_round_trips_through_doubles() {
        let ctx = FloatCtx::new(128);
        let r = rat(1, 2);
        let f = ctx.from_rational(&r);
        assert_eq!(f.cmp(&ctx.from_f64(0.5)), Some(0));
        let t = parse_rational("1e-12").unwrap();
        let f = ctx.from_rational(&t);
        assert!(lt(&f, &ctx.from_f64(1.1e-12)));
        assert!(lt(&ctx.from_f64(0.9e-12), &f));
    }

    #[test]
    fn comparisons_reject_nan() {
        let ctx = FloatCtx::new(64);
        let nan = BigFloat::nan(None);
        assert!(!le(&nan, &ctx.one()));
        assert!(!le(&ctx.one(), &nan));
        assert!(le(&ctx.one(), &ctx.one()));
    }
}

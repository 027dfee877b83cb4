//! Exact Gaussian rationals.
//!
//! Every leaf element and every scalar-diagonal value is a [`Scalar`]: a pair
//! of arbitrary-precision rationals `re + im·i`. Components are normalized on
//! construction, so derived `PartialEq` is mathematical equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::BlockError;

/// Exact field element `re + im·i` with rational components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero() }
    }

    pub fn int(n: i64) -> Self {
        Scalar::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num / den` as a real scalar. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `re + im·i` from integer parts.
    pub fn complex(re: i64, im: i64) -> Self {
        Scalar::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn zero() -> Self {
        Scalar::real(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::real(BigRational::one())
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `DivisionByZero` for zero.
    pub fn inv(&self) -> Result<Scalar, BlockError> {
        if self.is_zero() {
            return Err(BlockError::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Scalar::real(self.re.recip()));
        }
        // 1/z = conj(z) / |z|²
        let n = self.norm_sqr();
        Ok(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::real(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::real(&self.re * &rhs.re);
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form: `p`, `p/q`, `r/si` (pure imaginary, coefficient always
/// written), or `p/q+r/si` / `p/q-r/si`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        fmt_rational(&self.im, f)?;
        f.write_str("i")
    }
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => d.parse().ok()?,
        Some(_) => return None,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Imaginary coefficient text (without the trailing `i`): empty, `+` or `-`
/// mean ±1.
fn parse_imag(coeff: &str) -> Option<BigRational> {
    match coeff {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => parse_rational(coeff),
    }
}

impl FromStr for Scalar {
    type Err = BlockError;

    /// Accepts `p`, `p/q`, `[p/q](+|-)[r/s]i` and bare imaginaries such as
    /// `i`, `-2i`, `3/4i`. Surrounding whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BlockError::ScalarSyntax(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        let Some(body) = t.strip_suffix('i') else {
            return parse_rational(t).map(Scalar::real).ok_or_else(bad);
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (parse_rational(&body[..i]).ok_or_else(bad)?, parse_imag(&body[i..])),
            None => (BigRational::zero(), parse_imag(body)),
        };
        Ok(Scalar::new(re, im.ok_or_else(bad)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn field_arithmetic() {
        assert_eq!(Scalar::ratio(1, 2) + Scalar::ratio(1, 3), Scalar::ratio(5, 6));
        assert_eq!(Scalar::zero() * s("7/3-2i"), Scalar::zero());
        assert_eq!(Scalar::complex(2, 3) * Scalar::complex(2, -3), Scalar::int(13));
        assert_eq!(Scalar::ratio(1, 2) - Scalar::ratio(1, 2), Scalar::zero());
        assert_eq!(-Scalar::complex(1, -1), Scalar::complex(-1, 1));
    }

    #[test]
    fn lowest_terms() {
        let x = Scalar::ratio(6, -4);
        assert_eq!(x.re().numer(), &BigInt::from(-3));
        assert_eq!(x.re().denom(), &BigInt::from(2));
        assert_eq!(x, Scalar::ratio(-3, 2));
    }

    #[test]
    fn inverse() {
        assert_eq!(Scalar::int(2).inv().unwrap(), Scalar::ratio(1, 2));
        assert_eq!(Scalar::ratio(-3, 7).inv().unwrap(), Scalar::ratio(-7, 3));
        assert_eq!(Scalar::i().inv().unwrap(), -Scalar::i());
        assert!(matches!(Scalar::zero().inv(), Err(BlockError::DivisionByZero)));
        let z = s("3/5-7/2i");
        assert!((&z * &z.inv().unwrap()).is_one());
    }

    #[test]
    fn conjugation() {
        assert_eq!(Scalar::ratio(3, 4).conjugate(), Scalar::ratio(3, 4));
        assert_eq!(Scalar::complex(1, 2).conjugate(), Scalar::complex(1, -2));
        let z = s("-1/3+5i");
        assert_eq!(z.conjugate().conjugate(), z);
    }

    #[test]
    fn text_form() {
        for (text, canon) in [
            ("7", "7"),
            ("-3/6", "-1/2"),
            ("1/2+3/4i", "1/2+3/4i"),
            ("1-2i", "1-2i"),
            ("i", "1i"),
            ("-i", "-1i"),
            ("0+5i", "5i"),
            ("-2/3i", "-2/3i"),
            ("4+0i", "4"),
            (" 12 ", "12"),
        ] {
            assert_eq!(s(text).to_string(), canon, "{text}");
            assert_eq!(s(canon), s(text));
        }
        for bad in ["", "1/0", "abc", "1//2", "1+", "1+2", "--1", "1/2/3", "2i3"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }
}

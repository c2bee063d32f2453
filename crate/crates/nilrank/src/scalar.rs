//! Exact scalars: arbitrary-precision Gaussian rationals.
//!
//! Every symbolic coefficient in this crate lives in the field ℚ(i). The
//! representation is a pair of [`BigRational`]s, so arithmetic never rounds.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

/// An element of ℚ(i): `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        assert!(re_den != 0 && im_den != 0, "zero denominator");
        Self {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|²`, always a nonnegative rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero in ℚ(i)");
        Self {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }

    /// Parses `"p/q"`, decimal strings (`"-0.25"`), and integer strings.
    pub fn parse_rational(s: &str) -> Result<BigRational, String> {
        let s = s.trim();
        if s.is_empty() {
            return Err("empty rational".into());
        }
        if let Some((num, den)) = s.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
            let d = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            return Ok(BigRational::new(n, d));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
            let i = if int == "-" || int.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(int).map_err(|e| format!("bad decimal {s:?}: {e}"))?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("bad decimal {s:?}"));
            }
            let f = BigInt::from_str(frac).map_err(|e| format!("bad decimal {s:?}: {e}"))?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let abs = BigRational::from_integer(i.abs()) + BigRational::new(f, scale);
            return Ok(if sign < 0 { -abs } else { abs });
        }
        BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|e| format!("bad rational {s:?}: {e}"))
    }

    /// Parses a Gaussian rational: `"2"`, `"-1/2"`, `"i"`, `"-i"`, `"1+i"`,
    /// `"3/4-2i"`, `"1.5+0.25i"`.
    pub fn parse(s: &str) -> Result<Self, String> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty value".into());
        }
        // Split at the last +/- that is not the leading sign and not inside
        // an exponent (we never emit exponents, so just skip index 0 and any
        // sign directly after '/').
        let bytes = s.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let b = bytes[k];
            if (b == b'+' || b == b'-') && bytes[k - 1] != b'/' {
                split = Some(k);
                break;
            }
        }
        let imag_part = |t: &str| -> Result<BigRational, String> {
            let t = t.strip_suffix(['i', 'I']).ok_or("missing i suffix")?;
            match t {
                "" | "+" => Ok(BigRational::one()),
                "-" => Ok(-BigRational::one()),
                _ => Self::parse_rational(t),
            }
        };
        if s.ends_with(['i', 'I']) {
            match split {
                Some(k) => {
                    let re = Self::parse_rational(&s[..k])?;
                    let im = imag_part(&s[k..])?;
                    Ok(Self { re, im })
                }
                None => Ok(Self {
                    re: BigRational::zero(),
                    im: imag_part(&s)?,
                }),
            }
        } else {
            Ok(Self {
                re: Self::parse_rational(&s)?,
                im: BigRational::zero(),
            })
        }
    }
}

pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", rational_to_string(&self.re));
        }
        let im_abs = rational_to_string(&self.im.abs());
        let im_str = if im_abs == "1" {
            "i".to_string()
        } else {
            format!("{im_abs}i")
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_str}")
            } else {
                write!(f, "{im_str}")
            }
        } else if self.im.is_negative() {
            write!(f, "{}-{im_str}", rational_to_string(&self.re))
        } else {
            write!(f, "{}+{im_str}", rational_to_string(&self.re))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<'a> Add<&'a GaussianRational> for GaussianRational {
    type Output = Self;
    fn add(self, rhs: &'a Self) -> Self {
        Self {
            re: self.re + &rhs.re,
            im: self.im + &rhs.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &Self) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &Self) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        (&self).mul(&rhs)
    }
}

impl<'a, 'b> Mul<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &Self) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        (&self).mul(&rhs.inv())
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_parts(re, 1, im, 1)
    }

    #[test]
    fn modulus_of_one_plus_i() {
        // (1+i)·(1-i) = 2
        let p = g(1, 1) * g(1, -1);
        assert_eq!(p, g(2, 0));
    }

    #[test]
    fn conj_is_involution_and_norm_is_real() {
        let a = GaussianRational::from_parts(3, 7, -2, 5);
        assert_eq!(a.conj().conj(), a);
        let n = (&a).mul(&a.conj());
        assert!(n.im.is_zero());
        assert!(!n.re.is_negative());
        assert_eq!(n.re, a.norm_sq());
    }

    #[test]
    fn field_inverse() {
        let a = g(2, -3);
        let prod = (&a).mul(&a.inv());
        assert_eq!(prod, GaussianRational::one());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(GaussianRational::parse("2").unwrap(), g(2, 0));
        assert_eq!(GaussianRational::parse("-1/2").unwrap(), GaussianRational::from_ratio(-1, 2));
        assert_eq!(GaussianRational::parse("i").unwrap(), GaussianRational::i());
        assert_eq!(GaussianRational::parse("-i").unwrap(), g(0, -1));
        assert_eq!(GaussianRational::parse("1+i").unwrap(), g(1, 1));
        assert_eq!(GaussianRational::parse("3/4-2i").unwrap(), GaussianRational::from_parts(3, 4, -2, 1));
        assert_eq!(
            GaussianRational::parse("0.25").unwrap(),
            GaussianRational::from_ratio(1, 4)
        );
        assert_eq!(
            GaussianRational::parse("-0.5+1.5i").unwrap(),
            GaussianRational::from_parts(-1, 2, 3, 2)
        );
        assert!(GaussianRational::parse("1/0").is_err());
        assert!(GaussianRational::parse("").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["2", "-1/2", "i", "-i", "1+i", "3/4-2i", "-5/3+7/2i"] {
            let v = GaussianRational::parse(s).unwrap();
            assert_eq!(GaussianRational::parse(&v.to_string()).unwrap(), v);
        }
    }
}

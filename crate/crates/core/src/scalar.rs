//! Exact arithmetic in the quadratic field Q(sqrt 3).
//!
//! A [`Scalar`] is `rat + root * sqrt(3)` with both parts arbitrary-precision
//! rationals kept in lowest terms. The field is closed under the four
//! arithmetic operations, equality is decidable, and the sign of any element
//! is computed exactly, so all geometric predicates built on top of it are
//! error-free. The 120-degree rotation used by the 3-symmetric
//! constructions is the reason sqrt(3) appears at all; plain rational data
//! simply has `root = 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

pub type Rat = BigRational;

/// An element `rat + root * sqrt(3)` of Q(sqrt 3).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    rat: Rat,
    root: Rat,
}

/// Errors produced when parsing coordinates or rationals from text.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseScalarError {
    #[error("empty token")]
    Empty,
    #[error("malformed number `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

impl Scalar {
    pub fn new(rat: Rat, root: Rat) -> Self {
        Scalar { rat, root }
    }

    pub fn from_rat(rat: Rat) -> Self {
        Scalar {
            rat,
            root: Rat::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Scalar::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::from_rat(Rat::one())
    }

    /// sqrt(3) itself.
    pub fn sqrt3() -> Self {
        Scalar::new(Rat::zero(), Rat::one())
    }

    pub fn rat_part(&self) -> &Rat {
        &self.rat
    }

    pub fn root_part(&self) -> &Rat {
        &self.root
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.root.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.root.is_zero()
    }

    /// Exact sign: if both parts agree in sign the answer is immediate;
    /// otherwise the dominant term is decided by comparing `rat^2` with
    /// `3 * root^2` (they can only be equal when both parts vanish, since
    /// sqrt(3) is irrational).
    pub fn signum(&self) -> i32 {
        let sa = rat_sign(&self.rat);
        let sb = rat_sign(&self.root);
        match (sa, sb) {
            (0, 0) => 0,
            (0, _) => sb,
            (_, 0) => sa,
            _ if sa == sb => sa,
            _ => {
                let lhs = &self.rat * &self.rat;
                let rhs = Rat::from_integer(BigInt::from(3)) * &self.root * &self.root;
                sa * rat_sign(&(lhs - rhs))
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        // 1/(a + b sqrt3) = (a - b sqrt3)/(a^2 - 3 b^2)
        let three = Rat::from_integer(BigInt::from(3));
        let norm = &self.rat * &self.rat - three * &self.root * &self.root;
        debug_assert!(!norm.is_zero());
        Some(Scalar::new(&self.rat / &norm, -(&self.root) / &norm))
    }

    pub fn min(self, other: Scalar) -> Scalar {
        if self <= other {
            self
        } else {
            other
        }
    }

    /// Approximate value as f64 (display and sanity checks only; never used
    /// in predicates).
    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.rat) + rat_to_f64(&self.root) * 3f64.sqrt()
    }

    /// Exact truncation of `self * 10^digits` toward minus infinity,
    /// rendered as a decimal string. Uses integer square roots, so the
    /// printed digits are exact.
    pub fn to_decimal(&self, digits: usize) -> String {
        let pow = Rat::from_integer(BigInt::from(10).pow(digits as u32));
        let scaled = Scalar::new(&self.rat * &pow, &self.root * &pow);
        let n = scaled.floor_big();
        format_scaled_int(&n, digits)
    }

    /// floor of the exact real value, as a big integer.
    pub fn floor_big(&self) -> BigInt {
        // Put the value over a common positive denominator: (p + q sqrt3)/d.
        let d = self.rat.denom().lcm(self.root.denom());
        let p = self.rat.numer() * (&d / self.rat.denom());
        let q = self.root.numer() * (&d / self.root.denom());
        // Lower bound for q*sqrt(3).
        let s = (BigInt::from(3) * &q * &q).sqrt();
        let low = if q.is_negative() { -&s - 1 } else { s };
        let mut t = (&p + low).div_floor(&d);
        // At most two corrections are ever needed.
        loop {
            let next = Scalar::from_rat(Rat::from_integer(&t + 1));
            if (self - &next).signum() >= 0 {
                t += 1;
            } else {
                break;
            }
        }
        t
    }
}

fn rat_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn format_scaled_int(n: &BigInt, digits: usize) -> String {
    if digits == 0 {
        return n.to_string();
    }
    let neg = n.is_negative();
    let abs = n.magnitude().to_string();
    let (int_part, frac_part) = if abs.len() > digits {
        let split = abs.len() - digits;
        (abs[..split].to_string(), abs[split..].to_string())
    } else {
        ("0".to_string(), format!("{:0>width$}", abs, width = digits))
    };
    format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac_part)
}

/// Parses a rational from `p/q`, a plain integer, or a decimal literal.
/// Decimal literals become exact scaled integers, never floats.
pub fn parse_rat(token: &str) -> Result<Rat, ParseScalarError> {
    let s = token.trim();
    if s.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim())
            .map_err(|_| ParseScalarError::Malformed(token.to_string()))?;
        let d = BigInt::from_str(den.trim())
            .map_err(|_| ParseScalarError::Malformed(token.to_string()))?;
        if d.is_zero() {
            return Err(ParseScalarError::ZeroDenominator(token.to_string()));
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
        let int_val = if int == "-" || int == "+" || int.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(int).map_err(|_| ParseScalarError::Malformed(token.to_string()))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseScalarError::Malformed(token.to_string()));
        }
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let frac_val =
            BigInt::from_str(frac).map_err(|_| ParseScalarError::Malformed(token.to_string()))?;
        let num = int_val * &scale + BigInt::from(sign) * frac_val;
        return Ok(Rat::new(num, scale));
    }
    BigInt::from_str(s)
        .map(Rat::from_integer)
        .map_err(|_| ParseScalarError::Malformed(token.to_string()))
}

/// Parses a coordinate token: `<decimal>`, `<p/q>`, or `<rat>+<rat>*s3`
/// (also with `-` before the root term).
pub fn parse_scalar(token: &str) -> Result<Scalar, ParseScalarError> {
    let s = token.trim();
    if s.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    if let Some(prefix) = s.strip_suffix("*s3") {
        // Split `a+b` / `a-b` at the last sign that follows a digit.
        let bytes = prefix.as_bytes();
        let mut split_at = None;
        for i in (1..bytes.len()).rev() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1].is_ascii_digit() {
                split_at = Some(i);
                break;
            }
        }
        let Some(i) = split_at else {
            // bare root term `b*s3`
            return Ok(Scalar::new(Rat::zero(), parse_rat(prefix)?));
        };
        let rat = parse_rat(&prefix[..i])?;
        let root_str = if bytes[i] == b'+' {
            &prefix[i + 1..]
        } else {
            &prefix[i..]
        };
        let root = parse_rat(root_str)?;
        return Ok(Scalar::new(rat, root));
    }
    parse_rat(s).map(Scalar::from_rat)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root.is_zero() {
            write!(f, "{}", self.rat)
        } else if self.root.is_negative() {
            write!(f, "{}-{}*s3", self.rat, -&self.root)
        } else {
            write!(f, "{}+{}*s3", self.rat, self.root)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self - other;
        match diff.signum() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl<'a> Add for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.rat + &rhs.rat, &self.root + &rhs.root)
    }
}

impl<'a> Sub for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar::new(&self.rat - &rhs.rat, &self.root - &rhs.root)
    }
}

impl<'a> Mul for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        // (a + b r)(c + d r) = ac + 3bd + (ad + bc) r  with r = sqrt 3
        let three = Rat::from_integer(BigInt::from(3));
        Scalar::new(
            &self.rat * &rhs.rat + three * &self.root * &rhs.root,
            &self.rat * &rhs.root + &self.root * &rhs.rat,
        )
    }
}

impl<'a> Div for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        let inv = rhs.inverse().expect("division by zero Scalar");
        self * &inv
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.rat, -&self.root)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        parse_scalar(text).unwrap()
    }

    #[test]
    fn decimal_literals_are_exact_rationals() {
        assert_eq!(s("3716.08787").rat_part(), &parse_rat("371608787/100000").unwrap());
        assert_eq!(s("-51"), Scalar::from_int(-51));
        assert_eq!(s("-0.5"), s("-1/2"));
        assert_eq!(s("-.25").rat_part(), &parse_rat("-1/4").unwrap());
    }

    #[test]
    fn root_form_round_trips() {
        let v = s("-1/2+3/4*s3");
        assert_eq!(v.rat_part(), &parse_rat("-1/2").unwrap());
        assert_eq!(v.root_part(), &parse_rat("3/4").unwrap());
        let w = s("2-1/3*s3");
        assert_eq!(w.root_part(), &parse_rat("-1/3").unwrap());
        assert_eq!(parse_scalar(&v.to_string()).unwrap(), v);
        assert_eq!(parse_scalar(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 2 - sqrt(3) > 0, 3 - 2 sqrt(3) < 0, 0 = 0
        assert_eq!(s("2-1*s3").signum(), 1);
        assert_eq!(s("3-2*s3").signum(), -1);
        assert_eq!(s("-2+1*s3").signum(), -1);
        assert_eq!(s("-3+2*s3").signum(), 1);
        assert_eq!(Scalar::zero().signum(), 0);
        assert_eq!(Scalar::sqrt3().signum(), 1);
    }

    #[test]
    fn field_operations() {
        let a = s("1/2+2*s3");
        let b = s("-3+1/5*s3");
        let prod = &a * &b;
        let quot = &prod / &b;
        assert_eq!(quot, a);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Scalar::one());
        assert!(Scalar::zero().inverse().is_none());
    }

    #[test]
    fn ordering_matches_real_values() {
        // sqrt(3) = 1.732..., so 17/10 < sqrt3 < 7/4.
        assert!(s("17/10") < Scalar::sqrt3());
        assert!(Scalar::sqrt3() < s("7/4"));
        assert!(s("-2") < s("-1*s3"));
    }

    #[test]
    fn decimal_rendering_is_exact() {
        assert_eq!(s("1/8").to_decimal(3), "0.125");
        assert_eq!(s("-1/8").to_decimal(3), "-0.125");
        // sqrt(3) = 1.7320508...
        assert_eq!(Scalar::sqrt3().to_decimal(6), "1.732050");
        assert_eq!(s("-1*s3").to_decimal(4), "-1.7321");
        assert_eq!(s("12345").to_decimal(0), "12345");
    }

    #[test]
    fn floor_of_root_values() {
        assert_eq!(Scalar::sqrt3().floor_big(), BigInt::from(1));
        assert_eq!(s("-1*s3").floor_big(), BigInt::from(-2));
        assert_eq!(s("0+2*s3").floor_big(), BigInt::from(3));
        assert_eq!(s("5").floor_big(), BigInt::from(5));
        assert_eq!(s("-5/2").floor_big(), BigInt::from(-3));
    }

    #[test]
    fn malformed_tokens_error() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("1.2.3").is_err());
        assert!(parse_scalar("*s3").is_err());
    }
}

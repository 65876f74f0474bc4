//! Exact Gaussian dyadic rationals: `(re + i·im) / 2^exp` with integer
//! numerators.
//!
//! Every amplitude and projector entry this crate builds lives in this ring,
//! so equality is exact and there is no tolerance anywhere.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A complex number whose real and imaginary parts share one power-of-two
/// denominator. Always kept in lowest terms: either the value is zero with
/// `exp == 0`, or `exp == 0`, or at least one numerator is odd.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DyadicGaussian {
    re: i64,
    im: i64,
    exp: u32,
}

impl DyadicGaussian {
    pub const ZERO: Self = Self { re: 0, im: 0, exp: 0 };
    pub const ONE: Self = Self { re: 1, im: 0, exp: 0 };
    pub const I: Self = Self { re: 0, im: 1, exp: 0 };

    pub fn new(re: i64, im: i64, exp: u32) -> Self {
        let mut v = Self { re, im, exp };
        v.normalize();
        v
    }

    pub fn from_int(re: i64) -> Self {
        Self { re, im: 0, exp: 0 }
    }

    /// `numerator / 2^exp` on the real axis.
    pub fn real(numerator: i64, exp: u32) -> Self {
        Self::new(numerator, 0, exp)
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => Self::ONE,
            1 => Self::I,
            2 => -Self::ONE,
            _ => -Self::I,
        }
    }

    fn normalize(&mut self) {
        if self.re == 0 && self.im == 0 {
            self.exp = 0;
            return;
        }
        let tz = (self.re | self.im).trailing_zeros().min(self.exp);
        self.re >>= tz;
        self.im >>= tz;
        self.exp -= tz;
    }

    pub fn re_numerator(&self) -> i64 {
        self.re
    }

    pub fn im_numerator(&self) -> i64 {
        self.im
    }

    pub fn denominator_exp(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn is_real(&self) -> bool {
        self.im == 0
    }

    pub fn conj(self) -> Self {
        Self { re: self.re, im: -self.im, exp: self.exp }
    }

    /// Multiply by `i`.
    pub fn mul_i(self) -> Self {
        Self { re: -self.im, im: self.re, exp: self.exp }
    }

    /// Multiply by `i^k`.
    pub fn mul_i_pow(self, k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => self,
            1 => self.mul_i(),
            2 => -self,
            _ => -self.mul_i(),
        }
    }

    /// Divide by `2^k`.
    pub fn halve(self, k: u32) -> Self {
        Self::new(self.re, self.im, self.exp + k)
    }

    /// `|z|^2`, always real.
    pub fn norm_sq(self) -> Self {
        self.conj() * self
    }

    /// Exact reciprocal, defined only for `±2^k` (any integer `k`) on the
    /// real axis; anything else leaves the ring.
    pub fn recip(self) -> Option<Self> {
        if self.im != 0 || self.re == 0 {
            return None;
        }
        let mag = self.re.unsigned_abs();
        if !mag.is_power_of_two() {
            return None;
        }
        let sign = self.re.signum();
        let j = mag.trailing_zeros();
        if self.exp >= 62 {
            return None;
        }
        // (±2^j / 2^exp)^-1 = ±2^exp / 2^j
        Some(Self::new(sign << self.exp, 0, j))
    }

    /// Floating-point view, for cross-checks only.
    pub fn to_f64(self) -> (f64, f64) {
        let d = (self.exp as f64).exp2();
        (self.re as f64 / d, self.im as f64 / d)
    }

    fn aligned(a: Self, b: Self) -> (i64, i64, i64, i64, u32) {
        let exp = a.exp.max(b.exp);
        let sa = exp - a.exp;
        let sb = exp - b.exp;
        (a.re << sa, a.im << sa, b.re << sb, b.im << sb, exp)
    }
}

impl Add for DyadicGaussian {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (ar, ai, br, bi, exp) = Self::aligned(self, rhs);
        Self::new(ar + br, ai + bi, exp)
    }
}

impl AddAssign for DyadicGaussian {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for DyadicGaussian {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DyadicGaussian {
    type Output = Self;

    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im, exp: self.exp }
    }
}

impl Mul for DyadicGaussian {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let re = self.re * rhs.re - self.im * rhs.im;
        let im = self.re * rhs.im + self.im * rhs.re;
        Self::new(re, im, self.exp + rhs.exp)
    }
}

impl From<i64> for DyadicGaussian {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl fmt::Debug for DyadicGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Interchange syntax `a/2^k + b/2^k i` (or `a/2^k - b/2^k i` when the
/// imaginary numerator is negative).
impl fmt::Display for DyadicGaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.exp;
        if self.im < 0 {
            write!(f, "{}/2^{k} - {}/2^{k} i", self.re, -self.im)
        } else {
            write!(f, "{}/2^{k} + {}/2^{k} i", self.re, self.im)
        }
    }
}

fn parse_fraction(part: &str, full: &str) -> Result<(i64, u32), Error> {
    let err = |reason: &str| Error::ParseAmplitude { text: full.to_string(), reason: reason.to_string() };
    let part = part.trim();
    match part.split_once('/') {
        None => part.parse::<i64>().map(|n| (n, 0)).map_err(|_| err("bad integer")),
        Some((num, den)) => {
            let num = num.trim().parse::<i64>().map_err(|_| err("bad numerator"))?;
            let exp = den
                .trim()
                .strip_prefix("2^")
                .ok_or_else(|| err("denominator must be 2^k"))?
                .parse::<u32>()
                .map_err(|_| err("bad denominator exponent"))?;
            if exp > 62 {
                return Err(err("denominator exponent too large"));
            }
            Ok((num, exp))
        }
    }
}

impl FromStr for DyadicGaussian {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let text = s.trim();
        if text.is_empty() {
            return Err(Error::ParseAmplitude { text: s.to_string(), reason: "empty".into() });
        }
        // Split at a top-level " + " / " - " that separates the real and
        // imaginary parts; a leading sign belongs to the real numerator.
        let split = text
            .char_indices()
            .skip(1)
            .find(|&(i, c)| (c == '+' || c == '-') && text[..i].ends_with(' '));
        let (re_part, im_part) = match split {
            None => (text, None),
            Some((i, c)) => (&text[..i], Some((c, &text[i + 1..]))),
        };
        let (re_num, re_exp) = parse_fraction(re_part, s)?;
        let re = Self::real(re_num, re_exp);
        let Some((sign, im_text)) = im_part else {
            return Ok(re);
        };
        let im_text = im_text
            .trim()
            .strip_suffix('i')
            .ok_or_else(|| Error::ParseAmplitude { text: s.to_string(), reason: "imaginary part must end in i".into() })?;
        let (mut im_num, im_exp) = parse_fraction(im_text, s)?;
        if sign == '-' {
            im_num = -im_num;
        }
        Ok(re + Self::real(im_num, im_exp).mul_i())
    }
}

impl Serialize for DyadicGaussian {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyadicGaussian {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb() -> impl Strategy<Value = DyadicGaussian> {
        (-64i64..64, -64i64..64, 0u32..8).prop_map(|(a, b, k)| DyadicGaussian::new(a, b, k))
    }

    #[test]
    fn lowest_terms() {
        let q = DyadicGaussian::new(4, -8, 4);
        assert_eq!(q, DyadicGaussian::new(1, -2, 2));
        assert_eq!(q.denominator_exp(), 2);
        assert_eq!(DyadicGaussian::new(0, 0, 9).denominator_exp(), 0);
    }

    #[test]
    fn quarter_products() {
        let q = DyadicGaussian::real(1, 2);
        assert_eq!(q * q, DyadicGaussian::real(1, 4));
        assert_eq!(q + q + q + q, DyadicGaussian::ONE);
        assert_eq!(DyadicGaussian::I * DyadicGaussian::I, -DyadicGaussian::ONE);
    }

    #[test]
    fn reciprocal_only_for_powers_of_two() {
        assert_eq!(DyadicGaussian::real(1, 3).recip(), Some(DyadicGaussian::from_int(8)));
        assert_eq!(DyadicGaussian::from_int(-4).recip(), Some(DyadicGaussian::real(-1, 2)));
        assert_eq!(DyadicGaussian::from_int(3).recip(), None);
        assert_eq!(DyadicGaussian::I.recip(), None);
    }

    #[test]
    fn text_syntax() {
        let q = DyadicGaussian::new(-1, 3, 2);
        assert_eq!(q.to_string(), "-1/2^2 + 3/2^2 i");
        assert_eq!("-1/2^2 + 3/2^2 i".parse::<DyadicGaussian>().unwrap(), q);
        assert_eq!("1/2^1 - 1/2^1 i".parse::<DyadicGaussian>().unwrap(), DyadicGaussian::new(1, -1, 1));
        assert_eq!("-2/2^3".parse::<DyadicGaussian>().unwrap(), DyadicGaussian::real(-1, 2));
        assert!("1/3".parse::<DyadicGaussian>().is_err());
        assert!("".parse::<DyadicGaussian>().is_err());
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb(), b in arb(), c in arb()) {
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!(a - a, DyadicGaussian::ZERO);
            prop_assert_eq!((a * b).conj(), a.conj() * b.conj());
        }

        #[test]
        fn text_round_trip(a in arb()) {
            prop_assert_eq!(a.to_string().parse::<DyadicGaussian>().unwrap(), a);
        }
    }
}

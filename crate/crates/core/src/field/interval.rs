// SPDX-License-Identifier: Apache-2.0

//! Closed intervals with dyadic endpoints `m / 2^prec`, rounded outward.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealInterval {
    /// Lower endpoint numerator.
    pub lo: BigInt,
    /// Upper endpoint numerator.
    pub hi: BigInt,
    /// Both endpoints are scaled by `2^precision_bits`.
    pub precision_bits: u64,
}

fn floor_shr(x: &BigInt, s: u64) -> BigInt {
    x.div_floor(&(BigInt::one() << s))
}

fn ceil_shr(x: &BigInt, s: u64) -> BigInt {
    -floor_shr(&-x, s)
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -(-a).div_floor(b)
}

impl RealInterval {
    pub fn point(value: &BigInt, prec: u64) -> Self {
        let m = value << prec;
        RealInterval { lo: m.clone(), hi: m, precision_bits: prec }
    }

    pub fn zero(prec: u64) -> Self {
        Self::point(&BigInt::zero(), prec)
    }

    pub fn from_bounds(lo: BigInt, hi: BigInt, prec: u64) -> Self {
        debug_assert!(lo <= hi);
        RealInterval { lo, hi, precision_bits: prec }
    }

    /// Round an enclosure given at a finer scale outward to `prec` bits.
    pub fn coarsen(&self, prec: u64) -> Self {
        match self.precision_bits.cmp(&prec) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let s = self.precision_bits - prec;
                RealInterval { lo: floor_shr(&self.lo, s), hi: ceil_shr(&self.hi, s), precision_bits: prec }
            }
            Ordering::Less => {
                let s = prec - self.precision_bits;
                RealInterval { lo: &self.lo << s, hi: &self.hi << s, precision_bits: prec }
            }
        }
    }

    fn check(&self, other: &Self) {
        debug_assert_eq!(self.precision_bits, other.precision_bits);
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        RealInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi, precision_bits: self.precision_bits }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        RealInterval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo, precision_bits: self.precision_bits }
    }

    pub fn neg(&self) -> Self {
        RealInterval { lo: -&self.hi, hi: -&self.lo, precision_bits: self.precision_bits }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let s = self.precision_bits;
        let prods = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        let min = prods.iter().min().unwrap();
        let max = prods.iter().max().unwrap();
        RealInterval { lo: floor_shr(min, s), hi: ceil_shr(max, s), precision_bits: s }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k.is_negative() {
            RealInterval { lo: b, hi: a, precision_bits: self.precision_bits }
        } else {
            RealInterval { lo: a, hi: b, precision_bits: self.precision_bits }
        }
    }

    /// Division by a positive integer.
    pub fn div_int(&self, k: &BigInt) -> Self {
        debug_assert!(k.is_positive());
        RealInterval { lo: self.lo.div_floor(k), hi: ceil_div(&self.hi, k), precision_bits: self.precision_bits }
    }

    /// Quotient; `None` when the divisor contains zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        self.check(other);
        if other.contains_zero() {
            return None;
        }
        let s = self.precision_bits;
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                let num = a << s;
                let (f, c) = if b.is_negative() {
                    ((-&num).div_floor(&-b), ceil_div(&-&num, &-b))
                } else {
                    (num.div_floor(b), ceil_div(&num, b))
                };
                lo = Some(match lo {
                    Some(l) if l <= f => l,
                    _ => f,
                });
                hi = Some(match hi {
                    Some(h) if h >= c => h,
                    _ => c,
                });
            }
        }
        Some(RealInterval { lo: lo.unwrap(), hi: hi.unwrap(), precision_bits: s })
    }

    /// Square root, clamping a slightly negative lower end to zero.
    pub fn sqrt(&self) -> Self {
        let s = self.precision_bits;
        let lo = if self.lo.is_negative() { BigInt::zero() } else { (&self.lo << s).sqrt() };
        let hi = if self.hi.is_negative() {
            BigInt::zero()
        } else {
            let scaled = &self.hi << s;
            let r = scaled.sqrt();
            if &r * &r == scaled {
                r
            } else {
                r + 1
            }
        };
        RealInterval { lo, hi, precision_bits: s }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign when the interval excludes zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn width_numer(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn midpoint_f64(&self) -> f64 {
        let mid: BigInt = (&self.lo + &self.hi) >> 1usize;
        let digits = mid.bits() as i64;
        // Keep 60 significant bits before converting.
        let drop = (digits - 60).max(0) as u64;
        let top = floor_shr(&mid, drop);
        let f: f64 = top.to_string().parse().unwrap_or(f64::NAN);
        f * 2f64.powi(drop as i32 - self.precision_bits as i32)
    }

    /// Rounded decimal rendering with `digits` places after the point,
    /// or `None` if the interval is too wide to pin those digits.
    pub fn to_decimal(&self, digits: usize) -> Option<String> {
        let scale = BigInt::from(10u32).pow(digits as u32);
        // require width < 10^{-digits} / 4
        if self.width_numer() * &scale * 4 >= (BigInt::one() << self.precision_bits) {
            return None;
        }
        let mid2 = &self.lo + &self.hi; // 2·mid
        let num: BigInt = mid2 * &scale;
        let den = BigInt::one() << (self.precision_bits + 1);
        let rounded = (&num * BigInt::from(2) + &den).div_floor(&(&den * BigInt::from(2)));
        Some(format_fixed(&rounded, digits))
    }
}

pub(crate) fn format_fixed(scaled: &BigInt, digits: usize) -> String {
    let neg = scaled.is_negative();
    let s = scaled.abs().to_string();
    let s = if s.len() <= digits { format!("{}{}", "0".repeat(digits + 1 - s.len()), s) } else { s };
    let (int, frac) = s.split_at(s.len() - digits);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    out.push_str(int);
    if digits > 0 {
        out.push('.');
        out.push_str(frac);
    }
    out
}

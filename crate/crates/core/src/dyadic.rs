//! Exact scalars of the form (a + b*sqrt2 + i*(c + d*sqrt2)) / 2^k.
//!
//! Every matrix entry in the catalogue lives in this ring: entries are
//! half-integers, possibly imaginary, except for the Hadamard-like
//! generators whose entries carry a factor 1/sqrt2. The ring is closed
//! under products, sums and conjugation, so group closures, inner
//! products and density-matrix entries never leave it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Canonical invariant: `den_pow == 0` or at least one numerator is odd.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicComplex {
    re: BigInt,
    re_rt2: BigInt,
    im: BigInt,
    im_rt2: BigInt,
    den_pow: u32,
}

fn is_even(x: &BigInt) -> bool {
    (x & BigInt::one()).is_zero()
}

impl DyadicComplex {
    pub fn new(re: BigInt, re_rt2: BigInt, im: BigInt, im_rt2: BigInt, den_pow: u32) -> Self {
        let mut v = DyadicComplex { re, re_rt2, im, im_rt2, den_pow };
        v.reduce();
        v
    }

    /// Plain Gaussian dyadic (a + i*c) / 2^k.
    pub fn gaussian(re: i64, im: i64, den_pow: u32) -> Self {
        Self::new(re.into(), BigInt::zero(), im.into(), BigInt::zero(), den_pow)
    }

    /// (a + b*sqrt2) / 2^k, real.
    pub fn real_parts(re: i64, re_rt2: i64, den_pow: u32) -> Self {
        Self::new(re.into(), re_rt2.into(), BigInt::zero(), BigInt::zero(), den_pow)
    }

    pub fn from_int(n: i64) -> Self {
        Self::gaussian(n, 0, 0)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self::gaussian(0, 1, 0)
    }

    /// 1/sqrt2 = sqrt2/2.
    pub fn inv_sqrt2() -> Self {
        Self::real_parts(0, 1, 1)
    }

    fn reduce(&mut self) {
        while self.den_pow > 0
            && is_even(&self.re)
            && is_even(&self.re_rt2)
            && is_even(&self.im)
            && is_even(&self.im_rt2)
        {
            self.re >>= 1;
            self.re_rt2 >>= 1;
            self.im >>= 1;
            self.im_rt2 >>= 1;
            self.den_pow -= 1;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.re_rt2.is_zero() && self.im.is_zero() && self.im_rt2.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den_pow == 0
            && self.re.is_one()
            && self.re_rt2.is_zero()
            && self.im.is_zero()
            && self.im_rt2.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero() && self.im_rt2.is_zero()
    }

    /// True when the value lies in the plain dyadic-Gaussian subring
    /// (no sqrt2 component).
    pub fn is_gaussian(&self) -> bool {
        self.re_rt2.is_zero() && self.im_rt2.is_zero()
    }

    pub fn den_pow(&self) -> u32 {
        self.den_pow
    }

    /// Numerators at a caller-chosen denominator 2^k (k >= den_pow).
    pub fn numerators_at(&self, k: u32) -> (BigInt, BigInt, BigInt, BigInt) {
        let s = k - self.den_pow;
        (
            &self.re << s,
            &self.re_rt2 << s,
            &self.im << s,
            &self.im_rt2 << s,
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let k = self.den_pow.max(o.den_pow);
        let (a, b, c, d) = self.numerators_at(k);
        let (e, f, g, h) = o.numerators_at(k);
        Self::new(a + e, b + f, c + g, d + h, k)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        DyadicComplex {
            re: -&self.re,
            re_rt2: -&self.re_rt2,
            im: -&self.im,
            im_rt2: -&self.im_rt2,
            den_pow: self.den_pow,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b, c, d) = (&self.re, &self.re_rt2, &self.im, &self.im_rt2);
        let (e, f, g, h) = (&o.re, &o.re_rt2, &o.im, &o.im_rt2);
        let two = BigInt::from(2);
        Self::new(
            a * e + &two * (b * f) - c * g - &two * (d * h),
            a * f + b * e - c * h - d * g,
            a * g + c * e + &two * (b * h + d * f),
            a * h + d * e + b * g + c * f,
            self.den_pow + o.den_pow,
        )
    }

    pub fn conj(&self) -> Self {
        DyadicComplex {
            re: self.re.clone(),
            re_rt2: self.re_rt2.clone(),
            im: -&self.im,
            im_rt2: -&self.im_rt2,
            den_pow: self.den_pow,
        }
    }

    /// |z|^2, exact (a real element of the ring).
    pub fn norm_sq(&self) -> Self {
        self.mul(&self.conj())
    }

    /// Exact scale by 2^-s without changing the value class.
    pub fn halve(&self, s: u32) -> Self {
        Self::new(
            self.re.clone(),
            self.re_rt2.clone(),
            self.im.clone(),
            self.im_rt2.clone(),
            self.den_pow + s,
        )
    }

    pub fn to_c64(&self) -> (f64, f64) {
        let den = 2f64.powi(self.den_pow as i32);
        let s = std::f64::consts::SQRT_2;
        (
            (big_to_f64(&self.re) + big_to_f64(&self.re_rt2) * s) / den,
            (big_to_f64(&self.im) + big_to_f64(&self.im_rt2) * s) / den,
        )
    }

    /// Real value as f64; panics on values with an imaginary component.
    pub fn to_f64_real(&self) -> f64 {
        assert!(self.is_real(), "expected a real scalar");
        self.to_c64().0
    }

    /// Stable text form used for hashing and lexicographic point ordering:
    /// `re,re_rt2,im,im_rt2/2^k`.
    pub fn canonical_token(&self) -> String {
        format!(
            "{},{},{},{}/2^{}",
            self.re, self.re_rt2, self.im, self.im_rt2, self.den_pow
        )
    }

    /// Integer-only accessors for the JSON writer; `None` when the value
    /// does not fit the requested shape.
    pub fn parts_ref(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.re, &self.re_rt2, &self.im, &self.im_rt2)
    }

    /// Sign test for real values: negative, zero, positive as -1, 0, 1.
    /// sqrt2 is compared exactly via squaring, no floats involved.
    pub fn real_sign(&self) -> i32 {
        assert!(self.is_real(), "sign of a non-real scalar");
        let a = &self.re;
        let b = &self.re_rt2;
        if b.is_zero() {
            return sign_big(a);
        }
        if a.is_zero() {
            return sign_big(b);
        }
        // a + b*sqrt2 vs 0: compare a^2 vs 2 b^2 on the side where signs differ
        let sa = sign_big(a);
        let sb = sign_big(b);
        if sa == sb {
            return sa;
        }
        let a2 = a * a;
        let b2 = BigInt::from(2) * b * b;
        match a2.cmp(&b2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }
}

fn sign_big(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn big_to_f64(x: &BigInt) -> f64 {
    // entries stay tiny in practice; fall back through string only if needed
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Debug for DyadicComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_token())
    }
}

impl fmt::Display for DyadicComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_c64();
        if im == 0.0 {
            write!(f, "{re}")
        } else {
            write!(f, "{re}{im:+}i")
        }
    }
}

//! A minimal arbitrary-precision complex number built on MPFR floats.
//!
//! Only the operations the evaluation code needs are provided. Every binary
//! operation produces a result at the larger of its operands' precisions.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::Float;

/// Arbitrary-precision real value. The precision (in bits) travels with it.
pub type Real = Float;

#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Complex { re, im }
    }

    pub fn with_val<R, I>(prec: u32, re: R, im: I) -> Self
    where
        Float: rug::Assign<R> + rug::Assign<I>,
    {
        Complex {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn zero(prec: u32) -> Self {
        Complex::with_val(prec, 0, 0)
    }

    pub fn one(prec: u32) -> Self {
        Complex::with_val(prec, 1, 0)
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        Complex { re, im }
    }

    pub fn i(prec: u32) -> Self {
        Complex::with_val(prec, 0, 1)
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn set_prec(&mut self, prec: u32) {
        self.re.set_prec(prec);
        self.im.set_prec(prec);
    }

    pub fn with_prec(mut self, prec: u32) -> Self {
        self.set_prec(prec);
        self
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        let mut n = Float::with_val(p, self.re.square_ref());
        n += Float::with_val(p, self.im.square_ref());
        n
    }

    pub fn abs(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.hypot_ref(&self.im))
    }

    pub fn arg(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.im.atan2_ref(&self.re))
    }

    pub fn mul_i(&self) -> Self {
        Complex {
            re: Float::with_val(self.im.prec(), -&self.im),
            im: self.re.clone(),
        }
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec().max(k.prec());
        Complex {
            re: Float::with_val(p, &self.re * k),
            im: Float::with_val(p, &self.im * k),
        }
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        Complex {
            re: Float::with_val(self.re.prec(), &self.re * k),
            im: Float::with_val(self.im.prec(), &self.im * k),
        }
    }

    pub fn div_real(&self, k: &Float) -> Self {
        let p = self.prec().max(k.prec());
        Complex {
            re: Float::with_val(p, &self.re / k),
            im: Float::with_val(p, &self.im / k),
        }
    }

    pub fn add_real(&self, k: &Float) -> Self {
        let p = self.prec().max(k.prec());
        Complex {
            re: Float::with_val(p, &self.re + k),
            im: Float::with_val(p, &self.im),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        let p = self.prec();
        Complex {
            re: Float::with_val(p, &self.re / &n),
            im: Float::with_val(p, -Float::with_val(p, &self.im / &n)),
        }
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let modulus = Float::with_val(p, self.re.exp_ref());
        let (s, c) = Float::with_val(p, &self.im).sin_cos(Float::new(p));
        Complex {
            re: c * &modulus,
            im: s * &modulus,
        }
    }

    /// Principal logarithm, imaginary part in (−π, π].
    pub fn ln(&self) -> Self {
        let p = self.prec();
        Complex {
            re: self.abs().ln(),
            im: Float::with_val(p, self.im.atan2_ref(&self.re)),
        }
    }

    /// Principal power `self^w = exp(w·ln self)`.
    pub fn pow(&self, w: &Complex) -> Self {
        (w * &self.ln()).exp()
    }

    pub fn sin(&self) -> Self {
        // sin z = (e^{iz} − e^{−iz}) / 2i
        let iz = self.mul_i();
        let a = iz.exp();
        let b = (-&iz).exp();
        let d = &a - &b;
        let p = self.prec();
        Complex {
            re: Float::with_val(p, &d.im / 2u32),
            im: Float::with_val(p, -Float::with_val(p, &d.re / 2u32)),
        }
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision();
        let re = match digits {
            Some(d) => self.re.to_string_radix(10, Some(d)),
            None => self.re.to_string(),
        };
        let im_abs = Float::with_val(self.im.prec(), self.im.abs_ref());
        let im = match digits {
            Some(d) => im_abs.to_string_radix(10, Some(d)),
            None => im_abs.to_string(),
        };
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{re} {sign} {im}i")
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        let p = self.prec().max(rhs.prec());
        Complex {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        let p = self.prec().max(rhs.prec());
        Complex {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        let p = self.prec().max(rhs.prec());
        let mut re = Float::with_val(p, &self.re * &rhs.re);
        re -= Float::with_val(p, &self.im * &rhs.im);
        let mut im = Float::with_val(p, &self.re * &rhs.im);
        im += Float::with_val(p, &self.im * &rhs.re);
        Complex { re, im }
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        let p = self.prec().max(rhs.prec());
        let n = rhs.norm_sqr();
        let mut re = Float::with_val(p, &self.re * &rhs.re);
        re += Float::with_val(p, &self.im * &rhs.im);
        let mut im = Float::with_val(p, &self.im * &rhs.re);
        im -= Float::with_val(p, &self.re * &rhs.im);
        Complex {
            re: re / &n,
            im: im / &n,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $m(self, rhs: Complex) -> Complex {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Complex> for Complex {
            type Output = Complex;
            fn $m(self, rhs: &Complex) -> Complex {
                (&self).$m(rhs)
            }
        }
        impl $tr<Complex> for &Complex {
            type Output = Complex;
            fn $m(self, rhs: Complex) -> Complex {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Complex> for Complex {
    fn add_assign(&mut self, rhs: &Complex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign<Complex> for Complex {
    fn add_assign(&mut self, rhs: Complex) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign<&Complex> for Complex {
    fn sub_assign(&mut self, rhs: &Complex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Complex> for Complex {
    fn mul_assign(&mut self, rhs: &Complex) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 128;

    fn close(a: &Complex, b: &Complex) -> bool {
        let d = (a - b).abs();
        d < Float::with_val(P, 1e-30)
    }

    #[test]
    fn field_operations() {
        let a = Complex::with_val(P, 3, -2);
        let b = Complex::with_val(P, 0.5, 4);
        let q = &a / &b;
        assert!(close(&(&q * &b), &a));
        assert!(close(&(&a.recip() * &a), &Complex::one(P)));
        assert!(close(&(&(&a + &b) - &b), &a));
    }

    #[test]
    fn exp_ln_inverse() {
        let z = Complex::with_val(P, -1.25, 2.5);
        assert!(close(&z.ln().exp(), &z));
        // principal branch: arg in (−π, π]
        let w = Complex::with_val(P, -1, 0).ln();
        let pi = Float::with_val(P, rug::float::Constant::Pi);
        assert!((w.im - pi).abs() < 1e-35);
    }

    #[test]
    fn sine_matches_real_sine() {
        let z = Complex::with_val(P, 0.7, 0);
        let s = z.sin();
        let expect = Float::with_val(P, 0.7).sin();
        assert!((s.re - expect).abs() < 1e-35);
        assert!(s.im.abs() < 1e-35);
    }
}

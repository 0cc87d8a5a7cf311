//! Exact arithmetic in the real quadratic field Q(√d).
//!
//! The discriminator `d` is a const parameter, so elements of different
//! fields are different types and cannot be mixed by accident. Values read
//! from text can still name the wrong field; parsing reports that as
//! [`Error::FieldMismatch`].
//!
//! Textual form is bit-exact: `p/q` when the irrational part vanishes,
//! otherwise `p/q+r/s*sqrt(d)` (or `p/q-r/s*sqrt(d)`), e.g.
//! `11/216+5/216*sqrt(5)`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scalar::Scalar;

const fn is_squarefree(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// `rat + irr·√D`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quadratic<const D: u64> {
    rat: Rational,
    irr: Rational,
}

impl<const D: u64> Quadratic<D> {
    const VALID_D: () = assert!(is_squarefree(D), "field discriminator must be squarefree and > 1");

    pub fn new(rat: Rational, irr: Rational) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID_D;
        Quadratic { rat, irr }
    }

    pub fn from_rational(rat: Rational) -> Self {
        Self::new(rat, Rational::zero())
    }

    /// `(p/q) + (r/s)·√D` from machine integers.
    pub fn from_parts(p: i64, q: i64, r: i64, s: i64) -> Self {
        Self::new(
            Rational::new(p, q).expect("nonzero denominator"),
            Rational::new(r, s).expect("nonzero denominator"),
        )
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// √D itself.
    pub fn sqrt_d() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub const fn discriminator() -> u64 {
        D
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn conj(&self) -> Self {
        Quadratic {
            rat: self.rat.clone(),
            irr: -&self.irr,
        }
    }

    /// `rat² − D·irr²`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - &(&self.irr * &self.irr) * &Rational::from_integer(D as i64)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Quadratic {
            rat: &self.rat * c,
            irr: &self.irr * c,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        assert!(!n.is_zero(), "zero norm for nonzero element of a field with squarefree D");
        let inv_n = n.recip()?;
        Ok(self.conj().scale(&inv_n))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sign of the real number `rat + irr·√D`.
    pub fn signum(&self) -> i8 {
        let sr = sign_of(&self.rat);
        let si = sign_of(&self.irr);
        if sr == si || si == 0 {
            return sr;
        }
        if sr == 0 {
            return si;
        }
        // opposite signs: compare rat² with D·irr²
        let n = self.norm();
        if n.is_zero() {
            0
        } else if n.is_negative() {
            si
        } else {
            sr
        }
    }

    /// `rat + irr·√D` as a double. Cancellation between opposite-signed parts is
    /// avoided by dividing the exact norm by the conjugate.
    pub fn to_f64(&self) -> f64 {
        let root = (D as f64).sqrt();
        let a = self.rat.to_f64();
        let b = self.irr.to_f64() * root;
        if self.irr.is_zero() || self.rat.is_zero() || sign_of(&self.rat) == sign_of(&self.irr) {
            return a + b;
        }
        self.norm().to_f64() / (a - b)
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

impl<const D: u64> Zero for Quadratic<D> {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }
}

impl<const D: u64> One for Quadratic<D> {
    fn one() -> Self {
        Self::from_int(1)
    }
}

impl<const D: u64> From<Rational> for Quadratic<D> {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<const D: u64> From<i64> for Quadratic<D> {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a, const D: u64> Add<&'a Quadratic<D>> for &'a Quadratic<D> {
    type Output = Quadratic<D>;

    fn add(self, rhs: &Quadratic<D>) -> Quadratic<D> {
        Quadratic {
            rat: &self.rat + &rhs.rat,
            irr: &self.irr + &rhs.irr,
        }
    }
}

impl<'a, const D: u64> Sub<&'a Quadratic<D>> for &'a Quadratic<D> {
    type Output = Quadratic<D>;

    fn sub(self, rhs: &Quadratic<D>) -> Quadratic<D> {
        Quadratic {
            rat: &self.rat - &rhs.rat,
            irr: &self.irr - &rhs.irr,
        }
    }
}

impl<'a, const D: u64> Mul<&'a Quadratic<D>> for &'a Quadratic<D> {
    type Output = Quadratic<D>;

    fn mul(self, rhs: &Quadratic<D>) -> Quadratic<D> {
        if self.irr.is_zero() {
            return rhs.scale(&self.rat);
        }
        if rhs.irr.is_zero() {
            return self.scale(&rhs.rat);
        }
        let d = Rational::from_integer(D as i64);
        Quadratic {
            rat: &self.rat * &rhs.rat + &(&self.irr * &rhs.irr) * &d,
            irr: &self.rat * &rhs.irr + &self.irr * &rhs.rat,
        }
    }
}

impl<'a, const D: u64> Div<&'a Quadratic<D>> for &'a Quadratic<D> {
    type Output = Quadratic<D>;

    fn div(self, rhs: &Quadratic<D>) -> Quadratic<D> {
        self * &rhs.inv().expect("quadratic field division by zero")
    }
}

impl<const D: u64> Neg for &Quadratic<D> {
    type Output = Quadratic<D>;

    fn neg(self) -> Quadratic<D> {
        Quadratic {
            rat: -&self.rat,
            irr: -&self.irr,
        }
    }
}

impl<const D: u64> Neg for Quadratic<D> {
    type Output = Quadratic<D>;

    fn neg(self) -> Quadratic<D> {
        Quadratic {
            rat: -self.rat,
            irr: -self.irr,
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign_method:ident) => {
        impl<const D: u64> $tr<Quadratic<D>> for Quadratic<D> {
            type Output = Quadratic<D>;
            fn $method(self, rhs: Quadratic<D>) -> Quadratic<D> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, const D: u64> $tr<&'a Quadratic<D>> for Quadratic<D> {
            type Output = Quadratic<D>;
            fn $method(self, rhs: &Quadratic<D>) -> Quadratic<D> {
                (&self).$method(rhs)
            }
        }
        impl<'a, const D: u64> $tr<Quadratic<D>> for &'a Quadratic<D> {
            type Output = Quadratic<D>;
            fn $method(self, rhs: Quadratic<D>) -> Quadratic<D> {
                self.$method(&rhs)
            }
        }
        impl<const D: u64> $assign_tr<Quadratic<D>> for Quadratic<D> {
            fn $assign_method(&mut self, rhs: Quadratic<D>) {
                *self = (&*self).$method(&rhs);
            }
        }
        impl<'a, const D: u64> $assign_tr<&'a Quadratic<D>> for Quadratic<D> {
            fn $assign_method(&mut self, rhs: &Quadratic<D>) {
                *self = (&*self).$method(rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl<const D: u64> Div<Quadratic<D>> for Quadratic<D> {
    type Output = Quadratic<D>;
    fn div(self, rhs: Quadratic<D>) -> Quadratic<D> {
        &self / &rhs
    }
}

impl<const D: u64> Sum for Quadratic<D> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<const D: u64> Product for Quadratic<D> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl<const D: u64> fmt::Display for Quadratic<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            return write!(f, "{}", self.rat);
        }
        let sign = if self.irr.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*sqrt({})", self.rat, sign, self.irr.abs(), D)
    }
}

impl<const D: u64> fmt::Debug for Quadratic<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const D: u64> FromStr for Quadratic<D> {
    type Err = Error;

    /// Parses the canonical serialization and, more loosely, any constant
    /// expression accepted by the Laurent-polynomial parser.
    fn from_str(s: &str) -> Result<Self> {
        let value = crate::parse::parse_laurent::<D>(s)?;
        match (value.min_degree(), value.max_degree()) {
            (None, None) => Ok(Self::zero()),
            (Some(0), Some(0)) => Ok(value.coeff(0)),
            _ => Err(Error::Parse(format!("`{s}` is not a constant"))),
        }
    }
}

impl<const D: u64> Scalar for Quadratic<D> {
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }

    const EXACT: bool = true;
}

//! Dense univariate polynomials over a [`Scalar`] field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coefficients from degree 0 upward; the leading coefficient is nonzero
/// unless the polynomial is zero (empty).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x − root`.
    pub fn linear_root(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a T>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_root(r.clone()))
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * &T::from_i64(k as i64))
                .collect(),
        )
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

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = T::one() / divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - &(c.clone() * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of an exact division.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }

    /// Monic greatest common divisor by Euclid's algorithm.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedGcd);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // keep intermediates monic so coefficient growth stays tame
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Yun's squarefree decomposition of a nonzero polynomial.
    ///
    /// Returns `(m, f_m)` with every `f_m` monic, squarefree and of positive
    /// degree, pairwise coprime, and `self = lc · Π f_m^m`. Requires
    /// characteristic zero.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(usize, Self)>> {
        if self.is_zero() {
            return Err(Error::Degenerate(
                "squarefree decomposition of the zero polynomial".into(),
            ));
        }
        let mut out = Vec::new();
        let f = self.monic();
        if f.degree() == Some(0) {
            return Ok(out);
        }
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.div_exact(&a0)?;
        let mut c = df.div_exact(&a0)?;
        let mut d = &c - &b.derivative();
        let mut m = 1;
        loop {
            let a = b.gcd(&d)?;
            if a.degree().unwrap_or(0) > 0 {
                out.push((m, a.clone()));
            }
            b = b.div_exact(&a)?;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&a)?;
            d = &c - &b.derivative();
            m += 1;
        }
        Ok(out)
    }

    /// Root multiplicities as a weakly decreasing list: one entry `m` per
    /// distinct root of multiplicity `m` (over the algebraic closure).
    pub fn root_multiplicities(&self) -> Result<Vec<usize>> {
        let mut parts = Vec::new();
        for (m, f) in self.squarefree_decomposition()? {
            let count = f.degree().unwrap_or(0);
            parts.extend(std::iter::repeat_n(m, count));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(parts)
    }

    /// Applies a coefficient map, e.g. to embed Q-polynomials into Q(√5) or
    /// to take a numeric image.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, T: Scalar> Add<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Sub<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl<'a, T: Scalar> Mul<&'a Poly<T>> for &'a Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    /// `(c0) + (c1)*x^1 + …` in increasing degree; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*x^{k}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{FieldElem, Rational};
    use proptest::prelude::*;

    fn qp(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&v| Rational::from_integer(v)).collect())
    }

    #[test]
    fn trims_leading_zeros() {
        let p = qp(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(qp(&[0, 0]).is_zero());
        assert_eq!(qp(&[]).degree(), None);
    }

    #[test]
    fn gcd_examples() {
        let f = qp(&[-1, 0, 1]);
        let g = qp(&[-1, 1]);
        assert_eq!(f.gcd(&g).unwrap(), qp(&[-1, 1]));
        let h = qp(&[4, 0, 2]);
        assert_eq!(h.gcd(&Poly::zero()).unwrap(), h.monic());
        assert_eq!(Poly::<Rational>::zero().gcd(&Poly::zero()), Err(Error::UndefinedGcd));
    }

    #[test]
    fn exact_division() {
        let f = qp(&[-1, 0, 1]);
        assert_eq!(f.div_exact(&qp(&[-1, 1])).unwrap(), qp(&[1, 1]));
        assert_eq!(f.div_exact(&Poly::one()).unwrap(), f);
        assert_eq!(f.div_exact(&qp(&[2, 1])), Err(Error::NotDivisible));
        assert_eq!(f.div_exact(&Poly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn squarefree_decomposition_reads_multiplicities() {
        // x^6 (x−1)^3 (x+1)
        let x = qp(&[0, 1]);
        let f = &(&x.pow(6) * &qp(&[-1, 1]).pow(3)) * &qp(&[1, 1]);
        assert_eq!(f.root_multiplicities().unwrap(), vec![6, 3, 1]);
        let parts = f.squarefree_decomposition().unwrap();
        let rebuilt = parts
            .iter()
            .fold(Poly::one(), |acc, (m, g)| &acc * &g.pow(*m as u32));
        assert_eq!(rebuilt, f.monic());
        assert_eq!(qp(&[5]).root_multiplicities().unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn works_over_the_quadratic_field() {
        // (x − √5)^2 (x + 1)
        let r = FieldElem::sqrt_d();
        let f = &Poly::linear_root(r.clone()).pow(2) * &Poly::linear_root(-FieldElem::one());
        assert_eq!(f.root_multiplicities().unwrap(), vec![2, 1]);
        assert!(f.eval(&r).is_zero());
    }

    fn small_poly() -> impl Strategy<Value = Poly<Rational>> {
        prop::collection::vec(-6i64..6, 1..6).prop_map(|c| qp(&c))
    }

    proptest! {
        #[test]
        fn div_exact_inverts_multiplication(f in small_poly(), g in small_poly()) {
            prop_assume!(!g.is_zero());
            let g = g.monic();
            let prod = &f * &g;
            prop_assert_eq!(prod.div_exact(&g).unwrap(), f);
        }

        #[test]
        fn div_rem_identity(f in small_poly(), g in small_poly()) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.div_rem(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()) || g.degree() == Some(0) && r.is_zero());
        }

        #[test]
        fn gcd_divides_both(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assume!(!h.is_zero() && !(f.is_zero() && g.is_zero()));
            let (a, b) = (&f * &h, &g * &h);
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let d = a.gcd(&b).unwrap();
            prop_assert!(d.divides(&a) && d.divides(&b));
            prop_assert!(h.monic().divides(&d));
        }
    }
}

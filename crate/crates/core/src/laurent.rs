//! Sparse Laurent polynomials `Σ c_k z^k`, `k ∈ ℤ`.
//!
//! Only nonzero coefficients are stored. The residue at the origin (the
//! `z⁻¹` coefficient) is what turns contour integrals over the unit circle
//! into exact algebra: `∮ f dz = 2πi · res(f)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<T> {
    coeffs: BTreeMap<i64, T>,
}

impl<T: Scalar> Laurent<T> {
    pub fn zero() -> Self {
        Laurent {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: T, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Laurent { coeffs }
    }

    /// The bare monomial `z^k`.
    pub fn z(k: i64) -> Self {
        Self::monomial(T::one(), k)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, T)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// An ordinary polynomial viewed as a Laurent polynomial, shifted by `z^shift`.
    pub fn from_poly(p: &Poly<T>, shift: i64) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (k as i64 + shift, c.clone())),
        )
    }

    pub fn add_term(&mut self, k: i64, c: T) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&k) {
            Some(old) => {
                let sum = old + &c;
                if !sum.is_zero() {
                    self.coeffs.insert(k, sum);
                }
            }
            None => {
                self.coeffs.insert(k, c);
            }
        }
    }

    pub fn coeff(&self, k: i64) -> T {
        self.coeffs.get(&k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeff_ref(&self, k: i64) -> Option<&T> {
        self.coeffs.get(&k)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &T)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// `max_degree − min_degree`; zero for constants and for the zero polynomial.
    pub fn span(&self) -> u64 {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => (hi - lo) as u64,
            _ => 0,
        }
    }

    /// Coefficient at the lowest degree.
    pub fn lowest(&self) -> Option<(i64, &T)> {
        self.coeffs.iter().next().map(|(&k, c)| (k, c))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&k| k == 0)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, a)| (k, a.clone() * c))
                .collect(),
        }
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
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

    /// Termwise `d/dz`.
    pub fn derivative(&self) -> Self {
        Laurent {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&k, _)| k != 0)
                .map(|(&k, c)| (k - 1, c.clone() * &T::from_i64(k)))
                .collect(),
        }
    }

    /// The `z⁻¹` coefficient.
    pub fn residue(&self) -> T {
        self.coeff(-1)
    }

    /// `R ∘ f` by Horner's rule.
    pub fn compose_poly(r: &Poly<T>, f: &Self) -> Self {
        r.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * f) + &Self::constant(c.clone()))
    }

    /// The part supported in degrees `>= 0` as an ordinary polynomial, and
    /// whether anything of negative degree was dropped.
    pub fn nonnegative_part(&self) -> (Poly<T>, bool) {
        let top = self.max_degree().unwrap_or(-1);
        let mut coeffs = vec![T::zero(); (top + 1).max(0) as usize];
        let mut dropped = false;
        for (&k, c) in &self.coeffs {
            if k < 0 {
                dropped = true;
            } else {
                coeffs[k as usize] = c.clone();
            }
        }
        (Poly::new(coeffs), dropped)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Laurent<U> {
        Laurent::from_terms(self.coeffs.iter().map(|(&k, c)| (k, f(c))))
    }
}

impl<T: Scalar> Default for Laurent<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a, T: Scalar> Add<&'a Laurent<T>> for &'a Laurent<T> {
    type Output = Laurent<T>;

    fn add(self, rhs: &Laurent<T>) -> Laurent<T> {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a, T: Scalar> Sub<&'a Laurent<T>> for &'a Laurent<T> {
    type Output = Laurent<T>;

    fn sub(self, rhs: &Laurent<T>) -> Laurent<T> {
        let mut out = self.clone();
        for (&k, c) in &rhs.coeffs {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl<'a, T: Scalar> Mul<&'a Laurent<T>> for &'a Laurent<T> {
    type Output = Laurent<T>;

    fn mul(self, rhs: &Laurent<T>) -> Laurent<T> {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        // dense accumulation over the product's degree range
        let lo = self.min_degree().unwrap() + rhs.min_degree().unwrap();
        let hi = self.max_degree().unwrap() + rhs.max_degree().unwrap();
        let mut acc: Vec<Option<T>> = vec![None; (hi - lo + 1) as usize];
        for (&i, a) in &self.coeffs {
            for (&j, b) in &rhs.coeffs {
                let slot = &mut acc[(i + j - lo) as usize];
                let prod = a.clone() * b;
                *slot = Some(match slot.take() {
                    Some(s) => s + &prod,
                    None => prod,
                });
            }
        }
        Laurent {
            coeffs: acc
                .into_iter()
                .enumerate()
                .filter_map(|(idx, c)| c.filter(|c| !c.is_zero()).map(|c| (idx as i64 + lo, c)))
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Laurent<T> {
    type Output = Laurent<T>;

    fn neg(self) -> Laurent<T> {
        Laurent {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Add for Laurent<T> {
    type Output = Laurent<T>;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Laurent<T> {
    type Output = Laurent<T>;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for Laurent<T> {
    type Output = Laurent<T>;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> Zero for Laurent<T> {
    fn zero() -> Self {
        Laurent::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Laurent<T> {
    fn one() -> Self {
        Laurent::one()
    }
}

impl<T: Scalar> fmt::Display for Laurent<T> {
    /// `(c)*z^k` terms in increasing `k`, joined by ` + `; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*z^{k}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{FieldElem, LaurentPoly};
    use proptest::prelude::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        Laurent::from_terms(terms.iter().map(|&(k, c)| (k, FieldElem::from_int(c))))
    }

    #[test]
    fn products() {
        let f = lp(&[(1, 1), (-1, 1)]);
        let g = lp(&[(1, 1), (-1, -1)]);
        assert_eq!(&f * &g, lp(&[(2, 1), (-2, -1)]));
        assert!((&f * &Laurent::zero()).is_zero());
    }

    #[test]
    fn powers() {
        let f = lp(&[(-1, 1), (1, 1)]);
        assert_eq!(f.pow(2), lp(&[(-2, 1), (0, 2), (2, 1)]));
        assert_eq!(f.pow(0), Laurent::one());
    }

    #[test]
    fn derivatives() {
        assert_eq!(lp(&[(-1, 1)]).derivative(), lp(&[(-2, -1)]));
        assert!(lp(&[(0, 7)]).derivative().is_zero());
        assert_eq!(lp(&[(1, 1), (-1, 1)]).derivative(), lp(&[(0, 1), (-2, -1)]));
    }

    #[test]
    fn residues() {
        assert_eq!(lp(&[(-1, 1)]).residue(), FieldElem::one());
        assert!(lp(&[(2, 1), (0, 3)]).residue().is_zero());
    }

    #[test]
    fn composition() {
        let f = lp(&[(-2, 3), (1, -1), (4, 2)]);
        let t = Poly::x();
        assert_eq!(Laurent::compose_poly(&t, &f), f);
        assert_eq!(Laurent::compose_poly(&t.pow(2), &f), &f * &f);
        assert_eq!(Laurent::compose_poly(&Poly::one(), &f), Laurent::one());
    }

    #[test]
    fn display() {
        let f = Laurent::from_terms([
            (-4, FieldElem::one()),
            (1, FieldElem::from_parts(910, 1, 406, 1)),
        ]);
        assert_eq!(f.to_string(), "(1/1)*z^-4 + (910/1+406/1*sqrt(5))*z^1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -5i64..5, -3i64..3), 0..6).prop_map(|terms| {
            Laurent::from_terms(
                terms
                    .into_iter()
                    .map(|(k, a, b)| (k, FieldElem::from_parts(a, 1, b, 2))),
            )
        })
    }

    proptest! {
        #[test]
        fn derivative_has_no_residue(f in small_laurent()) {
            prop_assert!(f.derivative().residue().is_zero());
        }

        #[test]
        fn integration_by_parts(f in small_laurent(), g in small_laurent()) {
            let lhs = (&f * &g.derivative()).residue();
            let rhs = -(&g * &f.derivative()).residue();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn power_law(f in small_laurent(), i in 0u32..4, j in 0u32..4) {
            prop_assert_eq!(f.pow(i + j), &f.pow(i) * &f.pow(j));
        }

        #[test]
        fn trimmed_form(f in small_laurent(), g in small_laurent()) {
            let h = &(&f * &g) - &(&g * &f);
            prop_assert!(h.is_zero());
            prop_assert!((&f - &f).min_degree().is_none());
        }
    }
}

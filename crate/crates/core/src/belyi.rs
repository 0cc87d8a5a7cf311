//! Rational functions, their ramification over `0, 1, ∞`, and Möbius
//! changes of variable.
//!
//! Multiplicities are read from squarefree decompositions, never from
//! numeric roots. The point at infinity is handled by degree bookkeeping:
//! for `F = N/D` of degree `n = max(deg N, deg D)`, the fiber over a finite
//! value `v` gains the point `∞` with multiplicity `n − deg(N − vD)` when
//! that is positive, and the fiber over `∞` gains `n − deg D`.

use std::fmt;

use crate::characters::Partition;
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// `num/den` in lowest terms with a monic denominator.
#[derive(Clone, PartialEq)]
pub struct RationalFunction<T: Scalar> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den)?;
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lead = den.leading().expect("nonzero").clone();
        let inv = T::one() / lead;
        Ok(RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn polynomial(p: Poly<T>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    /// `Σ c_k z^k` as `(z^s·f)/z^s` for the pole order `s` at the origin.
    pub fn from_laurent(f: &Laurent<T>) -> Result<Self> {
        let shift = (-f.min_degree().unwrap_or(0)).max(0);
        let (num, dropped) = f.shift(shift).nonnegative_part();
        debug_assert!(!dropped);
        Self::new(num, Poly::monomial(T::one(), shift as usize))
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    /// `max(deg num, deg den)`; zero for constants.
    pub fn degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &T) -> Option<T> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Numerator of `F − v`, i.e. `num − v·den`.
    pub fn shifted_numerator(&self, v: &T) -> Poly<T> {
        &self.num - &self.den.scale(v)
    }

    /// `num′·den − num·den′`, the numerator of `F′` before reduction.
    pub fn wronskian(&self) -> Poly<T> {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    pub fn derivative(&self) -> Result<Self> {
        Self::new(self.wronskian(), &self.den * &self.den)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Result<RationalFunction<U>> {
        RationalFunction::new(self.num.map(&f), self.den.map(&f))
    }
}

impl<T: Scalar> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl<T: Scalar> fmt::Debug for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `x ↦ (a x + b)/(c x + d)` with `ad − bc ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mobius<T: Scalar> {
    a: T,
    b: T,
    c: T,
    d: T,
}

impl<T: Scalar> Mobius<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        if (a.clone() * &d - b.clone() * &c).is_zero() {
            return Err(Error::Degenerate("Möbius map with ad − bc = 0".into()));
        }
        Ok(Mobius { a, b, c, d })
    }

    pub fn identity() -> Self {
        Mobius {
            a: T::one(),
            b: T::zero(),
            c: T::zero(),
            d: T::one(),
        }
    }

    pub fn coefficients(&self) -> [&T; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Image of a point of the projective line; `None` stands for `∞`.
    pub fn apply(&self, x: Option<&T>) -> Option<T> {
        let (num, den) = match x {
            Some(x) => (
                self.a.clone() * x + &self.b,
                self.c.clone() * x + &self.d,
            ),
            None => (self.a.clone(), self.c.clone()),
        };
        if den.is_zero() {
            None
        } else {
            Some(num / den)
        }
    }

    pub fn inverse(&self) -> Self {
        Mobius {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }
}

/// `F ∘ m`, reduced.
pub fn mobius_substitute<T: Scalar>(f: &RationalFunction<T>, m: &Mobius<T>) -> Result<RationalFunction<T>> {
    let n = f.degree();
    let top = Poly::new(vec![m.b.clone(), m.a.clone()]);
    let bottom = Poly::new(vec![m.d.clone(), m.c.clone()]);
    let top_pows: Vec<Poly<T>> = (0..=n).map(|k| top.pow(k as u32)).collect();
    let bottom_pows: Vec<Poly<T>> = (0..=n).map(|k| bottom.pow(k as u32)).collect();
    // Σ p_k (ax+b)^k (cx+d)^{n−k}
    let homogenize = |p: &Poly<T>| {
        p.coeffs()
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (k, c)| {
                &acc + &(&top_pows[k] * &bottom_pows[n - k]).scale(c)
            })
    };
    RationalFunction::new(homogenize(f.num()), homogenize(f.den()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationProfile {
    pub over_zero: Partition,
    pub over_one: Partition,
    pub over_infinity: Partition,
}

impl RamificationProfile {
    /// `Σ (n − #parts)` over the three fibers.
    pub fn total_ramification(&self) -> usize {
        [&self.over_zero, &self.over_one, &self.over_infinity]
            .iter()
            .map(|p| p.n() - p.len())
            .sum()
    }
}

fn fiber(finite: &Poly<impl Scalar>, at_infinity: usize) -> Result<Partition> {
    let mut parts = if finite.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        finite.root_multiplicities()?
    };
    if at_infinity > 0 {
        parts.push(at_infinity);
    }
    Partition::new(parts)
}

/// Multiplicities over `0`, `1`, `∞` without asking whether the function
/// is ramified elsewhere.
pub fn fiber_profile<T: Scalar>(f: &RationalFunction<T>) -> Result<RamificationProfile> {
    let n = f.degree();
    if n == 0 {
        return Err(Error::Degenerate("constant function".into()));
    }
    let over = |v: T| -> Result<Partition> {
        let g = f.shifted_numerator(&v);
        if g.is_zero() {
            return Err(Error::Degenerate("function is constant".into()));
        }
        fiber(&g, n - g.degree().unwrap_or(0))
    };
    Ok(RamificationProfile {
        over_zero: over(T::zero())?,
        over_one: over(T::one())?,
        over_infinity: fiber(f.den(), n - f.den().degree().unwrap_or(0))?,
    })
}

/// The profile of a genus-0 Belyi function. Certifies that nothing ramifies
/// outside `{0, 1, ∞}` in two ways: Riemann–Hurwitz (total ramification
/// `2n − 2`), and every finite critical point being a root of
/// `num(F)·num(F − 1)·den(F)`.
pub fn ramification_profile<T: Scalar>(f: &RationalFunction<T>) -> Result<RamificationProfile> {
    let profile = fiber_profile(f)?;
    let n = f.degree();
    let total = profile.total_ramification();
    if total < 2 * n - 2 {
        return Err(Error::NotBelyi {
            extra: 2 * n - 2 - total,
        });
    }
    assert_eq!(total, 2 * n - 2, "ramification exceeds the Riemann–Hurwitz bound");
    let w = f.wronskian();
    let radical = w.div_exact(&w.gcd(&w.derivative())?)?;
    let product = &(f.num() * &f.shifted_numerator(&T::one())) * f.den();
    if !radical.divides(&product) {
        let stray = radical.div_exact(&radical.gcd(&product)?)?;
        return Err(Error::NotBelyi {
            extra: stray.degree().unwrap_or(0),
        });
    }
    Ok(profile)
}

/// `K·x⁶(x−1)³(x+1) / (x² + a x + b)⁵`.
pub fn build_candidate<T: Scalar>(k: T, a: T, b: T) -> Result<RationalFunction<T>> {
    if k.is_zero() {
        return Err(Error::Degenerate("K = 0".into()));
    }
    let one = T::one();
    let x = Poly::<T>::x();
    let xm1 = Poly::linear_root(one.clone());
    let xp1 = Poly::linear_root(-one.clone());
    let quad = Poly::new(vec![b, a, one]);
    let base = &(&x * &xm1) * &xp1;
    if base.gcd(&quad)?.degree() != Some(0) {
        return Err(Error::Degenerate(
            "x² + a x + b shares a root with x(x−1)(x+1)".into(),
        ));
    }
    let num = (&(&x.pow(6) * &xm1.pow(3)) * &xp1).scale(&k);
    RationalFunction::new(num, quad.pow(5))
}

/// `(5a+2)x³ + (2a+10b+4)x² − (a−2b)x − 6b`, the cubic carrying the three
/// double points over 1.
pub fn p_of<T: Scalar>(a: T, b: T) -> Result<Poly<T>> {
    let c = |n: i64| T::from_i64(n);
    let lead = a.clone() * c(5) + c(2);
    if lead.is_zero() {
        return Err(Error::Degenerate("5a + 2 = 0".into()));
    }
    Ok(Poly::new(vec![
        -(b.clone() * c(6)),
        -(a.clone() - b.clone() * c(2)),
        a * c(2) + b * c(10) + c(4),
        lead,
    ]))
}

/// `num(F − 1) = constant · p² · q` with `q` monic, quartic, squarefree and
/// coprime to `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct HStructure<T: Scalar> {
    pub constant: T,
    pub p: Poly<T>,
    pub q: Poly<T>,
}

pub fn h_structure<T: Scalar>(k: T, a: T, b: T) -> Result<HStructure<T>> {
    let f = build_candidate(k.clone(), a.clone(), b.clone())?;
    let p = p_of(a.clone(), b)?;
    let h = f.shifted_numerator(&T::one());
    let rest = h.div_exact(&(&p * &p))?;
    let constant = rest.leading().ok_or(Error::NotDivisible)?.clone();
    let q = rest.monic();
    let lead = a * T::from_i64(5) + T::from_i64(2);
    if constant != (k - T::one()) / (lead.clone() * lead) {
        return Err(Error::Degenerate("unexpected constant in front of p²·q".into()));
    }
    if q.degree() != Some(4) {
        return Err(Error::DegreeMismatch {
            expected: 4,
            found: q.degree().unwrap_or(0),
        });
    }
    if q.gcd(&q.derivative())?.degree() != Some(0) || q.gcd(&p)?.degree() != Some(0) {
        return Err(Error::Degenerate("q is not squarefree or shares a root with p".into()));
    }
    Ok(HStructure { constant, p, q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::{self, laurent_l};
    use crate::{FieldElem, Rational, RationalFnQ, RationalPoly};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn qi(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn passport() -> RamificationProfile {
        RamificationProfile {
            over_zero: part("6,3,1"),
            over_one: part("2^3 1^4"),
            over_infinity: part("5,5"),
        }
    }

    #[test]
    fn reduction_and_normalization() {
        let num = RationalPoly::new(vec![qi(-1), qi(0), qi(1)]);
        let den = RationalPoly::new(vec![qi(-2), qi(2)]);
        let f = RationalFnQ::new(num, den).unwrap();
        assert_eq!(f.num(), &RationalPoly::new(vec![q(1, 2), q(1, 2)]));
        assert_eq!(f.den(), &RationalPoly::one());
        assert!(RationalFnQ::new(RationalPoly::one(), RationalPoly::zero()).is_err());
    }

    #[test]
    fn f1_profile() {
        let f1 = counterexample::f1();
        assert_eq!(f1.degree(), 10);
        assert_eq!(ramification_profile(&f1).unwrap(), passport());
    }

    #[test]
    fn f2_candidate_matches_reference_form() {
        let f2 = counterexample::f2();
        let cand = build_candidate(q(337_500, 161_051), q(4, 11), q(-16, 11)).unwrap();
        assert_eq!(cand, f2);
        assert_eq!(ramification_profile(&f2).unwrap(), passport());
    }

    #[test]
    fn l_profile() {
        let l = RationalFunction::from_laurent(&laurent_l()).unwrap();
        assert_eq!(l.den(), &Poly::monomial(FieldElem::from_int(1), 5));
        assert_eq!(ramification_profile(&l).unwrap(), passport());
    }

    #[test]
    fn squaring_map() {
        let f = RationalFnQ::polynomial(RationalPoly::monomial(qi(1), 2));
        let p = ramification_profile(&f).unwrap();
        assert_eq!(p.over_zero, part("2"));
        assert_eq!(p.over_one, part("1,1"));
        assert_eq!(p.over_infinity, part("2"));
    }

    #[test]
    fn extra_critical_values_are_rejected() {
        // x³ − 3x has critical values ±2
        let f = RationalFnQ::polynomial(RationalPoly::new(vec![qi(0), qi(-3), qi(0), qi(1)]));
        assert!(matches!(ramification_profile(&f), Err(Error::NotBelyi { .. })));
        // a generic candidate is not Belyi either
        let g = build_candidate(qi(1), qi(3), qi(7)).unwrap();
        assert!(matches!(ramification_profile(&g), Err(Error::NotBelyi { .. })));
    }

    #[test]
    fn degenerate_candidates() {
        assert!(matches!(build_candidate(qi(1), qi(0), qi(0)), Err(Error::Degenerate(_))));
        assert!(matches!(build_candidate(qi(0), qi(4), qi(-1)), Err(Error::Degenerate(_))));
        assert!(matches!(p_of(q(-2, 5), qi(1)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(
            p_of(qi(4), qi(-1)).unwrap(),
            RationalPoly::new(vec![qi(6), qi(-6), qi(2), qi(22)])
        );
        assert_eq!(p_of(qi(0), qi(0)).unwrap(), RationalPoly::new(vec![qi(0), qi(0), qi(4), qi(2)]));
    }

    #[test]
    fn derivative_of_f1_factors_through_p() {
        let f1 = counterexample::f1();
        let quad = RationalPoly::new(vec![qi(-1), qi(4), qi(1)]);
        let reduced = f1.wronskian().div_exact(&quad.pow(4)).unwrap();
        let x5 = RationalPoly::monomial(qi(1), 5);
        let xm1 = RationalPoly::linear_root(qi(1));
        let expected = (&(&x5 * &xm1.pow(2)) * &p_of(qi(4), qi(-1)).unwrap()).scale(&q(50_000, 27));
        assert_eq!(reduced, expected);
    }

    #[test]
    fn gcd_with_derivative_recovers_p() {
        let f1 = counterexample::f1();
        let h = f1.shifted_numerator(&qi(1));
        let g = h.gcd(&h.derivative()).unwrap();
        assert_eq!(g, p_of(qi(4), qi(-1)).unwrap().monic());
    }

    #[test]
    fn h_structure_of_f1() {
        let h = h_structure(q(50_000, 27), qi(4), qi(-1)).unwrap();
        assert_eq!(h.constant, (q(50_000, 27) - qi(1)) / qi(22 * 22));
        assert_eq!(h.q.degree(), Some(4));
        // q = (7x − 1)(59x³ − 121x² + 33x − 3)/413
        let expected = (&RationalPoly::new(vec![qi(-1), qi(7)])
            * &RationalPoly::new(vec![qi(-3), qi(33), qi(-121), qi(59)]))
            .monic();
        assert_eq!(h.q, expected);
    }

    #[test]
    fn poles_of_f1() {
        let quad = counterexample::f1().den().clone();
        let s5 = FieldElem::sqrt_d();
        let quad5 = quad.map(|c| FieldElem::from_rational(c.clone()));
        for r in [FieldElem::from_int(-2) + s5.clone(), FieldElem::from_int(-2) - s5] {
            assert!(quad5.eval(&r).is_zero());
        }
    }

    #[test]
    fn mobius_to_l() {
        let f1 = counterexample::f1_over_field();
        let l = mobius_substitute(&f1, &counterexample::inverse_mobius()).unwrap();
        assert_eq!(l, RationalFunction::from_laurent(&laurent_l()).unwrap());
        assert_eq!(mobius_substitute(&f1, &Mobius::identity()).unwrap(), f1);
    }

    #[test]
    fn forward_map_values() {
        let m = counterexample::forward_mobius();
        let s5 = FieldElem::sqrt_d();
        let two = FieldElem::from_int(2);
        assert_eq!(m.apply(Some(&(-two.clone() - s5.clone()))), Some(FieldElem::zero()));
        assert_eq!(m.apply(Some(&FieldElem::zero())), Some(FieldElem::one()));
        assert_eq!(m.apply(Some(&(-two + s5))), None);
        assert_eq!(m.inverse().apply(Some(&FieldElem::zero())), Some(FieldElem::from_int(-2) - FieldElem::sqrt_d()));
    }

    #[test]
    fn singular_mobius_is_rejected() {
        assert!(Mobius::new(qi(1), qi(2), qi(2), qi(4)).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn profile_survives_change_of_variable(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3) {
            prop_assume!(a * d - b * c != 0);
            let m = Mobius::new(qi(a), qi(b), qi(c), qi(d)).unwrap();
            let g = mobius_substitute(&counterexample::f1(), &m).unwrap();
            prop_assert_eq!(g.degree(), 10);
            prop_assert_eq!(ramification_profile(&g).unwrap(), passport());
        }
    }
}

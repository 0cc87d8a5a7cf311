//! Moments `m_i(Q) = ∮ Lⁱ dQ / 2πi = res(Lⁱ·Q′)` and the finite check that
//! decides whether `Q` solves the moment problem for `L`.
//!
//! By linearity `m_i(Q) = Σ_k k·q_k·[z^{−k}]Lⁱ`, so all that is needed from
//! `Lⁱ` is a narrow band of coefficients. [`MomentEngine`] writes
//! `L = c·z^m·P/s` with `s·P` integral over Z[√D] and marches the powers of
//! `s·P` in plain big-integer arithmetic, caching the band for every `i`.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::linalg::Matrix;
use crate::numfield::Quadratic;
use crate::perm::{vector_orbit, Permutation};
use crate::rational::Rational;
use crate::scalar::Scalar;

/// `res(Lⁱ · Q′)`, straight from the definition.
pub fn moment<T: Scalar>(l: &Laurent<T>, q: &Laurent<T>, i: u32) -> T {
    (&l.pow(i) * &q.derivative()).residue()
}

/// `(N − 1)·deg Q + 1` with `deg Q = max_degree − min_degree`.
pub fn verification_bound<T: Scalar>(q: &Laurent<T>, n: u64) -> u64 {
    n.saturating_sub(1) * q.span() + 1
}

/// Size of the orbit of `v` under coordinate permutation.
pub fn orbit_size_n(generators: &[Permutation], v: &[i64]) -> Result<usize> {
    Ok(vector_orbit(generators, v)?.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentReport {
    pub checked_upper_bound: u64,
    pub first_nonzero_index: Option<u64>,
    pub all_zero: bool,
}

/// `x + y·√D` with integer parts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct ZSqrt {
    x: BigInt,
    y: BigInt,
}

impl ZSqrt {
    fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    fn mul_add(&mut self, a: &ZSqrt, b: &ZSqrt, d: &BigInt) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        self.x += &a.x * &b.x;
        if !a.y.is_zero() && !b.y.is_zero() {
            self.x += &a.y * &b.y * d;
        }
        self.y += &a.x * &b.y;
        self.y += &a.y * &b.x;
    }

    fn scale_small(&mut self, k: i64) {
        self.x *= k;
        self.y *= k;
    }

    fn to_quadratic<const D: u64>(&self) -> Quadratic<D> {
        Quadratic::new(
            Rational::from_integer(self.x.clone()),
            Rational::from_integer(self.y.clone()),
        )
    }
}

/// Least common multiple of the denominators of the parts.
fn common_denominator<'a, const D: u64>(values: impl IntoIterator<Item = &'a Quadratic<D>>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| {
        acc.lcm(v.rat().denom()).lcm(v.irr().denom())
    })
}

fn integral<const D: u64>(v: &Quadratic<D>, scale: &BigInt) -> ZSqrt {
    let part = |r: &Rational| -> BigInt {
        let s = r * &Rational::from_integer(scale.clone());
        debug_assert!(s.is_integer());
        s.numer().clone()
    };
    ZSqrt {
        x: part(v.rat()),
        y: part(v.irr()),
    }
}

/// Cached moment evaluation for one fixed `L`.
pub struct MomentEngine<const D: u64> {
    /// `L = ratio · z^shift · Σ p_t z^t` with `p_t ∈ Z[√D]`
    ratio: Quadratic<D>,
    shift: i64,
    p: Vec<ZSqrt>,
    d: BigInt,
    /// half-width of the cached band
    width: i64,
    /// coefficients of the current power kept up to this index
    cap: usize,
    chain: Vec<ZSqrt>,
    /// `bands[i][u]` is the coefficient of index `center(i) − width + u` in `(sP)ⁱ`
    bands: Vec<Vec<ZSqrt>>,
}

impl<const D: u64> MomentEngine<D> {
    pub fn new(l: &Laurent<Quadratic<D>>) -> Result<Self> {
        let (shift, lowest) = l
            .lowest()
            .ok_or_else(|| Error::Degenerate("moments of the zero Laurent polynomial".into()))?;
        let lowest_inv = lowest.inv()?;
        let normalized: Vec<Quadratic<D>> = (shift..=l.max_degree().unwrap_or(shift))
            .map(|k| l.coeff(k) * lowest_inv.clone())
            .collect();
        let s = common_denominator(&normalized);
        let p: Vec<ZSqrt> = normalized.iter().map(|c| integral(c, &s)).collect();
        let ratio = lowest.clone() * Quadratic::from_rational(Rational::new(1, s)?);
        let mut engine = MomentEngine {
            ratio,
            shift,
            p,
            d: BigInt::from(D),
            width: 0,
            cap: 0,
            chain: Vec::new(),
            bands: Vec::new(),
        };
        engine.reset(24, 0);
        Ok(engine)
    }

    fn degree_p(&self) -> usize {
        self.p.len() - 1
    }

    /// `[z^{−k}]Lⁱ` sits at index `center(i) − k` of `(sP)ⁱ`.
    fn center(&self, i: u64) -> i64 {
        -self.shift * i as i64
    }

    fn reset(&mut self, width: i64, max_power: u64) {
        self.width = width;
        self.cap = (self.center(max_power).max(0) + width).max(0) as usize;
        self.chain = vec![ZSqrt {
            x: BigInt::one(),
            y: BigInt::zero(),
        }];
        self.bands = Vec::new();
        self.record_band();
    }

    fn record_band(&mut self) {
        let i = self.bands.len() as u64;
        let lo = self.center(i) - self.width;
        let band = (0..=2 * self.width)
            .map(|u| {
                let n = lo + u;
                if n < 0 {
                    ZSqrt::default()
                } else {
                    self.chain.get(n as usize).cloned().unwrap_or_default()
                }
            })
            .collect();
        self.bands.push(band);
    }

    fn step(&mut self) {
        let i = self.bands.len();
        let len = (self.degree_p() * i + 1).min(self.cap + 1);
        let mut next = vec![ZSqrt::default(); len];
        for (n, slot) in next.iter_mut().enumerate() {
            for (t, pt) in self.p.iter().enumerate().take(n + 1) {
                if let Some(c) = self.chain.get(n - t) {
                    slot.mul_add(pt, c, &self.d);
                }
            }
        }
        self.chain = next;
        self.record_band();
    }

    /// Makes bands available for powers `0..=max_power` and degrees `|k| ≤ width`.
    pub fn ensure(&mut self, max_power: u64, width: i64) {
        let needed_cap = (self.center(max_power).max(0) + width).max(0) as usize;
        if width > self.width || needed_cap > self.cap {
            let new_width = width.max(self.width);
            let new_power = max_power.max(2 * self.bands.len() as u64);
            self.reset(new_width, new_power);
        }
        while (self.bands.len() as u64) <= max_power {
            self.step();
        }
    }

    /// The coefficient of `(sP)ⁱ` that carries `[z^{−k}]Lⁱ`.
    fn entry(&self, i: u64, k: i64) -> &ZSqrt {
        &self.bands[i as usize][(self.width - k) as usize]
    }

    /// `Σ k·(s_Q q_k)·[(sP)ⁱ]_{center−k}`, i.e. the moment up to a nonzero factor.
    fn scaled_sum(&self, terms: &[(i64, ZSqrt)], i: u64) -> ZSqrt {
        let mut acc = ZSqrt::default();
        for (k, q) in terms {
            acc.mul_add(q, self.entry(i, *k), &self.d);
        }
        acc
    }

    fn prepare(&mut self, q: &Laurent<Quadratic<D>>, max_power: u64) -> (Vec<(i64, ZSqrt)>, BigInt) {
        let width = q
            .terms()
            .map(|(k, _)| k.abs())
            .max()
            .unwrap_or(0);
        self.ensure(max_power, width);
        let scale = common_denominator(q.terms().map(|(_, c)| c));
        let terms = q
            .terms()
            .filter(|(k, _)| *k != 0)
            .map(|(k, c)| {
                let mut v = integral(c, &scale);
                v.scale_small(k);
                (k, v)
            })
            .collect();
        (terms, scale)
    }

    fn unscale(&self, sum: &ZSqrt, scale: &BigInt, i: u64) -> Quadratic<D> {
        if sum.is_zero() {
            return Quadratic::zero();
        }
        let inv_scale = Rational::new(1, scale.clone()).expect("positive scale");
        sum.to_quadratic::<D>().scale(&inv_scale) * self.ratio.pow(i as u32)
    }

    /// `res(Lⁱ · Q′)`.
    pub fn moment(&mut self, q: &Laurent<Quadratic<D>>, i: u64) -> Quadratic<D> {
        let (terms, scale) = self.prepare(q, i);
        let sum = self.scaled_sum(&terms, i);
        self.unscale(&sum, &scale, i)
    }

    /// `m_1 … m_upto`.
    pub fn moments(&mut self, q: &Laurent<Quadratic<D>>, upto: u64) -> Vec<Quadratic<D>> {
        let (terms, scale) = self.prepare(q, upto);
        let this = &*self;
        (1..=upto)
            .into_par_iter()
            .map(|i| this.unscale(&this.scaled_sum(&terms, i), &scale, i))
            .collect()
    }

    /// Checks `m_i(Q) = 0` for `1 ≤ i ≤ (N − 1)·deg Q + 1`, stopping at the
    /// first nonzero moment.
    pub fn verify(&mut self, q: &Laurent<Quadratic<D>>, n: u64) -> MomentReport {
        let bound = verification_bound(q, n);
        let (terms, _) = self.prepare(q, bound);
        let this = &*self;
        let first = (1..=bound)
            .into_par_iter()
            .find_first(|&i| !this.scaled_sum(&terms, i).is_zero());
        MomentReport {
            checked_upper_bound: bound,
            first_nonzero_index: first,
            all_zero: first.is_none(),
        }
    }

    /// Rows `i = 1..=rows`, columns the monomials `z^k` for `k` in `degrees`;
    /// entry `m_i(z^k) = k·[z^{−k}]Lⁱ`.
    pub fn moment_matrix(&mut self, degrees: RangeInclusive<i64>, rows: u64) -> Matrix<Quadratic<D>> {
        let width = degrees.start().abs().max(degrees.end().abs());
        self.ensure(rows, width);
        let data = (1..=rows)
            .map(|i| {
                let factor = self.ratio.pow(i as u32);
                degrees
                    .clone()
                    .map(|k| {
                        let mut e = self.entry(i, k).clone();
                        e.scale_small(k);
                        e.to_quadratic::<D>() * factor.clone()
                    })
                    .collect()
            })
            .collect();
        Matrix::from_rows(data)
    }
}

/// One-off check; builds a fresh [`MomentEngine`].
pub fn verify_solution<const D: u64>(
    l: &Laurent<Quadratic<D>>,
    q: &Laurent<Quadratic<D>>,
    n: u64,
) -> Result<MomentReport> {
    Ok(MomentEngine::new(l)?.verify(q, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::{generators, laurent_l, reference_basis, ORBIT_VECTOR};
    use crate::perm::Permutation;
    use crate::{FieldElem, LaurentPoly};
    use proptest::prelude::*;

    fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..=6, -5i64..=5, -3i64..=3, 1i64..=3), 1..6).prop_map(|terms| {
            LaurentPoly::from_terms(
                terms
                    .into_iter()
                    .map(|(k, p, r, s)| (k, FieldElem::from_parts(p, s, r, s))),
            )
        })
    }

    #[test]
    fn constant_has_no_moments() {
        let l = laurent_l();
        for i in 1..5 {
            assert!(moment(&l, &LaurentPoly::one(), i).is_zero());
        }
    }

    #[test]
    fn reference_q2_first_moment_vanishes() {
        assert!(moment(&laurent_l(), &reference_basis()[2], 1).is_zero());
    }

    #[test]
    fn bare_monomial_first_moment_is_the_residue_of_l() {
        let l = laurent_l();
        let m = moment(&l, &LaurentPoly::z(1), 1);
        assert!(!m.is_zero());
        assert_eq!(m, l.coeff(-1));
    }

    #[test]
    fn engine_matches_definition_on_basis() {
        let l = laurent_l();
        let mut engine = MomentEngine::new(&l).unwrap();
        let probe = LaurentPoly::from_terms([(-3, FieldElem::from_int(2)), (2, FieldElem::sqrt_d()), (7, FieldElem::from_parts(1, 3, 0, 1))]);
        for i in 1..=6u32 {
            assert_eq!(engine.moment(&probe, i as u64), moment(&l, &probe, i));
        }
        let direct: Vec<FieldElem> = (1..=6).map(|i| moment(&l, &reference_basis()[4], i)).collect();
        assert_eq!(engine.moments(&reference_basis()[4], 6), direct);
    }

    #[test]
    fn engine_survives_growth() {
        let l = laurent_l();
        let mut engine = MomentEngine::new(&l).unwrap();
        let narrow = LaurentPoly::z(1);
        let m3 = engine.moment(&narrow, 3);
        let wide = LaurentPoly::z(40);
        let w2 = engine.moment(&wide, 2);
        assert_eq!(engine.moment(&narrow, 3), m3);
        assert_eq!(w2, moment(&l, &wide, 2));
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size_n(&generators(), &ORBIT_VECTOR).unwrap(), 12);
        assert_eq!(orbit_size_n(&[Permutation::identity(10)], &ORBIT_VECTOR).unwrap(), 1);
        let s10 = [
            Permutation::parse_cycles(10, "(1,2)").unwrap(),
            Permutation::parse_cycles(10, "(1,2,3,4,5,6,7,8,9,10)").unwrap(),
        ];
        assert_eq!(orbit_size_n(&s10, &ORBIT_VECTOR).unwrap(), 252);
        assert!(orbit_size_n(&generators(), &[1, -1]).is_err());
    }

    #[test]
    fn verification_reports() {
        let l = laurent_l();
        let basis = reference_basis();
        let mut engine = MomentEngine::new(&l).unwrap();
        let r4 = engine.verify(&basis[4], 12);
        assert_eq!(r4, MomentReport { checked_upper_bound: 89, first_nonzero_index: None, all_zero: true });
        let r0 = engine.verify(&basis[0], 12);
        assert_eq!(r0.checked_upper_bound, 1);
        assert!(r0.all_zero);
        let bad = LaurentPoly::from_terms([(1, FieldElem::one()), (2, FieldElem::one())]);
        let rb = engine.verify(&bad, 12);
        assert!(!rb.all_zero);
        let first = rb.first_nonzero_index.unwrap();
        assert!(!moment(&l, &bad, first as u32).is_zero());
        assert!((1..first).all(|i| moment(&l, &bad, i as u32).is_zero()));
    }

    #[test]
    fn closure_under_powers_of_l() {
        let l = laurent_l();
        let mut engine = MomentEngine::new(&l).unwrap();
        for q in reference_basis().iter().skip(1) {
            for k in 0..=3 {
                let candidate = &l.pow(k) * q;
                assert!(engine.verify(&candidate, 12).all_zero, "L^{k} Q fails");
            }
        }
    }

    #[test]
    fn no_polynomial_solutions_up_to_degree_four() {
        let mut engine = MomentEngine::new(&laurent_l()).unwrap();
        assert_eq!(engine.moment_matrix(1..=4, 45).rank(), 4);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn engine_agrees_with_definition(q in small_laurent(), i in 1u32..5) {
            let l = laurent_l();
            let mut engine = MomentEngine::new(&l).unwrap();
            prop_assert_eq!(engine.moment(&q, i as u64), moment(&l, &q, i));
        }

        #[test]
        fn product_rule_identity(q in small_laurent(), i in 1u32..4, k in 1u32..4) {
            // res((L^{i+k}·Q)′) = 0 split by the product rule
            let l = laurent_l();
            let lk = l.pow(k);
            let li = l.pow(i);
            let lhs = (&(&li * &q) * &lk.derivative()).residue()
                + (&lk * &(&(&li.derivative() * &q) + &(&li * &q.derivative()))).residue();
            prop_assert!(lhs.is_zero());
            let whole = (&l.pow(i + k) * &q).derivative().residue();
            prop_assert!(whole.is_zero());
        }
    }
}

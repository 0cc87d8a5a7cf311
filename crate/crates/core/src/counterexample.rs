//! The degree-10 Laurent polynomial
//! `L = K (z−1)⁶ (z−a)³ (z−b) / z⁵` and the data attached to it: its
//! monodromy generators as permutations of the ten edges of K₅, the closed-form
//! basis solutions, and the invariant vectors of the edge representation.

use crate::laurent::Laurent;
use crate::parse::parse_laurent;
use crate::perm::{edge_action, EdgeLabeling, Permutation};
use crate::belyi::{build_candidate, Mobius, RationalFunction};
use crate::{FieldElem, LaurentPoly, Rational, RationalFn, RationalFnQ, RationalPoly};

/// Leading constant `K = 11/216 + 5/216·√5`.
pub fn k() -> FieldElem {
    FieldElem::from_parts(11, 216, 5, 216)
}

/// Triple zero `a = −3/2 + 1/2·√5`.
pub fn a() -> FieldElem {
    FieldElem::from_parts(-3, 2, 1, 2)
}

/// Simple zero `b = 7/2 − 3/2·√5`.
pub fn b() -> FieldElem {
    FieldElem::from_parts(7, 2, -3, 2)
}

/// Built from the factored form.
pub fn laurent_l() -> LaurentPoly {
    let linear = |root: FieldElem| Laurent::from_terms([(0, -root), (1, FieldElem::from_int(1))]);
    let numerator = &(&linear(FieldElem::from_int(1)).pow(6) * &linear(a()).pow(3)) * &linear(b());
    numerator.scale(&k()).shift(-5)
}

/// `K a³ b`, the coefficient of `z⁻⁵` in `L`.
pub fn lowest_coefficient() -> FieldElem {
    k() * a().pow(3) * b()
}

/// Pole order of `L` at the origin and at infinity.
pub const POLE_ORDER: i64 = 5;

/// The basis solutions in closed form, `Q₀ … Q₄`.
pub const REFERENCE_BASIS: [&str; 5] = [
    "1",
    "(z^2+1)/z",
    "(-(9+4*sqrt(5))*z^4+(20+8*sqrt(5))*z^3+1)/z^2",
    "((47/2+21/2*sqrt(5))*z^6-(195/2+87/2*sqrt(5))*z^5+(255/2+111/2*sqrt(5))*z^4+1)/z^3",
    "(-(9+4*sqrt(5))*z^8+(130+58*sqrt(5))*z^7-(630+282*sqrt(5))*z^6+(910+406*sqrt(5))*z^5+1)/z^4",
];

pub fn reference_basis() -> Vec<LaurentPoly> {
    REFERENCE_BASIS
        .iter()
        .map(|s| parse_laurent(s).expect("reference basis parses"))
        .collect()
}

/// Vertex permutations of K₅ whose edge actions are the monodromy generators.
pub const VERTEX_F: &str = "(1,2,3,4,5)";
pub const VERTEX_A: &str = "(2,5)";
pub const VERTEX_S: &str = "(1,2)(3,5,4)";

/// Monodromy around infinity (φ), one (α) and zero (σ), in cycle notation on edge labels.
pub const REFERENCE_PHI: &str = "(1,2,3,4,5)(6,7,8,9,10)";
pub const REFERENCE_ALPHA: &str = "(1,5)(2,8)(4,7)";
pub const REFERENCE_SIGMA: &str = "(2,5,7,6,10,9)(3,8,4)";

fn vertex(s: &str) -> Permutation {
    Permutation::parse_cycles(5, s).expect("valid vertex permutation")
}

fn induced(s: &str) -> Permutation {
    edge_action(&vertex(s), &EdgeLabeling::pentagon_pentagram()).expect("degree 5")
}

pub fn vertex_generators() -> [Permutation; 3] {
    [vertex(VERTEX_S), vertex(VERTEX_A), vertex(VERTEX_F)]
}

/// `σ`, induced by `(1,2)(3,5,4)`.
pub fn sigma() -> Permutation {
    induced(VERTEX_S)
}

/// `α`, induced by `(2,5)`.
pub fn alpha() -> Permutation {
    induced(VERTEX_A)
}

/// `φ`, induced by `(1,2,3,4,5)`.
pub fn phi() -> Permutation {
    induced(VERTEX_F)
}

pub fn generators() -> [Permutation; 3] {
    [sigma(), alpha(), phi()]
}

/// +1 on the pentagon, −1 on the pentagram; its orbit size bounds the
/// number of moments that must vanish.
pub const ORBIT_VECTOR: [i64; 10] = [1, 1, 1, 1, 1, -1, -1, -1, -1, -1];

/// Fan indicator vectors.
pub const REFERENCE_FANS: [[i64; 10]; 5] = [
    [1, 0, 0, 0, 1, 1, 0, 0, 1, 0],
    [1, 1, 0, 0, 0, 0, 1, 0, 0, 1],
    [0, 1, 1, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 1, 0, 0, 1, 0, 1],
];

/// Hamiltonian-cycle difference vectors, signed so that they sum to zero.
pub const REFERENCE_HAMILTONIAN: [[i64; 10]; 6] = [
    [1, -1, 1, -1, 1, -1, 1, 1, -1, -1],
    [1, 1, -1, 1, -1, -1, -1, 1, 1, -1],
    [-1, 1, 1, -1, 1, -1, -1, -1, 1, 1],
    [1, -1, 1, 1, -1, 1, -1, -1, -1, 1],
    [-1, 1, -1, 1, 1, 1, 1, -1, -1, -1],
    [-1, -1, -1, -1, -1, 1, 1, 1, 1, 1],
];

/// Ramification over 0, 1 and ∞.
pub const PASSPORT: [&[usize]; 3] = [&[6, 3, 1], &[2, 2, 2, 1, 1, 1, 1], &[5, 5]];

/// `F₁ = 50000/27 · x⁶(x−1)³(x+1) / (x² + 4x − 1)⁵`, the Belyi function over Q.
pub fn f1() -> RationalFnQ {
    build_candidate(
        Rational::new(50_000, 27).expect("nonzero denominator"),
        Rational::from_integer(4),
        Rational::from_integer(-1),
    )
    .expect("F1 is a valid candidate")
}

/// Second Belyi function with the same passport,
/// `337500 · x⁶(x−1)³(x+1) / (11x² + 4x − 16)⁵`.
pub fn f2() -> RationalFnQ {
    let x = RationalPoly::x();
    let c = |n: i64| Rational::from_integer(n);
    let num = &(&x.pow(6) * &RationalPoly::linear_root(c(1)).pow(3)) * &RationalPoly::linear_root(c(-1));
    let den = RationalPoly::new(vec![c(-16), c(4), c(11)]).pow(5);
    RationalFunction::new(num.scale(&c(337_500)), den).expect("nonzero denominator")
}

pub fn f1_over_field() -> RationalFn {
    f1().map(|c| FieldElem::from_rational(c.clone())).expect("nonzero denominator")
}

/// `x ↦ ((2−√5)x − 1)/((2+√5)x − 1)`, sending the pole `−2−√5` of `F₁` to
/// `0` and `0` to `1`.
pub fn forward_mobius() -> Mobius<FieldElem> {
    let s = FieldElem::sqrt_d();
    let two = FieldElem::from_int(2);
    let one = FieldElem::from_int(1);
    Mobius::new(two.clone() - s.clone(), -one.clone(), two + s, -one).expect("nonsingular")
}

/// `z ↦ (z − 1)/((2+√5)z − (2−√5))`, with `F₁ ∘ this = L`.
pub fn inverse_mobius() -> Mobius<FieldElem> {
    let s = FieldElem::sqrt_d();
    let two = FieldElem::from_int(2);
    let one = FieldElem::from_int(1);
    Mobius::new(one.clone(), -one, two.clone() + s.clone(), s - two).expect("nonsingular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn a_and_b_are_units() {
        // a² + 3a + 1 = 0 and b² − 7b + 1 = 0
        let a = a();
        assert!((a.clone() * a.clone() + a.clone() * FieldElem::from_int(3) + FieldElem::one()).is_zero());
        let b = b();
        assert!((b.clone() * b.clone() - b.clone() * FieldElem::from_int(7) + FieldElem::one()).is_zero());
    }

    #[test]
    fn support_of_l() {
        let l = laurent_l();
        assert_eq!(l.min_degree(), Some(-POLE_ORDER));
        assert_eq!(l.max_degree(), Some(POLE_ORDER));
        assert_eq!(l.coeff(5), k());
        assert_eq!(l.coeff(-5), lowest_coefficient());
        assert!(!lowest_coefficient().is_zero());
    }

    #[test]
    fn l_matches_expanded_product() {
        // independent expansion: multiply the ten linear factors one at a time
        let mut roots = vec![FieldElem::one(); 6];
        roots.extend(vec![a(); 3]);
        roots.push(b());
        let mut coeffs = vec![FieldElem::one()];
        for r in roots {
            let mut next = vec![FieldElem::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1].clone() + c;
                next[i] = next[i].clone() - &(c.clone() * &r);
            }
            coeffs = next;
        }
        let l = laurent_l();
        for (i, c) in coeffs.iter().enumerate() {
            assert_eq!(l.coeff(i as i64 - 5), k() * c.clone());
        }
    }

    #[test]
    fn reference_basis_shape() {
        let basis = reference_basis();
        assert_eq!(basis[0], LaurentPoly::one());
        for (j, q) in basis.iter().enumerate().skip(1) {
            let j = j as i64;
            assert_eq!(q.min_degree(), Some(-j));
            assert_eq!(q.coeff(-j), FieldElem::one());
            assert_eq!(q.span(), 2 * j as u64);
        }
        assert_eq!(basis[4].coeff(1), FieldElem::from_parts(910, 1, 406, 1));
    }

    #[test]
    fn generators_match_reference_cycles() {
        assert_eq!(phi().to_string(), REFERENCE_PHI);
        assert_eq!(alpha().to_string(), REFERENCE_ALPHA);
        assert_eq!(sigma(), Permutation::parse_cycles(10, REFERENCE_SIGMA).unwrap());
    }

    #[test]
    fn computed_fans_match_reference() {
        let fans = EdgeLabeling::pentagon_pentagram().fans();
        for (f, p) in fans.iter().zip(REFERENCE_FANS) {
            assert_eq!(f.as_slice(), p.as_slice());
        }
    }

    #[test]
    fn computed_hamiltonian_vectors_match_reference_up_to_sign() {
        let computed = EdgeLabeling::pentagon_pentagram().hamiltonian_differences();
        for w in REFERENCE_HAMILTONIAN {
            let neg: Vec<i64> = w.iter().map(|x| -x).collect();
            assert!(computed.iter().any(|c| c.as_slice() == w || *c == neg));
        }
    }
}

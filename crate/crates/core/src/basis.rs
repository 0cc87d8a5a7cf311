//! The normalized basis solutions `Q₀ … Q₄`.
//!
//! `Q_j = z^{−j} + s₁z + … + s_j z^j`: the lowest coefficient is one, the
//! coefficients of `z^{−j+1} … z⁰` vanish, and the first `j` moments are
//! zero. The last condition is a `j × j` linear system in `s₁ … s_j`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Number of basis solutions; one per residue class of the lowest degree mod 5.
pub const BASIS_SIZE: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct LinearSystem<T> {
    pub matrix: Matrix<T>,
    pub rhs: Vec<T>,
}

/// Row `i` states `m_i(Q_j) = 0`; column `k` is the unknown coefficient of `z^k`.
pub fn build_qj_system<T: Scalar>(l: &Laurent<T>, j: usize) -> Result<LinearSystem<T>> {
    if !(1..BASIS_SIZE).contains(&j) {
        return Err(Error::Usage(format!("basis index {j} outside 1..=4")));
    }
    let jj = j as i64;
    let mut rows = Vec::with_capacity(j);
    let mut rhs = Vec::with_capacity(j);
    let mut power = Laurent::one();
    for _ in 1..=j {
        power = &power * l;
        // m_i(z^k) = k·[z^{−k}]Lⁱ
        rows.push(
            (1..=jj)
                .map(|k| power.coeff(-k) * T::from_i64(k))
                .collect::<Vec<_>>(),
        );
        rhs.push(-(power.coeff(jj) * T::from_i64(-jj)));
    }
    Ok(LinearSystem {
        matrix: Matrix::from_rows(rows),
        rhs,
    })
}

pub fn gauss_solve<T: Scalar>(sys: &LinearSystem<T>) -> Result<Vec<T>> {
    sys.matrix.solve(&sys.rhs)
}

/// `Q_j` from the solved coefficients `s₁ … s_j`.
pub fn assemble_qj<T: Scalar>(j: usize, solution: &[T]) -> Laurent<T> {
    let mut q = Laurent::z(-(j as i64));
    for (k, s) in solution.iter().enumerate() {
        q.add_term(k as i64 + 1, s.clone());
    }
    q
}

/// `[Q₀, Q₁, Q₂, Q₃, Q₄]`.
pub fn solve_basis<T: Scalar>(l: &Laurent<T>) -> Result<Vec<Laurent<T>>> {
    let mut rest = (1..BASIS_SIZE)
        .into_par_iter()
        .map(|j| {
            let sys = build_qj_system(l, j)?;
            Ok(assemble_qj(j, &gauss_solve(&sys)?))
        })
        .collect::<Result<Vec<_>>>()?;
    rest.insert(0, Laurent::one());
    Ok(rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::{laurent_l, reference_basis};
    use crate::moments::moment;
    use crate::{FieldElem, LaurentPoly};
    use num_traits::{One, Zero};

    #[test]
    fn first_system_gives_q1() {
        let sys = build_qj_system(&laurent_l(), 1).unwrap();
        assert_eq!(gauss_solve(&sys).unwrap(), vec![FieldElem::one()]);
    }

    #[test]
    fn second_system_gives_q2() {
        let sys = build_qj_system(&laurent_l(), 2).unwrap();
        assert_eq!(
            gauss_solve(&sys).unwrap(),
            vec![FieldElem::from_parts(20, 1, 8, 1), FieldElem::from_parts(-9, 1, -4, 1)]
        );
    }

    #[test]
    fn entries_are_monomial_moments() {
        let l = laurent_l();
        let sys = build_qj_system(&l, 3).unwrap();
        for i in 0..3 {
            for k in 0..3 {
                let mono = LaurentPoly::z(k as i64 + 1);
                assert_eq!(sys.matrix[(i, k)], moment(&l, &mono, i as u32 + 1));
            }
            assert_eq!(sys.rhs[i], -moment(&l, &LaurentPoly::z(-3), i as u32 + 1));
        }
    }

    #[test]
    fn out_of_range_index_is_a_usage_error() {
        assert!(matches!(build_qj_system(&laurent_l(), 0), Err(Error::Usage(_))));
        assert!(matches!(build_qj_system(&laurent_l(), 5), Err(Error::Usage(_))));
    }

    #[test]
    fn systems_are_nonsingular() {
        let l = laurent_l();
        for j in 1..=4 {
            assert_eq!(build_qj_system(&l, j).unwrap().matrix.rank(), j);
        }
    }

    #[test]
    fn solved_basis_meets_the_normalization() {
        let l = laurent_l();
        let basis = solve_basis(&l).unwrap();
        assert_eq!(basis[0], LaurentPoly::one());
        for (j, q) in basis.iter().enumerate().skip(1) {
            let j = j as i64;
            assert_eq!(q.coeff(-j), FieldElem::one());
            assert!((-j + 1..=0).all(|k| q.coeff(k).is_zero()));
            assert!((1..=j as u32).all(|i| moment(&l, q, i).is_zero()));
        }
        assert_eq!(basis, reference_basis());
    }
}

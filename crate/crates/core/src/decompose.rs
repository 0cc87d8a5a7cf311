//! Greedy reduction of a Laurent polynomial to `Σ_j (R_j ∘ L)·Q_j` plus a
//! polynomial remainder.
//!
//! Each step cancels the lowest term of what is left: for lowest degree
//! `m = −5k − j` subtract the right multiple of `Lᵏ·Q_j`, whose lowest term
//! sits exactly at `m`. The lowest degree strictly increases, so the loop
//! stops once nothing of negative degree is left. Solutions of the moment
//! problem leave remainder zero.

use crate::basis::BASIS_SIZE;
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::moments::MomentEngine;
use crate::numfield::Quadratic;
use crate::poly::Poly;
use crate::scalar::Scalar;

/// `m = −5k − j` with `0 ≤ j ≤ 4`.
pub fn min_degree_split(m: i64) -> Result<(u32, usize)> {
    if m > 0 {
        return Err(Error::Usage(format!("lowest degree {m} is positive")));
    }
    let pole = BASIS_SIZE as i64;
    let k = (-m) / pole;
    let j = (-m) % pole;
    Ok((k as u32, j as usize))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<T: Scalar> {
    /// `R₀ … R₄`
    pub r_polys: Vec<Poly<T>>,
    /// Part of the input in degrees `≥ 1` left after the reduction.
    pub remainder: Poly<T>,
}

fn check_inputs<T: Scalar>(l: &Laurent<T>, basis: &[Laurent<T>]) -> Result<T> {
    if basis.len() != BASIS_SIZE {
        return Err(Error::DegreeMismatch {
            expected: BASIS_SIZE,
            found: basis.len(),
        });
    }
    let (m, lead) = l
        .lowest()
        .ok_or_else(|| Error::Degenerate("L is zero".into()))?;
    if m != -(BASIS_SIZE as i64) {
        return Err(Error::Usage(format!(
            "L must have a pole of order {BASIS_SIZE} at the origin, found lowest degree {m}"
        )));
    }
    for (j, q) in basis.iter().enumerate() {
        if q.min_degree() != Some(-(j as i64)) {
            return Err(Error::Usage(format!("basis element {j} does not start at z^-{j}")));
        }
    }
    Ok(lead.clone())
}

pub fn decompose<T: Scalar>(q: &Laurent<T>, l: &Laurent<T>, basis: &[Laurent<T>]) -> Result<Decomposition<T>> {
    let lead = check_inputs(l, basis)?;
    let mut r: Vec<Vec<T>> = vec![Vec::new(); BASIS_SIZE];
    let mut powers = vec![Laurent::one()];
    let mut lead_powers = vec![T::one()];
    let mut current = q.clone();
    while let Some(m) = current.min_degree().filter(|&m| m < 0) {
        let (k, j) = min_degree_split(m)?;
        let k = k as usize;
        while powers.len() <= k {
            let next = powers.last().expect("nonempty") * l;
            let next_lead = lead_powers.last().expect("nonempty").clone() * &lead;
            powers.push(next);
            lead_powers.push(next_lead);
        }
        let target = lead_powers[k].clone() * basis[j].lowest().expect("nonzero basis element").1;
        let c = current.lowest().expect("nonzero").1.clone() / target;
        if r[j].len() <= k {
            r[j].resize(k + 1, T::zero());
        }
        r[j][k] = r[j][k].clone() + &c;
        current = &current - &(&powers[k] * &basis[j]).scale(&c);
        assert!(
            current.min_degree().is_none_or(|next| next > m),
            "reduction step did not raise the lowest degree"
        );
    }
    let constant = current.coeff(0);
    if !constant.is_zero() {
        if r[0].is_empty() {
            r[0].push(T::zero());
        }
        r[0][0] = r[0][0].clone() + &constant;
        current.add_term(0, -constant);
    }
    let (remainder, dropped) = current.nonnegative_part();
    debug_assert!(!dropped);
    Ok(Decomposition {
        r_polys: r.into_iter().map(Poly::new).collect(),
        remainder,
    })
}

/// `Σ_j (R_j ∘ L)·Q_j`.
pub fn reconstruct<T: Scalar>(r_polys: &[Poly<T>], basis: &[Laurent<T>], l: &Laurent<T>) -> Laurent<T> {
    r_polys
        .iter()
        .zip(basis)
        .fold(Laurent::zero(), |acc, (r, q)| {
            &acc + &(&Laurent::compose_poly(r, l) * q)
        })
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness<T: Scalar> {
    /// Nonzero polynomial part left after the reduction.
    Remainder(Poly<T>),
    /// Index of the first nonzero moment.
    Moment(u64),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Classification<T: Scalar> {
    Solution(Decomposition<T>),
    NonSolution {
        decomposition: Decomposition<T>,
        witness: Witness<T>,
    },
}

impl<T: Scalar> Classification<T> {
    pub fn is_solution(&self) -> bool {
        matches!(self, Classification::Solution(_))
    }

    pub fn decomposition(&self) -> &Decomposition<T> {
        match self {
            Classification::Solution(d) => d,
            Classification::NonSolution { decomposition, .. } => decomposition,
        }
    }
}

/// Decomposes `q`, then confirms solution-ness with the moment check for
/// orbit size `n`.
pub fn classify<const D: u64>(
    q: &Laurent<Quadratic<D>>,
    l: &Laurent<Quadratic<D>>,
    basis: &[Laurent<Quadratic<D>>],
    engine: &mut MomentEngine<D>,
    n: u64,
) -> Result<Classification<Quadratic<D>>> {
    let decomposition = decompose(q, l, basis)?;
    if !decomposition.remainder.is_zero() {
        let witness = Witness::Remainder(decomposition.remainder.clone());
        return Ok(Classification::NonSolution {
            decomposition,
            witness,
        });
    }
    let report = engine.verify(q, n);
    Ok(match report.first_nonzero_index {
        None => Classification::Solution(decomposition),
        Some(i) => Classification::NonSolution {
            decomposition,
            witness: Witness::Moment(i),
        },
    })
}

//! Exact computer algebra for the Laurent polynomial moment problem
//! `∮_{S¹} Lⁱ dQ = 0`, built around one indecomposable degree-10 Laurent
//! polynomial `L` over Q(√5) whose solutions form a rank-5 module over `C[L]`.
//!
//! The containers ([`Poly`], [`Laurent`], [`Matrix`], [`RationalFunction`])
//! are generic over [`Scalar`]; the aliases below fix the scalar to the
//! field actually used.
//!
//! * [`numfield`] – Q(√d) on top of canonical big rationals
//! * [`laurent`], [`poly`] – Laurent and ordinary polynomial algebra
//! * [`moments`] – residue moments, orbit size, finite verification bound
//! * [`basis`] – the normalized basis solutions Q₀…Q₄
//! * [`decompose`] – greedy reduction of a solution to `Σ (R_j∘L)·Q_j`
//! * [`perm`], [`characters`] – the S₅ edge action and symmetric-group characters
//! * [`belyi`], [`dessin`] – Belyi-function certification and rendering

pub mod basis;
pub mod belyi;
pub mod characters;
pub mod counterexample;
pub mod decompose;
pub mod dessin;
pub mod error;
pub mod laurent;
pub mod linalg;
pub mod moments;
pub mod numfield;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod scalar;

pub use belyi::RationalFunction;
pub use error::{Error, Result};
pub use laurent::Laurent;
pub use linalg::Matrix;
pub use numfield::Quadratic;
pub use poly::Poly;
pub use rational::Rational;
pub use scalar::Scalar;

/// Elements of Q(√5), the coefficient field of `L` and the basis solutions.
pub type FieldElem = Quadratic<5>;
/// Laurent polynomials over Q(√5).
pub type LaurentPoly = Laurent<FieldElem>;
/// Ordinary polynomials over Q(√5).
pub type Polynomial = Poly<FieldElem>;
/// Ordinary polynomials over Q.
pub type RationalPoly = Poly<Rational>;
/// Rational functions over Q(√5).
pub type RationalFn = RationalFunction<FieldElem>;
/// Rational functions over Q.
pub type RationalFnQ = RationalFunction<Rational>;
/// Numeric polynomials for the dessin renderer.
pub type FloatPoly = Poly<f64>;

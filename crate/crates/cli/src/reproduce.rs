//! The eleven end-to-end checks behind `reproduce-all`.

use std::time::Instant;

use moment_forge::basis::{solve_basis, BASIS_SIZE};
use moment_forge::belyi::{build_candidate, h_structure, mobius_substitute, p_of, ramification_profile};
use moment_forge::characters::{factorial, frobenius_count, permutation_character_norm, Partition};
use moment_forge::counterexample::{self as cx, PASSPORT};
use moment_forge::decompose::{decompose, reconstruct};
use moment_forge::dessin::{render_dessin, DEFAULT_SAMPLES};
use moment_forge::linalg::rank_of;
use moment_forge::moments::{orbit_size_n, verification_bound, MomentEngine};
use moment_forge::perm::{
    check_relation, edge_action, group_order, invariant_subspace_check, is_primitive, is_transitive,
    symmetric_group, EdgeLabeling, Permutation,
};
use moment_forge::{
    FieldElem, LaurentPoly, Poly, Polynomial, Rational, RationalFunction, RationalPoly, Result, Scalar,
};
use num_bigint::BigInt;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const ORBIT_SIZE: u64 = 12;
pub const ROUNDTRIP_CASES: usize = 100;
pub const RANDOM_S4_TRIPLES: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

type Check = fn(u64) -> Result<(bool, String)>;

pub const CRITERIA: [(u32, &str, Check); 11] = [
    (1, "basis reproduction", basis_reproduction),
    (2, "moment vanishing", moment_vanishing),
    (3, "orbit size", orbit_size),
    (4, "Frobenius count", frobenius),
    (5, "group facts", group_facts),
    (6, "subspace decomposition", subspaces),
    (7, "Belyi verification", belyi),
    (8, "decomposition roundtrip", roundtrip),
    (9, "rigidity rank", rigidity),
    (10, "Frobenius vs brute force", frobenius_oracle),
    (11, "dessin render", dessin),
];

pub fn run_all(seed: u64) -> Vec<Outcome> {
    CRITERIA
        .iter()
        .map(|&(id, name, check)| {
            let start = Instant::now();
            let (passed, detail) = match check(seed) {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            Outcome {
                id,
                name,
                passed,
                detail,
                elapsed_ms: start.elapsed().as_millis(),
            }
        })
        .collect()
}

pub fn passport() -> Vec<Partition> {
    PASSPORT
        .iter()
        .map(|p| Partition::new(p.to_vec()).expect("valid partition"))
        .collect()
}

fn basis_reproduction(_: u64) -> Result<(bool, String)> {
    let basis = solve_basis(&cx::laurent_l())?;
    // z^5 in the numerator over z^4
    let q4_z5 = basis[4].coeff(1);
    let ok = basis == cx::reference_basis() && q4_z5 == FieldElem::from_parts(910, 1, 406, 1);
    Ok((ok, format!("Q4 numerator z^5 coefficient {q4_z5}")))
}

fn moment_vanishing(_: u64) -> Result<(bool, String)> {
    let mut engine = MomentEngine::new(&cx::laurent_l())?;
    let mut ok = true;
    let mut bounds = Vec::new();
    for q in solve_basis(&cx::laurent_l())? {
        let report = engine.verify(&q, ORBIT_SIZE);
        ok &= report.all_zero && report.checked_upper_bound == verification_bound(&q, ORBIT_SIZE);
        bounds.push(report.checked_upper_bound);
    }
    ok &= bounds.iter().max() == Some(&89);
    Ok((ok, format!("bounds {bounds:?}")))
}

fn orbit_size(_: u64) -> Result<(bool, String)> {
    let n = orbit_size_n(&cx::generators(), &cx::ORBIT_VECTOR)?;
    Ok((n == ORBIT_SIZE as usize, format!("N = {n}")))
}

fn frobenius(_: u64) -> Result<(bool, String)> {
    let count = frobenius_count(&passport())?;
    let ok = count == BigInt::from(25_401_600) && count == BigInt::from(7) * factorial(10);
    Ok((ok, format!("{count} triples")))
}

fn group_facts(_: u64) -> Result<(bool, String)> {
    let reference = [cx::REFERENCE_SIGMA, cx::REFERENCE_ALPHA, cx::REFERENCE_PHI]
        .map(|s| Permutation::parse_cycles(10, s).expect("valid cycles"));
    let [s, a, f] = cx::generators();
    let order = group_order(&[a.clone(), s.clone()])?;
    let gens = [s.clone(), a.clone(), f.clone()];
    let ok = gens == reference
        && check_relation(&gens)?
        && order == 120
        && is_transitive(&gens)?
        && is_primitive(&gens)?;
    Ok((ok, format!("|<alpha, sigma>| = {order}")))
}

fn to_rational(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x)).collect()
}

/// Number of fixed edges of a vertex permutation of cycle type `mu`.
pub fn edge_fixed_points(mu: &Partition) -> i64 {
    edge_action(&mu.representative(), &EdgeLabeling::pentagon_pentagram())
        .expect("degree 5")
        .fixed_points() as i64
}

fn subspaces(_: u64) -> Result<(bool, String)> {
    let lab = EdgeLabeling::pentagon_pentagram();
    let fans = lab.fans();
    let ham: Vec<Vec<i64>> = cx::REFERENCE_HAMILTONIAN.iter().map(|w| w.to_vec()).collect();
    let computed = lab.hamiltonian_differences();
    let same_up_to_sign = computed.len() == ham.len()
        && computed.iter().all(|c| {
            let neg: Vec<i64> = c.iter().map(|x| -x).collect();
            ham.iter().any(|w| *w == *c || *w == neg)
        });
    let sum = |vs: &[Vec<i64>]| (0..10).map(|k| vs.iter().map(|v| v[k]).sum()).collect::<Vec<i64>>();
    let dot = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(a, b)| a * b).sum::<i64>();

    let ones = vec![Rational::from_integer(1); 10];
    let fans_q: Vec<_> = fans.iter().map(|v| to_rational(v)).collect();
    let ham_q: Vec<_> = ham.iter().map(|v| to_rational(v)).collect();
    // fans projected away from the all-ones vector
    let centered: Vec<Vec<Rational>> = fans_q
        .iter()
        .map(|v| v.iter().map(|x| x.clone() - Rational::new(2, 5).expect("nonzero")).collect())
        .collect();
    let gens = cx::generators();
    let dims = [rank_of(std::slice::from_ref(&ones)), rank_of(&centered), rank_of(&ham_q)];
    let all: Vec<Vec<Rational>> = [vec![ones.clone()], centered.clone(), ham_q.clone()].concat();
    let norm = permutation_character_norm(5, edge_fixed_points)?;
    let ok = same_up_to_sign
        && fans == cx::REFERENCE_FANS.iter().map(|v| v.to_vec()).collect::<Vec<_>>()
        && sum(&fans) == vec![2; 10]
        && sum(&ham) == vec![0; 10]
        && rank_of(&fans_q) == 5
        && dims == [1, 4, 5]
        && rank_of(&all) == 10
        && fans.iter().all(|v| ham.iter().all(|w| dot(v, w) == 0))
        && invariant_subspace_check(&gens, &[ones])?
        && invariant_subspace_check(&gens, &centered)?
        && invariant_subspace_check(&gens, &ham_q)?
        && norm == 3;
    Ok((ok, format!("dimensions {dims:?}, <pi,pi> = {norm}")))
}

fn matches<T: Scalar>(f: &RationalFunction<T>) -> Result<bool> {
    let p = ramification_profile(f)?;
    Ok(p.over_zero.parts() == PASSPORT[0]
        && p.over_one.parts() == PASSPORT[1]
        && p.over_infinity.parts() == PASSPORT[2])
}

fn belyi(_: u64) -> Result<(bool, String)> {
    let q = |n: i64, d: i64| Rational::new(n, d).expect("nonzero");
    let l = RationalFunction::from_laurent(&cx::laurent_l())?;
    let f2_normalized = build_candidate(q(337_500, 161_051), q(4, 11), q(-16, 11))?;
    let h = h_structure(q(50_000, 27), q(4, 1), q(-1, 1))?;
    let reference_p = RationalPoly::new([6, -6, 2, 22].map(Rational::from_integer).to_vec());
    let moved = mobius_substitute(&cx::f1_over_field(), &cx::inverse_mobius())?;
    let factored = (&(&Poly::from_roots(&vec![FieldElem::from_int(1); 6]) * &Poly::from_roots(&vec![cx::a(); 3]))
        * &Poly::linear_root(cx::b()))
        .scale(&cx::k());
    let ok = matches(&cx::f1())?
        && matches(&l)?
        && matches(&cx::f2())?
        && cx::f2() == f2_normalized
        && h.p == reference_p
        && p_of(q(4, 1), q(-1, 1))? == reference_p
        && moved == l
        && moved.num() == &factored
        && moved.den() == &Polynomial::monomial(FieldElem::from_int(1), 5);
    Ok((ok, format!("p = {}", h.p)))
}

fn random_field_elem(rng: &mut ChaCha8Rng) -> FieldElem {
    let s = rng.gen_range(1..=4);
    FieldElem::from_parts(rng.gen_range(-5..=5), s, rng.gen_range(-3..=3), s)
}

pub fn random_r_list(rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    (0..BASIS_SIZE)
        .map(|_| {
            let len = rng.gen_range(0..=4);
            Poly::new((0..len).map(|_| random_field_elem(rng)).collect())
        })
        .collect()
}

fn roundtrip(seed: u64) -> Result<(bool, String)> {
    let l = cx::laurent_l();
    let basis = cx::reference_basis();
    let mut engine = MomentEngine::new(&l)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_bound = 0;
    for case in 0..ROUNDTRIP_CASES {
        let r = random_r_list(&mut rng);
        let q: LaurentPoly = reconstruct(&r, &basis, &l);
        let d = decompose(&q, &l, &basis)?;
        let report = engine.verify(&q, ORBIT_SIZE);
        max_bound = max_bound.max(report.checked_upper_bound);
        if d.r_polys != r || !d.remainder.is_zero() || !report.all_zero {
            return Ok((false, format!("case {case} failed")));
        }
    }
    Ok((true, format!("{ROUNDTRIP_CASES} cases, largest bound {max_bound}")))
}

fn rigidity(_: u64) -> Result<(bool, String)> {
    let mut engine = MomentEngine::new(&cx::laurent_l())?;
    let m = engine.moment_matrix(1..=8, 89);
    let rank = m.rank();
    Ok((m.rows() == 89 && rank == 8, format!("{}x{} rank {rank}", m.rows(), m.cols())))
}

/// Pairs `(g₁, g₂)` with `g₁ ∈ C₁`, `g₂ ∈ C₂` and `(g₁g₂)⁻¹ ∈ C₃`.
pub fn brute_force_count(group: &[Permutation], classes: &[Partition; 3]) -> usize {
    let of = |c: &Partition| -> Vec<&Permutation> {
        group
            .iter()
            .filter(|g| Partition::of_permutation(g) == *c)
            .collect()
    };
    let (first, second) = (of(&classes[0]), of(&classes[1]));
    first
        .iter()
        .flat_map(|g| second.iter().map(move |h| g.then(h).inverse()))
        .filter(|g3| Partition::of_permutation(g3) == classes[2])
        .count()
}

fn frobenius_oracle(seed: u64) -> Result<(bool, String)> {
    let group = symmetric_group(4);
    let classes = moment_forge::characters::partitions(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = Vec::new();
    for _ in 0..RANDOM_S4_TRIPLES {
        let triple: [Partition; 3] =
            std::array::from_fn(|_| classes[rng.gen_range(0..classes.len())].clone());
        let exact = frobenius_count(&triple)?;
        let brute = brute_force_count(&group, &triple);
        if exact != BigInt::from(brute) {
            return Ok((false, format!("{triple:?}: {exact} vs {brute}")));
        }
        counts.push(brute);
    }
    Ok((true, format!("counts {counts:?}")))
}

fn dessin(_: u64) -> Result<(bool, String)> {
    let d = render_dessin(&cx::f1(), DEFAULT_SAMPLES, Rational::to_f64)?;
    let placed = [(0.0, 6), (1.0, 3), (-1.0, 1)].iter().all(|&(x, m)| {
        d.black_vertices
            .iter()
            .any(|v| (v.position - Complex::new(x, 0.0)).norm() < 1e-9 && v.degree == m)
    });
    let black = d.black_degrees()?;
    let white = d.white_degrees()?;
    let ok = d.arcs.len() == 10 && black.parts() == PASSPORT[0] && white.parts() == PASSPORT[1] && placed;
    Ok((ok, format!("{} arcs, black {black}, white {white}", d.arcs.len())))
}

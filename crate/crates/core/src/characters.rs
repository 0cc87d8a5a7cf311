//! Irreducible characters of the symmetric groups via the
//! Murnaghan–Nakayama rule, and the Frobenius count of tuples
//! `(g₁, …, g_k)` with `g_i ∈ C_i` and `g₁⋯g_k = 1`:
//!
//! `N = |C₁|⋯|C_k| / |G| · Σ_χ χ(C₁)⋯χ(C_k) / χ(1)^{k−2}`.
//!
//! Partitions are encoded as beta-sets: with `n` beads, part `λ_i` sits at
//! position `λ_i + n − i`. Removing a border strip of length `r` moves one
//! bead down by `r` onto an empty position; the sign is the parity of the
//! beads jumped over.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rational::Rational;

/// Largest `n` handled; beta-sets live in a `u64`.
pub const MAX_N: usize = 32;

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts; rejects zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// `(1ⁿ)`, the class of the identity.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Cycle type of a permutation.
    pub fn of_permutation(p: &Permutation) -> Self {
        Partition {
            parts: p.cycle_type(),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(part, multiplicity)` in decreasing order of part.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer, `Π i^{a_i}·a_i!`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .map(|(i, a)| BigInt::from(i).pow(a as u32) * factorial(a))
            .product()
    }

    /// Exponent notation such as `6^1 3^1 1^1`.
    pub fn exponent_form(&self) -> String {
        self.multiplicities()
            .into_iter()
            .map(|(p, m)| format!("{p}^{m}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// A permutation with this cycle type: consecutive points in each cycle.
    pub fn representative(&self) -> Permutation {
        let n = self.n();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in &self.parts {
            for i in 0..len {
                images[start + i] = start + (i + 1) % len;
            }
            start += len;
        }
        Permutation::from_images(images).expect("cycles are disjoint")
    }

    /// Hook-length formula.
    pub fn dimension(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks *= (row - j) + (conj.parts[j] - i) - 1;
            }
        }
        factorial(self.n()) / hooks
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..width)
                .map(|j| self.parts.iter().filter(|&&p| p > j).count())
                .collect(),
        }
    }

    fn beta_mask(&self, beads: usize) -> u64 {
        (0..beads).fold(0u64, |mask, i| {
            let part = self.parts.get(i).copied().unwrap_or(0);
            mask | 1 << (part + beads - 1 - i)
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `6,3,1`, `(6,3,1)` or exponent form `2^3 1^4`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::Parse(format!("cannot read partition `{s}`"));
        let mut parts = Vec::new();
        if body.contains('^') {
            for tok in body.split_whitespace() {
                let (p, m) = tok.split_once('^').ok_or_else(bad)?;
                let p: usize = p.parse().map_err(|_| bad())?;
                let m: usize = m.parse().map_err(|_| bad())?;
                parts.extend(std::iter::repeat_n(p, m));
            }
        } else {
            for tok in body.split(',').filter(|t| !t.trim().is_empty()) {
                parts.push(tok.trim().parse().map_err(|_| bad())?);
            }
        }
        Partition::new(parts)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// All partitions of `n`, in decreasing lexicographic order: `(n)` first,
/// `(1ⁿ)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Character values on one fixed class, memoized over intermediate shapes.
pub struct MnEvaluator {
    class: Vec<usize>,
    beads: usize,
    memo: HashMap<(u64, usize), i64>,
}

impl MnEvaluator {
    pub fn new(class: &Partition) -> Result<Self> {
        if class.n() > MAX_N {
            return Err(Error::Usage(format!("n = {} exceeds {MAX_N}", class.n())));
        }
        Ok(MnEvaluator {
            class: class.parts.clone(),
            beads: class.n(),
            memo: HashMap::new(),
        })
    }

    /// `χ_λ` on the class.
    pub fn eval(&mut self, lambda: &Partition) -> Result<i64> {
        if lambda.n() != self.beads {
            return Err(Error::DegreeMismatch {
                expected: self.beads,
                found: lambda.n(),
            });
        }
        Ok(self.rec(lambda.beta_mask(self.beads), 0))
    }

    fn rec(&mut self, mask: u64, idx: usize) -> i64 {
        if idx == self.class.len() {
            return 1;
        }
        if let Some(&v) = self.memo.get(&(mask, idx)) {
            return v;
        }
        let r = self.class[idx];
        let mut total = 0i64;
        let mut beads = mask;
        while beads != 0 {
            let b = beads.trailing_zeros() as usize;
            beads &= beads - 1;
            if b < r || mask & (1 << (b - r)) != 0 {
                continue;
            }
            let between = mask & ((1u64 << b) - 1) & !((1u64 << (b - r + 1)) - 1);
            let sign = if between.count_ones().is_multiple_of(2) { 1 } else { -1 };
            let moved = (mask & !(1 << b)) | 1 << (b - r);
            total += sign * self.rec(moved, idx + 1);
        }
        self.memo.insert((mask, idx), total);
        total
    }
}

/// `χ_λ(μ)`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    MnEvaluator::new(mu)?.eval(lambda)
}

/// `n! / z_μ`.
pub fn class_size(mu: &Partition) -> BigInt {
    factorial(mu.n()) / mu.z()
}

fn common_n(classes: &[Partition]) -> Result<usize> {
    let n = classes
        .first()
        .map(Partition::n)
        .ok_or_else(|| Error::Usage("no classes given".into()))?;
    if let Some(c) = classes.iter().find(|c| c.n() != n) {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: c.n(),
        });
    }
    Ok(n)
}

/// Contribution of each irreducible character to the Frobenius count, in
/// the order of [`partitions`]. The contributions sum to the count.
pub fn frobenius_terms(classes: &[Partition]) -> Result<Vec<(Partition, Rational)>> {
    let n = common_n(classes)?;
    let k = classes.len() as i64;
    let prefactor = Rational::new(
        classes.iter().map(class_size).product::<BigInt>(),
        factorial(n),
    )?;
    let mut evaluators = classes
        .iter()
        .map(MnEvaluator::new)
        .collect::<Result<Vec<_>>>()?;
    partitions(n)
        .into_iter()
        .map(|lambda| {
            let mut product = BigInt::one();
            for ev in evaluators.iter_mut() {
                product *= ev.eval(&lambda)?;
            }
            let dim = Rational::from_integer(lambda.dimension());
            let weight = if k >= 2 {
                dim.pow((k - 2) as u32).recip()?
            } else {
                dim.pow((2 - k) as u32)
            };
            let term = &(&prefactor * &Rational::from_integer(product)) * &weight;
            Ok((lambda, term))
        })
        .collect()
}

/// Number of tuples `(g₁, …, g_k)`, `g_i ∈ C_i`, whose left-to-right
/// product is the identity.
pub fn frobenius_count(classes: &[Partition]) -> Result<BigInt> {
    let total: Rational = frobenius_terms(classes)?.into_iter().map(|(_, t)| t).sum();
    assert!(
        total.is_integer() && !total.is_negative(),
        "Frobenius sum {total} is not a nonnegative integer"
    );
    Ok(total.numer().clone())
}

/// Multiplicity of each irreducible in a permutation character of `S_n`,
/// given the number of fixed points on each class. Errors if a
/// multiplicity is not an integer.
pub fn permutation_character_multiplicities(
    n: usize,
    fixed_points: impl Fn(&Partition) -> i64,
) -> Result<Vec<(Partition, i64)>> {
    let classes = partitions(n);
    let fixes: Vec<i64> = classes.iter().map(&fixed_points).collect();
    let order = Rational::from_integer(factorial(n));
    let mut out = Vec::new();
    let mut evaluators = classes
        .iter()
        .map(MnEvaluator::new)
        .collect::<Result<Vec<_>>>()?;
    for lambda in partitions(n) {
        let mut acc = BigInt::zero();
        for ((mu, ev), fix) in classes.iter().zip(evaluators.iter_mut()).zip(&fixes) {
            acc += class_size(mu) * fix * ev.eval(&lambda)?;
        }
        let m = Rational::from_integer(acc) / order.clone();
        if !m.is_integer() {
            return Err(Error::Degenerate(format!(
                "multiplicity of {lambda} is {m}, not an integer"
            )));
        }
        let m = i64::try_from(m.numer().clone())
            .map_err(|_| Error::Degenerate("multiplicity overflow".into()))?;
        out.push((lambda, m));
    }
    Ok(out)
}

/// `⟨π, π⟩ = (1/n!) Σ_g fix(g)²`, the number of orbits on ordered pairs.
pub fn permutation_character_norm(n: usize, fixed_points: impl Fn(&Partition) -> i64) -> Result<i64> {
    let total: BigInt = partitions(n)
        .iter()
        .map(|mu| {
            let f = fixed_points(mu);
            class_size(mu) * f * f
        })
        .sum();
    let norm = Rational::new(total, factorial(n))?;
    if !norm.is_integer() || norm.numer().is_negative() {
        return Err(Error::Degenerate(format!("⟨π,π⟩ = {norm}")));
    }
    i64::try_from(norm.numer().clone()).map_err(|_| Error::Degenerate("norm overflow".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{edge_action, symmetric_group, EdgeLabeling};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("2^3 1^4"), p("2,2,2,1,1,1,1"));
        assert_eq!(p("(1,3,6)").to_string(), "(6,3,1)");
        assert_eq!(p("6,3,1").exponent_form(), "6^1 3^1 1^1");
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts_and_order() {
        let counts: Vec<usize> = (1..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let p4 = partitions(4);
        assert_eq!(p4.first().unwrap(), &p("4"));
        assert_eq!(p4.last().unwrap(), &Partition::ones(4));
        assert!(p4.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn special_characters() {
        let trivial = p("10");
        for mu in partitions(10) {
            assert_eq!(mn_character(&trivial, &mu).unwrap(), 1);
        }
        assert_eq!(mn_character(&Partition::ones(10), &p("5,5")).unwrap(), 1);
        assert_eq!(mn_character(&Partition::ones(10), &p("2,1,1,1,1,1,1,1,1")).unwrap(), -1);
        assert!(mn_character(&p("3"), &p("2,1,1")).is_err());
    }

    #[test]
    fn dimensions_match_hook_lengths_and_square_sum() {
        for n in 1..=10 {
            let mut sum = BigInt::zero();
            for lambda in partitions(n) {
                let chi = mn_character(&lambda, &Partition::ones(n)).unwrap();
                assert_eq!(BigInt::from(chi), lambda.dimension(), "{lambda}");
                sum += BigInt::from(chi * chi);
            }
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&p("5,5")), BigInt::from(72_576));
        assert_eq!(class_size(&Partition::ones(10)), BigInt::one());
        assert_eq!(class_size(&p("2,1,1,1,1,1,1,1,1")), BigInt::from(45));
        let total: BigInt = partitions(7).iter().map(class_size).sum();
        assert_eq!(total, factorial(7));
    }

    /// `Σ_λ χ_λ(a)·χ_λ(b) = z_a` if `a = b`, else 0.
    #[test]
    fn column_orthogonality() {
        for n in [3, 4, 5, 6] {
            let classes = partitions(n);
            for a in &classes {
                for b in &classes {
                    let s: i64 = partitions(n)
                        .iter()
                        .map(|l| mn_character(l, a).unwrap() * mn_character(l, b).unwrap())
                        .sum();
                    let expected = if a == b { a.z() } else { BigInt::zero() };
                    assert_eq!(BigInt::from(s), expected);
                }
            }
        }
    }

    fn brute_force_pairs(classes: &[Partition; 3]) -> u64 {
        let n = classes[0].n();
        let group = symmetric_group(n);
        let mut count = 0;
        for g in group.iter().filter(|g| Partition::of_permutation(g) == classes[0]) {
            for h in group.iter().filter(|h| Partition::of_permutation(h) == classes[1]) {
                let third = g.then(h).inverse();
                if Partition::of_permutation(&third) == classes[2] {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn frobenius_small_cases() {
        let id = Partition::ones(10);
        assert_eq!(frobenius_count(&[id.clone(), id.clone(), id]).unwrap(), BigInt::one());
        let s3 = [p("2,1"), p("2,1"), p("3")];
        assert_eq!(frobenius_count(&s3).unwrap(), BigInt::from(brute_force_pairs(&s3)));
        assert_eq!(frobenius_count(&s3).unwrap(), BigInt::from(6));
        assert!(frobenius_count(&[p("2,1"), p("2,2")]).is_err());
    }

    #[test]
    fn frobenius_matches_enumeration_on_all_s4_triples() {
        let classes = partitions(4);
        for a in &classes {
            for b in &classes {
                for c in &classes {
                    let t = [a.clone(), b.clone(), c.clone()];
                    assert_eq!(frobenius_count(&t).unwrap(), BigInt::from(brute_force_pairs(&t)), "{t:?}");
                }
            }
        }
    }

    #[test]
    fn frobenius_monodromy_passport() {
        let classes = [p("6,3,1"), p("2^3 1^4"), p("5,5")];
        let count = frobenius_count(&classes).unwrap();
        assert_eq!(count, BigInt::from(25_401_600u64));
        assert_eq!(count, factorial(10) * 7);
    }

    #[test]
    fn random_s4_triples_with_seeded_rng() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let classes = partitions(4);
        for _ in 0..5 {
            let t = [
                classes.choose(&mut rng).unwrap().clone(),
                classes.choose(&mut rng).unwrap().clone(),
                classes.choose(&mut rng).unwrap().clone(),
            ];
            assert_eq!(frobenius_count(&t).unwrap(), BigInt::from(brute_force_pairs(&t)));
        }
    }

    #[test]
    fn edge_action_character() {
        let lab = EdgeLabeling::pentagon_pentagram();
        let fix = |mu: &Partition| edge_action(&mu.representative(), &lab).unwrap().fixed_points() as i64;
        let mults = permutation_character_multiplicities(5, fix).unwrap();
        let get = |s: &str| mults.iter().find(|(l, _)| *l == p(s)).unwrap().1;
        assert_eq!(get("5"), 1);
        assert_eq!(get("4,1"), 1);
        assert_eq!(get("3,2"), 1);
        let degree: i64 = mults.iter().map(|(l, m)| m * i64::try_from(l.dimension()).unwrap()).sum();
        assert_eq!(degree, 10);
        let squares: i64 = mults.iter().map(|(_, m)| m * m).sum();
        assert_eq!(permutation_character_norm(5, fix).unwrap(), squares);
        assert_eq!(squares, 3);
        // brute force over all 120 elements
        let brute: usize = symmetric_group(5)
            .iter()
            .map(|g| edge_action(g, &lab).unwrap().fixed_points().pow(2))
            .sum();
        assert_eq!(brute / 120, 3);
    }

    proptest! {
        #[test]
        fn representative_has_the_cycle_type(parts in prop::collection::vec(1usize..5, 1..5)) {
            let mu = Partition::new(parts).unwrap();
            prop_assert_eq!(Partition::of_permutation(&mu.representative()), mu);
        }
    }
}

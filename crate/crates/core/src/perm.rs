//! Permutations of `{1..n}` and the small amount of permutation-group
//! machinery needed for the S₅ edge action: closure, orbits, stabilizer
//! chains, block systems and invariant subspaces of the permutation module.
//!
//! Products compose left to right: `a * b` applies `a` first, so the
//! monodromy relation reads `σ * α * φ == identity`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::rank_of;
use crate::rational::Rational;

/// A bijection of `{1..n}`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 0-based images; rejects non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    /// From 1-based cycles on `{1..n}`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (idx, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::Parse(format!("point {p} outside 1..{n}")));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::Parse(format!("point {p} repeated")));
                }
                let next = cycle[(idx + 1) % cycle.len()];
                images[p - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1,5)(2,8)(4,7)` on `{1..n}`; `()` is
    /// the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("malformed cycle notation `{s}`")))?;
            let (inner, tail) = body;
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad point `{t}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = tail;
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.degree()), |acc, _| acc.then(self))
    }

    /// Disjoint cycles (0-based), each starting at its smallest point,
    /// fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths including fixed points, weakly decreasing.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let fixed = self.degree() - lens.iter().sum::<usize>();
        lens.extend(std::iter::repeat_n(1, fixed));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &j)| *i == j).count()
    }

    /// Coordinate action on vectors: `(g·v)[g(i)] = v[i]`.
    pub fn act_on<T: Clone>(&self, v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.images[i]] = x.clone();
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [S{}]", self.degree())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Cycle notation with the degree inferred as the largest point named.
    fn from_str(s: &str) -> Result<Self> {
        let n = s
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0);
        Self::parse_cycles(n, s)
    }
}

fn common_degree(gens: &[Permutation]) -> Result<usize> {
    let n = gens.first().map_or(0, Permutation::degree);
    match gens.iter().find(|g| g.degree() != n) {
        Some(g) => Err(Error::DegreeMismatch {
            expected: n,
            found: g.degree(),
        }),
        None => Ok(n),
    }
}

/// Orbit of a 0-based point under the group generated by `gens`, in BFS order.
pub fn orbit(gens: &[Permutation], point: usize) -> Vec<usize> {
    let mut seen = HashSet::from([point]);
    let mut order = vec![point];
    let mut queue = VecDeque::from([point]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.apply(p);
            if seen.insert(q) {
                order.push(q);
                queue.push_back(q);
            }
        }
    }
    order
}

pub fn is_transitive(gens: &[Permutation]) -> Result<bool> {
    let n = common_degree(gens)?;
    Ok(n <= 1 || orbit(gens, 0).len() == n)
}

/// Orbit of an integer vector under coordinate permutation.
pub fn vector_orbit(gens: &[Permutation], v: &[i64]) -> Result<HashSet<Vec<i64>>> {
    let n = common_degree(gens)?;
    if !gens.is_empty() && v.len() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: v.len(),
        });
    }
    let mut seen = HashSet::from([v.to_vec()]);
    let mut queue = VecDeque::from([v.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let image = g.act_on(&w);
            if !seen.contains(&image) {
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    Ok(seen)
}

/// Every element of the generated group, by closure. Only for small groups.
pub fn enumerate_group(gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let n = common_degree(gens)?;
    let id = Permutation::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.then(g);
            if seen.insert(q.clone()) {
                out.push(q.clone());
                queue.push_back(q);
            }
        }
    }
    Ok(out)
}

struct Level {
    base: usize,
    /// generators added at this level; the level's group uses these plus all deeper ones
    own: Vec<Permutation>,
    /// `transversal[b]` maps the base point to `b`
    transversal: HashMap<usize, Permutation>,
}

/// A base and strong generating set built by the deterministic
/// Schreier–Sims algorithm.
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(gens: &[Permutation]) -> Result<Self> {
        let degree = common_degree(gens)?;
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in gens.iter().filter(|g| !g.is_identity()) {
            chain.add_generator(0, g.clone());
        }
        chain.complete();
        Ok(chain)
    }

    fn level_gens(&self, i: usize) -> Vec<Permutation> {
        self.levels[i..]
            .iter()
            .flat_map(|l| l.own.iter().cloned())
            .collect()
    }

    fn rebuild_transversal(&mut self, i: usize) {
        let gens = self.level_gens(i);
        let base = self.levels[i].base;
        let mut transversal = HashMap::from([(base, Permutation::identity(self.degree))]);
        let mut queue = VecDeque::from([base]);
        while let Some(p) = queue.pop_front() {
            let up = transversal[&p].clone();
            for g in &gens {
                let q = g.apply(p);
                if let std::collections::hash_map::Entry::Vacant(e) = transversal.entry(q) {
                    e.insert(up.then(g));
                    queue.push_back(q);
                }
            }
        }
        self.levels[i].transversal = transversal;
    }

    fn add_generator(&mut self, level: usize, g: Permutation) {
        if level == self.levels.len() {
            let base = (0..self.degree)
                .find(|&p| g.apply(p) != p)
                .expect("nonidentity generator moves a point");
            self.levels.push(Level {
                base,
                own: Vec::new(),
                transversal: HashMap::new(),
            });
        }
        self.levels[level].own.push(g);
        for i in 0..=level {
            self.rebuild_transversal(i);
        }
    }

    /// Sifts from `start`; returns the residue and the level where it stopped.
    fn sift(&self, mut h: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let b = h.apply(level.base);
            match level.transversal.get(&b) {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        let depth = self.levels.len();
        (h, depth)
    }

    fn complete(&mut self) {
        'restart: loop {
            for i in (0..self.levels.len()).rev() {
                let gens = self.level_gens(i);
                let points: Vec<(usize, Permutation)> = self.levels[i]
                    .transversal
                    .iter()
                    .map(|(&b, u)| (b, u.clone()))
                    .collect();
                for (b, ub) in &points {
                    for x in &gens {
                        let target = x.apply(*b);
                        let back = self.levels[i].transversal[&target].inverse();
                        let schreier = ub.then(x).then(&back);
                        if schreier.is_identity() {
                            continue;
                        }
                        let (res, at) = self.sift(schreier, i + 1);
                        if !res.is_identity() {
                            self.add_generator(at, res);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.transversal.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.orbit_sizes().iter().map(|&s| s as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g.clone(), 0).0.is_identity()
    }
}

pub fn group_order(gens: &[Permutation]) -> Result<u128> {
    Ok(StabilizerChain::new(gens)?.order())
}

/// Whether the left-to-right product of the permutations is the identity.
pub fn check_relation(perms: &[Permutation]) -> Result<bool> {
    let n = common_degree(perms)?;
    let prod = perms
        .iter()
        .fold(Permutation::identity(n), |acc, p| acc.then(p));
    Ok(prod.is_identity())
}

/// The finest block system in which `a` and `b` share a block (0-based points).
pub fn minimal_block_system(gens: &[Permutation], a: usize, b: usize) -> Vec<Vec<usize>> {
    let n = gens.first().map_or(0, Permutation::degree);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = VecDeque::new();
    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
    if ra != rb {
        parent[rb] = ra;
        queue.push_back((a, b));
    }
    while let Some((x, y)) = queue.pop_front() {
        for g in gens {
            let (gx, gy) = (g.apply(x), g.apply(y));
            let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
            if rx != ry {
                parent[ry] = rx;
                queue.push_back((gx, gy));
            }
        }
    }
    let mut blocks: HashMap<usize, Vec<usize>> = HashMap::new();
    for p in 0..n {
        let r = find(&mut parent, p);
        blocks.entry(r).or_default().push(p);
    }
    let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
    out.sort();
    out
}

/// Nontrivial block systems found by seeding with each pair `{first point, x}`.
/// A transitive group is primitive iff this is empty.
pub fn find_blocks(gens: &[Permutation]) -> Result<Vec<Vec<Vec<usize>>>> {
    let n = common_degree(gens)?;
    let mut systems = BTreeSet::new();
    for x in 1..n {
        let sys = minimal_block_system(gens, 0, x);
        if sys.len() > 1 {
            systems.insert(sys);
        }
    }
    Ok(systems.into_iter().collect())
}

pub fn is_primitive(gens: &[Permutation]) -> Result<bool> {
    Ok(is_transitive(gens)? && find_blocks(gens)?.is_empty())
}

/// Whether the rational span of `spanning` is mapped into itself by every
/// generator, decided by exact rank comparison.
pub fn invariant_subspace_check(gens: &[Permutation], spanning: &[Vec<Rational>]) -> Result<bool> {
    let n = common_degree(gens)?;
    if let Some(v) = spanning.iter().find(|v| v.len() != n) {
        return Err(Error::DegreeMismatch {
            expected: n,
            found: v.len(),
        });
    }
    let base_rank = rank_of(spanning);
    for g in gens {
        for v in spanning {
            let mut extended = spanning.to_vec();
            extended.push(g.act_on(v));
            if rank_of(&extended) != base_rank {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bijection between labels `1..=10` and the edges of K₅ (vertices `1..=5`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabeling {
    edges: Vec<(usize, usize)>,
}

impl EdgeLabeling {
    /// Labels 1–5 run around the pentagon `{i, i+1}`, labels 6–10 around the
    /// pentagram `{i, i+2}`.
    pub fn pentagon_pentagram() -> Self {
        let mut edges = Vec::with_capacity(10);
        for step in [1, 2] {
            for i in 1..=5 {
                let j = (i - 1 + step) % 5 + 1;
                edges.push((i.min(j), i.max(j)));
            }
        }
        EdgeLabeling { edges }
    }

    /// Any bijective labeling, given as the edge of label `1`, `2`, …
    pub fn new(edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b || !(1..=5).contains(&a) || !(1..=5).contains(&b) {
                return Err(Error::Parse(format!("({a},{b}) is not an edge of K5")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::Parse(format!("edge {e:?} labeled twice")));
            }
            normalized.push(e);
        }
        if normalized.len() != 10 {
            return Err(Error::DegreeMismatch {
                expected: 10,
                found: normalized.len(),
            });
        }
        Ok(EdgeLabeling { edges: normalized })
    }

    /// Endpoints of a 1-based label.
    pub fn edge(&self, label: usize) -> (usize, usize) {
        self.edges[label - 1]
    }

    /// 1-based label of an unordered pair.
    pub fn label(&self, a: usize, b: usize) -> usize {
        let e = (a.min(b), a.max(b));
        self.edges
            .iter()
            .position(|&x| x == e)
            .expect("every pair of distinct vertices is labeled")
            + 1
    }

    /// Indicator vectors of the fans (edges at vertex `i`), `i = 1..5`.
    pub fn fans(&self) -> Vec<Vec<i64>> {
        (1..=5)
            .map(|v| {
                self.edges
                    .iter()
                    .map(|&(a, b)| i64::from(a == v || b == v))
                    .collect()
            })
            .collect()
    }

    /// The six complementary pairs of Hamiltonian cycles of K₅, each as a
    /// ±1 vector (+1 on one cycle, −1 on its complement). The cycle through
    /// the pentagon edge `{1,2}` gets the + sign.
    pub fn hamiltonian_differences(&self) -> Vec<Vec<i64>> {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut out = Vec::new();
        // cycles 1 → p1 → p2 → p3 → p4 → 1
        let rest = [2usize, 3, 4, 5];
        for perm in permutations_of(&rest) {
            let order: Vec<usize> = std::iter::once(1).chain(perm).collect();
            let mut v = vec![-1i64; 10];
            for k in 0..5 {
                let l = self.label(order[k], order[(k + 1) % 5]);
                v[l - 1] = 1;
            }
            if v[self.label(1, 2) - 1] != 1 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
            if seen.insert(v.clone()) {
                out.push(v);
            }
        }
        out
    }
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Every permutation of `{1..n}`, for brute-force checks on small `n`.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    let items: Vec<usize> = (0..n).collect();
    permutations_of(&items)
        .into_iter()
        .map(|images| Permutation { images })
        .collect()
}

/// The permutation of edge labels induced by a permutation of the five vertices.
pub fn edge_action(s: &Permutation, labeling: &EdgeLabeling) -> Result<Permutation> {
    if s.degree() != 5 {
        return Err(Error::DegreeMismatch {
            expected: 5,
            found: s.degree(),
        });
    }
    let images = (1..=10)
        .map(|u| {
            let (a, b) = labeling.edge(u);
            labeling.label(s.apply(a - 1) + 1, s.apply(b - 1) + 1) - 1
        })
        .collect();
    Permutation::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn cycle_notation_round_trip() {
        let a = p(10, "(1,5)(2,8)(4,7)");
        assert_eq!(a.to_string(), "(1,5)(2,8)(4,7)");
        assert_eq!(p(10, "()").to_string(), "()");
        assert_eq!(p(10, "(2,5,7,6,10,9)(3,8,4)").to_string(), "(2,5,7,6,10,9)(3,8,4)");
        assert_eq!(p(10, "(8,4,3)").to_string(), "(3,8,4)");
        assert!(Permutation::parse_cycles(5, "(1,2)(2,3)").is_err());
        assert!(Permutation::parse_cycles(5, "(1,6)").is_err());
        assert!(Permutation::parse_cycles(5, "(1,2").is_err());
        assert_eq!("(1,2,3)".parse::<Permutation>().unwrap().degree(), 3);
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = p(3, "(1,2)");
        let b = p(3, "(2,3)");
        // 1 → 2 → 3
        assert_eq!((&a * &b).apply(0), 2);
        assert_eq!(a.then(&a.inverse()), Permutation::identity(3));
        assert_eq!(p(3, "(1,2,3)").pow(3), Permutation::identity(3));
    }

    #[test]
    fn pentagon_labeling() {
        let lab = EdgeLabeling::pentagon_pentagram();
        assert_eq!(lab.edge(1), (1, 2));
        assert_eq!(lab.edge(5), (1, 5));
        assert_eq!(lab.edge(6), (1, 3));
        assert_eq!(lab.edge(9), (1, 4));
        assert_eq!(lab.edge(10), (2, 5));
        assert_eq!(lab.fans()[0], vec![1, 0, 0, 0, 1, 1, 0, 0, 1, 0]);
        assert_eq!(lab.hamiltonian_differences().len(), 6);
    }

    #[test]
    fn orders() {
        assert_eq!(group_order(&[Permutation::identity(4)]).unwrap(), 1);
        let s10 = [p(10, "(1,2)"), p(10, "(1,2,3,4,5,6,7,8,9,10)")];
        assert_eq!(group_order(&s10).unwrap(), 3_628_800);
        let a5 = [p(5, "(1,2,3)"), p(5, "(1,2,3,4,5)")];
        assert_eq!(group_order(&a5).unwrap(), 60);
        let c4 = [p(4, "(1,2,3,4)")];
        assert_eq!(group_order(&c4).unwrap(), 4);
        // dihedral group of the square
        let d4 = [p(4, "(1,2,3,4)"), p(4, "(1,3)")];
        assert_eq!(group_order(&d4).unwrap(), 8);
        assert_eq!(enumerate_group(&d4).unwrap().len(), 8);
    }

    #[test]
    fn chain_membership() {
        let d4 = [p(4, "(1,2,3,4)"), p(4, "(1,3)")];
        let chain = StabilizerChain::new(&d4).unwrap();
        assert!(chain.contains(&p(4, "(2,4)")));
        assert!(!chain.contains(&p(4, "(1,2)")));
    }

    #[test]
    fn transitivity_and_blocks() {
        let phi = p(10, "(1,2,3,4,5)(6,7,8,9,10)");
        assert!(!is_transitive(&[phi]).unwrap());
        let disjoint = [p(6, "(1,2)"), p(6, "(3,4)"), p(6, "(5,6)")];
        assert!(!is_transitive(&disjoint).unwrap());
        let d4 = [p(4, "(1,2,3,4)"), p(4, "(1,3)")];
        assert_eq!(find_blocks(&d4).unwrap(), vec![vec![vec![0, 2], vec![1, 3]]]);
        assert!(!is_primitive(&d4).unwrap());
        let s4 = [p(4, "(1,2)"), p(4, "(1,2,3,4)")];
        assert!(is_primitive(&s4).unwrap());
    }

    #[test]
    fn degree_mismatch_is_reported() {
        let gens = [p(3, "(1,2)"), p(4, "(1,2)")];
        assert!(matches!(group_order(&gens), Err(Error::DegreeMismatch { .. })));
        assert!(vector_orbit(&[p(3, "(1,2)")], &[1, 2]).is_err());
    }

    #[test]
    fn vector_orbits() {
        let id = Permutation::identity(10);
        let v = [1, 1, 1, 1, 1, -1, -1, -1, -1, -1];
        assert_eq!(vector_orbit(&[id], &v).unwrap().len(), 1);
        let s10 = [p(10, "(1,2)"), p(10, "(1,2,3,4,5,6,7,8,9,10)")];
        assert_eq!(vector_orbit(&s10, &v).unwrap().len(), 252);
    }

    fn perm5() -> impl Strategy<Value = Permutation> {
        Just((0..5usize).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn edge_action_is_a_homomorphism(s in perm5(), t in perm5()) {
            let lab = EdgeLabeling::pentagon_pentagram();
            let lhs = edge_action(&(&s * &t), &lab).unwrap();
            let rhs = &edge_action(&s, &lab).unwrap() * &edge_action(&t, &lab).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

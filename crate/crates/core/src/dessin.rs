//! Numeric pictures of `F⁻¹([0,1])` for a Belyi function `F`.
//!
//! The segment is sampled at `t = k/samples`, `0 < k < samples`; at each `t`
//! the `deg F` roots of `num(F) − t·den(F)` are found by Aberth iteration and
//! chained to their nearest neighbours at the next sample. Each chain is one
//! edge of the dessin. Vertex positions come from the exact squarefree
//! factors of `num(F)` and `num(F − 1)`, so multiple roots are never solved
//! numerically. Chain ends are walked toward `t = 0` and `t = 1` by halving
//! until the nearest-vertex census matches those multiplicities.

use std::fmt::Write as _;
use std::io;

use num_complex::Complex;
use num_traits::Float;
use rayon::prelude::*;

use crate::belyi::{ramification_profile, RationalFunction};
use crate::characters::Partition;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub type Point = Complex<f64>;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 500;
pub const DEFAULT_SAMPLES: usize = 200;
/// Bisection depth when two roots are too close to match unambiguously.
const MAX_REFINE: u32 = 8;
/// Halvings of the distance to 0 or 1 while walking chain ends onto vertices.
const MAX_APPROACH: u32 = 40;

pub fn roots_numeric<F: Float + Scalar>(p: &Poly<F>, tol: F) -> Result<Vec<Complex<F>>> {
    roots_numeric_with(p, tol, MAX_ITERATIONS)
}

/// Aberth–Ehrlich iteration started on a circle around the root centroid.
/// Stops once every Newton correction `|p(r)/p′(r)|` is below `tol`.
pub fn roots_numeric_with<F: Float + Scalar>(p: &Poly<F>, tol: F, max_iterations: usize) -> Result<Vec<Complex<F>>> {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return Err(Error::Degenerate("root finding needs degree at least 1".into())),
    };
    let lead = *p.leading().expect("nonzero");
    let a: Vec<F> = p.coeffs().iter().map(|&c| c / lead).collect();
    if n == 1 {
        return Ok(vec![Complex::new(-a[0], F::zero())]);
    }
    let nf = F::from(n).expect("small integer");
    let center = -a[n - 1] / nf;
    // Fujiwara-type bound on |root|
    let radius = (0..n)
        .map(|k| a[k].abs().powf(F::one() / F::from(n - k).expect("small integer")))
        .fold(F::zero(), F::max)
        .max(F::from(1e-3).expect("constant"));
    let tau = F::from(std::f64::consts::TAU).expect("constant");
    let offset = F::from(0.4).expect("constant");
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let theta = tau * F::from(k).expect("small integer") / nf + offset;
            Complex::new(center, F::zero()) + Complex::from_polar(radius, theta)
        })
        .collect();
    let da: Vec<F> = (1..=n).map(|k| a[k] * F::from(k).expect("small integer")).collect();
    let horner = |c: &[F], x: Complex<F>| {
        c.iter()
            .rev()
            .fold(Complex::new(F::zero(), F::zero()), |acc, &ck| acc * x + ck)
    };
    for _ in 0..max_iterations {
        let mut worst = F::zero();
        for i in 0..n {
            let zi = z[i];
            let ratio = horner(&a, zi) / horner(&da, zi);
            if !ratio.re.is_finite() || !ratio.im.is_finite() {
                // p′ vanishes here: nudge off the critical point
                z[i] = zi + Complex::new(tol, tol);
                worst = F::infinity();
                continue;
            }
            let repulsion = (0..n)
                .filter(|&j| j != i)
                .fold(Complex::new(F::zero(), F::zero()), |acc, j| acc + (zi - z[j]).inv());
            let step = ratio / (Complex::new(F::one(), F::zero()) - ratio * repulsion);
            z[i] = zi - step;
            worst = worst.max(ratio.norm());
        }
        if worst < tol {
            return Ok(z);
        }
    }
    Err(Error::Numeric(format!(
        "Aberth iteration did not converge in {max_iterations} iterations"
    )))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub position: Point,
    /// Local degree of `F` at this point.
    pub multiplicity: usize,
    /// Number of arcs ending here.
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DessinPlot {
    /// Each arc runs from its black end to its white end.
    pub arcs: Vec<Vec<Point>>,
    pub black_vertices: Vec<Vertex>,
    pub white_vertices: Vec<Vertex>,
    pub warnings: Vec<String>,
}

impl DessinPlot {
    pub fn black_degrees(&self) -> Result<Partition> {
        Partition::new(self.black_vertices.iter().map(|v| v.degree).collect())
    }

    pub fn white_degrees(&self) -> Result<Partition> {
        Partition::new(self.white_vertices.iter().map(|v| v.degree).collect())
    }

    /// Arc census agrees with the exact multiplicities at every vertex.
    pub fn is_consistent(&self) -> bool {
        self.black_vertices
            .iter()
            .chain(&self.white_vertices)
            .all(|v| v.degree == v.multiplicity)
    }

    pub fn to_svg(&self) -> String {
        const SIZE: f64 = 600.0;
        const MARGIN: f64 = 20.0;
        let points = self
            .arcs
            .iter()
            .flatten()
            .chain(self.black_vertices.iter().map(|v| &v.position))
            .chain(self.white_vertices.iter().map(|v| &v.position));
        let (mut lo_x, mut hi_x, mut lo_y, mut hi_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for p in points {
            lo_x = lo_x.min(p.re);
            hi_x = hi_x.max(p.re);
            lo_y = lo_y.min(p.im);
            hi_y = hi_y.max(p.im);
        }
        let extent = (hi_x - lo_x).max(hi_y - lo_y).max(1e-9);
        let scale = (SIZE - 2.0 * MARGIN) / extent;
        let map = |p: &Point| {
            (
                MARGIN + (p.re - lo_x) * scale,
                SIZE - MARGIN - (p.im - lo_y) * scale,
            )
        };

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
        for arc in &self.arcs {
            let mut d = String::new();
            for (i, p) in arc.iter().enumerate() {
                let (x, y) = map(p);
                let _ = write!(d, "{}{x:.3} {y:.3}", if i == 0 { "M" } else { " L" });
            }
            let _ = writeln!(svg, r#"<path d="{d}" fill="none" stroke="black" stroke-width="1"/>"#);
        }
        for v in &self.black_vertices {
            let (x, y) = map(&v.position);
            let _ = writeln!(
                svg,
                r#"<rect x="{:.3}" y="{:.3}" width="6" height="6" fill="black"/>"#,
                x - 3.0,
                y - 3.0
            );
        }
        for v in &self.white_vertices {
            let (x, y) = map(&v.position);
            let _ = writeln!(
                svg,
                r#"<circle cx="{x:.3}" cy="{y:.3}" r="4" fill="white" stroke="black"/>"#
            );
        }
        svg.push_str("</svg>\n");
        svg
    }

    pub fn write_svg(&self, out: &mut impl io::Write) -> io::Result<()> {
        out.write_all(self.to_svg().as_bytes())
    }
}

fn vertices<T: Scalar>(p: &Poly<T>, embed: &impl Fn(&T) -> f64) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    for (multiplicity, factor) in p.squarefree_decomposition()? {
        if factor.degree().unwrap_or(0) == 0 {
            continue;
        }
        for position in roots_numeric(&factor.map(|c| embed(c)), DEFAULT_TOL)? {
            out.push(Vertex {
                position,
                multiplicity,
                degree: 0,
            });
        }
    }
    Ok(out)
}

fn nearest(vs: &[Vertex], p: Point) -> usize {
    (0..vs.len())
        .min_by(|&i, &j| {
            (vs[i].position - p)
                .norm()
                .total_cmp(&(vs[j].position - p).norm())
        })
        .expect("at least one vertex")
}

fn min_separation(pts: &[Point]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            best = best.min((pts[i] - pts[j]).norm());
        }
    }
    best
}

/// Greedy bijection by increasing distance; the flag is set when every pair
/// is closer than `threshold`.
fn match_roots(prev: &[Point], next: &[Point], threshold: f64) -> (Vec<usize>, bool) {
    let mut pairs: Vec<(f64, usize, usize)> = prev
        .iter()
        .enumerate()
        .flat_map(|(i, p)| next.iter().enumerate().map(move |(j, q)| ((p - q).norm(), i, j)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut assignment = vec![usize::MAX; prev.len()];
    let mut used = vec![false; next.len()];
    let mut ok = true;
    for (d, i, j) in pairs {
        if assignment[i] == usize::MAX && !used[j] {
            assignment[i] = j;
            used[j] = true;
            ok &= d < threshold;
        }
    }
    (assignment, ok)
}

struct Fiber<'a> {
    num: &'a Poly<f64>,
    den: &'a Poly<f64>,
    degree: usize,
}

impl Fiber<'_> {
    fn roots(&self, t: f64) -> Result<Vec<Point>> {
        let g = self.num - &self.den.scale(&t);
        let roots = roots_numeric(&g, DEFAULT_TOL)?;
        if roots.len() != self.degree {
            return Err(Error::Numeric(format!(
                "fiber over t = {t} has {} finite points, expected {}",
                roots.len(),
                self.degree
            )));
        }
        Ok(roots)
    }

    /// Extends every chain from `t0` to `t1`, bisecting while the match is
    /// ambiguous. Returns false if ambiguity survived the refinement.
    fn advance(&self, chains: &mut [Vec<Point>], t0: f64, t1: f64, next: Vec<Point>, depth: u32) -> Result<bool> {
        let prev: Vec<Point> = chains.iter().map(|c| *c.last().expect("nonempty chain")).collect();
        let threshold = 0.5 * min_separation(&prev);
        let (assignment, ok) = match_roots(&prev, &next, threshold);
        if ok || depth >= MAX_REFINE {
            for (chain, j) in chains.iter_mut().zip(assignment) {
                chain.push(next[j]);
            }
            return Ok(ok);
        }
        let mid = 0.5 * (t0 + t1);
        let first = self.advance(chains, t0, mid, self.roots(mid)?, depth + 1)?;
        let second = self.advance(chains, mid, t1, next, depth + 1)?;
        Ok(first && second)
    }

    /// Walks chains starting at `start` toward `target ∈ {0, 1}` until the
    /// nearest-vertex census matches the exact multiplicities. Returns the
    /// paths walked and the vertex each one ends at.
    fn approach(&self, start: &[Point], t_start: f64, target: f64, vs: &[Vertex]) -> Result<(Vec<Vec<Point>>, Vec<usize>)> {
        let mut paths: Vec<Vec<Point>> = start.iter().map(|&p| vec![p]).collect();
        let mut t = t_start;
        for _ in 0..=MAX_APPROACH {
            let ends: Vec<usize> = paths
                .iter()
                .map(|c| nearest(vs, *c.last().expect("nonempty chain")))
                .collect();
            let mut census = vec![0; vs.len()];
            for &e in &ends {
                census[e] += 1;
            }
            if census.iter().zip(vs).all(|(&c, v)| c == v.multiplicity) {
                return Ok((paths, ends));
            }
            let next_t = target + 0.5 * (t - target);
            self.advance(&mut paths, t, next_t, self.roots(next_t)?, 0)?;
            t = next_t;
        }
        Err(Error::Numeric(
            "arc endpoints disagree with the exact ramification profile".into(),
        ))
    }
}

/// Renders `F⁻¹([0,1])` for a certified Belyi function. `embed` sends the
/// exact coefficients to doubles.
pub fn render_dessin<T: Scalar>(
    f: &RationalFunction<T>,
    samples: usize,
    embed: impl Fn(&T) -> f64,
) -> Result<DessinPlot> {
    if samples < 2 {
        return Err(Error::Usage("at least 2 samples are needed".into()));
    }
    let profile = ramification_profile(f)?;
    let degree = f.degree();
    let num = f.num().map(&embed);
    let den = f.den().map(&embed);
    let mut black = vertices(f.num(), &embed)?;
    let mut white = vertices(&f.shifted_numerator(&T::one()), &embed)?;
    if black.iter().map(|v| v.multiplicity).sum::<usize>() != degree
        || white.iter().map(|v| v.multiplicity).sum::<usize>() != degree
    {
        return Err(Error::Degenerate("a vertex of the dessin lies at infinity".into()));
    }
    debug_assert_eq!(profile.over_zero.n(), degree);

    let fiber = Fiber {
        num: &num,
        den: &den,
        degree,
    };
    let grid: Vec<f64> = (1..samples).map(|k| k as f64 / samples as f64).collect();
    let fibers = grid
        .par_iter()
        .map(|&t| fiber.roots(t))
        .collect::<Result<Vec<_>>>()?;

    let mut fibers = fibers.into_iter();
    let mut chains: Vec<Vec<Point>> = fibers
        .next()
        .expect("nonempty grid")
        .into_iter()
        .map(|p| vec![p])
        .collect();
    let mut warnings = Vec::new();
    for (w, next) in grid.windows(2).zip(fibers) {
        if !fiber.advance(&mut chains, w[0], w[1], next, 0)? {
            warnings.push(format!(
                "ambiguous root matching between t = {} and t = {}",
                w[0], w[1]
            ));
        }
    }

    let heads: Vec<Point> = chains.iter().map(|c| c[0]).collect();
    let tails: Vec<Point> = chains.iter().map(|c| *c.last().expect("nonempty chain")).collect();
    let (to_black, black_ends) = fiber.approach(&heads, grid[0], 0.0, &black)?;
    let (to_white, white_ends) = fiber.approach(&tails, grid[grid.len() - 1], 1.0, &white)?;
    for (i, chain) in chains.iter_mut().enumerate() {
        let (b, w) = (black_ends[i], white_ends[i]);
        black[b].degree += 1;
        white[w].degree += 1;
        let mut arc = vec![black[b].position];
        arc.extend(to_black[i].iter().skip(1).rev());
        arc.append(chain);
        arc.extend(to_white[i].iter().skip(1));
        arc.push(white[w].position);
        *chain = arc;
    }
    let plot = DessinPlot {
        arcs: chains,
        black_vertices: black,
        white_vertices: white,
        warnings,
    };
    if !plot.is_consistent() {
        return Err(Error::Numeric(
            "arc endpoints disagree with the exact ramification profile".into(),
        ));
    }
    Ok(plot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::{f1, laurent_l};
    use crate::{FloatPoly, Rational, RationalFnQ, RationalPoly};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sorted_re(mut r: Vec<Point>) -> Vec<f64> {
        r.sort_by(|a, b| a.re.total_cmp(&b.re));
        r.into_iter().map(|z| z.re).collect()
    }

    #[test]
    fn quadratic_roots() {
        let r = roots_numeric(&FloatPoly::new(vec![-1.0, 0.0, 1.0]), DEFAULT_TOL).unwrap();
        let re = sorted_re(r.clone());
        assert!((re[0] + 1.0).abs() < 1e-12 && (re[1] - 1.0).abs() < 1e-12);
        assert!(r.iter().all(|z| z.im.abs() < 1e-12));
    }

    #[test]
    fn roots_of_unity() {
        let mut c = vec![0.0; 11];
        c[0] = -1.0;
        c[10] = 1.0;
        let r = roots_numeric(&FloatPoly::new(c), DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 10);
        for k in 0..10 {
            let w = Complex::from_polar(1.0, std::f64::consts::TAU * k as f64 / 10.0);
            assert!(r.iter().any(|z| (z - w).norm() < 1e-10), "missing root {w}");
        }
    }

    #[test]
    fn regular_fiber_has_distinct_points() {
        let f = f1().map(|c| c.to_f64()).unwrap();
        let g = f.num() - &f.den().scale(&0.5);
        let r = roots_numeric(&g, DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 10);
        assert!(min_separation(&r) > 1e-3);
    }

    #[test]
    fn f32_roots() {
        let r = roots_numeric(&Poly::<f32>::new(vec![-4.0, 0.0, 1.0]), 1e-5).unwrap();
        let mut re: Vec<f32> = r.iter().map(|z| z.re).collect();
        re.sort_by(|a, b| a.total_cmp(b));
        assert!((re[0] + 2.0).abs() < 1e-5 && (re[1] - 2.0).abs() < 1e-5);
    }

    #[test]
    fn non_convergence_is_reported() {
        let p = FloatPoly::new(vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        assert!(matches!(roots_numeric_with(&p, 1e-12, 1), Err(Error::Numeric(_))));
        assert!(roots_numeric(&FloatPoly::constant(2.0), DEFAULT_TOL).is_err());
    }

    #[test]
    fn identity_map_is_one_segment() {
        let f = RationalFnQ::polynomial(RationalPoly::x());
        let d = render_dessin(&f, 50, Rational::to_f64).unwrap();
        assert_eq!(d.arcs.len(), 1);
        let arc = &d.arcs[0];
        assert_eq!(arc[0], Complex::new(0.0, 0.0));
        assert_eq!(*arc.last().unwrap(), Complex::new(1.0, 0.0));
        assert!(arc.iter().all(|z| z.im.abs() < 1e-12));
    }

    #[test]
    fn f1_dessin() {
        let d = render_dessin(&f1(), DEFAULT_SAMPLES, Rational::to_f64).unwrap();
        assert_eq!(d.arcs.len(), 10);
        assert!(d.warnings.is_empty(), "{:?}", d.warnings);
        assert_eq!(d.black_degrees().unwrap(), part("6,3,1"));
        assert_eq!(d.white_degrees().unwrap(), part("2^3 1^4"));
        // black vertices sit at 0, 1, −1; one simple white vertex at 1/7
        for (x, m) in [(0.0, 6), (1.0, 3), (-1.0, 1)] {
            let v = d
                .black_vertices
                .iter()
                .find(|v| (v.position - Complex::new(x, 0.0)).norm() < 1e-9)
                .unwrap();
            assert_eq!(v.degree, m);
        }
        assert!(d
            .white_vertices
            .iter()
            .any(|v| (v.position - Complex::new(1.0 / 7.0, 0.0)).norm() < 1e-9 && v.degree == 1));
    }

    #[test]
    fn l_dessin_has_the_same_incidences() {
        let l = RationalFunction::from_laurent(&laurent_l()).unwrap();
        let d = render_dessin(&l, DEFAULT_SAMPLES, |c| c.to_f64()).unwrap();
        assert_eq!(d.arcs.len(), 10);
        assert_eq!(d.black_degrees().unwrap(), part("6,3,1"));
        assert_eq!(d.white_degrees().unwrap(), part("2^3 1^4"));
    }

    #[test]
    fn svg_markup() {
        let svg = render_dessin(&f1(), 100, Rational::to_f64).unwrap().to_svg();
        assert_eq!(svg.matches("<path").count(), 10);
        assert_eq!(svg.matches(r#"width="6" height="6" fill="black""#).count(), 3);
        assert_eq!(svg.matches("<circle").count(), 7);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn non_belyi_input_is_refused() {
        let f = RationalFnQ::polynomial(RationalPoly::new(vec![
            Rational::from_integer(0),
            Rational::from_integer(-3),
            Rational::from_integer(0),
            Rational::from_integer(1),
        ]));
        assert!(matches!(render_dessin(&f, 20, Rational::to_f64), Err(Error::NotBelyi { .. })));
    }
}

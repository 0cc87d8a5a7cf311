mod reproduce;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use moment_forge::basis::solve_basis;
use moment_forge::belyi::{build_candidate, h_structure, ramification_profile, RamificationProfile};
use moment_forge::characters::{factorial, frobenius_count, frobenius_terms, Partition};
use moment_forge::counterexample as cx;
use moment_forge::decompose::{classify, Classification, Witness};
use moment_forge::dessin::{render_dessin, DEFAULT_SAMPLES};
use moment_forge::moments::{orbit_size_n, MomentEngine};
use moment_forge::parse::parse_laurent;
use moment_forge::perm::{
    check_relation, find_blocks, group_order, is_primitive, is_transitive, EdgeLabeling,
};
use moment_forge::{Error, LaurentPoly, Poly, Rational, RationalFnQ, RationalFunction, Scalar};
use num_traits::Zero;
use serde_json::{json, Value};

const SCHEMA: u32 = 1;
const THREADS_VAR: &str = "MOMENT_FORGE_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "moment-forge",
    version,
    about = "Exact reproduction of a counterexample to the composition conjecture for Laurent polynomial moments",
    arg_required_else_help = true
)]
struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    plain: bool,

    /// Write the report to a file instead of stdout. For render-dessin this is the SVG path.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve for the normalized basis solutions Q0..Q4.
    SolveBasis {
        /// Only this basis element.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=4))]
        j: Option<u8>,
    },
    /// Check that the first moments of a Laurent polynomial vanish.
    VerifyMoments {
        /// `Q0`..`Q4` or a Laurent polynomial in z.
        #[arg(long, default_value = "Q4")]
        q: String,
        /// Orbit size of the monodromy vector.
        #[arg(long, default_value_t = reproduce::ORBIT_SIZE)]
        n: u64,
    },
    /// Write a Laurent polynomial as a combination of the basis solutions.
    Decompose {
        /// Laurent polynomial in z, e.g. `z^-1 + (1+sqrt(5))*z^2`.
        q: String,
    },
    /// Report on the monodromy group acting on the edges of K5.
    CheckGroup,
    /// Count permutation triples with product one in the given classes.
    CountMaps {
        /// Cycle types separated by `;`, e.g. `6,3,1; 2^3 1^4; 5,5`.
        #[arg(long)]
        classes: Option<String>,
    },
    /// Certify a rational function as Belyi and print its ramification.
    VerifyBelyi {
        #[arg(long, value_enum, conflicts_with = "coeffs")]
        function: Option<Function>,
        /// `K,a,b` for K·x^6(x-1)^3(x+1)/(x^2+ax+b)^5 with rational entries.
        #[arg(long)]
        coeffs: Option<String>,
    },
    /// Draw the preimage of [0,1] as SVG.
    RenderDessin {
        #[arg(long, value_enum, default_value = "f1")]
        function: Function,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Run every acceptance check and print a summary table.
    ReproduceAll {
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 2009)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Function {
    #[value(name = "F1", alias = "f1")]
    F1,
    #[value(name = "F2", alias = "f2")]
    F2,
    #[value(name = "L", alias = "l")]
    L,
}

/// Bad user input; exits with 2 like argument errors.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    UsageError(e.to_string()).into()
}

fn from_core(e: Error) -> anyhow::Error {
    match e {
        Error::Parse(_) | Error::Usage(_) => usage(e),
        other => other.into(),
    }
}

struct Report {
    json: Value,
    plain: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var(THREADS_VAR) {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| usage(format!("{THREADS_VAR} must be a positive integer, got `{v}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the thread pool")?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    configure_threads()?;
    let mut out = cli.out.clone();
    let report = match cli.command {
        Command::SolveBasis { j } => solve_basis_cmd(j)?,
        Command::VerifyMoments { q, n } => verify_moments_cmd(&q, n)?,
        Command::Decompose { q } => decompose_cmd(&q)?,
        Command::CheckGroup => check_group_cmd()?,
        Command::CountMaps { classes } => count_maps_cmd(classes.as_deref())?,
        Command::VerifyBelyi { function, coeffs } => verify_belyi_cmd(function, coeffs.as_deref())?,
        Command::RenderDessin { function, samples } => {
            let (report, svg) = render_dessin_cmd(function, samples)?;
            match out.take() {
                Some(path) => fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?,
                None => {
                    io::stdout().write_all(svg.as_bytes())?;
                    return Ok(report.passed);
                }
            }
            report
        }
        Command::ReproduceAll { seed } => reproduce_all_cmd(seed),
    };
    let text = if cli.plain {
        report.plain.clone()
    } else {
        let mut json = report.json.clone();
        json.as_object_mut()
            .expect("reports are objects")
            .insert("schema".into(), json!(SCHEMA));
        serde_json::to_string_pretty(&json)? + "\n"
    };
    match out {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(report.passed)
}

fn coeff_strings<T: Scalar>(p: &Poly<T>) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn solve_basis_cmd(only: Option<u8>) -> anyhow::Result<Report> {
    let basis = solve_basis(&cx::laurent_l())?;
    let reference = cx::reference_basis();
    let mut entries = Vec::new();
    let mut plain = String::new();
    for (j, q) in basis.iter().enumerate() {
        if only.is_some_and(|o| o as usize != j) {
            continue;
        }
        entries.push(json!({ "j": j, "laurent": q.to_string(), "matches_reference": *q == reference[j] }));
        plain.push_str(&format!("Q{j} = {q}\n"));
    }
    let passed = basis == reference;
    Ok(Report {
        json: json!({ "command": "solve-basis", "basis": entries }),
        plain,
        passed,
    })
}

fn parse_q(q: &str) -> anyhow::Result<(String, LaurentPoly)> {
    let label = q.trim();
    if let Some(j) = label
        .strip_prefix(['Q', 'q'])
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&j| j < cx::REFERENCE_BASIS.len())
    {
        return Ok((format!("Q{j}"), cx::reference_basis().swap_remove(j)));
    }
    Ok((label.to_string(), parse_laurent::<5>(label).map_err(from_core)?))
}

fn verify_moments_cmd(q: &str, n: u64) -> anyhow::Result<Report> {
    if n == 0 {
        bail!(usage("--n must be positive"));
    }
    let (label, q) = parse_q(q)?;
    let start = Instant::now();
    let mut engine = MomentEngine::new(&cx::laurent_l())?;
    let report = engine.verify(&q, n);
    let elapsed = start.elapsed().as_millis() as u64;
    let mut json = json!({
        "command": "verify-moments",
        "q_label": label,
        "N": n,
        "bound": report.checked_upper_bound,
        "all_zero": report.all_zero,
        "elapsed_ms": elapsed,
    });
    if let Some(i) = report.first_nonzero_index {
        json["first_nonzero_index"] = json!(i);
    }
    let plain = match report.first_nonzero_index {
        None => format!("{label}: moments 0..={} all vanish (N = {n})\n", report.checked_upper_bound),
        Some(i) => format!("{label}: moment {i} is nonzero\n"),
    };
    Ok(Report {
        json,
        plain,
        passed: report.all_zero,
    })
}

fn decompose_cmd(q: &str) -> anyhow::Result<Report> {
    let q = parse_laurent::<5>(q).map_err(from_core)?;
    let l = cx::laurent_l();
    let basis = cx::reference_basis();
    let mut engine = MomentEngine::new(&l)?;
    let result = classify(&q, &l, &basis, &mut engine, reproduce::ORBIT_SIZE).map_err(from_core)?;
    let d = result.decomposition();
    let mut json = json!({
        "command": "decompose",
        "is_solution": result.is_solution(),
        "remainder": coeff_strings(&d.remainder),
    });
    let mut plain = String::new();
    for (j, r) in d.r_polys.iter().enumerate() {
        json[format!("r{j}")] = json!(coeff_strings(r));
        plain.push_str(&format!("R{j} = {r}\n"));
    }
    plain.push_str(&format!("remainder = {}\n", d.remainder));
    match &result {
        Classification::Solution(_) => plain.push_str("solution: yes\n"),
        Classification::NonSolution { witness, .. } => {
            let w = match witness {
                Witness::Remainder(r) => json!({ "remainder": coeff_strings(r) }),
                Witness::Moment(i) => json!({ "moment": i }),
            };
            plain.push_str(&format!("solution: no ({w})\n"));
            json["witness"] = w;
        }
    }
    Ok(Report {
        json,
        plain,
        passed: true,
    })
}

fn check_group_cmd() -> anyhow::Result<Report> {
    let gens = cx::generators();
    let [s, a, f] = gens.clone();
    let order = group_order(&gens)?;
    let order_alpha_sigma = group_order(&[a.clone(), s.clone()])?;
    let transitive = is_transitive(&gens)?;
    let primitive = is_primitive(&gens)?;
    let blocks: Vec<Vec<Vec<usize>>> = find_blocks(&gens)?
        .into_iter()
        .map(|sys| sys.into_iter().map(|b| b.into_iter().map(|p| p + 1).collect()).collect())
        .collect();
    let relation = check_relation(&gens)?;
    let orbit = orbit_size_n(&gens, &cx::ORBIT_VECTOR)?;
    let lab = EdgeLabeling::pentagon_pentagram();
    let (subspace, subspace_ok) = subspace_report(&lab)?;
    let passed = relation && transitive && primitive && order_alpha_sigma == 120 && subspace_ok;
    let json = json!({
        "command": "check-group",
        "generators": { "sigma": s.to_string(), "alpha": a.to_string(), "phi": f.to_string() },
        "relation_sigma_alpha_phi_is_identity": relation,
        "order": order.to_string(),
        "order_alpha_sigma": order_alpha_sigma.to_string(),
        "transitive": transitive,
        "primitive": primitive,
        "block_systems": blocks,
        "orbit_size": orbit,
        "subspaces": subspace,
    });
    let plain = format!(
        "sigma = {s}\nalpha = {a}\nphi = {f}\nsigma*alpha*phi = 1: {relation}\norder = {order}\n\
         transitive: {transitive}\nprimitive: {primitive}\norbit size N = {orbit}\n\
         invariant subspaces: dims {}, <pi,pi> = {}\n",
        subspace["dimensions"], subspace["permutation_character_norm"]
    );
    Ok(Report { json, plain, passed })
}

fn subspace_report(lab: &EdgeLabeling) -> anyhow::Result<(Value, bool)> {
    use moment_forge::characters::permutation_character_norm;
    use moment_forge::linalg::rank_of;
    use moment_forge::perm::invariant_subspace_check;

    let gens = cx::generators();
    let fans = lab.fans();
    let ham = lab.hamiltonian_differences();
    let rat = |vs: &[Vec<i64>]| -> Vec<Vec<Rational>> {
        vs.iter().map(|v| v.iter().map(|&x| Rational::from_integer(x)).collect()).collect()
    };
    let ones = vec![vec![Rational::from_integer(1); 10]];
    let two_fifths = Rational::new(2, 5)?;
    let centered: Vec<Vec<Rational>> = rat(&fans)
        .into_iter()
        .map(|v| v.into_iter().map(|x| x - two_fifths.clone()).collect())
        .collect();
    let ham_q = rat(&ham);
    let dims = [rank_of(&ones), rank_of(&centered), rank_of(&ham_q)];
    let invariant = [
        invariant_subspace_check(&gens, &ones)?,
        invariant_subspace_check(&gens, &centered)?,
        invariant_subspace_check(&gens, &ham_q)?,
    ];
    let orthogonal = fans
        .iter()
        .all(|v| ham.iter().all(|w| v.iter().zip(w).map(|(x, y)| x * y).sum::<i64>() == 0));
    let norm = permutation_character_norm(5, reproduce::edge_fixed_points)?;
    let ok = dims == [1, 4, 5] && invariant.iter().all(|&b| b) && orthogonal && norm == 3;
    Ok((
        json!({
            "fans": fans,
            "hamiltonian_differences": ham,
            "dimensions": dims,
            "invariant": invariant,
            "fans_orthogonal_to_hamiltonian": orthogonal,
            "permutation_character_norm": norm,
        }),
        ok,
    ))
}

fn parse_classes(s: &str) -> anyhow::Result<Vec<Partition>> {
    s.split(';')
        .map(|c| c.trim().parse::<Partition>().map_err(from_core))
        .collect()
}

fn count_maps_cmd(classes: Option<&str>) -> anyhow::Result<Report> {
    let classes = match classes {
        Some(s) => parse_classes(s)?,
        None => reproduce::passport(),
    };
    let count = frobenius_count(&classes).map_err(from_core)?;
    let n = classes[0].n();
    let fact = factorial(n);
    let multiple = (&count % &fact).is_zero().then(|| (&count / &fact).to_string());
    let terms: Vec<Value> = frobenius_terms(&classes)?
        .into_iter()
        .filter(|(_, t)| !t.is_zero())
        .map(|(lambda, t)| json!({ "lambda": lambda.to_string(), "contribution": t.to_string() }))
        .collect();
    let class_names: Vec<String> = classes.iter().map(Partition::exponent_form).collect();
    let mut plain = format!("classes {}: {count} triples", class_names.join(" / "));
    if let Some(m) = &multiple {
        plain.push_str(&format!(" = {m}*{n}!"));
    }
    plain.push('\n');
    Ok(Report {
        json: json!({
            "command": "count-maps",
            "classes": class_names,
            "count": count.to_string(),
            "multiple_of_n_factorial": multiple,
            "n": n,
            "contributions": terms,
        }),
        plain,
        passed: true,
    })
}

fn profile_json(p: &RamificationProfile) -> Value {
    json!({
        "over_zero": p.over_zero.parts(),
        "over_one": p.over_one.parts(),
        "over_infinity": p.over_infinity.parts(),
    })
}

fn candidate_parameters(function: Function) -> Option<[Rational; 3]> {
    let q = |n: i64, d: i64| Rational::new(n, d).expect("nonzero");
    match function {
        Function::F1 => Some([q(50_000, 27), q(4, 1), q(-1, 1)]),
        Function::F2 => Some([q(337_500, 161_051), q(4, 11), q(-16, 11)]),
        Function::L => None,
    }
}

fn certify<T: Scalar>(label: &str, f: &RationalFunction<T>, params: Option<[Rational; 3]>) -> anyhow::Result<Report> {
    let mut json = json!({
        "command": "verify-belyi",
        "function": label,
        "rational_function": f.to_string(),
        "degree": f.degree(),
    });
    let (passed, mut plain) = match ramification_profile(f) {
        Ok(p) => {
            json["certified"] = json!(true);
            json["profile"] = profile_json(&p);
            (
                true,
                format!(
                    "{label}: Belyi, profile {} / {} / {}\n",
                    p.over_zero, p.over_one, p.over_infinity
                ),
            )
        }
        Err(Error::NotBelyi { extra }) => {
            json["certified"] = json!(false);
            json["extra_ramification"] = json!(extra);
            (false, format!("{label}: not Belyi ({extra} extra units of ramification)\n"))
        }
        Err(e) => return Err(from_core(e)),
    };
    if let Some([k, a, b]) = params {
        if let Ok(h) = h_structure(k, a, b) {
            json["one_fiber"] = json!({
                "constant": h.constant.to_string(),
                "p": coeff_strings(&h.p),
                "q": coeff_strings(&h.q),
            });
            plain.push_str(&format!("num(F - 1) = {} * ({})^2 * ({})\n", h.constant, h.p, h.q));
        }
    }
    Ok(Report { json, plain, passed })
}

fn verify_belyi_cmd(function: Option<Function>, coeffs: Option<&str>) -> anyhow::Result<Report> {
    match (function, coeffs) {
        (_, Some(c)) => {
            let parts: Vec<Rational> = c
                .split(',')
                .map(|x| x.trim().parse::<Rational>().map_err(from_core))
                .collect::<anyhow::Result<_>>()?;
            let [k, a, b]: [Rational; 3] = parts
                .try_into()
                .map_err(|_| usage("--coeffs expects three rationals K,a,b"))?;
            let f = build_candidate(k.clone(), a.clone(), b.clone()).map_err(usage)?;
            certify(&format!("K={k}, a={a}, b={b}"), &f, Some([k, a, b]))
        }
        (Some(Function::L), None) => certify("L", &RationalFunction::from_laurent(&cx::laurent_l())?, None),
        (Some(f), None) => certify(&format!("{f:?}"), &rational_function(f), candidate_parameters(f)),
        (None, None) => Err(usage("one of --function or --coeffs is required")),
    }
}

fn rational_function(f: Function) -> RationalFnQ {
    match f {
        Function::F1 => cx::f1(),
        Function::F2 => cx::f2(),
        Function::L => unreachable!("L is defined over Q(sqrt 5)"),
    }
}

fn render_dessin_cmd(function: Function, samples: usize) -> anyhow::Result<(Report, String)> {
    if samples < 2 {
        bail!(usage("--samples must be at least 2"));
    }
    let plot = match function {
        Function::L => render_dessin(
            &RationalFunction::from_laurent(&cx::laurent_l())?,
            samples,
            |c| c.to_f64(),
        )?,
        f => render_dessin(&rational_function(f), samples, Rational::to_f64)?,
    };
    let black = plot.black_degrees()?;
    let white = plot.white_degrees()?;
    let json = json!({
        "command": "render-dessin",
        "function": format!("{function:?}"),
        "samples": samples,
        "arcs": plot.arcs.len(),
        "black_degrees": black.parts(),
        "white_degrees": white.parts(),
        "warnings": plot.warnings,
    });
    let plain = format!(
        "{function:?}: {} arcs, black degrees {black}, white degrees {white}\n",
        plot.arcs.len()
    );
    Ok((
        Report {
            json,
            plain,
            passed: plot.is_consistent(),
        },
        plot.to_svg(),
    ))
}

fn reproduce_all_cmd(seed: u64) -> Report {
    let outcomes = reproduce::run_all(seed);
    let passed = outcomes.iter().all(|o| o.passed);
    let mut plain = String::new();
    for o in &outcomes {
        plain.push_str(&format!(
            "{:>2}  {:<26} {}  {} ({} ms)\n",
            o.id,
            o.name,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail,
            o.elapsed_ms
        ));
    }
    plain.push_str(&format!(
        "{}/{} criteria passed\n",
        outcomes.iter().filter(|o| o.passed).count(),
        outcomes.len()
    ));
    Report {
        json: json!({ "command": "reproduce-all", "seed": seed, "criteria": outcomes, "all_passed": passed }),
        plain,
        passed,
    }
}

//! Acceptance suite. Prints one `[PASS]` / `[FAIL]` line per criterion.
//!
//! Every criterion is exact; the only tolerances are wall-clock budgets,
//! pinned below. Criteria listed in `KNOWN_UNATTAINABLE` are mathematically
//! false as stated; they are still evaluated and printed red, and the run
//! fails if one of them unexpectedly passes or any other criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hirota_core::hirota::scalar_ratio;
use hirota_core::web::{flatness_check_with, proportional_at};
use hirota_core::*;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_3D_DISPLAY: Duration = Duration::from_secs(1);
const LIMIT_4D_DISPLAY: Duration = Duration::from_secs(5);
const LIMIT_5D_DISPLAYS: Duration = Duration::from_secs(60);
const LIMIT_RESIDUALS: Duration = Duration::from_secs(300);
const LIMIT_PROPERTIES: Duration = Duration::from_secs(30);
const LIMIT_FLATNESS: Duration = Duration::from_secs(120);
const LIMIT_FROBENIUS: Duration = Duration::from_secs(60);
const LIMIT_INTERPOLATION: Duration = Duration::from_secs(60);
const LIMIT_RESTRICTION: Duration = Duration::from_secs(10);
const LIMIT_MOBIUS: Duration = Duration::from_secs(60);
const LIMIT_PROPORTIONALITY: Duration = Duration::from_secs(30);

/// Largest admissible per-trial Schwartz–Zippel bound for sampled checks.
const MAX_FAILURE_BOUND: f64 = 1e-4;
const SAMPLE_TRIALS: usize = 3;
const SAMPLE_BOUND: u64 = 1_000_000;
const SAMPLE_SEED: u64 = 42;

/// Criteria that cannot hold as stated; see the project notes.
const KNOWN_UNATTAINABLE: &[u32] = &[2, 5];

type Outcome = std::result::Result<String, String>;

/// Polynomials in `x_1..x_n, l_1..l_n` for transcribing closed forms.
struct Ring {
    n: usize,
}

impl Ring {
    fn x(&self, i: usize) -> MultiPoly {
        MultiPoly::var(2 * self.n, i - 1)
    }

    fn l(&self, i: usize) -> MultiPoly {
        MultiPoly::var(2 * self.n, self.n + i - 1)
    }

    /// `l_a - l_b`
    fn d(&self, a: usize, b: usize) -> MultiPoly {
        &self.l(a) - &self.l(b)
    }

    /// `l_a^2 - l_b^2`
    fn d2(&self, a: usize, b: usize) -> MultiPoly {
        &self.l(a).pow(2) - &self.l(b).pow(2)
    }

    /// `sign * Π (l_a - l_b) * Π x_i`
    fn term(&self, sign: i64, diffs: &[(usize, usize)], xs: &[usize]) -> MultiPoly {
        let mut acc = MultiPoly::constant(2 * self.n, Rational::from_integer(sign.into()));
        for &(a, b) in diffs {
            acc = &acc * &self.d(a, b);
        }
        for &i in xs {
            acc = &acc * &self.x(i);
        }
        acc
    }

    fn sum(&self, terms: Vec<MultiPoly>) -> MultiPoly {
        terms
            .into_iter()
            .fold(MultiPoly::zero(2 * self.n), |a, t| &a + &t)
    }
}

/// Checks `P = c p` and `Q = c q` for one common nonzero scalar and reports
/// `c`, or the x-monomials at which the transcription disagrees.
fn compare_up_to_scalar(
    names: &VarNames,
    (big_p, big_q): (&MultiPoly, &MultiPoly),
    (p, q): (&MultiPoly, &MultiPoly),
) -> Outcome {
    let cross = &(big_p * q) - &(big_q * p);
    let c = scalar_ratio(big_p, p).or_else(|| scalar_ratio(big_q, q));
    match c {
        Some(c) if cross.is_zero() && big_q == &q.scale(&c) && big_p == &p.scale(&c) => {
            Ok(format!("common scalar {c}"))
        }
        _ => {
            let shared = big_p.terms().find_map(|(m, cp)| {
                let cd = p.coefficient(m);
                (!cd.is_zero()).then(|| cp / cd)
            });
            let Some(c) = c.or(shared) else {
                return Err("no monomial in common with the closed form; ".into());
            };
            let describe = |label: &str, actual: &MultiPoly, display: &MultiPoly| {
                let diff = actual - &display.scale(&c);
                let nx = names.len() / 2;
                let mut monomials: Vec<String> = diff
                    .terms()
                    .map(|(m, _)| {
                        let xs: Vec<u32> = m.exponents()[..nx].to_vec();
                        render_x_monomial(&xs)
                    })
                    .collect();
                monomials.dedup();
                monomials.sort();
                monomials.dedup();
                if monomials.is_empty() {
                    String::new()
                } else {
                    format!("{label} differs at {}; ", monomials.join(", "))
                }
            };
            Err(format!(
                "not proportional (trial scalar {c}): {}{}",
                describe("numerator", big_p, p),
                describe("denominator", big_q, q)
            ))
        }
    }
}

fn render_x_monomial(exponents: &[u32]) -> String {
    let mut out = String::new();
    for (i, &e) in exponents.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push_str(&format!("x{}", i + 1)),
            _ => out.push_str(&format!("x{}^{e}", i + 1)),
        }
    }
    if out.is_empty() {
        "1".into()
    } else {
        out
    }
}

fn symbolic_solution(n: usize, k: usize, l: usize) -> std::result::Result<HirotaSolution, String> {
    let spec = WebSpec::symbolic(n, k, l).map_err(|e| e.to_string())?;
    build_solution(&spec).map_err(|e| e.to_string())
}

fn orders(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).map(move |k| (k, n - 1 - k))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: Error) -> String {
    err.to_string()
}

fn closed_form_3d() -> Outcome {
    let r = Ring { n: 3 };
    let p = r.sum(vec![
        r.term(1, &[(1, 2)], &[1, 2]),
        r.term(1, &[(2, 3)], &[2, 3]),
        r.term(1, &[(3, 1)], &[3, 1]),
    ]);
    let q = r.sum(vec![
        r.term(1, &[(3, 2)], &[1]),
        r.term(1, &[(1, 3)], &[2]),
        r.term(1, &[(2, 1)], &[3]),
    ]);
    let sol = symbolic_solution(3, 1, 1)?;
    let display = RationalFunction::new(p.clone(), q.clone()).map_err(e)?;
    check(sol.f() == &display, || {
        "f differs from the closed form".into()
    })?;
    compare_up_to_scalar(
        &sol.spec().var_names(),
        (sol.p_top(), sol.q_top()),
        (&p, &q),
    )
}

fn closed_form_4d() -> Outcome {
    let r = Ring { n: 4 };
    let t = |sign: i64, sq: (usize, usize), diff: (usize, usize), xs: &[usize]| {
        &r.d2(sq.0, sq.1) * &r.term(sign, &[diff], xs)
    };
    let p2 = r.sum(vec![
        t(1, (3, 4), (1, 2), &[1, 2]),
        t(-1, (2, 4), (1, 3), &[1, 3]),
        t(1, (2, 3), (1, 4), &[1, 4]),
        t(1, (1, 4), (2, 3), &[2, 3]),
        t(-1, (1, 3), (2, 4), &[2, 4]),
        t(1, (1, 2), (3, 4), &[3, 4]),
    ]);
    let q1 = r.sum(vec![
        r.term(1, &[(3, 4), (2, 4), (2, 3)], &[1]),
        r.term(-1, &[(3, 4), (2, 4), (2, 3)], &[2]),
        r.term(1, &[(2, 4), (1, 4), (1, 2)], &[3]),
        r.term(-1, &[(2, 3), (1, 3), (1, 2)], &[4]),
    ]);
    let sol = symbolic_solution(4, 2, 1)?;
    compare_up_to_scalar(
        &sol.spec().var_names(),
        (sol.p_top(), sol.q_top()),
        (&p2, &q1),
    )
    .map_err(|msg| {
        let interpolant = cauchy_interpolant(sol.spec()).expect("valid spec");
        format!(
            "{msg}display numerator is {}, display denominator is {}",
            locate(&p2, &interpolant),
            locate(&q1, &interpolant)
        )
    })
}

/// Which interpolant coefficient, if any, a transcribed polynomial is a
/// multiple of.
fn locate(display: &MultiPoly, interpolant: &CauchyInterpolant) -> String {
    let p = interpolant
        .p_coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| (format!("P_{j}"), c));
    let q = interpolant
        .q_coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| (format!("Q_{i}"), c));
    p.chain(q)
        .find_map(|(name, c)| scalar_ratio(c, display).map(|s| format!("{} {name}", s.recip())))
        .unwrap_or_else(|| "no interpolant coefficient".into())
}

fn closed_forms_5d() -> Outcome {
    let r = Ring { n: 5 };
    let p3 = r.sum(vec![
        r.term(1, &[(4, 5), (3, 5), (3, 4), (1, 2)], &[1, 2]),
        r.term(-1, &[(4, 5), (2, 5), (2, 4), (1, 3)], &[1, 3]),
        r.term(1, &[(3, 5), (2, 5), (2, 3), (1, 4)], &[1, 4]),
        r.term(-1, &[(3, 4), (2, 4), (2, 3), (1, 5)], &[1, 5]),
        r.term(1, &[(4, 5), (1, 5), (1, 4), (2, 3)], &[2, 3]),
        r.term(-1, &[(3, 5), (1, 5), (1, 3), (2, 4)], &[2, 4]),
        r.term(1, &[(3, 4), (1, 4), (1, 3), (2, 5)], &[2, 5]),
        r.term(1, &[(2, 5), (1, 5), (1, 2), (3, 4)], &[3, 4]),
        r.term(-1, &[(2, 4), (1, 4), (1, 2), (3, 5)], &[3, 5]),
        r.term(1, &[(2, 3), (1, 3), (1, 2), (4, 5)], &[4, 5]),
    ]);
    let q1 = r.sum(vec![
        r.term(-1, &[(4, 5), (3, 5), (3, 4), (2, 5), (2, 4), (2, 3)], &[1]),
        r.term(1, &[(4, 5), (3, 5), (3, 4), (1, 5), (1, 4), (1, 3)], &[2]),
        r.term(-1, &[(4, 5), (2, 5), (2, 4), (1, 5), (1, 4), (1, 2)], &[3]),
        r.term(1, &[(3, 5), (2, 5), (2, 3), (1, 5), (1, 3), (1, 2)], &[4]),
        r.term(-1, &[(3, 4), (2, 4), (2, 3), (1, 4), (1, 3), (1, 2)], &[5]),
    ]);
    let p2 = r.sum(vec![
        r.term(-1, &[(4, 5), (2, 3), (1, 3), (1, 2)], &[1, 2, 3]),
        r.term(1, &[(3, 5), (2, 4), (1, 4), (1, 2)], &[1, 2, 4]),
        r.term(-1, &[(3, 4), (2, 5), (1, 5), (1, 2)], &[1, 2, 5]),
        r.term(-1, &[(2, 5), (3, 4), (1, 4), (1, 3)], &[1, 3, 4]),
        r.term(1, &[(2, 4), (3, 5), (1, 5), (1, 3)], &[1, 3, 5]),
        r.term(-1, &[(2, 3), (4, 5), (1, 5), (1, 4)], &[1, 4, 5]),
        r.term(1, &[(1, 5), (3, 4), (2, 4), (2, 3)], &[2, 3, 4]),
        r.term(-1, &[(1, 4), (3, 5), (2, 5), (2, 3)], &[2, 3, 5]),
        r.term(1, &[(1, 3), (4, 5), (2, 5), (2, 4)], &[2, 4, 5]),
        r.term(-1, &[(1, 2), (4, 5), (3, 5), (3, 4)], &[3, 4, 5]),
    ]);
    let q2 = r.sum(vec![
        r.term(-1, &[(4, 5), (3, 5), (3, 4), (1, 2)], &[1, 2]),
        r.term(1, &[(4, 5), (2, 5), (2, 4), (1, 3)], &[1, 3]),
        r.term(-1, &[(3, 5), (2, 5), (2, 3), (1, 4)], &[1, 4]),
        r.term(1, &[(3, 4), (2, 4), (2, 3), (1, 5)], &[1, 5]),
        r.term(-1, &[(4, 5), (1, 5), (1, 4), (2, 3)], &[2, 3]),
        r.term(1, &[(3, 5), (1, 5), (1, 3), (2, 4)], &[2, 4]),
        r.term(-1, &[(3, 4), (1, 4), (1, 3), (2, 5)], &[2, 5]),
        r.term(-1, &[(2, 5), (1, 5), (1, 2), (3, 4)], &[3, 4]),
        r.term(1, &[(2, 4), (1, 4), (1, 2), (3, 5)], &[3, 5]),
        r.term(-1, &[(2, 3), (1, 3), (1, 2), (4, 5)], &[4, 5]),
    ]);
    let a = symbolic_solution(5, 3, 1)?;
    let b = symbolic_solution(5, 2, 2)?;
    let names = a.spec().var_names();
    let first = compare_up_to_scalar(&names, (a.p_top(), a.q_top()), (&p3, &q1));
    let second = compare_up_to_scalar(&names, (b.p_top(), b.q_top()), (&p2, &q2));
    match (first, second) {
        (Ok(x), Ok(y)) => Ok(format!("[3/1] {x}; [2/2] {y}")),
        (x, y) => Err(format!(
            "[3/1] {}; [2/2] {}",
            x.unwrap_or_else(|m| m),
            y.unwrap_or_else(|m| m)
        )),
    }
}

fn residuals() -> Outcome {
    let mut symbolic_checked = 0;
    for n in 2..=4 {
        for (k, l) in orders(n) {
            for spec in [
                WebSpec::symbolic(n, k, l).map_err(e)?,
                WebSpec::with_default_nodes(n, k, l).map_err(e)?,
            ] {
                let verdict = verify_hirota(&build_solution(&spec).map_err(e)?, Strategy::Symbolic)
                    .map_err(e)?;
                check(verdict.passed(), || {
                    format!("{spec} has a nonzero residual")
                })?;
                symbolic_checked += 1;
            }
        }
    }
    for (k, l) in orders(5) {
        let spec = WebSpec::with_default_nodes(5, k, l).map_err(e)?;
        let verdict =
            verify_hirota(&build_solution(&spec).map_err(e)?, Strategy::Symbolic).map_err(e)?;
        check(verdict.passed(), || {
            format!("{spec} has a nonzero residual")
        })?;
        symbolic_checked += 1;
    }
    let mut worst: f64 = 0.0;
    for (k, l) in orders(5) {
        let spec = WebSpec::symbolic(5, k, l).map_err(e)?;
        let strategy = Strategy::Sampled {
            trials: SAMPLE_TRIALS,
            bound: SAMPLE_BOUND,
            seed: SAMPLE_SEED,
        };
        let verdict = verify_hirota(&build_solution(&spec).map_err(e)?, strategy).map_err(e)?;
        check(verdict.passed(), || {
            format!("{spec} fails a sampled residual")
        })?;
        let bound = verdict
            .failure_bound_per_trial
            .as_ref()
            .map(rational_to_f64)
            .unwrap_or(f64::INFINITY);
        check(bound <= MAX_FAILURE_BOUND, || {
            format!("{spec}: per-trial bound {bound:e}")
        })?;
        worst = worst.max(bound);
    }
    Ok(format!(
        "{symbolic_checked} specs symbolic, 5 sampled (worst per-trial bound {worst:.2e})"
    ))
}

fn rational_to_f64(r: &Rational) -> f64 {
    hirota_core::rational::to_f64(r)
}

fn structural_properties_hold() -> Outcome {
    let mut failures = Vec::new();
    for n in 2..=6 {
        for (k, l) in orders(n) {
            let spec = WebSpec::with_default_nodes(n, k, l).map_err(e)?;
            let props = solution_properties(&build_solution(&spec).map_err(e)?).map_err(e)?;
            let mut broken = Vec::new();
            if !props.homogeneous() {
                broken.push("1");
            }
            if !props.degree_gap_one() {
                broken.push("2");
            }
            if !props.coefficients_sum_to_zero() {
                broken.push("3");
            }
            if !broken.is_empty() {
                failures.push(format!("[{k}/{l}] n={n} breaks {}", broken.join(",")));
            }
        }
    }
    if failures.is_empty() {
        Ok("all orders, n = 2..6".into())
    } else {
        Err(failures.join("; "))
    }
}

fn flatness() -> Outcome {
    let mut nonflat = 0;
    let mut flat = 0;
    for n in 3..=6 {
        for (k, l) in orders(n) {
            let degenerate = k == 0 || l == 0;
            if !degenerate && n > 5 {
                continue;
            }
            let spec = WebSpec::with_default_nodes(n, k, l).map_err(e)?;
            let verdict = flatness_check_with(&spec, !degenerate).map_err(e)?;
            if degenerate {
                check(verdict.status == FlatnessStatus::FlatCertified, || {
                    format!("{spec}: {}", verdict.status.as_str())
                })?;
                flat += 1;
            } else {
                check(verdict.status == FlatnessStatus::NonflatCertified, || {
                    format!("{spec}: {}", verdict.status.as_str())
                })?;
                check(verdict.witness_identity == Some(true), || {
                    format!("{spec}: witness identity fails")
                })?;
                nonflat += 1;
            }
        }
    }
    Ok(format!(
        "{nonflat} nonflat with witness identity, {flat} flat"
    ))
}

fn frobenius() -> Outcome {
    let mut count = 0;
    for n in 3..=4 {
        for (k, l) in orders(n) {
            let spec = WebSpec::with_default_nodes(n, k, l).map_err(e)?;
            let sol = build_solution(&spec).map_err(e)?;
            let alpha = veronese_form(sol.f(), &sol.lambdas()).map_err(e)?;
            check(frobenius_check(&alpha).map_err(e)?, || {
                format!("{spec} not integrable")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} Veronese forms integrable"))
}

fn interpolation_identities() -> Outcome {
    let mut instances = 0;
    let mut specs = 0;
    for n in 2..=5 {
        for (k, l) in orders(n) {
            for spec in [
                WebSpec::symbolic(n, k, l).map_err(e)?,
                WebSpec::with_default_nodes(n, k, l).map_err(e)?,
            ] {
                check(interpolation_check(&spec).map_err(e)?, || {
                    format!("{spec} fails interpolation")
                })?;
                specs += 1;
            }
            let seed = 7 + 31 * n as u64 + k as u64;
            for (spec, x) in random_instances(k, l, 100, 20, seed).map_err(e)? {
                let det = solve_by_determinants(&spec, &x).map_err(e)?;
                let oracle = solve_oracle(&spec, &x).map_err(e)?;
                check(det == oracle, || {
                    format!("{spec} differs from elimination at {x:?}")
                })?;
                instances += 1;
            }
        }
    }
    Ok(format!(
        "{specs} interpolation checks, {instances} oracle instances"
    ))
}

fn restriction() -> Outcome {
    let spec = WebSpec::with_default_nodes(4, 2, 1).map_err(e)?;
    let sol = build_solution(&spec).map_err(e)?;
    let xs: Vec<usize> = (0..3).collect();

    let at_zero = restrict(&sol, 3, &Rational::zero()).map_err(e)?;
    let verdict = verify_function(&at_zero.f, &at_zero.lambdas(), Strategy::Symbolic).map_err(e)?;
    check(verdict.passed(), || {
        "x4 = 0 restriction is not a solution".into()
    })?;
    let props = structural_properties(at_zero.f.num(), at_zero.f.den(), &xs).map_err(e)?;
    check(props.homogeneous() && props.degree_gap_one(), || {
        "x4 = 0 restriction loses properties 1-2".into()
    })?;
    check(!props.coefficients_sum_to_zero(), || {
        "x4 = 0 restriction keeps property 3".into()
    })?;

    let at_one = restrict(&sol, 3, &Rational::one()).map_err(e)?;
    let verdict = verify_function(&at_one.f, &at_one.lambdas(), Strategy::Symbolic).map_err(e)?;
    check(verdict.passed(), || {
        "x4 = 1 restriction is not a solution".into()
    })?;
    let props = structural_properties(at_one.f.num(), at_one.f.den(), &xs).map_err(e)?;
    check(!props.homogeneous(), || {
        "x4 = 1 restriction stays homogeneous".into()
    })?;
    Ok("x4 = 0 keeps 1-2 and breaks 3; x4 = 1 breaks homogeneity".into())
}

fn mobius_closure() -> Outcome {
    let spec = WebSpec::with_default_nodes(3, 1, 1).map_err(e)?;
    let sol = build_solution(&spec).map_err(e)?;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for round in 0..20 {
        let outer = Mobius::random(&mut rng, 5);
        let inner: Vec<Mobius> = (0..3).map(|_| Mobius::random(&mut rng, 5)).collect();
        let g = transform(sol.f(), &outer, &inner).map_err(e)?;
        let verdict = verify_function(&g, &sol.lambdas(), Strategy::Symbolic).map_err(e)?;
        check(verdict.passed(), || {
            format!("transform {round} ({outer}) breaks the equation")
        })?;
    }
    Ok("20 random transforms verified".into())
}

fn coframe_proportionality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checks = 0;
    for n in 2..=4 {
        for (k, l) in orders(n) {
            let spec = WebSpec::with_default_nodes(n, k, l).map_err(e)?;
            let sol = build_solution(&spec).map_err(e)?;
            let alpha = veronese_form(sol.f(), &sol.lambdas()).map_err(e)?;
            let frame = coframe(&spec).map_err(e)?;
            for _ in 0..5 {
                let mu = Rational::new(rng.gen_range(-50..=50).into(), rng.gen_range(1..=7).into());
                let a = alpha.evaluate(&mu).map_err(e)?;
                let b = frame.at(&mu).map_err(e)?;
                let mut points = 0;
                while points < 5 {
                    let x: Vec<Rational> = (0..n)
                        .map(|_| Rational::from_integer(rng.gen_range(-30..=30).into()))
                        .collect();
                    match proportional_at(&a, &b, &x) {
                        Ok(true) => points += 1,
                        Ok(false) => {
                            return Err(format!("{spec}: not proportional at mu = {mu}, x = {x:?}"))
                        }
                        Err(Error::EvaluationPole(_)) => continue,
                        Err(other) => return Err(other.to_string()),
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} (mu, x) pairs proportional"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "3D closed form",
            limit: LIMIT_3D_DISPLAY,
            run: closed_form_3d,
        },
        Criterion {
            id: 2,
            name: "4D closed form",
            limit: LIMIT_4D_DISPLAY,
            run: closed_form_4d,
        },
        Criterion {
            id: 3,
            name: "5D closed forms",
            limit: LIMIT_5D_DISPLAYS,
            run: closed_forms_5d,
        },
        Criterion {
            id: 4,
            name: "residuals vanish",
            limit: LIMIT_RESIDUALS,
            run: residuals,
        },
        Criterion {
            id: 5,
            name: "structural properties",
            limit: LIMIT_PROPERTIES,
            run: structural_properties_hold,
        },
        Criterion {
            id: 6,
            name: "flatness dichotomy",
            limit: LIMIT_FLATNESS,
            run: flatness,
        },
        Criterion {
            id: 7,
            name: "Frobenius integrability",
            limit: LIMIT_FROBENIUS,
            run: frobenius,
        },
        Criterion {
            id: 8,
            name: "interpolation identities",
            limit: LIMIT_INTERPOLATION,
            run: interpolation_identities,
        },
        Criterion {
            id: 9,
            name: "restriction",
            limit: LIMIT_RESTRICTION,
            run: restriction,
        },
        Criterion {
            id: 10,
            name: "Mobius closure",
            limit: LIMIT_MOBIUS,
            run: mobius_closure,
        },
        Criterion {
            id: 11,
            name: "coframe proportionality",
            limit: LIMIT_PROPORTIONALITY,
            run: coframe_proportionality,
        },
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut unexpected = 0;
    for c in &criteria {
        let label = format!("AC-{}", c.id);
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|f| label.contains(f.as_str()) || c.name.contains(f.as_str()))
        {
            continue;
        }
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (passed, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {:?} budget", c.limit)),
            Err(d) => (false, d),
        };
        let known = KNOWN_UNATTAINABLE.contains(&c.id);
        let tag = if passed { "PASS" } else { "FAIL" };
        let note = match (passed, known) {
            (false, true) => " (known unattainable)",
            (true, true) => " (expected to fail)",
            _ => "",
        };
        println!(
            "[{tag}] {label:<5} {:<25} {:>9.3}s  {detail}{note}",
            c.name,
            elapsed.as_secs_f64()
        );
        if passed == known {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use hirota_core::hirota::solution_properties;
use hirota_core::ratfun::RationalFunctionJson;
use hirota_core::rational::to_f64;
use hirota_core::{
    build_solution, flatness_check, hirota_residual, interpolation_check, random_instances,
    restrict, solve_by_determinants, solve_oracle, verify_function, FlatnessStatus, HirotaVerdict,
    MultiPoly, Rational, RationalFunction, Restriction, Strategy, VarNames, WebSpec,
};

use crate::args::{CheckArgs, Command};
use crate::report::{latex_names, Report};

/// Input or configuration problems; reported with exit code 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl<E: std::fmt::Display> From<E> for ConfigError {
    fn from(e: E) -> Self {
        ConfigError(e.to_string())
    }
}

type Outcome = Result<Report, ConfigError>;

pub fn run(command: &Command) -> Outcome {
    let spec = command.common().spec().map_err(ConfigError)?;
    match command {
        Command::Generate(_) => generate(&spec),
        Command::Verify {
            check, function, ..
        } => verify(&spec, check, function.as_deref()),
        Command::Flatness(_) => flatness(&spec),
        Command::Restrict { check, fix, .. } => restriction(&spec, check, fix),
        Command::Properties(_) => properties(&spec),
        Command::Oracle {
            count, range, seed, ..
        } => oracle(&spec, *count as usize, *range, *seed),
    }
}

fn generate(spec: &WebSpec) -> Outcome {
    let solution = build_solution(spec)?;
    let mut report = Report::new("generate", spec);
    report.poly(&format!("P_{}", spec.k()), solution.p_top());
    report.poly(&format!("Q_{}", spec.l()), solution.q_top());
    report.quotient("f", solution.p_top(), solution.q_top());
    report.check(
        "interpolant",
        true,
        format!(
            "P_{} has {} terms, Q_{} has {} terms",
            spec.k(),
            solution.p_top().len(),
            spec.l(),
            solution.q_top().len()
        ),
    );
    Ok(report)
}

fn triple_name(t: (usize, usize, usize), labels: &[usize]) -> String {
    format!(
        "triple ({},{},{})",
        labels[t.0] + 1,
        labels[t.1] + 1,
        labels[t.2] + 1
    )
}

/// Adds one result per triple, plus the sampling bound and the failing
/// residuals.
fn record_verdict(
    report: &mut Report,
    verdict: &HirotaVerdict,
    f: &RationalFunction,
    lambdas: &[MultiPoly],
    labels: &[usize],
) -> Result<(), ConfigError> {
    if verdict.triples.is_empty() {
        report.check("residual", true, "no triples below dimension 3");
    }
    for t in &verdict.triples {
        let detail = match (t.numerator_terms, t.failed_trials) {
            (Some(terms), _) => format!("residual numerator has {terms} terms"),
            (_, Some(failed)) => format!("{failed} nonzero samples"),
            _ => String::new(),
        };
        report.check(triple_name(t.triple, labels), t.passed, detail);
    }
    if let (Some(per_trial), Some(total)) =
        (&verdict.failure_bound_per_trial, verdict.failure_bound())
    {
        report.check(
            "failure bound",
            true,
            format!(
                "degree <= {}, per trial {} (~{:.3e}), all trials {:.3e}",
                verdict.degree_bound,
                per_trial,
                to_f64(per_trial),
                to_f64(&total)
            ),
        );
    }
    if matches!(verdict.strategy, Strategy::Symbolic) {
        for t in verdict.triples.iter().filter(|t| !t.passed) {
            let residual = hirota_residual(f, lambdas, t.triple)?;
            let (i, j, k) = t.triple;
            let name = format!(
                "residual_{}{}{}",
                labels[i] + 1,
                labels[j] + 1,
                labels[k] + 1
            );
            report.function(&name, &residual);
        }
    }
    Ok(())
}

fn read_function(source: &str, spec: &WebSpec) -> Result<RationalFunction, ConfigError> {
    let text = if source.trim_start().starts_with('{') {
        source.to_string()
    } else {
        std::fs::read_to_string(source).map_err(|e| ConfigError(format!("{source}: {e}")))?
    };
    let json: RationalFunctionJson = serde_json::from_str(&text)?;
    let f = RationalFunction::from_json(&json)?;
    if f.nvars() != spec.ring_vars() {
        return Err(ConfigError(format!(
            "function has {} variables, the web ring has {}",
            f.nvars(),
            spec.ring_vars()
        )));
    }
    Ok(f)
}

fn verify(spec: &WebSpec, check: &CheckArgs, function: Option<&str>) -> Outcome {
    let f = match function {
        Some(source) => read_function(source, spec)?,
        None => build_solution(spec)?.f().clone(),
    };
    let lambdas = spec.node_polys();
    let verdict = verify_function(&f, &lambdas, check.strategy())?;
    let mut report = Report::new("verify", spec);
    report.function("f", &f);
    let labels: Vec<usize> = (0..spec.n()).collect();
    record_verdict(&mut report, &verdict, &f, &lambdas, &labels)?;
    Ok(report)
}

fn flatness(spec: &WebSpec) -> Outcome {
    let verdict = flatness_check(spec)?;
    let mut report = Report::new("flatness", spec);
    report.value("verdict", verdict.status.as_str().to_string());
    report.form("witness_1", &verdict.witness);
    let n2 = spec.n() - 2;
    if n2 != 1 {
        report.form(&format!("witness_{n2}"), &verdict.alt_witness);
    }
    let integrable = |yes: bool| if yes { "integrable" } else { "not integrable" };
    let mut detail = format!(
        "{}: alpha_1 {}",
        verdict.status.as_str(),
        integrable(verdict.alpha_1_integrable())
    );
    if n2 != 1 {
        detail += &format!(", alpha_{n2} {}", integrable(verdict.alpha_n2_integrable()));
    }
    report.check(
        "verdict",
        verdict.status != FlatnessStatus::Inconclusive,
        detail,
    );
    if let Some(holds) = verdict.witness_identity {
        report.check(
            "witness identity",
            holds,
            "d(alpha_1)^alpha_1 = 2 dq_1^dp_0^dp_1 after clearing Q_0^2",
        );
    }
    Ok(report)
}

fn restriction(spec: &WebSpec, check: &CheckArgs, fixes: &[(usize, Rational)]) -> Outcome {
    let n = spec.n();
    let mut fixes = fixes.to_vec();
    fixes.sort_by_key(|&(i, _)| std::cmp::Reverse(i));
    if let Some((i, _)) = fixes.iter().find(|(i, _)| *i >= n) {
        return Err(ConfigError(format!(
            "x{} is not a coordinate in dimension {n}",
            i + 1
        )));
    }
    if fixes.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(ConfigError("a coordinate is fixed twice".into()));
    }
    let solution = build_solution(spec)?;
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut restricted: Option<Restriction> = None;
    // highest index first, so earlier removals do not shift later ones
    for (var, value) in &fixes {
        restricted = Some(match restricted {
            None => restrict(&solution, *var, value)?,
            Some(r) => r.restrict(*var, value)?,
        });
        remaining.remove(*var);
    }
    let restricted = restricted.expect("at least one --fix");

    let mut report = Report::new("restrict", spec);
    let fixed: Vec<String> = fixes
        .iter()
        .rev()
        .map(|(i, v)| format!("x{}={v}", i + 1))
        .collect();
    report.value("fixed", fixed.join(", "));
    let text = VarNames::new(remaining.iter().map(|i| format!("x{}", i + 1)).collect());
    let all_latex = latex_names(n, false);
    let latex = VarNames::new(remaining.iter().map(|&i| all_latex.name(i)).collect());
    report.rename(text, latex);
    report.function("f", &restricted.f);

    let lambdas = restricted.lambdas();
    let verdict = verify_function(&restricted.f, &lambdas, check.strategy())?;
    record_verdict(&mut report, &verdict, &restricted.f, &lambdas, &remaining)?;
    Ok(report)
}

fn properties(spec: &WebSpec) -> Outcome {
    let solution = build_solution(spec)?;
    let props = solution_properties(&solution)?;
    let mut report = Report::new("properties", spec);
    report.poly(&format!("P_{}", spec.k()), solution.p_top());
    report.poly(&format!("Q_{}", spec.l()), solution.q_top());
    let degree = |d: Option<u32>| d.map_or("inhomogeneous".to_string(), |d| d.to_string());
    report.check(
        "property-1 homogeneous",
        props.homogeneous(),
        format!(
            "deg P_{} = {}, deg Q_{} = {}",
            spec.k(),
            degree(props.num_degree),
            spec.l(),
            degree(props.den_degree)
        ),
    );
    report.check(
        "property-2 degree gap",
        props.degree_gap_one(),
        format!("deg P_{} = deg Q_{} + 1", spec.k(), spec.l()),
    );
    let names = spec.var_names();
    report.check(
        "property-3 coefficient sums",
        props.coefficients_sum_to_zero(),
        format!(
            "P_{}(1,..,1) = {}, Q_{}(1,..,1) = {}",
            spec.k(),
            props.num_sum.render(&names),
            spec.l(),
            props.den_sum.render(&names)
        ),
    );
    Ok(report)
}

fn oracle(spec: &WebSpec, count: usize, range: i64, seed: u64) -> Outcome {
    let mut report = Report::new("oracle", spec);
    report.check(
        "interpolation identities",
        interpolation_check(spec)?,
        "P(l_i) = x_i Q(l_i) for every node",
    );
    let instances = random_instances(spec.k(), spec.l(), count, range, seed)?;
    let mut mismatch = None;
    for (index, (instance, x)) in instances.iter().enumerate() {
        if solve_by_determinants(instance, x)? != solve_oracle(instance, x)? {
            mismatch = Some((index, instance, x));
            break;
        }
    }
    let detail = match mismatch {
        None => format!("{count} random instances agree (seed {seed}, range {range})"),
        Some((index, instance, x)) => {
            let values: Vec<String> = x.iter().map(ToString::to_string).collect();
            format!(
                "instance {index} differs: {instance}, x=({})",
                values.join(",")
            )
        }
    };
    report.check("determinants vs elimination", mismatch.is_none(), detail);
    Ok(report)
}

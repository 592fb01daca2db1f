//! The rational solutions `f = P_k / Q_l` and their Hirota residuals.
//!
//! For `f = N/D` the quotient rule gives, with `A_i = N_i D - N D_i`,
//!
//! ```text
//! f_i  = A_i / D^2
//! f_jk = (A_jk D - 2 A_j D_k) / D^3,   A_jk = N_jk D + N_j D_k - N_k D_j - N D_jk
//! ```
//!
//! so every residual has the common denominator `D^5` and vanishes exactly
//! when its numerator does.

use std::collections::HashMap;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interpolation::{highest_coefficients, WebSpec};
use crate::poly::MultiPoly;
use crate::ratfun::RationalFunction;
use crate::rational::{int, Rational};

/// `f = P_k / Q_l` for a web specification.
#[derive(Clone, Debug)]
pub struct HirotaSolution {
    spec: WebSpec,
    f: RationalFunction,
    p_top: MultiPoly,
    q_top: MultiPoly,
}

impl HirotaSolution {
    pub fn spec(&self) -> &WebSpec {
        &self.spec
    }

    pub fn f(&self) -> &RationalFunction {
        &self.f
    }

    /// `P_k`, the leading numerator coefficient.
    pub fn p_top(&self) -> &MultiPoly {
        &self.p_top
    }

    /// `Q_l`, the leading denominator coefficient.
    pub fn q_top(&self) -> &MultiPoly {
        &self.q_top
    }

    /// The orders `[k/0]` and `[0/l]` give flat webs.
    pub fn is_degenerate(&self) -> bool {
        self.spec.k() == 0 || self.spec.l() == 0
    }

    /// Nodes as polynomials of the solution's ring.
    pub fn lambdas(&self) -> Vec<MultiPoly> {
        self.spec.node_polys()
    }
}

pub fn build_solution(spec: &WebSpec) -> Result<HirotaSolution> {
    let (p_top, q_top) = highest_coefficients(spec)?;
    if q_top.is_zero() {
        return Err(Error::Spec(format!("Q_l vanishes identically for {spec}")));
    }
    let f = RationalFunction::new(p_top.clone(), q_top.clone())?;
    Ok(HirotaSolution {
        spec: spec.clone(),
        f,
        p_top,
        q_top,
    })
}

/// All triples `i < j < k`; the residual is alternating in its indices so
/// other orderings only flip the sign.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn check_triple(dim: usize, (i, j, k): (usize, usize, usize)) -> Result<()> {
    if i >= dim || j >= dim || k >= dim {
        return Err(Error::Index(format!(
            "triple ({}, {}, {}) outside 1..{dim}",
            i + 1,
            j + 1,
            k + 1
        )));
    }
    if i == j || j == k || i == k {
        return Err(Error::Index(format!(
            "triple ({}, {}, {}) is not pairwise distinct",
            i + 1,
            j + 1,
            k + 1
        )));
    }
    Ok(())
}

/// Values (polynomials or numbers) of `N`, `D` and their partials.
struct Jet<T> {
    n: T,
    d: T,
    n1: Vec<T>,
    d1: Vec<T>,
    n2: HashMap<(usize, usize), T>,
    d2: HashMap<(usize, usize), T>,
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Jet<MultiPoly> {
    fn new(f: &RationalFunction, dim: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let (num, den) = (f.num(), f.den());
        let n1 = (0..dim)
            .map(|v| num.derivative(v))
            .collect::<Result<Vec<_>>>()?;
        let d1 = (0..dim)
            .map(|v| den.derivative(v))
            .collect::<Result<Vec<_>>>()?;
        let mut n2 = HashMap::new();
        let mut d2 = HashMap::new();
        for &(a, b) in pairs {
            n2.insert((a, b), n1[a].derivative(b)?);
            d2.insert((a, b), d1[a].derivative(b)?);
        }
        Ok(Jet {
            n: num.clone(),
            d: den.clone(),
            n1,
            d1,
            n2,
            d2,
        })
    }

    fn eval(&self, point: &[Rational]) -> Result<Jet<Rational>> {
        let ev = |p: &MultiPoly| p.eval(point);
        let ev_map = |m: &HashMap<(usize, usize), MultiPoly>| {
            m.iter()
                .map(|(key, p)| Ok((*key, p.eval(point)?)))
                .collect::<Result<HashMap<_, _>>>()
        };
        Ok(Jet {
            n: ev(&self.n)?,
            d: ev(&self.d)?,
            n1: self.n1.iter().map(ev).collect::<Result<_>>()?,
            d1: self.d1.iter().map(ev).collect::<Result<_>>()?,
            n2: ev_map(&self.n2)?,
            d2: ev_map(&self.d2)?,
        })
    }
}

impl<T> Jet<T>
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    /// Numerator of `f_i` over `D^2`.
    fn first(&self, i: usize) -> T {
        &(&self.n1[i] * &self.d) - &(&self.n * &self.d1[i])
    }

    /// Numerator of `f_jk` over `D^3`.
    fn second(&self, j: usize, k: usize, first_j: &T, two: &T) -> T {
        let key = ordered(j, k);
        let a_jk = &(&(&(&self.n2[&key] * &self.d) + &(&self.n1[j] * &self.d1[k]))
            - &(&self.n1[k] * &self.d1[j]))
            - &(&self.n * &self.d2[&key]);
        &(&a_jk * &self.d) - &(&(two * first_j) * &self.d1[k])
    }

    /// Numerator of the residual over `D^5`.
    fn residual(&self, lambdas: &[T], (i, j, k): (usize, usize, usize), two: &T) -> T {
        let (a_i, a_j, a_k) = (self.first(i), self.first(j), self.first(k));
        let b_jk = self.second(j, k, &a_j, two);
        let b_ki = self.second(k, i, &a_k, two);
        let b_ij = self.second(i, j, &a_i, two);
        let t1 = &(&(&lambdas[j] - &lambdas[k]) * &a_i) * &b_jk;
        let t2 = &(&(&lambdas[k] - &lambdas[i]) * &a_j) * &b_ki;
        let t3 = &(&(&lambdas[i] - &lambdas[j]) * &a_k) * &b_ij;
        &(&t1 + &t2) + &t3
    }
}

fn triple_pairs(triples: &[(usize, usize, usize)]) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = triples
        .iter()
        .flat_map(|&(i, j, k)| [ordered(i, j), ordered(j, k), ordered(i, k)])
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

fn check_lambdas(f: &RationalFunction, lambdas: &[MultiPoly]) -> Result<()> {
    if lambdas.len() > f.nvars() {
        return Err(Error::Dimension(format!(
            "{} nodes for a function of {} variables",
            lambdas.len(),
            f.nvars()
        )));
    }
    if lambdas.iter().any(|l| l.nvars() != f.nvars()) {
        return Err(Error::Dimension("nodes from a different ring".into()));
    }
    Ok(())
}

/// `(λ_j - λ_k) f_i f_jk + (λ_k - λ_i) f_j f_ki + (λ_i - λ_j) f_k f_ij` for
/// 0-based indices. The nodes are polynomials of `f`'s ring, so they may be
/// constants or free parameters; `f` depends on `x_1..x_m`, `m = lambdas.len()`.
pub fn hirota_residual(
    f: &RationalFunction,
    lambdas: &[MultiPoly],
    triple: (usize, usize, usize),
) -> Result<RationalFunction> {
    check_lambdas(f, lambdas)?;
    check_triple(lambdas.len(), triple)?;
    let jet = Jet::new(f, lambdas.len(), &triple_pairs(&[triple]))?;
    let two = MultiPoly::constant(f.nvars(), int(2));
    let numerator = jet.residual(lambdas, triple, &two);
    RationalFunction::new(numerator, f.den().pow(5))
}

/// How to decide that a residual numerator vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Expand the numerator and test it for the zero polynomial.
    Symbolic,
    /// Evaluate the numerator exactly at `trials` random integer points with
    /// coordinates in `[-bound, bound]`.
    Sampled {
        trials: usize,
        bound: u64,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct TripleVerdict {
    /// 0-based indices `i < j < k`.
    pub triple: (usize, usize, usize),
    pub passed: bool,
    /// Terms of the expanded numerator (symbolic strategy only).
    pub numerator_terms: Option<usize>,
    /// Number of sample points with a nonzero value (sampled strategy only).
    pub failed_trials: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HirotaVerdict {
    pub strategy: Strategy,
    pub triples: Vec<TripleVerdict>,
    /// Upper bound on the total degree of each residual numerator.
    pub degree_bound: u32,
    /// Schwartz–Zippel bound `degree / (2 bound + 1)` on the chance that a
    /// single sample misses a nonzero residual.
    pub failure_bound_per_trial: Option<Rational>,
}

impl HirotaVerdict {
    pub fn passed(&self) -> bool {
        self.triples.iter().all(|t| t.passed)
    }

    /// Bound on the chance that all trials of one triple miss a nonzero residual.
    pub fn failure_bound(&self) -> Option<Rational> {
        match (self.strategy, &self.failure_bound_per_trial) {
            (Strategy::Sampled { trials, .. }, Some(p)) => {
                Some((0..trials).fold(Rational::one(), |acc, _| acc * p))
            }
            _ => None,
        }
    }
}

fn degree_bound(f: &RationalFunction, lambdas: &[MultiPoly]) -> u32 {
    let dn = f.num().total_degree();
    let dd = f.den().total_degree();
    let dl = lambdas
        .iter()
        .map(MultiPoly::total_degree)
        .max()
        .unwrap_or(0);
    // λ-difference + deg A_i + deg B_jk
    (dl + 2 * dn + 3 * dd).saturating_sub(3)
}

/// Checks every triple residual of an arbitrary function.
pub fn verify_function(
    f: &RationalFunction,
    lambdas: &[MultiPoly],
    strategy: Strategy,
) -> Result<HirotaVerdict> {
    check_lambdas(f, lambdas)?;
    let all = triples(lambdas.len());
    let jet = Jet::new(f, lambdas.len(), &triple_pairs(&all))?;
    let degree_bound = degree_bound(f, lambdas);
    match strategy {
        Strategy::Symbolic => {
            let two = MultiPoly::constant(f.nvars(), int(2));
            let verdicts = all
                .par_iter()
                .map(|&t| {
                    let numerator = jet.residual(lambdas, t, &two);
                    TripleVerdict {
                        triple: t,
                        passed: numerator.is_zero(),
                        numerator_terms: Some(numerator.len()),
                        failed_trials: None,
                    }
                })
                .collect();
            Ok(HirotaVerdict {
                strategy,
                triples: verdicts,
                degree_bound,
                failure_bound_per_trial: None,
            })
        }
        Strategy::Sampled {
            trials,
            bound,
            seed,
        } => {
            if trials == 0 {
                return Err(Error::Spec(
                    "sampled verification needs at least one trial".into(),
                ));
            }
            let bound_i = i64::try_from(bound)
                .map_err(|_| Error::Spec(format!("sample bound {bound} too large")))?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let points: Vec<Vec<Rational>> = (0..trials)
                .map(|_| {
                    (0..f.nvars())
                        .map(|_| int(rng.gen_range(-bound_i..=bound_i)))
                        .collect()
                })
                .collect();
            let values = points
                .par_iter()
                .map(|p| {
                    let jet = jet.eval(p)?;
                    let nodes = lambdas
                        .iter()
                        .map(|l| l.eval(p))
                        .collect::<Result<Vec<_>>>()?;
                    Ok((jet, nodes))
                })
                .collect::<Result<Vec<_>>>()?;
            let two = int(2);
            let verdicts = all
                .iter()
                .map(|&t| {
                    let failed = values
                        .iter()
                        .filter(|(jet, nodes)| !jet.residual(nodes, t, &two).is_zero())
                        .count();
                    TripleVerdict {
                        triple: t,
                        passed: failed == 0,
                        numerator_terms: None,
                        failed_trials: Some(failed),
                    }
                })
                .collect();
            let sample_size = Rational::from_integer((2 * bound + 1).into());
            Ok(HirotaVerdict {
                strategy,
                triples: verdicts,
                degree_bound,
                failure_bound_per_trial: Some(
                    Rational::from_integer(degree_bound.into()) / sample_size,
                ),
            })
        }
    }
}

/// Checks all triple residuals of a solution.
pub fn verify_hirota(solution: &HirotaSolution, strategy: Strategy) -> Result<HirotaVerdict> {
    verify_function(solution.f(), &solution.lambdas(), strategy)
}

/// The structural properties shared by all `P_k / Q_l` solutions.
#[derive(Clone, Debug, PartialEq)]
pub struct StructuralProperties {
    /// Degree of the numerator if homogeneous in `x`.
    pub num_degree: Option<u32>,
    /// Degree of the denominator if homogeneous in `x`.
    pub den_degree: Option<u32>,
    /// Numerator at `x = (1, .., 1)` (a polynomial in the nodes when symbolic).
    pub num_sum: MultiPoly,
    /// Denominator at `x = (1, .., 1)`.
    pub den_sum: MultiPoly,
}

impl StructuralProperties {
    /// Numerator and denominator are both homogeneous in `x`.
    pub fn homogeneous(&self) -> bool {
        self.num_degree.is_some() && self.den_degree.is_some()
    }

    /// `deg num = deg den + 1` (total degrees in `x`).
    pub fn degree_gap_one(&self) -> bool {
        match (self.num_degree, self.den_degree) {
            (Some(p), Some(q)) => p == q + 1,
            _ => false,
        }
    }

    pub fn num_coefficients_sum_to_zero(&self) -> bool {
        self.num_sum.is_zero()
    }

    pub fn den_coefficients_sum_to_zero(&self) -> bool {
        self.den_sum.is_zero()
    }

    pub fn coefficients_sum_to_zero(&self) -> bool {
        self.num_coefficients_sum_to_zero() && self.den_coefficients_sum_to_zero()
    }
}

/// Homogeneity, degree gap and coefficient sums of `num / den` in the
/// variables `x_vars`.
pub fn structural_properties(
    num: &MultiPoly,
    den: &MultiPoly,
    x_vars: &[usize],
) -> Result<StructuralProperties> {
    let ones: Vec<(usize, Rational)> = x_vars.iter().map(|&v| (v, Rational::one())).collect();
    Ok(StructuralProperties {
        num_degree: num.homogeneity(x_vars),
        den_degree: den.homogeneity(x_vars),
        num_sum: num.substitute_constants(&ones)?,
        den_sum: den.substitute_constants(&ones)?,
    })
}

/// [`structural_properties`] of `P_k` and `Q_l`.
pub fn solution_properties(solution: &HirotaSolution) -> Result<StructuralProperties> {
    structural_properties(
        solution.p_top(),
        solution.q_top(),
        &solution.spec().x_vars(),
    )
}

/// The scalar `c` with `a = c b`, if there is one.
pub fn scalar_ratio(a: &MultiPoly, b: &MultiPoly) -> Option<Rational> {
    let (mb, cb) = b.leading_term()?;
    let ca = a.coefficient(mb);
    if ca.is_zero() {
        return None;
    }
    let c = ca / cb;
    (b.scale(&c) == *a).then_some(c)
}

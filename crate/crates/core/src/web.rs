//! Veronese one-forms, the coframe of a Cauchy interpolant, Frobenius
//! integrability and the flatness certificate.

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::forms::{clear_denominators_jointly, DifferentialForm};
use crate::interpolation::{cauchy_interpolant, WebSpec};
use crate::lambda_poly::LambdaPoly;
use crate::poly::MultiPoly;
use crate::ratfun::RationalFunction;
use crate::rational::Rational;

/// Coefficients of `Π (λ - r)` over polynomial roots, lowest power first.
fn linear_factor_product(roots: &[&MultiPoly], nvars: usize) -> Vec<MultiPoly> {
    let mut coeffs = vec![MultiPoly::one(nvars)];
    for r in roots {
        let mut next = vec![MultiPoly::zero(nvars); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * *r);
        }
        coeffs = next;
    }
    coeffs
}

/// `α^λ = Σ_i f_i Π_{j≠i} (λ - λ_j) dx_i`, the form annihilating the web of
/// `f`. Nodes are polynomials of `f`'s ring (usually constants) and must be
/// pairwise distinct.
pub fn veronese_form(
    f: &RationalFunction,
    lambdas: &[MultiPoly],
) -> Result<LambdaPoly<DifferentialForm>> {
    let dim = lambdas.len();
    let nvars = f.nvars();
    if dim == 0 || dim > nvars {
        return Err(Error::Dimension(format!(
            "{dim} nodes for {nvars} variables"
        )));
    }
    for i in 0..dim {
        for j in i + 1..dim {
            if lambdas[i] == lambdas[j] {
                return Err(Error::Spec(format!(
                    "repeated node at positions {} and {}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let partials = (0..dim)
        .map(|i| f.derivative(i))
        .collect::<Result<Vec<_>>>()?;
    let weights: Vec<Vec<MultiPoly>> = (0..dim)
        .map(|i| {
            let others: Vec<&MultiPoly> =
                (0..dim).filter(|&j| j != i).map(|j| &lambdas[j]).collect();
            linear_factor_product(&others, nvars)
        })
        .collect();
    let coeffs = (0..dim)
        .map(|m| {
            let row = (0..dim)
                .map(|i| partials[i].mul_poly(&weights[i][m]))
                .collect();
            DifferentialForm::one_form(row, nvars)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LambdaPoly::new(coeffs))
}

/// Convenience wrapper for numeric nodes.
pub fn veronese_form_numeric(
    f: &RationalFunction,
    lambdas: &[Rational],
) -> Result<LambdaPoly<DifferentialForm>> {
    let polys: Vec<MultiPoly> = lambdas
        .iter()
        .map(|l| MultiPoly::constant(f.nvars(), l.clone()))
        .collect();
    veronese_form(f, &polys)
}

/// The λ-coefficients of `dα^λ ∧ α^λ` after clearing denominators, lowest
/// power first.
pub fn frobenius_obstruction(
    alpha: &LambdaPoly<DifferentialForm>,
) -> Result<Vec<DifferentialForm>> {
    let coeffs = alpha.coefficients();
    if coeffs.iter().any(|c| c.degree() != 1) {
        return Err(Error::Dimension(
            "Frobenius test needs a family of 1-forms".into(),
        ));
    }
    let (cleared, _) = clear_denominators_jointly(coeffs);
    let derivatives = cleared
        .iter()
        .map(DifferentialForm::exterior_derivative)
        .collect::<Result<Vec<_>>>()?;
    let top = 2 * (cleared.len() - 1);
    (0..=top)
        .into_par_iter()
        .map(|m| {
            let first = &cleared[0];
            let mut acc = DifferentialForm::zero(3, first.dim(), first.nvars());
            for a in m.saturating_sub(cleared.len() - 1)..=m.min(cleared.len() - 1) {
                acc = acc.checked_add(&derivatives[a].wedge(&cleared[m - a])?)?;
            }
            Ok(acc)
        })
        .collect()
}

/// True iff `dα^λ ∧ α^λ` vanishes identically in λ.
pub fn frobenius_check(alpha: &LambdaPoly<DifferentialForm>) -> Result<bool> {
    Ok(frobenius_obstruction(alpha)?
        .iter()
        .all(DifferentialForm::is_zero))
}

/// `dα ∧ α` for a single 1-form.
pub fn integrability_form(alpha: &DifferentialForm) -> Result<DifferentialForm> {
    alpha.exterior_derivative()?.wedge(alpha)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoframeScaling {
    /// Built from the unnormalized coefficients `P_j`, `Q_i`; polynomial.
    Polynomial,
    /// Built from `p_j = P_j / Q_0`, `q_i = Q_i / Q_0`; equals the polynomial
    /// coframe divided by `Q_0^2`.
    Normalized,
}

/// `α_0, .., α_{n-1}`, the λ-coefficients of `q(λ) dp(λ) - p(λ) dq(λ)`.
#[derive(Clone, Debug)]
pub struct Coframe {
    alphas: Vec<DifferentialForm>,
    scaling: CoframeScaling,
}

impl Coframe {
    pub fn alphas(&self) -> &[DifferentialForm] {
        &self.alphas
    }

    pub fn alpha(&self, m: usize) -> &DifferentialForm {
        &self.alphas[m]
    }

    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn scaling(&self) -> CoframeScaling {
        self.scaling
    }

    pub fn as_lambda_poly(&self) -> LambdaPoly<DifferentialForm> {
        LambdaPoly::new(self.alphas.clone())
    }

    /// `Σ_m μ^m α_m`.
    pub fn at(&self, mu: &Rational) -> Result<DifferentialForm> {
        self.as_lambda_poly().evaluate(mu)
    }
}

fn assemble_coframe(
    spec: &WebSpec,
    p: &[RationalFunction],
    q: &[RationalFunction],
    scaling: CoframeScaling,
) -> Result<Coframe> {
    let n = spec.n();
    let dp = p
        .iter()
        .map(|c| DifferentialForm::differential(c, n))
        .collect::<Result<Vec<_>>>()?;
    let dq = q
        .iter()
        .map(|c| DifferentialForm::differential(c, n))
        .collect::<Result<Vec<_>>>()?;
    let nvars = spec.ring_vars();
    let alphas = (0..n)
        .map(|m| {
            let mut acc = DifferentialForm::zero(1, n, nvars);
            for i in 0..q.len() {
                if i > m || m - i >= p.len() {
                    continue;
                }
                let j = m - i;
                let term = dp[j]
                    .mul_function(&q[i])
                    .checked_sub(&dq[i].mul_function(&p[j]))?;
                acc = acc.checked_add(&term)?;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Coframe { alphas, scaling })
}

/// The polynomial coframe `α_m = Σ_{i+j=m} (Q_i dP_j - P_j dQ_i)`.
pub fn coframe(spec: &WebSpec) -> Result<Coframe> {
    let interpolant = cauchy_interpolant(spec)?;
    let lift = |c: &[MultiPoly]| {
        c.iter()
            .cloned()
            .map(RationalFunction::from_poly)
            .collect::<Vec<_>>()
    };
    assemble_coframe(
        spec,
        &lift(interpolant.p_coeffs()),
        &lift(interpolant.q_coeffs()),
        CoframeScaling::Polynomial,
    )
}

/// The coframe of the normalized interpolant, `q_0 = 1`.
pub fn coframe_normalized(spec: &WebSpec) -> Result<Coframe> {
    let (p, q) = normalized_coefficients(spec)?;
    assemble_coframe(spec, &p, &q, CoframeScaling::Normalized)
}

/// `p_j = P_j / Q_0` and `q_i = Q_i / Q_0` as rational functions.
pub fn normalized_coefficients(
    spec: &WebSpec,
) -> Result<(Vec<RationalFunction>, Vec<RationalFunction>)> {
    let interpolant = cauchy_interpolant(spec)?;
    let q0 = interpolant.q(0);
    if q0.is_zero() {
        return Err(Error::DegenerateInterpolant(
            "Q_0 vanishes identically".into(),
        ));
    }
    let divide = |c: &[MultiPoly]| {
        c.iter()
            .map(|c| RationalFunction::new(c.clone(), q0.clone()))
            .collect::<Result<Vec<_>>>()
    };
    Ok((
        divide(interpolant.p_coeffs())?,
        divide(interpolant.q_coeffs())?,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlatnessStatus {
    FlatCertified,
    NonflatCertified,
    /// `α_1` integrable but `α_{n-2}` not; neither certificate applies.
    Inconclusive,
}

impl FlatnessStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            FlatnessStatus::FlatCertified => "flat-certified",
            FlatnessStatus::NonflatCertified => "nonflat-certified",
            FlatnessStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FlatnessVerdict {
    pub status: FlatnessStatus,
    /// `dα_1 ∧ α_1` of the polynomial coframe.
    pub witness: DifferentialForm,
    /// `dα_{n-2} ∧ α_{n-2}` of the polynomial coframe.
    pub alt_witness: DifferentialForm,
    /// Index of the coframe form whose witness decided the status.
    pub witness_index: usize,
    /// Whether `Q_0^2 dα_1∧α_1 = 2 (Q_0 dQ_1 - Q_1 dQ_0)∧(Q_0 dP_0 - P_0 dQ_0)∧(Q_0 dP_1 - P_1 dQ_0)`,
    /// the polynomial form of `dα_1∧α_1 = 2 dq_1∧dp_0∧dp_1`. `None` when
    /// `k = 0` or `l = 0`, or when not requested.
    pub witness_identity: Option<bool>,
}

impl FlatnessVerdict {
    pub fn alpha_1_integrable(&self) -> bool {
        self.witness.is_zero()
    }

    pub fn alpha_n2_integrable(&self) -> bool {
        self.alt_witness.is_zero()
    }
}

/// Certifies flatness or nonflatness of the web of `P_k / Q_l`, including
/// the witness identity when `k, l ≥ 1`.
pub fn flatness_check(spec: &WebSpec) -> Result<FlatnessVerdict> {
    flatness_check_with(spec, true)
}

/// As [`flatness_check`]; the witness identity is only evaluated when
/// `check_identity` is set.
pub fn flatness_check_with(spec: &WebSpec, check_identity: bool) -> Result<FlatnessVerdict> {
    let n = spec.n();
    if n < 3 {
        return Err(Error::Spec(format!("flatness needs n ≥ 3, got n = {n}")));
    }
    let frame = coframe(spec)?;
    let (witness, alt_witness) = if n == 3 {
        let w = integrability_form(frame.alpha(1))?;
        (w.clone(), w)
    } else {
        let (w1, w2) = rayon::join(
            || integrability_form(frame.alpha(1)),
            || integrability_form(frame.alpha(n - 2)),
        );
        (w1?, w2?)
    };
    let (status, witness_index) = if !witness.is_zero() {
        (FlatnessStatus::NonflatCertified, 1)
    } else if alt_witness.is_zero() {
        (FlatnessStatus::FlatCertified, 1)
    } else {
        (FlatnessStatus::Inconclusive, n - 2)
    };
    let witness_identity = if check_identity && spec.k() >= 1 && spec.l() >= 1 {
        Some(witness_identity_holds(spec, &witness)?)
    } else {
        None
    };
    Ok(FlatnessVerdict {
        status,
        witness,
        alt_witness,
        witness_index,
        witness_identity,
    })
}

fn witness_identity_holds(spec: &WebSpec, witness: &DifferentialForm) -> Result<bool> {
    let interpolant = cauchy_interpolant(spec)?;
    let n = spec.n();
    let d =
        |p: &MultiPoly| DifferentialForm::differential(&RationalFunction::from_poly(p.clone()), n);
    let q0 = interpolant.q(0);
    let dq0 = d(&q0)?;
    // Q_0^2 d(c / Q_0) = Q_0 dC - C dQ_0
    let scaled = |c: &MultiPoly| -> Result<DifferentialForm> {
        d(c)?.mul_poly(&q0).checked_sub(&dq0.mul_poly(c))
    };
    let rhs = scaled(&interpolant.q(1))?
        .wedge(&scaled(&interpolant.p(0))?)?
        .wedge(&scaled(&interpolant.p(1))?)?
        .scale(&Rational::from_integer(2.into()));
    let lhs = witness.mul_poly(&(&q0 * &q0));
    Ok(lhs.checked_sub(&rhs)?.is_zero())
}

/// True iff two 1-forms are proportional at a point (their wedge vanishes there).
pub fn proportional_at(
    a: &DifferentialForm,
    b: &DifferentialForm,
    point: &[Rational],
) -> Result<bool> {
    let va = a.evaluate(point)?;
    let vb = b.evaluate(point)?;
    let dim = a.dim();
    let get = |v: &std::collections::BTreeMap<Vec<usize>, Rational>, i: usize| {
        v.get(&vec![i]).cloned().unwrap_or_else(Rational::zero)
    };
    for i in 0..dim {
        for j in i + 1..dim {
            let minor = get(&va, i) * get(&vb, j) - get(&va, j) * get(&vb, i);
            if !minor.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

//! Cauchy (rational) interpolation through determinants.
//!
//! For nodes `λ_1..λ_n` and values `x_1..x_n` the interpolant of order
//! `[k/l]`, `k + l + 1 = n`, is `P(λ)/Q(λ)` where `P` and `Q` are
//! `(n+1) x (n+1)` determinants sharing the same top `n x (n+1)` block
//!
//! ```text
//! [1, λ_i, .., λ_i^k, -x_i, -x_i λ_i, .., -x_i λ_i^l]
//! ```
//!
//! and differing only in the last row. Expanding along that row, the
//! coefficients of `P` and `Q` are signed maximal minors of the top block.

use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::PolyMatrix;
use crate::poly::{MultiPoly, VarNames};
use crate::ratfun::RationalFunction;
use crate::rational::{int, Rational};

/// Interpolation nodes: free parameters `l_1..l_n` or exact numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nodes {
    Symbolic,
    Numeric(Vec<Rational>),
}

/// Dimension, order `[k/l]` and nodes of a web.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebSpec {
    n: usize,
    k: usize,
    l: usize,
    nodes: Nodes,
}

impl WebSpec {
    pub fn new(n: usize, k: usize, l: usize, nodes: Nodes) -> Result<Self> {
        if n < 2 {
            return Err(Error::Spec(format!(
                "dimension must be at least 2, got {n}"
            )));
        }
        if k + l + 1 != n {
            return Err(Error::Spec(format!(
                "order [{k}/{l}] does not satisfy k + l + 1 = {n}"
            )));
        }
        if let Nodes::Numeric(values) = &nodes {
            if values.len() != n {
                return Err(Error::Spec(format!(
                    "{} nodes given for dimension {n}",
                    values.len()
                )));
            }
            for i in 0..n {
                for j in i + 1..n {
                    if values[i] == values[j] {
                        return Err(Error::Spec(format!(
                            "nodes {} and {} coincide ({})",
                            i + 1,
                            j + 1,
                            values[i]
                        )));
                    }
                }
            }
        }
        Ok(WebSpec { n, k, l, nodes })
    }

    pub fn symbolic(n: usize, k: usize, l: usize) -> Result<Self> {
        Self::new(n, k, l, Nodes::Symbolic)
    }

    pub fn numeric(k: usize, l: usize, nodes: Vec<Rational>) -> Result<Self> {
        Self::new(nodes.len(), k, l, Nodes::Numeric(nodes))
    }

    /// Numeric nodes `1, 2, .., n`.
    pub fn with_default_nodes(n: usize, k: usize, l: usize) -> Result<Self> {
        Self::new(n, k, l, Nodes::Numeric((1..=n as i64).map(int).collect()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn nodes(&self) -> &Nodes {
        &self.nodes
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.nodes, Nodes::Symbolic)
    }

    pub fn numeric_nodes(&self) -> Option<&[Rational]> {
        match &self.nodes {
            Nodes::Numeric(v) => Some(v),
            Nodes::Symbolic => None,
        }
    }

    /// Number of ring variables: `x_1..x_n`, plus `l_1..l_n` when symbolic.
    pub fn ring_vars(&self) -> usize {
        if self.is_symbolic() {
            2 * self.n
        } else {
            self.n
        }
    }

    /// Indices of the `x` variables.
    pub fn x_vars(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    /// `x_{i+1}` as a polynomial.
    pub fn x(&self, i: usize) -> MultiPoly {
        MultiPoly::var(self.ring_vars(), i)
    }

    /// Node `λ_{i+1}`: a constant or the variable `l_{i+1}`.
    pub fn node(&self, i: usize) -> MultiPoly {
        match &self.nodes {
            Nodes::Numeric(v) => MultiPoly::constant(self.ring_vars(), v[i].clone()),
            Nodes::Symbolic => MultiPoly::var(self.ring_vars(), self.n + i),
        }
    }

    pub fn node_polys(&self) -> Vec<MultiPoly> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    pub fn var_names(&self) -> VarNames {
        VarNames::hirota(self.n, self.is_symbolic())
    }
}

impl fmt::Display for WebSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [k/l]=[{}/{}] nodes=", self.n, self.k, self.l)?;
        match &self.nodes {
            Nodes::Symbolic => write!(f, "symbolic"),
            Nodes::Numeric(v) => {
                let parts: Vec<String> = v.iter().map(|r| r.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// Which of the four interpolation determinants to assemble.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemMatrix {
    /// `P(λ)`: top block plus the row `[1, λ, .., λ^k, 0, .., 0]`.
    PFull,
    /// `Q(λ)`: top block plus the row `[0, .., 0, 1, λ, .., λ^l]`.
    QFull,
    /// Top block without the `λ^k` column; its determinant gives `P_k`.
    PTop,
    /// Top block without the `-x λ^l` column; its determinant gives `Q_l`.
    QTop,
}

/// The shared `n x (n+1)` block.
pub fn top_block(spec: &WebSpec) -> PolyMatrix {
    let n = spec.n;
    let mut entries = Vec::with_capacity(n * (n + 1));
    for i in 0..n {
        let node = spec.node(i);
        let minus_x = -spec.x(i);
        let mut power = MultiPoly::one(spec.ring_vars());
        for _ in 0..=spec.k {
            entries.push(power.clone());
            power = &power * &node;
        }
        let mut power = minus_x;
        for _ in 0..=spec.l {
            entries.push(power.clone());
            power = &power * &node;
        }
    }
    PolyMatrix::new(n, n + 1, entries).expect("block shape is consistent")
}

/// Assembles one of the interpolation matrices.
///
/// For the full matrices the last row uses `lambda` as the free
/// indeterminate; when `None`, the ring is extended by one trailing variable
/// which plays that role.
pub fn build_system_matrix(
    spec: &WebSpec,
    which: SystemMatrix,
    lambda: Option<&MultiPoly>,
) -> Result<PolyMatrix> {
    let n = spec.n;
    let block = top_block(spec);
    match which {
        SystemMatrix::PTop => Ok(block.without_column(spec.k)),
        SystemMatrix::QTop => Ok(block.without_column(n)),
        SystemMatrix::PFull | SystemMatrix::QFull => {
            let (nvars, lambda) = match lambda {
                Some(p) => {
                    if p.nvars() != spec.ring_vars() {
                        return Err(Error::Dimension(
                            "lambda indeterminate from a different ring".into(),
                        ));
                    }
                    (spec.ring_vars(), p.clone())
                }
                None => (
                    spec.ring_vars() + 1,
                    MultiPoly::var(spec.ring_vars() + 1, spec.ring_vars()),
                ),
            };
            let mut rows: Vec<Vec<MultiPoly>> = (0..n)
                .map(|r| {
                    block
                        .row(r)
                        .iter()
                        .map(|e| e.extend(nvars).expect("extension to a larger ring"))
                        .collect()
                })
                .collect();
            let mut last = vec![MultiPoly::zero(nvars); n + 1];
            let (start, len) = match which {
                SystemMatrix::PFull => (0, spec.k + 1),
                _ => (spec.k + 1, spec.l + 1),
            };
            let mut power = MultiPoly::one(nvars);
            for slot in last.iter_mut().skip(start).take(len) {
                *slot = power.clone();
                power = &power * &lambda;
            }
            rows.push(last);
            PolyMatrix::from_rows(rows)
        }
    }
}

fn sign(exponent: usize) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `P_k = (-1)^{n+k} det(PTop)` and `Q_l = (-1)^{n+k+l+1} det(QTop)`.
pub fn highest_coefficients(spec: &WebSpec) -> Result<(MultiPoly, MultiPoly)> {
    let (n, k, l) = (spec.n, spec.k, spec.l);
    let p_top = build_system_matrix(spec, SystemMatrix::PTop, None)?.determinant()?;
    let q_top = build_system_matrix(spec, SystemMatrix::QTop, None)?.determinant()?;
    Ok((p_top.scale(&sign(n + k)), q_top.scale(&sign(n + k + l + 1))))
}

/// Coefficient lists of `P(λ)` and `Q(λ)`, or of the normalized `p`, `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyInterpolant {
    p: Vec<MultiPoly>,
    q: Vec<MultiPoly>,
    normalized: bool,
}

impl CauchyInterpolant {
    /// Coefficients of `λ^0..λ^k` of the numerator.
    pub fn p_coeffs(&self) -> &[MultiPoly] {
        &self.p
    }

    /// Coefficients of `λ^0..λ^l` of the denominator.
    pub fn q_coeffs(&self) -> &[MultiPoly] {
        &self.q
    }

    /// `p_j`, zero past the numerator degree.
    pub fn p(&self, j: usize) -> MultiPoly {
        self.p
            .get(j)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.nvars()))
    }

    /// `q_i`, zero past the denominator degree.
    pub fn q(&self, i: usize) -> MultiPoly {
        self.q
            .get(i)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.nvars()))
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn nvars(&self) -> usize {
        self.q[0].nvars()
    }

    /// Divides through by `Q(0)` at numeric values `x`, rejecting data where
    /// the normalized interpolant does not exist or misses a node.
    pub fn normalize_at(&self, spec: &WebSpec, x: &[Rational]) -> Result<CauchyInterpolant> {
        let (p, q) = normalized_values(self, spec, x)?;
        let nodes = spec.numeric_nodes().expect("checked by normalized_values");
        for (i, node) in nodes.iter().enumerate() {
            if horner(&q, node).is_zero() {
                return Err(Error::DegenerateInterpolant(format!(
                    "numerator and denominator share the root λ={node}; the value at node {} is unattainable",
                    i + 1
                )));
            }
        }
        let nvars = self.nvars();
        let wrap = |v: Vec<Rational>| {
            v.into_iter()
                .map(|c| MultiPoly::constant(nvars, c))
                .collect()
        };
        Ok(CauchyInterpolant {
            p: wrap(p),
            q: wrap(q),
            normalized: true,
        })
    }

    /// Numeric `p_j`, `q_i` of a normalized interpolant.
    pub fn numeric_coefficients(&self) -> Option<(Vec<Rational>, Vec<Rational>)> {
        let p = self
            .p
            .iter()
            .map(MultiPoly::as_constant)
            .collect::<Option<Vec<_>>>()?;
        let q = self
            .q
            .iter()
            .map(MultiPoly::as_constant)
            .collect::<Option<Vec<_>>>()?;
        Some((p, q))
    }
}

fn horner(coeffs: &[Rational], at: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * at + c)
}

/// `P(λ)`, `Q(λ)` as λ-row cofactors of the full determinants.
pub fn cauchy_interpolant(spec: &WebSpec) -> Result<CauchyInterpolant> {
    let (n, k) = (spec.n, spec.k);
    let minors = top_block(spec).maximal_minors()?;
    // the last row sits at index n; column j carries the sign (-1)^{n+j}
    let p = (0..=k).map(|j| minors[j].scale(&sign(n + j))).collect();
    let q = (k + 1..=n).map(|j| minors[j].scale(&sign(n + j))).collect();
    Ok(CauchyInterpolant {
        p,
        q,
        normalized: false,
    })
}

/// `(p_0..p_k, q_0..q_l)` at numeric `x`, divided by `Q(0)`.
fn normalized_values(
    interpolant: &CauchyInterpolant,
    spec: &WebSpec,
    x: &[Rational],
) -> Result<(Vec<Rational>, Vec<Rational>)> {
    if spec.numeric_nodes().is_none() {
        return Err(Error::Spec("normalization needs numeric nodes".into()));
    }
    if x.len() != spec.n {
        return Err(Error::Dimension(format!(
            "{} values for dimension {}",
            x.len(),
            spec.n
        )));
    }
    let eval = |c: &MultiPoly| c.eval(x);
    let p = interpolant.p.iter().map(eval).collect::<Result<Vec<_>>>()?;
    let q = interpolant.q.iter().map(eval).collect::<Result<Vec<_>>>()?;
    let q0 = q[0].clone();
    if q0.is_zero() {
        return Err(Error::DegenerateInterpolant(
            "Q(0) vanishes: the normalized system is singular".into(),
        ));
    }
    Ok((
        p.into_iter().map(|c| c / &q0).collect(),
        q.into_iter().map(|c| c / &q0).collect(),
    ))
}

/// Normalized interpolant at numeric data.
pub fn cauchy_interpolant_at(spec: &WebSpec, x: &[Rational]) -> Result<CauchyInterpolant> {
    cauchy_interpolant(spec)?.normalize_at(spec, x)
}

/// `(p_0, .., p_k, q_1, .., q_l)` from the determinant formulas, in the same
/// layout as [`solve_oracle`].
pub fn solve_by_determinants(spec: &WebSpec, x: &[Rational]) -> Result<Vec<Rational>> {
    let (p, q) = normalized_values(&cauchy_interpolant(spec)?, spec, x)?;
    Ok(p.into_iter().chain(q.into_iter().skip(1)).collect())
}

/// True iff `P(λ_i) - x_i Q(λ_i)` vanishes identically for every node.
pub fn interpolation_check(spec: &WebSpec) -> Result<bool> {
    let interpolant = cauchy_interpolant(spec)?;
    for i in 0..spec.n {
        let node = spec.node(i);
        let at_node = |coeffs: &[MultiPoly]| {
            coeffs
                .iter()
                .rev()
                .fold(MultiPoly::zero(spec.ring_vars()), |acc, c| {
                    &(&acc * &node) + c
                })
        };
        let residual =
            &at_node(interpolant.p_coeffs()) - &(&spec.x(i) * &at_node(interpolant.q_coeffs()));
        if !residual.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solves `p_0 + .. + p_k λ_i^k - x_i (q_1 λ_i + .. + q_l λ_i^l) = x_i` by
/// exact Gaussian elimination. Returns `(p_0, .., p_k, q_1, .., q_l)`.
pub fn solve_oracle(spec: &WebSpec, x: &[Rational]) -> Result<Vec<Rational>> {
    let nodes = spec
        .numeric_nodes()
        .ok_or_else(|| Error::Spec("the linear-solve oracle needs numeric nodes".into()))?;
    let n = spec.n;
    if x.len() != n {
        return Err(Error::Dimension(format!(
            "{} values for dimension {n}",
            x.len()
        )));
    }
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = Vec::with_capacity(n + 1);
            let mut power = Rational::one();
            for _ in 0..=spec.k {
                row.push(power.clone());
                power *= &nodes[i];
            }
            let mut power = nodes[i].clone();
            for _ in 1..=spec.l {
                row.push(-&x[i] * &power);
                power *= &nodes[i];
            }
            row.push(x[i].clone());
            row
        })
        .collect();
    gauss_solve(&mut rows, n)
        .ok_or_else(|| Error::DegenerateInterpolant("the interpolation system is singular".into()))
}

/// `count` numeric problems of order `[k/l]`: distinct integer nodes and
/// integer values in `[-range, range]`, rejection-sampled until the
/// interpolation system is nonsingular. Deterministic in `seed`.
pub fn random_instances(
    k: usize,
    l: usize,
    count: usize,
    range: i64,
    seed: u64,
) -> Result<Vec<(WebSpec, Vec<Rational>)>> {
    let n = k + l + 1;
    if (2 * range + 1) < n as i64 {
        return Err(Error::Spec(format!(
            "range {range} too small for {n} distinct nodes"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = move || Rational::from_integer(rng.gen_range(-range..=range).into());
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 100 * (count + 1) {
            return Err(Error::DegenerateInterpolant(
                "could not draw nonsingular data; widen the range".into(),
            ));
        }
        let nodes: Vec<Rational> = (0..n).map(|_| draw()).collect();
        let x: Vec<Rational> = (0..n).map(|_| draw()).collect();
        let Ok(spec) = WebSpec::numeric(k, l, nodes) else {
            continue;
        };
        if solve_oracle(&spec, &x).is_ok() {
            out.push((spec, x));
        }
    }
    Ok(out)
}

/// Solves an augmented `size x (size+1)` system in place.
fn gauss_solve(rows: &mut [Vec<Rational>], size: usize) -> Option<Vec<Rational>> {
    for col in 0..size {
        let pivot = (col..size).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for entry in &mut rows[col][col..] {
            *entry *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *entry -= &factor * p;
            }
        }
    }
    Some(rows.iter().map(|r| r[size].clone()).collect())
}

/// Value of an interpolant at a numeric λ.
#[derive(Clone, Debug, PartialEq)]
pub enum InterpolantValue {
    Number(Rational),
    Function(RationalFunction),
}

/// Evaluates `F(λ) = p(λ)/q(λ)`: exactly at numeric data (normalized
/// coefficients, or `x` given), otherwise as a rational function of `x`.
pub fn evaluate_interpolant(
    interpolant: &CauchyInterpolant,
    at: &Rational,
    x: Option<&[Rational]>,
) -> Result<InterpolantValue> {
    let at_poly = |coeffs: &[MultiPoly]| {
        coeffs
            .iter()
            .rev()
            .fold(MultiPoly::zero(interpolant.nvars()), |acc, c| {
                &acc.scale(at) + c
            })
    };
    let num = at_poly(interpolant.p_coeffs());
    let den = at_poly(interpolant.q_coeffs());
    if let (Some(n), Some(d)) = (num.as_constant(), den.as_constant()) {
        if d.is_zero() {
            return Err(Error::EvaluationPole(format!("q({at}) = 0")));
        }
        return Ok(InterpolantValue::Number(n / d));
    }
    match x {
        Some(values) => {
            if values.len() != interpolant.nvars() {
                return Err(Error::Dimension(format!(
                    "{} values for a ring with {} variables",
                    values.len(),
                    interpolant.nvars()
                )));
            }
            let d = den.eval(values)?;
            if d.is_zero() {
                return Err(Error::EvaluationPole(format!("q({at}) = 0")));
            }
            Ok(InterpolantValue::Number(num.eval(values)? / d))
        }
        None => {
            if den.is_zero() {
                return Err(Error::EvaluationPole(format!(
                    "q({at}) vanishes identically"
                )));
            }
            Ok(InterpolantValue::Function(RationalFunction::new(num, den)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn spec123() -> WebSpec {
        WebSpec::numeric(1, 1, vec![int(1), int(2), int(3)]).unwrap()
    }

    fn k3(v: i64) -> MultiPoly {
        MultiPoly::constant(3, int(v))
    }

    fn x3(i: usize) -> MultiPoly {
        MultiPoly::var(3, i - 1)
    }

    #[test]
    fn spec_validation() {
        assert!(WebSpec::numeric(1, 0, vec![int(1), int(1)]).is_err());
        assert!(WebSpec::symbolic(3, 1, 0).is_err());
        assert!(WebSpec::symbolic(1, 0, 0).is_err());
        assert_eq!(WebSpec::symbolic(3, 1, 1).unwrap().ring_vars(), 6);
    }

    #[test]
    fn q_top_matrix() {
        let m = build_system_matrix(&spec123(), SystemMatrix::QTop, None).unwrap();
        let expected = PolyMatrix::from_rows(vec![
            vec![k3(1), k3(1), -x3(1)],
            vec![k3(1), k3(2), -x3(2)],
            vec![k3(1), k3(3), -x3(3)],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn p_top_matrix() {
        let m = build_system_matrix(&spec123(), SystemMatrix::PTop, None).unwrap();
        let expected = PolyMatrix::from_rows(vec![
            vec![k3(1), -x3(1), -x3(1)],
            vec![k3(1), -x3(2), k3(-2) * x3(2)],
            vec![k3(1), -x3(3), k3(-3) * x3(3)],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn p_full_matrix_for_two_points() {
        let spec = WebSpec::numeric(1, 0, vec![int(0), int(1)]).unwrap();
        let m = build_system_matrix(&spec, SystemMatrix::PFull, None).unwrap();
        let v = |i| MultiPoly::var(3, i);
        let c = |x| MultiPoly::constant(3, int(x));
        let expected = PolyMatrix::from_rows(vec![
            vec![c(1), c(0), -v(0)],
            vec![c(1), c(1), -v(1)],
            vec![c(1), v(2), c(0)],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn highest_coefficients_three_points() {
        let (p, q) = highest_coefficients(&spec123()).unwrap();
        assert_eq!(p, x3(1) * x3(2) - k3(2) * x3(1) * x3(3) + x3(2) * x3(3));
        assert_eq!(q, -x3(1) + k3(2) * x3(2) - x3(3));
    }

    #[test]
    fn lagrange_case_has_constant_q() {
        let spec = WebSpec::numeric(2, 0, vec![int(1), int(2), int(3)]).unwrap();
        let (p, q) = highest_coefficients(&spec).unwrap();
        let q0 = q.as_constant().unwrap();
        assert!(!q0.is_zero());
        assert!(p.total_degree() == 1 && p.homogeneity(&[0, 1, 2]) == Some(1));
    }

    #[test]
    fn normalized_interpolant_examples() {
        let f = cauchy_interpolant_at(&spec123(), &[int(1), int(2), int(5)]).unwrap();
        let (p, q) = f.numeric_coefficients().unwrap();
        assert_eq!(p, vec![rat(1, 2), rat(1, 4)]);
        assert_eq!(q, vec![int(1), rat(-1, 4)]);

        let f = cauchy_interpolant_at(&spec123(), &[int(1), int(2), int(3)]).unwrap();
        let (p, q) = f.numeric_coefficients().unwrap();
        assert_eq!(p, vec![int(0), int(1)]);
        assert_eq!(q, vec![int(1), int(0)]);

        let err = cauchy_interpolant_at(&spec123(), &[int(1), int(1), int(2)]).unwrap_err();
        assert!(matches!(err, Error::DegenerateInterpolant(_)));
    }

    #[test]
    fn interpolation_conditions_hold() {
        assert!(interpolation_check(&spec123()).unwrap());
        let spec4 = WebSpec::numeric(2, 1, (1..=4).map(int).collect()).unwrap();
        assert!(interpolation_check(&spec4).unwrap());
        let line = WebSpec::numeric(1, 0, vec![int(0), int(1)]).unwrap();
        assert!(interpolation_check(&line).unwrap());
        assert!(interpolation_check(&WebSpec::symbolic(3, 1, 1).unwrap()).unwrap());
    }

    #[test]
    fn two_point_line_coefficients() {
        let line = WebSpec::numeric(1, 0, vec![int(0), int(1)]).unwrap();
        let f = cauchy_interpolant(&line).unwrap();
        // P(λ) = Q(0)·(x1 + (x2 - x1)λ) with Q(0) = 1 here up to sign
        let q0 = f.q(0).as_constant().unwrap();
        let x = |i| MultiPoly::var(2, i);
        assert_eq!(f.p(0), x(0).scale(&q0));
        assert_eq!(f.p(1), (x(1) - x(0)).scale(&q0));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            solve_oracle(&spec123(), &[int(1), int(2), int(5)]).unwrap(),
            vec![rat(1, 2), rat(1, 4), rat(-1, 4)]
        );
        assert_eq!(
            solve_oracle(&spec123(), &[int(1), int(2), int(3)]).unwrap(),
            vec![int(0), int(1), int(0)]
        );
        // constant data is only well posed in the polynomial (l = 0) case
        let c = rat(7, 3);
        let lagrange = WebSpec::numeric(2, 0, vec![int(1), int(2), int(3)]).unwrap();
        assert_eq!(
            solve_oracle(&lagrange, &[c.clone(), c.clone(), c.clone()]).unwrap(),
            vec![c, int(0), int(0)]
        );
        // solvable, even though the normalized interpolant misses node 3
        assert_eq!(
            solve_oracle(&spec123(), &[int(1), int(1), int(2)]).unwrap(),
            vec![int(1), rat(-1, 3), rat(-1, 3)]
        );
        assert!(solve_oracle(
            &WebSpec::symbolic(3, 1, 1).unwrap(),
            &[int(1), int(2), int(3)]
        )
        .is_err());
    }

    #[test]
    fn singular_system_is_reported() {
        // Q(0) = -x1 + 4x2 - 3x3 for these nodes: constant data is singular
        // when k, l >= 1 since p(λ) = c q(λ) for every q.
        for x in [[int(2), int(2), int(2)], [int(4), int(1), int(0)]] {
            assert!(matches!(
                solve_oracle(&spec123(), &x),
                Err(Error::DegenerateInterpolant(_))
            ));
            assert!(matches!(
                cauchy_interpolant_at(&spec123(), &x),
                Err(Error::DegenerateInterpolant(_))
            ));
        }
    }

    #[test]
    fn evaluation_examples() {
        let f = cauchy_interpolant_at(&spec123(), &[int(1), int(2), int(5)]).unwrap();
        assert_eq!(
            evaluate_interpolant(&f, &int(0), None).unwrap(),
            InterpolantValue::Number(rat(1, 2))
        );
        assert_eq!(
            evaluate_interpolant(&f, &int(2), None).unwrap(),
            InterpolantValue::Number(int(2))
        );
        assert!(matches!(
            evaluate_interpolant(&f, &int(4), None),
            Err(Error::EvaluationPole(_))
        ));
        let symbolic = cauchy_interpolant(&spec123()).unwrap();
        assert_eq!(
            evaluate_interpolant(&symbolic, &int(3), Some(&[int(1), int(2), int(5)])).unwrap(),
            InterpolantValue::Number(int(5))
        );
        match evaluate_interpolant(&symbolic, &int(1), None).unwrap() {
            InterpolantValue::Function(g) => assert_eq!(g, RationalFunction::from_poly(x3(1))),
            other => panic!("expected a function, got {other:?}"),
        }
    }
}

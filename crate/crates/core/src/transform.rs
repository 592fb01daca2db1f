//! Operations that map solutions to solutions: restriction to a coordinate
//! hyperplane and Möbius changes of the dependent and independent variables.

use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::hirota::HirotaSolution;
use crate::poly::{Monomial, MultiPoly};
use crate::ratfun::RationalFunction;
use crate::rational::Rational;

/// `f` with `x_var = value`, re-indexed to one variable fewer.
pub fn restrict_function(
    f: &RationalFunction,
    var: usize,
    value: &Rational,
) -> Result<RationalFunction> {
    if var >= f.nvars() {
        return Err(Error::Index(format!("no variable x{} to fix", var + 1)));
    }
    let assignment = [(var, value.clone())];
    let den = f.den().substitute_constants(&assignment)?;
    if den.is_zero() {
        return Err(Error::DegenerateRestriction(format!(
            "denominator vanishes identically at x{} = {value}",
            var + 1
        )));
    }
    let num = f.num().substitute_constants(&assignment)?;
    RationalFunction::new(num.remove_variables(&[var])?, den.remove_variables(&[var])?)
}

/// A restricted solution together with its remaining nodes.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub f: RationalFunction,
    pub nodes: Vec<Rational>,
}

impl Restriction {
    /// Nodes as constants of the restricted ring.
    pub fn lambdas(&self) -> Vec<MultiPoly> {
        self.nodes
            .iter()
            .map(|l| MultiPoly::constant(self.f.nvars(), l.clone()))
            .collect()
    }

    /// Restricts again; restriction can be repeated down to dimension 1.
    pub fn restrict(&self, var: usize, value: &Rational) -> Result<Restriction> {
        let f = restrict_function(&self.f, var, value)?;
        let mut nodes = self.nodes.clone();
        nodes.remove(var);
        Ok(Restriction { f, nodes })
    }
}

/// Fixes `x_var` (0-based) of a solution with numeric nodes; the result
/// solves the system without that coordinate and its node.
pub fn restrict(solution: &HirotaSolution, var: usize, value: &Rational) -> Result<Restriction> {
    let nodes = solution
        .spec()
        .numeric_nodes()
        .ok_or_else(|| Error::Spec("restriction needs numeric nodes".into()))?
        .to_vec();
    Restriction {
        f: solution.f().clone(),
        nodes,
    }
    .restrict(var, value)
}

/// `t ↦ (a t + b) / (c t + d)` with `ad - bc ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl Mobius {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::Spec(format!(
                "degenerate Möbius map ({a}, {b}; {c}, {d})"
            )));
        }
        Ok(Mobius { a, b, c, d })
    }

    pub fn identity() -> Self {
        Mobius {
            a: Rational::one(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    /// `t ↦ 1/t`, which exchanges the orders `[k/l]` and `[l/k]`.
    pub fn inversion() -> Self {
        Mobius {
            a: Rational::zero(),
            b: Rational::one(),
            c: Rational::one(),
            d: Rational::zero(),
        }
    }

    /// Integer coefficients in `[-range, range]`, redrawn until nondegenerate.
    pub fn random<R: Rng>(rng: &mut R, range: i64) -> Self {
        loop {
            let mut draw = || Rational::from_integer(rng.gen_range(-range..=range).into());
            if let Ok(m) = Mobius::new(draw(), draw(), draw(), draw()) {
                return m;
            }
        }
    }

    pub fn coefficients(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_identity(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.a == self.d
    }

    /// Value at `t`, or `None` at the pole.
    pub fn apply(&self, t: &Rational) -> Option<Rational> {
        let den = &self.c * t + &self.d;
        (!den.is_zero()).then(|| (&self.a * t + &self.b) / den)
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t -> ({} t + {}) / ({} t + {})",
            self.a, self.b, self.c, self.d
        )
    }
}

/// Powers `0..=max` of a polynomial.
fn powers(p: &MultiPoly, max: u32) -> Vec<MultiPoly> {
    let mut out = vec![MultiPoly::one(p.nvars())];
    for _ in 0..max {
        let next = out.last().expect("nonempty") * p;
        out.push(next);
    }
    out
}

/// Substitutes `x_i ↦ (a_i x_i + b_i)/(c_i x_i + d_i)` in a polynomial and
/// multiplies by `Π (c_i x_i + d_i)^{max[i]}`.
fn substitute_cleared(p: &MultiPoly, inner: &[Mobius], max: &[u32]) -> MultiPoly {
    let nvars = p.nvars();
    let linear = |i: usize, s: &Rational, t: &Rational| {
        &MultiPoly::var(nvars, i).scale(s) + &MultiPoly::constant(nvars, t.clone())
    };
    let tables: Vec<Option<(Vec<MultiPoly>, Vec<MultiPoly>)>> = inner
        .iter()
        .enumerate()
        .map(|(i, m)| {
            (!m.is_identity()).then(|| {
                (
                    powers(&linear(i, &m.a, &m.b), max[i]),
                    powers(&linear(i, &m.c, &m.d), max[i]),
                )
            })
        })
        .collect();
    let mut acc = MultiPoly::zero(nvars);
    for (monomial, coeff) in p.terms() {
        let mut kept = monomial.exponents().to_vec();
        let mut factor = MultiPoly::one(nvars);
        for (i, table) in tables.iter().enumerate() {
            // identity maps keep x_i^e; their constant factor is common to num and den
            if let Some((num, den)) = table {
                let e = monomial.exponents()[i];
                kept[i] = 0;
                factor = &(&factor * &num[e as usize]) * &den[(max[i] - e) as usize];
            }
        }
        acc = &acc + &factor.mul_term(&Monomial::from_exponents(&kept), coeff);
    }
    acc
}

/// `Φ(f(φ_1(x_1), .., φ_m(x_m)))`; the inner maps act on the first
/// `inner.len()` variables, the others are left alone.
pub fn transform(
    f: &RationalFunction,
    outer: &Mobius,
    inner: &[Mobius],
) -> Result<RationalFunction> {
    if inner.len() > f.nvars() {
        return Err(Error::Dimension(format!(
            "{} inner maps for {} variables",
            inner.len(),
            f.nvars()
        )));
    }
    let max: Vec<u32> = (0..inner.len())
        .map(|i| f.num().degree_in(i).max(f.den().degree_in(i)))
        .collect();
    let num = substitute_cleared(f.num(), inner, &max);
    let den = substitute_cleared(f.den(), inner, &max);
    let top = &num.scale(&outer.a) + &den.scale(&outer.b);
    let bottom = &num.scale(&outer.c) + &den.scale(&outer.d);
    if bottom.is_zero() {
        return Err(Error::Spec("the outer map sends f to its pole".into()));
    }
    RationalFunction::new(top, bottom)
}

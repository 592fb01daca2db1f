//! Alternating differential forms with rational-function coefficients.
//!
//! A form lives over a ring with `nvars` variables, of which the first `dim`
//! carry differentials `dx_1 .. dx_dim`. Any remaining variables (the nodes
//! `l_i` in symbolic mode) are constants for the exterior derivative.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, VarNames};
use crate::ratfun::{RationalFunction, RationalFunctionJson};
use crate::rational::Rational;

/// Strictly increasing list of differential indices.
pub type FormIndex = Vec<usize>;

#[derive(Clone, Debug)]
pub struct DifferentialForm {
    degree: usize,
    dim: usize,
    nvars: usize,
    components: BTreeMap<FormIndex, RationalFunction>,
}

/// Sign of the permutation sorting the concatenation `a ++ b`, or `None`
/// when the two index sets overlap.
fn shuffle_sign(a: &[usize], b: &[usize]) -> Option<(FormIndex, bool)> {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let mut inversions = 0usize;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                merged.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                // b[j] jumps over the remaining elements of a
                inversions += a.len() - i;
                merged.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => return None,
        }
    }
    merged.extend_from_slice(&a[i..]);
    merged.extend_from_slice(&b[j..]);
    Some((merged, inversions % 2 == 1))
}

impl DifferentialForm {
    pub fn zero(degree: usize, dim: usize, nvars: usize) -> Self {
        DifferentialForm {
            degree,
            dim,
            nvars,
            components: BTreeMap::new(),
        }
    }

    /// The 0-form `f`.
    pub fn function(f: RationalFunction, dim: usize) -> Self {
        let mut form = Self::zero(0, dim, f.nvars());
        if !f.is_zero() {
            form.components.insert(Vec::new(), f);
        }
        form
    }

    /// The basic 1-form `dx_{var+1}`.
    pub fn dx(var: usize, dim: usize, nvars: usize) -> Result<Self> {
        if var >= dim || dim > nvars {
            return Err(Error::Dimension(format!(
                "dx index {var} outside {dim} differentials"
            )));
        }
        let mut form = Self::zero(1, dim, nvars);
        form.components
            .insert(vec![var], RationalFunction::one(nvars));
        Ok(form)
    }

    /// Builds a form from `(index, coefficient)` pairs; indices may be given
    /// in any order and are sorted with the matching sign.
    pub fn from_components<I>(
        degree: usize,
        dim: usize,
        nvars: usize,
        components: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (FormIndex, RationalFunction)>,
    {
        let mut form = Self::zero(degree, dim, nvars);
        for (index, coeff) in components {
            if index.len() != degree || index.iter().any(|&i| i >= dim) {
                return Err(Error::Dimension(format!(
                    "component {index:?} does not fit a {degree}-form in {dim} differentials"
                )));
            }
            if coeff.nvars() != nvars {
                return Err(Error::Dimension("component from a different ring".into()));
            }
            let mut sorted = Vec::new();
            let mut negate = false;
            for &i in &index {
                match shuffle_sign(&sorted, &[i]) {
                    None => {
                        sorted.clear();
                        break;
                    }
                    Some((merged, sign)) => {
                        sorted = merged;
                        negate ^= sign;
                    }
                }
            }
            if sorted.len() != degree {
                continue;
            }
            let coeff = if negate { -coeff } else { coeff };
            form.add_component(sorted, coeff);
        }
        Ok(form)
    }

    /// `df` for a function `f`.
    pub fn differential(f: &RationalFunction, dim: usize) -> Result<Self> {
        Self::function(f.clone(), dim).exterior_derivative()
    }

    /// `Σ c_i dx_i` from per-variable coefficients.
    pub fn one_form(coefficients: Vec<RationalFunction>, nvars: usize) -> Result<Self> {
        let dim = coefficients.len();
        Self::from_components(
            1,
            dim,
            nvars,
            coefficients
                .into_iter()
                .enumerate()
                .map(|(i, c)| (vec![i], c)),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn components(&self) -> impl Iterator<Item = (&FormIndex, &RationalFunction)> + '_ {
        self.components.iter()
    }

    pub fn component(&self, index: &[usize]) -> RationalFunction {
        self.components
            .get(index)
            .cloned()
            .unwrap_or_else(|| RationalFunction::zero(self.nvars))
    }

    /// True iff every component numerator is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.components.values().all(RationalFunction::is_zero)
    }

    fn add_component(&mut self, index: FormIndex, coeff: RationalFunction) {
        if coeff.is_zero() {
            return;
        }
        match self.components.remove(&index) {
            None => {
                self.components.insert(index, coeff);
            }
            Some(existing) => {
                let sum = &existing + &coeff;
                if !sum.is_zero() {
                    self.components.insert(index, sum);
                }
            }
        }
    }

    fn check_compatible(&self, other: &DifferentialForm) -> Result<()> {
        if self.dim != other.dim || self.nvars != other.nvars {
            return Err(Error::Dimension("forms over different spaces".into()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &DifferentialForm) -> Result<DifferentialForm> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::Dimension(format!(
                "cannot add a {}-form and a {}-form",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (index, coeff) in &other.components {
            out.add_component(index.clone(), coeff.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &DifferentialForm) -> Result<DifferentialForm> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> DifferentialForm {
        self.map_coefficients(|c| -c)
    }

    pub fn scale(&self, factor: &Rational) -> DifferentialForm {
        if factor.is_zero() {
            return Self::zero(self.degree, self.dim, self.nvars);
        }
        self.map_coefficients(|c| c.scale(factor))
    }

    /// Multiplies every coefficient by a function.
    pub fn mul_function(&self, f: &RationalFunction) -> DifferentialForm {
        if f.is_zero() {
            return Self::zero(self.degree, self.dim, self.nvars);
        }
        self.map_coefficients(|c| c * f)
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> DifferentialForm {
        if p.is_zero() {
            return Self::zero(self.degree, self.dim, self.nvars);
        }
        self.map_coefficients(|c| c.mul_poly(p))
    }

    fn map_coefficients(
        &self,
        f: impl Fn(&RationalFunction) -> RationalFunction,
    ) -> DifferentialForm {
        DifferentialForm {
            degree: self.degree,
            dim: self.dim,
            nvars: self.nvars,
            components: self
                .components
                .iter()
                .map(|(i, c)| (i.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Exterior product; degrees add and terms with repeated differentials vanish.
    pub fn wedge(&self, other: &DifferentialForm) -> Result<DifferentialForm> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.degree + other.degree, self.dim, self.nvars);
        for (ia, ca) in &self.components {
            for (ib, cb) in &other.components {
                if let Some((index, negate)) = shuffle_sign(ia, ib) {
                    let product = ca * cb;
                    out.add_component(index, if negate { -product } else { product });
                }
            }
        }
        Ok(out)
    }

    /// `d(f dx_I) = Σ_v ∂_v f dx_v ∧ dx_I`.
    pub fn exterior_derivative(&self) -> Result<DifferentialForm> {
        let mut out = Self::zero(self.degree + 1, self.dim, self.nvars);
        for (index, coeff) in &self.components {
            for v in 0..self.dim {
                if index.contains(&v) {
                    continue;
                }
                let partial = coeff.derivative(v)?;
                if partial.is_zero() {
                    continue;
                }
                let (merged, negate) = shuffle_sign(&[v], index).expect("disjoint by construction");
                out.add_component(merged, if negate { -partial } else { partial });
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by the product of the distinct
    /// denominators, giving a form with polynomial coefficients that differs
    /// from `self` by a nonvanishing function factor. Returns the form and
    /// the factor used.
    pub fn clear_denominators(&self) -> (DifferentialForm, MultiPoly) {
        let (mut forms, factor) = clear_denominators_jointly(std::slice::from_ref(self));
        (forms.pop().expect("one form in, one form out"), factor)
    }

    /// Values of all components at a point of the ring.
    pub fn evaluate(&self, point: &[Rational]) -> Result<BTreeMap<FormIndex, Rational>> {
        let mut out = BTreeMap::new();
        for (index, coeff) in &self.components {
            let value = coeff.eval(point)?;
            if !value.is_zero() {
                out.insert(index.clone(), value);
            }
        }
        Ok(out)
    }

    /// Text rendering, e.g. `2/3 dx1^dx3 + (x1)/(x2) dx2^dx3`.
    pub fn render(&self, names: &VarNames) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(index, coeff)| {
                let basis: Vec<String> = index
                    .iter()
                    .map(|i| format!("d{}", names.name(*i)))
                    .collect();
                let basis = basis.join("^");
                let coeff_text = match coeff.num().as_constant().zip(coeff.den().as_constant()) {
                    Some((n, d)) => (n / d).to_string(),
                    None if coeff.is_polynomial() => format!("({})", coeff.render(names)),
                    None => coeff.render(names),
                };
                if basis.is_empty() {
                    coeff_text
                } else {
                    format!("{coeff_text} {basis}")
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_json(&self) -> FormJson {
        FormJson {
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(index, c)| {
                    let RationalFunctionJson { num, den } = c.to_json();
                    ComponentJson {
                        idx: index.iter().map(|i| i + 1).collect(),
                        num,
                        den,
                    }
                })
                .collect(),
        }
    }
}

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&VarNames::xs(self.nvars)))
    }
}

impl PartialEq for DifferentialForm {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && self.dim == other.dim
            && self.nvars == other.nvars
            && self
                .checked_sub(other)
                .map(|d| d.is_zero())
                .unwrap_or(false)
    }
}

/// JSON shape `{"degree": g, "components": [{"idx": [..], "num": .., "den": ..}]}`
/// with 1-based differential indices.
/// `Some(c)` with `a = c b`.
fn proportionality(a: &MultiPoly, b: &MultiPoly) -> Option<Rational> {
    let (ma, ca) = a.leading_term()?;
    let (mb, cb) = b.leading_term()?;
    if ma != mb || a.len() != b.len() {
        return None;
    }
    let c = ca / cb;
    (b.scale(&c) == *a).then_some(c)
}

/// Multiplies every form by the same polynomial, the product of the
/// nonconstant denominators counted once up to scalar multiples, so that all
/// coefficients become polynomials.
pub fn clear_denominators_jointly(
    forms: &[DifferentialForm],
) -> (Vec<DifferentialForm>, MultiPoly) {
    let nvars = forms.first().map_or(0, |f| f.nvars);
    let mut dens: Vec<MultiPoly> = Vec::new();
    for form in forms {
        for c in form.components.values() {
            if c.den().as_constant().is_none()
                && !dens.iter().any(|d| proportionality(c.den(), d).is_some())
            {
                dens.push(c.den().clone());
            }
        }
    }
    let total = dens.iter().fold(MultiPoly::one(nvars), |acc, d| &acc * d);
    // product of all representatives except one, cached per representative
    let cofactors: Vec<MultiPoly> = (0..dens.len())
        .map(|skip| {
            dens.iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .fold(MultiPoly::one(nvars), |acc, (_, d)| &acc * d)
        })
        .collect();
    let cleared = forms
        .iter()
        .map(|form| {
            let components = form
                .components
                .iter()
                .map(|(index, c)| {
                    let num = match c.den().as_constant() {
                        Some(k) => &c.num().scale(&k.recip()) * &total,
                        None => {
                            let (rep, scalar) = dens
                                .iter()
                                .enumerate()
                                .find_map(|(i, d)| proportionality(c.den(), d).map(|s| (i, s)))
                                .expect("every denominator has a representative");
                            &c.num().scale(&scalar.recip()) * &cofactors[rep]
                        }
                    };
                    (index.clone(), RationalFunction::from_poly(num))
                })
                .filter(|(_, c)| !c.is_zero())
                .collect();
            DifferentialForm {
                degree: form.degree,
                dim: form.dim,
                nvars: form.nvars,
                components,
            }
        })
        .collect();
    (cleared, total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub degree: usize,
    pub components: Vec<ComponentJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub idx: Vec<usize>,
    pub num: crate::poly::PolyJson,
    pub den: crate::poly::PolyJson,
}

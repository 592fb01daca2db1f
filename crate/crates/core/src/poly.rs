//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order, so two polynomials are equal exactly when their term
//! maps are equal and zero-testing is `terms.is_empty()`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Exponent vector of a single power product.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 12]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exponents: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[var] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Total degree restricted to `vars`.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.0[v]).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Display names for the variables of a ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarNames(Vec<String>);

impl VarNames {
    pub fn new(names: Vec<String>) -> Self {
        VarNames(names)
    }

    /// `x1 .. xn`.
    pub fn xs(n: usize) -> Self {
        VarNames((1..=n).map(|i| format!("x{i}")).collect())
    }

    /// `x1 .. xn` followed by `l1 .. ln` when the nodes are symbolic.
    pub fn hirota(n: usize, symbolic_nodes: bool) -> Self {
        let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        if symbolic_nodes {
            names.extend((1..=n).map(|i| format!("l{i}")));
        }
        VarNames(names)
    }

    /// Name of variable `index`; indices past the table fall back to `v<index+1>`.
    pub fn name(&self, index: usize) -> String {
        self.0
            .get(index)
            .cloned()
            .unwrap_or_else(|| format!("v{}", index + 1))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Sparse polynomial in `nvars` variables over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

fn check_same_ring(a: &MultiPoly, b: &MultiPoly) -> Result<()> {
    if a.nvars != b.nvars {
        return Err(Error::Dimension(format!(
            "polynomials live in rings with {} and {} variables",
            a.nvars, b.nvars
        )));
    }
    Ok(())
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, value: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(nvars), value);
        }
        MultiPoly { nvars, terms }
    }

    /// The variable with index `var`.
    ///
    /// Panics if `var >= nvars`; use [`MultiPoly::try_var`] for a checked version.
    pub fn var(nvars: usize, var: usize) -> Self {
        Self::try_var(nvars, var).expect("variable index out of range")
    }

    pub fn try_var(nvars: usize, var: usize) -> Result<Self> {
        if var >= nvars {
            return Err(Error::Dimension(format!(
                "variable index {var} out of range for {nvars} variables"
            )));
        }
        Ok(Self::monomial(
            Monomial::variable(nvars, var),
            Rational::one(),
        ))
    }

    pub fn monomial(monomial: Monomial, coeff: Rational) -> Self {
        let nvars = monomial.nvars();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(monomial, coeff);
        }
        MultiPoly { nvars, terms }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I, E>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, Rational)>,
        E: AsRef<[u32]>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (exponents, coeff) in terms {
            let exponents = exponents.as_ref();
            if exponents.len() != nvars {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} in a ring with {nvars} variables",
                    exponents.len()
                )));
            }
            *acc.entry(Monomial::from_exponents(exponents))
                .or_insert_with(Rational::zero) += coeff;
        }
        Ok(Self::from_map(nvars, acc))
    }

    fn from_map(nvars: usize, map: HashMap<Monomial, Rational>) -> Self {
        MultiPoly {
            nvars,
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Rational {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Greatest term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Indices of the variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.keys().any(|m| m.0[v] > 0))
            .collect()
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        check_same_ring(self, other)?;
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        Ok(big)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        check_same_ring(self, other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        check_same_ring(self, other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(self.nvars));
        }
        if other.len() == 1 {
            let (m, c) = other.terms.iter().next().unwrap();
            return Ok(self.mul_term(m, c));
        }
        if self.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            return Ok(other.mul_term(m, c));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity((self.len() * other.len()).min(1 << 16));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    /// Adds `coeff * monomial` in place.
    pub fn add_term(&mut self, monomial: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    /// `self * coeff * monomial`.
    pub fn mul_term(&self, monomial: &Monomial, coeff: &Rational) -> MultiPoly {
        if coeff.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(monomial), c * coeff))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> MultiPoly {
        if factor.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> MultiPoly {
        let mut result = MultiPoly::one(self.nvars);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Result<MultiPoly> {
        if var >= self.nvars {
            return Err(Error::Dimension(format!(
                "cannot differentiate by variable {var} in a ring with {} variables",
                self.nvars
            )));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.0[var] -= 1;
            terms.insert(dm, c * Rational::from_integer(e.into()));
        }
        Ok(MultiPoly {
            nvars: self.nvars,
            terms,
        })
    }

    /// Evaluates at a full point.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "point of length {} for a ring with {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut powers: Vec<Vec<Rational>> = point
            .iter()
            .map(|v| vec![Rational::one(), v.clone()])
            .collect();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let table = &mut powers[v];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &table[1];
                    table.push(next);
                }
                term *= &table[e as usize];
            }
            total += term;
        }
        Ok(total)
    }

    /// Replaces the listed variables by polynomials of the same ring. The
    /// substituted variables need not disappear from the ring; use
    /// [`MultiPoly::remove_variables`] afterwards to drop them.
    pub fn substitute(&self, assignment: &[(usize, MultiPoly)]) -> Result<MultiPoly> {
        let mut values: Vec<Option<&MultiPoly>> = vec![None; self.nvars];
        for (var, value) in assignment {
            if *var >= self.nvars {
                return Err(Error::Dimension(format!(
                    "substitution for variable {var} in a ring with {} variables",
                    self.nvars
                )));
            }
            check_same_ring(self, value)?;
            values[*var] = Some(value);
        }
        let mut powers: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut factor: Option<MultiPoly> = None;
            for (v, value) in values.iter().enumerate() {
                let (Some(value), e) = (value, m.0[v]) else {
                    continue;
                };
                rest.0[v] = 0;
                if e == 0 {
                    continue;
                }
                let p = powers.entry((v, e)).or_insert_with(|| value.pow(e)).clone();
                factor = Some(match factor {
                    None => p,
                    Some(f) => &f * &p,
                });
            }
            match factor {
                None => *acc.entry(rest).or_insert_with(Rational::zero) += c,
                Some(f) => {
                    for (fm, fc) in &f.terms {
                        *acc.entry(fm.mul(&rest)).or_insert_with(Rational::zero) += fc * c;
                    }
                }
            }
        }
        Ok(Self::from_map(self.nvars, acc))
    }

    /// Replaces the listed variables by rational constants.
    pub fn substitute_constants(&self, assignment: &[(usize, Rational)]) -> Result<MultiPoly> {
        let as_polys: Vec<(usize, MultiPoly)> = assignment
            .iter()
            .map(|(v, c)| (*v, MultiPoly::constant(self.nvars, c.clone())))
            .collect();
        self.substitute(&as_polys)
    }

    /// Drops variables that do not occur and re-indexes the rest densely.
    pub fn remove_variables(&self, vars: &[usize]) -> Result<MultiPoly> {
        for &v in vars {
            if v >= self.nvars {
                return Err(Error::Dimension(format!("no variable {v} to remove")));
            }
            if self.degree_in(v) > 0 {
                return Err(Error::Dimension(format!(
                    "variable {v} still occurs and cannot be removed"
                )));
            }
        }
        let keep: Vec<usize> = (0..self.nvars).filter(|v| !vars.contains(v)).collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(keep.iter().map(|&v| m.0[v]).collect()), c.clone()))
            .collect();
        Ok(MultiPoly {
            nvars: keep.len(),
            terms,
        })
    }

    /// Embeds into a ring with `new_nvars` variables, sending variable `i`
    /// to `mapping[i]`.
    pub fn remap(&self, new_nvars: usize, mapping: &[usize]) -> Result<MultiPoly> {
        if mapping.len() != self.nvars || mapping.iter().any(|&t| t >= new_nvars) {
            return Err(Error::Dimension("invalid variable mapping".into()));
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut out = Monomial::one(new_nvars);
            for (i, &e) in m.0.iter().enumerate() {
                out.0[mapping[i]] += e;
            }
            *acc.entry(out).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(new_nvars, acc))
    }

    /// Embeds into a ring with extra trailing variables.
    pub fn extend(&self, new_nvars: usize) -> Result<MultiPoly> {
        let mapping: Vec<usize> = (0..self.nvars).collect();
        self.remap(new_nvars, &mapping)
    }

    /// Common total degree in `vars` of every term, or `None` if the terms
    /// disagree. The zero polynomial reports `Some(0)`; check
    /// [`MultiPoly::is_zero`] to tell it apart.
    pub fn homogeneity(&self, vars: &[usize]) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.degree_in(vars));
        let first = match degrees.next() {
            None => return Some(0),
            Some(d) => d,
        };
        degrees.all(|d| d == first).then_some(first)
    }

    /// Exact quotient `self / divisor`; fails unless the division is exact.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        check_same_ring(self, divisor)?;
        let (lead_m, lead_c) = match divisor.leading_term() {
            None => return Err(Error::DivisionByZero),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        if divisor.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.checked_div(&lead_m).ok_or(Error::InexactDivision)?;
                terms.insert(q, c / &lead_c);
            }
            return Ok(MultiPoly {
                nvars: self.nvars,
                terms,
            });
        }
        let mut remainder = self.clone();
        let mut quotient = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = remainder.leading_term() {
            let qm = m.checked_div(&lead_m).ok_or(Error::InexactDivision)?;
            let qc = c / &lead_c;
            for (dm, dc) in &divisor.terms {
                remainder.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quotient.terms.insert(qm, qc);
        }
        Ok(quotient)
    }

    /// Positive rational content: dividing by it leaves coprime integer
    /// coefficients. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        rational::content(self.terms.values())
    }

    /// Text rendering with explicit variable names.
    pub fn render(&self, names: &VarNames) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let mono = render_monomial(m, names);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else if abs.is_integer() {
                out.push_str(&abs.to_string());
                out.push_str(&mono);
            } else {
                out.push_str(&abs.to_string());
                out.push(' ');
                out.push_str(&mono);
            }
        }
        out
    }

    /// LaTeX rendering; `names` are used verbatim as LaTeX symbols.
    pub fn render_latex(&self, names: &VarNames) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let mono = render_monomial_latex(m, names);
            let coeff = if abs.is_integer() {
                abs.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            };
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&coeff);
                out.push(' ');
                out.push_str(&mono);
            }
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    c: format!("{}/{}", c.numer(), c.denom()),
                    e: m.0.to_vec(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<MultiPoly> {
        let terms = json
            .terms
            .iter()
            .map(|t| Ok((t.e.clone(), rational::parse_rational(&t.c)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(json.nvars, terms)
    }
}

fn render_monomial(m: &Monomial, names: &VarNames) -> String {
    let mut out = String::new();
    for (v, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => out.push_str(&names.name(v)),
            _ => out.push_str(&format!("{}^{e}", names.name(v))),
        }
    }
    out
}

fn render_monomial_latex(m: &Monomial, names: &VarNames) -> String {
    let parts: Vec<String> =
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    names.name(v)
                } else {
                    format!("{}^{{{e}}}", names.name(v))
                }
            })
            .collect();
    parts.join(" ")
}

/// JSON shape `{"nvars": N, "terms": [{"c": "num/den", "e": [..]}, ..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<u32>,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&VarNames::xs(self.nvars)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs)
                    .expect("polynomials from different rings")
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

//! Quotients of polynomials kept as unreduced numerator/denominator pairs.
//!
//! No multivariate gcd is ever taken: equality and zero tests go through
//! cross-multiplication. Only the joint integer content is removed and the
//! denominator's leading coefficient is made positive.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MultiPoly, PolyJson, VarNames};
use crate::rational::{self, Rational};

#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.nvars() != den.nvars() {
            return Err(Error::Dimension(
                "numerator and denominator from different rings".into(),
            ));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            let nvars = num.nvars();
            return RationalFunction {
                num,
                den: MultiPoly::one(nvars),
            };
        }
        let mut scale = rational::content(
            num.terms()
                .map(|(_, c)| c)
                .chain(den.terms().map(|(_, c)| c)),
        );
        if den.leading_coefficient().is_some_and(|c| c.is_negative()) {
            scale = -scale;
        }
        if scale.is_one() {
            return RationalFunction { num, den };
        }
        let inverse = scale.recip();
        RationalFunction {
            num: num.scale(&inverse),
            den: den.scale(&inverse),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let nvars = p.nvars();
        Self::normalized(p, MultiPoly::one(nvars))
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::one(nvars))
    }

    pub fn constant(nvars: usize, value: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, value))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    /// `a == b` as elements of the fraction field.
    pub fn equals(&self, other: &RationalFunction) -> bool {
        if self.nvars() != other.nvars() {
            return false;
        }
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn checked_add(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.combine(other, false)
    }

    pub fn checked_sub(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.combine(other, true)
    }

    fn combine(&self, other: &RationalFunction, subtract: bool) -> Result<RationalFunction> {
        if self.nvars() != other.nvars() {
            return Err(Error::Dimension(
                "rational functions from different rings".into(),
            ));
        }
        let rhs = if subtract {
            -&other.num
        } else {
            other.num.clone()
        };
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(Self::normalized(rhs, other.den.clone()));
        }
        if self.den == other.den {
            return Ok(Self::normalized(&self.num + &rhs, self.den.clone()));
        }
        let num = &(&self.num * &other.den) + &(&rhs * &self.den);
        Ok(Self::normalized(num, &self.den * &other.den))
    }

    pub fn checked_mul(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if self.nvars() != other.nvars() {
            return Err(Error::Dimension(
                "rational functions from different rings".into(),
            ));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars()));
        }
        Ok(Self::normalized(
            mul_skip_one(&self.num, &other.num),
            mul_skip_one(&self.den, &other.den),
        ))
    }

    pub fn checked_div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.nvars() != other.nvars() {
            return Err(Error::Dimension(
                "rational functions from different rings".into(),
            ));
        }
        Ok(Self::normalized(
            mul_skip_one(&self.num, &other.den),
            mul_skip_one(&self.den, &other.num),
        ))
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> RationalFunction {
        Self::normalized(mul_skip_one(&self.num, p), self.den.clone())
    }

    pub fn scale(&self, factor: &Rational) -> RationalFunction {
        Self::normalized(self.num.scale(factor), self.den.clone())
    }

    /// Quotient rule: `(num_v * den - num * den_v) / den^2`.
    pub fn derivative(&self, var: usize) -> Result<RationalFunction> {
        let dnum = self.num.derivative(var)?;
        if self.den.as_constant().is_some() {
            return Ok(Self::normalized(dnum, self.den.clone()));
        }
        let dden = self.den.derivative(var)?;
        if dden.is_zero() {
            return Ok(Self::normalized(dnum, self.den.clone()));
        }
        let num = &(&dnum * &self.den) - &(&self.num * &dden);
        Ok(Self::normalized(num, &self.den * &self.den))
    }

    /// Exact value at a point; fails where the denominator vanishes.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        let den = self.den.eval(point)?;
        if den.is_zero() {
            return Err(Error::EvaluationPole("denominator vanishes".into()));
        }
        Ok(self.num.eval(point)? / den)
    }

    /// Applies the same polynomial substitution to numerator and denominator.
    pub fn substitute(&self, assignment: &[(usize, MultiPoly)]) -> Result<RationalFunction> {
        let den = self.den.substitute(assignment)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.num.substitute(assignment)?, den))
    }

    pub fn render(&self, names: &VarNames) -> String {
        if self.den.is_one() {
            return self.num.render(names);
        }
        format!("({})/({})", self.num.render(names), self.den.render(names))
    }

    pub fn render_latex(&self, names: &VarNames) -> String {
        if self.den.is_one() {
            return self.num.render_latex(names);
        }
        format!(
            "\\frac{{{}}}{{{}}}",
            self.num.render_latex(names),
            self.den.render_latex(names)
        )
    }

    pub fn to_json(&self) -> RationalFunctionJson {
        RationalFunctionJson {
            num: self.num.to_json(),
            den: self.den.to_json(),
        }
    }

    pub fn from_json(json: &RationalFunctionJson) -> Result<Self> {
        Self::new(
            MultiPoly::from_json(&json.num)?,
            MultiPoly::from_json(&json.den)?,
        )
    }
}

fn mul_skip_one(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_one() {
        b.clone()
    } else if b.is_one() {
        a.clone()
    } else {
        a * b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunctionJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl From<MultiPoly> for RationalFunction {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&VarNames::xs(self.nvars())))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$checked(rhs)
                    .expect(concat!("invalid rational function ", stringify!($method)))
            }
        }
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction::normalized(-&self.num, self.den.clone())
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Zero for RationalFunction {
    /// Zero in a ring without variables; prefer [`RationalFunction::zero`].
    fn zero() -> Self {
        RationalFunction::zero(0)
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

//! Polynomials in the spectral parameter with coefficients in a module.

use num_traits::{One, Zero};

use crate::error::Result;
use crate::forms::DifferentialForm;
use crate::poly::MultiPoly;
use crate::rational::Rational;

/// Coefficient types that can be scaled by a rational and added.
pub trait LinearCoefficient: Clone {
    fn scaled(&self, factor: &Rational) -> Self;
    fn plus(&self, other: &Self) -> Result<Self>;
    fn is_zero_coefficient(&self) -> bool;
}

impl LinearCoefficient for MultiPoly {
    fn scaled(&self, factor: &Rational) -> Self {
        self.scale(factor)
    }

    fn plus(&self, other: &Self) -> Result<Self> {
        self.checked_add(other)
    }

    fn is_zero_coefficient(&self) -> bool {
        self.is_zero()
    }
}

impl LinearCoefficient for DifferentialForm {
    fn scaled(&self, factor: &Rational) -> Self {
        self.scale(factor)
    }

    fn plus(&self, other: &Self) -> Result<Self> {
        self.checked_add(other)
    }

    fn is_zero_coefficient(&self) -> bool {
        self.is_zero()
    }
}

/// `Σ_m coeffs[m] λ^m`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaPoly<T> {
    coeffs: Vec<T>,
}

impl<T: LinearCoefficient> LambdaPoly<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        LambdaPoly { coeffs }
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coefficient(&self, power: usize) -> Option<&T> {
        self.coeffs.get(power)
    }

    /// Index of the last stored coefficient.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(T::is_zero_coefficient)
    }

    /// Value at a numeric λ.
    pub fn evaluate(&self, at: &Rational) -> Result<T> {
        let mut power = Rational::one();
        let mut acc: Option<T> = None;
        for c in &self.coeffs {
            let term = c.scaled(&power);
            acc = Some(match acc {
                None => term,
                Some(a) => a.plus(&term)?,
            });
            power *= at;
        }
        Ok(acc.expect("lambda polynomial without coefficients"))
    }
}

/// Coefficients of `Π (λ - r)` over the given roots, lowest power first.
pub fn product_of_linear_factors(roots: &[Rational]) -> Vec<Rational> {
    let mut coeffs = vec![Rational::one()];
    for r in roots {
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}

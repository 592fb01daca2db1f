//! Exact construction and certification of rational solutions of the
//! dispersionless Hirota system
//!
//! ```text
//! (λ_j - λ_k) f_i f_jk + (λ_k - λ_i) f_j f_ki + (λ_i - λ_j) f_k f_ij = 0
//! ```
//!
//! built from the highest coefficients of Cauchy interpolants, together with
//! the exterior calculus needed to check Frobenius integrability and
//! (non)flatness of the associated Veronese webs. All arithmetic is exact.

pub mod error;
pub mod forms;
pub mod hirota;
pub mod interpolation;
pub mod lambda_poly;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod transform;
pub mod web;

pub use error::{Error, Result};
pub use forms::DifferentialForm;
pub use hirota::{
    build_solution, hirota_residual, solution_properties, structural_properties, verify_function,
    verify_hirota, HirotaSolution, HirotaVerdict, Strategy, StructuralProperties, TripleVerdict,
};
pub use interpolation::{
    build_system_matrix, cauchy_interpolant, cauchy_interpolant_at, evaluate_interpolant,
    highest_coefficients, interpolation_check, random_instances, solve_by_determinants,
    solve_oracle, CauchyInterpolant, InterpolantValue, Nodes, SystemMatrix, WebSpec,
};
pub use lambda_poly::LambdaPoly;
pub use matrix::PolyMatrix;
pub use poly::{Monomial, MultiPoly, VarNames};
pub use ratfun::RationalFunction;
pub use rational::Rational;
pub use transform::{restrict, restrict_function, transform, Mobius, Restriction};
pub use web::{
    coframe, coframe_normalized, flatness_check, frobenius_check, veronese_form,
    veronese_form_numeric, Coframe, FlatnessStatus, FlatnessVerdict,
};

//! Symmetries of `y'' + w(x) y = 0`: the Lie equation, the `(w, z)`
//! relation, fundamental solutions by quadrature, first integrals, the sl₂
//! structure and the hierarchy of integrable potentials.

mod field;
mod first_integral;
mod fundamental;
mod hierarchy;
mod jet;
mod pair;

pub use field::{
    field, potential_from_symmetry, CallbackField, ConstantField, DerivedPotentialField, Field,
    LinearCombinationField, PolynomialField, PowerField, ProductField, ScalarField, ScaledField,
};
pub use first_integral::{first_integral, sl2_bracket, BracketField, LinearSymmetry};
pub use fundamental::{
    fundamental_solutions, symmetry_triple, FundamentalPair, PhiField, SymmetryTriple,
};
pub use hierarchy::hierarchy_step;
pub use jet::Jet;
pub use pair::{classify_case, compute_cw, lie_residual, lie_terms, CaseKind, SymmetryPair};

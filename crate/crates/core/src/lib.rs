//! Exact computations around the J-invariant of semisimple algebraic groups:
//! Poincaré polynomials of split flag varieties, motivic decompositions of
//! generically split varieties, the change of the J-invariant under generic
//! splitting of a Tits algebra, and closed formulas for the first components
//! in type `D_n`.

pub mod cli;
pub mod error;
pub mod jprofile;
pub mod motives;
pub mod oracle;
pub mod polyring;
pub mod rootdata;
pub mod selfcheck;
pub mod splitting;
pub mod typed;

pub use error::{Error, Result};
pub use jprofile::{JInvariant, JProfile, Monomial, ProfileRegistry};
pub use motives::{admissible_j, decompose, motive_poincare, TwistMultiset};
pub use polyring::{geom_quotient, IntPoly};
pub use rootdata::{
    coxeter_length_oracle, flag_poincare, parabolic_poincare, severi_brauer_poincare, DynkinType,
    Series,
};
pub use splitting::{
    f_polynomial, split_transform, verify_identity, SplittingInput, SplittingResult,
};
pub use typed::{Component, InvolutionData, SecondComponent};

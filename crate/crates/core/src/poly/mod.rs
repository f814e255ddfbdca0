//! Polynomials, partitions and the permutation action.

mod exponent;
mod multipoly;
mod partition;
mod perm;
mod vlambda;

pub use exponent::Exponents;
pub use multipoly::{MultiPoly, TermRecord};
pub use partition::{
    dominance_leq, enumerate_dominated, mult_profile, sort_to_partition, CycleType,
    MultiplicityProfile, Partition,
};
pub use perm::Permutation;
pub use vlambda::{monomial_symmetric, v_lambda_basis, VLambda};

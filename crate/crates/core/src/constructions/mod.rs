//! Builders for concrete algebras.

mod group_ring;
mod matrices;
mod quaternion;
mod quotient;

pub use group_ring::{class_sum_center, delta_decomposition, delta_ideal, group_ring, DeltaDecomposition, GroupRing};
pub use matrices::{
    mat_mul, matrix_delta, matrix_delta_element, matrix_delta_isomorphism, matrix_ring, pattern_matrix, upper_triangular,
};
pub use quaternion::{annihilator_of_two, quaternion_algebra, quaternion_center_formula, Quaternion, QuaternionParams};
pub use quotient::{quotient_ring, Quotient};

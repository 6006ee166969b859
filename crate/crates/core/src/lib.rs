//! Finite, possibly non-unital rings and semirings, and decision procedures
//! for central essentiality and related structural properties.
//!
//! Rings are given by structure constants over `Z_n`, by Cayley tables, or
//! built from group rings, quaternion algebras and matrix patterns. Every
//! predicate returns a [`Certificate`] that [`verify_certificate`] re-checks
//! without reusing the search code.
//!
//! ```
//! use cering::{group_ring, is_centrally_essential, GroupTable, Ring, ScanConfig, Variant};
//!
//! let z2q8 = group_ring(&Ring::zn(2)?, &GroupTable::q8())?;
//! let cert = is_centrally_essential(z2q8.ring(), Variant::Nonunital, &ScanConfig::default())?;
//! assert!(cert.holds);
//! cering::verify_certificate(z2q8.ring(), &cert).unwrap();
//! # Ok::<(), cering::Error>(())
//! ```

pub mod center;
pub mod certificate;
pub mod constructions;
pub mod corpus;
pub mod error;
pub mod group;
pub mod ideals;
pub mod laws;
pub mod modarith;
pub mod module;
pub mod predicates;
pub mod ring;
pub mod semiring;
pub mod subgroup;

pub use center::center;
pub use certificate::{verify_certificate, Certificate, Mode, Multiplier, Property, Rejected, Variant, Witness};
pub use constructions::{
    class_sum_center, delta_decomposition, delta_ideal, group_ring, matrix_delta, matrix_delta_element, matrix_ring,
    quaternion_algebra, quaternion_center_formula, upper_triangular, GroupRing, Quaternion, QuaternionParams,
};
pub use error::{Axiom, Error, Result};
pub use group::GroupTable;
pub use predicates::{
    is_centrally_essential, is_centrally_rational, is_commutative, is_essential_right_ideal, is_reduced,
    is_semiprime, is_strongly_bounded, ScanConfig,
};
pub use ring::{Element, Ring};
pub use semiring::Semiring;
pub use subgroup::{AdditiveSubgroup, Side};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/centrally-essential.md")]
    mod centrally_essential {}
    #[doc = include_str!("../../../book/src/group-rings.md")]
    mod group_rings {}
    #[doc = include_str!("../../../book/src/quaternions.md")]
    mod quaternions {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/semirings.md")]
    mod semirings {}
    #[doc = include_str!("../../../book/src/certificates.md")]
    mod certificates {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

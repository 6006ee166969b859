use std::fmt;

use serde::{Deserialize, Serialize};

/// A ring, group or semiring axiom, named in validation errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    TableShape,
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverse,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
    ZeroAbsorbing,
    MultiplicativeIdentity,
    GroupIdentity,
    GroupAssociativity,
    GroupInverse,
    Subgroup,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::TableShape => "table shape",
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
            Axiom::ZeroAbsorbing => "zero absorbing",
            Axiom::MultiplicativeIdentity => "multiplicative identity",
            Axiom::GroupIdentity => "group identity",
            Axiom::GroupAssociativity => "group associativity",
            Axiom::GroupInverse => "group inverse",
            Axiom::Subgroup => "subgroup closure",
        };
        f.write_str(s)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{axiom} fails at {witness:?}")]
    Axiom { axiom: Axiom, witness: Vec<usize> },
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("ring order overflows the supported range")]
    Overflow,
    #[error("enumeration cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded { what: String, needed: u64, cap: u64 },
    #[error("element {0:?} does not belong to the ring")]
    NotAnElement(Vec<u32>),
    #[error("not a {side} ideal")]
    NotAnIdeal { side: &'static str },
    #[error("ring is not unital")]
    NotUnital,
    #[error("ring is not commutative")]
    NotCommutative,
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("zero element is not allowed here")]
    ZeroElement,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no decisive candidate within {0} scanned elements")]
    Inconclusive(u64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn axiom(axiom: Axiom, witness: &[usize]) -> Self {
        Error::Axiom { axiom, witness: witness.to_vec() }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::Overflow | Error::Inconclusive(_))
    }
}

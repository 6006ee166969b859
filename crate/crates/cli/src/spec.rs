//! JSON ring-spec documents.
//!
//! ```json
//! {"kind": "group_ring", "coeff": {"kind": "zn", "n": 2}, "group": {"kind": "q8"}}
//! ```

use cering::constructions::{delta_ideal, group_ring, matrix_delta, quaternion_algebra, QuaternionParams};
use cering::semiring::{self, make_semiring, Semiring};
use cering::{Element, GroupTable, Ring};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    Zn {
        n: u64,
    },
    /// Cayley tables, row-major.
    Table {
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        one: Option<usize>,
    },
    GroupRing {
        coeff: Box<RingSpec>,
        group: GroupSpec,
    },
    Quaternion {
        base: Box<RingSpec>,
        a: i64,
        b: i64,
    },
    MatrixDelta {
        n: u32,
    },
    /// `Δ(G, H)` inside `coeff[G]`, as a ring. `subgroup` lists element
    /// names of `H`; when omitted, `H` is the derived subgroup.
    DeltaIdeal {
        coeff: Box<RingSpec>,
        group: GroupSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        subgroup: Option<Vec<String>>,
    },
    DirectSum {
        summands: Vec<RingSpec>,
    },
    Semiring {
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        one: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Preset {
        name: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Q8,
    Cyclic {
        n: usize,
    },
    ElementaryAbelian2 {
        rank: u32,
    },
    Product {
        factors: Vec<GroupSpec>,
    },
    Table {
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

/// A constructed object.
#[derive(Debug, Clone)]
pub enum Built {
    Ring(Ring),
    Semiring(Semiring),
}

impl Built {
    pub fn ring(&self) -> Result<&Ring, CliError> {
        match self {
            Built::Ring(r) => Ok(r),
            Built::Semiring(_) => Err(CliError::Usage("this query needs a ring, not a semiring".into())),
        }
    }
}

/// Presets not in the ring corpus.
const EXTRA_PRESETS: [&str; 2] = ["semiring_order5", "boolean_semiring"];

/// Every preset name: the corpus rings plus the semiring examples.
pub fn preset_names() -> Vec<String> {
    let mut names: Vec<String> = cering::corpus::corpus()
        .map(|c| c.into_iter().map(|e| e.name).collect())
        .unwrap_or_default();
    names.extend(EXTRA_PRESETS.iter().map(|s| s.to_string()));
    names
}

pub fn parse_ring_spec(doc: &str) -> Result<RingSpec, CliError> {
    serde_json::from_str(doc).map_err(|e| CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() })
}

pub fn to_document(spec: &RingSpec) -> String {
    serde_json::to_string_pretty(spec).expect("specs serialize")
}

fn ring_of(spec: &RingSpec) -> Result<Ring, CliError> {
    match build(spec)? {
        Built::Ring(r) => Ok(r),
        Built::Semiring(_) => Err(CliError::Usage("a semiring cannot be used inside a ring construction".into())),
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<GroupTable, CliError> {
    Ok(match spec {
        GroupSpec::Q8 => GroupTable::q8(),
        GroupSpec::Cyclic { n } => GroupTable::cyclic(*n)?,
        GroupSpec::ElementaryAbelian2 { rank } => GroupTable::elementary_abelian_2(*rank)?,
        GroupSpec::Product { factors } => {
            let mut it = factors.iter();
            let first = it.next().ok_or_else(|| CliError::Usage("product needs at least one factor".into()))?;
            it.try_fold(build_group(first)?, |acc, g| Ok::<_, CliError>(GroupTable::product(&acc, &build_group(g)?)?))?
        }
        GroupSpec::Table { table, names } => GroupTable::from_table(table, names.clone())?,
    })
}

/// Construct and validate the object a spec describes.
pub fn build(spec: &RingSpec) -> Result<Built, CliError> {
    let ring = match spec {
        RingSpec::Zn { n } => Ring::zn(*n)?,
        RingSpec::Table { add, mul, zero, one } => Ring::from_tables(add, mul, *zero, *one)?,
        RingSpec::GroupRing { coeff, group } => group_ring(&ring_of(coeff)?, &build_group(group)?)?.ring().clone(),
        RingSpec::Quaternion { base, a, b } => {
            let base = ring_of(base)?;
            let one = base.one().ok_or(cering::Error::NotUnital)?.clone();
            let int = |k: i64| {
                let ch = base.characteristic() as i64;
                base.scale(k.rem_euclid(ch) as u64, &one)
            };
            let params = QuaternionParams { a: int(*a), b: int(*b), base: base.clone() };
            quaternion_algebra(&params)?.ring
        }
        RingSpec::MatrixDelta { n } => matrix_delta(*n)?,
        RingSpec::DeltaIdeal { coeff, group, subgroup } => {
            let g = build_group(group)?;
            let gr = group_ring(&ring_of(coeff)?, &g)?;
            let h: Vec<usize> = match subgroup {
                Some(names) => names
                    .iter()
                    .map(|s| g.index_of_name(s).ok_or_else(|| CliError::Usage(format!("unknown group element {s}"))))
                    .collect::<Result<_, _>>()?,
                None => g.derived_subgroup().to_vec(),
            };
            let ideal = delta_ideal(&gr, &h)?;
            Ring::from_subgroup(gr.ring(), &ideal)?.with_label(format!("Δ(G,H) in {}", gr.ring().label()))
        }
        RingSpec::DirectSum { summands } => {
            let mut it = summands.iter();
            let first = it.next().ok_or_else(|| CliError::Usage("direct_sum needs at least one summand".into()))?;
            it.try_fold(ring_of(first)?, |acc, s| Ok::<_, CliError>(Ring::direct_sum(&acc, &ring_of(s)?)?))?
        }
        RingSpec::Semiring { add, mul, zero, one, names } => {
            let s = make_semiring(add, mul, *zero, *one)?;
            let s = match names {
                Some(n) => s.with_names(n.clone())?,
                None => s,
            };
            return Ok(Built::Semiring(s));
        }
        RingSpec::Preset { name } => return preset(name),
    };
    Ok(Built::Ring(ring))
}

fn preset(name: &str) -> Result<Built, CliError> {
    match name {
        "semiring_order5" => return Ok(Built::Semiring(semiring::example_order5())),
        "boolean_semiring" => return Ok(Built::Semiring(semiring::boolean())),
        _ => {}
    }
    cering::corpus::by_name(name)?
        .map(Built::Ring)
        .ok_or_else(|| CliError::Usage(format!("unknown preset {name}; known: {}", preset_names().join(", "))))
}

/// Parse a JSON list of elements, e.g. `[[2]]` or `[[0,1,0,0]]`.
pub fn parse_elements(doc: &str) -> Result<Vec<Element>, CliError> {
    serde_json::from_str(doc).map_err(|e| CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() })
}

pub fn zn(n: u64) -> RingSpec {
    RingSpec::Zn { n }
}

pub fn preset_spec(name: &str) -> RingSpec {
    RingSpec::Preset { name: name.to_string() }
}

pub fn quaternion_spec(n: u64, a: i64, b: i64) -> RingSpec {
    RingSpec::Quaternion { base: Box::new(zn(n)), a, b }
}

pub fn group_ring_spec(n: u64, group: GroupSpec) -> RingSpec {
    RingSpec::GroupRing { coeff: Box::new(zn(n)), group }
}

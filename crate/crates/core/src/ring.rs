//! Finite, possibly non-unital rings behind one element-arithmetic interface.
//!
//! Four representations share the interface:
//!
//! * structure rings: a free `Z_n`-module with basis products given by
//!   structure constants (every group ring, quaternion algebra and matrix
//!   preset lives here);
//! * table rings: explicit Cayley tables for small ad-hoc rings;
//! * subrings: a multiplicatively closed additive subgroup of another ring,
//!   reified so that ideals can be studied as rings without unit;
//! * direct sums of rings that do not share a modulus.
//!
//! Elements are coordinate vectors. For structure rings the coordinates are
//! the coefficients on the basis, for table rings a single table index, for
//! subrings the ambient coordinates and for direct sums the concatenation of
//! the summands' coordinates. The canonical element order is lexicographic
//! on coordinates, which coincides with the index order used by
//! [`Ring::element_at`].

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Axiom, Error, Result};
use crate::modarith::{gcd, lcm};

/// A ring element as a coordinate vector; see the module docs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(pub Vec<u32>);

impl Element {
    pub fn new(coords: Vec<u32>) -> Self {
        Element(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Element {
    fn from(v: Vec<u32>) -> Self {
        Element(v)
    }
}

/// Structure constants over `Z_n`.
#[derive(Clone)]
pub struct StructureRing {
    modulus: u32,
    rank: usize,
    /// `dense[(i * rank + j) * rank + k]` is the coefficient of `e_k` in `e_i e_j`.
    dense: Vec<u32>,
    /// Non-zero terms of each basis product.
    terms: Vec<Vec<(usize, u32)>>,
}

impl StructureRing {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coefficient of `e_k` in `e_i e_j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.dense[(i * self.rank + j) * self.rank + k]
    }

    pub fn constants(&self) -> &[u32] {
        &self.dense
    }

    fn mul_into(&self, a: &[u32], b: &[u32], out: &mut [u32]) {
        let n = self.modulus as u64;
        let r = self.rank;
        let mut stack = [0u64; 64];
        let mut heap;
        let acc: &mut [u64] = if r <= 64 {
            &mut stack[..r]
        } else {
            heap = vec![0u64; r];
            &mut heap
        };
        let small = n <= 0xffff;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let s = ai as u64 * bj as u64 % n;
                for &(k, c) in &self.terms[i * r + j] {
                    if small {
                        acc[k] += s * c as u64;
                    } else {
                        acc[k] = (acc[k] + s * c as u64 % n) % n;
                    }
                }
            }
        }
        for (o, x) in out.iter_mut().zip(acc.iter()) {
            *o = (x % n) as u32;
        }
    }
}

/// Explicit Cayley tables on indices `0..order`.
#[derive(Clone)]
pub struct TableRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: u32,
}

impl TableRing {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero_index(&self) -> usize {
        self.zero as usize
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }
}

/// A multiplicatively closed additive subgroup of an ambient ring.
#[derive(Clone)]
pub struct SubRing {
    ambient: Ring,
    members: Arc<Vec<Element>>,
}

impl SubRing {
    pub fn ambient(&self) -> &Ring {
        &self.ambient
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }
}

#[derive(Clone)]
pub enum Repr {
    Structure(StructureRing),
    Table(TableRing),
    Sub(SubRing),
    Sum(Vec<Ring>),
}

struct Inner {
    repr: Repr,
    one: Option<Element>,
    zero: Element,
    characteristic: u64,
    order: u64,
    width: usize,
    gens: Vec<Element>,
    label: String,
}

/// A finite ring. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({}, order {})", self.0.label, self.0.order)
    }
}

impl Ring {
    /// `Z_n` as a rank-one structure ring.
    pub fn zn(n: u64) -> Result<Ring> {
        if n < 2 {
            return Err(Error::BadModulus(n));
        }
        if n > u32::MAX as u64 {
            return Err(Error::Overflow);
        }
        let ring = Ring::from_structure_constants(n as u32, 1, vec![1], Some(vec![1]))?;
        Ok(ring.with_label(format!("Z_{n}")))
    }

    /// A structure ring from constants laid out as `[(i * rank + j) * rank + k]`.
    ///
    /// Associativity of the basis products is checked for every basis triple,
    /// and a supplied identity is checked against every basis element.
    pub fn from_structure_constants(
        modulus: u32,
        rank: usize,
        constants: Vec<u32>,
        one: Option<Vec<u32>>,
    ) -> Result<Ring> {
        if modulus < 2 {
            return Err(Error::BadModulus(modulus as u64));
        }
        if rank == 0 || constants.len() != rank * rank * rank {
            return Err(Error::axiom(Axiom::TableShape, &[rank, constants.len()]));
        }
        let order = (modulus as u64)
            .checked_pow(rank as u32)
            .ok_or(Error::Overflow)?;
        let dense: Vec<u32> = constants.iter().map(|&c| c % modulus).collect();
        let terms = (0..rank * rank)
            .map(|ij| {
                (0..rank)
                    .filter_map(|k| {
                        let c = dense[ij * rank + k];
                        (c != 0).then_some((k, c))
                    })
                    .collect()
            })
            .collect();
        let sr = StructureRing { modulus, rank, dense, terms };

        let basis: Vec<Vec<u32>> = (0..rank)
            .map(|i| (0..rank).map(|k| u32::from(i == k)).collect())
            .collect();
        let mut left = vec![0; rank];
        let mut right = vec![0; rank];
        let mut tmp = vec![0; rank];
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    sr.mul_into(&basis[i], &basis[j], &mut tmp);
                    sr.mul_into(&tmp, &basis[k], &mut left);
                    sr.mul_into(&basis[j], &basis[k], &mut tmp);
                    sr.mul_into(&basis[i], &tmp, &mut right);
                    if left != right {
                        return Err(Error::axiom(Axiom::MultiplicativeAssociativity, &[i, j, k]));
                    }
                }
            }
        }
        let one = match one {
            Some(u) => {
                if u.len() != rank {
                    return Err(Error::NotAnElement(u));
                }
                let u: Vec<u32> = u.iter().map(|&x| x % modulus).collect();
                for (i, e) in basis.iter().enumerate() {
                    sr.mul_into(&u, e, &mut left);
                    sr.mul_into(e, &u, &mut right);
                    if &left != e || &right != e {
                        return Err(Error::axiom(Axiom::MultiplicativeIdentity, &[i]));
                    }
                }
                Some(Element(u))
            }
            None => None,
        };
        let gens = basis.into_iter().map(Element).collect();
        Ok(Ring(Arc::new(Inner {
            repr: Repr::Structure(sr),
            one,
            zero: Element(vec![0; rank]),
            characteristic: modulus as u64,
            order,
            width: rank,
            gens,
            label: format!("structure ring over Z_{modulus} of rank {rank}"),
        })))
    }

    /// A ring from Cayley tables on `0..m`, validated axiom by axiom.
    ///
    /// When `one` is `None` an identity is still detected if the tables have one.
    pub fn from_tables(
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        zero: usize,
        one: Option<usize>,
    ) -> Result<Ring> {
        let m = add.len();
        if m == 0 || mul.len() != m || zero >= m {
            return Err(Error::axiom(Axiom::TableShape, &[m, mul.len()]));
        }
        for (i, row) in add.iter().chain(mul.iter()).enumerate() {
            if row.len() != m || row.iter().any(|&x| x >= m) {
                return Err(Error::axiom(Axiom::TableShape, &[i % m]));
            }
        }
        let a = |x: usize, y: usize| add[x][y];
        let p = |x: usize, y: usize| mul[x][y];
        for x in 0..m {
            if a(zero, x) != x || a(x, zero) != x {
                return Err(Error::axiom(Axiom::AdditiveIdentity, &[x]));
            }
        }
        for x in 0..m {
            for y in 0..m {
                if a(x, y) != a(y, x) {
                    return Err(Error::axiom(Axiom::AdditiveCommutativity, &[x, y]));
                }
            }
        }
        let mut neg = vec![0u32; m];
        for x in 0..m {
            match (0..m).find(|&y| a(x, y) == zero) {
                Some(y) => neg[x] = y as u32,
                None => return Err(Error::axiom(Axiom::AdditiveInverse, &[x])),
            }
        }
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if a(a(x, y), z) != a(x, a(y, z)) {
                        return Err(Error::axiom(Axiom::AdditiveAssociativity, &[x, y, z]));
                    }
                }
            }
        }
        for x in 0..m {
            if p(zero, x) != zero || p(x, zero) != zero {
                return Err(Error::axiom(Axiom::ZeroAbsorbing, &[x]));
            }
        }
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    if p(p(x, y), z) != p(x, p(y, z)) {
                        return Err(Error::axiom(Axiom::MultiplicativeAssociativity, &[x, y, z]));
                    }
                    if p(x, a(y, z)) != a(p(x, y), p(x, z)) {
                        return Err(Error::axiom(Axiom::LeftDistributivity, &[x, y, z]));
                    }
                    if p(a(y, z), x) != a(p(y, x), p(z, x)) {
                        return Err(Error::axiom(Axiom::RightDistributivity, &[x, y, z]));
                    }
                }
            }
        }
        let is_identity = |u: usize| (0..m).all(|x| p(u, x) == x && p(x, u) == x);
        let one = match one {
            Some(u) => {
                if u >= m {
                    return Err(Error::axiom(Axiom::TableShape, &[u]));
                }
                if let Some(x) = (0..m).find(|&x| p(u, x) != x || p(x, u) != x) {
                    return Err(Error::axiom(Axiom::MultiplicativeIdentity, &[u, x]));
                }
                Some(u)
            }
            None => (0..m).find(|&u| is_identity(u)),
        };

        // additive order of each element
        let mut characteristic = 1u64;
        for x in 0..m {
            let mut k = 1u64;
            let mut acc = x;
            while acc != zero {
                acc = a(acc, x);
                k += 1;
            }
            characteristic = lcm(characteristic, k);
        }
        let gens = table_generators(m, zero, a);
        let flat = |t: &[Vec<usize>]| t.iter().flatten().map(|&x| x as u32).collect::<Vec<_>>();
        Ok(Ring(Arc::new(Inner {
            repr: Repr::Table(TableRing {
                order: m,
                add: flat(add),
                mul: flat(mul),
                neg,
                zero: zero as u32,
            }),
            one: one.map(|u| Element(vec![u as u32])),
            zero: Element(vec![zero as u32]),
            characteristic,
            order: m as u64,
            width: 1,
            gens: gens.into_iter().map(|g| Element(vec![g as u32])).collect(),
            label: format!("table ring of order {m}"),
        })))
    }

    /// The ring `{0, v, 2v, ..}` of order `m` with zero multiplication.
    pub fn zero_multiplication(m: usize) -> Result<Ring> {
        let add: Vec<Vec<usize>> = (0..m).map(|x| (0..m).map(|y| (x + y) % m).collect()).collect();
        let mul = vec![vec![0; m]; m];
        Ok(Ring::from_tables(&add, &mul, 0, None)?.with_label(format!("zero-multiplication ring of order {m}")))
    }

    /// The zero ring `{0}`.
    pub fn zero_ring() -> Ring {
        Ring::from_tables(&[vec![0]], &[vec![0]], 0, None)
            .expect("zero ring is valid")
            .with_label("0")
    }

    /// Reify a multiplicatively closed additive subgroup of `ambient` as a ring.
    ///
    /// An identity of the subring is searched for when the subgroup has at
    /// most `1 << 16` elements.
    pub fn from_subgroup(ambient: &Ring, sub: &crate::subgroup::AdditiveSubgroup) -> Result<Ring> {
        let gens: Vec<Element> = sub.generators().to_vec();
        for (i, x) in gens.iter().enumerate() {
            for (j, y) in gens.iter().enumerate() {
                if !sub.contains(&ambient.mul(x, y)) {
                    return Err(Error::axiom(Axiom::Subgroup, &[i, j]));
                }
            }
        }
        let members = Arc::new(sub.elements().to_vec());
        let one = if members.len() <= 1 << 16 {
            members
                .iter()
                .find(|u| {
                    !ambient.is_zero(u)
                        && gens.iter().all(|g| &ambient.mul(u, g) == g && &ambient.mul(g, u) == g)
                })
                .cloned()
        } else {
            None
        };
        let characteristic = gens
            .iter()
            .fold(1u64, |acc, g| lcm(acc, ambient.additive_order(g)));
        Ok(Ring(Arc::new(Inner {
            order: members.len() as u64,
            zero: ambient.zero(),
            width: ambient.width(),
            label: format!("subring of order {} in {}", members.len(), ambient.label()),
            repr: Repr::Sub(SubRing { ambient: ambient.clone(), members }),
            one,
            characteristic,
            gens,
        })))
    }

    /// Componentwise direct sum. Two structure rings over the same modulus
    /// give a structure ring with block-diagonal constants.
    pub fn direct_sum(r: &Ring, s: &Ring) -> Result<Ring> {
        let label = format!("{} ⊕ {}", r.label(), s.label());
        if let (Repr::Structure(a), Repr::Structure(b)) = (r.repr(), s.repr()) {
            if a.modulus == b.modulus {
                let (p, q) = (a.rank, b.rank);
                let rank = p + q;
                let mut c = vec![0u32; rank * rank * rank];
                for i in 0..p {
                    for j in 0..p {
                        for k in 0..p {
                            c[(i * rank + j) * rank + k] = a.constant(i, j, k);
                        }
                    }
                }
                for i in 0..q {
                    for j in 0..q {
                        for k in 0..q {
                            c[((p + i) * rank + p + j) * rank + p + k] = b.constant(i, j, k);
                        }
                    }
                }
                let one = match (r.one(), s.one()) {
                    (Some(u), Some(v)) => Some([u.0.clone(), v.0.clone()].concat()),
                    _ => None,
                };
                return Ok(Ring::from_structure_constants(a.modulus, rank, c, one)?.with_label(label));
            }
        }
        let order = r.order().checked_mul(s.order()).ok_or(Error::Overflow)?;
        let zero = Element([r.zero().0, s.zero().0].concat());
        let one = match (r.one(), s.one()) {
            (Some(u), Some(v)) => Some(Element([u.0.clone(), v.0.clone()].concat())),
            _ => None,
        };
        let mut gens = Vec::new();
        for g in r.gens() {
            gens.push(Element([g.0.clone(), s.zero().0].concat()));
        }
        for g in s.gens() {
            gens.push(Element([r.zero().0, g.0.clone()].concat()));
        }
        Ok(Ring(Arc::new(Inner {
            repr: Repr::Sum(vec![r.clone(), s.clone()]),
            one,
            zero,
            characteristic: lcm(r.characteristic(), s.characteristic()),
            order,
            width: r.width() + s.width(),
            gens,
            label,
        })))
    }

    pub fn with_label(self, label: impl Into<String>) -> Ring {
        let mut inner = match Arc::try_unwrap(self.0) {
            Ok(inner) => inner,
            Err(shared) => Inner {
                repr: shared.repr.clone(),
                one: shared.one.clone(),
                zero: shared.zero.clone(),
                characteristic: shared.characteristic,
                order: shared.order,
                width: shared.width,
                gens: shared.gens.clone(),
                label: shared.label.clone(),
            },
        };
        inner.label = label.into();
        Ring(Arc::new(inner))
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn repr(&self) -> &Repr {
        &self.0.repr
    }

    pub fn as_structure(&self) -> Option<&StructureRing> {
        match &self.0.repr {
            Repr::Structure(s) => Some(s),
            _ => None,
        }
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Length of the coordinate vector of an element.
    pub fn width(&self) -> usize {
        self.0.width
    }

    /// Least `k > 0` with `k x = 0` for all `x`.
    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    pub fn is_unital(&self) -> bool {
        self.0.one.is_some()
    }

    pub fn one(&self) -> Option<&Element> {
        self.0.one.as_ref()
    }

    pub fn zero(&self) -> Element {
        self.0.zero.clone()
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        x == &self.0.zero
    }

    /// Additive generators; for structure rings the basis.
    pub fn gens(&self) -> &[Element] {
        &self.0.gens
    }

    pub fn contains(&self, x: &Element) -> bool {
        if x.0.len() != self.width() {
            return false;
        }
        match &self.0.repr {
            Repr::Structure(s) => x.0.iter().all(|&c| c < s.modulus),
            Repr::Table(t) => (x.0[0] as usize) < t.order,
            Repr::Sub(s) => s.members.binary_search(x).is_ok(),
            Repr::Sum(parts) => {
                let mut off = 0;
                parts.iter().all(|p| {
                    let w = p.width();
                    let ok = p.contains(&Element(x.0[off..off + w].to_vec()));
                    off += w;
                    ok
                })
            }
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        let mut out = vec![0; self.width()];
        self.add_into(&x.0, &y.0, &mut out);
        Element(out)
    }

    pub fn add_into(&self, x: &[u32], y: &[u32], out: &mut [u32]) {
        match &self.0.repr {
            Repr::Structure(s) => {
                let n = s.modulus as u64;
                for ((o, &a), &b) in out.iter_mut().zip(x).zip(y) {
                    *o = ((a as u64 + b as u64) % n) as u32;
                }
            }
            Repr::Table(t) => out[0] = t.add[x[0] as usize * t.order + y[0] as usize],
            Repr::Sub(s) => s.ambient.add_into(x, y, out),
            Repr::Sum(parts) => {
                let mut off = 0;
                for p in parts {
                    let w = p.width();
                    p.add_into(&x[off..off + w], &y[off..off + w], &mut out[off..off + w]);
                    off += w;
                }
            }
        }
    }

    pub fn neg(&self, x: &Element) -> Element {
        match &self.0.repr {
            Repr::Structure(s) => {
                let n = s.modulus;
                Element(x.0.iter().map(|&a| (n - a) % n).collect())
            }
            Repr::Table(t) => Element(vec![t.neg[x.0[0] as usize]]),
            Repr::Sub(s) => s.ambient.neg(x),
            Repr::Sum(parts) => {
                let mut out = Vec::with_capacity(self.width());
                let mut off = 0;
                for p in parts {
                    let w = p.width();
                    out.extend(p.neg(&Element(x.0[off..off + w].to_vec())).0);
                    off += w;
                }
                Element(out)
            }
        }
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = vec![0; self.width()];
        self.mul_into(&x.0, &y.0, &mut out);
        Element(out)
    }

    /// Multiply coordinate slices into `out` without allocating (structure rings).
    pub fn mul_into(&self, x: &[u32], y: &[u32], out: &mut [u32]) {
        match &self.0.repr {
            Repr::Structure(s) => s.mul_into(x, y, out),
            Repr::Table(t) => out[0] = t.mul[x[0] as usize * t.order + y[0] as usize],
            Repr::Sub(s) => s.ambient.mul_into(x, y, out),
            Repr::Sum(parts) => {
                let mut off = 0;
                for p in parts {
                    let w = p.width();
                    p.mul_into(&x[off..off + w], &y[off..off + w], &mut out[off..off + w]);
                    off += w;
                }
            }
        }
    }

    /// Integer multiple `k x` for `k >= 0`.
    pub fn scale(&self, k: u64, x: &Element) -> Element {
        match &self.0.repr {
            Repr::Structure(s) => {
                let n = s.modulus as u64;
                let k = k % n;
                Element(x.0.iter().map(|&a| (a as u64 * k % n) as u32).collect())
            }
            _ => {
                // double-and-add
                let mut result = self.zero();
                let mut base = x.clone();
                let mut k = k;
                while k > 0 {
                    if k & 1 == 1 {
                        result = self.add(&result, &base);
                    }
                    base = self.add(&base, &base);
                    k >>= 1;
                }
                result
            }
        }
    }

    /// Additive order of `x`.
    pub fn additive_order(&self, x: &Element) -> u64 {
        match &self.0.repr {
            Repr::Structure(s) => {
                let n = s.modulus as u64;
                x.0.iter().fold(1u64, |acc, &c| lcm(acc, n / gcd(c as u64, n)))
            }
            _ => {
                let mut k = 1;
                let mut acc = x.clone();
                while !self.is_zero(&acc) {
                    acc = self.add(&acc, x);
                    k += 1;
                }
                k
            }
        }
    }

    /// `x^k` for `k >= 1`.
    pub fn pow(&self, x: &Element, k: u32) -> Element {
        assert!(k >= 1, "pow needs a positive exponent in a possibly non-unital ring");
        let mut acc = x.clone();
        for _ in 1..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// The element with canonical index `idx`.
    pub fn element_at(&self, idx: u64) -> Element {
        let mut out = vec![0; self.width()];
        self.write_element(idx, &mut out);
        Element(out)
    }

    pub fn write_element(&self, mut idx: u64, out: &mut [u32]) {
        match &self.0.repr {
            Repr::Structure(s) => {
                let n = s.modulus as u64;
                for o in out.iter_mut().rev() {
                    *o = (idx % n) as u32;
                    idx /= n;
                }
            }
            Repr::Table(_) => out[0] = idx as u32,
            Repr::Sub(s) => out.copy_from_slice(&s.members[idx as usize].0),
            Repr::Sum(parts) => {
                let mut off = self.width();
                for p in parts.iter().rev() {
                    let w = p.width();
                    p.write_element(idx % p.order(), &mut out[off - w..off]);
                    idx /= p.order();
                    off -= w;
                }
            }
        }
    }

    /// Canonical index of `x`; `x` must belong to the ring.
    pub fn index_of(&self, x: &Element) -> u64 {
        self.index_of_coords(&x.0)
    }

    pub fn index_of_coords(&self, x: &[u32]) -> u64 {
        match &self.0.repr {
            Repr::Structure(s) => {
                let n = s.modulus as u64;
                x.iter().fold(0u64, |acc, &c| acc * n + c as u64)
            }
            Repr::Table(_) => x[0] as u64,
            Repr::Sub(s) => s
                .members
                .binary_search_by(|m| m.0.as_slice().cmp(x))
                .expect("element of subring") as u64,
            Repr::Sum(parts) => {
                let mut off = 0;
                let mut idx = 0u64;
                for p in parts {
                    let w = p.width();
                    idx = idx * p.order() + p.index_of_coords(&x[off..off + w]);
                    off += w;
                }
                idx
            }
        }
    }

    /// Visit elements with indices in `start..end`, in order, without
    /// allocating per element. Structure rings step an odometer.
    pub fn for_each_in_range(&self, start: u64, end: u64, mut f: impl FnMut(u64, &[u32])) {
        let end = end.min(self.order());
        if start >= end {
            return;
        }
        let mut buf = vec![0u32; self.width()];
        self.write_element(start, &mut buf);
        match &self.0.repr {
            Repr::Structure(s) => {
                let n = s.modulus;
                for idx in start..end {
                    f(idx, &buf);
                    for c in buf.iter_mut().rev() {
                        *c += 1;
                        if *c < n {
                            break;
                        }
                        *c = 0;
                    }
                }
            }
            _ => {
                for idx in start..end {
                    self.write_element(idx, &mut buf);
                    f(idx, &buf);
                }
            }
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// Fails with `CapExceeded` if the ring has more than `cap` elements.
    pub fn require_order_at_most(&self, cap: u64, what: &str) -> Result<()> {
        if self.order() > cap {
            return Err(Error::CapExceeded { what: what.to_string(), needed: self.order(), cap });
        }
        Ok(())
    }

    /// Does `x` commute with every additive generator (hence with everything)?
    pub fn is_central(&self, x: &Element) -> bool {
        let mut l = vec![0; self.width()];
        let mut r = vec![0; self.width()];
        self.gens().iter().all(|g| {
            self.mul_into(&x.0, &g.0, &mut l);
            self.mul_into(&g.0, &x.0, &mut r);
            l == r
        })
    }

    /// A pair of non-commuting generators, if any.
    pub fn noncommuting_generators(&self) -> Option<(Element, Element)> {
        let g = self.gens();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                if self.mul(&g[i], &g[j]) != self.mul(&g[j], &g[i]) {
                    return Some((g[i].clone(), g[j].clone()));
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        self.noncommuting_generators().is_none()
    }

    /// Basis element `e_i` of a structure ring (also valid for any ring with
    /// at least `i + 1` additive generators, returning the `i`-th generator).
    pub fn basis(&self, i: usize) -> Element {
        self.gens()[i].clone()
    }
}

fn table_generators(m: usize, zero: usize, add: impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut inside = vec![false; m];
    inside[zero] = true;
    let mut members = vec![zero];
    let mut gens = Vec::new();
    for g in 0..m {
        if inside[g] {
            continue;
        }
        gens.push(g);
        let base = members.clone();
        let mut mult = g;
        while !inside[mult] {
            for &s in &base {
                let t = add(s, mult);
                if !inside[t] {
                    inside[t] = true;
                    members.push(t);
                }
            }
            mult = add(mult, g);
        }
    }
    gens
}

/// Set of elements with fast membership, keyed by canonical index when the
/// ring is small enough for a bitmap.
pub struct ElementSet {
    bits: Option<Vec<u64>>,
    hashed: HashSet<Element>,
}

impl ElementSet {
    pub fn new<'a>(ring: &Ring, elements: impl IntoIterator<Item = &'a Element>) -> Self {
        if ring.order() <= 1 << 26 && !matches!(ring.repr(), Repr::Sub(_)) {
            let mut bits = vec![0u64; (ring.order() as usize).div_ceil(64)];
            for e in elements {
                let i = ring.index_of(e) as usize;
                bits[i / 64] |= 1 << (i % 64);
            }
            ElementSet { bits: Some(bits), hashed: HashSet::new() }
        } else {
            ElementSet { bits: None, hashed: elements.into_iter().cloned().collect() }
        }
    }

    /// Membership by canonical index; `None` when the set is hashed.
    #[inline]
    pub fn contains_index(&self, i: u64) -> Option<bool> {
        self.bits.as_ref().map(|bits| bits[(i / 64) as usize] >> (i % 64) & 1 == 1)
    }

    pub fn contains(&self, ring: &Ring, x: &[u32]) -> bool {
        match &self.bits {
            Some(bits) => {
                let i = ring.index_of_coords(x) as usize;
                bits[i / 64] >> (i % 64) & 1 == 1
            }
            None => self.hashed.contains(&Element(x.to_vec())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_tables(n: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let add = (0..n).map(|x| (0..n).map(|y| (x + y) % n).collect()).collect();
        let mul = (0..n).map(|x| (0..n).map(|y| (x * y) % n).collect()).collect();
        (add, mul)
    }

    #[test]
    fn zn_basics() {
        let z2 = Ring::zn(2).unwrap();
        assert_eq!(z2.order(), 2);
        let one = z2.one().unwrap().clone();
        assert!(z2.is_zero(&z2.add(&one, &one)));
        let z9 = Ring::zn(9).unwrap();
        assert_eq!(z9.characteristic(), 9);
        let z6 = Ring::zn(6).unwrap();
        assert!(z6.is_commutative() && z6.is_unital());
        assert!(matches!(Ring::zn(1), Err(Error::BadModulus(1))));
    }

    #[test]
    fn table_ring_matches_zn() {
        let (add, mul) = z_tables(2);
        let t = Ring::from_tables(&add, &mul, 0, Some(1)).unwrap();
        let z = Ring::zn(2).unwrap();
        assert_eq!(t.order(), z.order());
        for x in 0..2u64 {
            for y in 0..2u64 {
                let (tx, ty) = (t.element_at(x), t.element_at(y));
                let (zx, zy) = (z.element_at(x), z.element_at(y));
                assert_eq!(t.index_of(&t.mul(&tx, &ty)), z.index_of(&z.mul(&zx, &zy)));
                assert_eq!(t.index_of(&t.add(&tx, &ty)), z.index_of(&z.add(&zx, &zy)));
            }
        }
    }

    #[test]
    fn zero_multiplication_ring_is_valid_and_nonunital() {
        let r = Ring::zero_multiplication(2).unwrap();
        assert_eq!(r.order(), 2);
        assert!(!r.is_unital());
        assert!(r.is_commutative());
    }

    #[test]
    fn distributivity_violation_is_named() {
        // x*y = 1 whenever both are non-zero: breaks distributivity in Z_3.
        let (add, _) = z_tables(3);
        let mul = vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 1]];
        match Ring::from_tables(&add, &mul, 0, None) {
            Err(Error::Axiom { axiom, witness }) => {
                assert!(matches!(axiom, Axiom::LeftDistributivity | Axiom::RightDistributivity));
                let (x, y, z) = (witness[0], witness[1], witness[2]);
                let lhs = if axiom == Axiom::LeftDistributivity {
                    (mul[x][add[y][z]], add[mul[x][y]][mul[x][z]])
                } else {
                    (mul[add[y][z]][x], add[mul[y][x]][mul[z][x]])
                };
                assert_ne!(lhs.0, lhs.1);
            }
            other => panic!("expected distributivity error, got {other:?}"),
        }
    }

    #[test]
    fn bad_identity_is_rejected() {
        let (add, mul) = z_tables(4);
        assert!(matches!(
            Ring::from_tables(&add, &mul, 0, Some(3)),
            Err(Error::Axiom { axiom: Axiom::MultiplicativeIdentity, .. })
        ));
    }

    #[test]
    fn direct_sums() {
        let z2 = Ring::zn(2).unwrap();
        let z3 = Ring::zn(3).unwrap();
        let s = Ring::direct_sum(&z2, &z3).unwrap();
        assert_eq!(s.order(), 6);
        assert!(s.is_commutative() && s.is_unital());
        assert_eq!(s.characteristic(), 6);
        let t = Ring::direct_sum(&z2, &Ring::zero_ring()).unwrap();
        assert_eq!(t.order(), 2);
        assert!(t.is_unital() && t.is_commutative());
        for idx in 0..s.order() {
            assert_eq!(s.index_of(&s.element_at(idx)), idx);
        }
    }

    #[test]
    fn element_order_is_lexicographic() {
        let r = Ring::direct_sum(&Ring::zn(3).unwrap(), &Ring::zn(2).unwrap()).unwrap();
        let all: Vec<Element> = r.elements().collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn nonassociative_constants_are_rejected() {
        // e*e = 1 + e over Z_2 in rank 2 with e0 acting as unit on the left only.
        let mut c = vec![0u32; 8];
        // e0 e0 = e0, e0 e1 = e1, e1 e0 = e0, e1 e1 = e1
        c[0] = 1;
        c[2 + 1] = 1;
        c[(2) * 2] = 1;
        c[(3) * 2 + 1] = 1;
        assert!(Ring::from_structure_constants(2, 2, c.clone(), None).is_ok());
        c[(3) * 2] = 1; // e1 e1 = e0 + e1
        assert!(matches!(
            Ring::from_structure_constants(2, 2, c, None),
            Err(Error::Axiom { axiom: Axiom::MultiplicativeAssociativity, .. })
        ));
    }
}

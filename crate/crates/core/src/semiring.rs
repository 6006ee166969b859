//! Finite semirings given by Cayley tables.
//!
//! Elements are the indices `0..order`. In certificates an element `i` is
//! written as `Element(vec![i])`.

use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Mode, Multiplier, Property, Rejected, Variant, Witness};
use crate::error::{Axiom, Error, Result};
use crate::ring::{Element, Ring};

/// Largest ring accepted by [`Semiring::from_ring`].
pub const ADAPTER_CAP: u64 = 256;

/// Plain tables, the serialized form of a [`Semiring`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiringTables {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

/// A validated finite semiring with commutative addition and absorbing zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SemiringTables", into = "SemiringTables")]
pub struct Semiring {
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    zero: usize,
    one: Option<usize>,
    names: Vec<String>,
}

impl TryFrom<SemiringTables> for Semiring {
    type Error = Error;
    fn try_from(t: SemiringTables) -> Result<Self> {
        let s = make_semiring(&t.add, &t.mul, t.zero, t.one)?;
        match t.names {
            Some(names) => s.with_names(names),
            None => Ok(s),
        }
    }
}

impl From<Semiring> for SemiringTables {
    fn from(s: Semiring) -> Self {
        SemiringTables {
            add: s.add_rows(),
            mul: s.mul_rows(),
            zero: s.zero,
            one: s.one,
            names: Some(s.names),
        }
    }
}

fn flatten(table: &[Vec<usize>], n: usize) -> Result<Vec<usize>> {
    if table.len() != n {
        return Err(Error::axiom(Axiom::TableShape, &[table.len()]));
    }
    let mut out = Vec::with_capacity(n * n);
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(Error::axiom(Axiom::TableShape, &[i]));
        }
        if let Some(j) = row.iter().position(|&v| v >= n) {
            return Err(Error::axiom(Axiom::TableShape, &[i, j]));
        }
        out.extend_from_slice(row);
    }
    Ok(out)
}

/// Validate the tables and build the semiring. Errors name the failing axiom
/// and the offending indices.
pub fn make_semiring(add: &[Vec<usize>], mul: &[Vec<usize>], zero: usize, one: Option<usize>) -> Result<Semiring> {
    let n = add.len();
    if n == 0 || zero >= n || one.is_some_and(|u| u >= n) {
        return Err(Error::axiom(Axiom::TableShape, &[n]));
    }
    let s = Semiring {
        n,
        add: flatten(add, n)?,
        mul: flatten(mul, n)?,
        zero,
        one,
        names: (0..n).map(|i| i.to_string()).collect(),
    };
    s.validate()?;
    Ok(s)
}

impl Semiring {
    fn validate(&self) -> Result<()> {
        let n = self.n;
        let (p, m) = (|x, y| self.add(x, y), |x, y| self.mul(x, y));
        for x in 0..n {
            if p(self.zero, x) != x {
                return Err(Error::axiom(Axiom::AdditiveIdentity, &[x]));
            }
            if m(self.zero, x) != self.zero || m(x, self.zero) != self.zero {
                return Err(Error::axiom(Axiom::ZeroAbsorbing, &[x]));
            }
            if let Some(u) = self.one {
                if m(u, x) != x || m(x, u) != x {
                    return Err(Error::axiom(Axiom::MultiplicativeIdentity, &[x]));
                }
            }
            for y in 0..n {
                if p(x, y) != p(y, x) {
                    return Err(Error::axiom(Axiom::AdditiveCommutativity, &[x, y]));
                }
                for z in 0..n {
                    if p(p(x, y), z) != p(x, p(y, z)) {
                        return Err(Error::axiom(Axiom::AdditiveAssociativity, &[x, y, z]));
                    }
                    if m(m(x, y), z) != m(x, m(y, z)) {
                        return Err(Error::axiom(Axiom::MultiplicativeAssociativity, &[x, y, z]));
                    }
                    if m(x, p(y, z)) != p(m(x, y), m(x, z)) {
                        return Err(Error::axiom(Axiom::LeftDistributivity, &[x, y, z]));
                    }
                    if m(p(y, z), x) != p(m(y, x), m(z, x)) {
                        return Err(Error::axiom(Axiom::RightDistributivity, &[x, y, z]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Attach display names, one per element.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::axiom(Axiom::TableShape, &[names.len()]));
        }
        self.names = names;
        Ok(self)
    }

    /// A ring of order at most [`ADAPTER_CAP`], with elements in the ring's
    /// canonical order.
    pub fn from_ring(ring: &Ring) -> Result<Semiring> {
        ring.require_order_at_most(ADAPTER_CAP, "semiring view")?;
        let elems: Vec<Element> = ring.elements().collect();
        let idx = |x: &Element| ring.index_of(x) as usize;
        let table = |f: &dyn Fn(&Element, &Element) -> Element| -> Vec<Vec<usize>> {
            elems.iter().map(|x| elems.iter().map(|y| idx(&f(x, y))).collect()).collect()
        };
        let add = table(&|x, y| ring.add(x, y));
        let mul = table(&|x, y| ring.mul(x, y));
        let zero = idx(&ring.zero());
        let one = ring.one().map(idx);
        let names = elems.iter().map(|e| format!("{:?}", e.0)).collect();
        make_semiring(&add, &mul, zero, one)?.with_names(names)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y]
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn is_central(&self, x: usize) -> bool {
        (0..self.n).all(|y| self.mul(x, y) == self.mul(y, x))
    }
}

fn el(i: usize) -> Element {
    Element(vec![i as u32])
}

fn index(s: &Semiring, e: &Element) -> Result<usize, Rejected> {
    match e.0.as_slice() {
        [i] if (*i as usize) < s.n => Ok(*i as usize),
        _ => Err(Rejected(format!("{e:?} is not an element of the semiring"))),
    }
}

/// The center, by exhaustion, in ascending index order.
pub fn semiring_center(s: &Semiring) -> Vec<usize> {
    (0..s.n).filter(|&x| s.is_central(x)).collect()
}

pub fn is_commutative_semiring(s: &Semiring) -> Certificate {
    for a in 0..s.n {
        for b in a + 1..s.n {
            if s.mul(a, b) != s.mul(b, a) {
                let w = Witness::NonCommuting { a: el(a), b: el(b) };
                return Certificate::new(Property::Commutative, false, Mode::Exhaustive, w, (s.n * s.n) as u64);
            }
        }
    }
    Certificate::new(Property::Commutative, true, Mode::Exhaustive, Witness::Commutative, (s.n * s.n) as u64)
}

/// Central essentiality with the ring definition carried over unchanged. A
/// positive certificate lists the center and one multiplier per non-central
/// element, in index order.
pub fn is_ce_semiring(s: &Semiring) -> Certificate {
    let property = Property::CentrallyEssential { variant: Variant::Nonunital };
    let center = semiring_center(s);
    if center.len() == s.n {
        return Certificate::new(property, true, Mode::Exhaustive, Witness::Commutative, s.n as u64);
    }
    let central: Vec<bool> = (0..s.n).map(|x| s.is_central(x)).collect();
    let mut schedule = Vec::new();
    for a in (0..s.n).filter(|&a| !central[a]) {
        let found = center.iter().find(|&&c| {
            let p = s.mul(a, c);
            c != s.zero && p != s.zero && central[p]
        });
        match found {
            Some(&c) => schedule.push(Multiplier::Element(el(c))),
            None => {
                let w = Witness::NoCentralMultiplier { a: el(a) };
                return Certificate::new(property, false, Mode::Exhaustive, w, s.n as u64);
            }
        }
    }
    let w = Witness::CentralMultipliers { center_generators: center.into_iter().map(el).collect(), schedule };
    Certificate::new(property, true, Mode::Exhaustive, w, s.n as u64)
}

pub fn is_semisubtractive(s: &Semiring) -> Certificate {
    let reach = |a: usize, b: usize| (0..s.n).any(|x| s.add(a, x) == b);
    for a in 0..s.n {
        for b in a + 1..s.n {
            if !reach(a, b) && !reach(b, a) {
                let w = Witness::NotSubtractive { a: el(a), b: el(b) };
                return Certificate::new(Property::Semisubtractive, false, Mode::Exhaustive, w, (s.n * s.n) as u64);
            }
        }
    }
    Certificate::new(Property::Semisubtractive, true, Mode::Exhaustive, Witness::Exhausted, (s.n * s.n) as u64)
}

/// Re-check a semiring certificate against the tables.
pub fn verify_semiring_certificate(s: &Semiring, cert: &Certificate) -> Result<(), Rejected> {
    let bad = |m: &str| Err(Rejected(m.to_string()));
    let comm = (0..s.n).all(|x| s.is_central(x));
    match (&cert.property, &cert.witness, cert.holds) {
        (Property::Commutative | Property::CentrallyEssential { .. }, Witness::Commutative, true) => {
            if comm { Ok(()) } else { bad("semiring is not commutative") }
        }
        (Property::Commutative | Property::CentrallyEssential { .. }, Witness::NonCommuting { a, b }, false) => {
            let (a, b) = (index(s, a)?, index(s, b)?);
            if s.mul(a, b) != s.mul(b, a) { Ok(()) } else { bad("witness pair commutes") }
        }
        (Property::CentrallyEssential { .. }, Witness::CentralMultipliers { center_generators, schedule }, true) => {
            let claimed: Vec<usize> = center_generators.iter().map(|e| index(s, e)).collect::<Result<_, _>>()?;
            if let Some(c) = claimed.iter().find(|&&c| !s.is_central(c)) {
                return bad(&format!("{} is not central", s.name(*c)));
            }
            let noncentral: Vec<usize> = (0..s.n).filter(|&a| !s.is_central(a)).collect();
            if noncentral.len() != schedule.len() {
                return bad("schedule length differs from the number of non-central elements");
            }
            for (a, m) in noncentral.into_iter().zip(schedule) {
                let Multiplier::Element(c) = m else { return bad("semiring multipliers must be elements") };
                let c = index(s, c)?;
                let p = s.mul(a, c);
                if c == s.zero || p == s.zero || !claimed.contains(&c) || !s.is_central(p) {
                    return bad(&format!("multiplier {} fails for {}", s.name(c), s.name(a)));
                }
            }
            Ok(())
        }
        (Property::CentrallyEssential { .. }, Witness::NoCentralMultiplier { a }, false) => {
            let a = index(s, a)?;
            if s.is_central(a) {
                return bad("witness is central");
            }
            let ok = (0..s.n).any(|c| {
                let p = s.mul(a, c);
                c != s.zero && s.is_central(c) && p != s.zero && s.is_central(p)
            });
            if ok { bad("witness has a central multiplier") } else { Ok(()) }
        }
        (Property::Semisubtractive, Witness::NotSubtractive { a, b }, false) => {
            let (a, b) = (index(s, a)?, index(s, b)?);
            let reach = |x: usize, y: usize| (0..s.n).any(|t| s.add(x, t) == y);
            if a != b && !reach(a, b) && !reach(b, a) { Ok(()) } else { bad("pair is subtractive") }
        }
        (Property::Semisubtractive, Witness::Exhausted, true) => {
            if is_semisubtractive(s).holds { Ok(()) } else { bad("some pair is not subtractive") }
        }
        _ => bad("witness does not match property and verdict"),
    }
}

/// The order-5 non-commutative, semisubtractive, centrally essential
/// semiring on `{0, 1, a, b, c}`.
pub fn example_order5() -> Semiring {
    let add = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 1, 1, 3, 1],
        vec![2, 1, 2, 3, 2],
        vec![3, 3, 3, 3, 3],
        vec![4, 1, 2, 3, 4],
    ];
    let mul = vec![
        vec![0, 0, 0, 0, 0],
        vec![0, 1, 2, 3, 4],
        vec![0, 2, 2, 2, 4],
        vec![0, 3, 3, 3, 4],
        vec![0, 4, 4, 4, 4],
    ];
    let names = ["0", "1", "a", "b", "c"].map(String::from).to_vec();
    make_semiring(&add, &mul, 0, Some(1))
        .and_then(|s| s.with_names(names))
        .expect("hard-coded tables are valid")
}

/// `{0, 1}` with `1 + 1 = 1`.
pub fn boolean() -> Semiring {
    make_semiring(&[vec![0, 1], vec![1, 1]], &[vec![0, 0], vec![0, 1]], 0, Some(1)).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order5_example() {
        let s = example_order5();
        let n = |x: &str| s.index_of_name(x).unwrap();
        assert_eq!(s.add(n("a"), n("b")), n("b"));
        assert_eq!(s.mul(n("b"), n("c")), n("c"));
        assert_eq!(s.add(n("1"), n("1")), n("1"));
        assert_eq!(semiring_center(&s), vec![n("0"), n("1"), n("c")]);
        let c = is_commutative_semiring(&s);
        assert!(!c.holds);
        assert_eq!(c.witness, Witness::NonCommuting { a: el(n("a")), b: el(n("b")) });
        let ce = is_ce_semiring(&s);
        assert!(ce.holds);
        verify_semiring_certificate(&s, &ce).unwrap();
        let ss = is_semisubtractive(&s);
        assert!(ss.holds);
        verify_semiring_certificate(&s, &ss).unwrap();
    }

    #[test]
    fn validation_names_the_axiom() {
        let err = make_semiring(&[vec![0, 1], vec![1, 1]], &[vec![0, 1], vec![0, 1]], 0, None).unwrap_err();
        assert!(matches!(err, Error::Axiom { axiom: Axiom::ZeroAbsorbing, .. }));
        let err = make_semiring(&[vec![1, 1], vec![1, 1]], &[vec![0, 0], vec![0, 1]], 0, None).unwrap_err();
        assert!(matches!(err, Error::Axiom { axiom: Axiom::AdditiveIdentity, .. }));
        let err = make_semiring(&[vec![0, 1], vec![0, 1]], &[vec![0, 0], vec![0, 1]], 0, None).unwrap_err();
        assert!(matches!(err, Error::Axiom { axiom: Axiom::AdditiveCommutativity, .. }));
        assert!(is_semisubtractive(&boolean()).holds);
    }

    #[test]
    fn non_subtractive_table() {
        // 0, p, q with p + q = t absorbing: p and q cannot reach each other
        let add = vec![vec![0, 1, 2, 3], vec![1, 1, 3, 3], vec![2, 3, 2, 3], vec![3, 3, 3, 3]];
        let mul = vec![vec![0; 4]; 4];
        let s = make_semiring(&add, &mul, 0, None).unwrap();
        let c = is_semisubtractive(&s);
        assert!(!c.holds);
        assert_eq!(c.witness, Witness::NotSubtractive { a: el(1), b: el(2) });
        verify_semiring_certificate(&s, &c).unwrap();
    }

    #[test]
    fn serde_round_trip() {
        let s = example_order5();
        let json = serde_json::to_string(&s).unwrap();
        let back: Semiring = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        let broken = json.replace("[0,0,0,0,0]", "[1,0,0,0,0]");
        assert!(serde_json::from_str::<Semiring>(&broken).is_err());
    }
}

//! Decision procedures returning [`Certificate`]s.
//!
//! Searches visit elements in the canonical scan order: additive generators
//! (the basis, for structure rings) first, then all elements by index. The
//! first counterexample in that order is the one reported.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::center::center;
use crate::certificate::{Certificate, Mode, Multiplier, Property, Variant, Witness};
use crate::constructions::GroupRing;
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, is_nilpotent_subgroup, minimal_nonzero, nilpotency_index, IdealCap};
use crate::modarith::{divisors, left_kernel};
use crate::ring::{Element, ElementSet, Repr, Ring};
use crate::subgroup::{
    ideal_generated, require_ideal, right_ideal_generated, two_sided_ideal_generated, AdditiveSubgroup, Side,
};

/// Default element cap for exhaustive scans.
pub const DEFAULT_CAP: u64 = 65536;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "CERING_CAP";

/// [`DEFAULT_CAP`], or the value of `CERING_CAP` when it parses.
pub fn default_cap() -> u64 {
    std::env::var(CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

/// How far a search may go.
#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub mode: Mode,
    /// Exhaustive: largest ring accepted. Refutation: number of scan-order
    /// candidates examined after the targets.
    pub cap: u64,
    /// Elements tried first in refutation mode.
    pub targets: Vec<Element>,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig::exhaustive(default_cap())
    }
}

impl ScanConfig {
    pub fn exhaustive(cap: u64) -> Self {
        ScanConfig { mode: Mode::Exhaustive, cap, targets: Vec::new() }
    }

    pub fn refute(cap: u64) -> Self {
        ScanConfig { mode: Mode::Refutation, cap, targets: Vec::new() }
    }

    pub fn with_targets(mut self, targets: Vec<Element>) -> Self {
        self.targets = targets;
        self
    }
}

/// Additive generators first, then every element by index, up to `limit`
/// index-ordered elements.
pub fn scan_order(ring: &Ring, limit: u64) -> impl Iterator<Item = Element> + '_ {
    ring.gens().iter().cloned().chain((0..ring.order().min(limit)).map(move |i| ring.element_at(i)))
}

fn nonzero_scan(ring: &Ring) -> impl Iterator<Item = Element> + '_ {
    scan_order(ring, u64::MAX).filter(move |x| !ring.is_zero(x))
}

pub fn is_commutative(ring: &Ring) -> Certificate {
    let g = ring.gens().len() as u64;
    let examined = g * g.saturating_sub(1) / 2;
    match ring.noncommuting_generators() {
        None => Certificate::new(Property::Commutative, true, Mode::Exhaustive, Witness::Commutative, examined),
        Some((a, b)) => {
            Certificate::new(Property::Commutative, false, Mode::Exhaustive, Witness::NonCommuting { a, b }, examined)
        }
    }
}

/// Central-multiplier search state shared by both scan modes.
struct CeSearch<'r> {
    ring: &'r Ring,
    variant: Variant,
    center: AdditiveSubgroup,
    cset: ElementSet,
    scalars: Vec<u64>,
    fixed: Vec<Element>,
    dynamic: Vec<Element>,
    zero: Vec<u32>,
    modulus: Option<u64>,
    /// `scalar_tables[i][x] = scalars[i] * x mod n` for structure rings.
    scalar_tables: Vec<Vec<u32>>,
}

impl<'r> CeSearch<'r> {
    fn new(ring: &'r Ring, variant: Variant) -> Self {
        let center = center(ring);
        let cset = ElementSet::new(ring, center.elements());
        let ch = ring.characteristic();
        let scalars = if ring.is_unital() {
            divisors(ch).into_iter().rev().filter(|&d| d < ch).collect()
        } else {
            Vec::new()
        };
        let fixed = center.generators().iter().filter(|g| !ring.is_zero(g)).cloned().collect();
        let zero = ring.zero().0;
        let modulus = ring.as_structure().map(|s| s.modulus() as u64);
        let scalar_tables = match modulus {
            Some(n) if n <= 1 << 16 => {
                scalars.iter().map(|&d| (0..n).map(|x| (x * d % n) as u32).collect()).collect()
            }
            _ => Vec::new(),
        };
        CeSearch { ring, variant, center, cset, scalars, fixed, dynamic: Vec::new(), zero, modulus, scalar_tables }
    }

    fn needs_multiplier(&self, a: &[u32]) -> bool {
        a != self.zero.as_slice() && !(self.variant == Variant::Nonunital && self.cset.contains(self.ring, a))
    }

    /// [`Self::needs_multiplier`] when the canonical index is already known.
    #[inline]
    fn needs_multiplier_at(&self, idx: u64, a: &[u32]) -> bool {
        if idx == 0 && a == self.zero.as_slice() {
            return false;
        }
        if self.variant != Variant::Nonunital {
            return a != self.zero.as_slice();
        }
        match self.cset.contains_index(idx) {
            Some(central) => !central && a != self.zero.as_slice(),
            None => self.needs_multiplier(a),
        }
    }

    fn good(&self, p: &[u32]) -> bool {
        p != self.zero.as_slice() && self.cset.contains(self.ring, p)
    }

    /// Is `d a` (that is, `a (d·1)`) central and non-zero?
    #[inline]
    fn scalar_hit(&self, a: &[u32], d: u64, buf: &mut [u32]) -> bool {
        if let Some(n) = self.modulus {
            let mut idx = 0u64;
            let mut nonzero = false;
            for (o, &x) in buf.iter_mut().zip(a) {
                let v = x as u64 * d % n;
                nonzero |= v != 0;
                idx = idx * n + v;
                *o = v as u32;
            }
            return nonzero
                && self.cset.contains_index(idx).unwrap_or_else(|| self.cset.contains(self.ring, buf));
        }
        buf.copy_from_slice(&self.ring.scale(d, &Element(a.to_vec())).0);
        self.good(buf)
    }

    /// Covered by the fixed candidates (scalars, then center generators)?
    fn fixed_covers(&self, a: &[u32], buf: &mut [u32]) -> bool {
        let ring = self.ring;
        if let (Some(n), false) = (self.modulus, self.scalar_tables.is_empty()) {
            for table in &self.scalar_tables {
                let mut idx = 0u64;
                let mut nonzero = false;
                for &x in a {
                    let v = table[x as usize];
                    nonzero |= v != 0;
                    idx = idx * n + v as u64;
                }
                if nonzero {
                    let hit = match self.cset.contains_index(idx) {
                        Some(b) => b,
                        None => {
                            for (o, &x) in buf.iter_mut().zip(a) {
                                *o = table[x as usize];
                            }
                            self.cset.contains(ring, buf)
                        }
                    };
                    if hit {
                        return true;
                    }
                }
            }
        } else {
            for &d in &self.scalars {
                if self.scalar_hit(a, d, buf) {
                    return true;
                }
            }
        }
        self.fixed.iter().any(|c| {
            ring.mul_into(a, &c.0, buf);
            self.good(buf)
        })
    }

    fn dynamic_covers(&self, a: &[u32], buf: &mut [u32]) -> bool {
        self.dynamic.iter().any(|c| {
            self.ring.mul_into(a, &c.0, buf);
            self.good(buf)
        })
    }

    /// Some `c` in `C \ {0}` with `a c` in `C \ {0}`.
    fn find(&self, a: &Element) -> Option<Element> {
        if let Repr::Structure(sr) = self.ring.repr() {
            // {c in C : a c in C} is a subgroup; it suffices to test generators.
            let ring = self.ring;
            let n = sr.modulus();
            let gens = self.center.generators();
            let rows: Vec<Vec<u32>> = gens
                .iter()
                .map(|s| {
                    let p = ring.mul(a, s);
                    let mut row = Vec::with_capacity(ring.width() * ring.gens().len());
                    for e in ring.gens() {
                        row.extend(ring.commutator(&p, e).0);
                    }
                    row
                })
                .collect();
            for lambda in left_kernel(n, &rows) {
                let mut c = ring.zero();
                for (l, s) in lambda.iter().zip(gens) {
                    c = ring.add(&c, &ring.scale(*l as u64, s));
                }
                if !ring.is_zero(&ring.mul(a, &c)) {
                    return Some(c);
                }
            }
            return None;
        }
        let mut buf = vec![0; self.ring.width()];
        self.center.elements().iter().find(|c| {
            !self.ring.is_zero(c) && {
                self.ring.mul_into(&a.0, &c.0, &mut buf);
                self.good(&buf)
            }
        }).cloned()
    }

    /// Phase two for one element; `false` means `a` is a counterexample.
    fn settle(&mut self, a: &Element, buf: &mut [u32]) -> bool {
        if !self.needs_multiplier(&a.0) || self.fixed_covers(&a.0, buf) || self.dynamic_covers(&a.0, buf) {
            return true;
        }
        match self.find(a) {
            Some(c) => {
                self.dynamic.push(c);
                true
            }
            None => false,
        }
    }

    fn positive(self, examined: u64) -> Certificate {
        let mut schedule: Vec<Multiplier> = self.scalars.iter().map(|&d| Multiplier::Scalar(d)).collect();
        schedule.extend(self.fixed.into_iter().chain(self.dynamic).map(Multiplier::Element));
        Certificate::new(
            Property::CentrallyEssential { variant: self.variant },
            true,
            Mode::Exhaustive,
            Witness::CentralMultipliers { center_generators: self.center.generators().to_vec(), schedule },
            examined,
        )
    }

    fn negative(&self, a: Element, mode: Mode, examined: u64) -> Certificate {
        Certificate::new(
            Property::CentrallyEssential { variant: self.variant },
            false,
            mode,
            Witness::NoCentralMultiplier { a },
            examined,
        )
    }
}

/// Decide central essentiality.
///
/// Exhaustive mode needs `order <= cfg.cap`. Refutation mode tries
/// `cfg.targets`, then up to `cfg.cap` scan-order candidates, and returns
/// [`Error::Inconclusive`] when none fails before the whole ring was seen.
pub fn is_centrally_essential(ring: &Ring, variant: Variant, cfg: &ScanConfig) -> Result<Certificate> {
    if variant == Variant::Unital && !ring.is_unital() {
        return Err(Error::NotUnital);
    }
    let property = Property::CentrallyEssential { variant };
    if variant == Variant::Nonunital && ring.is_commutative() {
        let g = ring.gens().len() as u64;
        return Ok(Certificate::new(property, true, Mode::Exhaustive, Witness::Commutative, g * g));
    }
    if cfg.mode == Mode::Exhaustive {
        ring.require_order_at_most(cfg.cap, "centrally essential scan")?;
    }
    let mut search = CeSearch::new(ring, variant);
    let mut buf = vec![0u32; ring.width()];
    match cfg.mode {
        Mode::Exhaustive => {
            const CHUNK: u64 = 1 << 14;
            let order = ring.order();
            let width = ring.width();
            let search_ref = &search;
            let uncovered: Vec<u64> = (0..order.div_ceil(CHUNK))
                .into_par_iter()
                .flat_map_iter(|chunk| {
                    let mut out = Vec::new();
                    let mut b = vec![0u32; width];
                    ring.for_each_in_range(chunk * CHUNK, (chunk + 1) * CHUNK, |idx, a| {
                        if search_ref.needs_multiplier_at(idx, a) && !search_ref.fixed_covers(a, &mut b) {
                            out.push(idx);
                        }
                    });
                    out
                })
                .collect();
            let candidates = ring.gens().iter().cloned().chain(uncovered.iter().map(|&i| ring.element_at(i)));
            for a in candidates {
                if !search.settle(&a, &mut buf) {
                    return Ok(search.negative(a, Mode::Exhaustive, order));
                }
            }
            Ok(search.positive(order))
        }
        Mode::Refutation => {
            let mut examined = 0;
            for t in &cfg.targets {
                if !ring.contains(t) {
                    return Err(Error::NotAnElement(t.0.clone()));
                }
            }
            let scan = cfg.targets.iter().cloned().chain(scan_order(ring, cfg.cap));
            for a in scan {
                examined += 1;
                if !search.settle(&a, &mut buf) {
                    return Ok(search.negative(a, Mode::Refutation, examined));
                }
            }
            if cfg.cap >= ring.order() {
                Ok(search.positive(ring.order()))
            } else {
                Err(Error::Inconclusive(examined))
            }
        }
    }
}

/// Is the right ideal `ideal` essential? Reduced to principal right ideals.
pub fn is_essential_right_ideal(ring: &Ring, ideal: &AdditiveSubgroup, cap: u64) -> Result<Certificate> {
    require_ideal(ideal, Side::Right)?;
    ring.require_order_at_most(cap, "essential right ideal scan")?;
    let property = Property::EssentialRightIdeal { generators: ideal.generators().to_vec() };
    let mut examined = 0;
    for a in nonzero_scan(ring) {
        examined += 1;
        if ideal.contains(&a) {
            continue;
        }
        if right_ideal_generated(ring, std::slice::from_ref(&a)).meets(ring, ideal).is_none() {
            return Ok(Certificate::new(property, false, Mode::Exhaustive, Witness::PrincipalMiss { a }, examined));
        }
    }
    Ok(Certificate::new(property, true, Mode::Exhaustive, Witness::Exhausted, examined))
}

/// No non-zero ideal squares to zero. The ideal generated by `a` squares
/// to zero iff `a^2 = 0` and `a g a = 0` for every additive generator `g`.
pub fn is_semiprime(ring: &Ring, cap: u64) -> Result<Certificate> {
    ring.require_order_at_most(cap, "semiprime scan")?;
    let mut examined = 0;
    for a in nonzero_scan(ring) {
        examined += 1;
        if !ring.is_zero(&ring.mul(&a, &a)) {
            continue;
        }
        if ring.gens().iter().all(|g| ring.is_zero(&ring.mul(&ring.mul(&a, g), &a))) {
            return Ok(Certificate::new(Property::Semiprime, false, Mode::Exhaustive, Witness::SquareZeroIdeal { a }, examined));
        }
    }
    Ok(Certificate::new(Property::Semiprime, true, Mode::Exhaustive, Witness::Exhausted, examined))
}

pub fn is_reduced(ring: &Ring, cap: u64) -> Result<Certificate> {
    ring.require_order_at_most(cap, "reduced scan")?;
    let mut examined = 0;
    for a in nonzero_scan(ring) {
        examined += 1;
        if let Some(index) = nilpotency_index(ring, &a) {
            return Ok(Certificate::new(Property::Reduced, false, Mode::Exhaustive, Witness::Nilpotent { a, index }, examined));
        }
    }
    Ok(Certificate::new(Property::Reduced, true, Mode::Exhaustive, Witness::Exhausted, examined))
}

/// Is `ring` a rational extension of its center (as a module over the center)?
///
/// For each `x` the admissible pairs `(c, n)` with `xc + nx` central form a
/// subgroup, so `y` fails iff `yc + ny = 0` on a generating set of pairs.
/// Central `x` always admit `(0, 1)`.
pub fn is_centrally_rational(ring: &Ring, cap: u64) -> Result<Certificate> {
    ring.require_order_at_most(cap, "centrally rational scan")?;
    let c = center(ring);
    let cset = ElementSet::new(ring, c.elements());
    let ch = ring.characteristic();
    let mut examined = 0;
    for x in scan_order(ring, u64::MAX) {
        examined += 1;
        if cset.contains(ring, &x.0) {
            continue;
        }
        let mut pairs: Vec<(Element, u64)> = Vec::new();
        for k in 0..ch {
            let kx = ring.scale(k, &x);
            for z in c.elements() {
                if cset.contains(ring, &ring.add(&ring.mul(&x, z), &kx).0) {
                    pairs.push((z.clone(), k));
                }
            }
        }
        let gens = pair_generators(ring, ch, &pairs);
        for y in nonzero_scan(ring) {
            let zero_everywhere = gens.iter().all(|(z, k)| ring.is_zero(&ring.add(&ring.mul(&y, z), &ring.scale(*k, &y))));
            if zero_everywhere {
                return Ok(Certificate::new(
                    Property::CentrallyRational,
                    false,
                    Mode::Exhaustive,
                    Witness::NotRational { x, y },
                    examined,
                ));
            }
        }
    }
    Ok(Certificate::new(Property::CentrallyRational, true, Mode::Exhaustive, Witness::Exhausted, examined))
}

/// Greedy generating set of a subgroup of `C x Z_ch` given by all its members.
fn pair_generators(ring: &Ring, ch: u64, pairs: &[(Element, u64)]) -> Vec<(Element, u64)> {
    let mut span: HashSet<(Element, u64)> = HashSet::from([(ring.zero(), 0)]);
    let mut gens = Vec::new();
    for p in pairs {
        if span.contains(p) {
            continue;
        }
        gens.push(p.clone());
        let mut frontier: Vec<(Element, u64)> = span.iter().cloned().collect();
        while let Some((z, k)) = frontier.pop() {
            let next = (ring.add(&z, &p.0), (k + p.1) % ch);
            if span.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    gens
}

/// Every non-zero right (left, or both) ideal contains a non-zero ideal.
/// Principal one-sided ideals are tested against the minimal two-sided ideals.
pub fn is_strongly_bounded(ring: &Ring, side: Side, cap: u64) -> Result<Certificate> {
    ring.require_order_at_most(cap, "strongly bounded scan")?;
    let property = Property::StronglyBounded { side };
    let mut principal: HashMap<Vec<Element>, AdditiveSubgroup> = HashMap::new();
    for x in nonzero_scan(ring) {
        let t = two_sided_ideal_generated(ring, std::slice::from_ref(&x));
        principal.entry(t.elements().to_vec()).or_insert(t);
    }
    let mut list: Vec<AdditiveSubgroup> = principal.into_values().collect();
    list.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.elements().cmp(b.elements())));
    let minimal = minimal_nonzero(&list);
    let sides: &[Side] = match side {
        Side::TwoSided => &[Side::Right, Side::Left],
        Side::Right => &[Side::Right],
        Side::Left => &[Side::Left],
    };
    let mut examined = 0;
    for a in nonzero_scan(ring) {
        examined += 1;
        for &s in sides {
            let p = ideal_generated(ring, std::slice::from_ref(&a), s);
            if !minimal.iter().any(|m| m.is_subset_of(&p)) {
                return Ok(Certificate::new(property, false, Mode::Exhaustive, Witness::NoIdealInside { a }, examined));
            }
        }
    }
    Ok(Certificate::new(property, true, Mode::Exhaustive, Witness::Exhausted, examined))
}

/// A minimal non-zero right ideal with its classification.
#[derive(Debug, Clone)]
pub struct MinimalRightIdeal {
    pub ideal: AdditiveSubgroup,
    pub nilpotent: bool,
    pub two_sided: bool,
    pub central: bool,
    /// For non-nilpotent ideals: a central idempotent `e` with `I = eR`.
    pub idempotent: Option<Element>,
}

pub fn minimal_right_ideals(ring: &Ring, cap: IdealCap) -> Result<Vec<MinimalRightIdeal>> {
    let all = all_ideals(ring, Side::Right, cap)?;
    let c = center(ring);
    let mut out = Vec::new();
    for ideal in minimal_nonzero(&all) {
        let ideal = ideal.with_flags_verified(ring);
        let nilpotent = is_nilpotent_subgroup(ring, &ideal)?;
        let central = ideal.is_subset_of(&c);
        let idempotent = if nilpotent {
            None
        } else {
            ideal
                .elements()
                .iter()
                .find(|e| {
                    !ring.is_zero(e)
                        && &ring.mul(e, e) == *e
                        && c.contains(e)
                        && {
                            let er: HashSet<Element> = ring.elements().map(|r| ring.mul(e, &r)).collect();
                            er.len() == ideal.len() && ideal.elements().iter().all(|x| er.contains(x))
                        }
                })
                .cloned()
        };
        out.push(MinimalRightIdeal { two_sided: ideal.is_two_sided(), ideal, nilpotent, central, idempotent });
    }
    Ok(out)
}

/// Brute-force scan of the center in canonical order for `c != 0` with
/// `x c` central and non-zero. Returns `(c, x c)`.
pub fn find_central_multiplier(ring: &Ring, x: &Element) -> Result<Option<(Element, Element)>> {
    if !ring.contains(x) {
        return Err(Error::NotAnElement(x.0.clone()));
    }
    if ring.is_zero(x) {
        return Err(Error::ZeroElement);
    }
    let c = center(ring);
    Ok(c.elements().iter().filter(|z| !ring.is_zero(z)).find_map(|z| {
        let y = ring.mul(x, z);
        (!ring.is_zero(&y) && c.contains(&y)).then(|| (z.clone(), y))
    }))
}

/// Output of the constructive procedure for `RQ_8` in characteristic 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierTrace {
    /// Factors `1 - z` used, in order.
    pub factors: Vec<Element>,
    /// Their product, or `1` when no factor was needed.
    pub c: Element,
    /// `x c`, central and non-zero.
    pub y: Element,
}

/// Is `group` the quaternion group (order 8, non-abelian, one involution)?
pub fn is_q8(group: &crate::group::GroupTable) -> bool {
    group.order() == 8
        && !group.is_abelian()
        && (0..8).filter(|&g| g != group.identity() && group.mul(g, g) == group.identity()).count() == 1
}

/// Multiply `x` by `1 - z` (`z` central in `Q_8`, `z != e`) while the
/// product stays non-zero; the last non-zero product kills the fundamental
/// ideal of the group center and is central.
///
/// Requires `G = Q_8` and a commutative coefficient ring of characteristic 2.
pub fn constructive_multiplier(gr: &GroupRing, x: &Element) -> Result<Option<MultiplierTrace>> {
    let ring = gr.ring();
    if !is_q8(gr.group()) {
        return Err(Error::Unsupported("constructive multiplier needs the group Q8".into()));
    }
    if gr.coeff().characteristic() != 2 || !gr.coeff().is_commutative() {
        return Err(Error::Unsupported("constructive multiplier needs a commutative coefficient ring of characteristic 2".into()));
    }
    if !ring.contains(x) {
        return Err(Error::NotAnElement(x.0.clone()));
    }
    if ring.is_zero(x) {
        return Err(Error::ZeroElement);
    }
    let one = ring.one().ok_or(Error::NotUnital)?.clone();
    let group = gr.group();
    let factors_available: Vec<Element> = group
        .center()
        .iter()
        .filter(|&&z| z != group.identity())
        .map(|&z| Ok(ring.sub(&one, &gr.group_element(z)?)))
        .collect::<Result<_>>()?;
    let mut current = x.clone();
    let mut factors = Vec::new();
    let mut c = one;
    // Each step multiplies by an element of a nilpotent ideal, so this ends.
    for _ in 0..=ring.order() {
        let next = factors_available
            .iter()
            .map(|u| (u, ring.mul(&current, u)))
            .find(|(_, p)| !ring.is_zero(p));
        match next {
            Some((u, p)) => {
                factors.push(u.clone());
                c = ring.mul(&c, u);
                current = p;
            }
            None => break,
        }
    }
    Ok(ring.is_central(&current).then_some(MultiplierTrace { factors, c, y: current }))
}

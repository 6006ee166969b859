//! Finite modules over a commutative ring, carried by the additive group of
//! a ring on which the scalars act through central images.

use crate::certificate::{Certificate, Mode, Property, Rejected, Witness};
use crate::constructions::Quaternion;
use crate::error::{Error, Result};
use crate::ideals::{all_ideals, IdealCap};
use crate::ring::{Element, ElementSet, Ring};
use crate::subgroup::{additive_closure, AdditiveSubgroup, Side};

/// A module `M` over a commutative ring `A`: `M` is the additive group of
/// `carrier`, and `t` in `A` acts as right multiplication by `images[t]`.
#[derive(Debug, Clone)]
pub struct Module {
    base: Ring,
    carrier: Ring,
    images: Vec<Element>,
}

impl Module {
    /// `A` as a module over itself.
    pub fn regular(base: &Ring) -> Result<Module> {
        if !base.is_commutative() {
            return Err(Error::NotCommutative);
        }
        base.require_order_at_most(1 << 16, "module scalars")?;
        Ok(Module { base: base.clone(), carrier: base.clone(), images: base.elements().collect() })
    }

    /// The quaternion algebra `(a, b, A)` as an `A`-module.
    pub fn quaternion(q: &Quaternion) -> Result<Module> {
        q.params.base.require_order_at_most(1 << 16, "module scalars")?;
        Ok(Module { base: q.params.base.clone(), carrier: q.ring.clone(), images: q.scalar_images() })
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn carrier(&self) -> &Ring {
        &self.carrier
    }

    /// `m t`, with `t` given by its canonical index in the base ring.
    pub fn act(&self, m: &Element, t: usize) -> Element {
        self.carrier.mul(m, &self.images[t])
    }

    pub fn is_submodule(&self, sub: &AdditiveSubgroup) -> bool {
        sub.generators().iter().all(|g| self.images.iter().all(|s| sub.contains(&self.carrier.mul(g, s))))
    }

    /// Submodule generated by `seed`.
    pub fn span(&self, seed: &[Element]) -> AdditiveSubgroup {
        let mut gens: Vec<Element> = seed.to_vec();
        for m in seed {
            gens.extend(self.images.iter().map(|s| self.carrier.mul(m, s)));
        }
        additive_closure(&self.carrier, &gens)
    }

    /// `Am + Zm`.
    pub fn cyclic(&self, m: &Element) -> AdditiveSubgroup {
        self.span(std::slice::from_ref(m))
    }

    /// Every submodule of `A` (the ideals of the commutative ring `A`).
    pub fn base_submodules(&self) -> Result<Vec<AdditiveSubgroup>> {
        all_ideals(&self.base, Side::TwoSided, IdealCap::with_order(1 << 12))
    }
}

/// Is `sub` essential in `module`? Reduced to cyclic submodules: every
/// non-zero `m` needs `(Am + Zm) ∩ sub != 0`.
pub fn is_essential_submodule(module: &Module, sub: &AdditiveSubgroup) -> Result<Certificate> {
    if !module.is_submodule(sub) {
        return Err(Error::NotAnIdeal { side: "module" });
    }
    let carrier = &module.carrier;
    let property = Property::EssentialSubmodule { generators: sub.generators().to_vec() };
    let set = ElementSet::new(carrier, sub.elements());
    let mut examined = 0;
    for m in carrier.elements() {
        if carrier.is_zero(&m) {
            continue;
        }
        examined += 1;
        if set.contains(carrier, &m.0) {
            continue;
        }
        let hit = module
            .cyclic(&m)
            .elements()
            .iter()
            .any(|x| !carrier.is_zero(x) && set.contains(carrier, &x.0));
        if !hit {
            return Ok(Certificate::new(property, false, Mode::Exhaustive, Witness::PrincipalMiss { a: m }, examined));
        }
    }
    Ok(Certificate::new(property, true, Mode::Exhaustive, Witness::Exhausted, examined))
}

/// Re-check an essential-submodule certificate by listing `{m t + k m}` directly.
pub fn verify_module_certificate(module: &Module, cert: &Certificate) -> std::result::Result<(), Rejected> {
    let Property::EssentialSubmodule { generators } = &cert.property else {
        return Err(Rejected("not an essential-submodule certificate".into()));
    };
    let carrier = &module.carrier;
    let sub = additive_closure(carrier, generators);
    let meets = |m: &Element| {
        let ch = carrier.additive_order(m);
        module.images.iter().any(|s| {
            let ms = carrier.mul(m, s);
            (0..ch).any(|k| {
                let x = carrier.add(&ms, &carrier.scale(k, m));
                !carrier.is_zero(&x) && sub.contains(&x)
            })
        }) || (1..ch).any(|k| sub.contains(&carrier.scale(k, m)))
    };
    match (&cert.witness, cert.holds) {
        (Witness::PrincipalMiss { a }, false) => {
            if carrier.is_zero(a) || meets(a) {
                return Err(Rejected("the cyclic submodule of the witness meets the submodule".into()));
            }
            Ok(())
        }
        (Witness::Exhausted, true) => match carrier.elements().find(|m| !carrier.is_zero(m) && !meets(m)) {
            Some(m) => Err(Rejected(format!("{m:?} generates a submodule missing the candidate"))),
            None => Ok(()),
        },
        _ => Err(Rejected("witness does not match verdict".into())),
    }
}

/// Outcome of the direct-sum essentiality check on a quaternion module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectSumReport {
    /// Tuples `(N_0, .., N_3)` with every `N_u` essential in `A u`.
    pub essential_tuples: usize,
    /// Tuples with some `N_u` not essential (negative controls).
    pub control_tuples: usize,
    /// Tuples where the sum's essentiality differs from the componentwise prediction.
    pub violations: Vec<Vec<usize>>,
}

/// For `M = A·1 ⊕ A·i ⊕ A·j ⊕ A·k` and every choice of submodules
/// `N_u ≤ A·u`, compare "`⊕ N_u` essential in `M`" (by exhaustion) with
/// "every `N_u` essential in `A·u`".
pub fn direct_sum_check(q: &Quaternion) -> Result<DirectSumReport> {
    let module = Module::quaternion(q)?;
    let regular = Module::regular(&q.params.base)?;
    let subs = regular.base_submodules()?;
    let essential: Vec<bool> = subs
        .iter()
        .map(|n| is_essential_submodule(&regular, n).map(|c| c.holds))
        .collect::<Result<_>>()?;
    let k = subs.len();
    let mut report = DirectSumReport { essential_tuples: 0, control_tuples: 0, violations: Vec::new() };
    for code in 0..k.pow(4) {
        let choice: Vec<usize> = (0..4).map(|u| code / k.pow(u as u32) % k).collect();
        let predicted = choice.iter().all(|&c| essential[c]);
        let gens: Vec<Element> = choice
            .iter()
            .enumerate()
            .flat_map(|(u, &c)| subs[c].generators().iter().map(move |t| q.embed(t, u)).collect::<Vec<_>>())
            .collect();
        let sum = additive_closure(&q.ring, &gens);
        let actual = is_essential_submodule(&module, &sum)?.holds;
        if predicted {
            report.essential_tuples += 1;
        } else {
            report.control_tuples += 1;
        }
        if actual != predicted {
            report.violations.push(choice);
        }
    }
    Ok(report)
}

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{module_basis, IntModuleBasis, Isometry, Lattice, Rat, SignedPerm, Vec3};

use super::family::{build_group, FamilyId, GroupPresentation, Letter, Word};
use super::quotient::{quotient_mod, ALPHABET};
use super::special::{special_group_closure, SpecialGroup};

/// Greatest common divisor of two rationals: the largest `g > 0` with
/// `x/g` and `y/g` integers. Zero when both vanish.
pub fn rat_gcd(x: &Rat, y: &Rat) -> Rat {
    let den = x.denom().lcm(y.denom());
    let xn = (x * &Rat::from_bigint(den.clone())).to_integer().unwrap();
    let yn = (y * &Rat::from_bigint(den.clone())).to_integer().unwrap();
    Rat::from_big(xn.gcd(&yn), den)
}

/// The translation subgroup asserted for a family, or `None` where none is
/// asserted (`P66` and the special cases).
pub fn claimed_translation_lattice(family: FamilyId, params: &(Rat, Rat)) -> Option<Lattice> {
    let (p, q) = params;
    match family {
        FamilyId::P1 => Some(Lattice::bcc(q - p)),
        FamilyId::P2 => Some(Lattice::z3(p * &Rat::int(4))),
        FamilyId::P3 => Some(Lattice::bcc(q.clone())),
        FamilyId::Q46 => Some(Lattice::fcc(&rat_gcd(p, q) * &Rat::int(2))),
        _ => None,
    }
}

/// The special group `G₀` of the linear parts.
pub fn special_group(g: &GroupPresentation) -> SpecialGroup {
    special_group_closure(&[g.s1.linear, g.s2.linear])
}

/// A shortest word and its isometry for each linear part in `G₀`.
pub fn transversal(g: &GroupPresentation) -> BTreeMap<SignedPerm, (Word, Isometry)> {
    let mut out = BTreeMap::from([(SignedPerm::IDENTITY, (Word::default(), Isometry::identity()))]);
    let mut queue = VecDeque::from([SignedPerm::IDENTITY]);
    while let Some(m) = queue.pop_front() {
        let (word, h) = out[&m].clone();
        for l in ALPHABET {
            let next = h.then(&g.letter(l));
            if let std::collections::btree_map::Entry::Vacant(e) = out.entry(next.linear) {
                let mut w = word.clone();
                w.0.push(l);
                queue.push_back(next.linear);
                e.insert((w, next));
            }
        }
    }
    out
}

/// The translation subgroup computed from Schreier generators of the kernel
/// of `G → G₀`.
#[derive(Clone, Debug)]
pub struct DiscoveredTranslations {
    pub generators: Vec<(Word, Vec3)>,
    pub basis: IntModuleBasis,
    pub lattice: Option<Lattice>,
}

pub fn discover_translation_group(g: &GroupPresentation) -> DiscoveredTranslations {
    let reps = transversal(g);
    let mut generators = Vec::new();
    for (word, h) in reps.values() {
        for l in ALPHABET {
            let x = h.then(&g.letter(l));
            let (back_word, back) = &reps[&x.linear];
            let s = x.then(&back.inverse());
            debug_assert!(s.is_translation());
            if !s.trans.is_zero() {
                let mut w = word.clone();
                w.0.push(l);
                generators.push((w.concat(&back_word.inverse()), s.trans));
            }
        }
    }
    let vectors: Vec<Vec3> = generators.iter().map(|(_, v)| v.clone()).collect();
    let basis = module_basis(&vectors);
    let lattice = Lattice::recognize(&basis);
    DiscoveredTranslations {
        generators,
        basis,
        lattice,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessWord {
    pub word: String,
    pub translation: Vec3,
}

#[derive(Clone, Debug, Serialize)]
pub struct TranslationReport {
    pub family: FamilyId,
    pub params: (Rat, Rat),
    pub claimed: Option<Lattice>,
    /// The lattice found from Schreier generators, if it is cubic.
    pub discovered: Option<Lattice>,
    pub discovered_basis: Vec<Vec3>,
    pub special_group: String,
    pub special_order: usize,
    pub quotient_order: Option<usize>,
    pub quotient_depth: Option<usize>,
    /// `G`-conjugates of the twist `S₁^p` and their translations.
    pub witnesses: Vec<WitnessWord>,
    pub witnesses_generate_claim: bool,
    pub verified: bool,
}

/// Conjugates `g⁻¹·S₁^p·g` of the twist by the transversal, where `p` is
/// the order of the linear part of `S₁`.
fn twist_conjugates(g: &GroupPresentation) -> Vec<(Word, Isometry)> {
    let p = g.s1.linear.order();
    let twist = g.s1.pow(p as i64);
    let twist_word = Word::power(Letter::S1, p);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for (w, h) in transversal(g).values() {
        let c = twist.conjugate_by(h);
        if seen.insert(c.trans.clone()) {
            out.push((w.inverse().concat(&twist_word).concat(w), c));
        }
    }
    out
}

/// Certifies the translation subgroup of a family member: the coset
/// enumeration modulo the claimed lattice must close on exactly `|G₀|`
/// cosets with no stray translation, and the Schreier generators must span
/// exactly the claimed lattice.
pub fn verify_translation_lattice(
    family: FamilyId,
    params: (Rat, Rat),
    word_bound: usize,
) -> Result<TranslationReport> {
    let g = build_group(family, params.clone())?;
    let g0 = special_group(&g);
    let discovered = discover_translation_group(&g);
    let claimed = claimed_translation_lattice(family, &g.params);
    let witnesses: Vec<WitnessWord> = twist_conjugates(&g)
        .into_iter()
        .filter(|(_, c)| !c.trans.is_zero())
        .map(|(w, c)| WitnessWord {
            word: w.to_string(),
            translation: c.trans,
        })
        .collect();
    let mut report = TranslationReport {
        family,
        params: g.params.clone(),
        claimed: claimed.clone(),
        discovered: discovered.lattice.clone(),
        discovered_basis: discovered.basis.rows.clone(),
        special_group: g0.name.to_string(),
        special_order: g0.order(),
        quotient_order: None,
        quotient_depth: None,
        witnesses_generate_claim: false,
        witnesses: witnesses.clone(),
        verified: false,
    };
    let Some(claim) = claimed else {
        // Nothing asserted: report what was found.
        report.verified = discovered.lattice.is_some();
        return Ok(report);
    };
    let q = quotient_mod(&g, &claim, word_bound)?;
    report.quotient_order = Some(q.order());
    report.quotient_depth = Some(q.depth);
    if let Some(&i) = q.stray_translations().first() {
        return Err(Error::Refuted {
            reason: format!("translation outside {claim}"),
            witness: format!("{} -> {}", q.elements[i].word, q.elements[i].trans),
        });
    }
    if q.order() != g0.order() {
        return Err(Error::Refuted {
            reason: format!("{} cosets modulo {claim}, expected {}", q.order(), g0.order()),
            witness: "coset count".into(),
        });
    }
    let claim_basis = claim.basis();
    if discovered.basis.rows != claim_basis.rows {
        let missing = claim_basis.rows.iter().find(|v| !discovered.basis.contains(v));
        return Err(Error::Refuted {
            reason: format!("translation subgroup is not {claim}"),
            witness: match missing {
                Some(v) => format!("{v} is not a translation of the group"),
                None => "group translations form a larger module".into(),
            },
        });
    }
    let witness_vectors: Vec<Vec3> = witnesses.iter().map(|w| w.translation.clone()).collect();
    report.witnesses_generate_claim = module_basis(&witness_vectors).rows == claim_basis.rows;
    report.verified = true;
    Ok(report)
}

/// Index of the sublattice `sub` in `sup`, when both have full rank.
pub fn lattice_index(sub: &IntModuleBasis, sup: &IntModuleBasis) -> Option<BigInt> {
    let ratio = &sub.covolume()? / &sup.covolume()?;
    let n = ratio.to_integer()?;
    (n > BigInt::zero() && sub.rows.iter().all(|v| sup.contains(v))).then_some(n)
}

//! Mixing operations on generator pairs: duality δ, facetting φ₂ and
//! halving η.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{solve_affine, Isometry, Rat, SignedPerm};
use crate::group::{build_group, embeds_into, FamilyId, GroupPresentation, Letter, SpecialGroup, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum MixOp {
    Delta,
    Phi2,
    Eta,
}

impl fmt::Display for MixOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MixOp::Delta => "delta",
            MixOp::Phi2 => "phi2",
            MixOp::Eta => "eta",
        })
    }
}

/// A new generator pair, each generator given as a word in the source
/// generators and as an isometry.
#[derive(Clone, Debug, Serialize)]
pub struct MixedPair {
    pub source: FamilyId,
    pub params: (Rat, Rat),
    pub op: MixOp,
    pub words: (String, String),
    pub s1: Isometry,
    pub s2: Isometry,
}

impl MixedPair {
    fn from_words(g: &GroupPresentation, op: MixOp, w1: Word, w2: Word) -> MixedPair {
        MixedPair {
            source: g.family,
            params: g.params.clone(),
            op,
            s1: g.eval(&w1),
            s2: g.eval(&w2),
            words: (w1.to_string(), w2.to_string()),
        }
    }

    /// The pair as a presentation labelled with the source family.
    pub fn presentation(&self) -> GroupPresentation {
        GroupPresentation::from_pair(self.source, self.params.clone(), self.s1.clone(), self.s2.clone())
    }
}

/// `δ: (S₁, S₂) ↦ (S₂⁻¹, S₁⁻¹)`.
pub fn apply_delta(g: &GroupPresentation) -> MixedPair {
    MixedPair::from_words(
        g,
        MixOp::Delta,
        Word::new(&[Letter::S2Inv]),
        Word::new(&[Letter::S1Inv]),
    )
}

/// `δ` applied to an arbitrary pair.
pub fn delta_pair(s1: &Isometry, s2: &Isometry) -> (Isometry, Isometry) {
    (s2.inverse(), s1.inverse())
}

/// `φ₂: (S₁, S₂) ↦ (S₁S₂⁻¹, S₂²)`, defined on `P66` and `Q46`.
pub fn apply_phi2(g: &GroupPresentation) -> Result<MixedPair> {
    match g.family {
        FamilyId::P66 | FamilyId::Q46 => Ok(MixedPair::from_words(
            g,
            MixOp::Phi2,
            Word::new(&[Letter::S1, Letter::S2Inv]),
            Word::power(Letter::S2, 2),
        )),
        f => Err(Error::UnsupportedSource {
            op: "phi2".into(),
            family: f.to_string(),
        }),
    }
}

/// The family whose generators `φ₂` is expected to reproduce exactly.
pub fn phi2_target(family: FamilyId) -> Option<FamilyId> {
    match family {
        FamilyId::P66 => Some(FamilyId::P1),
        FamilyId::Q46 => Some(FamilyId::P2),
        _ => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Phi2Check {
    pub pair: MixedPair,
    pub target: FamilyId,
    pub equal: bool,
}

/// Compares `φ₂` of a source member with the generators of the target
/// family at the same parameters.
pub fn verify_phi2(family: FamilyId, params: (Rat, Rat)) -> Result<Phi2Check> {
    let g = build_group(family, params.clone())?;
    let pair = apply_phi2(&g)?;
    let target = phi2_target(family).expect("phi2 source");
    let h = build_group(target, params)?;
    let equal = pair.s1 == h.s1 && pair.s2 == h.s2;
    Ok(Phi2Check { pair, target, equal })
}

/// `η: (S₁, S₂) ↦ (S₁²S₂, S₂⁻¹)`, defined on `Q46`.
pub fn apply_eta(g: &GroupPresentation) -> Result<MixedPair> {
    match g.family {
        FamilyId::Q46 => Ok(MixedPair::from_words(
            g,
            MixOp::Eta,
            Word::new(&[Letter::S1, Letter::S1, Letter::S2]),
            Word::new(&[Letter::S2Inv]),
        )),
        f => Err(Error::UnsupportedSource {
            op: "eta".into(),
            family: f.to_string(),
        }),
    }
}

/// An isometry `X` with linear part a signed permutation such that
/// `X⁻¹·a·X = b` for both pairs of generators.
pub fn conjugating_isometry(a: (&Isometry, &Isometry), b: (&Isometry, &Isometry)) -> Option<Isometry> {
    SignedPerm::all().into_iter().find_map(|m| {
        let mut equations = Vec::new();
        for (x, y) in [(a.0, b.0), (a.1, b.1)] {
            let lin = m.inverse().then(&x.linear).then(&m);
            if lin != y.linear {
                return None;
            }
            // x ↦ x·B − t·B + a·M + t, so t·(I − B) = b − a·M.
            let rhs = &y.trans - &m.apply(&x.trans);
            let bm = lin.matrix();
            for j in 0..3 {
                let row = [0, 1, 2].map(|i| {
                    let delta = if i == j { Rat::one() } else { Rat::zero() };
                    delta - &bm[i][j]
                });
                equations.push((row, rhs.0[j].clone()));
            }
        }
        let (t, _) = solve_affine(&equations)?;
        let x = Isometry::new(m, t);
        debug_assert!(a.0.conjugate_by(&x) == *b.0 && a.1.conjugate_by(&x) == *b.1);
        Some(x)
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EtaCheck {
    pub pair: MixedPair,
    pub target_params: (Rat, Rat),
    pub conjugator: Option<Isometry>,
    /// Whether the conjugation lands on the enantiomorphic pair
    /// `(S₁S₂², S₂⁻¹)` of the target.
    pub mirrored: bool,
}

/// Searches for a conjugation taking `η` of `Q46(c,d)` onto the generators
/// of `P66(c−d, c+d)` or onto their enantiomorphic pair.
pub fn verify_eta(params: (Rat, Rat)) -> Result<EtaCheck> {
    let g = build_group(FamilyId::Q46, params.clone())?;
    let pair = apply_eta(&g)?;
    let (c, d) = &params;
    let target_params = (c - d, c + d);
    let h = build_group(FamilyId::P66, target_params.clone())?;
    let direct = conjugating_isometry((&pair.s1, &pair.s2), (&h.s1, &h.s2));
    let (conjugator, mirrored) = match direct {
        Some(x) => (Some(x), false),
        None => {
            let m1 = h.s1.then(&h.s2).then(&h.s2);
            let m2 = h.s2.inverse();
            (conjugating_isometry((&pair.s1, &pair.s2), (&m1, &m2)), true)
        }
    };
    Ok(EtaCheck {
        pair,
        target_params,
        conjugator,
        mirrored,
    })
}

/// Whether `h` is isomorphic to a subgroup of `g`. A negative answer rules
/// out any mixing operation producing a group with special group `h` from
/// one with special group `g`.
pub fn subgroup_obstruction(h: &SpecialGroup, g: &SpecialGroup) -> bool {
    embeds_into(h, g)
}

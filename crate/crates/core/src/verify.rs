//! Grid verification of the structural statements about each family, one
//! outcome per parameter point.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    covering_quotient, enantiomorph, expected_cover, face_translation_classes, handedness, verify_named_regular,
    vertex_star_catalog, Handedness,
};
use crate::error::{Error, Result};
use crate::geometry::{CosetCanon, Rat, Vec3};
use crate::group::{build_group, finite_fixed_point, verify_translation_lattice, word_bound, FamilyId};
use crate::mixing::{verify_eta, verify_phi2};
use crate::wythoff::{base_face, construct_patch, OrbitData};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Lemma {
    TranslationLattice,
    VertexCosets,
    Stars,
    FaceClasses,
    Phi2,
    Eta,
    Covering,
    NamedRegular,
    Enantiomorph,
}

impl Lemma {
    pub const ALL: [Lemma; 9] = [
        Lemma::TranslationLattice,
        Lemma::VertexCosets,
        Lemma::Stars,
        Lemma::FaceClasses,
        Lemma::Phi2,
        Lemma::Eta,
        Lemma::Covering,
        Lemma::NamedRegular,
        Lemma::Enantiomorph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::TranslationLattice => "translation-lattice",
            Lemma::VertexCosets => "vertex-cosets",
            Lemma::Stars => "stars",
            Lemma::FaceClasses => "face-classes",
            Lemma::Phi2 => "phi2",
            Lemma::Eta => "eta",
            Lemma::Covering => "covering",
            Lemma::NamedRegular => "named-regular",
            Lemma::Enantiomorph => "enantiomorph",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Lemma> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown lemma {s:?}")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "lowercase")]
pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointResult {
    pub family: FamilyId,
    pub params: (Rat, Rat),
    pub outcome: Outcome,
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

/// Number of translation classes of vertices predicted by the closed-form
/// conditions on the parameters.
pub fn expected_vertex_classes(family: FamilyId, params: &(Rat, Rat)) -> Option<usize> {
    let (p, q) = params;
    match family {
        FamilyId::P1 => Some(4),
        FamilyId::P2 => {
            let k = (!p.is_zero()).then(|| q / p);
            let collapsed = k.and_then(|k| k.to_integer()).is_some_and(|k| {
                use num_integer::Integer;
                k.mod_floor(&4.into()) == 2.into()
            });
            Some(if collapsed { 4 } else { 8 })
        }
        FamilyId::P3 => {
            if q.is_zero() {
                return Some(6);
            }
            match (p / q).to_integer() {
                None => Some(6),
                Some(k) if k.bit(0) => Some(1),
                Some(_) => Some(3),
            }
        }
        _ => None,
    }
}

/// Number of translation classes of faces predicted for infinite members.
pub fn expected_face_classes(family: FamilyId, params: &(Rat, Rat)) -> Option<usize> {
    let (c, d) = params;
    match family {
        FamilyId::P1 => Some(4),
        FamilyId::P2 => Some(6),
        FamilyId::P3 => Some(if c.is_zero() || c.abs() == d.abs() { 4 } else { 8 }),
        _ => None,
    }
}

/// All signed coordinate patterns of the star vectors.
pub fn star_union(family: FamilyId, params: &(Rat, Rat)) -> Option<BTreeSet<Vec3>> {
    let (p, q) = params;
    let signs = [Rat::one(), -Rat::one()];
    let mut out = BTreeSet::new();
    let o = Rat::zero();
    for s in &signs {
        for t in &signs {
            match family {
                FamilyId::P1 => {
                    let (a, b) = (p * s, q * t);
                    out.insert(Vec3::new(a.clone(), o.clone(), b.clone()));
                    out.insert(Vec3::new(b.clone(), a.clone(), o.clone()));
                    out.insert(Vec3::new(o.clone(), b, a));
                }
                FamilyId::P2 | FamilyId::P3 => {
                    for u in &signs {
                        let (c1, c2, d) = (p * s, p * t, q * u);
                        out.insert(Vec3::new(c1.clone(), c2.clone(), d.clone()));
                        out.insert(Vec3::new(c1.clone(), d.clone(), c2.clone()));
                        out.insert(Vec3::new(d, c1.clone(), c2.clone()));
                    }
                }
                _ => return None,
            }
        }
    }
    Some(out)
}

fn expected_star_count(family: FamilyId, params: &(Rat, Rat)) -> Option<usize> {
    let (c, d) = params;
    match family {
        FamilyId::P1 => Some(4),
        FamilyId::P2 if d.is_zero() => Some(4),
        FamilyId::P2 => Some(8),
        FamilyId::P3 if c.is_zero() => Some(3),
        FamilyId::P3 => Some(6),
        _ => None,
    }
}

fn vertex_cosets(family: FamilyId, params: &(Rat, Rat)) -> Result<Outcome> {
    let Some(expected) = expected_vertex_classes(family, params) else {
        return Ok(Outcome::Skipped(format!("no vertex-class statement for {family}")));
    };
    let g = build_group(family, params.clone())?;
    let orbit = OrbitData::new(&g, word_bound()?)?;
    let classes: BTreeSet<Vec3> = orbit
        .quotient
        .elements
        .iter()
        .map(|c| orbit.translations.canon(&c.trans))
        .collect();
    let listed: BTreeSet<Vec3> = crate::group::vertex_coset_reps(family, params)
        .iter()
        .map(|x| orbit.translations.canon(x))
        .collect();
    let finite = orbit.translations.rank() == 0;
    // A finite member has as many vertices as listed points.
    let expected = if finite { listed.len() } else { expected };
    Ok(check(
        classes.len() == expected && classes == listed,
        format!(
            "{} vertex classes, expected {expected}, listed {}",
            classes.len(),
            listed.len()
        ),
    ))
}

fn stars(family: FamilyId, params: &(Rat, Rat)) -> Result<Outcome> {
    let (Some(union), Some(expected)) = (star_union(family, params), expected_star_count(family, params)) else {
        return Ok(Outcome::Skipped(format!("no star catalog for {family}")));
    };
    let catalog = vertex_star_catalog(family, params.clone())?;
    let g = build_group(family, params.clone())?;
    let orbit = OrbitData::new(&g, word_bound()?)?;
    let all: BTreeSet<&Vec<Vec3>> = orbit.stars.iter().collect();
    let listed: BTreeSet<&Vec<Vec3>> = catalog.entries.iter().map(|e| &e.star).collect();
    let ok = catalog.union() == union && catalog.distinct == expected && all == listed;
    Ok(check(
        ok,
        format!("{} distinct stars, expected {expected}", catalog.distinct),
    ))
}

fn face_classes(family: FamilyId, params: &(Rat, Rat)) -> Result<Outcome> {
    let Some(expected) = expected_face_classes(family, params) else {
        return Ok(Outcome::Skipped(format!("no face-class statement for {family}")));
    };
    let g = build_group(family, params.clone())?;
    if finite_fixed_point(&g).is_some() {
        return Ok(Outcome::Skipped("finite member".into()));
    }
    let rep = face_translation_classes(family, params.clone())?;
    Ok(check(
        rep.count == expected && rep.exhaustive,
        format!(
            "{} classes over {} faces, expected {expected}",
            rep.count, rep.faces_checked
        ),
    ))
}

fn covering(family: FamilyId, params: &(Rat, Rat)) -> Result<Outcome> {
    let Some((census, size, degree)) = expected_cover(family) else {
        return Ok(Outcome::Skipped(format!("no covering statement for {family}")));
    };
    let c = covering_quotient(family, params.clone())?;
    let ok = c.census() == census
        && c.face_sizes == BTreeSet::from([size])
        && c.vertex_degrees == BTreeSet::from([degree])
        && c.euler_characteristic == 2;
    Ok(check(
        ok,
        format!("census {:?}, euler {}", c.census(), c.euler_characteristic),
    ))
}

fn named_regular(family: FamilyId, params: &(Rat, Rat)) -> Result<Outcome> {
    let a = &params.0;
    match family {
        FamilyId::TWI_33STAR | FamilyId::TWI_34 | FamilyId::TWI_33 => {
            let rep = verify_named_regular(family, a)?;
            Ok(check(
                rep.passed,
                format!(
                    "{}: twist {}, witness {}, petrie period {}",
                    rep.name,
                    rep.twist_translation,
                    rep.witness.map_or("none".to_string(), |w| w.to_string()),
                    rep.petrie_period.map_or("none".to_string(), |p| p.to_string())
                ),
            ))
        }
        FamilyId::SONEROT_33STAR | FamilyId::SONEROT_34 => {
            let g = build_group(family, params.clone())?;
            let expected = if family == FamilyId::SONEROT_33STAR {
                Vec3::new(a.clone(), a.clone(), -a).scale(&Rat::half())
            } else {
                Vec3::new(a.clone(), Rat::zero(), Rat::zero())
            };
            let found = finite_fixed_point(&g);
            Ok(check(
                found.as_ref() == Some(&expected),
                format!("fixed point {}", found.map_or("none".to_string(), |p| p.to_string())),
            ))
        }
        f => Ok(Outcome::Skipped(format!("{f} is not a named special case"))),
    }
}

/// Radius of the patches compared under the mirror.
pub const MIRROR_RADIUS: i64 = 6;

fn mirror(family: FamilyId, params: &(Rat, Rat)) -> Result<Outcome> {
    if !FamilyId::HELIX.contains(&family) {
        return Ok(Outcome::Skipped(format!("no mirror statement for {family}")));
    }
    let (m, r) = enantiomorph(family, params)?;
    let (back, _) = enantiomorph(family, &m)?;
    let radius = Rat::int(MIRROR_RADIUS);
    let g = build_group(family, params.clone())?;
    let h = build_group(family, m.clone())?;
    let a = construct_patch(&g, &radius)?;
    let b = construct_patch(&h, &radius)?;
    let image: BTreeSet<Vec3> = a.positions().iter().map(|x| r.apply(x)).collect();
    let (ha, hb) = (handedness(&base_face(&g)), handedness(&base_face(&h)));
    let flips = match (ha, hb) {
        (Handedness::Undefined, Handedness::Undefined) => true,
        (x, y) => x != y && x != Handedness::Undefined && y != Handedness::Undefined,
    };
    let ok = back == *params && image == b.positions() && flips;
    Ok(check(
        ok,
        format!(
            "mirror ({},{}) by {}, {} vertices, handedness {ha:?}/{hb:?}",
            m.0,
            m.1,
            r,
            image.len()
        ),
    ))
}

/// Checks one statement at one parameter point.
pub fn verify_point(lemma: Lemma, family: FamilyId, params: &(Rat, Rat)) -> Result<Outcome> {
    match lemma {
        Lemma::TranslationLattice => match verify_translation_lattice(family, params.clone(), word_bound()?) {
            Ok(rep) => {
                let claimed = rep.claimed.as_ref().map_or("none".to_string(), |l| l.to_string());
                let found = rep
                    .discovered
                    .as_ref()
                    .map_or("non-cubic".to_string(), |l| l.to_string());
                let order = rep.quotient_order.map_or(String::new(), |n| format!(", {n} cosets"));
                Ok(check(rep.verified, format!("claimed {claimed}, found {found}{order}")))
            }
            Err(Error::Refuted { reason, witness }) => Ok(Outcome::Fail(format!("{reason}: {witness}"))),
            Err(e) => Err(e),
        },
        Lemma::VertexCosets => vertex_cosets(family, params),
        Lemma::Stars => stars(family, params),
        Lemma::FaceClasses => face_classes(family, params),
        Lemma::Phi2 => match family {
            FamilyId::P66 | FamilyId::Q46 => {
                let c = verify_phi2(family, params.clone())?;
                Ok(check(
                    c.equal,
                    format!("phi2 = ({}, {}) vs {}", c.pair.s1, c.pair.s2, c.target),
                ))
            }
            f => Ok(Outcome::Skipped(format!("phi2 is not applied to {f}"))),
        },
        Lemma::Eta => match family {
            FamilyId::Q46 => {
                let c = verify_eta(params.clone())?;
                let (p, q) = &c.target_params;
                Ok(match c.conjugator {
                    Some(x) => Outcome::Pass(format!(
                        "conjugate to P66({p},{q}){} by {x}",
                        if c.mirrored { " (enantiomorphic pair)" } else { "" }
                    )),
                    None => Outcome::Fail(format!("no signed-permutation conjugation onto P66({p},{q})")),
                })
            }
            f => Ok(Outcome::Skipped(format!("eta is not applied to {f}"))),
        },
        Lemma::Covering => covering(family, params),
        Lemma::NamedRegular => named_regular(family, params),
        Lemma::Enantiomorph => mirror(family, params),
    }
}

/// Checks every point, in parallel, returning results in input order.
/// Errors other than refutations become failures at their point.
pub fn verify_grid(lemma: Lemma, family: FamilyId, points: &[(Rat, Rat)]) -> Vec<PointResult> {
    points
        .par_iter()
        .map(|p| PointResult {
            family,
            params: p.clone(),
            outcome: verify_point(lemma, family, p).unwrap_or_else(|e| Outcome::Fail(e.to_string())),
        })
        .collect()
}

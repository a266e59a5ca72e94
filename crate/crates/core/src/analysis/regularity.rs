use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::geometry::{Isometry, Rat, SignedPerm};
use crate::group::{build_group, finite_fixed_point, FamilyId, GroupPresentation};
use crate::wythoff::detect_multiplicity;

/// The conditions a reflection `R` must meet to extend the rotation
/// subgroup to the full symmetry group of a regular polyhedron.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum WitnessCondition {
    Involution,
    InvertsS2,
    CentralizesT,
    FixesBaseVertex,
    MapsS1ToS1S2Squared,
}

impl fmt::Display for WitnessCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessCondition::Involution => "R^2 = I",
            WitnessCondition::InvertsS2 => "R^-1 S2 R = S2^-1",
            WitnessCondition::CentralizesT => "R^-1 T R = T",
            WitnessCondition::FixesBaseVertex => "oR = o",
            WitnessCondition::MapsS1ToS1S2Squared => "R^-1 S1 R = S1 S2^2",
        })
    }
}

/// The first condition `r` fails, if any.
pub fn first_failure(g: &GroupPresentation, r: &Isometry) -> Option<WitnessCondition> {
    let o = g.base_vertex();
    let s1s2s2 = g.s1.then(&g.s2).then(&g.s2);
    let checks = [
        (WitnessCondition::Involution, r.then(r).is_identity()),
        (WitnessCondition::InvertsS2, g.s2.conjugate_by(r) == g.s2.inverse()),
        (WitnessCondition::CentralizesT, g.t.conjugate_by(r) == g.t),
        (WitnessCondition::FixesBaseVertex, r.apply(&o) == o),
        (WitnessCondition::MapsS1ToS1S2Squared, g.s1.conjugate_by(r) == s1s2s2),
    ];
    checks.into_iter().find(|(_, ok)| !ok).map(|(c, _)| c)
}

/// Searches the 48 signed permutations, in their fixed order, for a linear
/// reflection witnessing regularity.
pub fn regularity_witness(g: &GroupPresentation) -> Option<Isometry> {
    SignedPerm::all()
        .into_iter()
        .map(Isometry::linear)
        .find(|r| first_failure(g, r).is_none())
}

/// Every candidate with the first condition it fails. Empty refusals mean
/// nothing was checked.
pub fn chirality_certificate(g: &GroupPresentation) -> Vec<(SignedPerm, WitnessCondition)> {
    SignedPerm::all()
        .into_iter()
        .filter_map(|m| first_failure(g, &Isometry::linear(m)).map(|c| (m, c)))
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    Chiral,
    Regular(String),
    FiniteRegular(String),
    DegenerateNonFaithful(usize),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Chiral => f.write_str("chiral"),
            Verdict::Regular(name) => write!(f, "regular {name}"),
            Verdict::FiniteRegular(name) => write!(f, "finite regular {name}"),
            Verdict::DegenerateNonFaithful(m) => write!(f, "degenerate (vertex multiplicity {m})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub family: FamilyId,
    pub params: (Rat, Rat),
    pub verdict: Verdict,
    pub witness: Option<Isometry>,
    /// For chiral verdicts: each rejected candidate and the condition it
    /// fails.
    pub certificate: Vec<(SignedPerm, WitnessCondition)>,
}

/// Schläfli-type name of a regular member.
pub fn regular_name(family: FamilyId, finite: bool) -> String {
    let name = match (family, finite) {
        (FamilyId::P1, true) => "{3,3}",
        (FamilyId::P1, false) => "{∞,3}^(a)",
        (FamilyId::P2, true) => "{4,3}",
        (FamilyId::P2, false) => "{∞,3}^(b)",
        (FamilyId::P3, true) => "{3,4}",
        (FamilyId::P3, false) => "{∞,4}_{·,*3}",
        (FamilyId::TWI_33STAR, _) => "{∞,6}_{4,4}",
        (FamilyId::TWI_34, _) => "{∞,6}_{6,3}",
        (FamilyId::TWI_33, _) => "{∞,4}_{6,4}",
        (f, finite) => {
            let p = if finite {
                f.face_period().to_string()
            } else {
                "∞".to_string()
            };
            return format!("{{{p},{}}}", f.vertex_degree());
        }
    };
    name.to_string()
}

pub fn classify(family: FamilyId, params: (Rat, Rat)) -> Result<Classification> {
    let g = build_group(family, params)?;
    classify_group(&g)
}

pub fn classify_group(g: &GroupPresentation) -> Result<Classification> {
    let finite = finite_fixed_point(g).is_some();
    let mut out = Classification {
        family: g.family,
        params: g.params.clone(),
        verdict: Verdict::Chiral,
        witness: None,
        certificate: Vec::new(),
    };
    if !finite {
        let m = detect_multiplicity(g)?.multiplicity;
        if m > 1 {
            out.verdict = Verdict::DegenerateNonFaithful(m);
            return Ok(out);
        }
    }
    match regularity_witness(g) {
        Some(r) => {
            let name = regular_name(g.family, finite);
            out.verdict = if finite {
                Verdict::FiniteRegular(name)
            } else {
                Verdict::Regular(name)
            };
            out.witness = Some(r);
        }
        None => out.certificate = chirality_certificate(g),
    }
    Ok(out)
}

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Isometry, Rat, SignedPerm, Vec3};
use crate::group::FamilyId;
use crate::wythoff::HelicalFace;

/// Parameters of the mirror image and the reflection relating the two.
pub fn enantiomorph(family: FamilyId, params: &(Rat, Rat)) -> Result<((Rat, Rat), Isometry)> {
    let (p, q) = params.clone();
    let (mirrored, images) = match family {
        FamilyId::P1 => ((q, p), [3, 2, 1]),
        FamilyId::P2 => ((-p, q), [2, 1, 3]),
        FamilyId::P3 => ((p, -q), [1, 2, -3]),
        f => {
            return Err(Error::UnsupportedSource {
                op: "enantiomorph".into(),
                family: f.to_string(),
            })
        }
    };
    Ok((mirrored, Isometry::linear(SignedPerm::from_images(images))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineWitness {
    /// `B = scalar · A` or, when `mirrored`, `B = scalar · A*` with `A*` the
    /// enantiomorphic parameters.
    pub scalar: Rat,
    pub mirrored: bool,
    pub congruent: bool,
}

/// The nonzero `s` with `b = s·a`, if any.
fn scalar_multiple(a: &(Rat, Rat), b: &(Rat, Rat)) -> Option<Rat> {
    let s = if !a.0.is_zero() {
        &b.0 / &a.0
    } else if !a.1.is_zero() {
        &b.1 / &a.1
    } else {
        return None;
    };
    (!s.is_zero() && &a.0 * &s == b.0 && &a.1 * &s == b.1).then_some(s)
}

/// Decides whether two members of a helix-faced family are affinely
/// equivalent, which for these families means similar.
pub fn affinely_equivalent(family: FamilyId, a: &(Rat, Rat), b: &(Rat, Rat)) -> Result<Option<AffineWitness>> {
    let (mirror_a, _) = enantiomorph(family, a)?;
    let found = scalar_multiple(a, b)
        .map(|s| (s, false))
        .or_else(|| scalar_multiple(&mirror_a, b).map(|s| (s, true)));
    Ok(found.map(|(scalar, mirrored)| AffineWitness {
        congruent: scalar.abs() == Rat::one(),
        scalar,
        mirrored,
    }))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Handedness {
    Left,
    Right,
    Undefined,
}

/// Sign of `det[y−x, z−y, t]` over the first three strip vertices; finite
/// faces have no handedness.
pub fn handedness(face: &HelicalFace) -> Handedness {
    if face.is_finite() {
        return Handedness::Undefined;
    }
    let (x, y, z) = (face.vertex(0), face.vertex(1), face.vertex(2));
    let d = Vec3::det(&(&y - &x), &(&z - &y), &face.translation);
    match d.signum() {
        1 => Handedness::Right,
        -1 => Handedness::Left,
        _ => Handedness::Undefined,
    }
}

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Rat, SignedPerm, Vec3};
use crate::group::translation::rat_gcd;
use crate::group::{build_group, special_group, FamilyId, GroupPresentation};

/// A nonzero primitive vector on the rotation axis of `m`.
pub fn rotation_axis(m: &SignedPerm) -> Option<Vec3> {
    let n = m.order();
    (0..3).find_map(|i| {
        let mut e = Vec3::zero();
        e.0[i] = Rat::one();
        let mut sum = Vec3::zero();
        for k in 0..n {
            sum = &sum + &m.pow(k as i64).apply(&e);
        }
        if sum.is_zero() {
            return None;
        }
        let g = sum.iter().fold(Rat::zero(), |acc, x| rat_gcd(&acc, x));
        Some(sum.scale(&g.recip()))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CoveringReport {
    pub family: FamilyId,
    pub params: (Rat, Rat),
    pub initial_vertex: Vec3,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub face_sizes: BTreeSet<usize>,
    pub vertex_degrees: BTreeSet<usize>,
    pub euler_characteristic: i64,
}

impl CoveringReport {
    pub fn census(&self) -> (usize, usize, usize) {
        (self.vertices, self.edges, self.faces)
    }
}

/// The finite polyhedron obtained by Wythoff's construction on the special
/// group with the linear parts `S₁′`, `S₂`, and an initial vertex on the
/// axis of `S₂`.
pub fn covering_quotient(family: FamilyId, params: (Rat, Rat)) -> Result<CoveringReport> {
    let g = build_group(family, params)?;
    covering_of(&g)
}

pub fn covering_of(g: &GroupPresentation) -> Result<CoveringReport> {
    let g0 = special_group(g);
    let (s1, s2) = (g.s1.linear, g.s2.linear);
    let v = rotation_axis(&s2).ok_or_else(|| Error::UnsupportedSource {
        op: "covering".into(),
        family: g.family.to_string(),
    })?;
    let t = s1.then(&s2);
    let vertices: BTreeSet<Vec3> = g0.elements.iter().map(|m| m.apply(&v)).collect();
    let edges: BTreeSet<[Vec3; 2]> = g0
        .elements
        .iter()
        .map(|m| {
            let (a, b) = (m.apply(&v), m.apply(&t.apply(&v)));
            if a <= b {
                [a, b]
            } else {
                [b, a]
            }
        })
        .collect();
    let p = s1.order();
    let base_face: Vec<Vec3> = (0..p).map(|k| s1.pow(k as i64).apply(&v)).collect();
    let faces: BTreeSet<BTreeSet<Vec3>> = g0
        .elements
        .iter()
        .map(|m| base_face.iter().map(|x| m.apply(x)).collect())
        .collect();
    let mut degree: BTreeMap<&Vec3, usize> = BTreeMap::new();
    for [a, b] in &edges {
        *degree.entry(a).or_default() += 1;
        *degree.entry(b).or_default() += 1;
    }
    Ok(CoveringReport {
        family: g.family,
        params: g.params.clone(),
        initial_vertex: v,
        vertices: vertices.len(),
        edges: edges.len(),
        faces: faces.len(),
        face_sizes: faces.iter().map(BTreeSet::len).collect(),
        vertex_degrees: degree.values().copied().collect(),
        euler_characteristic: vertices.len() as i64 - edges.len() as i64 + faces.len() as i64,
    })
}

/// The census expected for the cover of each helix-faced family.
pub fn expected_cover(family: FamilyId) -> Option<((usize, usize, usize), usize, usize)> {
    match family {
        FamilyId::P1 => Some(((4, 6, 4), 3, 3)),
        FamilyId::P2 => Some(((8, 12, 6), 4, 3)),
        FamilyId::P3 => Some(((6, 12, 8), 3, 4)),
        _ => None,
    }
}

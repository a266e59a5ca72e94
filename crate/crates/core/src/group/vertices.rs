use std::collections::BTreeSet;

use crate::error::Result;
use crate::geometry::{solve_affine, CosetCanon, Lattice, Rat, Vec3};

use super::family::{FamilyId, GroupPresentation};
use super::quotient::quotient_mod;
use super::translation::claimed_translation_lattice;

/// The listed vertex representatives of a helix-faced family, before any
/// collapsing.
pub fn listed_vertex_reps(family: FamilyId, params: &(Rat, Rat)) -> Vec<Vec3> {
    let (p, q) = params;
    let o = Rat::zero();
    let v = |x: Rat, y: Rat, z: Rat| Vec3::new(x, y, z);
    let two = Rat::int(2);
    match family {
        FamilyId::P1 => {
            let (a, b) = (p, q);
            vec![
                Vec3::zero(),
                v(a.clone(), o.clone(), b.clone()),
                v(o.clone(), b.clone(), a.clone()),
                v(b.clone(), a.clone(), o),
            ]
        }
        FamilyId::P2 => {
            let (c, d) = (p, q);
            let c2 = &two * c;
            vec![
                Vec3::zero(),
                v(c + d, c2.clone(), d - c),
                v(d - c, c + d, c2.clone()),
                v(c2.clone(), d - c, c + d),
                v(-c, d.clone(), c.clone()),
                v(&c2 + d, &c2 + d, &c2 + d),
                v(c.clone(), -c, d.clone()),
                v(d.clone(), c.clone(), -c),
            ]
        }
        FamilyId::P3 => {
            let (c, d) = (p, q);
            vec![
                Vec3::zero(),
                v(c.clone(), -c, d.clone()),
                v(-c, -c, d.clone()),
                v(o.clone(), -(&two * c), o),
                v(d.clone(), -c, c.clone()),
                v(d.clone(), -c, -c),
            ]
        }
        _ => vec![Vec3::zero()],
    }
}

/// The listed representatives with translation-equivalent points removed
/// (first occurrence kept).
pub fn vertex_coset_reps(family: FamilyId, params: &(Rat, Rat)) -> Vec<Vec3> {
    let lattice = claimed_translation_lattice(family, params).unwrap_or_else(Lattice::trivial);
    let mut seen = BTreeSet::new();
    listed_vertex_reps(family, params)
        .into_iter()
        .filter(|x| seen.insert(lattice.canon(x)))
        .collect()
}

/// Canonical representatives of the vertex positions `o·g` modulo the
/// translation group, computed from the coset enumeration.
pub fn vertex_classes(g: &GroupPresentation, canon: &dyn CosetCanon, word_bound: usize) -> Result<BTreeSet<Vec3>> {
    let q = quotient_mod(g, canon, word_bound)?;
    let o = g.base_vertex();
    Ok(q.elements
        .iter()
        .map(|c| canon.canon(&(&c.linear.apply(&o) + &c.trans)))
        .collect())
}

/// The point fixed by both generators, if any. A group generated by
/// isometries with a common fixed point is finite.
pub fn finite_fixed_point(g: &GroupPresentation) -> Option<Vec3> {
    // x·M + t = x  ⇔  x·(I − M) = t, one equation per coordinate.
    let mut equations = Vec::new();
    for s in [&g.s1, &g.s2] {
        let m = s.linear.matrix();
        for j in 0..3 {
            let row = [0, 1, 2].map(|i| {
                let delta = if i == j { Rat::one() } else { Rat::zero() };
                delta - &m[i][j]
            });
            equations.push((row, s.trans.0[j].clone()));
        }
    }
    solve_affine(&equations).map(|(x, _)| x)
}

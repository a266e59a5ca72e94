use serde::{Deserialize, Serialize};

use crate::geometry::{Isometry, Rat, Vec3};
use crate::group::{FamilyId, GroupPresentation};

/// A face given by one period of consecutive vertices and the translation
/// carrying each period to the next. A zero translation means a finite
/// polygon.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HelicalFace {
    pub strip: Vec<Vec3>,
    pub translation: Vec3,
    pub axis_direction: Vec3,
}

/// Identity of a face as a point set: the translation up to sign and the
/// strip points reduced modulo `Z·translation`, sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FaceKey {
    pub translation: Vec3,
    pub points: Vec<Vec3>,
}

impl HelicalFace {
    pub fn new(strip: Vec<Vec3>, translation: Vec3) -> Self {
        HelicalFace {
            axis_direction: translation.clone(),
            strip,
            translation,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.translation.is_zero()
    }

    pub fn period(&self) -> usize {
        self.strip.len()
    }

    /// Image of the face under an isometry.
    pub fn image(&self, g: &Isometry) -> HelicalFace {
        HelicalFace::new(
            self.strip.iter().map(|x| g.apply(x)).collect(),
            g.linear.apply(&self.translation),
        )
    }

    /// The `i`-th vertex of the infinite sequence, `i ∈ Z`.
    pub fn vertex(&self, i: i64) -> Vec3 {
        let p = self.period() as i64;
        let (q, r) = (i.div_euclid(p), i.rem_euclid(p));
        &self.strip[r as usize] + &self.translation.scale(&Rat::int(q))
    }

    /// `turns` consecutive periods starting at the strip.
    pub fn expand(&self, turns: usize) -> Vec<Vec3> {
        (0..(turns * self.period()) as i64).map(|i| self.vertex(i)).collect()
    }

    pub fn key(&self) -> FaceKey {
        let t = &self.translation;
        if t.is_zero() {
            let mut points = self.strip.clone();
            points.sort();
            return FaceKey {
                translation: t.clone(),
                points,
            };
        }
        let t = if t > &-t { t.clone() } else { -t };
        let tt = t.dot(&t);
        let mut points: Vec<Vec3> = self
            .strip
            .iter()
            .map(|y| {
                let k = (y.dot(&t) / &tt).floor();
                y - &t.scale(&Rat::from_bigint(k))
            })
            .collect();
        points.sort();
        FaceKey { translation: t, points }
    }

    /// Whether `p` is a vertex of the (infinite) face.
    pub fn contains_vertex(&self, p: &Vec3) -> bool {
        let probe = HelicalFace::new(vec![p.clone()], self.translation.clone());
        let k = probe.key().points.remove(0);
        self.key().points.contains(&k)
    }

    /// Whether `other` is the image of `self` under the translation by
    /// some vector accepted by `in_lattice`.
    pub fn translation_equivalent(&self, other: &HelicalFace, in_lattice: impl Fn(&Vec3) -> bool) -> bool {
        let x0 = &self.strip[0];
        other.strip.iter().any(|y| {
            let l = y - x0;
            in_lattice(&l) && self.image(&Isometry::translation(l)).key() == other.key()
        })
    }
}

/// The isometry stepping along the base face:
/// `S₁` for most families, `S₁⁻¹` for `P₃`.
pub fn face_walker(g: &GroupPresentation) -> Isometry {
    match g.family {
        FamilyId::P3 => g.s1.inverse(),
        _ => g.s1.clone(),
    }
}

/// The base face `o⟨S₁⟩`, listed as `[oW⁻¹, o, oW, …, oW^(p−2)]` with
/// translation that of `W^p`.
pub fn base_face(g: &GroupPresentation) -> HelicalFace {
    let w = face_walker(g);
    let p = w.linear.order();
    let o = g.base_vertex();
    let strip = (-1..p as i64 - 1).map(|k| w.pow(k).apply(&o)).collect();
    HelicalFace::new(strip, w.pow(p as i64).trans)
}

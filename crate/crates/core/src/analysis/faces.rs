use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{CosetCanon, Isometry, Rat};
use crate::group::{build_group, word_bound, FamilyId, GroupPresentation, Letter, Word};
use crate::wythoff::{base_face, FaceKey, HelicalFace, OrbitData};

/// Words `w` such that the faces `F₂·w` represent the translation classes.
pub fn face_class_words(family: FamilyId) -> Vec<Word> {
    use Letter::*;
    let t1 = Word::new(&[S2Inv, T, S2]);
    let s2k = |k: usize| Word::power(S2, k);
    match family {
        FamilyId::P1 => vec![s2k(0), s2k(1), s2k(2), s2k(2).concat(&Word::new(&[T]))],
        FamilyId::P2 => (0..3).flat_map(|k| [s2k(k), t1.concat(&s2k(k))]).collect(),
        FamilyId::P3 => (0..2)
            .flat_map(|i| {
                let t1 = t1.clone();
                (0..4).map(move |j| if i == 0 { s2k(j) } else { t1.concat(&s2k(j)) })
            })
            .collect(),
        _ => Vec::new(),
    }
}

/// A key shared by exactly the faces in one translation class: the least
/// face key over the translates that move a strip vertex to its canonical
/// representative.
pub fn class_key(face: &HelicalFace, lattice: &dyn CosetCanon) -> FaceKey {
    face.strip
        .iter()
        .map(|p| face.image(&Isometry::translation(&lattice.canon(p) - p)).key())
        .min()
        .expect("non-empty strip")
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceRepresentative {
    pub word: String,
    pub face: HelicalFace,
    /// Index of the class this representative belongs to.
    pub class: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceClassReport {
    pub family: FamilyId,
    pub params: (Rat, Rat),
    pub count: usize,
    pub representatives: Vec<FaceRepresentative>,
    /// Number of faces through vertices of every coset that were checked.
    pub faces_checked: usize,
    /// Whether every checked face is equivalent to a representative.
    pub exhaustive: bool,
}

pub fn face_translation_classes(family: FamilyId, params: (Rat, Rat)) -> Result<FaceClassReport> {
    let g = build_group(family, params)?;
    face_classes_of(&g)
}

pub fn face_classes_of(g: &GroupPresentation) -> Result<FaceClassReport> {
    let orbit = OrbitData::new(g, word_bound()?)?;
    let lattice = &orbit.translations;
    if lattice.rank() == 0 {
        return Err(Error::TrivialLattice);
    }
    let f2 = base_face(g);
    let mut classes: BTreeMap<FaceKey, usize> = BTreeMap::new();
    let mut words = face_class_words(g.family);
    let listed = !words.is_empty();
    if !listed {
        words = orbit.quotient.elements.iter().map(|c| c.word.clone()).collect();
    }
    let mut representatives = Vec::new();
    for w in words {
        let face = f2.image(&g.eval(&w));
        let key = class_key(&face, lattice);
        let n = classes.len();
        let class = *classes.entry(key).or_insert(n);
        if listed || class == n {
            representatives.push(FaceRepresentative {
                word: w.to_string(),
                face,
                class,
            });
        }
    }
    // Every face meets a vertex o·c for some coset c, and the faces at o·c
    // are F₂·S₂^k·c.
    let q = orbit.base_star.len();
    let mut faces_checked = 0;
    let mut exhaustive = true;
    for c in &orbit.quotient.elements {
        let h = Isometry::new(c.linear, c.trans.clone());
        for k in 0..q {
            let face = f2.image(&g.s2.pow(k as i64).then(&h));
            faces_checked += 1;
            exhaustive &= classes.contains_key(&class_key(&face, lattice));
        }
    }
    Ok(FaceClassReport {
        family: g.family,
        params: g.params.clone(),
        count: classes.len(),
        representatives,
        faces_checked,
        exhaustive,
    })
}

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{module_basis, CosetCanon, Rat, Vec3};
use crate::group::{build_group, word_bound, FamilyId, GroupPresentation, Letter, Word};
use crate::wythoff::{star_for, OrbitData};

/// Difference vectors from a vertex to its neighbours, in the cyclic order
/// induced by the vertex stabilizer.
pub type VertexStar = Vec<Vec3>;

/// `S₂^{-k}·T·S₂^k` as a word.
fn t_conj(k: usize) -> Word {
    let mut w = Word::power(Letter::S2Inv, k);
    w.0.push(Letter::T);
    w.0.extend(std::iter::repeat_n(Letter::S2, k));
    w
}

fn cat(parts: &[&Word]) -> Word {
    parts.iter().fold(Word::default(), |acc, w| acc.concat(w))
}

/// Labelled words `g` whose vertices `o·g` carry the catalogued stars
/// `V₀·g′`.
pub fn catalog_words(family: FamilyId) -> Vec<(String, Word)> {
    match family {
        FamilyId::P1 => {
            let (t1, t2, t3) = (t_conj(1), t_conj(0), t_conj(2));
            vec![
                ("V0".into(), Word::default()),
                ("V1".into(), t1),
                ("V2".into(), t2),
                ("V3".into(), t3),
            ]
        }
        FamilyId::P2 => {
            let (t1, t2, t3) = (t_conj(1), t_conj(0), t_conj(2));
            let u1 = cat(&[&t1, &t2, &t3, &t2]);
            let u2 = cat(&[&t2, &t1, &t3, &t1]);
            let u3 = cat(&[&t3, &t1, &t2, &t1]);
            let words = [
                Word::default(),
                u1.clone(),
                u2.clone(),
                u3.clone(),
                t1.clone(),
                u1.concat(&t1),
                u2.concat(&t1),
                u3.concat(&t1),
            ];
            words
                .into_iter()
                .enumerate()
                .map(|(i, w)| (format!("W{i}"), w))
                .collect()
        }
        FamilyId::P3 => {
            let (t0, t1) = (t_conj(0), t_conj(1));
            let words = [
                Word::default(),
                t0.clone(),
                cat(&[&t0, &t1]),
                cat(&[&t0, &t1, &t0]),
                cat(&[&t1, &t0]),
                t1,
            ];
            words
                .into_iter()
                .enumerate()
                .map(|(i, w)| (format!("W{i}"), w))
                .collect()
        }
        _ => Vec::new(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub label: String,
    pub word: String,
    pub vertex: Vec3,
    /// The star as a sorted set.
    pub star: Vec<Vec3>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StarCatalog {
    pub entries: Vec<CatalogEntry>,
    /// Pairs of entries with equal stars.
    pub coincidences: Vec<(usize, usize)>,
    pub distinct: usize,
}

impl StarCatalog {
    /// Union of all catalogued stars.
    pub fn union(&self) -> BTreeSet<Vec3> {
        self.entries.iter().flat_map(|e| e.star.iter().cloned()).collect()
    }
}

/// The vertex-stars of a family member. For the helix-faced families the
/// entries follow the standard words; for the others they are the distinct
/// images of the base star under the special group.
pub fn vertex_star_catalog(family: FamilyId, params: (Rat, Rat)) -> Result<StarCatalog> {
    let g = build_group(family, params)?;
    let base = crate::wythoff::base_star(&g);
    let o = g.base_vertex();
    let words = catalog_words(family);
    let entries: Vec<CatalogEntry> = if words.is_empty() {
        let orbit = OrbitData::new(&g, word_bound()?)?;
        let mut seen = BTreeSet::new();
        orbit
            .quotient
            .elements
            .iter()
            .filter(|c| seen.insert(star_for(&base, &c.linear)))
            .enumerate()
            .map(|(i, c)| CatalogEntry {
                label: format!("S{i}"),
                word: c.word.to_string(),
                vertex: c.trans.clone(),
                star: star_for(&base, &c.linear),
            })
            .collect()
    } else {
        words
            .into_iter()
            .map(|(label, w)| {
                let h = g.eval(&w);
                CatalogEntry {
                    label,
                    word: w.to_string(),
                    vertex: h.apply(&o),
                    star: star_for(&base, &h.linear),
                }
            })
            .collect()
    };
    let mut coincidences = Vec::new();
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            if entries[i].star == entries[j].star {
                coincidences.push((i, j));
            }
        }
    }
    let distinct = entries.iter().map(|e| &e.star).collect::<BTreeSet<_>>().len();
    Ok(StarCatalog {
        entries,
        coincidences,
        distinct,
    })
}

/// The ordered vertex-star at a vertex, found by reducing the vertex modulo
/// the translation group.
pub fn vertex_star(family: FamilyId, params: (Rat, Rat), vertex: &Vec3) -> Result<VertexStar> {
    let g = build_group(family, params)?;
    vertex_star_in(&g, vertex)
}

pub fn vertex_star_in(g: &GroupPresentation, vertex: &Vec3) -> Result<VertexStar> {
    let orbit = OrbitData::new(g, word_bound()?)?;
    let target = orbit.translations.canon(vertex);
    let mut found: Vec<VertexStar> = Vec::new();
    for c in &orbit.quotient.elements {
        if orbit.translations.canon(&c.trans) != target {
            continue;
        }
        let star: VertexStar = orbit.base_star.iter().map(|v| c.linear.apply(v)).collect();
        if !found.iter().any(|s| sorted(s) == sorted(&star)) {
            found.push(star);
        }
    }
    match found.len() {
        0 => Err(Error::NotAVertex(vertex.to_string())),
        1 => Ok(found.remove(0)),
        n => Err(Error::AmbiguousVertex(format!(
            "{vertex} carries {n} distinct vertex-stars"
        ))),
    }
}

fn sorted(s: &[Vec3]) -> Vec<Vec3> {
    let mut s = s.to_vec();
    s.sort();
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarPlanarity {
    pub planar: bool,
    /// Determinant of the three star vectors, for stars of size three.
    pub determinant: Option<Rat>,
    /// Dimension of the span of the star vectors.
    pub rank: usize,
}

/// Whether the base vertex-star spans only a plane. All stars are images of
/// it under linear isometries, so the answer holds for every vertex.
pub fn star_planarity(family: FamilyId, params: (Rat, Rat)) -> Result<StarPlanarity> {
    let g = build_group(family, params)?;
    let star = crate::wythoff::base_star(&g);
    let rank = module_basis(&star).rank();
    let determinant = (star.len() == 3).then(|| Vec3::det(&star[0], &star[1], &star[2]));
    Ok(StarPlanarity {
        planar: rank <= 2,
        determinant,
        rank,
    })
}

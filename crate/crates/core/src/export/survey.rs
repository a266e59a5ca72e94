use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{classify_group, face_classes_of, vertex_star_catalog};
use crate::error::Result;
use crate::geometry::{CosetCanon, Lattice, Rat};
use crate::group::{build_group, word_bound, FamilyId};
use crate::wythoff::{detect_multiplicity, OrbitData};

#[derive(Clone, Debug, Serialize)]
pub struct SurveyRow {
    pub family: FamilyId,
    pub params: (Rat, Rat),
    pub verdict: String,
    pub lattice: String,
    pub vertex_classes: usize,
    pub stars: usize,
    /// `None` for finite members.
    pub face_classes: Option<usize>,
    pub multiplicity: usize,
}

impl SurveyRow {
    pub fn tsv_header() -> &'static str {
        "family\tparams\tverdict\tlattice\tvertex_classes\tstars\tface_classes\tmultiplicity"
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{},{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.family,
            self.params.0,
            self.params.1,
            self.verdict,
            self.lattice,
            self.vertex_classes,
            self.stars,
            self.face_classes.map_or("-".to_string(), |n| n.to_string()),
            self.multiplicity
        )
    }
}

pub fn survey_row(family: FamilyId, params: (Rat, Rat), word_bound: usize) -> Result<SurveyRow> {
    let g = build_group(family, params)?;
    let orbit = OrbitData::new(&g, word_bound)?;
    let finite = orbit.translations.rank() == 0;
    let lattice = match Lattice::recognize(&orbit.translations) {
        Some(l) => l.to_string(),
        None => format!("rank {} module", orbit.translations.rank()),
    };
    let positions: BTreeSet<_> = orbit
        .quotient
        .elements
        .iter()
        .map(|c| orbit.translations.canon(&c.trans))
        .collect();
    let multiplicity = if finite {
        1
    } else {
        detect_multiplicity(&g)?.multiplicity
    };
    Ok(SurveyRow {
        family,
        params: g.params.clone(),
        verdict: classify_group(&g)?.verdict.to_string(),
        lattice,
        vertex_classes: positions.len(),
        stars: vertex_star_catalog(family, g.params.clone())?.distinct,
        face_classes: if finite { None } else { Some(face_classes_of(&g)?.count) },
        multiplicity,
    })
}

/// One row per grid point, in grid order, evaluated in parallel.
pub fn survey(family: FamilyId, points: &[(Rat, Rat)]) -> Vec<Result<SurveyRow>> {
    points
        .par_iter()
        .map(|p| word_bound().and_then(|b| survey_row(family, p.clone(), b)))
        .collect()
}

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::geometry::{CosetCanon, Isometry, SignedPerm, Vec3};

use super::family::{GroupPresentation, Letter, Word};

/// Default depth of the coset enumeration.
pub const DEFAULT_WORD_BOUND: usize = 20;

/// Environment variable overriding [`DEFAULT_WORD_BOUND`].
pub const WORD_BOUND_VAR: &str = "CHIRAHEDRA_WORD_BOUND";

/// The enumeration depth: `CHIRAHEDRA_WORD_BOUND` if set, else the default.
pub fn word_bound() -> Result<usize> {
    match std::env::var(WORD_BOUND_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::Parse(format!("{WORD_BOUND_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_WORD_BOUND),
    }
}

/// The alphabet of the coset enumeration.
pub const ALPHABET: [Letter; 3] = [Letter::S2, Letter::S2Inv, Letter::T];

#[derive(Clone, Debug)]
pub struct Coset {
    pub linear: SignedPerm,
    /// Translation reduced to its canonical representative.
    pub trans: Vec3,
    /// A shortest word reaching this coset.
    pub word: Word,
}

/// The finite group `G/L` for a translation subgroup `L` of `G`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub elements: Vec<Coset>,
    /// `table[i][j]` is the index of `elements[i]·elements[j]`.
    pub table: Vec<Vec<usize>>,
    /// BFS depth at which no new coset appeared.
    pub depth: usize,
}

impl QuotientGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Indices of cosets other than the identity whose linear part is
    /// trivial, i.e. translations of `G` outside `L`.
    pub fn stray_translations(&self) -> Vec<usize> {
        (1..self.order())
            .filter(|&i| self.elements[i].linear.is_identity())
            .collect()
    }
}

fn key(g: &Isometry, canon: &dyn CosetCanon) -> (SignedPerm, Vec3) {
    (g.linear, canon.canon(&g.trans))
}

/// Enumerates `G` modulo the translations accepted by `canon`, by breadth
/// first search over words in `S₂`, `S₂⁻¹`, `T`.
pub fn quotient_mod(g: &GroupPresentation, canon: &dyn CosetCanon, word_bound: usize) -> Result<QuotientGroup> {
    let letters: Vec<Isometry> = ALPHABET.iter().map(|l| g.letter(*l)).collect();
    let mut index: HashMap<(SignedPerm, Vec3), usize> = HashMap::new();
    let mut elements = Vec::new();
    let id = Isometry::identity();
    index.insert(key(&id, canon), 0);
    elements.push(Coset {
        linear: id.linear,
        trans: canon.canon(&id.trans),
        word: Word::default(),
    });
    let mut reps = vec![id];
    let mut queue = VecDeque::from([0usize]);
    let mut depth = 0;
    while let Some(i) = queue.pop_front() {
        for (l, x) in ALPHABET.iter().zip(&letters) {
            let h = reps[i].then(x);
            let k = key(&h, canon);
            if index.contains_key(&k) {
                continue;
            }
            let mut word = elements[i].word.clone();
            word.0.push(*l);
            if word.len() > word_bound {
                return Err(Error::NoClosure {
                    bound: word_bound,
                    cosets: elements.len(),
                });
            }
            depth = depth.max(word.len());
            index.insert(k.clone(), elements.len());
            elements.push(Coset {
                linear: k.0,
                trans: k.1,
                word,
            });
            queue.push_back(elements.len() - 1);
            reps.push(h);
        }
    }
    let table = reps
        .iter()
        .map(|a| reps.iter().map(|b| index[&key(&a.then(b), canon)]).collect())
        .collect();
    Ok(QuotientGroup { elements, table, depth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Lattice, Rat};
    use crate::group::family::{build_group, FamilyId};

    fn group(f: FamilyId, p: i64, q: i64) -> GroupPresentation {
        build_group(f, (Rat::int(p), Rat::int(q))).unwrap()
    }

    #[test]
    fn orders_modulo_claimed_lattices() {
        let q = quotient_mod(&group(FamilyId::P1, 1, 3), &Lattice::bcc(Rat::int(2)), 20).unwrap();
        assert_eq!(q.order(), 12);
        let q = quotient_mod(&group(FamilyId::P2, 1, 4), &Lattice::z3(Rat::int(4)), 20).unwrap();
        assert_eq!(q.order(), 24);
        let q = quotient_mod(&group(FamilyId::P3, 1, 2), &Lattice::bcc(Rat::int(2)), 20).unwrap();
        assert_eq!(q.order(), 24);
    }

    #[test]
    fn finite_groups_close_without_lattice() {
        let q = quotient_mod(&group(FamilyId::P1, 1, 1), &Lattice::trivial(), 20).unwrap();
        assert_eq!(q.order(), 12);
        let q = quotient_mod(&group(FamilyId::P2, 0, 1), &Lattice::trivial(), 20).unwrap();
        assert_eq!(q.order(), 24);
    }

    #[test]
    fn wrong_lattice_does_not_close() {
        let err = quotient_mod(&group(FamilyId::P1, 1, 3), &Lattice::trivial(), 8).unwrap_err();
        assert!(matches!(err, Error::NoClosure { .. }));
    }

    #[test]
    fn table_is_a_group() {
        let q = quotient_mod(&group(FamilyId::P3, 1, 2), &Lattice::bcc(Rat::int(2)), 20).unwrap();
        let n = q.order();
        for i in 0..n {
            assert_eq!(q.table[0][i], i);
            assert_eq!(q.table[i][0], i);
            assert_eq!((0..n).filter(|&j| q.table[i][j] == 0).count(), 1);
            for j in 0..n {
                for k in 0..n {
                    assert_eq!(q.table[q.table[i][j]][k], q.table[i][q.table[j][k]]);
                }
            }
        }
        assert!(q.stray_translations().is_empty());
    }
}

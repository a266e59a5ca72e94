use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{CosetCanon, IntModuleBasis, Isometry, Lattice, Rat, SignedPerm, Vec3};
use crate::group::{discover_translation_group, quotient_mod, word_bound, FamilyId, GroupPresentation, QuotientGroup};

use super::face::{base_face, HelicalFace};

/// The ordered vertex-star at `o`: `[oT, oTS₂, oTS₂², …]`.
pub fn base_star(g: &GroupPresentation) -> Vec<Vec3> {
    let q = g.s2.period(12).expect("S2 has finite period");
    (0..q)
        .map(|k| g.t.then(&g.s2.pow(k as i64)).apply(&g.base_vertex()))
        .collect()
}

/// The star `V₀·M` as a sorted set.
pub fn star_for(base: &[Vec3], m: &SignedPerm) -> Vec<Vec3> {
    let mut s: Vec<Vec3> = base.iter().map(|v| m.apply(v)).collect();
    s.sort();
    s
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PatchVertex {
    pub pos: Vec3,
    /// Index into [`PolyhedronPatch::stars`] of this vertex's star.
    pub coset: usize,
    pub multiplicity: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BaseFlag {
    pub vertex: Vec3,
    pub edge: [Vec3; 2],
    pub face: HelicalFace,
}

/// The part of an apeirohedron within a max-norm ball around `o`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolyhedronPatch {
    pub family: FamilyId,
    pub params: (Rat, Rat),
    pub radius: Rat,
    pub lattice: Option<Lattice>,
    pub vertices: Vec<PatchVertex>,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<HelicalFace>,
    /// The distinct vertex-stars, sorted.
    pub stars: Vec<Vec<Vec3>>,
    pub base_flag: BaseFlag,
}

/// Everything needed to enumerate the orbit `oG`: the translation group,
/// the quotient by it and the star labels of its cosets.
pub struct OrbitData {
    pub translations: IntModuleBasis,
    pub quotient: QuotientGroup,
    pub base_star: Vec<Vec3>,
    pub stars: Vec<Vec<Vec3>>,
}

impl OrbitData {
    pub fn new(g: &GroupPresentation, word_bound: usize) -> Result<Self> {
        let translations = discover_translation_group(g).basis;
        let quotient = quotient_mod(g, &translations, word_bound)?;
        let base_star = base_star(g);
        let stars: BTreeSet<Vec<Vec3>> = quotient
            .elements
            .iter()
            .map(|c| star_for(&base_star, &c.linear))
            .collect();
        Ok(OrbitData {
            translations,
            quotient,
            base_star,
            stars: stars.into_iter().collect(),
        })
    }

    pub fn star_index(&self, m: &SignedPerm) -> usize {
        let s = star_for(&self.base_star, m);
        self.stars.binary_search(&s).expect("star of a group element")
    }

    /// Representatives `g = (M, t)` of every group element whose vertex
    /// `o·g = t` lies within the max-norm ball of radius `r`.
    pub fn elements_in_ball(&self, r: &Rat) -> Vec<Isometry> {
        let mut out = Vec::new();
        for c in &self.quotient.elements {
            for l in lattice_points_in_box(&self.translations, &c.trans, r) {
                out.push(Isometry::new(c.linear, &c.trans + &l));
            }
        }
        out
    }
}

/// All `ℓ` in the module with `|x + ℓ|∞ ≤ r`.
pub fn lattice_points_in_box(basis: &IntModuleBasis, x: &Vec3, r: &Rat) -> Vec<Vec3> {
    match basis.rank() {
        0 => {
            if x.max_norm() <= *r {
                vec![Vec3::zero()]
            } else {
                vec![]
            }
        }
        3 => {
            let mut out = Vec::new();
            enumerate_level(basis, x, r, 0, Vec3::zero(), &mut out);
            out
        }
        n => panic!("translation module of rank {n} is not a lattice"),
    }
}

fn enumerate_level(basis: &IntModuleBasis, x: &Vec3, r: &Rat, level: usize, acc: Vec3, out: &mut Vec<Vec3>) {
    if level == 3 {
        out.push(acc);
        return;
    }
    let row = &basis.rows[level];
    let col = basis.pivots[level];
    debug_assert_eq!(col, level);
    let p = &row.0[col];
    // Coordinate `col` of x + acc + k·row must lie in [-r, r]; later rows
    // vanish in this column.
    let base = &x.0[col] + &acc.0[col];
    let lo = ceil(&((-r - &base) / p));
    let hi = ((r - &base) / p).floor();
    let mut k = lo;
    while k <= hi {
        let next = &acc + &row.scale(&Rat::from_bigint(k.clone()));
        enumerate_level(basis, x, r, level + 1, next, out);
        k += 1;
    }
}

fn ceil(x: &Rat) -> BigInt {
    -(-x).floor()
}

pub fn construct_patch(g: &GroupPresentation, radius: &Rat) -> Result<PolyhedronPatch> {
    construct_patch_with(g, radius, word_bound()?)
}

pub fn construct_patch_with(g: &GroupPresentation, radius: &Rat, word_bound: usize) -> Result<PolyhedronPatch> {
    if !radius.is_positive() {
        return Err(Error::Parse(format!("radius must be positive, got {radius}")));
    }
    let orbit = OrbitData::new(g, word_bound)?;
    let elements = orbit.elements_in_ball(radius);

    // Combinatorial vertices: one per (position, star).
    let mut index: HashMap<(Vec3, usize), usize> = HashMap::new();
    let mut reps: Vec<(Vec3, usize, Isometry)> = Vec::new();
    for e in elements {
        let k = (e.trans.clone(), orbit.star_index(&e.linear));
        if !index.contains_key(&k) {
            index.insert(k.clone(), reps.len());
            reps.push((k.0, k.1, e));
        }
    }
    reps.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    index = reps
        .iter()
        .enumerate()
        .map(|(i, (p, s, _))| ((p.clone(), *s), i))
        .collect();
    let mut per_position: HashMap<&Vec3, usize> = HashMap::new();
    for (p, _, _) in &reps {
        *per_position.entry(p).or_default() += 1;
    }
    let vertices: Vec<PatchVertex> = reps
        .iter()
        .map(|(p, s, _)| PatchVertex {
            pos: p.clone(),
            coset: *s,
            multiplicity: per_position[p],
        })
        .collect();

    let q = orbit.base_star.len();
    let s2_powers: Vec<Isometry> = (0..q).map(|k| g.s2.pow(k as i64)).collect();
    let mut edges = BTreeSet::new();
    for (i, (_, _, e)) in reps.iter().enumerate() {
        for s in &s2_powers {
            let h = g.t.then(s).then(e);
            let k = (h.trans.clone(), orbit.star_index(&h.linear));
            if let Some(&j) = index.get(&k) {
                edges.insert([i.min(j), i.max(j)]);
            }
        }
    }

    let f2 = base_face(g);
    let mut seen = HashSet::new();
    let mut faces = Vec::new();
    for (_, _, e) in &reps {
        for s in &s2_powers {
            let face = f2.image(&s.then(e));
            if seen.insert(face.key()) {
                faces.push(face);
            }
        }
    }

    let o = g.base_vertex();
    Ok(PolyhedronPatch {
        family: g.family,
        params: g.params.clone(),
        radius: radius.clone(),
        lattice: Lattice::recognize(&orbit.translations),
        vertices,
        edges: edges.into_iter().collect(),
        faces,
        stars: orbit.stars.clone(),
        base_flag: BaseFlag {
            vertex: o.clone(),
            edge: [o.clone(), g.t.apply(&o)],
            face: f2,
        },
    })
}

impl PolyhedronPatch {
    pub fn vertex_index(&self, pos: &Vec3) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.pos == *pos)
            .map(|(i, _)| i)
            .collect()
    }

    /// Distinct vertex positions in the patch.
    pub fn positions(&self) -> BTreeSet<Vec3> {
        self.vertices.iter().map(|v| v.pos.clone()).collect()
    }

    /// Length bound of an edge in max-norm.
    pub fn edge_reach(&self) -> Rat {
        self.stars
            .iter()
            .flatten()
            .map(Vec3::max_norm)
            .max()
            .unwrap_or_else(Rat::zero)
    }

    /// Vertices whose whole star lies inside the patch.
    pub fn interior(&self) -> Vec<usize> {
        let limit = &self.radius - &self.edge_reach();
        (0..self.vertices.len())
            .filter(|&i| self.vertices[i].pos.max_norm() <= limit)
            .collect()
    }
}

/// Adjacency lists keyed by vertex index.
pub fn edge_graph(patch: &PolyhedronPatch) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); patch.vertices.len()];
    for [i, j] in &patch.edges {
        adj[*i].push(*j);
        adj[*j].push(*i);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    adj
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiplicityReport {
    /// Number of combinatorial vertices at each vertex position, one entry
    /// per translation class of positions.
    pub classes: Vec<(Vec3, usize)>,
    pub multiplicity: usize,
}

/// Counts the distinct vertex-stars carried by each vertex position.
pub fn detect_multiplicity(g: &GroupPresentation) -> Result<MultiplicityReport> {
    let orbit = OrbitData::new(g, word_bound()?)?;
    let mut by_position: BTreeMap<Vec3, BTreeSet<usize>> = BTreeMap::new();
    for c in &orbit.quotient.elements {
        let pos = orbit.translations.canon(&c.trans);
        by_position.entry(pos).or_default().insert(orbit.star_index(&c.linear));
    }
    let classes: Vec<(Vec3, usize)> = by_position.into_iter().map(|(p, s)| (p, s.len())).collect();
    let multiplicity = classes.iter().map(|(_, n)| *n).max().unwrap_or(1);
    Ok(MultiplicityReport { classes, multiplicity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;

    fn r(n: i64) -> Rat {
        Rat::int(n)
    }

    fn patch(f: FamilyId, p: i64, q: i64, radius: i64) -> PolyhedronPatch {
        construct_patch(&build_group(f, (r(p), r(q))).unwrap(), &r(radius)).unwrap()
    }

    #[test]
    fn tetrahedron_and_cube() {
        let t = patch(FamilyId::P1, 1, 1, 2);
        assert_eq!((t.vertices.len(), t.edges.len(), t.faces.len()), (4, 6, 4));
        assert!(t.faces.iter().all(|f| f.is_finite() && f.period() == 3));
        let c = patch(FamilyId::P2, 0, 1, 2);
        assert_eq!((c.vertices.len(), c.edges.len(), c.faces.len()), (8, 12, 6));
        let o = patch(FamilyId::P3, 1, 0, 2);
        assert_eq!((o.vertices.len(), o.edges.len(), o.faces.len()), (6, 12, 8));
    }

    #[test]
    fn p1_neighbours_of_o() {
        let p = patch(FamilyId::P1, 1, 3, 3);
        for v in [
            Vec3::ints(0, 0, 0),
            Vec3::ints(1, 0, 3),
            Vec3::ints(0, 3, 1),
            Vec3::ints(3, 1, 0),
        ] {
            assert_eq!(p.vertex_index(&v).len(), 1, "{v}");
        }
    }

    #[test]
    fn degrees() {
        for (f, p, q, deg) in [
            (FamilyId::P1, 1, 3, 3),
            (FamilyId::P3, 1, 2, 4),
            (FamilyId::P2, 1, 4, 3),
        ] {
            let patch = patch(f, p, q, 8);
            let adj = edge_graph(&patch);
            let interior = patch.interior();
            assert!(!interior.is_empty());
            for i in interior {
                assert_eq!(adj[i].len(), deg, "{f}");
            }
        }
    }

    // The ball is enumerated from the lattice; an independent BFS along
    // edges from o must reach the same vertices.
    #[test]
    fn lattice_enumeration_agrees_with_edge_walk() {
        let g = build_group(FamilyId::P2, (r(1), r(4))).unwrap();
        let small = construct_patch(&g, &r(6)).unwrap();
        let big = construct_patch(&g, &r(14)).unwrap();
        let adj = edge_graph(&big);
        let start = big.vertex_index(&Vec3::zero())[0];
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &j in &adj[i] {
                if seen.insert(j) {
                    stack.push(j);
                }
            }
        }
        let reached: BTreeSet<Vec3> = seen
            .iter()
            .map(|&i| big.vertices[i].pos.clone())
            .filter(|p| p.max_norm() <= r(6))
            .collect();
        assert_eq!(reached, small.positions());
    }

    #[test]
    fn multiplicities() {
        let m = |f, p, q| {
            detect_multiplicity(&build_group(f, (r(p), r(q))).unwrap())
                .unwrap()
                .multiplicity
        };
        assert_eq!(m(FamilyId::P2, 1, 2), 2);
        assert_eq!(m(FamilyId::P3, 1, 1), 6);
        assert_eq!(m(FamilyId::P1, 2, 5), 1);
        assert_eq!(m(FamilyId::P3, 2, 1), 2);
        assert_eq!(m(FamilyId::P3, 0, 1), 1);
        assert_eq!(m(FamilyId::P2, 1, 4), 1);
    }
}

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{module_basis, IntModuleBasis, Rat, Vec3};
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum LatticeKind {
    Z3,
    Fcc,
    Bcc,
    Trivial,
}

/// One of the cubic lattices `sZ³`, `sΛ_(1,1,0)` (face-centred) or
/// `sΛ_(1,1,1)` (body-centred), or the zero lattice.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Lattice {
    pub kind: LatticeKind,
    pub scale: Rat,
}

/// Canonical coset representatives modulo a translation group.
pub trait CosetCanon {
    /// `canon(x) == canon(y)` iff `x − y` lies in the group.
    fn canon(&self, v: &Vec3) -> Vec3;
    fn contains(&self, v: &Vec3) -> bool;
}

impl Lattice {
    /// Builds a lattice; the scale is stored as its absolute value and a zero
    /// scale gives the trivial lattice.
    pub fn new(kind: LatticeKind, scale: Rat) -> Self {
        if kind == LatticeKind::Trivial || scale.is_zero() {
            Lattice::trivial()
        } else {
            Lattice {
                kind,
                scale: scale.abs(),
            }
        }
    }

    pub fn z3(scale: Rat) -> Self {
        Lattice::new(LatticeKind::Z3, scale)
    }

    pub fn bcc(scale: Rat) -> Self {
        Lattice::new(LatticeKind::Bcc, scale)
    }

    pub fn fcc(scale: Rat) -> Self {
        Lattice::new(LatticeKind::Fcc, scale)
    }

    pub fn trivial() -> Self {
        Lattice {
            kind: LatticeKind::Trivial,
            scale: Rat::zero(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.kind == LatticeKind::Trivial
    }

    pub fn contains(&self, v: &Vec3) -> bool {
        if self.is_trivial() {
            return v.is_zero();
        }
        let Some(u) = self.unscaled(v) else { return false };
        match self.kind {
            LatticeKind::Z3 => true,
            LatticeKind::Bcc => u.iter().all(|x| x.is_odd()) || u.iter().all(|x| x.is_even()),
            LatticeKind::Fcc => (&u[0] + &u[1] + &u[2]).is_even(),
            LatticeKind::Trivial => unreachable!(),
        }
    }

    fn unscaled(&self, v: &Vec3) -> Option<[num_bigint::BigInt; 3]> {
        let u = v.scale(&self.scale.recip());
        let [a, b, c] = u.0;
        Some([a.to_integer()?, b.to_integer()?, c.to_integer()?])
    }

    /// Canonical representative of `v + L` in the box `[0, 2s)³` (or
    /// `[0, s)³` for `sZ³`), the lexicographically least of the candidates.
    pub fn reduce(&self, v: &Vec3) -> Result<Vec3> {
        let s = &self.scale;
        let reps: Vec<Vec3> = match self.kind {
            LatticeKind::Trivial => return Err(Error::TrivialLattice),
            LatticeKind::Z3 => return Ok(Vec3(v.0.clone().map(|x| x.rem_euclid(s)))),
            LatticeKind::Bcc => vec![Vec3::zero(), Vec3::new(s.clone(), s.clone(), s.clone())],
            LatticeKind::Fcc => vec![
                Vec3::zero(),
                Vec3::new(s.clone(), s.clone(), Rat::zero()),
                Vec3::new(s.clone(), Rat::zero(), s.clone()),
                Vec3::new(Rat::zero(), s.clone(), s.clone()),
            ],
        };
        let m = s + s;
        Ok(reps
            .iter()
            .map(|r| Vec3((v + r).0.map(|x| x.rem_euclid(&m))))
            .min()
            .unwrap())
    }

    /// A generating set of the lattice.
    pub fn generators(&self) -> Vec<Vec3> {
        let s = &self.scale;
        let o = Rat::zero;
        match self.kind {
            LatticeKind::Trivial => vec![],
            LatticeKind::Z3 => vec![
                Vec3::new(s.clone(), o(), o()),
                Vec3::new(o(), s.clone(), o()),
                Vec3::new(o(), o(), s.clone()),
            ],
            LatticeKind::Bcc => vec![
                Vec3::new(s.clone(), s.clone(), s.clone()),
                Vec3::new(s.clone(), -s, -s),
                Vec3::new(-s, s.clone(), -s),
            ],
            LatticeKind::Fcc => vec![
                Vec3::new(s.clone(), s.clone(), o()),
                Vec3::new(s.clone(), o(), s.clone()),
                Vec3::new(o(), s.clone(), s.clone()),
            ],
        }
    }

    pub fn basis(&self) -> IntModuleBasis {
        module_basis(&self.generators())
    }

    /// Names the integer module if it is one of the cubic lattices.
    pub fn recognize(basis: &IntModuleBasis) -> Option<Lattice> {
        if basis.rank() == 0 {
            return Some(Lattice::trivial());
        }
        if basis.rank() != 3 {
            return None;
        }
        let s = basis.rows[0].0[0].clone();
        [LatticeKind::Z3, LatticeKind::Bcc, LatticeKind::Fcc]
            .into_iter()
            .map(|k| Lattice::new(k, s.clone()))
            .find(|l| l.basis().rows == basis.rows)
    }
}

impl CosetCanon for Lattice {
    fn canon(&self, v: &Vec3) -> Vec3 {
        if self.is_trivial() {
            v.clone()
        } else {
            self.reduce(v).expect("non-trivial lattice")
        }
    }

    fn contains(&self, v: &Vec3) -> bool {
        Lattice::contains(self, v)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LatticeKind::Trivial => write!(f, "trivial"),
            LatticeKind::Z3 => write!(f, "{}Z3", self.scale),
            LatticeKind::Bcc => write!(f, "{}BCC", self.scale),
            LatticeKind::Fcc => write!(f, "{}FCC", self.scale),
        }
    }
}

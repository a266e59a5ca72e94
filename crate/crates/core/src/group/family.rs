use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Isometry, Rat, SignedPerm, Vec3};

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum FamilyId {
    P1,
    P2,
    P3,
    P66,
    Q46,
    TWI_33STAR,
    TWI_34,
    TWI_33,
    SONEROT_33STAR,
    SONEROT_34,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        FamilyId::P1,
        FamilyId::P2,
        FamilyId::P3,
        FamilyId::P66,
        FamilyId::Q46,
        FamilyId::TWI_33STAR,
        FamilyId::TWI_34,
        FamilyId::TWI_33,
        FamilyId::SONEROT_33STAR,
        FamilyId::SONEROT_34,
    ];

    /// The helix-faced families `P₁`, `P₂`, `P₃`.
    pub const HELIX: [FamilyId; 3] = [FamilyId::P1, FamilyId::P2, FamilyId::P3];

    pub fn single_param(self) -> bool {
        !matches!(
            self,
            FamilyId::P1 | FamilyId::P2 | FamilyId::P3 | FamilyId::P66 | FamilyId::Q46
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::P1 => "P1",
            FamilyId::P2 => "P2",
            FamilyId::P3 => "P3",
            FamilyId::P66 => "P66",
            FamilyId::Q46 => "Q46",
            FamilyId::TWI_33STAR => "TWI_33STAR",
            FamilyId::TWI_34 => "TWI_34",
            FamilyId::TWI_33 => "TWI_33",
            FamilyId::SONEROT_33STAR => "SONEROT_33STAR",
            FamilyId::SONEROT_34 => "SONEROT_34",
        }
    }

    /// Period of `S₂`, the number of edges at a vertex.
    pub fn vertex_degree(self) -> usize {
        build_group(self, (Rat::one(), Rat::int(2)))
            .expect("non-degenerate")
            .s2
            .period(12)
            .expect("S2 has finite period")
    }

    /// Period of the linear part of `S₁`: the number of vertices in one
    /// period of a face.
    pub fn face_period(self) -> usize {
        build_group(self, (Rat::one(), Rat::int(2)))
            .expect("non-degenerate")
            .s1
            .linear
            .order()
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase().replace('-', "_");
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == upper)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A generating pair `(S₁, S₂)` for one member of a family, with
/// `T = S₁S₂`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub family: FamilyId,
    pub params: (Rat, Rat),
    pub s1: Isometry,
    pub s2: Isometry,
    pub t: Isometry,
}

fn iso(images: [i8; 3], t: [&Rat; 3]) -> Isometry {
    Isometry::new(
        SignedPerm::from_images(images),
        Vec3::new(t[0].clone(), t[1].clone(), t[2].clone()),
    )
}

/// Builds the generators of a family member. Single-parameter families
/// read `params.0` and ignore `params.1`.
pub fn build_group(family: FamilyId, params: (Rat, Rat)) -> Result<GroupPresentation> {
    let (p, q) = &params;
    let degenerate = if family.single_param() {
        p.is_zero()
    } else {
        p.is_zero() && q.is_zero()
    };
    if degenerate {
        return Err(Error::DegenerateParams {
            family: family.to_string(),
            params: format!("({p},{q})"),
        });
    }
    let o = &Rat::zero();
    let (np, nq) = (&-p, &-q);
    let (s1, s2) = match family {
        FamilyId::P1 => (iso([-3, -1, 2], [q, p, o]), iso([2, 3, 1], [o, o, o])),
        FamilyId::P2 => (iso([-3, 2, 1], [q, p, np]), iso([2, 3, 1], [o, o, o])),
        FamilyId::P3 => (iso([3, 1, 2], [nq, np, p]), iso([3, 2, -1], [o, o, o])),
        FamilyId::P66 => (iso([-2, 3, 1], [o, nq, np]), iso([-3, -1, -2], [o, o, o])),
        FamilyId::Q46 => (iso([-1, 3, -2], [p, nq, np]), iso([-3, -1, -2], [o, o, o])),
        FamilyId::TWI_33STAR => (iso([2, -3, -1], [np, o, o]), iso([-3, -1, -2], [o, o, o])),
        FamilyId::TWI_34 => (iso([1, -3, 2], [np, o, np]), iso([-3, -1, -2], [o, o, o])),
        FamilyId::TWI_33 => (iso([2, 3, 1], [np, o, np]), iso([-1, -3, 2], [o, o, o])),
        FamilyId::SONEROT_33STAR => (iso([-2, -3, -1], [p, o, o]), iso([-3, 1, -2], [o, o, o])),
        FamilyId::SONEROT_34 => (iso([-2, -3, -1], [p, o, p]), iso([1, 3, -2], [o, o, o])),
    };
    let params = if family.single_param() {
        (p.clone(), Rat::zero())
    } else {
        params
    };
    Ok(GroupPresentation::from_pair(family, params, s1, s2))
}

impl GroupPresentation {
    pub fn from_pair(family: FamilyId, params: (Rat, Rat), s1: Isometry, s2: Isometry) -> Self {
        let t = s1.then(&s2);
        GroupPresentation {
            family,
            params,
            s1,
            s2,
            t,
        }
    }

    /// The initial vertex `o`, the origin, fixed by `S₂`.
    pub fn base_vertex(&self) -> Vec3 {
        Vec3::zero()
    }

    pub fn eval(&self, word: &Word) -> Isometry {
        word.0
            .iter()
            .fold(Isometry::identity(), |acc, l| acc.then(&self.letter(*l)))
    }

    pub fn letter(&self, l: Letter) -> Isometry {
        match l {
            Letter::S1 => self.s1.clone(),
            Letter::S1Inv => self.s1.inverse(),
            Letter::S2 => self.s2.clone(),
            Letter::S2Inv => self.s2.inverse(),
            Letter::T => self.t.clone(),
        }
    }

    pub fn params_string(&self) -> String {
        if self.family.single_param() {
            format!("{}", self.params.0)
        } else {
            format!("{},{}", self.params.0, self.params.1)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Letter {
    S1,
    S1Inv,
    S2,
    S2Inv,
    T,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::S1 => Letter::S1Inv,
            Letter::S1Inv => Letter::S1,
            Letter::S2 => Letter::S2Inv,
            Letter::S2Inv => Letter::S2,
            Letter::T => Letter::T,
        }
    }
}

/// A word in the generators, read left to right as a product.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }

    pub fn power(l: Letter, n: usize) -> Self {
        Word(vec![l; n])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out).reduced()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Cancels adjacent inverse pairs.
    pub fn reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let (name, inv) = match l {
                Letter::S1 => ("S1", false),
                Letter::S1Inv => ("S1", true),
                Letter::S2 => ("S2", false),
                Letter::S2Inv => ("S2", true),
                Letter::T => ("T", false),
            };
            match (inv, run) {
                (false, 1) => write!(f, "{name}")?,
                (false, n) => write!(f, "{name}^{n}")?,
                (true, n) => write!(f, "{name}^-{n}")?,
            }
            i += run;
        }
        Ok(())
    }
}

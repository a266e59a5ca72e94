use std::fmt;

use serde::{Deserialize, Serialize};

use super::{SignedPerm, Vec3};

/// The isometry `x ↦ x·linear + trans`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Isometry {
    pub linear: SignedPerm,
    pub trans: Vec3,
}

impl Isometry {
    pub fn new(linear: SignedPerm, trans: Vec3) -> Self {
        Isometry { linear, trans }
    }

    pub fn identity() -> Self {
        Isometry::new(SignedPerm::IDENTITY, Vec3::zero())
    }

    pub fn linear(linear: SignedPerm) -> Self {
        Isometry::new(linear, Vec3::zero())
    }

    pub fn translation(t: Vec3) -> Self {
        Isometry::new(SignedPerm::IDENTITY, t)
    }

    pub fn apply(&self, x: &Vec3) -> Vec3 {
        &self.linear.apply(x) + &self.trans
    }

    /// The map "apply `self`, then `g`", written as the product `self·g`.
    pub fn then(&self, g: &Isometry) -> Isometry {
        Isometry {
            linear: self.linear.then(&g.linear),
            trans: &g.linear.apply(&self.trans) + &g.trans,
        }
    }

    pub fn inverse(&self) -> Isometry {
        let inv = self.linear.inverse();
        Isometry {
            linear: inv,
            trans: -inv.apply(&self.trans),
        }
    }

    pub fn pow(&self, n: i64) -> Isometry {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Isometry::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.then(&base);
        }
        out
    }

    /// `g⁻¹·self·g`.
    pub fn conjugate_by(&self, g: &Isometry) -> Isometry {
        g.inverse().then(self).then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.linear.is_identity() && self.trans.is_zero()
    }

    pub fn is_translation(&self) -> bool {
        self.linear.is_identity()
    }

    /// Smallest `k` in `1..=limit` with `selfᵏ = I`.
    pub fn period(&self, limit: usize) -> Option<usize> {
        let mut g = self.clone();
        for k in 1..=limit {
            if g.is_identity() {
                return Some(k);
            }
            g = g.then(self);
        }
        None
    }
}

/// Product of isometries in left-to-right order.
pub fn product<'a>(factors: impl IntoIterator<Item = &'a Isometry>) -> Isometry {
    factors.into_iter().fold(Isometry::identity(), |acc, f| acc.then(f))
}

impl fmt::Display for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.trans.is_zero() {
            write!(f, "{}", self.linear)
        } else {
            write!(f, "{}+{}", self.linear, self.trans)
        }
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

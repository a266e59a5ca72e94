use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rat;

/// A point or vector `(ξ₁, ξ₂, ξ₃)` with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vec3(pub [Rat; 3]);

impl Vec3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Self {
        Vec3([x, y, z])
    }

    pub fn ints(x: i64, y: i64, z: i64) -> Self {
        Vec3([Rat::int(x), Rat::int(y), Rat::int(z)])
    }

    pub fn zero() -> Self {
        Vec3::default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, k: &Rat) -> Vec3 {
        Vec3([&self.0[0] * k, &self.0[1] * k, &self.0[2] * k])
    }

    pub fn dot(&self, other: &Vec3) -> Rat {
        &self.0[0] * &other.0[0] + &self.0[1] * &other.0[1] + &self.0[2] * &other.0[2]
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        let [a, b, c] = &self.0;
        let [x, y, z] = &o.0;
        Vec3([b * z - c * y, c * x - a * z, a * y - b * x])
    }

    /// Determinant of the matrix with rows `a`, `b`, `c`.
    pub fn det(a: &Vec3, b: &Vec3, c: &Vec3) -> Rat {
        a.dot(&b.cross(c))
    }

    /// Chebyshev norm `max |ξᵢ|`.
    pub fn max_norm(&self) -> Rat {
        self.0.iter().map(Rat::abs).max().unwrap()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rat> {
        self.0.iter()
    }
}

impl Index<usize> for Vec3 {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl Add<&Vec3> for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        &self + &o
    }
}

impl Sub<&Vec3> for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        &self - &o
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        -&self
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `vec3!(1, 0, -2)` builds an integer vector, `vec3!(r1, r2, r3)` with
/// [`Rat`] expressions also works via [`Vec3::new`].
#[macro_export]
macro_rules! vec3 {
    ($x:expr, $y:expr, $z:expr) => {
        $crate::geometry::Vec3::ints($x as i64, $y as i64, $z as i64)
    };
}

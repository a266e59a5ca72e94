use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Rat, Vec3};

/// A signed permutation matrix acting on row vectors from the right.
///
/// The image of `x` has coordinates `yᵢ = signᵢ · x[permᵢ]`, so the map
/// `x ↦ (−ξ₃, −ξ₁, ξ₂)` has `perm = [2, 0, 1]` and `sign = [-1, -1, 1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: [u8; 3],
    sign: [i8; 3],
}

impl SignedPerm {
    pub const IDENTITY: SignedPerm = SignedPerm {
        perm: [0, 1, 2],
        sign: [1, 1, 1],
    };
    pub const NEG_IDENTITY: SignedPerm = SignedPerm {
        perm: [0, 1, 2],
        sign: [-1, -1, -1],
    };

    pub fn new(perm: [u8; 3], sign: [i8; 3]) -> Self {
        let mut seen = [false; 3];
        for &p in &perm {
            assert!(p < 3 && !seen[p as usize], "not a permutation: {perm:?}");
            seen[p as usize] = true;
        }
        assert!(sign.iter().all(|s| *s == 1 || *s == -1), "bad signs: {sign:?}");
        SignedPerm { perm, sign }
    }

    /// Builds the map from its coordinate images written 1-based with sign,
    /// as in the notation `(−ξ₃, −ξ₁, ξ₂)` ↔ `[-3, -1, 2]`.
    pub fn from_images(images: [i8; 3]) -> Self {
        let perm = images.map(|k| {
            assert!(k != 0 && k.abs() <= 3, "bad coordinate index {k}");
            k.unsigned_abs() - 1
        });
        let sign = images.map(|k| k.signum());
        SignedPerm::new(perm, sign)
    }

    pub fn images(&self) -> [i8; 3] {
        [0, 1, 2].map(|i| self.sign[i] * (self.perm[i] as i8 + 1))
    }

    pub fn perm(&self) -> [u8; 3] {
        self.perm
    }

    pub fn sign(&self) -> [i8; 3] {
        self.sign
    }

    /// All 48 signed permutations in a fixed order.
    pub fn all() -> Vec<SignedPerm> {
        const PERMS: [[u8; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut out = Vec::with_capacity(48);
        for perm in PERMS {
            for bits in 0..8u8 {
                let sign = [0, 1, 2].map(|i| if bits >> i & 1 == 1 { -1 } else { 1 });
                out.push(SignedPerm { perm, sign });
            }
        }
        out
    }

    pub fn apply(&self, x: &Vec3) -> Vec3 {
        Vec3([0, 1, 2].map(|i| {
            let v = &x.0[self.perm[i] as usize];
            if self.sign[i] < 0 {
                -v
            } else {
                v.clone()
            }
        }))
    }

    /// The map "apply `self`, then `other`".
    pub fn then(&self, other: &SignedPerm) -> SignedPerm {
        let mut perm = [0u8; 3];
        let mut sign = [1i8; 3];
        for i in 0..3 {
            let j = other.perm[i] as usize;
            perm[i] = self.perm[j];
            sign[i] = other.sign[i] * self.sign[j];
        }
        SignedPerm { perm, sign }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut perm = [0u8; 3];
        let mut sign = [1i8; 3];
        for i in 0..3 {
            let p = self.perm[i] as usize;
            perm[p] = i as u8;
            sign[p] = self.sign[i];
        }
        SignedPerm { perm, sign }
    }

    pub fn pow(&self, n: i64) -> SignedPerm {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut out = SignedPerm::IDENTITY;
        for _ in 0..n.unsigned_abs() % 24 {
            out = out.then(&base);
        }
        out
    }

    /// Smallest `k ≥ 1` with `selfᵏ = I`.
    pub fn order(&self) -> usize {
        let mut g = *self;
        let mut k = 1;
        while g != SignedPerm::IDENTITY {
            g = g.then(self);
            k += 1;
        }
        k
    }

    pub fn det(&self) -> i8 {
        let [a, b, c] = self.perm;
        let inversions = (a > b) as u8 + (a > c) as u8 + (b > c) as u8;
        let parity = if inversions.is_multiple_of(2) { 1 } else { -1 };
        parity * self.sign.iter().product::<i8>()
    }

    pub fn trace(&self) -> i8 {
        (0..3)
            .filter(|&i| self.perm[i] as usize == i)
            .map(|i| self.sign[i])
            .sum()
    }

    /// Matrix entries `M[r][c]` for the row-vector convention `y = x·M`.
    pub fn matrix(&self) -> [[Rat; 3]; 3] {
        let mut m: [[Rat; 3]; 3] = Default::default();
        for i in 0..3 {
            m[self.perm[i] as usize][i] = Rat::int(self.sign[i] as i64);
        }
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == SignedPerm::IDENTITY
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.images().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let sign = if *k < 0 { "-" } else { "" };
            write!(f, "{sign}x{}", k.abs())?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for SignedPerm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.images().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedPerm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let images = <[i8; 3]>::deserialize(deserializer)?;
        let mut seen = [false; 3];
        for k in images {
            if k == 0 || k.abs() > 3 || seen[k.unsigned_abs() as usize - 1] {
                return Err(serde::de::Error::custom(format!("bad signed permutation {images:?}")));
            }
            seen[k.unsigned_abs() as usize - 1] = true;
        }
        Ok(SignedPerm::from_images(images))
    }
}

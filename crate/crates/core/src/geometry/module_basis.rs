use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::lattice::CosetCanon;
use super::{Rat, Vec3};

/// Canonical basis of the integer span of finitely many rational vectors.
///
/// Rows are in Hermite normal form: each row starts with a positive pivot
/// strictly to the right of the previous row's pivot, and entries above a
/// pivot lie in `[0, pivot)`. Two generating sets span the same module iff
/// their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntModuleBasis {
    pub rows: Vec<Vec3>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
    /// `certificate[i][j]` is the coefficient of generator `j` in row `i`.
    pub certificate: Vec<Vec<BigInt>>,
}

struct Row {
    v: [BigInt; 3],
    coeffs: Vec<BigInt>,
}

impl Row {
    fn sub_mul(&mut self, other: &Row, k: &BigInt) {
        for i in 0..3 {
            self.v[i] -= k * &other.v[i];
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= k * b;
        }
    }

    fn negate(&mut self) {
        for x in self.v.iter_mut().chain(self.coeffs.iter_mut()) {
            *x = -&*x;
        }
    }
}

/// Computes the canonical basis of `Z·generators`.
pub fn module_basis(generators: &[Vec3]) -> IntModuleBasis {
    let n = generators.len();
    let den = generators
        .iter()
        .flat_map(|g| g.iter())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let den_rat = Rat::from_bigint(den.clone());
    let mut rows: Vec<Row> = generators
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let v = [0, 1, 2].map(|i| (&g.0[i] * &den_rat).to_integer().unwrap());
            let mut coeffs = vec![BigInt::zero(); n];
            coeffs[j] = BigInt::one();
            Row { v, coeffs }
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..3 {
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i].v[col].is_zero())
                .min_by(|&a, &b| rows[a].v[col].abs().cmp(&rows[b].v[col].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut done = true;
            for i in r + 1..rows.len() {
                if !rows[i].v[col].is_zero() {
                    let q = rows[i].v[col].div_floor(&rows[r].v[col]);
                    let (head, tail) = rows.split_at_mut(i);
                    tail[0].sub_mul(&head[r], &q);
                    if !rows[i].v[col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r].v[col].is_zero() {
            if rows[r].v[col].is_negative() {
                rows[r].negate();
            }
            for i in 0..r {
                let q = rows[i].v[col].div_floor(&rows[r].v[col]);
                let (head, tail) = rows.split_at_mut(r);
                head[i].sub_mul(&tail[0], &q);
            }
            pivots.push(col);
            r += 1;
        }
    }
    rows.truncate(r);
    IntModuleBasis {
        rows: rows
            .iter()
            .map(|row| Vec3(row.v.clone().map(|x| Rat::from_big(x, den.clone()))))
            .collect(),
        pivots,
        certificate: rows.into_iter().map(|row| row.coeffs).collect(),
    }
}

impl IntModuleBasis {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Integer coordinates of `v` in this basis, if `v` lies in the module.
    pub fn coordinates(&self, v: &Vec3) -> Option<Vec<BigInt>> {
        let mut rest = v.clone();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let k = &rest.0[col] / &row.0[col];
            let k = k.to_integer()?;
            rest = &rest - &row.scale(&Rat::from_bigint(k.clone()));
            coords.push(k);
        }
        rest.is_zero().then_some(coords)
    }

    pub fn contains(&self, v: &Vec3) -> bool {
        self.coordinates(v).is_some()
    }

    /// Absolute value of the determinant of the basis (rank 3 only): the
    /// volume of a fundamental cell.
    pub fn covolume(&self) -> Option<Rat> {
        (self.rank() == 3).then(|| {
            self.rows
                .iter()
                .zip(&self.pivots)
                .fold(Rat::one(), |acc, (r, &c)| acc * &r.0[c])
        })
    }

    /// Re-derives each row from the stored certificate.
    pub fn check_certificate(&self, generators: &[Vec3]) -> bool {
        self.rows.iter().zip(&self.certificate).all(|(row, coeffs)| {
            coeffs.len() == generators.len()
                && generators.iter().zip(coeffs).fold(Vec3::zero(), |acc, (g, k)| {
                    &acc + &g.scale(&Rat::from_bigint(k.clone()))
                }) == *row
        })
    }
}

impl CosetCanon for IntModuleBasis {
    fn canon(&self, v: &Vec3) -> Vec3 {
        let mut out = v.clone();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let k = (&out.0[col] / &row.0[col]).floor();
            out = &out - &row.scale(&Rat::from_bigint(k));
        }
        out
    }

    fn contains(&self, v: &Vec3) -> bool {
        IntModuleBasis::contains(self, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(x: i64, y: i64, z: i64) -> Vec3 {
        Vec3::ints(x, y, z)
    }

    #[test]
    fn unit_vectors_span_z3() {
        let gens: Vec<Vec3> = [1, -1]
            .iter()
            .flat_map(|&s| [v(s, 0, 0), v(0, s, 0), v(0, 0, s)])
            .collect();
        let b = module_basis(&gens);
        assert_eq!(b.rows, vec![v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)]);
        assert!(b.check_certificate(&gens));
    }

    #[test]
    fn rank_one_and_empty() {
        let b = module_basis(&[v(2, 0, 0)]);
        assert_eq!(b.rows, vec![v(2, 0, 0)]);
        assert_eq!(b.rank(), 1);
        assert_eq!(module_basis(&[]).rank(), 0);
        assert_eq!(module_basis(&[v(0, 0, 0)]).rank(), 0);
    }

    #[test]
    fn rational_generators() {
        let h = Rat::half();
        let gens = [Vec3::new(h.clone(), h.clone(), h.clone()), v(1, 0, 0), v(0, 1, 0)];
        let b = module_basis(&gens);
        assert_eq!(b.rows[0], Vec3::new(h.clone(), h.clone(), h));
        assert_eq!(b.covolume(), Some(Rat::half()));
        assert!(b.check_certificate(&gens));
    }

    #[test]
    fn bcc_hermite_form() {
        let gens: Vec<Vec3> = [v(1, 1, 1), v(1, -1, -1), v(-1, 1, -1), v(-1, -1, 1)].to_vec();
        let b = module_basis(&gens);
        assert_eq!(b.rows, vec![v(1, 1, 1), v(0, 2, 0), v(0, 0, 2)]);
    }

    // Brute-force oracle: integer combinations with small coefficients.
    fn small_span(gens: &[Vec3], bound: i64) -> Vec<Vec3> {
        let mut out = vec![Vec3::zero()];
        for g in gens {
            let mut next = Vec::new();
            for base in &out {
                for k in -bound..=bound {
                    next.push(base + &g.scale(&Rat::int(k)));
                }
            }
            out = next;
        }
        out
    }

    proptest! {
        #[test]
        fn spans_generators_and_nothing_else(
            raw in proptest::collection::vec((-6i64..6, -6i64..6, -6i64..6), 1..5)
        ) {
            let gens: Vec<Vec3> = raw.iter().map(|&(x, y, z)| v(x, y, z)).collect();
            let b = module_basis(&gens);
            prop_assert!(b.check_certificate(&gens));
            for g in &gens {
                prop_assert!(b.contains(g));
            }
            for w in small_span(&gens[..gens.len().min(3)], 2) {
                prop_assert!(b.contains(&w));
            }
            // Order independence of the canonical form.
            let mut rev = gens.clone();
            rev.reverse();
            prop_assert_eq!(module_basis(&rev).rows, b.rows.clone());
        }

        #[test]
        fn canon_is_idempotent(
            raw in proptest::collection::vec((-6i64..6, -6i64..6, -6i64..6), 1..5),
            x in -20i64..20, y in -20i64..20, z in -20i64..20,
        ) {
            let gens: Vec<Vec3> = raw.iter().map(|&(a, b, c)| v(a, b, c)).collect();
            let b = module_basis(&gens);
            let p = v(x, y, z);
            let c = b.canon(&p);
            prop_assert_eq!(b.canon(&c), c.clone());
            prop_assert!(b.contains(&(&p - &c)));
            prop_assert_eq!(b.canon(&(&p + &gens[0])), c);
        }
    }
}

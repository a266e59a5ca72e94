use super::{Rat, Vec3};

/// Solves the system `row · x = rhs` for every `(row, rhs)` in `equations`.
///
/// Returns one solution (free variables set to zero) together with the
/// dimension of the solution space, or `None` when the system is
/// inconsistent.
pub fn solve_affine(equations: &[([Rat; 3], Rat)]) -> Option<(Vec3, usize)> {
    let mut m: Vec<[Rat; 4]> = equations
        .iter()
        .map(|(r, b)| [r[0].clone(), r[1].clone(), r[2].clone(), b.clone()])
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..3 {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let pivot = m[row].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[3].is_zero()) {
        return None;
    }
    let mut x = Vec3::zero();
    for (i, &col) in pivots.iter().enumerate() {
        x.0[col] = m[i][3].clone();
    }
    Some((x, 3 - pivots.len()))
}

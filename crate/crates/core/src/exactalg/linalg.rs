//! Dense exact linear algebra over `Q`, sized for the tiny systems that
//! appear in root-coordinate conversions and character-basis changes
//! (dimensions ≤ a few dozen).

use num_traits::{One, Zero};

use super::Rat;

/// Solve `A x = b` by fraction-free-ish Gaussian elimination with partial
/// pivoting on exact rationals.  Returns `None` if `A` is singular.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    assert_eq!(b.len(), n, "rhs length must match");
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for x in &mut m[col] {
            *x = &*x / &pivot;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=n {
                let delta = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Determinant by elimination (exact).
pub fn det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    let mut m = a.to_vec();
    let mut acc = Rat::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot_row != col {
            m.swap(col, pivot_row);
            acc = -acc;
        }
        let pivot = m[col][col].clone();
        acc *= pivot.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn solves_cartan_like_system() {
        // A2 Cartan matrix; solve A c = (1, 1) → c = (1, 1).
        let a = vec![
            vec![rat(2, 1), rat(-1, 1)],
            vec![rat(-1, 1), rat(2, 1)],
        ];
        let x = solve(&a, &[rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(det(&a), rat(3, 1));
    }

    #[test]
    fn reports_singularity() {
        let a = vec![
            vec![rat(1, 1), rat(2, 1)],
            vec![rat(2, 1), rat(4, 1)],
        ];
        assert!(solve(&a, &[rat(0, 1), rat(0, 1)]).is_none());
        assert_eq!(det(&a), rat(0, 1));
    }
}

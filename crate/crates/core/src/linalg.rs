//! Dense linear algebra over `ℚ`.

#[cfg(test)]
use num_traits::One;
use num_traits::Zero;

use crate::Rational;

/// Solves `Σ cᵢ·columns[i] = target` when the columns are linearly
/// independent and the system is consistent.
pub(crate) fn solve_columns(columns: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let rows = target.len();
    let cols = columns.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let pr = (r..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, pr);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row[c..=cols].iter_mut().zip(&pivot[c..=cols]) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols].clone()).collect())
}

/// For a sequence `v₀, v₁, …` returns the first `k` and coefficients
/// `c₀ … c_{k−1}` with `v_k = Σ cᵢ vᵢ`, i.e. the first linear dependency.
#[cfg(test)]
pub(crate) fn first_dependency(vectors: &[Vec<Rational>]) -> Option<(usize, Vec<Rational>)> {
    for k in 1..vectors.len() {
        if let Some(c) = solve_columns(&vectors[..k], &vectors[k]) {
            return Some((k, c));
        }
    }
    None
}

#[cfg(test)]
pub(crate) fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn solves_small_system() {
        // columns (1,1), (1,-1); target (3,1) -> (2,1)
        let cols = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(1, 1), rat(-1, 1)]];
        let sol = solve_columns(&cols, &[rat(3, 1), rat(1, 1)]).unwrap();
        assert_eq!(sol, vec![rat(2, 1), rat(1, 1)]);
        let dep = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert!(solve_columns(&dep, &[rat(1, 1), rat(0, 1)]).is_none());
    }

    #[test]
    fn dependency_of_powers() {
        // powers of √2 in basis (1, √2): 1, √2, 2
        let v = vec![unit_vector(2, 0), unit_vector(2, 1), vec![rat(2, 1), rat(0, 1)]];
        let (k, c) = first_dependency(&v).unwrap();
        assert_eq!(k, 2);
        assert_eq!(c, vec![rat(2, 1), rat(0, 1)]);
    }
}

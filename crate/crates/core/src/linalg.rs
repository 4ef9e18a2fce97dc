//! Exact integer linear algebra: fraction-free (Bareiss) elimination for
//! determinants, rank and square solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn to_big(m: &[Vec<i64>]) -> IntMatrix {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Bareiss forward elimination in place over the first `cols` columns.
///
/// Returns the pivot columns and the number of row exchanges. After the call
/// the leading `rank` rows form a row echelon form whose last pivot equals,
/// for a square non-singular matrix, the determinant up to the exchange sign.
fn bareiss_forward(m: &mut IntMatrix, cols: usize) -> (Vec<usize>, usize) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        let width = m[r].len();
        for i in r + 1..rows {
            for j in c + 1..width {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                // exact by Sylvester's identity
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, swaps)
}

pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.to_vec();
    let (pivots, swaps) = bareiss_forward(&mut a, n);
    if pivots.len() < n {
        return BigInt::zero();
    }
    let det = a[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        -det
    } else {
        det
    }
}

pub fn rank(m: &[Vec<BigInt>]) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.to_vec();
    bareiss_forward(&mut a, cols).0.len()
}

/// Solves `a x = b` for square non-singular `a`.
pub fn solve(a: &[Vec<BigInt>], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::Precondition(format!(
            "solve needs an n x n system, got {} rows and {} right-hand entries",
            n,
            b.len()
        )));
    }
    // clear denominators so the augmented column stays integral
    let scale = b
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut aug: IntMatrix = a
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push((x * Rational::from_integer(scale.clone())).to_integer());
            r
        })
        .collect();
    let (pivots, _) = bareiss_forward(&mut aug, n);
    if pivots.len() < n {
        return Err(Error::Precondition("singular system".into()));
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(aug[i][n].clone());
        for j in i + 1..n {
            acc -= Rational::from_integer(aug[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(aug[i][i].clone());
    }
    let scale = Rational::from_integer(scale);
    Ok(x.into_iter().map(|v| v / &scale).collect())
}

pub fn transpose(m: &[Vec<BigInt>]) -> IntMatrix {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn max_abs(m: &[Vec<BigInt>]) -> BigInt {
    m.iter()
        .flatten()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    /// Leibniz expansion; independent of elimination.
    fn leibniz(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for p in crate::perm::enumerate_symmetric_group(n).unwrap() {
            let mut term = BigInt::from(p.sign());
            for (i, row) in m.iter().enumerate() {
                term *= row[p.apply(i + 1) - 1];
            }
            total += term;
        }
        total
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&to_big(&[vec![2, 1], vec![1, 3]])), BigInt::from(5));
        assert_eq!(determinant(&to_big(&[vec![0, 1], vec![1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(&to_big(&[vec![1, 2], vec![2, 4]])), BigInt::zero());
        assert_eq!(determinant(&[]), BigInt::one());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&to_big(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 1]])), 2);
        assert_eq!(rank(&to_big(&[vec![0, 0], vec![0, 0]])), 0);
        assert_eq!(rank(&to_big(&[vec![1, 0, 1, 0], vec![0, 1, 1, 0]])), 2);
    }

    #[test]
    fn solve_example() {
        let a = to_big(&[vec![2, 1], vec![1, 3]]);
        let x = solve(&a, &[int(1), Rational::new(1.into(), 2.into())]).unwrap();
        assert_eq!(x, vec![Rational::new(1.into(), 2.into()), int(0)]);
        assert!(solve(&to_big(&[vec![1, 2], vec![2, 4]]), &[int(1), int(2)]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=6).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, n), n)
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(m in small_matrix()) {
            prop_assert_eq!(determinant(&to_big(&m)), leibniz(&m));
        }

        #[test]
        fn solve_round_trip(m in small_matrix(), seed in proptest::collection::vec(-5i64..=5, 6)) {
            let a = to_big(&m);
            prop_assume!(!determinant(&a).is_zero());
            let n = m.len();
            let x: Vec<Rational> = seed[..n].iter().map(|&v| int(v)).collect();
            let b: Vec<Rational> = a
                .iter()
                .map(|row| row.iter().zip(&x).map(|(c, v)| Rational::from_integer(c.clone()) * v).sum())
                .collect();
            prop_assert_eq!(solve(&a, &b).unwrap(), x);
        }
    }
}

//! Exact symmetric-matrix signature and determinant over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type IntMatrix = Vec<Vec<i64>>;

fn to_big(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn is_symmetric(m: &IntMatrix) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n) && (0..n).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// Signature (positive minus negative eigenvalues) of a symmetric matrix,
/// by fraction-free congruence diagonalisation.
pub fn signature(m: &IntMatrix) -> i64 {
    debug_assert!(is_symmetric(m));
    let mut a = to_big(m);
    let mut sig = 0i64;
    while !a.is_empty() {
        let n = a.len();
        let pivot = (0..n).filter(|&i| !a[i][i].is_zero()).min_by(|&i, &j| a[i][i].abs().cmp(&a[j][j].abs()));
        let p = match pivot {
            Some(p) => p,
            None => {
                let Some((i, j)) =
                    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero())
                else {
                    break;
                };
                // row_i += row_j, col_i += col_j makes a[i][i] = 2 a[i][j]
                let row_j = a[j].clone();
                for (x, v) in a[i].iter_mut().zip(row_j) {
                    *x += v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[i] += v;
                }
                i
            }
        };
        a.swap(0, p);
        for row in a.iter_mut() {
            row.swap(0, p);
        }
        let d = a[0][0].clone();
        let sd = BigInt::from(if d.is_positive() { 1 } else { -1 });
        sig += if d.is_positive() { 1 } else { -1 };
        let ad = d.abs();
        let mut next: Vec<Vec<BigInt>> =
            (1..n).map(|i| (1..n).map(|j| &ad * &a[i][j] - &sd * &a[i][0] * &a[0][j]).collect()).collect();
        let g = next.iter().flatten().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g > BigInt::from(1) {
            for x in next.iter_mut().flatten() {
                *x /= &g;
            }
        }
        a = next;
    }
    sig
}

/// Determinant by Bareiss elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut a = to_big(m);
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Oracle: eigenvalue signs of a float copy, by Jacobi rotations.
    #[allow(clippy::needless_range_loop)]
    fn float_signature(m: &IntMatrix) -> i64 {
        // Jacobi eigenvalue iteration
        let n = m.len();
        let mut a: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        for _ in 0..200 {
            for p in 0..n {
                for q in p + 1..n {
                    if a[p][q].abs() < 1e-14 {
                        continue;
                    }
                    let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let (akp, akq) = (a[k][p], a[k][q]);
                        a[k][p] = c * akp - s * akq;
                        a[k][q] = s * akp + c * akq;
                    }
                    for k in 0..n {
                        let (apk, aqk) = (a[p][k], a[q][k]);
                        a[p][k] = c * apk - s * aqk;
                        a[q][k] = s * apk + c * aqk;
                    }
                }
            }
        }
        (0..n)
            .map(|i| {
                if a[i][i] > 1e-7 {
                    1
                } else if a[i][i] < -1e-7 {
                    -1
                } else {
                    0
                }
            })
            .sum()
    }

    #[test]
    fn small_cases() {
        assert_eq!(signature(&vec![]), 0);
        assert_eq!(signature(&vec![vec![-2, 1], vec![1, -2]]), -2);
        assert_eq!(signature(&vec![vec![0, 1], vec![1, 0]]), 0);
        assert_eq!(signature(&vec![vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(determinant(&vec![vec![-2, 1], vec![1, -2]]), BigInt::from(3));
        assert_eq!(determinant(&vec![vec![0, 1], vec![1, 0]]), BigInt::from(-1));
    }

    fn symmetric() -> impl Strategy<Value = IntMatrix> {
        (1usize..6).prop_flat_map(|n| {
            prop::collection::vec(-3i64..4, n * n).prop_map(move |v| {
                let mut m = vec![vec![0; n]; n];
                for i in 0..n {
                    for j in 0..=i {
                        m[i][j] = v[i * n + j];
                        m[j][i] = v[i * n + j];
                    }
                }
                m
            })
        })
    }

    fn brute_det(m: &IntMatrix) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|j| {
                let minor: IntMatrix = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * brute_det(&minor)
            })
            .sum()
    }

    proptest! {
        #[test]
        fn signature_matches_eigenvalues(m in symmetric()) {
            prop_assert_eq!(signature(&m), float_signature(&m));
        }

        #[test]
        fn determinant_matches_cofactor_expansion(m in symmetric()) {
            prop_assert_eq!(determinant(&m), BigInt::from(brute_det(&m)));
        }

        #[test]
        fn negation_flips_signature(m in symmetric()) {
            let neg: IntMatrix = m.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
            prop_assert_eq!(signature(&neg), -signature(&m));
        }
    }
}

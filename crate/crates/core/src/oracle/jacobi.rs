//! A dependency-free cyclic Jacobi eigensolver for dense symmetric
//! matrices. Classic sweep scheduling with the usual threshold strategy:
//! the first sweeps only rotate elements above 0.2·(Σ|off-diag|)/size²,
//! later sweeps rotate everything, and elements that become negligible
//! against the local diagonal are flushed to zero. Converges when the
//! off-diagonal Frobenius mass drops to 1e−13, which the transition
//! matrices here (entries in [0, 1]) reach in a handful of sweeps.

use crate::{Error, Result};

const MAX_SWEEPS: usize = 100;
const OFF_DIAGONAL_TARGET: f64 = 1e-13;
const SYMMETRY_TOLERANCE: f64 = 1e-12;

fn check_input(matrix: &[f64], size: usize) -> Result<()> {
    if matrix.len() != size * size {
        return Err(Error::InvalidArgument(format!(
            "matrix storage holds {} entries, expected {}×{}",
            matrix.len(),
            size,
            size
        )));
    }
    for i in 0..size {
        for j in i + 1..size {
            let (a, b) = (matrix[i * size + j], matrix[j * size + i]);
            if (a - b).abs() > SYMMETRY_TOLERANCE {
                return Err(Error::NotSymmetric(a, b));
            }
        }
    }
    Ok(())
}

fn off_diagonal_frobenius(a: &[f64], n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            acc += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    acc.sqrt()
}

/// All eigenvalues of a symmetric matrix (row-major, `size`×`size`),
/// sorted descending, each with its multiplicity.
pub fn symmetric_eigenvalues(matrix: &[f64], size: usize) -> Result<Vec<f64>> {
    Ok(symmetric_eigen_decomposition(matrix, size)?.0)
}

/// Eigenvalues sorted descending together with matching eigenvectors:
/// `vectors[k*size..(k+1)*size]` is a unit eigenvector for `values[k]`.
pub fn symmetric_eigen_decomposition(matrix: &[f64], size: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    check_input(matrix, size)?;
    let n = size;
    if n == 0 {
        return Ok((Vec::new(), Vec::new()));
    }

    let mut a = matrix.to_vec();
    // v holds rotations applied to the identity; column p ends up as the
    // eigenvector for d[p].
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let mut d: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    for sweep in 0..MAX_SWEEPS {
        let off = off_diagonal_frobenius(&a, n);
        if off <= OFF_DIAGONAL_TARGET {
            return Ok(sorted_pairs(d, v, n));
        }
        let sm: f64 = {
            let mut acc = 0.0;
            for i in 0..n {
                for j in i + 1..n {
                    acc += a[i * n + j].abs();
                }
            }
            acc
        };
        let thresh = if sweep < 3 {
            0.2 * sm / (n * n) as f64
        } else {
            0.0
        };

        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let g = 100.0 * apq.abs();
                // Flush entries that are negligible against both diagonals.
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a[p * n + q] = 0.0;
                } else if apq.abs() > thresh {
                    let h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        apq / h
                    } else {
                        let theta = 0.5 * h / apq;
                        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            -t
                        } else {
                            t
                        }
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    let h = t * apq;
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a[p * n + q] = 0.0;
                    let rotate = |m: &mut [f64], ij: usize, kl: usize| {
                        let g = m[ij];
                        let h = m[kl];
                        m[ij] = g - s * (h + g * tau);
                        m[kl] = h + s * (g - h * tau);
                    };
                    for j in 0..p {
                        rotate(&mut a, j * n + p, j * n + q);
                    }
                    for j in p + 1..q {
                        rotate(&mut a, p * n + j, j * n + q);
                    }
                    for j in q + 1..n {
                        rotate(&mut a, p * n + j, q * n + j);
                    }
                    for j in 0..n {
                        rotate(&mut v, j * n + p, j * n + q);
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    Err(Error::NoConvergence(off_diagonal_frobenius(&a, n)))
}

fn sorted_pairs(d: Vec<f64>, v: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[j].partial_cmp(&d[i]).expect("finite eigenvalues"));
    let values: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let mut vectors = vec![0.0; n * n];
    for (k, &col) in order.iter().enumerate() {
        for i in 0..n {
            vectors[k * n + i] = v[i * n + col];
        }
    }
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_closed_form() {
        let m = vec![0.5, 0.5, 0.5, 0.5];
        let vals = symmetric_eigenvalues(&m, 2).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!(vals[1].abs() < 1e-14);
    }

    #[test]
    fn diagonal_matrix_is_already_solved() {
        let m = vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0];
        let (vals, vecs) = symmetric_eigen_decomposition(&m, 3).unwrap();
        assert_eq!(vals, vec![3.0, 2.0, 1.0]);
        // Eigenvectors are signed unit basis vectors.
        assert!((vecs[0].abs() - 1.0).abs() < 1e-14);
        assert!((vecs[3 + 2].abs() - 1.0).abs() < 1e-14);
        assert!((vecs[6 + 1].abs() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            symmetric_eigenvalues(&[1.0, 2.0, 3.0], 2),
            Err(Error::InvalidArgument(..))
        ));
        let asym = vec![1.0, 0.5, 0.5 + 1e-9, 1.0];
        assert!(matches!(
            symmetric_eigenvalues(&asym, 2),
            Err(Error::NotSymmetric(..))
        ));
        // Asymmetry below tolerance is accepted.
        let nearly = vec![1.0, 0.5, 0.5 + 1e-13, 1.0];
        assert!(symmetric_eigenvalues(&nearly, 2).is_ok());
    }

    #[test]
    fn residuals_are_tiny() {
        use crate::oracle::{build_r2r_matrix, build_r2r_multiset};
        use crate::partitions::Partition;
        for m in [
            build_r2r_matrix(4).unwrap(),
            build_r2r_multiset(&Partition::new([2, 2, 1])).unwrap(),
        ] {
            let n = m.size();
            let flat = m.to_f64_matrix();
            let (vals, vecs) = symmetric_eigen_decomposition(&flat, n).unwrap();
            for k in 0..n {
                let v = &vecs[k * n..(k + 1) * n];
                let mut norm2 = 0.0;
                let mut res2 = 0.0;
                for i in 0..n {
                    let mut mv = 0.0;
                    for j in 0..n {
                        mv += flat[i * n + j] * v[j];
                    }
                    res2 += (mv - vals[k] * v[i]).powi(2);
                    norm2 += v[i] * v[i];
                }
                assert!((norm2 - 1.0).abs() < 1e-10, "eigenvector {k} not unit");
                assert!(
                    res2.sqrt() <= 1e-9,
                    "residual for pair {k}: {}",
                    res2.sqrt()
                );
            }
        }
    }

    #[test]
    fn handles_sign_and_clusters() {
        // Eigenvalues {2, 2, −1} from a symmetric matrix with a repeated
        // eigenvalue: J = ones(3) has spectrum {3, 0, 0}; 2I − J has
        // spectrum {−1, 2, 2}.
        let mut m = vec![0.0; 9];
        for i in 0..3 {
            for j in 0..3 {
                m[i * 3 + j] = if i == j { 2.0 - 1.0 } else { -1.0 };
            }
        }
        let vals = symmetric_eigenvalues(&m, 3).unwrap();
        assert!((vals[0] - 2.0).abs() < 1e-12);
        assert!((vals[1] - 2.0).abs() < 1e-12);
        assert!((vals[2] + 1.0).abs() < 1e-12);
    }
}

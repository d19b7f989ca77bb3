use crate::error::{Error, Result};

/// A square system `A x = b` with `A` stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSystem {
    n: usize,
    matrix: Vec<f64>,
    rhs: Vec<f64>,
}

impl DenseSystem {
    pub fn new(n: usize, matrix: Vec<f64>, rhs: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Usage("system must have at least one unknown".into()));
        }
        if matrix.len() != n * n || rhs.len() != n {
            return Err(Error::Usage(format!(
                "expected a {n}x{n} matrix and {n} right-hand side entries, got {} and {}",
                matrix.len(),
                rhs.len()
            )));
        }
        if matrix.iter().chain(rhs.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Usage("system has non-finite entries".into()));
        }
        Ok(Self { n, matrix, rhs })
    }

    pub fn from_rows(rows: &[Vec<f64>], rhs: Vec<f64>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Usage("matrix is not square".into()));
        }
        Self::new(n, rows.concat(), rhs)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.matrix[i * self.n + j]
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.matrix[i * self.n..(i + 1) * self.n]
    }

    /// Infinity norm of the matrix.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// `A x`
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// Solve by LU factorisation with partial pivoting.
pub fn solve_dense(sys: &DenseSystem) -> Result<Vec<f64>> {
    let n = sys.n;
    let mut a = sys.matrix.clone();
    let mut x = sys.rhs.clone();
    let scale = a.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tiny = scale * n as f64 * f64::EPSILON;

    for k in 0..n {
        let (p, pivot) = (k..n)
            .map(|i| (i, a[i * n + k].abs()))
            .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot <= tiny || pivot == 0.0 {
            return Err(Error::SingularMatrix { pivot: k });
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            x.swap(k, p);
        }
        let (upper, lower) = a.split_at_mut((k + 1) * n);
        let pivot_row = &upper[k * n..(k + 1) * n];
        let diag = pivot_row[k];
        let xk = x[k];
        for (r, row) in lower.chunks_exact_mut(n).enumerate() {
            let factor = row[k] / diag;
            if factor != 0.0 {
                row[k] = 0.0;
                for j in k + 1..n {
                    row[j] -= factor * pivot_row[j];
                }
                x[k + 1 + r] -= factor * xk;
            }
        }
    }

    for k in (0..n).rev() {
        let row = &a[k * n..(k + 1) * n];
        let s: f64 = row[k + 1..].iter().zip(&x[k + 1..]).map(|(a, b)| a * b).sum();
        x[k] = (x[k] - s) / row[k];
    }
    Ok(x)
}

/// Linear least squares `min ‖B c − y‖₂` by Householder QR; `basis` holds
/// the rows of `B`. Needs at least as many rows as columns.
pub fn least_squares(basis: &[Vec<f64>], y: &[f64]) -> Result<Vec<f64>> {
    let m = basis.len();
    let p = basis.first().map_or(0, Vec::len);
    if p == 0 || m < p || y.len() != m || basis.iter().any(|r| r.len() != p) {
        return Err(Error::Usage(format!(
            "least squares needs m >= p rows of equal length, got {m} rows for {p} unknowns"
        )));
    }
    let mut a: Vec<Vec<f64>> = basis.to_vec();
    let mut b = y.to_vec();
    for k in 0..p {
        let norm = (k..m).map(|i| a[i][k] * a[i][k]).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::SingularMatrix { pivot: k });
        }
        let alpha = if a[k][k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..m).map(|i| a[i][k]).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|t| t * t).sum();
        if vnorm2 == 0.0 {
            continue;
        }
        for j in k..p {
            let dot: f64 = (k..m).map(|i| v[i - k] * a[i][j]).sum();
            let f = 2.0 * dot / vnorm2;
            for i in k..m {
                a[i][j] -= f * v[i - k];
            }
        }
        let dot: f64 = (k..m).map(|i| v[i - k] * b[i]).sum();
        let f = 2.0 * dot / vnorm2;
        for i in k..m {
            b[i] -= f * v[i - k];
        }
    }
    let diag_max = (0..p).map(|k| a[k][k].abs()).fold(0.0, f64::max);
    let mut c = vec![0.0; p];
    for k in (0..p).rev() {
        if a[k][k].abs() <= diag_max * 1e-14 {
            return Err(Error::SingularMatrix { pivot: k });
        }
        let s: f64 = (k + 1..p).map(|j| a[k][j] * c[j]).sum();
        c[k] = (b[k] - s) / a[k][k];
    }
    Ok(c)
}

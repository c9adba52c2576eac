//! Symmetric tridiagonal pencil (H, W) with W diagonal and positive.

#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalPencil {
    /// Diagonal of H.
    pub diag: Vec<f64>,
    /// Sub/super-diagonal of H (length n − 1).
    pub off: Vec<f64>,
    /// Diagonal weight matrix W.
    pub weight: Vec<f64>,
}

impl TridiagonalPencil {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of generalized eigenvalues strictly below `e` (Sylvester inertia
    /// of H − eW from its LDLᵀ pivots).
    pub fn count_below(&self, e: f64) -> usize {
        let mut count = 0;
        let mut pivot = 1.0;
        for i in 0..self.len() {
            let a = self.diag[i] - e * self.weight[i];
            pivot = if i == 0 {
                a
            } else {
                let b = self.off[i - 1];
                let prev = if pivot == 0.0 { f64::EPSILON * b.abs().max(1e-300) } else { pivot };
                a - b * b / prev
            };
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Lower bound on the spectrum: min H_ii − Σ|off| over W_ii (Gershgorin on W^{−1/2} H W^{−1/2}).
    pub fn gershgorin_lower(&self) -> f64 {
        (0..self.len())
            .map(|i| {
                let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
                let right = self.off.get(i).map_or(0.0, |b| b.abs());
                let wl = if i > 0 { (self.weight[i] * self.weight[i - 1]).sqrt() } else { 1.0 };
                let wr = if i + 1 < self.len() { (self.weight[i] * self.weight[i + 1]).sqrt() } else { 1.0 };
                self.diag[i] / self.weight[i] - left / wl - right / wr
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// The `index`-th eigenvalue (0-based) inside [lo, hi] by bisection on the count.
    pub fn eigenvalue(&self, index: usize, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Solves (H − σW) x = rhs by the Thomas algorithm.
    pub fn solve_shifted(&self, sigma: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        let mut c_prime = vec![0.0; n];
        let mut d_prime = vec![0.0; n];
        let tiny = 1e-300;
        let mut denom = self.diag[0] - sigma * self.weight[0];
        if denom == 0.0 {
            denom = tiny;
        }
        if n > 1 {
            c_prime[0] = self.off[0] / denom;
        }
        d_prime[0] = rhs[0] / denom;
        for i in 1..n {
            let b = self.off[i - 1];
            let mut m = self.diag[i] - sigma * self.weight[i] - b * c_prime[i - 1];
            if m == 0.0 {
                m = tiny;
            }
            if i + 1 < n {
                c_prime[i] = self.off[i] / m;
            }
            d_prime[i] = (rhs[i] - b * d_prime[i - 1]) / m;
        }
        let mut x = vec![0.0; n];
        x[n - 1] = d_prime[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = d_prime[i] - c_prime[i] * x[i + 1];
        }
        x
    }

    /// Eigenvector for an eigenvalue estimate by shifted inverse iteration.
    pub fn eigenvector(&self, eigenvalue: f64) -> Vec<f64> {
        let shift = eigenvalue - 1e-10 * eigenvalue.abs().max(1e-3);
        let mut x = vec![1.0; self.len()];
        for _ in 0..4 {
            let rhs: Vec<f64> = x.iter().zip(&self.weight).map(|(v, w)| v * w).collect();
            x = self.solve_shifted(shift, &rhs);
            let norm = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            if norm > 0.0 && norm.is_finite() {
                x.iter_mut().for_each(|v| *v /= norm);
            }
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Dirichlet Laplacian on n interior points of (0, π): eigenvalues (4/h²) sin²(kh/2).
    fn laplacian(n: usize) -> (TridiagonalPencil, f64) {
        let h = std::f64::consts::PI / (n + 1) as f64;
        (
            TridiagonalPencil {
                diag: vec![2.0 / (h * h); n],
                off: vec![-1.0 / (h * h); n - 1],
                weight: vec![1.0; n],
            },
            h,
        )
    }

    #[test]
    fn bisection_matches_analytic_eigenvalues() {
        let (m, h) = laplacian(100);
        let lo = m.gershgorin_lower();
        for k in 0..5 {
            let want = 4.0 / (h * h) * ((k + 1) as f64 * h / 2.0).sin().powi(2);
            let got = m.eigenvalue(k, lo, 10.0 * want + 10.0);
            assert!((got - want).abs() < 1e-10 * want, "{k}: {got} vs {want}");
        }
    }

    #[test]
    fn counts_are_monotone() {
        let (m, _) = laplacian(50);
        let mut last = 0;
        for i in 0..100 {
            let c = m.count_below(f64::from(i) * 0.5);
            assert!(c >= last);
            last = c;
        }
        assert_eq!(m.count_below(m.gershgorin_lower() - 1.0), 0);
    }

    #[test]
    fn weights_scale_eigenvalues() {
        let (mut m, _) = laplacian(60);
        let e0 = m.eigenvalue(0, 0.0, 10.0);
        m.weight.iter_mut().for_each(|w| *w = 2.0);
        let e1 = m.eigenvalue(0, 0.0, 10.0);
        assert!((e1 - e0 / 2.0).abs() < 1e-12);
    }

    #[test]
    fn thomas_solves_system() {
        let (m, _) = laplacian(20);
        let x_true: Vec<f64> = (0..20).map(|i| (f64::from(i) * 0.3).sin() + 1.0).collect();
        let rhs: Vec<f64> = (0..20)
            .map(|i| {
                let mut v = (m.diag[i] - 0.7) * x_true[i];
                if i > 0 {
                    v += m.off[i - 1] * x_true[i - 1];
                }
                if i + 1 < 20 {
                    v += m.off[i] * x_true[i + 1];
                }
                v
            })
            .collect();
        let x = m.solve_shifted(0.7, &rhs);
        for (a, b) in x.iter().zip(&x_true) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn inverse_iteration_finds_sine_modes() {
        let (m, _) = laplacian(200);
        for k in 0..4 {
            let e = m.eigenvalue(k, 0.0, 100.0);
            let v = m.eigenvector(e);
            let changes = v.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
            assert_eq!(changes, k);
        }
    }
}

//! Composite Gauss–Legendre quadrature on the half line.

use std::f64::consts::PI;

/// Gauss–Legendre nodes and weights on [−1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let nf = order as f64;
        for i in 0..(order + 1) / 2 {
            // Tricomi initial guess, then Newton on P_n
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre(order, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(order, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Integrates f over (0, ∞) for integrands that may carry a fractional power
/// at t = 0 and decay like e^{−rate·t}.
///
/// Panels are graded geometrically toward 0 and uniform on [1, t_max]; the
/// panel count doubles until two successive estimates agree to `rel_tol`.
pub fn integrate_half_line<F: Fn(f64) -> f64>(f: F, rate: f64, rel_tol: f64) -> f64 {
    let rule = GaussLegendre::new(20);
    // e^{−rate·t_max} ≈ 1e−24
    let t_max = (55.0 / rate).max(2.0);
    let mut panels = 8usize;
    let mut graded = 12usize;
    let mut previous = composite(&rule, &f, t_max, panels, graded);
    for _ in 0..14 {
        panels *= 2;
        graded += 6;
        let estimate = composite(&rule, &f, t_max, panels, graded);
        if (estimate - previous).abs() <= rel_tol * estimate.abs() {
            return estimate;
        }
        previous = estimate;
    }
    previous
}

fn composite<F: Fn(f64) -> f64>(
    rule: &GaussLegendre,
    f: &F,
    t_max: f64,
    panels: usize,
    graded: usize,
) -> f64 {
    let mut total = 0.0;
    // [0, 2^-graded], then [2^-(j+1), 2^-j] up to 1
    let mut lo = 0.0;
    for j in (0..=graded).rev() {
        let hi = 0.5f64.powi(j as i32);
        total += rule.integrate(lo, hi, f);
        lo = hi;
    }
    let width = (t_max - 1.0) / panels as f64;
    for p in 0..panels {
        let a = 1.0 + p as f64 * width;
        total += rule.integrate(a, a + width, f);
    }
    total
}

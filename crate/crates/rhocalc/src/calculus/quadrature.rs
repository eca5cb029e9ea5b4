//! Gauss-Legendre rules on [0, 1], computed by Newton iteration on the
//! Legendre polynomials.

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [0, 1].
/// Exact for polynomial integrands of degree <= 2n - 1.
pub fn gauss_legendre_unit(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        // Chebyshev-like initial guess on [-1, 1]
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let step = p / d;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        // map [-1, 1] -> [0, 1]; the guesses descend in x, so nodes ascend
        nodes.push(0.5 * (1.0 - x));
        weights.push(0.5 * w);
    }
    (nodes, weights)
}

/// Value and derivative of P_n by the three-term recurrence.
fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn integrate(n: usize, f: impl Fn(f64) -> f64) -> f64 {
        let (nodes, weights) = gauss_legendre_unit(n);
        nodes.iter().zip(&weights).map(|(x, w)| w * f(*x)).sum()
    }

    #[test]
    fn weights_sum_to_one() {
        for n in 1..=8 {
            let (_, w) = gauss_legendre_unit(n);
            assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn exact_for_polynomials_up_to_degree_2n_minus_1 () {
        for n in 2..=6 {
            for deg in 0..=(2 * n - 1) {
                let exact = 1.0 / (deg as f64 + 1.0);
                let got = integrate(n, |x| x.powi(deg as i32));
                assert!((got - exact).abs() < 1e-13, "n = {n}, degree {deg}");
            }
        }
    }

    #[test]
    fn two_point_rule_matches_known_nodes() {
        let (x, w) = gauss_legendre_unit(2);
        let c = 0.5 / 3.0f64.sqrt();
        assert!((x[0] - (0.5 - c)).abs() < 1e-14);
        assert!((x[1] - (0.5 + c)).abs() < 1e-14);
        assert!((w[0] - 0.5).abs() < 1e-14);
        assert!((w[1] - 0.5).abs() < 1e-14);
    }
}

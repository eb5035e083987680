//! Numerical root numbers from the local functional equation.
//!
//! For a test function `f` the zeta integrals satisfy
//! `Z(f^, ρ^∨, 1 - s) = γ(s, ρ, ψ) Z(f, ρ, s)` with
//! `γ(s) = ε(s) L(1 - s, ρ^∨) / L(s, ρ)`. Both zeta integrals and the Fourier
//! transform `f^` are evaluated by quadrature, so nothing here consults the
//! exponent table in the parent module.
//!
//! Characters of `R^×` use `x^a exp(-πx²)`. For `D_k ⊗ |.|^{it}` the root
//! number is `λ(C/R, ψ) ε(χ, ψ_C)` where `χ(z) = (z/|z|)^{-k} |z|_C^{it}`,
//! the test function is `z^k exp(-2π|z|²)`, and
//! `λ(C/R, ψ) = ε(1, ψ) ε(sgn, ψ) / ε(1_C, ψ_C)` is itself computed
//! numerically.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num::Complex;

use super::EpsError;
use crate::weilrep::IrredRep;

type C64 = Complex<f64>;

const CENTER: f64 = 0.5;

/// Composite Gauss-Legendre rule.
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for j in 2..=n {
                    let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        Self { nodes, weights }
    }

    /// Sum over `panels` equal panels of `[a, b]`.
    pub fn composite<F: FnMut(f64) -> C64>(&self, mut f: F, a: f64, b: f64, panels: usize) -> C64 {
        let h = (b - a) / panels as f64;
        let mut total = C64::new(0.0, 0.0);
        for p in 0..panels {
            let lo = a + p as f64 * h;
            let mid = lo + h / 2.0;
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                total += f(mid + h / 2.0 * x) * *w;
            }
        }
        total * (h / 2.0)
    }

    /// Doubles the panel count until two successive sums agree within
    /// `abs_tol + rel_tol * |I|`.
    #[allow(clippy::too_many_arguments)]
    pub fn adaptive<F: FnMut(f64) -> C64>(
        &self,
        mut f: F,
        a: f64,
        b: f64,
        start_panels: usize,
        max_panels: usize,
        abs_tol: f64,
        rel_tol: f64,
    ) -> Result<C64, EpsError> {
        let mut panels = start_panels.max(1);
        let mut prev = self.composite(&mut f, a, b, panels);
        while panels < max_panels {
            panels *= 2;
            let next = self.composite(&mut f, a, b, panels);
            if (next - prev).norm() <= abs_tol + rel_tol * next.norm() {
                return Ok(next);
            }
            prev = next;
        }
        Err(EpsError::QuadratureFailure(format!(
            "no convergence on [{a}, {b}] with {max_panels} panels"
        )))
    }
}

/// The additive character `exp(2πix)`.
fn psi(x: f64) -> C64 {
    C64::from_polar(1.0, 2.0 * PI * x)
}

struct RealOracle {
    rule: GaussLegendre,
}

impl RealOracle {
    // log-variable window for ∫ over x = ±e^v; the Gaussian kills v > 2.1
    const V_LO: f64 = -80.0;
    const V_HI: f64 = 2.1;
    const X_MAX: f64 = 7.0;

    fn test_function(a: u8) -> impl Fn(f64) -> f64 {
        move |x| if a == 0 { (-PI * x * x).exp() } else { x * (-PI * x * x).exp() }
    }

    /// `∫_{R^×} g(x) sgn(x)^a |x|^z d^×x`.
    fn zeta<G: Fn(f64) -> C64>(&self, g: G, a: u8, z: C64) -> Result<C64, EpsError> {
        let integrand = |v: f64| {
            let x = v.exp();
            let sign = if a == 0 { 1.0 } else { -1.0 };
            (g(x) + g(-x) * sign) * (z * v).exp()
        };
        self.rule.adaptive(integrand, Self::V_LO, Self::V_HI, 8, 1024, 1e-14, 1e-11)
    }

    /// `f^(y) = ∫ f(x) ψ(xy) dx`.
    fn fourier(&self, a: u8, y: f64) -> C64 {
        let f = Self::test_function(a);
        self.rule.composite(|x| psi(x * y) * f(x), -Self::X_MAX, Self::X_MAX, 64)
    }

    fn epsilon(&self, a: u8, t: f64) -> Result<C64, EpsError> {
        let f = Self::test_function(a);
        let z = self.zeta(|x| C64::new(f(x), 0.0), a, C64::new(CENTER, t))?;
        let z_dual = self.zeta(|y| self.fourier(a, y), a, C64::new(1.0 - CENTER, -t))?;
        let gamma = z_dual / z;
        let l = |t| gamma_r(C64::new(CENTER + a as f64, t));
        Ok(gamma * l(t)? / l(-t)?)
    }
}

/// `Γ_R(z) = π^{-z/2} Γ(z/2)`.
fn gamma_r(z: C64) -> Result<C64, EpsError> {
    let g = super::gamma::gamma(z / 2.0).ok_or(EpsError::PoleAt(z.re))?;
    Ok(C64::new(PI, 0.0).powc(-z / 2.0) * g)
}

/// `Γ_C(z) = 2 (2π)^{-z} Γ(z)`.
fn gamma_c(z: C64) -> Result<C64, EpsError> {
    let g = super::gamma::gamma(z).ok_or(EpsError::PoleAt(z.re))?;
    Ok(2.0 * C64::new(2.0 * PI, 0.0).powc(-z) * g)
}

struct ComplexOracle {
    rule: GaussLegendre,
    k: u32,
    // 1D grid for the Fourier transform: (x, weight · exp(-2πx²))
    line: Vec<(f64, f64)>,
    binom: Vec<f64>,
}

impl ComplexOracle {
    const R_MAX: f64 = 2.6;
    const X_MAX: f64 = 5.0;
    const LINE_PANELS: usize = 48;

    fn new(k: u32) -> Self {
        let rule = GaussLegendre::new(20);
        let h = 2.0 * Self::X_MAX / Self::LINE_PANELS as f64;
        let mut line = Vec::new();
        for p in 0..Self::LINE_PANELS {
            let mid = -Self::X_MAX + (p as f64 + 0.5) * h;
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                let x = mid + h / 2.0 * x;
                line.push((x, w * h / 2.0 * (-2.0 * PI * x * x).exp()));
            }
        }
        let mut binom = vec![1.0];
        for j in 1..=k as usize {
            let prev = binom[j - 1];
            binom.push(prev * (k as usize + 1 - j) as f64 / j as f64);
        }
        Self { rule, k, line, binom }
    }

    /// `g_j(u) = ∫ x^j exp(-2πx²) ψ(2xu) dx` for `j = 0..=k`.
    fn moments(&self, u: f64) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); self.k as usize + 1];
        for &(x, w) in &self.line {
            let mut term = psi(2.0 * x * u) * w;
            for g in out.iter_mut() {
                *g += term;
                term *= x;
            }
        }
        out
    }

    /// `f^(w) = ∫ f(z) ψ(tr(zw)) 2 dx dy` for `f(z) = z^k exp(-2π|z|²)`.
    /// With `z = x + iy`, `w = a + ib`: `tr(zw) = 2(xa - yb)`, and
    /// `(x + iy)^k` is expanded binomially, so the integral factors.
    fn fourier(&self, w: C64) -> C64 {
        let gx = self.moments(w.re);
        let gy = self.moments(-w.im);
        let k = self.k as usize;
        let mut total = C64::new(0.0, 0.0);
        let mut ipow = C64::new(1.0, 0.0);
        for j in 0..=k {
            // term x^{k-j} (iy)^j
            total += gx[k - j] * gy[j] * ipow * self.binom[j];
            ipow *= C64::new(0.0, 1.0);
        }
        total * 2.0
    }

    fn v_lo(&self) -> f64 {
        // the integrands decay like exp((k + 1) v) as v → -∞
        -38.0 / (self.k as f64 + 1.0) - 2.0
    }

    /// `∫_{C^×} g(z) (z/|z|)^{-n} |z|_C^{s'} d^×z` with `d^×z = dv dα`,
    /// `z = e^{v + iα}`, angular part by the trapezoid rule on `m` points.
    fn zeta<G: Fn(C64) -> C64>(&self, g: G, n: i64, s: C64, v_hi: f64) -> Result<C64, EpsError> {
        let m = 2 * self.k as usize + 3;
        let integrand = |v: f64| {
            let r = v.exp();
            let mut acc = C64::new(0.0, 0.0);
            for j in 0..m {
                let alpha = 2.0 * PI * j as f64 / m as f64;
                let z = C64::from_polar(r, alpha);
                acc += g(z) * C64::from_polar(1.0, -(n as f64) * alpha);
            }
            acc * (2.0 * PI / m as f64) * (s * 2.0 * v).exp()
        };
        self.rule.adaptive(integrand, self.v_lo(), v_hi, 4, 256, 1e-14, 1e-10)
    }

    /// `ε(χ, ψ_C)` for `χ(z) = (z/|z|)^{-k} |z|_C^{it}`.
    fn epsilon(&self, t: f64) -> Result<C64, EpsError> {
        let k = self.k;
        let f = |z: C64| z.powu(k) * (-2.0 * PI * z.norm_sqr()).exp();
        let v_hi = Self::R_MAX.ln();
        let z = self.zeta(f, k as i64, C64::new(CENTER, t), v_hi)?;
        let z_dual = self.zeta(|w| self.fourier(w), -(k as i64), C64::new(1.0 - CENTER, -t), v_hi)?;
        let gamma = z_dual / z;
        let l = |t| gamma_c(C64::new(CENTER + k as f64 / 2.0, t));
        Ok(gamma * l(t)? / l(-t)?)
    }
}

// λ(C/R, ψ), shared by every D_k
static LAMBDA: OnceLock<C64> = OnceLock::new();

/// `ε(1/2, ρ, ψ)` computed numerically; agrees with a fourth root of unity
/// to about `1e-6` or better.
pub fn eps_numeric_oracle(rho: &IrredRep) -> Result<C64, EpsError> {
    let real = RealOracle { rule: GaussLegendre::new(20) };
    match *rho {
        IrredRep::Char { a, t } => real.epsilon(a, t.to_f64()),
        IrredRep::Disc { k, t } => {
            let lambda = match LAMBDA.get() {
                Some(l) => *l,
                None => {
                    let l = real.epsilon(0, 0.0)? * real.epsilon(1, 0.0)?
                        / ComplexOracle::new(0).epsilon(0.0)?;
                    *LAMBDA.get_or_init(|| l)
                }
            };
            Ok(lambda * ComplexOracle::new(k).epsilon(t.to_f64())?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_polynomials() {
        let rule = GaussLegendre::new(10);
        let v = rule.composite(|x| C64::new(x.powi(19) + x.powi(4), 0.0), -1.0, 1.0, 1);
        assert!((v.re - 0.4).abs() < 1e-14);
        let e = rule.composite(|x| C64::new(x.exp(), 0.0), 0.0, 1.0, 3);
        assert!((e.re - (1f64.exp() - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn adaptive_reports_failure() {
        let rule = GaussLegendre::new(4);
        let r = rule.adaptive(|x| C64::new((1e4 * x).sin() / x.max(1e-300), 0.0), 0.0, 1.0, 1, 4, 0.0, 1e-15);
        assert!(matches!(r, Err(EpsError::QuadratureFailure(_))));
    }

    #[test]
    fn gaussian_is_self_dual() {
        let real = RealOracle { rule: GaussLegendre::new(20) };
        for &y in &[0.0, 0.3, 1.1] {
            let v = real.fourier(0, y);
            assert!((v - C64::new((-PI * y * y).exp(), 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn trivial_character() {
        let e = eps_numeric_oracle(&IrredRep::trivial()).unwrap();
        assert!((e - C64::new(1.0, 0.0)).norm() < 1e-8, "{e}");
    }

    #[test]
    fn sign_character() {
        let e = eps_numeric_oracle(&IrredRep::sgn()).unwrap();
        assert!((e - C64::new(0.0, 1.0)).norm() < 1e-8, "{e}");
    }
}

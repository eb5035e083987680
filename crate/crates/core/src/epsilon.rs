//! Archimedean L-factors and root numbers at the centre `s = 1/2`.
//!
//! Root numbers are stored as exponents of `i` modulo 4. The additive
//! character is fixed to `ψ(x) = exp(2πix)` with its self-dual Haar measure;
//! the per-irreducible exponents below are the ones certified by
//! [`oracle::eps_numeric_oracle`].

pub mod gamma;
pub mod oracle;

use std::fmt;

use num::Complex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quadspace::Sign;
use crate::weilrep::{IrredRep, WeilRep};

pub use oracle::eps_numeric_oracle;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EpsError {
    #[error("root number i^{0} is not real; input is not of symplectic type")]
    NotSymplectic(u8),
    #[error("L-factor has a pole at s = {0}")]
    PoleAt(f64),
    #[error("quadrature did not converge: {0}")]
    QuadratureFailure(String),
}

/// The additive character used throughout. Only one convention is supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PsiConvention;

impl PsiConvention {
    /// `ψ(x) = exp(2πi x)`.
    pub fn eval(&self, x: f64) -> Complex<f64> {
        Complex::from_polar(1.0, 2.0 * std::f64::consts::PI * x)
    }
}

/// The fourth root of unity `i^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct FourthRoot(u8);

impl FourthRoot {
    pub const ONE: FourthRoot = FourthRoot(0);

    pub fn from_exponent(e: i64) -> Self {
        FourthRoot(e.rem_euclid(4) as u8)
    }

    pub fn exponent(&self) -> u8 {
        self.0
    }

    pub fn is_real(&self) -> bool {
        self.0.is_multiple_of(2)
    }

    pub fn to_sign(self) -> Option<Sign> {
        match self.0 {
            0 => Some(Sign::Plus),
            2 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_complex(self) -> Complex<f64> {
        match self.0 {
            0 => Complex::new(1.0, 0.0),
            1 => Complex::new(0.0, 1.0),
            2 => Complex::new(-1.0, 0.0),
            _ => Complex::new(0.0, -1.0),
        }
    }

    pub fn label(&self) -> &'static str {
        ["1", "i", "-1", "-i"][self.0 as usize]
    }
}

impl std::ops::Mul for FourthRoot {
    type Output = FourthRoot;

    fn mul(self, rhs: FourthRoot) -> FourthRoot {
        FourthRoot((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for FourthRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `ε(1/2, ρ, ψ)` of an irreducible: `i^a` for `sgn^a|.|^{it}`, `i^{k+1}`
/// for `D_k ⊗ |.|^{it}`.
pub fn eps_irreducible(rho: &IrredRep) -> FourthRoot {
    match *rho {
        IrredRep::Char { a, .. } => FourthRoot::from_exponent(a as i64),
        IrredRep::Disc { k, .. } => FourthRoot::from_exponent(k as i64 + 1),
    }
}

/// `ε(1/2, A, ψ)`, multiplicative over direct sums.
pub fn eps_half(a: &WeilRep) -> FourthRoot {
    let e: i64 = a
        .summands()
        .map(|(r, m)| eps_irreducible(r).exponent() as i64 * m as i64)
        .sum();
    FourthRoot::from_exponent(e)
}

/// The root number of a representation known to be symplectic, as a sign.
pub fn eps_symplectic(a: &WeilRep) -> Result<Sign, EpsError> {
    let e = eps_half(a);
    e.to_sign().ok_or(EpsError::NotSymplectic(e.exponent()))
}

/// `L(s, ρ)` as a complex number.
///
/// `Γ_R(s + it + a)` for characters and `Γ_C(s + it + k/2)` for `D_k`, where
/// `Γ_R(z) = π^{-z/2} Γ(z/2)` and `Γ_C(z) = 2 (2π)^{-z} Γ(z)`.
pub fn l_factor(rho: &IrredRep, s: f64) -> Result<Complex<f64>, EpsError> {
    let t = rho.twist().to_f64();
    let pi = std::f64::consts::PI;
    match *rho {
        IrredRep::Char { a, .. } => {
            let z = Complex::new(s + a as f64, t);
            let g = gamma::gamma(z / 2.0).ok_or(EpsError::PoleAt(s))?;
            Ok(Complex::new(pi, 0.0).powc(-z / 2.0) * g)
        }
        IrredRep::Disc { k, .. } => {
            let z = Complex::new(s + k as f64 / 2.0, t);
            let g = gamma::gamma(z).ok_or(EpsError::PoleAt(s))?;
            Ok(2.0 * Complex::new(2.0 * pi, 0.0).powc(-z) * g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weilrep::Twist;

    #[test]
    fn eps_half_examples() {
        assert_eq!(eps_half(&WeilRep::irreducible(IrredRep::trivial())).exponent(), 0);
        assert_eq!(eps_half(&WeilRep::irreducible(IrredRep::d(1))).exponent(), 2);
        let a = WeilRep::from_irreducibles([IrredRep::d(1), IrredRep::d(3)]);
        assert_eq!(eps_half(&a).exponent(), 2);
        assert_eq!(eps_half(&a).label(), "-1");
        assert_eq!(eps_half(&WeilRep::empty()), FourthRoot::ONE);
    }

    #[test]
    fn eps_ignores_twist() {
        let t = Twist::new(1, 2);
        assert_eq!(eps_irreducible(&IrredRep::disc(4, t).unwrap()).exponent(), 1);
        assert_eq!(eps_irreducible(&IrredRep::char(1, t).unwrap()).exponent(), 1);
    }

    #[test]
    fn eps_symplectic_examples() {
        assert_eq!(eps_symplectic(&WeilRep::irreducible(IrredRep::d(1))), Ok(Sign::Minus));
        assert_eq!(eps_symplectic(&WeilRep::irreducible(IrredRep::d(3))), Ok(Sign::Plus));
        assert_eq!(eps_symplectic(&WeilRep::empty()), Ok(Sign::Plus));
        assert_eq!(
            eps_symplectic(&WeilRep::irreducible(IrredRep::d(2))),
            Err(EpsError::NotSymplectic(3))
        );
    }

    #[test]
    fn l_factor_examples() {
        let one = l_factor(&IrredRep::trivial(), 1.0).unwrap();
        assert!((one - Complex::new(1.0, 0.0)).norm() < 1e-12);
        assert!(matches!(l_factor(&IrredRep::trivial(), 0.0), Err(EpsError::PoleAt(_))));
        let d1 = l_factor(&IrredRep::d(1), 0.5).unwrap();
        assert!((d1 - Complex::new(1.0 / std::f64::consts::PI, 0.0)).norm() < 1e-12);
        // sgn has no pole at 0: Γ_R(1) = 1
        let s0 = l_factor(&IrredRep::sgn(), 0.0).unwrap();
        assert!((s0 - Complex::new(1.0, 0.0)).norm() < 1e-12);
    }
}

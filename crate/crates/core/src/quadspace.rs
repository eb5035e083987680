//! Non-degenerate real quadratic spaces, recorded by signature.
//!
//! Over the reals the signature `(p, q)` is a complete invariant, so every
//! operation here is arithmetic on two non-negative integers.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("({w}, {v}) is not an admissible pair")]
    NotAdmissible { w: QuadSpace, v: QuadSpace },
}

/// A sign in `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// `(-1)^e`.
    pub fn pow_neg_one(e: i64) -> Self {
        Self::from_parity(e.rem_euclid(2) == 1)
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, |a, b| a * b)
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.to_i8()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("expected +1 or -1, got {other}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A non-degenerate quadratic space over the reals with positive index `p`
/// and negative index `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadSpace {
    pub p: u32,
    pub q: u32,
}

impl QuadSpace {
    pub const ZERO: QuadSpace = QuadSpace { p: 0, q: 0 };

    pub const fn new(p: u32, q: u32) -> Self {
        Self { p, q }
    }

    /// The line of the given sign.
    pub const fn line(sign: Sign) -> Self {
        match sign {
            Sign::Plus => Self::new(1, 0),
            Sign::Minus => Self::new(0, 1),
        }
    }

    /// `r` hyperbolic planes.
    pub const fn split(r: u32) -> Self {
        Self::new(r, r)
    }

    pub fn dim(&self) -> u32 {
        self.p + self.q
    }

    /// `p - q`.
    pub fn delta(&self) -> i64 {
        self.p as i64 - self.q as i64
    }

    pub fn is_odd_dim(&self) -> bool {
        self.dim() % 2 == 1
    }

    /// Orthogonal direct sum.
    pub fn oplus(&self, other: &QuadSpace) -> QuadSpace {
        QuadSpace::new(self.p + other.p, self.q + other.q)
    }

    /// The orthogonal complement of `sub` inside `self`, if `sub` embeds.
    ///
    /// By Witt cancellation a space embeds isometrically iff both indices
    /// are dominated.
    pub fn complement(&self, sub: &QuadSpace) -> Option<QuadSpace> {
        Some(QuadSpace::new(
            self.p.checked_sub(sub.p)?,
            self.q.checked_sub(sub.q)?,
        ))
    }

    /// The space with signature `(dim + delta) / 2, (dim - delta) / 2`, if
    /// those are non-negative integers.
    pub fn from_dim_delta(dim: u32, delta: i64) -> Option<QuadSpace> {
        let dim = dim as i64;
        if delta.abs() > dim || (dim - delta).rem_euclid(2) != 0 {
            return None;
        }
        Some(QuadSpace::new(((dim + delta) / 2) as u32, ((dim - delta) / 2) as u32))
    }

    /// All signatures of the given dimension.
    pub fn all_of_dim(dim: u32) -> impl Iterator<Item = QuadSpace> {
        (0..=dim).map(move |p| QuadSpace::new(p, dim - p))
    }
}

impl fmt::Display for QuadSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// `(-1)^{floor(dim/2)} (-1)^q`.
pub fn discriminant(v: &QuadSpace) -> Sign {
    Sign::pow_neg_one((v.dim() / 2) as i64) * Sign::pow_neg_one(v.q as i64)
}

/// Signatures of the same dimension with `p' ≡ p (mod 2)`, in increasing `p'`.
pub fn pure_inner_forms(v: &QuadSpace) -> Vec<QuadSpace> {
    QuadSpace::all_of_dim(v.dim())
        .filter(|w| w.p % 2 == v.p % 2)
        .collect()
}

pub fn is_quasi_split(v: &QuadSpace) -> bool {
    let delta = v.delta();
    if v.is_odd_dim() {
        delta.abs() <= 1
    } else {
        matches!(delta, 0 | 2 | -2)
    }
}

/// Quasi-split members of the pure inner class of `v`, in increasing `p`.
///
/// There is exactly one unless `dim` is even and `p - q ≡ 2 (mod 4)`, in
/// which case both `(m, m+2)` and `(m+2, m)` are returned.
pub fn quasi_split_forms(v: &QuadSpace) -> Vec<QuadSpace> {
    pure_inner_forms(v)
        .into_iter()
        .filter(is_quasi_split)
        .collect()
}

/// The quasi-split pure inner form representing the inner class of `v`.
///
/// When two quasi-split pure inner forms exist (`dim` even, `p - q ≡ 2 mod 4`)
/// the one sharing the sign of `p - q` with `v` is returned; for `v` already
/// quasi-split this is `v` itself.
pub fn quasi_split_form(v: &QuadSpace) -> QuadSpace {
    let forms = quasi_split_forms(v);
    match forms.as_slice() {
        [only] => *only,
        [a, b] => {
            if v.delta() >= 0 {
                *a.max(b)
            } else {
                *a.min(b)
            }
        }
        _ => unreachable!("inner class of {v} has {} quasi-split forms", forms.len()),
    }
}

/// Kottwitz sign of `SO(p, q)`.
pub fn kottwitz_sign(v: &QuadSpace) -> Sign {
    if !v.is_odd_dim() {
        return Sign::Plus;
    }
    let d = v.delta();
    Sign::pow_neg_one((d * d - 1) / 8)
}

/// The decomposition `V = W ⊥ D ⊥ Z` of an admissible pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "PairRepr", try_from = "PairRepr")]
pub struct AdmissiblePair {
    pub w: QuadSpace,
    pub v: QuadSpace,
    /// Half the dimension of the split part `Z`.
    pub r: u32,
    /// Signature of the anisotropic line `D`.
    pub d_sign: Sign,
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    #[serde(rename = "W")]
    w: QuadSpace,
    #[serde(rename = "V")]
    v: QuadSpace,
}

impl From<AdmissiblePair> for PairRepr {
    fn from(a: AdmissiblePair) -> Self {
        PairRepr { w: a.w, v: a.v }
    }
}

impl TryFrom<PairRepr> for AdmissiblePair {
    type Error = QuadError;

    fn try_from(r: PairRepr) -> Result<Self, QuadError> {
        AdmissiblePair::new(r.w, r.v)
    }
}

impl AdmissiblePair {
    pub fn new(w: QuadSpace, v: QuadSpace) -> Result<Self, QuadError> {
        is_admissible_pair(&w, &v).ok_or(QuadError::NotAdmissible { w, v })
    }

    /// `W^⊥ = D ⊥ Z`.
    pub fn orthogonal_complement(&self) -> QuadSpace {
        QuadSpace::line(self.d_sign).oplus(&QuadSpace::split(self.r))
    }

    pub fn line(&self) -> QuadSpace {
        QuadSpace::line(self.d_sign)
    }
}

pub fn is_admissible_pair(w: &QuadSpace, v: &QuadSpace) -> Option<AdmissiblePair> {
    let rest = v.complement(w)?;
    if rest.dim() % 2 == 0 {
        return None;
    }
    let d_sign = match rest.delta() {
        1 => Sign::Plus,
        -1 => Sign::Minus,
        _ => return None,
    };
    let r = (rest.dim() - 1) / 2;
    Some(AdmissiblePair { w: *w, v: *v, r, d_sign })
}

/// The pairs `(W_α, W_α ⊥ W^⊥)` indexed by the pure inner forms `W_α` of `W`.
pub fn relevant_pairs(w: &QuadSpace, v: &QuadSpace) -> Result<Vec<AdmissiblePair>, QuadError> {
    let base = AdmissiblePair::new(*w, *v)?;
    let perp = base.orthogonal_complement();
    Ok(pure_inner_forms(w)
        .into_iter()
        .map(|wa| {
            is_admissible_pair(&wa, &wa.oplus(&perp))
                .expect("W_α ⊥ D ⊥ Z is admissible by construction")
        })
        .collect())
}

//! Regular semisimple conjugacy classes of real special orthogonal groups.
//!
//! A class is parameterised by a datum `κ` (a list of factors
//! `(F_{±i}, F_i, u_i)`) together with a sign vector `c` on the factors where
//! `F_i = C`. The verifiers work with [`FactorCounts`] and explicit sign
//! vectors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num::rational::Rational64;
use num::{Complex, One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quadspace::{
    is_admissible_pair, is_quasi_split, kottwitz_sign, pure_inner_forms, quasi_split_form,
    QuadError, QuadSpace, Sign,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjError {
    #[error("sign vector has {found} entries, datum has {expected} CField factors")]
    MismatchedSignVector { expected: usize, found: usize },
    #[error("dimension {dim} has the wrong parity for this check (line given: {line})")]
    BadParity { dim: u32, line: bool },
    #[error(transparent)]
    NotAdmissible(#[from] QuadError),
    #[error("datum is not in Ξ({d_v}, {d_w})")]
    NotInXi { d_v: u32, d_w: u32 },
    #[error("invalid factor: {0}")]
    BadFactor(String),
}

/// One factor of a datum, with its norm-one element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorDatum {
    /// `F_{±i} = R`, `F_i = C`, `u = e^{iπr}` with `r = theta` in `[0, 2)`.
    CField { theta: Rational64 },
    /// `F_{±i} = R`, `F_i = R ⊕ R`, `u = (t, 1/t)`.
    RSplit { t: Rational64 },
    /// `F_{±i} = C`, `F_i = C ⊕ C`, `u = (w, 1/w)`.
    CSplit { w: Complex<Rational64> },
}

fn reduce_angle(r: Rational64) -> Rational64 {
    let two = Rational64::from_integer(2);
    let m = r % two;
    if m < Rational64::zero() {
        m + two
    } else {
        m
    }
}

impl FactorDatum {
    pub fn c_field(theta: Rational64) -> Self {
        FactorDatum::CField { theta: reduce_angle(theta) }
    }

    pub fn r_split(t: Rational64) -> Result<Self, ConjError> {
        if t.is_zero() {
            return Err(ConjError::BadFactor("t must be non-zero".into()));
        }
        Ok(FactorDatum::RSplit { t })
    }

    pub fn c_split(w: Complex<Rational64>) -> Result<Self, ConjError> {
        if w.is_zero() {
            return Err(ConjError::BadFactor("w must be non-zero".into()));
        }
        Ok(FactorDatum::CSplit { w })
    }

    /// `[F_i : R]`.
    pub fn dim(&self) -> u32 {
        match self {
            FactorDatum::CField { .. } | FactorDatum::RSplit { .. } => 2,
            FactorDatum::CSplit { .. } => 4,
        }
    }

    pub fn is_c_field(&self) -> bool {
        matches!(self, FactorDatum::CField { .. })
    }

    /// The factor has no automorphism other than the identity.
    pub fn is_regular(&self) -> bool {
        match *self {
            FactorDatum::CField { theta } => !theta.is_zero() && theta != Rational64::one(),
            FactorDatum::RSplit { t } => t.abs() != Rational64::one(),
            FactorDatum::CSplit { w } => !w.im.is_zero() && w.norm_sqr() != Rational64::one(),
        }
    }

    /// Whether the two factors are isomorphic as data.
    pub fn is_isomorphic(&self, other: &FactorDatum) -> bool {
        match (*self, *other) {
            (FactorDatum::CField { theta: a }, FactorDatum::CField { theta: b }) => {
                a == b || reduce_angle(-a) == b
            }
            (FactorDatum::RSplit { t: a }, FactorDatum::RSplit { t: b }) => a == b || a.recip() == b,
            (FactorDatum::CSplit { w: a }, FactorDatum::CSplit { w: b }) => {
                [a, a.conj(), a.inv(), a.conj().inv()].contains(&b)
            }
            _ => false,
        }
    }

    /// Eigenvalues of `x ↦ u x` on `F_i` as a real vector space.
    pub fn eigenvalues(&self) -> Vec<Eigenvalue> {
        match *self {
            FactorDatum::CField { theta } => vec![
                Eigenvalue::unit(theta),
                Eigenvalue::unit(reduce_angle(-theta)),
            ],
            FactorDatum::RSplit { t } => vec![Eigenvalue::real(t), Eigenvalue::real(t.recip())],
            FactorDatum::CSplit { w } => [w, w.conj(), w.inv(), w.conj().inv()]
                .into_iter()
                .map(Eigenvalue::complex)
                .collect(),
        }
    }
}

/// An exact complex eigenvalue.
///
/// Roots of unity `e^{iπr}` are kept symbolic unless `r` is a multiple of
/// `1/2`. No other root of unity has rational coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Eigenvalue {
    Rational(Complex<Rational64>),
    Unit(Rational64),
}

impl Eigenvalue {
    fn unit(r: Rational64) -> Self {
        let r = reduce_angle(r);
        let half = Rational64::new(1, 2);
        if (r / half).is_integer() {
            let (re, im) = match (r / half).to_integer() {
                0 => (1, 0),
                1 => (0, 1),
                2 => (-1, 0),
                _ => (0, -1),
            };
            return Eigenvalue::Rational(Complex::new(re.into(), im.into()));
        }
        Eigenvalue::Unit(r)
    }

    fn real(t: Rational64) -> Self {
        Eigenvalue::Rational(Complex::new(t, Rational64::zero()))
    }

    fn complex(w: Complex<Rational64>) -> Self {
        Eigenvalue::Rational(w)
    }

    pub fn is_plus_minus_one(&self) -> bool {
        match self {
            Eigenvalue::Rational(z) => z.im.is_zero() && z.re.abs() == Rational64::one(),
            Eigenvalue::Unit(_) => false,
        }
    }

    pub fn to_complex(&self) -> Complex<f64> {
        let f = |r: Rational64| *r.numer() as f64 / *r.denom() as f64;
        match *self {
            Eigenvalue::Rational(z) => Complex::new(f(z.re), f(z.im)),
            Eigenvalue::Unit(r) => Complex::from_polar(1.0, std::f64::consts::PI * f(r)),
        }
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eigenvalue::Rational(z) if z.im.is_zero() => write!(f, "{}", z.re),
            Eigenvalue::Rational(z) => write!(f, "{} + {}i", z.re, z.im),
            Eigenvalue::Unit(r) => write!(f, "exp({r}πi)"),
        }
    }
}

/// A datum `κ`, as an ordered list of factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KappaDatum {
    pub factors: Vec<FactorDatum>,
}

impl KappaDatum {
    pub fn new(factors: Vec<FactorDatum>) -> Self {
        KappaDatum { factors }
    }

    pub fn dim(&self) -> u32 {
        self.factors.iter().map(FactorDatum::dim).sum()
    }

    /// `|I*|`, the number of factors with `F_i = C`.
    pub fn n_star(&self) -> usize {
        self.factors.iter().filter(|f| f.is_c_field()).count()
    }

    pub fn counts(&self) -> FactorCounts {
        let mut c = FactorCounts::default();
        for f in &self.factors {
            match f {
                FactorDatum::CField { .. } => c.n_c += 1,
                FactorDatum::RSplit { .. } => c.n_r += 1,
                FactorDatum::CSplit { .. } => c.n_cc += 1,
            }
        }
        c
    }

    /// Identity is the only automorphism: every factor is regular and no two
    /// factors are isomorphic.
    pub fn is_regular(&self) -> bool {
        self.factors.iter().all(FactorDatum::is_regular)
            && self.factors.iter().enumerate().all(|(i, a)| {
                self.factors[i + 1..].iter().all(|b| !a.is_isomorphic(b))
            })
    }

    pub fn check_signs(&self, c: &SignVector) -> Result<(), ConjError> {
        if c.0.len() != self.n_star() {
            return Err(ConjError::MismatchedSignVector {
                expected: self.n_star(),
                found: c.0.len(),
            });
        }
        Ok(())
    }
}

/// Signs `c_i` on the CField factors, in factor order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn sum(&self) -> i64 {
        self.0.iter().map(|s| s.to_i8() as i64).sum()
    }

    pub fn product(&self) -> Sign {
        self.0.iter().copied().product()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `2^n` sign vectors of length `n`, ordered lexicographically.
    pub fn all(n: usize) -> Vec<SignVector> {
        (0..1u64 << n)
            .map(|m| {
                SignVector((0..n).rev().map(|i| Sign::from_parity(m >> i & 1 == 1)).collect())
            })
            .collect()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Numbers of factors of each kind.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct FactorCounts {
    pub n_c: u32,
    pub n_r: u32,
    pub n_cc: u32,
}

impl FactorCounts {
    pub fn dim(&self) -> u32 {
        2 * self.n_c + 2 * self.n_r + 4 * self.n_cc
    }

    /// Every combination of counts with total dimension `d`.
    pub fn all_of_dim(d: u32) -> Vec<FactorCounts> {
        let mut out = Vec::new();
        if d % 2 == 1 {
            return out;
        }
        for n_cc in 0..=d / 4 {
            for n_r in 0..=(d - 4 * n_cc) / 2 {
                let n_c = (d - 4 * n_cc - 2 * n_r) / 2;
                out.push(FactorCounts { n_c, n_r, n_cc });
            }
        }
        out
    }

    /// A regular datum with these counts.
    pub fn representative(&self) -> KappaDatum {
        let mut factors = Vec::new();
        for i in 0..self.n_c as i64 {
            factors.push(FactorDatum::c_field(Rational64::new(1, i + 2)));
        }
        for i in 0..self.n_r as i64 {
            factors.push(FactorDatum::RSplit { t: Rational64::from_integer(i + 2) });
        }
        for i in 0..self.n_cc as i64 {
            factors.push(FactorDatum::CSplit {
                w: Complex::new(Rational64::from_integer(i + 2), Rational64::one()),
            });
        }
        KappaDatum::new(factors)
    }

    pub fn shape(&self, c: &SignVector) -> KappaShape {
        let plus = c.0.iter().filter(|s| s.is_plus()).count() as u32;
        KappaShape {
            n_c_plus: plus,
            n_c_minus: c.len() as u32 - plus,
            n_r: self.n_r,
            n_cc: self.n_cc,
        }
    }
}

impl fmt::Display for FactorCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^{} R+R^{} C+C^{}", self.n_c, self.n_r, self.n_cc)
    }
}

/// Counts of factors by kind and, for CField factors, by sign.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
pub struct KappaShape {
    pub n_c_plus: u32,
    pub n_c_minus: u32,
    pub n_r: u32,
    pub n_cc: u32,
}

impl KappaShape {
    pub fn signature(&self) -> QuadSpace {
        let common = self.n_r + 2 * self.n_cc;
        QuadSpace::new(2 * self.n_c_plus + common, 2 * self.n_c_minus + common)
    }
}

/// Signature of `W_{κ,c}`.
pub fn signature(kappa: &KappaDatum, c: &SignVector) -> Result<QuadSpace, ConjError> {
    kappa.check_signs(c)?;
    Ok(kappa.counts().shape(c).signature())
}

/// Eigenvalues of `x_{κ,c}`, with multiplicity. They do not depend on `c`.
pub fn eigenvalues(kappa: &KappaDatum) -> Vec<Eigenvalue> {
    kappa.factors.iter().flat_map(FactorDatum::eigenvalues).collect()
}

/// `Π c_i = (-1)^{(|I*| - Σ c_i)/2}`.
pub fn product_from_sum(c: &SignVector) -> Sign {
    Sign::pow_neg_one((c.len() as i64 - c.sum()) / 2)
}

/// Sign of the line `D_{κ,V}` when `dim V` is odd:
/// `(-1)^{(1 - Δ_V)/2 + |I*|}`.
pub fn line_sign(v: &QuadSpace, n_star: u32) -> Sign {
    debug_assert!(v.is_odd_dim());
    Sign::pow_neg_one((1 - v.delta()) / 2 + n_star as i64)
}

/// `(-1)^{num/4}` when `4 | num`, else `None`.
fn neg_one_pow_quarter(num: i64) -> Option<Sign> {
    (num % 4 == 0).then(|| Sign::pow_neg_one(num / 4))
}

/// Membership in `Ξ_{reg,V}` by the counting rule; when `dim V` is odd the
/// sign of the complementary line is returned alongside.
pub fn is_in_xi_reg_v(counts: &FactorCounts, c: &SignVector, v: &QuadSpace) -> (bool, Option<Sign>) {
    if c.len() != counts.n_c as usize {
        return (false, None);
    }
    if v.is_odd_dim() {
        if counts.dim() + 1 != v.dim() {
            return (false, None);
        }
        let i = line_sign(v, counts.n_c);
        let inside = 2 * c.sum() == v.delta() - i.to_i8() as i64;
        (inside, inside.then_some(i))
    } else {
        (counts.dim() == v.dim() && 2 * c.sum() == v.delta(), None)
    }
}

/// Membership in `Ξ_{reg,V}` from the definition: `W_{κ,c} ≅ V`, or
/// `W_{κ,c} ⊥ D ≅ V` for some line `D` when `dim V` is odd.
pub fn is_in_xi_reg_v_direct(
    counts: &FactorCounts,
    c: &SignVector,
    v: &QuadSpace,
) -> (bool, Option<Sign>) {
    if c.len() != counts.n_c as usize {
        return (false, None);
    }
    let w = counts.shape(c).signature();
    if !v.is_odd_dim() {
        return (w == *v, None);
    }
    for d in [Sign::Plus, Sign::Minus] {
        if w.oplus(&QuadSpace::line(d)) == *v {
            return (true, Some(d));
        }
    }
    (false, None)
}

/// A pair `(κ, c)` at the level of factor counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Entry {
    pub kappa: FactorCounts,
    pub c: SignVector,
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] c={}", self.kappa, self.c)
    }
}

/// Outcome of comparing a brute-force set with a predicted set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCheck {
    pub case: String,
    pub lhs: Vec<Entry>,
    pub rhs: Vec<Entry>,
    /// Entries produced more than once by a union that should be disjoint.
    pub duplicates: Vec<Entry>,
    /// Data for which the predicted sign has a half-integral exponent.
    pub undefined_sign: Vec<FactorCounts>,
    pub pass: bool,
}

impl SetCheck {
    fn build(
        case: String,
        lhs_counts: BTreeMap<Entry, u32>,
        rhs: BTreeSet<Entry>,
        undefined_sign: Vec<FactorCounts>,
    ) -> Self {
        let duplicates: Vec<Entry> =
            lhs_counts.iter().filter(|(_, &m)| m > 1).map(|(e, _)| e.clone()).collect();
        let lhs: BTreeSet<Entry> = lhs_counts.into_keys().collect();
        let undefined_hit = lhs.iter().any(|e| undefined_sign.contains(&e.kappa));
        let pass = lhs == rhs && duplicates.is_empty() && !undefined_hit;
        SetCheck {
            case,
            lhs: lhs.into_iter().collect(),
            rhs: rhs.into_iter().collect(),
            duplicates,
            undefined_sign,
            pass,
        }
    }

    /// Entries on exactly one side.
    pub fn difference(&self) -> Vec<Entry> {
        let l: BTreeSet<_> = self.lhs.iter().collect();
        let r: BTreeSet<_> = self.rhs.iter().collect();
        l.symmetric_difference(&r).map(|e| (*e).clone()).collect()
    }
}

/// `ε_{V,κ}` for odd `dim V`.
pub fn eps_odd(v: &QuadSpace, n_star: u32) -> Option<Sign> {
    let pqs = quasi_split_form(v).p as i64;
    let i = line_sign(v, n_star).to_i8() as i64;
    neg_one_pow_quarter(2 * (n_star as i64 - pqs) + v.dim() as i64 + i)
}

/// `ε_{V,κ,D}` for even `dim V` and a line of sign `d`.
pub fn eps_even(v: &QuadSpace, n_star: u32, d: Sign) -> Option<Sign> {
    let pqs = quasi_split_form(&v.oplus(&QuadSpace::line(d))).p as i64;
    neg_one_pow_quarter(
        2 * n_star as i64 + v.dim() as i64 + 1 + d.to_i8() as i64 - 2 * pqs,
    )
}

/// The union of `Ξ_{reg,V_α}` over pure inner forms `V_α` with Kottwitz
/// sign `e0` (of `V_α ⊥ D` when `dim V` is even), against the predicted set
/// `{(κ, c) : Π c_i = e0 · ε}`.
pub fn verify_union_prop(v: &QuadSpace, e0: Sign, line: Option<Sign>) -> Result<SetCheck, ConjError> {
    let odd = v.is_odd_dim();
    if odd == line.is_some() {
        return Err(ConjError::BadParity { dim: v.dim(), line: line.is_some() });
    }
    let d = if odd { v.dim() - 1 } else { v.dim() };
    let all = FactorCounts::all_of_dim(d);

    let mut lhs = BTreeMap::new();
    for va in pure_inner_forms(v) {
        let e = match line {
            None => kottwitz_sign(&va),
            Some(s) => kottwitz_sign(&va.oplus(&QuadSpace::line(s))),
        };
        if e != e0 {
            continue;
        }
        for k in &all {
            for c in SignVector::all(k.n_c as usize) {
                if is_in_xi_reg_v_direct(k, &c, &va).0 {
                    *lhs.entry(Entry { kappa: *k, c }).or_insert(0) += 1;
                }
            }
        }
    }

    let mut rhs = BTreeSet::new();
    let mut undefined = Vec::new();
    for k in &all {
        let eps = match line {
            None => eps_odd(v, k.n_c),
            Some(s) => eps_even(v, k.n_c, s),
        };
        let Some(eps) = eps else {
            undefined.push(*k);
            continue;
        };
        for c in SignVector::all(k.n_c as usize) {
            if c.product() == e0 * eps {
                rhs.insert(Entry { kappa: *k, c });
            }
        }
    }
    let case = match line {
        None => format!("V={v} e0={e0}"),
        Some(s) => format!("V={v} e0={e0} D={s}"),
    };
    Ok(SetCheck::build(case, lhs, rhs, undefined))
}

/// `κ ∈ Ξ(d_V, d_W)`: only CField factors and `2|I*| <= min(d_V, d_W)`.
pub fn is_in_xi_dvdw(kappa: &FactorCounts, d_v: u32, d_w: u32) -> bool {
    kappa.n_r == 0 && kappa.n_cc == 0 && 2 * kappa.n_c <= d_v.min(d_w)
}

/// `(κ, c) ∈ 𝒞(V, W)`.
///
/// All factors are CField, `W_{κ,c}` embeds in `W`, and the centraliser
/// `SO(W') × SO(V')` with `W' = W ⊖ W_{κ,c}`, `V' = V ⊖ W_{κ,c}` is
/// quasi-split.
pub fn is_in_c_vw(
    kappa: &FactorCounts,
    c: &SignVector,
    v: &QuadSpace,
    w: &QuadSpace,
) -> Result<bool, ConjError> {
    if is_admissible_pair(w, v).is_none() {
        return Err(QuadError::NotAdmissible { w: *w, v: *v }.into());
    }
    if c.len() != kappa.n_c as usize {
        return Err(ConjError::MismatchedSignVector { expected: kappa.n_c as usize, found: c.len() });
    }
    if kappa.n_r != 0 || kappa.n_cc != 0 {
        return Ok(false);
    }
    let wk = kappa.shape(c).signature();
    let (Some(w_rest), Some(v_rest)) = (w.complement(&wk), v.complement(&wk)) else {
        return Ok(false);
    };
    Ok(is_quasi_split(&w_rest) && is_quasi_split(&v_rest))
}

fn check_fiber_inputs(kappa: &FactorCounts, v: &QuadSpace, w: &QuadSpace) -> Result<(), ConjError> {
    if is_admissible_pair(w, v).is_none() {
        return Err(QuadError::NotAdmissible { w: *w, v: *v }.into());
    }
    if !is_in_xi_dvdw(kappa, v.dim(), w.dim()) {
        return Err(ConjError::NotInXi { d_v: v.dim(), d_w: w.dim() });
    }
    Ok(())
}

fn fiber(kappa: &FactorCounts, v: &QuadSpace, w: &QuadSpace) -> Vec<SignVector> {
    SignVector::all(kappa.n_c as usize)
        .into_iter()
        .filter(|c| is_in_c_vw(kappa, c, v, w).expect("inputs checked"))
        .collect()
}

/// The fiber of `𝒞(V, W) → Ξ(d_V, d_W)` over `κ`, against
/// `C(κ)_{(Δ_W - 𝔦_{W,κ})/2}` (odd `dim W`) or `C(κ)_{(Δ_V - 𝔦_{V,κ})/2}`
/// (even `dim W`).
pub fn verify_fiber_lemma(kappa: &FactorCounts, v: &QuadSpace, w: &QuadSpace) -> Result<SetCheck, ConjError> {
    check_fiber_inputs(kappa, v, w)?;
    let n = kappa.n_c;
    let base = if w.is_odd_dim() { w } else { v };
    let doubled_theta = base.delta() - line_sign(base, n).to_i8() as i64;
    let lhs = fiber(kappa, v, w)
        .into_iter()
        .map(|c| (Entry { kappa: *kappa, c }, 1))
        .collect();
    let rhs = SignVector::all(n as usize)
        .into_iter()
        .filter(|c| 2 * c.sum() == doubled_theta)
        .map(|c| Entry { kappa: *kappa, c })
        .collect();
    Ok(SetCheck::build(format!("W={w} V={v} |I*|={n}"), lhs, rhs, Vec::new()))
}

/// `ε_{V,W,κ,D}` for even `dim W`.
pub fn eps_fiber_even(v: &QuadSpace, w: &QuadSpace, n_star: u32, d: Sign) -> Option<Sign> {
    let pqs = quasi_split_form(&w.oplus(&QuadSpace::line(d))).p as i64;
    let i = line_sign(v, n_star).to_i8() as i64;
    neg_one_pow_quarter(
        2 * n_star as i64 - (v.delta() - i) + w.dim() as i64 + 1 + w.delta() + d.to_i8() as i64
            - 2 * pqs,
    )
}

/// The fiber over `κ` of the union of `𝒞(V_α, W_α)` over pure inner forms
/// `W_α` (with `V_α = W_α ⊥ W^⊥`) of Kottwitz sign `e0`, against
/// `C(κ)^{e0 · ε}`. For even `dim W` the sign is that of `W_α ⊥ D`.
pub fn verify_fiber_union(
    kappa: &FactorCounts,
    v: &QuadSpace,
    w: &QuadSpace,
    e0: Sign,
    line: Option<Sign>,
) -> Result<SetCheck, ConjError> {
    check_fiber_inputs(kappa, v, w)?;
    if w.is_odd_dim() == line.is_some() {
        return Err(ConjError::BadParity { dim: w.dim(), line: line.is_some() });
    }
    let perp = v.complement(w).expect("admissible");
    let mut lhs = BTreeMap::new();
    for wa in pure_inner_forms(w) {
        let e = match line {
            None => kottwitz_sign(&wa),
            Some(s) => kottwitz_sign(&wa.oplus(&QuadSpace::line(s))),
        };
        if e != e0 {
            continue;
        }
        let va = wa.oplus(&perp);
        for c in fiber(kappa, &va, &wa) {
            *lhs.entry(Entry { kappa: *kappa, c }).or_insert(0) += 1;
        }
    }
    let eps = match line {
        None => eps_odd(w, kappa.n_c),
        Some(s) => eps_fiber_even(v, w, kappa.n_c, s),
    };
    let mut rhs = BTreeSet::new();
    let mut undefined = Vec::new();
    match eps {
        Some(eps) => {
            for c in SignVector::all(kappa.n_c as usize) {
                if c.product() == e0 * eps {
                    rhs.insert(Entry { kappa: *kappa, c });
                }
            }
        }
        None => undefined.push(*kappa),
    }
    let case = match line {
        None => format!("W={w} V={v} |I*|={} e0={e0}", kappa.n_c),
        Some(s) => format!("W={w} V={v} |I*|={} e0={e0} D={s}", kappa.n_c),
    };
    Ok(SetCheck::build(case, lhs, rhs, undefined))
}

/// Every admissible pair `(W, V)` with `dim V <= max_dim_v`.
pub fn admissible_pairs(max_dim_v: u32) -> Vec<(QuadSpace, QuadSpace)> {
    let mut out = Vec::new();
    for dv in 1..=max_dim_v {
        for dw in 0..dv {
            for v in QuadSpace::all_of_dim(dv) {
                for w in QuadSpace::all_of_dim(dw) {
                    if is_admissible_pair(&w, &v).is_some() {
                        out.push((w, v));
                    }
                }
            }
        }
    }
    out
}

/// The data `κ ∈ Ξ(d_V, d_W)`, one per count of CField factors.
pub fn xi_dvdw(d_v: u32, d_w: u32) -> Vec<FactorCounts> {
    (0..=d_v.min(d_w) / 2).map(|n_c| FactorCounts { n_c, n_r: 0, n_cc: 0 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(p: u32, q: u32) -> QuadSpace {
        QuadSpace::new(p, q)
    }

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    fn signs(v: &[i8]) -> SignVector {
        SignVector(v.iter().map(|&x| Sign::try_from(x).unwrap()).collect())
    }

    const ONE_C: FactorCounts = FactorCounts { n_c: 1, n_r: 0, n_cc: 0 };

    #[test]
    fn signature_examples() {
        let k = KappaDatum::new(vec![FactorDatum::c_field(r(1, 2))]);
        assert_eq!(signature(&k, &signs(&[1])), Ok(qs(2, 0)));
        let k = KappaDatum::new(vec![FactorDatum::r_split(r(2, 1)).unwrap()]);
        assert_eq!(signature(&k, &signs(&[])), Ok(qs(1, 1)));
        let k = KappaDatum::new(vec![FactorDatum::c_split(Complex::new(r(2, 1), r(1, 1))).unwrap()]);
        assert_eq!(signature(&k, &signs(&[])), Ok(qs(2, 2)));
        assert!(matches!(
            signature(&k, &signs(&[1])),
            Err(ConjError::MismatchedSignVector { expected: 0, found: 1 })
        ));
    }

    #[test]
    fn eigenvalue_examples() {
        let ev = FactorDatum::c_field(r(1, 2)).eigenvalues();
        let i = Eigenvalue::Rational(Complex::new(r(0, 1), r(1, 1)));
        let minus_i = Eigenvalue::Rational(Complex::new(r(0, 1), r(-1, 1)));
        assert_eq!(ev, vec![i, minus_i]);
        let ev = FactorDatum::r_split(r(2, 1)).unwrap().eigenvalues();
        assert_eq!(ev, vec![Eigenvalue::real(r(2, 1)), Eigenvalue::real(r(1, 2))]);
        assert!(FactorDatum::c_field(r(1, 1)).eigenvalues().iter().all(|e| e.is_plus_minus_one()));
        let ev = FactorDatum::c_field(r(1, 3)).eigenvalues();
        assert!((ev[0].to_complex() - Complex::new(0.5, 3f64.sqrt() / 2.0)).norm() < 1e-15);
    }

    #[test]
    fn regularity_examples() {
        let a = FactorDatum::c_field(r(1, 3));
        let b = FactorDatum::c_field(r(5, 3));
        assert!(a.is_isomorphic(&b));
        assert!(!KappaDatum::new(vec![a, b]).is_regular());
        let t = FactorDatum::r_split(r(3, 1)).unwrap();
        let t_inv = FactorDatum::r_split(r(1, 3)).unwrap();
        assert!(t.is_isomorphic(&t_inv));
        assert!(!FactorDatum::r_split(r(-1, 1)).unwrap().is_regular());
        let w = FactorDatum::c_split(Complex::new(r(3, 5), r(4, 5))).unwrap();
        assert!(!w.is_regular());
        assert!(KappaDatum::new(vec![a, t]).is_regular());
        assert!(KappaDatum::default().is_regular());
    }

    #[test]
    fn xi_reg_examples() {
        let (inside, line) = is_in_xi_reg_v(&ONE_C, &signs(&[1]), &qs(2, 1));
        assert!(inside);
        assert_eq!(line, Some(Sign::Minus));
        assert_eq!(is_in_xi_reg_v_direct(&ONE_C, &signs(&[1]), &qs(2, 1)), (true, Some(Sign::Minus)));
        assert!(is_in_xi_reg_v(&ONE_C, &signs(&[1]), &qs(2, 0)).0);
        assert!(!is_in_xi_reg_v(&ONE_C, &signs(&[-1]), &qs(2, 0)).0);
        for c in [1, -1] {
            assert!(!is_in_xi_reg_v(&ONE_C, &signs(&[c]), &qs(1, 1)).0);
        }
        let split = FactorCounts { n_c: 0, n_r: 1, n_cc: 0 };
        assert!(is_in_xi_reg_v(&split, &signs(&[]), &qs(1, 1)).0);
    }

    #[test]
    fn union_examples() {
        for e0 in [Sign::Plus, Sign::Minus] {
            for v in QuadSpace::all_of_dim(3) {
                assert!(verify_union_prop(&v, e0, None).unwrap().pass);
            }
            for v in QuadSpace::all_of_dim(4) {
                assert!(verify_union_prop(&v, e0, Some(Sign::Plus)).unwrap().pass);
            }
        }
        let r = verify_union_prop(&qs(1, 0), Sign::Plus, None).unwrap();
        assert_eq!(r.lhs, vec![Entry { kappa: FactorCounts::default(), c: SignVector::default() }]);
        assert!(r.pass);
        let r = verify_union_prop(&qs(1, 0), Sign::Minus, None).unwrap();
        assert!(r.lhs.is_empty() && r.rhs.is_empty());
        assert!(matches!(
            verify_union_prop(&qs(2, 1), Sign::Plus, Some(Sign::Plus)),
            Err(ConjError::BadParity { .. })
        ));
    }

    #[test]
    fn xi_dvdw_examples() {
        assert!(is_in_xi_dvdw(&FactorCounts { n_c: 2, n_r: 0, n_cc: 0 }, 5, 4));
        assert!(!is_in_xi_dvdw(&FactorCounts { n_c: 1, n_r: 1, n_cc: 0 }, 5, 4));
        assert!(!is_in_xi_dvdw(&FactorCounts { n_c: 3, n_r: 0, n_cc: 0 }, 5, 4));
    }

    #[test]
    fn c_vw_examples() {
        assert_eq!(is_in_c_vw(&ONE_C, &signs(&[1]), &qs(3, 3), &qs(2, 1)), Ok(true));
        assert_eq!(is_in_c_vw(&ONE_C, &signs(&[-1]), &qs(3, 3), &qs(2, 1)), Ok(false));
        let empty = FactorCounts::default();
        assert_eq!(is_in_c_vw(&empty, &signs(&[]), &qs(3, 2), &qs(2, 2)), Ok(true));
        // V = (3,0) is not quasi-split, so the centraliser is not either
        assert_eq!(is_in_c_vw(&empty, &signs(&[]), &qs(3, 0), &qs(2, 0)), Ok(false));
        assert!(matches!(
            is_in_c_vw(&ONE_C, &signs(&[1]), &qs(3, 2), &qs(2, 1)),
            Err(ConjError::NotAdmissible(_))
        ));
    }

    #[test]
    fn fiber_examples() {
        let r = verify_fiber_lemma(&ONE_C, &qs(3, 3), &qs(2, 1)).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, vec![Entry { kappa: ONE_C, c: signs(&[1]) }]);
        let r = verify_fiber_lemma(&FactorCounts::default(), &qs(3, 3), &qs(2, 1)).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs.len(), 1);
        let r = verify_fiber_union(&ONE_C, &qs(3, 2), &qs(2, 2), Sign::Plus, Some(Sign::Plus)).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn fiber_lemma_fails_when_kappa_fills_even_w() {
        // (2,0) and (0,2) do not embed in (1,1), yet the count predicts c = +1
        let r = verify_fiber_lemma(&ONE_C, &qs(2, 1), &qs(1, 1)).unwrap();
        assert!(r.lhs.is_empty());
        assert_eq!(r.rhs, vec![Entry { kappa: ONE_C, c: signs(&[1]) }]);
        assert!(!r.pass);
    }

    #[test]
    fn parity_identity() {
        for n in 0..=10 {
            for c in SignVector::all(n) {
                assert_eq!(c.product(), product_from_sum(&c));
            }
        }
    }
}

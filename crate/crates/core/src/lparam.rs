//! Tempered L-parameters of real special orthogonal groups.
//!
//! A parameter of `SO(V)` is recorded through its standard representation
//! `M_V`, a [`WeilRep`] that is symplectic when `dim V` is odd and orthogonal
//! when `dim V` is even. Component groups, the Gross-Prasad character and
//! the endoscopic reduction are computed exactly from the constituents.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::epsilon::{eps_symplectic, EpsError};
use crate::quadspace::{is_admissible_pair, AdmissiblePair, QuadError, QuadSpace, Sign};
use crate::weilrep::{IrredRep, SelfDualType, WeilRep};

/// One violated invariant of a candidate parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation")]
pub enum Violation {
    DimMismatch { expected: u32, found: u32 },
    OddSpMultiplicity { rep: String, mult: u32 },
    UnpairedGLType { rep: String, mult: u32, dual_mult: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DimMismatch { expected, found } => {
                write!(f, "dimension {found} does not match the required {expected}")
            }
            Violation::OddSpMultiplicity { rep, mult } => {
                write!(f, "{rep} has the wrong pairing sign and odd multiplicity {mult}")
            }
            Violation::UnpairedGLType { rep, mult, dual_mult } => {
                write!(f, "{rep} occurs {mult} times but its dual occurs {dual_mult} times")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("invalid parameter: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("parameter is not multiplicity-free of O-type")]
    NotReduced,
    #[error("dimension {0} is odd where an even dimension is required")]
    OddHalfExponent(u32),
    #[error("element {0} is central")]
    CentralElement(String),
    #[error("bad component group element: {0}")]
    BadElement(String),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Eps(#[from] EpsError),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// The sign of the invariant form on `M_V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    SymplecticAmbient,
    OrthogonalAmbient,
}

impl Ambient {
    pub fn for_space(v: &QuadSpace) -> Self {
        if v.is_odd_dim() {
            Ambient::SymplecticAmbient
        } else {
            Ambient::OrthogonalAmbient
        }
    }

    /// Required `dim M_V`.
    pub fn rep_dim(v: &QuadSpace) -> u32 {
        if v.is_odd_dim() {
            v.dim() - 1
        } else {
            v.dim()
        }
    }

    fn self_dual_type(self) -> SelfDualType {
        match self {
            Ambient::SymplecticAmbient => SelfDualType::SymplecticSD,
            Ambient::OrthogonalAmbient => SelfDualType::OrthogonalSD,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstituentType {
    O,
    Sp,
    GL,
}

pub fn constituent_type(rep: &IrredRep, ambient: Ambient) -> ConstituentType {
    match rep.self_dual_type() {
        SelfDualType::NotSelfDual => ConstituentType::GL,
        t if t == ambient.self_dual_type() => ConstituentType::O,
        _ => ConstituentType::Sp,
    }
}

/// A validated tempered parameter of `SO(V)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ParamRepr", into = "ParamRepr")]
pub struct LParameter {
    rep: WeilRep,
    ambient: Ambient,
    target: QuadSpace,
}

#[derive(Serialize, Deserialize)]
struct ParamRepr {
    #[serde(rename = "V")]
    v: QuadSpace,
    rep: WeilRep,
}

impl TryFrom<ParamRepr> for LParameter {
    type Error = ParamError;

    fn try_from(r: ParamRepr) -> Result<Self, ParamError> {
        validate(r.rep, r.v)
    }
}

impl From<LParameter> for ParamRepr {
    fn from(p: LParameter) -> Self {
        ParamRepr { v: p.target, rep: p.rep }
    }
}

/// Checks every invariant and reports all violations at once.
pub fn validate(rep: WeilRep, v: QuadSpace) -> Result<LParameter, ParamError> {
    let ambient = Ambient::for_space(&v);
    let mut violations = Vec::new();
    let expected = Ambient::rep_dim(&v);
    if rep.dim() != expected {
        violations.push(Violation::DimMismatch { expected, found: rep.dim() });
    }
    for (r, m) in rep.summands() {
        match constituent_type(r, ambient) {
            ConstituentType::O => {}
            ConstituentType::Sp => {
                if m % 2 == 1 {
                    violations.push(Violation::OddSpMultiplicity { rep: r.to_string(), mult: m });
                }
            }
            ConstituentType::GL => {
                let d = rep.multiplicity(&r.dual());
                // report each unbalanced pair once
                if d != m && (d == 0 || *r < r.dual()) {
                    violations.push(Violation::UnpairedGLType {
                        rep: r.to_string(),
                        mult: m,
                        dual_mult: d,
                    });
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(LParameter { rep, ambient, target: v })
    } else {
        Err(ParamError::Invalid(violations))
    }
}

impl LParameter {
    pub fn new(rep: WeilRep, v: QuadSpace) -> Result<Self, ParamError> {
        validate(rep, v)
    }

    pub fn rep(&self) -> &WeilRep {
        &self.rep
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn target(&self) -> QuadSpace {
        self.target
    }

    fn o_type(&self) -> impl Iterator<Item = (&IrredRep, u32)> + '_ {
        self.rep
            .summands()
            .filter(move |(r, _)| constituent_type(r, self.ambient) == ConstituentType::O)
    }

    /// All constituents of O-type with multiplicity one.
    pub fn is_reduced(&self) -> bool {
        self.rep
            .summands()
            .all(|(r, m)| m == 1 && constituent_type(r, self.ambient) == ConstituentType::O)
    }

    pub fn component_group(&self) -> ComponentGroup {
        let (basis, mults): (Vec<IrredRep>, Vec<u32>) = self.o_type().map(|(r, m)| (*r, m)).unzip();
        let odd_dim: Vec<bool> = basis.iter().map(|r| r.dim() % 2 == 1).collect();
        let constraint = odd_dim.iter().any(|&o| o);
        ComponentGroup { basis, mults, odd_dim, constraint }
    }

    pub fn classify(&self) -> Classification {
        let b = self.target.dim() <= 3;
        let p = self.rep.summands().any(|(r, m)| match constituent_type(r, self.ambient) {
            ConstituentType::O => m >= 2,
            ConstituentType::Sp | ConstituentType::GL => true,
        });
        let e = !b && !p;
        let explicit_condition = self.component_group().not_in_center_times_identity_component();
        debug_assert!(!self.is_reduced() || explicit_condition == e);
        let canonical = if p {
            ParamType::P
        } else if b {
            ParamType::B
        } else {
            ParamType::E
        };
        Classification { b, p, e, explicit_condition, canonical }
    }

    /// `(M^{s=+1}, M^{s=-1})`.
    pub fn eigenspace_split(&self, s: &ComponentElement) -> Result<(WeilRep, WeilRep), ParamError> {
        if !self.is_reduced() {
            return Err(ParamError::NotReduced);
        }
        let g = self.component_group();
        g.check(s)?;
        let mut plus = WeilRep::empty();
        let mut minus = WeilRep::empty();
        for (r, e) in g.basis.iter().zip(&s.eps) {
            match e {
                Sign::Plus => plus.add(*r, 1),
                Sign::Minus => minus.add(*r, 1),
            }
        }
        Ok((plus, minus))
    }
}

/// The component group `𝒮_φ`, an elementary abelian 2-group.
///
/// Coordinates are indexed by the O-type constituents. When some O-type
/// constituent has odd dimension the elements satisfy
/// `Π_{odd-dimensional i} ε_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentGroup {
    pub basis: Vec<IrredRep>,
    pub mults: Vec<u32>,
    pub odd_dim: Vec<bool>,
    pub constraint: bool,
}

/// An element of `𝒮_φ`, one sign per O-type constituent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComponentElement {
    pub eps: Vec<Sign>,
}

impl ComponentElement {
    /// `'1'` marks a `-1` coordinate, `'0'` a `+1` coordinate.
    pub fn from_bits(bits: &str) -> Result<Self, ParamError> {
        let eps = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(Sign::Plus),
                '1' => Ok(Sign::Minus),
                other => Err(ParamError::BadElement(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<_, _>>()?;
        Ok(ComponentElement { eps })
    }

    pub fn to_bits(&self) -> String {
        self.eps.iter().map(|e| if e.is_plus() { '0' } else { '1' }).collect()
    }

    pub fn mask(&self) -> u64 {
        self.eps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_plus())
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn from_mask(mask: u64, len: usize) -> Self {
        ComponentElement {
            eps: (0..len).map(|i| Sign::from_parity(mask >> i & 1 == 1)).collect(),
        }
    }
}

impl std::ops::Mul for &ComponentElement {
    type Output = ComponentElement;

    fn mul(self, rhs: &ComponentElement) -> ComponentElement {
        ComponentElement {
            eps: self.eps.iter().zip(&rhs.eps).map(|(a, b)| *a * *b).collect(),
        }
    }
}

impl fmt::Display for ComponentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bits())
    }
}

impl ComponentGroup {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn rank(&self) -> usize {
        if self.constraint {
            self.len() - 1
        } else {
            self.len()
        }
    }

    pub fn order(&self) -> u64 {
        1 << self.rank()
    }

    fn satisfies(&self, mask: u64) -> bool {
        let odd = (0..self.len()).filter(|&i| self.odd_dim[i] && mask >> i & 1 == 1).count();
        odd % 2 == 0
    }

    pub fn check(&self, s: &ComponentElement) -> Result<(), ParamError> {
        if s.eps.len() != self.len() {
            return Err(ParamError::BadElement(format!(
                "{} coordinates given, group has {}",
                s.eps.len(),
                self.len()
            )));
        }
        if !self.satisfies(s.mask()) {
            return Err(ParamError::BadElement(format!(
                "{s} violates the product constraint on odd-dimensional constituents"
            )));
        }
        Ok(())
    }

    pub fn element_from_bits(&self, bits: &str) -> Result<ComponentElement, ParamError> {
        let s = ComponentElement::from_bits(bits)?;
        self.check(&s)?;
        Ok(s)
    }

    pub fn identity(&self) -> ComponentElement {
        ComponentElement { eps: vec![Sign::Plus; self.len()] }
    }

    /// The image of `-Id`: `(-1)^{m_i}` on each coordinate.
    pub fn central(&self) -> ComponentElement {
        ComponentElement { eps: self.mults.iter().map(|&m| Sign::pow_neg_one(m as i64)).collect() }
    }

    /// The subgroup `{1, z}` coming from the centre.
    pub fn is_central(&self, s: &ComponentElement) -> bool {
        *s == self.identity() || *s == self.central()
    }

    /// All elements, ordered by bit mask.
    pub fn elements(&self) -> Vec<ComponentElement> {
        assert!(self.len() < 64, "component group too large to enumerate");
        (0..1u64 << self.len())
            .filter(|&m| self.satisfies(m))
            .map(|m| ComponentElement::from_mask(m, self.len()))
            .collect()
    }

    /// Whether `𝒮_φ` is larger than the image of the centre.
    pub fn not_in_center_times_identity_component(&self) -> bool {
        let order = self.order();
        order >= 4 || (order == 2 && self.central() == self.identity())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParamType {
    B,
    P,
    E,
}

impl fmt::Display for ParamType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamType::B => "B",
            ParamType::P => "P",
            ParamType::E => "E",
        })
    }
}

/// Flags of the trichotomy plus the reporting choice (priority P, B, E).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub b: bool,
    pub p: bool,
    pub e: bool,
    /// `𝒮_φ ⊄ Z·S°_φ`, computed from the component group.
    pub explicit_condition: bool,
    pub canonical: ParamType,
}

/// A parameter of `SO(W) × SO(V)` for an admissible pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PairParamRepr", into = "PairParamRepr")]
pub struct GPPair {
    phi_w: LParameter,
    phi_v: LParameter,
    pair: AdmissiblePair,
}

#[derive(Serialize, Deserialize)]
struct PairParamRepr {
    #[serde(rename = "phiW")]
    phi_w: LParameter,
    #[serde(rename = "phiV")]
    phi_v: LParameter,
}

impl TryFrom<PairParamRepr> for GPPair {
    type Error = ParamError;

    fn try_from(r: PairParamRepr) -> Result<Self, ParamError> {
        GPPair::new(r.phi_w, r.phi_v)
    }
}

impl From<GPPair> for PairParamRepr {
    fn from(p: GPPair) -> Self {
        PairParamRepr { phi_w: p.phi_w, phi_v: p.phi_v }
    }
}

impl GPPair {
    pub fn new(phi_w: LParameter, phi_v: LParameter) -> Result<Self, ParamError> {
        let pair = AdmissiblePair::new(phi_w.target, phi_v.target)?;
        Ok(GPPair { phi_w, phi_v, pair })
    }

    pub fn phi_w(&self) -> &LParameter {
        &self.phi_w
    }

    pub fn phi_v(&self) -> &LParameter {
        &self.phi_v
    }

    pub fn pair(&self) -> &AdmissiblePair {
        &self.pair
    }

    pub fn is_reduced(&self) -> bool {
        self.phi_w.is_reduced() && self.phi_v.is_reduced()
    }
}

fn half(n: u32) -> Result<i64, ParamError> {
    if n % 2 == 1 {
        Err(ParamError::OddHalfExponent(n))
    } else {
        Ok(n as i64 / 2)
    }
}

/// `det(-Id_A)^{dim B / 2} · det(-Id_B)^{dim A / 2} · ε(1/2, A ⊗ B)`.
pub fn half_character(minus: &WeilRep, other: &WeilRep) -> Result<Sign, ParamError> {
    let a = minus.dim();
    let b = other.dim();
    let dets = Sign::pow_neg_one(a as i64 * half(b)? + b as i64 * half(a)?);
    Ok(dets * eps_symplectic(&minus.tensor(other))?)
}

/// The two factors `(χ^V_{φ_W}(s_W), χ^W_{φ_V}(s_V))` of `χ_φ(s)`.
pub fn gp_character_parts(
    pair: &GPPair,
    s_w: &ComponentElement,
    s_v: &ComponentElement,
) -> Result<(Sign, Sign), ParamError> {
    let (_, w_minus) = pair.phi_w.eigenspace_split(s_w)?;
    let (_, v_minus) = pair.phi_v.eigenspace_split(s_v)?;
    let chi_v_of_w = half_character(&w_minus, pair.phi_v.rep())?;
    let chi_w_of_v = half_character(&v_minus, pair.phi_w.rep())?;
    Ok((chi_v_of_w, chi_w_of_v))
}

/// `χ_φ(s_W, s_V)`.
pub fn gp_character(
    pair: &GPPair,
    s_w: &ComponentElement,
    s_v: &ComponentElement,
) -> Result<Sign, ParamError> {
    let (a, b) = gp_character_parts(pair, s_w, s_v)?;
    Ok(a * b)
}

/// The quasi-split space of the given dimension with `Δ ∈ {0, 1}`.
pub fn canonical_target(dim: u32) -> QuadSpace {
    QuadSpace::new(dim.div_ceil(2), dim / 2)
}

/// The parameters attached to the eigenspace decomposition of `(s_W, s_V)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndoscopicSplit {
    pub w_plus: LParameter,
    pub w_minus: LParameter,
    pub v_plus: LParameter,
    pub v_minus: LParameter,
}

fn sub_parameter(rep: WeilRep, parent: &QuadSpace) -> Result<LParameter, ParamError> {
    let dim = rep.dim() + u32::from(parent.is_odd_dim());
    LParameter::new(rep, canonical_target(dim))
}

/// Builds a pair from two parameters in either order, putting the smaller
/// target first and adjusting the larger target to be admissible.
fn cross_pair(a: &LParameter, b: &LParameter) -> Result<GPPair, ParamError> {
    let (small, large) = if a.target.dim() < b.target.dim() { (a, b) } else { (b, a) };
    let gap = large.target.dim() - small.target.dim();
    if gap % 2 == 0 {
        return Err(QuadError::NotAdmissible { w: small.target, v: large.target }.into());
    }
    let v = small.target.oplus(&QuadSpace::new(1, 0)).oplus(&QuadSpace::split((gap - 1) / 2));
    let large = LParameter::new(large.rep.clone(), v)?;
    GPPair::new(small.clone(), large)
}

impl EndoscopicSplit {
    /// `(φ_{W+}, φ_{V-})` and `(φ_{W-}, φ_{V+})` as admissible pairs.
    pub fn cross_pairs(&self) -> Result<(GPPair, GPPair), ParamError> {
        Ok((cross_pair(&self.w_plus, &self.v_minus)?, cross_pair(&self.w_minus, &self.v_plus)?))
    }
}

pub fn endoscopic_split(
    pair: &GPPair,
    s_w: &ComponentElement,
    s_v: &ComponentElement,
) -> Result<EndoscopicSplit, ParamError> {
    let (w_plus, w_minus) = pair.phi_w.eigenspace_split(s_w)?;
    let (v_plus, v_minus) = pair.phi_v.eigenspace_split(s_v)?;
    if pair.phi_v.component_group().is_central(s_v) {
        return Err(ParamError::CentralElement(s_v.to_string()));
    }
    let v = pair.phi_v.target;
    let w = pair.phi_w.target;
    let split = EndoscopicSplit {
        w_plus: sub_parameter(w_plus, &w)?,
        w_minus: sub_parameter(w_minus, &w)?,
        v_plus: sub_parameter(v_plus, &v)?,
        v_minus: sub_parameter(v_minus, &v)?,
    };
    debug_assert!(split.v_plus.target.dim() < v.dim() && split.v_minus.target.dim() < v.dim());
    Ok(split)
}

/// The per-factor values of the endoscopic reduction identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DichotomyCheck {
    /// `χ_{φ_{W+} × φ_{V-}}` at `-1` on the `V_-` side.
    pub plus_minus: Sign,
    /// `χ_{φ_{W-} × φ_{V+}}` at `-1` on the `W_-` side.
    pub minus_plus: Sign,
    pub chi: Sign,
    pub holds: bool,
}

/// `χ_{W+ × V-} · χ_{W- × V+} = χ_φ(s)`, each factor evaluated as a
/// Gross-Prasad character of the split pair.
pub fn dichotomy_identity_check(
    pair: &GPPair,
    s_w: &ComponentElement,
    s_v: &ComponentElement,
) -> Result<DichotomyCheck, ParamError> {
    let split = endoscopic_split(pair, s_w, s_v)?;
    let (pm, mp) = split.cross_pairs()?;
    let plus_minus = character_at_minus_one(&pm, &split.v_minus)?;
    let minus_plus = character_at_minus_one(&mp, &split.w_minus)?;
    let chi = gp_character(pair, s_w, s_v)?;
    Ok(DichotomyCheck { plus_minus, minus_plus, chi, holds: plus_minus * minus_plus == chi })
}

/// Evaluates the pair's character at `-1` on the factor carrying `minus`
/// and at the identity on the other factor.
fn character_at_minus_one(pair: &GPPair, minus: &LParameter) -> Result<Sign, ParamError> {
    let all_minus = |g: &ComponentGroup| ComponentElement { eps: vec![Sign::Minus; g.len()] };
    let gw = pair.phi_w.component_group();
    let gv = pair.phi_v.component_group();
    let (s_w, s_v) = if pair.phi_w.rep == minus.rep && pair.phi_w.ambient == minus.ambient {
        (all_minus(&gw), gv.identity())
    } else {
        (gw.identity(), all_minus(&gv))
    };
    gp_character(pair, &s_w, &s_v)
}

/// Multiplicity-free O-type representations of the dimension required by
/// a target of dimension `target_dim`, built from `1`, `sgn` and `D_k` with
/// `k <= max_k`.
pub fn reduced_reps(target_dim: u32, max_k: u32) -> Vec<WeilRep> {
    let ambient = if target_dim % 2 == 1 {
        Ambient::SymplecticAmbient
    } else {
        Ambient::OrthogonalAmbient
    };
    let need = if target_dim % 2 == 1 { target_dim - 1 } else { target_dim };
    let pool: Vec<IrredRep> = [IrredRep::trivial(), IrredRep::sgn()]
        .into_iter()
        .chain((1..=max_k).map(IrredRep::d))
        .filter(|r| constituent_type(r, ambient) == ConstituentType::O)
        .collect();
    let mut out = Vec::new();
    subsets_with_dim(&pool, 0, need, &mut Vec::new(), &mut out);
    out.into_iter()
        .filter(|rep| LParameter::new(rep.clone(), canonical_target(target_dim)).is_ok())
        .collect()
}

fn subsets_with_dim(
    pool: &[IrredRep],
    start: usize,
    need: u32,
    cur: &mut Vec<IrredRep>,
    out: &mut Vec<WeilRep>,
) {
    if need == 0 {
        out.push(WeilRep::from_irreducibles(cur.iter().copied()));
        return;
    }
    for i in start..pool.len() {
        if pool[i].dim() <= need {
            cur.push(pool[i]);
            subsets_with_dim(pool, i + 1, need - pool[i].dim(), cur, out);
            cur.pop();
        }
    }
}

/// Every reduced pair with `dim V <= max_dim` and constituents `1`, `sgn`,
/// `D_k` (`k <= max_k`), on canonical signatures.
pub fn reduced_gp_pairs(max_dim: u32, max_k: u32) -> Vec<GPPair> {
    let mut out = Vec::new();
    for dv in 1..=max_dim {
        for dw in (0..dv).filter(|dw| (dv - dw) % 2 == 1) {
            let w = canonical_target(dw);
            let v = w.oplus(&QuadSpace::new(1, 0)).oplus(&QuadSpace::split((dv - dw - 1) / 2));
            debug_assert!(is_admissible_pair(&w, &v).is_some());
            let ws = reduced_reps(dw, max_k);
            let vs = reduced_reps(dv, max_k);
            for mw in &ws {
                for mv in &vs {
                    let phi_w = LParameter::new(mw.clone(), w).expect("generated");
                    let phi_v = LParameter::new(mv.clone(), v).expect("generated");
                    out.push(GPPair::new(phi_w, phi_v).expect("admissible"));
                }
            }
        }
    }
    out
}

/// Distinct constituents of a parameter family, for diagnostics.
pub fn constituents(params: &[LParameter]) -> BTreeSet<IrredRep> {
    params.iter().flat_map(|p| p.rep.summands().map(|(r, _)| *r)).collect()
}

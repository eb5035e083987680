//! Tempered finite-dimensional representations of the real Weil group.
//!
//! Irreducibles are one-dimensional characters `sgn^a |.|^{it}` and the
//! two-dimensional induced representations `D_k ⊗ |.|^{it}` with `k >= 1`.
//! Twists are exact rationals.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::rational::Rational64;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("D_0 is reducible; enter it as Char(0,t) + Char(1,t)")]
    ReducibleDisc,
    #[error("sign exponent must be 0 or 1, got {0}")]
    BadSignExponent(u32),
    #[error("non-tempered twist: real part {0} is not zero")]
    NotTempered(String),
    #[error("invalid rational {0:?}")]
    BadRational(String),
    #[error("multiplicity must be positive")]
    ZeroMultiplicity,
}

/// A unitary twist exponent `t` (the representation `|.|^{it}`), stored exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Twist(pub Rational64);

impl Twist {
    pub const ZERO: Twist = Twist(Rational64::new_raw(0, 1));

    pub fn new(numer: i64, denom: i64) -> Self {
        Twist(Rational64::new(numer, denom))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }
}

impl std::ops::Add for Twist {
    type Output = Twist;

    fn add(self, rhs: Twist) -> Twist {
        Twist(self.0 + rhs.0)
    }
}

impl std::ops::Neg for Twist {
    type Output = Twist;

    fn neg(self) -> Twist {
        Twist(-self.0)
    }
}

impl From<i64> for Twist {
    fn from(n: i64) -> Self {
        Twist(Rational64::from_integer(n))
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Twist {
    type Err = RepError;

    fn from_str(s: &str) -> Result<Self, RepError> {
        let s = s.trim();
        let bad = || RepError::BadRational(s.to_string());
        let r = match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Rational64::new(n, d)
            }
            None => Rational64::from_integer(s.parse().map_err(|_| bad())?),
        };
        Ok(Twist(r))
    }
}

impl Serialize for Twist {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Twist {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(n) => Ok(Twist::from(n)),
        }
    }
}

/// An irreducible tempered representation of the real Weil group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "IrredRepr", into = "IrredRepr")]
pub enum IrredRep {
    /// `sgn^a |.|^{it}`.
    Char { a: u8, t: Twist },
    /// `D_k ⊗ |.|^{it}`, `k >= 1`.
    Disc { k: u32, t: Twist },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum IrredRepr {
    Char {
        a: u32,
        #[serde(default)]
        t: Twist,
        #[serde(default, skip_serializing)]
        sigma: Option<Twist>,
    },
    Disc {
        k: u32,
        #[serde(default)]
        t: Twist,
        #[serde(default, skip_serializing)]
        sigma: Option<Twist>,
    },
}

impl TryFrom<IrredRepr> for IrredRep {
    type Error = RepError;

    fn try_from(r: IrredRepr) -> Result<Self, RepError> {
        let check_sigma = |sigma: Option<Twist>| match sigma {
            Some(s) if !s.is_zero() => Err(RepError::NotTempered(s.to_string())),
            _ => Ok(()),
        };
        match r {
            IrredRepr::Char { a, t, sigma } => {
                check_sigma(sigma)?;
                IrredRep::char(a, t)
            }
            IrredRepr::Disc { k, t, sigma } => {
                check_sigma(sigma)?;
                IrredRep::disc(k, t)
            }
        }
    }
}

impl From<IrredRep> for IrredRepr {
    fn from(r: IrredRep) -> Self {
        match r {
            IrredRep::Char { a, t } => IrredRepr::Char { a: a as u32, t, sigma: None },
            IrredRep::Disc { k, t } => IrredRepr::Disc { k, t, sigma: None },
        }
    }
}

/// How an irreducible pairs with its contragredient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SelfDualType {
    OrthogonalSD,
    SymplecticSD,
    NotSelfDual,
}

impl IrredRep {
    pub fn char(a: u32, t: Twist) -> Result<Self, RepError> {
        if a > 1 {
            return Err(RepError::BadSignExponent(a));
        }
        Ok(IrredRep::Char { a: a as u8, t })
    }

    pub fn disc(k: u32, t: Twist) -> Result<Self, RepError> {
        if k == 0 {
            return Err(RepError::ReducibleDisc);
        }
        Ok(IrredRep::Disc { k, t })
    }

    /// The trivial character.
    pub const fn trivial() -> Self {
        IrredRep::Char { a: 0, t: Twist::ZERO }
    }

    /// The sign character.
    pub const fn sgn() -> Self {
        IrredRep::Char { a: 1, t: Twist::ZERO }
    }

    /// Untwisted `D_k`.
    ///
    /// # Panics
    /// If `k == 0`.
    pub fn d(k: u32) -> Self {
        IrredRep::disc(k, Twist::ZERO).expect("k >= 1")
    }

    pub fn twist(&self) -> Twist {
        match *self {
            IrredRep::Char { t, .. } | IrredRep::Disc { t, .. } => t,
        }
    }

    pub fn dim(&self) -> u32 {
        match self {
            IrredRep::Char { .. } => 1,
            IrredRep::Disc { .. } => 2,
        }
    }

    pub fn dual(&self) -> Self {
        match *self {
            IrredRep::Char { a, t } => IrredRep::Char { a, t: -t },
            IrredRep::Disc { k, t } => IrredRep::Disc { k, t: -t },
        }
    }

    pub fn self_dual_type(&self) -> SelfDualType {
        if !self.twist().is_zero() {
            return SelfDualType::NotSelfDual;
        }
        match *self {
            IrredRep::Char { .. } => SelfDualType::OrthogonalSD,
            IrredRep::Disc { k, .. } if k % 2 == 0 => SelfDualType::OrthogonalSD,
            IrredRep::Disc { .. } => SelfDualType::SymplecticSD,
        }
    }

    /// Same representation with the twist shifted by `s`.
    pub fn shifted(&self, s: Twist) -> Self {
        match *self {
            IrredRep::Char { a, t } => IrredRep::Char { a, t: t + s },
            IrredRep::Disc { k, t } => IrredRep::Disc { k, t: t + s },
        }
    }

    /// Decomposition of `self ⊗ other` into irreducibles (with repetition).
    pub fn tensor(&self, other: &IrredRep) -> Vec<IrredRep> {
        let t = self.twist() + other.twist();
        match (*self, *other) {
            (IrredRep::Char { a, .. }, IrredRep::Char { a: b, .. }) => {
                vec![IrredRep::Char { a: (a + b) % 2, t }]
            }
            (IrredRep::Char { .. }, IrredRep::Disc { k, .. })
            | (IrredRep::Disc { k, .. }, IrredRep::Char { .. }) => vec![IrredRep::Disc { k, t }],
            (IrredRep::Disc { k, .. }, IrredRep::Disc { k: l, .. }) => {
                let mut out = vec![IrredRep::Disc { k: k + l, t }];
                if k == l {
                    out.push(IrredRep::Char { a: 0, t });
                    out.push(IrredRep::Char { a: 1, t });
                } else {
                    out.push(IrredRep::Disc { k: k.abs_diff(l), t });
                }
                out
            }
        }
    }
}

impl fmt::Display for IrredRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, t) = match self {
            IrredRep::Char { a: 0, t } => ("1".to_string(), t),
            IrredRep::Char { t, .. } => ("sgn".to_string(), t),
            IrredRep::Disc { k, t } => (format!("D{k}"), t),
        };
        if t.is_zero() {
            f.write_str(&name)
        } else if t.0.is_negative() {
            write!(f, "{name}|.|^(-{}i)", -t.0)
        } else {
            write!(f, "{name}|.|^({}i)", t.0)
        }
    }
}

/// A finite direct sum of irreducibles, kept in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Summand>", into = "Vec<Summand>")]
pub struct WeilRep {
    summands: BTreeMap<IrredRep, u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Summand {
    pub rep: IrredRep,
    pub mult: u32,
}

impl TryFrom<Vec<Summand>> for WeilRep {
    type Error = RepError;

    fn try_from(entries: Vec<Summand>) -> Result<Self, RepError> {
        let mut out = WeilRep::empty();
        for e in entries {
            if e.mult == 0 {
                return Err(RepError::ZeroMultiplicity);
            }
            out.add(e.rep, e.mult);
        }
        Ok(out)
    }
}

impl From<WeilRep> for Vec<Summand> {
    fn from(w: WeilRep) -> Self {
        w.summands
            .into_iter()
            .map(|(rep, mult)| Summand { rep, mult })
            .collect()
    }
}

impl WeilRep {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn irreducible(rep: IrredRep) -> Self {
        let mut out = Self::empty();
        out.add(rep, 1);
        out
    }

    pub fn from_irreducibles<I: IntoIterator<Item = IrredRep>>(reps: I) -> Self {
        let mut out = Self::empty();
        for r in reps {
            out.add(r, 1);
        }
        out
    }

    pub fn add(&mut self, rep: IrredRep, mult: u32) {
        if mult > 0 {
            *self.summands.entry(rep).or_insert(0) += mult;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Distinct irreducibles with their multiplicities, in canonical order.
    pub fn summands(&self) -> impl Iterator<Item = (&IrredRep, u32)> + '_ {
        self.summands.iter().map(|(r, m)| (r, *m))
    }

    pub fn multiplicity(&self, rep: &IrredRep) -> u32 {
        self.summands.get(rep).copied().unwrap_or(0)
    }

    pub fn num_distinct(&self) -> usize {
        self.summands.len()
    }

    pub fn dim(&self) -> u32 {
        self.summands.iter().map(|(r, m)| r.dim() * m).sum()
    }

    pub fn direct_sum(&self, other: &WeilRep) -> WeilRep {
        let mut out = self.clone();
        for (r, m) in other.summands() {
            out.add(*r, m);
        }
        out
    }

    pub fn dual(&self) -> WeilRep {
        WeilRep {
            summands: self.summands.iter().map(|(r, m)| (r.dual(), *m)).collect(),
        }
    }

    pub fn tensor(&self, other: &WeilRep) -> WeilRep {
        let mut out = WeilRep::empty();
        for (a, ma) in self.summands() {
            for (b, mb) in other.summands() {
                for c in a.tensor(b) {
                    out.add(c, ma * mb);
                }
            }
        }
        out
    }
}

impl FromIterator<(IrredRep, u32)> for WeilRep {
    fn from_iter<I: IntoIterator<Item = (IrredRep, u32)>>(iter: I) -> Self {
        let mut out = WeilRep::empty();
        for (r, m) in iter {
            out.add(r, m);
        }
        out
    }
}

impl fmt::Display for WeilRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (r, m) in self.summands() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

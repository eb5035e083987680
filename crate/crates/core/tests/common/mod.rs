#![allow(dead_code)]

use std::f64::consts::PI;

use num::rational::Rational64;
use num::Complex;
use rand::Rng;

use gpkit::conjclass::{FactorDatum, KappaDatum};
use gpkit::quadspace::{QuadSpace, Sign};
use gpkit::weilrep::{IrredRep, Twist, WeilRep};

type C = Complex<f64>;
type Mat = [[C; 2]; 2];

/// An element `z` or `z·j` of the real Weil group, `z = r e^{iθ}`.
#[derive(Debug, Clone, Copy)]
pub struct WeilElement {
    pub r: f64,
    pub theta: f64,
    pub with_j: bool,
}

impl WeilElement {
    pub fn random<R: Rng>(rng: &mut R) -> Self {
        WeilElement {
            r: rng.gen_range(0.2..5.0),
            theta: rng.gen_range(0.0..2.0 * PI),
            with_j: rng.gen_bool(0.5),
        }
    }
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut m = [[C::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    m
}

/// `|z|^{2it}`.
fn unitary(r: f64, t: Twist) -> C {
    C::from_polar(1.0, 2.0 * t.to_f64() * r.ln())
}

/// The matrix of an irreducible at `w`, from the induced model.
pub fn matrix(rho: &IrredRep, w: &WeilElement) -> Vec<Vec<C>> {
    match *rho {
        IrredRep::Char { a, t } => {
            let j = if w.with_j && a == 1 { -1.0 } else { 1.0 };
            vec![vec![unitary(w.r, t) * j]]
        }
        IrredRep::Disc { k, t } => {
            let u = unitary(w.r, t);
            let e = C::from_polar(1.0, k as f64 * w.theta);
            let z: Mat = [[e * u, C::new(0.0, 0.0)], [C::new(0.0, 0.0), e.conj() * u]];
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let j: Mat = [[C::new(0.0, 0.0), C::new(sign, 0.0)], [C::new(1.0, 0.0), C::new(0.0, 0.0)]];
            let m = if w.with_j { mat_mul(&z, &j) } else { z };
            m.iter().map(|row| row.to_vec()).collect()
        }
    }
}

pub fn trace_irred(rho: &IrredRep, w: &WeilElement) -> C {
    let m = matrix(rho, w);
    (0..m.len()).map(|i| m[i][i]).sum()
}

pub fn trace(rep: &WeilRep, w: &WeilElement) -> C {
    rep.summands().map(|(r, m)| trace_irred(r, w) * m as f64).sum()
}

/// `tr_{A⊗B}(w) = tr_A(w) tr_B(w)` at `points` random elements.
pub fn tensor_character_identity<R: Rng>(a: &WeilRep, b: &WeilRep, points: usize, rng: &mut R) -> bool {
    let ab = a.tensor(b);
    (0..points).all(|_| {
        let w = WeilElement::random(rng);
        let lhs = trace(&ab, &w);
        let rhs = trace(a, &w) * trace(b, &w);
        (lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1.0)
    })
}

pub fn random_irred<R: Rng>(rng: &mut R) -> IrredRep {
    let t = match rng.gen_range(0..4) {
        0 | 1 => Twist::ZERO,
        2 => Twist::new(rng.gen_range(-6..=6), 2),
        _ => Twist::new(rng.gen_range(-9..=9), 3),
    };
    if rng.gen_bool(0.35) {
        IrredRep::char(rng.gen_range(0..2), t).unwrap()
    } else {
        IrredRep::disc(rng.gen_range(1..=7), t).unwrap()
    }
}

/// A random representation with `dim <= max_dim`.
pub fn random_rep<R: Rng>(rng: &mut R, max_dim: u32) -> WeilRep {
    let target = rng.gen_range(0..=max_dim);
    let mut rep = WeilRep::empty();
    while rep.dim() < target {
        let r = random_irred(rng);
        if rep.dim() + r.dim() <= target {
            rep.add(r, 1);
        }
    }
    rep
}

/// `dim` of a maximal compact subgroup of `SO(p, q)`.
fn max_compact_dim(v: &QuadSpace) -> i64 {
    let (p, q) = (v.p as i64, v.q as i64);
    p * (p - 1) / 2 + q * (q - 1) / 2
}

/// Kottwitz sign from maximal compact dimensions of `SO(V)` and of the
/// quasi-split member of its inner class.
pub fn kottwitz_oracle(v: &QuadSpace) -> Sign {
    let n = v.dim() as i64;
    let qs = if n % 2 == 1 {
        QuadSpace::new((n as u32).div_ceil(2), n as u32 / 2)
    } else {
        // inner class of even dim is fixed by p - q mod 4
        let half = n / 2;
        let (p, q) = if v.delta().rem_euclid(4) == 0 {
            (half, half)
        } else {
            (half + 1, half - 1)
        };
        QuadSpace::new(p as u32, q as u32)
    };
    let diff = max_compact_dim(&qs) - max_compact_dim(v);
    assert!(diff % 2 == 0);
    Sign::pow_neg_one(diff / 2)
}

fn small_rational<R: Rng>(rng: &mut R, choices: &[(i64, i64)]) -> Rational64 {
    let (n, d) = choices[rng.gen_range(0..choices.len())];
    Rational64::new(n, d)
}

/// A random datum with up to four factors drawn from small pools.
pub fn random_kappa<R: Rng>(rng: &mut R) -> KappaDatum {
    let n = rng.gen_range(0..=4);
    let angles = [(0, 1), (1, 1), (1, 2), (3, 2), (1, 3), (5, 3), (2, 3), (1, 4), (7, 4), (1, 6)];
    let reals = [(1, 1), (-1, 1), (2, 1), (1, 2), (-2, 1), (-1, 2), (3, 1), (1, 3)];
    let parts = [(0, 1), (1, 1), (-1, 1), (2, 1), (1, 2), (3, 5), (4, 5), (-4, 5)];
    let factors = (0..n)
        .map(|_| match rng.gen_range(0..3) {
            0 => FactorDatum::c_field(small_rational(rng, &angles)),
            1 => FactorDatum::r_split(small_rational(rng, &reals)).unwrap(),
            _ => loop {
                let w = Complex::new(small_rational(rng, &parts), small_rational(rng, &parts));
                if let Ok(f) = FactorDatum::c_split(w) {
                    break f;
                }
            },
        })
        .collect();
    KappaDatum::new(factors)
}

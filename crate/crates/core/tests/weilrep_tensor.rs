mod common;

use num::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{matrix, tensor_character_identity, trace, WeilElement};
use gpkit::weilrep::{IrredRep, SelfDualType, Twist, WeilRep};

type C = Complex<f64>;

fn rep<const N: usize>(rs: [IrredRep; N]) -> WeilRep {
    WeilRep::from_irreducibles(rs)
}

#[test]
fn spec_tensor_examples_match_traces() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let d1 = rep([IrredRep::d(1)]);
    let expected = rep([IrredRep::d(2), IrredRep::trivial(), IrredRep::sgn()]);
    assert_eq!(d1.tensor(&d1), expected);
    assert!(tensor_character_identity(&d1, &d1, 50, &mut rng));

    let sgn = rep([IrredRep::sgn()]);
    let d3 = rep([IrredRep::d(3)]);
    assert_eq!(sgn.tensor(&d3), d3);
    assert!(tensor_character_identity(&sgn, &d3, 50, &mut rng));
}

#[test]
fn decompositions_agree_with_traces_pointwise() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let t = Twist::new(1, 3);
    let cases = [
        (IrredRep::disc(4, t).unwrap(), IrredRep::d(4)),
        (IrredRep::disc(2, t).unwrap(), IrredRep::disc(5, -t).unwrap()),
        (IrredRep::char(1, t).unwrap(), IrredRep::disc(1, t).unwrap()),
    ];
    for (a, b) in cases {
        let (a, b) = (WeilRep::irreducible(a), WeilRep::irreducible(b));
        for _ in 0..30 {
            let w = WeilElement::random(&mut rng);
            let lhs = trace(&a.tensor(&b), &w);
            let rhs = trace(&a, &w) * trace(&b, &w);
            assert!((lhs - rhs).norm() < 1e-12, "{a} x {b} at {w:?}");
        }
    }
}

#[test]
fn traces_separate_sign_characters() {
    let w = WeilElement { r: 1.0, theta: 0.3, with_j: true };
    assert!((trace(&rep([IrredRep::sgn()]), &w) - C::new(-1.0, 0.0)).norm() < 1e-15);
    assert!((trace(&rep([IrredRep::trivial()]), &w) - C::new(1.0, 0.0)).norm() < 1e-15);
}

/// Dimension of the space of invariant bilinear forms, split by symmetry.
fn invariant_forms(rho: &IrredRep) -> (usize, usize) {
    let n = rho.dim() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut rows: Vec<Vec<C>> = Vec::new();
    for _ in 0..6 {
        let m = matrix(rho, &WeilElement::random(&mut rng));
        // (M^T B M - B)_{ij} is linear in the entries of B
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![C::new(0.0, 0.0); n * n];
                for k in 0..n {
                    for l in 0..n {
                        row[k * n + l] += m[k][i] * m[l][j];
                    }
                }
                row[i * n + j] -= C::new(1.0, 0.0);
                rows.push(row);
            }
        }
    }
    let sym = restricted_nullity(&rows, n, 1.0);
    let alt = restricted_nullity(&rows, n, -1.0);
    (sym, alt)
}

/// Nullity of `rows` on forms with `B^T = sign · B`.
fn restricted_nullity(rows: &[Vec<C>], n: usize, sign: f64) -> usize {
    let mut basis: Vec<Vec<C>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && sign < 0.0 {
                continue;
            }
            let mut b = vec![C::new(0.0, 0.0); n * n];
            b[i * n + j] = C::new(1.0, 0.0);
            b[j * n + i] = C::new(sign, 0.0);
            if i == j {
                b[i * n + i] = C::new(1.0, 0.0);
            }
            basis.push(b);
        }
    }
    let mut a: Vec<Vec<C>> = rows
        .iter()
        .map(|r| basis.iter().map(|b| r.iter().zip(b).map(|(x, y)| x * y).sum()).collect())
        .collect();
    let cols = basis.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..a.len()).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
        else {
            break;
        };
        if a[piv][col].norm() < 1e-9 {
            continue;
        }
        a.swap(rank, piv);
        let p = a[rank][col];
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank {
                let f = row[col] / p;
                for c in 0..cols {
                    row[c] -= f * pivot_row[c];
                }
            }
        }
        rank += 1;
    }
    cols - rank
}

#[test]
fn self_dual_type_matches_invariant_forms() {
    let t = Twist::new(3, 10);
    let mut reps = vec![IrredRep::trivial(), IrredRep::sgn()];
    reps.extend((1..=8).map(IrredRep::d));
    reps.extend([IrredRep::char(0, t).unwrap(), IrredRep::char(1, -t).unwrap()]);
    reps.extend((1..=4).map(|k| IrredRep::disc(k, t).unwrap()));
    for rho in reps {
        let expected = match invariant_forms(&rho) {
            (1, 0) => SelfDualType::OrthogonalSD,
            (0, 1) => SelfDualType::SymplecticSD,
            (0, 0) => SelfDualType::NotSelfDual,
            other => panic!("{rho}: unexpected invariant forms {other:?}"),
        };
        assert_eq!(rho.self_dual_type(), expected, "{rho}");
    }
}

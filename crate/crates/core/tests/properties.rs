use proptest::prelude::*;

use gpkit::conjclass::{
    eps_odd, is_in_xi_reg_v, is_in_xi_reg_v_direct, line_sign, product_from_sum, signature,
    FactorCounts, SignVector,
};
use gpkit::epsilon::{eps_half, eps_symplectic};
use gpkit::lparam::{gp_character, reduced_gp_pairs, LParameter};
use gpkit::quadspace::{
    is_admissible_pair, is_quasi_split, kottwitz_sign, pure_inner_forms, quasi_split_form,
    relevant_pairs, QuadSpace, Sign,
};
use gpkit::weilrep::{IrredRep, SelfDualType, Twist, WeilRep};

fn irred() -> impl Strategy<Value = IrredRep> {
    let twist = prop_oneof![Just(Twist::ZERO), (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Twist::new(n, d))];
    prop_oneof![
        (0u32..2, twist.clone()).prop_map(|(a, t)| IrredRep::char(a, t).unwrap()),
        (1u32..=9, twist).prop_map(|(k, t)| IrredRep::disc(k, t).unwrap()),
    ]
}

fn rep() -> impl Strategy<Value = WeilRep> {
    prop::collection::vec((irred(), 1u32..=3), 0..4).prop_map(|v| v.into_iter().collect())
}

fn untwisted_rep(symplectic: bool) -> impl Strategy<Value = WeilRep> {
    let pool: Vec<IrredRep> = [IrredRep::trivial(), IrredRep::sgn()]
        .into_iter()
        .chain((1..=9).map(IrredRep::d))
        .filter(move |r| (r.self_dual_type() == SelfDualType::SymplecticSD) == symplectic)
        .collect();
    prop::collection::vec((prop::sample::select(pool), 1u32..=2), 0..4)
        .prop_map(|v| v.into_iter().collect())
}

fn space(max_dim: u32) -> impl Strategy<Value = QuadSpace> {
    (0..=max_dim).prop_flat_map(|n| (0..=n).prop_map(move |p| QuadSpace::new(p, n - p)))
}

fn counts() -> impl Strategy<Value = (FactorCounts, SignVector)> {
    (0u32..5, 0u32..4, 0u32..3).prop_flat_map(|(n_c, n_r, n_cc)| {
        prop::collection::vec(prop::bool::ANY, n_c as usize).prop_map(move |bits| {
            let c = SignVector(bits.into_iter().map(Sign::from_parity).collect());
            (FactorCounts { n_c, n_r, n_cc }, c)
        })
    })
}

proptest! {
    #[test]
    fn tensor_commutative_and_associative(a in rep(), b in rep(), c in rep()) {
        prop_assert_eq!(a.tensor(&b), b.tensor(&a));
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
        prop_assert_eq!(a.tensor(&b).dim(), a.dim() * b.dim());
    }

    #[test]
    fn tensor_distributes_over_sums(a in rep(), b in rep(), c in rep()) {
        prop_assert_eq!(a.tensor(&b.direct_sum(&c)), a.tensor(&b).direct_sum(&a.tensor(&c)));
    }

    #[test]
    fn dual_is_involution(r in irred()) {
        prop_assert_eq!(r.dual().dual(), r);
        prop_assert_eq!(r.self_dual_type() != SelfDualType::NotSelfDual, r.dual() == r);
    }

    #[test]
    fn eps_is_additive(a in rep(), b in rep()) {
        prop_assert_eq!(eps_half(&a.direct_sum(&b)), eps_half(&a) * eps_half(&b));
    }

    #[test]
    fn eps_of_rep_plus_dual_is_real(a in rep()) {
        prop_assert!(eps_half(&a.direct_sum(&a.dual())).is_real());
    }

    #[test]
    fn symplectic_times_orthogonal_has_real_eps(a in untwisted_rep(true), b in untwisted_rep(false)) {
        prop_assert!(eps_symplectic(&a.tensor(&b)).is_ok());
    }

    #[test]
    fn json_round_trip(a in rep()) {
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<WeilRep>(&s).unwrap(), a);
    }

    #[test]
    fn quasi_split_form_is_pure_inner_and_has_trivial_sign(v in space(14)) {
        let qs = quasi_split_form(&v);
        prop_assert!(is_quasi_split(&qs));
        prop_assert!(pure_inner_forms(&v).contains(&qs));
        prop_assert_eq!(kottwitz_sign(&qs), Sign::Plus);
    }

    #[test]
    fn relevant_pairs_are_indexed_by_pure_inner_forms(w in space(7), r in 0u32..3, d in prop::bool::ANY) {
        let v = w.oplus(&QuadSpace::split(r)).oplus(&QuadSpace::line(Sign::from_parity(d)));
        let pairs = relevant_pairs(&w, &v).unwrap();
        let ws: Vec<QuadSpace> = pairs.iter().map(|p| p.w).collect();
        prop_assert_eq!(ws, pure_inner_forms(&w));
        for p in pairs {
            prop_assert_eq!(p.v.dim(), v.dim());
            prop_assert!(is_admissible_pair(&p.w, &p.v).is_some());
        }
    }

    #[test]
    fn signature_formula((k, c) in counts()) {
        let kappa = k.representative();
        let s = signature(&kappa, &c).unwrap();
        let theta = c.sum();
        let d = k.dim() as i64;
        prop_assert_eq!(s.p as i64, d / 2 + theta);
        prop_assert_eq!(s.q as i64, d / 2 - theta);
        prop_assert!(kappa.is_regular());
    }

    #[test]
    fn parity_identity((_k, c) in counts()) {
        prop_assert_eq!(c.product(), product_from_sum(&c));
    }

    #[test]
    fn xi_reg_rule_matches_decomposition((k, c) in counts(), v in space(13)) {
        prop_assert_eq!(is_in_xi_reg_v(&k, &c, &v), is_in_xi_reg_v_direct(&k, &c, &v));
    }

    #[test]
    fn line_sign_and_eps_constant_on_kottwitz_class(v in space(13), n in 0u32..6) {
        prop_assume!(v.is_odd_dim());
        for a in pure_inner_forms(&v) {
            prop_assert_eq!(line_sign(&a, n), line_sign(&v, n));
            if kottwitz_sign(&a) == kottwitz_sign(&v) {
                prop_assert_eq!(eps_odd(&a, n), eps_odd(&v, n));
            }
        }
    }

    #[test]
    fn component_group_order(a in untwisted_rep(false), sym in prop::bool::ANY) {
        let dim = a.dim() + sym as u32;
        let target = gpkit::lparam::canonical_target(dim);
        if let Ok(phi) = LParameter::new(a, target) {
            let g = phi.component_group();
            let r = g.len() as u32;
            prop_assert!(g.order() == 1 << r || g.order() == 1 << (r - 1));
            prop_assert_eq!(g.elements().len() as u64, g.order());
        }
    }
}

#[test]
fn character_is_trivial_at_identity() {
    for pair in reduced_gp_pairs(7, 7) {
        let gw = pair.phi_w().component_group();
        let gv = pair.phi_v().component_group();
        assert_eq!(gp_character(&pair, &gw.identity(), &gv.identity()).unwrap(), Sign::Plus);
    }
}

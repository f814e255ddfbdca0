mod common;

use proptest::prelude::*;

use hp_core::arith::{evaluate_at_theta, BigRational, ExactMatrix, QPoly, Scalar, ThetaMode, ThetaRational};
use hp_core::characters::{character, character_one_cycle, isotypic_dimension, one_cycle_class};
use hp_core::operators::{apply_delta, apply_dunkl, apply_p, apply_xd, dunkl_pairing};
use hp_core::poly::{
    dominance_leq, sort_to_partition, v_lambda_basis, Exponents, MultiPoly, MultiplicityProfile, Partition,
    Permutation, VLambda,
};
use hp_core::settings::Settings;
use hp_core::spectra::{
    eig_sym_brute, eig_sym_closed, eig_sym_series, jack_polynomial, trace_isotypic_brute, trace_isotypic_closed,
};
use hp_core::verify::monomials;

use common::rat;

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| rat(p, q))
}

fn positive_theta() -> impl Strategy<Value = ThetaMode> {
    (1i64..=7, 1i64..=4).prop_map(|(p, q)| ThetaMode::specialized(p, q))
}

fn theta_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-4i64..=4, 1..=3).prop_map(|c| QPoly::from_int_coeffs(&c))
}

fn theta_rational() -> impl Strategy<Value = ThetaRational> {
    (theta_poly(), theta_poly()).prop_filter_map("zero denominator", |(n, d)| {
        if d.is_zero() {
            None
        } else {
            ThetaRational::reduce(n, d).ok()
        }
    })
}

fn scalar_in(mode: ThetaMode) -> BoxedStrategy<Scalar> {
    if mode.is_symbolic() {
        theta_rational().prop_map(Scalar::Sym).boxed()
    } else {
        small_rat().prop_map(Scalar::Rat).boxed()
    }
}

fn any_mode() -> impl Strategy<Value = ThetaMode> {
    prop_oneof![Just(ThetaMode::Symbolic), Just(ThetaMode::specialized(1, 2))]
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    any_mode().prop_flat_map(|m| (scalar_in(m.clone()), scalar_in(m.clone()), scalar_in(m)))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

/// A homogeneous polynomial with small integer coefficients.
fn homogeneous(n: usize, maxdeg: u32, mode: ThetaMode) -> impl Strategy<Value = MultiPoly> {
    (0..=maxdeg).prop_flat_map(move |d| {
        let pool: Vec<Exponents> = monomials(n, d).into_iter().filter(|e| e.degree() == d).collect();
        let mode = mode.clone();
        prop::collection::vec((prop::sample::select(pool), -3i64..=3), 1..=3).prop_map(move |terms| {
            let mut f = MultiPoly::zero(n, &mode);
            for (e, c) in terms {
                f.add_term(e, &mode.int(c));
            }
            f
        })
    })
}

fn partition(n: usize, maxsize: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=maxsize, n).prop_filter_map("too large", move |v| {
        let p = Partition::from_unsorted(v);
        (p.size() <= maxsize).then_some(p)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.checked_inv().unwrap()).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(x in theta_rational(), y in theta_rational(), t in small_rat()) {
        if let (Ok(ex), Ok(ey)) = (evaluate_at_theta(&x, &t), evaluate_at_theta(&y, &t)) {
            prop_assert_eq!(evaluate_at_theta(&(&x + &y), &t).unwrap(), &ex + &ey);
            prop_assert_eq!(evaluate_at_theta(&(&x * &y), &t).unwrap(), &ex * &ey);
            prop_assert_eq!(evaluate_at_theta(&(&x - &y), &t).unwrap(), &ex - &ey);
        }
    }

    #[test]
    fn scalar_text_round_trips(x in theta_rational()) {
        let s = ThetaMode::Symbolic;
        let v = Scalar::Sym(x);
        prop_assert_eq!(Scalar::parse(&v.to_string(), &s).unwrap(), v);
    }

    #[test]
    fn charpoly_commutes_with_specialization(
        entries in prop::collection::vec((-3i64..=3, -2i64..=2), 9),
        t in small_rat(),
    ) {
        let s = ThetaMode::Symbolic;
        let m = ExactMatrix::from_fn(3, 3, &s, |r, c| {
            let (a, b) = entries[3 * r + c];
            s.linear(a, b)
        });
        let q = ThetaMode::Specialized(t);
        let sym = m.charpoly().unwrap();
        let spec = m.specialize(&q).unwrap().charpoly().unwrap();
        let evaluated: Vec<Scalar> = sym.iter().map(|c| q.specialize(c).unwrap()).collect();
        prop_assert_eq!(evaluated, spec);
        prop_assert_eq!(m.trace().unwrap(), -sym[1].clone());
    }

    #[test]
    fn sorting_ignores_permutation(e in prop::collection::vec(0u32..5, 4), sigma in permutation(4)) {
        let g = Exponents::new(e);
        prop_assert_eq!(sort_to_partition(&sigma.act(&g)), sort_to_partition(&g));
    }

    #[test]
    fn permutations_act_as_a_group(
        f in homogeneous(4, 4, ThetaMode::specialized(1, 1)),
        s in permutation(4),
        t in permutation(4),
    ) {
        prop_assert_eq!(f.permute(&t).permute(&s), f.permute(&s.compose(&t)));
    }

    #[test]
    fn v_lambda_dimension(lambda in partition(5, 7), extra in 0usize..2) {
        let n = 5 - extra;
        prop_assume!(lambda.length() <= n);
        let prof = MultiplicityProfile::new(&lambda, n).unwrap();
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        let want = fact(n) / prof.multiplicities.iter().map(|&k| fact(k)).product::<u64>();
        prop_assert_eq!(v_lambda_basis(&lambda, n).unwrap().len() as u64, want);
        let total: u64 = Partition::all_of(n as u32, n)
            .iter()
            .map(|t| isotypic_dimension(&lambda, t, n).unwrap())
            .sum();
        prop_assert_eq!(total, want);
    }

    #[test]
    fn p_m_preserves_degree(f in homogeneous(3, 4, ThetaMode::Symbolic), m in 1u32..=3) {
        let g = apply_p(m, &f).unwrap();
        prop_assert!(g.is_zero() || (g.is_homogeneous() && g.degree() == f.degree()));
    }

    #[test]
    fn p_m_is_equivariant(f in homogeneous(3, 4, ThetaMode::specialized(2, 3)), s in permutation(3), m in 1u32..=3) {
        prop_assert_eq!(apply_p(m, &f).unwrap().permute(&s), apply_p(m, &f.permute(&s)).unwrap());
    }

    #[test]
    fn operators_commute(f in positive_theta().prop_flat_map(|t| homogeneous(3, 4, t))) {
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            prop_assert_eq!(
                apply_dunkl(a, &apply_dunkl(b, &f).unwrap()).unwrap(),
                apply_dunkl(b, &apply_dunkl(a, &f).unwrap()).unwrap()
            );
            let lhs = apply_delta(b, &f).unwrap().mul_var(a).sub(&apply_delta(b, &f.mul_var(a)).unwrap());
            prop_assert_eq!(lhs, f.permute(&Permutation::transposition(3, a, b)));
        }
        prop_assert_eq!(
            apply_p(2, &apply_p(3, &f).unwrap()).unwrap(),
            apply_p(3, &apply_p(2, &f).unwrap()).unwrap()
        );
    }

    #[test]
    fn xd_is_self_adjoint(
        f in homogeneous(3, 3, ThetaMode::Symbolic),
        g in homogeneous(3, 3, ThetaMode::Symbolic),
        i in 0usize..3,
    ) {
        prop_assert_eq!(dunkl_pairing(&f, &g).unwrap(), dunkl_pairing(&g, &f).unwrap());
        prop_assert_eq!(
            dunkl_pairing(&apply_xd(i, &f).unwrap(), &g).unwrap(),
            dunkl_pairing(&f, &apply_xd(i, &g).unwrap()).unwrap()
        );
    }

    #[test]
    fn symmetric_eigenvalue_forms_agree(lambda in partition(4, 5), theta in positive_theta(), m in 1u32..=4) {
        let n = 4;
        let closed = eig_sym_closed(&lambda, m, n, &theta).unwrap();
        prop_assert_eq!(&eig_sym_series(&lambda, n, m, &theta).unwrap()[m as usize], &closed);
        prop_assert_eq!(&eig_sym_brute(&lambda, m, n, &theta, &Settings::default()).unwrap(), &closed);
        let jack = jack_polynomial(&lambda, n, &[m], &theta).unwrap();
        prop_assert_eq!(apply_p(m, &jack.poly).unwrap(), jack.poly.scale(&closed));
    }

    #[test]
    fn trace_forms_agree(lambda in partition(4, 5), tau_index in 0usize..5, theta in positive_theta(), m in 1u32..=3) {
        let tau = Partition::all_of(4, 4)[tau_index].clone();
        prop_assert_eq!(
            trace_isotypic_closed(&lambda, &tau, m, 4, &theta).unwrap(),
            trace_isotypic_brute(&lambda, &tau, m, 4, &theta).unwrap()
        );
    }

    #[test]
    fn one_cycle_formula(n in 1usize..=7, pick in any::<prop::sample::Index>(), k in 1usize..=7) {
        let k = 1 + (k - 1) % n;
        let all = Partition::all_of(n as u32, n);
        let tau = pick.get(&all);
        let mn = character(tau, &one_cycle_class(n, k).unwrap()).unwrap();
        prop_assert_eq!(character_one_cycle(tau, k).unwrap(), BigRational::from_integer(mn.into()));
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for size in 0..=8u32 {
        let all = Partition::all_of(size, size as usize);
        for a in &all {
            assert!(dominance_leq(a, a));
            for b in &all {
                if dominance_leq(a, b) && dominance_leq(b, a) {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if dominance_leq(a, b) && dominance_leq(b, c) {
                        assert!(dominance_leq(a, c), "({a}) ⪯ ({b}) ⪯ ({c})");
                    }
                }
            }
        }
    }
}

#[test]
fn v_lambda_is_closed_under_permutation() {
    let vl = VLambda::new(&"2,1,1".parse().unwrap(), 4).unwrap();
    for s in Permutation::all(4) {
        for e in vl.basis() {
            assert!(vl.index_of(&s.act(e)).is_some());
        }
    }
}

mod common;

use hp_core::arith::{BigInt, BigRational, ExactMatrix, ThetaMode};
use hp_core::characters::{
    averaged_character, character, class_size, isotypic_dimension, projector_matrix, AveragedCharacterSpec,
    CharacterContext,
};
use hp_core::operators::{apply_xd, dunkl_pairing, t_power_sum_matrix};
use hp_core::poly::{Exponents, MultiPoly, Partition, Permutation, VLambda};
use hp_core::settings::Settings;
use hp_core::spectra::{
    eig_skew_closed, isotypic_blocks, joint_eigenbasis_full, trace_isotypic_brute, trace_isotypic_closed,
    verify_joint_basis,
};
use hp_core::verify::{commutator_identity_holds, monomials, partitions_up_to};

use common::{brute_averaged_character, compositions, frobenius_character, subsets};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn character_table_matches_frobenius_formula() {
    for n in 1..=6u32 {
        let all = Partition::all_of(n, n as usize);
        for tau in &all {
            for mu in &all {
                assert_eq!(
                    character(tau, mu).unwrap(),
                    frobenius_character(tau.parts(), mu.parts()),
                    "τ=({tau}) μ=({mu})"
                );
            }
        }
    }
}

#[test]
fn averaged_characters_match_young_subgroup_sum() {
    for n in 1..=5 {
        for blocks in compositions(n) {
            for a in subsets(blocks.len()) {
                let spec = AveragedCharacterSpec::new(blocks.clone(), a.clone()).unwrap();
                for tau in Partition::all_of(n as u32, n) {
                    assert_eq!(
                        averaged_character(&tau, &spec).unwrap(),
                        brute_averaged_character(tau.parts(), &blocks, &a),
                        "τ=({tau}) n={blocks:?} A={a:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn all_ones_blocks_need_no_averaging() {
    for n in 1..=6usize {
        for a in subsets(n) {
            let spec = AveragedCharacterSpec::new(vec![1; n], a.clone()).unwrap();
            let mut cls = vec![a.len() as u32];
            cls.extend(std::iter::repeat_n(1, n - a.len()));
            let cls = Partition::from_unsorted(cls);
            for tau in Partition::all_of(n as u32, n) {
                let want = BigRational::from_integer(character(&tau, &cls).unwrap().into());
                assert_eq!(averaged_character(&tau, &spec).unwrap(), want);
            }
        }
    }
}

#[test]
fn averaged_example_values() {
    let spec = AveragedCharacterSpec::new(vec![2, 1], vec![0, 1]).unwrap();
    assert_eq!(averaged_character(&part("2,1"), &spec).unwrap(), common::rat(-1, 2));
    assert_eq!(brute_averaged_character(&[2, 1], &[2, 1], &[0, 1]), common::rat(-1, 2));
    for blocks in compositions(4) {
        for a in subsets(blocks.len()) {
            let spec = AveragedCharacterSpec::new(blocks.clone(), a).unwrap();
            assert_eq!(averaged_character(&part("4"), &spec).unwrap(), common::rat(1, 1));
        }
    }
}

#[test]
fn character_columns_are_orthogonal() {
    for n in 1..=7usize {
        let ctx = CharacterContext::new(n).unwrap();
        let order: BigInt = (1..=n as u64).product::<u64>().into();
        for c in ctx.classes() {
            for d in ctx.classes() {
                let s: i64 = ctx
                    .irreps()
                    .iter()
                    .map(|t| ctx.value(t, c).unwrap() * ctx.value(t, d).unwrap())
                    .sum();
                let want = if c == d { order.clone() / class_size(c) } else { BigInt::from(0) };
                assert_eq!(BigInt::from(s), want, "N={n} classes ({c}), ({d})");
            }
        }
    }
}

#[test]
fn projectors_are_idempotent_and_split_v_lambda() {
    let q = ThetaMode::specialized(1, 1);
    for n in 1..=4usize {
        for lambda in partitions_up_to(n, 4) {
            let vl = VLambda::new(&lambda, n).unwrap();
            let mut total = 0u64;
            let mut sum = ExactMatrix::zeros(vl.dim(), vl.dim(), &q);
            for tau in Partition::all_of(n as u32, n) {
                let p = projector_matrix(&tau, &vl, &q).unwrap();
                assert_eq!(p.mul(&p).unwrap(), p, "λ=({lambda}) τ=({tau})");
                let dim = isotypic_dimension(&lambda, &tau, n).unwrap();
                assert_eq!(p.trace().unwrap(), q.int(dim as i64));
                assert_eq!(p.rank() as u64, dim);
                total += dim;
                sum = sum.add(&p).unwrap();
            }
            assert_eq!(total as usize, vl.dim());
            assert_eq!(sum, ExactMatrix::identity(vl.dim(), &q));
        }
    }
}

#[test]
fn commutator_sign_as_derived() {
    let s = ThetaMode::Symbolic;
    for e in monomials(3, 3) {
        let f = MultiPoly::monomial(e, s.one(), &s);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            assert!(commutator_identity_holds(a, b, &f).unwrap());
        }
    }
    // The opposite sign fails on x1^2 x2.
    let f = MultiPoly::monomial(Exponents::new(vec![2, 1, 0]), s.one(), &s);
    let lhs = apply_xd(0, &apply_xd(1, &f).unwrap())
        .unwrap()
        .sub(&apply_xd(1, &apply_xd(0, &f).unwrap()).unwrap());
    let g = f.permute(&Permutation::transposition(3, 0, 1));
    let flipped = apply_xd(0, &g).unwrap().sub(&apply_xd(1, &g).unwrap()).scale(&s.theta());
    assert!(!lhs.is_zero());
    assert_ne!(lhs, flipped);
}

#[test]
fn skew_eigenvalue_uses_positive_theta() {
    let s = ThetaMode::Symbolic;
    for n in 2..=4usize {
        for lambda in partitions_up_to(n, 6).into_iter().filter(|l| l.has_distinct_parts(n)) {
            let vl = VLambda::new(&lambda, n).unwrap();
            for m in 1..=4 {
                let op = t_power_sum_matrix(&vl, m, &s, &Settings::default()).unwrap();
                let block = isotypic_blocks(&vl, &op, &s)
                    .unwrap()
                    .into_iter()
                    .find(|b| b.tau.length() == n)
                    .unwrap();
                assert_eq!(block.basis.len(), 1);
                let want = eig_skew_closed(&lambda, m, n, &s).unwrap();
                assert_eq!(block.restricted.get(0, 0), &want, "λ=({lambda}) m={m}");
            }
        }
    }
}

#[test]
fn worked_trace_examples() {
    let s = ThetaMode::Symbolic;
    let l = part("2,1,0");
    let t = part("1,1,1");
    let closed = trace_isotypic_closed(&l, &t, 1, 3, &s).unwrap();
    assert_eq!(closed.to_string(), "6*θ + 3");
    assert_eq!(closed, trace_isotypic_brute(&l, &t, 1, 3, &s).unwrap());
}

#[test]
fn joint_eigenfunctions_are_orthogonal() {
    let q = ThetaMode::specialized(1, 1);
    for lambda in ["1,1,0", "2,1,0", "3,0,0", "2,2,0", "3,1,0"] {
        let bases = joint_eigenbasis_full(&part(lambda), 3, &[1, 2, 3], &q, &Settings::default()).unwrap();
        let mut funcs = Vec::new();
        for (bi, b) in bases.iter().enumerate() {
            verify_joint_basis(b).unwrap();
            for f in &b.functions {
                funcs.push(((bi, f.group), f));
            }
        }
        for (i, (gi, f)) in funcs.iter().enumerate() {
            for (gj, g) in &funcs[i + 1..] {
                if gi != gj && f.eigenvalues != g.eigenvalues {
                    let p = dunkl_pairing(&f.poly, &g.poly).unwrap();
                    assert!(p.is_zero(), "λ=({lambda}): ⟨{}, {}⟩ = {p}", f.leading, g.leading);
                }
            }
        }
    }
}

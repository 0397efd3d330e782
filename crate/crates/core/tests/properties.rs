use std::collections::BTreeSet;

use proptest::prelude::*;

use chevlab::repr::Representation;
use chevlab::ring::{Ideal, Ring};
use chevlab::rootsystem::{RootSystem, RootSystemType};
use chevlab::words::{Letter, Word};

const TYPES: [RootSystemType; 3] = [RootSystemType::A2, RootSystemType::C2, RootSystemType::G2];

fn residues(i: &Ideal) -> BTreeSet<u64> {
    i.elements().unwrap().iter().map(|x| x.residue().unwrap()).collect()
}

/// `{k·d mod n}` by direct search.
fn multiples(n: u64, d: u64) -> BTreeSet<u64> {
    (0..n).map(|k| k * d % n).collect()
}

#[derive(Debug, Clone)]
enum Plan {
    X(usize, u64),
    Z(usize, u64, u64),
    Conj(Vec<(usize, u64)>, Vec<(usize, u64)>),
}

fn plan_strategy() -> impl Strategy<Value = Plan> {
    prop_oneof![
        3 => (0usize..12, 0u64..1000).prop_map(|(r, c)| Plan::X(r, c)),
        1 => (0usize..12, 0u64..1000, 0u64..1000).prop_map(|(r, c, e)| Plan::Z(r, c, e)),
        1 => (
            prop::collection::vec((0usize..12, 0u64..1000), 0..3),
            prop::collection::vec((0usize..12, 0u64..1000), 0..3)
        )
            .prop_map(|(b, by)| Plan::Conj(b, by)),
    ]
}

fn build(rs: &RootSystem, ring: &Ring, plans: &[Plan]) -> Word {
    let roots = rs.roots();
    let c = |v: u64| ring.from_i64(v as i64);
    let xs = |v: &[(usize, u64)]| {
        Word::from_letters(v.iter().map(|&(r, x)| Letter::X(roots[r % roots.len()], c(x))).collect())
    };
    Word::from_letters(
        plans
            .iter()
            .map(|s| match s {
                Plan::X(r, x) => Letter::X(roots[r % roots.len()], c(*x)),
                Plan::Z(r, x, e) => Letter::Z(roots[r % roots.len()], c(*x), c(*e)),
                Plan::Conj(b, by) => Letter::Conj(xs(b), xs(by)),
            })
            .collect(),
    )
}

fn word_case() -> impl Strategy<Value = (usize, u64, Vec<Plan>, Vec<Plan>)> {
    (
        0usize..3,
        prop::sample::select(vec![4u64, 6, 8, 9, 12]),
        prop::collection::vec(plan_strategy(), 0..5),
        prop::collection::vec(plan_strategy(), 0..5),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn principal_ideal_matches_multiples(n in 2u64..64, d in 0u64..80) {
        let ring = Ring::integers_mod(n).unwrap();
        let i = Ideal::principal(&ring, d as i64);
        let oracle = multiples(n, d);
        prop_assert_eq!(residues(&i), oracle.clone());
        for x in 0..n {
            prop_assert_eq!(i.contains(&ring.from_i64(x as i64)), oracle.contains(&x));
        }
    }

    #[test]
    fn ideal_products_commute_and_associate(n in 2u64..64, a in 0u64..64, b in 0u64..64, c in 0u64..64) {
        let ring = Ring::integers_mod(n).unwrap();
        let (ia, ib, ic) = (Ideal::principal(&ring, a as i64), Ideal::principal(&ring, b as i64), Ideal::principal(&ring, c as i64));
        let ab = ia.product(&ib).unwrap();
        prop_assert_eq!(residues(&ab), residues(&ib.product(&ia).unwrap()));
        prop_assert_eq!(residues(&ab), multiples(n, a * b));
        let left = ab.product(&ic).unwrap();
        let right = ia.product(&ib.product(&ic).unwrap()).unwrap();
        prop_assert_eq!(residues(&left), residues(&right));
    }

    #[test]
    fn evaluation_is_multiplicative((t, n, a, b) in word_case()) {
        let rep = Representation::of(TYPES[t]);
        let ring = Ring::integers_mod(n).unwrap();
        let (wa, wb) = (build(rep.system(), &ring, &a), build(rep.system(), &ring, &b));
        let (ga, gb) = (wa.evaluate(&rep, &ring), wb.evaluate(&rep, &ring));
        prop_assert_eq!(wa.concat(&wb).evaluate(&rep, &ring), ga.mul(&gb));
        prop_assert!(wa.concat(&wa.inverse()).evaluate(&rep, &ring).is_identity());
    }

    #[test]
    fn free_reduce_preserves_value((t, n, a, b) in word_case()) {
        let rep = Representation::of(TYPES[t]);
        let ring = Ring::integers_mod(n).unwrap();
        let w = build(rep.system(), &ring, &a).concat(&build(rep.system(), &ring, &b).inverse());
        let r = w.free_reduce();
        prop_assert_eq!(r.evaluate(&rep, &ring), w.evaluate(&rep, &ring));
        prop_assert_eq!(r.free_reduce(), r);
    }

    #[test]
    fn commutator_identities((t, n, a, b) in word_case(), c in prop::collection::vec(plan_strategy(), 0..3)) {
        let rep = Representation::of(TYPES[t]);
        let ring = Ring::integers_mod(n).unwrap();
        let rs = rep.system();
        let (wa, wb, wc) = (build(rs, &ring, &a), build(rs, &ring, &b), build(rs, &ring, &c));
        let ev = |w: &Word| w.evaluate(&rep, &ring);
        prop_assert_eq!(ev(&Word::commutator(&wa, &wb).inverse()), ev(&Word::commutator(&wb, &wa)));
        // [ab, c] = a[b, c]a⁻¹ · [a, c]
        let lhs = Word::commutator(&wa.concat(&wb), &wc);
        let rhs = Word::conj(Word::commutator(&wb, &wc), wa.clone()).concat(&Word::commutator(&wa, &wc));
        prop_assert_eq!(ev(&lhs), ev(&rhs));
    }

    #[test]
    fn sexpr_round_trip((t, n, a, _b) in word_case()) {
        let rs = RootSystem::new(TYPES[t]);
        let ring = Ring::integers_mod(n).unwrap();
        let w = build(&rs, &ring, &a);
        let text = w.to_sexpr();
        let back = Word::parse_sexpr(&text, &rs, &ring).unwrap();
        prop_assert_eq!(back.to_sexpr(), text);
        prop_assert!(back == w);
    }

    #[test]
    fn reduction_is_multiplicative((t, n, a, b) in word_case(), d in 1u64..13) {
        let rep = Representation::of(TYPES[t]);
        let ring = Ring::integers_mod(n).unwrap();
        let i = Ideal::principal(&ring, d as i64);
        prop_assume!(!i.is_unit());
        let (ga, gb) = (build(rep.system(), &ring, &a).evaluate(&rep, &ring), build(rep.system(), &ring, &b).evaluate(&rep, &ring));
        let lhs = ga.mul(&gb).reduce_mod(&i).unwrap();
        let rhs = ga.reduce_mod(&i).unwrap().mul(&gb.reduce_mod(&i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn congruence_subgroup_is_closed(t in 0usize..3, n in prop::sample::select(vec![8u64, 9, 12, 27]), d in 2u64..5,
                                     a in prop::collection::vec((0usize..12, 0u64..100, 0u64..100), 1..5)) {
        // Relative generators z_α(dξ, η) lie in G(R, (d)), hence so does any product and conjugate.
        let rep = Representation::of(TYPES[t]);
        let ring = Ring::integers_mod(n).unwrap();
        let i = Ideal::principal(&ring, d as i64);
        let roots = rep.system().roots();
        let w = Word::from_letters(a.iter().map(|&(r, x, e)| {
            Letter::Z(roots[r % roots.len()], ring.from_i64((d * x) as i64), ring.from_i64(e as i64))
        }).collect());
        prop_assert!(w.in_relative_level(&i));
        let g = w.evaluate(&rep, &ring);
        prop_assert!(g.congruence_level_test(&i));
        let by = Word::x(roots[0], ring.from_i64(1));
        prop_assert!(Word::conj(w, by).evaluate(&rep, &ring).congruence_level_test(&i));
    }
}

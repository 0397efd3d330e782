//! Certified factors must land in the enumerated mixed commutator subgroup.

use chevlab::factorizer::{mixed_commutator_generators, Bullet, MainLemma};
use chevlab::repr::Representation;
use chevlab::ring::{Ideal, Ring, RingElement};
use chevlab::rootsystem::{MainLemmaCase, RootSystemType};
use chevlab::subgroupenum::{commutator_subgroup_of, elementary_generators, EnumeratedSubgroup, FiniteContext, Generator};

fn mixed(rep: &Representation, ring: &Ring, i: &Ideal, j: &Ideal) -> EnumeratedSubgroup {
    let ctx = FiniteContext::new(rep, ring).unwrap();
    let gens = |k: &Ideal| -> Vec<Generator> {
        elementary_generators(rep, k).unwrap().into_iter().map(Generator::Word).collect()
    };
    commutator_subgroup_of(&ctx, &gens(i), &gens(j), 1_000_000).unwrap()
}

fn check_case(ty: RootSystemType, cases: &[MainLemmaCase], n: u64, d: i64, order: usize) {
    let rep = Representation::of(ty);
    let ring = Ring::integers_mod(n).unwrap();
    let i = Ideal::principal(&ring, d);
    let l = mixed(&rep, &ring, &i, &i);
    assert_eq!(l.len(), order);
    let etas: Vec<RingElement> = ring.enumerate_elements().unwrap().collect();
    let rs = rep.system();
    for &case in cases {
        for &alpha in rs.roots().iter().filter(|&&a| rs.case_applies(a, case)) {
            let ml = MainLemma::new(&rep, case, Some(alpha)).unwrap();
            for xi in i.elements().unwrap() {
                for zeta in i.elements().unwrap() {
                    for eta in &etas {
                        let f = ml.factorize(&xi, &zeta, eta).unwrap();
                        assert!(f.verify(&rep, &i, &i).passed());
                        for (w, _) in &f.factors {
                            assert!(l.contains(&w.evaluate(&rep, &ring)), "{case} {} ({xi},{zeta},{eta})", alpha.name());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn a2_factors_lie_in_mixed_commutator_over_z8() {
    check_case(RootSystemType::A2, &[MainLemmaCase::A2], 8, 2, 256);
}

#[test]
fn c2_factors_lie_in_mixed_commutator_over_z27() {
    check_case(RootSystemType::C2, &[MainLemmaCase::C2Long, MainLemmaCase::C2Short], 27, 3, 59049);
}

#[test]
fn certified_generators_lie_in_mixed_commutator() {
    let rep = Representation::of(RootSystemType::A2);
    let ring = Ring::integers_mod(8).unwrap();
    let i = Ideal::principal(&ring, 2);
    let j = Ideal::principal(&ring, 2);
    let l = mixed(&rep, &ring, &i, &j);
    assert_eq!(l.len(), 256);
    let m = mixed_commutator_generators(rep.system(), &i, &j).unwrap();
    assert_eq!(m.count(Bullet::OppositeCommutator), 6 * 4 * 4 * 8);
    for g in m.generators.iter().filter(|g| g.certificate.is_some()) {
        assert!(l.contains(&g.word.evaluate(&rep, &ring)), "{}", g.word.to_sexpr());
    }
}

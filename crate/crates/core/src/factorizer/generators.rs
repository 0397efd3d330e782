//! Generator lists for `E(Φ, R, I)` and `[E(Φ, I), E(Φ, J)]` over finite rings.

use serde::Serialize;

use crate::ring::{Ideal, RingElement};
use crate::rootsystem::{RootSystem, RootSystemType};
use crate::words::{Certificate, Word};

use super::FactorizerError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Bullet {
    /// `[x_α(ξ), z_α(ζ, η)]`
    ConjugatedCommutator,
    /// `[x_α(ξ), x_{−α}(ζ)]`
    OppositeCommutator,
    /// `z_α(ξζ, η)`
    LevelGenerator,
}

/// The ring hypotheses needed for doubly laced systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConditionStar {
    pub residue_field_f2: bool,
    /// `θ ∈ θ²R + 2θR` for all `θ`; only asked of C2.
    pub theta_condition: Option<bool>,
}

impl ConditionStar {
    pub fn evaluate(ty: RootSystemType, ring: &crate::ring::Ring) -> Result<ConditionStar, FactorizerError> {
        let theta_condition = match ty {
            RootSystemType::C2 => Some(ring.theta_condition_holds()?),
            _ => None,
        };
        Ok(ConditionStar { residue_field_f2: ring.has_residue_field_f2(), theta_condition })
    }

    /// Whether the hypotheses hold for `ty`; always true for A2.
    pub fn holds(&self, ty: RootSystemType) -> bool {
        ty == RootSystemType::A2 || (!self.residue_field_f2 && self.theta_condition != Some(false))
    }
}

#[derive(Debug, Clone)]
pub struct MixedGenerator {
    pub bullet: Bullet,
    pub word: Word,
    /// `None` for the first family, whose membership is the main lemma.
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone)]
pub struct MixedGenerators {
    pub condition_star: ConditionStar,
    /// False when the generation statement is not known to apply; the
    /// list is still produced.
    pub condition_star_holds: bool,
    pub generators: Vec<MixedGenerator>,
}

impl MixedGenerators {
    pub fn count(&self, bullet: Bullet) -> usize {
        self.generators.iter().filter(|g| g.bullet == bullet).count()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.generators.iter().map(|g| &g.word)
    }
}

fn elements(i: &Ideal) -> Result<Vec<RingElement>, FactorizerError> {
    if !i.ring().is_finite() {
        return Err(FactorizerError::InfiniteRing);
    }
    Ok(i.elements()?)
}

/// All `z_α(ξ, η)` with `α ∈ Φ`, `ξ ∈ I`, `η ∈ R`, in root order, then
/// element order.
pub fn relative_generators(rs: &RootSystem, i: &Ideal) -> Result<Vec<Word>, FactorizerError> {
    let xs = elements(i)?;
    let rs_all = elements(&Ideal::unit(i.ring()))?;
    let mut out = Vec::with_capacity(rs.len() * xs.len() * rs_all.len());
    for &a in rs.roots() {
        for xi in &xs {
            for eta in &rs_all {
                out.push(Word::z(a, xi.clone(), eta.clone()));
            }
        }
    }
    Ok(out)
}

/// The three generator families of `[E(Φ, I), E(Φ, J)]`, each over all
/// `α ∈ Φ`, `ξ ∈ I`, `ζ ∈ J`, `η ∈ R`.
pub fn mixed_commutator_generators(
    rs: &RootSystem,
    i: &Ideal,
    j: &Ideal,
) -> Result<MixedGenerators, FactorizerError> {
    let ring = i.ring();
    let xs = elements(i)?;
    let zs = elements(j)?;
    let etas = elements(&Ideal::unit(ring))?;
    let ij = i.product(j)?;
    let condition_star = ConditionStar::evaluate(rs.type_tag(), ring)?;
    let mut generators = Vec::new();
    for bullet in [Bullet::ConjugatedCommutator, Bullet::OppositeCommutator, Bullet::LevelGenerator] {
        for &a in rs.roots() {
            for xi in &xs {
                for zeta in &zs {
                    for eta in &etas {
                        let (word, certificate) = match bullet {
                            Bullet::ConjugatedCommutator => (
                                Word::commutator(
                                    &Word::x(a, xi.clone()),
                                    &Word::z(a, zeta.clone(), eta.clone()),
                                ),
                                None,
                            ),
                            Bullet::OppositeCommutator => {
                                let x = Word::x(a, xi.clone());
                                let y = Word::x(a.neg(), zeta.clone());
                                (
                                    Word::commutator(&x, &y),
                                    Some(Certificate::GenCommutator { a: x, b: y }),
                                )
                            }
                            Bullet::LevelGenerator => (
                                Word::z(a, xi * zeta, eta.clone()),
                                Some(Certificate::LevelElement(ij.clone())),
                            ),
                        };
                        generators.push(MixedGenerator { bullet, word, certificate });
                    }
                }
            }
        }
    }
    Ok(MixedGenerators {
        condition_star_holds: condition_star.holds(rs.type_tag()),
        condition_star,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::Representation;
    use crate::ring::Ring;
    use crate::words::validate_certificate;

    #[test]
    fn counts_a2_z8() {
        let ring = Ring::integers_mod(8).unwrap();
        let rs = RootSystem::new(RootSystemType::A2);
        let i = Ideal::principal(&ring, 2);
        let j = Ideal::principal(&ring, 4);
        assert_eq!(relative_generators(&rs, &i).unwrap().len(), 6 * 4 * 8);
        let m = mixed_commutator_generators(&rs, &i, &j).unwrap();
        assert_eq!(m.count(Bullet::ConjugatedCommutator), 6 * 4 * 2 * 8);
        assert_eq!(m.count(Bullet::OppositeCommutator), 6 * 4 * 2 * 8);
        assert!(m.condition_star_holds);
    }

    #[test]
    fn zero_ideal_generators_are_trivial() {
        let ring = Ring::integers_mod(4).unwrap();
        let rep = Representation::of(RootSystemType::A2);
        for w in relative_generators(rep.system(), &Ideal::zero(&ring)).unwrap() {
            assert!(w.evaluate(&rep, &ring).is_identity());
        }
    }

    #[test]
    fn immediate_certificates_validate() {
        let ring = Ring::integers_mod(9).unwrap();
        let rep = Representation::of(RootSystemType::C2);
        let i = Ideal::principal(&ring, 3);
        let m = mixed_commutator_generators(rep.system(), &i, &i).unwrap();
        assert!(!m.condition_star.residue_field_f2 && m.condition_star_holds);
        for g in m.generators.iter().filter(|g| g.certificate.is_some()).step_by(7) {
            assert!(validate_certificate(g.certificate.as_ref().unwrap(), &g.word, &i, &i, &rep, &ring));
        }
    }

    #[test]
    fn condition_star_fails_in_characteristic_two() {
        let ring = Ring::integers_mod(4).unwrap();
        let c = ConditionStar::evaluate(RootSystemType::C2, &ring).unwrap();
        assert!(c.residue_field_f2 && !c.holds(RootSystemType::C2) && c.holds(RootSystemType::A2));
    }

    #[test]
    fn infinite_ring_rejected() {
        let ring = Ring::integers();
        let rs = RootSystem::new(RootSystemType::A2);
        assert!(matches!(
            relative_generators(&rs, &Ideal::principal(&ring, 2)),
            Err(FactorizerError::InfiniteRing)
        ));
    }
}

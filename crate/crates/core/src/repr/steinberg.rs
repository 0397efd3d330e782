//! Symbolic check of the Steinberg relations over `Z[ξ, ζ]`.

use serde::Serialize;

use super::Representation;
use crate::ring::Ring;
use crate::rootsystem::RootSystemType;
use crate::structconst::StructureConstantTable;
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SteinbergReport {
    pub system: RootSystemType,
    pub additivity: Vec<RelationCheck>,
    pub commutators: Vec<RelationCheck>,
}

impl SteinbergReport {
    pub fn all_passed(&self) -> bool {
        self.additivity.iter().chain(&self.commutators).all(|c| c.passed)
    }
}

/// Checks `x_α(ξ)x_α(ζ) = x_α(ξ+ζ)` for every root and the commutator
/// formula for every ordered pair `α ≠ ±β`, with constants read off `rep`.
pub fn verify_steinberg(rep: &Representation) -> SteinbergReport {
    let ring = Ring::parse("Z[xi,zeta]").expect("valid ring");
    let xi = ring.var("xi").expect("variable");
    let zeta = ring.var("zeta").expect("variable");
    let rs = rep.system();

    let additivity = rs
        .roots()
        .iter()
        .map(|&a| {
            let lhs = Word::from_letters(vec![
                crate::words::Letter::X(a, xi.clone()),
                crate::words::Letter::X(a, zeta.clone()),
            ]);
            let passed = lhs.evaluate(rep, &ring) == rep.x(a, &(&xi + &zeta));
            RelationCheck { relation: format!("x_{a}(xi) x_{a}(zeta) = x_{a}(xi+zeta)"), passed }
        })
        .collect();

    let table = StructureConstantTable::compute(rep);
    let mut commutators = Vec::new();
    for &a in rs.roots() {
        for &b in rs.roots() {
            if a == b || a == b.neg() {
                continue;
            }
            let relation = format!("[x_{a}(xi), x_{b}(zeta)]");
            let passed = match &table {
                Ok(t) => {
                    let lhs = Word::commutator(&Word::x(a, xi.clone()), &Word::x(b, zeta.clone()));
                    let rhs = t.chevalley_commutator_word(a, b, &xi, &zeta).expect("non-opposite");
                    lhs.evaluate(rep, &ring) == rhs.evaluate(rep, &ring)
                }
                Err(_) => false,
            };
            commutators.push(RelationCheck { relation, passed });
        }
    }
    SteinbergReport { system: rs.type_tag(), additivity, commutators }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_suite_passes() {
        let r = verify_steinberg(&Representation::of(RootSystemType::A2));
        assert_eq!(r.additivity.len(), 6);
        assert_eq!(r.commutators.len(), 24);
        assert!(r.all_passed());
    }
}

//! Membership certificates for `[E(Φ, I), E(Φ, J)]`.
//!
//! A certificate is a tree whose leaves are checkable facts:
//!
//! * `GenOfEI`: the word is one generator `x_α(ξ)` with `ξ ∈ I`.
//! * `GenCommutator { a, b }`: the word equals `[a, b]` with one of `a`, `b`
//!   in `E(I)` and the other in `E(J)`.
//! * `LevelElement(K)`: `K ⊆ IJ`, and the word is syntactically in
//!   `E(Φ, R, K)` and evaluates into `G(Φ, R, K)`. Such elements lie in the
//!   mixed commutator subgroup because `E(Φ, R, IJ) ≤ [E(Φ, I), E(Φ, J)]`.
//! * `ConjugateOf { inner, by }`: the word is `^by w'` with `inner` valid for
//!   `w'`; valid because the mixed commutator subgroup is normal in `E(Φ, R)`.
//! * `ProductOf(parts)`: every part is valid and their product equals the word.

use thiserror::Error;

use super::{Letter, Word};
use crate::repr::Representation;
use crate::ring::{Ideal, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    GenOfEI,
    GenCommutator { a: Word, b: Word },
    LevelElement(Ideal),
    ConjugateOf { inner: Box<Certificate>, by: Word },
    ProductOf(Vec<(Word, Certificate)>),
}

impl Certificate {
    pub fn tag(&self) -> &'static str {
        match self {
            Certificate::GenOfEI => "GenOfEI",
            Certificate::GenCommutator { .. } => "GenCommutator",
            Certificate::LevelElement(_) => "LevelElement",
            Certificate::ConjugateOf { .. } => "ConjugateOf",
            Certificate::ProductOf(_) => "ProductOf",
        }
    }

    /// Short human-readable outline, e.g. `ConjugateOf(GenCommutator)`.
    pub fn summary(&self) -> String {
        match self {
            Certificate::LevelElement(k) => format!("LevelElement{k}"),
            Certificate::ConjugateOf { inner, .. } => format!("ConjugateOf({})", inner.summary()),
            Certificate::ProductOf(parts) => {
                let inner: Vec<String> = parts.iter().map(|(_, c)| c.summary()).collect();
                format!("ProductOf({})", inner.join(", "))
            }
            other => other.tag().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("GenOfEI: {0}")]
    GenOfEI(String),
    #[error("GenCommutator: {0}")]
    GenCommutator(String),
    #[error("LevelElement: {0}")]
    LevelElement(String),
    #[error("ConjugateOf: {0}")]
    ConjugateOf(String),
    #[error("ProductOf: {0}")]
    ProductOf(String),
    #[error("word has coefficients outside {0}")]
    WrongRing(String),
}

/// Checks `cert` for `w`, reporting the first failing leaf.
pub fn check_certificate(
    cert: &Certificate,
    w: &Word,
    i: &Ideal,
    j: &Ideal,
    rep: &Representation,
    ring: &Ring,
) -> Result<(), CertificateError> {
    if !w.coefficients_in(ring) {
        return Err(CertificateError::WrongRing(ring.to_string()));
    }
    match cert {
        Certificate::GenOfEI => match w.letters() {
            [Letter::X(_, c)] if i.contains(c) => Ok(()),
            [Letter::X(_, c)] => Err(CertificateError::GenOfEI(format!("{c} not in {i}"))),
            _ => Err(CertificateError::GenOfEI("not a single x letter".into())),
        },
        Certificate::GenCommutator { a, b } => {
            let oriented = (a.in_elementary_level(i) && b.in_elementary_level(j))
                || (a.in_elementary_level(j) && b.in_elementary_level(i));
            if !oriented {
                return Err(CertificateError::GenCommutator(
                    "factors are not in E(I) and E(J)".into(),
                ));
            }
            if w.evaluate(rep, ring) != Word::commutator(a, b).evaluate(rep, ring) {
                return Err(CertificateError::GenCommutator("word is not [a, b]".into()));
            }
            Ok(())
        }
        Certificate::LevelElement(k) => {
            let ij = i.product(j).map_err(|e| CertificateError::LevelElement(e.to_string()))?;
            if k.ring() != ring || !k.is_subset_of(&ij) {
                return Err(CertificateError::LevelElement(format!("{k} is not inside {ij}")));
            }
            if !w.in_relative_level(k) {
                return Err(CertificateError::LevelElement(format!(
                    "word is not built from generators of level {k}"
                )));
            }
            if !w.evaluate(rep, ring).congruence_level_test(k) {
                return Err(CertificateError::LevelElement(format!("not congruent to 1 mod {k}")));
            }
            Ok(())
        }
        Certificate::ConjugateOf { inner, by } => match w.letters() {
            [Letter::Conj(base, wby)] if wby == by => {
                check_certificate(inner, base, i, j, rep, ring)
            }
            _ => Err(CertificateError::ConjugateOf(
                "word is not a single conjugate by the stated word".into(),
            )),
        },
        Certificate::ProductOf(parts) => {
            for (k, (pw, pc)) in parts.iter().enumerate() {
                check_certificate(pc, pw, i, j, rep, ring)
                    .map_err(|e| CertificateError::ProductOf(format!("part {k}: {e}")))?;
            }
            let joined = Word::concat_all(parts.iter().map(|(pw, _)| pw));
            if joined.evaluate(rep, ring) != w.evaluate(rep, ring) {
                return Err(CertificateError::ProductOf("parts do not multiply to the word".into()));
            }
            Ok(())
        }
    }
}

pub fn validate_certificate(
    cert: &Certificate,
    w: &Word,
    i: &Ideal,
    j: &Ideal,
    rep: &Representation,
    ring: &Ring,
) -> bool {
    check_certificate(cert, w, i, j, rep, ring).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::RootSystemType;

    #[test]
    fn gen_of_ei_example() {
        let rep = Representation::of(RootSystemType::A2);
        let z8 = Ring::integers_mod(8).unwrap();
        let i = Ideal::principal(&z8, 2);
        let a = rep.system().simple_root(1);
        let w = Word::x(a, z8.from_i64(2));
        assert!(validate_certificate(&Certificate::GenOfEI, &w, &i, &i, &rep, &z8));
        let w = Word::x(a, z8.from_i64(1));
        assert!(!validate_certificate(&Certificate::GenOfEI, &w, &i, &i, &rep, &z8));
    }

    #[test]
    fn level_element_example() {
        let rep = Representation::of(RootSystemType::A2);
        let r = Ring::parse("Z[xi,zeta,eta]").unwrap();
        let i = Ideal::parse(&r, "xi").unwrap();
        let j = Ideal::parse(&r, "zeta").unwrap();
        let ij = i.product(&j).unwrap();
        let a = rep.system().simple_root(2);
        let w = Word::x(a, r.parse_element("xi*zeta*eta").unwrap());
        assert!(validate_certificate(&Certificate::LevelElement(ij.clone()), &w, &i, &j, &rep, &r));
        let w = Word::x(a, r.parse_element("xi*eta").unwrap());
        assert!(!validate_certificate(&Certificate::LevelElement(ij), &w, &i, &j, &rep, &r));
        let w = Word::x(a, r.parse_element("xi*zeta").unwrap());
        assert!(!validate_certificate(&Certificate::LevelElement(i.clone()), &w, &i, &j, &rep, &r));
    }

    #[test]
    fn conjugate_of_commutator() {
        let rep = Representation::of(RootSystemType::A2);
        let r = Ring::parse("Z[xi,zeta]").unwrap();
        let i = Ideal::parse(&r, "xi").unwrap();
        let j = Ideal::parse(&r, "zeta").unwrap();
        let (a1, a2) = rep.system().simple_roots();
        let a = Word::x(a1, r.var("xi").unwrap());
        let b = Word::x(a1.neg(), r.var("zeta").unwrap());
        let inner = Certificate::GenCommutator { a: a.clone(), b: b.clone() };
        let by = Word::x(a2, r.one());
        let w = Word::conj(Word::commutator(&a, &b), by.clone());
        let cert = Certificate::ConjugateOf { inner: Box::new(inner.clone()), by };
        assert!(validate_certificate(&cert, &w, &i, &j, &rep, &r));
        let wrong_by = Certificate::ConjugateOf { inner: Box::new(inner), by: Word::x(a1, r.one()) };
        assert!(!validate_certificate(&wrong_by, &w, &i, &j, &rep, &r));
        let bad = Certificate::GenCommutator { a: b.clone(), b: b.clone() };
        assert!(!validate_certificate(&bad, &Word::commutator(&b, &b), &i, &j, &rep, &r));
    }
}

//! Certified factorizations of `[x_α(ξ), z_α(ζ, η)]` into pieces that
//! visibly lie in `[E(Φ, I), E(Φ, J)]`.
//!
//! Every rewrite starts from an expression of `x_α(−ξ)` as a commutator
//! (times a tail of higher roots), conjugates it by `z = z_α(ζ, η)`, and
//! splits each conjugate `^z d` as `d · r` with a residue `r` computed in
//! the representation. The residues live in the unipotent radical opposite
//! to `α`'s Levi factor, so they are peeled into root elements there.

use crate::repr::{GroupElement, Representation};
use crate::ring::{Ideal, Ring, RingElement, RingError};
use crate::rootsystem::{MainLemmaCase, Root, RootSystem};
use crate::structconst::{normalize_signs, pair_grading, signed, SignNormalization, StructureConstantTable};
use crate::words::{check_certificate, Certificate, CertificateError, Word};

use super::FactorizerError;

/// The main-lemma construction for one case at one root, with the sign
/// normalization it is written against.
#[derive(Clone)]
pub struct MainLemma {
    rep: Representation,
    norm: SignNormalization,
}

#[derive(Clone, Debug)]
pub struct CertifiedFactorization {
    pub case: MainLemmaCase,
    pub alpha: Root,
    pub beta: Root,
    pub gamma: Root,
    /// `[x_α(ξ), z_α(ζ, η)]`
    pub target: Word,
    pub factors: Vec<(Word, Certificate)>,
    /// `T` with `x_α(−ξ) = [x_γ(1), x_β(ξ)] · T`; empty for the A2 case.
    pub tail: Word,
    /// Named conjugation residues, e.g. `("w", ..)`.
    pub residues: Vec<(&'static str, Word)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationCheck {
    pub product_equal: bool,
    pub certificates: Vec<Result<(), CertificateError>>,
}

impl FactorizationCheck {
    pub fn passed(&self) -> bool {
        self.product_equal && self.certificates.iter().all(Result::is_ok)
    }
}

impl CertifiedFactorization {
    pub fn product(&self) -> Word {
        Word::concat_all(self.factors.iter().map(|(w, _)| w))
    }

    /// Evaluates the product against the target and checks every
    /// certificate relative to `I`, `J`.
    pub fn verify(&self, rep: &Representation, i: &Ideal, j: &Ideal) -> FactorizationCheck {
        let ring = i.ring();
        let product_equal = self.product().evaluate(rep, ring) == self.target.evaluate(rep, ring);
        let certificates = self
            .factors
            .iter()
            .map(|(w, c)| check_certificate(c, w, i, j, rep, ring))
            .collect();
        FactorizationCheck { product_equal, certificates }
    }
}

/// One-shot form of [`MainLemma::factorize`].
pub fn main_lemma_word(
    rep: &Representation,
    case: MainLemmaCase,
    alpha: Root,
    xi: &RingElement,
    zeta: &RingElement,
    eta: &RingElement,
) -> Result<CertifiedFactorization, FactorizerError> {
    MainLemma::new(rep, case, Some(alpha))?.factorize(xi, zeta, eta)
}

impl MainLemma {
    /// Prepares `case` at `alpha`, or at the case's default root.
    pub fn new(rep: &Representation, case: MainLemmaCase, alpha: Option<Root>) -> Result<MainLemma, FactorizerError> {
        let rs = rep.system();
        let alpha = match alpha {
            Some(a) => a,
            None => rs.default_case_root(case).map_err(|e| FactorizerError::CaseMismatch(e.to_string()))?,
        };
        if !rs.case_applies(alpha, case) {
            return Err(FactorizerError::CaseMismatch(format!(
                "{case} does not apply at {} in {}",
                alpha.name(),
                rs.type_tag()
            )));
        }
        let table = StructureConstantTable::compute(rep)?;
        let norm = normalize_signs(&table, case, alpha)?;
        Ok(MainLemma { rep: rep.clone(), norm })
    }

    pub fn normalization(&self) -> &SignNormalization {
        &self.norm
    }

    fn rs(&self) -> &RootSystem {
        self.rep.system()
    }

    /// `x'_δ(t) = x_δ(ε_δ t)`, the normalized root element.
    fn xp(&self, delta: Root, t: RingElement) -> Word {
        Word::x(delta, signed(self.norm.sign(self.rs(), delta), &t))
    }

    fn eval(&self, w: &Word, ring: &Ring) -> GroupElement {
        w.evaluate(&self.rep, ring)
    }

    pub fn factorize(
        &self,
        xi: &RingElement,
        zeta: &RingElement,
        eta: &RingElement,
    ) -> Result<CertifiedFactorization, FactorizerError> {
        let ring = xi.ring().clone();
        for other in [zeta, eta] {
            if other.ring() != &ring {
                return Err(RingError::MixedRings(ring.to_string(), other.ring().to_string()).into());
            }
        }
        let SignNormalization { case, alpha, beta, gamma, .. } = self.norm;
        let target = Word::commutator(
            &Word::x(alpha, xi.clone()),
            &Word::z(alpha, zeta.clone(), eta.clone()),
        );
        let mut out = CertifiedFactorization {
            case,
            alpha,
            beta,
            gamma,
            target,
            factors: Vec::new(),
            tail: Word::empty(),
            residues: Vec::new(),
        };
        if xi.is_zero() || zeta.is_zero() || eta.is_zero() {
            return Ok(out);
        }
        let k = Ideal::new(&ring, &[xi * zeta])?;
        let z = Word::z(alpha, zeta.clone(), eta.clone());
        if case == MainLemmaCase::A2 {
            self.simply_laced(&mut out, xi, &z, &k)?;
        } else {
            self.doubly_laced(&mut out, xi, &z, &k)?;
        }
        Ok(out)
    }

    /// `x_α(−ξ) = [x'_β(1), x'_γ(−ξ)]`, so
    /// `x = ^{x_α(ξ)}(^{x'_β(1)}[y, x'_γ(−ξ)·r]) · ^{x'_γ(−ξ)}[x'_β(1), r]`
    /// with `y`, `r` the residues of `x'_β(1)` and `x'_γ(−ξ)`.
    fn simply_laced(
        &self,
        out: &mut CertifiedFactorization,
        xi: &RingElement,
        z: &Word,
        k: &Ideal,
    ) -> Result<(), FactorizerError> {
        let ring = xi.ring();
        let a = self.xp(out.beta, ring.one());
        let c = self.xp(out.gamma, -xi);
        if self.eval(&Word::commutator(&a, &c), ring) != self.eval(&Word::x(out.alpha, -xi), ring) {
            return Err(FactorizerError::SignMismatch(format!(
                "[x'_{}(1), x'_{}(-xi)] != x_{}(-xi)",
                out.beta, out.gamma, out.alpha
            )));
        }
        let y = self.residue(&a, z, ring)?;
        let r = self.residue(&c, z, ring)?;
        let cr = c.concat(&r);
        let part1 = Word::conj(
            Word::conj(Word::commutator(&y, &cr), a.clone()),
            Word::x(out.alpha, xi.clone()),
        );
        let cert1 = conjugate(
            conjugate(Certificate::GenCommutator { a: y.clone(), b: cr }, &a),
            &Word::x(out.alpha, xi.clone()),
        );
        let part2 = Word::conj(Word::conj(r.clone(), a.clone()).concat(&r.inverse()), c.clone());
        let cert2 = conjugate(Certificate::LevelElement(k.clone()), &c);
        out.factors = vec![(part1, cert1), (part2, cert2)];
        out.residues = vec![("y", y), ("z", r)];
        Ok(())
    }

    /// With `a = x'_γ(1)`, `b = x'_β(ξ)` and `x_α(−ξ) = [a, b]·T`:
    /// `x = ^{x_α(ξ)}(^a[w, b·v]) · ^{T⁻¹}(^b[a, v]) · r`
    /// where `w`, `v`, `r` are the residues of `a`, `b`, `T`.
    fn doubly_laced(
        &self,
        out: &mut CertifiedFactorization,
        xi: &RingElement,
        z: &Word,
        k: &Ideal,
    ) -> Result<(), FactorizerError> {
        let ring = xi.ring();
        let (alpha, beta, gamma) = (out.alpha, out.beta, out.gamma);
        let a = self.xp(gamma, ring.one());
        let b = self.xp(beta, xi.clone());
        let p = Word::commutator(&a, &b);
        let tail = self.tail(&p, alpha, beta, gamma, xi)?;
        let w = self.residue(&a, z, ring)?;
        let v = self.residue(&b, z, ring)?;
        let r = if tail.is_empty() { Word::empty() } else { self.residue(&tail, z, ring)? };
        let u = b.concat(&v);
        let ax = Word::x(alpha, xi.clone());
        let part1 = Word::conj(Word::conj(Word::commutator(&w, &u), a.clone()), ax.clone());
        let cert1 = conjugate(conjugate(Certificate::GenCommutator { a: w.clone(), b: u }, &a), &ax);
        let base2 = Word::conj(v.clone(), a.clone()).concat(&v.inverse());
        let tinv = tail.inverse();
        let part2 = Word::conj(Word::conj(base2, b.clone()), tinv.clone());
        let cert2 = conjugate(conjugate(Certificate::LevelElement(k.clone()), &b), &tinv);
        let cert3 = Certificate::LevelElement(k.clone());
        out.factors = vec![(part1, cert1), (part2, cert2), (r.clone(), cert3)];
        out.tail = tail;
        out.residues = vec![("w", w), ("v", v), ("z", r)];
        Ok(())
    }

    /// Peels `P⁻¹ x_α(−ξ)` over the roots `iβ + jγ`, `i, j ≥ 1`.
    fn tail(
        &self,
        p: &Word,
        alpha: Root,
        beta: Root,
        gamma: Root,
        xi: &RingElement,
    ) -> Result<Word, FactorizerError> {
        let ring = xi.ring();
        let rs = self.rs();
        let mut order: Vec<(u32, usize, Root)> = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                if let Some(r) = rs.combine(i as i32, beta, j as i32, gamma) {
                    order.push((i + j, rs.index_of(r), r));
                }
            }
        }
        order.sort();
        let order: Vec<Root> = order.into_iter().map(|t| t.2).collect();
        let g = self.eval(&p.inverse().concat(&Word::x(alpha, -xi)), ring);
        let coeffs = self.rep.peel(&g, &order, pair_grading(beta, gamma)).map_err(|e| {
            FactorizerError::SignMismatch(format!("x_{alpha}(-xi) is not [x'_g(1), x'_b(xi)] times higher terms: {e}"))
        })?;
        Ok(letters_of(coeffs))
    }

    /// `d⁻¹ · ^z d`, factored over the roots on `d`'s side of the
    /// hyperplane orthogonal to `α`.
    fn residue(&self, d: &Word, z: &Word, ring: &Ring) -> Result<Word, FactorizerError> {
        let rs = self.rs();
        let alpha = self.norm.alpha;
        let (p, q) = alpha.coords();
        let first = d.roots()[0].coords();
        let grading = if q * first.0 - p * first.1 > 0 { (q, -p) } else { (-q, p) };
        let level = |r: &Root| grading.0 * r.coords().0 + grading.1 * r.coords().1;
        let mut order: Vec<Root> = rs.roots().iter().copied().filter(|r| level(r) > 0).collect();
        order.sort_by_key(|r| (level(r), rs.index_of(*r)));
        let g = self.eval(&d.inverse().concat(&Word::conj(d.clone(), z.clone())), ring);
        let coeffs = self.rep.peel(&g, &order, grading).map_err(|e| {
            FactorizerError::SignMismatch(format!("conjugation residue left the unipotent radical: {e}"))
        })?;
        Ok(letters_of(coeffs))
    }
}

fn conjugate(inner: Certificate, by: &Word) -> Certificate {
    Certificate::ConjugateOf { inner: Box::new(inner), by: by.clone() }
}

fn letters_of(coeffs: Vec<(Root, RingElement)>) -> Word {
    let mut w = Word::empty();
    for (r, c) in coeffs {
        if !c.is_zero() {
            w = w.concat(&Word::x(r, c));
        }
    }
    w
}

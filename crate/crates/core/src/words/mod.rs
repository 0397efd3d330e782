//! Group words over elementary generators `x_α(ξ)`, the conjugated
//! generators `z_α(ξ, η)`, inverses and conjugates.
//!
//! Words store symbols rather than matrices, so one word can be evaluated in
//! any representation and specialized to any ring its coefficients map to.
//! Conventions: `^x y = x y x⁻¹` and `[x, y] = x y x⁻¹ y⁻¹`.

mod certificate;
mod sexpr;

use std::fmt;

use crate::repr::{GroupElement, Representation};
use crate::ring::{Ideal, Ring, RingElement};
use crate::rootsystem::{Root, RootSystem};

pub use certificate::{validate_certificate, check_certificate, Certificate, CertificateError};
pub use sexpr::SexprError;

#[derive(Clone, PartialEq, Eq)]
pub enum Letter {
    /// `x_α(ξ)`
    X(Root, RingElement),
    /// `z_α(ξ, η) = x_{−α}(η) x_α(ξ) x_{−α}(−η)`
    Z(Root, RingElement, RingElement),
    Inv(Box<Letter>),
    /// `Conj(base, by) = by · base · by⁻¹`
    Conj(Word, Word),
}

impl Letter {
    pub fn inverse(&self) -> Letter {
        match self {
            Letter::X(a, c) => Letter::X(*a, -c),
            Letter::Z(a, c, e) => Letter::Z(*a, -c, e.clone()),
            Letter::Inv(l) => (**l).clone(),
            Letter::Conj(b, by) => Letter::Conj(b.inverse(), by.clone()),
        }
    }

    fn is_trivial(&self) -> bool {
        match self {
            Letter::X(_, c) | Letter::Z(_, c, _) => c.is_zero(),
            Letter::Inv(l) => l.is_trivial(),
            Letter::Conj(b, _) => b.is_empty(),
        }
    }

    fn apply(&self, g: &mut GroupElement) {
        match self {
            Letter::X(a, c) => g.mul_x_right(*a, c),
            Letter::Z(a, c, e) => {
                if !c.is_zero() {
                    g.mul_x_right(a.neg(), e);
                    g.mul_x_right(*a, c);
                    g.mul_x_right(a.neg(), &-e);
                }
            }
            Letter::Inv(l) => l.inverse().apply(g),
            Letter::Conj(b, by) => {
                if !b.is_empty() {
                    by.apply(g);
                    b.apply(g);
                    by.inverse().apply(g);
                }
            }
        }
    }

    fn visit_coefficients<'a>(&'a self, f: &mut impl FnMut(&'a RingElement)) {
        match self {
            Letter::X(_, c) => f(c),
            Letter::Z(_, c, e) => {
                f(c);
                f(e);
            }
            Letter::Inv(l) => l.visit_coefficients(f),
            Letter::Conj(b, by) => {
                b.visit_coefficients(f);
                by.visit_coefficients(f);
            }
        }
    }

    fn visit_roots(&self, f: &mut impl FnMut(Root)) {
        match self {
            Letter::X(a, _) => f(*a),
            Letter::Z(a, _, _) => {
                f(*a);
                f(a.neg());
            }
            Letter::Inv(l) => l.visit_roots(f),
            Letter::Conj(b, by) => {
                b.visit_roots(f);
                by.visit_roots(f);
            }
        }
    }
}

/// A finite sequence of letters, evaluated left to right.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn x(alpha: Root, xi: RingElement) -> Word {
        Word { letters: vec![Letter::X(alpha, xi)] }
    }

    pub fn z(alpha: Root, xi: RingElement, eta: RingElement) -> Word {
        Word { letters: vec![Letter::Z(alpha, xi, eta)] }
    }

    /// The one-letter word `^by base`.
    pub fn conj(base: Word, by: Word) -> Word {
        Word { letters: vec![Letter::Conj(base, by)] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word { letters }
    }

    pub fn concat_all<'a>(words: impl IntoIterator<Item = &'a Word>) -> Word {
        let mut out = Word::empty();
        for w in words {
            out.letters.extend(w.letters.iter().cloned());
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        Word::concat_all([a, b, &a.inverse(), &b.inverse()])
    }

    /// Drops trivial letters, merges adjacent `x_α` letters of the same root
    /// and cancels adjacent inverse pairs, recursively inside conjugates.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::new();
        for l in &self.letters {
            let l = match l {
                Letter::Conj(b, by) => Letter::Conj(b.free_reduce(), by.free_reduce()),
                Letter::Inv(inner) => inner.inverse(),
                other => other.clone(),
            };
            let l = match l {
                Letter::Conj(b, by) if by.is_empty() => {
                    for inner in b.letters {
                        push_reduced(&mut stack, inner);
                    }
                    continue;
                }
                l => l,
            };
            push_reduced(&mut stack, l);
        }
        Word { letters: stack }
    }

    /// Right-multiplies `g` by the value of this word.
    pub fn apply(&self, g: &mut GroupElement) {
        for l in &self.letters {
            l.apply(g);
        }
    }

    pub fn evaluate(&self, rep: &Representation, ring: &Ring) -> GroupElement {
        let mut g = rep.identity(ring);
        self.apply(&mut g);
        g
    }

    /// The common ring of all coefficients, if any letter carries one.
    pub fn ring(&self) -> Option<Ring> {
        let mut ring = None;
        self.visit_coefficients(&mut |c| {
            if ring.is_none() {
                ring = Some(c.ring().clone());
            }
        });
        ring
    }

    /// Whether all coefficients live in `ring`.
    pub fn coefficients_in(&self, ring: &Ring) -> bool {
        let mut ok = true;
        self.visit_coefficients(&mut |c| ok &= c.ring() == ring);
        ok
    }

    fn visit_coefficients<'a>(&'a self, f: &mut impl FnMut(&'a RingElement)) {
        for l in &self.letters {
            l.visit_coefficients(f);
        }
    }

    fn visit_roots(&self, f: &mut impl FnMut(Root)) {
        for l in &self.letters {
            l.visit_roots(f);
        }
    }

    /// Every root symbol occurring anywhere in the word.
    pub fn roots(&self) -> Vec<Root> {
        let mut out = Vec::new();
        self.visit_roots(&mut |r| out.push(r));
        out
    }

    /// Whether every letter is an `x` letter with a long root, or a conjugate
    /// of such letters by an arbitrary word.
    pub fn uses_only_long_roots(&self, rs: &RootSystem) -> bool {
        fn ok(l: &Letter, rs: &RootSystem) -> bool {
            match l {
                Letter::X(a, _) => rs.is_long(*a),
                Letter::Z(..) => false,
                Letter::Inv(l) => ok(l, rs),
                Letter::Conj(b, _) => b.letters.iter().all(|l| ok(l, rs)),
            }
        }
        self.letters.iter().all(|l| ok(l, rs))
    }

    /// Number of `x` letters outside conjugating words, counting each
    /// conjugate `^y x` as one.
    pub fn factor_count(&self) -> usize {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::Conj(b, _) => b.factor_count(),
                Letter::Inv(l) => Word::from_letters(vec![(**l).clone()]).factor_count(),
                _ => 1,
            })
            .sum()
    }

    /// Whether the word lies in `E(Φ, K)` syntactically: every coefficient,
    /// including those of conjugating words and the `η` of `z` letters, is in `K`.
    pub fn in_elementary_level(&self, k: &Ideal) -> bool {
        let mut ok = true;
        self.visit_coefficients(&mut |c| ok &= c.ring() == k.ring() && k.contains(c));
        ok
    }

    /// Whether the word lies in `E(Φ, R, K)` syntactically: `x` letters and
    /// the `ξ` of `z` letters have coefficients in `K`; conjugating words are
    /// arbitrary.
    pub fn in_relative_level(&self, k: &Ideal) -> bool {
        fn ok(l: &Letter, k: &Ideal) -> bool {
            match l {
                Letter::X(_, c) | Letter::Z(_, c, _) => c.ring() == k.ring() && k.contains(c),
                Letter::Inv(l) => ok(l, k),
                Letter::Conj(b, _) => b.letters.iter().all(|l| ok(l, k)),
            }
        }
        self.letters.iter().all(|l| ok(l, k))
    }

    /// Serializes to the s-expression syntax, e.g. `(conj (x a1 xi) (z a2 zeta eta))`.
    pub fn to_sexpr(&self) -> String {
        sexpr::write_word(self)
    }

    pub fn parse_sexpr(text: &str, rs: &RootSystem, ring: &Ring) -> Result<Word, SexprError> {
        sexpr::parse_word(text, rs, ring)
    }
}

fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    if l.is_trivial() {
        return;
    }
    if let Some(top) = stack.last() {
        if let (Letter::X(a, c), Letter::X(b, d)) = (top, &l) {
            if a == b {
                let sum = c + d;
                let root = *a;
                stack.pop();
                if !sum.is_zero() {
                    stack.push(Letter::X(root, sum));
                }
                return;
            }
        }
        if *top == l.inverse() {
            stack.pop();
            return;
        }
    }
    stack.push(l);
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sexpr())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sexpr())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&sexpr::write_letter(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::RootSystemType;

    fn setup() -> (Representation, Ring, Root, Root) {
        let rep = Representation::of(RootSystemType::A2);
        let ring = Ring::parse("Z[xi,zeta]").unwrap();
        let (a, b) = rep.system().simple_roots();
        (rep, ring, a, b)
    }

    #[test]
    fn empty_word_is_identity() {
        let (rep, ring, _, _) = setup();
        assert!(Word::empty().evaluate(&rep, &ring).is_identity());
    }

    #[test]
    fn opposite_commutator_is_nontrivial() {
        let (rep, ring, a, _) = setup();
        let w = Word::commutator(
            &Word::x(a, ring.var("xi").unwrap()),
            &Word::x(a.neg(), ring.var("zeta").unwrap()),
        );
        assert!(!w.evaluate(&rep, &ring).is_identity());
    }

    #[test]
    fn conj_is_by_base_by_inverse() {
        let (rep, ring, a, b) = setup();
        let xi = ring.var("xi").unwrap();
        let zeta = ring.var("zeta").unwrap();
        let w = Word::conj(Word::x(a, xi.clone()), Word::x(b, zeta.clone()));
        let mut expected = rep.x(b, &zeta);
        expected.mul_x_right(a, &xi);
        expected.mul_x_right(b, &-&zeta);
        assert_eq!(w.evaluate(&rep, &ring), expected);
    }

    #[test]
    fn commutator_with_empty_reduces_away() {
        let (_, ring, a, b) = setup();
        let w = Word::from_letters(vec![
            Letter::X(a, ring.var("xi").unwrap()),
            Letter::Z(b, ring.var("zeta").unwrap(), ring.var("xi").unwrap()),
        ]);
        assert!(Word::commutator(&w, &Word::empty()).free_reduce().is_empty());
    }

    #[test]
    fn level_predicates() {
        let ring = Ring::parse("Z[xi,zeta,eta]").unwrap();
        let rep = Representation::of(RootSystemType::A2);
        let a = rep.system().simple_root(1);
        let i = Ideal::parse(&ring, "xi").unwrap();
        let w = Word::z(a, ring.parse_element("2*xi").unwrap(), ring.var("eta").unwrap());
        assert!(w.in_relative_level(&i));
        assert!(!w.in_elementary_level(&i));
        let c = Word::conj(Word::x(a, ring.var("xi").unwrap()), Word::x(a.neg(), ring.one()));
        assert!(c.in_relative_level(&i));
        assert_eq!(c.factor_count(), 1);
    }
}

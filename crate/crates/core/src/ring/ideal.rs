//! Ideals generated by terms (a base-ring coefficient times a monomial).
//!
//! Such an ideal is determined by the function `g(m)`: the gcd of the
//! coefficients of generators whose monomial divides `m`. An element lies in
//! the ideal iff each of its terms `a·m` has `g(m) | a`, so membership is
//! decided termwise. The stored generator list is canonical: it keeps
//! `(m, g(m))` exactly where `g` drops below the gcd of its values on proper
//! divisors, so equal ideals have equal generator lists.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::poly::{Monomial, Poly};
use super::{BaseRing, Ring, RingElement, RingError, RingKind, Value};

#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<(Monomial, BigInt)>,
}

impl Ideal {
    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, &[ring.one()]).expect("the unit ideal is a term ideal")
    }

    /// The ideal generated by `gens`; each must be a single term.
    pub fn new(ring: &Ring, gens: &[RingElement]) -> Result<Ideal, RingError> {
        let mut raw = Vec::new();
        for g in gens {
            if g.ring() != ring {
                return Err(RingError::MixedRings(g.ring().to_string(), ring.to_string()));
            }
            let terms = g.terms();
            match terms.len() {
                0 => {}
                1 => raw.push(terms.into_iter().next().expect("one term")),
                _ => {
                    return Err(RingError::UnsupportedIdealShape(format!(
                        "generator '{g}' is not a single term"
                    )))
                }
            }
        }
        Ok(Ideal { ring: ring.clone(), gens: canonicalize(ring, raw) })
    }

    /// Parses a comma-separated generator list such as `2`, `xi` or `3,t`.
    pub fn parse(ring: &Ring, spec: &str) -> Result<Ideal, RingError> {
        let gens = spec
            .split(',')
            .map(|part| ring.parse_element(part))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, &gens)
    }

    /// The principal ideal `(d)` of `Z/n` or `Z`.
    pub fn principal(ring: &Ring, d: i64) -> Ideal {
        Ideal::new(ring, &[ring.from_i64(d)]).expect("constants are terms")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> Vec<RingElement> {
        self.gens
            .iter()
            .map(|(m, c)| term_element(&self.ring, m, c))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.contains(&self.ring.one())
    }

    /// For `Z/n`: the normalized generator `d | n` (`d = n` for the zero ideal).
    pub fn modular_generator(&self) -> Option<u64> {
        let n = self.ring.modulus()?;
        Some(match self.gens.first() {
            None => n,
            Some((_, c)) => c.to_u64().expect("divisor of modulus"),
        })
    }

    fn g_at(&self, m: &Monomial) -> BigInt {
        let mut g = empty_gcd(&self.ring);
        for (gm, c) in &self.gens {
            if gm.divides(m) {
                g = g.gcd(c);
            }
        }
        g
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        assert_eq!(x.ring(), &self.ring, "element and ideal live in different rings");
        x.terms().iter().all(|(m, a)| {
            let g = self.g_at(m);
            if g.is_zero() {
                a.is_zero()
            } else {
                a.is_multiple_of(&g)
            }
        })
    }

    pub fn checked_contains(&self, x: &RingElement) -> Result<bool, RingError> {
        if x.ring() != &self.ring {
            return Err(RingError::MixedRings(x.ring().to_string(), self.ring.to_string()));
        }
        Ok(self.contains(x))
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.generators().iter().all(|g| other.contains(g))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, RingError> {
        self.check_same(other)?;
        let reduce = |c: BigInt| self.ring.reduce_coeff(c);
        let mut raw = Vec::new();
        for (m1, c1) in &self.gens {
            for (m2, c2) in &other.gens {
                raw.push((m1.mul(m2), reduce(c1 * c2)));
            }
        }
        Ok(Ideal { ring: self.ring.clone(), gens: canonicalize(&self.ring, raw) })
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, RingError> {
        self.check_same(other)?;
        let raw = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Ideal { ring: self.ring.clone(), gens: canonicalize(&self.ring, raw) })
    }

    fn check_same(&self, other: &Ideal) -> Result<(), RingError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::MixedRings(self.ring.to_string(), other.ring.to_string()))
        }
    }

    /// Elements of the ideal of a finite ring, in increasing residue order.
    pub fn elements(&self) -> Result<Vec<RingElement>, RingError> {
        let n = self
            .ring
            .modulus()
            .ok_or_else(|| RingError::InfiniteRing(self.ring.to_string()))?;
        let d = self.modular_generator().expect("finite ring");
        Ok((0..n / d).map(|k| self.ring.wrap(Value::Mod(k * d))).collect())
    }

    /// The ring `R/I`, when it has a representation here.
    ///
    /// Supported: `Z/n` or `Z` modulo a constant, and polynomial rings modulo
    /// an ideal generated by variables and at most one constant.
    pub fn quotient_ring(&self) -> Result<Ring, RingError> {
        let unrep = || RingError::UnrepresentableQuotient(format!("{} / {}", self.ring, self));
        let (constant, killed) = self.split_variables_and_constant().ok_or_else(unrep)?;
        let base_mod = match (self.ring.base(), constant) {
            (BaseRing::Integers, None) => None,
            (BaseRing::Integers, Some(c)) => Some(c),
            (BaseRing::IntegersMod(n), None) => Some(n),
            (BaseRing::IntegersMod(n), Some(c)) => Some(c.gcd(&n)),
        };
        if base_mod == Some(1) {
            return Err(unrep());
        }
        let base = match base_mod {
            None => BaseRing::Integers,
            Some(m) => BaseRing::IntegersMod(m),
        };
        let remaining: Vec<String> = self
            .ring
            .vars()
            .iter()
            .enumerate()
            .filter(|(i, _)| !killed.contains(i))
            .map(|(_, v)| v.clone())
            .collect();
        if remaining.is_empty() {
            match base {
                BaseRing::Integers => Ok(Ring::integers()),
                BaseRing::IntegersMod(m) => Ring::integers_mod(m),
            }
        } else {
            Ring::polynomial(base, remaining)
        }
    }

    /// `(constant generator, indices of variable generators)` when every
    /// generator is a constant or a bare variable.
    fn split_variables_and_constant(&self) -> Option<(Option<u64>, BTreeSet<usize>)> {
        let mut constant = None;
        let mut killed = BTreeSet::new();
        for (m, c) in &self.gens {
            if m.is_one() {
                constant = Some(c.to_u64()?);
            } else if m.degree() == 1 && c.is_one() {
                killed.insert(m.exponents().iter().position(|&e| e == 1)?);
            } else {
                return None;
            }
        }
        Some((constant, killed))
    }

    /// Image of `x` in [`Ideal::quotient_ring`].
    pub fn reduce(&self, x: &RingElement) -> Result<RingElement, RingError> {
        let target = self.quotient_ring()?;
        Ok(self.reduce_into(&target, x))
    }

    pub(crate) fn reduce_into(&self, target: &Ring, x: &RingElement) -> RingElement {
        let (_, killed) = self.split_variables_and_constant().expect("checked by quotient_ring");
        match target.kind() {
            RingKind::Polynomial { vars, .. } => {
                let mut acc = Poly::zero(vars.len());
                for (m, c) in x.terms() {
                    if killed.iter().any(|&i| m.exponents()[i] > 0) {
                        continue;
                    }
                    let exps: Vec<u16> = m
                        .exponents()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !killed.contains(i))
                        .map(|(_, &e)| e)
                        .collect();
                    let t = Poly::term(Monomial(exps), target.reduce_coeff(c));
                    acc = acc.add(&t, &|c| target.reduce_coeff(c));
                }
                target.wrap(Value::Poly(acc))
            }
            _ => {
                let c = x
                    .terms()
                    .into_iter()
                    .find(|(m, _)| m.is_one())
                    .map(|(_, c)| c)
                    .unwrap_or_default();
                target.from_bigint(&c)
            }
        }
    }
}

fn empty_gcd(ring: &Ring) -> BigInt {
    match ring.base() {
        BaseRing::Integers => BigInt::zero(),
        BaseRing::IntegersMod(n) => BigInt::from(n),
    }
}

fn term_element(ring: &Ring, m: &Monomial, c: &BigInt) -> RingElement {
    match ring.kind() {
        RingKind::Polynomial { .. } => ring.wrap(Value::Poly(Poly::term(m.clone(), c.clone()))),
        _ => ring.from_bigint(c),
    }
}

fn lcm(a: &Monomial, b: &Monomial) -> Monomial {
    Monomial(a.0.iter().zip(&b.0).map(|(x, y)| *x.max(y)).collect())
}

fn canonicalize(ring: &Ring, raw: Vec<(Monomial, BigInt)>) -> Vec<(Monomial, BigInt)> {
    let nvars = ring.nvars();
    let raw: Vec<(Monomial, BigInt)> = raw
        .into_iter()
        .map(|(m, c)| {
            let m = if m.0.len() == nvars { m } else { Monomial::one(nvars) };
            (m, ring.reduce_coeff(c))
        })
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let empty = empty_gcd(ring);
    let g = |m: &Monomial| {
        raw.iter()
            .filter(|(gm, _)| gm.divides(m))
            .fold(empty.clone(), |acc, (_, c)| acc.gcd(c))
    };

    let mut closure: BTreeSet<Monomial> = raw.iter().map(|(m, _)| m.clone()).collect();
    loop {
        let current: Vec<Monomial> = closure.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                grew |= closure.insert(lcm(a, b));
            }
        }
        if !grew {
            break;
        }
    }

    let mut out = Vec::new();
    for m in &closure {
        let here = g(m);
        let below = closure
            .iter()
            .filter(|d| *d != m && d.divides(m))
            .fold(empty.clone(), |acc, d| acc.gcd(&g(d)));
        if here != below {
            out.push((m.clone(), here));
        }
    }
    out
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{} in {}", self, self.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: u64) -> Ring {
        Ring::integers_mod(n).unwrap()
    }

    #[test]
    fn membership_examples() {
        let z8 = zn(8);
        assert!(Ideal::principal(&z8, 2).contains(&z8.from_i64(6)));
        let z27 = zn(27);
        assert!(!Ideal::principal(&z27, 9).contains(&z27.from_i64(3)));
        let r = Ring::parse("Z[xi,zeta,eta]").unwrap();
        let ij = Ideal::parse(&r, "xi*zeta").unwrap();
        assert!(ij.contains(&r.parse_element("xi*zeta^2").unwrap()));
        assert!(!ij.contains(&r.parse_element("xi*eta").unwrap()));
    }

    #[test]
    fn product_examples() {
        let z8 = zn(8);
        let p = Ideal::principal(&z8, 2).product(&Ideal::principal(&z8, 4)).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "(0)");
        let z27 = zn(27);
        let p = Ideal::principal(&z27, 3).product(&Ideal::principal(&z27, 3)).unwrap();
        assert_eq!(p, Ideal::principal(&z27, 9));
        let r = Ring::parse("Z[xi,zeta,eta]").unwrap();
        let p = Ideal::parse(&r, "xi").unwrap().product(&Ideal::parse(&r, "zeta").unwrap()).unwrap();
        assert_eq!(p.to_string(), "(xi*zeta)");
    }

    #[test]
    fn modular_ideals_normalize_to_divisor() {
        let z12 = zn(12);
        let i = Ideal::parse(&z12, "8").unwrap();
        assert_eq!(i.modular_generator(), Some(4));
        assert_eq!(i, Ideal::principal(&z12, 4));
        assert_eq!(Ideal::zero(&z12).modular_generator(), Some(12));
    }

    #[test]
    fn mixed_term_ideal_is_canonical() {
        let r = Ring::parse("Z[t,s]").unwrap();
        let a = Ideal::parse(&r, "2*t,3*t,s").unwrap();
        let b = Ideal::parse(&r, "t,s,t*s").unwrap();
        assert_eq!(a, b);
        let c = Ideal::parse(&r, "4*t,6*s").unwrap();
        assert!(c.contains(&r.parse_element("2*t*s").unwrap()));
        assert!(!c.contains(&r.parse_element("t*s").unwrap()));
    }

    #[test]
    fn non_term_generator_rejected() {
        let r = Ring::parse("Z[t]").unwrap();
        assert!(matches!(Ideal::parse(&r, "t+1"), Err(RingError::UnsupportedIdealShape(_))));
    }

    #[test]
    fn quotients() {
        let z8 = zn(8);
        let q = Ideal::principal(&z8, 2).quotient_ring().unwrap();
        assert_eq!(q, zn(2));
        assert!(Ideal::unit(&z8).quotient_ring().is_err());
        let r = Ring::parse("Z/9[t,s]").unwrap();
        let i = Ideal::parse(&r, "3,t").unwrap();
        let q = i.quotient_ring().unwrap();
        assert_eq!(q.to_string(), "Z/3[s]");
        let x = r.parse_element("4*s^2+t*s+5").unwrap();
        assert_eq!(i.reduce(&x).unwrap().to_string(), "s^2+2");
    }

    #[test]
    fn elements_of_finite_ideal() {
        let z8 = zn(8);
        let v: Vec<u64> = Ideal::principal(&z8, 2)
            .elements()
            .unwrap()
            .iter()
            .map(|e| e.residue().unwrap())
            .collect();
        assert_eq!(v, vec![0, 2, 4, 6]);
    }
}

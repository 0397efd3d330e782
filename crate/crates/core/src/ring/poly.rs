//! Sparse multivariate polynomials with big-integer coefficients.
//!
//! Coefficient reduction (for `Z/n[...]`) is done by the owning ring; this
//! module only keeps terms canonical: no zero coefficients, monomials in
//! graded-lexicographic order.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub(crate) Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn render(&self, vars: &[String]) -> Option<String> {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        if parts.is_empty() {
            None
        } else {
            Some(parts.join("*"))
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial as an ordered map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn term(mono: Monomial, c: BigInt) -> Self {
        let mut p = Poly::zero(mono.0.len());
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_default()
    }

    /// Rebuilds the polynomial with each coefficient passed through `f`;
    /// zero results are dropped.
    pub fn map_coeffs(&self, mut f: impl FnMut(&BigInt) -> BigInt) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let c = f(c);
                (!c.is_zero()).then(|| (m.clone(), c))
            })
            .collect();
        Poly { nvars: self.nvars, terms }
    }

    pub fn add(&self, other: &Poly, reduce: &impl Fn(BigInt) -> BigInt) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone(), reduce);
        }
        Poly { nvars: self.nvars, terms }
    }

    pub fn neg(&self, reduce: &impl Fn(BigInt) -> BigInt) -> Poly {
        self.map_coeffs(|c| reduce(-c))
    }

    pub fn mul(&self, other: &Poly, reduce: &impl Fn(BigInt) -> BigInt) -> Poly {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&mut terms, m1.mul(m2), c1 * c2, reduce);
            }
        }
        Poly { nvars: self.nvars, terms }
    }

    /// Renders with the leading (largest) term first, no whitespace.
    pub(crate) fn render(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            match m.render(vars) {
                None => out.push_str(&abs.to_string()),
                Some(ms) if abs.is_one() => out.push_str(&ms),
                Some(ms) => {
                    out.push_str(&abs.to_string());
                    out.push('*');
                    out.push_str(&ms);
                }
            }
        }
        out
    }
}

fn accumulate(
    terms: &mut BTreeMap<Monomial, BigInt>,
    m: Monomial,
    c: BigInt,
    reduce: &impl Fn(BigInt) -> BigInt,
) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            let c = reduce(c);
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            let sum = reduce(o.get() + c);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(c: BigInt) -> BigInt {
        c
    }

    #[test]
    fn grlex_orders_by_degree_first() {
        let a = Monomial(vec![0, 2]);
        let b = Monomial(vec![1, 0]);
        assert!(b < a);
        assert!(Monomial(vec![1, 1]) > Monomial(vec![0, 2]));
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = Poly::term(Monomial::var(2, 0), BigInt::from(3));
        let s = x.add(&x.neg(&id), &id);
        assert!(s.is_zero());
    }

    #[test]
    fn render_leading_term_first() {
        let vars = vec!["xi".to_string(), "zeta".to_string()];
        let p = Poly::term(Monomial(vec![1, 2]), BigInt::from(1))
            .add(&Poly::constant(2, BigInt::from(-3)), &id);
        assert_eq!(p.render(&vars), "xi*zeta^2-3");
    }
}

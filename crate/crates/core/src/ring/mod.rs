//! Exact commutative rings: `Z`, `Z/n`, and polynomial rings over either.
//!
//! Elements are kept in canonical form (residues in `[0, n)`, polynomials
//! without zero terms), so equality of elements is structural equality.

mod ideal;
mod parse;
mod poly;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use ideal::Ideal;
pub use poly::{Monomial, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands belong to different rings ({0} vs {1})")]
    MixedRings(String, String),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("unsupported ideal shape: {0}")]
    UnsupportedIdealShape(String),
    #[error("ring {0} is infinite; not decided")]
    InfiniteRing(String),
    #[error("quotient not representable: {0}")]
    UnrepresentableQuotient(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Coefficient ring of a polynomial ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    IntegersMod(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    Integers,
    IntegersMod(u64),
    Polynomial { base: BaseRing, vars: Vec<String> },
}

/// A commutative ring with identity. Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<RingKind>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            RingKind::Integers => write!(f, "Z"),
            RingKind::IntegersMod(n) => write!(f, "Z/{n}"),
            RingKind::Polynomial { base, vars } => {
                match base {
                    BaseRing::Integers => write!(f, "Z")?,
                    BaseRing::IntegersMod(n) => write!(f, "Z/{n}")?,
                }
                write!(f, "[{}]", vars.join(","))
            }
        }
    }
}

/// Raw canonical value of a ring element; the owning [`Ring`] gives it meaning.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Int(BigInt),
    Mod(u64),
    Poly(Poly),
}

impl Ring {
    pub fn integers() -> Ring {
        Ring(Arc::new(RingKind::Integers))
    }

    pub fn integers_mod(n: u64) -> Result<Ring, RingError> {
        if n < 2 {
            return Err(RingError::InvalidModulus(n));
        }
        Ok(Ring(Arc::new(RingKind::IntegersMod(n))))
    }

    pub fn polynomial<S: Into<String>>(
        base: BaseRing,
        vars: impl IntoIterator<Item = S>,
    ) -> Result<Ring, RingError> {
        if let BaseRing::IntegersMod(n) = base {
            if n < 2 {
                return Err(RingError::InvalidModulus(n));
            }
        }
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(RingError::Parse("polynomial ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(RingError::Parse(format!("invalid variable name '{v}'")));
            }
            if vars[..i].contains(v) {
                return Err(RingError::Parse(format!("duplicate variable '{v}'")));
            }
        }
        Ok(Ring(Arc::new(RingKind::Polynomial { base, vars })))
    }

    /// Parses `Z`, `Z/8`, `Z[xi,zeta]`, `Z/9[t]`.
    pub fn parse(spec: &str) -> Result<Ring, RingError> {
        parse::parse_ring(spec)
    }

    pub fn kind(&self) -> &RingKind {
        &self.0
    }

    pub fn base(&self) -> BaseRing {
        match &*self.0 {
            RingKind::Integers => BaseRing::Integers,
            RingKind::IntegersMod(n) => BaseRing::IntegersMod(*n),
            RingKind::Polynomial { base, .. } => *base,
        }
    }

    pub fn vars(&self) -> &[String] {
        match &*self.0 {
            RingKind::Polynomial { vars, .. } => vars,
            _ => &[],
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars().len()
    }

    /// `Some(n)` for `Z/n`, the only finite rings supported.
    pub fn modulus(&self) -> Option<u64> {
        match &*self.0 {
            RingKind::IntegersMod(n) => Some(*n),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.modulus().is_some()
    }

    pub(crate) fn reduce_coeff(&self, c: BigInt) -> BigInt {
        match self.base() {
            BaseRing::Integers => c,
            BaseRing::IntegersMod(n) => c.mod_floor(&BigInt::from(n)),
        }
    }

    // ---- raw value arithmetic -------------------------------------------

    pub(crate) fn zero_value(&self) -> Value {
        match &*self.0 {
            RingKind::Integers => Value::Int(BigInt::zero()),
            RingKind::IntegersMod(_) => Value::Mod(0),
            RingKind::Polynomial { vars, .. } => Value::Poly(Poly::zero(vars.len())),
        }
    }

    pub(crate) fn one_value(&self) -> Value {
        self.int_value(&BigInt::one())
    }

    pub(crate) fn int_value(&self, c: &BigInt) -> Value {
        match &*self.0 {
            RingKind::Integers => Value::Int(c.clone()),
            RingKind::IntegersMod(n) => {
                Value::Mod(c.mod_floor(&BigInt::from(*n)).to_u64().expect("residue fits"))
            }
            RingKind::Polynomial { vars, .. } => {
                Value::Poly(Poly::constant(vars.len(), self.reduce_coeff(c.clone())))
            }
        }
    }

    pub(crate) fn small_value(&self, c: i64) -> Value {
        match &*self.0 {
            RingKind::IntegersMod(n) => Value::Mod(c.rem_euclid(*n as i64) as u64),
            _ => self.int_value(&BigInt::from(c)),
        }
    }

    pub(crate) fn add_values(&self, a: &Value, b: &Value) -> Value {
        match (&*self.0, a, b) {
            (_, Value::Int(x), Value::Int(y)) => Value::Int(x + y),
            (RingKind::IntegersMod(n), Value::Mod(x), Value::Mod(y)) => {
                Value::Mod(((*x as u128 + *y as u128) % *n as u128) as u64)
            }
            (_, Value::Poly(x), Value::Poly(y)) => Value::Poly(x.add(y, &|c| self.reduce_coeff(c))),
            _ => unreachable!("value/ring mismatch"),
        }
    }

    pub(crate) fn neg_value(&self, a: &Value) -> Value {
        match (&*self.0, a) {
            (_, Value::Int(x)) => Value::Int(-x),
            (RingKind::IntegersMod(n), Value::Mod(x)) => Value::Mod(if *x == 0 { 0 } else { n - x }),
            (_, Value::Poly(x)) => Value::Poly(x.neg(&|c| self.reduce_coeff(c))),
            _ => unreachable!("value/ring mismatch"),
        }
    }

    pub(crate) fn sub_values(&self, a: &Value, b: &Value) -> Value {
        self.add_values(a, &self.neg_value(b))
    }

    pub(crate) fn mul_values(&self, a: &Value, b: &Value) -> Value {
        match (&*self.0, a, b) {
            (_, Value::Int(x), Value::Int(y)) => Value::Int(x * y),
            (RingKind::IntegersMod(n), Value::Mod(x), Value::Mod(y)) => {
                Value::Mod(((*x as u128 * *y as u128) % *n as u128) as u64)
            }
            (_, Value::Poly(x), Value::Poly(y)) => Value::Poly(x.mul(y, &|c| self.reduce_coeff(c))),
            _ => unreachable!("value/ring mismatch"),
        }
    }

    pub(crate) fn pow_value(&self, a: &Value, e: u32) -> Value {
        let mut acc = self.one_value();
        for _ in 0..e {
            acc = self.mul_values(&acc, a);
        }
        acc
    }

    pub(crate) fn is_zero_value(&self, a: &Value) -> bool {
        match a {
            Value::Int(x) => x.is_zero(),
            Value::Mod(x) => *x == 0,
            Value::Poly(p) => p.is_zero(),
        }
    }

    pub(crate) fn is_one_value(&self, a: &Value) -> bool {
        *a == self.one_value()
    }

    pub(crate) fn render_value(&self, a: &Value) -> String {
        match a {
            Value::Int(x) => x.to_string(),
            Value::Mod(x) => x.to_string(),
            Value::Poly(p) => p.render(self.vars()),
        }
    }

    // ---- public element constructors ------------------------------------

    pub fn wrap(&self, value: Value) -> RingElement {
        RingElement { ring: self.clone(), value }
    }

    pub fn zero(&self) -> RingElement {
        self.wrap(self.zero_value())
    }

    pub fn one(&self) -> RingElement {
        self.wrap(self.one_value())
    }

    pub fn from_i64(&self, c: i64) -> RingElement {
        self.wrap(self.small_value(c))
    }

    pub fn from_bigint(&self, c: &BigInt) -> RingElement {
        self.wrap(self.int_value(c))
    }

    /// The named polynomial variable.
    pub fn var(&self, name: &str) -> Result<RingElement, RingError> {
        let idx = self
            .vars()
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| RingError::Parse(format!("ring {self} has no variable '{name}'")))?;
        let mono = Monomial::var(self.nvars(), idx);
        Ok(self.wrap(Value::Poly(Poly::term(mono, BigInt::one()))))
    }

    /// Parses an element expression such as `xi*zeta^2-3` or `5`.
    pub fn parse_element(&self, text: &str) -> Result<RingElement, RingError> {
        parse::parse_element(self, text)
    }

    /// Every element exactly once, in increasing residue order.
    pub fn enumerate_elements(&self) -> Result<impl Iterator<Item = RingElement> + '_, RingError> {
        let n = self
            .modulus()
            .ok_or_else(|| RingError::InfiniteRing(self.to_string()))?;
        Ok((0..n).map(move |r| self.wrap(Value::Mod(r))))
    }

    pub fn cardinality(&self) -> Option<u64> {
        self.modulus()
    }

    /// Whether some maximal ideal has residue field with two elements.
    pub fn has_residue_field_f2(&self) -> bool {
        match self.base() {
            BaseRing::Integers => true,
            BaseRing::IntegersMod(n) => n % 2 == 0,
        }
    }

    /// Decides, by exhausting `R`, whether every `θ` lies in `θ²R + 2θR`.
    pub fn theta_condition_holds(&self) -> Result<bool, RingError> {
        let n = self
            .modulus()
            .ok_or_else(|| RingError::InfiniteRing(self.to_string()))?;
        Ok((0..n).all(|t| {
            let sq = (t as u128 * t as u128 % n as u128) as u64;
            let dbl = (2 * t as u128 % n as u128) as u64;
            // In Z/n the ideal (a, b) is generated by gcd(a, b, n).
            let g = sq.gcd(&dbl).gcd(&n);
            t % g == 0
        }))
    }
}

/// A ring element together with its owning ring.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: Ring,
    value: Value,
}

impl RingElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn value(&self) -> &Value {
        &self.value
    }

    pub fn into_value(self) -> Value {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero_value(&self.value)
    }

    pub fn is_one(&self) -> bool {
        self.ring.is_one_value(&self.value)
    }

    /// Residue in `[0, n)` for elements of `Z/n`.
    pub fn residue(&self) -> Option<u64> {
        match self.value {
            Value::Mod(r) => Some(r),
            _ => None,
        }
    }

    fn check_same(&self, other: &RingElement) -> Result<(), RingError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(RingError::MixedRings(self.ring.to_string(), other.ring.to_string()))
        }
    }

    pub fn checked_add(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(other)?;
        Ok(self.ring.wrap(self.ring.add_values(&self.value, &other.value)))
    }

    pub fn checked_sub(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(other)?;
        Ok(self.ring.wrap(self.ring.sub_values(&self.value, &other.value)))
    }

    pub fn checked_mul(&self, other: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(other)?;
        Ok(self.ring.wrap(self.ring.mul_values(&self.value, &other.value)))
    }

    pub fn pow(&self, e: u32) -> RingElement {
        self.ring.wrap(self.ring.pow_value(&self.value, e))
    }

    /// The polynomial view (constants become constant polynomials).
    pub fn as_poly(&self) -> Poly {
        match &self.value {
            Value::Poly(p) => p.clone(),
            Value::Int(c) => Poly::constant(0, c.clone()),
            Value::Mod(r) => Poly::constant(0, BigInt::from(*r)),
        }
    }

    /// Terms as (monomial, coefficient) with coefficients canonical in the base.
    pub(crate) fn terms(&self) -> Vec<(Monomial, BigInt)> {
        self.as_poly()
            .terms()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect()
    }

    /// Sign of the integer value, for `Z` elements only.
    pub fn is_negative_integer(&self) -> bool {
        matches!(&self.value, Value::Int(c) if c.is_negative())
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.render_value(&self.value))
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.ring)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&RingElement> for &RingElement {
            type Output = RingElement;
            /// Panics on mixed rings; use the `checked_*` form to get an error.
            fn $method(self, rhs: &RingElement) -> RingElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl std::ops::$tr<RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$tr<&RingElement> for RingElement {
            type Output = RingElement;
            fn $method(self, rhs: &RingElement) -> RingElement {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$tr<RingElement> for &RingElement {
            type Output = RingElement;
            fn $method(self, rhs: RingElement) -> RingElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.ring.wrap(self.ring.neg_value(&self.value))
    }
}

impl std::ops::Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_arithmetic_examples() {
        let z8 = Ring::integers_mod(8).unwrap();
        assert_eq!(z8.from_i64(5) + z8.from_i64(5), z8.from_i64(2));
        let z9 = Ring::integers_mod(9).unwrap();
        assert!((z9.from_i64(3) * z9.from_i64(3)).is_zero());
        assert_eq!(-z9.from_i64(2), z9.from_i64(7));
    }

    #[test]
    fn polynomial_product_is_monomial() {
        let r = Ring::parse("Z[xi,zeta]").unwrap();
        let p = r.var("xi").unwrap() * r.var("zeta").unwrap();
        assert_eq!(p.to_string(), "xi*zeta");
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = Ring::integers_mod(8).unwrap().one();
        let b = Ring::integers_mod(9).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(RingError::MixedRings(..))));
    }

    #[test]
    fn invalid_modulus() {
        assert_eq!(Ring::integers_mod(1).unwrap_err(), RingError::InvalidModulus(1));
        assert!(Ring::parse("Z/1").is_err());
    }

    #[test]
    fn residue_field_f2_examples() {
        assert!(Ring::parse("Z/4").unwrap().has_residue_field_f2());
        assert!(!Ring::parse("Z/9").unwrap().has_residue_field_f2());
        assert!(!Ring::parse("Z/27").unwrap().has_residue_field_f2());
        assert!(Ring::integers().has_residue_field_f2());
        assert!(!Ring::parse("Z/9[t]").unwrap().has_residue_field_f2());
    }

    #[test]
    fn residue_field_f2_matches_parity() {
        for n in 2..=64u64 {
            assert_eq!(Ring::integers_mod(n).unwrap().has_residue_field_f2(), n % 2 == 0);
        }
    }

    #[test]
    fn enumerate_small_rings() {
        let z4 = Ring::integers_mod(4).unwrap();
        let v: Vec<u64> = z4.enumerate_elements().unwrap().map(|e| e.residue().unwrap()).collect();
        assert_eq!(v, vec![0, 1, 2, 3]);
        assert_eq!(Ring::integers_mod(27).unwrap().enumerate_elements().unwrap().count(), 27);
        assert_eq!(Ring::integers_mod(9).unwrap().enumerate_elements().unwrap().count(), 9);
        assert!(matches!(
            Ring::integers().enumerate_elements().map(|_| ()),
            Err(RingError::InfiniteRing(_))
        ));
    }

    /// Brute force: θ ∈ θ²R + 2θR iff θ = a·θ² + b·2θ for some a, b.
    fn theta_oracle(n: u64) -> bool {
        (0..n).all(|t| {
            (0..n).any(|a| (0..n).any(|b| (a * t * t + 2 * b * t) % n == t))
        })
    }

    #[test]
    fn theta_condition_against_oracle() {
        for n in 2..=30u64 {
            let r = Ring::integers_mod(n).unwrap();
            assert_eq!(r.theta_condition_holds().unwrap(), theta_oracle(n), "n = {n}");
        }
        assert!(Ring::parse("Z/9").unwrap().theta_condition_holds().unwrap());
        assert!(Ring::parse("Z/27").unwrap().theta_condition_holds().unwrap());
        assert!(!Ring::parse("Z/8").unwrap().theta_condition_holds().unwrap());
        assert!(Ring::parse("Z[t]").unwrap().theta_condition_holds().is_err());
    }
}

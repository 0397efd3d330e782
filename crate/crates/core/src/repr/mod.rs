//! Integer matrix representations of the rank-2 Chevalley groups and their
//! elementary root unipotents.
//!
//! * A2: natural 3-dimensional representation of SL3.
//! * C2: natural 4-dimensional representation of Sp4.
//! * G2: the 7-dimensional representation plus the 14-dimensional adjoint
//!   one, as a 21-dimensional block-diagonal representation.
//!
//! Root vectors for non-simple roots are generated from the simple ones by
//! brackets, so every representation carries a Chevalley basis; divided
//! powers `e^k/k!` are checked to be integral, which makes `x_α(ξ)` a
//! polynomial in `ξ` with integer matrix coefficients.

mod matrix;
mod steinberg;

use std::fmt;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::ring::{Ideal, Ring, RingElement, RingError};
use crate::rootsystem::{Root, RootSystem, RootSystemType};

pub use matrix::{IntMatrix, Matrix};
pub use steinberg::{verify_steinberg, SteinbergReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReprError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("element does not factor over the given roots: {0}")]
    NotInSubgroup(String),
    #[error("elements from different representations or rings")]
    Mismatch,
}

struct RepData {
    system: RootSystem,
    dim: usize,
    blocks: Vec<usize>,
    nilpotents: Vec<IntMatrix>,
    /// `divided[root][k-1] = e^k / k!` as sparse entry lists.
    divided: Vec<Vec<Vec<(usize, usize, i64)>>>,
    /// An entry of `e_α` equal to ±1, per root.
    pivots: Vec<(usize, usize, i64)>,
    cartan_h: [IntMatrix; 2],
    form: Option<IntMatrix>,
}

/// A faithful matrix representation of one rank-2 type. Cheap to clone.
#[derive(Clone)]
pub struct Representation(Arc<RepData>);

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.system == other.0.system && self.0.nilpotents == other.0.nilpotents)
    }
}

impl Eq for Representation {}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation({}, dim {})", self.0.system.type_tag(), self.0.dim)
    }
}

fn unit(dim: usize, r: usize, c: usize) -> IntMatrix {
    IntMatrix::from_entries(dim, &[(r, c, 1)])
}

/// Simple root vectors `(E1, E2, F1, F2)` of the base representation.
fn simple_generators(ty: RootSystemType) -> [IntMatrix; 4] {
    match ty {
        RootSystemType::A2 => [unit(3, 0, 1), unit(3, 1, 2), unit(3, 1, 0), unit(3, 2, 1)],
        RootSystemType::C2 => [
            IntMatrix::from_entries(4, &[(0, 1, 1), (2, 3, -1)]),
            unit(4, 1, 2),
            IntMatrix::from_entries(4, &[(1, 0, 1), (3, 2, -1)]),
            unit(4, 2, 1),
        ],
        RootSystemType::G2 => {
            // Basis v1..v7 of weights 2a1+a2, a1+a2, a1, 0, -a1, -a1-a2, -2a1-a2;
            // entries are (dst, src, coefficient), 1-based.
            let m = |maps: &[(usize, usize, i64)]| {
                let e: Vec<_> = maps.iter().map(|&(d, s, c)| (d - 1, s - 1, c)).collect();
                IntMatrix::from_entries(7, &e)
            };
            [
                m(&[(1, 2, 1), (4, 5, 1), (3, 4, 2), (6, 7, 1)]),
                m(&[(2, 3, 1), (5, 6, 1)]),
                m(&[(2, 1, 1), (5, 4, 2), (4, 3, 1), (7, 6, 1)]),
                m(&[(3, 2, 1), (6, 5, 1)]),
            ]
        }
    }
}

/// Root vectors for every root of `rs`, from the simple ones.
fn chevalley_basis(rs: &RootSystem, gens: &[IntMatrix; 4]) -> Vec<IntMatrix> {
    let n = rs.len();
    let mut e: Vec<Option<IntMatrix>> = vec![None; n];
    let (s1, s2) = rs.simple_roots();
    e[rs.index_of(s1)] = Some(gens[0].clone());
    e[rs.index_of(s2)] = Some(gens[1].clone());
    e[rs.index_of(s1.neg())] = Some(gens[2].clone());
    e[rs.index_of(s2.neg())] = Some(gens[3].clone());
    for &gamma in rs.positive_roots() {
        if e[rs.index_of(gamma)].is_some() {
            continue;
        }
        let (i, simple, delta) = [(0usize, s1), (1, s2)]
            .into_iter()
            .find_map(|(i, s)| {
                let (ga, gb) = gamma.coords();
                let (sa, sb) = s.coords();
                let d = rs.try_root(ga - sa, gb - sb)?;
                (d.is_positive() && e[rs.index_of(d)].is_some()).then_some((i, s, d))
            })
            .expect("positive roots are reached by adding simple roots");
        let (p, _) = rs.root_string(simple, delta).expect("distinct roots");
        let up = gens[i]
            .bracket(e[rs.index_of(delta)].as_ref().unwrap())
            .div_exact(p as i64 + 1)
            .expect("integral root vector");
        let down = gens[i + 2]
            .bracket(e[rs.index_of(delta.neg())].as_ref().unwrap())
            .scale(-1)
            .div_exact(p as i64 + 1)
            .expect("integral root vector");
        e[rs.index_of(gamma)] = Some(up);
        e[rs.index_of(gamma.neg())] = Some(down);
    }
    e.into_iter().map(|m| m.expect("every root assigned")).collect()
}

/// The adjoint representation on the Chevalley basis `(e_α in root order, h1, h2)`.
fn adjoint(rs: &RootSystem, e: &[IntMatrix]) -> Vec<IntMatrix> {
    let n = rs.len();
    let dim = n + 2;
    let (s1, s2) = rs.simple_roots();
    rs.roots()
        .iter()
        .map(|&alpha| {
            let ea = &e[rs.index_of(alpha)];
            let mut ad = IntMatrix::zero(dim);
            for (col, &beta) in rs.roots().iter().enumerate() {
                if beta == alpha.neg() {
                    let (c1, c2) = rs.coroot_coords(alpha);
                    ad.set(n, col, c1 as i64);
                    ad.set(n + 1, col, c2 as i64);
                } else if let Some(sum) = rs.add(alpha, beta) {
                    let k = ea
                        .bracket(&e[rs.index_of(beta)])
                        .ratio_to(&e[rs.index_of(sum)])
                        .expect("bracket is a multiple of the root vector");
                    ad.set(rs.index_of(sum), col, k);
                }
            }
            let row = rs.index_of(alpha);
            ad.set(row, n, -rs.cartan(alpha.coords(), s1) as i64);
            ad.set(row, n + 1, -rs.cartan(alpha.coords(), s2) as i64);
            ad
        })
        .collect()
}

fn factorial(k: i64) -> i64 {
    (1..=k).product()
}

impl Representation {
    fn build(ty: RootSystemType) -> Representation {
        let system = RootSystem::new(ty);
        let gens = simple_generators(ty);
        let base = chevalley_basis(&system, &gens);
        let (nilpotents, blocks) = if ty == RootSystemType::G2 {
            let ad = adjoint(&system, &base);
            let sum = base.iter().zip(&ad).map(|(a, b)| a.direct_sum(b)).collect();
            (sum, vec![7, 14])
        } else {
            let d = base[0].dim();
            (base, vec![d])
        };
        let dim = nilpotents[0].dim();

        let (s1, s2) = system.simple_roots();
        let h = |s: Root| {
            nilpotents[system.index_of(s)].bracket(&nilpotents[system.index_of(s.neg())])
        };
        let cartan_h = [h(s1), h(s2)];
        for hm in &cartan_h {
            assert!(
                hm.nonzero().iter().all(|&(r, c, _)| r == c),
                "coroot elements act diagonally"
            );
        }

        let mut divided = Vec::new();
        let mut pivots = Vec::new();
        for &alpha in system.roots() {
            let ea = &nilpotents[system.index_of(alpha)];
            let (c1, c2) = system.coroot_coords(alpha);
            let expected_h = cartan_h[0].scale(c1 as i64).add(&cartan_h[1].scale(c2 as i64));
            assert_eq!(
                ea.bracket(&nilpotents[system.index_of(alpha.neg())]),
                expected_h,
                "[e_a, e_-a] is the coroot for {alpha}"
            );
            let mut powers = Vec::new();
            let mut p = ea.clone();
            let mut k = 1;
            while !p.is_zero() {
                let d = p.div_exact(factorial(k)).expect("divided powers are integral");
                powers.push(d.nonzero());
                p = p.mul(ea);
                k += 1;
                assert!(k <= dim as i64 + 1, "root vector is nilpotent");
            }
            divided.push(powers);
            let pivot = ea
                .nonzero()
                .into_iter()
                .find(|&(_, _, v)| v == 1 || v == -1)
                .expect("every root vector has a unit entry");
            pivots.push(pivot);
        }

        let form = (ty == RootSystemType::C2).then(|| {
            IntMatrix::from_entries(4, &[(0, 3, 1), (1, 2, 1), (2, 1, -1), (3, 0, -1)])
        });
        if let Some(omega) = &form {
            for e in &nilpotents {
                assert!(e.transpose().mul(omega).add(&omega.mul(e)).is_zero());
            }
        }

        Representation(Arc::new(RepData {
            system,
            dim,
            blocks,
            nilpotents,
            divided,
            pivots,
            cartan_h,
            form,
        }))
    }

    /// The shared representation of the given type.
    pub fn of(ty: RootSystemType) -> Representation {
        static CACHE: [OnceLock<Representation>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let slot = match ty {
            RootSystemType::A2 => 0,
            RootSystemType::C2 => 1,
            RootSystemType::G2 => 2,
        };
        CACHE[slot].get_or_init(|| Representation::build(ty)).clone()
    }

    /// A copy with root vectors rescaled, `e_α ↦ signs[α]·e_α`, so that
    /// `x_α(ξ)` of the result is `x_α(signs[α]·ξ)` of `self`.
    pub fn with_signs(&self, signs: &[i8]) -> Representation {
        let d = &self.0;
        assert_eq!(signs.len(), d.system.len());
        let nilpotents = d
            .nilpotents
            .iter()
            .zip(signs)
            .map(|(m, &s)| m.scale(s as i64))
            .collect();
        let divided = d
            .divided
            .iter()
            .zip(signs)
            .map(|(powers, &s)| {
                powers
                    .iter()
                    .enumerate()
                    .map(|(k, entries)| {
                        let sk = if s < 0 && k % 2 == 0 { -1 } else { 1 };
                        entries.iter().map(|&(r, c, v)| (r, c, v * sk)).collect()
                    })
                    .collect()
            })
            .collect();
        let pivots = d
            .pivots
            .iter()
            .zip(signs)
            .map(|(&(r, c, v), &s)| (r, c, v * s as i64))
            .collect();
        Representation(Arc::new(RepData {
            system: d.system.clone(),
            dim: d.dim,
            blocks: d.blocks.clone(),
            nilpotents,
            divided,
            pivots,
            cartan_h: d.cartan_h.clone(),
            form: d.form.clone(),
        }))
    }

    pub fn system(&self) -> &RootSystem {
        &self.0.system
    }

    pub fn type_tag(&self) -> RootSystemType {
        self.0.system.type_tag()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    /// Sizes of the diagonal blocks (one block except for G2).
    pub fn blocks(&self) -> &[usize] {
        &self.0.blocks
    }

    pub fn nilpotent(&self, alpha: Root) -> &IntMatrix {
        &self.0.nilpotents[self.0.system.index_of(alpha)]
    }

    /// `e_α^k / k!` for `k = 1, 2, ...` until it vanishes.
    pub fn divided_powers(&self, alpha: Root) -> Vec<IntMatrix> {
        self.0.divided[self.0.system.index_of(alpha)]
            .iter()
            .map(|entries| IntMatrix::from_entries(self.0.dim, entries))
            .collect()
    }

    /// `h_{α1}`, `h_{α2}` as diagonal matrices.
    pub fn cartan_elements(&self) -> &[IntMatrix; 2] {
        &self.0.cartan_h
    }

    /// The invariant symplectic form (C2 only).
    pub fn symplectic_form(&self) -> Option<&IntMatrix> {
        self.0.form.as_ref()
    }

    pub fn identity(&self, ring: &Ring) -> GroupElement {
        GroupElement { rep: self.clone(), matrix: Matrix::identity(ring, self.0.dim) }
    }

    /// `x_α(ξ) = Σ_k ξ^k e_α^k/k!`.
    pub fn x(&self, alpha: Root, xi: &RingElement) -> GroupElement {
        let mut g = self.identity(xi.ring());
        g.mul_x_right(alpha, xi);
        g
    }

    /// `z_α(ξ, η) = x_{−α}(η) x_α(ξ) x_{−α}(−η)`.
    pub fn z(&self, alpha: Root, xi: &RingElement, eta: &RingElement) -> GroupElement {
        let mut g = self.x(alpha.neg(), eta);
        g.mul_x_right(alpha, xi);
        g.mul_x_right(alpha.neg(), &-eta);
        g
    }

    /// Factors `g` as `∏ x_δ(c_δ)` over `order`.
    ///
    /// `grading` is a linear form `(f1, f2)` on root coordinates that must be
    /// positive on `order`, and `order` must list roots with nondecreasing
    /// grading. Coefficients are read level by level from unit entries of the
    /// root vectors; the result is checked by multiplying back, so an `Ok`
    /// value is always an exact factorization.
    pub fn peel(
        &self,
        g: &GroupElement,
        order: &[Root],
        grading: (i32, i32),
    ) -> Result<Vec<(Root, RingElement)>, ReprError> {
        let level = |r: Root| {
            let (a, b) = r.coords();
            grading.0 * a + grading.1 * b
        };
        assert!(order.iter().all(|&r| level(r) > 0), "grading positive on roots");
        assert!(order.windows(2).all(|w| level(w[0]) <= level(w[1])), "order sorted by grading");
        let mut current = g.clone();
        let mut out = Vec::with_capacity(order.len());
        let mut start = 0;
        while start < order.len() {
            let lv = level(order[start]);
            let end = start + order[start..].iter().take_while(|&&r| level(r) == lv).count();
            let coeffs: Vec<RingElement> = order[start..end]
                .iter()
                .map(|&r| {
                    let (row, col, v) = self.0.pivots[self.0.system.index_of(r)];
                    let entry = current.matrix.get(row, col);
                    if v == 1 {
                        entry
                    } else {
                        -entry
                    }
                })
                .collect();
            for (&r, c) in order[start..end].iter().zip(&coeffs) {
                current.mul_x_left(r, &-c);
            }
            out.extend(order[start..end].iter().copied().zip(coeffs));
            start = end;
        }
        if !current.is_identity() {
            return Err(ReprError::NotInSubgroup(format!(
                "{} roots starting with {}",
                order.len(),
                order.first().map(|r| r.name()).unwrap_or_default()
            )));
        }
        Ok(out)
    }
}

/// A matrix in the image of a [`Representation`] over some ring.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupElement {
    rep: Representation,
    matrix: Matrix,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.matrix)
    }
}

impl GroupElement {
    pub fn new(rep: &Representation, matrix: Matrix) -> GroupElement {
        assert_eq!(rep.dim(), matrix.dim());
        GroupElement { rep: rep.clone(), matrix }
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn ring(&self) -> &Ring {
        self.matrix.ring()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn checked_mul(&self, other: &GroupElement) -> Result<GroupElement, ReprError> {
        if self.rep != other.rep || self.ring() != other.ring() {
            return Err(ReprError::Mismatch);
        }
        Ok(GroupElement { rep: self.rep.clone(), matrix: self.matrix.mul(&other.matrix) })
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        self.checked_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `self ← self · x_α(ξ)`, using the sparsity of the divided powers.
    pub fn mul_x_right(&mut self, alpha: Root, xi: &RingElement) {
        if xi.is_zero() {
            return;
        }
        let ring = self.matrix.ring().clone();
        assert_eq!(xi.ring(), &ring, "coefficient from a different ring");
        let dim = self.matrix.dim();
        let base = self.matrix.clone();
        let powers = &self.rep.0.divided[self.rep.0.system.index_of(alpha)];
        let mut xk = xi.clone();
        for (k, entries) in powers.iter().enumerate() {
            if k > 0 {
                xk = &xk * xi;
            }
            // (M · D)[i][c] += M[i][r] · D[r][c]
            for &(r, c, v) in entries {
                for i in 0..dim {
                    let m = base.value(i, r);
                    if ring.is_zero_value(m) {
                        continue;
                    }
                    let t = ring.mul_values(m, xk.value());
                    self.matrix.add_scaled(i, c, &t, v);
                }
            }
        }
    }

    /// `self ← x_α(ξ) · self`.
    pub fn mul_x_left(&mut self, alpha: Root, xi: &RingElement) {
        if xi.is_zero() {
            return;
        }
        let ring = self.matrix.ring().clone();
        let dim = self.matrix.dim();
        let base = self.matrix.clone();
        let powers = &self.rep.0.divided[self.rep.0.system.index_of(alpha)];
        let mut xk = xi.clone();
        for (k, entries) in powers.iter().enumerate() {
            if k > 0 {
                xk = &xk * xi;
            }
            // (D · M)[r][j] += D[r][c] · M[c][j]
            for &(r, c, v) in entries {
                for j in 0..dim {
                    let m = base.value(c, j);
                    if ring.is_zero_value(m) {
                        continue;
                    }
                    let t = ring.mul_values(m, xk.value());
                    self.matrix.add_scaled(r, j, &t, v);
                }
            }
        }
    }

    /// Entrywise image in `R/I`.
    pub fn reduce_mod(&self, ideal: &Ideal) -> Result<GroupElement, ReprError> {
        let target = ideal.quotient_ring()?;
        let matrix = self.matrix.map_into(&target, |e| ideal.reduce_into(&target, e));
        Ok(GroupElement { rep: self.rep.clone(), matrix })
    }

    /// Whether `g ≡ 1` entrywise modulo `ideal`, i.e. `g ∈ G(Φ, R, I)`.
    pub fn congruence_level_test(&self, ideal: &Ideal) -> bool {
        self.matrix.congruent_to_identity(ideal)
    }

    /// Whether the image of `g` in `G(Φ, R/I)` commutes with every
    /// elementary generator `x_α(t)`, `t ∈ R/I`.
    pub fn central_mod_test(&self, ideal: &Ideal) -> Result<bool, ReprError> {
        if ideal.is_unit() {
            return Ok(true);
        }
        let reduced = self.reduce_mod(ideal)?;
        let quotient = reduced.ring().clone();
        let elements: Vec<RingElement> = quotient.enumerate_elements()?.collect();
        for &alpha in self.rep.system().roots() {
            for t in &elements {
                let mut left = reduced.clone();
                left.mul_x_right(alpha, t);
                let mut right = reduced.clone();
                right.mul_x_left(alpha, t);
                if left != right {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `g^T Ω g = Ω` for the C2 symplectic form; `None` for other types.
    pub fn preserves_form(&self) -> Option<bool> {
        let omega = Matrix::from_int(self.ring(), self.rep.symplectic_form()?);
        Some(self.matrix.transpose().mul(&omega).mul(&self.matrix) == omega)
    }

    /// The diagonal block with the given index.
    pub fn block(&self, index: usize) -> Matrix {
        let blocks = self.rep.blocks();
        let offset: usize = blocks[..index].iter().sum();
        let size = blocks[index];
        let entries = (0..size * size)
            .map(|i| self.matrix.get(offset + i / size, offset + i % size))
            .collect();
        Matrix::from_elements(self.ring(), size, entries)
    }

    /// Whether all entries outside the diagonal blocks vanish.
    pub fn is_block_diagonal(&self) -> bool {
        let mut block_of = Vec::new();
        for (b, &s) in self.rep.blocks().iter().enumerate() {
            block_of.extend(std::iter::repeat_n(b, s));
        }
        let d = self.matrix.dim();
        (0..d).all(|r| {
            (0..d).all(|c| block_of[r] == block_of[c] || self.matrix.get(r, c).is_zero())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn all_reps() -> Vec<Representation> {
        [RootSystemType::A2, RootSystemType::C2, RootSystemType::G2]
            .into_iter()
            .map(Representation::of)
            .collect()
    }

    #[test]
    fn dimensions() {
        let dims: Vec<usize> = all_reps().iter().map(|r| r.dim()).collect();
        assert_eq!(dims, vec![3, 4, 21]);
    }

    #[test]
    fn x_of_zero_is_identity() {
        let z8 = Ring::integers_mod(8).unwrap();
        for rep in all_reps() {
            for &a in rep.system().roots() {
                assert!(rep.x(a, &z8.zero()).is_identity());
            }
        }
    }

    #[test]
    fn a2_simple_root_is_upper_unitriangular() {
        let r = Ring::parse("Z[xi]").unwrap();
        let xi = r.var("xi").unwrap();
        let rep = Representation::of(RootSystemType::A2);
        let g = rep.x(rep.system().simple_root(1), &xi);
        let strings = g.matrix().to_strings();
        assert_eq!(strings, vec![vec!["1", "xi", "0"], vec!["0", "1", "0"], vec!["0", "0", "1"]]);
    }

    #[test]
    fn inverse_and_additivity_symbolic() {
        let r = Ring::parse("Z[xi,zeta]").unwrap();
        let xi = r.var("xi").unwrap();
        let zeta = r.var("zeta").unwrap();
        for rep in all_reps() {
            for &a in rep.system().roots() {
                let mut g = rep.x(a, &xi);
                g.mul_x_right(a, &-&xi);
                assert!(g.is_identity());
                let prod = rep.x(a, &xi).mul(&rep.x(a, &zeta));
                assert_eq!(prod, rep.x(a, &(&xi + &zeta)));
            }
        }
    }

    #[test]
    fn z_special_values_and_level() {
        let r = Ring::parse("Z[xi,eta]").unwrap();
        let xi = r.var("xi").unwrap();
        let eta = r.var("eta").unwrap();
        let level = Ideal::parse(&r, "xi").unwrap();
        for rep in all_reps() {
            for &a in rep.system().roots() {
                assert_eq!(rep.z(a, &xi, &r.zero()), rep.x(a, &xi));
                assert!(rep.z(a, &r.zero(), &eta).is_identity());
                assert!(rep.z(a, &xi, &eta).congruence_level_test(&level));
            }
        }
    }

    #[test]
    fn c2_preserves_form_symbolically() {
        let r = Ring::parse("Z[xi]").unwrap();
        let xi = r.var("xi").unwrap();
        let rep = Representation::of(RootSystemType::C2);
        for &a in rep.system().roots() {
            assert_eq!(rep.x(a, &xi).preserves_form(), Some(true));
        }
    }

    #[test]
    fn g2_blocks_do_not_mix() {
        let r = Ring::parse("Z[xi]").unwrap();
        let xi = r.var("xi").unwrap();
        let rep = Representation::of(RootSystemType::G2);
        for &a in rep.system().roots() {
            assert!(rep.x(a, &xi).is_block_diagonal());
        }
    }

    #[test]
    fn reduce_and_level_examples() {
        let z8 = Ring::integers_mod(8).unwrap();
        let z27 = Ring::integers_mod(27).unwrap();
        let rep = Representation::of(RootSystemType::A2);
        let a = rep.system().simple_root(1);
        let two = Ideal::principal(&z8, 2);
        assert!(rep.x(a, &z8.from_i64(2)).reduce_mod(&two).unwrap().is_identity());
        let c2 = Representation::of(RootSystemType::C2);
        let three = Ideal::principal(&z27, 3);
        let b = c2.system().simple_root(2);
        assert!(c2.x(b, &z27.from_i64(3)).reduce_mod(&three).unwrap().is_identity());
        assert!(rep.x(a, &z8.from_i64(6)).congruence_level_test(&two));
        assert!(!rep.x(a, &z8.one()).congruence_level_test(&two));
    }

    #[test]
    fn central_mod_examples() {
        let z8 = Ring::integers_mod(8).unwrap();
        let rep = Representation::of(RootSystemType::A2);
        let two = Ideal::principal(&z8, 2);
        let a = rep.system().simple_root(1);
        assert!(!rep.x(a, &z8.one()).central_mod_test(&two).unwrap());
        assert!(rep.x(a, &z8.from_i64(2)).central_mod_test(&two).unwrap());
        // diag(3,3,3) has determinant 27 ≡ 3, so it is not in SL3, but its
        // image mod 2 is the identity and hence central.
        let m = Matrix::from_int(&z8, &IntMatrix::identity(3).scale(3));
        assert!(GroupElement::new(&rep, m).central_mod_test(&two).unwrap());
    }

    #[test]
    fn peel_recovers_product() {
        let r = Ring::parse("Z[xi,zeta]").unwrap();
        let xi = r.var("xi").unwrap();
        let zeta = r.var("zeta").unwrap();
        let rep = Representation::of(RootSystemType::G2);
        let pos: Vec<Root> = rep.system().positive_roots().to_vec();
        let mut g = rep.identity(&r);
        for (k, &p) in pos.iter().enumerate() {
            let c = if k % 2 == 0 { &xi * &zeta } else { xi.pow(k as u32) - zeta.clone() };
            g.mul_x_right(p, &c);
        }
        let factors = rep.peel(&g, &pos, (1, 1)).unwrap();
        let mut back = rep.identity(&r);
        for (root, c) in &factors {
            back.mul_x_right(*root, c);
        }
        assert_eq!(back, g);
        let neg = rep.x(pos[0].neg(), &xi);
        assert!(rep.peel(&neg, &pos, (1, 1)).is_err());
    }
}

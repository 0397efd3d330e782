//! Short root elements of `E(Φ, R, I)` written with long root elements.

use crate::repr::Representation;
use crate::ring::{Ideal, Ring, RingElement};
use crate::rootsystem::{Root, RootSystem, RootSystemType};
use crate::structconst::StructureConstantTable;
use crate::words::{Letter, Word};

use super::FactorizerError;

#[derive(Clone, Debug)]
pub struct LongRootDecomposition {
    pub beta: Root,
    /// The long root `α` and short root `γ` the identity is built from.
    pub alpha: Root,
    pub gamma: Root,
    pub word: Word,
    /// `(θ, r)` pairs used for G2; empty otherwise.
    pub terms: Vec<(RingElement, RingElement)>,
}

impl LongRootDecomposition {
    pub fn factor_count(&self) -> usize {
        self.word.factor_count()
    }
}

/// Pairs `(θ, r)` with `Σ r·(θ² − θ) = 1`, as few as the search finds.
pub fn unit_decompose(ring: &Ring) -> Result<Vec<(RingElement, RingElement)>, FactorizerError> {
    if !ring.is_finite() {
        return Err(FactorizerError::InfiniteRing);
    }
    if ring.has_residue_field_f2() {
        return Err(FactorizerError::ResidueFieldF2(ring.to_string()));
    }
    let elems: Vec<RingElement> = ring.enumerate_elements()?.collect();
    let inverse = |u: &RingElement| elems.iter().find(|r| (*r * u).is_one()).cloned();
    let us: Vec<RingElement> = elems.iter().map(|t| t * t - t).collect();
    for (t, u) in elems.iter().zip(&us) {
        if let Some(r) = inverse(u) {
            return Ok(vec![(t.clone(), r)]);
        }
    }
    if elems.len() <= 64 {
        for (a, ua) in elems.iter().zip(&us) {
            for (b, ub) in elems.iter().zip(&us) {
                for ra in &elems {
                    for rb in &elems {
                        if (ra * ua + rb * ub).is_one() {
                            return Ok(vec![(a.clone(), ra.clone()), (b.clone(), rb.clone())]);
                        }
                    }
                }
            }
        }
    }
    Err(FactorizerError::UnitDecompositionFailed(ring.to_string()))
}

/// A word in long root elements (and their conjugates by elementary words)
/// with coefficients in `I`, evaluating to `x_β(ξ)` for a short root `β`.
///
/// For C2 this is the three-factor identity read off
/// `[x_α(ξ), x_γ(1)]`; for G2 each term `(θ, r)` of [`unit_decompose`]
/// contributes a block of at most six factors equal to `x_β(rξ(θ² − θ))`.
pub fn long_root_decomposition(
    rep: &Representation,
    beta: Root,
    xi: &RingElement,
    i: &Ideal,
) -> Result<LongRootDecomposition, FactorizerError> {
    let rs = rep.system();
    if rs.type_tag() == RootSystemType::A2 || rs.is_long(beta) {
        return Err(FactorizerError::NotShortRoot(beta.name()));
    }
    let ring = xi.ring();
    if !i.contains(xi) {
        return Err(FactorizerError::CaseMismatch(format!("{xi} is not in {i}")));
    }
    let table = StructureConstantTable::compute(rep)?;
    let n = |a: Root, g: Root, p: u32, q: u32| table.get(a, g, p, q).unwrap_or(0);
    let (alpha, gamma, terms, word) = if rs.type_tag() == RootSystemType::C2 {
        let (alpha, gamma) = find_pair(rs, beta, 1).ok_or_else(|| no_pair(beta))?;
        let s = n(alpha, gamma, 1, 1);
        let t = n(alpha, gamma, 1, 2);
        let bg = rs.add(beta, gamma).expect("β+γ is a root");
        let sx = ring.from_i64(s) * xi;
        let word = Word::from_letters(vec![
            Letter::X(alpha, sx.clone()),
            Letter::Conj(Word::x(alpha, -&sx), Word::x(gamma, ring.one())),
            Letter::X(bg, ring.from_i64(-t) * &sx),
        ]);
        (alpha, gamma, Vec::new(), word)
    } else {
        let (alpha, gamma) = find_pair(rs, beta, 2).ok_or_else(|| no_pair(beta))?;
        if xi.is_zero() {
            return Ok(LongRootDecomposition { beta, alpha, gamma, word: Word::empty(), terms: Vec::new() });
        }
        let terms = unit_decompose(ring)?;
        let a3g = rs.combine(1, alpha, 3, gamma).expect("α+3γ is a root");
        let top = rs.combine(2, alpha, 3, gamma).expect("2α+3γ is a root");
        let (n12, n13, n23) = (n(alpha, gamma, 1, 2), n(alpha, gamma, 1, 3), n(alpha, gamma, 2, 3));
        let mut word = Word::empty();
        for (theta, r) in &terms {
            // [x_α(e), x_γ(θ)] · (long part)⁻¹ · (long part) · [x_γ(1), x_α(eθ)]
            // with the two long parts merged; the short parts cancel up to
            // x_β(N12·e·(θ² − θ)).
            let e = ring.from_i64(n12) * r * xi;
            let et = &e * theta;
            let t3 = theta.pow(3);
            let block = Word::from_letters(vec![
                Letter::X(alpha, e.clone()),
                Letter::Conj(Word::x(alpha, -&e), Word::x(gamma, theta.clone())),
                Letter::X(a3g, ring.from_i64(n13) * &e * (theta - &t3)),
                Letter::X(top, ring.from_i64(n23) * &e * &e * (theta * theta - &t3)),
                Letter::Conj(Word::x(alpha, et.clone()), Word::x(gamma, ring.one())),
                Letter::X(alpha, -&et),
            ]);
            word = word.concat(&block.free_reduce());
        }
        (alpha, gamma, terms, word)
    };
    let word = if xi.is_zero() { Word::empty() } else { word };
    if word.evaluate(rep, ring) != rep.x(beta, xi) {
        return Err(FactorizerError::SignMismatch(format!(
            "long-root word for x_{}({xi}) evaluates to something else",
            beta.name()
        )));
    }
    Ok(LongRootDecomposition { beta, alpha, gamma, word, terms })
}

/// A long `α` and short `γ` with `α + kγ = β` and the roots the identity
/// needs present.
fn find_pair(rs: &RootSystem, beta: Root, k: i32) -> Option<(Root, Root)> {
    for &alpha in rs.roots() {
        if !rs.is_long(alpha) {
            continue;
        }
        for &gamma in rs.roots() {
            if rs.is_long(gamma) || rs.combine(1, alpha, k, gamma) != Some(beta) {
                continue;
            }
            let ok = if k == 1 {
                rs.combine(1, alpha, 2, gamma).is_some()
            } else {
                rs.combine(1, alpha, 3, gamma).is_some() && rs.combine(2, alpha, 3, gamma).is_some()
            };
            if ok {
                return Some((alpha, gamma));
            }
        }
    }
    None
}

fn no_pair(beta: Root) -> FactorizerError {
    FactorizerError::NotShortRoot(format!("{} (no long/short pair found)", beta.name()))
}

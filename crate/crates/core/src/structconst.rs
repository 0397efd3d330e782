//! Structure constants `N_{αβij}` of the Chevalley commutator formula
//!
//! ```text
//! [x_α(ξ), x_β(ζ)] = ∏ x_{iα+jβ}(N_{αβij} ξ^i ζ^j),   α ≠ ±β,
//! ```
//!
//! read off a representation by factoring the commutator symbolically over
//! `Z[ξ, ζ]`. The product runs over `i + j` decreasing, ties by `i`
//! decreasing. For G2 the constants depend on this order: with a long `β`
//! and short `γ` it yields `N_{βγ23} = ±2`, whereas the increasing order
//! yields `±1`.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::repr::Representation;
use crate::ring::{Monomial, Ring, RingElement};
use crate::rootsystem::{MainLemmaCase, Root, RootError, RootSystem};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructConstError {
    #[error("commutator [x_{0}, x_{1}] does not factor as expected: {2}")]
    ExtractionFailure(String, String, String),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("no sign choice gives the required constants for {0} at {1}")]
    NormalizationImpossible(MainLemmaCase, String),
}

/// `N_{αβij}` for every ordered pair `α ≠ ±β` and every root `iα + jβ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstantTable {
    system: RootSystem,
    entries: BTreeMap<(usize, usize, u32, u32), i64>,
}

/// One table entry, in the shape emitted by `dump-constants`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstantEntry {
    pub alpha: String,
    pub beta: String,
    pub i: u32,
    pub j: u32,
    #[serde(rename = "N")]
    pub n: i64,
}

/// The grading `f` with `f(α) = f(β) = |det(α, β)|`.
pub(crate) fn pair_grading(alpha: Root, beta: Root) -> (i32, i32) {
    let (a1, b1) = alpha.coords();
    let (a2, b2) = beta.coords();
    let det = a1 * b2 - a2 * b1;
    assert!(det != 0, "independent roots");
    let s = det.signum();
    ((b2 - b1) * s, (a1 - a2) * s)
}

/// Reads `N` from a coefficient that must equal `N·ξ^i·ζ^j`.
fn monomial_constant(c: &RingElement, i: u32, j: u32) -> Option<i64> {
    let terms = c.terms();
    match terms.as_slice() {
        [(m, n)] if *m == Monomial(vec![i as u16, j as u16]) => n.to_i64(),
        _ => None,
    }
}

impl StructureConstantTable {
    /// Extracts the table from `rep`; every extraction is an exact
    /// factorization checked by multiplying back.
    pub fn compute(rep: &Representation) -> Result<StructureConstantTable, StructConstError> {
        let rs = rep.system().clone();
        let ring = Ring::parse("Z[xi,zeta]").expect("valid ring");
        let xi = ring.var("xi").expect("variable");
        let zeta = ring.var("zeta").expect("variable");
        let mut entries = BTreeMap::new();
        for &alpha in rs.roots() {
            for &beta in rs.roots() {
                if alpha == beta || alpha == beta.neg() {
                    continue;
                }
                let fail = |why: &str| {
                    StructConstError::ExtractionFailure(alpha.name(), beta.name(), why.to_string())
                };
                // The product is in decreasing grading, so factor the inverse
                // commutator, whose factors come in increasing grading.
                let inverse = Word::commutator(&Word::x(alpha, xi.clone()), &Word::x(beta, zeta.clone()))
                    .inverse()
                    .evaluate(rep, &ring);
                let mut terms = rs.commutator_terms(alpha, beta);
                terms.reverse();
                let order: Vec<Root> = terms.iter().map(|t| t.2).collect();
                let factors = rep
                    .peel(&inverse, &order, pair_grading(alpha, beta))
                    .map_err(|e| fail(&e.to_string()))?;
                for ((i, j, _), (_, c)) in terms.iter().zip(&factors) {
                    let n = monomial_constant(&-c, *i, *j)
                        .ok_or_else(|| fail(&format!("coefficient {c} for (i, j) = ({i}, {j})")))?;
                    if n == 0 {
                        return Err(fail("vanishing constant"));
                    }
                    entries.insert((rs.index_of(alpha), rs.index_of(beta), *i, *j), n);
                }
            }
        }
        Ok(StructureConstantTable { system: rs, entries })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn get(&self, alpha: Root, beta: Root, i: u32, j: u32) -> Option<i64> {
        let rs = &self.system;
        self.entries.get(&(rs.index_of(alpha), rs.index_of(beta), i, j)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(i, j, iα + jβ, N_{αβij})` in product order.
    pub fn terms(&self, alpha: Root, beta: Root) -> Vec<(u32, u32, Root, i64)> {
        self.system
            .commutator_terms(alpha, beta)
            .into_iter()
            .map(|(i, j, r)| (i, j, r, self.get(alpha, beta, i, j).expect("complete table")))
            .collect()
    }

    pub fn entries(&self) -> Vec<ConstantEntry> {
        let roots = self.system.roots();
        self.entries
            .iter()
            .map(|(&(a, b, i, j), &n)| ConstantEntry {
                alpha: roots[a].name(),
                beta: roots[b].name(),
                i,
                j,
                n,
            })
            .collect()
    }

    /// The table after `x_α(ξ) ↦ x_α(ε_α ξ)`:
    /// `N'_{αβij} = ε_{iα+jβ} ε_α^i ε_β^j N_{αβij}`.
    pub fn renormalized(&self, signs: &[i8]) -> StructureConstantTable {
        let roots = self.system.roots();
        let entries = self
            .entries
            .iter()
            .map(|(&(a, b, i, j), &n)| {
                let target = self
                    .system
                    .combine(i as i32, roots[a], j as i32, roots[b])
                    .expect("entry root");
                let s = signs[self.system.index_of(target)] as i64
                    * (signs[a] as i64).pow(i)
                    * (signs[b] as i64).pow(j);
                ((a, b, i, j), s * n)
            })
            .collect();
        StructureConstantTable { system: self.system.clone(), entries }
    }

    /// The word `∏ x_{iα+jβ}(N ξ^i ζ^j)` equal to `[x_α(ξ), x_β(ζ)]`;
    /// letters with zero coefficient are left out.
    pub fn chevalley_commutator_word(
        &self,
        alpha: Root,
        beta: Root,
        xi: &RingElement,
        zeta: &RingElement,
    ) -> Result<Word, StructConstError> {
        if alpha == beta.neg() || alpha == beta {
            return Err(RootError::OppositeRoots(alpha.name(), beta.name()).into());
        }
        let ring = xi.ring();
        let mut w = Word::empty();
        for (i, j, r, n) in self.terms(alpha, beta) {
            let c = ring.from_i64(n) * xi.pow(i) * zeta.pow(j);
            if !c.is_zero() {
                w = w.concat(&Word::x(r, c));
            }
        }
        Ok(w)
    }
}

/// A choice of signs `ε: Φ → {±1}` reparametrizing root subgroups, and the
/// resulting constants of the main-lemma case it was chosen for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignNormalization {
    pub case: MainLemmaCase,
    pub alpha: Root,
    pub beta: Root,
    pub gamma: Root,
    /// `ε` by root index; `ε_α = ε_{−α} = 1`.
    pub signs: Vec<i8>,
    /// `(label, value)` of each normalized constant, e.g. `("N_bg11", 1)`.
    pub constants: Vec<(String, i64)>,
}

impl SignNormalization {
    pub fn sign(&self, rs: &RootSystem, r: Root) -> i64 {
        self.signs[rs.index_of(r)] as i64
    }
}

/// The constants a case needs, as `(label, α, β, i, j, required value)`.
fn case_requirements(
    rs: &RootSystem,
    case: MainLemmaCase,
    alpha: Root,
    beta: Root,
    gamma: Root,
) -> Vec<(&'static str, Root, Root, u32, u32, i64)> {
    match case {
        MainLemmaCase::A2 => vec![("N_bg11", beta, gamma, 1, 1, 1)],
        MainLemmaCase::C2Long | MainLemmaCase::C2Short => {
            vec![("N_bg11", beta, gamma, 1, 1, 1), ("N_bg12", beta, gamma, 1, 2, 1)]
        }
        MainLemmaCase::G2Short => {
            let b2g = rs.combine(1, beta, 2, gamma).expect("b+2g is a root");
            vec![
                ("N_bg11", beta, gamma, 1, 1, 1),
                ("N_bg12", beta, gamma, 1, 2, 1),
                ("N_bg13", beta, gamma, 1, 3, 1),
                ("N_bg23", beta, gamma, 2, 3, 2),
                ("N_a(b+2g)11", alpha, b2g, 1, 1, 3),
            ]
        }
    }
}

/// Finds signs making the constants of `case` at `alpha` equal to the values
/// the main-lemma construction is written for, keeping `ε_{±α} = 1`.
///
/// Searches all sign vectors; the first solution in a fixed enumeration
/// order is returned, so the result is deterministic.
pub fn normalize_signs(
    table: &StructureConstantTable,
    case: MainLemmaCase,
    alpha: Root,
) -> Result<SignNormalization, StructConstError> {
    let rs = table.system();
    let (beta, gamma) = rs.decompose_for_case(alpha, case)?;
    let reqs = case_requirements(rs, case, alpha, beta, gamma);
    let free: Vec<usize> = (0..rs.len())
        .filter(|&k| rs.roots()[k] != alpha && rs.roots()[k] != alpha.neg())
        .collect();
    for mask in 0u32..(1 << free.len()) {
        let mut signs = vec![1i8; rs.len()];
        for (bit, &k) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                signs[k] = -1;
            }
        }
        let renorm = table.renormalized(&signs);
        let constants: Vec<(String, i64)> = reqs
            .iter()
            .map(|&(label, a, b, i, j, _)| (label.to_string(), renorm.get(a, b, i, j).expect("defined")))
            .collect();
        if constants.iter().zip(&reqs).all(|((_, v), r)| *v == r.5) {
            return Ok(SignNormalization { case, alpha, beta, gamma, signs, constants });
        }
    }
    Err(StructConstError::NormalizationImpossible(case, alpha.name()))
}

/// Whether one sign vector satisfies all the given cases at once.
pub fn joint_normalization(
    table: &StructureConstantTable,
    cases: &[(MainLemmaCase, Root)],
) -> Result<Option<Vec<i8>>, StructConstError> {
    let rs = table.system();
    let mut reqs = Vec::new();
    let mut fixed = Vec::new();
    for &(case, alpha) in cases {
        let (beta, gamma) = rs.decompose_for_case(alpha, case)?;
        reqs.extend(case_requirements(rs, case, alpha, beta, gamma));
        fixed.push(rs.index_of(alpha));
        fixed.push(rs.index_of(alpha.neg()));
    }
    let free: Vec<usize> = (0..rs.len()).filter(|k| !fixed.contains(k)).collect();
    for mask in 0u32..(1 << free.len()) {
        let mut signs = vec![1i8; rs.len()];
        for (bit, &k) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                signs[k] = -1;
            }
        }
        let renorm = table.renormalized(&signs);
        if reqs.iter().all(|&(_, a, b, i, j, v)| renorm.get(a, b, i, j) == Some(v)) {
            return Ok(Some(signs));
        }
    }
    Ok(None)
}

/// `ε·t` as a ring element.
pub(crate) fn signed(eps: i64, t: &RingElement) -> RingElement {
    if eps == 1 {
        t.clone()
    } else {
        -t
    }
}

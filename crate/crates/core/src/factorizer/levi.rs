//! Sampled check that `[L_r(I), U_r(J)] ≤ U_r(IJ)` and the same for `U_r⁻`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::repr::Representation;
use crate::ring::{Ideal, RingElement};
use crate::rootsystem::{Root, RootError, RootSystem, RootSystemType};
use crate::words::Word;

use super::FactorizerError;

/// The maximal parabolic attached to the simple root `α_r`.
#[derive(Clone, Debug)]
pub struct ParabolicData {
    pub system: RootSystem,
    /// 1 or 2.
    pub r: usize,
    pub u_roots: Vec<Root>,
    pub u_minus_roots: Vec<Root>,
    pub levi_roots: [Root; 2],
}

impl ParabolicData {
    pub fn new(system: &RootSystem, r: usize) -> Result<ParabolicData, RootError> {
        if r != 1 && r != 2 {
            return Err(RootError::Parse(format!("simple root index {r} (expected 1 or 2)")));
        }
        let ar = system.simple_root(r);
        let u_roots: Vec<Root> = system.positive_roots().iter().copied().filter(|&x| x != ar).collect();
        let u_minus_roots = u_roots.iter().map(|x| x.neg()).collect();
        Ok(ParabolicData { system: system.clone(), r, u_roots, u_minus_roots, levi_roots: [ar, ar.neg()] })
    }

    /// Whether sums of `U` roots that are roots stay in `U`.
    pub fn is_closed(&self) -> bool {
        self.u_roots.iter().all(|&a| {
            self.u_roots
                .iter()
                .all(|&b| self.system.add(a, b).is_none_or(|s| self.u_roots.contains(&s)))
        })
    }

    pub fn side_roots(&self, side: LeviSide) -> &[Root] {
        match side {
            LeviSide::Upper => &self.u_roots,
            LeviSide::Lower => &self.u_minus_roots,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LeviSide {
    /// `U_r`
    Upper,
    /// `U_r⁻`
    Lower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeviViolation {
    pub sample: usize,
    pub l: String,
    pub u: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeviReport {
    pub system: RootSystemType,
    pub r: usize,
    pub side: LeviSide,
    pub ring: String,
    pub ideal_i: String,
    pub ideal_j: String,
    pub samples: usize,
    pub seed: u64,
    pub violations: usize,
    /// Up to five offending samples.
    pub examples: Vec<LeviViolation>,
}

impl LeviReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

const MAX_LETTERS: usize = 4;

fn pick(rng: &mut ChaCha8Rng, xs: &[RingElement]) -> RingElement {
    xs[rng.gen_range(0..xs.len())].clone()
}

/// Draws `samples` pairs `(l, u)`, `l` a product of at most four `x_{±α_r}`
/// letters with coefficients in `I`, `u` a product of at most four `U`
/// letters with coefficients in `J`, and checks that `[l, u]` factors over
/// the `U` roots with coefficients in `IJ`.
///
/// Sample `k` uses its own generator seeded from `(seed, k)`, so the report
/// does not depend on the thread count.
pub fn levi_commutator_check(
    rep: &Representation,
    p: &ParabolicData,
    side: LeviSide,
    i: &Ideal,
    j: &Ideal,
    samples: usize,
    seed: u64,
) -> Result<LeviReport, FactorizerError> {
    let ring = i.ring();
    if !ring.is_finite() {
        return Err(FactorizerError::InfiniteRing);
    }
    let ij = i.product(j)?;
    let is = i.elements()?;
    let js = j.elements()?;
    let roots = p.side_roots(side);
    let grading = match side {
        LeviSide::Upper => (1, 1),
        LeviSide::Lower => (-1, -1),
    };
    let mut order = roots.to_vec();
    order.sort_by_key(|r| (r.height().abs(), p.system.index_of(*r)));

    let outcomes: Vec<Option<LeviViolation>> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut l = Word::empty();
            for _ in 0..rng.gen_range(0..=MAX_LETTERS) {
                let root = p.levi_roots[rng.gen_range(0..2)];
                l.push(crate::words::Letter::X(root, pick(&mut rng, &is)));
            }
            let mut u = Word::empty();
            for _ in 0..rng.gen_range(0..=MAX_LETTERS) {
                let root = roots[rng.gen_range(0..roots.len())];
                u.push(crate::words::Letter::X(root, pick(&mut rng, &js)));
            }
            let c = Word::commutator(&l, &u).evaluate(rep, ring);
            let reason = match rep.peel(&c, &order, grading) {
                Err(e) => Some(format!("commutator not in U: {e}")),
                Ok(coeffs) => coeffs
                    .iter()
                    .find(|(_, x)| !ij.contains(x))
                    .map(|(r, x)| format!("coefficient {x} at {} not in {ij}", r.name())),
            };
            reason.map(|reason| LeviViolation { sample: k, l: l.to_sexpr(), u: u.to_sexpr(), reason })
        })
        .collect();
    let bad: Vec<LeviViolation> = outcomes.into_iter().flatten().collect();
    Ok(LeviReport {
        system: p.system.type_tag(),
        r: p.r,
        side,
        ring: ring.to_string(),
        ideal_i: i.to_string(),
        ideal_j: j.to_string(),
        samples,
        seed,
        violations: bad.len(),
        examples: bad.into_iter().take(5).collect(),
    })
}

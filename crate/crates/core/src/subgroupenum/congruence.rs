//! Direct enumeration of `G(Φ, R, I)` and `C(Φ, R, I)` for `R = Z/n`.

use rayon::prelude::*;
use rustc_hash::FxHashSet;

use super::{EnumError, EnumeratedSubgroup, FiniteContext, Generator, Key};
use crate::ring::{Ideal, Ring};
use crate::words::{Letter, Word};

/// All `1 + dM` with `M` over `Z/(n/d)` satisfying the group equations.
pub fn enumerate_congruence_subgroup(
    ctx: &FiniteContext,
    ideal: &Ideal,
    candidate_bound: u64,
) -> Result<EnumeratedSubgroup, EnumError> {
    let d = ctx.ideal_generator(ideal)?;
    let n = ctx.modulus();
    let m = (n / d) as u64;
    let cells = (ctx.dim() * ctx.dim()) as u32;
    let candidates = m.checked_pow(cells).unwrap_or(u64::MAX);
    if candidates > candidate_bound {
        return Err(EnumError::BoundExceeded {
            what: format!("candidates for G(R,{ideal}) over {}", ctx.ring()),
            partial: candidates,
            bound: candidate_bound,
        });
    }
    let id = ctx.identity();
    let elements: Vec<Key> = (0..candidates)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut k = id;
            for slot in k.iter_mut().take(cells as usize) {
                let digit = (idx % m) as u32;
                idx /= m;
                *slot = ((*slot as u32 + d * digit) % n) as u8;
            }
            ctx.in_group(&k).then_some(k)
        })
        .collect();
    let index: FxHashSet<Key> = elements.iter().copied().collect();
    Ok(EnumeratedSubgroup { ctx: ctx.clone(), elements, index, generators: Vec::new(), gen_keys: Vec::new() })
}

/// The center of `G(Φ, R/I)` together with lifts to `E(Φ, R)`.
#[derive(Clone, Debug)]
pub struct QuotientCenter {
    pub quotient: Ring,
    /// `|E(Φ, R/I)|`, enumerated from the generators `x_α(1)`.
    pub group_order: usize,
    /// One word in the `x_α(1)` per central element; evaluated over `R` it
    /// lifts that element.
    pub lifts: Vec<Word>,
}

/// Brute-force center of `E(Φ, R/I)`: enumerates the group by breadth-first
/// search from `x_α(1)`, keeping a word for every element, and keeps the
/// elements commuting with every generator.
pub fn quotient_center(ctx: &FiniteContext, ideal: &Ideal, bound: u64) -> Result<QuotientCenter, EnumError> {
    let quotient = ideal.quotient_ring()?;
    let qctx = FiniteContext::new(ctx.rep(), &quotient)?;
    let roots = ctx.rep().system().roots().to_vec();
    let gens: Vec<Key> = roots.iter().map(|&a| qctx.key_of_word(&Word::x(a, quotient.one()))).collect();
    let mut elements = vec![qctx.identity()];
    let mut parent: Vec<(usize, usize)> = vec![(usize::MAX, usize::MAX)];
    let mut seen: FxHashSet<Key> = elements.iter().copied().collect();
    let mut q = 0;
    while q < elements.len() {
        let x = elements[q];
        for (gi, g) in gens.iter().enumerate() {
            let y = qctx.mul(&x, g);
            if seen.insert(y) {
                elements.push(y);
                parent.push((q, gi));
                if elements.len() as u64 > bound {
                    return Err(EnumError::BoundExceeded {
                        what: format!("E(Φ,{quotient})"),
                        partial: elements.len() as u64,
                        bound,
                    });
                }
            }
        }
        q += 1;
    }
    let one = ctx.ring().one();
    let mut lifts = Vec::new();
    for (idx, x) in elements.iter().enumerate() {
        if gens.iter().all(|g| qctx.mul(x, g) == qctx.mul(g, x)) {
            let mut letters = Vec::new();
            let mut cur = idx;
            while parent[cur].0 != usize::MAX {
                letters.push(Letter::X(roots[parent[cur].1], one.clone()));
                cur = parent[cur].0;
            }
            letters.reverse();
            lifts.push(Word::from_letters(letters));
        }
    }
    Ok(QuotientCenter { quotient, group_order: elements.len(), lifts })
}

/// `C(Φ, R, I) = ⋃ c·G(Φ, R, I)` over lifts `c` of the center of `G(Φ, R/I)`.
pub fn enumerate_full_congruence(
    ctx: &FiniteContext,
    ideal: &Ideal,
    candidate_bound: u64,
    element_bound: u64,
) -> Result<(EnumeratedSubgroup, QuotientCenter), EnumError> {
    let g = enumerate_congruence_subgroup(ctx, ideal, candidate_bound)?;
    let center = quotient_center(ctx, ideal, element_bound)?;
    let mut elements = Vec::with_capacity(g.len() * center.lifts.len());
    let mut index = FxHashSet::default();
    let mut generators = Vec::new();
    for w in &center.lifts {
        let c = w.evaluate(ctx.rep(), ctx.ring());
        if !c.central_mod_test(ideal)? {
            continue;
        }
        let ck = ctx.key_of(&c);
        generators.push(Generator::Word(w.clone()));
        for k in g.keys() {
            let x = ctx.mul(&ck, k);
            if index.insert(x) {
                elements.push(x);
            }
        }
        if elements.len() as u64 > element_bound {
            return Err(EnumError::BoundExceeded {
                what: format!("C(R,{ideal}) over {}", ctx.ring()),
                partial: elements.len() as u64,
                bound: element_bound,
            });
        }
    }
    let full = EnumeratedSubgroup { ctx: ctx.clone(), elements, index, generators, gen_keys: Vec::new() };
    Ok((full, center))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repr::Representation;
    use crate::rootsystem::RootSystemType;

    fn ctx(ty: RootSystemType, n: u64) -> FiniteContext {
        FiniteContext::new(&Representation::of(ty), &Ring::integers_mod(n).unwrap()).unwrap()
    }

    #[test]
    fn a2_level_four_over_z8() {
        // 1 + 4M with M over Z/2 and trace M even: 2^8.
        let c = ctx(RootSystemType::A2, 8);
        let g = enumerate_congruence_subgroup(&c, &Ideal::principal(c.ring(), 4), 1 << 20).unwrap();
        assert_eq!(g.len(), 256);
        assert!(g.audit());
    }

    #[test]
    fn zero_ideal_gives_identity() {
        let c = ctx(RootSystemType::A2, 8);
        let g = enumerate_congruence_subgroup(&c, &Ideal::zero(c.ring()), 10).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn whole_ring_rejected_by_bound() {
        let c = ctx(RootSystemType::A2, 8);
        let r = enumerate_congruence_subgroup(&c, &Ideal::unit(c.ring()), 100_000_000);
        assert!(matches!(r, Err(EnumError::BoundExceeded { .. })));
    }

    #[test]
    fn sl3_f2_center_is_trivial() {
        let c = ctx(RootSystemType::A2, 8);
        let z = quotient_center(&c, &Ideal::principal(c.ring(), 2), 1000).unwrap();
        assert_eq!(z.group_order, 168);
        assert_eq!(z.lifts.len(), 1);
    }

    #[test]
    fn sp4_f3_center_is_plus_minus_one() {
        let c = ctx(RootSystemType::C2, 9);
        let z = quotient_center(&c, &Ideal::principal(c.ring(), 3), 100_000).unwrap();
        assert_eq!(z.group_order, 51840);
        assert_eq!(z.lifts.len(), 2);
    }
}

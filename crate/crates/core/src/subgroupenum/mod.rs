//! Finite matrix subgroups of `G(Φ, Z/n)` enumerated as hash sets.
//!
//! Elements are stored as byte keys (entries in `0..n`, row-major, padded to
//! 16 bytes), so only `n ≤ 256` and dimension `≤ 4` are supported: A2 and C2.

mod congruence;
mod theorems;

use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::repr::{GroupElement, Matrix, ReprError, Representation};
use crate::ring::{Ideal, Ring, RingError};
use crate::rootsystem::RootSystemType;
use crate::words::Word;

pub use congruence::{enumerate_congruence_subgroup, enumerate_full_congruence, quotient_center, QuotientCenter};
pub use theorems::{verify_theorem, Bounds, Statement, Status, TheoremReport, G2_OUT_OF_SCOPE};

pub type Key = [u8; 16];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("bound exceeded while enumerating {what}: {partial} > {bound}")]
    BoundExceeded { what: String, partial: u64, bound: u64 },
    #[error("unsupported: {0}")]
    UnsupportedType(String),
    #[error("ring is infinite")]
    InfiniteRing,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Repr(#[from] ReprError),
}

/// Arithmetic on keys for one representation over one `Z/n`.
#[derive(Clone)]
pub struct FiniteContext {
    rep: Representation,
    ring: Ring,
    n: u32,
    dim: usize,
    /// `(Ω, Ω⁻¹)` for C2; A2 inverts by the adjugate.
    form: Option<(Key, Key)>,
}

impl FiniteContext {
    pub fn new(rep: &Representation, ring: &Ring) -> Result<FiniteContext, EnumError> {
        if rep.type_tag() == RootSystemType::G2 {
            return Err(EnumError::UnsupportedType(G2_OUT_OF_SCOPE.to_string()));
        }
        let n = ring.modulus().ok_or(EnumError::InfiniteRing)?;
        if n > 256 || ring.nvars() > 0 {
            return Err(EnumError::UnsupportedType(format!("ring {ring} (need Z/n with n ≤ 256)")));
        }
        let mut ctx = FiniteContext { rep: rep.clone(), ring: ring.clone(), n: n as u32, dim: rep.dim(), form: None };
        if let Some(omega) = rep.symplectic_form() {
            let mut o = [0u8; 16];
            let mut oinv = [0u8; 16];
            for r in 0..ctx.dim {
                for c in 0..ctx.dim {
                    o[r * ctx.dim + c] = ctx.reduce(omega.get(r, c));
                    // Ω² = −1
                    oinv[r * ctx.dim + c] = ctx.reduce(-omega.get(r, c));
                }
            }
            assert_eq!(ctx.mul(&o, &oinv), ctx.identity(), "Ω⁻¹ = −Ω");
            ctx.form = Some((o, oinv));
        }
        Ok(ctx)
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: i64) -> u8 {
        v.rem_euclid(self.n as i64) as u8
    }

    pub fn identity(&self) -> Key {
        let mut k = [0u8; 16];
        for i in 0..self.dim {
            k[i * self.dim + i] = (1 % self.n) as u8;
        }
        k
    }

    pub fn key_of(&self, g: &GroupElement) -> Key {
        let res = g.matrix().residues().expect("matrix over Z/n");
        let mut k = [0u8; 16];
        for (slot, r) in k.iter_mut().zip(res) {
            *slot = r as u8;
        }
        k
    }

    pub fn key_of_word(&self, w: &Word) -> Key {
        self.key_of(&w.evaluate(&self.rep, &self.ring))
    }

    pub fn element(&self, k: &Key) -> GroupElement {
        let entries = k[..self.dim * self.dim].iter().map(|&v| self.ring.from_i64(v as i64)).collect();
        GroupElement::new(&self.rep, Matrix::from_elements(&self.ring, self.dim, entries))
    }

    pub fn mul(&self, a: &Key, b: &Key) -> Key {
        let d = self.dim;
        let mut out = [0u8; 16];
        for r in 0..d {
            for c in 0..d {
                let mut acc = 0u32;
                for k in 0..d {
                    acc += a[r * d + k] as u32 * b[k * d + c] as u32;
                }
                out[r * d + c] = (acc % self.n) as u8;
            }
        }
        out
    }

    fn transpose(&self, a: &Key) -> Key {
        let d = self.dim;
        let mut out = [0u8; 16];
        for r in 0..d {
            for c in 0..d {
                out[c * d + r] = a[r * d + c];
            }
        }
        out
    }

    pub fn inv(&self, a: &Key) -> Key {
        match &self.form {
            Some((o, oinv)) => self.mul(&self.mul(oinv, &self.transpose(a)), o),
            None => {
                assert_eq!(self.dim, 3);
                let m = |r: usize, c: usize| a[r * 3 + c] as i64;
                let mut out = [0u8; 16];
                for r in 0..3 {
                    for c in 0..3 {
                        // inverse = adjugate when det = 1
                        let (r1, r2) = ((c + 1) % 3, (c + 2) % 3);
                        let (c1, c2) = ((r + 1) % 3, (r + 2) % 3);
                        out[r * 3 + c] = self.reduce(m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1));
                    }
                }
                out
            }
        }
    }

    /// `c g c⁻¹`
    pub fn conj(&self, c: &Key, g: &Key, cinv: &Key) -> Key {
        self.mul(&self.mul(c, g), cinv)
    }

    pub fn commutator(&self, a: &Key, ainv: &Key, b: &Key, binv: &Key) -> Key {
        self.mul(&self.mul(a, b), &self.mul(ainv, binv))
    }

    /// Whether `k ≡ 1` modulo the ideal `(d)`.
    pub fn congruent_to_identity(&self, k: &Key, d: u32) -> bool {
        let id = self.identity();
        k[..self.dim * self.dim].iter().zip(&id).all(|(&a, &b)| (a as u32 + self.n - b as u32).is_multiple_of(d))
    }

    /// Whether `k` satisfies the defining equations: `det = 1` for A2,
    /// `kᵀΩk = Ω` for C2.
    pub fn in_group(&self, k: &Key) -> bool {
        match &self.form {
            Some((o, _)) => self.mul(&self.mul(&self.transpose(k), o), k) == *o,
            None => {
                let m = |r: usize, c: usize| k[r * 3 + c] as i64;
                let det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                    - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                    + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
                det.rem_euclid(self.n as i64) == 1 % self.n as i64
            }
        }
    }

    fn ideal_generator(&self, ideal: &Ideal) -> Result<u32, EnumError> {
        if ideal.ring() != &self.ring {
            return Err(RingError::MixedRings(self.ring.to_string(), ideal.ring().to_string()).into());
        }
        Ok(ideal.modular_generator().expect("Z/n ideal") as u32)
    }
}

/// Where a generator came from: a word, or only a matrix (e.g. an element
/// of an enumerated congruence subgroup).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Word(Word),
    Matrix(Key),
}

impl Generator {
    pub fn describe(&self, dim: usize) -> String {
        match self {
            Generator::Word(w) => w.to_sexpr(),
            Generator::Matrix(k) => format!("{:?}", &k[..dim * dim]),
        }
    }
}

/// A finite subgroup as a set of keys.
#[derive(Clone)]
pub struct EnumeratedSubgroup {
    ctx: FiniteContext,
    elements: Vec<Key>,
    index: FxHashSet<Key>,
    generators: Vec<Generator>,
    /// Keys the set was closed under; empty for directly enumerated sets.
    gen_keys: Vec<Key>,
}

impl EnumeratedSubgroup {
    pub fn context(&self) -> &FiniteContext {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn keys(&self) -> &[Key] {
        &self.elements
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn contains_key(&self, k: &Key) -> bool {
        self.index.contains(k)
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.contains_key(&self.ctx.key_of(g))
    }

    pub fn same_elements(&self, other: &EnumeratedSubgroup) -> bool {
        self.len() == other.len() && self.is_subset_of(other)
    }

    pub fn is_subset_of(&self, other: &EnumeratedSubgroup) -> bool {
        self.elements.iter().all(|k| other.contains_key(k))
    }

    /// Closure audit: `s·g` is in the set for every element `s` and every
    /// generator key `g`. For a directly enumerated set this re-derives a
    /// generating set and checks that it closes up to the same set.
    pub fn audit(&self) -> bool {
        if !self.index.contains(&self.ctx.identity()) {
            return false;
        }
        if self.gen_keys.is_empty() && self.len() > 1 {
            let rebuilt = match generating_closure(&self.ctx, &self.elements, u64::MAX) {
                Ok(b) => b,
                Err(_) => return false,
            };
            return rebuilt.len() == self.len() && rebuilt.is_subset_of(self);
        }
        self.elements
            .iter()
            .all(|s| self.gen_keys.iter().all(|g| self.index.contains(&self.ctx.mul(s, g))))
    }

    /// A small generating set picked greedily from the elements.
    pub fn generating_keys(&self) -> Vec<Key> {
        if !self.gen_keys.is_empty() {
            return self.gen_keys.clone();
        }
        generating_closure(&self.ctx, &self.elements, u64::MAX).map(|b| b.gen_keys).unwrap_or_default()
    }
}

/// Incremental closure under right multiplication by a growing generator
/// list. For a finite group this yields the generated subgroup.
struct Builder<'a> {
    ctx: &'a FiniteContext,
    what: &'a str,
    bound: u64,
    elements: Vec<Key>,
    index: FxHashSet<Key>,
    gen_keys: Vec<Key>,
}

impl<'a> Builder<'a> {
    fn new(ctx: &'a FiniteContext, what: &'a str, bound: u64) -> Builder<'a> {
        let id = ctx.identity();
        let mut index = FxHashSet::default();
        index.insert(id);
        Builder { ctx, what, bound, elements: vec![id], index, gen_keys: Vec::new() }
    }

    fn contains(&self, k: &Key) -> bool {
        self.index.contains(k)
    }

    fn insert(&mut self, k: Key) -> Result<(), EnumError> {
        if self.index.insert(k) {
            self.elements.push(k);
            if self.elements.len() as u64 > self.bound {
                return Err(EnumError::BoundExceeded {
                    what: self.what.to_string(),
                    partial: self.elements.len() as u64,
                    bound: self.bound,
                });
            }
        }
        Ok(())
    }

    /// Adds `g` unless it is already a member; returns whether it was added.
    fn add_generator(&mut self, g: Key) -> Result<bool, EnumError> {
        if self.contains(&g) {
            return Ok(false);
        }
        self.gen_keys.push(g);
        let old = self.elements.len();
        for i in 0..old {
            let y = self.ctx.mul(&self.elements[i], &g);
            self.insert(y)?;
        }
        let mut q = old;
        while q < self.elements.len() {
            let x = self.elements[q];
            for h in 0..self.gen_keys.len() {
                let y = self.ctx.mul(&x, &self.gen_keys[h]);
                self.insert(y)?;
            }
            q += 1;
        }
        Ok(true)
    }

    fn finish(self, generators: Vec<Generator>, audit_keys: Vec<Key>) -> EnumeratedSubgroup {
        EnumeratedSubgroup {
            ctx: self.ctx.clone(),
            elements: self.elements,
            index: self.index,
            generators,
            gen_keys: if audit_keys.is_empty() { self.gen_keys } else { audit_keys },
        }
    }
}

fn generating_closure(ctx: &FiniteContext, elements: &[Key], bound: u64) -> Result<EnumeratedSubgroup, EnumError> {
    let mut b = Builder::new(ctx, "generating set", bound);
    for k in elements {
        b.add_generator(*k)?;
    }
    let gens = b.gen_keys.iter().map(|k| Generator::Matrix(*k)).collect();
    Ok(b.finish(gens, Vec::new()))
}

/// The subgroup generated by `gens`.
pub fn closure(ctx: &FiniteContext, gens: &[Word], bound: u64) -> Result<EnumeratedSubgroup, EnumError> {
    let keys: Vec<Key> = gens.iter().map(|w| ctx.key_of_word(w)).collect();
    let mut b = Builder::new(ctx, "closure", bound);
    for k in &keys {
        b.add_generator(*k)?;
    }
    Ok(b.finish(gens.iter().cloned().map(Generator::Word).collect(), keys))
}

struct Labeled {
    key: Key,
    inv: Key,
    gen: Generator,
}

fn labeled(ctx: &FiniteContext, gens: &[Generator]) -> Vec<Labeled> {
    let id = ctx.identity();
    let mut seen = FxHashSet::default();
    let mut out = Vec::new();
    for g in gens {
        let key = match g {
            Generator::Word(w) => ctx.key_of_word(w),
            Generator::Matrix(k) => *k,
        };
        if key != id && seen.insert(key) {
            out.push(Labeled { key, inv: ctx.inv(&key), gen: g.clone() });
        }
    }
    out
}

fn conj_label(g: &Generator, c: &Generator, key: Key) -> Generator {
    match (g, c) {
        (Generator::Word(gw), Generator::Word(cw)) => Generator::Word(Word::conj(gw.clone(), cw.clone())),
        _ => Generator::Matrix(key),
    }
}

/// Closes the subgroup generated by `seeds` under conjugation by every
/// conjugator. In a finite group, `cNc⁻¹ ⊆ N` already forces `c⁻¹Nc = N`.
fn normal_closure_labeled(
    ctx: &FiniteContext,
    seeds: impl Iterator<Item = (Key, Box<dyn FnOnce() -> Generator>)>,
    conjugators: &[Labeled],
    what: &str,
    bound: u64,
) -> Result<EnumeratedSubgroup, EnumError> {
    let mut b = Builder::new(ctx, what, bound);
    let mut labels: Vec<Generator> = Vec::new();
    for (key, label) in seeds {
        if b.add_generator(key)? {
            labels.push(label());
        }
    }
    let mut p = 0;
    while p < b.gen_keys.len() {
        let g = b.gen_keys[p];
        for c in conjugators {
            let x = ctx.conj(&c.key, &g, &c.inv);
            if b.add_generator(x)? {
                let l = conj_label(&labels[p], &c.gen, x);
                labels.push(l);
            }
        }
        p += 1;
    }
    Ok(b.finish(labels, Vec::new()))
}

/// The smallest subgroup containing `seed` and normalized by every conjugator.
pub fn normal_closure(
    ctx: &FiniteContext,
    seed: &[Word],
    conjugators: &[Word],
    bound: u64,
) -> Result<EnumeratedSubgroup, EnumError> {
    let conj = labeled(ctx, &conjugators.iter().cloned().map(Generator::Word).collect::<Vec<_>>());
    let seeds = seed.iter().map(|w| {
        let w = w.clone();
        (ctx.key_of_word(&w), Box::new(move || Generator::Word(w)) as Box<dyn FnOnce() -> Generator>)
    });
    normal_closure_labeled(ctx, seeds, &conj, "normal closure", bound)
}

/// `[H, K]` as the normal closure in `⟨H, K⟩` of the commutators of generators.
pub fn commutator_subgroup(
    ctx: &FiniteContext,
    h: &[Word],
    k: &[Word],
    bound: u64,
) -> Result<EnumeratedSubgroup, EnumError> {
    let hg: Vec<Generator> = h.iter().cloned().map(Generator::Word).collect();
    let kg: Vec<Generator> = k.iter().cloned().map(Generator::Word).collect();
    commutator_subgroup_of(ctx, &hg, &kg, bound)
}

/// [`commutator_subgroup`] for generators that may be bare matrices.
pub fn commutator_subgroup_of(
    ctx: &FiniteContext,
    h: &[Generator],
    k: &[Generator],
    bound: u64,
) -> Result<EnumeratedSubgroup, EnumError> {
    let hl = labeled(ctx, h);
    let kl = labeled(ctx, k);
    let seeds = hl.iter().flat_map(|a| {
        kl.iter().map(move |b| {
            let key = ctx.commutator(&a.key, &a.inv, &b.key, &b.inv);
            let label: Box<dyn FnOnce() -> Generator> = match (&a.gen, &b.gen) {
                (Generator::Word(aw), Generator::Word(bw)) => {
                    let (aw, bw) = (aw.clone(), bw.clone());
                    Box::new(move || Generator::Word(Word::commutator(&aw, &bw)))
                }
                _ => Box::new(move || Generator::Matrix(key)),
            };
            (key, label)
        })
    });
    let mut conj: Vec<Labeled> = Vec::new();
    let mut seen = FxHashSet::default();
    for l in hl.iter().chain(&kl) {
        if seen.insert(l.key) {
            conj.push(Labeled { key: l.key, inv: l.inv, gen: l.gen.clone() });
        }
    }
    normal_closure_labeled(ctx, seeds, &conj, "commutator subgroup", bound)
}

/// `x_α(ξ)`, `α ∈ Φ`, `ξ ∈ I`: the generators of `E(Φ, I)`.
pub fn elementary_generators(rep: &Representation, i: &Ideal) -> Result<Vec<Word>, EnumError> {
    let xs = i.elements()?;
    let mut out = Vec::new();
    for &a in rep.system().roots() {
        for xi in &xs {
            out.push(Word::x(a, xi.clone()));
        }
    }
    Ok(out)
}

//! Rank-2 root systems A2, C2 and G2.
//!
//! Roots are stored in simple-root coordinates: `(a, b)` is `a·α1 + b·α2`.
//! In C2 and G2, `α1` is the short simple root and `α2` the long one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("({0}, {1}) is not a root of {2}")]
    NotARoot(i32, i32, RootSystemType),
    #[error("roots {0} and {1} are opposite or equal")]
    OppositeRoots(String, String),
    #[error("no decomposition of {root} for case {case}")]
    NoDecomposition { root: String, case: MainLemmaCase },
    #[error("cannot parse root '{0}'")]
    Parse(String),
    #[error("unknown root system '{0}'")]
    UnknownType(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootSystemType {
    A2,
    C2,
    G2,
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootSystemType::A2 => "A2",
            RootSystemType::C2 => "C2",
            RootSystemType::G2 => "G2",
        })
    }
}

impl FromStr for RootSystemType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A2" => Ok(RootSystemType::A2),
            "C2" | "B2" => Ok(RootSystemType::C2),
            "G2" => Ok(RootSystemType::G2),
            _ => Err(RootError::UnknownType(s.to_string())),
        }
    }
}

/// The four rank-2 situations of the main commutator lemma.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MainLemmaCase {
    A2,
    C2Long,
    C2Short,
    G2Short,
}

impl MainLemmaCase {
    pub const ALL: [MainLemmaCase; 4] =
        [MainLemmaCase::A2, MainLemmaCase::C2Long, MainLemmaCase::C2Short, MainLemmaCase::G2Short];

    /// The system the case natively lives in.
    pub fn system(self) -> RootSystemType {
        match self {
            MainLemmaCase::A2 => RootSystemType::A2,
            MainLemmaCase::C2Long | MainLemmaCase::C2Short => RootSystemType::C2,
            MainLemmaCase::G2Short => RootSystemType::G2,
        }
    }
}

impl fmt::Display for MainLemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for MainLemmaCase {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MainLemmaCase::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| RootError::Parse(format!("unknown case '{s}'")))
    }
}

/// A root of a fixed rank-2 system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    system: RootSystemType,
    a: i8,
    b: i8,
}

impl Root {
    pub fn system(self) -> RootSystemType {
        self.system
    }

    pub fn coords(self) -> (i32, i32) {
        (self.a as i32, self.b as i32)
    }

    pub fn height(self) -> i32 {
        self.a as i32 + self.b as i32
    }

    pub fn is_positive(self) -> bool {
        self.height() > 0
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Root {
        Root { system: self.system, a: -self.a, b: -self.b }
    }

    /// Display name such as `a1`, `-a1-a2` or `3a1+2a2`.
    pub fn name(self) -> String {
        let mut out = String::new();
        for (c, label) in [(self.a, "a1"), (self.b, "a2")] {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(label);
        }
        out
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Root data of one rank-2 type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    ty: RootSystemType,
    gram: [[i32; 2]; 2],
    roots: Vec<Root>,
}

fn positive_coords(ty: RootSystemType) -> &'static [(i8, i8)] {
    match ty {
        RootSystemType::A2 => &[(1, 0), (0, 1), (1, 1)],
        RootSystemType::C2 => &[(1, 0), (0, 1), (1, 1), (2, 1)],
        RootSystemType::G2 => &[(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)],
    }
}

impl RootSystem {
    pub fn new(ty: RootSystemType) -> RootSystem {
        let gram = match ty {
            RootSystemType::A2 => [[2, -1], [-1, 2]],
            RootSystemType::C2 => [[2, -2], [-2, 4]],
            RootSystemType::G2 => [[2, -3], [-3, 6]],
        };
        let positives: Vec<Root> = positive_coords(ty)
            .iter()
            .map(|&(a, b)| Root { system: ty, a, b })
            .collect();
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(|r| r.neg()));
        RootSystem { ty, gram, roots }
    }

    pub fn type_tag(&self) -> RootSystemType {
        self.ty
    }

    /// All roots: positives by increasing height (α1 before α2 on ties),
    /// then their negatives in the same order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.roots.len() / 2]
    }

    pub fn negative_roots(&self) -> &[Root] {
        &self.roots[self.roots.len() / 2..]
    }

    pub fn simple_roots(&self) -> (Root, Root) {
        (self.roots[0], self.roots[1])
    }

    pub fn simple_root(&self, i: usize) -> Root {
        assert!(i == 1 || i == 2, "simple roots are numbered 1 and 2");
        self.roots[i - 1]
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, r: Root) -> usize {
        self.roots.iter().position(|&x| x == r).expect("root of this system")
    }

    pub fn root(&self, a: i32, b: i32) -> Result<Root, RootError> {
        self.try_root(a, b).ok_or(RootError::NotARoot(a, b, self.ty))
    }

    pub fn try_root(&self, a: i32, b: i32) -> Option<Root> {
        self.roots.iter().copied().find(|r| r.coords() == (a, b))
    }

    pub fn parse_root(&self, name: &str) -> Result<Root, RootError> {
        let name = name.trim();
        self.roots
            .iter()
            .copied()
            .find(|r| r.name() == name)
            .ok_or_else(|| RootError::Parse(name.to_string()))
    }

    /// `i·α + j·β` when it is a root.
    pub fn combine(&self, i: i32, alpha: Root, j: i32, beta: Root) -> Option<Root> {
        let (a1, b1) = alpha.coords();
        let (a2, b2) = beta.coords();
        self.try_root(i * a1 + j * a2, i * b1 + j * b2)
    }

    pub fn add(&self, alpha: Root, beta: Root) -> Option<Root> {
        self.combine(1, alpha, 1, beta)
    }

    pub fn inner(&self, x: (i32, i32), y: (i32, i32)) -> i32 {
        let g = &self.gram;
        x.0 * (g[0][0] * y.0 + g[0][1] * y.1) + x.1 * (g[1][0] * y.0 + g[1][1] * y.1)
    }

    pub fn norm(&self, r: Root) -> i32 {
        self.inner(r.coords(), r.coords())
    }

    /// `⟨λ, α^∨⟩ = 2(λ, α)/(α, α)` for a lattice point `λ`.
    pub fn cartan(&self, lambda: (i32, i32), alpha: Root) -> i32 {
        let num = 2 * self.inner(lambda, alpha.coords());
        let den = self.norm(alpha);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Coordinates of the coroot `α^∨` in the basis of simple coroots.
    pub fn coroot_coords(&self, alpha: Root) -> (i32, i32) {
        let (a, b) = alpha.coords();
        let n = self.norm(alpha);
        let (n1, n2) = (self.gram[0][0], self.gram[1][1]);
        debug_assert!((a * n1) % n == 0 && (b * n2) % n == 0);
        (a * n1 / n, b * n2 / n)
    }

    /// In A2 every root counts as long.
    pub fn is_long(&self, r: Root) -> bool {
        let max = self.roots.iter().map(|&x| self.norm(x)).max().expect("nonempty");
        self.norm(r) == max
    }

    /// Largest `p` with `β − pα ∈ Φ` and largest `q` with `β + qα ∈ Φ`.
    pub fn root_string(&self, alpha: Root, beta: Root) -> Result<(u32, u32), RootError> {
        if alpha == beta || alpha == beta.neg() {
            return Err(RootError::OppositeRoots(alpha.name(), beta.name()));
        }
        let mut p = 0;
        while self.combine(1, beta, -(p as i32 + 1), alpha).is_some() {
            p += 1;
        }
        let mut q = 0;
        while self.combine(1, beta, q as i32 + 1, alpha).is_some() {
            q += 1;
        }
        Ok((p, q))
    }

    /// Pairs `(i, j)` of positive integers with `iα + jβ ∈ Φ`, ordered by
    /// decreasing `i + j`, ties by decreasing `i`.
    pub fn commutator_terms(&self, alpha: Root, beta: Root) -> Vec<(u32, u32, Root)> {
        let mut out = Vec::new();
        for s in (2..=5u32).rev() {
            for i in (1..s).rev() {
                let j = s - i;
                if let Some(r) = self.combine(i as i32, alpha, j as i32, beta) {
                    out.push((i, j, r));
                }
            }
        }
        out
    }

    /// Whether the main-lemma case can be run at `α` in this system.
    pub fn case_applies(&self, alpha: Root, case: MainLemmaCase) -> bool {
        self.decompose_for_case(alpha, case).is_ok()
    }

    /// Roots `(β, γ)` with `α = β + γ` (or `β + 2γ` for [`MainLemmaCase::C2Long`]).
    ///
    /// * `A2`: `β`, `γ` of the same length as `α` (also valid on long roots of G2).
    /// * `C2Long`: `α`, `β` long, `γ` short, `α = β + 2γ`.
    /// * `C2Short`, `G2Short`: `α`, `γ` short, `β` long.
    ///
    /// Among several candidates, pairs with more simple roots win, then the
    /// pair whose roots come first in [`RootSystem::roots`].
    pub fn decompose_for_case(&self, alpha: Root, case: MainLemmaCase) -> Result<(Root, Root), RootError> {
        let fail = || RootError::NoDecomposition { root: alpha.name(), case };
        let system_ok = match case {
            MainLemmaCase::A2 => self.ty != RootSystemType::C2,
            MainLemmaCase::C2Long | MainLemmaCase::C2Short => self.ty == RootSystemType::C2,
            MainLemmaCase::G2Short => self.ty == RootSystemType::G2,
        };
        if !system_ok || alpha.system() != self.ty {
            return Err(fail());
        }
        let long = |r: Root| self.is_long(r);
        let ok = |beta: Root, gamma: Root| -> bool {
            match case {
                MainLemmaCase::A2 => {
                    long(alpha)
                        && long(beta)
                        && long(gamma)
                        && self.add(beta, gamma) == Some(alpha)
                }
                MainLemmaCase::C2Long => {
                    long(alpha)
                        && long(beta)
                        && !long(gamma)
                        && self.combine(1, beta, 2, gamma) == Some(alpha)
                }
                MainLemmaCase::C2Short | MainLemmaCase::G2Short => {
                    !long(alpha)
                        && long(beta)
                        && !long(gamma)
                        && self.add(beta, gamma) == Some(alpha)
                }
            }
        };
        let simple = |r: Root| r == self.roots[0] || r == self.roots[1];
        let mut best: Option<(usize, usize, usize, Root, Root)> = None;
        for (ib, &beta) in self.roots.iter().enumerate() {
            for (ig, &gamma) in self.roots.iter().enumerate() {
                if !ok(beta, gamma) {
                    continue;
                }
                let nonsimple = 2 - simple(beta) as usize - simple(gamma) as usize;
                let cand = (nonsimple, ib, ig, beta, gamma);
                if best.as_ref().is_none_or(|b| (cand.0, cand.1, cand.2) < (b.0, b.1, b.2)) {
                    best = Some(cand);
                }
            }
        }
        best.map(|(_, _, _, b, g)| (b, g)).ok_or_else(fail)
    }

    /// The root the main-lemma case is run at by default.
    pub fn default_case_root(&self, case: MainLemmaCase) -> Result<Root, RootError> {
        let (a, b) = match case {
            MainLemmaCase::A2 if self.ty == RootSystemType::G2 => (3, 2),
            MainLemmaCase::A2 | MainLemmaCase::C2Short | MainLemmaCase::G2Short => (1, 1),
            MainLemmaCase::C2Long => (2, 1),
        };
        let r = self.root(a, b)?;
        self.decompose_for_case(r, case)?;
        Ok(r)
    }
}

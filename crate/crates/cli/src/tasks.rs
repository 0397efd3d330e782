//! Tasks shared by the subcommands and campaign files, and their execution.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use chevlab::factorizer::{
    levi_commutator_check, long_root_decomposition, mixed_commutator_generators, relative_generators,
    unit_decompose, LeviSide, MainLemma, ParabolicData,
};
use chevlab::repr::{verify_steinberg, Representation};
use chevlab::ring::{Ideal, Ring, RingElement};
use chevlab::rootsystem::{MainLemmaCase, Root, RootSystem, RootSystemType};
use chevlab::structconst::{joint_normalization, normalize_signs, StructureConstantTable};
use chevlab::subgroupenum::{verify_theorem, Bounds, Statement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorKind {
    Relative,
    Mixed,
}

/// One unit of work. Omitted optional fields select defaults: all systems,
/// all cases, or symbolic rings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Task {
    VerifySteinberg {
        #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
        ty: Option<RootSystemType>,
    },
    VerifyChevalley {
        #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
        ty: Option<RootSystemType>,
    },
    VerifyMainLemma {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        case: Option<MainLemmaCase>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ring: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideal_i: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideal_j: Option<u64>,
        /// Run at every root the case applies to, not just the default one.
        #[serde(default, skip_serializing_if = "is_false")]
        all_roots: bool,
    },
    VerifyLongRoot {
        #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
        ty: Option<RootSystemType>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ring: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideal: Option<u64>,
    },
    VerifyLevi {
        #[serde(rename = "type")]
        ty: RootSystemType,
        ring: String,
        ideal_i: u64,
        ideal_j: u64,
        samples: usize,
    },
    Bruteforce {
        stmt: Statement,
        #[serde(rename = "type")]
        ty: RootSystemType,
        ring: String,
        ideal_i: u64,
        ideal_j: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bound: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        candidate_bound: Option<u64>,
    },
    DumpConstants {
        #[serde(rename = "type")]
        ty: RootSystemType,
    },
    DumpGenerators {
        #[serde(rename = "type")]
        ty: RootSystemType,
        ring: String,
        ideal_i: u64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideal_j: Option<u64>,
        kind: GeneratorKind,
    },
    FactorizeMainLemma {
        case: MainLemmaCase,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ring: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        root: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        xi: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        zeta: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        eta: Option<String>,
    },
    FactorizeLongRoot {
        #[serde(rename = "type")]
        ty: RootSystemType,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ring: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideal: Option<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        root: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        xi: Option<String>,
    },
}

fn is_false(b: &bool) -> bool {
    !*b
}

/// The outcome of one task as it appears in a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TaskReport {
    pub task: Task,
    /// SHA-256 of the task's JSON form.
    pub input_hash: String,
    pub seed: u64,
    /// `None` for informational tasks and out-of-scope statements.
    pub verdict: Option<bool>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl TaskReport {
    pub fn failed(&self) -> bool {
        self.verdict == Some(false)
    }

    pub fn errored(&self) -> bool {
        self.error.is_some()
    }
}

const SYMBOLIC_RING: &str = "Z[xi,zeta,eta]";

fn finite_ring(spec: &str) -> Result<Ring, String> {
    let ring = Ring::parse(spec).map_err(|e| format!("ring '{spec}': {e}"))?;
    if ring.modulus().is_none() || ring.nvars() > 0 {
        return Err(format!("ring '{spec}' must be Z/n"));
    }
    Ok(ring)
}

/// `(d)` in `Z/n`; equals `(gcd(d, n))`.
fn principal(ring: &Ring, d: u64) -> Result<Ideal, String> {
    let d = i64::try_from(d).map_err(|_| format!("ideal generator {d} is too large"))?;
    Ok(Ideal::principal(ring, d))
}

fn parse_root(rs: &RootSystem, name: &str) -> Result<Root, String> {
    rs.parse_root(name).map_err(|e| e.to_string())
}

fn elem(ring: &Ring, text: &str) -> Result<RingElement, String> {
    ring.parse_element(text).map_err(|e| format!("element '{text}': {e}"))
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::VerifySteinberg { .. } => "verify-steinberg",
            Task::VerifyChevalley { .. } => "verify-chevalley",
            Task::VerifyMainLemma { .. } => "verify-main-lemma",
            Task::VerifyLongRoot { .. } => "verify-long-root",
            Task::VerifyLevi { .. } => "verify-levi",
            Task::Bruteforce { .. } => "bruteforce",
            Task::DumpConstants { .. } => "dump-constants",
            Task::DumpGenerators { .. } => "dump-generators",
            Task::FactorizeMainLemma { .. } => "factorize-main-lemma",
            Task::FactorizeLongRoot { .. } => "factorize-long-root",
        }
    }

    /// Checks rings, ideals, roots and type/case combinations without
    /// running anything.
    pub fn validate(&self) -> Result<(), String> {
        match self {
            Task::VerifySteinberg { .. } | Task::VerifyChevalley { .. } | Task::DumpConstants { .. } => Ok(()),
            Task::VerifyMainLemma { ring, ideal_i, ideal_j, .. } => match ring {
                None if ideal_i.is_some() || ideal_j.is_some() => {
                    Err("ideals are fixed to (xi), (zeta) in symbolic mode".into())
                }
                None => Ok(()),
                Some(r) => {
                    finite_ring(r)?;
                    if ideal_i.is_none() || ideal_j.is_none() {
                        return Err("finite main-lemma runs need ideal_i and ideal_j".into());
                    }
                    Ok(())
                }
            },
            Task::VerifyLongRoot { ty, ring, ideal } => {
                if *ty == Some(RootSystemType::A2) {
                    return Err("A2 has no short roots".into());
                }
                match ring {
                    None if *ty == Some(RootSystemType::G2) => {
                        Err("the G2 decomposition needs a finite ring".into())
                    }
                    None => Ok(()),
                    Some(r) => {
                        finite_ring(r)?;
                        ideal.map(|_| ()).ok_or_else(|| "finite long-root runs need an ideal".into())
                    }
                }
            }
            Task::VerifyLevi { ring, samples, .. } => {
                finite_ring(ring)?;
                if *samples == 0 {
                    return Err("samples must be positive".into());
                }
                Ok(())
            }
            Task::Bruteforce { ring, .. } => finite_ring(ring).map(|_| ()),
            Task::DumpGenerators { ring, ideal_j, kind, .. } => {
                finite_ring(ring)?;
                if *kind == GeneratorKind::Mixed && ideal_j.is_none() {
                    return Err("mixed generators need ideal_j".into());
                }
                Ok(())
            }
            Task::FactorizeMainLemma { case, ring, root, xi, zeta, eta } => {
                let rs = RootSystem::new(case.system());
                if let Some(r) = root {
                    let a = parse_root(&rs, r)?;
                    if !rs.case_applies(a, *case) {
                        return Err(format!("{case} does not apply at {r}"));
                    }
                }
                match ring {
                    None => Ok(()),
                    Some(r) => {
                        let ring = finite_ring(r)?;
                        for t in [xi, zeta, eta] {
                            match t {
                                Some(t) => {
                                    elem(&ring, t)?;
                                }
                                None => return Err("finite factorizations need xi, zeta and eta".into()),
                            }
                        }
                        Ok(())
                    }
                }
            }
            Task::FactorizeLongRoot { ty, ring, ideal, root, xi } => {
                let rs = RootSystem::new(*ty);
                if *ty == RootSystemType::A2 {
                    return Err("A2 has no short roots".into());
                }
                if let Some(r) = root {
                    let b = parse_root(&rs, r)?;
                    if rs.is_long(b) {
                        return Err(format!("{r} is a long root"));
                    }
                }
                match ring {
                    None if *ty == RootSystemType::G2 => Err("the G2 decomposition needs a finite ring".into()),
                    None => Ok(()),
                    Some(r) => {
                        let ring = finite_ring(r)?;
                        if ideal.is_none() {
                            return Err("finite long-root runs need an ideal".into());
                        }
                        if let Some(x) = xi {
                            elem(&ring, x)?;
                        }
                        Ok(())
                    }
                }
            }
        }
    }

    pub fn input_hash(&self) -> String {
        let text = serde_json::to_string(self).expect("task serializes");
        hex::encode(Sha256::digest(text.as_bytes()))
    }

    /// Validates and runs the task. Execution errors are recorded in the
    /// report rather than returned.
    pub fn run(&self, seed: u64, timings: bool) -> TaskReport {
        let start = Instant::now();
        let outcome = self.validate().and_then(|_| self.execute(seed));
        let (verdict, result, error) = match outcome {
            Ok((v, r)) => (v, r, None),
            Err(e) => (None, Value::Null, Some(e)),
        };
        TaskReport {
            task: self.clone(),
            input_hash: self.input_hash(),
            seed,
            verdict,
            result,
            error,
            elapsed_ms: timings.then(|| start.elapsed().as_millis()),
        }
    }

    fn execute(&self, seed: u64) -> Result<(Option<bool>, Value), String> {
        match self {
            Task::VerifySteinberg { ty } => steinberg(*ty),
            Task::VerifyChevalley { ty } => chevalley(*ty),
            Task::VerifyMainLemma { case, ring, ideal_i, ideal_j, all_roots } => {
                main_lemma(*case, ring.as_deref(), *ideal_i, *ideal_j, *all_roots)
            }
            Task::VerifyLongRoot { ty, ring, ideal } => long_root(*ty, ring.as_deref(), *ideal),
            Task::VerifyLevi { ty, ring, ideal_i, ideal_j, samples } => {
                levi(*ty, ring, *ideal_i, *ideal_j, *samples, seed)
            }
            Task::Bruteforce { stmt, ty, ring, ideal_i, ideal_j, bound, candidate_bound } => {
                let ring = finite_ring(ring)?;
                let mut bounds = Bounds::default();
                if let Some(b) = bound {
                    bounds.elements = *b;
                }
                if let Some(b) = candidate_bound {
                    bounds.candidates = *b;
                }
                let rep = Representation::of(*ty);
                let i = principal(&ring, *ideal_i)?;
                let j = principal(&ring, *ideal_j)?;
                let report = verify_theorem(*stmt, &rep, &ring, &i, &j, bounds).map_err(|e| e.to_string())?;
                Ok((report.verdict, serde_json::to_value(&report).expect("serializable")))
            }
            Task::DumpConstants { ty } => {
                let table = StructureConstantTable::compute(&Representation::of(*ty)).map_err(|e| e.to_string())?;
                Ok((None, json!({ "system": ty, "order": "i+j decreasing, then i decreasing", "entries": table.entries() })))
            }
            Task::DumpGenerators { ty, ring, ideal_i, ideal_j, kind } => {
                dump_generators(*ty, ring, *ideal_i, *ideal_j, *kind)
            }
            Task::FactorizeMainLemma { case, ring, root, xi, zeta, eta } => factorize_main_lemma(
                *case,
                ring.as_deref(),
                root.as_deref(),
                [xi.as_deref(), zeta.as_deref(), eta.as_deref()],
            ),
            Task::FactorizeLongRoot { ty, ring, ideal, root, xi } => {
                factorize_long_root(*ty, ring.as_deref(), *ideal, root.as_deref(), xi.as_deref())
            }
        }
    }
}

fn types(ty: Option<RootSystemType>) -> Vec<RootSystemType> {
    match ty {
        Some(t) => vec![t],
        None => vec![RootSystemType::A2, RootSystemType::C2, RootSystemType::G2],
    }
}

fn steinberg(ty: Option<RootSystemType>) -> Result<(Option<bool>, Value), String> {
    let mut all = true;
    let mut out = Vec::new();
    for t in types(ty) {
        let r = verify_steinberg(&Representation::of(t));
        all &= r.all_passed();
        let failures: Vec<&str> = r
            .additivity
            .iter()
            .chain(&r.commutators)
            .filter(|c| !c.passed)
            .map(|c| c.relation.as_str())
            .collect();
        out.push(json!({
            "system": t,
            "additivity_relations": r.additivity.len(),
            "commutator_relations": r.commutators.len(),
            "passed": r.all_passed(),
            "failures": failures,
        }));
    }
    Ok((Some(all), Value::Array(out)))
}

/// The cases checked per system; A2 also runs on the long roots of G2.
fn cases_for(t: RootSystemType) -> Vec<MainLemmaCase> {
    match t {
        RootSystemType::A2 => vec![MainLemmaCase::A2],
        RootSystemType::C2 => vec![MainLemmaCase::C2Long, MainLemmaCase::C2Short],
        RootSystemType::G2 => vec![MainLemmaCase::G2Short, MainLemmaCase::A2],
    }
}

fn chevalley(ty: Option<RootSystemType>) -> Result<(Option<bool>, Value), String> {
    let mut all = true;
    let mut out = Vec::new();
    for t in types(ty) {
        let rs = RootSystem::new(t);
        let table = StructureConstantTable::compute(&Representation::of(t)).map_err(|e| e.to_string())?;
        let mut cases = Vec::new();
        let mut roots = Vec::new();
        for case in cases_for(t) {
            let alpha = rs.default_case_root(case).map_err(|e| e.to_string())?;
            roots.push((case, alpha));
            match normalize_signs(&table, case, alpha) {
                Ok(n) => cases.push(json!({
                    "case": case,
                    "alpha": n.alpha.name(),
                    "beta": n.beta.name(),
                    "gamma": n.gamma.name(),
                    "constants": n.constants.iter().map(|(k, v)| json!({ "name": k, "value": v })).collect::<Vec<_>>(),
                    "signs": n.signs,
                    "matches": true,
                })),
                Err(e) => {
                    all = false;
                    cases.push(json!({ "case": case, "alpha": alpha.name(), "matches": false, "error": e.to_string() }));
                }
            }
        }
        let joint = joint_normalization(&table, &roots).map_err(|e| e.to_string())?;
        out.push(json!({
            "system": t,
            "cases": cases,
            "single_normalization_for_all_cases": joint.is_some(),
            "joint_signs": joint,
        }));
    }
    Ok((Some(all), Value::Array(out)))
}

fn symbolic_ring() -> (Ring, RingElement, RingElement, RingElement) {
    let ring = Ring::parse(SYMBOLIC_RING).expect("valid ring");
    let v = |n: &str| ring.var(n).expect("variable");
    let (xi, zeta, eta) = (v("xi"), v("zeta"), v("eta"));
    (ring, xi, zeta, eta)
}

fn main_lemma(
    case: Option<MainLemmaCase>,
    ring: Option<&str>,
    ideal_i: Option<u64>,
    ideal_j: Option<u64>,
    all_roots: bool,
) -> Result<(Option<bool>, Value), String> {
    let cases = case.map(|c| vec![c]).unwrap_or_else(|| MainLemmaCase::ALL.to_vec());
    let mut all = true;
    let mut out = Vec::new();
    for case in cases {
        let rep = Representation::of(case.system());
        let rs = rep.system();
        let roots: Vec<Root> = if all_roots {
            rs.roots().iter().copied().filter(|&a| rs.case_applies(a, case)).collect()
        } else {
            vec![rs.default_case_root(case).map_err(|e| e.to_string())?]
        };
        for alpha in roots {
            let ml = MainLemma::new(&rep, case, Some(alpha)).map_err(|e| e.to_string())?;
            match ring {
                None => {
                    let (ring, xi, zeta, eta) = symbolic_ring();
                    let i = Ideal::new(&ring, std::slice::from_ref(&xi)).expect("term ideal");
                    let j = Ideal::new(&ring, std::slice::from_ref(&zeta)).expect("term ideal");
                    let f = ml.factorize(&xi, &zeta, &eta).map_err(|e| e.to_string())?;
                    let check = f.verify(&rep, &i, &j);
                    all &= check.passed();
                    out.push(json!({
                        "case": case,
                        "alpha": alpha.name(),
                        "ring": SYMBOLIC_RING,
                        "factors": f.factors.len(),
                        "certificates": f.factors.iter().map(|(_, c)| c.summary()).collect::<Vec<_>>(),
                        "product_equals_target": check.product_equal,
                        "certificates_valid": check.certificates.iter().all(Result::is_ok),
                    }));
                }
                Some(spec) => {
                    let ring = finite_ring(spec)?;
                    let i = principal(&ring, ideal_i.expect("validated"))?;
                    let j = principal(&ring, ideal_j.expect("validated"))?;
                    let (xs, zs) = (i.elements().map_err(|e| e.to_string())?, j.elements().map_err(|e| e.to_string())?);
                    let etas: Vec<RingElement> = ring.enumerate_elements().map_err(|e| e.to_string())?.collect();
                    let mut triples = 0u64;
                    let mut failures = Vec::new();
                    for xi in &xs {
                        for zeta in &zs {
                            for eta in &etas {
                                triples += 1;
                                let ok = ml
                                    .factorize(xi, zeta, eta)
                                    .map(|f| f.verify(&rep, &i, &j).passed())
                                    .unwrap_or(false);
                                if !ok && failures.len() < 5 {
                                    failures.push(format!("({xi}, {zeta}, {eta})"));
                                }
                            }
                        }
                    }
                    all &= failures.is_empty();
                    out.push(json!({
                        "case": case,
                        "alpha": alpha.name(),
                        "ring": ring.to_string(),
                        "ideal_i": i.to_string(),
                        "ideal_j": j.to_string(),
                        "triples": triples,
                        "passed": failures.is_empty(),
                        "failures": failures,
                    }));
                }
            }
        }
    }
    Ok((Some(all), Value::Array(out)))
}

fn long_root(ty: Option<RootSystemType>, ring: Option<&str>, ideal: Option<u64>) -> Result<(Option<bool>, Value), String> {
    let tys = match (ty, ring) {
        (Some(t), _) => vec![t],
        (None, None) => vec![RootSystemType::C2],
        (None, Some(_)) => vec![RootSystemType::C2, RootSystemType::G2],
    };
    let mut all = true;
    let mut out = Vec::new();
    for t in tys {
        let rep = Representation::of(t);
        let rs = rep.system();
        let (ring, i, values) = match ring {
            None => {
                let ring = Ring::parse("Z[xi]").expect("valid ring");
                let xi = ring.var("xi").expect("variable");
                let i = Ideal::new(&ring, std::slice::from_ref(&xi)).expect("term ideal");
                (ring, i, vec![xi])
            }
            Some(spec) => {
                let ring = finite_ring(spec)?;
                let i = principal(&ring, ideal.expect("validated"))?;
                let values = i.elements().map_err(|e| e.to_string())?;
                (ring, i, values)
            }
        };
        let terms = if t == RootSystemType::G2 { unit_decompose(&ring).map_err(|e| e.to_string())?.len() } else { 0 };
        let max_factors = if t == RootSystemType::G2 { 6 * terms } else { 3 };
        let mut checked = 0;
        let mut worst = 0;
        let mut failures = Vec::new();
        for &b in rs.roots().iter().filter(|&&b| !rs.is_long(b)) {
            for xi in &values {
                checked += 1;
                match long_root_decomposition(&rep, b, xi, &i) {
                    Ok(d) => {
                        worst = worst.max(d.factor_count());
                        let ok = d.word.uses_only_long_roots(rs)
                            && d.word.in_relative_level(&i)
                            && d.factor_count() <= max_factors
                            && d.word.evaluate(&rep, &ring) == rep.x(b, xi);
                        if !ok {
                            failures.push(format!("{} {xi}", b.name()));
                        }
                    }
                    Err(e) => failures.push(format!("{} {xi}: {e}", b.name())),
                }
            }
        }
        all &= failures.is_empty();
        out.push(json!({
            "system": t,
            "ring": ring.to_string(),
            "ideal": i.to_string(),
            "unit_terms": terms,
            "decompositions": checked,
            "max_factor_count": worst,
            "factor_bound": max_factors,
            "passed": failures.is_empty(),
            "failures": failures,
        }));
    }
    Ok((Some(all), Value::Array(out)))
}

fn levi(ty: RootSystemType, ring: &str, ideal_i: u64, ideal_j: u64, samples: usize, seed: u64) -> Result<(Option<bool>, Value), String> {
    let ring = finite_ring(ring)?;
    let rep = Representation::of(ty);
    let i = principal(&ring, ideal_i)?;
    let j = principal(&ring, ideal_j)?;
    let mut all = true;
    let mut out = Vec::new();
    for r in 1..=2 {
        let p = ParabolicData::new(rep.system(), r).map_err(|e| e.to_string())?;
        for side in [LeviSide::Upper, LeviSide::Lower] {
            let rep_seed = seed.wrapping_add(r as u64 * 2 + (side == LeviSide::Lower) as u64);
            let report = levi_commutator_check(&rep, &p, side, &i, &j, samples, rep_seed).map_err(|e| e.to_string())?;
            all &= report.passed();
            out.push(serde_json::to_value(&report).expect("serializable"));
        }
    }
    Ok((Some(all), Value::Array(out)))
}

fn dump_generators(
    ty: RootSystemType,
    ring: &str,
    ideal_i: u64,
    ideal_j: Option<u64>,
    kind: GeneratorKind,
) -> Result<(Option<bool>, Value), String> {
    let ring = finite_ring(ring)?;
    let rs = RootSystem::new(ty);
    let i = principal(&ring, ideal_i)?;
    let value = match kind {
        GeneratorKind::Relative => {
            let words = relative_generators(&rs, &i).map_err(|e| e.to_string())?;
            json!({ "count": words.len(), "words": words.iter().map(|w| w.to_sexpr()).collect::<Vec<_>>() })
        }
        GeneratorKind::Mixed => {
            let j = principal(&ring, ideal_j.expect("validated"))?;
            let m = mixed_commutator_generators(&rs, &i, &j).map_err(|e| e.to_string())?;
            json!({
                "condition_star": m.condition_star,
                "condition_star_holds": m.condition_star_holds,
                "count": m.generators.len(),
                "generators": m.generators.iter().map(|g| json!({
                    "bullet": g.bullet,
                    "word": g.word.to_sexpr(),
                    "certificate": g.certificate.as_ref().map(|c| c.summary()).unwrap_or_else(|| "Unproven".into()),
                })).collect::<Vec<_>>(),
            })
        }
    };
    Ok((None, value))
}

fn factorize_main_lemma(
    case: MainLemmaCase,
    ring: Option<&str>,
    root: Option<&str>,
    params: [Option<&str>; 3],
) -> Result<(Option<bool>, Value), String> {
    let rep = Representation::of(case.system());
    let alpha = root.map(|r| parse_root(rep.system(), r)).transpose()?;
    let ml = MainLemma::new(&rep, case, alpha).map_err(|e| e.to_string())?;
    let (ring, xi, zeta, eta) = match ring {
        None => symbolic_ring(),
        Some(spec) => {
            let ring = finite_ring(spec)?;
            let [x, z, e] = params.map(|p| p.expect("validated"));
            let (x, z, e) = (elem(&ring, x)?, elem(&ring, z)?, elem(&ring, e)?);
            (ring, x, z, e)
        }
    };
    let i = Ideal::new(&ring, std::slice::from_ref(&xi)).map_err(|e| e.to_string())?;
    let j = Ideal::new(&ring, std::slice::from_ref(&zeta)).map_err(|e| e.to_string())?;
    let f = ml.factorize(&xi, &zeta, &eta).map_err(|e| e.to_string())?;
    let check = f.verify(&rep, &i, &j);
    let n = ml.normalization();
    let value = json!({
        "case": case,
        "ring": ring.to_string(),
        "alpha": f.alpha.name(),
        "beta": f.beta.name(),
        "gamma": f.gamma.name(),
        "signs": n.signs,
        "constants": n.constants.iter().map(|(k, v)| json!({ "name": k, "value": v })).collect::<Vec<_>>(),
        "target": f.target.to_sexpr(),
        "tail": f.tail.to_sexpr(),
        "residues": f.residues.iter().map(|(k, w)| json!({ "name": k, "word": w.to_sexpr() })).collect::<Vec<_>>(),
        "factors": f.factors.iter().zip(&check.certificates).map(|((w, c), ok)| json!({
            "word": w.to_sexpr(),
            "certificate": c.summary(),
            "valid": ok.is_ok(),
            "error": ok.as_ref().err().map(|e| e.to_string()),
        })).collect::<Vec<_>>(),
        "product_equals_target": check.product_equal,
    });
    Ok((Some(check.passed()), value))
}

fn factorize_long_root(
    ty: RootSystemType,
    ring: Option<&str>,
    ideal: Option<u64>,
    root: Option<&str>,
    xi: Option<&str>,
) -> Result<(Option<bool>, Value), String> {
    let rep = Representation::of(ty);
    let rs = rep.system();
    let (ring, i, values) = match ring {
        None => {
            let ring = Ring::parse("Z[xi]").expect("valid ring");
            let x = ring.var("xi").expect("variable");
            let i = Ideal::new(&ring, std::slice::from_ref(&x)).expect("term ideal");
            (ring, i, vec![x])
        }
        Some(spec) => {
            let ring = finite_ring(spec)?;
            let i = principal(&ring, ideal.expect("validated"))?;
            let values = match xi {
                Some(x) => vec![elem(&ring, x)?],
                None => i.elements().map_err(|e| e.to_string())?,
            };
            (ring, i, values)
        }
    };
    let roots: Vec<Root> = match root {
        Some(r) => vec![parse_root(rs, r)?],
        None => rs.roots().iter().copied().filter(|&b| !rs.is_long(b)).collect(),
    };
    let mut all = true;
    let mut out = Vec::new();
    for b in roots {
        for x in &values {
            match long_root_decomposition(&rep, b, x, &i) {
                Ok(d) => {
                    let long = d.word.uses_only_long_roots(rs);
                    all &= long;
                    out.push(json!({
                        "root": b.name(),
                        "xi": x.to_string(),
                        "long_root": d.alpha.name(),
                        "short_root": d.gamma.name(),
                        "unit_terms": d.terms.iter().map(|(t, r)| json!({ "theta": t.to_string(), "r": r.to_string() })).collect::<Vec<_>>(),
                        "factor_count": d.factor_count(),
                        "only_long_roots": long,
                        "word": d.word.to_sexpr(),
                    }));
                }
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    Ok((Some(all), json!({ "system": ty, "ring": ring.to_string(), "ideal": i.to_string(), "decompositions": out })))
}

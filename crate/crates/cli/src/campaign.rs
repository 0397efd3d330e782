//! Campaign files: a seed plus a list of tasks, run in order.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use chevlab::rootsystem::{MainLemmaCase, RootSystemType};
use chevlab::subgroupenum::Statement;

use crate::tasks::{Task, TaskReport};

fn default_seed() -> u64 {
    1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Campaign {
    #[serde(default = "default_seed")]
    pub seed: u64,
    /// Report path; `--report` takes precedence.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    pub tasks: Vec<Task>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CampaignReport {
    /// The campaign after command-line overrides.
    pub config: Campaign,
    /// SHA-256 of `config`'s JSON form.
    pub input_hash: String,
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
    pub informational: usize,
    pub tasks: Vec<TaskReport>,
}

impl Campaign {
    pub fn load(path: &Path) -> Result<Campaign, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// Every task's validation error, labelled by position.
    pub fn validate(&self) -> Result<(), String> {
        let errors: Vec<String> = self
            .tasks
            .iter()
            .enumerate()
            .filter_map(|(k, t)| t.validate().err().map(|e| format!("task {k} ({}): {e}", t.name())))
            .collect();
        if errors.is_empty() {
            Ok(())
        } else {
            Err(errors.join("\n"))
        }
    }

    pub fn run(&self, timings: bool) -> CampaignReport {
        let hash = {
            use sha2::{Digest, Sha256};
            hex::encode(Sha256::digest(serde_json::to_string(self).expect("serializes").as_bytes()))
        };
        let tasks: Vec<TaskReport> = self
            .tasks
            .iter()
            .enumerate()
            .map(|(k, t)| t.run(self.seed.wrapping_add(k as u64), timings))
            .collect();
        let count = |f: &dyn Fn(&TaskReport) -> bool| tasks.iter().filter(|t| f(t)).count();
        CampaignReport {
            config: self.clone(),
            input_hash: hash,
            passed: count(&|t| t.verdict == Some(true)),
            failed: count(&|t| t.failed()),
            errored: count(&|t| t.errored()),
            informational: count(&|t| t.verdict.is_none() && !t.errored()),
            tasks,
        }
    }

    /// The reference campaign: every machine-checkable claim at desk scale.
    pub fn reference() -> Campaign {
        use RootSystemType::*;
        let brute = |stmt, ty, ring: &str, i, j| Task::Bruteforce {
            stmt,
            ty,
            ring: ring.into(),
            ideal_i: i,
            ideal_j: j,
            bound: None,
            candidate_bound: None,
        };
        let levi = |ty, ring: &str, i, j| Task::VerifyLevi { ty, ring: ring.into(), ideal_i: i, ideal_j: j, samples: 1000 };
        Campaign {
            seed: default_seed(),
            output: None,
            tasks: vec![
                Task::VerifySteinberg { ty: None },
                Task::VerifyChevalley { ty: None },
                Task::VerifyMainLemma { case: None, ring: None, ideal_i: None, ideal_j: None, all_roots: true },
                Task::VerifyMainLemma {
                    case: None,
                    ring: Some("Z/9".into()),
                    ideal_i: Some(3),
                    ideal_j: Some(3),
                    all_roots: false,
                },
                Task::VerifyMainLemma {
                    case: Some(MainLemmaCase::G2Short),
                    ring: Some("Z/9".into()),
                    ideal_i: Some(3),
                    ideal_j: Some(3),
                    all_roots: true,
                },
                Task::VerifyMainLemma {
                    case: Some(MainLemmaCase::G2Short),
                    ring: Some("Z/9".into()),
                    ideal_i: Some(3),
                    ideal_j: Some(1),
                    all_roots: true,
                },
                Task::VerifyLongRoot { ty: Some(C2), ring: None, ideal: None },
                Task::VerifyLongRoot { ty: Some(G2), ring: Some("Z/9".into()), ideal: Some(3) },
                Task::VerifyLongRoot { ty: Some(G2), ring: Some("Z/27".into()), ideal: Some(3) },
                brute(Statement::T1, A2, "Z/8", 2, 2),
                brute(Statement::T1, A2, "Z/8", 2, 4),
                brute(Statement::T2, A2, "Z/8", 2, 2),
                brute(Statement::T3, A2, "Z/8", 2, 2),
                brute(Statement::O1, A2, "Z/8", 2, 2),
                brute(Statement::O2, A2, "Z/8", 2, 2),
                brute(Statement::T1, C2, "Z/27", 3, 3),
                brute(Statement::T1, C2, "Z/9", 3, 3),
                brute(Statement::T2, C2, "Z/9", 3, 3),
                brute(Statement::T1, G2, "Z/9", 3, 3),
                levi(A2, "Z/8", 2, 2),
                levi(C2, "Z/27", 3, 3),
                levi(G2, "Z/27", 3, 3),
            ],
        }
    }
}

//! Seeded stress runs: generate, label, verify and, for small trees,
//! cross-check with the exhaustive oracle.

use std::collections::BTreeMap;
use std::fmt;

use antimagic_core::oracle::{search_antimagic, OracleOutcome, DEFAULT_BUDGET};
use antimagic_core::{
    find_even_path, generate, is_antimagic, label_with, residue_audit, AntimagicVerdict, CaseTag,
    GenSpec, LabelOptions,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct StressConfig {
    pub trials: usize,
    pub p_min: usize,
    pub p_max: usize,
    /// Largest extra edge budget a trial may draw.
    pub budget_max: usize,
    pub seed: u64,
    /// Trees with at most this many edges are also solved by the oracle.
    pub oracle_max_m: usize,
}

impl Default for StressConfig {
    fn default() -> Self {
        StressConfig {
            trials: 1000,
            p_min: 1,
            p_max: 10,
            budget_max: 1000,
            seed: 0,
            oracle_max_m: 12,
        }
    }
}

impl StressConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.p_min == 0 || self.p_min > self.p_max {
            return Err(CliError::Usage(format!(
                "invalid p range [{}, {}]",
                self.p_min, self.p_max
            )));
        }
        if self.budget_max < MIN_TRIAL_BUDGET {
            return Err(CliError::Usage(format!(
                "budget-max must be at least {MIN_TRIAL_BUDGET}"
            )));
        }
        Ok(())
    }
}

/// Every case is feasible with this many extra edges.
const MIN_TRIAL_BUDGET: usize = 6;

/// What one trial will generate.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialPlan {
    pub index: usize,
    pub target: CaseTag,
    pub spec: GenSpec,
}

impl TrialPlan {
    pub fn reproducer(&self) -> String {
        format!(
            "antimagic gen --p {} --budget {} --seed {} --bias {} | antimagic label -",
            self.spec.p, self.spec.extra_budget, self.spec.seed, self.spec.leaf_endpoint_bias
        )
    }
}

/// Draws trial parameters sequentially from the master seed. Trial `i`
/// targets case `i mod 4` so every case is exercised evenly when the p range
/// allows it.
pub fn plan_trials(cfg: &StressConfig) -> Vec<TrialPlan> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.trials)
        .map(|index| {
            let target = CaseTag::ALL[index % 4];
            let candidates: Vec<usize> = (cfg.p_min..=cfg.p_max)
                .filter(|&p| match target {
                    CaseTag::P1 => p == 1,
                    CaseTag::LeafEndpoint => p >= 2,
                    CaseTag::SwapOnly => p >= 3 && p % 2 == 1,
                    CaseTag::SwapAndExtend => p >= 2 && p % 2 == 0,
                })
                .collect();
            let (p, bias) = if candidates.is_empty() {
                (rng.random_range(cfg.p_min..=cfg.p_max), 0.5)
            } else {
                let p = candidates[rng.random_range(0..candidates.len())];
                let bias = match target {
                    CaseTag::P1 => 0.5,
                    CaseTag::LeafEndpoint => 1.0,
                    CaseTag::SwapOnly | CaseTag::SwapAndExtend => 0.0,
                };
                (p, bias)
            };
            // Half the trials stay small enough for the oracle.
            let cap = if rng.random_bool(0.5) {
                cfg.budget_max.min(12)
            } else {
                cfg.budget_max
            };
            let budget = 2 * rng.random_range(MIN_TRIAL_BUDGET / 2..=cap / 2);
            let seed = rng.random::<u64>();
            TrialPlan {
                index,
                target,
                spec: GenSpec::new(p, budget, seed).with_bias(bias),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub case: Option<CaseTag>,
    pub oracle: OracleCheck,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleCheck {
    Skipped,
    Agreed,
    Inconclusive,
}

pub fn run_trial(plan: &TrialPlan, oracle_max_m: usize) -> TrialOutcome {
    let fail = |case, msg: String| TrialOutcome {
        case,
        oracle: OracleCheck::Skipped,
        failure: Some(msg),
    };
    let tree = match generate(&plan.spec) {
        Ok(t) => t,
        Err(e) => return fail(None, format!("generate: {e}")),
    };
    if find_even_path(&tree).p() != Some(plan.spec.p) {
        return fail(
            None,
            format!("generated tree is not an even path of p={}", plan.spec.p),
        );
    }
    let construction = match label_with(
        &tree,
        LabelOptions {
            check_invariants: false,
        },
    ) {
        Ok(c) => c,
        Err(e) => return fail(None, format!("label: {e}")),
    };
    let case = Some(construction.decomposition.case_tag);
    match is_antimagic(&tree, &construction.labeling) {
        AntimagicVerdict::Antimagic => {}
        verdict => return fail(case, format!("verify: {verdict:?}")),
    }
    let audit = residue_audit(
        &tree,
        &construction.decomposition,
        &construction.labeling,
        construction.ell(),
    );
    if let Some(dev) = audit.deviations.first() {
        return fail(case, format!("residue audit: {dev}"));
    }
    let oracle = if tree.edge_count() <= oracle_max_m {
        match search_antimagic(&tree, DEFAULT_BUDGET).outcome {
            OracleOutcome::Found { .. } => OracleCheck::Agreed,
            OracleOutcome::Timeout { .. } => OracleCheck::Inconclusive,
            OracleOutcome::NoneExists => {
                return fail(case, "oracle reports no antimagic labeling exists".into())
            }
        }
    } else {
        OracleCheck::Skipped
    };
    TrialOutcome {
        case,
        oracle,
        failure: None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StressFailure {
    pub plan: TrialPlan,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StressSummary {
    pub config: StressConfig,
    pub per_case: BTreeMap<CaseTag, usize>,
    pub oracle_agreed: usize,
    pub oracle_inconclusive: usize,
    pub failures: Vec<StressFailure>,
}

impl StressSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for StressSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "stress: trials={} seed={} p=[{},{}] budget<={}",
            c.trials, c.seed, c.p_min, c.p_max, c.budget_max
        )?;
        for tag in CaseTag::ALL {
            writeln!(
                f,
                "case {}: {}",
                tag,
                self.per_case.get(&tag).copied().unwrap_or(0)
            )?;
        }
        writeln!(
            f,
            "oracle cross-checks: {} (inconclusive: {})",
            self.oracle_agreed, self.oracle_inconclusive
        )?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for failure in &self.failures {
            writeln!(
                f,
                "failure trial={} reason={} reproduce: {}",
                failure.plan.index,
                failure.reason,
                failure.plan.reproducer()
            )?;
        }
        Ok(())
    }
}

/// Runs all trials in parallel; results are reported in trial order.
pub fn run_stress(cfg: &StressConfig) -> StressSummary {
    let plans = plan_trials(cfg);
    let outcomes: Vec<TrialOutcome> = plans
        .par_iter()
        .map(|plan| run_trial(plan, cfg.oracle_max_m))
        .collect();

    let mut summary = StressSummary {
        config: cfg.clone(),
        per_case: BTreeMap::new(),
        oracle_agreed: 0,
        oracle_inconclusive: 0,
        failures: Vec::new(),
    };
    for (plan, outcome) in plans.into_iter().zip(outcomes) {
        if let Some(case) = outcome.case {
            *summary.per_case.entry(case).or_default() += 1;
        }
        match outcome.oracle {
            OracleCheck::Agreed => summary.oracle_agreed += 1,
            OracleCheck::Inconclusive => summary.oracle_inconclusive += 1,
            OracleCheck::Skipped => {}
        }
        if let Some(reason) = outcome.failure {
            summary.failures.push(StressFailure { plan, reason });
        }
    }
    summary
}

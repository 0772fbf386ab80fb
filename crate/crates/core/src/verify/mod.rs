//! Empirical checks of the structural statements on generated corpora.

mod campaign;
mod generate;
mod theorems;

pub use campaign::{
    run_campaign, trial_graph, Corpus, SkippedTrial, TrialConfig, VerificationReport,
};
pub use generate::{
    gen_random_chordal, gen_random_graph, graph_from_mask, labelled_graph_count, splitmix64,
    trial_seed,
};
pub use theorems::{
    check_theorem, CheckLimits, Counterexample, Theorem, TrialVerdict, VacuousReason,
    DEFAULT_BUDGET, ENUMERATE_CAP,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("probability range [{p_min}, {p_max}] is empty")]
    ProbabilityRange { p_min: f64, p_max: f64 },
    #[error("campaign has no trials")]
    NoTrials,
    #[error("vertex range [{n_min}, {n_max}] is empty")]
    NRange { n_min: usize, n_max: usize },
    #[error("n = {n_max} exceeds verification budget {budget}")]
    OverBudget { n_max: usize, budget: usize },
    #[error("exhaustive enumeration up to n = {0} is too large")]
    ExhaustiveTooLarge(usize),
    #[error("unknown theorem `{0}` (see `effdom verify-theorems --help`)")]
    UnknownTheorem(String),
}

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::graph::Graph;

use super::generate::{
    graph_from_mask, labelled_graph_count, random_graph_with, rng_from, trial_seed,
};
use super::theorems::{
    check_theorem, CheckLimits, Counterexample, Theorem, TrialVerdict, VacuousReason,
};
use super::VerifyError;

/// Where trial graphs come from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Corpus {
    /// Every labelled graph on `0..=n_max` vertices.
    Exhaustive { n_max: usize },
    /// `count` trials. Each draws up to `attempts` graphs with `n` uniform
    /// in `n_min..=n_max` and `p` uniform in `p_min..=p_max`. The first
    /// informative graph is kept; failing that, the first one satisfying the
    /// hypothesis; failing that, the last one drawn.
    Random {
        count: u64,
        n_min: usize,
        n_max: usize,
        p_min: f64,
        p_max: f64,
        attempts: u32,
    },
}

impl Corpus {
    /// Random corpus with the default p sweep and rejection budget.
    pub fn random(count: u64, n_min: usize, n_max: usize) -> Self {
        Corpus::Random {
            count,
            n_min,
            n_max,
            p_min: 0.05,
            p_max: 0.6,
            attempts: 64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialConfig {
    pub theorem: Theorem,
    pub corpus: Corpus,
    pub seed: u64,
    pub limits: CheckLimits,
}

impl TrialConfig {
    pub fn new(theorem: Theorem, corpus: Corpus, seed: u64) -> Self {
        Self {
            theorem,
            corpus,
            seed,
            limits: CheckLimits::default(),
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let budget = self.limits.budget;
        match self.corpus {
            Corpus::Exhaustive { n_max } => {
                if n_max > budget {
                    return Err(VerifyError::OverBudget { n_max, budget });
                }
                if labelled_graph_count(n_max).is_none() {
                    return Err(VerifyError::ExhaustiveTooLarge(n_max));
                }
            }
            Corpus::Random {
                count,
                n_min,
                n_max,
                p_min,
                p_max,
                attempts,
            } => {
                if count == 0 || attempts == 0 {
                    return Err(VerifyError::NoTrials);
                }
                if n_min > n_max {
                    return Err(VerifyError::NRange { n_min, n_max });
                }
                if n_max > budget {
                    return Err(VerifyError::OverBudget { n_max, budget });
                }
                for p in [p_min, p_max] {
                    if !(0.0..=1.0).contains(&p) {
                        return Err(VerifyError::Probability(p));
                    }
                }
                if p_min > p_max {
                    return Err(VerifyError::ProbabilityRange { p_min, p_max });
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedTrial {
    pub trial: u64,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub statement: &'static str,
    pub corpus: Corpus,
    pub seed: u64,
    pub trials: u64,
    /// Hypothesis satisfied and conclusion true.
    pub held: u64,
    /// Subset of `held` where the conclusion could have failed.
    pub informative: u64,
    pub vacuous_not_in_class: u64,
    pub vacuous_no_ed: u64,
    pub skipped: Vec<SkippedTrial>,
    pub counterexamples: Vec<Counterexample>,
    /// Counterexamples whose independent re-check failed; a nonzero value
    /// points at a checker bug rather than a disproof.
    pub unconfirmed: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    /// Trials whose hypothesis held, whatever the outcome.
    pub fn non_vacuous(&self) -> u64 {
        self.held + self.counterexamples.len() as u64 + self.unconfirmed
    }

    pub fn vacuous(&self) -> u64 {
        self.vacuous_not_in_class + self.vacuous_no_ed
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "theorem {}: {}", self.theorem, self.statement);
        let corpus = match self.corpus {
            Corpus::Exhaustive { n_max } => format!("exhaustive n <= {n_max}"),
            Corpus::Random {
                count,
                n_min,
                n_max,
                p_min,
                p_max,
                attempts,
            } => format!("random {count} trials, n in [{n_min},{n_max}], p in [{p_min},{p_max}], {attempts} attempts"),
        };
        let _ = writeln!(s, "corpus: {corpus}");
        let _ = writeln!(s, "seed: {}", self.seed);
        let _ = writeln!(s, "trials: {}", self.trials);
        let _ = writeln!(s, "held: {} ({} informative)", self.held, self.informative);
        let _ = writeln!(
            s,
            "vacuous: {} (not in class {}, no e.d. {})",
            self.vacuous(),
            self.vacuous_not_in_class,
            self.vacuous_no_ed
        );
        let _ = writeln!(s, "skipped: {}", self.skipped.len());
        let _ = writeln!(s, "counterexamples: {}", self.counterexamples.len());
        if self.unconfirmed > 0 {
            let _ = writeln!(s, "unconfirmed counterexamples: {}", self.unconfirmed);
        }
        for cx in &self.counterexamples {
            let _ = writeln!(s, "-- trial {} (n = {}): {}", cx.trial, cx.n, cx.detail);
            let _ = writeln!(s, "   e.d.: {:?}", cx.ed.one_based());
            let _ = writeln!(s, "   witness {}", cx.witness);
            for line in cx.dimacs.lines() {
                let _ = writeln!(s, "   {line}");
            }
        }
        s
    }
}

fn run_trial(config: &TrialConfig, index: u64) -> (Graph, TrialVerdict) {
    match config.corpus {
        Corpus::Exhaustive { .. } => {
            let g = exhaustive_graph(config, index);
            let verdict = check_theorem(&g, config.theorem, &config.limits);
            (g, verdict)
        }
        Corpus::Random {
            n_min,
            n_max,
            p_min,
            p_max,
            attempts,
            ..
        } => {
            let mut rng = rng_from(trial_seed(config.seed, index));
            let mut fallback: Option<(Graph, TrialVerdict)> = None;
            for _ in 0..attempts {
                let n = rng.gen_range(n_min..=n_max);
                let p = if p_max > p_min {
                    rng.gen_range(p_min..=p_max)
                } else {
                    p_min
                };
                let g = random_graph_with(n, p, &mut rng);
                let verdict = check_theorem(&g, config.theorem, &config.limits);
                if matches!(
                    verdict,
                    TrialVerdict::Held { informative: true } | TrialVerdict::Counterexample(_)
                ) {
                    return (g, verdict);
                }
                if fallback
                    .as_ref()
                    .is_none_or(|(_, v)| matches!(v, TrialVerdict::Vacuous(_)))
                {
                    fallback = Some((g, verdict));
                }
            }
            fallback.expect("attempts >= 1")
        }
    }
}

/// Maps a global trial index to a graph, enumerating sizes in increasing
/// order and masks within each size.
fn exhaustive_graph(config: &TrialConfig, mut index: u64) -> Graph {
    let Corpus::Exhaustive { n_max } = config.corpus else {
        unreachable!()
    };
    for n in 0..=n_max {
        let count = labelled_graph_count(n).expect("validated");
        if index < count {
            return graph_from_mask(n, index);
        }
        index -= count;
    }
    unreachable!("trial index beyond corpus")
}

fn trial_count(corpus: &Corpus) -> u64 {
    match *corpus {
        Corpus::Exhaustive { n_max } => (0..=n_max)
            .map(|n| labelled_graph_count(n).expect("validated"))
            .sum(),
        Corpus::Random { count, .. } => count,
    }
}

/// Runs all trials in parallel and aggregates them in trial order, so the
/// report depends only on the config.
pub fn run_campaign(config: &TrialConfig) -> Result<VerificationReport, VerifyError> {
    config.validate()?;
    let start = Instant::now();
    let trials = trial_count(&config.corpus);
    let verdicts: Vec<TrialVerdict> = (0..trials)
        .into_par_iter()
        .map(|i| run_trial(config, i).1)
        .collect();

    let mut report = VerificationReport {
        theorem: config.theorem,
        statement: config.theorem.statement(),
        corpus: config.corpus,
        seed: config.seed,
        trials,
        held: 0,
        informative: 0,
        vacuous_not_in_class: 0,
        vacuous_no_ed: 0,
        skipped: Vec::new(),
        counterexamples: Vec::new(),
        unconfirmed: 0,
        elapsed: Duration::ZERO,
    };
    for (trial, verdict) in (0..trials).zip(verdicts) {
        match verdict {
            TrialVerdict::Held { informative } => {
                report.held += 1;
                report.informative += u64::from(informative);
            }
            TrialVerdict::Vacuous(VacuousReason::NotInClass) => report.vacuous_not_in_class += 1,
            TrialVerdict::Vacuous(VacuousReason::NoEd) => report.vacuous_no_ed += 1,
            TrialVerdict::Skipped(reason) => report.skipped.push(SkippedTrial { trial, reason }),
            TrialVerdict::Counterexample(mut cx) => {
                cx.trial = trial;
                if cx.recheck() {
                    report.counterexamples.push(*cx);
                } else {
                    report.unconfirmed += 1;
                }
            }
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// The graph used by trial `index`, for replaying a single trial.
pub fn trial_graph(config: &TrialConfig, index: u64) -> Result<Graph, VerifyError> {
    config.validate()?;
    if index >= trial_count(&config.corpus) {
        return Err(VerifyError::NoTrials);
    }
    Ok(run_trial(config, index).0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_t1_small() {
        let cfg = TrialConfig::new(Theorem::ChordalSquare, Corpus::Exhaustive { n_max: 4 }, 0);
        let r = run_campaign(&cfg).unwrap();
        // 1 + 1 + 2 + 8 + 64 labelled graphs
        assert_eq!(r.trials, 76);
        assert!(r.is_clean());
        assert_eq!(r.held + r.vacuous() + r.skipped.len() as u64, r.trials);
        assert!(r.held > 0 && r.vacuous_no_ed > 0);
    }

    #[test]
    fn exhaustive_indexing_covers_sizes() {
        let cfg = TrialConfig::new(Theorem::ChordalSquare, Corpus::Exhaustive { n_max: 3 }, 0);
        let sizes: Vec<usize> = (0..12).map(|i| trial_graph(&cfg, i).unwrap().n()).collect();
        assert_eq!(sizes, [0, 1, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]);
        assert!(trial_graph(&cfg, 12).is_err());
    }

    #[test]
    fn invalid_configs() {
        let mut cfg = TrialConfig::new(Theorem::HoleFreeSquare, Corpus::random(0, 7, 10), 1);
        assert_eq!(cfg.validate(), Err(VerifyError::NoTrials));
        cfg.corpus = Corpus::random(5, 10, 7);
        assert!(matches!(cfg.validate(), Err(VerifyError::NRange { .. })));
        cfg.corpus = Corpus::random(5, 7, 40);
        assert!(matches!(
            cfg.validate(),
            Err(VerifyError::OverBudget { .. })
        ));
        cfg.corpus = Corpus::Exhaustive { n_max: 12 };
        assert!(matches!(
            cfg.validate(),
            Err(VerifyError::ExhaustiveTooLarge(12))
        ));
    }

    #[test]
    fn random_campaign_is_deterministic() {
        let cfg = TrialConfig::new(Theorem::HoleFreeSquare, Corpus::random(60, 7, 10), 99);
        let a = run_campaign(&cfg).unwrap();
        let b = run_campaign(&cfg).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(), b.to_text());
        assert!(a.is_clean());
        assert!(a.non_vacuous() > 0);
    }

    #[test]
    fn budget_skips_are_reported() {
        let mut cfg = TrialConfig::new(Theorem::AntiholesAvoidEd, Corpus::random(5, 17, 18), 3);
        let r = run_campaign(&cfg).unwrap();
        assert_eq!(r.skipped.len(), 5);
        assert_eq!(r.held, 0);
        cfg.limits.enumerate_cap = 18;
        assert!(run_campaign(&cfg).unwrap().skipped.is_empty());
    }
}

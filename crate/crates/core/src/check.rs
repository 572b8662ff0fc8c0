//! Verification policy: exhaustive scans at desk scale, seeded sampling above.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Law, LawViolation};

pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_SAMPLES: usize = 10_000;

/// Controls when a law check enumerates every tuple and when it samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckPolicy {
    /// Checks costing O(n^3) or less run exhaustively up to this order.
    pub exhaustive_limit: usize,
    /// Raw ternary tables (O(n^5) associativity) run exhaustively up to this order.
    pub ternary_limit: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckPolicy {
    fn default() -> Self {
        CheckPolicy {
            exhaustive_limit: 64,
            ternary_limit: 16,
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

impl CheckPolicy {
    pub fn with_seed(seed: u64, samples: usize) -> Self {
        CheckPolicy {
            seed,
            samples,
            ..CheckPolicy::default()
        }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    pub fn exhaustive(&self, n: usize) -> bool {
        n <= self.exhaustive_limit
    }
}

/// Enumerates every `k`-tuple over `0..n` when `exhaustive`, otherwise draws
/// `samples` uniform tuples. Stops at the first tuple for which `f` returns
/// `false` and returns it.
pub fn find_tuple<const K: usize>(
    n: usize,
    exhaustive: bool,
    policy: &CheckPolicy,
    mut f: impl FnMut([usize; K]) -> bool,
) -> Option<[usize; K]> {
    if n == 0 {
        return None;
    }
    if exhaustive {
        let mut t = [0usize; K];
        loop {
            if !f(t) {
                return Some(t);
            }
            let mut i = K;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                t[i] += 1;
                if t[i] < n {
                    break;
                }
                t[i] = 0;
            }
        }
    } else {
        let mut rng = policy.rng();
        for _ in 0..policy.samples {
            let mut t = [0usize; K];
            for x in t.iter_mut() {
                *x = rng.gen_range(0..n);
            }
            if !f(t) {
                return Some(t);
            }
        }
        None
    }
}

/// Outcome of checking one law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum LawStatus {
    Passed,
    Failed(Vec<usize>),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: Law,
    #[serde(flatten)]
    pub status: LawStatus,
}

/// Law-by-law results for one structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub structure: String,
    pub order: usize,
    /// False when at least one law was checked on sampled tuples only.
    pub exhaustive: bool,
    pub checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn new(structure: impl Into<String>, order: usize, exhaustive: bool) -> Self {
        LawReport {
            structure: structure.into(),
            order,
            exhaustive,
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, law: Law, witness: Option<Vec<usize>>) {
        let status = match witness {
            Some(w) => LawStatus::Failed(w),
            None => LawStatus::Passed,
        };
        self.checks.push(LawCheck { law, status });
    }

    pub fn skip(&mut self, law: Law, reason: impl Into<String>) {
        self.checks.push(LawCheck {
            law,
            status: LawStatus::Skipped(reason.into()),
        });
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<LawViolation> {
        self.checks.iter().find_map(|c| match &c.status {
            LawStatus::Failed(w) => Some(LawViolation::new(c.law, w.clone())),
            _ => None,
        })
    }

    pub fn status(&self, law: Law) -> Option<&LawStatus> {
        self.checks.iter().find(|c| c.law == law).map(|c| &c.status)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_visits_every_tuple() {
        let mut count = 0;
        let r = find_tuple::<3>(4, true, &CheckPolicy::default(), |_| {
            count += 1;
            true
        });
        assert!(r.is_none());
        assert_eq!(count, 64);
    }

    #[test]
    fn reports_first_failure() {
        let r = find_tuple::<2>(5, true, &CheckPolicy::default(), |[a, b]| a + b < 6);
        assert_eq!(r, Some([2, 4]));
    }

    #[test]
    fn sampling_is_seeded() {
        let p = CheckPolicy::with_seed(7, 100);
        let mut a = Vec::new();
        let mut b = Vec::new();
        find_tuple::<2>(50, false, &p, |t| {
            a.push(t);
            true
        });
        find_tuple::<2>(50, false, &p, |t| {
            b.push(t);
            true
        });
        assert_eq!(a, b);
        assert_eq!(a.len(), 100);
    }
}

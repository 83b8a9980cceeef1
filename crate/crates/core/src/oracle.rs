//! Random-evaluation cross-check of symbolic verdicts: every term of an
//! identity is evaluated separately at seeded random rational points and the
//! numeric sum is compared with the symbolic residual.
//!
//! Identity `i` of a batch draws its points from ChaCha stream `i` of the
//! seed, so results do not depend on scheduling.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::{frac, Rational, Var};
use crate::par;
use crate::report::{CheckOutcome, Identity, Report};

pub const DEFAULT_SAMPLES: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub check: String,
    pub location: String,
    pub symbolic_zero: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleSummary {
    pub identities: usize,
    pub disagreements: Vec<Disagreement>,
}

impl OracleSummary {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    seed: u64,
    samples: usize,
}

fn random_point(rng: &mut ChaCha8Rng, vars: &BTreeSet<Var>) -> HashMap<Var, Rational> {
    vars.iter()
        .map(|v| {
            let num = rng.gen_range(-60i64..=60);
            let den = rng.gen_range(1i64..=17);
            (v.clone(), frac(num, den))
        })
        .collect()
}

/// Whether the terms of `id` sum to zero at `samples` points drawn from `rng`.
pub fn numerically_zero(id: &Identity, rng: &mut ChaCha8Rng, samples: usize) -> bool {
    let vars: BTreeSet<Var> = id.terms.iter().flat_map(|t| t.vars()).collect();
    let Some(dim) = id.terms.first().map(|t| t.dim()) else {
        return true;
    };
    for _ in 0..samples {
        let point = random_point(rng, &vars);
        let mut total = vec![Rational::default(); dim];
        for term in &id.terms {
            let values = term.eval(&point).expect("all variables assigned");
            for (acc, v) in total.iter_mut().zip(values) {
                *acc += v;
            }
        }
        if total.iter().any(|x| *x != Rational::default()) {
            return false;
        }
    }
    true
}

impl Oracle {
    pub fn new(seed: u64) -> Self {
        Oracle::with_samples(seed, DEFAULT_SAMPLES)
    }

    pub fn with_samples(seed: u64, samples: usize) -> Self {
        Oracle { seed, samples }
    }

    /// Checks a batch of `(check name, identity)` pairs.
    pub fn check_batch(&self, batch: &[(&str, &Identity)]) -> OracleSummary {
        let indexed: Vec<(usize, &(&str, &Identity))> = batch.iter().enumerate().collect();
        let verdicts = par::map(&indexed, |&(i, (check, id))| {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
            rng.set_stream(i as u64);
            let symbolic_zero = id.holds();
            (numerically_zero(id, &mut rng, self.samples) != symbolic_zero).then(|| Disagreement {
                check: check.to_string(),
                location: id.location.clone(),
                symbolic_zero,
            })
        });
        OracleSummary {
            identities: batch.len(),
            disagreements: verdicts.into_iter().flatten().collect(),
        }
    }

    pub fn check_outcomes<'a>(&self, outcomes: impl IntoIterator<Item = &'a CheckOutcome>) -> OracleSummary {
        let batch: Vec<(&str, &Identity)> = outcomes
            .into_iter()
            .flat_map(|c| c.identities.iter().map(move |id| (c.name.as_str(), id)))
            .collect();
        self.check_batch(&batch)
    }

    pub fn check_report(&self, report: &Report) -> OracleSummary {
        self.check_outcomes(&report.checks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;
    use crate::exactmath::parse_poly;

    fn el(s: &[&str]) -> Element {
        Element::from_coeffs(s.iter().map(|p| parse_poly(p).unwrap()).collect())
    }

    #[test]
    fn agrees_on_cancelling_terms() {
        let id = Identity::new("x", vec![el(&["(l1+d)^2", "0"]), el(&["-l1^2-2*l1*d-d^2", "0"])]);
        let s = Oracle::new(7).check_batch(&[("c", &id)]);
        assert!(id.holds());
        assert!(s.agrees());
    }

    #[test]
    fn detects_nonzero_residual() {
        let id = Identity::new("x", vec![el(&["l1*d"]), el(&["-l1*d + l2/3"])]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(!numerically_zero(&id, &mut rng, 10));
        assert!(Oracle::new(1).check_batch(&[("c", &id)]).agrees());
    }

    #[test]
    fn reproducible() {
        let id = Identity::new("x", vec![el(&["l1 - l2"])]);
        let a = Oracle::with_samples(3, 5).check_batch(&[("c", &id), ("c", &id)]);
        let b = Oracle::with_samples(3, 5).check_batch(&[("c", &id), ("c", &id)]);
        assert_eq!(a, b);
    }
}

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::characterize::{CaseTag, Reason};
use crate::spectra::{AlgebraicEigenvalue, IntPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundViolation {
    pub graph6: String,
    pub class: IntPoly,
    pub multiplicity: usize,
    pub bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceFailure {
    pub graph6: String,
    pub lambda: AlgebraicEigenvalue,
    pub verdict: CaseTag,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Reason>,
    pub multiplicity: usize,
    pub bound: usize,
}

/// A class attaining the bound that is not a product of trig minimal
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaFormFailure {
    pub graph6: String,
    pub class: IntPoly,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaFailure {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<AlgebraicEigenvalue>,
    pub detail: String,
}

impl LemmaFailure {
    pub fn new(graph6: &str, lambda: Option<AlgebraicEigenvalue>, detail: &str) -> Self {
        Self { graph6: graph6.to_owned(), lambda, detail: detail.to_owned() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDisagreement {
    pub lambda: AlgebraicEigenvalue,
    pub polynomial: usize,
    pub nullity: usize,
    pub numeric: usize,
    pub separated: bool,
}

/// Outcome of a verification run. It passed iff every failure list is empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub graphs_checked: usize,
    pub candidate_lambda_checked: usize,
    pub bound_violations: Vec<BoundViolation>,
    pub equivalence_failures: Vec<EquivalenceFailure>,
    pub lambda_form_failures: Vec<LambdaFormFailure>,
    pub lemma_failures: BTreeMap<String, Vec<LemmaFailure>>,
    /// Checks performed per named property.
    pub lemma_checks: BTreeMap<String, usize>,
    /// Instances skipped per reason, e.g. a conditional identity whose
    /// hypothesis is false.
    pub skipped: BTreeMap<String, usize>,
    /// Optimal verdicts per case tag, plus observational tallies such as
    /// candidates whose numeric count sat next to an unrelated eigenvalue.
    pub case_counts: BTreeMap<String, usize>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.bound_violations.is_empty()
            && self.equivalence_failures.is_empty()
            && self.lambda_form_failures.is_empty()
            && self.lemma_failures.values().all(Vec::is_empty)
    }

    pub fn failure_count(&self) -> usize {
        self.bound_violations.len()
            + self.equivalence_failures.len()
            + self.lambda_form_failures.len()
            + self.lemma_failures.values().map(Vec::len).sum::<usize>()
    }

    pub fn checked(&mut self, name: &str) {
        *self.lemma_checks.entry(name.to_owned()).or_default() += 1;
    }

    pub fn skip(&mut self, name: &str) {
        *self.skipped.entry(name.to_owned()).or_default() += 1;
    }

    pub fn count(&mut self, name: &str) {
        *self.case_counts.entry(name.to_owned()).or_default() += 1;
    }

    pub fn fail(&mut self, name: &str, failure: LemmaFailure) {
        self.lemma_failures.entry(name.to_owned()).or_default().push(failure);
    }

    /// Appends `other`; lists keep their order and counters add up, so
    /// merging per-graph parts in input order is deterministic.
    pub fn merge(&mut self, other: VerificationReport) {
        self.graphs_checked += other.graphs_checked;
        self.candidate_lambda_checked += other.candidate_lambda_checked;
        self.bound_violations.extend(other.bound_violations);
        self.equivalence_failures.extend(other.equivalence_failures);
        self.lambda_form_failures.extend(other.lambda_form_failures);
        for (k, v) in other.lemma_failures {
            self.lemma_failures.entry(k).or_default().extend(v);
        }
        for (map, theirs) in [
            (&mut self.lemma_checks, other.lemma_checks),
            (&mut self.skipped, other.skipped),
            (&mut self.case_counts, other.case_counts),
        ] {
            for (k, v) in theirs {
                *map.entry(k).or_default() += v;
            }
        }
        self.elapsed_ms += other.elapsed_ms;
    }

    /// Human-readable summary, one line per counter.
    pub fn summary_table(&self) -> String {
        let mut out = format!(
            "graphs checked        {}\ncandidates checked    {}\nbound violations      {}\nequivalence failures  {}\nλ-form failures       {}\n",
            self.graphs_checked,
            self.candidate_lambda_checked,
            self.bound_violations.len(),
            self.equivalence_failures.len(),
            self.lambda_form_failures.len()
        );
        for (k, n) in &self.lemma_checks {
            let f = self.lemma_failures.get(k).map_or(0, Vec::len);
            out += &format!("{k:<22}{n} checked, {f} failed\n");
        }
        for (k, n) in &self.skipped {
            out += &format!("skipped {k:<14}{n}\n");
        }
        for (k, n) in &self.case_counts {
            out += &format!("optimal {k:<14}{n}\n");
        }
        out += &format!("elapsed               {} ms\n", self.elapsed_ms);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_adds_counters_and_keeps_order() {
        let mut a = VerificationReport { graphs_checked: 1, ..Default::default() };
        a.checked("x");
        a.fail("x", LemmaFailure::new("A", None, "first"));
        let mut b = VerificationReport { graphs_checked: 2, ..Default::default() };
        b.checked("x");
        b.fail("x", LemmaFailure::new("B", None, "second"));
        a.merge(b);
        assert_eq!(a.graphs_checked, 3);
        assert_eq!(a.lemma_checks["x"], 2);
        assert_eq!(a.lemma_failures["x"].iter().map(|f| f.graph6.as_str()).collect::<Vec<_>>(), ["A", "B"]);
        assert!(!a.passed());
        assert!(VerificationReport::default().passed());
    }

    #[test]
    fn json_has_no_floats() {
        let r = VerificationReport { elapsed_ms: 12, ..Default::default() };
        let s = serde_json::to_string(&r).unwrap();
        assert!(!s.contains('.'));
    }
}

use std::fmt::Write as _;
use std::time::Duration;

use crate::algebra::Element;

/// A claimed identity `sum(terms) = 0` at a named location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub location: String,
    pub terms: Vec<Element>,
    residual: Element,
}

impl Identity {
    pub fn new(location: impl Into<String>, terms: Vec<Element>) -> Self {
        assert!(!terms.is_empty(), "identity without terms");
        let residual = crate::algebra::element::sum(terms[0].dim(), &terms);
        Identity {
            location: location.into(),
            terms,
            residual,
        }
    }

    pub fn residual(&self) -> &Element {
        &self.residual
    }

    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

/// A failure that is not a vanishing identity, e.g. a non-invertible map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub location: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    /// Names of the basis in which residuals are expressed.
    pub names: Vec<String>,
    pub identities: Vec<Identity>,
    pub violations: Vec<Violation>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, names: Vec<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            names,
            identities: Vec::new(),
            violations: Vec::new(),
        }
    }

    pub fn push(&mut self, identity: Identity) {
        self.identities.push(identity);
    }

    pub fn violate(&mut self, location: impl Into<String>, message: impl Into<String>) {
        self.violations.push(Violation {
            location: location.into(),
            message: message.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.identities.iter().all(Identity::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Identity> {
        self.identities.iter().filter(|i| !i.holds())
    }

    /// First failing location, identities before violations.
    pub fn first_failure(&self) -> Option<&str> {
        self.failures()
            .map(|i| i.location.as_str())
            .chain(self.violations.iter().map(|v| v.location.as_str()))
            .next()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<CheckOutcome>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            ..Report::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
        self.elapsed += other.elapsed;
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn identities(&self) -> impl Iterator<Item = &Identity> {
        self.checks.iter().flat_map(|c| c.identities.iter())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{}: {status} ({:.3?})", self.subject, self.elapsed);
        for c in &self.checks {
            let mark = if c.passed() { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "  [{mark}] {} ({} identities)", c.name, c.identities.len());
            for id in c.failures() {
                let _ = writeln!(
                    out,
                    "         at {}: residual {}",
                    id.location,
                    id.residual().display_with(&c.names)
                );
            }
            for v in &c.violations {
                let _ = writeln!(out, "         at {}: {}", v.location, v.message);
            }
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Poly;

    #[test]
    fn failing_identity_rendered_with_location() {
        let mut c = CheckOutcome::new("demo", vec!["a".into(), "b".into()]);
        c.push(Identity::new(
            "(a, a)",
            vec![Element::basis(2, 0), Element::basis(2, 0).scale_int(-1)],
        ));
        c.push(Identity::new("(a, b)", vec![Element::monomial(2, 1, Poly::lambda(1))]));
        assert_eq!(c.first_failure(), Some("(a, b)"));
        let mut r = Report::new("subject");
        r.checks.push(c);
        r.note("a note");
        let text = r.render_text();
        assert!(text.starts_with("subject: FAIL"));
        assert!(text.contains("at (a, b): residual"));
        assert!(text.contains("note: a note"));
    }

    #[test]
    fn violations_fail_a_check() {
        let mut c = CheckOutcome::new("demo", vec![]);
        assert!(c.passed());
        c.violate("shape", "wrong");
        assert!(!c.passed());
        assert_eq!(c.first_failure(), Some("shape"));
    }
}

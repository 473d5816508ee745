//! Machine-readable results of verification suites.

use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Probe {
    /// Description of the inputs, e.g. `"[p_1(γ1), p_-1(γ1)] at level 2"`.
    pub probe: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

/// A named suite of exact comparisons. Passes iff every probe is equal.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub probes: Vec<Probe>,
    pub pass: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            probes: Vec::new(),
            pass: true,
            wall_time: Duration::ZERO,
        }
    }

    /// Records `lhs == rhs` under the given probe name.
    pub fn check<T: PartialEq + std::fmt::Display>(&mut self, probe: impl Into<String>, lhs: &T, rhs: &T) -> bool {
        let equal = lhs == rhs;
        self.push(Probe {
            probe: probe.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal,
        });
        equal
    }

    pub fn push(&mut self, p: Probe) {
        self.pass &= p.equal;
        self.probes.push(p);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        for p in other.probes {
            self.push(p);
        }
        self.wall_time += other.wall_time;
    }

    pub fn failures(&self) -> impl Iterator<Item = &Probe> {
        self.probes.iter().filter(|p| !p.equal)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_json() {
        let r = VerificationReport::new("empty");
        assert_eq!(r.to_json(), r#"{"suite":"empty","probes":[],"pass":true}"#);
    }

    #[test]
    fn failing_probe() {
        let mut r = VerificationReport::new("s");
        r.check("a", &1, &1);
        r.check("b", &1, &2);
        assert!(!r.pass);
        assert_eq!(r.failures().count(), 1);
    }
}

//! Pass/fail records for axiom checks.

use serde::Serialize;

/// One checked identity. `witness` names the first offending basis data when
/// the identity fails, or summarizes what was checked when it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub name: String,
    pub holds: bool,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub findings: Vec<Finding>,
}

impl Verification {
    pub fn new() -> Self {
        Verification::default()
    }

    /// Records `Ok(summary)` as a pass and `Err(witness)` as a failure.
    pub fn record(&mut self, name: &str, result: Result<String, String>) {
        let (holds, witness) = match result {
            Ok(w) => (true, w),
            Err(w) => (false, w),
        };
        self.findings.push(Finding { name: name.to_string(), holds, witness });
    }

    pub fn check(&mut self, name: &str, holds: bool, witness: impl Into<String>) {
        self.findings.push(Finding { name: name.to_string(), holds, witness: witness.into() });
    }

    pub fn extend(&mut self, prefix: &str, other: Verification) {
        for mut f in other.findings {
            f.name = format!("{prefix}{}", f.name);
            self.findings.push(f);
        }
    }

    pub fn passed(&self) -> bool {
        self.findings.iter().all(|f| f.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| !f.holds)
    }

    pub fn get(&self, name: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.name == name)
    }

    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|f| f.holds)
    }
}

/// Runs `f` over `0..n` and reports the first index where it returns `false`.
pub(crate) fn first_failure(n: usize, mut f: impl FnMut(usize) -> bool) -> Result<String, String> {
    match (0..n).find(|&i| !f(i)) {
        None => Ok(format!("{n} basis elements")),
        Some(i) => Err(format!("basis element {i}")),
    }
}

/// Like [`first_failure`] over pairs.
pub(crate) fn first_pair_failure(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<String, String> {
    for i in 0..n {
        for j in 0..m {
            if !f(i, j) {
                return Err(format!("basis pair ({i}, {j})"));
            }
        }
    }
    Ok(format!("{} basis pairs", n * m))
}

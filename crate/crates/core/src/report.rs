//! Pass/fail reports for identities checked on basis tuples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::{Matrix, Scalar};

/// The lexicographically first basis tuple at which an identity fails,
/// together with `lhs − rhs` there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Names of the tuple slots, e.g. `["a", "b", "x", "y"]`.
    pub slots: Vec<String>,
    /// Basis indices, one per slot.
    pub tuple: Vec<usize>,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Check { name: name.into(), passed: false, witness: Some(witness) }
    }
}

/// Outcome of a verifier: one entry per identity.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> Self {
        AxiomReport { subject: subject.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `true` if the named check exists and passed.
    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            write!(f, "  {:<24} {}", c.name, if c.passed { "pass" } else { "FAIL" })?;
            if let Some(w) = &c.witness {
                let at: Vec<String> = w.slots.iter().zip(&w.tuple).map(|(s, i)| format!("{s}={i}")).collect();
                let res: Vec<String> = w.residual.iter().map(ToString::to_string).collect();
                write!(f, "  at ({}) residual [{}]", at.join(", "), res.join(", "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// All tuples in `0..dims[0] × 0..dims[1] × …`, lexicographic.
pub fn tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |mut k| {
        let mut t = vec![0; dims.len()];
        for (slot, &d) in dims.iter().enumerate().rev() {
            t[slot] = k % d;
            k /= d;
        }
        t
    })
}

/// Evaluates a vector-valued residual on every tuple and records the first
/// nonzero one.
pub(crate) fn check_vector_identity(
    name: &str,
    slots: &[&str],
    dims: &[usize],
    mut residual: impl FnMut(&[usize]) -> Vec<Scalar>,
) -> Check {
    for t in tuples(dims) {
        let r = residual(&t);
        if r.iter().any(|x| !x.is_zero()) {
            return Check::fail(
                name,
                Witness { slots: slots.iter().map(|s| s.to_string()).collect(), tuple: t, residual: r },
            );
        }
    }
    Check::pass(name)
}

/// Matrix-valued identity on a module: the witness tuple gets one extra
/// trailing slot `u` naming the first module basis vector where the residual
/// operator is nonzero.
pub(crate) fn check_operator_identity(
    name: &str,
    slots: &[&str],
    dims: &[usize],
    mut residual: impl FnMut(&[usize]) -> Matrix,
) -> Check {
    for t in tuples(dims) {
        let r = residual(&t);
        if let Some(u) = (0..r.cols()).find(|&u| (0..r.rows()).any(|i| !r[(i, u)].is_zero())) {
            let mut names: Vec<String> = slots.iter().map(|s| s.to_string()).collect();
            names.push("u".into());
            let mut tuple = t;
            tuple.push(u);
            return Check::fail(name, Witness { slots: names, tuple, residual: r.column(u) });
        }
    }
    Check::pass(name)
}

//! The four subcommands. Each returns a serializable outcome; rendering and
//! exit codes are decided by the caller.

use std::fmt;

use rly_core::cohomology::{CohomologyContext, ComplexKind, ComplexReport};
use rly_core::deformation::verify_deformation;
use rly_core::extension::{build_extension_with, force_build_total};
use rly_core::report::{Check, Witness};
use rly_core::representation::{adjoint_rep, verify_rep, verify_reynolds_rep};
use rly_core::reynolds::verify_reynolds;
use rly_core::{AxiomReport, ExtensionCocycle, LyAlgebra, Representation, ReynoldsOperator, RlyCochain, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::input::{ObjectKind, Workspace};

/// Common surface of all command outcomes.
pub trait Outcome: fmt::Display {
    fn passed(&self) -> bool;
    fn to_json(&self) -> String;
}

macro_rules! json_outcome {
    ($t:ty) => {
        impl Outcome for $t {
            fn passed(&self) -> bool {
                self.passed()
            }
            fn to_json(&self) -> String {
                serde_json::to_string_pretty(self).expect("outcomes serialize")
            }
        }
    };
}

fn all_pass(reports: &[AxiomReport]) -> bool {
    reports.iter().all(AxiomReport::all_passed)
}

fn write_reports(f: &mut fmt::Formatter<'_>, reports: &[AxiomReport]) -> fmt::Result {
    reports.iter().try_for_each(|r| write!(f, "{r}"))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Axiom reports for the algebra, the operator and the representation,
/// whichever are given.
fn setup(a: &LyAlgebra, op: Option<&ReynoldsOperator>, rep: Option<&Representation>) -> CliResult<Vec<AxiomReport>> {
    let mut out = vec![a.verify_axioms()];
    if let Some(r) = op {
        out.push(verify_reynolds(a, r)?);
    }
    if let Some(rep) = rep {
        out.push(verify_rep(a, rep)?);
        if let (Some(r), Some(_)) = (op, rep.module_op()) {
            out.push(verify_reynolds_rep(a, r, rep)?);
        }
    }
    Ok(out)
}

struct Resolved<'w> {
    algebra: &'w LyAlgebra,
    operator: Option<&'w ReynoldsOperator>,
    rep: &'w Representation,
}

fn resolve<'w>(ws: &'w Workspace, algebra: &str, operator: Option<&str>, rep: &str) -> CliResult<Resolved<'w>> {
    let ctx = "command line";
    let a = ws.algebra(algebra)?;
    let operator = match operator {
        Some(name) => Some(&ws.operator_on(ctx, name, algebra)?.op),
        None => None,
    };
    let rep = &ws.representation_on(ctx, rep, algebra)?.rep;
    Ok(Resolved { algebra: a, operator, rep })
}

fn context(r: &Resolved<'_>, kind: ComplexKind) -> CliResult<CohomologyContext> {
    Ok(match (kind, r.operator) {
        (ComplexKind::Ly, None) => CohomologyContext::yamaguti(r.algebra, r.rep)?,
        (_, Some(op)) => CohomologyContext::new(r.algebra, op, r.rep)?,
        (_, None) => {
            return Err(CliError::invalid("command line", format!("the {kind} complex needs an operator")));
        }
    })
}

/// A check that passes when `image` vanishes; otherwise the witness is the
/// first nonzero coordinate and the residual is the whole image.
fn vanishing_check(name: &str, image: Vec<Scalar>) -> Check {
    match image.iter().position(|x| !x.is_zero()) {
        None => Check::pass(name),
        Some(i) => Check::fail(name, Witness { slots: vec!["coordinate".into()], tuple: vec![i], residual: image }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub name: String,
    pub kind: ObjectKind,
    pub reports: Vec<AxiomReport>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        all_pass(&self.reports)
    }
}

impl fmt::Display for VerifyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}: {}", self.kind, self.name, verdict(self.passed()))?;
        write_reports(f, &self.reports)
    }
}

json_outcome!(VerifyOutcome);

/// Runs the verifier matching the kind of the named object.
pub fn verify(ws: &Workspace, name: &str) -> CliResult<VerifyOutcome> {
    let kind = ws.kind_of(name)?;
    let reports = match kind {
        ObjectKind::Algebra => setup(ws.algebra(name)?, None, None)?,
        ObjectKind::Operator => {
            let e = ws.operator(name)?;
            setup(ws.algebra(&e.algebra)?, Some(&e.op), None)?
        }
        ObjectKind::Representation => {
            let e = ws.representation(name)?;
            let op = match &e.operator {
                Some(o) => Some(&ws.operator(o)?.op),
                None => None,
            };
            setup(ws.algebra(&e.algebra)?, op, Some(&e.rep))?
        }
        ObjectKind::Cochain => {
            let e = &ws.cochains[name];
            let r = resolve(ws, &e.algebra, e.operator.as_deref(), &e.representation)?;
            let mut reports = setup(r.algebra, r.operator, Some(r.rep))?;
            if all_pass(&reports) {
                let ctx = context(&r, e.complex)?;
                let image = ctx.differential_matrix(e.complex, e.degree)?.apply(&e.coords);
                let mut report = AxiomReport::new(format!("{} cochain of degree {}", e.complex, e.degree));
                report.push(vanishing_check("cocycle", image));
                reports.push(report);
            }
            reports
        }
        ObjectKind::Deformation => {
            let e = &ws.deformations[name];
            let a = ws.algebra(&e.algebra)?;
            let op = &ws.operator(&e.operator)?.op;
            let mut reports = setup(a, Some(op), None)?;
            if all_pass(&reports) {
                reports.extend(verify_deformation(a, op, &e.deformation)?.orders);
            }
            reports
        }
        ObjectKind::Extension => {
            let e = &ws.extensions[name];
            let r = resolve(ws, &e.algebra, Some(&e.operator), &e.representation)?;
            let mut reports = setup(r.algebra, r.operator, Some(r.rep))?;
            if all_pass(&reports) {
                let op = r.operator.expect("extensions name an operator");
                let ctx = context(&r, ComplexKind::Rly)?;
                let mut cocycle = AxiomReport::new("extension cocycle");
                let coords = e.cocycle.to_cochain()?.coords();
                cocycle.push(vanishing_check("cocycle", ctx.differential_matrix(ComplexKind::Rly, 2)?.apply(&coords)));
                cocycle.push(vanishing_check("cyclic LY3 condition", ctx.cyclic_defect(&coords)?));
                reports.push(cocycle);
                let (total, total_op) = force_build_total(r.algebra, op, r.rep, &e.cocycle)?;
                let mut axioms = total.verify_axioms();
                axioms.subject = "total algebra".into();
                let mut reynolds = verify_reynolds(&total, &total_op)?;
                reynolds.subject = "total operator".into();
                reports.push(axioms);
                reports.push(reynolds);
            }
            reports
        }
    };
    Ok(VerifyOutcome { name: name.to_string(), kind, reports })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStatus {
    pub degree: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyOutcome {
    pub complex: ComplexKind,
    pub setup: Vec<AxiomReport>,
    /// `d^{p+1} d^p = 0`, one entry per `p < max_degree`.
    pub squares_vanish: Vec<DegreeStatus>,
    /// `Φ δ = ∂ Φ` in each degree `p < max_degree`; empty without an operator.
    pub chain_map: Vec<DegreeStatus>,
    /// Absent when the setup fails or some composite does not vanish.
    pub table: Option<ComplexReport>,
}

impl CohomologyOutcome {
    pub fn passed(&self) -> bool {
        all_pass(&self.setup)
            && self.table.is_some()
            && self.squares_vanish.iter().chain(&self.chain_map).all(|s| s.holds)
    }
}

impl fmt::Display for CohomologyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !all_pass(&self.setup) {
            writeln!(f, "input does not verify:")?;
            return write_reports(f, &self.setup);
        }
        if let Some(t) = &self.table {
            write!(f, "{t}")?;
        }
        for s in &self.squares_vanish {
            writeln!(f, "d^{} d^{} = 0: {}", s.degree + 1, s.degree, verdict(s.holds))?;
        }
        for s in &self.chain_map {
            writeln!(f, "chain map in degree {}: {}", s.degree, verdict(s.holds))?;
        }
        Ok(())
    }
}

json_outcome!(CohomologyOutcome);

pub fn cohomology(
    ws: &Workspace,
    algebra: &str,
    operator: Option<&str>,
    rep: &str,
    complex: ComplexKind,
    max_degree: usize,
) -> CliResult<CohomologyOutcome> {
    let r = resolve(ws, algebra, operator, rep)?;
    let setup = setup(r.algebra, r.operator, Some(r.rep))?;
    let mut out = CohomologyOutcome { complex, setup, squares_vanish: Vec::new(), chain_map: Vec::new(), table: None };
    if !all_pass(&out.setup) {
        return Ok(out);
    }
    let ctx = context(&r, complex)?;
    for p in 1..max_degree {
        out.squares_vanish.push(DegreeStatus { degree: p, holds: ctx.square_is_zero(complex, p)? });
        if r.operator.is_some() {
            out.chain_map.push(DegreeStatus { degree: p, holds: ctx.chain_map_commutes(p)? });
        }
    }
    if out.squares_vanish.iter().all(|s| s.holds) {
        out.table = Some(ctx.cohomology_dims(complex, max_degree)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOutcome {
    pub setup: Vec<AxiomReport>,
    /// Second Betti number of the mapping-cone complex.
    pub betti2: Option<usize>,
    /// Dimension of the classes of cocycles that also satisfy the cyclic LY3
    /// condition; these are the classes realized by extensions.
    pub extension_classes: Option<usize>,
    /// One cocycle per basis vector of the extension classes.
    pub representatives: Vec<ExtensionCocycle>,
    /// Each representative was turned into an extension and that extension verified.
    pub all_verified: bool,
}

impl ClassifyOutcome {
    pub fn passed(&self) -> bool {
        all_pass(&self.setup) && self.all_verified && self.extension_classes == Some(self.representatives.len())
    }
}

impl fmt::Display for ClassifyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !all_pass(&self.setup) {
            writeln!(f, "input does not verify:")?;
            return write_reports(f, &self.setup);
        }
        let (Some(b), Some(e)) = (self.betti2, self.extension_classes) else { return Ok(()) };
        writeln!(f, "betti(2) = {b}")?;
        writeln!(f, "extension classes = {e}")?;
        if e < b {
            writeln!(f, "classes breaking the cyclic LY3 condition (no extension) = {}", b - e)?;
        }
        if e == 0 {
            return writeln!(f, "all extensions are equivalent to the semidirect product");
        }
        writeln!(f, "representative cocycles (verified: {}):", if self.all_verified { "yes" } else { "no" })?;
        for (k, c) in self.representatives.iter().enumerate() {
            writeln!(f)?;
            writeln!(f, "[extensions.class_{}]", k + 1)?;
            write!(f, "{}", TomlCocycle(c))?;
        }
        Ok(())
    }
}

json_outcome!(ClassifyOutcome);

/// Renders a cocycle in the input format so it can be pasted into a file.
struct TomlCocycle<'a>(&'a ExtensionCocycle);

impl fmt::Display for TomlCocycle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.0;
        let (n, m) = (c.algebra_dim(), c.module_dim());
        let mut nu = Vec::new();
        let mut psi = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for l in 0..m {
                    let v = c.nu.coeff(i, j, l);
                    if !v.is_zero() {
                        nu.push(format!("[{i}, {j}, {l}, \"{v}\"]"));
                    }
                }
                for k in 0..n {
                    for l in 0..m {
                        let v = c.psi.coeff(i, j, k, l);
                        if !v.is_zero() {
                            psi.push(format!("[{i}, {j}, {k}, {l}, \"{v}\"]"));
                        }
                    }
                }
            }
        }
        let chi: Vec<String> = c
            .chi
            .to_rows()
            .iter()
            .map(|row| format!("[{}]", row.iter().map(|x| format!("\"{x}\"")).collect::<Vec<_>>().join(", ")))
            .collect();
        writeln!(f, "nu = [{}]", nu.join(", "))?;
        writeln!(f, "psi = [{}]", psi.join(", "))?;
        writeln!(f, "chi = [{}]", chi.join(", "))
    }
}

pub fn classify_extensions(ws: &Workspace, algebra: &str, operator: &str, rep: &str) -> CliResult<ClassifyOutcome> {
    let r = resolve(ws, algebra, Some(operator), rep)?;
    let setup = setup(r.algebra, r.operator, Some(r.rep))?;
    let mut out = ClassifyOutcome {
        setup,
        betti2: None,
        extension_classes: None,
        representatives: Vec::new(),
        all_verified: false,
    };
    if !all_pass(&out.setup) {
        return Ok(out);
    }
    let ctx = context(&r, ComplexKind::Rly)?;
    out.betti2 = ctx.cohomology_dims(ComplexKind::Rly, 2)?.betti(2);
    out.extension_classes = Some(ctx.extension_class_count()?);
    let (n, m) = (r.algebra.dim(), r.rep.module_dim());
    out.all_verified = true;
    for v in ctx.extension_class_representatives()? {
        let c = ExtensionCocycle::from_cochain(&RlyCochain::from_coords(n, m, 2, v)?)?;
        out.all_verified &= build_extension_with(&ctx, &c).is_ok();
        out.representatives.push(c);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Infinitesimal {
    pub cocycle: bool,
    /// Needed on top of the cocycle condition for the order-1 coefficient of LY3.
    pub cyclic: bool,
    /// A coboundary infinitesimal can be removed by a formal isomorphism.
    pub coboundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformCheckOutcome {
    pub name: String,
    pub order: usize,
    pub setup: Vec<AxiomReport>,
    /// Entry `k` holds the checks on the coefficient of `t^k`, for `k ≤ order`.
    pub orders: Vec<AxiomReport>,
    pub infinitesimal: Option<Infinitesimal>,
}

impl DeformCheckOutcome {
    pub fn passed(&self) -> bool {
        all_pass(&self.setup) && self.orders.len() == self.order + 1 && all_pass(&self.orders)
    }
}

impl fmt::Display for DeformCheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !all_pass(&self.setup) {
            writeln!(f, "input does not verify:")?;
            return write_reports(f, &self.setup);
        }
        writeln!(f, "deformation {} through order {}: {}", self.name, self.order, verdict(self.passed()))?;
        write_reports(f, &self.orders)?;
        if let Some(i) = &self.infinitesimal {
            writeln!(f, "infinitesimal is a cocycle: {}", if i.cocycle { "yes" } else { "no" })?;
            writeln!(f, "infinitesimal satisfies the cyclic LY3 condition: {}", if i.cyclic { "yes" } else { "no" })?;
            writeln!(f, "infinitesimal is a coboundary: {}", if i.coboundary { "yes" } else { "no" })?;
        }
        Ok(())
    }
}

json_outcome!(DeformCheckOutcome);

/// Checks the named deformation (or the only one loaded) through `t^order`,
/// by default through its full truncation order.
pub fn deform_check(ws: &Workspace, name: Option<&str>, order: Option<usize>) -> CliResult<DeformCheckOutcome> {
    let name = match name {
        Some(n) => n.to_string(),
        None if ws.deformations.len() == 1 => ws.deformations.keys().next().expect("one entry").clone(),
        None => {
            return Err(CliError::invalid(
                "command line",
                format!("{} deformations loaded; choose one with --name", ws.deformations.len()),
            ))
        }
    };
    let e = ws.deformations.get(&name).ok_or_else(|| CliError::not_found("deformation", &name))?;
    let order = order.unwrap_or(e.deformation.order());
    if order > e.deformation.order() {
        return Err(CliError::invalid(
            &format!("deformations.{name}"),
            format!("order {order} requested but the deformation is truncated at order {}", e.deformation.order()),
        ));
    }
    let a = ws.algebra(&e.algebra)?;
    let op = &ws.operator(&e.operator)?.op;
    let setup = setup(a, Some(op), None)?;
    let mut out = DeformCheckOutcome { name, order, setup, orders: Vec::new(), infinitesimal: None };
    if !all_pass(&out.setup) {
        return Ok(out);
    }
    out.orders = verify_deformation(a, op, &e.deformation)?.orders.into_iter().take(order + 1).collect();
    if order >= 1 {
        let ctx = CohomologyContext::new(a, op, &adjoint_rep(a, Some(op)))?;
        let coords = e.deformation.infinitesimal()?.coords();
        out.infinitesimal = Some(Infinitesimal {
            cocycle: ctx.is_cocycle(ComplexKind::Rly, 2, &coords)?,
            cyclic: ctx.cyclic_defect(&coords)?.iter().all(Scalar::is_zero),
            coboundary: ctx.is_coboundary(ComplexKind::Rly, 2, &coords)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests;

//! Representations `(V; ρ, θ)` of Lie-Yamaguti algebras, optionally carrying
//! a module operator `T_V` compatible with a Reynolds operator.
//!
//! The derived map is `D(x, y) = θ(y, x) − θ(x, y) − ρ([x, y]) + ρ(x)ρ(y) − ρ(y)ρ(x)`.
//! The representation identities are
//!
//! ```text
//! rep1  θ([x, y], a)   = θ(x, a)ρ(y) − θ(y, a)ρ(x)
//! rep2  D(a, b)ρ(x)    = ρ(x)D(a, b) + ρ({a, b, x})
//! rep3  θ(x, [a, b])   = ρ(a)θ(x, b) − ρ(b)θ(x, a)
//! rep4  D(a, b)θ(x, y) = θ(x, y)D(a, b) + θ({a, b, x}, y) + θ(x, {a, b, y})
//! rep5  θ(a, {x, y, z}) = θ(y, z)θ(a, x) − θ(x, z)θ(a, y) + D(x, y)θ(a, z)
//! ```
//!
//! and a module operator must satisfy
//!
//! ```text
//! op-rho    ρ(Tx)T_V    = T_V(ρ(Tx) + ρ(x)T_V + λρ(Tx)T_V)
//! op-theta  θ(Tx, Ty)T_V = T_V(θ(Tx, Ty) + θ(Tx, y)T_V + θ(x, Ty)T_V + 2λθ(Tx, Ty)T_V)
//! ```

use serde::{Deserialize, Serialize};

use crate::algebra::LyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::report::{check_operator_identity, AxiomReport};
use crate::reynolds::{require_reynolds, verify_reynolds, ReynoldsOperator};
use crate::tensor::{Bilinear, Trilinear};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representation {
    algebra_dim: usize,
    module_dim: usize,
    rho: Vec<Matrix>,
    /// `theta[i * n + j] = θ(e_i, e_j)`.
    theta: Vec<Matrix>,
    module_op: Option<Matrix>,
}

/// `Σ c_i · mats[i]`, skipping zero coefficients.
pub(crate) fn lincomb(coeffs: &[Scalar], mats: &[Matrix], m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (c, mat) in coeffs.iter().zip(mats) {
        if !c.is_zero() {
            out = &out + &mat.scale(c);
        }
    }
    out
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    a * b
}

impl Representation {
    /// `theta` is indexed by basis pairs in row-major order: `theta[i * n + j] = θ(e_i, e_j)`.
    pub fn new(
        algebra_dim: usize,
        module_dim: usize,
        rho: Vec<Matrix>,
        theta: Vec<Matrix>,
        module_op: Option<Matrix>,
    ) -> Result<Self> {
        if rho.len() != algebra_dim {
            return Err(Error::DimMismatch {
                context: "number of ρ matrices",
                expected: algebra_dim,
                found: rho.len(),
            });
        }
        if theta.len() != algebra_dim * algebra_dim {
            return Err(Error::DimMismatch {
                context: "number of θ matrices",
                expected: algebra_dim * algebra_dim,
                found: theta.len(),
            });
        }
        for mat in rho.iter().chain(&theta).chain(&module_op) {
            if mat.rows() != module_dim || mat.cols() != module_dim {
                return Err(Error::ShapeMismatch(format!(
                    "module matrices must be {module_dim}x{module_dim}, found {}x{}",
                    mat.rows(),
                    mat.cols()
                )));
            }
        }
        Ok(Representation { algebra_dim, module_dim, rho, theta, module_op })
    }

    /// The zero representation on `K^m`, with optional module operator.
    pub fn zero(algebra_dim: usize, module_dim: usize, module_op: Option<Matrix>) -> Result<Self> {
        let z = Matrix::zeros(module_dim, module_dim);
        Representation::new(
            algebra_dim,
            module_dim,
            vec![z.clone(); algebra_dim],
            vec![z; algebra_dim * algebra_dim],
            module_op,
        )
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn theta(&self, i: usize, j: usize) -> &Matrix {
        &self.theta[i * self.algebra_dim + j]
    }

    pub fn rho_matrices(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn theta_matrices(&self) -> &[Matrix] {
        &self.theta
    }

    pub fn module_op(&self) -> Option<&Matrix> {
        self.module_op.as_ref()
    }

    pub fn with_module_op(mut self, op: Option<Matrix>) -> Result<Self> {
        if let Some(m) = &op {
            if m.rows() != self.module_dim || m.cols() != self.module_dim {
                return Err(Error::ShapeMismatch("module operator has the wrong size".into()));
            }
        }
        self.module_op = op;
        Ok(self)
    }

    pub(crate) fn require_module_op(&self) -> Result<&Matrix> {
        self.module_op.as_ref().ok_or(Error::MissingModuleOp)
    }

    /// `ρ(x)` for an arbitrary element.
    pub fn rho_of(&self, x: &[Scalar]) -> Matrix {
        lincomb(x, &self.rho, self.module_dim)
    }

    /// `θ(x, y)` for arbitrary elements.
    pub fn theta_of(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let n = self.algebra_dim;
        let mut out = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    out = &out + &self.theta[i * n + j].scale(&(xi * yj));
                }
            }
        }
        out
    }

    fn check_algebra(&self, a: &LyAlgebra) -> Result<()> {
        if a.dim() != self.algebra_dim {
            return Err(Error::DimMismatch {
                context: "representation algebra",
                expected: a.dim(),
                found: self.algebra_dim,
            });
        }
        Ok(())
    }

    /// The same representation in the basis of `V` given by the columns of `q`.
    pub fn conjugate(&self, q: &Matrix) -> Result<Representation> {
        if !q.is_square() || q.rows() != self.module_dim {
            return Err(Error::DimMismatch {
                context: "module change of basis",
                expected: self.module_dim,
                found: q.rows(),
            });
        }
        let inv = q.inverse().ok_or(Error::SingularMatrix)?;
        let conj = |m: &Matrix| &(&inv * m) * q;
        Representation::new(
            self.algebra_dim,
            self.module_dim,
            self.rho.iter().map(conj).collect(),
            self.theta.iter().map(conj).collect(),
            self.module_op.as_ref().map(conj),
        )
    }
}

/// All `D(e_i, e_j)`, row-major.
pub(crate) fn d_matrices(a: &LyAlgebra, rep: &Representation) -> Vec<Matrix> {
    let n = a.dim();
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let rho_br = rep.rho_of(a.binary().get(i, j));
            let comm = &mul(&rep.rho[i], &rep.rho[j]) - &mul(&rep.rho[j], &rep.rho[i]);
            out.push(&(&(rep.theta(j, i) - rep.theta(i, j)) - &rho_br) + &comm);
        }
    }
    out
}

/// `D(e_i, e_j)`.
pub fn d_map(a: &LyAlgebra, rep: &Representation, i: usize, j: usize) -> Result<Matrix> {
    rep.check_algebra(a)?;
    let n = a.dim();
    for idx in [i, j] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, dim: n });
        }
    }
    let rho_br = rep.rho_of(a.binary().get(i, j));
    let comm = &mul(&rep.rho[i], &rep.rho[j]) - &mul(&rep.rho[j], &rep.rho[i]);
    Ok(&(&(rep.theta(j, i) - rep.theta(i, j)) - &rho_br) + &comm)
}

/// `D(x, y)` from precomputed basis values.
pub(crate) fn d_of(ds: &[Matrix], x: &[Scalar], y: &[Scalar], m: usize) -> Matrix {
    let n = x.len();
    let mut out = Matrix::zeros(m, m);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                out = &out + &ds[i * n + j].scale(&(xi * yj));
            }
        }
    }
    out
}

/// Checks rep1 through rep5 on basis tuples, together with the two
/// identities for `D` they imply (`rep-D-cyclic`, `rep-D-derivation`).
///
/// The implied identities are only guaranteed when the algebra satisfies its
/// own axioms; a failure of them while everything else passes is reported as
/// [`Error::InternalInconsistency`].
pub fn verify_rep(a: &LyAlgebra, rep: &Representation) -> Result<AxiomReport> {
    rep.check_algebra(a)?;
    let n = a.dim();
    let m = rep.module_dim;
    let ds = d_matrices(a, rep);
    let d = |i: usize, j: usize| &ds[i * n + j];
    let th = |x: &[Scalar], y: &[Scalar]| rep.theta_of(x, y);
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis(i)).collect();
    let mut report = AxiomReport::new("representation");
    report.push(check_operator_identity("rep1", &["x", "y", "a"], &[n; 3], |t| {
        let (x, y, aa) = (t[0], t[1], t[2]);
        let lhs = th(a.binary().get(x, y), &e[aa]);
        let rhs = &mul(rep.theta(x, aa), &rep.rho[y]) - &mul(rep.theta(y, aa), &rep.rho[x]);
        &lhs - &rhs
    }));
    report.push(check_operator_identity("rep2", &["a", "b", "x"], &[n; 3], |t| {
        let (aa, b, x) = (t[0], t[1], t[2]);
        let lhs = mul(d(aa, b), &rep.rho[x]);
        let rhs = &mul(&rep.rho[x], d(aa, b)) + &rep.rho_of(a.ternary().get(aa, b, x));
        &lhs - &rhs
    }));
    report.push(check_operator_identity("rep3", &["x", "a", "b"], &[n; 3], |t| {
        let (x, aa, b) = (t[0], t[1], t[2]);
        let lhs = th(&e[x], a.binary().get(aa, b));
        let rhs = &mul(&rep.rho[aa], rep.theta(x, b)) - &mul(&rep.rho[b], rep.theta(x, aa));
        &lhs - &rhs
    }));
    report.push(check_operator_identity("rep4", &["a", "b", "x", "y"], &[n; 4], |t| {
        let (aa, b, x, y) = (t[0], t[1], t[2], t[3]);
        let lhs = mul(d(aa, b), rep.theta(x, y));
        let rhs = &(&mul(rep.theta(x, y), d(aa, b)) + &th(a.ternary().get(aa, b, x), &e[y]))
            + &th(&e[x], a.ternary().get(aa, b, y));
        &lhs - &rhs
    }));
    report.push(check_operator_identity("rep5", &["a", "x", "y", "z"], &[n; 4], |t| {
        let (aa, x, y, z) = (t[0], t[1], t[2], t[3]);
        let lhs = th(&e[aa], a.ternary().get(x, y, z));
        let rhs = &(&mul(rep.theta(y, z), rep.theta(aa, x)) - &mul(rep.theta(x, z), rep.theta(aa, y)))
            + &mul(d(x, y), rep.theta(aa, z));
        &lhs - &rhs
    }));
    let primary_ok = report.all_passed();
    let mut derived = AxiomReport::new("");
    derived.push(check_operator_identity("rep-D-cyclic", &["x", "y", "z"], &[n; 3], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let s = &d_of(&ds, a.binary().get(x, y), &e[z], m) + &d_of(&ds, a.binary().get(y, z), &e[x], m);
        &s + &d_of(&ds, a.binary().get(z, x), &e[y], m)
    }));
    derived.push(check_operator_identity("rep-D-derivation", &["a", "b", "x", "y"], &[n; 4], |t| {
        let (aa, b, x, y) = (t[0], t[1], t[2], t[3]);
        let lhs = mul(d(aa, b), d(x, y));
        let rhs = &(&mul(d(x, y), d(aa, b)) + &d_of(&ds, a.ternary().get(aa, b, x), &e[y], m))
            + &d_of(&ds, &e[x], a.ternary().get(aa, b, y), m);
        &lhs - &rhs
    }));
    if primary_ok && !derived.all_passed() && a.verify_axioms().all_passed() {
        let name = &derived.failures().next().expect("a derived check failed").name;
        return Err(Error::InternalInconsistency(format!("{name} fails although rep1 to rep5 hold")));
    }
    report.extend(derived);
    Ok(report)
}

/// Checks the module-operator identities `op-rho`, `op-theta` and the
/// identity `op-D` they imply for `D`.
pub fn verify_reynolds_rep(a: &LyAlgebra, r: &ReynoldsOperator, rep: &Representation) -> Result<AxiomReport> {
    rep.check_algebra(a)?;
    let tv = rep.require_module_op()?;
    let n = a.dim();
    let m = rep.module_dim;
    if r.dim() != n {
        return Err(Error::DimMismatch { context: "Reynolds operator", expected: n, found: r.dim() });
    }
    let t = &r.matrix;
    let lambda = &r.weight;
    let two_lambda = lambda + lambda;
    let te: Vec<Vec<Scalar>> = (0..n).map(|i| t.column(i)).collect();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis(i)).collect();
    let ds = d_matrices(a, rep);
    let mut report = AxiomReport::new("Reynolds representation");
    report.push(check_operator_identity("op-rho", &["x"], &[n], |idx| {
        let x = idx[0];
        let rtx = rep.rho_of(&te[x]);
        let lhs = mul(&rtx, tv);
        let inner = &(&rtx + &mul(&rep.rho[x], tv)) + &mul(&rtx, tv).scale(lambda);
        &lhs - &mul(tv, &inner)
    }));
    let pair_identity = |f: &dyn Fn(&[Scalar], &[Scalar]) -> Matrix, x: usize, y: usize| {
        let txy = f(&te[x], &te[y]);
        let lhs = mul(&txy, tv);
        let inner =
            &(&(&txy + &mul(&f(&te[x], &e[y]), tv)) + &mul(&f(&e[x], &te[y]), tv)) + &mul(&txy, tv).scale(&two_lambda);
        &lhs - &mul(tv, &inner)
    };
    let theta_f = |x: &[Scalar], y: &[Scalar]| rep.theta_of(x, y);
    let d_f = |x: &[Scalar], y: &[Scalar]| d_of(&ds, x, y, m);
    report
        .push(check_operator_identity("op-theta", &["x", "y"], &[n, n], |idx| pair_identity(&theta_f, idx[0], idx[1])));
    let derived = check_operator_identity("op-D", &["x", "y"], &[n, n], |idx| pair_identity(&d_f, idx[0], idx[1]));
    if report.all_passed()
        && !derived.passed
        && verify_reynolds(a, r)?.all_passed()
        && verify_rep(a, rep)?.all_passed()
        && a.verify_axioms().all_passed()
    {
        return Err(Error::InternalInconsistency("op-D fails although op-rho and op-theta hold".into()));
    }
    report.push(derived);
    Ok(report)
}

fn require_passed(report: AxiomReport, what: &str) -> Result<()> {
    let failure = report.failures().next().map(|c| c.name.clone());
    match failure {
        None => Ok(()),
        Some(name) => Err(Error::InvalidInput(format!("{what}: {name} fails"))),
    }
}

/// Checks that `rep` is a representation of the Reynolds algebra `(a, r)`.
pub(crate) fn require_reynolds_rep(a: &LyAlgebra, r: &ReynoldsOperator, rep: &Representation) -> Result<()> {
    require_reynolds(a, r)?;
    require_passed(verify_rep(a, rep)?, "not a representation")?;
    require_passed(verify_reynolds_rep(a, r, rep)?, "module operator incompatible")
}

/// The adjoint representation `ρ(x)z = [x, z]`, `θ(x, y)z = {z, x, y}`, with
/// `T_V = T` when an operator is given.
pub fn adjoint_rep(a: &LyAlgebra, r: Option<&ReynoldsOperator>) -> Representation {
    let n = a.dim();
    let rho = (0..n).map(|i| a.ad(i)).collect();
    let mut theta = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            theta.push(Matrix::from_fn(n, n, |row, col| a.ternary().coeff(col, i, j, row).clone()));
        }
    }
    Representation::new(n, n, rho, theta, r.map(|r| r.matrix.clone())).expect("adjoint matrices are n x n")
}

/// The induced representation of the descendant algebra:
///
/// ```text
/// ρ_T(x)    = ρ(Tx) − T_V(λρ(Tx) + ρ(x))
/// θ_T(x, y) = θ(Tx, Ty) − T_V(2λθ(Tx, Ty) + θ(Tx, y) + θ(x, Ty))
/// ```
pub fn induced_rep(a: &LyAlgebra, r: &ReynoldsOperator, rep: &Representation) -> Result<Representation> {
    rep.check_algebra(a)?;
    rep.require_module_op()?;
    require_reynolds_rep(a, r, rep)?;
    Ok(induced_unchecked(a, r, rep))
}

pub(crate) fn induced_unchecked(a: &LyAlgebra, r: &ReynoldsOperator, rep: &Representation) -> Representation {
    let n = a.dim();
    let tv = rep.module_op.as_ref().expect("module operator present");
    let lambda = &r.weight;
    let two_lambda = lambda + lambda;
    let te: Vec<Vec<Scalar>> = (0..n).map(|i| r.matrix.column(i)).collect();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis(i)).collect();
    let rho = (0..n)
        .map(|x| {
            let rtx = rep.rho_of(&te[x]);
            let inner = &rtx.scale(lambda) + &rep.rho[x];
            &rtx - &mul(tv, &inner)
        })
        .collect();
    let mut theta = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let txy = rep.theta_of(&te[x], &te[y]);
            let inner = &(&txy.scale(&two_lambda) + &rep.theta_of(&te[x], &e[y])) + &rep.theta_of(&e[x], &te[y]);
            theta.push(&txy - &mul(tv, &inner));
        }
    }
    Representation::new(n, rep.module_dim, rho, theta, Some(tv.clone())).expect("shapes preserved")
}

/// The semidirect product `L ⋉ V` with operator `T ⊕ T_V`. The basis is
/// that of `L` followed by that of `V`.
///
/// ```text
/// [x + u, y + v]           = [x, y] + ρ(x)v − ρ(y)u
/// {x + u, y + v, z + w}    = {x, y, z} + D(x, y)w − θ(x, z)v + θ(y, z)u
/// ```
pub fn semidirect_product(
    a: &LyAlgebra,
    r: &ReynoldsOperator,
    rep: &Representation,
) -> Result<(LyAlgebra, ReynoldsOperator)> {
    rep.check_algebra(a)?;
    let tv = rep.require_module_op()?;
    require_reynolds_rep(a, r, rep)?;
    let total = semidirect_algebra(a, rep);
    Ok((total, ReynoldsOperator::new(r.matrix.block_diag(tv), r.weight.clone())))
}

pub(crate) fn semidirect_algebra(a: &LyAlgebra, rep: &Representation) -> LyAlgebra {
    let n = a.dim();
    let m = rep.module_dim;
    let ds = d_matrices(a, rep);
    let total = n + m;
    let lift = |v: &[Scalar]| {
        let mut out = v.to_vec();
        out.resize(total, Scalar::zero());
        out
    };
    let in_v = |col: Vec<Scalar>| {
        let mut out = vec![Scalar::zero(); n];
        out.extend(col);
        out
    };
    let neg = |v: Vec<Scalar>| v.into_iter().map(|c| -c).collect::<Vec<_>>();
    let binary = Bilinear::from_fn(total, total, |i, j| match (i < n, j < n) {
        (true, true) => lift(a.binary().get(i, j)),
        (true, false) => in_v(rep.rho[i].column(j - n)),
        (false, true) => in_v(neg(rep.rho[j].column(i - n))),
        (false, false) => vec![Scalar::zero(); total],
    });
    let ternary = Trilinear::from_fn(total, total, |i, j, k| match (i < n, j < n, k < n) {
        (true, true, true) => lift(a.ternary().get(i, j, k)),
        (true, true, false) => in_v(ds[i * n + j].column(k - n)),
        (true, false, true) => in_v(neg(rep.theta(i, k).column(j - n))),
        (false, true, true) => in_v(rep.theta(j, k).column(i - n)),
        _ => vec![Scalar::zero(); total],
    });
    let mut labels = a.labels().to_vec();
    labels.extend((1..=m).map(|i| format!("v{i}")));
    LyAlgebra::new(binary, ternary).and_then(|s| s.with_labels(labels)).expect("semidirect brackets are antisymmetric")
}

/// Block-diagonal direct sum of representations of the same algebra. Module
/// operators must be present on all summands or on none.
pub fn direct_sum_rep(reps: &[Representation]) -> Result<Representation> {
    let first = reps.first().ok_or_else(|| Error::InvalidInput("empty list of representations".into()))?;
    let n = first.algebra_dim;
    if reps.iter().any(|r| r.algebra_dim != n) {
        return Err(Error::MixedAlgebras);
    }
    let with_op = reps.iter().filter(|r| r.module_op.is_some()).count();
    if with_op != 0 && with_op != reps.len() {
        return Err(Error::MixedAlgebras);
    }
    let sum = |pick: &dyn Fn(&Representation) -> Matrix| {
        reps.iter().skip(1).fold(pick(first), |acc, r| acc.block_diag(&pick(r)))
    };
    let m = reps.iter().map(|r| r.module_dim).sum();
    let rho = (0..n).map(|i| sum(&|r: &Representation| r.rho[i].clone())).collect();
    let theta = (0..n * n).map(|k| sum(&|r: &Representation| r.theta[k].clone())).collect();
    let op = (with_op > 0).then(|| sum(&|r: &Representation| r.module_op.clone().expect("checked above")));
    Representation::new(n, m, rho, theta, op)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qi};
    use crate::reynolds::{descendant_algebra, morphism_check};
    use crate::samples;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_int_rows(rows)
    }

    #[test]
    fn d_map_examples() {
        let a = samples::two_dim_example();
        let ad = adjoint_rep(&a, None);
        assert!(d_map(&a, &ad, 0, 0).unwrap().is_zero());
        // D(ε1, ε2)z = {ε1, ε2, z}: ε1 ↦ 0, ε2 ↦ ε1.
        assert_eq!(d_map(&a, &ad, 0, 1).unwrap(), m(&[&[0, 1], &[0, 0]]));
        assert_eq!(d_map(&a, &ad, 1, 0).unwrap(), m(&[&[0, -1], &[0, 0]]));
        let ab = LyAlgebra::abelian(2);
        assert!(d_map(&ab, &Representation::zero(2, 3, None).unwrap(), 0, 1).unwrap().is_zero());
        assert!(matches!(d_map(&a, &ad, 2, 0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn adjoint_entries() {
        let a = samples::two_dim_example();
        let ad = adjoint_rep(&a, None);
        assert_eq!(ad.rho(0), &m(&[&[0, 1], &[0, 0]]));
        assert_eq!(ad.rho(1), &m(&[&[-1, 0], &[0, 0]]));
        // θ(ε2, ε2)ε1 = {ε1, ε2, ε2} = ε1.
        assert_eq!(ad.theta(1, 1).column(0), vec![qi(1), qi(0)]);
        assert!(adjoint_rep(&LyAlgebra::abelian(3), None).rho_of(&[qi(1), qi(2), qi(3)]).is_zero());
    }

    #[test]
    fn verify_rep_examples() {
        for a in [samples::two_dim_example(), samples::sl2(), samples::leibniz_sample()] {
            let r = verify_rep(&a, &adjoint_rep(&a, None)).unwrap();
            assert!(r.all_passed(), "{r}");
            assert!(verify_rep(&a, &Representation::zero(a.dim(), 2, None).unwrap()).unwrap().all_passed());
        }
    }

    #[test]
    fn broken_theta_is_detected() {
        let a = samples::two_dim_example();
        let ad = adjoint_rep(&a, None);
        let mut theta = ad.theta_matrices().to_vec();
        theta[1] = Matrix::zeros(2, 2); // θ(ε1, ε2)
        let broken = Representation::new(2, 2, ad.rho_matrices().to_vec(), theta, None).unwrap();
        let report = verify_rep(&a, &broken).unwrap();
        // rep1 at (x, y, a) = (ε1, ε2, ε2) applied to ε2: lhs θ(ε1, ε2)ε2 = 0,
        // rhs θ(ε1, ε2)ρ(ε2)ε2 − θ(ε2, ε2)ρ(ε1)ε2 = −θ(ε2, ε2)ε1 = −ε1.
        let c = report.get("rep1").unwrap();
        let w = c.witness.as_ref().unwrap();
        assert_eq!(w.tuple, vec![0, 1, 1, 1]);
        assert_eq!(w.residual, vec![qi(1), qi(0)]);
        assert!(!report.passed("rep2"));
    }

    #[test]
    fn reynolds_rep_examples() {
        let a = samples::two_dim_example();
        let r = samples::two_dim_standard_operator();
        let ad = adjoint_rep(&a, Some(&r));
        assert!(verify_reynolds_rep(&a, &r, &ad).unwrap().all_passed());
        let zero = Representation::zero(2, 2, Some(Matrix::zeros(2, 2))).unwrap();
        assert!(verify_reynolds_rep(&a, &r, &zero).unwrap().all_passed());
        let wrong = adjoint_rep(&a, None).with_module_op(Some(Matrix::identity(2))).unwrap();
        let report = verify_reynolds_rep(&a, &r, &wrong).unwrap();
        assert!(!report.passed("op-rho"));
        assert_eq!(verify_reynolds_rep(&a, &r, &adjoint_rep(&a, None)), Err(Error::MissingModuleOp));
    }

    #[test]
    fn induced_rep_examples() {
        let a = samples::two_dim_example();
        let id = ReynoldsOperator::identity(2);
        let ad = adjoint_rep(&a, Some(&id));
        assert_eq!(induced_rep(&a, &id, &ad).unwrap(), ad);

        let r = samples::two_dim_standard_operator();
        let zero = Representation::zero(2, 1, Some(Matrix::zeros(1, 1))).unwrap();
        let ind = induced_rep(&a, &r, &zero).unwrap();
        assert!(ind.rho_of(&[qi(1), qi(1)]).is_zero());

        let ad = adjoint_rep(&a, Some(&r));
        let ind = induced_rep(&a, &r, &ad).unwrap();
        // By hand: ρ(Tε1)ε2 = [2ε1, ε2] = 2ε1, ρ(ε1)ε2 = ε1,
        // ρ_T(ε1)ε2 = 2ε1 − T(−(1/5)·2ε1 + ε1) = 2ε1 − T((3/5)ε1) = 2ε1 − (6/5)ε1 = (4/5)ε1.
        assert_eq!(ind.rho(0).column(1), vec![q(4, 5), qi(0)]);
        let lt = descendant_algebra(&a, &r).unwrap();
        assert!(verify_rep(&lt, &ind).unwrap().all_passed());
        assert!(verify_reynolds_rep(&lt, &r, &ind).unwrap().all_passed());
    }

    #[test]
    fn induced_d_map_formula() {
        // D_T(x, y) = D(Tx, Ty) − T_V(2λD(Tx, Ty) + D(x, Ty) + D(Tx, y)).
        let a = samples::two_dim_example();
        let r = samples::two_dim_standard_operator();
        let ad = adjoint_rep(&a, Some(&r));
        let lt = descendant_algebra(&a, &r).unwrap();
        let ind = induced_rep(&a, &r, &ad).unwrap();
        let ds = d_matrices(&a, &ad);
        let tv = &r.matrix;
        let two_lambda = &r.weight + &r.weight;
        for i in 0..2 {
            for j in 0..2 {
                let (ti, tj) = (r.matrix.column(i), r.matrix.column(j));
                let (ei, ej) = (a.basis(i), a.basis(j));
                let dtt = d_of(&ds, &ti, &tj, 2);
                let inner = &(&dtt.scale(&two_lambda) + &d_of(&ds, &ei, &tj, 2)) + &d_of(&ds, &ti, &ej, 2);
                assert_eq!(d_map(&lt, &ind, i, j).unwrap(), &dtt - &(tv * &inner));
            }
        }
    }

    #[test]
    fn induced_rep_rejects_invalid_input() {
        let a = samples::two_dim_example();
        let r = samples::two_dim_standard_operator();
        let wrong = adjoint_rep(&a, None).with_module_op(Some(Matrix::identity(2))).unwrap();
        assert!(matches!(induced_rep(&a, &r, &wrong), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn semidirect_examples() {
        let a = samples::two_dim_example();
        let r = samples::two_dim_standard_operator();
        let zero = Representation::zero(2, 2, Some(Matrix::zeros(2, 2))).unwrap();
        let (s, _) = semidirect_product(&a, &r, &zero).unwrap();
        assert_eq!(s.binary(), a.direct_sum_abelian(2).binary());
        assert_eq!(s.ternary(), a.direct_sum_abelian(2).ternary());

        let ad = adjoint_rep(&a, Some(&r));
        let (s, sr) = semidirect_product(&a, &r, &ad).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(s.verify_axioms().all_passed());
        assert!(verify_reynolds(&s, &sr).unwrap().all_passed());
        // The projection onto L is a morphism commuting with the operators.
        let p = Matrix::identity(4).submatrix(0, 2, 0, 4);
        assert!(morphism_check(&s, &a, &p).unwrap().all_passed());
        assert_eq!(&p * &sr.matrix, &r.matrix * &p);

        let ab = LyAlgebra::abelian(2);
        let id = ReynoldsOperator::identity(2);
        let (s, _) = semidirect_product(&ab, &id, &adjoint_rep(&ab, Some(&id))).unwrap();
        assert!(s.is_abelian());
    }

    #[test]
    fn direct_sum_examples() {
        let a = samples::two_dim_example();
        let r = samples::two_dim_standard_operator();
        let ad = adjoint_rep(&a, Some(&r));
        assert_eq!(direct_sum_rep(std::slice::from_ref(&ad)).unwrap(), ad);
        let z = Representation::zero(2, 2, Some(Matrix::zeros(2, 2))).unwrap();
        assert_eq!(
            direct_sum_rep(&[z.clone(), z.clone()]).unwrap(),
            Representation::zero(2, 4, Some(Matrix::zeros(4, 4))).unwrap()
        );
        let sum = direct_sum_rep(&[ad, z]).unwrap();
        assert_eq!(sum.module_dim(), 4);
        assert!(verify_reynolds_rep(&a, &r, &sum).unwrap().all_passed());
        assert_eq!(
            direct_sum_rep(&[Representation::zero(2, 1, None).unwrap(), Representation::zero(3, 1, None).unwrap()]),
            Err(Error::MixedAlgebras)
        );
    }

    #[test]
    fn conjugation_preserves_validity() {
        let a = samples::two_dim_example();
        let r = samples::two_dim_standard_operator();
        let ad = adjoint_rep(&a, Some(&r));
        let c = ad.conjugate(&m(&[&[1, 1], &[0, 1]])).unwrap();
        assert!(verify_rep(&a, &c).unwrap().all_passed());
        assert!(verify_reynolds_rep(&a, &r, &c).unwrap().all_passed());
    }
}

//! Reynolds operators of weight λ on Lie-Yamaguti algebras.
//!
//! A linear map `T` is a Reynolds operator of weight `λ` when
//!
//! ```text
//! [Tx, Ty]      = T([Tx, y] + [x, Ty] + λ[Tx, Ty])
//! {Tx, Ty, Tz}  = T({x, Ty, Tz} + {Tx, y, Tz} + {Tx, Ty, z} + 2λ{Tx, Ty, Tz})
//! ```
//!
//! Weight zero recovers the Rota-Baxter identities. Matrices act on
//! coordinate columns: `T e_j = Σ_i m[i][j] e_i`.

use serde::{Deserialize, Serialize};

use crate::algebra::LyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SubspaceBasis};
use crate::report::{check_vector_identity, AxiomReport};
use crate::tensor::{add_into, axpy, vsub, Bilinear, Trilinear};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReynoldsOperator {
    pub matrix: Matrix,
    pub weight: Scalar,
}

impl ReynoldsOperator {
    /// Pairs a matrix with a weight; validity against an algebra is checked
    /// separately by [`verify_reynolds`].
    pub fn new(matrix: Matrix, weight: Scalar) -> Self {
        ReynoldsOperator { matrix, weight }
    }

    /// The identity, a Reynolds operator of weight −1 on every algebra.
    pub fn identity(n: usize) -> Self {
        ReynoldsOperator::new(Matrix::identity(n), -Scalar::one())
    }

    pub fn zero(n: usize, weight: Scalar) -> Self {
        ReynoldsOperator::new(Matrix::zeros(n, n), weight)
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `(c·T, λ/c)`, again a Reynolds operator on the same algebra.
    pub fn scale_weight(&self, c: &Scalar) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(ReynoldsOperator::new(self.matrix.scale(c), &self.weight / c))
    }
}

fn check_square(a: &LyAlgebra, m: &Matrix, context: &'static str) -> Result<()> {
    if !m.is_square() || m.rows() != a.dim() {
        return Err(Error::DimMismatch { context, expected: a.dim(), found: m.rows() });
    }
    Ok(())
}

/// Checks both Reynolds identities on all basis pairs and triples.
pub fn verify_reynolds(a: &LyAlgebra, r: &ReynoldsOperator) -> Result<AxiomReport> {
    check_square(a, &r.matrix, "Reynolds operator")?;
    let n = a.dim();
    let t = &r.matrix;
    let lambda = &r.weight;
    let two_lambda = lambda + lambda;
    let te: Vec<Vec<Scalar>> = (0..n).map(|i| t.column(i)).collect();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis(i)).collect();
    let mut report = AxiomReport::new("Reynolds operator");
    report.push(check_vector_identity("reynolds-binary", &["x", "y"], &[n, n], |idx| {
        let (i, j) = (idx[0], idx[1]);
        let lhs = a.br2(&te[i], &te[j]);
        let mut inner = a.br2(&te[i], &e[j]);
        add_into(&mut inner, &a.br2(&e[i], &te[j]));
        axpy(&mut inner, lambda, &lhs);
        vsub(&lhs, &t.apply(&inner))
    }));
    report.push(check_vector_identity("reynolds-ternary", &["x", "y", "z"], &[n, n, n], |idx| {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        let lhs = a.br3(&te[i], &te[j], &te[k]);
        let mut inner = a.br3(&e[i], &te[j], &te[k]);
        add_into(&mut inner, &a.br3(&te[i], &e[j], &te[k]));
        add_into(&mut inner, &a.br3(&te[i], &te[j], &e[k]));
        axpy(&mut inner, &two_lambda, &lhs);
        vsub(&lhs, &t.apply(&inner))
    }));
    Ok(report)
}

pub(crate) fn require_reynolds(a: &LyAlgebra, r: &ReynoldsOperator) -> Result<()> {
    let report = verify_reynolds(a, r)?;
    let result = match report.failures().next() {
        None => Ok(()),
        Some(c) => Err(Error::InvalidReynolds(format!(
            "{} fails at basis tuple {:?}",
            c.name,
            c.witness.as_ref().map(|w| &w.tuple)
        ))),
    };
    result
}

/// The descendant algebra `L_T`:
///
/// ```text
/// [x, y]_T     = [Tx, y] + [x, Ty] + λ[Tx, Ty]
/// {x, y, z}_T  = {x, Ty, Tz} + {Tx, y, Tz} + {Tx, Ty, z} + 2λ{Tx, Ty, Tz}
/// ```
pub fn descendant_algebra(a: &LyAlgebra, r: &ReynoldsOperator) -> Result<LyAlgebra> {
    require_reynolds(a, r)?;
    Ok(descendant_unchecked(a, r))
}

pub(crate) fn descendant_unchecked(a: &LyAlgebra, r: &ReynoldsOperator) -> LyAlgebra {
    let n = a.dim();
    let t = &r.matrix;
    let lambda = &r.weight;
    let two_lambda = lambda + lambda;
    let te: Vec<Vec<Scalar>> = (0..n).map(|i| t.column(i)).collect();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis(i)).collect();
    let binary = Bilinear::from_fn(n, n, |i, j| {
        let mut v = a.br2(&te[i], &e[j]);
        add_into(&mut v, &a.br2(&e[i], &te[j]));
        axpy(&mut v, lambda, &a.br2(&te[i], &te[j]));
        v
    });
    let ternary = Trilinear::from_fn(n, n, |i, j, k| {
        let mut v = a.br3(&e[i], &te[j], &te[k]);
        add_into(&mut v, &a.br3(&te[i], &e[j], &te[k]));
        add_into(&mut v, &a.br3(&te[i], &te[j], &e[k]));
        axpy(&mut v, &two_lambda, &a.br3(&te[i], &te[j], &te[k]));
        v
    });
    LyAlgebra::new(binary, ternary)
        .and_then(|d| d.with_labels(a.labels().to_vec()))
        .expect("descendant brackets inherit antisymmetry")
}

/// Checks that `m` is a homomorphism `source → target` on basis tuples.
pub fn morphism_check(source: &LyAlgebra, target: &LyAlgebra, m: &Matrix) -> Result<AxiomReport> {
    if m.cols() != source.dim() || m.rows() != target.dim() {
        return Err(Error::ShapeMismatch(format!(
            "morphism matrix is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            target.dim(),
            source.dim()
        )));
    }
    let n = source.dim();
    let me: Vec<Vec<Scalar>> = (0..n).map(|i| m.column(i)).collect();
    let mut report = AxiomReport::new("algebra morphism");
    report.push(check_vector_identity("morphism-binary", &["x", "y"], &[n, n], |t| {
        vsub(&m.apply(source.binary().get(t[0], t[1])), &target.br2(&me[t[0]], &me[t[1]]))
    }));
    report.push(check_vector_identity("morphism-ternary", &["x", "y", "z"], &[n, n, n], |t| {
        vsub(&m.apply(source.ternary().get(t[0], t[1], t[2])), &target.br3(&me[t[0]], &me[t[1]], &me[t[2]]))
    }));
    Ok(report)
}

/// Checks `D[x, y] = [Dx, y] + [x, Dy]` and
/// `D{x, y, z} = {Dx, y, z} + {x, Dy, z} + {x, y, Dz}` on basis tuples.
pub fn derivation_check(a: &LyAlgebra, d: &Matrix) -> Result<AxiomReport> {
    check_square(a, d, "derivation")?;
    let n = a.dim();
    let de: Vec<Vec<Scalar>> = (0..n).map(|i| d.column(i)).collect();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis(i)).collect();
    let mut report = AxiomReport::new("derivation");
    report.push(check_vector_identity("derivation-binary", &["x", "y"], &[n, n], |t| {
        let (i, j) = (t[0], t[1]);
        let mut rhs = a.br2(&de[i], &e[j]);
        add_into(&mut rhs, &a.br2(&e[i], &de[j]));
        vsub(&d.apply(a.binary().get(i, j)), &rhs)
    }));
    report.push(check_vector_identity("derivation-ternary", &["x", "y", "z"], &[n, n, n], |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let mut rhs = a.br3(&de[i], &e[j], &e[k]);
        add_into(&mut rhs, &a.br3(&e[i], &de[j], &e[k]));
        add_into(&mut rhs, &a.br3(&e[i], &e[j], &de[k]));
        vsub(&d.apply(a.ternary().get(i, j, k)), &rhs)
    }));
    Ok(report)
}

/// A basis of the derivations of `a`, each flattened row-major into a
/// vector of length `n²`.
pub fn derivation_basis(a: &LyAlgebra) -> SubspaceBasis {
    let n = a.dim();
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| a.basis(i)).collect();
    // Column `p·n + q` holds all residuals of the derivation identities for
    // the elementary matrix with a single one at `(p, q)`.
    let columns: Vec<Vec<Scalar>> = (0..n * n)
        .map(|idx| {
            let d = Matrix::from_fn(n, n, |r, c| if r * n + c == idx { Scalar::one() } else { Scalar::zero() });
            let de: Vec<Vec<Scalar>> = (0..n).map(|i| d.column(i)).collect();
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let mut rhs = a.br2(&de[i], &e[j]);
                    add_into(&mut rhs, &a.br2(&e[i], &de[j]));
                    out.extend(vsub(&d.apply(a.binary().get(i, j)), &rhs));
                    for k in 0..n {
                        let mut rhs = a.br3(&de[i], &e[j], &e[k]);
                        add_into(&mut rhs, &a.br3(&e[i], &de[j], &e[k]));
                        add_into(&mut rhs, &a.br3(&e[i], &e[j], &de[k]));
                        out.extend(vsub(&d.apply(a.ternary().get(i, j, k)), &rhs));
                    }
                }
            }
            out
        })
        .collect();
    let rows = n * n * n * (n + 1);
    Matrix::from_columns(rows, &columns).kernel_basis()
}

/// For a derivation `D`, `(D − λ·Id)⁻¹` is a Reynolds operator of weight `λ`.
pub fn reynolds_from_derivation(a: &LyAlgebra, d: &Matrix, weight: &Scalar) -> Result<ReynoldsOperator> {
    let report = derivation_check(a, d)?;
    if let Some(c) = report.failures().next() {
        return Err(Error::NotDerivation(format!(
            "{} fails at basis tuple {:?}",
            c.name,
            c.witness.as_ref().map(|w| &w.tuple)
        )));
    }
    let shifted = d - &Matrix::identity(a.dim()).scale(weight);
    let inverse = shifted.inverse().ok_or(Error::SingularMatrix)?;
    Ok(ReynoldsOperator::new(inverse, weight.clone()))
}

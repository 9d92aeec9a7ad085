//! Abelian extensions `0 → V → L̂ → L → 0` of Reynolds Lie-Yamaguti algebras.
//!
//! In block form `L̂ = L ⊕ V` with the cocycle `((ν, ψ), χ)` the structure is
//!
//! ```text
//! [x + u, y + v]        = [x, y] + ν(x, y) + ρ(x)v − ρ(y)u
//! {x + u, y + v, z + w} = {x, y, z} + ψ(x, y, z) + D(x, y)w − θ(x, z)v + θ(y, z)u
//! T̂(x + u)             = Tx + χ(x) + T_V u
//! ```
//!
//! and, for a section `s`, the cocycle is recovered as
//! `ν(x, y) = [sx, sy] − s[x, y]`, `ψ(x, y, z) = {sx, sy, sz} − s{x, y, z}`,
//! `χ(x) = T̂sx − sTx`.
//!
//! A cochain builds an extension exactly when it is a cocycle of the
//! mapping cone and also satisfies the cyclic LY3 condition described in
//! [`crate::cohomology`].

use serde::{Deserialize, Serialize};

use crate::algebra::LyAlgebra;
use crate::cohomology::{Cochain, CohomologyContext, ComplexKind, RlyCochain};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::representation::{semidirect_algebra, Representation};
use crate::reynolds::{morphism_check, verify_reynolds, ReynoldsOperator};
use crate::tensor::{add_into, is_zero_vec, unit, vsub, Bilinear, Trilinear};

/// The data `((ν, ψ), χ)` of a degree-2 cochain of the mapping-cone complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionCocycle {
    pub nu: Bilinear,
    pub psi: Trilinear,
    /// `m × n`, column `j` is `χ(e_j)`.
    pub chi: Matrix,
}

impl ExtensionCocycle {
    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        ExtensionCocycle {
            nu: Bilinear::zeros(algebra_dim, module_dim),
            psi: Trilinear::zeros(algebra_dim, module_dim),
            chi: Matrix::zeros(module_dim, algebra_dim),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.nu.in_dim()
    }

    pub fn module_dim(&self) -> usize {
        self.nu.out_dim()
    }

    pub fn to_cochain(&self) -> Result<RlyCochain> {
        RlyCochain::new(Cochain::from_maps(&self.nu, &self.psi)?, Some(Cochain::from_linear_map(&self.chi)))
    }

    pub fn from_cochain(c: &RlyCochain) -> Result<Self> {
        if c.degree() != 2 {
            return Err(Error::ShapeMismatch(format!("extension cocycles have degree 2, found {}", c.degree())));
        }
        let (nu, psi) = c.top.maps()?;
        let chi = c.tail.as_ref().expect("degree-2 cochains carry a tail").linear_map()?;
        Ok(ExtensionCocycle { nu, psi, chi })
    }
}

/// A linear map `s : L → L̂` with `p ∘ s = Id`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub map: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianExtension {
    base: LyAlgebra,
    base_op: ReynoldsOperator,
    total: LyAlgebra,
    total_op: ReynoldsOperator,
    inject: Matrix,
    project: Matrix,
}

impl AbelianExtension {
    /// Validates that `0 → V → L̂ → L → 0` (through `inject` and `project`)
    /// is a short exact sequence of Reynolds Lie-Yamaguti algebras with
    /// abelian kernel.
    pub fn new(
        base: LyAlgebra,
        base_op: ReynoldsOperator,
        total: LyAlgebra,
        total_op: ReynoldsOperator,
        inject: Matrix,
        project: Matrix,
    ) -> Result<Self> {
        let n = base.dim();
        let big = total.dim();
        if big < n {
            return Err(Error::ShapeMismatch(format!("total dimension {big} is smaller than base dimension {n}")));
        }
        let m = big - n;
        if (inject.rows(), inject.cols()) != (big, m) || (project.rows(), project.cols()) != (n, big) {
            return Err(Error::ShapeMismatch(format!("inject must be {big}×{m} and project {n}×{big}")));
        }
        if base_op.dim() != n || total_op.dim() != big || base_op.weight != total_op.weight {
            return Err(Error::IncompatibleData(
                "operators must act on the base and total spaces with one weight".into(),
            ));
        }
        if !(&project * &inject).is_zero() || inject.rank() != m || project.rank() != n {
            return Err(Error::InvalidInput("inject and project do not form a short exact sequence".into()));
        }
        let invalid = |what: &str, report: crate::report::AxiomReport| -> Result<()> {
            match report.failures().next() {
                None => Ok(()),
                Some(c) => Err(Error::InvalidInput(format!("{what} fails {}", c.name))),
            }
        };
        invalid("total algebra", total.verify_axioms())?;
        invalid("total operator", verify_reynolds(&total, &total_op)?)?;
        invalid("projection", morphism_check(&total, &base, &project)?)?;
        if &project * &total_op.matrix != &base_op.matrix * &project {
            return Err(Error::InvalidInput("projection does not intertwine the operators".into()));
        }
        let ext = AbelianExtension { base, base_op, total, total_op, inject, project };
        ext.module_op()?;
        let iu: Vec<Vec<Scalar>> = (0..m).map(|b| ext.inject.column(b)).collect();
        for a in 0..m {
            for b in 0..m {
                if !is_zero_vec(&ext.total.br2(&iu[a], &iu[b])) {
                    return Err(Error::InvalidInput("the kernel is not abelian".into()));
                }
                for k in 0..big {
                    let x = unit(big, k);
                    if !is_zero_vec(&ext.total.br3(&x, &iu[a], &iu[b]))
                        || !is_zero_vec(&ext.total.br3(&iu[a], &iu[b], &x))
                    {
                        return Err(Error::InvalidInput("the kernel is not abelian".into()));
                    }
                }
            }
        }
        Ok(ext)
    }

    pub fn base(&self) -> &LyAlgebra {
        &self.base
    }

    pub fn base_op(&self) -> &ReynoldsOperator {
        &self.base_op
    }

    pub fn total(&self) -> &LyAlgebra {
        &self.total
    }

    pub fn total_op(&self) -> &ReynoldsOperator {
        &self.total_op
    }

    pub fn inject(&self) -> &Matrix {
        &self.inject
    }

    pub fn project(&self) -> &Matrix {
        &self.project
    }

    pub fn module_dim(&self) -> usize {
        self.inject.cols()
    }

    /// `T_V` with `T̂ ∘ i = i ∘ T_V`.
    pub fn module_op(&self) -> Result<Matrix> {
        let m = self.module_dim();
        let image = &self.total_op.matrix * &self.inject;
        let cols = (0..m)
            .map(|b| {
                self.inject
                    .solve(&image.column(b))
                    .ok_or_else(|| Error::InvalidInput("the operator does not preserve the kernel".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(m, &cols))
    }

    /// `true` when `inject = [0; Id]` and `project = [Id 0]`.
    pub fn is_block_form(&self) -> bool {
        let n = self.base.dim();
        let m = self.module_dim();
        self.inject == Matrix::zeros(n, m).vstack(&Matrix::identity(m))
            && self.project == Matrix::identity(n).hstack(&Matrix::zeros(n, m))
    }

    /// `s(x) = (x, 0)` in block form; otherwise some right inverse of the projection.
    pub fn canonical_section(&self) -> Section {
        let n = self.base.dim();
        if self.is_block_form() {
            return Section { map: Matrix::identity(n).vstack(&Matrix::zeros(self.module_dim(), n)) };
        }
        let cols: Vec<Vec<Scalar>> =
            (0..n).map(|i| self.project.solve(&unit(n, i)).expect("projection is surjective")).collect();
        Section { map: Matrix::from_columns(self.total.dim(), &cols) }
    }

    /// The section `s + i ∘ ι` for `ι : L → V`.
    pub fn shifted_section(&self, s: &Section, iota: &Matrix) -> Result<Section> {
        let shifted = &s.map + &self.inject.checked_mul(iota)?;
        self.check_section(&Section { map: shifted })
    }

    pub fn check_section(&self, s: &Section) -> Result<Section> {
        let n = self.base.dim();
        if (s.map.rows(), s.map.cols()) != (self.total.dim(), n)
            || self.project.checked_mul(&s.map)? != Matrix::identity(n)
        {
            return Err(Error::NotSection);
        }
        Ok(s.clone())
    }

    /// The inverse of the block map `[s | i] : L ⊕ V → L̂`.
    fn splitting(&self, s: &Section) -> Result<Matrix> {
        self.check_section(s)?;
        s.map.hstack(&self.inject).inverse().ok_or(Error::NotSection)
    }

    /// The `V`-component of a vector lying in the image of `i`.
    fn v_part(&self, split: &Matrix, w: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.base.dim();
        let coords = split.apply(w);
        if !is_zero_vec(&coords[..n]) {
            return Err(Error::InternalInconsistency("expected a vector in the kernel of the projection".into()));
        }
        Ok(coords[n..].to_vec())
    }

    /// The same extension in the basis `s(e_1)…s(e_n), i(u_1)…i(u_m)`.
    pub fn normalize(&self, s: &Section) -> Result<AbelianExtension> {
        self.check_section(s)?;
        let n = self.base.dim();
        let m = self.module_dim();
        let b = s.map.hstack(&self.inject);
        let inv = b.inverse().ok_or(Error::NotSection)?;
        let total = self.total.transport(&b)?;
        let op = ReynoldsOperator::new(&(&inv * &self.total_op.matrix) * &b, self.total_op.weight.clone());
        AbelianExtension::new(
            self.base.clone(),
            self.base_op.clone(),
            total,
            op,
            Matrix::zeros(n, m).vstack(&Matrix::identity(m)),
            Matrix::identity(n).hstack(&Matrix::zeros(n, m)),
        )
    }
}

/// `ρ(x)u = [s(x), i(u)]`, `θ(x, y)u = {i(u), s(x), s(y)}` and `T_V` from `T̂`.
pub fn extract_rep(ext: &AbelianExtension, s: &Section) -> Result<Representation> {
    let split = ext.splitting(s)?;
    let n = ext.base.dim();
    let m = ext.module_dim();
    let sx: Vec<Vec<Scalar>> = (0..n).map(|i| s.map.column(i)).collect();
    let iu: Vec<Vec<Scalar>> = (0..m).map(|b| ext.inject.column(b)).collect();
    let operator = |f: &dyn Fn(&[Scalar]) -> Vec<Scalar>| -> Result<Matrix> {
        let cols = iu.iter().map(|u| ext.v_part(&split, &f(u))).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(m, &cols))
    };
    let rho = (0..n).map(|i| operator(&|u| ext.total.br2(&sx[i], u))).collect::<Result<Vec<_>>>()?;
    let mut theta = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            theta.push(operator(&|u| ext.total.br3(u, &sx[i], &sx[j]))?);
        }
    }
    Representation::new(n, m, rho, theta, Some(ext.module_op()?))
}

/// `ν(x, y) = [sx, sy] − s[x, y]`, `ψ(x, y, z) = {sx, sy, sz} − s{x, y, z}`, `χ(x) = T̂sx − sTx`.
pub fn extract_cocycle(ext: &AbelianExtension, s: &Section) -> Result<ExtensionCocycle> {
    let split = ext.splitting(s)?;
    let n = ext.base.dim();
    let m = ext.module_dim();
    let sx: Vec<Vec<Scalar>> = (0..n).map(|i| s.map.column(i)).collect();
    let mut nu = Bilinear::zeros(n, m);
    let mut psi = Trilinear::zeros(n, m);
    for i in 0..n {
        for j in 0..n {
            let w = vsub(&ext.total.br2(&sx[i], &sx[j]), &s.map.apply(ext.base.binary().get(i, j)));
            for (l, c) in ext.v_part(&split, &w)?.into_iter().enumerate() {
                nu.set(i, j, l, c);
            }
            for k in 0..n {
                let w = vsub(&ext.total.br3(&sx[i], &sx[j], &sx[k]), &s.map.apply(ext.base.ternary().get(i, j, k)));
                for (l, c) in ext.v_part(&split, &w)?.into_iter().enumerate() {
                    psi.set(i, j, k, l, c);
                }
            }
        }
    }
    let cols = (0..n)
        .map(|i| {
            let w = vsub(&ext.total_op.matrix.apply(&sx[i]), &s.map.apply(&ext.base_op.matrix.column(i)));
            ext.v_part(&split, &w)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtensionCocycle { nu, psi, chi: Matrix::from_columns(m, &cols) })
}

fn check_cocycle_shape(a: &LyAlgebra, rep: &Representation, c: &ExtensionCocycle) -> Result<()> {
    let (n, m) = (a.dim(), rep.module_dim());
    if (c.algebra_dim(), c.module_dim(), c.psi.in_dim(), c.psi.out_dim(), c.chi.rows(), c.chi.cols())
        != (n, m, n, m, m, n)
    {
        return Err(Error::ShapeMismatch(format!(
            "cocycle must map a {n}-dimensional algebra into a {m}-dimensional module"
        )));
    }
    Ok(())
}

/// The total algebra and operator on `L ⊕ V` built from any cochain, without
/// checking the cocycle condition. When the cochain is not a cocycle the
/// result fails either the algebra axioms or the Reynolds identities.
pub fn force_build_total(
    a: &LyAlgebra,
    r: &ReynoldsOperator,
    rep: &Representation,
    c: &ExtensionCocycle,
) -> Result<(LyAlgebra, ReynoldsOperator)> {
    check_cocycle_shape(a, rep, c)?;
    let tv = rep.module_op().ok_or(Error::MissingModuleOp)?;
    let n = a.dim();
    let semi = semidirect_algebra(a, rep);
    let big = semi.dim();
    let twist = |base: &[Scalar], extra: &[Scalar]| {
        let mut v = base.to_vec();
        add_into(&mut v[n..], extra);
        v
    };
    let binary = Bilinear::from_fn(big, big, |i, j| {
        let v = semi.binary().get(i, j);
        if i < n && j < n {
            twist(v, c.nu.get(i, j))
        } else {
            v.to_vec()
        }
    });
    let ternary = Trilinear::from_fn(big, big, |i, j, k| {
        let v = semi.ternary().get(i, j, k);
        if i < n && j < n && k < n {
            twist(v, c.psi.get(i, j, k))
        } else {
            v.to_vec()
        }
    });
    let total = LyAlgebra::new(binary, ternary)?.with_labels(semi.labels().to_vec())?;
    let top = r.matrix.hstack(&Matrix::zeros(n, rep.module_dim()));
    let op = top.vstack(&c.chi.hstack(tv));
    Ok((total, ReynoldsOperator::new(op, r.weight.clone())))
}

/// The extension of `(a, r)` by `rep` defined by a cocycle. Fails with
/// [`Error::NotCocycle`] off the kernel of `d²` and with
/// [`Error::CyclicConditionFails`] when the total bracket would break LY3.
pub fn build_extension(
    a: &LyAlgebra,
    r: &ReynoldsOperator,
    rep: &Representation,
    c: &ExtensionCocycle,
) -> Result<AbelianExtension> {
    build_extension_with(&CohomologyContext::new(a, r, rep)?, c)
}

/// As [`build_extension`], reusing a context for `(a, r, rep)`.
pub fn build_extension_with(ctx: &CohomologyContext, c: &ExtensionCocycle) -> Result<AbelianExtension> {
    let a = ctx.algebra();
    let rep = ctx.representation();
    let r = ctx.operator().ok_or_else(|| Error::InvalidInput("the context has no Reynolds operator".into()))?;
    check_cocycle_shape(a, rep, c)?;
    let coords = c.to_cochain()?.coords();
    if !ctx.is_cocycle(ComplexKind::Rly, 2, &coords)? {
        return Err(Error::NotCocycle);
    }
    if !ctx.cyclic_defect(&coords)?.iter().all(Scalar::is_zero) {
        return Err(Error::CyclicConditionFails);
    }
    let (total, op) = force_build_total(a, r, rep, c)?;
    let (n, m) = (a.dim(), rep.module_dim());
    AbelianExtension::new(
        a.clone(),
        r.clone(),
        total,
        op,
        Matrix::zeros(n, m).vstack(&Matrix::identity(m)),
        Matrix::identity(n).hstack(&Matrix::zeros(n, m)),
    )
    .map_err(|e| Error::InternalInconsistency(format!("a cocycle produced an invalid extension: {e}")))
}

/// `φ_ι(x + u) = x + ι(x) + u` in block coordinates; `matrix` is `φ_ι` in
/// the coordinates of the extensions it was computed for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionIsomorphism {
    pub iota: Matrix,
    pub matrix: Matrix,
}

/// An isomorphism `E1 → E2` inducing the identity on `L` and on `V`, if
/// one exists. The cocycles of the canonical sections are compared in the
/// second cohomology; a witness `c1 = c2 + d¹(ι)` yields `φ_ι`, which is
/// then checked directly. Extensions not in block form are first rewritten
/// in the basis given by a section and the injection, and the isomorphism is
/// returned in their original coordinates.
pub fn extensions_equivalent(e1: &AbelianExtension, e2: &AbelianExtension) -> Result<Option<ExtensionIsomorphism>> {
    let rep = extract_rep(e1, &e1.canonical_section())?;
    let ctx = CohomologyContext::new(&e1.base, &e1.base_op, &rep)?;
    extensions_equivalent_with(&ctx, e1, e2)
}

/// The extension in block form together with the basis change `[s | i]`
/// taking block coordinates to the original ones.
fn block_form(e: &AbelianExtension) -> Result<(AbelianExtension, Matrix)> {
    if e.is_block_form() {
        return Ok((e.clone(), Matrix::identity(e.total.dim())));
    }
    let s = e.canonical_section();
    Ok((e.normalize(&s)?, s.map.hstack(&e.inject)))
}

/// As [`extensions_equivalent`], reusing a context for the common base data.
pub fn extensions_equivalent_with(
    ctx: &CohomologyContext,
    e1: &AbelianExtension,
    e2: &AbelianExtension,
) -> Result<Option<ExtensionIsomorphism>> {
    let rep = ctx.representation();
    let r = ctx.operator().ok_or_else(|| Error::InvalidInput("the context has no Reynolds operator".into()))?;
    let (b1, basis1) = block_form(e1)?;
    let (b2, basis2) = block_form(e2)?;
    for e in [&b1, &b2] {
        if e.base != *ctx.algebra() || e.base_op != *r {
            return Err(Error::IncompatibleData("extensions over different Reynolds algebras".into()));
        }
        if extract_rep(e, &e.canonical_section())? != *rep {
            return Err(Error::IncompatibleData("extensions induce different representations".into()));
        }
    }
    let c1 = extract_cocycle(&b1, &b1.canonical_section())?.to_cochain()?.coords();
    let c2 = extract_cocycle(&b2, &b2.canonical_section())?.to_cochain()?.coords();
    let diff: Vec<Scalar> = c1.iter().zip(&c2).map(|(x, y)| x - y).collect();
    let Some(pre) = ctx.coboundary_preimage(ComplexKind::Rly, 2, &diff)? else {
        return Ok(None);
    };
    let (n, m) = (ctx.algebra().dim(), rep.module_dim());
    let iota = Cochain::from_coords(n, m, 1, pre)?.linear_map()?;
    let top = Matrix::identity(n).hstack(&Matrix::zeros(n, m));
    let block = top.vstack(&iota.hstack(&Matrix::identity(m)));
    let back = basis1.inverse().ok_or_else(|| Error::InternalInconsistency("section basis is singular".into()))?;
    let matrix = &(&basis2 * &block) * &back;
    let morphism = morphism_check(&e1.total, &e2.total, &matrix)?;
    let intertwines = &e2.total_op.matrix * &matrix == &matrix * &e1.total_op.matrix;
    let diagram = &matrix * &e1.inject == e2.inject && &e2.project * &matrix == e1.project;
    if !morphism.all_passed() || !intertwines || !diagram {
        return Err(Error::InternalInconsistency("the cohomology witness does not give an isomorphism".into()));
    }
    Ok(Some(ExtensionIsomorphism { iota, matrix }))
}

#[cfg(test)]
mod tests;

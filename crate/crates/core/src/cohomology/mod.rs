//! The three cochain complexes of a Reynolds Lie-Yamaguti algebra with
//! coefficients in a representation:
//!
//! * `Ly`: the Yamaguti complex `(C_LY(L, V), δ)`;
//! * `Ro`: the operator complex, the Yamaguti complex of the descendant
//!   algebra `L_T` with coefficients in the induced representation, written `∂`;
//! * `Rly`: the mapping cone of the chain map `Φ : C_LY → C_RO`, with
//!   `C^1 = C^1_LY`, `C^p = C^p_LY ⊕ C^{p−1}_RO` and
//!   `d^1 h = (δh, −Φh)`, `d^p(c, c') = (δc, −∂c' − Φc)`.
//!
//! In degree 1 there is no incoming differential, so `H^1 = ker d^1`.
//!
//! A degree-2 cocycle `((ν, ψ), χ)` of the mapping cone need not define a
//! Lie-Yamaguti algebra on `L ⊕ V`: the module component of LY3 asks in
//! addition that
//!
//! `↻_{x,y,z} (ν([x, y], z) − ρ(z)ν(x, y) + ψ(x, y, z)) = 0`,
//!
//! which the differential does not see. Coboundaries always satisfy it, so
//! the cocycles satisfying it give a subspace of `H^2` (the *extension
//! classes*) that classifies abelian extensions and first-order deformations.
//! The condition is empty when `dim L ≤ 2`.

mod assembly;
mod cochain;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

pub use cochain::{Cochain, Layout, RlyCochain};

use crate::algebra::LyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SubspaceBasis};
use crate::representation::{induced_unchecked, require_reynolds_rep, verify_rep, Representation};
use crate::reynolds::{descendant_unchecked, ReynoldsOperator};
use assembly::{chain_map_matrix, coboundary_matrix, Structure};

/// Highest cochain degree a context will assemble.
pub const MAX_DEGREE: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Ly,
    Ro,
    Rly,
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexKind::Ly => "ly",
            ComplexKind::Ro => "ro",
            ComplexKind::Rly => "rly",
        })
    }
}

impl FromStr for ComplexKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ly" => Ok(ComplexKind::Ly),
            "ro" => Ok(ComplexKind::Ro),
            "rly" => Ok(ComplexKind::Rly),
            other => Err(Error::InvalidInput(format!("unknown complex `{other}` (expected ly, ro or rly)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub dim_cochain: usize,
    pub dim_kernel: usize,
    pub dim_image_incoming: usize,
    pub betti: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub complex: ComplexKind,
    pub rows: Vec<DegreeRow>,
}

impl ComplexReport {
    pub fn betti(&self, degree: usize) -> Option<usize> {
        self.rows.iter().find(|r| r.degree == degree).map(|r| r.betti)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.dim_cochain).collect()
    }
}

impl fmt::Display for ComplexReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "complex {}", self.complex)?;
        writeln!(f, "{:>6} {:>6} {:>6} {:>6} {:>6}", "degree", "dim", "ker", "im", "betti")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>6} {:>6} {:>6} {:>6} {:>6}",
                r.degree, r.dim_cochain, r.dim_kernel, r.dim_image_incoming, r.betti
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Differential(ComplexKind, usize),
    ChainMap(usize),
    Cyclic,
    ExtensionCocycles,
}

/// Everything needed to assemble the three complexes for one choice of
/// algebra, operator and representation. Assembled matrices and their ranks
/// are cached.
pub struct CohomologyContext {
    algebra: LyAlgebra,
    rep: Representation,
    operator: Option<ReynoldsOperator>,
    descendant: Option<(LyAlgebra, Representation)>,
    layout: Layout,
    matrices: Mutex<HashMap<Key, Arc<Matrix>>>,
    ranks: Mutex<HashMap<Key, usize>>,
}

impl CohomologyContext {
    /// Context for the Yamaguti complex only.
    pub fn yamaguti(algebra: &LyAlgebra, rep: &Representation) -> Result<Self> {
        if rep.algebra_dim() != algebra.dim() {
            return Err(Error::DimMismatch {
                context: "representation algebra",
                expected: algebra.dim(),
                found: rep.algebra_dim(),
            });
        }
        let report = verify_rep(algebra, rep)?;
        if let Some(c) = report.failures().next() {
            return Err(Error::InvalidInput(format!("not a representation: {} fails", c.name)));
        }
        Ok(Self::build(algebra, rep, None))
    }

    /// Context for all three complexes; `rep` must carry a compatible module operator.
    pub fn new(algebra: &LyAlgebra, operator: &ReynoldsOperator, rep: &Representation) -> Result<Self> {
        if rep.algebra_dim() != algebra.dim() {
            return Err(Error::DimMismatch {
                context: "representation algebra",
                expected: algebra.dim(),
                found: rep.algebra_dim(),
            });
        }
        rep.require_module_op()?;
        require_reynolds_rep(algebra, operator, rep)?;
        Ok(Self::build(algebra, rep, Some(operator)))
    }

    fn build(algebra: &LyAlgebra, rep: &Representation, operator: Option<&ReynoldsOperator>) -> Self {
        let descendant = operator.map(|r| (descendant_unchecked(algebra, r), induced_unchecked(algebra, r, rep)));
        CohomologyContext {
            algebra: algebra.clone(),
            rep: rep.clone(),
            operator: operator.cloned(),
            descendant,
            layout: Layout::new(algebra.dim(), rep.module_dim()),
            matrices: Mutex::new(HashMap::new()),
            ranks: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &LyAlgebra {
        &self.algebra
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn operator(&self) -> Option<&ReynoldsOperator> {
        self.operator.as_ref()
    }

    /// The descendant algebra and induced representation, when an operator is present.
    pub fn descendant(&self) -> Option<(&LyAlgebra, &Representation)> {
        self.descendant.as_ref().map(|(a, r)| (a, r))
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    /// Dimension of the degree-`p` space of the given complex.
    pub fn cochain_dim(&self, kind: ComplexKind, p: usize) -> usize {
        match kind {
            ComplexKind::Ly | ComplexKind::Ro => self.layout.dim(p),
            ComplexKind::Rly => self.layout.dim(p) + if p >= 2 { self.layout.dim(p - 1) } else { 0 },
        }
    }

    fn check_degree(p: usize) -> Result<()> {
        if p == 0 || p > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { degree: p, max: MAX_DEGREE });
        }
        Ok(())
    }

    fn operator_parts(&self) -> Result<(&ReynoldsOperator, &LyAlgebra, &Representation)> {
        match (&self.operator, &self.descendant) {
            (Some(r), Some((a, rep))) => Ok((r, a, rep)),
            _ => Err(Error::InvalidInput("this complex needs a Reynolds operator and a module operator".into())),
        }
    }

    fn cached(&self, key: Key, make: impl FnOnce() -> Result<Matrix>) -> Result<Arc<Matrix>> {
        if let Some(m) = self.matrices.lock().expect("cache lock").get(&key) {
            return Ok(Arc::clone(m));
        }
        let m = Arc::new(make()?);
        Ok(Arc::clone(self.matrices.lock().expect("cache lock").entry(key).or_insert(m)))
    }

    fn rank_of(&self, key: Key, m: &Matrix) -> usize {
        if let Some(&r) = self.ranks.lock().expect("cache lock").get(&key) {
            return r;
        }
        let r = m.rank();
        self.ranks.lock().expect("cache lock").insert(key, r);
        r
    }

    /// Matrix of the differential leaving degree `p`, in the standard
    /// coordinates of the cochain spaces.
    pub fn differential_matrix(&self, kind: ComplexKind, p: usize) -> Result<Arc<Matrix>> {
        Self::check_degree(p)?;
        self.cached(Key::Differential(kind, p), || match kind {
            ComplexKind::Ly => Ok(coboundary_matrix(&Structure::new(&self.algebra, &self.rep), p)),
            ComplexKind::Ro => {
                let (_, a, rep) = self.operator_parts()?;
                Ok(coboundary_matrix(&Structure::new(a, rep), p))
            }
            ComplexKind::Rly => {
                let delta = self.differential_matrix(ComplexKind::Ly, p)?;
                let phi = self.phi_matrix(p)?.scale(&-Scalar::one());
                if p == 1 {
                    return Ok(delta.vstack(&phi));
                }
                let partial = self.differential_matrix(ComplexKind::Ro, p - 1)?.scale(&-Scalar::one());
                let top = delta.hstack(&Matrix::zeros(delta.rows(), partial.cols()));
                Ok(top.vstack(&phi.hstack(&partial)))
            }
        })
    }

    /// Matrix of `Φ^p : C^p_LY → C^p_RO`.
    pub fn phi_matrix(&self, p: usize) -> Result<Arc<Matrix>> {
        Self::check_degree(p)?;
        let (r, _, _) = self.operator_parts()?;
        let tv = self.rep.require_module_op()?;
        self.cached(Key::ChainMap(p), || {
            Ok(chain_map_matrix(self.algebra.dim(), self.rep.module_dim(), &r.matrix, tv, &r.weight, p))
        })
    }

    fn rank(&self, kind: ComplexKind, p: usize) -> Result<usize> {
        let m = self.differential_matrix(kind, p)?;
        Ok(self.rank_of(Key::Differential(kind, p), &m))
    }

    fn check_cochain(&self, c: &Cochain) -> Result<()> {
        if (c.algebra_dim(), c.module_dim()) != (self.layout.n, self.layout.m) {
            return Err(Error::ShapeMismatch("cochain over a different algebra or module".into()));
        }
        Ok(())
    }

    fn apply(&self, kind: ComplexKind, c: &Cochain) -> Result<Cochain> {
        self.check_cochain(c)?;
        let m = self.differential_matrix(kind, c.degree())?;
        Cochain::from_coords(self.layout.n, self.layout.m, c.degree() + 1, m.apply(c.coords()))
    }

    /// `δ c`.
    pub fn delta(&self, c: &Cochain) -> Result<Cochain> {
        self.apply(ComplexKind::Ly, c)
    }

    /// `∂ c`.
    pub fn partial(&self, c: &Cochain) -> Result<Cochain> {
        self.apply(ComplexKind::Ro, c)
    }

    /// `Φ c`.
    pub fn phi(&self, c: &Cochain) -> Result<Cochain> {
        self.check_cochain(c)?;
        let m = self.phi_matrix(c.degree())?;
        Cochain::from_coords(self.layout.n, self.layout.m, c.degree(), m.apply(c.coords()))
    }

    /// `d c` in the mapping cone.
    pub fn d_rly(&self, c: &RlyCochain) -> Result<RlyCochain> {
        self.check_cochain(&c.top)?;
        let p = c.degree();
        let m = self.differential_matrix(ComplexKind::Rly, p)?;
        RlyCochain::from_coords(self.layout.n, self.layout.m, p + 1, m.apply(&c.coords()))
    }

    /// `true` when `d^{p+1} · d^p = 0` as matrices.
    pub fn square_is_zero(&self, kind: ComplexKind, p: usize) -> Result<bool> {
        let first = self.differential_matrix(kind, p)?;
        let second = self.differential_matrix(kind, p + 1)?;
        Ok(second.checked_mul(&first)?.is_zero())
    }

    /// `true` when `Φ^{p+1} · δ^p = ∂^p · Φ^p` as matrices.
    pub fn chain_map_commutes(&self, p: usize) -> Result<bool> {
        let left = self.phi_matrix(p + 1)?.checked_mul(&*self.differential_matrix(ComplexKind::Ly, p)?)?;
        let right = self.differential_matrix(ComplexKind::Ro, p)?.checked_mul(&*self.phi_matrix(p)?)?;
        Ok(left == right)
    }

    /// Kernel, image and Betti number in degrees `1..=max_degree`.
    pub fn cohomology_dims(&self, kind: ComplexKind, max_degree: usize) -> Result<ComplexReport> {
        if max_degree == 0 {
            return Err(Error::DegreeOutOfRange { degree: 0, max: MAX_DEGREE });
        }
        let mut rows = Vec::with_capacity(max_degree);
        for p in 1..=max_degree {
            if p >= 2 && !self.square_is_zero(kind, p - 1)? {
                return Err(Error::CompositionNotZero);
            }
            let dim = self.cochain_dim(kind, p);
            let kernel = dim - self.rank(kind, p)?;
            let image = if p >= 2 { self.rank(kind, p - 1)? } else { 0 };
            rows.push(DegreeRow {
                degree: p,
                dim_cochain: dim,
                dim_kernel: kernel,
                dim_image_incoming: image,
                betti: kernel - image,
            });
        }
        Ok(ComplexReport { complex: kind, rows })
    }

    fn check_len(&self, kind: ComplexKind, p: usize, coords: &[Scalar]) -> Result<()> {
        let expected = self.cochain_dim(kind, p);
        if coords.len() != expected {
            return Err(Error::DimMismatch { context: "cochain coordinates", expected, found: coords.len() });
        }
        Ok(())
    }

    /// `true` when the differential kills the degree-`p` cochain with these coordinates.
    pub fn is_cocycle(&self, kind: ComplexKind, p: usize, coords: &[Scalar]) -> Result<bool> {
        self.check_len(kind, p, coords)?;
        Ok(self.differential_matrix(kind, p)?.apply(coords).iter().all(Scalar::is_zero))
    }

    /// Some degree-`(p−1)` cochain whose differential is `coords`, if one exists.
    /// In degree 1 only the zero cochain is a coboundary.
    pub fn coboundary_preimage(&self, kind: ComplexKind, p: usize, coords: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        self.check_len(kind, p, coords)?;
        if p == 1 {
            return Ok(coords.iter().all(Scalar::is_zero).then(Vec::new));
        }
        Ok(self.differential_matrix(kind, p - 1)?.solve(coords))
    }

    pub fn is_coboundary(&self, kind: ComplexKind, p: usize, coords: &[Scalar]) -> Result<bool> {
        Ok(self.coboundary_preimage(kind, p, coords)?.is_some())
    }

    pub fn cohomologous(&self, kind: ComplexKind, p: usize, a: &[Scalar], b: &[Scalar]) -> Result<bool> {
        self.check_len(kind, p, a)?;
        self.check_len(kind, p, b)?;
        let diff: Vec<Scalar> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_coboundary(kind, p, &diff)
    }

    /// Basis of the degree-`p` cocycles.
    pub fn cocycle_basis(&self, kind: ComplexKind, p: usize) -> Result<SubspaceBasis> {
        Ok(self.differential_matrix(kind, p)?.kernel_basis())
    }

    /// Cocycles whose classes form a basis of `H^p`: kernel vectors chosen in
    /// order, keeping each one that is independent of the image together
    /// with the vectors already kept.
    pub fn class_representatives(&self, kind: ComplexKind, p: usize) -> Result<Vec<Vec<Scalar>>> {
        self.independent_mod_image(kind, p, self.cocycle_basis(kind, p)?)
    }

    /// Matrix of the cyclic LY3 condition on degree-2 mapping-cone cochains.
    /// Row `(t, v)` is the `v`-th coordinate of the cyclic sum at the `t`-th
    /// basis triple `x < y < z`; the `χ` part does not enter.
    pub fn cyclic_matrix(&self) -> Result<Arc<Matrix>> {
        self.cached(Key::Cyclic, || {
            let top = cyclic_condition_matrix(&self.algebra, &self.rep)?;
            let tail = self.cochain_dim(ComplexKind::Rly, 2) - top.cols();
            Ok(top.hstack(&Matrix::zeros(top.rows(), tail)))
        })
    }

    /// The cyclic sum `↻ (ν([x, y], z) − ρ(z)ν(x, y) + ψ(x, y, z))` of a
    /// degree-2 mapping-cone cochain, listed as in [`Self::cyclic_matrix`].
    pub fn cyclic_defect(&self, coords: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(ComplexKind::Rly, 2, coords)?;
        Ok(self.cyclic_matrix()?.apply(coords))
    }

    /// `true` for a degree-2 mapping-cone cocycle that also satisfies the
    /// cyclic LY3 condition, i.e. one that defines an abelian extension.
    pub fn is_extension_cocycle(&self, coords: &[Scalar]) -> Result<bool> {
        Ok(self.is_cocycle(ComplexKind::Rly, 2, coords)? && self.cyclic_defect(coords)?.iter().all(Scalar::is_zero))
    }

    /// Basis of the degree-2 cocycles satisfying the cyclic LY3 condition.
    pub fn extension_cocycle_basis(&self) -> Result<SubspaceBasis> {
        let m = self.cached(Key::ExtensionCocycles, || {
            Ok(self.differential_matrix(ComplexKind::Rly, 2)?.vstack(&*self.cyclic_matrix()?))
        })?;
        Ok(m.kernel_basis())
    }

    /// Number of extension classes: the dimension of the subspace of `H^2`
    /// spanned by cocycles satisfying the cyclic LY3 condition.
    pub fn extension_class_count(&self) -> Result<usize> {
        Ok(self.extension_cocycle_basis()?.dim() - self.rank(ComplexKind::Rly, 1)?)
    }

    /// Extension cocycles whose classes form a basis of the extension classes.
    pub fn extension_class_representatives(&self) -> Result<Vec<Vec<Scalar>>> {
        self.independent_mod_image(ComplexKind::Rly, 2, self.extension_cocycle_basis()?)
    }

    fn independent_mod_image(&self, kind: ComplexKind, p: usize, kernel: SubspaceBasis) -> Result<Vec<Vec<Scalar>>> {
        let mut span = if p >= 2 {
            let incoming = self.differential_matrix(kind, p - 1)?;
            (0..incoming.cols()).map(|j| incoming.column(j)).collect::<Vec<_>>()
        } else {
            Vec::new()
        };
        let dim = self.cochain_dim(kind, p);
        let rank_of = |vs: &[Vec<Scalar>]| Matrix::from_columns(dim, vs).rank();
        let mut current = rank_of(&span);
        let mut reps = Vec::new();
        for v in kernel.vectors {
            span.push(v.clone());
            let r = rank_of(&span);
            if r > current {
                current = r;
                reps.push(v);
            } else {
                span.pop();
            }
        }
        Ok(reps)
    }
}

/// `δ c` for a one-off computation.
pub fn delta(algebra: &LyAlgebra, rep: &Representation, c: &Cochain) -> Result<Cochain> {
    CohomologyContext::yamaguti(algebra, rep)?.delta(c)
}

/// `∂ c` for a one-off computation.
pub fn partial(algebra: &LyAlgebra, operator: &ReynoldsOperator, rep: &Representation, c: &Cochain) -> Result<Cochain> {
    CohomologyContext::new(algebra, operator, rep)?.partial(c)
}

/// `Φ c` for a one-off computation.
pub fn phi(algebra: &LyAlgebra, operator: &ReynoldsOperator, rep: &Representation, c: &Cochain) -> Result<Cochain> {
    CohomologyContext::new(algebra, operator, rep)?.phi(c)
}

/// `d c` for a one-off computation.
pub fn d_rly(
    algebra: &LyAlgebra,
    operator: &ReynoldsOperator,
    rep: &Representation,
    c: &RlyCochain,
) -> Result<RlyCochain> {
    CohomologyContext::new(algebra, operator, rep)?.d_rly(c)
}


/// The cyclic LY3 condition on degree-2 Yamaguti cochains, one block of `m`
/// rows per basis triple `i < j < k`.
fn cyclic_condition_matrix(algebra: &LyAlgebra, rep: &Representation) -> Result<Matrix> {
    let (n, m) = (algebra.dim(), rep.module_dim());
    let layout = Layout::new(n, m);
    let triples: Vec<[usize; 3]> =
        (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k]))).collect();
    let columns = (0..layout.dim(2))
        .map(|col| {
            let mut unit = vec![Scalar::zero(); layout.dim(2)];
            unit[col] = Scalar::one();
            let (f, g) = Cochain::from_coords(n, m, 2, unit)?.maps()?;
            let term = |x: usize, y: usize, z: usize| {
                let mut v = g.get(x, y, z).to_vec();
                for (l, c) in algebra.binary().get(x, y).iter().enumerate() {
                    if !c.is_zero() {
                        for (o, w) in v.iter_mut().zip(f.get(l, z)) {
                            *o += c * w;
                        }
                    }
                }
                for (o, w) in v.iter_mut().zip(rep.rho(z).apply(f.get(x, y))) {
                    *o -= w;
                }
                v
            };
            let mut out = Vec::with_capacity(triples.len() * m);
            for &[x, y, z] in &triples {
                let mut v = term(x, y, z);
                for other in [term(y, z, x), term(z, x, y)] {
                    for (o, w) in v.iter_mut().zip(&other) {
                        *o += w;
                    }
                }
                out.extend(v);
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(triples.len() * m, &columns))
}

//! Truncated formal deformations `(F_t, G_t, T_t)` of a Reynolds
//! Lie-Yamaguti algebra, formal isomorphisms between them, and the
//! first-order step of the rigidity argument.
//!
//! Every identity is checked in `Q[t]/(t^{N+1})`: the brackets and the
//! operator are evaluated on basis tuples as truncated series and each
//! coefficient of `t^n` is compared separately.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::LyAlgebra;
use crate::cohomology::{Cochain, CohomologyContext, ComplexKind, RlyCochain};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::report::{tuples, AxiomReport, Check, Witness};
use crate::representation::adjoint_rep;
use crate::reynolds::ReynoldsOperator;
use crate::tensor::{add_into, is_zero_vec, vscale, vsub, Bilinear, Trilinear};

/// A truncated vector series: entry `k` is the coefficient of `t^k`.
type Series = Vec<Vec<Scalar>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedDeformation {
    binary: Vec<Bilinear>,
    ternary: Vec<Trilinear>,
    operator: Vec<Matrix>,
    weight: Scalar,
}

impl TruncatedDeformation {
    /// A deformation of `(a, r)` whose coefficients of `t^1, t^2, …` are the
    /// given triples.
    pub fn new(a: &LyAlgebra, r: &ReynoldsOperator, higher: Vec<(Bilinear, Trilinear, Matrix)>) -> Result<Self> {
        if higher.is_empty() {
            return Err(Error::OrderTooLow(0));
        }
        let n = a.dim();
        if r.dim() != n {
            return Err(Error::DimMismatch { context: "Reynolds operator", expected: n, found: r.dim() });
        }
        let mut binary = vec![a.binary().clone()];
        let mut ternary = vec![a.ternary().clone()];
        let mut operator = vec![r.matrix.clone()];
        for (f, g, t) in higher {
            if (f.in_dim(), f.out_dim(), g.in_dim(), g.out_dim()) != (n, n, n, n) {
                return Err(Error::ShapeMismatch(format!("deformation brackets must be on a {n}-dimensional space")));
            }
            if (t.rows(), t.cols()) != (n, n) {
                return Err(Error::ShapeMismatch(format!("deformation operator must be {n}×{n}")));
            }
            if let Some(tuple) = f.antisymmetry_violation() {
                return Err(Error::NotAntisymmetric { what: "deformation binary term", tuple });
            }
            if let Some(tuple) = g.antisymmetry_violation() {
                return Err(Error::NotAntisymmetric { what: "deformation ternary term", tuple });
            }
            binary.push(f);
            ternary.push(g);
            operator.push(t);
        }
        Ok(TruncatedDeformation { binary, ternary, operator, weight: r.weight.clone() })
    }

    /// The undeformed structure viewed as a deformation of the given order.
    pub fn constant(a: &LyAlgebra, r: &ReynoldsOperator, order: usize) -> Result<Self> {
        let n = a.dim();
        let zero = (Bilinear::zeros(n, n), Trilinear::zeros(n, n), Matrix::zeros(n, n));
        Self::new(a, r, vec![zero; order.max(1)])
    }

    /// The order-1 deformation `(F_0 + F_1 t, G_0 + G_1 t, T + T_1 t)` read
    /// off a degree-2 cochain `((F_1, G_1), T_1)` of the complex with
    /// adjoint coefficients.
    pub fn from_infinitesimal(a: &LyAlgebra, r: &ReynoldsOperator, c: &RlyCochain) -> Result<Self> {
        if c.degree() != 2 || c.top.algebra_dim() != a.dim() || c.top.module_dim() != a.dim() {
            return Err(Error::ShapeMismatch("expected a degree-2 cochain with adjoint coefficients".into()));
        }
        let (f, g) = c.top.maps()?;
        let t = c.tail.as_ref().expect("degree-2 cochains carry a tail").linear_map()?;
        Self::new(a, r, vec![(f, g, t)])
    }

    pub fn order(&self) -> usize {
        self.binary.len() - 1
    }

    pub fn dim(&self) -> usize {
        self.operator[0].rows()
    }

    pub fn weight(&self) -> &Scalar {
        &self.weight
    }

    pub fn binary_terms(&self) -> &[Bilinear] {
        &self.binary
    }

    pub fn ternary_terms(&self) -> &[Trilinear] {
        &self.ternary
    }

    pub fn operator_terms(&self) -> &[Matrix] {
        &self.operator
    }

    /// The undeformed algebra and operator.
    pub fn base(&self) -> (LyAlgebra, ReynoldsOperator) {
        let a = LyAlgebra::new(self.binary[0].clone(), self.ternary[0].clone()).expect("validated base");
        (a, ReynoldsOperator::new(self.operator[0].clone(), self.weight.clone()))
    }

    /// `true` when every term of positive order vanishes up to `order`.
    pub fn is_trivial_through(&self, order: usize) -> bool {
        (1..=order.min(self.order()))
            .all(|i| self.binary[i].is_zero() && self.ternary[i].is_zero() && self.operator[i].is_zero())
    }

    /// The infinitesimal `((F_1, G_1), T_1)`.
    pub fn infinitesimal(&self) -> Result<RlyCochain> {
        if self.order() < 1 {
            return Err(Error::OrderTooLow(self.order()));
        }
        let top = Cochain::from_maps(&self.binary[1], &self.ternary[1])?;
        RlyCochain::new(top, Some(Cochain::from_linear_map(&self.operator[1])))
    }

    fn basis(&self, i: usize) -> Series {
        let n = self.dim();
        let mut s = zero_series(n, self.order());
        s[0][i] = Scalar::one();
        s
    }

    fn f(&self, x: &Series, y: &Series) -> Series {
        let n = self.dim();
        let mut out = zero_series(n, self.order());
        for (i, fi) in self.binary.iter().enumerate() {
            for (a, xa) in x.iter().enumerate() {
                for (b, yb) in y.iter().enumerate() {
                    let k = i + a + b;
                    if k >= out.len() || is_zero_vec(xa) || is_zero_vec(yb) {
                        continue;
                    }
                    add_into(&mut out[k], &fi.eval(xa, yb));
                }
            }
        }
        out
    }

    fn g(&self, x: &Series, y: &Series, z: &Series) -> Series {
        let n = self.dim();
        let mut out = zero_series(n, self.order());
        for (i, gi) in self.ternary.iter().enumerate() {
            for (a, xa) in x.iter().enumerate() {
                for (b, yb) in y.iter().enumerate() {
                    for (c, zc) in z.iter().enumerate() {
                        let k = i + a + b + c;
                        if k >= out.len() || is_zero_vec(xa) || is_zero_vec(yb) || is_zero_vec(zc) {
                            continue;
                        }
                        add_into(&mut out[k], &gi.eval(xa, yb, zc));
                    }
                }
            }
        }
        out
    }

    fn t(&self, x: &Series) -> Series {
        apply_series(&self.operator, x)
    }
}

fn zero_series(n: usize, order: usize) -> Series {
    vec![vec![Scalar::zero(); n]; order + 1]
}

fn add(x: &Series, y: &Series) -> Series {
    x.iter().zip(y).map(|(a, b)| a.iter().zip(b).map(|(p, q)| p + q).collect()).collect()
}

fn sub(x: &Series, y: &Series) -> Series {
    x.iter().zip(y).map(|(a, b)| vsub(a, b)).collect()
}

fn scale(c: &Scalar, x: &Series) -> Series {
    x.iter().map(|a| vscale(c, a)).collect()
}

fn apply_series(ops: &[Matrix], x: &Series) -> Series {
    let mut out = vec![vec![Scalar::zero(); ops[0].rows()]; x.len()];
    for (i, op) in ops.iter().enumerate() {
        for (a, xa) in x.iter().enumerate() {
            if i + a < out.len() && !is_zero_vec(xa) {
                add_into(&mut out[i + a], &op.apply(xa));
            }
        }
    }
    out
}

/// Per-order results of checking a truncated deformation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    /// Entry `n` holds the checks on the coefficient of `t^n`.
    pub orders: Vec<AxiomReport>,
}

impl OrderReport {
    pub fn all_passed(&self) -> bool {
        self.orders.iter().all(AxiomReport::all_passed)
    }

    /// `true` when every identity holds through the coefficient of `t^order`.
    pub fn passed_through(&self, order: usize) -> bool {
        self.orders.iter().take(order + 1).all(AxiomReport::all_passed)
    }

    /// The lowest order with a failing identity, and that identity.
    pub fn first_failure(&self) -> Option<(usize, &Check)> {
        self.orders.iter().enumerate().find_map(|(n, r)| r.failures().next().map(|c| (n, c)))
    }
}

impl fmt::Display for OrderReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for report in &self.orders {
            write!(f, "{report}")?;
        }
        Ok(())
    }
}

/// Checks antisymmetry, the four Lie-Yamaguti identities and both Reynolds
/// identities on the coefficient of every `t^n`, `n ≤ order`.
pub fn verify_deformation(a: &LyAlgebra, r: &ReynoldsOperator, def: &TruncatedDeformation) -> Result<OrderReport> {
    let (base, op) = def.base();
    if base.binary() != a.binary() || base.ternary() != a.ternary() || op != *r {
        return Err(Error::IncompatibleData("deformation is not based on the given algebra and operator".into()));
    }
    Ok(check_identities(def))
}

fn check_identities(def: &TruncatedDeformation) -> OrderReport {
    let n = def.dim();
    let order = def.order();
    let e: Vec<Series> = (0..n).map(|i| def.basis(i)).collect();
    let lambda = &def.weight;
    let two_lambda = lambda + lambda;
    type Identity<'a> = (&'static str, &'static [&'static str], Box<dyn Fn(&[usize]) -> Series + 'a>);
    let identities: Vec<Identity> = vec![
        ("LY1", &["x", "y"], Box::new(|t: &[usize]| add(&def.f(&e[t[0]], &e[t[1]]), &def.f(&e[t[1]], &e[t[0]])))),
        (
            "LY2",
            &["x", "y", "z"],
            Box::new(|t: &[usize]| add(&def.g(&e[t[0]], &e[t[1]], &e[t[2]]), &def.g(&e[t[1]], &e[t[0]], &e[t[2]]))),
        ),
        (
            "LY3",
            &["x", "y", "z"],
            Box::new(|t: &[usize]| {
                let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
                let mut r = def.f(&def.f(x, y), z);
                r = add(&r, &def.f(&def.f(z, x), y));
                r = add(&r, &def.f(&def.f(y, z), x));
                r = add(&r, &def.g(x, y, z));
                r = add(&r, &def.g(z, x, y));
                add(&r, &def.g(y, z, x))
            }),
        ),
        (
            "LY4",
            &["x", "y", "z", "a"],
            Box::new(|t: &[usize]| {
                let (x, y, z, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
                let mut r = def.g(&def.f(x, y), z, w);
                r = add(&r, &def.g(&def.f(z, x), y, w));
                add(&r, &def.g(&def.f(y, z), x, w))
            }),
        ),
        (
            "LY5",
            &["a", "b", "x", "y"],
            Box::new(|t: &[usize]| {
                let (p, q, x, y) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
                let lhs = def.g(p, q, &def.f(x, y));
                let rhs = add(&def.f(&def.g(p, q, x), y), &def.f(x, &def.g(p, q, y)));
                sub(&lhs, &rhs)
            }),
        ),
        (
            "LY6",
            &["a", "b", "x", "y", "z"],
            Box::new(|t: &[usize]| {
                let (p, q, x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]], &e[t[4]]);
                let lhs = def.g(p, q, &def.g(x, y, z));
                let mut rhs = def.g(&def.g(p, q, x), y, z);
                rhs = add(&rhs, &def.g(x, &def.g(p, q, y), z));
                rhs = add(&rhs, &def.g(x, y, &def.g(p, q, z)));
                sub(&lhs, &rhs)
            }),
        ),
        (
            "reynolds-binary",
            &["x", "y"],
            Box::new(|t: &[usize]| {
                let (x, y) = (&e[t[0]], &e[t[1]]);
                let (tx, ty) = (def.t(x), def.t(y));
                let lhs = def.f(&tx, &ty);
                let inner = add(&add(&def.f(&tx, y), &def.f(x, &ty)), &scale(lambda, &lhs));
                sub(&lhs, &def.t(&inner))
            }),
        ),
        (
            "reynolds-ternary",
            &["x", "y", "z"],
            Box::new(|t: &[usize]| {
                let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
                let (tx, ty, tz) = (def.t(x), def.t(y), def.t(z));
                let lhs = def.g(&tx, &ty, &tz);
                let mut inner = def.g(x, &ty, &tz);
                inner = add(&inner, &def.g(&tx, y, &tz));
                inner = add(&inner, &def.g(&tx, &ty, z));
                inner = add(&inner, &scale(&two_lambda, &lhs));
                sub(&lhs, &def.t(&inner))
            }),
        ),
    ];
    let mut orders: Vec<AxiomReport> =
        (0..=order).map(|k| AxiomReport::new(format!("deformation, coefficient of t^{k}"))).collect();
    for (name, slots, residual) in &identities {
        let mut first: Vec<Option<Witness>> = vec![None; order + 1];
        for tuple in tuples(&vec![n; slots.len()]) {
            let r = residual(&tuple);
            for (k, coeff) in r.into_iter().enumerate() {
                if first[k].is_none() && !is_zero_vec(&coeff) {
                    first[k] = Some(Witness {
                        slots: slots.iter().map(|s| s.to_string()).collect(),
                        tuple: tuple.clone(),
                        residual: coeff,
                    });
                }
            }
            if first.iter().all(Option::is_some) {
                break;
            }
        }
        for (k, w) in first.into_iter().enumerate() {
            orders[k].push(match w {
                None => Check::pass(*name),
                Some(w) => Check::fail(*name, w),
            });
        }
    }
    OrderReport { orders }
}

/// A formal series `φ_t = Id + φ_1 t + … + φ_N t^N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalIsomorphism {
    maps: Vec<Matrix>,
}

impl FormalIsomorphism {
    /// `maps[0]` must be the identity.
    pub fn new(maps: Vec<Matrix>) -> Result<Self> {
        let first = maps.first().ok_or_else(|| Error::InvalidInput("empty formal isomorphism".into()))?;
        let n = first.rows();
        if *first != Matrix::identity(n) {
            return Err(Error::InvalidInput("the constant term of a formal isomorphism must be the identity".into()));
        }
        if maps.iter().any(|m| (m.rows(), m.cols()) != (n, n)) {
            return Err(Error::ShapeMismatch(format!("formal isomorphism terms must be {n}×{n}")));
        }
        Ok(FormalIsomorphism { maps })
    }

    pub fn identity(n: usize, order: usize) -> Self {
        FormalIsomorphism {
            maps: std::iter::once(Matrix::identity(n)).chain(std::iter::repeat_n(Matrix::zeros(n, n), order)).collect(),
        }
    }

    /// `Id + φ_1 t`, padded with zeros up to `order`.
    pub fn first_order(phi1: &Matrix, order: usize) -> Result<Self> {
        let n = phi1.rows();
        let mut maps = FormalIsomorphism::identity(n, order.max(1)).maps;
        maps[1] = phi1.clone();
        FormalIsomorphism::new(maps)
    }

    pub fn order(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// The inverse series, truncated at the same order.
    pub fn inverse(&self) -> FormalIsomorphism {
        let n = self.maps[0].rows();
        let mut inv: Vec<Matrix> = vec![Matrix::identity(n)];
        for k in 1..=self.order() {
            let mut acc = Matrix::zeros(n, n);
            for i in 1..=k {
                acc = &acc - &(&self.maps[i] * &inv[k - i]);
            }
            inv.push(acc);
        }
        FormalIsomorphism { maps: inv }
    }

    /// Composition `self ∘ other`, truncated.
    pub fn compose(&self, other: &FormalIsomorphism) -> Result<FormalIsomorphism> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        let n = self.maps[0].rows();
        let maps = (0..=self.order())
            .map(|k| (0..=k).fold(Matrix::zeros(n, n), |acc, i| &acc + &(&self.maps[i] * &other.maps[k - i])))
            .collect();
        Ok(FormalIsomorphism { maps })
    }
}

/// The deformation `(F', G', T')` with `φ_t ∘ F_t = F'_t ∘ (φ_t ⊗ φ_t)`,
/// `φ_t ∘ G_t = G'_t ∘ (φ_t ⊗ φ_t ⊗ φ_t)` and `T'_t ∘ φ_t = φ_t ∘ T_t`.
/// To first order the infinitesimals satisfy `c − c' = d¹(φ_1)`.
pub fn apply_equivalence(def: &TruncatedDeformation, iso: &FormalIsomorphism) -> Result<TruncatedDeformation> {
    if def.order() != iso.order() {
        return Err(Error::OrderMismatch(def.order(), iso.order()));
    }
    let n = def.dim();
    if iso.maps[0].rows() != n {
        return Err(Error::DimMismatch { context: "formal isomorphism", expected: n, found: iso.maps[0].rows() });
    }
    let order = def.order();
    let phi = &iso.maps;
    let psi = iso.inverse().maps;
    let pull: Vec<Series> = (0..n)
        .map(|i| {
            let mut s = zero_series(n, order);
            s[0][i] = Scalar::one();
            apply_series(&psi, &s)
        })
        .collect();
    let mut binary: Vec<Bilinear> = vec![Bilinear::zeros(n, n); order + 1];
    let mut ternary: Vec<Trilinear> = vec![Trilinear::zeros(n, n); order + 1];
    for i in 0..n {
        for j in 0..n {
            let v = apply_series(phi, &def.f(&pull[i], &pull[j]));
            for (k, coeff) in v.iter().enumerate() {
                for (l, c) in coeff.iter().enumerate() {
                    binary[k].set(i, j, l, c.clone());
                }
            }
            for z in 0..n {
                let v = apply_series(phi, &def.g(&pull[i], &pull[j], &pull[z]));
                for (k, coeff) in v.iter().enumerate() {
                    for (l, c) in coeff.iter().enumerate() {
                        ternary[k].set(i, j, z, l, c.clone());
                    }
                }
            }
        }
    }
    let operator: Vec<Matrix> = (0..=order)
        .map(|k| {
            let mut acc = Matrix::zeros(n, n);
            for a in 0..=k {
                for b in 0..=k - a {
                    acc = &acc + &(&(&phi[a] * &def.operator[b]) * &psi[k - a - b]);
                }
            }
            acc
        })
        .collect();
    Ok(TruncatedDeformation { binary, ternary, operator, weight: def.weight.clone() })
}

/// Removes the first-order term of a deformation whose infinitesimal is a
/// coboundary `d¹(φ_1)`. Returns `φ_t = Id − φ_1 t` together with the
/// deformation `D'` it carries onto the given one (`apply_equivalence(D', φ_t) = D`);
/// the order-1 terms of `D'` vanish.
pub fn trivialize_first_order(
    a: &LyAlgebra,
    r: &ReynoldsOperator,
    def: &TruncatedDeformation,
) -> Result<(FormalIsomorphism, TruncatedDeformation)> {
    let ctx = CohomologyContext::new(a, r, &adjoint_rep(a, Some(r)))?;
    trivialize_with(&ctx, def)
}

/// As [`trivialize_first_order`], reusing an existing context built with
/// adjoint coefficients.
pub fn trivialize_with(
    ctx: &CohomologyContext,
    def: &TruncatedDeformation,
) -> Result<(FormalIsomorphism, TruncatedDeformation)> {
    let n = def.dim();
    if ctx.layout().n != n || ctx.layout().m != n {
        return Err(Error::IncompatibleData("context must use adjoint coefficients of the base algebra".into()));
    }
    let c = def.infinitesimal()?;
    let pre = ctx.coboundary_preimage(ComplexKind::Rly, 2, &c.coords())?.ok_or(Error::NotCoboundary)?;
    let phi1 = Cochain::from_coords(n, n, 1, pre)?.linear_map()?;
    let iso = FormalIsomorphism::first_order(&phi1.scale(&-Scalar::one()), def.order())?;
    let trivial = apply_equivalence(def, &iso.inverse())?;
    if !trivial.is_trivial_through(1) {
        return Err(Error::InternalInconsistency("transported deformation keeps a first-order term".into()));
    }
    Ok((iso, trivial))
}

#[cfg(test)]
mod tests;

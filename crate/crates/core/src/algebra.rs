//! Finite-dimensional Lie-Yamaguti algebras given by structure constants.
//!
//! A Lie-Yamaguti algebra carries a binary bracket `[x, y]` and a ternary
//! bracket `{x, y, z}` subject to six identities:
//!
//! * LY1 `[x, y] = −[y, x]`
//! * LY2 `{x, y, z} = −{y, x, z}`
//! * LY3 `↻[[x, y], z] + ↻{x, y, z} = 0`
//! * LY4 `↻{[x, y], z, a} = 0`
//! * LY5 `{a, b, [x, y]} = [{a, b, x}, y] + [x, {a, b, y}]`
//! * LY6 `{a, b, {x, y, z}} = {{a, b, x}, y, z} + {x, {a, b, y}, z} + {x, y, {a, b, z}}`
//!
//! where `↻` sums over the cyclic permutations of `x, y, z`. LY1 and LY2 are
//! enforced when an algebra is built; the rest are checked by
//! [`LyAlgebra::verify_axioms`]. All identities are multilinear, so checking
//! them on basis tuples is complete.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::report::{check_vector_identity, AxiomReport, Check, Witness};
use crate::tensor::{add_into, is_zero_vec, unit, Bilinear, Trilinear};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyAlgebra {
    dim: usize,
    binary: Bilinear,
    ternary: Trilinear,
    labels: Vec<String>,
}

pub(crate) fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LyAlgebra {
    /// Builds an algebra, rejecting brackets that break LY1 or LY2.
    pub fn new(binary: Bilinear, ternary: Trilinear) -> Result<Self> {
        let dim = binary.in_dim();
        for (what, found) in [
            ("binary output", binary.out_dim()),
            ("ternary input", ternary.in_dim()),
            ("ternary output", ternary.out_dim()),
        ] {
            if found != dim {
                return Err(Error::DimMismatch { context: what, expected: dim, found });
            }
        }
        if let Some(tuple) = binary.antisymmetry_violation() {
            return Err(Error::NotAntisymmetric { what: "binary bracket", tuple });
        }
        if let Some(tuple) = ternary.antisymmetry_violation() {
            return Err(Error::NotAntisymmetric { what: "ternary bracket", tuple });
        }
        Ok(LyAlgebra { dim, binary, ternary, labels: default_labels(dim) })
    }

    pub fn abelian(dim: usize) -> Self {
        LyAlgebra::new(Bilinear::zeros(dim, dim), Trilinear::zeros(dim, dim)).expect("zero brackets are antisymmetric")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimMismatch { context: "basis labels", expected: self.dim, found: labels.len() });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn binary(&self) -> &Bilinear {
        &self.binary
    }

    pub fn ternary(&self) -> &Trilinear {
        &self.ternary
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimMismatch { context: "element coordinates", expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    /// `[x, y]`.
    pub fn bracket2(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.binary.eval(x, y))
    }

    /// `{x, y, z}`.
    pub fn bracket3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_len(x)?;
        self.check_len(y)?;
        self.check_len(z)?;
        Ok(self.ternary.eval(x, y, z))
    }

    pub(crate) fn br2(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.binary.eval(x, y)
    }

    pub(crate) fn br3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.ternary.eval(x, y, z)
    }

    pub(crate) fn basis(&self, i: usize) -> Vec<Scalar> {
        unit(self.dim, i)
    }

    /// Matrix of `z ↦ [e_i, z]`.
    pub fn ad(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |r, c| self.binary.coeff(i, c, r).clone())
    }

    /// Checks LY1 through LY6 on all basis tuples.
    pub fn verify_axioms(&self) -> AxiomReport {
        let n = self.dim;
        let e: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis(i)).collect();
        let mut report = AxiomReport::new("Lie-Yamaguti axioms");
        report.push(match self.binary.antisymmetry_violation() {
            None => Check::pass("LY1"),
            Some(t) => {
                let r: Vec<Scalar> =
                    self.binary.get(t[0], t[1]).iter().zip(self.binary.get(t[1], t[0])).map(|(a, b)| a + b).collect();
                Check::fail("LY1", Witness { slots: vec!["x".into(), "y".into()], tuple: t, residual: r })
            }
        });
        report.push(match self.ternary.antisymmetry_violation() {
            None => Check::pass("LY2"),
            Some(t) => {
                let r: Vec<Scalar> = self
                    .ternary
                    .get(t[0], t[1], t[2])
                    .iter()
                    .zip(self.ternary.get(t[1], t[0], t[2]))
                    .map(|(a, b)| a + b)
                    .collect();
                Check::fail("LY2", Witness { slots: vec!["x".into(), "y".into(), "z".into()], tuple: t, residual: r })
            }
        });
        report.push(check_vector_identity("LY3", &["x", "y", "z"], &[n; 3], |t| {
            let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
            let mut r = self.br2(&self.br2(x, y), z);
            add_into(&mut r, &self.br2(&self.br2(z, x), y));
            add_into(&mut r, &self.br2(&self.br2(y, z), x));
            add_into(&mut r, &self.br3(x, y, z));
            add_into(&mut r, &self.br3(z, x, y));
            add_into(&mut r, &self.br3(y, z, x));
            r
        }));
        report.push(check_vector_identity("LY4", &["x", "y", "z", "a"], &[n; 4], |t| {
            let (x, y, z, a) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
            let mut r = self.br3(&self.br2(x, y), z, a);
            add_into(&mut r, &self.br3(&self.br2(z, x), y, a));
            add_into(&mut r, &self.br3(&self.br2(y, z), x, a));
            r
        }));
        report.push(check_vector_identity("LY5", &["a", "b", "x", "y"], &[n; 4], |t| {
            let (a, b, x, y) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
            let lhs = self.br3(a, b, &self.br2(x, y));
            let mut rhs = self.br2(&self.br3(a, b, x), y);
            add_into(&mut rhs, &self.br2(x, &self.br3(a, b, y)));
            lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect()
        }));
        report.push(check_vector_identity("LY6", &["a", "b", "x", "y", "z"], &[n; 5], |t| {
            let (a, b, x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]], &e[t[4]]);
            let lhs = self.br3(a, b, &self.br3(x, y, z));
            let mut rhs = self.br3(&self.br3(a, b, x), y, z);
            add_into(&mut rhs, &self.br3(x, &self.br3(a, b, y), z));
            add_into(&mut rhs, &self.br3(x, y, &self.br3(a, b, z)));
            lhs.iter().zip(&rhs).map(|(l, r)| l - r).collect()
        }));
        report
    }

    /// The Lie-Yamaguti algebra of a Lie algebra: `{x, y, z} = [[x, y], z]`.
    pub fn from_lie_algebra(binary: Bilinear) -> Result<Self> {
        check_lie(&binary)?;
        let n = binary.in_dim();
        let ternary = Trilinear::from_fn(n, n, |i, j, k| binary.eval(binary.get(i, j), &unit(n, k)));
        LyAlgebra::new(binary, ternary)
    }

    /// The Lie-Yamaguti algebra of a left Leibniz algebra `(L, ⋆)`:
    /// `[x, y] = x⋆y − y⋆x` and `{x, y, z} = −(x⋆y)⋆z`.
    pub fn from_leibniz(star: Bilinear) -> Result<Self> {
        let n = star.in_dim();
        if star.out_dim() != n {
            return Err(Error::DimMismatch { context: "Leibniz product output", expected: n, found: star.out_dim() });
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                    let lhs = star.eval(&x, &star.eval(&y, &z));
                    let mut rhs = star.eval(&star.eval(&x, &y), &z);
                    add_into(&mut rhs, &star.eval(&y, &star.eval(&x, &z)));
                    if lhs != rhs {
                        return Err(Error::NotLeibniz(format!("x⋆(y⋆z) ≠ (x⋆y)⋆z + y⋆(x⋆z) at basis ({i}, {j}, {k})")));
                    }
                }
            }
        }
        let binary =
            Bilinear::from_fn(n, n, |i, j| star.get(i, j).iter().zip(star.get(j, i)).map(|(a, b)| a - b).collect());
        let ternary =
            Trilinear::from_fn(n, n, |i, j, k| star.eval(star.get(i, j), &unit(n, k)).iter().map(|a| -a).collect());
        LyAlgebra::new(binary, ternary)
    }

    /// The algebra induced on `M` by a reductive splitting `L = N ⊕ M` of a
    /// Lie algebra, where `N` and `M` are spanned by the given basis vectors:
    /// `[x, y]_M = π_M [x, y]` and `{x, y, z}_M = [π_N [x, y], z]`.
    ///
    /// Requires `[N, N] ⊆ N` and `[N, M] ⊆ M`.
    pub fn from_reductive_pair(lie: &Bilinear, n_part: &[usize], m_part: &[usize]) -> Result<Self> {
        check_lie(lie)?;
        let dim = lie.in_dim();
        let mut seen = vec![0usize; dim];
        for &i in n_part.iter().chain(m_part) {
            if i >= dim {
                return Err(Error::IndexOutOfRange { index: i, dim });
            }
            seen[i] += 1;
        }
        if seen.iter().any(|&c| c != 1) {
            return Err(Error::InvalidInput("N and M indices must partition the basis".into()));
        }
        let in_n = |k: usize| n_part.contains(&k);
        for &i in n_part {
            for &j in n_part {
                if lie.get(i, j).iter().enumerate().any(|(k, c)| !c.is_zero() && !in_n(k)) {
                    return Err(Error::NotReductive(format!("[N, N] ⊄ N at basis pair ({i}, {j})")));
                }
            }
            for &j in m_part {
                if lie.get(i, j).iter().enumerate().any(|(k, c)| !c.is_zero() && in_n(k)) {
                    return Err(Error::NotReductive(format!("[N, M] ⊄ M at basis pair ({i}, {j})")));
                }
            }
        }
        let d = m_part.len();
        let restrict_m = |v: &[Scalar]| -> Vec<Scalar> { m_part.iter().map(|&k| v[k].clone()).collect() };
        let binary = Bilinear::from_fn(d, d, |a, b| restrict_m(lie.get(m_part[a], m_part[b])));
        let ternary = Trilinear::from_fn(d, d, |a, b, c| {
            let mut n_comp = lie.get(m_part[a], m_part[b]).to_vec();
            for (k, x) in n_comp.iter_mut().enumerate() {
                if !in_n(k) {
                    *x = Scalar::zero();
                }
            }
            restrict_m(&lie.eval(&n_comp, &unit(dim, m_part[c])))
        });
        LyAlgebra::new(binary, ternary)
    }

    /// The same algebra in the basis given by the columns of `p`:
    /// `[x, y]' = p⁻¹ [p x, p y]`.
    pub fn transport(&self, p: &Matrix) -> Result<LyAlgebra> {
        if p.rows() != self.dim || !p.is_square() {
            return Err(Error::DimMismatch { context: "change of basis", expected: self.dim, found: p.rows() });
        }
        let inv = p.inverse().ok_or(Error::SingularMatrix)?;
        let binary = self.binary.conjugate(&inv, p, p);
        let ternary = self.ternary.conjugate(&inv, p, p, p);
        LyAlgebra::new(binary, ternary)?.with_labels(self.labels.clone())
    }

    /// `true` when both brackets vanish identically.
    pub fn is_abelian(&self) -> bool {
        self.binary.is_zero() && self.ternary.is_zero()
    }

    /// Direct sum with an abelian algebra of dimension `k`.
    pub fn direct_sum_abelian(&self, k: usize) -> LyAlgebra {
        let n = self.dim;
        let t = n + k;
        let pad = |v: &[Scalar]| -> Vec<Scalar> {
            let mut out = v.to_vec();
            out.resize(t, Scalar::zero());
            out
        };
        let binary =
            Bilinear::from_fn(
                t,
                t,
                |i, j| {
                    if i < n && j < n {
                        pad(self.binary.get(i, j))
                    } else {
                        vec![Scalar::zero(); t]
                    }
                },
            );
        let ternary = Trilinear::from_fn(t, t, |i, j, l| {
            if i < n && j < n && l < n {
                pad(self.ternary.get(i, j, l))
            } else {
                vec![Scalar::zero(); t]
            }
        });
        LyAlgebra::new(binary, ternary).expect("direct sum keeps antisymmetry")
    }
}

fn check_lie(binary: &Bilinear) -> Result<()> {
    let n = binary.in_dim();
    if binary.out_dim() != n {
        return Err(Error::DimMismatch { context: "Lie bracket output", expected: n, found: binary.out_dim() });
    }
    if let Some(t) = binary.antisymmetry_violation() {
        return Err(Error::NotLieAlgebra(format!("bracket not antisymmetric at basis pair ({}, {})", t[0], t[1])));
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (unit(n, i), unit(n, j), unit(n, k));
                let mut r = binary.eval(&binary.eval(&x, &y), &z);
                add_into(&mut r, &binary.eval(&binary.eval(&y, &z), &x));
                add_into(&mut r, &binary.eval(&binary.eval(&z, &x), &y));
                if !is_zero_vec(&r) {
                    return Err(Error::NotLieAlgebra(format!("Jacobi identity fails at basis ({i}, {j}, {k})")));
                }
            }
        }
    }
    Ok(())
}

/// Builds a bilinear map from sparse entries `(i, j, k, c)` meaning
/// `b(e_i, e_j)` has coefficient `c` on `e_k`, filling in `b(e_j, e_i) = −b(e_i, e_j)`.
pub fn antisymmetric_bilinear(dim: usize, entries: &[(usize, usize, usize, Scalar)]) -> Bilinear {
    let mut b = Bilinear::zeros(dim, dim);
    for (i, j, k, c) in entries {
        b.set(*i, *j, *k, c.clone());
        b.set(*j, *i, *k, -c);
    }
    b
}

/// Trilinear counterpart of [`antisymmetric_bilinear`]: antisymmetric in the
/// first two slots.
pub fn antisymmetric_trilinear(dim: usize, entries: &[(usize, usize, usize, usize, Scalar)]) -> Trilinear {
    let mut t = Trilinear::zeros(dim, dim);
    for (i, j, k, l, c) in entries {
        t.set(*i, *j, *k, *l, c.clone());
        t.set(*j, *i, *k, *l, -c);
    }
    t
}

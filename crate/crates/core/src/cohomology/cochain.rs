//! Cochains stored as flat coordinate vectors.
//!
//! A degree-1 cochain is a linear map `h: L → V`, stored with `h(e_i)` at
//! offset `i·m`. A degree-`(k+1)` cochain is a pair `(f, g)` with
//! `f: (∧²L)^{⊗k} → V` and `g: (∧²L)^{⊗k} ⊗ L → V`, both given on tuples
//! of basis wedges `e_a ∧ e_b` (`a < b`, lexicographic). The `f` block comes
//! first; inside each block tuples are enumerated lexicographically with the
//! `L` slot of `g` last, and each value occupies `m` consecutive coordinates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use crate::tensor::{Bilinear, Trilinear};

/// Index arithmetic for cochains over an `n`-dimensional algebra with values
/// in an `m`-dimensional module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub n: usize,
    pub m: usize,
    pairs: Vec<(usize, usize)>,
}

impl Layout {
    pub fn new(n: usize, m: usize) -> Self {
        let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Layout { n, m, pairs }
    }

    /// Number of basis wedges, `n(n−1)/2`.
    pub fn wedges(&self) -> usize {
        self.pairs.len()
    }

    pub fn pair(&self, w: usize) -> (usize, usize) {
        self.pairs[w]
    }

    pub fn wedge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a >= b || b >= self.n {
            return None;
        }
        // Pairs starting at a' < a number Σ (n − 1 − a').
        Some(a * (2 * self.n - a - 1) / 2 + (b - a - 1))
    }

    fn tuples(&self, k: usize) -> usize {
        self.wedges().pow(k as u32)
    }

    /// Length of the `f` block in degree `k + 1`.
    pub fn f_len(&self, k: usize) -> usize {
        self.m * self.tuples(k)
    }

    /// Length of the `g` block in degree `k + 1`.
    pub fn g_len(&self, k: usize) -> usize {
        self.m * self.tuples(k) * self.n
    }

    /// Dimension of the degree-`p` cochain space.
    pub fn dim(&self, p: usize) -> usize {
        match p {
            0 => 0,
            1 => self.m * self.n,
            _ => self.f_len(p - 1) + self.g_len(p - 1),
        }
    }

    /// Coordinates of `x ∧ y` in the wedge basis.
    pub fn wedge(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.pairs.iter().map(|&(a, b)| &(&x[a] * &y[b]) - &(&x[b] * &y[a])).collect()
    }

    pub fn unit_wedge(&self, w: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.wedges()];
        v[w] = Scalar::one();
        v
    }

    /// Decodes a tuple index into `k` wedge indices.
    pub fn decode(&self, mut index: usize, k: usize) -> Vec<usize> {
        let w = self.wedges();
        let mut out = vec![0; k];
        for slot in (0..k).rev() {
            out[slot] = index % w;
            index /= w;
        }
        out
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &t| acc * self.wedges() + t)
    }

    /// Value offsets and coefficients such that `h(v) = Σ c · coords[o..o+m]`.
    pub(crate) fn h_terms(&self, v: &[Scalar]) -> Vec<(usize, Scalar)> {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i * self.m, c.clone())).collect()
    }

    fn tuple_terms(&self, wedges: &[&[Scalar]]) -> Vec<(usize, Scalar)> {
        let mut cur = vec![(0usize, Scalar::one())];
        for wv in wedges {
            let mut next = Vec::new();
            for (idx, c) in &cur {
                for (w, cw) in wv.iter().enumerate() {
                    if !cw.is_zero() {
                        next.push((idx * self.wedges() + w, c * cw));
                    }
                }
            }
            cur = next;
        }
        cur
    }

    /// Offsets for `f(W_1, …, W_k)` with arbitrary wedge-coordinate vectors.
    pub(crate) fn f_terms(&self, wedges: &[&[Scalar]]) -> Vec<(usize, Scalar)> {
        self.tuple_terms(wedges).into_iter().map(|(i, c)| (i * self.m, c)).collect()
    }

    /// Offsets for `g(W_1, …, W_k, z)`.
    pub(crate) fn g_terms(&self, wedges: &[&[Scalar]], z: &[Scalar]) -> Vec<(usize, Scalar)> {
        let base = self.f_len(wedges.len());
        let mut out = Vec::new();
        for (i, c) in self.tuple_terms(wedges) {
            for (l, cz) in z.iter().enumerate() {
                if !cz.is_zero() {
                    out.push((base + (i * self.n + l) * self.m, &c * cz));
                }
            }
        }
        out
    }
}

/// An element of the degree-`p` cochain space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cochain {
    degree: usize,
    algebra_dim: usize,
    module_dim: usize,
    coords: Vec<Scalar>,
}

impl Cochain {
    pub fn zero(algebra_dim: usize, module_dim: usize, degree: usize) -> Self {
        let len = Layout::new(algebra_dim, module_dim).dim(degree);
        Cochain { degree, algebra_dim, module_dim, coords: vec![Scalar::zero(); len] }
    }

    pub fn from_coords(algebra_dim: usize, module_dim: usize, degree: usize, coords: Vec<Scalar>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::DegreeOutOfRange { degree, max: usize::MAX });
        }
        let len = Layout::new(algebra_dim, module_dim).dim(degree);
        if coords.len() != len {
            return Err(Error::DimMismatch { context: "cochain coordinates", expected: len, found: coords.len() });
        }
        Ok(Cochain { degree, algebra_dim, module_dim, coords })
    }

    /// A degree-1 cochain from its `m × n` matrix (column `i` is `h(e_i)`).
    pub fn from_linear_map(h: &Matrix) -> Self {
        let (m, n) = (h.rows(), h.cols());
        let coords = (0..n).flat_map(|i| h.column(i)).collect();
        Cochain { degree: 1, algebra_dim: n, module_dim: m, coords }
    }

    /// The `m × n` matrix of a degree-1 cochain.
    pub fn linear_map(&self) -> Result<Matrix> {
        if self.degree != 1 {
            return Err(Error::ShapeMismatch(format!("degree-{} cochain is not a linear map", self.degree)));
        }
        let (n, m) = (self.algebra_dim, self.module_dim);
        Ok(Matrix::from_fn(m, n, |r, c| self.coords[c * m + r].clone()))
    }

    /// A degree-2 cochain from a bilinear `f` antisymmetric in its arguments
    /// and a trilinear `g` antisymmetric in its first two.
    pub fn from_maps(f: &Bilinear, g: &Trilinear) -> Result<Self> {
        let (n, m) = (f.in_dim(), f.out_dim());
        if g.in_dim() != n || g.out_dim() != m {
            return Err(Error::ShapeMismatch("binary and ternary parts have different shapes".into()));
        }
        if let Some(tuple) = f.antisymmetry_violation() {
            return Err(Error::NotAntisymmetric { what: "binary cochain part", tuple });
        }
        if let Some(tuple) = g.antisymmetry_violation() {
            return Err(Error::NotAntisymmetric { what: "ternary cochain part", tuple });
        }
        let layout = Layout::new(n, m);
        let mut coords = Vec::with_capacity(layout.dim(2));
        for w in 0..layout.wedges() {
            let (a, b) = layout.pair(w);
            coords.extend_from_slice(f.get(a, b));
        }
        for w in 0..layout.wedges() {
            let (a, b) = layout.pair(w);
            for c in 0..n {
                coords.extend_from_slice(g.get(a, b, c));
            }
        }
        Ok(Cochain { degree: 2, algebra_dim: n, module_dim: m, coords })
    }

    /// The binary and ternary maps of a degree-2 cochain, extended by antisymmetry.
    pub fn maps(&self) -> Result<(Bilinear, Trilinear)> {
        if self.degree != 2 {
            return Err(Error::ShapeMismatch(format!("degree-{} cochain is not a pair of maps", self.degree)));
        }
        let (n, m) = (self.algebra_dim, self.module_dim);
        let layout = Layout::new(n, m);
        let value = |a: usize, b: usize, offset: &dyn Fn(usize) -> usize| -> Vec<Scalar> {
            if a == b {
                return vec![Scalar::zero(); m];
            }
            let (lo, hi, sign) = if a < b { (a, b, false) } else { (b, a, true) };
            let o = offset(layout.wedge_index(lo, hi).expect("valid pair"));
            let v = &self.coords[o..o + m];
            if sign {
                v.iter().map(|x| -x).collect()
            } else {
                v.to_vec()
            }
        };
        let f = Bilinear::from_fn(n, m, |a, b| value(a, b, &|w| w * m));
        let g_base = layout.f_len(1);
        let g = Trilinear::from_fn(n, m, |a, b, c| value(a, b, &|w| g_base + (w * n + c) * m));
        Ok((f, g))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    fn same_shape(&self, other: &Cochain) -> Result<()> {
        if (self.degree, self.algebra_dim, self.module_dim) != (other.degree, other.algebra_dim, other.module_dim) {
            return Err(Error::ShapeMismatch("cochains of different shapes".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Cochain { coords, ..self.clone() })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(Cochain { coords, ..self.clone() })
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain { coords: self.coords.iter().map(|a| c * a).collect(), ..self.clone() }
    }
}

/// An element of the mapping-cone complex: a cochain of degree `p` together
/// with a tail of degree `p − 1` (absent in degree 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RlyCochain {
    pub top: Cochain,
    pub tail: Option<Cochain>,
}

impl RlyCochain {
    pub fn new(top: Cochain, tail: Option<Cochain>) -> Result<Self> {
        match (&tail, top.degree) {
            (None, 1) => {}
            (Some(t), p) if p >= 2 && t.degree + 1 == p => {
                if (t.algebra_dim, t.module_dim) != (top.algebra_dim, top.module_dim) {
                    return Err(Error::ShapeMismatch("top and tail over different spaces".into()));
                }
            }
            _ => {
                return Err(Error::ShapeMismatch(
                    "a degree-p cochain needs a degree-(p−1) tail exactly when p ≥ 2".into(),
                ))
            }
        }
        Ok(RlyCochain { top, tail })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize, degree: usize) -> Self {
        let tail = (degree >= 2).then(|| Cochain::zero(algebra_dim, module_dim, degree - 1));
        RlyCochain { top: Cochain::zero(algebra_dim, module_dim, degree), tail }
    }

    pub fn degree(&self) -> usize {
        self.top.degree
    }

    /// Top coordinates followed by tail coordinates.
    pub fn coords(&self) -> Vec<Scalar> {
        let mut out = self.top.coords.clone();
        if let Some(t) = &self.tail {
            out.extend_from_slice(&t.coords);
        }
        out
    }

    pub fn from_coords(algebra_dim: usize, module_dim: usize, degree: usize, coords: Vec<Scalar>) -> Result<Self> {
        let layout = Layout::new(algebra_dim, module_dim);
        let top_len = layout.dim(degree);
        let tail_len = if degree >= 2 { layout.dim(degree - 1) } else { 0 };
        if coords.len() != top_len + tail_len {
            return Err(Error::DimMismatch {
                context: "mapping-cone cochain coordinates",
                expected: top_len + tail_len,
                found: coords.len(),
            });
        }
        let mut top = coords;
        let tail = top.split_off(top_len);
        let top = Cochain::from_coords(algebra_dim, module_dim, degree, top)?;
        let tail =
            if degree >= 2 { Some(Cochain::from_coords(algebra_dim, module_dim, degree - 1, tail)?) } else { None };
        Ok(RlyCochain { top, tail })
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_zero() && self.tail.as_ref().is_none_or(Cochain::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    #[test]
    fn layout_dimensions() {
        let l = Layout::new(2, 2);
        assert_eq!((l.dim(1), l.dim(2), l.dim(3), l.dim(4)), (4, 6, 6, 6));
        let l = Layout::new(3, 3);
        assert_eq!(l.wedges(), 3);
        assert_eq!(l.dim(2), 3 * 3 + 3 * 3 * 3);
        assert_eq!(l.dim(3), 3 * 9 * 4);
    }

    #[test]
    fn wedge_indices() {
        let l = Layout::new(4, 1);
        for w in 0..l.wedges() {
            let (a, b) = l.pair(w);
            assert_eq!(l.wedge_index(a, b), Some(w));
        }
        assert_eq!(l.wedge_index(1, 1), None);
        assert_eq!(
            l.wedge(&[qi(1), qi(2), qi(0), qi(0)], &[qi(0), qi(1), qi(3), qi(0)]),
            vec![qi(1), qi(3), qi(0), qi(6), qi(0), qi(0)]
        );
        assert_eq!(l.decode(l.encode(&[3, 0, 5]), 3), vec![3, 0, 5]);
    }

    #[test]
    fn maps_round_trip() {
        let mut f = Bilinear::zeros(2, 1);
        f.set(0, 1, 0, qi(3));
        f.set(1, 0, 0, qi(-3));
        let mut g = Trilinear::zeros(2, 1);
        g.set(0, 1, 1, 0, qi(2));
        g.set(1, 0, 1, 0, qi(-2));
        let c = Cochain::from_maps(&f, &g).unwrap();
        assert_eq!(c.coords(), &[qi(3), qi(0), qi(2)]);
        assert_eq!(c.maps().unwrap(), (f.clone(), g));
        let mut bad = f;
        bad.set(1, 0, 0, qi(1));
        assert!(Cochain::from_maps(&bad, &Trilinear::zeros(2, 1)).is_err());
    }

    #[test]
    fn linear_map_round_trip() {
        let h = Matrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6]]);
        let c = Cochain::from_linear_map(&h);
        assert_eq!(c.coords()[..2], [qi(1), qi(4)]);
        assert_eq!(c.linear_map().unwrap(), h);
    }

    #[test]
    fn rly_cochain_shapes() {
        let z = RlyCochain::zero(2, 2, 2);
        assert_eq!(z.coords().len(), 10);
        assert!(RlyCochain::new(Cochain::zero(2, 2, 1), Some(Cochain::zero(2, 2, 1))).is_err());
        assert!(RlyCochain::new(Cochain::zero(2, 2, 3), Some(Cochain::zero(2, 2, 1))).is_err());
        let c = RlyCochain::from_coords(2, 2, 3, (0..12).map(qi).collect()).unwrap();
        assert_eq!(c.tail.as_ref().unwrap().degree(), 2);
        assert_eq!(c.coords(), (0..12).map(qi).collect::<Vec<_>>());
    }
}

//! Dense bilinear and trilinear maps given by structure constants.

use serde::{Deserialize, Serialize};

use crate::linalg::{Matrix, Scalar};

pub(crate) fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// `out += c · v`.
pub(crate) fn axpy(out: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += c * x;
        }
    }
}

pub(crate) fn add_into(out: &mut [Scalar], v: &[Scalar]) {
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += x;
        }
    }
}

pub(crate) fn vsub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn vscale(c: &Scalar, v: &[Scalar]) -> Vec<Scalar> {
    v.iter().map(|x| c * x).collect()
}

pub(crate) fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// A bilinear map `K^n × K^n → K^m`; `get(i, j)` is the image of `(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bilinear {
    in_dim: usize,
    out_dim: usize,
    data: Vec<Scalar>,
}

/// A trilinear map `K^n × K^n × K^n → K^m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trilinear {
    in_dim: usize,
    out_dim: usize,
    data: Vec<Scalar>,
}

impl Bilinear {
    pub fn zeros(in_dim: usize, out_dim: usize) -> Self {
        Bilinear { in_dim, out_dim, data: vec![Scalar::zero(); in_dim * in_dim * out_dim] }
    }

    pub fn from_fn(in_dim: usize, out_dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Scalar>) -> Self {
        let mut data = Vec::with_capacity(in_dim * in_dim * out_dim);
        for i in 0..in_dim {
            for j in 0..in_dim {
                let v = f(i, j);
                assert_eq!(v.len(), out_dim, "bilinear value has wrong length");
                data.extend(v);
            }
        }
        Bilinear { in_dim, out_dim, data }
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn get(&self, i: usize, j: usize) -> &[Scalar] {
        let o = (i * self.in_dim + j) * self.out_dim;
        &self.data[o..o + self.out_dim]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        let o = (i * self.in_dim + j) * self.out_dim + k;
        self.data[o] = value;
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.in_dim + j) * self.out_dim + k]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.out_dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.get(i, j));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    /// First `(i, j)` with `get(i, j) ≠ −get(j, i)`.
    pub fn antisymmetry_violation(&self) -> Option<Vec<usize>> {
        for i in 0..self.in_dim {
            for j in i..self.in_dim {
                let a = self.get(i, j);
                let b = self.get(j, i);
                if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                    return Some(vec![i, j]);
                }
            }
        }
        None
    }

    pub fn add(&self, other: &Bilinear) -> Bilinear {
        assert_eq!((self.in_dim, self.out_dim), (other.in_dim, other.out_dim));
        Bilinear {
            in_dim: self.in_dim,
            out_dim: self.out_dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Bilinear) -> Bilinear {
        assert_eq!((self.in_dim, self.out_dim), (other.in_dim, other.out_dim));
        Bilinear {
            in_dim: self.in_dim,
            out_dim: self.out_dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Bilinear {
        Bilinear { in_dim: self.in_dim, out_dim: self.out_dim, data: self.data.iter().map(|a| c * a).collect() }
    }

    /// `(x, y) ↦ post · b(pre_x · x, pre_y · y)`.
    pub fn conjugate(&self, post: &Matrix, pre_x: &Matrix, pre_y: &Matrix) -> Bilinear {
        let n = pre_x.cols();
        Bilinear::from_fn(n, post.rows(), |i, j| post.apply(&self.eval(&pre_x.column(i), &pre_y.column(j))))
    }
}

impl Trilinear {
    pub fn zeros(in_dim: usize, out_dim: usize) -> Self {
        Trilinear { in_dim, out_dim, data: vec![Scalar::zero(); in_dim.pow(3) * out_dim] }
    }

    pub fn from_fn(in_dim: usize, out_dim: usize, mut f: impl FnMut(usize, usize, usize) -> Vec<Scalar>) -> Self {
        let mut data = Vec::with_capacity(in_dim.pow(3) * out_dim);
        for i in 0..in_dim {
            for j in 0..in_dim {
                for k in 0..in_dim {
                    let v = f(i, j, k);
                    assert_eq!(v.len(), out_dim, "trilinear value has wrong length");
                    data.extend(v);
                }
            }
        }
        Trilinear { in_dim, out_dim, data }
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        let o = ((i * self.in_dim + j) * self.in_dim + k) * self.out_dim;
        &self.data[o..o + self.out_dim]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: Scalar) {
        let o = ((i * self.in_dim + j) * self.in_dim + k) * self.out_dim + l;
        self.data[o] = value;
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.data[((i * self.in_dim + j) * self.in_dim + k) * self.out_dim + l]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.out_dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate() {
                    if zk.is_zero() {
                        continue;
                    }
                    axpy(&mut out, &(&xy * zk), self.get(i, j, k));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    /// First `(i, j, k)` with `get(i, j, k) ≠ −get(j, i, k)`.
    pub fn antisymmetry_violation(&self) -> Option<Vec<usize>> {
        for i in 0..self.in_dim {
            for j in i..self.in_dim {
                for k in 0..self.in_dim {
                    let a = self.get(i, j, k);
                    let b = self.get(j, i, k);
                    if a.iter().zip(b).any(|(x, y)| !(x + y).is_zero()) {
                        return Some(vec![i, j, k]);
                    }
                }
            }
        }
        None
    }

    pub fn add(&self, other: &Trilinear) -> Trilinear {
        assert_eq!((self.in_dim, self.out_dim), (other.in_dim, other.out_dim));
        Trilinear {
            in_dim: self.in_dim,
            out_dim: self.out_dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Trilinear) -> Trilinear {
        assert_eq!((self.in_dim, self.out_dim), (other.in_dim, other.out_dim));
        Trilinear {
            in_dim: self.in_dim,
            out_dim: self.out_dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Trilinear {
        Trilinear { in_dim: self.in_dim, out_dim: self.out_dim, data: self.data.iter().map(|a| c * a).collect() }
    }

    /// `(x, y, z) ↦ post · t(pre_x · x, pre_y · y, pre_z · z)`.
    pub fn conjugate(&self, post: &Matrix, pre_x: &Matrix, pre_y: &Matrix, pre_z: &Matrix) -> Trilinear {
        let n = pre_x.cols();
        Trilinear::from_fn(n, post.rows(), |i, j, k| {
            post.apply(&self.eval(&pre_x.column(i), &pre_y.column(j), &pre_z.column(k)))
        })
    }
}

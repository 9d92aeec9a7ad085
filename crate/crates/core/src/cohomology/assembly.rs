//! Matrices of the coboundary maps and of the chain map, assembled directly
//! from the defining formulas on tuples of basis wedges.
//!
//! With `𝔛_i = x_i ∧ y_i`, `k ≥ 1` and `K = k + 1`, the coboundary of a
//! degree-`(k+1)` cochain `(f, g)` is
//!
//! ```text
//! δ_I(𝔛_1..𝔛_K) = (−1)^k (ρ(x_K) g(𝔛_1..𝔛_k, y_K) − ρ(y_K) g(𝔛_1..𝔛_k, x_K) − g(𝔛_1..𝔛_k, [x_K, y_K]))
//!               + Σ_{i≤k} (−1)^{i+1} D(𝔛_i) f(..𝔛̂_i..)
//!               + Σ_{i<j} (−1)^i f(..𝔛̂_i..𝔛'_j..)
//! δ_II(𝔛_1..𝔛_K, z) = (−1)^k (θ(y_K, z) g(𝔛_1..𝔛_k, x_K) − θ(x_K, z) g(𝔛_1..𝔛_k, y_K))
//!               + Σ_{i≤K} (−1)^{i+1} D(𝔛_i) g(..𝔛̂_i.., z)
//!               + Σ_{i<j} (−1)^i g(..𝔛̂_i..𝔛'_j.., z)
//!               + Σ_{i≤K} (−1)^i g(..𝔛̂_i.., {x_i, y_i, z})
//! ```
//!
//! where `𝔛'_j = {x_i, y_i, x_j} ∧ y_j + x_j ∧ {x_i, y_i, y_j}`.

use rayon::prelude::*;

use super::cochain::Layout;
use crate::algebra::LyAlgebra;
use crate::linalg::{Matrix, Scalar};
use crate::representation::{d_matrices, Representation};

/// The data a coboundary needs: brackets, `ρ`, `θ` and `D` on basis vectors.
pub(crate) struct Structure<'a> {
    pub alg: &'a LyAlgebra,
    pub rep: &'a Representation,
    pub ds: Vec<Matrix>,
}

impl<'a> Structure<'a> {
    pub fn new(alg: &'a LyAlgebra, rep: &'a Representation) -> Self {
        Structure { alg, rep, ds: d_matrices(alg, rep) }
    }

    fn d(&self, a: usize, b: usize) -> &Matrix {
        &self.ds[a * self.alg.dim() + b]
    }
}

/// One block of `m` rows of a matrix under construction.
struct RowBlock<'b> {
    m: usize,
    cols: usize,
    data: &'b mut [Scalar],
}

impl RowBlock<'_> {
    /// Adds `coeff · op · (Σ c · x[o..o+m])`; `op = None` is the identity.
    fn add(&mut self, op: Option<&Matrix>, coeff: &Scalar, terms: &[(usize, Scalar)]) {
        if coeff.is_zero() {
            return;
        }
        for (base, c) in terms {
            let cc = coeff * c;
            if cc.is_zero() {
                continue;
            }
            match op {
                None => {
                    for r in 0..self.m {
                        self.data[r * self.cols + base + r] += &cc;
                    }
                }
                Some(op) => {
                    for r in 0..self.m {
                        for s in 0..self.m {
                            let e = &op[(r, s)];
                            if !e.is_zero() {
                                self.data[r * self.cols + base + s] += &(&cc * e);
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Builds a matrix one block of `m` rows at a time, in parallel over blocks.
fn build(rows: usize, cols: usize, m: usize, fill: impl Fn(usize, &mut RowBlock) + Sync) -> Matrix {
    let mut data = vec![Scalar::zero(); rows * cols];
    if m > 0 && cols > 0 {
        data.par_chunks_mut(m * cols).enumerate().for_each(|(block, chunk)| {
            let mut rb = RowBlock { m, cols, data: chunk };
            fill(block, &mut rb);
        });
    }
    Matrix::new(rows, cols, data).expect("dimensions consistent")
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Matrix of `δ^p : C^p → C^{p+1}` for the given structure.
pub(crate) fn coboundary_matrix(s: &Structure, p: usize) -> Matrix {
    let n = s.alg.dim();
    let m = s.rep.module_dim();
    let layout = Layout::new(n, m);
    let rows = layout.dim(p + 1);
    let cols = layout.dim(p);
    let e: Vec<Vec<Scalar>> = (0..n).map(|i| s.alg.basis(i)).collect();
    let one = Scalar::one();
    let neg = -Scalar::one();
    if p == 1 {
        let f_blocks = layout.wedges();
        return build(rows, cols, m, |block, rb| {
            if block < f_blocks {
                let (a, b) = layout.pair(block);
                rb.add(Some(s.rep.rho(a)), &one, &layout.h_terms(&e[b]));
                rb.add(Some(s.rep.rho(b)), &neg, &layout.h_terms(&e[a]));
                rb.add(None, &neg, &layout.h_terms(s.alg.binary().get(a, b)));
            } else {
                let g = block - f_blocks;
                let (a, b) = layout.pair(g / n);
                let c = g % n;
                rb.add(Some(s.d(a, b)), &one, &layout.h_terms(&e[c]));
                rb.add(Some(s.rep.theta(b, c)), &one, &layout.h_terms(&e[a]));
                rb.add(Some(s.rep.theta(a, c)), &neg, &layout.h_terms(&e[b]));
                rb.add(None, &neg, &layout.h_terms(s.alg.ternary().get(a, b, c)));
            }
        });
    }
    let k = p - 1;
    let big_k = k + 1;
    let f_blocks = layout.f_len(big_k) / m.max(1);
    let units: Vec<Vec<Scalar>> = (0..layout.wedges()).map(|w| layout.unit_wedge(w)).collect();
    let sk = sign(k);
    // 𝔛'_j for the pair (i, j) of basis wedges.
    let modified = |wi: usize, wj: usize| -> Vec<Scalar> {
        let (xi, yi) = layout.pair(wi);
        let (xj, yj) = layout.pair(wj);
        let mut out = layout.wedge(s.alg.ternary().get(xi, yi, xj), &e[yj]);
        for (o, v) in out.iter_mut().zip(layout.wedge(&e[xj], s.alg.ternary().get(xi, yi, yj))) {
            *o += &v;
        }
        out
    };
    build(rows, cols, m, |block, rb| {
        let (tuple_index, z) =
            if block < f_blocks { (block, None) } else { ((block - f_blocks) / n, Some((block - f_blocks) % n)) };
        let t = layout.decode(tuple_index, big_k);
        let ws: Vec<&[Scalar]> = t.iter().map(|&w| units[w].as_slice()).collect();
        let without =
            |i: usize| -> Vec<&[Scalar]> { ws.iter().enumerate().filter(|&(l, _)| l != i).map(|(_, w)| *w).collect() };
        let (xk, yk) = layout.pair(t[k]);
        let head = &ws[..k];
        match z {
            None => {
                rb.add(Some(s.rep.rho(xk)), &sk, &layout.g_terms(head, &e[yk]));
                rb.add(Some(s.rep.rho(yk)), &-&sk, &layout.g_terms(head, &e[xk]));
                rb.add(None, &-&sk, &layout.g_terms(head, s.alg.binary().get(xk, yk)));
                for (i, &ti) in t.iter().enumerate().take(k) {
                    let (xi, yi) = layout.pair(ti);
                    rb.add(Some(s.d(xi, yi)), &sign(i), &layout.f_terms(&without(i)));
                }
                for i in 0..big_k {
                    for j in i + 1..big_k {
                        let mj = modified(t[i], t[j]);
                        let mut args = ws.clone();
                        args[j] = &mj;
                        args.remove(i);
                        rb.add(None, &sign(i + 1), &layout.f_terms(&args));
                    }
                }
            }
            Some(z) => {
                rb.add(Some(s.rep.theta(yk, z)), &sk, &layout.g_terms(head, &e[xk]));
                rb.add(Some(s.rep.theta(xk, z)), &-&sk, &layout.g_terms(head, &e[yk]));
                for (i, &ti) in t.iter().enumerate().take(big_k) {
                    let (xi, yi) = layout.pair(ti);
                    rb.add(Some(s.d(xi, yi)), &sign(i), &layout.g_terms(&without(i), &e[z]));
                    rb.add(None, &sign(i + 1), &layout.g_terms(&without(i), s.alg.ternary().get(xi, yi, z)));
                }
                for i in 0..big_k {
                    for j in i + 1..big_k {
                        let mj = modified(t[i], t[j]);
                        let mut args = ws.clone();
                        args[j] = &mj;
                        args.remove(i);
                        rb.add(None, &sign(i + 1), &layout.g_terms(&args, &e[z]));
                    }
                }
            }
        }
    })
}

/// Matrix of the chain map `Φ^p : C^p → C^p`:
///
/// ```text
/// Φ^1(h)  = h∘T − T_V∘h
/// Φ_I(f)  = f(T..T) − T_V(Σ_i f(T..Id_i..T) + (2k−1)λ f(T..T))   over 2k slots
/// Φ_II(g) = g(T..T) − T_V(Σ_i g(T..Id_i..T) + 2kλ g(T..T))        over 2k+1 slots
/// ```
pub(crate) fn chain_map_matrix(n: usize, m: usize, t: &Matrix, tv: &Matrix, weight: &Scalar, p: usize) -> Matrix {
    let layout = Layout::new(n, m);
    let dim = layout.dim(p);
    let e: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = Scalar::one();
            v
        })
        .collect();
    let te: Vec<Vec<Scalar>> = (0..n).map(|i| t.column(i)).collect();
    let one = Scalar::one();
    let neg = -Scalar::one();
    if p == 1 {
        return build(dim, dim, m, |i, rb| {
            rb.add(None, &one, &layout.h_terms(&te[i]));
            rb.add(Some(tv), &neg, &layout.h_terms(&e[i]));
        });
    }
    let k = p - 1;
    let f_blocks = layout.f_len(k) / m.max(1);
    let kk = Scalar::from_int(k as i64);
    let coeff_f = -(&(&(&kk + &kk) - &one) * weight);
    let coeff_g = -(&(&kk + &kk) * weight);
    build(dim, dim, m, |block, rb| {
        let (tuple_index, z) =
            if block < f_blocks { (block, None) } else { ((block - f_blocks) / n, Some((block - f_blocks) % n)) };
        let tup = layout.decode(tuple_index, k);
        let tt: Vec<Vec<Scalar>> = tup
            .iter()
            .map(|&w| {
                let (x, y) = layout.pair(w);
                layout.wedge(&te[x], &te[y])
            })
            .collect();
        let all_t: Vec<&[Scalar]> = tt.iter().map(Vec::as_slice).collect();
        let mut one_id: Vec<Vec<Scalar>> = Vec::with_capacity(2 * k);
        for &w in &tup {
            let (x, y) = layout.pair(w);
            one_id.push(layout.wedge(&e[x], &te[y]));
            one_id.push(layout.wedge(&te[x], &e[y]));
        }
        let with_slot = |slot: usize| -> Vec<&[Scalar]> {
            let mut args = all_t.clone();
            args[slot / 2] = &one_id[slot];
            args
        };
        match z {
            None => {
                let a = layout.f_terms(&all_t);
                rb.add(None, &one, &a);
                rb.add(Some(tv), &coeff_f, &a);
                for slot in 0..2 * k {
                    rb.add(Some(tv), &neg, &layout.f_terms(&with_slot(slot)));
                }
            }
            Some(z) => {
                let a = layout.g_terms(&all_t, &te[z]);
                rb.add(None, &one, &a);
                rb.add(Some(tv), &coeff_g, &a);
                for slot in 0..2 * k {
                    rb.add(Some(tv), &neg, &layout.g_terms(&with_slot(slot), &te[z]));
                }
                rb.add(Some(tv), &neg, &layout.g_terms(&all_t, &e[z]));
            }
        }
    })
}

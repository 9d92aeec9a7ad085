//! Seeded generators of small valid test data: algebras, Reynolds operators,
//! representations with module operators, and random rational matrices.
//!
//! Every generated operator and representation is checked before it is
//! returned, so callers can rely on validity.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::LyAlgebra;
use crate::linalg::{Matrix, Scalar};
use crate::representation::{adjoint_rep, direct_sum_rep, verify_reynolds_rep, Representation};
use crate::reynolds::{derivation_basis, verify_reynolds, ReynoldsOperator};
use crate::samples;

/// A nonzero-denominator rational `p/q` with `|p| ≤ bound`, `1 ≤ q ≤ 3`.
pub fn scalar<R: Rng>(rng: &mut R, bound: i64) -> Scalar {
    Scalar::new(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

pub fn nonzero_scalar<R: Rng>(rng: &mut R, bound: i64) -> Scalar {
    loop {
        let s = scalar(rng, bound.max(1));
        if !s.is_zero() {
            return s;
        }
    }
}

/// A matrix with integer entries in `[-bound, bound]`.
pub fn int_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| Scalar::from_int(rng.gen_range(-bound..=bound)))
}

/// An invertible integer matrix with entries in `[-bound, bound]`.
pub fn invertible<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Matrix {
    loop {
        let m = int_matrix(rng, n, n, bound.max(1));
        if m.rank() == n {
            return m;
        }
    }
}

/// A random vector with small integer entries.
pub fn int_vector<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Vec<Scalar> {
    (0..len).map(|_| Scalar::from_int(rng.gen_range(-bound..=bound))).collect()
}

/// A random integer combination of the given vectors.
pub fn combination<R: Rng>(rng: &mut R, vectors: &[Vec<Scalar>], len: usize, bound: i64) -> Vec<Scalar> {
    let coeffs = int_vector(rng, vectors.len(), bound);
    crate::linalg::combine(&coeffs, vectors, len)
}

/// Named algebras of dimension at most three.
pub fn catalogue() -> Vec<(&'static str, LyAlgebra)> {
    vec![
        ("abelian-2", LyAlgebra::abelian(2)),
        ("two-dim-example", samples::two_dim_example()),
        ("affine-line", LyAlgebra::from_lie_algebra(samples::affine_line_bracket()).expect("Lie algebra")),
        ("heisenberg", samples::heisenberg()),
        ("sl2", samples::sl2()),
        ("leibniz-sample", samples::leibniz_sample()),
    ]
}

/// A Reynolds operator on `a`: a scaled identity, the zero operator with a
/// random weight, or `(D − λ)⁻¹` for a random derivation `D`.
pub fn operator<R: Rng>(rng: &mut R, a: &LyAlgebra) -> ReynoldsOperator {
    let n = a.dim();
    let derivations = derivation_basis(a);
    loop {
        let r = match rng.gen_range(0..4) {
            0 => {
                let c = nonzero_scalar(rng, 3);
                ReynoldsOperator::new(Matrix::identity(n).scale(&c), -c.recip().expect("nonzero"))
            }
            1 => ReynoldsOperator::zero(n, scalar(rng, 3)),
            _ if derivations.is_empty() => continue,
            _ => {
                let flat = combination(rng, &derivations.vectors, n * n, 2);
                let d = Matrix::from_fn(n, n, |i, j| flat[i * n + j].clone());
                let weight = if rng.gen_bool(0.3) { Scalar::zero() } else { scalar(rng, 3) };
                let shifted = &d - &Matrix::identity(n).scale(&weight);
                match shifted.inverse() {
                    Some(t) => ReynoldsOperator::new(t, weight),
                    None => continue,
                }
            }
        };
        if verify_reynolds(a, &r).map(|rep| rep.all_passed()).unwrap_or(false) {
            return r;
        }
    }
}

/// A representation of `(a, r)` with module operator, of module dimension at
/// most `max_module_dim`: the adjoint representation, a zero representation
/// with a random module operator, or their direct sum, conjugated by a random
/// change of basis.
pub fn representation<R: Rng>(
    rng: &mut R,
    a: &LyAlgebra,
    r: &ReynoldsOperator,
    max_module_dim: usize,
) -> Representation {
    let n = a.dim();
    let max = max_module_dim.max(1);
    loop {
        let mut choices = vec![1];
        if n <= max {
            choices.push(0);
        }
        if n < max {
            choices.push(2);
        }
        let zero = |rng: &mut R, m: usize| {
            Representation::zero(n, m, Some(int_matrix(rng, m, m, 2))).expect("square module operator")
        };
        let rep = match *choices.choose(rng).expect("nonempty") {
            0 => adjoint_rep(a, Some(r)),
            1 => {
                let m = rng.gen_range(1..=max.min(3));
                zero(rng, m)
            }
            _ => {
                let m = rng.gen_range(1..=max - n);
                direct_sum_rep(&[adjoint_rep(a, Some(r)), zero(rng, m)]).expect("same algebra")
            }
        };
        let q = invertible(rng, rep.module_dim(), 2);
        let rep = rep.conjugate(&q).expect("invertible change of basis");
        if verify_reynolds_rep(a, r, &rep).map(|x| x.all_passed()).unwrap_or(false) {
            return rep;
        }
    }
}

/// A random catalogue algebra in a random basis, with a random operator and
/// representation.
pub fn triple<R: Rng>(
    rng: &mut R,
    max_module_dim: usize,
) -> (&'static str, LyAlgebra, ReynoldsOperator, Representation) {
    let cat = catalogue();
    let (name, a) = cat.choose(rng).expect("nonempty catalogue").clone();
    let p = invertible(rng, a.dim(), 2);
    let a = a.transport(&p).expect("invertible change of basis");
    let r = operator(rng, &a);
    let rep = representation(rng, &a, &r, max_module_dim);
    (name, a, r, rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn catalogue_algebras_satisfy_the_axioms() {
        for (name, a) in catalogue() {
            assert!(a.verify_axioms().all_passed(), "{name}");
        }
    }

    #[test]
    fn generated_triples_are_valid() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let (name, a, r, rep) = triple(&mut rng, 3);
            assert!(verify_reynolds(&a, &r).unwrap().all_passed(), "{name}");
            assert!(verify_reynolds_rep(&a, &r, &rep).unwrap().all_passed(), "{name}");
            assert!(rep.module_dim() <= 3);
        }
    }
}

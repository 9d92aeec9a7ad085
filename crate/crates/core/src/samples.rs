//! Standard small instances used in examples, tests and the CLI sample file.

use crate::algebra::{antisymmetric_bilinear, antisymmetric_trilinear, LyAlgebra};
use crate::extension::ExtensionCocycle;
use crate::linalg::{qi, Matrix, Scalar};
use crate::representation::Representation;
use crate::reynolds::ReynoldsOperator;
use crate::tensor::Bilinear;

/// The two-dimensional algebra with `[ε1, ε2] = ε1` and `{ε1, ε2, ε2} = ε1`,
/// all other brackets of basis vectors zero up to antisymmetry.
pub fn two_dim_example() -> LyAlgebra {
    let binary = antisymmetric_bilinear(2, &[(0, 1, 0, qi(1))]);
    let ternary = antisymmetric_trilinear(2, &[(0, 1, 1, 0, qi(1))]);
    LyAlgebra::new(binary, ternary)
        .and_then(|a| a.with_labels(vec!["ε1".into(), "ε2".into()]))
        .expect("sample algebra is antisymmetric")
}

/// `T = [[k1, k2], [0, k]]` on [`two_dim_example`], a Reynolds operator of
/// weight `−1/k` for `k ≠ 0`.
pub fn two_dim_operator(k1: Scalar, k2: Scalar, k: Scalar) -> ReynoldsOperator {
    let weight = -k.recip().expect("k must be nonzero");
    let matrix = Matrix::from_rows(vec![vec![k1, k2], vec![Scalar::zero(), k]]).expect("2x2 rows");
    ReynoldsOperator::new(matrix, weight)
}

/// `T = [[2, 3], [0, 5]]` of weight `−1/5`.
pub fn two_dim_standard_operator() -> ReynoldsOperator {
    two_dim_operator(qi(2), qi(3), qi(5))
}

/// sl2 in the basis `(h, e, f)`: `[h, e] = 2e`, `[h, f] = −2f`, `[e, f] = h`.
pub fn sl2_bracket() -> Bilinear {
    antisymmetric_bilinear(3, &[(0, 1, 1, qi(2)), (0, 2, 2, qi(-2)), (1, 2, 0, qi(1))])
}

pub fn sl2() -> LyAlgebra {
    LyAlgebra::from_lie_algebra(sl2_bracket())
        .and_then(|a| a.with_labels(vec!["h".into(), "e".into(), "f".into()]))
        .expect("sl2 is a Lie algebra")
}

/// The non-abelian two-dimensional Lie algebra `[e1, e2] = e1`.
pub fn affine_line_bracket() -> Bilinear {
    antisymmetric_bilinear(2, &[(0, 1, 0, qi(1))])
}

/// The Heisenberg algebra `[e1, e2] = e3`.
pub fn heisenberg_bracket() -> Bilinear {
    antisymmetric_bilinear(3, &[(0, 1, 2, qi(1))])
}

/// A three-dimensional left Leibniz algebra that is not a Lie algebra:
/// `e1⋆e2 = e1`, `e2⋆e1 = −e1`, `e2⋆e3 = e3`, all other products zero.
pub fn leibniz_star() -> Bilinear {
    let mut star = Bilinear::zeros(3, 3);
    star.set(0, 1, 0, qi(1));
    star.set(1, 0, 0, qi(-1));
    star.set(1, 2, 2, qi(1));
    star
}

pub fn leibniz_sample() -> LyAlgebra {
    LyAlgebra::from_leibniz(leibniz_star()).expect("sample is left Leibniz")
}

pub fn heisenberg() -> LyAlgebra {
    LyAlgebra::from_lie_algebra(heisenberg_bracket()).expect("Heisenberg bracket is a Lie bracket")
}

/// A degree-2 cocycle that builds no extension: the Heisenberg algebra with
/// the zero operator of weight 1 and the trivial one-dimensional module,
/// and `ψ(e2, e3, e1) = 1`. The differential only asks `ψ(x, y, e3) = 0`,
/// while LY3 on `L ⊕ V` at `(e1, e2, e3)` has module component
/// `ψ(e1, e2, e3) + ψ(e2, e3, e1) + ψ(e3, e1, e2) = 1`.
pub fn cyclic_counterexample() -> (LyAlgebra, ReynoldsOperator, Representation, ExtensionCocycle) {
    let a = heisenberg();
    let r = ReynoldsOperator::new(Matrix::zeros(3, 3), qi(1));
    let rep = Representation::zero(3, 1, Some(Matrix::zeros(1, 1))).expect("zero representation");
    let mut c = ExtensionCocycle::zero(3, 1);
    c.psi.set(1, 2, 0, 0, qi(1));
    c.psi.set(2, 1, 0, 0, qi(-1));
    (a, r, rep, c)
}

//! End-to-end runs: build an algebra, pick an operator, pass to the
//! descendant structure and the induced representation, then compute the
//! three cohomologies.

use rly_core::algebra::LyAlgebra;
use rly_core::linalg::{q, qi};
use rly_core::representation::{adjoint_rep, induced_rep, verify_rep, verify_reynolds_rep};
use rly_core::reynolds::{descendant_algebra, verify_reynolds};
use rly_core::{samples, CohomologyContext, ComplexKind, ReynoldsOperator};

fn run(a: &LyAlgebra, r: &ReynoldsOperator) -> Vec<Vec<usize>> {
    assert!(a.verify_axioms().all_passed());
    assert!(verify_reynolds(a, r).unwrap().all_passed());
    let lt = descendant_algebra(a, r).unwrap();
    assert!(lt.verify_axioms().all_passed());
    let rep = adjoint_rep(a, Some(r));
    let induced = induced_rep(a, r, &rep).unwrap();
    assert!(verify_rep(&lt, &induced).unwrap().all_passed());
    assert!(verify_reynolds_rep(&lt, r, &induced).unwrap().all_passed());
    let ctx = CohomologyContext::new(a, r, &rep).unwrap();
    [ComplexKind::Ly, ComplexKind::Ro, ComplexKind::Rly]
        .into_iter()
        .map(|k| ctx.cohomology_dims(k, 3).unwrap().rows.iter().map(|row| row.betti).collect())
        .collect()
}

#[test]
fn operator_family_on_the_two_dim_example() {
    let a = samples::two_dim_example();
    for (k1, k2, k) in [(2, 3, 5), (1, 0, 1), (-1, 4, 2), (0, 1, -3), (7, -2, 1)] {
        let r = samples::two_dim_operator(qi(k1), qi(k2), qi(k));
        let betti = run(&a, &r);
        // The algebra part of the complex does not see the operator.
        assert_eq!(betti[0], vec![2, 1, 1], "T = [[{k1}, {k2}], [0, {k}]]");
    }
}

#[test]
fn reductive_pair_of_sl2() {
    // N = span(h), M = span(e, f): [e, f]_M = 0, {e, f, e} = [h, e] = 2e, {e, f, f} = −2f.
    let m = LyAlgebra::from_reductive_pair(&samples::sl2_bracket(), &[0], &[1, 2]).unwrap();
    assert_eq!(m.dim(), 2);
    assert!(m.binary().is_zero());
    assert_eq!(m.ternary().get(0, 1, 0), &[qi(2), qi(0)]);
    assert_eq!(m.ternary().get(0, 1, 1), &[qi(0), qi(-2)]);
    let r = ReynoldsOperator::identity(2);
    let betti = run(&m, &r);
    assert_eq!(betti[0], betti[1], "with T = Id the two complexes coincide");
}

#[test]
fn leibniz_sample_and_scaled_weights() {
    let a = samples::leibniz_sample();
    let r = ReynoldsOperator::identity(3);
    run(&a, &r);
    let scaled = r.scale_weight(&q(1, 2)).unwrap();
    assert_eq!(scaled.weight, qi(-2));
    run(&a, &scaled);
}

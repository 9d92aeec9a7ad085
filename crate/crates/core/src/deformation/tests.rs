use super::*;
use crate::linalg::qi;
use crate::samples::{two_dim_example, two_dim_standard_operator};

fn setup() -> (LyAlgebra, ReynoldsOperator, CohomologyContext) {
    let a = two_dim_example();
    let r = two_dim_standard_operator();
    let ctx = CohomologyContext::new(&a, &r, &adjoint_rep(&a, Some(&r))).unwrap();
    (a, r, ctx)
}

fn rly(n: usize, p: usize, coords: Vec<Scalar>) -> RlyCochain {
    RlyCochain::from_coords(n, n, p, coords).unwrap()
}

#[test]
fn constant_deformation_passes_every_order() {
    let (a, r, _) = setup();
    let def = TruncatedDeformation::constant(&a, &r, 2).unwrap();
    let report = verify_deformation(&a, &r, &def).unwrap();
    assert!(report.all_passed(), "{report}");
    assert_eq!(report.orders.len(), 3);
    assert!(def.infinitesimal().unwrap().is_zero());
}

#[test]
fn scaled_bracket_passes_first_order() {
    // F_1 = [-, -]: the t-coefficient of LY3 is 2·Σ_cyc [[x, y], z], which
    // vanishes because the binary bracket of the example is a Lie bracket;
    // the t-coefficients of LY4, LY5 and the binary Reynolds identity are
    // copies of the undeformed identities.
    let (a, r, ctx) = setup();
    let def =
        TruncatedDeformation::new(&a, &r, vec![(a.binary().clone(), Trilinear::zeros(2, 2), Matrix::zeros(2, 2))])
            .unwrap();
    let report = verify_deformation(&a, &r, &def).unwrap();
    assert!(report.all_passed(), "{report}");
    assert!(ctx.is_cocycle(ComplexKind::Rly, 2, &def.infinitesimal().unwrap().coords()).unwrap());
}

#[test]
fn non_cocycle_fails_first_order_only() {
    let (a, r, ctx) = setup();
    let t1 = Matrix::from_int_rows(&[&[0, 0], &[1, 0]]);
    let def = TruncatedDeformation::new(&a, &r, vec![(Bilinear::zeros(2, 2), Trilinear::zeros(2, 2), t1)]).unwrap();
    assert!(!ctx.is_cocycle(ComplexKind::Rly, 2, &def.infinitesimal().unwrap().coords()).unwrap());
    let report = verify_deformation(&a, &r, &def).unwrap();
    let (order, check) = report.first_failure().expect("must fail");
    assert_eq!(order, 1);
    assert!(check.name.starts_with("reynolds"), "{report}");
}

#[test]
fn kernel_vectors_are_exactly_the_first_order_deformations() {
    let (a, r, ctx) = setup();
    let kernel = ctx.cocycle_basis(ComplexKind::Rly, 2).unwrap();
    assert!(!kernel.is_empty());
    for v in &kernel.vectors {
        let def = TruncatedDeformation::from_infinitesimal(&a, &r, &rly(2, 2, v.clone())).unwrap();
        let report = verify_deformation(&a, &r, &def).unwrap();
        assert!(report.all_passed(), "{report}");
    }
    // Unit cochains outside the kernel fail at order 1.
    let dim = ctx.cochain_dim(ComplexKind::Rly, 2);
    for i in 0..dim {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = Scalar::one();
        let cocycle = ctx.is_cocycle(ComplexKind::Rly, 2, &v).unwrap();
        let def = TruncatedDeformation::from_infinitesimal(&a, &r, &rly(2, 2, v)).unwrap();
        assert_eq!(verify_deformation(&a, &r, &def).unwrap().passed_through(1), cocycle, "unit {i}");
    }
}

#[test]
fn transported_constant_has_coboundary_infinitesimal() {
    let (a, r, ctx) = setup();
    let phi1 = Matrix::from_int_rows(&[&[1, -2], &[3, 1]]);
    let constant = TruncatedDeformation::constant(&a, &r, 2).unwrap();
    let iso = FormalIsomorphism::first_order(&phi1.scale(&qi(-1)), 2).unwrap();
    let moved = apply_equivalence(&constant, &iso).unwrap();
    assert!(verify_deformation(&a, &r, &moved).unwrap().all_passed());
    let expected = ctx.d_rly(&RlyCochain::new(Cochain::from_linear_map(&phi1), None).unwrap()).unwrap();
    assert_eq!(moved.infinitesimal().unwrap(), expected);

    let (found, trivial) = trivialize_with(&ctx, &moved).unwrap();
    assert!(trivial.is_trivial_through(1));
    assert!(verify_deformation(&a, &r, &trivial).unwrap().all_passed());
    assert_eq!(apply_equivalence(&trivial, &found).unwrap(), moved);
}

#[test]
fn identity_and_inverse_round_trip() {
    let (a, r, _) = setup();
    let def = TruncatedDeformation::new(
        &a,
        &r,
        vec![
            (a.binary().clone(), Trilinear::zeros(2, 2), Matrix::zeros(2, 2)),
            (Bilinear::zeros(2, 2), a.ternary().clone(), Matrix::identity(2)),
        ],
    )
    .unwrap();
    assert_eq!(apply_equivalence(&def, &FormalIsomorphism::identity(2, 2)).unwrap(), def);
    let iso = FormalIsomorphism::new(vec![
        Matrix::identity(2),
        Matrix::from_int_rows(&[&[0, 1], &[2, 0]]),
        Matrix::from_int_rows(&[&[1, 1], &[0, -1]]),
    ])
    .unwrap();
    assert_eq!(iso.compose(&iso.inverse()).unwrap(), FormalIsomorphism::identity(2, 2));
    let there = apply_equivalence(&def, &iso).unwrap();
    assert_eq!(apply_equivalence(&there, &iso.inverse()).unwrap(), def);
}

#[test]
fn non_bounding_cocycle_cannot_be_trivialized() {
    let (a, r, ctx) = setup();
    let reps = ctx.class_representatives(ComplexKind::Rly, 2).unwrap();
    let betti = ctx.cohomology_dims(ComplexKind::Rly, 2).unwrap().betti(2).unwrap();
    assert_eq!(reps.len(), betti);
    if let Some(v) = reps.into_iter().next() {
        let def = TruncatedDeformation::from_infinitesimal(&a, &r, &rly(2, 2, v)).unwrap();
        assert!(matches!(trivialize_with(&ctx, &def), Err(Error::NotCoboundary)));
    }
}

#[test]
fn constant_is_already_trivial() {
    let (a, r, _) = setup();
    let def = TruncatedDeformation::constant(&a, &r, 1).unwrap();
    let (iso, out) = trivialize_first_order(&a, &r, &def).unwrap();
    assert_eq!(iso, FormalIsomorphism::identity(2, 1));
    assert_eq!(out, def);
}

#[test]
fn mismatched_orders_are_rejected() {
    let (a, r, _) = setup();
    let def = TruncatedDeformation::constant(&a, &r, 2).unwrap();
    assert!(matches!(apply_equivalence(&def, &FormalIsomorphism::identity(2, 1)), Err(Error::OrderMismatch(2, 1))));
}

#[test]
fn infinitesimals_must_also_satisfy_the_cyclic_condition() {
    let a = crate::samples::heisenberg();
    let r = ReynoldsOperator::new(Matrix::identity(3), qi(-1));
    let ctx = CohomologyContext::new(&a, &r, &adjoint_rep(&a, Some(&r))).unwrap();
    let betti = ctx.cohomology_dims(ComplexKind::Rly, 2).unwrap().betti(2).unwrap();
    assert_eq!((betti, ctx.extension_class_count().unwrap()), (30, 27));
    let failing = ctx
        .cocycle_basis(ComplexKind::Rly, 2)
        .unwrap()
        .vectors
        .into_iter()
        .find(|v| !ctx.is_extension_cocycle(v).unwrap())
        .expect("some cocycle breaks the cyclic condition");
    let report =
        verify_deformation(&a, &r, &TruncatedDeformation::from_infinitesimal(&a, &r, &rly(3, 2, failing)).unwrap())
            .unwrap();
    let (order, check) = report.first_failure().expect("must fail");
    assert_eq!((order, check.name.as_str()), (1, "LY3"), "{report}");
    for v in ctx.extension_cocycle_basis().unwrap().vectors {
        let def = TruncatedDeformation::from_infinitesimal(&a, &r, &rly(3, 2, v)).unwrap();
        assert!(verify_deformation(&a, &r, &def).unwrap().passed_through(1));
    }
}

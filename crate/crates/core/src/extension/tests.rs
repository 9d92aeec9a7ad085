use super::*;
use crate::representation::{adjoint_rep, semidirect_product};
use crate::samples::{two_dim_example, two_dim_standard_operator};

fn setup() -> CohomologyContext {
    let a = two_dim_example();
    let r = two_dim_standard_operator();
    CohomologyContext::new(&a, &r, &adjoint_rep(&a, Some(&r))).unwrap()
}

fn cocycle(v: &[Scalar]) -> ExtensionCocycle {
    ExtensionCocycle::from_cochain(&RlyCochain::from_coords(2, 2, 2, v.to_vec()).unwrap()).unwrap()
}

fn d1(ctx: &CohomologyContext, iota: &Matrix) -> Vec<Scalar> {
    ctx.d_rly(&RlyCochain::new(Cochain::from_linear_map(iota), None).unwrap()).unwrap().coords()
}

#[test]
fn zero_cocycle_gives_semidirect_product() {
    let ctx = setup();
    let ext = build_extension_with(&ctx, &ExtensionCocycle::zero(2, 2)).unwrap();
    let (semi, op) = semidirect_product(ctx.algebra(), ctx.operator().unwrap(), ctx.representation()).unwrap();
    assert_eq!(ext.total(), &semi);
    assert_eq!(ext.total_op(), &op);
    let c = extract_cocycle(&ext, &ext.canonical_section()).unwrap();
    assert_eq!(c, ExtensionCocycle::zero(2, 2));
}

#[test]
fn kernel_cocycles_round_trip() {
    let ctx = setup();
    let kernel = ctx.cocycle_basis(ComplexKind::Rly, 2).unwrap();
    assert!(!kernel.is_empty());
    for v in &kernel.vectors {
        let c = cocycle(v);
        let ext = build_extension_with(&ctx, &c).unwrap();
        let s = ext.canonical_section();
        assert_eq!(&extract_rep(&ext, &s).unwrap(), ctx.representation());
        assert_eq!(extract_cocycle(&ext, &s).unwrap(), c);
    }
}

#[test]
fn section_shift_adds_a_coboundary() {
    let ctx = setup();
    let v = ctx.cocycle_basis(ComplexKind::Rly, 2).unwrap().vectors[0].clone();
    let ext = build_extension_with(&ctx, &cocycle(&v)).unwrap();
    let iota = Matrix::from_int_rows(&[&[2, -1], &[0, 3]]);
    let shifted = ext.shifted_section(&ext.canonical_section(), &iota).unwrap();
    assert_eq!(&extract_rep(&ext, &shifted).unwrap(), ctx.representation());
    let moved = extract_cocycle(&ext, &shifted).unwrap().to_cochain().unwrap().coords();
    let expected: Vec<Scalar> = v.iter().zip(d1(&ctx, &iota)).map(|(a, b)| a + &b).collect();
    assert_eq!(moved, expected);
}

#[test]
fn non_cocycle_is_rejected_and_fails_verification() {
    let ctx = setup();
    let dim = ctx.cochain_dim(ComplexKind::Rly, 2);
    let units = (0..dim).map(|i| {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = Scalar::one();
        v
    });
    let v = units.filter(|v| !ctx.is_cocycle(ComplexKind::Rly, 2, v).unwrap()).last().unwrap();
    let c = cocycle(&v);
    assert!(matches!(build_extension_with(&ctx, &c), Err(Error::NotCocycle)));
    let (total, op) = force_build_total(ctx.algebra(), ctx.operator().unwrap(), ctx.representation(), &c).unwrap();
    let axioms = total.verify_axioms();
    let reynolds = verify_reynolds(&total, &op).unwrap();
    assert!(!(axioms.all_passed() && reynolds.all_passed()));
    let failure = axioms.failures().chain(reynolds.failures()).next().unwrap();
    assert!(failure.witness.is_some());
}

#[test]
fn equivalence_follows_cohomology_classes() {
    let ctx = setup();
    let v = ctx.cocycle_basis(ComplexKind::Rly, 2).unwrap().vectors[0].clone();
    let iota = Matrix::from_int_rows(&[&[1, 1], &[-2, 0]]);
    let w: Vec<Scalar> = v.iter().zip(d1(&ctx, &iota)).map(|(a, b)| a + &b).collect();
    let e1 = build_extension_with(&ctx, &cocycle(&w)).unwrap();
    let e2 = build_extension_with(&ctx, &cocycle(&v)).unwrap();
    let iso = extensions_equivalent_with(&ctx, &e1, &e2).unwrap().expect("same class");
    assert_eq!(d1(&ctx, &iso.iota), d1(&ctx, &iota));
    let same = extensions_equivalent(&e1, &e1).unwrap().expect("reflexive");
    assert_eq!(same.matrix, Matrix::identity(4));

    for rep in ctx.class_representatives(ComplexKind::Rly, 2).unwrap() {
        let shifted: Vec<Scalar> = v.iter().zip(&rep).map(|(a, b)| a + b).collect();
        let e3 = build_extension_with(&ctx, &cocycle(&shifted)).unwrap();
        assert!(extensions_equivalent_with(&ctx, &e2, &e3).unwrap().is_none());
    }
}

#[test]
fn normalization_recovers_block_form() {
    let ctx = setup();
    let v = ctx.cocycle_basis(ComplexKind::Rly, 2).unwrap().vectors[0].clone();
    let ext = build_extension_with(&ctx, &cocycle(&v)).unwrap();
    let p = Matrix::from_int_rows(&[&[1, 0, 1, 0], &[0, 1, 0, 0], &[0, 2, 1, 0], &[1, 0, 0, 1]]);
    let inv = p.inverse().unwrap();
    let moved = AbelianExtension::new(
        ext.base().clone(),
        ext.base_op().clone(),
        ext.total().transport(&p).unwrap(),
        ReynoldsOperator::new(&(&inv * &ext.total_op().matrix) * &p, ext.total_op().weight.clone()),
        &inv * ext.inject(),
        ext.project() * &p,
    )
    .unwrap();
    assert!(!moved.is_block_form());
    let normal = moved.normalize(&moved.canonical_section()).unwrap();
    assert!(normal.is_block_form());
    assert!(extensions_equivalent_with(&ctx, &normal, &ext).unwrap().is_some());
    let phi = extensions_equivalent_with(&ctx, &moved, &ext).unwrap().expect("same extension in another basis");
    assert_eq!(&phi.matrix * moved.inject(), *ext.inject());
    assert!(extensions_equivalent_with(&ctx, &ext, &moved).unwrap().is_some());
    let classes = ctx.class_representatives(ComplexKind::Rly, 2).unwrap();
    let other = classes.iter().find(|w| !ctx.cohomologous(ComplexKind::Rly, 2, w, &v).unwrap()).unwrap();
    let different = build_extension_with(&ctx, &cocycle(other)).unwrap();
    assert!(extensions_equivalent_with(&ctx, &moved, &different).unwrap().is_none());
}

#[test]
fn invalid_sections_are_rejected() {
    let ctx = setup();
    let ext = build_extension_with(&ctx, &ExtensionCocycle::zero(2, 2)).unwrap();
    let bad = Section { map: Matrix::zeros(4, 2) };
    assert!(matches!(extract_rep(&ext, &bad), Err(Error::NotSection)));
}

#[test]
fn cyclic_condition_is_needed_beyond_the_cocycle_condition() {
    let (a, r, rep, c) = crate::samples::cyclic_counterexample();
    let ctx = CohomologyContext::new(&a, &r, &rep).unwrap();
    assert!(ctx.is_cocycle(ComplexKind::Rly, 2, &c.to_cochain().unwrap().coords()).unwrap());
    assert!(matches!(build_extension_with(&ctx, &c), Err(Error::CyclicConditionFails)));
    let (total, _) = force_build_total(&a, &r, &rep, &c).unwrap();
    let report = total.verify_axioms();
    let failures: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failures, vec!["LY3"]);
    let w = report.get("LY3").unwrap().witness.as_ref().unwrap();
    assert_eq!(w.tuple, vec![0, 1, 2]);
    assert_eq!(w.residual, vec![Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::one()]);
}

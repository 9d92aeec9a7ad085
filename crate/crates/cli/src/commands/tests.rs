use super::*;
use rly_core::samples;

const SAMPLE: &str = include_str!("../../samples/two_dim.toml");

fn ws(extra: &str) -> Workspace {
    Workspace::from_sources(&[("sample".into(), SAMPLE.into()), ("extra".into(), extra.into())]).unwrap()
}

fn ints(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

#[test]
fn sample_objects_verify() {
    let w = ws("");
    for name in ["two_dim", "T", "adj", "scaled", "split"] {
        let out = verify(&w, name).unwrap();
        assert!(out.passed(), "{out}");
    }
    assert_eq!(verify(&w, "T").unwrap().kind, ObjectKind::Operator);
}

#[test]
fn flipped_weight_fails_with_a_witness_at_the_first_pair() {
    // [Tx, Ty] = 10 e1 while T([Tx, y] + [x, Ty] + (1/5)[Tx, Ty]) = 18 e1 at (e1, e2).
    let w = ws("[operators.bad]\nalgebra = \"two_dim\"\nmatrix = [[2, 3], [0, 5]]\nweight = \"1/5\"\n");
    let out = verify(&w, "bad").unwrap();
    assert!(!out.passed());
    let failure = out.reports[1].failures().next().expect("a Reynolds identity fails");
    let witness = failure.witness.as_ref().unwrap();
    assert_eq!(witness.tuple, vec![0, 1]);
    assert_eq!(witness.residual, ints(&[-8, 0]));
    assert!(out.reports[0].all_passed());
}

#[test]
fn cohomology_tables_match_the_dimension_counts() {
    let w = ws("");
    let ly = cohomology(&w, "two_dim", Some("T"), "adj", ComplexKind::Ly, 3).unwrap();
    assert!(ly.passed(), "{ly}");
    assert_eq!(ly.table.as_ref().unwrap().dims(), vec![4, 6, 6]);
    let rly = cohomology(&w, "two_dim", Some("T"), "adj", ComplexKind::Rly, 3).unwrap();
    assert_eq!(rly.table.as_ref().unwrap().dims(), vec![4, 10, 12]);
    assert_eq!(rly.squares_vanish.len(), 2);
    assert_eq!(rly.chain_map.len(), 2);
    let a = samples::two_dim_example();
    let r = samples::two_dim_standard_operator();
    let ctx = CohomologyContext::new(&a, &r, &adjoint_rep(&a, Some(&r))).unwrap();
    assert_eq!(rly.table.unwrap(), ctx.cohomology_dims(ComplexKind::Rly, 3).unwrap());
}

#[test]
fn abelian_algebra_with_zero_module_has_all_cochains_as_cohomology() {
    let w = ws("[algebras.ab]\ndim = 2\n[representations.z]\nalgebra = \"ab\"\nmodule_dim = 1\n");
    let out = cohomology(&w, "ab", None, "z", ComplexKind::Ly, 3).unwrap();
    let table = out.table.unwrap();
    for row in &table.rows {
        assert_eq!(row.betti, row.dim_cochain);
    }
    assert!(out.chain_map.is_empty());
    let err = cohomology(&w, "ab", None, "z", ComplexKind::Rly, 3).unwrap_err();
    assert!(err.to_string().contains("needs an operator"));
}

#[test]
fn classification_count_matches_the_betti_number() {
    let w = ws("");
    let out = classify_extensions(&w, "two_dim", "T", "adj").unwrap();
    assert!(out.passed(), "{out}");
    assert_eq!(out.betti2, Some(2));
    assert_eq!(out.representatives.len(), 2);
    let text = out.to_string();
    assert!(text.contains("[extensions.class_1]") && text.contains("[extensions.class_2]"), "{text}");
}

#[test]
fn printed_representatives_load_back_as_verified_extensions() {
    let w = ws("");
    let out = classify_extensions(&w, "two_dim", "T", "adj").unwrap();
    let mut extra = String::new();
    for block in out.to_string().split("[extensions.").skip(1) {
        extra.push_str(&format!(
            "[extensions.{block}algebra = \"two_dim\"\noperator = \"T\"\nrepresentation = \"adj\"\n"
        ));
    }
    let w = ws(&extra);
    for (k, c) in out.representatives.iter().enumerate() {
        let name = format!("class_{}", k + 1);
        assert_eq!(&w.extensions[&name].cocycle, c);
        assert!(verify(&w, &name).unwrap().passed());
    }
}

#[test]
fn zero_data_makes_every_cochain_a_class() {
    let extra = "
[algebras.ab]
dim = 2
[operators.zero]
algebra = \"ab\"
matrix = [[0, 0], [0, 0]]
weight = 0
[representations.z]
algebra = \"ab\"
operator = \"zero\"
module_dim = 1
module_op = [[0]]
";
    let out = classify_extensions(&ws(extra), "ab", "zero", "z").unwrap();
    assert!(out.passed(), "{out}");
    // Degree-2 cochains: one wedge and two wedge-times-vector slots for the
    // brackets, plus the two entries of the tail.
    assert_eq!(out.representatives.len(), 5);
}

#[test]
fn trivial_second_cohomology_reports_the_semidirect_product() {
    let extra = "
[algebras.point]
dim = 0
[operators.zero]
algebra = \"point\"
matrix = []
weight = 0
[representations.none]
algebra = \"point\"
kind = \"adjoint\"
operator = \"zero\"
";
    let out = classify_extensions(&ws(extra), "point", "zero", "none").unwrap();
    assert_eq!(out.betti2, Some(0));
    assert!(out.passed());
    assert!(out.to_string().contains("semidirect product"));
}

#[test]
fn deformation_checks_report_each_order() {
    let w = ws("");
    let out = deform_check(&w, None, Some(1)).unwrap();
    assert!(out.passed(), "{out}");
    assert_eq!(out.orders.len(), 2);
    assert!(out.infinitesimal.as_ref().unwrap().cocycle);
    assert!(deform_check(&w, Some("scaled"), Some(2)).is_err());
    assert_eq!(deform_check(&w, None, None).unwrap(), out, "the default order is the truncation order");
    let bad = "
[deformations.bad]
algebra = \"two_dim\"
operator = \"T\"
[[deformations.bad.terms]]
operator = [[0, 0], [1, 0]]
";
    let w = ws(bad);
    assert!(deform_check(&w, None, Some(1)).is_err(), "two deformations loaded");
    let out = deform_check(&w, Some("bad"), Some(1)).unwrap();
    assert!(!out.passed());
    assert!(out.orders[0].all_passed());
    assert!(!out.orders[1].all_passed());
    assert!(!out.infinitesimal.unwrap().cocycle);
    assert!(deform_check(&w, Some("bad"), Some(0)).unwrap().passed());
}

#[test]
fn non_cocycle_extension_fails_with_a_witness() {
    let w = ws("");
    let a = samples::two_dim_example();
    let r = samples::two_dim_standard_operator();
    let ctx = CohomologyContext::new(&a, &r, &adjoint_rep(&a, Some(&r))).unwrap();
    let dim = ctx.cochain_dim(ComplexKind::Rly, 2);
    let unit = (0..dim)
        .map(|i| (0..dim).map(|j| Scalar::from_int((i == j) as i64)).collect::<Vec<_>>())
        .find(|v| !ctx.is_cocycle(ComplexKind::Rly, 2, v).unwrap())
        .unwrap();
    let c = ExtensionCocycle::from_cochain(&RlyCochain::from_coords(2, 2, 2, unit).unwrap()).unwrap();
    let mut w = w;
    w.extensions.insert(
        "broken".into(),
        crate::input::ExtensionEntry {
            algebra: "two_dim".into(),
            operator: "T".into(),
            representation: "adj".into(),
            cocycle: c,
        },
    );
    let out = verify(&w, "broken").unwrap();
    assert!(!out.passed());
    let failing: Vec<&str> = out.reports.iter().filter(|r| !r.all_passed()).map(|r| r.subject.as_str()).collect();
    assert!(failing.contains(&"extension cocycle"));
    assert!(failing.iter().any(|s| s.starts_with("total")), "{out}");
}

#[test]
fn json_reports_round_trip() {
    let w = ws("");
    let v = verify(&w, "T").unwrap();
    assert_eq!(serde_json::from_str::<VerifyOutcome>(&Outcome::to_json(&v)).unwrap(), v);
    let c = cohomology(&w, "two_dim", Some("T"), "adj", ComplexKind::Rly, 3).unwrap();
    assert_eq!(serde_json::from_str::<CohomologyOutcome>(&Outcome::to_json(&c)).unwrap(), c);
    let k = classify_extensions(&w, "two_dim", "T", "adj").unwrap();
    assert_eq!(serde_json::from_str::<ClassifyOutcome>(&Outcome::to_json(&k)).unwrap(), k);
    let d = deform_check(&w, None, Some(1)).unwrap();
    assert_eq!(serde_json::from_str::<DeformCheckOutcome>(&Outcome::to_json(&d)).unwrap(), d);
}

const HEISENBERG: &str = "
[algebras.heis]
dim = 3
binary = [[0, 1, 2, \"1\"]]
[operators.zero]
algebra = \"heis\"
matrix = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
weight = 1
[representations.trivial]
algebra = \"heis\"
operator = \"zero\"
module_dim = 1
module_op = [[0]]
[extensions.cyclic]
algebra = \"heis\"
operator = \"zero\"
representation = \"trivial\"
psi = [[1, 2, 0, 0, \"1\"]]
chi = [[0, 0, 0]]
";

#[test]
fn cocycle_breaking_the_cyclic_condition_is_reported() {
    let w = ws(HEISENBERG);
    let out = verify(&w, "cyclic").unwrap();
    assert!(!out.passed());
    let cocycle = out.reports.iter().find(|r| r.subject == "extension cocycle").unwrap();
    assert!(cocycle.passed("cocycle"));
    assert!(!cocycle.passed("cyclic LY3 condition"));
    let total = out.reports.iter().find(|r| r.subject == "total algebra").unwrap();
    let failures: Vec<&str> = total.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failures, vec!["LY3"]);
    let (a, r, rep, c) = samples::cyclic_counterexample();
    assert_eq!(w.extensions["cyclic"].cocycle, c);
    assert_eq!(w.algebra("heis").unwrap(), &a);
    assert_eq!(w.operator("zero").unwrap().op, r);
    assert_eq!(w.representation("trivial").unwrap().rep, rep);

    let classes = classify_extensions(&w, "heis", "zero", "trivial").unwrap();
    assert!(classes.passed(), "{classes}");
    assert_eq!(classes.extension_classes.unwrap() + 1, classes.betti2.unwrap());
    assert!(classes.to_string().contains("classes breaking the cyclic LY3 condition (no extension) = 1"));
}

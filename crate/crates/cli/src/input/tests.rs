use super::*;

fn load(text: &str) -> CliResult<Workspace> {
    Workspace::from_sources(&[("test.toml".to_string(), text.to_string())])
}

const SAMPLE: &str = include_str!("../../samples/two_dim.toml");

#[test]
fn sample_file_matches_the_built_in_example() {
    let ws = load(SAMPLE).unwrap();
    let a = &ws.algebras["two_dim"];
    let built_in = rly_core::samples::two_dim_example();
    assert_eq!(a.binary(), built_in.binary());
    assert_eq!(a.ternary(), built_in.ternary());
    assert_eq!(ws.operators["T"].op, rly_core::samples::two_dim_standard_operator());
    assert_eq!(ws.representations["adj"].rep, adjoint_rep(&built_in, Some(&ws.operators["T"].op)));
    assert_eq!(ws.deformations["scaled"].deformation.order(), 1);
    assert!(ws.extensions["split"].cocycle == ExtensionCocycle::zero(2, 2));
}

#[test]
fn mirrored_entries_are_accepted_when_consistent() {
    let ws = load("[algebras.a]\ndim = 2\nbinary = [[0, 1, 0, \"1\"], [1, 0, 0, \"-1\"]]\n").unwrap();
    assert_eq!(ws.algebras["a"].binary().coeff(1, 0, 0), &Scalar::from_int(-1));
}

#[test]
fn inconsistent_antisymmetric_entries_are_rejected() {
    let err = load("[algebras.a]\ndim = 2\nbinary = [[0, 1, 0, \"1\"], [1, 0, 0, \"1\"]]\n").unwrap_err();
    assert!(matches!(err, CliError::Invalid { .. }), "{err}");
    assert!(err.to_string().contains("disagree"));
}

#[test]
fn diagonal_entries_must_vanish() {
    let err = load("[algebras.a]\ndim = 2\nternary = [[1, 1, 0, 0, \"2\"]]\n").unwrap_err();
    assert!(err.to_string().contains("antisymmetry"), "{err}");
}

#[test]
fn repeated_entries_must_agree() {
    let err = load("[algebras.a]\ndim = 2\nbinary = [[0, 1, 0, \"1\"], [0, 1, 0, \"2\"]]\n").unwrap_err();
    assert!(err.to_string().contains("twice"), "{err}");
}

#[test]
fn parse_errors_carry_a_position() {
    let err = load("[algebras.a]\ndim = \n").unwrap_err();
    assert!(matches!(err, CliError::Parse { .. }));
    assert!(err.to_string().contains("line 2"), "{err}");
}

#[test]
fn unknown_references_and_bad_shapes_are_reported() {
    let err = load("[operators.T]\nalgebra = \"missing\"\nmatrix = []\nweight = 0\n").unwrap_err();
    assert!(matches!(err, CliError::NameNotFound { .. }), "{err}");
    let err =
        load("[algebras.a]\ndim = 2\n[operators.T]\nalgebra = \"a\"\nmatrix = [[1, 0]]\nweight = 0\n").unwrap_err();
    assert!(matches!(err, CliError::DimMismatch { expected: 2, found: 1, .. }), "{err}");
    let err = load("[algebras.a]\ndim = 2\nbinary = [[0, 2, 0, 1]]\n").unwrap_err();
    assert!(err.to_string().contains("out of range"), "{err}");
}

#[test]
fn floats_and_malformed_rationals_are_rejected() {
    let err = load("[algebras.a]\ndim = 2\nbinary = [[0, 1, 0, 0.5]]\n").unwrap_err();
    assert!(err.to_string().contains("-1/5"), "{err}");
    let err = load("[algebras.a]\ndim = 2\nbinary = [[0, 1, 0, \"1/0\"]]\n").unwrap_err();
    assert!(matches!(err, CliError::Invalid { .. }), "{err}");
}

#[test]
fn names_are_unique_across_files_and_tables() {
    let sources = [
        ("one.toml".to_string(), "[algebras.x]\ndim = 1\n".to_string()),
        (
            "two.toml".to_string(),
            "[algebras.y]\ndim = 1\n[operators.x]\nalgebra = \"y\"\nmatrix = [[1]]\nweight = -1\n".to_string(),
        ),
    ];
    let err = Workspace::from_sources(&sources).unwrap_err();
    assert!(matches!(err, CliError::DuplicateName { .. }), "{err}");
}

#[test]
fn explicit_representations_and_cochains_load() {
    let text = "
[algebras.a]
dim = 1
[operators.T]
algebra = \"a\"
matrix = [[1]]
weight = -1
[representations.r]
algebra = \"a\"
operator = \"T\"
module_dim = 2
rho = [[0, 0, 1, \"1/2\"]]
module_op = [[1, 0], [0, 1]]
[cochains.c]
algebra = \"a\"
operator = \"T\"
representation = \"r\"
complex = \"rly\"
degree = 1
coords = [1, \"-2\"]
";
    let ws = load(text).unwrap();
    let rep = &ws.representations["r"].rep;
    assert_eq!(rep.module_dim(), 2);
    assert_eq!(rep.rho(0).row(0)[1], Scalar::new(1, 2));
    assert_eq!(ws.cochains["c"].coords, vec![Scalar::from_int(1), Scalar::from_int(-2)]);
    let bad = text.replace("coords = [1, \"-2\"]", "coords = [1]");
    assert!(matches!(load(&bad).unwrap_err(), CliError::DimMismatch { expected: 2, found: 1, .. }));
}

#[test]
fn references_must_agree_on_the_algebra() {
    let text = "
[algebras.a]
dim = 1
[algebras.b]
dim = 1
[operators.T]
algebra = \"a\"
matrix = [[1]]
weight = -1
[representations.r]
algebra = \"b\"
kind = \"adjoint\"
operator = \"T\"
";
    assert!(load(text).unwrap_err().to_string().contains("acts on `a`"));
}

#[test]
fn empty_algebra_loads() {
    let ws = load("[algebras.point]\ndim = 0\n").unwrap();
    assert_eq!(ws.algebras["point"].dim(), 0);
}

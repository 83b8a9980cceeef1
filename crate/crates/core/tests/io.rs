use std::path::PathBuf;

use conformal_core::algebra::checks::{self, SuiteOptions};
use conformal_core::fixtures;
use conformal_core::io::{self, IoError};
use conformal_core::representation::adjoint_rep;

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    std::fs::read_to_string(&p).unwrap_or_else(|e| panic!("{}: {e}", p.display()))
}

const SMALL: &str = r#"{
  "delta": 1,
  "basis": [{"name": "x", "parity": 0}, {"name": "y", "parity": 1}],
  "alpha": [["1", "0"], ["0", "1"]],
  "brackets": {"x|y": [{"target": "y", "poly": "1"}]}
}"#;

#[test]
fn shipped_algebras_load() {
    for (file, passes) in [
        ("three_generator_delta_plus.json", true),
        ("three_generator_delta_minus.json", true),
        ("three_generator_sabotaged.json", false),
        ("cur_g11.json", true),
        ("abelian3.json", true),
    ] {
        let a = io::parse_algebra(&fixture(file)).unwrap();
        assert_eq!(
            checks::run_suite(&a, file, SuiteOptions::FULL).passed(),
            passes,
            "{file}"
        );
    }
}

#[test]
fn shipped_file_matches_builtin_fixture() {
    let a = io::parse_algebra(&fixture("three_generator_delta_plus.json")).unwrap();
    assert_eq!(a.full_table(), fixtures::three_generator(1).full_table());
    assert_eq!(a.alpha(), fixtures::three_generator(1).alpha());
}

#[test]
fn algebra_round_trip() {
    for (_, a) in fixtures::passing_algebras() {
        let text = io::algebra_to_json(&a).to_string();
        let b = io::parse_algebra(&text).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn representation_and_cochain_round_trip() {
    let a = fixtures::three_generator(1);
    let r = adjoint_rep(&a);
    let text = io::representation_to_json(&a, &r).to_string();
    assert_eq!(io::parse_representation(&a, &text).unwrap(), r);
    let c = io::parse_cochain(&a, &r, &fixture("psi_e2e3.json")).unwrap();
    let again = io::parse_cochain(&a, &r, &io::cochain_to_json(&a, &r, &c).to_string()).unwrap();
    assert_eq!(c, again);
}

#[test]
fn shipped_module_parses() {
    let a = io::parse_algebra(&fixture("cur_g11.json")).unwrap();
    let r = io::parse_representation(&a, &fixture("adjoint_cur_g11.json")).unwrap();
    assert_eq!(r.dim(), 2);
}

#[test]
fn duplicate_key_rejected() {
    let text = SMALL.replace(r#""x|y": [{"target": "y", "poly": "1"}]"#, r#""x|y": [], "x|y": []"#);
    let err = io::parse_algebra(&text).unwrap_err();
    assert!(matches!(err, IoError::Syntax(_)));
    assert!(err.to_string().contains("duplicate key"), "{err}");
}

#[test]
fn unknown_field_rejected() {
    let text = SMALL.replace(r#""delta": 1,"#, r#""delta": 1, "comment": "x","#);
    assert!(io::parse_algebra(&text)
        .unwrap_err()
        .to_string()
        .contains("unknown field"));
}

#[test]
fn non_reduced_rational_rejected() {
    let text = SMALL.replace(r#""poly": "1""#, r#""poly": [{"coeff": "2/4", "vars": {}}]"#);
    assert!(io::parse_algebra(&text).is_err());
    let ok = SMALL.replace(r#""poly": "1""#, r#""poly": [{"coeff": "1/2", "vars": {"d": 1}}]"#);
    assert!(io::parse_algebra(&ok).is_ok());
}

#[test]
fn zero_exponent_and_repeated_monomial_rejected() {
    for poly in [
        r#"[{"coeff": 1, "vars": {"d": 0}}]"#,
        r#"[{"coeff": 1, "vars": {"d": 1}}, {"coeff": 2, "vars": {"d": 1}}]"#,
        r#"[{"coeff": "0", "vars": {}}]"#,
    ] {
        let text = SMALL.replace(r#""poly": "1""#, &format!(r#""poly": {poly}"#));
        let err = io::parse_algebra(&text).unwrap_err();
        assert!(matches!(err, IoError::Syntax(_)), "{poly}: {err}");
    }
}

#[test]
fn grading_error_is_semantic() {
    let text = SMALL.replace(r#""target": "y""#, r#""target": "x""#);
    let err = io::parse_algebra(&text).unwrap_err();
    assert!(matches!(err, IoError::Semantic(_)), "{err}");
}

#[test]
fn unknown_name_is_reference_error() {
    let text = SMALL.replace(r#""target": "y""#, r#""target": "z""#);
    assert!(matches!(
        io::parse_algebra(&text).unwrap_err(),
        IoError::Reference { .. }
    ));
}

#[test]
fn syntax_error_has_position() {
    let err = io::parse_algebra("{\n  \"delta\": 1,,\n}").unwrap_err();
    assert!(err.to_string().contains("line 2"), "{err}");
}

#[test]
fn finite_dimensional_input() {
    let g = io::parse_jordan_lie(&fixture("g11_jordan_sign.json"), false).unwrap();
    assert!(!g.check().passed());
    assert!(io::parse_jordan_lie(&fixture("g11_jordan_sign.json"), true).is_err());
    assert!(io::parse_jordan_lie(&fixture("g11.json"), true).is_ok());
}

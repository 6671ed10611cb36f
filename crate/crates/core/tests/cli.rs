//! End-to-end coverage of the `hvlab` binary: golden outputs, exit codes,
//! JSON round trips and fault injection.
//!
//! Set `HVLAB_BLESS=1` to rewrite the golden files from current output.

use std::path::PathBuf;
use std::process::{Command, Output};

use hvlab::cli::{cmd_verify_reps, Format, EXIT_FAILURE, EXIT_OK};
use hvlab::experiment::ContradictionReport;
use hvlab::registry::{Registry, Representation};
use hvlab::report::{render_contradiction, DerivationReport, EprReport};
use hvlab::triplet::{SymTriplet, Triple};

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn hvlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hvlab"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("run hvlab")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn assert_golden(name: &str, args: &[&str], code: i32) {
    let out = hvlab(args);
    assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = manifest_dir().join("tests/golden").join(name);
    if std::env::var_os("HVLAB_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(stdout(&out), expected, "golden mismatch for {name}");
}

#[test]
fn golden_derivations() {
    assert_golden("derive_H.txt", &["derive", "H"], 0);
    assert_golden("derive_S.txt", &["derive", "S"], 0);
    assert_golden("derive_CNOT.txt", &["derive", "CNOT"], 0);
    assert_golden("derive_T.txt", &["derive", "T"], 2);
    assert_golden("derive_H.json", &["derive", "H", "--format", "json"], 0);
}

#[test]
fn golden_experiment() {
    assert_golden("epr_no_phase_shift.txt", &["epr", "--no-phase-shift"], 0);
    assert_golden("epr_phase_shift.txt", &["epr", "--phase-shift"], 0);
    assert_golden("contradiction.txt", &["contradiction"], 0);
    assert_golden("contradiction.json", &["contradiction", "--format", "json"], 0);
    assert_golden("verify_reps.txt", &["verify-reps"], 0);
}

#[test]
fn derive_identity_exits_zero() {
    let out = hvlab(&["derive", "I"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("i: ⟨x,y,z⟩ ↦ ⟨x, y, z⟩"));
}

#[test]
fn derive_from_file() {
    let out = hvlab(&["derive", "tests/fixtures/sqrt_x.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("sx: ⟨x,y,z⟩ ↦ ⟨x, -z, y⟩"));
}

#[test]
fn input_errors_exit_one() {
    for args in [
        vec!["derive", "tests/fixtures/not_unitary.json"],
        vec!["derive", "no/such/file.json"],
        vec!["derive", "Cargo.toml"],
        vec!["epr"],
        vec!["epr", "--phase-shift", "--no-phase-shift"],
        vec!["derive", "H", "--format", "yaml"],
        vec![],
    ] {
        let out = hvlab(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?} should explain on stderr");
    }
}

#[test]
fn derive_report_embeds_hash() {
    let out = stdout(&hvlab(&["derive", "CNOT", "--format", "json"]));
    let report: DerivationReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.matrix_sha256.len(), 16);
    assert_eq!(report.preserved.len(), 20);
    assert_eq!(report.escapes.len(), 16);
    assert_eq!(report.constraints.len(), 40);
    assert!(report.total);
}

#[test]
fn json_roundtrips_to_identical_text() {
    for gate in ["H", "S", "CNOT", "T", "Y"] {
        let json = stdout(&hvlab(&["derive", gate, "--format", "json"]));
        let text = stdout(&hvlab(&["derive", gate]));
        let report: DerivationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report.render_text(), text, "{gate}");
    }
    for flag in ["--phase-shift", "--no-phase-shift"] {
        let json = stdout(&hvlab(&["epr", flag, "--format", "json"]));
        let report: EprReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report.render_text(), stdout(&hvlab(&["epr", flag])));
    }
    let json = stdout(&hvlab(&["contradiction", "--format", "json"]));
    let report: ContradictionReport = serde_json::from_str(&json).unwrap();
    assert_eq!(render_contradiction(&report), stdout(&hvlab(&["contradiction"])));
    assert_eq!(report.branches[0].satisfying_mask, 0x9669);
    assert_eq!(report.branches[1].satisfying_mask, 0x6996);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["derive", "CNOT", "--format", "json"][..],
        &["contradiction"][..],
        &["verify-reps", "--format", "json"][..],
        &["oracle-check"][..],
    ] {
        assert_eq!(hvlab(args).stdout, hvlab(args).stdout, "{args:?}");
    }
}

#[test]
fn oracle_check_passes() {
    let out = hvlab(&["oracle-check"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[pass] CNOT·(H⊗I)|Z-,Z-⟩ ∝ |Ψ−⟩"));
    assert!(!text.contains("FAIL"));
}

/// `cnot` with the target's Z update dropped.
struct CorruptCnot;

impl Representation for CorruptCnot {
    fn name(&self) -> &str {
        "cnot"
    }
    fn gate(&self) -> &str {
        "CNOT"
    }
    fn arity(&self) -> usize {
        2
    }
    fn apply_unchecked(&self, inputs: &[SymTriplet]) -> Vec<SymTriplet> {
        let (a, b) = hvlab::triplet::cnot(&inputs[0], &inputs[1]);
        vec![a, Triple::new(b.x, b.y, inputs[1].z.clone())]
    }
}

#[test]
fn corrupted_cnot_fails_verification() {
    let mut registry = Registry::builtin();
    registry.register(Box::new(CorruptCnot));
    let mut out = Vec::new();
    let code = cmd_verify_reps(&registry, Format::Text, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    assert_eq!(code, EXIT_FAILURE);
    assert!(text.contains("[FAIL] derived-vs-builtin: cnot (CNOT)"), "{text}");
    assert!(text.contains("[FAIL] oracle coherence: cnot (CNOT)"), "{text}");

    let mut out = Vec::new();
    assert_eq!(cmd_verify_reps(&Registry::builtin(), Format::Text, &mut out).unwrap(), EXIT_OK);
}

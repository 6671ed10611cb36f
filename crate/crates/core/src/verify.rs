//! Cross-checks between registered representations, their derivations from
//! gate matrices, and the exact quantum oracle.

use serde::{Deserialize, Serialize};

use crate::derive::{derive_full, enumerate_mappings, ComponentRep};
use crate::error::{Error, Result};
use crate::qstate::{bell_psi_minus, BasisLabel, GateMatrix, BUILTIN_GATES};
use crate::registry::{Registry, Representation};
use crate::triplet::{Assignment, Axis, SignMonomial, Spin, SymTriplet, Triplet, Var};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn from_result(name: impl Into<String>, r: Result<Option<String>>) -> Check {
        let (passed, detail) = match r {
            Ok(None) => (true, None),
            Ok(Some(why)) => (false, Some(why)),
            Err(e) => (false, Some(e.to_string())),
        };
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

/// `None` on success, `Some(reason)` on failure.
type Outcome = Result<Option<String>>;

fn gate_of(rep: &dyn Representation) -> Result<GateMatrix> {
    GateMatrix::builtin(rep.gate()).ok_or_else(|| Error::UnknownGate(rep.gate().to_owned()))
}

fn concrete_inputs(arity: usize) -> Vec<Vec<Triplet>> {
    (0..arity).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                Triplet::all().into_iter().map(move |t| {
                    let mut next = prefix.clone();
                    next.push(t);
                    next
                })
            })
            .collect()
    })
}

fn fresh_inputs(arity: usize) -> Vec<SymTriplet> {
    (1..=arity as u8).map(SymTriplet::fresh).collect()
}

/// Same monomials as the derivation, and same values on all `8^arity`
/// concrete inputs.
fn derived_matches(rep: &dyn Representation) -> Outcome {
    let g = gate_of(rep)?;
    let derived = derive_full(&g)?.rep;
    let Some(expected) = derived.triplets() else {
        return Ok(Some(format!("{} has no total derivation: {derived}", g.name())));
    };
    let got = rep.apply(&fresh_inputs(rep.arity()))?;
    if got != expected {
        let show = |ts: &[SymTriplet]| ts.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        return Ok(Some(format!("builtin {} vs derived {}", show(&got), show(&expected))));
    }
    for inputs in concrete_inputs(rep.arity()) {
        let a: Assignment = inputs
            .iter()
            .enumerate()
            .flat_map(|(q, t)| {
                Axis::ALL.map(|ax| (Var::new(q as u8 + 1, ax), *t.get(ax)))
            })
            .collect();
        let want = expected.iter().map(|t| t.eval(&a)).collect::<Result<Vec<_>>>()?;
        if rep.apply_concrete(&inputs)? != want {
            return Ok(Some(format!("disagrees on input {inputs:?}")));
        }
    }
    Ok(None)
}

fn symbolic_concrete(rep: &dyn Representation) -> Outcome {
    let sym = fresh_inputs(rep.arity());
    let out = rep.apply(&sym)?;
    for a in Assignment::enumerate(&Var::all(rep.arity())) {
        let lhs = out.iter().map(|t| t.eval(&a)).collect::<Result<Vec<_>>>()?;
        let inputs = sym.iter().map(|t| t.eval(&a)).collect::<Result<Vec<_>>>()?;
        if lhs != rep.apply_concrete(&inputs)? {
            return Ok(Some(format!("mismatch at {a:?}")));
        }
    }
    Ok(None)
}

/// Whenever an input product state maps into the basis, the representation
/// must output the labelled value on every input consistent with the labels.
fn oracle_coherence(rep: &dyn Representation) -> Outcome {
    let table = enumerate_mappings(&gate_of(rep)?)?;
    let out = rep.apply(&fresh_inputs(rep.arity()))?;
    for m in &table.preserved {
        for a in Assignment::enumerate(&Var::all(rep.arity())) {
            let consistent = m
                .input
                .iter()
                .enumerate()
                .all(|(q, l)| a.get(Var::new(q as u8 + 1, l.axis)).is_ok_and(|s| s == l.sign));
            if !consistent {
                continue;
            }
            for (q, l) in m.output.iter().enumerate() {
                if out[q].get(l.axis).eval(&a)? != l.sign {
                    return Ok(Some(format!(
                        "{} ↦ {} violated",
                        crate::derive::render_labels(&m.input),
                        crate::derive::render_labels(&m.output)
                    )));
                }
            }
        }
    }
    Ok(None)
}

fn power_is_identity(registry: &Registry, name: &str, power: usize) -> Outcome {
    let rep = registry
        .get(name)
        .ok_or_else(|| Error::UnknownGate(name.to_owned()))?;
    for inputs in concrete_inputs(rep.arity()) {
        let mut cur = inputs.clone();
        for _ in 0..power {
            cur = rep.apply_concrete(&cur)?;
        }
        if cur != inputs {
            return Ok(Some(format!("not the identity on {inputs:?}")));
        }
    }
    Ok(None)
}

fn cnot_remarks() -> Outcome {
    let rep = derive_full(&GateMatrix::cnot())?.rep;
    for v in [Var::new(1, Axis::Z), Var::new(2, Axis::X)] {
        if rep.component(v) != Some(&ComponentRep::Total(SignMonomial::var(v))) {
            return Ok(Some(format!("{v} is not left unchanged")));
        }
    }
    Ok(None)
}

/// Every coherence check over the registry, in a fixed order.
pub fn verify_reps(registry: &Registry) -> Vec<Check> {
    let mut checks = Vec::new();
    for rep in registry.iter() {
        let tag = format!("{} ({})", rep.name(), rep.gate());
        checks.push(Check::from_result(format!("derived-vs-builtin: {tag}"), derived_matches(rep)));
        checks.push(Check::from_result(format!("symbolic/concrete: {tag}"), symbolic_concrete(rep)));
        checks.push(Check::from_result(format!("oracle coherence: {tag}"), oracle_coherence(rep)));
    }
    for (name, power, label) in [("h", 2, "h∘h = id"), ("p", 4, "p⁴ = id"), ("cnot", 2, "cnot∘cnot = id")] {
        checks.push(Check::from_result(label, power_is_identity(registry, name, power)));
    }
    checks.push(Check::from_result("cnot leaves z1 and x2 unchanged", cnot_remarks()));
    for (gate, expected) in [("H", 6), ("S", 6), ("CNOT", 20)] {
        let g = GateMatrix::builtin(gate).expect("builtin");
        let total = 6usize.pow(g.arity() as u32);
        let (name, outcome) = match enumerate_mappings(&g) {
            Ok(t) => (
                format!("{gate} preserved product states: {}/{total}", t.preserved.len()),
                Ok((t.preserved.len() != expected).then(|| format!("expected {expected}"))),
            ),
            Err(e) => (format!("{gate} preserved product states"), Err(e)),
        };
        checks.push(Check::from_result(name, outcome));
    }
    checks
}

/// Exact quantum-side facts the triplet model is tested against.
pub fn oracle_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for name in BUILTIN_GATES {
        let g = GateMatrix::builtin(name).expect("builtin");
        checks.push(Check::from_result(
            format!("{name} is unitary up to scale"),
            g.check_unitary().map(|_| None),
        ));
    }
    let circuit = || -> Outcome {
        let zm = BasisLabel::new(Axis::Z, Spin::Minus).eigenvector();
        let hi = GateMatrix::hadamard().kron(&GateMatrix::identity())?;
        let out = GateMatrix::cnot().apply(&hi.apply(&zm.tensor(&zm)?)?)?;
        Ok((!out.proportional(&bell_psi_minus())?).then(|| format!("got {out}")))
    };
    checks.push(Check::from_result("CNOT·(H⊗I)|Z-,Z-⟩ ∝ |Ψ−⟩", circuit()));
    checks.push(Check::from_result(
        "|Ψ−⟩ is entangled",
        bell_psi_minus().separable().map(|s| s.then(|| "separable".to_owned())),
    ));
    for axis in Axis::ALL {
        checks.push(Check::from_result(
            format!("|Ψ−⟩ predicts opposite {axis} outcomes"),
            bell_psi_minus()
                .predicts_opposite(axis)
                .map(|ok| (!ok).then(|| "not anti-correlated".to_owned())),
        ));
    }
    let yy = || -> Outcome {
        let yp = BasisLabel::new(Axis::Y, Spin::Plus).eigenvector();
        let img = GateMatrix::cnot().apply(&yp.tensor(&yp)?)?;
        Ok(img.separable()?.then(|| format!("{img} is separable")))
    };
    checks.push(Check::from_result("CNOT|Y+,Y+⟩ is not a product state", yy()));
    checks
}

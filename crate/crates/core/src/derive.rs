//! Derives triplet representations of gates from their matrices.
//!
//! Every product of Pauli eigenstates that a gate sends back into the
//! eigenbasis (up to phase) yields implications `premise ⇒ conclusion` on
//! triplet components. Merging those implications over all `2^(3·arity)`
//! input assignments gives, per output component, either a forced value
//! everywhere (then interpolated to a signed monomial), somewhere, or nowhere.
//! On ±1 domains this exhaustive merge is equivalent to reasoning by
//! contraposition.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qstate::{BasisLabel, GateMatrix, Ket};
use crate::registry::Representation;
use crate::triplet::{Assignment, SignMonomial, Spin, SymTriplet, Triple, Var};

/// One eigenstate product mapped into the eigenbasis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mapping {
    pub input: Vec<BasisLabel>,
    pub output: Vec<BasisLabel>,
}

/// The `6^arity` basis products, split into those kept in the basis and those
/// that escape it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MappingTable {
    pub arity: usize,
    pub preserved: Vec<Mapping>,
    pub escapes: Vec<Vec<BasisLabel>>,
}

impl MappingTable {
    pub fn total(&self) -> usize {
        self.preserved.len() + self.escapes.len()
    }
}

/// Renders labels as a ket: `|Z+⟩`, `|Z+,Y-⟩`.
pub fn render_labels(labels: &[BasisLabel]) -> String {
    let parts: Vec<String> = labels.iter().map(ToString::to_string).collect();
    format!("|{}⟩", parts.join(","))
}

pub fn enumerate_mappings(g: &GateMatrix) -> Result<MappingTable> {
    g.check_unitary()?;
    let arity = g.arity();
    let mut preserved = Vec::new();
    let mut escapes = Vec::new();
    for input in BasisLabel::products(arity) {
        let ket = product_ket(&input)?;
        match g.apply(&ket)?.classify()? {
            Some(output) => preserved.push(Mapping { input, output }),
            None => escapes.push(input),
        }
    }
    Ok(MappingTable {
        arity,
        preserved,
        escapes,
    })
}

fn product_ket(labels: &[BasisLabel]) -> Result<Ket> {
    let mut it = labels.iter();
    let first = it.next().expect("at least one label").eigenvector();
    it.try_fold(first, |acc, l| acc.tensor(&l.eigenvector()))
}

/// `premise ⇒ conclusion`, where the conclusion names an output component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub premise: Vec<(Var, Spin)>,
    pub conclusion: (Var, Spin),
}

impl Constraint {
    pub fn satisfied_by(&self, a: &Assignment) -> Result<bool> {
        for &(v, s) in &self.premise {
            if a.get(v)? != s {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{x=+1} ⇒ z'=+1` for one qubit, `{z1=+1, y2=-1} ⇒ y2'=-1` for two.
    pub fn render(&self, arity: usize) -> String {
        let name = |v: &Var| component_name(*v, arity);
        let premise: Vec<String> = self
            .premise
            .iter()
            .map(|(v, s)| format!("{}={s}", name(v)))
            .collect();
        let (cv, cs) = self.conclusion;
        format!("{{{}}} ⇒ {}'={cs}", premise.join(", "), name(&cv))
    }
}

fn component_name(v: Var, arity: usize) -> String {
    if arity == 1 {
        v.axis.letter().to_string()
    } else {
        v.to_string()
    }
}

/// One constraint per output label of every preserved mapping, with the full
/// input label set as premise.
pub fn extract_constraints(table: &MappingTable) -> Vec<Constraint> {
    let label_var = |q: usize, l: &BasisLabel| Var::new(q as u8 + 1, l.axis);
    table
        .preserved
        .iter()
        .flat_map(|m| {
            let premise: Vec<(Var, Spin)> = m
                .input
                .iter()
                .enumerate()
                .map(|(q, l)| (label_var(q, l), l.sign))
                .collect();
            m.output.iter().enumerate().map(move |(q, l)| Constraint {
                premise: premise.clone(),
                conclusion: (label_var(q, l), l.sign),
            })
        })
        .collect()
}

/// What the constraints say about one output component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentRep {
    /// Forced everywhere, equal to this monomial in the input variables.
    Total(SignMonomial),
    /// Forced everywhere, but not a signed monomial. Holds the full table.
    NonMonomial(Vec<Spin>),
    /// Forced on a strict, nonempty subset of assignments.
    Partial(Vec<Option<Spin>>),
    Undetermined,
}

impl ComponentRep {
    pub fn status(&self) -> &'static str {
        match self {
            ComponentRep::Total(_) => "total",
            ComponentRep::NonMonomial(_) => "non-monomial",
            ComponentRep::Partial(_) => "partial",
            ComponentRep::Undetermined => "undetermined",
        }
    }

    pub fn monomial(&self) -> Option<&SignMonomial> {
        match self {
            ComponentRep::Total(m) => Some(m),
            _ => None,
        }
    }

    /// Number of assignments at which a value is forced.
    pub fn forced_count(&self, of: usize) -> usize {
        match self {
            ComponentRep::Total(_) | ComponentRep::NonMonomial(_) => of,
            ComponentRep::Partial(t) => t.iter().filter(|v| v.is_some()).count(),
            ComponentRep::Undetermined => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionalRep {
    arity: usize,
    /// Output components in order `x1', y1', z1', x2', …`.
    components: Vec<(Var, ComponentRep)>,
}

impl FunctionalRep {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn components(&self) -> &[(Var, ComponentRep)] {
        &self.components
    }

    pub fn component(&self, v: Var) -> Option<&ComponentRep> {
        self.components.iter().find(|(c, _)| *c == v).map(|(_, r)| r)
    }

    pub fn is_total(&self) -> bool {
        self.components
            .iter()
            .all(|(_, c)| matches!(c, ComponentRep::Total(_)))
    }

    /// The output triplets as monomials in the input variables, if total.
    pub fn triplets(&self) -> Option<Vec<SymTriplet>> {
        let ms: Vec<SignMonomial> = self
            .components
            .iter()
            .map(|(_, c)| c.monomial().cloned())
            .collect::<Option<_>>()?;
        Some(
            ms.chunks(3)
                .map(|c| Triple::new(c[0].clone(), c[1].clone(), c[2].clone()))
                .collect(),
        )
    }

    /// `⟨x,y,z⟩ ↦ ⟨z, -y, x⟩`; undetermined components print as `?`.
    pub fn formula(&self) -> String {
        let render = |c: &ComponentRep| match c {
            ComponentRep::Total(m) if self.arity == 1 => m.plain(),
            ComponentRep::Total(m) => m.to_string(),
            _ => "?".to_owned(),
        };
        let outs: Vec<String> = self
            .components
            .chunks(3)
            .map(|c| {
                format!(
                    "⟨{}, {}, {}⟩",
                    render(&c[0].1),
                    render(&c[1].1),
                    render(&c[2].1)
                )
            })
            .collect();
        if self.arity == 1 {
            format!("⟨x,y,z⟩ ↦ {}", outs[0])
        } else {
            format!("(⟨x1,y1,z1⟩, ⟨x2,y2,z2⟩) ↦ ({})", outs.join(", "))
        }
    }

    pub fn component_name(&self, v: Var) -> String {
        format!("{}'", component_name(v, self.arity))
    }

    /// Every total component satisfies every constraint on it.
    pub fn is_sound_for(&self, constraints: &[Constraint]) -> Result<bool> {
        let vars = Var::all(self.arity);
        for a in Assignment::enumerate(&vars) {
            for c in constraints {
                let Some(ComponentRep::Total(m)) = self.component(c.conclusion.0) else {
                    continue;
                };
                if c.satisfied_by(&a)? && m.eval(&a)? != c.conclusion.1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Collects forced values per output component over all input assignments.
pub fn merge(constraints: &[Constraint], arity: usize) -> Result<FunctionalRep> {
    let vars = Var::all(arity);
    let assignments: Vec<Assignment> = Assignment::enumerate(&vars).collect();
    let mut components = Vec::with_capacity(vars.len());
    for &out in &vars {
        let mut table: Vec<Option<Spin>> = vec![None; assignments.len()];
        for (i, a) in assignments.iter().enumerate() {
            for c in constraints.iter().filter(|c| c.conclusion.0 == out) {
                if !c.satisfied_by(a)? {
                    continue;
                }
                match table[i] {
                    Some(prev) if prev != c.conclusion.1 => {
                        return Err(Error::ConflictingConstraints {
                            component: format!("{}'", component_name(out, arity)),
                            assignment: i,
                        })
                    }
                    _ => table[i] = Some(c.conclusion.1),
                }
            }
        }
        components.push((out, classify_table(&vars, table)));
    }
    Ok(FunctionalRep { arity, components })
}

fn classify_table(vars: &[Var], table: Vec<Option<Spin>>) -> ComponentRep {
    let forced = table.iter().filter(|v| v.is_some()).count();
    if forced == 0 {
        return ComponentRep::Undetermined;
    }
    if forced < table.len() {
        return ComponentRep::Partial(table);
    }
    let full: Vec<Spin> = table.into_iter().map(|v| v.expect("all forced")).collect();
    match interpolate(vars, &full) {
        Some(m) => ComponentRep::Total(m),
        None => ComponentRep::NonMonomial(full),
    }
}

/// Fits `±∏ v` to a full truth table indexed as in [`Assignment::from_index`].
///
/// A variable belongs to the monomial iff flipping it flips the output
/// everywhere; the sign is the value at the all-`+1` assignment. The fit is
/// then checked against every row.
pub fn interpolate(vars: &[Var], table: &[Spin]) -> Option<SignMonomial> {
    let mut members = Vec::new();
    for (k, &v) in vars.iter().enumerate() {
        let bit = 1usize << k;
        if (0..table.len()).all(|i| table[i] != table[i ^ bit]) {
            members.push(v);
        }
    }
    let m = SignMonomial::from_parts(table[0], members);
    let fits = (0..table.len()).all(|i| {
        m.eval(&Assignment::from_index(vars, i))
            .is_ok_and(|s| s == table[i])
    });
    fits.then_some(m)
}

/// Mapping table, constraints and merged representation for one gate.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub table: MappingTable,
    pub constraints: Vec<Constraint>,
    pub rep: FunctionalRep,
}

pub fn derive_full(g: &GateMatrix) -> Result<Derivation> {
    let table = enumerate_mappings(g)?;
    let constraints = extract_constraints(&table);
    let rep = merge(&constraints, table.arity)?;
    Ok(Derivation {
        table,
        constraints,
        rep,
    })
}

pub fn derive(g: &GateMatrix) -> Result<FunctionalRep> {
    Ok(derive_full(g)?.rep)
}

/// A total derived representation, usable wherever a builtin one is.
pub struct DerivedRep {
    name: String,
    gate: String,
    outputs: Vec<SymTriplet>,
}

impl DerivedRep {
    /// `None` unless every component is total.
    pub fn new(name: impl Into<String>, gate: impl Into<String>, rep: &FunctionalRep) -> Option<Self> {
        Some(DerivedRep {
            name: name.into(),
            gate: gate.into(),
            outputs: rep.triplets()?,
        })
    }

    pub fn from_gate(g: &GateMatrix) -> Result<Option<Self>> {
        let rep = derive(g)?;
        Ok(Self::new(g.name().to_lowercase(), g.name(), &rep))
    }
}

impl Representation for DerivedRep {
    fn name(&self) -> &str {
        &self.name
    }

    fn gate(&self) -> &str {
        &self.gate
    }

    fn arity(&self) -> usize {
        self.outputs.len()
    }

    fn apply_unchecked(&self, inputs: &[SymTriplet]) -> Vec<SymTriplet> {
        let sub = |v: Var| inputs[v.qubit as usize - 1].get(v.axis).clone();
        self.outputs
            .iter()
            .map(|t| t.map(|m| m.substitute(sub)))
            .collect()
    }
}

impl fmt::Display for FunctionalRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.formula())
    }
}

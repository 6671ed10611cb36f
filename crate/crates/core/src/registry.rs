//! Functional representations of gates on triplets, behind a common trait and
//! looked up by name at runtime.
//!
//! The builtin registry holds the hand-written maps `h`, `p` and `cnot`.
//! Representations obtained from [`crate::derive`] implement the same trait,
//! so the two can be cross-checked uniformly.

use crate::error::{Error, Result};
use crate::triplet::{cnot, h, p_half_pi, SymTriplet, Triplet};

/// A map from `arity` triplets to `arity` triplets.
pub trait Representation: Send + Sync {
    /// Registry key, e.g. `"cnot"`.
    fn name(&self) -> &str;

    /// Name of the builtin gate matrix this represents.
    fn gate(&self) -> &str;

    fn arity(&self) -> usize;

    fn apply_unchecked(&self, inputs: &[SymTriplet]) -> Vec<SymTriplet>;

    fn apply(&self, inputs: &[SymTriplet]) -> Result<Vec<SymTriplet>> {
        if inputs.len() != self.arity() {
            return Err(Error::Arity {
                name: self.name().to_owned(),
                expected: self.arity(),
                found: inputs.len(),
            });
        }
        Ok(self.apply_unchecked(inputs))
    }

    /// Concrete inputs are constant monomials; constants map to constants.
    fn apply_concrete(&self, inputs: &[Triplet]) -> Result<Vec<Triplet>> {
        let sym: Vec<SymTriplet> = inputs.iter().map(Triplet::to_symbolic).collect();
        Ok(self
            .apply(&sym)?
            .iter()
            .map(|t| t.as_concrete().expect("constant inputs give constant outputs"))
            .collect())
    }
}

pub struct Hadamard;

impl Representation for Hadamard {
    fn name(&self) -> &str {
        "h"
    }
    fn gate(&self) -> &str {
        "H"
    }
    fn arity(&self) -> usize {
        1
    }
    fn apply_unchecked(&self, inputs: &[SymTriplet]) -> Vec<SymTriplet> {
        vec![h(&inputs[0])]
    }
}

pub struct PhaseHalfPi;

impl Representation for PhaseHalfPi {
    fn name(&self) -> &str {
        "p"
    }
    fn gate(&self) -> &str {
        "S"
    }
    fn arity(&self) -> usize {
        1
    }
    fn apply_unchecked(&self, inputs: &[SymTriplet]) -> Vec<SymTriplet> {
        vec![p_half_pi(&inputs[0])]
    }
}

pub struct ControlledNot;

impl Representation for ControlledNot {
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
        let (a, b) = cnot(&inputs[0], &inputs[1]);
        vec![a, b]
    }
}

/// Named representations, kept in registration order.
#[derive(Default)]
pub struct Registry {
    reps: Vec<Box<dyn Representation>>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// `h`, `p`, `cnot`.
    pub fn builtin() -> Self {
        let mut r = Self::new();
        r.register(Box::new(Hadamard));
        r.register(Box::new(PhaseHalfPi));
        r.register(Box::new(ControlledNot));
        r
    }

    /// Adds `rep`, replacing and returning any entry with the same name.
    pub fn register(&mut self, rep: Box<dyn Representation>) -> Option<Box<dyn Representation>> {
        match self.reps.iter().position(|r| r.name() == rep.name()) {
            Some(i) => Some(std::mem::replace(&mut self.reps[i], rep)),
            None => {
                self.reps.push(rep);
                None
            }
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn Representation> {
        self.reps.iter().find(|r| r.name() == name).map(|r| r.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Representation> {
        self.reps.iter().map(|r| r.as_ref())
    }

    pub fn names(&self) -> Vec<&str> {
        self.reps.iter().map(|r| r.name()).collect()
    }
}

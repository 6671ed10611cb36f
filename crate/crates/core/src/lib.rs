//! Exact laboratory for the triplet hidden-variable model of spin-1/2
//! particles.
//!
//! A qubit is described by a triplet `⟨x,y,z⟩` of pre-assigned ±1 outcomes
//! for the three Pauli observables. Gates act on triplets through
//! *functional representations*, which [`derive`] obtains mechanically from a
//! gate matrix. [`experiment`] propagates an EPR-pair preparation through
//! those representations and shows, by enumerating every hidden-variable
//! assignment, that no triplet assignment reproduces the quantum predictions
//! once the phase-shifter choice is free.
//!
//! All arithmetic is exact, over the cyclotomic integers [`scalar::CycInt`].

pub mod cli;
pub mod derive;
pub mod error;
pub mod experiment;
pub mod qstate;
pub mod registry;
pub mod report;
pub mod scalar;
pub mod triplet;
pub mod verify;

pub use error::{Error, Result};

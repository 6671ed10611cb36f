//! The EPR-pair experiment on triplets and its exhaustive no-go check.
//!
//! Two qubits start in `|Z-⟩`, so `z1 = z2 = -1` and the free hidden
//! variables are `x1, y1, x2, y2`. Assignment `i ∈ 0..16` sets variable `k`
//! of [`free_vars`] to `-1` iff bit `k` of `i` is set, and satisfying sets
//! are 16-bit masks with bit `i` set iff assignment `i` satisfies.
//!
//! The phase-shifter choice is made after preparation, so both branches are
//! evaluated on the same assignment set.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::qstate::bell_psi_minus;
use crate::triplet::{
    cnot, h, p_half_pi, xy_product, Assignment, Axis, SignMonomial, Spin, SymTriplet, Triple,
    Triplet, Var,
};

pub type SymPair = (SymTriplet, SymTriplet);
pub type Pair = (Triplet, Triplet);

pub const ASSIGNMENTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExperimentBranch {
    pub phase_shifter_applied: bool,
}

impl ExperimentBranch {
    pub const NO_SHIFT: ExperimentBranch = ExperimentBranch {
        phase_shifter_applied: false,
    };
    pub const SHIFT: ExperimentBranch = ExperimentBranch {
        phase_shifter_applied: true,
    };
    pub const BOTH: [ExperimentBranch; 2] = [Self::NO_SHIFT, Self::SHIFT];

    pub fn describe(self) -> &'static str {
        if self.phase_shifter_applied {
            "phase shifter on A"
        } else {
            "no phase shifter"
        }
    }
}

/// `x1, y1, x2, y2`.
pub fn free_vars() -> [Var; 4] {
    [
        Var::new(1, Axis::X),
        Var::new(1, Axis::Y),
        Var::new(2, Axis::X),
        Var::new(2, Axis::Y),
    ]
}

pub fn assignment(index: usize) -> Assignment {
    Assignment::from_index(&free_vars(), index)
}

/// `(⟨x1, y1, -1⟩, ⟨x2, y2, -1⟩)`.
pub fn prepare_symbolic() -> SymPair {
    let prep = |q: u8| {
        Triple::new(
            Var::new(q, Axis::X).into(),
            Var::new(q, Axis::Y).into(),
            SignMonomial::constant(Spin::Minus),
        )
    };
    (prep(1), prep(2))
}

/// One labelled state of the two-qubit register.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub label: String,
    pub pair: SymPair,
}

/// Every intermediate state: preparation, optional shifter on A, H on A,
/// then CNOT with A as control.
pub fn trace_branch(b: ExperimentBranch) -> Vec<Step> {
    let (mut a, bq) = prepare_symbolic();
    let mut steps = vec![Step {
        label: "prepare |Z-⟩|Z-⟩".into(),
        pair: (a.clone(), bq.clone()),
    }];
    if b.phase_shifter_applied {
        a = p_half_pi(&a);
        steps.push(Step {
            label: "phase shifter on A".into(),
            pair: (a.clone(), bq.clone()),
        });
    }
    a = h(&a);
    steps.push(Step {
        label: "Hadamard on A".into(),
        pair: (a.clone(), bq.clone()),
    });
    steps.push(Step {
        label: "CNOT (A control, B target)".into(),
        pair: cnot(&a, &bq),
    });
    steps
}

pub fn run_branch(b: ExperimentBranch) -> SymPair {
    trace_branch(b).pop().expect("nonempty trace").pair
}

/// The same pipeline on concrete triplets.
pub fn run_branch_concrete(b: ExperimentBranch, initial: &Pair) -> Pair {
    let mut a = initial.0;
    if b.phase_shifter_applied {
        a = p_half_pi(&a);
    }
    cnot(&h(&a), &initial.1)
}

/// Concrete preparation for assignment `index`.
pub fn initial_concrete(index: usize) -> Result<Pair> {
    let (a, b) = prepare_symbolic();
    let asg = assignment(index);
    Ok((a.eval(&asg)?, b.eval(&asg)?))
}

/// Anti-correlation along `axis`, as a single monomial that must equal `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub axis: Axis,
    pub monomial: SignMonomial,
}

impl Condition {
    pub fn holds(&self, a: &Assignment) -> Result<bool> {
        Ok(self.monomial.eval(a)?.is_plus())
    }

    pub fn always(&self) -> bool {
        self.monomial == SignMonomial::one()
    }

    /// `+1 (always)`, `-1 (never)`, or `vars = ±1`.
    pub fn render(&self) -> String {
        match self.monomial.as_constant() {
            Some(Spin::Plus) => "+1 (always)".into(),
            Some(Spin::Minus) => "-1 (never)".into(),
            None => {
                let vars = SignMonomial::from_parts(Spin::Plus, self.monomial.vars().iter().copied());
                format!("{vars} = {}", self.monomial.sign())
            }
        }
    }

    pub fn satisfying_mask(&self) -> Result<u16> {
        let mut mask = 0u16;
        for i in 0..ASSIGNMENTS {
            if self.holds(&assignment(i))? {
                mask |= 1 << i;
            }
        }
        Ok(mask)
    }
}

/// Outcomes along `axis` are opposite iff `-(a·b) = +1`.
pub fn anticorrelation_condition(pair: &SymPair, axis: Axis) -> Condition {
    let product = pair.0.get(axis).clone() * pair.1.get(axis).clone();
    Condition {
        axis,
        monomial: -product,
    }
}

pub fn conditions(pair: &SymPair) -> Vec<Condition> {
    Axis::ALL
        .into_iter()
        .map(|axis| anticorrelation_condition(pair, axis))
        .collect()
}

/// Outcome of an exhaustive claim check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub holds: bool,
    pub cases: usize,
}

/// Wherever the no-shifter Y anti-correlation holds, the two prepared qubits
/// have equal XY-products. Checked over all 16 assignments.
pub fn check_claim1() -> Result<ClaimCheck> {
    let prepared = prepare_symbolic();
    let y = anticorrelation_condition(&run_branch(ExperimentBranch::NO_SHIFT), Axis::Y);
    let mut holds = true;
    for i in 0..ASSIGNMENTS {
        let a = assignment(i);
        if y.holds(&a)? {
            let (ta, tb) = (prepared.0.eval(&a)?, prepared.1.eval(&a)?);
            holds &= xy_product(&ta) == xy_product(&tb);
        }
    }
    Ok(ClaimCheck {
        holds,
        cases: ASSIGNMENTS,
    })
}

/// `shifter` negates the XY-product and keeps `z`, on all 8 triplets.
pub fn check_claim2_with(shifter: impl Fn(&Triplet) -> Triplet) -> ClaimCheck {
    let all = Triplet::all();
    let holds = all.iter().all(|t| {
        let s = shifter(t);
        xy_product(&s) == -xy_product(t) && s.z == t.z
    });
    ClaimCheck {
        holds,
        cases: all.len(),
    }
}

pub fn check_claim2() -> ClaimCheck {
    check_claim2_with(p_half_pi)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub branch: ExperimentBranch,
    pub final_pair: SymPair,
    pub conditions: Vec<Condition>,
    /// Assignments satisfying every condition of the branch.
    pub satisfying_mask: u16,
    pub satisfying_count: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Contradiction,
    Consistent,
}

/// Per-axis anti-correlation predicted by the exact quantum state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OraclePrediction {
    pub axis: Axis,
    pub opposite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContradictionReport {
    pub branches: Vec<BranchReport>,
    /// X and Z conditions are the constant `+1` in both branches.
    pub xz_always_hold: bool,
    pub intersection_mask: u16,
    /// The two satisfying sets are disjoint and cover all 16 assignments.
    pub partition: bool,
    /// No nonempty support set lies inside both satisfying sets, so no
    /// distribution over assignments meets both branches with certainty.
    pub mixture_excluded: bool,
    pub oracle: Vec<OraclePrediction>,
    pub verdict: Verdict,
}

impl ContradictionReport {
    pub fn branch(&self, b: ExperimentBranch) -> Option<&BranchReport> {
        self.branches.iter().find(|r| r.branch == b)
    }
}

pub fn branch_report(b: ExperimentBranch) -> Result<BranchReport> {
    let final_pair = run_branch(b);
    let conditions = conditions(&final_pair);
    let mut mask = u16::MAX;
    for c in &conditions {
        mask &= c.satisfying_mask()?;
    }
    Ok(BranchReport {
        branch: b,
        final_pair,
        conditions,
        satisfying_mask: mask,
        satisfying_count: mask.count_ones(),
    })
}

pub fn run_contradiction() -> Result<ContradictionReport> {
    let branches = ExperimentBranch::BOTH
        .into_iter()
        .map(branch_report)
        .collect::<Result<Vec<_>>>()?;
    let xz_always_hold = branches.iter().all(|b| {
        b.conditions
            .iter()
            .filter(|c| c.axis != Axis::Y)
            .all(Condition::always)
    });
    let (s_no, s_yes) = (branches[0].satisfying_mask, branches[1].satisfying_mask);
    let intersection_mask = s_no & s_yes;
    let partition = intersection_mask == 0 && (s_no | s_yes) == u16::MAX;

    // Certainty in a branch forces the support inside that branch's set.
    let mixture_excluded =
        (1..=u16::MAX).all(|support| support & s_no != support || support & s_yes != support);

    let psi = bell_psi_minus();
    let oracle = Axis::ALL
        .into_iter()
        .map(|axis| {
            Ok(OraclePrediction {
                axis,
                opposite: psi.predicts_opposite(axis)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let verdict = if intersection_mask == 0 && s_no != 0 && s_yes != 0 {
        Verdict::Contradiction
    } else {
        Verdict::Consistent
    };
    Ok(ContradictionReport {
        branches,
        xz_always_hold,
        intersection_mask,
        partition,
        mixture_excluded,
        oracle,
        verdict,
    })
}

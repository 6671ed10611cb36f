//! Independent floating-point route for the derivation and the experiment.
//!
//! Gate images are computed with plain `f64` complex arithmetic and compared
//! to hand-written normalized eigenvectors by overlap, then forced values are
//! tabulated by brute force. Nothing here goes through the exact ring, the
//! proportionality test, or the constraint merger.

use hvlab::derive::{derive, enumerate_mappings, ComponentRep};
use hvlab::experiment::{run_contradiction, ExperimentBranch};
use hvlab::qstate::GateMatrix;
use hvlab::triplet::{Assignment, Axis, Spin, Var};

#[derive(Clone, Copy, Debug)]
struct C(f64, f64);

impl C {
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    fn conj(self) -> C {
        C(self.0, -self.1)
    }
    fn norm2(self) -> f64 {
        self.0 * self.0 + self.1 * self.1
    }
}

const EPS: f64 = 1e-9;

fn gate_complex(g: &GateMatrix) -> Vec<Vec<C>> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    // 1, ω, i, ω³
    let basis = [C(1.0, 0.0), C(s, s), C(0.0, 1.0), C(-s, s)];
    (0..g.dim())
        .map(|r| {
            (0..g.dim())
                .map(|c| {
                    g.entry(r, c)
                        .coeffs()
                        .iter()
                        .zip(basis)
                        .fold(C(0.0, 0.0), |acc, (&k, b)| acc.add(C(k as f64 * b.0, k as f64 * b.1)))
                })
                .collect()
        })
        .collect()
}

/// (axis, sign, normalized eigenvector) for σx, σy, σz.
fn eigenstates() -> Vec<(Axis, Spin, [C; 2])> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    vec![
        (Axis::X, Spin::Plus, [C(s, 0.0), C(s, 0.0)]),
        (Axis::X, Spin::Minus, [C(s, 0.0), C(-s, 0.0)]),
        (Axis::Y, Spin::Plus, [C(s, 0.0), C(0.0, s)]),
        (Axis::Y, Spin::Minus, [C(s, 0.0), C(0.0, -s)]),
        (Axis::Z, Spin::Plus, [C(1.0, 0.0), C(0.0, 0.0)]),
        (Axis::Z, Spin::Minus, [C(0.0, 0.0), C(1.0, 0.0)]),
    ]
}

fn kron(a: &[C], b: &[C]) -> Vec<C> {
    a.iter().flat_map(|x| b.iter().map(move |y| x.mul(*y))).collect()
}

fn matvec(m: &[Vec<C>], v: &[C]) -> Vec<C> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(C(0.0, 0.0), |acc, (a, b)| acc.add(a.mul(*b))))
        .collect()
}

/// |⟨e|v⟩|² / (|e|²|v|²) = 1 iff v ∝ e.
fn parallel(e: &[C], v: &[C]) -> bool {
    let inner = e.iter().zip(v).fold(C(0.0, 0.0), |acc, (a, b)| acc.add(a.conj().mul(*b)));
    let ne: f64 = e.iter().map(|c| c.norm2()).sum();
    let nv: f64 = v.iter().map(|c| c.norm2()).sum();
    (inner.norm2() / (ne * nv) - 1.0).abs() < EPS
}

type Labels = Vec<(Axis, Spin)>;

/// Brute-force mapping list: input label tuple → output label tuple.
fn float_mappings(g: &GateMatrix) -> Vec<(Labels, Labels)> {
    let m = gate_complex(g);
    let states = eigenstates();
    let arity = if g.dim() == 2 { 1 } else { 2 };
    let tuples: Vec<Vec<usize>> = if arity == 1 {
        (0..6).map(|i| vec![i]).collect()
    } else {
        (0..36).map(|i| vec![i / 6, i % 6]).collect()
    };
    let ket = |t: &[usize]| -> Vec<C> {
        t.iter()
            .map(|&i| states[i].2.to_vec())
            .reduce(|a, b| kron(&a, &b))
            .unwrap()
    };
    let label = |t: &[usize]| t.iter().map(|&i| (states[i].0, states[i].1)).collect::<Labels>();
    let mut out = Vec::new();
    for t in &tuples {
        let image = matvec(&m, &ket(t));
        if let Some(hit) = tuples.iter().find(|u| parallel(&ket(u), &image)) {
            out.push((label(t), label(hit)));
        }
    }
    out
}

/// For every output component and input assignment, the set of values forced
/// by a consistent mapping: `None` if nothing forces it.
fn forced_table(g: &GateMatrix) -> Vec<(Var, Vec<Option<Spin>>)> {
    let arity = if g.dim() == 2 { 1 } else { 2 };
    let vars = Var::all(arity);
    let maps = float_mappings(g);
    vars.iter()
        .map(|&out| {
            let column = Assignment::enumerate(&vars)
                .map(|a| {
                    let mut forced: Option<Spin> = None;
                    for (input, output) in &maps {
                        let consistent = input.iter().enumerate().all(|(q, (ax, s))| {
                            a.get(Var::new(q as u8 + 1, *ax)).unwrap() == *s
                        });
                        let (ax, s) = output[out.qubit as usize - 1];
                        if consistent && ax == out.axis {
                            assert!(forced.is_none() || forced == Some(s), "conflict");
                            forced = Some(s);
                        }
                    }
                    forced
                })
                .collect();
            (out, column)
        })
        .collect()
}

fn check_gate(name: &str) {
    let g = GateMatrix::builtin(name).unwrap();
    let float = float_mappings(&g);
    let exact = enumerate_mappings(&g).unwrap();
    assert_eq!(exact.preserved.len(), float.len(), "{name}: preserved count");
    for (m, (fin, fout)) in exact.preserved.iter().zip(&float) {
        let lin: Labels = m.input.iter().map(|l| (l.axis, l.sign)).collect();
        let lout: Labels = m.output.iter().map(|l| (l.axis, l.sign)).collect();
        assert_eq!((&lin, &lout), (fin, fout), "{name}");
    }

    let rep = derive(&g).unwrap();
    let vars = Var::all(if g.dim() == 2 { 1 } else { 2 });
    for (out, column) in forced_table(&g) {
        let comp = rep.component(out).unwrap();
        for (i, forced) in column.iter().enumerate() {
            let a = Assignment::from_index(&vars, i);
            match (comp, forced) {
                (ComponentRep::Total(m), Some(s)) => assert_eq!(m.eval(&a).unwrap(), *s, "{name} {out}"),
                (ComponentRep::Undetermined, None) => {}
                (ComponentRep::Partial(t), f) => assert_eq!(t[i], *f, "{name} {out}"),
                (c, f) => panic!("{name} {out} at {i}: derived {c:?}, oracle {f:?}"),
            }
        }
    }
}

#[test]
fn mapping_tables_and_reps_match_float_oracle() {
    for name in ["H", "S", "CNOT", "X", "Y", "Z", "T", "I"] {
        check_gate(name);
    }
}

#[test]
fn frozen_counts_from_float_oracle() {
    let count = |n: &str| float_mappings(&GateMatrix::builtin(n).unwrap()).len();
    assert_eq!(count("H"), 6);
    assert_eq!(count("S"), 6);
    assert_eq!(count("CNOT"), 20);
    assert_eq!(count("T"), 2);
    assert_eq!(count("I"), 6);
}

#[test]
fn sigma_x_representation() {
    // σx keeps |X±⟩ and swaps |Y±⟩ and |Z±⟩: ⟨x, -y, -z⟩
    let rep = derive(&GateMatrix::pauli(Axis::X)).unwrap();
    let vars = Var::all(1);
    for a in Assignment::enumerate(&vars) {
        let get = |ax| a.get(Var::new(1, ax)).unwrap();
        let want = [get(Axis::X), -get(Axis::Y), -get(Axis::Z)];
        for (k, (_, c)) in rep.components().iter().enumerate() {
            assert_eq!(c.monomial().unwrap().eval(&a).unwrap(), want[k]);
        }
    }
}

/// Anti-correlation checked directly on concrete triplets.
#[test]
fn contradiction_masks_from_concrete_enumeration() {
    use hvlab::experiment::{initial_concrete, run_branch_concrete};
    let mut masks = [0u16; 2];
    for (k, b) in ExperimentBranch::BOTH.into_iter().enumerate() {
        for i in 0..16 {
            let (a, bq) = run_branch_concrete(b, &initial_concrete(i).unwrap());
            if a.x == -bq.x && a.y == -bq.y && a.z == -bq.z {
                masks[k] |= 1 << i;
            }
        }
    }
    // equal XY-products are exactly the even-parity indices
    let even: u16 = (0..16u32)
        .filter(|i| i.count_ones() % 2 == 0)
        .fold(0, |m, i| m | 1 << i);
    assert_eq!(masks, [even, !even]);
    assert_eq!(masks, [0x9669, 0x6996]);

    let r = run_contradiction().unwrap();
    assert_eq!(r.branches[0].satisfying_mask, masks[0]);
    assert_eq!(r.branches[1].satisfying_mask, masks[1]);
}

//! Exact one- and two-qubit quantum mechanics over [`CycInt`].
//!
//! States are unnormalized and compared up to a nonzero scalar, so `1/√2`
//! normalizers never appear. Two-qubit vectors use qubit 1 as the tensor-major
//! factor, which makes qubit 1 the control of [`GateMatrix::cnot`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::scalar::CycInt;
use crate::triplet::{Axis, Spin};

/// An eigenstate of σx, σy or σz, e.g. `|Y-⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisLabel {
    pub axis: Axis,
    pub sign: Spin,
}

impl BasisLabel {
    /// `X+, X-, Y+, Y-, Z+, Z-`.
    pub const ALL: [BasisLabel; 6] = [
        BasisLabel::new(Axis::X, Spin::Plus),
        BasisLabel::new(Axis::X, Spin::Minus),
        BasisLabel::new(Axis::Y, Spin::Plus),
        BasisLabel::new(Axis::Y, Spin::Minus),
        BasisLabel::new(Axis::Z, Spin::Plus),
        BasisLabel::new(Axis::Z, Spin::Minus),
    ];

    pub const fn new(axis: Axis, sign: Spin) -> Self {
        BasisLabel { axis, sign }
    }

    /// Unnormalized eigenvector: `X± = (1,±1)`, `Y± = (1,±i)`, `Z+ = (1,0)`,
    /// `Z- = (0,1)`.
    pub fn eigenvector(self) -> Ket {
        let one = CycInt::ONE;
        let s = CycInt::from(self.sign.to_i8() as i64);
        let entries = match self.axis {
            Axis::X => vec![one, s],
            Axis::Y => vec![one, s * CycInt::I],
            Axis::Z if self.sign.is_plus() => vec![one, CycInt::ZERO],
            Axis::Z => vec![CycInt::ZERO, one],
        };
        Ket { entries }
    }

    /// The `6^arity` labelled product states, qubit 1 major.
    pub fn products(arity: usize) -> Vec<Vec<BasisLabel>> {
        (0..arity).fold(vec![Vec::new()], |acc, _| {
            acc.into_iter()
                .flat_map(|prefix| {
                    BasisLabel::ALL.into_iter().map(move |l| {
                        let mut next = prefix.clone();
                        next.push(l);
                        next
                    })
                })
                .collect()
        })
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.axis, self.sign.symbol())
    }
}

impl FromStr for BasisLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<BasisLabel> {
        let mut chars = s.chars();
        let axis = match chars.next() {
            Some('X') => Axis::X,
            Some('Y') => Axis::Y,
            Some('Z') => Axis::Z,
            _ => return Err(Error::Parse(s.to_owned())),
        };
        let sign = match (chars.next(), chars.next()) {
            (Some('+'), None) => Spin::Plus,
            (Some('-'), None) => Spin::Minus,
            _ => return Err(Error::Parse(s.to_owned())),
        };
        Ok(BasisLabel::new(axis, sign))
    }
}

impl Serialize for BasisLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BasisLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A nonzero, unnormalized state vector of dimension 2 or 4.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ket {
    entries: Vec<CycInt>,
}

impl Ket {
    pub fn new(entries: Vec<CycInt>) -> Result<Ket> {
        check_dim(entries.len())?;
        if entries.iter().all(CycInt::is_zero) {
            return Err(Error::ZeroKet);
        }
        Ok(Ket { entries })
    }

    /// Convenience constructor from Gaussian integers `(re, im)`.
    pub fn gaussian(entries: &[(i64, i64)]) -> Result<Ket> {
        Ket::new(
            entries
                .iter()
                .map(|&(re, im)| CycInt::new(re, 0, im, 0))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[CycInt] {
        &self.entries
    }

    pub fn scaled(&self, lambda: CycInt) -> Result<Ket> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.checked_mul(lambda))
            .collect::<Result<Vec<_>>>()?;
        Ket::new(entries)
    }

    /// Whether `w = λ·self` for some nonzero scalar `λ`.
    ///
    /// Exact: every 2×2 cross product `vᵢwⱼ - vⱼwᵢ` vanishes and both vectors
    /// share the same zero pattern.
    pub fn proportional(&self, w: &Ket) -> Result<bool> {
        expect_dim(w, self.dim())?;
        let (v, w) = (&self.entries, &w.entries);
        for i in 0..v.len() {
            if v[i].is_zero() != w[i].is_zero() {
                return Ok(false);
            }
            for j in (i + 1)..v.len() {
                if v[i].checked_mul(w[j])? != v[j].checked_mul(w[i])? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Kronecker product `self ⊗ w`, `self` major.
    pub fn tensor(&self, w: &Ket) -> Result<Ket> {
        expect_dim(self, 2)?;
        expect_dim(w, 2)?;
        let mut entries = Vec::with_capacity(4);
        for a in &self.entries {
            for b in &w.entries {
                entries.push(a.checked_mul(*b)?);
            }
        }
        Ket::new(entries)
    }

    /// Rank-1 test on the 2×2 coefficient matrix: `v₀₀v₁₁ = v₀₁v₁₀`.
    pub fn separable(&self) -> Result<bool> {
        expect_dim(self, 4)?;
        let v = &self.entries;
        Ok(v[0].checked_mul(v[3])? == v[1].checked_mul(v[2])?)
    }

    /// The basis label of a one-qubit state, if it is an eigenstate.
    pub fn classify1(&self) -> Result<Option<BasisLabel>> {
        expect_dim(self, 2)?;
        for l in BasisLabel::ALL {
            if l.eigenvector().proportional(self)? {
                return Ok(Some(l));
            }
        }
        Ok(None)
    }

    /// The labelled product decomposition of a two-qubit state, if it is a
    /// product of eigenstates.
    pub fn classify2(&self) -> Result<Option<(BasisLabel, BasisLabel)>> {
        let Some((a, b)) = self.factor()? else {
            return Ok(None);
        };
        Ok(match (a.classify1()?, b.classify1()?) {
            (Some(la), Some(lb)) => Some((la, lb)),
            _ => None,
        })
    }

    /// Arity-agnostic classification: one label per qubit, or `None` when
    /// the state is not in `B` (resp. `B⊗B`).
    pub fn classify(&self) -> Result<Option<Vec<BasisLabel>>> {
        Ok(match self.dim() {
            2 => self.classify1()?.map(|l| vec![l]),
            _ => self.classify2()?.map(|(a, b)| vec![a, b]),
        })
    }

    /// Splits a separable two-qubit vector as `a ⊗ b`, up to scale.
    fn factor(&self) -> Result<Option<(Ket, Ket)>> {
        if !self.separable()? {
            return Ok(None);
        }
        let v = &self.entries;
        let pivot = v.iter().position(|e| !e.is_zero()).ok_or(Error::ZeroKet)?;
        let (row, col) = (pivot / 2, pivot % 2);
        let a = Ket::new(vec![v[col], v[2 + col]])?;
        let b = Ket::new(vec![v[2 * row], v[2 * row + 1]])?;
        Ok(Some((a, b)))
    }

    /// `⟨self|w⟩`.
    pub fn inner(&self, w: &Ket) -> Result<CycInt> {
        expect_dim(w, self.dim())?;
        self.entries
            .iter()
            .zip(&w.entries)
            .try_fold(CycInt::ZERO, |acc, (a, b)| {
                acc.checked_add(a.checked_conj()?.checked_mul(*b)?)
            })
    }

    /// Whether measuring both qubits along `axis` always yields opposite
    /// outcomes, i.e. `⟨v|σ⊗σ|v⟩ = -⟨v|v⟩`.
    pub fn predicts_opposite(&self, axis: Axis) -> Result<bool> {
        expect_dim(self, 4)?;
        let sigma = GateMatrix::pauli(axis);
        let both = sigma.kron(&sigma)?;
        let expectation = self.inner(&both.apply(self)?)?;
        Ok(expectation == self.inner(self)?.checked_neg()?)
    }
}

impl fmt::Display for Ket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `(|01⟩ - |10⟩)`, unnormalized.
pub fn bell_psi_minus() -> Ket {
    Ket::gaussian(&[(0, 0), (1, 0), (-1, 0), (0, 0)]).expect("nonzero")
}

fn check_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 4 => Ok(()),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

fn expect_dim(v: &Ket, expected: usize) -> Result<()> {
    if v.dim() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            found: v.dim(),
        })
    }
}

/// Names accepted by [`GateMatrix::builtin`].
pub const BUILTIN_GATES: [&str; 8] = ["H", "S", "CNOT", "X", "Y", "Z", "T", "I"];

/// A 2×2 or 4×4 matrix, row-major, unitary up to a positive real scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GateMatrix {
    name: String,
    dim: usize,
    entries: Vec<CycInt>,
}

/// On-disk form: `{"name": .., "dim": 2|4, "entries": [[[a,b,c,d], ..], ..]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GateFile {
    pub name: String,
    pub dim: usize,
    pub entries: Vec<Vec<[i64; 4]>>,
}

impl GateMatrix {
    /// Checks shape only; see [`GateMatrix::check_unitary`].
    pub fn new(name: impl Into<String>, dim: usize, entries: Vec<CycInt>) -> Result<GateMatrix> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::MalformedGate(format!(
                "expected {} entries for dim {dim}, found {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(GateMatrix {
            name: name.into(),
            dim,
            entries,
        })
    }

    fn gaussian(name: &str, dim: usize, entries: &[(i64, i64)]) -> GateMatrix {
        let entries = entries
            .iter()
            .map(|&(re, im)| CycInt::new(re, 0, im, 0))
            .collect();
        GateMatrix::new(name, dim, entries).expect("builtin shape")
    }

    pub fn identity() -> GateMatrix {
        Self::gaussian("I", 2, &[(1, 0), (0, 0), (0, 0), (1, 0)])
    }

    /// `[[1, 1], [1, -1]]`, i.e. √2·H.
    pub fn hadamard() -> GateMatrix {
        Self::gaussian("H", 2, &[(1, 0), (1, 0), (1, 0), (-1, 0)])
    }

    /// The π/2 phase shifter `diag(1, i)`.
    pub fn phase_half_pi() -> GateMatrix {
        Self::gaussian("S", 2, &[(1, 0), (0, 0), (0, 0), (0, 1)])
    }

    pub fn t_gate() -> GateMatrix {
        let e = vec![CycInt::ONE, CycInt::ZERO, CycInt::ZERO, CycInt::OMEGA];
        GateMatrix::new("T", 2, e).expect("builtin shape")
    }

    pub fn pauli(axis: Axis) -> GateMatrix {
        match axis {
            Axis::X => Self::gaussian("X", 2, &[(0, 0), (1, 0), (1, 0), (0, 0)]),
            Axis::Y => Self::gaussian("Y", 2, &[(0, 0), (0, -1), (0, 1), (0, 0)]),
            Axis::Z => Self::gaussian("Z", 2, &[(1, 0), (0, 0), (0, 0), (-1, 0)]),
        }
    }

    pub fn cnot() -> GateMatrix {
        #[rustfmt::skip]
        let e = [
            (1, 0), (0, 0), (0, 0), (0, 0),
            (0, 0), (1, 0), (0, 0), (0, 0),
            (0, 0), (0, 0), (0, 0), (1, 0),
            (0, 0), (0, 0), (1, 0), (0, 0),
        ];
        Self::gaussian("CNOT", 4, &e)
    }

    pub fn builtin(name: &str) -> Option<GateMatrix> {
        Some(match name {
            "H" => Self::hadamard(),
            "S" => Self::phase_half_pi(),
            "CNOT" => Self::cnot(),
            "X" => Self::pauli(Axis::X),
            "Y" => Self::pauli(Axis::Y),
            "Z" => Self::pauli(Axis::Z),
            "T" => Self::t_gate(),
            "I" => Self::identity(),
            _ => return None,
        })
    }

    pub fn from_file(file: GateFile) -> Result<GateMatrix> {
        if file.entries.len() != file.dim {
            return Err(Error::MalformedGate(format!(
                "expected {} rows, found {}",
                file.dim,
                file.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(file.dim * file.dim);
        for (r, row) in file.entries.iter().enumerate() {
            if row.len() != file.dim {
                return Err(Error::MalformedGate(format!(
                    "row {r} has {} entries, expected {}",
                    row.len(),
                    file.dim
                )));
            }
            entries.extend(row.iter().copied().map(CycInt::from));
        }
        GateMatrix::new(file.name, file.dim, entries)
    }

    pub fn from_json(text: &str) -> Result<GateMatrix> {
        Self::from_file(serde_json::from_str(text)?)
    }

    pub fn to_file(&self) -> GateFile {
        GateFile {
            name: self.name.clone(),
            dim: self.dim,
            entries: self
                .entries
                .chunks(self.dim)
                .map(|row| row.iter().map(|e| e.coeffs()).collect())
                .collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of qubits acted on.
    pub fn arity(&self) -> usize {
        if self.dim == 2 {
            1
        } else {
            2
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> CycInt {
        self.entries[row * self.dim + col]
    }

    pub fn with_name(mut self, name: impl Into<String>) -> GateMatrix {
        self.name = name.into();
        self
    }

    pub fn scaled(&self, lambda: CycInt) -> Result<GateMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.checked_mul(lambda))
            .collect::<Result<Vec<_>>>()?;
        GateMatrix::new(self.name.clone(), self.dim, entries)
    }

    pub fn apply(&self, v: &Ket) -> Result<Ket> {
        expect_dim(v, self.dim)?;
        let mut out = Vec::with_capacity(self.dim);
        for r in 0..self.dim {
            let mut acc = CycInt::ZERO;
            for c in 0..self.dim {
                acc = acc.checked_add(self.entry(r, c).checked_mul(v.entries[c])?)?;
            }
            out.push(acc);
        }
        Ket::new(out)
    }

    /// `self ⊗ other` for two one-qubit gates.
    pub fn kron(&self, other: &GateMatrix) -> Result<GateMatrix> {
        if self.dim != 2 || other.dim != 2 {
            return Err(Error::UnsupportedDimension(self.dim * other.dim));
        }
        let mut entries = Vec::with_capacity(16);
        for r in 0..4 {
            for c in 0..4 {
                let a = self.entry(r / 2, c / 2);
                let b = other.entry(r % 2, c % 2);
                entries.push(a.checked_mul(b)?);
            }
        }
        GateMatrix::new(format!("{}⊗{}", self.name, other.name), 4, entries)
    }

    /// `M†M`, if it is `r·I`, returns `r`.
    pub fn gram_scale(&self) -> Result<Option<CycInt>> {
        let n = self.dim;
        let mut scale = None;
        for i in 0..n {
            for j in 0..n {
                let mut acc = CycInt::ZERO;
                for k in 0..n {
                    let term = self.entry(k, i).checked_conj()?.checked_mul(self.entry(k, j))?;
                    acc = acc.checked_add(term)?;
                }
                if i != j && !acc.is_zero() {
                    return Ok(None);
                }
                if i == j {
                    match scale {
                        None => scale = Some(acc),
                        Some(s) if s != acc => return Ok(None),
                        _ => {}
                    }
                }
            }
        }
        Ok(scale)
    }

    /// Accepts `M†M = r·I` with `r` a positive real (`a + b√2 > 0`).
    pub fn check_unitary(&self) -> Result<()> {
        match self.gram_scale()? {
            Some(r) if r.is_positive_real() == Some(true) => Ok(()),
            _ => Err(Error::NotUnitary(self.name.clone())),
        }
    }

    /// First 16 hex digits of the SHA-256 of the coefficient list.
    pub fn content_hash(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update((self.dim as u64).to_le_bytes());
        for e in &self.entries {
            for c in e.coeffs() {
                hasher.update(c.to_le_bytes());
            }
        }
        hex::encode(&hasher.finalize()[..8])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> BasisLabel {
        s.parse().unwrap()
    }

    fn ket(e: &[(i64, i64)]) -> Ket {
        Ket::gaussian(e).unwrap()
    }

    #[test]
    fn apply_examples() {
        let h = GateMatrix::hadamard();
        let out = h.apply(&label("X+").eigenvector()).unwrap();
        assert_eq!(out, ket(&[(2, 0), (0, 0)]));
        assert_eq!(out.classify1().unwrap(), Some(label("Z+")));

        let v = ket(&[(3, 1), (-2, 5)]);
        assert_eq!(GateMatrix::identity().apply(&v).unwrap(), v);

        let s = GateMatrix::phase_half_pi();
        let out = s.apply(&label("Y+").eigenvector()).unwrap();
        assert_eq!(out, ket(&[(1, 0), (-1, 0)]));
        assert_eq!(out.classify1().unwrap(), Some(label("X-")));
    }

    #[test]
    fn apply_rejects_dimension_mismatch() {
        let v = ket(&[(1, 0), (0, 0), (0, 0), (0, 0)]);
        assert!(matches!(
            GateMatrix::hadamard().apply(&v),
            Err(Error::DimensionMismatch { expected: 2, found: 4 })
        ));
    }

    #[test]
    fn proportional_examples() {
        assert!(ket(&[(2, 0), (0, 0)]).proportional(&ket(&[(1, 0), (0, 0)])).unwrap());
        assert!(!label("Y+").eigenvector().proportional(&label("Y-").eigenvector()).unwrap());
        let a = ket(&[(0, 0), (1, 0), (-1, 0), (0, 0)]);
        let b = ket(&[(0, 0), (0, 1), (0, -1), (0, 0)]);
        assert!(a.proportional(&b).unwrap());
        assert!(a.proportional(&ket(&[(1, 0), (0, 0)])).is_err());
    }

    #[test]
    fn zero_and_odd_dims_rejected() {
        assert!(matches!(Ket::gaussian(&[(0, 0), (0, 0)]), Err(Error::ZeroKet)));
        assert!(matches!(
            Ket::gaussian(&[(1, 0), (0, 0), (0, 0)]),
            Err(Error::UnsupportedDimension(3))
        ));
    }

    #[test]
    fn tensor_examples() {
        let t = |a: &str, b: &str| label(a).eigenvector().tensor(&label(b).eigenvector()).unwrap();
        assert_eq!(t("Z+", "Z-"), ket(&[(0, 0), (1, 0), (0, 0), (0, 0)]));
        assert_eq!(t("Y+", "Y+"), ket(&[(1, 0), (0, 1), (0, 1), (-1, 0)]));
        assert_eq!(t("X+", "X+"), ket(&[(1, 0), (1, 0), (1, 0), (1, 0)]));
        let four = t("X+", "X+");
        assert!(four.tensor(&label("X+").eigenvector()).is_err());
    }

    #[test]
    fn separable_examples() {
        let yy = label("Y+").eigenvector().tensor(&label("Y+").eigenvector()).unwrap();
        let img = GateMatrix::cnot().apply(&yy).unwrap();
        assert_eq!(img, ket(&[(1, 0), (0, 1), (-1, 0), (0, 1)]));
        assert!(!img.separable().unwrap());
        assert!(ket(&[(1, 0), (0, 0), (0, 0), (0, 0)]).separable().unwrap());
        assert!(!bell_psi_minus().separable().unwrap());
        assert!(label("X+").eigenvector().separable().is_err());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(ket(&[(3, 0), (3, 0)]).classify1().unwrap(), Some(label("X+")));
        assert_eq!(ket(&[(1, 0), (0, 1), (-1, 0), (0, 1)]).classify2().unwrap(), None);
        // (0,1,0,-1) = (1,-1) ⊗ (0,1)
        let v = ket(&[(0, 0), (1, 0), (0, 0), (-1, 0)]);
        let oracle = label("X-").eigenvector().tensor(&label("Z-").eigenvector()).unwrap();
        assert_eq!(v, oracle);
        assert_eq!(v.classify2().unwrap(), Some((label("X-"), label("Z-"))));
        // separable but a factor is not an eigenstate
        let w = GateMatrix::t_gate().apply(&label("X+").eigenvector()).unwrap();
        let prod = w.tensor(&label("Z+").eigenvector()).unwrap();
        assert_eq!(prod.classify2().unwrap(), None);
    }

    #[test]
    fn classify_roundtrips_every_label() {
        for l in BasisLabel::ALL {
            assert_eq!(l.eigenvector().classify1().unwrap(), Some(l));
            for k in 0..8 {
                let scaled = l.eigenvector().scaled(CycInt::omega_pow(k) * CycInt::from(3)).unwrap();
                assert_eq!(scaled.classify1().unwrap(), Some(l));
            }
        }
        for pair in BasisLabel::products(2) {
            let v = pair[0].eigenvector().tensor(&pair[1].eigenvector()).unwrap();
            assert_eq!(v.classify().unwrap(), Some(pair));
        }
    }

    #[test]
    fn bell_state_from_circuit() {
        let zz = label("Z-").eigenvector().tensor(&label("Z-").eigenvector()).unwrap();
        let hi = GateMatrix::hadamard().kron(&GateMatrix::identity()).unwrap();
        let mid = hi.apply(&zz).unwrap();
        assert_eq!(mid, ket(&[(0, 0), (1, 0), (0, 0), (-1, 0)]));
        let out = GateMatrix::cnot().apply(&mid).unwrap();
        assert_eq!(out, bell_psi_minus());
    }

    #[test]
    fn predicts_opposite_examples() {
        let psi = bell_psi_minus();
        for axis in Axis::ALL {
            assert!(psi.predicts_opposite(axis).unwrap(), "{axis}");
        }
        let zz = label("Z+").eigenvector().tensor(&label("Z+").eigenvector()).unwrap();
        assert!(!zz.predicts_opposite(Axis::Z).unwrap());
        assert!(label("Z+").eigenvector().predicts_opposite(Axis::Z).is_err());
    }

    #[test]
    fn builtin_gates_are_unitary_up_to_scale() {
        for name in BUILTIN_GATES {
            let g = GateMatrix::builtin(name).unwrap();
            g.check_unitary().unwrap();
            let r = g.gram_scale().unwrap().unwrap();
            let [k, b, c, d] = r.coeffs();
            assert!(k > 0 && b == 0 && c == 0 && d == 0, "{name}: {r}");
        }
        let bad = GateMatrix::gaussian("bad", 2, &[(1, 0), (1, 0), (0, 0), (1, 0)]);
        assert!(matches!(bad.check_unitary(), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn kron_commutes_with_tensor() {
        let gates = ["H", "S", "X", "Y", "Z", "T", "I"].map(|n| GateMatrix::builtin(n).unwrap());
        for a in &gates {
            for b in &gates {
                let ab = a.kron(b).unwrap();
                for la in BasisLabel::ALL {
                    for lb in BasisLabel::ALL {
                        let (v, w) = (la.eigenvector(), lb.eigenvector());
                        let lhs = ab.apply(&v.tensor(&w).unwrap()).unwrap();
                        let rhs = a.apply(&v).unwrap().tensor(&b.apply(&w).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn mapping_images_of_h_and_s_stay_in_basis() {
        for g in [GateMatrix::hadamard(), GateMatrix::phase_half_pi()] {
            for l in BasisLabel::ALL {
                assert!(g.apply(&l.eigenvector()).unwrap().classify1().unwrap().is_some());
            }
        }
    }

    #[test]
    fn gate_json_roundtrip_and_errors() {
        let text = serde_json::to_string(&GateMatrix::t_gate().to_file()).unwrap();
        assert_eq!(GateMatrix::from_json(&text).unwrap(), GateMatrix::t_gate());
        assert!(GateMatrix::from_json(r#"{"name":"A","dim":2,"entries":[[[1,0,0,0]]]}"#).is_err());
        assert!(GateMatrix::from_json(r#"{"name":"A","dim":3,"entries":[]}"#).is_err());
        assert!(GateMatrix::from_json("not json").is_err());
    }

    fn scalar() -> impl proptest::strategy::Strategy<Value = CycInt> {
        use proptest::prelude::*;
        prop::array::uniform4(-4i64..=4)
            .prop_map(CycInt::from)
            .prop_filter("nonzero", |c| !c.is_zero())
    }

    proptest::proptest! {
        #[test]
        fn proportional_is_an_equivalence(
            l in 0usize..6, a in scalar(), b in scalar(), c in scalar()
        ) {
            let v = BasisLabel::ALL[l].eigenvector();
            let (va, vb) = (v.scaled(a).unwrap(), v.scaled(b).unwrap());
            proptest::prop_assert!(v.proportional(&v).unwrap());
            proptest::prop_assert!(va.proportional(&vb).unwrap());
            proptest::prop_assert!(vb.proportional(&va).unwrap());
            let vc = vb.scaled(c).unwrap();
            proptest::prop_assert!(va.proportional(&vc).unwrap());
            let other = BasisLabel::ALL[(l + 1) % 6].eigenvector().scaled(c).unwrap();
            proptest::prop_assert!(!va.proportional(&other).unwrap());
        }

        #[test]
        fn classify_is_phase_stable(l1 in 0usize..6, l2 in 0usize..6, a in scalar()) {
            let (x, y) = (BasisLabel::ALL[l1], BasisLabel::ALL[l2]);
            let v = x.eigenvector().tensor(&y.eigenvector()).unwrap().scaled(a).unwrap();
            proptest::prop_assert_eq!(v.classify2().unwrap(), Some((x, y)));
        }
    }

    #[test]
    fn content_hash_is_stable_and_discriminating() {
        assert_eq!(GateMatrix::hadamard().content_hash(), GateMatrix::hadamard().content_hash());
        assert_ne!(GateMatrix::hadamard().content_hash(), GateMatrix::t_gate().content_hash());
        assert_eq!(GateMatrix::hadamard().content_hash().len(), 16);
    }
}

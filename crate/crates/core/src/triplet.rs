//! Hidden-variable states: a qubit is a triplet `⟨x,y,z⟩` of pre-assigned ±1
//! outcomes for σx, σy, σz.
//!
//! [`Triple`] is generic over the component algebra, so the same gate
//! functions act on concrete [`Triplet`]s (components are [`Spin`]s) and on
//! symbolic [`SymTriplet`]s (components are [`SignMonomial`]s).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// One of the three Pauli measurement axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter().to_ascii_uppercase())
    }
}

/// A ±1 value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spin {
    Minus,
    Plus,
}

impl Spin {
    pub const BOTH: [Spin; 2] = [Spin::Plus, Spin::Minus];

    pub fn from_i8(v: i8) -> Option<Spin> {
        match v {
            1 => Some(Spin::Plus),
            -1 => Some(Spin::Minus),
            _ => None,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Spin::Plus => 1,
            Spin::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Spin::Plus
    }

    pub fn symbol(self) -> char {
        match self {
            Spin::Plus => '+',
            Spin::Minus => '-',
        }
    }
}

impl Neg for Spin {
    type Output = Spin;
    fn neg(self) -> Spin {
        match self {
            Spin::Plus => Spin::Minus,
            Spin::Minus => Spin::Plus,
        }
    }
}

impl Mul for Spin {
    type Output = Spin;
    fn mul(self, rhs: Spin) -> Spin {
        if self == rhs {
            Spin::Plus
        } else {
            Spin::Minus
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}1", self.symbol())
    }
}

impl Serialize for Spin {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i8(self.to_i8())
    }
}

impl<'de> Deserialize<'de> for Spin {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = i8::deserialize(d)?;
        Spin::from_i8(v).ok_or_else(|| serde::de::Error::custom(format!("{v} is not ±1")))
    }
}

/// A hidden variable: the pre-assigned outcome of `axis` on qubit `qubit`
/// (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub qubit: u8,
    pub axis: Axis,
}

impl Var {
    pub const fn new(qubit: u8, axis: Axis) -> Self {
        Var { qubit, axis }
    }

    /// The `3·arity` input variables in canonical order
    /// `x1, y1, z1, x2, y2, z2`.
    pub fn all(arity: usize) -> Vec<Var> {
        (1..=arity as u8)
            .flat_map(|q| Axis::ALL.into_iter().map(move |a| Var::new(q, a)))
            .collect()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.axis.letter(), self.qubit)
    }
}

impl FromStr for Var {
    type Err = Error;
    fn from_str(s: &str) -> Result<Var> {
        let mut chars = s.chars();
        let axis = match chars.next() {
            Some('x') => Axis::X,
            Some('y') => Axis::Y,
            Some('z') => Axis::Z,
            _ => return Err(Error::Parse(s.to_owned())),
        };
        let qubit = chars
            .as_str()
            .parse::<u8>()
            .map_err(|_| Error::Parse(s.to_owned()))?;
        if qubit == 0 {
            return Err(Error::Parse(s.to_owned()));
        }
        Ok(Var::new(qubit, axis))
    }
}

/// `±v₁·v₂·…` over ±1-valued variables. Each variable appears at most once
/// since `v² = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignMonomial {
    sign: Spin,
    vars: BTreeSet<Var>,
}

impl SignMonomial {
    pub fn constant(sign: Spin) -> Self {
        SignMonomial {
            sign,
            vars: BTreeSet::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Spin::Plus)
    }

    pub fn var(v: Var) -> Self {
        SignMonomial {
            sign: Spin::Plus,
            vars: BTreeSet::from([v]),
        }
    }

    /// Builds a monomial, cancelling repeated variables pairwise.
    pub fn from_parts(sign: Spin, vars: impl IntoIterator<Item = Var>) -> Self {
        let mut set = BTreeSet::new();
        for v in vars {
            if !set.remove(&v) {
                set.insert(v);
            }
        }
        SignMonomial { sign, vars: set }
    }

    pub fn sign(&self) -> Spin {
        self.sign
    }

    pub fn vars(&self) -> &BTreeSet<Var> {
        &self.vars
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn as_constant(&self) -> Option<Spin> {
        self.is_constant().then_some(self.sign)
    }

    pub fn eval(&self, a: &Assignment) -> Result<Spin> {
        self.vars
            .iter()
            .try_fold(self.sign, |acc, v| Ok(acc * a.get(*v)?))
    }

    /// Replaces every variable by a monomial and multiplies out.
    pub fn substitute(&self, f: impl Fn(Var) -> SignMonomial) -> SignMonomial {
        self.vars
            .iter()
            .fold(SignMonomial::constant(self.sign), |acc, v| acc * f(*v))
    }

    /// Renders without qubit indices (`-y`, `x.z`), for one-qubit maps.
    pub fn plain(&self) -> String {
        self.render(|v| v.axis.letter().to_string())
    }

    fn render(&self, name: impl Fn(&Var) -> String) -> String {
        if self.vars.is_empty() {
            return self.sign.to_string();
        }
        let body = self.vars.iter().map(name).collect::<Vec<_>>().join(".");
        match self.sign {
            Spin::Plus => body,
            Spin::Minus => format!("-{body}"),
        }
    }
}

impl Mul for SignMonomial {
    type Output = SignMonomial;
    fn mul(self, rhs: SignMonomial) -> SignMonomial {
        SignMonomial {
            sign: self.sign * rhs.sign,
            vars: self.vars.symmetric_difference(&rhs.vars).copied().collect(),
        }
    }
}

impl Neg for SignMonomial {
    type Output = SignMonomial;
    fn neg(mut self) -> SignMonomial {
        self.sign = -self.sign;
        self
    }
}

impl From<Spin> for SignMonomial {
    fn from(s: Spin) -> Self {
        SignMonomial::constant(s)
    }
}

impl From<Var> for SignMonomial {
    fn from(v: Var) -> Self {
        SignMonomial::var(v)
    }
}

/// Sign first, variables sorted by qubit then axis: `-y1.x2`, `x1`, `+1`.
impl fmt::Display for SignMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|v| v.to_string()))
    }
}

impl FromStr for SignMonomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<SignMonomial> {
        let s = s.trim();
        match s {
            "+1" | "1" => return Ok(SignMonomial::one()),
            "-1" => return Ok(SignMonomial::constant(Spin::Minus)),
            _ => {}
        }
        let (sign, body) = match s.strip_prefix('-') {
            Some(rest) => (Spin::Minus, rest),
            None => (Spin::Plus, s.strip_prefix('+').unwrap_or(s)),
        };
        let vars = body
            .split('.')
            .map(str::parse)
            .collect::<Result<Vec<Var>>>()?;
        Ok(SignMonomial::from_parts(sign, vars))
    }
}

impl Serialize for SignMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignMonomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The component algebra a triplet can be built over.
pub trait Component: Clone + Mul<Output = Self> + Neg<Output = Self> {}

impl Component for Spin {}
impl Component for SignMonomial {}

/// `⟨x, y, z⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

pub type Triplet = Triple<Spin>;
pub type SymTriplet = Triple<SignMonomial>;

impl<T> Triple<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Triple { x, y, z }
    }

    pub fn get(&self, axis: Axis) -> &T {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
            Axis::Z => &self.z,
        }
    }

    pub fn components(&self) -> [&T; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Triple<U> {
        Triple::new(f(&self.x), f(&self.y), f(&self.z))
    }
}

impl Triplet {
    pub fn from_i8(x: i8, y: i8, z: i8) -> Option<Triplet> {
        Some(Triple::new(
            Spin::from_i8(x)?,
            Spin::from_i8(y)?,
            Spin::from_i8(z)?,
        ))
    }

    /// All 8 concrete triplets.
    pub fn all() -> Vec<Triplet> {
        let mut out = Vec::with_capacity(8);
        for x in Spin::BOTH {
            for y in Spin::BOTH {
                for z in Spin::BOTH {
                    out.push(Triple::new(x, y, z));
                }
            }
        }
        out
    }

    pub fn to_symbolic(&self) -> SymTriplet {
        self.map(|&s| SignMonomial::constant(s))
    }
}

impl SymTriplet {
    /// `⟨x_q, y_q, z_q⟩` in fresh variables for qubit `q`.
    pub fn fresh(qubit: u8) -> SymTriplet {
        Triple::new(
            Var::new(qubit, Axis::X).into(),
            Var::new(qubit, Axis::Y).into(),
            Var::new(qubit, Axis::Z).into(),
        )
    }

    pub fn eval(&self, a: &Assignment) -> Result<Triplet> {
        Ok(Triple::new(self.x.eval(a)?, self.y.eval(a)?, self.z.eval(a)?))
    }

    /// Concrete triplet if every component is a constant.
    pub fn as_concrete(&self) -> Option<Triplet> {
        Some(Triple::new(
            self.x.as_constant()?,
            self.y.as_constant()?,
            self.z.as_constant()?,
        ))
    }

    pub fn plain(&self) -> String {
        format!("⟨{}, {}, {}⟩", self.x.plain(), self.y.plain(), self.z.plain())
    }
}

impl<T: fmt::Display> fmt::Display for Triple<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}, {}⟩", self.x, self.y, self.z)
    }
}

/// Renders a pair of triplets as `(⟨…⟩, ⟨…⟩)`.
pub fn render_pair<T: fmt::Display>(pair: &(Triple<T>, Triple<T>)) -> String {
    format!("({}, {})", pair.0, pair.1)
}

/// `h: ⟨x,y,z⟩ ↦ ⟨z,-y,x⟩`, the Hadamard gate on triplets.
pub fn h<T: Component>(t: &Triple<T>) -> Triple<T> {
    Triple::new(t.z.clone(), -t.y.clone(), t.x.clone())
}

/// `p: ⟨x,y,z⟩ ↦ ⟨-y,x,z⟩`, the π/2 phase shifter on triplets.
///
/// The same map is sometimes quoted as `⟨y,-x,z⟩`, which is its inverse.
/// This form is the one forced by `P|X+⟩ = |Y+⟩` (`x = +1 ⇒ y' = +1`).
pub fn p_half_pi<T: Component>(t: &Triple<T>) -> Triple<T> {
    Triple::new(-t.y.clone(), t.x.clone(), t.z.clone())
}

/// Controlled-not with `a` as control:
/// `(⟨x1,y1,z1⟩, ⟨x2,y2,z2⟩) ↦ (⟨x1·x2, y1·x2, z1⟩, ⟨x2, z1·y2, z1·z2⟩)`.
pub fn cnot<T: Component>(a: &Triple<T>, b: &Triple<T>) -> (Triple<T>, Triple<T>) {
    (
        Triple::new(
            a.x.clone() * b.x.clone(),
            a.y.clone() * b.x.clone(),
            a.z.clone(),
        ),
        Triple::new(
            b.x.clone(),
            a.z.clone() * b.y.clone(),
            a.z.clone() * b.z.clone(),
        ),
    )
}

/// `x·y`.
pub fn xy_product<T: Component>(t: &Triple<T>) -> T {
    t.x.clone() * t.y.clone()
}

/// Values for a set of hidden variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assignment(BTreeMap<Var, Spin>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, v: Var, s: Spin) -> Self {
        self.0.insert(v, s);
        self
    }

    pub fn set(&mut self, v: Var, s: Spin) {
        self.0.insert(v, s);
    }

    pub fn get(&self, v: Var) -> Result<Spin> {
        self.0.get(&v).copied().ok_or(Error::MissingVariable(v))
    }

    /// Decodes `index` over `vars`: bit `k` (LSB first) set means
    /// `vars[k] = -1`.
    pub fn from_index(vars: &[Var], index: usize) -> Self {
        Assignment(
            vars.iter()
                .enumerate()
                .map(|(k, &v)| {
                    let s = if index >> k & 1 == 1 { Spin::Minus } else { Spin::Plus };
                    (v, s)
                })
                .collect(),
        )
    }

    /// All `2^n` assignments of `vars`, in index order.
    pub fn enumerate(vars: &[Var]) -> impl Iterator<Item = Assignment> + '_ {
        (0..1usize << vars.len()).map(move |i| Assignment::from_index(vars, i))
    }
}

impl FromIterator<(Var, Spin)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (Var, Spin)>>(iter: I) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

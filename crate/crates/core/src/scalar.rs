//! Exact arithmetic in the ring of 8th cyclotomic integers `Z[ω]`, `ω = exp(iπ/4)`.
//!
//! Every entry of the gates handled by this crate (Paulis, H, S, CNOT, T, all
//! up to an overall scale) lives in this ring, so no floating point is needed
//! anywhere. Arithmetic is checked: overflow is reported, never wrapped.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `a + bω + cω² + dω³` with `ω⁴ = -1`.
///
/// The coefficient 4-tuple is the canonical form: two values are equal iff
/// their coefficients are.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 4]", into = "[i64; 4]")]
pub struct CycInt([i64; 4]);

impl From<[i64; 4]> for CycInt {
    fn from(c: [i64; 4]) -> Self {
        CycInt(c)
    }
}

impl From<CycInt> for [i64; 4] {
    fn from(x: CycInt) -> Self {
        x.0
    }
}

impl From<i64> for CycInt {
    fn from(n: i64) -> Self {
        CycInt([n, 0, 0, 0])
    }
}

impl CycInt {
    pub const ZERO: CycInt = CycInt([0, 0, 0, 0]);
    pub const ONE: CycInt = CycInt([1, 0, 0, 0]);
    pub const OMEGA: CycInt = CycInt([0, 1, 0, 0]);
    /// `ω² = i`.
    pub const I: CycInt = CycInt([0, 0, 1, 0]);
    /// `ω - ω³ = √2`.
    pub const SQRT2: CycInt = CycInt([0, 1, 0, -1]);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        CycInt([a, b, c, d])
    }

    pub fn coeffs(&self) -> [i64; 4] {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn checked_add(self, rhs: CycInt) -> Result<CycInt> {
        let mut out = [0i64; 4];
        for (k, o) in out.iter_mut().enumerate() {
            *o = self.0[k].checked_add(rhs.0[k]).ok_or(Error::Overflow)?;
        }
        Ok(CycInt(out))
    }

    pub fn checked_sub(self, rhs: CycInt) -> Result<CycInt> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_neg(self) -> Result<CycInt> {
        let mut out = [0i64; 4];
        for (k, o) in out.iter_mut().enumerate() {
            *o = self.0[k].checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(CycInt(out))
    }

    /// Ring product, reducing `ω^(j+k)` for `j + k ≥ 4` by `ω⁴ = -1`.
    pub fn checked_mul(self, rhs: CycInt) -> Result<CycInt> {
        let mut out = [0i64; 4];
        for j in 0..4 {
            for k in 0..4 {
                let term = self.0[j].checked_mul(rhs.0[k]).ok_or(Error::Overflow)?;
                let slot = (j + k) % 4;
                out[slot] = if j + k >= 4 {
                    out[slot].checked_sub(term)
                } else {
                    out[slot].checked_add(term)
                }
                .ok_or(Error::Overflow)?;
            }
        }
        Ok(CycInt(out))
    }

    /// Complex conjugate: `ω ↦ ω⁻¹ = -ω³`, hence `(a,b,c,d) ↦ (a,-d,-c,-b)`.
    pub fn checked_conj(self) -> Result<CycInt> {
        let [a, b, c, d] = self.0;
        let neg = |v: i64| v.checked_neg().ok_or(Error::Overflow);
        Ok(CycInt([a, neg(d)?, neg(c)?, neg(b)?]))
    }

    pub fn conj(self) -> CycInt {
        self.checked_conj().expect("CycInt overflow in conj")
    }

    /// `ωᵏ` for any integer `k` (period 8).
    pub fn omega_pow(k: i64) -> CycInt {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        c[k % 4] = if k < 4 { 1 } else { -1 };
        CycInt(c)
    }

    /// Whether the value is real, i.e. of the form `a + b√2`.
    pub fn is_real(&self) -> bool {
        let [_, b, c, d] = self.0;
        c == 0 && d == -b
    }

    /// For a real value `a + b√2`, whether it is strictly positive.
    ///
    /// Returns `None` for non-real values. Decided exactly by comparing
    /// `a²` against `2b²` when the signs of `a` and `b` differ.
    pub fn is_positive_real(&self) -> Option<bool> {
        if !self.is_real() {
            return None;
        }
        let a = self.0[0] as i128;
        let b = self.0[1] as i128;
        Some(match (a.signum(), b.signum()) {
            (0, 0) => false,
            (sa, sb) if sa >= 0 && sb >= 0 => true,
            (sa, sb) if sa <= 0 && sb <= 0 => false,
            // a > 0 > b: a > |b|√2 iff a² > 2b²
            (1, _) => a * a > 2 * b * b,
            // a < 0 < b: b√2 > |a| iff 2b² > a²
            _ => 2 * b * b > a * a,
        })
    }
}

impl Add for CycInt {
    type Output = CycInt;
    fn add(self, rhs: CycInt) -> CycInt {
        self.checked_add(rhs).expect("CycInt overflow in add")
    }
}

impl Sub for CycInt {
    type Output = CycInt;
    fn sub(self, rhs: CycInt) -> CycInt {
        self.checked_sub(rhs).expect("CycInt overflow in sub")
    }
}

impl Neg for CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        self.checked_neg().expect("CycInt overflow in neg")
    }
}

impl Mul for CycInt {
    type Output = CycInt;
    fn mul(self, rhs: CycInt) -> CycInt {
        self.checked_mul(rhs).expect("CycInt overflow in mul")
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const BASIS: [&str; 4] = ["", "ω", "i", "ω³"];
        let mut wrote = false;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if wrote { "+" } else { "" };
            let mag = c.unsigned_abs();
            if k == 0 || mag != 1 {
                write!(f, "{sign}{mag}{}", BASIS[k])?;
            } else {
                write!(f, "{sign}{}", BASIS[k])?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

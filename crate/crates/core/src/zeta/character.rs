use serde::{Deserialize, Serialize};

use super::hurwitz_zeta;
use crate::error::{Error, Result};
use crate::numerics::EvalResult;

/// A real Dirichlet character given by its values on residues `0..modulus`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterSpec {
    modulus: u32,
    values: Vec<i8>,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl CharacterSpec {
    /// Builds a character from its value table, checking that the table is
    /// supported exactly on the units and is completely multiplicative.
    pub fn new(values: Vec<i8>) -> Result<Self> {
        let f = values.len() as u32;
        if f == 0 {
            return Err(Error::domain("character modulus must be positive"));
        }
        for (a, &v) in values.iter().enumerate() {
            let unit = gcd(a as u32, f) == 1;
            if !matches!(v, -1..=1) {
                return Err(Error::domain(format!("chi({a}) = {v} is not in {{-1, 0, 1}}")));
            }
            if unit == (v == 0) {
                return Err(Error::domain(format!("chi({a}) = {v} but gcd({a}, {f}) = {}", gcd(a as u32, f))));
            }
        }
        if f > 1 && values[1] != 1 {
            return Err(Error::domain("chi(1) must be 1"));
        }
        for a in 0..f {
            for b in 0..f {
                if values[((a * b) % f) as usize] != values[a as usize] * values[b as usize] {
                    return Err(Error::domain(format!("character not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(CharacterSpec { modulus: f, values })
    }

    /// The non-principal character mod 3.
    pub fn chi3() -> Self {
        CharacterSpec { modulus: 3, values: vec![0, 1, -1] }
    }

    /// The non-principal character mod 6.
    pub fn chi6() -> Self {
        CharacterSpec { modulus: 6, values: vec![0, 1, 0, 0, 0, -1] }
    }

    /// The principal character mod `m`.
    pub fn principal(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("character modulus must be positive"));
        }
        let values = (0..m).map(|a| if gcd(a, m) == 1 { 1 } else { 0 }).collect();
        Ok(CharacterSpec { modulus: m, values })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn eval(&self, n: u64) -> i8 {
        self.values[(n % self.modulus as u64) as usize]
    }
}

/// `L(s, chi) = f^{-s} sum_{a=1}^{f} chi(a) zeta(s, a/f)` for `s > 1`.
pub fn dirichlet_l(s: f64, chi: &CharacterSpec) -> Result<EvalResult> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(Error::domain(format!("dirichlet_l needs s > 1, got s = {s}")));
    }
    let f = chi.modulus as f64;
    let scale = f.powf(-s);
    let mut parts = Vec::new();
    for a in 1..=chi.modulus {
        let c = chi.eval(a as u64);
        if c != 0 {
            parts.push((c as f64 * scale, hurwitz_zeta(s, a as f64 / f)?));
        }
    }
    let refs: Vec<(f64, &EvalResult)> = parts.iter().map(|(c, r)| (*c, r)).collect();
    Ok(EvalResult::combine(&refs, "hurwitz-combination"))
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// A univariate polynomial with exact integer coefficients, lowest power
/// first. Never stores a trailing zero, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PolyJson", into = "PolyJson")]
pub struct Poly {
    var: char,
    coeffs: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub var: String,
    pub coeffs: Vec<String>,
}

impl Poly {
    pub fn new(var: char, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn from_i64(var: char, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(var: char) -> Self {
        Poly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: char) -> Self {
        Self::constant(var, BigInt::one())
    }

    pub fn constant(var: char, c: BigInt) -> Self {
        Self::new(var, vec![c])
    }

    /// `c * var^k`.
    pub fn monomial(var: char, c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    pub fn var(&self) -> char {
        self.var
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `var^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_i64(&self, at: i64) -> BigInt {
        self.eval(&BigInt::from(at))
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(self.var), |acc, _| &acc * self)
    }

    /// Exact quotient, or `None` when `divisor` is zero or does not divide.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let d = divisor.degree()?;
        let lead = &divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return self.is_zero().then(|| Poly::zero(self.var));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let q = top / lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| Poly::new(self.var, quot))
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], sign: i32) -> Vec<BigInt> {
    (0..a.len().max(b.len()))
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_default();
            let y = b.get(k).cloned().unwrap_or_default();
            if sign > 0 {
                x + y
            } else {
                x - y
            }
        })
        .collect()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::new(self.var, add_coeffs(&self.coeffs, &rhs.coeffs, 1))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::new(self.var, add_coeffs(&self.coeffs, &rhs.coeffs, -1))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(self.var, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

pub(crate) fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Writes `sum c * body` as `2x+2x²-x³`: unit coefficients are dropped in
/// front of a nonempty body and each later term carries its sign.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a BigInt, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, body) in terms {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() {
            "-"
        } else if first {
            ""
        } else {
            "+"
        };
        let magnitude = c.abs();
        if body.is_empty() || !magnitude.is_one() {
            write!(f, "{sign}{magnitude}{body}")?;
        } else {
            write!(f, "{sign}{body}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var;
        write_terms(
            f,
            self.coeffs.iter().enumerate().map(|(k, c)| {
                let body = match k {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}{}", superscript(k)),
                };
                (c, body)
            }),
        )
    }
}

impl From<Poly> for PolyJson {
    fn from(p: Poly) -> Self {
        PolyJson {
            var: p.var.to_string(),
            coeffs: p.coeffs.iter().map(BigInt::to_string).collect(),
        }
    }
}

impl TryFrom<PolyJson> for Poly {
    type Error = String;

    fn try_from(raw: PolyJson) -> Result<Self, String> {
        let mut chars = raw.var.chars();
        let var = match (chars.next(), chars.next()) {
            (Some(v), None) => v,
            _ => return Err(format!("variable must be one character, got {:?}", raw.var)),
        };
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| {
                c.parse::<BigInt>()
                    .map_err(|e| format!("bad coefficient {c:?}: {e}"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(var, coeffs))
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::poly::{superscript, write_terms};

/// Auxiliary variables, in the order of [`Monomial::aux`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    Mu1,
    Mu2,
    Mu3,
    Nu,
    Omega,
}

impl Var {
    pub const ALL: [Var; 8] = [
        Var::X,
        Var::Y,
        Var::Z,
        Var::Mu1,
        Var::Mu2,
        Var::Mu3,
        Var::Nu,
        Var::Omega,
    ];

    /// JSON key.
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::Mu1 => "mu1",
            Var::Mu2 => "mu2",
            Var::Mu3 => "mu3",
            Var::Nu => "nu",
            Var::Omega => "omega",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::Mu1 => "μ₁",
            Var::Mu2 => "μ₂",
            Var::Mu3 => "μ₃",
            Var::Nu => "ν",
            Var::Omega => "ω",
        }
    }
}

/// `t^t * prod aux_i^{e_i}`; ordered by the `t` exponent first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub t: u32,
    pub aux: [u32; 8],
}

impl Monomial {
    pub fn t_pow(t: u32) -> Self {
        Monomial { t, aux: [0; 8] }
    }

    pub fn with(mut self, var: Var, exp: u32) -> Self {
        self.aux[var as usize] += exp;
        self
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut aux = self.aux;
        for (a, b) in aux.iter_mut().zip(other.aux) {
            *a += b;
        }
        Monomial {
            t: self.t + other.t,
            aux,
        }
    }

    fn aux_body(&self) -> String {
        Var::ALL
            .iter()
            .zip(self.aux)
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| {
                if e == 1 {
                    v.symbol().to_string()
                } else {
                    format!("{}{}", v.symbol(), superscript(e as usize))
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("the t-free part must be the constant 1 or -1")]
    NonUnitConstant,
    #[error("a square root needs t-free part exactly 1")]
    NonSquareConstant,
    #[error("the square root has a non-integral coefficient")]
    NonIntegralRoot,
    #[error("truncation orders differ: {0} and {1}")]
    OrderMismatch(u32, u32),
}

/// A power series in `t` with polynomial coefficients in the auxiliary
/// variables, known up to and including `t^order`.
///
/// Terms above the order are dropped by every operation; zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: u32) -> Self {
        TruncatedSeries {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(order, 1)
    }

    pub fn constant(order: u32, c: i64) -> Self {
        Self::term(order, Monomial::default(), BigInt::from(c))
    }

    pub fn term(order: u32, mono: Monomial, c: BigInt) -> Self {
        let mut s = Self::zero(order);
        s.add_term(mono, c);
        s
    }

    /// `t`.
    pub fn t(order: u32) -> Self {
        Self::term(order, Monomial::t_pow(1), BigInt::one())
    }

    /// A bare auxiliary variable.
    pub fn var(order: u32, var: Var) -> Self {
        Self::term(order, Monomial::default().with(var, 1), BigInt::one())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if mono.t > self.order || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The part of `t`-degree exactly `k`, as a series.
    pub fn grade(&self, k: u32) -> TruncatedSeries {
        TruncatedSeries {
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.t == k)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Smallest `t` exponent present, `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.t)
    }

    /// Same series known to a lower order.
    pub fn truncate(&self, order: u32) -> TruncatedSeries {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.t <= order)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Sets every auxiliary variable to 1 and returns the coefficient of each
    /// power of `t`, `0..=order`.
    pub fn t_coefficients_at_one(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.order as usize + 1];
        for (m, c) in &self.terms {
            out[m.t as usize] += c;
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> TruncatedSeries {
        let mut out = Self::zero(self.order);
        for (m, v) in &self.terms {
            out.add_term(*m, v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> TruncatedSeries {
        (0..k).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    /// Multiplicative inverse by Newton iteration `r <- r (2 - s r)`,
    /// doubling the known precision each round.
    pub fn reciprocal(&self) -> Result<TruncatedSeries, SeriesError> {
        let c0 = self.unit_constant().ok_or(SeriesError::NonUnitConstant)?;
        let mut r = Self::term(self.order, Monomial::default(), c0);
        let mut known = 0u32;
        while known < self.order {
            known = (2 * known + 1).min(self.order);
            let s = self.truncate(known);
            let r_now = r.clone().with_order(known);
            let two = Self::constant(known, 2);
            r = &r_now * &(&two - &(&s * &r_now));
        }
        Ok(r.with_order(self.order))
    }

    /// Square root with `t`-free part 1, by Newton iteration
    /// `r <- r + (s - r^2) / (2r)`. The halving is exact whenever the root
    /// has integer coefficients, and reported otherwise.
    pub fn sqrt(&self) -> Result<TruncatedSeries, SeriesError> {
        if self.grade(0) != Self::one(self.order) {
            return Err(SeriesError::NonSquareConstant);
        }
        let mut r = Self::one(self.order);
        let mut known = 0u32;
        while known < self.order {
            known = (2 * known + 1).min(self.order);
            let s = self.truncate(known);
            let r_now = r.clone().with_order(known);
            let defect = &s - &(&r_now * &r_now);
            let half = defect.halve().ok_or(SeriesError::NonIntegralRoot)?;
            r = &r_now + &(&half * &r_now.reciprocal()?);
        }
        Ok(r.with_order(self.order))
    }

    fn halve(&self) -> Option<TruncatedSeries> {
        let two = BigInt::from(2);
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            if !(c % &two).is_zero() {
                return None;
            }
            out.add_term(*m, c / &two);
        }
        Some(out)
    }

    fn unit_constant(&self) -> Option<BigInt> {
        let grade0 = self.grade(0);
        let mut terms = grade0.terms.iter();
        match (terms.next(), terms.next()) {
            (Some((m, c)), None) if *m == Monomial::default() && c.abs().is_one() => {
                Some(c.clone())
            }
            _ => None,
        }
    }

    fn with_order(mut self, order: u32) -> TruncatedSeries {
        self.order = order;
        self.terms.retain(|m, _| m.t <= order);
        self
    }

    fn common_order(&self, other: &TruncatedSeries) -> u32 {
        self.order.min(other.order)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let mut out = self.truncate(self.common_order(rhs));
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let mut out = self.truncate(self.common_order(rhs));
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.common_order(rhs);
        let mut out = TruncatedSeries::zero(order);
        for (a, x) in &self.terms {
            if a.t > order {
                break;
            }
            for (b, y) in &rhs.terms {
                if a.t + b.t > order {
                    break;
                }
                out.add_term(a.times(b), x * y);
            }
        }
        out
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&BigInt::from(-1))
    }
}

/// Writes the coefficient of each power of `t` as a polynomial in the
/// auxiliary variables, e.g. `t: xy; t²: x²y+2xy`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 + O(t{})", superscript(self.order as usize + 1));
        }
        let mut first = true;
        for k in 0..=self.order {
            let grade = self.grade(k);
            if grade.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let t = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t{}", superscript(k as usize)),
            };
            f.write_str("(")?;
            write_terms(f, grade.terms.iter().map(|(m, c)| (c, m.aux_body())))?;
            write!(f, "){t}")?;
        }
        write!(f, " + O(t{})", superscript(self.order as usize + 1))
    }
}

/// Coefficient of `t^k` as text, e.g. `2x+2x²+x³`.
pub fn grade_text(s: &TruncatedSeries, k: u32) -> String {
    struct Grade<'a>(&'a TruncatedSeries);
    impl fmt::Display for Grade<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_terms(f, self.0.terms.iter().map(|(m, c)| (c, m.aux_body())))
        }
    }
    Grade(&s.grade(k)).to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    #[serde(rename = "T")]
    pub order: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub t: u32,
    pub mono: BTreeMap<String, u32>,
    pub coeff: String,
}

impl From<&TruncatedSeries> for SeriesJson {
    fn from(s: &TruncatedSeries) -> Self {
        SeriesJson {
            order: s.order,
            terms: s
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    t: m.t,
                    mono: Var::ALL
                        .iter()
                        .zip(m.aux)
                        .filter(|(_, e)| *e > 0)
                        .map(|(v, e)| (v.name().to_string(), e))
                        .collect(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&SeriesJson> for TruncatedSeries {
    type Error = String;

    fn try_from(raw: &SeriesJson) -> Result<Self, String> {
        let mut s = TruncatedSeries::zero(raw.order);
        for term in &raw.terms {
            let mut mono = Monomial::t_pow(term.t);
            for (name, &e) in &term.mono {
                let var = Var::ALL
                    .into_iter()
                    .find(|v| v.name() == name)
                    .ok_or_else(|| format!("unknown variable {name:?}"))?;
                mono = mono.with(var, e);
            }
            let c: BigInt = term
                .coeff
                .parse()
                .map_err(|e| format!("bad coefficient {:?}: {e}", term.coeff))?;
            s.add_term(mono, c);
        }
        Ok(s)
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = SeriesJson::deserialize(deserializer)?;
        TruncatedSeries::try_from(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn geometric_series() {
        let order = 6;
        let s = &TruncatedSeries::one(order) - &TruncatedSeries::t(order);
        let r = s.reciprocal().unwrap();
        assert_eq!(r.t_coefficients_at_one(), big(&[1; 7]));
        assert_eq!(&r * &s, TruncatedSeries::one(order));
    }

    #[test]
    fn central_binomial_root() {
        let order = 8;
        let t = TruncatedSeries::t(order);
        let s = &TruncatedSeries::one(order) - &t.scale(&BigInt::from(4));
        let r = s.sqrt().unwrap();
        assert_eq!(
            r.t_coefficients_at_one(),
            big(&[1, -2, -2, -4, -10, -28, -84, -264, -858])
        );
        assert_eq!(&r * &r, s);
        assert_eq!(
            TruncatedSeries::one(3).sqrt().unwrap(),
            TruncatedSeries::one(3)
        );
    }

    #[test]
    fn multivariate_root() {
        let order = 10;
        let t = TruncatedSeries::t(order);
        let y = TruncatedSeries::var(order, Var::Y);
        let one = TruncatedSeries::one(order);
        let a = &one - &(&y * &t);
        let s = &(&a * &a) - &(&t * &t).scale(&BigInt::from(4));
        let r = s.sqrt().unwrap();
        assert_eq!(&r * &r, s);
    }

    #[test]
    fn errors() {
        let x = TruncatedSeries::var(4, Var::X);
        assert_eq!(x.reciprocal(), Err(SeriesError::NonUnitConstant));
        assert_eq!(
            TruncatedSeries::constant(4, 4).sqrt(),
            Err(SeriesError::NonSquareConstant)
        );
        let odd = &TruncatedSeries::one(3) + &TruncatedSeries::t(3);
        assert_eq!(odd.sqrt(), Err(SeriesError::NonIntegralRoot));
    }

    #[test]
    fn text_and_json() {
        let order = 3;
        let x = TruncatedSeries::var(order, Var::X);
        let t = TruncatedSeries::t(order);
        let s = &(&x.scale(&BigInt::from(2)) + &(&x * &x)) * &(&t * &t);
        assert_eq!(grade_text(&s, 2), "2x+x²");
        assert_eq!(s.to_string(), "(2x+x²)t² + O(t⁴)");
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(
            text,
            r#"{"T":3,"terms":[{"t":2,"mono":{"x":1},"coeff":"2"},{"t":2,"mono":{"x":2},"coeff":"1"}]}"#
        );
        assert_eq!(serde_json::from_str::<TruncatedSeries>(&text).unwrap(), s);
    }
}

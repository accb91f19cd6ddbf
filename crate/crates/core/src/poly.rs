//! Exact polynomials over big integers, and rational helpers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q`, `p`, or a decimal like `0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: '{s}'"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::DivisionByZero("rational literal"));
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((w, f)) = s.split_once('.') {
        if f.is_empty() || !f.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = w.starts_with('-');
        let w: BigInt = if w.is_empty() || w == "-" {
            BigInt::zero()
        } else {
            w.parse().map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(f.len() as u32);
        let frac: BigInt = f.parse().map_err(|_| bad())?;
        let mag = w.abs() * &scale + frac;
        let num = if neg { -mag } else { mag };
        return Ok(Rational::new(num, scale));
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn pow_rational(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// Polynomial in one variable with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Univariate {
    coeffs: Vec<BigInt>,
}

impl Univariate {
    pub fn new(mut coeffs: Vec<BigInt>) -> Univariate {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Univariate { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Univariate {
        Univariate::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Univariate {
        Univariate { coeffs: Vec::new() }
    }

    pub fn one() -> Univariate {
        Univariate::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Univariate {
        Univariate::new(vec![c])
    }

    /// `c * y^k`
    pub fn monomial(c: BigInt, k: usize) -> Univariate {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Univariate::new(v)
    }

    /// `y + c`
    pub fn shifted_variable(c: i64) -> Univariate {
        Univariate::from_i64(&[c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Univariate) -> Univariate {
        let n = self.coeffs.len().max(other.coeffs.len());
        Univariate::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Univariate) -> Univariate {
        let n = self.coeffs.len().max(other.coeffs.len());
        Univariate::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Univariate) -> Univariate {
        if self.is_zero() || other.is_zero() {
            return Univariate::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Univariate::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Univariate {
        Univariate::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> Univariate {
        let mut acc = Univariate::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// `p(y + c)`
    pub fn shift(&self, c: i64) -> Univariate {
        let step = Univariate::shifted_variable(c);
        let mut acc = Univariate::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(&step).add(&Univariate::constant(a.clone()));
        }
        acc
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.coeffs.iter().rev() {
            acc = acc * y + Rational::from_integer(a.clone());
        }
        acc
    }

    /// Coefficient list as decimal strings, lowest degree first.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|c| json!(c.to_string())).collect())
    }
}

impl fmt::Display for Univariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .map(|(k, c)| (c.clone(), monomial_name(&[("y", k)]))),
        )
    }
}

/// Polynomial in x and y with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Bivariate {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl Bivariate {
    pub fn zero() -> Bivariate {
        Bivariate::default()
    }

    pub fn one() -> Bivariate {
        Bivariate::term(0, 0, BigInt::one())
    }

    pub fn x() -> Bivariate {
        Bivariate::term(1, 0, BigInt::one())
    }

    pub fn y() -> Bivariate {
        Bivariate::term(0, 1, BigInt::one())
    }

    pub fn term(i: usize, j: usize, c: BigInt) -> Bivariate {
        let mut p = Bivariate::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Bivariate {
        let mut p = Bivariate::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn x_degree(&self) -> usize {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn y_degree(&self) -> usize {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Bivariate) -> Bivariate {
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Bivariate) -> Bivariate {
        let mut out = Bivariate::zero();
        for (i, j, a) in self.terms() {
            for (k, l, b) in other.terms() {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms()
            .map(|(i, j, c)| Rational::from_integer(c.clone()) * pow_rational(x, i) * pow_rational(y, j))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// `xd^xcap * yd^ycap * T(xn/xd, yn/yd)` as a polynomial, where the
    /// caps bound the degrees so no division happens.
    pub fn eval_cleared(
        &self,
        xn: &Univariate,
        xd: &Univariate,
        xcap: usize,
        yn: &Univariate,
        yd: &Univariate,
        ycap: usize,
    ) -> Univariate {
        assert!(self.x_degree() <= xcap && self.y_degree() <= ycap);
        let mut out = Univariate::zero();
        for (i, j, c) in self.terms() {
            let t = xn
                .pow(i)
                .mul(&xd.pow(xcap - i))
                .mul(&yn.pow(j))
                .mul(&yd.pow(ycap - j))
                .scale(c);
            out = out.add(&t);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(i, j, c)| json!({"x": i, "y": j, "c": c.to_string()}))
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Bivariate> {
        let bad = || Error::Parse("malformed polynomial JSON".into());
        let mut p = Bivariate::zero();
        for t in v["terms"].as_array().ok_or_else(bad)? {
            let i = t["x"].as_u64().ok_or_else(bad)? as usize;
            let j = t["y"].as_u64().ok_or_else(bad)? as usize;
            let c: BigInt = t["c"].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            p.add_term(i, j, c);
        }
        Ok(p)
    }
}

impl fmt::Display for Bivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.iter().collect();
        keys.sort_by_key(|&(&(i, j), _)| std::cmp::Reverse((i + j, i)));
        write_terms(
            f,
            keys.into_iter()
                .map(|(&(i, j), c)| (c.clone(), monomial_name(&[("x", i), ("y", j)]))),
        )
    }
}

/// Polynomial in k, l, m with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Trivariate {
    terms: BTreeMap<(usize, usize, usize), BigInt>,
}

impl Trivariate {
    pub fn zero() -> Trivariate {
        Trivariate::default()
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: usize, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b, c)).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(a, b, c));
        }
    }

    pub fn add(&self, other: &Trivariate) -> Trivariate {
        let mut out = self.clone();
        for (&(a, b, c), v) in &other.terms {
            out.add_term(a, b, c, v.clone());
        }
        out
    }

    pub fn one() -> Trivariate {
        let mut t = Trivariate::zero();
        t.add_term(0, 0, 0, BigInt::one());
        t
    }

    /// `a*k + b*l + c*m`
    pub fn linear(a: i64, b: i64, c: i64) -> Trivariate {
        let mut t = Trivariate::zero();
        t.add_term(1, 0, 0, BigInt::from(a));
        t.add_term(0, 1, 0, BigInt::from(b));
        t.add_term(0, 0, 1, BigInt::from(c));
        t
    }

    pub fn mul(&self, other: &Trivariate) -> Trivariate {
        let mut out = Trivariate::zero();
        for (&(a, b, c), x) in &self.terms {
            for (&(d, e, f), y) in &other.terms {
                out.add_term(a + d, b + e, c + f, x * y);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Trivariate {
        let mut out = Trivariate::zero();
        for (&(a, b, d), x) in &self.terms {
            out.add_term(a, b, d, x * c);
        }
        out
    }

    pub fn pow(&self, n: usize) -> Trivariate {
        let mut acc = Trivariate::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize, usize), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coeff(&self, a: usize, b: usize, c: usize) -> BigInt {
        self.terms.get(&(a, b, c)).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval(&self, k: &Rational, l: &Rational, m: &Rational) -> Rational {
        self.terms()
            .map(|((a, b, c), v)| {
                Rational::from_integer(v.clone()) * pow_rational(k, a) * pow_rational(l, b) * pow_rational(m, c)
            })
            .fold(Rational::zero(), |x, y| x + y)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|((a, b, c), v)| json!({"k": a, "l": b, "m": c, "c": v.to_string()}))
            .collect();
        json!({ "terms": terms })
    }
}

impl fmt::Display for Trivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(&(a, b, c), v)| (v.clone(), monomial_name(&[("k", a), ("l", b), ("m", c)]))),
        )
    }
}

fn monomial_name(parts: &[(&str, usize)]) -> String {
    parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect()
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (BigInt, String)>) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { '-' } else { '+' })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}{mono}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Lossy conversion for reports.
pub fn to_f64(r: &Rational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-2").unwrap(), int(-2));
        assert_eq!(parse_rational("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn univariate_arithmetic() {
        let p = Univariate::from_i64(&[1, 1]); // 1 + y
        assert_eq!(p.pow(3), Univariate::from_i64(&[1, 3, 3, 1]));
        assert_eq!(p.shift(-1), Univariate::from_i64(&[0, 1]));
        assert_eq!(p.eval(&rat(1, 2)), rat(3, 2));
        assert_eq!(p.sub(&p), Univariate::zero());
        assert_eq!(format!("{}", p.pow(2)), "y^2 + 2y + 1");
    }

    #[test]
    fn bivariate_display_and_json() {
        let t = Bivariate::from_terms(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(format!("{t}"), "x^2 + x + y");
        let back = Bivariate::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.eval(&int(2), &int(2)), int(8));
    }

    #[test]
    fn cleared_evaluation_matches_rational() {
        let t = Bivariate::from_terms(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        // 2^2 * 2^1 * T(2/2 ... ) style check at y = 3
        let y = Univariate::from_i64(&[0, 1]);
        let one = Univariate::one();
        let p = t.eval_cleared(&y.add(&one), &y, 2, &one, &y, 1);
        let y0 = int(3);
        let direct = t.eval(&(rat(4, 3)), &rat(1, 3)) * int(9) * int(3);
        assert_eq!(p.eval(&y0), direct);
    }
}

//! Text, JSON and LaTeX forms of character polynomials.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use super::{CharacterPolynomial, Monomial, Var, VarKind};
use crate::error::{Error, Result};
use crate::partitions::DoublePartition;
use crate::Q;

/// Parses `"3"`, `"-1/2"`.
pub fn parse_rational(s: &str) -> Result<Q> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((a, b)) => {
            let num = a.trim().parse::<num_bigint::BigInt>();
            let den = b.trim().parse::<num_bigint::BigInt>();
            match (num, den) {
                (Ok(n), Ok(d)) if !d.is_zero() => Some(Q::new(n, d)),
                _ => None,
            }
        }
        None => t.parse::<num_bigint::BigInt>().ok().map(Q::from_integer),
    };
    parsed.ok_or_else(|| Error::Parse(format!("bad rational {s:?}")))
}

fn parse_var(s: &str) -> Result<Var> {
    let bad = || Error::Parse(format!("bad variable {s:?}"));
    let mut chars = s.chars();
    let kind = match chars.next() {
        Some('X') | Some('x') => VarKind::X,
        Some('Y') | Some('y') => VarKind::Y,
        _ => return Err(bad()),
    };
    let index: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    Ok(Var { index, kind })
}

/// Parses `"X1^2*Y3"`; `"1"` is the empty monomial.
pub fn parse_monomial(s: &str) -> Result<Monomial> {
    let t = s.trim();
    if t == "1" || t.is_empty() {
        return Ok(Monomial::one());
    }
    let mut powers = Vec::new();
    for factor in t.split('*') {
        let (v, e) = match factor.split_once('^') {
            Some((v, e)) => (
                v,
                e.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        powers.push((parse_var(v.trim())?, e));
    }
    Ok(Monomial::from_powers(powers))
}

fn signed_terms(out: &mut String, terms: Vec<(Q, String)>) {
    if terms.is_empty() {
        out.push('0');
        return;
    }
    for (i, (c, body)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        let abs = c.abs();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if body.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&abs.to_string());
            out.push('*');
            out.push_str(&body);
        }
    }
}

/// Expanded monomial form, highest degree first: `"1/2*X1^2 - X2 + 1"`.
impl fmt::Display for CharacterPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sorted: Vec<_> = self.terms().collect();
        sorted.sort_by_key(|(m, _)| std::cmp::Reverse(m.degree()));
        let terms = sorted
            .into_iter()
            .map(|(m, c)| {
                let body = if m.is_one() { String::new() } else { m.to_string() };
                (c.clone(), body)
            })
            .collect();
        let mut out = String::new();
        signed_terms(&mut out, terms);
        f.write_str(&out)
    }
}

fn binomial_factors(dp: &DoublePartition, latex: bool) -> Vec<String> {
    let mut factors = Vec::new();
    let sides = [("X", &dp.plus), ("Y", &dp.minus)];
    for (name, part) in sides {
        for (r, k) in part.multiplicities() {
            let var = if latex {
                format!("{name}_{r}")
            } else {
                format!("{name}{r}")
            };
            factors.push(match (k, latex) {
                (1, _) => var,
                (_, false) => format!("C({var},{k})"),
                (_, true) => format!("{{{var} \\choose {k}}}"),
            });
        }
    }
    factors
}

impl CharacterPolynomial {
    fn binomial_terms(&self, latex: bool) -> Vec<(Q, String)> {
        let mut coords: Vec<(DoublePartition, Q)> = self.to_binomial_basis().into_iter().collect();
        coords.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then_with(|| a.0.cmp(&b.0)));
        coords
            .into_iter()
            .map(|(dp, c)| {
                let sep = if latex { "" } else { "*" };
                (c, binomial_factors(&dp, latex).join(sep))
            })
            .collect()
    }

    /// Generalized-binomial form, highest degree first:
    /// `"2*C(X1,2) - 2*C(Y1,2)"`, with `C(X1,1)` written `X1`.
    pub fn to_binomial_string(&self) -> String {
        let mut out = String::new();
        signed_terms(&mut out, self.binomial_terms(false));
        out
    }

    /// LaTeX in generalized-binomial form, e.g. `2{X_1 \choose 2} - 2{Y_1 \choose 2}`.
    pub fn to_latex(&self) -> String {
        let terms = self.binomial_terms(true);
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, body)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let coeff = if abs.is_integer() {
                abs.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
            };
            if body.is_empty() {
                out.push_str(&coeff);
            } else {
                if !abs.is_one() {
                    out.push_str(&coeff);
                }
                out.push_str(&body);
            }
        }
        out
    }

    /// `{"X1^2*Y3": "1/2", ...}`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (m, c) in self.terms() {
            map.insert(m.to_string(), Value::String(c.to_string()));
        }
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("polynomial must be a JSON object".into()))?;
        let mut out = Self::zero();
        for (k, v) in obj {
            let coeff = match v {
                Value::String(s) => parse_rational(s)?,
                Value::Number(n) => parse_rational(&n.to_string())?,
                _ => return Err(Error::Parse(format!("bad coefficient for {k:?}"))),
            };
            out.add_term(parse_monomial(k)?, coeff);
        }
        Ok(out)
    }
}

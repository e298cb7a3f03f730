//! Helpers shared by the integration tests: a reader for polynomials written
//! in binomial notation, brute-force trace computations, and random inputs.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use weylchar::partitions::{double_partitions_of, partitions_of};
use weylchar::{q, CharacterPolynomial, DoublePartition, Family, FiwSharpModule, Monomial, Var, Q};

pub fn x(r: usize) -> CharacterPolynomial {
    CharacterPolynomial::x(r)
}

pub fn y(r: usize) -> CharacterPolynomial {
    CharacterPolynomial::y(r)
}

pub fn c(v: i64) -> CharacterPolynomial {
    CharacterPolynomial::constant(q(v))
}

fn factor(text: &str) -> CharacterPolynomial {
    let text = text.trim();
    let var = |s: &str| -> CharacterPolynomial {
        let s = s.trim();
        let r: usize = s[1..].parse().unwrap_or_else(|_| panic!("bad variable {s:?}"));
        match &s[..1] {
            "X" => x(r),
            "Y" => y(r),
            _ => panic!("bad variable {s:?}"),
        }
    };
    if let Some(inner) = text.strip_prefix("C(").and_then(|t| t.strip_suffix(')')) {
        let (v, k) = inner.split_once(',').expect("C(var,k)");
        CharacterPolynomial::binomial(&var(v), k.trim().parse().expect("binomial k"))
    } else if text.starts_with(['X', 'Y']) {
        var(text)
    } else {
        let (num, den) = text.split_once('/').unwrap_or((text, "1"));
        CharacterPolynomial::constant(Q::new(
            num.trim().parse::<i64>().expect("coefficient").into(),
            den.trim().parse::<i64>().expect("coefficient").into(),
        ))
    }
}

/// Reads sums like `12*C(X1,4) - X1*X2 + 1/2*Y1`; factors within a term are
/// joined by `*`.
pub fn poly(text: &str) -> CharacterPolynomial {
    let mut out = CharacterPolynomial::zero();
    let mut sign = 1i64;
    let mut term = String::new();
    let mut depth = 0usize;
    let mut flush = |term: &mut String, sign: i64| {
        if term.trim().is_empty() {
            return;
        }
        let mut p = c(sign);
        for f in term.split('*') {
            p = &p * &factor(f);
        }
        out += &p;
        term.clear();
    };
    for ch in text.chars() {
        match ch {
            '(' => {
                depth += 1;
                term.push(ch);
            }
            ')' => {
                depth -= 1;
                term.push(ch);
            }
            '+' | '-' if depth == 0 => {
                flush(&mut term, sign);
                sign = if ch == '-' { -1 } else { 1 };
            }
            _ => term.push(ch),
        }
    }
    flush(&mut term, sign);
    out
}

/// A random polynomial of weighted degree at most `degree`.
pub fn random_polynomial(degree: usize, rng: &mut ChaCha8Rng) -> CharacterPolynomial {
    let mut out = CharacterPolynomial::zero();
    for _ in 0..rng.gen_range(1..=6) {
        let mut left = rng.gen_range(0..=degree);
        let mut powers = Vec::new();
        while left > 0 {
            let r = rng.gen_range(1..=left);
            powers.push((if rng.gen_bool(0.5) { Var::x(r) } else { Var::y(r) }, 1));
            left -= r;
        }
        let coeff = Q::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=4).into());
        out.add_term(Monomial::from_powers(powers), coeff);
    }
    out
}

/// Random irreducible multiplicities for a true module generated in degree
/// at most `max_degree`; at least one component is nonzero.
pub fn random_components(
    family: Family,
    max_degree: usize,
    rng: &mut ChaCha8Rng,
) -> BTreeMap<usize, BTreeMap<DoublePartition, i64>> {
    loop {
        let mut out = BTreeMap::new();
        for a in 0..=max_degree {
            let labels: Vec<DoublePartition> = match family {
                Family::A => partitions_of(a)
                    .into_iter()
                    .map(|p| DoublePartition::new(p, Default::default()))
                    .collect(),
                _ => double_partitions_of(a),
            };
            let mut mults = BTreeMap::new();
            for l in labels {
                if rng.gen_bool(0.35) {
                    mults.insert(l, rng.gen_range(1..=3));
                }
            }
            if !mults.is_empty() {
                out.insert(a, mults);
            }
        }
        if !out.is_empty() {
            return out;
        }
    }
}

pub fn module(family: Family, labels: &[(&str, i64)]) -> FiwSharpModule {
    let mut comps: BTreeMap<usize, BTreeMap<DoublePartition, i64>> = BTreeMap::new();
    for (l, m) in labels {
        let dp: DoublePartition = l.parse().unwrap();
        *comps.entry(dp.size()).or_default().entry(dp).or_default() += m;
    }
    FiwSharpModule::from_irreducibles(family, &comps).unwrap()
}

/// Signed injections `[m] → ±[n]` as image vectors; sign-preserving only for
/// family `A`.
pub fn signed_injections(m: usize, n: usize, family: Family) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(m: usize, n: usize, signed: bool, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for a in 1..=n as i32 {
            if cur.iter().any(|&b: &i32| b.abs() == a) {
                continue;
            }
            for s in if signed { vec![1, -1] } else { vec![1] } {
                cur.push(s * a);
                go(m, n, signed, cur, out);
                cur.pop();
            }
        }
    }
    go(m, n, family != Family::A, &mut cur, &mut out);
    out
}

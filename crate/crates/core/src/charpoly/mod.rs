//! The graded ring `Q[X_1, Y_1, X_2, Y_2, ...]` of character polynomials.
//!
//! `X_r` counts positive `r`-cycles and `Y_r` counts negative `r`-cycles of a
//! signed permutation; both have degree `r`. Polynomials are stored in
//! canonical sparse form: a map from monomial to a nonzero rational.

mod class_function;
mod fit;
mod format;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::{DoublePartition, Partition, SignedCycleType};
use crate::Q;

pub use class_function::ClassFunction;
pub use fit::{fit, fit_basis, fit_default_range, FitBasis};
pub use format::{parse_monomial, parse_rational};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarKind {
    X,
    Y,
}

/// A cycle-counting variable. Ordered by index, then `X` before `Y`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var {
    pub index: usize,
    pub kind: VarKind,
}

impl Var {
    pub fn x(r: usize) -> Self {
        assert!(r >= 1, "cycle-length index must be positive");
        Self {
            index: r,
            kind: VarKind::X,
        }
    }

    pub fn y(r: usize) -> Self {
        assert!(r >= 1, "cycle-length index must be positive");
        Self {
            index: r,
            kind: VarKind::Y,
        }
    }

    /// Value of the variable on a signed cycle type.
    pub fn count(&self, c: &SignedCycleType) -> usize {
        match self.kind {
            VarKind::X => c.plus.multiplicity(self.index),
            VarKind::Y => c.minus.multiplicity(self.index),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::X => write!(f, "X{}", self.index),
            VarKind::Y => write!(f, "Y{}", self.index),
        }
    }
}

/// A product of variable powers; the empty monomial is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Self(vec![(v, 1)])
    }

    /// Builds a monomial from `(var, exponent)` pairs in any order.
    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Self(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Weighted degree with `deg X_r = deg Y_r = r`.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|(v, e)| v.index * *e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_powers(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn evaluate_counts(&self, counts: impl Fn(Var) -> usize) -> Q {
        let mut acc = num_bigint::BigInt::one();
        for (v, e) in &self.0 {
            let c = counts(*v);
            if c == 0 {
                return Q::zero();
            }
            acc *= num_bigint::BigInt::from(c).pow(*e);
        }
        Q::from_integer(acc)
    }
}

/// Monomials are ordered by degree, then lexicographically on their powers.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let factors: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        f.write_str(&factors.join("*"))
    }
}

#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct CharacterPolynomial {
    terms: BTreeMap<Monomial, Q>,
}

impl CharacterPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::var(v), Q::one());
        p
    }

    pub fn x(r: usize) -> Self {
        Self::var(Var::x(r))
    }

    pub fn y(r: usize) -> Self {
        Self::var(Var::y(r))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Weighted degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn has_y(&self) -> bool {
        self.terms
            .keys()
            .any(|m| m.0.iter().any(|(v, _)| v.kind == VarKind::Y))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `C(p, k) = p (p-1) ... (p-k+1) / k!`.
    pub fn binomial(p: &Self, k: usize) -> Self {
        let mut acc = Self::one();
        for i in 0..k {
            let shifted = p - &Self::constant(Q::from_integer(i.into()));
            acc = &acc * &shifted;
        }
        let denom = Q::from_integer(crate::partitions::factorial(k).into());
        acc.scale(&(Q::one() / denom))
    }

    /// Generalized binomial `Π_r C(X_r, n_r(α)) C(Y_r, n_r(β))`.
    pub fn gen_binom(alpha: &Partition, beta: &Partition) -> Self {
        let mut acc = Self::one();
        for (r, c) in alpha.multiplicities() {
            acc = &acc * &Self::binomial(&Self::x(r), c);
        }
        for (r, c) in beta.multiplicities() {
            acc = &acc * &Self::binomial(&Self::y(r), c);
        }
        acc
    }

    /// Evaluates with `X_r := n_r(plus)`, `Y_r := n_r(minus)`.
    pub fn evaluate(&self, c: &SignedCycleType) -> Q {
        self.evaluate_counts(|v| v.count(c))
    }

    pub fn evaluate_counts(&self, counts: impl Fn(Var) -> usize) -> Q {
        self.terms
            .iter()
            .map(|(m, coeff)| m.evaluate_counts(&counts) * coeff)
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Ring substitution of every variable.
    pub fn substitute(&self, image: impl Fn(Var) -> CharacterPolynomial) -> Self {
        let mut cache: BTreeMap<Var, CharacterPolynomial> = BTreeMap::new();
        let mut out = Self::zero();
        for (m, coeff) in &self.terms {
            let mut term = Self::constant(coeff.clone());
            for (v, e) in &m.0 {
                let img = cache.entry(*v).or_insert_with(|| image(*v));
                term = &term * &img.pow(*e);
            }
            out += &term;
        }
        out
    }

    /// Sets every `Y_r` to zero (restriction from `B_n` to `S_n`).
    pub fn restrict_to_sym(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.0.iter().all(|(v, _)| v.kind == VarKind::X))
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Pulls an `S_n` character polynomial back along `B_n -> S_n` by
    /// substituting `X_r -> X_r + Y_r`.
    pub fn inflate_sym(&self) -> Result<Self> {
        if self.has_y() {
            return Err(Error::HasYVariables);
        }
        Ok(self.substitute(|v| &Self::x(v.index) + &Self::y(v.index)))
    }

    /// Substitutes `X_r -> X_r - n_r(α)` and `Y_r -> Y_r - n_r(β)`.
    pub fn shift(&self, alpha: &Partition, beta: &Partition) -> Self {
        self.substitute(|v| {
            let offset = match v.kind {
                VarKind::X => alpha.multiplicity(v.index),
                VarKind::Y => beta.multiplicity(v.index),
            };
            &Self::var(v) - &Self::constant(Q::from_integer(offset.into()))
        })
    }

    /// Coordinates in the generalized-binomial basis: `self = Σ c(α,β)
    /// gen_binom(α,β)`.
    ///
    /// Each power `v^e` expands as `Σ_j S(e,j) j! C(v,j)` with `S` the Stirling
    /// numbers of the second kind; the `j`'s of the variables `X_r`, `Y_r` are
    /// the multiplicities of `r` in `α`, `β`.
    pub fn to_binomial_basis(&self) -> BTreeMap<DoublePartition, Q> {
        let mut out: BTreeMap<DoublePartition, Q> = BTreeMap::new();
        for (m, coeff) in &self.terms {
            // list of (var, Vec<(j, weight)>)
            let mut expansions: Vec<(Var, Vec<(usize, Q)>)> = Vec::new();
            for (v, e) in &m.0 {
                let e = *e as usize;
                let row: Vec<(usize, Q)> = (1..=e)
                    .map(|j| {
                        let w = stirling2(e, j) * crate::partitions::factorial(j);
                        (j, Q::from_integer(w.into()))
                    })
                    .collect();
                expansions.push((*v, row));
            }
            let mut partial: Vec<(Vec<(Var, usize)>, Q)> = vec![(Vec::new(), coeff.clone())];
            for (v, row) in &expansions {
                let mut next = Vec::with_capacity(partial.len() * row.len());
                for (choice, w) in &partial {
                    for (j, wj) in row {
                        let mut c = choice.clone();
                        c.push((*v, *j));
                        next.push((c, w * wj));
                    }
                }
                partial = next;
            }
            for (choice, w) in partial {
                let mut plus = Vec::new();
                let mut minus = Vec::new();
                for (v, j) in choice {
                    let target = match v.kind {
                        VarKind::X => &mut plus,
                        VarKind::Y => &mut minus,
                    };
                    target.extend(std::iter::repeat_n(v.index, j));
                }
                let key = DoublePartition::new(Partition::new(plus), Partition::new(minus));
                let slot = out.entry(key).or_insert_with(Q::zero);
                *slot += w;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn from_binomial_basis<'a>(
        coords: impl IntoIterator<Item = (&'a DoublePartition, &'a Q)>,
    ) -> Self {
        let mut out = Self::zero();
        for (dp, c) in coords {
            out += &Self::gen_binom(&dp.plus, &dp.minus).scale(c);
        }
        out
    }
}

/// Value of `gen_binom(α, β)` on a signed cycle type, computed directly as a
/// product of integer binomials.
pub fn gen_binom_value(alpha: &Partition, beta: &Partition, c: &SignedCycleType) -> u128 {
    let mut acc: u128 = 1;
    for (r, k) in alpha.multiplicities() {
        acc *= binom_u128(c.plus.multiplicity(r), k);
        if acc == 0 {
            return 0;
        }
    }
    for (r, k) in beta.multiplicities() {
        acc *= binom_u128(c.minus.multiplicity(r), k);
        if acc == 0 {
            return 0;
        }
    }
    acc
}

pub(crate) fn binom_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn stirling2(n: usize, k: usize) -> u128 {
    // S(n, k) by the triangle recurrence; n is a monomial exponent, so small
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

impl AddAssign<&CharacterPolynomial> for CharacterPolynomial {
    fn add_assign(&mut self, rhs: &CharacterPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn add(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn add(mut self, rhs: CharacterPolynomial) -> CharacterPolynomial {
        self += &rhs;
        self
    }
}

impl Neg for &CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn neg(self) -> CharacterPolynomial {
        CharacterPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn neg(self) -> CharacterPolynomial {
        -&self
    }
}

impl Sub for &CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn sub(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn sub(self, rhs: CharacterPolynomial) -> CharacterPolynomial {
        &self - &rhs
    }
}

impl Mul for &CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn mul(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut out = CharacterPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for CharacterPolynomial {
    type Output = CharacterPolynomial;

    fn mul(self, rhs: CharacterPolynomial) -> CharacterPolynomial {
        &self * &rhs
    }
}

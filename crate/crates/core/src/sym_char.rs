//! Irreducible characters of symmetric groups and their character polynomials.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::charpoly::CharacterPolynomial;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::Q;

thread_local! {
    static MN_MEMO: RefCell<HashMap<(Vec<usize>, Vec<usize>), i64>> = RefCell::new(HashMap::new());
}

/// `χ^λ_ρ` by the Murnaghan–Nakayama rule.
///
/// Rim hooks are removed on the beta-set (first-column hook lengths) of `λ`:
/// removing an `r`-hook moves one bead from `b` to `b - r` and contributes
/// `(-1)^{beads strictly between}`.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: rho.size(),
        });
    }
    Ok(mn_rec(lambda.parts(), rho.parts()))
}

fn mn_rec(lambda: &[usize], rho: &[usize]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), rho.to_vec());
    if let Some(v) = MN_MEMO.with(|m| m.borrow().get(&key).copied()) {
        return v;
    }
    let r = rho[0];
    let rest = &rho[1..];
    let len = lambda.len();
    let beads: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0i64;
    for (i, &b) in beads.iter().enumerate() {
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beads.iter().filter(|&&c| c > target && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut moved = beads.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let shape: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn_rec(&shape, rest);
    }
    MN_MEMO.with(|m| m.borrow_mut().insert(key, total));
    total
}

/// The full character table of `S_n`, rows and columns in canonical
/// partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymCharTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    /// `values[i][j] = χ^{partitions[i]}_{partitions[j]}`.
    pub values: Vec<Vec<i64>>,
}

impl SymCharTable {
    pub fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let values = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|r| mn_rec(l.parts(), r.parts()))
                    .collect()
            })
            .collect();
        Self {
            n,
            partitions,
            values,
        }
    }

    fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    pub fn value(&self, lambda: &Partition, rho: &Partition) -> Option<i64> {
        Some(self.values[self.index(lambda)?][self.index(rho)?])
    }
}

static POLY_CACHE: Lazy<Mutex<HashMap<Partition, CharacterPolynomial>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// `P^λ = Σ_{|ρ|+|σ|=|λ|} (-1)^{ℓ(σ)} χ^λ_{ρ∪σ} / z_σ · C(X, ρ)`, the
/// polynomial giving the character of `V_{λ[n]}` for every `n ≥ |λ| + λ_1`.
pub fn sym_char_poly(lambda: &Partition) -> CharacterPolynomial {
    if let Some(p) = POLY_CACHE.lock().unwrap().get(lambda) {
        return p.clone();
    }
    let d = lambda.size();
    let mut out = CharacterPolynomial::zero();
    for k in 0..=d {
        for rho in partitions_of(k) {
            let binom = CharacterPolynomial::gen_binom(&rho, &Partition::empty());
            let mut coeff = Q::from_integer(0.into());
            for sigma in partitions_of(d - k) {
                let chi = mn_rec(lambda.parts(), rho.union(&sigma).parts());
                let sign = if sigma.len() % 2 == 0 { 1 } else { -1 };
                coeff += Q::new((sign * chi).into(), sigma.z_factor().into());
            }
            out += &binom.scale(&coeff);
        }
    }
    POLY_CACHE
        .lock()
        .unwrap()
        .insert(lambda.clone(), out.clone());
    out
}

//! Concrete signed permutations, exhaustive enumeration of `S_n`, `B_n`,
//! `D_n`, conjugacy classes, and the brute-force oracles that every formula in
//! the crate is tested against.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use once_cell::sync::Lazy;

use crate::charpoly::ClassFunction;
use crate::error::{Error, Result};
use crate::partitions::{
    double_partitions_of, factorial, partitions_of, DoublePartition, Partition, SignedCycleType,
};
use crate::Q;

/// The three classical families: `A` (`S_n`), `BC` (`B_n`), `D` (`D_n`).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    A,
    BC,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::BC => "BC",
            Family::D => "D",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" | "S" => Ok(Family::A),
            "B" | "C" | "BC" => Ok(Family::BC),
            "D" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Group {
    pub family: Family,
    pub n: usize,
}

impl Group {
    pub fn new(family: Family, n: usize) -> Self {
        Self { family, n }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n)
    }

    pub fn bc(n: usize) -> Self {
        Self::new(Family::BC, n)
    }

    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n)
    }

    pub fn order(&self) -> u128 {
        let nf = factorial(self.n);
        match self.family {
            Family::A => nf,
            Family::BC => (1u128 << self.n) * nf,
            Family::D if self.n == 0 => 1,
            Family::D => (1u128 << (self.n - 1)) * nf,
        }
    }

    pub fn contains(&self, w: &SignedPermutation) -> bool {
        w.n() == self.n
            && match self.family {
                Family::A => w.negatives() == 0,
                Family::BC => true,
                Family::D => w.negatives().is_multiple_of(2),
            }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "S_{}", self.n),
            Family::BC => write!(f, "B_{}", self.n),
            Family::D => write!(f, "D_{}", self.n),
        }
    }
}

/// A signed permutation `w` of `{±1, ..., ±n}` with `w(-a) = -w(a)`, stored
/// by the images of `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[a] = true;
        }
        Ok(Self { images })
    }

    /// Builds `i ↦ ±perm[i]`, with bit `i` of `signs` selecting the minus sign;
    /// `perm` holds the 0-based images.
    pub fn from_perm_and_signs(perm: &[usize], signs: u64) -> Self {
        let images = perm
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let v = p as i32 + 1;
                if signs >> i & 1 == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect();
        Self { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// `w(a)` for a signed letter `a ∈ {±1, ..., ±n}`.
    pub fn apply(&self, a: i32) -> i32 {
        let v = self.images[a.unsigned_abs() as usize - 1];
        if a < 0 {
            -v
        } else {
            v
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.n(), other.n());
        Self {
            images: other.images.iter().map(|&b| self.apply(b)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            let target = v.unsigned_abs() as usize - 1;
            images[target] = if v < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        Self { images }
    }

    /// `g w g^{-1}`.
    pub fn conjugate_by(&self, g: &SignedPermutation) -> SignedPermutation {
        g.compose(self).compose(&g.inverse())
    }

    /// Number of sign reversals (negative entries of the matrix).
    pub fn negatives(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// Cycles as `(letters starting at the smallest positive letter, positive?)`.
    ///
    /// Letters are listed as the signed images `a, w(a), w²(a), ...` of the
    /// smallest letter `a` of the cycle.
    pub fn cycles(&self) -> Vec<(Vec<i32>, bool)> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut letters = vec![start as i32];
            seen[start] = true;
            let mut cur = self.apply(start as i32);
            while cur.unsigned_abs() as usize != start {
                seen[cur.unsigned_abs() as usize] = true;
                letters.push(cur);
                cur = self.apply(cur);
            }
            out.push((letters, cur > 0));
        }
        out
    }

    /// Signed cycle type: a cycle is positive iff it reverses an even number
    /// of signs.
    pub fn cycle_type(&self) -> SignedCycleType {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (letters, positive) in self.cycles() {
            if positive {
                plus.push(letters.len());
            } else {
                minus.push(letters.len());
            }
        }
        DoublePartition::new(Partition::new(plus), Partition::new(minus))
    }

    fn encode(&self) -> u64 {
        self.images.iter().fold(0u64, |acc, &v| {
            let d = (v.unsigned_abs() as u64 - 1) * 2 + u64::from(v < 0);
            acc << 5 | d
        })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Brute-force enumeration caps. Defaults are 7 for `BC`/`D` and 9 for `A`;
/// the environment variable `WEYLCHAR_MAX_N` overrides both.
pub fn brute_force_cap(family: Family) -> usize {
    if let Some(v) = std::env::var("WEYLCHAR_MAX_N")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
    {
        return v;
    }
    match family {
        Family::A => 9,
        Family::BC | Family::D => 7,
    }
}

fn check_cap(group: Group) -> Result<()> {
    let cap = brute_force_cap(group.family);
    if group.n > cap {
        return Err(Error::CapExceeded {
            family: group.family.to_string(),
            n: group.n,
            cap,
        });
    }
    Ok(())
}

/// Iterator over every element of a group.
pub struct GroupElements {
    group: Group,
    perm: Option<Vec<usize>>,
    signs: u64,
}

impl Iterator for GroupElements {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        loop {
            let perm = self.perm.as_mut()?;
            let n = self.group.n;
            let w = SignedPermutation::from_perm_and_signs(perm, self.signs);
            let sign_limit = match self.group.family {
                Family::A => 1u64,
                _ => 1u64 << n,
            };
            self.signs += 1;
            if self.signs >= sign_limit {
                self.signs = 0;
                if !next_permutation(perm) {
                    self.perm = None;
                }
            }
            if self.group.contains(&w) {
                return Some(w);
            }
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every element of `W_n` exactly once.
pub fn enumerate_group(n: usize, family: Family) -> Result<GroupElements> {
    let group = Group::new(family, n);
    check_cap(group)?;
    Ok(GroupElements {
        group,
        perm: Some((0..n).collect()),
        signs: 0,
    })
}

/// Which of the two `D_n` classes sharing a split signed cycle type.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SplitTag {
    None,
    Plus,
    Minus,
}

/// Identifies a conjugacy class within a fixed group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ClassKey {
    pub cycle_type: SignedCycleType,
    pub split: SplitTag,
}

impl ClassKey {
    pub fn of_type(cycle_type: SignedCycleType) -> Self {
        Self {
            cycle_type,
            split: SplitTag::None,
        }
    }

    /// `"2,2|-"`, with a `/+` or `/-` suffix for split classes.
    pub fn to_text(&self) -> String {
        match self.split {
            SplitTag::None => self.cycle_type.to_text(),
            SplitTag::Plus => format!("{}/+", self.cycle_type.to_text()),
            SplitTag::Minus => format!("{}/-", self.cycle_type.to_text()),
        }
    }

    /// Parses the text form; a bare partition (no `|`) is an `S_n` class.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, split) = if let Some(b) = s.strip_suffix("/+") {
            (b, SplitTag::Plus)
        } else if let Some(b) = s.strip_suffix("/-") {
            (b, SplitTag::Minus)
        } else {
            (s, SplitTag::None)
        };
        let cycle_type = if body.contains('|') || body.starts_with("((") {
            body.parse::<DoublePartition>()?
        } else {
            DoublePartition::new(body.parse()?, Partition::empty())
        };
        Ok(Self { cycle_type, split })
    }
}

impl fmt::Display for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjClass {
    pub group: Group,
    pub key: ClassKey,
    pub size: u128,
}

impl ConjClass {
    pub fn cycle_type(&self) -> &SignedCycleType {
        &self.key.cycle_type
    }

    pub fn split(&self) -> SplitTag {
        self.key.split
    }

    /// Canonical representative: cycles written on consecutive letters, positive
    /// cycles first (by the order of parts), each cycle `a → a+1 → ... → a+r-1`
    /// closing back to `a` (or to `-a` for a negative cycle). The `Minus` half
    /// of a split pair is the `Plus` representative conjugated by the sign
    /// change of letter 1.
    pub fn representative(&self) -> SignedPermutation {
        let w = canonical_representative(&self.key.cycle_type);
        match self.key.split {
            SplitTag::Minus => w.conjugate_by(&flip_one(self.group.n)),
            _ => w,
        }
    }
}

pub fn canonical_representative(t: &SignedCycleType) -> SignedPermutation {
    let n = t.size();
    let mut images = vec![0i32; n];
    let mut next = 1i32;
    let cycles = t
        .plus
        .parts()
        .iter()
        .map(|&r| (r, true))
        .chain(t.minus.parts().iter().map(|&r| (r, false)));
    for (r, positive) in cycles {
        let start = next;
        for k in 0..r as i32 {
            let a = start + k;
            let img = if k == r as i32 - 1 {
                if positive {
                    start
                } else {
                    -start
                }
            } else {
                a + 1
            };
            images[a as usize - 1] = img;
        }
        next += r as i32;
    }
    SignedPermutation { images }
}

fn flip_one(n: usize) -> SignedPermutation {
    let mut w = SignedPermutation::identity(n);
    w.images[0] = -1;
    w
}

/// A signed cycle type splits in `D_n` iff `n > 0` and all cycles are positive
/// of even length.
pub fn is_split_type(t: &SignedCycleType) -> bool {
    t.size() > 0 && t.minus.is_empty() && t.plus.parts().iter().all(|r| r % 2 == 0)
}

/// `|B_n| / |C(w)|` for `w` of signed type `(α, β)`:
/// `2^n n! / Π_r (2r)^{n_r(α)} n_r(α)! (2r)^{n_r(β)} n_r(β)!`.
pub fn bn_class_size(t: &SignedCycleType) -> u128 {
    let n = t.size();
    let centralizer: u128 = t
        .plus
        .multiplicities()
        .into_iter()
        .chain(t.minus.multiplicities())
        .map(|(r, c)| (2 * r as u128).pow(c as u32) * factorial(c))
        .product();
    (1u128 << n) * factorial(n) / centralizer
}

static CLASS_CACHE: Lazy<Mutex<HashMap<Group, Arc<Vec<ConjClass>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The complete class list of `W_n`, in canonical order, with sizes from the
/// closed-form centralizer orders (validated against [`enumerate_classes`] in
/// tests). For `D_n` each split type appears twice, tagged `Plus`/`Minus`.
pub fn conjugacy_classes(group: Group) -> Arc<Vec<ConjClass>> {
    if let Some(found) = CLASS_CACHE.lock().unwrap().get(&group) {
        return found.clone();
    }
    let n = group.n;
    let mut classes = Vec::new();
    match group.family {
        Family::A => {
            for lam in partitions_of(n) {
                let size = factorial(n) / lam.z_factor();
                classes.push(ConjClass {
                    group,
                    key: ClassKey::of_type(DoublePartition::new(lam, Partition::empty())),
                    size,
                });
            }
        }
        Family::BC => {
            for t in double_partitions_of(n) {
                let size = bn_class_size(&t);
                classes.push(ConjClass {
                    group,
                    key: ClassKey::of_type(t),
                    size,
                });
            }
        }
        Family::D => {
            for t in double_partitions_of(n) {
                if t.minus.len() % 2 == 1 {
                    continue;
                }
                let size = bn_class_size(&t);
                if is_split_type(&t) {
                    for split in [SplitTag::Plus, SplitTag::Minus] {
                        classes.push(ConjClass {
                            group,
                            key: ClassKey {
                                cycle_type: t.clone(),
                                split,
                            },
                            size: size / 2,
                        });
                    }
                } else {
                    classes.push(ConjClass {
                        group,
                        key: ClassKey::of_type(t),
                        size,
                    });
                }
            }
        }
    }
    classes.sort_by(|a, b| a.key.cmp(&b.key));
    let classes = Arc::new(classes);
    CLASS_CACHE
        .lock()
        .unwrap()
        .insert(group, classes.clone());
    classes
}

/// The class of `w` in `group`.
///
/// For a split `D_n` type, `w` is conjugated to the canonical representative
/// by the signed permutation `b` that maps each canonical cycle onto a cycle
/// of `w`; the centralizer of such an element lies inside `D_n`, so `w` is in
/// the `Plus` class iff `b ∈ D_n`.
pub fn class_of(w: &SignedPermutation, group: Group) -> ClassKey {
    let cycle_type = w.cycle_type();
    if group.family != Family::D || !is_split_type(&cycle_type) {
        return ClassKey::of_type(cycle_type);
    }
    let mut cycles: Vec<Vec<i32>> = w.cycles().into_iter().map(|(c, _)| c).collect();
    // match canonical layout: longer cycles first
    cycles.sort_by(|a, b| b.len().cmp(&a.len()));
    let negatives: usize = cycles
        .iter()
        .flat_map(|c| c.iter())
        .filter(|&&a| a < 0)
        .count();
    let split = if negatives.is_multiple_of(2) {
        SplitTag::Plus
    } else {
        SplitTag::Minus
    };
    ClassKey { cycle_type, split }
}

fn generators(group: Group) -> Vec<SignedPermutation> {
    let n = group.n;
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut w = SignedPermutation::identity(n);
        w.images.swap(i, i + 1);
        gens.push(w);
    }
    match group.family {
        Family::A => {}
        Family::BC if n >= 1 => gens.push(flip_one(n)),
        Family::D if n >= 2 => {
            let mut w = SignedPermutation::identity(n);
            w.images[0] = -2;
            w.images[1] = -1;
            gens.push(w);
        }
        _ => {}
    }
    gens
}

/// Class list computed by exhaustive orbit enumeration under conjugation.
pub fn enumerate_classes(group: Group) -> Result<Vec<ConjClass>> {
    check_cap(group)?;
    let gens = generators(group);
    let mut visited: HashSet<u64> = HashSet::new();
    let mut classes = Vec::new();
    for w in enumerate_group(group.n, group.family)? {
        if visited.contains(&w.encode()) {
            continue;
        }
        let mut orbit_size: u128 = 0;
        let mut queue = VecDeque::new();
        visited.insert(w.encode());
        queue.push_back(w.clone());
        let mut members_has_plus_rep = false;
        let cycle_type = w.cycle_type();
        let plus_rep = canonical_representative(&cycle_type).encode();
        while let Some(x) = queue.pop_front() {
            orbit_size += 1;
            if x.encode() == plus_rep {
                members_has_plus_rep = true;
            }
            for g in &gens {
                let y = x.conjugate_by(g);
                if visited.insert(y.encode()) {
                    queue.push_back(y);
                }
            }
        }
        let split = if group.family == Family::D && is_split_type(&cycle_type) {
            if members_has_plus_rep {
                SplitTag::Plus
            } else {
                SplitTag::Minus
            }
        } else {
            SplitTag::None
        };
        classes.push(ConjClass {
            group,
            key: ClassKey { cycle_type, split },
            size: orbit_size,
        });
    }
    classes.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(classes)
}

/// Trace of a monomial action: `action(w, i)` is `Some((j, s))` when `w`
/// sends basis vector `i` to `s · e_j` (`s = ±1`), `None` when it sends it to
/// zero.
pub fn trace_of_action<F>(basis_len: usize, action: F, w: &SignedPermutation) -> Q
where
    F: Fn(&SignedPermutation, usize) -> Option<(usize, i32)>,
{
    let mut trace: i64 = 0;
    for i in 0..basis_len {
        if let Some((j, s)) = action(w, i) {
            if j == i {
                trace += s as i64;
            }
        }
    }
    Q::from_integer(trace.into())
}

/// Character of `Ind_{B_m × B_{n-m}}^{B_n} (U ⊠ U')` by literal summation of
/// `χ^{U⊠U'}(s^{-1} w s)` over the cosets stabilized by `w`.
///
/// Cosets are the `m`-subsets `S ⊆ {1..n}` of blocks `{±i}`; `w` stabilizes
/// the coset of `S` iff it maps the blocks of `S` onto themselves. Works for
/// `A` (`S_m × S_{n-m}` in `S_n`) and `BC`.
pub fn brute_induced_character(
    chi_u: &ClassFunction,
    chi_u_prime: &ClassFunction,
) -> Result<ClassFunction> {
    let family = chi_u.group().family;
    if family != chi_u_prime.group().family || family == Family::D {
        return Err(Error::Unsupported {
            family: family.to_string(),
            what: "induction from a Young-type subgroup of mixed or D families".into(),
        });
    }
    let m = chi_u.group().n;
    let n = m + chi_u_prime.group().n;
    let group = Group::new(family, n);
    check_cap(group)?;
    let subsets = subsets_of_size(n, m);
    ClassFunction::try_from_fn(group, |class| {
        let w = class.representative();
        let mut total = Q::zero();
        for subset in &subsets {
            let in_subset = |a: i32| subset.contains(&(a.unsigned_abs() as usize));
            if !subset.iter().all(|&i| in_subset(w.apply(i as i32))) {
                continue;
            }
            // s maps 1..m onto the subset and m+1..n onto its complement
            let complement: Vec<usize> = (1..=n).filter(|i| !subset.contains(i)).collect();
            let perm: Vec<usize> = subset.iter().chain(complement.iter()).map(|&i| i - 1).collect();
            let s = SignedPermutation::from_perm_and_signs(&perm, 0);
            let t = s.inverse().compose(&w).compose(&s);
            let left = SignedPermutation {
                images: t.images[..m].to_vec(),
            };
            let right = SignedPermutation {
                images: t.images[m..]
                    .iter()
                    .map(|&v| if v < 0 { v + m as i32 } else { v - m as i32 })
                    .collect(),
            };
            let a = chi_u.value(&class_of(&left, chi_u.group()));
            let b = chi_u_prime.value(&class_of(&right, chi_u_prime.group()));
            total += a * b;
        }
        Ok(total)
    })
}

fn subsets_of_size(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(start: usize, n: usize, m: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for i in start..=n {
            current.push(i);
            go(i + 1, n, m, current, out);
            current.pop();
        }
    }
    go(1, n, m, &mut current, &mut out);
    out
}

/// Number of `FI_W` morphisms `f: m → n` fixed by postcomposition with `w`:
/// the trace of `w` on `M_W(m)_n`.
///
/// Morphisms are signed injections (`A`: sign-preserving); for `D` with
/// `n = m` they must reverse an even number of signs.
pub fn count_fixed_injections(w: &SignedPermutation, m: usize, family: Family) -> u128 {
    let n = w.n();
    if m > n {
        return 0;
    }
    let letters: Vec<i32> = match family {
        Family::A => (1..=n as i32).collect(),
        _ => (1..=n as i32).flat_map(|a| [a, -a]).collect(),
    };
    let mut count = 0u128;
    let mut chosen: Vec<i32> = Vec::with_capacity(m);
    fn go(
        w: &SignedPermutation,
        m: usize,
        letters: &[i32],
        chosen: &mut Vec<i32>,
        even_only: bool,
        count: &mut u128,
    ) {
        if chosen.len() == m {
            if even_only && chosen.iter().filter(|&&a| a < 0).count() % 2 == 1 {
                return;
            }
            if chosen.iter().all(|&a| w.apply(a) == a) {
                *count += 1;
            }
            return;
        }
        for &a in letters {
            if chosen.iter().any(|&b| b.abs() == a.abs()) {
                continue;
            }
            chosen.push(a);
            go(w, m, letters, chosen, even_only, count);
            chosen.pop();
        }
    }
    let even_only = family == Family::D && n == m;
    go(w, m, &letters, &mut chosen, even_only, &mut count);
    count
}

//! Characters of hyperoctahedral groups: pulled-back and sign-twisted
//! characters, induction from Young-type subgroups, the irreducible character
//! polynomials `P^{(λ,ν)}`, characters of the induced modules `M_W(U)`, and
//! decomposition into irreducibles.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::charpoly::{gen_binom_value, CharacterPolynomial, ClassFunction};
use crate::error::{Error, Result};
use crate::partitions::{
    double_partitions_of, factorial, partitions_of, DoublePartition, Partition, SignedCycleType,
};
use crate::signed_perm::{Family, Group};
use crate::sym_char::{mn_character, sym_char_poly};
use crate::Q;

/// A stable irreducible label `(λ, ν)`: `V(λ,ν)_n` is the `B_n`
/// irreducible indexed by `(λ[n - |ν|], ν)`, defined once the padding exists.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IrreducibleLabel {
    pub lambda: Partition,
    pub nu: Partition,
}

impl IrreducibleLabel {
    pub fn new(lambda: Partition, nu: Partition) -> Self {
        Self { lambda, nu }
    }

    /// `|λ| + |ν|`, the degree bound of the character polynomial.
    pub fn weight(&self) -> usize {
        self.lambda.size() + self.nu.size()
    }

    /// Smallest `n` at which the padding `λ[n - |ν|]` exists.
    pub fn min_n(&self) -> usize {
        self.lambda.size() + self.lambda.first() + self.nu.size()
    }

    /// The stable label of the `B_n` irreducible `(a, b)`.
    pub fn of_irrep(irrep: &DoublePartition) -> Self {
        Self::new(irrep.plus.unpad(), irrep.minus.clone())
    }

    /// The `B_n` irreducible `(λ[n - |ν|], ν)`, if the padding exists.
    pub fn at(&self, n: usize) -> Option<DoublePartition> {
        let k = n.checked_sub(self.nu.size())?;
        Some(DoublePartition::new(self.lambda.pad(k)?, self.nu.clone()))
    }
}

impl fmt::Display for IrreducibleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lambda.to_text(), self.nu.to_text())
    }
}

/// `P^{(λ,0)}`: the `S_n` polynomial of `λ` pulled back along `B_n → S_n`.
pub fn char_poly_positive(lambda: &Partition) -> CharacterPolynomial {
    sym_char_poly(lambda)
        .inflate_sym()
        .expect("symmetric-group polynomials are Y-free")
}

fn sign(t: &SignedCycleType) -> i64 {
    if t.minus.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Value of `V(∅, λ[n])` (the pullback of `V_{λ[n]}` twisted by the sign
/// character `ε`) on the class `c`: `(-1)^{ℓ(β)} P^{(λ,0)}(α, β)`.
pub fn sign_twisted_value(lambda: &Partition, n: usize, c: &SignedCycleType) -> Result<Q> {
    if lambda.pad(n).is_none() {
        return Err(Error::PaddingFails {
            partition: lambda.to_text(),
            n,
        });
    }
    Ok(char_poly_positive(lambda).evaluate(c) * Q::from_integer(sign(c).into()))
}

/// `χ^a(α ∪ β)` on `B_{|a|}`: the pullback of the `S_n` irreducible `a`.
pub fn pullback_character(a: &Partition) -> ClassFunction {
    ClassFunction::from_fn(Group::bc(a.size()), |c| {
        let t = c.cycle_type();
        let v = mn_character(a, &t.plus.union(&t.minus)).expect("sizes agree");
        Q::from_integer(v.into())
    })
}

/// `(-1)^{ℓ(β)} χ^b(α ∪ β)` on `B_{|b|}`.
pub fn twisted_pullback_character(b: &Partition) -> ClassFunction {
    pullback_character(b).map(|c, v| v * Q::from_integer(sign(c.cycle_type()).into()))
}

/// Character of `Ind_{W_m × W_{n-m}}^{W_n}(U ⊠ U')` for `W = S` or `B`:
///
/// `χ(ρ,σ) = Σ_{(α,β) ⊢ m} χ_U(α,β) χ_{U'}((ρ,σ) - (α,β)) C(X,α) C(Y,β)(ρ,σ)`.
pub fn induced_character(chi_u: &ClassFunction, chi_u_prime: &ClassFunction) -> Result<ClassFunction> {
    let family = chi_u.group().family;
    if family != chi_u_prime.group().family {
        return Err(Error::GroupMismatch {
            left: chi_u.group(),
            right: chi_u_prime.group(),
        });
    }
    if family == Family::D {
        return Err(Error::Unsupported {
            family: family.to_string(),
            what: "induction from D_m x D_(n-m)".into(),
        });
    }
    let n = chi_u.group().n + chi_u_prime.group().n;
    let group = Group::new(family, n);
    Ok(ClassFunction::from_fn(group, |class| {
        let t = class.cycle_type();
        let mut total = Q::zero();
        for (sub, u_value) in chi_u.iter() {
            if u_value.is_zero() {
                continue;
            }
            let s = sub.cycle_type();
            let Some(rest) = t.difference(s) else {
                continue;
            };
            let count = gen_binom_value(&s.plus, &s.minus, t);
            total += u_value * chi_u_prime.value_at_type(&rest) * Q::from_integer(count.into());
        }
        total
    }))
}

static IRR_CACHE: Lazy<Mutex<HashMap<IrreducibleLabel, CharacterPolynomial>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The character polynomial `P^{(λ,ν)}` of `V(λ,ν)_n`, valid for every `n`
/// at which the padding exists.
///
/// With `μ` the partition `ν` stripped of its first part and `k = |ν|`:
///
/// `P^{(λ,ν)} = Σ_{(α,β) ⊢ k} (-1)^{ℓ(β)} P^{(μ,0)}(α,β) ·
///  P^{(λ,0)}(X - n(α), Y - n(β)) · C(X,α) C(Y,β)`,
///
/// the outer factor being `χ_{V(∅,ν)}` (a sign twist of the pullback of
/// `P^μ`) and the shifted polynomial the character of the complementary
/// `V(λ,∅)` factor.
pub fn irr_char_poly(label: &IrreducibleLabel) -> CharacterPolynomial {
    if let Some(p) = IRR_CACHE.lock().unwrap().get(label) {
        return p.clone();
    }
    let k = label.nu.size();
    let mu = label.nu.unpad();
    assert_eq!(
        mu.pad(k).as_ref(),
        Some(&label.nu),
        "unpadding {} does not recover it",
        label.nu
    );
    let inner = char_poly_positive(&mu);
    let outer = char_poly_positive(&label.lambda);
    let mut out = CharacterPolynomial::zero();
    for dp in double_partitions_of(k) {
        let coeff = inner.evaluate(&dp) * Q::from_integer(sign(&dp).into());
        if coeff.is_zero() {
            continue;
        }
        let term = &outer.shift(&dp.plus, &dp.minus) * &CharacterPolynomial::gen_binom(&dp.plus, &dp.minus);
        out += &term.scale(&coeff);
    }
    IRR_CACHE.lock().unwrap().insert(label.clone(), out.clone());
    out
}

static TABLE_CACHE: Lazy<Mutex<HashMap<Group, Arc<Vec<(DoublePartition, ClassFunction)>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The irreducible character of `B_n` indexed by `(a, b)`, computed as
/// `Ind(pullback χ^a ⊠ ε·pullback χ^b)`.
pub fn irr_character(irrep: &DoublePartition) -> ClassFunction {
    induced_character(
        &pullback_character(&irrep.plus),
        &twisted_pullback_character(&irrep.minus),
    )
    .expect("both factors are B-type")
}

/// Every irreducible character of `W_n` (`A` or `BC`), indexed by partitions
/// (as `(λ, ∅)`) or double partitions in canonical order.
pub fn character_table(group: Group) -> Result<Arc<Vec<(DoublePartition, ClassFunction)>>> {
    if let Some(t) = TABLE_CACHE.lock().unwrap().get(&group) {
        return Ok(t.clone());
    }
    let table: Vec<(DoublePartition, ClassFunction)> = match group.family {
        Family::A => partitions_of(group.n)
            .into_iter()
            .map(|lam| {
                let chi = ClassFunction::from_fn(group, |c| {
                    Q::from_integer(mn_character(&lam, &c.cycle_type().plus).unwrap().into())
                });
                (DoublePartition::new(lam, Partition::empty()), chi)
            })
            .collect(),
        Family::BC => double_partitions_of(group.n)
            .into_iter()
            .map(|dp| {
                let chi = irr_character(&dp);
                (dp, chi)
            })
            .collect(),
        Family::D => {
            return Err(Error::Unsupported {
                family: "D".into(),
                what: "irreducible character table".into(),
            })
        }
    };
    let table = Arc::new(table);
    TABLE_CACHE.lock().unwrap().insert(group, table.clone());
    Ok(table)
}

/// `P^U = Σ_{(α,β)} χ_U(α,β) C(X,α) C(Y,β)`, the character polynomial of
/// `M_W(U)` for `U` a representation of `W_m` (`W = S` or `B`).
pub fn m_module_char_poly(chi_u: &ClassFunction) -> Result<CharacterPolynomial> {
    if chi_u.group().family == Family::D {
        return Err(Error::Unsupported {
            family: "D".into(),
            what: "M_D(U) character polynomial".into(),
        });
    }
    let mut out = CharacterPolynomial::zero();
    for (c, v) in chi_u.iter() {
        if v.is_zero() {
            continue;
        }
        let t = c.cycle_type();
        out += &CharacterPolynomial::gen_binom(&t.plus, &t.minus).scale(v);
    }
    Ok(out)
}

/// Character of the free module `M_W(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModuleCharacter {
    pub family: Family,
    pub m: usize,
    /// Valid for every `n`, except `n = m` in type `D` (`m ≥ 1`).
    pub polynomial: CharacterPolynomial,
    /// Type `D` at `n = m`: value at the identity; zero on every other class.
    pub exceptional_identity_value: Option<u128>,
}

impl FreeModuleCharacter {
    /// The character on `W_n`.
    pub fn at(&self, n: usize) -> ClassFunction {
        let group = Group::new(self.family, n);
        match self.exceptional_identity_value {
            Some(v) if n == self.m => {
                let id = SignedCycleType::identity(n);
                ClassFunction::from_fn(group, |c| {
                    if c.cycle_type() == &id {
                        Q::from_integer(v.into())
                    } else {
                        Q::zero()
                    }
                })
            }
            _ => ClassFunction::from_polynomial(group, &self.polynomial),
        }
    }
}

/// `m! C(X_1, m)` for `A`, `2^m m! C(X_1, m)` for `BC` and `D`; in type `D`
/// the polynomial fails at `n = m`, where the character is `2^{m-1} m!` at the
/// identity and zero elsewhere.
pub fn free_module_char_poly(m: usize, family: Family) -> FreeModuleCharacter {
    let scale = match family {
        Family::A => factorial(m),
        Family::BC | Family::D => (1u128 << m) * factorial(m),
    };
    let polynomial = CharacterPolynomial::binomial(&CharacterPolynomial::x(1), m)
        .scale(&Q::from_integer(scale.into()));
    let exceptional_identity_value = match family {
        Family::D if m >= 1 => Some((1u128 << (m - 1)) * factorial(m)),
        _ => None,
    };
    FreeModuleCharacter {
        family,
        m,
        polynomial,
        exceptional_identity_value,
    }
}

/// `M(m) ⊗ M(p) ≅ ⊕_d M(m+p-d)^{c_d}` with
/// `c_d = 2^d m! p! / (m+p-d)! · (m+p-d)! / (d! (m-d)! (p-d)!)` in type `BC`
/// (no `2^d` in type `A`). Keys are `m+p-d`.
pub fn tensor_decompose_free(m: usize, p: usize, family: Family) -> Result<BTreeMap<usize, u128>> {
    if family == Family::D {
        return Err(Error::Unsupported {
            family: "D".into(),
            what: "tensor decomposition of free modules".into(),
        });
    }
    let mut out = BTreeMap::new();
    for d in 0..=m.min(p) {
        let r = m + p - d;
        let multinomial = factorial(r) / (factorial(d) * factorial(m - d) * factorial(p - d));
        let mut c = factorial(m) * factorial(p) * multinomial / factorial(r);
        if family == Family::BC {
            c <<= d;
        }
        out.insert(r, c);
    }
    Ok(out)
}

pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<Q> {
    phi.inner_product(psi)
}

/// Multiplicities of the irreducibles of `W_n` in a virtual character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub group: Group,
    /// Nonzero multiplicities keyed by irreducible (`(λ, ∅)` for `S_n`).
    pub multiplicities: BTreeMap<DoublePartition, i64>,
}

impl Decomposition {
    pub fn is_true_character(&self) -> bool {
        self.multiplicities.values().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Multiplicities keyed by stable label.
    pub fn stable_labels(&self) -> BTreeMap<IrreducibleLabel, i64> {
        self.multiplicities
            .iter()
            .map(|(dp, &m)| (IrreducibleLabel::of_irrep(dp), m))
            .collect()
    }
}

/// Inner products against the irreducible characters of `W_n` (`A`, `BC`).
pub fn decompose_into_irreducibles(phi: &ClassFunction) -> Result<Decomposition> {
    let group = phi.group();
    let table = character_table(group)?;
    let mut multiplicities = BTreeMap::new();
    for (label, chi) in table.iter() {
        let m = phi.inner_product(chi)?;
        if m.is_zero() {
            continue;
        }
        let value = m
            .is_integer()
            .then(|| m.to_integer().to_i64())
            .flatten()
            .ok_or_else(|| Error::NonIntegralMultiplicity {
                label: label.to_bracket(),
                value: m.to_string(),
            })?;
        multiplicities.insert(label.clone(), value);
    }
    Ok(Decomposition {
        group,
        multiplicities,
    })
}

/// Restriction from `B_n` to `D_n`: both halves of a split pair receive the
/// value of the shared signed cycle type.
pub fn restrict_to_dn(phi: &ClassFunction) -> Result<ClassFunction> {
    if phi.group().family != Family::BC {
        return Err(Error::Unsupported {
            family: phi.group().family.to_string(),
            what: "restriction to D_n from a group other than B_n".into(),
        });
    }
    Ok(ClassFunction::from_fn(Group::d(phi.group().n), |c| {
        phi.value_at_type(c.cycle_type())
    }))
}

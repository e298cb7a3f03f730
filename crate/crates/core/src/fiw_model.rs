//! FI_W#-modules `V = ⊕_a M_W(U_a)`, stored by the characters of the `U_a`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::charpoly::CharacterPolynomial;
use crate::error::{Error, Result};
use crate::hyperoct_char::{character_table, decompose_into_irreducibles, induced_character, m_module_char_poly};
use crate::partitions::{DoublePartition, Partition};
use crate::signed_perm::{Family, Group};
use crate::{ClassFunction, Q};

/// A finitely supported FI_W#-module in type `A` or `BC`, possibly virtual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiwSharpModule {
    family: Family,
    components: BTreeMap<usize, ClassFunction>,
}

fn check_family(family: Family) -> Result<()> {
    if family == Family::D {
        return Err(Error::Unsupported {
            family: "D".into(),
            what: "FI_D# modules (use the B_n-equivariant BC model)".into(),
        });
    }
    Ok(())
}

impl FiwSharpModule {
    pub fn new(family: Family) -> Result<Self> {
        check_family(family)?;
        Ok(Self {
            family,
            components: BTreeMap::new(),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn components(&self) -> &BTreeMap<usize, ClassFunction> {
        &self.components
    }

    pub fn component(&self, a: usize) -> Option<&ClassFunction> {
        self.components.get(&a)
    }

    /// Adds `M_W(U)` for `U` given by its character on `W_a`.
    pub fn add_component(&mut self, chi_u: ClassFunction) -> Result<()> {
        let g = chi_u.group();
        if g.family != self.family {
            return Err(Error::GroupMismatch {
                left: Group::new(self.family, g.n),
                right: g,
            });
        }
        let sum = match self.components.remove(&g.n) {
            Some(old) => &old + &chi_u,
            None => chi_u,
        };
        if !sum.is_zero() {
            self.components.insert(g.n, sum);
        }
        Ok(())
    }

    /// Builds a module from irreducible multiplicities of each `U_a`.
    pub fn from_irreducibles(
        family: Family,
        components: &BTreeMap<usize, BTreeMap<DoublePartition, i64>>,
    ) -> Result<Self> {
        let mut out = Self::new(family)?;
        for (&a, mults) in components {
            let table = character_table(Group::new(family, a))?;
            let mut chi = ClassFunction::zero(Group::new(family, a));
            for (label, &m) in mults {
                let (_, irr) = table
                    .iter()
                    .find(|(l, _)| l == label)
                    .ok_or_else(|| Error::InconsistentLabel(format!("{label} is not an irreducible of W_{a}")))?;
                chi = &chi + &irr.scale(&Q::from_integer(m.into()));
            }
            out.add_component(chi)?;
        }
        Ok(out)
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Largest `a` with `U_a ≠ 0` (0 for the empty module).
    pub fn generation_degree(&self) -> usize {
        self.components.keys().next_back().copied().unwrap_or(0)
    }

    /// `Σ_a χ_{M(U_a)_n}` on `W_n`, each term an induced character with a
    /// trivial second factor.
    pub fn realize(&self, n: usize) -> Result<ClassFunction> {
        let group = Group::new(self.family, n);
        let mut out = ClassFunction::zero(group);
        for (&a, chi) in self.components.range(..=n) {
            let trivial = ClassFunction::constant(Group::new(self.family, n - a), Q::one());
            out = &out + &induced_character(chi, &trivial)?;
        }
        Ok(out)
    }

    /// `Σ_a P^{U_a}`, exact for every `n ≥ 0`.
    pub fn module_char_poly(&self) -> CharacterPolynomial {
        let mut out = CharacterPolynomial::zero();
        for chi in self.components.values() {
            out += &m_module_char_poly(chi).expect("family checked at construction");
        }
        out
    }

    /// `Σ_a C(n,a) dim U_a`.
    pub fn dimension_poly(&self) -> DimensionPolynomial {
        let mut out = DimensionPolynomial::zero();
        for (&a, chi) in &self.components {
            out = out.add(&DimensionPolynomial::binomial(a).scale(&chi.degree()));
        }
        out
    }

    /// Whether every `U_a` is a true character.
    pub fn is_valid(&self) -> bool {
        self.components.values().all(|chi| {
            decompose_into_irreducibles(chi)
                .map(|d| d.is_true_character())
                .unwrap_or(false)
        })
    }

    /// `{"family": "BC", "components": {"2": {"((1),(1))": 1}}}`.
    pub fn to_json(&self) -> Result<Value> {
        let mut comps = Map::new();
        for (&a, chi) in &self.components {
            let dec = decompose_into_irreducibles(chi)?;
            let mut obj = Map::new();
            for (label, m) in &dec.multiplicities {
                let key = match self.family {
                    Family::A => label.plus.to_bracket(),
                    _ => label.to_bracket(),
                };
                obj.insert(key, Value::from(*m));
            }
            comps.insert(a.to_string(), Value::Object(obj));
        }
        let mut top = Map::new();
        top.insert("family".into(), Value::String(self.family.to_string()));
        top.insert("components".into(), Value::Object(comps));
        Ok(Value::Object(top))
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let family: Family = value
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("module needs a \"family\" string".into()))?
            .parse()?;
        let comps = value
            .get("components")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::Parse("module needs a \"components\" object".into()))?;
        let mut parsed = BTreeMap::new();
        for (a, mults) in comps {
            let a: usize = a
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {a:?}")))?;
            let obj = mults
                .as_object()
                .ok_or_else(|| Error::Parse(format!("component {a} must be an object")))?;
            let mut m = BTreeMap::new();
            for (label, count) in obj {
                let dp = match family {
                    Family::A if !label.contains('|') && !label.starts_with("((") => {
                        DoublePartition::new(label.parse::<Partition>()?, Partition::empty())
                    }
                    _ => label.parse::<DoublePartition>()?,
                };
                if dp.size() != a {
                    return Err(Error::InconsistentLabel(format!("{label} has size {} not {a}", dp.size())));
                }
                let count = count
                    .as_i64()
                    .ok_or_else(|| Error::Parse(format!("multiplicity of {label} must be an integer")))?;
                m.insert(dp, count);
            }
            parsed.insert(a, m);
        }
        Self::from_irreducibles(family, &parsed)
    }
}

/// Inductive recovery of the `U_a` from `V_0, ..., V_N`:
/// `U_n = V_n - Σ_{k<n} χ_{M(U_k)_n}`. No validity check.
pub fn recover_virtual(seq: &[ClassFunction], family: Family) -> Result<FiwSharpModule> {
    let mut by_n: BTreeMap<usize, &ClassFunction> = BTreeMap::new();
    for chi in seq {
        let g = chi.group();
        if g.family != family {
            return Err(Error::GroupMismatch {
                left: Group::new(family, g.n),
                right: g,
            });
        }
        by_n.insert(g.n, chi);
    }
    if let Some(&last) = by_n.keys().next_back() {
        if let Some(missing) = (0..=last).find(|n| !by_n.contains_key(n)) {
            return Err(Error::NonConsecutive { missing });
        }
    }
    let mut module = FiwSharpModule::new(family)?;
    for (&n, chi) in &by_n {
        let u = *chi - &module.realize(n)?;
        if !u.is_zero() {
            module.add_component(u)?;
        }
    }
    Ok(module)
}

/// [`recover_virtual`] followed by a check that every `U_a` is a true
/// character.
pub fn recover_from_sequence(seq: &[ClassFunction], family: Family) -> Result<FiwSharpModule> {
    let module = recover_virtual(seq, family)?;
    for (&a, chi) in module.components() {
        let dec = decompose_into_irreducibles(chi).map_err(|e| Error::NotACharacter {
            degree: a,
            reason: e.to_string(),
        })?;
        if let Some((label, m)) = dec.multiplicities.iter().find(|(_, &m)| m < 0) {
            return Err(Error::NotACharacter {
                degree: a,
                reason: format!("{} has multiplicity {m}", label.to_bracket()),
            });
        }
    }
    Ok(module)
}

/// A polynomial in one variable `n`, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DimensionPolynomial {
    coeffs: Vec<Q>,
}

impl DimensionPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn coefficients(&self) -> &[Q] {
        &self.coeffs
    }

    fn trimmed(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// `C(n, a)`.
    pub fn binomial(a: usize) -> Self {
        let mut coeffs = vec![Q::one()];
        for i in 0..a {
            // multiply by (n - i)
            let mut next = vec![Q::zero(); coeffs.len() + 1];
            for (k, c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * Q::from_integer(i.into());
            }
            coeffs = next;
        }
        let denom = Q::from_integer(crate::partitions::factorial(a).into());
        Self::trimmed(coeffs.into_iter().map(|c| c / &denom).collect())
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::trimmed(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
                let b = other.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
                a + b
            })
            .collect();
        Self::trimmed(coeffs)
    }

    pub fn evaluate(&self, n: usize) -> Q {
        let x = Q::from_integer(n.into());
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * &x + c)
    }
}

impl fmt::Display for DimensionPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            first = false;
            let abs = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "n".into(),
                _ => format!("n^{k}"),
            };
            let body = if var.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                var
            } else {
                format!("{abs}*{var}")
            };
            write!(f, "{sep}{body}")?;
        }
        Ok(())
    }
}

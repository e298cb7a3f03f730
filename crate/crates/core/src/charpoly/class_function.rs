use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;
use serde_json::{Map, Value};

use super::format::parse_rational;
use super::CharacterPolynomial;
use crate::error::{Error, Result};
use crate::partitions::SignedCycleType;
use crate::signed_perm::{conjugacy_classes, ClassKey, ConjClass, Group};
use crate::Q;

/// An exact rational-valued function on the conjugacy classes of one group,
/// stored in canonical class order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    group: Group,
    classes: Arc<Vec<ConjClass>>,
    values: Vec<Q>,
}

impl ClassFunction {
    pub fn from_fn(group: Group, f: impl Fn(&ConjClass) -> Q) -> Self {
        let classes = conjugacy_classes(group);
        let values = classes.iter().map(f).collect();
        Self {
            group,
            classes,
            values,
        }
    }

    pub fn try_from_fn(group: Group, f: impl Fn(&ConjClass) -> Result<Q>) -> Result<Self> {
        let classes = conjugacy_classes(group);
        let values = classes.iter().map(f).collect::<Result<Vec<Q>>>()?;
        Ok(Self {
            group,
            classes,
            values,
        })
    }

    pub fn zero(group: Group) -> Self {
        Self::constant(group, Q::zero())
    }

    pub fn constant(group: Group, c: Q) -> Self {
        Self::from_fn(group, |_| c.clone())
    }

    /// Values listed in canonical class order.
    pub fn from_values(group: Group, values: Vec<Q>) -> Result<Self> {
        let classes = conjugacy_classes(group);
        if classes.len() != values.len() {
            return Err(Error::SizeMismatch {
                left: classes.len(),
                right: values.len(),
            });
        }
        Ok(Self {
            group,
            classes,
            values,
        })
    }

    /// Evaluates a character polynomial on every class; both halves of a split
    /// `D_n` pair get the same value.
    pub fn from_polynomial(group: Group, p: &CharacterPolynomial) -> Self {
        Self::from_fn(group, |c| p.evaluate(c.cycle_type()))
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ConjClass, &Q)> {
        self.classes.iter().zip(&self.values)
    }

    pub fn position(&self, key: &ClassKey) -> Option<usize> {
        self.classes.binary_search_by(|c| c.key.cmp(key)).ok()
    }

    pub fn get(&self, key: &ClassKey) -> Option<&Q> {
        self.position(key).map(|i| &self.values[i])
    }

    /// Value on a class.
    ///
    /// # Panics
    /// If `key` is not a class of this group.
    pub fn value(&self, key: &ClassKey) -> Q {
        match self.get(key) {
            Some(v) => v.clone(),
            None => panic!("{key} is not a class of {}", self.group),
        }
    }

    /// Value on the unsplit class of a signed cycle type.
    pub fn value_at_type(&self, t: &SignedCycleType) -> Q {
        self.value(&ClassKey::of_type(t.clone()))
    }

    /// Value at the identity, i.e. the degree of a character.
    pub fn degree(&self) -> Q {
        self.value_at_type(&SignedCycleType::identity(self.group.n))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn map(&self, f: impl Fn(&ConjClass, &Q) -> Q) -> Self {
        Self {
            group: self.group,
            classes: self.classes.clone(),
            values: self.iter().map(|(c, v)| f(c, v)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        self.map(|_, v| v * c)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Q, &Q) -> Q) -> Self {
        assert_eq!(self.group, other.group, "class functions on different groups");
        Self {
            group: self.group,
            classes: self.classes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// `(1/|G|) Σ_c |c| φ(c) ψ(c)`; characters here are rational, so no
    /// conjugation is needed.
    pub fn inner_product(&self, other: &Self) -> Result<Q> {
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group,
                right: other.group,
            });
        }
        let mut total = Q::zero();
        for ((c, a), b) in self.iter().zip(&other.values) {
            total += Q::from_integer(c.size.into()) * a * b;
        }
        Ok(total / Q::from_integer(self.group.order().into()))
    }

    /// `{"3,1|2": "-1", ...}`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (c, v) in self.iter() {
            map.insert(c.key.to_text(), Value::String(v.to_string()));
        }
        Value::Object(map)
    }

    /// Reads the object form of [`to_json`](Self::to_json); every class must
    /// be present exactly once.
    pub fn from_json(group: Group, value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("class function must be a JSON object".into()))?;
        let classes = conjugacy_classes(group);
        let mut values: Vec<Option<Q>> = vec![None; classes.len()];
        for (k, v) in obj {
            let key = ClassKey::parse(k)?;
            let i = classes
                .binary_search_by(|c| c.key.cmp(&key))
                .map_err(|_| Error::Parse(format!("{k:?} is not a class of {group}")))?;
            let q = match v {
                Value::String(s) => parse_rational(s)?,
                Value::Number(n) => parse_rational(&n.to_string())?,
                _ => return Err(Error::Parse(format!("bad value for class {k:?}"))),
            };
            if values[i].replace(q).is_some() {
                return Err(Error::Parse(format!("class {k:?} given twice")));
            }
        }
        let values = values
            .into_iter()
            .zip(classes.iter())
            .map(|(v, c)| v.ok_or_else(|| Error::Parse(format!("missing class {}", c.key))))
            .collect::<Result<Vec<Q>>>()?;
        Ok(Self {
            group,
            classes,
            values,
        })
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;

    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ClassFunction {
    type Output = ClassFunction;

    fn sub(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Pointwise product: the character of a tensor product.
impl Mul for &ClassFunction {
    type Output = ClassFunction;

    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        self.zip_with(rhs, |a, b| a * b)
    }
}

impl Neg for &ClassFunction {
    type Output = ClassFunction;

    fn neg(self) -> ClassFunction {
        self.map(|_, v| -v)
    }
}

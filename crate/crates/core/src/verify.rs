//! Self-check suites: table orthogonality, closed forms against brute-force
//! enumeration, and fit/recovery round-trips on random inputs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charpoly::{fit, fit_default_range, CharacterPolynomial, ClassFunction, Monomial, Var};
use crate::error::{Error, Result};
use crate::fiw_model::{recover_from_sequence, FiwSharpModule};
use crate::hyperoct_char::{
    character_table, free_module_char_poly, induced_character, irr_char_poly, restrict_to_dn,
    IrreducibleLabel,
};
use crate::partitions::{double_partitions_of, partitions_of, DoublePartition};
use crate::signed_perm::{
    brute_induced_character, conjugacy_classes, count_fixed_injections, enumerate_classes,
    is_split_type, Family, Group,
};
use crate::sym_char::SymCharTable;
use crate::{q, Q};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Orthogonality,
    Oracle,
    Roundtrip,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Oracle => "oracle",
            Suite::Roundtrip => "roundtrip",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "orthogonality" => Ok(Suite::Orthogonality),
            "oracle" => Ok(Suite::Oracle),
            "roundtrip" => Ok(Suite::Roundtrip),
            other => Err(Error::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

/// Outcome of one suite: every check is named, failures keep a reason.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub passed: Vec<String>,
    pub failed: Vec<(String, String)>,
}

impl SuiteReport {
    fn check(&mut self, name: String, outcome: Result<std::result::Result<(), String>>) {
        match outcome {
            Ok(Ok(())) => self.passed.push(name),
            Ok(Err(reason)) => self.failed.push((name, reason)),
            Err(e) => self.failed.push((name, e.to_string())),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed.is_empty()
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(left: T, right: T) -> std::result::Result<(), String> {
    if left == right {
        Ok(())
    } else {
        Err(format!("{left:?} != {right:?}"))
    }
}

pub fn run_suite(suite: Suite, max_n: usize, seed: u64) -> SuiteReport {
    match suite {
        Suite::Orthogonality => orthogonality(max_n),
        Suite::Oracle => oracle(max_n),
        Suite::Roundtrip => roundtrip(max_n, seed),
    }
}

/// Gram matrix of a list of class functions equals the identity.
fn orthonormal(chars: &[ClassFunction]) -> Result<std::result::Result<(), String>> {
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate().skip(i) {
            let ip = a.inner_product(b)?;
            let expected = if i == j { Q::one() } else { Q::zero() };
            if ip != expected {
                return Ok(Err(format!("<χ_{i}, χ_{j}> = {ip}")));
            }
        }
    }
    Ok(Ok(()))
}

fn dimension_sum(group: Group, chars: &[ClassFunction]) -> std::result::Result<(), String> {
    let total: Q = chars.iter().map(|c| c.degree() * c.degree()).sum();
    expect_eq(total, Q::from_integer(group.order().into()))
}

/// Irreducible tables of `S_n` (Murnaghan–Nakayama), of `B_n` (the
/// character polynomials), and the restriction norms to `D_n`.
pub fn orthogonality(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport::default();
    for n in 0..=max_n {
        let group = Group::a(n);
        let table = SymCharTable::new(n);
        let chars: Vec<ClassFunction> = partitions_of(n)
            .iter()
            .map(|lam| {
                ClassFunction::from_fn(group, |c| {
                    q(table.value(lam, &c.cycle_type().plus).expect("same size"))
                })
            })
            .collect();
        report.check(format!("S_{n} orthonormal"), orthonormal(&chars));
        report.check(format!("S_{n} dimensions"), Ok(dimension_sum(group, &chars)));

        let group = Group::bc(n);
        let chars: Vec<ClassFunction> = double_partitions_of(n)
            .iter()
            .map(|dp| ClassFunction::from_polynomial(group, &irr_char_poly(&IrreducibleLabel::of_irrep(dp))))
            .collect();
        report.check(format!("B_{n} orthonormal"), orthonormal(&chars));
        report.check(format!("B_{n} dimensions"), Ok(dimension_sum(group, &chars)));

        for (dp, chi) in double_partitions_of(n).iter().zip(&chars) {
            let expected = if n > 0 && dp.plus == dp.minus { q(2) } else { q(1) };
            let outcome = restrict_to_dn(chi)
                .and_then(|r| r.inner_product(&r))
                .map(|norm| expect_eq(norm, expected));
            report.check(format!("D_{n} norm of {}", dp.to_text()), outcome);
        }
    }
    report
}

fn sign_character(group: Group) -> ClassFunction {
    ClassFunction::from_fn(group, |c| {
        let t = c.cycle_type();
        let cycles = t.plus.len() + t.minus.len();
        let parity = (group.n - cycles + t.minus.len()) % 2;
        q(if parity == 0 { 1 } else { -1 })
    })
}

fn regular_character(group: Group) -> ClassFunction {
    let id = crate::partitions::SignedCycleType::identity(group.n);
    ClassFunction::from_fn(group, |c| {
        if c.cycle_type() == &id {
            Q::from_integer(group.order().into())
        } else {
            Q::zero()
        }
    })
}

fn random_class_function(group: Group, rng: &mut ChaCha8Rng) -> ClassFunction {
    let len = conjugacy_classes(group).len();
    let values = (0..len).map(|_| q(rng.gen_range(-3..=3))).collect();
    ClassFunction::from_values(group, values).expect("one value per class")
}

/// Sample inputs for induction checks: trivial, sign, regular and one random
/// virtual class function.
pub fn sample_inputs(group: Group, rng: &mut ChaCha8Rng) -> Vec<(String, ClassFunction)> {
    vec![
        ("trivial".into(), ClassFunction::constant(group, Q::one())),
        ("sign".into(), sign_character(group)),
        ("regular".into(), regular_character(group)),
        ("random".into(), random_class_function(group, rng)),
    ]
}

/// Closed forms checked against enumeration of the group elements.
pub fn oracle(max_n: usize) -> SuiteReport {
    let mut report = SuiteReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for n in 0..=max_n {
        for family in [Family::A, Family::BC, Family::D] {
            let group = Group::new(family, n);
            let outcome = enumerate_classes(group).map(|enumerated| {
                let closed: Vec<_> = conjugacy_classes(group).iter().map(|c| (c.key.clone(), c.size)).collect();
                let brute: Vec<_> = enumerated.iter().map(|c| (c.key.clone(), c.size)).collect();
                expect_eq(closed, brute)
            });
            report.check(format!("{group} classes"), outcome);
        }
        let splits = conjugacy_classes(Group::d(n))
            .iter()
            .filter(|c| is_split_type(c.cycle_type()))
            .count();
        let expected: usize = conjugacy_classes(Group::bc(n))
            .iter()
            .filter(|c| is_split_type(c.cycle_type()))
            .count()
            * 2;
        report.check(format!("D_{n} split pairs"), Ok(expect_eq(splits, expected)));

        for family in [Family::A, Family::BC] {
            for m in 0..=n {
                let inputs = sample_inputs(Group::new(family, m), &mut rng);
                let others = sample_inputs(Group::new(family, n - m), &mut rng);
                for (name_u, u) in &inputs {
                    for (name_v, v) in &others {
                        let outcome = induced_character(u, v).and_then(|fast| {
                            brute_induced_character(u, v).map(|brute| expect_eq(fast, brute))
                        });
                        report.check(
                            format!("{family} induction {name_u}_{m} x {name_v}_{} ", n - m).trim_end().to_string(),
                            outcome,
                        );
                    }
                }
            }
        }

        if n >= 1 {
            let table = character_table(Group::bc(n));
            let outcome = table.map(|table| {
                for (dp, chi) in table.iter() {
                    let poly = ClassFunction::from_polynomial(Group::bc(n), &irr_char_poly(&IrreducibleLabel::of_irrep(dp)));
                    if &poly != chi {
                        return Err(format!("{} differs", dp.to_text()));
                    }
                }
                Ok(())
            });
            report.check(format!("B_{n} polynomial table"), outcome);
        }

        for family in [Family::A, Family::BC, Family::D] {
            for m in 0..=n.min(3) {
                let group = Group::new(family, n);
                let predicted = free_module_char_poly(m, family).at(n);
                let outcome = crate::signed_perm::enumerate_group(n, family).map(|elems| {
                    for w in elems {
                        let key = crate::signed_perm::class_of(&w, group);
                        let count = Q::from_integer(count_fixed_injections(&w, m, family).into());
                        if predicted.value(&key) != count {
                            return Err(format!("{w}: {} != {count}", predicted.value(&key)));
                        }
                    }
                    Ok(())
                });
                report.check(format!("{group} free module M({m})"), outcome);
            }
        }
    }
    report
}

/// A random polynomial of degree at most `degree` with small rational
/// coefficients.
pub fn random_polynomial(degree: usize, rng: &mut ChaCha8Rng) -> CharacterPolynomial {
    let mut out = CharacterPolynomial::zero();
    for _ in 0..rng.gen_range(1..=5) {
        let mut remaining = rng.gen_range(0..=degree);
        let mut powers = Vec::new();
        while remaining > 0 {
            let r = rng.gen_range(1..=remaining);
            let var = if rng.gen_bool(0.5) { Var::x(r) } else { Var::y(r) };
            powers.push((var, 1));
            remaining -= r;
        }
        let coeff = Q::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into());
        out.add_term(Monomial::from_powers(powers), coeff);
    }
    out
}

/// A random true FI#-module generated in degree at most `max_degree`.
pub fn random_module(family: Family, max_degree: usize, rng: &mut ChaCha8Rng) -> Result<FiwSharpModule> {
    let mut components: BTreeMap<usize, BTreeMap<DoublePartition, i64>> = BTreeMap::new();
    for a in 0..=max_degree {
        let labels: Vec<DoublePartition> = match family {
            Family::A => partitions_of(a)
                .into_iter()
                .map(|p| DoublePartition::new(p, Default::default()))
                .collect(),
            _ => double_partitions_of(a),
        };
        let mut mults = BTreeMap::new();
        for label in labels {
            if rng.gen_bool(0.3) {
                mults.insert(label, rng.gen_range(1..=2));
            }
        }
        if !mults.is_empty() {
            components.insert(a, mults);
        }
    }
    FiwSharpModule::from_irreducibles(family, &components)
}

pub const ROUNDTRIP_CASES: usize = 100;

/// `fit ∘ evaluate` and `recover ∘ realize` on random inputs; the degree
/// bounds shrink with `max_n` so that the sampled range stays within it.
pub fn roundtrip(max_n: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fit_degree = (max_n / 2).min(4);
    for case in 0..ROUNDTRIP_CASES {
        let degree = rng.gen_range(0..=fit_degree);
        let poly = random_polynomial(degree, &mut rng);
        let data: Vec<ClassFunction> = fit_default_range(degree)
            .into_iter()
            .map(|n| ClassFunction::from_polynomial(Group::bc(n), &poly))
            .collect();
        let outcome = fit(&data, degree).map(|fitted| expect_eq(fitted, poly));
        report.check(format!("fit case {case} (degree {degree})"), outcome);
    }
    let module_degree = max_n.min(3);
    for case in 0..ROUNDTRIP_CASES {
        let family = if case % 2 == 0 { Family::BC } else { Family::A };
        let outcome = random_module(family, module_degree, &mut rng).and_then(|module| {
            let seq = (0..=module_degree)
                .map(|n| module.realize(n))
                .collect::<Result<Vec<_>>>()?;
            let recovered = recover_from_sequence(&seq, family)?;
            Ok(expect_eq(recovered, module))
        });
        report.check(format!("recover case {case} ({family})"), outcome);
    }
    report
}

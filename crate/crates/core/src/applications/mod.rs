//! Equivariant cohomology of the pure string motion groups and of the
//! complements of the classical reflection arrangements, with the full
//! fit-and-decompose pipeline.

mod arrangement;
mod psigma;
mod quotient;

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

pub use arrangement::{
    build_arrangement, orlik_solomon_basis, os_cohomology_character, os_equivariant_character,
    Arrangement,
};
pub use psigma::{psigma_basis, psigma_cohomology_character, psigma_cohomology_character_on};
pub use quotient::GradedQuotientBasis;

use crate::charpoly::{fit, fit_default_range, CharacterPolynomial, ClassFunction};
use crate::error::{Error, Result};
use crate::fiw_model::{recover_from_sequence, FiwSharpModule};
use crate::signed_perm::Family;
use crate::Q;

/// Largest `n` the trace pipelines accept.
pub const MAX_N: usize = 10;
/// Largest cohomological degree: relations are generated in degree 2 only.
pub const MAX_DEGREE: usize = 2;

fn check_desk_scale(n: usize, m: usize) -> Result<()> {
    if m > MAX_DEGREE {
        return Err(Error::Unsupported {
            family: "any".into(),
            what: format!("cohomological degree {m} > {MAX_DEGREE}"),
        });
    }
    if n > MAX_N {
        return Err(Error::CapExceeded {
            family: "applications".into(),
            n,
            cap: MAX_N,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Source {
    /// Orlik–Solomon algebra of a reflection arrangement.
    Os,
    /// Cohomology of the pure string motion group.
    Psigma,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Os => "os",
            Source::Psigma => "psigma",
        })
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "os" => Ok(Source::Os),
            "psigma" => Ok(Source::Psigma),
            other => Err(Error::Parse(format!("unknown pipeline {other:?}"))),
        }
    }
}

/// The equivariant characters a pipeline fits: `S_n` characters for `A`,
/// `B_n` characters otherwise (for the type `D` arrangement, the `B_n`
/// action on the complement).
pub fn character_sequence(source: Source, family: Family, m: usize, range: &[usize]) -> Result<Vec<ClassFunction>> {
    range
        .iter()
        .map(|&n| match source {
            Source::Os => os_equivariant_character(family, n, m),
            Source::Psigma => psigma_cohomology_character_on(family, n, m),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub source: Source,
    pub family: Family,
    pub m: usize,
    pub degree: usize,
    pub range: Vec<usize>,
    pub polynomial: CharacterPolynomial,
    /// `⊕ M(U_a)` over `A` for family `A`, over `BC` otherwise.
    pub decomposition: FiwSharpModule,
    pub restriction: CharacterPolynomial,
    pub dimensions: Vec<(usize, Q)>,
}

/// Computes the characters over `range` (default `0..=2d`, `d` defaulting to
/// `2m`), fits the character polynomial, recovers the FI#-decomposition and
/// restricts to `S_n`.
pub fn analyze(
    source: Source,
    family: Family,
    m: usize,
    degree: Option<usize>,
    range: Option<Vec<usize>>,
) -> Result<Report> {
    let degree = degree.unwrap_or(2 * m);
    let range = range.unwrap_or_else(|| fit_default_range(degree));
    let data = character_sequence(source, family, m, &range)?;
    let polynomial = fit(&data, degree)?;
    let module_family = match family {
        Family::A => Family::A,
        _ => Family::BC,
    };
    let decomposition = recover_from_sequence(&data, module_family)?;
    let restriction = polynomial.restrict_to_sym();
    let dimensions = data.iter().map(|chi| (chi.group().n, chi.degree())).collect();
    Ok(Report {
        source,
        family,
        m,
        degree,
        range,
        polynomial,
        decomposition,
        restriction,
        dimensions,
    })
}

fn module_summands(module: &FiwSharpModule) -> Result<Vec<(String, i64)>> {
    let json = module.to_json()?;
    let mut out = Vec::new();
    if let Some(comps) = json["components"].as_object() {
        let mut degrees: Vec<(usize, &Value)> = comps
            .iter()
            .map(|(k, v)| (k.parse().unwrap_or(0), v))
            .collect();
        degrees.sort_by_key(|(a, _)| *a);
        for (_, labels) in degrees {
            for (label, m) in labels.as_object().into_iter().flatten() {
                out.push((label.clone(), m.as_i64().unwrap_or(0)));
            }
        }
    }
    Ok(out)
}

impl Report {
    pub fn to_json(&self) -> Result<Value> {
        let mut dims = Map::new();
        for (n, d) in &self.dimensions {
            dims.insert(n.to_string(), Value::String(d.to_string()));
        }
        Ok(json!({
            "source": self.source.to_string(),
            "family": self.family.to_string(),
            "m": self.m,
            "degree": self.degree,
            "range": self.range,
            "polynomial": {
                "binomial": self.polynomial.to_binomial_string(),
                "expanded": self.polynomial.to_string(),
                "terms": self.polynomial.to_json(),
            },
            "decomposition": self.decomposition.to_json()?,
            "restriction": {
                "binomial": self.restriction.to_binomial_string(),
                "terms": self.restriction.to_json(),
            },
            "dimensions": Value::Object(dims),
        }))
    }

    pub fn to_latex(&self) -> Result<String> {
        let sub = match self.decomposition.family() {
            Family::A => "A",
            _ => "BC",
        };
        let summands: Vec<String> = module_summands(&self.decomposition)?
            .into_iter()
            .map(|(label, m)| {
                let base = format!("M_{{{sub}}}\\big({label}\\big)");
                if m == 1 {
                    base
                } else {
                    format!("{base}^{{\\oplus {m}}}")
                }
            })
            .collect();
        let module = if summands.is_empty() {
            "0".to_string()
        } else {
            summands.join(" \\oplus ")
        };
        Ok(format!(
            "\\chi = {}\\\\\nV = {}\\\\\n\\chi|_{{S_n}} = {}\n",
            self.polynomial.to_latex(),
            module,
            self.restriction.to_latex()
        ))
    }
}

//! Exact interpolation of a character polynomial from class-function data.

use num_traits::Zero;

use super::{gen_binom_value, CharacterPolynomial, ClassFunction};
use crate::error::{Error, Result};
use crate::linalg::rref;
use crate::partitions::{double_partitions_up_to, DoublePartition};
use crate::signed_perm::Family;
use crate::Q;

/// The generalized binomials spanning polynomials of degree at most `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitBasis {
    pub degree: usize,
    pub labels: Vec<DoublePartition>,
}

/// Basis of degree `≤ degree`; for `S_n` data only `Y`-free labels are used,
/// since every `Y_r` vanishes there.
pub fn fit_basis(degree: usize, family: Family) -> FitBasis {
    let labels = double_partitions_up_to(degree)
        .into_iter()
        .filter(|dp| family != Family::A || dp.minus.is_empty())
        .collect();
    FitBasis { degree, labels }
}

/// Default `n`-range `0..=2d` for a degree bound `d`.
pub fn fit_default_range(degree: usize) -> Vec<usize> {
    (0..=2 * degree).collect()
}

/// The unique polynomial of degree `≤ degree` agreeing with every supplied
/// class function on every class.
///
/// Rows of the linear system are all classes of all supplied groups, columns
/// the generalized binomials of [`fit_basis`]. Rank deficiency gives
/// [`Error::DegenerateFit`]; an unsolvable system gives
/// [`Error::Inconsistent`].
pub fn fit(data: &[ClassFunction], degree: usize) -> Result<CharacterPolynomial> {
    let family = data
        .first()
        .map(|f| f.group().family)
        .unwrap_or(Family::BC);
    for f in data {
        if f.group().family != family {
            return Err(Error::GroupMismatch {
                left: data[0].group(),
                right: f.group(),
            });
        }
    }
    let basis = fit_basis(degree, family);
    let unknowns = basis.labels.len();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for f in data {
        for (class, value) in f.iter() {
            let t = class.cycle_type();
            let mut row: Vec<Q> = basis
                .labels
                .iter()
                .map(|dp| Q::from_integer(gen_binom_value(&dp.plus, &dp.minus, t).into()))
                .collect();
            row.push(value.clone());
            rows.push(row);
        }
    }
    let pivots = rref(&mut rows);
    if pivots.last() == Some(&unknowns) {
        return Err(Error::Inconsistent { degree });
    }
    if pivots.len() < unknowns {
        return Err(Error::DegenerateFit {
            rank: pivots.len(),
            unknowns,
        });
    }
    let coords: Vec<(DoublePartition, Q)> = basis
        .labels
        .into_iter()
        .zip(rows.iter().map(|r| r[unknowns].clone()))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    Ok(CharacterPolynomial::from_binomial_basis(
        coords.iter().map(|(dp, c)| (dp, c)),
    ))
}

use std::collections::HashMap;

use super::quotient::GradedQuotientBasis;
use super::check_desk_scale;
use crate::charpoly::ClassFunction;
use crate::error::Result;
use crate::hyperoct_char::restrict_to_dn;
use crate::signed_perm::{Family, Group, SignedPermutation};

/// A reflection arrangement, each hyperplane given by its normal vector
/// with first nonzero coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    pub family: Family,
    pub n: usize,
    pub hyperplanes: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
}

impl Arrangement {
    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn position(&self, normal: &[i32]) -> Option<usize> {
        self.index.get(normal).copied()
    }

    /// Index of `w H_k`; hyperplanes are permuted without signs.
    pub fn act(&self, w: &SignedPermutation, k: usize) -> usize {
        let mut image = vec![0i32; self.n];
        for (i, &v) in self.hyperplanes[k].iter().enumerate() {
            if v != 0 {
                let t = w.apply(i as i32 + 1);
                image[t.unsigned_abs() as usize - 1] = v * t.signum();
            }
        }
        canonicalize(&mut image);
        self.index[&image]
    }

    /// Whether three normals span a space of dimension below 3.
    pub fn dependent(&self, i: usize, j: usize, k: usize) -> bool {
        rank(&[
            self.hyperplanes[i].clone(),
            self.hyperplanes[j].clone(),
            self.hyperplanes[k].clone(),
        ]) < 3
    }
}

fn canonicalize(v: &mut [i32]) {
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

fn rank(rows: &[Vec<i32>]) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for k in 0..ncols {
                    m[i][k] = m[i][k] * a - m[r][k] * b;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// `e_i - e_j` (`i < j`) for `A`; also `e_i + e_j` for `D`; also `e_i` for `BC`.
pub fn build_arrangement(family: Family, n: usize) -> Arrangement {
    let unit = |i: usize| {
        let mut v = vec![0i32; n];
        v[i] = 1;
        v
    };
    let mut hyperplanes = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut minus = unit(i);
            minus[j] = -1;
            hyperplanes.push(minus);
            if family != Family::A {
                let mut plus = unit(i);
                plus[j] = 1;
                hyperplanes.push(plus);
            }
        }
    }
    if family == Family::BC {
        hyperplanes.extend((0..n).map(unit));
    }
    let index = hyperplanes
        .iter()
        .enumerate()
        .map(|(i, h)| (h.clone(), i))
        .collect();
    Arrangement {
        family,
        n,
        hyperplanes,
        index,
    }
}

/// Degree-`m` part of the Orlik–Solomon algebra: the exterior algebra on
/// the hyperplanes modulo `∂(e_i e_j e_k) = e_j e_k - e_i e_k + e_i e_j` for
/// every dependent triple.
pub fn orlik_solomon_basis(arr: &Arrangement, m: usize) -> GradedQuotientBasis {
    let mut basis = GradedQuotientBasis::exterior(arr.len(), m);
    if m == 2 {
        let h = arr.len();
        for i in 0..h {
            for j in i + 1..h {
                for k in j + 1..h {
                    if arr.dependent(i, j, k) {
                        basis.add_relation(&[(1, vec![j, k]), (-1, vec![i, k]), (1, vec![i, j])]);
                    }
                }
            }
        }
    }
    basis.finish();
    basis
}

/// The character of the symmetry group of the arrangement (`S_n` for `A`,
/// `B_n` for `BC` and `D`) on `H^m` of the complement.
pub fn os_equivariant_character(family: Family, n: usize, m: usize) -> Result<ClassFunction> {
    check_desk_scale(n, m)?;
    let arr = build_arrangement(family, n);
    let basis = orlik_solomon_basis(&arr, m);
    let group = match family {
        Family::A => Group::a(n),
        _ => Group::bc(n),
    };
    Ok(ClassFunction::from_fn(group, |c| {
        basis.trace(&c.representative(), |w, g| (arr.act(w, g), 1))
    }))
}

/// `H^m` of the complement of the type-`W_n` arrangement as a `W_n`
/// character; for `D` this is the restriction to `D_n` of the
/// `B_n`-equivariant character.
pub fn os_cohomology_character(family: Family, n: usize, m: usize) -> Result<ClassFunction> {
    let chi = os_equivariant_character(family, n, m)?;
    match family {
        Family::D => restrict_to_dn(&chi),
        _ => Ok(chi),
    }
}

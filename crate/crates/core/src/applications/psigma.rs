use super::check_desk_scale;
use super::quotient::GradedQuotientBasis;
use crate::charpoly::ClassFunction;
use crate::error::{Error, Result};
use crate::signed_perm::{Family, Group, SignedPermutation};

/// Index of the generator `α_{i,j}` (0-based, `i ≠ j`).
fn generator(n: usize, i: usize, j: usize) -> usize {
    i * (n - 1) + if j < i { j } else { j - 1 }
}

fn letters(n: usize, g: usize) -> (usize, usize) {
    let i = g / (n - 1);
    let r = g % (n - 1);
    (i, if r < i { r } else { r + 1 })
}

/// `w · α_{i,j} = sign(w(j)) α_{|w(i)|, |w(j)|}`.
fn act(n: usize, w: &SignedPermutation, g: usize) -> (usize, i32) {
    let (i, j) = letters(n, g);
    let wi = w.apply(i as i32 + 1);
    let wj = w.apply(j as i32 + 1);
    let img = generator(n, wi.unsigned_abs() as usize - 1, wj.unsigned_abs() as usize - 1);
    (img, wj.signum())
}

/// Degree-`m` cohomology of the pure string motion group: wedges of the
/// `α_{i,j}` modulo `α_{ij} α_{ji}` and
/// `α_{lj} α_{ji} - α_{lj} α_{li} + α_{ij} α_{li}` for distinct `i, j, l`.
pub fn psigma_basis(n: usize, m: usize) -> GradedQuotientBasis {
    let generators = n * n.saturating_sub(1);
    let mut basis = GradedQuotientBasis::exterior(generators, m);
    if m == 2 {
        let a = |i: usize, j: usize| generator(n, i, j);
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if i < j {
                    basis.add_relation(&[(1, vec![a(i, j), a(j, i)])]);
                }
                for l in 0..n {
                    if l == i || l == j {
                        continue;
                    }
                    basis.add_relation(&[
                        (1, vec![a(l, j), a(j, i)]),
                        (-1, vec![a(l, j), a(l, i)]),
                        (1, vec![a(i, j), a(l, i)]),
                    ]);
                }
            }
        }
    }
    basis.finish();
    basis
}

/// Character of `H^m(PΣ_n; Q)` on `B_n`, or on `S_n` for family `A`.
pub fn psigma_cohomology_character_on(family: Family, n: usize, m: usize) -> Result<ClassFunction> {
    check_desk_scale(n, m)?;
    let group = match family {
        Family::A => Group::a(n),
        Family::BC => Group::bc(n),
        Family::D => {
            return Err(Error::Unsupported {
                family: "D".into(),
                what: "string motion pipeline (the natural action is by B_n)".into(),
            })
        }
    };
    let basis = psigma_basis(n, m);
    Ok(ClassFunction::from_fn(group, |c| {
        basis.trace(&c.representative(), |w, g| act(n, w, g))
    }))
}

/// Character of `H^m(PΣ_n; Q)` on `B_n`.
pub fn psigma_cohomology_character(n: usize, m: usize) -> Result<ClassFunction> {
    psigma_cohomology_character_on(Family::BC, n, m)
}

use std::collections::HashMap;

use num_traits::Zero;

use crate::linalg::{SparseEchelon, SparseRow};
use crate::signed_perm::SignedPermutation;
use crate::Q;

/// Degree-`m` wedge monomials on `num_generators` letters, modulo a span of
/// relations, with the non-pivot monomials of the reduced relation matrix as
/// basis.
#[derive(Clone, Debug)]
pub struct GradedQuotientBasis {
    pub degree: usize,
    pub num_generators: usize,
    /// Sorted index tuples.
    pub monomials: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    pub relations: SparseEchelon,
    /// Monomial indices forming the basis.
    pub basis: Vec<usize>,
}

impl GradedQuotientBasis {
    /// All `degree`-subsets of the generators, no relations yet.
    pub fn exterior(num_generators: usize, degree: usize) -> Self {
        let monomials = subsets(num_generators, degree);
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let relations = SparseEchelon::new(monomials.len());
        let basis = (0..monomials.len()).collect();
        Self {
            degree,
            num_generators,
            monomials,
            index,
            relations,
            basis,
        }
    }

    /// `±` the monomial with the given (unsorted, distinct) factors.
    pub fn signed_monomial(&self, factors: &[usize]) -> Option<(usize, i32)> {
        let mut sorted = factors.to_vec();
        let mut sign = 1;
        // insertion sort, counting transpositions
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        self.index.get(&sorted).map(|&i| (i, sign))
    }

    /// Adds `Σ c_k · (factors_k)`; degenerate monomials (repeated factor)
    /// vanish.
    pub fn add_relation(&mut self, terms: &[(i64, Vec<usize>)]) {
        let mut row = SparseRow::new();
        for (c, factors) in terms {
            if let Some((i, s)) = self.signed_monomial(factors) {
                let slot = row.entry(i).or_insert_with(Q::zero);
                *slot += Q::from_integer((c * s as i64).into());
            }
        }
        row.retain(|_, v| !v.is_zero());
        if !row.is_empty() {
            self.relations.insert(row);
        }
    }

    /// Recomputes the basis after the last relation.
    pub fn finish(&mut self) {
        self.basis = self.relations.free_columns();
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Trace of `w` on the quotient, where `w` sends generator `g` to
    /// `sign · generator`.
    ///
    /// `w` maps basis monomial `k` to `s · e_j`; if `j` is a pivot, `e_j`
    /// equals `-Σ_c a_{jc} e_c` in the quotient, contributing `-s · a_{jk}`.
    pub fn trace<F>(&self, w: &SignedPermutation, act: F) -> Q
    where
        F: Fn(&SignedPermutation, usize) -> (usize, i32),
    {
        let mut total = Q::zero();
        for &k in &self.basis {
            let mut sign = 1i64;
            let mut image = Vec::with_capacity(self.degree);
            for &g in &self.monomials[k] {
                let (h, s) = act(w, g);
                sign *= s as i64;
                image.push(h);
            }
            let Some((j, s)) = self.signed_monomial(&image) else {
                continue;
            };
            let s = sign * s as i64;
            if j == k {
                total += Q::from_integer(s.into());
            } else if let Some(row) = self.relations.row(j) {
                if let Some(a) = row.get(&k) {
                    total -= a * Q::from_integer(s.into());
                }
            }
        }
        total
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    #[test]
    fn exterior_counts() {
        assert_eq!(GradedQuotientBasis::exterior(5, 2).dimension(), 10);
        assert_eq!(GradedQuotientBasis::exterior(5, 0).dimension(), 1);
        assert_eq!(GradedQuotientBasis::exterior(0, 1).dimension(), 0);
    }

    #[test]
    fn signs_of_reordering() {
        let b = GradedQuotientBasis::exterior(3, 2);
        assert_eq!(b.signed_monomial(&[1, 0]), Some((0, -1)));
        assert_eq!(b.signed_monomial(&[0, 0]), None);
    }

    #[test]
    fn trace_with_relation() {
        // Λ² of Q³ modulo e0∧e1 - e1∧e2, with w swapping e0 and e2
        let mut b = GradedQuotientBasis::exterior(3, 2);
        b.add_relation(&[(1, vec![0, 1]), (-1, vec![1, 2])]);
        b.finish();
        assert_eq!(b.dimension(), 2);
        let w = SignedPermutation::new(vec![3, 2, 1]).unwrap();
        let act = |w: &SignedPermutation, g: usize| {
            let v = w.apply(g as i32 + 1);
            (v.unsigned_abs() as usize - 1, v.signum())
        };
        // on Λ²: e0e1 -> e2e1 = -e1e2, e0e2 -> -e0e2, e1e2 -> -e0e1
        // quotient basis {e0e2, e1e2} with e0e1 = e1e2: trace = -1 + (-1)
        assert_eq!(b.trace(&w, act), q(-2));
    }
}

//! Brute-force fold used to cross-check [`super::fold_polynomial`].
//!
//! Two support exponents are merged when an explicit search over shift
//! counts finds `k` with `e_j - e_i = k·χ`. Class labels are found by
//! scanning shifts for the member satisfying the canonical-range predicate.
//! Nothing here calls `canonical_rep`.

use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentPoly};
use crate::manifolds::{theorem1_applicable, ThreeManifold};

use super::{EulerClass, FoldedSW, QuotientLattice};

fn shift(e: &[i64], k: i64, chi: &[i64]) -> Option<Vec<i64>> {
    e.iter()
        .zip(chi)
        .map(|(a, c)| k.checked_mul(*c).and_then(|kc| a.checked_add(kc)))
        .collect()
}

fn find_root(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

pub fn fold_polynomial_bruteforce(p: &LaurentPoly, chi: &EulerClass) -> Result<LaurentPoly> {
    p.basis().check_same(chi.basis())?;
    let chi = chi.vector();
    let support: Vec<(&Exponent, i64)> = p.terms().collect();
    if support.is_empty() {
        return Ok(LaurentPoly::zero(p.basis()));
    }

    let rank = p.basis().rank();
    let width = (0..rank)
        .map(|j| {
            let lo = support.iter().map(|(e, _)| e[j]).min().unwrap_or(0);
            let hi = support.iter().map(|(e, _)| e[j]).max().unwrap_or(0);
            hi.saturating_sub(lo)
        })
        .max()
        .unwrap_or(0);
    let min_step = chi
        .iter()
        .filter(|&&c| c != 0)
        .map(|c| c.unsigned_abs())
        .min()
        .expect("nonzero Euler class") as i64;
    let bound = width / min_step + 1;

    let n = support.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            let same_coset = (-bound..=bound)
                .any(|k| shift(support[i].0, k, chi).as_deref() == Some(&support[j].0[..]));
            if same_coset {
                let (ri, rj) = (find_root(&mut parent, i), find_root(&mut parent, j));
                parent[rj] = ri;
            }
        }
    }

    let pivot = chi.iter().position(|&c| c != 0).expect("nonzero Euler class");
    let modulus = chi[pivot].abs();
    let mut out = Vec::new();
    for i in 0..n {
        if find_root(&mut parent, i) != i {
            continue;
        }
        let mut total = 0i64;
        for (j, &(_, c)) in support.iter().enumerate() {
            if find_root(&mut parent, j) == i {
                total = total
                    .checked_add(c)
                    .ok_or(Error::Overflow("bruteforce fold"))?;
            }
        }
        let e = support[i].0;
        let reach = e[pivot].abs() / modulus + 1;
        let label = (-reach..=reach)
            .filter_map(|k| shift(e, k, chi))
            .find(|v| (0..modulus).contains(&v[pivot]))
            .expect("a canonical member within reach");
        out.push((label, total));
    }
    LaurentPoly::from_terms(p.basis(), out)
}

/// Independent evaluation of [`super::fold`] with the same hypothesis checks.
pub fn fold_bruteforce(m: &ThreeManifold, chi: &Exponent) -> Result<FoldedSW> {
    theorem1_applicable(m, chi)?.into_result()?;
    let class = EulerClass::new(&m.basis, chi.clone())?;
    let poly = fold_polynomial_bruteforce(&m.sw3, &class)?;
    Ok(FoldedSW::new(
        QuotientLattice::new(&class)?,
        poly,
        m.name.clone(),
    ))
}

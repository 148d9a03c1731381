//! Seiberg-Witten polynomials of circle bundles over closed surfaces.
//!
//! Two routes: fold `(t - t^-1)^(2g-2)` by `χ = n` directly, or evaluate the
//! closed-form binomial double sum. They agree up to one overall sign.

use crate::error::{Error, Result};
use crate::laurent::{Exponent, LaurentPoly};
use crate::manifolds::surface_times_circle;

use super::{fold, EulerClass, FoldedSW, QuotientLattice};

/// `C(p, q)`, taken to be zero for `q < 0` or `q > p`.
pub fn extended_binomial(p: i64, q: i64) -> Result<i64> {
    if p < 0 || q < 0 || q > p {
        return Ok(0);
    }
    let q = q.min(p - q);
    let mut acc: i128 = 1;
    for i in 0..q {
        // acc * (p - i) is divisible by i + 1 after each step
        acc = acc
            .checked_mul(i128::from(p - i))
            .ok_or(Error::Overflow("binomial coefficient"))?
            / i128::from(i + 1);
    }
    i64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient"))
}

fn check_args(genus: i64, n: i64) -> Result<()> {
    if genus < 1 {
        return Err(Error::Domain(format!("genus must be at least 1, got {genus}")));
    }
    if n == 0 {
        return Err(Error::TorsionEulerClass);
    }
    Ok(())
}

/// Folds the polynomial of `Σ_g × S¹` by the Euler number `n`.
pub fn circle_bundle_sw_direct(genus: i64, n: i64) -> Result<FoldedSW> {
    check_args(genus, n)?;
    let base = surface_times_circle(genus)?;
    let mut folded = fold(&base, &Exponent::new(vec![n]))?;
    folded.source = format!("circle bundle over S{genus}, euler {n}");
    Ok(folded)
}

/// The closed-form double sum exactly as written, one term per residue
/// index `i`:
///
/// ```text
/// sign(n) Σ_{i=0}^{m-1} Σ_{k=-(2g-2)}^{2g-2} (-1)^((g-1)+i+k·m) C(2g-2, (g-1)+i+k·m) · t^(s·i)
/// ```
///
/// with `m = |n|/2, s = 2` for even `n` and `m = |n|, s = 1` for odd `n`.
pub fn closed_form_literal(genus: i64, n: i64) -> Result<LaurentPoly> {
    let coeffs = closed_form_coefficients(genus, n)?;
    let step = if n % 2 == 0 { 2 } else { 1 };
    let basis = surface_times_circle(genus)?.basis;
    LaurentPoly::from_terms(&basis, coeffs.into_iter().map(|(i, c)| (vec![step * i], c)))
}

/// `(i, coefficient)` pairs of the double sum, sign prefactor included.
fn closed_form_coefficients(genus: i64, n: i64) -> Result<Vec<(i64, i64)>> {
    check_args(genus, n)?;
    let top = 2 * genus - 2;
    let half = genus - 1;
    let m = if n % 2 == 0 { n.abs() / 2 } else { n.abs() };
    let sign = n.signum();
    let mut out = Vec::new();
    for i in 0..m {
        let mut total = 0i64;
        for k in -top..=top {
            let q = half + i + k * m;
            let c = extended_binomial(top, q)?;
            let term = if q.rem_euclid(2) == 0 { c } else { -c };
            total = total
                .checked_add(term)
                .ok_or(Error::Overflow("closed-form sum"))?;
        }
        out.push((i, sign * total));
    }
    Ok(out)
}

/// Closed-form polynomial placed in the same coset labelling as
/// [`circle_bundle_sw_direct`]: the residue index `i` is the class of
/// `t^(2i)` mod `n`. For odd `n` the literal sum writes this class as `t^i`
/// (see [`closed_form_literal`]); 2 is invertible mod `n`, so the relabelling
/// is a bijection.
pub fn circle_bundle_sw_closed_form(genus: i64, n: i64) -> Result<FoldedSW> {
    let coeffs = closed_form_coefficients(genus, n)?;
    let basis = surface_times_circle(genus)?.basis;
    let q = QuotientLattice::new(&EulerClass::new(&basis, vec![n])?)?;
    let mut terms = Vec::with_capacity(coeffs.len());
    for (i, c) in coeffs {
        terms.push((q.canonical_rep(&Exponent::new(vec![2 * i]))?, c));
    }
    let poly = LaurentPoly::from_terms(&basis, terms)?;
    Ok(FoldedSW::new(
        q,
        poly,
        format!("circle bundle over S{genus}, euler {n} (closed form)"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fold::equal_up_to_sign;

    fn text(f: &FoldedSW) -> String {
        f.poly().to_text()
    }

    #[test]
    fn binomials() {
        assert_eq!(extended_binomial(4, 2).unwrap(), 6);
        assert_eq!(extended_binomial(0, 0).unwrap(), 1);
        assert_eq!(extended_binomial(4, -1).unwrap(), 0);
        assert_eq!(extended_binomial(4, 5).unwrap(), 0);
        assert_eq!(extended_binomial(60, 30).unwrap(), 118264581564861424);
    }

    #[test]
    fn direct_spot_values() {
        assert_eq!(text(&circle_bundle_sw_direct(2, 2).unwrap()), "0");
        assert_eq!(text(&circle_bundle_sw_direct(2, 4).unwrap()), "-2 + 2*t^2");
        assert_eq!(text(&circle_bundle_sw_direct(2, 3).unwrap()), "-2 + t + t^2");
        assert_eq!(text(&circle_bundle_sw_direct(2, -3).unwrap()), "-2 + t + t^2");
        assert_eq!(
            circle_bundle_sw_direct(2, 0).unwrap_err(),
            Error::TorsionEulerClass
        );
    }

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(text(&circle_bundle_sw_closed_form(2, 2).unwrap()), "0");
        assert_eq!(text(&circle_bundle_sw_closed_form(2, 4).unwrap()), "-2 + 2*t^2");
        assert_eq!(text(&circle_bundle_sw_closed_form(2, -4).unwrap()), "2 - 2*t^2");
        assert_eq!(text(&circle_bundle_sw_closed_form(2, 3).unwrap()), "-2 + t + t^2");
        for n in [1, 2, 5, 10] {
            assert_eq!(text(&circle_bundle_sw_closed_form(1, n).unwrap()), "1");
        }
        // sign(n) prefactor
        for n in [-7, -1] {
            assert_eq!(text(&circle_bundle_sw_closed_form(1, n).unwrap()), "-1");
        }
        assert_eq!(
            circle_bundle_sw_closed_form(2, 0).unwrap_err(),
            Error::TorsionEulerClass
        );
    }

    #[test]
    fn odd_euler_number_relabels() {
        // (t - 1/t)^4 folded mod 5 puts -4 at classes 2 and 3; the literal
        // sum writes the same values against t^i with 2i ≡ class.
        assert_eq!(
            text(&circle_bundle_sw_direct(3, 5).unwrap()),
            "6 + t - 4*t^2 - 4*t^3 + t^4"
        );
        assert_eq!(
            closed_form_literal(3, 5).unwrap().to_text(),
            "6 - 4*t + t^2 + t^3 - 4*t^4"
        );
        assert!(equal_up_to_sign(
            &circle_bundle_sw_direct(3, 5).unwrap(),
            &circle_bundle_sw_closed_form(3, 5).unwrap()
        )
        .unwrap());
    }

    #[test]
    fn routes_agree() {
        for g in 1..=5 {
            for n in (-10..=10).filter(|&n| n != 0) {
                let d = circle_bundle_sw_direct(g, n).unwrap();
                let c = circle_bundle_sw_closed_form(g, n).unwrap();
                assert!(equal_up_to_sign(&d, &c).unwrap(), "g={g} n={n}");
            }
        }
    }
}

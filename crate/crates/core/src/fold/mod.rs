//! Folding a 3-dimensional Seiberg-Witten polynomial by an Euler class.
//!
//! For a free circle action with non-torsion Euler class `χ` on a 4-manifold
//! `X` over `M`, the 4-dimensional invariant of a pulled-back spin^c class is
//! the sum of the 3-dimensional invariants over the coset `ξ + Zχ`. On
//! polynomials this adds together every coefficient whose exponent vectors
//! differ by a multiple of `χ`.
//!
//! Cosets are labelled by a canonical representative: with `p` the first
//! nonzero coordinate of `χ` (sign-normalized so `χ[p] > 0`), the
//! representative is the unique member with `0 <= e[p] < χ[p]`.

mod bundle;
mod oracle;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::{parse_linear_form, Basis, Exponent, LaurentPoly};
use crate::manifolds::{theorem1_applicable, ThreeManifold};

pub use bundle::{
    circle_bundle_sw_closed_form, circle_bundle_sw_direct, closed_form_literal,
    extended_binomial,
};
pub use oracle::{fold_bruteforce, fold_polynomial_bruteforce};

/// A nonzero class in the free part of `H²(M)`, written in the exponent lattice.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EulerClass {
    basis: Basis,
    chi: Exponent,
}

impl EulerClass {
    pub fn new(basis: &Basis, chi: impl Into<Exponent>) -> Result<Self> {
        let chi = chi.into();
        basis.check(&chi)?;
        if chi.is_zero() {
            return Err(Error::TorsionEulerClass);
        }
        Ok(EulerClass {
            basis: basis.clone(),
            chi,
        })
    }

    /// Parses `"4*m1"`, `"-1*m1 + 2*m2"` and the like.
    pub fn parse(text: &str, basis: &Basis) -> Result<Self> {
        Self::new(basis, parse_linear_form(text, basis)?)
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn vector(&self) -> &Exponent {
        &self.chi
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for EulerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &c) in self.basis.names().iter().zip(self.chi.iter()) {
            if c == 0 {
                continue;
            }
            match (first, c < 0) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            write!(f, "{}*{name}", c.unsigned_abs())?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The quotient `Z^r / Zχ` with a sign-normalized generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientLattice {
    chi: EulerClass,
    pivot: usize,
}

impl QuotientLattice {
    pub fn new(chi: &EulerClass) -> Result<Self> {
        let pivot = chi
            .chi
            .iter()
            .position(|&x| x != 0)
            .expect("Euler class is nonzero");
        let normalized = if chi.chi[pivot] < 0 {
            EulerClass {
                basis: chi.basis.clone(),
                chi: chi.chi.checked_neg()?,
            }
        } else {
            chi.clone()
        };
        Ok(QuotientLattice {
            chi: normalized,
            pivot,
        })
    }

    pub fn basis(&self) -> &Basis {
        &self.chi.basis
    }

    /// The generator with positive pivot entry.
    pub fn generator(&self) -> &EulerClass {
        &self.chi
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// `χ[pivot]`, always positive.
    pub fn modulus(&self) -> i64 {
        self.chi.chi[self.pivot]
    }

    /// The member of `e + Zχ` whose pivot coordinate lies in `[0, χ[pivot])`.
    pub fn canonical_rep(&self, e: &Exponent) -> Result<Exponent> {
        self.chi.basis.check(e)?;
        let k = e[self.pivot].div_euclid(self.modulus());
        e.checked_sub_multiple(k, &self.chi.chi)
    }

    pub fn is_canonical(&self, e: &Exponent) -> bool {
        (0..self.modulus()).contains(&e[self.pivot])
    }
}

/// A 4-dimensional Seiberg-Witten polynomial indexed by coset representatives.
///
/// This is a result type: it deliberately has no arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedSW {
    quotient: QuotientLattice,
    poly: LaurentPoly,
    source: String,
}

impl FoldedSW {
    pub(crate) fn new(quotient: QuotientLattice, poly: LaurentPoly, source: String) -> Self {
        debug_assert!(poly.support().all(|e| quotient.is_canonical(e)));
        FoldedSW {
            quotient,
            poly,
            source,
        }
    }

    pub fn quotient(&self) -> &QuotientLattice {
        &self.quotient
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn euler_class(&self) -> &EulerClass {
        self.quotient.generator()
    }

    pub fn to_text(&self) -> String {
        self.poly.to_text()
    }
}

/// Sums coefficients of `p` over cosets of `Zχ`.
pub fn fold_polynomial(p: &LaurentPoly, q: &QuotientLattice) -> Result<LaurentPoly> {
    p.basis().check_same(q.basis())?;
    let mut classes: BTreeMap<Exponent, i64> = BTreeMap::new();
    for (e, c) in p.terms() {
        let slot = classes.entry(q.canonical_rep(e)?).or_insert(0);
        *slot = slot
            .checked_add(c)
            .ok_or(Error::Overflow("fold accumulation"))?;
    }
    LaurentPoly::from_terms(p.basis(), classes)
}

/// SW⁴ of the circle bundle over `m` with Euler class `chi`.
///
/// Fails with [`Error::TorsionEulerClass`] for `chi = 0` (see
/// [`fold_or_product`]) and with [`Error::Hypothesis`] when `b1(m) - 1 < 2`.
pub fn fold(m: &ThreeManifold, chi: &Exponent) -> Result<FoldedSW> {
    theorem1_applicable(m, chi)?.into_result()?;
    let q = QuotientLattice::new(&EulerClass::new(&m.basis, chi.clone())?)?;
    let poly = fold_polynomial(&m.sw3, &q)?;
    Ok(FoldedSW::new(q, poly, m.name.clone()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FoldOutcome {
    Folded(FoldedSW),
    /// `χ = 0`: the total space is `M × S¹` and SW⁴ equals SW³.
    Product(LaurentPoly),
}

pub fn fold_or_product(m: &ThreeManifold, chi: &Exponent) -> Result<FoldOutcome> {
    match fold(m, chi) {
        Ok(f) => Ok(FoldOutcome::Folded(f)),
        Err(Error::TorsionEulerClass) => Ok(FoldOutcome::Product(m.sw3.clone())),
        Err(e) => Err(e),
    }
}

/// Whether `canonical_rep` is injective on the support of `p`.
pub fn is_injective_on(p: &LaurentPoly, q: &QuotientLattice) -> Result<bool> {
    let mut seen = std::collections::BTreeSet::new();
    for e in p.support() {
        if !seen.insert(q.canonical_rep(e)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff no two support exponents of `SW³(m)` share a coset of `Zχ`.
pub fn is_injective_fold(m: &ThreeManifold, chi: &Exponent) -> Result<bool> {
    let q = QuotientLattice::new(&EulerClass::new(&m.basis, chi.clone())?)?;
    is_injective_on(&m.sw3, &q)
}

/// Equality of folded polynomials up to one overall sign.
pub fn equal_up_to_sign(a: &FoldedSW, b: &FoldedSW) -> Result<bool> {
    if a.quotient != b.quotient {
        return Err(Error::BasisMismatch {
            left: format!("{} mod {}", a.quotient.basis(), a.euler_class()),
            right: format!("{} mod {}", b.quotient.basis(), b.euler_class()),
        });
    }
    Ok(a.poly == b.poly || a.poly == b.poly.negate()?)
}

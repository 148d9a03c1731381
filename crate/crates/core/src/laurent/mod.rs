//! Sparse multivariable Laurent polynomials with exact integer coefficients.
//!
//! A polynomial lives over a [`Basis`] of named variables; each term is an
//! integer coefficient attached to an [`Exponent`] vector in `Z^rank`. Terms
//! are kept in a `BTreeMap`, so iteration and text output follow the
//! lexicographic order of exponent vectors (first variable most significant).
//!
//! All arithmetic is checked: an overflowing coefficient or exponent is
//! reported as [`Error::Overflow`] rather than wrapping.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use parse::parse_linear_form;

/// Ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Basis {
    names: Arc<[String]>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Basis {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidBasis("a basis needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidBasis(format!("`{name}` is not an identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidBasis(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Basis { names: names.into() })
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable {
                name: name.to_string(),
                basis: self.to_string(),
            })
    }

    /// The exponent vector of the variable `name` (a unit vector).
    pub fn unit(&self, name: &str) -> Result<Exponent> {
        let i = self.index_of(name)?;
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Ok(Exponent(v))
    }

    pub fn zero_exponent(&self) -> Exponent {
        Exponent(vec![0; self.rank()])
    }

    pub(crate) fn check(&self, e: &Exponent) -> Result<()> {
        if e.len() != self.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                found: e.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_same(&self, other: &Basis) -> Result<()> {
        if self != other {
            return Err(Error::BasisMismatch {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(", "))
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Basis({self})")
    }
}

/// Integer exponent vector; with a basis it names a monomial, and in the
/// Seiberg-Witten setting a spin^c structure relative to a base point.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Exponent(Vec<i64>);

impl Exponent {
    pub fn new(entries: Vec<i64>) -> Self {
        Exponent(entries)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    pub fn checked_add(&self, other: &Exponent) -> Result<Exponent> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("exponent addition")))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }

    pub fn checked_neg(&self) -> Result<Exponent> {
        self.0
            .iter()
            .map(|a| a.checked_neg().ok_or(Error::Overflow("exponent negation")))
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }

    /// `self - k * other`
    pub fn checked_sub_multiple(&self, k: i64, other: &Exponent) -> Result<Exponent> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| {
                k.checked_mul(*b)
                    .and_then(|kb| a.checked_sub(kb))
                    .ok_or(Error::Overflow("exponent shift"))
            })
            .collect::<Result<Vec<_>>>()
            .map(Exponent)
    }
}

impl Deref for Exponent {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for Exponent {
    fn from(v: Vec<i64>) -> Self {
        Exponent(v)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

fn accumulate(terms: &mut BTreeMap<Exponent, i64>, exp: Exponent, coeff: i64) -> Result<()> {
    if coeff == 0 {
        return Ok(());
    }
    let slot = terms.entry(exp).or_insert(0);
    *slot = slot
        .checked_add(coeff)
        .ok_or(Error::Overflow("coefficient addition"))?;
    Ok(())
}

/// Sparse Laurent polynomial with integer coefficients over a [`Basis`].
///
/// Invariants: no stored coefficient is zero and every exponent vector has
/// the basis rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    basis: Basis,
    terms: BTreeMap<Exponent, i64>,
}

impl LaurentPoly {
    pub fn zero(basis: &Basis) -> Self {
        LaurentPoly {
            basis: basis.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: &Basis) -> Self {
        Self::constant(basis, 1)
    }

    pub fn constant(basis: &Basis, c: i64) -> Self {
        let mut p = Self::zero(basis);
        if c != 0 {
            p.terms.insert(basis.zero_exponent(), c);
        }
        p
    }

    pub fn monomial(basis: &Basis, coeff: i64, exp: impl Into<Exponent>) -> Result<Self> {
        let exp = exp.into();
        basis.check(&exp)?;
        let mut p = Self::zero(basis);
        if coeff != 0 {
            p.terms.insert(exp, coeff);
        }
        Ok(p)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// repeated exponents and dropping zeros.
    pub fn from_terms<I, E>(basis: &Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, i64)>,
        E: Into<Exponent>,
    {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let e = e.into();
            basis.check(&e)?;
            accumulate(&mut map, e, c)?;
        }
        Ok(Self::from_map(basis, map))
    }

    fn from_map(basis: &Basis, mut terms: BTreeMap<Exponent, i64>) -> Self {
        terms.retain(|_, c| *c != 0);
        LaurentPoly {
            basis: basis.clone(),
            terms,
        }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> i64 {
        self.terms
            .get(&Exponent(exp.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    /// Terms in canonical (lexicographic) order.
    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Exponent, i64)> + '_ {
        self.terms.iter().map(|(e, c)| (e, *c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> + '_ {
        self.terms.keys()
    }

    /// Coefficients sorted ascending, with multiplicity.
    pub fn coefficient_multiset(&self) -> Vec<i64> {
        let mut cs: Vec<i64> = self.terms.values().copied().collect();
        cs.sort_unstable();
        cs
    }

    pub fn combine(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.basis.check_same(&other.basis)?;
        let mut map = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut map, e.clone(), *c)?;
        }
        Ok(Self::from_map(&self.basis, map))
    }

    pub fn negate(&self) -> Result<LaurentPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                c.checked_neg()
                    .map(|c| (e.clone(), c))
                    .ok_or(Error::Overflow("coefficient negation"))
            })
            .collect::<Result<_>>()?;
        Ok(LaurentPoly {
            basis: self.basis.clone(),
            terms,
        })
    }

    pub fn subtract(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.combine(&other.negate()?)
    }

    pub fn multiply(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.basis.check_same(&other.basis)?;
        let mut map = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let c = ca
                    .checked_mul(*cb)
                    .ok_or(Error::Overflow("coefficient multiplication"))?;
                accumulate(&mut map, ea.checked_add(eb)?, c)?;
            }
        }
        Ok(Self::from_map(&self.basis, map))
    }

    pub fn power(&self, k: i64) -> Result<LaurentPoly> {
        if k < 0 {
            return Err(Error::Domain(format!(
                "negative power {k} of a polynomial is not defined"
            )));
        }
        let mut acc = Self::one(&self.basis);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(acc)
    }

    /// Inverts every variable: the term `c * t^e` becomes `c * t^-e`.
    pub fn conjugate(&self) -> Result<LaurentPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((e.checked_neg()?, *c)))
            .collect::<Result<_>>()?;
        Ok(LaurentPoly {
            basis: self.basis.clone(),
            terms,
        })
    }

    /// Substitutes every source variable by a monomial of `target`: the
    /// exponent `e` maps to `sum_i e[i] * images[i]`. Terms that collide are
    /// summed.
    pub fn reindex(&self, target: &Basis, images: &[Exponent]) -> Result<LaurentPoly> {
        if images.len() != self.basis.rank() {
            return Err(Error::LengthMismatch {
                expected: self.basis.rank(),
                found: images.len(),
            });
        }
        for img in images {
            target.check(img)?;
        }
        let mut map = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut out = vec![0i64; target.rank()];
            for (&ei, img) in e.iter().zip(images) {
                for (o, &x) in out.iter_mut().zip(img.iter()) {
                    *o = ei
                        .checked_mul(x)
                        .and_then(|v| o.checked_add(v))
                        .ok_or(Error::Overflow("reindex"))?;
                }
            }
            accumulate(&mut map, Exponent(out), *c)?;
        }
        Ok(Self::from_map(target, map))
    }

    /// Value at the point where every variable equals 1.
    pub fn eval_ones(&self) -> Result<i64> {
        self.terms.values().try_fold(0i64, |acc, c| {
            acc.checked_add(*c).ok_or(Error::Overflow("evaluation at 1"))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            e.checked_neg()
                .map(|ne| self.terms.get(&ne) == Some(c))
                .unwrap_or(false)
        })
    }

    /// Parses the canonical text grammar, e.g. `"-3*m2^-2 + 9"`.
    pub fn from_text(s: &str, basis: &Basis) -> Result<LaurentPoly> {
        parse::parse_poly(s, basis)
    }

    /// Deterministic canonical text (terms in lexicographic exponent order).
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, names: &[String], e: &Exponent) -> fmt::Result {
    let mut first = true;
    for (name, &x) in names.iter().zip(e.iter()) {
        if x == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if x == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{x}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, &c)) in self.terms.iter().enumerate() {
            let neg = c < 0;
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.unsigned_abs();
            if e.is_zero() {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, self.basis.names(), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.basis, self)
    }
}

//! Alexander polynomials from Seifert matrices and the built-in knot table.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::laurent::{Basis, Exponent, LaurentPoly};

/// Largest Seifert matrix accepted; the determinant expansion is exponential in the size.
pub const MAX_SEIFERT_SIZE: usize = 16;

/// The one-variable basis `t` used for every Alexander polynomial.
pub fn alexander_basis() -> Basis {
    Basis::new(["t"]).expect("static basis")
}

/// Square integer matrix `V` with `det(V - V^T) = ±1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl SeifertMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let size = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != size {
                return Err(Error::NonSquare {
                    row,
                    len: r.len(),
                    size,
                });
            }
        }
        if size > MAX_SEIFERT_SIZE {
            return Err(Error::Domain(format!(
                "Seifert matrix of size {size} exceeds the supported maximum {MAX_SEIFERT_SIZE}"
            )));
        }
        let m = SeifertMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        };
        let det = m.intersection_determinant()?;
        if det != 1 && det != -1 {
            return Err(Error::NotKnotSeifert { det });
        }
        Ok(m)
    }

    /// The unknot: the empty matrix.
    pub fn empty() -> Self {
        SeifertMatrix {
            size: 0,
            entries: Vec::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.size.max(1))
            .take(self.size)
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// `det(V - V^T)` by fraction-free (Bareiss) elimination.
    pub fn intersection_determinant(&self) -> Result<i64> {
        let n = self.size;
        let mut a: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i128::from(self.get(i, j)) - i128::from(self.get(j, i)))
                    .collect()
            })
            .collect();
        let overflow = || Error::Overflow("Seifert determinant");
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if a[k][k] == 0 {
                match (k + 1..n).find(|&r| a[r][k] != 0) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i][j]
                        .checked_mul(a[k][k])
                        .and_then(|x| a[i][k].checked_mul(a[k][j]).and_then(|y| x.checked_sub(y)))
                        .ok_or_else(overflow)?;
                    a[i][j] = num / prev;
                }
            }
            prev = a[k][k];
        }
        let det = if n == 0 { 1 } else { sign * a[n - 1][n - 1] };
        i64::try_from(det).map_err(|_| overflow())
    }
}

/// Determinant of a square matrix of polynomials, expanding over column subsets.
fn poly_determinant(basis: &Basis, m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = m.len();
    // partial[mask]: signed sum over bijections from the first popcount(mask) rows onto mask
    let mut partial: Vec<Option<LaurentPoly>> = vec![None; 1 << n];
    partial[0] = Some(LaurentPoly::one(basis));
    for mask in 0usize..(1 << n) {
        let Some(acc) = partial[mask].take() else {
            continue;
        };
        let row = mask.count_ones() as usize;
        if row == n {
            partial[mask] = Some(acc);
            continue;
        }
        for (col, entry) in m[row].iter().enumerate() {
            if mask & (1 << col) != 0 || entry.is_zero() {
                continue;
            }
            let inversions = (mask >> (col + 1)).count_ones();
            let mut term = acc.multiply(entry)?;
            if inversions % 2 == 1 {
                term = term.negate()?;
            }
            let next = mask | (1 << col);
            partial[next] = Some(match partial[next].take() {
                Some(p) => p.combine(&term)?,
                None => term,
            });
        }
    }
    Ok(partial[(1 << n) - 1]
        .take()
        .unwrap_or_else(|| LaurentPoly::zero(basis)))
}

/// Symmetrized Alexander polynomial `det(tV - V^T)`, shifted to be invariant
/// under `t -> 1/t` and signed so that its value at `t = 1` is `+1`.
pub fn alexander_from_seifert(v: &SeifertMatrix) -> Result<LaurentPoly> {
    let basis = alexander_basis();
    let t = LaurentPoly::monomial(&basis, 1, vec![1])?;
    let n = v.size();
    let mut m = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let entry = LaurentPoly::constant(&basis, v.get(i, j))
                .multiply(&t)?
                .subtract(&LaurentPoly::constant(&basis, v.get(j, i)))?;
            row.push(entry);
        }
        m.push(row);
    }
    let det = poly_determinant(&basis, &m)?;
    normalize_alexander(&det)
}

/// Shifts a one-variable polynomial to its symmetric position and fixes the
/// sign so that it evaluates to `+1` at `t = 1`.
fn normalize_alexander(p: &LaurentPoly) -> Result<LaurentPoly> {
    let (lo, hi) = match (p.support().next(), p.support().last()) {
        (Some(lo), Some(hi)) => (lo[0], hi[0]),
        _ => return Err(Error::InvalidAlexander("polynomial is zero".into())),
    };
    let span = hi - lo;
    if span % 2 != 0 {
        return Err(Error::InvalidAlexander(format!(
            "degree span {span} is odd; no symmetric representative"
        )));
    }
    let shift = -(lo + span / 2);
    let shifted = p.multiply(&LaurentPoly::monomial(p.basis(), 1, vec![shift])?)?;
    if !shifted.is_symmetric() {
        return Err(Error::InvalidAlexander(format!(
            "`{shifted}` is not symmetric under t -> 1/t"
        )));
    }
    match shifted.eval_ones()? {
        1 => Ok(shifted),
        -1 => shifted.negate(),
        v => Err(Error::InvalidAlexander(format!("value at t = 1 is {v}, expected ±1"))),
    }
}

/// Outcome of [`validate_alexander`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderCheck {
    pub one_variable: bool,
    pub symmetric: bool,
    pub value_at_one: i64,
}

impl AlexanderCheck {
    pub fn unit_at_one(&self) -> bool {
        self.value_at_one == 1 || self.value_at_one == -1
    }

    pub fn passes(&self) -> bool {
        self.one_variable && self.symmetric && self.unit_at_one()
    }
}

/// Checks a user-supplied polynomial for symmetry and `Δ(1) = ±1`.
pub fn validate_alexander(p: &LaurentPoly) -> AlexanderCheck {
    AlexanderCheck {
        one_variable: p.basis().rank() == 1,
        symmetric: p.is_symmetric(),
        // a sum that overflows i64 is certainly not a unit
        value_at_one: p.eval_ones().unwrap_or(i64::MAX),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    /// `None` for knots registered directly by their Alexander polynomial.
    pub seifert: Option<SeifertMatrix>,
    /// Over [`alexander_basis`]; symmetric with value `1` at `t = 1`.
    pub alexander: LaurentPoly,
    pub fibered: bool,
}

impl KnotRecord {
    pub fn from_seifert(name: impl Into<String>, seifert: SeifertMatrix, fibered: bool) -> Result<Self> {
        let alexander = alexander_from_seifert(&seifert)?;
        Ok(KnotRecord {
            name: name.into(),
            seifert: Some(seifert),
            alexander,
            fibered,
        })
    }

    /// Registers a knot by its Alexander polynomial. The polynomial must pass
    /// [`validate_alexander`]; a value of `-1` at `t = 1` is flipped to `+1`.
    pub fn from_alexander(name: impl Into<String>, alexander: LaurentPoly, fibered: bool) -> Result<Self> {
        let check = validate_alexander(&alexander);
        if !check.passes() {
            return Err(Error::InvalidAlexander(format!(
                "`{alexander}`: one variable: {}, symmetric: {}, value at 1: {}",
                check.one_variable, check.symmetric, check.value_at_one
            )));
        }
        let alexander = alexander.reindex(&alexander_basis(), &[Exponent::new(vec![1])])?;
        let alexander = if check.value_at_one == -1 {
            alexander.negate()?
        } else {
            alexander
        };
        Ok(KnotRecord {
            name: name.into(),
            seifert: None,
            alexander,
            fibered,
        })
    }

    pub fn unknot() -> Self {
        KnotRecord::from_seifert("0_1", SeifertMatrix::empty(), true).expect("unknot")
    }
}

/// JSON form of a knot registration: exactly one of `seifert` or `alexander`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KnotRegistration {
    pub name: String,
    pub fibered: bool,
    #[serde(default)]
    pub seifert: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub alexander: Option<String>,
}

impl KnotRegistration {
    pub fn into_record(self) -> Result<KnotRecord> {
        match (self.seifert, self.alexander) {
            (Some(rows), None) => {
                KnotRecord::from_seifert(self.name, SeifertMatrix::new(rows)?, self.fibered)
            }
            (None, Some(text)) => {
                let p = LaurentPoly::from_text(&text, &alexander_basis())?;
                KnotRecord::from_alexander(self.name, p, self.fibered)
            }
            _ => Err(Error::Domain(format!(
                "knot `{}`: exactly one of `seifert` or `alexander` is required",
                self.name
            ))),
        }
    }
}

const BUILTIN: &[(&str, bool, &[&[i64]])] = &[
    ("3_1", true, &[&[-1, 1], &[0, -1]]),
    ("4_1", true, &[&[1, 1], &[0, -1]]),
    ("5_2", false, &[&[1, 1], &[0, 2]]),
];

/// Name-indexed knot records.
#[derive(Clone, Debug, Default)]
pub struct KnotTable {
    knots: BTreeMap<String, KnotRecord>,
}

impl KnotTable {
    /// The shipped table: trefoil `3_1`, figure-eight `4_1` (both fibered)
    /// and `5_2` (not fibered), each checked on construction.
    pub fn builtin() -> Result<Self> {
        let mut table = KnotTable::default();
        for (name, fibered, rows) in BUILTIN {
            let v = SeifertMatrix::new(rows.iter().map(|r| r.to_vec()).collect())?;
            let record = KnotRecord::from_seifert(*name, v, *fibered)?;
            if !record.alexander.is_symmetric() || record.alexander.eval_ones()? != 1 {
                return Err(Error::InvalidAlexander(format!("built-in knot {name}")));
            }
            table.register(record);
        }
        Ok(table)
    }

    /// Adds or replaces a record.
    pub fn register(&mut self, record: KnotRecord) {
        self.knots.insert(record.name.clone(), record);
    }

    pub fn lookup(&self, name: &str) -> Result<&KnotRecord> {
        self.knots.get(name).ok_or_else(|| Error::UnknownKnot {
            name: name.to_string(),
            available: self.names().map(str::to_string).collect(),
        })
    }

    pub fn names(&self) -> impl Iterator<Item = &str> + '_ {
        self.knots.keys().map(String::as_str)
    }

    pub fn records(&self) -> impl Iterator<Item = &KnotRecord> + '_ {
        self.knots.values()
    }
}

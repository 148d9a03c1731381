//! Symplectic obstructions from folded Seiberg-Witten polynomials.
//!
//! A symplectic 4-manifold with `b_+ >= 2` has a spin^c class (its canonical
//! class) with invariant `±1`. A folded polynomial with no coefficient equal
//! to `±1` therefore obstructs symplectic structures of either orientation.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fold::{fold, is_injective_on, EulerClass, FoldedSW, QuotientLattice};
use crate::laurent::{Exponent, LaurentPoly};
use crate::manifolds::{theorem1_applicable, ThreeManifold};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub source: String,
    /// Classes whose invariant is `±1`, with that invariant.
    pub unit_classes: Vec<(Exponent, i64)>,
    pub obstructed: bool,
    pub fibered_orbit: bool,
}

fn unit_terms(p: &LaurentPoly) -> Vec<(Exponent, i64)> {
    p.terms()
        .filter(|(_, c)| c.abs() == 1)
        .map(|(e, c)| (e.clone(), c))
        .collect()
}

pub fn taubes_report(folded: &FoldedSW, meta: &ThreeManifold) -> ObstructionReport {
    let unit_classes = unit_terms(folded.poly());
    ObstructionReport {
        source: format!("{} / chi = {}", meta.name, folded.euler_class()),
        obstructed: unit_classes.is_empty(),
        unit_classes,
        fibered_orbit: meta.fibered,
    }
}

/// Report for the product `M × S¹`, whose SW⁴ equals SW³.
pub fn product_report(meta: &ThreeManifold) -> ObstructionReport {
    let unit_classes = unit_terms(&meta.sw3);
    ObstructionReport {
        source: format!("{} x S1", meta.name),
        obstructed: unit_classes.is_empty(),
        unit_classes,
        fibered_orbit: meta.fibered,
    }
}

/// Short stable fingerprint of a polynomial's canonical text.
pub fn poly_digest(p: &LaurentPoly) -> String {
    Sha256::digest(p.to_text().as_bytes())
        .iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchEntry {
    pub chi: EulerClass,
    pub obstructed: bool,
    pub injective: bool,
    pub unit_classes: Vec<(Exponent, i64)>,
    pub folded: LaurentPoly,
    pub digest: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub bound: i64,
    pub entries: Vec<SearchEntry>,
    pub all_obstructed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Injective folds take their verdict from the unfolded coefficients.
    FastPath,
    /// Every entry is folded and scanned.
    FullFold,
}

/// One representative of each `{χ, -χ}` pair with all `|χ_i| <= bound`,
/// `χ != 0`, in lexicographic order. Representatives have a positive first
/// nonzero entry.
pub fn euler_box(rank: usize, bound: i64) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut v = vec![-bound; rank];
    loop {
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0) {
            out.push(Exponent::new(v.clone()));
        }
        let mut i = rank;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < bound {
                v[i] += 1;
                break;
            }
            v[i] = -bound;
        }
    }
}

pub fn euler_search(m: &ThreeManifold, bound: i64) -> Result<SearchResult> {
    euler_search_with(m, bound, SearchMode::FastPath)
}

pub fn euler_search_with(m: &ThreeManifold, bound: i64, mode: SearchMode) -> Result<SearchResult> {
    if bound < 1 {
        return Err(Error::Domain(format!("search box must be at least 1, got {bound}")));
    }
    // b_+ does not depend on χ; check it once with any nonzero class
    let mut probe = vec![0; m.basis.rank()];
    probe[0] = 1;
    theorem1_applicable(m, &Exponent::new(probe))?.into_result()?;

    let unfolded_units = unit_terms(&m.sw3);
    let entries = euler_box(m.basis.rank(), bound)
        .into_par_iter()
        .map(|chi| -> Result<SearchEntry> {
            let class = EulerClass::new(&m.basis, chi.clone())?;
            let q = QuotientLattice::new(&class)?;
            let injective = is_injective_on(&m.sw3, &q)?;
            let (obstructed, unit_classes, folded) = if injective && mode == SearchMode::FastPath {
                let relabeled = m
                    .sw3
                    .terms()
                    .map(|(e, c)| Ok((q.canonical_rep(e)?, c)))
                    .collect::<Result<Vec<_>>>()?;
                let units = unfolded_units
                    .iter()
                    .map(|(e, c)| Ok((q.canonical_rep(e)?, *c)))
                    .collect::<Result<Vec<_>>>()?;
                (
                    unfolded_units.is_empty(),
                    units,
                    LaurentPoly::from_terms(&m.basis, relabeled)?,
                )
            } else {
                let f = fold(m, &chi)?;
                let report = taubes_report(&f, m);
                (report.obstructed, report.unit_classes, f.poly().clone())
            };
            let mut unit_classes = unit_classes;
            unit_classes.sort();
            Ok(SearchEntry {
                digest: poly_digest(&folded),
                chi: class,
                obstructed,
                injective,
                unit_classes,
                folded,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_obstructed = entries.iter().all(|e| e.obstructed);
    Ok(SearchResult {
        bound,
        entries,
        all_obstructed,
    })
}

/// Which Euler classes can merge two support terms, and what that implies
/// outside a search box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationNote {
    pub bound: i64,
    /// Sign-normalized `χ` for which some pair of support exponents collides.
    pub collision_classes: Vec<Exponent>,
    /// Largest `max_i |χ_i|` over `collision_classes` (0 when there are none).
    pub collision_radius: i64,
    pub unfolded_coefficients: Vec<i64>,
    pub unfolded_has_units: bool,
}

impl StabilizationNote {
    /// Every `χ` outside the box folds injectively.
    pub fn box_covers_collisions(&self) -> bool {
        self.collision_radius <= self.bound
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn stabilization_note(m: &ThreeManifold, bound: i64) -> Result<StabilizationNote> {
    let support: Vec<&Exponent> = m.sw3.support().collect();
    let mut collisions = BTreeSet::new();
    for (i, a) in support.iter().enumerate() {
        for b in &support[i + 1..] {
            let d: Vec<i64> = b
                .iter()
                .zip(a.iter())
                .map(|(x, y)| x.checked_sub(*y).ok_or(Error::Overflow("support difference")))
                .collect::<Result<_>>()?;
            let g = d.iter().fold(0, |g, &x| gcd(g, x));
            let lead = d.iter().find(|&&x| x != 0).copied().unwrap_or(1).signum();
            for k in (1..=g).filter(|k| g % k == 0) {
                collisions.insert(Exponent::new(d.iter().map(|x| lead * x / k).collect()));
            }
        }
    }
    let collision_radius = collisions
        .iter()
        .flat_map(|c| c.iter().map(|x| x.abs()))
        .max()
        .unwrap_or(0);
    let mut unfolded_coefficients = Vec::new();
    for (_, c) in m.sw3.terms() {
        if !unfolded_coefficients.contains(&c) {
            unfolded_coefficients.push(c);
        }
    }
    Ok(StabilizationNote {
        bound,
        collision_classes: collisions.into_iter().collect(),
        collision_radius,
        unfolded_has_units: unfolded_coefficients.iter().any(|c| c.abs() == 1),
        unfolded_coefficients,
    })
}

impl fmt::Display for StabilizationNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<String> = self.unfolded_coefficients.iter().map(i64::to_string).collect();
        if self.unfolded_has_units {
            write!(f, "unfolded has unit coefficients; injective folds not obstructed")?;
        } else {
            write!(
                f,
                "unfolded coefficients {{{}}}: no units; all injective folds obstructed",
                coeffs.join(",")
            )?;
        }
        if self.collision_classes.is_empty() {
            write!(f, "\nno two support terms can merge: every fold is injective")
        } else if self.box_covers_collisions() {
            write!(
                f,
                "\n{} collision-prone Euler classes, all with max |coordinate| <= {} <= box {}: \
                 every class outside the box folds injectively",
                self.collision_classes.len(),
                self.collision_radius,
                self.bound
            )
        } else {
            write!(
                f,
                "\ncollision-prone Euler classes reach max |coordinate| {} > box {}: \
                 classes outside the box may merge terms",
                self.collision_radius, self.bound
            )
        }
    }
}

//! Orbit-space 3-manifolds and their Seiberg-Witten polynomials.
//!
//! Supported constructions: the 3-torus, `Σ_g × S¹`, and fiber sums of either
//! with knot complements along a basis loop. Gluing a knot complement along a
//! meridian multiplies the polynomial by `Δ_K(t_m²)` and leaves the
//! first-homology basis and `b1` unchanged.

use crate::alexander::KnotRecord;
use crate::error::{Error, Result};
use crate::laurent::{Basis, Exponent, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeManifold {
    pub name: String,
    /// Generators of `H_1` mod torsion that carry the polynomial.
    pub basis: Basis,
    /// First Betti number; may exceed the basis rank (see [`surface_times_circle`]).
    pub b1: u32,
    pub sw3: LaurentPoly,
    pub fibered: bool,
    /// Construction steps, base first.
    pub provenance: Vec<String>,
}

impl ThreeManifold {
    /// Overrides the recorded first Betti number.
    pub fn with_b1(mut self, b1: u32) -> Self {
        self.b1 = b1;
        self
    }

    pub fn provenance_text(&self) -> String {
        self.provenance.join(" ; ")
    }
}

pub fn three_torus() -> ThreeManifold {
    let basis = Basis::new(["m1", "m2", "m3"]).expect("static basis");
    ThreeManifold {
        name: "T3".into(),
        sw3: LaurentPoly::one(&basis),
        basis,
        b1: 3,
        fibered: true,
        provenance: vec!["t3".into()],
    }
}

/// `Σ_g × S¹` with polynomial `(t - t^-1)^(2g-2)` in the single variable `t`
/// (the direction dual to the surface); `b1 = 2g + 1`.
pub fn surface_times_circle(genus: i64) -> Result<ThreeManifold> {
    if genus < 1 {
        return Err(Error::Domain(format!("genus must be at least 1, got {genus}")));
    }
    let basis = Basis::new(["t"]).expect("static basis");
    let base = LaurentPoly::from_terms(&basis, [(vec![1], 1), (vec![-1], -1)])?;
    let sw3 = base.power(2 * genus - 2)?;
    let b1 = genus
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .and_then(|x| u32::try_from(x).ok())
        .ok_or(Error::Overflow("first Betti number"))?;
    Ok(ThreeManifold {
        name: format!("S{genus}xS1"),
        basis,
        b1,
        sw3,
        fibered: true,
        provenance: vec![format!("surface_x_s1(g={genus})")],
    })
}

/// Fiber sum of `m` with the complement of `knot` along the loop `meridian`:
/// `SW³ ← SW³ · Δ_K(t_meridian²)`.
pub fn fiber_sum_with_knot(
    m: &ThreeManifold,
    knot: &KnotRecord,
    meridian: &str,
) -> Result<ThreeManifold> {
    let unit = m.basis.unit(meridian)?;
    let image = Exponent::new(unit.iter().map(|x| 2 * x).collect());
    let factor = knot.alexander.reindex(&m.basis, &[image])?;
    let mut provenance = m.provenance.clone();
    provenance.push(format!("sum {}@{}", knot.name, meridian));
    Ok(ThreeManifold {
        name: format!("{} #{} {}", m.name, meridian, knot.name),
        basis: m.basis.clone(),
        b1: m.b1,
        sw3: m.sw3.multiply(&factor)?,
        fibered: m.fibered && knot.fibered,
        provenance,
    })
}

/// Hypothesis report for folding `m` by an Euler class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Applicability {
    pub chi_nontorsion: bool,
    /// `b_+` of the total space, `b1(M) - 1`.
    pub b_plus: i64,
}

impl Applicability {
    pub fn b_plus_ok(&self) -> bool {
        self.b_plus >= 2
    }

    pub fn passes(&self) -> bool {
        self.chi_nontorsion && self.b_plus_ok()
    }

    /// The first failing hypothesis, as an error.
    pub fn into_result(self) -> Result<()> {
        if !self.chi_nontorsion {
            return Err(Error::TorsionEulerClass);
        }
        if !self.b_plus_ok() {
            return Err(Error::Hypothesis(format!(
                "b+ = b1 - 1 = {} < 2",
                self.b_plus
            )));
        }
        Ok(())
    }
}

pub fn theorem1_applicable(m: &ThreeManifold, chi: &Exponent) -> Result<Applicability> {
    m.basis.check(chi)?;
    Ok(Applicability {
        chi_nontorsion: !chi.is_zero(),
        b_plus: i64::from(m.b1) - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::KnotTable;

    fn poly(s: &str, m: &ThreeManifold) -> LaurentPoly {
        LaurentPoly::from_text(s, &m.basis).unwrap()
    }

    #[test]
    fn torus() {
        let t3 = three_torus();
        assert_eq!(t3.sw3.to_text(), "1");
        assert_eq!(t3.sw3.eval_ones().unwrap(), 1);
        assert_eq!(t3.b1, 3);
        assert!(t3.fibered);
    }

    #[test]
    fn surface_bundles() {
        let m = surface_times_circle(1).unwrap();
        assert_eq!(m.sw3.to_text(), "1");
        assert_eq!(m.b1, 3);
        let m = surface_times_circle(2).unwrap();
        assert_eq!(m.sw3, poly("t^2 - 2 + t^-2", &m));
        assert_eq!(m.b1, 5);
        let m = surface_times_circle(3).unwrap();
        assert_eq!(m.sw3, poly("t^4 - 4*t^2 + 6 - 4*t^-2 + t^-4", &m));
        assert!(matches!(surface_times_circle(0), Err(Error::Domain(_))));
        assert!(surface_times_circle(-2).is_err());
    }

    #[test]
    fn trefoil_sum() {
        let table = KnotTable::builtin().unwrap();
        let m = fiber_sum_with_knot(&three_torus(), table.lookup("3_1").unwrap(), "m1").unwrap();
        assert_eq!(m.sw3, poly("m1^2 - 1 + m1^-2", &m));
        assert_eq!(m.b1, 3);
        assert!(m.fibered);
        assert_eq!(m.provenance, ["t3", "sum 3_1@m1"]);
        assert!(matches!(
            fiber_sum_with_knot(&m, table.lookup("3_1").unwrap(), "m4"),
            Err(Error::UnknownVariable { .. })
        ));
    }

    #[test]
    fn figure_eight_pair() {
        let table = KnotTable::builtin().unwrap();
        let k = table.lookup("4_1").unwrap();
        let m = fiber_sum_with_knot(&three_torus(), k, "m1").unwrap();
        let m = fiber_sum_with_knot(&m, k, "m2").unwrap();
        let expected = poly(
            "m1^-2*m2^-2 - 3*m2^-2 + m1^2*m2^-2 - 3*m1^-2 + 9 - 3*m1^2 + m1^-2*m2^2 \
             - 3*m2^2 + m1^2*m2^2",
            &m,
        );
        assert_eq!(m.sw3, expected);
        assert!(m.fibered);

        let reversed = fiber_sum_with_knot(&three_torus(), k, "m2").unwrap();
        let reversed = fiber_sum_with_knot(&reversed, k, "m1").unwrap();
        assert_eq!(reversed.sw3, m.sw3);
    }

    #[test]
    fn unknot_sum_is_identity() {
        let table = KnotTable::builtin().unwrap();
        let m = fiber_sum_with_knot(&three_torus(), table.lookup("5_2").unwrap(), "m1").unwrap();
        assert!(!m.fibered);
        let n = fiber_sum_with_knot(&m, &KnotRecord::unknot(), "m2").unwrap();
        assert_eq!(n.sw3, m.sw3);
    }

    #[test]
    fn constructions_are_symmetric_and_normalized() {
        let table = KnotTable::builtin().unwrap();
        let mut m = three_torus();
        for (k, var) in [("3_1", "m1"), ("5_2", "m2"), ("4_1", "m3"), ("5_2", "m1")] {
            m = fiber_sum_with_knot(&m, table.lookup(k).unwrap(), var).unwrap();
            assert_eq!(m.sw3.conjugate().unwrap(), m.sw3);
            assert_eq!(m.sw3.eval_ones().unwrap(), 1);
        }
    }

    #[test]
    fn applicability() {
        let table = KnotTable::builtin().unwrap();
        let k = table.lookup("4_1").unwrap();
        let m = fiber_sum_with_knot(&three_torus(), k, "m1").unwrap();
        let m = fiber_sum_with_knot(&m, k, "m2").unwrap();

        let a = theorem1_applicable(&m, &Exponent::new(vec![4, 0, 0])).unwrap();
        assert!(a.passes());
        assert_eq!(a.b_plus, 2);

        let a = theorem1_applicable(&m, &Exponent::new(vec![0, 0, 0])).unwrap();
        assert!(!a.chi_nontorsion);
        assert_eq!(a.into_result().unwrap_err(), Error::TorsionEulerClass);

        let s = surface_times_circle(1).unwrap().with_b1(2);
        let a = theorem1_applicable(&s, &Exponent::new(vec![3])).unwrap();
        assert_eq!(a.b_plus, 1);
        assert!(!a.passes());
        assert!(matches!(a.into_result(), Err(Error::Hypothesis(_))));

        assert!(theorem1_applicable(&m, &Exponent::new(vec![1])).is_err());
    }
}

//! Rods in the 3-torus, packings, validation and homological linking with
//! the standard rods.

use std::collections::HashSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::decomp;
use crate::error::{Error, Result};
use crate::rational::{q, Rational};
use crate::vector::{IntVec3, RatVec3};

/// Reduce each coordinate into [0, 1).
pub fn reduce_to_fundamental_domain(p: &RatVec3) -> RatVec3 {
    RatVec3::new(p.x.fract01(), p.y.fract01(), p.z.fract01())
}

/// A rod closes up into a simple circle exactly when its direction is primitive.
pub fn is_simple_closed(d: &IntVec3) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(d.gcd() == 1)
}

/// Straight circle `basepoint + t * direction` in the 3-torus.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rod {
    pub direction: IntVec3,
    pub basepoint: RatVec3,
}

impl Rod {
    /// Reduces the basepoint but does not check the direction; see [`Rod::checked`].
    pub fn new(direction: IntVec3, basepoint: RatVec3) -> Rod {
        Rod {
            direction,
            basepoint: reduce_to_fundamental_domain(&basepoint),
        }
    }

    pub fn checked(direction: IntVec3, basepoint: RatVec3) -> Result<Rod> {
        if !is_simple_closed(&direction)? {
            return Err(Error::NonSimple(direction.to_string(), direction.gcd()));
        }
        Ok(Rod::new(direction, basepoint))
    }

    pub fn point_at(&self, t: &Rational) -> RatVec3 {
        self.basepoint.along(&self.direction.to_rat(), t)
    }

    /// Does `p` lie on this circle (modulo the lattice)?
    pub fn contains_point(&self, p: &RatVec3) -> bool {
        let d = self.direction.coords();
        let Some(i) = (0..3).find(|&i| d[i] != 0) else {
            return false;
        };
        let delta = p.coord(i) - self.basepoint.coord(i);
        let di = Rational::int(d[i]);
        let base = delta.floor_i64();
        let span = d[i].abs() + 1;
        for m in (base - span)..=(base + span) {
            let t = (&delta - Rational::int(m)) / &di;
            if t.is_negative() || t >= Rational::one() {
                continue;
            }
            let diff = p - &self.point_at(&t);
            if diff.is_integral() {
                return true;
            }
        }
        false
    }

    /// Same point set: direction equal up to sign and basepoints on one circle.
    pub fn same_circle(&self, other: &Rod) -> bool {
        (self.direction == other.direction || self.direction == -other.direction)
            && self.contains_point(&other.basepoint)
    }

    pub fn translated(&self, v: &RatVec3) -> Rod {
        Rod::new(self.direction, &self.basepoint + v)
    }

    pub fn reversed(&self) -> Rod {
        Rod::new(-self.direction, self.basepoint.clone())
    }
}

impl std::fmt::Debug for Rod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}+{}t", self.basepoint, self.direction)
    }
}

/// The three axis rods the decomposition is built around, in x, y, z order.
pub fn standard_rods() -> [Rod; 3] {
    [
        Rod::new(IntVec3::new(1, 0, 0), RatVec3::new(q(0, 1), q(1, 2), q(0, 1))),
        Rod::new(IntVec3::new(0, 1, 0), RatVec3::new(q(1, 2), q(0, 1), q(1, 2))),
        Rod::new(IntVec3::new(0, 0, 1), RatVec3::zero()),
    ]
}

/// Which standard rod (0 = x, 1 = y, 2 = z) this rod coincides with, if any.
pub fn standard_index(r: &Rod) -> Option<usize> {
    standard_rods().iter().position(|s| s.same_circle(r))
}

/// Do the two circles share a point of the 3-torus?
pub fn rods_intersect(r1: &Rod, r2: &Rod) -> bool {
    let d1 = r1.direction;
    let d2 = r2.direction;
    if d1.is_zero() || d2.is_zero() {
        return false;
    }
    if d1.cross(&d2).is_zero() {
        return r1.contains_point(&r2.basepoint);
    }
    // Solve t*d1 - s*d2 = p2 - p1 + k for k in the box |k_i| <= |d1_i| + |d2_i| + 1.
    let a = d1.coords();
    let b = d2.coords();
    let bound: Vec<i64> = (0..3).map(|i| a[i].abs() + b[i].abs() + 1).collect();
    let (i, j, l) = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
        .into_iter()
        .find(|&(i, j, _)| a[i] * b[j] - a[j] * b[i] != 0)
        .expect("non-parallel directions have a nonzero minor");
    let det = Rational::int(-(a[i] * b[j] - a[j] * b[i]));
    let dp = &r2.basepoint - &r1.basepoint;
    let one = Rational::one();
    for ki in -bound[i]..=bound[i] {
        let ri = dp.coord(i) + Rational::int(ki);
        for kj in -bound[j]..=bound[j] {
            let rj = dp.coord(j) + Rational::int(kj);
            // [a_i -b_i; a_j -b_j] (t, s) = (ri, rj)
            let t = (&ri * Rational::int(-b[j]) - &rj * Rational::int(-b[i])) / &det;
            let s = (&rj * Rational::int(a[i]) - &ri * Rational::int(a[j])) / &det;
            if t.is_negative() || t >= one || s.is_negative() || s >= one {
                continue;
            }
            let kl = &t * Rational::int(a[l]) - &s * Rational::int(b[l]) - dp.coord(l);
            if kl.is_integer() && kl.abs() <= Rational::int(bound[l]) {
                return true;
            }
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RodPacking {
    pub rods: Vec<Rod>,
    pub labels: Vec<String>,
}

impl RodPacking {
    pub fn new(rods: Vec<Rod>, labels: Vec<String>) -> RodPacking {
        assert_eq!(rods.len(), labels.len(), "one label per rod");
        RodPacking { rods, labels }
    }

    /// Labels R1, R2, ...
    pub fn unlabeled(rods: Vec<Rod>) -> RodPacking {
        let labels = (1..=rods.len()).map(|i| format!("R{i}")).collect();
        RodPacking::new(rods, labels)
    }

    pub fn len(&self) -> usize {
        self.rods.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rods.is_empty()
    }

    pub fn translated(&self, v: &RatVec3) -> RodPacking {
        RodPacking::new(self.rods.iter().map(|r| r.translated(v)).collect(), self.labels.clone())
    }

    /// The standard rods followed by `extra`.
    pub fn standard_plus(extra: &[Rod]) -> RodPacking {
        let mut rods = standard_rods().to_vec();
        let mut labels: Vec<String> = ["R_x", "R_y", "R_z"].map(String::from).to_vec();
        for (i, r) in extra.iter().enumerate() {
            rods.push(r.clone());
            labels.push(format!("R{}", i + 1));
        }
        RodPacking::new(rods, labels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub code: String,
    pub message: String,
    pub rods: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub failures: Vec<Failure>,
    pub general_position: bool,
}

impl ValidationReport {
    pub fn has(&self, code: &str) -> bool {
        self.failures.iter().any(|f| f.code == code)
    }
}

pub fn validate_packing(p: &RodPacking) -> ValidationReport {
    let mut failures = Vec::new();
    let mut simple = vec![false; p.len()];
    for (i, r) in p.rods.iter().enumerate() {
        match is_simple_closed(&r.direction) {
            Ok(true) => simple[i] = true,
            Ok(false) => failures.push(Failure {
                code: "NONSIMPLE".into(),
                message: format!(
                    "rod {} direction {} has gcd {}",
                    p.labels[i],
                    r.direction,
                    r.direction.gcd()
                ),
                rods: vec![i],
            }),
            Err(_) => failures.push(Failure {
                code: "NONSIMPLE".into(),
                message: format!("rod {} has zero direction", p.labels[i]),
                rods: vec![i],
            }),
        }
    }
    let mut seen = HashSet::new();
    for (i, l) in p.labels.iter().enumerate() {
        if !seen.insert(l) {
            failures.push(Failure {
                code: "DUPLICATE_LABEL".into(),
                message: format!("label {l} used more than once"),
                rods: vec![i],
            });
        }
    }
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            if simple[i] && simple[j] && rods_intersect(&p.rods[i], &p.rods[j]) {
                failures.push(Failure {
                    code: "INTERSECTING".into(),
                    message: format!("rods {} and {} meet", p.labels[i], p.labels[j]),
                    rods: vec![i, j],
                });
            }
        }
    }
    let general_position = p
        .rods
        .iter()
        .enumerate()
        .filter(|(i, r)| simple[*i] && standard_index(r).is_none())
        .all(|(i, r)| decomp::check_general_position(r, i).is_ok());
    ValidationReport {
        ok: failures.is_empty(),
        failures,
        general_position,
    }
}

/// Absolute linking numbers of the image of `r` with the three Borromean
/// components; these are the absolute direction coordinates.
pub fn linking_numbers_with_standard(r: &Rod) -> Result<(u64, u64, u64)> {
    if standard_rods().iter().any(|s| rods_intersect(s, r)) {
        return Err(Error::IntersectsStandardRods(0));
    }
    let d = r.direction;
    Ok((d.a.unsigned_abs(), d.b.unsigned_abs(), d.c.unsigned_abs()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    pub p: i64,
    pub q: i64,
}

impl Slope {
    pub fn new(p: i64, q: i64) -> Option<Slope> {
        ((p, q) != (0, 0) && p.gcd(&q) == 1).then_some(Slope { p, q })
    }

    /// The homological longitude used to refill the Borromean components.
    pub fn longitude() -> Slope {
        Slope { p: 0, q: 1 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::pt;

    #[test]
    fn reduce_examples() {
        let p = RatVec3::new(q(3, 2), q(-1, 4), Rational::int(2));
        assert_eq!(reduce_to_fundamental_domain(&p), pt((1, 2), (3, 4), (0, 1)));
        assert_eq!(reduce_to_fundamental_domain(&RatVec3::zero()), RatVec3::zero());
        let w = pt((5, 6), (1, 6), (1, 2));
        assert_eq!(reduce_to_fundamental_domain(&w), w);
    }

    #[test]
    fn simple_closed_examples() {
        assert!(is_simple_closed(&IntVec3::new(1, 0, 0)).unwrap());
        assert!(!is_simple_closed(&IntVec3::new(2, 4, 6)).unwrap());
        assert!(is_simple_closed(&IntVec3::new(1, 1, 1)).unwrap());
        assert_eq!(is_simple_closed(&IntVec3::new(0, 0, 0)), Err(Error::ZeroDirection));
    }

    #[test]
    fn standard_x_and_y_are_disjoint() {
        let [rx, ry, rz] = standard_rods();
        assert!(!rods_intersect(&rx, &ry));
        assert!(!rods_intersect(&ry, &rz));
        assert!(!rods_intersect(&rx, &rz));
    }

    #[test]
    fn axis_rods_through_origin_meet() {
        let a = Rod::new(IntVec3::new(1, 0, 0), RatVec3::zero());
        let b = Rod::new(IntVec3::new(0, 1, 0), RatVec3::zero());
        assert!(rods_intersect(&a, &b));
    }

    #[test]
    fn diagonal_rods_meet() {
        let a = Rod::new(IntVec3::new(1, 1, 0), RatVec3::zero());
        let b = Rod::new(IntVec3::new(1, -1, 0), pt((1, 2), (0, 1), (0, 1)));
        assert!(rods_intersect(&a, &b));
        assert!(a.contains_point(&pt((3, 4), (3, 4), (0, 1))));
        assert!(b.contains_point(&pt((3, 4), (3, 4), (0, 1))));
    }

    #[test]
    fn parallel_rods() {
        let a = Rod::new(IntVec3::new(1, 1, 1), pt((1, 3), (2, 3), (0, 1)));
        let shifted = Rod::new(IntVec3::new(-1, -1, -1), pt((2, 3), (0, 1), (1, 3)));
        assert!(a.same_circle(&shifted));
        assert!(rods_intersect(&a, &shifted));
        let apart = Rod::new(IntVec3::new(1, 1, 1), pt((2, 3), (2, 3), (0, 1)));
        assert!(!rods_intersect(&a, &apart));
    }

    #[test]
    fn validation_codes() {
        let bad = RodPacking::unlabeled(vec![Rod::new(IntVec3::new(2, 2, 2), RatVec3::zero())]);
        let rep = validate_packing(&bad);
        assert!(!rep.ok && rep.has("NONSIMPLE"));

        let r = Rod::new(IntVec3::new(1, 1, 1), pt((1, 3), (2, 3), (0, 1)));
        let twice = RodPacking::unlabeled(vec![r.clone(), r]);
        let rep = validate_packing(&twice);
        assert!(!rep.ok && rep.has("INTERSECTING"));
        assert_eq!(rep.failures[0].rods, vec![0, 1]);

        let std = RodPacking::standard_plus(&[]);
        let rep = validate_packing(&std);
        assert!(rep.ok && rep.general_position);
    }

    #[test]
    fn linking_examples() {
        let g = Rod::new(IntVec3::new(-1, 1, 1), pt((3, 8), (1, 4), (0, 1)));
        assert_eq!(linking_numbers_with_standard(&g).unwrap(), (1, 1, 1));
        let v = Rod::new(IntVec3::new(0, 0, 1), pt((1, 4), (1, 4), (0, 1)));
        assert_eq!(linking_numbers_with_standard(&v).unwrap(), (0, 0, 1));
        let w = Rod::new(IntVec3::new(2, 3, 5), pt((1, 7), (2, 7), (3, 7)));
        assert_eq!(linking_numbers_with_standard(&w).unwrap(), (2, 3, 5));
        let [rx, ..] = standard_rods();
        assert!(linking_numbers_with_standard(&rx).is_err());
    }

    #[test]
    fn slopes() {
        assert_eq!(Slope::new(0, 1), Some(Slope::longitude()));
        assert_eq!(Slope::new(0, 0), None);
        assert_eq!(Slope::new(2, 4), None);
    }
}

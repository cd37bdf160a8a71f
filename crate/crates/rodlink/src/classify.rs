//! Geometric type of a packing complement, decided from the known results for
//! one rod, two rods, the standard rods (plus at most one more) and the
//! builtin cubic packings.

use serde::{Deserialize, Serialize};

use crate::builtin::{builtin_packing, PackingName};
use crate::error::{Error, Result};
use crate::geometry::{reduce_to_fundamental_domain, standard_rods, validate_packing, Rod, RodPacking};
use crate::rational::Rational;
use crate::vector::{IntVec3, RatVec3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    SeifertFibred,
    Toroidal,
    Hyperbolic,
    NotHyperbolic,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub citation: String,
    pub note: String,
}

pub const ONE_ROD: &str = "Theorem (one rod): the complement of a single rod-shaped circle is Seifert fibred";
pub const TWO_PARALLEL: &str = "Theorem (two rods): two rods with parallel directions have Seifert fibred complement";
pub const TWO_SKEW: &str = "Theorem (two rods): two rods with independent directions have toroidal complement";
pub const STANDARD: &str = "Theorem (standard rods): the complement of the three standard rods is the Borromean rings complement and is hyperbolic";
pub const STANDARD_PLUS_ONE: &str = "Theorem (standard rods plus one): hyperbolic if and only if the extra direction is not (±1,0,0), (0,±1,0), (0,0,±1)";
pub const AXIS_PARALLEL: &str =
    "Proposition (axis-parallel fourth rod): the complement admits no complete hyperbolic structure";
pub const CUBIC: &str =
    "Theorem (cubic packings): the complements of +Pi, Pi*, Gamma, +Omega and +Sigma are hyperbolic";

fn verdict(verdict: Verdict, citation: &str, note: impl Into<String>) -> Classification {
    Classification {
        verdict,
        citation: citation.to_string(),
        note: note.into(),
    }
}

fn is_axis(d: &IntVec3) -> bool {
    d.abs().coords().iter().sum::<i64>() == 1
}

/// All points where two circles of the 3-torus meet, reduced into [0,1)^3.
pub fn circle_intersections(r1: &Rod, r2: &Rod) -> Vec<RatVec3> {
    let a = r1.direction.coords();
    let b = r2.direction.coords();
    let Some((i, j, l)) = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
        .into_iter()
        .find(|&(i, j, _)| a[i] * b[j] - a[j] * b[i] != 0)
    else {
        return Vec::new();
    };
    let bound: Vec<i64> = (0..3).map(|k| a[k].abs() + b[k].abs() + 1).collect();
    let det = Rational::int(-(a[i] * b[j] - a[j] * b[i]));
    let dp = &r2.basepoint - &r1.basepoint;
    let one = Rational::one();
    let mut out = Vec::new();
    for ki in -bound[i]..=bound[i] {
        let ri = dp.coord(i) + Rational::int(ki);
        for kj in -bound[j]..=bound[j] {
            let rj = dp.coord(j) + Rational::int(kj);
            let t = (&ri * Rational::int(-b[j]) - &rj * Rational::int(-b[i])) / &det;
            let s = (&rj * Rational::int(a[i]) - &ri * Rational::int(a[j])) / &det;
            if t.is_negative() || t >= one || s.is_negative() || s >= one {
                continue;
            }
            let kl = &t * Rational::int(a[l]) - &s * Rational::int(b[l]) - dp.coord(l);
            if kl.is_integer() {
                let p = reduce_to_fundamental_domain(&r1.point_at(&t));
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out
}

/// Is every translated rod one of `target`'s circles, bijectively?
fn matches_with(rods: &[Rod], target: &[Rod], v: &RatVec3) -> bool {
    let mut used = vec![false; target.len()];
    rods.iter().all(|r| {
        let moved = r.translated(v);
        match (0..target.len()).find(|&j| !used[j] && target[j].same_circle(&moved)) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

/// A translation carrying `rods` onto `target` as sets of circles, if any.
pub fn matching_translation(rods: &[Rod], target: &[Rod]) -> Option<RatVec3> {
    if rods.len() != target.len() || rods.is_empty() {
        return None;
    }
    let r0 = &rods[0];
    // translations moving r0 onto target circle j form a circle themselves
    let family = |r: &Rod, t: &Rod| Rod::new(r.direction, &t.basepoint - &r.basepoint);
    let parallel = |x: &Rod, y: &Rod| x.direction.cross(&y.direction).is_zero();
    let r1 = rods.iter().find(|r| !parallel(r, r0))?;
    for t0 in target.iter().filter(|t| parallel(t, r0)) {
        let f0 = family(r0, t0);
        for t1 in target.iter().filter(|t| parallel(t, r1)) {
            let f1 = family(r1, t1);
            for v in circle_intersections(&f0, &f1) {
                if matches_with(rods, target, &v) {
                    return Some(v);
                }
            }
        }
    }
    None
}

pub fn classify(p: &RodPacking) -> Result<Classification> {
    let report = validate_packing(p);
    if !report.ok {
        let codes: Vec<&str> = report.failures.iter().map(|f| f.code.as_str()).collect();
        return Err(Error::InvalidPacking(codes.join(",")));
    }
    let rods = &p.rods;
    match rods.len() {
        0 => return Err(Error::InvalidPacking("empty packing".into())),
        1 => return Ok(verdict(Verdict::SeifertFibred, ONE_ROD, "")),
        2 => {
            return Ok(if rods[0].direction.cross(&rods[1].direction).is_zero() {
                verdict(Verdict::SeifertFibred, TWO_PARALLEL, "")
            } else {
                verdict(
                    Verdict::Toroidal,
                    TWO_SKEW,
                    "toroidal, hence not hyperbolic; witnessed by an essential torus",
                )
            })
        }
        _ => {}
    }
    let std = standard_rods();
    if matching_translation(rods, &std).is_some() {
        return Ok(verdict(Verdict::Hyperbolic, STANDARD, ""));
    }
    if rods.len() == 4 {
        for extra in 0..4 {
            let rest: Vec<Rod> = (0..4).filter(|&k| k != extra).map(|k| rods[k].clone()).collect();
            if matching_translation(&rest, &std).is_some() {
                let d = rods[extra].direction;
                return Ok(if is_axis(&d) {
                    verdict(
                        Verdict::NotHyperbolic,
                        AXIS_PARALLEL,
                        format!(
                            "extra rod {} has axis direction {d}; essential annulus",
                            p.labels[extra]
                        ),
                    )
                } else {
                    verdict(
                        Verdict::Hyperbolic,
                        STANDARD_PLUS_ONE,
                        format!("extra rod {} has direction {d}", p.labels[extra]),
                    )
                });
            }
        }
    }
    for name in PackingName::ALL {
        if matching_translation(rods, &builtin_packing(name).rods).is_some() {
            return Ok(verdict(Verdict::Hyperbolic, CUBIC, format!("matches builtin {name}")));
        }
    }
    Ok(verdict(Verdict::Unknown, "", "export for external verification"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::vector::pt;

    #[test]
    fn intersections_of_diagonals() {
        let a = Rod::new(IntVec3::new(1, 1, 0), RatVec3::zero());
        let b = Rod::new(IntVec3::new(1, -1, 0), pt((1, 2), (0, 1), (0, 1)));
        let pts = circle_intersections(&a, &b);
        assert!(pts.contains(&pt((3, 4), (3, 4), (0, 1))));
        assert!(pts.contains(&pt((1, 4), (1, 4), (0, 1))));
    }

    #[test]
    fn translated_standard_matches() {
        let v = RatVec3::new(q(1, 5), q(2, 7), q(3, 11));
        let moved: Vec<Rod> = standard_rods().iter().map(|r| r.translated(&v)).collect();
        let found = matching_translation(&moved, &standard_rods()).unwrap();
        assert!(matches_with(&moved, &standard_rods(), &found));
    }

    #[test]
    fn axis_rods_at_other_offsets_are_unknown() {
        let rods = vec![
            Rod::new(IntVec3::new(1, 0, 0), RatVec3::zero()),
            Rod::new(IntVec3::new(0, 1, 0), pt((1, 2), (0, 1), (1, 4))),
            Rod::new(IntVec3::new(0, 0, 1), pt((1, 4), (1, 2), (0, 1))),
        ];
        let c = classify(&RodPacking::unlabeled(rods)).unwrap();
        assert_eq!(c.verdict, Verdict::Unknown);
        assert_eq!(c.note, "export for external verification");
    }
}

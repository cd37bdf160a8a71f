//! Carrying arc sequences into the Borromean template.
//!
//! Every gluing between consecutive arcs becomes a vertical line through the
//! chart image of the glued point. Arcs themselves travel far above or below
//! the template: each arc owns two heights and a private vertical riser far
//! to the left, and runs horizontal at its first height from the previous
//! portal to the riser, along the riser, then horizontal at its second height
//! to the next portal. A portal through a disc runs upward when the rod
//! crosses the corresponding plane positively, so the image links each ring
//! exactly as often, and with the same sign, as the rod crosses its planes.

use crate::decomp::{standard_gluing_table, ArcSequence};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::template::{BorromeanTemplate, Portal, SpatialCurve};
use crate::vector::RatVec3;

/// Attempts at moving the risers before giving up on a collision.
const RISER_SALTS: i64 = 8;

/// Does the rod cross the face's plane in the positive coordinate direction
/// when leaving through `exit`?
fn crosses_positively(seq: &ArcSequence, k: usize) -> bool {
    let a = &seq.arcs[k];
    let along = &a.end - &a.start;
    let c = if a.exit.is_pink() {
        &along.x
    } else if a.exit.is_green() {
        &along.y
    } else {
        &along.z
    };
    c.is_positive()
}

fn riser(slot: i64) -> (Rational, Rational) {
    (Rational::int(-6 - slot * slot), Rational::int(slot))
}

fn at(x: &Rational, y: &Rational, z: &Rational) -> RatVec3 {
    RatVec3::new(x.clone(), y.clone(), z.clone())
}

/// The portal of the gluing after arc `k`, checking both sides agree.
fn portal_after(t: &BorromeanTemplate, seq: &ArcSequence, k: usize) -> Result<Portal> {
    let table = standard_gluing_table();
    let n = seq.arcs.len();
    let a = &seq.arcs[k];
    let b = &seq.arcs[(k + 1) % n];
    let mismatch = Error::EndpointMismatch {
        rod: seq.rod_index,
        arc: k,
    };
    let (partner, shift) = table.lookup(a.exit);
    if partner != b.entry || &a.end + &shift != b.start {
        return Err(mismatch);
    }
    let out = t.chart(&a.exit, &a.end);
    if out != t.chart(&b.entry, &b.start) {
        return Err(mismatch);
    }
    Ok(out)
}

fn route(t: &BorromeanTemplate, seqs: &[ArcSequence], salt: i64) -> Result<Vec<SpatialCurve>> {
    let total: usize = seqs.iter().map(|s| s.arcs.len()).sum();
    let mut g = 0i64;
    let mut curves = Vec::with_capacity(seqs.len());
    for seq in seqs {
        let n = seq.arcs.len();
        let portals: Vec<Portal> = (0..n).map(|k| portal_after(t, seq, k)).collect::<Result<_>>()?;
        // (height leaving arc k, height entering arc k+1) signs
        let up: Vec<Option<bool>> = (0..n)
            .map(|k| portals[k].disc.map(|_| crosses_positively(seq, k)))
            .collect();
        let mut poly = Vec::with_capacity(4 * n);
        for k in 0..n {
            let gi = g + k as i64;
            let before = &up[(k + n - 1) % n];
            let after = &up[k];
            let z_in = Rational::int(2 * gi + 2) * Rational::int(if *before == Some(false) { -1 } else { 1 });
            let z_out = Rational::int(2 * gi + 3) * Rational::int(if *after == Some(true) { -1 } else { 1 });
            let p_in = &portals[(k + n - 1) % n];
            let p_out = &portals[k];
            let (ox, oy) = riser(gi + 1 + salt * total as i64);
            poly.push(at(&p_in.x, &p_in.y, &z_in));
            poly.push(at(&ox, &oy, &z_in));
            poly.push(at(&ox, &oy, &z_out));
            poly.push(at(&p_out.x, &p_out.y, &z_out));
        }
        g += n as i64;
        curves.push(SpatialCurve {
            name: format!("R{}", seq.rod_index + 1),
            polyline: poly,
        });
    }
    Ok(curves)
}

/// Exact test for a common point of two closed segments in space.
pub fn segments_meet(p0: &RatVec3, p1: &RatVec3, q0: &RatVec3, q1: &RatVec3) -> bool {
    let u = p1 - p0;
    let v = q1 - q0;
    let w = q0 - p0;
    let n = u.cross(&v);
    let zero = Rational::zero();
    let one = Rational::one();
    if n == RatVec3::zero() {
        if w.cross(&u) != RatVec3::zero() {
            return false;
        }
        // collinear: compare parameter intervals along u
        let uu = u.dot(&u);
        let a = w.dot(&u) / &uu;
        let b = (q1 - p0).dot(&u) / &uu;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        return hi >= zero && lo <= one;
    }
    if !w.dot(&n).is_zero() {
        return false;
    }
    let nn = n.dot(&n);
    let t = w.cross(&v).dot(&n) / &nn;
    let s = w.cross(&u).dot(&n) / &nn;
    t >= zero && t <= one && s >= zero && s <= one
}

/// Any two curves (or non-adjacent pieces of one curve) touching?
pub fn curves_collide(curves: &[SpatialCurve]) -> bool {
    let segs: Vec<(usize, usize, &RatVec3, &RatVec3)> = curves
        .iter()
        .enumerate()
        .flat_map(|(c, curve)| curve.segments().enumerate().map(move |(i, (a, b))| (c, i, a, b)))
        .collect();
    for (x, &(c1, i1, a1, b1)) in segs.iter().enumerate() {
        for &(c2, i2, a2, b2) in &segs[x + 1..] {
            if c1 == c2 {
                let n = curves[c1].polyline.len();
                if i2 == i1 + 1 || (i1 == 0 && i2 == n - 1) {
                    continue;
                }
            }
            if segments_meet(a1, b1, a2, b2) {
                return true;
            }
        }
    }
    false
}

pub fn map_arcs(t: &BorromeanTemplate, seqs: &[ArcSequence]) -> Result<Vec<SpatialCurve>> {
    for salt in 0..RISER_SALTS {
        let curves = route(t, seqs, salt)?;
        if !curves_collide(&curves) {
            return Ok(curves);
        }
    }
    Err(Error::RoutingFailed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::segment_rod;
    use crate::geometry::Rod;
    use crate::template::load_template;
    use crate::vector::{pt, IntVec3};

    #[test]
    fn meet_cases() {
        let o = RatVec3::zero();
        let x = RatVec3::from_ints(2, 0, 0);
        let y0 = RatVec3::from_ints(1, -1, 0);
        let y1 = RatVec3::from_ints(1, 1, 0);
        assert!(segments_meet(&o, &x, &y0, &y1));
        let lifted0 = RatVec3::from_ints(1, -1, 1);
        let lifted1 = RatVec3::from_ints(1, 1, 1);
        assert!(!segments_meet(&o, &x, &lifted0, &lifted1));
        let far = RatVec3::from_ints(3, 0, 0);
        let farther = RatVec3::from_ints(4, 0, 0);
        assert!(!segments_meet(&o, &x, &far, &farther));
        assert!(segments_meet(&o, &far, &x, &farther));
    }

    #[test]
    fn empty_input() {
        assert!(map_arcs(&load_template(), &[]).unwrap().is_empty());
    }

    #[test]
    fn vertical_rod_curve() {
        let r = Rod::new(IntVec3::new(0, 0, 1), pt((1, 4), (1, 4), (0, 1)));
        let s = segment_rod(&r, 0).unwrap();
        let c = map_arcs(&load_template(), &[s]).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].polyline.len(), 8);
        assert!(c[0].is_well_formed());
    }
}

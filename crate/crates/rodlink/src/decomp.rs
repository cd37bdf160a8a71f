//! The cube sliced at z = 1/2 into two boxes, each an ideal octahedron once the
//! standard rods are removed, and the cutting of rods into arcs inside them.

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geometry::{rods_intersect, standard_index, standard_rods, validate_packing, Rod, RodPacking};
use crate::rational::{q, Rational};
use crate::vector::{IntVec3, RatVec3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Half {
    /// z in [1/2, 1]
    Upper,
    /// z in [0, 1/2]
    Lower,
}

impl Half {
    pub fn name(self) -> &'static str {
        match self {
            Half::Upper => "Upper",
            Half::Lower => "Lower",
        }
    }
}

/// White faces lie on z = 0 (B, Cbar) and z = 1/2 (A, Dbar). Pink faces are
/// x = 0 / x = 1, green faces y = 0 / y = 1; the digit records which side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FaceKind {
    A,
    B,
    Cbar,
    Dbar,
    Pink0,
    Pink1,
    Green0,
    Green1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceLabel {
    pub kind: FaceKind,
    pub half: Half,
}

impl FaceLabel {
    pub const fn new(kind: FaceKind, half: Half) -> FaceLabel {
        FaceLabel { kind, half }
    }

    pub fn is_white(&self) -> bool {
        matches!(self.kind, FaceKind::A | FaceKind::B | FaceKind::Cbar | FaceKind::Dbar)
    }

    pub fn is_pink(&self) -> bool {
        matches!(self.kind, FaceKind::Pink0 | FaceKind::Pink1)
    }

    pub fn is_green(&self) -> bool {
        matches!(self.kind, FaceKind::Green0 | FaceKind::Green1)
    }

    /// White face on an integer z level (as opposed to the slicing plane).
    pub fn is_outer_white(&self) -> bool {
        matches!(self.kind, FaceKind::B | FaceKind::Cbar)
    }

    pub fn name(&self) -> String {
        let upper = self.half == Half::Upper;
        let base = match self.kind {
            FaceKind::A => "A".to_string(),
            FaceKind::B => "B".to_string(),
            FaceKind::Cbar => "Cbar".to_string(),
            FaceKind::Dbar => "Dbar".to_string(),
            FaceKind::Pink0 | FaceKind::Pink1 => {
                let side = if self.kind == FaceKind::Pink0 { 0 } else { 1 };
                format!("{}.{side}", if upper { "F_pink" } else { "Crown_pink" })
            }
            FaceKind::Green0 | FaceKind::Green1 => {
                let side = if self.kind == FaceKind::Green0 { 0 } else { 1 };
                format!("{}.{side}", if upper { "G_green" } else { "Crown_green" })
            }
        };
        format!("{base}@{}", self.half.name())
    }
}

impl fmt::Display for FaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for FaceLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

pub fn all_faces() -> Vec<FaceLabel> {
    use FaceKind::*;
    let mut v = Vec::with_capacity(16);
    for half in [Half::Upper, Half::Lower] {
        for kind in [A, B, Cbar, Dbar, Pink0, Pink1, Green0, Green1] {
            v.push(FaceLabel::new(kind, half));
        }
    }
    v
}

#[derive(Clone, Debug)]
pub struct GluingTable {
    entries: Vec<(FaceLabel, FaceLabel, IntVec3)>,
}

impl GluingTable {
    pub fn lookup(&self, f: FaceLabel) -> (FaceLabel, IntVec3) {
        self.entries
            .iter()
            .find(|e| e.0 == f)
            .map(|e| (e.1, e.2))
            .expect("every face is glued")
    }

    pub fn partner(&self, f: FaceLabel) -> FaceLabel {
        self.lookup(f).0
    }

    /// Carries a point of `f` onto the glued partner face.
    pub fn translation(&self, f: FaceLabel) -> IntVec3 {
        self.lookup(f).1
    }

    fn check(&self) -> std::result::Result<(), String> {
        let faces = all_faces();
        if self.entries.len() != faces.len() {
            return Err("table must list each face once".into());
        }
        for f in faces {
            let (g, t) = self.lookup(f);
            if g == f {
                return Err(format!("{f} glued to itself"));
            }
            let (back, u) = self.lookup(g);
            if back != f || u != -t {
                return Err(format!("{f} and {g} are not a pair"));
            }
            let unit = t.abs().coords().iter().sum::<i64>();
            if unit > 1 {
                return Err(format!("{f}: translation {t} is not a unit step"));
            }
            if f.is_white() != g.is_white() || (f.is_white() && f.half == g.half) {
                return Err(format!("white {f} must glue across the slice"));
            }
            if !f.is_white() && f.half != g.half {
                return Err(format!("shaded {f} must glue within its box"));
            }
        }
        Ok(())
    }
}

pub fn standard_gluing_table() -> GluingTable {
    use FaceKind::*;
    let mut entries = Vec::new();
    let mut pair = |f: FaceLabel, g: FaceLabel, t: IntVec3| {
        entries.push((f, g, t));
        entries.push((g, f, -t));
    };
    for kind in [B, Cbar] {
        pair(
            FaceLabel::new(kind, Half::Upper),
            FaceLabel::new(kind, Half::Lower),
            IntVec3::new(0, 0, -1),
        );
    }
    for kind in [A, Dbar] {
        pair(
            FaceLabel::new(kind, Half::Upper),
            FaceLabel::new(kind, Half::Lower),
            IntVec3::new(0, 0, 0),
        );
    }
    for half in [Half::Upper, Half::Lower] {
        pair(
            FaceLabel::new(Pink1, half),
            FaceLabel::new(Pink0, half),
            IntVec3::new(-1, 0, 0),
        );
        pair(
            FaceLabel::new(Green1, half),
            FaceLabel::new(Green0, half),
            IntVec3::new(0, -1, 0),
        );
    }
    let table = GluingTable { entries };
    if let Err(e) = table.check() {
        panic!("gluing table corrupt: {e}");
    }
    table
}

/// Face of `p` within the box `half`, or `None` when `p` is not in the
/// interior of exactly one face.
pub fn face_of(p: &RatVec3, half: Half) -> Option<FaceLabel> {
    let zero = Rational::zero();
    let one = Rational::one();
    let h = Rational::half();
    let (bottom, top) = match half {
        Half::Upper => (h.clone(), one.clone()),
        Half::Lower => (zero.clone(), h.clone()),
    };
    let mut hits = Vec::new();
    if p.x == zero {
        hits.push(FaceKind::Pink0);
    }
    if p.x == one {
        hits.push(FaceKind::Pink1);
    }
    if p.y == zero {
        hits.push(FaceKind::Green0);
    }
    if p.y == one {
        hits.push(FaceKind::Green1);
    }
    let on_slice = (half == Half::Upper && p.z == bottom) || (half == Half::Lower && p.z == top);
    let on_outer = (half == Half::Upper && p.z == top) || (half == Half::Lower && p.z == bottom);
    if on_slice {
        if p.x == h {
            return None;
        }
        hits.push(if p.x > h { FaceKind::A } else { FaceKind::Dbar });
    }
    if on_outer {
        if p.y == h {
            return None;
        }
        hits.push(if p.y > h { FaceKind::B } else { FaceKind::Cbar });
    }
    let inside = |c: &Rational, lo: &Rational, hi: &Rational| c >= lo && c <= hi;
    if hits.len() != 1 || !inside(&p.x, &zero, &one) || !inside(&p.y, &zero, &one) || !inside(&p.z, &bottom, &top) {
        return None;
    }
    Some(FaceLabel::new(hits[0], half))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub start: RatVec3,
    pub end: RatVec3,
    pub entry: FaceLabel,
    pub exit: FaceLabel,
    #[serde(skip)]
    pub rod_index: usize,
}

impl Arc {
    pub fn half(&self) -> Half {
        self.entry.half
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcSequence {
    pub rod_index: usize,
    pub arcs: Vec<Arc>,
}

impl ArcSequence {
    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Exit of each arc glues onto the entry of the next, points included.
    pub fn is_closed_under(&self, table: &GluingTable) -> bool {
        let n = self.arcs.len();
        (0..n).all(|i| {
            let a = &self.arcs[i];
            let b = &self.arcs[(i + 1) % n];
            let (partner, t) = table.lookup(a.exit);
            partner == b.entry && &a.end + &t == b.start
        })
    }
}

/// Plane crossings of one period of the rod: (parameter, axis, level).
fn crossings(r: &Rod) -> Vec<(Rational, usize)> {
    let d = r.direction.coords();
    let mut out = Vec::new();
    for i in 0..3 {
        if d[i] == 0 {
            continue;
        }
        // x and y are cut at integers, z at half-integers
        let step = if i == 2 { q(1, 2) } else { Rational::one() };
        let p = r.basepoint.coord(i);
        let lo = p.clone().min(p + Rational::int(d[i]));
        let hi = p.clone().max(p + Rational::int(d[i]));
        let mut m = (&lo / &step).floor_i64();
        loop {
            let level = Rational::int(m) * &step;
            if level > hi {
                break;
            }
            let t = (&level - p) / Rational::int(d[i]);
            if !t.is_negative() && t < Rational::one() {
                out.push((t, i));
            }
            m += 1;
        }
    }
    out.sort();
    out
}

fn is_half_integer(c: &Rational) -> bool {
    (c * Rational::int(2)).is_integer()
}

fn degenerate(r: &Rod, rod: usize, point: RatVec3) -> Error {
    Error::DegeneratePosition {
        rod,
        point: Box::new(point),
        suggestion: Box::new(suggested_shift(r)),
    }
}

/// Translation by (1/N, 1/N', 0) with primes beyond every basepoint denominator.
pub fn suggested_shift(r: &Rod) -> RatVec3 {
    let max_den = r
        .basepoint
        .coords()
        .iter()
        .map(|c| c.denom().to_u64().unwrap_or(u64::MAX / 4))
        .max()
        .unwrap_or(1)
        .max(2);
    let n1 = next_prime(max_den + 1);
    let n2 = next_prime(n1 + 1);
    RatVec3::new(
        Rational::new(1, n1 as i64),
        Rational::new(1, n2 as i64),
        Rational::zero(),
    )
}

fn next_prime(mut n: u64) -> u64 {
    let is_prime = |k: u64| k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| !k.is_multiple_of(d));
    while !is_prime(n) {
        n += 1;
    }
    n
}

/// Rejects rods lying in a slicing plane or hitting an edge of a face.
pub fn check_general_position(r: &Rod, rod: usize) -> Result<()> {
    let d = r.direction.coords();
    let p = &r.basepoint;
    for i in 0..3 {
        let c = p.coord(i);
        let in_plane = if i == 2 { is_half_integer(c) } else { c.is_integer() };
        if d[i] == 0 && in_plane {
            return Err(degenerate(r, rod, p.clone()));
        }
    }
    for (t, axis) in crossings(r) {
        let x = r.point_at(&t);
        let bad = match axis {
            0 => x.y.is_integer() || is_half_integer(&x.z),
            1 => x.x.is_integer() || is_half_integer(&x.z),
            _ => {
                let offset = if x.z.is_integer() { &x.y } else { &x.x };
                x.x.is_integer() || x.y.is_integer() || (offset - Rational::half()).is_integer()
            }
        };
        if bad {
            return Err(degenerate(r, rod, x));
        }
    }
    Ok(())
}

pub fn segment_rod(r: &Rod, rod: usize) -> Result<ArcSequence> {
    check_general_position(r, rod)?;
    let events: Vec<Rational> = crossings(r).into_iter().map(|(t, _)| t).collect();
    let n = events.len();
    let mut arcs = Vec::with_capacity(n);
    for k in 0..n {
        let t0 = events[k].clone();
        let t1 = if k + 1 < n {
            events[k + 1].clone()
        } else {
            &events[0] + Rational::one()
        };
        let mid = r.point_at(&((&t0 + &t1) / Rational::int(2)));
        let cell = mid.floor();
        let half = if (&mid.z - Rational::int(cell.c)) >= Rational::half() {
            Half::Upper
        } else {
            Half::Lower
        };
        let start = &r.point_at(&t0) - &cell;
        let end = &r.point_at(&t1) - &cell;
        let face = |p: &RatVec3| face_of(p, half).ok_or_else(|| degenerate(r, rod, p.clone()));
        arcs.push(Arc {
            entry: face(&start)?,
            exit: face(&end)?,
            start,
            end,
            rod_index: rod,
        });
    }
    Ok(ArcSequence { rod_index: rod, arcs })
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub sequences: Vec<ArcSequence>,
    /// (rod index, standard rod index) for rods that are standard rods.
    pub skipped: Vec<(usize, usize)>,
}

impl Decomposition {
    /// Standard rods (0 = x, 1 = y, 2 = z) present in the packing.
    pub fn present_standard(&self) -> [bool; 3] {
        let mut v = [false; 3];
        for &(_, s) in &self.skipped {
            v[s] = true;
        }
        v
    }
}

pub fn decompose_packing(p: &RodPacking) -> Result<Decomposition> {
    let report = validate_packing(p);
    if !report.ok {
        let codes: Vec<&str> = report.failures.iter().map(|f| f.code.as_str()).collect();
        return Err(Error::InvalidPacking(codes.join(",")));
    }
    let std = standard_rods();
    let mut sequences = Vec::new();
    let mut skipped = Vec::new();
    for (i, r) in p.rods.iter().enumerate() {
        if let Some(s) = standard_index(r) {
            skipped.push((i, s));
            continue;
        }
        if std.iter().any(|s| rods_intersect(s, r)) {
            return Err(Error::IntersectsStandardRods(i));
        }
        sequences.push(segment_rod(r, i)?);
    }
    Ok(Decomposition { sequences, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::pt;

    #[test]
    fn table_is_involution() {
        let t = standard_gluing_table();
        for f in all_faces() {
            assert_eq!(t.partner(t.partner(f)), f);
        }
        let f = FaceLabel::new(FaceKind::Pink1, Half::Upper);
        assert_eq!(
            t.lookup(f),
            (FaceLabel::new(FaceKind::Pink0, Half::Upper), IntVec3::new(-1, 0, 0))
        );
        let b = FaceLabel::new(FaceKind::B, Half::Upper);
        assert_eq!(
            t.lookup(b),
            (FaceLabel::new(FaceKind::B, Half::Lower), IntVec3::new(0, 0, -1))
        );
    }

    #[test]
    fn face_names() {
        assert_eq!(FaceLabel::new(FaceKind::B, Half::Upper).to_string(), "B@Upper");
        assert_eq!(
            FaceLabel::new(FaceKind::Green1, Half::Lower).to_string(),
            "Crown_green.1@Lower"
        );
    }

    #[test]
    fn vertical_rod() {
        let r = Rod::new(IntVec3::new(0, 0, 1), pt((1, 4), (1, 4), (0, 1)));
        let s = segment_rod(&r, 0).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.arcs[0].half(), Half::Lower);
        assert_eq!(s.arcs[1].half(), Half::Upper);
        assert_eq!(s.arcs[0].end, pt((1, 4), (1, 4), (1, 2)));
        assert_eq!(s.arcs[0].exit.kind, FaceKind::Dbar);
    }

    #[test]
    fn rod_in_slicing_plane_is_degenerate() {
        let r = Rod::new(IntVec3::new(1, 2, 0), pt((0, 1), (1, 8), (1, 2)));
        let e = segment_rod(&r, 3).unwrap_err();
        assert_eq!(e.code(), "DEGENERATE_POSITION");
        match e {
            Error::DegeneratePosition { rod, suggestion, .. } => {
                assert_eq!(rod, 3);
                assert_eq!(*suggestion, pt((1, 11), (1, 13), (0, 1)));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn rod_through_edge_is_degenerate() {
        // meets the vertical edge x = y = 0
        let r = Rod::new(IntVec3::new(1, 1, 1), pt((0, 1), (0, 1), (1, 3)));
        assert!(segment_rod(&r, 0).is_err());
    }
}

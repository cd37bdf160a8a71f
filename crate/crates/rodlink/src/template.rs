//! Fixed rational model of the Borromean rings and their spanning discs.
//!
//! Each ring lies over the boundary of an axis-parallel square in the plane,
//! the three squares overlapping like a Venn diagram so the vertical
//! projection is the usual six-crossing picture. Heights are +-1/2 near the
//! crossings (over/under, cyclically) and 0 elsewhere. Each ring bounds the
//! cone from its square's centre, a disc that is the graph of a function over
//! the square. Faces of the octahedra are charted into parts of the plane:
//! shaded and outer white faces into the part of a square covered by no other
//! square (so a vertical line there meets exactly one disc), slicing-plane
//! faces into a region far from all squares.

use crate::decomp::FaceLabel;
use crate::rational::{q, Rational};
use crate::vector::RatVec3;

pub const COMPONENT_NAMES: [&str; 3] = ["C_x", "C_y", "C_z"];

/// Closed polyline; the last point joins back to the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialCurve {
    pub name: String,
    pub polyline: Vec<RatVec3>,
}

impl SpatialCurve {
    pub fn segments(&self) -> impl Iterator<Item = (&RatVec3, &RatVec3)> + '_ {
        let n = self.polyline.len();
        (0..n).map(move |i| (&self.polyline[i], &self.polyline[(i + 1) % n]))
    }

    pub fn is_well_formed(&self) -> bool {
        self.polyline.len() >= 2 && self.segments().all(|(a, b)| a != b)
    }
}

/// Axis-parallel rectangle [x0,x1] x [y0,y1] of the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rect {
    pub x0: Rational,
    pub y0: Rational,
    pub x1: Rational,
    pub y1: Rational,
}

impl Rect {
    fn new(x0: Rational, y0: Rational, x1: Rational, y1: Rational) -> Rect {
        Rect { x0, y0, x1, y1 }
    }

    fn ints(x0: i64, y0: i64, x1: i64, y1: i64) -> Rect {
        Rect::new(x0.into(), y0.into(), x1.into(), y1.into())
    }

    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        *x >= self.x0 && *x <= self.x1 && *y >= self.y0 && *y <= self.y1
    }

    pub fn contains_open(&self, x: &Rational, y: &Rational) -> bool {
        *x > self.x0 && *x < self.x1 && *y > self.y0 && *y < self.y1
    }

    /// Affine image of (u, v) in the unit square.
    fn at(&self, u: &Rational, v: &Rational) -> (Rational, Rational) {
        (
            &self.x0 + u * (&self.x1 - &self.x0),
            &self.y0 + v * (&self.y1 - &self.y0),
        )
    }

    fn corners(&self) -> [(Rational, Rational); 4] {
        [
            (self.x0.clone(), self.y0.clone()),
            (self.x1.clone(), self.y0.clone()),
            (self.x1.clone(), self.y1.clone()),
            (self.x0.clone(), self.y1.clone()),
        ]
    }
}

/// Where a face point lands: a vertical line through `(x, y)`. When `disc` is
/// set the line pierces exactly that disc and nothing else of the template.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Portal {
    pub x: Rational,
    pub y: Rational,
    pub disc: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct BorromeanTemplate {
    pub components: [SpatialCurve; 3],
    pub squares: [Rect; 3],
    /// Chart targets for the shaded / outer white faces, one per disc.
    pub windows: [Rect; 3],
    /// Chart target for the slicing-plane faces.
    pub neutral: Rect,
    /// Everything of the template lies in this box (in the plane) and
    /// within |z| <= `slab`.
    pub extent: Rect,
    pub slab: Rational,
}

fn ring(square: &Rect, marks: &[((i64, i64), i64)]) -> Vec<RatVec3> {
    let eps = q(1, 4);
    let half = q(1, 2);
    let corners = square.corners();
    let mut out = Vec::new();
    for k in 0..4 {
        let (ax, ay) = &corners[k];
        let (bx, by) = &corners[(k + 1) % 4];
        out.push(RatVec3::new(ax.clone(), ay.clone(), Rational::zero()));
        // marks strictly inside this edge, ordered along it
        let mut on_edge: Vec<(Rational, Rational, Rational, i64)> = marks
            .iter()
            .filter_map(|&((mx, my), over)| {
                let (mx, my) = (Rational::int(mx), Rational::int(my));
                let t = if ax == bx && mx == *ax {
                    (&my - ay) / (by - ay)
                } else if ay == by && my == *ay {
                    (&mx - ax) / (bx - ax)
                } else {
                    return None;
                };
                (t.is_positive() && t < Rational::one()).then_some((t, mx, my, over))
            })
            .collect();
        on_edge.sort();
        let (dx, dy) = ((bx - ax).signum(), (by - ay).signum());
        for (_, mx, my, over) in on_edge {
            let h = &half * Rational::int(over);
            let step_x = &eps * Rational::int(dx as i64);
            let step_y = &eps * Rational::int(dy as i64);
            out.push(RatVec3::new(&mx - &step_x, &my - &step_y, h.clone()));
            out.push(RatVec3::new(&mx + &step_x, &my + &step_y, h));
        }
    }
    out
}

pub fn load_template() -> BorromeanTemplate {
    let squares = [Rect::ints(0, 0, 6, 6), Rect::ints(4, 2, 10, 8), Rect::ints(2, 4, 8, 10)];
    // crossing points with +1 where this ring is over, -1 where under
    let marks: [Vec<((i64, i64), i64)>; 3] = [
        vec![((6, 2), 1), ((4, 6), 1), ((6, 4), -1), ((2, 6), -1)],
        vec![((6, 2), -1), ((4, 6), -1), ((4, 4), 1), ((8, 8), 1)],
        vec![((4, 4), -1), ((8, 8), -1), ((6, 4), 1), ((2, 6), 1)],
    ];
    let components = [0, 1, 2].map(|i| SpatialCurve {
        name: COMPONENT_NAMES[i].to_string(),
        polyline: ring(&squares[i], &marks[i]),
    });
    let windows = [
        Rect::new(q(1, 2), q(1, 2), q(7, 2), q(7, 2)),
        Rect::new(q(13, 2), q(5, 2), q(19, 2), q(7, 2)),
        Rect::new(q(5, 2), q(17, 2), q(15, 2), q(19, 2)),
    ];
    let t = BorromeanTemplate {
        components,
        squares,
        windows,
        neutral: Rect::ints(20, 20, 24, 24),
        extent: Rect::ints(0, 0, 10, 10),
        slab: q(1, 2),
    };
    if let Err(e) = t.check() {
        panic!("Borromean template corrupt: {e}");
    }
    t
}

impl BorromeanTemplate {
    /// Index of the disc a face's portal pierces: pink faces pierce the
    /// x ring's disc, green the y ring's, outer white the z ring's.
    pub fn disc_for(face: &FaceLabel) -> Option<usize> {
        if face.is_pink() {
            Some(0)
        } else if face.is_green() {
            Some(1)
        } else if face.is_outer_white() {
            Some(2)
        } else {
            None
        }
    }

    /// Chart of a point `p` on face `face` of its box.
    pub fn chart(&self, face: &FaceLabel, p: &RatVec3) -> Portal {
        let disc = Self::disc_for(face);
        let (u, v) = match disc {
            Some(0) => (&p.y, &p.z),
            Some(1) => (&p.x, &p.z),
            _ => (&p.x, &p.y),
        };
        let target = match disc {
            Some(i) => &self.windows[i],
            None => &self.neutral,
        };
        let (x, y) = target.at(u, v);
        Portal { x, y, disc }
    }

    /// Height of disc `i` above the point (x, y) of its square.
    pub fn disc_height(&self, i: usize, x: &Rational, y: &Rational) -> Option<Rational> {
        let sq = &self.squares[i];
        if !sq.contains(x, y) {
            return None;
        }
        let cx = (&sq.x0 + &sq.x1) / Rational::int(2);
        let cy = (&sq.y0 + &sq.y1) / Rational::int(2);
        let ring = &self.components[i].polyline;
        let n = ring.len();
        for k in 0..n {
            let a = &ring[k];
            let b = &ring[(k + 1) % n];
            // barycentric coordinates in the triangle (centre, a, b)
            let (e1x, e1y) = (&a.x - &cx, &a.y - &cy);
            let (e2x, e2y) = (&b.x - &cx, &b.y - &cy);
            let (px, py) = (x - &cx, y - &cy);
            let det = &e1x * &e2y - &e1y * &e2x;
            if det.is_zero() {
                continue;
            }
            let s = (&px * &e2y - &py * &e2x) / &det;
            let t = (&e1x * &py - &e1y * &px) / &det;
            if !s.is_negative() && !t.is_negative() && &s + &t <= Rational::one() {
                return Some(&s * &a.z + &t * &b.z);
            }
        }
        None
    }

    fn check(&self) -> Result<(), String> {
        for c in &self.components {
            if !c.is_well_formed() {
                return Err(format!("{} is not a closed polyline", c.name));
            }
            for p in &c.polyline {
                if p.z.abs() > self.slab || !self.extent.contains(&p.x, &p.y) {
                    return Err(format!("{} leaves the template box", c.name));
                }
            }
        }
        for (i, w) in self.windows.iter().enumerate() {
            for (x, y) in w.corners() {
                if !self.squares[i].contains_open(&x, &y) {
                    return Err(format!("window {i} leaves its square"));
                }
                for (j, sq) in self.squares.iter().enumerate() {
                    if j != i && sq.contains(&x, &y) {
                        return Err(format!("window {i} overlaps square {j}"));
                    }
                }
            }
        }
        let n = &self.neutral;
        if n.x0 <= self.extent.x1 && n.y0 <= self.extent.y1 {
            return Err("neutral region overlaps the template".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{FaceKind, Half};
    use crate::vector::pt;

    #[test]
    fn rings_have_height_marks() {
        let t = load_template();
        for c in &t.components {
            // 4 corners + 2 vertices per crossing mark
            assert_eq!(c.polyline.len(), 12, "{}", c.name);
        }
    }

    #[test]
    fn disc_height_is_bounded_and_zero_at_centre() {
        let t = load_template();
        assert_eq!(
            t.disc_height(0, &Rational::int(3), &Rational::int(3)),
            Some(Rational::zero())
        );
        let h = t.disc_height(1, &q(13, 2), &q(5, 2)).unwrap();
        assert!(h.abs() <= q(1, 2));
        assert_eq!(t.disc_height(2, &Rational::zero(), &Rational::zero()), None);
    }

    #[test]
    fn glued_points_share_a_chart() {
        let t = load_template();
        let up = FaceLabel::new(FaceKind::B, Half::Upper);
        let down = FaceLabel::new(FaceKind::B, Half::Lower);
        let a = t.chart(&up, &pt((1, 3), (2, 3), (1, 1)));
        let b = t.chart(&down, &pt((1, 3), (2, 3), (0, 1)));
        assert_eq!(a, b);
        assert_eq!(a.disc, Some(2));
        let slice = t.chart(&FaceLabel::new(FaceKind::A, Half::Upper), &pt((5, 6), (1, 6), (1, 2)));
        assert_eq!(slice.disc, None);
    }
}

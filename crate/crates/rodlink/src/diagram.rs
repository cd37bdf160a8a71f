//! Planar diagrams of the template plus rod images: crossings, PD code,
//! linking numbers, Dehn fillings and export.

use serde::Serialize;

use crate::decomp::decompose_packing;
use crate::error::{Error, Result};
use crate::geometry::{RodPacking, Slope};
use crate::rational::{q, Rational};
use crate::route::map_arcs;
use crate::template::{BorromeanTemplate, SpatialCurve, COMPONENT_NAMES};
use crate::vector::RatVec3;

/// Viewing directions (dx, dz, 1) tried in order; a point p projects to
/// (p.x - dx p.z, p.y - dy p.z) and larger z is nearer the viewer.
pub fn projection_directions() -> Vec<(Rational, Rational)> {
    vec![
        (q(1, 97), q(1, 89)),
        (q(1, 3), q(-1, 5)),
        (q(-2, 7), q(1, 4)),
        (q(1, 11), q(3, 13)),
        (q(-1, 17), q(-1, 19)),
        (q(3, 5), q(2, 7)),
        (q(-1, 2), q(-1, 3)),
        (q(1, 23), q(-2, 29)),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Strand {
    pub component: usize,
    pub segment: usize,
    pub param: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    pub over: Strand,
    pub under: Strand,
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkDiagram {
    pub components: Vec<String>,
    pub crossings: Vec<Crossing>,
    pub pd_code: Vec<[i64; 4]>,
    /// Index into [`projection_directions`] actually used.
    pub projection_index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct DehnFillingSpec {
    pub fillings: Vec<(String, Slope)>,
}

type P2 = (Rational, Rational);

fn project(p: &RatVec3, dir: &P2) -> P2 {
    (&p.x - &dir.0 * &p.z, &p.y - &dir.1 * &p.z)
}

fn cross2(a: &P2, b: &P2) -> Rational {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn sub2(a: &P2, b: &P2) -> P2 {
    (&a.0 - &b.0, &a.1 - &b.1)
}

struct Seg {
    comp: usize,
    idx: usize,
    a: P2,
    b: P2,
    za: Rational,
    zb: Rational,
}

enum Meet {
    None,
    Cross(Rational, Rational),
    Degenerate,
}

fn meet(s: &Seg, t: &Seg) -> Meet {
    let r = sub2(&s.b, &s.a);
    let u = sub2(&t.b, &t.a);
    let w = sub2(&t.a, &s.a);
    let den = cross2(&r, &u);
    let zero = Rational::zero();
    let one = Rational::one();
    if den.is_zero() {
        if !cross2(&w, &r).is_zero() {
            return Meet::None;
        }
        // collinear in the picture
        let rr = &r.0 * &r.0 + &r.1 * &r.1;
        let a = (&w.0 * &r.0 + &w.1 * &r.1) / &rr;
        let wb = sub2(&t.b, &s.a);
        let b = (&wb.0 * &r.0 + &wb.1 * &r.1) / &rr;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        return if hi < zero || lo > one {
            Meet::None
        } else {
            Meet::Degenerate
        };
    }
    let tp = cross2(&w, &u) / &den;
    let sp = cross2(&w, &r) / &den;
    if tp < zero || tp > one || sp < zero || sp > one {
        return Meet::None;
    }
    if tp == zero || tp == one || sp == zero || sp == one {
        return Meet::Degenerate;
    }
    Meet::Cross(tp, sp)
}

fn lerp(a: &Rational, b: &Rational, t: &Rational) -> Rational {
    a + &(t * (b - a))
}

/// Crossings for one projection, or `None` if the picture is not generic.
fn crossings_for(curves: &[&SpatialCurve], dir: &P2) -> Option<Vec<Crossing>> {
    let mut segs = Vec::new();
    for (c, curve) in curves.iter().enumerate() {
        for (i, (a, b)) in curve.segments().enumerate() {
            let s = Seg {
                comp: c,
                idx: i,
                a: project(a, dir),
                b: project(b, dir),
                za: a.z.clone(),
                zb: b.z.clone(),
            };
            if s.a == s.b {
                return None;
            }
            segs.push(s);
        }
    }
    let mut out = Vec::new();
    let mut points: Vec<P2> = Vec::new();
    for (x, s) in segs.iter().enumerate() {
        for t in &segs[x + 1..] {
            let n = curves[s.comp].polyline.len();
            let adjacent = s.comp == t.comp && (t.idx == s.idx + 1 || (s.idx == 0 && t.idx == n - 1));
            if adjacent {
                // sharing a vertex; only folding back onto each other is bad
                let r = sub2(&s.b, &s.a);
                let u = sub2(&t.b, &t.a);
                if cross2(&r, &u).is_zero() {
                    return None;
                }
                continue;
            }
            match meet(s, t) {
                Meet::None => {}
                Meet::Degenerate => return None,
                Meet::Cross(ts, tt) => {
                    let hs = lerp(&s.za, &s.zb, &ts);
                    let ht = lerp(&t.za, &t.zb, &tt);
                    if hs == ht {
                        return None;
                    }
                    let at = (lerp(&s.a.0, &s.b.0, &ts), lerp(&s.a.1, &s.b.1, &ts));
                    points.push(at);
                    let (over, under, pos_o, pos_u) = if hs > ht { (s, t, ts, tt) } else { (t, s, tt, ts) };
                    let o = sub2(&over.b, &over.a);
                    let u = sub2(&under.b, &under.a);
                    let sign = if cross2(&o, &u).is_positive() { 1 } else { -1 };
                    out.push(Crossing {
                        over: Strand {
                            component: over.comp,
                            segment: over.idx,
                            param: pos_o,
                        },
                        under: Strand {
                            component: under.comp,
                            segment: under.idx,
                            param: pos_u,
                        },
                        sign,
                    });
                }
            }
        }
    }
    // no triple points
    points.sort();
    if points.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(out)
}

/// Labels strands between consecutive crossing passages along each component.
fn pd_code(ncomp: usize, crossings: &[Crossing]) -> Vec<[i64; 4]> {
    // passages per component: (segment, param, crossing, is_over)
    let mut passages: Vec<Vec<(usize, Rational, usize, bool)>> = vec![Vec::new(); ncomp];
    for (k, c) in crossings.iter().enumerate() {
        passages[c.over.component].push((c.over.segment, c.over.param.clone(), k, true));
        passages[c.under.component].push((c.under.segment, c.under.param.clone(), k, false));
    }
    // (incoming, outgoing) strand labels at each crossing, for over and under
    let mut over_io = vec![(0i64, 0i64); crossings.len()];
    let mut under_io = vec![(0i64, 0i64); crossings.len()];
    let mut next_label = 1i64;
    for list in passages.iter_mut() {
        list.sort();
        let m = list.len() as i64;
        for (pos, (_, _, k, is_over)) in list.iter().enumerate() {
            let pos = pos as i64;
            let incoming = next_label + (pos - 1).rem_euclid(m);
            let outgoing = next_label + pos;
            if *is_over {
                over_io[*k] = (incoming, outgoing);
            } else {
                under_io[*k] = (incoming, outgoing);
            }
        }
        next_label += m;
    }
    crossings
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let (ui, uo) = under_io[k];
            let (oi, oo) = over_io[k];
            if c.sign > 0 {
                [ui, oo, uo, oi]
            } else {
                [ui, oi, uo, oo]
            }
        })
        .collect()
}

/// Diagram of the template rings followed by `curves`, projected with the
/// first generic direction at or after `start`.
pub fn build_diagram(
    t: &BorromeanTemplate,
    curves: &[SpatialCurve],
    standard_present: [bool; 3],
    start: usize,
) -> Result<(LinkDiagram, DehnFillingSpec)> {
    let all: Vec<&SpatialCurve> = t.components.iter().chain(curves.iter()).collect();
    let dirs = projection_directions();
    let first = start % dirs.len();
    for idx in first..dirs.len() {
        let Some(crossings) = crossings_for(&all, &dirs[idx]) else {
            continue;
        };
        let pd = pd_code(all.len(), &crossings);
        let diagram = LinkDiagram {
            components: all.iter().map(|c| c.name.clone()).collect(),
            crossings,
            pd_code: pd,
            projection_index: idx,
        };
        let fillings = (0..3)
            .filter(|&i| !standard_present[i])
            .map(|i| (COMPONENT_NAMES[i].to_string(), Slope::longitude()))
            .collect();
        return Ok((diagram, DehnFillingSpec { fillings }));
    }
    Err(Error::NonGenericProjection(start))
}

pub fn linking_number(d: &LinkDiagram, i: usize, j: usize) -> Result<i64> {
    if i == j {
        return Err(Error::SameComponent(i));
    }
    let n = d.components.len();
    if i >= n || j >= n {
        return Err(Error::UnknownComponent(i.max(j)));
    }
    let sum: i64 = d
        .crossings
        .iter()
        .filter(|c| {
            let pair = (c.over.component, c.under.component);
            pair == (i, j) || pair == (j, i)
        })
        .map(|c| c.sign as i64)
        .sum();
    Ok(sum / 2)
}

/// Whole pipeline: decompose, map into the template, project.
pub fn diagram_for_packing(p: &RodPacking, start: usize) -> Result<(LinkDiagram, DehnFillingSpec)> {
    let decomposition = decompose_packing(p)?;
    let t = crate::template::load_template();
    let mut curves = map_arcs(&t, &decomposition.sequences)?;
    for (curve, seq) in curves.iter_mut().zip(&decomposition.sequences) {
        curve.name = p.labels[seq.rod_index].clone();
    }
    build_diagram(&t, &curves, decomposition.present_standard(), start)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    PdText,
}

#[derive(Serialize)]
struct FillingOut<'a> {
    component: &'a str,
    slope: [i64; 2],
}

#[derive(Serialize)]
struct DiagramOut<'a> {
    version: &'static str,
    components: &'a [String],
    pd_code: &'a [[i64; 4]],
    signs: Vec<i32>,
    fillings: Vec<FillingOut<'a>>,
}

pub const SCHEMA_VERSION: &str = "rodlink-diagram/1";

pub fn export(d: &LinkDiagram, f: &DehnFillingSpec, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Json => {
            let out = DiagramOut {
                version: SCHEMA_VERSION,
                components: &d.components,
                pd_code: &d.pd_code,
                signs: d.crossings.iter().map(|c| c.sign).collect(),
                fillings: f
                    .fillings
                    .iter()
                    .map(|(c, s)| FillingOut {
                        component: c,
                        slope: [s.p, s.q],
                    })
                    .collect(),
            };
            let mut bytes = serde_json::to_vec_pretty(&out).expect("diagram serializes");
            bytes.push(b'\n');
            bytes
        }
        ExportFormat::PdText => {
            let mut s = String::new();
            for [a, b, c, e] in &d.pd_code {
                s.push_str(&format!("{a} {b} {c} {e}\n"));
            }
            for (c, sl) in &f.fillings {
                s.push_str(&format!("fill {c} {} {}\n", sl.p, sl.q));
            }
            s.into_bytes()
        }
    }
}

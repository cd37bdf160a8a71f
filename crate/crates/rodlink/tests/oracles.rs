//! Independent oracles, written without the library's algorithms, checked
//! against the library on fixed and random inputs.

use proptest::prelude::*;
use rodlink::decomp::{segment_rod, Half};
use rodlink::diagram::{diagram_for_packing, linking_number};
use rodlink::geometry::{is_simple_closed, rods_intersect, standard_rods, Rod, RodPacking};
use rodlink::rational::{q, Rational};
use rodlink::vector::{pt, IntVec3, RatVec3};
use rodlink::{builtin_packing, decompose_packing, PackingName};

/// The open segment from 0 to (a,b,c) contains a lattice point.
fn has_interior_lattice_point(a: i64, b: i64, c: i64) -> bool {
    // the largest coordinate is integral only at parameters k/n
    let n = a.abs().max(b.abs()).max(c.abs());
    (1..n).any(|k| [a, b, c].iter().all(|&x| (x * k) % n == 0))
}

#[test]
fn simple_closed_matches_lattice_scan() {
    for a in -6i64..=6 {
        for b in -6i64..=6 {
            for c in -6i64..=6 {
                if (a, b, c) == (0, 0, 0) {
                    continue;
                }
                let closed = is_simple_closed(&IntVec3::new(a, b, c)).unwrap();
                assert_eq!(closed, !has_interior_lattice_point(a, b, c), "({a},{b},{c})");
            }
        }
    }
}

fn dot(u: &RatVec3, v: &RatVec3) -> Rational {
    &(&(&u.x * &v.x) + &(&u.y * &v.y)) + &(&u.z * &v.z)
}

fn cross(u: &RatVec3, v: &RatVec3) -> RatVec3 {
    RatVec3::new(
        &(&u.y * &v.z) - &(&u.z * &v.y),
        &(&u.z * &v.x) - &(&u.x * &v.z),
        &(&u.x * &v.y) - &(&u.y * &v.x),
    )
}

/// Line-line intersection in space via the normal of both directions, over a
/// lattice box twice as large as the library's.
fn intersect_oracle(r1: &Rod, r2: &Rod) -> bool {
    let d1 = r1.direction.to_rat();
    let d2 = r2.direction.to_rat();
    let n = cross(&d1, &d2);
    let nn = dot(&n, &n);
    let bound: Vec<i64> = (0..3)
        .map(|i| 2 * (r1.direction.coords()[i].abs() + r2.direction.coords()[i].abs() + 1))
        .collect();
    let one = Rational::one();
    for kx in -bound[0]..=bound[0] {
        for ky in -bound[1]..=bound[1] {
            for kz in -bound[2]..=bound[2] {
                let k = RatVec3::from_ints(kx, ky, kz);
                let w = &(&r2.basepoint + &k) - &r1.basepoint;
                if nn.is_zero() {
                    // parallel: w must be a multiple of d1 with parameter in [0,1)
                    if cross(&w, &d1) == RatVec3::zero() {
                        let t = dot(&w, &d1) / dot(&d1, &d1);
                        if !t.is_negative() && t < one {
                            return true;
                        }
                    }
                    continue;
                }
                if !dot(&w, &n).is_zero() {
                    continue;
                }
                let t = dot(&cross(&w, &d2), &n) / &nn;
                let s = dot(&cross(&w, &d1), &n) / &nn;
                if !t.is_negative() && t < one && !s.is_negative() && s < one {
                    return true;
                }
            }
        }
    }
    false
}

#[test]
fn diagonal_rods_meet_at_three_quarters() {
    let a = Rod::new(IntVec3::new(1, 1, 0), RatVec3::zero());
    let b = Rod::new(IntVec3::new(1, -1, 0), pt((1, 2), (0, 1), (0, 1)));
    // hand check: a at t = 3/4 and b at s = 1/4 agree modulo the lattice
    let pa = a.point_at(&q(3, 4));
    let pb = b.point_at(&q(1, 4));
    assert_eq!(pa, pt((3, 4), (3, 4), (0, 1)));
    assert!((&pa - &pb).is_integral());
    assert!(intersect_oracle(&a, &b));
    assert!(rods_intersect(&a, &b));
}

/// Plane hits of one period found by scanning a grid fine enough to contain
/// every hit parameter.
fn scan_hits(r: &Rod) -> Vec<(Rational, usize)> {
    let d = r.direction.coords();
    let mut den: i64 = 2;
    for i in 0..3 {
        let bd: i64 = r.basepoint.coords()[i].denom().try_into().unwrap();
        den = num_lcm(den, 2 * bd * d[i].abs().max(1));
    }
    let mut hits = Vec::new();
    for j in 0..den {
        let t = q(j, den);
        let p = r.point_at(&t);
        let two = Rational::int(2);
        if d[0] != 0 && p.x.is_integer() {
            hits.push((t.clone(), 0));
        }
        if d[1] != 0 && p.y.is_integer() {
            hits.push((t.clone(), 1));
        }
        if d[2] != 0 && (&p.z * &two).is_integer() {
            hits.push((t, 2));
        }
    }
    hits
}

fn num_lcm(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

#[test]
fn rod_in_lower_box_has_three_arcs() {
    let r = Rod::new(IntVec3::new(1, 2, 0), pt((0, 1), (1, 8), (1, 4)));
    let hits = scan_hits(&r);
    assert_eq!(hits.len(), 3);
    let seq = segment_rod(&r, 0).unwrap();
    assert_eq!(seq.len(), hits.len());
    // z stays at 1/4 < 1/2
    assert!(seq.arcs.iter().all(|a| a.half() == Half::Lower));
}

/// Coincidence with an axis rod by comparing transverse coordinates.
fn is_standard_line(r: &Rod) -> bool {
    let [a, b, c] = r.direction.coords();
    let frac = |x: &Rational| x.fract01();
    let p = &r.basepoint;
    match (a.abs(), b.abs(), c.abs()) {
        (1, 0, 0) => frac(&p.y) == q(1, 2) && frac(&p.z) == q(0, 1),
        (0, 1, 0) => frac(&p.x) == q(1, 2) && frac(&p.z) == q(1, 2),
        (0, 0, 1) => frac(&p.x) == q(0, 1) && frac(&p.y) == q(0, 1),
        _ => false,
    }
}

#[test]
fn plus_pi_keeps_three_rods() {
    let p = builtin_packing(PackingName::PlusPi);
    let expected: Vec<usize> = (0..p.len()).filter(|&i| !is_standard_line(&p.rods[i])).collect();
    assert_eq!(expected, vec![1, 3, 5]);
    let d = decompose_packing(&p).unwrap();
    let got: Vec<usize> = d.sequences.iter().map(|s| s.rod_index).collect();
    assert_eq!(got, expected);
    assert_eq!(d.skipped.len(), 3);
}

#[test]
fn linking_of_2_3_5_rod_from_crossings() {
    let r = Rod::new(IntVec3::new(2, 3, 5), pt((1, 7), (2, 7), (3, 7)));
    let p = RodPacking::standard_plus(&[r]);
    let (d, f) = diagram_for_packing(&p, 0).unwrap();
    let lk: Vec<i64> = (0..3).map(|i| linking_number(&d, 3, i).unwrap()).collect();
    assert_eq!(lk, vec![2, 3, 5]);
    assert!(f.fillings.is_empty());
}

#[test]
fn standard_plus_diagonal_has_four_components_no_fillings() {
    let r = Rod::new(IntVec3::new(1, 1, 1), pt((1, 3), (2, 3), (0, 1)));
    let (d, f) = diagram_for_packing(&RodPacking::standard_plus(&[r]), 0).unwrap();
    assert_eq!(d.components.len(), 4);
    assert!(f.fillings.is_empty());
}

fn small_rod() -> impl Strategy<Value = Rod> {
    let coord = (-3i64..=3, 1i64..=9).prop_map(|(n, d)| q(n, d));
    ((-3i64..=3, -3i64..=3, -3i64..=3), coord.clone(), coord.clone(), coord)
        .prop_filter("nonzero primitive", |((a, b, c), ..)| {
            let d = IntVec3::new(*a, *b, *c);
            !d.is_zero() && d.gcd() == 1
        })
        .prop_map(|((a, b, c), x, y, z)| Rod::new(IntVec3::new(a, b, c), RatVec3::new(x, y, z)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intersection_agrees_with_oracle(r1 in small_rod(), r2 in small_rod()) {
        prop_assert_eq!(rods_intersect(&r1, &r2), intersect_oracle(&r1, &r2));
    }

    #[test]
    fn standard_rods_meet_oracle(r in small_rod()) {
        for s in standard_rods() {
            prop_assert_eq!(rods_intersect(&s, &r), intersect_oracle(&s, &r));
        }
    }

    #[test]
    fn arcs_match_scanned_hits(r in small_rod()) {
        if let Ok(seq) = segment_rod(&r, 0) {
            let hits = scan_hits(&r);
            prop_assert_eq!(seq.len(), hits.len());
            // each arc starts where the scan saw a hit, in order
            for (arc, (t, _)) in seq.arcs.iter().zip(&hits) {
                let p = r.point_at(t);
                prop_assert!((&p - &arc.start).is_integral());
            }
        }
    }
}

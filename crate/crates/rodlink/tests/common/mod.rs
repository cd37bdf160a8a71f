//! Random rods for the property and acceptance suites.

#![allow(dead_code)]

use rand::Rng;
use rodlink::decomp::segment_rod;
use rodlink::geometry::{rods_intersect, standard_rods, Rod};
use rodlink::rational::q;
use rodlink::vector::{IntVec3, RatVec3};

/// Large prime denominators keep random rods off the cell walls.
const DENOMS: [i64; 3] = [1009, 1013, 1019];

pub fn random_direction<R: Rng>(rng: &mut R, bound: i64) -> IntVec3 {
    loop {
        let d = IntVec3::new(
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
        );
        if !d.is_zero() && d.gcd() == 1 {
            return d;
        }
    }
}

pub fn random_basepoint<R: Rng>(rng: &mut R) -> RatVec3 {
    let c = |rng: &mut R, d: i64| q(rng.gen_range(0..d), d);
    RatVec3::new(c(rng, DENOMS[0]), c(rng, DENOMS[1]), c(rng, DENOMS[2]))
}

/// A rod in general position with respect to the cell walls, redrawn until
/// it is.
pub fn general_rod<R: Rng>(rng: &mut R, bound: i64) -> Rod {
    loop {
        let r = Rod::new(random_direction(rng, bound), random_basepoint(rng));
        if segment_rod(&r, 0).is_ok() {
            return r;
        }
    }
}

/// Like [`general_rod`] and also disjoint from the standard rods.
pub fn extra_rod<R: Rng>(rng: &mut R, bound: i64) -> Rod {
    loop {
        let r = general_rod(rng, bound);
        if standard_rods().iter().all(|s| !rods_intersect(s, &r)) {
            return r;
        }
    }
}

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntVec3 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl IntVec3 {
    pub const fn new(a: i64, b: i64, c: i64) -> IntVec3 {
        IntVec3 { a, b, c }
    }

    pub fn coords(&self) -> [i64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn from_coords(v: [i64; 3]) -> IntVec3 {
        IntVec3::new(v[0], v[1], v[2])
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    pub fn gcd(&self) -> i64 {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn abs(&self) -> IntVec3 {
        IntVec3::new(self.a.abs(), self.b.abs(), self.c.abs())
    }

    pub fn cross(&self, o: &IntVec3) -> IntVec3 {
        IntVec3::new(
            self.b * o.c - self.c * o.b,
            self.c * o.a - self.a * o.c,
            self.a * o.b - self.b * o.a,
        )
    }

    pub fn to_rat(&self) -> RatVec3 {
        RatVec3::from_ints(self.a, self.b, self.c)
    }
}

impl Neg for IntVec3 {
    type Output = IntVec3;
    fn neg(self) -> IntVec3 {
        IntVec3::new(-self.a, -self.b, -self.c)
    }
}

impl fmt::Debug for IntVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl fmt::Display for IntVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct RatVec3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl RatVec3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> RatVec3 {
        RatVec3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> RatVec3 {
        RatVec3::new(x.into(), y.into(), z.into())
    }

    pub fn zero() -> RatVec3 {
        RatVec3::default()
    }

    pub fn coord(&self, i: usize) -> &Rational {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("coordinate index {i}"),
        }
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn from_coords(v: [Rational; 3]) -> RatVec3 {
        let [x, y, z] = v;
        RatVec3::new(x, y, z)
    }

    pub fn scale(&self, k: &Rational) -> RatVec3 {
        RatVec3::new(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn dot(&self, o: &RatVec3) -> Rational {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &RatVec3) -> RatVec3 {
        RatVec3::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn is_integral(&self) -> bool {
        self.coords().iter().all(|c| c.is_integer())
    }

    pub fn floor(&self) -> IntVec3 {
        IntVec3::new(self.x.floor_i64(), self.y.floor_i64(), self.z.floor_i64())
    }

    /// `self + t * d`
    pub fn along(&self, d: &RatVec3, t: &Rational) -> RatVec3 {
        self + &d.scale(t)
    }
}

impl fmt::Debug for RatVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

impl fmt::Display for RatVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add<&RatVec3> for &RatVec3 {
    type Output = RatVec3;
    fn add(self, o: &RatVec3) -> RatVec3 {
        RatVec3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl Sub<&RatVec3> for &RatVec3 {
    type Output = RatVec3;
    fn sub(self, o: &RatVec3) -> RatVec3 {
        RatVec3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Add<&IntVec3> for &RatVec3 {
    type Output = RatVec3;
    fn add(self, o: &IntVec3) -> RatVec3 {
        self + &o.to_rat()
    }
}

impl Sub<&IntVec3> for &RatVec3 {
    type Output = RatVec3;
    fn sub(self, o: &IntVec3) -> RatVec3 {
        self - &o.to_rat()
    }
}

impl Neg for &RatVec3 {
    type Output = RatVec3;
    fn neg(self) -> RatVec3 {
        RatVec3::new(-&self.x, -&self.y, -&self.z)
    }
}

/// Build a point from `(num, den)` pairs.
pub fn pt(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> RatVec3 {
    use crate::rational::q;
    RatVec3::new(q(x.0, x.1), q(y.0, y.1), q(z.0, z.1))
}

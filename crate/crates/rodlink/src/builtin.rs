//! The five cubic rod packings shipped with the tool.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::geometry::{Rod, RodPacking};
use crate::vector::{pt, IntVec3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PackingName {
    PlusPi,
    PiStar,
    Gamma,
    PlusOmega,
    PlusSigma,
}

impl PackingName {
    pub const ALL: [PackingName; 5] = [
        PackingName::PlusPi,
        PackingName::PiStar,
        PackingName::Gamma,
        PackingName::PlusOmega,
        PackingName::PlusSigma,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PackingName::PlusPi => "PlusPi",
            PackingName::PiStar => "PiStar",
            PackingName::Gamma => "Gamma",
            PackingName::PlusOmega => "PlusOmega",
            PackingName::PlusSigma => "PlusSigma",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            PackingName::PlusPi => "+Pi",
            PackingName::PiStar => "Pi*",
            PackingName::Gamma => "Gamma",
            PackingName::PlusOmega => "+Omega",
            PackingName::PlusSigma => "+Sigma",
        }
    }
}

impl fmt::Display for PackingName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PackingName {
    type Err = String;

    fn from_str(s: &str) -> Result<PackingName, String> {
        PackingName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s) || n.symbol() == s)
            .ok_or_else(|| format!("unknown builtin packing {s:?}"))
    }
}

fn rod(d: (i64, i64, i64), p: [(i64, i64); 3]) -> Rod {
    Rod::new(IntVec3::new(d.0, d.1, d.2), pt(p[0], p[1], p[2]))
}

pub fn builtin_packing(n: PackingName) -> RodPacking {
    let rods = match n {
        PackingName::PlusPi => vec![
            rod((0, 0, 1), [(0, 1), (0, 1), (0, 1)]),
            rod((0, 0, 1), [(5, 8), (5, 8), (0, 1)]),
            rod((1, 0, 0), [(0, 1), (1, 2), (0, 1)]),
            rod((1, 0, 0), [(0, 1), (7, 8), (1, 4)]),
            rod((0, 1, 0), [(1, 2), (0, 1), (1, 2)]),
            rod((0, 1, 0), [(3, 4), (0, 1), (1, 8)]),
        ],
        PackingName::PiStar => vec![
            rod((0, 0, 1), [(0, 1), (0, 1), (0, 1)]),
            rod((1, 0, 0), [(0, 1), (1, 2), (0, 1)]),
            rod((0, 1, 0), [(1, 2), (0, 1), (1, 2)]),
        ],
        PackingName::Gamma => vec![
            rod((1, 1, 1), [(1, 8), (0, 1), (1, 4)]),
            rod((1, -1, 1), [(3, 8), (3, 4), (0, 1)]),
            rod((-1, -1, 1), [(7, 8), (1, 4), (0, 1)]),
            rod((-1, 1, 1), [(3, 8), (1, 4), (0, 1)]),
        ],
        PackingName::PlusOmega => vec![
            rod((1, 1, 1), [(1, 3), (2, 3), (0, 1)]),
            rod((1, -1, 1), [(2, 3), (2, 3), (0, 1)]),
            rod((-1, -1, 1), [(2, 3), (1, 3), (0, 1)]),
            rod((-1, 1, 1), [(1, 3), (1, 3), (0, 1)]),
        ],
        PackingName::PlusSigma => vec![
            rod((1, 1, 1), [(1, 3), (2, 3), (0, 1)]),
            rod((1, -1, 1), [(1, 6), (2, 3), (0, 1)]),
            rod((-1, -1, 1), [(2, 3), (5, 6), (0, 1)]),
            rod((-1, 1, 1), [(5, 6), (5, 6), (0, 1)]),
        ],
    };
    RodPacking::unlabeled(rods)
}

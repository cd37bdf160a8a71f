//! Rod packings in the 3-torus.
//!
//! A packing is validated with exact rational arithmetic, cut into arcs by the
//! two-octahedra decomposition of the cube, carried into a fixed model of the
//! Borromean rings complement in the 3-sphere, and turned into a planar link
//! diagram with Dehn-filling slopes. The classifier applies the known
//! hyperbolicity results for small packings.

pub mod builtin;
pub mod classify;
pub mod cli;
pub mod decomp;
pub mod diagram;
pub mod error;
pub mod geometry;
pub mod input;
pub mod rational;
pub mod route;
pub mod template;
pub mod vector;

pub use error::{Error, Result};
pub use rational::Rational;
pub use vector::{IntVec3, RatVec3};

pub use builtin::{builtin_packing, PackingName};
pub use classify::{classify, Classification, Verdict};
pub use decomp::{decompose_packing, segment_rod, standard_gluing_table};
pub use diagram::{build_diagram, diagram_for_packing, export, linking_number, ExportFormat};
pub use geometry::{rods_intersect, validate_packing, Rod, RodPacking};
pub use template::load_template;

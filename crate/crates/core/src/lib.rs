//! Universal cohomology classes of coincident root strata and the Plücker
//! numbers of tangent lines to generic hypersurfaces, computed exactly as
//! polynomials in the degree `d`.

pub mod crs;
pub mod error;
pub mod exactpoly;
pub mod flagcalc;
pub mod golden;
pub mod plucker;
pub mod symfunc;
pub mod universal;

pub use error::{Error, Result};

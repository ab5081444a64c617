//! Support library for the `flagcurv` binary: the algebra file format and
//! the deterministic report renderer.

pub mod algfile;
pub mod render;

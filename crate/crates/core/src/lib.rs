//! Exact computer algebra for deciding freeness of reduced plane curves and
//! line arrangements.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: sparse polynomials over `Q` and exact linear algebra.
//! * [`groebner`]: reduced Gröbner bases and ideal operations.
//! * [`syzygy`]: syzygy modules, minimal free resolutions, Betti tables.
//! * [`divisor`]: Jacobian ideals, freeness verdicts, regular syzygies and
//!   the bounds relating syzygy degrees to the reduced Jacobian scheme.
//! * [`io`]: expression parsing, input documents, reports and the CLI.

pub mod divisor;
pub mod groebner;
pub mod io;
pub mod poly;
pub mod syzygy;

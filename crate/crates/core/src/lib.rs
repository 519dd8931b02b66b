//! Numerical laboratory for the quasilinear Calderón problem
//! `div(a(u) A ∇u) = 0` at desk scale.
//!
//! The crate builds structured simplicial meshes, assembles P1 finite
//! element forms, solves the quasilinear boundary value problem and its
//! linearization, discretizes localized Dirichlet-to-Neumann maps and
//! their Fréchet differentials at constant data, constructs singular
//! boundary probes from the frozen-coefficient parametrix, and runs the
//! boundary recovery / Lipschitz stability experiments that tie all of
//! it together.
//!
//! Module map:
//! - [`mesh`]: tagged meshes, boundary regions, cutoff χ, probe geometry
//! - [`fem`]: P1 assembly, Dirichlet solves, spectral `H^{±1/2}` norms
//! - [`weak`]: coercivity-gated drift-form solvers
//! - [`quasilinear`]: Picard solver, Kirchhoff oracle, linearized solves
//! - [`dtn`]: DtN maps, Fréchet matrices, weighted operator norms
//! - [`probes`]: parametrix, singular probe traces, remainder diagnostics
//! - [`recovery`]: boundary-value recovery and the stability experiment

pub mod dtn;
mod error;
pub mod fem;
pub mod fields;
pub mod linalg;
pub mod mesh;
pub mod probes;
pub mod quadrature;
pub mod quasilinear;
pub mod recovery;
pub mod weak;

pub use error::{Error, Result};
pub use fem::{BoundaryNormContext, BoundaryTrace, FieldSolution, SobolevIndex, SupportTag};
pub use fields::ConductivityMatrixField;
pub use mesh::{CutoffField, Domain, ProbeSpec, RegionTag, TaggedMesh};
pub use quasilinear::{CoefficientFamily, KirchhoffTransform};

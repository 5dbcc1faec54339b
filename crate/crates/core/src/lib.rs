//! Spectra of weighted graphs with boundary.
//!
//! The crate computes Laplacian, Dirichlet, and Steklov
//! (Dirichlet-to-Neumann) spectra of finite weighted graphs, verifies the
//! eigenvalue comparison `sigma_i >= mu_i` together with its full rigidity
//! characterization, and evaluates curvature- and connectivity-type lower
//! bounds for Steklov eigenvalues.
//!
//! Everything is generic over the floating-point scalar through
//! [`Scalar`]; the `*64` aliases below pin `f64`, which is what the CLI
//! and the documented tolerances assume.
//!
//! ```
//! use steklov::{BoundaryGraph64, Graph64};
//!
//! // The 4-cycle with two opposite vertices as boundary.
//! let g = Graph64::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
//! let bg = BoundaryGraph64::new(g, &[0, 2]).unwrap();
//! let sigma = steklov::spectral::steklov_spectrum(&bg).unwrap();
//! assert!((sigma.eigenvalues[1] - 2.0).abs() < 1e-9);
//! ```

#![forbid(unsafe_code)]

pub mod bounds;
pub mod comparison;
pub mod curvature;
pub mod graph;
pub mod numerics;
pub mod scalar;
pub mod spectral;

pub use scalar::Scalar;

pub use graph::{BoundaryGraph, Edge, GraphError, InducedGraph, Volumes, WeightedGraph};
pub use numerics::{
    EigenResult, LpConstraint, LpProblem, LpSolution, LpStatus, NumericsError, Relation,
    SymMatrix,
};
pub use spectral::{DtnOperator, HarmonicExtension, SpectralError, Spectrum, SpectrumKind};

pub use comparison::{
    ComparisonError, ComparisonReport, CorConstantReport, CorGeneralReport, RigidityReport,
    UnitRigidityReport,
};

pub use bounds::{BoundReport, BoundsError, FriedmanReport, OllivierLichnerowiczReport};
pub use curvature::{CurvatureError, CurvaturePair};

/// `f64` aliases for the generic domain types.
pub type Graph64 = WeightedGraph<f64>;
pub type BoundaryGraph64 = BoundaryGraph<f64>;
pub type Spectrum64 = Spectrum<f64>;
pub type SymMatrix64 = SymMatrix<f64>;

/// `f32` aliases, for reduced-precision use.
pub type Graph32 = WeightedGraph<f32>;
pub type BoundaryGraph32 = BoundaryGraph<f32>;

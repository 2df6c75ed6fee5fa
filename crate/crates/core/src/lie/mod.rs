//! Geometry of Lie groups with left-invariant metrics.

pub mod algebra;
pub mod connection;
pub mod curvature;
pub mod derivative;
pub mod metric;

pub use algebra::{JacobiVerdict, LieAlgebra};
pub use connection::{levi_civita, ConnectionCoefficients};
pub use curvature::{
    curvature, ricci_data, scalar_curvature, scalar_from_ricci, CurvatureData, Riemann,
};
pub use derivative::{covariant_derivative, covariant_derivative_02, lie_derivative_metric};
pub use metric::MetricTensor;

use crate::error::{Error, Result};
use crate::ratlin::{invert_symmetric, signature, Matrix, Signature};

/// Symmetric nondegenerate bilinear form together with its exact inverse and inertia.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricTensor {
    components: Matrix,
    inverse: Matrix,
    signature: Signature,
}

impl MetricTensor {
    pub fn new(components: Matrix) -> Result<Self> {
        if !components.is_square() {
            return Err(Error::DimensionMismatch("metric must be square".into()));
        }
        if !components.is_symmetric() {
            return Err(Error::Validation("metric is not symmetric".into()));
        }
        let inverse = invert_symmetric(&components)?;
        let signature = signature(&components);
        Ok(Self {
            components,
            inverse,
            signature,
        })
    }

    pub fn dim(&self) -> usize {
        self.components.rows()
    }

    /// `g_{ij}`.
    pub fn components(&self) -> &Matrix {
        &self.components
    }

    /// `g^{ij}`.
    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }
}

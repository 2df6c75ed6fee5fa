use std::ops::{Index, IndexMut};

use num_traits::Zero;

use super::matrix::Matrix;
use super::rational::{zero, Rational};

/// Position of a tensor index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    Upper,
    Lower,
}

/// Dense tensor over a `dim`-dimensional space, components stored lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseTensor {
    dim: usize,
    variance: Vec<Slot>,
    data: Vec<Rational>,
}

impl DenseTensor {
    pub fn zeros(dim: usize, variance: &[Slot]) -> Self {
        Self {
            dim,
            variance: variance.to_vec(),
            data: vec![zero(); dim.pow(variance.len() as u32)],
        }
    }

    pub fn from_fn(dim: usize, variance: &[Slot], mut f: impl FnMut(&[usize]) -> Rational) -> Self {
        let mut t = Self::zeros(dim, variance);
        let mut idx = vec![0; variance.len()];
        for k in 0..t.data.len() {
            t.data[k] = f(&idx);
            increment(&mut idx, dim);
        }
        t
    }

    /// Order-2 tensor with components `m[(i, j)]`.
    pub fn from_matrix(m: &Matrix, variance: [Slot; 2]) -> Self {
        assert!(m.is_square());
        Self::from_fn(m.rows(), &variance, |ix| m[(ix[0], ix[1])].clone())
    }

    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.order(), 2, "to_matrix needs an order-2 tensor");
        Matrix::from_fn(self.dim, self.dim, |i, j| self[&[i, j]].clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.variance.len()
    }

    pub fn variance(&self) -> &[Slot] {
        &self.variance
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.order(), "wrong number of indices");
        idx.iter().fold(0, |acc, &i| {
            assert!(i < self.dim, "tensor index out of range");
            acc * self.dim + i
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First nonzero component (lexicographic), if any.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        self.indexed().find(|(_, v)| !v.is_zero()).map(|(i, _)| i)
    }

    /// All `(multi-index, value)` pairs in lexicographic order.
    pub fn indexed(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> {
        let mut idx = vec![0; self.order()];
        let dim = self.dim;
        self.data.iter().map(move |v| {
            let cur = idx.clone();
            increment(&mut idx, dim);
            (cur, v)
        })
    }

    pub fn nonzero(&self) -> Vec<(Vec<usize>, Rational)> {
        self.indexed()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        self.map(|v| v * s)
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self {
            dim: self.dim,
            variance: self.variance.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Componentwise `self + other`; shapes must agree.
    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    fn zip(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        assert_eq!(self.variance, other.variance, "variance mismatch");
        Self {
            dim: self.dim,
            variance: self.variance.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

/// Lexicographic odometer step.
fn increment(idx: &mut [usize], dim: usize) {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < dim {
            return;
        }
        *slot = 0;
    }
}

impl Index<&[usize]> for DenseTensor {
    type Output = Rational;

    fn index(&self, idx: &[usize]) -> &Rational {
        &self.data[self.offset(idx)]
    }
}

impl<const N: usize> Index<&[usize; N]> for DenseTensor {
    type Output = Rational;

    fn index(&self, idx: &[usize; N]) -> &Rational {
        &self.data[self.offset(idx)]
    }
}

impl IndexMut<&[usize]> for DenseTensor {
    fn index_mut(&mut self, idx: &[usize]) -> &mut Rational {
        let o = self.offset(idx);
        &mut self.data[o]
    }
}

impl<const N: usize> IndexMut<&[usize; N]> for DenseTensor {
    fn index_mut(&mut self, idx: &[usize; N]) -> &mut Rational {
        let o = self.offset(idx);
        &mut self.data[o]
    }
}

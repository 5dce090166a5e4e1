use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

use super::group::{FgAbGroup, GroupElement};
use super::matrix::IntMatrix;

/// A homomorphism between two presented groups, as an integer matrix:
/// one column per source generator, one row per target generator;
/// column `j` is the image of source generator `j` in target coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: Arc<FgAbGroup>,
    target: Arc<FgAbGroup>,
    matrix: IntMatrix,
}

impl Homomorphism {
    /// Build and check well-definedness: for every finite source factor
    /// `d_j`, `d_j * column_j` must be the zero element of the target
    /// (entrywise divisible by the finite target factors, exactly zero
    /// on infinite ones).
    pub fn new(source: Arc<FgAbGroup>, target: Arc<FgAbGroup>, matrix: IntMatrix) -> Result<Self> {
        if matrix.nrows() != target.rank() || matrix.ncols() != source.rank() {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{} but target has {} generators and source {}",
                matrix.nrows(),
                matrix.ncols(),
                target.rank(),
                source.rank()
            )));
        }
        for (j, &d) in source.factors().iter().enumerate() {
            if d == 0 {
                continue;
            }
            let d = BigInt::from(d);
            for (i, &t) in target.factors().iter().enumerate() {
                let scaled = &matrix[(i, j)] * &d;
                let ok = if t == 0 {
                    scaled.is_zero()
                } else {
                    (&scaled % BigInt::from(t)).is_zero()
                };
                if !ok {
                    return Err(Error::IllDefinedHom(format!(
                        "order of source generator {} does not kill its image \
                         (entry {} at target row {})",
                        j,
                        matrix[(i, j)],
                        i
                    )));
                }
            }
        }
        Ok(Homomorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(group: &Arc<FgAbGroup>) -> Self {
        Homomorphism {
            source: Arc::clone(group),
            target: Arc::clone(group),
            matrix: IntMatrix::identity(group.rank()),
        }
    }

    pub fn zero(source: &Arc<FgAbGroup>, target: &Arc<FgAbGroup>) -> Self {
        Homomorphism {
            source: Arc::clone(source),
            target: Arc::clone(target),
            matrix: IntMatrix::zero(target.rank(), source.rank()),
        }
    }

    /// Negation endomorphism `x -> -x`.
    pub fn negation(group: &Arc<FgAbGroup>) -> Self {
        let n = group.rank();
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::from(-1);
        }
        Homomorphism {
            source: Arc::clone(group),
            target: Arc::clone(group),
            matrix: m,
        }
    }

    pub fn source(&self) -> &Arc<FgAbGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FgAbGroup> {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.parent().as_ref() != self.source.as_ref() {
            return Err(Error::ShapeMismatch(format!(
                "element of {} fed to a homomorphism with source {}",
                x.parent(),
                self.source
            )));
        }
        let image = self.matrix.mul_vec(x.coeffs());
        self.target.element(&image)
    }

    /// `self ∘ inner` (apply `inner` first). Well-definedness is
    /// re-checked on the product matrix.
    pub fn compose(&self, inner: &Homomorphism) -> Result<Homomorphism> {
        if inner.target.as_ref() != self.source.as_ref() {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: inner target {} != outer source {}",
                inner.target, self.source
            )));
        }
        Homomorphism::new(
            Arc::clone(&inner.source),
            Arc::clone(&self.target),
            self.matrix.mul(&inner.matrix),
        )
    }

    /// Stack two homomorphisms with the same source into one map to the
    /// direct sum of the targets.
    pub fn stack(&self, other: &Homomorphism) -> Result<Homomorphism> {
        if self.source.as_ref() != other.source.as_ref() {
            return Err(Error::ShapeMismatch(
                "stacked homomorphisms must share a source".into(),
            ));
        }
        let target = Arc::new(self.target.direct_sum(&other.target));
        Homomorphism::new(
            Arc::clone(&self.source),
            target,
            self.matrix.stack(&other.matrix),
        )
    }

    /// Two homomorphisms agree iff they agree on every generator, i.e.
    /// the matrices are congruent columnwise in the target.
    pub fn agrees_with(&self, other: &Homomorphism) -> bool {
        if self.source.as_ref() != other.source.as_ref()
            || self.target.as_ref() != other.target.as_ref()
        {
            return false;
        }
        (0..self.source.rank()).all(|j| {
            let a = self.target.canonicalize(&self.matrix.col(j));
            let b = self.target.canonicalize(&other.matrix.col(j));
            a == b
        })
    }

    /// Endomorphism that squares to the identity.
    pub fn is_involution(&self) -> bool {
        self.source.as_ref() == self.target.as_ref()
            && self
                .compose(self)
                .map(|sq| sq.agrees_with(&Homomorphism::identity(&self.source)))
                .unwrap_or(false)
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source.as_ref() == self.target.as_ref()
    }
}

impl fmt::Display for Homomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.source, self.target)
    }
}

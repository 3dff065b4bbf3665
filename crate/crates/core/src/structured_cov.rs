//! Closed-form algebra for `N x N` matrices with a constant diagonal `a`
//! and a constant off-diagonal `b`, and the multivariate normal model of a
//! degree vector built on them.
//!
//! Such a matrix is `(a - b) I + b P` with `P` the all-ones matrix. Its
//! eigenvalues are `a + (N - 1) b` (once) and `a - b` (`N - 1` times), which
//! gives the determinant and an inverse of the same shape. Nothing here ever
//! materializes the `N x N` array.

use crate::math::{ln, powi};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StructuredMatrix {
    dim: usize,
    diag: f64,
    off_diag: f64,
}

/// `A^{-1} = ones * P + identity * I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseCoefficients {
    pub ones: f64,
    pub identity: f64,
}

impl StructuredMatrix {
    pub fn new(dim: usize, diag: f64, off_diag: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("matrix dimension must be positive"));
        }
        if !diag.is_finite() || !off_diag.is_finite() {
            return Err(Error::InvalidParameter("matrix entries must be finite"));
        }
        Ok(Self { dim, diag, off_diag })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn diag(&self) -> f64 {
        self.diag
    }

    pub fn off_diag(&self) -> f64 {
        self.off_diag
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        if i == j {
            self.diag
        } else {
            self.off_diag
        }
    }

    /// Eigenvalue along the all-ones direction.
    fn lead_eigenvalue(&self) -> f64 {
        self.diag + (self.dim as f64 - 1.0) * self.off_diag
    }

    /// Eigenvalue on the complement of the all-ones direction.
    fn bulk_eigenvalue(&self) -> f64 {
        self.diag - self.off_diag
    }

    /// Strict test: `a > b` and `a + (N - 1) b > 0`, no tolerance.
    pub fn is_positive_definite(&self) -> bool {
        let bulk_ok = self.dim == 1 || self.bulk_eigenvalue() > 0.0;
        bulk_ok && self.lead_eigenvalue() > 0.0
    }

    /// `[a + (N - 1) b] (a - b)^(N - 1)`. Underflows for large `N`; use
    /// [`ln_det`](Self::ln_det) in likelihoods.
    pub fn det(&self) -> f64 {
        self.lead_eigenvalue() * powi(self.bulk_eigenvalue(), self.dim as i32 - 1)
    }

    pub fn ln_det(&self) -> Result<f64> {
        if !self.is_positive_definite() {
            return Err(Error::Singular);
        }
        let bulk = if self.dim == 1 {
            0.0
        } else {
            (self.dim as f64 - 1.0) * ln(self.bulk_eigenvalue())
        };
        Ok(ln(self.lead_eigenvalue()) + bulk)
    }

    /// `alpha = -b / [(a - b)(N b + a - b)]`, `beta = 1 / (a - b)`.
    pub fn inverse_coefficients(&self) -> Result<InverseCoefficients> {
        if !self.is_positive_definite() {
            return Err(Error::Singular);
        }
        let (a, b, n) = (self.diag, self.off_diag, self.dim as f64);
        if self.dim == 1 {
            return Ok(InverseCoefficients { ones: 0.0, identity: 1.0 / a });
        }
        Ok(InverseCoefficients {
            ones: -b / ((a - b) * (n * b + a - b)),
            identity: 1.0 / (a - b),
        })
    }

    /// `d^T A^{-1} d` in `O(N)`.
    pub fn quadratic_form(&self, d: &[f64]) -> Result<f64> {
        if d.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: d.len() });
        }
        let (sum, sum_sq) = d.iter().fold((0.0, 0.0), |(s, q), &x| (s + x, q + x * x));
        self.quadratic_form_from_sums(sum, sum_sq)
    }

    /// Quadratic form given `sum(d)` and `sum(d^2)` only.
    pub fn quadratic_form_from_sums(&self, sum: f64, sum_sq: f64) -> Result<f64> {
        let c = self.inverse_coefficients()?;
        Ok(c.ones * sum * sum + c.identity * sum_sq)
    }
}

/// Whether the model's off-diagonal covariance is `0` or `p(1 - p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Dependence {
    Independent,
    Dependent,
}

/// `X ~ N_N(mu, Sigma)` with `mu_i = (n - 1) p`, `Sigma_ii = (n - 1) p (1 - p)`
/// and `Sigma_ij = 0` or `p (1 - p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MvnModel {
    n: usize,
    p: f64,
    dependence: Dependence,
    mean: f64,
    sigma: StructuredMatrix,
}

impl MvnModel {
    pub fn new(n: usize, dim: usize, p: f64, dependence: Dependence) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("graph size must be at least 2"));
        }
        if dim == 0 {
            return Err(Error::InvalidParameter("model dimension must be positive"));
        }
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Singular);
        }
        if dependence == Dependence::Dependent && dim != n {
            return Err(Error::Convention { n, dim });
        }
        let pq = p * (1.0 - p);
        let off = match dependence {
            Dependence::Independent => 0.0,
            Dependence::Dependent => pq,
        };
        let sigma = StructuredMatrix::new(dim, (n as f64 - 1.0) * pq, off)?;
        if !sigma.is_positive_definite() {
            return Err(Error::Singular);
        }
        Ok(Self { n, p, dependence, mean: (n as f64 - 1.0) * p, sigma })
    }

    /// Model for a full degree vector (`dim == n`).
    pub fn for_graph(n: usize, p: f64, dependence: Dependence) -> Result<Self> {
        Self::new(n, n, p, dependence)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.sigma.dim
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn dependence(&self) -> Dependence {
        self.dependence
    }

    /// Common coordinate of the mean vector.
    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn sigma(&self) -> &StructuredMatrix {
        &self.sigma
    }

    /// `(x - mu)^T Sigma^{-1} (x - mu)` from `sum(x)` and `sum(x^2)`.
    pub fn quadratic_from_moments(&self, sum: f64, sum_sq: f64) -> Result<f64> {
        let dim = self.dim() as f64;
        let m = self.mean;
        let centered_sum = sum - dim * m;
        let centered_sq = sum_sq - 2.0 * m * sum + dim * m * m;
        self.sigma.quadratic_form_from_sums(centered_sum, centered_sq)
    }

    /// `-1/2 ln|Sigma| - 1/2 (x - mu)^T Sigma^{-1} (x - mu)`, constants dropped.
    pub fn log_likelihood_from_moments(&self, sum: f64, sum_sq: f64) -> Result<f64> {
        let q = self.quadratic_from_moments(sum, sum_sq)?;
        Ok(-0.5 * self.sigma.ln_det()? - 0.5 * q)
    }
}

/// Correlation of two node degrees in `G(n, p)`: `1 / (n - 1)`.
pub fn theoretical_correlation(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2"));
    }
    Ok(1.0 / (n as f64 - 1.0))
}

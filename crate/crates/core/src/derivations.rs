//! (α,λ)-derivations: endomorphisms `D` with
//! `D([a,b]) = [D(a),b] + [a,D(b)] + λ(b)D(a) − λ(a)D(b) + α(b)a − α(a)b`.
//!
//! `D` is stored with `D(e_i) = Σ_j d_ij e_j`, i.e. row `i` of the matrix is
//! the image of `e_i`. Unknowns are flattened as `d` row-major, then `α`.

use crate::algebra::{AlmostAbelian, AnticommAlgebra, LinearForm};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, AffineSolution, Matrix, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaLambdaDerivation {
    pub d: Matrix,
    pub alpha: LinearForm,
    pub lambda: LinearForm,
}

impl AlphaLambdaDerivation {
    pub fn zero(a: &AnticommAlgebra, lambda: LinearForm) -> AlphaLambdaDerivation {
        let n = a.dim();
        AlphaLambdaDerivation {
            d: Matrix::zeros(a.field(), n, n),
            alpha: Vector::zeros(a.field(), n),
            lambda,
        }
    }

    pub fn apply(&self, x: &Vector) -> Vector {
        x.mul_mat(&self.d)
    }

    /// `(d row-major, α)` flattening.
    pub fn flatten(&self) -> Vector {
        self.d.flatten().concat(&self.alpha)
    }

    pub fn from_flat(n: usize, lambda: LinearForm, v: &Vector) -> AlphaLambdaDerivation {
        let f = v.field();
        AlphaLambdaDerivation {
            d: Matrix::from_flat(f, n, n, &v.slice(0, n * n)),
            alpha: v.slice(n * n, n * n + n),
            lambda,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.d.is_zero() && self.alpha.is_zero()
    }
}

/// Left minus right side of the defining identity at `(e_i, e_j)`.
pub fn derivation_residual(
    a: &AnticommAlgebra,
    d: &AlphaLambdaDerivation,
    i: usize,
    j: usize,
) -> Vector {
    let (x, y) = (a.basis_vector(i), a.basis_vector(j));
    let (dx, dy) = (d.apply(&x), d.apply(&y));
    let mut r = d.apply(&a.bracket(&x, &y));
    r = r.sub(&a.bracket(&dx, &y)).sub(&a.bracket(&x, &dy));
    r.axpy(&-&d.lambda[j], &dx);
    r.axpy(&d.lambda[i], &dy);
    r.axpy(&-&d.alpha[j], &x);
    r.axpy(&d.alpha[i], &y);
    r
}

fn shapes_ok(a: &AnticommAlgebra, d: &AlphaLambdaDerivation) -> bool {
    let n = a.dim();
    d.d.rows() == n && d.d.cols() == n && d.alpha.len() == n && d.lambda.len() == n
}

pub fn check_al_derivation(a: &AnticommAlgebra, d: &AlphaLambdaDerivation) -> bool {
    let n = a.dim();
    shapes_ok(a, d) && (0..n).all(|i| (i + 1..n).all(|j| derivation_residual(a, d, i, j).is_zero()))
}

/// Coefficient matrix of the linear system in the `n² + n` unknowns
/// `d_kl, α_i`, one row per `(i<j, l)`.
pub fn system_matrix(a: &AnticommAlgebra, lambda: &LinearForm) -> Matrix {
    let n = a.dim();
    let f = a.field();
    let dcol = |r: usize, c: usize| r * n + c;
    let acol = |i: usize| n * n + i;
    let c = |i: usize, j: usize, k: usize| a.bracket_basis(i, j)[k].clone();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in 0..n {
                let mut row = Vector::zeros(f, n * n + n);
                for k in 0..n {
                    row[dcol(k, l)] = &row[dcol(k, l)] + &c(i, j, k);
                    row[dcol(i, k)] = &row[dcol(i, k)] - &c(k, j, l);
                    row[dcol(j, k)] = &row[dcol(j, k)] + &c(k, i, l);
                }
                row[dcol(i, l)] = &row[dcol(i, l)] - &lambda[j];
                row[dcol(j, l)] = &row[dcol(j, l)] + &lambda[i];
                if i == l {
                    row[acol(j)] = &row[acol(j)] - &f.one();
                }
                if j == l {
                    row[acol(i)] = &row[acol(i)] + &f.one();
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(f, n * n + n, &rows)
}

/// Solution space of the (D, α) system for a fixed λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub lambda: LinearForm,
    pub space: Subspace,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn basis(&self) -> Vec<AlphaLambdaDerivation> {
        self.space
            .basis()
            .iter()
            .map(|v| AlphaLambdaDerivation::from_flat(self.n(), self.lambda.clone(), v))
            .collect()
    }

    pub fn element(&self, coeffs: &[crate::exactfield::Scalar]) -> AlphaLambdaDerivation {
        let mut v = Vector::zeros(self.lambda.field(), self.n() * self.n() + self.n());
        for (c, b) in coeffs.iter().zip(self.space.basis()) {
            v.axpy(c, b);
        }
        AlphaLambdaDerivation::from_flat(self.n(), self.lambda.clone(), &v)
    }

    pub fn contains(&self, d: &AlphaLambdaDerivation) -> bool {
        d.lambda == self.lambda && self.space.contains(&d.flatten()).unwrap_or(false)
    }

    /// Dimension of the projection to the α coordinates.
    pub fn alpha_rank(&self) -> usize {
        let n = self.n();
        let vs: Vec<Vector> = self
            .space
            .basis()
            .iter()
            .map(|v| v.slice(n * n, n * n + n))
            .collect();
        Subspace::span(self.lambda.field(), n, &vs).dim()
    }
}

pub fn al_derivation_space(a: &AnticommAlgebra, lambda: &LinearForm) -> DerivationSpace {
    assert_eq!(lambda.len(), a.dim(), "lambda has wrong length");
    let n = a.dim();
    let space = if n < 2 {
        Subspace::full(a.field(), n * n + n)
    } else {
        kernel_basis(&system_matrix(a, lambda))
    };
    DerivationSpace {
        lambda: lambda.clone(),
        space,
    }
}

/// `([D1,D2], α1∘D2 − α2∘D1, 0)` for two (α,0)-derivations.
pub fn alpha0_bracket(
    a: &AnticommAlgebra,
    d1: &AlphaLambdaDerivation,
    d2: &AlphaLambdaDerivation,
) -> Result<AlphaLambdaDerivation> {
    if !d1.lambda.is_zero() || !d2.lambda.is_zero() {
        return Err(Error::PreconditionFailed(
            "alpha0_bracket needs lambda = 0".into(),
        ));
    }
    if !check_al_derivation(a, d1) || !check_al_derivation(a, d2) {
        return Err(Error::PreconditionFailed(
            "inputs must be (alpha,0)-derivations".into(),
        ));
    }
    let (m1, m2) = (&d1.d, &d2.d);
    let d = m2.mul(m1).sub(&m1.mul(m2));
    let alpha = m2.mul_col(&d1.alpha).sub(&m1.mul_col(&d2.alpha));
    Ok(AlphaLambdaDerivation {
        d,
        alpha,
        lambda: d1.lambda.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KerAlphaReport {
    AlphaZero,
    SmallDim,
    KerAlphaSubalgebra {
        kernel: Subspace,
        kind: AlmostAbelian,
    },
    /// Ker α fails to be a subalgebra; contradicts the structure lemma.
    NotSubalgebra {
        kernel: Subspace,
    },
}

pub fn ker_alpha_analysis(
    a: &AnticommAlgebra,
    d: &AlphaLambdaDerivation,
) -> Result<KerAlphaReport> {
    if !a.is_lie() {
        return Err(Error::NotALieAlgebra);
    }
    if d.alpha.is_zero() {
        return Ok(KerAlphaReport::AlphaZero);
    }
    if a.dim() <= 3 {
        return Ok(KerAlphaReport::SmallDim);
    }
    let kernel = kernel_basis(&Matrix::from_rows(
        a.field(),
        a.dim(),
        std::slice::from_ref(&d.alpha),
    ));
    if !a.is_subalgebra(&kernel) {
        return Ok(KerAlphaReport::NotSubalgebra { kernel });
    }
    let kind = a
        .restrict_unchecked(&kernel)?
        .almost_abelian_decomposition();
    Ok(KerAlphaReport::KerAlphaSubalgebra { kernel, kind })
}

/// Sample points of an affine λ-set: the particular solution, then
/// particular + k for each kernel basis vector k.
pub fn lambda_samples(sol: &AffineSolution) -> Vec<LinearForm> {
    let mut out = vec![sol.particular.clone()];
    for k in sol.kernel.basis() {
        out.push(sol.particular.add(k));
    }
    out
}

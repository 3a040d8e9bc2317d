//! Anticommutative algebras with a candidate skew form, and the ω-Lie
//! algebras among them.
//!
//! Basis indices are 0-based in the API and 1-based in the JSON encoding.
//! `ad(h)` is right multiplication `x ↦ [x,h]`.

mod ideals;
mod simple;

use std::fmt;
use std::ops::Deref;

pub use ideals::{AbelianIdealSearch, AlmostAbelian, IdealSearch, EXHAUSTIVE_LIMIT};
pub use simple::Simplicity;

use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar};
use crate::exactla::{
    kernel_basis, left_kernel, solve_affine, AffineSolution, LaError, Matrix, Subspace, Vector,
};

/// Covector on the algebra (λ, α, root functionals).
pub type LinearForm = Vector;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnticommAlgebra {
    field: Field,
    dim: usize,
    table: Vec<Vector>,
    omega: Matrix,
}

/// First basis triple `i<j<k` where the ω-Jacobi identity fails, with
/// `J(e_i,e_j,e_k) − (ω(e_i,e_j)e_k + ω(e_k,e_i)e_j + ω(e_j,e_k)e_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(
            f,
            "triple (e{},e{},e{}) residual {}",
            i + 1,
            j + 1,
            k + 1,
            self.residual
        )
    }
}

impl AnticommAlgebra {
    pub fn new(field: Field, dim: usize) -> AnticommAlgebra {
        AnticommAlgebra {
            field,
            dim,
            table: vec![Vector::zeros(field, dim); dim * dim],
            omega: Matrix::zeros(field, dim, dim),
        }
    }

    /// Sets `[e_i,e_j] = v` and `[e_j,e_i] = −v`.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vector) {
        assert!(i != j, "[e_i,e_i] is always zero");
        assert_eq!(v.len(), self.dim, "bracket value has wrong length");
        self.table[j * self.dim + i] = v.neg();
        self.table[i * self.dim + j] = v;
    }

    pub fn with_bracket(mut self, i: usize, j: usize, coeffs: &[i64]) -> AnticommAlgebra {
        let v = Vector::from_ints(self.field, coeffs);
        self.set_bracket(i, j, v);
        self
    }

    /// Sets `ω(e_i,e_j) = s` and `ω(e_j,e_i) = −s`.
    pub fn set_omega(&mut self, i: usize, j: usize, s: Scalar) {
        assert!(i != j, "omega(e_i,e_i) is always zero");
        self.omega.set(j, i, -&s);
        self.omega.set(i, j, s);
    }

    pub fn with_omega(mut self, i: usize, j: usize, s: i64) -> AnticommAlgebra {
        let s = self.field.int(s);
        self.set_omega(i, j, s);
        self
    }

    pub fn clear_omega(&mut self) {
        self.omega = Matrix::zeros(self.field, self.dim, self.dim);
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim, i)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn omega_basis(&self, i: usize, j: usize) -> &Scalar {
        self.omega.get(i, j)
    }

    /// Gram matrix of ω.
    pub fn gram(&self) -> &Matrix {
        &self.omega
    }

    fn check_len(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::La(LaError::DimensionMismatch(self.dim, v.len())));
        }
        Ok(())
    }

    pub fn try_bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket(x, y))
    }

    /// Bilinear extension of the structure constants. Panics on a length mismatch.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        assert!(
            x.len() == self.dim && y.len() == self.dim,
            "vector length mismatch"
        );
        let mut out = Vector::zeros(self.field, self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                out.axpy(&c, self.bracket_basis(i, j));
            }
        }
        out
    }

    pub fn omega(&self, x: &Vector, y: &Vector) -> Scalar {
        x.mul_mat(&self.omega).dot(y)
    }

    pub fn jacobian(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let a = self.bracket(&self.bracket(x, y), z);
        let b = self.bracket(&self.bracket(z, x), y);
        let c = self.bracket(&self.bracket(y, z), x);
        a.add(&b).add(&c)
    }

    /// `ω(x,y)z + ω(z,x)y + ω(y,z)x`
    pub fn omega_rhs(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        let mut out = z.scale(&self.omega(x, y));
        out.axpy(&self.omega(z, x), y);
        out.axpy(&self.omega(y, z), x);
        out
    }

    pub fn residual(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        self.jacobian(x, y, z).sub(&self.omega_rhs(x, y, z))
    }

    /// ω-Jacobi residual at a basis triple.
    pub fn basis_residual(&self, i: usize, j: usize, k: usize) -> Vector {
        let (x, y, z) = (
            self.basis_vector(i),
            self.basis_vector(j),
            self.basis_vector(k),
        );
        self.residual(&x, &y, &z)
    }

    /// First violating strictly increasing triple. Both sides of the
    /// identity are alternating and trilinear, so these triples suffice.
    pub fn first_violation(&self) -> Option<Violation> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.basis_residual(i, j, k);
                    if !r.is_zero() {
                        return Some(Violation {
                            triple: (i, j, k),
                            residual: r,
                        });
                    }
                }
            }
        }
        None
    }

    pub fn validate(&self) -> std::result::Result<OmegaAlgebra, Violation> {
        match self.first_violation() {
            None => Ok(OmegaAlgebra(self.clone())),
            Some(v) => Err(v),
        }
    }

    pub fn into_validated(self) -> std::result::Result<OmegaAlgebra, Violation> {
        match self.first_violation() {
            None => Ok(OmegaAlgebra(self)),
            Some(v) => Err(v),
        }
    }

    /// Matrix of `ad(h): x ↦ [x,h]` (row convention).
    pub fn ad(&self, h: &Vector) -> Matrix {
        let rows: Vec<Vector> = (0..self.dim)
            .map(|i| self.bracket(&self.basis_vector(i), h))
            .collect();
        Matrix::from_rows(self.field, self.dim, &rows)
    }

    /// Matrix of left multiplication `y ↦ [x,y]` (row convention).
    pub fn left_mult(&self, x: &Vector) -> Matrix {
        let rows: Vec<Vector> = (0..self.dim)
            .map(|j| self.bracket(x, &self.basis_vector(j)))
            .collect();
        Matrix::from_rows(self.field, self.dim, &rows)
    }

    pub fn d_omega(&self, x: &Vector, y: &Vector, z: &Vector) -> Scalar {
        let a = self.omega(&self.bracket(x, y), z);
        let b = self.omega(&self.bracket(z, x), y);
        let c = self.omega(&self.bracket(y, z), x);
        &(&a + &b) + &c
    }

    /// Both sides of [`Self::four_var_holds_at`], left minus right.
    pub fn four_var_residual(&self, x: &Vector, y: &Vector, z: &Vector, t: &Vector) -> Vector {
        let mut lhs = Vector::zeros(self.field, self.dim);
        lhs.axpy(&self.omega(z, t), &self.bracket(x, y));
        lhs.axpy(&self.omega(t, y), &self.bracket(x, z));
        lhs.axpy(&self.omega(y, z), &self.bracket(x, t));
        lhs.axpy(&self.omega(x, t), &self.bracket(y, z));
        lhs.axpy(&self.omega(z, x), &self.bracket(y, t));
        lhs.axpy(&self.omega(x, y), &self.bracket(z, t));
        let mut rhs = Vector::zeros(self.field, self.dim);
        rhs.axpy(&self.d_omega(t, z, y), x);
        rhs.axpy(&self.d_omega(z, t, x), y);
        rhs.axpy(&self.d_omega(y, x, t), z);
        rhs.axpy(&self.d_omega(x, y, z), t);
        lhs.sub(&rhs)
    }

    pub fn four_var_holds_at(&self, x: &Vector, y: &Vector, z: &Vector, t: &Vector) -> bool {
        self.four_var_residual(x, y, z, t).is_zero()
    }

    /// The four-variable identity on all basis 4-tuples `i<j<k<l`.
    pub fn check_four_var(&self) -> bool {
        let n = self.dim;
        let e: Vec<Vector> = (0..n).map(|i| self.basis_vector(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        if !self.four_var_holds_at(&e[i], &e[j], &e[k], &e[l]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Radical of ω.
    pub fn omega_kernel(&self) -> Subspace {
        kernel_basis(&self.omega)
    }

    pub fn omega_rank(&self) -> usize {
        self.omega.rank()
    }

    pub fn omega_is_zero(&self) -> bool {
        self.omega.is_zero()
    }

    pub fn commutant(&self) -> Subspace {
        let mut vs = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                vs.push(self.bracket_basis(i, j).clone());
            }
        }
        Subspace::span(self.field, self.dim, &vs)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(Vector::is_zero)
    }

    /// Jacobi identity on all basis triples.
    pub fn is_lie(&self) -> bool {
        let n = self.dim;
        let e: Vec<Vector> = (0..n).map(|i| self.basis_vector(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobian(&e[i], &e[j], &e[k]).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The same bracket with ω = 0.
    pub fn bracket_only(&self) -> AnticommAlgebra {
        let mut a = self.clone();
        a.clear_omega();
        a
    }

    /// All bilinear forms ω (as `n×n` Gram matrices, not assumed skew)
    /// satisfying the ω-Jacobi identity on every basis triple, repeated
    /// indices included. `None` if there is none.
    pub fn omega_space(&self) -> Option<FormSpace> {
        let n = self.dim;
        let f = self.field;
        let u = |a: usize, b: usize| a * n + b;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (
                        self.basis_vector(i),
                        self.basis_vector(j),
                        self.basis_vector(k),
                    );
                    let jac = self.jacobian(&x, &y, &z);
                    for l in 0..n {
                        let mut row = Vector::zeros(f, n * n);
                        if k == l {
                            row[u(i, j)] = &row[u(i, j)] + &f.one();
                        }
                        if j == l {
                            row[u(k, i)] = &row[u(k, i)] + &f.one();
                        }
                        if i == l {
                            row[u(j, k)] = &row[u(j, k)] + &f.one();
                        }
                        rows.push(row);
                        rhs.push(jac[l].clone());
                    }
                }
            }
        }
        let m = Matrix::from_rows(f, n * n, &rows);
        let sol = solve_affine(&m, &Vector::from_scalars(f, rhs))?;
        Some(FormSpace {
            particular: Matrix::from_flat(f, n, n, &sol.particular),
            directions: sol
                .kernel
                .basis()
                .iter()
                .map(|v| Matrix::from_flat(f, n, n, v))
                .collect(),
        })
    }

    /// Replaces ω by the unique solution of [`Self::omega_space`], if any.
    pub fn with_solved_omega(&self) -> Option<AnticommAlgebra> {
        let space = self.omega_space()?;
        if !space.directions.is_empty() {
            return None;
        }
        let mut a = self.clone();
        a.omega = space.particular;
        Some(a)
    }

    /// Affine set of λ with `ω(e_i,e_j) = λ([e_i,e_j])` on all basis pairs.
    pub fn multiplicative_lambda(&self) -> Result<AffineSolution> {
        let n = self.dim;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                rows.push(self.bracket_basis(i, j).clone());
                rhs.push(self.omega_basis(i, j).clone());
            }
        }
        if rows.is_empty() {
            return Ok(AffineSolution {
                particular: Vector::zeros(self.field, n),
                kernel: Subspace::full(self.field, n),
            });
        }
        let m = Matrix::from_rows(self.field, n, &rows);
        solve_affine(&m, &Vector::from_scalars(self.field, rhs)).ok_or(Error::NotMultiplicative)
    }

    pub fn is_multiplicative_for(&self, lambda: &LinearForm) -> bool {
        let n = self.dim;
        lambda.len() == n
            && (0..n).all(|i| {
                (i + 1..n).all(|j| self.bracket_basis(i, j).dot(lambda) == *self.omega_basis(i, j))
            })
    }

    /// `N(h) = {x : [x,h] ∈ Kh}`.
    pub fn normalizer_line(&self, h: &Vector) -> Result<Subspace> {
        self.check_len(h)?;
        if h.is_zero() {
            return Err(Error::ZeroVector);
        }
        let n = self.dim;
        let mut rows = self.ad(h).row_vectors();
        rows.push(h.clone());
        let k = left_kernel(&Matrix::from_rows(self.field, n, &rows));
        let xs: Vec<Vector> = k.basis().iter().map(|v| v.slice(0, n)).collect();
        Ok(Subspace::span(self.field, n, &xs))
    }
}

/// Affine family `particular + span(directions)` of bilinear forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpace {
    pub particular: Matrix,
    pub directions: Vec<Matrix>,
}

impl FormSpace {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }
}

/// An anticommutative algebra certified to satisfy the ω-Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaAlgebra(AnticommAlgebra);

impl Deref for OmegaAlgebra {
    type Target = AnticommAlgebra;
    fn deref(&self) -> &AnticommAlgebra {
        &self.0
    }
}

impl OmegaAlgebra {
    pub fn as_anticomm(&self) -> &AnticommAlgebra {
        &self.0
    }

    pub fn into_inner(self) -> AnticommAlgebra {
        self.0
    }
}

impl fmt::Display for AnticommAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}, dim {}", self.field, self.dim)?;
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.bracket_basis(i, j);
                if !v.is_zero() {
                    writeln!(f, "[e{},e{}] = {}", i + 1, j + 1, format_combination(v))?;
                }
            }
        }
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let s = self.omega_basis(i, j);
                if !s.is_zero() {
                    writeln!(f, "w(e{},e{}) = {}", i + 1, j + 1, s)?;
                }
            }
        }
        Ok(())
    }
}

/// Renders a vector as `c1*e1 + ...`, or `0`.
pub fn format_combination(v: &Vector) -> String {
    let mut parts = Vec::new();
    for (i, c) in v.entries().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(format!("e{}", i + 1));
        } else {
            parts.push(format!("{}*e{}", c, i + 1));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

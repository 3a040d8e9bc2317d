//! Growing algebras: codimension-one extensions, one-dimensional modules
//! and semidirect products, cochains, first-order deformations and minus
//! algebras of ω-associative products.

use crate::algebra::{AnticommAlgebra, LinearForm, OmegaAlgebra};
use crate::derivations::{check_al_derivation, AlphaLambdaDerivation};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar};
use crate::exactla::{kernel_basis, solve_affine, Matrix, Subspace, Vector};

/// `A ⊕ Kv` with `[x,v] = D(x) + λ(x)v` and `ω(x,v) = α(x)`; `v` is last.
pub fn extend_codim1(a: &OmegaAlgebra, d: &AlphaLambdaDerivation) -> Result<OmegaAlgebra> {
    if !a.is_multiplicative_for(&d.lambda) {
        return Err(Error::NotMultiplicative);
    }
    if !check_al_derivation(a, d) {
        return Err(Error::NotADerivation);
    }
    extend_codim1_unchecked(a, d)
        .into_validated()
        .map_err(Error::Invalid)
}

/// The extension table without any hypothesis check.
pub fn extend_codim1_unchecked(a: &AnticommAlgebra, d: &AlphaLambdaDerivation) -> AnticommAlgebra {
    let n = a.dim();
    let f = a.field();
    let mut e = AnticommAlgebra::new(f, n + 1);
    let lift = |v: &Vector| v.concat(&Vector::zeros(f, 1));
    for i in 0..n {
        for j in i + 1..n {
            e.set_bracket(i, j, lift(a.bracket_basis(i, j)));
            e.set_omega(i, j, a.omega_basis(i, j).clone());
        }
        let img = d.apply(&a.basis_vector(i));
        e.set_bracket(
            i,
            n,
            img.concat(&Vector::from_scalars(f, vec![d.lambda[i].clone()])),
        );
        e.set_omega(i, n, d.alpha[i].clone());
    }
    e
}

/// Left multiplications `m ↦ [x,m]` as matrices acting on column vectors.
pub fn adjoint_representation(a: &AnticommAlgebra) -> Vec<Matrix> {
    (0..a.dim())
        .map(|i| a.left_mult(&a.basis_vector(i)).transpose())
        .collect()
}

/// The one-dimensional module `x·m = λ(x)m`.
pub fn lambda_representation(lambda: &LinearForm) -> Vec<Matrix> {
    lambda
        .entries()
        .iter()
        .map(|s| {
            Matrix::from_rows(
                lambda.field(),
                1,
                &[Vector::from_scalars(lambda.field(), vec![s.clone()])],
            )
        })
        .collect()
}

/// `φ([x,y]) = φ(x)φ(y) − φ(y)φ(x) + ω(x,y)·1` on all basis pairs;
/// matrices act on column vectors.
pub fn check_representation(a: &AnticommAlgebra, phi: &[Matrix]) -> Result<bool> {
    let n = a.dim();
    if phi.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "expected {n} matrices, got {}",
            phi.len()
        )));
    }
    let m = phi.first().map_or(0, Matrix::rows);
    if phi.iter().any(|p| p.rows() != m || p.cols() != m) {
        return Err(Error::ShapeMismatch(
            "matrices must be square of equal size".into(),
        ));
    }
    let f = a.field();
    let image = |v: &Vector| {
        let mut out = Matrix::zeros(f, m, m);
        for (k, c) in v.entries().iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&phi[k].scale(c));
            }
        }
        out
    };
    for i in 0..n {
        for j in i + 1..n {
            let lhs = image(a.bracket_basis(i, j));
            let rhs = phi[i]
                .mul(&phi[j])
                .sub(&phi[j].mul(&phi[i]))
                .add(&Matrix::identity(f, m).scale(a.omega_basis(i, j)));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `L ⊕ M` with `[x,m] = φ(x)m`, `[M,M] = 0`, ω extended by zero.
pub fn semidirect(a: &OmegaAlgebra, phi: &[Matrix]) -> Result<OmegaAlgebra> {
    if !check_representation(a, phi)? {
        return Err(Error::NotARepresentation);
    }
    let n = a.dim();
    let m = phi.first().map_or(0, Matrix::rows);
    let f = a.field();
    let mut e = AnticommAlgebra::new(f, n + m);
    for i in 0..n {
        for j in i + 1..n {
            e.set_bracket(i, j, a.bracket_basis(i, j).concat(&Vector::zeros(f, m)));
            e.set_omega(i, j, a.omega_basis(i, j).clone());
        }
        for c in 0..m {
            let col = phi[i].col(c);
            e.set_bracket(i, n + c, Vector::zeros(f, n).concat(&col));
        }
    }
    e.into_validated().map_err(Error::Invalid)
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Alternating `k`-linear form, stored on increasing basis tuples in
/// [`combinations`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub n: usize,
    pub values: Vector,
}

impl Cochain {
    pub fn zero(field: Field, n: usize, degree: usize) -> Cochain {
        Cochain {
            degree,
            n,
            values: Vector::zeros(field, combinations(n, degree).len()),
        }
    }

    pub fn from_values(n: usize, degree: usize, values: Vector) -> Cochain {
        assert_eq!(
            values.len(),
            combinations(n, degree).len(),
            "wrong number of cochain values"
        );
        Cochain { degree, n, values }
    }

    fn index(&self, sorted: &[usize]) -> usize {
        combinations(self.n, self.degree)
            .iter()
            .position(|c| c == sorted)
            .expect("valid tuple")
    }

    /// Value on basis vectors in any order.
    pub fn on_basis(&self, idx: &[usize]) -> Scalar {
        let f = self.values.field();
        let mut v = idx.to_vec();
        let mut sign = false;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] == v[j + 1] {
                    return f.zero();
                }
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    sign = !sign;
                }
            }
        }
        let s = self.values[self.index(&v)].clone();
        if sign {
            -s
        } else {
            s
        }
    }

    /// Value with the first argument an arbitrary vector and the rest basis vectors.
    pub fn on_vector_first(&self, x: &Vector, rest: &[usize]) -> Scalar {
        let f = self.values.field();
        let mut s = f.zero();
        for (k, c) in x.entries().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut idx = vec![k];
            idx.extend_from_slice(rest);
            s = &s + &(c * &self.on_basis(&idx));
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }
}

/// Chevalley–Eilenberg differential with coefficients in the module
/// `x·m = λ(x)m`:
/// `dc(x_0..x_k) = Σ (−1)^i λ(x_i) c(..x̂_i..) + Σ_{i<j} (−1)^{i+j} c([x_i,x_j], ..x̂_i..x̂_j..)`.
pub fn cochain_differential(
    a: &AnticommAlgebra,
    lambda: &LinearForm,
    c: &Cochain,
) -> Result<Cochain> {
    if !a.is_multiplicative_for(lambda) {
        return Err(Error::NotMultiplicative);
    }
    Ok(differential_unchecked(a, lambda, c))
}

fn differential_unchecked(a: &AnticommAlgebra, lambda: &LinearForm, c: &Cochain) -> Cochain {
    let n = a.dim();
    let f = a.field();
    let k = c.degree;
    let tuples = combinations(n, k + 1);
    let mut vals = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let mut s = f.zero();
        for i in 0..=k {
            let rest: Vec<usize> = t
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != i)
                .map(|(_, &v)| v)
                .collect();
            let term = &lambda[t[i]] * &c.on_basis(&rest);
            s = if i % 2 == 0 { &s + &term } else { &s - &term };
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let rest: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != i && p != j)
                    .map(|(_, &v)| v)
                    .collect();
                let br = a.bracket_basis(t[i], t[j]);
                let term = c.on_vector_first(br, &rest);
                s = if (i + j) % 2 == 0 {
                    &s + &term
                } else {
                    &s - &term
                };
            }
        }
        vals.push(s);
    }
    Cochain {
        degree: k + 1,
        n,
        values: Vector::from_scalars(f, vals),
    }
}

/// Matrix of `d: C^k → C^{k+1}` acting on row vectors of cochain values.
pub fn differential_matrix(a: &AnticommAlgebra, lambda: &LinearForm, k: usize) -> Matrix {
    let n = a.dim();
    let f = a.field();
    let src = combinations(n, k).len();
    let dst = combinations(n, k + 1).len();
    let rows: Vec<Vector> = (0..src)
        .map(|u| {
            let c = Cochain {
                degree: k,
                n,
                values: Vector::unit(f, src, u),
            };
            differential_unchecked(a, lambda, &c).values
        })
        .collect();
    if rows.is_empty() {
        return Matrix::zeros(f, 0, dst);
    }
    Matrix::from_rows(f, dst, &rows)
}

/// `dim ker d² − dim im d¹`.
pub fn h2_dimension(a: &AnticommAlgebra, lambda: &LinearForm) -> Result<usize> {
    if !a.is_multiplicative_for(lambda) {
        return Err(Error::NotMultiplicative);
    }
    let n = a.dim();
    let c2 = combinations(n, 2).len();
    let r2 = if c2 == 0 {
        0
    } else {
        differential_matrix(a, lambda, 2).rank()
    };
    let r1 = if n == 0 {
        0
    } else {
        differential_matrix(a, lambda, 1).rank()
    };
    Ok(c2 - r2 - r1)
}

/// `E = L ⊕ Km` with `[x,y]_E = [x,y] + c(x,y)m`, `[x,m] = λ(x)m`, ω
/// extended by zero.
pub fn extension_from_cocycle(
    a: &OmegaAlgebra,
    lambda: &LinearForm,
    c: &Cochain,
) -> Result<OmegaAlgebra> {
    if c.degree != 2 || c.n != a.dim() {
        return Err(Error::ShapeMismatch(
            "expected a 2-cochain on the algebra".into(),
        ));
    }
    let dc = cochain_differential(a, lambda, c)?;
    if !dc.is_zero() {
        return Err(Error::NotACocycle);
    }
    extension_from_cochain_unchecked(a, lambda, c)
        .into_validated()
        .map_err(Error::Invalid)
}

pub fn extension_from_cochain_unchecked(
    a: &AnticommAlgebra,
    lambda: &LinearForm,
    c: &Cochain,
) -> AnticommAlgebra {
    let n = a.dim();
    let f = a.field();
    let mut e = AnticommAlgebra::new(f, n + 1);
    for i in 0..n {
        for j in i + 1..n {
            let v = a
                .bracket_basis(i, j)
                .concat(&Vector::from_scalars(f, vec![c.on_basis(&[i, j])]));
            e.set_bracket(i, j, v);
            e.set_omega(i, j, a.omega_basis(i, j).clone());
        }
        let mut v = Vector::zeros(f, n + 1);
        v[n] = lambda[i].clone();
        e.set_bracket(i, n, v);
    }
    e
}

/// A first-order deformation `(φ₁, ω₁)`: `phi1[(i,j)]` for `i<j` in
/// [`combinations`] order, `omega1` on the same pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationSolution {
    pub phi1: Vec<Vector>,
    pub omega1: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationSpace {
    pub n: usize,
    /// Flattened `(φ₁ pairs × n, ω₁ pairs)` solution space.
    pub space: Subspace,
    pub omega1_projection_dim: usize,
}

impl DeformationSpace {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn has_nontrivial_omega1(&self) -> bool {
        self.omega1_projection_dim > 0
    }

    pub fn basis(&self) -> Vec<DeformationSolution> {
        let n = self.n;
        let p = combinations(n, 2).len();
        self.space
            .basis()
            .iter()
            .map(|v| DeformationSolution {
                phi1: (0..p).map(|t| v.slice(t * n, (t + 1) * n)).collect(),
                omega1: v.slice(p * n, p * n + p),
            })
            .collect()
    }
}

/// Residual of the first-order ω-Jacobi condition at a basis triple.
pub fn deformation_residual(
    l: &AnticommAlgebra,
    s: &DeformationSolution,
    i: usize,
    j: usize,
    k: usize,
) -> Vector {
    let n = l.dim();
    let f = l.field();
    let pairs = combinations(n, 2);
    let phi_basis = |a: usize, b: usize| -> Vector {
        if a == b {
            return Vector::zeros(f, n);
        }
        let (lo, hi, neg) = if a < b { (a, b, false) } else { (b, a, true) };
        let v = &s.phi1[pairs
            .iter()
            .position(|p| p[0] == lo && p[1] == hi)
            .expect("pair")];
        if neg {
            v.neg()
        } else {
            v.clone()
        }
    };
    let phi = |x: &Vector, y: &Vector| -> Vector {
        let mut out = Vector::zeros(f, n);
        for a in 0..n {
            for b in 0..n {
                if a != b && !x[a].is_zero() && !y[b].is_zero() {
                    out.axpy(&(&x[a] * &y[b]), &phi_basis(a, b));
                }
            }
        }
        out
    };
    let om = |a: usize, b: usize| -> Scalar {
        if a == b {
            return f.zero();
        }
        let (lo, hi, neg) = if a < b { (a, b, false) } else { (b, a, true) };
        let v = s.omega1[pairs
            .iter()
            .position(|p| p[0] == lo && p[1] == hi)
            .expect("pair")]
        .clone();
        if neg {
            -v
        } else {
            v
        }
    };
    let (x, y, z) = (l.basis_vector(i), l.basis_vector(j), l.basis_vector(k));
    let mut lhs = phi(&l.bracket(&x, &y), &z)
        .add(&phi(&l.bracket(&z, &x), &y))
        .add(&phi(&l.bracket(&y, &z), &x));
    lhs = lhs
        .add(&l.bracket(&phi(&x, &y), &z))
        .add(&l.bracket(&phi(&z, &x), &y))
        .add(&l.bracket(&phi(&y, &z), &x));
    let mut rhs = z.scale(&om(i, j));
    rhs.axpy(&om(k, i), &y);
    rhs.axpy(&om(j, k), &x);
    lhs.sub(&rhs)
}

/// Solution space of the first-order condition in the unknowns
/// `(φ₁(e_i,e_j)_l, ω₁(e_i,e_j))`, `i<j`.
pub fn infinitesimal_deformations(l: &AnticommAlgebra) -> Result<DeformationSpace> {
    if !l.is_lie() || !l.omega_is_zero() {
        return Err(Error::NotALieAlgebra);
    }
    let n = l.dim();
    let f = l.field();
    let p = combinations(n, 2).len();
    let nu = p * n + p;
    let unit = |u: usize| -> DeformationSolution {
        let v = Vector::unit(f, nu, u);
        DeformationSolution {
            phi1: (0..p).map(|t| v.slice(t * n, (t + 1) * n)).collect(),
            omega1: v.slice(p * n, nu),
        }
    };
    let triples = combinations(n, 3);
    let space = if triples.is_empty() {
        Subspace::full(f, nu)
    } else {
        let mut cols = Vec::new();
        for u in 0..nu {
            let s = unit(u);
            let mut col = Vec::new();
            for t in &triples {
                col.extend(deformation_residual(l, &s, t[0], t[1], t[2]).into_entries());
            }
            cols.push(Vector::from_scalars(f, col));
        }
        let m = Matrix::from_rows(f, triples.len() * n, &cols).transpose();
        kernel_basis(&m)
    };
    let proj: Vec<Vector> = space.basis().iter().map(|v| v.slice(p * n, nu)).collect();
    let omega1_projection_dim = Subspace::span(f, p, &proj).dim();
    Ok(DeformationSpace {
        n,
        space,
        omega1_projection_dim,
    })
}

/// A general bilinear product `e_i e_j = Σ_k t[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductTable {
    field: Field,
    dim: usize,
    table: Vec<Vector>,
}

impl ProductTable {
    pub fn new(field: Field, dim: usize) -> ProductTable {
        ProductTable {
            field,
            dim,
            table: vec![Vector::zeros(field, dim); dim * dim],
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        self.table[i * self.dim + j] = v;
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if !y[j].is_zero() {
                    out.axpy(&(&x[i] * &y[j]), &self.table[i * self.dim + j]);
                }
            }
        }
        out
    }

    /// Product of `k×k` matrices on the basis of matrix units `E_ab`, index `a*k+b`.
    pub fn matrix_algebra(field: Field, k: usize) -> ProductTable {
        let n = k * k;
        let mut t = ProductTable::new(field, n);
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    t.set(a * k + b, b * k + c, Vector::unit(field, n, a * k + c));
                }
            }
        }
        t
    }
}

/// `(ω₁, ω₂)` as Gram matrices with `(xy)z − x(yz) = ω₁(x,y)z − ω₂(y,z)x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocForms {
    pub omega1: Matrix,
    pub omega2: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssocFormSpace {
    pub particular: AssocForms,
    pub directions: Vec<AssocForms>,
}

fn split_forms(f: Field, n: usize, v: &Vector) -> AssocForms {
    AssocForms {
        omega1: Matrix::from_flat(f, n, n, &v.slice(0, n * n)),
        omega2: Matrix::from_flat(f, n, n, &v.slice(n * n, 2 * n * n)),
    }
}

/// Solution set of the ω-associativity condition over all basis triples;
/// `None` if empty.
pub fn omega_assoc_space(p: &ProductTable) -> Option<AssocFormSpace> {
    let n = p.dim;
    let f = p.field;
    let e = |i| Vector::unit(f, n, i);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let assoc = p
                    .mul(&p.mul(&e(i), &e(j)), &e(k))
                    .sub(&p.mul(&e(i), &p.mul(&e(j), &e(k))));
                for l in 0..n {
                    let mut row = Vector::zeros(f, 2 * n * n);
                    if k == l {
                        row[i * n + j] = &row[i * n + j] + &f.one();
                    }
                    if i == l {
                        let c = n * n + j * n + k;
                        row[c] = &row[c] - &f.one();
                    }
                    rows.push(row);
                    rhs.push(assoc[l].clone());
                }
            }
        }
    }
    let sol = solve_affine(
        &Matrix::from_rows(f, 2 * n * n, &rows),
        &Vector::from_scalars(f, rhs),
    )?;
    Some(AssocFormSpace {
        particular: split_forms(f, n, &sol.particular),
        directions: sol
            .kernel
            .basis()
            .iter()
            .map(|v| split_forms(f, n, v))
            .collect(),
    })
}

pub fn is_omega_associative(p: &ProductTable, forms: &AssocForms) -> bool {
    let n = p.dim;
    let f = p.field;
    let e = |i| Vector::unit(f, n, i);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let assoc = p
                    .mul(&p.mul(&e(i), &e(j)), &e(k))
                    .sub(&p.mul(&e(i), &p.mul(&e(j), &e(k))));
                let mut rhs = e(k).scale(forms.omega1.get(i, j));
                rhs.axpy(&-forms.omega2.get(j, k), &e(i));
                if assoc != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// `[x,y] = xy − yx` with `ω(x,y) = (ω₁−ω₂)(x,y) − (ω₁−ω₂)(y,x)`.
pub fn minus_algebra(p: &ProductTable, forms: &AssocForms) -> Result<OmegaAlgebra> {
    if !is_omega_associative(p, forms) {
        return Err(Error::NotOmegaAssociative);
    }
    let n = p.dim;
    let f = p.field;
    let diff = forms.omega1.sub(&forms.omega2);
    let mut a = AnticommAlgebra::new(f, n);
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (Vector::unit(f, n, i), Vector::unit(f, n, j));
            a.set_bracket(i, j, p.mul(&x, &y).sub(&p.mul(&y, &x)));
            a.set_omega(i, j, diff.get(i, j) - diff.get(j, i));
        }
    }
    a.into_validated().map_err(Error::Invalid)
}

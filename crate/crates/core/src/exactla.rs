//! Exact dense linear algebra: vectors, matrices, row reduction and
//! canonical subspaces.
//!
//! Linear maps on `K^n` are stored as matrices acting on row vectors: row `i`
//! holds the image of `e_i`, so `f(x) = x·M` and `f∘g` has matrix `M_g·M_f`.

use std::fmt;
use std::ops::{Index, IndexMut};

use thiserror::Error;

use crate::exactfield::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: Field, n: usize) -> Vector {
        Vector {
            field,
            entries: vec![field.zero(); n],
        }
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Vector {
        let mut v = Vector::zeros(field, n);
        v.entries[i] = field.one();
        v
    }

    pub fn from_scalars(field: Field, entries: Vec<Scalar>) -> Vector {
        debug_assert!(entries.iter().all(|s| s.field() == field));
        Vector { field, entries }
    }

    pub fn from_ints(field: Field, xs: &[i64]) -> Vector {
        Vector {
            field,
            entries: xs.iter().map(|&x| field.int(x)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, o: &Vector) -> Vector {
        assert_eq!(self.len(), o.len(), "vector length mismatch");
        Vector {
            field: self.field,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, o: &Vector) -> Vector {
        assert_eq!(self.len(), o.len(), "vector length mismatch");
        Vector {
            field: self.field,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    /// `self += c·o`
    pub fn axpy(&mut self, c: &Scalar, o: &Vector) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&o.entries) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    pub fn dot(&self, o: &Vector) -> Scalar {
        assert_eq!(self.len(), o.len(), "vector length mismatch");
        let mut s = self.field.zero();
        for (a, b) in self.entries.iter().zip(&o.entries) {
            if !a.is_zero() && !b.is_zero() {
                s = &s + &(a * b);
            }
        }
        s
    }

    /// Row vector times matrix.
    pub fn mul_mat(&self, m: &Matrix) -> Vector {
        assert_eq!(self.len(), m.rows, "vector/matrix shape mismatch");
        let mut out = Vector::zeros(self.field, m.cols);
        for (i, a) in self.entries.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..m.cols {
                let b = m.get(i, j);
                if !b.is_zero() {
                    out.entries[j] = &out.entries[j] + &(a * b);
                }
            }
        }
        out
    }

    pub fn concat(&self, o: &Vector) -> Vector {
        let mut e = self.entries.clone();
        e.extend(o.entries.iter().cloned());
        Vector {
            field: self.field,
            entries: e,
        }
    }

    pub fn slice(&self, from: usize, to: usize) -> Vector {
        Vector {
            field: self.field,
            entries: self.entries[from..to].to_vec(),
        }
    }

    /// Index of the first nonzero entry.
    pub fn leading(&self) -> Option<usize> {
        self.entries.iter().position(|s| !s.is_zero())
    }

    /// Scaled so the leading entry is 1.
    pub fn normalized(&self) -> Vector {
        match self.leading() {
            None => self.clone(),
            Some(i) => self.scale(&self.entries[i].inv().expect("nonzero")),
        }
    }

    pub fn encode(&self) -> Vec<String> {
        self.entries.iter().map(Scalar::encode).collect()
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.entries[i]
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, cols: usize, rows: &[Vector]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.entries.iter().cloned());
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let vs: Vec<Vector> = rows.iter().map(|r| Vector::from_ints(field, r)).collect();
        Matrix::from_rows(field, cols, &vs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector {
            field: self.field,
            entries: self.data[i * self.cols..(i + 1) * self.cols].to_vec(),
        }
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector {
            field: self.field,
            entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect(),
        }
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_col(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        let mut out = Vector::zeros(self.field, self.rows);
        for i in 0..self.rows {
            let mut s = self.field.zero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    s = &s + &(a * &v[j]);
                }
            }
            out[i] = s;
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "matrix shape mismatch"
        );
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "matrix shape mismatch"
        );
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// `self + c·I`
    pub fn shift(&self, c: &Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i) + c;
            m.set(i, i, v);
        }
        m
    }

    pub fn pow(&self, e: usize) -> Matrix {
        let mut r = Matrix::identity(self.field, self.rows);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn rank(&self) -> usize {
        rref(self).rank
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vector {
        Vector {
            field: self.field,
            entries: self.data.clone(),
        }
    }

    pub fn from_flat(field: Field, rows: usize, cols: usize, v: &Vector) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            data: v.entries.clone(),
        }
    }

    pub fn encode(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).encode()).collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row(i))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form by Gauss–Jordan elimination.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.get(r, c).inv().expect("nonzero pivot");
        for j in c..cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let rj = a.get(r, j);
                if !rj.is_zero() {
                    let v = a.get(i, j) - &(&f * rj);
                    a.set(i, j, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref {
        matrix: a,
        rank: r,
        pivots,
    }
}

/// `{v : m·v = 0}` for column vectors `v`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let field = m.field;
    let cols = m.cols;
    let red = rref(m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !red.pivots.contains(c)) {
        let mut v = Vector::zeros(field, cols);
        v[free] = field.one();
        for (r, &pc) in red.pivots.iter().enumerate() {
            v[pc] = -red.matrix.get(r, free);
        }
        basis.push(v);
    }
    Subspace::span(field, cols, &basis)
}

/// `{x : x·m = 0}` for row vectors `x`.
pub fn left_kernel(m: &Matrix) -> Subspace {
    kernel_basis(&m.transpose())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vector,
    pub kernel: Subspace,
}

/// Solves `a·v = b` (column vectors). `None` when inconsistent.
pub fn solve_affine(a: &Matrix, b: &Vector) -> Option<AffineSolution> {
    assert_eq!(a.rows, b.len(), "system shape mismatch");
    let field = a.field;
    let mut aug = Matrix::zeros(field, a.rows, a.cols + 1);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, b[i].clone());
    }
    let red = rref(&aug);
    if red.pivots.last() == Some(&a.cols) {
        return None;
    }
    let mut particular = Vector::zeros(field, a.cols);
    for (r, &pc) in red.pivots.iter().enumerate() {
        particular[pc] = red.matrix.get(r, a.cols).clone();
    }
    Some(AffineSolution {
        particular,
        kernel: kernel_basis(a),
    })
}

/// A subspace of `K^n` stored by its unique RREF basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: (0..ambient)
                .map(|i| Vector::unit(field, ambient, i))
                .collect(),
        }
    }

    pub fn span(field: Field, ambient: usize, vs: &[Vector]) -> Subspace {
        if vs.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let red = rref(&Matrix::from_rows(field, ambient, vs));
        Subspace {
            field,
            ambient,
            basis: (0..red.rank).map(|i| red.matrix.row(i)).collect(),
        }
    }

    pub fn coordinate_span(field: Field, ambient: usize, idx: &[usize]) -> Subspace {
        let vs: Vec<Vector> = idx
            .iter()
            .map(|&i| Vector::unit(field, ambient, i))
            .collect();
        Subspace::span(field, ambient, &vs)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|v| v.leading().expect("nonzero basis row"))
            .collect()
    }

    fn same_space(&self, o: &Subspace) -> Result<(), LaError> {
        if self.field != o.field {
            return Err(LaError::FieldMismatch(self.field, o.field));
        }
        if self.ambient != o.ambient {
            return Err(LaError::DimensionMismatch(self.ambient, o.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, o: &Subspace) -> Result<Subspace, LaError> {
        self.same_space(o)?;
        let mut vs = self.basis.clone();
        vs.extend(o.basis.iter().cloned());
        Ok(Subspace::span(self.field, self.ambient, &vs))
    }

    /// Zassenhaus: row-reduce `[[A, A], [B, 0]]`; rows with vanishing left half
    /// span `A ∩ B` in their right half.
    pub fn intersect(&self, o: &Subspace) -> Result<Subspace, LaError> {
        self.same_space(o)?;
        let n = self.ambient;
        let f = self.field;
        let mut rows = Vec::new();
        for a in &self.basis {
            rows.push(a.concat(a));
        }
        for b in &o.basis {
            rows.push(b.concat(&Vector::zeros(f, n)));
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(f, n));
        }
        let red = rref(&Matrix::from_rows(f, 2 * n, &rows));
        let vs: Vec<Vector> = (0..red.rank)
            .map(|i| red.matrix.row(i))
            .filter(|r| r.slice(0, n).is_zero())
            .map(|r| r.slice(n, 2 * n))
            .collect();
        Ok(Subspace::span(f, n, &vs))
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, LaError> {
        if v.len() != self.ambient {
            return Err(LaError::DimensionMismatch(self.ambient, v.len()));
        }
        Ok(self.reduce(v).is_zero())
    }

    pub fn contains_subspace(&self, o: &Subspace) -> Result<bool, LaError> {
        self.same_space(o)?;
        Ok(o.basis.iter().all(|v| self.reduce(v).is_zero()))
    }

    /// Remainder of `v` after clearing the pivot columns.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for b in &self.basis {
            let p = b.leading().expect("nonzero basis row");
            if !r[p].is_zero() {
                let c = -&r[p];
                r.axpy(&c, b);
            }
        }
        r
    }

    /// Coordinates of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        if !self.reduce(v).is_zero() {
            return None;
        }
        let cs = self.pivots().iter().map(|&p| v[p].clone()).collect();
        Some(Vector::from_scalars(self.field, cs))
    }

    /// Standard basis vectors at the non-pivot columns; they complete the
    /// basis to the ambient space.
    pub fn quotient_basis(&self) -> Vec<Vector> {
        let piv = self.pivots();
        (0..self.ambient)
            .filter(|c| !piv.contains(c))
            .map(|c| Vector::unit(self.field, self.ambient, c))
            .collect()
    }

    pub fn complement(&self) -> Subspace {
        Subspace::span(self.field, self.ambient, &self.quotient_basis())
    }

    /// Image under the row-convention map `x ↦ x·m`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(|b| b.mul_mat(m)).collect();
        Subspace::span(self.field, m.cols(), &vs)
    }

    /// Matrix whose rows are the basis.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, &self.basis)
    }

    /// Linear forms vanishing on the subspace, as a subspace of the dual.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.field, self.ambient);
        }
        kernel_basis(&self.matrix())
    }

    pub fn encode(&self) -> Vec<Vec<String>> {
        self.basis.iter().map(Vector::encode).collect()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

/// Representatives of the projective points of `GF(p)^n`: every nonzero
/// vector whose leading entry is 1, in lexicographic order of (leading
/// position, tail digits). Empty over ℚ.
pub fn projective_points(field: Field, n: usize) -> impl Iterator<Item = Vector> {
    let p = field.order().unwrap_or(0);
    (0..n).flat_map(move |lead| {
        let tail = n - lead - 1;
        let count = if p == 0 { 0 } else { p.pow(tail as u32) };
        (0..count).map(move |mut code| {
            let mut v = Vector::zeros(field, n);
            v[lead] = field.one();
            for j in (lead + 1..n).rev() {
                v[j] = field.element(code % p);
                code /= p;
            }
            v
        })
    })
}

/// Number of projective points of `GF(p)^n`, saturating.
pub fn projective_count(field: Field, n: usize) -> u64 {
    match field.order() {
        None => u64::MAX,
        Some(p) => (0..n as u32).fold(0u64, |acc, k| acc.saturating_add(p.saturating_pow(k))),
    }
}

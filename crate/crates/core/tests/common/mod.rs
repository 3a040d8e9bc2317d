//! Independent reference computations for the integration tests. Nothing
//! here calls the library's linear algebra; only scalar arithmetic and the
//! bracket on explicit vectors are shared.
#![allow(dead_code)]

use olie_core::catalog::{self, random_dim3, random_extension_chain, Chain, ENTRIES};
use olie_core::{AnticommAlgebra, Field, OmegaAlgebra, Scalar, Vector};

/// Rank by plain Gaussian elimination on owned rows.
pub fn dense_rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for c in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].inv().unwrap();
        let pivot: Vec<Scalar> = rows[rank].iter().map(|x| x * &inv).collect();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for k in 0..width {
                    rows[r][k] = &rows[r][k] - &(&f * &pivot[k]);
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

fn columns_to_rows(cols: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    if cols.is_empty() {
        return Vec::new();
    }
    let h = cols[0].len();
    (0..h)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect()
}

/// Dimension of the null space of the linear map given by its images of the
/// unit vectors.
pub fn nullity(images: Vec<Vec<Scalar>>) -> usize {
    let n = images.len();
    n - dense_rank(columns_to_rows(images))
}

fn e(a: &AnticommAlgebra, i: usize) -> Vector {
    Vector::unit(a.field(), a.dim(), i)
}

/// Dimension of the (α,λ)-derivation space, by evaluating the defining
/// identity on every unknown separately.
pub fn derivation_dim(a: &AnticommAlgebra, lambda: &[Scalar]) -> usize {
    let n = a.dim();
    let f = a.field();
    let mut images = Vec::new();
    for u in 0..n * n + n {
        let dmat = |x: &Vector| -> Vector {
            let mut out = Vector::zeros(f, n);
            if u < n * n {
                let (r, c) = (u / n, u % n);
                out[c] = x[r].clone();
            }
            out
        };
        let alpha = |x: &Vector| -> Scalar {
            if u >= n * n {
                x[u - n * n].clone()
            } else {
                f.zero()
            }
        };
        let lam =
            |x: &Vector| -> Scalar { (0..n).fold(f.zero(), |s, k| &s + &(&x[k] * &lambda[k])) };
        let mut col = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (x, y) = (e(a, i), e(a, j));
                let mut r = dmat(&a.bracket(&x, &y));
                r = r
                    .sub(&a.bracket(&dmat(&x), &y))
                    .sub(&a.bracket(&x, &dmat(&y)));
                r = r
                    .sub(&dmat(&x).scale(&lam(&y)))
                    .add(&dmat(&y).scale(&lam(&x)));
                r = r.sub(&x.scale(&alpha(&y))).add(&y.scale(&alpha(&x)));
                col.extend(r.into_entries());
            }
        }
        images.push(col);
    }
    if n < 2 {
        return n * n + n;
    }
    nullity(images)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .collect()
}

/// Skew 2-cochain from its values on increasing pairs, extended bilinearly.
fn two_form(f: Field, n: usize, vals: &[Scalar]) -> impl Fn(&Vector, &Vector) -> Scalar + '_ {
    let ps = pairs(n);
    move |x: &Vector, y: &Vector| {
        let mut s = f.zero();
        for (t, &(i, j)) in ps.iter().enumerate() {
            let m = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            s = &s + &(&m * &vals[t]);
        }
        s
    }
}

/// `dim H²` from independently assembled `d¹` and `d²` with coefficients
/// in the module `x·m = λ(x)m`.
pub fn h2_dim(a: &AnticommAlgebra, lambda: &[Scalar]) -> usize {
    let n = a.dim();
    let f = a.field();
    let lam = |x: &Vector| -> Scalar { (0..n).fold(f.zero(), |s, k| &s + &(&x[k] * &lambda[k])) };
    let mut d1 = Vec::new();
    for u in 0..n {
        let g = |x: &Vector| x[u].clone();
        let mut col = Vec::new();
        for (i, j) in pairs(n) {
            let (x, y) = (e(a, i), e(a, j));
            let v = &(&(&lam(&x) * &g(&y)) - &(&lam(&y) * &g(&x))) - &g(&a.bracket(&x, &y));
            col.push(v);
        }
        d1.push(col);
    }
    let c2 = pairs(n).len();
    let mut d2 = Vec::new();
    for u in 0..c2 {
        let vals: Vec<Scalar> = (0..c2)
            .map(|t| if t == u { f.one() } else { f.zero() })
            .collect();
        let c = two_form(f, n, &vals);
        let mut col = Vec::new();
        for (i, j, k) in triples(n) {
            let (x, y, z) = (e(a, i), e(a, j), e(a, k));
            let mut s = &(&lam(&x) * &c(&y, &z)) - &(&lam(&y) * &c(&x, &z));
            s = &s + &(&lam(&z) * &c(&x, &y));
            s = &s - &c(&a.bracket(&x, &y), &z);
            s = &s + &c(&a.bracket(&x, &z), &y);
            s = &s - &c(&a.bracket(&y, &z), &x);
            col.push(s);
        }
        d2.push(col);
    }
    let rank1 = if c2 == 0 {
        0
    } else {
        dense_rank(columns_to_rows(d1))
    };
    let ker2 = if triples(n).is_empty() {
        c2
    } else {
        nullity(d2)
    };
    ker2 - rank1
}

/// `(dim, dim of the ω₁ projection)` of the first-order deformation space
/// of a Lie algebra.
pub fn deformation_dims(l: &AnticommAlgebra) -> (usize, usize) {
    let n = l.dim();
    let f = l.field();
    let p = pairs(n).len();
    let nu = p * n + p;
    let mut images = Vec::new();
    for u in 0..nu {
        let phi = |x: &Vector, y: &Vector| -> Vector {
            let mut out = Vector::zeros(f, n);
            if u < p * n {
                let (t, comp) = (u / n, u % n);
                let (i, j) = pairs(n)[t];
                out[comp] = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            }
            out
        };
        let mut ov = vec![f.zero(); p];
        if u >= p * n {
            ov[u - p * n] = f.one();
        }
        let om = two_form(f, n, &ov);
        let mut col = Vec::new();
        for (i, j, k) in triples(n) {
            let (x, y, z) = (e(l, i), e(l, j), e(l, k));
            let mut lhs = Vector::zeros(f, n);
            for (a, b, c) in [(&x, &y, &z), (&z, &x, &y), (&y, &z, &x)] {
                lhs = lhs
                    .add(&phi(&l.bracket(a, b), c))
                    .add(&l.bracket(&phi(a, b), c));
                lhs = lhs.sub(&c.scale(&om(a, b)));
            }
            col.extend(lhs.into_entries());
        }
        images.push(col);
    }
    if triples(n).is_empty() {
        return (nu, p);
    }
    let dim = nullity(images.clone());
    // solutions with ω₁ = 0 are the null space of the φ columns alone
    let phi_only = nullity(images[..p * n].to_vec());
    (dim, dim - phi_only)
}

/// Every valid catalog entry over `f`.
pub fn catalog_algebras(f: Field) -> Vec<OmegaAlgebra> {
    ENTRIES
        .iter()
        .filter(|e| e.valid)
        .map(|e| catalog::builtin_algebra_over(e.name, f).unwrap())
        .collect()
}

pub fn chain(f: Field, seed: u64, dim: usize) -> Option<OmegaAlgebra> {
    match random_extension_chain(f, seed, dim) {
        Chain::Done(a) => Some(a),
        Chain::Stuck { .. } => None,
    }
}

/// A varied pool: catalog over ℚ and GF(5), random dim 3, chains to 4 and 5.
pub fn instance_pool() -> Vec<OmegaAlgebra> {
    let mut out = catalog_algebras(Field::Q);
    out.extend(catalog_algebras(Field::Gf(5)));
    for s in 0..10 {
        out.push(random_dim3(Field::Q, s));
        out.push(random_dim3(Field::Gf(7), s));
        out.extend(chain(Field::Gf(5), s, 4));
        out.extend(chain(Field::Gf(5), s, 5));
        out.extend(chain(Field::Q, s, 4));
    }
    out
}

pub fn q(n: i64) -> Scalar {
    Field::Q.int(n)
}

pub fn ints(f: Field, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| f.int(x)).collect()
}

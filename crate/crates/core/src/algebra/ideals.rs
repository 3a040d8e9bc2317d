//! Ideals, subalgebras, quotients and abelian pieces.

use crate::error::{Error, Result};
use crate::exactla::{projective_count, projective_points, solve_affine, Matrix, Subspace, Vector};

use super::{AnticommAlgebra, LinearForm, OmegaAlgebra};

/// Exhaustive searches over GF(p)^n run when p^n is at most this.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlmostAbelian {
    Abelian,
    /// `[a,x] = a` for every `a` in the abelian part and `λ(x) = 1`.
    AlmostAbelian {
        abelian_part: Subspace,
        x: Vector,
        lambda: LinearForm,
    },
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealSearch {
    Found(Subspace),
    /// `exhaustive` is true when every principal ideal was examined, which
    /// makes the answer definitive.
    NotFound {
        exhaustive: bool,
    },
}

pub type AbelianIdealSearch = IdealSearch;

impl IdealSearch {
    pub fn ideal(&self) -> Option<&Subspace> {
        match self {
            IdealSearch::Found(s) => Some(s),
            IdealSearch::NotFound { .. } => None,
        }
    }
}

impl AnticommAlgebra {
    pub(crate) fn exhaustive_ok(&self) -> bool {
        self.field().is_finite() && projective_count(self.field(), self.dim()) <= EXHAUSTIVE_LIMIT
    }

    /// Smallest subspace containing `generators` and closed under bracketing
    /// with every basis vector.
    pub fn ideal_closure(&self, generators: &[Vector]) -> Subspace {
        let n = self.dim();
        let mut s = Subspace::span(self.field(), n, generators);
        loop {
            let mut vs = s.basis().to_vec();
            for b in s.basis() {
                for i in 0..n {
                    vs.push(self.bracket(b, &self.basis_vector(i)));
                }
            }
            let next = Subspace::span(self.field(), n, &vs);
            if next.dim() == s.dim() {
                return s;
            }
            s = next;
        }
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|b| {
            (0..self.dim()).all(|i| s.reduce(&self.bracket(b, &self.basis_vector(i))).is_zero())
        })
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let bs = s.basis();
        (0..bs.len())
            .all(|i| (i + 1..bs.len()).all(|j| s.reduce(&self.bracket(&bs[i], &bs[j])).is_zero()))
    }

    pub fn is_abelian_subspace(&self, s: &Subspace) -> bool {
        let bs = s.basis();
        (0..bs.len()).all(|i| (i + 1..bs.len()).all(|j| self.bracket(&bs[i], &bs[j]).is_zero()))
    }

    /// `{x : [x, L] = 0}`
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut cols = Vec::new();
        for i in 0..n {
            cols.push(self.ad(&self.basis_vector(i)));
        }
        let mut rows = Vec::new();
        for r in 0..n {
            let mut row = Vec::new();
            for m in &cols {
                row.extend(m.row(r).into_entries());
            }
            rows.push(Vector::from_scalars(self.field(), row));
        }
        crate::exactla::left_kernel(&Matrix::from_rows(self.field(), n * n, &rows))
    }

    /// `{x : [x, s] = 0 for all s ∈ S}`
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let n = self.dim();
        if s.is_zero() {
            return Subspace::full(self.field(), n);
        }
        let mut rows = vec![Vec::new(); n];
        for b in s.basis() {
            let m = self.ad(b);
            for (r, row) in rows.iter_mut().enumerate() {
                row.extend(m.row(r).into_entries());
            }
        }
        let rows: Vec<Vector> = rows
            .into_iter()
            .map(|r| Vector::from_scalars(self.field(), r))
            .collect();
        crate::exactla::left_kernel(&Matrix::from_rows(self.field(), n * s.dim(), &rows))
    }

    /// For each basis vector `b` of `I`, the induced map of `y ↦ [b,y]` on
    /// `L/I` must be scalar.
    pub fn is_quasi_ideal(&self, s: &Subspace) -> bool {
        let reps = s.quotient_basis();
        let cols: Vec<usize> = reps
            .iter()
            .map(|r| r.leading().expect("unit vector"))
            .collect();
        s.basis().iter().all(|b| {
            let mut scalar = None;
            for (a, q) in reps.iter().enumerate() {
                let img = s.reduce(&self.bracket(b, q));
                for (c, &col) in cols.iter().enumerate() {
                    if c != a && !img[col].is_zero() {
                        return false;
                    }
                }
                let d = img[cols[a]].clone();
                match &scalar {
                    None => scalar = Some(d),
                    Some(prev) if *prev != d => return false,
                    _ => {}
                }
            }
            true
        })
    }

    /// Solves `[e_i,e_j] = λ(e_j)e_i − λ(e_i)e_j` for a linear form λ.
    pub fn almost_abelian_decomposition(&self) -> AlmostAbelian {
        let n = self.dim();
        let f = self.field();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = self.bracket_basis(i, j);
                for l in 0..n {
                    let mut row = Vector::zeros(f, n);
                    if l == i {
                        row[j] = f.one();
                    }
                    if l == j {
                        row[i] = -f.one();
                    }
                    rows.push(row);
                    rhs.push(c[l].clone());
                }
            }
        }
        if rows.is_empty() {
            return AlmostAbelian::Abelian;
        }
        let Some(sol) = solve_affine(
            &Matrix::from_rows(f, n, &rows),
            &Vector::from_scalars(f, rhs),
        ) else {
            return AlmostAbelian::Neither;
        };
        let lambda = sol.particular;
        if lambda.is_zero() {
            return AlmostAbelian::Abelian;
        }
        let k = lambda.leading().expect("nonzero");
        let x = self
            .basis_vector(k)
            .scale(&lambda[k].inv().expect("nonzero"));
        let abelian_part =
            crate::exactla::kernel_basis(&Matrix::from_rows(f, n, std::slice::from_ref(&lambda)));
        AlmostAbelian::AlmostAbelian {
            abelian_part,
            x,
            lambda,
        }
    }

    /// The structure restricted to a subalgebra, in the coordinates of the
    /// subspace's RREF basis. ω is restricted as well; no validation.
    pub fn restrict_unchecked(&self, s: &Subspace) -> Result<AnticommAlgebra> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        let bs = s.basis();
        let mut out = AnticommAlgebra::new(self.field(), bs.len());
        for a in 0..bs.len() {
            for b in a + 1..bs.len() {
                let c = s
                    .coordinates(&self.bracket(&bs[a], &bs[b]))
                    .expect("closed");
                out.set_bracket(a, b, c);
                out.set_omega(a, b, self.omega(&bs[a], &bs[b]));
            }
        }
        Ok(out)
    }

    /// Quotient structure on the coset representatives `quotient_basis(I)`;
    /// no validation.
    pub fn quotient_unchecked(&self, i: &Subspace) -> Result<AnticommAlgebra> {
        if !self.is_ideal(i) {
            return Err(Error::NotAnIdeal);
        }
        if !self.omega_kernel().contains_subspace(i)? {
            return Err(Error::KernelConditionFailed);
        }
        let reps = i.quotient_basis();
        let cols: Vec<usize> = reps
            .iter()
            .map(|r| r.leading().expect("unit vector"))
            .collect();
        let mut out = AnticommAlgebra::new(self.field(), reps.len());
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                let img = i.reduce(&self.bracket(&reps[a], &reps[b]));
                let c = Vector::from_scalars(
                    self.field(),
                    cols.iter().map(|&k| img[k].clone()).collect(),
                );
                out.set_bracket(a, b, c);
                out.set_omega(a, b, self.omega(&reps[a], &reps[b]));
            }
        }
        Ok(out)
    }

    /// Candidate subspaces whose spun closures are tested for abelian ideals.
    fn abelian_ideal_candidates(&self) -> Vec<Subspace> {
        let n = self.dim();
        let mut out = vec![self.center(), self.omega_kernel()];
        let k = self.omega_kernel();
        if let Ok(sub) = self.restrict_unchecked(&k) {
            if let AlmostAbelian::AlmostAbelian { abelian_part, .. } =
                sub.almost_abelian_decomposition()
            {
                let vs: Vec<Vector> = abelian_part
                    .basis()
                    .iter()
                    .map(|c| {
                        let mut v = Vector::zeros(self.field(), n);
                        for (t, b) in k.basis().iter().enumerate() {
                            v.axpy(&c[t], b);
                        }
                        v
                    })
                    .collect();
                out.push(Subspace::span(self.field(), n, &vs));
            }
        }
        for i in 0..n {
            out.push(Subspace::span(self.field(), n, &[self.basis_vector(i)]));
        }
        out
    }

    fn find_ideal(&self, good: impl Fn(&Subspace) -> bool) -> IdealSearch {
        let n = self.dim();
        for c in self.abelian_ideal_candidates() {
            if c.is_zero() {
                continue;
            }
            let cl = self.ideal_closure(c.basis());
            if good(&cl) {
                return IdealSearch::Found(cl);
            }
        }
        if self.exhaustive_ok() {
            for v in projective_points(self.field(), n) {
                let cl = self.ideal_closure(&[v]);
                if good(&cl) {
                    return IdealSearch::Found(cl);
                }
            }
            return IdealSearch::NotFound { exhaustive: true };
        }
        IdealSearch::NotFound { exhaustive: false }
    }

    /// A nonzero abelian ideal, searched first among structural candidates
    /// and then, over small GF(p), among all principal ideals.
    pub fn find_abelian_ideal(&self) -> IdealSearch {
        self.find_ideal(|s| self.is_abelian_subspace(s))
    }

    /// `S, [S,S], [[S,S],[S,S]], …` until it stabilizes.
    pub fn derived_series(&self, s: &Subspace) -> Vec<Subspace> {
        let mut out = vec![s.clone()];
        loop {
            let cur = out.last().unwrap();
            let bs = cur.basis();
            let mut vs = Vec::new();
            for i in 0..bs.len() {
                for j in i + 1..bs.len() {
                    vs.push(self.bracket(&bs[i], &bs[j]));
                }
            }
            let next = Subspace::span(self.field(), self.dim(), &vs);
            if next.dim() == cur.dim() {
                return out;
            }
            let done = next.is_zero();
            out.push(next);
            if done {
                return out;
            }
        }
    }

    pub fn is_solvable_subspace(&self, s: &Subspace) -> bool {
        self.derived_series(s).last().is_some_and(Subspace::is_zero)
    }

    /// A nonzero solvable ideal; the same search as [`Self::find_abelian_ideal`].
    pub fn find_solvable_ideal(&self) -> IdealSearch {
        self.find_ideal(|s| self.is_solvable_subspace(s))
    }

    /// No nonzero solvable ideal. `None` when the search is not exhaustive.
    pub fn is_semisimple(&self) -> Option<bool> {
        match self.find_solvable_ideal() {
            IdealSearch::Found(_) => Some(false),
            IdealSearch::NotFound { exhaustive: true } => Some(true),
            IdealSearch::NotFound { exhaustive: false } => None,
        }
    }
}

impl OmegaAlgebra {
    pub fn restrict(&self, s: &Subspace) -> Result<OmegaAlgebra> {
        self.restrict_unchecked(s)?
            .into_validated()
            .map_err(Error::Invalid)
    }

    pub fn quotient(&self, i: &Subspace) -> Result<OmegaAlgebra> {
        self.quotient_unchecked(i)?
            .into_validated()
            .map_err(Error::Invalid)
    }
}

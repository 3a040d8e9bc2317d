use crate::exactla::{projective_points, Matrix, Subspace, Vector};

use super::AnticommAlgebra;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    NotSimple(Subspace),
    Unknown,
}

impl AnticommAlgebra {
    /// Span of all nonempty products of the `ad(e_i)`, as flattened `n×n`
    /// matrices.
    pub fn multiplication_algebra(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        let gens: Vec<Matrix> = (0..n).map(|i| self.ad(&self.basis_vector(i))).collect();
        let mut span = Subspace::span(
            f,
            n * n,
            &gens.iter().map(Matrix::flatten).collect::<Vec<_>>(),
        );
        let mut frontier: Vec<Matrix> = span
            .basis()
            .iter()
            .map(|v| Matrix::from_flat(f, n, n, v))
            .collect();
        while !frontier.is_empty() && !span.is_full() {
            let mut fresh = Vec::new();
            for m in &frontier {
                for g in &gens {
                    let p = m.mul(g);
                    let flat = p.flatten();
                    if !span.contains(&flat).expect("same ambient") {
                        span = span
                            .sum(&Subspace::span(f, n * n, &[flat]))
                            .expect("same ambient");
                        fresh.push(p);
                    }
                }
            }
            frontier = fresh;
        }
        span
    }

    fn proper(&self, s: &Subspace) -> bool {
        !s.is_zero() && !s.is_full()
    }

    /// Burnside test on the multiplication algebra, then a search for a
    /// proper nonzero ideal. Over small GF(p) the search covers every
    /// principal ideal and a negative result certifies simplicity.
    pub fn simplicity(&self) -> Simplicity {
        let n = self.dim();
        let f = self.field();
        let comm = self.commutant();
        if n == 1 {
            return Simplicity::NotSimple(comm);
        }
        if !comm.is_zero() && self.multiplication_algebra().dim() == n * n {
            return Simplicity::Simple;
        }
        if self.proper(&comm) {
            return Simplicity::NotSimple(comm);
        }
        let center = self.center();
        if self.proper(&center) {
            return Simplicity::NotSimple(center);
        }
        let mut cands: Vec<Vector> = (0..n).map(|i| self.basis_vector(i)).collect();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (self.basis_vector(i), self.basis_vector(j));
                cands.push(a.add(&b));
                cands.push(a.sub(&b));
            }
        }
        for v in &cands {
            let cl = self.ideal_closure(std::slice::from_ref(v));
            if self.proper(&cl) {
                return Simplicity::NotSimple(cl);
            }
        }
        let k = self.omega_kernel();
        if !k.is_zero() {
            let cl = self.ideal_closure(k.basis());
            if self.proper(&cl) {
                return Simplicity::NotSimple(cl);
            }
        }
        if self.exhaustive_ok() {
            for v in projective_points(f, n) {
                let cl = self.ideal_closure(&[v]);
                if self.proper(&cl) {
                    return Simplicity::NotSimple(cl);
                }
            }
            if !comm.is_zero() {
                return Simplicity::Simple;
            }
        }
        Simplicity::Unknown
    }
}

//! Fitting and root decompositions, root-space checks, filtrations and the
//! case classifier for non-Lie ω-Lie algebras.

use crate::algebra::{AlmostAbelian, AnticommAlgebra, LinearForm, OmegaAlgebra};
use crate::derivations::{al_derivation_space, lambda_samples};
use crate::error::{Error, Result};
use crate::exactfield::Scalar;
use crate::exactla::{kernel_basis, left_kernel, Matrix, Subspace, Vector};
use crate::extensions::extend_codim1_unchecked;
use crate::poly::{char_poly, roots, Poly};

fn require_abelian_subalgebra(a: &AnticommAlgebra, h: &Subspace) -> Result<()> {
    if h.ambient() != a.dim() {
        return Err(Error::ShapeMismatch(format!(
            "subspace of {} in algebra of dim {}",
            h.ambient(),
            a.dim()
        )));
    }
    if !a.is_abelian_subspace(h) {
        return Err(Error::NotAbelianSubalgebra);
    }
    Ok(())
}

fn ad_basis(a: &AnticommAlgebra, h: &Subspace) -> Result<Vec<Matrix>> {
    let ms: Vec<Matrix> = h.basis().iter().map(|v| a.ad(v)).collect();
    for (i, x) in ms.iter().enumerate() {
        for y in &ms[i + 1..] {
            if x.mul(y) != y.mul(x) {
                return Err(Error::NonCommutingAction);
            }
        }
    }
    Ok(ms)
}

/// Vectors of `s` given by coordinates in the RREF basis of `s`.
pub fn lift(s: &Subspace, coords: &Subspace) -> Subspace {
    let vs: Vec<Vector> = coords
        .basis()
        .iter()
        .map(|c| {
            let mut v = Vector::zeros(s.field(), s.ambient());
            for (t, b) in s.basis().iter().enumerate() {
                v.axpy(&c[t], b);
            }
            v
        })
        .collect();
    Subspace::span(s.field(), s.ambient(), &vs)
}

fn generalized_kernel(m: &Matrix) -> Subspace {
    left_kernel(&m.pow(m.rows()))
}

/// `(L0, L1)`: common generalized null space of `ad(H)` and the sum of the
/// images of high powers.
pub fn fitting_decomposition(a: &AnticommAlgebra, h: &Subspace) -> Result<(Subspace, Subspace)> {
    require_abelian_subalgebra(a, h)?;
    let ms = ad_basis(a, h)?;
    let n = a.dim();
    let f = a.field();
    let mut l0 = Subspace::full(f, n);
    let mut l1 = Subspace::zero(f, n);
    for m in &ms {
        let p = m.pow(n);
        l0 = l0.intersect(&left_kernel(&p))?;
        l1 = l1.sum(&Subspace::span(f, n, &p.row_vectors()))?;
    }
    Ok((l0, l1))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition {
    /// Root functionals in the coordinates of the RREF basis of `H`.
    pub roots: Vec<(LinearForm, Subspace)>,
    pub fitting_null: Subspace,
    pub fitting_one: Subspace,
    pub split: bool,
}

impl RootDecomposition {
    pub fn space(&self, root: &LinearForm) -> Option<&Subspace> {
        self.roots.iter().find(|(r, _)| r == root).map(|(_, s)| s)
    }
}

pub fn root_decomposition(a: &AnticommAlgebra, h: &Subspace) -> Result<RootDecomposition> {
    let (fitting_null, fitting_one) = fitting_decomposition(a, h)?;
    let ms = ad_basis(a, h)?;
    let n = a.dim();
    let f = a.field();
    let mut pieces: Vec<(Vec<Scalar>, Subspace)> = vec![(Vec::new(), Subspace::full(f, n))];
    let mut split = true;
    for m in &ms {
        let (rs, ok) = roots(&char_poly(m));
        if !ok {
            split = false;
            break;
        }
        let mut next = Vec::new();
        for (vals, v) in &pieces {
            for (c, _) in &rs {
                let w = v.intersect(&generalized_kernel(&m.shift(&-c)))?;
                if !w.is_zero() {
                    let mut vv = vals.clone();
                    vv.push(c.clone());
                    next.push((vv, w));
                }
            }
        }
        pieces = next;
    }
    let roots = if split {
        pieces
            .into_iter()
            .map(|(v, s)| (Vector::from_scalars(f, v), s))
            .collect()
    } else {
        Vec::new()
    };
    Ok(RootDecomposition {
        roots,
        fitting_null,
        fitting_one,
        split,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootPropertyReport {
    /// Root pairs `(α, β)`, as indices into the decomposition, with
    /// `α + β ≠ 0` and `ω(L_α, L_β) ≠ 0`.
    pub omega_violations: Vec<(usize, usize)>,
    /// Root pairs with `[L_α, L_β] ⊄ L_{α+β}`.
    pub bracket_violations: Vec<(usize, usize)>,
}

impl RootPropertyReport {
    pub fn ok(&self) -> bool {
        self.omega_violations.is_empty() && self.bracket_violations.is_empty()
    }
}

fn require_kernel_torus(a: &AnticommAlgebra, h: &Subspace) -> Result<()> {
    require_abelian_subalgebra(a, h)?;
    if !a.omega_kernel().contains_subspace(h)? {
        return Err(Error::PreconditionFailed("H must lie in Ker omega".into()));
    }
    if h.dim() <= 1 {
        return Err(Error::PreconditionFailed(
            "H must have dimension > 1".into(),
        ));
    }
    Ok(())
}

pub fn check_root_properties(a: &AnticommAlgebra, h: &Subspace) -> Result<RootPropertyReport> {
    require_kernel_torus(a, h)?;
    let rd = root_decomposition(a, h)?;
    if !rd.split {
        return Err(Error::PreconditionFailed(
            "root decomposition does not split".into(),
        ));
    }
    let n = a.dim();
    let zero = Subspace::zero(a.field(), n);
    let mut report = RootPropertyReport::default();
    for (i, (ra, sa)) in rd.roots.iter().enumerate() {
        for (j, (rb, sb)) in rd.roots.iter().enumerate() {
            let sum = ra.add(rb);
            if !sum.is_zero() {
                let bad = sa
                    .basis()
                    .iter()
                    .any(|x| sb.basis().iter().any(|y| !a.omega(x, y).is_zero()));
                if bad {
                    report.omega_violations.push((i, j));
                }
            }
            let target = rd.space(&sum).unwrap_or(&zero);
            let bad = sa.basis().iter().any(|x| {
                sb.basis()
                    .iter()
                    .any(|y| !target.contains(&a.bracket(x, y)).expect("same ambient"))
            });
            if bad {
                report.bracket_violations.push((i, j));
            }
        }
    }
    Ok(report)
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Both binomial expansions for `ad(h)` shifted by scalars, over all basis
/// `x, y`, basis `h ∈ H`, `1 ≤ n ≤ n_max` and `α, β ∈ {0, 1, −1, 2}`.
pub fn binomial_identity_check(a: &AnticommAlgebra, h: &Subspace, n_max: u32) -> Result<bool> {
    require_kernel_torus(a, h)?;
    let f = a.field();
    let dim = a.dim();
    let shifts: Vec<Scalar> = [0, 1, -1, 2].iter().map(|&s| f.int(s)).collect();
    for hv in h.basis() {
        let ad = a.ad(hv);
        for al in &shifts {
            for be in &shifts {
                let ab = al + be;
                let ma = ad.shift(al);
                let mb = ad.shift(be);
                let mab = ad.shift(&ab);
                for xi in 0..dim {
                    for yi in 0..dim {
                        let (x, y) = (a.basis_vector(xi), a.basis_vector(yi));
                        let mut xs = vec![x.clone()];
                        let mut ys = vec![y.clone()];
                        for _ in 0..n_max {
                            xs.push(xs.last().unwrap().mul_mat(&ma));
                            ys.push(ys.last().unwrap().mul_mat(&mb));
                        }
                        let w = a.omega(&x, &y);
                        let mut xy = a.bracket(&x, &y);
                        for n in 1..=n_max {
                            xy = xy.mul_mat(&mab);
                            let mut s = f.zero();
                            let mut v = Vector::zeros(f, dim);
                            for i in 0..=n {
                                let c = f.int(binom(n, i));
                                let (u, t) = (&xs[(n - i) as usize], &ys[i as usize]);
                                s = &s + &(&c * &a.omega(u, t));
                                v.axpy(&c, &a.bracket(u, t));
                            }
                            if s != &ab.pow(n) * &w {
                                return Ok(false);
                            }
                            let mut rhs = xy.clone();
                            rhs.axpy(&-&(&(&f.int(n as i64) * &ab.pow(n - 1)) * &w), hv);
                            if v != rhs {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// `L_{i+1} = {x ∈ L_i : [x, L] ⊆ L_i}` until it stabilizes. The returned
/// chain is strictly descending; its last entry is the stable term.
pub fn filtration(a: &AnticommAlgebra, l0: &Subspace) -> Result<Vec<Subspace>> {
    if l0.ambient() != a.dim() {
        return Err(Error::ShapeMismatch(
            "subspace has the wrong ambient dimension".into(),
        ));
    }
    if !a.is_subalgebra(l0) {
        return Err(Error::NotASubalgebra);
    }
    let n = a.dim();
    let f = a.field();
    let mut chain = vec![l0.clone()];
    loop {
        let cur = chain.last().unwrap();
        if cur.is_zero() {
            break;
        }
        let ann = cur.annihilator();
        let rows: Vec<Vector> = cur
            .basis()
            .iter()
            .map(|b| {
                let mut r = Vec::new();
                for k in 0..n {
                    let img = a.bracket(b, &a.basis_vector(k));
                    r.extend(ann.basis().iter().map(|form| img.dot(form)));
                }
                Vector::from_scalars(f, r)
            })
            .collect();
        let next = if ann.is_zero() {
            cur.clone()
        } else {
            let coeffs = left_kernel(&Matrix::from_rows(f, n * ann.dim(), &rows));
            lift(cur, &coeffs)
        };
        if next == *cur {
            break;
        }
        chain.push(next);
    }
    Ok(chain)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelType {
    Abelian,
    AlmostAbelian,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    LieAlgebra,
    DimThree,
    CodimOneLieSubalgebra(Subspace),
    KernelCodimTwo {
        kernel_type: KernelType,
        nilpotent_action: bool,
    },
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub case: Case,
    pub abelian_small_codim: Option<Subspace>,
}

/// `Ker ω` as a subalgebra together with the abelian part of its almost
/// abelian structure (all of it when abelian).
fn kernel_structure(a: &AnticommAlgebra) -> Option<(Subspace, KernelType, Subspace)> {
    let k = a.omega_kernel();
    let sub = a.restrict_unchecked(&k).ok()?;
    match sub.almost_abelian_decomposition() {
        AlmostAbelian::Abelian => Some((k.clone(), KernelType::Abelian, k)),
        AlmostAbelian::AlmostAbelian { abelian_part, .. } => {
            let h = lift(&k, &abelian_part);
            Some((k, KernelType::AlmostAbelian, h))
        }
        AlmostAbelian::Neither => None,
    }
}

fn is_lie_subalgebra(a: &AnticommAlgebra, s: &Subspace) -> bool {
    a.is_subalgebra(s)
        && s.basis()
            .iter()
            .all(|x| s.basis().iter().all(|y| a.omega(x, y).is_zero()))
}

/// `(β_f ∧ f)(e_i, e_j, e_k)` with `β_f(x, y) = f([x, y])`, for `f` given
/// as a form.
fn wedge_coeffs(a: &AnticommAlgebra, p: &LinearForm, q: &LinearForm) -> Vec<Scalar> {
    let n = a.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let bp = |x: usize, y: usize| a.bracket_basis(x, y).dot(p);
                let v = &(&(&bp(i, j) * &q[k]) + &(&bp(j, k) * &q[i])) + &(&bp(k, i) * &q[j]);
                out.push(v);
            }
        }
    }
    out
}

/// Hyperplanes `ker f` that are Lie subalgebras. Such a hyperplane is
/// ω-isotropic and contains `Ker ω`, so for rank 2 it is `ker(u + t·w)`
/// for two independent rows `u, w` of the Gram matrix, or `ker w`; the
/// subalgebra condition is quadratic in `t`.
pub fn codim_one_lie_subalgebras(a: &AnticommAlgebra, limit: usize) -> Vec<Subspace> {
    let n = a.dim();
    let f = a.field();
    if a.omega_rank() != 2 || n < 3 {
        return Vec::new();
    }
    let rows = Subspace::span(f, n, &a.gram().row_vectors());
    let (u, w) = (rows.basis()[0].clone(), rows.basis()[1].clone());
    let uu = wedge_coeffs(a, &u, &u);
    let uw = wedge_coeffs(a, &u, &w);
    let wu = wedge_coeffs(a, &w, &u);
    let ww = wedge_coeffs(a, &w, &w);
    let quads: Vec<Poly> = (0..uu.len())
        .map(|i| Poly::new(f, vec![uu[i].clone(), &uw[i] + &wu[i], ww[i].clone()]))
        .collect();
    let mut forms = Vec::new();
    let nonzero = quads.iter().find(|q| !q.is_zero());
    let ts: Vec<Scalar> = match nonzero {
        None => match f.order() {
            Some(p) => (0..p.min(limit as u64)).map(|i| f.element(i)).collect(),
            None => vec![f.zero(), f.one()],
        },
        Some(q) => roots(q)
            .0
            .into_iter()
            .map(|(t, _)| t)
            .filter(|t| quads.iter().all(|p| p.eval(t).is_zero()))
            .collect(),
    };
    for t in ts {
        let mut g = u.clone();
        g.axpy(&t, &w);
        forms.push(g);
    }
    if ww.iter().all(Scalar::is_zero) {
        forms.push(w);
    }
    forms
        .into_iter()
        .take(limit)
        .map(|g| kernel_basis(&Matrix::from_rows(f, n, &[g])))
        .filter(|s| is_lie_subalgebra(a, s))
        .collect()
}

/// Greedy growth of an abelian subspace inside its centralizer.
fn grow_abelian(a: &AnticommAlgebra, seed: &Subspace) -> Subspace {
    let mut s = seed.clone();
    loop {
        let c = a.centralizer(&s);
        let extra = c
            .basis()
            .iter()
            .find(|v| !s.contains(v).expect("same ambient"));
        match extra {
            Some(v) => {
                s = s
                    .sum(&Subspace::span(a.field(), a.dim(), std::slice::from_ref(v)))
                    .expect("same ambient")
            }
            None => return s,
        }
    }
}

/// An abelian subalgebra of largest codimension found from structural
/// seeds (the abelian part of `Ker ω`, the center, basis lines).
pub fn abelian_subalgebra(a: &AnticommAlgebra) -> Subspace {
    let n = a.dim();
    let f = a.field();
    let mut seeds = Vec::new();
    if let Some((k, kind, h)) = kernel_structure(a) {
        if kind == KernelType::Abelian {
            seeds.push(k);
        }
        seeds.push(h);
    }
    seeds.push(a.center());
    for i in 0..n {
        seeds.push(Subspace::span(f, n, &[a.basis_vector(i)]));
    }
    let mut best = Subspace::zero(f, n);
    for s in seeds {
        if !a.is_abelian_subspace(&s) {
            continue;
        }
        let g = grow_abelian(a, &s);
        if g.dim() > best.dim() {
            best = g;
        }
    }
    best
}

pub fn classify(a: &OmegaAlgebra) -> ClassificationVerdict {
    let small = {
        let s = abelian_subalgebra(a);
        (a.is_abelian_subspace(&s) && s.codim() <= 3).then_some(s)
    };
    let verdict = |case| ClassificationVerdict {
        case,
        abelian_small_codim: small.clone(),
    };
    if a.is_lie() {
        return verdict(Case::LieAlgebra);
    }
    if a.dim() == 3 {
        return verdict(Case::DimThree);
    }
    if a.omega_rank() == 2 {
        if let Some((_, KernelType::AlmostAbelian, h)) = kernel_structure(a) {
            if let Ok((l0, _)) = fitting_decomposition(a, &h) {
                if l0.is_full() {
                    return verdict(Case::KernelCodimTwo {
                        kernel_type: KernelType::AlmostAbelian,
                        nilpotent_action: true,
                    });
                }
            }
        }
    }
    if let Some(b) = codim_one_lie_subalgebras(a, 1).into_iter().next() {
        if b.codim() == 1 && is_lie_subalgebra(a, &b) {
            return verdict(Case::CodimOneLieSubalgebra(b));
        }
    }
    verdict(Case::Inconclusive)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaScan {
    pub lambda: LinearForm,
    pub solutions: usize,
    /// Indices of basis solutions with `α(Ker ω) ≠ 0`.
    pub alpha_failures: Vec<usize>,
    /// ω-rank of each codim-1 extension by a basis solution, `None` when the
    /// extension fails to validate.
    pub extension_ranks: Vec<Option<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaVanishingReport {
    pub scans: Vec<LambdaScan>,
}

impl AlphaVanishingReport {
    pub fn holds(&self) -> bool {
        self.scans.iter().all(|s| s.alpha_failures.is_empty())
    }

    pub fn extensions_degenerate(&self) -> bool {
        self.scans
            .iter()
            .all(|s| s.extension_ranks.iter().all(|r| r.is_some_and(|r| r <= 2)))
    }
}

/// For a non-Lie algebra of dimension 3: every basis (α,λ)-derivation, over
/// sampled multiplicative λ, has α vanishing on `Ker ω`.
pub fn alpha_vanishing_scan(a: &OmegaAlgebra) -> Result<AlphaVanishingReport> {
    if a.dim() != 3 || a.is_lie() {
        return Err(Error::PreconditionFailed(
            "needs a non-Lie algebra of dimension 3".into(),
        ));
    }
    let kernel = a.omega_kernel();
    let lambdas = match a.multiplicative_lambda() {
        Ok(sol) => lambda_samples(&sol),
        Err(Error::NotMultiplicative) => Vec::new(),
        Err(e) => return Err(e),
    };
    let mut scans = Vec::new();
    for lambda in lambdas {
        let space = al_derivation_space(a, &lambda);
        let mut alpha_failures = Vec::new();
        let mut extension_ranks = Vec::new();
        for (i, d) in space.basis().into_iter().enumerate() {
            if kernel.basis().iter().any(|k| !k.dot(&d.alpha).is_zero()) {
                alpha_failures.push(i);
            }
            let ext = extend_codim1_unchecked(a, &d);
            extension_ranks.push(ext.validate().ok().map(|e| e.omega_rank()));
        }
        scans.push(LambdaScan {
            lambda,
            solutions: space.dim(),
            alpha_failures,
            extension_ranks,
        });
    }
    Ok(AlphaVanishingReport { scans })
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XyReport {
    /// Number of `(case, x, y)` checks whose precondition held.
    pub checked: usize,
    pub failures: Vec<(u8, Vector, Vector)>,
}

/// `[x, y] ∈ Kx + Ky` for: `x, y` in a basis of `Ker ω` when rank ≥ 2;
/// `x` in that basis and `y` a basis vector when rank ≥ 4; basis vectors
/// with `ω(x, y) = 0` when rank ≥ 6.
pub fn lemma_xy_check(a: &AnticommAlgebra) -> XyReport {
    let n = a.dim();
    let r = a.omega_rank();
    let k = a.omega_kernel();
    let e: Vec<Vector> = (0..n).map(|i| a.basis_vector(i)).collect();
    let mut rep = XyReport::default();
    let test = |case: u8, x: &Vector, y: &Vector, rep: &mut XyReport| {
        rep.checked += 1;
        let span = Subspace::span(a.field(), n, &[x.clone(), y.clone()]);
        if !span.contains(&a.bracket(x, y)).expect("same ambient") {
            rep.failures.push((case, x.clone(), y.clone()));
        }
    };
    if r >= 2 {
        for (i, x) in k.basis().iter().enumerate() {
            for y in &k.basis()[i + 1..] {
                test(1, x, y, &mut rep);
            }
        }
    }
    if r >= 4 {
        for x in k.basis() {
            for y in &e {
                test(2, x, y, &mut rep);
            }
        }
    }
    if r >= 6 {
        for i in 0..n {
            for j in i + 1..n {
                if a.omega_basis(i, j).is_zero() {
                    test(3, &e[i], &e[j], &mut rep);
                }
            }
        }
    }
    rep
}

//! Named instances, the eigenvector family, and seeded random generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AnticommAlgebra, OmegaAlgebra};
use crate::derivations::{al_derivation_space, AlphaLambdaDerivation};
use crate::error::{Error, Result};
use crate::exactfield::{Field, Scalar};
use crate::exactla::{Matrix, Vector};
use crate::extensions::{extend_codim1, extend_codim1_unchecked};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    /// False for tables kept for reference that fail the ω-Jacobi identity.
    pub valid: bool,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "omega.s4",
        description: "4-dim omega-Lie algebra, codim-1 extension of omega.n3",
        valid: true,
    },
    CatalogEntry {
        name: "omega.n3",
        description: "3-dim span of e1,e2,e3 in omega.s4, omega(e2,e3) = 2",
        valid: true,
    },
    CatalogEntry {
        name: "lie.sl2",
        description: "sl(2) with basis e,f,h: [e,h] = -e, [f,h] = f, [e,f] = h",
        valid: true,
    },
    CatalogEntry {
        name: "lie.aff1",
        description: "2-dim nonabelian Lie algebra, [x,y] = x",
        valid: true,
    },
    CatalogEntry {
        name: "lie.aff1-y",
        description: "2-dim nonabelian Lie algebra, [x,y] = y",
        valid: true,
    },
    CatalogEntry {
        name: "lie.abelian3",
        description: "3-dim abelian Lie algebra",
        valid: true,
    },
    CatalogEntry {
        name: "lie.abelian4",
        description: "4-dim abelian Lie algebra",
        valid: true,
    },
    CatalogEntry {
        name: "lie.heis3",
        description: "3-dim Heisenberg algebra, [e1,e2] = e3",
        valid: true,
    },
    CatalogEntry {
        name: "family.iiia",
        description: "family_iiia with n = 2, ad x = diag(1,2), sigma = 1, F = E12",
        valid: true,
    },
    CatalogEntry {
        name: "omega.sl2e",
        description: "sl(2) extended by h -> e, alpha(f) = -1 (fails the omega-Jacobi identity)",
        valid: false,
    },
    CatalogEntry {
        name: "omega.sl2f",
        description: "sl(2) extended by h -> f, alpha(e) = 1 (fails the omega-Jacobi identity)",
        valid: false,
    },
];

pub fn sl2(field: Field) -> AnticommAlgebra {
    AnticommAlgebra::new(field, 3)
        .with_bracket(0, 2, &[-1, 0, 0])
        .with_bracket(1, 2, &[0, 1, 0])
        .with_bracket(0, 1, &[0, 0, 1])
}

pub fn n3(field: Field) -> AnticommAlgebra {
    AnticommAlgebra::new(field, 3)
        .with_bracket(0, 1, &[0, 1, 0])
        .with_bracket(0, 2, &[0, 0, 1])
        .with_bracket(1, 2, &[1, 0, 0])
        .with_omega(1, 2, 2)
}

/// The derivation of `omega.n3` whose extension is `omega.s4`.
pub fn s4_derivation(field: Field) -> AlphaLambdaDerivation {
    AlphaLambdaDerivation {
        d: Matrix::from_ints(field, &[&[0, 0, -1], &[1, 0, 0], &[0, 0, 0]]),
        alpha: Vector::from_ints(field, &[0, 2, 0]),
        lambda: Vector::from_ints(field, &[2, 0, 0]),
    }
}

pub fn s4(field: Field) -> AnticommAlgebra {
    extend_codim1_unchecked(&n3(field), &s4_derivation(field))
}

fn sl2_extension(field: Field, image: usize, alpha: &[i64]) -> AnticommAlgebra {
    let mut d = Matrix::zeros(field, 3, 3);
    d.set(2, image, field.one());
    let der = AlphaLambdaDerivation {
        d,
        alpha: Vector::from_ints(field, alpha),
        lambda: Vector::zeros(field, 3),
    };
    extend_codim1_unchecked(&sl2(field), &der)
}

fn abelian(field: Field, n: usize) -> AnticommAlgebra {
    AnticommAlgebra::new(field, n)
}

pub fn default_iiia(field: Field) -> Result<OmegaAlgebra> {
    let adx = Matrix::from_ints(field, &[&[1, 0], &[0, 2]]);
    let f = Matrix::from_ints(field, &[&[0, 1], &[0, 0]]);
    family_iiia(2, &adx, &field.one(), &f)
}

/// Structure table of a catalog entry, valid or not.
pub fn builtin_table(name: &str, field: Field) -> Result<AnticommAlgebra> {
    Ok(match name {
        "omega.s4" => s4(field),
        "omega.n3" => n3(field),
        "lie.sl2" => sl2(field),
        "lie.aff1" => AnticommAlgebra::new(field, 2).with_bracket(0, 1, &[1, 0]),
        "lie.aff1-y" => AnticommAlgebra::new(field, 2).with_bracket(0, 1, &[0, 1]),
        "lie.abelian3" => abelian(field, 3),
        "lie.abelian4" => abelian(field, 4),
        "lie.heis3" => AnticommAlgebra::new(field, 3).with_bracket(0, 1, &[0, 0, 1]),
        "family.iiia" => default_iiia(field)?.into_inner(),
        "omega.sl2e" => sl2_extension(field, 0, &[0, -1, 0]),
        "omega.sl2f" => sl2_extension(field, 1, &[1, 0, 0]),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

pub fn builtin_algebra(name: &str) -> Result<OmegaAlgebra> {
    builtin_algebra_over(name, Field::Q)
}

pub fn builtin_algebra_over(name: &str, field: Field) -> Result<OmegaAlgebra> {
    builtin_table(name, field)?
        .into_validated()
        .map_err(|v| Error::NotValid(name.to_string(), v))
}

/// `A ⊕ Kx` with `[a, x] = a·adx`, extended by `D(a) = a·F + a`, `D(x) = 0`,
/// `α = σ·x*`, `λ = −σ·x*`. Requires `F·adx − adx·F = σF` with `F ≠ 0`,
/// `σ ≠ 0` and `adx` not nilpotent.
pub fn family_iiia(n: usize, adx: &Matrix, sigma: &Scalar, f: &Matrix) -> Result<OmegaAlgebra> {
    let field = sigma.field();
    let square = |m: &Matrix| m.rows() == n && m.cols() == n;
    if !square(adx) || !square(f) {
        return Err(Error::ShapeMismatch(format!("ad x and F must be {n}x{n}")));
    }
    let comm = f.mul(adx).sub(&adx.mul(f));
    if sigma.is_zero() || f.is_zero() || comm != f.scale(sigma) || adx.pow(n).is_zero() {
        return Err(Error::EigenvectorConditionFailed);
    }
    let mut l = AnticommAlgebra::new(field, n + 1);
    for i in 0..n {
        l.set_bracket(i, n, adx.row(i).concat(&Vector::zeros(field, 1)));
    }
    let l = l.into_validated().map_err(Error::Invalid)?;
    let mut d = Matrix::zeros(field, n + 1, n + 1);
    for i in 0..n {
        for j in 0..n {
            let v = if i == j {
                f.get(i, j) + &field.one()
            } else {
                f.get(i, j).clone()
            };
            d.set(i, j, v);
        }
    }
    let mut alpha = Vector::zeros(field, n + 1);
    alpha[n] = sigma.clone();
    let lambda = alpha.neg();
    extend_codim1(&l, &AlphaLambdaDerivation { d, alpha, lambda })
}

fn pool(rng: &mut ChaCha8Rng, field: Field) -> Scalar {
    match field.order() {
        Some(p) => field.element(rng.gen_range(0..p)),
        None => field.int(rng.gen_range(-2..=2)),
    }
}

fn draw_dim3(rng: &mut ChaCha8Rng, field: Field) -> OmegaAlgebra {
    let mut a = AnticommAlgebra::new(field, 3);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let v = Vector::from_scalars(field, (0..3).map(|_| pool(rng, field)).collect());
        a.set_bracket(i, j, v);
    }
    let a = a
        .with_solved_omega()
        .expect("dimension 3 has a unique omega");
    a.into_validated().expect("solved omega validates")
}

/// Random structure constants with the unique compatible ω.
pub fn random_dim3(field: Field, seed: u64) -> OmegaAlgebra {
    draw_dim3(&mut ChaCha8Rng::seed_from_u64(seed), field)
}

/// Random bracket with ω = 0, not validated.
pub fn random_bracket(field: Field, dim: usize, seed: u64) -> AnticommAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = AnticommAlgebra::new(field, dim);
    for i in 0..dim {
        for j in i + 1..dim {
            let v = Vector::from_scalars(field, (0..dim).map(|_| pool(&mut rng, field)).collect());
            a.set_bracket(i, j, v);
        }
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StuckReason {
    NotMultiplicative,
    ZeroDerivations,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chain {
    Done(OmegaAlgebra),
    Stuck { at_dim: usize, reason: StuckReason },
}

fn random_element(rng: &mut ChaCha8Rng, field: Field, basis: &[Vector], len: usize) -> Vector {
    let mut v = Vector::zeros(field, len);
    for b in basis {
        v.axpy(&pool(rng, field), b);
    }
    v
}

/// One random codim-1 extension step.
pub fn random_extension(
    a: &OmegaAlgebra,
    rng: &mut ChaCha8Rng,
) -> std::result::Result<OmegaAlgebra, StuckReason> {
    let field = a.field();
    let n = a.dim();
    let sol = a
        .multiplicative_lambda()
        .map_err(|_| StuckReason::NotMultiplicative)?;
    let lambda = sol
        .particular
        .add(&random_element(rng, field, sol.kernel.basis(), n));
    let space = al_derivation_space(a, &lambda);
    if space.dim() == 0 {
        return Err(StuckReason::ZeroDerivations);
    }
    for _ in 0..8 {
        let v = random_element(rng, field, space.space.basis(), n * n + n);
        if v.is_zero() {
            continue;
        }
        let d = AlphaLambdaDerivation::from_flat(n, lambda.clone(), &v);
        return Ok(extend_codim1(a, &d).expect("derivation of a multiplicative algebra extends"));
    }
    Err(StuckReason::ZeroDerivations)
}

/// `random_dim3` followed by random extensions up to `target_dim`.
pub fn random_extension_chain(field: Field, seed: u64, target_dim: usize) -> Chain {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = draw_dim3(&mut rng, field);
    while a.dim() < target_dim {
        match random_extension(&a, &mut rng) {
            Ok(b) => a = b,
            Err(reason) => {
                return Chain::Stuck {
                    at_dim: a.dim(),
                    reason,
                }
            }
        }
    }
    Chain::Done(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_entries_validate() {
        for e in ENTRIES {
            let r = builtin_algebra(e.name);
            assert_eq!(r.is_ok(), e.valid, "{}", e.name);
        }
        assert!(matches!(
            builtin_algebra("nope"),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn s4_values() {
        let a = builtin_algebra("omega.s4").unwrap();
        let e = |i| a.basis_vector(i);
        assert_eq!(a.omega(&e(1), &e(2)), Field::Q.int(2));
        assert_eq!(a.omega(&e(1), &e(3)), Field::Q.int(2));
        assert_eq!(
            a.bracket(&e(0), &e(3)),
            Vector::from_ints(Field::Q, &[0, 0, -1, 2])
        );
    }

    #[test]
    fn iiia_rejections() {
        let q = Field::Q;
        let one = Matrix::from_ints(q, &[&[1]]);
        assert_eq!(
            family_iiia(1, &one, &q.int(3), &one),
            Err(Error::EigenvectorConditionFailed)
        );
        let nil = Matrix::from_ints(q, &[&[0, 1], &[0, 0]]);
        assert_eq!(
            family_iiia(2, &nil, &q.int(1), &nil),
            Err(Error::EigenvectorConditionFailed)
        );
        let a = default_iiia(q).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(!a.is_lie());
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(random_dim3(Field::Q, 1), random_dim3(Field::Q, 1));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(
            random_extension_chain(f5, 3, 5),
            random_extension_chain(f5, 3, 5)
        );
        assert_eq!(
            random_extension_chain(f5, 3, 3),
            Chain::Done(random_dim3(f5, 3))
        );
    }
}

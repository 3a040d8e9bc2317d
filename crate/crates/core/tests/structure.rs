mod common;

use olie_core::algebra::AlmostAbelian;
use olie_core::catalog::{self, builtin_table, random_dim3};
use olie_core::exactla::{kernel_basis, projective_points};
use olie_core::structure::{
    abelian_subalgebra, alpha_vanishing_scan, binomial_identity_check, check_root_properties,
    classify, codim_one_lie_subalgebras, filtration, fitting_decomposition, lemma_xy_check,
    root_decomposition, Case, KernelType,
};
use olie_core::{AnticommAlgebra, Error, Field, Matrix, OmegaAlgebra, Subspace, Vector};
use std::collections::BTreeSet;

const Q: Field = Field::Q;

fn v(xs: &[i64]) -> Vector {
    Vector::from_ints(Q, xs)
}

fn span(rows: &[&[i64]]) -> Subspace {
    let n = rows[0].len();
    Subspace::span(Q, n, &rows.iter().map(|r| v(r)).collect::<Vec<_>>())
}

/// `A = K³` abelian and `[a_i, x] = (i+1) a_i`.
fn diagonal_lie() -> AnticommAlgebra {
    let mut l = AnticommAlgebra::new(Q, 4);
    for i in 0..3 {
        l.set_bracket(i, 3, Vector::unit(Q, 4, i).scale(&Q.int(i as i64 + 1)));
    }
    l
}

/// Non-Lie chain instances of dimension 4 and 5 over GF(5).
fn gf5_non_lie() -> Vec<OmegaAlgebra> {
    let mut out = Vec::new();
    for s in 0..30 {
        for d in [4, 5] {
            out.extend(common::chain(Field::Gf(5), s, d).filter(|a| !a.is_lie()));
        }
    }
    out
}

#[test]
fn fitting_examples() {
    let s4 = catalog::s4(Q);
    let h = span(&[&[0, 0, 1, -1]]);
    let (l0, l1) = fitting_decomposition(&s4, &h).unwrap();
    assert!(l0.is_full() && l1.is_zero());
    let sl2 = catalog::sl2(Q);
    let (l0, l1) = fitting_decomposition(&sl2, &span(&[&[0, 0, 1]])).unwrap();
    assert_eq!(l0, span(&[&[0, 0, 1]]));
    assert_eq!(l1, span(&[&[1, 0, 0], &[0, 1, 0]]));
    let ab = AnticommAlgebra::new(Q, 3);
    assert!(fitting_decomposition(&ab, &span(&[&[1, 2, 0]]))
        .unwrap()
        .0
        .is_full());
    assert!(matches!(
        fitting_decomposition(&sl2, &span(&[&[1, 0, 0], &[0, 1, 0]])),
        Err(Error::NotAbelianSubalgebra)
    ));
}

#[test]
fn root_examples() {
    let sl2 = catalog::sl2(Q);
    let r = root_decomposition(&sl2, &span(&[&[0, 0, 1]])).unwrap();
    assert!(r.split);
    assert_eq!(r.roots.len(), 3);
    assert_eq!(r.space(&v(&[0])), Some(&span(&[&[0, 0, 1]])));
    assert_eq!(r.space(&v(&[-1])), Some(&span(&[&[1, 0, 0]])));
    assert_eq!(r.space(&v(&[1])), Some(&span(&[&[0, 1, 0]])));
    let ab = AnticommAlgebra::new(Q, 3);
    let r = root_decomposition(&ab, &span(&[&[1, 0, 0], &[0, 1, 0]])).unwrap();
    assert_eq!(r.roots.len(), 1);
    assert!(r.roots[0].0.is_zero() && r.roots[0].1.is_full());
    // ad(x) is a rotation on span{a1, a2}: x² + 1 has no rational root
    let mut rot = AnticommAlgebra::new(Q, 3);
    rot.set_bracket(0, 2, v(&[0, 1, 0]));
    rot.set_bracket(1, 2, v(&[-1, 0, 0]));
    assert!(rot.is_lie());
    let r = root_decomposition(&rot, &span(&[&[0, 0, 1]])).unwrap();
    assert!(!r.split);
    assert_eq!(r.fitting_null, span(&[&[0, 0, 1]]));
    assert_eq!(r.fitting_one, span(&[&[1, 0, 0], &[0, 1, 0]]));
    // the same table over GF(5) splits, since −1 = 2²
    let rot5 = AnticommAlgebra::new(Field::Gf(5), 3)
        .with_bracket(0, 2, &[0, 1, 0])
        .with_bracket(1, 2, &[-1, 0, 0]);
    assert!(
        root_decomposition(&rot5, &Subspace::coordinate_span(Field::Gf(5), 3, &[2]))
            .unwrap()
            .split
    );
}

#[test]
fn root_properties() {
    let l = diagonal_lie();
    let a = Subspace::coordinate_span(Q, 4, &[0, 1, 2]);
    assert!(check_root_properties(&l, &a).unwrap().ok());
    assert!(binomial_identity_check(&l, &a, 4).unwrap());
    assert!(matches!(
        check_root_properties(&l, &Subspace::coordinate_span(Q, 4, &[0])),
        Err(Error::PreconditionFailed(_))
    ));

    let mut checked = 0;
    for a in gf5_non_lie() {
        let k = a.omega_kernel();
        let Ok(sub) = a.restrict(&k) else { continue };
        let h = match sub.almost_abelian_decomposition() {
            AlmostAbelian::Abelian => k.clone(),
            AlmostAbelian::AlmostAbelian { abelian_part, .. } => {
                olie_core::structure::lift(&k, &abelian_part)
            }
            AlmostAbelian::Neither => continue,
        };
        if h.dim() < 2 || !root_decomposition(&a, &h).unwrap().split {
            continue;
        }
        assert!(check_root_properties(&a, &h).unwrap().ok());
        assert!(binomial_identity_check(&a, &h, 4).unwrap());
        // n = 1: ω([x,h],y) + ω(x,[y,h]) = 0
        for hv in h.basis() {
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let (x, y) = (a.basis_vector(i), a.basis_vector(j));
                    let s = &a.omega(&a.bracket(&x, hv), &y) + &a.omega(&x, &a.bracket(&y, hv));
                    assert!(s.is_zero());
                }
            }
        }
        checked += 1;
    }
    assert!(checked > 5, "{checked}");
}

#[test]
fn filtration_examples() {
    let s4 = catalog::s4(Q);
    let f = filtration(&s4, &Subspace::coordinate_span(Q, 4, &[0, 1, 2])).unwrap();
    assert_eq!(f[1], Subspace::coordinate_span(Q, 4, &[1, 2]));
    for w in f.windows(2) {
        assert!(w[0].contains_subspace(&w[1]).unwrap() && w[0] != w[1]);
    }
    let full = Subspace::full(Q, 4);
    assert_eq!(filtration(&s4, &full).unwrap(), vec![full]);
    let ab = AnticommAlgebra::new(Q, 3);
    let l0 = span(&[&[1, 1, 0]]);
    assert_eq!(filtration(&ab, &l0).unwrap(), vec![l0]);
    assert!(matches!(
        filtration(&s4, &span(&[&[1, 0, 0, 0], &[0, 0, 0, 1]])),
        Err(Error::NotASubalgebra)
    ));
}

#[test]
fn classify_examples() {
    let s4 = catalog::s4(Q).validate().unwrap();
    let v4 = classify(&s4);
    assert_eq!(
        v4.case,
        Case::KernelCodimTwo {
            kernel_type: KernelType::AlmostAbelian,
            nilpotent_action: true
        }
    );
    let w = v4.abelian_small_codim.unwrap();
    // grown from the abelian part of Ker ω; span{e3, e4} is another witness
    assert_eq!(w, span(&[&[0, 1, 0, 0], &[0, 0, 1, -1]]));
    let e34 = Subspace::coordinate_span(Q, 4, &[2, 3]);
    assert!(s4.is_subalgebra(&e34) && s4.is_abelian_subspace(&e34));
    assert_eq!(
        classify(&catalog::sl2(Q).validate().unwrap()).case,
        Case::LieAlgebra
    );
    assert_eq!(
        classify(&catalog::n3(Q).validate().unwrap()).case,
        Case::DimThree
    );
    let iiia = catalog::default_iiia(Q).unwrap();
    match classify(&iiia).case {
        Case::CodimOneLieSubalgebra(b) => {
            assert_eq!(b.codim(), 1);
            assert!(iiia.restrict(&b).unwrap().is_lie());
        }
        other => panic!("{other:?}"),
    }
}

/// Lie hyperplanes by enumerating every projective point of the dual space.
fn brute_force_hyperplanes(a: &AnticommAlgebra) -> BTreeSet<Vec<Vec<String>>> {
    let n = a.dim();
    let mut out = BTreeSet::new();
    for g in projective_points(a.field(), n) {
        let h = kernel_basis(&Matrix::from_rows(a.field(), n, &[g]));
        let b = h.basis();
        let closed = b
            .iter()
            .all(|x| b.iter().all(|y| h.contains(&a.bracket(x, y)).unwrap()));
        let isotropic = b.iter().all(|x| b.iter().all(|y| a.omega(x, y).is_zero()));
        if closed && isotropic {
            out.insert(h.encode());
        }
    }
    out
}

#[test]
fn pencil_search_is_complete() {
    let mut with_witness = 0;
    let pool = gf5_non_lie();
    assert!(pool.len() > 20);
    for a in &pool {
        let found: BTreeSet<Vec<Vec<String>>> = codim_one_lie_subalgebras(a, usize::MAX)
            .iter()
            .map(Subspace::encode)
            .collect();
        assert_eq!(found, brute_force_hyperplanes(a), "{a:?}");
        with_witness += !found.is_empty() as usize;
    }
    assert!(with_witness > 0);
}

#[test]
fn verdicts_on_generated_instances() {
    let mut pool: Vec<OmegaAlgebra> = gf5_non_lie();
    pool.extend(
        common::catalog_algebras(Q)
            .into_iter()
            .filter(|a| a.dim() >= 4 && !a.is_lie()),
    );
    for s in 0..10 {
        pool.extend(common::chain(Q, s, 4));
    }
    for a in &pool {
        let verdict = classify(a);
        match &verdict.case {
            Case::CodimOneLieSubalgebra(b) => {
                let sub = a.restrict(b).unwrap();
                assert!(sub.is_lie());
                assert!(sub.multiplicative_lambda().is_ok());
            }
            Case::KernelCodimTwo { .. } => assert_eq!(a.omega_rank(), 2),
            other => assert!(a.is_lie() || a.dim() == 3, "{other:?}"),
        }
        let w = verdict.abelian_small_codim.expect("abelian witness");
        assert!(a.is_subalgebra(&w) && a.is_abelian_subspace(&w) && w.codim() <= 3);
        assert_eq!(w, abelian_subalgebra(a));
    }
}

#[test]
fn rank_and_xy_on_pool() {
    for a in common::instance_pool() {
        if a.dim() >= 3 {
            assert!(a.omega_rank() < a.dim());
        }
        let r = lemma_xy_check(&a);
        assert!(r.failures.is_empty(), "{:?}", r.failures);
    }
}

#[test]
fn alpha_vanishing() {
    assert!(alpha_vanishing_scan(&catalog::n3(Q).validate().unwrap())
        .unwrap()
        .holds());
    let mut n = 0;
    for s in 0..400 {
        let a = random_dim3(Field::Gf(5), s);
        if a.is_lie() {
            continue;
        }
        let r = alpha_vanishing_scan(&a).unwrap();
        assert!(r.holds() && r.extensions_degenerate(), "seed {s}");
        n += 1;
        if n == 200 {
            break;
        }
    }
    assert_eq!(n, 200);
    let sl2 = builtin_table("lie.sl2", Q).unwrap().validate().unwrap();
    assert!(matches!(
        alpha_vanishing_scan(&sl2),
        Err(Error::PreconditionFailed(_))
    ));
}

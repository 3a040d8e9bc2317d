mod common;

use olie_core::algebra::Simplicity;
use olie_core::catalog::{
    self, builtin_algebra, builtin_table, family_iiia, random_dim3, random_extension_chain, Chain,
    StuckReason, ENTRIES,
};
use olie_core::io::{
    algebra_from_str, algebra_to_string, derivation_from_str, derivation_to_value, load, save,
    IoError,
};
use olie_core::structure::{classify, Case};
use olie_core::{AnticommAlgebra, Error, Field, Matrix, Subspace, Vector};
use proptest::prelude::*;
use std::path::PathBuf;

const Q: Field = Field::Q;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

#[test]
fn entries() {
    let s4 = builtin_algebra("omega.s4").unwrap();
    assert_eq!(s4.omega_basis(1, 2), &Q.int(2));
    assert_eq!(s4.omega_basis(1, 3), &Q.int(2));
    assert!(builtin_algebra("lie.sl2").unwrap().is_lie());
    for e in ENTRIES {
        for f in [Q, Field::Gf(5), Field::Gf(7)] {
            let t = builtin_table(e.name, f).unwrap();
            assert_eq!(t.validate().is_ok(), e.valid, "{} over {f}", e.name);
        }
    }
    assert!(matches!(
        builtin_algebra("omega.sl2e"),
        Err(Error::NotValid(..))
    ));
    assert!(matches!(
        builtin_table("nope", Q),
        Err(Error::UnknownName(_))
    ));
    // the raw sl2 extension: non-Lie, and sl2 is a proper ideal
    let raw = builtin_table("omega.sl2e", Q).unwrap();
    assert!(!raw.is_lie());
    let sl2 = Subspace::coordinate_span(Q, 4, &[0, 1, 2]);
    assert!(raw.is_ideal(&sl2));
    assert!(matches!(raw.simplicity(), Simplicity::NotSimple(_)));
}

#[test]
fn iiia_family() {
    let a = catalog::default_iiia(Q).unwrap();
    assert_eq!(a.dim(), 4);
    assert!(!a.is_lie());
    assert!(matches!(
        classify(&a).case,
        Case::CodimOneLieSubalgebra(_) | Case::KernelCodimTwo { .. }
    ));
    let one = Matrix::from_ints(Q, &[&[1]]);
    for f in [Matrix::from_ints(Q, &[&[1]]), Matrix::from_ints(Q, &[&[0]])] {
        assert!(matches!(
            family_iiia(1, &one, &Q.int(1), &f),
            Err(Error::EigenvectorConditionFailed)
        ));
    }
    let adx = Matrix::from_ints(Q, &[&[1, 0], &[0, 2]]);
    // the transpose a2 ↦ a1 has eigenvalue −1
    let e21 = Matrix::from_ints(Q, &[&[0, 0], &[1, 0]]);
    let b = family_iiia(2, &adx, &Q.int(-1), &e21).unwrap();
    assert!(!b.is_lie());
    assert!(matches!(
        family_iiia(2, &adx, &Q.int(1), &e21),
        Err(Error::EigenvectorConditionFailed)
    ));
    let nil = Matrix::from_ints(Q, &[&[0, 1], &[0, 0]]);
    assert!(family_iiia(2, &nil, &Q.int(1), &e21).is_err());
    // larger n: adx = diag(1,2,3), F = E12 + E23
    let adx3 = Matrix::from_ints(Q, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
    let f3 = Matrix::from_ints(Q, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
    let c = family_iiia(3, &adx3, &Q.int(1), &f3).unwrap();
    assert_eq!(c.dim(), 5);
    assert!(matches!(
        classify(&c).case,
        Case::CodimOneLieSubalgebra(_) | Case::KernelCodimTwo { .. }
    ));
}

#[test]
fn generators() {
    for s in 0..1000 {
        assert!(random_dim3(Field::Gf(5), s).validate().is_ok());
    }
    assert_eq!(random_dim3(Q, 1), random_dim3(Q, 1));
    assert_ne!(random_dim3(Q, 1), random_dim3(Q, 2));
    assert_eq!(
        random_extension_chain(Q, 4, 3),
        Chain::Done(random_dim3(Q, 4))
    );
    let mut done = 0;
    for s in 0..40 {
        let c = random_extension_chain(Field::Gf(5), s, 5);
        assert_eq!(c, random_extension_chain(Field::Gf(5), s, 5));
        match c {
            Chain::Done(a) => {
                assert_eq!(a.dim(), 5);
                done += 1;
            }
            Chain::Stuck { reason, .. } => assert_eq!(reason, StuckReason::ZeroDerivations),
        }
    }
    assert!(done > 30);
    let zero = AnticommAlgebra::new(Q, 3).with_solved_omega();
    assert!(zero.is_none_or(|z| z.is_lie() && z.omega_is_zero()));
}

#[test]
fn golden_file() {
    let a = load(data("omega_s4.json")).unwrap();
    assert_eq!(a, catalog::s4(Q));
    let text = std::fs::read_to_string(data("omega_s4.json")).unwrap();
    assert_eq!(algebra_to_string(&catalog::s4(Q)), text);
    for name in ["sl2.json", "n3.json"] {
        assert!(load(data(name)).unwrap().validate().is_ok());
    }
    let d = std::fs::read_to_string(data("s4_derivation.json")).unwrap();
    let (m, alpha, lambda) = derivation_from_str(&d, Q, 3).unwrap();
    let s = catalog::s4_derivation(Q);
    assert_eq!(
        (m, alpha, lambda),
        (s.d.clone(), s.alpha.clone(), Some(s.lambda.clone()))
    );
    let v = derivation_to_value(&s);
    assert_eq!(derivation_from_str(&v.to_string(), Q, 3).unwrap().0, s.d);
}

#[test]
fn io_errors() {
    let text = algebra_to_string(&catalog::s4(Q));
    let bad = text.replace("\"1,2\"", "\"2,2\"");
    assert!(matches!(
        algebra_from_str(&bad),
        Err(IoError::SchemaError(_))
    ));
    let bad = text.replace("\"dim\": 4", "\"dim\": 4, \"extra\": 1");
    assert!(matches!(
        algebra_from_str(&bad),
        Err(IoError::SchemaError(_))
    ));
    assert!(matches!(
        algebra_from_str("{\n  \"field\": "),
        Err(IoError::ParseError(2, _))
    ));
    let bad = text.replace("\"Q\"", "{\"GF\": 4}");
    assert!(matches!(
        algebra_from_str(&bad),
        Err(IoError::SchemaError(_))
    ));
    assert!(matches!(load(data("missing.json")), Err(IoError::Io(_))));
    assert!(derivation_from_str("{\"D\": [], \"alpha\": []}", Q, 3).is_err());
}

#[test]
fn save_then_load() {
    let dir = std::env::temp_dir().join(format!("olie-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (k, a) in common::instance_pool().iter().enumerate() {
        let p = dir.join(format!("{k}.json"));
        save(a, &p).unwrap();
        assert_eq!(&load(&p).unwrap(), a.as_anticomm());
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

fn table(f: Field, n: usize, xs: &[i64]) -> AnticommAlgebra {
    let mut a = AnticommAlgebra::new(f, n);
    let mut it = xs.iter();
    for i in 0..n {
        for j in i + 1..n {
            let v: Vec<i64> = (0..n).map(|_| *it.next().unwrap()).collect();
            a.set_bracket(i, j, Vector::from_ints(f, &v));
            a.set_omega(i, j, f.int(*it.next().unwrap()));
        }
    }
    a
}

proptest! {
    #[test]
    fn roundtrip(xs in prop::collection::vec(-5i64..6, 40), n in 1usize..5, gf in any::<bool>()) {
        let f = if gf { Field::Gf(7) } else { Q };
        let a = table(f, n, &xs);
        let text = algebra_to_string(&a);
        prop_assert_eq!(&algebra_from_str(&text).unwrap(), &a);
        prop_assert_eq!(algebra_to_string(&algebra_from_str(&text).unwrap()), text);
    }
}

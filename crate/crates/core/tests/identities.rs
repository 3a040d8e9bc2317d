mod common;

use olie_core::catalog::{self, builtin_table};
use olie_core::identities::{
    builtin, parse_identity, Holds, Identity, IdentityError, Value, BUILTIN_NAMES,
};
use olie_core::{AnticommAlgebra, Field, OmegaAlgebra, Scalar, Vector};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Q;

fn random_vector(rng: &mut ChaCha8Rng, a: &AnticommAlgebra) -> Vector {
    let xs: Vec<i64> = (0..a.dim()).map(|_| rng.gen_range(-3..=3)).collect();
    Vector::from_ints(a.field(), &xs)
}

fn scale(v: &Value, c: &Scalar) -> Value {
    match v {
        Value::Vector(x) => Value::Vector(x.scale(c)),
        Value::Scalar(s) => Value::Scalar(s * c),
    }
}

fn add(u: &Value, v: &Value) -> Value {
    match (u, v) {
        (Value::Vector(x), Value::Vector(y)) => Value::Vector(x.add(y)),
        (Value::Scalar(s), Value::Scalar(t)) => Value::Scalar(s + t),
        _ => panic!("kind mismatch"),
    }
}

/// Small instances used for identity checks: dimension at most 5.
fn pool() -> Vec<OmegaAlgebra> {
    common::instance_pool()
        .into_iter()
        .filter(|a| a.dim() <= 5)
        .collect()
}

#[test]
fn parser() {
    assert_eq!(parse_identity("(b (b x1 x2) x3)").unwrap().num_vars, 3);
    assert_eq!(parse_identity("(s (w x1 x2) x3)").unwrap().num_vars, 3);
    assert_eq!(
        parse_identity("(b x1 x1)"),
        Err(IdentityError::NotMultilinear(1))
    );
    assert_eq!(
        parse_identity("(+ (b x1 x2) (s -1 (b x1 x2)))")
            .unwrap()
            .num_vars,
        2
    );
    assert_eq!(
        parse_identity("(- (b x1 x2) (b x2 x1)) )"),
        Err(IdentityError::SyntaxError(24))
    );
    assert!(matches!(
        parse_identity("(w x1 (w x2 x3))"),
        Err(IdentityError::TypeError { .. })
    ));
    assert!(matches!(
        parse_identity("(q x1 x2)"),
        Err(IdentityError::SyntaxError(_))
    ));
    assert!(matches!(
        builtin("nope"),
        Err(IdentityError::UnknownIdentity(_))
    ));
    assert!(matches!(
        builtin("engel:1,2"),
        Err(IdentityError::UnknownIdentity(_))
    ));
    assert!(builtin("abg:2,-1,3").is_ok());
    let e = builtin("engel").unwrap();
    assert!(matches!(
        e.evaluate(&catalog::sl2(Q), &[0]),
        Err(IdentityError::ArityMismatch {
            expected: 4,
            got: 1
        })
    ));
}

#[test]
fn evaluation_examples() {
    let sl2 = catalog::sl2(Q);
    let jr = builtin("jacobi-residual").unwrap();
    for t in [[0, 1, 2], [2, 1, 0], [0, 0, 1]] {
        assert!(jr.evaluate(&sl2, &t).unwrap().is_zero());
    }
    let s4 = catalog::s4(Q);
    assert!(builtin("two-basic")
        .unwrap()
        .evaluate(&s4, &[0, 1, 2, 3])
        .unwrap()
        .is_zero());
    // x1 = h, x2 = e
    let engel = builtin("engel").unwrap();
    let raw = engel
        .evaluate_raw(&sl2, &[sl2.basis_vector(2), sl2.basis_vector(0)])
        .unwrap();
    assert_eq!(raw, Value::Vector(Vector::from_ints(Q, &[-1, 0, 0])));
    let term = parse_identity("(b (b (b x2 x1) x1) x1)");
    assert!(term.is_err());
}

#[test]
fn holds_examples() {
    let s4 = catalog::s4(Q);
    let deg5 = builtin("degree5").unwrap();
    assert!(deg5.holds(&s4).is_yes());
    let four = builtin("four").unwrap();
    assert!(matches!(four.holds(&s4), Holds::Counterexample { .. }));
    // the raw extension of sl2 satisfies (4) although it is not an ω-Lie algebra
    assert!(four
        .holds(&builtin_table("omega.sl2e", Q).unwrap())
        .is_yes());
    let sl2 = catalog::sl2(Q);
    let engel = builtin("engel").unwrap();
    assert!(!engel.holds(&sl2).is_yes());
    let (t, v) = engel.raw_counterexample(&sl2).unwrap();
    assert_eq!(t.len(), 2);
    assert!(!v.is_zero());
    match builtin("four-consequence").unwrap().holds(&s4) {
        Holds::Counterexample { tuple, value } => {
            let e = |i: usize| s4.basis_vector(i);
            assert_eq!(
                value,
                Value::Scalar(s4.d_omega(&e(tuple[0]), &e(tuple[1]), &e(tuple[2])))
            );
        }
        Holds::Yes => panic!("dω vanishes on s4"),
    }
    assert_eq!(
        s4.d_omega(
            &s4.basis_vector(0),
            &s4.basis_vector(1),
            &s4.basis_vector(2)
        ),
        Q.int(4)
    );
    let n3 = catalog::n3(Q);
    assert!(!builtin("bin-consequence").unwrap().holds(&n3).is_yes());
    assert!(builtin("bin-consequence")
        .unwrap()
        .raw_counterexample(&n3)
        .is_some());
}

/// Degree 5 holds everywhere; every weaker candidate fails somewhere in the
/// catalog.
#[test]
fn minimal_degree_support() {
    let deg5 = builtin("degree5").unwrap();
    let two = builtin("two-basic").unwrap();
    let jr = builtin("jacobi-residual").unwrap();
    for a in pool() {
        assert!(deg5.holds(&a).is_yes());
        assert!(two.holds(&a).is_yes());
        assert_eq!(two.holds(&a).is_yes(), a.check_four_var());
        assert!(jr.holds(&a).is_yes());
    }
    for s in 0..6 {
        let a = common::chain(Field::Gf(5), s, 6).unwrap();
        assert!(deg5.holds(&a).is_yes());
    }
    let catalog = common::catalog_algebras(Q);
    for name in ["engel", "bin-consequence", "four-consequence", "four"] {
        let id = builtin(name).unwrap();
        assert!(catalog.iter().any(|a| !id.holds(a).is_yes()), "{name}");
    }
    let mut bad = catalog::s4(Q);
    bad.set_omega(0, 1, Q.int(1));
    assert!(!jr.holds(&bad).is_yes());
}

#[test]
fn two_basic_matches_four_var() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let two = builtin("two-basic").unwrap();
    let bad = builtin_table("omega.sl2e", Q).unwrap();
    for a in pool().iter().map(|a| a.as_anticomm().clone()).chain([bad]) {
        for _ in 0..5 {
            let vs: Vec<Vector> = (0..4).map(|_| random_vector(&mut rng, &a)).collect();
            let lib = a.four_var_residual(&vs[0], &vs[1], &vs[2], &vs[3]);
            assert_eq!(two.evaluate_vectors(&a, &vs).unwrap(), Value::Vector(lib));
        }
    }
}

fn check_linear(id: &Identity, a: &AnticommAlgebra, rng: &mut ChaCha8Rng) {
    let k = id.num_vars;
    let vs: Vec<Vector> = (0..k).map(|_| random_vector(rng, a)).collect();
    let base = id.evaluate_vectors(a, &vs).unwrap();
    // expand one argument in the basis
    let slot = rng.gen_range(0..k);
    let mut sum = scale(&base, &a.field().zero());
    for i in 0..a.dim() {
        let mut ws = vs.clone();
        ws[slot] = a.basis_vector(i);
        sum = add(
            &sum,
            &scale(&id.evaluate_vectors(a, &ws).unwrap(), &vs[slot][i]),
        );
    }
    assert_eq!(sum, base, "{} slot {slot}", id.name);
}

#[test]
fn multilinearity_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let small: Vec<OmegaAlgebra> = pool()
        .into_iter()
        .filter(|a| a.dim() <= 4)
        .take(20)
        .collect();
    for name in BUILTIN_NAMES.iter().filter(|n| **n != "degree5") {
        let id = builtin(name).unwrap();
        for a in &small {
            check_linear(&id, a, &mut rng);
            if id.holds(a).is_yes() {
                let vs: Vec<Vector> = (0..id.num_vars)
                    .map(|_| random_vector(&mut rng, a))
                    .collect();
                assert!(id.evaluate_vectors(a, &vs).unwrap().is_zero());
            }
        }
    }
}

/// A full linearization evaluated on the repeated arguments is the raw
/// term times the product of the factorials of the multiplicities.
#[test]
fn linearizations_restore_the_raw_term() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let sl2 = catalog::sl2(Q);
    let s4 = catalog::s4(Q);
    let cases: [(&str, fn(&[Vector]) -> Vec<Vector>, i64); 4] = [
        (
            "engel",
            |r| vec![r[0].clone(), r[1].clone(), r[0].clone(), r[0].clone()],
            6,
        ),
        (
            "bin",
            |r| vec![r[0].clone(), r[1].clone(), r[0].clone(), r[1].clone()],
            4,
        ),
        (
            "bin-consequence",
            |r| vec![r[0].clone(), r[1].clone(), r[0].clone(), r[1].clone()],
            4,
        ),
        (
            "abg:1,2,3",
            |r| vec![r[0].clone(), r[1].clone(), r[2].clone(), r[0].clone()],
            2,
        ),
    ];
    for (name, spread, factor) in cases {
        let id = builtin(name).unwrap();
        let k = id.raw.as_ref().unwrap().1;
        for a in [&sl2, &s4] {
            for _ in 0..5 {
                let r: Vec<Vector> = (0..k).map(|_| random_vector(&mut rng, a)).collect();
                let raw = id.evaluate_raw(a, &r).unwrap();
                let lin = id.evaluate_vectors(a, &spread(&r)).unwrap();
                assert_eq!(lin, scale(&raw, &Q.int(factor)), "{name}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn parsed_jacobi_matches_builtin(seed in 0u64..5_000) {
        let text = "(- (+ (b (b x1 x2) x3) (b (b x3 x1) x2) (b (b x2 x3) x1)) \
                    (+ (s (w x1 x2) x3) (s (w x3 x1) x2) (s (w x2 x3) x1)))";
        let parsed = parse_identity(text).unwrap();
        let a = catalog::random_bracket(Field::Gf(7), 3, seed);
        let b = builtin("jacobi-residual").unwrap();
        for t in [[0, 1, 2], [1, 2, 0], [2, 2, 1]] {
            prop_assert_eq!(parsed.evaluate(&a, &t).unwrap(), b.evaluate(&a, &t).unwrap());
        }
        prop_assert_eq!(b.holds(&a).is_yes(), a.validate().is_ok());
    }
}

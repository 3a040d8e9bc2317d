//! Multilinear identities in the bracket and ω, written as S-expressions:
//!
//! ```text
//! term := x1 .. x9 | integer | (b t t) | (w t t) | (s t t) | (+ t ...) | (- t t)
//! ```
//!
//! `b` is the bracket, `w` the form ω, `s` multiplies its second argument
//! by the scalar-valued first one.

use std::fmt;

use thiserror::Error;

use crate::algebra::AnticommAlgebra;
use crate::exactfield::{Field, Scalar};
use crate::exactla::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("syntax error at byte {0}")]
    SyntaxError(usize),
    #[error("type error at byte {pos}: {msg}")]
    TypeError { pos: usize, msg: String },
    #[error("not multilinear in x{0}")]
    NotMultilinear(usize),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    /// Zero-based variable index.
    Var(usize),
    Int(i64),
    Bracket(Box<Term>, Box<Term>),
    Omega(Box<Term>, Box<Term>),
    Scale(Box<Term>, Box<Term>),
    Sum(Vec<Term>),
    Diff(Box<Term>, Box<Term>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Vector,
    Scalar,
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn b(x: Term, y: Term) -> Term {
        Term::Bracket(Box::new(x), Box::new(y))
    }

    pub fn w(x: Term, y: Term) -> Term {
        Term::Omega(Box::new(x), Box::new(y))
    }

    pub fn s(c: Term, t: Term) -> Term {
        Term::Scale(Box::new(c), Box::new(t))
    }

    pub fn sub(x: Term, y: Term) -> Term {
        Term::Diff(Box::new(x), Box::new(y))
    }

    pub fn kind(&self) -> Kind {
        match self {
            Term::Var(_) | Term::Bracket(..) => Kind::Vector,
            Term::Int(_) | Term::Omega(..) => Kind::Scalar,
            Term::Scale(_, t) | Term::Diff(t, _) => t.kind(),
            Term::Sum(ts) => ts.first().map_or(Kind::Scalar, Term::kind),
        }
    }

    /// Occurrence count of each variable, uniform over the monomials of a
    /// sum, or the first variable on which two summands disagree.
    fn profile(&self) -> Result<Vec<usize>, usize> {
        fn merge(a: Vec<usize>, b: Vec<usize>) -> Vec<usize> {
            let n = a.len().max(b.len());
            (0..n)
                .map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0))
                .collect()
        }
        fn same(a: &[usize], b: &[usize]) -> Result<(), usize> {
            let n = a.len().max(b.len());
            match (0..n).find(|&i| a.get(i).unwrap_or(&0) != b.get(i).unwrap_or(&0)) {
                Some(i) => Err(i),
                None => Ok(()),
            }
        }
        match self {
            Term::Var(i) => {
                let mut v = vec![0; i + 1];
                v[*i] = 1;
                Ok(v)
            }
            Term::Int(_) => Ok(Vec::new()),
            Term::Bracket(x, y) | Term::Omega(x, y) | Term::Scale(x, y) => {
                Ok(merge(x.profile()?, y.profile()?))
            }
            Term::Diff(x, y) => {
                let (p, q) = (x.profile()?, y.profile()?);
                same(&p, &q)?;
                Ok(p)
            }
            Term::Sum(ts) => {
                let mut it = ts.iter();
                let Some(first) = it.next() else {
                    return Ok(Vec::new());
                };
                let p = first.profile()?;
                for t in it {
                    same(&p, &t.profile()?)?;
                }
                Ok(p)
            }
        }
    }

    /// Number of variables when every monomial uses `x1..xk` exactly once.
    pub fn multilinear_arity(&self) -> Result<usize, IdentityError> {
        let p = self
            .profile()
            .map_err(|i| IdentityError::NotMultilinear(i + 1))?;
        match p.iter().position(|&c| c != 1) {
            Some(i) => Err(IdentityError::NotMultilinear(i + 1)),
            None => Ok(p.len()),
        }
    }

    /// Replaces the occurrences of `v`, left to right within each monomial,
    /// by `seq[0], seq[1], …`.
    fn replace(&self, v: usize, seq: &[usize], pos: usize) -> (Term, usize) {
        match self {
            Term::Var(i) if *i == v => (Term::Var(seq[pos]), pos + 1),
            Term::Var(_) | Term::Int(_) => (self.clone(), pos),
            Term::Bracket(x, y) | Term::Omega(x, y) | Term::Scale(x, y) => {
                let (a, p) = x.replace(v, seq, pos);
                let (b, q) = y.replace(v, seq, p);
                let t = match self {
                    Term::Bracket(..) => Term::b(a, b),
                    Term::Omega(..) => Term::w(a, b),
                    _ => Term::s(a, b),
                };
                (t, q)
            }
            Term::Diff(x, y) => {
                let (a, p) = x.replace(v, seq, pos);
                let (b, _) = y.replace(v, seq, pos);
                (Term::sub(a, b), p)
            }
            Term::Sum(ts) => {
                let mut end = pos;
                let out = ts
                    .iter()
                    .map(|t| {
                        let (a, p) = t.replace(v, seq, pos);
                        end = p;
                        a
                    })
                    .collect();
                (Term::Sum(out), end)
            }
        }
    }

    /// Polarization in `v`: the sum over all orderings of `vars` substituted
    /// for the occurrences of `v`.
    pub fn linearize(&self, v: usize, vars: &[usize]) -> Term {
        Term::Sum(
            permutations(vars.len())
                .into_iter()
                .map(|p| {
                    let seq: Vec<usize> = p.iter().map(|&i| vars[i]).collect();
                    self.replace(v, &seq, 0).0
                })
                .collect(),
        )
    }

    pub fn eval(&self, a: &AnticommAlgebra, vars: &[Vector]) -> Value {
        let f = a.field();
        match self {
            Term::Var(i) => Value::Vector(vars[*i].clone()),
            Term::Int(k) => Value::Scalar(f.int(*k)),
            Term::Bracket(x, y) => {
                Value::Vector(a.bracket(&x.eval(a, vars).vector(), &y.eval(a, vars).vector()))
            }
            Term::Omega(x, y) => {
                Value::Scalar(a.omega(&x.eval(a, vars).vector(), &y.eval(a, vars).vector()))
            }
            Term::Scale(c, t) => {
                let c = c.eval(a, vars).scalar();
                match t.eval(a, vars) {
                    Value::Vector(v) => Value::Vector(v.scale(&c)),
                    Value::Scalar(s) => Value::Scalar(&s * &c),
                }
            }
            Term::Diff(x, y) => x.eval(a, vars).sub(&y.eval(a, vars)),
            Term::Sum(ts) => {
                let zero = Value::zero(self.kind(), f, a.dim());
                ts.iter().fold(zero, |acc, t| acc.add(&t.eval(a, vars)))
            }
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "x{}", i + 1),
            Term::Int(k) => write!(f, "{k}"),
            Term::Bracket(x, y) => write!(f, "(b {x} {y})"),
            Term::Omega(x, y) => write!(f, "(w {x} {y})"),
            Term::Scale(x, y) => write!(f, "(s {x} {y})"),
            Term::Diff(x, y) => write!(f, "(- {x} {y})"),
            Term::Sum(ts) => {
                write!(f, "(+")?;
                for t in ts {
                    write!(f, " {t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Vector(Vector),
    Scalar(Scalar),
}

impl Value {
    fn zero(kind: Kind, f: Field, n: usize) -> Value {
        match kind {
            Kind::Vector => Value::Vector(Vector::zeros(f, n)),
            Kind::Scalar => Value::Scalar(f.zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Vector(v) => v.is_zero(),
            Value::Scalar(s) => s.is_zero(),
        }
    }

    fn vector(self) -> Vector {
        match self {
            Value::Vector(v) => v,
            Value::Scalar(_) => unreachable!("type-checked"),
        }
    }

    fn scalar(self) -> Scalar {
        match self {
            Value::Scalar(s) => s,
            Value::Vector(_) => unreachable!("type-checked"),
        }
    }

    fn add(&self, o: &Value) -> Value {
        match (self, o) {
            (Value::Vector(a), Value::Vector(b)) => Value::Vector(a.add(b)),
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a + b),
            _ => unreachable!("type-checked"),
        }
    }

    fn sub(&self, o: &Value) -> Value {
        match (self, o) {
            (Value::Vector(a), Value::Vector(b)) => Value::Vector(a.sub(b)),
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a - b),
            _ => unreachable!("type-checked"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Vector(v) => write!(f, "{v}"),
            Value::Scalar(s) => write!(f, "{s}"),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn atom(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.src.len()
            && !self.src[self.pos].is_ascii_whitespace()
            && !b"()".contains(&self.src[self.pos])
        {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("")
    }

    fn term(&mut self) -> Result<Term, IdentityError> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            None | Some(b')') => Err(IdentityError::SyntaxError(start)),
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let head = self.atom().to_string();
                let mut args = Vec::new();
                loop {
                    self.skip_ws();
                    match self.src.get(self.pos) {
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        None => return Err(IdentityError::SyntaxError(self.pos)),
                        _ => args.push((self.pos, self.term()?)),
                    }
                }
                build(&head, args, start)
            }
            Some(_) => {
                let a = self.atom().to_string();
                if let Some(d) = a.strip_prefix('x') {
                    match d.parse::<usize>() {
                        Ok(i) if (1..=9).contains(&i) && d.len() == 1 => Ok(Term::Var(i - 1)),
                        _ => Err(IdentityError::SyntaxError(start)),
                    }
                } else {
                    a.parse::<i64>()
                        .map(Term::Int)
                        .map_err(|_| IdentityError::SyntaxError(start))
                }
            }
        }
    }
}

fn build(head: &str, args: Vec<(usize, Term)>, start: usize) -> Result<Term, IdentityError> {
    let terr = |pos: usize, msg: &str| IdentityError::TypeError {
        pos,
        msg: msg.to_string(),
    };
    let need = |k: usize| {
        if args.len() == k {
            Ok(())
        } else {
            Err(terr(start, &format!("{head} takes {k} arguments")))
        }
    };
    let vectors = |args: &[(usize, Term)]| -> Result<(), IdentityError> {
        for (p, t) in args {
            if t.kind() != Kind::Vector {
                return Err(terr(*p, &format!("{head} expects vector arguments")));
            }
        }
        Ok(())
    };
    let mut it = args.iter().cloned().map(|(_, t)| t);
    match head {
        "b" | "w" => {
            need(2)?;
            vectors(&args)?;
            let (x, y) = (it.next().unwrap(), it.next().unwrap());
            Ok(if head == "b" {
                Term::b(x, y)
            } else {
                Term::w(x, y)
            })
        }
        "s" => {
            need(2)?;
            if args[0].1.kind() != Kind::Scalar {
                return Err(terr(args[0].0, "s expects a scalar first argument"));
            }
            Ok(Term::s(it.next().unwrap(), it.next().unwrap()))
        }
        "+" | "-" => {
            if head == "-" {
                need(2)?;
            } else if args.is_empty() {
                return Err(terr(start, "+ needs at least one argument"));
            }
            let k = args[0].1.kind();
            if let Some((p, _)) = args.iter().find(|(_, t)| t.kind() != k) {
                return Err(terr(*p, &format!("{head} mixes scalars and vectors")));
            }
            Ok(if head == "-" {
                Term::sub(it.next().unwrap(), it.next().unwrap())
            } else {
                Term::Sum(it.collect())
            })
        }
        _ => Err(IdentityError::SyntaxError(start + 1)),
    }
}

/// Parses and type-checks a term, without the multilinearity check.
pub fn parse_term(text: &str) -> Result<Term, IdentityError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let t = p.term()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(IdentityError::SyntaxError(p.pos));
    }
    Ok(t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub num_vars: usize,
    /// Asserted to vanish.
    pub lhs: Term,
    /// Alternating in all variables, so increasing tuples suffice.
    pub alternating: bool,
    /// The non-multilinear original and its variable count.
    pub raw: Option<(Term, usize)>,
}

pub fn parse_identity(text: &str) -> Result<Identity, IdentityError> {
    let lhs = parse_term(text)?;
    let num_vars = lhs.multilinear_arity()?;
    Ok(Identity {
        name: "expr".into(),
        num_vars,
        lhs,
        alternating: false,
        raw: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Holds {
    Yes,
    Counterexample { tuple: Vec<usize>, value: Value },
}

impl Holds {
    pub fn is_yes(&self) -> bool {
        matches!(self, Holds::Yes)
    }
}

fn tuples(n: usize, k: usize, increasing: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, inc: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let from = if inc {
            cur.last().map_or(0, |&l| l + 1)
        } else {
            0
        };
        for i in from..n {
            cur.push(i);
            rec(n, k, inc, cur, out);
            cur.pop();
        }
    }
    rec(n, k, increasing, &mut cur, &mut out);
    out
}

impl Identity {
    fn builtin(name: &str, lhs: Term, alternating: bool, raw: Option<(Term, usize)>) -> Identity {
        let num_vars = lhs
            .multilinear_arity()
            .expect("builtin identities are multilinear");
        Identity {
            name: name.into(),
            num_vars,
            lhs,
            alternating,
            raw,
        }
    }

    pub fn evaluate(
        &self,
        a: &AnticommAlgebra,
        assignment: &[usize],
    ) -> Result<Value, IdentityError> {
        if assignment.len() != self.num_vars {
            return Err(IdentityError::ArityMismatch {
                expected: self.num_vars,
                got: assignment.len(),
            });
        }
        let vs: Vec<Vector> = assignment.iter().map(|&i| a.basis_vector(i)).collect();
        Ok(self.lhs.eval(a, &vs))
    }

    pub fn evaluate_vectors(
        &self,
        a: &AnticommAlgebra,
        vs: &[Vector],
    ) -> Result<Value, IdentityError> {
        if vs.len() != self.num_vars {
            return Err(IdentityError::ArityMismatch {
                expected: self.num_vars,
                got: vs.len(),
            });
        }
        Ok(self.lhs.eval(a, vs))
    }

    /// The original, non-linearized term on explicit vectors.
    pub fn evaluate_raw(&self, a: &AnticommAlgebra, vs: &[Vector]) -> Result<Value, IdentityError> {
        let (t, k) = self
            .raw
            .as_ref()
            .map_or((&self.lhs, self.num_vars), |(t, k)| (t, *k));
        if vs.len() != k {
            return Err(IdentityError::ArityMismatch {
                expected: k,
                got: vs.len(),
            });
        }
        Ok(t.eval(a, vs))
    }

    /// First basis tuple, in lexicographic order, on which the raw term
    /// does not vanish.
    pub fn raw_counterexample(&self, a: &AnticommAlgebra) -> Option<(Vec<usize>, Value)> {
        let k = self.raw.as_ref().map_or(self.num_vars, |r| r.1);
        tuples(a.dim(), k, false).into_iter().find_map(|t| {
            let vs: Vec<Vector> = t.iter().map(|&i| a.basis_vector(i)).collect();
            let v = self.evaluate_raw(a, &vs).expect("arity");
            (!v.is_zero()).then_some((t, v))
        })
    }

    pub fn holds(&self, a: &AnticommAlgebra) -> Holds {
        for t in tuples(a.dim(), self.num_vars, self.alternating) {
            let v = self.evaluate(a, &t).expect("arity");
            if !v.is_zero() {
                return Holds::Counterexample { tuple: t, value: v };
            }
        }
        Holds::Yes
    }
}

fn x(i: usize) -> Term {
    Term::Var(i - 1)
}

fn jac(a: Term, b: Term, c: Term) -> Term {
    Term::Sum(vec![
        Term::b(Term::b(a.clone(), b.clone()), c.clone()),
        Term::b(Term::b(c.clone(), a.clone()), b.clone()),
        Term::b(Term::b(b, c), a),
    ])
}

fn d_omega(a: Term, b: Term, c: Term) -> Term {
    Term::Sum(vec![
        Term::w(Term::b(a.clone(), b.clone()), c.clone()),
        Term::w(Term::b(c.clone(), a.clone()), b.clone()),
        Term::w(Term::b(b, c), a),
    ])
}

fn scaled(k: i64, t: Term) -> Term {
    Term::s(Term::Int(k), t)
}

pub const BUILTIN_NAMES: &[&str] = &[
    "jacobi-residual",
    "two-basic",
    "degree5",
    "engel",
    "abg",
    "bin",
    "four",
    "bin-consequence",
    "four-consequence",
];

/// A built-in identity. `abg` takes its three integer parameters as
/// `abg:α,β,γ` and defaults to `abg:1,1,1`.
pub fn builtin(name: &str) -> Result<Identity, IdentityError> {
    let unknown = || IdentityError::UnknownIdentity(name.to_string());
    let (base, params) = match name.split_once(':') {
        Some((b, p)) => (b, Some(p)),
        None => (name, None),
    };
    if params.is_some() && base != "abg" {
        return Err(unknown());
    }
    let id = match base {
        "jacobi-residual" => {
            let (a, b, c) = (x(1), x(2), x(3));
            let rhs = Term::Sum(vec![
                Term::s(Term::w(a.clone(), b.clone()), c.clone()),
                Term::s(Term::w(c.clone(), a.clone()), b.clone()),
                Term::s(Term::w(b.clone(), c.clone()), a.clone()),
            ]);
            Identity::builtin(base, Term::sub(jac(a, b, c), rhs), false, None)
        }
        "two-basic" => {
            let (xx, y, z, t) = (x(1), x(2), x(3), x(4));
            let wb = |p: &Term, q: &Term, r: &Term, s: &Term| {
                Term::s(Term::w(p.clone(), q.clone()), Term::b(r.clone(), s.clone()))
            };
            let lhs = Term::Sum(vec![
                wb(&z, &t, &xx, &y),
                wb(&t, &y, &xx, &z),
                wb(&y, &z, &xx, &t),
                wb(&xx, &t, &y, &z),
                wb(&z, &xx, &y, &t),
                wb(&xx, &y, &z, &t),
            ]);
            let rhs = Term::Sum(vec![
                Term::s(d_omega(t.clone(), z.clone(), y.clone()), xx.clone()),
                Term::s(d_omega(z.clone(), t.clone(), xx.clone()), y.clone()),
                Term::s(d_omega(y.clone(), xx.clone(), t.clone()), z.clone()),
                Term::s(d_omega(xx, y, z), t),
            ]);
            Identity::builtin(base, Term::sub(lhs, rhs), false, None)
        }
        "degree5" => {
            let mut terms = Vec::new();
            for p in permutations(5) {
                let v: Vec<Term> = p.iter().map(|&i| Term::Var(i)).collect();
                let left = Term::b(
                    Term::b(
                        Term::b(Term::b(v[0].clone(), v[1].clone()), v[2].clone()),
                        v[3].clone(),
                    ),
                    v[4].clone(),
                );
                let right = Term::b(
                    Term::b(Term::b(v[0].clone(), v[1].clone()), v[2].clone()),
                    Term::b(v[3].clone(), v[4].clone()),
                );
                terms.push(scaled(sign(&p), Term::Sum(vec![left, right])));
            }
            Identity::builtin(base, Term::Sum(terms), true, None)
        }
        "engel" => {
            let raw = Term::b(Term::b(Term::b(x(2), x(1)), x(1)), x(1));
            let lin = raw.linearize(0, &[0, 2, 3]);
            Identity::builtin(base, lin, false, Some((raw, 2)))
        }
        "abg" => {
            let ps: Vec<i64> = match params {
                None => vec![1, 1, 1],
                Some(p) => p
                    .split(',')
                    .map(|s| s.trim().parse::<i64>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| unknown())?,
            };
            if ps.len() != 3 {
                return Err(unknown());
            }
            let (xx, y, z) = (x(1), x(2), x(3));
            let b = |p: Term, q: Term| Term::b(p, q);
            let raw = Term::Sum(vec![
                scaled(ps[0], b(b(xx.clone(), y.clone()), b(xx.clone(), z.clone()))),
                scaled(
                    ps[1],
                    Term::sub(
                        b(b(b(xx.clone(), y.clone()), xx.clone()), z.clone()),
                        b(b(b(xx.clone(), z.clone()), xx.clone()), y.clone()),
                    ),
                ),
                scaled(
                    ps[2],
                    Term::sub(
                        b(b(b(xx.clone(), y.clone()), z.clone()), xx.clone()),
                        b(b(b(xx.clone(), z.clone()), y.clone()), xx.clone()),
                    ),
                ),
                scaled(ps[1] + ps[2], b(b(b(y, z), xx.clone()), xx)),
            ]);
            let lin = raw.linearize(0, &[0, 3]);
            Identity::builtin(name, lin, false, Some((raw, 3)))
        }
        "bin" | "bin-consequence" => {
            let (xx, y) = (x(1), x(2));
            let raw = if base == "bin" {
                jac(xx.clone(), y.clone(), Term::b(xx, y))
            } else {
                let xy = Term::b(xx.clone(), y.clone());
                Term::Sum(vec![
                    Term::s(Term::w(xx.clone(), y.clone()), xy.clone()),
                    scaled(-1, Term::s(Term::w(xy.clone(), y.clone()), xx.clone())),
                    Term::s(Term::w(xy, xx), y),
                ])
            };
            let lin = raw.linearize(0, &[0, 2]).linearize(1, &[1, 3]);
            Identity::builtin(base, lin, false, Some((raw, 2)))
        }
        "four" => {
            let (xx, y, z, t) = (x(1), x(2), x(3), x(4));
            let b = Term::b;
            let lhs = Term::Sum(vec![
                b(jac(xx.clone(), y.clone(), z.clone()), t.clone()),
                scaled(-1, b(jac(t.clone(), xx.clone(), y.clone()), z.clone())),
                b(jac(z.clone(), t.clone(), xx.clone()), y.clone()),
                scaled(-1, b(jac(y, z, t), xx)),
            ]);
            Identity::builtin(base, lhs, false, None)
        }
        "four-consequence" => Identity::builtin(base, d_omega(x(1), x(2), x(3)), false, None),
        _ => return Err(unknown()),
    };
    Ok(id)
}

//! Univariate polynomials over a [`Field`], coefficients low degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactfield::{Field, Scalar};
use crate::exactla::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn constant(field: Field, c: Scalar) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `x − c`
    pub fn linear(c: &Scalar) -> Poly {
        let f = c.field();
        Poly::new(f, vec![-c, f.one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&-self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::new(self.field, Vec::new());
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, c)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let inv = d.lead().inv().expect("nonzero lead");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::new(self.field, Vec::new()), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * b);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().expect("nonzero"))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.div_rem(m).1;
        let mut r = Poly::constant(self.field, self.field.one()).div_rem(m).1;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base).div_rem(m).1;
            }
            base = base.mul(&base).div_rem(m).1;
            e >>= 1;
        }
        r
    }
}

/// `det(x·I − M)` via reduction to Hessenberg form; valid in any characteristic.
pub fn char_poly(m: &Matrix) -> Poly {
    let n = m.rows();
    let f = m.field();
    let mut h = m.clone();
    for col in 0..n.saturating_sub(2) {
        let m1 = col + 1;
        let Some(piv) = (m1..n).find(|&i| !h.get(i, col).is_zero()) else {
            continue;
        };
        if piv != m1 {
            for j in 0..n {
                let (a, b) = (h.get(piv, j).clone(), h.get(m1, j).clone());
                h.set(piv, j, b);
                h.set(m1, j, a);
            }
            for i in 0..n {
                let (a, b) = (h.get(i, piv).clone(), h.get(i, m1).clone());
                h.set(i, piv, b);
                h.set(i, m1, a);
            }
        }
        let t = h.get(m1, col).inv().expect("nonzero pivot");
        for i in m1 + 1..n {
            let u = h.get(i, col) * &t;
            if u.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = h.get(i, j) - &(&u * h.get(m1, j));
                h.set(i, j, v);
            }
            for r in 0..n {
                let v = h.get(r, m1) + &(&u * h.get(r, i));
                h.set(r, m1, v);
            }
        }
    }
    let mut p: Vec<Poly> = vec![Poly::constant(f, f.one())];
    for k in 0..n {
        let mut next = Poly::x(f)
            .sub(&Poly::constant(f, h.get(k, k).clone()))
            .mul(&p[k]);
        let mut prod = f.one();
        for i in (0..k).rev() {
            prod = &prod * h.get(i + 1, i);
            let c = &prod * h.get(i, k);
            next = next.sub(&p[i].scale(&c));
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Roots in the field with multiplicities, and whether they account for
/// the whole degree.
pub fn roots(p: &Poly) -> (Vec<(Scalar, usize)>, bool) {
    let Some(deg) = p.degree() else {
        return (Vec::new(), false);
    };
    let distinct = match p.field.order() {
        Some(q) if q <= 100_000 => (0..q)
            .map(|i| p.field.element(i))
            .filter(|c| p.eval(c).is_zero())
            .collect(),
        Some(q) => cz_roots(p, q),
        None => rational_roots(p),
    };
    let mut out = Vec::new();
    let mut total = 0;
    for r in distinct {
        let lin = Poly::linear(&r);
        let mut rest = p.clone();
        let mut mult = 0;
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        total += mult;
        out.push((r, mult));
    }
    out.sort_by(|a, b| scalar_order(&a.0, &b.0));
    (out, total == deg)
}

fn scalar_order(a: &Scalar, b: &Scalar) -> std::cmp::Ordering {
    match (a, b) {
        (Scalar::Q(x), Scalar::Q(y)) => x.cmp(y),
        (Scalar::Gf(_, x), Scalar::Gf(_, y)) => x.cmp(y),
        _ => std::cmp::Ordering::Equal,
    }
}

fn cz_roots(p: &Poly, q: u64) -> Vec<Scalar> {
    let f = p.field;
    let x = Poly::x(f);
    let g = x.pow_mod(q, p).sub(&x).gcd(p);
    let mut out = Vec::new();
    split_linear(&g, q, &mut out);
    out
}

fn split_linear(g: &Poly, q: u64, out: &mut Vec<Scalar>) {
    let f = g.field;
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(-&g.monic().coeffs[0]),
        Some(d) => {
            for a in 1u64.. {
                let shift = Poly::new(f, vec![f.element(a), f.one()]);
                let h = shift
                    .pow_mod((q - 1) / 2, g)
                    .sub(&Poly::constant(f, f.one()))
                    .gcd(g);
                if let Some(hd) = h.degree() {
                    if hd > 0 && hd < d {
                        split_linear(&h, q, out);
                        split_linear(&g.div_rem(&h).0, q, out);
                        return;
                    }
                }
            }
        }
    }
}

fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let f = p.field;
    let rats: Vec<_> = p
        .coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational").clone())
        .collect();
    let den_lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats
        .iter()
        .map(|r| r.numer() * (&den_lcm / r.denom()))
        .collect();
    let mut out = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        out.push(f.zero());
    }
    let ints = &ints[low..];
    if ints.len() <= 1 {
        return out;
    }
    let (Some(a0), Some(an)) = (
        ints[0].abs().to_u128(),
        ints[ints.len() - 1].abs().to_u128(),
    ) else {
        return out;
    };
    let reduced = Poly::new(f, ints.iter().map(|c| f.from_bigint(c)).collect());
    for num in divisors(a0) {
        for den in divisors(an) {
            if num.gcd(&den) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let c = f
                    .from_bigint(&(BigInt::from(num) * sign))
                    .try_div(&f.from_bigint(&BigInt::from(den)))
                    .expect("den > 0");
                if reduced.eval(&c).is_zero() && !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn divisors(n: u128) -> Vec<u128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_companion() {
        let q = Field::Q;
        let m = Matrix::from_ints(q, &[&[0, 1], &[-2, 0]]);
        let p = char_poly(&m);
        assert_eq!(p.coeffs(), &[q.int(2), q.int(0), q.int(1)]);
        let (r, split) = roots(&p);
        assert!(r.is_empty());
        assert!(!split);
    }

    #[test]
    fn roots_with_multiplicity() {
        let q = Field::Q;
        let p = Poly::linear(&q.int(2))
            .mul(&Poly::linear(&q.int(2)))
            .mul(&Poly::linear(&q.frac(-1, 3).unwrap()));
        let (r, split) = roots(&p);
        assert!(split);
        assert_eq!(r, vec![(q.frac(-1, 3).unwrap(), 1), (q.int(2), 2)]);
    }

    #[test]
    fn large_prime_roots() {
        let f = Field::prime(1_000_003).unwrap();
        let p = Poly::linear(&f.int(17))
            .mul(&Poly::linear(&f.int(-5)))
            .mul(&Poly::new(f, vec![f.int(2), f.zero(), f.one()]));
        let (r, _) = roots(&p);
        let vals: Vec<Scalar> = r.into_iter().map(|(s, _)| s).collect();
        assert!(vals.contains(&f.int(17)) && vals.contains(&f.int(-5)));
    }
}

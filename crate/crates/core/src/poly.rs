//! Dense univariate polynomials over a [`FieldSpec`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::{FieldSpec, Scalar};

/// Coefficients are stored lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: FieldSpec) -> Self {
        Poly::new(field, vec![field.one()])
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Self {
        Poly::new(field, vec![c])
    }

    /// `t - c`
    pub fn linear(field: FieldSpec, c: &Scalar) -> Self {
        Poly::new(field, vec![-c, field.one()])
    }

    pub fn monomial(field: FieldSpec, c: Scalar, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree];
        coeffs.push(c);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(self.field, (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, out)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut acc = Poly::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                let shift = top - dd;
                for (k, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + k] -= &(&c * d);
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·other = g`, `g` the monic gcd.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        match r0.leading().cloned() {
            Some(lead) => {
                let inv = lead.inv().expect("nonzero leading coefficient");
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &self.field.from_i64(k as i64))
                .collect(),
        )
    }

    /// The monic `q` with `q^n = self`, when it exists.
    ///
    /// Coefficients are solved top-down; each step divides by `n`, so `n`
    /// must be invertible in the field. The result is verified by expansion.
    pub fn nth_root(&self, n: u32) -> Option<Poly> {
        if n == 0 || !self.is_monic() {
            return None;
        }
        let total = self.degree()?;
        if n == 1 {
            return Some(self.clone());
        }
        if total % n as usize != 0 {
            return None;
        }
        let n_inv = self.field.from_i64(n as i64).inv()?;
        let d = total / n as usize;
        let mut q = vec![self.field.zero(); d + 1];
        q[d] = self.field.one();
        for k in 1..=d {
            let partial = Poly::new(self.field, q.clone()).pow(n);
            let target = self.coeff(total - k);
            q[d - k] = (target - partial.coeff(total - k)) * &n_inv;
        }
        let root = Poly::new(self.field, q);
        (root.pow(n) == *self).then_some(root)
    }

    /// All roots lying in the base field, without multiplicity.
    ///
    /// Prime fields are scanned exhaustively (up to a size limit); rational
    /// polynomials use the rational root test on the cleared integer form.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        match self.field {
            FieldSpec::Prime(p) => {
                if p > 1 << 22 {
                    return Vec::new();
                }
                self.field
                    .elements()
                    .unwrap()
                    .into_iter()
                    .filter(|x| self.eval(x).is_zero())
                    .collect()
            }
            FieldSpec::Rationals => self.rational_roots(),
        }
    }

    fn rational_roots(&self) -> Vec<Scalar> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            let r = c.as_rational().unwrap();
            lcm = lcm.lcm(r.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.as_rational().unwrap();
                r.numer() * (&lcm / r.denom())
            })
            .collect();
        let mut roots = Vec::new();
        let low = ints.iter().position(|c| !c.is_zero()).unwrap();
        if low > 0 {
            roots.push(self.field.zero());
        }
        let trimmed = &ints[low..];
        if trimmed.len() < 2 {
            return roots;
        }
        let (Some(pn), Some(qn)) = (
            small_divisors(&trimmed[0].abs()),
            small_divisors(&trimmed[trimmed.len() - 1].abs()),
        ) else {
            return roots;
        };
        let mut seen = std::collections::BTreeSet::new();
        for p in &pn {
            for q in &qn {
                for sign in [1i64, -1] {
                    let cand = Scalar::Rational(num_rational::BigRational::new(BigInt::from(sign) * p, q.clone()));
                    let key = cand.to_string();
                    if seen.insert(key) && self.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let v = n.to_u64()?;
    if v == 0 {
        return Some(vec![]);
    }
    if v > 1 << 40 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = match c.as_rational() {
                Some(r) if r.is_negative() => (true, Scalar::Rational(-r)),
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                write!(f, "{mag}")?;
                if k > 0 {
                    write!(f, "*")?;
                }
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

//! Exact coefficient fields: the rationals and finite fields `F_q` with
//! `q <= 2^16`, the latter backed by log/exp tables.

use super::HahnError;
use crate::fields::prime_power;
use crate::oag::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// `F_{p^n}` with elements encoded as base-`p` digit strings of length `n`
/// (coefficients of a polynomial in a primitive element).
pub struct GaloisField {
    p: u32,
    n: u32,
    q: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({})", self.q)
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for GaloisField {}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self, HahnError> {
        let (p, n) = prime_power(q).ok_or(HahnError::NotPrimePower(q))?;
        if q > MAX_FIELD_SIZE {
            return Err(HahnError::FieldTooLarge(q));
        }
        let (p, q) = (p as u32, q as u32);
        // Search monic degree-n polynomials for one with x primitive.
        for tail in 0..q {
            if tail % p == 0 {
                continue;
            }
            let modulus = digits(tail, p, n);
            if let Some((exp, log)) = primitive_tables(p, n, q, &modulus) {
                return Ok(GaloisField { p, n, q, exp, log });
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.n == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.n {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.n == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.n {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[s as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    /// The image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, k: &BigInt) -> u32 {
        k.mod_floor(&BigInt::from(self.p)).to_u32().unwrap()
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    /// Smallest `j >= 1` with `a^(r^j) = a`: the degree of `a` over `F_r`
    /// for `r = p^base_degree`.
    pub fn frobenius_orbit(&self, a: u32, base_degree: u32) -> u32 {
        let r = (self.p as u64).pow(base_degree);
        let mut x = self.pow(a, r);
        let mut j = 1;
        while x != a {
            x = self.pow(x, r);
            j += 1;
        }
        j
    }
}

fn digits(mut x: u32, p: u32, n: u32) -> Vec<u32> {
    (0..n)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

/// Powers of `x` modulo the monic polynomial `x^n + Σ modulus[i] x^i`, if `x`
/// has multiplicative order `q - 1`.
fn primitive_tables(p: u32, n: u32, q: u32, modulus: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = n as usize;
    let encode = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &d| acc * p + d);
    let mut cur = vec![0u32; n];
    cur[0] = 1;
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut log = vec![u32::MAX; q as usize];
    for k in 0..q - 1 {
        let code = encode(&cur);
        if log[code as usize] != u32::MAX {
            return None;
        }
        log[code as usize] = k;
        exp.push(code);
        // multiply by x
        let top = cur[n - 1];
        for i in (1..n).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..n {
            cur[i] = (cur[i] + (p - modulus[i]) * top) % p;
        }
    }
    (encode(&cur) == 1).then_some((exp, log))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffField {
    Rational,
    Finite(Arc<GaloisField>),
}

impl CoeffField {
    pub fn finite(q: u64) -> Result<Self, HahnError> {
        Ok(CoeffField::Finite(Arc::new(GaloisField::new(q)?)))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffField::Rational => 0,
            CoeffField::Finite(g) => g.characteristic() as u64,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoeffField::Rational => Coeff::Rat(Rat::zero()),
            CoeffField::Finite(_) => Coeff::Gf(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoeffField::Rational => Coeff::Rat(Rat::one()),
            CoeffField::Finite(_) => Coeff::Gf(1),
        }
    }

    /// Image of a rational number; fails when the denominator vanishes in
    /// positive characteristic.
    pub fn from_rat(&self, r: &Rat) -> Result<Coeff, HahnError> {
        match self {
            CoeffField::Rational => Ok(Coeff::Rat(r.clone())),
            CoeffField::Finite(g) => {
                let d = g.from_int(r.denom());
                let inv = g.inv(d).ok_or_else(|| HahnError::NotRepresentable(r.to_string()))?;
                Ok(Coeff::Gf(g.mul(g.from_int(r.numer()), inv)))
            }
        }
    }

    pub fn from_int(&self, k: i64) -> Coeff {
        self.from_rat(&Rat::from_integer(k.into()))
            .expect("integers are always representable")
    }

    pub fn contains(&self, c: &Coeff) -> bool {
        match (self, c) {
            (CoeffField::Rational, Coeff::Rat(_)) => true,
            (CoeffField::Finite(g), Coeff::Gf(x)) => *x < g.order(),
            _ => false,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffField::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (CoeffField::Finite(g), Coeff::Gf(x), Coeff::Gf(y)) => Coeff::Gf(g.add(*x, *y)),
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoeffField::Rational, Coeff::Rat(x)) => Coeff::Rat(-x),
            (CoeffField::Finite(g), Coeff::Gf(x)) => Coeff::Gf(g.neg(*x)),
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoeffField::Rational, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (CoeffField::Finite(g), Coeff::Gf(x), Coeff::Gf(y)) => Coeff::Gf(g.mul(*x, *y)),
            _ => panic!("coefficient from a different field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        match (self, a) {
            (CoeffField::Rational, Coeff::Rat(x)) if !x.is_zero() => Some(Coeff::Rat(x.recip())),
            (CoeffField::Finite(g), Coeff::Gf(x)) => g.inv(*x).map(Coeff::Gf),
            _ => None,
        }
    }
}

impl fmt::Display for CoeffField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffField::Rational => f.write_str("Q"),
            CoeffField::Finite(g) => write!(f, "F({})", g.order()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(Rat),
    /// Table index into a [`GaloisField`]; for prime fields this is the
    /// residue in `0..p`.
    Gf(u32),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Gf(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_one(),
            Coeff::Gf(x) => *x == 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, Coeff::Rat(r) if r.is_negative())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rat(r) => write!(f, "{r}"),
            Coeff::Gf(x) => write!(f, "{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for q in [2u64, 3, 4, 8, 9, 25, 49, 125] {
            let g = GaloisField::new(q).unwrap();
            let q = q as u32;
            for a in 0..q {
                assert_eq!(g.add(a, g.neg(a)), 0);
                if a != 0 {
                    assert_eq!(g.mul(a, g.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(g.add(a, b), g.add(b, a));
                    for c in [0, 1, q - 1] {
                        let l = g.mul(a, g.add(b, c));
                        let r = g.add(g.mul(a, b), g.mul(a, c));
                        assert_eq!(l, r, "distributivity in F({q})");
                    }
                }
            }
        }
    }

    #[test]
    fn prime_field_matches_integers_mod_p() {
        let g = GaloisField::new(7).unwrap();
        for a in 0..7u32 {
            for b in 0..7u32 {
                assert_eq!(g.add(a, b), (a + b) % 7);
                assert_eq!(g.mul(a, b), (a * b) % 7);
            }
        }
    }

    #[test]
    fn frobenius_orbits_give_subfield_degrees() {
        let g = GaloisField::new(5u64.pow(4)).unwrap();
        let mut counts = [0u32; 5];
        for a in g.elements() {
            counts[g.frobenius_orbit(a, 1) as usize] += 1;
        }
        // F_5 has 5 elements, F_25 adds 20, the rest have degree 4.
        assert_eq!(counts, [0, 5, 20, 0, 600]);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(matches!(GaloisField::new(6), Err(HahnError::NotPrimePower(6))));
        assert!(matches!(GaloisField::new(1 << 17), Err(HahnError::FieldTooLarge(_))));
        let f5 = CoeffField::finite(5).unwrap();
        assert!(f5.from_rat(&Rat::new(1.into(), 5.into())).is_err());
        assert_eq!(f5.from_rat(&Rat::new(1.into(), 2.into())).unwrap(), Coeff::Gf(3));
    }
}

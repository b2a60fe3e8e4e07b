//! Dense polynomials over a small prime field, used by the Zassenhaus
//! factorizer. Coefficients are ascending and reduced to `[0, p)`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

pub(crate) type PolyP = Vec<u64>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        Field { p }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow_scalar(a, self.p - 2)
    }

    fn pow_scalar(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn reduce_big(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    pub fn reduce_ints(&self, f: &[BigInt]) -> PolyP {
        trim(f.iter().map(|c| self.reduce_big(c)).collect())
    }

    pub fn add_poly(&self, a: &[u64], b: &[u64]) -> PolyP {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0));
        }
        trim(out)
    }

    pub fn sub_poly(&self, a: &[u64], b: &[u64]) -> PolyP {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0));
        }
        trim(out)
    }

    pub fn mul_poly(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> PolyP {
        trim(a.iter().map(|&x| self.mul(x, c)).collect())
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            Some(&lc) if lc != 1 => self.scale(a, self.inv(lc)),
            _ => a.to_vec(),
        }
    }

    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut rem = a.to_vec();
        let db = b.len() - 1;
        let mut quot = vec![0; a.len() - db];
        for k in (0..quot.len()).rev() {
            let c = self.mul(rem[k + db], inv);
            if c == 0 {
                continue;
            }
            for (j, &bc) in b.iter().enumerate() {
                rem[k + j] = self.sub(rem[k + j], self.mul(c, bc));
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (trim(quot), trim(rem))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(s, t)` with `s*a + t*b = 1`, requires coprime inputs.
    pub fn bezout(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1): (PolyP, PolyP) = (vec![1], Vec::new());
        let (mut t0, mut t1): (PolyP, PolyP) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        debug_assert_eq!(r0.len(), 1, "bezout on non-coprime polynomials");
        let inv = self.inv(r0[0]);
        (self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| self.mul(c, k as u64 % self.p))
                .collect(),
        )
    }

    pub fn powmod(&self, base: &[u64], exp: &BigUint, modulus: &[u64]) -> PolyP {
        let mut result: PolyP = vec![1];
        let mut b = self.rem(base, modulus);
        let bits = exp.bits();
        for i in 0..bits {
            if exp.bit(i) {
                result = self.rem(&self.mul_poly(&result, &b), modulus);
            }
            if i + 1 < bits {
                b = self.rem(&self.mul_poly(&b, &b), modulus);
            }
        }
        self.rem(&result, modulus)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(g, d)` where `g` is the product of all irreducible factors of
    /// degree `d`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut rest = self.monic(f);
        let x: PolyP = vec![0, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut d = 0;
        while rest.len() > 1 && 2 * (d + 1) < rest.len() {
            d += 1;
            h = self.powmod(&h, &p, &rest);
            let g = self.gcd(&self.sub_poly(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
        }
        if rest.len() > 1 {
            let deg = rest.len() - 1;
            out.push((rest, deg));
        }
        out
    }

    /// Cantor-Zassenhaus splitting of a product of irreducibles of degree `d`.
    pub fn equal_degree<R: Rng>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == d {
            return vec![self.monic(f)];
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: PolyP = trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.sub_poly(&self.powmod(&a, &exp, f), &[1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.div_rem(f, &g).0;
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&h, d, rng));
                return out;
            }
        }
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let g = self.gcd(f, &self.derivative(f));
        g.len() == 1
    }
}

pub(crate) fn trim(mut v: PolyP) -> PolyP {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Integer polynomial arithmetic modulo `m = p^k`, coefficients in `[0, m)`.
pub(crate) struct IntMod {
    pub m: BigInt,
}

impl IntMod {
    pub fn reduce(&self, f: &[BigInt]) -> Vec<BigInt> {
        let mut v: Vec<BigInt> = f.iter().map(|c| c.mod_floor(&self.m)).collect();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(&out)
    }

    /// Representative in `(-m/2, m/2]`.
    pub fn symmetric(&self, c: &BigInt) -> BigInt {
        let r = c.mod_floor(&self.m);
        if &r * 2 > self.m {
            r - &self.m
        } else {
            r
        }
    }
}

//! Squarefree decomposition, rational roots and irreducible factorization
//! over the rationals (squarefree split, rational-root stripping, then
//! Zassenhaus: factor modulo a small prime, Hensel-lift, recombine).

use std::collections::BTreeSet;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;

use super::modp::{Field, IntMod, PolyP};
use super::{Rat, UPoly};
use crate::error::{CapKind, Error, Result};

pub const DEFAULT_FACTOR_DEGREE_CAP: usize = 30;

/// Largest constant/leading coefficient for which rational roots are found
/// by divisor enumeration; bigger inputs go through the modular factorizer.
const DIVISOR_ENUMERATION_LIMIT: u64 = 1_000_000_000_000;

/// `unit * prod(factor^mult)`, factors monic irreducible in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(UPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(self.unit.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }
}

/// Yun's algorithm. Parts are monic, squarefree and pairwise coprime; the
/// leading coefficient of `f` is the remaining unit.
pub fn squarefree_factorization(f: &UPoly) -> Result<Vec<(UPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::UndefinedOrder);
    }
    let f = f.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let df = f.derivative();
    let mut a = f.gcd(&df);
    let mut b = f.exact_div(&a);
    let mut c = df.exact_div(&a);
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

fn small_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in small_factors(n) {
        let current = divs.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            divs.extend(current.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// Whether `num/den` is a root, via `den^n * f(num/den)` in integers.
fn int_poly_vanishes(f: &[BigInt], num: &BigInt, den: &BigInt) -> bool {
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    for c in f.iter().rev() {
        acc = acc * num + c * &den_pow;
        den_pow *= den;
    }
    acc.is_zero()
}

/// Rational roots by the rational-root theorem, or `None` when the constant
/// or leading coefficient is too large to enumerate divisors.
fn small_rational_roots(prim: &[BigInt]) -> Option<Vec<Rat>> {
    let mut roots = Vec::new();
    let lead = prim.iter().position(|c| !c.is_zero())?;
    if lead > 0 {
        roots.push(Rat::zero());
    }
    let f = &prim[lead..];
    if f.len() <= 1 {
        return Some(roots);
    }
    let a0 = f[0]
        .abs()
        .to_u64()
        .filter(|&v| v <= DIVISOR_ENUMERATION_LIMIT)?;
    let an = f
        .last()
        .unwrap()
        .abs()
        .to_u64()
        .filter(|&v| v <= DIVISOR_ENUMERATION_LIMIT)?;
    let nums = divisors(a0);
    let dens = divisors(an);
    let mut found = BTreeSet::new();
    for &q in &dens {
        for &p in &nums {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let num = BigInt::from(p) * sign;
                let den = BigInt::from(q);
                if int_poly_vanishes(f, &num, &den) {
                    found.insert(Rat::new(num, den));
                }
            }
        }
    }
    roots.extend(found);
    roots.sort();
    Some(roots)
}

/// Distinct rational roots, ascending.
pub fn rational_roots(f: &UPoly) -> Result<Vec<Rat>> {
    if f.is_zero() {
        return Err(Error::UndefinedOrder);
    }
    let (_, prim) = f.primitive_part();
    if let Some(roots) = small_rational_roots(&prim) {
        return Ok(roots);
    }
    let fac = factor_irreducible(f)?;
    let mut roots: Vec<Rat> = fac
        .factors
        .iter()
        .filter(|(p, _)| p.deg() == 1)
        .map(|(p, _)| -p.coeff(0))
        .collect();
    roots.sort();
    Ok(roots)
}

/// Distinct integer roots, ascending.
pub fn integer_roots(f: &UPoly) -> Result<Vec<BigInt>> {
    Ok(rational_roots(f)?
        .into_iter()
        .filter(|r| r.is_integer())
        .map(|r| r.to_integer())
        .collect())
}

/// Full factorization with the default degree cap.
pub fn factor_irreducible(f: &UPoly) -> Result<Factorization> {
    factor_irreducible_capped(f, DEFAULT_FACTOR_DEGREE_CAP)
}

pub fn factor_irreducible_capped(f: &UPoly, cap: usize) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::UndefinedOrder);
    }
    let unit = f.leading();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_factorization(f)? {
        for irr in factor_squarefree(&part, cap)? {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(Factorization { unit, factors })
}

pub fn is_irreducible(f: &UPoly) -> Result<bool> {
    if f.is_constant() {
        return Ok(false);
    }
    let fac = factor_irreducible(f)?;
    Ok(fac.factors.len() == 1 && fac.factors[0].1 == 1)
}

/// Monic irreducible factors of a squarefree polynomial.
fn factor_squarefree(part: &UPoly, cap: usize) -> Result<Vec<UPoly>> {
    let (_, mut prim) = part.primitive_part();
    let mut out = Vec::new();
    if let Some(roots) = small_rational_roots(&prim) {
        for r in roots {
            let lin = UPoly::linear_root(&r);
            let q = UPoly::from_bigints(&prim).exact_div(&lin);
            prim = q.primitive_part().1;
            out.push(lin);
        }
    }
    if prim.len() > 1 {
        let deg = prim.len() - 1;
        if deg > cap {
            return Err(Error::Cap(CapKind::FactorDegree { degree: deg, cap }));
        }
        for g in zassenhaus(&prim) {
            out.push(UPoly::from_bigints(&g).monic());
        }
    }
    Ok(out)
}

fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        (3..)
            .step_by(2)
            .take_while(|d| d * d <= n)
            .all(|d| n % d != 0)
    })
}

/// Irreducible factors over Z of a primitive squarefree polynomial with
/// positive leading coefficient.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f[n].clone();
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);

    // pick the prime (out of a few good candidates) giving the fewest factors
    let mut best: Option<(Field, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in odd_primes().take_while(|&p| p < 100_000) {
        let field = Field::new(p);
        if field.reduce_big(&lc) == 0 {
            continue;
        }
        let fp = field.reduce_ints(f);
        if fp.len() != f.len() || !field.is_squarefree(&fp) {
            continue;
        }
        let monic = field.monic(&fp);
        let mut facs = Vec::new();
        for (g, d) in field.distinct_degree(&monic) {
            facs.extend(field.equal_degree(&g, d, &mut rng));
        }
        if facs.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((field, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (field, mut modp_factors) = best.expect("no suitable prime for modular factorization");
    modp_factors.sort();

    // coefficient bound for factors (Landau-Mignotte) times |lc|
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let bound = (BigInt::one() << n) * norm * lc.abs() * 2;
    let p_big = BigInt::from(field.p);
    let mut modulus = p_big.clone();
    let mut k = 1u32;
    while modulus <= bound {
        modulus *= &p_big;
        k += 1;
    }
    let lifted = hensel_lift(field, f, &modp_factors, k);
    recombine(f, lifted, &modulus)
}

/// Lifts `f = lc * prod(factors) mod p` to a factorization mod `p^k` with
/// monic lifted factors.
fn hensel_lift(field: Field, f: &[BigInt], factors: &[PolyP], k: u32) -> Vec<Vec<BigInt>> {
    let p = BigInt::from(field.p);
    let pk = p.pow(k);
    let ring = IntMod { m: pk.clone() };
    let target = ring.reduce(f);
    lift_tree(field, &target, factors, k)
}

fn lift_tree(field: Field, target: &[BigInt], factors: &[PolyP], k: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        // monic associate of target mod p^k
        let p = BigInt::from(field.p);
        let pk = p.pow(k);
        let lc = target.last().unwrap().clone();
        let inv = mod_inverse(&lc, &pk);
        let ring = IntMod { m: pk };
        let scaled: Vec<BigInt> = target.iter().map(|c| c * &inv).collect();
        return vec![ring.reduce(&scaled)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g = left
        .iter()
        .fold(vec![1u64], |acc, h| field.mul_poly(&acc, h));
    let lc_p = field.reduce_big(target.last().unwrap());
    let h = field.scale(
        &right
            .iter()
            .fold(vec![1u64], |acc, h| field.mul_poly(&acc, h)),
        lc_p,
    );
    let (g_lift, h_lift) = lift_pair(field, target, &g, &h, k);
    let mut out = lift_tree(field, &g_lift, left, k);
    out.extend(lift_tree(field, &h_lift, right, k));
    out
}

/// Linear Hensel lifting of `target = g * h mod p` (g monic) to mod `p^k`.
fn lift_pair(
    field: Field,
    target: &[BigInt],
    g: &PolyP,
    h: &PolyP,
    k: u32,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let p = BigInt::from(field.p);
    let (s, t) = field.bezout(g, h);
    let mut g_big: Vec<BigInt> = g.iter().map(|&c| BigInt::from(c)).collect();
    let mut h_big: Vec<BigInt> = h.iter().map(|&c| BigInt::from(c)).collect();
    // h carries the leading coefficient of the target exactly
    let pk = p.pow(k);
    *h_big.last_mut().unwrap() = target.last().unwrap().mod_floor(&pk);
    let mut pj = p.clone();
    for _ in 1..k {
        let next = &pj * &p;
        let ring = IntMod { m: next.clone() };
        let prod = ring.mul(&g_big, &h_big);
        let len = target.len().max(prod.len());
        let diff: Vec<BigInt> = (0..len)
            .map(|i| {
                let a = target.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&next)
            })
            .collect();
        let e: PolyP = field.reduce_ints(&diff.iter().map(|c| c / &pj).collect::<Vec<_>>());
        if !e.is_empty() {
            let et = field.mul_poly(&e, &t);
            let (q, tau) = field.div_rem(&et, g);
            let sigma = field.add_poly(&field.mul_poly(&e, &s), &field.mul_poly(&q, h));
            for (i, c) in tau.iter().enumerate() {
                g_big[i] += &pj * BigInt::from(*c);
            }
            for (i, c) in sigma.iter().enumerate() {
                if i >= h_big.len() {
                    h_big.push(BigInt::zero());
                }
                h_big[i] += &pj * BigInt::from(*c);
            }
        }
        pj = next;
    }
    let ring = IntMod { m: pk };
    (ring.reduce(&g_big), ring.reduce(&h_big))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn primitive_int(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut out: Vec<BigInt> = v.into_iter().map(|c| c / &g).collect();
    if out.last().is_some_and(|c| c.sign() == Sign::Minus) {
        out.iter_mut().for_each(|c| *c = -c.clone());
    }
    out
}

/// Exact quotient over Z if `g` divides `f`.
fn int_divide(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let (q, r) = UPoly::from_bigints(f).div_rem(&UPoly::from_bigints(g));
    if !r.is_zero() || q.coeffs().iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

fn recombine(f: &[BigInt], mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let ring = IntMod { m: modulus.clone() };
    let mut f = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = None;
        'subsets: for subset in Subsets::new(lifted.len(), size) {
            let lc = f.last().unwrap().clone();
            let mut prod = vec![lc];
            for &i in &subset {
                prod = ring.mul(&prod, &lifted[i]);
            }
            let candidate = primitive_int(
                ring.reduce(&prod)
                    .iter()
                    .map(|c| ring.symmetric(c))
                    .collect::<Vec<_>>(),
            );
            if let Some(q) = int_divide(&f, &candidate) {
                found = Some((subset, candidate, q));
                break 'subsets;
            }
        }
        match found {
            Some((subset, candidate, q)) => {
                out.push(candidate);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        out.push(primitive_int(f));
    }
    out
}

/// Lexicographic enumeration of `size`-subsets of `0..n`.
struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    fn new(n: usize, size: usize) -> Self {
        let current = (size <= n).then(|| (0..size).collect());
        Subsets { n, current }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.current.take()?;
        let k = cur.len();
        let mut next = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(cur)
    }
}

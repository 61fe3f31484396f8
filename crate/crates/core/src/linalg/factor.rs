//! Factorization of univariate polynomials over `F_p` (squarefree, distinct-degree and
//! Cantor–Zassenhaus splitting) and over `ℚ` (squarefree decomposition, factoring modulo a
//! prime, Hensel lifting and Zassenhaus recombination).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::UniPoly;
use super::scalar::{is_prime, pow_mod, FieldSpec, LinalgError, Scalar};

/// `f = unit · Π g_i^{m_i}` with each `g_i` monic irreducible, sorted by degree then
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<(UniPoly, u32)>,
}

impl Factorization {
    pub fn product(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.unit.clone());
        for (g, m) in &self.factors {
            acc = acc.mul(&g.pow(*m));
        }
        acc
    }
}

pub fn factor(f: &UniPoly) -> Result<Factorization, LinalgError> {
    if f.is_zero() {
        return Err(LinalgError::ZeroPolynomial);
    }
    let unit = f.lead();
    let mut factors = match f.field {
        FieldSpec::Prime(p) => {
            let g = to_fp(&f.monic(), p as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            factor_fp(&g, p as u64, &mut rng)
                .into_iter()
                .map(|(g, m)| (from_fp(&g, p), m))
                .collect::<Vec<_>>()
        }
        FieldSpec::Rational => factor_q(f),
    };
    factors.sort_by(|a, b| {
        (a.0.deg(), a.0.coeffs().len())
            .cmp(&(b.0.deg(), b.0.coeffs().len()))
            .then_with(|| {
                for (x, y) in a.0.coeffs().iter().zip(b.0.coeffs()) {
                    let c = x.cmp_value(y);
                    if c != std::cmp::Ordering::Equal {
                        return c;
                    }
                }
                std::cmp::Ordering::Equal
            })
    });
    Ok(Factorization { unit, factors })
}

// ---------- F_p polynomials as u64 coefficient vectors ----------

type Fp = Vec<u64>;

fn to_fp(f: &UniPoly, p: u64) -> Fp {
    let mut v: Fp = f.coeffs().iter().map(|c| c.to_i64().unwrap() as u64 % p).collect();
    trim(&mut v);
    v
}

fn from_fp(f: &Fp, p: u32) -> UniPoly {
    let field = FieldSpec::Prime(p);
    UniPoly::new(field, f.iter().map(|&c| field.from_i64(c as i64)).collect())
}

fn trim(v: &mut Fp) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let mut out: Fp = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

fn fp_add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    let mut out: Fp = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(&mut out);
    out
}

fn fp_mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

fn fp_divrem(a: &Fp, d: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!d.is_empty());
    if a.len() < d.len() {
        return (vec![], a.clone());
    }
    let inv = pow_mod(*d.last().unwrap(), p - 2, p);
    let dd = d.len() - 1;
    let mut rem = a.clone();
    let mut quot = vec![0u64; a.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &b) in d.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - c * b % p) % p;
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn fp_rem(a: &Fp, d: &Fp, p: u64) -> Fp {
    fp_divrem(a, d, p).1
}

fn fp_monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        None => vec![],
        Some(&l) => {
            let inv = pow_mod(l, p - 2, p);
            a.iter().map(|&c| c * inv % p).collect()
        }
    }
}

fn fp_gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_empty() {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    fp_monic(&x, p)
}

/// `(s, t)` with `s a + t b = 1` (inputs coprime).
fn fp_ext_gcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Fp, Fp) = (vec![1], vec![]);
    let (mut t0, mut t1): (Fp, Fp) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
        let s = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        s0 = s1;
        s1 = s;
        let t = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.len(), 1, "inputs to the Bezout step must be coprime");
    let inv = pow_mod(r0[0], p - 2, p);
    (
        s0.iter().map(|&c| c * inv % p).collect(),
        t0.iter().map(|&c| c * inv % p).collect(),
    )
}

fn fp_deriv(a: &Fp, p: u64) -> Fp {
    let mut out: Fp = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (i as u64 % p) * c % p)
        .collect();
    trim(&mut out);
    out
}

fn fp_powmod(a: &Fp, e: &BigUint, m: &Fp, p: u64) -> Fp {
    let mut r: Fp = fp_rem(&vec![1], m, p);
    let base = fp_rem(a, m, p);
    for i in (0..e.bits()).rev() {
        r = fp_rem(&fp_mul(&r, &r, p), m, p);
        if e.bit(i) {
            r = fp_rem(&fp_mul(&r, &base, p), m, p);
        }
    }
    r
}

fn is_one(a: &Fp) -> bool {
    a.len() == 1 && a[0] == 1
}

fn fp_squarefree(f: &Fp, p: u64) -> Vec<(Fp, u32)> {
    let mut out = Vec::new();
    let mut c = fp_gcd(f, &fp_deriv(f, p), p);
    let mut w = fp_divrem(f, &c, p).0;
    let mut i = 1;
    while !is_one(&w) {
        let y = fp_gcd(&w, &c, p);
        let fac = fp_divrem(&w, &y, p).0;
        if !is_one(&fac) {
            out.push((fac, i));
        }
        w = y.clone();
        c = fp_divrem(&c, &y, p).0;
        i += 1;
    }
    if !is_one(&c) {
        let root: Fp = c.iter().step_by(p as usize).copied().collect();
        for (g, m) in fp_squarefree(&root, p) {
            out.push((g, m * p as u32));
        }
    }
    out
}

fn fp_ddf(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = fp_rem(&x, &rest, p);
    let pe = BigUint::from(p);
    let mut d = 1;
    while rest.len() > 2 * d {
        h = fp_powmod(&h, &pe, &rest, p);
        let g = fp_gcd(&rest, &fp_sub(&h, &x, p), p);
        if !is_one(&g) {
            rest = fp_divrem(&rest, &g, p).0;
            h = fp_rem(&h, &rest, p);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.len() > 1 {
        let deg = rest.len() - 1;
        out.push((rest, deg));
    }
    out
}

fn fp_edf(g: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    let n = g.len() - 1;
    if n == d {
        return vec![g.clone()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let mut a: Fp = (0..n).map(|_| rng.gen_range(0..p)).collect();
        trim(&mut a);
        if a.len() < 2 {
            continue;
        }
        let b = if p == 2 {
            let mut acc = a.clone();
            let mut cur = a.clone();
            for _ in 1..d {
                cur = fp_rem(&fp_mul(&cur, &cur, p), g, p);
                acc = fp_add(&acc, &cur, p);
            }
            acc
        } else {
            fp_sub(&fp_powmod(&a, &exp, g, p), &vec![1], p)
        };
        let h = fp_gcd(g, &b, p);
        if h.len() > 1 && h.len() < g.len() {
            let rest = fp_divrem(g, &h, p).0;
            let mut out = fp_edf(&h, d, p, rng);
            out.extend(fp_edf(&fp_monic(&rest, p), d, p, rng));
            return out;
        }
    }
}

fn factor_fp(f: &Fp, p: u64, rng: &mut ChaCha8Rng) -> Vec<(Fp, u32)> {
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    for (sq, m) in fp_squarefree(f, p) {
        for (g, d) in fp_ddf(&sq, p) {
            for h in fp_edf(&g, d, p, rng) {
                out.push((h, m));
            }
        }
    }
    out
}

// ---------- integer polynomials ----------

type Zp = Vec<BigInt>;

fn ztrim(v: &mut Zp) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn zmul(a: &Zp, b: &Zp) -> Zp {
    if a.is_empty() || b.is_empty() {
        return vec![];
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
    ztrim(&mut out);
    out
}

fn zsub(a: &Zp, b: &Zp) -> Zp {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut out: Zp = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
        .collect();
    ztrim(&mut out);
    out
}

fn zadd(a: &Zp, b: &Zp) -> Zp {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut out: Zp = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
        .collect();
    ztrim(&mut out);
    out
}

fn zmod(a: &Zp, m: &BigInt) -> Zp {
    let mut out: Zp = a.iter().map(|c| c.mod_floor(m)).collect();
    ztrim(&mut out);
    out
}

fn zsym(a: &Zp, m: &BigInt) -> Zp {
    let half: BigInt = m / 2;
    let mut out: Zp = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect();
    ztrim(&mut out);
    out
}

/// Division by a monic polynomial modulo `m`.
fn zdivrem_monic(a: &Zp, d: &Zp, m: &BigInt) -> (Zp, Zp) {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        return (vec![], zmod(a, m));
    }
    let mut rem = zmod(a, m);
    rem.resize(a.len(), BigInt::zero());
    let mut quot = vec![BigInt::zero(); a.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, b) in d.iter().enumerate() {
            rem[k + j] = (&rem[k + j] - &c * b).mod_floor(m);
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    ztrim(&mut rem);
    ztrim(&mut quot);
    (quot, rem)
}

fn content(a: &Zp) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(a: &Zp) -> Zp {
    let c = content(a);
    if c.is_zero() {
        return a.clone();
    }
    let sign = if a.last().unwrap().is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    a.iter().map(|x| x / &c * &sign).collect()
}

/// Exact quotient over `ℤ`, if `d` divides `a`.
fn zdiv_exact(a: &Zp, d: &Zp) -> Option<Zp> {
    let dd = d.len() - 1;
    if a.len() < d.len() {
        return if a.is_empty() { Some(vec![]) } else { None };
    }
    let lead = d.last().unwrap();
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - dd];
    for k in (0..quot.len()).rev() {
        let (c, r) = rem[k + dd].div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, b) in d.iter().enumerate() {
            rem[k + j] -= &c * b;
        }
        quot[k] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    ztrim(&mut quot);
    Some(quot)
}

fn to_fp_from_z(a: &Zp, p: u64) -> Fp {
    let pb = BigInt::from(p);
    let mut out: Fp = a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    trim(&mut out);
    out
}

fn z_from_fp(a: &Fp) -> Zp {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f ≡ g h`, `s g + t h ≡ 1 (mod m)` with `h` monic to the
/// same relations modulo `m²`.
fn hensel_step(f: &Zp, g: &Zp, h: &Zp, s: &Zp, t: &Zp, m: &BigInt) -> (Zp, Zp, Zp, Zp) {
    let mm = m * m;
    let e = zmod(&zsub(f, &zmul(g, h)), &mm);
    let (q, r) = zdivrem_monic(&zmod(&zmul(s, &e), &mm), h, &mm);
    let g2 = zmod(&zadd(&zadd(g, &zmul(t, &e)), &zmul(&q, g)), &mm);
    let h2 = zmod(&zadd(h, &r), &mm);
    let b = zmod(&zsub(&zadd(&zmul(s, &g2), &zmul(t, &h2)), &vec![BigInt::one()]), &mm);
    let (c, d) = zdivrem_monic(&zmod(&zmul(s, &b), &mm), &h2, &mm);
    let s2 = zmod(&zsub(s, &d), &mm);
    let t2 = zmod(&zsub(&zsub(t, &zmul(t, &b)), &zmul(&c, &g2)), &mm);
    (g2, h2, s2, t2)
}

/// Lifts the monic factors of `f mod p` (product times `lc f`) to monic factors mod `p^k`.
fn multi_lift(f: &Zp, factors: &[Fp], p: u64, pk: &BigInt) -> Vec<Zp> {
    let lc = f.last().unwrap().clone();
    if factors.len() == 1 {
        let inv = lc.modinv(pk).expect("leading coefficient invertible mod p^k");
        return vec![zmod(&f.iter().map(|c| c * &inv).collect(), pk)];
    }
    let mid = factors.len() / 2;
    let (a, b) = factors.split_at(mid);
    let h0 = a.iter().fold(vec![1u64], |acc, x| fp_mul(&acc, x, p));
    let lc_p = lc.mod_floor(&BigInt::from(p)).to_u64().unwrap();
    let g0 = b.iter().fold(vec![lc_p], |acc, x| fp_mul(&acc, x, p));
    let (s0, t0) = fp_ext_gcd(&g0, &h0, p);
    let (mut g, mut h, mut s, mut t) = (z_from_fp(&g0), z_from_fp(&h0), z_from_fp(&s0), z_from_fp(&t0));
    let mut m = BigInt::from(p);
    while &m < pk {
        let (g2, h2, s2, t2) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    let g = zmod(&g, pk);
    let h = zmod(&h, pk);
    let mut out = multi_lift(&h, a, p, pk);
    out.extend(multi_lift(&g, b, p, pk));
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Irreducible factors of a primitive squarefree integer polynomial with positive leading
/// coefficient.
fn factor_squarefree_z(g: &Zp) -> Vec<Zp> {
    let n = g.len() - 1;
    if n <= 1 {
        return vec![g.clone()];
    }
    let lc = g.last().unwrap().clone();
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 5 {
        p += 1;
        if !is_prime(p) || (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let gp = to_fp_from_z(g, p);
        if gp.len() != g.len() || fp_gcd(&gp, &fp_deriv(&gp, p), p).len() != 1 {
            continue;
        }
        tried += 1;
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        let facs: Vec<Fp> = factor_fp(&fp_monic(&gp, p), p, &mut rng)
            .into_iter()
            .map(|x| x.0)
            .collect();
        if best.as_ref().map(|b| facs.len() < b.1.len()).unwrap_or(true) {
            best = Some((p, facs));
        }
        if best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    let (p, facs) = best.unwrap();
    if facs.len() == 1 {
        return vec![g.clone()];
    }
    let max_c = g.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * max_c * 2;
    let mut pk = BigInt::from(p);
    while pk <= bound {
        pk *= p;
    }
    let lifted = multi_lift(g, &facs, p, &pk);
    let mut remaining: Vec<Zp> = lifted;
    let mut current = g.clone();
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        for subset in subsets(remaining.len(), s) {
            let lc_cur = current.last().unwrap().clone();
            let mut cand = vec![lc_cur];
            for &i in &subset {
                cand = zmul(&cand, &remaining[i]);
            }
            let cand = primitive(&zsym(&cand, &pk));
            if let Some(q) = zdiv_exact(&current, &cand) {
                out.push(cand);
                current = primitive(&q);
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|x| x.1)
                    .collect();
                continue 'outer;
            }
        }
        s += 1;
    }
    out.push(current);
    out
}

fn q_to_z(f: &UniPoly) -> Zp {
    let mut den = BigInt::one();
    for c in f.coeffs() {
        den = den.lcm(c.as_rational().unwrap().denom());
    }
    let v: Zp = f
        .coeffs()
        .iter()
        .map(|c| {
            let q = c.as_rational().unwrap();
            q.numer() * (&den / q.denom())
        })
        .collect();
    primitive(&v)
}

fn z_to_q_monic(a: &Zp) -> UniPoly {
    let lead = a.last().unwrap();
    UniPoly::new(
        FieldSpec::Rational,
        a.iter()
            .map(|c| Scalar::Rat(BigRational::new(c.clone(), lead.clone())))
            .collect(),
    )
}

fn factor_q(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let f = f.monic();
    let fd = f.derivative();
    let b = f.gcd(&fd);
    let mut c = f.exact_div(&b);
    let mut d = fd.exact_div(&b).sub(&c.derivative());
    let mut i = 1;
    while c.deg() > 0 {
        let a = c.gcd(&d);
        if a.deg() > 0 {
            for g in factor_squarefree_z(&q_to_z(&a)) {
                out.push((z_to_q_monic(&g), i));
            }
        }
        c = c.exact_div(&a);
        d = d.exact_div(&a).sub(&c.derivative());
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(f: &UniPoly) -> Factorization {
        let fac = factor(f).unwrap();
        assert_eq!(&fac.product(), f, "product mismatch for {f}");
        fac
    }

    #[test]
    fn small_prime_field_cases() {
        let f2 = FieldSpec::Prime(2);
        let fac = check(&UniPoly::from_i64(f2, &[0, 1, 1]));
        assert_eq!(fac.factors.len(), 2);
        let f3 = FieldSpec::Prime(3);
        let fac = check(&UniPoly::from_i64(f3, &[1, 0, 1]));
        assert_eq!(fac.factors, vec![(UniPoly::from_i64(f3, &[1, 0, 1]), 1)]);
    }

    #[test]
    fn rational_product_refactors() {
        let q = FieldSpec::Rational;
        let f = UniPoly::from_i64(q, &[2, 1])
            .mul(&UniPoly::from_i64(q, &[3, 1]))
            .mul(&UniPoly::from_i64(q, &[5, 0, 1]));
        let fac = check(&f);
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.factors.iter().any(|(g, _)| g == &UniPoly::from_i64(q, &[5, 0, 1])));
    }

    #[test]
    fn multiplicities_and_inseparable_powers() {
        let f5 = FieldSpec::Prime(5);
        let f = UniPoly::from_i64(f5, &[1, 1])
            .pow(7)
            .mul(&UniPoly::from_i64(f5, &[2, 0, 1]).pow(2));
        let fac = check(&f);
        assert!(fac.factors.contains(&(UniPoly::from_i64(f5, &[1, 1]), 7)));
        let q = FieldSpec::Rational;
        let f = UniPoly::from_i64(q, &[12, 1])
            .pow(3)
            .mul(&UniPoly::from_i64(q, &[-2, 0, 0, 1]))
            .scale(&q.from_ratio(3, 2));
        let fac = check(&f);
        assert_eq!(fac.factors.len(), 2);
    }

    #[test]
    fn swinnerton_dyer_style_irreducible() {
        let q = FieldSpec::Rational;
        let f = UniPoly::from_i64(q, &[1, 0, -10, 0, 1]);
        let fac = check(&f);
        assert_eq!(fac.factors.len(), 1);
        let g = UniPoly::from_i64(q, &[-1, 0, 0, 0, 1]);
        assert_eq!(check(&g).factors.len(), 3);
    }

    #[test]
    fn larger_prime_splitting() {
        let p = FieldSpec::Prime(2147483647);
        let f = UniPoly::from_i64(p, &[-3, 1])
            .mul(&UniPoly::from_i64(p, &[7, 1]))
            .mul(&UniPoly::from_i64(p, &[2, 3, 0, 1]));
        check(&f);
        let f2 = FieldSpec::Prime(2);
        let f = UniPoly::from_i64(f2, &[1, 1, 0, 0, 0, 0, 0, 0, 1]);
        check(&f);
    }
}

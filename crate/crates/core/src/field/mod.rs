//! Finite fields GF(p^e) for odd p.
//!
//! Elements are packed base-p integers: the coefficient of x^i of the
//! polynomial representative is the i-th base-p digit. Fields up to the
//! table cap carry exp/log tables; larger fields fall back to schoolbook
//! multiplication modulo the defining polynomial.

pub mod poly;

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};

use crate::arith::{checked_pow, factorize, is_prime};
use crate::error::{Error, Result};
pub use poly::Polynomial;

/// Default largest field that gets exp/log tables.
pub const DEFAULT_TABLE_CAP: u64 = 1 << 24;

/// q = p^e for an odd prime p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
    pub q: BigUint,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidArgument("exponent must be positive".into()));
        }
        Ok(PrimePower { p, e, q: crate::arith::big_pow(p, e) })
    }

    pub fn from_q(q: u64) -> Result<Self> {
        let (p, e) = crate::arith::odd_prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Coefficients over GF(p), lowest degree first.
    pub fn coeffs(self, f: &FieldTable) -> Vec<u64> {
        f.digits(self)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FieldConfig {
    pub table_cap: u64,
    /// Fail with `SizeCapExceeded` instead of falling back to polynomial mode.
    pub force_table: bool,
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig { table_cap: DEFAULT_TABLE_CAP, force_table: false }
    }
}

#[derive(Debug, Clone)]
pub struct FieldTable {
    base: PrimePower,
    degree: u32,
    order: u64,
    modulus: Vec<u64>,
    alpha: FieldElement,
    exp: Option<Vec<u32>>,
    log: Option<Vec<u32>>,
    add_table: Option<Vec<u8>>,
    p_pows: Vec<u64>,
}

pub fn build_field(p: u64, e_total: u32) -> Result<FieldTable> {
    build_field_with(p, e_total, &FieldConfig::default())
}

pub fn build_field_with(p: u64, e_total: u32, cfg: &FieldConfig) -> Result<FieldTable> {
    let base = PrimePower::new(p, 1)?;
    if e_total == 0 {
        return Err(Error::InvalidArgument("extension degree must be positive".into()));
    }
    let order = checked_pow(p, e_total)
        .filter(|q| *q < (1u64 << 62))
        .ok_or_else(|| Error::SizeCapExceeded { size: format!("{p}^{e_total}"), cap: 1 << 62 })?;
    let table = order <= cfg.table_cap;
    if cfg.force_table && !table {
        return Err(Error::SizeCapExceeded { size: order.to_string(), cap: cfg.table_cap });
    }
    let p_pows: Vec<u64> = (0..=e_total).map(|i| p.pow(i)).collect();
    let (modulus, alpha) = if e_total == 1 {
        let g = smallest_primitive_root(p);
        (vec![(p - g) % p, 1], FieldElement(g))
    } else {
        (smallest_primitive_poly(p, e_total, order), FieldElement(p))
    };
    let mut f =
        FieldTable { base, degree: e_total, order, modulus, alpha, exp: None, log: None, add_table: None, p_pows };
    if table {
        f.fill_tables();
    }
    if order <= 256 {
        let mut t = vec![0u8; (order * order) as usize];
        for a in 0..order {
            for b in 0..order {
                t[(a * order + b) as usize] = f.add_digitwise(FieldElement(a), FieldElement(b)).0 as u8;
            }
        }
        f.add_table = Some(t);
    }
    Ok(f)
}

fn smallest_primitive_root(p: u64) -> u64 {
    let rs: Vec<u64> = factorize(p - 1).into_iter().map(|(r, _)| r).collect();
    (2..p).find(|&g| rs.iter().all(|r| crate::arith::pow_mod(g, (p - 1) / r, p) != 1)).unwrap_or(1)
}

/// Smallest monic primitive polynomial of degree e, ordering candidates by
/// their coefficient strings read from c_0 upwards.
fn smallest_primitive_poly(p: u64, e: u32, order: u64) -> Vec<u64> {
    let group = order - 1;
    let rs: Vec<u64> = factorize(group).into_iter().map(|(r, _)| r).collect();
    for idx in 0..order {
        // c_0 is the most significant digit of idx.
        let mut f = vec![0u64; e as usize + 1];
        let mut t = idx;
        for i in (0..e as usize).rev() {
            f[i] = t % p;
            t /= p;
        }
        f[e as usize] = 1;
        if f[0] == 0 {
            continue;
        }
        let ring = ModRing { p, f: &f };
        let x = ring.x();
        if ring.pow(&x, group) != ring.one() {
            continue;
        }
        if rs.iter().all(|r| ring.pow(&x, group / r) != ring.one()) {
            return f;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

/// GF(p)[x]/(f) on digit vectors, used to certify candidate moduli.
struct ModRing<'a> {
    p: u64,
    f: &'a [u64],
}

impl ModRing<'_> {
    fn deg(&self) -> usize {
        self.f.len() - 1
    }
    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.deg()];
        v[0] = 1;
        v
    }
    fn x(&self) -> Vec<u64> {
        let mut v = vec![0; self.deg()];
        if self.deg() > 1 {
            v[1] = 1;
        } else {
            v[0] = (self.p - self.f[0]) % self.p;
        }
        v
    }
    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let e = self.deg();
        let p = self.p;
        let mut r = vec![0u64; 2 * e - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] = (r[i + j] + ai * bj) % p;
            }
        }
        for i in (e..r.len()).rev() {
            let c = r[i];
            if c == 0 {
                continue;
            }
            for j in 0..e {
                r[i - e + j] = (r[i - e + j] + (p - c) * self.f[j]) % p;
            }
            r[i] = 0;
        }
        r.truncate(e);
        r
    }
    fn pow(&self, a: &[u64], mut k: u64) -> Vec<u64> {
        let mut acc = self.one();
        let mut b = a.to_vec();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            k >>= 1;
        }
        acc
    }
}

impl FieldTable {
    fn fill_tables(&mut self) {
        let n = (self.order - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![u32::MAX; self.order as usize];
        let p = self.p();
        let e = self.degree as usize;
        let mut cur = vec![0u64; e];
        cur[0] = 1;
        let g = self.alpha.0;
        for (k, slot) in exp.iter_mut().enumerate() {
            let packed = self.pack_digits(&cur);
            *slot = packed as u32;
            log[packed as usize] = k as u32;
            if e == 1 {
                cur[0] = cur[0] * g % p;
            } else {
                let top = cur[e - 1];
                for i in (1..e).rev() {
                    cur[i] = (cur[i - 1] + (p - top) * self.modulus[i]) % p;
                }
                cur[0] = (p - top) * self.modulus[0] % p;
            }
        }
        self.exp = Some(exp);
        self.log = Some(log);
    }

    pub fn base(&self) -> &PrimePower {
        &self.base
    }
    pub fn p(&self) -> u64 {
        self.base.p
    }
    pub fn degree(&self) -> u32 {
        self.degree
    }
    /// Number of elements p^degree.
    pub fn order(&self) -> u64 {
        self.order
    }
    pub fn is_table_mode(&self) -> bool {
        self.exp.is_some()
    }
    /// Defining polynomial over GF(p), lowest degree first, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    /// The primitive element α (x modulo the defining polynomial).
    pub fn primitive(&self) -> FieldElement {
        self.alpha
    }

    pub fn digits(&self, a: FieldElement) -> Vec<u64> {
        let p = self.p();
        let mut v = a.0;
        (0..self.degree)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    fn pack_digits(&self, d: &[u64]) -> u64 {
        d.iter().zip(&self.p_pows).map(|(c, w)| c * w).sum()
    }

    pub fn from_digits(&self, d: &[u64]) -> FieldElement {
        let p = self.p();
        let reduced: Vec<u64> = d.iter().map(|c| c % p).collect();
        FieldElement(self.pack_digits(&reduced[..reduced.len().min(self.degree as usize)]))
    }

    /// Image of an integer under Z -> GF(p) -> GF(p^e).
    pub fn from_int(&self, c: i64) -> FieldElement {
        FieldElement(c.rem_euclid(self.p() as i64) as u64)
    }

    fn add_digitwise(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.p();
        let (mut x, mut y, mut out) = (a.0, b.0, 0u64);
        for w in &self.p_pows[..self.degree as usize] {
            out += ((x % p + y % p) % p) * w;
            x /= p;
            y /= p;
        }
        FieldElement(out)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.add_table {
            Some(t) => FieldElement(t[(a.0 * self.order + b.0) as usize] as u64),
            None => self.add_digitwise(a, b),
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.p();
        let mut x = a.0;
        let mut out = 0;
        for w in &self.p_pows[..self.degree as usize] {
            out += ((p - x % p) % p) * w;
            x /= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        if let (Some(exp), Some(log)) = (&self.exp, &self.log) {
            let n = self.order - 1;
            let s = (log[a.0 as usize] as u64 + log[b.0 as usize] as u64) % n;
            return FieldElement(exp[s as usize] as u64);
        }
        let ring = ModRing { p: self.p(), f: &self.modulus };
        FieldElement(self.pack_digits(&ring.mul(&self.digits(a), &self.digits(b))))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        if let (Some(exp), Some(log)) = (&self.exp, &self.log) {
            let n = (self.order - 1) as u128;
            let s = (log[a.0 as usize] as u128 * (k as u128 % n)) % n;
            return FieldElement(exp[s as usize] as u64);
        }
        let (mut acc, mut b, mut k) = (FieldElement::ONE, a, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return None;
        }
        Some(self.pow(a, self.order - 2))
    }

    /// α^k.
    pub fn alpha_pow(&self, k: u64) -> FieldElement {
        match &self.exp {
            Some(exp) => FieldElement(exp[(k % (self.order - 1)) as usize] as u64),
            None => self.pow(self.alpha, k % (self.order - 1)),
        }
    }

    /// Discrete logarithm to base α (table mode only).
    pub fn log(&self, a: FieldElement) -> Result<Option<u64>> {
        let log = self.log.as_ref().ok_or(Error::NoLogTable)?;
        Ok(if a.is_zero() { None } else { Some(log[a.0 as usize] as u64) })
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut ord = self.order - 1;
        for (r, _) in factorize(ord) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == FieldElement::ONE {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// α^{|f|-1} = 1 and α^{(|f|-1)/r} != 1 for every prime r dividing |f|-1.
    pub fn certify_primitive(&self) -> bool {
        let n = self.order - 1;
        self.pow(self.alpha, n) == FieldElement::ONE
            && factorize(n).iter().all(|(r, _)| self.pow(self.alpha, n / r) != FieldElement::ONE)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order).map(FieldElement)
    }

    fn subfield_degree(&self, sub_order: u64) -> Result<u32> {
        let err = || Error::NotASubfield { sub: sub_order, field: self.order.to_string() };
        let (p, s) = crate::arith::odd_prime_power(sub_order).ok_or_else(err)?;
        if p != self.p() || !self.degree.is_multiple_of(s) {
            return Err(err());
        }
        Ok(s)
    }
}

/// α^{(|f|-1)/N}, an element of multiplicative order exactly N.
pub fn nth_root_of_unity(f: &FieldTable, n: u64) -> Result<FieldElement> {
    let group = f.order() - 1;
    if n == 0 || !group.is_multiple_of(n) {
        return Err(Error::OrderNotDividing { n, group });
    }
    Ok(f.alpha_pow(group / n))
}

/// Embedding of GF(q) into a larger field of the same characteristic.
///
/// The small field is built on its own (smallest primitive polynomial) and
/// its primitive element is sent to the first power α^{t(Q-1)/(q-1)} that is
/// a root of the small field's defining polynomial, so the map is a ring
/// homomorphism compatible with both representations.
#[derive(Debug, Clone)]
pub struct Embedding {
    sub: FieldTable,
    to_big: Vec<FieldElement>,
    to_small: HashMap<FieldElement, FieldElement>,
}

impl Embedding {
    pub fn new(big: &FieldTable, sub_order: u64) -> Result<Self> {
        let s = big.subfield_degree(sub_order)?;
        let sub = build_field(big.p(), s)?;
        let step = (big.order() - 1) / (sub_order - 1);
        let modulus: Vec<FieldElement> = sub.modulus().iter().map(|&c| FieldElement(c)).collect();
        let is_root = |y: FieldElement| {
            modulus.iter().rev().fold(FieldElement::ZERO, |acc, &c| big.add(big.mul(acc, y), c)).is_zero()
        };
        let t = (1..sub_order)
            .find(|&t| is_root(big.alpha_pow(t * step)))
            .ok_or_else(|| Error::NotASubfield { sub: sub_order, field: big.order().to_string() })?;
        let gen = big.alpha_pow(t * step);
        let mut to_big = vec![FieldElement::ZERO; sub_order as usize];
        let mut pw = FieldElement::ONE;
        for j in 0..sub_order - 1 {
            to_big[sub.alpha_pow(j).0 as usize] = pw;
            pw = big.mul(pw, gen);
        }
        let to_small = to_big.iter().enumerate().map(|(i, &b)| (b, FieldElement(i as u64))).collect();
        Ok(Embedding { sub, to_big, to_small })
    }

    pub fn subfield(&self) -> &FieldTable {
        &self.sub
    }

    pub fn embed(&self, a: FieldElement) -> FieldElement {
        self.to_big[a.0 as usize]
    }

    /// Preimage of a big-field element, if it lies in the subfield.
    pub fn project(&self, b: FieldElement) -> Option<FieldElement> {
        self.to_small.get(&b).copied()
    }

    /// Minimal polynomial of `x` over the subfield: the product of X - x^{q^j}
    /// over the Frobenius orbit of x.
    pub fn minimal_polynomial(&self, big: &FieldTable, x: FieldElement) -> Result<Polynomial> {
        let q = self.sub.order();
        let mut orbit = vec![x];
        let mut y = big.pow(x, q);
        while y != x {
            orbit.push(y);
            y = big.pow(y, q);
        }
        let mut acc = vec![FieldElement::ONE];
        for r in orbit {
            let neg_r = big.neg(r);
            let mut next = vec![FieldElement::ZERO; acc.len() + 1];
            for (i, &c) in acc.iter().enumerate() {
                next[i + 1] = big.add(next[i + 1], c);
                next[i] = big.add(next[i], big.mul(c, neg_r));
            }
            acc = next;
        }
        let coeffs = acc
            .into_iter()
            .map(|c| {
                self.project(c)
                    .ok_or_else(|| Error::PreconditionViolated("minimal polynomial left the subfield".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(q, coeffs))
    }

    /// Evaluates a polynomial over the subfield at a point of the big field.
    pub fn eval(&self, big: &FieldTable, a: &Polynomial, x: FieldElement) -> FieldElement {
        a.coeffs().iter().rev().fold(FieldElement::ZERO, |acc, &c| big.add(big.mul(acc, x), self.embed(c)))
    }
}

/// Minimal polynomial of `x` over GF(sub_order).
pub fn minimal_polynomial(f: &FieldTable, x: FieldElement, sub_order: u64) -> Result<Polynomial> {
    Embedding::new(f, sub_order)?.minimal_polynomial(f, x)
}

/// Tr_{|f|/q}(x) = sum of x^{q^j}; the result is fixed by x -> x^q.
pub fn trace_to_subfield(f: &FieldTable, x: FieldElement, sub_order: u64) -> Result<FieldElement> {
    let s = f.subfield_degree(sub_order)?;
    let mut acc = FieldElement::ZERO;
    let mut y = x;
    for _ in 0..f.degree() / s {
        acc = f.add(acc, y);
        y = f.pow(y, sub_order);
    }
    Ok(acc)
}

/// Value of the quadratic Gauss sum over GF(p^m) for even m:
/// (-1)^{m-1} (sqrt(p*))^m with p* = (-1)^{(p-1)/2} p.
pub fn quadratic_gauss_sum(p: u64, m: u32) -> Result<BigInt> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if m % 2 == 1 || m == 0 {
        return Err(Error::OddExtensionDegree(m));
    }
    let mag = BigInt::from(crate::arith::big_pow(p, m / 2));
    let mut sign = if (m - 1) % 2 == 1 { -1 } else { 1 };
    if p % 4 == 3 && (m / 2) % 2 == 1 {
        sign = -sign;
    }
    Ok(if sign > 0 { mag } else { -mag })
}

/// Dense add table over GF(q), q <= 256, indexed `a * q + b`.
pub fn small_add_table(f: &FieldTable) -> Option<&[u8]> {
    f.add_table.as_deref()
}

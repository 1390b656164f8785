//! Dense polynomials over a finite field, lowest degree first.

use super::{FieldElement, FieldTable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field_order: u64,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    /// Builds a polynomial, trimming zero leading coefficients.
    pub fn new(field_order: u64, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { field_order, coeffs }
    }

    pub fn zero(field_order: u64) -> Self {
        Polynomial { field_order, coeffs: Vec::new() }
    }

    pub fn one(field_order: u64) -> Self {
        Polynomial { field_order, coeffs: vec![FieldElement::ONE] }
    }

    /// x^n - unit.
    pub fn binomial(f: &FieldTable, n: usize, unit: FieldElement) -> Self {
        let mut c = vec![FieldElement::ZERO; n + 1];
        c[0] = f.neg(unit);
        c[n] = FieldElement::ONE;
        Polynomial::new(f.order(), c)
    }

    pub fn field_order(&self) -> u64 {
        self.field_order
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(FieldElement::ONE)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

fn check(f: &FieldTable, a: &Polynomial) -> Result<()> {
    if a.field_order != f.order() {
        return Err(Error::FieldMismatch(a.field_order, f.order()));
    }
    Ok(())
}

pub fn add(f: &FieldTable, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    check(f, a)?;
    check(f, b)?;
    let n = a.coeffs.len().max(b.coeffs.len());
    let c = (0..n).map(|i| f.add(a.coeff(i), b.coeff(i))).collect();
    Ok(Polynomial::new(f.order(), c))
}

pub fn sub(f: &FieldTable, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    add(f, a, &scale(f, b, f.neg(FieldElement::ONE))?)
}

pub fn scale(f: &FieldTable, a: &Polynomial, s: FieldElement) -> Result<Polynomial> {
    check(f, a)?;
    Ok(Polynomial::new(f.order(), a.coeffs.iter().map(|&c| f.mul(c, s)).collect()))
}

pub fn mul(f: &FieldTable, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    check(f, a)?;
    check(f, b)?;
    if a.is_zero() || b.is_zero() {
        return Ok(Polynomial::zero(f.order()));
    }
    let mut c = vec![FieldElement::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate() {
            c[i + j] = f.add(c[i + j], f.mul(x, y));
        }
    }
    Ok(Polynomial::new(f.order(), c))
}

/// Quotient and remainder with deg(remainder) < deg(divisor).
pub fn divmod(f: &FieldTable, a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    check(f, a)?;
    check(f, b)?;
    let db = b.degree().ok_or(Error::DivisionByZeroPolynomial)?;
    let inv_lead = f.inv(b.coeffs[db]).expect("leading coefficient is nonzero");
    let mut r = a.coeffs.clone();
    if r.len() <= db {
        return Ok((Polynomial::zero(f.order()), a.clone()));
    }
    let mut q = vec![FieldElement::ZERO; r.len() - db];
    for i in (db..r.len()).rev() {
        let c = r[i];
        if c.is_zero() {
            continue;
        }
        let t = f.mul(c, inv_lead);
        q[i - db] = t;
        let nt = f.neg(t);
        for (j, &bj) in b.coeffs.iter().enumerate() {
            r[i - db + j] = f.add(r[i - db + j], f.mul(nt, bj));
        }
    }
    r.truncate(db);
    Ok((Polynomial::new(f.order(), q), Polynomial::new(f.order(), r)))
}

pub fn monic(f: &FieldTable, a: &Polynomial) -> Result<Polynomial> {
    match a.leading() {
        None => Ok(a.clone()),
        Some(l) => scale(f, a, f.inv(l).expect("nonzero")),
    }
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
pub fn gcd(f: &FieldTable, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = divmod(f, &x, &y)?;
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// x^{deg a} a(1/x), normalized to be monic.
pub fn reciprocal(f: &FieldTable, a: &Polynomial) -> Result<Polynomial> {
    check(f, a)?;
    let mut c = a.coeffs.clone();
    c.reverse();
    monic(f, &Polynomial::new(f.order(), c))
}

pub fn eval(f: &FieldTable, a: &Polynomial, x: FieldElement) -> Result<FieldElement> {
    check(f, a)?;
    Ok(a.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c)))
}

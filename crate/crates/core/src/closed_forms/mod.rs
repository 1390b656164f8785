//! Closed-form dimensions, distances and weights of the BCH families with
//! lengths (q^m ∓ 1)/4 and (q^m - 1)/2, in exact rational arithmetic.
//!
//! Each formula is identified by a short id (T1..T13) used on the command
//! line and in conformance CSV files. Case ranges are encoded literally:
//! a δ that falls in no listed interval yields `OutOfRange`, never a guess.

pub mod conformance;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::arith::{big_pow, binomial, odd_prime_power};
use crate::cyclotomic::{largest_leaders, LeaderFamily};
use crate::error::{Error, Result};

pub use conformance::{cells_to_csv, run_conformance, CellVerdict, ConformanceCell, ConformanceOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FormulaId {
    /// Dimension, negacyclic n = (q^m-1)/4, m even, q ≡ 1 (mod 4) or 4 | m.
    T1,
    /// Dimension, negacyclic n = (q^m-1)/4, m even, q ≡ 3 (mod 4).
    T2,
    /// Dimension, cyclic n = (q^m-1)/2, m odd.
    T3,
    /// Dimension, negacyclic n = (q^m-1)/4, m odd, q ≡ 1 (mod 4).
    T4,
    /// Distance of the δ = 2 code, n = (q^m-1)/4.
    T5,
    /// Distance of the δ = 3 code, n = (q^m-1)/4.
    T6,
    /// Small-dimension codes, q ≡ 1 (mod 4), n = (q^m-1)/4.
    T7,
    /// Two-weight codes, q ≡ 3 (mod 4), m ≡ 2 (mod 4), n = (q^m-1)/4.
    T8,
    /// One-weight codes, q ≡ 3 (mod 4), m ≡ 0 (mod 4), n = (q^m-1)/4.
    T9,
    /// One-weight codes, q ≡ 1 (mod 4), m even, n = (q^m-1)/4.
    T10,
    /// Dimension, negacyclic n = (q^m+1)/4, m odd, q ≡ 3 (mod 4).
    T11,
    /// Distance of the δ = 2 code, n = (q^m+1)/4.
    T12,
    /// Small-dimension codes, n = (q^m+1)/4.
    T13,
}

impl FormulaId {
    pub const ALL: [FormulaId; 13] = [
        FormulaId::T1,
        FormulaId::T2,
        FormulaId::T3,
        FormulaId::T4,
        FormulaId::T5,
        FormulaId::T6,
        FormulaId::T7,
        FormulaId::T8,
        FormulaId::T9,
        FormulaId::T10,
        FormulaId::T11,
        FormulaId::T12,
        FormulaId::T13,
    ];

    pub fn is_dimension(self) -> bool {
        matches!(self, FormulaId::T1 | FormulaId::T2 | FormulaId::T3 | FormulaId::T4 | FormulaId::T11)
    }

    pub fn is_distance(self) -> bool {
        matches!(self, FormulaId::T5 | FormulaId::T6 | FormulaId::T12)
    }

    pub fn is_small_dimension(self) -> bool {
        !self.is_dimension() && !self.is_distance()
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for FormulaId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown formula id {s}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FormulaResult<T> {
    Value(T),
    OutOfRange(String),
}

impl<T> FormulaResult<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            FormulaResult::Value(v) => Some(v),
            FormulaResult::OutOfRange(_) => None,
        }
    }
}

/// Exact rational with integer-literal arithmetic, for transcribing case
/// intervals without noise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Q(BigRational);

macro_rules! q_ops {
    ($tr:ident, $f:ident) => {
        impl std::ops::$tr<Q> for Q {
            type Output = Q;
            fn $f(self, o: Q) -> Q {
                Q(self.0.$f(o.0))
            }
        }
        impl std::ops::$tr<&Q> for Q {
            type Output = Q;
            fn $f(self, o: &Q) -> Q {
                Q(self.0.$f(&o.0))
            }
        }
        impl std::ops::$tr<Q> for &Q {
            type Output = Q;
            fn $f(self, o: Q) -> Q {
                Q((&self.0).$f(o.0))
            }
        }
        impl std::ops::$tr<&Q> for &Q {
            type Output = Q;
            fn $f(self, o: &Q) -> Q {
                Q((&self.0).$f(&o.0))
            }
        }
        impl std::ops::$tr<i64> for Q {
            type Output = Q;
            fn $f(self, o: i64) -> Q {
                self.$f(int(o))
            }
        }
        impl std::ops::$tr<i64> for &Q {
            type Output = Q;
            fn $f(self, o: i64) -> Q {
                self.$f(int(o))
            }
        }
    };
}
q_ops!(Add, add);
q_ops!(Sub, sub);
q_ops!(Mul, mul);

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn int(x: impl Into<BigInt>) -> Q {
    Q(BigRational::from_integer(x.into()))
}

fn frac(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Q {
    Q(BigRational::new(a.into(), b.into()))
}

fn inr(lo: &Q, d: &Q, hi: &Q) -> bool {
    lo <= d && d <= hi
}

fn bpow(q: u64, e: u32) -> BigInt {
    BigInt::from(big_pow(q, e))
}

fn hyp(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::HypothesisViolated(msg()))
    }
}

fn check_q(q: u64) -> Result<()> {
    hyp(odd_prime_power(q).is_some(), || format!("q = {q} is not an odd prime power"))
}

/// ⌈(2δ-3)(q-1)/(2q)⌉: odd designed exponents 1, 3, ..., 2δ-3 not divisible by q.
pub fn gamma_count(delta: u64, q: u64) -> u64 {
    let num = (2 * delta as u128 - 3) * (q as u128 - 1);
    num.div_ceil(2 * q as u128) as u64
}

/// ⌈(δ-1)(1 - 1/q)⌉: exponents 1..δ-1 not divisible by q.
pub fn epsilon_count(delta: u64, q: u64) -> u64 {
    ((delta as u128 - 1) * (q as u128 - 1)).div_ceil(q as u128) as u64
}

fn finish(v: Q) -> FormulaResult<BigInt> {
    if v.0.is_integer() {
        FormulaResult::Value(v.0.to_integer())
    } else {
        FormulaResult::OutOfRange(format!("non-integral case value {v}"))
    }
}

fn oor() -> FormulaResult<BigInt> {
    FormulaResult::OutOfRange("δ lies in no case interval".into())
}

/// Length of the code a formula talks about.
pub fn formula_length(id: FormulaId, q: u64, m: u32) -> BigUint {
    let qm = big_pow(q, m);
    match id {
        FormulaId::T3 => (qm - 1u32) / 2u32,
        FormulaId::T11 | FormulaId::T12 | FormulaId::T13 => (qm + 1u32) / 4u32,
        _ => (qm - 1u32) / 4u32,
    }
}

/// Whether the code is cyclic (only T3) rather than negacyclic.
pub fn formula_is_cyclic(id: FormulaId) -> bool {
    id == FormulaId::T3
}

pub fn check_hypotheses(id: FormulaId, q: u64, m: u32) -> Result<()> {
    check_q(q)?;
    let r4 = q % 4;
    let show = || format!("{id} does not cover q = {q}, m = {m}");
    match id {
        FormulaId::T1 => hyp(m >= 4 && m.is_multiple_of(2) && (r4 == 1 || m.is_multiple_of(4)), show),
        FormulaId::T2 => hyp(m >= 4 && m.is_multiple_of(2) && r4 == 3, show),
        FormulaId::T3 => hyp(m >= 5 && m % 2 == 1, show),
        FormulaId::T4 => hyp(m >= 5 && m % 2 == 1 && r4 == 1, show),
        FormulaId::T5 | FormulaId::T6 => hyp(m >= 3 && (r4 == 1 || m.is_multiple_of(2)), show),
        FormulaId::T7 => hyp(m >= 2 && r4 == 1, show),
        FormulaId::T8 => hyp(r4 == 3 && m % 4 == 2 && m >= 10, show),
        FormulaId::T9 => hyp(r4 == 3 && m.is_multiple_of(4) && m >= 6, show),
        FormulaId::T10 => hyp(r4 == 1 && m.is_multiple_of(2) && m >= 2, show),
        FormulaId::T11 => hyp(r4 == 3 && m % 2 == 1 && m >= 5, show),
        FormulaId::T12 => hyp(r4 == 3 && m % 2 == 1 && m >= 3, show),
        FormulaId::T13 => hyp(r4 == 3 && m % 2 == 1 && m >= 5, show),
    }
}

/// Largest δ covered by a dimension formula.
pub fn max_delta(id: FormulaId, q: u64, m: u32) -> Result<BigInt> {
    check_hypotheses(id, q, m)?;
    let h = m / 2;
    let qi = BigInt::from(q);
    Ok(match id {
        FormulaId::T1 | FormulaId::T2 => (bpow(q, h + 1) + 5) / 4,
        FormulaId::T3 if q == 3 => (bpow(q, h + 2) + 1) / 2,
        FormulaId::T3 => bpow(q, h + 1) * 2 - bpow(q, h) + 1,
        FormulaId::T4 => (bpow(q, h + 1) * 3 - bpow(q, h) * 2 + 3) / 4,
        FormulaId::T11 => (bpow(q, h + 1) - qi) / 2 + 1,
        _ => return Err(Error::InvalidArgument(format!("{id} is not a dimension formula"))),
    })
}

/// Dimension k of the code with designed distance δ, per case formula.
pub fn dim_formula(id: FormulaId, q: u64, m: u32, delta: u64) -> Result<FormulaResult<BigInt>> {
    check_hypotheses(id, q, m)?;
    if delta < 2 {
        return Ok(FormulaResult::OutOfRange("δ < 2".into()));
    }
    Ok(match id {
        FormulaId::T1 => dim_t1(q, m, delta),
        FormulaId::T2 => dim_t2(q, m, delta),
        FormulaId::T3 => dim_t3(q, m, delta),
        FormulaId::T4 => dim_t4(q, m, delta),
        FormulaId::T11 => dim_t11(q, m, delta),
        _ => return Err(Error::InvalidArgument(format!("{id} is not a dimension formula"))),
    })
}

fn dim_t1(q: u64, m: u32, delta: u64) -> FormulaResult<BigInt> {
    let h = m / 2;
    let bq = bpow(q, h);
    let qq = int(bq.clone());
    let n = int((bpow(q, m) - 1) / 4);
    let mm = int(m);
    let hh = int(h);
    let g = int(gamma_count(delta, q));
    let d = int(delta);
    let qi = q as i64;
    if d > frac(bpow(q, h + 1) + 5, 4) {
        return oor();
    }
    let base = &n - &mm * &g;
    if inr(&int(2), &d, &(frac(&bq - 1, 4) + 1)) {
        return finish(base);
    }
    if inr(&(frac(&bq - 1, 4) + 2), &d, &(frac((&bq + 3) * 3, 4) - 1)) {
        return finish(base + &hh);
    }
    if inr(&frac((&bq + 3) * 3, 4), &d, &(&qq + 1)) {
        return finish(base + &mm);
    }
    if q == 5 && inr(&(&qq + 2), &d, &frac(&bq * qi + 5, 4)) {
        return finish(base + &mm * 2);
    }
    if q > 5 {
        let tmax = (qi - 3 + 3) / 4;
        for t in 1..tmax {
            let tq = int(t);
            if inr(&(&qq + 2), &d, &((&tq + 1) * &qq + 1)) {
                let tq1 = &tq * (&qq + 1);
                if inr(&(&tq1 + 1), &d, &(&tq * &qq + frac(&bq + 3, 4))) {
                    return finish(&n - &mm * (&g - int(2 * t * t)));
                }
                if inr(&(&tq1 + frac(&bq + 7, 4)), &d, &(&tq * &qq + frac(&bq + 3, 2))) {
                    return finish(&n - &mm * (&g - int(2 * t * t + t)) + &hh);
                }
                if inr(&(&tq1 + frac(&bq + 3, 2)), &d, &(&tq * &qq + frac(&bq * 3 + 5, 4))) {
                    return finish(&n - &mm * (&g - int(2 * (t * t + t))) + &hh);
                }
                if inr(&(&tq1 + frac(&bq * 3 + 1, 2) + 2), &d, &((&tq + 1) * &qq + 1)) {
                    return finish(&n - &mm * (&g - int(2 * t * t + 3 * t + 1)));
                }
            }
        }
        let top = frac(&bq * qi + 5, 4);
        if q % 4 == 1 {
            let lo = frac(qi - 1, 4) * &qq + 2;
            if inr(&lo, &d, &top) {
                if inr(&lo, &d, &(frac(qi - 1, 4) * (&qq + 1) + 1)) {
                    let c = &d - frac(qi - 1, 4) * &qq + frac((qi + 1) * (qi - 5), 8);
                    return finish(&n - &mm * (&g - c));
                }
                if inr(&(frac(qi - 1, 4) * (&qq + 1) + 2), &d, &top) {
                    return finish(&n - &mm * (&g - frac((qi - 1) * (qi - 1), 8)));
                }
            }
        }
        if q % 4 == 3 && m.is_multiple_of(4) && inr(&frac(&bq * (qi - 3) + qi + 1, 4), &d, &top) {
            if inr(&frac(&bq * (qi - 3) + qi + 1, 4), &d, &frac(&bq * (qi - 2) + 3, 4)) {
                return finish(&n - &mm * (&g - frac((qi - 3) * (qi - 3), 8)));
            }
            if inr(&(frac(&bq * (qi - 2) + qi, 4) + 1), &d, &(frac(&bq * (qi - 1) + 2, 4) + 1)) {
                return finish(&n - &mm * (&g - frac((qi - 1) * (qi - 3), 8)) + &hh);
            }
            if inr(&frac(&bq * (qi - 1) + qi + 3, 4), &d, &top) {
                return finish(&n - &mm * (&g - frac((qi - 1) * (qi - 1), 8)));
            }
        }
    }
    oor()
}

fn dim_t2(q: u64, m: u32, delta: u64) -> FormulaResult<BigInt> {
    let h = m / 2;
    let bq = bpow(q, h);
    let qq = int(bq.clone());
    let n = int((bpow(q, m) - 1) / 4);
    let mm = int(m);
    let g = int(gamma_count(delta, q));
    let d = int(delta);
    let qi = q as i64;
    let base = &n - &mm * &g;
    let top = frac(&bq * qi + 5, 4);
    if q == 3 && inr(&int(2), &d, &top) {
        if m % 4 == 2 || inr(&int(2), &d, &frac(&bq + 3, 4)) {
            return finish(base);
        }
        return finish(base + int(h));
    }
    if q > 3 && m % 4 == 2 {
        if inr(&int(2), &d, &frac((&bq + 1) * 3, 4)) {
            return finish(base);
        }
        if inr(&(frac((&bq + 1) * 3, 4) + 1), &d, &top) {
            let tlast = frac(qi - 3, 4);
            for t in 1..=(qi - 3) / 4 {
                let tq = int(t);
                let tq1 = &tq * (&qq + 1);
                if inr(&(&tq1 - frac(&bq - 3, 4)), &d, &(&tq * &qq + 1)) {
                    return finish(&n - &mm * (&g - int(2 * t * t - t)));
                }
                if inr(&(&tq1 + 1), &d, &(&tq * &qq + frac(&bq + 5, 4))) {
                    return finish(&n - &mm * (&g - int(2 * t * t)));
                }
                if inr(&(&tq1 + frac(&bq + 5, 4)), &d, &(&tq * &qq + frac(&bq + 3, 2))) {
                    return finish(&n - &mm * (&g - int(2 * t * t + t)));
                }
                if tq != tlast && inr(&(&tq1 + frac(&bq + 3, 2)), &d, &(&tq * &qq + frac((&bq + 1) * 3, 4))) {
                    return finish(&n - &mm * (&g - int(2 * (t * t + t))));
                }
            }
            if inr(&(frac(&bq * (qi - 1), 4) + frac(qi + 3, 4)), &d, &top) {
                return finish(&n - &mm * (&g - frac((qi - 3) * (qi + 1), 8)));
            }
        }
    }
    oor()
}

fn dim_t3(q: u64, m: u32, delta: u64) -> FormulaResult<BigInt> {
    let h = (m - 1) / 2;
    let bq = bpow(q, h);
    let qq = int(bq.clone());
    let n = int((bpow(q, m) - 1) / 2);
    let mm = int(m);
    let e = int(epsilon_count(delta, q));
    let d = int(delta);
    let qi = q as i64;
    let q_q = int(&bq * qi);
    let half = frac(qi - 1, 2);
    let first_hi = &q_q + &half * &qq + 1;
    if inr(&int(2), &d, &first_hi) {
        let a = frac(&bq * qi + 1, 2);
        if inr(&int(2), &d, &a) {
            return finish(&n - &mm * &e);
        }
        if inr(&frac(&bq * qi + qi, 2), &d, &(&a + &qq)) {
            return finish(&n - &mm * (&e - &half));
        }
        for t in 1..=(qi - 3) / 2 {
            let tq = int(t);
            if inr(&(&a + &tq * &qq + 1), &d, &(&a + (&tq + 1) * &qq)) {
                return finish(&n - &mm * (&e - &half - &tq));
            }
        }
        if inr(&(&q_q - frac(&bq - 1, 2) + 1), &d, &(&q_q + 1)) {
            return finish(&n - &mm * (&e - int(qi - 1)));
        }
        if inr(&(&q_q + qi), &d, &(&q_q + frac(&bq + 1, 2))) {
            return finish(&n - &mm * (&e - int(2 * (qi - 1))));
        }
        for t in 0..=(qi - 3) / 2 {
            let tq = int(t);
            if inr(&(&q_q + frac(&bq + 1, 2) + &tq * &qq + 1), &d, &(&q_q + (&tq + 1) * &qq + 1)) {
                return finish(&n - &mm * (&e - int(2 * (qi - 1)) - int(2 * t + 1)));
            }
            if t != 0 && inr(&(&q_q + &tq * &qq + 2), &d, &(&q_q + frac(&bq + 1, 2) + &tq * &qq)) {
                return finish(&n - &mm * (&e - int(2 * (qi - 1)) - int(2 * t)));
            }
        }
        return oor();
    }
    let lo = &q_q + &half * &qq + 2;
    if q == 3 && inr(&lo, &d, &frac(&bq * (qi * qi) + 1, 2)) {
        return finish(&n - &mm * (&e - 6));
    }
    if q >= 5 && inr(&lo, &d, &(&q_q * 2 - &qq + 1)) {
        if inr(&lo, &d, &(&q_q + frac(&bq * qi + 1, 2))) {
            return finish(&n - &mm * (&e - int(3 * (qi - 1))));
        }
        if inr(&(&q_q + frac(&bq * qi + qi, 2)), &d, &(&q_q + frac(&bq * (qi + 1), 2) + 1)) {
            return finish(&n - &mm * (&e - frac(7 * (qi - 1), 2)));
        }
        for i in (qi + 1) / 2..qi - 1 {
            if inr(&(&q_q + int(i) * &qq + 2), &d, &(&q_q + int(i + 1) * &qq + 1)) {
                return finish(&n - &mm * (&e - int(3 * (qi - 1)) - int(i)));
            }
        }
    }
    oor()
}

fn dim_t4(q: u64, m: u32, delta: u64) -> FormulaResult<BigInt> {
    let h = (m - 1) / 2;
    let bq = bpow(q, h);
    let qq = int(bq.clone());
    let n = int((bpow(q, m) - 1) / 4);
    let mm = int(m);
    let g = int(gamma_count(delta, q));
    let d = int(delta);
    let qi = q as i64;
    let bqq = &bq * qi;
    let quarter = frac(qi - 1, 4);
    if inr(&int(2), &d, &frac(&bqq + 3, 4)) {
        return finish(&n - &mm * &g);
    }
    if inr(&frac(&bqq + qi + 2, 4), &d, &(frac(&bqq + 3, 4) + &qq)) {
        return finish(&n - &mm * (&g - &quarter));
    }
    for t in 1..=(qi - 1) / 4 {
        let tq = int(t);
        if tq != quarter && inr(&(frac(&bqq + 7, 4) + &tq * &qq), &d, &(frac(&bqq + 3, 4) + (&tq + 1) * &qq)) {
            return finish(&n - &mm * (&g - &quarter - &tq));
        }
    }
    if inr(&(frac(&bqq * 2 - &bq + 3, 4) + 1), &d, &frac(&bqq + 3, 2)) {
        return finish(&n - &mm * (&g - frac(qi - 1, 2)));
    }
    if inr(&(frac(&bqq + qi, 2) + 1), &d, &(frac(&bqq + &bq, 2) + 1)) {
        return finish(&n - &mm * (&g - int(qi - 1)));
    }
    for t in 1..=(qi - 1) / 4 {
        let tq = int(t);
        if inr(&(frac(&bqq - &bq, 2) + &tq * &qq + 2), &d, &(frac(&bqq * 2 - &bq + 3, 4) + &tq * &qq)) {
            return finish(&n - &mm * (&g - int(qi + 2 * t - 2)));
        }
        if tq != quarter && inr(&(frac(&bqq * 2 - &bq + 7, 4) + &tq * &qq), &d, &(frac(&bqq + &bq, 2) + &tq * &qq + 1))
        {
            return finish(&n - &mm * (&g - int(qi + 2 * t - 1)));
        }
    }
    oor()
}

/// Evaluated at n = (q^m+1)/4; see the decisions ledger for the length.
fn dim_t11(q: u64, m: u32, delta: u64) -> FormulaResult<BigInt> {
    let h = (m - 1) / 2;
    let bq = bpow(q, h);
    let qq = int(bq.clone());
    let n = int((bpow(q, m) + 1) / 4);
    let mm2 = int(2 * m);
    let g = int(gamma_count(delta, q));
    let d = int(delta);
    let qi = q as i64;
    let bqq = &bq * qi;
    let half = frac(qi - 1, 2);
    let ts: Vec<i64> = if q == 3 { vec![0] } else { (1..=(qi - 3) / 4).collect() };
    // interval endpoints shift by 1/2 between even and odd h
    let (a_hi, b_lo, b_hi, c_lo, c_hi, e_lo, e_hi, last_lo) = if h.is_multiple_of(2) {
        (
            frac(&bqq - qi, 4) + 1,
            frac(&bqq + qi + 2, 4),
            frac(&bqq + &bq * 2 + 3, 4),
            frac(&bqq - &bq * 2 + 3, 4) + 1,
            frac(&bqq + 1, 4),
            frac(&bqq + 5, 4),
            frac(&bqq + &bq * 2 + 3, 4),
            frac(&bqq * 2 - &bq + 3, 4) + 1,
        )
    } else {
        (
            frac(&bqq - qi + 2, 4) + 1,
            frac(&bqq + qi, 4) + 1,
            frac(&bqq + &bq * 2 + 1, 4),
            frac(&bqq - &bq * 2 + 1, 4) + 1,
            frac(&bqq + 3, 4),
            frac(&bqq - 1, 4) + 2,
            frac(&bqq + &bq * 2 + 1, 4),
            frac(&bqq * 2 - &bq + 1, 4) + 1,
        )
    };
    if inr(&int(2), &d, &a_hi) {
        return finish(&n - &mm2 * &g);
    }
    if inr(&b_lo, &d, &b_hi) {
        return finish(&n - &mm2 * (&g - &half));
    }
    for t in ts {
        let tq = int(t);
        if inr(&(&c_lo + &tq * &qq), &d, &(&c_hi + &tq * &qq)) {
            return finish(&n - &mm2 * (&g - &half - int(2 * t - 1)));
        }
        if inr(&(&e_lo + &tq * &qq), &d, &(&e_hi + &tq * &qq)) {
            return finish(&n - &mm2 * (&g - &half - int(2 * t)));
        }
    }
    if inr(&last_lo, &d, &(frac(&bqq - qi, 2) + 1)) {
        return finish(&n - &mm2 * (&g - int(qi - 1)));
    }
    oor()
}

/// Distance lower bound stated next to a dimension formula. The minus-length
/// negacyclic codes get δ + 1 when δ ≡ (q+1)/2 (mod q); the plus-length codes
/// get 2δ + 1 or 2δ - 1 on the same condition; the cyclic codes get δ.
pub fn dimension_distance_lower(id: FormulaId, q: u64, delta: u64) -> u64 {
    let special = delta % q == q.div_ceil(2);
    match id {
        FormulaId::T3 => delta,
        FormulaId::T11 if special => 2 * delta + 1,
        FormulaId::T11 => 2 * delta - 1,
        _ if special => delta + 1,
        _ => delta,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DistanceClaim {
    Exact(u64),
    /// Inclusive range; never collapsed to one endpoint.
    Range(u64, u64),
}

impl DistanceClaim {
    pub fn contains(&self, d: u64) -> bool {
        match *self {
            DistanceClaim::Exact(x) => d == x,
            DistanceClaim::Range(lo, hi) => lo <= d && d <= hi,
        }
    }
}

impl fmt::Display for DistanceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistanceClaim::Exact(d) => write!(f, "{d}"),
            DistanceClaim::Range(lo, hi) => write!(f, "{lo}..{hi}"),
        }
    }
}

/// Designed distance used by a distance formula: 3 for T6, else 2.
pub fn distance_formula_delta(id: FormulaId) -> u64 {
    if id == FormulaId::T6 {
        3
    } else {
        2
    }
}

pub fn small_delta_distance(id: FormulaId, q: u64, m: u32) -> Result<FormulaResult<DistanceClaim>> {
    check_hypotheses(id, q, m)?;
    let odd_m = m % 2 == 1;
    let v = match id {
        FormulaId::T5 => match q {
            3 => DistanceClaim::Exact(3),
            5 if odd_m => DistanceClaim::Exact(3),
            _ => DistanceClaim::Exact(2),
        },
        FormulaId::T6 => match q {
            3 => return Ok(FormulaResult::OutOfRange("no case covers q = 3".into())),
            5 if odd_m => DistanceClaim::Range(4, 5),
            5 => DistanceClaim::Exact(4),
            9 if odd_m => DistanceClaim::Range(3, 4),
            _ => DistanceClaim::Exact(3),
        },
        FormulaId::T12 => match q {
            3 => DistanceClaim::Range(5, 6),
            7 => DistanceClaim::Range(3, 4),
            _ => DistanceClaim::Exact(3),
        },
        _ => return Err(Error::InvalidArgument(format!("{id} is not a distance formula"))),
    };
    Ok(FormulaResult::Value(v))
}

/// Dimension stated with the distance formulas: n - m (δ = 2, minus lengths),
/// n - 2m (δ = 3, and the δ = 2 plus-length codes).
pub fn small_delta_dimension(id: FormulaId, q: u64, m: u32) -> Result<BigUint> {
    check_hypotheses(id, q, m)?;
    let n = formula_length(id, q, m);
    Ok(match id {
        FormulaId::T5 => n - m,
        _ => n - 2 * m,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallDimParams {
    pub n: BigUint,
    pub k: u64,
    pub d_lower: BigUint,
    /// Window of δ giving this code, inclusive.
    pub window: (BigUint, BigUint),
    /// Nonzero weight of a one-weight code.
    pub one_weight: Option<BigUint>,
    /// (weight, frequency) pairs of the two-weight distribution, when stated.
    pub two_weights: Option<Vec<(BigUint, BigUint)>>,
}

/// (q-1)(q^{m-1} + q^{(m-2)/2})/4
pub fn one_weight_value(q: u64, m: u32) -> BigUint {
    (big_pow(q, m - 1) + big_pow(q, (m - 2) / 2)) * (q - 1) / 4u32
}

/// Two weights (3^{m-1} ∓ 3^{(m-2)/2})/2, each with frequency (3^m-1)/2.
pub fn two_weight_table(m: u32) -> Vec<(BigUint, BigUint)> {
    let a = big_pow(3, m - 1);
    let b = big_pow(3, (m - 2) / 2);
    let f = (big_pow(3, m) - 1u32) / 2u32;
    vec![((&a - &b) / 2u32, f.clone()), ((a + b) / 2u32, f)]
}

/// The largest odd leaders δ_1 > δ_2 > ... used by the small-dimension
/// formulas, with coset sizes.
pub fn window_leaders(id: FormulaId, q: u64, m: u32) -> Result<Vec<(BigUint, u64)>> {
    check_hypotheses(id, q, m)?;
    let family = if id == FormulaId::T13 { LeaderFamily::OddQp1Half } else { LeaderFamily::OddQm1Half };
    largest_leaders(family, q, m).map(|l| l.values).map_err(|e| Error::HypothesisViolated(e.to_string()))
}

/// Parameters of the codes whose δ lies in a window
/// (δ_{i+1}+3)/2 <= δ <= (δ_i+1)/2 below the largest odd leaders.
pub fn small_dim_params(id: FormulaId, q: u64, m: u32, delta: u64) -> Result<FormulaResult<SmallDimParams>> {
    if !id.is_small_dimension() {
        return Err(Error::InvalidArgument(format!("{id} is not a small-dimension formula")));
    }
    let leaders = window_leaders(id, q, m)?;
    let n = formula_length(id, q, m);
    let d = BigUint::from(delta);
    let windows: Vec<(usize, BigUint, BigUint)> = leaders
        .windows(2)
        .enumerate()
        .map(|(i, w)| (i + 1, (&w[1].0 + 3u32) / 2u32, (&w[0].0 + 1u32) / 2u32))
        .collect();
    let Some((i, lo, hi)) = windows.iter().find(|(_, lo, hi)| lo <= &d && &d <= hi).cloned() else {
        let (lo, hi) = match (windows.last(), windows.first()) {
            (Some(l), Some(f)) => (l.1.to_string(), f.2.to_string()),
            _ => ("-".into(), "-".into()),
        };
        return Err(Error::DeltaOutsideWindow { delta: delta.to_string(), lo, hi });
    };
    let mu = m as u64;
    let kappa = if m.is_multiple_of(2) { mu / 2 } else { mu };
    let di = leaders[i - 1].0.clone();
    let allowed = match id {
        FormulaId::T7 => true,
        FormulaId::T13 => true,
        _ => i == 1,
    };
    if !allowed {
        return Ok(FormulaResult::OutOfRange(format!("{id} states only the first window")));
    }
    let mut p =
        SmallDimParams { n, k: 0, d_lower: (&di + 1u32) / 2u32, window: (lo, hi), one_weight: None, two_weights: None };
    match id {
        FormulaId::T7 => p.k = mu * (i as u64 - 1) + kappa,
        FormulaId::T8 => {
            p.k = mu;
            if q == 3 {
                p.two_weights = Some(two_weight_table(m));
            }
        }
        FormulaId::T9 | FormulaId::T10 => {
            p.k = mu / 2;
            let w = one_weight_value(q, m);
            p.d_lower = w.clone();
            p.one_weight = Some(w);
        }
        FormulaId::T13 => {
            p.d_lower = di;
            p.k = if q % 8 == 3 {
                if i == 1 {
                    1
                } else {
                    2 * mu + 1
                }
            } else {
                2 * mu * i as u64
            };
        }
        _ => unreachable!(),
    }
    Ok(FormulaResult::Value(p))
}

/// Largest d allowed by the sphere-packing bound for an [n, k] code over
/// GF(q): odd d needs q^{n-k} >= sum_{i <= (d-1)/2} C(n,i)(q-1)^i, even d
/// needs q^{n-1-k} >= sum_{i <= (d-2)/2} C(n-1,i)(q-1)^i.
pub fn sphere_packing_max_d(n: u64, k: u64, q: u64) -> Result<u64> {
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let ball = |len: u64, radius: u64| -> BigUint {
        (0..=radius).map(|i| binomial(len, i) * num_traits::pow(BigUint::from(q - 1), i as usize)).sum()
    };
    let mut best = 1;
    for d in 2..=n {
        let ok = if d % 2 == 1 {
            big_pow(q, (n - k) as u32) >= ball(n, (d - 1) / 2)
        } else {
            n > k && big_pow(q, (n - 1 - k) as u32) >= ball(n - 1, (d - 2) / 2)
        };
        if ok {
            best = d;
        }
    }
    Ok(best)
}

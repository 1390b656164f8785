//! Closed-form sufficient conditions for a residue to be a coset leader.
//!
//! Each classifier encodes explicit exclusion sets: residues in the stated
//! range that avoid every exclusion set are leaders. Residues inside an
//! exclusion set are reported as `Unclassified`, since the conditions only
//! go one way. All set arithmetic uses arbitrary-precision integers.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{big_pow, odd_prime_power};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Leader,
    NonLeader,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeaderStatus {
    pub verdict: Verdict,
    /// Which exclusion set matched, or which interval test failed.
    pub witness: Option<String>,
    pub predicted_size: Option<u64>,
}

impl LeaderStatus {
    fn leader(size: Option<u64>) -> Self {
        LeaderStatus { verdict: Verdict::Leader, witness: None, predicted_size: size }
    }
    fn unclassified(witness: String, size: Option<u64>) -> Self {
        LeaderStatus { verdict: Verdict::Unclassified, witness: Some(witness), predicted_size: size }
    }
}

fn pre(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(msg()))
    }
}

fn check_q(q: u64) -> Result<()> {
    pre(odd_prime_power(q).is_some(), || format!("q = {q} is not an odd prime power"))
}

fn bpow(q: u64, e: u32) -> BigInt {
    BigInt::from(big_pow(q, e))
}

/// Residues excluded from a leader guarantee, each tagged with its set name.
#[derive(Debug, Clone, Default)]
struct Exclusions(BTreeMap<BigInt, String>);

impl Exclusions {
    fn add(&mut self, v: BigInt, label: impl Into<String>) {
        self.0.entry(v).or_insert_with(|| label.into());
    }
    fn get(&self, v: &BigInt) -> Option<&String> {
        self.0.get(v)
    }
}

/// Largest integer strictly below num/den (den > 0).
fn below(num: i64, den: i64) -> i64 {
    Integer::div_ceil(&num, &den) - 1
}

fn check_range(i: u64, bound: &BigInt, q: u64, odd: bool) -> Result<BigInt> {
    let bi = BigInt::from(i);
    pre(i >= 1 && &bi <= bound, || format!("i = {i} outside [1, {bound}]"))?;
    pre(!i.is_multiple_of(q), || format!("i = {i} is divisible by q = {q}"))?;
    if odd {
        pre(i % 2 == 1, || format!("i = {i} is even"))?;
    }
    Ok(bi)
}

/// n = (q^m - 1)/λ with m = 2h >= 4 and λ | q - 1, for 1 <= i <= (q^{h+1}-1)/λ.
///
/// With f(a,b,c) = a q^h + b (q^h-1)/λ + c the exclusion sets are
/// D1 = {f(a,0,c) : 1 <= c < a <= (q-1)/λ},
/// D2 = {f(a,b,c) : 1 <= c <= a < (q-1)/λ, 1 <= b < λ},
/// D3 = {f(a,b,a+1) : 0 <= a < (q-1)/λ, λ/2 < b < λ}.
/// For even λ the coset of i has size h when i = c (q^h+1)/2 with
/// 1 <= c <= 2(q-1)/λ, and size m otherwise.
#[derive(Debug, Clone)]
pub struct DivisorClassifier {
    q: u64,
    m: u32,
    lambda: u64,
    bound: BigInt,
    excl: Exclusions,
    halves: Option<BTreeSet<BigInt>>,
}

impl DivisorClassifier {
    pub fn new(q: u64, m: u32, lambda: u64) -> Result<Self> {
        check_q(q)?;
        pre(m >= 4 && m.is_multiple_of(2), || format!("m = {m} must be even and at least 4"))?;
        pre(lambda >= 1 && (q - 1).is_multiple_of(lambda), || format!("λ = {lambda} must divide q - 1"))?;
        let h = m / 2;
        let qh = bpow(q, h);
        let lam = lambda as i64;
        let l = ((q - 1) / lambda) as i64;
        let step = (&qh - 1) / lam;
        let f = |a: i64, bb: i64, c: i64| &qh * a + &step * bb + c;
        let mut excl = Exclusions::default();
        for a in 1..=l {
            for c in 1..a {
                excl.add(f(a, 0, c), format!("D1(a={a},c={c})"));
            }
        }
        for a in 0..l {
            for c in 1..=a {
                for bb in 1..lam {
                    excl.add(f(a, bb, c), format!("D2(a={a},b={bb},c={c})"));
                }
            }
        }
        for a in 0..l {
            for bb in lam / 2 + 1..lam {
                excl.add(f(a, bb, a + 1), format!("D3(a={a},b={bb})"));
            }
        }
        let halves =
            lambda.is_multiple_of(2).then(|| (1..=(2 * (q - 1) / lambda) as i64).map(|c| (&qh + 1) * c / 2).collect());
        let bound = (bpow(q, h + 1) - 1) / lam;
        Ok(DivisorClassifier { q, m, lambda, bound, excl, halves })
    }

    pub fn modulus(&self) -> BigInt {
        (bpow(self.q, self.m) - 1) / self.lambda as i64
    }

    pub fn bound(&self) -> &BigInt {
        &self.bound
    }

    /// Coset size claim; needs only the range and an even λ.
    pub fn predicted_size(&self, i: u64) -> Result<Option<u64>> {
        let bi = BigInt::from(i);
        pre(i >= 1 && bi <= self.bound, || format!("i = {i} outside [1, {}]", self.bound))?;
        Ok(self.halves.as_ref().map(|hv| if hv.contains(&bi) { (self.m / 2) as u64 } else { self.m as u64 }))
    }

    pub fn status(&self, i: u64) -> Result<LeaderStatus> {
        let bi = check_range(i, &self.bound, self.q, false)?;
        let size = self.predicted_size(i)?;
        Ok(match self.excl.get(&bi) {
            Some(w) => LeaderStatus::unclassified(w.clone(), size),
            None => LeaderStatus::leader(size),
        })
    }
}

pub fn divisor_status(i: u64, q: u64, m: u32, lambda: u64) -> Result<LeaderStatus> {
    DivisorClassifier::new(q, m, lambda)?.status(i)
}

/// n = (q^m + 1)/2 with m = 2h + 1 >= 5, for 1 <= i <= q^{h+1} - q.
///
/// For even h, f(a,b,c) = (q^{h+1}+1)/2 + a (q^h-1)/2 + b q^h + c and
/// X1 = {f(0,0,c) : -q/2 <= c <= (q-2)/2}, X2 = {f(0,b,0) : 1 <= b <= (q-1)/2},
/// X3 = {f(2,b,0) : 0 <= b <= (q-3)/2}. For odd h the same shapes use
/// g(a,b,c) = (q^{h+1}-1)/2 + a (q^h+1)/2 + b q^h + c and
/// -(q-2)/2 <= c <= q/2 in X1. Leaders outside X1..X3 have coset size 2m.
#[derive(Debug, Clone)]
pub struct HalfQp1Classifier {
    q: u64,
    m: u32,
    bound: BigInt,
    excl: Exclusions,
}

impl HalfQp1Classifier {
    pub fn new(q: u64, m: u32) -> Result<Self> {
        check_q(q)?;
        pre(m >= 5 && m % 2 == 1, || format!("m = {m} must be odd and at least 5"))?;
        let h = (m - 1) / 2;
        let qh = bpow(q, h);
        let qh1 = bpow(q, h + 1);
        let qi = q as i64;
        let (base, astep, c_lo, c_hi) = if h.is_multiple_of(2) {
            ((&qh1 + 1) / 2, (&qh - 1) / 2, -(qi - 1) / 2, (qi - 3) / 2)
        } else {
            ((&qh1 - 1) / 2, (&qh + 1) / 2, -(qi - 3) / 2, (qi - 1) / 2)
        };
        let f = |a: i64, bb: i64, c: i64| &base + &astep * a + &qh * bb + c;
        let mut excl = Exclusions::default();
        for c in c_lo..=c_hi {
            excl.add(f(0, 0, c), format!("X1(c={c})"));
        }
        for bb in 1..=(qi - 1) / 2 {
            excl.add(f(0, bb, 0), format!("X2(b={bb})"));
        }
        for bb in 0..=(qi - 3) / 2 {
            excl.add(f(2, bb, 0), format!("X3(b={bb})"));
        }
        Ok(HalfQp1Classifier { q, m, bound: qh1 - qi, excl })
    }

    pub fn modulus(&self) -> BigInt {
        (bpow(self.q, self.m) + 1) / 2
    }

    pub fn bound(&self) -> &BigInt {
        &self.bound
    }

    pub fn status(&self, i: u64) -> Result<LeaderStatus> {
        let bi = check_range(i, &self.bound, self.q, false)?;
        Ok(match self.excl.get(&bi) {
            Some(w) => LeaderStatus::unclassified(w.clone(), None),
            None => LeaderStatus::leader(Some(2 * self.m as u64)),
        })
    }
}

pub fn half_qp1_status(i: u64, q: u64, m: u32) -> Result<LeaderStatus> {
    HalfQp1Classifier::new(q, m)?.status(i)
}

/// Exact leader test modulo N = q^m + 1 for 0 <= a <= q^m: a is a leader iff
/// a <= N/2 and a is not of the form l q^{m-k} + h with 1 <= k < m,
/// 1 <= l <= (q^k-1)/2 and -l(q^{m-k}-1)/(q^k+1) < h < l(q^{m-k}+1)/(q^k-1).
/// The form condition is equivalent to a(q^k-1)/N < l < a(q^k+1)/N.
/// Returns the offending (k, l) when a is not a leader.
pub fn qp1_range_test(a: &BigUint, q: u64, m: u32) -> (bool, Option<String>) {
    let big_n = big_pow(q, m) + 1u32;
    if a * 2u32 > big_n {
        return (false, Some("a > (q^m+1)/2".to_string()));
    }
    for k in 1..m {
        let qk = big_pow(q, k);
        let lo = (a * (&qk - 1u32)) / &big_n + 1u32;
        let l_max = (&qk - 1u32) / 2u32;
        if lo <= l_max && &lo * &big_n < a * (&qk + 1u32) {
            return (false, Some(format!("k={k},l={lo}")));
        }
    }
    (true, None)
}

/// For n = (q^m+1)/λ with λ | q + 1: i is a leader modulo n iff λi is a
/// leader modulo q^m + 1, and the two cosets have equal size. The verdict is
/// definitive (Leader or NonLeader).
pub fn transfer_status(i: u64, q: u64, m: u32, lambda: u64) -> Result<LeaderStatus> {
    check_q(q)?;
    pre(m >= 1, || "m must be positive".into())?;
    pre(lambda >= 1 && (q + 1).is_multiple_of(lambda), || format!("λ = {lambda} must divide q + 1"))?;
    let big_n = crate::arith::checked_pow(q, m)
        .and_then(|x| x.checked_add(1))
        .filter(|x| *x < 1 << 62)
        .ok_or_else(|| Error::PreconditionViolated("q^m + 1 does not fit in 62 bits".into()))?;
    pre(big_n % lambda == 0, || format!("λ = {lambda} does not divide q^m + 1"))?;
    let n = big_n / lambda;
    pre(i >= 1 && i < n, || format!("i = {i} outside [1, {}]", n - 1))?;
    let a = i * lambda;
    let (ok, witness) = qp1_range_test(&BigUint::from(a), q, m);
    let size = Some(super::coset_size(a, big_n, q));
    Ok(LeaderStatus {
        verdict: if ok { Verdict::Leader } else { Verdict::NonLeader },
        witness: witness.map(|w| format!("λi = {a}: {w}")),
        predicted_size: size,
    })
}

/// Odd i in [1, (q^{h+1}-1)/2] modulo n = (q^m - 1)/2, m = 2h >= 4.
///
/// When q ≡ 1 (mod 4), or q ≡ 3 (mod 4) with 4 | m:
/// T1 = {(2u+1)q^h + 2v, (2u+1)q^h + 2v + (q^h-1)/2 : 1 <= v <= u < (q-3)/4},
/// T2 = {2u q^h + 2v + 1, 2u q^h + 2v + (q^h+1)/2 : 0 <= v < u < (q-1)/4},
/// T3 = {(q-1)q^h/2 + 2v + 1 : 0 <= v < (q-1)/4} for q ≡ 1 (mod 4), or
///      {(q-1)q^h/2 + 2v : 1 <= v <= (q-3)/4} for q ≡ 3 (mod 4).
/// When q ≡ 3 (mod 4) and m ≡ 2 (mod 4):
/// T1 = {(2u+1)q^h + 2v + (q^h+1)/2 : 0 <= v <= u < (q-3)/4},
/// T2 = {2u q^h + 2v + 1 : 0 <= v < u <= (q-3)/4},
/// T3 = {(2u+1)q^h + 2v, 2u q^h + 2v + (q^h-1)/2 : 1 <= v <= u <= (q-3)/4}.
#[derive(Debug, Clone)]
pub struct OddHalfQm1EvenClassifier {
    q: u64,
    m: u32,
    bound: BigInt,
    excl: Exclusions,
}

impl OddHalfQm1EvenClassifier {
    pub fn new(q: u64, m: u32) -> Result<Self> {
        check_q(q)?;
        pre(m >= 4 && m.is_multiple_of(2), || format!("m = {m} must be even and at least 4"))?;
        let h = m / 2;
        let qh = bpow(q, h);
        let qi = q as i64;
        let mut excl = Exclusions::default();
        let half_m = (&qh - 1) / 2;
        let half_p = (&qh + 1) / 2;
        if q % 4 == 1 || m.is_multiple_of(4) {
            for u in 0..=below(qi - 3, 4) {
                for v in 1..=u {
                    let x = &qh * (2 * u + 1) + 2 * v;
                    excl.add(x.clone(), format!("T1(u={u},v={v})"));
                    excl.add(x + &half_m, format!("T1(u={u},v={v})"));
                }
            }
            for u in 0..=below(qi - 1, 4) {
                for v in 0..u {
                    let x = &qh * (2 * u) + 2 * v;
                    excl.add(&x + 1, format!("T2(u={u},v={v})"));
                    excl.add(x + &half_p, format!("T2(u={u},v={v})"));
                }
            }
            let base = &qh * (qi - 1) / 2;
            if q % 4 == 1 {
                for v in 0..=below(qi - 1, 4) {
                    excl.add(&base + 2 * v + 1, format!("T3(v={v})"));
                }
            } else {
                for v in 1..=(qi - 3) / 4 {
                    excl.add(&base + 2 * v, format!("T3(v={v})"));
                }
            }
        } else {
            for u in 0..=below(qi - 3, 4) {
                for v in 0..=u {
                    excl.add(&qh * (2 * u + 1) + 2 * v + &half_p, format!("T1(u={u},v={v})"));
                }
            }
            for u in 0..=(qi - 3) / 4 {
                for v in 0..u {
                    excl.add(&qh * (2 * u) + 2 * v + 1, format!("T2(u={u},v={v})"));
                }
            }
            for u in 0..=(qi - 3) / 4 {
                for v in 1..=u {
                    excl.add(&qh * (2 * u + 1) + 2 * v, format!("T3(u={u},v={v})"));
                    excl.add(&qh * (2 * u) + 2 * v + &half_m, format!("T3(u={u},v={v})"));
                }
            }
        }
        let bound = (bpow(q, h + 1) - 1) / 2;
        Ok(OddHalfQm1EvenClassifier { q, m, bound, excl })
    }

    pub fn modulus(&self) -> BigInt {
        (bpow(self.q, self.m) - 1) / 2
    }

    pub fn bound(&self) -> &BigInt {
        &self.bound
    }

    pub fn status(&self, i: u64) -> Result<LeaderStatus> {
        let bi = check_range(i, &self.bound, self.q, true)?;
        Ok(match self.excl.get(&bi) {
            Some(w) => LeaderStatus::unclassified(w.clone(), None),
            None => LeaderStatus::leader(None),
        })
    }
}

pub fn odd_half_qm1_even_status(i: u64, q: u64, m: u32) -> Result<LeaderStatus> {
    OddHalfQm1EvenClassifier::new(q, m)?.status(i)
}

/// i in [1, (q^{h+2}-1)/2] modulo n = (q^m - 1)/2, m = 2h + 1 >= 5.
///
/// With H = (q-1)/2, f(a,b,c,d) = a q^{h+1} + b q^h + c q + d and
/// g(a,b,c,d) = f(a,b,c,d) + H (q^2 + ... + q^{h-1}):
/// A1 = {f(a,0,c,d) : 0 <= c < a <= H, 1 <= d <= q-1},
/// A2 = {g(a,H,c,d) : 1 <= c-H <= a < H, 1 <= d <= q-1},
/// A3 = {g(a,H,H,d) : 0 <= a < H, H < d <= q-1},
/// A4 = {f(a,b,0,d) : 1 <= d <= a < H, 1 <= b <= q-1},
/// A5 = {f(H,b,0,d) : 1 <= d, b <= H},
/// A6 = {g(a,b,H,d) : 1 <= d-H <= a <= H and 0 <= b < H,
///       or 0 <= d-H-1 <= a < H and H < b <= q-1}.
/// Leaders outside A1..A6 have coset size m.
#[derive(Debug, Clone)]
pub struct HalfQm1OddClassifier {
    q: u64,
    m: u32,
    bound: BigInt,
    excl: Exclusions,
}

impl HalfQm1OddClassifier {
    pub fn new(q: u64, m: u32) -> Result<Self> {
        check_q(q)?;
        pre(m >= 5 && m % 2 == 1, || format!("m = {m} must be odd and at least 5"))?;
        let h = (m - 1) / 2;
        let qi = q as i64;
        let hh = (qi - 1) / 2;
        let qh = bpow(q, h);
        let qh1 = bpow(q, h + 1);
        let mid: BigInt = (2..h).map(|l| bpow(q, l)).sum::<BigInt>() * hh;
        let f = |a: i64, bb: i64, c: i64, d: i64| &qh1 * a + &qh * bb + c * qi + d;
        let g = |a: i64, bb: i64, c: i64, d: i64| f(a, bb, c, d) + &mid;
        let mut excl = Exclusions::default();
        for a in 0..=hh {
            for c in 0..a {
                for d in 1..qi {
                    excl.add(f(a, 0, c, d), format!("A1(a={a},c={c},d={d})"));
                }
            }
        }
        for a in 0..hh {
            for c in hh + 1..=hh + a {
                for d in 1..qi {
                    excl.add(g(a, hh, c, d), format!("A2(a={a},c={c},d={d})"));
                }
            }
        }
        for a in 0..hh {
            for d in hh + 1..qi {
                excl.add(g(a, hh, hh, d), format!("A3(a={a},d={d})"));
            }
        }
        for a in 0..hh {
            for d in 1..=a {
                for bb in 1..qi {
                    excl.add(f(a, bb, 0, d), format!("A4(a={a},b={bb},d={d})"));
                }
            }
        }
        for bb in 1..=hh {
            for d in 1..=hh {
                excl.add(f(hh, bb, 0, d), format!("A5(b={bb},d={d})"));
            }
        }
        for a in 0..=hh {
            for bb in 0..qi {
                for d in 0..qi {
                    let first = (1..=a).contains(&(d - hh)) && bb < hh;
                    let second = (0..=a).contains(&(d - hh - 1)) && a < hh && bb > hh;
                    if first || second {
                        excl.add(g(a, bb, hh, d), format!("A6(a={a},b={bb},d={d})"));
                    }
                }
            }
        }
        let bound = (bpow(q, h + 2) - 1) / 2;
        Ok(HalfQm1OddClassifier { q, m, bound, excl })
    }

    pub fn modulus(&self) -> BigInt {
        (bpow(self.q, self.m) - 1) / 2
    }

    pub fn bound(&self) -> &BigInt {
        &self.bound
    }

    pub fn status(&self, i: u64) -> Result<LeaderStatus> {
        let bi = check_range(i, &self.bound, self.q, false)?;
        Ok(match self.excl.get(&bi) {
            Some(w) => LeaderStatus::unclassified(w.clone(), None),
            None => LeaderStatus::leader(Some(self.m as u64)),
        })
    }
}

pub fn half_qm1_odd_status(i: u64, q: u64, m: u32) -> Result<LeaderStatus> {
    HalfQm1OddClassifier::new(q, m)?.status(i)
}

/// Odd i in [1, q^{h+1} - q] modulo n = (q^m + 1)/2, q ≡ 3 (mod 4),
/// m = 2h + 1 >= 5.
///
/// Let A = (q^{h+1}-1)/2 and B = (q^{h+1}+1)/2 for even h (swapped for odd h).
/// B1 = {A + 2u : |u| <= (q-3)/4}; B2 = {B + q^h} for q = 3, otherwise
/// B2 = {B + (2v-1)q^h, A + 2v q^h, B + (q-1)q^h/2 : 1 <= v <= (q-3)/4}.
#[derive(Debug, Clone)]
pub struct OddHalfQp1Classifier {
    q: u64,
    m: u32,
    bound: BigInt,
    excl: Exclusions,
}

impl OddHalfQp1Classifier {
    pub fn new(q: u64, m: u32) -> Result<Self> {
        check_q(q)?;
        pre(q % 4 == 3, || format!("q = {q} is not 3 mod 4"))?;
        pre(m >= 5 && m % 2 == 1, || format!("m = {m} must be odd and at least 5"))?;
        let h = (m - 1) / 2;
        let qi = q as i64;
        let qh = bpow(q, h);
        let qh1 = bpow(q, h + 1);
        let (mut a, mut bb) = ((&qh1 - 1) / 2, (&qh1 + 1) / 2);
        if h % 2 == 1 {
            std::mem::swap(&mut a, &mut bb);
        }
        let r = (qi - 3) / 4;
        let mut excl = Exclusions::default();
        for u in -r..=r {
            excl.add(&a + 2 * u, format!("B1(u={u})"));
        }
        let tail = &bb + &qh * ((qi - 1) / 2);
        if q == 3 {
            excl.add(tail, "B2");
        } else {
            for v in 1..=r {
                excl.add(&bb + &qh * (2 * v - 1), format!("B2(v={v})"));
                excl.add(&a + &qh * (2 * v), format!("B2(v={v})"));
                excl.add(tail.clone(), "B2");
            }
        }
        Ok(OddHalfQp1Classifier { q, m, bound: qh1 - qi, excl })
    }

    pub fn modulus(&self) -> BigInt {
        (bpow(self.q, self.m) + 1) / 2
    }

    pub fn bound(&self) -> &BigInt {
        &self.bound
    }

    pub fn status(&self, i: u64) -> Result<LeaderStatus> {
        let bi = check_range(i, &self.bound, self.q, true)?;
        Ok(match self.excl.get(&bi) {
            Some(w) => LeaderStatus::unclassified(w.clone(), None),
            None => LeaderStatus::leader(None),
        })
    }
}

pub fn odd_half_qp1_status(i: u64, q: u64, m: u32) -> Result<LeaderStatus> {
    OddHalfQp1Classifier::new(q, m)?.status(i)
}

/// Interval test modulo N = q^m + 1 for 0 <= a <= N/2: write
/// a q^k = u_k N + r_k; if for every 1 <= k <= m-1 no integer l satisfies
/// u_k + (r_k - a)/N < l < u_k + (r_k + a)/N, then a is a leader.
/// The open interval is shorter than 1, so only l = u_k (when r_k < a) or
/// l = u_k + 1 (when r_k + a > N) can fall inside it.
pub fn interval_status(a: u64, q: u64, m: u32) -> Result<LeaderStatus> {
    check_q(q)?;
    pre(m >= 1, || "m must be positive".into())?;
    let big_n = BigInt::from(big_pow(q, m)) + 1;
    let ba = BigInt::from(a);
    pre(&ba * 2 <= big_n, || format!("a = {a} exceeds (q^m+1)/2"))?;
    if ba.is_zero() {
        return Ok(LeaderStatus::leader(Some(1)));
    }
    for k in 1..m {
        let (u, r) = (&ba * bpow(q, k)).div_rem(&big_n);
        if r < ba {
            return Ok(LeaderStatus::unclassified(format!("k={k},l={u}"), None));
        }
        if &r + &ba > big_n {
            return Ok(LeaderStatus::unclassified(format!("k={k},l={}", u + BigInt::one()), None));
        }
    }
    Ok(LeaderStatus::leader(None))
}

/// Converts a BigInt bound to u64 for scanning, if it fits.
pub fn bound_u64(b: &BigInt) -> Option<u64> {
    b.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{coset_size, is_leader};

    #[test]
    fn divisor_examples() {
        let s = divisor_status(19, 5, 4, 4).unwrap();
        assert_eq!(s.verdict, Verdict::Unclassified);
        assert!(s.witness.unwrap().starts_with("D3"));
        assert!(!is_leader(19, 156, 5));
        assert_eq!(crate::arith::mul_mod(19, 25, 156), 7);
        let s = divisor_status(13, 5, 4, 4).unwrap();
        assert_eq!(s.predicted_size, Some(2));
        assert_eq!(coset_size(13, 156, 5), 2);
        assert_eq!(divisor_status(1, 5, 4, 4).unwrap().verdict, Verdict::Leader);
        assert!(divisor_status(5, 5, 4, 4).is_err());
    }

    #[test]
    fn half_qp1_examples() {
        let s = half_qp1_status(1, 3, 5).unwrap();
        assert_eq!((s.verdict, s.predicted_size), (Verdict::Leader, Some(10)));
        assert_eq!(coset_size(1, 122, 3), 10);
        let s = half_qp1_status(23, 3, 5).unwrap();
        assert_eq!(s.verdict, Verdict::Unclassified);
        assert_eq!(s.witness.as_deref(), Some("X2(b=1)"));
        assert!(matches!(half_qp1_status(3, 3, 5), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn transfer_examples() {
        // 4 * 17 = 68 is not a leader modulo 244: 68 * 3^3 = 1836 ≡ 128, and
        // the orbit also reaches 40.
        let s = transfer_status(17, 3, 5, 4).unwrap();
        assert_eq!(s.verdict, Verdict::NonLeader);
        assert!(!is_leader(68, 244, 3) && !is_leader(17, 61, 3));
        let s = transfer_status(30, 3, 5, 2).unwrap();
        assert_eq!(s.verdict, if is_leader(60, 244, 3) { Verdict::Leader } else { Verdict::NonLeader });
        assert_eq!(s.predicted_size, Some(coset_size(30, 122, 3)));
        let s = transfer_status(1, 3, 5, 4).unwrap();
        assert_eq!(s.verdict, Verdict::Leader);
    }

    #[test]
    fn odd_half_qm1_even_examples() {
        for i in [1u64, 5, 7, 11, 13] {
            assert_eq!(odd_half_qm1_even_status(i, 3, 4).unwrap().verdict, Verdict::Leader);
        }
        let s = odd_half_qm1_even_status(51, 5, 4).unwrap();
        assert_eq!(s.verdict, Verdict::Unclassified);
        assert_eq!(s.witness.as_deref(), Some("T3(v=0)"));
        assert!(!is_leader(51, 312, 5));
        assert_eq!(odd_half_qm1_even_status(1, 3, 6).unwrap().verdict, Verdict::Leader);
    }

    #[test]
    fn half_qm1_odd_examples() {
        let s = half_qm1_odd_status(28, 3, 5).unwrap();
        assert_eq!(s.witness.as_deref(), Some("A1(a=1,c=0,d=1)"));
        assert_eq!(crate::arith::mul_mod(28, 9, 121), 10);
        let s = half_qm1_odd_status(1, 3, 5).unwrap();
        assert_eq!((s.verdict, s.predicted_size), (Verdict::Leader, Some(5)));
        let s = half_qm1_odd_status(29, 3, 5).unwrap();
        assert_eq!(s.witness.as_deref(), Some("A1(a=1,c=0,d=2)"));
    }

    #[test]
    fn odd_half_qp1_examples() {
        let s = odd_half_qp1_status(13, 3, 5).unwrap();
        assert_eq!(s.witness.as_deref(), Some("B1(u=0)"));
        let s = odd_half_qp1_status(23, 3, 5).unwrap();
        assert_eq!(s.witness.as_deref(), Some("B2"));
        assert_eq!(odd_half_qp1_status(1, 3, 5).unwrap().verdict, Verdict::Leader);
    }

    #[test]
    fn interval_examples() {
        assert_eq!(interval_status(122, 3, 5).unwrap().verdict, Verdict::Leader);
        let s = interval_status(30, 3, 5).unwrap();
        assert_eq!(s.verdict, Verdict::Unclassified);
        assert_eq!(s.witness.as_deref(), Some("k=2,l=1"));
        assert_eq!(crate::arith::mul_mod(30, 9, 244), 26);
        assert_eq!(interval_status(0, 3, 5).unwrap().verdict, Verdict::Leader);
    }

    #[test]
    fn range_test_matches_orbits() {
        for (q, m) in [(3u64, 3u32), (3, 4), (3, 5), (5, 3), (7, 3)] {
            let n = q.pow(m) + 1;
            for a in 0..n {
                let (ok, _) = qp1_range_test(&BigUint::from(a), q, m);
                assert_eq!(ok, is_leader(a, n, q), "q={q} m={m} a={a}");
            }
        }
    }
}

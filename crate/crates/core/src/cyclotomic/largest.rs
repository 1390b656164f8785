//! Closed forms for the few largest coset leaders modulo (q^m ∓ 1)/2.

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::{big_pow, odd_prime_power};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LeaderFamily {
    /// All leaders modulo (q^m - 1)/2.
    AllQm1Half,
    /// Odd leaders modulo (q^m - 1)/2.
    OddQm1Half,
    /// All leaders modulo (q^m + 1)/2, q ≡ 3 (mod 4), m odd.
    AllQp1Half,
    /// Odd leaders modulo (q^m + 1)/2, q ≡ 3 (mod 4), m odd.
    OddQp1Half,
}

impl LeaderFamily {
    pub fn odd_only(self) -> bool {
        matches!(self, LeaderFamily::OddQm1Half | LeaderFamily::OddQp1Half)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargestLeaders {
    pub family: LeaderFamily,
    pub q: u64,
    pub m: u32,
    pub modulus: BigUint,
    /// (leader, coset size), largest first.
    pub values: Vec<(BigUint, u64)>,
}

fn violated(msg: String) -> Error {
    Error::FamilyConstraintViolated(msg)
}

/// (q^m - q^{m-1} - q^e - 1)/2
fn qm1_form(q: u64, m: u32, e: u32) -> BigUint {
    (big_pow(q, m) - big_pow(q, m - 1) - big_pow(q, e) - 1u32) / 2u32
}

pub fn largest_leaders(family: LeaderFamily, q: u64, m: u32) -> Result<LargestLeaders> {
    if odd_prime_power(q).is_none() {
        return Err(violated(format!("q = {q} is not an odd prime power")));
    }
    if m < 2 {
        return Err(violated(format!("m = {m} must be at least 2")));
    }
    let mu = m as u64;
    let (modulus, values) = match family {
        LeaderFamily::AllQm1Half => {
            let count = (m + 6) / 4;
            let v = (1..=count)
                .map(|i| {
                    let size = if m.is_multiple_of(2) && i == 1 { mu / 2 } else { mu };
                    (qm1_form(q, m, (m + 2 * i - 3) / 2), size)
                })
                .collect();
            ((big_pow(q, m) - 1u32) / 2u32, v)
        }
        LeaderFamily::OddQm1Half => {
            let mut v = Vec::new();
            if q % 4 == 1 {
                for (i, e) in [(m - 1) / 2, m.div_ceil(2), (m + 3) / 2].into_iter().enumerate() {
                    if i == 2 && m < 6 {
                        continue;
                    }
                    let size = if m.is_multiple_of(2) && i == 0 { mu / 2 } else { mu };
                    v.push((qm1_form(q, m, e), size));
                }
            } else if m % 4 == 2 {
                v.push((qm1_form(q, m, m / 2), mu));
                if m >= 10 {
                    v.push((qm1_form(q, m, (m + 4) / 2), mu));
                }
            } else if m.is_multiple_of(4) {
                v.push((qm1_form(q, m, (m - 2) / 2), mu / 2));
                if m >= 6 {
                    v.push((qm1_form(q, m, (m + 2) / 2), mu));
                }
            } else {
                return Err(violated(format!("q = {q} ≡ 3 (mod 4) needs even m, got {m}")));
            }
            ((big_pow(q, m) - 1u32) / 2u32, v)
        }
        LeaderFamily::AllQp1Half | LeaderFamily::OddQp1Half => {
            if q % 4 != 3 || m.is_multiple_of(2) {
                return Err(violated(format!("needs q ≡ 3 (mod 4) and odd m, got q = {q}, m = {m}")));
            }
            if m < 5 {
                return Err(violated(format!("m = {m} must be at least 5")));
            }
            let big_q = big_pow(q, m);
            let top = big_pow(q, m - 1) * 2u32;
            let (q1, q2, q3) = (BigUint::from(q), BigUint::from(q * q), big_pow(q, 3));
            let quarter = |x: BigUint| x / 4u32;
            let two_m = 2 * mu;
            let v = if family == LeaderFamily::AllQp1Half {
                vec![
                    (quarter(&big_q + 1u32), 1),
                    (quarter(&big_q - 1u32 - &top), two_m),
                    (quarter(&big_q + 1u32 - &top - &q1 * 2u32), two_m),
                ]
            } else if q % 8 == 3 {
                vec![
                    (quarter(&big_q + 1u32), 1),
                    (quarter(&big_q + 1u32 - &top - &q1 * 2u32), two_m),
                    (quarter(&big_q + &q1 * 2u32 - 1u32 - &top - &q2 * 2u32), two_m),
                ]
            } else {
                vec![
                    (quarter(&big_q - 1u32 - &top), two_m),
                    (quarter(&big_q + 1u32 - &top - &q2 * 2u32), two_m),
                    (quarter(&big_q + &q2 * 2u32 + 1u32 - &top - q3 * 2u32 - &q1 * 2u32), two_m),
                ]
            };
            ((big_q + 1u32) / 2u32, v)
        }
    };
    Ok(LargestLeaders { family, q, m, modulus, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::top_leaders;
    use num_traits::ToPrimitive;

    fn check(family: LeaderFamily, q: u64, m: u32) {
        let l = largest_leaders(family, q, m).unwrap();
        let n = l.modulus.to_u64().unwrap();
        let got = top_leaders(n, q, l.values.len(), family.odd_only()).unwrap();
        let want: Vec<(u64, u64)> = l.values.iter().map(|(v, s)| (v.to_u64().unwrap(), *s)).collect();
        assert_eq!(got, want, "{family:?} q={q} m={m}");
    }

    #[test]
    fn forms_match_downward_scans() {
        for (q, m) in [(3, 4), (3, 5), (3, 6), (5, 4), (5, 5), (7, 4), (9, 3), (13, 4)] {
            check(LeaderFamily::AllQm1Half, q, m);
        }
        for (q, m) in [(5, 2), (5, 6), (9, 4), (13, 3), (3, 4), (3, 8), (3, 10), (7, 2), (7, 6)] {
            check(LeaderFamily::OddQm1Half, q, m);
        }
        for (q, m) in [(3, 5), (3, 7), (7, 5), (11, 5)] {
            check(LeaderFamily::AllQp1Half, q, m);
        }
        for (q, m) in [(3, 5), (3, 7), (7, 5), (11, 5), (19, 5), (23, 5)] {
            check(LeaderFamily::OddQp1Half, q, m);
        }
    }

    #[test]
    fn constraint_violations() {
        for (f, q, m) in [
            (LeaderFamily::OddQm1Half, 3, 5),
            (LeaderFamily::AllQp1Half, 5, 5),
            (LeaderFamily::OddQp1Half, 3, 4),
            (LeaderFamily::OddQp1Half, 7, 3),
            (LeaderFamily::AllQm1Half, 6, 3),
        ] {
            assert!(matches!(largest_leaders(f, q, m), Err(Error::FamilyConstraintViolated(_))));
        }
    }
}

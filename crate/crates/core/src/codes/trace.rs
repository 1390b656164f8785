//! Weight distributions of codes with a single nonzero coset, via traces.
//!
//! If the nonzeros of a code are one coset C_s of size l, the code is
//! {(Tr_{q^l/q}(a β^{-s i}))_{i<n} : a in GF(q^l)}. Writing a = γ^t and
//! β^{-s} = γ^σ for a primitive element γ of GF(q^l), the weight of the word
//! for a is the number of i < n with Tr(γ^{t + σ i}) != 0, read off one
//! precomputed table of trace values.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{CodeInstance, WeightDistribution};
use crate::arith::mul_mod;
use crate::error::{Error, Result};
use crate::field::FieldElement;

pub fn trace_code_weight(c: &CodeInstance) -> Result<WeightDistribution> {
    let nonzeros = c.nonzeros();
    let big_n = c.exponent_modulus();
    let q = c.q();
    let Some(&s) = nonzeros.first() else {
        return Err(Error::NotSingleNonzero(0));
    };
    let mut orbit = vec![s];
    let mut x = mul_mod(s, q, big_n);
    while x != s {
        orbit.push(x);
        x = mul_mod(x, q, big_n);
    }
    if orbit.len() != nonzeros.len() {
        let mut rest: Vec<u64> = nonzeros.clone();
        let mut cosets = 0;
        while let Some(&r) = rest.first() {
            let mut o = vec![r];
            let mut y = mul_mod(r, q, big_n);
            while y != r {
                o.push(y);
                y = mul_mod(y, q, big_n);
            }
            rest.retain(|z| !o.contains(z));
            cosets += 1;
        }
        return Err(Error::NotSingleNonzero(cosets));
    }
    let l = orbit.len() as u32;
    let amb = c.ambient();
    let big_q = amb.order();
    let sub = q.pow(l);
    let order = sub - 1;
    let step = (big_q - 1) / order;
    // γ = α^step; trace table over exponents of γ.
    let gamma_pow = |j: u64| amb.alpha_pow(mul_mod(j, step, big_q - 1));
    let nz: Vec<bool> = (0..order)
        .into_par_iter()
        .map(|j| {
            let y = gamma_pow(j);
            let mut acc = FieldElement::ZERO;
            let mut z = y;
            for _ in 0..l {
                acc = amb.add(acc, z);
                z = amb.pow(z, q);
            }
            !acc.is_zero()
        })
        .collect();
    // β^{-s} as a power of γ
    let root = amb.pow(c.root(), (big_n - s % big_n) % big_n);
    let log = amb.log(root)?.ok_or(Error::NoLogTable)?;
    if log % step != 0 {
        return Err(Error::PreconditionViolated("β^{-s} is outside GF(q^l)".into()));
    }
    let sigma = log / step;
    let n = c.n();
    let weights: Vec<u64> = (0..order)
        .into_par_iter()
        .map(|t| {
            let mut pos = t;
            let mut w = 0u64;
            for _ in 0..n {
                w += nz[pos as usize] as u64;
                pos += sigma;
                if pos >= order {
                    pos -= order;
                }
            }
            w
        })
        .collect();
    let mut counts: BTreeMap<u64, BigUint> = BTreeMap::new();
    counts.insert(0, BigUint::from(1u32));
    for w in weights {
        *counts.entry(w).or_default() += 1u32;
    }
    Ok(WeightDistribution { n, q, k: l as u64, counts })
}

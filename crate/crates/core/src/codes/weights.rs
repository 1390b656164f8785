//! Weight distributions and minimum distances by exhaustive enumeration.
//!
//! Codewords are enumerated in a base-p Gray order over a GF(p)-basis of the
//! code: rows are ω_t x^j g(x), where ω_t runs over the additive basis
//! {1, x, ..., x^{e-1}} of GF(q) = GF(p^e). Step t of the walk adds the row
//! indexed by the p-adic valuation of t, so each word costs one row update
//! and the weight is maintained incrementally. The top digits split the walk
//! into blocks that run in parallel and are merged in block order.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{bch_bound, dual_code, CodeInstance};
use crate::arith::{big_pow, valuation};
use crate::error::{Error, Result};
use crate::field::poly::{self, Polynomial};
use crate::field::{small_add_table, FieldElement, FieldTable};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: u64,
    pub q: u64,
    pub k: u64,
    /// weight -> number of codewords; zero counts are omitted.
    pub counts: BTreeMap<u64, BigUint>,
}

impl WeightDistribution {
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn count(&self, w: u64) -> BigUint {
        self.counts.get(&w).cloned().unwrap_or_default()
    }

    pub fn min_positive(&self) -> Option<u64> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    /// A_0 = 1 and the counts sum to q^k.
    pub fn is_consistent(&self) -> bool {
        self.count(0).is_one() && self.total() == big_pow(self.q, self.k as u32)
    }

    /// `{"n":..,"q":..,"k":..,"counts":{"w":"count",..}}` with weights in
    /// increasing numeric order and counts as decimal strings.
    pub fn to_json(&self) -> String {
        let counts: Vec<String> = self.counts.iter().map(|(w, c)| format!("\"{w}\":\"{c}\"")).collect();
        format!("{{\"n\":{},\"q\":{},\"k\":{},\"counts\":{{{}}}}}", self.n, self.q, self.k, counts.join(","))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidArgument(format!("weight distribution JSON: {m}"));
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| bad(&e.to_string()))?;
        let field = |name: &str| v.get(name).and_then(|x| x.as_u64()).ok_or_else(|| bad(name));
        let mut counts = BTreeMap::new();
        for (w, c) in v.get("counts").and_then(|c| c.as_object()).ok_or_else(|| bad("counts"))? {
            let w: u64 = w.parse().map_err(|_| bad("weight key"))?;
            let c: BigUint = c.as_str().and_then(|c| c.parse().ok()).ok_or_else(|| bad("count"))?;
            counts.insert(w, c);
        }
        Ok(WeightDistribution { n: field("n")?, q: field("q")?, k: field("k")?, counts })
    }

    fn from_hist(n: u64, q: u64, k: u64, hist: &[u64]) -> Self {
        let counts =
            hist.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, &c)| (w as u64, BigUint::from(c))).collect();
        WeightDistribution { n, q, k, counts }
    }
}

/// Limits on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_words: u64,
    /// Cap on words times length.
    pub max_symbol_ops: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_words: 1 << 28, max_symbol_ops: 10_000_000_000 }
    }
}

impl Budget {
    pub fn admits(&self, q: u64, k: u64, n: u64) -> bool {
        let words = big_pow(q, k as u32);
        words <= BigUint::from(self.max_words) && &words * n <= BigUint::from(self.max_symbol_ops)
    }

    fn check(&self, q: u64, k: u64, n: u64) -> Result<()> {
        if self.admits(q, k, n) {
            Ok(())
        } else {
            Err(Error::BudgetExceeded { words: format!("{q}^{k}"), n })
        }
    }
}

/// Parameters of the light-codeword search used for distance upper bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub random_messages: u64,
    pub seed: u64,
    /// Symbol operations allowed for the random and pair phases together.
    pub max_symbol_ops: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { random_messages: 100_000, seed: 0x5EED, max_symbol_ops: 2_000_000_000 }
    }
}

fn to_u8(x: FieldElement) -> u8 {
    x.0 as u8
}

fn mul_table(f: &FieldTable) -> Vec<u8> {
    let q = f.order();
    let mut t = vec![0u8; (q * q) as usize];
    for a in 0..q {
        for b in 0..q {
            t[(a * q + b) as usize] = to_u8(f.mul(FieldElement(a), FieldElement(b)));
        }
    }
    t
}

struct GrayRows {
    p: u64,
    e: u32,
    q: usize,
    n: usize,
    /// (start position, symbols), indexed j * e + t.
    rows: Vec<(usize, Vec<u8>)>,
}

impl GrayRows {
    fn new(c: &CodeInstance) -> Self {
        let f = c.field();
        let p = f.p();
        let e = f.degree();
        let mut rows = Vec::with_capacity((c.k() * e as u64) as usize);
        let g = c.generator();
        for j in 0..c.k() as usize {
            for t in 0..e {
                let w = FieldElement(p.pow(t));
                rows.push((j, g.coeffs().iter().map(|&x| to_u8(f.mul(x, w))).collect()));
            }
        }
        GrayRows { p, e, q: c.q() as usize, n: c.n() as usize, rows }
    }

    fn digits(&self) -> usize {
        self.rows.len()
    }

    /// Adds row r to cw and returns the weight change.
    #[inline]
    fn apply(&self, add: &[u8], cw: &mut [u8], r: usize) -> i64 {
        let (start, ref vals) = self.rows[r];
        let mut dw = 0i64;
        for (x, &v) in cw[start..start + vals.len()].iter_mut().zip(vals) {
            let old = *x;
            let new = add[old as usize * self.q + v as usize];
            dw += (new != 0) as i64 - (old != 0) as i64;
            *x = new;
        }
        dw
    }

    /// Message symbols for the given base-p digit vector.
    fn message(&self, digits: &[u64]) -> Vec<FieldElement> {
        digits
            .chunks(self.e as usize)
            .map(|ch| FieldElement(ch.iter().rev().fold(0, |acc, &d| acc * self.p + d)))
            .collect()
    }
}

struct BlockResult {
    hist: Vec<u64>,
    /// Lightest nonzero word as (weight, step index).
    best: Option<(u64, u64)>,
}

/// Enumerates every codeword; returns the histogram and a lightest nonzero
/// codeword.
fn enumerate(c: &CodeInstance) -> (Vec<u64>, Option<Vec<FieldElement>>) {
    let rows = GrayRows::new(c);
    let add = small_add_table(c.field()).expect("q <= 256 carries an add table");
    let p = rows.p;
    let total = rows.digits();
    let mut top = 0;
    while top < total && p.pow(top as u32) < 64 {
        top += 1;
    }
    let low = total - top;
    let steps = p.pow(low as u32);
    let blocks = p.pow(top as u32);
    let run_block = |b: u64| -> BlockResult {
        let mut cw = vec![0u8; rows.n];
        let mut x = b;
        for i in 0..top {
            for _ in 0..x % p {
                rows.apply(add, &mut cw, low + i);
            }
            x /= p;
        }
        let mut w = cw.iter().filter(|&&s| s != 0).count() as i64;
        let mut hist = vec![0u64; rows.n + 1];
        hist[w as usize] += 1;
        let mut best = (w > 0).then_some((w as u64, 0));
        for t in 1..steps {
            w += rows.apply(add, &mut cw, valuation(t, p));
            hist[w as usize] += 1;
            if w > 0 && best.is_none_or(|(bw, _)| (w as u64) < bw) {
                best = Some((w as u64, t));
            }
        }
        BlockResult { hist, best }
    };
    let results: Vec<BlockResult> = (0..blocks).into_par_iter().map(run_block).collect();
    let mut hist = vec![0u64; rows.n + 1];
    let mut best: Option<(u64, u64, u64)> = None;
    for (b, r) in results.iter().enumerate() {
        for (h, x) in hist.iter_mut().zip(&r.hist) {
            *h += x;
        }
        if let Some((w, t)) = r.best {
            if best.is_none_or(|(bw, _, _)| w < bw) {
                best = Some((w, b as u64, t));
            }
        }
    }
    let witness = best.map(|(_, b, t)| {
        let mut digits = vec![0u64; total];
        let td: Vec<u64> = (0..=low).map(|i| t / p.pow(i as u32) % p).collect();
        for i in 0..low {
            digits[i] = (td[i] + p - td[i + 1]) % p;
        }
        let mut x = b;
        for i in 0..top {
            digits[low + i] = x % p;
            x /= p;
        }
        super::encode(c, &rows.message(&digits)).expect("message has length k")
    });
    (hist, witness)
}

fn direct(c: &CodeInstance, budget: &Budget) -> Result<(WeightDistribution, Option<Vec<FieldElement>>)> {
    budget.check(c.q(), c.k(), c.n())?;
    let (hist, witness) = enumerate(c);
    Ok((WeightDistribution::from_hist(c.n(), c.q(), c.k(), &hist), witness))
}

/// Enumerates the code itself.
pub fn weight_distribution_direct(c: &CodeInstance, budget: &Budget) -> Result<WeightDistribution> {
    direct(c, budget).map(|(d, _)| d)
}

/// Enumerates the dual code and applies the MacWilliams transform.
pub fn weight_distribution_via_dual(c: &CodeInstance, budget: &Budget) -> Result<WeightDistribution> {
    let d = dual_code(c);
    budget.check(d.q(), d.k(), d.n())?;
    macwilliams(&weight_distribution_direct(&d, budget)?)
}

/// Exact distribution, enumerating whichever of the code and its dual is
/// smaller.
pub fn weight_distribution(c: &CodeInstance, budget: &Budget) -> Result<WeightDistribution> {
    if c.k() <= c.n() - c.k() {
        weight_distribution_direct(c, budget)
    } else {
        weight_distribution_via_dual(c, budget)
    }
}

/// Krawtchouk values K_j(i) for j = 0..=n over GF(q), from
/// (j+1) K_{j+1} = ((n-j)(q-1) + j - q i) K_j - (q-1)(n-j+1) K_{j-1}.
pub fn krawtchouk_row(n: u64, q: u64, i: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    out.push(cur.clone());
    let (n, q, i) = (n as i64, q as i64, i as i64);
    for j in 0..n {
        let a = (n - j) * (q - 1) + j - q * i;
        let b = (q - 1) * (n - j + 1);
        let next: BigInt = (&cur * a - &prev * b) / (j + 1);
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    out
}

/// Distribution of the dual of a code with distribution `b`:
/// A_j = q^{-k} sum_i B_i K_j(i). Non-integral or negative results are
/// reported as `MacWilliamsInexact`.
pub fn macwilliams(b: &WeightDistribution) -> Result<WeightDistribution> {
    let n = b.n;
    let mut acc = vec![BigInt::zero(); n as usize + 1];
    for (&i, bi) in &b.counts {
        let bi = BigInt::from(bi.clone());
        for (a, kv) in acc.iter_mut().zip(krawtchouk_row(n, b.q, i)) {
            *a += &bi * kv;
        }
    }
    let size = BigInt::from(big_pow(b.q, b.k as u32));
    let mut counts = BTreeMap::new();
    for (j, a) in acc.into_iter().enumerate() {
        let (quot, rem) = a.div_rem(&size);
        if !rem.is_zero() || quot.is_negative() {
            return Err(Error::MacWilliamsInexact);
        }
        if !quot.is_zero() {
            counts.insert(j as u64, quot.to_biguint().expect("non-negative"));
        }
    }
    Ok(WeightDistribution { n, q: b.q, k: n - b.k, counts })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistanceResult {
    /// d is exact; the witness is a codeword of weight d when one was found.
    Exact { d: u64, witness: Option<Vec<FieldElement>> },
    /// lower from the BCH bound, upper from the lightest word found.
    Interval { lower: u64, upper: u64, witness: Option<Vec<FieldElement>> },
    /// The code is {0}.
    ZeroCode,
}

impl DistanceResult {
    pub fn exact(&self) -> Option<u64> {
        match self {
            DistanceResult::Exact { d, .. } => Some(*d),
            _ => None,
        }
    }

    pub fn lower(&self) -> Option<u64> {
        match self {
            DistanceResult::Exact { d, .. } => Some(*d),
            DistanceResult::Interval { lower, .. } => Some(*lower),
            DistanceResult::ZeroCode => None,
        }
    }

    pub fn upper(&self) -> Option<u64> {
        match self {
            DistanceResult::Exact { d, .. } => Some(*d),
            DistanceResult::Interval { upper, .. } => Some(*upper),
            DistanceResult::ZeroCode => None,
        }
    }

    pub fn witness(&self) -> Option<&[FieldElement]> {
        match self {
            DistanceResult::Exact { witness, .. } | DistanceResult::Interval { witness, .. } => witness.as_deref(),
            DistanceResult::ZeroCode => None,
        }
    }
}

pub fn min_distance(c: &CodeInstance, budget: &Budget) -> DistanceResult {
    min_distance_with(c, budget, &SearchConfig::default())
}

/// Exact distance when the smaller of the code and its dual fits the
/// budget, otherwise an interval from the BCH bound and a search.
pub fn min_distance_with(c: &CodeInstance, budget: &Budget, search: &SearchConfig) -> DistanceResult {
    if c.k() == 0 {
        return DistanceResult::ZeroCode;
    }
    if c.k() <= c.n() - c.k() {
        if let Ok((dist, witness)) = direct(c, budget) {
            let d = dist.min_positive().expect("k > 0");
            return DistanceResult::Exact { d, witness };
        }
    } else if let Ok(dist) = weight_distribution_via_dual(c, budget) {
        let d = dist.min_positive().expect("k > 0");
        let witness = light_word(c, search).filter(|(w, _)| *w == d).map(|(_, v)| v);
        return DistanceResult::Exact { d, witness };
    }
    let (upper, witness) = match light_word(c, search) {
        Some((w, v)) => (w, Some(v)),
        None => (c.n(), None),
    };
    DistanceResult::Interval { lower: bch_bound(c), upper, witness }
}

/// Lightest codeword among: the generator; systematic codewords whose
/// information part has weight 1 or 2; and seeded random messages.
///
/// Systematic rows are r_i = x^{n-k+i} mod g, and the codeword for message
/// m is sum m_i (x^{n-k+i} - r_i), of weight wt(m) + wt(sum m_i r_i).
pub fn light_word(c: &CodeInstance, cfg: &SearchConfig) -> Option<(u64, Vec<FieldElement>)> {
    let (n, k) = (c.n() as usize, c.k() as usize);
    if k == 0 {
        return None;
    }
    let f = c.field();
    let q = c.q() as usize;
    let r = n - k;
    let add = small_add_table(f).expect("q <= 256");
    let mul = mul_table(f);
    let g = c.generator();
    let mut rows: Vec<Vec<u8>> = Vec::with_capacity(k);
    let mut cur = poly::divmod(f, &Polynomial::binomial(f, r, FieldElement::ZERO), g).ok()?.1;
    let xpoly = Polynomial::new(f.order(), vec![FieldElement::ZERO, FieldElement::ONE]);
    for _ in 0..k {
        rows.push((0..r).map(|i| to_u8(cur.coeff(i))).collect());
        cur = poly::divmod(f, &poly::mul(f, &cur, &xpoly).ok()?, g).ok()?.1;
    }
    let wt = |v: &[u8]| v.iter().filter(|&&x| x != 0).count() as u64;
    let codeword = |msg: &[u8], parity: &[u8]| -> Vec<FieldElement> {
        let mut out: Vec<FieldElement> = parity.iter().map(|&x| f.neg(FieldElement(x as u64))).collect();
        out.extend(msg.iter().map(|&x| FieldElement(x as u64)));
        out
    };
    let unit_msg = |i: usize, j: Option<(usize, u8)>| {
        let mut m = vec![0u8; k];
        m[i] = 1;
        if let Some((j, b)) = j {
            m[j] = b;
        }
        m
    };

    let mut best: (u64, Vec<FieldElement>) = {
        let mut v: Vec<FieldElement> = g.coeffs().to_vec();
        v.resize(n, FieldElement::ZERO);
        (g.weight() as u64, v)
    };
    let mut consider = |w: u64, make: &dyn Fn() -> Vec<FieldElement>| {
        if w < best.0 {
            best = (w, make());
        }
    };
    for (i, row) in rows.iter().enumerate() {
        consider(1 + wt(row), &|| codeword(&unit_msg(i, None), row));
    }
    let mut ops_left = cfg.max_symbol_ops;
    let pair_ops = (k as u64 * k.saturating_sub(1) as u64 / 2) * (q as u64 - 1) * r as u64;
    if pair_ops <= ops_left {
        ops_left -= pair_ops;
        let pair_best = (0..k)
            .into_par_iter()
            .filter_map(|i| {
                let mut local: Option<(u64, usize, usize, u8)> = None;
                let mut buf = vec![0u8; r];
                for j in i + 1..k {
                    for b in 1..q {
                        for (x, (&u, &v)) in buf.iter_mut().zip(rows[i].iter().zip(&rows[j])) {
                            *x = add[u as usize * q + mul[b * q + v as usize] as usize];
                        }
                        let w = 2 + wt(&buf);
                        if local.is_none_or(|(lw, ..)| w < lw) {
                            local = Some((w, i, j, b as u8));
                        }
                    }
                }
                local
            })
            .min_by_key(|&(w, i, j, b)| (w, i, j, b));
        if let Some((w, i, j, b)) = pair_best {
            let m = unit_msg(i, Some((j, b)));
            consider(w, &|| {
                let mut par = vec![0u8; r];
                for (idx, &mi) in m.iter().enumerate() {
                    for (x, &v) in par.iter_mut().zip(&rows[idx]) {
                        *x = add[*x as usize * q + mul[mi as usize * q + v as usize] as usize];
                    }
                }
                codeword(&m, &par)
            });
        }
    }
    let per_msg = (k * r.max(1)) as u64;
    let count = cfg.random_messages.min(ops_left / per_msg.max(1));
    const CHUNK: u64 = 1000;
    let chunks = count.div_ceil(CHUNK);
    let rand_best = (0..chunks)
        .into_par_iter()
        .filter_map(|ch| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(ch));
            let mut local: Option<(u64, u64, Vec<u8>, Vec<u8>)> = None;
            let mut par = vec![0u8; r];
            let mut m = vec![0u8; k];
            for idx in 0..CHUNK.min(count - ch * CHUNK) {
                for x in m.iter_mut() {
                    *x = rng.gen_range(0..q) as u8;
                }
                let mw = wt(&m);
                if mw == 0 {
                    continue;
                }
                par.iter_mut().for_each(|x| *x = 0);
                for (mi, row) in m.iter().zip(&rows) {
                    if *mi == 0 {
                        continue;
                    }
                    for (x, &v) in par.iter_mut().zip(row) {
                        *x = add[*x as usize * q + mul[*mi as usize * q + v as usize] as usize];
                    }
                }
                let w = mw + wt(&par);
                if local.as_ref().is_none_or(|(lw, ..)| w < *lw) {
                    local = Some((w, idx, m.clone(), par.clone()));
                }
            }
            local.map(|(w, idx, m, p)| (w, ch, idx, m, p))
        })
        .min_by_key(|(w, ch, idx, ..)| (*w, *ch, *idx));
    if let Some((w, _, _, m, p)) = rand_best {
        consider(w, &|| codeword(&m, &p));
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_code, is_codeword, CodeSpec};
    use num_traits::ToPrimitive;

    fn neg(q: u64, n: u64, delta: u64) -> CodeInstance {
        build_code(&CodeSpec::negacyclic(q, n, delta)).unwrap()
    }

    /// Independent oracle: multiply every message by g.
    fn brute(c: &CodeInstance) -> BTreeMap<u64, u64> {
        let k = c.k() as u32;
        let mut out = BTreeMap::new();
        for idx in 0..c.q().pow(k) {
            let msg: Vec<FieldElement> = (0..k).map(|i| FieldElement(idx / c.q().pow(i) % c.q())).collect();
            let cw = crate::codes::encode(c, &msg).unwrap();
            *out.entry(cw.iter().filter(|x| !x.is_zero()).count() as u64).or_insert(0) += 1;
        }
        out
    }

    fn as_u64(d: &WeightDistribution) -> BTreeMap<u64, u64> {
        d.counts.iter().map(|(&w, c)| (w, c.to_u64().unwrap())).collect()
    }

    #[test]
    fn gray_walk_matches_message_loop() {
        for c in [neg(3, 20, 8), neg(3, 20, 6), neg(9, 10, 5), neg(5, 13, 8)] {
            let d = weight_distribution_direct(&c, &Budget::default()).unwrap();
            assert_eq!(as_u64(&d), brute(&c));
            assert!(d.is_consistent());
        }
    }

    #[test]
    fn direct_and_dual_agree() {
        let b = Budget::default();
        for c in [neg(3, 20, 4), neg(3, 20, 3), neg(5, 13, 3), neg(7, 12, 3), neg(9, 10, 3)] {
            let x = weight_distribution_direct(&c, &b).unwrap();
            let y = weight_distribution_via_dual(&c, &b).unwrap();
            assert_eq!(x, y);
        }
    }

    #[test]
    fn small_distances() {
        let b = Budget::default();
        let c = neg(3, 20, 4);
        match min_distance(&c, &b) {
            DistanceResult::Exact { d, witness } => {
                assert_eq!(d, 4);
                let w = witness.unwrap();
                assert!(is_codeword(&c, &w).unwrap());
                assert_eq!(w.iter().filter(|x| !x.is_zero()).count(), 4);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(min_distance(&neg(3, 20, 8), &b).exact(), Some(15));
        assert_eq!(min_distance(&neg(3, 20, 2), &b).exact(), Some(3));
    }

    #[test]
    fn krawtchouk_small_values() {
        // K_j(0) = C(n, j)(q-1)^j
        let row = krawtchouk_row(5, 3, 0);
        let want: Vec<BigInt> =
            (0..=5u64).map(|j| BigInt::from(crate::arith::binomial(5, j)) * BigInt::from(2u64.pow(j as u32))).collect();
        assert_eq!(row, want);
        // direct sum for i = 2
        let row = krawtchouk_row(5, 3, 2);
        for (j, kv) in row.iter().enumerate() {
            let j = j as u64;
            let mut s = BigInt::zero();
            for t in 0..=j {
                let term = BigInt::from(crate::arith::binomial(2, t))
                    * BigInt::from(crate::arith::binomial(3, j - t))
                    * BigInt::from(2i64).pow((j - t) as u32);
                if t % 2 == 0 {
                    s += term
                } else {
                    s -= term
                }
            }
            assert_eq!(*kv, s);
        }
    }

    #[test]
    fn inexact_transform_is_an_error() {
        let mut counts = BTreeMap::new();
        counts.insert(0, BigUint::one());
        counts.insert(1, BigUint::one());
        let fake = WeightDistribution { n: 3, q: 3, k: 1, counts };
        assert_eq!(macwilliams(&fake), Err(Error::MacWilliamsInexact));
    }

    #[test]
    fn json_round_trip_and_order() {
        let d = weight_distribution_direct(&neg(3, 20, 8), &Budget::default()).unwrap();
        let s = d.to_json();
        assert!(s.starts_with("{\"n\":20,\"q\":3,\"k\":2,\"counts\":{\"0\":\"1\""));
        assert_eq!(WeightDistribution::from_json(&s).unwrap(), d);
        let mut counts = BTreeMap::new();
        for w in [0u64, 9, 10, 100] {
            counts.insert(w, BigUint::one());
        }
        let d = WeightDistribution { n: 100, q: 3, k: 0, counts };
        assert!(d.to_json().contains("\"0\":\"1\",\"9\":\"1\",\"10\":\"1\",\"100\":\"1\""));
    }

    #[test]
    fn budget_errors_and_interval_fallback() {
        let c = neg(3, 20, 4);
        let tiny = Budget { max_words: 10, max_symbol_ops: 1000 };
        assert!(matches!(weight_distribution(&c, &tiny), Err(Error::BudgetExceeded { .. })));
        match min_distance(&c, &tiny) {
            DistanceResult::Interval { lower, upper, witness } => {
                assert!(lower <= 4 && upper >= 4 && lower <= upper);
                let w = witness.unwrap();
                assert!(is_codeword(&c, &w).unwrap());
                assert_eq!(w.iter().filter(|x| !x.is_zero()).count() as u64, upper);
            }
            other => panic!("{other:?}"),
        }
    }
}

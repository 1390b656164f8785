//! Negacyclic and cyclic BCH codes over GF(q), q odd and at most 256.
//!
//! A negacyclic code of length n lives in GF(q)[x]/(x^n + 1); its zeros are
//! odd powers β^z of a primitive 2n-th root of unity β, so zero exponents are
//! odd residues modulo 2n. A cyclic code lives in GF(q)[x]/(x^n - 1) with
//! zeros γ^z, γ a primitive n-th root, z taken modulo n.

pub mod trace;
pub mod weights;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::arith::{big_pow, gcd, inv_mod, mul_mod, mult_order, odd_prime_power};
use crate::error::{Error, Result};
use crate::field::poly::{self, Polynomial};
use crate::field::{build_field, nth_root_of_unity, Embedding, FieldElement, FieldTable};

pub use trace::trace_code_weight;
pub use weights::{
    krawtchouk_row, light_word, macwilliams, min_distance, min_distance_with, weight_distribution,
    weight_distribution_direct, weight_distribution_via_dual, Budget, DistanceResult, SearchConfig, WeightDistribution,
};

/// Largest ambient field GF(q^M) a code may need for its roots of unity.
pub const AMBIENT_CAP: u64 = 1 << 24;

/// Largest symbol alphabet supported by the enumeration kernels.
pub const MAX_Q: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    /// x^n - 1
    Cyclic,
    /// x^n + 1
    Negacyclic,
}

impl Unit {
    pub fn element(self, f: &FieldTable) -> FieldElement {
        match self {
            Unit::Cyclic => FieldElement::ONE,
            Unit::Negacyclic => f.neg(FieldElement::ONE),
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Unit::Cyclic => 1,
            Unit::Negacyclic => -1,
        }
    }
}

/// Designed parameters of a BCH code.
///
/// Negacyclic codes take the zeros β^{1+2(b+i)} for 0 <= i <= δ-2; cyclic
/// codes take γ^{b+1}, ..., γ^{b+δ-1}, so b = 0 is narrow-sense in both cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeSpec {
    pub q: u64,
    pub n: u64,
    pub unit: Unit,
    pub delta: u64,
    pub b: u64,
}

impl CodeSpec {
    pub fn negacyclic(q: u64, n: u64, delta: u64) -> Self {
        CodeSpec { q, n, unit: Unit::Negacyclic, delta, b: 0 }
    }

    pub fn cyclic(q: u64, n: u64, delta: u64) -> Self {
        CodeSpec { q, n, unit: Unit::Cyclic, delta, b: 0 }
    }

    /// Modulus of the zero exponents: 2n or n.
    pub fn exponent_modulus(&self) -> u64 {
        match self.unit {
            Unit::Negacyclic => 2 * self.n,
            Unit::Cyclic => self.n,
        }
    }

    pub fn designed_exponents(&self) -> Vec<u64> {
        let big_n = self.exponent_modulus();
        (0..self.delta.saturating_sub(1))
            .map(|i| match self.unit {
                Unit::Negacyclic => (1 + 2 * ((self.b + i) % self.n)) % big_n,
                Unit::Cyclic => (self.b + 1 + i) % big_n,
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct CodeInstance {
    q: u64,
    n: u64,
    unit: Unit,
    designed: Option<CodeSpec>,
    modulus: u64,
    zeros: Vec<u64>,
    generator: Polynomial,
    k: u64,
    ambient: Arc<FieldTable>,
    embedding: Arc<Embedding>,
    beta: FieldElement,
}

impl CodeInstance {
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn k(&self) -> u64 {
        self.k
    }
    pub fn unit(&self) -> Unit {
        self.unit
    }
    /// None for codes not built from designed parameters, such as duals.
    pub fn designed(&self) -> Option<&CodeSpec> {
        self.designed.as_ref()
    }
    pub fn exponent_modulus(&self) -> u64 {
        self.modulus
    }
    /// Sorted zero exponents.
    pub fn zeros(&self) -> &[u64] {
        &self.zeros
    }
    pub fn generator(&self) -> &Polynomial {
        &self.generator
    }
    /// GF(q), the symbol field.
    pub fn field(&self) -> &FieldTable {
        self.embedding.subfield()
    }
    pub fn ambient(&self) -> &FieldTable {
        &self.ambient
    }
    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }
    /// β (negacyclic, order 2n) or γ (cyclic, order n) in the ambient field.
    pub fn root(&self) -> FieldElement {
        self.beta
    }

    pub fn is_zero_exponent(&self, z: u64) -> bool {
        self.zeros.binary_search(&(z % self.modulus)).is_ok()
    }

    /// g(β^z) computed in the ambient field.
    pub fn generator_at(&self, z: u64) -> FieldElement {
        let x = self.ambient.pow(self.beta, z % self.modulus);
        self.embedding.eval(&self.ambient, &self.generator, x)
    }

    /// Exponents that may carry zeros: odd residues mod 2n, or all residues mod n.
    pub fn exponent_domain(&self) -> impl Iterator<Item = u64> {
        let (m, neg) = (self.modulus, self.unit == Unit::Negacyclic);
        (0..m).filter(move |z| !neg || z % 2 == 1)
    }

    /// Exponents of the nonzeros (domain minus zeros), sorted.
    pub fn nonzeros(&self) -> Vec<u64> {
        self.exponent_domain().filter(|&z| !self.is_zero_exponent(z)).collect()
    }

    /// x^n - unit as a polynomial over GF(q).
    pub fn modulus_polynomial(&self) -> Polynomial {
        Polynomial::binomial(self.field(), self.n as usize, self.unit.element(self.field()))
    }

    /// h(x) = (x^n - unit)/g(x).
    pub fn check_polynomial(&self) -> Polynomial {
        poly::divmod(self.field(), &self.modulus_polynomial(), &self.generator).expect("generator is nonzero").0
    }
}

struct Ambient {
    ambient: Arc<FieldTable>,
    embedding: Arc<Embedding>,
    beta: FieldElement,
}

fn check_q(q: u64) -> Result<(u64, u32)> {
    let pe = odd_prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q > MAX_Q {
        return Err(Error::InvalidArgument(format!("q = {q} exceeds the symbol cap {MAX_Q}")));
    }
    Ok(pe)
}

/// Size of the field holding the 2n-th (negacyclic) or n-th (cyclic) roots
/// of unity, or None if q and n are not coprime or it overflows.
pub fn ambient_size(q: u64, n: u64, unit: Unit) -> Option<u64> {
    if n < 2 || gcd(n, q) != 1 {
        return None;
    }
    let big_n = match unit {
        Unit::Negacyclic => 2 * n,
        Unit::Cyclic => n,
    };
    let degree = u32::try_from(mult_order(q, big_n)?).ok()?;
    crate::arith::checked_pow(q, degree)
}

fn ambient_for(q: u64, n: u64, unit: Unit) -> Result<Ambient> {
    let (p, e) = check_q(q)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("length {n} is below 2")));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let big_n = match unit {
        Unit::Negacyclic => 2 * n,
        Unit::Cyclic => n,
    };
    let degree = mult_order(q, big_n).ok_or(Error::NotCoprime { n, q })?;
    let too_large = || Error::AmbientFieldTooLarge { q, degree: degree as u32, cap: AMBIENT_CAP };
    let size = u32::try_from(degree).ok().and_then(|d| crate::arith::checked_pow(q, d)).ok_or_else(too_large)?;
    if size > AMBIENT_CAP {
        return Err(too_large());
    }
    let (ambient, embedding) = cached_fields(p, e * degree as u32, q, size)?;
    let beta = nth_root_of_unity(&ambient, big_n)?;
    Ok(Ambient { ambient, embedding, beta })
}

type FieldPair = (Arc<FieldTable>, Arc<Embedding>);
type FieldCache = Mutex<HashMap<(u64, u32, u64), FieldPair>>;

/// Ambient fields up to 2^20 elements are built once per process.
fn cached_fields(p: u64, degree: u32, q: u64, size: u64) -> Result<FieldPair> {
    static CACHE: OnceLock<FieldCache> = OnceLock::new();
    let build = || -> Result<FieldPair> {
        let ambient = build_field(p, degree)?;
        let embedding = Embedding::new(&ambient, q)?;
        Ok((Arc::new(ambient), Arc::new(embedding)))
    };
    if size > 1 << 20 {
        return build();
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&(p, degree, q)) {
        return Ok(hit.clone());
    }
    let pair = build()?;
    cache.lock().expect("cache lock").insert((p, degree, q), pair.clone());
    Ok(pair)
}

/// Marks the coset of s modulo `big_n` in `mark`, returning its elements.
fn mark_coset(s: u64, big_n: u64, q: u64, mark: &mut [bool]) -> Vec<u64> {
    let mut out = vec![s];
    mark[s as usize] = true;
    let mut x = mul_mod(s, q, big_n);
    while x != s {
        mark[x as usize] = true;
        out.push(x);
        x = mul_mod(x, q, big_n);
    }
    out
}

/// Builds the code whose zero set is the union of the cosets of `seeds`.
/// g is the product of the distinct minimal polynomials, or, when the zeros
/// outnumber the nonzeros, (x^n - unit) divided by the product over the
/// nonzero cosets. Either way the division x^n - unit by g is checked.
fn assemble(q: u64, n: u64, unit: Unit, seeds: &[u64], designed: Option<CodeSpec>) -> Result<CodeInstance> {
    let amb = ambient_for(q, n, unit)?;
    let big_n = match unit {
        Unit::Negacyclic => 2 * n,
        Unit::Cyclic => n,
    };
    let neg = unit == Unit::Negacyclic;
    let mut in_z = vec![false; big_n as usize];
    let mut zero_reps = Vec::new();
    for &s in seeds {
        if !in_z[s as usize] {
            mark_coset(s, big_n, q, &mut in_z);
            zero_reps.push(s);
        }
    }
    let zeros: Vec<u64> = (0..big_n).filter(|&z| in_z[z as usize]).collect();
    let f = amb.embedding.subfield();
    let min_poly = |s: u64| amb.embedding.minimal_polynomial(&amb.ambient, amb.ambient.pow(amb.beta, s));
    let x_n = Polynomial::binomial(f, n as usize, unit.element(f));
    let generator = if 2 * zeros.len() as u64 <= n {
        let mut g = Polynomial::one(f.order());
        for &s in &zero_reps {
            g = poly::mul(f, &g, &min_poly(s)?)?;
        }
        let (_, r) = poly::divmod(f, &x_n, &g)?;
        if !r.is_zero() {
            return Err(Error::PreconditionViolated("generator does not divide x^n - unit".into()));
        }
        g
    } else {
        let mut seen = in_z.clone();
        let mut h = Polynomial::one(f.order());
        for z in 0..big_n {
            if (neg && z % 2 == 0) || seen[z as usize] {
                continue;
            }
            mark_coset(z, big_n, q, &mut seen);
            h = poly::mul(f, &h, &min_poly(z)?)?;
        }
        let (g, r) = poly::divmod(f, &x_n, &h)?;
        if !r.is_zero() {
            return Err(Error::PreconditionViolated("generator does not divide x^n - unit".into()));
        }
        g
    };
    let k = n - zeros.len() as u64;
    debug_assert_eq!(generator.degree(), Some(zeros.len()));
    Ok(CodeInstance {
        q,
        n,
        unit,
        designed,
        modulus: big_n,
        zeros,
        generator,
        k,
        ambient: amb.ambient,
        embedding: amb.embedding,
        beta: amb.beta,
    })
}

pub fn build_code(spec: &CodeSpec) -> Result<CodeInstance> {
    check_q(spec.q)?;
    if spec.delta < 2 || spec.delta > spec.n {
        return Err(Error::InvalidDesignedDistance { delta: spec.delta, max: spec.n });
    }
    assemble(spec.q, spec.n, spec.unit, &spec.designed_exponents(), Some(*spec))
}

/// Code whose zeros are the union of the cosets of the given exponents.
/// Negacyclic exponents must be odd.
pub fn code_from_zeros(q: u64, n: u64, unit: Unit, exponents: &[u64]) -> Result<CodeInstance> {
    let big_n = match unit {
        Unit::Negacyclic => 2 * n,
        Unit::Cyclic => n,
    };
    let mut seeds = Vec::with_capacity(exponents.len());
    for &z in exponents {
        let z = z % big_n.max(1);
        if unit == Unit::Negacyclic && z % 2 == 0 {
            return Err(Error::InvalidArgument(format!("negacyclic zero exponent {z} is even")));
        }
        seeds.push(z);
    }
    assemble(q, n, unit, &seeds, None)
}

pub fn dimension(c: &CodeInstance) -> u64 {
    c.k
}

/// Longest circular run of set positions in `set` after relabelling index
/// j as j * scale^{-1} mod n (scale = 1 gives plain runs).
fn longest_run(set: &[bool], scale_inv: u64) -> u64 {
    let n = set.len() as u64;
    let relabel = |j: u64| mul_mod(j, scale_inv, n) as usize;
    let mut mapped = vec![false; set.len()];
    for j in 0..n {
        if set[j as usize] {
            mapped[relabel(j)] = true;
        }
    }
    let Some(gap) = mapped.iter().position(|&b| !b) else {
        return n;
    };
    let (mut best, mut cur) = (0u64, 0u64);
    for i in 1..=set.len() {
        if mapped[(gap + i) % set.len()] {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best
}

/// Zero exponents as indices j in [0, n): z = 1 + 2j (negacyclic) or z = j.
fn run_indices(c: &CodeInstance) -> Vec<bool> {
    let mut set = vec![false; c.n as usize];
    for &z in &c.zeros {
        let j = match c.unit {
            Unit::Negacyclic => (z - 1) / 2,
            Unit::Cyclic => z,
        };
        set[j as usize] = true;
    }
    set
}

/// One plus the longest run of consecutive zero exponents (step 2 among
/// odd residues mod 2n, or step 1 mod n), with wraparound. For the zero
/// code this is n + 1.
pub fn bch_bound(c: &CodeInstance) -> u64 {
    longest_run(&run_indices(c), 1) + 1
}

/// Like [`bch_bound`], but also tries every step k with gcd(k, n) = 1.
pub fn bch_bound_scaled(c: &CodeInstance) -> u64 {
    let set = run_indices(c);
    (1..c.n.max(2))
        .filter(|&s| gcd(s, c.n) == 1)
        .map(|s| longest_run(&set, inv_mod(s, c.n).unwrap_or(1)))
        .max()
        .unwrap_or(0)
        + 1
}

fn check_symbols(c: &CodeInstance, v: &[FieldElement]) -> Result<()> {
    if let Some(bad) = v.iter().find(|x| x.0 >= c.q) {
        return Err(Error::InvalidArgument(format!("symbol {} is not in GF({})", bad.0, c.q)));
    }
    Ok(())
}

/// Codeword m(x) g(x), as n coefficients.
pub fn encode(c: &CodeInstance, message: &[FieldElement]) -> Result<Vec<FieldElement>> {
    if message.len() as u64 != c.k {
        return Err(Error::LengthMismatch { expected: c.k as usize, got: message.len() });
    }
    check_symbols(c, message)?;
    let m = Polynomial::new(c.q, message.to_vec());
    let prod = poly::mul(c.field(), &m, &c.generator)?;
    Ok((0..c.n as usize).map(|i| prod.coeff(i)).collect())
}

pub fn is_codeword(c: &CodeInstance, v: &[FieldElement]) -> Result<bool> {
    if v.len() as u64 != c.n {
        return Err(Error::LengthMismatch { expected: c.n as usize, got: v.len() });
    }
    check_symbols(c, v)?;
    let (_, r) = poly::divmod(c.field(), &Polynomial::new(c.q, v.to_vec()), &c.generator)?;
    Ok(r.is_zero())
}

/// Dual code, generated by the monic reciprocal of the check polynomial.
/// Its zeros are the negated nonzeros of `c`.
pub fn dual_code(c: &CodeInstance) -> CodeInstance {
    let f = c.field();
    let generator = poly::reciprocal(f, &c.check_polynomial()).expect("same field");
    let mut zeros: Vec<u64> = c.nonzeros().into_iter().map(|z| (c.modulus - z) % c.modulus).collect();
    zeros.sort_unstable();
    CodeInstance {
        q: c.q,
        n: c.n,
        unit: c.unit,
        designed: None,
        modulus: c.modulus,
        k: c.n - zeros.len() as u64,
        zeros,
        generator,
        ambient: c.ambient.clone(),
        embedding: c.embedding.clone(),
        beta: c.beta,
    }
}

/// Number of codewords q^k.
pub fn code_size(c: &CodeInstance) -> num_bigint::BigUint {
    big_pow(c.q, c.k as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn neg(q: u64, n: u64, delta: u64) -> CodeInstance {
        build_code(&CodeSpec::negacyclic(q, n, delta)).unwrap()
    }

    #[test]
    fn small_negacyclic_examples() {
        let c = neg(3, 20, 4);
        assert_eq!(c.k(), 14);
        let mut want: Vec<u64> = vec![1, 3, 9, 27, 5, 15];
        want.sort_unstable();
        assert_eq!(c.zeros(), want.as_slice());
        assert!(bch_bound(&c) >= 4);
        let c = neg(3, 20, 8);
        assert_eq!((c.zeros().len(), c.k()), (18, 2));
        assert_eq!(bch_bound(&c), 15);
        assert_eq!(neg(3, 61, 2).k(), 51);
        assert_eq!(neg(5, 31, 3).k(), 25);
    }

    #[test]
    fn cyclic_examples() {
        let c = build_code(&CodeSpec::cyclic(3, 121, 2)).unwrap();
        assert_eq!(c.k(), 116);
        assert_eq!(build_code(&CodeSpec::cyclic(3, 121, 41)).unwrap().k(), 16);
        // γ^1..γ^4 gives the cosets of 1, 2 and 4, 15 zeros in total.
        assert_eq!(build_code(&CodeSpec::cyclic(3, 121, 5)).unwrap().k(), 106);
        assert_eq!(build_code(&CodeSpec::cyclic(3, 121, 4)).unwrap().k(), 111);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            build_code(&CodeSpec::negacyclic(3, 20, 1)).unwrap_err(),
            Error::InvalidDesignedDistance { delta: 1, max: 20 }
        );
        assert!(matches!(build_code(&CodeSpec::negacyclic(3, 21, 2)), Err(Error::NotCoprime { n: 21, q: 3 })));
        assert!(matches!(build_code(&CodeSpec::negacyclic(3, 1000, 2)), Err(Error::AmbientFieldTooLarge { .. })));
    }

    #[test]
    fn bound_for_single_coset() {
        // 3 lies in the coset of 1, so the run 1, 3 gives 3.
        assert_eq!(bch_bound(&neg(3, 20, 2)), 3);
        // 7^3 ≡ -1 mod 172, so 171 and 1 wrap around into a run.
        assert_eq!(bch_bound(&neg(7, 86, 2)), 3);
        // The coset of 1 mod 62 under 5 is {1, 5, 25}: no run.
        assert_eq!(bch_bound(&neg(5, 31, 2)), 2);
        let c = neg(3, 20, 4);
        assert!(bch_bound_scaled(&c) >= bch_bound(&c));
    }

    #[test]
    fn encode_and_membership() {
        let c = neg(3, 20, 4);
        let f = c.field();
        let zero = vec![FieldElement::ZERO; 14];
        assert!(encode(&c, &zero).unwrap().iter().all(|x| x.is_zero()));
        let mut one = zero.clone();
        one[0] = FieldElement::ONE;
        let cw = encode(&c, &one).unwrap();
        assert_eq!(cw.iter().filter(|x| !x.is_zero()).count(), c.generator().weight());
        assert!(is_codeword(&c, &cw).unwrap());
        let mut e0 = vec![FieldElement::ZERO; 20];
        e0[0] = FieldElement::ONE;
        assert!(!is_codeword(&c, &e0).unwrap());
        assert!(matches!(encode(&c, &[]), Err(Error::LengthMismatch { expected: 14, got: 0 })));
        assert!(matches!(is_codeword(&c, &zero), Err(Error::LengthMismatch { .. })));
        assert_eq!(c.generator_at(1), FieldElement::ZERO);
        assert_ne!(c.generator_at(7), FieldElement::ZERO);
        let _ = f;
    }

    #[test]
    fn duals() {
        let c = neg(3, 61, 2);
        let d = dual_code(&c);
        assert_eq!(d.k(), 10);
        assert_eq!(d.generator().degree(), Some(d.zeros().len()));
        for &z in d.zeros() {
            assert_eq!(d.generator_at(z), FieldElement::ZERO);
        }
        let dd = dual_code(&d);
        assert_eq!(dd.generator(), c.generator());
        assert_eq!(dd.zeros(), c.zeros());
        // generator rows are orthogonal
        let f = c.field();
        let g = c.generator();
        let h = d.generator();
        for shift in 0..3usize {
            let mut s = FieldElement::ZERO;
            for i in 0..61usize {
                let a = if i >= shift { h.coeff(i - shift) } else { FieldElement::ZERO };
                s = f.add(s, f.mul(g.coeff(i), a));
            }
            assert_eq!(s, FieldElement::ZERO);
        }
    }

    #[test]
    fn zero_set_constructor_matches_designed() {
        let a = neg(5, 31, 3);
        let b = code_from_zeros(5, 31, Unit::Negacyclic, &[1, 3]).unwrap();
        assert_eq!(a.generator(), b.generator());
        assert!(code_from_zeros(5, 31, Unit::Negacyclic, &[2]).is_err());
    }

    fn spec_strategy() -> impl Strategy<Value = CodeSpec> {
        (prop::sample::select(vec![3u64, 5, 7, 9, 11, 13, 25, 27]), 2u64..120, any::<bool>(), 2u64..40, 0u64..10)
            .prop_filter_map("valid", |(q, n, cyc, d, b)| {
                let unit = if cyc { Unit::Cyclic } else { Unit::Negacyclic };
                let spec = CodeSpec { q, n, unit, delta: d.min(n), b };
                let small = mult_order(q, spec.exponent_modulus())
                    .and_then(|d| crate::arith::checked_pow(q, d as u32))
                    .is_some_and(|size| size <= 1 << 16);
                (gcd(n, q) == 1 && small).then_some(spec)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn generator_divides_binomial(spec in spec_strategy()) {
            match build_code(&spec) {
                Ok(c) => {
                    let (_, r) = poly::divmod(c.field(), &c.modulus_polynomial(), c.generator()).unwrap();
                    prop_assert!(r.is_zero());
                    prop_assert_eq!(c.k(), c.n() - c.zeros().len() as u64);
                    prop_assert_eq!(c.generator().degree(), Some(c.zeros().len()));
                    prop_assert!(bch_bound(&c) >= spec.delta);
                    for z in spec.designed_exponents() {
                        prop_assert!(c.is_zero_exponent(z));
                    }
                }
                Err(Error::AmbientFieldTooLarge { .. }) => {}
                Err(e) => prop_assert!(false, "{e}"),
            }
        }
    }
}

//! Runs a leader classifier over its whole domain and checks every verdict
//! and size prediction against orbit computation.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::lemmas::{
    bound_u64, interval_status, DivisorClassifier, HalfQm1OddClassifier, HalfQp1Classifier, OddHalfQm1EvenClassifier,
    OddHalfQp1Classifier,
};
use super::{coset_size, is_leader, LeaderStatus, Verdict};
use crate::arith::big_pow;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClassifierKind {
    /// n = (q^m-1)/λ, λ | q-1, m even.
    Divisor,
    /// n = (q^m+1)/2, m odd.
    HalfQp1,
    /// Odd residues, n = (q^m-1)/2, m even.
    OddHalfQm1Even,
    /// n = (q^m-1)/2, m odd.
    HalfQm1Odd,
    /// Odd residues, n = (q^m+1)/2, q ≡ 3 (mod 4), m odd.
    OddHalfQp1,
    /// Interval test modulo q^m + 1.
    Qp1Interval,
}

impl ClassifierKind {
    pub const ALL: [ClassifierKind; 6] = [
        ClassifierKind::Divisor,
        ClassifierKind::HalfQp1,
        ClassifierKind::OddHalfQm1Even,
        ClassifierKind::HalfQm1Odd,
        ClassifierKind::OddHalfQp1,
        ClassifierKind::Qp1Interval,
    ];

    pub fn key(self) -> &'static str {
        match self {
            ClassifierKind::Divisor => "divisor",
            ClassifierKind::HalfQp1 => "half-qp1",
            ClassifierKind::OddHalfQm1Even => "odd-half-qm1-even",
            ClassifierKind::HalfQm1Odd => "half-qm1-odd",
            ClassifierKind::OddHalfQp1 => "odd-half-qp1",
            ClassifierKind::Qp1Interval => "qp1-interval",
        }
    }

    /// Short alias kept for command-line compatibility.
    pub fn alias(self) -> &'static str {
        match self {
            ClassifierKind::Divisor => "lemma3",
            ClassifierKind::HalfQp1 => "lemma5",
            ClassifierKind::OddHalfQm1Even => "lemma7",
            ClassifierKind::HalfQm1Odd => "lemma8",
            ClassifierKind::OddHalfQp1 => "lemma10",
            ClassifierKind::Qp1Interval => "lemma11",
        }
    }

    pub fn odd_only(self) -> bool {
        matches!(self, ClassifierKind::OddHalfQm1Even | ClassifierKind::OddHalfQp1)
    }
}

impl fmt::Display for ClassifierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for ClassifierKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        ClassifierKind::ALL
            .into_iter()
            .find(|k| k.key() == s || k.alias() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown classifier {s}")))
    }
}

enum Inner {
    Divisor(DivisorClassifier),
    HalfQp1(HalfQp1Classifier),
    OddHalfQm1Even(OddHalfQm1EvenClassifier),
    HalfQm1Odd(HalfQm1OddClassifier),
    OddHalfQp1(OddHalfQp1Classifier),
    Qp1Interval,
}

pub struct Classifier {
    kind: ClassifierKind,
    q: u64,
    m: u32,
    modulus: u64,
    bound: u64,
    inner: Inner,
}

impl Classifier {
    /// `lambda` is used only by the divisor classifier.
    pub fn new(kind: ClassifierKind, q: u64, m: u32, lambda: u64) -> Result<Self> {
        let too_big = || Error::PreconditionViolated(format!("modulus for q = {q}, m = {m} does not fit in 64 bits"));
        let (inner, modulus, bound) = match kind {
            ClassifierKind::Divisor => {
                let c = DivisorClassifier::new(q, m, lambda)?;
                let (n, b) = (c.modulus(), c.bound().clone());
                (Inner::Divisor(c), n, b)
            }
            ClassifierKind::HalfQp1 => {
                let c = HalfQp1Classifier::new(q, m)?;
                let (n, b) = (c.modulus(), c.bound().clone());
                (Inner::HalfQp1(c), n, b)
            }
            ClassifierKind::OddHalfQm1Even => {
                let c = OddHalfQm1EvenClassifier::new(q, m)?;
                let (n, b) = (c.modulus(), c.bound().clone());
                (Inner::OddHalfQm1Even(c), n, b)
            }
            ClassifierKind::HalfQm1Odd => {
                let c = HalfQm1OddClassifier::new(q, m)?;
                let (n, b) = (c.modulus(), c.bound().clone());
                (Inner::HalfQm1Odd(c), n, b)
            }
            ClassifierKind::OddHalfQp1 => {
                let c = OddHalfQp1Classifier::new(q, m)?;
                let (n, b) = (c.modulus(), c.bound().clone());
                (Inner::OddHalfQp1(c), n, b)
            }
            ClassifierKind::Qp1Interval => {
                interval_status(0, q, m)?;
                let n = num_bigint::BigInt::from(big_pow(q, m)) + 1;
                let b = &n / 2;
                (Inner::Qp1Interval, n, b)
            }
        };
        let modulus = bound_u64(&modulus).ok_or_else(too_big)?;
        let bound = bound_u64(&bound).ok_or_else(too_big)?.min(modulus - 1);
        Ok(Classifier { kind, q, m, modulus, bound, inner })
    }

    pub fn kind(&self) -> ClassifierKind {
        self.kind
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Largest residue the classifier speaks about.
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn status(&self, i: u64) -> Result<LeaderStatus> {
        match &self.inner {
            Inner::Divisor(c) => c.status(i),
            Inner::HalfQp1(c) => c.status(i),
            Inner::OddHalfQm1Even(c) => c.status(i),
            Inner::HalfQm1Odd(c) => c.status(i),
            Inner::OddHalfQp1(c) => c.status(i),
            Inner::Qp1Interval => interval_status(i, self.q, self.m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyRow {
    pub i: u64,
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub predicted_size: Option<u64>,
    pub leader: bool,
    pub size: u64,
    pub sound: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub kind: ClassifierKind,
    pub q: u64,
    pub m: u32,
    pub modulus: u64,
    pub rows: Vec<ClassifyRow>,
}

impl ClassifyReport {
    pub fn violations(&self) -> impl Iterator<Item = &ClassifyRow> {
        self.rows.iter().filter(|r| !r.sound)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,verdict,witness,predicted_size,leader,size,sound\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{:?},{},{},{},{},{}\n",
                r.i,
                r.verdict,
                r.witness.as_deref().unwrap_or("").replace(',', ";"),
                r.predicted_size.map(|s| s.to_string()).unwrap_or_default(),
                r.leader,
                r.size,
                r.sound
            ));
        }
        out
    }
}

/// Classifies every admissible residue in [1, bound] and compares with the
/// orbit of each. Residues the classifier rejects (multiples of q, wrong
/// parity) are skipped. Fails with `ScanCapExceeded` above `cap`.
pub fn classify_scan(kind: ClassifierKind, q: u64, m: u32, lambda: u64, cap: u64) -> Result<ClassifyReport> {
    let c = Classifier::new(kind, q, m, lambda)?;
    let n = c.modulus();
    if n > cap {
        return Err(Error::ScanCapExceeded { n, cap });
    }
    let rows: Vec<ClassifyRow> = (1..=c.bound())
        .into_par_iter()
        .filter(|&i| i % q != 0 && (!kind.odd_only() || i % 2 == 1))
        .filter_map(|i| {
            let s = c.status(i).ok()?;
            let leader = is_leader(i, n, q);
            let size = coset_size(i, n, q);
            let verdict_ok = match s.verdict {
                Verdict::Leader => leader,
                Verdict::NonLeader => !leader,
                Verdict::Unclassified => true,
            };
            let size_ok = s.predicted_size.is_none_or(|p| p == size);
            Some(ClassifyRow {
                i,
                verdict: s.verdict,
                witness: s.witness,
                predicted_size: s.predicted_size,
                leader,
                size,
                sound: verdict_ok && size_ok,
            })
        })
        .collect();
    Ok(ClassifyReport { kind, q, m, modulus: n, rows })
}

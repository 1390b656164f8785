//! q-cyclotomic cosets modulo n and their leaders.

pub mod classify;
pub mod largest;
pub mod lemmas;

use crate::arith::{gcd, mul_mod};
use crate::error::{Error, Result};

pub use classify::{classify_scan, ClassifierKind, ClassifyReport, ClassifyRow};
pub use largest::{largest_leaders, LargestLeaders, LeaderFamily};
pub use lemmas::{LeaderStatus, Verdict};

/// Full scans refuse moduli above this many residues.
pub const DEFAULT_SCAN_CAP: u64 = 10_000_000;

/// Orbit of s under multiplication by q modulo n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRecord {
    pub n: u64,
    pub q: u64,
    pub leader: u64,
    pub size: u64,
    /// Sorted ascending.
    pub elements: Vec<u64>,
}

fn check_coprime(n: u64, q: u64) -> Result<()> {
    if n == 0 || gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    Ok(())
}

pub fn coset(s: u64, n: u64, q: u64) -> Result<CosetRecord> {
    check_coprime(n, q)?;
    if s >= n {
        return Err(Error::PreconditionViolated(format!("residue {s} is not below {n}")));
    }
    let mut elements = vec![s];
    let mut x = mul_mod(s, q, n);
    while x != s {
        elements.push(x);
        x = mul_mod(x, q, n);
    }
    elements.sort_unstable();
    Ok(CosetRecord { n, q, leader: elements[0], size: elements.len() as u64, elements })
}

/// True iff s is the smallest element of its coset. Stops at the first
/// smaller orbit element.
pub fn is_leader(s: u64, n: u64, q: u64) -> bool {
    let mut x = mul_mod(s, q, n);
    while x != s {
        if x < s {
            return false;
        }
        x = mul_mod(x, q, n);
    }
    true
}

pub fn coset_size(s: u64, n: u64, q: u64) -> u64 {
    let mut x = mul_mod(s, q, n);
    let mut l = 1;
    while x != s {
        x = mul_mod(x, q, n);
        l += 1;
    }
    l
}

pub fn coset_leader(s: u64, n: u64, q: u64) -> u64 {
    let mut x = mul_mod(s, q, n);
    let mut best = s;
    while x != s {
        best = best.min(x);
        x = mul_mod(x, q, n);
    }
    best
}

/// All coset leaders modulo n with their coset sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeaderTable {
    pub n: u64,
    pub q: u64,
    /// Sorted ascending.
    pub leaders: Vec<u64>,
    /// `sizes[i]` is the size of the coset led by `leaders[i]`.
    pub sizes: Vec<u64>,
}

impl LeaderTable {
    pub fn size_of(&self, leader: u64) -> Option<u64> {
        self.leaders.binary_search(&leader).ok().map(|i| self.sizes[i])
    }

    pub fn contains(&self, s: u64) -> bool {
        self.leaders.binary_search(&s).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.leaders.iter().copied().zip(self.sizes.iter().copied())
    }
}

pub fn leaders(n: u64, q: u64) -> Result<LeaderTable> {
    leaders_with_cap(n, q, DEFAULT_SCAN_CAP)
}

/// Streams residues in increasing order, marking each new orbit in a bitset;
/// the first unmarked residue of every orbit is its leader.
pub fn leaders_with_cap(n: u64, q: u64, cap: u64) -> Result<LeaderTable> {
    check_coprime(n, q)?;
    if n > cap {
        return Err(Error::ScanCapExceeded { n, cap });
    }
    let mut seen = vec![0u64; n.div_ceil(64) as usize];
    let mut leaders = Vec::new();
    let mut sizes = Vec::new();
    for s in 0..n {
        if seen[(s / 64) as usize] >> (s % 64) & 1 == 1 {
            continue;
        }
        let mut x = s;
        let mut l = 0;
        loop {
            seen[(x / 64) as usize] |= 1 << (x % 64);
            l += 1;
            x = mul_mod(x, q, n);
            if x == s {
                break;
            }
        }
        leaders.push(s);
        sizes.push(l);
    }
    Ok(LeaderTable { n, q, leaders, sizes })
}

/// The `count` largest leaders (odd ones only if `odd_only`) with sizes,
/// scanning downward from n - 1.
pub fn top_leaders(n: u64, q: u64, count: usize, odd_only: bool) -> Result<Vec<(u64, u64)>> {
    check_coprime(n, q)?;
    let mut out = Vec::with_capacity(count);
    let mut s = n;
    while out.len() < count && s > 0 {
        s -= 1;
        if odd_only && s.is_multiple_of(2) {
            continue;
        }
        if is_leader(s, n, q) {
            out.push((s, coset_size(s, n, q)));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cosets_mod_40() {
        let c0 = coset(0, 40, 3).unwrap();
        assert_eq!((c0.leader, c0.size, c0.elements.clone()), (0, 1, vec![0]));
        let c1 = coset(1, 40, 3).unwrap();
        assert_eq!(c1.elements, vec![1, 3, 9, 27]);
        let c5 = coset(5, 40, 3).unwrap();
        assert_eq!((c5.leader, c5.elements.clone()), (5, vec![5, 15]));
        assert_eq!(coset(1, 42, 3).unwrap_err(), Error::NotCoprime { n: 42, q: 3 });
    }

    #[test]
    fn leader_tables() {
        let t = leaders(40, 3).unwrap();
        let odd_small: Vec<u64> = t.leaders.iter().copied().filter(|&s| s % 2 == 1 && s <= 13).collect();
        assert_eq!(odd_small, vec![1, 5, 7, 11, 13]);
        // Full scan: 13 leaders (0 1 2 4 5 7 8 10 11 13 20 22 25).
        assert_eq!(t.leaders, vec![0, 1, 2, 4, 5, 7, 8, 10, 11, 13, 20, 22, 25]);
        assert_eq!(t.sizes.iter().sum::<u64>(), 40);
        assert_eq!(leaders(1, 3).unwrap().leaders, vec![0]);
        let t244 = leaders(244, 3).unwrap();
        assert_eq!(t244.size_of(122), Some(1));
        assert!(matches!(leaders_with_cap(1000, 3, 999), Err(Error::ScanCapExceeded { n: 1000, cap: 999 })));
    }

    #[test]
    fn top_scan() {
        assert_eq!(top_leaders(40, 3, 2, false).unwrap(), vec![(25, 2), (22, 4)]);
        assert_eq!(top_leaders(122, 3, 3, true).unwrap(), vec![(61, 1), (19, 10), (17, 10)]);
        assert_eq!(top_leaders(12, 5, 1, true).unwrap(), vec![(9, 1)]);
    }

    #[test]
    fn leader_predicates_agree() {
        for n in [40u64, 121, 122, 244, 364] {
            let t = leaders(n, 3).unwrap();
            for s in 0..n {
                assert_eq!(is_leader(s, n, 3), t.contains(s));
                assert_eq!(coset_leader(s, n, 3), coset(s, n, 3).unwrap().leader);
            }
        }
    }
}

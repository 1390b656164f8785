//! Dimension formulas against the coset oracle on every (q, m) with q <= 13
//! whose δ range is small enough to sweep. The full CSV is written to the
//! target tmp directory.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use negabch::closed_forms::{
    cells_to_csv, check_hypotheses, formula_length, max_delta, run_conformance, CellVerdict, ConformanceCell,
    ConformanceOptions, FormulaId,
};

const QS: [u64; 6] = [3, 5, 7, 9, 11, 13];
const MAX_LENGTH: u64 = 1 << 40;
const MAX_SWEEP: u64 = 200_000;

fn sweep_pairs(id: FormulaId) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for q in QS {
        for m in 2..40u32 {
            if check_hypotheses(id, q, m).is_err() {
                continue;
            }
            let n_ok = formula_length(id, q, m).to_u64().is_some_and(|n| n <= MAX_LENGTH);
            let d_ok = max_delta(id, q, m).ok().and_then(|d| d.to_u64()).is_some_and(|d| d <= MAX_SWEEP);
            if !(n_ok && d_ok) {
                break;
            }
            out.push((q, m));
        }
    }
    out
}

fn sweep(id: FormulaId) -> Vec<ConformanceCell> {
    let mut cells = Vec::new();
    for (q, m) in sweep_pairs(id) {
        cells.extend(run_conformance(id, q, m, &ConformanceOptions::default()).unwrap());
    }
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("conformance");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join(format!("sweep_{id}.csv")), cells_to_csv(&cells)).unwrap();
    cells
}

/// (q, m) -> (first δ, last δ, count) of mismatching cells.
fn mismatch_runs(cells: &[ConformanceCell]) -> BTreeMap<(u64, u32), (u64, u64, usize)> {
    let mut runs = BTreeMap::new();
    for c in cells.iter().filter(|c| c.verdict == CellVerdict::Mismatch) {
        let e = runs.entry((c.q, c.m)).or_insert((c.delta, c.delta, 0));
        e.1 = c.delta;
        e.2 += 1;
    }
    runs
}

fn assert_clean(id: FormulaId) {
    let cells = sweep(id);
    assert!(!cells.is_empty());
    assert!(cells.iter().all(|c| c.verdict != CellVerdict::Infeasible));
    let runs = mismatch_runs(&cells);
    assert!(runs.is_empty(), "{id} mismatches {runs:?}");
}

#[test]
fn t1_matches_everywhere() {
    assert_clean(FormulaId::T1);
}

#[test]
fn t2_matches_everywhere() {
    assert_clean(FormulaId::T2);
}

#[test]
fn t4_matches_everywhere() {
    assert_clean(FormulaId::T4);
}

#[test]
fn t11_matches_everywhere() {
    assert_clean(FormulaId::T11);
}

// The top-range case formulas of T3 are exact for q = 3 but overcount for
// q >= 5. The disagreement is one contiguous run ending at the largest δ;
// its extent is frozen here from the oracle.
#[test]
fn t3_disagrees_only_in_the_top_range_for_q_at_least_5() {
    let cells = sweep(FormulaId::T3);
    assert!(cells.iter().all(|c| c.verdict != CellVerdict::Infeasible));
    let runs = mismatch_runs(&cells);
    let expected: BTreeMap<(u64, u32), (u64, u64, usize)> = [
        ((5, 5), (192, 226, 35)),
        ((5, 7), (942, 1126, 185)),
        ((5, 9), (4692, 5626, 935)),
        ((5, 11), (23442, 28126, 4685)),
        ((5, 13), (117192, 140626, 23435)),
        ((7, 5), (520, 638, 119)),
        ((7, 7), (3607, 4460, 854)),
        ((7, 9), (25216, 31214, 5999)),
        ((9, 5), (1100, 1378, 279)),
        ((9, 7), (9848, 12394, 2547)),
        ((9, 9), (88580, 111538, 22959)),
        ((11, 5), (2004, 2542, 539)),
        ((11, 7), (21969, 27952, 5984)),
        ((13, 5), (3304, 4226, 923)),
        ((13, 7), (42850, 54926, 12077)),
    ]
    .into_iter()
    .collect();
    assert_eq!(runs, expected);
    for (&(q, m), &(lo, hi, count)) in &runs {
        assert_eq!(hi - lo + 1, count as u64, "run at ({q},{m}) has gaps");
        assert_eq!(hi, max_delta(FormulaId::T3, q, m).unwrap().to_u64().unwrap());
    }
    assert!(cells.iter().filter(|c| c.q == 3).all(|c| c.verdict != CellVerdict::Mismatch));
}

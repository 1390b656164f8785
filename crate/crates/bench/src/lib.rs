//! Criterion benchmarks for the enumeration and coset kernels live in `benches/`.

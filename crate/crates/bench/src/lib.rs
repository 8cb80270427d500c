//! Criterion benchmarks for the sidonkit kernels; see `benches/`.

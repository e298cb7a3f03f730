//! Criterion benchmarks for the weylchar kernels; see `benches/kernels.rs`.

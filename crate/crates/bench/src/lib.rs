//! Criterion benchmarks for the z2inv kernels; see `benches/`.

//! Criterion benchmarks for `rvx-core`; see `benches/`.

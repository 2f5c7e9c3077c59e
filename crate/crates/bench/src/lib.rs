//! Criterion benchmarks for the completion engines; see `benches/`.

//! Criterion benchmarks for `f1qt-core`; see `benches/`.

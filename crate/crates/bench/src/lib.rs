//! Benchmarks for the x3form core live under `benches/`.

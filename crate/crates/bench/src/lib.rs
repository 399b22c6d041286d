//! Criterion benchmarks for hullkit live under `benches/`.

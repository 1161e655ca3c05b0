//! Benchmarks for pathturan-core live under `benches/`.

//! Criterion benchmarks for `shen-elliptic`; see `benches/`.

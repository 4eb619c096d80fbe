//! Criterion benchmarks for `naples-core`; see `benches/enumeration.rs`.

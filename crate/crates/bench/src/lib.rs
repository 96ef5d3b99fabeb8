//! Benchmark harness for the algebra kernels; see `benches/`.

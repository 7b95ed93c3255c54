//! Benchmark-only crate; kernels live in zgl-core, benches in benches/.

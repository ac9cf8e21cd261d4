//! Criterion benchmark harness for the adorned engine; see `benches/engine.rs`.

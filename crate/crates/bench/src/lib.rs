//! Shared inputs for the criterion benches.

use sunya_core::{Integer, Rational, Value};

/// Spread of integers in `[1, limit]`, deterministic.
pub fn sample_integers(count: u64, limit: u64) -> Vec<Integer> {
    let step = (limit / count.max(1)).max(1);
    (0..count).map(|i| Integer::from(1 + (i * step + i * i) % limit)).collect()
}

pub fn sample_values(count: i64) -> Vec<Value> {
    (1..=count).map(|i| Value::Finite(Rational::new((i * 7 - 3).into(), (i % 11 + 1).into()))).collect()
}

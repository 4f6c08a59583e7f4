//! Batch CSV generation: one Salem row per trace, computed by a small
//! worker pool but always emitted in trace order.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use salem_core::certify::salem_value;
use salem_core::construct::{generate_salem_candidate, Policy};
use salem_core::cyclo::sieve_gcd_test;

use crate::doc::decimal_floor;

fn row(trace: u64) -> String {
    let rec = generate_salem_candidate(trace, Policy::FirstPrimes);
    let s = rec.reduced().expect("first-primes output materializes");
    let sieve = if sieve_gcd_test(s).passed { "pass" } else { "fail" };
    let value = salem_value(s, 64).expect("generated candidate has a dominant real root");
    format!(
        "{},{},{},{}\n",
        rec.trace,
        s.degree().unwrap(),
        sieve,
        decimal_floor(value.lo(), 12)
    )
}

/// Render the full table for traces `0..=max_trace` using `jobs` threads.
/// The output is a pure function of `max_trace`.
pub fn render(max_trace: u64, jobs: usize) -> String {
    let jobs = jobs.max(1).min(max_trace as usize + 1);
    let next = AtomicU64::new(0);
    let slots: Mutex<Vec<Option<String>>> = Mutex::new(vec![None; max_trace as usize + 1]);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let t = next.fetch_add(1, Ordering::Relaxed);
                if t > max_trace {
                    return;
                }
                let line = row(t);
                slots.lock().unwrap()[t as usize] = Some(line);
            });
        }
    });
    let mut out = String::from("trace,degree,sieve,value\n");
    for line in slots.into_inner().unwrap() {
        out.push_str(&line.expect("every trace slot is filled"));
    }
    out
}

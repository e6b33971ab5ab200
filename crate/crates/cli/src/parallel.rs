//! Enumeration split over worker threads by the first entry `u1`.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use quadrangle_core::covers::enumerate_admissible_from;
use quadrangle_core::{FVec2, Modulus, SixTuple};

/// `QC_THREADS` if set to a positive integer, else the available
/// parallelism.
pub fn worker_count() -> usize {
    std::env::var("QC_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n: &usize| n > 0)
        .unwrap_or_else(|| thread::available_parallelism().map_or(1, |n| n.get()))
}

/// Same output as the sequential enumeration, in lexicographic order, for
/// any worker count.
pub fn enumerate(m: Modulus, workers: usize) -> Vec<SixTuple> {
    let starts: Vec<FVec2> = m.nonzero_vectors().collect();
    let next = AtomicUsize::new(0);
    let mut parts: Vec<(usize, Vec<SixTuple>)> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers.clamp(1, starts.len()))
            .map(|_| {
                s.spawn(|| {
                    let mut done = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(&u1) = starts.get(i) else { break };
                        done.push((i, enumerate_admissible_from(m, u1)));
                    }
                    done
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    parts.sort_unstable_by_key(|p| p.0);
    parts.into_iter().flat_map(|p| p.1).collect()
}

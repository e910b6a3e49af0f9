//! Multi-threaded drivers over the core enumeration routines. Results do not
//! depend on the thread count.

use std::collections::BTreeMap;
use std::num::NonZeroUsize;
use std::ops::Range;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use mincode_core::code::{
    exhaustive_report, message_representatives, support_table, weight_counts, EnumerationGuard,
    LinearCode, MinimalityReport, WeightDistribution,
};

use crate::error::Result;

/// Worker count; `0` means one per available core.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[derive(Default)]
pub struct Threads(pub usize);

impl Threads {
    pub fn get(self) -> usize {
        if self.0 > 0 {
            self.0
        } else {
            thread::available_parallelism().map_or(1, NonZeroUsize::get)
        }
    }
}


fn chunks(len: usize, threads: usize) -> Vec<Range<usize>> {
    let parts = threads.clamp(1, len.max(1));
    let size = len.div_ceil(parts).max(1);
    (0..len)
        .step_by(size)
        .map(|s| s..(s + size).min(len))
        .collect()
}

pub fn weight_distribution(
    code: &LinearCode,
    guard: EnumerationGuard,
    threads: Threads,
) -> Result<WeightDistribution> {
    guard.check(code.field().order(), code.ambient_dim())?;
    let reps = message_representatives(code);
    let partials: Vec<BTreeMap<usize, u64>> = thread::scope(|s| {
        let handles: Vec<_> = chunks(reps.len(), threads.get())
            .into_iter()
            .map(|r| {
                let part = &reps[r];
                s.spawn(move || weight_counts(code, part))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    Ok(partials.into_iter().flatten().collect())
}

/// Exhaustive minimality with the outer codeword range split across threads.
/// The reported witness is the first containment in canonical order.
pub fn minimal_exhaustive(
    code: &LinearCode,
    guard: EnumerationGuard,
    threads: Threads,
) -> Result<MinimalityReport> {
    guard.check(code.field().order(), code.ambient_dim())?;
    let reps = message_representatives(code);
    let table = support_table(code, &reps);
    let best = AtomicUsize::new(usize::MAX);
    let hits: Vec<Option<(usize, usize)>> = thread::scope(|s| {
        let handles: Vec<_> = chunks(table.len(), threads.get())
            .into_iter()
            .map(|range| {
                let (table, best) = (&table, &best);
                s.spawn(move || {
                    for outer in range {
                        if outer > best.load(Ordering::Relaxed) {
                            return None;
                        }
                        if let Some(hit) = table.first_containment(outer..outer + 1) {
                            best.fetch_min(outer, Ordering::Relaxed);
                            return Some(hit);
                        }
                    }
                    None
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    Ok(exhaustive_report(
        code,
        &reps,
        hits.into_iter().flatten().next(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mincode_core::code::{build_code, is_minimal_exhaustive};
    use mincode_core::constructions::monomial_zero_set;
    use mincode_core::gf::field_of_order;
    use mincode_core::linalg::VectorMultiset;

    #[test]
    fn chunking_covers_range() {
        for (len, t) in [(0, 4), (1, 4), (10, 3), (7, 7), (5, 9)] {
            let c = chunks(len, t);
            let flat: Vec<usize> = c.iter().cloned().flatten().collect();
            assert_eq!(flat, (0..len).collect::<Vec<_>>());
        }
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let f = field_of_order(3).unwrap();
        let good = build_code(&monomial_zero_set(&f, 4, 3).unwrap()).unwrap();
        let bad = build_code(
            &VectorMultiset::from_values(
                &f,
                3,
                &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]],
            )
            .unwrap(),
        )
        .unwrap();
        let g = EnumerationGuard::default();
        for code in [&good, &bad] {
            let serial = is_minimal_exhaustive(code, g).unwrap();
            for t in [1, 2, 3, 8] {
                assert_eq!(minimal_exhaustive(code, g, Threads(t)).unwrap(), serial);
                assert_eq!(
                    weight_distribution(code, g, Threads(t)).unwrap(),
                    mincode_core::code::weight_distribution(code, g).unwrap()
                );
            }
        }
    }
}

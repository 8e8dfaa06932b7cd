//! Run-length encoding of per-state on intervals.

use super::select::TimeRange;
use crate::dataset::StateMatrix;

/// Maximal intervals where state `c` is on, sorted and disjoint.
pub fn state_runs(states: &StateMatrix, c: usize, threshold: f32) -> Vec<TimeRange> {
    rle(states.column(c).map(|v| v >= threshold))
}

pub(crate) fn rle(on: impl Iterator<Item = bool>) -> Vec<TimeRange> {
    let mut runs = Vec::new();
    let mut open: Option<usize> = None;
    let mut t = 0;
    for (i, is_on) in on.enumerate() {
        match (is_on, open) {
            (true, None) => open = Some(i),
            (false, Some(s)) => {
                runs.push(TimeRange::new(s, i - 1));
                open = None;
            }
            _ => {}
        }
        t = i + 1;
    }
    if let Some(s) = open {
        runs.push(TimeRange::new(s, t - 1));
    }
    runs
}

/// Number of runs covering each timestep, from `+1`/`-1` run events.
pub(crate) fn cover_counts<'a>(len: usize, runs: impl Iterator<Item = &'a [TimeRange]>) -> Vec<u32> {
    let mut delta = vec![0i64; len + 1];
    for run_list in runs {
        for r in run_list {
            delta[r.start] += 1;
            delta[r.end + 1] -= 1;
        }
    }
    let mut acc = 0i64;
    delta[..len]
        .iter()
        .map(|d| {
            acc += d;
            acc as u32
        })
        .collect()
}

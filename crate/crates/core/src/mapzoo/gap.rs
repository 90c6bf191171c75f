//! Gap intervals for minimum proper monomial maps between balls.

use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;

/// `K(n)` and the open integer intervals `I_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapIntervals {
    pub n: usize,
    /// `K(n) = max { m : m (m + 1) / 2 < n }`.
    pub k_max: usize,
    /// For `k = 1..K(n)`, the integers `m` with
    /// `k n < m < (k + 1) n - k (k + 1) / 2`, as an inclusive range;
    /// `None` when the interval contains no integer.
    pub intervals: Vec<Option<(usize, usize)>>,
}

/// Evaluates the two defining formulas. Requires `n > 2`.
pub fn gap_intervals(n: usize) -> Result<GapIntervals> {
    if n <= 2 {
        return Err(Error::BadParameter(format!(
            "gap intervals are defined for n > 2, got {n}"
        )));
    }
    let mut k_max = 0usize;
    while (k_max + 1) * (k_max + 2) / 2 < n {
        k_max += 1;
    }
    let intervals = (1..=k_max)
        .map(|k| {
            let lo = k * n + 1;
            let upper = (k + 1) * n - k * (k + 1) / 2; // exclusive
            (lo < upper).then(|| (lo, upper - 1))
        })
        .collect();
    Ok(GapIntervals { n, k_max, intervals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn n_three() {
        let g = gap_intervals(3).unwrap();
        assert_eq!(g.k_max, 1);
        assert_eq!(g.intervals, vec![Some((4, 4))]);
    }

    #[test]
    fn n_four() {
        // K(4) = 2 since 2*3/2 = 3 < 4 while 3*4/2 = 6 is not; the second
        // interval (8, 9) contains no integer.
        let g = gap_intervals(4).unwrap();
        assert_eq!(g.k_max, 2);
        assert_eq!(g.intervals, vec![Some((5, 6)), None]);
    }

    #[test]
    fn n_five() {
        let g = gap_intervals(5).unwrap();
        assert_eq!(g.k_max, 2);
        assert_eq!(g.intervals, vec![Some((6, 8)), Some((11, 11))]);
    }

    #[test]
    fn n_ten() {
        // 3*4/2 = 6 < 10, 4*5/2 = 10 is not < 10
        let g = gap_intervals(10).unwrap();
        assert_eq!(g.k_max, 3);
        assert_eq!(g.intervals[0], Some((11, 18)));
        assert_eq!(g.intervals[1], Some((21, 26)));
        assert_eq!(g.intervals[2], Some((31, 33)));
    }

    #[test]
    fn small_n_rejected() {
        assert!(gap_intervals(2).is_err());
        assert!(gap_intervals(0).is_err());
    }
}

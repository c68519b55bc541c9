//! Dense primal simplex for the small linear programs used here.

use alloc::vec;
use alloc::vec::Vec;

const PIVOT_EPS: f64 = 1e-12;

#[derive(Debug, Clone)]
pub(crate) struct LpSolution {
    pub x: Vec<f64>,
    pub value: f64,
    /// Optimal dual multipliers, one per constraint row.
    pub duals: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum LpFailure {
    Unbounded,
    IterationLimit,
}

/// Maximizes `c·x` subject to `A x <= b`, `x >= 0`, for `b >= 0`, starting
/// from the slack basis and pivoting with Bland's rule.
pub(crate) fn maximize(c: &[f64], a: &[Vec<f64>], b: &[f64]) -> Result<LpSolution, LpFailure> {
    let n = c.len();
    let m = a.len();
    let width = n + m + 1;
    let mut t: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            let mut row = vec![0.0; width];
            row[..n].copy_from_slice(&a[i]);
            row[n + i] = 1.0;
            row[width - 1] = b[i].max(0.0);
            row
        })
        .collect();
    let mut z = vec![0.0; width];
    z[..n].copy_from_slice(c);
    let mut basis: Vec<usize> = (n..n + m).collect();

    for _ in 0..50_000 {
        let Some(enter) = (0..n + m).find(|&j| z[j] > PIVOT_EPS) else {
            let mut x = vec![0.0; n];
            for (i, &bi) in basis.iter().enumerate() {
                if bi < n {
                    x[bi] = t[i][width - 1];
                }
            }
            let duals = (0..m).map(|i| -z[n + i]).collect();
            return Ok(LpSolution { x, value: -z[width - 1], duals });
        };
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..m {
            if t[i][enter] > PIVOT_EPS {
                let ratio = t[i][width - 1] / t[i][enter];
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((l, best)) => {
                        if ratio < best - 1e-15 || (ratio <= best + 1e-15 && basis[i] < basis[l]) {
                            Some((i, ratio))
                        } else {
                            Some((l, best))
                        }
                    }
                };
            }
        }
        let Some((r, _)) = leave else { return Err(LpFailure::Unbounded) };
        let piv = t[r][enter];
        for v in t[r].iter_mut() {
            *v /= piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && row[enter] != 0.0 {
                let f = row[enter];
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * p;
                }
            }
        }
        let f = z[enter];
        for (v, p) in z.iter_mut().zip(&pivot_row) {
            *v -= f * p;
        }
        basis[r] = enter;
    }
    Err(LpFailure::IterationLimit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn textbook_problem() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let sol = maximize(
            &[3.0, 5.0],
            &[vec![1.0, 0.0], vec![0.0, 2.0], vec![3.0, 2.0]],
            &[4.0, 12.0, 18.0],
        )
        .unwrap();
        assert!((sol.value - 36.0).abs() < 1e-12);
        assert!((sol.x[0] - 2.0).abs() < 1e-12 && (sol.x[1] - 6.0).abs() < 1e-12);
        // strong duality
        let dual_obj: f64 = sol.duals.iter().zip([4.0, 12.0, 18.0]).map(|(y, b)| y * b).sum();
        assert!((dual_obj - 36.0).abs() < 1e-12);
    }

    #[test]
    fn detects_unbounded() {
        assert_eq!(
            maximize(&[1.0, 0.0], &[vec![-1.0, 1.0]], &[1.0]).unwrap_err(),
            LpFailure::Unbounded
        );
    }
}

//! Shared oracles for the integration suites.
//!
//! Both oracles deliberately avoid the implementation paths they check: the
//! stationary distribution comes from a dense linear solve of the global
//! balance equations (no product form), and the minimal cover size from
//! exhaustive subset enumeration (no greedy pruning).

// each integration test uses its own subset of these helpers
#![allow(dead_code)]

use uas_planner::{CoverageSpec, GroundNode, RadioConfig};

/// Link budget used throughout the experiment suites.
pub fn reference_radio() -> RadioConfig {
    RadioConfig::new(1.42e-4, 1e-3, 1.0, 1.25e-14, 100.0, 100.0).unwrap()
}

/// A coverage spec with the given radius and arbitrary but consistent
/// remaining fields, for packing tests that need no radio model.
pub fn bare_spec(radius: f64) -> CoverageSpec {
    CoverageSpec {
        radius_dl: radius,
        radius_ul: radius,
        radius,
        hover_height: radius,
        target_arrival_power: 1e-12,
    }
}

/// Stationary distribution of the busy-PAP chain from the global balance
/// equations: rows for states `0..u-1` plus the normalization row, solved
/// by Gauss-Jordan elimination with partial pivoting.
pub fn balance_stationary(n: u32, u: u32, lambda: f64, kappa: f64) -> Vec<f64> {
    let size = u as usize + 1;
    let nf = f64::from(n);
    let mut a = vec![vec![0.0; size]; size];
    let mut b = vec![0.0; size];

    if u >= 1 {
        // state 0: n·λ·p0 = κ·p1
        a[0][0] = -nf * lambda;
        a[0][1] = kappa;
    }
    for j in 1..u as usize {
        // state j: inflow from j-1 and j+1 balances outflow
        a[j][j - 1] = (nf - (j as f64 - 1.0)) * lambda;
        a[j][j] = -(j as f64 * kappa + (nf - j as f64) * lambda);
        a[j][j + 1] = (j as f64 + 1.0) * kappa;
    }
    // the redundant final balance row becomes the normalization Σ p = 1
    for v in a[size - 1].iter_mut() {
        *v = 1.0;
    }
    b[size - 1] = 1.0;

    gauss_jordan(&mut a, &mut b);
    b
}

fn gauss_jordan(a: &mut [Vec<f64>], b: &mut [f64]) {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        let pivot_row = a[col].clone();
        let d = pivot_row[col];
        assert!(d != 0.0, "singular balance system");
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r][col] / d;
            if f == 0.0 {
                continue;
            }
            for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                a[r][c] -= f * pv;
            }
            b[r] -= f * b[col];
        }
    }
    for (r, v) in b.iter_mut().enumerate() {
        *v /= a[r][r];
    }
}

/// Size of a minimum subset of `candidates` (circles of `radius`) covering
/// every node, by exhaustive enumeration in increasing cardinality.
/// Dominated candidates are discarded first; that never changes the
/// optimum. Returns `None` when even the full set fails to cover.
pub fn min_cover_size(candidates: &[(f64, f64)], radius: f64, gns: &[GroundNode]) -> Option<usize> {
    assert!(gns.len() <= 64, "oracle supports at most 64 nodes");
    if gns.is_empty() {
        return Some(0);
    }
    let lim = radius * (1.0 + 1e-9);
    let lim2 = lim * lim;
    let full: u64 = (!0u64) >> (64 - gns.len());

    let mut masks: Vec<u64> = candidates
        .iter()
        .map(|&(cx, cy)| {
            gns.iter().enumerate().fold(0u64, |m, (k, g)| {
                let dx = g.x - cx;
                let dy = g.y - cy;
                if dx * dx + dy * dy <= lim2 {
                    m | (1 << k)
                } else {
                    m
                }
            })
        })
        .filter(|&m| m != 0)
        .collect();
    masks.sort_unstable();
    masks.dedup();
    // drop masks contained in another mask
    let maximal: Vec<u64> = masks
        .iter()
        .filter(|&&m| !masks.iter().any(|&o| o != m && o & m == m))
        .copied()
        .collect();

    let union = maximal.iter().fold(0u64, |acc, &m| acc | m);
    if union != full {
        return None;
    }
    (1..=maximal.len()).find(|&k| covers_with(&maximal, full, 0, k, 0))
}

fn covers_with(masks: &[u64], target: u64, start: usize, left: usize, acc: u64) -> bool {
    if acc == target {
        return true;
    }
    if left == 0 || start >= masks.len() {
        return false;
    }
    // not enough masks remain
    if masks.len() - start < left {
        return false;
    }
    (start..masks.len()).any(|i| covers_with(masks, target, i + 1, left - 1, acc | masks[i]))
}

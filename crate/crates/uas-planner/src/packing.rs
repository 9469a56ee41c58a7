//! Multi-level 7-circle hexagonal covering of the service disk.
//!
//! A disk of radius `R` is covered by 7 equal circles of radius `R/2`: one
//! concentric, six on the vertices of a regular hexagon of circumradius
//! `√3·R/2`. The pattern recurses — every circle that is still larger than
//! the PAP coverage radius is covered by 7 children of half its radius —
//! until the candidate circles fit within one PAP cell. Candidates that
//! serve no ground node exclusively are then pruned away.
//!
//! Candidate expansion runs on exact integer hex-lattice coordinates
//! (children of `(i, j)` are `(2i, 2j)` plus a unit hex step), so duplicate
//! centers arising where sibling subtrees meet coincide bit-exactly and are
//! merged without a tolerance.

use serde::{Deserialize, Serialize};

use crate::coverage::CoverageSpec;
use crate::error::{Error, Result};

/// Relative tolerance for boundary containment checks: a node at distance
/// `r·(1 + COVERAGE_TOL)` of a center still counts as covered.
pub const COVERAGE_TOL: f64 = 1e-9;

/// Deepest supported packing recursion; level `l` materializes `7^l` raw
/// candidates, so the region/cell radius ratio is capped at `2^MAX_LEVELS`.
pub const MAX_LEVELS: u32 = 8;

/// A stationary ground node inside the service region.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroundNode {
    pub x: f64,
    pub y: f64,
    pub id: u32,
}

impl GroundNode {
    pub fn new(x: f64, y: f64, id: u32) -> Self {
        Self { x, y, id }
    }

    fn dist2(&self, center: (f64, f64)) -> f64 {
        let dx = self.x - center.0;
        let dy = self.y - center.1;
        dx * dx + dy * dy
    }
}

/// Result of packing a region: retained cell centers plus the cell geometry
/// shared by every PAP.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellLayout {
    /// Retained cell centers, meters.
    pub centers: Vec<(f64, f64)>,
    /// PAP coverage radius `R_p` of every cell, meters.
    pub cell_radius: f64,
    /// PAP hover height, meters.
    pub hover_height: f64,
    /// Packing recursion depth `l_max`.
    pub levels: u32,
    /// Radius of the covered region, meters.
    pub region_radius: f64,
}

impl CellLayout {
    pub fn n_cells(&self) -> usize {
        self.centers.len()
    }

    /// Radius of the final-level candidate circles, `R / 2^levels`.
    pub fn level_radius(&self) -> f64 {
        self.region_radius / f64::from(1u32 << self.levels)
    }

    /// True when the node lies within `cell_radius` of some retained center.
    pub fn covers(&self, gn: &GroundNode) -> bool {
        let lim = self.cell_radius * (1.0 + COVERAGE_TOL);
        self.centers.iter().any(|&c| gn.dist2(c) <= lim * lim)
    }

    /// Layout as CSV rows `x,y,cell_radius,hover_height`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y,cell_radius,hover_height\n");
        for &(x, y) in &self.centers {
            out.push_str(&format!(
                "{},{},{},{}\n",
                x, y, self.cell_radius, self.hover_height
            ));
        }
        out
    }
}

/// Centers of the 7 half-radius circles covering a circle at `parent`:
/// six at distance `√3·child_radius` on the hexagon vertices, plus the
/// parent itself.
pub fn child_centers(parent: (f64, f64), child_radius: f64) -> [(f64, f64); 7] {
    assert!(
        child_radius > 0.0,
        "child_radius must be > 0, got {child_radius}"
    );
    let s3 = 3f64.sqrt();
    let half = s3 / 2.0;
    // cos/sin of 2πj/6 for j = 0..5
    const COS: [f64; 6] = [1.0, 0.5, -0.5, -1.0, -0.5, 0.5];
    let sin = [0.0, half, half, 0.0, -half, -half];
    let step = child_radius * s3;
    let mut out = [(0.0, 0.0); 7];
    for j in 0..6 {
        out[j] = (parent.0 + step * COS[j], parent.1 + step * sin[j]);
    }
    out[6] = parent;
    out
}

/// Number of halving levels needed before the candidate circles fit inside
/// one PAP cell: `ceil(log2(R/R_p))` for `R > R_p`, zero otherwise.
///
/// Mirrors the halving loop of [`pack`] exactly, so the two can never
/// disagree on floating-point edge cases.
pub fn levels_required(region_radius: f64, cell_radius: f64) -> u32 {
    assert!(
        region_radius > 0.0 && cell_radius > 0.0,
        "radii must be > 0, got region {region_radius}, cell {cell_radius}"
    );
    let mut r = region_radius;
    let mut levels = 0;
    while r > cell_radius {
        r /= 2.0;
        levels += 1;
    }
    levels
}

/// Unit hex steps in lattice coordinates (basis `a1 = (1, 0)`,
/// `a2 = (1/2, √3/2)`), matching angles `2πj/6` for j = 0..5, plus the
/// parent position itself.
const HEX_STEPS: [(i32, i32); 7] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1), (0, 0)];

#[derive(Debug)]
struct Expansion {
    /// All `7^levels` candidates in final-level lattice units, duplicates
    /// included.
    raw: Vec<(i32, i32)>,
    levels: u32,
    /// Radius of the final-level circles, `R / 2^levels`.
    level_radius: f64,
}

/// The deduplicated candidate circles a packing run would prune.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateGrid {
    /// Unique candidate centers in first-occurrence order.
    pub centers: Vec<(f64, f64)>,
    pub levels: u32,
    /// Radius of every candidate circle, `R / 2^levels`.
    pub level_radius: f64,
}

/// Expand and deduplicate the full candidate set for a region without
/// pruning. `pack` retains a subset of exactly these centers.
pub fn candidate_grid(region_radius: f64, cell_radius: f64) -> Result<CandidateGrid> {
    let exp = expand_candidates(region_radius, cell_radius)?;
    let step = 3f64.sqrt() * exp.level_radius;
    let centers = dedup_exact(&exp.raw, exp.levels)
        .into_iter()
        .map(|c| lattice_to_xy(step, c))
        .collect();
    Ok(CandidateGrid {
        centers,
        levels: exp.levels,
        level_radius: exp.level_radius,
    })
}

fn expand_candidates(region_radius: f64, cell_radius: f64) -> Result<Expansion> {
    let levels = levels_required(region_radius, cell_radius);
    if levels > MAX_LEVELS {
        return Err(Error::TooManyLevels {
            levels,
            max: MAX_LEVELS,
        });
    }
    let mut current = vec![(0, 0)];
    let mut r = region_radius;
    for _ in 0..levels {
        r /= 2.0;
        let mut next = Vec::with_capacity(current.len() * 7);
        for &(i, j) in &current {
            for &(di, dj) in &HEX_STEPS {
                next.push((2 * i + di, 2 * j + dj));
            }
        }
        current = next;
    }
    Ok(Expansion {
        raw: current,
        levels,
        level_radius: r,
    })
}

/// First-occurrence dedup on exact lattice coordinates. Coordinates after
/// `l` levels are bounded by `2^l - 1`, so a dense visited grid suffices.
fn dedup_exact(raw: &[(i32, i32)], levels: u32) -> Vec<(i32, i32)> {
    let b = 1i64 << levels;
    let w = (2 * b + 1) as usize;
    let mut seen = vec![false; w * w];
    let mut out = Vec::new();
    for &(i, j) in raw {
        let idx = (i as i64 + b) as usize * w + (j as i64 + b) as usize;
        if !seen[idx] {
            seen[idx] = true;
            out.push((i, j));
        }
    }
    out
}

fn lattice_to_xy(step: f64, (i, j): (i32, i32)) -> (f64, f64) {
    let half = 3f64.sqrt() / 2.0;
    (
        step * (f64::from(i) + 0.5 * f64::from(j)),
        step * half * f64::from(j),
    )
}

/// Remove redundant candidate circles, keeping a subset that still covers
/// every ground node and in which each retained circle covers at least one
/// node no other retained circle covers.
///
/// Circles covering zero nodes are dropped outright. Remaining redundant
/// circles (all their nodes shared) are removed one at a time — fewest
/// covered nodes first, ties broken toward the center farthest from the
/// origin — so coverage is preserved at every step.
///
/// Precondition: the candidate union covers all nodes.
pub fn prune(candidates: &[(f64, f64)], cell_radius: f64, gns: &[GroundNode]) -> Vec<(f64, f64)> {
    let lim = cell_radius * (1.0 + COVERAGE_TOL);
    let lim2 = lim * lim;
    let cover: Vec<Vec<usize>> = candidates
        .iter()
        .map(|&c| {
            gns.iter()
                .enumerate()
                .filter(|(_, g)| g.dist2(c) <= lim2)
                .map(|(k, _)| k)
                .collect()
        })
        .collect();

    let mut alive: Vec<usize> = (0..candidates.len())
        .filter(|&i| !cover[i].is_empty())
        .collect();
    let mut gn_count = vec![0usize; gns.len()];
    for &i in &alive {
        for &g in &cover[i] {
            gn_count[g] += 1;
        }
    }

    loop {
        let mut victim: Option<(usize, usize, f64)> = None; // (position, |cover|, dist2)
        for (pos, &i) in alive.iter().enumerate() {
            if !cover[i].iter().all(|&g| gn_count[g] >= 2) {
                continue;
            }
            let d2 = candidates[i].0 * candidates[i].0 + candidates[i].1 * candidates[i].1;
            let better = match victim {
                None => true,
                Some((_, len, dist2)) => {
                    cover[i].len() < len || (cover[i].len() == len && d2 > dist2)
                }
            };
            if better {
                victim = Some((pos, cover[i].len(), d2));
            }
        }
        match victim {
            Some((pos, _, _)) => {
                let i = alive.remove(pos);
                for &g in &cover[i] {
                    gn_count[g] -= 1;
                }
            }
            None => break,
        }
    }

    alive.into_iter().map(|i| candidates[i]).collect()
}

/// Cover the service disk with the fewest cells serving the given nodes.
///
/// Recursively splits the region into 7-circle layers until the candidate
/// circles fit inside one PAP cell, merges coincident candidates, then
/// prunes candidates at the final-level circle radius. A region no larger
/// than one cell short-circuits to a single center at the origin.
pub fn pack(region_radius: f64, spec: &CoverageSpec, gns: &[GroundNode]) -> Result<CellLayout> {
    if region_radius <= 0.0 || region_radius.is_nan() {
        return Err(Error::invalid(
            "region_radius",
            format!("must be > 0, got {region_radius}"),
        ));
    }
    let lim = region_radius * (1.0 + COVERAGE_TOL);
    for gn in gns {
        if gn.x * gn.x + gn.y * gn.y > lim * lim {
            return Err(Error::GnOutsideRegion {
                id: gn.id,
                x: gn.x,
                y: gn.y,
                region_radius,
            });
        }
    }

    if region_radius <= spec.radius {
        return Ok(CellLayout {
            centers: vec![(0.0, 0.0)],
            cell_radius: spec.radius,
            hover_height: spec.hover_height,
            levels: 0,
            region_radius,
        });
    }

    let grid = candidate_grid(region_radius, spec.radius)?;
    let centers = prune(&grid.centers, grid.level_radius, gns);

    Ok(CellLayout {
        centers,
        cell_radius: spec.radius,
        hover_height: spec.hover_height,
        levels: grid.levels,
        region_radius,
    })
}

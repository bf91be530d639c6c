use super::sampling::sample_separable;
use super::{Claim, GridCheck, MixingLine, OracleReport, SeparableMixer};
use crate::bd::{classify, density_matrix, BdState, Region};
use crate::error::{Error, Result};
use crate::measures::{random_robustness, robustness};
use crate::scalar::Scalar;

fn check_tol<T: Scalar>(tol: T) -> Result<()> {
    if tol > T::zero() && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol.to_f64_lossy()))
    }
}

/// Random robustness by PPT bisection along the line toward `I/4`, compared
/// against `2C` with tolerance `10 * tol`.
pub fn random_robustness_numeric<T: Scalar>(s: &BdState<T>, tol: T) -> Result<OracleReport<T>> {
    check_tol(tol)?;
    let closed_form = random_robustness(s);
    let mixer = SeparableMixer::maximally_mixed();
    let (numeric_value, samples_tried) = match classify(s) {
        Region::Separable => (T::zero(), 0),
        Region::Entangled(_) => {
            let line = MixingLine::new(&density_matrix(s), &mixer)?;
            (line.minimal_weight(tol)?, 1)
        }
    };
    Ok(OracleReport {
        claim: Claim::Equality,
        closed_form,
        numeric_value,
        gap: numeric_value - closed_form,
        samples_tried,
        tolerance: T::lit(10.0) * tol,
        witness: Some(mixer),
        grid: None,
    })
}

/// Integer lattice of `grid_n³` points on `[-1, 1]³`, filtered to the
/// octahedron `‖x‖₁ ≤ 1` exactly (in integer arithmetic).
fn octahedron_grid<T: Scalar>(grid_n: usize) -> impl Iterator<Item = [T; 3]> {
    let h = grid_n.saturating_sub(1) as i64;
    let n = grid_n as i64;
    let coord = move |a: i64| if h == 0 { T::zero() } else { T::lit(a as f64 / h as f64) };
    (0..n).flat_map(move |i| {
        (0..n).flat_map(move |j| {
            (0..n).filter_map(move |k| {
                let a = [2 * i - h, 2 * j - h, 2 * k - h];
                if a.iter().map(|x| x.abs()).sum::<i64>() <= h {
                    Some(a.map(coord))
                } else {
                    None
                }
            })
        })
    })
}

struct Best<T> {
    value: T,
    mixer: SeparableMixer<T>,
}

/// Tries one mixer; keeps it if strictly better than the current best.
fn consider<T: Scalar>(
    rho: &crate::linalg::DensityMatrix<T>,
    mixer: SeparableMixer<T>,
    best: &mut Option<Best<T>>,
    tol: T,
) -> Result<()> {
    let line = MixingLine::new(rho, &mixer)?;
    let value = match best {
        // Up-closedness: a mixer infeasible at the current best cannot beat it.
        Some(b) => {
            if !line.feasible(b.value)? {
                return Ok(());
            }
            line.bisect(T::zero(), b.value, tol)?
        }
        None => match line.minimal_weight(tol) {
            Ok(v) => v,
            Err(Error::NoFeasiblePoint(_)) => return Ok(()),
            Err(e) => return Err(e),
        },
    };
    if best.as_ref().map_or(true, |b| value < b.value) {
        *best = Some(Best { value, mixer });
    }
    Ok(())
}

/// Numerical minimum of the robustness over (a) Bell-diagonal mixers on a
/// `grid_n³` lattice clipped to the octahedron and (b) `n_random` seeded
/// product mixtures (mixer `i` uses seed `seed + i`).
///
/// The report claims the closed form is a lower bound for every mixer tried,
/// and that the grid gets within `1 / grid_n` of it. Ties keep the first
/// mixer visited (grid in lexicographic order, then samples in seed order).
///
/// For Bell-diagonal mixers the lower bound is elementary: mixing moves `t` to
/// `(t + s m)/(1 + s)` and `‖t + s m‖₁ ≥ ‖t‖₁ − s‖m‖₁ ≥ L − s`, so separability
/// `‖·‖₁ ≤ 1 + s` forces `s ≥ (L − 1)/2`. A general separable mixer twirls to a
/// Bell-diagonal one without increasing the required weight, so the bound
/// holds for all separable mixers.
pub fn absolute_robustness_search<T: Scalar>(
    s: &BdState<T>,
    n_random: usize,
    grid_n: usize,
    seed: u64,
    tol: T,
) -> Result<OracleReport<T>> {
    check_tol(tol)?;
    if classify(s) == Region::Separable {
        return Err(Error::NotEntangled);
    }
    let closed_form = robustness(s).s;
    debug_assert!(closed_form >= (s.level() - T::one()) * T::lit(0.5) - tol);
    let rho = density_matrix(s);

    let mut best: Option<Best<T>> = None;
    let mut points = 0usize;
    for m in octahedron_grid::<T>(grid_n) {
        points += 1;
        consider(&rho, SeparableMixer::bd_point(m)?, &mut best, tol)?;
    }
    let grid = match (&best, grid_n) {
        (_, 0) => None,
        (Some(b), _) => Some(GridCheck {
            grid_n,
            points,
            best: b.value,
            bound: T::lit(1.0 / grid_n as f64),
        }),
        (None, _) => return Err(Error::NoFeasiblePoint(super::WEIGHT_CAP)),
    };

    for i in 0..n_random {
        consider(&rho, sample_separable(seed.wrapping_add(i as u64)), &mut best, tol)?;
    }
    let best = best.ok_or(Error::NoFeasiblePoint(super::WEIGHT_CAP))?;

    Ok(OracleReport {
        claim: Claim::LowerBound,
        closed_form,
        numeric_value: best.value,
        gap: best.value - closed_form,
        samples_tried: points + n_random,
        tolerance: tol,
        witness: Some(best.mixer),
        grid,
    })
}

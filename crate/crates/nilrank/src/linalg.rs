//! Small exact linear algebra over ℚ(i).
//!
//! Dimensions here never exceed a few dozen, so plain fraction-free-ish
//! Gauss–Jordan with exact arithmetic is all that is needed.

use num::rational::BigRational;
use num::traits::Signed;

use crate::scalar::GaussianRational;

pub type Matrix = Vec<Vec<GaussianRational>>;

/// Reduced row echelon form in place; returns pivot column indices.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = (&*x) * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let sub = (&f) * (&m[r][j]);
                    m[i][j] -= &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// Basis of the right kernel `{x : Mx = 0}`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<GaussianRational>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut mm = m.clone();
    let pivots = rref(&mut mm);
    let mut basis = Vec::new();
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![GaussianRational::zero(); cols];
        v[free] = GaussianRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -mm[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `Σ xᵢ·basisᵢ = target` when `target` lies in the span; exact.
pub fn express_in_span(
    basis: &[Vec<GaussianRational>],
    target: &[GaussianRational],
) -> Option<Vec<GaussianRational>> {
    let dim = target.len();
    if basis.is_empty() {
        return if target.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    // Augmented system: columns are basis vectors, last column the target.
    let mut m: Matrix = (0..dim)
        .map(|i| {
            let mut row: Vec<GaussianRational> =
                basis.iter().map(|b| b[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&basis.len()) {
        return None; // inconsistent: pivot in the augmented column
    }
    let mut x = vec![GaussianRational::zero(); basis.len()];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = m[row][basis.len()].clone();
    }
    Some(x)
}

/// Span membership test.
pub fn in_span(basis: &[Vec<GaussianRational>], target: &[GaussianRational]) -> bool {
    express_in_span(basis, target).is_some()
}

/// A linear constraint `Σ coeffs·x {==|>=} rhs` over ℚ.
#[derive(Clone, Debug)]
pub struct RatConstraint {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
    pub equality: bool,
}

/// Exact feasibility of a small rational system by Fourier–Motzkin
/// elimination (equalities substituted first). Intended for a handful of
/// variables; used by the facial-reduction nonnegative-combination search.
pub fn fm_feasible(nvars: usize, constraints: &[RatConstraint]) -> bool {
    use num::traits::Zero;
    let mut eqs: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    let mut ineqs: Vec<(Vec<BigRational>, BigRational)> = Vec::new();
    for c in constraints {
        assert_eq!(c.coeffs.len(), nvars);
        if c.equality {
            eqs.push((c.coeffs.clone(), c.rhs.clone()));
        } else {
            ineqs.push((c.coeffs.clone(), c.rhs.clone()));
        }
    }
    let mut live: Vec<bool> = vec![true; nvars];

    // Substitute out equalities one at a time.
    while let Some((eq_idx, var)) = eqs.iter().enumerate().find_map(|(k, (co, _))| {
        co.iter()
            .enumerate()
            .find(|(j, c)| live[*j] && !c.is_zero())
            .map(|(j, _)| (k, j))
    }) {
        let (co, rhs) = eqs.swap_remove(eq_idx);
        let pivot = co[var].clone();
        // var = (rhs - Σ_{j≠var} co_j x_j) / pivot
        let sub = |target_co: &mut Vec<BigRational>, target_rhs: &mut BigRational| {
            let f = &target_co[var] / &pivot;
            if f.is_zero() {
                return;
            }
            for j in 0..nvars {
                if j == var {
                    target_co[j] = BigRational::zero();
                } else {
                    let d = &f * &co[j];
                    target_co[j] = &target_co[j] - &d;
                }
            }
            let d = &f * &rhs;
            *target_rhs = &*target_rhs - &d;
        };
        for (c2, r2) in eqs.iter_mut() {
            sub(c2, r2);
        }
        for (c2, r2) in ineqs.iter_mut() {
            sub(c2, r2);
        }
        live[var] = false;
    }
    // Remaining equalities have no live variables: must read 0 == rhs.
    for (co, rhs) in &eqs {
        let active = co.iter().enumerate().any(|(j, c)| live[j] && !c.is_zero());
        if !active && !rhs.is_zero() {
            return false;
        }
    }

    // Fourier–Motzkin on the inequalities (all of form Σ co·x >= rhs).
    let mut current = ineqs;
    for v in 0..nvars {
        if !live[v] {
            continue;
        }
        let mut lower = Vec::new(); // co_v > 0: x_v >= ...
        let mut upper = Vec::new(); // co_v < 0: x_v <= ...
        let mut rest = Vec::new();
        for (co, rhs) in current.drain(..) {
            if co[v].is_zero() {
                rest.push((co, rhs));
            } else if co[v].is_positive() {
                lower.push((co, rhs));
            } else {
                upper.push((co, rhs));
            }
        }
        for (lc, lr) in &lower {
            for (uc, ur) in &upper {
                // Combine to eliminate v: (lc/lv)·... >= ... with lv>0, uv<0.
                let lv = lc[v].clone();
                let uv = uc[v].clone();
                let mut co = vec![BigRational::zero(); nvars];
                for j in 0..nvars {
                    if j == v {
                        continue;
                    }
                    // -uv·lc_j + lv·uc_j  (>= -uv·lr + lv·ur), with -uv > 0
                    co[j] = -(&uv) * &lc[j] + &lv * &uc[j];
                }
                let rhs = -(&uv) * lr + &lv * ur;
                rest.push((co, rhs));
            }
        }
        current = rest;
    }
    // All variables eliminated: constraints are 0 >= rhs.
    current.iter().all(|(_, rhs)| !rhs.is_positive())
}

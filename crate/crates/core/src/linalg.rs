//! Dense complex linear solve for the fixed-size Langevin system.
//!
//! Direct LU elimination with partial pivoting on a 6x6 complex matrix; the
//! system is tiny and well conditioned for positive dissipation rates, so no
//! iterative refinement is needed.

use num_complex::Complex64;

use crate::{Error, Result};

pub(crate) const DIM: usize = 6;

/// Solve A·X = B for all columns of B at once. Returns X column-major in the
/// same `[row][col]` layout as the inputs.
pub(crate) fn solve_columns(
    a: &[[Complex64; DIM]; DIM],
    b: &[[Complex64; DIM]; DIM],
    omega: f64,
) -> Result<[[Complex64; DIM]; DIM]> {
    let mut lu = *a;
    let mut x = *b;
    let mut perm = [0usize; DIM];
    for (i, p) in perm.iter_mut().enumerate() {
        *p = i;
    }

    for col in 0..DIM {
        // Partial pivot on the largest remaining magnitude in this column.
        let mut pivot_row = col;
        let mut pivot_mag = lu[col][col].norm_sqr();
        for row in col + 1..DIM {
            let mag = lu[row][col].norm_sqr();
            if mag > pivot_mag {
                pivot_mag = mag;
                pivot_row = row;
            }
        }
        if pivot_mag == 0.0 || !pivot_mag.is_finite() {
            return Err(Error::SingularSystem { omega });
        }
        if pivot_row != col {
            lu.swap(col, pivot_row);
            x.swap(col, pivot_row);
            perm.swap(col, pivot_row);
        }

        let pivot = lu[col][col];
        for row in col + 1..DIM {
            let factor = lu[row][col] / pivot;
            lu[row][col] = factor;
            for k in col + 1..DIM {
                let sub = factor * lu[col][k];
                lu[row][k] -= sub;
            }
            for k in 0..DIM {
                let sub = factor * x[col][k];
                x[row][k] -= sub;
            }
        }
    }

    // Back substitution, all right-hand sides together.
    for row in (0..DIM).rev() {
        for upper in row + 1..DIM {
            let coef = lu[row][upper];
            for k in 0..DIM {
                let sub = coef * x[upper][k];
                x[row][k] -= sub;
            }
        }
        let pivot = lu[row][row];
        for k in 0..DIM {
            x[row][k] /= pivot;
        }
    }

    Ok(x)
}

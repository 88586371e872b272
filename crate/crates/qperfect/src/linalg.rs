//! Dense Gaussian elimination over GF(q) for the small systems that turn up
//! in geometry and syndrome work (a handful of rows, m or fewer columns).
//! Code-length subspaces live in `components::SubspaceBasis` instead.

use crate::gf::{El, FieldSpec};

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each surviving row, strictly increasing.
pub(crate) fn rref(f: &FieldSpec, rows: &mut Vec<Vec<El>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(found) = (next_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(next_row, found);
        let scale = f.inv_u(rows[next_row][col]);
        for x in rows[next_row].iter_mut() {
            *x = f.mul_u(*x, scale);
        }
        for r in 0..rows.len() {
            if r != next_row && rows[r][col] != 0 {
                let c = f.neg_u(rows[r][col]);
                for i in 0..ncols {
                    let add = f.mul_u(c, rows[next_row][i]);
                    rows[r][i] = f.add_u(rows[r][i], add);
                }
            }
        }
        pivots.push(col);
        next_row += 1;
        if next_row == rows.len() {
            break;
        }
    }
    rows.truncate(next_row);
    pivots
}

pub(crate) fn rank(f: &FieldSpec, rows: &[Vec<El>]) -> usize {
    let mut copy = rows.to_vec();
    rref(f, &mut copy).len()
}

/// True when v lies in the row space of `rows`. Test-only cross-check for
/// the echelon membership in [`crate::components::SubspaceBasis`].
#[cfg(test)]
pub(crate) fn in_row_space(f: &FieldSpec, rows: &[Vec<El>], v: &[El]) -> bool {
    let base = rank(f, rows);
    let mut extended = rows.to_vec();
    extended.push(v.to_vec());
    rank(f, &extended) == base
}

/// Basis of the right kernel {x : M x = 0}, where the rows of M are given.
/// One basis vector per free column, in increasing column order: the vector
/// for free column j has a 1 at j and pivot-row back-substitutions elsewhere.
pub(crate) fn null_space(f: &FieldSpec, rows: &[Vec<El>], ncols: usize) -> Vec<Vec<El>> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut reduced = rows.to_vec();
    let pivots = rref(f, &mut reduced);
    let mut basis = Vec::with_capacity(ncols - pivots.len());
    for j in 0..ncols {
        if pivots.contains(&j) {
            continue;
        }
        let mut x = vec![0 as El; ncols];
        x[j] = 1;
        for (row, &p) in reduced.iter().zip(&pivots) {
            x[p] = f.neg_u(row[j]);
        }
        basis.push(x);
    }
    basis
}

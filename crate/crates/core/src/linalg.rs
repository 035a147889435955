//! Dense Gaussian elimination over any [`FieldOps`] field.

use crate::ff::FieldOps;

/// Reduced row echelon form of a matrix together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon<E> {
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
}

impl<E> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Row reduces `rows` (all of length `ncols`) to reduced row echelon form.
/// Zero rows are dropped.
pub fn rref<F: FieldOps>(field: &F, mut rows: Vec<Vec<F::Elem>>, ncols: usize) -> Echelon<F::Elem> {
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(&rows[r][col]).expect("nonzero pivot");
        for x in rows[r].iter_mut().skip(col) {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[col]) {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !field.is_zero(p) {
                    *x = field.sub(x, &field.mul(&factor, p));
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

pub fn rank<F: FieldOps>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> usize {
    rref(field, rows, ncols).rank()
}

/// Basis of `{x : A x = 0}` for `A` given by `rows`, in reduced row echelon form.
pub fn nullspace<F: FieldOps>(field: &F, rows: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    let ech = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            v[p] = field.sub(&field.zero(), &row[free]);
        }
        basis.push(v);
    }
    rref(field, basis, ncols).rows
}

/// Finds coefficients `c` with `sum c_i vectors[i] = target`, if any.
pub fn solve_combination<F: FieldOps>(field: &F, vectors: &[Vec<F::Elem>], target: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let k = vectors.len();
    let dim = target.len();
    let rows: Vec<Vec<F::Elem>> = (0..dim)
        .map(|i| {
            let mut row: Vec<F::Elem> = vectors.iter().map(|v| v[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let ech = rref(field, rows, k + 1);
    if ech.pivots.last() == Some(&k) {
        return None;
    }
    let mut c = vec![field.zero(); k];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        c[p] = row[k].clone();
    }
    Some(c)
}

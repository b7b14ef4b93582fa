//! Dense Gaussian elimination over GF(q).

use crate::galois::{Elt, Field};

/// Row-reduces `m` in place and returns the pivot columns.
fn eliminate(field: &Field, m: &mut [Vec<Elt>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = field.inv(m[row][col]).expect("pivot is nonzero");
        for v in m[row].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = m[row].clone();
        for (r, target) in m.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let lam = field.neg(target[col]);
                for (t, &pv) in target.iter_mut().zip(&pivot_row) {
                    *t = field.add(*t, field.mul(lam, pv));
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(field: &Field, m: &[Vec<Elt>]) -> usize {
    eliminate(field, &mut m.to_vec()).len()
}

/// Solves the square system A·x = b; `None` if A is singular.
pub fn solve(field: &Field, a: &[Vec<Elt>], b: &[Elt]) -> Option<Vec<Elt>> {
    let n = a.len();
    let mut aug: Vec<Vec<Elt>> = a
        .iter()
        .zip(b)
        .map(|(row, &v)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.push(v);
            r
        })
        .collect();
    let piv = eliminate(field, &mut aug);
    (piv.len() == n && piv.iter().enumerate().all(|(k, &c)| k == c)).then(|| aug.iter().map(|r| r[n]).collect())
}

//! Smith normal form of integer matrices, with the unimodular transforms.
//!
//! All arithmetic is exact on `i64` with overflow checks.

use alloc::vec;
use alloc::vec::Vec;

/// `left · A · right = diag(d_1, …, d_r, 0, …)` with `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    /// The diagonal of the normal form, length `min(rows, cols)`.
    pub diagonal: Vec<i64>,
    pub left: Vec<Vec<i64>>,
    pub right: Vec<Vec<i64>>,
}

/// `Z^rows / A·Z^cols ≅ Z^free_rank ⊕ ⊕ Z/t_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cokernel {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

fn ck(v: Option<i64>) -> i64 {
    v.expect("integer overflow in Smith normal form")
}

// row_dst -= q * row_src, mirrored on the left transform
fn row_axpy(a: &mut [Vec<i64>], dst: usize, src: usize, q: i64) {
    let (s, d) = if src < dst {
        let (lo, hi) = a.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    };
    for (x, &y) in d.iter_mut().zip(s.iter()) {
        *x = ck(x.checked_sub(ck(q.checked_mul(y))));
    }
}

fn col_axpy(a: &mut [Vec<i64>], dst: usize, src: usize, q: i64) {
    for row in a.iter_mut() {
        row[dst] = ck(row[dst].checked_sub(ck(q.checked_mul(row[src]))));
    }
}

fn col_swap(a: &mut [Vec<i64>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

pub fn smith_normal_form(matrix: &[Vec<i64>]) -> SmithForm {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    assert!(matrix.iter().all(|r| r.len() == cols), "ragged matrix");

    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let mut left = identity(rows);
    let mut right = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // pivot: smallest nonzero |entry| in the trailing block
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| a[i][j] != 0)
                .min_by_key(|&(i, j)| a[i][j].unsigned_abs());
            let Some((pi, pj)) = pivot else {
                break;
            };
            a.swap(t, pi);
            left.swap(t, pi);
            col_swap(&mut a, t, pj);
            col_swap(&mut right, t, pj);

            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    row_axpy(&mut a, i, t, q);
                    row_axpy(&mut left, i, t, q);
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    col_axpy(&mut a, j, t, q);
                    col_axpy(&mut right, j, t, q);
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    // fold the offending row into the pivot row and redo
                    row_axpy(&mut a, t, i, -1);
                    row_axpy(&mut left, t, i, -1);
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
            for x in left[t].iter_mut() {
                *x = -*x;
            }
        }
    }

    let diagonal = (0..rows.min(cols)).map(|i| a[i][i]).collect();
    SmithForm { rows, cols, diagonal, left, right }
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|&&d| d != 0).count()
    }

    pub fn invariant_factors(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d != 0).collect()
    }

    pub fn cokernel(&self) -> Cokernel {
        Cokernel {
            free_rank: self.rows - self.rank(),
            torsion: self.invariant_factors().into_iter().filter(|&d| d > 1).collect(),
        }
    }

    /// Whether `v ∈ Z^rows` lies in the column span of the original matrix,
    /// i.e. vanishes in the cokernel.
    pub fn in_image(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.rows);
        let w: Vec<i64> = self
            .left
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| ck(a.checked_mul(*b))).sum())
            .collect();
        w.iter().enumerate().all(|(i, &x)| match self.diagonal.get(i) {
            Some(&d) if d != 0 => x % d == 0,
            _ => x == 0,
        })
    }
}

pub fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut t = vec![vec![0; a.len()]; cols];
    for (i, row) in a.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            t[j][i] = x;
        }
    }
    t
}

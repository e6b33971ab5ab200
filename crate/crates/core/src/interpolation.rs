//! `h⁰(Y, dH − Σ m_i E_i)` as the dimension of plane curves of degree `d`
//! with multiplicity at least `m_i` at `P_i`.
//!
//! The points are `P0 = (1:0:0)`, `P1 = (0:1:0)`, `P2 = (0:0:1)`,
//! `P3 = (1:1:1)`. Multiplicity `≥ m` at `P` means every Taylor coefficient
//! of order `< m` vanishes in an affine chart around `P`; these linear
//! conditions on the coefficients form the interpolation matrix, whose rank
//! is computed exactly.

use alloc::vec::Vec;

use crate::picard::DivClass;

pub const POINTS: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];

/// Exponent vectors `(a0, a1, a2)` of the degree-`d` monomials, in
/// lexicographic order.
pub fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a0 in (0..=d).rev() {
        for a1 in (0..=d - a0).rev() {
            out.push([a0, a1, d - a0 - a1]);
        }
    }
    out
}

fn binomial(n: u32, k: u32) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Coefficient of `t_a^{b_a} t_b^{b_b}` in `x^alpha` written in the chart
/// `x_k = 1` around `p` (with `p_k = 1`), `t_j = x_j − p_j`.
fn taylor_coefficient(alpha: [u32; 3], p: [i64; 3], k: usize, beta: [u32; 3]) -> i64 {
    (0..3)
        .filter(|&j| j != k)
        .map(|j| {
            if beta[j] > alpha[j] {
                return 0;
            }
            binomial(alpha[j], beta[j]) * p[j].pow(alpha[j] - beta[j])
        })
        .product()
}

/// One row per Taylor coefficient of order `< m_i` at each `P_i`, one column
/// per degree-`d` monomial.
pub fn interpolation_matrix(d: u32, mults: [u32; 4]) -> Vec<Vec<i64>> {
    let mons = monomials(d);
    let mut rows = Vec::new();
    for (p, &m) in POINTS.iter().zip(mults.iter()) {
        let k = p.iter().position(|&c| c != 0).expect("points are nonzero");
        let (a, b) = match k {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        for order in 0..m {
            for i in 0..=order {
                let mut beta = [0u32; 3];
                beta[a] = i;
                beta[b] = order - i;
                rows.push(mons.iter().map(|&alpha| taylor_coefficient(alpha, *p, k, beta)).collect());
            }
        }
    }
    rows
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Rank over `Q` of an integer matrix. Fraction-free elimination; each row is
/// divided by its content after every step so entries stay small. Exact:
/// overflow panics.
pub fn rank(matrix: &[Vec<i64>]) -> usize {
    let mut rows: Vec<Vec<i128>> =
        matrix.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[col];
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col];
            if f == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(pivot_row.iter()) {
                *x = x
                    .checked_mul(pv)
                    .and_then(|a| f.checked_mul(y).and_then(|b| a.checked_sub(b)))
                    .expect("overflow in exact elimination");
            }
            let g = row.iter().fold(0, |g, &x| gcd(g, x));
            if g > 1 {
                row.iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

/// Number of monomials of degree `d` in three variables.
pub fn monomial_count(d: u32) -> u32 {
    (d + 1) * (d + 2) / 2
}

/// `h⁰(Y, c)`. Negative degree gives 0; a negative multiplicity means the
/// exceptional curve is a fixed component and is dropped.
pub fn h0(c: &DivClass) -> u32 {
    if c.h < 0 {
        return 0;
    }
    let d = c.h as u32;
    let mults = c.e.map(|e| (-e).max(0) as u32);
    let matrix = interpolation_matrix(d, mults);
    monomial_count(d) - rank(&matrix) as u32
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::picard::canonical_class;

    #[test]
    fn monomial_lists() {
        assert_eq!(monomials(0), [[0, 0, 0]]);
        assert_eq!(monomials(1), [[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        for d in 0..6 {
            assert_eq!(monomials(d).len() as u32, monomial_count(d));
        }
    }

    #[test]
    fn simple_values() {
        assert_eq!(h0(&DivClass::ZERO), 1);
        assert_eq!(h0(&DivClass::H), 3);
        assert_eq!(h0(&DivClass::new(2, [0; 4])), 6);
        assert_eq!(h0(&DivClass::new(-1, [0; 4])), 0);
        // fixed exceptional components do not add sections
        assert_eq!(h0(&DivClass::new(0, [1, 0, 0, 0])), 1);
        assert_eq!(h0(&DivClass::new(1, [0, 2, 0, 0])), 3);
    }

    #[test]
    fn anticanonical_and_conics() {
        // cubics through four points: 10 − 4
        assert_eq!(h0(&-canonical_class()), 6);
        // conics through the four points: a pencil
        assert_eq!(h0(&DivClass::new(2, [-1; 4])), 2);
        // lines through three non-collinear points
        assert_eq!(h0(&DivClass::new(1, [-1, -1, -1, 0])), 0);
        // the line P0 P1
        assert_eq!(h0(&DivClass::new(1, [-1, -1, 0, 0])), 1);
        // lines with a double point: none; conics double at P0 through P1:
        // pairs of lines through P0 with one through P1
        assert_eq!(h0(&DivClass::new(1, [-2, 0, 0, 0])), 0);
        assert_eq!(h0(&DivClass::new(2, [-2, -1, 0, 0])), 2);
    }

    #[test]
    fn canonical_twists() {
        let k = canonical_class();
        assert_eq!(h0(&k), 0);
        assert_eq!(h0(&(k + DivClass::new(3, [-1; 4]))), 1);
        assert_eq!(h0(&(k + DivClass::H)), 0);
    }

    #[test]
    fn multiplicity_two_at_p3() {
        // quartics with a double point at (1:1:1): 15 − 3
        assert_eq!(h0(&DivClass::new(4, [0, 0, 0, -2])), 12);
        assert_eq!(rank(&interpolation_matrix(4, [0, 0, 0, 2])), 3);
    }

    #[test]
    fn rank_basics() {
        use alloc::vec;
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![2, 3, 5], vec![7, 11, 13], vec![17, 19, 23]]), 3);
        assert_eq!(rank(&[]), 0);
    }
}

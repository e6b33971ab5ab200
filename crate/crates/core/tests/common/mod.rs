//! Independent oracles for the integration and acceptance tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quadrangle_core::canonical::MonomialIdeal2D;
use quadrangle_core::covers::{enumerate_admissible, SixTuple};
use quadrangle_core::{DivClass, Modulus};

pub const M: Modulus = Modulus::FIVE;

pub fn tuple(r: [i64; 12]) -> SixTuple {
    SixTuple::from_residues(M, &r).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws `k` tuples (with replacement) from the full admissible set.
pub fn sample_admissible(all: &[SixTuple], k: usize, seed: u64) -> Vec<SixTuple> {
    let mut r = rng(seed);
    (0..k).map(|_| all[r.gen_range(0..all.len())]).collect()
}

pub fn all_admissible() -> Vec<SixTuple> {
    enumerate_admissible(M)
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Rank over `Q` by plain Gaussian elimination on big rationals.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][c].recip();
        let pivot: Vec<BigRational> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

const POINTS: [[i64; 3]; 4] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];

fn falling(a: u32, k: u32) -> i64 {
    (0..k).map(|i| (a - i) as i64).product()
}

/// `h⁰(dH − Σ m_i E_i)` from the homogeneous criterion: a degree-`d` form
/// has multiplicity `≥ m` at `P` iff all its partials of order `m − 1`
/// vanish at `P`.
pub fn h0_oracle(c: &DivClass) -> u32 {
    if c.h < 0 {
        return 0;
    }
    let d = c.h as u32;
    let mults: Vec<u32> = c.e.iter().map(|&e| (-e).max(0) as u32).collect();
    // a nonzero form of degree d has multiplicity at most d
    if mults.iter().any(|&m| m > d) {
        return 0;
    }
    let mut mons = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            mons.push([a, b, d - a - b]);
        }
    }
    let mut rows = Vec::new();
    for (p, &m) in POINTS.iter().zip(&mults) {
        if m == 0 {
            continue;
        }
        let k = m - 1;
        for b0 in 0..=k {
            for b1 in 0..=k - b0 {
                let beta = [b0, b1, k - b0 - b1];
                rows.push(
                    mons.iter()
                        .map(|alpha| {
                            let mut v = 1i64;
                            for j in 0..3 {
                                if beta[j] > alpha[j] {
                                    return q(0);
                                }
                                v *= falling(alpha[j], beta[j])
                                    * p[j].pow(alpha[j] - beta[j]);
                            }
                            q(v)
                        })
                        .collect(),
                );
            }
        }
    }
    mons.len() as u32 - rational_rank(rows) as u32
}

/// Polynomial in `x, y` as `(a, b, coefficient)` terms.
type Poly = Vec<(u32, u32, BigInt)>;

fn generic_member(ideal: &MonomialIdeal2D, r: &mut ChaCha8Rng) -> Poly {
    ideal
        .generators
        .iter()
        .map(|&(a, b)| (a, b, BigInt::from(r.gen_range(1i64..1000))))
        .collect()
}

/// Coefficients in `y` of `p(x0, y)`, index = power of `y`.
fn specialize(p: &Poly, x0: &BigRational) -> Vec<BigRational> {
    let deg = p.iter().map(|t| t.1).max().unwrap_or(0) as usize;
    let mut out = vec![BigRational::zero(); deg + 1];
    for (a, b, c) in p {
        out[*b as usize] += BigRational::from_integer(c.clone()) * num_traits::pow(x0.clone(), *a as usize);
    }
    out
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c].clone();
        let inv = m[c][c].recip();
        for r in c + 1..n {
            let f = &m[r][c] * &inv;
            if f.is_zero() {
                continue;
            }
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    det
}

/// Sylvester resultant of two polynomials given by coefficient lists.
fn sylvester(f: &[BigRational], g: &[BigRational]) -> BigRational {
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let n = df + dg;
    if n == 0 {
        return BigRational::one();
    }
    let mut rows = vec![vec![BigRational::zero(); n]; n];
    for i in 0..dg {
        for (k, c) in f.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..df {
        for (k, c) in g.iter().rev().enumerate() {
            rows[dg + i][i + k] = c.clone();
        }
    }
    determinant(rows)
}

/// Coefficients of the polynomial through the points `(x_i, v_i)`.
fn interpolate(xs: &[BigRational], vs: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut coeffs = vec![BigRational::zero(); n];
    for i in 0..n {
        // basis polynomial Π_{j≠i} (x − x_j)/(x_i − x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c.clone();
                next[k] -= c * &xs[j];
            }
            basis = next;
            denom *= &xs[i] - &xs[j];
        }
        let scale = &vs[i] / denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    coeffs
}

/// `ord_x Res_y(f, g)` for two random members of `ideal`. The ideal has a
/// pure `y`-power generator, so the leading `y`-coefficient is a nonzero
/// constant and the order equals the intersection multiplicity at the
/// origin.
pub fn intersection_multiplicity(ideal: &MonomialIdeal2D, seed: u64) -> u32 {
    let mut r = rng(seed);
    let f = generic_member(ideal, &mut r);
    let g = generic_member(ideal, &mut r);
    let deg_x = |p: &Poly| p.iter().map(|t| t.0).max().unwrap_or(0);
    let deg_y = |p: &Poly| p.iter().map(|t| t.1).max().unwrap_or(0);
    let bound = (deg_x(&f) * deg_y(&g) + deg_x(&g) * deg_y(&f)) as i64;
    let xs: Vec<BigRational> = (1..=bound + 1).map(q).collect();
    let vs: Vec<BigRational> =
        xs.iter().map(|x| sylvester(&specialize(&f, x), &specialize(&g, x))).collect();
    let coeffs = interpolate(&xs, &vs);
    coeffs.iter().position(|c| !c.is_zero()).expect("resultant is not zero") as u32
}

//! Arithmetic over `Z/nZ` for a small prime `n`: scalars, 2-vectors, `2×2`
//! matrices and the `12×12` matrices that act on stacked six-tuples.
//!
//! Residues are always kept in `0..n`. Values do not carry their modulus;
//! every operation goes through a [`Modulus`].

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A prime modulus in `2..=31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Modulus(u8);

/// A residue in `0..n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FScalar(u8);

/// An element of `(Z/nZ)²`: a loop image or a character `(a, b)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FVec2 {
    pub x: FScalar,
    pub y: FScalar,
}

/// `[[a, b], [c, d]]`, acting on column vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FMat2 {
    pub a: FScalar,
    pub b: FScalar,
    pub c: FScalar,
    pub d: FScalar,
}

/// A `12×12` matrix acting on a six-tuple stacked as
/// `(u1.x, u1.y, u2.x, …, v3.y)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FMat12([[u8; 12]; 12]);

impl FScalar {
    pub const ZERO: FScalar = FScalar(0);
    pub const ONE: FScalar = FScalar(1);

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FVec2 {
    pub const ZERO: FVec2 = FVec2 { x: FScalar::ZERO, y: FScalar::ZERO };

    pub const fn is_zero(self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl fmt::Display for FVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Modulus {
    pub const FIVE: Modulus = Modulus(5);
    pub const MAX: u32 = 31;

    pub fn new(n: u32) -> Result<Self> {
        if (2..=Self::MAX).contains(&n) && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0) {
            Ok(Modulus(n as u8))
        } else {
            Err(Error::InvalidModulus(n))
        }
    }

    pub const fn get(self) -> u8 {
        self.0
    }

    /// Reduces any integer into `0..n`.
    pub fn scalar(self, v: i64) -> FScalar {
        FScalar(v.rem_euclid(self.0 as i64) as u8)
    }

    pub fn vec(self, x: i64, y: i64) -> FVec2 {
        FVec2 { x: self.scalar(x), y: self.scalar(y) }
    }

    pub fn add(self, a: FScalar, b: FScalar) -> FScalar {
        FScalar(((a.0 as u16 + b.0 as u16) % self.0 as u16) as u8)
    }

    pub fn neg(self, a: FScalar) -> FScalar {
        if a.0 == 0 {
            a
        } else {
            FScalar(self.0 - a.0)
        }
    }

    pub fn sub(self, a: FScalar, b: FScalar) -> FScalar {
        self.add(a, self.neg(b))
    }

    pub fn mul(self, a: FScalar, b: FScalar) -> FScalar {
        FScalar(((a.0 as u16 * b.0 as u16) % self.0 as u16) as u8)
    }

    pub fn pow(self, a: FScalar, e: u32) -> FScalar {
        (0..e).fold(FScalar::ONE, |acc, _| self.mul(acc, a))
    }

    pub fn inv(self, a: FScalar) -> Option<FScalar> {
        if a.is_zero() {
            return None;
        }
        // Fermat: a^(n-2)
        Some(self.pow(a, self.0 as u32 - 2))
    }

    /// Multiplicative order of a nonzero residue.
    pub fn order(self, a: FScalar) -> Option<u32> {
        if a.is_zero() {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != FScalar::ONE {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// The smallest generator of `(Z/n)^×`.
    pub fn primitive_root(self) -> FScalar {
        (1..self.0)
            .map(FScalar)
            .find(|&g| self.order(g) == Some(self.0 as u32 - 1))
            .expect("prime moduli have primitive roots")
    }

    pub fn scalars(self) -> impl Iterator<Item = FScalar> {
        (0..self.0).map(FScalar)
    }

    pub fn vadd(self, v: FVec2, w: FVec2) -> FVec2 {
        FVec2 { x: self.add(v.x, w.x), y: self.add(v.y, w.y) }
    }

    pub fn vneg(self, v: FVec2) -> FVec2 {
        FVec2 { x: self.neg(v.x), y: self.neg(v.y) }
    }

    pub fn vsub(self, v: FVec2, w: FVec2) -> FVec2 {
        self.vadd(v, self.vneg(w))
    }

    pub fn vscale(self, k: FScalar, v: FVec2) -> FVec2 {
        FVec2 { x: self.mul(k, v.x), y: self.mul(k, v.y) }
    }

    pub fn vsum<I: IntoIterator<Item = FVec2>>(self, it: I) -> FVec2 {
        it.into_iter().fold(FVec2::ZERO, |acc, v| self.vadd(acc, v))
    }

    /// All of `(Z/n)²` in lexicographic order.
    pub fn vectors(self) -> impl Iterator<Item = FVec2> {
        let n = self.0;
        (0..n).flat_map(move |x| (0..n).map(move |y| FVec2 { x: FScalar(x), y: FScalar(y) }))
    }

    pub fn nonzero_vectors(self) -> impl Iterator<Item = FVec2> {
        self.vectors().filter(|v| !v.is_zero())
    }

    /// Evaluates the character `chi = (a, b)` on `v = (x, y)`: `[a·x + b·y]`.
    pub fn chi_eval(self, chi: FVec2, v: FVec2) -> FScalar {
        self.add(self.mul(chi.x, v.x), self.mul(chi.y, v.y))
    }

    /// Additive order of a vector: 1 for zero, `n` otherwise.
    pub fn vec_order(self, v: FVec2) -> u32 {
        if v.is_zero() {
            1
        } else {
            self.0 as u32
        }
    }

    pub fn det2(self, v: FVec2, w: FVec2) -> FScalar {
        self.sub(self.mul(v.x, w.y), self.mul(v.y, w.x))
    }

    /// `true` iff `{v, w}` spans `(Z/n)²`.
    pub fn is_independent(self, v: FVec2, w: FVec2) -> bool {
        !self.det2(v, w).is_zero()
    }

    pub fn mat2(self, a: i64, b: i64, c: i64, d: i64) -> FMat2 {
        FMat2 { a: self.scalar(a), b: self.scalar(b), c: self.scalar(c), d: self.scalar(d) }
    }

    pub fn mat2_det(self, m: FMat2) -> FScalar {
        self.sub(self.mul(m.a, m.d), self.mul(m.b, m.c))
    }

    pub fn mat2_apply(self, m: FMat2, v: FVec2) -> FVec2 {
        FVec2 {
            x: self.add(self.mul(m.a, v.x), self.mul(m.b, v.y)),
            y: self.add(self.mul(m.c, v.x), self.mul(m.d, v.y)),
        }
    }

    pub fn mat2_mul(self, p: FMat2, q: FMat2) -> FMat2 {
        let dot = |r0: FScalar, r1: FScalar, c0: FScalar, c1: FScalar| {
            self.add(self.mul(r0, c0), self.mul(r1, c1))
        };
        FMat2 {
            a: dot(p.a, p.b, q.a, q.c),
            b: dot(p.a, p.b, q.b, q.d),
            c: dot(p.c, p.d, q.a, q.c),
            d: dot(p.c, p.d, q.b, q.d),
        }
    }

    /// Every element of `GL(2, Z/n)`, each once, in lexicographic order of
    /// `(a, b, c, d)`.
    pub fn gl2_enumerate(self) -> Vec<FMat2> {
        let n = self.0;
        let mut out = Vec::with_capacity(self.gl2_order() as usize);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let m = FMat2 { a: FScalar(a), b: FScalar(b), c: FScalar(c), d: FScalar(d) };
                        if !self.mat2_det(m).is_zero() {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(n² − 1)(n² − n)`.
    pub fn gl2_order(self) -> u64 {
        let n = self.0 as u64;
        (n * n - 1) * (n * n - n)
    }

    /// `diag(g, 1)` for a primitive root `g` together with the two elementary
    /// transvections; these generate `GL(2, Z/n)`.
    pub fn gl2_generators(self) -> [FMat2; 3] {
        let g = self.primitive_root().0 as i64;
        [self.mat2(g, 0, 0, 1), self.mat2(1, 1, 0, 1), self.mat2(1, 0, 1, 1)]
    }
}

impl Default for Modulus {
    fn default() -> Self {
        Modulus::FIVE
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FMat2 {
    pub const IDENTITY: FMat2 =
        FMat2 { a: FScalar::ONE, b: FScalar::ZERO, c: FScalar::ZERO, d: FScalar::ONE };
}

impl fmt::Display for FMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

impl FMat12 {
    pub const DIM: usize = 12;

    pub fn identity() -> Self {
        let mut e = [[0u8; 12]; 12];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = 1;
        }
        FMat12(e)
    }

    pub fn from_rows(rows: [[u8; 12]; 12]) -> Self {
        FMat12(rows)
    }

    /// The Kronecker product `slots ⊗ block`: slot `j` of the input
    /// contributes `slots[i][j] · block · v_j` to slot `i` of the output.
    pub fn kron(m: Modulus, slots: &[[u8; 6]; 6], block: FMat2) -> Self {
        let b = [[block.a.0, block.b.0], [block.c.0, block.d.0]];
        let mut e = [[0u8; 12]; 12];
        for i in 0..6 {
            for j in 0..6 {
                for r in 0..2 {
                    for c in 0..2 {
                        e[2 * i + r][2 * j + c] =
                            ((slots[i][j] as u16 * b[r][c] as u16) % m.0 as u16) as u8;
                    }
                }
            }
        }
        FMat12(e)
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[[u8; 12]; 12] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn mul(&self, m: Modulus, rhs: &FMat12) -> FMat12 {
        let n = m.0 as u32;
        let mut out = [[0u8; 12]; 12];
        for i in 0..12 {
            let mut acc = [0u32; 12];
            for k in 0..12 {
                let a = self.0[i][k] as u32;
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(rhs.0[k].iter()) {
                    *slot += a * b as u32;
                }
            }
            for j in 0..12 {
                out[i][j] = (acc[j] % n) as u8;
            }
        }
        FMat12(out)
    }

    pub fn apply(&self, m: Modulus, v: &[FScalar; 12]) -> [FScalar; 12] {
        let n = m.0 as u32;
        let mut out = [FScalar::ZERO; 12];
        for (i, row) in self.0.iter().enumerate() {
            let s: u32 = row.iter().zip(v).map(|(&a, b)| a as u32 * b.0 as u32).sum();
            out[i] = FScalar((s % n) as u8);
        }
        out
    }

    /// Invertibility over `Z/n` by Gaussian elimination.
    pub fn is_invertible(&self, m: Modulus) -> bool {
        let mut a: [[FScalar; 12]; 12] = [[FScalar::ZERO; 12]; 12];
        for i in 0..12 {
            for j in 0..12 {
                a[i][j] = FScalar(self.0[i][j]);
            }
        }
        for col in 0..12 {
            let Some(p) = (col..12).find(|&r| !a[r][col].is_zero()) else {
                return false;
            };
            a.swap(col, p);
            let inv = m.inv(a[col][col]).expect("pivot is nonzero");
            for r in 0..12 {
                if r != col && !a[r][col].is_zero() {
                    let f = m.mul(a[r][col], inv);
                    for c in col..12 {
                        let t = m.mul(f, a[col][c]);
                        a[r][c] = m.sub(a[r][c], t);
                    }
                }
            }
        }
        true
    }
}

impl fmt::Debug for FMat12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

//! The Picard lattice of `Y`, the plane blown up at `P0..P3`, and the
//! ten-curve branch configuration.
//!
//! Classes are written in the basis `(H, E0, E1, E2, E3)`, where the
//! intersection form is `diag(+1, −1, −1, −1, −1)`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;
use crate::snf::{smith_normal_form, SmithForm};

/// `h·H + Σ e_i·E_i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivClass {
    pub h: i64,
    pub e: [i64; 4],
}

/// A class with rational coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QDivClass {
    pub h: Rational,
    pub e: [Rational; 4],
}

/// The ten branch curves, in the fixed order used for every 10-vector in
/// this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveLabel {
    /// Strict transforms of the lines `P0 P_j`.
    L1p,
    L2p,
    L3p,
    /// Strict transforms of the lines `P_i P_k`, `{i, j, k} = {1, 2, 3}`.
    L1,
    L2,
    L3,
    E0,
    E1,
    E2,
    E3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchCurve {
    pub label: CurveLabel,
    pub cls: DivClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub curves: [BranchCurve; 10],
    /// Unordered pairs `(i, j)`, `i < j`, with `D_i · D_j = 1`, sorted.
    pub incidences: [(usize, usize); 15],
}

impl DivClass {
    pub const ZERO: DivClass = DivClass { h: 0, e: [0; 4] };
    pub const H: DivClass = DivClass { h: 1, e: [0; 4] };

    pub const fn new(h: i64, e: [i64; 4]) -> Self {
        DivClass { h, e }
    }

    pub const fn exceptional(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        DivClass { h: 0, e }
    }

    /// The intersection product.
    pub const fn dot(&self, other: &DivClass) -> i64 {
        self.h * other.h
            - self.e[0] * other.e[0]
            - self.e[1] * other.e[1]
            - self.e[2] * other.e[2]
            - self.e[3] * other.e[3]
    }

    pub const fn coords(&self) -> [i64; 5] {
        [self.h, self.e[0], self.e[1], self.e[2], self.e[3]]
    }

    pub const fn from_coords(c: [i64; 5]) -> Self {
        DivClass { h: c[0], e: [c[1], c[2], c[3], c[4]] }
    }

    pub fn is_zero(&self) -> bool {
        *self == DivClass::ZERO
    }
}

impl Add for DivClass {
    type Output = DivClass;
    fn add(self, rhs: DivClass) -> DivClass {
        let mut e = self.e;
        for (x, y) in e.iter_mut().zip(rhs.e) {
            *x += y;
        }
        DivClass { h: self.h + rhs.h, e }
    }
}

impl Neg for DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        DivClass { h: -self.h, e: self.e.map(|x| -x) }
    }
}

impl Sub for DivClass {
    type Output = DivClass;
    fn sub(self, rhs: DivClass) -> DivClass {
        self + (-rhs)
    }
}

impl Mul<DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, rhs: DivClass) -> DivClass {
        DivClass { h: self * rhs.h, e: rhs.e.map(|x| self * x) }
    }
}

impl core::iter::Sum for DivClass {
    fn sum<I: Iterator<Item = DivClass>>(iter: I) -> DivClass {
        iter.fold(DivClass::ZERO, Add::add)
    }
}

/// Renders as `3H - E0 - 2E1 - E2 - E3`; the zero class is `0`.
impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = [(self.h, "H")]
            .into_iter()
            .chain(self.e.iter().zip(["E0", "E1", "E2", "E3"]).map(|(&c, s)| (c, s)))
            .filter(|&(c, _)| c != 0);
        let mut first = true;
        for (c, name) in terms {
            let sign = if c < 0 { "-" } else { "+" };
            match (first, c.abs()) {
                (true, 1) if c < 0 => write!(f, "-{name}")?,
                (true, 1) => write!(f, "{name}")?,
                (true, a) if c < 0 => write!(f, "-{a}{name}")?,
                (true, a) => write!(f, "{a}{name}")?,
                (false, 1) => write!(f, " {sign} {name}")?,
                (false, a) => write!(f, " {sign} {a}{name}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl QDivClass {
    pub fn dot(&self, other: &QDivClass) -> Rational {
        self.e
            .iter()
            .zip(other.e.iter())
            .fold(self.h * other.h, |acc, (&a, &b)| acc - a * b)
    }

    pub fn scale(&self, k: Rational) -> QDivClass {
        QDivClass { h: k * self.h, e: self.e.map(|x| k * x) }
    }
}

impl From<DivClass> for QDivClass {
    fn from(c: DivClass) -> Self {
        QDivClass { h: c.h.into(), e: c.e.map(Rational::integer) }
    }
}

impl Add for QDivClass {
    type Output = QDivClass;
    fn add(self, rhs: QDivClass) -> QDivClass {
        let mut e = self.e;
        for (x, y) in e.iter_mut().zip(rhs.e) {
            *x = *x + y;
        }
        QDivClass { h: self.h + rhs.h, e }
    }
}

impl CurveLabel {
    pub const ALL: [CurveLabel; 10] = [
        CurveLabel::L1p,
        CurveLabel::L2p,
        CurveLabel::L3p,
        CurveLabel::L1,
        CurveLabel::L2,
        CurveLabel::L3,
        CurveLabel::E0,
        CurveLabel::E1,
        CurveLabel::E2,
        CurveLabel::E3,
    ];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn name(self) -> &'static str {
        match self {
            CurveLabel::L1p => "L1'",
            CurveLabel::L2p => "L2'",
            CurveLabel::L3p => "L3'",
            CurveLabel::L1 => "L1",
            CurveLabel::L2 => "L2",
            CurveLabel::L3 => "L3",
            CurveLabel::E0 => "E0",
            CurveLabel::E1 => "E1",
            CurveLabel::E2 => "E2",
            CurveLabel::E3 => "E3",
        }
    }

    pub fn from_name(s: &str) -> Option<CurveLabel> {
        Self::ALL.into_iter().find(|l| l.name() == s)
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const fn line(a: usize, b: usize) -> DivClass {
    let mut e = [0; 4];
    e[a] = -1;
    e[b] = -1;
    DivClass { h: 1, e }
}

const CURVES: [BranchCurve; 10] = [
    BranchCurve { label: CurveLabel::L1p, cls: line(0, 1) },
    BranchCurve { label: CurveLabel::L2p, cls: line(0, 2) },
    BranchCurve { label: CurveLabel::L3p, cls: line(0, 3) },
    BranchCurve { label: CurveLabel::L1, cls: line(2, 3) },
    BranchCurve { label: CurveLabel::L2, cls: line(1, 3) },
    BranchCurve { label: CurveLabel::L3, cls: line(1, 2) },
    BranchCurve { label: CurveLabel::E0, cls: DivClass::exceptional(0) },
    BranchCurve { label: CurveLabel::E1, cls: DivClass::exceptional(1) },
    BranchCurve { label: CurveLabel::E2, cls: DivClass::exceptional(2) },
    BranchCurve { label: CurveLabel::E3, cls: DivClass::exceptional(3) },
];

const fn incident_pairs(curves: &[BranchCurve; 10]) -> [(usize, usize); 15] {
    let mut out = [(0, 0); 15];
    let mut k = 0;
    let mut i = 0;
    while i < 10 {
        let mut j = i + 1;
        while j < 10 {
            if curves[i].cls.dot(&curves[j].cls) == 1 {
                out[k] = (i, j);
                k += 1;
            }
            j += 1;
        }
        i += 1;
    }
    assert!(k == 15);
    out
}

/// The complete quadrangle configuration on `Y`.
pub const QUADRANGLE: Configuration =
    Configuration { curves: CURVES, incidences: incident_pairs(&CURVES) };

/// The pairs of meeting branch curves, in configuration indices.
pub const INCIDENCES: [(usize, usize); 15] = QUADRANGLE.incidences;

impl Configuration {
    pub fn classes(&self) -> [DivClass; 10] {
        self.curves.map(|c| c.cls)
    }

    /// `D = Σ D_i`.
    pub fn total_class(&self) -> DivClass {
        self.curves.iter().map(|c| c.cls).sum()
    }

    pub fn is_incident(&self, i: usize, j: usize) -> bool {
        let key = if i < j { (i, j) } else { (j, i) };
        self.incidences.contains(&key)
    }

    /// The `10×5` matrix of `r : H²(Y) → ⊕ Z·D_i`, `r_{ik} = D_i · B_k` for
    /// the basis `B = (H, E0, …, E3)`.
    pub fn restriction_matrix(&self) -> Vec<Vec<i64>> {
        let basis = [
            DivClass::H,
            DivClass::exceptional(0),
            DivClass::exceptional(1),
            DivClass::exceptional(2),
            DivClass::exceptional(3),
        ];
        self.curves.iter().map(|c| basis.iter().map(|b| c.cls.dot(b)).collect()).collect()
    }
}

pub fn intersect(a: &DivClass, b: &DivClass) -> i64 {
    a.dot(b)
}

/// `K_Y = −3H + E0 + E1 + E2 + E3`.
pub const fn canonical_class() -> DivClass {
    DivClass { h: -3, e: [1, 1, 1, 1] }
}

/// All 15 incident pairs of the configuration.
pub fn incidences() -> [(usize, usize); 15] {
    INCIDENCES
}

/// `H₁(Y − D, Z) ≅ coker(r)`.
#[derive(Clone, Debug)]
pub struct HomologyPresentation {
    pub matrix: Vec<Vec<i64>>,
    pub smith: SmithForm,
    pub rank: usize,
    pub torsion: Vec<i64>,
    /// One relation among the loops `d_i` per basis class: the columns of
    /// `r`. Column `H` is `Σ l_i' + Σ l_j = 0`, column `E_h` is
    /// `(sum of lines through P_h) − e_h = 0`.
    pub relations: Vec<[i64; 10]>,
}

impl HomologyPresentation {
    /// Whether a combination of loops vanishes in `H₁(Y − D)`.
    pub fn is_trivial(&self, loops: &[i64; 10]) -> bool {
        self.smith.in_image(loops)
    }
}

pub fn h1_complement() -> HomologyPresentation {
    let matrix = QUADRANGLE.restriction_matrix();
    let smith = smith_normal_form(&matrix);
    let coker = smith.cokernel();
    let relations = (0..5)
        .map(|k| {
            let mut col = [0; 10];
            for (i, row) in matrix.iter().enumerate() {
                col[i] = row[k];
            }
            col
        })
        .collect();
    HomologyPresentation {
        matrix,
        smith,
        rank: coker.free_rank,
        torsion: coker.torsion,
        relations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snf::transpose;
    use alloc::string::ToString;
    use proptest::prelude::*;

    const E0: DivClass = DivClass::exceptional(0);

    #[test]
    fn intersection_examples() {
        assert_eq!(intersect(&(DivClass::H - E0 - DivClass::exceptional(1)), &E0), 1);
        assert_eq!(intersect(&E0, &E0), -1);
        assert_eq!(intersect(&DivClass::H, &DivClass::H), 1);
    }

    #[test]
    fn canonical_class_examples() {
        let k = canonical_class();
        assert_eq!(k.dot(&k), 5);
        let cubic = DivClass::new(3, [-1, -1, -1, -1]);
        assert!((k + cubic).is_zero());
        assert_eq!(k.dot(&DivClass::H), -3);
    }

    #[test]
    fn configuration_invariants() {
        for c in QUADRANGLE.curves {
            assert_eq!(c.cls.dot(&c.cls), -1, "{}", c.label);
            // smooth rational curves: K·C = −2 − C² = −1
            assert_eq!(canonical_class().dot(&c.cls), -1);
        }
        assert_eq!(QUADRANGLE.total_class(), DivClass::new(6, [-2; 4]));
        for (i, c) in QUADRANGLE.curves.iter().enumerate() {
            assert_eq!(c.label.index(), i);
        }
    }

    #[test]
    fn incidence_examples() {
        let inc = incidences();
        let idx = |l: CurveLabel| l.index();
        assert!(inc.contains(&(idx(CurveLabel::L1p), idx(CurveLabel::E0))));
        assert!(!inc.contains(&(idx(CurveLabel::L1p), idx(CurveLabel::L2p))));
        assert_eq!(line(0, 1).dot(&line(0, 2)), 0);
        // brute force over all 45 pairs
        let mut brute = Vec::new();
        for i in 0..10 {
            for j in i + 1..10 {
                if intersect(&QUADRANGLE.curves[i].cls, &QUADRANGLE.curves[j].cls) == 1 {
                    brute.push((i, j));
                }
            }
        }
        assert_eq!(brute.len(), 15);
        assert_eq!(brute.as_slice(), &inc[..]);
        // every other pair is disjoint
        for i in 0..10 {
            for j in i + 1..10 {
                let d = QUADRANGLE.curves[i].cls.dot(&QUADRANGLE.curves[j].cls);
                assert!(d == 0 || d == 1);
            }
        }
    }

    #[test]
    fn restriction_matrix_rows() {
        let r = QUADRANGLE.restriction_matrix();
        assert_eq!(r.len(), 10);
        assert_eq!(r[0], [1, 1, 1, 0, 0]);
        assert_eq!(r[3], [1, 0, 0, 1, 1]);
        assert_eq!(r[6], [0, -1, 0, 0, 0]);
    }

    #[test]
    fn homology_is_free_of_rank_five() {
        let h = h1_complement();
        assert_eq!(h.rank, 5);
        assert!(h.torsion.is_empty());
        let t = smith_normal_form(&transpose(&h.matrix));
        assert_eq!(t.rank(), h.smith.rank());
    }

    #[test]
    fn homology_relations() {
        let h = h1_complement();
        // e0 − (l1' + l2' + l3')
        assert!(h.is_trivial(&[-1, -1, -1, 0, 0, 0, 1, 0, 0, 0]));
        // e1 − (l1' + l2 + l3), e2 − (l2' + l1 + l3), e3 − (l3' + l1 + l2)
        assert!(h.is_trivial(&[-1, 0, 0, 0, -1, -1, 0, 1, 0, 0]));
        assert!(h.is_trivial(&[0, -1, 0, -1, 0, -1, 0, 0, 1, 0]));
        assert!(h.is_trivial(&[0, 0, -1, -1, -1, 0, 0, 0, 0, 1]));
        // Σ l_i' + Σ l_j
        assert!(h.is_trivial(&[1, 1, 1, 1, 1, 1, 0, 0, 0, 0]));
        // a single loop is not a relation
        assert!(!h.is_trivial(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0]));
        assert!(!h.is_trivial(&[0, 0, 0, 0, 0, 0, 5, 0, 0, 0]));
        for rel in &h.relations {
            assert!(h.is_trivial(rel));
        }
        assert_eq!(h.relations[0], [1, 1, 1, 1, 1, 1, 0, 0, 0, 0]);
        assert_eq!(h.relations[1], [1, 1, 1, 0, 0, 0, -1, 0, 0, 0]);
    }

    #[test]
    fn display_matches_table_notation() {
        assert_eq!(DivClass::new(3, [-1, -2, -1, -1]).to_string(), "3H - E0 - 2E1 - E2 - E3");
        assert_eq!(DivClass::ZERO.to_string(), "0");
        assert_eq!(DivClass::H.to_string(), "H");
        assert_eq!(DivClass::new(-2, [1, 1, 1, 1]).to_string(), "-2H + E0 + E1 + E2 + E3");
        assert_eq!(DivClass::new(0, [0, -1, 0, 0]).to_string(), "-E1");
    }

    #[test]
    fn adjoint_class_has_k2_45() {
        let k = QDivClass::from(canonical_class());
        let d = QDivClass::from(QUADRANGLE.total_class());
        let a = k + d.scale(Rational::new(4, 5));
        assert_eq!((Rational::integer(25) * a.dot(&a)).to_integer(), Some(45));
    }

    fn class() -> impl Strategy<Value = DivClass> {
        (-5i64..6, prop::array::uniform4(-5i64..6)).prop_map(|(h, e)| DivClass::new(h, e))
    }

    proptest! {
        #[test]
        fn intersection_is_symmetric_bilinear(a in class(), b in class(), c in class(), k in -4i64..5) {
            prop_assert_eq!(a.dot(&b), b.dot(&a));
            prop_assert_eq!((a + b).dot(&c), a.dot(&c) + b.dot(&c));
            prop_assert_eq!((k * a).dot(&b), k * a.dot(&b));
        }
    }
}

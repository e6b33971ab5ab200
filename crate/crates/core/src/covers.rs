//! Six-tuples of loop images, the admissibility predicate and the
//! exhaustive enumeration of admissible tuples.
//!
//! A tuple `(u1, u2, u3, v1, v2, v3)` records the images of the loops around
//! `L1', L2', L3'` (the `u_i`) and `L1, L2, L3` (the `v_j`). The loops around
//! the exceptional curves are then forced by the homology relations:
//! `e0 = u1 + u2 + u3` and `e_i = u_i + v_j + v_k`.

use alloc::vec::Vec;
use core::fmt;

use crate::field::{FScalar, FVec2, Modulus};
use crate::picard::{CurveLabel, INCIDENCES};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SixTuple {
    pub u: [FVec2; 3],
    pub v: [FVec2; 3],
}

/// Images of the small loops around the ten branch curves, in configuration
/// order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoopImages(pub [FVec2; 10]);

/// Why a tuple fails to be admissible. The variant fixes the condition
/// number reported by [`Inadmissible::condition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inadmissible {
    /// Condition 0: `Σ u_i + Σ v_j ≠ 0`.
    NonzeroSum(FVec2),
    /// Condition 1: the loop around this curve maps to zero, so the cover
    /// does not branch there.
    Unbranched(CurveLabel),
    /// Condition 2: the loop images of two meeting curves lie in one cyclic
    /// subgroup, so the cover is singular over their intersection point.
    Dependent(CurveLabel, CurveLabel),
}

impl Inadmissible {
    pub const fn condition(&self) -> u8 {
        match self {
            Inadmissible::NonzeroSum(_) => 0,
            Inadmissible::Unbranched(_) => 1,
            Inadmissible::Dependent(..) => 2,
        }
    }

    /// Stable machine-readable reason code.
    pub const fn code(&self) -> &'static str {
        match self {
            Inadmissible::NonzeroSum(_) => "nonzero-sum",
            Inadmissible::Unbranched(_) => "unbranched-curve",
            Inadmissible::Dependent(..) => "dependent-pair",
        }
    }
}

impl fmt::Display for Inadmissible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inadmissible::NonzeroSum(s) => write!(f, "condition 0: loop sum is {s}, not zero"),
            Inadmissible::Unbranched(c) => write!(f, "condition 1: loop around {c} maps to zero"),
            Inadmissible::Dependent(a, b) => {
                write!(f, "condition 2: loops around {a} and {b} are dependent")
            }
        }
    }
}

impl SixTuple {
    pub const fn new(u: [FVec2; 3], v: [FVec2; 3]) -> Self {
        SixTuple { u, v }
    }

    /// `(u1, u2, u3, v1, v2, v3)`.
    pub fn slots(&self) -> [FVec2; 6] {
        [self.u[0], self.u[1], self.u[2], self.v[0], self.v[1], self.v[2]]
    }

    pub fn from_slots(s: [FVec2; 6]) -> Self {
        SixTuple { u: [s[0], s[1], s[2]], v: [s[3], s[4], s[5]] }
    }

    /// The twelve residues `u1.x, u1.y, …, v3.y`.
    pub fn coords(&self) -> [FScalar; 12] {
        let s = self.slots();
        core::array::from_fn(|k| if k % 2 == 0 { s[k / 2].x } else { s[k / 2].y })
    }

    pub fn from_coords(c: [FScalar; 12]) -> Self {
        Self::from_slots(core::array::from_fn(|i| FVec2 { x: c[2 * i], y: c[2 * i + 1] }))
    }

    pub fn residues(&self) -> [u8; 12] {
        self.coords().map(FScalar::value)
    }

    /// Builds a tuple from twelve integers, reducing each modulo `n`.
    pub fn from_residues(m: Modulus, r: &[i64]) -> Result<Self> {
        if r.len() != 12 {
            return Err(Error::ResidueCount { expected: 12, found: r.len() });
        }
        Ok(Self::from_coords(core::array::from_fn(|k| m.scalar(r[k]))))
    }

    /// Position in the base-`n` numbering of `(Z/n)^12`; agrees with the
    /// lexicographic order.
    pub fn index(&self, m: Modulus) -> u64 {
        self.coords().iter().fold(0u64, |acc, s| acc * m.get() as u64 + s.value() as u64)
    }
}

impl fmt::Display for SixTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.residues().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl LoopImages {
    pub fn get(&self, label: CurveLabel) -> FVec2 {
        self.0[label.index()]
    }
}

/// The ten loop images `(u1, u2, u3, v1, v2, v3, e0, e1, e2, e3)`.
pub fn loop_images(m: Modulus, t: &SixTuple) -> LoopImages {
    let [u1, u2, u3] = t.u;
    let [v1, v2, v3] = t.v;
    let e0 = m.vsum([u1, u2, u3]);
    let e1 = m.vsum([u1, v2, v3]);
    let e2 = m.vsum([u2, v1, v3]);
    let e3 = m.vsum([u3, v1, v2]);
    LoopImages([u1, u2, u3, v1, v2, v3, e0, e1, e2, e3])
}

/// Checks conditions 0, 1, 2 in that order and reports the first failure.
/// Condition 2 runs over the incident pairs in sorted order.
pub fn check_admissible(m: Modulus, t: &SixTuple) -> core::result::Result<(), Inadmissible> {
    let sum = m.vsum(t.slots());
    if !sum.is_zero() {
        return Err(Inadmissible::NonzeroSum(sum));
    }
    let images = loop_images(m, t);
    if let Some(i) = images.0.iter().position(|v| v.is_zero()) {
        return Err(Inadmissible::Unbranched(CurveLabel::ALL[i]));
    }
    for &(i, j) in INCIDENCES.iter() {
        if !m.is_independent(images.0[i], images.0[j]) {
            return Err(Inadmissible::Dependent(CurveLabel::ALL[i], CurveLabel::ALL[j]));
        }
    }
    Ok(())
}

pub fn is_admissible(m: Modulus, t: &SixTuple) -> bool {
    check_admissible(m, t).is_ok()
}

/// Whether the loop images generate `(Z/n)²`, i.e. no intermediate cover is
/// unramified.
pub fn is_totally_ramified(m: Modulus, t: &SixTuple) -> bool {
    let images = loop_images(m, t).0;
    let Some(&first) = images.iter().find(|v| !v.is_zero()) else {
        return false;
    };
    images.iter().any(|&w| m.is_independent(first, w))
}

/// All admissible tuples with first entry `u1`, in lexicographic order.
///
/// `v3` is solved from condition 0; the remaining conditions are checked as
/// soon as the entries they involve are fixed.
pub fn enumerate_admissible_from(m: Modulus, u1: FVec2) -> Vec<SixTuple> {
    let nonzero: Vec<FVec2> = m.nonzero_vectors().collect();
    let mut out = Vec::new();
    if u1.is_zero() {
        return out;
    }
    for &u2 in &nonzero {
        for &u3 in &nonzero {
            let e0 = m.vsum([u1, u2, u3]);
            if [u1, u2, u3].iter().any(|&u| !m.is_independent(u, e0)) {
                continue;
            }
            for &v1 in nonzero.iter().filter(|&&v1| m.is_independent(u1, v1)) {
                for &v2 in nonzero.iter().filter(|&&v2| m.is_independent(u2, v2)) {
                    let v3 = m.vneg(m.vsum([e0, v1, v2]));
                    if !m.is_independent(u3, v3) {
                        continue;
                    }
                    let t = SixTuple { u: [u1, u2, u3], v: [v1, v2, v3] };
                    if is_admissible(m, &t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Every admissible tuple, once each, in lexicographic order of the twelve
/// residues.
pub fn enumerate_admissible(m: Modulus) -> Vec<SixTuple> {
    m.nonzero_vectors().flat_map(|u1| enumerate_admissible_from(m, u1)).collect()
}

/// The four orbit representatives `U1..U4` of the classification for
/// `n = 5`, as twelve residues.
pub const NAMED_REPRESENTATIVES: [(&str, [u8; 12]); 4] = [
    ("U1", [1, 0, 1, 0, 0, 1, 2, 1, 2, 1, 4, 2]),
    ("U2", [1, 0, 1, 0, 0, 1, 2, 1, 4, 2, 2, 1]),
    ("U3", [1, 0, 1, 0, 0, 1, 4, 1, 3, 2, 1, 1]),
    ("U4", [1, 0, 1, 0, 0, 1, 1, 1, 0, 3, 2, 0]),
];

/// Looks up one of `U1..U4` (only meaningful for `n = 5`).
pub fn named_representative(name: &str) -> Option<SixTuple> {
    NAMED_REPRESENTATIVES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, r)| SixTuple::from_coords(r.map(|x| Modulus::FIVE.scalar(x as i64))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const M: Modulus = Modulus::FIVE;

    fn tuple(r: [i64; 12]) -> SixTuple {
        SixTuple::from_residues(M, &r).unwrap()
    }

    fn u3() -> SixTuple {
        named_representative("U3").unwrap()
    }

    #[test]
    fn loop_images_of_u3() {
        let l = loop_images(M, &u3());
        assert_eq!(l.get(CurveLabel::E0), M.vec(2, 1));
        assert_eq!(l.get(CurveLabel::E1), M.vec(0, 3));
        assert_eq!(l.get(CurveLabel::E2), M.vec(1, 2));
        assert_eq!(l.get(CurveLabel::E3), M.vec(2, 4));
        assert_eq!(&l.0[..6], &u3().slots()[..]);
    }

    #[test]
    fn loop_images_trivial_and_u1() {
        assert!(loop_images(M, &SixTuple::default()).0.iter().all(|v| v.is_zero()));
        let u1 = named_representative("U1").unwrap();
        assert_eq!(loop_images(M, &u1).get(CurveLabel::E0), M.vec(2, 1));
    }

    #[test]
    fn admissibility_examples() {
        assert_eq!(check_admissible(M, &u3()), Ok(()));
        let all_ones = tuple([1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0]);
        assert_eq!(check_admissible(M, &all_ones), Err(Inadmissible::NonzeroSum(M.vec(1, 0))));
        let dep = tuple([1, 0, 1, 0, 0, 1, 2, 0, 2, 4, 4, 0]);
        let err = check_admissible(M, &dep).unwrap_err();
        assert_eq!(err, Inadmissible::Dependent(CurveLabel::L1p, CurveLabel::L1));
        assert_eq!(err.condition(), 2);
        assert_eq!(err.code(), "dependent-pair");
    }

    #[test]
    fn unbranched_curve_is_condition_one() {
        // sums to zero, u3 = 0
        let t = tuple([1, 0, 4, 0, 0, 0, 0, 1, 0, 2, 0, 2]);
        let err = check_admissible(M, &t).unwrap_err();
        assert_eq!(err.condition(), 1);
        assert_eq!(err, Inadmissible::Unbranched(CurveLabel::L3p));
    }

    #[test]
    fn named_representatives_are_admissible() {
        for (name, _) in NAMED_REPRESENTATIVES {
            let t = named_representative(name).unwrap();
            assert!(is_admissible(M, &t), "{name}");
            assert!(is_totally_ramified(M, &t));
        }
        assert!(named_representative("U5").is_none());
    }

    #[test]
    fn total_ramification() {
        assert!(is_totally_ramified(M, &u3()));
        let line = tuple([1, 0, 2, 0, 3, 0, 1, 0, 1, 0, 2, 0]);
        assert!(!is_totally_ramified(M, &line));
        assert!(!is_totally_ramified(M, &SixTuple::default()));
    }

    /// The literal list of fifteen pairs from the smoothness lemma, written
    /// in terms of the tuple entries.
    fn lemma_pairs(m: Modulus, t: &SixTuple) -> [(FVec2, FVec2); 15] {
        let [u1, u2, u3] = t.u;
        let [v1, v2, v3] = t.v;
        let s = m.vsum([u1, u2, u3]);
        let e1 = m.vsum([u1, v2, v3]);
        let e2 = m.vsum([u2, v1, v3]);
        let e3 = m.vsum([u3, v1, v2]);
        [
            (u1, v1),
            (u2, v2),
            (u3, v3),
            (u1, s),
            (u2, s),
            (u3, s),
            (u1, e1),
            (u2, e2),
            (u3, e3),
            (e1, v2),
            (e1, v3),
            (e2, v1),
            (e2, v3),
            (e3, v1),
            (e3, v2),
        ]
    }

    #[test]
    fn incident_pairs_are_the_lemma_pairs() {
        use CurveLabel::*;
        let lemma_curves = [
            (L1p, L1),
            (L2p, L2),
            (L3p, L3),
            (L1p, E0),
            (L2p, E0),
            (L3p, E0),
            (L1p, E1),
            (L2p, E2),
            (L3p, E3),
            (E1, L2),
            (E1, L3),
            (E2, L1),
            (E2, L3),
            (E3, L1),
            (E3, L2),
        ];
        let mut as_indices: Vec<(usize, usize)> = lemma_curves
            .iter()
            .map(|&(a, b)| {
                let (i, j) = (a.index(), b.index());
                (i.min(j), i.max(j))
            })
            .collect();
        as_indices.sort();
        assert_eq!(as_indices.as_slice(), &INCIDENCES[..]);
    }

    #[test]
    fn u3_enumeration_prefix_is_sorted_and_contains_u3() {
        let part = enumerate_admissible_from(M, M.vec(1, 0));
        assert!(part.windows(2).all(|w| w[0] < w[1]));
        assert!(part.contains(&u3()));
        assert!(part.iter().all(|t| t.u[0] == M.vec(1, 0)));
    }

    #[test]
    fn pruned_matches_brute_force_for_small_moduli() {
        for n in [2u32, 3] {
            let m = Modulus::new(n).unwrap();
            let total = (n as u64).pow(12);
            let mut brute = Vec::new();
            for k in 0..total {
                let mut x = k;
                let mut c = [0i64; 12];
                for slot in c.iter_mut().rev() {
                    *slot = (x % n as u64) as i64;
                    x /= n as u64;
                }
                let t = SixTuple::from_residues(m, &c).unwrap();
                if is_admissible(m, &t) {
                    brute.push(t);
                }
            }
            assert_eq!(enumerate_admissible(m), brute, "n = {n}");
        }
    }

    #[test]
    fn index_orders_like_tuples() {
        let a = u3();
        let b = named_representative("U4").unwrap();
        assert_eq!(a.cmp(&b), a.index(M).cmp(&b.index(M)));
        assert_eq!(SixTuple::default().index(M), 0);
    }

    proptest! {
        #[test]
        fn predicate_equals_lemma_formulation(r in prop::array::uniform12(0i64..5)) {
            let t = tuple(r);
            let sum_ok = M.vsum(t.slots()).is_zero();
            let nonzero = loop_images(M, &t).0.iter().all(|v| !v.is_zero());
            let pairs_ok = lemma_pairs(M, &t).iter().all(|&(a, b)| M.is_independent(a, b));
            prop_assert_eq!(is_admissible(M, &t), sum_ok && nonzero && pairs_ok);
        }

        #[test]
        fn residue_round_trip(r in prop::array::uniform12(0i64..5)) {
            let t = tuple(r);
            prop_assert_eq!(SixTuple::from_coords(t.coords()), t);
            prop_assert_eq!(t.residues().map(i64::from), r);
        }
    }
}

//! Eigensheaves `L_χ` of the cover, the invariants of `S`, the numerics of
//! the ramification curves and the cover equations.
//!
//! For a character `χ = (a, b)` and a branch curve `D_i` with loop image
//! `g_i`, the branch coefficient is `[χ(g_i)] ∈ {0, …, n−1}` and
//! `n·L_χ = Σ [χ(g_i)]·D_i`.

use alloc::vec::Vec;
use core::fmt;

use crate::covers::{check_admissible, loop_images, SixTuple};
use crate::error::Error;
use crate::field::{FScalar, FVec2, Modulus};
use crate::interpolation::h0;
use crate::picard::{canonical_class, DivClass, QDivClass, QUADRANGLE};
use crate::rational::Rational;
use crate::Result;

/// The ten branch coefficients of a character, in configuration order:
/// `δ1..δ3` on `L1'..L3'`, `λ1..λ3` on `L1..L3`, `μ0..μ3` on `E0..E3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoeffVector(pub [FScalar; 10]);

impl CoeffVector {
    /// `δ_i`, `i ∈ 1..=3`.
    pub fn delta(&self, i: usize) -> FScalar {
        assert!((1..=3).contains(&i));
        self.0[i - 1]
    }

    /// `λ_j`, `j ∈ 1..=3`.
    pub fn lambda(&self, j: usize) -> FScalar {
        assert!((1..=3).contains(&j));
        self.0[j + 2]
    }

    /// `μ_h`, `h ∈ 0..=3`.
    pub fn mu(&self, h: usize) -> FScalar {
        self.0[6 + h]
    }

    pub fn values(&self) -> [u8; 10] {
        self.0.map(FScalar::value)
    }
}

impl fmt::Display for CoeffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CharacterSheaf {
    pub chi: FVec2,
    pub cls: DivClass,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceInvariants {
    pub k2: i64,
    pub chi_o: i64,
    pub pg: u32,
    pub q: i64,
}

/// Per ramification curve: `R_i²`, `K_S·R_i` and the genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RamCurve {
    pub selfint: i64,
    pub kdot: i64,
    pub genus: i64,
}

/// `w_χ · w_χ' = Π σ_i^{ε_i} · w_{χ+χ'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverEquation {
    pub lhs: (FVec2, FVec2),
    pub sigma_exponents: [u8; 10],
    pub rhs: FVec2,
}

impl fmt::Display for CoverEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.lhs;
        write!(f, "w[{},{}]·w[{},{}] = σ^[", p.x, p.y, q.x, q.y)?;
        for (i, e) in self.sigma_exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "] · w[{},{}]", self.rhs.x, self.rhs.y)
    }
}

pub fn coeffs(m: Modulus, t: &SixTuple, chi: FVec2) -> CoeffVector {
    CoeffVector(loop_images(m, t).0.map(|g| m.chi_eval(chi, g)))
}

/// `L_χ = (1/n)·Σ coeff_i·D_i`.
pub fn sheaf(m: Modulus, t: &SixTuple, chi: FVec2) -> Result<CharacterSheaf> {
    let c = coeffs(m, t, chi);
    let weighted: DivClass = QUADRANGLE
        .curves
        .iter()
        .zip(c.0.iter())
        .map(|(curve, k)| k.value() as i64 * curve.cls)
        .sum();
    let n = m.get() as i64;
    let coords = weighted.coords();
    if coords.iter().any(|x| x % n != 0) {
        return Err(Error::NonIntegralSheaf { chi });
    }
    Ok(CharacterSheaf { chi, cls: DivClass::from_coords(coords.map(|x| x / n)) })
}

/// All `n²` sheaves, ordered by `b` and then `a`.
pub fn sheaf_table(m: Modulus, t: &SixTuple) -> Result<Vec<CharacterSheaf>> {
    let n = m.get() as i64;
    let mut out = Vec::with_capacity((n * n) as usize);
    for b in 0..n {
        for a in 0..n {
            out.push(sheaf(m, t, m.vec(a, b))?);
        }
    }
    Ok(out)
}

/// Characters in lexicographic order `(a, b)`.
fn characters(m: Modulus) -> impl Iterator<Item = FVec2> {
    m.vectors()
}

/// `K_S² = n²·(K_Y + ((n−1)/n)·D)²`; it does not depend on the tuple.
pub fn k2(m: Modulus) -> i64 {
    let n = m.get() as i64;
    let pullback = pullback_canonical(m);
    (Rational::integer(n * n) * pullback.dot(&pullback))
        .to_integer()
        .expect("K_S² is an integer")
}

/// `K_Y + ((n−1)/n)·D`, whose pullback is `K_S`.
fn pullback_canonical(m: Modulus) -> QDivClass {
    let n = m.get() as i64;
    QDivClass::from(canonical_class())
        + QDivClass::from(QUADRANGLE.total_class()).scale(Rational::new(n - 1, n))
}

/// `χ(O_S) = Σ_χ χ(Y, L_χ⁻¹) = Σ_χ (1 + L_χ·(L_χ + K_Y)/2)`.
pub fn euler_characteristic(m: Modulus, t: &SixTuple) -> Result<i64> {
    let k = canonical_class();
    let mut total = 0;
    for chi in characters(m) {
        let l = sheaf(m, t, chi)?.cls;
        let twice = l.dot(&(l + k));
        debug_assert!(twice % 2 == 0);
        total += 1 + twice / 2;
    }
    Ok(total)
}

/// `p_g = Σ_χ h⁰(K_Y + L_χ)`.
pub fn geometric_genus(m: Modulus, t: &SixTuple) -> Result<u32> {
    let k = canonical_class();
    let mut pg = 0;
    for chi in characters(m) {
        pg += h0(&(k + sheaf(m, t, chi)?.cls));
    }
    Ok(pg)
}

pub fn invariants(m: Modulus, t: &SixTuple) -> Result<SurfaceInvariants> {
    check_admissible(m, t)?;
    let pg = geometric_genus(m, t)?;
    let chi_o = euler_characteristic(m, t)?;
    Ok(SurfaceInvariants { k2: k2(m), chi_o, pg, q: pg as i64 + 1 - chi_o })
}

/// `R_i² = D_i²`, `K_S·R_i = n·(K_Y + ((n−1)/n)·D)·D_i`, and the genus from
/// adjunction.
pub fn ram_curve_numbers(m: Modulus, t: &SixTuple) -> Result<[RamCurve; 10]> {
    check_admissible(m, t)?;
    let n = m.get() as i64;
    let pullback = pullback_canonical(m);
    Ok(QUADRANGLE.curves.map(|c| {
        let selfint = c.cls.dot(&c.cls);
        let kdot = (Rational::integer(n) * pullback.dot(&c.cls.into()))
            .to_integer()
            .expect("K_S·R_i is an integer");
        RamCurve { selfint, kdot, genus: (selfint + kdot) / 2 + 1 }
    }))
}

/// `ε_i = 1` iff `λ·Δ_i + λ'·Δ'_i ≥ M`, where `d, d'` are the orders of the
/// characters, `M = lcm(d, d')`, `λ = M/d`, `λ' = M/d'` and `d·L_χ = Σ Δ_i·D_i`.
pub fn epsilon(m: Modulus, t: &SixTuple, chi: FVec2, chi2: FVec2) -> [u8; 10] {
    let n = m.get() as u32;
    let (d, d2) = (m.vec_order(chi), m.vec_order(chi2));
    let big = lcm(d, d2);
    let (l, l2) = (big / d, big / d2);
    let (c, c2) = (coeffs(m, t, chi), coeffs(m, t, chi2));
    core::array::from_fn(|i| {
        let delta = c.0[i].value() as u32 * d / n;
        let delta2 = c2.0[i].value() as u32 * d2 / n;
        (l * delta + l2 * delta2 >= big) as u8
    })
}

fn lcm(a: u32, b: u32) -> u32 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

/// One relation per unordered pair of nontrivial characters, repetition
/// allowed, ordered lexicographically.
pub fn cover_equations(m: Modulus, t: &SixTuple) -> Result<Vec<CoverEquation>> {
    check_admissible(m, t)?;
    let nontrivial: Vec<FVec2> = m.nonzero_vectors().collect();
    let mut out = Vec::new();
    for (i, &p) in nontrivial.iter().enumerate() {
        for &q in &nontrivial[i..] {
            out.push(CoverEquation {
                lhs: (p, q),
                sigma_exponents: epsilon(m, t, p, q),
                rhs: m.vadd(p, q),
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::{enumerate_admissible_from, named_representative};
    use crate::picard::CurveLabel;
    use alloc::string::ToString;

    const M: Modulus = Modulus::FIVE;

    fn u(name: &str) -> SixTuple {
        named_representative(name).unwrap()
    }

    fn v(a: i64, b: i64) -> FVec2 {
        M.vec(a, b)
    }

    #[test]
    fn coefficient_rows() {
        let t = u("U3");
        assert_eq!(coeffs(M, &t, v(1, 3)).values(), [1, 1, 3, 2, 4, 4, 0, 4, 2, 4]);
        assert_eq!(coeffs(M, &t, v(2, 1)).values(), [2, 2, 1, 4, 3, 3, 0, 3, 4, 3]);
        assert_eq!(coeffs(M, &t, v(3, 2)).values(), [3, 3, 2, 4, 3, 0, 3, 1, 2, 4]);
        assert_eq!(coeffs(M, &t, v(4, 1)).values(), [4, 4, 1, 2, 4, 0, 4, 3, 1, 2]);
        assert_eq!(coeffs(M, &t, v(0, 0)).values(), [0; 10]);
        let c = coeffs(M, &t, v(4, 1));
        assert_eq!(c.delta(3).value(), 1);
        assert_eq!(c.lambda(1).value(), 2);
        assert_eq!(c.mu(0).value(), 4);
    }

    #[test]
    fn sheaf_examples() {
        let t = u("U3");
        assert_eq!(sheaf(M, &t, v(1, 3)).unwrap().cls, DivClass::new(3, [-1; 4]));
        assert_eq!(sheaf(M, &t, v(0, 1)).unwrap().cls, DivClass::H);
        assert_eq!(sheaf(M, &t, v(0, 0)).unwrap().cls, DivClass::ZERO);
        assert_eq!(sheaf(M, &t, v(4, 3)).unwrap().cls, DivClass::new(4, [-2, -1, -2, -2]));
    }

    #[test]
    fn table_layout() {
        let table = sheaf_table(M, &u("U3")).unwrap();
        assert_eq!(table.len(), 25);
        assert_eq!(table[0].cls, DivClass::ZERO);
        assert_eq!(table[5 * 3 + 4].chi, v(4, 3));
    }

    #[test]
    fn twisted_sections() {
        let t = u("U3");
        let k = canonical_class();
        let twisted = |a, b| k + sheaf(M, &t, v(a, b)).unwrap().cls;
        assert_eq!(twisted(2, 1), DivClass::ZERO);
        assert_eq!(h0(&twisted(2, 1)), 1);
        assert_eq!(twisted(0, 1), DivClass::new(-2, [1; 4]));
        assert_eq!(h0(&twisted(0, 1)), 0);
    }

    #[test]
    fn representative_invariants() {
        let s3 = invariants(M, &u("U3")).unwrap();
        assert_eq!(s3, SurfaceInvariants { k2: 45, chi_o: 5, pg: 4, q: 0 });
        for name in ["U1", "U2", "U4"] {
            let s = invariants(M, &u(name)).unwrap();
            assert_eq!((s.k2, s.chi_o, s.pg, s.q), (45, 5, 6, 2), "{name}");
        }
    }

    #[test]
    fn rejects_inadmissible() {
        let t = SixTuple::from_residues(M, &[1, 0, 1, 0, 0, 1, 4, 1, 3, 2, 1, 2]).unwrap();
        assert!(matches!(invariants(M, &t), Err(Error::NotAdmissible(_))));
        assert!(ram_curve_numbers(M, &t).is_err());
        assert!(cover_equations(M, &t).is_err());
    }

    #[test]
    fn ramification_numbers() {
        let r = ram_curve_numbers(M, &u("U3")).unwrap();
        assert_eq!(r[CurveLabel::L3p.index()], RamCurve { selfint: -1, kdot: 3, genus: 2 });
        assert!(r.iter().all(|c| c.genus == 2));
        assert_eq!(r[CurveLabel::E0.index()].selfint, -1);
    }

    #[test]
    fn epsilon_examples() {
        let t = u("U3");
        assert_eq!(epsilon(M, &t, v(2, 1), v(2, 1)), [0, 0, 0, 1, 1, 1, 0, 1, 1, 1]);
        assert_eq!(epsilon(M, &t, v(0, 0), v(3, 4)), [0; 10]);
    }

    #[test]
    fn equation_list() {
        let eqs = cover_equations(M, &u("U3")).unwrap();
        assert_eq!(eqs.len(), 300);
        let e = eqs.iter().find(|e| e.lhs == (v(2, 1), v(2, 1))).unwrap();
        assert_eq!(e.sigma_exponents, [0, 0, 0, 1, 1, 1, 0, 1, 1, 1]);
        assert_eq!(e.rhs, v(4, 2));
        assert_eq!(e.to_string(), "w[2,1]·w[2,1] = σ^[0,0,0,1,1,1,0,1,1,1] · w[4,2]");
        assert!(eqs.iter().all(|e| e.rhs == M.vadd(e.lhs.0, e.lhs.1)));
    }

    #[test]
    fn epsilon_identity_small() {
        let t = u("U1");
        for p in M.vectors() {
            for q in M.vectors() {
                let lhs = sheaf(M, &t, p).unwrap().cls + sheaf(M, &t, q).unwrap().cls
                    - sheaf(M, &t, M.vadd(p, q)).unwrap().cls;
                let eps = epsilon(M, &t, p, q);
                let rhs: DivClass = QUADRANGLE
                    .curves
                    .iter()
                    .zip(eps)
                    .map(|(c, e)| e as i64 * c.cls)
                    .sum();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn other_moduli() {
        for n in [2, 3, 7] {
            let m = Modulus::new(n).unwrap();
            let t = m.nonzero_vectors().find_map(|u1| enumerate_admissible_from(m, u1).pop());
            let Some(t) = t else { continue };
            assert!(sheaf_table(m, &t).is_ok());
            let s = invariants(m, &t).unwrap();
            assert_eq!(s.chi_o, s.pg as i64 + 1 - s.q);
        }
    }
}

//! The canonical system of `S`.
//!
//! Each nonzero eigenspace `H⁰(K_Y + L_χ)` that is one-dimensional with
//! `K_Y + L_χ = 0` is spanned by the pullback of a constant, which on `S` is
//! the monomial `Π x_i^{(n−1) − coeff_i}` in local equations `x_i` of the
//! ramification curves `R_i`. From these monomials we read off the fixed
//! part, the base points of the moving part at the intersections `R_i ∩ R_j`,
//! their infinitely near multiplicities, and the self-intersection
//! bookkeeping that bounds the degree of the canonical map.

use alloc::vec::Vec;
use core::fmt;

use crate::covers::{check_admissible, SixTuple};
use crate::error::Error;
use crate::field::{FVec2, Modulus};
use crate::interpolation::h0;
use crate::picard::{canonical_class, QUADRANGLE};
use crate::sheaves::{coeffs, invariants, ram_curve_numbers, sheaf};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisEntry {
    pub chi: FVec2,
    /// `h⁰(K_Y + L_χ)`.
    pub h0: u32,
    pub exponents: [u8; 10],
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalBasis {
    pub entries: Vec<BasisEntry>,
}

/// A monomial ideal in two local coordinates `x, y`, by its minimal
/// generators `x^a y^b`, sorted by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal2D {
    pub generators: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeNode {
    pub multiplicity: u32,
    pub children: Vec<TypeNode>,
}

/// Multiplicities of a base point and of its infinitely near base points.
/// `None` for a point that is not a base point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasePointType {
    pub root: Option<TypeNode>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasePoint {
    pub pair: (usize, usize),
    pub ideal: MonomialIdeal2D,
    pub kind: BasePointType,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalReport {
    pub fixed_part: [u8; 10],
    pub base_points: Vec<BasePoint>,
    /// `(K_S − F)²`.
    pub moving_selfint: i64,
    pub type_square_sum: u64,
    /// `deg φ_K · deg φ_K(S) = (K_S − F)² − Σ n²`.
    pub degree_product: i64,
    pub birational: bool,
    pub justification: &'static str,
    /// Some base point has an infinitely near tree that is not a chain.
    pub branching: bool,
}

pub const PRIME_DEGREE: &str = "prime-degree argument";
pub const UNDECIDED: &str = "undecided";

/// Characters with `h⁰(K_Y + L_χ) > 0`, in lexicographic order, with their
/// ramification monomials.
pub fn basis(m: Modulus, t: &SixTuple) -> Result<CanonicalBasis> {
    check_admissible(m, t)?;
    let top = m.get() - 1;
    let mut entries = Vec::new();
    for chi in m.vectors() {
        let dim = h0(&(canonical_class() + sheaf(m, t, chi)?.cls));
        if dim > 0 {
            let c = coeffs(m, t, chi);
            entries.push(BasisEntry { chi, h0: dim, exponents: c.values().map(|x| top - x) });
        }
    }
    Ok(CanonicalBasis { entries })
}

/// Componentwise minimum of the exponent vectors: the multiplicity of each
/// `R_i` in the fixed part.
pub fn fixed_part(b: &CanonicalBasis) -> Result<[u8; 10]> {
    let mut iter = b.entries.iter();
    let first = iter.next().ok_or(Error::EmptyBasis)?.exponents;
    Ok(iter.fold(first, |acc, e| core::array::from_fn(|i| acc[i].min(e.exponents[i]))))
}

impl MonomialIdeal2D {
    /// The ideal generated by the given monomials, reduced to its minimal
    /// generators.
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(gens: I) -> Self {
        let mut all: Vec<(u32, u32)> = gens.into_iter().collect();
        all.sort_unstable();
        all.dedup();
        // sorted by a: keep a generator iff its b is below every earlier b
        let mut generators: Vec<(u32, u32)> = Vec::new();
        for g in all {
            if generators.last().map_or(true, |&(_, b)| g.1 < b) {
                generators.push(g);
            }
        }
        MonomialIdeal2D { generators }
    }

    pub fn unit() -> Self {
        MonomialIdeal2D { generators: alloc::vec![(0, 0)] }
    }

    pub fn is_unit(&self) -> bool {
        self.generators.contains(&(0, 0))
    }

    /// Order of the ideal at the origin: the least total degree.
    pub fn order(&self) -> u32 {
        self.generators.iter().map(|&(a, b)| a + b).min().unwrap_or(0)
    }

    pub fn has_common_factor(&self) -> bool {
        let Some(first) = self.generators.first() else {
            return false;
        };
        let last = self.generators.last().expect("nonempty");
        // the generators are sorted by a increasing and b decreasing
        first.0 > 0 || last.1 > 0
    }
}

impl fmt::Display for MonomialIdeal2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn mono(f: &mut fmt::Formatter<'_>, v: char, e: u32) -> fmt::Result {
            match e {
                0 => Ok(()),
                1 => write!(f, "{v}"),
                _ => write!(f, "{v}^{e}"),
            }
        }
        f.write_str("(")?;
        for (i, &(a, b)) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if a == 0 && b == 0 {
                f.write_str("1")?;
            }
            mono(f, 'x', a)?;
            mono(f, 'y', b)?;
        }
        f.write_str(")")
    }
}

/// The ideal of the moving part at `R_i ∩ R_j`, `x = x_i`, `y = x_j` for
/// `i < j`. All other `x_k` are units there.
pub fn local_ideal(
    b: &CanonicalBasis,
    fixed: &[u8; 10],
    pair: (usize, usize),
) -> Result<MonomialIdeal2D> {
    let (i, j) = if pair.0 < pair.1 { pair } else { (pair.1, pair.0) };
    if !QUADRANGLE.is_incident(i, j) {
        return Err(Error::NotIncident(i, j));
    }
    Ok(MonomialIdeal2D::new(b.entries.iter().map(|e| {
        ((e.exponents[i] - fixed[i]) as u32, (e.exponents[j] - fixed[j]) as u32)
    })))
}

fn resolve_node(ideal: &MonomialIdeal2D) -> Option<TypeNode> {
    let m = ideal.order();
    if m == 0 {
        return None;
    }
    // chart x = x', y = x'y'  and chart x = x'y', y = y'
    let a = MonomialIdeal2D::new(ideal.generators.iter().map(|&(a, b)| (a + b - m, b)));
    let b = MonomialIdeal2D::new(ideal.generators.iter().map(|&(a, b)| (a, a + b - m)));
    let children = [a, b].iter().filter_map(resolve_node).collect();
    Some(TypeNode { multiplicity: m, children })
}

/// Blows up the origin repeatedly and records the multiplicity of the
/// strict transform at each infinitely near base point.
pub fn resolve_type(ideal: &MonomialIdeal2D) -> Result<BasePointType> {
    if ideal.generators.is_empty() || ideal.has_common_factor() {
        return Err(Error::CommonFactor);
    }
    Ok(BasePointType { root: resolve_node(ideal) })
}

impl TypeNode {
    fn square_sum(&self) -> u64 {
        let m = self.multiplicity as u64;
        m * m + self.children.iter().map(TypeNode::square_sum).sum::<u64>()
    }
}

impl BasePointType {
    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    /// `Σ n²` over all infinitely near points.
    pub fn square_sum(&self) -> u64 {
        self.root.as_ref().map_or(0, TypeNode::square_sum)
    }

    pub fn is_chain(&self) -> bool {
        self.chain().is_some()
    }

    /// `(n1, …, nk)` when every point has at most one successor.
    pub fn chain(&self) -> Option<Vec<u32>> {
        let mut out = Vec::new();
        let mut node = self.root.as_ref();
        while let Some(n) = node {
            out.push(n.multiplicity);
            node = match n.children.as_slice() {
                [] => None,
                [c] => Some(c),
                _ => return None,
            };
        }
        Some(out)
    }
}

impl fmt::Display for TypeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.multiplicity)?;
        for c in &self.children {
            write!(f, "[{c}]")?;
        }
        Ok(())
    }
}

impl fmt::Display for BasePointType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.chain(), &self.root) {
            (Some(c), _) => {
                f.write_str("(")?;
                for (i, n) in c.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{n}")?;
                }
                f.write_str(")")
            }
            (None, Some(root)) => write!(f, "{root}"),
            (None, None) => f.write_str("()"),
        }
    }
}

fn is_prime(v: i64) -> bool {
    v >= 2 && (2..).take_while(|d| d * d <= v).all(|d| v % d != 0)
}

/// Fixed part, base points and `deg φ_K · deg φ_K(S)` for a tuple with
/// `p_g = 4` whose canonical sections are all ramification monomials.
pub fn degree_certificate(m: Modulus, t: &SixTuple) -> Result<CanonicalReport> {
    let inv = invariants(m, t)?;
    if inv.pg != 4 {
        return Err(Error::GeometricGenus { found: inv.pg });
    }
    let b = basis(m, t)?;
    for e in &b.entries {
        if !(canonical_class() + sheaf(m, t, e.chi)?.cls).is_zero() {
            return Err(Error::TwistedSection { chi: e.chi });
        }
    }
    let fixed = fixed_part(&b)?;
    let ram = ram_curve_numbers(m, t)?;
    let classes = QUADRANGLE.classes();

    let f: [i64; 10] = fixed.map(i64::from);
    let kf: i64 = f.iter().zip(ram.iter()).map(|(fi, r)| fi * r.kdot).sum();
    let ff: i64 = (0..10)
        .flat_map(|i| (0..10).map(move |j| (i, j)))
        .map(|(i, j)| f[i] * f[j] * classes[i].dot(&classes[j]))
        .sum();
    let moving_selfint = inv.k2 - 2 * kf + ff;

    let mut base_points = Vec::new();
    for &pair in QUADRANGLE.incidences.iter() {
        let ideal = local_ideal(&b, &fixed, pair)?;
        if ideal.is_unit() {
            continue;
        }
        let kind = resolve_type(&ideal)?;
        base_points.push(BasePoint { pair, ideal, kind });
    }
    let type_square_sum: u64 = base_points.iter().map(|p| p.kind.square_sum()).sum();
    let degree_product = moving_selfint - type_square_sum as i64;
    let birational = is_prime(degree_product);
    Ok(CanonicalReport {
        fixed_part: fixed,
        branching: base_points.iter().any(|p| !p.kind.is_chain()),
        base_points,
        moving_selfint,
        type_square_sum,
        degree_product,
        birational,
        justification: if birational { PRIME_DEGREE } else { UNDECIDED },
    })
}

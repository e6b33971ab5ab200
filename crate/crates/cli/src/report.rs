//! Serializable views of every pipeline stage and their JSON, markdown and
//! CSV renderings. All collections are built in a fixed order, so output is
//! byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::Result;
use serde::{Deserialize, Serialize};

use quadrangle_core::canonical::{BasePoint, CanonicalReport};
use quadrangle_core::covers::{named_representative, NAMED_REPRESENTATIVES};
use quadrangle_core::picard::{canonical_class, h1_complement, CurveLabel, QUADRANGLE};
use quadrangle_core::sheaves::{
    coeffs, cover_equations, invariants, ram_curve_numbers, sheaf_table, SurfaceInvariants,
};
use quadrangle_core::symmetry::OrbitPartition;
use quadrangle_core::{canonical, Modulus, SixTuple};

use crate::format::{character, md_table, monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Format {
    Json,
    Md,
    Csv,
}

pub trait Render {
    fn markdown(&self) -> String;
    fn csv(&self) -> Result<String>;
}

pub fn render<T: Render + Serialize>(v: &T, f: Format) -> Result<String> {
    Ok(match f {
        Format::Json => serde_json::to_string(v)? + "\n",
        Format::Md => v.markdown(),
        Format::Csv => v.csv()?,
    })
}

fn csv_rows<R: AsRef<[String]>>(header: &[&str], rows: &[R]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r.as_ref())?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn r_name(i: usize) -> String {
    format!("R{}", i + 1)
}

fn named(m: Modulus, t: &SixTuple) -> Option<&'static str> {
    if m != Modulus::FIVE {
        return None;
    }
    NAMED_REPRESENTATIVES.iter().map(|(n, _)| *n).find(|n| named_representative(n).as_ref() == Some(t))
}

// ---------------------------------------------------------------- enumerate

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateView {
    pub modulus: u8,
    pub count: usize,
}

impl Render for EnumerateView {
    fn markdown(&self) -> String {
        md_table(&["modulus", "admissible tuples"], &[vec![self.modulus.to_string(), self.count.to_string()]])
    }

    fn csv(&self) -> Result<String> {
        csv_rows(&["modulus", "count"], &[vec![self.modulus.to_string(), self.count.to_string()]])
    }
}

// ------------------------------------------------------------------- orbits

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitView {
    pub id: usize,
    /// Lexicographically smallest member.
    pub representative: String,
    pub size: u64,
    pub stabilizer_order: u64,
    /// Named tuple `U1..U4` lying in this orbit, if any.
    pub named: Option<String>,
    pub named_tuple: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsView {
    pub modulus: u8,
    pub group_order: u64,
    pub total: u64,
    pub orbits: Vec<OrbitView>,
}

impl OrbitsView {
    pub fn new(m: Modulus, p: &OrbitPartition, group_order: u64) -> Self {
        let orbits = p
            .orbits
            .iter()
            .map(|o| {
                let hit = if m == Modulus::FIVE {
                    NAMED_REPRESENTATIVES.iter().find_map(|(n, _)| {
                        let t = named_representative(n)?;
                        (p.orbit_of(&t) == Some(o.id)).then(|| (n.to_string(), t.to_string()))
                    })
                } else {
                    None
                };
                OrbitView {
                    id: o.id,
                    representative: o.representative.to_string(),
                    size: o.size,
                    stabilizer_order: o.stabilizer_order,
                    named: hit.as_ref().map(|h| h.0.clone()),
                    named_tuple: hit.map(|h| h.1),
                }
            })
            .collect();
        OrbitsView { modulus: m.get(), group_order, total: p.total(), orbits }
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.orbits
            .iter()
            .map(|o| {
                vec![
                    o.id.to_string(),
                    o.representative.clone(),
                    o.size.to_string(),
                    o.stabilizer_order.to_string(),
                    o.named.clone().unwrap_or_default(),
                    o.named_tuple.clone().unwrap_or_default(),
                ]
            })
            .collect()
    }
}

const ORBIT_HEADER: [&str; 6] = ["id", "representative", "size", "stabilizer", "named", "named tuple"];

impl Render for OrbitsView {
    fn markdown(&self) -> String {
        let mut s = format!(
            "{} admissible tuples, group order {}, {} orbits\n\n",
            self.total,
            self.group_order,
            self.orbits.len()
        );
        s += &md_table(&ORBIT_HEADER, &self.rows());
        s
    }

    fn csv(&self) -> Result<String> {
        csv_rows(&ORBIT_HEADER, &self.rows())
    }
}

// --------------------------------------------------------------- invariants

/// Field order is part of the output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsView {
    pub k2: i64,
    pub chi: i64,
    pub pg: u32,
    pub q: i64,
}

impl From<SurfaceInvariants> for InvariantsView {
    fn from(s: SurfaceInvariants) -> Self {
        InvariantsView { k2: s.k2, chi: s.chi_o, pg: s.pg, q: s.q }
    }
}

impl InvariantsView {
    fn row(&self) -> Vec<String> {
        vec![self.k2.to_string(), self.chi.to_string(), self.pg.to_string(), self.q.to_string()]
    }
}

impl Render for InvariantsView {
    fn markdown(&self) -> String {
        md_table(&["K²", "χ", "p_g", "q"], &[self.row()])
    }

    fn csv(&self) -> Result<String> {
        csv_rows(&["k2", "chi", "pg", "q"], &[self.row()])
    }
}

// -------------------------------------------------------------- sheaf table

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SheafTableView {
    pub modulus: u8,
    pub tuple: String,
    /// `"(a,b)"` to the class of `L_(a,b)`.
    pub sheaves: BTreeMap<String, String>,
}

impl SheafTableView {
    pub fn new(m: Modulus, t: &SixTuple) -> Result<Self> {
        let sheaves = sheaf_table(m, t)?
            .into_iter()
            .map(|s| (character(s.chi), s.cls.to_string()))
            .collect();
        Ok(SheafTableView { modulus: m.get(), tuple: t.to_string(), sheaves })
    }

    fn get(&self, a: u8, b: u8) -> &str {
        &self.sheaves[&format!("({a},{b})")]
    }
}

impl Render for SheafTableView {
    fn markdown(&self) -> String {
        let n = self.modulus;
        let mut header = vec!["L_(a,b)".to_string()];
        header.extend((0..n).map(|a| format!("a = {a}")));
        let header: Vec<&str> = header.iter().map(String::as_str).collect();
        let rows: Vec<Vec<String>> = (0..n)
            .map(|b| {
                let mut r = vec![format!("b = {b}")];
                r.extend((0..n).map(|a| match self.get(a, b) {
                    "0" => "O_Y".to_string(),
                    c => c.to_string(),
                }));
                r
            })
            .collect();
        format!("Character sheaves of {}\n\n{}", self.tuple, md_table(&header, &rows))
    }

    fn csv(&self) -> Result<String> {
        let n = self.modulus;
        let mut rows = Vec::new();
        for b in 0..n {
            for a in 0..n {
                let c = crate::format::parse_class(self.get(a, b))?;
                let mut r = vec![a.to_string(), b.to_string(), self.get(a, b).to_string(), c.h.to_string()];
                r.extend(c.e.iter().map(i64::to_string));
                rows.push(r);
            }
        }
        csv_rows(&["a", "b", "class", "h", "e0", "e1", "e2", "e3"], &rows)
    }
}

// ------------------------------------------------------------- coefficients

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub character: String,
    /// `δ1..δ3, λ1..λ3, μ0..μ3`.
    pub coefficients: Vec<u8>,
}

// ---------------------------------------------------------------- canonical

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisView {
    pub character: String,
    pub monomial: String,
    pub exponents: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasePointView {
    /// Ramification curve numbers, counted from 1.
    pub curves: [usize; 2],
    pub labels: [String; 2],
    pub ideal: String,
    #[serde(rename = "type")]
    pub kind: String,
    /// The multiplicities when the type is a chain.
    pub multiplicities: Option<Vec<u32>>,
    pub square_sum: u64,
}

impl From<&BasePoint> for BasePointView {
    fn from(p: &BasePoint) -> Self {
        let (i, j) = p.pair;
        BasePointView {
            curves: [i + 1, j + 1],
            labels: [CurveLabel::ALL[i].name().into(), CurveLabel::ALL[j].name().into()],
            ideal: p.ideal.to_string(),
            kind: p.kind.to_string(),
            multiplicities: p.kind.chain(),
            square_sum: p.kind.square_sum(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalView {
    pub tuple: String,
    pub basis: Vec<BasisView>,
    pub fixed_part: Vec<u8>,
    pub fixed_divisor: String,
    pub base_points: Vec<BasePointView>,
    pub k2: i64,
    pub moving_selfint: i64,
    pub type_square_sum: u64,
    pub degree_product: i64,
    pub birational: bool,
    pub justification: String,
    pub branching: bool,
}

impl CanonicalView {
    pub fn new(m: Modulus, t: &SixTuple) -> Result<Self> {
        let r: CanonicalReport = canonical::degree_certificate(m, t)?;
        let b = canonical::basis(m, t)?;
        let fixed_divisor = r
            .fixed_part
            .iter()
            .enumerate()
            .filter(|(_, &f)| f > 0)
            .map(|(i, &f)| if f == 1 { r_name(i) } else { format!("{f}{}", r_name(i)) })
            .collect::<Vec<_>>()
            .join(" + ");
        Ok(CanonicalView {
            tuple: t.to_string(),
            basis: b
                .entries
                .iter()
                .map(|e| BasisView {
                    character: character(e.chi),
                    monomial: monomial(&e.exponents),
                    exponents: e.exponents.to_vec(),
                })
                .collect(),
            fixed_part: r.fixed_part.to_vec(),
            fixed_divisor: if fixed_divisor.is_empty() { "0".into() } else { fixed_divisor },
            base_points: r.base_points.iter().map(BasePointView::from).collect(),
            k2: invariants(m, t)?.k2,
            moving_selfint: r.moving_selfint,
            type_square_sum: r.type_square_sum,
            degree_product: r.degree_product,
            birational: r.birational,
            justification: r.justification.into(),
            branching: r.branching,
        })
    }
}

impl Render for CanonicalView {
    fn markdown(&self) -> String {
        let mut s = format!("Canonical system of {}\n\n", self.tuple);
        s += &md_table(
            &["character", "section"],
            &self.basis.iter().map(|b| vec![b.character.clone(), b.monomial.clone()]).collect::<Vec<_>>(),
        );
        let _ = writeln!(s, "\nFixed part: {}.", self.fixed_divisor);
        let _ = writeln!(s, "The moving part has {} base points:\n", self.base_points.len());
        s += &md_table(
            &["point", "curves", "local ideal", "type", "Σ n²"],
            &self
                .base_points
                .iter()
                .map(|p| {
                    vec![
                        format!("x{} ∩ x{}", p.curves[0], p.curves[1]),
                        format!("{} ∩ {}", p.labels[0], p.labels[1]),
                        p.ideal.clone(),
                        p.kind.clone(),
                        p.square_sum.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        );
        let _ = writeln!(
            s,
            "\n(K - F)² = {}, Σ n² = {}, deg φ · deg φ(S) = {} - {} = {}.",
            self.moving_selfint,
            self.type_square_sum,
            self.moving_selfint,
            self.type_square_sum,
            self.degree_product
        );
        if self.birational {
            let _ = writeln!(
                s,
                "The product is prime and the image spans P³, so the canonical map is \
                 birational onto a surface of degree {} ({}).",
                self.degree_product, self.justification
            );
        } else {
            let _ = writeln!(s, "Birationality is not certified ({}).", self.justification);
        }
        if self.branching {
            s += "Warning: some base point has a branching infinitely near tree.\n";
        }
        s
    }

    fn csv(&self) -> Result<String> {
        let rows: Vec<Vec<String>> = self
            .base_points
            .iter()
            .map(|p| {
                vec![
                    p.curves[0].to_string(),
                    p.curves[1].to_string(),
                    p.ideal.clone(),
                    p.kind.clone(),
                    p.square_sum.to_string(),
                ]
            })
            .collect();
        csv_rows(&["curve_i", "curve_j", "ideal", "type", "square_sum"], &rows)
    }
}

// ----------------------------------------------------------------- homology

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveView {
    pub index: usize,
    pub label: String,
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyView {
    pub curves: Vec<CurveView>,
    pub intersections: Vec<Vec<i64>>,
    /// `r_ik = D_i · B_k` for `B = (H, E0, …, E3)`.
    pub restriction: Vec<Vec<i64>>,
    pub smith_diagonal: Vec<i64>,
    pub free_rank: usize,
    pub torsion: Vec<i64>,
    pub relations: Vec<Vec<i64>>,
    pub canonical_class: String,
}

impl HomologyView {
    pub fn new() -> Self {
        let h = h1_complement();
        let classes = QUADRANGLE.classes();
        HomologyView {
            curves: QUADRANGLE
                .curves
                .iter()
                .enumerate()
                .map(|(i, c)| CurveView { index: i + 1, label: c.label.name().into(), class: c.cls.to_string() })
                .collect(),
            intersections: classes.iter().map(|a| classes.iter().map(|b| a.dot(b)).collect()).collect(),
            restriction: h.matrix.clone(),
            smith_diagonal: h.smith.diagonal.clone(),
            free_rank: h.rank,
            torsion: h.torsion.clone(),
            relations: h.relations.iter().map(|r| r.to_vec()).collect(),
            canonical_class: canonical_class().to_string(),
        }
    }
}

impl Default for HomologyView {
    fn default() -> Self {
        Self::new()
    }
}

impl Render for HomologyView {
    fn markdown(&self) -> String {
        let labels: Vec<&str> = self.curves.iter().map(|c| c.label.as_str()).collect();
        let mut header = vec![""];
        header.extend(&labels);
        let rows: Vec<Vec<String>> = self
            .intersections
            .iter()
            .zip(&labels)
            .map(|(r, l)| std::iter::once(l.to_string()).chain(r.iter().map(i64::to_string)).collect())
            .collect();
        let mut s = String::from("Branch curves\n\n");
        s += &md_table(
            &["", "curve", "class"],
            &self.curves.iter().map(|c| vec![c.index.to_string(), c.label.clone(), c.class.clone()]).collect::<Vec<_>>(),
        );
        s += "\nIntersection numbers\n\n";
        s += &md_table(&header, &rows);
        s += "\nRestriction matrix (columns H, E0, E1, E2, E3)\n\n";
        s += &md_table(
            &["", "H", "E0", "E1", "E2", "E3"],
            &self
                .restriction
                .iter()
                .zip(&labels)
                .map(|(r, l)| std::iter::once(l.to_string()).chain(r.iter().map(i64::to_string)).collect())
                .collect::<Vec<_>>(),
        );
        let torsion = if self.torsion.is_empty() {
            String::from("no torsion")
        } else {
            format!("torsion {:?}", self.torsion)
        };
        let _ = writeln!(
            s,
            "\nSmith diagonal {:?}: H₁(Y - D) = Z^{}, {}.",
            self.smith_diagonal, self.free_rank, torsion
        );
        s
    }

    fn csv(&self) -> Result<String> {
        let rows: Vec<Vec<String>> = self
            .curves
            .iter()
            .zip(&self.restriction)
            .map(|(c, r)| {
                let mut row = vec![c.index.to_string(), c.label.clone(), c.class.clone()];
                row.extend(r.iter().map(i64::to_string));
                row
            })
            .collect();
        csv_rows(&["index", "label", "class", "dot_h", "dot_e0", "dot_e1", "dot_e2", "dot_e3"], &rows)
    }
}

// ---------------------------------------------------------------- equations

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationView {
    pub lhs: [[u8; 2]; 2],
    pub sigma_exponents: Vec<u8>,
    pub rhs: [u8; 2],
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationsView {
    pub tuple: String,
    pub count: usize,
    pub equations: Vec<EquationView>,
}

impl EquationsView {
    pub fn new(m: Modulus, t: &SixTuple) -> Result<Self> {
        let equations: Vec<EquationView> = cover_equations(m, t)?
            .iter()
            .map(|e| EquationView {
                lhs: [[e.lhs.0.x.value(), e.lhs.0.y.value()], [e.lhs.1.x.value(), e.lhs.1.y.value()]],
                sigma_exponents: e.sigma_exponents.to_vec(),
                rhs: [e.rhs.x.value(), e.rhs.y.value()],
                text: e.to_string(),
            })
            .collect();
        Ok(EquationsView { tuple: t.to_string(), count: equations.len(), equations })
    }
}

impl Render for EquationsView {
    fn markdown(&self) -> String {
        let mut s = format!("{} relations for {}\n\n", self.count, self.tuple);
        for e in &self.equations {
            let _ = writeln!(s, "    {}", e.text);
        }
        s
    }

    fn csv(&self) -> Result<String> {
        let rows: Vec<Vec<String>> = self
            .equations
            .iter()
            .map(|e| {
                let mut r = vec![
                    e.lhs[0][0].to_string(),
                    e.lhs[0][1].to_string(),
                    e.lhs[1][0].to_string(),
                    e.lhs[1][1].to_string(),
                ];
                r.extend(e.sigma_exponents.iter().map(u8::to_string));
                r.push(e.rhs[0].to_string());
                r.push(e.rhs[1].to_string());
                r
            })
            .collect();
        let mut header = vec!["a", "b", "c", "d"];
        let eps: Vec<String> = (1..=10).map(|i| format!("eps{i}")).collect();
        header.extend(eps.iter().map(String::as_str));
        header.extend(["a_plus_c", "b_plus_d"]);
        csv_rows(&header, &rows)
    }
}

// ------------------------------------------------------------------- report

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub orbit: OrbitView,
    pub invariants: InvariantsView,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamView {
    pub curve: usize,
    pub label: String,
    pub selfint: i64,
    pub kdot: i64,
    pub genus: i64,
}

/// Everything about one surface with `p_g = 4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularView {
    pub tuple: String,
    pub named: Option<String>,
    pub coefficients: Vec<CoefficientRow>,
    pub sheaf_table: SheafTableView,
    pub ramification: Vec<RamView>,
    pub canonical: CanonicalView,
    pub equation_count: usize,
}

impl RegularView {
    pub fn new(m: Modulus, t: &SixTuple) -> Result<Self> {
        let canonical = CanonicalView::new(m, t)?;
        let coefficients = canonical::basis(m, t)?
            .entries
            .iter()
            .map(|e| CoefficientRow { character: character(e.chi), coefficients: coeffs(m, t, e.chi).values().to_vec() })
            .collect();
        let ramification = ram_curve_numbers(m, t)?
            .iter()
            .enumerate()
            .map(|(i, r)| RamView {
                curve: i + 1,
                label: CurveLabel::ALL[i].name().into(),
                selfint: r.selfint,
                kdot: r.kdot,
                genus: r.genus,
            })
            .collect();
        Ok(RegularView {
            tuple: t.to_string(),
            named: named(m, t).map(String::from),
            coefficients,
            sheaf_table: SheafTableView::new(m, t)?,
            ramification,
            canonical,
            equation_count: cover_equations(m, t)?.len(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportView {
    pub modulus: u8,
    pub homology: HomologyView,
    pub admissible_count: usize,
    pub s5_order: u64,
    pub group_order: u64,
    pub orbits: Vec<OrbitSummary>,
    pub regular: Vec<RegularView>,
}

impl ReportView {
    /// `orbits` must partition the admissible tuples; one surface with
    /// `p_g = 4` per orbit is analysed, the named tuple when there is one.
    pub fn new(m: Modulus, count: usize, s5_order: u64, group_order: u64, orbits: &OrbitsView) -> Result<Self> {
        let mut summaries = Vec::new();
        let mut regular = Vec::new();
        for o in &orbits.orbits {
            let t = crate::format::parse_tuple(m, o.named_tuple.as_deref().unwrap_or(&o.representative))?;
            let inv = invariants(m, &t)?;
            summaries.push(OrbitSummary { orbit: o.clone(), invariants: inv.into() });
            if inv.pg == 4 {
                regular.push(RegularView::new(m, &t)?);
            }
        }
        Ok(ReportView {
            modulus: m.get(),
            homology: HomologyView::new(),
            admissible_count: count,
            s5_order,
            group_order,
            orbits: summaries,
            regular,
        })
    }
}

impl Render for ReportView {
    fn markdown(&self) -> String {
        let mut s = format!("# (Z/{0}Z)² covers branched on the complete quadrangle\n\n", self.modulus);
        s += "## Base surface and branch locus\n\n";
        s += &self.homology.markdown();
        let _ = writeln!(s, "\n## Admissible tuples\n\n{} admissible tuples.", self.admissible_count);
        let _ = writeln!(
            s,
            "\n## Symmetries\n\nThe transpositions generate a group of order {}; with GL(2) the group has order {}.\n",
            self.s5_order, self.group_order
        );
        let rows: Vec<Vec<String>> = self
            .orbits
            .iter()
            .map(|o| {
                vec![
                    o.orbit.id.to_string(),
                    o.orbit.representative.clone(),
                    o.orbit.named.clone().unwrap_or_default(),
                    o.orbit.size.to_string(),
                    o.invariants.k2.to_string(),
                    o.invariants.chi.to_string(),
                    o.invariants.pg.to_string(),
                    o.invariants.q.to_string(),
                ]
            })
            .collect();
        s += &md_table(&["id", "representative", "named", "size", "K²", "χ", "p_g", "q"], &rows);
        for r in &self.regular {
            let name = r.named.clone().unwrap_or_else(|| r.tuple.clone());
            let _ = writeln!(s, "\n## The surface {name}\n");
            let _ = writeln!(s, "Tuple {}.\n", r.tuple);
            s += &r.sheaf_table.markdown();
            s += "\nBranch coefficients of the characters with sections\n\n";
            let mut header = vec!["(a,b)"];
            header.extend(["δ1", "δ2", "δ3", "λ1", "λ2", "λ3", "μ0", "μ1", "μ2", "μ3"]);
            s += &md_table(
                &header,
                &r.coefficients
                    .iter()
                    .map(|c| std::iter::once(c.character.clone()).chain(c.coefficients.iter().map(u8::to_string)).collect())
                    .collect::<Vec<_>>(),
            );
            s += "\nRamification curves\n\n";
            s += &md_table(
                &["curve", "over", "R²", "K·R", "genus"],
                &r.ramification
                    .iter()
                    .map(|x| {
                        vec![
                            format!("R{}", x.curve),
                            x.label.clone(),
                            x.selfint.to_string(),
                            x.kdot.to_string(),
                            x.genus.to_string(),
                        ]
                    })
                    .collect::<Vec<_>>(),
            );
            s += "\n";
            s += &r.canonical.markdown();
            let _ = writeln!(s, "\nThe cover is cut out by {} relations `w_χ w_χ' = σ^ε w_(χ+χ')`.", r.equation_count);
        }
        s
    }

    fn csv(&self) -> Result<String> {
        let rows: Vec<Vec<String>> = self
            .orbits
            .iter()
            .map(|o| {
                vec![
                    o.orbit.id.to_string(),
                    o.orbit.representative.clone(),
                    o.orbit.named.clone().unwrap_or_default(),
                    o.orbit.size.to_string(),
                    o.invariants.k2.to_string(),
                    o.invariants.chi.to_string(),
                    o.invariants.pg.to_string(),
                    o.invariants.q.to_string(),
                ]
            })
            .collect();
        csv_rows(&["id", "representative", "named", "size", "k2", "chi", "pg", "q"], &rows)
    }
}

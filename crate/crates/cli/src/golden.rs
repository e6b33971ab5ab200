//! Reference constants embedded at build time and the `--verify` checks
//! against them.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::format::{parse_class, parse_monomial};
use crate::report::{
    CanonicalView, EnumerateView, EquationsView, HomologyView, InvariantsView, OrbitsView,
    RegularView, ReportView, SheafTableView,
};

const GOLDEN: &str = include_str!("../data/golden.json");

#[derive(Clone, Debug, Deserialize)]
pub struct Golden {
    pub modulus: u8,
    pub admissible_count: usize,
    pub s5_order: u64,
    pub group_order: u64,
    pub orbit_sizes: Vec<u64>,
    pub homology: GoldenHomology,
    pub representatives: BTreeMap<String, GoldenSurface>,
    pub u3_sheaf_table: BTreeMap<String, String>,
    pub u3_coefficients: BTreeMap<String, Vec<u8>>,
    pub u3_canonical: GoldenCanonical,
    pub ramification: GoldenRam,
    pub equation_count: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenHomology {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenSurface {
    pub tuple: String,
    pub k2: i64,
    pub chi: i64,
    pub q: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenCanonical {
    pub basis: Vec<String>,
    pub fixed_part: Vec<u8>,
    pub base_points: Vec<GoldenBasePoint>,
    pub moving_selfint: i64,
    pub degree: i64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenBasePoint {
    pub curves: [usize; 2],
    #[serde(rename = "type")]
    pub kind: Vec<u32>,
}

#[derive(Clone, Copy, Debug, Deserialize)]
pub struct GoldenRam {
    pub selfint: i64,
    pub kdot: i64,
    pub genus: i64,
}

pub fn load() -> Golden {
    serde_json::from_str(GOLDEN).expect("embedded reference data is valid")
}

/// Collects mismatches; notes record checks that had no reference data.
#[derive(Debug, Default)]
pub struct Verifier {
    pub checked: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl Verifier {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn applies(&mut self, g: &Golden, modulus: u8) -> bool {
        if modulus != g.modulus {
            self.notes.push(format!("no reference data for modulus {modulus}"));
        }
        modulus == g.modulus
    }

    fn surface_for(&self, g: &Golden, tuple: &str) -> Option<String> {
        g.representatives.iter().find(|(_, s)| s.tuple == tuple).map(|(n, _)| n.clone())
    }

    pub fn enumerate(&mut self, g: &Golden, v: &EnumerateView) {
        if self.applies(g, v.modulus) {
            self.check(v.count == g.admissible_count, || {
                format!("admissible count {} != {}", v.count, g.admissible_count)
            });
        }
    }

    pub fn orbits(&mut self, g: &Golden, v: &OrbitsView) {
        if !self.applies(g, v.modulus) {
            return;
        }
        self.check(v.group_order == g.group_order, || {
            format!("group order {} != {}", v.group_order, g.group_order)
        });
        let mut sizes: Vec<u64> = v.orbits.iter().map(|o| o.size).collect();
        sizes.sort_unstable();
        self.check(sizes == g.orbit_sizes, || format!("orbit sizes {sizes:?} != {:?}", g.orbit_sizes));
        for (name, s) in &g.representatives {
            let hits = v.orbits.iter().filter(|o| o.named_tuple.as_deref() == Some(&s.tuple)).count();
            self.check(hits == 1, || format!("{name} lies in {hits} orbits"));
        }
    }

    pub fn invariants(&mut self, g: &Golden, modulus: u8, tuple: &str, v: &InvariantsView) {
        if !self.applies(g, modulus) {
            return;
        }
        let (k2, chi) = g.representatives.values().next().map(|s| (s.k2, s.chi)).unwrap_or_default();
        self.check(v.k2 == k2 && v.chi == chi, || format!("K² = {}, χ = {}; expected {k2}, {chi}", v.k2, v.chi));
        self.check(v.chi == v.pg as i64 + 1 - v.q, || "χ != p_g - q + 1".into());
        match self.surface_for(g, tuple) {
            Some(name) => {
                let s = &g.representatives[&name];
                self.check(v.q == s.q, || format!("{name}: q = {} != {}", v.q, s.q));
            }
            None => self.notes.push(format!("no reference q for {tuple}")),
        }
    }

    fn is_u3(&self, g: &Golden, tuple: &str) -> bool {
        g.representatives.get("U3").is_some_and(|s| s.tuple == tuple)
    }

    pub fn sheaf_table(&mut self, g: &Golden, v: &SheafTableView) {
        if !self.applies(g, v.modulus) {
            return;
        }
        if !self.is_u3(g, &v.tuple) {
            self.notes.push(format!("no reference sheaf table for {}", v.tuple));
            return;
        }
        for (key, want) in &g.u3_sheaf_table {
            let want = parse_class(want).expect("reference classes parse");
            let got = v.sheaves.get(key).and_then(|c| parse_class(c).ok());
            self.check(got == Some(want), || format!("L{key} = {got:?}, expected {want}"));
        }
    }

    pub fn canonical(&mut self, g: &Golden, modulus: u8, v: &CanonicalView) {
        if !self.applies(g, modulus) {
            return;
        }
        if !self.is_u3(g, &v.tuple) {
            self.notes.push(format!("no reference canonical data for {}", v.tuple));
            return;
        }
        let c = &g.u3_canonical;
        let want: Vec<Vec<u8>> =
            c.basis.iter().map(|s| parse_monomial(s, 10).expect("reference monomials parse")).collect();
        let got: Vec<Vec<u8>> = v.basis.iter().map(|b| b.exponents.clone()).collect();
        self.check(got == want, || format!("basis {got:?} != {want:?}"));
        self.check(v.fixed_part == c.fixed_part, || format!("fixed part {:?}", v.fixed_part));
        let points: Vec<([usize; 2], Option<Vec<u32>>)> =
            v.base_points.iter().map(|p| (p.curves, p.multiplicities.clone())).collect();
        let want: Vec<([usize; 2], Option<Vec<u32>>)> =
            c.base_points.iter().map(|p| (p.curves, Some(p.kind.clone()))).collect();
        self.check(points == want, || format!("base points {points:?} != {want:?}"));
        self.check(v.moving_selfint == c.moving_selfint, || format!("(K - F)² = {}", v.moving_selfint));
        self.check(v.degree_product == c.degree, || format!("degree product {}", v.degree_product));
        self.check(v.birational, || "birationality not certified".into());
    }

    pub fn homology(&mut self, g: &Golden, v: &HomologyView) {
        self.check(v.free_rank == g.homology.free_rank && v.torsion == g.homology.torsion, || {
            format!("H₁ rank {} torsion {:?}", v.free_rank, v.torsion)
        });
    }

    pub fn equations(&mut self, g: &Golden, modulus: u8, v: &EquationsView) {
        if self.applies(g, modulus) {
            self.check(v.count == g.equation_count, || format!("{} relations", v.count));
        }
    }

    fn regular(&mut self, g: &Golden, modulus: u8, r: &RegularView) {
        self.sheaf_table(g, &r.sheaf_table);
        self.canonical(g, modulus, &r.canonical);
        if self.is_u3(g, &r.tuple) {
            for row in &r.coefficients {
                let want = g.u3_coefficients.get(&row.character);
                self.check(want.map_or(true, |w| *w == row.coefficients), || {
                    format!("coefficients of {} = {:?}", row.character, row.coefficients)
                });
            }
            let covered = r.coefficients.iter().filter(|c| g.u3_coefficients.contains_key(&c.character)).count();
            self.check(covered == g.u3_coefficients.len(), || format!("{covered} coefficient rows"));
        }
        let gr = g.ramification;
        for x in &r.ramification {
            self.check((x.selfint, x.kdot, x.genus) == (gr.selfint, gr.kdot, gr.genus), || {
                format!("R{}: ({}, {}, {})", x.curve, x.selfint, x.kdot, x.genus)
            });
        }
        self.check(r.equation_count == g.equation_count, || format!("{} relations", r.equation_count));
    }

    pub fn report(&mut self, g: &Golden, v: &ReportView) {
        self.homology(g, &v.homology);
        if !self.applies(g, v.modulus) {
            return;
        }
        self.enumerate(g, &EnumerateView { modulus: v.modulus, count: v.admissible_count });
        self.check(v.s5_order == g.s5_order, || format!("transposition group order {}", v.s5_order));
        let orbits = OrbitsView {
            modulus: v.modulus,
            group_order: v.group_order,
            total: v.admissible_count as u64,
            orbits: v.orbits.iter().map(|o| o.orbit.clone()).collect(),
        };
        self.orbits(g, &orbits);
        for o in &v.orbits {
            let tuple = o.orbit.named_tuple.clone().unwrap_or_else(|| o.orbit.representative.clone());
            self.invariants(g, v.modulus, &tuple, &o.invariants);
        }
        let has_u3 = v.regular.iter().any(|r| self.is_u3(g, &r.tuple));
        self.check(has_u3, || "U3 is not analysed".into());
        for r in &v.regular {
            self.regular(g, v.modulus, r);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_data_is_consistent() {
        let g = load();
        assert_eq!(g.orbit_sizes.iter().sum::<u64>(), g.admissible_count as u64);
        assert_eq!(g.u3_sheaf_table.len(), 25);
        assert_eq!(g.u3_canonical.basis.len(), 4);
        let sq: u32 = g.u3_canonical.base_points.iter().flat_map(|p| p.kind.iter().map(|n| n * n)).sum();
        assert_eq!(g.u3_canonical.moving_selfint - sq as i64, g.u3_canonical.degree);
    }
}

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use anyhow::{Context, Result};

use quadrangle_core::covers::check_admissible;
use quadrangle_core::sheaves::invariants;
use quadrangle_core::symmetry::{full_closure, generators, orbits, s5_closure};
use quadrangle_core::{Modulus, SixTuple};

use crate::golden::{self, Verifier};
use crate::parallel;
use crate::report::{
    render, CanonicalView, EnumerateView, EquationsView, Format, HomologyView, InvariantsView,
    OrbitsView, ReportView, SheafTableView,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Enumerate,
    Orbits,
    Invariants(SixTuple),
    SheafTable(SixTuple),
    Canonical(SixTuple),
    Homology,
    Equations(SixTuple),
    Report,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub modulus: Modulus,
    pub command: Command,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub verify: bool,
    /// Where `enumerate` writes every tuple, one per line.
    pub dump: Option<PathBuf>,
    pub threads: usize,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub text: String,
    pub verify: Option<Verifier>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.verify.as_ref().map_or(true, |v| v.failures.is_empty())
    }
}

fn admissible(m: Modulus, t: &SixTuple) -> Result<()> {
    check_admissible(m, t).map_err(|why| {
        anyhow::anyhow!("tuple {t} is not admissible [{}]: {why}", why.code())
    })
}

fn orbits_view(m: Modulus, threads: usize) -> Result<(usize, OrbitsView)> {
    let all = parallel::enumerate(m, threads);
    let order = full_closure(m).order();
    let p = orbits(m, &all, &generators(m), order)?;
    Ok((all.len(), OrbitsView::new(m, &p, order)))
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let m = cfg.modulus;
    let g = golden::load();
    let mut v = Verifier::default();
    let text = match &cfg.command {
        Command::Enumerate => {
            let all = parallel::enumerate(m, cfg.threads);
            if let Some(path) = &cfg.dump {
                let mut f = std::io::BufWriter::new(
                    fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
                );
                for t in &all {
                    writeln!(f, "{t}")?;
                }
                f.flush()?;
            }
            let view = EnumerateView { modulus: m.get(), count: all.len() };
            v.enumerate(&g, &view);
            render(&view, cfg.format)?
        }
        Command::Orbits => {
            let (_, view) = orbits_view(m, cfg.threads)?;
            v.orbits(&g, &view);
            render(&view, cfg.format)?
        }
        Command::Invariants(t) => {
            admissible(m, t)?;
            let view = InvariantsView::from(invariants(m, t)?);
            v.invariants(&g, m.get(), &t.to_string(), &view);
            render(&view, cfg.format)?
        }
        Command::SheafTable(t) => {
            let view = SheafTableView::new(m, t)?;
            v.sheaf_table(&g, &view);
            render(&view, cfg.format)?
        }
        Command::Canonical(t) => {
            admissible(m, t)?;
            let view = CanonicalView::new(m, t)?;
            v.canonical(&g, m.get(), &view);
            render(&view, cfg.format)?
        }
        Command::Homology => {
            let view = HomologyView::new();
            v.homology(&g, &view);
            render(&view, cfg.format)?
        }
        Command::Equations(t) => {
            admissible(m, t)?;
            let view = EquationsView::new(m, t)?;
            v.equations(&g, m.get(), &view);
            render(&view, cfg.format)?
        }
        Command::Report => {
            let (count, orbits) = orbits_view(m, cfg.threads)?;
            let view = ReportView::new(m, count, s5_closure(m).order(), orbits.group_order, &orbits)?;
            v.report(&g, &view);
            render(&view, cfg.format)?
        }
    };
    Ok(Outcome { text, verify: cfg.verify.then_some(v) })
}

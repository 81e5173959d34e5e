use std::collections::BTreeSet;

use dimfox_core::families::class2_counterexample;
use dimfox_core::subgroup::{all_subgroups, cyclic_subgroups, up_to_conjugacy};
use dimfox_core::{build_group_with_cap, CoeffRing, Error, FiniteGroup, Result, Subgroup, DEFAULT_ORDER_CAP};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::checks::{
    verify_dim3, verify_exact_sequence, verify_fox, verify_polynomial_sequence, Caps, Dim3Options, Setting,
};
use crate::report::{Aggregate, Check, Report};
use crate::series::{LabeledSeries, SeriesSpec};

/// Built-in family strings covering the expressible groups of order at most 16.
pub const DEFAULT_GROUPS: &[&str] = &[
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "cyclic:7",
    "cyclic:8",
    "cyclic:9",
    "cyclic:10",
    "cyclic:11",
    "cyclic:12",
    "cyclic:13",
    "cyclic:14",
    "cyclic:15",
    "cyclic:16",
    "elementary-abelian:2,2",
    "elementary-abelian:2,3",
    "elementary-abelian:2,4",
    "elementary-abelian:3,2",
    "cyclic:2xcyclic:4",
    "cyclic:2xcyclic:6",
    "cyclic:2xcyclic:8",
    "cyclic:4xcyclic:4",
    "cyclic:2xcyclic:2xcyclic:4",
    "symmetric:3",
    "dihedral:4",
    "dihedral:5",
    "dihedral:6",
    "dihedral:7",
    "dihedral:8",
    "quaternion:8",
    "quaternion:16",
    "alternating:4",
    "dihedral:4xcyclic:2",
    "quaternion:8xcyclic:2",
];

/// Which subgroups a corpus case ranges over.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubgroupPolicy {
    #[default]
    Cyclic,
    /// All subgroups up to `all_subgroups_order`, cyclic ones above.
    All,
    /// All subgroups, one per conjugacy class, with the same size rule.
    Conjugacy,
    /// Generator lists, each parsed in every group of the corpus.
    Explicit(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub p: u64,
    pub r: u32,
    pub s: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusConfig {
    pub groups: Vec<String>,
    /// Subgroups used for `K` (and for `H` in Fox checks).
    pub subgroups: SubgroupPolicy,
    /// Largest order for which the `all` and `conjugacy` policies enumerate every subgroup.
    pub all_subgroups_order: usize,
    /// Fox checks range `H` over all subgroups (within the size rule) instead of the policy.
    pub fox_all_h: bool,
    pub moduli: Vec<u64>,
    pub checks: Vec<Check>,
    pub nseries: Vec<String>,
    /// Class-2 counterexample groups `(p, r, s)`, checked for `D_3` with their own `K`.
    pub counterexamples: Vec<Counterexample>,
    pub caps: Caps,
    pub reduction_check: bool,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            groups: DEFAULT_GROUPS.iter().map(|s| s.to_string()).collect(),
            subgroups: SubgroupPolicy::Cyclic,
            all_subgroups_order: 16,
            fox_all_h: true,
            moduli: vec![0, 2, 3, 4],
            checks: vec![
                Check::Dim3,
                Check::Fox0,
                Check::Fox1,
                Check::Fox2,
                Check::ExactSequence,
                Check::PolynomialSequence,
            ],
            nseries: vec!["gamma".into()],
            counterexamples: Vec::new(),
            caps: Caps::default(),
            reduction_check: false,
            jobs: 0,
        }
    }
}

impl CorpusConfig {
    /// A configuration with no cases.
    pub fn empty() -> Self {
        CorpusConfig { groups: Vec::new(), ..Default::default() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: CorpusConfig = serde_json::from_str(text).map_err(|e| Error::Parse(format!("corpus config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.caps.order == 0 || self.caps.enumerate_h == 0 || self.all_subgroups_order == 0 {
            return Err(Error::Parse("caps must be positive".into()));
        }
        for &m in &self.moduli {
            CoeffRing::from_modulus(m)?;
        }
        for s in &self.nseries {
            s.parse::<SeriesSpec>()?;
        }
        for c in &self.counterexamples {
            if c.r == 0 || c.r > c.s {
                return Err(Error::BadFamily(format!("need 0 < r <= s, got r={} s={}", c.r, c.s)));
            }
        }
        Ok(())
    }
}

/// One group with everything its cases share.
struct Prepared {
    label: String,
    g: FiniteGroup,
    ks: Vec<Subgroup>,
    hs: Vec<Subgroup>,
    series: Vec<LabeledSeries>,
}

enum Job {
    Dim3 { gi: usize, ki: usize, si: usize, m: u64 },
    Fox { gi: usize, hi: usize, ki: usize, n: usize, m: u64 },
    Exact { gi: usize, ki: usize, si: usize },
    Polynomial { gi: usize, ki: usize, si: usize, m: u64 },
}

fn select(g: &FiniteGroup, policy: &SubgroupPolicy, all_order: usize) -> Result<Vec<Subgroup>> {
    let mut subs = match policy {
        SubgroupPolicy::Cyclic => cyclic_subgroups(g),
        SubgroupPolicy::All | SubgroupPolicy::Conjugacy if g.order() > all_order => cyclic_subgroups(g),
        SubgroupPolicy::All => all_subgroups(g, usize::MAX)?,
        SubgroupPolicy::Conjugacy => up_to_conjugacy(g, all_subgroups(g, usize::MAX)?),
        SubgroupPolicy::Explicit(lists) => lists
            .iter()
            .map(|l| g.parse_elements(l).map(|gens| Subgroup::generated(g, &gens)))
            .collect::<Result<_>>()?,
    };
    let mut seen = BTreeSet::new();
    subs.retain(|s| seen.insert(s.members().to_vec()));
    Ok(subs)
}

fn prepare(cfg: &CorpusConfig) -> Result<Vec<Prepared>> {
    let specs: Vec<SeriesSpec> = cfg.nseries.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for label in &cfg.groups {
        let g = build_group_with_cap(&label.parse()?, DEFAULT_ORDER_CAP)?;
        let ks = select(&g, &cfg.subgroups, cfg.all_subgroups_order)?;
        let hs = if cfg.fox_all_h && g.order() <= cfg.all_subgroups_order {
            all_subgroups(&g, usize::MAX)?
        } else {
            ks.clone()
        };
        // Series that fail validation in this group (a Jennings prime not dividing the
        // order, say) are skipped rather than reported.
        let series = specs.iter().filter_map(|s| LabeledSeries::build(s, &g).ok()).collect();
        out.push(Prepared { label: label.clone(), g, ks, hs, series });
    }
    for c in &cfg.counterexamples {
        let (g, k, _) = class2_counterexample(c.p, c.r, c.s, DEFAULT_ORDER_CAP)?;
        let series = vec![LabeledSeries::gamma(&g)];
        let label = format!("class2:{},{} (r={})", c.p, c.s, c.r);
        out.push(Prepared { label, g, ks: vec![k], hs: Vec::new(), series });
    }
    Ok(out)
}

fn jobs(cfg: &CorpusConfig, prepared: &[Prepared]) -> Vec<Job> {
    let base = cfg.groups.len();
    let mut jobs = Vec::new();
    for (gi, p) in prepared.iter().enumerate() {
        let counterexample = gi >= base;
        for &check in &cfg.checks {
            match check {
                Check::Dim3 => {
                    for si in 0..p.series.len() {
                        for ki in 0..p.ks.len() {
                            for &m in &cfg.moduli {
                                jobs.push(Job::Dim3 { gi, ki, si, m });
                            }
                        }
                    }
                }
                _ if counterexample => {}
                Check::Fox0 | Check::Fox1 => {
                    let n = if check == Check::Fox0 { 0 } else { 1 };
                    let trivial = p.ks.iter().position(Subgroup::is_trivial);
                    for hi in 0..p.hs.len() {
                        for &m in &cfg.moduli {
                            // K does not enter these degrees.
                            jobs.push(Job::Fox { gi, hi, ki: trivial.unwrap_or(usize::MAX), n, m });
                        }
                    }
                }
                Check::Fox2 => {
                    for hi in 0..p.hs.len() {
                        for ki in 0..p.ks.len() {
                            for &m in &cfg.moduli {
                                jobs.push(Job::Fox { gi, hi, ki, n: 2, m });
                            }
                        }
                    }
                }
                Check::ExactSequence | Check::PolynomialSequence => {
                    for si in 0..p.series.len() {
                        for ki in (0..p.ks.len()).filter(|&ki| p.ks[ki].is_normal(&p.g)) {
                            if check == Check::ExactSequence {
                                jobs.push(Job::Exact { gi, ki, si });
                            } else {
                                for &m in &cfg.moduli {
                                    jobs.push(Job::Polynomial { gi, ki, si, m });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    jobs
}

fn run_job(cfg: &CorpusConfig, prepared: &[Prepared], job: &Job) -> Report {
    let ring = |m: u64| CoeffRing::from_modulus(m).expect("validated modulus");
    let at = |gi: usize| Setting { label: &prepared[gi].label, g: &prepared[gi].g };
    match *job {
        Job::Dim3 { gi, ki, si, m } => {
            let p = &prepared[gi];
            let opts = Dim3Options { reduction_check: cfg.reduction_check };
            verify_dim3(at(gi), &p.ks[ki], &p.series[si], &ring(m), cfg.caps, opts)
        }
        Job::Fox { gi, hi, ki, n, m } => {
            let p = &prepared[gi];
            let trivial = Subgroup::trivial(&p.g);
            let k = p.ks.get(ki).unwrap_or(&trivial);
            verify_fox(at(gi), &p.hs[hi], k, n, &ring(m), cfg.caps)
        }
        Job::Exact { gi, ki, si } => {
            let p = &prepared[gi];
            verify_exact_sequence(at(gi), &p.ks[ki], &p.series[si], cfg.caps)
        }
        Job::Polynomial { gi, ki, si, m } => {
            let p = &prepared[gi];
            verify_polynomial_sequence(at(gi), &p.ks[ki], &p.series[si], 2, &ring(m), cfg.caps)
        }
    }
}

/// Runs every selected check over the corpus. Cases are independent and run in
/// parallel; the aggregate is ordered by case, so the result does not depend on the
/// number of threads.
pub fn run_corpus(cfg: &CorpusConfig) -> Result<Aggregate> {
    cfg.validate()?;
    let prepared = prepare(cfg)?;
    let jobs = jobs(cfg, &prepared);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?;
    let reports: Vec<Report> = pool.install(|| jobs.par_iter().map(|j| run_job(cfg, &prepared, j)).collect());
    Ok(Aggregate::new(reports))
}

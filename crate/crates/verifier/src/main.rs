use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dimfox_core::abelian::{check_tau3_kernel, check_wedge_kernel, DEFAULT_ENUMERATION_CAP};
use dimfox_core::families::class2_counterexample;
use dimfox_core::subgroup::{center, commutator_subgroup, join, lower_central_series};
use dimfox_core::{build_group, AbSubgroup, CoeffRing, Error, FgAb, FiniteGroup, Result, Subgroup, DEFAULT_ORDER_CAP};
use dimfox_verifier::{
    run_corpus, verify_dim3, verify_exact_sequence, verify_fox, verify_polynomial_sequence, Caps, CorpusConfig,
    Dim3Options, LabeledSeries, Report, SeriesSpec, Setting,
};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "dimfox",
    version,
    about = "Relative dimension and Fox subgroups: brute force against closed formulas"
)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Raise the group-ring order cap from 256 to 1024 (needed for the order-729 counterexample).
    #[arg(long, global = true)]
    slow_tier: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a group.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Third relative dimension subgroup, brute force against the formula.
    Dim3(Dim3Args),
    /// Relative Fox subgroups of degree 0, 1 or 2.
    Fox(FoxArgs),
    /// Abelian-group identities and exact sequences.
    Homology {
        #[command(subcommand)]
        command: HomologyCommand,
    },
    /// The class-2 group where `K_2 G_3` is smaller than `D_3(G, K)` over Z.
    #[command(alias = "example-2-4")]
    Counterexample {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
    },
    /// Run a corpus described by a JSON configuration file.
    Corpus {
        #[arg(long)]
        config: PathBuf,
        /// Worker threads; overrides the configuration.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    Show { spec: String },
}

#[derive(Args)]
struct GroupArgs {
    /// Family string such as `dihedral:4` or `cyclic:2xcyclic:4`, or inline JSON.
    #[arg(long)]
    group: String,
    /// Generators of K, comma separated; empty for the trivial subgroup.
    #[arg(long = "K", default_value = "")]
    k: String,
}

#[derive(Args)]
struct Dim3Args {
    #[command(flatten)]
    group: GroupArgs,
    /// `gamma`, `jennings:p`, `exponent-p:p`, `stretched`, or terms like `x; x^2; 1`.
    #[arg(long, default_value = "gamma")]
    nseries: String,
    #[arg(long, default_value = "Z")]
    ring: String,
    /// Also compare with the lower-central-series computation in `G/N_3`.
    #[arg(long)]
    reduction_check: bool,
}

#[derive(Args)]
struct FoxArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Generators of H, comma separated.
    #[arg(long = "H")]
    h: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "Z")]
    ring: String,
}

#[derive(Args)]
struct AbelianArgs {
    /// Cyclic orders of A, e.g. `2,4` (0 for a copy of Z).
    #[arg(long)]
    invariants: String,
}

#[derive(Subcommand)]
enum HomologyCommand {
    /// Kernel of `(q ⊗ id) ℓ` against `ν (q ⊗ id)^{-1} Im τ` for `B ⊆ A`.
    #[command(alias = "lemma2.7")]
    WedgeKernel {
        #[command(flatten)]
        a: AbelianArgs,
        /// Generators of B in the coordinates of A, `;` separated, e.g. `1,0;0,2`.
        #[arg(long, default_value = "")]
        sub: String,
    },
    /// Kernel of `τ_3` on `A_(m)` against its closed form.
    #[command(alias = "lemma2.8")]
    Tau3Kernel {
        #[command(flatten)]
        a: AbelianArgs,
        #[arg(long)]
        m: i64,
    },
    /// `Tor → KN_3/K_2N_3 → P_2(G, K) → P_2(G/K) → 0` over Z.
    #[command(alias = "thm2.6")]
    ExactSequence {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "gamma")]
        nseries: String,
    },
    /// `R ⊗ KN_{n+1}/K_2N_{n+1} → P_n(G, K) → P_n(G/K) → 0` and the derivation law.
    #[command(alias = "lemma2.5")]
    PolynomialSequence {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "gamma")]
        nseries: String,
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

struct Loaded {
    label: String,
    g: FiniteGroup,
    k: Subgroup,
}

impl GroupArgs {
    fn load(&self) -> Result<Loaded> {
        let g = build_group(&self.group.parse()?)?;
        let k = Subgroup::generated(&g, &g.parse_elements(&self.k)?);
        Ok(Loaded { label: self.group.clone(), g, k })
    }
}

impl Loaded {
    fn at(&self) -> Setting<'_> {
        Setting { label: &self.label, g: &self.g }
    }

    fn series(&self, spec: &str) -> Result<LabeledSeries> {
        LabeledSeries::build(&spec.parse::<SeriesSpec>()?, &self.g)
    }
}

fn concrete(ring: &str) -> Result<CoeffRing> {
    let ring: CoeffRing = ring.parse()?;
    ring.modulus()?;
    Ok(ring)
}

fn print<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    let out = if json { serde_json::to_string_pretty(value).expect("serializable") } else { text() };
    // A closed pipe (`dimfox ... | head`) is not an error.
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

fn details(r: &Report) -> String {
    let mut out = format!("{r}\n  lhs (brute):   {}\n  rhs (formula): {}", r.lhs.join(" "), r.rhs.join(" "));
    for (name, ok) in &r.checks {
        out.push_str(&format!("\n  {name}: {ok}"));
    }
    for n in &r.notes {
        out.push_str(&format!("\n  note: {n}"));
    }
    out
}

fn verdict(r: &Report) -> u8 {
    match (&r.error, r.equal) {
        (Some(_), _) => 2,
        (None, true) => 0,
        (None, false) => 1,
    }
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer {t:?}"))))
        .collect()
}

fn abelian(args: &AbelianArgs) -> Result<FgAb> {
    let orders = parse_list(&args.invariants)?;
    let mut free = orders.iter().filter(|&&d| d == 0).count();
    let finite: Vec<i64> = orders.into_iter().filter(|&d| d != 0).collect();
    let mut factors = FgAb::from_cyclic_orders(&finite).factors().to_vec();
    while free > 0 {
        factors.push(0);
        free -= 1;
    }
    FgAb::new(factors)
}

fn show_group(json: bool, spec: &str) -> Result<u8> {
    let g = build_group(&spec.parse()?)?;
    let gamma = lower_central_series(&g);
    let names = |s: &Subgroup| s.names(&g);
    let value = json!({
        "group": spec,
        "order": g.order(),
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "generators": g.generators().iter().map(|&x| g.name(x)).collect::<Vec<_>>(),
        "elements": g.elements().map(|x| g.name(x)).collect::<Vec<_>>(),
        "lower_central_series": gamma.terms().iter().map(names).collect::<Vec<_>>(),
        "center": names(&center(&g)),
    });
    print(json, &value, || {
        let orders: Vec<String> = gamma.terms().iter().map(|t| t.order().to_string()).collect();
        format!(
            "{spec}: order {}, exponent {}{}\ngenerators: {}\nelements: {}\nlower central series orders: {}\ncenter: {}",
            g.order(),
            g.exponent(),
            if g.is_abelian() { ", abelian" } else { "" },
            value["generators"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect::<Vec<_>>().join(" "),
            value["elements"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect::<Vec<_>>().join(" "),
            orders.join(" > "),
            names(&center(&g)).join(" "),
        )
    });
    Ok(0)
}

fn counterexample(json: bool, caps: Caps, p: u64, r: u32, s: u32) -> Result<u8> {
    let (g, k, z) = class2_counterexample(p, r, s, DEFAULT_ORDER_CAP)?;
    let label = format!("class2:{p},{s}");
    let at = Setting { label: &label, g: &g };
    let report = verify_dim3(at, &k, &LabeledSeries::gamma(&g), &CoeffRing::Integers, caps, Dim3Options::default());
    let gamma = lower_central_series(&g);
    let k2g3 = join(&g, &[&commutator_subgroup(&g, &k, &k), gamma.term(3)]);
    let z_in_d3 = report.lhs.iter().any(|n| n == g.name(z));
    let value = json!({
        "report": report,
        "z": g.name(z),
        "z_in_d3": z_in_d3,
        "k2g3": k2g3.names(&g),
    });
    print(json, &value, || {
        format!(
            "{}\n  z = {} lies in D_3: {z_in_d3}\n  K_2 G_3 = {{{}}}",
            details(&report),
            g.name(z),
            k2g3.names(&g).join(", ")
        )
    });
    let code = verdict(&report);
    Ok(if code == 0 && !(z_in_d3 && !k2g3.contains(z)) { 1 } else { code })
}

fn run(cli: Cli) -> Result<u8> {
    let json = cli.json;
    let caps = if cli.slow_tier { Caps { order: DEFAULT_ORDER_CAP, ..Caps::default() } } else { Caps::default() };
    match cli.command {
        Command::Group { command: GroupCommand::Show { spec } } => show_group(json, &spec),
        Command::Dim3(args) => {
            let l = args.group.load()?;
            let series = l.series(&args.nseries)?;
            let ring = concrete(&args.ring)?;
            let opts = Dim3Options { reduction_check: args.reduction_check };
            let r = verify_dim3(l.at(), &l.k, &series, &ring, caps, opts);
            print(json, &r, || details(&r));
            Ok(verdict(&r))
        }
        Command::Fox(args) => {
            let l = args.group.load()?;
            let h = Subgroup::generated(&l.g, &l.g.parse_elements(&args.h)?);
            let ring = concrete(&args.ring)?;
            let r = verify_fox(l.at(), &h, &l.k, args.n, &ring, caps);
            print(json, &r, || details(&r));
            Ok(verdict(&r))
        }
        Command::Homology { command } => match command {
            HomologyCommand::WedgeKernel { a, sub } => {
                let a = abelian(&a)?;
                let gens =
                    sub.split(';').filter(|t| !t.trim().is_empty()).map(parse_list).collect::<Result<Vec<_>>>()?;
                let b = AbSubgroup::from_gens(&a, &gens)?;
                let r = check_wedge_kernel(&a, &b, DEFAULT_ENUMERATION_CAP)?;
                print(json, &r, || {
                    format!("A = {a}: identity holds: {} ({:?} vs {:?})", r.holds, r.lhs_order, r.rhs_order)
                });
                Ok(if r.holds { 0 } else { 1 })
            }
            HomologyCommand::Tau3Kernel { a, m } => {
                let a = abelian(&a)?;
                let r = check_tau3_kernel(&a, m, DEFAULT_ENUMERATION_CAP)?;
                print(json, &r, || format!("A = {a}, m = {m}: kernel matches: {} (order {:?})", r.holds, r.lhs_order));
                Ok(if r.holds { 0 } else { 1 })
            }
            HomologyCommand::ExactSequence { group, nseries } => {
                let l = group.load()?;
                let r = verify_exact_sequence(l.at(), &l.k, &l.series(&nseries)?, caps);
                print(json, &r, || details(&r));
                Ok(verdict(&r))
            }
            HomologyCommand::PolynomialSequence { group, nseries, ring, n } => {
                let l = group.load()?;
                let ring = concrete(&ring)?;
                let r = verify_polynomial_sequence(l.at(), &l.k, &l.series(&nseries)?, n, &ring, caps);
                print(json, &r, || details(&r));
                Ok(verdict(&r))
            }
        },
        Command::Counterexample { p, r, s } => counterexample(json, caps, p, r, s),
        Command::Corpus { config, jobs } => {
            let text =
                std::fs::read_to_string(&config).map_err(|e| Error::Parse(format!("{}: {e}", config.display())))?;
            let mut cfg = CorpusConfig::from_json(&text)?;
            if let Some(j) = jobs {
                cfg.jobs = j;
            }
            if cli.slow_tier {
                cfg.caps.order = cfg.caps.order.max(DEFAULT_ORDER_CAP);
            }
            let agg = run_corpus(&cfg)?;
            print(json, &agg, || {
                let mut out: Vec<String> = agg.reports.iter().map(|r| r.to_string()).collect();
                out.push(format!(
                    "{} cases: {} mismatches, {} errors, {} exceed K_2 N_3",
                    agg.total, agg.mismatches, agg.errors, agg.counterexamples
                ));
                out.join("\n")
            });
            Ok(agg.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

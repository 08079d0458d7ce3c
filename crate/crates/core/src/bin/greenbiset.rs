use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use greenbiset::biset::{burnside_units, table_of_marks};
use greenbiset::category::EndAlgebra;
use greenbiset::green::{Burnside, MatrixFunctor};
use greenbiset::group::{builtin_catalog, subgroup_classes, Catalog, FiniteGroup};
use greenbiset::scalar::Ring;
use greenbiset::star::{
    make_star_burnside, make_star_matrix, orthogonal_automorphisms, orthogonal_units,
    orthogonal_units_burnside,
};
use greenbiset::verify::{self, Fault, Suite, VerifyConfig, DEFAULT_WINDOW};
use greenbiset::{Error, Result};

#[derive(Parser, Debug)]
#[command(name = "greenbiset", version, about = "Exact biset calculus over small finite groups")]
struct Cli {
    /// JSON catalog merged over the builtin groups.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    /// Comma-separated group names.
    #[arg(long, global = true, value_delimiter = ',')]
    window: Option<Vec<String>>,
    #[arg(long, global = true, value_enum, default_value_t = RingArg::Int)]
    ring: RingArg,
    /// Coordinate box for orthogonal searches.
    #[arg(long, global = true, default_value_t = 2)]
    bound: u32,
    /// Largest group order in the four-factor biset identities.
    #[arg(long, global = true, default_value_t = 3)]
    max_order: usize,
    /// Largest |H×G| for hom-sets in category-level checks.
    #[arg(long, global = true, default_value_t = 4)]
    hom_order: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write results into this directory instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum RingArg {
    Int,
    Rat,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FaultArg {
    CorruptStar,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum OrthKind {
    Units,
    Auts,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List catalog groups with orders and subgroup-class counts.
    Groups {
        #[arg(long)]
        group: Option<String>,
    },
    /// Table of marks as CSV.
    Marks {
        #[arg(long)]
        group: String,
    },
    /// Composition table of End(G) in the associated category.
    RingTable {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "B")]
        functor: String,
    },
    /// Units of the Burnside ring.
    Units {
        #[arg(long)]
        group: String,
    },
    /// Orthogonal units or automorphisms.
    Orth {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "B")]
        functor: String,
        #[arg(long, value_enum, default_value_t = OrthKind::Auts)]
        kind: OrthKind,
    },
    /// Run verification suites.
    Verify {
        /// biset-identities, green-axioms, category, star, orthogonal or all.
        suite: String,
        #[arg(long, default_value_t = 24)]
        samples: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

/// `B` or `Mn(B)`.
#[derive(Copy, Clone, Debug)]
enum FunctorSpec {
    Burnside,
    Matrix(usize),
}

fn parse_functor(s: &str) -> Result<FunctorSpec> {
    if s == "B" {
        return Ok(FunctorSpec::Burnside);
    }
    s.strip_prefix('M')
        .and_then(|r| r.strip_suffix("(B)"))
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .map(FunctorSpec::Matrix)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown functor `{s}` (expected B or Mn(B))")))
}

enum Failure {
    Verification,
    Usage(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn load_catalog(cli: &Cli) -> Result<Catalog> {
    match &cli.catalog {
        Some(p) => Catalog::load(p),
        None => Ok(builtin_catalog().clone()),
    }
}

fn ring(cli: &Cli) -> Ring {
    match cli.ring {
        RingArg::Int => Ring::Integers,
        RingArg::Rat => Ring::Rationals,
    }
}

fn emit(cli: &Cli, file: &str, text: &str) -> Result<()> {
    match &cli.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            std::fs::write(Path::new(dir).join(file), text)?;
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(cli: &Cli, file: &str, v: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(v)?;
    text.push('\n');
    emit(cli, file, &text)
}

fn run(cli: &Cli) -> std::result::Result<(), Failure> {
    if cli.bound == 0 {
        return Err(Error::InvalidArgument("--bound must be at least 1".into()).into());
    }
    let cat = load_catalog(cli)?;
    let ring = ring(cli);
    match &cli.cmd {
        Cmd::Groups { group } => cmd_groups(cli, &cat, group.as_deref())?,
        Cmd::Marks { group } => cmd_marks(cli, &cat.require(group)?)?,
        Cmd::RingTable { group, functor } => {
            let g = cat.require(group)?;
            let v = match parse_functor(functor)? {
                FunctorSpec::Burnside => EndAlgebra::new(&Burnside, &g, ring)?.to_json(),
                FunctorSpec::Matrix(n) => EndAlgebra::new(&MatrixFunctor::new(Burnside, n)?, &g, ring)?.to_json(),
            };
            emit_json(cli, &format!("ring-table-{}-{}.json", functor, g.name()), &v)?;
        }
        Cmd::Units { group } => {
            let g = cat.require(group)?;
            let units: Vec<Value> = burnside_units(&g)?.iter().map(|u| u.to_json()).collect();
            emit_json(cli, &format!("units-{}.json", g.name()), &json!({ "group": g.name(), "units": units }))?;
        }
        Cmd::Orth { group, functor, kind } => {
            let g = cat.require(group)?;
            let v = cmd_orth(&g, parse_functor(functor)?, *kind, cli.bound, ring)?;
            let kind = match kind {
                OrthKind::Units => "units",
                OrthKind::Auts => "auts",
            };
            emit_json(cli, &format!("orth-{kind}-{functor}-{}.json", g.name()), &v)?;
        }
        Cmd::Verify { suite, samples, inject_fault } => {
            let suites = Suite::parse_selection(suite)?;
            let names: Vec<String> = match &cli.window {
                Some(w) => w.clone(),
                None => DEFAULT_WINDOW.iter().map(|s| s.to_string()).collect(),
            };
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let mut cfg = VerifyConfig::with_catalog(&cat, &names)?;
            cfg.ring = ring;
            cfg.bound = cli.bound;
            cfg.max_order = cli.max_order;
            cfg.hom_order = cli.hom_order;
            cfg.seed = cli.seed;
            cfg.samples = *samples;
            cfg.fault = inject_fault.map(|f| match f {
                FaultArg::CorruptStar => Fault::CorruptStar,
            });
            let report = verify::run(&suites, &cfg);
            eprint!("{}", report.summary());
            emit_json(cli, &format!("verify-{suite}.json"), &report.to_json())?;
            if !report.passed() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn cmd_groups(cli: &Cli, cat: &Catalog, group: Option<&str>) -> Result<()> {
    let mut text = String::new();
    match group {
        None => {
            text.push_str("name,order,subgroup_classes\n");
            for g in cat.groups() {
                text.push_str(&format!("{},{},{}\n", g.name(), g.order(), subgroup_classes(g).len()));
            }
        }
        Some(name) => {
            let g = cat.require(name)?;
            text.push_str(&format!("# {} order {} classes {}\n", g.name(), g.order(), subgroup_classes(&g).len()));
            text.push_str("class,order,conjugates,generators\n");
            for c in subgroup_classes(&g).iter() {
                let gens: Vec<String> = c.generators.iter().map(|&x| g.element_label(x)).collect();
                text.push_str(&format!("{},{},{},{}\n", c.index, c.order(), c.size, gens.join(" ")));
            }
        }
    }
    let file = match group {
        Some(n) => format!("groups-{n}.csv"),
        None => "groups.csv".into(),
    };
    emit(cli, &file, &text)
}

fn class_label(i: usize, order: usize) -> String {
    format!("U{i}[{order}]")
}

fn cmd_marks(cli: &Cli, g: &FiniteGroup) -> Result<()> {
    let classes = subgroup_classes(g);
    let labels: Vec<String> = classes.iter().map(|c| class_label(c.index, c.order())).collect();
    let mut text = format!("basis,{}\n", labels.join(","));
    for (row, label) in table_of_marks(g).iter().zip(&labels) {
        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
        text.push_str(&format!("G/{label},{}\n", cells.join(",")));
    }
    emit(cli, &format!("marks-{}.csv", g.name()), &text)
}

fn cmd_orth(g: &FiniteGroup, f: FunctorSpec, kind: OrthKind, bound: u32, ring: Ring) -> Result<Value> {
    let sb = make_star_burnside()?;
    let report = match (f, kind) {
        (FunctorSpec::Burnside, OrthKind::Units) if ring == Ring::Integers => orthogonal_units_burnside(&sb, g, bound)?,
        (FunctorSpec::Burnside, OrthKind::Units) => orthogonal_units(&sb, g, bound, ring)?,
        (FunctorSpec::Burnside, OrthKind::Auts) => orthogonal_automorphisms(&sb, g, bound, ring)?.0,
        (FunctorSpec::Matrix(n), kind) => {
            let sm = make_star_matrix(&sb, n)?;
            match kind {
                OrthKind::Units => orthogonal_units(&sm, g, bound, ring)?,
                OrthKind::Auts => orthogonal_automorphisms(&sm, g, bound, ring)?.0,
            }
        }
    };
    Ok(report.to_json())
}

//! `wfk`: group data, McKay quivers, generating series and the verification
//! suites from the command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification suite runs but fails.

mod emit;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use wfk_core::charmap::{
    delta_virasoro_check, lehn_sorger_check, verify_cubic, verify_exponentials, verify_heisenberg_transport,
    verify_isometry_and_product, CharMap, DeltaVirasoroOptions,
};
use wfk_core::fock::{builtin_model, verify_fock_heisenberg, verify_virasoro, FrobeniusAlgebra, ModelJson};
use wfk_core::groups::{parse_group_spec, CharacterTableJson, FiniteGroup, Group, GroupJson};
use wfk_core::mckay::{koszul_thom_check, mckay_data};
use wfk_core::series::{
    euler_product, gottsche_poincare, hodge_product, hodge_table,
    wreath_orbifold_euler_check, GSet, PowerSeries,
};
use wfk_core::wreath::{verify_heisenberg, WreathFamily};
use wfk_core::{Budget, VerificationReport};

use emit::{matrix_rows, pretty_table, Format, Output};

#[derive(Parser, Debug)]
#[command(name = "wfk", version, about = "Exact algebra for wreath products, Fock spaces and the McKay correspondence")]
#[command(group(ArgGroup::new("format").args(["json", "csv", "pretty"])))]
struct Cli {
    /// Machine-readable JSON (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Comma-separated rows, where the output is tabular.
    #[arg(long, global = true)]
    csv: bool,
    /// Human-readable text.
    #[arg(long, global = true)]
    pretty: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    emit: Option<PathBuf>,
    /// Element-count ceiling for brute-force steps.
    #[arg(long, global = true, env = "WFK_BUDGET")]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiplication table and character table of a group.
    Group {
        /// Built-in name such as `cyclic:4` or `binary-icosahedral`.
        #[arg(long, conflicts_with = "file")]
        builtin: Option<String>,
        /// Group JSON file.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Conjugacy classes (types) of Γ_n.
    WreathClasses {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
    },
    /// McKay quiver and affine Cartan matrix of a finite subgroup of SL₂(ℂ).
    Mckay {
        #[arg(long)]
        group: String,
    },
    /// Checks on the Fock space of a Frobenius algebra model.
    Fock {
        #[command(subcommand)]
        command: FockCommand,
    },
    /// Generating series.
    Series {
        #[command(subcommand)]
        command: SeriesCommand,
    },
    /// Named verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
enum FockCommand {
    Verify {
        /// Model JSON file, or one of point, p2, p1xp1, abelian, affine.
        #[arg(long)]
        model: String,
        #[arg(long, value_parser = ["heisenberg", "virasoro"])]
        suite: String,
        /// Highest weight of the test vectors.
        #[arg(long, default_value_t = 3)]
        cutoff: usize,
        #[arg(long, default_value_t = 2)]
        modes: i64,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesCommand {
    /// Poincaré polynomials of Hilbert schemes from Betti numbers.
    Gottsche {
        #[arg(long, value_delimiter = ',', required = true)]
        betti: Vec<u64>,
        /// Expand through q^order.
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// ∏ (1 − q^m)^{−e}.
    Euler {
        #[arg(long, allow_negative_numbers = true)]
        e: i64,
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Virtual Hodge polynomials of Hilbert schemes.
    Hodge {
        /// Rows of h^{s,t} separated by `;`, entries by `,`, e.g. `1,0,0;0,1,0;0,0,1`.
        #[arg(long)]
        hodge: String,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// Brute-force orbifold Euler numbers of Γ_n on Sⁿ against the product formula.
    OrbifoldEuler {
        #[arg(long)]
        group: String,
        /// Γ acts trivially on this many points, unless `--action` is given.
        #[arg(long, default_value_t = 1)]
        points: usize,
        /// JSON action table `[[g·x for x] for g]`.
        #[arg(long)]
        action: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        nmax: usize,
    },
}

#[derive(Args, Debug)]
struct GroupArg {
    /// `builtin:<name>[:<param>]` or a group JSON file.
    #[arg(long, default_value = "builtin:trivial")]
    group: String,
}

#[derive(Subcommand, Debug)]
enum Suite {
    /// [p_k(γ), p_l(γ')] on ⊕ R(Γ_m) by induction and restriction.
    Heisenberg {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value_t = 3)]
        modes: usize,
        #[arg(long, default_value_t = 2)]
        levels: usize,
    },
    /// ch intertwines the group-side and Fock-side Heisenberg operators.
    ChHeisenberg {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value_t = 2)]
        modes: usize,
        #[arg(long, default_value_t = 2)]
        levels: usize,
    },
    /// ch is an isometry and a ring map.
    ChIsometry {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// ch of ε_n(γ) and η_n(γ) against the exponential formulas.
    Exponentials {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Transposition-class convolution against the cubic operator on S_n.
    ConvCubic {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Virasoro relations from the convolution operator Δ_1(K_c).
    #[command(visible_alias = "fw-virasoro")]
    DeltaVirasoro {
        #[command(flatten)]
        g: GroupArg,
        /// Class of Γ labelling K_c (default: the last class).
        #[arg(long)]
        class: Option<usize>,
        #[arg(long, default_value_t = 1)]
        modes: i64,
        #[arg(long, default_value_t = 4)]
        levels: usize,
        /// Apply the (−1)^{n+1} twist to even modes.
        #[arg(long)]
        twist: bool,
    },
    /// Filtered convolution on S_n against the boundary operator.
    LehnSorger {
        #[arg(long, default_value_t = 5)]
        n: usize,
        /// Level for the commutativity and associativity checks.
        #[arg(long, default_value_t = 4)]
        assoc: usize,
    },
    /// det(I − M(x)) against η_n(ξ) on every class of Γ_n.
    KoszulThom {
        #[command(flatten)]
        g: GroupArg,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

fn load_group(spec: &str) -> Result<Arc<Group>> {
    let table: FiniteGroup = if spec.starts_with("builtin:") || !Path::new(spec).exists() {
        parse_group_spec(spec)?
    } else {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        let json: GroupJson = serde_json::from_str(&text).with_context(|| format!("parsing {spec}"))?;
        json.into_group()?
    };
    Ok(Group::new(table))
}

fn load_model(spec: &str) -> Result<FrobeniusAlgebra> {
    if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
        let json: ModelJson = serde_json::from_str(&text).with_context(|| format!("parsing {spec}"))?;
        Ok(json.into_algebra()?)
    } else {
        Ok(builtin_model(spec)?)
    }
}

fn group_output(g: &Arc<Group>) -> Result<Output> {
    let t = g.character_table()?;
    let table = CharacterTableJson::new(g, t);
    let value = serde_json::json!({
        "group": GroupJson::from_group(g.table()),
        "character_table": table,
    });
    let mut rows = vec![std::iter::once("class".to_string())
        .chain((0..t.len()).map(|i| format!("chi{i}")))
        .collect::<Vec<_>>()];
    for c in 0..g.num_classes() {
        let mut r = vec![c.to_string()];
        r.extend(t.irreducibles.iter().map(|chi| chi[c].to_string()));
        rows.push(r);
    }
    let mut pretty = format!("order {}, {} classes\n", g.order(), g.num_classes());
    let mut sized = rows.clone();
    sized[0].insert(1, "size".into());
    for (c, r) in sized.iter_mut().skip(1).enumerate() {
        r.insert(1, g.classes().class_sizes[c].to_string());
    }
    pretty += &pretty_table(&sized);
    Output::data(&value, Some(rows), pretty)
}

fn series_output(s: &PowerSeries) -> Result<Output> {
    let mut rows = vec![["q", "t", "x", "y", "coefficient"].map(String::from).to_vec()];
    for (e, c) in s.terms() {
        let mut r: Vec<String> = e.iter().map(ToString::to_string).collect();
        r.push(c.to_string());
        rows.push(r);
    }
    let pretty = match s.q_coefficients() {
        Some(c) => c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",") + "\n",
        None => (0..s.order())
            .map(|n| format!("q^{n}: {}\n", poly(&s.q_coefficient(n))))
            .collect(),
    };
    Output::data(&s.to_json(), Some(rows), pretty)
}

/// The q⁰ coefficient polynomial without the truncation marker.
fn poly(s: &PowerSeries) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let text = s.to_string();
    text.trim_end_matches(&format!(" + O(q^{})", s.order())).to_string()
}

fn parse_hodge(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| x.trim().parse::<i64>().with_context(|| format!("bad Hodge number '{x}'")))
                .collect()
        })
        .collect()
}

fn run(cli: Cli) -> Result<Output> {
    let budget = cli.budget.map(Budget).unwrap_or_default();
    match cli.command {
        Command::Group { builtin, file } => {
            let spec = match (builtin, file) {
                (Some(b), None) => b,
                (None, Some(f)) => f.to_string_lossy().into_owned(),
                _ => bail!("give exactly one of --builtin or --file"),
            };
            group_output(&load_group(&spec)?)
        }
        Command::WreathClasses { group, n } => {
            let g = load_group(&group)?;
            let fam = WreathFamily::new(&g, budget);
            let lvl = fam.level(n);
            let types: Vec<_> = lvl.types().iter().map(|t| t.to_json()).collect();
            let mut rows = vec![vec!["index".to_string(), "type".into(), "centralizer_order".into()]];
            let z = &g.classes().centralizer_orders;
            for (i, t) in lvl.types().iter().enumerate() {
                rows.push(vec![i.to_string(), t.to_string(), t.centralizer_order(z).to_string()]);
            }
            let pretty = pretty_table(&rows);
            Output::data(&types, Some(rows), pretty)
        }
        Command::Mckay { group } => {
            let g = load_group(&group)?;
            let data = mckay_data(&g)?;
            let cartan = data.to_json()?;
            let pretty = format!(
                "type {}\nmarks {:?}\n{}",
                cartan.kind,
                cartan.marks,
                pretty_table(&matrix_rows(&cartan.matrix))
            );
            Output::data(&cartan, Some(matrix_rows(&cartan.matrix)), pretty)
        }
        Command::Fock {
            command: FockCommand::Verify { model, suite, cutoff, modes },
        } => {
            let a = load_model(&model)?;
            let r = match suite.as_str() {
                "heisenberg" => verify_fock_heisenberg(&a, modes, cutoff)?,
                _ => verify_virasoro(&a, modes, cutoff)?,
            };
            Output::report(&r)
        }
        Command::Series { command } => match command {
            SeriesCommand::Gottsche { betti, order } => {
                let b: [u64; 5] = betti.try_into().map_err(|_| anyhow::anyhow!("need five Betti numbers"))?;
                series_output(&gottsche_poincare(b, order + 1))
            }
            SeriesCommand::Euler { e, order } => series_output(&euler_product(e, order + 1)),
            SeriesCommand::Hodge { hodge, order } => {
                series_output(&hodge_product(&hodge_table(&parse_hodge(&hodge)?), order + 1))
            }
            SeriesCommand::OrbifoldEuler { group, points, action, nmax } => {
                let g = load_group(&group)?;
                let s = match action {
                    None => GSet::trivial(&g, points),
                    Some(path) => {
                        let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                        GSet::new(&g, serde_json::from_str(&text)?)?
                    }
                };
                let fam = WreathFamily::new(&g, budget);
                Output::report(&wreath_orbifold_euler_check(&fam, &s, nmax)?)
            }
        },
        Command::Verify { suite } => {
            let r = match suite {
                Suite::Heisenberg { g, modes, levels } => {
                    verify_heisenberg(&WreathFamily::new(&load_group(&g.group)?, budget), modes, levels)?
                }
                Suite::ChHeisenberg { g, modes, levels } => {
                    verify_heisenberg_transport(&CharMap::new(&load_group(&g.group)?, budget), modes, levels)?
                }
                Suite::ChIsometry { g, n } => {
                    verify_isometry_and_product(&CharMap::new(&load_group(&g.group)?, budget), n)?
                }
                Suite::Exponentials { g, n } => verify_exponentials(&CharMap::new(&load_group(&g.group)?, budget), n)?,
                Suite::ConvCubic { n } => verify_cubic(n, budget)?,
                Suite::DeltaVirasoro { g, class, modes, levels, twist } => {
                    let base = load_group(&g.group)?;
                    let class = class.unwrap_or(base.num_classes() - 1);
                    if class >= base.num_classes() {
                        bail!("class {class} out of range: the group has {} classes", base.num_classes());
                    }
                    let opts = DeltaVirasoroOptions { class, modes, levels, sign_twist: twist };
                    delta_virasoro_check(&WreathFamily::new(&base, budget), opts)?
                }
                Suite::LehnSorger { n, assoc } => lehn_sorger_check(n, assoc, budget)?,
                Suite::KoszulThom { g, n } => {
                    let base = load_group(&g.group)?;
                    let mut r = VerificationReport::new("koszul-thom");
                    for k in 1..=n {
                        r.extend(koszul_thom_check(&base, k, budget)?);
                    }
                    r
                }
            };
            Output::report(&r)
        }
    }
}

fn diagnostic(err: &anyhow::Error) -> String {
    let kind = match err.downcast_ref::<wfk_core::Error>() {
        Some(e) => {
            let dbg = format!("{e:?}");
            dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
        }
        None => "InvalidInput".to_string(),
    };
    let chain: Vec<String> = err.chain().map(ToString::to_string).collect();
    serde_json::json!({ "error": kind, "message": chain.join(": ") }).to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = if cli.csv {
        Format::Csv
    } else if cli.pretty {
        Format::Pretty
    } else {
        Format::Json
    };
    let emit = cli.emit.clone();
    let out = match run(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("{}", diagnostic(&e));
            return ExitCode::from(1);
        }
    };
    if let Err(e) = out.write(format, emit.as_deref()) {
        eprintln!("{}", diagnostic(&e));
        return ExitCode::from(1);
    }
    match out.pass {
        Some(false) => ExitCode::from(2),
        _ => ExitCode::SUCCESS,
    }
}

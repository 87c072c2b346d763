//! `liejordan`: command-line front end for the rank tables, center
//! computations, Jordan bounds and finite-group Jordan constants.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use liejordan_core::bounds::{
    family_argument, BoundError, Evaluator, FamilyOfGroups, GroupDims, DEFAULT_FACTORIAL_LIMIT,
};
use liejordan_core::center::{center_classes, center_order, pair, WeightSet};
use liejordan_core::finitegroup::{FiniteGroup, GroupError, GroupLimits};
use liejordan_core::minfaithful::{rdim, rdim_table, upper_bound, RdimError};
use liejordan_core::rootdata::{
    Budget, DominantWeight, Family, RootDataError, RootDatum, SimpleType,
};
use liejordan_core::CenterError;
use num_traits::Zero;
use serde_json::json;

use render::{big_text, weights_text, Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "liejordan",
    version,
    about = "Minimal faithful dimensions, Jordan bounds and finite-group Jordan constants"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal dimension of a faithful representation of a simply connected simple group.
    Rdim {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
    },
    /// rdim for every simple type up to a rank, with witnesses.
    Table {
        #[arg(long)]
        max_rank: usize,
    },
    /// Dimension of the irreducible representation with a given highest weight.
    Dim {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
        /// Coordinates in the fundamental weights, e.g. `1,0,2`.
        #[arg(long)]
        weight: DominantWeight,
    },
    /// Center of the simply connected group as classes of coweights mod the coroot lattice.
    Center {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
        /// Also report the pairing of this weight with every class.
        #[arg(long)]
        weight: Option<DominantWeight>,
    },
    /// Whether a sum of irreducibles is faithful.
    Faithful {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        rank: usize,
        /// Highest weights separated by `;`, coordinates by `,`, e.g. "1,0,0;0,0,1".
        #[arg(long)]
        weights: String,
    },
    /// Jordan-constant bound for a family of groups of dimension n.
    Bound {
        #[arg(long, value_parser = parse_family_of_groups)]
        family_of_groups: FamilyOfGroups,
        #[arg(long)]
        n: u64,
        /// Component bound b (lie and algebraic only).
        #[arg(long)]
        components: Option<u64>,
        /// Largest m for which J(m) = (m+1)! is materialised.
        #[arg(long, default_value_t = DEFAULT_FACTORIAL_LIMIT)]
        factorial_limit: u64,
    },
    /// Jordan constant of an explicit finite group read from a file.
    JordanFinite {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = GroupLimits::default().max_order)]
        max_order: usize,
        #[arg(long, default_value_t = GroupLimits::default().max_lattice_order)]
        max_lattice_order: usize,
    },
}

fn parse_family_of_groups(s: &str) -> Result<FamilyOfGroups, String> {
    serde_json::from_value(serde_json::Value::String(s.to_string())).map_err(|_| {
        "expected one of lie, lie-connected, algebraic, compact-complex, hyperbolic, hyperbolic-stabilizer, riemannian"
            .to_string()
    })
}

/// Failure of a command, split by exit code.
#[derive(Debug)]
enum CliError {
    Input(String),
    Guard(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Guard(m) => m,
        }
    }
}

impl From<RootDataError> for CliError {
    fn from(e: RootDataError) -> Self {
        match e {
            RootDataError::CapOverBudget { .. } | RootDataError::RankOverBudget { .. } => {
                CliError::Guard(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CenterError> for CliError {
    fn from(e: CenterError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<RdimError> for CliError {
    fn from(e: RdimError) -> Self {
        match e {
            RdimError::RootData(e) => e.into(),
            RdimError::Center(e) => e.into(),
            e @ RdimError::NoCover { .. } => CliError::Guard(e.to_string()),
        }
    }
}

impl From<BoundError> for CliError {
    fn from(e: BoundError) -> Self {
        CliError::Guard(e.to_string())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        if e.is_resource_guard() {
            CliError::Guard(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

fn datum(family: Family, rank: usize, budget: &Budget) -> Result<RootDatum, CliError> {
    let ty = SimpleType::new(family, rank)?;
    budget.check_rank(rank)?;
    Ok(RootDatum::new(ty))
}

fn parse_weights(s: &str) -> Result<Vec<DominantWeight>, CliError> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.parse::<DominantWeight>().map_err(CliError::Input))
        .collect()
}

fn check_rank_of(w: &DominantWeight, rank: usize) -> Result<(), CliError> {
    if w.rank() != rank {
        return Err(RootDataError::RankMismatch {
            expected: rank,
            got: w.rank(),
        }
        .into());
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let budget = Budget::from_env().map_err(CliError::Input)?;
    match cli.command {
        Command::Rdim { family, rank } => {
            let d = datum(family, rank, &budget)?;
            let r = rdim(&d, &budget)?;
            let witness = weights_text(r.witness.weights());
            let dims: Vec<String> = r.per_weight_dims.iter().map(u64::to_string).collect();
            Ok(Report {
                text: r.total_dim.to_string(),
                json: json!({
                    "type": r.ty.to_string(),
                    "rdim": r.total_dim,
                    "witness": r.witness,
                    "per_weight_dims": r.per_weight_dims,
                    "upper_bound": upper_bound(rank),
                }),
                csv: vec![
                    vec![
                        "type".into(),
                        "rdim".into(),
                        "witness".into(),
                        "per_weight_dims".into(),
                        "upper_bound".into(),
                    ],
                    vec![
                        r.ty.to_string(),
                        r.total_dim.to_string(),
                        witness,
                        dims.join(";"),
                        upper_bound(rank).to_string(),
                    ],
                ],
            })
        }
        Command::Table { max_rank } => {
            let rows = rdim_table(max_rank, &budget)?;
            let header = [
                "type",
                "rank",
                "rdim",
                "upper_bound",
                "per_weight_dims",
                "witness",
            ];
            let mut table: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
            for r in &rows {
                let dims: Vec<String> = r.per_weight_dims.iter().map(u64::to_string).collect();
                table.push(vec![
                    format!("{}{}", r.family, r.rank),
                    r.rank.to_string(),
                    r.rdim.to_string(),
                    r.upper_bound.to_string(),
                    dims.join(";"),
                    weights_text(r.witness.weights()),
                ]);
            }
            Ok(Report {
                text: render::aligned(&table),
                json: json!(rows
                    .iter()
                    .map(|r| json!({
                        "type": format!("{}{}", r.family, r.rank),
                        "family": r.family,
                        "rank": r.rank,
                        "rdim": r.rdim,
                        "upper_bound": r.upper_bound,
                        "per_weight_dims": r.per_weight_dims,
                        "witness": r.witness,
                    }))
                    .collect::<Vec<_>>()),
                csv: table,
            })
        }
        Command::Dim {
            family,
            rank,
            weight,
        } => {
            let d = datum(family, rank, &budget)?;
            check_rank_of(&weight, rank)?;
            let dim = d.weyl_dim(&weight)?;
            let ty = d.simple_type().to_string();
            Ok(Report {
                text: big_text(&dim),
                json: json!({"type": ty, "weight": weight, "dim": dim.to_string()}),
                csv: vec![
                    vec!["type".into(), "weight".into(), "dim".into()],
                    vec![ty, weight.to_string(), dim.to_string()],
                ],
            })
        }
        Command::Center {
            family,
            rank,
            weight,
        } => {
            let d = datum(family, rank, &budget)?;
            if let Some(w) = &weight {
                check_rank_of(w, rank)?;
            }
            let ty = d.simple_type().to_string();
            let order = center_order(&d);
            let classes = center_classes(&d);
            let mut text = vec![format!("{ty}: center of order {order}")];
            let mut rows = vec![vec![
                "type".into(),
                "class".into(),
                "order".into(),
                "pairing".into(),
            ]];
            let mut entries = Vec::new();
            for c in &classes {
                let pairing = weight.as_ref().map(|w| pair(w, c)).transpose()?;
                let ptext = pairing
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default();
                text.push(match &pairing {
                    Some(p) => format!("{c}  order {}  pairing {p}", c.order()),
                    None => format!("{c}  order {}", c.order()),
                });
                rows.push(vec![
                    ty.clone(),
                    c.to_string(),
                    c.order().to_string(),
                    ptext.clone(),
                ]);
                let mut e = json!({"class": c, "order": c.order().to_string()});
                if pairing.is_some() {
                    e["pairing"] = json!(ptext);
                }
                entries.push(e);
            }
            let mut j = json!({"type": ty, "order": order, "classes": entries});
            if let Some(w) = &weight {
                j["weight"] = json!(w);
            }
            Ok(Report {
                text: text.join("\n"),
                json: j,
                csv: rows,
            })
        }
        Command::Faithful {
            family,
            rank,
            weights,
        } => {
            let d = datum(family, rank, &budget)?;
            let ws = parse_weights(&weights)?;
            for w in &ws {
                check_rank_of(w, rank)?;
            }
            let ws = WeightSet::new(ws)?;
            let classes = center_classes(&d);
            let mut undetected = Vec::new();
            for c in &classes {
                let mut seen = false;
                for w in ws.weights() {
                    if !pair(w, c)?.is_zero() {
                        seen = true;
                        break;
                    }
                }
                if !seen {
                    undetected.push(c.clone());
                }
            }
            let faithful = undetected.is_empty();
            debug_assert_eq!(faithful, liejordan_core::center::is_faithful(&d, &ws)?);
            let ty = d.simple_type().to_string();
            let mut text = faithful.to_string();
            for c in &undetected {
                text.push_str(&format!("\nundetected center class {c}"));
            }
            Ok(Report {
                text,
                json: json!({"type": ty, "weights": ws, "faithful": faithful, "undetected": undetected}),
                csv: vec![
                    vec!["type".into(), "weights".into(), "faithful".into()],
                    vec![ty, weights_text(ws.weights()), faithful.to_string()],
                ],
            })
        }
        Command::Bound {
            family_of_groups,
            n,
            components,
            factorial_limit,
        } => {
            if components.is_some() && !family_of_groups.uses_components() {
                return Err(CliError::Input(
                    "--components only applies to the lie and algebraic families".into(),
                ));
            }
            let b = components.unwrap_or(1);
            if b == 0 {
                return Err(CliError::Input("--components must be at least 1".into()));
            }
            let ev = Evaluator::new(factorial_limit);
            let expr = ev.bound(family_of_groups, GroupDims::new(n, b))?;
            // the bound evaluated, so the argument is small enough to print
            let argument = family_argument(family_of_groups, n);
            let name = serde_json::to_value(family_of_groups).unwrap();
            let name = name.as_str().unwrap().to_string();
            let value_text = match expr.as_exact() {
                Some(v) => big_text(v),
                None => expr.to_string(),
            };
            let mut j = json!({
                "family_of_groups": name,
                "n": n,
                "argument": argument.as_ref().map(ToString::to_string),
                "bound": expr,
                "exact": !expr.is_symbolic(),
                "conventions": {
                    "J(0)": "1",
                    "exact_range": "J(m) = (m+1)! for m >= 71 or m in {63, 65, 67, 69}; symbolic J(m) otherwise",
                },
            });
            if family_of_groups.uses_components() {
                j["components"] = json!(b);
            }
            let csv_value = match expr.as_exact() {
                Some(v) => v.to_string(),
                None => expr.to_string(),
            };
            Ok(Report {
                text: value_text,
                json: j,
                csv: vec![
                    vec![
                        "family_of_groups".into(),
                        "n".into(),
                        "components".into(),
                        "exact".into(),
                        "bound".into(),
                    ],
                    vec![
                        name,
                        n.to_string(),
                        b.to_string(),
                        (!expr.is_symbolic()).to_string(),
                        csv_value,
                    ],
                ],
            })
        }
        Command::JordanFinite {
            input,
            max_order,
            max_lattice_order,
        } => {
            let limits = GroupLimits {
                max_order,
                max_lattice_order,
            };
            let text = std::fs::read_to_string(&input)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", input.display())))?;
            let g = FiniteGroup::parse(&text, &limits)?;
            let r = g.jordan_constant(&limits)?;
            Ok(Report {
                text: format!(
                    "order {}\njordan_constant {}\nwitness_subgroup {}\nb {}",
                    r.order, r.jordan_constant, r.witness, r.b
                ),
                json: serde_json::to_value(&r).unwrap(),
                csv: vec![
                    vec![
                        "order".into(),
                        "jordan_constant".into(),
                        "witness_subgroup".into(),
                        "b".into(),
                    ],
                    vec![
                        r.order.to_string(),
                        r.jordan_constant.to_string(),
                        r.witness
                            .elements()
                            .iter()
                            .map(u32::to_string)
                            .collect::<Vec<_>>()
                            .join(";"),
                        r.b.to_string(),
                    ],
                ],
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => match report.render(format) {
            Ok(out) => {
                println!("{out}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

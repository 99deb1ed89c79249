use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gtsh::{
    aff_mul, arith_lower_bound, canonicalize, compose, enumerate_brute, enumerate_closed,
    fiber_report, ftilde_membership, generator_closure, gn_order, index_pb3, inverse,
    ls_verify, ls_witness, psi_map, reduce_shadow, rho, shadow_to_trunc, structure_of, AffTrunc,
    Shadow, DEFAULT_BOUND,
};

#[derive(Parser)]
#[command(name = "gtsh", version, about = "GT-shadow computations over dihedral targets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (CSV is only meaningful for `table` and `fibers`)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Enumeration bound on moduli
    #[arg(long, global = true, env = "GTSH_BOUND", default_value_t = DEFAULT_BOUND)]
    bound: u32,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct Coords {
    /// First shadow as `m,k`
    #[arg(long, value_parser = parse_pair)]
    a: (i64, i64),
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate all shadows with target K^(n)
    Enumerate {
        #[arg(long)]
        n: u32,
        /// Cross-validate the closed-form list against brute-force search
        #[arg(long)]
        check: bool,
    },
    /// Compose two shadows at the same target
    Compose {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        a: Coords,
        /// Second shadow as `m,k`
        #[arg(long, value_parser = parse_pair)]
        b: (i64, i64),
    },
    /// Invert a shadow
    Invert {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        a: Coords,
    },
    /// Full Cayley table of GT(K^(n))
    Table {
        #[arg(long)]
        n: u32,
    },
    /// Reduce a shadow from level q down to level n
    Reduce {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        a: Coords,
    },
    /// Fiber sizes of the reduction from level q to level n
    Fibers {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
    },
    /// Witness words for the two coset conditions (requires 3 | n)
    LsWitness {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        k: i64,
    },
    /// Structure decomposition of GT(K^(n))
    Structure {
        #[arg(long)]
        n: u32,
    },
    /// Index of K^(n) in PB_3
    Index {
        #[arg(long)]
        n: u32,
    },
    /// Arithmetic lower bound next to the full group order
    Bound {
        #[arg(long)]
        n: u32,
    },
    /// Closure/membership/kernel agreement at a 2-adic level
    Profinite {
        #[arg(long)]
        alpha: u32,
    },
    /// Run every invariant applicable at level n
    VerifyAll {
        #[arg(long)]
        n: u32,
    },
}

fn parse_pair(s: &str) -> Result<(i64, i64), String> {
    let (m, k) = s
        .split_once(',')
        .ok_or_else(|| format!("expected `m,k`, got `{s}`"))?;
    Ok((
        m.trim().parse().map_err(|e| format!("bad m: {e}"))?,
        k.trim().parse().map_err(|e| format!("bad k: {e}"))?,
    ))
}

/// Errors from bad coordinates or moduli are usage errors: exit code 2.
struct UsageError(String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// false = verification failure: exit code 1.
type Report = Result<(serde_json::Value, bool), UsageError>;

fn shadow_at(n: u32, (m, k): (i64, i64)) -> Result<Shadow, UsageError> {
    Ok(Shadow::new(n, m, k)?)
}

fn run(cli: &Cli) -> Report {
    match &cli.command {
        Command::Enumerate { n, check } => {
            let closed = enumerate_closed(*n)?;
            let mut out = json!({
                "n": canonicalize(*n)?,
                "count": closed.len(),
                "shadows": closed.iter().map(Shadow::to_json).collect::<Vec<_>>(),
            });
            let mut ok = true;
            if *check {
                let brute = enumerate_brute(*n, cli.bound)?;
                ok = brute == closed;
                out["brute_equals_closed"] = json!(ok);
            }
            Ok((out, ok))
        }
        Command::Compose { n, a, b } => {
            let s = compose(&shadow_at(*n, a.a)?, &shadow_at(*n, *b)?)?;
            Ok((s.to_json(), true))
        }
        Command::Invert { n, a } => Ok((inverse(&shadow_at(*n, a.a)?).to_json(), true)),
        Command::Table { n } => {
            let all = enumerate_closed(*n)?;
            let rows: Vec<Vec<String>> = all
                .iter()
                .map(|a| {
                    all.iter()
                        .map(|b| compose(a, b).map(|s| s.label()))
                        .collect::<Result<_, _>>()
                })
                .collect::<Result<_, _>>()?;
            let labels: Vec<String> = all.iter().map(Shadow::label).collect();
            Ok((json!({"n": canonicalize(*n)?, "labels": labels, "table": rows}), true))
        }
        Command::Reduce { q, n, a } => {
            let s = reduce_shadow(&shadow_at(*q, a.a)?, *n)?;
            Ok((s.to_json(), true))
        }
        Command::Fibers { q, n } => {
            let report = fiber_report(*q, *n)?;
            let sizes: Vec<usize> = report.values().copied().collect();
            let uniform = sizes.windows(2).all(|w| w[0] == w[1]);
            let fibers: serde_json::Map<String, serde_json::Value> = report
                .iter()
                .map(|(s, c)| (s.label(), json!(c)))
                .collect();
            Ok((
                json!({"q": canonicalize(*q)?, "n": canonicalize(*n)?, "fibers": fibers, "uniform": uniform}),
                uniform && !sizes.is_empty(),
            ))
        }
        Command::LsWitness { n, m, k } => {
            let s = shadow_at(*n, (*m, *k))?;
            let (g, h, case) = ls_witness(&s)?;
            let verified = ls_verify(&s, &g, &h)?;
            Ok((
                json!({
                    "g": g.to_string(),
                    "h": h.to_string(),
                    "case": case.to_string(),
                    "verified": verified,
                }),
                verified,
            ))
        }
        Command::Structure { n } => Ok((structure_of(*n)?.to_json(), true)),
        Command::Index { n } => {
            Ok((json!({"n": canonicalize(*n)?, "index": index_pb3(*n)}), true))
        }
        Command::Bound { n } => {
            let bound = arith_lower_bound(*n)?;
            let order = structure_of(*n)?.order;
            Ok((
                json!({"n": canonicalize(*n)?, "lower_bound": bound, "order": order, "attained": bound == order}),
                bound <= order,
            ))
        }
        Command::Profinite { alpha } => {
            let closure = generator_closure(*alpha, cli.bound)?;
            let mut membership = 0usize;
            let mut kernel_eq = true;
            for k in 0..(1i64 << (alpha - 1)) {
                for u in (1..(1i64 << (alpha + 1))).step_by(2) {
                    let a = AffTrunc::new(*alpha, k, u)?;
                    let member = ftilde_membership(&a);
                    membership += member as usize;
                    kernel_eq &= member == (psi_map(&a) == 0) && member == closure.contains(&a);
                }
            }
            Ok((
                json!({
                    "alpha": alpha,
                    "closure_size": closure.len(),
                    "membership_count": membership,
                    "kernel_equals_membership": kernel_eq,
                }),
                kernel_eq && closure.len() == membership,
            ))
        }
        Command::VerifyAll { n } => verify_all(*n, cli.bound),
    }
}

fn verify_all(n: u32, bound: u32) -> Report {
    let n = canonicalize(n)?;
    let mut checks = serde_json::Map::new();
    let all = enumerate_closed(n)?;

    checks.insert("brute_equals_closed".into(), json!(enumerate_brute(n, bound)? == all));

    let id = Shadow::identity(n)?;
    let mut axioms = true;
    for a in &all {
        axioms &= compose(a, &id)? == *a && compose(a, &inverse(a))? == id;
        for b in &all {
            let ab = compose(a, b)?;
            axioms &= all.contains(&ab);
            if all.len() <= 20 {
                for c in &all {
                    axioms &= compose(&ab, c)? == compose(a, &compose(b, c)?)?;
                }
            }
        }
    }
    checks.insert("group_axioms".into(), json!(axioms));

    let mut rho_hom = true;
    for a in &all {
        for b in &all {
            rho_hom &= rho(&compose(a, b)?) == rho(a).mul(&rho(b))?;
        }
    }
    checks.insert("rho_homomorphism".into(), json!(rho_hom));

    checks.insert(
        "order_matches_structure".into(),
        json!(structure_of(n)?.order == all.len() as u64),
    );
    checks.insert(
        "bound_le_order".into(),
        json!(arith_lower_bound(n)? <= structure_of(n)?.order),
    );
    checks.insert("gn_order".into(), json!(gn_order(n) == index_pb3(n)));

    if n % 3 == 0 {
        let mut ls = true;
        for s in &all {
            let (g, h, _) = ls_witness(s)?;
            ls &= ls_verify(s, &g, &h)?;
        }
        checks.insert("ls_witnesses".into(), json!(ls));
    }

    if n.is_power_of_two() && n >= 4 {
        let alpha = n.trailing_zeros();
        let closure = generator_closure(alpha, bound.max(alpha))?;
        let image: std::collections::BTreeSet<_> =
            all.iter().map(shadow_to_trunc).collect::<Result<_, _>>()?;
        let mut hom = true;
        for a in &all {
            for b in &all {
                hom &= shadow_to_trunc(&compose(a, b)?)?
                    == aff_mul(&shadow_to_trunc(a)?, &shadow_to_trunc(b)?)?;
            }
        }
        checks.insert("trunc_isomorphism".into(), json!(hom && image == closure));
    }

    let ok = checks.values().all(|v| v == &json!(true));
    checks.insert("n".into(), json!(n));
    checks.insert("ok".into(), json!(ok));
    Ok((serde_json::Value::Object(checks), ok))
}

fn emit_csv(value: &serde_json::Value) -> Option<String> {
    // CSV rendering exists for the two tabular reports; everything else
    // stays JSON.
    let obj = value.as_object()?;
    if let (Some(labels), Some(table)) = (obj.get("labels"), obj.get("table")) {
        let labels: Vec<&str> = labels.as_array()?.iter().filter_map(|v| v.as_str()).collect();
        let mut out = format!("*,{}\n", labels.join(","));
        for (l, row) in labels.iter().zip(table.as_array()?) {
            let cells: Vec<&str> = row.as_array()?.iter().filter_map(|v| v.as_str()).collect();
            out.push_str(&format!("{l},{}\n", cells.join(",")));
        }
        return Some(out);
    }
    if let Some(fibers) = obj.get("fibers") {
        let mut out = String::from("shadow,fiber_size\n");
        for (k, v) in fibers.as_object()? {
            out.push_str(&format!("{k},{v}\n"));
        }
        return Some(out);
    }
    None
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, ok)) => {
            let rendered = match cli.format {
                Format::Csv => emit_csv(&report)
                    .map(|s| s.trim_end().to_string())
                    .unwrap_or_else(|| serde_json::to_string_pretty(&report).expect("serializable")),
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable"),
            };
            println!("{rendered}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
